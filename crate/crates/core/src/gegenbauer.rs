//! Orthonormal Gegenbauer (ultraspherical) polynomials on the fiber sphere.
//!
//! Zonal functions on `S^{n-1}` are polynomials in `x = cos θ`, orthogonal
//! under the weight `sin^{n-2} θ dθ`. We normalize against the *probability*
//! measure, so `p_0 ≡ 1` and `⟨p_i, p_j⟩ = δ_ij`. Multiplication by `cos θ`
//! then acts through the symmetric three-term recurrence
//!
//! ```text
//! x p_k = a_k p_{k+1} + a_{k-1} p_{k-1}
//! ```
//!
//! whose coefficients `a_k` are the zonal ladder couplings (up to the `|ξ|`
//! scale) of the flat-model chains in dimension `n ≥ 3`.

use crate::quadrature::GaussLegendre;

/// Off-diagonal Jacobi coefficient `a_k` of the orthonormal chain for the
/// weight `sin^{n-2} θ`:
///
/// ```text
/// a_k = sqrt( (k+1)(k+n-2) / ((2k+n-2)(2k+n)) )
/// ```
///
/// In particular `a_0² = 1/n`, the mean of `cos² θ` on `S^{n-1}`.
pub fn recurrence_coefficient(k: u32, n: u32) -> f64 {
    assert!(n >= 3, "zonal chains exist for base dimension n >= 3");
    let k = k as f64;
    let n = n as f64;
    ((k + 1.0) * (k + n - 2.0) / ((2.0 * k + n - 2.0) * (2.0 * k + n))).sqrt()
}

/// Evaluates the first `count` orthonormal polynomials at `x` via the
/// recurrence `p_{k+1} = (x p_k - a_{k-1} p_{k-1}) / a_k`.
pub fn evaluate_orthonormal(count: usize, n: u32, x: f64) -> Vec<f64> {
    let mut values = Vec::with_capacity(count);
    if count == 0 {
        return values;
    }
    values.push(1.0);
    if count == 1 {
        return values;
    }
    values.push(x / recurrence_coefficient(0, n));
    for k in 1..count - 1 {
        let a_k = recurrence_coefficient(k as u32, n);
        let a_km1 = recurrence_coefficient(k as u32 - 1, n);
        let next = (x * values[k] - a_km1 * values[k - 1]) / a_k;
        values.push(next);
    }
    values
}

/// Gram matrix of the first `count` polynomials under the normalized
/// `sin^{n-2} θ dθ` measure, computed by Gauss–Legendre quadrature in `θ`.
/// Returns the maximum deviation from the identity matrix.
///
/// This is an independent consistency check on [`recurrence_coefficient`]:
/// the closed form is only trusted through it.
pub fn orthonormality_defect(count: usize, n: u32, quadrature_nodes: usize) -> f64 {
    let rule = GaussLegendre::new(quadrature_nodes);
    let weight_mass = rule.integrate(0.0, std::f64::consts::PI, |t| t.sin().powi(n as i32 - 2));
    let mut gram = vec![vec![0.0; count]; count];
    let rule_ref = &rule;
    // accumulate sum over nodes of p_i p_j sin^{n-2}
    let mut accumulate = |i: usize, j: usize| {
        rule_ref.integrate(0.0, std::f64::consts::PI, |t| {
            let p = evaluate_orthonormal(count, n, t.cos());
            p[i] * p[j] * t.sin().powi(n as i32 - 2)
        }) / weight_mass
    };
    let mut defect: f64 = 0.0;
    for i in 0..count {
        for j in 0..=i {
            gram[i][j] = accumulate(i, j);
            let expected = if i == j { 1.0 } else { 0.0 };
            defect = defect.max((gram[i][j] - expected).abs());
        }
    }
    defect
}
