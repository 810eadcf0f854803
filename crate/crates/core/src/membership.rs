//! Deciding whether a Bloch vector describes a physical state.
//!
//! A Hermitian matrix has a real spectrum, so its characteristic polynomial
//!
//! ```text
//! det(x I − ρ) = Σ_j (−1)^j a_j x^{N−j},   a_0 = 1
//! ```
//!
//! has only real roots, and those roots are all nonnegative exactly when
//! every a_i is nonnegative. The coefficients are the elementary symmetric
//! polynomials of the spectrum and are recovered from the power sums
//! C_q = tr ρ^q with Newton's identities, so the decision never touches an
//! eigensolver. [`eigenvalue_oracle`] answers the same question through a
//! Hermitian eigendecomposition and serves as an independent check.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::generators::{GeneratorBasis, StructureConstants};
use crate::linalg::{trace, trace_product};
use crate::statemap::{bloch_to_matrix, BlochVector, DensityCandidate};

/// Default half-width of the boundary band on coefficients and eigenvalues.
pub const DEFAULT_TOL: f64 = 1e-9;

/// Three-way classification of a candidate state.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Decision {
    Inside,
    Boundary,
    Outside,
}

impl Decision {
    pub fn as_str(self) -> &'static str {
        match self {
            Decision::Inside => "INSIDE",
            Decision::Boundary => "BOUNDARY",
            Decision::Outside => "OUTSIDE",
        }
    }

    /// True for INSIDE and BOUNDARY (the closed set).
    pub fn is_member(self) -> bool {
        !matches!(self, Decision::Outside)
    }
}

impl std::fmt::Display for Decision {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Outcome of a membership test.
///
/// `margins` holds a_1..a_N for the coefficient path and the ascending
/// eigenvalues for the eigen path. `failing_index` is the 1-based position
/// of the first margin below −tol.
#[derive(Debug, Clone, PartialEq)]
pub struct MembershipVerdict {
    pub decision: Decision,
    pub margins: Vec<f64>,
    pub failing_index: Option<usize>,
}

impl MembershipVerdict {
    /// Classifies a list of margins against the symmetric band ±tol.
    pub fn classify(margins: Vec<f64>, tol: f64) -> Self {
        let failing_index = margins.iter().position(|&m| m < -tol).map(|p| p + 1);
        let decision = if failing_index.is_some() {
            Decision::Outside
        } else if margins.iter().all(|&m| m > tol) {
            Decision::Inside
        } else {
            Decision::Boundary
        };
        MembershipVerdict {
            decision,
            margins,
            failing_index,
        }
    }

    pub fn min_margin(&self) -> f64 {
        self.margins.iter().copied().fold(f64::INFINITY, f64::min)
    }
}

/// Signed characteristic-polynomial coefficients a_0 = 1, a_1, …, a_N.
#[derive(Debug, Clone, PartialEq)]
pub struct CoefficientVector {
    a: Vec<f64>,
}

impl CoefficientVector {
    /// Builds from a_0..a_N; a_0 is forced to exactly 1.
    pub fn new(mut a: Vec<f64>) -> Self {
        if a.is_empty() {
            a.push(1.0);
        }
        a[0] = 1.0;
        CoefficientVector { a }
    }

    /// Polynomial degree N.
    pub fn degree(&self) -> usize {
        self.a.len() - 1
    }

    pub fn get(&self, i: usize) -> f64 {
        self.a[i]
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.a
    }

    /// a_1..a_N.
    pub fn margins(&self) -> &[f64] {
        &self.a[1..]
    }
}

/// Power sums C_1..C_q of a spectrum.
#[derive(Debug, Clone, PartialEq)]
pub struct MomentVector {
    n: usize,
    c: Vec<f64>,
}

impl MomentVector {
    /// `c[0]` is C_1.
    pub fn new(n: usize, c: Vec<f64>) -> Self {
        MomentVector { n, c }
    }

    /// Power sums of an explicit list of roots, up to q = `qmax`.
    pub fn from_roots(roots: &[f64], qmax: usize) -> Self {
        let c = (1..=qmax)
            .map(|q| roots.iter().map(|x| x.powi(q as i32)).sum())
            .collect();
        MomentVector { n: roots.len(), c }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// C_q for 1-based q.
    pub fn get(&self, q: usize) -> f64 {
        self.c[q - 1]
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.c
    }
}

/// C_q = tr ρ^q for q = 1..=qmax by repeated multiplication.
pub fn moments_trace(rho: &DensityCandidate, qmax: usize) -> MomentVector {
    let m = rho.matrix();
    let mut c = Vec::with_capacity(qmax);
    if qmax >= 1 {
        c.push(trace(m).re);
    }
    let mut power = m.clone();
    for q in 2..=qmax {
        if q == qmax {
            c.push(trace_product(&power, m).re);
        } else {
            power = &power * m;
            c.push(trace(&power).re);
        }
    }
    MomentVector::new(rho.n(), c)
}

fn ensure_same_n(a: usize, b: usize) -> Result<()> {
    if a != b {
        return Err(Error::DimensionMismatch { expected: a, found: b });
    }
    Ok(())
}

/// C_q in terms of |v|², Σ g_ijk v_i v_j v_k and Σ g_ijm g_mkl v_i v_j v_k v_l.
///
/// The f-dependent terms vanish when contracted with the symmetric product
/// of Bloch components and are never evaluated.
pub fn moments_closed_form(v: &BlochVector, sc: &StructureConstants, q: usize) -> Result<f64> {
    ensure_same_n(sc.n(), v.n())?;
    let nf = v.n() as f64;
    let s = v.norm_squared();
    match q {
        2 => Ok(1.0 / nf + 0.5 * s),
        3 => {
            let g3 = sc.g_cubic(v.components());
            Ok(1.0 / (nf * nf) + 1.5 * s / nf + 0.25 * g3)
        }
        4 => {
            let g3 = sc.g_cubic(v.components());
            let g4 = sc.g_quartic(v.components());
            Ok(1.0 / (nf * nf * nf) + 3.0 * s / (nf * nf) + g3 / nf + 0.25 * s * s / nf + 0.125 * g4)
        }
        _ => Err(Error::UnsupportedMoment(q)),
    }
}

/// Newton's identities: k a_k = Σ_{q=1}^{k} (−1)^{q−1} C_q a_{k−q}.
pub fn char_coefficients_newton(moments: &MomentVector) -> Result<CoefficientVector> {
    let n = moments.n();
    if moments.as_slice().len() < n {
        return Err(Error::InsufficientMoments {
            needed: n,
            available: moments.as_slice().len(),
        });
    }
    let mut a = Vec::with_capacity(n + 1);
    a.push(1.0);
    for k in 1..=n {
        let mut acc = 0.0;
        let mut sign = 1.0;
        for q in 1..=k {
            acc += sign * moments.get(q) * a[k - q];
            sign = -sign;
        }
        a.push(acc / k as f64);
    }
    Ok(CoefficientVector::new(a))
}

/// a_1..a_min(N,4) as polynomials in the Bloch components and g.
pub fn char_coefficients_closed_form(
    v: &BlochVector,
    sc: &StructureConstants,
) -> Result<CoefficientVector> {
    ensure_same_n(sc.n(), v.n())?;
    let n = v.n();
    let nf = n as f64;
    let s = v.norm_squared();
    let mut a = vec![1.0, 1.0];
    a.push(((nf - 1.0) / nf - 0.5 * s) / 2.0);
    if n >= 3 {
        let g3 = sc.g_cubic(v.components());
        let a3 = (nf - 1.0) * (nf - 2.0) / (nf * nf) - 1.5 * (nf - 2.0) * s / nf + 0.5 * g3;
        a.push(a3 / 6.0);
        if n >= 4 {
            let g4 = sc.g_quartic(v.components());
            let a4 = (nf - 1.0) * (nf - 2.0) * (nf - 3.0) / (nf * nf * nf)
                - 3.0 * (nf - 2.0) * (nf - 3.0) * s / (nf * nf)
                + 0.75 * (nf - 2.0) * s * s / nf
                + 2.0 * (nf - 3.0) * g3 / nf
                - 0.75 * g4;
            a.push(a4 / 24.0);
        }
    }
    Ok(CoefficientVector::new(a))
}

/// True iff every a_i (i ≥ 1) is at least −tol.
///
/// Only meaningful when the polynomial has all-real roots, which Hermitian
/// input guarantees.
pub fn positivity_from_coefficients(a: &CoefficientVector, tol: f64) -> bool {
    a.margins().iter().all(|&x| x >= -tol)
}

/// Characteristic coefficients of a candidate via trace powers.
pub fn char_coefficients(rho: &DensityCandidate) -> CoefficientVector {
    let moments = moments_trace(rho, rho.n());
    char_coefficients_newton(&moments).expect("moments computed up to N")
}

/// Coefficient-path membership verdict for a candidate matrix.
pub fn coefficient_verdict(rho: &DensityCandidate, tol: f64) -> MembershipVerdict {
    MembershipVerdict::classify(char_coefficients(rho).margins().to_vec(), tol)
}

/// Decides v ∈ B(R^{N²−1}) from the characteristic coefficients of its matrix.
pub fn is_bloch_vector(v: &BlochVector, basis: &GeneratorBasis, tol: f64) -> Result<MembershipVerdict> {
    let rho = bloch_to_matrix(v, basis)?;
    Ok(coefficient_verdict(&rho, tol))
}

/// [`is_bloch_vector`] over many vectors in parallel; output order matches input.
pub fn is_bloch_vector_batch(
    vectors: &[BlochVector],
    basis: &GeneratorBasis,
    tol: f64,
) -> Result<Vec<MembershipVerdict>> {
    vectors.par_iter().map(|v| is_bloch_vector(v, basis, tol)).collect()
}

/// Ascending eigenvalues of a Hermitian candidate.
pub fn spectrum(rho: &DensityCandidate) -> Result<Vec<f64>> {
    let mut ev: Vec<f64> = rho.matrix().clone().symmetric_eigenvalues().iter().copied().collect();
    if ev.iter().any(|x| !x.is_finite()) {
        return Err(Error::Eigensolver("non-finite eigenvalue".into()));
    }
    ev.sort_by(f64::total_cmp);
    Ok(ev)
}

/// Membership verdict from the minimum eigenvalue.
pub fn eigenvalue_oracle(rho: &DensityCandidate, tol: f64) -> Result<MembershipVerdict> {
    Ok(MembershipVerdict::classify(spectrum(rho)?, tol))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{build_generator_basis, compute_structure_constants};
    use crate::statemap::purity;
    use approx::assert_abs_diff_eq;

    fn rt3() -> f64 {
        3f64.sqrt()
    }

    #[test]
    fn trace_moments_examples() {
        let m = moments_trace(&DensityCandidate::diagonal(&[0.5, 0.5]).unwrap(), 2);
        assert_eq!(m.as_slice(), &[1.0, 0.5]);
        let m = moments_trace(&DensityCandidate::diagonal(&[1.0, 0.0, 0.0]).unwrap(), 3);
        assert_eq!(m.as_slice(), &[1.0, 1.0, 1.0]);
        let third = 1.0 / 3.0;
        let m = moments_trace(&DensityCandidate::diagonal(&[third; 3]).unwrap(), 3);
        assert_abs_diff_eq!(m.get(1), 1.0, epsilon = 1e-15);
        assert_abs_diff_eq!(m.get(2), 1.0 / 3.0, epsilon = 1e-15);
        assert_abs_diff_eq!(m.get(3), 1.0 / 9.0, epsilon = 1e-15);
    }

    #[test]
    fn closed_form_moment_examples() {
        for n in 2..=5 {
            let sc = compute_structure_constants(&build_generator_basis(n).unwrap()).unwrap();
            let v = BlochVector::zeros(n).unwrap();
            assert_abs_diff_eq!(moments_closed_form(&v, &sc, 2).unwrap(), 1.0 / n as f64);
        }
        let sc = compute_structure_constants(&build_generator_basis(3).unwrap()).unwrap();
        let v = BlochVector::along(3, 7, -2.0 / rt3()).unwrap();
        assert_abs_diff_eq!(moments_closed_form(&v, &sc, 3).unwrap(), 1.0, epsilon = 1e-14);
        assert_eq!(moments_closed_form(&v, &sc, 5), Err(Error::UnsupportedMoment(5)));
        assert_eq!(moments_closed_form(&v, &sc, 1), Err(Error::UnsupportedMoment(1)));
    }

    #[test]
    fn newton_on_one_two_three() {
        let m = MomentVector::new(3, vec![6.0, 14.0, 36.0]);
        let a = char_coefficients_newton(&m).unwrap();
        assert_eq!(a.as_slice(), &[1.0, 6.0, 11.0, 6.0]);
    }

    #[test]
    fn newton_maximally_mixed_qutrit() {
        let third = 1.0 / 3.0;
        let m = moments_trace(&DensityCandidate::diagonal(&[third; 3]).unwrap(), 3);
        let a = char_coefficients_newton(&m).unwrap();
        let want = [1.0, 1.0, 1.0 / 3.0, 1.0 / 27.0];
        for (got, want) in a.as_slice().iter().zip(want) {
            assert_abs_diff_eq!(*got, want, epsilon = 1e-15);
        }
    }

    #[test]
    fn newton_needs_n_moments() {
        let m = MomentVector::new(3, vec![1.0, 0.5]);
        assert_eq!(
            char_coefficients_newton(&m),
            Err(Error::InsufficientMoments { needed: 3, available: 2 })
        );
    }

    #[test]
    fn closed_form_coefficient_examples() {
        let sc = compute_structure_constants(&build_generator_basis(3).unwrap()).unwrap();
        let a = char_coefficients_closed_form(&BlochVector::zeros(3).unwrap(), &sc).unwrap();
        assert_eq!(a.degree(), 3);
        assert_abs_diff_eq!(a.get(2), 1.0 / 3.0, epsilon = 1e-15);
        assert_abs_diff_eq!(a.get(3), 1.0 / 27.0, epsilon = 1e-15);

        let sc2 = compute_structure_constants(&build_generator_basis(2).unwrap()).unwrap();
        let v = BlochVector::new(2, vec![0.6, 0.0, 0.8]).unwrap();
        let a = char_coefficients_closed_form(&v, &sc2).unwrap();
        assert_eq!(a.degree(), 2);
        assert_abs_diff_eq!(a.get(2), 0.0, epsilon = 1e-15);
        assert_abs_diff_eq!(2.0 * a.get(2), 1.0 - purity(&v), epsilon = 1e-15);

        let sc6 = compute_structure_constants(&build_generator_basis(6).unwrap()).unwrap();
        let a = char_coefficients_closed_form(&BlochVector::zeros(6).unwrap(), &sc6).unwrap();
        assert_eq!(a.degree(), 4);
        assert!(char_coefficients_closed_form(&BlochVector::zeros(3).unwrap(), &sc6).is_err());
    }

    #[test]
    fn positivity_examples() {
        assert!(positivity_from_coefficients(&CoefficientVector::new(vec![1., 6., 11., 6.]), 0.0));
        assert!(!positivity_from_coefficients(&CoefficientVector::new(vec![1., 4., 1., -6.]), 1e-9));
        for tol in [0.0, 1e-12, 1e-3] {
            assert!(positivity_from_coefficients(&CoefficientVector::new(vec![1., 1., 0.]), tol));
        }
    }

    #[test]
    fn membership_examples() {
        let b2 = build_generator_basis(2).unwrap();
        let v = BlochVector::new(2, vec![0.6, 0.0, 0.8]).unwrap();
        assert_eq!(is_bloch_vector(&v, &b2, DEFAULT_TOL).unwrap().decision, Decision::Boundary);

        let b3 = build_generator_basis(3).unwrap();
        let v = BlochVector::along(3, 7, 2.0 / rt3()).unwrap();
        let verdict = is_bloch_vector(&v, &b3, DEFAULT_TOL).unwrap();
        assert_eq!(verdict.decision, Decision::Outside);
        assert_eq!(verdict.failing_index, Some(3));
        assert_abs_diff_eq!(verdict.margins[2], -4.0 / 27.0, epsilon = 1e-14);

        let v = BlochVector::along(3, 7, -2.0 / rt3()).unwrap();
        let verdict = is_bloch_vector(&v, &b3, DEFAULT_TOL).unwrap();
        assert_eq!(verdict.decision, Decision::Boundary);
        assert_eq!(verdict.failing_index, None);
    }

    #[test]
    fn far_outside_fails_at_a2() {
        let b = build_generator_basis(4).unwrap();
        let r = crate::statemap::ball_radius(4).unwrap();
        let v = BlochVector::along(4, 0, 10.0 * r).unwrap();
        let verdict = is_bloch_vector(&v, &b, DEFAULT_TOL).unwrap();
        assert_eq!(verdict.decision, Decision::Outside);
        assert_eq!(verdict.failing_index, Some(2));
    }

    #[test]
    fn oracle_examples() {
        let d = |e: &[f64]| DensityCandidate::diagonal(e).unwrap();
        assert_eq!(eigenvalue_oracle(&d(&[0.5, 0.5]), DEFAULT_TOL).unwrap().decision, Decision::Inside);
        let t = 2.0 / 3.0;
        let out = eigenvalue_oracle(&d(&[t, t, -1.0 / 3.0]), DEFAULT_TOL).unwrap();
        assert_eq!(out.decision, Decision::Outside);
        assert_eq!(out.failing_index, Some(1));
        assert_eq!(eigenvalue_oracle(&d(&[1.0, 0.0]), DEFAULT_TOL).unwrap().decision, Decision::Boundary);
    }

    #[test]
    fn classify_band_edges() {
        assert_eq!(MembershipVerdict::classify(vec![1.0, 2e-9], 1e-9).decision, Decision::Inside);
        assert_eq!(MembershipVerdict::classify(vec![1.0, 1e-9], 1e-9).decision, Decision::Boundary);
        assert_eq!(MembershipVerdict::classify(vec![1.0, -1e-9], 1e-9).decision, Decision::Boundary);
        let v = MembershipVerdict::classify(vec![1.0, -1e-3, -2.0], 1e-9);
        assert_eq!(v.decision, Decision::Outside);
        assert_eq!(v.failing_index, Some(2));
        assert_eq!(v.min_margin(), -2.0);
    }

    #[test]
    fn batch_matches_single() {
        let b = build_generator_basis(3).unwrap();
        let vs: Vec<_> = (0..8)
            .map(|k| BlochVector::along(3, k, 0.2 * k as f64 - 0.7).unwrap())
            .collect();
        let batch = is_bloch_vector_batch(&vs, &b, DEFAULT_TOL).unwrap();
        for (v, got) in vs.iter().zip(batch) {
            assert_eq!(is_bloch_vector(v, &b, DEFAULT_TOL).unwrap(), got);
        }
    }
}
