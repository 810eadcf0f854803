//! Positive-partial-transpose test on bipartite states.
//!
//! The partial transpose acts on subsystem B. Composite indices are
//! row-major over (A, B): m = a·nb + b (0-based). Positivity of the
//! partially transposed matrix is decided with the same
//! characteristic-coefficient test used for membership. PPT is equivalent
//! to separability only for 2×2 and 2×3 systems; elsewhere a positive
//! partial transpose is reported as inconclusive.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::CMatrix;
use crate::membership::{char_coefficients, positivity_from_coefficients, Decision, MembershipVerdict};
use crate::statemap::DensityCandidate;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CompositeDims {
    na: usize,
    nb: usize,
}

impl CompositeDims {
    pub fn new(na: usize, nb: usize) -> Result<Self> {
        for d in [na, nb] {
            if d < 2 {
                return Err(Error::InvalidLevelCount(d));
            }
        }
        Ok(CompositeDims { na, nb })
    }

    pub fn na(&self) -> usize {
        self.na
    }

    pub fn nb(&self) -> usize {
        self.nb
    }

    pub fn total(&self) -> usize {
        self.na * self.nb
    }

    /// PPT decides separability (2×2 and 2×3, in that orientation).
    pub fn decisive(&self) -> bool {
        self.na == 2 && (self.nb == 2 || self.nb == 3)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SeparabilityDecision {
    Separable,
    Entangled,
    PptInconclusive,
}

impl SeparabilityDecision {
    pub fn as_str(self) -> &'static str {
        match self {
            SeparabilityDecision::Separable => "SEPARABLE",
            SeparabilityDecision::Entangled => "ENTANGLED",
            SeparabilityDecision::PptInconclusive => "PPT_INCONCLUSIVE",
        }
    }
}

impl std::fmt::Display for SeparabilityDecision {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SeparabilityVerdict {
    pub decision: SeparabilityDecision,
    /// Most negative characteristic coefficient of the partial transpose.
    pub min_margin: f64,
}

/// Transposes every nb×nb block of ρ in place.
pub fn partial_transpose(rho: &DensityCandidate, dims: CompositeDims) -> Result<DensityCandidate> {
    if rho.n() != dims.total() {
        return Err(Error::DimensionMismatch {
            expected: dims.total(),
            found: rho.n(),
        });
    }
    let nb = dims.nb();
    let m = rho.matrix();
    let n = dims.total();
    let out = CMatrix::from_fn(n, n, |row, col| {
        let (a, b) = (row / nb, row % nb);
        let (a2, b2) = (col / nb, col % nb);
        m[(a * nb + b2, a2 * nb + b)]
    });
    Ok(DensityCandidate::from_trusted(out))
}

/// PPT verdict from the characteristic coefficients of the partial transpose.
///
/// Fails with [`Error::NotAState`] when ρ itself has a coefficient below −tol.
pub fn ppt_verdict(rho: &DensityCandidate, dims: CompositeDims, tol: f64) -> Result<SeparabilityVerdict> {
    if rho.n() != dims.total() {
        return Err(Error::DimensionMismatch {
            expected: dims.total(),
            found: rho.n(),
        });
    }
    let own = MembershipVerdict::classify(char_coefficients(rho).margins().to_vec(), tol);
    if own.decision == Decision::Outside {
        let index = own.failing_index.expect("outside verdicts carry an index");
        return Err(Error::NotAState {
            index,
            value: own.margins[index - 1],
        });
    }
    let pt = partial_transpose(rho, dims)?;
    let coeffs = char_coefficients(&pt);
    let min_margin = coeffs.margins().iter().copied().fold(f64::INFINITY, f64::min);
    let decision = if !positivity_from_coefficients(&coeffs, tol) {
        SeparabilityDecision::Entangled
    } else if dims.decisive() {
        SeparabilityDecision::Separable
    } else {
        SeparabilityDecision::PptInconclusive
    };
    Ok(SeparabilityVerdict { decision, min_margin })
}

/// Bell state |Φ+⟩⟨Φ+| with |Φ+⟩ = (|00⟩ + |11⟩)/√2.
pub fn bell_phi_plus() -> DensityCandidate {
    let h = Complex64::new(0.5, 0.0);
    let mut m = CMatrix::zeros(4, 4);
    for (r, c) in [(0, 0), (0, 3), (3, 0), (3, 3)] {
        m[(r, c)] = h;
    }
    DensityCandidate::from_trusted(m)
}

/// Werner state p|Φ+⟩⟨Φ+| + (1 − p) I/4.
pub fn werner(p: f64) -> DensityCandidate {
    let bell = bell_phi_plus().into_matrix();
    let mixed = CMatrix::identity(4, 4) * Complex64::new(0.25, 0.0);
    DensityCandidate::from_trusted(bell * Complex64::new(p, 0.0) + mixed * Complex64::new(1.0 - p, 0.0))
}

/// ρ_A ⊗ ρ_B.
pub fn product_state(a: &DensityCandidate, b: &DensityCandidate) -> DensityCandidate {
    DensityCandidate::from_trusted(a.matrix().kronecker(b.matrix()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{hermitian_deviation, max_abs_diff, trace};
    use crate::membership::{spectrum, DEFAULT_TOL};
    use crate::sampling::{random_mixed_state, rng_from_seed};
    use approx::assert_abs_diff_eq;

    fn d22() -> CompositeDims {
        CompositeDims::new(2, 2).unwrap()
    }

    #[test]
    fn dims() {
        assert!(CompositeDims::new(1, 3).is_err());
        assert!(d22().decisive());
        assert!(CompositeDims::new(2, 3).unwrap().decisive());
        assert!(!CompositeDims::new(3, 2).unwrap().decisive());
        assert!(!CompositeDims::new(3, 3).unwrap().decisive());
        assert_eq!(CompositeDims::new(2, 3).unwrap().total(), 6);
    }

    #[test]
    fn bell_partial_transpose_spectrum() {
        let pt = partial_transpose(&bell_phi_plus(), d22()).unwrap();
        let ev = spectrum(&pt).unwrap();
        let want = [-0.5, 0.5, 0.5, 0.5];
        for (g, w) in ev.iter().zip(want) {
            assert_abs_diff_eq!(*g, w, epsilon = 1e-14);
        }
    }

    #[test]
    fn maximally_mixed_is_fixed() {
        let mixed = DensityCandidate::diagonal(&[0.25; 4]).unwrap();
        assert_eq!(partial_transpose(&mixed, d22()).unwrap(), mixed);
    }

    #[test]
    fn product_state_transposes_b_factor() {
        let mut rng = rng_from_seed(5);
        let a = random_mixed_state(2, &mut rng);
        let b = random_mixed_state(3, &mut rng);
        let dims = CompositeDims::new(2, 3).unwrap();
        let pt = partial_transpose(&product_state(&a, &b), dims).unwrap();
        let want = a.matrix().kronecker(&b.matrix().transpose());
        assert!(max_abs_diff(pt.matrix(), &want) < 1e-15);
        let s1 = spectrum(&pt).unwrap();
        let s2 = spectrum(&product_state(&a, &b)).unwrap();
        for (x, y) in s1.iter().zip(&s2) {
            assert_abs_diff_eq!(*x, *y, epsilon = 1e-12);
        }
    }

    #[test]
    fn involution_and_invariants() {
        let mut rng = rng_from_seed(11);
        let dims = CompositeDims::new(2, 3).unwrap();
        for _ in 0..20 {
            let rho = random_mixed_state(6, &mut rng);
            let pt = partial_transpose(&rho, dims).unwrap();
            assert_eq!(partial_transpose(&pt, dims).unwrap(), rho);
            assert!(hermitian_deviation(pt.matrix()) < 1e-14);
            assert!((trace(pt.matrix()) - trace(rho.matrix())).norm() < 1e-14);
        }
    }

    #[test]
    fn verdict_examples() {
        let v = ppt_verdict(&bell_phi_plus(), d22(), DEFAULT_TOL).unwrap();
        assert_eq!(v.decision, SeparabilityDecision::Entangled);
        assert!(v.min_margin < 0.0);

        let mut rng = rng_from_seed(1);
        let prod = product_state(&random_mixed_state(2, &mut rng), &random_mixed_state(3, &mut rng));
        let v = ppt_verdict(&prod, CompositeDims::new(2, 3).unwrap(), DEFAULT_TOL).unwrap();
        assert_eq!(v.decision, SeparabilityDecision::Separable);

        let prod = product_state(&random_mixed_state(3, &mut rng), &random_mixed_state(3, &mut rng));
        let v = ppt_verdict(&prod, CompositeDims::new(3, 3).unwrap(), DEFAULT_TOL).unwrap();
        assert_eq!(v.decision, SeparabilityDecision::PptInconclusive);
    }

    #[test]
    fn werner_sides_of_threshold() {
        let third = 1.0 / 3.0;
        let hi = ppt_verdict(&werner(third + 1e-6), d22(), DEFAULT_TOL).unwrap();
        let lo = ppt_verdict(&werner(third - 1e-6), d22(), DEFAULT_TOL).unwrap();
        assert_eq!(hi.decision, SeparabilityDecision::Entangled);
        assert_eq!(lo.decision, SeparabilityDecision::Separable);
    }

    #[test]
    fn rejects_non_states_and_bad_dims() {
        let bad = DensityCandidate::diagonal(&[0.75, 0.5, -0.25, 0.0]).unwrap();
        assert!(matches!(ppt_verdict(&bad, d22(), DEFAULT_TOL), Err(Error::NotAState { .. })));
        let three = DensityCandidate::diagonal(&[0.5, 0.25, 0.25]).unwrap();
        assert!(matches!(partial_transpose(&three, d22()), Err(Error::DimensionMismatch { .. })));
    }
}
