//! Seeded random states and Bloch vectors.
//!
//! Pure states normalize a vector of independent complex Gaussians.
//! Mixed states use the Hilbert–Schmidt measure ρ = GG†/tr(GG†) with G a
//! complex Ginibre matrix. Ball-uniform vectors fill the enclosing ball of
//! radius √(2(N−1)/N) and are generally not states for N ≥ 3.

use std::str::FromStr;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};

use crate::error::{Error, Result};
use crate::generators::{generator_count, GeneratorBasis};
use crate::linalg::{projector, trace, CMatrix};
use crate::statemap::{ball_radius, matrix_to_bloch, BlochVector, DensityCandidate};

/// Deterministic generator for a 64-bit seed.
pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn complex_gaussian<R: Rng + ?Sized>(rng: &mut R) -> Complex64 {
    Complex64::new(StandardNormal.sample(rng), StandardNormal.sample(rng))
}

/// Normalized random vector in C^n.
pub fn random_ket<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Vec<Complex64> {
    let mut psi: Vec<Complex64> = (0..n).map(|_| complex_gaussian(rng)).collect();
    let norm = psi.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    for z in &mut psi {
        *z /= norm;
    }
    psi
}

pub fn random_pure_state<R: Rng + ?Sized>(n: usize, rng: &mut R) -> DensityCandidate {
    DensityCandidate::new(projector(&random_ket(n, rng))).expect("projector of a unit vector")
}

/// Hilbert–Schmidt random density matrix.
pub fn random_mixed_state<R: Rng + ?Sized>(n: usize, rng: &mut R) -> DensityCandidate {
    let g = CMatrix::from_fn(n, n, |_, _| complex_gaussian(rng));
    let mut rho = &g * g.adjoint();
    let tr = trace(&rho).re;
    rho /= Complex64::new(tr, 0.0);
    // GG† is Hermitian up to rounding; symmetrize so the candidate check is exact.
    let sym = (&rho + rho.adjoint()) * Complex64::new(0.5, 0.0);
    DensityCandidate::new(sym).expect("normalized Gram matrix")
}

/// Uniform point in the ball of radius √(2(N−1)/N) in R^{N²−1}.
pub fn random_ball_vector<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Result<BlochVector> {
    let radius = ball_radius(n)?;
    let dim = generator_count(n);
    let mut x: Vec<f64> = (0..dim).map(|_| StandardNormal.sample(rng)).collect();
    let norm = x.iter().map(|t| t * t).sum::<f64>().sqrt();
    let u: f64 = rng.random();
    let scale = radius * u.powf(1.0 / dim as f64) / norm;
    for t in &mut x {
        *t *= scale;
    }
    BlochVector::new(n, x)
}

/// Which distribution [`sample_states`] draws from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SampleKind {
    Pure,
    Mixed,
    BallUniform,
}

impl FromStr for SampleKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "pure" => Ok(SampleKind::Pure),
            "mixed" => Ok(SampleKind::Mixed),
            "ball-uniform" => Ok(SampleKind::BallUniform),
            other => Err(Error::UnknownSampleKind(other.to_string())),
        }
    }
}

/// `count` Bloch vectors of the requested kind, deterministic per seed.
pub fn sample_states(
    basis: &GeneratorBasis,
    count: usize,
    kind: SampleKind,
    seed: u64,
) -> Result<Vec<BlochVector>> {
    let n = basis.n();
    let mut rng = rng_from_seed(seed);
    (0..count)
        .map(|_| match kind {
            SampleKind::Pure => matrix_to_bloch(&random_pure_state(n, &mut rng), basis),
            SampleKind::Mixed => matrix_to_bloch(&random_mixed_state(n, &mut rng), basis),
            SampleKind::BallUniform => random_ball_vector(n, &mut rng),
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::build_generator_basis;
    use crate::membership::{is_bloch_vector, Decision, DEFAULT_TOL};

    #[test]
    fn kind_parsing() {
        assert_eq!("ball-uniform".parse::<SampleKind>().unwrap(), SampleKind::BallUniform);
        assert!(matches!("gibbs".parse::<SampleKind>(), Err(Error::UnknownSampleKind(_))));
    }

    #[test]
    fn pure_qutrits_sit_on_the_sphere() {
        let b = build_generator_basis(3).unwrap();
        let r = ball_radius(3).unwrap();
        for v in sample_states(&b, 200, SampleKind::Pure, 7).unwrap() {
            assert!((v.norm() - r).abs() < 1e-10);
        }
    }

    #[test]
    fn mixed_samples_are_states() {
        for n in 2..=5 {
            let b = build_generator_basis(n).unwrap();
            for v in sample_states(&b, 100, SampleKind::Mixed, 3).unwrap() {
                let verdict = is_bloch_vector(&v, &b, DEFAULT_TOL).unwrap();
                assert_ne!(verdict.decision, Decision::Outside);
            }
        }
    }

    #[test]
    fn ball_samples_stay_in_ball() {
        let b = build_generator_basis(4).unwrap();
        let r = ball_radius(4).unwrap();
        for v in sample_states(&b, 500, SampleKind::BallUniform, 0).unwrap() {
            assert!(v.norm() <= r);
        }
    }

    #[test]
    fn same_seed_same_stream() {
        let b = build_generator_basis(3).unwrap();
        let a = sample_states(&b, 20, SampleKind::Mixed, 42).unwrap();
        let c = sample_states(&b, 20, SampleKind::Mixed, 42).unwrap();
        assert_eq!(a, c);
        let d = sample_states(&b, 20, SampleKind::Mixed, 43).unwrap();
        assert_ne!(a, d);
    }
}
