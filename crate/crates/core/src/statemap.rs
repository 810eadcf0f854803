//! Bloch vectors, candidate density matrices, and the affine map between them.
//!
//! A Bloch vector v ∈ R^{N²−1} corresponds to the unit-trace Hermitian matrix
//!
//! ```text
//! ρ = I/N + ½ Σ_i v_i λ_i,      v_i = tr(ρ λ_i)
//! ```
//!
//! The map is a bijection between R^{N²−1} and unit-trace Hermitian
//! matrices. Whether ρ is positive semidefinite is a separate question,
//! answered by [`crate::membership`].

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::generators::{generator_count, GeneratorBasis};
use crate::linalg::{ensure_square, hermitian_deviation, trace, trace_product, CMatrix};

/// Tolerance on the trace and Hermiticity of a [`DensityCandidate`], and on
/// the imaginary residue of recovered expectation values.
pub const STATE_TOL: f64 = 1e-12;

/// Real vector of generator expectation values for an N-level system.
#[derive(Debug, Clone, PartialEq)]
pub struct BlochVector {
    n: usize,
    components: Vec<f64>,
}

impl BlochVector {
    pub fn new(n: usize, components: Vec<f64>) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidLevelCount(n));
        }
        if components.len() != generator_count(n) {
            return Err(Error::DimensionMismatch {
                expected: generator_count(n),
                found: components.len(),
            });
        }
        Ok(BlochVector { n, components })
    }

    /// The maximally mixed state.
    pub fn zeros(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidLevelCount(n));
        }
        Ok(BlochVector {
            n,
            components: vec![0.0; generator_count(n)],
        })
    }

    /// Vector with a single nonzero component at 0-based index `axis`.
    pub fn along(n: usize, axis: usize, value: f64) -> Result<Self> {
        let mut v = Self::zeros(n)?;
        if axis >= v.components.len() {
            return Err(Error::DimensionMismatch {
                expected: v.components.len(),
                found: axis + 1,
            });
        }
        v.components[axis] = value;
        Ok(v)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn components(&self) -> &[f64] {
        &self.components
    }

    pub fn into_components(self) -> Vec<f64> {
        self.components
    }

    pub fn dot(&self, other: &BlochVector) -> Result<f64> {
        ensure_same_n(self.n, other.n)?;
        Ok(self.components.iter().zip(&other.components).map(|(a, b)| a * b).sum())
    }

    pub fn norm_squared(&self) -> f64 {
        self.components.iter().map(|x| x * x).sum()
    }

    pub fn norm(&self) -> f64 {
        self.norm_squared().sqrt()
    }
}

fn ensure_same_n(a: usize, b: usize) -> Result<()> {
    if a != b {
        return Err(Error::DimensionMismatch { expected: a, found: b });
    }
    Ok(())
}

/// Unit-trace Hermitian N×N matrix. Positivity is not assumed.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityCandidate {
    matrix: CMatrix,
}

impl DensityCandidate {
    /// Checks trace and Hermiticity within [`STATE_TOL`].
    pub fn new(matrix: CMatrix) -> Result<Self> {
        let n = ensure_square(&matrix)?;
        if n < 2 {
            return Err(Error::InvalidLevelCount(n));
        }
        let dev = hermitian_deviation(&matrix);
        if dev > STATE_TOL {
            return Err(Error::NotHermitian(dev));
        }
        let tr = trace(&matrix);
        if (tr.re - 1.0).abs() > STATE_TOL || tr.im.abs() > STATE_TOL {
            return Err(Error::NotUnitTrace(tr.re));
        }
        Ok(DensityCandidate { matrix })
    }

    /// Diagonal candidate with the given real entries.
    pub fn diagonal(entries: &[f64]) -> Result<Self> {
        let n = entries.len();
        let m = CMatrix::from_fn(n, n, |r, c| {
            if r == c {
                Complex64::new(entries[r], 0.0)
            } else {
                Complex64::new(0.0, 0.0)
            }
        });
        Self::new(m)
    }

    /// Pure state |ψ⟩⟨ψ| for a normalized ψ.
    pub fn pure(psi: &[Complex64]) -> Result<Self> {
        Self::new(crate::linalg::projector(psi))
    }

    pub(crate) fn from_trusted(matrix: CMatrix) -> Self {
        DensityCandidate { matrix }
    }

    pub fn n(&self) -> usize {
        self.matrix.nrows()
    }

    pub fn matrix(&self) -> &CMatrix {
        &self.matrix
    }

    pub fn into_matrix(self) -> CMatrix {
        self.matrix
    }
}

/// Observable a·I + Σ b_i λ_i.
#[derive(Debug, Clone, PartialEq)]
pub struct Observable {
    n: usize,
    offset: f64,
    direction: Vec<f64>,
}

impl Observable {
    pub fn new(n: usize, offset: f64, direction: Vec<f64>) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidLevelCount(n));
        }
        if direction.len() != generator_count(n) {
            return Err(Error::DimensionMismatch {
                expected: generator_count(n),
                found: direction.len(),
            });
        }
        Ok(Observable { n, offset, direction })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn offset(&self) -> f64 {
        self.offset
    }

    pub fn direction(&self) -> &[f64] {
        &self.direction
    }

    /// Explicit matrix a·I + Σ b_i λ_i.
    pub fn to_matrix(&self, basis: &GeneratorBasis) -> Result<CMatrix> {
        ensure_same_n(basis.n(), self.n)?;
        let mut m = CMatrix::identity(self.n, self.n) * Complex64::new(self.offset, 0.0);
        for (b, g) in self.direction.iter().zip(basis.iter()) {
            if *b != 0.0 {
                m += g * Complex64::new(*b, 0.0);
            }
        }
        Ok(m)
    }
}

/// ρ = I/N + ½ Σ v_i λ_i. Always unit-trace Hermitian.
pub fn bloch_to_matrix(v: &BlochVector, basis: &GeneratorBasis) -> Result<DensityCandidate> {
    ensure_same_n(basis.n(), v.n())?;
    let n = v.n();
    let mut rho = CMatrix::identity(n, n) * Complex64::new(1.0 / n as f64, 0.0);
    for (&x, g) in v.components().iter().zip(basis.iter()) {
        if x == 0.0 {
            continue;
        }
        let half = 0.5 * x;
        for (dst, src) in rho.iter_mut().zip(g.iter()) {
            if src.re != 0.0 || src.im != 0.0 {
                *dst += src * half;
            }
        }
    }
    Ok(DensityCandidate::from_trusted(rho))
}

/// v_i = tr(ρ λ_i), rejecting any imaginary residue above [`STATE_TOL`].
pub fn matrix_to_bloch(rho: &DensityCandidate, basis: &GeneratorBasis) -> Result<BlochVector> {
    ensure_same_n(basis.n(), rho.n())?;
    let components = basis
        .iter()
        .enumerate()
        .map(|(index, g)| {
            let t = trace_product(rho.matrix(), g);
            if t.im.abs() > STATE_TOL {
                return Err(Error::ImaginaryResidue { index, residue: t.im });
            }
            Ok(t.re)
        })
        .collect::<Result<Vec<_>>>()?;
    BlochVector::new(rho.n(), components)
}

/// tr ρ² = 1/N + |v|²/2.
pub fn purity(v: &BlochVector) -> f64 {
    1.0 / v.n() as f64 + 0.5 * v.norm_squared()
}

/// Radius √(2(N−1)/N) of the ball enclosing all physical Bloch vectors.
pub fn ball_radius(n: usize) -> Result<f64> {
    if n < 2 {
        return Err(Error::InvalidLevelCount(n));
    }
    let nf = n as f64;
    Ok((2.0 * (nf - 1.0) / nf).sqrt())
}

/// tr(ρ O) = a + b·v.
pub fn expectation(v: &BlochVector, o: &Observable) -> Result<f64> {
    ensure_same_n(v.n(), o.n())?;
    Ok(o.offset() + v.components().iter().zip(o.direction()).map(|(x, b)| x * b).sum::<f64>())
}

/// tr(ρ1 ρ2) = 1/N + v1·v2/2.
pub fn overlap(v1: &BlochVector, v2: &BlochVector) -> Result<f64> {
    Ok(1.0 / v1.n() as f64 + 0.5 * v1.dot(v2)?)
}
