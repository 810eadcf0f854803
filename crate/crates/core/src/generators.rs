//! Orthogonal generator bases of SU(N) and their structure constants.
//!
//! The canonical basis generalizes the Pauli (N = 2) and Gell-Mann (N = 3)
//! matrices. For each k = 2..=N it emits the symmetric and antisymmetric
//! off-diagonal pairs `u_jk`, `v_jk` for j < k, followed by the diagonal
//! generator `w_{k-1}`. Every generator is Hermitian, traceless, and
//! normalized so that tr(λi λj) = 2 δij.
//!
//! Structure constants are defined through
//!
//! ```text
//! [λi, λj]  = 2i f_ijk λk
//! {λi, λj}  = (4/N) δij I + 2 g_ijk λk
//! ```
//!
//! with `f` totally antisymmetric and `g` totally symmetric. Only one
//! sorted index triple is stored per orbit; lookups restore the rest.
//!
//! Indices in the Rust API are 0-based. Text exports are 1-based.

use std::collections::BTreeMap;

use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};

use crate::error::{Error, Result};
use crate::linalg::{hermitian_deviation, trace, trace_product, CMatrix, ONE};

/// Entries of the structure-constant tensors below this magnitude are dropped.
pub const DROP_THRESHOLD: f64 = 1e-12;

const HERMITIAN_TOL: f64 = 1e-14;
const TRACE_TOL: f64 = 1e-14;
const ORTHONORMAL_TOL: f64 = 1e-12;

/// Number of generators for an N-level system.
pub fn generator_count(n: usize) -> usize {
    n * n - 1
}

/// An ordered set of N²−1 traceless Hermitian matrices with tr(λiλj) = 2δij.
#[derive(Debug, Clone, PartialEq)]
pub struct GeneratorBasis {
    n: usize,
    matrices: Vec<CMatrix>,
}

impl GeneratorBasis {
    /// Canonical generalized Gell-Mann basis.
    pub fn canonical(n: usize) -> Result<Self> {
        build_generator_basis(n)
    }

    /// Wraps caller-supplied matrices after checking the basis invariants.
    pub fn from_matrices(n: usize, matrices: Vec<CMatrix>) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidLevelCount(n));
        }
        if matrices.len() != generator_count(n) {
            return Err(Error::DimensionMismatch {
                expected: generator_count(n),
                found: matrices.len(),
            });
        }
        let basis = GeneratorBasis { n, matrices };
        basis.validate()?;
        Ok(basis)
    }

    /// Re-checks Hermiticity, tracelessness and trace orthonormality.
    pub fn validate(&self) -> Result<()> {
        for (idx, m) in self.matrices.iter().enumerate() {
            if m.nrows() != self.n || m.ncols() != self.n {
                return Err(Error::DimensionMismatch {
                    expected: self.n,
                    found: m.nrows(),
                });
            }
            let dev = hermitian_deviation(m);
            if dev > HERMITIAN_TOL {
                return Err(Error::NotHermitian(dev));
            }
            let tr = trace(m).norm();
            if tr > TRACE_TOL {
                return Err(Error::NotTraceless { index: idx, trace: tr });
            }
        }
        for i in 0..self.matrices.len() {
            for j in i..self.matrices.len() {
                let value = trace_product(&self.matrices[i], &self.matrices[j]).re;
                let expected = if i == j { 2.0 } else { 0.0 };
                if (value - expected).abs() > ORTHONORMAL_TOL {
                    return Err(Error::NotOrthogonal { i, j, value });
                }
            }
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of generators, N²−1.
    pub fn len(&self) -> usize {
        self.matrices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.matrices.is_empty()
    }

    pub fn matrices(&self) -> &[CMatrix] {
        &self.matrices
    }

    pub fn get(&self, i: usize) -> &CMatrix {
        &self.matrices[i]
    }

    pub fn iter(&self) -> std::slice::Iter<'_, CMatrix> {
        self.matrices.iter()
    }
}

/// Builds the canonical generator basis in interleaved order.
///
/// For N = 2 this yields (σ1, σ2, σ3); for N = 3 the Gell-Mann matrices
/// λ1..λ8 in their textbook order.
pub fn build_generator_basis(n: usize) -> Result<GeneratorBasis> {
    if n < 2 {
        return Err(Error::InvalidLevelCount(n));
    }
    let mut matrices = Vec::with_capacity(generator_count(n));
    for k in 1..n {
        for j in 0..k {
            let mut u = CMatrix::zeros(n, n);
            u[(j, k)] = ONE;
            u[(k, j)] = ONE;
            matrices.push(u);

            let mut v = CMatrix::zeros(n, n);
            v[(j, k)] = Complex64::new(0.0, -1.0);
            v[(k, j)] = Complex64::new(0.0, 1.0);
            matrices.push(v);
        }
        matrices.push(diagonal_generator(n, k));
    }
    Ok(GeneratorBasis { n, matrices })
}

/// w_l = sqrt(2/(l(l+1))) (Σ_{j≤l} |j⟩⟨j| − l |l+1⟩⟨l+1|), with l ≥ 1.
fn diagonal_generator(n: usize, l: usize) -> CMatrix {
    let lf = l as f64;
    let scale = (2.0 / (lf * (lf + 1.0))).sqrt();
    let mut w = CMatrix::zeros(n, n);
    for j in 0..l {
        w[(j, j)] = Complex64::new(scale, 0.0);
    }
    w[(l, l)] = Complex64::new(-lf * scale, 0.0);
    w
}

/// A real orthogonal matrix acting on generator indices.
#[derive(Debug, Clone, PartialEq)]
pub struct OrthogonalMatrix {
    entries: DMatrix<f64>,
}

impl OrthogonalMatrix {
    pub fn new(entries: DMatrix<f64>) -> Result<Self> {
        if entries.nrows() != entries.ncols() {
            return Err(Error::NotSquare(entries.nrows(), entries.ncols()));
        }
        let dim = entries.nrows();
        let gram = entries.transpose() * &entries;
        let dev = (gram - DMatrix::<f64>::identity(dim, dim)).amax();
        if dev > ORTHONORMAL_TOL {
            return Err(Error::NotOrthogonalMatrix(dev));
        }
        Ok(OrthogonalMatrix { entries })
    }

    pub fn identity(dim: usize) -> Self {
        OrthogonalMatrix {
            entries: DMatrix::identity(dim, dim),
        }
    }

    /// Permutation matrix sending row i to column `perm[i]`.
    pub fn permutation(perm: &[usize]) -> Result<Self> {
        let dim = perm.len();
        let mut entries = DMatrix::zeros(dim, dim);
        for (row, &col) in perm.iter().enumerate() {
            if col >= dim {
                return Err(Error::DimensionMismatch { expected: dim, found: col });
            }
            entries[(row, col)] = 1.0;
        }
        Self::new(entries)
    }

    /// Orthogonal factor of the QR decomposition of a Gaussian matrix,
    /// sign-corrected so the distribution is Haar on O(dim).
    pub fn random(dim: usize, seed: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let gauss = DMatrix::<f64>::from_fn(dim, dim, |_, _| StandardNormal.sample(&mut rng));
        let qr = gauss.qr();
        let mut q = qr.q();
        let r = qr.r();
        for c in 0..dim {
            if r[(c, c)] < 0.0 {
                q.column_mut(c).neg_mut();
            }
        }
        OrthogonalMatrix { entries: q }
    }

    pub fn dim(&self) -> usize {
        self.entries.nrows()
    }

    pub fn entries(&self) -> &DMatrix<f64> {
        &self.entries
    }
}

/// λ'_i = Σ_j V_ij λ_j.
pub fn rotate_basis(basis: &GeneratorBasis, v: &OrthogonalMatrix) -> Result<GeneratorBasis> {
    if v.dim() != basis.len() {
        return Err(Error::DimensionMismatch {
            expected: basis.len(),
            found: v.dim(),
        });
    }
    let n = basis.n();
    let matrices = (0..basis.len())
        .map(|i| {
            let mut acc = CMatrix::zeros(n, n);
            for (j, m) in basis.iter().enumerate() {
                let w = v.entries()[(i, j)];
                if w != 0.0 {
                    acc += m * Complex64::new(w, 0.0);
                }
            }
            acc
        })
        .collect();
    GeneratorBasis::from_matrices(n, matrices)
}

/// Sparse totally antisymmetric `f` and totally symmetric `g` tensors.
///
/// `f` is keyed by strictly increasing triples, `g` by non-decreasing ones.
#[derive(Debug, Clone, PartialEq)]
pub struct StructureConstants {
    n: usize,
    f: BTreeMap<[usize; 3], f64>,
    g: BTreeMap<[usize; 3], f64>,
}

/// Sorts a triple and returns the parity of the sorting permutation (+1/-1).
fn sort_with_sign(mut idx: [usize; 3]) -> ([usize; 3], f64) {
    let mut sign = 1.0;
    for pass in 0..2 {
        for p in 0..2 - pass {
            if idx[p] > idx[p + 1] {
                idx.swap(p, p + 1);
                sign = -sign;
            }
        }
    }
    (idx, sign)
}

/// All distinct orderings of a sorted triple together with their parity.
fn orderings(key: [usize; 3]) -> Vec<([usize; 3], f64)> {
    let [a, b, c] = key;
    let all = [
        ([a, b, c], 1.0),
        ([b, c, a], 1.0),
        ([c, a, b], 1.0),
        ([b, a, c], -1.0),
        ([a, c, b], -1.0),
        ([c, b, a], -1.0),
    ];
    let mut out: Vec<([usize; 3], f64)> = Vec::with_capacity(6);
    for (idx, sign) in all {
        if !out.iter().any(|(seen, _)| *seen == idx) {
            out.push((idx, sign));
        }
    }
    out
}

impl StructureConstants {
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of generator indices, N²−1.
    pub fn dim(&self) -> usize {
        generator_count(self.n)
    }

    /// f_ijk for any index order.
    pub fn f(&self, i: usize, j: usize, k: usize) -> f64 {
        if i == j || j == k || i == k {
            return 0.0;
        }
        let (key, sign) = sort_with_sign([i, j, k]);
        self.f.get(&key).map_or(0.0, |v| sign * v)
    }

    /// g_ijk for any index order.
    pub fn g(&self, i: usize, j: usize, k: usize) -> f64 {
        let (key, _) = sort_with_sign([i, j, k]);
        self.g.get(&key).copied().unwrap_or(0.0)
    }

    /// Stored `f` entries, one per orbit, keyed by i < j < k.
    pub fn f_canonical(&self) -> &BTreeMap<[usize; 3], f64> {
        &self.f
    }

    /// Stored `g` entries, one per orbit, keyed by i ≤ j ≤ k.
    pub fn g_canonical(&self) -> &BTreeMap<[usize; 3], f64> {
        &self.g
    }

    /// Every nonzero f_ijk over all index orders.
    pub fn f_entries(&self) -> impl Iterator<Item = ([usize; 3], f64)> + '_ {
        self.f
            .iter()
            .flat_map(|(&key, &v)| orderings(key).into_iter().map(move |(idx, s)| (idx, s * v)))
    }

    /// Every nonzero g_ijk over all index orders.
    pub fn g_entries(&self) -> impl Iterator<Item = ([usize; 3], f64)> + '_ {
        self.g
            .iter()
            .flat_map(|(&key, &v)| orderings(key).into_iter().map(move |(idx, _)| (idx, v)))
    }

    /// Sorted canonical triples carrying a nonzero `f` or `g`, as (i, j, k, f, g).
    pub fn canonical_rows(&self) -> Vec<([usize; 3], f64, f64)> {
        let mut keys: Vec<[usize; 3]> = self.f.keys().chain(self.g.keys()).copied().collect();
        keys.sort_unstable();
        keys.dedup();
        keys.into_iter()
            .map(|key| {
                let f = self.f.get(&key).copied().unwrap_or(0.0);
                let g = self.g.get(&key).copied().unwrap_or(0.0);
                (key, f, g)
            })
            .collect()
    }

    /// Σ g_ijk v_i v_j v_k.
    pub fn g_cubic(&self, v: &[f64]) -> f64 {
        self.g_entries().map(|([i, j, k], g)| g * v[i] * v[j] * v[k]).sum()
    }

    /// Σ g_ijm g_mkl v_i v_j v_k v_l, computed as Σ_m (Σ_ij g_ijm v_i v_j)².
    pub fn g_quartic(&self, v: &[f64]) -> f64 {
        let mut contracted = vec![0.0; self.dim()];
        for ([i, j, m], g) in self.g_entries() {
            contracted[m] += g * v[i] * v[j];
        }
        contracted.iter().map(|x| x * x).sum()
    }
}

/// Computes f and g from tr(λi λj λk) = 2 (g_ijk + i f_ijk).
///
/// The basis is re-validated first; a basis that is not orthonormal under
/// the trace product is rejected.
pub fn compute_structure_constants(basis: &GeneratorBasis) -> Result<StructureConstants> {
    basis.validate()?;
    let dim = basis.len();
    let mut f = BTreeMap::new();
    let mut g = BTreeMap::new();
    for i in 0..dim {
        for j in i..dim {
            let prod = basis.get(i) * basis.get(j);
            for k in j..dim {
                let t = trace_product(&prod, basis.get(k));
                let fv = t.im / 2.0;
                let gv = t.re / 2.0;
                if i < j && j < k && fv.abs() >= DROP_THRESHOLD {
                    f.insert([i, j, k], fv);
                }
                if gv.abs() >= DROP_THRESHOLD {
                    g.insert([i, j, k], gv);
                }
            }
        }
    }
    Ok(StructureConstants { n: basis.n(), f, g })
}

/// Residuals of the commutator and anticommutator relations for one pair.
///
/// Returns (max |[λi,λj] − 2i f_ijk λk|, max |{λi,λj} − (4/N)δij I − 2 g_ijk λk|).
pub fn closure_residuals(
    basis: &GeneratorBasis,
    sc: &StructureConstants,
    i: usize,
    j: usize,
) -> (f64, f64) {
    let n = basis.n();
    let a = basis.get(i);
    let b = basis.get(j);
    let ab = a * b;
    let ba = b * a;
    let mut comm = &ab - &ba;
    let mut anti = &ab + &ba;
    if i == j {
        anti -= CMatrix::identity(n, n) * Complex64::new(4.0 / n as f64, 0.0);
    }
    for k in 0..basis.len() {
        let fv = sc.f(i, j, k);
        if fv != 0.0 {
            comm -= basis.get(k) * Complex64::new(0.0, 2.0 * fv);
        }
        let gv = sc.g(i, j, k);
        if gv != 0.0 {
            anti -= basis.get(k) * Complex64::new(2.0 * gv, 0.0);
        }
    }
    let worst = |m: &CMatrix| m.iter().map(|z| z.norm()).fold(0.0, f64::max);
    (worst(&comm), worst(&anti))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn pauli() -> [CMatrix; 3] {
        [
            CMatrix::from_row_slice(2, 2, &[c(0., 0.), c(1., 0.), c(1., 0.), c(0., 0.)]),
            CMatrix::from_row_slice(2, 2, &[c(0., 0.), c(0., -1.), c(0., 1.), c(0., 0.)]),
            CMatrix::from_row_slice(2, 2, &[c(1., 0.), c(0., 0.), c(0., 0.), c(-1., 0.)]),
        ]
    }

    #[test]
    fn rejects_single_level() {
        assert_eq!(build_generator_basis(1), Err(Error::InvalidLevelCount(1)));
        assert_eq!(build_generator_basis(0), Err(Error::InvalidLevelCount(0)));
    }

    #[test]
    fn two_levels_give_pauli_matrices() {
        let basis = build_generator_basis(2).unwrap();
        assert_eq!(basis.len(), 3);
        for (got, want) in basis.iter().zip(pauli().iter()) {
            assert_eq!(got, want);
        }
    }

    #[test]
    fn three_levels_give_gell_mann_order() {
        let b = build_generator_basis(3).unwrap();
        let s3 = 1.0 / 3f64.sqrt();
        // λ3 = diag(1,-1,0), λ8 = diag(1,1,-2)/√3
        assert_eq!(b.get(2)[(0, 0)], c(1., 0.));
        assert_eq!(b.get(2)[(1, 1)], c(-1., 0.));
        assert_abs_diff_eq!(b.get(7)[(0, 0)].re, s3, epsilon = 1e-15);
        assert_abs_diff_eq!(b.get(7)[(2, 2)].re, -2.0 * s3, epsilon = 1e-15);
        // λ4 = u13, λ5 = v13, λ6 = u23, λ7 = v23
        assert_eq!(b.get(3)[(0, 2)], c(1., 0.));
        assert_eq!(b.get(4)[(0, 2)], c(0., -1.));
        assert_eq!(b.get(5)[(1, 2)], c(1., 0.));
        assert_eq!(b.get(6)[(2, 1)], c(0., 1.));
    }

    #[test]
    fn canonical_bases_are_orthonormal() {
        for n in 2..=6 {
            let b = build_generator_basis(n).unwrap();
            b.validate().unwrap();
            for i in 0..b.len() {
                for j in 0..b.len() {
                    let t = trace_product(b.get(i), b.get(j));
                    let want = if i == j { 2.0 } else { 0.0 };
                    assert!((t.re - want).abs() < 1e-12 && t.im.abs() < 1e-12);
                }
            }
        }
    }

    #[test]
    fn from_matrices_rejects_scaled_generator() {
        let mut m = build_generator_basis(2).unwrap().matrices().to_vec();
        m[0] *= c(2.0, 0.0);
        assert!(matches!(
            GeneratorBasis::from_matrices(2, m),
            Err(Error::NotOrthogonal { i: 0, j: 0, .. })
        ));
    }

    #[test]
    fn from_matrices_rejects_non_hermitian() {
        let mut m = build_generator_basis(2).unwrap().matrices().to_vec();
        m[1][(0, 1)] = c(0.0, 1.0);
        assert!(matches!(GeneratorBasis::from_matrices(2, m), Err(Error::NotHermitian(_))));
    }

    #[test]
    fn su2_constants_are_levi_civita() {
        let sc = compute_structure_constants(&build_generator_basis(2).unwrap()).unwrap();
        assert!(sc.g_canonical().is_empty());
        assert_eq!(sc.f_canonical().len(), 1);
        for i in 0..3 {
            for j in 0..3 {
                for k in 0..3 {
                    let eps = match (i, j, k) {
                        (0, 1, 2) | (1, 2, 0) | (2, 0, 1) => 1.0,
                        (1, 0, 2) | (0, 2, 1) | (2, 1, 0) => -1.0,
                        _ => 0.0,
                    };
                    assert_abs_diff_eq!(sc.f(i, j, k), eps, epsilon = 1e-12);
                }
            }
        }
    }

    #[test]
    fn su3_selected_constants() {
        let sc = compute_structure_constants(&build_generator_basis(3).unwrap()).unwrap();
        let r3 = 3f64.sqrt();
        assert_abs_diff_eq!(sc.f(0, 1, 2), 1.0, epsilon = 1e-12);
        assert_abs_diff_eq!(sc.f(3, 4, 7), r3 / 2.0, epsilon = 1e-12);
        assert_abs_diff_eq!(sc.f(5, 6, 7), r3 / 2.0, epsilon = 1e-12);
        assert_abs_diff_eq!(sc.g(0, 0, 7), r3 / 3.0, epsilon = 1e-12);
        assert_abs_diff_eq!(sc.g(3, 3, 7), -r3 / 6.0, epsilon = 1e-12);
        assert_abs_diff_eq!(sc.g(0, 3, 5), 0.5, epsilon = 1e-12);
        // permuted lookups
        assert_abs_diff_eq!(sc.f(4, 3, 7), -r3 / 2.0, epsilon = 1e-12);
        assert_abs_diff_eq!(sc.g(7, 0, 0), r3 / 3.0, epsilon = 1e-12);
    }

    #[test]
    fn f_vanishes_on_repeated_indices() {
        for n in 2..=4 {
            let sc = compute_structure_constants(&build_generator_basis(n).unwrap()).unwrap();
            for i in 0..sc.dim() {
                for k in 0..sc.dim() {
                    assert_eq!(sc.f(i, i, k), 0.0);
                    assert_eq!(sc.f(i, k, i), 0.0);
                }
            }
        }
    }

    #[test]
    fn closure_holds_small_n() {
        for n in 2..=4 {
            let b = build_generator_basis(n).unwrap();
            let sc = compute_structure_constants(&b).unwrap();
            for i in 0..b.len() {
                for j in 0..b.len() {
                    let (rc, ra) = closure_residuals(&b, &sc, i, j);
                    assert!(rc < 1e-10 && ra < 1e-10, "n={n} ({i},{j}): {rc} {ra}");
                }
            }
        }
    }

    #[test]
    fn rotate_identity_is_noop() {
        let b = build_generator_basis(3).unwrap();
        let r = rotate_basis(&b, &OrthogonalMatrix::identity(8)).unwrap();
        assert_eq!(r, b);
    }

    #[test]
    fn rotate_swap_relabels_pauli() {
        let b = build_generator_basis(2).unwrap();
        let swap = OrthogonalMatrix::permutation(&[1, 0, 2]).unwrap();
        let r = rotate_basis(&b, &swap).unwrap();
        let p = pauli();
        assert_eq!(r.get(0), &p[1]);
        assert_eq!(r.get(1), &p[0]);
        assert_eq!(r.get(2), &p[2]);
    }

    #[test]
    fn rotate_rejects_wrong_dimension() {
        let b = build_generator_basis(2).unwrap();
        assert_eq!(
            rotate_basis(&b, &OrthogonalMatrix::identity(8)),
            Err(Error::DimensionMismatch { expected: 3, found: 8 })
        );
    }

    #[test]
    fn orthogonal_matrix_rejects_shear() {
        let m = DMatrix::from_row_slice(2, 2, &[1.0, 0.1, 0.0, 1.0]);
        assert!(matches!(OrthogonalMatrix::new(m), Err(Error::NotOrthogonalMatrix(_))));
    }

    #[test]
    fn sort_with_sign_tracks_parity() {
        assert_eq!(sort_with_sign([2, 0, 1]), ([0, 1, 2], 1.0));
        assert_eq!(sort_with_sign([1, 0, 2]), ([0, 1, 2], -1.0));
        assert_eq!(sort_with_sign([2, 1, 0]), ([0, 1, 2], -1.0));
        assert_eq!(orderings([0, 0, 3]).len(), 3);
        assert_eq!(orderings([1, 1, 1]).len(), 1);
    }
}
