//! Two-dimensional sections of the qutrit Bloch-vector space.
//!
//! A section Σ(i, j) keeps only the Gell-Mann components λi and λj and
//! zeroes the rest. With the canonical Gell-Mann basis the positivity
//! condition on such a plane reduces to one of four shapes:
//!
//! | type | axes                                  | region                                  |
//! |------|---------------------------------------|-----------------------------------------|
//! | I    | {1,2,3} × 8                           | triangle (0,−2/√3), (±1, 1/√3)          |
//! | II   | {4,5} × 3, {6,7} × (−3)               | parabolic cap  λj ≤ 2/3, λj ≥ 3/2 λi² − 2/3 |
//! | III  | {4,5,6,7} × 8                         | ellipse 2λi² + 4/3 (λ8 + √3/6)² ≤ 1     |
//! | IV   | every other pair                      | disk of radius 2/3                      |
//!
//! Axis labels here are 1-based (λ1..λ8) because they name Gell-Mann
//! components rather than array positions.

use std::f64::consts::PI;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::generators::{GeneratorBasis, StructureConstants};
use crate::membership::{is_bloch_vector, MembershipVerdict};
use crate::statemap::BlochVector;

/// Slack applied to closed-form inequalities so exact boundary points survive rounding.
const CLOSED_FORM_SLACK: f64 = 1e-12;

pub const DEFAULT_RESOLUTION: usize = 401;

fn rt3() -> f64 {
    3f64.sqrt()
}

/// Radius 2/√3 of the qutrit ball.
pub fn qutrit_ball_radius() -> f64 {
    2.0 / rt3()
}

/// 18 · 3! · a_3 = 4 − 9|v|² + 9 g_ijk v_i v_j v_k; same sign as a_3.
pub fn a3_margin(v: &BlochVector, sc: &StructureConstants) -> Result<f64> {
    if v.n() != 3 {
        return Err(Error::DimensionMismatch { expected: 3, found: v.n() });
    }
    if sc.n() != 3 {
        return Err(Error::DimensionMismatch { expected: 3, found: sc.n() });
    }
    Ok(4.0 - 9.0 * v.norm_squared() + 9.0 * sc.g_cubic(v.components()))
}

/// A grid over the (λi, λj) plane.
#[derive(Debug, Clone, PartialEq)]
pub struct SectionSpec {
    pub i: usize,
    pub j: usize,
    pub resolution: usize,
    pub range: f64,
}

impl SectionSpec {
    pub fn new(i: usize, j: usize, resolution: usize, range: f64) -> Result<Self> {
        check_axes(i, j)?;
        if resolution < 3 {
            return Err(Error::InvalidSection(format!("resolution {resolution} < 3")));
        }
        if range.is_nan() || range <= 0.0 {
            return Err(Error::InvalidSection(format!("range {range} must be positive")));
        }
        Ok(SectionSpec { i, j, resolution, range })
    }

    /// 401 points per axis over [−2/√3, 2/√3].
    pub fn with_defaults(i: usize, j: usize) -> Result<Self> {
        Self::new(i, j, DEFAULT_RESOLUTION, qutrit_ball_radius())
    }

    /// Grid coordinates along one axis.
    pub fn axis(&self) -> Vec<f64> {
        let step = 2.0 * self.range / (self.resolution - 1) as f64;
        (0..self.resolution).map(|k| -self.range + step * k as f64).collect()
    }

    pub fn step(&self) -> f64 {
        2.0 * self.range / (self.resolution - 1) as f64
    }

    /// Bloch vector with λi = xi, λj = xj and every other component zero.
    pub fn point(&self, xi: f64, xj: f64) -> BlochVector {
        let mut c = vec![0.0; 8];
        c[self.i - 1] = xi;
        c[self.j - 1] = xj;
        BlochVector::new(3, c).expect("eight components")
    }
}

fn check_axes(i: usize, j: usize) -> Result<()> {
    for axis in [i, j] {
        if !(1..=8).contains(&axis) {
            return Err(Error::AxisOutOfRange(axis));
        }
    }
    if i == j {
        return Err(Error::RepeatedAxis(i));
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SectionKind {
    TypeI,
    TypeII,
    TypeIII,
    TypeIV,
}

impl SectionKind {
    pub fn as_str(self) -> &'static str {
        match self {
            SectionKind::TypeI => "TYPE_I",
            SectionKind::TypeII => "TYPE_II",
            SectionKind::TypeIII => "TYPE_III",
            SectionKind::TypeIV => "TYPE_IV",
        }
    }
}

/// Section shape. `sign` is the orientation of λ3 for Type II and +1 otherwise.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SectionClass {
    pub kind: SectionKind,
    pub sign: i8,
}

/// Shape of Σ(i, j); the pair is unordered.
pub fn classify_section(i: usize, j: usize) -> Result<SectionClass> {
    check_axes(i, j)?;
    let (lo, hi) = if i < j { (i, j) } else { (j, i) };
    let class = |kind, sign| SectionClass { kind, sign };
    Ok(match (lo, hi) {
        (1..=3, 8) => class(SectionKind::TypeI, 1),
        (3, 4 | 5) => class(SectionKind::TypeII, 1),
        (3, 6 | 7) => class(SectionKind::TypeII, -1),
        (4..=7, 8) => class(SectionKind::TypeIII, 1),
        _ => class(SectionKind::TypeIV, 1),
    })
}

/// Axis playing the role of λj in the closed-form inequalities (8 or 3).
fn pivot_axis(kind: SectionKind) -> Option<usize> {
    match kind {
        SectionKind::TypeI | SectionKind::TypeIII => Some(8),
        SectionKind::TypeII => Some(3),
        SectionKind::TypeIV => None,
    }
}

/// Reorders raw (λi, λj) so that the pivot axis comes second.
pub fn oriented(cls: SectionClass, i: usize, xi: f64, xj: f64) -> (f64, f64) {
    match pivot_axis(cls.kind) {
        Some(p) if p == i => (xj, xi),
        _ => (xi, xj),
    }
}

/// Closed-form membership on a section, including the ball condition.
///
/// `li` is the free axis and `lj` the pivot axis (λ8 for Types I and III,
/// λ3 for Type II, either for Type IV); see [`oriented`].
pub fn closed_form_section_test(cls: SectionClass, li: f64, lj: f64) -> bool {
    let eps = CLOSED_FORM_SLACK;
    let r3 = rt3();
    let r = qutrit_ball_radius();
    let in_ball = li * li + lj * lj <= r * r + eps;
    let shape = match cls.kind {
        SectionKind::TypeI => {
            lj <= 1.0 / r3 + eps
                && lj >= r3 * li - 2.0 / r3 - eps
                && lj >= -r3 * li - 2.0 / r3 - eps
        }
        SectionKind::TypeII => {
            let lj = f64::from(cls.sign) * lj;
            lj <= 2.0 / 3.0 + eps && lj >= 1.5 * li * li - 2.0 / 3.0 - eps
        }
        SectionKind::TypeIII => {
            let shifted = lj + r3 / 6.0;
            2.0 * li * li + 4.0 / 3.0 * shifted * shifted <= 1.0 + eps
        }
        SectionKind::TypeIV => li * li + lj * lj <= 4.0 / 9.0 + eps,
    };
    shape && in_ball
}

/// Grid cell classification.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Cell {
    /// A state (boundary points included).
    In,
    /// Inside the ball but some a_i < 0.
    BallOnly,
    Out,
}

impl Cell {
    pub fn as_str(self) -> &'static str {
        match self {
            Cell::In => "IN",
            Cell::BallOnly => "BALL_ONLY",
            Cell::Out => "OUT",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridVerdict {
    pub li: f64,
    pub lj: f64,
    pub cell: Cell,
}

/// Grid point with the full coefficient verdict attached.
#[derive(Debug, Clone, PartialEq)]
pub struct GridSample {
    pub li: f64,
    pub lj: f64,
    pub verdict: MembershipVerdict,
    pub cell: Cell,
}

fn cell_for(v: &BlochVector, verdict: &MembershipVerdict, tol: f64) -> Cell {
    let r = qutrit_ball_radius();
    if verdict.decision.is_member() {
        Cell::In
    } else if v.norm_squared() <= r * r + tol {
        Cell::BallOnly
    } else {
        Cell::Out
    }
}

/// Evaluates the generic membership test on every grid point, row-major
/// with λj varying fastest.
pub fn sample_section_detailed(
    spec: &SectionSpec,
    basis: &GeneratorBasis,
    tol: f64,
) -> Result<Vec<GridSample>> {
    if basis.n() != 3 {
        return Err(Error::DimensionMismatch { expected: 3, found: basis.n() });
    }
    let axis = spec.axis();
    let rows: Vec<Vec<GridSample>> = axis
        .par_iter()
        .map(|&xi| {
            axis.iter()
                .map(|&xj| {
                    let v = spec.point(xi, xj);
                    let verdict = is_bloch_vector(&v, basis, tol)?;
                    let cell = cell_for(&v, &verdict, tol);
                    Ok(GridSample { li: xi, lj: xj, verdict, cell })
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(rows.into_iter().flatten().collect())
}

/// IN / BALL_ONLY / OUT for every grid point, row-major with λj fastest.
pub fn sample_section(spec: &SectionSpec, basis: &GeneratorBasis, tol: f64) -> Result<Vec<GridVerdict>> {
    Ok(sample_section_detailed(spec, basis, tol)?
        .into_iter()
        .map(|s| GridVerdict { li: s.li, lj: s.lj, cell: s.cell })
        .collect())
}

/// Named closed polyline in raw (λi, λj) coordinates.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundaryCurve {
    pub name: &'static str,
    pub points: Vec<(f64, f64)>,
}

fn circle(radius: f64, samples: usize) -> Vec<(f64, f64)> {
    (0..=samples)
        .map(|k| {
            let t = 2.0 * PI * k as f64 / samples as f64;
            (radius * t.cos(), radius * t.sin())
        })
        .collect()
}

/// Closed-form boundary of the section and of the enclosing ball.
pub fn boundary_curves(spec: &SectionSpec, samples: usize) -> Result<Vec<BoundaryCurve>> {
    let cls = classify_section(spec.i, spec.j)?;
    let samples = samples.max(8);
    let r3 = rt3();
    // canonical (free, pivot) coordinates
    let region: Vec<(f64, f64)> = match cls.kind {
        SectionKind::TypeI => vec![
            (0.0, -2.0 / r3),
            (1.0, 1.0 / r3),
            (-1.0, 1.0 / r3),
            (0.0, -2.0 / r3),
        ],
        SectionKind::TypeII => {
            let edge = (8.0f64 / 9.0).sqrt();
            let sign = f64::from(cls.sign);
            let mut pts: Vec<(f64, f64)> = (0..=samples)
                .map(|k| {
                    let x = -edge + 2.0 * edge * k as f64 / samples as f64;
                    (x, sign * (1.5 * x * x - 2.0 / 3.0))
                })
                .collect();
            pts.push((-edge, sign * 2.0 / 3.0));
            pts
        }
        SectionKind::TypeIII => (0..=samples)
            .map(|k| {
                let t = 2.0 * PI * k as f64 / samples as f64;
                (t.cos() / 2f64.sqrt(), -r3 / 6.0 + r3 / 2.0 * t.sin())
            })
            .collect(),
        SectionKind::TypeIV => circle(2.0 / 3.0, samples),
    };
    let swap = matches!(pivot_axis(cls.kind), Some(p) if p == spec.i);
    let region = region
        .into_iter()
        .map(|(a, b)| if swap { (b, a) } else { (a, b) })
        .collect();
    Ok(vec![
        BoundaryCurve { name: "ball", points: circle(qutrit_ball_radius(), samples) },
        BoundaryCurve { name: cls.kind.as_str(), points: region },
    ])
}
