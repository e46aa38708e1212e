//! The sumsets X_k = Σ_{i<k} 2^i {±e_1, …, ±e_d}, their union X_∞ and the
//! thickening X₊ = X_∞ + {0, ±e_i}.
//!
//! Level k has exactly k summands, so X_0 = {0}, |X_k| = (2d)^k and the
//! generating polynomial of X_k is S^{2^k − 1}. Every level satisfies
//! X_k = {±e_i} + 2·X_{k−1}, which is how all constructions here proceed.

use crate::error::{Error, Result};
use crate::lattice::{dilate, minkowski_sum, LatticeBox, LatticePoint, PointSet};

/// Largest (2d)^k a single construction may request.
pub const LEVEL_BUDGET: u128 = 1 << 31;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FractalLevel {
    pub d: usize,
    pub k: u32,
    pub points: PointSet,
}

/// {±e_1, …, ±e_d}.
pub fn unit_vectors(d: usize) -> PointSet {
    assert!(d >= 1, "dimension must be at least 1");
    let mut flat = Vec::with_capacity(2 * d * d);
    for axis in 0..d {
        for positive in [true, false] {
            flat.extend_from_slice(LatticePoint::unit(d, axis, positive).coords());
        }
    }
    PointSet::from_flat(d, flat)
}

/// {0} ∪ {±e_i}, the offsets of a cross.
pub fn cross_offsets(d: usize) -> PointSet {
    unit_vectors(d)
        .union(&PointSet::singleton(&LatticePoint::origin(d)))
        .expect("same dimension")
}

fn check_dimension(d: usize) -> Result<()> {
    if d == 0 {
        Err(Error::InvalidArgument("dimension must be at least 1".into()))
    } else {
        Ok(())
    }
}

/// (2d)^k, or a budget error if it exceeds [`LEVEL_BUDGET`].
pub fn level_size_guard(d: usize, k: u32) -> Result<u128> {
    let size = (2 * d as u128).checked_pow(k).filter(|s| *s <= LEVEL_BUDGET);
    size.ok_or(Error::BudgetExceeded {
        what: "fractal level size (2d)^k",
        requested: (2 * d as u128).checked_pow(k).unwrap_or(u128::MAX),
        limit: LEVEL_BUDGET,
    })
}

/// Truncation level ⌈log₂ r⌉ + 2 used for X_∞ ∩ [−r, r]^d.
pub fn truncation_level(r: u64) -> u32 {
    let ceil_log2 = if r <= 1 { 0 } else { 64 - (r - 1).leading_zeros() };
    ceil_log2 + 2
}

/// X_k by iterating X_k = {±e_i} + 2·X_{k−1} from X_0 = {0}.
pub fn build_xk(d: usize, k: u32) -> Result<FractalLevel> {
    check_dimension(d)?;
    level_size_guard(d, k)?;
    let units = unit_vectors(d);
    let mut points = PointSet::singleton(&LatticePoint::origin(d));
    for _ in 0..k {
        points = minkowski_sum(&units, &dilate(&points, 2)?)?;
    }
    Ok(FractalLevel { d, k, points })
}

/// X_k ∩ [−r, r]^d without materialising all of X_k.
///
/// A point ε + 2q lies in [−r, r]^d only if q lies in [−⌊(r+1)/2⌋, ⌊(r+1)/2⌋]^d,
/// so each level only needs the previous level clipped to that smaller cube.
/// The result is identical to `build_xk(d, k)` clipped to the cube.
pub fn build_xk_in_box(d: usize, k: u32, r: u64) -> Result<PointSet> {
    check_dimension(d)?;
    let mut radii = Vec::with_capacity(k as usize + 1);
    let mut rad = r;
    for _ in 0..=k {
        radii.push(rad);
        rad = rad / 2 + rad % 2;
    }
    radii.reverse();
    let units = unit_vectors(d);
    let mut points = PointSet::singleton(&LatticePoint::origin(d));
    for rad in radii.into_iter().skip(1) {
        let next = minkowski_sum(&units, &dilate(&points, 2)?)?;
        points = next.clip(&LatticeBox::centered(d, rad));
    }
    if k == 0 {
        points = points.clip(&LatticeBox::centered(d, r));
    }
    Ok(points)
}

/// X_∞ ∩ [−r, r]^d, taken from level ⌈log₂ r⌉ + 2 and checked against the next level.
pub fn build_xinf_box(d: usize, r: u64) -> Result<PointSet> {
    check_dimension(d)?;
    if r == 0 {
        return Ok(PointSet::empty(d));
    }
    let k = truncation_level(r);
    level_size_guard(d, k)?;
    let at_k = build_xk_in_box(d, k, r)?;
    let at_next = build_xk_in_box(d, k + 1, r)?;
    if at_k != at_next {
        return Err(Error::Unstable { radius: r });
    }
    Ok(at_k)
}

/// (X_∞ + {0, ±e_i}) ∩ [−r, r]^d.
pub fn build_xplus_box(d: usize, r: u64) -> Result<PointSet> {
    check_dimension(d)?;
    let inner = build_xinf_box(d, r + 1)?;
    let thick = minkowski_sum(&inner, &cross_offsets(d))?;
    Ok(thick.clip(&LatticeBox::centered(d, r)))
}

/// The 2d translates 2·X_{k−1} + ε, one per unit vector ε, in lexicographic order of ε.
pub fn level_translates(d: usize, k: u32) -> Result<Vec<(LatticePoint, PointSet)>> {
    if k == 0 {
        return Err(Error::InvalidArgument("level 0 has no translate decomposition".into()));
    }
    let prev = dilate(&build_xk(d, k - 1)?.points, 2)?;
    unit_vectors(d)
        .to_points()
        .into_iter()
        .map(|eps| {
            let t = prev.translate(&eps)?;
            Ok((eps, t))
        })
        .collect()
}
