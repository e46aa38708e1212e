//! Points of ℤ^d, the ℓ¹ and ℓ^∞ metrics, crosses, boxes and finite point sets.
//!
//! A [`PointSet`] is stored as one flat, lexicographically sorted buffer of
//! coordinates with stride `d`. Sorting is the canonical form, so equality,
//! hashing and serialization are all deterministic regardless of how the set
//! was built.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::error::{check_dim, Error, Result};

/// A point of ℤ^d.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct LatticePoint(Vec<i64>);

impl LatticePoint {
    pub fn new(coords: Vec<i64>) -> Result<Self> {
        if coords.is_empty() {
            return Err(Error::InvalidArgument("a lattice point needs d >= 1 coordinates".into()));
        }
        Ok(LatticePoint(coords))
    }

    pub fn origin(d: usize) -> Self {
        assert!(d >= 1, "dimension must be at least 1");
        LatticePoint(vec![0; d])
    }

    /// `sign · e_axis` with a zero-based axis.
    pub fn unit(d: usize, axis: usize, positive: bool) -> Self {
        assert!(axis < d, "axis {axis} out of range for d={d}");
        let mut coords = vec![0; d];
        coords[axis] = if positive { 1 } else { -1 };
        LatticePoint(coords)
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<i64> {
        self.0
    }

    pub fn checked_add(&self, other: &LatticePoint) -> Result<LatticePoint> {
        check_dim(self.dim(), other.dim())?;
        Ok(LatticePoint(add_coords(&self.0, &other.0)?))
    }

    pub fn checked_sub(&self, other: &LatticePoint) -> Result<LatticePoint> {
        check_dim(self.dim(), other.dim())?;
        let coords = self
            .0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b).ok_or(Error::Overflow))
            .collect::<Result<Vec<_>>>()?;
        Ok(LatticePoint(coords))
    }

    pub fn checked_scale(&self, c: i64) -> Result<LatticePoint> {
        Ok(LatticePoint(scale_coords(&self.0, c)?))
    }

    /// Euclidean inner product; saturates into an overflow error.
    pub fn dot(&self, other: &LatticePoint) -> Result<i64> {
        check_dim(self.dim(), other.dim())?;
        let mut acc: i128 = 0;
        for (a, b) in self.0.iter().zip(&other.0) {
            acc += *a as i128 * *b as i128;
        }
        i64::try_from(acc).map_err(|_| Error::Overflow)
    }
}

impl fmt::Display for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_coords(f, &self.0)
    }
}

impl FromStr for LatticePoint {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let coords = s
            .trim()
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<i64>()
                    .map_err(|e| Error::InvalidArgument(format!("bad coordinate {t:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        LatticePoint::new(coords)
    }
}

pub(crate) fn write_coords(f: &mut impl fmt::Write, coords: &[i64]) -> fmt::Result {
    for (i, c) in coords.iter().enumerate() {
        if i > 0 {
            f.write_char(',')?;
        }
        write!(f, "{c}")?;
    }
    Ok(())
}

pub fn format_coords(coords: &[i64]) -> String {
    let mut s = String::new();
    write_coords(&mut s, coords).expect("writing to a String cannot fail");
    s
}

pub(crate) fn add_coords(a: &[i64], b: &[i64]) -> Result<Vec<i64>> {
    a.iter()
        .zip(b)
        .map(|(x, y)| x.checked_add(*y).ok_or(Error::Overflow))
        .collect()
}

pub(crate) fn scale_coords(a: &[i64], c: i64) -> Result<Vec<i64>> {
    a.iter().map(|x| x.checked_mul(c).ok_or(Error::Overflow)).collect()
}

/// ℓ¹ distance Σ|a_i − b_i|.
pub fn manhattan(a: &LatticePoint, b: &LatticePoint) -> Result<u64> {
    check_dim(a.dim(), b.dim())?;
    let mut acc: u128 = 0;
    for (x, y) in a.coords().iter().zip(b.coords()) {
        acc += (*x as i128 - *y as i128).unsigned_abs();
    }
    u64::try_from(acc).map_err(|_| Error::Overflow)
}

/// ℓ^∞ distance max|a_i − b_i|.
pub fn max_dist(a: &LatticePoint, b: &LatticePoint) -> Result<u64> {
    check_dim(a.dim(), b.dim())?;
    max_dist_coords(a.coords(), b.coords())
}

pub(crate) fn max_dist_coords(a: &[i64], b: &[i64]) -> Result<u64> {
    let m = a
        .iter()
        .zip(b)
        .map(|(x, y)| (*x as i128 - *y as i128).unsigned_abs())
        .max()
        .unwrap_or(0);
    u64::try_from(m).map_err(|_| Error::Overflow)
}

/// ℓ^∞ norm of a coordinate slice, as u64 (|i64::MIN| fits).
pub(crate) fn max_norm(p: &[i64]) -> u64 {
    p.iter().map(|c| c.unsigned_abs()).max().unwrap_or(0)
}

/// The 2d+1 points {x} ∪ {x ± e_i}.
pub fn cross(x: &LatticePoint) -> Result<PointSet> {
    let mut set = neighbors_flat(x.coords())?;
    set.extend_from_slice(x.coords());
    Ok(PointSet::from_flat(x.dim(), set))
}

/// The 2d points {x ± e_i}.
pub fn neighbors(x: &LatticePoint) -> Result<PointSet> {
    Ok(PointSet::from_flat(x.dim(), neighbors_flat(x.coords())?))
}

fn neighbors_flat(x: &[i64]) -> Result<Vec<i64>> {
    let d = x.len();
    let mut out = Vec::with_capacity(2 * d * d);
    for axis in 0..d {
        for delta in [1i64, -1] {
            let start = out.len();
            out.extend_from_slice(x);
            out[start + axis] = x[axis].checked_add(delta).ok_or(Error::Overflow)?;
        }
    }
    Ok(out)
}

/// Sumset {a + b : a ∈ A, b ∈ B}.
pub fn minkowski_sum(a: &PointSet, b: &PointSet) -> Result<PointSet> {
    check_dim(a.dim(), b.dim())?;
    let d = a.dim();
    let parts = a
        .coords
        .par_chunks_exact(d)
        .map(|p| {
            let mut out = Vec::with_capacity(b.coords.len());
            for q in b.iter() {
                for (x, y) in p.iter().zip(q) {
                    out.push(x.checked_add(*y).ok_or(Error::Overflow)?);
                }
            }
            Ok(out)
        })
        .collect::<Result<Vec<Vec<i64>>>>()?;
    Ok(PointSet::from_flat(d, parts.concat()))
}

/// {c · a : a ∈ A} for c ≠ 0.
pub fn dilate(a: &PointSet, c: i64) -> Result<PointSet> {
    if c == 0 {
        return Err(Error::InvalidArgument("dilation factor must be nonzero".into()));
    }
    let coords = a
        .coords
        .par_iter()
        .map(|x| x.checked_mul(c).ok_or(Error::Overflow))
        .collect::<Result<Vec<_>>>()?;
    // Negative factors reverse the order, so re-canonicalise.
    if c > 0 {
        Ok(PointSet { dim: a.dim, coords })
    } else {
        Ok(PointSet::from_flat(a.dim, coords))
    }
}

/// Axis-aligned cube {p : δ(p, center) ≤ radius}.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeBox {
    center: LatticePoint,
    radius: u64,
}

impl LatticeBox {
    pub fn new(center: LatticePoint, radius: u64) -> Self {
        LatticeBox { center, radius }
    }

    pub fn centered(d: usize, radius: u64) -> Self {
        LatticeBox::new(LatticePoint::origin(d), radius)
    }

    pub fn dim(&self) -> usize {
        self.center.dim()
    }

    pub fn center(&self) -> &LatticePoint {
        &self.center
    }

    pub fn radius(&self) -> u64 {
        self.radius
    }

    pub fn contains(&self, p: &[i64]) -> bool {
        p.len() == self.dim()
            && p.iter()
                .zip(self.center.coords())
                .all(|(x, c)| (*x as i128 - *c as i128).unsigned_abs() <= self.radius as u128)
    }

    /// Same centre, radius reduced by `by`; `None` when nothing is left.
    pub fn shrink(&self, by: u64) -> Option<LatticeBox> {
        self.radius
            .checked_sub(by)
            .map(|radius| LatticeBox::new(self.center.clone(), radius))
    }

    /// Points whose whole cross lies in the box.
    pub fn interior(&self) -> Option<LatticeBox> {
        self.shrink(1)
    }

    pub fn side(&self) -> u128 {
        2 * self.radius as u128 + 1
    }

    /// Number of lattice points, if it fits in a u128.
    pub fn volume(&self) -> Option<u128> {
        let side = self.side();
        let mut v: u128 = 1;
        for _ in 0..self.dim() {
            v = v.checked_mul(side)?;
        }
        Some(v)
    }

    /// Per-axis inclusive bounds, failing if they leave the i64 range.
    pub fn bounds(&self) -> Result<Vec<(i64, i64)>> {
        let r = self.radius as i128;
        self.center
            .coords()
            .iter()
            .map(|c| {
                let lo = i64::try_from(*c as i128 - r).map_err(|_| Error::Overflow)?;
                let hi = i64::try_from(*c as i128 + r).map_err(|_| Error::Overflow)?;
                Ok((lo, hi))
            })
            .collect()
    }

    /// All points of the box in lexicographic order.
    pub fn points(&self) -> Result<BoxPoints> {
        let bounds = self.bounds()?;
        let current = bounds.iter().map(|(lo, _)| *lo).collect();
        Ok(BoxPoints {
            bounds,
            current: Some(current),
        })
    }

    pub fn translate(&self, by: &LatticePoint) -> Result<LatticeBox> {
        Ok(LatticeBox::new(self.center.checked_add(by)?, self.radius))
    }
}

/// Lexicographic odometer over a box.
pub struct BoxPoints {
    bounds: Vec<(i64, i64)>,
    current: Option<Vec<i64>>,
}

impl Iterator for BoxPoints {
    type Item = Vec<i64>;

    fn next(&mut self) -> Option<Vec<i64>> {
        let out = self.current.clone()?;
        let cur = self.current.as_mut().expect("checked above");
        let mut axis = cur.len();
        loop {
            if axis == 0 {
                self.current = None;
                break;
            }
            axis -= 1;
            if cur[axis] < self.bounds[axis].1 {
                cur[axis] += 1;
                break;
            }
            cur[axis] = self.bounds[axis].0;
        }
        Some(out)
    }
}

/// A finite subset of ℤ^d in canonical (sorted, deduplicated) form.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct PointSet {
    dim: usize,
    coords: Vec<i64>,
}

impl PointSet {
    pub fn empty(dim: usize) -> Self {
        assert!(dim >= 1, "dimension must be at least 1");
        PointSet { dim, coords: Vec::new() }
    }

    pub fn singleton(p: &LatticePoint) -> Self {
        PointSet {
            dim: p.dim(),
            coords: p.coords().to_vec(),
        }
    }

    /// Canonicalise a flat buffer of `d`-tuples.
    pub fn from_flat(dim: usize, coords: Vec<i64>) -> Self {
        assert!(dim >= 1, "dimension must be at least 1");
        assert_eq!(coords.len() % dim, 0, "flat buffer length must be a multiple of d");
        PointSet {
            dim,
            coords: canonicalize(dim, coords),
        }
    }

    pub fn from_points<I>(dim: usize, points: I) -> Result<Self>
    where
        I: IntoIterator<Item = LatticePoint>,
    {
        let mut flat = Vec::new();
        for p in points {
            check_dim(dim, p.dim())?;
            flat.extend_from_slice(p.coords());
        }
        Ok(PointSet::from_flat(dim, flat))
    }

    /// Builds from coordinates already in strictly increasing lexicographic order.
    pub(crate) fn from_sorted_flat(dim: usize, coords: Vec<i64>) -> Self {
        debug_assert!(coords.len().is_multiple_of(dim));
        debug_assert!(coords
            .chunks_exact(dim)
            .zip(coords.chunks_exact(dim).skip(1))
            .all(|(a, b)| a < b));
        PointSet { dim, coords }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.coords.len() / self.dim
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn as_flat(&self) -> &[i64] {
        &self.coords
    }

    pub fn point(&self, i: usize) -> &[i64] {
        &self.coords[i * self.dim..(i + 1) * self.dim]
    }

    /// Points in lexicographic order.
    pub fn iter(&self) -> std::slice::ChunksExact<'_, i64> {
        self.coords.chunks_exact(self.dim)
    }

    pub fn to_points(&self) -> Vec<LatticePoint> {
        self.iter().map(|p| LatticePoint(p.to_vec())).collect()
    }

    fn position(&self, p: &[i64]) -> std::result::Result<usize, usize> {
        let (mut lo, mut hi) = (0usize, self.len());
        while lo < hi {
            let mid = lo + (hi - lo) / 2;
            match self.point(mid).cmp(p) {
                Ordering::Less => lo = mid + 1,
                Ordering::Greater => hi = mid,
                Ordering::Equal => return Ok(mid),
            }
        }
        Err(lo)
    }

    pub fn contains(&self, p: &[i64]) -> bool {
        p.len() == self.dim && self.position(p).is_ok()
    }

    pub fn contains_point(&self, p: &LatticePoint) -> bool {
        self.contains(p.coords())
    }

    /// Restriction to a box; order is preserved so no re-sort happens.
    pub fn clip(&self, region: &LatticeBox) -> PointSet {
        let coords = self
            .iter()
            .filter(|p| region.contains(p))
            .flatten()
            .copied()
            .collect();
        PointSet { dim: self.dim, coords }
    }

    pub fn translate(&self, by: &LatticePoint) -> Result<PointSet> {
        check_dim(self.dim, by.dim())?;
        let shift = by.coords();
        let coords = self
            .coords
            .par_chunks_exact(self.dim)
            .flat_map_iter(|p| p.iter().zip(shift).map(|(x, s)| x.checked_add(*s).ok_or(Error::Overflow)))
            .collect::<Result<Vec<_>>>()?;
        // Translation is order preserving.
        Ok(PointSet { dim: self.dim, coords })
    }

    pub fn union(&self, other: &PointSet) -> Result<PointSet> {
        self.merge(other, |a, b| a || b)
    }

    pub fn intersection(&self, other: &PointSet) -> Result<PointSet> {
        self.merge(other, |a, b| a && b)
    }

    pub fn difference(&self, other: &PointSet) -> Result<PointSet> {
        self.merge(other, |a, b| a && !b)
    }

    pub fn symmetric_difference(&self, other: &PointSet) -> Result<PointSet> {
        self.merge(other, |a, b| a != b)
    }

    pub fn is_subset(&self, other: &PointSet) -> bool {
        self.dim == other.dim && self.iter().all(|p| other.contains(p))
    }

    pub fn is_disjoint(&self, other: &PointSet) -> bool {
        self.dim == other.dim && self.iter().all(|p| !other.contains(p))
    }

    /// Linear merge of two sorted sets keeping points selected by `keep(in_self, in_other)`.
    fn merge(&self, other: &PointSet, keep: impl Fn(bool, bool) -> bool) -> Result<PointSet> {
        check_dim(self.dim, other.dim)?;
        let mut out = Vec::new();
        let (mut i, mut j) = (0, 0);
        let (n, m) = (self.len(), other.len());
        while i < n || j < m {
            let ord = match (i < n, j < m) {
                (true, true) => self.point(i).cmp(other.point(j)),
                (true, false) => Ordering::Less,
                _ => Ordering::Greater,
            };
            let (p, in_a, in_b) = match ord {
                Ordering::Less => {
                    i += 1;
                    (self.point(i - 1), true, false)
                }
                Ordering::Greater => {
                    j += 1;
                    (other.point(j - 1), false, true)
                }
                Ordering::Equal => {
                    i += 1;
                    j += 1;
                    (self.point(i - 1), true, true)
                }
            };
            if keep(in_a, in_b) {
                out.extend_from_slice(p);
            }
        }
        Ok(PointSet { dim: self.dim, coords: out })
    }
}

fn canonicalize(dim: usize, coords: Vec<i64>) -> Vec<i64> {
    match dim {
        1 => {
            let mut c = coords;
            c.par_sort_unstable();
            c.dedup();
            c
        }
        2 => canonicalize_fixed::<2>(coords),
        3 => canonicalize_fixed::<3>(coords),
        4 => canonicalize_fixed::<4>(coords),
        _ => canonicalize_general(dim, coords),
    }
}

fn canonicalize_fixed<const D: usize>(coords: Vec<i64>) -> Vec<i64> {
    let mut pts: Vec<[i64; D]> = coords
        .chunks_exact(D)
        .map(|c| c.try_into().expect("chunk has length D"))
        .collect();
    drop(coords);
    pts.par_sort_unstable();
    pts.dedup();
    pts.into_iter().flatten().collect()
}

fn canonicalize_general(dim: usize, coords: Vec<i64>) -> Vec<i64> {
    let n = coords.len() / dim;
    let key = |i: usize| &coords[i * dim..(i + 1) * dim];
    let mut idx: Vec<usize> = (0..n).collect();
    idx.par_sort_unstable_by(|&a, &b| key(a).cmp(key(b)));
    let mut out: Vec<i64> = Vec::with_capacity(coords.len());
    let mut last: Option<usize> = None;
    for i in idx {
        if last.is_none_or(|l| key(l) != key(i)) {
            out.extend_from_slice(key(i));
            last = Some(i);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(c: &[i64]) -> LatticePoint {
        LatticePoint::new(c.to_vec()).unwrap()
    }

    fn set(d: usize, pts: &[&[i64]]) -> PointSet {
        PointSet::from_points(d, pts.iter().map(|c| pt(c))).unwrap()
    }

    #[test]
    fn manhattan_examples() {
        assert_eq!(manhattan(&pt(&[0, 0]), &pt(&[0, 0])).unwrap(), 0);
        assert_eq!(manhattan(&pt(&[1, 0]), &pt(&[0, 1])).unwrap(), 2);
        assert_eq!(manhattan(&pt(&[3, -2, 1]), &pt(&[0, 0, 0])).unwrap(), 6);
        assert!(matches!(
            manhattan(&pt(&[1]), &pt(&[1, 2])),
            Err(Error::DimensionMismatch { left: 1, right: 2 })
        ));
    }

    #[test]
    fn max_dist_examples() {
        assert_eq!(max_dist(&pt(&[0, 0]), &pt(&[0, 0])).unwrap(), 0);
        assert_eq!(max_dist(&pt(&[3, -2]), &pt(&[0, 0])).unwrap(), 3);
        assert_eq!(max_dist(&pt(&[1, 1]), &pt(&[-1, 2])).unwrap(), 2);
        assert!(max_dist(&pt(&[0, 0, 0]), &pt(&[0, 0])).is_err());
    }

    #[test]
    fn extreme_distances_do_not_wrap() {
        let a = pt(&[i64::MIN]);
        let b = pt(&[i64::MAX]);
        assert_eq!(max_dist(&a, &b).unwrap(), u64::MAX);
        assert!(matches!(manhattan(&pt(&[i64::MIN, i64::MIN]), &pt(&[i64::MAX, i64::MAX])), Err(Error::Overflow)));
    }

    #[test]
    fn cross_examples() {
        assert_eq!(cross(&pt(&[0])).unwrap(), set(1, &[&[-1], &[0], &[1]]));
        let c = cross(&pt(&[0, 0])).unwrap();
        assert_eq!(c, set(2, &[&[0, 0], &[1, 0], &[-1, 0], &[0, 1], &[0, -1]]));
        let shifted = cross(&pt(&[5, -3])).unwrap();
        assert_eq!(shifted, c.translate(&pt(&[5, -3])).unwrap());
    }

    #[test]
    fn cross_overflow_is_reported() {
        assert!(matches!(cross(&pt(&[i64::MAX, 0])), Err(Error::Overflow)));
    }

    #[test]
    fn neighbor_examples() {
        assert_eq!(neighbors(&pt(&[0])).unwrap(), set(1, &[&[-1], &[1]]));
        assert_eq!(neighbors(&pt(&[0, 0])).unwrap().len(), 4);
        let x = pt(&[1, 1, 1]);
        let n = neighbors(&x).unwrap();
        assert_eq!(n.len(), 6);
        for p in n.to_points() {
            assert_eq!(manhattan(&p, &x).unwrap(), 1);
        }
    }

    #[test]
    fn minkowski_examples() {
        let b = set(2, &[&[3, 1], &[-2, 0]]);
        assert_eq!(minkowski_sum(&set(2, &[&[0, 0]]), &b).unwrap(), b);
        let s = minkowski_sum(&set(1, &[&[-1], &[1]]), &set(1, &[&[-2], &[2]])).unwrap();
        assert_eq!(s, set(1, &[&[-3], &[-1], &[1], &[3]]));
    }

    #[test]
    fn minkowski_units_plus_doubled_units() {
        let units = set(2, &[&[1, 0], &[-1, 0], &[0, 1], &[0, -1]]);
        let doubled = dilate(&units, 2).unwrap();
        let s = minkowski_sum(&units, &doubled).unwrap();
        // Brute force over the 4 x 4 pairs, collapsing duplicates by hand.
        let mut expect = Vec::new();
        for a in [[1, 0], [-1, 0], [0, 1], [0, -1]] {
            for b in [[2, 0], [-2, 0], [0, 2], [0, -2]] {
                let p = [a[0] + b[0], a[1] + b[1]];
                if !expect.contains(&p) {
                    expect.push(p);
                }
            }
        }
        assert_eq!(expect.len(), 16);
        assert_eq!(s.len(), 16);
        for p in expect {
            assert!(s.contains(&p));
        }
        for p in [[3, 0], [1, 0], [1, 2], [-1, 2]] {
            assert!(s.contains(&p));
        }
    }

    #[test]
    fn dilate_examples() {
        let a = set(2, &[&[1, 2], &[-3, 0]]);
        assert_eq!(dilate(&a, 1).unwrap(), a);
        assert_eq!(dilate(&set(1, &[&[1], &[-1]]), 2).unwrap(), set(1, &[&[2], &[-2]]));
        let neg = dilate(&a, -1).unwrap();
        assert_eq!(neg, set(2, &[&[-1, -2], &[3, 0]]));
        assert!(dilate(&a, 0).is_err());
        assert!(matches!(dilate(&set(1, &[&[i64::MAX]]), 2), Err(Error::Overflow)));
    }

    #[test]
    fn box_interior_and_points() {
        let b = LatticeBox::new(pt(&[1, -1]), 1);
        let pts: Vec<_> = b.points().unwrap().collect();
        assert_eq!(pts.len(), 9);
        assert_eq!(pts[0], vec![0, -2]);
        assert_eq!(pts[8], vec![2, 0]);
        assert!(pts.windows(2).all(|w| w[0] < w[1]));
        let inner = b.interior().unwrap();
        assert_eq!(inner.radius(), 0);
        assert!(inner.contains(&[1, -1]));
        assert!(LatticeBox::centered(2, 0).interior().is_none());
        assert_eq!(LatticeBox::centered(3, 2).volume(), Some(125));
    }

    #[test]
    fn set_algebra() {
        let a = set(1, &[&[1], &[2], &[3]]);
        let b = set(1, &[&[2], &[4]]);
        assert_eq!(a.union(&b).unwrap(), set(1, &[&[1], &[2], &[3], &[4]]));
        assert_eq!(a.intersection(&b).unwrap(), set(1, &[&[2]]));
        assert_eq!(a.difference(&b).unwrap(), set(1, &[&[1], &[3]]));
        assert_eq!(a.symmetric_difference(&b).unwrap(), set(1, &[&[1], &[3], &[4]]));
        assert!(set(1, &[&[2]]).is_subset(&a));
        assert!(a.union(&PointSet::empty(2)).is_err());
    }

    #[test]
    fn high_dimension_canonical_order() {
        let s = PointSet::from_flat(5, vec![1, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, -1]);
        assert_eq!(s.len(), 3);
        assert_eq!(s.point(0), &[0, 0, 0, 0, -1]);
        assert_eq!(s.point(2), &[1, 0, 0, 0, 0]);
    }

    #[test]
    fn point_parse_round_trip() {
        let p: LatticePoint = "3,0,-1".parse().unwrap();
        assert_eq!(p.coords(), &[3, 0, -1]);
        assert_eq!(p.to_string(), "3,0,-1");
        assert!("".parse::<LatticePoint>().is_err());
        assert!("1,,2".parse::<LatticePoint>().is_err());
    }
}
