//! Exhaustive predicate checks over a box.
//!
//! Only points whose whole stencil lies inside the checked region are judged:
//! the interior (radius − 1) for the cross-shaped predicates and radius − 2
//! for the step-two stencil. Each check returns the judged points where the
//! predicate fails.
//!
//! Two evaluation strategies exist and must agree exactly: a dense bitmap of
//! the region scanned point by point, and a sparse pass that only visits the
//! stencil footprint of the set.

use std::collections::HashMap;
use std::fmt;
use std::io::Write;
use std::str::FromStr;

use rayon::prelude::*;

use crate::error::{check_dim, Error, Result};
use crate::format::write_points;
use crate::lattice::{LatticeBox, PointSet};

/// Bitmaps larger than this many cells are never allocated.
pub const DENSE_CELL_LIMIT: u128 = 1 << 30;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Predicate {
    /// Odd number of neighbours in X.
    Harmonic,
    /// The cross meets X in exactly one point.
    Cross,
    /// The cross meets X in exactly one point, and that point is an arm.
    Supportive,
    /// Odd number of points of X among y ± 2e_i.
    Harmonic2,
}

impl Predicate {
    pub const ALL: [Predicate; 4] = [Predicate::Harmonic, Predicate::Cross, Predicate::Supportive, Predicate::Harmonic2];

    pub fn name(self) -> &'static str {
        match self {
            Predicate::Harmonic => "harmonic",
            Predicate::Cross => "cross",
            Predicate::Supportive => "supportive",
            Predicate::Harmonic2 => "harmonic2",
        }
    }

    /// Arm length of the stencil, which is also the margin kept from the region boundary.
    fn reach(self) -> u64 {
        match self {
            Predicate::Harmonic2 => 2,
            _ => 1,
        }
    }

    fn fails(self, center: bool, arms: u32) -> bool {
        match self {
            Predicate::Harmonic | Predicate::Harmonic2 => arms % 2 == 1,
            Predicate::Cross => u32::from(center) + arms == 1,
            Predicate::Supportive => !center && arms == 1,
        }
    }
}

impl fmt::Display for Predicate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Predicate {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Predicate::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown predicate {s:?}")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    Auto,
    Dense,
    Footprint,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ViolationReport {
    pub predicate: Predicate,
    pub witnesses: PointSet,
    pub checked_region: LatticeBox,
}

impl ViolationReport {
    pub fn is_clean(&self) -> bool {
        self.witnesses.is_empty()
    }

    pub fn header(&self) -> String {
        format!(
            "# predicate={} region_center={} region_radius={} violations={}",
            self.predicate,
            self.checked_region.center(),
            self.checked_region.radius(),
            self.witnesses.len()
        )
    }

    pub fn write<W: Write>(&self, w: &mut W) -> Result<()> {
        writeln!(w, "{}", self.header())?;
        write_points(w, &self.witnesses)
    }
}

pub fn harmonic_violations(x: &PointSet, region: &LatticeBox) -> Result<ViolationReport> {
    check(Predicate::Harmonic, x, region)
}

pub fn cross_violations(x: &PointSet, region: &LatticeBox) -> Result<ViolationReport> {
    check(Predicate::Cross, x, region)
}

pub fn supportive_violations(x: &PointSet, region: &LatticeBox) -> Result<ViolationReport> {
    check(Predicate::Supportive, x, region)
}

pub fn harmonic2_violations(x: &PointSet, region: &LatticeBox) -> Result<ViolationReport> {
    check(Predicate::Harmonic2, x, region)
}

pub fn check(predicate: Predicate, x: &PointSet, region: &LatticeBox) -> Result<ViolationReport> {
    check_with(predicate, x, region, Strategy::Auto)
}

pub fn check_with(predicate: Predicate, x: &PointSet, region: &LatticeBox, strategy: Strategy) -> Result<ViolationReport> {
    check_dim(x.dim(), region.dim())?;
    // Fail early on regions whose corners leave the i64 range.
    region.bounds()?;
    let d = x.dim();
    let report = |witnesses| ViolationReport {
        predicate,
        witnesses,
        checked_region: region.clone(),
    };
    let Some(judged) = region.shrink(predicate.reach()) else {
        return Ok(report(PointSet::empty(d)));
    };
    let inside = x.clip(region);
    let dense_cells = region.volume().unwrap_or(u128::MAX);
    let strategy = match strategy {
        Strategy::Auto => {
            let footprint = inside.len() as u128 * (2 * d as u128 + 1);
            if dense_cells > DENSE_CELL_LIMIT || footprint < judged.volume().unwrap_or(u128::MAX) {
                Strategy::Footprint
            } else {
                Strategy::Dense
            }
        }
        s => s,
    };
    let witnesses = match strategy {
        Strategy::Dense => {
            if dense_cells > DENSE_CELL_LIMIT {
                return Err(Error::BudgetExceeded {
                    what: "dense region cells",
                    requested: dense_cells,
                    limit: DENSE_CELL_LIMIT,
                });
            }
            dense_scan(predicate, &inside, region)
        }
        _ => footprint_scan(predicate, &inside, &judged)?,
    };
    Ok(report(witnesses))
}

fn dense_scan(predicate: Predicate, inside: &PointSet, region: &LatticeBox) -> PointSet {
    let d = inside.dim();
    let r = region.radius() as usize;
    let side = 2 * r + 1;
    let center = region.center().coords();
    let mut strides = vec![1usize; d];
    for i in (0..d.saturating_sub(1)).rev() {
        strides[i] = strides[i + 1] * side;
    }
    let cells = strides[0] * side;
    let mut bits = vec![0u64; cells.div_ceil(64)];
    for p in inside.iter() {
        let idx: usize = p
            .iter()
            .zip(center)
            .zip(&strides)
            .map(|((x, c), s)| (x - c + r as i64) as usize * s)
            .sum();
        bits[idx / 64] |= 1 << (idx % 64);
    }
    let get = |idx: usize| bits[idx / 64] >> (idx % 64) & 1 == 1;
    let reach = predicate.reach() as usize;
    let (lo, hi) = (reach, side - 1 - reach);
    let arm_offsets: Vec<usize> = strides.iter().map(|s| s * reach).collect();

    let slabs: Vec<Vec<i64>> = (lo..=hi)
        .into_par_iter()
        .map(|first| {
            let mut out = Vec::new();
            let mut local = vec![lo; d];
            local[0] = first;
            loop {
                let idx: usize = local.iter().zip(&strides).map(|(l, s)| l * s).sum();
                let mut arms = 0u32;
                for off in &arm_offsets {
                    arms += u32::from(get(idx + off)) + u32::from(get(idx - off));
                }
                if predicate.fails(get(idx), arms) {
                    out.extend(local.iter().zip(center).map(|(l, c)| c + *l as i64 - r as i64));
                }
                // Odometer over axes 1..d.
                let mut axis = d;
                loop {
                    axis -= 1;
                    if axis == 0 {
                        return out;
                    }
                    if local[axis] < hi {
                        local[axis] += 1;
                        break;
                    }
                    local[axis] = lo;
                }
            }
        })
        .collect();
    // Slabs come out in increasing first coordinate and each is lexicographic.
    PointSet::from_sorted_flat(d, slabs.concat())
}

fn footprint_scan(predicate: Predicate, inside: &PointSet, judged: &LatticeBox) -> Result<PointSet> {
    let d = inside.dim();
    let reach = predicate.reach() as i64;
    let mut tally: HashMap<Vec<i64>, (bool, u32)> = HashMap::new();
    let mut y = vec![0i64; d];
    for x in inside.iter() {
        if judged.contains(x) {
            tally.entry(x.to_vec()).or_default().0 = true;
        }
        for axis in 0..d {
            for delta in [reach, -reach] {
                y.copy_from_slice(x);
                y[axis] = y[axis].checked_add(delta).ok_or(Error::Overflow)?;
                if judged.contains(&y) {
                    tally.entry(y.clone()).or_default().1 += 1;
                }
            }
        }
    }
    let flat: Vec<i64> = tally
        .into_iter()
        .filter(|(_, (center, arms))| predicate.fails(*center, *arms))
        .flat_map(|(p, _)| p)
        .collect();
    Ok(PointSet::from_flat(d, flat))
}
