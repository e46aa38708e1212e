//! Walks through supportive sets.
//!
//! In a supportive set X, the cross centred at x + e meets X in x and in at
//! least one more point, which is x + e, x + 2e or x + e ± e′. Repeating that
//! single step moves a point of X steadily along e; stopping once the
//! e-component of the displacement reaches r gives a point y ∈ X with
//! (y − x, e) ∈ {r, r + 1} and ‖y − (x + re)‖₁ ≤ r.
//!
//! Chaining such walks with radii r_j = 2^{j+2} − 2 along a direction
//! sequence a_0 … a_{n−1} produces the waypoints Q_0 … Q_n, whose endpoints
//! are compared across sequences by [`collision_census`].

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::io::Write;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{check_dim, Error, Result};
use crate::lattice::{manhattan, LatticeBox, LatticePoint, PointSet};

/// r_j = 2^{j+2} − 2.
pub fn radius_schedule(j: u32) -> u64 {
    (1u64 << (j + 2)) - 2
}

/// Index m ∈ [1, 2d] naming ε_m = (−1)^{m+1} e_{⌈m/2⌉}.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DirectionIndex(u32);

impl DirectionIndex {
    pub fn new(m: u32, d: usize) -> Result<Self> {
        if m == 0 || m as usize > 2 * d {
            return Err(Error::InvalidArgument(format!("direction index {m} outside [1, {}]", 2 * d)));
        }
        Ok(DirectionIndex(m))
    }

    /// Index of a unit vector ±e_i.
    pub fn from_unit(e: &LatticePoint) -> Result<Self> {
        let nonzero: Vec<(usize, i64)> = e.coords().iter().copied().enumerate().filter(|(_, c)| *c != 0).collect();
        match nonzero.as_slice() {
            [(axis, 1)] => Ok(DirectionIndex(2 * *axis as u32 + 1)),
            [(axis, -1)] => Ok(DirectionIndex(2 * *axis as u32 + 2)),
            _ => Err(Error::InvalidArgument(format!("{e} is not a unit vector"))),
        }
    }

    pub fn get(self) -> u32 {
        self.0
    }

    /// Zero-based coordinate axis.
    pub fn axis(self) -> usize {
        ((self.0 - 1) / 2) as usize
    }

    pub fn is_positive(self) -> bool {
        self.0 % 2 == 1
    }

    pub fn sign(self) -> i64 {
        if self.is_positive() {
            1
        } else {
            -1
        }
    }

    pub fn vector(self, d: usize) -> LatticePoint {
        LatticePoint::unit(d, self.axis(), self.is_positive())
    }

    /// Same axis, opposite sign.
    pub fn opposes(self, other: DirectionIndex) -> bool {
        self != other && self.axis() == other.axis()
    }

    fn component(self, v: &[i64]) -> i64 {
        self.sign() * v[self.axis()]
    }
}

impl fmt::Display for DirectionIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A direction sequence in which entries fewer than `k` positions apart use different axes.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GoodSequence {
    entries: Vec<DirectionIndex>,
    k: usize,
}

pub fn is_k_good(entries: &[DirectionIndex], k: usize) -> bool {
    entries.iter().enumerate().all(|(i, a)| {
        entries[i + 1..]
            .iter()
            .take(k.saturating_sub(1))
            .all(|b| a.axis() != b.axis())
    })
}

impl GoodSequence {
    pub fn new(entries: Vec<DirectionIndex>, k: usize) -> Result<Self> {
        if !is_k_good(&entries, k) {
            let s: Vec<String> = entries.iter().map(|e| e.to_string()).collect();
            return Err(Error::InvalidArgument(format!("sequence {} is not {k}-good", s.join(":"))));
        }
        Ok(GoodSequence { entries, k })
    }

    pub fn from_indices(indices: &[u32], d: usize, k: usize) -> Result<Self> {
        let entries = indices
            .iter()
            .map(|m| DirectionIndex::new(*m, d))
            .collect::<Result<Vec<_>>>()?;
        GoodSequence::new(entries, k)
    }

    pub fn entries(&self) -> &[DirectionIndex] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Position of the first entry where the two sequences differ.
    pub fn first_difference(&self, other: &GoodSequence) -> Option<usize> {
        self.entries.iter().zip(&other.entries).position(|(a, b)| a != b)
    }
}

impl fmt::Display for GoodSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                f.write_str(":")?;
            }
            write!(f, "{e}")?;
        }
        Ok(())
    }
}

/// Result of one long walk: the end point y and A = y − x − r·e.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LongStep {
    pub end: LatticePoint,
    pub offset: LatticePoint,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WalkRecord {
    pub start: LatticePoint,
    pub sequence: GoodSequence,
    /// r_{n−m} used for the m-th leg.
    pub radii: Vec<u64>,
    /// Q_0 … Q_n.
    pub waypoints: Vec<LatticePoint>,
    /// (Q_n − x, ε_{a_0}); 0 for the empty sequence.
    pub psi: i64,
}

impl WalkRecord {
    pub fn endpoint(&self) -> &LatticePoint {
        self.waypoints.last().expect("waypoints always contain the start")
    }
}

/// A finite set together with the box inside which it is trusted to be the whole story.
pub struct Walker<'a> {
    set: &'a PointSet,
    region: LatticeBox,
}

impl<'a> Walker<'a> {
    pub fn new(set: &'a PointSet, region: LatticeBox) -> Result<Self> {
        check_dim(set.dim(), region.dim())?;
        Ok(Walker { set, region })
    }

    pub fn dim(&self) -> usize {
        self.set.dim()
    }

    pub fn set(&self) -> &PointSet {
        self.set
    }

    pub fn region(&self) -> &LatticeBox {
        &self.region
    }

    /// A point of X ∩ cross(x + e) other than x.
    ///
    /// Candidates are tried in the order x + 2e, x + e, then x + e + ε_m for
    /// increasing m, skipping the two directions along e.
    pub fn step(&self, x: &LatticePoint, e: DirectionIndex) -> Result<LatticePoint> {
        check_dim(self.dim(), x.dim())?;
        if !self.set.contains_point(x) {
            return Err(Error::InvalidArgument(format!("walk start {x} is not in the set")));
        }
        let d = self.dim();
        let ev = e.vector(d);
        let center = x.checked_add(&ev)?;
        let interior = self.region.interior();
        if !interior.is_some_and(|b| b.contains(center.coords())) {
            return Err(Error::RegionTooSmall(format!(
                "cross centred at {center} leaves the trusted region (centre {}, radius {})",
                self.region.center(),
                self.region.radius()
            )));
        }
        let forward = center.checked_add(&ev)?;
        if self.set.contains_point(&forward) {
            return Ok(forward);
        }
        if self.set.contains_point(&center) {
            return Ok(center);
        }
        for m in 1..=2 * d as u32 {
            let side = DirectionIndex(m);
            if side.axis() == e.axis() {
                continue;
            }
            let cand = center.checked_add(&side.vector(d))?;
            if self.set.contains_point(&cand) {
                return Ok(cand);
            }
        }
        Err(Error::SupportivenessBreach { at: center })
    }

    /// Every point visited while walking from x until the e-component reaches r.
    pub fn walk_path(&self, x: &LatticePoint, e: DirectionIndex, r: u64) -> Result<Vec<LatticePoint>> {
        if r == 0 {
            return Err(Error::InvalidArgument("walk distance must be positive".into()));
        }
        let target = i64::try_from(r).map_err(|_| Error::Overflow)?;
        let mut path = vec![x.clone()];
        let mut cur = x.clone();
        while e.component(cur.checked_sub(x)?.coords()) < target {
            cur = self.step(&cur, e)?;
            path.push(cur.clone());
        }
        Ok(path)
    }

    pub fn walk_to_distance(&self, x: &LatticePoint, e: DirectionIndex, r: u64) -> Result<LongStep> {
        let path = self.walk_path(x, e, r)?;
        let end = path.last().expect("path contains the start").clone();
        let shift = e.vector(self.dim()).checked_scale(i64::try_from(r).map_err(|_| Error::Overflow)?)?;
        let offset = end.checked_sub(x)?.checked_sub(&shift)?;
        Ok(LongStep { end, offset })
    }

    /// Q_{m+1} = P_{a_m}(Q_m, r_{n−m}) starting from Q_0 = x.
    pub fn q_walk(&self, x: &LatticePoint, sequence: &GoodSequence) -> Result<WalkRecord> {
        let n = sequence.len() as u32;
        let mut waypoints = vec![x.clone()];
        let mut radii = Vec::with_capacity(n as usize);
        for (m, a) in sequence.entries().iter().enumerate() {
            let r = radius_schedule(n - m as u32);
            let next = self.walk_to_distance(waypoints.last().expect("nonempty"), *a, r)?.end;
            radii.push(r);
            waypoints.push(next);
        }
        let psi = match sequence.entries().first() {
            Some(a0) => a0.component(waypoints.last().expect("nonempty").checked_sub(x)?.coords()),
            None => 0,
        };
        Ok(WalkRecord {
            start: x.clone(),
            sequence: sequence.clone(),
            radii,
            waypoints,
            psi,
        })
    }
}

/// One random long-walk trial and the quantities its guarantees speak about.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lemma42Trial {
    pub start: LatticePoint,
    pub direction: DirectionIndex,
    pub r: u64,
    pub end: LatticePoint,
    pub offset: LatticePoint,
    /// (y − x, e).
    pub e_component: i64,
    /// ‖y − (x + re)‖₁.
    pub manhattan_to_target: u64,
    /// (A, e).
    pub offset_along: i64,
    /// ‖A‖₁.
    pub offset_norm: u64,
    pub steps: usize,
    /// Distance to x + re never grew while the e-component was below r.
    pub monotone: bool,
}

impl Lemma42Trial {
    pub fn holds(&self) -> bool {
        let r = self.r as i64;
        (self.e_component == r || self.e_component == r + 1)
            && self.manhattan_to_target <= self.r
            && (self.offset_along == 0 || self.offset_along == 1)
            && self.offset_norm <= self.r
            && self.steps as u64 <= self.r
            && self.monotone
    }
}

fn run_trial(walker: &Walker<'_>, x: &LatticePoint, e: DirectionIndex, r: u64) -> Result<Lemma42Trial> {
    let d = walker.dim();
    let path = walker.walk_path(x, e, r)?;
    let target = x.checked_add(&e.vector(d).checked_scale(r as i64)?)?;
    let mut monotone = true;
    for pair in path.windows(2) {
        let before = e.component(pair[0].checked_sub(x)?.coords());
        if before < r as i64 && manhattan(&pair[1], &target)? > manhattan(&pair[0], &target)? {
            monotone = false;
        }
    }
    let end = path.last().expect("nonempty").clone();
    let offset = end.checked_sub(&target)?;
    Ok(Lemma42Trial {
        start: x.clone(),
        direction: e,
        r,
        e_component: e.component(end.checked_sub(x)?.coords()),
        manhattan_to_target: manhattan(&end, &target)?,
        offset_along: e.component(offset.coords()),
        offset_norm: manhattan(&offset, &LatticePoint::origin(d))?,
        steps: path.len() - 1,
        monotone,
        end,
        offset,
    })
}

/// Seeded random long walks: starts drawn from X within `start_radius` of the
/// region centre, directions uniform in [1, 2d], distances uniform in [1, max_r].
pub fn lemma42_trials(walker: &Walker<'_>, trials: usize, max_r: u64, start_radius: u64, seed: u64) -> Result<Vec<Lemma42Trial>> {
    if max_r == 0 {
        return Err(Error::InvalidArgument("max_r must be positive".into()));
    }
    let d = walker.dim();
    let starts = walker
        .set()
        .clip(&LatticeBox::new(walker.region().center().clone(), start_radius));
    if starts.is_empty() {
        return Err(Error::InvalidArgument(format!("no set points within {start_radius} of the region centre")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let plan: Vec<(LatticePoint, DirectionIndex, u64)> = (0..trials)
        .map(|_| {
            let x = LatticePoint::new(starts.point(rng.gen_range(0..starts.len())).to_vec()).expect("d >= 1");
            let e = DirectionIndex(rng.gen_range(1..=2 * d as u32));
            let r = rng.gen_range(1..=max_r);
            (x, e, r)
        })
        .collect();
    plan.par_iter().map(|(x, e, r)| run_trial(walker, x, *e, *r)).collect()
}

pub fn write_trials_csv<W: Write>(w: &mut W, trials: &[Lemma42Trial]) -> Result<()> {
    {
        let mut csv = csv::Writer::from_writer(&mut *w);
        csv.write_record(["start", "direction", "r", "end", "e_component", "manhattan_to_target", "holds"])
            .map_err(csv_err)?;
        for t in trials {
            csv.write_record([
                t.start.to_string(),
                t.direction.to_string(),
                t.r.to_string(),
                t.end.to_string(),
                t.e_component.to_string(),
                t.manhattan_to_target.to_string(),
                t.holds().to_string(),
            ])
            .map_err(csv_err)?;
        }
        csv.flush()?;
    }
    let failed = trials.iter().filter(|t| !t.holds()).count();
    writeln!(w, "# trials={} failed={}", trials.len(), failed)?;
    Ok(())
}

fn csv_err(e: csv::Error) -> Error {
    Error::Io(std::io::Error::other(e))
}

/// All k-good sequences of length n over [1, 2d] in lexicographic order, or
/// `None` if there are more than `limit`.
pub fn enumerate_good_sequences(d: usize, n: usize, k: usize, limit: u64) -> Option<Vec<GoodSequence>> {
    fn extend(
        d: usize,
        n: usize,
        k: usize,
        limit: u64,
        prefix: &mut Vec<DirectionIndex>,
        out: &mut Vec<GoodSequence>,
    ) -> bool {
        if prefix.len() == n {
            if out.len() as u64 >= limit {
                return false;
            }
            out.push(GoodSequence { entries: prefix.clone(), k });
            return true;
        }
        for m in 1..=2 * d as u32 {
            let cand = DirectionIndex(m);
            let window = prefix.len().saturating_sub(k.saturating_sub(1));
            if prefix[window..].iter().any(|p| p.axis() == cand.axis()) {
                continue;
            }
            prefix.push(cand);
            let ok = extend(d, n, k, limit, prefix, out);
            prefix.pop();
            if !ok {
                return false;
            }
        }
        true
    }
    let mut out = Vec::new();
    extend(d, n, k, limit, &mut Vec::with_capacity(n), &mut out).then_some(out)
}

/// Up to `count` distinct k-good sequences drawn by rejection from uniform
/// index strings, returned in lexicographic order.
pub fn sample_good_sequences(d: usize, n: usize, k: usize, count: u64, seed: u64) -> Vec<GoodSequence> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut seen: BTreeSet<Vec<DirectionIndex>> = BTreeSet::new();
    let max_attempts = count.saturating_mul(1000).max(10_000);
    let mut attempts = 0u64;
    while (seen.len() as u64) < count && attempts < max_attempts {
        attempts += 1;
        let cand: Vec<DirectionIndex> = (0..n).map(|_| DirectionIndex(rng.gen_range(1..=2 * d as u32))).collect();
        if is_k_good(&cand, k) {
            seen.insert(cand);
        }
    }
    seen.into_iter().map(|entries| GoodSequence { entries, k }).collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusConfig {
    pub n: usize,
    pub k: usize,
    /// Full enumeration when at most this many sequences exist, otherwise this many samples.
    pub sample_budget: u64,
    pub seed: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusEntry {
    pub sequence: GoodSequence,
    pub endpoint: LatticePoint,
    pub psi: i64,
}

/// Two sequences with the same endpoint; indices point into [`Census::entries`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CollidingPair {
    pub first: usize,
    pub second: usize,
    /// The first differing entries name opposite directions on one axis.
    pub opposing_start: bool,
}

/// Sequences sharing one endpoint, reduced to their distinct first entries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CollisionClass {
    pub endpoint: LatticePoint,
    pub starts: Vec<DirectionIndex>,
    /// Σ |Ψ| over the distinct first entries.
    pub psi_sum: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Census {
    pub start: LatticePoint,
    pub config: CensusConfig,
    pub enumerated: bool,
    /// Sorted by endpoint, then by sequence.
    pub entries: Vec<CensusEntry>,
    pub distinct: usize,
    pub max_multiplicity: usize,
    pub colliding_pairs: Vec<CollidingPair>,
    /// Colliding pairs whose first difference is opposing; always a contract violation.
    pub opposing_start_collisions: usize,
    /// Classes with at least two distinct first entries.
    pub distinct_start_classes: Vec<CollisionClass>,
    /// 4·r_n.
    pub psi_bound: u64,
}

impl Census {
    pub fn max_class_psi_sum(&self) -> u64 {
        self.distinct_start_classes.iter().map(|c| c.psi_sum).max().unwrap_or(0)
    }

    pub fn class_bound_violations(&self) -> usize {
        self.distinct_start_classes.iter().filter(|c| c.psi_sum > self.psi_bound).count()
    }

    /// No opposing-start collision and every class within the Ψ bound.
    pub fn is_consistent(&self) -> bool {
        self.opposing_start_collisions == 0 && self.class_bound_violations() == 0
    }
}

/// Runs the Q-walk for every (or a sample of) k-good sequence of length n and tabulates endpoint collisions.
pub fn collision_census(walker: &Walker<'_>, x: &LatticePoint, config: &CensusConfig) -> Result<Census> {
    let d = walker.dim();
    check_dim(d, x.dim())?;
    if config.k == 0 {
        return Err(Error::InvalidArgument("separation k must be at least 1".into()));
    }
    let (sequences, enumerated) = match enumerate_good_sequences(d, config.n, config.k, config.sample_budget) {
        Some(all) => (all, true),
        None => (
            sample_good_sequences(d, config.n, config.k, config.sample_budget, config.seed),
            false,
        ),
    };
    let records = sequences
        .par_iter()
        .map(|s| walker.q_walk(x, s))
        .collect::<Result<Vec<_>>>()?;
    let mut entries: Vec<CensusEntry> = records
        .into_iter()
        .map(|rec| CensusEntry {
            endpoint: rec.endpoint().clone(),
            psi: rec.psi,
            sequence: rec.sequence,
        })
        .collect();
    entries.sort_by(|a, b| a.endpoint.cmp(&b.endpoint).then_with(|| a.sequence.cmp(&b.sequence)));

    let mut groups: BTreeMap<&LatticePoint, Vec<usize>> = BTreeMap::new();
    for (i, e) in entries.iter().enumerate() {
        groups.entry(&e.endpoint).or_default().push(i);
    }
    let mut colliding_pairs = Vec::new();
    let mut distinct_start_classes = Vec::new();
    for (endpoint, members) in &groups {
        for (i, &a) in members.iter().enumerate() {
            for &b in &members[i + 1..] {
                let (sa, sb) = (&entries[a].sequence, &entries[b].sequence);
                let opposing_start = sa
                    .first_difference(sb)
                    .is_some_and(|p| sa.entries()[p].opposes(sb.entries()[p]));
                colliding_pairs.push(CollidingPair {
                    first: a,
                    second: b,
                    opposing_start,
                });
            }
        }
        let mut starts: Vec<DirectionIndex> = members
            .iter()
            .filter_map(|&i| entries[i].sequence.entries().first().copied())
            .collect();
        starts.sort_unstable();
        starts.dedup();
        if starts.len() >= 2 {
            let shift = endpoint.checked_sub(x)?;
            let psi_sum = starts.iter().map(|a| a.component(shift.coords()).unsigned_abs()).sum();
            distinct_start_classes.push(CollisionClass {
                endpoint: (*endpoint).clone(),
                starts,
                psi_sum,
            });
        }
    }
    let opposing_start_collisions = colliding_pairs.iter().filter(|p| p.opposing_start).count();
    Ok(Census {
        start: x.clone(),
        config: config.clone(),
        enumerated,
        distinct: groups.len(),
        max_multiplicity: groups.values().map(Vec::len).max().unwrap_or(0),
        colliding_pairs,
        opposing_start_collisions,
        distinct_start_classes,
        psi_bound: 4 * radius_schedule(config.n as u32),
        entries,
    })
}

/// `sequence,endpoint,psi` rows, then summary comment lines.
pub fn write_census_csv<W: Write>(w: &mut W, census: &Census) -> Result<()> {
    {
        let mut csv = csv::Writer::from_writer(&mut *w);
        csv.write_record(["sequence", "endpoint", "psi"]).map_err(csv_err)?;
        for e in &census.entries {
            csv.write_record([e.sequence.to_string(), e.endpoint.to_string(), e.psi.to_string()])
                .map_err(csv_err)?;
        }
        csv.flush()?;
    }
    writeln!(
        w,
        "# sequences={} distinct={} max_multiplicity={}",
        census.entries.len(),
        census.distinct,
        census.max_multiplicity
    )?;
    writeln!(
        w,
        "# enumerated={} seed={} colliding_pairs={} opposing_start_collisions={}",
        census.enumerated,
        census.config.seed,
        census.colliding_pairs.len(),
        census.opposing_start_collisions
    )?;
    writeln!(
        w,
        "# distinct_start_classes={} max_class_psi_sum={} psi_bound={}",
        census.distinct_start_classes.len(),
        census.max_class_psi_sum(),
        census.psi_bound
    )?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fractal::{build_xinf_box, build_xplus_box};

    fn pt(c: &[i64]) -> LatticePoint {
        LatticePoint::new(c.to_vec()).unwrap()
    }

    fn odds(r: i64) -> PointSet {
        PointSet::from_flat(1, (-r..=r).filter(|x| x.rem_euclid(2) == 1).collect())
    }

    fn diagonal(r: i64) -> PointSet {
        PointSet::from_flat(2, (-r..=r).flat_map(|t| [t, t]).collect())
    }

    fn dir(m: u32, d: usize) -> DirectionIndex {
        DirectionIndex::new(m, d).unwrap()
    }

    #[test]
    fn direction_indices() {
        assert_eq!(dir(1, 3).vector(3), pt(&[1, 0, 0]));
        assert_eq!(dir(2, 3).vector(3), pt(&[-1, 0, 0]));
        assert_eq!(dir(3, 3).vector(3), pt(&[0, 1, 0]));
        assert_eq!(dir(6, 3).vector(3), pt(&[0, 0, -1]));
        assert!(DirectionIndex::new(0, 2).is_err());
        assert!(DirectionIndex::new(5, 2).is_err());
        assert!(dir(3, 2).opposes(dir(4, 2)));
        assert!(!dir(3, 2).opposes(dir(3, 2)));
        assert!(!dir(1, 2).opposes(dir(4, 2)));
        for m in 1..=6 {
            assert_eq!(DirectionIndex::from_unit(&dir(m, 3).vector(3)).unwrap(), dir(m, 3));
        }
        assert!(DirectionIndex::from_unit(&pt(&[1, 1])).is_err());
    }

    #[test]
    fn good_sequences() {
        assert!(GoodSequence::from_indices(&[1, 1], 2, 1).is_ok());
        assert!(GoodSequence::from_indices(&[1, 2], 2, 2).is_err());
        assert!(GoodSequence::from_indices(&[1, 3, 2], 2, 2).is_ok());
        assert!(GoodSequence::from_indices(&[1, 3, 2], 2, 3).is_err());
        assert_eq!(GoodSequence::from_indices(&[1, 3, 2], 2, 2).unwrap().to_string(), "1:3:2");
    }

    #[test]
    fn enumeration_counts() {
        // k = 1: all (2d)^n strings.
        assert_eq!(enumerate_good_sequences(2, 3, 1, 1000).unwrap().len(), 64);
        // k = 2: 2d choices, then 2d - 2 for each later entry.
        assert_eq!(enumerate_good_sequences(3, 3, 2, 1000).unwrap().len(), 6 * 4 * 4);
        assert!(enumerate_good_sequences(2, 3, 1, 63).is_none());
        assert!(enumerate_good_sequences(2, 3, 3, 100).unwrap().is_empty());
        let all = enumerate_good_sequences(2, 2, 1, 100).unwrap();
        assert!(all.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn sampling_is_seeded() {
        let a = sample_good_sequences(4, 6, 2, 50, 7);
        let b = sample_good_sequences(4, 6, 2, 50, 7);
        assert_eq!(a, b);
        assert_eq!(a.len(), 50);
        assert!(a.iter().all(|s| is_k_good(s.entries(), 2)));
        assert_ne!(a, sample_good_sequences(4, 6, 2, 50, 8));
    }

    #[test]
    fn step_examples() {
        let set = odds(41);
        let w = Walker::new(&set, LatticeBox::centered(1, 41)).unwrap();
        assert_eq!(w.step(&pt(&[1]), dir(1, 1)).unwrap(), pt(&[3]));

        let diag = diagonal(20);
        let w = Walker::new(&diag, LatticeBox::centered(2, 20)).unwrap();
        assert_eq!(w.step(&pt(&[0, 0]), dir(1, 2)).unwrap(), pt(&[1, 1]));

        let lone = PointSet::singleton(&pt(&[0, 0]));
        let w = Walker::new(&lone, LatticeBox::centered(2, 5)).unwrap();
        match w.step(&pt(&[0, 0]), dir(1, 2)) {
            Err(Error::SupportivenessBreach { at }) => assert_eq!(at, pt(&[1, 0])),
            other => panic!("expected breach, got {other:?}"),
        }
    }

    #[test]
    fn step_needs_the_cross_inside_the_region() {
        let set = odds(9);
        let w = Walker::new(&set, LatticeBox::centered(1, 9)).unwrap();
        assert!(matches!(w.step(&pt(&[9]), dir(1, 1)), Err(Error::RegionTooSmall(_))));
        assert!(matches!(w.step(&pt(&[2]), dir(1, 1)), Err(Error::InvalidArgument(_))));
    }

    #[test]
    fn walk_examples() {
        let set = odds(41);
        let w = Walker::new(&set, LatticeBox::centered(1, 41)).unwrap();
        let s = w.walk_to_distance(&pt(&[1]), dir(1, 1), 4).unwrap();
        assert_eq!(s.end, pt(&[5]));
        assert_eq!(s.offset, pt(&[0]));

        let diag = diagonal(20);
        let w = Walker::new(&diag, LatticeBox::centered(2, 20)).unwrap();
        let s = w.walk_to_distance(&pt(&[0, 0]), dir(1, 2), 3).unwrap();
        assert_eq!(s.end, pt(&[3, 3]));
        assert_eq!(s.offset, pt(&[0, 3]));

        let lone = PointSet::singleton(&pt(&[0, 0]));
        let w = Walker::new(&lone, LatticeBox::centered(2, 5)).unwrap();
        assert!(matches!(w.walk_to_distance(&pt(&[0, 0]), dir(1, 2), 2), Err(Error::SupportivenessBreach { .. })));
    }

    #[test]
    fn q_walk_examples() {
        let set = odds(41);
        let w = Walker::new(&set, LatticeBox::centered(1, 41)).unwrap();
        let rec = w.q_walk(&pt(&[1]), &GoodSequence::from_indices(&[1], 1, 1).unwrap()).unwrap();
        assert_eq!(rec.radii, vec![6]);
        assert_eq!(rec.waypoints, vec![pt(&[1]), pt(&[7])]);
        assert_eq!(rec.psi, 6);

        let empty = w.q_walk(&pt(&[1]), &GoodSequence::from_indices(&[], 1, 1).unwrap()).unwrap();
        assert_eq!(empty.waypoints, vec![pt(&[1])]);
        assert_eq!(empty.psi, 0);

        let xinf = build_xinf_box(2, 128).unwrap();
        let w = Walker::new(&xinf, LatticeBox::centered(2, 128)).unwrap();
        let x = pt(&[1, 0]);
        let rec = w.q_walk(&x, &GoodSequence::from_indices(&[1, 3], 2, 1).unwrap()).unwrap();
        assert!(rec.waypoints.iter().all(|q| xinf.contains_point(q)));
        assert!(manhattan(rec.endpoint(), &x).unwrap() <= 4 * radius_schedule(2));
        assert_eq!(4 * radius_schedule(2), 56);
    }

    #[test]
    fn radius_schedule_values() {
        assert_eq!(radius_schedule(0), 2);
        assert_eq!(radius_schedule(1), 6);
        assert_eq!(radius_schedule(6), 254);
    }

    #[test]
    fn trials_hold_on_generated_sets() {
        let cases: Vec<(PointSet, usize, u64)> = vec![
            (build_xinf_box(1, 80).unwrap(), 1, 80),
            (build_xinf_box(2, 80).unwrap(), 2, 80),
            (build_xinf_box(3, 40).unwrap(), 3, 40),
            (diagonal(80), 2, 80),
            (build_xplus_box(2, 60).unwrap(), 2, 60),
        ];
        for (set, d, radius) in cases {
            let w = Walker::new(&set, LatticeBox::centered(d, radius)).unwrap();
            let trials = lemma42_trials(&w, 40, radius / 2 - 6, 4, 11).unwrap();
            for t in &trials {
                assert!(t.holds(), "{t:?}");
            }
        }
    }

    #[test]
    fn trials_are_reproducible() {
        let set = build_xinf_box(2, 64).unwrap();
        let w = Walker::new(&set, LatticeBox::centered(2, 64)).unwrap();
        let a = lemma42_trials(&w, 20, 20, 8, 3).unwrap();
        let b = lemma42_trials(&w, 20, 20, 8, 3).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn census_in_one_dimension() {
        let set = odds(401);
        let w = Walker::new(&set, LatticeBox::centered(1, 401)).unwrap();
        for n in 1..=4 {
            let cfg = CensusConfig { n, k: 1, sample_budget: 1000, seed: 0 };
            let c = collision_census(&w, &pt(&[1]), &cfg).unwrap();
            assert!(c.enumerated);
            assert_eq!(c.entries.len(), 1 << n);
            assert_eq!(c.opposing_start_collisions, 0);
            assert!(c.is_consistent());
        }
    }

    #[test]
    fn census_on_the_diagonal_has_distinct_start_classes() {
        let set = diagonal(300);
        let w = Walker::new(&set, LatticeBox::centered(2, 300)).unwrap();
        let cfg = CensusConfig { n: 3, k: 1, sample_budget: 1000, seed: 0 };
        let c = collision_census(&w, &pt(&[0, 0]), &cfg).unwrap();
        assert!(!c.distinct_start_classes.is_empty());
        assert!(c.max_multiplicity > 1);
        assert_eq!(c.opposing_start_collisions, 0);
        for class in &c.distinct_start_classes {
            let shift = class.endpoint.checked_sub(&pt(&[0, 0])).unwrap();
            let expected: u64 = class.starts.iter().map(|a| (a.sign() * shift.coords()[a.axis()]).unsigned_abs()).sum();
            assert_eq!(class.psi_sum, expected);
            assert!(class.psi_sum <= c.psi_bound);
        }
    }

    #[test]
    fn census_on_planar_xinf() {
        let set = build_xinf_box(2, 512).unwrap();
        let w = Walker::new(&set, LatticeBox::centered(2, 512)).unwrap();
        let cfg = CensusConfig { n: 3, k: 1, sample_budget: 10_000, seed: 1 };
        let c = collision_census(&w, &pt(&[1, 0]), &cfg).unwrap();
        assert!(c.enumerated);
        assert_eq!(c.entries.len(), 64);
        assert_eq!(c.opposing_start_collisions, 0);
        assert!(c.max_class_psi_sum() <= c.psi_bound);
        assert!(c.entries.windows(2).all(|p| p[0].endpoint <= p[1].endpoint));
        let mut buf = Vec::new();
        write_census_csv(&mut buf, &c).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert!(text.starts_with("sequence,endpoint,psi\n"));
        assert!(text.contains(&format!("# sequences=64 distinct={} max_multiplicity={}", c.distinct, c.max_multiplicity)));
    }
}
