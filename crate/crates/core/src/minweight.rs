//! Minimum support of a Z₂-harmonic function pinned at the origin, restricted
//! to the cube [−r, r]^n.
//!
//! Only the parity constraints at interior points of the cube are imposed, so
//! the minimum computed here is a box-local relaxation N′_n(r): any global
//! harmonic function restricted to the cube satisfies every imposed
//! constraint, hence N′_n(r) ≤ N_n(r).
//!
//! The system is reduced over GF(2) with pivots taken in lexicographic order
//! of points, and the affine solution space is then enumerated exhaustively in
//! Gray-code order.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::lattice::{LatticeBox, LatticePoint, PointSet};

/// Largest solution space (2^free) enumerated by default.
pub const SOLUTION_BUDGET: u128 = 1 << 26;
/// Largest number of box points turned into variables.
pub const VARIABLE_LIMIT: u128 = 1 << 14;

const PREFIX_BITS: u32 = 6;

type Row = Vec<u64>;

fn get_bit(row: &[u64], i: usize) -> bool {
    row[i / 64] >> (i % 64) & 1 == 1
}

fn flip_bit(row: &mut [u64], i: usize) {
    row[i / 64] ^= 1 << (i % 64);
}

fn xor_into(dst: &mut [u64], src: &[u64]) {
    for (a, b) in dst.iter_mut().zip(src) {
        *a ^= b;
    }
}

fn popcount(row: &[u64]) -> u64 {
    row.iter().map(|w| u64::from(w.count_ones())).sum()
}

/// One unknown per point of the cube, one even-parity equation per interior point, plus u(0) = 1.
#[derive(Clone, Debug)]
pub struct ParitySystem {
    pub n: usize,
    pub r: u64,
    /// Box points in lexicographic order; a variable's index is its position here.
    pub variables: PointSet,
    /// Each constraint lists the 2n variable indices of an interior point's neighbours.
    pub constraints: Vec<Vec<usize>>,
    pub pin: usize,
}

impl ParitySystem {
    pub fn new(n: usize, r: u64) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidArgument("dimension must be at least 1".into()));
        }
        let region = LatticeBox::centered(n, r);
        let count = region.volume().unwrap_or(u128::MAX);
        if count > VARIABLE_LIMIT {
            return Err(Error::BudgetExceeded {
                what: "parity system variables (2r+1)^n",
                requested: count,
                limit: VARIABLE_LIMIT,
            });
        }
        let side = 2 * r as usize + 1;
        let mut strides = vec![1usize; n];
        for i in (0..n - 1).rev() {
            strides[i] = strides[i + 1] * side;
        }
        let variables = PointSet::from_flat(n, region.points()?.flatten().collect());
        let index = |p: &[i64]| -> usize {
            p.iter()
                .zip(&strides)
                .map(|(c, s)| (c + r as i64) as usize * s)
                .sum()
        };
        let mut constraints = Vec::new();
        if let Some(inner) = region.interior() {
            for y in inner.points()? {
                let at = index(&y);
                let mut eq = Vec::with_capacity(2 * n);
                for s in &strides {
                    eq.push(at - s);
                    eq.push(at + s);
                }
                eq.sort_unstable();
                constraints.push(eq);
            }
        }
        let pin = index(&vec![0; n]);
        Ok(ParitySystem {
            n,
            r,
            variables,
            constraints,
            pin,
        })
    }

    pub fn variable_count(&self) -> usize {
        self.variables.len()
    }

    /// Whether a support (set of variable indices) satisfies every equation and the pin.
    pub fn is_solution(&self, support: &PointSet) -> bool {
        let on = |i: usize| support.contains(self.variables.point(i));
        on(self.pin) && self.constraints.iter().all(|eq| eq.iter().filter(|&&i| on(i)).count() % 2 == 0)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinSupport {
    pub n: usize,
    pub r: u64,
    /// Minimum of |supp u ∩ [−r, r]^n| under the relaxed constraints.
    pub weight: u64,
    pub witness: PointSet,
    /// log₂ of the number of solutions.
    pub free_variables: u32,
}

impl MinSupport {
    pub fn summary_line(&self) -> String {
        format!("n={} r={} relaxed_min_weight={}", self.n, self.r, self.weight)
    }
}

/// Reduced echelon form of the system: a particular solution and one basis vector per free variable.
struct Reduced {
    particular: Row,
    /// Basis vectors ordered by their free variable, lexicographically first point first.
    basis: Vec<Row>,
}

fn reduce(system: &ParitySystem) -> Result<Reduced> {
    let vars = system.variable_count();
    let words = (vars + 1).div_ceil(64);
    let rhs = vars;
    let mut rows: Vec<Row> = system
        .constraints
        .iter()
        .map(|eq| {
            let mut row = vec![0u64; words];
            for &i in eq {
                flip_bit(&mut row, i);
            }
            row
        })
        .collect();
    let mut pin = vec![0u64; words];
    flip_bit(&mut pin, system.pin);
    flip_bit(&mut pin, rhs);
    rows.push(pin);

    let mut pivots: Vec<(usize, usize)> = Vec::new();
    let mut next_row = 0;
    for col in 0..vars {
        let Some(found) = (next_row..rows.len()).find(|&i| get_bit(&rows[i], col)) else {
            continue;
        };
        rows.swap(next_row, found);
        let pivot = rows[next_row].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != next_row && get_bit(row, col) {
                xor_into(row, &pivot);
            }
        }
        pivots.push((col, next_row));
        next_row += 1;
    }
    if rows[next_row..].iter().any(|row| get_bit(row, rhs)) {
        return Err(Error::Infeasible);
    }

    let vwords = vars.div_ceil(64);
    let mut is_pivot = vec![false; vars];
    let mut particular = vec![0u64; vwords];
    for &(col, row) in &pivots {
        is_pivot[col] = true;
        if get_bit(&rows[row], rhs) {
            flip_bit(&mut particular, col);
        }
    }
    let basis = (0..vars)
        .filter(|c| !is_pivot[*c])
        .map(|free| {
            let mut v = vec![0u64; vwords];
            flip_bit(&mut v, free);
            for &(col, row) in &pivots {
                if get_bit(&rows[row], free) {
                    flip_bit(&mut v, col);
                }
            }
            v
        })
        .collect();
    Ok(Reduced { particular, basis })
}

/// Minimum-weight solution with the default enumeration budget.
pub fn min_support(n: usize, r: u64) -> Result<MinSupport> {
    min_support_with_budget(n, r, SOLUTION_BUDGET)
}

/// Minimum-weight solution; the solution space may hold at most `budget` elements.
///
/// Ties are broken by the free-variable bit pattern read as a binary number
/// whose most significant bit belongs to the lexicographically first free
/// variable.
pub fn min_support_with_budget(n: usize, r: u64, budget: u128) -> Result<MinSupport> {
    let system = ParitySystem::new(n, r)?;
    let reduced = reduce(&system)?;
    let free = reduced.basis.len() as u32;
    let space = 1u128.checked_shl(free).filter(|_| free < 64).unwrap_or(u128::MAX);
    if space > budget {
        return Err(Error::BudgetExceeded {
            what: "parity solution space 2^free",
            requested: space,
            limit: budget,
        });
    }
    let prefix_bits = free.min(PREFIX_BITS);
    let low_bits = free - prefix_bits;
    let basis = &reduced.basis;
    // Bit t of a pattern belongs to free variable free-1-t.
    let vector_for_bit = |t: u32| &basis[(free - 1 - t) as usize];

    let (weight, pattern) = (0u64..1 << prefix_bits)
        .into_par_iter()
        .map(|prefix| {
            let mut cur = reduced.particular.clone();
            for t in 0..prefix_bits {
                if prefix >> t & 1 == 1 {
                    xor_into(&mut cur, vector_for_bit(low_bits + t));
                }
            }
            let high = prefix << low_bits;
            let mut best = (popcount(&cur), high);
            for i in 1u64..1 << low_bits {
                xor_into(&mut cur, vector_for_bit(i.trailing_zeros()));
                let gray = i ^ (i >> 1);
                let cand = (popcount(&cur), high | gray);
                if cand < best {
                    best = cand;
                }
            }
            best
        })
        .min()
        .expect("at least one prefix");

    let mut solution = reduced.particular.clone();
    for t in 0..free {
        if pattern >> t & 1 == 1 {
            xor_into(&mut solution, vector_for_bit(t));
        }
    }
    let mut flat = Vec::new();
    for i in 0..system.variable_count() {
        if get_bit(&solution, i) {
            flat.extend_from_slice(system.variables.point(i));
        }
    }
    let witness = PointSet::from_flat(n, flat);
    debug_assert_eq!(witness.len() as u64, weight);
    Ok(MinSupport {
        n,
        r,
        weight,
        witness,
        free_variables: free,
    })
}

/// Consistency probe for the lower bound on minimal supports.
///
/// True when every relaxed minimum is at least 1 and, for n = 2, the minima
/// are nondecreasing over the (increasing) radii and at least r. The linear
/// bound follows from walking away from the origin along ±e_1: every interior
/// constraint met on the way forces a further support point one or two steps
/// ahead, giving at least 1 + 2⌈(r−1)/2⌉ ≥ r points.
pub fn lower_bound_check(n: usize, radii: &[u64]) -> Result<bool> {
    lower_bound_check_with_budget(n, radii, SOLUTION_BUDGET)
}

pub fn lower_bound_check_with_budget(n: usize, radii: &[u64], budget: u128) -> Result<bool> {
    if radii.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::InvalidArgument("radii must be strictly increasing".into()));
    }
    let weights = radii
        .iter()
        .map(|&r| Ok(min_support_with_budget(n, r, budget)?.weight))
        .collect::<Result<Vec<_>>>()?;
    let mut ok = weights.iter().all(|w| *w >= 1);
    if n == 2 {
        ok &= weights.windows(2).all(|w| w[0] <= w[1]);
        ok &= radii.iter().zip(&weights).all(|(r, w)| w >= r);
    }
    Ok(ok)
}

/// The diagonal {(t, t) : |t| ≤ r}, a harmonic support through the origin in n = 2.
pub fn diagonal_certificate(r: u64) -> PointSet {
    let r = r as i64;
    PointSet::from_flat(2, (-r..=r).flat_map(|t| [t, t]).collect())
}

pub fn origin_singleton(n: usize) -> PointSet {
    PointSet::singleton(&LatticePoint::origin(n))
}
