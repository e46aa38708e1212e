//! Sparse Laurent polynomials over GF(2) in d variables.
//!
//! A polynomial is identified with its support: the set of exponent vectors
//! whose coefficient is 1. Addition is symmetric difference, multiplication
//! counts each product exponent modulo 2, and squaring is the Frobenius map
//! (exponents double, cross terms cancel).

use std::collections::HashSet;

use rayon::prelude::*;

use crate::error::{check_dim, Error, Result};
use crate::fractal::unit_vectors;
use crate::lattice::{dilate, LatticePoint, PointSet};

/// Largest |P|·|Q| a general multiplication may touch.
pub const MUL_PAIR_BUDGET: u128 = 100_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Gf2Laurent {
    support: PointSet,
}

impl Gf2Laurent {
    pub fn zero(d: usize) -> Self {
        Gf2Laurent { support: PointSet::empty(d) }
    }

    pub fn one(d: usize) -> Self {
        Gf2Laurent {
            support: PointSet::singleton(&LatticePoint::origin(d)),
        }
    }

    pub fn from_support(support: PointSet) -> Self {
        Gf2Laurent { support }
    }

    pub fn support(&self) -> &PointSet {
        &self.support
    }

    pub fn into_support(self) -> PointSet {
        self.support
    }

    pub fn dim(&self) -> usize {
        self.support.dim()
    }

    pub fn is_zero(&self) -> bool {
        self.support.is_empty()
    }

    pub fn add(&self, other: &Gf2Laurent) -> Result<Gf2Laurent> {
        Ok(Gf2Laurent {
            support: self.support.symmetric_difference(&other.support)?,
        })
    }

    /// XOR convolution of supports.
    pub fn mul(&self, other: &Gf2Laurent) -> Result<Gf2Laurent> {
        check_dim(self.dim(), other.dim())?;
        let d = self.dim();
        let pairs = self.support.len() as u128 * other.support.len() as u128;
        if pairs > MUL_PAIR_BUDGET {
            return Err(Error::BudgetExceeded {
                what: "polynomial product pairs |P|*|Q|",
                requested: pairs,
                limit: MUL_PAIR_BUDGET,
            });
        }
        // Iterate over the smaller operand in the inner loop.
        let (outer, inner) = if self.support.len() >= other.support.len() {
            (&self.support, &other.support)
        } else {
            (&other.support, &self.support)
        };
        let chunk = (outer.len() / rayon::current_num_threads().max(1)).max(1);
        let parity = outer
            .as_flat()
            .par_chunks(chunk * d)
            .map(|block| {
                let mut acc: HashSet<Box<[i64]>> = HashSet::new();
                let mut sum = vec![0i64; d];
                for p in block.chunks_exact(d) {
                    for q in inner.iter() {
                        for ((s, a), b) in sum.iter_mut().zip(p).zip(q) {
                            *s = a.checked_add(*b).ok_or(Error::Overflow)?;
                        }
                        if !acc.remove(sum.as_slice()) {
                            acc.insert(sum.clone().into_boxed_slice());
                        }
                    }
                }
                Ok::<_, Error>(acc)
            })
            .try_reduce(HashSet::new, |a, b| {
                let (small, mut large) = if a.len() < b.len() { (a, b) } else { (b, a) };
                for key in small {
                    if !large.remove(&key) {
                        large.insert(key);
                    }
                }
                Ok(large)
            })?;
        let flat: Vec<i64> = parity.into_iter().flat_map(|k| k.into_vec()).collect();
        Ok(Gf2Laurent {
            support: PointSet::from_flat(d, flat),
        })
    }

    /// Frobenius square: every exponent doubles.
    pub fn square(&self) -> Result<Gf2Laurent> {
        Ok(Gf2Laurent {
            support: dilate(&self.support, 2)?,
        })
    }

    /// P^n by square-and-multiply with Frobenius squaring.
    pub fn pow(&self, n: u64) -> Result<Gf2Laurent> {
        if n == 0 {
            return Err(Error::InvalidArgument("exponent must be at least 1".into()));
        }
        let mut acc: Option<Gf2Laurent> = None;
        let mut base = self.clone();
        let mut rest = n;
        loop {
            if rest & 1 == 1 {
                acc = Some(match acc {
                    None => base.clone(),
                    Some(a) => a.mul(&base)?,
                });
            }
            rest >>= 1;
            if rest == 0 {
                break;
            }
            base = base.square()?;
        }
        Ok(acc.expect("n >= 1 sets at least one bit"))
    }
}

/// S = Σ_i (x_i + x_i^{-1}).
pub fn laplace_symbol(d: usize) -> Gf2Laurent {
    Gf2Laurent::from_support(unit_vectors(d))
}

/// P_X · S, whose support is the set of points with an odd number of neighbours in X.
pub fn neighbor_parity_series(x: &PointSet) -> Result<Gf2Laurent> {
    Gf2Laurent::from_support(x.clone()).mul(&laplace_symbol(x.dim()))
}
