use thiserror::Error;

use crate::lattice::LatticePoint;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("coordinate overflow")]
    Overflow,

    #[error("budget exceeded: {what} needs {requested}, limit is {limit}")]
    BudgetExceeded {
        what: &'static str,
        requested: u128,
        limit: u128,
    },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// The cross centred at `at` meets the set in a single arm point.
    #[error("set is not supportive: the cross centred at {at} meets it in a single arm point")]
    SupportivenessBreach { at: LatticePoint },

    #[error("region too small: {0}")]
    RegionTooSmall(String),

    #[error("parity system is infeasible")]
    Infeasible,

    #[error("truncation did not stabilise at radius {radius}")]
    Unstable { radius: u64 },

    #[error("degenerate fit input: {0}")]
    DegenerateFit(String),

    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn check_dim(left: usize, right: usize) -> Result<()> {
    if left == right {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { left, right })
    }
}
