use core::fmt;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// Order must be even and at least 6.
    InvalidOrder(usize),
    /// Order exceeds the bit-set width.
    OrderTooLarge(usize),
    InvalidSplit { residue: u64, modulus: u64 },
    /// Malformed graph6 input; the payload says why.
    Graph6(&'static str),
    /// A decoded graph has a vertex of degree above 3.
    NotSubcubic,
    /// Cyclic edge-connectivity thresholds above 5 are not supported.
    ThresholdTooLarge(u32),
    /// The order cannot be reached by the available permutation blocks.
    UnsupportedOrder(usize),
    /// A permutation argument violated its precondition.
    InvalidPermutation(&'static str),
    /// The reference generator refuses orders above its memory guard.
    MemoryGuard { order: usize, limit: usize },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidOrder(n) => write!(f, "order {n} must be even and at least 6"),
            Error::OrderTooLarge(n) => write!(f, "order {n} exceeds the supported maximum"),
            Error::InvalidSplit { residue, modulus } => {
                write!(f, "invalid split: residue {residue} with modulus {modulus}")
            }
            Error::Graph6(why) => write!(f, "malformed graph6: {why}"),
            Error::NotSubcubic => write!(f, "graph has a vertex of degree greater than 3"),
            Error::ThresholdTooLarge(t) => {
                write!(f, "cyclic edge-connectivity threshold {t} is above 5")
            }
            Error::UnsupportedOrder(n) => {
                write!(f, "order {n} is not reachable with the available bad permutations")
            }
            Error::InvalidPermutation(why) => write!(f, "invalid permutation: {why}"),
            Error::MemoryGuard { order, limit } => {
                write!(f, "order {order} exceeds the reference generator limit {limit}")
            }
        }
    }
}

impl core::error::Error for Error {}
