use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("m and n must be coprime (got m={m}, n={n})")]
    NotCoprime { m: u32, n: u32 },

    #[error("parameter must be positive: {0}")]
    NonPositive(&'static str),

    #[error("parts must be positive and weakly decreasing: {0:?}")]
    InvalidPartition(Vec<usize>),

    #[error("inner shape {inner:?} is not contained in outer shape {outer:?}")]
    NotContained { outer: Vec<usize>, inner: Vec<usize> },

    #[error("beta-set is not balanced ({members} non-positive members, {gaps} positive gaps)")]
    Unbalanced { members: usize, gaps: usize },

    #[error("cannot move {element} by {step}: {reason}")]
    InvalidJump { element: i64, step: u32, reason: &'static str },

    #[error("partition {0:?} is not a {1}-core")]
    NotACore(Vec<usize>, u32),

    #[error("expected {expected} quotient entries, got {got}")]
    QuotientLength { expected: usize, got: usize },

    #[error("invalid affine permutation window {window:?}: {reason}")]
    InvalidWindow { window: Vec<i64>, reason: &'static str },

    #[error("affine permutation is not {0}-stable")]
    NotStable(u32),

    #[error("set is not closed under +{0}")]
    NotInvariant(u32),

    #[error("shape {0:?} does not fit under the diagonal of the {1}x{2} rectangle")]
    NotADyckPath(Vec<usize>, u32, u32),

    #[error("values {0:?} do not form a rational parking function")]
    NotAParkingFunction(Vec<u32>),

    #[error("ribbon tableau is invalid: {0}")]
    InvalidTableau(String),

    #[error("size mismatch: |{0:?}| != |{1:?}|")]
    SizeMismatch(Vec<usize>, Vec<usize>),

    #[error("polynomial is not symmetric")]
    NotSymmetric,

    #[error("need at least {needed} variables, got {got}")]
    TooFewVariables { needed: usize, got: usize },

    #[error("enumeration size {size} exceeds budget {budget}")]
    BudgetExceeded { size: u128, budget: u128 },

    #[error("route disagreement for path {path:?}: {detail}")]
    RouteMismatch { path: Vec<usize>, detail: String },
}

pub type Result<T> = std::result::Result<T, Error>;
