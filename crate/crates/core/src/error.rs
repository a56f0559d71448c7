use thiserror::Error;

/// Crate-wide error type.  Variant names follow the failure modes of the
/// individual operations; all carry a short human-readable context string
/// where one is useful.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("not a finite-type Cartan matrix: {0}")]
    NotFiniteType(String),

    #[error("shape mismatch: {0}")]
    Shape(String),

    #[error("index out of range: {0}")]
    Index(String),

    #[error("{divisor} does not divide the gradation order {order}")]
    Divisibility { divisor: i64, order: i64 },

    #[error("graded level {0} is empty")]
    EmptyLevel(i64),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("highest weight touches more than one node of component {0}, no tree-shaped augmentation exists")]
    Cycle(usize),

    #[error("zero pattern of the connecting multiplicities disagrees with the highest weight: {0}")]
    NuPattern(String),

    #[error("augmented matrix failed validation: {0}")]
    ValidationFailed(String),

    #[error("bracket [X,Y] does not lie in the Cartan subalgebra")]
    RegularityFailed,

    #[error("the binary form vanishes identically")]
    Degenerate,

    #[error("the binary form does not split over the rationals")]
    NotSplit,
}

pub type Result<T> = std::result::Result<T, Error>;
