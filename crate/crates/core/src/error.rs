use thiserror::Error;

use crate::foundations::ExtNat;

/// Everything that can go wrong in the engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("universe must have at least one element")]
    EmptyUniverse,
    #[error("universe of size {size} exceeds the cap of {max}")]
    UniverseTooLarge { size: usize, max: usize },
    #[error("duplicate label `{0}` in universe")]
    DuplicateLabel(String),
    #[error("label `{0}` is not part of the universe")]
    UnknownLabel(String),
    #[error("operands live on different universes")]
    UniverseMismatch,
    #[error("map must send every one of {expected} domain elements into a codomain of size {codomain}")]
    InvalidMap { expected: usize, codomain: usize },

    #[error("family is not eventual (not closed upward)")]
    NotEventual,
    #[error("family is not self-associated and eventual")]
    NotSelfAsoEventual,
    #[error("the given parts do not partition the universe")]
    NotAPartition,
    #[error("subset is not a member of the family")]
    NotAMember,
    #[error("tuple length {0} is not odd")]
    EvenArity(usize),

    #[error("multi-family is not increasing")]
    NotIncreasing,
    #[error("value {0} is not an indicator value (0 or 1)")]
    NotIndicator(ExtNat),
    #[error("level threshold must be finite")]
    InfiniteThreshold,

    #[error("topology violates the axioms")]
    InvalidTopology,
    #[error("topology is not Hausdorff")]
    NotHausdorff,
    #[error("family is not inner (condition I fails)")]
    NotInner,
    #[error("inner family has two limit points ({0} and {1})")]
    MultipleLimits(usize, usize),

    #[error("eventually periodic pattern must be nonempty")]
    EmptyPattern,
    #[error("malformed eventually periodic set `{0}`")]
    BadEpSet(String),
    #[error("operation requires an infinite set")]
    FiniteSet,
    #[error("number of parts must be positive")]
    ZeroParts,
}

pub type Result<T> = std::result::Result<T, Error>;
