use thiserror::Error;

use crate::semantics::Logic;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid atom name `{0}`")]
    InvalidAtom(String),

    #[error("rule head and body must be implication-free: {0}")]
    ImplicationInRule(String),

    #[error("interpretation assigns both `{0}` and `-{0}`")]
    InconsistentInterpretation(String),

    #[error("formula `{formula}` is not admissible under {logic} logic: {reason}")]
    Inadmissible {
        formula: String,
        logic: Logic,
        reason: &'static str,
    },

    #[error("formula `{0}` is not regular (strong negation applied to a non-atom)")]
    NotRegular(String),

    #[error("program is not normal nested: head `{0}` is not a literal")]
    NotNormalNested(String),

    #[error("program is not wc-normal: rule `{0}`")]
    NotWcNormal(String),

    #[error("weak negation is not allowed here: `{0}`")]
    WeakNegation(String),

    #[error("enumeration over {atoms} atoms exceeds the cap of {cap}; raise the cap to at least {atoms}")]
    CapExceeded { atoms: usize, cap: usize },

    #[error("{line}:{column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("unknown property `{0}`")]
    UnknownProperty(String),

    #[error("cannot generate program: {0}")]
    UnsatisfiableGenerator(String),

    #[error("phi iteration did not reach a fixpoint within {0} steps")]
    PhiDiverged(usize),
}
