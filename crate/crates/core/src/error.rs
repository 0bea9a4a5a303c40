use thiserror::Error;

/// Errors raised by evaluation, lookup and reduction.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("harmonic table too small: need H[{j}][{m}] but table covers j <= {n_max}, m <= {m_max}")]
    TableCapacity {
        j: u64,
        m: u32,
        n_max: u64,
        m_max: u32,
    },

    #[error("unknown formula id `{0}`")]
    UnknownFormula(String),

    #[error("{id}: parameters outside domain ({reason})")]
    OutsideDomain { id: String, reason: String },

    #[error("theorem hypothesis violated: {0}")]
    Hypothesis(String),

    #[error("`{0}` has no finite limit")]
    Divergent(String),

    #[error("cannot parse `{input}`: {reason}")]
    Parse { input: String, reason: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
