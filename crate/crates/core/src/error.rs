use thiserror::Error;

/// Errors raised by the arithmetic layer, the WZ evaluators and the catalog.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("factorial of negative argument {0}")]
    NegativeFactorial(i64),

    #[error("binomial with negative top argument {0}")]
    NegativeBinomial(i64),

    #[error("{0} is not an odd prime")]
    NotOddPrime(u64),

    #[error("exponent {0} outside 1..=4")]
    UnsupportedExponent(u32),

    #[error("{0}")]
    Domain(String),

    #[error("value is not {prime}-integral: denominator has {prime}-adic valuation {valuation}")]
    NotPIntegral { prime: u64, valuation: u32 },

    #[error("factorial ratio has {poles} uncancelled pole(s) against {zeros} zero(s)")]
    OutsideDomain { zeros: usize, poles: usize },

    #[error("residues carry different moduli ({left} vs {right})")]
    ModulusMismatch { left: String, right: String },

    #[error("fast engine lost precision at p = {prime}: need {needed} digits, have {available}")]
    PrecisionLoss {
        prime: u64,
        needed: i64,
        available: i64,
    },

    #[error("unknown catalog entry `{0}`")]
    UnknownEntry(String),

    #[error("at k = {k}: {source}")]
    AtIndex { k: i64, source: Box<Error> },

    #[error("{id} needs p >= {floor}, got {prime}")]
    BelowFloor { id: String, prime: u64, floor: u64 },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
