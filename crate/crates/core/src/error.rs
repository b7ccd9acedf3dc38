use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero denominator")]
    ZeroDenominator,

    #[error("invalid rational literal `{0}`")]
    ParseRational(String),

    #[error("incompatible parameters `{left}` and `{right}`")]
    IncompatibleParameter { left: String, right: String },

    #[error("a trivial character means the fixed locus is not isolated")]
    NonIsolatedFixedLocus,

    /// A fixed-point profile that would give a non-integral quotient.
    #[error("profile (alpha={alpha}, beta={beta}) is inconsistent: {formula} = {value} is not integral")]
    InconsistentProfile {
        alpha: u64,
        beta: u64,
        formula: &'static str,
        value: String,
    },

    #[error("involution with {fixed} isolated fixed points is inconsistent: {formula} = {value} is not integral")]
    InconsistentFixedCount {
        fixed: String,
        formula: &'static str,
        value: String,
    },

    #[error("invalid weight configuration: {0}")]
    InvalidWeightConfig(String),

    #[error("vanishing hypothesis fails: h^1 of the adjoint bundle is {h1}")]
    VanishingFailure { h1: u64 },

    #[error("{name} = {value} is below the minimum {min}")]
    OutOfRange {
        name: &'static str,
        value: i64,
        min: i64,
    },

    #[error("no catalog entry for {0}")]
    MissingCatalogEntry(String),

    #[error("example {example}{}: {source}", .k.map(|k| format!(" at k={k}")).unwrap_or_default())]
    Pipeline {
        example: u8,
        k: Option<u64>,
        source: Box<Error>,
    },
}
