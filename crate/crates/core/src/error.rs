use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("extension degree {0} is outside the supported range 1..=8")]
    DegreeOutOfRange(u32),

    #[error("self-dual basis search exhausted for GF(2^{0})")]
    SelfDualSearchExhausted(u32),

    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("codes are over different fields: GF(2^{0}) vs GF(2^{1})")]
    FieldMismatch(u32, u32),

    #[error("element {value:#x} does not belong to GF(2^{k})")]
    NotInField { value: u32, k: u32 },

    #[error("weight vector has a zero entry at coordinate {0}")]
    ZeroWeight(usize),

    #[error("enumeration of {needed} items exceeds the budget of {budget}")]
    BudgetExceeded { needed: u128, budget: u64 },

    #[error("operation requires a binary code, got a code over GF(2^{0})")]
    NotBinary(u32),

    #[error("code has fewer than two nonzero codewords")]
    TooFewCodewords,

    #[error("unsupported curve: {0}")]
    UnsupportedCurve(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("no all-nonzero twist vector found ({0})")]
    NoTwistVector(String),

    #[error("certificate failed: {0}")]
    CertificateFailed(String),

    #[error("basis is not isotropic: generators {0} and {1} do not commute")]
    NotIsotropic(usize, usize),

    #[error("{n} qubits exceeds the operator-level cap of {cap}")]
    TooManyQubits { n: usize, cap: usize },

    #[error("detectability violated by Pauli error {0}")]
    DetectabilityViolation(String),

    #[error("malformed artifact: {0}")]
    Artifact(String),

    #[error("{stage}: {source}")]
    Stage {
        stage: &'static str,
        #[source]
        source: Box<Error>,
    },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn at(stage: &'static str) -> impl FnOnce(Error) -> Error {
        move |e| Error::Stage {
            stage,
            source: Box::new(e),
        }
    }
}
