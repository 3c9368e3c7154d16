use thiserror::Error;

/// Every failure the engine can report.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("matrix is not square ({rows}x{cols})")]
    NonSquare { rows: usize, cols: usize },
    #[error("matrix is not symmetric")]
    NotSymmetric,
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("no admissibility bound found with paths of length up to {cap}")]
    InfiniteDimensional { cap: usize },
    #[error("malformed relation: {0}")]
    MalformedRelation(String),
    #[error("malformed quiver: {0}")]
    MalformedQuiver(String),
    #[error("operands live over different fields")]
    FieldMismatch,
    #[error("the quotient is the zero algebra")]
    EverythingKilled,
    #[error("the right socle is not a two-sided ideal")]
    SocleNotTwoSided,
    #[error("algebra is not basic: {0}")]
    NotBasic(String),
    #[error("operation requires characteristic zero")]
    CharPUnsupported,
    #[error("semisimple quotient does not split over the rationals")]
    NonSplitSemisimpleQuotient,
    #[error("summand endomorphism ring is a proper field extension")]
    NonSplitSummand,
    #[error("complex is not two-term silting: {0}")]
    NotSilting(String),
    #[error("complex does not correspond to a support tau-tilting pair: {0}")]
    NotTwoTermSilting(String),
    #[error("parameter out of range: {0}")]
    ParameterOutOfRange(String),
    #[error("unsupported Coxeter type: {0}")]
    UnsupportedType(String),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("invalid input: {0}")]
    Parse(String),
    #[error("certificate does not replay: {0}")]
    CertificateRejected(String),
}

pub type Result<T> = std::result::Result<T, Error>;
