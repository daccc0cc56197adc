use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    // field construction
    #[error("characteristic {0} is not prime")]
    NonPrimeP(u32),
    #[error("extension degree {0} needs a modulus polynomial")]
    MissingModulus(u32),
    #[error("modulus polynomial is reducible over F_{0}")]
    ReducibleModulus(u32),
    #[error("invalid modulus: {0}")]
    InvalidModulus(String),
    #[error("field size {0} exceeds the supported maximum of 256")]
    FieldTooLarge(u64),

    // linear algebra
    #[error("dimension must be at least {min}, got {got}")]
    DimensionTooSmall { min: usize, got: usize },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },
    #[error("matrix is not symmetric")]
    NotSymmetric,
    #[error("diagonal entry ({0},{0}) is nonzero in characteristic 2")]
    OddDiagonalInCharTwo(usize),
    #[error("entry {value} is not an element of F_{q}")]
    ElementOutOfRange { value: u64, q: usize },

    // operators
    #[error("state space dimension {dim} exceeds the dense limit {limit}")]
    DimensionLimitExceeded { dim: u128, limit: usize },

    // codes
    #[error("L is not D + Dᵀ")]
    PhaseSplitInvalid,
    #[error("generators {0} and {1} are not symplectically orthogonal")]
    NotIsotropic(usize, usize),
    #[error("generators are linearly dependent")]
    DependentGenerators,
    #[error("inconsistent generator phases: {0}")]
    InconsistentPhases(String),
    #[error("enumeration of {needed} elements exceeds the budget of {budget}")]
    BudgetExceeded { needed: u128, budget: u128 },
    #[error("code has no phase matrix D (generic construction)")]
    NoPhaseMatrix,
    #[error("projection check failed: {0}")]
    ProjectionInvalid(String),

    // puncturing
    #[error("code is not pure (pure distance {pure_d} < distance {d})")]
    NotPure { pure_d: usize, d: usize },
    #[error("pure distance {0} is below 2")]
    DistanceTooSmall(usize),
    #[error("punctured stabilizer lost isotropy or injectivity: {0}")]
    IsotropyLost(String),
    #[error("index {index} out of range for length {len}")]
    IndexOutOfRange { index: usize, len: usize },

    // search
    #[error("domain error: {0}")]
    DomainError(String),

    // files
    #[error("parse error: {0}")]
    Parse(String),
    #[error("io error: {0}")]
    Io(String),
}

impl Error {
    /// Process exit status: 3 for exhausted budgets, 1 for failed verification, 2 for
    /// invalid input.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::BudgetExceeded { .. } | Error::DimensionLimitExceeded { .. } => 3,
            Error::ProjectionInvalid(_) | Error::IsotropyLost(_) => 1,
            _ => 2,
        }
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}
