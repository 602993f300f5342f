use thiserror::Error;

/// Errors surfaced by the fallible operations of this crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("cannot factor zero")]
    FactorZero,
    #[error("value does not fit the supported 128-bit range")]
    ValueTooLarge,
    #[error("expected a monic polynomial")]
    NonMonic,
    #[error("expected degree {expected}, got {found}")]
    WrongDegree { expected: usize, found: usize },
    #[error("polynomial degree must be at least {min}")]
    DegreeTooSmall { min: usize },
    #[error("zero polynomial not allowed here")]
    ZeroPolynomial,
    #[error("constant term must be nonzero")]
    ZeroConstantTerm,
    #[error("inexact polynomial division")]
    InexactDivision,
    #[error("modulus {0} is not prime")]
    CompositeModulus(u64),
    #[error("modulus mismatch: {0} vs {1}")]
    ModulusMismatch(u64, u64),
    #[error("operation requires an irreducible polynomial")]
    ReducibleInput,
    #[error("operation requires monogenic inputs")]
    NotMonogenicInput,
    #[error("monogenicity of x^4 + B*x^2 + 1 (A = 0, B != 0) is outside the supported classification")]
    UnsupportedCoefficientRow,
    #[error("|A| and |B| must be at most {max}")]
    CoefficientOutOfRange { max: i64 },
    #[error("family index must be in 1..=4, got {0}")]
    InvalidFamilyIndex(u8),
    #[error("k = {k} is below the family lower bound {min}")]
    KBelowBound { k: i64, min: i64 },
    #[error("witness certificate holds for k = {k} but the classifier assigns {found} instead of {expected}")]
    WitnessFamilyDivergence {
        k: i64,
        expected: String,
        found: String,
    },
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error("cannot parse polynomial: {0}")]
    PolyParse(String),
    #[error("i/o error on {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
