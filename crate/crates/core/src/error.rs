use thiserror::Error;

/// Every failure the library can report.
///
/// `code()` gives a stable machine-readable identifier used by the CLI and
/// the C interface.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("element {0} is not a unit")]
    NotAUnit(String),
    #[error("gcd of two zeros is undefined")]
    BothZero,
    #[error("zero has no factorization")]
    ZeroInput,
    #[error("|norm| has a prime factor above the trial-division cap {0}")]
    FactorCapExceeded(u64),
    #[error("{0} and {1} are not coprime")]
    NotCoprime(String, String),
    #[error("reduction did not terminate within {0} steps")]
    IterationCapExceeded(usize),
    #[error("matrix determinant is {0}, expected 1")]
    BadDeterminant(String),
    #[error("modulus {0} is a unit")]
    UnitModulus(String),
    #[error("projective line has {size} points, above the bound {bound}")]
    BoundExceeded { size: u64, bound: u64 },
    #[error("coset enumeration reached {found} points but the index formula gives {expected}")]
    IntegrityError { found: u64, expected: u64 },
    #[error("argument out of range: {0}")]
    BadRange(String),
    #[error("{0} is not in reduced form")]
    NotReduced(String),
    #[error("coset representatives do not form a group: {0}")]
    NotAGroup(String),
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
}

impl Error {
    pub fn code(&self) -> &'static str {
        match self {
            Error::DivisionByZero => "division_by_zero",
            Error::NotAUnit(_) => "not_a_unit",
            Error::BothZero => "both_zero",
            Error::ZeroInput => "zero_input",
            Error::FactorCapExceeded(_) => "factor_cap_exceeded",
            Error::NotCoprime(..) => "not_coprime",
            Error::IterationCapExceeded(_) => "iteration_cap_exceeded",
            Error::BadDeterminant(_) => "bad_determinant",
            Error::UnitModulus(_) => "unit_modulus",
            Error::BoundExceeded { .. } => "bound_exceeded",
            Error::IntegrityError { .. } => "integrity_error",
            Error::BadRange(_) => "bad_range",
            Error::NotReduced(_) => "not_reduced",
            Error::NotAGroup(_) => "not_a_group",
            Error::Syntax { .. } => "syntax_error",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
