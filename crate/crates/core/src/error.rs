use thiserror::Error;

use crate::matrix::Shape;
use crate::scalar::Domain;

/// Every failure the algebra can report.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("domain mismatch: {0} vs {1}")]
    DomainMismatch(Domain, Domain),
    #[error("shape mismatch: {0} vs {1}")]
    ShapeMismatch(Shape, Shape),
    #[error("partition type mismatch: {0}")]
    TypeMismatch(String),
    #[error("{0} is not a unit in {1}")]
    NotAUnit(String, Domain),
    #[error("operation not supported over {0}: {1}")]
    UnsupportedDomain(Domain, String),
    #[error("value {0} leaves the cone {1}")]
    LeavesCone(String, Domain),
    #[error("value {0} is not an element of {1}")]
    NotInDomain(String, Domain),
    #[error("invalid modulus {0}: must be at least 2")]
    InvalidModulus(u64),
    #[error("invalid shape {0}x{1}: both dimensions must be positive")]
    InvalidShape(usize, usize),
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("matrix is not invertible under the natural product: entry ({row}, {col}) is not a unit")]
    NotInvertible { row: usize, col: usize },
    #[error("enumeration too large: {0}")]
    TooLarge(String),
    #[error("divisor has a zero entry at ({row}, {col})")]
    ZeroDivisorEntry { row: usize, col: usize },
    #[error("integral leaves the coefficient domain {domain}: coefficient of x^{degree} at ({row}, {col})")]
    NotClosed { domain: Domain, degree: usize, row: usize, col: usize },
    #[error("operation requires square coefficients, got {0}")]
    NotSquare(Shape),
    #[error("leading coefficient entry ({row}, {col}) has no inverse")]
    NotMonicizable { row: usize, col: usize },
    #[error("leading coefficient is a singular matrix")]
    SingularLead,
    #[error("leading coefficient has a zero entry at ({row}, {col})")]
    ZeroLead { row: usize, col: usize },
    #[error("no rational root in component {component}")]
    NoRationalRoot { component: usize },
    #[error("the zero polynomial has no leading coefficient")]
    ZeroPolynomial,
    #[error("element is not a member of the carrier")]
    NotMember,
    #[error("parse error at line {line}, column {col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },
    #[error("column cuts differ between row 1 and row {row}")]
    RaggedCuts { row: usize },
}

pub type Result<T> = std::result::Result<T, AlgebraError>;
