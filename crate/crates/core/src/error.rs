use thiserror::Error;

/// Errors raised by the exact-arithmetic pipeline.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero polynomial is not allowed here")]
    ZeroPolynomial,
    #[error("zero input is not allowed here")]
    ZeroInput,
    #[error("division by zero")]
    DivisionByZero,
    #[error("elements belong to different number fields")]
    MismatchedFields,
    #[error("minimal polynomial must be monic and irreducible: {0}")]
    NotIrreducible(String),
    #[error("element is not invariant under the quadratic conjugation")]
    NotGaloisSymmetric,
    #[error("symmetric bilinear form is singular")]
    SingularForm,
    #[error("matrix is not symmetric")]
    NonSymmetric,
    #[error("degree constraint violated: {0}")]
    DegreeConstraint(String),
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("tensor product is not alternating: {0}")]
    NotAlternating(String),
    #[error("matrix family does not commute: {0}")]
    NonCommuting(String),
    #[error("not an embedding: {0}")]
    NotEmbedding(String),
    #[error("query point lies on the curve")]
    PointOnCurve,
    #[error("degenerate configuration: {0}")]
    DegenerateConfiguration(String),
    #[error("no usable chart: {0}")]
    ChartFailure(String),
    #[error("polynomials are not coprime")]
    NotCoprime,
    #[error("coefficient matrix is singular")]
    SingularCoefficientMatrix,
    #[error("degree {0} exceeds the supported cap")]
    DegreeCap(usize),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// The variant name, used as a machine-readable error code.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::ZeroPolynomial => "ZeroPolynomial",
            Error::ZeroInput => "ZeroInput",
            Error::DivisionByZero => "DivisionByZero",
            Error::MismatchedFields => "MismatchedFields",
            Error::NotIrreducible(_) => "NotIrreducible",
            Error::NotGaloisSymmetric => "NotGaloisSymmetric",
            Error::SingularForm => "SingularForm",
            Error::NonSymmetric => "NonSymmetric",
            Error::DegreeConstraint(_) => "DegreeConstraint",
            Error::ShapeMismatch(_) => "ShapeMismatch",
            Error::NotAlternating(_) => "NotAlternating",
            Error::NonCommuting(_) => "NonCommuting",
            Error::NotEmbedding(_) => "NotEmbedding",
            Error::PointOnCurve => "PointOnCurve",
            Error::DegenerateConfiguration(_) => "DegenerateConfiguration",
            Error::ChartFailure(_) => "ChartFailure",
            Error::NotCoprime => "NotCoprime",
            Error::SingularCoefficientMatrix => "SingularCoefficientMatrix",
            Error::DegreeCap(_) => "DegreeCap",
            Error::Parse(_) => "Parse",
        }
    }
}
