use thiserror::Error;

/// Errors raised anywhere in the analysis pipeline.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at position {position}: {message}")]
    Syntax { position: usize, message: String },

    #[error("constant polynomial does not define a curve")]
    ConstantPolynomial,

    #[error("polynomial is not squarefree")]
    NotSquarefree,

    #[error("polynomial is not irreducible: {0}")]
    NotIrreducible(String),

    #[error("operation requires a nonzero polynomial")]
    ZeroPolynomial,

    #[error("both resultant inputs are constant in the eliminated variable")]
    ConstantInEliminatedVariable,

    #[error("factorization over an extension tower of depth {depth} is not supported (maximum {max})")]
    DepthExceeded { depth: usize, max: usize },

    #[error("branch expansion exceeded its recursion bound of {bound}")]
    NonTermination { bound: usize },

    #[error("valuation undetermined after expanding to {ceiling} terms")]
    PrecisionExhausted { ceiling: usize },

    #[error("function vanishes identically on the curve")]
    ZeroFunction,

    #[error("point {0} is not a point of the curve at infinity")]
    NotOnCurve(String),

    #[error("analysis not applicable: {0}")]
    Inapplicable(String),

    #[error("the curve is Egyptian; the reciprocal complement is the whole fraction field")]
    Egyptian,
}

impl Error {
    /// True for problems with the user's input rather than limits of the analysis.
    pub fn is_input_error(&self) -> bool {
        matches!(
            self,
            Error::Syntax { .. }
                | Error::ConstantPolynomial
                | Error::NotSquarefree
                | Error::NotIrreducible(_)
                | Error::ZeroPolynomial
        )
    }

    /// Short stable identifier used in reports.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::Syntax { .. } => "SyntaxError",
            Error::ConstantPolynomial => "ConstantPolynomial",
            Error::NotSquarefree => "NotSquarefree",
            Error::NotIrreducible(_) => "NotIrreducible",
            Error::ZeroPolynomial => "ZeroPolynomial",
            Error::ConstantInEliminatedVariable => "ConstantInEliminatedVariable",
            Error::DepthExceeded { .. } => "DepthExceeded",
            Error::NonTermination { .. } => "NonTermination",
            Error::PrecisionExhausted { .. } => "PrecisionExhausted",
            Error::ZeroFunction => "ZeroFunction",
            Error::NotOnCurve(_) => "NotOnCurve",
            Error::Inapplicable(_) => "InapplicableError",
            Error::Egyptian => "EgyptianError",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
