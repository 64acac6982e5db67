use thiserror::Error;

use crate::poly::Rational;

/// Errors raised by the analysis routines.
///
/// Every variant has a stable string code (see [`Error::code`]) that the
/// command-line front end reports verbatim.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("polynomial is not monic (leading coefficient {0})")]
    NonMonic(Rational),
    #[error("gcd of two zero polynomials is undefined")]
    BothZero,
    #[error("the zero polynomial is not a valid input")]
    ZeroPolynomial,
    #[error("index {index} out of range for {len} values")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("denominator polynomial is zero")]
    ZeroDenominator,
    #[error("interval endpoint {0} is a root of the denominator")]
    EndpointIsPole(Rational),
    #[error("interval is empty: lower bound is not below upper bound")]
    EmptyInterval,
    #[error("polynomial has degree zero")]
    DegreeZero,
    #[error("polynomial has degree {degree}, at least {min} required")]
    DegreeTooSmall { degree: usize, min: usize },
    #[error("every root lies on the imaginary axis")]
    AllRootsImaginary,
    #[error("not applicable: {0}")]
    NotApplicable(String),
    #[error("r must be positive")]
    RNonPositive,
    #[error("hypothesis violated: {0}")]
    HypothesisViolation(String),
    #[error("list is not closed under complex conjugation")]
    NotSelfConjugate,
    #[error("internal assertion failed: {0}")]
    InternalAssertion(String),
    #[error("could not separate root clusters at {0} bits")]
    PrecisionExhausted(u32),
    #[error("root too close to the imaginary axis to classify at {0} bits")]
    Undecidable(u32),
}

impl Error {
    pub fn code(&self) -> &'static str {
        match self {
            Error::NonMonic(_) => "E_NON_MONIC",
            Error::BothZero => "E_BOTH_ZERO",
            Error::ZeroPolynomial => "E_ZERO_POLYNOMIAL",
            Error::IndexOutOfRange { .. } => "E_INDEX_OUT_OF_RANGE",
            Error::ZeroDenominator => "E_ZERO_DENOMINATOR",
            Error::EndpointIsPole(_) => "E_ENDPOINT_IS_POLE",
            Error::EmptyInterval => "E_EMPTY_INTERVAL",
            Error::DegreeZero => "E_DEGREE_ZERO",
            Error::DegreeTooSmall { .. } => "E_DEGREE_TOO_SMALL",
            Error::AllRootsImaginary => "E_ALL_ROOTS_IMAGINARY",
            Error::NotApplicable(_) => "E_NOT_APPLICABLE",
            Error::RNonPositive => "E_R_NON_POSITIVE",
            Error::HypothesisViolation(_) => "E_HYPOTHESIS_VIOLATION",
            Error::NotSelfConjugate => "E_NOT_SELF_CONJUGATE",
            Error::InternalAssertion(_) => "E_INTERNAL_ASSERTION",
            Error::PrecisionExhausted(_) => "E_PRECISION_EXHAUSTED",
            Error::Undecidable(_) => "E_UNDECIDABLE",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
