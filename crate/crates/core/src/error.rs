use thiserror::Error;

use crate::Rational;

/// Why a curve point has no usable preimage on the quartic.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SkipReason {
    /// The identity element; its preimage is the trivial point `(0, q)`.
    Infinity,
    /// `y = 0`, where the inverse map divides by zero.
    TwoTorsion,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("{what}: expected length {expected}, found {found}")]
    DimensionMismatch {
        what: &'static str,
        expected: usize,
        found: usize,
    },

    #[error("invalid equation family: {0}")]
    InvalidFamily(String),

    #[error("sum of b_i*B_i*C_i^2 is zero")]
    ZeroDenominator,

    #[error("constant term {value} is not the square of a rational")]
    NotASquare { value: Box<Rational> },

    #[error("degenerate parameter: {0}")]
    DegenerateH(&'static str),

    #[error("curve is singular (discriminant 0)")]
    SingularCurve,

    #[error("({u}, {v}) does not lie on the quartic")]
    NotOnQuartic { u: Box<Rational>, v: Box<Rational> },

    #[error("point ({x}, {y}) does not lie on the curve")]
    PointNotOnCurve { x: Box<Rational>, y: Box<Rational> },

    #[error("point has y = 0; the inverse map is undefined there")]
    TwoTorsion,

    #[error("point skipped: {0:?}")]
    SkippablePoint(SkipReason),

    #[error("scale factor must be nonzero")]
    ZeroScale,

    #[error("identity check failed: residual {residual}")]
    VerificationFailed { residual: Box<Rational> },

    #[error("malformed identity text: {0}")]
    MalformedIdentity(String),
}

impl Error {
    /// True for failures caused by the mathematics of the chosen inputs
    /// rather than by malformed input.
    pub fn is_degeneracy(&self) -> bool {
        matches!(
            self,
            Error::ZeroDenominator | Error::NotASquare { .. } | Error::DegenerateH(_) | Error::SingularCurve
        )
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
