use thiserror::Error;

/// Errors raised by the library.
///
/// Inexact polynomial division is not represented here: it can only arise
/// from a broken invariant and panics instead.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("Li_{{-{order}}}(z) has a pole of order {} at z = 1", order + 1)]
    PoleAtUnity { order: usize },

    #[error("the inversion relation is only defined for order n >= 1")]
    InversionAtOrderZero,

    #[error("closed-form constructions require order n >= 1")]
    OrderZero,

    #[error("series inverse requires a nonzero constant term")]
    ZeroConstantTerm,

    #[error("Gaussian-rational construction left a nonzero imaginary part at order {order}")]
    NonVanishingImaginaryPart { order: usize },

    #[error("not a canonical polypseudolog: {0}")]
    NotCanonical(String),

    #[error("series oracle requires |z| < 1, got {0}")]
    OutsideUnitDisc(String),

    #[error("series oracle requires at least one term")]
    EmptyPartialSum,

    #[error("cannot parse rational literal {0:?}")]
    ParseRational(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
