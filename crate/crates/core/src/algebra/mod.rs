//! Exact scalar, polynomial, rational-function and truncated power series
//! arithmetic.

mod operator;
mod poly;
mod pseudolog;
mod rational;
mod series;

pub use operator::apply_euler_operator_n;
pub use poly::{Coefficient, Field, GaussianPolynomial, IntPolynomial, Poly, RationalPolynomial};
pub use pseudolog::{PoleForm, PolyPseudoLog, PolyPseudoLogRecord, RationalFunction};
pub use rational::{
    binomial, factorial, gaussian, int, parse_rational, pow_signed, rat, to_decimal,
    GaussianRational, Rational,
};
pub use series::{TruncatedSeries, DEFAULT_TRUNCATION};
