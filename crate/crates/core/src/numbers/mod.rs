//! Stirling, Eulerian, tangent and Bernoulli numbers, and the derivative
//! polynomials for tangent.
//!
//! Every triangle is produced by one primary method and paired with an
//! independent oracle (`*_explicit` / `*_via_series`) that the verification
//! battery compares against it.

mod bernoulli;
mod derivative;
mod eulerian;
mod stirling;
mod table;
mod tangent;

pub use bernoulli::{bernoulli, BernoulliCache};
pub use derivative::{derivative_poly, derivative_poly_via_tangent, DerivativePolynomial};
pub use eulerian::{eulerian, eulerian_polynomial, eulerian_row};
pub use stirling::{stirling2, stirling2_explicit, stirling2_row};
pub use table::{TriangleKind, TriangleTable};
pub use tangent::{tangent, tangent_row, tangent_via_series, tangent_via_series_row};
