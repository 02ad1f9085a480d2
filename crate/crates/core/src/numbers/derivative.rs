use crate::algebra::{Rational, RationalPolynomial};

use super::tangent::tangent;

/// `P_n(x)` with `d^n/dt^n tan t = P_n(tan t)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DerivativePolynomial {
    pub order: usize,
    pub poly: RationalPolynomial,
}

/// `P_0 = x`, `P_n = (1 + x^2) P'_{n-1}`.
pub fn derivative_poly(n: usize) -> DerivativePolynomial {
    let one_plus_x2 = RationalPolynomial::from_i64(&[1, 0, 1]);
    let poly = (0..n).fold(RationalPolynomial::x(), |p, _| &one_plus_x2 * &p.derivative());
    DerivativePolynomial { order: n, poly }
}

/// `P_n(x) = T(n,1) + Σ_{k=1..n+1} T(n+1,k)/k · x^k`, for `n >= 1`.
pub fn derivative_poly_via_tangent(n: usize) -> DerivativePolynomial {
    assert!(n >= 1, "the tangent-number form holds for n >= 1");
    let mut coeffs = vec![Rational::from_integer(tangent(n, 1))];
    for k in 1..=n + 1 {
        coeffs.push(Rational::new(tangent(n + 1, k), k.into()));
    }
    DerivativePolynomial { order: n, poly: RationalPolynomial::new(coeffs) }
}
