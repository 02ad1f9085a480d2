use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::poly::IntPolynomial;
use super::rational::Rational;
use crate::error::{Error, Result};

/// `1 - z`
fn one_minus_z() -> IntPolynomial {
    IntPolynomial::from_i64(&[1, -1])
}

/// An integer polynomial over a literal power of `(1 - z)`.
///
/// This is the working representation every construction reduces to before
/// it is checked into a [`PolyPseudoLog`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PoleForm {
    pub numerator: IntPolynomial,
    pub exponent: usize,
}

impl PoleForm {
    pub fn new(numerator: IntPolynomial, exponent: usize) -> Self {
        PoleForm { numerator, exponent }
    }

    /// `1/(1-z)`, the seed of the operator construction.
    pub fn geometric() -> Self {
        PoleForm::new(IntPolynomial::one(), 1)
    }

    /// Applies `z·d/dz`:
    /// `z (N'(1-z) + m N) / (1-z)^(m+1)`.
    pub fn euler_step(&self) -> Self {
        let m = BigInt::from(self.exponent);
        let inner = &(&self.numerator.derivative() * &one_minus_z()) + &self.numerator.scale(&m);
        PoleForm::new(inner.shift(1), self.exponent + 1)
    }

    /// Divides out every factor of `(1 - z)` shared by numerator and
    /// denominator.
    pub fn reduced(mut self) -> Self {
        while self.exponent > 0 && !self.numerator.is_zero() && self.numerator.eval_at_one().is_zero() {
            self.numerator = self
                .numerator
                .div_exact(&one_minus_z())
                .expect("N(1) = 0 implies (1 - z) divides N");
            self.exponent -= 1;
        }
        self
    }
}

/// `Li_{-n}(z)` in canonical form `N(z)/(1-z)^(n+1)`.
///
/// Invariants, enforced by [`PolyPseudoLog::new`]: `N(0) = 0`, `N(1) != 0`,
/// and `deg N = n` for `n >= 1` (`deg N = 1` for `n = 0`).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PolyPseudoLog {
    order: usize,
    numerator: IntPolynomial,
}

impl PolyPseudoLog {
    pub fn new(order: usize, numerator: IntPolynomial) -> Result<Self> {
        let fail = |why: &str| Err(Error::NotCanonical(format!("order {order}: {why}")));
        if numerator.eval_at_one().is_zero() {
            return fail("numerator vanishes at z = 1");
        }
        if !numerator.coeff(0).is_zero() {
            return fail("numerator has a nonzero constant term");
        }
        let expected = order.max(1);
        if numerator.degree() != Some(expected) {
            return fail(&format!("numerator degree is {:?}, expected {expected}", numerator.degree()));
        }
        Ok(PolyPseudoLog { order, numerator })
    }

    /// Builds from a pole form whose shared `(1 - z)` factors have already
    /// been removed and whose exponent must be `order + 1`.
    pub fn from_pole_form(order: usize, form: PoleForm) -> Result<Self> {
        let form = form.reduced();
        if form.exponent != order + 1 {
            return Err(Error::NotCanonical(format!(
                "order {order}: reduced denominator exponent is {}, expected {}",
                form.exponent,
                order + 1
            )));
        }
        Self::new(order, form.numerator)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn numerator(&self) -> &IntPolynomial {
        &self.numerator
    }

    pub fn denominator_exponent(&self) -> usize {
        self.order + 1
    }

    pub fn to_pole_form(&self) -> PoleForm {
        PoleForm::new(self.numerator.clone(), self.denominator_exponent())
    }

    pub fn to_rational_function(&self) -> RationalFunction {
        RationalFunction::new(self.numerator.clone(), one_minus_z().pow(self.denominator_exponent()))
    }

    /// `z·d/dz`, taking `Li_{-n}` to `Li_{-(n+1)}`.
    pub fn euler_operator(&self) -> PolyPseudoLog {
        Self::from_pole_form(self.order + 1, self.to_pole_form().euler_step())
            .expect("z d/dz preserves the canonical form")
    }

    /// `f(1/z)` in canonical form. Order zero is rejected: `Li_0(1/z)` has a
    /// constant term and is not itself a polypseudolog.
    pub fn substitute_reciprocal(&self) -> Result<PolyPseudoLog> {
        if self.order == 0 {
            return Err(Error::InversionAtOrderZero);
        }
        // N(1/z)/(1-1/z)^m = (-1)^m z^m N(1/z) / (1-z)^m
        let m = self.denominator_exponent();
        let mut flipped = self.numerator.reversed(m + 1);
        if m % 2 == 1 {
            flipped = -flipped;
        }
        Self::new(self.order, flipped)
    }

    /// `f(-z) = N(-z)/(1+z)^(n+1)`.
    pub fn compose_neg(&self) -> RationalFunction {
        let minus_z = IntPolynomial::from_i64(&[0, -1]);
        RationalFunction::new(
            self.numerator.compose(&minus_z),
            IntPolynomial::from_i64(&[1, 1]).pow(self.denominator_exponent()),
        )
    }

    /// `f(z^2) = N(z^2)/((1-z)^(n+1) (1+z)^(n+1))`.
    pub fn compose_square(&self) -> RationalFunction {
        let z2 = IntPolynomial::from_i64(&[0, 0, 1]);
        let m = self.denominator_exponent();
        RationalFunction::new(
            self.numerator.compose(&z2),
            &one_minus_z().pow(m) * &IntPolynomial::from_i64(&[1, 1]).pow(m),
        )
    }

    pub fn eval(&self, z: &Rational) -> Result<Rational> {
        if z.is_one() {
            return Err(Error::PoleAtUnity { order: self.order });
        }
        let den = num_traits::pow(Rational::one() - z, self.denominator_exponent());
        Ok(self.numerator.eval_rational(z) / den)
    }

    /// Whether the coefficients of `z^1..z^n` read the same both ways.
    pub fn is_palindromic(&self) -> bool {
        self.numerator.is_palindromic_from(1)
    }

    pub fn to_record(&self) -> PolyPseudoLogRecord {
        PolyPseudoLogRecord {
            n: self.order,
            numerator: self.numerator.coeffs().iter().map(ToString::to_string).collect(),
            den_exp: self.denominator_exponent(),
        }
    }
}

impl fmt::Display for PolyPseudoLog {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let m = self.denominator_exponent();
        let den = if m == 1 { "(1 - z)".to_string() } else { format!("(1 - z)^{m}") };
        let num = self.numerator.display_in("z");
        if num.contains(' ') {
            write!(f, "({num})/{den}")
        } else {
            write!(f, "{num}/{den}")
        }
    }
}

/// Plain serializable view: numerator coefficients as decimal strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyPseudoLogRecord {
    pub n: usize,
    pub numerator: Vec<String>,
    pub den_exp: usize,
}

/// Quotient of integer polynomials, compared by cross multiplication.
#[derive(Clone, Debug)]
pub struct RationalFunction {
    pub numerator: IntPolynomial,
    pub denominator: IntPolynomial,
}

impl RationalFunction {
    pub fn new(numerator: IntPolynomial, denominator: IntPolynomial) -> Self {
        assert!(!denominator.is_zero(), "zero denominator");
        RationalFunction { numerator, denominator }
    }

    pub fn add(&self, other: &Self) -> Self {
        let num = &(&self.numerator * &other.denominator) + &(&other.numerator * &self.denominator);
        RationalFunction::new(num, &self.denominator * &other.denominator)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        RationalFunction::new(self.numerator.scale(c), self.denominator.clone())
    }

    /// Equality as rational functions.
    pub fn same_function(&self, other: &Self) -> bool {
        &self.numerator * &other.denominator == &other.numerator * &self.denominator
    }

    pub fn eval(&self, z: &Rational) -> Option<Rational> {
        let den = self.denominator.eval_rational(z);
        (!den.is_zero()).then(|| self.numerator.eval_rational(z) / den)
    }
}
