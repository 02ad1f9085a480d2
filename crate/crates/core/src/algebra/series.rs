use std::ops::{Add, Mul, Neg, Sub};


use super::poly::{Field, Poly};
use super::rational::Rational;
use crate::error::{Error, Result};

/// Truncation order used when none is requested.
pub const DEFAULT_TRUNCATION: usize = 12;

/// Formal power series in `t` known modulo `t^(order+1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries<T = Rational> {
    coeffs: Vec<T>,
}

impl<T: Field> TruncatedSeries<T> {
    /// Pads with zeros or truncates `coeffs` to `order + 1` entries.
    pub fn new(mut coeffs: Vec<T>, order: usize) -> Self {
        coeffs.resize(order + 1, T::zero());
        TruncatedSeries { coeffs }
    }

    pub fn constant(c: T, order: usize) -> Self {
        Self::new(vec![c], order)
    }

    pub fn one(order: usize) -> Self {
        Self::constant(T::one(), order)
    }

    /// The series `t`.
    pub fn variable(order: usize) -> Self {
        Self::new(vec![T::zero(), T::one()], order)
    }

    /// `exp(a·t)`.
    pub fn exp_scaled(a: &T, order: usize) -> Self {
        let mut coeffs = Vec::with_capacity(order + 1);
        let mut term = T::one();
        coeffs.push(term.clone());
        for k in 1..=order {
            term = term * a.clone() / T::from_usize(k);
            coeffs.push(term.clone());
        }
        TruncatedSeries { coeffs }
    }

    pub fn exp(order: usize) -> Self {
        Self::exp_scaled(&T::one(), order)
    }

    pub fn sin(order: usize) -> Self {
        Self::trig(order, 1)
    }

    pub fn cos(order: usize) -> Self {
        Self::trig(order, 0)
    }

    fn trig(order: usize, parity: usize) -> Self {
        let exp = Self::exp(order);
        let coeffs = exp
            .coeffs
            .into_iter()
            .enumerate()
            .map(|(k, c)| match (k % 2 == parity, (k / 2) % 2 == 0) {
                (false, _) => T::zero(),
                (true, true) => c,
                (true, false) => -c,
            })
            .collect();
        TruncatedSeries { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<T> {
        self.coeffs
    }

    /// Coefficient of `t^n`; zero past the truncation order.
    pub fn coeff(&self, n: usize) -> T {
        self.coeffs.get(n).cloned().unwrap_or_else(T::zero)
    }

    /// `n!·c_n`, the `n`-th derivative at `t = 0`.
    pub fn derivative_at_zero(&self, n: usize) -> T {
        (1..=n).fold(self.coeff(n), |acc, k| acc * T::from_usize(k))
    }

    pub fn scale(&self, c: &T) -> Self {
        TruncatedSeries { coeffs: self.coeffs.iter().map(|a| a.clone() * c.clone()).collect() }
    }

    /// Multiplicative inverse. Fails when the constant term is zero.
    pub fn inverse(&self) -> Result<Self> {
        let c0 = self.coeffs[0].clone();
        if c0.is_zero() {
            return Err(Error::ZeroConstantTerm);
        }
        let inv0 = T::one() / c0;
        let mut out: Vec<T> = Vec::with_capacity(self.coeffs.len());
        out.push(inv0.clone());
        for n in 1..self.coeffs.len() {
            let mut acc = T::zero();
            for k in 1..=n {
                acc = acc + self.coeffs[k].clone() * out[n - k].clone();
            }
            out.push(-(acc * inv0.clone()));
        }
        Ok(TruncatedSeries { coeffs: out })
    }

    /// Term-wise derivative. The result is known to one order less; at
    /// order zero it is the zero series of order zero.
    pub fn derivative(&self) -> Self {
        if self.coeffs.len() == 1 {
            return Self::constant(T::zero(), 0);
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c.clone() * T::from_usize(k))
            .collect();
        TruncatedSeries { coeffs }
    }

    pub fn pow(&self, exp: usize) -> Self {
        (0..exp).fold(Self::one(self.order()), |acc, _| &acc * self)
    }

    /// `p(self)`, evaluating a polynomial at this series.
    pub fn compose_into(&self, p: &Poly<T>) -> Self {
        p.coeffs().iter().rev().fold(Self::constant(T::zero(), self.order()), |acc, c| {
            &(&acc * self) + &Self::constant(c.clone(), self.order())
        })
    }

    fn truncate_to(mut self, order: usize) -> Self {
        self.coeffs.truncate(order + 1);
        self
    }
}

impl<T: Field> Add for &TruncatedSeries<T> {
    type Output = TruncatedSeries<T>;
    fn add(self, rhs: Self) -> TruncatedSeries<T> {
        let order = self.order().min(rhs.order());
        let coeffs = (0..=order).map(|i| self.coeffs[i].clone() + rhs.coeffs[i].clone()).collect();
        TruncatedSeries { coeffs }
    }
}

impl<T: Field> Sub for &TruncatedSeries<T> {
    type Output = TruncatedSeries<T>;
    fn sub(self, rhs: Self) -> TruncatedSeries<T> {
        self + &(-rhs)
    }
}

impl<T: Field> Neg for &TruncatedSeries<T> {
    type Output = TruncatedSeries<T>;
    fn neg(self) -> TruncatedSeries<T> {
        TruncatedSeries { coeffs: self.coeffs.iter().map(|c| -c.clone()).collect() }
    }
}

impl<T: Field> Mul for &TruncatedSeries<T> {
    type Output = TruncatedSeries<T>;
    fn mul(self, rhs: Self) -> TruncatedSeries<T> {
        let order = self.order().min(rhs.order());
        let mut out = vec![T::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(order + 1 - i) {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        TruncatedSeries { coeffs: out }.truncate_to(order)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::{int, rat};
    use proptest::prelude::*;

    fn s(c: Vec<Rational>, n: usize) -> TruncatedSeries {
        TruncatedSeries::new(c, n)
    }

    #[test]
    fn exp_squared_is_exp_double() {
        let e = TruncatedSeries::<Rational>::exp(3);
        assert_eq!((&e * &e).coeffs(), &[int(1), int(2), int(2), rat(4, 3)]);
        assert_eq!(&e * &e, TruncatedSeries::exp_scaled(&int(2), 3));
    }

    #[test]
    fn geometric_inverse() {
        let a = s(vec![int(1), int(-1)], 3);
        assert_eq!(a.inverse().unwrap().coeffs(), &[int(1), int(1), int(1), int(1)]);
        let z = s(vec![int(0), int(1)], 3);
        assert_eq!(z.inverse(), Err(Error::ZeroConstantTerm));
    }

    #[test]
    fn derivative_of_truncated_exp() {
        let e = TruncatedSeries::<Rational>::exp(3);
        assert_eq!(e.derivative().coeffs(), &[int(1), int(1), rat(1, 2)]);
        assert_eq!(TruncatedSeries::<Rational>::one(0).derivative().coeffs(), &[int(0)]);
    }

    #[test]
    fn pythagoras_and_tan() {
        let n = 10;
        let (sn, cs) = (TruncatedSeries::<Rational>::sin(n), TruncatedSeries::<Rational>::cos(n));
        let one = &(&sn * &sn) + &(&cs * &cs);
        assert_eq!(one, TruncatedSeries::one(n));
        let tan = &sn * &cs.inverse().unwrap();
        // tan t = t + t^3/3 + 2t^5/15 + 17t^7/315
        assert_eq!(tan.coeff(3), rat(1, 3));
        assert_eq!(tan.coeff(5), rat(2, 15));
        assert_eq!(tan.coeff(7), rat(17, 315));
        assert_eq!(tan.derivative_at_zero(7), int(272));
    }

    #[test]
    fn polynomial_composition() {
        // (e^t)^2 via x^2 composed into e^t
        let e = TruncatedSeries::<Rational>::exp(6);
        let sq = Poly::monomial(int(1), 2);
        assert_eq!(e.compose_into(&sq), TruncatedSeries::exp_scaled(&int(2), 6));
    }

    fn series_with_unit() -> impl Strategy<Value = TruncatedSeries> {
        (prop::collection::vec((-9i64..=9, 1i64..=5), 1..8), 1i64..=5).prop_map(|(c, c0)| {
            let mut coeffs: Vec<Rational> = c.into_iter().map(|(p, q)| rat(p, q)).collect();
            coeffs[0] = int(c0);
            TruncatedSeries::new(coeffs, DEFAULT_TRUNCATION)
        })
    }

    proptest! {
        #[test]
        fn inverse_is_two_sided(a in series_with_unit()) {
            let inv = a.inverse().unwrap();
            prop_assert_eq!(&a * &inv, TruncatedSeries::one(DEFAULT_TRUNCATION));
            prop_assert_eq!(&inv * &a, TruncatedSeries::one(DEFAULT_TRUNCATION));
        }
    }
}
