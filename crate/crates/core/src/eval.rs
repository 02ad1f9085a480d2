//! Exact pointwise evaluation of `Li_{-n}(z)` by the canonical form, the
//! double-sum formulas, the partial-sum oracle and the Bernoulli special
//! values at `z = -1`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::algebra::{binomial, pow_signed, Rational};
use crate::construct::canonical;
use crate::error::{Error, Result};
use crate::numbers::bernoulli;

pub fn eval_exact(n: usize, z: &Rational) -> Result<Rational> {
    canonical(n).eval(z)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DoubleSumVariant {
    A,
    B,
    C,
}

impl DoubleSumVariant {
    pub const ALL: [DoubleSumVariant; 3] = [DoubleSumVariant::A, DoubleSumVariant::B, DoubleSumVariant::C];
}

impl fmt::Display for DoubleSumVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            DoubleSumVariant::A => "a",
            DoubleSumVariant::B => "b",
            DoubleSumVariant::C => "c",
        };
        f.write_str(s)
    }
}

impl FromStr for DoubleSumVariant {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "a" => Ok(DoubleSumVariant::A),
            "b" => Ok(DoubleSumVariant::B),
            "c" => Ok(DoubleSumVariant::C),
            _ => Err(format!("unknown double-sum variant {s:?}")),
        }
    }
}

fn signed(value: BigInt, negative: bool) -> BigInt {
    if negative {
        -value
    } else {
        value
    }
}

/// Evaluates one of the three double finite sums for `Li_{-n}(z)`, term by
/// term at the given point.
pub fn eval_double_sum(variant: DoubleSumVariant, n: usize, z: &Rational) -> Result<Rational> {
    if z.is_one() {
        return Err(Error::PoleAtUnity { order: n });
    }
    if n == 0 {
        return Err(Error::OrderZero);
    }
    let inv = Rational::one() / (Rational::one() - z);
    // inv_pows[j] = (1-z)^(-j)
    let inv_pows: Vec<Rational> = std::iter::successors(Some(Rational::one()), |p| Some(p * &inv))
        .take(n + 3)
        .collect();
    let mut total = Rational::zero();
    match variant {
        DoubleSumVariant::A => {
            let mut z_pow = Rational::one();
            for k in 1..=n {
                z_pow *= z;
                let inner: BigInt = (0..=k)
                    .map(|l| signed(binomial(k, l) * pow_signed(l as i64, n), (k - l) % 2 == 1))
                    .sum();
                total += Rational::from_integer(inner) * &z_pow * &inv_pows[k + 1];
            }
        }
        DoubleSumVariant::B => {
            for k in 1..=n {
                let inner: BigInt = (0..=k)
                    .map(|l| signed(binomial(k, l) * pow_signed(l as i64, n), (n + l) % 2 == 1))
                    .sum();
                total += Rational::from_integer(inner) * z * &inv_pows[k + 1];
            }
        }
        DoubleSumVariant::C => {
            for k in 0..=n {
                let inner: BigInt = (0..=k + 1)
                    .map(|l| signed(binomial(k + 1, l) * pow_signed(l as i64, n + 1), (n + 1 + l) % 2 == 1))
                    .sum();
                total += Rational::new(inner, BigInt::from(k + 1)) * &inv_pows[k + 1];
            }
        }
    }
    Ok(total)
}

/// `Σ_{k=1..terms} k^n z^k`, exactly.
pub fn eval_series_oracle(n: usize, z: &Rational, terms: usize) -> Result<Rational> {
    if z.abs() >= Rational::one() {
        return Err(Error::OutsideUnitDisc(z.to_string()));
    }
    if terms == 0 {
        return Err(Error::EmptyPartialSum);
    }
    let mut z_pow = Rational::one();
    let mut sum = Rational::zero();
    for k in 1..=terms {
        z_pow *= z;
        sum += Rational::from_integer(pow_signed(k as i64, n)) * &z_pow;
    }
    Ok(sum)
}

/// `Li_{-n}(-1) = (1 - 2^(n+1)) B_{n+1} / (n+1)` for `n >= 1`.
pub fn special_value_neg1(n: usize) -> Result<Rational> {
    if n == 0 {
        return Err(Error::OrderZero);
    }
    let factor = Rational::from_integer(BigInt::one() - num_traits::pow(BigInt::from(2), n + 1));
    Ok(factor * bernoulli(n + 1) / Rational::from_integer(BigInt::from(n + 1)))
}
