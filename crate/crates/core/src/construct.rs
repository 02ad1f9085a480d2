//! Every closed-form route to `Li_{-n}(z)`, each reduced to the canonical
//! numerator over `(1 - z)^(n+1)`.
//!
//! The sum-based routes are evaluated term by term exactly as written, with
//! no simplification before summation, so agreement with [`canonical`] is a
//! real check of each formula.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::algebra::{
    binomial, factorial, pow_signed, GaussianPolynomial, GaussianRational, IntPolynomial, PoleForm,
    PolyPseudoLog, Rational, RationalPolynomial,
};
use crate::error::{Error, Result};
use crate::numbers::{derivative_poly, eulerian_polynomial, stirling2, tangent};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ConstructionMethod {
    /// `(z d/dz)^n` applied to `1/(1-z)`.
    Operator,
    /// `Σ k! S(n,k) z^k / (1-z)^(k+1)`.
    StirlingA,
    /// `Σ (-1)^(n+k) k! S(n,k) z / (1-z)^(k+1)`.
    StirlingB,
    /// `Σ_{k=0..n} (-1)^(n+k) k! S(n+1,k+1) / (1-z)^(k+1)`.
    StirlingC,
    /// `A_n(z) / (1-z)^(n+1)`; the reference construction.
    Eulerian,
    /// The Eulerian numbers expanded as their alternating sum in place.
    DoubleSumExpanded,
    /// Polynomial in `w = (1+z)/(1-z)` with tangent-number coefficients.
    TangentClosedForm,
    /// `(i/2)^(n+1) P_n(-i (1+z)/(1-z))` over the Gaussian rationals.
    DerivativePolynomial,
}

impl ConstructionMethod {
    pub const ALL: [ConstructionMethod; 8] = [
        ConstructionMethod::Operator,
        ConstructionMethod::StirlingA,
        ConstructionMethod::StirlingB,
        ConstructionMethod::StirlingC,
        ConstructionMethod::Eulerian,
        ConstructionMethod::DoubleSumExpanded,
        ConstructionMethod::TangentClosedForm,
        ConstructionMethod::DerivativePolynomial,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ConstructionMethod::Operator => "operator",
            ConstructionMethod::StirlingA => "stirling_a",
            ConstructionMethod::StirlingB => "stirling_b",
            ConstructionMethod::StirlingC => "stirling_c",
            ConstructionMethod::Eulerian => "eulerian",
            ConstructionMethod::DoubleSumExpanded => "double_sum_expanded",
            ConstructionMethod::TangentClosedForm => "tangent_closed_form",
            ConstructionMethod::DerivativePolynomial => "derivative_polynomial",
        }
    }
}

impl fmt::Display for ConstructionMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ConstructionMethod {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        Self::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| format!("unknown construction method {s:?}"))
    }
}

/// `Li_{-n}(z)` in canonical form: the Eulerian polynomial over
/// `(1-z)^(n+1)` for `n >= 1`, and `z/(1-z)` for `n = 0`.
pub fn canonical(n: usize) -> PolyPseudoLog {
    let numerator = if n == 0 {
        IntPolynomial::x()
    } else {
        eulerian_polynomial(n).to_integer().expect("Eulerian numbers are integers")
    };
    PolyPseudoLog::new(n, numerator).expect("Eulerian numerators are canonical")
}

/// Builds `Li_{-n}(z)` by `method`. Order zero is rejected.
pub fn construct(method: ConstructionMethod, n: usize) -> Result<PolyPseudoLog> {
    if n == 0 {
        return Err(Error::OrderZero);
    }
    let form = match method {
        ConstructionMethod::Operator => (0..n).fold(PoleForm::geometric(), |f, _| f.euler_step()),
        ConstructionMethod::StirlingA => stirling_a(n),
        ConstructionMethod::StirlingB => stirling_b(n),
        ConstructionMethod::StirlingC => stirling_c(n),
        ConstructionMethod::Eulerian => return Ok(canonical(n)),
        ConstructionMethod::DoubleSumExpanded => double_sum_expanded(n),
        ConstructionMethod::TangentClosedForm => tangent_closed_form(n)?,
        ConstructionMethod::DerivativePolynomial => derivative_polynomial_route(n)?,
    };
    PolyPseudoLog::from_pole_form(n, form)
}

fn one_minus_z() -> IntPolynomial {
    IntPolynomial::from_i64(&[1, -1])
}

fn signed(value: BigInt, negative: bool) -> BigInt {
    if negative {
        -value
    } else {
        value
    }
}

/// Brings `Σ terms[i].0 / (1-z)^(terms[i].1)` over the common denominator
/// `(1-z)^exponent`.
fn over_common_power(terms: impl IntoIterator<Item = (IntPolynomial, usize)>, exponent: usize) -> PoleForm {
    let numerator = terms.into_iter().fold(IntPolynomial::zero(), |acc, (num, e)| {
        &acc + &(&num * &one_minus_z().pow(exponent - e))
    });
    PoleForm::new(numerator, exponent)
}

fn stirling_a(n: usize) -> PoleForm {
    let terms = (1..=n).map(|k| {
        let c = factorial(k) * stirling2(n, k);
        (IntPolynomial::monomial(c, k), k + 1)
    });
    over_common_power(terms, n + 1)
}

fn stirling_b(n: usize) -> PoleForm {
    let terms = (1..=n).map(|k| {
        let c = signed(factorial(k) * stirling2(n, k), (n + k) % 2 == 1);
        (IntPolynomial::monomial(c, 1), k + 1)
    });
    over_common_power(terms, n + 1)
}

fn stirling_c(n: usize) -> PoleForm {
    let terms = (0..=n).map(|k| {
        let c = signed(factorial(k) * stirling2(n + 1, k + 1), (n + k) % 2 == 1);
        (IntPolynomial::constant(c), k + 1)
    });
    over_common_power(terms, n + 1)
}

fn double_sum_expanded(n: usize) -> PoleForm {
    let coeffs = (0..=n)
        .map(|k| {
            (0..=k)
                .map(|l| signed(binomial(n + 1, l) * pow_signed((k - l) as i64, n), l % 2 == 1))
                .sum::<BigInt>()
        })
        .collect();
    PoleForm::new(IntPolynomial::new(coeffs), n + 1)
}

/// `(-1)^e` for any integer `e`.
fn parity_sign(e: i64) -> i64 {
    if e.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// Coefficients `a_0..a_(n+1)` of the bracketed polynomial in
/// `w = (1+z)/(1-z)`, before the overall factor `2^-(n+1)`.
///
/// Floors are taken toward negative infinity, so `⌊-1/2⌋ = -1`. Terms whose
/// tangent number vanishes by parity are skipped.
pub fn tangent_closed_form_w_coefficients(n: usize) -> Vec<Rational> {
    let n_i = n as i64;
    let mut coeffs = vec![Rational::zero(); n + 2];
    let t_n1 = tangent(n, 1);
    if !t_n1.is_zero() {
        // ⌊n/2 - 1⌋
        let e = Integer::div_floor(&(n_i - 2), &2);
        coeffs[0] = Rational::from_integer(t_n1 * parity_sign(e));
    }
    for k in 1..=n + 1 {
        let t = tangent(n + 1, k);
        if t.is_zero() {
            continue;
        }
        // ⌊(n-k)/2 - 1⌋
        let e = Integer::div_floor(&(n_i - k as i64 - 2), &2);
        coeffs[k] = Rational::new(t * parity_sign(e), BigInt::from(k));
    }
    coeffs
}

/// `(1+z)^j (1-z)^(m-j)` for `j = 0..=m`.
fn mixed_powers(m: usize) -> Vec<IntPolynomial> {
    let plus: Vec<IntPolynomial> = std::iter::successors(Some(IntPolynomial::one()), |p| {
        Some(p * &IntPolynomial::from_i64(&[1, 1]))
    })
    .take(m + 1)
    .collect();
    let minus: Vec<IntPolynomial> = std::iter::successors(Some(IntPolynomial::one()), |p| Some(p * &one_minus_z()))
        .take(m + 1)
        .collect();
    (0..=m).map(|j| &plus[j] * &minus[m - j]).collect()
}

fn tangent_closed_form(n: usize) -> Result<PoleForm> {
    let a = tangent_closed_form_w_coefficients(n);
    let basis = mixed_powers(n + 1);
    let scale = Rational::new(BigInt::one(), num_traits::pow(BigInt::from(2), n + 1));
    let numerator = a
        .iter()
        .zip(&basis)
        .filter(|(c, _)| !c.is_zero())
        .fold(RationalPolynomial::zero(), |acc, (c, b)| &acc + &b.to_rational().scale(c))
        .scale(&scale);
    let numerator = numerator.to_integer().ok_or_else(|| {
        Error::NotCanonical(format!("order {n}: tangent closed form has non-integer coefficients"))
    })?;
    Ok(PoleForm::new(numerator, n + 1))
}

/// Numerator over `(1-z)^(n+1)` of `(i/2)^(n+1) P_n(-i (1+z)/(1-z))`,
/// before the imaginary part is discarded.
pub fn derivative_route_numerator(n: usize) -> GaussianPolynomial {
    let p = derivative_poly(n).poly;
    let basis = mixed_powers(n + 1);
    let lift = |c: &Rational| GaussianRational::new(c.clone(), Rational::zero());
    let minus_i = GaussianRational::new(Rational::zero(), -Rational::one());
    let half_i = GaussianRational::new(Rational::zero(), Rational::new(BigInt::one(), BigInt::from(2)));

    let mut sum = GaussianPolynomial::zero();
    let mut minus_i_pow = GaussianRational::one();
    for (c, b) in p.coeffs().iter().zip(&basis) {
        if !c.is_zero() {
            let weight = lift(c) * minus_i_pow.clone();
            sum = &sum + &b.map(|x| lift(&Rational::from_integer(x.clone()))).scale(&weight);
        }
        minus_i_pow *= minus_i.clone();
    }
    sum.scale(&num_traits::pow(half_i, n + 1))
}

fn derivative_polynomial_route(n: usize) -> Result<PoleForm> {
    let gaussian = derivative_route_numerator(n);
    if gaussian.coeffs().iter().any(|c| !c.im.is_zero()) {
        return Err(Error::NonVanishingImaginaryPart { order: n });
    }
    let real = gaussian.map(|c| c.re.clone());
    let numerator = real.to_integer().ok_or_else(|| {
        Error::NotCanonical(format!("order {n}: derivative-polynomial route has non-integer coefficients"))
    })?;
    Ok(PoleForm::new(numerator, n + 1))
}
