use num_bigint::BigInt;

use super::table::{TriangleKind, TriangleTable};
use crate::algebra::{Rational, TruncatedSeries};

static TANGENT: TriangleTable = TriangleTable::new(TriangleKind::Tangent);

/// Higher-order tangent number `T(n,k)`, the coefficient of `t^n/n!` in
/// `tan^k t`, from the recurrence `T(n+1,k) = k (T(n,k-1) + T(n,k+1))`
/// seeded by `T(0,0) = 1`.
///
/// Zero unless `k <= n` and `n ≡ k (mod 2)`.
pub fn tangent(n: usize, k: usize) -> BigInt {
    TANGENT.get(n, k)
}

/// Row `n`: `T(n, 0..=n)`. The `k = 0` entry is zero for `n >= 1`.
pub fn tangent_row(n: usize) -> Vec<BigInt> {
    TANGENT.row(n)
}

fn tan_series(order: usize) -> TruncatedSeries {
    let sin = TruncatedSeries::<Rational>::sin(order);
    let cos = TruncatedSeries::<Rational>::cos(order);
    &sin * &cos.inverse().expect("cos(0) = 1")
}

fn egf_coefficient(series: &TruncatedSeries, n: usize) -> BigInt {
    let value = series.derivative_at_zero(n);
    assert!(value.is_integer(), "tangent numbers are integers");
    value.to_integer()
}

/// `T(n,k)` read off `tan^k t` built by repeated series multiplication.
pub fn tangent_via_series(n: usize, k: usize) -> BigInt {
    let tan = tan_series(n);
    egf_coefficient(&tan.pow(k), n)
}

/// Row `n` from the series oracle, `k = 0..=n`.
pub fn tangent_via_series_row(n: usize) -> Vec<BigInt> {
    let tan = tan_series(n);
    let mut power = TruncatedSeries::one(n);
    let mut row = Vec::with_capacity(n + 1);
    for _ in 0..=n {
        row.push(egf_coefficient(&power, n));
        power = &power * &tan;
    }
    row
}
