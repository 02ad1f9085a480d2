use num_bigint::BigInt;
use num_traits::Zero;

use super::table::{TriangleKind, TriangleTable};
use crate::algebra::{binomial, factorial, pow_signed};

static STIRLING2: TriangleTable = TriangleTable::new(TriangleKind::Stirling2);

/// Stirling number of the second kind from the memoized recurrence.
/// Returns 0 for `k > n`.
pub fn stirling2(n: usize, k: usize) -> BigInt {
    STIRLING2.get(n, k)
}

/// Row `n`: `S(n, 0..=n)`.
pub fn stirling2_row(n: usize) -> Vec<BigInt> {
    STIRLING2.row(n)
}

/// `(1/k!) Σ_l (-1)^(k-l) C(k,l) l^n`, with `0^0 = 1`.
pub fn stirling2_explicit(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let sum: BigInt = (0..=k)
        .map(|l| {
            let term = binomial(k, l) * pow_signed(l as i64, n);
            if (k - l).is_multiple_of(2) { term } else { -term }
        })
        .sum();
    let (q, r) = num_integer::Integer::div_rem(&sum, &factorial(k));
    debug_assert!(r.is_zero());
    q
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seeds_and_small_values() {
        assert_eq!(stirling2(0, 0), BigInt::from(1));
        assert_eq!(stirling2(4, 2), BigInt::from(7));
        assert_eq!(stirling2_explicit(4, 2), BigInt::from(7));
        assert_eq!(stirling2(3, 5), BigInt::from(0));
        assert_eq!(stirling2(6, 0), BigInt::from(0));
        for n in 0..15 {
            assert_eq!(stirling2(n, n), BigInt::from(1));
        }
        assert_eq!(stirling2_row(4), [0, 1, 7, 6, 1].map(BigInt::from));
    }

    #[test]
    fn explicit_sum_agrees_with_recurrence() {
        for n in 0..=20 {
            for k in 0..=n {
                assert_eq!(stirling2(n, k), stirling2_explicit(n, k), "S({n},{k})");
            }
        }
    }
}
