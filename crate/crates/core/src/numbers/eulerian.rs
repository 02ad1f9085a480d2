use num_bigint::BigInt;
use num_traits::Zero;

use super::table::{TriangleKind, TriangleTable};
use crate::algebra::{binomial, pow_signed, Rational, RationalPolynomial};

static EULERIAN: TriangleTable = TriangleTable::new(TriangleKind::Eulerian);

/// `A(n,k) = Σ_{l=0..k} (-1)^l C(n+1,l) (k-l)^n` with `0^0 = 1`.
pub(crate) fn eulerian_explicit(n: usize, k: usize) -> BigInt {
    (0..=k)
        .map(|l| {
            let term = binomial(n + 1, l) * pow_signed((k - l) as i64, n);
            if l % 2 == 0 { term } else { -term }
        })
        .sum()
}

/// Eulerian number in the convention `A(n,0) = 0` for `n >= 1`,
/// `A(0,0) = 1`. Zero for `k` outside `0..=n`.
pub fn eulerian(n: usize, k: i64) -> BigInt {
    match usize::try_from(k) {
        Ok(k) if k <= n => EULERIAN.get(n, k),
        _ => BigInt::zero(),
    }
}

pub fn eulerian_row(n: usize) -> Vec<BigInt> {
    EULERIAN.row(n)
}

/// `A_n(x) = Σ_k A(n,k) x^k`.
pub fn eulerian_polynomial(n: usize) -> RationalPolynomial {
    RationalPolynomial::new(eulerian_row(n).into_iter().map(Rational::from_integer).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{factorial, int};

    /// Counts permutations of `1..=n` by number of descents; `A(n,k)`
    /// counts those with `k - 1` descents.
    fn count_by_descents(n: usize) -> Vec<u64> {
        fn walk(perm: &mut Vec<usize>, used: &mut [bool], counts: &mut [u64]) {
            let n = used.len();
            if perm.len() == n {
                let d = perm.windows(2).filter(|w| w[0] > w[1]).count();
                counts[d + 1] += 1;
                return;
            }
            for v in 0..n {
                if !used[v] {
                    used[v] = true;
                    perm.push(v);
                    walk(perm, used, counts);
                    perm.pop();
                    used[v] = false;
                }
            }
        }
        let mut counts = vec![0; n + 1];
        walk(&mut Vec::new(), &mut vec![false; n], &mut counts);
        counts
    }

    #[test]
    fn matches_permutation_count() {
        for n in 1..=7 {
            let expected: Vec<BigInt> = count_by_descents(n).into_iter().map(BigInt::from).collect();
            assert_eq!(eulerian_row(n), expected, "row {n}");
        }
    }

    #[test]
    fn printed_values() {
        assert_eq!(eulerian_row(3), [0, 1, 4, 1].map(BigInt::from));
        assert_eq!(eulerian(8, 4), BigInt::from(15619));
        assert_eq!(eulerian(0, 0), BigInt::from(1));
        for n in 1..12 {
            assert_eq!(eulerian(n, 1), BigInt::from(1));
        }
        assert_eq!(eulerian(4, -1), BigInt::zero());
        assert_eq!(eulerian(4, 5), BigInt::zero());
        assert_eq!(eulerian_explicit(4, 5), BigInt::zero());
    }

    #[test]
    fn polynomial_form() {
        assert_eq!(eulerian_polynomial(3), RationalPolynomial::from_i64(&[0, 1, 4, 1]));
        assert_eq!(eulerian_polynomial(0), RationalPolynomial::from_i64(&[1]));
        assert_eq!(eulerian_polynomial(5).eval(&int(1)), int(120));
    }

    #[test]
    fn row_sums_and_symmetry() {
        for n in 1..=20 {
            let row = eulerian_row(n);
            assert_eq!(row.iter().sum::<BigInt>(), factorial(n));
            assert!(row[0].is_zero());
            for k in 1..=n {
                assert_eq!(row[k], row[n + 1 - k], "A({n},{k})");
            }
        }
    }
}
