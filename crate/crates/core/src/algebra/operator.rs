use super::poly::RationalPolynomial;

/// `(z·d/dz)^n p` by repeated direct application. `n = 0` returns `p`.
pub fn apply_euler_operator_n(p: &RationalPolynomial, n: usize) -> RationalPolynomial {
    (0..n).fold(p.clone(), |acc, _| acc.derivative().shift(1))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rp(c: &[i64]) -> RationalPolynomial {
        RationalPolynomial::from_i64(c)
    }

    #[test]
    fn monomials_scale_by_degree_power() {
        assert_eq!(apply_euler_operator_n(&rp(&[0, 1]), 5), rp(&[0, 1]));
        assert_eq!(apply_euler_operator_n(&rp(&[0, 0, 1]), 3), rp(&[0, 0, 8]));
        assert_eq!(apply_euler_operator_n(&rp(&[0, 1, 0, 1]), 2), rp(&[0, 1, 0, 9]));
        assert_eq!(apply_euler_operator_n(&rp(&[7]), 1), rp(&[]));
    }
}
