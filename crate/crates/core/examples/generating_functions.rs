//! Taylor coefficients of the five exponential generating kernels, checked
//! against `n! c_n = ±Li_{-n}(z)`.

use polypseudolog::algebra::{factorial, rat, Rational};
use polypseudolog::gf::{gf_taylor, pinned_egf_value, GFKernel};

fn main() {
    let z = rat(1, 3);
    let order = 8;
    for kernel in GFKernel::ALL {
        let coeffs = gf_taylor(kernel, &z, order).unwrap();
        let matches = (0..=order).all(|n| match pinned_egf_value(kernel, n, &z).unwrap() {
            Some(expected) => &coeffs[n] * Rational::from_integer(factorial(n)) == expected,
            None => true,
        });
        let shown: Vec<String> = coeffs.iter().take(5).map(|c| c.to_string()).collect();
        println!("{:<4} {}, ...  relation holds: {matches}", kernel.name(), shown.join(", "));
    }
}
