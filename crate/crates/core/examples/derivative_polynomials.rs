//! Derivative polynomials of tan and the Gaussian-rational route to `Li_{-n}`.

use num_traits::Zero;
use polypseudolog::construct::{canonical, derivative_route_numerator, tangent_closed_form_w_coefficients};
use polypseudolog::numbers::{derivative_poly, derivative_poly_via_tangent};

fn main() {
    for n in 0..=6 {
        let p = derivative_poly(n);
        println!("P_{n}(x) = {}", p.poly.display_in("x"));
        if n >= 1 {
            assert_eq!(p, derivative_poly_via_tangent(n));
        }
    }

    let n = 7;
    let w: Vec<String> = tangent_closed_form_w_coefficients(n).iter().map(|c| c.to_string()).collect();
    println!("\n2^{} Li_{{-{n}}} as a polynomial in w = (1+z)/(1-z): [{}]", n + 1, w.join(", "));

    let numerator = derivative_route_numerator(n);
    let imaginary_free = numerator.coeffs().iter().all(|c| c.im.is_zero());
    println!("Gaussian route numerator is real: {imaginary_free}");
    println!("canonical: {}", canonical(n));
}
