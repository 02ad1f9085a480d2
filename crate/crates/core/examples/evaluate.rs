//! Exact evaluation at rational points, with the double sums and the
//! truncated power series for comparison.

use polypseudolog::algebra::{rat, to_decimal};
use polypseudolog::eval::{eval_double_sum, eval_exact, eval_series_oracle, DoubleSumVariant};

fn main() {
    let z = rat(-7, 5);
    for n in [1, 2, 5, 10] {
        let exact = eval_exact(n, &z).unwrap();
        let sums: Vec<_> = DoubleSumVariant::ALL.iter().map(|&v| eval_double_sum(v, n, &z).unwrap() == exact).collect();
        println!("Li_{{-{n}}}(-7/5) = {exact}  double sums agree: {sums:?}");
    }

    let half = rat(1, 2);
    let exact = eval_exact(4, &half).unwrap();
    println!("Li_{{-4}}(1/2) = {exact}");
    for terms in [25, 50, 100, 200] {
        let partial = eval_series_oracle(4, &half, terms).unwrap();
        println!("  K = {terms:>3}: error {}", to_decimal(&(exact.clone() - partial), 12));
    }

    match eval_exact(3, &rat(1, 1)) {
        Ok(v) => println!("unexpected value {v}"),
        Err(e) => println!("z = 1: {e}"),
    }
}
