//! Print the closed forms `Li_{-n}(z) = N(z)/(1-z)^(n+1)` for small `n`.

use polypseudolog::construct::canonical;

fn main() {
    let n_max = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(8);
    for n in 0..=n_max {
        let li = canonical(n);
        println!("Li_{{-{n}}}(z) = {li}");
    }
}
