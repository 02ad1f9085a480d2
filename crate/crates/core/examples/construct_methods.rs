//! Build `Li_{-n}` through every construction route and compare.

use polypseudolog::construct::{canonical, construct, ConstructionMethod};

fn main() {
    let n = 6;
    let reference = canonical(n);
    println!("canonical: {reference}");
    for method in ConstructionMethod::ALL {
        let li = construct(method, n).expect("n >= 1");
        let mark = if li == reference { "ok" } else { "MISMATCH" };
        println!("{:<28} {mark}", method.name());
    }

    // the reciprocal and duplication identities at the symbolic level
    let inverted = reference.substitute_reciprocal().unwrap();
    println!("Li_{{-{n}}}(1/z) = {inverted}");
    println!("palindromic numerator: {}", reference.is_palindromic());
}
