//! Stirling, Eulerian and tangent triangles, plus Bernoulli numbers.

use polypseudolog::numbers::{bernoulli, eulerian_row, stirling2_row, tangent_row, tangent_via_series};

fn main() {
    println!("tangent numbers T(n, k), k = 1..n");
    for n in 1..=9 {
        let row: Vec<String> = tangent_row(n)[1..].iter().map(|t| t.to_string()).collect();
        println!("{n:>2}: {}", row.join(" "));
    }
    println!("T(9,1) from tan^k series: {}", tangent_via_series(9, 1));

    println!("\nEulerian A(7, k): {:?}", eulerian_row(7)[1..].iter().map(|a| a.to_string()).collect::<Vec<_>>());
    println!("Stirling S(7, k): {:?}", stirling2_row(7).iter().map(|s| s.to_string()).collect::<Vec<_>>());
    let b: Vec<String> = (0..=12).map(|n| bernoulli(n).to_string()).collect();
    println!("Bernoulli B_0..B_12: {}", b.join(", "));
}
