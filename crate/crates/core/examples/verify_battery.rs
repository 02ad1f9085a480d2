//! Run the full identity battery and print one line per check.

use polypseudolog::verify::{CheckId, VerifyConfig};

fn main() {
    let config = VerifyConfig::default();
    let reports = config.run_all(&CheckId::ALL);
    for r in &reports {
        println!("{:<24} n = {}..={}  {:?}", r.check_id.name(), r.order_range.0, r.order_range.1, r.status);
        if let Some(w) = &r.first_failure {
            println!("    first failure: {w:?}");
        }
    }
    let passed = reports.iter().filter(|r| r.passed()).count();
    println!("{passed}/{} checks passed", reports.len());
}
