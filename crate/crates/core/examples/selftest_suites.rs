//! Runs the seeded consistency suites with a custom seed.

use ttknot::selftest::{run_all, SelftestConfig};

fn main() {
    let cfg = SelftestConfig {
        seed: 42,
        markov_cases: 50,
        sum_cases: 20,
        ..SelftestConfig::default()
    };
    for suite in run_all(&cfg) {
        let status = if suite.passed() { "ok" } else { "FAILED" };
        println!("{:<32} {:>4} cases  {status}", suite.suite, suite.cases);
        for f in &suite.failures {
            println!("  {f}");
        }
    }
}
