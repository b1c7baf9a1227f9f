//! Randomized checks of the theta-function identities.
//!
//! `cargo run --example theta_identities -- 100 1`

use ice_colors::theta::{identity_suite, SuiteReport};

pub fn run(trials: usize, seed: u64) -> SuiteReport {
    let report = identity_suite(trials, seed);
    for c in &report.checks {
        let residual = c
            .max_rel_residual
            .map_or("n/a".to_string(), |r| format!("{r:.2e}"));
        println!(
            "{:<22} {:>4} trials  max residual {residual:>9}  {}",
            c.name,
            c.trials,
            if c.pass { "ok" } else { "FAIL" }
        );
    }
    report
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let trials = args.next().map_or(Ok(100), |a| a.parse())?;
    let seed = args.next().map_or(Ok(1), |a| a.parse())?;
    run(trials, seed);
    Ok(())
}
