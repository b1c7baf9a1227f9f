//! p_{n-1}(z) from every count formula, compared with the T route, with the
//! symmetry and positivity checks.
//!
//! `cargo run --release --example pn_polynomial -- 4`

use ice_colors::pn::{pn_consistent, PnReport};

pub fn run(n: usize) -> Result<PnReport, Box<dyn std::error::Error>> {
    let report = pn_consistent(n)?;
    println!("p_{}(z) = {}", n - 1, report.poly);
    for check in &report.variants_checked {
        println!(
            "  variant {} m = {} (binomial {}) agrees",
            check.variant, check.m, check.binomial
        );
    }
    for check in &report.zero_sums_checked {
        println!("  variant {} m = {} vanishes", check.variant, check.m);
    }
    println!(
        "symmetric: {}, negative coefficients: {}",
        report.symmetry_ok,
        report.negative_coeffs.len()
    );
    println!("{}", report.to_json());
    Ok(report)
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    let n = std::env::args().nth(1).map_or(Ok(3), |a| a.parse())?;
    run(n)?;
    Ok(())
}
