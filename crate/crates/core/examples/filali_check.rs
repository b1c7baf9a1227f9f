//! The partition function summed over states against the determinant
//! formula at random parameters.
//!
//! `cargo run --release --example filali_check -- 3 7`

use ice_colors::theta::{partition_filali, rel_residual, BrutePlan, ModelParams};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn run(n: usize, seed: u64) -> Result<f64, Box<dyn std::error::Error>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let plan = BrutePlan::new(n);
    let mut worst = 0.0f64;
    for _ in 0..5 {
        let params = ModelParams::random(n, &mut rng);
        let brute = plan.partition(&params)?;
        let det = partition_filali(n, &params)?;
        let r = rel_residual(brute, det);
        worst = worst.max(r);
        println!(
            "sum over {} states {brute:.12e}  determinant {det:.12e}  residual {r:.1e}",
            plan.state_count()
        );
    }
    Ok(worst)
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let n = args.next().map_or(Ok(2), |a| a.parse())?;
    let seed = args.next().map_or(Ok(7), |a| a.parse())?;
    run(n, seed)?;
    Ok(())
}
