//! Closed forms at the combinatorial point against the sum over states.
//!
//! `cargo run --release --example specialization -- 2`

use ice_colors::theta::{c, specialized_sides, ModelParams, SpecializedSides};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn run(n: usize) -> Result<SpecializedSides, Box<dyn std::error::Error>> {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let free = ModelParams::specialized(n, c(0.1, 0.2), &mut rng);
    let sides = specialized_sides(n, &free)?;
    println!(
        "last mu = 0.1+0.2i: sum {:.12e}, closed form {:.12e}",
        sides.brute, sides.free_mu
    );

    let quarter = ModelParams::specialized(n, c(0.25, 0.0), &mut rng);
    let sides = specialized_sides(n, &quarter)?;
    println!("last mu = 1/4:      sum {:.12e}", sides.brute);
    if let (Some(q), Some(d)) = (sides.quarter, sides.determinant) {
        println!("  from counts       {q:.12e}");
        println!("  from p_(n-1)      {d:.12e}");
    }
    Ok(sides)
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    let n = std::env::args().nth(1).map_or(Ok(2), |a| a.parse())?;
    run(n)?;
    Ok(())
}
