//! Prints the three-color count table as CSV, plus its marginal in color 0.
//!
//! `cargo run --example count_table -- 2`

use ice_colors::lattice::{count_table, CountTable};

pub fn run(n: usize) -> Result<CountTable, Box<dyn std::error::Error>> {
    let table = count_table(n)?;
    print!("{}", table.to_csv());
    println!("# {} states in {} records", table.total(), table.len());
    let mut marginal: Vec<_> = table.marginal(0).into_iter().collect();
    marginal.sort();
    for ((m, l, k0), count) in marginal {
        println!("# m={m} l={l} k0={k0}: {count}");
    }
    Ok(table)
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    let n = std::env::args().nth(1).map_or(Ok(2), |a| a.parse())?;
    run(n)?;
    Ok(())
}
