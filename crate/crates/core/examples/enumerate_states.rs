//! Enumerates every state for a small lattice and draws the first one.
//!
//! `cargo run --example enumerate_states -- 3`

use ice_colors::lattice::{enumerate_states, heights, render_state, stats};

pub fn run(n: usize) -> Result<usize, Box<dyn std::error::Error>> {
    let states = enumerate_states(n);
    let mut by_m = vec![0usize; n + 1];
    for s in &states {
        by_m[s.positive_turns()] += 1;
    }
    println!("n = {n}: {} states", states.len());
    for (m, count) in by_m.iter().enumerate() {
        println!("  {m} positive turns: {count}");
    }
    if let Some(first) = states.first() {
        let st = stats(first)?;
        println!(
            "first state: m = {}, l = {:?}, colors = {:?}",
            st.m, st.l, st.k
        );
        print!("{}", render_state(first)?);
        for row in heights(first)?.color_rows() {
            let line: Vec<String> = row.iter().map(|c| c.to_string()).collect();
            println!("  {}", line.join(" "));
        }
    }
    Ok(states.len())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    let n = std::env::args().nth(1).map_or(Ok(2), |a| a.parse())?;
    run(n)?;
    Ok(())
}
