//! Exact evaluation of T at distinct and coalesced arguments, and the
//! reconstruction of p_{n-1} from it.
//!
//! `cargo run --example t_polynomial -- 3`

use ice_colors::algebra::{format_rational, int, rat, Poly};
use ice_colors::tpoly::{pn_via_t, t_eval_coalesced, t_eval_distinct, CoalescedSpec};

pub fn run(n: usize) -> Result<Poly, Box<dyn std::error::Error>> {
    let psi = int(2);
    let xs: Vec<_> = (1..=4).map(|k| rat(k, 7)).collect();
    println!(
        "T(1/7, 2/7; 3/7, 4/7) at psi = 2: {}",
        format_rational(&t_eval_distinct(&xs, &psi)?)
    );

    let xi = int(5);
    let spec = CoalescedSpec::new(vec![xi.clone(), xi.clone()], vec![xi, psi.clone()]);
    let a = t_eval_coalesced(&spec, &psi)?;
    let b = t_eval_coalesced(
        &spec
            .clone()
            .with_directions(vec![int(3), int(-1), int(7), int(2)]),
        &psi,
    )?;
    println!(
        "T(5, 5; 5, 2) at psi = 2: {} (other directions: {})",
        format_rational(&a),
        format_rational(&b)
    );

    let p = pn_via_t(n)?;
    println!("p_{}(z) = {p}", n - 1);
    Ok(p)
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    let n = std::env::args().nth(1).map_or(Ok(3), |a| a.parse())?;
    run(n)?;
    Ok(())
}
