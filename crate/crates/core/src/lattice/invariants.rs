use serde::Serialize;

use super::{heights, stats, LatticeState, TurnKind, VertexKind};
use crate::algebra::binomial;

/// Outcome of checking every structural identity on one state.
#[derive(Debug, Clone, Default, Serialize)]
pub struct InvariantReport {
    pub violations: Vec<String>,
}

impl InvariantReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks a state against the ice rule, height consistency, the color
/// boundary, the vertex-count identities and the rightmost-column census.
pub fn check_state(s: &LatticeState) -> InvariantReport {
    let mut report = InvariantReport::default();
    let mut fail = |msg: String| report.violations.push(msg);
    let n = s.n();

    if let Err(e) = s.validate() {
        fail(format!("validation: {e}"));
    }
    let grid = match heights(s) {
        Ok(g) => g,
        Err(e) => {
            fail(format!("heights: {e}"));
            return report;
        }
    };
    let st = match stats(s) {
        Ok(st) => st,
        Err(e) => {
            fail(format!("stats: {e}"));
            return report;
        }
    };

    let faces = (2 * n + 1) * (n + 1);
    if st.k.iter().sum::<usize>() != faces {
        fail(format!("color counts {:?} do not sum to {faces}", st.k));
    }

    // Boundary colors: top 0..n, right side down to -n, bottom back to 0,
    // wall faces outside the turns 0, turn faces 1 (k-) or 2 (k+).
    let m3 = |x: i64| x.rem_euclid(3) as usize;
    for fc in 0..=n {
        if grid.color(2 * n, fc) != m3(fc as i64) || grid.color(0, fc) != m3(-(fc as i64)) {
            fail(format!("boundary color wrong in column {fc}"));
        }
    }
    for fr in 0..=2 * n {
        if grid.color(fr, n) != m3(fr as i64 - n as i64) {
            fail(format!("right boundary color wrong in face row {fr}"));
        }
        if fr % 2 == 0 && grid.color(fr, 0) != 0 {
            fail(format!("wall face {fr} is not color 0"));
        }
    }
    for (i, &t) in s.turns().iter().enumerate() {
        let expected = match t {
            TurnKind::Negative => 1,
            TurnKind::Positive => 2,
        };
        if grid.color(2 * i + 1, 0) != expected {
            fail(format!(
                "turn {i} ({t:?}) face has color {}",
                grid.color(2 * i + 1, 0)
            ));
        }
    }

    let c = &st.census;
    if c.total_vertices() != 2 * n * n {
        fail(format!(
            "census covers {} of {} vertices",
            c.total_vertices(),
            2 * n * n
        ));
    }
    let b_gap = binomial(n as i64 + 1, 2);
    let b_plus = c.count(VertexKind::BPlus) as i64;
    let b_minus = c.count(VertexKind::BMinus) as i64;
    if num_bigint::BigInt::from(b_plus - b_minus) != b_gap {
        fail(format!(
            "nu(b+) - nu(b-) = {} instead of C(n+1,2)",
            b_plus - b_minus
        ));
    }
    let lhs = c.count(VertexKind::CPlus) + 2 * c.k_minus;
    let rhs = c.count(VertexKind::CMinus) + n;
    if lhs != rhs {
        fail(format!("nu(c+) + 2 nu(k-) = {lhs} but nu(c-) + n = {rhs}"));
    }

    if n > 0 {
        let l = st.l.expect("n > 0 has a left-arrow row");
        let odd = l % 2 == 1;
        let r = |k| c.count_rightmost(k);
        if r(VertexKind::BPlus) != n || r(VertexKind::BMinus) != 0 {
            fail(format!(
                "rightmost column has nu(b+) = {}, nu(b-) = {}",
                r(VertexKind::BPlus),
                r(VertexKind::BMinus)
            ));
        }
        if r(VertexKind::CPlus) != usize::from(odd) || r(VertexKind::CMinus) != usize::from(!odd) {
            fail(format!(
                "rightmost column c-counts ({}, {}) do not match l = {l}",
                r(VertexKind::CPlus),
                r(VertexKind::CMinus)
            ));
        }
    }
    report
}
