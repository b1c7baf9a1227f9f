use serde::Serialize;

use super::{classify_vertex, heights, HArrow, LatticeError, LatticeState, TurnKind, VertexCensus};

/// Statistics of one state that enter the count formulas.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StateStats {
    /// Positive turns.
    pub m: usize,
    /// One-based row (from below) of the single left arrow between the last
    /// two vertex columns; for `n = 1` this is read on the turn-adjacent
    /// segments. `None` only for the empty lattice.
    pub l: Option<usize>,
    /// Faces of color 0, 1, 2.
    pub k: [usize; 3],
    pub census: VertexCensus,
}

pub fn stats(s: &LatticeState) -> Result<StateStats, LatticeError> {
    let n = s.n();
    let grid = heights(s)?;
    let l = if n == 0 {
        None
    } else {
        let rows: Vec<usize> = (0..2 * n)
            .filter(|&r| s.horizontal(r, n - 1) == HArrow::Left)
            .collect();
        match rows.as_slice() {
            [r] => Some(r + 1),
            _ => return Err(LatticeError::LeftArrowCount(rows.len())),
        }
    };
    Ok(StateStats {
        m: s.positive_turns(),
        l,
        k: grid.color_counts(),
        census: vertex_census(s)?,
    })
}

/// Classifies every vertex and turn.
pub fn vertex_census(s: &LatticeState) -> Result<VertexCensus, LatticeError> {
    let n = s.n();
    let mut census = VertexCensus::default();
    for row in 0..2 * n {
        for col in 0..n {
            let kind = classify_vertex(s, row, col).ok_or(LatticeError::IceRule { row, col })?;
            census.all[kind.index()] += 1;
            if col + 1 == n {
                census.rightmost[kind.index()] += 1;
            }
        }
    }
    for &t in s.turns() {
        match t {
            TurnKind::Positive => census.k_plus += 1,
            TurnKind::Negative => census.k_minus += 1,
        }
    }
    Ok(census)
}
