//! States of the 8VSOS model on the `2n x n` lattice with domain-wall
//! boundary on three sides and a diagonal reflecting end on the left.
//!
//! Indexing is zero-based throughout this module:
//!
//! * rows `r = 0..2n` run bottom to top; rows `2i` and `2i + 1` are joined by
//!   turn `i` at the left wall (the lower row carries `-lambda_i`, the upper
//!   row `lambda_i`);
//! * columns `j = 0..n` run left to right;
//! * vertical segment `s` of a column lies below row `s` (`s = 0` is the
//!   bottom boundary, `s = 2n` the top boundary);
//! * horizontal segment `s` of a row lies left of column `s` (`s = 0` touches
//!   the turn, `s = n` is the right boundary edge);
//! * face `(fr, fc)` sits above row `fr - 1`, below row `fr`, right of column
//!   `fc - 1` and left of column `fc`; there are `(2n + 1) x (n + 1)` faces.
//!
//! Row numbers reported to users (the left-arrow row `l`) are one-based.

mod census;
mod counts;
mod dump;
mod enumerate;
mod heights;
mod invariants;
mod stats;

pub use census::{classify_vertex, VertexCensus, VertexKind};
pub use counts::{count_table, count_table_with, CountKey, CountTable};
pub use dump::render_state;
pub use enumerate::{enumerate_states, for_each_state, for_each_state_with_turns, turn_patterns};
pub use heights::{heights, HeightGrid};
pub use invariants::{check_state, InvariantReport};
pub use stats::{stats, vertex_census, StateStats};

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LatticeError {
    #[error("ice rule violated at row {row}, column {col}")]
    IceRule { row: usize, col: usize },
    #[error("boundary condition violated: {0}")]
    Boundary(String),
    #[error("turn {0} has both adjoining arrows pointing the same way")]
    TurnContinuity(usize),
    #[error("turn {0} disagrees with its adjoining edges")]
    TurnMismatch(usize),
    #[error("heights are path dependent at face ({fr}, {fc}): {first} vs {second}")]
    InconsistentHeights {
        fr: usize,
        fc: usize,
        first: i64,
        second: i64,
    },
    #[error("expected exactly one left arrow between the last two columns, found {0}")]
    LeftArrowCount(usize),
    #[error("state vectors have the wrong length for n = {0}")]
    Shape(usize),
}

/// Direction of an arrow on a vertical edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum VArrow {
    Up,
    Down,
}

/// Direction of an arrow on a horizontal edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum HArrow {
    Left,
    Right,
}

/// The two admissible turn configurations.
///
/// `Positive` (k+): flow enters the turn from the lower row and leaves on the
/// upper row, so the lower turn edge points left and the upper one right.
/// The face inside a positive turn sits one below the wall height.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum TurnKind {
    Negative,
    Positive,
}

impl TurnKind {
    /// Arrow on the turn-adjacent segment of the lower row of the pair.
    pub fn lower_arrow(self) -> HArrow {
        match self {
            TurnKind::Positive => HArrow::Left,
            TurnKind::Negative => HArrow::Right,
        }
    }

    pub fn upper_arrow(self) -> HArrow {
        match self {
            TurnKind::Positive => HArrow::Right,
            TurnKind::Negative => HArrow::Left,
        }
    }
}

/// One arrow configuration of the lattice.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LatticeState {
    n: usize,
    vertical: Vec<VArrow>,
    horizontal: Vec<HArrow>,
    turns: Vec<TurnKind>,
}

impl LatticeState {
    /// Builds and validates a state.
    ///
    /// `vertical` is column-major with `2n + 1` segments per column,
    /// `horizontal` row-major with `n + 1` segments per row.
    pub fn new(
        n: usize,
        vertical: Vec<VArrow>,
        horizontal: Vec<HArrow>,
        turns: Vec<TurnKind>,
    ) -> Result<Self, LatticeError> {
        if vertical.len() != n * (2 * n + 1)
            || horizontal.len() != 2 * n * (n + 1)
            || turns.len() != n
        {
            return Err(LatticeError::Shape(n));
        }
        let state = LatticeState {
            n,
            vertical,
            horizontal,
            turns,
        };
        state.validate()?;
        Ok(state)
    }

    /// Unvalidated working buffer for the enumerator: boundary edges set,
    /// everything else arbitrary.
    pub(crate) fn blank(n: usize) -> Self {
        let mut vertical = vec![VArrow::Up; n * (2 * n + 1)];
        for j in 0..n {
            vertical[j * (2 * n + 1) + 2 * n] = VArrow::Down;
        }
        LatticeState {
            n,
            vertical,
            horizontal: vec![HArrow::Right; 2 * n * (n + 1)],
            turns: vec![TurnKind::Negative; n],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertical(&self, col: usize, seg: usize) -> VArrow {
        self.vertical[col * (2 * self.n + 1) + seg]
    }

    pub fn horizontal(&self, row: usize, seg: usize) -> HArrow {
        self.horizontal[row * (self.n + 1) + seg]
    }

    pub fn turn(&self, i: usize) -> TurnKind {
        self.turns[i]
    }

    pub fn turns(&self) -> &[TurnKind] {
        &self.turns
    }

    pub(crate) fn set_vertical(&mut self, col: usize, seg: usize, arrow: VArrow) {
        let idx = col * (2 * self.n + 1) + seg;
        self.vertical[idx] = arrow;
    }

    pub(crate) fn set_horizontal(&mut self, row: usize, seg: usize, arrow: HArrow) {
        let idx = row * (self.n + 1) + seg;
        self.horizontal[idx] = arrow;
    }

    pub(crate) fn set_turn(&mut self, i: usize, kind: TurnKind) {
        self.turns[i] = kind;
        self.set_horizontal(2 * i, 0, kind.lower_arrow());
        self.set_horizontal(2 * i + 1, 0, kind.upper_arrow());
    }

    /// Number of arrows pointing into vertex `(row, col)`.
    pub fn in_degree(&self, row: usize, col: usize) -> usize {
        [
            self.horizontal(row, col) == HArrow::Right,
            self.horizontal(row, col + 1) == HArrow::Left,
            self.vertical(col, row) == VArrow::Up,
            self.vertical(col, row + 1) == VArrow::Down,
        ]
        .into_iter()
        .filter(|&b| b)
        .count()
    }

    /// Checks the ice rule, the boundary arrows and turn continuity.
    pub fn validate(&self) -> Result<(), LatticeError> {
        let n = self.n;
        for j in 0..n {
            if self.vertical(j, 0) != VArrow::Up {
                return Err(LatticeError::Boundary(format!(
                    "bottom of column {j} must point up"
                )));
            }
            if self.vertical(j, 2 * n) != VArrow::Down {
                return Err(LatticeError::Boundary(format!(
                    "top of column {j} must point down"
                )));
            }
        }
        for r in 0..2 * n {
            if self.horizontal(r, n) != HArrow::Right {
                return Err(LatticeError::Boundary(format!(
                    "right end of row {r} must point right"
                )));
            }
        }
        for (i, &kind) in self.turns.iter().enumerate() {
            let lower = self.horizontal(2 * i, 0);
            let upper = self.horizontal(2 * i + 1, 0);
            if lower == upper {
                return Err(LatticeError::TurnContinuity(i));
            }
            if lower != kind.lower_arrow() {
                return Err(LatticeError::TurnMismatch(i));
            }
        }
        for r in 0..2 * n {
            for j in 0..n {
                if self.in_degree(r, j) != 2 {
                    return Err(LatticeError::IceRule { row: r, col: j });
                }
            }
        }
        Ok(())
    }

    /// Number of positive turns.
    pub fn positive_turns(&self) -> usize {
        self.turns
            .iter()
            .filter(|&&t| t == TurnKind::Positive)
            .count()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn turn_arrows_are_opposite() {
        for kind in [TurnKind::Positive, TurnKind::Negative] {
            assert_ne!(kind.lower_arrow(), kind.upper_arrow());
        }
    }

    #[test]
    fn constructor_rejects_bad_shapes_and_rules() {
        assert_eq!(
            LatticeState::new(1, vec![VArrow::Up; 2], vec![], vec![]),
            Err(LatticeError::Shape(1))
        );
        // n = 1, middle vertical edge up, but claim a positive turn.
        let vertical = vec![VArrow::Up, VArrow::Up, VArrow::Down];
        let horizontal = vec![HArrow::Right, HArrow::Right, HArrow::Left, HArrow::Right];
        let err = LatticeState::new(
            1,
            vertical.clone(),
            horizontal.clone(),
            vec![TurnKind::Positive],
        );
        assert_eq!(err, Err(LatticeError::TurnMismatch(0)));
        let ok = LatticeState::new(1, vertical, horizontal, vec![TurnKind::Negative]).unwrap();
        assert_eq!(ok.positive_turns(), 0);
        // Break the ice rule at the lower vertex.
        let vertical = vec![VArrow::Up, VArrow::Down, VArrow::Down];
        let err = LatticeState::new(
            1,
            vertical,
            vec![HArrow::Right, HArrow::Right, HArrow::Left, HArrow::Right],
            vec![TurnKind::Negative],
        );
        assert!(matches!(err, Err(LatticeError::IceRule { .. })));
    }

    #[test]
    fn empty_lattice_is_valid() {
        let s = LatticeState::new(0, vec![], vec![], vec![]).unwrap();
        assert_eq!(s.positive_turns(), 0);
    }
}
