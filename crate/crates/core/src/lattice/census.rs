use serde::Serialize;

use super::{HArrow, LatticeState, VArrow};

/// The six ice-rule vertex configurations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum VertexKind {
    APlus,
    AMinus,
    BPlus,
    BMinus,
    CPlus,
    CMinus,
}

impl VertexKind {
    pub const ALL: [VertexKind; 6] = [
        VertexKind::APlus,
        VertexKind::AMinus,
        VertexKind::BPlus,
        VertexKind::BMinus,
        VertexKind::CPlus,
        VertexKind::CMinus,
    ];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            VertexKind::APlus => "a+",
            VertexKind::AMinus => "a-",
            VertexKind::BPlus => "b+",
            VertexKind::BMinus => "b-",
            VertexKind::CPlus => "c+",
            VertexKind::CMinus => "c-",
        }
    }

    /// Kind from spins in the upright frame: `left`/`right` along the
    /// horizontal line (positive = pointing right), `bottom`/`top` along the
    /// vertical line (positive = pointing up).
    pub fn from_spins(left: bool, right: bool, bottom: bool, top: bool) -> Option<VertexKind> {
        use VertexKind::*;
        match (left, right, bottom, top) {
            (true, true, true, true) => Some(APlus),
            (false, false, false, false) => Some(AMinus),
            (true, true, false, false) => Some(BPlus),
            (false, false, true, true) => Some(BMinus),
            (true, false, false, true) => Some(CPlus),
            (false, true, true, false) => Some(CMinus),
            _ => None,
        }
    }
}

/// Classifies vertex `(row, col)`.
///
/// Vertices on upper rows (odd `row`) are read as drawn. On lower rows the
/// line runs right to left, so the vertex is read rotated a quarter turn
/// counterclockwise: the vertical line plays the horizontal role and the
/// horizontal line, oriented leftwards, plays the vertical role.
pub fn classify_vertex(s: &LatticeState, row: usize, col: usize) -> Option<VertexKind> {
    let h_left = s.horizontal(row, col) == HArrow::Right;
    let h_right = s.horizontal(row, col + 1) == HArrow::Right;
    let v_bottom = s.vertical(col, row) == VArrow::Up;
    let v_top = s.vertical(col, row + 1) == VArrow::Up;
    if row % 2 == 1 {
        VertexKind::from_spins(h_left, h_right, v_bottom, v_top)
    } else {
        VertexKind::from_spins(v_bottom, v_top, !h_right, !h_left)
    }
}

/// Per-state vertex and turn counts.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct VertexCensus {
    /// Indexed by [`VertexKind::index`].
    pub all: [usize; 6],
    /// Same, restricted to the rightmost column of vertices.
    pub rightmost: [usize; 6],
    pub k_plus: usize,
    pub k_minus: usize,
}

impl VertexCensus {
    pub fn count(&self, kind: VertexKind) -> usize {
        self.all[kind.index()]
    }

    pub fn count_rightmost(&self, kind: VertexKind) -> usize {
        self.rightmost[kind.index()]
    }

    pub fn total_vertices(&self) -> usize {
        self.all.iter().sum()
    }
}
