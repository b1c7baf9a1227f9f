use super::{HArrow, LatticeError, LatticeState, VArrow};

/// Face heights, normalized so the upper-left face is zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HeightGrid {
    n: usize,
    heights: Vec<i64>,
}

impl HeightGrid {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> usize {
        2 * self.n + 1
    }

    pub fn cols(&self) -> usize {
        self.n + 1
    }

    pub fn get(&self, fr: usize, fc: usize) -> i64 {
        self.heights[fr * (self.n + 1) + fc]
    }

    /// Height mod 3.
    pub fn color(&self, fr: usize, fc: usize) -> usize {
        self.get(fr, fc).rem_euclid(3) as usize
    }

    /// Faces of color 0, 1, 2.
    pub fn color_counts(&self) -> [usize; 3] {
        let mut k = [0; 3];
        for h in &self.heights {
            k[h.rem_euclid(3) as usize] += 1;
        }
        k
    }

    /// Color rows from top to bottom, for display and fixtures.
    pub fn color_rows(&self) -> Vec<Vec<usize>> {
        (0..self.rows())
            .rev()
            .map(|fr| (0..self.cols()).map(|fc| self.color(fr, fc)).collect())
            .collect()
    }
}

/// Heights of every face.
///
/// Looking along an arrow, the face on its right is one lower than the face
/// on its left. The grid is filled from the upper-left face through the top
/// boundary and then down every column via horizontal edges; every vertical
/// edge is then checked, so a returned grid is path independent.
pub fn heights(s: &LatticeState) -> Result<HeightGrid, LatticeError> {
    let n = s.n();
    let rows = 2 * n + 1;
    let cols = n + 1;
    let mut h = vec![0i64; rows * cols];
    let idx = |fr: usize, fc: usize| fr * cols + fc;

    // Top row, left to right across the top boundary segments.
    for j in 0..n {
        let left = h[idx(2 * n, j)];
        h[idx(2 * n, j + 1)] = left + vertical_step(s.vertical(j, 2 * n));
    }
    // Downwards through horizontal edges.
    for fc in 0..cols {
        for fr in (0..2 * n).rev() {
            let above = h[idx(fr + 1, fc)];
            h[idx(fr, fc)] = match s.horizontal(fr, fc) {
                HArrow::Right => above - 1,
                HArrow::Left => above + 1,
            };
        }
    }
    for j in 0..n {
        for seg in 0..2 * n {
            let left = h[idx(seg, j)];
            let right = h[idx(seg, j + 1)];
            let expected = left + vertical_step(s.vertical(j, seg));
            if right != expected {
                return Err(LatticeError::InconsistentHeights {
                    fr: seg,
                    fc: j + 1,
                    first: right,
                    second: expected,
                });
            }
        }
    }
    Ok(HeightGrid { n, heights: h })
}

/// Height change from the face left of a vertical edge to the face right of it.
fn vertical_step(arrow: VArrow) -> i64 {
    match arrow {
        VArrow::Up => -1,
        VArrow::Down => 1,
    }
}
