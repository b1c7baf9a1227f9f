use super::{HArrow, LatticeState, TurnKind, VArrow};

/// All `2^n` turn assignments, in a fixed order: pattern `b` gives turn `i`
/// the kind `Positive` iff bit `n - 1 - i` of `b` is set.
pub fn turn_patterns(n: usize) -> impl Iterator<Item = Vec<TurnKind>> {
    (0u64..1 << n).map(move |bits| {
        (0..n)
            .map(|i| {
                if bits >> (n - 1 - i) & 1 == 1 {
                    TurnKind::Positive
                } else {
                    TurnKind::Negative
                }
            })
            .collect()
    })
}

/// Every valid state, in the deterministic order of [`for_each_state`].
pub fn enumerate_states(n: usize) -> Vec<LatticeState> {
    let mut out = Vec::new();
    for_each_state(n, |s| out.push(s.clone()));
    out
}

/// Visits every valid state exactly once.
///
/// The visitor borrows the enumerator's working buffer; clone it to keep it.
pub fn for_each_state<F: FnMut(&LatticeState)>(n: usize, mut visit: F) {
    for turns in turn_patterns(n) {
        for_each_state_with_turns(n, &turns, &mut visit);
    }
}

/// Visits every valid state whose turns are exactly `turns`.
pub fn for_each_state_with_turns<F: FnMut(&LatticeState)>(
    n: usize,
    turns: &[TurnKind],
    visit: &mut F,
) {
    assert_eq!(turns.len(), n, "one turn kind per row pair");
    let mut state = LatticeState::blank(n);
    for (i, &kind) in turns.iter().enumerate() {
        state.set_turn(i, kind);
    }
    if n == 0 {
        visit(&state);
        return;
    }
    let mut walker = Walker {
        n,
        state,
        lefts: 0,
        visit,
    };
    walker.step(0, 0);
}

struct Walker<'a, F> {
    n: usize,
    state: LatticeState,
    /// Left arrows placed so far on the segment right of the current column.
    lefts: usize,
    visit: &'a mut F,
}

impl<F: FnMut(&LatticeState)> Walker<'_, F> {
    /// Assigns the right and top edges of vertex `(row, col)`, then recurses.
    ///
    /// Flow conservation forces exactly `n - col - 1` left arrows on the
    /// segment to the right of column `col`, which bounds the search.
    fn step(&mut self, row: usize, col: usize) {
        let n = self.n;
        if row == 2 * n {
            if self.lefts != n - col - 1 {
                return;
            }
            if col + 1 == n {
                (self.visit)(&self.state);
            } else {
                let saved = self.lefts;
                self.lefts = 0;
                self.step(0, col + 1);
                self.lefts = saved;
            }
            return;
        }
        let target = n - col - 1;
        let remaining_rows = 2 * n - row;
        if self.lefts > target || self.lefts + remaining_rows < target {
            return;
        }
        let ins = usize::from(self.state.horizontal(row, col) == HArrow::Right)
            + usize::from(self.state.vertical(col, row) == VArrow::Up);
        let top_fixed = row + 1 == 2 * n;
        for right in [HArrow::Right, HArrow::Left] {
            for top in [VArrow::Up, VArrow::Down] {
                let total =
                    ins + usize::from(right == HArrow::Left) + usize::from(top == VArrow::Down);
                if total != 2 || (top_fixed && top != VArrow::Down) {
                    continue;
                }
                if col + 1 == n && right == HArrow::Left {
                    continue;
                }
                self.state.set_horizontal(row, col + 1, right);
                if !top_fixed {
                    self.state.set_vertical(col, row + 1, top);
                }
                let left = usize::from(right == HArrow::Left);
                self.lefts += left;
                self.step(row + 1, col);
                self.lefts -= left;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        assert_eq!(enumerate_states(0).len(), 1);
        assert_eq!(enumerate_states(1).len(), 2);
        assert_eq!(enumerate_states(2).len(), 12);
    }

    #[test]
    fn every_state_validates_and_is_distinct() {
        let states = enumerate_states(3);
        let set: std::collections::HashSet<_> = states.iter().collect();
        assert_eq!(set.len(), states.len());
        for s in &states {
            s.validate().unwrap();
        }
    }

    #[test]
    fn n1_middle_edge_decides_turn() {
        for s in enumerate_states(1) {
            let expected = match s.vertical(0, 1) {
                VArrow::Up => TurnKind::Negative,
                VArrow::Down => TurnKind::Positive,
            };
            assert_eq!(s.turn(0), expected);
        }
    }

    #[test]
    fn order_is_deterministic() {
        assert_eq!(enumerate_states(3), enumerate_states(3));
    }
}
