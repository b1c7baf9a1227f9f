//! The enumerator against two independent oracles: raw assignment of every
//! free edge (n <= 2), and a face-height search (n <= 4).

use std::collections::{BTreeMap, BTreeSet};

use ice_colors::lattice::{
    count_table, enumerate_states, stats, CountKey, HArrow, LatticeState, TurnKind, VArrow,
};

type Encoded = (Vec<bool>, Vec<bool>, Vec<bool>);

fn encode(s: &LatticeState) -> Encoded {
    let n = s.n();
    let vertical = (0..n)
        .flat_map(|j| (0..=2 * n).map(move |seg| (j, seg)))
        .map(|(j, seg)| s.vertical(j, seg) == VArrow::Up)
        .collect();
    let horizontal = (0..2 * n)
        .flat_map(|r| (0..=n).map(move |seg| (r, seg)))
        .map(|(r, seg)| s.horizontal(r, seg) == HArrow::Right)
        .collect();
    let turns = s.turns().iter().map(|&t| t == TurnKind::Positive).collect();
    (vertical, horizontal, turns)
}

/// Every assignment of the non-boundary edges that obeys the ice rule and
/// has one arrow into and one out of every turn.
fn raw_states(n: usize) -> BTreeSet<Encoded> {
    let v_free = n * (2 * n - 1);
    let h_free = 2 * n * n;
    let mut out = BTreeSet::new();
    for bits in 0u64..(1 << (v_free + h_free)) {
        let bit = |i: usize| bits >> i & 1 == 1;
        // up[j][seg], right[r][seg]
        let mut up = vec![vec![true; 2 * n + 1]; n];
        for j in 0..n {
            up[j][2 * n] = false;
            for seg in 1..2 * n {
                up[j][seg] = bit(j * (2 * n - 1) + seg - 1);
            }
        }
        let mut right = vec![vec![true; n + 1]; 2 * n];
        for r in 0..2 * n {
            for seg in 0..n {
                right[r][seg] = bit(v_free + r * n + seg);
            }
        }
        let mut turns = Vec::new();
        let mut ok = true;
        for i in 0..n {
            match (right[2 * i][0], right[2 * i + 1][0]) {
                // Flow enters along the lower line and leaves along the upper.
                (false, true) => turns.push(true),
                (true, false) => turns.push(false),
                _ => ok = false,
            }
        }
        for r in 0..2 * n {
            for j in 0..n {
                let incoming = usize::from(right[r][j])
                    + usize::from(!right[r][j + 1])
                    + usize::from(up[j][r])
                    + usize::from(!up[j][r + 1]);
                ok &= incoming == 2;
            }
        }
        if ok {
            let vertical = up.concat();
            let horizontal = right.concat();
            out.insert((vertical, horizontal, turns));
        }
    }
    out
}

#[test]
fn enumerator_matches_raw_assignment() {
    for n in 1..=2 {
        let listed: Vec<Encoded> = enumerate_states(n).iter().map(encode).collect();
        let set: BTreeSet<Encoded> = listed.iter().cloned().collect();
        assert_eq!(set.len(), listed.len(), "duplicates at n = {n}");
        assert_eq!(set, raw_states(n), "state sets differ at n = {n}");
    }
}

#[test]
fn enumeration_is_deterministic() {
    for n in 0..=3 {
        assert_eq!(enumerate_states(n), enumerate_states(n));
    }
    assert_eq!(enumerate_states(0).len(), 1);
}

/// Height search over faces; fixed boundary, adjacent faces differ by one.
struct HeightSearch {
    n: usize,
    h: Vec<Vec<i64>>,
    table: BTreeMap<CountKey, u64>,
}

impl HeightSearch {
    fn run(n: usize) -> BTreeMap<CountKey, u64> {
        let mut h = vec![vec![0i64; n + 1]; 2 * n + 1];
        for fc in 0..=n {
            h[2 * n][fc] = fc as i64;
            h[0][fc] = -(fc as i64);
        }
        for fr in 0..=2 * n {
            h[fr][n] = fr as i64 - n as i64;
        }
        let mut search = HeightSearch {
            n,
            h,
            table: BTreeMap::new(),
        };
        let free: Vec<(usize, usize)> = (0..n)
            .flat_map(|fc| (1..2 * n).map(move |fr| (fr, fc)))
            .filter(|&(fr, fc)| fc > 0 || fr % 2 == 1)
            .collect();
        search.fill(&free, 0);
        search.table
    }

    fn fits(&self, fr: usize, fc: usize, v: i64) -> bool {
        let n = self.n;
        let near = |a: i64| (a - v).abs() == 1;
        // Below and left are already set; above and right only if fixed.
        near(self.h[fr - 1][fc])
            && (fc == 0 || near(self.h[fr][fc - 1]))
            && (fr + 1 < 2 * n || near(self.h[fr + 1][fc]))
            && (fc + 1 < n || near(self.h[fr][fc + 1]))
    }

    fn fill(&mut self, free: &[(usize, usize)], idx: usize) {
        if idx == free.len() {
            self.record();
            return;
        }
        let (fr, fc) = free[idx];
        let below = self.h[fr - 1][fc];
        for v in [below - 1, below + 1] {
            if self.fits(fr, fc, v) {
                self.h[fr][fc] = v;
                self.fill(free, idx + 1);
            }
        }
    }

    fn record(&mut self) {
        let n = self.n;
        let m = (0..n).filter(|i| self.h[2 * i + 1][0] == -1).count();
        // Horizontal edge above face row r points left where the height drops.
        let lefts: Vec<usize> = (0..2 * n)
            .filter(|&r| self.h[r + 1][n - 1] == self.h[r][n - 1] - 1)
            .collect();
        assert_eq!(lefts.len(), 1);
        let mut k = [0usize; 3];
        for row in &self.h {
            for &a in row {
                k[a.rem_euclid(3) as usize] += 1;
            }
        }
        let key = CountKey {
            m: Some(m),
            l: Some(lefts[0] + 1),
            k0: k[0],
            k1: k[1],
            k2: k[2],
        };
        *self.table.entry(key).or_default() += 1;
    }
}

#[test]
fn count_tables_match_height_search() {
    for n in 1..=4 {
        let oracle = HeightSearch::run(n);
        let table = count_table(n).unwrap();
        let ours: BTreeMap<CountKey, u64> = table.iter().map(|(k, v)| (*k, v)).collect();
        assert_eq!(ours, oracle, "count tables differ at n = {n}");
    }
}

#[test]
fn vertically_symmetric_counts() {
    let expected = [1u64, 3, 26, 646];
    for (i, &want) in expected.iter().enumerate() {
        let n = i + 1;
        assert_eq!(count_table(n).unwrap().total_with_m(0), want, "n = {n}");
    }
}

#[test]
fn n1_states_by_turn() {
    let states = enumerate_states(1);
    assert_eq!(states.len(), 2);
    for s in &states {
        let st = stats(s).unwrap();
        match s.turn(0) {
            TurnKind::Negative => {
                assert_eq!((st.m, st.l, st.k), (0, Some(2), [3, 2, 1]));
                assert_eq!(s.vertical(0, 1), VArrow::Up);
            }
            TurnKind::Positive => {
                assert_eq!((st.m, st.l, st.k), (1, Some(1), [3, 1, 2]));
                assert_eq!(s.vertical(0, 1), VArrow::Down);
            }
        }
    }
}

#[test]
fn top_boundary_heights() {
    for s in enumerate_states(3) {
        let grid = ice_colors::lattice::heights(&s).unwrap();
        let top: Vec<i64> = (0..=3).map(|fc| grid.get(6, fc)).collect();
        assert_eq!(top, [0, 1, 2, 3]);
    }
}
