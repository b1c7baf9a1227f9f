use std::collections::{BTreeMap, HashMap};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{for_each_state_with_turns, stats, turn_patterns, LatticeError};

/// Key of a count record. `m` and `l` are absent only for `n = 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CountKey {
    pub m: Option<usize>,
    pub l: Option<usize>,
    pub k0: usize,
    pub k1: usize,
    pub k2: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
struct CountRecord {
    m: Option<usize>,
    l: Option<usize>,
    k0: usize,
    k1: usize,
    k2: usize,
    count: u64,
}

/// `N_{m,l}(k0, k1, k2)`: number of states per (positive turns, left-arrow
/// row, color census).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountTable {
    n: usize,
    counts: BTreeMap<CountKey, u64>,
}

impl CountTable {
    pub fn new(n: usize) -> Self {
        CountTable {
            n,
            counts: BTreeMap::new(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn add(&mut self, key: CountKey, count: u64) {
        *self.counts.entry(key).or_default() += count;
    }

    /// Commutative merge of two partial tables for the same `n`.
    pub fn merge(mut self, other: CountTable) -> CountTable {
        assert_eq!(self.n, other.n, "merging tables of different sizes");
        for (k, v) in other.counts {
            self.add(k, v);
        }
        self
    }

    pub fn get(&self, key: &CountKey) -> u64 {
        self.counts.get(key).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&CountKey, u64)> {
        self.counts.iter().map(|(k, &v)| (k, v))
    }

    pub fn len(&self) -> usize {
        self.counts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    pub fn total(&self) -> u64 {
        self.counts.values().sum()
    }

    /// States with `m` positive turns.
    pub fn total_with_m(&self, m: usize) -> u64 {
        self.iter()
            .filter(|(k, _)| k.m == Some(m))
            .map(|(_, v)| v)
            .sum()
    }

    /// Marginal counts `N_{m,l}(k_color)` summed over the other two colors,
    /// keyed by `(m, l, k_color)`.
    pub fn marginal(&self, color: usize) -> HashMap<(usize, usize, usize), u64> {
        let mut out = HashMap::new();
        for (key, count) in self.iter() {
            if let (Some(m), Some(l)) = (key.m, key.l) {
                let k = [key.k0, key.k1, key.k2][color];
                *out.entry((m, l, k)).or_default() += count;
            }
        }
        out
    }

    fn records(&self) -> Vec<CountRecord> {
        self.iter()
            .map(|(k, count)| CountRecord {
                m: k.m,
                l: k.l,
                k0: k.k0,
                k1: k.k1,
                k2: k.k2,
                count,
            })
            .collect()
    }

    /// JSON array of `{m, l, k0, k1, k2, count}` in key order.
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.records()).expect("plain records serialize")
    }

    pub fn from_json(n: usize, text: &str) -> Result<Self, serde_json::Error> {
        let records: Vec<CountRecord> = serde_json::from_str(text)?;
        let mut table = CountTable::new(n);
        for r in records {
            table.add(
                CountKey {
                    m: r.m,
                    l: r.l,
                    k0: r.k0,
                    k1: r.k1,
                    k2: r.k2,
                },
                r.count,
            );
        }
        Ok(table)
    }

    /// CSV with header `m,l,k0,k1,k2,count`; absent fields are empty.
    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        for r in self.records() {
            w.serialize(r).expect("in-memory csv write");
        }
        String::from_utf8(w.into_inner().expect("flush to vec")).expect("csv is utf-8")
    }
}

/// Aggregates [`super::stats`] over all states, splitting the work by turn
/// pattern across the current rayon pool.
pub fn count_table(n: usize) -> Result<CountTable, LatticeError> {
    count_table_with(n, true)
}

/// As [`count_table`]; `parallel = false` runs on the calling thread only.
/// Both give identical tables.
pub fn count_table_with(n: usize, parallel: bool) -> Result<CountTable, LatticeError> {
    let patterns: Vec<_> = turn_patterns(n).collect();
    let partial = |turns: &Vec<_>| -> Result<CountTable, LatticeError> {
        let mut table = CountTable::new(n);
        let mut failure = None;
        for_each_state_with_turns(n, turns, &mut |s| {
            if failure.is_some() {
                return;
            }
            match stats(s) {
                Ok(st) => table.add(
                    CountKey {
                        m: (n > 0).then_some(st.m),
                        l: st.l,
                        k0: st.k[0],
                        k1: st.k[1],
                        k2: st.k[2],
                    },
                    1,
                ),
                Err(e) => failure = Some(e),
            }
        });
        failure.map_or(Ok(table), Err)
    };
    if parallel {
        patterns
            .par_iter()
            .map(partial)
            .try_reduce(|| CountTable::new(n), |a, b| Ok(a.merge(b)))
    } else {
        patterns
            .iter()
            .map(partial)
            .try_fold(CountTable::new(n), |acc, t| Ok(acc.merge(t?)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn key(m: usize, l: usize, k: [usize; 3]) -> CountKey {
        CountKey {
            m: Some(m),
            l: Some(l),
            k0: k[0],
            k1: k[1],
            k2: k[2],
        }
    }

    #[test]
    fn n1_table() {
        let t = count_table(1).unwrap();
        assert_eq!(t.len(), 2);
        assert_eq!(t.get(&key(0, 2, [3, 2, 1])), 1);
        assert_eq!(t.get(&key(1, 1, [3, 1, 2])), 1);
    }

    #[test]
    fn n0_table_has_one_bare_record() {
        let t = count_table(0).unwrap();
        let records: Vec<_> = t.iter().collect();
        assert_eq!(records.len(), 1);
        let (k, v) = records[0];
        assert_eq!((k.m, k.l, k.k0, k.k1, k.k2, v), (None, None, 1, 0, 0, 1));
    }

    #[test]
    fn parallel_matches_sequential() {
        for n in 0..=3 {
            assert_eq!(count_table_with(n, true), count_table_with(n, false));
        }
    }

    #[test]
    fn serialization_formats() {
        let t = count_table(1).unwrap();
        let json = t.to_json();
        assert_eq!(CountTable::from_json(1, &json).unwrap(), t);
        let compact: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(
            compact,
            serde_json::json!([
                {"m": 0, "l": 2, "k0": 3, "k1": 2, "k2": 1, "count": 1},
                {"m": 1, "l": 1, "k0": 3, "k1": 1, "k2": 2, "count": 1}
            ])
        );
        assert_eq!(t.to_csv(), "m,l,k0,k1,k2,count\n0,2,3,2,1,1\n1,1,3,1,2,1\n");
        assert_eq!(
            count_table(0).unwrap().to_csv(),
            "m,l,k0,k1,k2,count\n,,1,0,0,1\n"
        );
    }
}
