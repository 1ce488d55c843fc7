//! Extended indices: finite integer sequences, possibly empty or non-positive.

use std::fmt;
use std::str::FromStr;

use crate::error::Error;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Index(pub Vec<i64>);

impl Index {
    pub fn new(entries: impl Into<Vec<i64>>) -> Self {
        Index(entries.into())
    }

    pub fn empty() -> Self {
        Index(Vec::new())
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    pub fn depth(&self) -> usize {
        self.0.len()
    }

    pub fn weight(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_positive(&self) -> bool {
        self.0.iter().all(|&s| s >= 1)
    }

    /// 𝐬⁻ = (s_2, …, s_m).
    pub fn tail(&self) -> Index {
        Index(self.0.get(1..).unwrap_or(&[]).to_vec())
    }

    /// All indices of the given depth with entries in `lo..=hi`.
    pub fn all_with_entries(depth: usize, lo: i64, hi: i64) -> Vec<Index> {
        let mut out = vec![Vec::new()];
        for _ in 0..depth {
            out = out
                .into_iter()
                .flat_map(|v| {
                    (lo..=hi).map(move |x| {
                        let mut w = v.clone();
                        w.push(x);
                        w
                    })
                })
                .collect();
        }
        out.into_iter().map(Index).collect()
    }

    /// Positive indices with depth in `1..=max_depth` and weight ≤ `max_weight`.
    pub fn positive_up_to(max_weight: i64, max_depth: usize) -> Vec<Index> {
        (1..=max_depth)
            .flat_map(|m| Self::all_with_entries(m, 1, max_weight))
            .filter(|i| i.weight() <= max_weight)
            .collect()
    }
}

impl fmt::Display for Index {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|s| s.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl FromStr for Index {
    type Err = Error;

    /// Comma-separated entries; an empty string or `()` is the empty index.
    fn from_str(s: &str) -> Result<Self, Error> {
        let t = s
            .trim()
            .trim_start_matches('(')
            .trim_end_matches(')')
            .trim();
        if t.is_empty() {
            return Ok(Index::empty());
        }
        t.split(',')
            .map(|x| {
                x.trim()
                    .parse::<i64>()
                    .map_err(|e| Error::Precondition(format!("bad index entry {x:?}: {e}")))
            })
            .collect::<Result<Vec<_>, _>>()
            .map(Index)
    }
}

impl From<&[i64]> for Index {
    fn from(v: &[i64]) -> Self {
        Index(v.to_vec())
    }
}
