use std::collections::BTreeMap;

use super::sieve::{FactoredRange, RangeValues};

const DENSE_LIMIT: u64 = 1 << 16;

/// Exact counts of `floor(f(n))` values. Small values live in a dense
/// table, the rare large ones in an ordered map.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValueHistogram {
    dense: Vec<u64>,
    sparse: BTreeMap<u64, u64>,
}

impl ValueHistogram {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn of_range(range: &FactoredRange) -> Self {
        let mut h = Self::new();
        match &range.values {
            RangeValues::Int(v) => v.iter().for_each(|&x| h.add(x, 1)),
            RangeValues::Real(v) => v.iter().for_each(|&x| h.add(x.floor() as u64, 1)),
        }
        h
    }

    pub fn add(&mut self, value: u64, count: u64) {
        if value < DENSE_LIMIT {
            let i = value as usize;
            if i >= self.dense.len() {
                self.dense.resize(i + 1, 0);
            }
            self.dense[i] += count;
        } else {
            *self.sparse.entry(value).or_insert(0) += count;
        }
    }

    pub fn merge(&mut self, other: &ValueHistogram) {
        for (v, c) in other.iter() {
            self.add(v, c);
        }
    }

    /// Non-zero `(value, count)` pairs in ascending value order.
    pub fn iter(&self) -> impl Iterator<Item = (u64, u64)> + '_ {
        self.dense
            .iter()
            .enumerate()
            .filter(|(_, &c)| c > 0)
            .map(|(v, &c)| (v as u64, c))
            .chain(self.sparse.iter().map(|(&v, &c)| (v, c)))
    }

    pub fn count(&self, value: u64) -> u64 {
        if value < DENSE_LIMIT {
            self.dense.get(value as usize).copied().unwrap_or(0)
        } else {
            self.sparse.get(&value).copied().unwrap_or(0)
        }
    }

    pub fn total(&self) -> u64 {
        self.iter().map(|(_, c)| c).sum()
    }

    pub fn to_map(&self) -> BTreeMap<u64, u64> {
        self.iter().collect()
    }
}
