//! Overlapping block statistics of digit streams.

mod count;

pub use count::{count_formula, stream_census, theta_ind, theta_ind_int, CountReport};

use std::fmt;

use crate::digit_stream::{Base, DigitString};
use crate::error::{Error, Result};

/// Largest census table, in entries.
pub const MAX_BLOCKS: u64 = 1 << 24;

/// A length-`k` digit block `a_1 ... a_k`, most-significant first.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Block {
    base: Base,
    digits: Vec<u8>,
}

impl Block {
    pub fn new(base: Base, digits: Vec<u8>) -> Result<Self> {
        if digits.is_empty() {
            return Err(Error::Config("blocks need at least one digit".into()));
        }
        let s = DigitString::new(base, digits)?;
        Ok(Block { base, digits: s.into_digits() })
    }

    pub fn parse(base: Base, text: &str) -> Result<Self> {
        Self::new(base, DigitString::parse(base, text)?.into_digits())
    }

    /// The block whose digits spell `index` in base `b` with `k` digits.
    pub fn from_index(base: Base, k: usize, mut index: u64) -> Self {
        let b = u64::from(base.get());
        let mut digits = vec![0u8; k];
        for slot in digits.iter_mut().rev() {
            *slot = (index % b) as u8;
            index /= b;
        }
        Block { base, digits }
    }

    pub fn base(&self) -> Base {
        self.base
    }

    pub fn digits(&self) -> &[u8] {
        &self.digits
    }

    pub fn k(&self) -> usize {
        self.digits.len()
    }

    /// The block read as a base-`b` integer.
    pub fn index(&self) -> u64 {
        let b = u64::from(self.base.get());
        self.digits.iter().fold(0, |acc, &d| acc * b + u64::from(d))
    }
}

impl fmt::Display for Block {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &d in &self.digits {
            write!(f, "{}", self.base.digit_char(d))?;
        }
        Ok(())
    }
}

/// Occurrence counts of every length-`k` block over a stream.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockCensus {
    base: Base,
    k: usize,
    counts: Vec<u64>,
    positions: u64,
}

fn table_size(base: Base, k: usize) -> Result<usize> {
    if k == 0 {
        return Err(Error::Config("block length k must be at least 1".into()));
    }
    match u32::try_from(k).ok().and_then(|k| base.checked_pow(k)) {
        Some(n) if n <= MAX_BLOCKS => Ok(n as usize),
        _ => Err(Error::Config(format!(
            "a base-{base} census with k = {k} exceeds {MAX_BLOCKS} blocks"
        ))),
    }
}

impl BlockCensus {
    pub fn empty(base: Base, k: usize) -> Result<Self> {
        Ok(BlockCensus {
            base,
            k,
            counts: vec![0; table_size(base, k)?],
            positions: 0,
        })
    }

    pub fn base(&self) -> Base {
        self.base
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Number of scanned windows, `max(L - k + 1, 0)`.
    pub fn positions(&self) -> u64 {
        self.positions
    }

    /// Counts indexed by [`Block::index`].
    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    pub fn count(&self, block: &Block) -> u64 {
        assert_eq!(block.k(), self.k, "block length differs from census k");
        self.counts[block.index() as usize]
    }

    /// Relative frequency `count / positions` (0 for an empty census).
    pub fn frequency(&self, block: &Block) -> f64 {
        if self.positions == 0 {
            0.0
        } else {
            self.count(block) as f64 / self.positions as f64
        }
    }

    /// `(block, count)` for all `b^k` blocks in index order.
    pub fn iter(&self) -> impl Iterator<Item = (Block, u64)> + '_ {
        self.counts
            .iter()
            .enumerate()
            .map(move |(i, &c)| (Block::from_index(self.base, self.k, i as u64), c))
    }

    /// Records one observation of the block with index `index`.
    pub(crate) fn observe(&mut self, index: usize, times: u64) {
        self.counts[index] += times;
        self.positions += times;
    }

    fn scan(&mut self, digits: &[u8]) {
        if digits.len() < self.k {
            return;
        }
        let b = self.base.get() as usize;
        let modulus = self.counts.len();
        let mut idx = 0usize;
        for (i, &d) in digits.iter().enumerate() {
            idx = (idx * b + d as usize) % modulus;
            if i + 1 >= self.k {
                self.counts[idx] += 1;
            }
        }
        self.positions += (digits.len() - self.k + 1) as u64;
    }
}

/// Counts every overlapping occurrence of every length-`k` block.
pub fn census(stream: &DigitString, k: usize) -> Result<BlockCensus> {
    census_digits(stream.base(), stream.digits(), k)
}

/// [`census`] over raw digits.
pub fn census_digits(base: Base, digits: &[u8], k: usize) -> Result<BlockCensus> {
    let mut c = BlockCensus::empty(base, k)?;
    c.scan(digits);
    Ok(c)
}

/// The census of `s1 ++ s2` from the censuses of `s1` and `s2` and the
/// `boundary`: the last `k - 1` digits of `s1` followed by the first `k - 1`
/// digits of `s2` (shorter when a stream is shorter). Ignored when `k = 1`.
pub fn merge(c1: &BlockCensus, c2: &BlockCensus, boundary: &[u8]) -> Result<BlockCensus> {
    if c1.base != c2.base || c1.k != c2.k {
        return Err(Error::DimensionMismatch(format!(
            "cannot merge base {} k={} with base {} k={}",
            c1.base, c1.k, c2.base, c2.k
        )));
    }
    let mut out = c1.clone();
    for (a, b) in out.counts.iter_mut().zip(&c2.counts) {
        *a += b;
    }
    out.positions += c2.positions;
    if c1.k > 1 {
        if boundary.len() > 2 * (c1.k - 1) {
            return Err(Error::DimensionMismatch(format!(
                "boundary has {} digits, at most {} allowed",
                boundary.len(),
                2 * (c1.k - 1)
            )));
        }
        if let Some(&d) = boundary.iter().find(|&&d| u32::from(d) >= c1.base.get()) {
            return Err(Error::DimensionMismatch(format!("boundary digit {d} out of range")));
        }
        out.scan(boundary);
    }
    Ok(out)
}

/// `sum (count - E)^2 / E` with `E = positions / b^k`.
pub fn chi_square(c: &BlockCensus) -> Result<f64> {
    if c.positions == 0 {
        return Err(Error::EmptyCensus);
    }
    let expected = c.positions as f64 / c.counts.len() as f64;
    Ok(c
        .counts
        .iter()
        .map(|&n| {
            let d = n as f64 - expected;
            d * d / expected
        })
        .sum())
}

/// A census of a stream piece together with the edge digits needed to merge
/// it with its neighbours.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusSegment {
    pub census: BlockCensus,
    head: Vec<u8>,
    tail: Vec<u8>,
}

impl CensusSegment {
    pub fn of(base: Base, digits: &[u8], k: usize) -> Result<Self> {
        let census = census_digits(base, digits, k)?;
        let edge = (k - 1).min(digits.len());
        Ok(CensusSegment {
            census,
            head: digits[..edge].to_vec(),
            tail: digits[digits.len() - edge..].to_vec(),
        })
    }

    pub fn empty(base: Base, k: usize) -> Result<Self> {
        Self::of(base, &[], k)
    }

    /// The segment of `self ++ other`.
    pub fn append(self, other: &CensusSegment) -> Result<Self> {
        let k = self.census.k;
        let mut boundary = self.tail.clone();
        boundary.extend_from_slice(&other.head);
        let census = merge(&self.census, &other.census, &boundary)?;
        // edges of the concatenation may reach across the junction
        let edge = k - 1;
        let head = if self.head.len() < edge {
            let mut h = self.head.clone();
            h.extend(other.head.iter().take(edge - h.len()));
            h
        } else {
            self.head
        };
        let tail = if other.tail.len() < edge {
            let mut t = boundary;
            let drop = t.len().saturating_sub(edge);
            t.drain(..drop);
            t
        } else {
            other.tail.clone()
        };
        Ok(CensusSegment { census, head, tail })
    }
}
