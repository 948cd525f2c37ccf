//! Segmented factoring sieve.
//!
//! Each segment `[lo, hi)` keeps, per entry, the product of the prime powers
//! found so far and the running value of `f`. Every prime `p <= sqrt(hi - 1)`
//! walks its multiples once per power level `p^j`, adding the increment
//! `f(p^j) - f(p^(j-1))`. Whatever is left after dividing `n` by the product
//! is either 1 or a single prime above `sqrt(hi - 1)`.

use rayon::prelude::*;

use super::primes::{isqrt, primes_up_to};
use super::spec::{AdditiveFunctionSpec, Value, ValueKind};
use crate::error::{Error, Result};

/// Default number of values per segment.
pub const DEFAULT_SEGMENT_LEN: usize = 1 << 22;

/// Default memory budget in bytes.
pub const DEFAULT_MEMORY_BUDGET: u64 = 2 << 30;

/// Bytes of working memory per sieved value.
const BYTES_PER_VALUE: u64 = 16;

/// Execution settings shared by every bulk computation.
///
/// Results never depend on `threads`; they depend on `segment_len` only
/// where documented (real-valued specs in floating reductions).
#[derive(Clone, Debug)]
pub struct ExecConfig {
    pub segment_len: usize,
    /// `None` uses the global rayon pool.
    pub threads: Option<usize>,
    pub memory_budget: u64,
}

impl Default for ExecConfig {
    fn default() -> Self {
        ExecConfig {
            segment_len: DEFAULT_SEGMENT_LEN,
            threads: None,
            memory_budget: DEFAULT_MEMORY_BUDGET,
        }
    }
}

impl ExecConfig {
    pub fn with_threads(mut self, threads: usize) -> Self {
        self.threads = Some(threads);
        self
    }

    pub fn with_segment_len(mut self, len: usize) -> Self {
        self.segment_len = len;
        self
    }

    pub fn with_memory_budget(mut self, bytes: u64) -> Self {
        self.memory_budget = bytes;
        self
    }

    /// Runs `op` on a pool with the configured number of threads.
    pub fn install<R: Send>(&self, op: impl FnOnce() -> R + Send) -> R {
        match self.threads {
            Some(n) => rayon::ThreadPoolBuilder::new()
                .num_threads(n.max(1))
                .build()
                .expect("failed to build thread pool")
                .install(op),
            None => op(),
        }
    }

    pub fn check_budget(&self, what: &'static str, needed: u128) -> Result<()> {
        if needed > self.memory_budget as u128 {
            return Err(Error::Resource {
                what,
                needed,
                budget: self.memory_budget as u128,
            });
        }
        Ok(())
    }
}

/// Dense values of `f` over a half-open range.
#[derive(Clone, Debug, PartialEq)]
pub enum RangeValues {
    Int(Vec<u64>),
    Real(Vec<f64>),
}

impl RangeValues {
    pub fn len(&self) -> usize {
        match self {
            RangeValues::Int(v) => v.len(),
            RangeValues::Real(v) => v.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn get(&self, i: usize) -> Value {
        match self {
            RangeValues::Int(v) => Value::Int(v[i]),
            RangeValues::Real(v) => Value::Real(v[i]),
        }
    }

    /// `floor(f)` of entry `i`.
    pub fn floor(&self, i: usize) -> u64 {
        match self {
            RangeValues::Int(v) => v[i],
            RangeValues::Real(v) => v[i].floor() as u64,
        }
    }

    /// Appends values of the same kind; panics on an integer/real mix.
    pub fn append(&mut self, other: RangeValues) {
        match (self, other) {
            (RangeValues::Int(a), RangeValues::Int(b)) => a.extend(b),
            (RangeValues::Real(a), RangeValues::Real(b)) => a.extend(b),
            _ => panic!("cannot append integer and real values"),
        }
    }
}

/// `f(n)` for every `n` in `[lo, hi)`.
#[derive(Clone, Debug, PartialEq)]
pub struct FactoredRange {
    pub lo: u64,
    pub hi: u64,
    pub values: RangeValues,
}

impl FactoredRange {
    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// `f(n)`; `n` must lie in the range.
    pub fn value(&self, n: u64) -> Value {
        self.values.get((n - self.lo) as usize)
    }

    /// `(n, f(n))` pairs in ascending `n`.
    pub fn iter(&self) -> impl Iterator<Item = (u64, Value)> + '_ {
        (0..self.len()).map(move |i| (self.lo + i as u64, self.values.get(i)))
    }
}

fn check_range(lo: u64, hi: u64) -> Result<()> {
    if lo < 1 || lo >= hi {
        return Err(Error::Precondition(format!(
            "sieve range needs 1 <= lo < hi, got [{lo}, {hi})"
        )));
    }
    if hi > 1 << 63 {
        return Err(Error::Precondition(format!("hi = {hi} exceeds 2^63")));
    }
    Ok(())
}

/// Sieves one segment using base primes that cover `sqrt(hi - 1)`.
fn sieve_segment(spec: &AdditiveFunctionSpec, base: &[u64], lo: u64, hi: u64) -> FactoredRange {
    let len = (hi - lo) as usize;
    let mut prod = vec![1u64; len];
    let root = isqrt(hi - 1);
    match spec.kind() {
        ValueKind::Integer => {
            let mut vals = vec![0u64; len];
            walk_prime_powers(base, root, lo, hi, |p, j, start, step| {
                let inc = spec
                    .int_value_at(p, j)
                    .wrapping_sub(spec.int_value_at(p, j - 1));
                let mut i = start;
                while i < len {
                    prod[i] *= p;
                    vals[i] = vals[i].wrapping_add(inc);
                    i += step;
                }
            });
            for (i, v) in vals.iter_mut().enumerate() {
                let cofactor = (lo + i as u64) / prod[i];
                if cofactor > 1 {
                    *v += spec.int_value_at(cofactor, 1);
                }
            }
            FactoredRange { lo, hi, values: RangeValues::Int(vals) }
        }
        ValueKind::Real => {
            // exponents are tracked so each f(p^k) is added once, unrounded
            let mut vals = vec![0f64; len];
            let mut exps = vec![0u32; len];
            for &p in base {
                if p > root {
                    break;
                }
                let mut q = p;
                loop {
                    let mut i = (lo.div_ceil(q) * q - lo) as usize;
                    while i < len {
                        prod[i] *= p;
                        exps[i] += 1;
                        i += q as usize;
                    }
                    if q > (hi - 1) / p {
                        break;
                    }
                    q *= p;
                }
                let mut i = (lo.div_ceil(p) * p - lo) as usize;
                while i < len {
                    vals[i] += spec.value_at(p, exps[i]);
                    exps[i] = 0;
                    i += p as usize;
                }
            }
            for (i, v) in vals.iter_mut().enumerate() {
                let cofactor = (lo + i as u64) / prod[i];
                if cofactor > 1 {
                    *v += spec.value_at(cofactor, 1);
                }
            }
            FactoredRange { lo, hi, values: RangeValues::Real(vals) }
        }
    }
}

/// Calls `visit(p, j, first_index, step)` for every prime power `p^j < hi`
/// with `p <= root`, where `first_index` is the offset of the first multiple
/// of `p^j` at or above `lo`.
fn walk_prime_powers(
    base: &[u64],
    root: u64,
    lo: u64,
    hi: u64,
    mut visit: impl FnMut(u64, u32, usize, usize),
) {
    for &p in base {
        if p > root {
            break;
        }
        let mut q = p;
        let mut j = 1;
        loop {
            let start = (lo.div_ceil(q) * q - lo) as usize;
            visit(p, j, start, q as usize);
            if q > (hi - 1) / p {
                break;
            }
            q *= p;
            j += 1;
        }
    }
}

/// Splits `[lo, hi)` into fixed-length segments, sieves them (in parallel when
/// the pool allows), applies `map` to each, and returns the results in
/// segment order.
pub fn map_segments<T, F>(
    spec: &AdditiveFunctionSpec,
    lo: u64,
    hi: u64,
    cfg: &ExecConfig,
    map: F,
) -> Result<Vec<T>>
where
    T: Send,
    F: Fn(&FactoredRange) -> T + Sync,
{
    check_range(lo, hi)?;
    let seg = cfg.segment_len.max(1) as u64;
    let nseg = (hi - lo).div_ceil(seg);
    let workers = cfg
        .threads
        .unwrap_or_else(rayon::current_num_threads)
        .max(1) as u64;
    let seg_bytes = (seg.min(hi - lo) * BYTES_PER_VALUE) as u128;
    cfg.check_budget("sieve segments", seg_bytes * workers.min(nseg) as u128)?;
    let root = isqrt(hi - 1);
    cfg.check_budget("base primes", root as u128 / 2)?;
    let base = primes_up_to(root);
    Ok(cfg.install(|| {
        (0..nseg)
            .into_par_iter()
            .map(|i| {
                let s_lo = lo + i * seg;
                let s_hi = (s_lo + seg).min(hi);
                map(&sieve_segment(spec, &base, s_lo, s_hi))
            })
            .collect()
    }))
}

/// `f(n)` for all `n` in `[lo, hi)`.
pub fn sieve_range(
    spec: &AdditiveFunctionSpec,
    lo: u64,
    hi: u64,
    cfg: &ExecConfig,
) -> Result<FactoredRange> {
    check_range(lo, hi)?;
    cfg.check_budget("factored range", (hi - lo) as u128 * 8)?;
    let parts = map_segments(spec, lo, hi, cfg, |r| r.values.clone())?;
    let mut parts = parts.into_iter();
    let mut values = parts.next().expect("non-empty range has a segment");
    for p in parts {
        values.append(p);
    }
    Ok(FactoredRange { lo, hi, values })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(r: &FactoredRange) -> Vec<u64> {
        match &r.values {
            RangeValues::Int(v) => v.clone(),
            RangeValues::Real(_) => panic!("expected integer values"),
        }
    }

    #[test]
    fn first_ten() {
        let cfg = ExecConfig::default();
        let big = sieve_range(&AdditiveFunctionSpec::big_omega(), 1, 11, &cfg).unwrap();
        assert_eq!(ints(&big), vec![0, 1, 1, 2, 1, 2, 1, 3, 2, 2]);
        let small = sieve_range(&AdditiveFunctionSpec::omega(), 1, 11, &cfg).unwrap();
        assert_eq!(ints(&small), vec![0, 1, 1, 1, 1, 2, 1, 1, 1, 2]);
        let one = sieve_range(&AdditiveFunctionSpec::big_omega(), 1, 2, &cfg).unwrap();
        assert_eq!(ints(&one), vec![0]);
    }

    #[test]
    fn bad_ranges() {
        let cfg = ExecConfig::default();
        let spec = AdditiveFunctionSpec::omega();
        assert!(matches!(sieve_range(&spec, 0, 5, &cfg), Err(Error::Precondition(_))));
        assert!(matches!(sieve_range(&spec, 5, 5, &cfg), Err(Error::Precondition(_))));
    }

    #[test]
    fn budget_is_enforced() {
        let cfg = ExecConfig::default().with_memory_budget(1024);
        let err = sieve_range(&AdditiveFunctionSpec::omega(), 1, 100_000, &cfg).unwrap_err();
        assert!(matches!(err, Error::Resource { .. }));
    }

    #[test]
    fn segments_concatenate() {
        let spec = AdditiveFunctionSpec::big_omega();
        let cfg = ExecConfig::default().with_segment_len(97);
        let whole = sieve_range(&spec, 1, 5_000, &cfg).unwrap();
        let mut left = sieve_range(&spec, 1, 2_345, &cfg).unwrap();
        let right = sieve_range(&spec, 2_345, 5_000, &cfg).unwrap();
        left.values.append(right.values);
        assert_eq!(left.values, whole.values);
    }

    #[test]
    fn high_range_matches_factoring() {
        let spec = AdditiveFunctionSpec::big_omega();
        let lo = (1u64 << 40) - 500;
        let r = sieve_range(&spec, lo, lo + 1_000, &ExecConfig::default()).unwrap();
        for (n, v) in r.iter() {
            assert_eq!(v, spec.evaluate(n), "n = {n}");
        }
    }
}
