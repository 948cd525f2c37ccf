use super::{Block, BlockCensus, CensusSegment};
use crate::additive::{map_segments, AdditiveFunctionSpec, ExecConfig};
use crate::digit_stream::{digit_of_int, stream_chunk, LengthSchedule};
use crate::error::{Error, Result};

/// 1 when the fractional part of `z` lies in `[0.a_1...a_k, 0.a_1...a_k + b^-k)`.
///
/// Binary64 fractional parts can land on the wrong side of a block edge; use
/// [`theta_ind_int`] when `z = n / b^m` with integer `n`.
pub fn theta_ind(z: f64, block: &Block) -> u8 {
    let scale = f64::from(block.base().get()).powi(block.k() as i32);
    let scaled = (z - z.floor()) * scale;
    u8::from(scaled.floor() as u64 == block.index())
}

/// `theta_ind(value / b^m, block)` in exact integer arithmetic: 1 when the
/// digits of `value` at positions `m, m-1, ..., m-k+1` spell the block
/// (positions below 1 read as 0).
pub fn theta_ind_int(value: u64, m: u32, block: &Block) -> u8 {
    let base = block.base();
    let hit = block.digits().iter().enumerate().all(|(i, &a)| {
        let pos = i64::from(m) - i as i64;
        let d = if pos >= 1 { digit_of_int(value, pos as u32, base) } else { 0 };
        d == a
    });
    u8::from(hit)
}

/// Occurrence counts of one block in the stream prefix for `n <= x`.
#[derive(Clone, Debug, PartialEq)]
pub struct CountReport {
    pub x: u64,
    pub y: f64,
    pub eps: f64,
    pub block: Block,
    pub synthetic: bool,
    /// Digits in the stream prefix.
    pub stream_len: u64,
    /// Every occurrence in the concatenated prefix.
    pub n_star: u64,
    /// Occurrences lying inside a single `(f_y(n))`, via the indicator sum.
    pub n_formula: u64,
    /// Part of `n_formula` with start position in the lower range.
    pub u_part: u64,
    /// Part of `n_formula` with start position in the upper range.
    pub v_part: u64,
    /// Inclusive start-position range of `u_part`, if non-empty.
    pub u_range: Option<(u32, u32)>,
    pub v_range: Option<(u32, u32)>,
}

impl CountReport {
    /// Occurrences that straddle two consecutive strings.
    pub fn boundary_occurrences(&self) -> u64 {
        self.n_star - self.n_formula
    }
}

fn clamp_range(lo: u32, hi: u32) -> Option<(u32, u32)> {
    (lo <= hi).then_some((lo, hi))
}

/// Counts `block` in `(f_y(1))...(f_y(x))` two ways:
///
/// * `n_formula = sum_{n <= x} sum_{m = k}^{K_y(n)} theta(f(n) / b^m)`, the
///   in-string occurrences;
/// * `n_star`, a direct search over the whole concatenation.
///
/// `u_part` and `v_part` restrict the start position `m` to
/// `[ceil(eps K_{1/2}(x)), floor((1 - eps) K_Y(x))]` and
/// `[ceil((1 + eps) K_Y(x)), K_y(x)]` with `Y = min(y, 1/2)`. Digits are read
/// from `floor(f(n))` in integer arithmetic.
pub fn count_formula(
    spec: &AdditiveFunctionSpec,
    schedule: &LengthSchedule,
    block: &Block,
    x: u64,
    eps: f64,
    cfg: &ExecConfig,
) -> Result<CountReport> {
    if block.base() != schedule.base {
        return Err(Error::Config(format!(
            "block base {} differs from stream base {}",
            block.base(),
            schedule.base
        )));
    }
    if x == 0 {
        return Err(Error::Precondition("x must be at least 1".into()));
    }
    if !(eps > 0.0 && eps < 1.0) {
        return Err(Error::Precondition(format!("eps must lie in (0, 1), got {eps}")));
    }
    let k = block.k() as u32;
    // K_y is non-decreasing, so its minimum over n <= x is K_y(1)
    let shortest = schedule.length_at(1.0);
    if k > shortest {
        return Err(Error::Precondition(format!(
            "block length {k} exceeds the shortest string length {shortest}"
        )));
    }
    let xf = x as f64;
    let kappa = schedule.kappa_at(xf) as f64;
    let capped = schedule.capped_at(xf) as f64;
    let full = schedule.length_at(xf);
    let u_range = clamp_range(
        ((eps * kappa).ceil() as u32).max(k),
        ((1.0 - eps) * capped).floor() as u32,
    );
    let v_range = if schedule.y > 0.5 {
        clamp_range(((1.0 + eps) * capped).ceil() as u32, full)
    } else {
        None
    };
    let in_range = |r: Option<(u32, u32)>, m: u32| r.is_some_and(|(a, b)| a <= m && m <= b);

    let parts = map_segments(spec, 1, x + 1, cfg, |r| -> Result<_> {
        let digits = stream_chunk(r, schedule);
        let seg = CensusSegment::of(schedule.base, &digits, block.k())?;
        let (mut formula, mut u, mut v) = (0u64, 0u64, 0u64);
        for (i, n) in (r.lo..r.hi).enumerate() {
            let value = r.values.floor(i);
            for m in k..=schedule.length_at(n as f64) {
                if theta_ind_int(value, m, block) == 1 {
                    formula += 1;
                    u += u64::from(in_range(u_range, m));
                    v += u64::from(in_range(v_range, m));
                }
            }
        }
        Ok((seg, digits.len() as u64, formula, u, v))
    })?;

    let mut acc = CensusSegment::empty(schedule.base, block.k())?;
    let (mut len, mut n_formula, mut u_part, mut v_part) = (0, 0, 0, 0);
    for part in parts {
        let (seg, l, f, u, v) = part?;
        acc = acc.append(&seg)?;
        len += l;
        n_formula += f;
        u_part += u;
        v_part += v;
    }
    Ok(CountReport {
        x,
        y: schedule.y,
        eps,
        block: block.clone(),
        synthetic: schedule.is_synthetic(),
        stream_len: len,
        n_star: acc.census.count(block),
        n_formula,
        u_part,
        v_part,
        u_range,
        v_range,
    })
}

/// Census of the stream prefix `(f_y(1))...(f_y(n_max))`, computed segment by
/// segment and merged in order, without materializing the whole stream.
pub fn stream_census(
    spec: &AdditiveFunctionSpec,
    schedule: &LengthSchedule,
    n_max: u64,
    k: usize,
    cfg: &ExecConfig,
) -> Result<BlockCensus> {
    if n_max == 0 {
        return Err(Error::Precondition("n_max must be at least 1".into()));
    }
    let parts = map_segments(spec, 1, n_max + 1, cfg, |r| {
        CensusSegment::of(schedule.base, &stream_chunk(r, schedule), k)
    })?;
    let mut acc = CensusSegment::empty(schedule.base, k)?;
    for part in parts {
        acc = acc.append(&part?)?;
    }
    Ok(acc.census)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::digit_stream::Base;

    fn block(s: &str) -> Block {
        Block::parse(Base::TEN, s).unwrap()
    }

    #[test]
    fn indicator_examples() {
        assert_eq!(theta_ind(1.51, &block("51")), 1);
        assert_eq!(theta_ind(1.52, &block("51")), 0);
        assert_eq!(theta_ind(151.0 / 100.0, &block("51")), 1);
        assert_eq!(theta_ind_int(151, 2, &block("51")), 1);
        assert_eq!(theta_ind_int(151, 3, &block("15")), 1);
        assert_eq!(theta_ind_int(151, 3, &block("51")), 0);
        // positions below 1 read as zero
        assert_eq!(theta_ind_int(7, 1, &block("70")), 1);
    }

    #[test]
    fn formula_examples() {
        let cfg = ExecConfig::default();
        let omega = AdditiveFunctionSpec::omega();
        let k1 = LengthSchedule::forced(0.5, Base::TEN, 1).unwrap();
        let r = count_formula(&omega, &k1, &block("1"), 6, 0.1, &cfg).unwrap();
        assert_eq!((r.n_formula, r.n_star, r.stream_len), (4, 4, 6));
        let none = count_formula(&omega, &k1, &block("7"), 6, 0.1, &cfg).unwrap();
        assert_eq!(none.n_formula, 0);

        // "00010102": "01" sits inside f(2) and f(3); "10" only spans boundaries
        let big = AdditiveFunctionSpec::big_omega();
        let k2 = LengthSchedule::forced(0.5, Base::TEN, 2).unwrap();
        let r = count_formula(&big, &k2, &block("01"), 4, 0.1, &cfg).unwrap();
        assert_eq!((r.n_formula, r.n_star, r.boundary_occurrences()), (2, 2, 0));
        assert_eq!(r.v_part, 0);
        let r = count_formula(&big, &k2, &block("10"), 4, 0.1, &cfg).unwrap();
        assert_eq!((r.n_formula, r.n_star, r.boundary_occurrences()), (0, 2, 2));
    }

    #[test]
    fn block_longer_than_strings() {
        let cfg = ExecConfig::default();
        let s = LengthSchedule::new(0.5, Base::TEN).unwrap();
        let err = count_formula(&AdditiveFunctionSpec::omega(), &s, &block("12"), 10, 0.1, &cfg);
        assert!(matches!(err, Err(Error::Precondition(_))));
    }

    #[test]
    fn upper_range_only_for_wide_windows() {
        let cfg = ExecConfig::default();
        let big = AdditiveFunctionSpec::big_omega();
        let wide = LengthSchedule::forced(1.0, Base::TWO, 8).unwrap();
        let r = count_formula(&big, &wide, &Block::parse(Base::TWO, "0").unwrap(), 5000, 0.1, &cfg)
            .unwrap();
        // kappa = 4, K_Y = 4: U = [1, 3], V = [5, 8]
        assert_eq!(r.u_range, Some((1, 3)));
        assert_eq!(r.v_range, Some((5, 8)));
        assert!(r.u_part + r.v_part <= r.n_formula);
        // high digits of Omega(n) <= 12 are all zero
        assert_eq!(r.v_part, 4 * 5000);
    }
}
