use super::schedule::{kappa, LengthSchedule};
use super::{Base, DigitString};
use crate::additive::{map_segments, AdditiveFunctionSpec, ExecConfig, FactoredRange};
use crate::error::{Error, Result};

/// Maximal runs `[start, end)` of constant `K_y(n)` covering `[lo, hi)`.
/// Relies on `K_y` being non-decreasing in `n`.
pub(crate) fn length_runs(schedule: &LengthSchedule, lo: u64, hi: u64) -> Vec<(u64, u64, u32)> {
    let mut runs = Vec::new();
    let mut start = lo;
    while start < hi {
        let k = schedule.length_at(start as f64);
        // last n in [start, hi) with K_y(n) == k
        let (mut a, mut b) = (start, hi - 1);
        while a < b {
            let mid = a + (b - a).div_ceil(2);
            if schedule.length_at(mid as f64) == k {
                a = mid;
            } else {
                b = mid - 1;
            }
        }
        runs.push((start, a + 1, k));
        start = a + 1;
    }
    runs
}

/// Total digits in `(f_y(1))...(f_y(n_max))`: `sum_{n <= n_max} K_y(n)`.
pub fn stream_length(schedule: &LengthSchedule, n_max: u64) -> u128 {
    if n_max == 0 {
        return 0;
    }
    length_runs(schedule, 1, n_max + 1)
        .into_iter()
        .map(|(s, e, k)| u128::from(e - s) * u128::from(k))
        .sum()
}

fn push_digits(out: &mut Vec<u8>, value: u64, hi: u32, lo: u32, base: Base) {
    let b = u64::from(base.get());
    let start = out.len();
    out.resize(start + (hi - lo + 1) as usize, 0);
    let mut rest = match base.checked_pow(lo - 1) {
        Some(scale) => value / scale,
        None => 0,
    };
    for slot in out[start..].iter_mut().rev() {
        if rest == 0 {
            break;
        }
        *slot = (rest % b) as u8;
        rest /= b;
    }
}

/// Digits of `floor(value)` at positions `hi` down to `lo` (inclusive).
pub fn window_digits(value: u64, hi: u32, lo: u32, base: Base) -> Vec<u8> {
    assert!(lo >= 1 && hi >= lo, "window [{hi}, {lo}] is empty");
    let mut out = Vec::with_capacity((hi - lo + 1) as usize);
    push_digits(&mut out, value, hi, lo, base);
    out
}

/// Digits `(f_y(n))` for every `n` of a sieved range, concatenated.
pub fn stream_chunk(range: &FactoredRange, schedule: &LengthSchedule) -> Vec<u8> {
    let mut out = Vec::new();
    for (s, e, k) in length_runs(schedule, range.lo, range.hi) {
        out.reserve(((e - s) * u64::from(k)) as usize);
        for n in s..e {
            push_digits(&mut out, range.values.floor((n - range.lo) as usize), k, 1, schedule.base);
        }
    }
    out
}

/// The prefix `(f_y(1))(f_y(2))...(f_y(n_max))` of the concatenation constant.
pub fn build_stream(
    spec: &AdditiveFunctionSpec,
    schedule: &LengthSchedule,
    n_max: u64,
    cfg: &ExecConfig,
) -> Result<DigitString> {
    if n_max == 0 {
        return Err(Error::Precondition("n_max must be at least 1".into()));
    }
    cfg.check_budget("digit stream", stream_length(schedule, n_max))?;
    let chunks = map_segments(spec, 1, n_max + 1, cfg, |r| stream_chunk(r, schedule))?;
    Ok(DigitString::from_trusted(schedule.base, chunks.concat()))
}

/// Window `[ceil((1-eps) K), max(ceil(eps K), 1)]` for `K = K_{1/2}(n)`, as
/// `(hi, lo)` positions; `None` when the window is empty.
pub fn window_bounds(kappa: u32, eps: f64) -> Option<(u32, u32)> {
    let hi = ((1.0 - eps) * kappa as f64).ceil() as u32;
    let lo = ((eps * kappa as f64).ceil() as u32).max(1);
    (hi >= lo).then_some((hi, lo))
}

/// The windowed stream: for each `n`, the digits of `floor(f(n))` from
/// position `ceil((1-eps) K)` down to `max(ceil(eps K), 1)` where
/// `K = K_{1/2}(n)`. `kappa_override` substitutes a synthetic constant `K`.
pub fn build_window_stream(
    spec: &AdditiveFunctionSpec,
    eps: f64,
    base: Base,
    n_max: u64,
    kappa_override: Option<u32>,
    cfg: &ExecConfig,
) -> Result<DigitString> {
    if !(eps > 0.0 && eps < 1.0) {
        return Err(Error::Precondition(format!("eps must lie in (0, 1), got {eps}")));
    }
    if n_max == 0 {
        return Err(Error::Precondition("n_max must be at least 1".into()));
    }
    if kappa_override == Some(0) {
        return Err(Error::Config("synthetic K must be at least 1".into()));
    }
    let kappa_of = |n: u64| kappa_override.unwrap_or_else(|| kappa(n as f64, base));
    let widest = kappa_of(n_max);
    cfg.check_budget("window stream", u128::from(n_max) * u128::from(widest))?;
    let chunks = map_segments(spec, 1, n_max + 1, cfg, |r| {
        let mut out = Vec::new();
        for (n, _) in r.iter() {
            if let Some((hi, lo)) = window_bounds(kappa_of(n), eps) {
                push_digits(&mut out, r.values.floor((n - r.lo) as usize), hi, lo, base);
            }
        }
        out
    })?;
    Ok(DigitString::from_trusted(base, chunks.concat()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::digit_stream::digit_of_int;

    fn cfg() -> ExecConfig {
        ExecConfig::default()
    }

    #[test]
    fn stream_examples() {
        let omega = AdditiveFunctionSpec::omega();
        let big = AdditiveFunctionSpec::big_omega();
        let k1 = LengthSchedule::forced(0.5, Base::TEN, 1).unwrap();
        let k2 = LengthSchedule::forced(0.5, Base::TEN, 2).unwrap();
        let k3 = LengthSchedule::forced(0.5, Base::TEN, 3).unwrap();
        assert_eq!(build_stream(&omega, &k1, 6, &cfg()).unwrap().to_text(), "011112");
        assert_eq!(build_stream(&big, &k2, 4, &cfg()).unwrap().to_text(), "00010102");
        assert_eq!(build_stream(&big, &k3, 1, &cfg()).unwrap().to_text(), "000");
    }

    #[test]
    fn window_examples() {
        let omega = AdditiveFunctionSpec::omega();
        let k1 = LengthSchedule::forced(0.5, Base::TEN, 1).unwrap();
        let window = build_window_stream(&omega, 0.25, Base::TEN, 15, None, &cfg()).unwrap();
        assert_eq!(window, build_stream(&omega, &k1, 15, &cfg()).unwrap());

        let big = AdditiveFunctionSpec::big_omega();
        assert_eq!(window_bounds(2, 0.25), Some((2, 1)));
        let w = build_window_stream(&big, 0.25, Base::TEN, 4, Some(2), &cfg()).unwrap();
        assert_eq!(w.to_text(), "00010102");

        // f(n) = b^p read through the single-position window [p, p]
        for p in 1..6 {
            let v = 10u64.pow(p);
            assert_eq!(window_digits(v, p, p, Base::TEN), vec![0]);
            assert_eq!(digit_of_int(v, p + 1, Base::TEN), 1);
        }
    }

    #[test]
    fn window_edge_cases() {
        assert_eq!(window_bounds(1, 0.9), Some((1, 1)));
        assert_eq!(window_bounds(2, 0.6), None);
        assert_eq!(window_bounds(10, 0.1), Some((9, 1)));
        let spec = AdditiveFunctionSpec::omega();
        assert!(build_window_stream(&spec, 0.0, Base::TEN, 5, None, &cfg()).is_err());
        assert!(build_window_stream(&spec, 1.0, Base::TEN, 5, None, &cfg()).is_err());
        // an empty window emits nothing
        let w = build_window_stream(&spec, 0.6, Base::TEN, 5, Some(2), &cfg()).unwrap();
        assert!(w.is_empty());
    }

    #[test]
    fn stream_budget() {
        let spec = AdditiveFunctionSpec::omega();
        let k = LengthSchedule::forced(0.5, Base::TEN, 4).unwrap();
        let small = ExecConfig::default().with_memory_budget(100);
        assert!(matches!(
            build_stream(&spec, &k, 1_000, &small),
            Err(Error::Resource { .. })
        ));
    }

    #[test]
    fn runs_and_lengths() {
        let s = LengthSchedule::new(3.0, Base::TWO).unwrap();
        let runs = length_runs(&s, 1, 100_000);
        for w in runs.windows(2) {
            assert_eq!(w[0].1, w[1].0);
            assert!(w[0].2 < w[1].2);
        }
        let direct: u128 = (1..=99_999u64).map(|n| u128::from(s.length_at(n as f64))).sum();
        assert_eq!(stream_length(&s, 99_999), direct);
    }
}
