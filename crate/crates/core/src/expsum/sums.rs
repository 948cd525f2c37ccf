use num_complex::Complex64;

use super::phase::PhaseMap;
use crate::additive::{map_segments, AdditiveFunctionSpec, ExecConfig, RangeValues, ValueHistogram};
use crate::digit_stream::Base;
use crate::error::{Error, Result};

const FIXED_SCALE: f64 = 4_611_686_018_427_387_904.0; // 2^62

/// Fixed-point complex accumulator. Each term is rounded once on entry and
/// the integer sum is associative, so any partition of the terms gives the
/// same total.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct FixedComplexSum {
    re: i128,
    im: i128,
}

impl FixedComplexSum {
    /// Adds a term with `|re|, |im| <= 1`.
    pub fn add(&mut self, z: Complex64) {
        self.re += (z.re * FIXED_SCALE).round() as i128;
        self.im += (z.im * FIXED_SCALE).round() as i128;
    }

    pub fn merge(&mut self, other: &FixedComplexSum) {
        self.re += other.re;
        self.im += other.im;
    }

    pub fn value(&self) -> Complex64 {
        Complex64::new(self.re as f64 / FIXED_SCALE, self.im as f64 / FIXED_SCALE)
    }
}

/// Partial sums `S(x) = sum_{n <= x} e(a f(n) / b^m)` on a grid of `x`.
#[derive(Clone, Debug, PartialEq)]
pub struct ExpSumRecord {
    pub spec_name: String,
    pub a: i64,
    pub m: u32,
    pub base: Base,
    pub x_grid: Vec<u64>,
    pub sums: Vec<Complex64>,
}

pub(crate) fn check_grid(x_grid: &[u64], min: u64) -> Result<()> {
    if x_grid.is_empty() {
        return Err(Error::Precondition("x grid is empty".into()));
    }
    if x_grid[0] < min {
        return Err(Error::Precondition(format!("grid values must be >= {min}")));
    }
    if x_grid.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::Precondition("x grid must be strictly increasing".into()));
    }
    Ok(())
}

/// Computes `S(x)` at every grid point.
///
/// Integer-valued specs reduce each segment to an exact histogram of
/// `f(n)`; the sum is then taken over distinct values in ascending order.
/// Real-valued specs accumulate in a [`FixedComplexSum`]. Either way the
/// result does not depend on segment length or thread count.
pub fn exp_sum(
    spec: &AdditiveFunctionSpec,
    a: i64,
    m: u32,
    base: Base,
    x_grid: &[u64],
    cfg: &ExecConfig,
) -> Result<ExpSumRecord> {
    if a == 0 {
        return Err(Error::Precondition("a must be non-zero".into()));
    }
    if m == 0 {
        return Err(Error::Precondition("m must be at least 1".into()));
    }
    check_grid(x_grid, 1)?;
    let phase = PhaseMap::new(a, m, base);
    let mut sums = Vec::with_capacity(x_grid.len());
    let mut prev = 0u64;
    if spec.is_integer() {
        let mut hist = ValueHistogram::new();
        for &x in x_grid {
            for h in map_segments(spec, prev + 1, x + 1, cfg, ValueHistogram::of_range)? {
                hist.merge(&h);
            }
            let s: Complex64 = hist
                .iter()
                .map(|(v, count)| phase.of_int(v) * count as f64)
                .sum();
            sums.push(s);
            prev = x;
        }
    } else {
        let mut acc = FixedComplexSum::default();
        for &x in x_grid {
            let parts = map_segments(spec, prev + 1, x + 1, cfg, |r| {
                let mut part = FixedComplexSum::default();
                if let RangeValues::Real(vals) = &r.values {
                    vals.iter().for_each(|&v| part.add(phase.of_real(v)));
                }
                part
            })?;
            parts.iter().for_each(|p| acc.merge(p));
            sums.push(acc.value());
            prev = x;
        }
    }
    if let Some(bad) = sums.iter().find(|s| !(s.re.is_finite() && s.im.is_finite())) {
        return Err(Error::Numeric(format!("non-finite exponential sum {bad}")));
    }
    Ok(ExpSumRecord {
        spec_name: spec.name().to_string(),
        a,
        m,
        base,
        x_grid: x_grid.to_vec(),
        sums,
    })
}

/// Scale used on the horizontal axis of a decay fit.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum DecayCovariate {
    LnX,
    #[default]
    LnLnX,
    LnLnLnX,
}

impl DecayCovariate {
    fn eval(self, x: f64) -> f64 {
        match self {
            DecayCovariate::LnX => x.ln(),
            DecayCovariate::LnLnX => x.ln().ln(),
            DecayCovariate::LnLnLnX => x.ln().ln().ln(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DecayVerdict {
    /// The fitted slope of `ln(|S|/x)` is negative.
    Decaying,
    NoDecay,
    /// Every normalized magnitude is exactly zero.
    Vanishing,
    /// Fewer than two usable points.
    Insufficient,
}

impl DecayVerdict {
    pub fn as_str(self) -> &'static str {
        match self {
            DecayVerdict::Decaying => "decay",
            DecayVerdict::NoDecay => "no decay",
            DecayVerdict::Vanishing => "vanishing",
            DecayVerdict::Insufficient => "insufficient data",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct DecayProfile {
    /// `(x, |S(x)| / x)`.
    pub rows: Vec<(u64, f64)>,
    pub covariate: DecayCovariate,
    /// Least-squares slope of `ln(|S|/x)` against the covariate, over the
    /// points with `S != 0`.
    pub slope: Option<f64>,
    pub verdict: DecayVerdict,
}

/// Normalized magnitudes `|S(x)|/x` and a trend verdict.
pub fn decay_profile(record: &ExpSumRecord, covariate: DecayCovariate) -> Result<DecayProfile> {
    if record.sums.is_empty() {
        return Err(Error::Precondition("empty exponential-sum record".into()));
    }
    let rows: Vec<(u64, f64)> = record
        .x_grid
        .iter()
        .zip(&record.sums)
        .map(|(&x, s)| (x, s.norm() / x as f64))
        .collect();
    let pts: Vec<(f64, f64)> = rows
        .iter()
        .filter(|(x, r)| *r > 0.0 && *x >= 16)
        .map(|&(x, r)| (covariate.eval(x as f64), r.ln()))
        .collect();
    let slope = least_squares_slope(&pts);
    let verdict = if rows.iter().all(|&(_, r)| r == 0.0) {
        DecayVerdict::Vanishing
    } else {
        match slope {
            None => DecayVerdict::Insufficient,
            Some(s) if s < -1e-12 => DecayVerdict::Decaying,
            Some(_) => DecayVerdict::NoDecay,
        }
    };
    Ok(DecayProfile { rows, covariate, slope, verdict })
}

fn least_squares_slope(pts: &[(f64, f64)]) -> Option<f64> {
    if pts.len() < 2 {
        return None;
    }
    let n = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / n;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / n;
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx) * (p.0 - mx)).sum();
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    (sxx > 0.0).then(|| sxy / sxx)
}
