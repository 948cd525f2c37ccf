//! Finite-`x` diagnostics for "almost constant on primes" (ACP) and
//! "weakly additive" (WA), Erdős–Kac statistics, and the high-digit bias
//! behind non-normal wide windows.
//!
//! Verdicts are labelled `consistent-with-*`: both properties are limit
//! statements and a finite grid can only fail to contradict them.

use crate::additive::{
    map_segments, prime_moments, primes::for_each_prime_below, primes::isqrt,
    AdditiveFunctionSpec, ExecConfig, PrimeMoments, ValueHistogram,
};
use crate::block_stats::BlockCensus;
use crate::digit_stream::{digit_of_int, Base, E_E};
use crate::error::{Error, Result};

pub const DEFAULT_DELTA: f64 = 0.25;
pub const DEFAULT_EPS_GRID: [f64; 4] = [0.1, 0.2, 0.4, 0.8];

/// `(ln ln x)^power`, or 1 when `x <= e^e`.
fn lnln_power(x: f64, power: f64) -> f64 {
    if x <= E_E {
        1.0
    } else {
        x.ln().ln().powf(power)
    }
}

fn clip(deviation: f64, scale: f64) -> f64 {
    (deviation.abs() / scale).min(2.0)
}

/// `B_eps(x, p) = min(2, |f(p) - c| / (ln ln x)^{eps/4})`.
pub fn b_eps(spec: &AdditiveFunctionSpec, c: f64, x: u64, p: u64, eps: f64) -> f64 {
    clip(spec.prime_value(p) - c, lnln_power(x as f64, eps / 4.0))
}

/// `C_eps(x, p, k) = min(2, |f(p^k) - f(p^{k-1}) - f(p)| / (ln ln x)^{1+eps/4})`.
pub fn c_eps(spec: &AdditiveFunctionSpec, x: u64, p: u64, k: u32, eps: f64) -> f64 {
    clip(weak_defect(spec, p, k), lnln_power(x as f64, 1.0 + eps / 4.0))
}

fn weak_defect(spec: &AdditiveFunctionSpec, p: u64, k: u32) -> f64 {
    spec.value_at(p, k) - spec.value_at(p, k - 1) - spec.value_at(p, 1)
}

fn check_grids(eps_grid: &[f64], x_grid: &[u64]) -> Result<()> {
    if eps_grid.is_empty() || eps_grid.iter().any(|&e| !(e > 0.0 && e.is_finite())) {
        return Err(Error::Precondition("eps grid must be non-empty and positive".into()));
    }
    if x_grid.is_empty() || x_grid[0] < 2 || x_grid.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::Precondition(
            "x grid must be non-empty, strictly increasing, and start at 2 or more".into(),
        ));
    }
    Ok(())
}

/// Per-cell diagnostic values, indexed `[eps][x]`.
#[derive(Clone, Debug, PartialEq)]
pub struct AcpDiagnostic {
    pub c: f64,
    pub delta: f64,
    pub eps_grid: Vec<f64>,
    pub x_grid: Vec<u64>,
    /// `exp(sum_{p<=x} B_eps(x,p) / p^{1-delta}) / ln x`.
    pub ratios: Vec<Vec<f64>>,
}

impl TrendVerdict for AcpDiagnostic {
    fn values(&self) -> &[Vec<f64>] {
        &self.ratios
    }

    fn trend_ok(row: &[f64]) -> bool {
        row.windows(2).all(|w| w[1] < w[0])
    }
}

/// Per-cell diagnostic values, indexed `[eps][x]`.
#[derive(Clone, Debug, PartialEq)]
pub struct WeakDiagnostic {
    pub eps_grid: Vec<f64>,
    pub x_grid: Vec<u64>,
    /// `prod_{p<=x} (1 - sum_{k>=2, p^k<=x} C_eps(x,p,k) / p^k)`.
    pub products: Vec<Vec<f64>>,
    /// Some factor of the product was `<= 0`.
    pub anomalies: Vec<Vec<bool>>,
}

impl TrendVerdict for WeakDiagnostic {
    fn values(&self) -> &[Vec<f64>] {
        &self.products
    }

    fn trend_ok(row: &[f64]) -> bool {
        row.windows(2).all(|w| (1.0 - w[1]).abs() <= (1.0 - w[0]).abs())
    }
}

/// Shared verdict logic: a pure function of the value table.
pub trait TrendVerdict {
    fn values(&self) -> &[Vec<f64>];
    fn trend_ok(row: &[f64]) -> bool;

    /// Verdict for the `i`-th `eps`.
    fn consistent_at(&self, i: usize) -> bool {
        Self::trend_ok(&self.values()[i])
    }

    fn consistent(&self) -> bool {
        (0..self.values().len()).all(|i| self.consistent_at(i))
    }
}

/// Index of the first grid point `>= p`, advanced monotonically.
fn advance(grid: &[u64], start: &mut usize, p: u64) {
    while *start < grid.len() && grid[*start] < p {
        *start += 1;
    }
}

pub fn acp_diagnostic(
    spec: &AdditiveFunctionSpec,
    c: f64,
    delta: f64,
    eps_grid: &[f64],
    x_grid: &[u64],
) -> Result<AcpDiagnostic> {
    if !(delta > 0.0 && delta < 0.5) {
        return Err(Error::Precondition(format!("delta must lie in (0, 1/2), got {delta}")));
    }
    check_grids(eps_grid, x_grid)?;
    let scales: Vec<Vec<f64>> = eps_grid
        .iter()
        .map(|&e| x_grid.iter().map(|&x| lnln_power(x as f64, e / 4.0)).collect())
        .collect();
    let mut sums = vec![vec![0.0f64; x_grid.len()]; eps_grid.len()];
    let mut first = 0;
    for_each_prime_below(x_grid[x_grid.len() - 1] + 1, |p| {
        let dev = spec.prime_value(p) - c;
        if dev == 0.0 {
            return;
        }
        advance(x_grid, &mut first, p);
        let weight = (p as f64).powf(delta - 1.0);
        for (row, scale) in sums.iter_mut().zip(&scales) {
            for j in first..x_grid.len() {
                row[j] += clip(dev, scale[j]) * weight;
            }
        }
    });
    let ratios = sums
        .into_iter()
        .map(|row| {
            row.into_iter()
                .zip(x_grid)
                .map(|(s, &x)| s.exp() / (x as f64).ln())
                .collect()
        })
        .collect();
    Ok(AcpDiagnostic {
        c,
        delta,
        eps_grid: eps_grid.to_vec(),
        x_grid: x_grid.to_vec(),
        ratios,
    })
}

pub fn weak_diagnostic(
    spec: &AdditiveFunctionSpec,
    eps_grid: &[f64],
    x_grid: &[u64],
) -> Result<WeakDiagnostic> {
    check_grids(eps_grid, x_grid)?;
    let scales: Vec<Vec<f64>> = eps_grid
        .iter()
        .map(|&e| x_grid.iter().map(|&x| lnln_power(x as f64, 1.0 + e / 4.0)).collect())
        .collect();
    let mut products = vec![vec![1.0f64; x_grid.len()]; eps_grid.len()];
    let mut anomalies = vec![vec![false; x_grid.len()]; eps_grid.len()];
    let x_max = x_grid[x_grid.len() - 1];
    let mut first = 0;
    // Factors with p^2 > x have an empty sum and equal 1.
    for_each_prime_below(isqrt(x_max) + 1, |p| {
        advance(x_grid, &mut first, p * p);
        let mut defects = Vec::new();
        let mut pk = p;
        let mut k = 1;
        while let Some(next) = pk.checked_mul(p).filter(|&n| n <= x_max) {
            pk = next;
            k += 1;
            defects.push((pk, weak_defect(spec, p, k)));
        }
        if defects.iter().all(|d| d.1 == 0.0) {
            return;
        }
        for i in 0..eps_grid.len() {
            for j in first..x_grid.len() {
                let x = x_grid[j];
                let s: f64 = defects
                    .iter()
                    .take_while(|d| d.0 <= x)
                    .map(|&(pk, d)| clip(d, scales[i][j]) / pk as f64)
                    .sum();
                let factor = 1.0 - s;
                anomalies[i][j] |= factor <= 0.0;
                products[i][j] *= factor;
            }
        }
    });
    Ok(WeakDiagnostic {
        eps_grid: eps_grid.to_vec(),
        x_grid: x_grid.to_vec(),
        products,
        anomalies,
    })
}

/// One `(x, eps)` cell of a [`ClassifierReport`].
#[derive(Clone, Debug, PartialEq)]
pub struct ClassifierRow {
    pub x: u64,
    pub eps: f64,
    pub acp_ratio: f64,
    pub weak_product: f64,
    pub verdict: String,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ClassifierReport {
    pub acp: AcpDiagnostic,
    pub weak: WeakDiagnostic,
}

impl ClassifierReport {
    /// Rows in `x`-major, then `eps`, order.
    pub fn rows(&self) -> Vec<ClassifierRow> {
        let mut out = Vec::new();
        for (j, &x) in self.acp.x_grid.iter().enumerate() {
            for (i, &eps) in self.acp.eps_grid.iter().enumerate() {
                out.push(ClassifierRow {
                    x,
                    eps,
                    acp_ratio: self.acp.ratios[i][j],
                    weak_product: self.weak.products[i][j],
                    verdict: self.verdict_label(i, j),
                });
            }
        }
        out
    }

    fn verdict_label(&self, i: usize, j: usize) -> String {
        let acp = if self.acp.consistent_at(i) { "consistent-with-ACP" } else { "not-ACP-like" };
        let wa = if self.weak.consistent_at(i) { "consistent-with-WA" } else { "not-WA-like" };
        let mut label = format!("{acp};{wa}");
        if self.weak.anomalies[i][j] {
            label.push_str(";weak-anomaly");
        }
        label
    }
}

/// Both diagnostics on one grid.
pub fn classify(
    spec: &AdditiveFunctionSpec,
    c: f64,
    delta: f64,
    eps_grid: &[f64],
    x_grid: &[u64],
) -> Result<ClassifierReport> {
    Ok(ClassifierReport {
        acp: acp_diagnostic(spec, c, delta, eps_grid, x_grid)?,
        weak: weak_diagnostic(spec, eps_grid, x_grid)?,
    })
}

/// Distribution of `f(n)`, `n <= x`, against `ln ln x`.
#[derive(Clone, Debug, PartialEq)]
pub struct EkReport {
    pub x: u64,
    pub histogram: ValueHistogram,
    /// `sum f(n)` and `sum f(n)^2`, exact.
    pub sum: u128,
    pub sum_sq: u128,
    pub mean: f64,
    /// Population variance.
    pub variance: f64,
    pub moments: PrimeMoments,
    pub lnln_x: f64,
    /// Counts with `|f(n) - ln ln x| <= t sqrt(ln ln x)` for `t = 1, 2, 3`.
    pub within: [u64; 3],
}

impl EkReport {
    /// Summarizes a histogram of `f(1), ..., f(x)`, `x = hist.total()`.
    pub fn from_histogram(spec: &AdditiveFunctionSpec, histogram: ValueHistogram) -> Result<Self> {
        let x = histogram.total();
        if x < 2 {
            return Err(Error::Precondition("histogram needs at least two values".into()));
        }
        let (mut sum, mut sum_sq) = (0u128, 0u128);
        for (v, n) in histogram.iter() {
            sum += u128::from(v) * u128::from(n);
            sum_sq += u128::from(v) * u128::from(v) * u128::from(n);
        }
        let n = u128::from(x);
        let lnln_x = (x as f64).ln().ln();
        let sd = lnln_x.sqrt();
        let mut within = [0u64; 3];
        for (v, count) in histogram.iter() {
            let dev = (v as f64 - lnln_x).abs();
            for (t, slot) in within.iter_mut().enumerate() {
                if dev <= (t + 1) as f64 * sd {
                    *slot += count;
                }
            }
        }
        Ok(EkReport {
            x,
            mean: sum as f64 / x as f64,
            variance: (n * sum_sq - sum * sum) as f64 / (n * n) as f64,
            sum,
            sum_sq,
            histogram,
            moments: prime_moments(spec, x)?,
            lnln_x,
            within,
        })
    }

    /// Fraction within `t` standard deviations, `t` in `1..=3`.
    pub fn fraction_within(&self, t: usize) -> f64 {
        self.within[t - 1] as f64 / self.x as f64
    }
}

/// Erdős–Kac statistics of an integer-valued `f` over `n <= x`.
pub fn ek_stats(spec: &AdditiveFunctionSpec, x: u64, cfg: &ExecConfig) -> Result<EkReport> {
    if x < 100 {
        return Err(Error::Precondition(format!("ek_stats needs x >= 100, got {x}")));
    }
    if !spec.is_integer() {
        return Err(Error::Precondition("ek_stats needs an integer-valued f".into()));
    }
    let mut hist = ValueHistogram::new();
    for h in map_segments(spec, 1, x + 1, cfg, ValueHistogram::of_range)? {
        hist.merge(&h);
    }
    EkReport::from_histogram(spec, hist)
}

/// Census of the digits of `floor(f(n))`, `n <= x`, read at `positions`
/// (1 = least significant). Each `n` contributes one block whose `i`-th digit
/// sits at `positions[i]`.
pub fn bias_demo(
    spec: &AdditiveFunctionSpec,
    base: Base,
    x: u64,
    positions: &[u32],
    cfg: &ExecConfig,
) -> Result<BlockCensus> {
    if positions.is_empty() || positions.contains(&0) {
        return Err(Error::Precondition("positions must be non-empty and >= 1".into()));
    }
    let k = positions.len();
    let mut total = BlockCensus::empty(base, k)?;
    let b = u64::from(base.get());
    let parts = map_segments(spec, 1, x + 1, cfg, |range| {
        let mut counts = vec![0u64; total.counts().len()];
        for i in 0..range.len() {
            let v = range.values.floor(i);
            let idx = positions
                .iter()
                .fold(0u64, |acc, &pos| acc * b + u64::from(digit_of_int(v, pos, base)));
            counts[idx as usize] += 1;
        }
        counts
    })?;
    for counts in parts {
        for (i, c) in counts.into_iter().enumerate() {
            if c > 0 {
                total.observe(i, c);
            }
        }
    }
    Ok(total)
}
