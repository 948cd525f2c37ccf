use super::Base;
use crate::error::{Error, Result};

/// `e^e`, the threshold below which every truncation length is 1.
pub const E_E: f64 = 15.154262241479264;

/// The digit-length schedule `K_y`.
///
/// `forced_k` replaces the triple-log schedule by a constant. At feasible
/// `x` the true schedule never exceeds 2, so wide-window experiments need the
/// synthetic override; every output built from one is marked synthetic.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LengthSchedule {
    pub y: f64,
    pub base: Base,
    pub forced_k: Option<u32>,
}

impl LengthSchedule {
    pub fn new(y: f64, base: Base) -> Result<Self> {
        if !(y.is_finite() && y > 0.0) {
            return Err(Error::Config(format!("y must be positive, got {y}")));
        }
        Ok(LengthSchedule { y, base, forced_k: None })
    }

    /// A synthetic constant schedule `K_y = k`.
    pub fn forced(y: f64, base: Base, k: u32) -> Result<Self> {
        if k == 0 {
            return Err(Error::Config("forced K must be at least 1".into()));
        }
        let mut s = Self::new(y, base)?;
        s.forced_k = Some(k);
        Ok(s)
    }

    pub fn is_synthetic(&self) -> bool {
        self.forced_k.is_some()
    }

    /// `K_y(x)`.
    pub fn length_at(&self, x: f64) -> u32 {
        k_y(x, self)
    }

    /// `K_{1/2}(x)`. Under a forced schedule this is the synthetic
    /// `ceil(K / (2y))`, the value consistent with `K_{1/2} ~ K_y / (2y)`.
    pub fn kappa_at(&self, x: f64) -> u32 {
        match self.forced_k {
            Some(k) => ((k as f64 * 0.5 / self.y).ceil() as u32).max(1),
            None => kappa(x, self.base),
        }
    }

    /// `K_Y(x)` with `Y = min(y, 1/2)`.
    pub fn capped_at(&self, x: f64) -> u32 {
        if self.y <= 0.5 {
            self.length_at(x)
        } else {
            self.kappa_at(x)
        }
    }
}

/// `ceil(y lnlnln(x) / ln b)` for `x > e^e`, else 1; a forced schedule
/// returns its constant.
pub fn k_y(x: f64, schedule: &LengthSchedule) -> u32 {
    if let Some(k) = schedule.forced_k {
        return k;
    }
    if x > E_E {
        let raw = schedule.y * x.ln().ln().ln() / f64::from(schedule.base.get()).ln();
        (raw.ceil() as u32).max(1)
    } else {
        1
    }
}

/// `K_{1/2}(x)`, roughly half the base-`b` digits of `lnln x`.
pub fn kappa(x: f64, base: Base) -> u32 {
    k_y(x, &LengthSchedule { y: 0.5, base, forced_k: None })
}
