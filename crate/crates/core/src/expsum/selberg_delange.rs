use num_complex::Complex64;

use super::gamma::recip_gamma;
use super::phase::{e, PhaseMap};
use super::sums::check_grid;
use crate::additive::{primes::primes_up_to, AdditiveFunctionSpec, MAX_INTEGER_VALUE};
use crate::digit_stream::Base;
use crate::error::{Error, Result};

pub const DEFAULT_PRIME_BOUND: u64 = 1_000_000;

/// Largest last-prime log increment accepted as converged.
pub const TAIL_TOLERANCE: f64 = 1e-8;

/// The unimodular coefficients `a_{p^k}` attached to a fixed `x`.
///
/// Past the largest power `p^K <= x` the coefficients continue as
/// `a_{p^k} = a_{p^{k-1}} a_p`, so the first one beyond `x` is
/// `e(a (f(p^K) + f(p)) / b^m)`.
#[derive(Clone, Debug)]
pub struct CoefficientSystem<'a> {
    spec: &'a AdditiveFunctionSpec,
    phase: PhaseMap,
}

impl<'a> CoefficientSystem<'a> {
    pub fn new(spec: &'a AdditiveFunctionSpec, a: i64, m: u32, base: Base) -> Self {
        CoefficientSystem { spec, phase: PhaseMap::new(a, m, base) }
    }

    fn phase_of(&self, v: f64) -> Complex64 {
        if v >= 0.0 && v.fract() == 0.0 && v <= MAX_INTEGER_VALUE {
            self.phase.of_int(v as u64)
        } else {
            self.phase.of_real(v)
        }
    }

    /// `c' = e(a c / b^m)`.
    pub fn c_prime(&self) -> Complex64 {
        self.phase_of(self.spec.c())
    }

    pub fn coefficient(&self, p: u64, k: u32, x: u64) -> Complex64 {
        assert!(k >= 1, "prime-power exponent must be positive");
        if p > x {
            return self.phase_of(f64::from(k) * self.spec.c());
        }
        let top = max_power(p, x);
        if k <= top {
            self.phase_of(self.spec.value_at(p, k))
        } else {
            let v = self.spec.value_at(p, top) + f64::from(k - top) * self.spec.value_at(p, 1);
            self.phase_of(v)
        }
    }
}

/// Largest `K` with `p^K <= x`, for `p <= x`.
fn max_power(p: u64, x: u64) -> u32 {
    let mut k = 0;
    let mut q = 1u64;
    while let Some(next) = q.checked_mul(p).filter(|&n| n <= x) {
        q = next;
        k += 1;
    }
    k
}

/// `ln(1 + w)` without cancellation for small `w`.
fn ln_1p(w: Complex64) -> Complex64 {
    if w.im == 0.0 {
        return Complex64::new(w.re.ln_1p(), 0.0);
    }
    Complex64::new(
        0.5 * (2.0 * w.re + w.norm_sqr()).ln_1p(),
        w.im.atan2(1.0 + w.re),
    )
}

/// `ln` of the factor `(1 - z/p)^{-1} (1 - 1/p)^z`.
fn euler_g_log_term(z: Complex64, p: u64) -> Complex64 {
    let inv = 1.0 / p as f64;
    let head = -ln_1p(-z * inv);
    let tail = z * (-inv).ln_1p();
    head + tail
}

/// `G(z) = prod_{p <= P} (1 - z/p)^{-1} (1 - 1/p)^z`, with the magnitude of
/// the last log increment.
pub fn euler_g(z: Complex64, prime_bound: u64) -> Result<(Complex64, f64)> {
    let primes = primes_up_to(prime_bound);
    let (log, last) = euler_g_log(z, &primes);
    finite(log.exp(), "G(z)").map(|g| (g, last))
}

fn euler_g_log(z: Complex64, primes: &[u64]) -> (Complex64, f64) {
    let mut log = Complex64::new(0.0, 0.0);
    let mut last = 0.0;
    for &p in primes {
        let t = euler_g_log_term(z, p);
        log += t;
        last = t.norm();
    }
    (log, last)
}

/// `(1 + sum_{k>=1} a_{p^k} p^{-k}) (1 - a_p / p)`, evaluated as the finite
/// sum `1 + sum_{k>=2, p^k<=x} (a_{p^k} - a_{p^{k-1}} a_p) p^{-k}`.
/// Equals 1 for `p > x`.
pub fn local_factor(coeffs: &CoefficientSystem<'_>, p: u64, x: u64) -> Complex64 {
    Complex64::new(1.0, 0.0) + local_excess(coeffs, p, x)
}

fn local_excess(coeffs: &CoefficientSystem<'_>, p: u64, x: u64) -> Complex64 {
    let mut w = Complex64::new(0.0, 0.0);
    if p > x {
        return w;
    }
    let a_p = coeffs.coefficient(p, 1, x);
    let mut prev = a_p;
    let mut pk = p;
    let mut k = 1;
    while let Some(next) = pk.checked_mul(p).filter(|&n| n <= x) {
        pk = next;
        k += 1;
        let cur = coeffs.coefficient(p, k, x);
        w += (cur - prev * a_p) / pk as f64;
        prev = cur;
    }
    w
}

#[derive(Clone, Debug, PartialEq)]
pub struct SDPrediction {
    pub c_prime: Complex64,
    /// `G(c')` truncated at `P`.
    pub g_euler: Complex64,
    /// Truncated `G(1; c')` per grid point.
    pub g_values: Vec<Complex64>,
    pub gamma_recip: Complex64,
    pub x_grid: Vec<u64>,
    pub main_term: Vec<Complex64>,
    pub prime_bound: u64,
    /// Largest magnitude of the log increment contributed by the last prime
    /// `<= P`, over the grid.
    pub tail_proxy: f64,
    pub converged: bool,
}

/// Main term `x (ln x)^{c'-1} G(1;c') / Gamma(c')` at each grid point.
pub fn sd_main_term(
    spec: &AdditiveFunctionSpec,
    a: i64,
    m: u32,
    base: Base,
    x_grid: &[u64],
    prime_bound: u64,
) -> Result<SDPrediction> {
    if prime_bound < 100 {
        return Err(Error::Precondition("prime bound P must be at least 100".into()));
    }
    if a == 0 || m == 0 {
        return Err(Error::Precondition("need a != 0 and m >= 1".into()));
    }
    check_grid(x_grid, 3)?;
    let coeffs = CoefficientSystem::new(spec, a, m, base);
    let c_prime = coeffs.c_prime();
    let primes = primes_up_to(prime_bound);
    let (g_log, g_last) = euler_g_log(c_prime, &primes);
    let g_euler = finite(g_log.exp(), "G(c')")?;
    let gamma_recip = recip_gamma(c_prime);
    let last_p = primes.last().copied();

    let mut g_values = Vec::with_capacity(x_grid.len());
    let mut main_term = Vec::with_capacity(x_grid.len());
    let mut tail_proxy = 0.0f64;
    for &x in x_grid {
        let mut log = g_log;
        // Factors with p^2 > x are exactly 1.
        for &p in primes.iter().take_while(|&&p| p.saturating_mul(p) <= x) {
            log += ln_1p(local_excess(&coeffs, p, x));
        }
        let last_local = last_p.map_or(0.0, |p| ln_1p(local_excess(&coeffs, p, x)).norm());
        tail_proxy = tail_proxy.max((g_last + last_local).abs());
        let g = finite(log.exp(), "G(1;c')")?;
        let xf = x as f64;
        let power = ((c_prime - 1.0) * xf.ln().ln()).exp();
        main_term.push(finite(power * g * gamma_recip * xf, "main term")?);
        g_values.push(g);
    }
    Ok(SDPrediction {
        c_prime,
        g_euler,
        g_values,
        gamma_recip,
        x_grid: x_grid.to_vec(),
        main_term,
        prime_bound,
        tail_proxy,
        converged: tail_proxy <= TAIL_TOLERANCE,
    })
}

/// `x e(a c ln ln x / b^m)` at each grid point.
pub fn phase_prediction(c: f64, a: i64, m: u32, base: Base, x_grid: &[u64]) -> Vec<Complex64> {
    let scale = f64::from(base.get()).powi(m as i32);
    x_grid
        .iter()
        .map(|&x| {
            let xf = x as f64;
            e(a as f64 * c * xf.ln().ln() / scale) * xf
        })
        .collect()
}

fn finite(z: Complex64, what: &str) -> Result<Complex64> {
    if z.re.is_finite() && z.im.is_finite() {
        Ok(z)
    } else {
        Err(Error::Numeric(format!("{what} is not finite")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn g_at_one_is_one() {
        for bound in [1_000, 100_000] {
            let (g, last) = euler_g(Complex64::new(1.0, 0.0), bound).unwrap();
            assert_eq!(g, Complex64::new(1.0, 0.0));
            assert_eq!(last, 0.0);
        }
    }

    #[test]
    fn coefficients_are_unimodular() {
        let spec = AdditiveFunctionSpec::omega();
        let cs = CoefficientSystem::new(&spec, 3, 1, Base::TEN);
        for p in [2, 3, 5, 7, 11, 101] {
            for k in 1..8 {
                for x in [10, 100, 1000] {
                    assert!((cs.coefficient(p, k, x).norm() - 1.0).abs() < 1e-15);
                }
            }
        }
    }

    #[test]
    fn coefficient_cases() {
        let spec = AdditiveFunctionSpec::omega();
        let cs = CoefficientSystem::new(&spec, 1, 1, Base::TEN);
        let q = |t: u64| super::super::phase::e_ratio(t % 10, 10);
        // p^k <= x
        assert_eq!(cs.coefficient(2, 3, 8), q(1));
        // p <= x < p^k: f(p^{k-1}) + f(p)
        assert_eq!(cs.coefficient(2, 4, 8), q(2));
        // p > x: k c
        assert_eq!(cs.coefficient(11, 3, 8), q(3));
    }

    #[test]
    fn omega_prime_part_cancels() {
        let spec = AdditiveFunctionSpec::omega();
        let cs = CoefficientSystem::new(&spec, 1, 1, Base::TEN);
        assert_eq!(cs.coefficient(5, 1, 100), cs.c_prime());
        // only k >= 2 terms remain
        assert_eq!(local_factor(&cs, 11, 100), Complex64::new(1.0, 0.0));
        assert_ne!(local_factor(&cs, 3, 100), Complex64::new(1.0, 0.0));
        assert_eq!(local_factor(&cs, 101, 100), Complex64::new(1.0, 0.0));
    }

    #[test]
    fn trivial_phase_gives_x() {
        let spec = AdditiveFunctionSpec::omega();
        let pred = sd_main_term(&spec, 10, 1, Base::TEN, &[1000, 10_000], 1000).unwrap();
        assert_eq!(pred.c_prime, Complex64::new(1.0, 0.0));
        assert_eq!(pred.main_term, vec![Complex64::new(1000.0, 0.0), Complex64::new(10_000.0, 0.0)]);
        assert!(pred.converged);
    }

    #[test]
    fn preconditions() {
        let spec = AdditiveFunctionSpec::omega();
        assert!(sd_main_term(&spec, 1, 1, Base::TEN, &[1000], 99).is_err());
        assert!(sd_main_term(&spec, 1, 1, Base::TEN, &[2], 1000).is_err());
    }

    #[test]
    fn phase_prediction_modulus() {
        let grid = [100, 10_000, 1_000_000];
        for v in phase_prediction(1.0, 7, 2, Base::TEN, &grid).iter().zip(grid) {
            assert!((v.0.norm() - v.1 as f64).abs() <= 1e-9 * v.1 as f64);
        }
    }
}
