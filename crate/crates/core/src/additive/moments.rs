use super::primes::for_each_prime_below;
use super::spec::AdditiveFunctionSpec;
use crate::error::{Error, Result};

/// Prime sums `A = sum_{p<x} f(p)/p` and `B = sum_{p<x} f(p)^2/p`, the
/// reference mean and variance for Erdős–Kac type statistics.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PrimeMoments {
    pub x: u64,
    pub a: f64,
    pub b: f64,
}

/// Accumulates in ascending `p`, so the result is bit-reproducible.
pub fn prime_moments(spec: &AdditiveFunctionSpec, x: u64) -> Result<PrimeMoments> {
    if x < 2 {
        return Err(Error::Precondition(format!("prime_moments needs x >= 2, got {x}")));
    }
    let (mut a, mut b) = (0.0f64, 0.0f64);
    for_each_prime_below(x, |p| {
        let fp = spec.prime_value(p);
        a += fp / p as f64;
        b += fp * fp / p as f64;
    });
    Ok(PrimeMoments { x, a, b })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tiny_thresholds() {
        let omega = AdditiveFunctionSpec::omega();
        let m = prime_moments(&omega, 3).unwrap();
        assert_eq!((m.a, m.b), (0.5, 0.5));
        let m = prime_moments(&omega, 6).unwrap();
        assert_eq!(m.a, 0.5 + 1.0 / 3.0 + 0.2);
        assert_eq!(m.a, m.b);
        assert!(prime_moments(&omega, 1).is_err());
        // x = 2: no primes below 2
        assert_eq!(prime_moments(&omega, 2).unwrap().a, 0.0);
    }
}
