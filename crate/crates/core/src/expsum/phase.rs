//! The additive character `e(t) = exp(2 pi i t)` and exact phase reduction.

use std::f64::consts::TAU;

use num_complex::Complex64;

use crate::digit_stream::Base;

/// `e(t)`, reduced to `t - round(t)` first so `e(-t)` is exactly the
/// conjugate of `e(t)` and quarter turns are exact.
pub fn e(t: f64) -> Complex64 {
    let r = t - t.round();
    if r == 0.0 {
        return Complex64::new(1.0, 0.0);
    }
    if r.abs() == 0.5 {
        return Complex64::new(-1.0, 0.0);
    }
    if r.abs() == 0.25 {
        return Complex64::new(0.0, r.signum());
    }
    let (s, c) = (TAU * r).sin_cos();
    Complex64::new(c, s)
}

/// `e(r / q)` for integers `0 <= r < q`, symmetric under `r -> q - r`.
pub fn e_ratio(r: u64, q: u64) -> Complex64 {
    debug_assert!(r < q);
    if r == 0 {
        return Complex64::new(1.0, 0.0);
    }
    let r2 = u128::from(r) * 2;
    let q = u128::from(q);
    if r2 == q {
        return Complex64::new(-1.0, 0.0);
    }
    if r2 * 2 == q {
        return Complex64::new(0.0, 1.0);
    }
    if r2 * 2 == 3 * q {
        return Complex64::new(0.0, -1.0);
    }
    if r2 > q {
        return e_ratio((q - u128::from(r)) as u64, q as u64).conj();
    }
    let (s, c) = (TAU * (r as f64 / q as f64)).sin_cos();
    Complex64::new(c, s)
}

/// Maps values `v` to `e(a v / b^m)`.
///
/// For integer `v` the phase comes from the residue `a v mod b^m`, which
/// keeps it exact for large `v` and makes it depend on `a` only modulo `b^m`.
#[derive(Clone, Copy, Debug)]
pub struct PhaseMap {
    pub a: i64,
    pub m: u32,
    pub base: Base,
    modulus: Option<u64>,
    a_residue: u64,
    scale: f64,
}

impl PhaseMap {
    pub fn new(a: i64, m: u32, base: Base) -> Self {
        let modulus = base.checked_pow(m).filter(|&q| q <= 1 << 63);
        let a_residue = modulus.map_or(0, |q| a.rem_euclid(q as i64) as u64);
        PhaseMap {
            a,
            m,
            base,
            modulus,
            a_residue,
            scale: f64::from(base.get()).powi(m as i32),
        }
    }

    /// `b^m` when it fits the exact path.
    pub fn modulus(&self) -> Option<u64> {
        self.modulus
    }

    pub fn of_int(&self, v: u64) -> Complex64 {
        match self.modulus {
            Some(q) => {
                let r = (u128::from(self.a_residue) * u128::from(v % q)) % u128::from(q);
                e_ratio(r as u64, q)
            }
            None => self.of_real(v as f64),
        }
    }

    pub fn of_real(&self, v: f64) -> Complex64 {
        e(self.a as f64 * v / self.scale)
    }
}
