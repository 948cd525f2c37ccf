//! Complex gamma function: Lanczos approximation (g = 7, 9 terms) with the
//! reflection formula on the left half-plane.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};

const LANCZOS_G: f64 = 7.0;
const LANCZOS_COEF: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

fn is_pole(z: Complex64) -> bool {
    z.im == 0.0 && z.re <= 0.0 && z.re.fract() == 0.0
}

fn lanczos(z: Complex64) -> Complex64 {
    // Gamma(z) for Re z >= 1/2
    let z = z - 1.0;
    let mut x = Complex64::new(LANCZOS_COEF[0], 0.0);
    for (i, &c) in LANCZOS_COEF.iter().enumerate().skip(1) {
        x += c / (z + i as f64);
    }
    let t = z + LANCZOS_G + 0.5;
    (2.0 * PI).sqrt() * t.powc(z + 0.5) * (-t).exp() * x
}

/// `Gamma(z)`; an error at the poles `0, -1, -2, ...`.
pub fn complex_gamma(z: Complex64) -> Result<Complex64> {
    if is_pole(z) {
        return Err(Error::Pole(z.re));
    }
    if let Some(f) = small_factorial(z) {
        return Ok(Complex64::new(f, 0.0));
    }
    let g = if z.re < 0.5 {
        PI / ((PI * z).sin() * lanczos(1.0 - z))
    } else {
        lanczos(z)
    };
    if !(g.re.is_finite() && g.im.is_finite()) {
        return Err(Error::Numeric(format!("Gamma({z}) overflows")));
    }
    Ok(g)
}

/// `Gamma(n) = (n-1)!` for integers `1 <= n <= 20`, where the product is exact.
fn small_factorial(z: Complex64) -> Option<f64> {
    if z.im != 0.0 || z.re.fract() != 0.0 || !(1.0..=20.0).contains(&z.re) {
        return None;
    }
    Some((1..z.re as u64).product::<u64>() as f64)
}

/// `1 / Gamma(z)`, entire: zero at the poles of `Gamma`.
pub fn recip_gamma(z: Complex64) -> Complex64 {
    if is_pole(z) {
        return Complex64::new(0.0, 0.0);
    }
    if let Some(f) = small_factorial(z) {
        return Complex64::new(1.0 / f, 0.0);
    }
    if z.re < 0.5 {
        (PI * z).sin() * lanczos(1.0 - z) / PI
    } else {
        1.0 / lanczos(z)
    }
}
