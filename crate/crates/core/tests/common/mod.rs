//! Independent reference implementations used by the integration tests.
#![allow(dead_code)]

use num_complex::Complex64;

/// `(Omega(n), omega(n))` by trial division.
pub fn omegas(mut n: u64) -> (u64, u64) {
    let (mut big, mut small) = (0, 0);
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            small += 1;
            while n % d == 0 {
                n /= d;
                big += 1;
            }
        }
        d += 1;
    }
    if n > 1 {
        big += 1;
        small += 1;
    }
    (big, small)
}

pub fn big_omega(n: u64) -> u64 {
    omegas(n).0
}

pub fn omega(n: u64) -> u64 {
    omegas(n).1
}

pub fn primes_by_trial(limit: u64) -> Vec<u64> {
    (2..=limit)
        .filter(|&n| (2..).take_while(|d| d * d <= n).all(|d| n % d != 0))
        .collect()
}

/// Last `width` base-`b` digits of `v`, most significant first.
pub fn last_digits(mut v: u64, base: u64, width: usize) -> Vec<u8> {
    let mut out = vec![0u8; width];
    for slot in out.iter_mut().rev() {
        *slot = (v % base) as u8;
        v /= base;
    }
    out
}

/// The concatenation of `last_digits(f(n), base, k)` for `n <= x`, with the
/// start offset of each string.
pub fn naive_stream(f: impl Fn(u64) -> u64, base: u64, k: usize, x: u64) -> (Vec<u8>, Vec<usize>) {
    let mut digits = Vec::new();
    let mut starts = Vec::new();
    for n in 1..=x {
        starts.push(digits.len());
        digits.extend(last_digits(f(n), base, k));
    }
    (digits, starts)
}

/// `(total, in_string)` occurrences of `block` in a stream made of strings
/// of constant width `k`.
pub fn boundary_aware_count(digits: &[u8], k: usize, block: &[u8]) -> (u64, u64) {
    let (mut total, mut inside) = (0, 0);
    if block.len() > digits.len() {
        return (0, 0);
    }
    for i in 0..=digits.len() - block.len() {
        if &digits[i..i + block.len()] == block {
            total += 1;
            if i / k == (i + block.len() - 1) / k {
                inside += 1;
            }
        }
    }
    (total, inside)
}

/// `sum_{n <= x} exp(2 pi i a f(n) / q)` term by term.
pub fn naive_exp_sum(f: impl Fn(u64) -> u64, a: i64, q: u64, x: u64) -> Complex64 {
    // Neumaier-compensated so the oracle itself stays accurate at large x.
    let (mut re, mut im) = ((0.0f64, 0.0f64), (0.0f64, 0.0f64));
    fn add(acc: &mut (f64, f64), v: f64) {
        let t = acc.0 + v;
        acc.1 += if acc.0.abs() >= v.abs() { (acc.0 - t) + v } else { (v - t) + acc.0 };
        acc.0 = t;
    }
    for n in 1..=x {
        let t = 2.0 * std::f64::consts::PI * (a as f64) * (f(n) as f64) / q as f64;
        add(&mut re, t.cos());
        add(&mut im, t.sin());
    }
    Complex64::new(re.0 + re.1, im.0 + im.1)
}
