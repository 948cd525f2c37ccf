//! Base-`b` digit machinery and the concatenated digit streams.
//!
//! Digit positions count from the least-significant end: position 1 is the
//! units digit. A window `[hi, lo]` is inclusive at both ends and is emitted
//! most-significant first.

mod build;
pub mod format;
mod schedule;

use std::fmt;

pub use build::{
    build_stream, build_window_stream, stream_chunk, stream_length, window_bounds, window_digits,
};
pub use schedule::{k_y, kappa, LengthSchedule, E_E};

use crate::error::{Error, Result};

const ALPHABET: &[u8; 36] = b"0123456789abcdefghijklmnopqrstuvwxyz";

/// A numeral base in `2..=36`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Base(u32);

impl Base {
    pub const TWO: Base = Base(2);
    pub const TEN: Base = Base(10);

    pub fn new(b: u32) -> Result<Self> {
        if !(2..=36).contains(&b) {
            return Err(Error::Config(format!("base must lie in 2..=36, got {b}")));
        }
        Ok(Base(b))
    }

    pub fn get(self) -> u32 {
        self.0
    }

    /// `b^e`, or `None` on `u64` overflow.
    pub fn checked_pow(self, e: u32) -> Option<u64> {
        (self.0 as u64).checked_pow(e)
    }

    pub fn digit_char(self, d: u8) -> char {
        ALPHABET[d as usize] as char
    }

    pub fn parse_digit(self, ch: char) -> Option<u8> {
        let d = ch.to_digit(36)? as u8;
        (u32::from(d) < self.0).then_some(d)
    }
}

impl fmt::Display for Base {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A fixed-length digit sequence, most-significant first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DigitString {
    base: Base,
    digits: Vec<u8>,
}

impl DigitString {
    pub fn new(base: Base, digits: Vec<u8>) -> Result<Self> {
        if let Some(&d) = digits.iter().find(|&&d| u32::from(d) >= base.get()) {
            return Err(Error::Config(format!("digit {d} is out of range for base {base}")));
        }
        Ok(DigitString { base, digits })
    }

    pub(crate) fn from_trusted(base: Base, digits: Vec<u8>) -> Self {
        DigitString { base, digits }
    }

    /// Parses the one-character-per-digit text form (`0-9a-z`).
    pub fn parse(base: Base, text: &str) -> Result<Self> {
        let digits = text
            .chars()
            .map(|ch| {
                base.parse_digit(ch).ok_or_else(|| {
                    Error::Config(format!("`{ch}` is not a base-{base} digit"))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(DigitString { base, digits })
    }

    pub fn base(&self) -> Base {
        self.base
    }

    pub fn digits(&self) -> &[u8] {
        &self.digits
    }

    pub fn into_digits(self) -> Vec<u8> {
        self.digits
    }

    pub fn len(&self) -> usize {
        self.digits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.digits.is_empty()
    }

    /// Numeric value, if it fits in a `u128`.
    pub fn value(&self) -> Option<u128> {
        let b = u128::from(self.base.get());
        self.digits
            .iter()
            .try_fold(0u128, |acc, &d| acc.checked_mul(b)?.checked_add(u128::from(d)))
    }

    pub fn to_text(&self) -> String {
        self.digits.iter().map(|&d| self.base.digit_char(d)).collect()
    }
}

impl fmt::Display for DigitString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// Digit of `n` at `position` (1 = least significant).
pub fn digit_of_int(n: u64, position: u32, base: Base) -> u8 {
    assert!(position >= 1, "digit positions start at 1");
    match base.checked_pow(position - 1) {
        Some(scale) => ((n / scale) % u64::from(base.get())) as u8,
        None => 0,
    }
}

/// `floor(floor(z) / b^(position-1)) mod b`.
pub fn digit_of(z: f64, position: u32, base: Base) -> u8 {
    digit_of_int(z.floor() as u64, position, base)
}

/// The last `m` digits of `n`, zero-padded on the left to exactly `m`.
pub fn truncate_int(n: u64, m: u32, base: Base) -> DigitString {
    let mut digits = vec![0u8; m as usize];
    let b = u64::from(base.get());
    let mut rest = n;
    for slot in digits.iter_mut().rev() {
        if rest == 0 {
            break;
        }
        *slot = (rest % b) as u8;
        rest /= b;
    }
    DigitString { base, digits }
}

/// The last `m` base-`b` digits of `floor(z)`, zero-padded to length `m`.
/// Values beyond `u64::MAX` saturate.
pub fn truncate(z: f64, m: u32, base: Base) -> DigitString {
    debug_assert!(z >= 0.0);
    truncate_int(z.floor() as u64, m, base)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn truncation_examples() {
        assert_eq!(truncate(151.0, 2, Base::TEN).to_text(), "51");
        assert_eq!(truncate(1.0, 2, Base::TEN).to_text(), "01");
        assert_eq!(truncate(0.5, 2, Base::TEN).to_text(), "00");
        assert_eq!(truncate_int(35, 3, Base::new(36).unwrap()).to_text(), "00z");
        assert_eq!(truncate_int(5, 4, Base::TWO).to_text(), "0101");
    }

    #[test]
    fn digit_positions() {
        assert_eq!(digit_of(151.0, 1, Base::TEN), 1);
        assert_eq!(digit_of(151.0, 2, Base::TEN), 5);
        assert_eq!(digit_of(151.0, 3, Base::TEN), 1);
        assert_eq!(digit_of(151.0, 4, Base::TEN), 0);
        assert_eq!(digit_of_int(u64::MAX, 30, Base::TEN), 0);
        assert_eq!(digit_of_int(u64::MAX, 20, Base::TEN), 1);
    }

    #[test]
    fn base_bounds() {
        assert!(Base::new(1).is_err());
        assert!(Base::new(37).is_err());
        assert!(Base::new(36).is_ok());
        assert_eq!(Base::TEN.parse_digit('a'), None);
        assert_eq!(Base::new(16).unwrap().parse_digit('a'), Some(10));
    }

    #[test]
    fn digit_string_text() {
        let s = DigitString::parse(Base::TEN, "00010102").unwrap();
        assert_eq!(s.len(), 8);
        assert_eq!(s.value(), Some(10102));
        assert!(DigitString::parse(Base::TWO, "012").is_err());
        assert!(DigitString::new(Base::TWO, vec![0, 2]).is_err());
    }
}
