//! Stream file formats.
//!
//! **Text**: one character per digit from the alphabet `0-9a-z`. Lines
//! starting with `#` are header comments; whitespace is ignored.
//!
//! **Packed binary**: an 8-byte header followed by the packed digits.
//!
//! | bytes | content                                        |
//! |-------|------------------------------------------------|
//! | 0..2  | magic `b"AD"`                                  |
//! | 2     | flags; bit 0 set when the stream is synthetic  |
//! | 3     | base                                           |
//! | 4..8  | digit count, `u32` little-endian               |
//!
//! Digits are packed most-significant-bit first using `ceil(log2 b)` bits
//! each; the final byte is zero-padded.

use super::{Base, DigitString};
use crate::error::{Error, Result};

pub const MAGIC: [u8; 2] = *b"AD";
pub const FLAG_SYNTHETIC: u8 = 1;

/// Bits per packed digit.
pub fn digit_bits(base: Base) -> u32 {
    32 - (base.get() - 1).leading_zeros()
}

pub fn encode_binary(stream: &DigitString, synthetic: bool) -> Result<Vec<u8>> {
    let len = u32::try_from(stream.len())
        .map_err(|_| Error::Config("binary streams hold at most 2^32 - 1 digits".into()))?;
    let w = digit_bits(stream.base());
    let mut out = Vec::with_capacity(8 + (stream.len() * w as usize).div_ceil(8));
    out.extend_from_slice(&MAGIC);
    out.push(if synthetic { FLAG_SYNTHETIC } else { 0 });
    out.push(stream.base().get() as u8);
    out.extend_from_slice(&len.to_le_bytes());
    let (mut acc, mut nbits) = (0u32, 0u32);
    for &d in stream.digits() {
        acc = (acc << w) | u32::from(d);
        nbits += w;
        while nbits >= 8 {
            nbits -= 8;
            out.push((acc >> nbits) as u8);
        }
        acc &= (1 << nbits) - 1;
    }
    if nbits > 0 {
        out.push((acc << (8 - nbits)) as u8);
    }
    Ok(out)
}

/// Decodes a packed stream, returning it with its synthetic flag.
pub fn decode_binary(bytes: &[u8]) -> Result<(DigitString, bool)> {
    let bad = |msg: &str| Error::Config(format!("malformed binary stream: {msg}"));
    if bytes.len() < 8 || bytes[..2] != MAGIC {
        return Err(bad("missing header"));
    }
    if bytes[2] & !FLAG_SYNTHETIC != 0 {
        return Err(bad("unknown flags"));
    }
    let base = Base::new(u32::from(bytes[3]))?;
    let len = u32::from_le_bytes(bytes[4..8].try_into().expect("4 bytes")) as usize;
    let w = digit_bits(base) as usize;
    let payload = &bytes[8..];
    if payload.len() != (len * w).div_ceil(8) {
        return Err(bad("payload length does not match digit count"));
    }
    let mut digits = Vec::with_capacity(len);
    let (mut acc, mut nbits) = (0u32, 0usize);
    let mut bytes_iter = payload.iter();
    for _ in 0..len {
        while nbits < w {
            acc = (acc << 8) | u32::from(*bytes_iter.next().expect("length checked"));
            nbits += 8;
        }
        nbits -= w;
        digits.push((acc >> nbits) as u8 & ((1u32 << w) - 1) as u8);
        acc &= (1 << nbits) - 1;
    }
    let stream = DigitString::new(base, digits)?;
    Ok((stream, bytes[2] & FLAG_SYNTHETIC != 0))
}

/// Parses the text format, skipping `#` comment lines and whitespace.
pub fn parse_text(base: Base, text: &str) -> Result<DigitString> {
    let body: String = text
        .lines()
        .filter(|l| !l.trim_start().starts_with('#'))
        .flat_map(|l| l.chars().filter(|c| !c.is_whitespace()))
        .collect();
    DigitString::parse(base, &body)
}

/// Reads `key=value` pairs from `# key=value` header lines.
pub fn header_value<'a>(text: &'a str, key: &str) -> Option<&'a str> {
    text.lines()
        .take_while(|l| l.starts_with('#'))
        .filter_map(|l| l.trim_start_matches('#').trim().split_once('='))
        .find(|(k, _)| k.trim() == key)
        .map(|(_, v)| v.trim())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn header_layout() {
        let s = DigitString::parse(Base::TEN, "011112").unwrap();
        let bytes = encode_binary(&s, true).unwrap();
        assert_eq!(&bytes[..8], &[b'A', b'D', 1, 10, 6, 0, 0, 0]);
        // 6 digits * 4 bits = 3 bytes: 0x01 0x11 0x12
        assert_eq!(&bytes[8..], &[0x01, 0x11, 0x12]);
        assert_eq!(decode_binary(&bytes).unwrap(), (s, true));
    }

    #[test]
    fn bits_per_digit() {
        assert_eq!(digit_bits(Base::TWO), 1);
        assert_eq!(digit_bits(Base::new(3).unwrap()), 2);
        assert_eq!(digit_bits(Base::new(16).unwrap()), 4);
        assert_eq!(digit_bits(Base::new(17).unwrap()), 5);
        assert_eq!(digit_bits(Base::new(36).unwrap()), 6);
    }

    #[test]
    fn rejects_garbage() {
        assert!(decode_binary(b"XX\0\x0a\0\0\0\0").is_err());
        assert!(decode_binary(b"AD\0\x0a\x02\0\0\0").is_err()); // missing payload
        assert!(decode_binary(b"AD\0\x01\0\0\0\0").is_err()); // base 1
        // digit 11 in base 10
        assert!(decode_binary(&[b'A', b'D', 0, 10, 1, 0, 0, 0, 0xb0]).is_err());
    }

    #[test]
    fn text_with_header() {
        let text = "# base=2\n# synthetic_K=true\n0110\n10\n";
        let s = parse_text(Base::TWO, text).unwrap();
        assert_eq!(s.to_text(), "011010");
        assert_eq!(header_value(text, "synthetic_K"), Some("true"));
        assert_eq!(header_value(text, "base"), Some("2"));
        assert_eq!(header_value(text, "y"), None);
    }
}
