//! Overlapping block counts, chi-square scores, and merging censuses of
//! consecutive stream pieces.

use additive_digits::block_stats::{census, chi_square, merge, stream_census, Block, CensusSegment};
use additive_digits::{AdditiveFunctionSpec, Base, DigitString, ExecConfig, LengthSchedule};

fn main() -> additive_digits::Result<()> {
    let s = DigitString::parse(Base::TEN, "011112")?;
    let c = census(&s, 1)?;
    for (block, n) in c.iter().filter(|(_, n)| *n > 0) {
        println!("{block}: {n}");
    }

    // Splitting a stream and merging with the boundary digits recovers the
    // census of the whole.
    let text = DigitString::parse(Base::TEN, "00010102010302")?;
    let (left, right) = text.digits().split_at(6);
    let k = 2;
    let boundary = [&left[left.len() - (k - 1)..], &right[..k - 1]].concat();
    let merged = merge(
        &census(&DigitString::new(Base::TEN, left.to_vec())?, k)?,
        &census(&DigitString::new(Base::TEN, right.to_vec())?, k)?,
        &boundary,
    )?;
    assert_eq!(merged, census(&text, k)?);
    let seg = CensusSegment::of(Base::TEN, left, k)?.append(&CensusSegment::of(Base::TEN, right, k)?)?;
    assert_eq!(seg.census, merged);
    let b01 = Block::parse(Base::TEN, "01")?;
    println!("\n\"01\" occurs {} times in {}", merged.count(&b01), text.to_text());

    // A stream census straight from the sieve, never materializing the stream.
    let cfg = ExecConfig::default();
    let forced = LengthSchedule::forced(0.5, Base::TWO, 1)?;
    for x in [10_000u64, 1_000_000] {
        let c = stream_census(&AdditiveFunctionSpec::omega(), &forced, x, 1, &cfg)?;
        let one = Block::parse(Base::TWO, "1")?;
        println!(
            "omega parity stream, x = {x}: freq(1) = {:.4}, chi^2 per digit = {:.4}",
            c.frequency(&one),
            chi_square(&c)? / c.positions() as f64
        );
    }
    Ok(())
}
