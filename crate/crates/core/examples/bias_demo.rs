//! Why wide windows are not normal: high digits of `omega(n)` are almost
//! always 0, while its parity is balanced.

use additive_digits::block_stats::{chi_square, stream_census, Block};
use additive_digits::classify::bias_demo;
use additive_digits::{AdditiveFunctionSpec, Base, ExecConfig, LengthSchedule};

fn main() -> additive_digits::Result<()> {
    let x = std::env::args()
        .nth(1)
        .map(|s| additive_digits::cli::parse_count(&s).expect("x"))
        .unwrap_or(10_000_000);
    let cfg = ExecConfig::default();
    let omega = AdditiveFunctionSpec::omega();
    let zero = Block::parse(Base::TWO, "0")?;
    for pos in 1..=4 {
        let c = bias_demo(&omega, Base::TWO, x, &[pos], &cfg)?;
        println!("bit {pos} of omega(n), n <= {x}: freq(0) = {:.6}", c.frequency(&zero));
    }
    let parity = stream_census(&omega, &LengthSchedule::forced(0.5, Base::TWO, 1)?, x, 1, &cfg)?;
    println!(
        "\nK = 1 stream: freq(1) = {:.6}, chi^2 per digit = {:.6}",
        1.0 - parity.frequency(&zero),
        chi_square(&parity)? / parity.positions() as f64
    );
    Ok(())
}
