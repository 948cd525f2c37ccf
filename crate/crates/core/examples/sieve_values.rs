//! Sieve `Omega` and `omega` over a range and define a custom additive
//! function from a spec file.
//!
//! ```text
//! cargo run --release --example sieve_values -- 1e6
//! ```

use additive_digits::additive::sieve_range;
use additive_digits::{AdditiveFunctionSpec, ExecConfig};

fn main() -> additive_digits::Result<()> {
    let x: u64 = std::env::args()
        .nth(1)
        .map(|s| additive_digits::cli::parse_count(&s).expect("x"))
        .unwrap_or(1_000_000);
    let cfg = ExecConfig::default();

    let big = sieve_range(&AdditiveFunctionSpec::big_omega(), 1, 21, &cfg)?;
    let small = sieve_range(&AdditiveFunctionSpec::omega(), 1, 21, &cfg)?;
    println!("  n  Omega  omega");
    for ((n, a), (_, b)) in big.iter().zip(small.iter()) {
        println!("{n:>3}  {a:>5}  {b:>5}");
    }

    // Table mode: listed prime powers, k * f(p) elsewhere.
    let custom = AdditiveFunctionSpec::parse(
        "custom",
        "mode = table-with-default\nc = 1\n2 = 3\n2^2 = 4\n",
    )?;
    println!("\n{}", custom.describe());
    for n in [2u64, 4, 8, 12, 30] {
        println!("f({n}) = {}", custom.evaluate(n));
    }

    let t = std::time::Instant::now();
    let range = sieve_range(&AdditiveFunctionSpec::big_omega(), 1, x + 1, &cfg)?;
    let total: u64 = (0..range.len()).map(|i| range.values.floor(i)).sum();
    println!(
        "\nsum of Omega(n) for n <= {x}: {total}  ({:.2?})",
        t.elapsed()
    );
    Ok(())
}
