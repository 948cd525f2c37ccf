//! The distribution of `omega(n)` against `ln ln x`.
//!
//! ```text
//! cargo run --release --example erdos_kac -- 1e8
//! ```

use additive_digits::classify::ek_stats;
use additive_digits::{AdditiveFunctionSpec, ExecConfig};

fn main() -> additive_digits::Result<()> {
    let x = std::env::args()
        .nth(1)
        .map(|s| additive_digits::cli::parse_count(&s).expect("x"))
        .unwrap_or(10_000_000);
    let r = ek_stats(&AdditiveFunctionSpec::omega(), x, &ExecConfig::default())?;
    println!("x = {x}, ln ln x = {:.4}", r.lnln_x);
    println!("mean {:.4} (prime sum {:.4})", r.mean, r.moments.a);
    println!("variance {:.4} (prime sum {:.4})", r.variance, r.moments.b);
    for (v, n) in r.histogram.iter() {
        let bar = "#".repeat((60.0 * n as f64 / x as f64).round() as usize);
        println!("{v:>2} {n:>10} {bar}");
    }
    for t in 1..=3 {
        println!("within {t} sd: {:.4}", r.fraction_within(t));
    }
    Ok(())
}
