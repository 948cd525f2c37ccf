//! "Almost constant on primes" and "weakly additive" diagnostics for a few
//! functions.

use additive_digits::classify::{classify, DEFAULT_DELTA};
use additive_digits::additive::Mode;
use additive_digits::AdditiveFunctionSpec;

fn main() -> additive_digits::Result<()> {
    let grid = [1_000, 10_000, 100_000, 1_000_000, 10_000_000];
    let eps = [0.1, 0.4, 0.8];
    let drifting = AdditiveFunctionSpec::from_fn("1+p^-1/4", Mode::StronglyAdditive, 1.0, |p| {
        1.0 + (p as f64).powf(-0.25)
    })?;
    for spec in [
        AdditiveFunctionSpec::big_omega(),
        AdditiveFunctionSpec::omega(),
        drifting,
    ] {
        let report = classify(&spec, spec.c(), DEFAULT_DELTA, &eps, &grid)?;
        println!("{}", spec.describe());
        for r in report.rows().iter().filter(|r| r.eps == 0.4) {
            println!(
                "  x = {:>8}  acp_ratio = {:.6}  weak_product = {:.6}  {}",
                r.x, r.acp_ratio, r.weak_product, r.verdict
            );
        }
    }
    Ok(())
}
