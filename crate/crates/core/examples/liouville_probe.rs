//! `sum_{n <= x} (-1)^Omega(n)` as the exponential sum with `a = 1`,
//! `b^m = 2`, and its decay profile.

use additive_digits::expsum::{decay_profile, exp_sum, DecayCovariate};
use additive_digits::{AdditiveFunctionSpec, Base, ExecConfig};

fn main() -> additive_digits::Result<()> {
    let grid = [10, 1_000, 10_000, 100_000, 1_000_000, 10_000_000];
    let record = exp_sum(
        &AdditiveFunctionSpec::big_omega(),
        1,
        1,
        Base::TWO,
        &grid,
        &ExecConfig::default(),
    )?;
    println!("{:>10}  {:>8}  {:>10}", "x", "L(x)", "|L(x)|/x");
    for (x, s) in grid.iter().zip(&record.sums) {
        println!("{x:>10}  {:>8}  {:>10.6}", s.re, s.norm() / *x as f64);
    }
    let profile = decay_profile(&record, DecayCovariate::LnX)?;
    println!(
        "\nslope of ln(|L|/x) against ln x: {:?}  ({})",
        profile.slope,
        profile.verdict.as_str()
    );
    Ok(())
}
