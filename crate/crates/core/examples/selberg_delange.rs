//! Empirical exponential sums of `omega` against the predicted main term
//! `x (ln x)^{c'-1} G(1;c') / Gamma(c')` and the phase prediction.

use additive_digits::expsum::{
    complex_gamma, euler_g, exp_sum, phase_prediction, sd_main_term, ComplexValue,
};
use additive_digits::{AdditiveFunctionSpec, Base, ExecConfig};

fn main() -> additive_digits::Result<()> {
    let one = ComplexValue::new(1.0, 0.0);
    println!("Gamma(1) = {}", complex_gamma(one)?);
    println!("Gamma(1/2)^2 = {}", complex_gamma(ComplexValue::new(0.5, 0.0))?.powu(2));
    println!("G(1), P = 10^5: {}", euler_g(one, 100_000)?.0);

    let spec = AdditiveFunctionSpec::omega();
    let grid = [10_000, 100_000, 1_000_000, 10_000_000];
    let (a, m, base) = (1, 1, Base::TEN);
    let sums = exp_sum(&spec, a, m, base, &grid, &ExecConfig::default())?;
    let sd = sd_main_term(&spec, a, m, base, &grid, 100_000)?;
    let phase = phase_prediction(spec.c(), a, m, base, &grid);
    println!("\nc' = {:.6}, 1/Gamma(c') = {:.6}", sd.c_prime, sd.gamma_recip);
    println!("{:>9}  {:>8}  {:>8}  {:>8}  {:>10}", "x", "|S|/x", "|M|/x", "ratio", "arg S - arg M");
    for i in 0..grid.len() {
        let (s, mt) = (sums.sums[i], sd.main_term[i]);
        let x = grid[i] as f64;
        println!(
            "{:>9}  {:>8.5}  {:>8.5}  {:>8.5}  {:>10.5}",
            grid[i],
            s.norm() / x,
            mt.norm() / x,
            s.norm() / mt.norm(),
            s.arg() - mt.arg()
        );
    }
    println!("\nphase prediction x e(c lnln x / 10) / x:");
    for (x, p) in grid.iter().zip(&phase) {
        println!("{x:>9}  {:.5}", p / *x as f64);
    }
    println!("\ntail proxy {:e}, converged: {}", sd.tail_proxy, sd.converged);
    Ok(())
}
