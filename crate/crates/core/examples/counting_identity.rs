//! In-string occurrences from the indicator sum versus a direct search of
//! the concatenated stream.

use additive_digits::block_stats::{count_formula, Block};
use additive_digits::{AdditiveFunctionSpec, Base, ExecConfig, LengthSchedule};

fn main() -> additive_digits::Result<()> {
    let cfg = ExecConfig::default();
    let spec = AdditiveFunctionSpec::big_omega();
    println!("Omega, base 10, synthetic K, x = 10^5");
    println!("K  block  n_formula  n_star  boundary  u_part  v_part");
    for k in 1..=4 {
        let schedule = LengthSchedule::forced(0.5, Base::TEN, k)?;
        for text in ["1", "01", "10", "002"] {
            let block = Block::parse(Base::TEN, text)?;
            if block.k() > k as usize {
                continue;
            }
            let r = count_formula(&spec, &schedule, &block, 100_000, 0.1, &cfg)?;
            println!(
                "{k}  {text:>5}  {:>9}  {:>6}  {:>8}  {:>6}  {:>6}",
                r.n_formula,
                r.n_star,
                r.boundary_occurrences(),
                r.u_part,
                r.v_part
            );
        }
    }

    // With y > 1/2 the upper range of start positions is populated.
    let wide = LengthSchedule::forced(1.0, Base::TWO, 8)?;
    let r = count_formula(&spec, &wide, &Block::parse(Base::TWO, "0")?, 100_000, 0.1, &cfg)?;
    println!(
        "\nwide window, block 0: U = {:?} -> {}, V = {:?} -> {}",
        r.u_range, r.u_part, r.v_range, r.v_part
    );
    Ok(())
}
