//! Truncation, the length schedule, and the concatenated streams.

use additive_digits::digit_stream::format::{decode_binary, encode_binary};
use additive_digits::digit_stream::{
    build_stream, build_window_stream, k_y, kappa, truncate, truncate_int,
};
use additive_digits::{AdditiveFunctionSpec, Base, ExecConfig, LengthSchedule};

fn main() -> additive_digits::Result<()> {
    let ten = Base::TEN;
    println!("T_10(151, 2) = ({})", truncate_int(151, 2, ten).to_text());
    println!("T_10(1, 2)   = ({})", truncate_int(1, 2, ten).to_text());
    println!("T_10(0.5, 2) = ({})", truncate(0.5, 2, ten).to_text());

    let half = LengthSchedule::new(0.5, ten)?;
    println!("\nK_y(x) is tiny at any reachable x:");
    for x in [10.0, 1e4, 1e8, 1e16, 1e100, f64::MAX] {
        println!(
            "  x = {x:>9.1e}   K_1/2 = {}   K_2 = {}   kappa = {}",
            k_y(x, &half),
            k_y(x, &LengthSchedule::new(2.0, ten)?),
            kappa(x, ten)
        );
    }

    let cfg = ExecConfig::default();
    let omega = AdditiveFunctionSpec::omega();
    let natural = build_stream(&omega, &half, 12, &cfg)?;
    println!("\nnatural schedule, n <= 12:  {}", natural.to_text());

    // A synthetic constant K makes the structure visible.
    let forced = LengthSchedule::forced(0.5, ten, 3)?;
    let s = build_stream(&AdditiveFunctionSpec::big_omega(), &forced, 12, &cfg)?;
    println!("Omega with K = 3, n <= 12: {}", s.to_text());

    let window = build_window_stream(&omega, 0.25, Base::TWO, 12, Some(4), &cfg)?;
    println!("omega window, K = 4, eps = 1/4, base 2: {}", window.to_text());

    let packed = encode_binary(&s, true)?;
    let (back, synthetic) = decode_binary(&packed)?;
    assert_eq!(back, s);
    println!(
        "\npacked {} digits into {} bytes (synthetic flag {synthetic})",
        s.len(),
        packed.len()
    );
    Ok(())
}
