//! Invariants checked over random and exhaustive inputs.

mod common;

use additive_digits::additive::{factor::factorize, sieve_range, Mode};
use additive_digits::block_stats::{
    census_digits, chi_square, count_formula, merge, theta_ind, theta_ind_int, Block,
    CensusSegment,
};
use additive_digits::classify::{b_eps, c_eps};
use additive_digits::digit_stream::format::{decode_binary, encode_binary};
use additive_digits::digit_stream::{
    build_stream, build_window_stream, digit_of, digit_of_int, k_y, kappa, stream_length, truncate,
    truncate_int, window_bounds,
};
use additive_digits::expsum::exp_sum;
use additive_digits::{AdditiveFunctionSpec, Base, DigitString, ExecConfig, LengthSchedule, Value};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn custom_spec() -> AdditiveFunctionSpec {
    AdditiveFunctionSpec::parse("t", "mode = table-with-default\n2 = 3\n3^2 = 7\n5 = 2\n").unwrap()
}

#[test]
fn additivity_on_random_coprime_pairs() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let specs = [AdditiveFunctionSpec::big_omega(), AdditiveFunctionSpec::omega(), custom_spec()];
    let mut done = 0;
    while done < 10_000 {
        let bits = rng.gen_range(1..=40);
        let m = rng.gen_range(1..1u64 << bits);
        let limit = (1u64 << 63) / m;
        let n = rng.gen_range(1..=limit.min(1 << 40));
        if gcd(m, n) != 1 {
            continue;
        }
        let spec = &specs[done % 3];
        let (a, b, ab) = (spec.evaluate(m), spec.evaluate(n), spec.evaluate(m * n));
        assert_eq!(ab.floor(), a.floor() + b.floor(), "{} at {m} * {n}", spec.name());
        done += 1;
    }
}

#[test]
fn big_omega_dominates_with_equality_on_squarefree() {
    let x = 1_000_000u64;
    let cfg = ExecConfig::default();
    let big = sieve_range(&AdditiveFunctionSpec::big_omega(), 1, x + 1, &cfg).unwrap();
    let small = sieve_range(&AdditiveFunctionSpec::omega(), 1, x + 1, &cfg).unwrap();
    let mut squarefree = vec![true; x as usize + 1];
    let mut d = 2u64;
    while d * d <= x {
        for k in (d * d..=x).step_by((d * d) as usize) {
            squarefree[k as usize] = false;
        }
        d += 1;
    }
    for i in 0..big.len() {
        let n = i + 1;
        let (a, b) = (big.values.floor(i), small.values.floor(i));
        assert!(a >= b);
        assert_eq!(a == b, squarefree[n], "n = {n}");
    }
}

#[test]
fn theta_int_matches_digits_exhaustively() {
    for b in [2u32, 10] {
        let base = Base::new(b).unwrap();
        let top = u64::from(b).pow(6);
        for v in 0..top {
            for m in 1..=6u32 {
                for k in 1..=3usize {
                    let digits: Vec<u8> = (0..k)
                        .map(|i| {
                            let pos = m as i64 - i as i64;
                            if pos >= 1 { digit_of(v as f64, pos as u32, base) } else { 0 }
                        })
                        .collect();
                    let hit = Block::new(base, digits).unwrap();
                    assert_eq!(theta_ind_int(v, m, &hit), 1);
                    let other = (hit.index() + 1) % u64::from(b).pow(k as u32);
                    assert_eq!(theta_ind_int(v, m, &Block::from_index(base, k, other)), 0);
                }
            }
        }
    }
}

#[test]
fn reconstruction_of_truncations() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..100_000 {
        let base = Base::new(rng.gen_range(2..=36)).unwrap();
        let m = rng.gen_range(1..=8u32);
        let n: u64 = rng.gen_range(0..1 << 50);
        let t = truncate_int(n, m, base);
        assert_eq!(t.len(), m as usize);
        let q = u128::from(base.get()).pow(m);
        assert_eq!(t.value().unwrap(), u128::from(n) % q);
        let z = n as f64 + rng.gen_range(0.0..0.999);
        assert_eq!(truncate(z, m, base), truncate_int(z.floor() as u64, m, base));
    }
}

proptest! {
    #[test]
    fn segment_independence(lo in 1u64..1_000_000, a in 1u64..3000, b in 1u64..3000, seg in 64usize..5000) {
        let (mid, hi) = (lo + a, lo + a + b);
        let cfg = ExecConfig::default().with_segment_len(seg);
        for spec in [AdditiveFunctionSpec::big_omega(), custom_spec()] {
            let mut left = sieve_range(&spec, lo, mid, &cfg).unwrap().values;
            left.append(sieve_range(&spec, mid, hi, &cfg).unwrap().values);
            let whole = sieve_range(&spec, lo, hi, &ExecConfig::default()).unwrap().values;
            prop_assert_eq!(left, whole);
        }
    }

    #[test]
    fn sieve_agrees_with_evaluate(lo in 1u64..1u64 << 40, len in 1u64..500) {
        let spec = custom_spec();
        let r = sieve_range(&spec, lo, lo + len, &ExecConfig::default()).unwrap();
        for (n, v) in r.iter() {
            prop_assert_eq!(v, spec.evaluate(n));
        }
    }

    #[test]
    fn real_sieve_close_to_evaluate(lo in 1u64..1_000_000, len in 1u64..500) {
        let spec = AdditiveFunctionSpec::from_fn("sqrt", Mode::CompletelyAdditive, 1.0, |p| (p as f64).sqrt()).unwrap();
        let r = sieve_range(&spec, lo, lo + len, &ExecConfig::default().with_segment_len(97)).unwrap();
        for (n, v) in r.iter() {
            let (got, want) = (v.as_f64(), spec.evaluate(n).as_f64());
            prop_assert!((got - want).abs() <= 1e-12 * want.abs().max(1.0));
            let direct: f64 = factorize(n).iter().map(|&(p, k)| k as f64 * (p as f64).sqrt()).sum();
            prop_assert!((got - direct).abs() <= 1e-12 * direct.max(1.0));
        }
    }

    #[test]
    fn k_y_monotone(x1 in 1.0f64..1e300, x2 in 1.0f64..1e300, y1 in 0.01f64..4.0, y2 in 0.01f64..4.0, b in 2u32..=36) {
        let base = Base::new(b).unwrap();
        let (xl, xh) = if x1 <= x2 { (x1, x2) } else { (x2, x1) };
        let (yl, yh) = if y1 <= y2 { (y1, y2) } else { (y2, y1) };
        let s = LengthSchedule::new(yl, base).unwrap();
        prop_assert!(k_y(xl, &s) <= k_y(xh, &s));
        prop_assert!(k_y(xl, &s) <= k_y(xl, &LengthSchedule::new(yh, base).unwrap()));
        prop_assert_eq!(k_y(xl, &LengthSchedule::new(0.5, base).unwrap()), kappa(xl, base));
    }

    #[test]
    fn stream_length_exact(k in 1u32..6, b in 2u32..=16, n_max in 1u64..3000) {
        let sched = LengthSchedule::forced(0.5, Base::new(b).unwrap(), k).unwrap();
        let s = build_stream(&AdditiveFunctionSpec::omega(), &sched, n_max, &ExecConfig::default()).unwrap();
        prop_assert_eq!(s.len() as u128, stream_length(&sched, n_max));
        prop_assert_eq!(s.len() as u64, n_max * u64::from(k));
    }

    #[test]
    fn window_digits_are_digit_of(kap in 1u32..8, eps in 0.01f64..0.49, n_max in 1u64..2000) {
        let spec = AdditiveFunctionSpec::big_omega();
        let s = build_window_stream(&spec, eps, Base::TWO, n_max, Some(kap), &ExecConfig::default()).unwrap();
        let mut expected = Vec::new();
        if let Some((hi, lo)) = window_bounds(kap, eps) {
            for n in 1..=n_max {
                let v = common::big_omega(n);
                for pos in (lo..=hi).rev() {
                    expected.push(digit_of_int(v, pos, Base::TWO));
                }
            }
        }
        prop_assert_eq!(s.digits(), &expected[..]);
    }

    #[test]
    fn census_totals_and_merge(digits in proptest::collection::vec(0u8..3, 0..300), cut1 in 0usize..300, cut2 in 0usize..300, k in 1usize..4) {
        let base = Base::new(3).unwrap();
        let c = census_digits(base, &digits, k).unwrap();
        prop_assert_eq!(c.counts().iter().sum::<u64>(), (digits.len() + 1).saturating_sub(k) as u64);
        prop_assert_eq!(c.positions(), (digits.len() + 1).saturating_sub(k) as u64);

        let (i, j) = { let a = cut1.min(digits.len()); let b = cut2.min(digits.len()); (a.min(b), a.max(b)) };
        let parts = [&digits[..i], &digits[i..j], &digits[j..]];
        let seg = |d: &[u8]| CensusSegment::of(base, d, k).unwrap();
        let left = seg(parts[0]).append(&seg(parts[1])).unwrap().append(&seg(parts[2])).unwrap();
        let right = seg(parts[0]).append(&seg(parts[1]).append(&seg(parts[2])).unwrap()).unwrap();
        prop_assert_eq!(&left.census, &c);
        prop_assert_eq!(&right.census, &c);

        // two pieces through `merge` with an explicit boundary
        let (a, b) = (&digits[..i], &digits[i..]);
        if a.len() >= k - 1 && b.len() >= k - 1 {
            let boundary = [&a[a.len() - (k - 1)..], &b[..k - 1]].concat();
            let m = merge(&census_digits(base, a, k).unwrap(), &census_digits(base, b, k).unwrap(), &boundary).unwrap();
            prop_assert_eq!(m, c.clone());
        }
        if c.positions() > 0 {
            prop_assert!(chi_square(&c).unwrap() >= 0.0);
        }
    }

    #[test]
    fn boundary_occurrences_bounded(k_forced in 1u32..5, x in 1u64..3000, idx in 0u64..1000, big in any::<bool>()) {
        let spec = if big { AdditiveFunctionSpec::big_omega() } else { AdditiveFunctionSpec::omega() };
        let k = ((idx % 3) as usize + 1).min(k_forced as usize);
        let block = Block::from_index(Base::TWO, k, idx % (1 << k));
        let sched = LengthSchedule::forced(0.5, Base::TWO, k_forced).unwrap();
        let r = count_formula(&spec, &sched, &block, x, 0.1, &ExecConfig::default()).unwrap();
        prop_assert!(r.n_star >= r.n_formula);
        prop_assert!(r.boundary_occurrences() <= (k as u64 - 1) * x);
        prop_assert!(r.u_part + r.v_part <= r.n_formula);
    }

    #[test]
    fn theta_float_on_exact_fractions(int_part in 0u64..1000, idx in 0u64..1000, k in 1usize..4) {
        // z = int + (block + 1/2) / 10^k sits in the middle of the block's interval
        let block = Block::from_index(Base::TEN, k, idx % 10u64.pow(k as u32));
        let z = int_part as f64 + (block.index() as f64 + 0.5) / 10f64.powi(k as i32);
        prop_assert_eq!(theta_ind(z, &block), 1);
        let next = Block::from_index(Base::TEN, k, (block.index() + 1) % 10u64.pow(k as u32));
        prop_assert_eq!(theta_ind(z, &next), 0);
    }

    #[test]
    fn binary_round_trip(digits in proptest::collection::vec(0u8..36, 0..500), b in 2u32..=36, synthetic in any::<bool>()) {
        let base = Base::new(b).unwrap();
        let s = DigitString::new(base, digits.into_iter().map(|d| d % b as u8).collect()).unwrap();
        let (back, flag) = decode_binary(&encode_binary(&s, synthetic).unwrap()).unwrap();
        prop_assert_eq!(back, s);
        prop_assert_eq!(flag, synthetic);
    }

    #[test]
    fn kernels_clip(dev in -1e6f64..1e6, x in 2u64..1u64 << 40, eps in 0.001f64..4.0, p_idx in 0usize..6, k in 2u32..6) {
        let p = [2u64, 3, 5, 7, 11, 13][p_idx];
        let spec = AdditiveFunctionSpec::from_fn("d", Mode::CompletelyAdditive, 0.0, move |q| if q == 2 { dev.abs() } else { 1.0 }).unwrap();
        let b = b_eps(&spec, 1.0, x, p, eps);
        prop_assert!((0.0..=2.0).contains(&b));
        let table = AdditiveFunctionSpec::parse("t", &format!("mode = table-with-default\n{p}^{k} = {}\n", dev.abs().round())).unwrap();
        let c = c_eps(&table, x, p, k, eps);
        prop_assert!((0.0..=2.0).contains(&c));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn exp_sum_invariants(a in -50i64..50, m in 1u32..4, b in 2u32..=10, x in 2u64..20_000, seg in 100usize..5000) {
        prop_assume!(a != 0);
        let base = Base::new(b).unwrap();
        let grid = [x / 2 + 1, x];
        let grid = if grid[0] < grid[1] { grid.to_vec() } else { vec![x] };
        let cfg = ExecConfig::default();
        for spec in [AdditiveFunctionSpec::big_omega(), custom_spec()] {
            let s = exp_sum(&spec, a, m, base, &grid, &cfg).unwrap();
            for (x, v) in grid.iter().zip(&s.sums) {
                prop_assert!(v.norm() <= *x as f64 + 1e-9);
            }
            let q = i64::from(b).pow(m);
            let shift = if a + q != 0 { a + q } else { a - q };
            let shifted = exp_sum(&spec, shift, m, base, &grid, &cfg).unwrap();
            prop_assert_eq!(&shifted.sums, &s.sums);
            let neg = exp_sum(&spec, -a, m, base, &grid, &cfg).unwrap();
            for (u, v) in s.sums.iter().zip(&neg.sums) {
                prop_assert!((u.conj() - v).norm() <= 1e-12);
            }
            let parted = exp_sum(&spec, a, m, base, &grid, &cfg.clone().with_segment_len(seg)).unwrap();
            prop_assert_eq!(&parted.sums, &s.sums);
        }
        let real = AdditiveFunctionSpec::from_fn("sqrt", Mode::StronglyAdditive, 1.0, |p| (p as f64).sqrt()).unwrap();
        let r1 = exp_sum(&real, a, m, base, &grid, &cfg).unwrap();
        let r2 = exp_sum(&real, a, m, base, &grid, &cfg.clone().with_segment_len(seg).with_threads(3)).unwrap();
        prop_assert_eq!(&r1.sums, &r2.sums);
        let rn = exp_sum(&real, -a, m, base, &grid, &cfg).unwrap();
        for (u, v) in r1.sums.iter().zip(&rn.sums) {
            prop_assert!((u.conj() - v).norm() <= 1e-12);
        }
    }
}

#[test]
fn digit_of_agrees_with_int_path() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..10_000 {
        let base = Base::new(rng.gen_range(2..=36)).unwrap();
        let n: u64 = rng.gen_range(0..1 << 52);
        let pos = rng.gen_range(1..=12);
        assert_eq!(digit_of(n as f64 + 0.25, pos, base), digit_of_int(n, pos, base));
    }
    assert_eq!(AdditiveFunctionSpec::omega().evaluate(1), Value::Int(0));
}
