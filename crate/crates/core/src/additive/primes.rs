//! Prime generation: a plain sieve for small bounds and a segmented sieve for
//! streaming primes in ascending order.

/// All primes `p <= limit`, ascending.
pub fn primes_up_to(limit: u64) -> Vec<u64> {
    if limit < 2 {
        return Vec::new();
    }
    let limit = limit as usize;
    // index i represents the odd number 2i + 1
    let half = limit / 2 + 1;
    let mut composite = vec![false; half];
    let mut i = 1;
    while (2 * i + 1) * (2 * i + 1) <= limit {
        if !composite[i] {
            let p = 2 * i + 1;
            let mut j = p * p / 2;
            while j < half {
                composite[j] = true;
                j += p;
            }
        }
        i += 1;
    }
    let mut out = vec![2u64];
    out.extend(
        (1..half)
            .filter(|&i| !composite[i] && 2 * i + 1 <= limit)
            .map(|i| (2 * i + 1) as u64),
    );
    out
}

/// Integer square root: the largest `r` with `r * r <= n`.
pub fn isqrt(n: u64) -> u64 {
    if n < 2 {
        return n;
    }
    let mut r = (n as f64).sqrt() as u64;
    while r.checked_mul(r).is_none_or(|sq| sq > n) {
        r -= 1;
    }
    while (r + 1).checked_mul(r + 1).is_some_and(|sq| sq <= n) {
        r += 1;
    }
    r
}

const PRIME_SEGMENT: u64 = 1 << 18;

/// Calls `f` on every prime `p < limit` in ascending order.
pub fn for_each_prime_below(limit: u64, mut f: impl FnMut(u64)) {
    if limit <= 2 {
        return;
    }
    let base = primes_up_to(isqrt(limit - 1));
    let mut mark = vec![false; PRIME_SEGMENT as usize];
    let mut lo = 2u64;
    while lo < limit {
        let hi = (lo + PRIME_SEGMENT).min(limit);
        let len = (hi - lo) as usize;
        mark[..len].fill(false);
        for &p in &base {
            if p * p >= hi {
                break;
            }
            let mut start = lo.div_ceil(p) * p;
            if start < p * p {
                start = p * p;
            }
            let mut j = (start - lo) as usize;
            while j < len {
                mark[j] = true;
                j += p as usize;
            }
        }
        for (j, &composite) in mark[..len].iter().enumerate() {
            if !composite {
                f(lo + j as u64);
            }
        }
        lo = hi;
    }
}
