/// Möbius function.
pub fn mobius(n: u64) -> i64 {
    assert!(n >= 1);
    let mut n = n;
    let mut sign = 1;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            sign = -sign;
        }
        p += 1;
    }
    if n > 1 {
        sign = -sign;
    }
    sign
}

/// Rank of the degree-`k` part of the free Lie algebra on `n` generators:
/// `(1/k) Σ_{d|k} μ(d) n^{k/d}`.
///
/// Panics if `n^k` overflows `u128`.
pub fn witt_rank(n: u64, k: u64) -> u128 {
    assert!(n >= 1 && k >= 1, "witt_rank needs n, k >= 1");
    let mut total: i128 = 0;
    for d in (1..=k).filter(|d| k.is_multiple_of(*d)) {
        let mu = mobius(d);
        if mu == 0 {
            continue;
        }
        let power = (n as i128)
            .checked_pow((k / d) as u32)
            .expect("n^k overflows i128");
        total += mu as i128 * power;
    }
    debug_assert_eq!(total % k as i128, 0);
    (total / k as i128) as u128
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Duval's algorithm: Lyndon words of length exactly `k` over `n` letters.
    fn lyndon_count(n: usize, k: usize) -> u128 {
        let mut w = vec![0usize];
        let mut count = 0;
        loop {
            if w.len() == k {
                count += 1;
            }
            let m = w.len();
            while w.len() < k {
                let c = w[w.len() - m];
                w.push(c);
            }
            while let Some(&last) = w.last() {
                if last == n - 1 {
                    w.pop();
                } else {
                    break;
                }
            }
            match w.last_mut() {
                Some(last) => *last += 1,
                None => return count,
            }
        }
    }

    #[test]
    fn mobius_values() {
        let mu: Vec<i64> = (1..=12).map(mobius).collect();
        assert_eq!(mu, vec![1, -1, -1, 0, -1, 1, -1, 0, 0, 1, -1, 0]);
    }

    #[test]
    fn small_values() {
        assert_eq!(witt_rank(2, 1), 2);
        assert_eq!(witt_rank(2, 3), 2);
        assert_eq!(witt_rank(3, 2), 3);
        assert_eq!(witt_rank(4, 2), 6);
        assert_eq!((1..=3).map(|k| witt_rank(1, k)).collect::<Vec<_>>(), vec![1, 0, 0]);
    }

    #[test]
    fn matches_lyndon_enumeration() {
        for n in 1..=4 {
            for k in 1..=9 {
                assert_eq!(witt_rank(n as u64, k as u64), lyndon_count(n, k), "n={n} k={k}");
            }
        }
    }
}
