//! Small integer helpers: prime sets, p-parts and coprime splittings.

use num_integer::Integer;

pub fn gcd(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}

pub fn lcm(a: u64, b: u64) -> u64 {
    a.lcm(&b)
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Distinct prime divisors of `n` in ascending order (the set pi(n)).
pub fn prime_divisors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Largest divisor of `n` whose prime divisors all lie in `primes`.
pub fn pi_part(mut n: u64, primes: &[u64]) -> u64 {
    let mut part = 1;
    for &p in primes {
        if p < 2 {
            continue;
        }
        while n % p == 0 {
            n /= p;
            part *= p;
        }
    }
    part
}

pub fn p_part(n: u64, p: u64) -> u64 {
    pi_part(n, &[p])
}

pub fn divisors(n: u64) -> Vec<u64> {
    (1..=n).filter(|d| n % d == 0).collect()
}

/// Every ordered pair `(m, n)` with `m * n == total` and `gcd(m, n) == 1`,
/// including the trivial splits `(total, 1)` and `(1, total)`. Sorted by `m`.
pub fn hall_splits(total: u64) -> Vec<(u64, u64)> {
    divisors(total)
        .into_iter()
        .filter(|&m| gcd(m, total / m) == 1)
        .map(|m| (m, total / m))
        .collect()
}

/// `true` when every prime divisor of `k` lies in `primes`.
pub fn is_pi_number(k: u64, primes: &[u64]) -> bool {
    pi_part(k, primes) == k
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_sets() {
        assert_eq!(prime_divisors(1), Vec::<u64>::new());
        assert_eq!(prime_divisors(360), vec![2, 3, 5]);
        assert_eq!(prime_divisors(97), vec![97]);
    }

    #[test]
    fn parts() {
        assert_eq!(p_part(24, 2), 8);
        assert_eq!(p_part(24, 5), 1);
        assert_eq!(pi_part(360, &[2, 5]), 40);
    }

    #[test]
    fn splits_of_twelve() {
        assert_eq!(hall_splits(12), vec![(1, 12), (3, 4), (4, 3), (12, 1)]);
        assert_eq!(hall_splits(1), vec![(1, 1)]);
    }
}
