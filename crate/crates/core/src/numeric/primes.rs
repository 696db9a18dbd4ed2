use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use super::Rational;

/// Primes up to a fixed limit from a sieve of Eratosthenes. Built once, then
/// shared read-only.
#[derive(Debug, Clone)]
pub struct PrimeTable {
    limit: u64,
    primes: Vec<u64>,
}

impl PrimeTable {
    pub fn new(limit: u64) -> Self {
        let n = limit as usize;
        let mut composite = vec![false; n + 1];
        let mut primes = Vec::new();
        for i in 2..=n {
            if composite[i] {
                continue;
            }
            primes.push(i as u64);
            let mut j = i * i;
            while j <= n {
                composite[j] = true;
                j += i;
            }
        }
        PrimeTable { limit, primes }
    }

    pub fn limit(&self) -> u64 {
        self.limit
    }

    pub fn primes(&self) -> &[u64] {
        &self.primes
    }

    /// Primes `q` with `lo < q < hi`, ascending. Both bounds must lie within the
    /// sieve limit.
    pub fn open_interval(&self, lo: u64, hi: u64) -> &[u64] {
        assert!(hi <= self.limit + 1, "interval exceeds sieve limit");
        let start = self.primes.partition_point(|&q| q <= lo);
        let end = self.primes.partition_point(|&q| q < hi);
        if start >= end {
            &[]
        } else {
            &self.primes[start..end]
        }
    }

    /// Same as [`PrimeTable::open_interval`] with rational endpoints.
    pub fn open_interval_rational(&self, lo: &Rational, hi: &Rational) -> &[u64] {
        let (lo, hi) = integer_bounds(lo, hi);
        match (lo, hi) {
            (Some(lo), Some(hi)) if lo + 1 < hi => self.open_interval(lo, hi),
            _ => &[],
        }
    }
}

// Integer bounds `(a, b)` such that the integers strictly between `lo` and `hi`
// are exactly those strictly between `a` and `b`. Negative parts clamp to 0.
fn integer_bounds(lo: &Rational, hi: &Rational) -> (Option<u64>, Option<u64>) {
    let lo_floor = lo.floor().to_integer();
    let hi_ceil = hi.ceil().to_integer();
    let clamp = |x: BigInt| {
        if x.is_negative() {
            Some(0)
        } else {
            x.to_u64()
        }
    };
    (clamp(lo_floor), clamp(hi_ceil))
}

/// All primes `q` with `lo < q < hi`, ascending.
pub fn primes_in_interval(lo: &Rational, hi: &Rational) -> Vec<u64> {
    if lo >= hi {
        return Vec::new();
    }
    match integer_bounds(lo, hi) {
        (Some(a), Some(b)) if a + 1 < b => PrimeTable::new(b).open_interval(a, b).to_vec(),
        _ => Vec::new(),
    }
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin; exact for every `u64`.
pub fn is_prime(n: u64) -> bool {
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for &p in &BASES {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for &a in &BASES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

pub(crate) fn is_zero_mod(x: &BigInt, p: u64) -> bool {
    (x % BigInt::from(p)).is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::rational;
    use proptest::prelude::*;

    #[test]
    fn interval_examples() {
        assert_eq!(primes_in_interval(&rational(14, 1), &rational(18, 1)), [17]);
        assert!(primes_in_interval(&rational(40, 3), &rational(17, 1)).is_empty());
        assert_eq!(primes_in_interval(&rational(4, 1), &rational(6, 1)), [5]);
        assert_eq!(
            primes_in_interval(&rational(-5, 1), &rational(4, 1)),
            [2, 3]
        );
        assert!(primes_in_interval(&rational(5, 1), &rational(5, 1)).is_empty());
    }

    #[test]
    fn primality_examples() {
        assert!(is_prime(17));
        assert!(!is_prime(1));
        assert!(!is_prime(3u64.pow(6)));
        assert!(is_prime(999_999_999_989));
        assert!(!is_prime(999_999_999_987));
        // Strong pseudoprime to bases 2..=31 except 37.
        assert!(!is_prime(3_825_123_056_546_413_051));
    }

    #[test]
    fn sieve_agrees_with_miller_rabin() {
        let table = PrimeTable::new(20_000);
        let from_test: Vec<u64> = (0..=20_000).filter(|&n| is_prime(n)).collect();
        assert_eq!(table.primes(), &from_test[..]);
    }

    proptest! {
        #[test]
        fn interval_matches_filter(lo_n in -50i64..5000, lo_d in 1i64..7, width in 1i64..3000, hi_d in 1i64..7) {
            let lo = rational(lo_n, lo_d);
            let hi = &lo + rational(width, hi_d);
            let got = primes_in_interval(&lo, &hi);
            let upper = hi.ceil().to_integer().to_u64().unwrap();
            let expected: Vec<u64> = (0..=upper)
                .filter(|&q| is_prime(q))
                .filter(|&q| {
                    let qr = rational(q as i64, 1);
                    lo < qr && qr < hi
                })
                .collect();
            prop_assert_eq!(got, expected);
        }
    }
}
