use alloc::vec::Vec;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use super::primes::{is_prime, PrimeTable};

/// Trial division covers primes up to this bound before Pollard rho takes over.
pub const TRIAL_DIVISION_BOUND: u64 = 1_000_000;

/// Prime factorization of a `u64` by trial division, ascending.
pub fn factor_small(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            let mut e = 0;
            while n.is_multiple_of(d) {
                n /= d;
                e += 1;
            }
            out.push((d, e));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Prime factorization of a positive integer, ascending by prime. Zero and one
/// have empty factorizations.
pub fn factor_biguint(n: &BigUint) -> Vec<(BigUint, u32)> {
    let mut out: Vec<(BigUint, u32)> = Vec::new();
    if n.is_zero() {
        return out;
    }
    let mut rest = n.clone();
    // Small primes first; the full sieve is only built if something survives.
    for limit in [1_000, TRIAL_DIVISION_BOUND] {
        let table = PrimeTable::new(limit);
        for &p in table.primes() {
            if rest.is_one() {
                break;
            }
            if let Some(r) = rest.to_u64() {
                if p.saturating_mul(p) > r {
                    break;
                }
            }
            let pb = BigUint::from(p);
            let mut e = 0;
            loop {
                let (q, r) = rest.div_rem(&pb);
                if !r.is_zero() {
                    break;
                }
                rest = q;
                e += 1;
            }
            if e > 0 && !out.iter().any(|(q, _)| *q == pb) {
                out.push((pb, e));
            }
        }
        if rest.is_one() {
            break;
        }
        if let Some(r) = rest.to_u64() {
            if r < limit.saturating_mul(limit) {
                break;
            }
        }
    }
    if !rest.is_one() {
        let mut stack = alloc::vec![rest];
        while let Some(m) = stack.pop() {
            if m.is_one() {
                continue;
            }
            if is_probable_prime(&m) {
                match out.iter_mut().find(|(q, _)| *q == m) {
                    Some(entry) => entry.1 += 1,
                    None => out.push((m, 1)),
                }
                continue;
            }
            let d = pollard_brent(&m);
            stack.push(&m / &d);
            stack.push(d);
        }
    }
    out.sort();
    out
}

fn is_probable_prime(n: &BigUint) -> bool {
    if let Some(small) = n.to_u64() {
        return is_prime(small);
    }
    const BASES: [u32; 16] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53];
    let one = BigUint::one();
    let n_minus_one = n - &one;
    let s = n_minus_one.trailing_zeros().unwrap_or(0);
    let d = &n_minus_one >> s;
    'witness: for &a in &BASES {
        let a = BigUint::from(a);
        if (n % &a).is_zero() {
            return false;
        }
        let mut x = a.modpow(&d, n);
        if x == one || x == n_minus_one {
            continue;
        }
        for _ in 1..s {
            x = &x * &x % n;
            if x == n_minus_one {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

// Brent's variant of Pollard rho. `n` is composite with no factor below the
// trial bound, so the loop terminates with a proper divisor.
fn pollard_brent(n: &BigUint) -> BigUint {
    if n.is_even() {
        return BigUint::from(2u32);
    }
    let mut c = BigUint::one();
    loop {
        let f = |x: &BigUint| (x * x + &c) % n;
        let mut y = BigUint::from(2u32);
        let mut x = y.clone();
        let mut g = BigUint::one();
        let mut q = BigUint::one();
        let mut ys = y.clone();
        let mut r: u64 = 1;
        const M: u64 = 128;
        while g.is_one() {
            x = y.clone();
            for _ in 0..r {
                y = f(&y);
            }
            let mut k = 0;
            while k < r && g.is_one() {
                ys = y.clone();
                for _ in 0..M.min(r - k) {
                    y = f(&y);
                    let diff = if x > y { &x - &y } else { &y - &x };
                    q = q * diff % n;
                }
                g = q.gcd(n);
                k += M;
            }
            r *= 2;
        }
        if &g == n {
            loop {
                ys = f(&ys);
                let diff = if x > ys { &x - &ys } else { &ys - &x };
                g = diff.gcd(n);
                if !g.is_one() {
                    break;
                }
            }
        }
        if &g != n {
            return g;
        }
        c += 1u32;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn product(f: &[(BigUint, u32)]) -> BigUint {
        f.iter().fold(BigUint::one(), |acc, (p, e)| acc * p.pow(*e))
    }

    #[test]
    fn small_factorizations() {
        assert_eq!(factor_small(1), []);
        assert_eq!(factor_small(360), [(2, 3), (3, 2), (5, 1)]);
        assert_eq!(factor_small(999_983), [(999_983, 1)]);
    }

    #[test]
    fn smooth_number() {
        let n = BigUint::from(16200u32);
        let f = factor_biguint(&n);
        assert_eq!(
            f,
            [
                (BigUint::from(2u32), 3),
                (BigUint::from(3u32), 4),
                (BigUint::from(5u32), 2)
            ]
        );
    }

    #[test]
    fn rho_splits_semiprime_beyond_trial_bound() {
        let p = BigUint::from(1_000_000_007u64);
        let q = BigUint::from(998_244_353u64);
        let n = &p * &q * &p * BigUint::from(12u32);
        let f = factor_biguint(&n);
        assert_eq!(product(&f), n);
        assert!(f.contains(&(p, 2)));
        assert!(f.contains(&(q, 1)));
    }

    #[test]
    fn large_prime_cofactor() {
        // 2^89 - 1 is prime.
        let m = (BigUint::one() << 89) - BigUint::one();
        let n = &m * BigUint::from(6u32);
        let f = factor_biguint(&n);
        assert_eq!(f.len(), 3);
        assert_eq!(product(&f), n);
    }
}
