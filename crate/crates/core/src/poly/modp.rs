//! Polynomials over the prime field with `p` elements and their complete
//! factorization: squarefree decomposition, distinct-degree splitting and
//! Cantor-Zassenhaus equal-degree splitting.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;
use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::Polynomial;

/// Seed for equal-degree splitting unless the caller supplies one.
pub const DEFAULT_SEED: u64 = 1;

/// Residues are kept in `[0, p)`, ascending, with a nonzero leading residue.
/// The modulus must be a prime below `2^32`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ModPolynomial {
    p: u64,
    coeffs: Vec<u64>,
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    a * b % p
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, b, p);
        }
        b = mul_mod(b, b, p);
        e >>= 1;
    }
    acc
}

fn inv_mod(a: u64, p: u64) -> u64 {
    debug_assert!(!a.is_multiple_of(p));
    pow_mod(a, p - 2, p)
}

impl ModPolynomial {
    pub fn new(p: u64, coeffs: Vec<u64>) -> Self {
        assert!((2..(1 << 32)).contains(&p), "modulus out of range");
        let mut coeffs: Vec<u64> = coeffs.into_iter().map(|c| c % p).collect();
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        ModPolynomial { p, coeffs }
    }

    /// Coefficientwise reduction of an integer polynomial.
    pub fn reduce(f: &Polynomial, p: u64) -> Self {
        let modulus = BigInt::from(p);
        let coeffs = f
            .coeffs()
            .iter()
            .map(|c| c.mod_floor(&modulus).to_u64().unwrap())
            .collect();
        Self::new(p, coeffs)
    }

    fn one(p: u64) -> Self {
        Self::new(p, vec![1])
    }

    fn x(p: u64) -> Self {
        Self::new(p, vec![0, 1])
    }

    pub fn prime(&self) -> u64 {
        self.p
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs == [1]
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<u64> {
        self.coeffs.last().copied()
    }

    pub fn scale(&self, c: u64) -> Self {
        Self::new(
            self.p,
            self.coeffs
                .iter()
                .map(|&a| mul_mod(a, c % self.p, self.p))
                .collect(),
        )
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            Some(lc) => self.scale(inv_mod(lc, self.p)),
            None => self.clone(),
        }
    }

    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![0; k];
        coeffs.extend_from_slice(&self.coeffs);
        Self::new(self.p, coeffs)
    }

    pub fn add(&self, other: &Self) -> Self {
        let p = self.p;
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|i| {
                let a = self.coeffs.get(i).copied().unwrap_or(0);
                let b = other.coeffs.get(i).copied().unwrap_or(0);
                (a + b) % p
            })
            .collect();
        Self::new(p, coeffs)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(self.p - 1))
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::new(self.p, Vec::new());
        }
        let p = self.p;
        let mut out = vec![0u64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = (out[i + j] + a * b) % p;
            }
        }
        Self::new(p, out)
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(self.p);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// Quotient and remainder by a nonzero divisor.
    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        let p = self.p;
        let dd = d.degree().expect("division by zero polynomial");
        let inv = inv_mod(d.leading().unwrap(), p);
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return (Self::new(p, Vec::new()), self.clone());
        }
        let mut q = vec![0u64; r.len() - dd];
        for top in (dd..r.len()).rev() {
            let c = mul_mod(r[top], inv, p);
            if c == 0 {
                continue;
            }
            q[top - dd] = c;
            for (i, &dc) in d.coeffs.iter().enumerate() {
                let idx = top - dd + i;
                r[idx] = (r[idx] + p - mul_mod(c, dc, p)) % p;
            }
        }
        r.truncate(dd);
        (Self::new(p, q), Self::new(p, r))
    }

    pub fn rem(&self, d: &Self) -> Self {
        self.div_rem(d).1
    }

    /// Monic gcd; zero only when both inputs are zero.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    fn mul_mod_poly(&self, other: &Self, m: &Self) -> Self {
        self.mul(other).rem(m)
    }

    fn pow_mod_poly(&self, mut e: u64, m: &Self) -> Self {
        let mut base = self.rem(m);
        let mut acc = Self::one(self.p).rem(m);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_mod_poly(&base, m);
            }
            base = base.mul_mod_poly(&base, m);
            e >>= 1;
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        let p = self.p;
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(j, &c)| mul_mod(c, j as u64 % p, p))
            .collect();
        Self::new(p, coeffs)
    }

    pub fn evaluate(&self, x: u64) -> u64 {
        let p = self.p;
        self.coeffs
            .iter()
            .rev()
            .fold(0, |acc, &c| (mul_mod(acc, x % p, p) + c) % p)
    }

    /// `gcd(f, f') = 1`. The zero polynomial is not squarefree; constants are.
    pub fn is_squarefree(&self) -> bool {
        match self.degree() {
            None => false,
            Some(0) => true,
            Some(_) => {
                let d = self.derivative();
                !d.is_zero() && self.gcd(&d).is_one()
            }
        }
    }

    // For f = g(x^p), returns g (a^(1/p) = a in the prime field).
    fn pth_root(&self) -> Self {
        let p = self.p as usize;
        let coeffs = self.coeffs.iter().step_by(p).copied().collect();
        Self::new(self.p, coeffs)
    }

    /// Squarefree decomposition of a monic polynomial: pairs `(g, i)` with the
    /// `g` pairwise coprime, squarefree, and `f = prod g^i`.
    fn squarefree_decomposition(&self) -> Vec<(Self, usize)> {
        let p = self.p;
        let mut out = Vec::new();
        if self.degree().unwrap_or(0) == 0 {
            return out;
        }
        let d = self.derivative();
        if d.is_zero() {
            for (g, i) in self.pth_root().squarefree_decomposition() {
                out.push((g, i * p as usize));
            }
            return out;
        }
        let mut c = self.gcd(&d);
        let mut w = self.div_rem(&c).0;
        let mut i = 1;
        while !w.is_one() {
            let y = w.gcd(&c);
            let fac = w.div_rem(&y).0;
            if !fac.is_one() {
                out.push((fac, i));
            }
            i += 1;
            w = y;
            c = c.div_rem(&w).0;
        }
        if !c.is_one() {
            for (g, j) in c.pth_root().squarefree_decomposition() {
                out.push((g, j * p as usize));
            }
        }
        out
    }

    /// Distinct-degree factorization of a monic squarefree polynomial: pairs
    /// `(g, d)` where `g` is the product of all irreducible factors of degree `d`.
    pub fn distinct_degree(&self) -> Vec<(Self, usize)> {
        let p = self.p;
        let mut out = Vec::new();
        let mut rest = self.monic();
        let x = Self::x(p);
        let mut h = x.rem(&rest);
        let mut d = 1;
        while rest.degree().unwrap_or(0) >= 2 * d {
            h = h.pow_mod_poly(p, &rest);
            let g = rest.gcd(&h.sub(&x));
            if !g.is_one() {
                rest = rest.div_rem(&g).0;
                h = h.rem(&rest);
                out.push((g, d));
            }
            d += 1;
        }
        if let Some(deg) = rest.degree() {
            if deg > 0 {
                out.push((rest, deg));
            }
        }
        out
    }

    /// Degrees of the irreducible factors of a squarefree polynomial, ascending.
    /// This is the cycle type of Frobenius when `f` is a reduction of an
    /// integer polynomial at an unramified prime.
    pub fn factor_degrees(&self) -> Vec<usize> {
        let mut out = Vec::new();
        for (g, d) in self.distinct_degree() {
            let count = g.degree().unwrap() / d;
            out.extend(core::iter::repeat_n(d, count));
        }
        out.sort_unstable();
        out
    }

    fn random_below_degree(&self, n: usize, rng: &mut ChaCha8Rng) -> Self {
        let coeffs = (0..n).map(|_| rng.next_u64() % self.p).collect();
        Self::new(self.p, coeffs)
    }

    // Splits a monic squarefree g whose irreducible factors all have degree d.
    fn equal_degree(&self, d: usize, rng: &mut ChaCha8Rng, out: &mut Vec<Self>) {
        let n = self.degree().unwrap();
        if n == d {
            out.push(self.clone());
            return;
        }
        let p = self.p;
        loop {
            let a = self.random_below_degree(n, rng);
            if a.degree().unwrap_or(0) == 0 {
                continue;
            }
            let b = if p == 2 {
                // Trace map into the prime field.
                let mut t = a.clone();
                let mut acc = a.clone();
                for _ in 1..d {
                    t = t.mul_mod_poly(&t, self);
                    acc = acc.add(&t);
                }
                acc
            } else {
                // a^((p^d - 1) / 2) = (a^(1 + p + ... + p^(d-1)))^((p - 1) / 2)
                let mut t = a.clone();
                let mut norm = a.clone();
                for _ in 1..d {
                    t = t.pow_mod_poly(p, self);
                    norm = norm.mul_mod_poly(&t, self);
                }
                norm.pow_mod_poly((p - 1) / 2, self).sub(&Self::one(p))
            };
            let g = self.gcd(&b);
            let dg = g.degree().unwrap_or(0);
            if dg > 0 && dg < n {
                let other = self.div_rem(&g).0;
                g.equal_degree(d, rng, out);
                other.equal_degree(d, rng, out);
                return;
            }
        }
    }

    /// Complete factorization into monic irreducibles, reproducible for a
    /// given seed.
    pub fn factor_seeded(&self, seed: u64) -> FactorizationModP {
        let p = self.p;
        let Some(lc) = self.leading() else {
            panic!("factorization of the zero polynomial");
        };
        let monic = self.monic();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut factors = Vec::new();
        for (g, mult) in monic.squarefree_decomposition() {
            for (h, d) in g.distinct_degree() {
                let mut pieces = Vec::new();
                h.equal_degree(d, &mut rng, &mut pieces);
                factors.extend(pieces.into_iter().map(|f| (f, mult)));
            }
        }
        factors.sort();
        FactorizationModP {
            prime: p,
            unit: lc,
            factors,
            seed,
        }
    }

    pub fn factor(&self) -> FactorizationModP {
        self.factor_seeded(DEFAULT_SEED)
    }

    /// Roots in `[0, p)` with multiplicities, ascending.
    pub fn roots(&self) -> Vec<RootModP> {
        self.roots_seeded(DEFAULT_SEED)
    }

    /// Roots with multiplicity; `seed` drives equal-degree splitting and does
    /// not affect the result.
    pub fn roots_seeded(&self, seed: u64) -> Vec<RootModP> {
        if self.degree().unwrap_or(0) == 0 {
            return Vec::new();
        }
        self.factor_seeded(seed)
            .factors
            .iter()
            .filter(|(f, _)| f.degree() == Some(1))
            .map(|(f, m)| RootModP {
                residue: (self.p - f.coeffs[0]) % self.p,
                multiplicity: *m,
            })
            .collect::<alloc::collections::BTreeSet<_>>()
            .into_iter()
            .collect()
    }
}

impl fmt::Display for ModPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let lifted = Polynomial::new(self.coeffs.iter().map(|&c| BigInt::from(c)).collect());
        write!(f, "{lifted} (mod {})", self.p)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RootModP {
    pub residue: u64,
    pub multiplicity: usize,
}

impl RootModP {
    pub fn is_simple(&self) -> bool {
        self.multiplicity == 1
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorizationModP {
    pub prime: u64,
    pub unit: u64,
    /// Monic irreducible factors with multiplicities, sorted.
    pub factors: Vec<(ModPolynomial, usize)>,
    pub seed: u64,
}

impl FactorizationModP {
    pub fn expand(&self) -> ModPolynomial {
        self.factors.iter().fold(
            ModPolynomial::new(self.prime, vec![self.unit]),
            |acc, (f, m)| acc.mul(&f.pow(*m as u64)),
        )
    }

    /// Degree multiset, counting multiplicity, ascending.
    pub fn degrees(&self) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .factors
            .iter()
            .flat_map(|(f, m)| core::iter::repeat_n(f.degree().unwrap(), *m))
            .collect();
        out.sort_unstable();
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn mp(p: u64, c: &[u64]) -> ModPolynomial {
        ModPolynomial::new(p, c.to_vec())
    }

    // Irreducibility by brute force: no monic factor of degree <= n/2.
    fn brute_irreducible(f: &ModPolynomial) -> bool {
        let p = f.prime();
        let n = f.degree().unwrap();
        for d in 1..=n / 2 {
            let count = p.pow(d as u32);
            for idx in 0..count {
                let mut c = Vec::with_capacity(d + 1);
                let mut k = idx;
                for _ in 0..d {
                    c.push(k % p);
                    k /= p;
                }
                c.push(1);
                if f.rem(&mp(p, &c)).is_zero() {
                    return false;
                }
            }
        }
        true
    }

    #[test]
    fn reduce_examples() {
        let f = Polynomial::from_i64(&[3024, 1344, 252, 24, 1]);
        assert_eq!(ModPolynomial::reduce(&f, 3), mp(3, &[0, 0, 0, 0, 1]));
        let g = Polynomial::from_i64(&[840, -480, 120, -16, 1]);
        assert_eq!(ModPolynomial::reduce(&g, 3), mp(3, &[0, 0, 0, 2, 1]));
        let h = Polynomial::from_i64(&[4, -3, 2]);
        assert_eq!(ModPolynomial::reduce(&h, 11), mp(11, &[4, 8, 2]));
    }

    #[test]
    fn factor_examples() {
        let f = mp(3, &[0, 0, 0, 0, 1]).factor();
        assert_eq!(f.factors, [(mp(3, &[0, 1]), 4)]);
        let f = mp(5, &[1, 0, 1]).factor();
        assert_eq!(f.factors, [(mp(5, &[2, 1]), 1), (mp(5, &[3, 1]), 1)]);
        let f = mp(3, &[1, 0, 1]).factor();
        assert_eq!(f.factors, [(mp(3, &[1, 0, 1]), 1)]);
    }

    #[test]
    fn roots_examples() {
        let roots = mp(3, &[0, 0, 0, 2, 1]).roots();
        assert_eq!(
            roots,
            [
                RootModP {
                    residue: 0,
                    multiplicity: 3
                },
                RootModP {
                    residue: 1,
                    multiplicity: 1
                }
            ]
        );
        // x^5 (x + 3) mod 5
        let roots = mp(5, &[0, 0, 0, 0, 0, 3, 1]).roots();
        assert_eq!(
            roots,
            [
                RootModP {
                    residue: 0,
                    multiplicity: 5
                },
                RootModP {
                    residue: 2,
                    multiplicity: 1
                }
            ]
        );
        assert!(mp(7, &[4]).roots().is_empty());
    }

    #[test]
    fn characteristic_two_splitting() {
        // x^4 + x = x (x + 1) (x^2 + x + 1) over F_2
        let f = mp(2, &[0, 1, 0, 0, 1]).factor();
        assert_eq!(f.degrees(), [1, 1, 2]);
        // product of the two cubics x^3+x+1 and x^3+x^2+1
        let g = mp(2, &[1, 1, 0, 1]).mul(&mp(2, &[1, 0, 1, 1]));
        assert_eq!(g.factor().degrees(), [3, 3]);
    }

    #[test]
    fn seed_is_recorded_and_reproducible() {
        let f = mp(7, &[3, 1, 4, 1, 5, 2, 6, 1]);
        let a = f.factor_seeded(42);
        let b = f.factor_seeded(42);
        assert_eq!(a, b);
        assert_eq!(a.seed, 42);
        assert_eq!(a.factors, f.factor_seeded(7).factors);
    }

    fn modpoly_strategy() -> impl Strategy<Value = ModPolynomial> {
        (0usize..5, proptest::collection::vec(0u64..1000, 2..14)).prop_filter_map(
            "nonzero",
            |(pi, c)| {
                let p = [2u64, 3, 5, 7, 11][pi];
                let f = ModPolynomial::new(p, c);
                (!f.is_zero()).then_some(f)
            },
        )
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(500))]
        #[test]
        fn factorization_reproduces_input(f in modpoly_strategy()) {
            let fac = f.factor();
            prop_assert_eq!(fac.expand(), f.clone());
            for (g, _) in &fac.factors {
                prop_assert_eq!(g.leading(), Some(1));
                // distinct-degree self check: a single block of degree deg g
                let dd = g.distinct_degree();
                prop_assert_eq!(dd.len(), 1);
                prop_assert_eq!(dd[0].1, g.degree().unwrap());
            }
        }

        #[test]
        fn factors_are_irreducible_by_brute_force(
            pi in 0usize..3,
            c in proptest::collection::vec(0u64..100, 2..8),
        ) {
            let p = [2u64, 3, 5][pi];
            let f = ModPolynomial::new(p, c);
            prop_assume!(f.degree().unwrap_or(0) >= 1);
            for (g, _) in f.factor().factors {
                prop_assert!(brute_irreducible(&g));
            }
        }

        #[test]
        fn roots_match_evaluation(f in modpoly_strategy()) {
            let found: Vec<u64> = f.roots().iter().map(|r| r.residue).collect();
            let brute: Vec<u64> = if f.degree() == Some(0) {
                Vec::new()
            } else {
                (0..f.prime()).filter(|&x| f.evaluate(x) == 0).collect()
            };
            prop_assert_eq!(found, brute);
        }

        #[test]
        fn reduction_commutes_with_arithmetic(
            a in proptest::collection::vec(-10_000i64..10_000, 0..8),
            b in proptest::collection::vec(-10_000i64..10_000, 0..8),
            pi in 0usize..5,
        ) {
            let p = [2u64, 3, 5, 7, 11][pi];
            let fa = Polynomial::from_i64(&a);
            let fb = Polynomial::from_i64(&b);
            let ra = ModPolynomial::reduce(&fa, p);
            let rb = ModPolynomial::reduce(&fb, p);
            prop_assert_eq!(ModPolynomial::reduce(&(&fa * &fb), p), ra.mul(&rb));
            prop_assert_eq!(ModPolynomial::reduce(&(&fa + &fb), p), ra.add(&rb));
            prop_assert_eq!(ModPolynomial::reduce(&(&fa - &fb), p), ra.sub(&rb));
        }
    }
}
