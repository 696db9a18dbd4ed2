//! Checks of the individual statements the certificates rest on: Eisenstein
//! shape of `P(p^n, p^n+1)` and `Q(p^n-1, p^n)`, the near-Eisenstein
//! dichotomy, the prime-gap lemma and the diagonal square-class table.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::families::{pade_p, pade_q, Family};
use crate::newton::{
    degree_exclusion_interval, eisenstein_dumas, newton_polygon, possible_factor_degrees,
    ExclusionInterval,
};
use crate::numeric::{
    factorial_valuation, is_prime, rational, squarefree_part_int, valuation_int, PrimeTable,
    Rational, SquareClass,
};
use crate::poly::{ModPolynomial, Polynomial, DEFAULT_SEED};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    /// `P(p^n, p^n + 1)`
    P,
    /// `Q(p^n - 1, p^n)`
    Q,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EisensteinReport {
    pub prime: u64,
    pub exponent: u32,
    pub side: Side,
    pub degree: usize,
    pub a0_valuation: u64,
    /// `(p^n - 1)/(p - 1)`
    pub expected_a0_valuation: u64,
    /// `v_p(a_0)` from Legendre's formula on the factorials defining `a_0`.
    pub factorial_a0_valuation: u64,
    /// Indices `j` where the coefficient valuation identity fails.
    pub identity_failures: Vec<usize>,
    /// `v_p(a_1)` lies on or above the line from `(0, v_p(a_0))` to `(p^n, 0)`.
    pub j1_above_line: bool,
    pub single_segment: bool,
    pub eisenstein: bool,
}

impl EisensteinReport {
    pub fn a0_ok(&self) -> bool {
        self.a0_valuation == self.expected_a0_valuation
            && self.a0_valuation == self.factorial_a0_valuation
            && !self.a0_valuation.is_multiple_of(self.prime)
    }

    pub fn identity_ok(&self) -> bool {
        self.identity_failures.is_empty() && self.j1_above_line
    }

    /// The four named checks, in order.
    pub fn checks(&self) -> [(&'static str, bool); 4] {
        [
            ("a0-valuation", self.a0_ok()),
            ("valuation-identity", self.identity_ok()),
            ("single-segment", self.single_segment),
            ("eisenstein-dumas", self.eisenstein),
        ]
    }

    pub fn ok(&self) -> bool {
        self.checks().iter().all(|c| c.1)
    }
}

/// Verifies the Eisenstein shape of `P(N, N+1)` (side P) or `Q(N-1, N)`
/// (side Q), `N = p^n`, at `p`.
///
/// Side P: `v_p(a_j) = v_p(a_0) + v_p(j-1) - v_p(j!)` for `2 <= j <= N`.
/// Side Q: `v_p(a_j) = v_p(a_0) + v_p(C(N,j)) - v_p(j!)` for `1 <= j <= N`.
/// At `j = 1` on side P the identity would need `v_p(0)`; both sides instead
/// check that `(1, v_p(a_1))` is on or above the Eisenstein line.
pub fn verify_eisenstein_theorem(
    p: u64,
    n: u32,
    side: Side,
    budget: u64,
) -> Result<EisensteinReport> {
    if p == 2 || !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if n == 0 {
        return Err(Error::InvalidParameters("exponent must be positive".into()));
    }
    let big_n = p
        .checked_pow(n)
        .filter(|&d| d <= budget)
        .ok_or(Error::BudgetExceeded {
            degree: p.saturating_pow(n),
            budget,
        })?;
    let f = match side {
        Side::P => pade_p(big_n, big_n + 1),
        Side::Q => pade_q(big_n - 1, big_n),
    };
    let degree = big_n as usize;
    let v = |j: usize| valuation_int(p, &f.coeff(j)).map(|x| x as i64);
    let vf = |m: u64| factorial_valuation(p, m) as i64;
    let a0 = v(0)?;
    let factorial_a0 = match side {
        Side::P => vf(2 * big_n + 1) - vf(big_n + 1),
        Side::Q => vf(2 * big_n - 1) - vf(big_n - 1),
    };
    let mut identity_failures = Vec::new();
    let first = match side {
        Side::P => 2,
        Side::Q => 1,
    };
    for j in first..=degree {
        let expected = match side {
            Side::P => a0 + valuation_int(p, &BigInt::from(j - 1))? as i64 - vf(j as u64),
            Side::Q => {
                let binom = vf(big_n) - vf(j as u64) - vf(big_n - j as u64);
                a0 + binom - vf(j as u64)
            }
        };
        if v(j)? != expected {
            identity_failures.push(j);
        }
    }
    // v_p(a_1) >= a0 (1 - 1/N)
    let line = Rational::from_integer(a0.into()) * rational(big_n as i64 - 1, big_n as i64);
    let j1_above_line = Rational::from_integer(v(1)?.into()) >= line;
    let expected_a0 = (big_n - 1) / (p - 1);
    let np = newton_polygon(&f, p)?;
    let single_segment = np.vertices() == [(0, expected_a0 as i64), (degree, 0)];
    Ok(EisensteinReport {
        prime: p,
        exponent: n,
        side,
        degree,
        a0_valuation: a0 as u64,
        expected_a0_valuation: expected_a0,
        factorial_a0_valuation: factorial_a0 as u64,
        identity_failures,
        j1_above_line,
        single_segment,
        eisenstein: eisenstein_dumas(&f, p),
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NearEisensteinOutcome {
    /// `f mod q` has no root, so `f` has no linear factor.
    NoRootModQ { q: u64 },
    /// No integer root of absolute value at most `bound` in the admissible
    /// residue classes; every root is smaller than `bound`.
    NoIntegerRoot { bound: BigInt, candidates: usize },
    /// `f = (x - root) g` with `g` irreducible of degree `n - 1`.
    LinearFactor { root: BigInt },
    /// The local constraints allow more than the dichotomy.
    Undetermined,
}

impl NearEisensteinOutcome {
    pub fn irreducible(&self) -> Option<bool> {
        match self {
            NearEisensteinOutcome::NoRootModQ { .. }
            | NearEisensteinOutcome::NoIntegerRoot { .. } => Some(true),
            NearEisensteinOutcome::LinearFactor { .. } => Some(false),
            NearEisensteinOutcome::Undetermined => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NearEisensteinSide {
    pub family: Family,
    pub u: u64,
    pub v: u64,
    pub polynomial: Polynomial,
    pub factor_degrees: BTreeSet<usize>,
    pub exclusion: Option<ExclusionInterval>,
    /// Residues of the simple roots of `f mod p`.
    pub simple_root_residues: Vec<u64>,
    pub outcome: NearEisensteinOutcome,
}

impl NearEisensteinSide {
    /// No factor degree strictly between `1` and `p`.
    pub fn dichotomy_holds(&self, p: u64) -> bool {
        self.factor_degrees.iter().all(|&d| d <= 1 || d as u64 >= p)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NearEisensteinReport {
    pub prime: u64,
    /// `P(p+1, p+2)`
    pub p_side: NearEisensteinSide,
    /// `Q(p, p+1)`
    pub q_side: NearEisensteinSide,
}

fn ceil_root(x: &BigInt, k: u32) -> BigInt {
    let r = x.nth_root(k);
    if num_traits::pow(r.clone(), k as usize) < *x {
        r + 1
    } else {
        r
    }
}

/// Fujiwara's bound `2 max |a_i/a_n|^(1/(n-i))` (halving `a_0`), rounded up.
pub fn fujiwara_bound(f: &Polynomial) -> BigInt {
    let n = f.degree().unwrap_or(0);
    let lc = f.leading().map(BigInt::abs).unwrap_or_default();
    let mut best = BigInt::zero();
    for i in 0..n {
        let mut a = f.coeff(i).abs();
        let mut den = lc.clone();
        if i == 0 {
            den *= 2;
        }
        if a.is_zero() {
            continue;
        }
        a = Integer::div_ceil(&a, &den);
        best = best.max(ceil_root(&a, (n - i) as u32));
    }
    best * 2
}

fn near_eisenstein_side(
    family: Family,
    u: u64,
    v: u64,
    p: u64,
    seed: u64,
) -> Result<NearEisensteinSide> {
    let f = match family {
        Family::P => pade_p(u, v),
        _ => pade_q(u, v),
    };
    let n = f.degree().ok_or(Error::ZeroPolynomial)?;
    let factor_degrees = possible_factor_degrees(&f, &[p])?;
    let exclusion = degree_exclusion_interval(&f, p)?;
    let simple_root_residues: Vec<u64> = ModPolynomial::reduce(&f, p)
        .roots_seeded(seed)
        .into_iter()
        .filter(|r| r.is_simple())
        .map(|r| r.residue)
        .collect();
    let dichotomy: BTreeSet<usize> = [0, 1, n - 1, n].into_iter().collect();
    let outcome = if !factor_degrees.is_subset(&dichotomy) {
        NearEisensteinOutcome::Undetermined
    } else if let Some(q) = PrimeTable::new(200)
        .primes()
        .iter()
        .copied()
        .find(|&q| ModPolynomial::reduce(&f, q).roots_seeded(seed).is_empty())
    {
        NearEisensteinOutcome::NoRootModQ { q }
    } else {
        let bound = fujiwara_bound(&f);
        let limit = bound.to_i64().expect("root bound fits in i64");
        let admissible = |r: i64| {
            simple_root_residues.is_empty()
                || simple_root_residues.contains(&(r.rem_euclid(p as i64) as u64))
        };
        let candidates: Vec<i64> = (-limit..=limit).filter(|&r| admissible(r)).collect();
        match candidates
            .iter()
            .find(|&&r| f.evaluate_int(&BigInt::from(r)).is_zero())
        {
            Some(&r) => NearEisensteinOutcome::LinearFactor { root: r.into() },
            None => NearEisensteinOutcome::NoIntegerRoot {
                bound,
                candidates: candidates.len(),
            },
        }
    };
    Ok(NearEisensteinSide {
        family,
        u,
        v,
        polynomial: f,
        factor_degrees,
        exclusion,
        simple_root_residues,
        outcome,
    })
}

/// Local analysis of `P(p+1, p+2)` and `Q(p, p+1)` at an odd prime `p`: both
/// are irreducible or a linear factor times an irreducible of degree `p`.
/// Root residues mod `p` are computed from the reductions.
pub fn near_eisenstein_analysis(p: u64) -> Result<NearEisensteinReport> {
    near_eisenstein_analysis_seeded(p, DEFAULT_SEED)
}

/// [`near_eisenstein_analysis`] with an explicit seed for root finding mod `p`.
pub fn near_eisenstein_analysis_seeded(p: u64, seed: u64) -> Result<NearEisensteinReport> {
    if p == 2 || !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    Ok(NearEisensteinReport {
        prime: p,
        p_side: near_eisenstein_side(Family::P, p + 1, p + 2, p, seed)?,
        q_side: near_eisenstein_side(Family::Q, p, p + 1, p, seed)?,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimeGapReport {
    pub lo: u64,
    pub hi: u64,
    /// `m` with no prime in `(2m/3, m-3)`.
    pub failures: Vec<u64>,
}

pub fn verify_prime_gap(lo: u64, hi: u64) -> Result<PrimeGapReport> {
    if lo < 2 || lo > hi {
        return Err(Error::InvalidParameters("need 2 <= lo <= hi".into()));
    }
    let table = PrimeTable::new(hi);
    let failures = (lo..=hi)
        .filter(|&m| {
            let lower = rational(2 * m as i64, 3);
            let upper = Rational::from_integer(BigInt::from(m) - 3);
            table.open_interval_rational(&lower, &upper).is_empty()
        })
        .collect();
    Ok(PrimeGapReport { lo, hi, failures })
}

/// Expected square class of the discriminant of a diagonal approximant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SquareClassRule {
    Exactly(SquareClass),
    Negative,
}

impl SquareClassRule {
    pub fn matches(&self, class: &SquareClass) -> bool {
        match self {
            SquareClassRule::Exactly(expected) => expected == class,
            SquareClassRule::Negative => class.representative().is_negative(),
        }
    }
}

/// Square class of `disc P(m, m+1)` or `disc Q(m, m+1)` by the residue of `m`
/// mod 4.
pub fn diagonal_square_class_rule(family: Family, m: u64) -> Result<SquareClassRule> {
    let exact = |x: u64| squarefree_part_int(&BigInt::from(x)).map(SquareClassRule::Exactly);
    match (family, m % 4) {
        (Family::P, 0) => exact(1),
        (Family::P, 1) => exact(2 * (m / 4) + 1),
        (Family::P, _) => Ok(SquareClassRule::Negative),
        (Family::Q, 3) => exact(2),
        (Family::Q, 0) => exact(m + 1),
        (Family::Q, _) => Ok(SquareClassRule::Negative),
        (other, _) => Err(Error::InvalidParameters(alloc::format!(
            "no square-class rule for {other}"
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::galois::disc_square_class;

    #[test]
    fn eisenstein_examples() {
        let r = verify_eisenstein_theorem(3, 1, Side::P, 400).unwrap();
        assert!(r.ok(), "{r:?}");
        assert_eq!(r.a0_valuation, 1);
        let r = verify_eisenstein_theorem(3, 2, Side::P, 400).unwrap();
        assert!(r.ok());
        assert_eq!(r.a0_valuation, 4);
        for side in [Side::P, Side::Q] {
            assert!(verify_eisenstein_theorem(5, 2, side, 400).unwrap().ok());
        }
        assert_eq!(
            verify_eisenstein_theorem(7, 3, Side::P, 300),
            Err(Error::BudgetExceeded {
                degree: 343,
                budget: 300
            })
        );
        assert!(verify_eisenstein_theorem(2, 1, Side::P, 400).is_err());
    }

    #[test]
    fn j1_is_off_the_identity() {
        // a_1 = 90 for P(3,4): v_3 = 2 = v_3(a_0) + 1, which the identity cannot give
        let f = pade_p(3, 4);
        assert_eq!(valuation_int(3, &f.coeff(1)).unwrap(), 2);
        assert!(
            verify_eisenstein_theorem(3, 1, Side::P, 400)
                .unwrap()
                .j1_above_line
        );
    }

    #[test]
    fn p_identity_fails_on_the_q_side() {
        // the P-side formula, applied to Q(8, 9) at 3, breaks at some j
        let f = pade_q(8, 9);
        let a0 = valuation_int(3, &f.coeff(0)).unwrap() as i64;
        let broken = (2..=9usize).any(|j| {
            let lhs = valuation_int(3, &f.coeff(j)).unwrap() as i64;
            let rhs = a0 + valuation_int(3, &BigInt::from(j - 1)).unwrap() as i64
                - factorial_valuation(3, j as u64) as i64;
            lhs != rhs
        });
        assert!(broken);
    }

    #[test]
    fn near_eisenstein_examples() {
        let r = near_eisenstein_analysis(5).unwrap();
        assert_eq!(r.p_side.factor_degrees, [0, 1, 5, 6].into_iter().collect());
        assert_eq!(r.p_side.simple_root_residues, [2]);
        assert!(r.p_side.dichotomy_holds(5));
        let r = near_eisenstein_analysis(3).unwrap();
        assert_eq!(near_eisenstein_analysis_seeded(3, 99).unwrap(), r);
        assert_eq!(r.p_side.factor_degrees, [0, 1, 3, 4].into_iter().collect());
        assert!(r.p_side.simple_root_residues.is_empty());
        assert_eq!(r.q_side.simple_root_residues, [1]);
        assert!(near_eisenstein_analysis(9).is_err());
    }

    #[test]
    fn fujiwara_bounds_roots() {
        // (x + 7)(x - 3)(x + 20)
        let f = &(&Polynomial::from_i64(&[7, 1]) * &Polynomial::from_i64(&[-3, 1]))
            * &Polynomial::from_i64(&[20, 1]);
        assert!(fujiwara_bound(&f) >= BigInt::from(20));
    }

    #[test]
    fn prime_gap_examples() {
        assert!(verify_prime_gap(21, 1000).unwrap().failures.is_empty());
        assert_eq!(verify_prime_gap(20, 20).unwrap().failures, [20]);
        assert!(verify_prime_gap(95, 95).unwrap().failures.is_empty());
        assert!(verify_prime_gap(2, 20).unwrap().failures.contains(&20));
        assert!(verify_prime_gap(1, 5).is_err());
    }

    #[test]
    fn square_class_rules() {
        for m in 2..=24 {
            for family in [Family::P, Family::Q] {
                let f = match family {
                    Family::P => pade_p(m, m + 1),
                    _ => pade_q(m, m + 1),
                };
                let rule = diagonal_square_class_rule(family, m).unwrap();
                assert!(
                    rule.matches(&disc_square_class(&f).unwrap()),
                    "{family} m={m}"
                );
            }
        }
    }
}
