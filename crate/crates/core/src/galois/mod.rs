//! Galois group certificates: irreducibility, containment of `A_n`, and the
//! discriminant square class deciding between `A_n` and `S_n`.

mod groups;
mod verify;

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};
use crate::families::{Family, FamilySpec};
use crate::newton::{
    eisenstein_dumas, is_squarefree, is_unramified, local_degrees, newton_index, polygon_primes,
};
use crate::numeric::{is_prime, squarefree_part_int, PrimeTable, SquareClass};
use crate::poly::{discriminant, ModPolynomial, Polynomial};

pub use groups::{cycle_type, transitive_groups, CycleType, TransitiveGroup};
pub use verify::{
    diagonal_square_class_rule, fujiwara_bound, near_eisenstein_analysis,
    near_eisenstein_analysis_seeded, verify_eisenstein_theorem, verify_prime_gap, EisensteinReport,
    NearEisensteinOutcome, NearEisensteinReport, NearEisensteinSide, PrimeGapReport, Side,
    SquareClassRule,
};

/// Number of unramified primes the degree sieve visits.
pub const SIEVE_UNRAMIFIED_PRIMES: usize = 25;
/// Frobenius sampling for `A_n` containment stops at this prime.
pub const DEDEKIND_PRIME_BOUND: u64 = 10_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GroupKind {
    Alternating,
    Symmetric,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupTag {
    pub kind: GroupKind,
    pub degree: u64,
}

impl GroupTag {
    pub fn alternating(degree: u64) -> Self {
        GroupTag {
            kind: GroupKind::Alternating,
            degree,
        }
    }

    pub fn symmetric(degree: u64) -> Self {
        GroupTag {
            kind: GroupKind::Symmetric,
            degree,
        }
    }

    pub fn order(&self) -> BigUint {
        let full = (2..=self.degree).fold(BigUint::one(), |acc, k| acc * k);
        match self.kind {
            GroupKind::Symmetric => full,
            GroupKind::Alternating if self.degree >= 2 => full / 2u32,
            GroupKind::Alternating => full,
        }
    }
}

impl fmt::Display for GroupTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let letter = match self.kind {
            GroupKind::Alternating => 'A',
            GroupKind::Symmetric => 'S',
        };
        write!(f, "{letter}_{}", self.degree)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IrreducibilityEvidence {
    EisensteinDumas {
        prime: u64,
    },
    /// Every degree other than `0` and `n` was ruled out by these primes.
    DegreeSieve {
        primes: Vec<u64>,
        surviving: Vec<usize>,
    },
    /// Irreducibility taken from a published theorem rather than computed.
    Literature {
        citation: &'static str,
    },
    None,
}

impl IrreducibilityEvidence {
    pub fn kind(&self) -> &'static str {
        match self {
            IrreducibilityEvidence::EisensteinDumas { .. } => "EISENSTEIN_DUMAS",
            IrreducibilityEvidence::DegreeSieve { .. } => "DEGREE_SIEVE",
            IrreducibilityEvidence::Literature { .. } => "LITERATURE",
            IrreducibilityEvidence::None => "NONE",
        }
    }

    pub fn is_none(&self) -> bool {
        matches!(self, IrreducibilityEvidence::None)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AnEvidence {
    /// A prime `q` in `(n/2, n-2)` divides the Newton index, so the group
    /// holds a `q`-cycle.
    NewtonIndexPrime {
        q: u64,
        newton_index: u64,
    },
    /// Frobenius at `prime` has a single cycle of prime length `q` in
    /// `(n/2, n-2)`; a power of it is a `q`-cycle.
    DedekindCycle {
        prime: u64,
        degrees: Vec<usize>,
        q: u64,
    },
    /// Cycle types observed at `primes` (paired) rule out every transitive
    /// group of degree `n <= 7` that misses `A_n`.
    SmallDegreeExclusion {
        primes: Vec<u64>,
        cycle_types: Vec<CycleType>,
        eliminated: Vec<&'static str>,
    },
    /// `n <= 2`: `A_n` is trivial.
    Trivial,
    None,
}

impl AnEvidence {
    pub fn kind(&self) -> &'static str {
        match self {
            AnEvidence::NewtonIndexPrime { .. } => "NEWTON_INDEX_PRIME",
            AnEvidence::DedekindCycle { .. } => "DEDEKIND_CYCLE",
            AnEvidence::SmallDegreeExclusion { .. } => "SMALL_DEGREE_EXCLUSION",
            AnEvidence::Trivial => "TRIVIAL",
            AnEvidence::None => "NONE",
        }
    }

    pub fn is_none(&self) -> bool {
        matches!(self, AnEvidence::None)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Conclusion {
    Definite(GroupTag),
    /// The group would be this one if the cited irreducibility result holds.
    Conditional(GroupTag),
    Unresolved,
}

impl Conclusion {
    pub fn definite(&self) -> Option<GroupTag> {
        match self {
            Conclusion::Definite(tag) => Some(*tag),
            _ => None,
        }
    }

    pub fn group(&self) -> Option<GroupTag> {
        match self {
            Conclusion::Definite(tag) | Conclusion::Conditional(tag) => Some(*tag),
            Conclusion::Unresolved => None,
        }
    }
}

impl fmt::Display for Conclusion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Conclusion::Definite(tag) => write!(f, "{tag}"),
            Conclusion::Conditional(tag) => write!(f, "CONDITIONAL({tag})"),
            Conclusion::Unresolved => f.write_str("UNRESOLVED"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GaloisCertificate {
    pub spec: Option<FamilySpec>,
    pub degree: usize,
    pub irreducibility: IrreducibilityEvidence,
    pub an_containment: AnEvidence,
    pub square_class: SquareClass,
    pub newton_index: u64,
    pub conclusion: Conclusion,
}

/// Irreducibility results from the literature, keyed by family member.
pub fn literature_irreducibility(spec: &FamilySpec) -> Option<&'static str> {
    match *spec {
        FamilySpec::P { u, v } | FamilySpec::Q { u, v } if u == v => Some("FT Bessel"),
        FamilySpec::P { v: r, .. } | FamilySpec::Q { u: r, .. } if r <= 8 => Some("Hajir r<=8"),
        FamilySpec::Exp { .. } => Some("Hajir r<=8"),
        FamilySpec::ShiftedGlp { r, .. } if (0..=8).contains(&r) => Some("Hajir r<=8"),
        _ => None,
    }
}

fn check_certifiable(f: &Polynomial) -> Result<usize> {
    let n = f.degree().ok_or(Error::ZeroPolynomial)?;
    if n == 0 {
        return Err(Error::ConstantPolynomial);
    }
    if f.constant_term() == num_bigint::BigInt::default() {
        return Err(Error::VanishesAtZero);
    }
    if !is_squarefree(f) {
        return Err(Error::NotSquarefree);
    }
    Ok(n)
}

/// Eisenstein-Dumas at the primes dividing `f(0)`, then the degree sieve over
/// those primes and the first unramified ones, then the literature registry.
pub fn certify_irreducible(
    f: &Polynomial,
    spec: Option<&FamilySpec>,
) -> Result<IrreducibilityEvidence> {
    let n = check_certifiable(f)?;
    let a0 = f.constant_term();
    let bad = polygon_primes(f)?;
    for &p in &bad {
        if crate::numeric::is_zero_mod(&a0, p) && eisenstein_dumas(f, p) {
            return Ok(IrreducibilityEvidence::EisensteinDumas { prime: p });
        }
    }

    let mut alive: Vec<bool> = (0..=n).map(|_| true).collect();
    let mut used = Vec::new();
    let done = |alive: &[bool]| alive.iter().filter(|&&a| a).count() == 2;
    let mut sieve = |p: u64, alive: &mut Vec<bool>| -> Result<()> {
        let local = local_degrees(f, p)?;
        for (a, r) in alive.iter_mut().zip(&local.reachable) {
            *a &= *r;
        }
        used.push(p);
        Ok(())
    };
    if n > 1 {
        for &p in &bad {
            sieve(p, &mut alive)?;
            if done(&alive) {
                break;
            }
        }
        let mut unramified = 0;
        let mut candidate = 1u64;
        while !done(&alive) && unramified < SIEVE_UNRAMIFIED_PRIMES {
            candidate += 1;
            if !is_prime(candidate) || bad.contains(&candidate) || !is_unramified(f, candidate) {
                continue;
            }
            unramified += 1;
            sieve(candidate, &mut alive)?;
        }
    }
    if done(&alive) {
        return Ok(IrreducibilityEvidence::DegreeSieve {
            primes: used,
            surviving: alloc::vec![0, n],
        });
    }
    Ok(spec
        .and_then(literature_irreducibility)
        .map_or(IrreducibilityEvidence::None, |citation| {
            IrreducibilityEvidence::Literature { citation }
        }))
}

fn jordan_primes(n: usize) -> impl Iterator<Item = u64> {
    // n/2 < q < n - 2
    (n as u64 / 2 + 1..(n as u64).saturating_sub(2)).filter(|&q| is_prime(q))
}

fn unramified_frobenius(f: &Polynomial) -> impl Iterator<Item = (u64, Vec<usize>)> + '_ {
    PrimeTable::new(DEDEKIND_PRIME_BOUND)
        .primes()
        .to_vec()
        .into_iter()
        .filter(|&p| is_unramified(f, p))
        .map(|p| (p, ModPolynomial::reduce(f, p).factor_degrees()))
}

/// Evidence that the Galois group of an irreducible `f` contains `A_n`.
pub fn an_containment(f: &Polynomial, irr: &IrreducibilityEvidence) -> Result<AnEvidence> {
    let n = check_certifiable(f)?;
    if irr.is_none() {
        return Ok(AnEvidence::None);
    }
    if n <= 2 {
        return Ok(AnEvidence::Trivial);
    }
    let index = newton_index(f)?;
    if let Some(q) = jordan_primes(n).find(|q| index % q == 0) {
        return Ok(AnEvidence::NewtonIndexPrime {
            q,
            newton_index: index,
        });
    }
    if n >= 8 {
        for (p, degrees) in unramified_frobenius(f) {
            for q in jordan_primes(n) {
                let hits = degrees.iter().filter(|&&d| d as u64 == q).count();
                let others = degrees
                    .iter()
                    .filter(|&&d| (d as u64).is_multiple_of(q))
                    .count();
                if hits == 1 && others == 1 {
                    return Ok(AnEvidence::DedekindCycle {
                        prime: p,
                        degrees,
                        q,
                    });
                }
            }
        }
        return Ok(AnEvidence::None);
    }
    let mut candidates: Vec<TransitiveGroup> = transitive_groups(n)
        .into_iter()
        .filter(|g| !g.contains_alternating())
        .collect();
    let mut primes = Vec::new();
    let mut cycle_types = Vec::new();
    let mut eliminated = Vec::new();
    if !candidates.is_empty() {
        for (p, mut degrees) in unramified_frobenius(f) {
            degrees.reverse();
            let before = candidates.len();
            candidates.retain(|g| {
                let keep = g.cycle_types.contains(&degrees);
                if !keep {
                    eliminated.push(g.name);
                }
                keep
            });
            if candidates.len() < before {
                primes.push(p);
                cycle_types.push(degrees);
            }
            if candidates.is_empty() {
                break;
            }
        }
    }
    if !candidates.is_empty() {
        return Ok(AnEvidence::None);
    }
    Ok(AnEvidence::SmallDegreeExclusion {
        primes,
        cycle_types,
        eliminated,
    })
}

/// Square class of the discriminant, computed from the resultant.
pub fn disc_square_class(f: &Polynomial) -> Result<SquareClass> {
    let d = discriminant(f)?;
    squarefree_part_int(&d).map_err(|_| Error::NotSquarefree)
}

/// Runs the full pipeline on `f`. When `spec` has a closed-form discriminant
/// its square class is used instead of a resultant.
pub fn certify_polynomial(f: &Polynomial, spec: Option<&FamilySpec>) -> Result<GaloisCertificate> {
    let n = check_certifiable(f)?;
    let irreducibility = certify_irreducible(f, spec)?;
    let an = an_containment(f, &irreducibility)?;
    let square_class = match spec.and_then(FamilySpec::closed_form_square_class) {
        Some(class) => class,
        None => disc_square_class(f)?,
    };
    let tag = if square_class.is_square() {
        GroupTag::alternating(n as u64)
    } else {
        GroupTag::symmetric(n as u64)
    };
    let conclusion = match (&irreducibility, &an) {
        (IrreducibilityEvidence::None, _) | (_, AnEvidence::None) => Conclusion::Unresolved,
        (IrreducibilityEvidence::Literature { .. }, _) => Conclusion::Conditional(tag),
        _ => Conclusion::Definite(tag),
    };
    Ok(GaloisCertificate {
        spec: spec.cloned(),
        degree: n,
        irreducibility,
        an_containment: an,
        square_class,
        newton_index: newton_index(f)?,
        conclusion,
    })
}

pub fn certify_galois(spec: &FamilySpec) -> Result<GaloisCertificate> {
    certify_polynomial(&spec.polynomial()?, Some(spec))
}

fn is_odd_square(x: u64) -> bool {
    let s = x.isqrt();
    s * s == x && s % 2 == 1
}

/// The group predicted for the diagonal approximants `P(m, m+delta)` and
/// `Q(m, m+delta)` by arithmetic on `m` alone.
pub fn classify_diagonal(m: u64, delta: u8, family: Family) -> Result<GroupTag> {
    if m == 0 || delta > 1 {
        return Err(Error::InvalidParameters(format!(
            "need m >= 1 and delta in {{0, 1}}, got m = {m}, delta = {delta}"
        )));
    }
    let alternating = match (family, delta) {
        (Family::P | Family::Q, 0) => false,
        // m = 0 mod 4 or m + 1 = 2 s^2 with s odd
        (Family::P, _) => {
            m.is_multiple_of(4) || ((m + 1).is_multiple_of(2) && is_odd_square(m.div_ceil(2)))
        }
        // m + 1 = s^2 with s odd and s >= 3
        (Family::Q, _) => m >= 8 && is_odd_square(m + 1),
        (other, _) => {
            return Err(Error::InvalidParameters(format!(
                "no diagonal classification for family {other}"
            )));
        }
    };
    let degree = match family {
        Family::Q => m + u64::from(delta),
        _ => m,
    };
    Ok(GroupTag {
        kind: if alternating {
            GroupKind::Alternating
        } else {
            GroupKind::Symmetric
        },
        degree,
    })
}

/// Distinct sorted cycle types observed at unramified primes up to `bound`.
pub fn observed_cycle_types(f: &Polynomial, bound: u64) -> BTreeSet<CycleType> {
    PrimeTable::new(bound)
        .primes()
        .iter()
        .filter(|&&p| is_unramified(f, p))
        .map(|&p| {
            let mut d = ModPolynomial::reduce(f, p).factor_degrees();
            d.reverse();
            d
        })
        .collect()
}
