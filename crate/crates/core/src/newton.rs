//! p-adic Newton polygons and what they say about factorizations.
//!
//! The polygon of `f = sum a_j x^j` at `p` is the lower convex hull of the
//! points `(j, v_p(a_j))` with `a_j != 0`. A segment of slope `-a/b` (lowest
//! terms) and horizontal length `l` accounts for `l` roots of valuation `a/b`,
//! and every irreducible factor over the p-adic field built from those roots
//! has degree divisible by `b`.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::numeric::{factor_biguint, is_prime, valuation_int, Rational};
use crate::poly::{ModPolynomial, Polynomial};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Segment {
    pub start: (usize, i64),
    pub end: (usize, i64),
}

impl Segment {
    pub fn length(&self) -> usize {
        self.end.0 - self.start.0
    }

    /// Rise over run; negative when valuations drop towards the leading term.
    pub fn slope(&self) -> Rational {
        Rational::new(
            BigInt::from(self.end.1 - self.start.1),
            BigInt::from(self.length()),
        )
    }

    /// Denominator `b` of the slope in lowest terms.
    pub fn denominator(&self) -> u64 {
        let rise = (self.end.1 - self.start.1).unsigned_abs();
        self.length() as u64 / rise.gcd(&(self.length() as u64))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NewtonPolygon {
    prime: u64,
    degree: usize,
    /// `(j, v_p(a_j))` for every nonzero coefficient.
    points: Vec<(usize, i64)>,
    vertices: Vec<(usize, i64)>,
}

// Twice the signed area of (o, a, b); positive for a counter-clockwise turn.
fn cross(o: (usize, i64), a: (usize, i64), b: (usize, i64)) -> i128 {
    let (ox, oy) = (o.0 as i128, o.1 as i128);
    (a.0 as i128 - ox) * (b.1 as i128 - oy) - (a.1 as i128 - oy) * (b.0 as i128 - ox)
}

impl NewtonPolygon {
    pub fn new(f: &Polynomial, p: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        let degree = f.degree().ok_or(Error::ZeroPolynomial)?;
        let points: Vec<(usize, i64)> = f
            .coeffs()
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(j, c)| (j, valuation_int(p, c).unwrap() as i64))
            .collect();
        // Monotone chain, lower half only; collinear points are dropped.
        let mut vertices: Vec<(usize, i64)> = Vec::new();
        for &pt in &points {
            while vertices.len() >= 2
                && cross(
                    vertices[vertices.len() - 2],
                    vertices[vertices.len() - 1],
                    pt,
                ) <= 0
            {
                vertices.pop();
            }
            vertices.push(pt);
        }
        Ok(NewtonPolygon {
            prime: p,
            degree,
            points,
            vertices,
        })
    }

    pub fn prime(&self) -> u64 {
        self.prime
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn points(&self) -> &[(usize, i64)] {
        &self.points
    }

    pub fn vertices(&self) -> &[(usize, i64)] {
        &self.vertices
    }

    pub fn segments(&self) -> Vec<Segment> {
        self.vertices
            .windows(2)
            .map(|w| Segment {
                start: w[0],
                end: w[1],
            })
            .collect()
    }

    /// Total length of the slope-zero segment.
    pub fn flatness(&self) -> usize {
        self.segments()
            .iter()
            .filter(|s| s.start.1 == s.end.1)
            .map(Segment::length)
            .sum()
    }

    /// Largest absolute slope; zero exactly when the polygon is trivial.
    pub fn steepness(&self) -> Rational {
        self.segments()
            .iter()
            .map(|s| s.slope().abs())
            .max()
            .unwrap_or_else(Rational::zero)
    }

    pub fn is_trivial(&self) -> bool {
        self.steepness().is_zero()
    }

    /// Indices attaining the minimal valuation.
    pub fn min_valuation_indices(&self) -> Vec<usize> {
        let min = self.points.iter().map(|pt| pt.1).min().unwrap_or(0);
        self.points
            .iter()
            .filter(|pt| pt.1 == min)
            .map(|pt| pt.0)
            .collect()
    }

    /// Order of vanishing at zero: the leftmost point's abscissa.
    pub fn order_at_zero(&self) -> usize {
        self.points.first().map_or(0, |pt| pt.0)
    }

    /// One segment from `(0, m)` to `(n, 0)` with `gcd(m, n) = 1`.
    pub fn is_eisenstein_dumas(&self) -> bool {
        match self.vertices.as_slice() {
            [(0, m), (n, 0)] => *m > 0 && (*m as u64).gcd(&(*n as u64)) == 1,
            _ => false,
        }
    }

    /// Every segment yields the degrees its local irreducible factors may take.
    pub fn degree_constraints(&self) -> Vec<SegmentDegreeConstraint> {
        self.segments()
            .into_iter()
            .map(|s| {
                let b = s.denominator() as usize;
                SegmentDegreeConstraint {
                    slope: s.slope(),
                    length: s.length(),
                    denominator: b as u64,
                    allowed: (1..=s.length() / b).map(|k| k * b).collect(),
                }
            })
            .collect()
    }

    /// Degrees of p-adic factors compatible with the segments: sums of
    /// multiples of each segment's denominator not exceeding its length.
    pub fn factor_degree_sums(&self) -> Vec<bool> {
        let mut reachable = vec![false; self.degree + 1];
        reachable[0] = true;
        // A zero root is its own linear factor over Q_p.
        let zero_part = self.order_at_zero();
        let mut parts: Vec<(usize, usize)> = Vec::new();
        if zero_part > 0 {
            parts.push((1, zero_part));
        }
        parts.extend(
            self.segments()
                .iter()
                .map(|s| (s.denominator() as usize, s.length())),
        );
        for (step, length) in parts {
            let mut next = reachable.clone();
            for base in 0..=self.degree {
                if !reachable[base] {
                    continue;
                }
                let mut add = step;
                while add <= length && base + add <= self.degree {
                    next[base + add] = true;
                    add += step;
                }
            }
            reachable = next;
        }
        reachable
    }
}

/// Slope `-a/b`, length `l`, and the admissible local factor degrees: the
/// positive multiples of `b` up to `l`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SegmentDegreeConstraint {
    pub slope: Rational,
    pub length: usize,
    pub denominator: u64,
    pub allowed: Vec<usize>,
}

pub fn newton_polygon(f: &Polynomial, p: u64) -> Result<NewtonPolygon> {
    NewtonPolygon::new(f, p)
}

pub fn local_degree_constraints(f: &Polynomial, p: u64) -> Result<Vec<SegmentDegreeConstraint>> {
    Ok(NewtonPolygon::new(f, p)?.degree_constraints())
}

pub fn flatness_steepness(f: &Polynomial, p: u64) -> Result<(usize, Rational)> {
    let np = NewtonPolygon::new(f, p)?;
    Ok((np.flatness(), np.steepness()))
}

pub fn eisenstein_dumas(f: &Polynomial, p: u64) -> bool {
    NewtonPolygon::new(f, p).is_ok_and(|np| np.is_eisenstein_dumas())
}

/// Primes at which the polygon of an integer polynomial can be non-trivial:
/// those dividing the constant or the leading coefficient. Ascending.
pub fn polygon_primes(f: &Polynomial) -> Result<Vec<u64>> {
    let lc = f.leading().ok_or(Error::ZeroPolynomial)?;
    let a0 = f.coeff(f.order_at_zero());
    let content = f.content();
    let mut primes = BTreeSet::new();
    for c in [&a0, lc] {
        let reduced = c / &content;
        for (q, _) in factor_biguint(reduced.magnitude()) {
            if let Some(q) = q.to_u64() {
                primes.insert(q);
            }
        }
    }
    Ok(primes.into_iter().collect())
}

/// lcm of the slope denominators over every prime. Only primes dividing the
/// content-free constant or leading coefficient can contribute.
pub fn newton_index(f: &Polynomial) -> Result<u64> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if f.constant_term().is_zero() {
        return Err(Error::VanishesAtZero);
    }
    let mut index = 1u64;
    for p in polygon_primes(f)? {
        for s in NewtonPolygon::new(f, p)?.segments() {
            index = index.lcm(&s.denominator());
        }
    }
    Ok(index)
}

/// How a prime constrains factor degrees in the sieve.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LocalRoute {
    /// `p` divides the discriminant or the leading coefficient: polygon
    /// segments.
    Newton,
    /// `p` is unramified: Hensel lifting preserves the factor degrees mod `p`.
    Frobenius,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocalDegrees {
    pub prime: u64,
    pub route: LocalRoute,
    /// Degrees of the irreducible local pieces (Frobenius route only).
    pub factor_degrees: Vec<usize>,
    /// `reachable[d]`: some product of local factors has degree `d`.
    pub reachable: Vec<bool>,
}

/// `p` is unramified for `f` when `p` misses the leading coefficient and
/// `f mod p` stays squarefree.
pub fn is_unramified(f: &Polynomial, p: u64) -> bool {
    let lc = f.leading().expect("nonzero polynomial");
    if crate::numeric::is_zero_mod(lc, p) {
        return false;
    }
    ModPolynomial::reduce(f, p).is_squarefree()
}

pub fn local_degrees(f: &Polynomial, p: u64) -> Result<LocalDegrees> {
    let n = f.degree().ok_or(Error::ZeroPolynomial)?;
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if is_unramified(f, p) {
        let degrees = ModPolynomial::reduce(f, p).factor_degrees();
        let mut reachable = vec![false; n + 1];
        reachable[0] = true;
        for &d in &degrees {
            for base in (0..=n - d).rev() {
                if reachable[base] {
                    reachable[base + d] = true;
                }
            }
        }
        Ok(LocalDegrees {
            prime: p,
            route: LocalRoute::Frobenius,
            factor_degrees: degrees,
            reachable,
        })
    } else {
        Ok(LocalDegrees {
            prime: p,
            route: LocalRoute::Newton,
            factor_degrees: Vec::new(),
            reachable: NewtonPolygon::new(f, p)?.factor_degree_sums(),
        })
    }
}

/// Squarefree over Q. A squarefree reduction at some prime not dividing the
/// leading coefficient settles it; otherwise fall back to the discriminant.
pub fn is_squarefree(f: &Polynomial) -> bool {
    match f.degree() {
        None => return false,
        Some(0) => return true,
        _ => {}
    }
    let lc = f.leading().unwrap();
    for &p in crate::numeric::PrimeTable::new(600).primes() {
        if !crate::numeric::is_zero_mod(lc, p) && ModPolynomial::reduce(f, p).is_squarefree() {
            return true;
        }
    }
    !crate::poly::discriminant(f).unwrap().is_zero()
}

/// Degrees `d` such that a factor of degree `d` over Q is compatible with the
/// local factorization at every listed prime. Contains `0` and `deg f` and is
/// symmetric under `d -> deg f - d`; `{0, deg f}` proves irreducibility.
pub fn possible_factor_degrees(f: &Polynomial, primes: &[u64]) -> Result<BTreeSet<usize>> {
    let n = f.degree().ok_or(Error::ZeroPolynomial)?;
    if !is_squarefree(f) {
        return Err(Error::NotSquarefree);
    }
    let mut alive = vec![true; n + 1];
    for &p in primes {
        let local = local_degrees(f, p)?;
        for (a, r) in alive.iter_mut().zip(&local.reachable) {
            *a &= *r;
        }
    }
    Ok((0..=n).filter(|&d| alive[d]).collect())
}

/// An open interval `(lower, upper)` of degrees that no p-adic factor of `f`
/// can have.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExclusionInterval {
    pub lower: usize,
    pub upper: Rational,
}

impl ExclusionInterval {
    pub fn contains(&self, d: usize) -> bool {
        let d = Rational::from_integer(d.into());
        Rational::from_integer(self.lower.into()) < d && d < self.upper
    }
}

/// Degree exclusion for nearly Eisenstein polynomials.
///
/// `upper = 1/mu` where `mu` is the absolute slope of the last non-horizontal
/// segment (the one nearest the leading coefficient), and `lower` is the larger
/// of `n - l` (with `l` that segment's length) and `n - 1 - J`, where `J` is the
/// largest index with `v_p(a_i) > 0` for all `i <= J`. Any factor of degree
/// above `n - l` must take a root from that segment, hence at least `b >= 1/mu`
/// of them. `None` when the polygon is trivial.
pub fn degree_exclusion_interval(f: &Polynomial, p: u64) -> Result<Option<ExclusionInterval>> {
    let np = NewtonPolygon::new(f, p)?;
    let n = np.degree();
    if np.vertices().last().map(|v| v.1) != Some(0) {
        return Err(Error::NotMonicAt(p));
    }
    let Some(segment) = np
        .segments()
        .into_iter()
        .rev()
        .find(|s| s.start.1 != s.end.1)
    else {
        return Ok(None);
    };
    let positive_prefix = f
        .coeffs()
        .iter()
        .take_while(|c| c.is_zero() || valuation_int(p, c).unwrap() > 0)
        .count();
    // n - 1 - J with J = positive_prefix - 1
    let prefix_bound = n - positive_prefix.min(n);
    let lower = prefix_bound.max(n - segment.length());
    let upper = segment.slope().abs().recip();
    Ok(Some(ExclusionInterval { lower, upper }))
}
