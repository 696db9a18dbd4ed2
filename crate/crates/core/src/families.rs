//! Constructors for the truncated exponential, the Padé approximants
//! `P(u,v,x)`, `Q(u,v,x)`, and the (shifted) generalized Laguerre polynomials,
//! together with the identities and congruences that tie them together.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::numeric::{factor_small, Rational, SquareClass};
use crate::poly::{ModPolynomial, Polynomial};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    P,
    Q,
    Exp,
    Glp,
    ShiftedGlp,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::P => "P",
            Family::Q => "Q",
            Family::Exp => "e",
            Family::Glp => "GLP",
            Family::ShiftedGlp => "L",
        })
    }
}

/// Which member of which family a polynomial is.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum FamilySpec {
    /// `P(u,v,x)`, degree `u`.
    P { u: u64, v: u64 },
    /// `Q(u,v,x)`, degree `v`.
    Q { u: u64, v: u64 },
    /// `e_n(x) = n! sum x^j / j!`
    Exp { n: u64 },
    /// `L_n^(alpha)(x)`, cleared to a primitive integer polynomial.
    Glp { n: u64, alpha: Rational },
    /// `n! L_n^(-1-n-r)(x)`
    ShiftedGlp { n: u64, r: i64 },
}

impl FamilySpec {
    /// The diagonal approximants `P(m, m+delta)` or `Q(m, m+delta)`.
    pub fn diagonal(family: Family, m: u64, delta: u8) -> Result<Self> {
        let v = m + u64::from(delta);
        match family {
            Family::P => Ok(FamilySpec::P { u: m, v }),
            Family::Q => Ok(FamilySpec::Q { u: m, v }),
            other => Err(Error::InvalidParameters(format!(
                "diagonal approximants are P or Q, not {other}"
            ))),
        }
    }

    pub fn family(&self) -> Family {
        match self {
            FamilySpec::P { .. } => Family::P,
            FamilySpec::Q { .. } => Family::Q,
            FamilySpec::Exp { .. } => Family::Exp,
            FamilySpec::Glp { .. } => Family::Glp,
            FamilySpec::ShiftedGlp { .. } => Family::ShiftedGlp,
        }
    }

    pub fn degree(&self) -> u64 {
        match *self {
            FamilySpec::P { u, .. } => u,
            FamilySpec::Q { v, .. } => v,
            FamilySpec::Exp { n }
            | FamilySpec::Glp { n, .. }
            | FamilySpec::ShiftedGlp { n, .. } => n,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: &str| Err(Error::InvalidParameters(msg.into()));
        match *self {
            FamilySpec::P { u, v } | FamilySpec::Q { u, v } if u + v == 0 => {
                bad("u + v must be at least 1")
            }
            FamilySpec::Exp { n: 0 } => bad("e_0 is the degenerate constant 1"),
            FamilySpec::Glp { n: 0, .. } | FamilySpec::ShiftedGlp { n: 0, .. } => {
                bad("n must be at least 1")
            }
            _ => Ok(()),
        }
    }

    pub fn polynomial(&self) -> Result<Polynomial> {
        self.validate()?;
        Ok(match self {
            FamilySpec::P { u, v } => pade_p(*u, *v),
            FamilySpec::Q { u, v } => pade_q(*u, *v),
            FamilySpec::Exp { n } => exp_poly(*n),
            FamilySpec::Glp { n, alpha } => glp(*n, alpha).primitive_integral(),
            FamilySpec::ShiftedGlp { n, r } => shifted_glp(*n, *r),
        })
    }

    /// `(n, r)` such that the polynomial is `L_n^<r>(+-x)` with `r >= 0`, when
    /// it is one. Discriminants and square classes then have closed forms.
    pub fn shifted_parameters(&self) -> Option<(u64, u64)> {
        match *self {
            FamilySpec::P { u, v } if u >= 1 => Some((u, v)),
            FamilySpec::Q { u, v } if v >= 1 => Some((v, u)),
            FamilySpec::Exp { n } if n >= 1 => Some((n, 0)),
            FamilySpec::ShiftedGlp { n, r } if n >= 1 && r >= 0 => Some((n, r as u64)),
            _ => None,
        }
    }

    pub fn closed_form_discriminant(&self) -> Option<BigInt> {
        self.shifted_parameters()
            .map(|(n, r)| closed_form_disc(n, r))
    }

    pub fn closed_form_square_class(&self) -> Option<SquareClass> {
        self.shifted_parameters()
            .map(|(n, r)| closed_form_square_class(n, r))
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::P { u, v } => write!(f, "P({u},{v},x)"),
            FamilySpec::Q { u, v } => write!(f, "Q({u},{v},x)"),
            FamilySpec::Exp { n } => write!(f, "e_{n}(x)"),
            FamilySpec::Glp { n, alpha } => write!(f, "L_{n}^({alpha})(x)"),
            FamilySpec::ShiftedGlp { n, r } => write!(f, "L_{n}^<{r}>(x)"),
        }
    }
}

fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

/// `b!/a!` for `a <= b`.
fn falling_ratio(b: u64, a: u64) -> BigInt {
    (a + 1..=b).fold(BigInt::one(), |acc, k| acc * k)
}

/// Row `n` of Pascal's triangle.
fn binomial_row(n: u64) -> Vec<BigInt> {
    let mut row = Vec::with_capacity(n as usize + 1);
    let mut c = BigInt::one();
    row.push(c.clone());
    for k in 0..n {
        c = c * (n - k) / (k + 1);
        row.push(c.clone());
    }
    row
}

/// `e_n(x)`: monic of degree `n`, coefficient `j` equal to `n!/j!`. For
/// `n = 0` this is the degenerate constant 1.
pub fn exp_poly(n: u64) -> Polynomial {
    let mut coeffs = Vec::with_capacity(n as usize + 1);
    let mut c = BigInt::one();
    // n!/j! built from the top: n!/n! = 1, n!/(n-1)! = n, ...
    for j in (0..=n).rev() {
        coeffs.push(c.clone());
        c *= j;
    }
    coeffs.reverse();
    Polynomial::new(coeffs)
}

/// `P(u,v,x) = sum_{j<=u} (u+v-j)!/v! * C(u,j) x^j`
pub fn pade_p(u: u64, v: u64) -> Polynomial {
    let binom = binomial_row(u);
    let coeffs = (0..=u)
        .map(|j| falling_ratio(u + v - j, v) * &binom[j as usize])
        .collect();
    Polynomial::new(coeffs)
}

/// `Q(u,v,x) = sum_{j<=v} (u+v-j)!/u! * C(v,j) (-x)^j`
pub fn pade_q(u: u64, v: u64) -> Polynomial {
    let binom = binomial_row(v);
    let coeffs = (0..=v)
        .map(|j| {
            let c = falling_ratio(u + v - j, u) * &binom[j as usize];
            if j % 2 == 1 {
                -c
            } else {
                c
            }
        })
        .collect();
    Polynomial::new(coeffs)
}

/// Both approximants of `e_n` for the pair `(u, v)`.
pub fn pade_pair(u: u64, v: u64) -> Result<(Polynomial, Polynomial)> {
    if u + v == 0 {
        return Err(Error::InvalidParameters("u + v must be at least 1".into()));
    }
    Ok((pade_p(u, v), pade_q(u, v)))
}

/// A polynomial with rational coefficients, ascending.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalPolynomial {
    coeffs: Vec<Rational>,
}

impl RationalPolynomial {
    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn scale(&self, c: &Rational) -> Self {
        RationalPolynomial {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// `Some` when every coefficient is an integer.
    pub fn to_integral(&self) -> Option<Polynomial> {
        self.coeffs
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect::<Option<Vec<_>>>()
            .map(Polynomial::new)
    }

    /// The primitive integer polynomial with positive leading coefficient that
    /// is a rational multiple of `self`.
    pub fn primitive_integral(&self) -> Polynomial {
        use num_integer::Integer;
        let lcm = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let cleared = self
            .scale(&Rational::from_integer(lcm))
            .to_integral()
            .unwrap();
        let mut content = cleared.content();
        if cleared.is_negative_leading() {
            content = -content;
        }
        if content.is_zero() {
            return cleared;
        }
        cleared.exact_div_scalar(&content)
    }
}

/// Generalized binomial `C(a, k)` for rational `a`.
fn rational_binomial(a: &Rational, k: u64) -> Rational {
    let mut acc = Rational::one();
    for i in 0..k {
        acc = acc * (a - Rational::from_integer(i.into())) / Rational::from_integer((i + 1).into());
    }
    acc
}

/// `L_n^(alpha)(x) = (-1)^n sum_j C(n+alpha, n-j) (-x)^j / j!`; leading
/// coefficient `1/n!`.
pub fn glp(n: u64, alpha: &Rational) -> RationalPolynomial {
    let top = Rational::from_integer(n.into()) + alpha;
    let coeffs = (0..=n)
        .map(|j| {
            let c = rational_binomial(&top, n - j) / Rational::from_integer(factorial(j));
            if (n + j) % 2 == 1 {
                -c
            } else {
                c
            }
        })
        .collect();
    RationalPolynomial { coeffs }
}

/// `L_n^<r>(x) = sum_j C(n,j) (r+1)(r+2)...(r+n-j) x^j`
pub fn shifted_glp(n: u64, r: i64) -> Polynomial {
    let binom = binomial_row(n);
    let coeffs = (0..=n)
        .map(|j| {
            let rising = (1..=(n - j) as i64).fold(BigInt::one(), |acc, k| acc * (r + k));
            rising * &binom[j as usize]
        })
        .collect();
    Polynomial::new(coeffs)
}

/// `disc L_n^<r> = (-1)^(n(n-1)/2) prod_{j=1}^n j^j prod_{j=1}^{n-1} (r+j)^(n-j)`.
///
/// The sign is `(-1)^(n(n-1)/2)`, not `(-1)^n`: at `(n, r) = (2, 3)` the
/// polynomial is `x^2 + 8x + 20` with discriminant `-16`.
pub fn closed_form_disc(n: u64, r: u64) -> BigInt {
    closed_form_disc_with_sign(n, r, (n * n.saturating_sub(1) / 2) % 2 == 1)
}

/// The same product with the sign `(-1)^n` in front instead; kept as a
/// negative control, it disagrees with the true discriminant.
pub fn closed_form_disc_alternate_sign(n: u64, r: u64) -> BigInt {
    closed_form_disc_with_sign(n, r, n % 2 == 1)
}

fn closed_form_disc_with_sign(n: u64, r: u64, negative: bool) -> BigInt {
    let mut acc = BigInt::one();
    for j in 1..=n {
        acc *= num_traits::pow(BigInt::from(j), j as usize);
    }
    for j in 1..n {
        acc *= num_traits::pow(BigInt::from(r + j), (n - j) as usize);
    }
    if negative {
        -acc
    } else {
        acc
    }
}

/// Square class of [`closed_form_disc`] computed from the exponent parities of
/// the product, without forming the (very large) discriminant.
pub fn closed_form_square_class(n: u64, r: u64) -> SquareClass {
    let mut parity: BTreeMap<u64, u64> = BTreeMap::new();
    let mut add = |base: u64, exp: u64| {
        if exp.is_multiple_of(2) {
            return;
        }
        for (q, e) in factor_small(base) {
            *parity.entry(q).or_default() += u64::from(e);
        }
    };
    for j in 1..=n {
        add(j, j);
    }
    for j in 1..n {
        add(r + j, n - j);
    }
    let negative = (n * n.saturating_sub(1) / 2) % 2 == 1;
    SquareClass::from_odd_primes(
        negative,
        parity
            .into_iter()
            .filter(|(_, e)| e % 2 == 1)
            .map(|(q, _)| BigUint::from(q)),
    )
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PadeIdentityReport {
    pub u: u64,
    pub v: u64,
    pub n: u64,
    /// `c` with `e_n Q(u,v) = c P(u,v) + O(x^(u+v+1))`.
    pub scalar: Rational,
    pub ok: bool,
}

/// Checks `e_n(x) Q(u,v,x) = c P(u,v,x) mod x^(u+v+1)` with
/// `c = e_n(0) Q(u,v,0) / P(u,v,0)`.
pub fn verify_pade_identity(u: u64, v: u64, n: u64) -> Result<PadeIdentityReport> {
    if n < u + v {
        return Err(Error::InvalidParameters(format!(
            "n = {n} is below u + v = {}",
            u + v
        )));
    }
    let (p, q) = pade_pair(u, v)?;
    let e = exp_poly(n);
    let k = (u + v + 1) as usize;
    let scalar = Rational::new(e.constant_term() * q.constant_term(), p.constant_term());
    let lhs = e.truncated_mul(&q, k);
    let scaled: Vec<Rational> = p
        .truncate(k)
        .coeffs()
        .iter()
        .map(|c| &scalar * Rational::from_integer(c.clone()))
        .collect();
    let ok = lhs.coeffs().len() == scaled.len()
        && lhs
            .coeffs()
            .iter()
            .zip(&scaled)
            .all(|(a, b)| Rational::from_integer(a.clone()) == *b);
    Ok(PadeIdentityReport {
        u,
        v,
        n,
        scalar,
        ok,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SchurCongruenceReport {
    pub family: Family,
    pub m: u64,
    pub delta: u8,
    pub prime: u64,
    /// `m = small + k p` with `0 <= small < p`.
    pub k: u64,
    pub small: u64,
    /// Unit `c` with `big = c x^(kp) small (mod p)`, in `[1, p)`.
    pub scalar: Option<u64>,
}

impl SchurCongruenceReport {
    pub fn ok(&self) -> bool {
        self.scalar.is_some()
    }

    /// The scalar as a residue in `(-p/2, p/2)`.
    pub fn signed_scalar(&self) -> Option<i64> {
        self.scalar.map(|c| {
            if c > self.prime / 2 {
                c as i64 - self.prime as i64
            } else {
                c as i64
            }
        })
    }
}

/// Checks `F(m, m+delta, x) = c x^(kp) F(u, u+delta, x) (mod p)` for `F` in
/// `{P, Q}`, writing `m = u + kp`. The congruences only hold up to a unit, so
/// the unit is searched for and reported.
pub fn schur_congruence_check(
    family: Family,
    m: u64,
    delta: u8,
    p: u64,
) -> Result<SchurCongruenceReport> {
    if !crate::numeric::is_prime(p) || p == 2 {
        return Err(Error::NotPrime(p));
    }
    if m == 0 || delta > 1 {
        return Err(Error::InvalidParameters(
            "need m >= 1 and delta in {0, 1}".into(),
        ));
    }
    let build = |a: u64| match family {
        Family::P => Ok(pade_p(a, a + u64::from(delta))),
        Family::Q => Ok(pade_q(a, a + u64::from(delta))),
        other => Err(Error::InvalidParameters(format!(
            "no congruence for family {other}"
        ))),
    };
    let small = m % p;
    let k = m / p;
    let big = ModPolynomial::reduce(&build(m)?, p);
    let reduced_small = ModPolynomial::reduce(&build(small)?, p).shift_up((k * p) as usize);
    let scalar = match (big.leading(), reduced_small.leading()) {
        (Some(a), Some(b)) if big.degree() == reduced_small.degree() => {
            // c = a / b, then verify coefficientwise
            let c = (1..p).find(|&c| c * b % p == a);
            c.filter(|&c| reduced_small.scale(c) == big)
        }
        _ => None,
    };
    Ok(SchurCongruenceReport {
        family,
        m,
        delta,
        prime: p,
        k,
        small,
        scalar,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::rational;
    use crate::poly::discriminant;
    use num_traits::Signed;

    fn p(c: &[i64]) -> Polynomial {
        Polynomial::from_i64(c)
    }

    #[test]
    fn exp_examples() {
        assert_eq!(exp_poly(2), p(&[2, 2, 1]));
        assert_eq!(exp_poly(3), p(&[6, 6, 3, 1]));
        assert_eq!(exp_poly(1), p(&[1, 1]));
        assert_eq!(exp_poly(0), p(&[1]));
        assert!(FamilySpec::Exp { n: 0 }.polynomial().is_err());
    }

    #[test]
    fn pade_examples() {
        let (pp, q) = pade_pair(1, 2).unwrap();
        assert_eq!(pp, p(&[3, 1]));
        assert_eq!(q, p(&[6, -4, 1]));
        assert_eq!(pade_p(4, 5), p(&[3024, 1344, 252, 24, 1]));
        assert_eq!(pade_p(2, 1), p(&[6, 4, 1]));
        assert_eq!(pade_p(2, 1), pade_q(1, 2).substitute_neg());
        assert_eq!(pade_q(3, 4), p(&[840, -480, 120, -16, 1]));
        assert!(pade_pair(0, 0).is_err());
    }

    #[test]
    fn pade_constant_terms() {
        for u in 0..12u64 {
            for v in 0..12u64 {
                if u + v == 0 {
                    continue;
                }
                let (pp, q) = pade_pair(u, v).unwrap();
                assert_eq!(pp.constant_term() * factorial(v), factorial(u + v));
                assert_eq!(q.constant_term() * factorial(u), factorial(u + v));
                assert!(pp.is_monic());
                let lc = if v % 2 == 1 { -1 } else { 1 };
                assert_eq!(*q.leading().unwrap(), BigInt::from(lc));
            }
        }
    }

    #[test]
    fn glp_examples() {
        let l1 = glp(1, &rational(5, 2));
        assert_eq!(l1.coeffs(), [rational(-7, 2), rational(1, 1)]);
        let l2 = glp(2, &rational(-6, 1)).scale(&rational(2, 1));
        assert_eq!(l2.to_integral().unwrap(), p(&[20, 8, 1]));
        assert_eq!(pade_p(2, 3), p(&[20, 8, 1]));
        assert_eq!(glp(1, &rational(-2, 1)).to_integral().unwrap(), exp_poly(1));
        assert_eq!(
            *glp(5, &rational(1, 3)).coeffs().last().unwrap(),
            rational(1, 120)
        );
    }

    #[test]
    fn shifted_glp_examples() {
        assert_eq!(shifted_glp(2, 1), p(&[6, 4, 1]));
        for n in 1..=10 {
            assert_eq!(shifted_glp(n, 0), exp_poly(n));
        }
        assert_eq!(shifted_glp(1, 7), p(&[8, 1]));
        assert_eq!(shifted_glp(1, -3), p(&[-2, 1]));
    }

    #[test]
    fn shifted_glp_matches_scaled_glp() {
        for n in 1..=8u64 {
            for r in -3..=6i64 {
                let alpha = rational(-1 - n as i64 - r, 1);
                let scaled = glp(n, &alpha).scale(&Rational::from_integer(factorial(n)));
                assert_eq!(
                    scaled.to_integral().unwrap(),
                    shifted_glp(n, r),
                    "n={n} r={r}"
                );
            }
        }
    }

    #[test]
    fn shifted_glp_structure() {
        for n in 1..=10u64 {
            let row = binomial_row(n);
            for r in 0..=10i64 {
                let f = shifted_glp(n, r);
                assert!(f.is_monic());
                for (j, c) in f.coeffs().iter().enumerate() {
                    assert!(c.is_positive());
                    assert!((c % &row[j]).is_zero());
                }
            }
        }
    }

    #[test]
    fn pade_as_shifted_glp() {
        for u in 0..=30u64 {
            for v in 0..=30u64 {
                if u + v == 0 {
                    continue;
                }
                assert_eq!(pade_p(u, v), pade_q(v, u).substitute_neg());
                if u >= 1 {
                    assert_eq!(pade_p(u, v), shifted_glp(u, v as i64));
                }
            }
        }
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(closed_form_disc(2, 3), BigInt::from(-16));
        assert_eq!(closed_form_disc_alternate_sign(2, 3), BigInt::from(16));
        assert_eq!(closed_form_disc(3, 4), BigInt::from(-16200));
        assert_eq!(closed_form_disc(1, 9), BigInt::one());
    }

    #[test]
    fn closed_form_matches_resultant() {
        for n in 1..=10u64 {
            for r in 0..=10u64 {
                let f = shifted_glp(n, r as i64);
                assert_eq!(
                    closed_form_disc(n, r),
                    discriminant(&f).unwrap(),
                    "n={n} r={r}"
                );
                let sq = crate::numeric::squarefree_part_int(&closed_form_disc(n, r)).unwrap();
                assert_eq!(closed_form_square_class(n, r), sq);
            }
        }
    }

    #[test]
    fn pade_identity_examples() {
        let r = verify_pade_identity(1, 2, 3).unwrap();
        assert_eq!(r.scalar, rational(12, 1));
        assert!(r.ok);
        let r = verify_pade_identity(1, 1, 2).unwrap();
        assert_eq!(r.scalar, rational(2, 1));
        assert!(r.ok);
        assert!(verify_pade_identity(4, 0, 6).unwrap().ok);
        assert_eq!(
            verify_pade_identity(3, 1, 5).unwrap().scalar,
            rational(20, 1)
        );
        assert!(verify_pade_identity(3, 3, 5).is_err());
    }

    #[test]
    fn pade_identity_fails_for_wrong_pair() {
        // swapping the approximants must break the identity
        let e = exp_poly(6);
        let (pp, q) = pade_pair(2, 3).unwrap();
        let lhs = e.truncated_mul(&pp, 6);
        let c = Rational::new(e.constant_term() * pp.constant_term(), q.constant_term());
        let rhs: Vec<Rational> = q
            .truncate(6)
            .coeffs()
            .iter()
            .map(|a| &c * Rational::from_integer(a.clone()))
            .collect();
        let lhs: Vec<Rational> = lhs
            .coeffs()
            .iter()
            .map(|a| Rational::from_integer(a.clone()))
            .collect();
        assert_ne!(lhs, rhs);
    }

    #[test]
    fn schur_examples() {
        let r = schur_congruence_check(Family::P, 4, 1, 3).unwrap();
        assert_eq!((r.k, r.small, r.scalar), (1, 1, Some(1)));
        let r = schur_congruence_check(Family::Q, 3, 1, 3).unwrap();
        assert_eq!(r.signed_scalar(), Some(-1));
        assert_eq!((r.k, r.small), (1, 0));
        let r = schur_congruence_check(Family::P, 2, 1, 3).unwrap();
        assert_eq!((r.k, r.small, r.scalar), (0, 2, Some(1)));
        assert!(schur_congruence_check(Family::P, 4, 1, 4).is_err());
    }
}
