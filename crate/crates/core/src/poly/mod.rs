//! Dense univariate polynomials with exact integer coefficients.

mod modp;
mod resultant;

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::numeric::Rational;

pub use modp::{FactorizationModP, ModPolynomial, RootModP, DEFAULT_SEED};
pub use resultant::{discriminant, resultant};

/// Products with both operands at or above this many terms use Karatsuba.
const KARATSUBA_THRESHOLD: usize = 32;

/// Coefficients are ascending: index `j` holds the coefficient of `x^j`. No
/// trailing zeros are stored, so the zero polynomial is empty.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    coeffs: Vec<BigInt>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::new(vec![c.into()])
    }

    /// `x^k`
    pub fn monomial(k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = BigInt::one();
        Polynomial { coeffs }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of `x^j`, zero past the degree.
    pub fn coeff(&self, j: usize) -> BigInt {
        self.coeffs.get(j).cloned().unwrap_or_default()
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn constant_term(&self) -> BigInt {
        self.coeff(0)
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(One::is_one)
    }

    /// Largest `k` with `x^k` dividing `self`; zero for the zero polynomial.
    pub fn order_at_zero(&self) -> usize {
        self.coeffs.iter().take_while(|c| c.is_zero()).count()
    }

    /// `f(-x)`: odd coefficients change sign.
    pub fn substitute_neg(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(j, c)| if j % 2 == 1 { -c } else { c.clone() })
            .collect();
        Polynomial { coeffs }
    }

    /// `f mod x^k`
    pub fn truncate(&self, k: usize) -> Self {
        Self::new(self.coeffs.iter().take(k).cloned().collect())
    }

    /// `f * g mod x^k`; inputs are truncated before multiplying.
    pub fn truncated_mul(&self, other: &Self, k: usize) -> Self {
        (&self.truncate(k) * &other.truncate(k)).truncate(k)
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(j, c)| c * BigInt::from(j))
                .collect(),
        )
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Divides every coefficient by `c`; the division must be exact.
    pub fn exact_div_scalar(&self, c: &BigInt) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .map(|a| {
                    let (q, r) = a.div_rem(c);
                    debug_assert!(r.is_zero(), "inexact scalar division");
                    q
                })
                .collect(),
        )
    }

    /// Nonnegative gcd of the coefficients.
    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c))
    }

    /// Shifts coefficients down by `k`, i.e. divides by `x^k` (exact only when
    /// `k` does not exceed [`Polynomial::order_at_zero`]).
    pub fn shift_down(&self, k: usize) -> Self {
        Self::new(self.coeffs.iter().skip(k).cloned().collect())
    }

    /// Multiplies by `x^k`.
    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Polynomial { coeffs }
    }

    pub fn evaluate(&self, x: &Rational) -> Rational {
        self.coeffs.iter().rev().fold(Rational::zero(), |acc, c| {
            acc * x + Rational::from_integer(c.clone())
        })
    }

    pub fn evaluate_int(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    /// Pseudo-remainder: `lc(g)^(deg f - deg g + 1) f mod g`.
    pub fn pseudo_rem(&self, g: &Self) -> Self {
        let dg = g.degree().expect("pseudo-division by zero");
        let Some(df) = self.degree() else {
            return Self::zero();
        };
        if df < dg {
            return self.clone();
        }
        let lc = g.leading().unwrap();
        let mut r = self.coeffs.clone();
        let mut applied = 0;
        for top in (dg..=df).rev() {
            let t = r[top].clone();
            for c in r.iter_mut().take(top + 1) {
                *c *= lc;
            }
            applied += 1;
            if !t.is_zero() {
                let shift = top - dg;
                for (i, gc) in g.coeffs.iter().enumerate() {
                    r[shift + i] -= &t * gc;
                }
            }
            debug_assert!(r[top].is_zero());
        }
        debug_assert_eq!(applied, df - dg + 1);
        Self::new(r)
    }

    pub fn is_negative_leading(&self) -> bool {
        self.leading().is_some_and(Signed::is_negative)
    }
}

fn add_slices(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let (long, short) = if a.len() >= b.len() { (a, b) } else { (b, a) };
    let mut out = long.to_vec();
    for (o, s) in out.iter_mut().zip(short) {
        *o += s;
    }
    out
}

fn schoolbook(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn karatsuba(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    if a.len() < KARATSUBA_THRESHOLD || b.len() < KARATSUBA_THRESHOLD {
        return schoolbook(a, b);
    }
    let half = a.len().max(b.len()) / 2;
    let (a0, a1) = a.split_at(half.min(a.len()));
    let (b0, b1) = b.split_at(half.min(b.len()));
    let z0 = karatsuba(a0, b0);
    let z2 = karatsuba(a1, b1);
    let z1 = karatsuba(&add_slices(a0, a1), &add_slices(b0, b1));
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, c) in z0.iter().enumerate() {
        out[i] += c;
        out[i + half] -= c;
    }
    for (i, c) in z2.iter().enumerate() {
        out[i + 2 * half] += c;
        out[i + half] -= c;
    }
    for (i, c) in z1.iter().enumerate() {
        out[i + half] += c;
    }
    out
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        Polynomial::new(add_slices(&self.coeffs, &rhs.coeffs))
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self + &(-rhs)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        Polynomial::new(karatsuba(&self.coeffs, &rhs.coeffs))
    }
}

macro_rules! forward_owned {
    ($($tr:ident $method:ident),*) => {$(
        impl $tr for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (j, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c.is_negative() { '-' } else { '+' })?;
            }
            first = false;
            let show_mag = j == 0 || !mag.is_one();
            if show_mag {
                write!(f, "{mag}")?;
            }
            match j {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{j}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::rational;
    use alloc::string::ToString;
    use proptest::prelude::*;

    fn p(c: &[i64]) -> Polynomial {
        Polynomial::from_i64(c)
    }

    #[test]
    fn arithmetic_examples() {
        assert_eq!(&p(&[3, 1]) * &p(&[-3, 1]), p(&[-9, 0, 1]));
        let f = p(&[1, 2, 3]);
        assert_eq!(&Polynomial::zero() + &f, f);
        assert_eq!(&p(&[2, 1]) * &p(&[2, -1]), p(&[4, 0, -1]));
        assert_eq!(&f - &f, Polynomial::zero());
    }

    #[test]
    fn substitute_neg_examples() {
        assert_eq!(p(&[6, -4, 1]).substitute_neg(), p(&[6, 4, 1]));
        assert_eq!(p(&[7]).substitute_neg(), p(&[7]));
    }

    #[test]
    fn truncated_mul_examples() {
        assert_eq!(p(&[2, 2, 1]).truncated_mul(&p(&[2, -1]), 3), p(&[4, 2]));
        let f = p(&[1, 2, 3, 4]);
        assert_eq!(f.truncated_mul(&p(&[1]), 2), p(&[1, 2]));
        assert_eq!(f.truncated_mul(&f, 0), Polynomial::zero());
    }

    #[test]
    fn evaluate_examples() {
        assert_eq!(p(&[3, 1]).evaluate(&rational(-3, 1)), rational(0, 1));
        assert_eq!(p(&[20, 8, 1]).evaluate(&rational(0, 1)), rational(20, 1));
        assert_eq!(p(&[2, 2, 1]).evaluate(&rational(1, 1)), rational(5, 1));
        assert_eq!(p(&[1, 2]).evaluate(&rational(1, 2)), rational(2, 1));
    }

    #[test]
    fn pseudo_rem_matches_definition() {
        let f = p(&[1, 0, 3, 5]);
        let g = p(&[2, 3]);
        // lc(g)^3 * f = q * g + r with r constant
        let r = f.pseudo_rem(&g);
        assert!(r.degree().unwrap_or(0) == 0);
        let root = rational(-2, 3);
        let lhs = f.evaluate(&root) * rational(27, 1);
        assert_eq!(lhs, r.evaluate(&root));
    }

    #[test]
    fn display() {
        assert_eq!(p(&[20, 8, 1]).to_string(), "x^2 + 8x + 20");
        assert_eq!(p(&[6, -4, -1]).to_string(), "-x^2 - 4x + 6");
        assert_eq!(Polynomial::zero().to_string(), "0");
    }

    fn poly_strategy(max_len: usize) -> impl Strategy<Value = Polynomial> {
        proptest::collection::vec(-1_000_000i64..1_000_000, 0..max_len).prop_map(|c| p(&c))
    }

    proptest! {
        #[test]
        fn karatsuba_matches_schoolbook(a in poly_strategy(90), b in poly_strategy(90)) {
            let fast = &a * &b;
            let slow = if a.is_zero() || b.is_zero() {
                Polynomial::zero()
            } else {
                Polynomial::new(schoolbook(a.coeffs(), b.coeffs()))
            };
            prop_assert_eq!(fast, slow);
        }

        #[test]
        fn substitute_neg_is_involution(a in poly_strategy(20)) {
            prop_assert_eq!(a.substitute_neg().substitute_neg(), a);
        }

        #[test]
        fn ring_laws(a in poly_strategy(12), b in poly_strategy(12), c in poly_strategy(12)) {
            prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
            prop_assert_eq!(&(&a - &b) + &b, a.clone());
            if let (Some(da), Some(db)) = (a.degree(), b.degree()) {
                prop_assert_eq!((&a * &b).degree(), Some(da + db));
            }
        }
    }
}
