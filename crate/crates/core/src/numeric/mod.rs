//! Integer and rational kernels: p-adic valuations, digit expansions,
//! square classes and prime utilities.

mod factor;
mod primes;

use alloc::vec::Vec;
use core::fmt;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub use factor::{factor_biguint, factor_small, TRIAL_DIVISION_BOUND};
pub(crate) use primes::is_zero_mod;
pub use primes::{is_prime, primes_in_interval, PrimeTable};

/// Exact rationals; always normalized with a positive denominator.
pub type Rational = num_rational::BigRational;

pub fn rational(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int_rational(n: impl Into<BigInt>) -> Rational {
    Rational::from_integer(n.into())
}

/// Exponent of `p` in a nonzero integer.
pub fn valuation_int(p: u64, x: &BigInt) -> Result<u64> {
    if x.is_zero() {
        return Err(Error::ValuationOfZero);
    }
    Ok(valuation_uint(p, x.magnitude()))
}

pub(crate) fn valuation_uint(p: u64, x: &BigUint) -> u64 {
    debug_assert!(!x.is_zero());
    // Strip p^k for the largest k with p^k < 2^64 first, then finish digit by digit.
    let mut chunk = 1u64;
    let mut chunk_exp = 0u64;
    while let Some(next) = chunk.checked_mul(p) {
        chunk = next;
        chunk_exp += 1;
    }
    let chunk = BigUint::from(chunk);
    let pb = BigUint::from(p);
    let mut rest = x.clone();
    let mut v = 0u64;
    loop {
        let (q, r) = rest.div_rem(&chunk);
        if !r.is_zero() {
            break;
        }
        rest = q;
        v += chunk_exp;
    }
    loop {
        let (q, r) = rest.div_rem(&pb);
        if !r.is_zero() {
            return v;
        }
        rest = q;
        v += 1;
    }
}

/// `v_p(x)` for a nonzero rational.
pub fn valuation(p: u64, x: &Rational) -> Result<i64> {
    if x.is_zero() {
        return Err(Error::ValuationOfZero);
    }
    let num = valuation_uint(p, x.numer().magnitude()) as i64;
    let den = valuation_uint(p, x.denom().magnitude()) as i64;
    Ok(num - den)
}

/// Legendre's formula, `v_p(m!) = (m - S_p(m)) / (p - 1)`.
pub fn factorial_valuation(p: u64, m: u64) -> u64 {
    let digits = base_digits(p, m);
    (m - digits.digit_sum()) / (p - 1)
}

/// Little-endian base-`p` digits of a nonnegative integer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DigitExpansion {
    pub prime: u64,
    pub digits: Vec<u64>,
}

impl DigitExpansion {
    pub fn digit_sum(&self) -> u64 {
        self.digits.iter().sum()
    }

    pub fn value(&self) -> u64 {
        self.digits
            .iter()
            .rev()
            .fold(0, |acc, &d| acc * self.prime + d)
    }
}

pub fn base_digits(p: u64, mut m: u64) -> DigitExpansion {
    let mut digits = Vec::new();
    while m > 0 {
        digits.push(m % p);
        m /= p;
    }
    DigitExpansion { prime: p, digits }
}

/// The class of a nonzero rational in `Q^x / Q^x^2`, represented by the unique
/// squarefree integer in it.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SquareClass {
    representative: BigInt,
}

impl SquareClass {
    /// Builds a class from its parts: a sign and the odd-exponent primes.
    pub fn from_odd_primes(negative: bool, primes: impl IntoIterator<Item = BigUint>) -> Self {
        let magnitude = primes.into_iter().fold(BigUint::one(), |acc, p| acc * p);
        let sign = if negative { Sign::Minus } else { Sign::Plus };
        SquareClass {
            representative: BigInt::from_biguint(sign, magnitude),
        }
    }

    pub fn representative(&self) -> &BigInt {
        &self.representative
    }

    pub fn is_square(&self) -> bool {
        self.representative.is_one()
    }
}

impl fmt::Display for SquareClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.representative)
    }
}

/// Square class of a nonzero rational. Factors `|numerator| * denominator` by
/// trial division with a Pollard-rho fallback.
pub fn squarefree_part(x: &Rational) -> Result<SquareClass> {
    if x.is_zero() {
        return Err(Error::SquareClassOfZero);
    }
    let product = x.numer().magnitude() * x.denom().magnitude();
    let odd = factor_biguint(&product)
        .into_iter()
        .filter(|(_, e)| e % 2 == 1)
        .map(|(p, _)| p);
    Ok(SquareClass::from_odd_primes(x.is_negative(), odd))
}

pub fn squarefree_part_int(x: &BigInt) -> Result<SquareClass> {
    squarefree_part(&Rational::from_integer(x.clone()))
}
