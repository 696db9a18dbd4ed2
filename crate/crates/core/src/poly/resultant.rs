use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Pow, Zero};

use super::Polynomial;
use crate::error::{Error, Result};

fn pow(b: &BigInt, e: usize) -> BigInt {
    Pow::pow(b, e)
}

fn exact_div(a: &BigInt, b: &BigInt) -> BigInt {
    let (q, r) = a.div_rem(b);
    debug_assert!(r.is_zero(), "inexact division in subresultant PRS");
    q
}

/// Resultant of two integer polynomials by the subresultant PRS. Every
/// division in the sequence is exact, so all intermediate values stay integral.
pub fn resultant(f: &Polynomial, g: &Polynomial) -> BigInt {
    let (Some(_), Some(_)) = (f.degree(), g.degree()) else {
        return BigInt::zero();
    };
    let content_f = f.content();
    let content_g = g.content();
    let mut a = f.exact_div_scalar(&content_f);
    let mut b = g.exact_div_scalar(&content_g);
    let t = pow(&content_f, b.degree().unwrap()) * pow(&content_g, a.degree().unwrap());
    let mut sign_negative = false;
    if a.degree() < b.degree() {
        core::mem::swap(&mut a, &mut b);
        if a.degree().unwrap() % 2 == 1 && b.degree().unwrap() % 2 == 1 {
            sign_negative = true;
        }
    }
    let mut g_acc = BigInt::one();
    let mut h = BigInt::one();
    while b.degree().unwrap() > 0 {
        let da = a.degree().unwrap();
        let db = b.degree().unwrap();
        let delta = da - db;
        if da % 2 == 1 && db % 2 == 1 {
            sign_negative = !sign_negative;
        }
        let r = a.pseudo_rem(&b);
        if r.is_zero() {
            return BigInt::zero();
        }
        a = b;
        b = r.exact_div_scalar(&(&g_acc * pow(&h, delta)));
        g_acc = a.leading().unwrap().clone();
        h = match delta {
            0 => h,
            _ => exact_div(&pow(&g_acc, delta), &pow(&h, delta - 1)),
        };
    }
    let da = a.degree().unwrap();
    let lb = b.leading().unwrap();
    let h = if da == 0 {
        h
    } else {
        exact_div(&pow(lb, da), &pow(&h, da - 1))
    };
    let out = t * h;
    if sign_negative {
        -out
    } else {
        out
    }
}

/// `(-1)^(n(n-1)/2) Res(f, f') / lc(f)`; degree-one polynomials have
/// discriminant 1.
pub fn discriminant(f: &Polynomial) -> Result<BigInt> {
    let n = f.degree().ok_or(Error::ZeroPolynomial)?;
    if n == 0 {
        return Err(Error::ConstantPolynomial);
    }
    if n == 1 {
        return Ok(BigInt::one());
    }
    let res = resultant(f, &f.derivative());
    let d = exact_div(&res, f.leading().unwrap());
    Ok(if (n * (n - 1) / 2) % 2 == 1 { -d } else { d })
}
