//! Exact rational helpers on top of `num-rational`.

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint, Sign};
use num_prime::nt_funcs::factors;
use num_rational::BigRational;
use num_traits::{CheckedDiv, One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact rational number, always in lowest terms with a positive denominator.
pub type Rational = BigRational;

pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn checked_div(a: &Rational, b: &Rational) -> Result<Rational> {
    a.checked_div(b).ok_or(Error::DivisionByZero)
}

/// Parses `"p/q"` or a bare integer. Whitespace around the parts is ignored.
pub fn parse_rational(text: &str) -> Option<Rational> {
    let text = text.trim();
    match text.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                return None;
            }
            Some(Rational::new(n, d))
        }
        None => text.parse::<BigInt>().ok().map(Rational::from_integer),
    }
}

/// Exact square root of a nonnegative integer, if it has one.
pub fn exact_isqrt(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let r = n.sqrt();
    (&r * &r == *n).then_some(r)
}

/// Positive rational square root of `r`, or `None` when `r` is negative or
/// not a square. `0` maps to `0`.
pub fn rational_sqrt(r: &Rational) -> Option<Rational> {
    let num = exact_isqrt(r.numer())?;
    let den = exact_isqrt(r.denom())?;
    Some(Rational::new(num, den))
}

/// Prime factorization of a positive integer.
///
/// Any cofactor the factorizer gives up on is recorded as if it were prime;
/// callers using exponents of it still get a valid (if not minimal) answer.
pub fn factorize(n: &BigInt) -> BTreeMap<BigUint, usize> {
    let n = n.magnitude().clone();
    if n.is_zero() || n.is_one() {
        return BTreeMap::new();
    }
    let (found, rest) = factors(n, None);
    let mut out: BTreeMap<BigUint, usize> = found.into_iter().collect();
    for c in rest.into_iter().flatten() {
        *out.entry(c).or_default() += 1;
    }
    out
}

/// Exponent of `p` in `n` (`n` nonzero).
pub fn valuation(n: &BigInt, p: &BigUint) -> usize {
    let p = BigInt::from_biguint(Sign::Plus, p.clone());
    let mut n = n.clone();
    let mut e = 0;
    while !n.is_zero() && (&n % &p).is_zero() {
        n /= &p;
        e += 1;
    }
    e
}

pub fn biguint_to_int(p: &BigUint) -> BigInt {
    BigInt::from_biguint(Sign::Plus, p.clone())
}
