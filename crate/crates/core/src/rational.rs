//! Rational helpers on top of `num_rational::BigRational`.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

pub type Rational = num_rational::BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn is_positive(x: &Rational) -> bool {
    x.is_positive()
}

/// Exact square root of a non-negative big integer, if it is a perfect square.
pub fn exact_isqrt(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let r = n.sqrt();
    (&r * &r == *n).then_some(r)
}

/// Square root of a rational, if it is the square of a rational.
///
/// The input is kept reduced by `BigRational`, so it is a rational square
/// exactly when numerator and denominator are both perfect squares.
pub fn rational_sqrt(x: &Rational) -> Option<Rational> {
    if x.is_negative() {
        return None;
    }
    if x.is_zero() {
        return Some(Rational::zero());
    }
    let n = exact_isqrt(x.numer())?;
    let d = exact_isqrt(x.denom())?;
    Some(Rational::new(n, d))
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

/// Falling factorial `g!/(g-i)!`.
pub fn falling_factorial(g: u64, i: u64) -> BigInt {
    (0..i).fold(BigInt::one(), |acc, k| acc * BigInt::from(g - k))
}

pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    falling_factorial(n, k) / factorial(k)
}

/// Double factorial `(2m-1)!!`, the number of perfect matchings on `2m` points.
pub fn odd_double_factorial(m: u64) -> BigInt {
    (1..=m).fold(BigInt::one(), |acc, k| acc * BigInt::from(2 * k - 1))
}
