//! Univariate polynomials over ℚ and the rational-function field ℚ(q).
//!
//! [`ParametricScalar`] is the coefficient type of the Hodge ring: it carries
//! `q = q(h)` as an indeterminate and evaluates exactly at any rational point
//! that is not a pole.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::Rational;

/// Dense polynomial, coefficients stored from the constant term up.
/// The leading coefficient is never zero; the zero polynomial is empty.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct UniPoly {
    coeffs: Vec<Rational>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: Rational) -> Self {
        UniPoly::new(vec![c])
    }

    /// The monomial `c·x^k`.
    pub fn monomial(c: Rational, k: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = c;
        UniPoly::new(coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        UniPoly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            Some(lc) => self.scale(&lc.recip()),
            None => self.clone(),
        }
    }

    /// Euclidean division, `self = q·d + r` with `deg r < deg d`.
    pub fn div_rem(&self, d: &UniPoly) -> Result<(UniPoly, UniPoly)> {
        let dd = d.degree().ok_or(Error::DivisionByZero)?;
        let lc = d.leading().expect("nonzero divisor").clone();
        let mut rem = self.coeffs.clone();
        let Some(sd) = self.degree() else {
            return Ok((UniPoly::zero(), UniPoly::zero()));
        };
        if sd < dd {
            return Ok((UniPoly::zero(), self.clone()));
        }
        let mut quot = vec![Rational::zero(); sd - dd + 1];
        for k in (0..=sd - dd).rev() {
            let c = &rem[k + dd] / &lc;
            if c.is_zero() {
                continue;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                rem[k + j] -= &c * dc;
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        Ok((UniPoly::new(quot), UniPoly::new(rem)))
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &UniPoly) -> UniPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).expect("b is nonzero");
            a = b;
            b = r;
        }
        a.monic()
    }
}

impl Add for &UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let zero = Rational::zero();
        UniPoly::new(
            (0..n)
                .map(|i| self.coeffs.get(i).unwrap_or(&zero) + rhs.coeffs.get(i).unwrap_or(&zero))
                .collect(),
        )
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Sub for &UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        self + &(-rhs)
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UniPoly::new(out)
    }
}

fn write_poly(f: &mut fmt::Formatter<'_>, p: &UniPoly, var: &str) -> fmt::Result {
    if p.is_zero() {
        return write!(f, "0");
    }
    let mut first = true;
    for (k, c) in p.coeffs.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let neg = c < &Rational::zero();
        let abs = if neg { -c } else { c.clone() };
        if first {
            if neg {
                write!(f, "-")?;
            }
        } else {
            write!(f, " {} ", if neg { "-" } else { "+" })?;
        }
        first = false;
        match k {
            0 => write!(f, "{abs}")?,
            _ => {
                if !abs.is_one() {
                    write!(f, "{abs}*")?;
                }
                write!(f, "{var}")?;
                if k > 1 {
                    write!(f, "^{k}")?;
                }
            }
        }
    }
    Ok(())
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_poly(f, self, "q")
    }
}

/// Element of ℚ(q), kept as a reduced fraction with monic denominator.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ParametricScalar {
    num: UniPoly,
    den: UniPoly,
}

impl ParametricScalar {
    pub fn new(num: UniPoly, den: UniPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let g = num.gcd(&den);
        let (num, _) = num.div_rem(&g)?;
        let (den, _) = den.div_rem(&g)?;
        let lc = den.leading().expect("nonzero").recip();
        Ok(ParametricScalar {
            num: num.scale(&lc),
            den: den.scale(&lc),
        })
    }

    pub fn zero() -> Self {
        ParametricScalar {
            num: UniPoly::zero(),
            den: UniPoly::constant(Rational::one()),
        }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        ParametricScalar {
            num: UniPoly::constant(c),
            den: UniPoly::constant(Rational::one()),
        }
    }

    /// The indeterminate `q`.
    pub fn q() -> Self {
        Self::q_pow(1)
    }

    pub fn q_pow(k: usize) -> Self {
        ParametricScalar {
            num: UniPoly::monomial(Rational::one(), k),
            den: UniPoly::constant(Rational::one()),
        }
    }

    pub fn numer(&self) -> &UniPoly {
        &self.num
    }

    pub fn denom(&self) -> &UniPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// The value if this scalar does not depend on `q`.
    pub fn as_constant(&self) -> Option<Rational> {
        match (self.num.degree(), self.den.degree()) {
            (None, _) => Some(Rational::zero()),
            (Some(0), Some(0)) => Some(&self.num.coeffs()[0] / &self.den.coeffs()[0]),
            _ => None,
        }
    }

    pub fn eval(&self, q: &Rational) -> Result<Rational> {
        let d = self.den.eval(q);
        if d.is_zero() {
            return Err(Error::Pole);
        }
        Ok(self.num.eval(q) / d)
    }

    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        ParametricScalar::new(self.den.clone(), self.num.clone())
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(), |acc, _| &acc * self)
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        Ok(self * &rhs.recip()?)
    }
}

impl From<Rational> for ParametricScalar {
    fn from(c: Rational) -> Self {
        ParametricScalar::constant(c)
    }
}

impl Add for &ParametricScalar {
    type Output = ParametricScalar;
    fn add(self, rhs: &ParametricScalar) -> ParametricScalar {
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        ParametricScalar::new(num, &self.den * &rhs.den).expect("product of nonzero denominators")
    }
}

impl Sub for &ParametricScalar {
    type Output = ParametricScalar;
    fn sub(self, rhs: &ParametricScalar) -> ParametricScalar {
        self + &(-rhs)
    }
}

impl Neg for &ParametricScalar {
    type Output = ParametricScalar;
    fn neg(self) -> ParametricScalar {
        ParametricScalar {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Mul for &ParametricScalar {
    type Output = ParametricScalar;
    fn mul(self, rhs: &ParametricScalar) -> ParametricScalar {
        ParametricScalar::new(&self.num * &rhs.num, &self.den * &rhs.den)
            .expect("product of nonzero denominators")
    }
}

impl Div for &ParametricScalar {
    type Output = ParametricScalar;
    /// Panics on division by zero; use [`ParametricScalar::checked_div`] otherwise.
    fn div(self, rhs: &ParametricScalar) -> ParametricScalar {
        self.checked_div(rhs).expect("division by zero")
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for ParametricScalar {
            type Output = ParametricScalar;
            fn $m(self, rhs: ParametricScalar) -> ParametricScalar { (&self).$m(&rhs) }
        }
        impl $tr<&ParametricScalar> for ParametricScalar {
            type Output = ParametricScalar;
            fn $m(self, rhs: &ParametricScalar) -> ParametricScalar { (&self).$m(rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul, Div div);

impl Neg for ParametricScalar {
    type Output = ParametricScalar;
    fn neg(self) -> ParametricScalar {
        -&self
    }
}

impl fmt::Display for ParametricScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(c) = self.as_constant() {
            return write!(f, "{c}");
        }
        // print with integer coefficients: scale both sides by the common denominator
        let all = self.num.coeffs().iter().chain(self.den.coeffs());
        let lcm = all.clone().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let content = all
            .filter(|c| !c.is_zero())
            .fold(BigInt::zero(), |acc, c| acc.gcd(&(c * &lcm).to_integer()));
        let k = Rational::new(lcm, content);
        let (num, den) = (self.num.scale(&k), self.den.scale(&k));
        let wrap = |p: &UniPoly| p.coeffs().iter().filter(|c| !c.is_zero()).count() > 1;
        if wrap(&num) {
            write!(f, "({num})")?;
        } else {
            write!(f, "{num}")?;
        }
        if den != UniPoly::constant(Rational::one()) {
            let single_monic = !wrap(&den) && den.leading().is_some_and(One::is_one);
            if single_monic {
                write!(f, "/{den}")?;
            } else {
                write!(f, "/({den})")?;
            }
        }
        Ok(())
    }
}
