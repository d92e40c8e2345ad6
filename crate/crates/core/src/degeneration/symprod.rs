//! Intersection numbers on the third symmetric product `Γ^(3)` of a genus-`g`
//! curve, in the classes `θ` (pulled back from the Jacobian) and `η`
//! (the class of `Γ^(2)`). Here `θ^i·η^{3−i} = g!/(g−i)!`.
//!
//! This `η` is unrelated to the degree-6 Hodge class of the same name.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::{binomial, factorial, falling_factorial, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymProdClass {
    pub g: u64,
    /// `coeffs[i]` multiplies `θ^i·η^{3−i}`.
    pub coeffs: [Rational; 4],
}

impl SymProdClass {
    pub fn new(g: u64, coeffs: [Rational; 4]) -> Self {
        SymProdClass { g, coeffs }
    }

    /// `θ^i·η^{3−i}`.
    pub fn monomial(g: u64, i: usize) -> Self {
        let mut coeffs: [Rational; 4] = Default::default();
        coeffs[i] = Rational::one();
        SymProdClass { g, coeffs }
    }

    /// `(a·θ + b·η)³`.
    pub fn linear_cube(g: u64, a: &Rational, b: &Rational) -> Self {
        let coeffs = std::array::from_fn(|i| {
            let c = Rational::from_integer(binomial(3, i as u64));
            c * pow(a, i) * pow(b, 3 - i)
        });
        SymProdClass { g, coeffs }
    }
}

fn pow(x: &Rational, k: usize) -> Rational {
    (0..k).fold(Rational::one(), |acc, _| acc * x)
}

/// `θ^i·η^{3−i} ↦ g!/(g−i)!`, extended linearly.
pub fn sym_prod_eval(c: &SymProdClass) -> Result<Rational> {
    if c.g < 3 {
        return Err(Error::GenusTooSmall(c.g));
    }
    Ok(c.coeffs
        .iter()
        .enumerate()
        .fold(Rational::zero(), |acc, (i, k)| {
            acc + k * Rational::from_integer(falling_factorial(c.g, i as u64))
        }))
}

/// Coefficient `e` in `[E] = e·θ^{g−2}/(g−2)!` on the Jacobian, where
/// `[E] = −6[Γ^(2)] + [Γ^(3)]·θ` and `[Γ^(i)] = θ^{g−i}/(g−i)!`.
///
/// At `g = 10` this is `2`; other genera extend the same formula.
pub fn jacobian_class_of_e(g: u64) -> Result<Rational> {
    if g < 3 {
        return Err(Error::GenusTooSmall(g));
    }
    let top = Rational::from_integer(factorial(g - 2));
    let gamma2 = Rational::new(BigInt::one(), factorial(g - 2));
    let gamma3 = Rational::new(BigInt::one(), factorial(g - 3));
    Ok((gamma3 - Rational::from_integer(6.into()) * gamma2) * top)
}

/// `(odd, even)` theta characteristics on a genus-`g` curve.
pub fn theta_characteristic_counts(g: u32) -> (BigInt, BigInt) {
    let two_g = BigInt::one() << g;
    let total = &two_g * &two_g;
    ((&total - &two_g) / 2, (&total + &two_g) / 2)
}
