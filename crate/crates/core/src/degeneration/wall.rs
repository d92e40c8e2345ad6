//! Central charges on the wall `(β+2)² + α² = 2`, `β < −1`.
//!
//! Only `α²` is rational on the wall, so a charge is stored as `re + i·im·α`
//! and real parts of ratios stay in ℚ.

use std::ops::{Add, Neg, Sub};

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::mukai::MukaiVector;
use crate::rational::{int, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WallPoint {
    beta: Rational,
    alpha_sq: Rational,
}

impl WallPoint {
    /// The point of the wall above `β`.
    pub fn from_beta(beta: Rational) -> Result<Self> {
        let shifted = &beta + int(2);
        let alpha_sq = int(2) - &shifted * &shifted;
        Self::new(beta, alpha_sq)
    }

    pub fn new(beta: Rational, alpha_sq: Rational) -> Result<Self> {
        let shifted = &beta + int(2);
        if &shifted * &shifted + &alpha_sq != int(2) {
            return Err(Error::OffWall(format!(
                "(β+2)² + α² ≠ 2 at β = {beta}, α² = {alpha_sq}"
            )));
        }
        if !alpha_sq.is_positive() {
            return Err(Error::OffWall(format!("α² = {alpha_sq} is not positive")));
        }
        if beta >= int(-1) {
            return Err(Error::OffWall(format!("β = {beta} is not below -1")));
        }
        Ok(WallPoint { beta, alpha_sq })
    }

    /// `β = −2`, `α = √2`.
    pub fn center() -> Self {
        WallPoint {
            beta: int(-2),
            alpha_sq: int(2),
        }
    }

    pub fn beta(&self) -> &Rational {
        &self.beta
    }

    pub fn alpha_sq(&self) -> &Rational {
        &self.alpha_sq
    }
}

/// `re + i·im·α`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WallCharge {
    pub re: Rational,
    pub im: Rational,
}

impl WallCharge {
    pub fn new(re: Rational, im: Rational) -> Self {
        WallCharge { re, im }
    }

    pub fn zero() -> Self {
        WallCharge::new(Rational::zero(), Rational::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        WallCharge::new(self.re.clone(), -&self.im)
    }

    pub fn scale(&self, k: &Rational) -> Self {
        WallCharge::new(&self.re * k, &self.im * k)
    }

    pub fn norm_sq(&self, alpha_sq: &Rational) -> Rational {
        &self.re * &self.re + &self.im * &self.im * alpha_sq
    }

    /// `Re(self / other)`.
    pub fn ratio_re(&self, other: &WallCharge, alpha_sq: &Rational) -> Result<Rational> {
        let norm = other.norm_sq(alpha_sq);
        if norm.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok((&self.re * &other.re + &self.im * &other.im * alpha_sq) / norm)
    }
}

impl Add for WallCharge {
    type Output = WallCharge;
    fn add(self, o: WallCharge) -> WallCharge {
        WallCharge::new(self.re + o.re, self.im + o.im)
    }
}

impl Sub for WallCharge {
    type Output = WallCharge;
    fn sub(self, o: WallCharge) -> WallCharge {
        self + (-o)
    }
}

impl Neg for WallCharge {
    type Output = WallCharge;
    fn neg(self) -> WallCharge {
        WallCharge::new(-self.re, -self.im)
    }
}

/// `Z(r, cL, s) = 2c(β + iα) − s − r(β + iα)²`.
pub fn central_charge(v: &MukaiVector, p: &WallPoint) -> WallCharge {
    let (r, c, s) = (int(v.r), int(v.c), int(v.s));
    let b = &p.beta;
    // (β + iα)² = β² − α² + 2βα·i
    let re = int(2) * &c * b - &s - &r * (b * b - &p.alpha_sq);
    let im = int(2) * &c - int(2) * &r * b;
    WallCharge::new(re, im)
}

/// `Re(Z(u)/Z(v))` at `p`.
pub fn effectivity_ratio(u: &MukaiVector, v: &MukaiVector, p: &WallPoint) -> Result<Rational> {
    central_charge(u, p).ratio_re(&central_charge(v, p), &p.alpha_sq)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::frac;
    use proptest::prelude::*;

    const V: MukaiVector = MukaiVector::V;
    const S: MukaiVector = MukaiVector::S;

    #[test]
    fn charges_at_center() {
        let p = WallPoint::from_beta(int(-2)).unwrap();
        assert_eq!(p, WallPoint::center());
        assert_eq!(central_charge(&V, &p), WallCharge::new(int(0), int(4)));
        assert_eq!(central_charge(&S, &p), WallCharge::new(int(0), int(2)));
        assert!(central_charge(&MukaiVector::default(), &p).is_zero());
    }

    #[test]
    fn closed_forms_along_the_wall() {
        // Z(v) = −2β(β+2+iα), Z(s) = −2(β+1)(β+2+iα)
        for beta in [frac(-3, 2), frac(-5, 2), frac(-11, 10), frac(-31, 10)] {
            let p = WallPoint::from_beta(beta.clone()).unwrap();
            let base = WallCharge::new(&beta + int(2), int(1));
            assert_eq!(central_charge(&V, &p), base.scale(&(int(-2) * &beta)));
            assert_eq!(
                central_charge(&S, &p),
                base.scale(&(int(-2) * (&beta + int(1))))
            );
        }
    }

    #[test]
    fn ratios() {
        let p = WallPoint::center();
        assert_eq!(effectivity_ratio(&S, &V, &p), Ok(frac(1, 2)));
        assert_eq!(effectivity_ratio(&V, &V, &p), Ok(int(1)));
        let u = 3 * V + 5 * S;
        assert_eq!(effectivity_ratio(&u, &V, &p), Ok(frac(11, 2)));
        assert_eq!(
            effectivity_ratio(&V, &MukaiVector::default(), &p),
            Err(Error::DivisionByZero)
        );
    }

    #[test]
    fn off_wall_points_rejected() {
        assert!(WallPoint::from_beta(int(-1)).is_err());
        assert!(WallPoint::from_beta(int(0)).is_err());
        assert!(WallPoint::from_beta(int(-4)).is_err());
        assert!(WallPoint::new(int(-2), int(1)).is_err());
        assert!(WallPoint::new(frac(-3, 2), frac(7, 4)).is_ok());
    }

    #[test]
    fn charge_algebra() {
        let a = WallCharge::new(int(1), int(2));
        let b = WallCharge::new(int(-3), frac(1, 2));
        assert_eq!(a.clone() + b.clone() - b.clone(), a);
        assert_eq!(a.conj().conj(), a);
        assert_eq!(a.norm_sq(&int(2)), int(9));
    }

    fn wall_beta() -> impl Strategy<Value = Rational> {
        // β ∈ (−2−√2, −1): numerators over 100
        (-341i64..-100).prop_map(|n| frac(n, 100))
    }

    fn vector() -> impl Strategy<Value = MukaiVector> {
        (-20i64..20, -20i64..20, -20i64..20).prop_map(|(r, c, s)| MukaiVector::new(r, c, s))
    }

    proptest! {
        #[test]
        fn wall_membership(beta in wall_beta()) {
            let p = WallPoint::from_beta(beta).unwrap();
            let shifted = p.beta() + int(2);
            prop_assert_eq!(&shifted * &shifted + p.alpha_sq(), int(2));
            prop_assert!(p.alpha_sq().is_positive());
            prop_assert!(*p.beta() < int(-1));
        }

        #[test]
        fn ratio_is_linear(beta in wall_beta(), u1 in vector(), u2 in vector()) {
            let p = WallPoint::from_beta(beta).unwrap();
            let sum = effectivity_ratio(&(u1 + u2), &V, &p).unwrap();
            let parts = effectivity_ratio(&u1, &V, &p).unwrap() + effectivity_ratio(&u2, &V, &p).unwrap();
            prop_assert_eq!(sum, parts);
        }

        #[test]
        fn charge_is_linear(beta in wall_beta(), u1 in vector(), u2 in vector(), k in -7i64..7) {
            let p = WallPoint::from_beta(beta).unwrap();
            prop_assert_eq!(central_charge(&(u1 + u2), &p), central_charge(&u1, &p) + central_charge(&u2, &p));
            prop_assert_eq!(central_charge(&(k * u1), &p), central_charge(&u1, &p).scale(&int(k)));
        }

        #[test]
        fn ratio_on_span_at_center(x in -50i64..50, y in -50i64..50) {
            let u = x * V + y * S;
            prop_assert_eq!(effectivity_ratio(&u, &V, &WallPoint::center()).unwrap(), int(x) + frac(y, 2));
        }
    }
}
