//! Hodge classes of a very general polarized sixfold `(X, h)` of K3^[3]-type.
//!
//! The space of Hodge classes has the monomial basis
//!
//! | degree | basis              |
//! |--------|--------------------|
//! | 0      | 1                  |
//! | 2      | h                  |
//! | 4      | h², c₂, λ          |
//! | 6      | h³, hc₂, η         |
//! | 8      | h⁴, h²c₂, h²λ      |
//! | 10     | h⁵                 |
//! | 12     | h⁶                 |
//!
//! with `η = hλ` orthogonal to the Verbitsky component and `η² = 4`.
//! Coefficients live in ℚ(q), `q = q(h)`; a ring built with [`HodgeRing::at`]
//! simply has constant coefficients.
//!
//! Products are rewritten onto the basis with the relations
//! `c₂² = (5/2)·c₄`, `c₄ = x·h⁴ + y·h²c₂` (degree 8) and the one-dimensionality
//! of degrees 10 and 12, all derived from the Fujiki constants and the Chern
//! number `c₂c₄`.

use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::fujiki::{fujiki_constant, specialized_integral, AbsoluteClass};
use crate::poly::ParametricScalar;
use crate::rational::{int, Rational};

/// Chern numbers of K3^[3]-type.
pub const CHERN_C6: i64 = 3200;
pub const CHERN_C2C4: i64 = 14720;
pub const CHERN_C2_CUBED: i64 = 36800;

/// `∫ η·η`, fixed up to rational squares; we take the representative 4.
pub const ETA_SQUARE: i64 = 4;

pub const TOP_DEGREE: u32 = 12;

/// Monomial `h^h · c₂^c2 · λ^lambda`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    pub h: u32,
    pub c2: u32,
    pub lambda: u32,
}

impl Monomial {
    pub const fn new(h: u32, c2: u32, lambda: u32) -> Self {
        Monomial { h, c2, lambda }
    }

    pub fn degree(&self) -> u32 {
        2 * self.h + 4 * self.c2 + 4 * self.lambda
    }

    fn times(&self, o: &Monomial) -> Monomial {
        Monomial::new(self.h + o.h, self.c2 + o.c2, self.lambda + o.lambda)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if *self == Monomial::new(1, 0, 1) {
            return f.write_str("eta");
        }
        let mut parts = Vec::new();
        match self.h {
            0 => {}
            1 => parts.push("h".to_string()),
            k => parts.push(format!("h^{k}")),
        }
        match self.c2 {
            0 => {}
            1 => parts.push("c2".to_string()),
            k => parts.push(format!("c2^{k}")),
        }
        match self.lambda {
            0 => {}
            1 => parts.push("lambda".to_string()),
            k => parts.push(format!("lambda^{k}")),
        }
        if parts.is_empty() {
            f.write_str("1")
        } else {
            f.write_str(&parts.concat())
        }
    }
}

const B0: [Monomial; 1] = [Monomial::new(0, 0, 0)];
const B2: [Monomial; 1] = [Monomial::new(1, 0, 0)];
const B4: [Monomial; 3] = [
    Monomial::new(2, 0, 0),
    Monomial::new(0, 1, 0),
    Monomial::new(0, 0, 1),
];
const B6: [Monomial; 3] = [
    Monomial::new(3, 0, 0),
    Monomial::new(1, 1, 0),
    Monomial::new(1, 0, 1),
];
const B8: [Monomial; 3] = [
    Monomial::new(4, 0, 0),
    Monomial::new(2, 1, 0),
    Monomial::new(2, 0, 1),
];
const B10: [Monomial; 1] = [Monomial::new(5, 0, 0)];
const B12: [Monomial; 1] = [Monomial::new(6, 0, 0)];

/// Basis of the Hodge classes in the given (even) degree.
pub fn basis(degree: u32) -> Result<&'static [Monomial]> {
    Ok(match degree {
        0 => &B0,
        2 => &B2,
        4 => &B4,
        6 => &B6,
        8 => &B8,
        10 => &B10,
        12 => &B12,
        d if d > TOP_DEGREE => return Err(Error::DegreeOverflow(d)),
        d => return Err(Error::OddDegree(d)),
    })
}

/// Homogeneous Hodge class given by its coordinates on [`basis`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HodgeClass {
    degree: u32,
    coeffs: Vec<ParametricScalar>,
}

impl HodgeClass {
    pub fn zero(degree: u32) -> Result<Self> {
        let n = basis(degree)?.len();
        Ok(HodgeClass {
            degree,
            coeffs: vec![ParametricScalar::zero(); n],
        })
    }

    pub fn from_coeffs(degree: u32, coeffs: Vec<ParametricScalar>) -> Result<Self> {
        let n = basis(degree)?.len();
        if coeffs.len() != n {
            return Err(Error::Arity {
                expected: n,
                got: coeffs.len(),
            });
        }
        Ok(HodgeClass { degree, coeffs })
    }

    /// The basis monomial `m`, which must be one of the listed basis elements.
    pub fn monomial(m: Monomial) -> Result<Self> {
        let b = basis(m.degree())?;
        let idx = b
            .iter()
            .position(|x| *x == m)
            .ok_or_else(|| Error::UnknownLabel(m.to_string()))?;
        let mut out = HodgeClass::zero(m.degree())?;
        out.coeffs[idx] = ParametricScalar::one();
        Ok(out)
    }

    pub fn one() -> Self {
        Self::monomial(Monomial::new(0, 0, 0)).expect("basis element")
    }

    pub fn h() -> Self {
        Self::monomial(Monomial::new(1, 0, 0)).expect("basis element")
    }

    /// `h^k` for `k ≤ 6`.
    pub fn h_pow(k: u32) -> Result<Self> {
        Self::monomial(Monomial::new(k, 0, 0))
    }

    pub fn c2() -> Self {
        Self::monomial(Monomial::new(0, 1, 0)).expect("basis element")
    }

    pub fn lambda() -> Self {
        Self::monomial(Monomial::new(0, 0, 1)).expect("basis element")
    }

    pub fn eta() -> Self {
        Self::monomial(Monomial::new(1, 0, 1)).expect("basis element")
    }

    /// `a·h³ + b·hc₂ + c·η`.
    pub fn degree6(a: Rational, b: Rational, c: Rational) -> Self {
        HodgeClass {
            degree: 6,
            coeffs: vec![a.into(), b.into(), c.into()],
        }
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn coeffs(&self) -> &[ParametricScalar] {
        &self.coeffs
    }

    pub fn coeff(&self, m: Monomial) -> ParametricScalar {
        basis(self.degree)
            .ok()
            .and_then(|b| b.iter().position(|x| *x == m))
            .map(|i| self.coeffs[i].clone())
            .unwrap_or_else(ParametricScalar::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (Monomial, &ParametricScalar)> {
        basis(self.degree)
            .expect("valid degree")
            .iter()
            .copied()
            .zip(self.coeffs.iter())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(ParametricScalar::is_zero)
    }

    pub fn scale(&self, k: &ParametricScalar) -> Self {
        HodgeClass {
            degree: self.degree,
            coeffs: self.coeffs.iter().map(|c| c * k).collect(),
        }
    }

    pub fn try_add(&self, other: &HodgeClass) -> Result<Self> {
        if self.degree != other.degree {
            return Err(Error::WrongDegree {
                expected: self.degree,
                got: other.degree,
            });
        }
        Ok(HodgeClass {
            degree: self.degree,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn try_sub(&self, other: &HodgeClass) -> Result<Self> {
        self.try_add(&other.scale(&-ParametricScalar::one()))
    }

    /// Evaluates every coefficient at a rational `q`.
    pub fn eval(&self, q: &Rational) -> Result<Vec<Rational>> {
        self.coeffs.iter().map(|c| c.eval(q)).collect()
    }
}

impl fmt::Display for HodgeClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (m, c) in self.terms() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            if c.is_one() {
                write!(f, "{m}")?;
            } else if c.as_constant().is_some() {
                write!(f, "({c})*{m}")?;
            } else {
                write!(f, "{c}*{m}")?;
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

trait IsOne {
    fn is_one(&self) -> bool;
}

impl IsOne for ParametricScalar {
    fn is_one(&self) -> bool {
        self.as_constant().is_some_and(|c| c.is_one())
    }
}

/// `c₄ = h4·h⁴ + h2c2·h²c₂`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Degree8Relation {
    pub h4: ParametricScalar,
    pub h2c2: ParametricScalar,
}

/// Degree-10 classes as multiples of `h⁵`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Degree10Relations {
    pub h3c2: ParametricScalar,
    pub hc2_squared: ParametricScalar,
    pub hc4: ParametricScalar,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChernNumbers {
    pub c2_cubed: Rational,
    pub c2c4: Rational,
    pub c6: Rational,
}

/// Solves for `c₄ = x·h⁴ + y·h²c₂` by pairing with `h²` and with `c₂`:
///
/// ```text
/// C(1)q³·x + C(c₂)q²·y = C(c₄)q
/// C(c₂)q²·x + C(c₂²)q·y = c₂c₄
/// ```
pub fn derive_degree8_relation(q: &ParametricScalar) -> Result<Degree8Relation> {
    if q.is_zero() {
        return Err(Error::Singular);
    }
    let h6 = specialized_integral(AbsoluteClass::One, q);
    let h4c2 = specialized_integral(AbsoluteClass::C2, q);
    let h2c2sq = specialized_integral(AbsoluteClass::C2Squared, q);
    let h2c4 = specialized_integral(AbsoluteClass::C4, q);
    let c2c4 = ParametricScalar::constant(int(CHERN_C2C4));

    let det = &(&h6 * &h2c2sq) - &(&h4c2 * &h4c2);
    if det.is_zero() {
        return Err(Error::Singular);
    }
    let x = (&(&h2c4 * &h2c2sq) - &(&h4c2 * &c2c4)).checked_div(&det)?;
    let y = (&(&h6 * &c2c4) - &(&h4c2 * &h2c4)).checked_div(&det)?;
    Ok(Degree8Relation { h4: x, h2c2: y })
}

/// `c₂² / c₄ = C(c₂²) / C(c₄)`.
pub fn c2_squared_over_c4() -> Rational {
    fujiki_constant(AbsoluteClass::C2Squared) / fujiki_constant(AbsoluteClass::C4)
}

/// Degree 10 is spanned by `h⁵`, so `h·α = (∫h²α / ∫h⁶)·h⁵`.
pub fn derive_degree10_relations(q: &ParametricScalar) -> Result<Degree10Relations> {
    if q.is_zero() {
        return Err(Error::Singular);
    }
    let h6 = specialized_integral(AbsoluteClass::One, q);
    let ratio = |a| specialized_integral(a, q).checked_div(&h6);
    Ok(Degree10Relations {
        h3c2: ratio(AbsoluteClass::C2)?,
        hc2_squared: ratio(AbsoluteClass::C2Squared)?,
        hc4: ratio(AbsoluteClass::C4)?,
    })
}

/// Multiplication and integration on the Hodge classes for a fixed `q(h)`.
#[derive(Clone, Debug)]
pub struct HodgeRing {
    q: ParametricScalar,
    c4: Degree8Relation,
    c2_squared: Degree8Relation,
    /// `∫h⁴c₂ / ∫h⁶`, the coefficient rewriting `h^k c₂` onto `h^{k+2}` in degrees 10, 12.
    c2_to_h2: ParametricScalar,
    h6: ParametricScalar,
}

impl HodgeRing {
    pub fn new(q: ParametricScalar) -> Result<Self> {
        let c4 = derive_degree8_relation(&q)?;
        let k = ParametricScalar::constant(c2_squared_over_c4());
        let c2_squared = Degree8Relation {
            h4: &c4.h4 * &k,
            h2c2: &c4.h2c2 * &k,
        };
        let h6 = specialized_integral(AbsoluteClass::One, &q);
        let c2_to_h2 = specialized_integral(AbsoluteClass::C2, &q).checked_div(&h6)?;
        Ok(HodgeRing {
            q,
            c4,
            c2_squared,
            c2_to_h2,
            h6,
        })
    }

    /// Ring with `q` kept as an indeterminate.
    pub fn symbolic() -> Self {
        Self::new(ParametricScalar::q()).expect("q is nonzero in Q(q)")
    }

    /// Ring at a rational value of `q(h)`; `q` must be positive.
    pub fn at(q: &Rational) -> Result<Self> {
        if !q.is_positive() {
            return Err(Error::NonPositive(q.to_string()));
        }
        Self::new(ParametricScalar::constant(q.clone()))
    }

    pub fn q(&self) -> &ParametricScalar {
        &self.q
    }

    pub fn degree8_relation(&self) -> &Degree8Relation {
        &self.c4
    }

    /// `c₄` as a class of degree 8.
    pub fn c4(&self) -> HodgeClass {
        HodgeClass {
            degree: 8,
            coeffs: vec![
                self.c4.h4.clone(),
                self.c4.h2c2.clone(),
                ParametricScalar::zero(),
            ],
        }
    }

    /// `c₆ = c₆[X]·[pt]`, with `[pt] = h⁶ / ∫h⁶`.
    pub fn c6(&self) -> Result<HodgeClass> {
        let coeff = ParametricScalar::constant(int(CHERN_C6)).checked_div(&self.h6)?;
        HodgeClass::from_coeffs(12, vec![coeff])
    }

    /// Normal form of a monomial on the basis of its degree.
    pub fn reduce(&self, m: Monomial) -> Result<HodgeClass> {
        let deg = m.degree();
        if deg > TOP_DEGREE {
            return Err(Error::DegreeOverflow(deg));
        }
        if m.lambda >= 2 || (m.lambda == 1 && m.c2 > 0) {
            return Err(Error::PairingOnly(m.to_string()));
        }
        if m.lambda == 1 {
            // h^k·λ with k >= 3 sits in degree 10 or 12, spanned by a power of h.
            // Its coefficient is read off by pairing down to ∫h³·η, which is
            // zero because η is orthogonal to the Verbitsky component.
            return if m.h <= 2 {
                HodgeClass::monomial(m)
            } else {
                HodgeClass::zero(deg)
            };
        }
        if m.c2 >= 2 && deg >= 8 {
            let a = self.reduce(Monomial::new(m.h + 4, m.c2 - 2, 0))?;
            let b = self.reduce(Monomial::new(m.h + 2, m.c2 - 1, 0))?;
            return a
                .scale(&self.c2_squared.h4)
                .try_add(&b.scale(&self.c2_squared.h2c2));
        }
        match (deg, m.c2) {
            (d, _) if d <= 8 => HodgeClass::monomial(m),
            (_, 0) => HodgeClass::monomial(m),
            (_, 1) => Ok(self
                .reduce(Monomial::new(m.h + 2, 0, 0))?
                .scale(&self.c2_to_h2)),
            _ => unreachable!("c2 >= 2 handled above"),
        }
    }

    pub fn multiply(&self, x: &HodgeClass, y: &HodgeClass) -> Result<HodgeClass> {
        let deg = x.degree + y.degree;
        if deg > TOP_DEGREE {
            return Err(Error::DegreeOverflow(deg));
        }
        let mut out = HodgeClass::zero(deg)?;
        for (mx, cx) in x.terms().filter(|(_, c)| !c.is_zero()) {
            for (my, cy) in y.terms().filter(|(_, c)| !c.is_zero()) {
                let term = self.reduce(mx.times(&my))?.scale(&(cx * cy));
                out = out.try_add(&term)?;
            }
        }
        Ok(out)
    }

    /// Product of several classes, left to right.
    pub fn product(&self, factors: &[HodgeClass]) -> Result<HodgeClass> {
        factors
            .iter()
            .try_fold(HodgeClass::one(), |acc, f| self.multiply(&acc, f))
    }

    /// Degree of a top-degree class: `h⁶ ↦ 15q³`.
    pub fn integrate(&self, x: &HodgeClass) -> Result<ParametricScalar> {
        if x.degree != TOP_DEGREE {
            return Err(Error::WrongDegree {
                expected: TOP_DEGREE,
                got: x.degree,
            });
        }
        Ok(&x.coeffs[0] * &self.h6)
    }

    /// Intersection pairing `∫ x·y` for complementary degrees.
    ///
    /// Unlike [`multiply`](Self::multiply) this also covers the λ-part: a term
    /// with a single λ pairs to zero (η is orthogonal to the Verbitsky
    /// component) and `h²λ² = η·η` contributes [`ETA_SQUARE`].
    pub fn pair(&self, x: &HodgeClass, y: &HodgeClass) -> Result<ParametricScalar> {
        let deg = x.degree + y.degree;
        if deg != TOP_DEGREE {
            return Err(Error::WrongDegree {
                expected: TOP_DEGREE - x.degree,
                got: y.degree,
            });
        }
        let mut total = ParametricScalar::zero();
        for (mx, cx) in x.terms().filter(|(_, c)| !c.is_zero()) {
            for (my, cy) in y.terms().filter(|(_, c)| !c.is_zero()) {
                let m = mx.times(&my);
                let value = match m.lambda {
                    0 => self.integrate(&self.reduce(m)?)?,
                    1 => ParametricScalar::zero(),
                    _ if m == Monomial::new(2, 0, 2) => ParametricScalar::constant(int(ETA_SQUARE)),
                    _ => return Err(Error::PairingOnly(m.to_string())),
                };
                total = &total + &(&value * &(cx * cy));
            }
        }
        Ok(total)
    }

    /// Gram matrix of `(h³, hc₂)` and its determinant.
    pub fn degree6_gram(&self) -> Result<([[ParametricScalar; 2]; 2], ParametricScalar)> {
        let h3 = HodgeClass::h_pow(3)?;
        let hc2 = HodgeClass::monomial(Monomial::new(1, 1, 0))?;
        let a = self.pair(&h3, &h3)?;
        let b = self.pair(&h3, &hc2)?;
        let d = self.pair(&hc2, &hc2)?;
        let det = &(&a * &d) - &(&b * &b);
        Ok(([[a, b.clone()], [b, d]], det))
    }

    /// `(c₂³, c₂c₄, c₆)`; the first two by multiplication in the ring.
    pub fn chern_numbers(&self) -> Result<(ParametricScalar, ParametricScalar, ParametricScalar)> {
        let c2 = HodgeClass::c2();
        let c2_cubed = self.integrate(&self.product(&[c2.clone(), c2.clone(), c2.clone()])?)?;
        let c2c4 = self.integrate(&self.multiply(&c2, &self.c4())?)?;
        let c6 = self.integrate(&self.c6()?)?;
        Ok((c2_cubed, c2c4, c6))
    }
}

fn require_positive(q: &Rational) -> Result<()> {
    if q.is_positive() {
        Ok(())
    } else {
        Err(Error::NonPositive(q.to_string()))
    }
}

/// Whether `h³` and `hc₂` are independent, with the determinant of their Gram matrix.
pub fn verify_independence_degree6(q: &Rational) -> Result<(bool, Rational)> {
    require_positive(q)?;
    let ring = HodgeRing::at(q)?;
    let (_, det) = ring.degree6_gram()?;
    let det = det.eval(q)?;
    Ok((!det.is_zero(), det))
}

/// Chern numbers recomputed from the ring at a rational `q > 0`.
pub fn chern_numbers_from_ring(q: &Rational) -> Result<ChernNumbers> {
    require_positive(q)?;
    let ring = HodgeRing::at(q)?;
    let (a, b, c) = ring.chern_numbers()?;
    Ok(ChernNumbers {
        c2_cubed: a.eval(q)?,
        c2c4: b.eval(q)?,
        c6: c.eval(q)?,
    })
}
