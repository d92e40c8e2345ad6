//! Kuranishi model at a point of the exceptional locus: the quadric cone
//! `u₁² − u₂u₃` pulled back along `u₁ = a₁b₁, u₂ = −a₁b₂, u₃ = a₂b₁` must lie
//! in the ideal of the Yoneda pairing `a₁b₁ + a₂b₂`.

use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::rational::Rational;

/// Sparse polynomial over ℚ in a fixed number of variables, lex order with
/// variable 0 largest.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MPoly {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, Rational>,
}

impl MPoly {
    pub fn zero(nvars: usize) -> Self {
        MPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        Self::term(nvars, vec![0; nvars], c)
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Self::term(nvars, e, Rational::one())
    }

    pub fn term(nvars: usize, exps: Vec<u32>, c: Rational) -> Self {
        assert_eq!(exps.len(), nvars, "exponent vector length");
        let mut p = Self::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(exps, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading(&self) -> Option<(&Vec<u32>, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Rational)> {
        self.terms.iter()
    }

    fn add_term(&mut self, exps: Vec<u32>, c: Rational) {
        let entry = self
            .terms
            .entry(exps.clone())
            .or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&exps);
        }
    }

    fn mul_term(&self, exps: &[u32], c: &Rational) -> MPoly {
        let mut out = MPoly::zero(self.nvars);
        for (e, v) in &self.terms {
            let sum: Vec<u32> = e.iter().zip(exps).map(|(a, b)| a + b).collect();
            out.add_term(sum, v * c);
        }
        out
    }

    /// Remainder and quotients of division by `divisors` (in order).
    ///
    /// The remainder is canonical when `divisors` is a Gröbner basis, in
    /// particular for a single generator.
    pub fn div_rem(&self, divisors: &[MPoly]) -> (Vec<MPoly>, MPoly) {
        let mut quotients = vec![MPoly::zero(self.nvars); divisors.len()];
        let mut rem = MPoly::zero(self.nvars);
        let mut p = self.clone();
        while let Some((lead_e, lead_c)) = p.leading().map(|(e, c)| (e.clone(), c.clone())) {
            let hit = divisors.iter().enumerate().find_map(|(i, g)| {
                let (ge, gc) = g.leading()?;
                let divides = ge.iter().zip(&lead_e).all(|(a, b)| a <= b);
                divides.then(|| {
                    let e: Vec<u32> = lead_e.iter().zip(ge).map(|(a, b)| a - b).collect();
                    (i, e, &lead_c / gc)
                })
            });
            match hit {
                Some((i, e, c)) => {
                    p = &p - &divisors[i].mul_term(&e, &c);
                    quotients[i].add_term(e, c);
                }
                None => {
                    rem.add_term(lead_e.clone(), lead_c.clone());
                    p.terms.remove(&lead_e);
                }
            }
        }
        (quotients, rem)
    }
}

impl Add for &MPoly {
    type Output = MPoly;
    fn add(self, o: &MPoly) -> MPoly {
        let mut out = self.clone();
        for (e, c) in &o.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl Neg for &MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        let mut out = self.clone();
        out.terms.values_mut().for_each(|c| *c = -c.clone());
        out
    }
}

impl Sub for &MPoly {
    type Output = MPoly;
    fn sub(self, o: &MPoly) -> MPoly {
        self + &(-o)
    }
}

impl Mul for &MPoly {
    type Output = MPoly;
    fn mul(self, o: &MPoly) -> MPoly {
        let mut out = MPoly::zero(self.nvars);
        for (e, c) in &o.terms {
            for (f, d) in self.mul_term(e, c).terms {
                out.add_term(f, d);
            }
        }
        out
    }
}

/// Variables `a₁, a₂, b₁, b₂` in that (lex) order.
pub const NVARS: usize = 4;
const A1: usize = 0;
const A2: usize = 1;
const B1: usize = 2;
const B2: usize = 3;

fn v(i: usize) -> MPoly {
    MPoly::var(NVARS, i)
}

/// Images of `u₁, u₂, u₃`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Substitution {
    pub u1: MPoly,
    pub u2: MPoly,
    pub u3: MPoly,
}

impl Substitution {
    /// `u₁ = a₁b₁, u₂ = −a₁b₂, u₃ = a₂b₁`.
    pub fn standard() -> Self {
        Substitution {
            u1: &v(A1) * &v(B1),
            u2: -&(&v(A1) * &v(B2)),
            u3: &v(A2) * &v(B1),
        }
    }

    /// Same with `u₂ = +a₁b₂`.
    pub fn sign_flipped() -> Self {
        Substitution {
            u2: &v(A1) * &v(B2),
            ..Self::standard()
        }
    }

    /// `u₁² − u₂u₃`.
    pub fn cone_equation(&self) -> MPoly {
        &(&self.u1 * &self.u1) - &(&self.u2 * &self.u3)
    }
}

/// `a₁b₁ + a₂b₂`.
pub fn yoneda_relation() -> MPoly {
    &(&v(A1) * &v(B1)) + &(&v(A2) * &v(B2))
}

/// Whether the pulled-back cone equation reduces to zero modulo `ideal`
/// (given by a Gröbner basis; an empty slice is the zero ideal).
pub fn kuranishi_check(sub: &Substitution, ideal: &[MPoly]) -> bool {
    sub.cone_equation().div_rem(ideal).1.is_zero()
}

pub fn kuranishi_identity_check() -> bool {
    kuranishi_check(&Substitution::standard(), &[yoneda_relation()])
}
