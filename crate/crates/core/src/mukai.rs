//! Mukai lattice of a degree-2 K3 surface `(S, L)`, `L² = 2`, and the
//! Néron–Severi lattice `ℤL ⊕ ℤδ` of `S^[3]`.
//!
//! Picard rank one is built in: the middle entry of a Mukai vector is always
//! a multiple of `L`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_integer::Integer;

use crate::error::{Error, Result};

/// Mukai vector `(r, c·L, s)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct MukaiVector {
    pub r: i64,
    pub c: i64,
    pub s: i64,
}

impl MukaiVector {
    pub const fn new(r: i64, c: i64, s: i64) -> Self {
        MukaiVector { r, c, s }
    }

    /// `v = (1, 0, -2)`, the Mukai vector of ideal sheaves of length-3 subschemes.
    pub const V: MukaiVector = MukaiVector::new(1, 0, -2);
    /// `s = (1, -L, 2)`, the spherical class of `O_S(-L)`.
    pub const S: MukaiVector = MukaiVector::new(1, -1, 2);
    /// `w = (1, -2L, 2)`, mapped to `2L - δ`.
    pub const W: MukaiVector = MukaiVector::new(1, -2, 2);

    pub fn pairing(&self, other: &MukaiVector) -> i64 {
        mukai_pairing(self, other)
    }

    pub fn square(&self) -> i64 {
        mukai_pairing(self, self)
    }
}

impl fmt::Display for MukaiVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}L, {})", self.r, self.c, self.s)
    }
}

impl Add for MukaiVector {
    type Output = MukaiVector;
    fn add(self, o: MukaiVector) -> MukaiVector {
        MukaiVector::new(self.r + o.r, self.c + o.c, self.s + o.s)
    }
}

impl Sub for MukaiVector {
    type Output = MukaiVector;
    fn sub(self, o: MukaiVector) -> MukaiVector {
        self + (-o)
    }
}

impl Neg for MukaiVector {
    type Output = MukaiVector;
    fn neg(self) -> MukaiVector {
        MukaiVector::new(-self.r, -self.c, -self.s)
    }
}

impl Mul<MukaiVector> for i64 {
    type Output = MukaiVector;
    fn mul(self, v: MukaiVector) -> MukaiVector {
        MukaiVector::new(self * v.r, self * v.c, self * v.s)
    }
}

/// `(v, w) = 2·c_v·c_w − r_v·s_w − r_w·s_v`.
pub fn mukai_pairing(v: &MukaiVector, w: &MukaiVector) -> i64 {
    2 * v.c * w.c - v.r * w.s - w.r * v.s
}

/// Class `a·L + b·δ` in `NS(S^[3])`, with `q(L) = 2`, `q(δ) = -4`, `q(L, δ) = 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct NsClass {
    pub a: i64,
    pub b: i64,
}

impl NsClass {
    pub const fn new(a: i64, b: i64) -> Self {
        NsClass { a, b }
    }

    pub const L: NsClass = NsClass::new(1, 0);
    pub const DELTA: NsClass = NsClass::new(0, 1);

    pub fn is_zero(&self) -> bool {
        self.a == 0 && self.b == 0
    }

    /// Beauville–Bogomolov–Fujiki pairing.
    pub fn bbf(&self, other: &NsClass) -> i64 {
        2 * self.a * other.a - 4 * self.b * other.b
    }

    pub fn square(&self) -> i64 {
        self.bbf(self)
    }
}

impl fmt::Display for NsClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a, self.b) {
            (0, 0) => write!(f, "0"),
            (a, 0) => write!(f, "{a}L"),
            (0, b) => write!(f, "{b}δ"),
            (a, b) if b < 0 => write!(f, "{a}L - {}δ", -b),
            (a, b) => write!(f, "{a}L + {b}δ"),
        }
    }
}

/// Square and divisibility of a class in `H²(S^[3], ℤ) = H²(S, ℤ) ⊕ ℤδ`.
///
/// `L` is primitive in the unimodular lattice `H²(S, ℤ)`, so it pairs to `1`
/// with some class there, while `δ` pairs only with itself (to `-4`). The
/// divisibility of `aL + bδ` is therefore `gcd(a, 4b)`.
pub fn square_and_divisibility(x: &NsClass) -> Result<(i64, i64)> {
    if x.is_zero() {
        return Err(Error::ZeroClass);
    }
    Ok((x.square(), x.a.gcd(&(4 * x.b))))
}

/// Divisibility of `x` inside the rank-2 lattice `ℤL ⊕ ℤδ` alone:
/// `gcd(q(x, L), q(x, δ))`.
pub fn ns_divisibility(x: &NsClass) -> Result<i64> {
    if x.is_zero() {
        return Err(Error::ZeroClass);
    }
    Ok(x.bbf(&NsClass::L).gcd(&x.bbf(&NsClass::DELTA)))
}

/// Inverse of the identification `L = Θ(0, -L, 0)`, `δ = Θ(-1, 0, -2)`.
///
/// Defined on the algebraic sublattice spanned by those two vectors, i.e. the
/// vectors with `s = 2r`.
pub fn theta_map(v: &MukaiVector) -> Result<NsClass> {
    // x·(0,-1,0) + y·(-1,0,-2) = (-y, -x, -2y)
    if v.s != 2 * v.r {
        return Err(Error::NotAlgebraic(v.to_string()));
    }
    Ok(NsClass::new(-v.c, -v.r))
}

/// Gram matrix of the Mukai pairing on `span(v, s)`.
pub fn hyperbolic_lattice(v: &MukaiVector, s: &MukaiVector) -> Result<[[i64; 2]; 2]> {
    let cross = [
        v.r * s.c - v.c * s.r,
        v.r * s.s - v.s * s.r,
        v.c * s.s - v.s * s.c,
    ];
    if cross.iter().all(|&x| x == 0) {
        return Err(Error::Dependent);
    }
    let vs = mukai_pairing(v, s);
    Ok([[v.square(), vs], [vs, s.square()]])
}
