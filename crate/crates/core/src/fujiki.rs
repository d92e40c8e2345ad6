//! Generalized Fujiki constants of K3^[3]-type and polarized intersection numbers.
//!
//! For an absolute class `α` of degree `4k` and degree-2 classes `β₁..β₂ₘ`
//! (`2m = 6 − 2k`),
//!
//! ```text
//! ∫ α·β₁⋯β₂ₘ = C(α) / (2m−1)!! · Σ_{perfect matchings M} Π_{(i,j)∈M} q(βᵢ, βⱼ)
//! ```
//!
//! which is the symmetrized permutation sum with each matching counted once
//! instead of `2^m·m!` times.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::ParametricScalar;
use crate::rational::{int, odd_double_factorial, Rational};

/// The four absolute classes whose Fujiki constants are tabulated.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AbsoluteClass {
    One,
    C2,
    C2Squared,
    C4,
}

impl AbsoluteClass {
    pub const ALL: [AbsoluteClass; 4] = [
        AbsoluteClass::One,
        AbsoluteClass::C2,
        AbsoluteClass::C2Squared,
        AbsoluteClass::C4,
    ];

    /// Cohomological degree `4k`.
    pub fn degree(self) -> u32 {
        match self {
            AbsoluteClass::One => 0,
            AbsoluteClass::C2 => 4,
            AbsoluteClass::C2Squared | AbsoluteClass::C4 => 8,
        }
    }

    /// Number of degree-2 classes needed to reach the top degree.
    pub fn codegree(self) -> usize {
        (12 - self.degree() as usize) / 2
    }
}

impl fmt::Display for AbsoluteClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            AbsoluteClass::One => "1",
            AbsoluteClass::C2 => "c2",
            AbsoluteClass::C2Squared => "c2^2",
            AbsoluteClass::C4 => "c4",
        })
    }
}

impl FromStr for AbsoluteClass {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "1" => Ok(AbsoluteClass::One),
            "c2" => Ok(AbsoluteClass::C2),
            "c2^2" | "c2c2" => Ok(AbsoluteClass::C2Squared),
            "c4" => Ok(AbsoluteClass::C4),
            other => Err(Error::UnknownLabel(other.to_string())),
        }
    }
}

/// `C(α)` for K3^[3]-type.
pub fn fujiki_constant(alpha: AbsoluteClass) -> Rational {
    int(match alpha {
        AbsoluteClass::One => 15,
        AbsoluteClass::C2 => 108,
        AbsoluteClass::C2Squared => 1200,
        AbsoluteClass::C4 => 480,
    })
}

/// Parses a label and looks it up.
pub fn fujiki_constant_by_label(label: &str) -> Result<Rational> {
    label.parse().map(fujiki_constant)
}

/// `∫ α·β^{2m} = C(α)·q(β)^m` with `q(β)` possibly symbolic.
pub fn specialized_integral(alpha: AbsoluteClass, q_beta: &ParametricScalar) -> ParametricScalar {
    let m = alpha.codegree() as u32 / 2;
    &ParametricScalar::constant(fujiki_constant(alpha)) * &q_beta.pow(m)
}

/// A perfect matching on `{0, .., n-1}` as a list of pairs `(i, j)`, `i < j`.
pub type Matching = Vec<(usize, usize)>;

pub const MAX_MATCHING_POINTS: usize = 8;

/// All perfect matchings of `n` points: `(n−1)!!` of them.
pub fn enumerate_matchings(n: usize) -> Result<Vec<Matching>> {
    if n % 2 == 1 {
        return Err(Error::OddMatching(n));
    }
    if n > MAX_MATCHING_POINTS {
        return Err(Error::MatchingTooLarge {
            max: MAX_MATCHING_POINTS,
            got: n,
        });
    }
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(n / 2);
    let points: Vec<usize> = (0..n).collect();
    extend_matchings(&points, &mut current, &mut out);
    Ok(out)
}

fn extend_matchings(rest: &[usize], current: &mut Matching, out: &mut Vec<Matching>) {
    let Some((&first, tail)) = rest.split_first() else {
        out.push(current.clone());
        return;
    };
    for k in 0..tail.len() {
        current.push((first, tail[k]));
        let remaining: Vec<usize> = tail
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != k)
            .map(|(_, &p)| p)
            .collect();
        extend_matchings(&remaining, current, out);
        current.pop();
    }
}

/// Degree-2 classes given by name together with their BBF pairings.
///
/// Pairings not declared are zero; the table is symmetric by construction.
#[derive(Clone, Debug, Default)]
pub struct AbstractClassSpace {
    labels: Vec<String>,
    gram: BTreeMap<(usize, usize), Rational>,
}

impl AbstractClassSpace {
    pub fn new<S: Into<String>>(labels: impl IntoIterator<Item = S>) -> Self {
        AbstractClassSpace {
            labels: labels.into_iter().map(Into::into).collect(),
            gram: BTreeMap::new(),
        }
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn index(&self, label: &str) -> Result<usize> {
        self.labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    /// Declares `q(a, b) = value` (and hence `q(b, a)`).
    pub fn set(&mut self, a: &str, b: &str, value: Rational) -> Result<&mut Self> {
        let (i, j) = (self.index(a)?, self.index(b)?);
        self.gram.insert((i.min(j), i.max(j)), value);
        Ok(self)
    }

    pub fn with(mut self, a: &str, b: &str, value: Rational) -> Result<Self> {
        self.set(a, b, value)?;
        Ok(self)
    }

    pub fn pairing_idx(&self, i: usize, j: usize) -> Rational {
        self.gram
            .get(&(i.min(j), i.max(j)))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn pairing(&self, a: &str, b: &str) -> Result<Rational> {
        Ok(self.pairing_idx(self.index(a)?, self.index(b)?))
    }

    /// A polarized sixfold with polarization `h`, `q(h) = q_h`, and a symplectic
    /// form `σ` with `q(σ, h) = q(σ, σ) = 0` and `q(σ, σ̄) = q_sigma`.
    pub fn polarized_with_symplectic(q_h: Rational, q_sigma: Rational) -> Self {
        AbstractClassSpace::new(["h", "sigma", "sigmabar"])
            .with("h", "h", q_h)
            .and_then(|s| s.with("sigma", "sigmabar", q_sigma))
            .expect("labels declared above")
    }
}

fn matching_sum(space: &AbstractClassSpace, idx: &[usize]) -> Result<Rational> {
    let matchings = enumerate_matchings(idx.len())?;
    Ok(matchings
        .iter()
        .map(|m| {
            m.iter()
                .map(|&(i, j)| space.pairing_idx(idx[i], idx[j]))
                .fold(Rational::one(), |acc, x| acc * x)
        })
        .fold(Rational::zero(), |acc, x| acc + x))
}

/// `∫ α·β₁⋯β_{6−2k}` for labelled degree-2 classes.
pub fn polarized_integral(
    alpha: AbsoluteClass,
    betas: &[&str],
    space: &AbstractClassSpace,
) -> Result<Rational> {
    let expected = alpha.codegree();
    if betas.len() != expected {
        return Err(Error::Arity {
            expected,
            got: betas.len(),
        });
    }
    let idx = betas
        .iter()
        .map(|b| space.index(b))
        .collect::<Result<Vec<_>>>()?;
    let sum = matching_sum(space, &idx)?;
    let norm = Rational::from_integer(odd_double_factorial(expected as u64 / 2));
    Ok(fujiki_constant(alpha) * sum / norm)
}
