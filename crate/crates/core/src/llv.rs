//! LLV-decomposition bookkeeping for K3^[3]-type under an involution.
//!
//! `H^•(X, ℚ) = V_(3) ⊕ V_(1,1)` where `V_(3)` is the Verbitsky component and
//! `V_(1,1) = ∧²V` with `V = T̄ ⊕ ℚh ⊕ U` (`T̄ = h^⊥`, 22-dimensional, `U` a
//! hyperbolic plane spanned by `e` in LLV weight −1 and `f` in weight +1).
//!
//! The involution acts on `T̄` by `−1` and fixes `h` and `U`. Signs are derived
//! from the tensor structure of each summand: one factor `−1` per `T̄` factor.
//! On `V_(1,1)` the action is that sign (natural case) or its opposite.

use std::fmt;
use std::str::FromStr;

use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::hodge_ring::CHERN_C6;
use crate::rational::binomial;

/// Dimension of `T̄ = h^⊥ ⊂ H²`.
pub const TRANSCENDENTAL_RANK: u64 = 22;

/// Even Betti numbers `b₀, b₂, …, b₁₂` of K3^[3]-type.
pub const BETTI: [u64; 7] = [1, 23, 299, 2554, 299, 23, 1];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum InvolutionCase {
    /// `V_(1,1)` acted on by the map induced from `V`.
    Natural,
    /// `V_(1,1)` acted on by minus that map.
    Opposite,
}

impl InvolutionCase {
    pub const BOTH: [InvolutionCase; 2] = [InvolutionCase::Natural, InvolutionCase::Opposite];

    pub fn name(self) -> &'static str {
        match self {
            InvolutionCase::Natural => "natural",
            InvolutionCase::Opposite => "opposite",
        }
    }
}

impl fmt::Display for InvolutionCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for InvolutionCase {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "natural" => Ok(InvolutionCase::Natural),
            "opposite" => Ok(InvolutionCase::Opposite),
            other => Err(Error::UnknownLabel(other.to_string())),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Component {
    Verbitsky,
    V11,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SummandLabel {
    /// `Sym^sym T̄ · h^h` inside the Verbitsky component; `sym = 0` is the h-monomial.
    SymT { sym: u32, h: u32 },
    /// `∧²T̄`
    WedgeTT,
    /// `h ∧ T̄`
    HWedgeT,
    /// `∧²U`
    WedgeU,
    /// `T̄`-slice of `V_(1,1)` in degree 4 (`e∧T̄`) or 8 (`f∧T̄`).
    SliceT,
    /// `h`-slice of `V_(1,1)` in degree 4 (`e∧h`) or 8 (`f∧h`).
    SliceH,
}

impl SummandLabel {
    pub fn component(self) -> Component {
        match self {
            SummandLabel::SymT { .. } => Component::Verbitsky,
            _ => Component::V11,
        }
    }
}

impl fmt::Display for SummandLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            SummandLabel::SymT { sym: 0, h } => write!(f, "h^{h}"),
            SummandLabel::SymT { sym, h: 0 } => write!(f, "Sym^{sym} T"),
            SummandLabel::SymT { sym, h } => write!(f, "Sym^{sym} T . h^{h}"),
            SummandLabel::WedgeTT => f.write_str("wedge^2 T"),
            SummandLabel::HWedgeT => f.write_str("h wedge T"),
            SummandLabel::WedgeU => f.write_str("wedge^2 U"),
            SummandLabel::SliceT => f.write_str("T-slice of V(1,1)"),
            SummandLabel::SliceH => f.write_str("h-slice of V(1,1)"),
        }
    }
}

/// One irreducible piece (under the Mumford–Tate algebra of `T̄`) of `H^degree`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LlvSummand {
    pub degree: u32,
    pub label: SummandLabel,
    pub dimension: u64,
    pub sign_natural: i8,
    pub sign_opposite: i8,
}

impl LlvSummand {
    fn from_tensor(degree: u32, label: SummandLabel, dimension: u64, t_factors: u32) -> Self {
        let sign_natural = if t_factors.is_multiple_of(2) { 1 } else { -1 };
        let sign_opposite = match label.component() {
            Component::Verbitsky => sign_natural,
            Component::V11 => -sign_natural,
        };
        LlvSummand {
            degree,
            label,
            dimension,
            sign_natural,
            sign_opposite,
        }
    }

    pub fn sign(&self, case: InvolutionCase) -> i8 {
        match case {
            InvolutionCase::Natural => self.sign_natural,
            InvolutionCase::Opposite => self.sign_opposite,
        }
    }

    pub fn component(&self) -> Component {
        self.label.component()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RepKind {
    Sym(u32),
    Wedge2,
}

pub fn rep_dimension(kind: RepKind, n: u64) -> u64 {
    let d = match kind {
        // Sym^k of the zero space is 1 for k = 0 and 0 otherwise
        RepKind::Sym(k) if n == 0 => return u64::from(k == 0),
        RepKind::Sym(k) => binomial(n + k as u64 - 1, k as u64),
        RepKind::Wedge2 => binomial(n, 2),
    };
    d.to_u64().expect("dimension fits in u64")
}

/// Basis "atoms" of `V = T̄ ⊕ ℚh ⊕ U` with their LLV weight.
#[derive(Clone, Copy, PartialEq, Eq)]
enum Atom {
    T,
    H,
    E,
    F,
}

impl Atom {
    fn weight(self) -> i32 {
        match self {
            Atom::E => -1,
            Atom::F => 1,
            Atom::T | Atom::H => 0,
        }
    }
}

fn wedge_summands() -> Vec<LlvSummand> {
    use Atom::*;
    let atoms = [T, H, E, F];
    let mut out = Vec::new();
    for (i, &a) in atoms.iter().enumerate() {
        for &b in &atoms[i..] {
            if a == b && a != T {
                continue; // ∧² of a line is zero
            }
            let degree = (6 + 2 * (a.weight() + b.weight())) as u32;
            let t = u32::from(a == T) + u32::from(b == T);
            let (label, dim) = match (a, b) {
                (T, T) => (
                    SummandLabel::WedgeTT,
                    rep_dimension(RepKind::Wedge2, TRANSCENDENTAL_RANK),
                ),
                (T, H) => (SummandLabel::HWedgeT, TRANSCENDENTAL_RANK),
                (T, E) | (T, F) => (SummandLabel::SliceT, TRANSCENDENTAL_RANK),
                (H, E) | (H, F) => (SummandLabel::SliceH, 1),
                (E, F) => (SummandLabel::WedgeU, 1),
                _ => unreachable!("pairs enumerated in order T, H, E, F"),
            };
            out.push(LlvSummand::from_tensor(degree, label, dim, t));
        }
    }
    out
}

/// Verbitsky part of `H^{2k}`: `Sym^d V̄ = ⊕_j Sym^j T̄ · h^{k−j}`, `d = min(k, 6−k)`.
fn verbitsky_summands(k: u32) -> Vec<LlvSummand> {
    let d = k.min(6 - k);
    (0..=d)
        .rev()
        .map(|j| {
            LlvSummand::from_tensor(
                2 * k,
                SummandLabel::SymT { sym: j, h: k - j },
                rep_dimension(RepKind::Sym(j), TRANSCENDENTAL_RANK),
                j,
            )
        })
        .collect()
}

/// All summands in degrees 0..=12, ordered by degree, Verbitsky part first.
///
/// Every summand carries both sign columns, so the table itself is the same
/// for either case; [`LlvSummand::sign`] selects the column.
pub fn summand_table(_case: InvolutionCase) -> Vec<LlvSummand> {
    let wedge = wedge_summands();
    let mut out = Vec::new();
    for k in 0..=6u32 {
        out.extend(verbitsky_summands(k));
        out.extend(wedge.iter().filter(|s| s.degree == 2 * k).cloned());
    }
    out
}

/// Dimension of the invariant subspace of `H^degree` (optionally inside one component).
pub fn invariant_dimension(case: InvolutionCase, degree: u32, component: Option<Component>) -> u64 {
    summand_table(case)
        .iter()
        .filter(|s| s.degree == degree && component.is_none_or(|c| s.component() == c))
        .filter(|s| s.sign(case) == 1)
        .map(|s| s.dimension)
        .sum()
}

pub fn anti_invariant_dimension(case: InvolutionCase, degree: u32) -> u64 {
    summand_table(case)
        .iter()
        .filter(|s| s.degree == degree && s.sign(case) == -1)
        .map(|s| s.dimension)
        .sum()
}

/// Betti numbers `b₀, b₂, …, b₁₂` of `X` recovered from the table.
pub fn betti_numbers() -> [u64; 7] {
    let table = summand_table(InvolutionCase::Natural);
    let mut out = [0u64; 7];
    for s in &table {
        out[(s.degree / 2) as usize] += s.dimension;
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct QuotientBetti {
    pub b0: u64,
    pub b2: u64,
    pub b4: u64,
    pub b6: u64,
}

/// Betti numbers of `X/ι`: the invariant parts of `H^0..H^6`.
pub fn betti_of_quotient(case: InvolutionCase) -> QuotientBetti {
    let b = |d| invariant_dimension(case, d, None);
    QuotientBetti {
        b0: b(0),
        b2: b(2),
        b4: b(4),
        b6: b(6),
    }
}

/// `χ_top(X/ι) = 2(b₀ + b₂ + b₄) + b₆`.
pub fn euler_of_quotient(case: InvolutionCase) -> i64 {
    let b = betti_of_quotient(case);
    (2 * (b.b0 + b.b2 + b.b4) + b.b6) as i64
}

/// `χ_top(Fix) = 2·χ_top(X/ι) − χ_top(X)` for a double cover branched along the fixed locus.
pub fn euler_of_fixed_locus(case: InvolutionCase) -> i64 {
    2 * euler_of_quotient(case) - CHERN_C6
}
