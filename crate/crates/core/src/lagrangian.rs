//! Class and numerical invariants of a Lagrangian threefold `W` in a very
//! general polarized sixfold of K3^[3]-type, specialised to the fixed locus
//! of the EPW involution.
//!
//! Write `[W] = a·h³ + b·hc₂ + c·η`. Pairing with `h·σ·σ̄` (which kills `[W]`)
//! forces `a = −(12/q)·b`, and `[W]·h³` fixes `b`.

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::hodge_ring::{HodgeClass, HodgeRing};
use crate::llv::{euler_of_fixed_locus, InvolutionCase};
use crate::rational::{frac, int, rational_sqrt, Rational};

/// `Z_A^{≥2}·h³`, the degree of the EPW cube's image.
pub const EPW_DEGREE: i64 = 720;
/// `q(h)` for the EPW polarization.
pub const EPW_Q: i64 = 4;

/// Coefficient of `η`: a rational number, or ruled out because the equation
/// it must satisfy has no rational solution.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EtaCoefficient {
    Rational(Rational),
    IrrationalExcluded,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LagrangianClassData {
    pub degree: Rational,
    pub q: Rational,
    pub a: Rational,
    pub b: Rational,
    pub c: EtaCoefficient,
}

fn require_positive(q: &Rational) -> Result<()> {
    if q.is_positive() {
        Ok(())
    } else {
        Err(Error::NonPositive(q.to_string()))
    }
}

/// Projection of `[W]` to the Verbitsky component: returns `(a, b)` with
/// `b = −degree/(72q²)` and `a = −(12/q)·b = degree/(6q³)`.
pub fn project_lagrangian_class(degree: &Rational, q: &Rational) -> Result<(Rational, Rational)> {
    require_positive(q)?;
    let b = -degree / (int(72) * q * q);
    let a = -(int(12) / q) * &b;
    Ok((a, b))
}

/// `[W]²` for `[W] = a·h³ + b·hc₂ + c·η`, through the ring pairing.
pub fn self_intersection(
    a: &Rational,
    b: &Rational,
    c: &Rational,
    q: &Rational,
) -> Result<Rational> {
    require_positive(q)?;
    let ring = HodgeRing::at(q)?;
    let w = HodgeClass::degree6(a.clone(), b.clone(), c.clone());
    ring.pair(&w, &w)?.eval(q)
}

/// One candidate Euler characteristic tested against `−χ_top = [W]² = V + 4c²`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CaseCandidate {
    pub case: InvolutionCase,
    pub chi_top: i64,
    /// `4c² = −χ_top − V`.
    pub four_c_squared: Rational,
    /// A rational `c ≥ 0` if one exists.
    pub c: Option<Rational>,
}

impl CaseCandidate {
    pub fn admissible(&self) -> bool {
        self.c.is_some()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Disambiguation {
    pub case: InvolutionCase,
    pub c: Rational,
    pub chi_top: i64,
    /// `[W]²` computed in the ring (with the chosen `c`).
    pub ring_self_intersection: Rational,
    pub candidates: Vec<CaseCandidate>,
}

impl Disambiguation {
    /// The ring yields `[W]² = −χ_top`; a reader expecting `[W]² = χ_top`
    /// sees the opposite sign. True when the two conventions disagree.
    pub fn sign_convention_flag(&self) -> bool {
        self.ring_self_intersection != int(self.chi_top)
    }
}

/// Tests each `(case, χ_top)` against `−χ_top = [W̄]² + 4c²` and keeps the
/// cases where `c` is rational.
pub fn disambiguate(
    degree: &Rational,
    q: &Rational,
    candidates: &[(InvolutionCase, i64)],
) -> Result<Disambiguation> {
    let (a, b) = project_lagrangian_class(degree, q)?;
    let verbitsky = self_intersection(&a, &b, &Rational::zero(), q)?;
    let tested: Vec<CaseCandidate> = candidates
        .iter()
        .map(|&(case, chi_top)| {
            let four_c_squared = -int(chi_top) - &verbitsky;
            let c = rational_sqrt(&(&four_c_squared / int(4)));
            CaseCandidate {
                case,
                chi_top,
                four_c_squared,
                c,
            }
        })
        .collect();
    let mut admissible = tested.iter().filter(|c| c.admissible());
    let chosen = admissible.next().ok_or(Error::NoAdmissibleCase)?;
    if admissible.next().is_some() {
        return Err(Error::AmbiguousCase);
    }
    let c = chosen.c.clone().expect("admissible");
    let ring_self_intersection = self_intersection(&a, &b, &c, q)?;
    Ok(Disambiguation {
        case: chosen.case,
        c,
        chi_top: chosen.chi_top,
        ring_self_intersection,
        candidates: tested,
    })
}

/// The two Euler characteristics allowed by the LLV analysis.
pub fn epw_candidates() -> Vec<(InvolutionCase, i64)> {
    InvolutionCase::BOTH
        .iter()
        .map(|&case| (case, euler_of_fixed_locus(case)))
        .collect()
}

pub fn disambiguate_involution_case(degree: &Rational, q: &Rational) -> Result<Disambiguation> {
    disambiguate(degree, q, &epw_candidates())
}

/// Full class data after disambiguation.
pub fn lagrangian_class(degree: &Rational, q: &Rational) -> Result<LagrangianClassData> {
    let (a, b) = project_lagrangian_class(degree, q)?;
    let c = match disambiguate_involution_case(degree, q) {
        Ok(d) => EtaCoefficient::Rational(d.c),
        Err(Error::NoAdmissibleCase) => EtaCoefficient::IrrationalExcluded,
        Err(e) => return Err(e),
    };
    Ok(LagrangianClassData {
        degree: degree.clone(),
        q: q.clone(),
        a,
        b,
        c,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FixedLocusInvariants {
    /// `∫_W c₁c₂`
    pub c1c2: Rational,
    pub chi_o: Rational,
    pub chi_omega1: Rational,
    pub c3: Rational,
    /// `K_W³` with `K_W = 2h|_W`.
    pub k_cubed: Rational,
    pub disambiguation: Disambiguation,
}

/// Chern and Euler invariants of the fixed locus from
/// `c₁(T_W) = −2h|`, `c₂(T_W) = ½c₂| + 2h²|` and Hirzebruch–Riemann–Roch.
pub fn fixed_locus_invariants(degree: &Rational, q: &Rational) -> Result<FixedLocusInvariants> {
    let disambiguation = disambiguate_involution_case(degree, q)?;
    let (a, b) = project_lagrangian_class(degree, q)?;
    let w = HodgeClass::degree6(a, b, disambiguation.c.clone());
    let ring = HodgeRing::at(q)?;
    // c₁c₂ = (−2h)(½c₂ + 2h²) = −(4h³ + hc₂)
    let c1c2_class = HodgeClass::degree6(int(-4), int(-1), Rational::zero());
    let c1c2 = ring.pair(&c1c2_class, &w)?.eval(q)?;
    let k_cubed = ring
        .pair(
            &HodgeClass::degree6(int(8), Rational::zero(), Rational::zero()),
            &w,
        )?
        .eval(q)?;
    let chi_o = &c1c2 / int(24);
    let c3 = int(disambiguation.chi_top);
    let chi_omega1 = &chi_o - &c3 * frac(1, 2);
    Ok(FixedLocusInvariants {
        c1c2,
        chi_o,
        chi_omega1,
        c3,
        k_cubed,
        disambiguation,
    })
}

/// `½χ_top = χ(O) − χ(Ω¹)`, which holds for any smooth projective threefold
/// by Hodge symmetry.
pub fn hodge_symmetry_relation(
    chi_o: &Rational,
    chi_omega1: &Rational,
    chi_top: &Rational,
) -> bool {
    chi_top * frac(1, 2) == chi_o - chi_omega1
}
