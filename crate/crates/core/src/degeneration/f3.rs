//! Hodge-number relations for the fixed locus `W_A` obtained from the
//! threefold component `F₃` of the degenerate fixed locus.
//!
//! `h^{0,2}(W_A)` and `h^{1,1}(W_A)` themselves stay unknown: they depend on
//! `coker(res₁)` and `H²(W, R)`, which are carried as named unknowns.

use num_traits::Zero;

use crate::error::Result;
use crate::lagrangian::{fixed_locus_invariants, EPW_DEGREE, EPW_Q};
use crate::rational::{binomial, int, Rational};

/// Unknowns the relations are expressed in terms of.
pub const UNKNOWNS: [&str; 2] = ["dim coker(res_1)", "dim H^2(W, R)"];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct F3Relations {
    pub genus: u64,
    /// `h¹(F₃, O)`.
    pub h1_f3_structure_sheaf: Rational,
    /// `h^{0,2}(W_A) ≥ C(g, 2)`.
    pub h02_lower_bound: Rational,
    /// `h^{0,3} − h^{0,2} = 1 − χ(O_{W_A})`.
    pub h03_offset: Rational,
    /// `h^{1,2} − h^{0,2} − h^{1,1} = χ(Ω¹_{W_A})`.
    pub h12_offset: Rational,
    pub unknowns: Vec<&'static str>,
}

impl F3Relations {
    pub fn h03(&self, h02: &Rational) -> Rational {
        h02 + &self.h03_offset
    }

    pub fn h12(&self, h02: &Rational, h11: &Rational) -> Rational {
        h02 + h11 + &self.h12_offset
    }
}

/// Genus of a smooth plane curve of degree `d`.
pub fn plane_curve_genus(d: u64) -> u64 {
    if d == 0 {
        return 0;
    }
    (d - 1) * d.saturating_sub(2) / 2
}

/// Relations for the genus-`g` curve of the degeneration (a plane sextic
/// gives `g = 10`). The offsets come from the fixed-locus invariants of the
/// EPW cube, using `h^{1,0} = 0` and Hodge symmetry.
pub fn f3_hodge_relations(g: u64) -> Result<F3Relations> {
    let inv = fixed_locus_invariants(&int(EPW_DEGREE), &int(EPW_Q))?;
    Ok(F3Relations {
        genus: g,
        h1_f3_structure_sheaf: Rational::zero(),
        h02_lower_bound: Rational::from_integer(binomial(g, 2)),
        h03_offset: int(1) - &inv.chi_o,
        h12_offset: inv.chi_omega1,
        unknowns: UNKNOWNS.to_vec(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn sextic() {
        assert_eq!(plane_curve_genus(6), 10);
        assert_eq!(plane_curve_genus(3), 1);
        assert_eq!(plane_curve_genus(1), 0);
        assert_eq!(plane_curve_genus(2), 0);
    }

    #[test]
    fn relations_at_genus_ten() {
        let r = f3_hodge_relations(plane_curve_genus(6)).unwrap();
        assert_eq!(r.h1_f3_structure_sheaf, int(0));
        assert_eq!(r.h02_lower_bound, int(45));
        assert_eq!(r.h03_offset, int(131));
        assert_eq!(r.h12_offset, int(470));
        assert_eq!(r.unknowns.len(), 2);
        assert_eq!(r.h03(&int(45)), int(176));
    }

    proptest! {
        /// Assemble a full Hodge diamond from the unknowns and recover the
        /// holomorphic Euler characteristics and the topological one.
        #[test]
        fn diamond_is_consistent(h02 in 0i64..500, h11 in 1i64..500) {
            let r = f3_hodge_relations(10).unwrap();
            let (h02, h11) = (int(h02), int(h11));
            let h03 = r.h03(&h02);
            let h12 = r.h12(&h02, &h11);
            // diamond[p][q] = h^{p,q}, with h^{1,0} = 0
            let diamond = [
                [int(1), int(0), h02.clone(), h03.clone()],
                [int(0), h11.clone(), h12.clone(), h02.clone()],
                [h02.clone(), h12.clone(), h11.clone(), int(0)],
                [h03.clone(), h02.clone(), int(0), int(1)],
            ];
            let chi = |p: usize| (0..4).fold(Rational::zero(), |acc, q| {
                if q % 2 == 0 { acc + &diamond[p][q] } else { acc - &diamond[p][q] }
            });
            prop_assert_eq!(chi(0), int(-130));
            prop_assert_eq!(chi(1), int(470));
            let top = (0..4).fold(Rational::zero(), |acc, p| if p % 2 == 0 { acc + chi(p) } else { acc - chi(p) });
            prop_assert_eq!(top, int(-1200));
        }
    }
}
