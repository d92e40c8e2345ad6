//! Ext dimensions read off from the Mukai pairing.

use crate::mukai::{mukai_pairing, MukaiVector};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ExtDimensions {
    /// `ext¹(O_S(−L), A) = (s, v − s)`.
    pub spherical_to_quotient: i64,
    /// `a² + 2` for `a = v − s`: the moduli space of the quotient.
    pub quotient_moduli: i64,
    /// `v² + 2`: the moduli space of `v`, i.e. `dim S^[3]`.
    pub ambient_moduli: i64,
    /// `a·(v − a)`: the fibre of the extension family.
    pub extension_fibre: i64,
}

pub fn ext_dimensions_for(v: &MukaiVector, s: &MukaiVector) -> ExtDimensions {
    let a = *v - *s;
    ExtDimensions {
        spherical_to_quotient: mukai_pairing(s, &a),
        quotient_moduli: a.square() + 2,
        ambient_moduli: v.square() + 2,
        extension_fibre: mukai_pairing(&a, &(*v - a)),
    }
}

pub fn ext_dimensions() -> ExtDimensions {
    ext_dimensions_for(&MukaiVector::V, &MukaiVector::S)
}
