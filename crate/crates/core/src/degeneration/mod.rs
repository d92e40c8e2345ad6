//! Degenerations of the EPW cube: the Bridgeland wall for `v = (1, 0, -2)`,
//! spherical classes, local deformation checks and the intersection calculus
//! on symmetric products of a genus-10 curve.

pub mod ext;
pub mod f3;
pub mod kuranishi;
pub mod pell;
pub mod symprod;
pub mod wall;

pub use ext::{ext_dimensions, ext_dimensions_for, ExtDimensions};
pub use f3::{f3_hodge_relations, plane_curve_genus, F3Relations};
pub use kuranishi::{
    kuranishi_check, kuranishi_identity_check, yoneda_relation, MPoly, Substitution,
};
pub use pell::{hyperbolic_square, pell_box_scan, pell_spherical_classes, PellSolution};
pub use symprod::{jacobian_class_of_e, sym_prod_eval, theta_characteristic_counts, SymProdClass};
pub use wall::{central_charge, effectivity_ratio, WallCharge, WallPoint};
