//! Exact invariant calculus for hyper-Kähler sixfolds of K3^[3]-type, EPW cubes
//! and the Lagrangian fixed locus of their covering involution.
//!
//! Every quantity is computed with exact rational arithmetic. The crate is
//! organised bottom-up:
//!
//! * [`mukai`]: Mukai lattice of a degree-2 K3 surface and the Néron–Severi
//!   lattice of its Hilbert cube.
//! * [`fujiki`]: generalized Fujiki constants and polarized intersection numbers.
//! * [`hodge_ring`]: the graded ring of Hodge classes of a very general polarized
//!   sixfold, parametric in `q = q(h)`.
//! * [`llv`]: LLV-decomposition bookkeeping under an involution.
//! * [`lagrangian`]: class, self-intersection and Chern invariants of the fixed locus.
//! * [`degeneration`]: wall, Pell, Kuranishi and symmetric-product computations.
//! * [`parallel`]: data-parallel sweeps with a sequential fallback.

pub mod degeneration;
pub mod error;
pub mod fujiki;
pub mod hodge_ring;
pub mod lagrangian;
pub mod llv;
pub mod mukai;
pub mod parallel;
pub mod poly;
pub mod rational;

pub use error::{Error, Result};
pub use rational::Rational;
