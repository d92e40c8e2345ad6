//! Sweeps over many independent inputs. With the `parallel` feature the work
//! is spread over the rayon pool; without it every sweep runs sequentially
//! and gives identical output.

use crate::degeneration::pell::{pell_box_scan_range, PellSolution};
use crate::error::Result;
use crate::fujiki::{fujiki_constant, polarized_integral, AbsoluteClass, AbstractClassSpace};
use crate::hodge_ring::{chern_numbers_from_ring, ChernNumbers};
use crate::rational::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Execution {
    Sequential,
    /// Falls back to sequential when built without the `parallel` feature.
    Parallel,
}

impl Default for Execution {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            Execution::Parallel
        } else {
            Execution::Sequential
        }
    }
}

pub fn parallel_available() -> bool {
    cfg!(feature = "parallel")
}

/// Order-preserving map.
pub fn map_items<T, U, F>(exec: Execution, items: &[T], f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Sync + Send,
{
    match exec {
        #[cfg(feature = "parallel")]
        Execution::Parallel => {
            use rayon::prelude::*;
            items.par_iter().map(f).collect()
        }
        _ => items.iter().map(f).collect(),
    }
}

/// Chern numbers from the ring at every `q`.
pub fn chern_sweep(exec: Execution, qs: &[Rational]) -> Result<Vec<ChernNumbers>> {
    map_items(exec, qs, chern_numbers_from_ring)
        .into_iter()
        .collect()
}

/// For each `q`, whether `∫ α·h^{6−2k} = C(α)·q^{3−k}` holds for all four `α`
/// when the integral is expanded over perfect matchings.
pub fn fujiki_sweep(exec: Execution, qs: &[Rational]) -> Result<Vec<bool>> {
    map_items(exec, qs, |q| {
        let space = AbstractClassSpace::new(["h"]).with("h", "h", q.clone())?;
        AbsoluteClass::ALL.iter().try_fold(true, |ok, &alpha| {
            let n = alpha.codegree();
            let lhs = polarized_integral(alpha, &vec!["h"; n], &space)?;
            let rhs = fujiki_constant(alpha) * num_traits::pow(q.clone(), n / 2);
            Ok(ok && lhs == rhs)
        })
    })
    .into_iter()
    .collect()
}

const PELL_CHUNK: i64 = 1 << 14;

/// Brute-force solutions of `2x² − y² = −1` with `|x| ≤ bound`, sorted.
pub fn pell_scan(exec: Execution, bound: u64) -> Vec<PellSolution> {
    let b = bound as i64;
    let starts: Vec<i64> = (-b..=b).step_by(PELL_CHUNK as usize).collect();
    let mut out: Vec<PellSolution> = map_items(exec, &starts, |&lo| {
        pell_box_scan_range(lo, (lo + PELL_CHUNK - 1).min(b))
    })
    .into_iter()
    .flatten()
    .collect();
    out.sort();
    out
}
