//! Spherical classes `u = x·v + y·s` in the hyperbolic lattice `⟨v, s⟩`:
//! `u² = 4x² − 2y² = −2`, i.e. `2x² − y² = −1`.

use num_integer::Roots;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PellSolution {
    pub x: i64,
    pub y: i64,
}

impl PellSolution {
    /// `Re(Z(u)/Z(v)) = x + y/2` has the sign of `2x + y`.
    pub fn effective_sign(&self) -> i64 {
        (2 * i128::from(self.x) + i128::from(self.y)).signum() as i64
    }

    /// A class with `x < 0` is never on the positive side of the wall.
    pub fn respects_effectivity(&self) -> bool {
        self.x >= 0 || self.effective_sign() < 0
    }
}

/// Square of `x·v + y·s` in the lattice `diag(4, −2)`.
pub fn hyperbolic_square(x: i64, y: i64) -> i128 {
    4 * i128::from(x) * i128::from(x) - 2 * i128::from(y) * i128::from(y)
}

/// All solutions of `2x² − y² = −1` with `|x| ≤ bound`, sorted.
///
/// Non-negative solutions are the orbit of `(0, 1)` under
/// `(x, y) ↦ (3x + 2y, 4x + 3y)`; the rest follow by sign changes.
pub fn pell_spherical_classes(bound: u64) -> Vec<PellSolution> {
    let bound = i128::from(bound);
    let mut out = Vec::new();
    let (mut x, mut y) = (0i128, 1i128);
    while x <= bound {
        for sx in [-1, 1] {
            for sy in [-1, 1] {
                out.push(PellSolution {
                    x: (sx * x) as i64,
                    y: (sy * y) as i64,
                });
            }
        }
        (x, y) = (3 * x + 2 * y, 4 * x + 3 * y);
    }
    out.sort();
    out.dedup();
    out
}

/// Brute-force scan of the rows `x_lo..=x_hi`, unsorted.
pub fn pell_box_scan_range(x_lo: i64, x_hi: i64) -> Vec<PellSolution> {
    let mut out = Vec::new();
    for x in x_lo..=x_hi {
        let rhs = 2 * i128::from(x) * i128::from(x) + 1;
        let y = rhs.sqrt();
        if y * y == rhs {
            let y = y as i64;
            out.push(PellSolution { x, y: -y });
            out.push(PellSolution { x, y });
        }
    }
    out
}

/// Brute-force enumeration over `|x| ≤ bound`, sorted.
pub fn pell_box_scan(bound: u64) -> Vec<PellSolution> {
    let b = bound as i64;
    let mut out = pell_box_scan_range(-b, b);
    out.sort();
    out
}
