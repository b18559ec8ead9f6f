//! Exact enumeration engine for Borel orbits on complete quadrics.
//!
//! The orbit count `b(X_n)` is computed by several independent routes
//! (composition sums, skew standard Young tableaux, modified Hermite
//! polynomials and a descent scan over parabolic coset representatives) that
//! are cross-checked against one another and against brute-force oracles.
//!
//! Module map:
//! - [`arith`]: factorials, multinomials and dense integer polynomials.
//! - [`tableaux`]: partitions, skew shapes, SYT counts and involutions.
//! - [`hermite`]: modified Hermite polynomials and the Hermite orbit count.
//! - [`perm`]: permutations in one-line notation.
//! - [`coxeter`]: descents, parabolic subsets, coset representatives and the
//!   `B_{n,J}(q)` enumerators.
//! - [`orbits`]: the orbit-count engine, bounds and asymptotics.

pub mod arith;
pub mod coxeter;
mod error;
pub mod hermite;
pub mod orbits;
pub mod perm;
pub mod tableaux;

pub use error::{Error, Result};

/// Size limits for the brute-force routines.
///
/// Every routine that enumerates permutations or tableau fillings grows like
/// `n!`; these limits turn an accidental huge request into an error instead of
/// a hang.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Cutoffs {
    /// Largest `n` for permutation scans (descent sums, involution listing).
    pub perm_scan: usize,
    /// Largest number of boxes for brute-force tableau enumeration.
    pub boxes: usize,
}

impl Cutoffs {
    pub const DEFAULT_PERM_SCAN: usize = 9;
    pub const DEFAULT_BOXES: usize = 10;
}

impl Default for Cutoffs {
    fn default() -> Self {
        Cutoffs {
            perm_scan: Self::DEFAULT_PERM_SCAN,
            boxes: Self::DEFAULT_BOXES,
        }
    }
}
