//! Gröbner bases, ideal operations, syzygies and free resolutions.

mod buchberger;
mod ideal;
mod modules;
mod resolution;

pub use buchberger::{buchberger, normal_form, GroebnerBasis};
pub use ideal::Ideal;
pub use modules::{syzygies, syzygies_of, Syzygy};
pub use resolution::{minimal_free_resolution, BettiTable, FreeResolution};

use std::sync::atomic::{AtomicU32, AtomicUsize, Ordering as AtomicOrdering};

use crate::error::Result;
use crate::exactalg::Polynomial;

/// Resource limits for a single Gröbner computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    /// Largest S-pair degree processed.
    pub max_degree: u32,
    /// Largest number of simultaneously active basis elements.
    pub max_basis: usize,
}

static DEFAULT_MAX_DEGREE: AtomicU32 = AtomicU32::new(60);
static DEFAULT_MAX_BASIS: AtomicUsize = AtomicUsize::new(20_000);

impl Default for Budget {
    /// Process-wide limits, initially degree 60 and 20000 elements.
    fn default() -> Self {
        Budget {
            max_degree: DEFAULT_MAX_DEGREE.load(AtomicOrdering::Relaxed),
            max_basis: DEFAULT_MAX_BASIS.load(AtomicOrdering::Relaxed),
        }
    }
}

impl Budget {
    /// Changes the limits every later `Budget::default()` returns.
    pub fn set_default(b: Budget) {
        DEFAULT_MAX_DEGREE.store(b.max_degree, AtomicOrdering::Relaxed);
        DEFAULT_MAX_BASIS.store(b.max_basis, AtomicOrdering::Relaxed);
    }
}

pub fn hilbert_function(i: &Ideal, d_max: u32) -> Result<Vec<u64>> {
    i.hilbert_function(d_max)
}

pub fn krull_dimension(i: &Ideal) -> Result<usize> {
    i.krull_dimension()
}

/// Eliminates the variables at positions `drop`; the result lives in the
/// ring of the remaining variables (grevlex, original relative order).
pub fn eliminate(i: &Ideal, drop: &[usize]) -> Result<Ideal> {
    i.eliminate(drop)
}

pub fn colon(i: &Ideal, g: &Polynomial) -> Result<Ideal> {
    i.colon(g)
}

pub fn intersect(i: &Ideal, j: &Ideal) -> Result<Ideal> {
    i.intersect(j)
}

/// Saturation with respect to the ideal of all variables.
pub fn saturate(i: &Ideal) -> Result<Ideal> {
    i.saturate()
}
