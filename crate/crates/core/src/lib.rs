//! Exact computations with fold-product ideals of hyperplane arrangements.

pub mod arrangement;
pub mod error;
pub mod exactalg;
pub mod fold;
pub mod groebner;
pub mod linalg;
pub mod ot2;
pub mod verify;

pub use arrangement::{parse_arrangement, render_arrangement, Arrangement, Circuit3, Flat2};
pub use error::{Error, Result};
pub use exactalg::{LinearForm, Monomial, MonomialOrder, Polynomial, Rational, Ring, RingRef};
pub use fold::{fold_ideal, FoldIdeal};
pub use groebner::{minimal_free_resolution, BettiTable, Budget, FreeResolution, GroebnerBasis, Ideal};
pub use ot2::{FiberRing, SymGenerators};
pub use verify::PredictedBetti;
