use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use super::monomial::{grevlex, Monomial};

/// Monomial orders on the polynomial ring. Module orders used by the
/// resolution code live in `groebner::resolution`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    /// Graded reverse lexicographic order on the declared variable sequence.
    Grevlex,
    /// Product order: grevlex on the first `block` variables decides, ties
    /// broken by grevlex on the remaining ones. Any monomial involving a
    /// first-block variable is larger than every monomial free of them.
    Elimination { block: usize },
}

impl MonomialOrder {
    #[inline]
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match *self {
            MonomialOrder::Grevlex => grevlex(a.exponents(), b.exponents()),
            MonomialOrder::Elimination { block } => {
                let (a1, a2) = a.exponents().split_at(block);
                let (b1, b2) = b.exponents().split_at(block);
                match grevlex(a1, b1) {
                    Ordering::Equal => grevlex(a2, b2),
                    o => o,
                }
            }
        }
    }
}

/// Ring descriptor: variable names plus the active monomial order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Ring {
    names: Vec<String>,
    order: MonomialOrder,
    /// Degrees of the variables for sugar bookkeeping; empty means all 1.
    weights: Vec<u32>,
}

pub type RingRef = Arc<Ring>;

impl Ring {
    pub fn new<S: Into<String>>(names: impl IntoIterator<Item = S>) -> RingRef {
        Arc::new(Ring {
            names: names.into_iter().map(Into::into).collect(),
            order: MonomialOrder::Grevlex,
            weights: Vec::new(),
        })
    }

    pub fn with_order<S: Into<String>>(names: impl IntoIterator<Item = S>, order: MonomialOrder) -> RingRef {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if let MonomialOrder::Elimination { block } = order {
            assert!(block <= names.len(), "elimination block larger than ring");
        }
        Arc::new(Ring { names, order, weights: Vec::new() })
    }

    /// `x1, ..., xk` with grevlex.
    pub fn standard(k: usize) -> RingRef {
        Ring::new((1..=k).map(|i| format!("x{i}")))
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Same variables, different order.
    pub fn reordered(&self, order: MonomialOrder) -> RingRef {
        Arc::new(Ring { names: self.names.clone(), order, weights: self.weights.clone() })
    }

    /// Same ring with variable `i` of degree `weights[i]`. Only the pair
    /// selection of Buchberger's algorithm looks at weights; inputs that are
    /// homogeneous for them are then processed degree by degree.
    pub fn weighted(&self, weights: Vec<u32>) -> RingRef {
        assert_eq!(weights.len(), self.names.len(), "one weight per variable");
        assert!(weights.iter().all(|&w| w > 0), "weights must be positive");
        let weights = if weights.iter().all(|&w| w == 1) { Vec::new() } else { weights };
        Arc::new(Ring { names: self.names.clone(), order: self.order, weights })
    }

    /// Empty when every variable has degree 1.
    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    /// Weighted degree of `m`.
    #[inline]
    pub fn wdeg(&self, m: &Monomial) -> u32 {
        if self.weights.is_empty() {
            m.degree()
        } else {
            m.exponents().iter().zip(&self.weights).map(|(&e, &w)| e as u32 * w).sum()
        }
    }

    #[inline]
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.order.cmp(a, b)
    }
}

impl fmt::Debug for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q[{}]", self.names.join(","))?;
        if self.order != MonomialOrder::Grevlex {
            write!(f, "/{:?}", self.order)?;
        }
        Ok(())
    }
}

pub(crate) fn same_ring(a: &RingRef, b: &RingRef) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}
