//! Multisets of linear forms: reduced support, rank, rank-2 flats,
//! 3-circuits, the circuit count `p(A)` and the dual code's minimum distance.

mod code;
mod flats;
mod io;
mod random;

use crate::error::{Error, Result};
use crate::exactalg::{LinearForm, Polynomial, Ring, RingRef};
use crate::linalg;

pub use code::min_distance;
pub use flats::{circuits3, is_generic3, p_of_arrangement, rank2_flats, Circuit3, Flat2};
pub use io::{parse_arrangement, render_arrangement};
pub use random::{random_arrangement, RandomSpec};

/// An ordered list of nonzero linear forms in a common ring. Repetitions and
/// proportional forms are allowed; [`reduced_support`](Self::reduced_support)
/// collapses them.
#[derive(Clone, Debug, PartialEq)]
pub struct Arrangement {
    ring: RingRef,
    forms: Vec<LinearForm>,
}

/// Result of collapsing proportional forms.
#[derive(Clone, Debug)]
pub struct ReducedSupport {
    pub support: Arrangement,
    pub multiplicities: Vec<usize>,
    /// `class_of[i]` is the support index of original form `i`.
    pub class_of: Vec<usize>,
}

impl Arrangement {
    pub fn new(ring: RingRef, forms: Vec<LinearForm>) -> Result<Self> {
        for f in &forms {
            if f.dim() != ring.nvars() {
                return Err(Error::InvalidInput(format!(
                    "form {:?} has {} coefficients, ring has {} variables",
                    f,
                    f.dim(),
                    ring.nvars()
                )));
            }
            if f.is_zero() {
                return Err(Error::ZeroForm);
            }
        }
        Ok(Arrangement { ring, forms })
    }

    /// Convenience constructor over `x1..xk` from integer coefficient rows.
    pub fn from_int_rows(k: usize, rows: &[&[i64]]) -> Result<Self> {
        let ring = Ring::standard(k);
        Arrangement::new(ring, rows.iter().map(|r| LinearForm::from_ints(r)).collect())
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn nvars(&self) -> usize {
        self.ring.nvars()
    }

    pub fn forms(&self) -> &[LinearForm] {
        &self.forms
    }

    pub fn len(&self) -> usize {
        self.forms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.forms.is_empty()
    }

    pub fn polynomials(&self) -> Vec<Polynomial> {
        self.forms.iter().map(|f| f.to_polynomial(&self.ring)).collect()
    }

    /// Same ring, form `i` dropped.
    pub fn without(&self, i: usize) -> Arrangement {
        let mut forms = self.forms.clone();
        forms.remove(i);
        Arrangement { ring: self.ring.clone(), forms }
    }

    /// Subarrangement on the given indices, in the given order.
    pub fn select(&self, idx: &[usize]) -> Arrangement {
        Arrangement { ring: self.ring.clone(), forms: idx.iter().map(|&i| self.forms[i].clone()).collect() }
    }

    /// Groups proportional forms; support forms appear in order of first
    /// occurrence.
    pub fn reduced_support(&self) -> ReducedSupport {
        let mut reps: Vec<LinearForm> = Vec::new();
        let mut normals: Vec<LinearForm> = Vec::new();
        let mut mult = Vec::new();
        let mut class_of = Vec::with_capacity(self.forms.len());
        for f in &self.forms {
            let nf = f.normalized();
            match normals.iter().position(|g| *g == nf) {
                Some(j) => {
                    mult[j] += 1;
                    class_of.push(j);
                }
                None => {
                    normals.push(nf);
                    reps.push(f.clone());
                    mult.push(1);
                    class_of.push(reps.len() - 1);
                }
            }
        }
        ReducedSupport { support: Arrangement { ring: self.ring.clone(), forms: reps }, multiplicities: mult, class_of }
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced_support().support.len() == self.forms.len()
    }

    pub(crate) fn require_reduced(&self) -> Result<()> {
        if self.is_reduced() {
            Ok(())
        } else {
            Err(Error::NotReduced)
        }
    }

    /// Rank of the coefficient matrix.
    pub fn rank(&self) -> usize {
        let rows: Vec<_> = self.forms.iter().map(|f| f.coeffs().to_vec()).collect();
        linalg::rank(&rows)
    }

    pub fn is_essential(&self) -> bool {
        self.rank() == self.nvars()
    }

    pub(crate) fn require_essential(&self) -> Result<()> {
        let rank = self.rank();
        if rank == self.nvars() {
            Ok(())
        } else {
            Err(Error::NotEssential { rank, nvars: self.nvars() })
        }
    }

    /// Rewrites the arrangement in coordinates on the span of its forms.
    ///
    /// Returns the essential arrangement in `x1..xr` together with the basis
    /// forms `b_1..b_r` (chosen greedily among the arrangement's own forms)
    /// that the new variables stand for: old form `l` becomes the vector of
    /// its coordinates in that basis.
    pub fn essentialize(&self) -> (Arrangement, Vec<LinearForm>) {
        let mut basis: Vec<LinearForm> = Vec::new();
        for f in &self.forms {
            let mut rows: Vec<_> = basis.iter().map(|b| b.coeffs().to_vec()).collect();
            rows.push(f.coeffs().to_vec());
            if linalg::rank(&rows) > basis.len() {
                basis.push(f.clone());
            }
        }
        let r = basis.len();
        let ring = Ring::standard(r);
        // solve  sum_j a_j b_j = l  for each form
        let bt = linalg::transpose(&basis.iter().map(|b| b.coeffs().to_vec()).collect::<Vec<_>>(), self.nvars());
        let forms = self
            .forms
            .iter()
            .map(|f| LinearForm::new(linalg::solve(&bt, f.coeffs()).expect("form lies in its own span")))
            .collect();
        (Arrangement { ring, forms }, basis)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn example_a() -> Arrangement {
        Arrangement::from_int_rows(3, &[&[1, 0, 0], &[0, 1, 0], &[1, 1, 0], &[0, 0, 1]]).unwrap()
    }

    #[test]
    fn reduced_support_examples() {
        let s = Arrangement::from_int_rows(2, &[&[1, 0], &[1, 0], &[0, 1]]).unwrap();
        let r = s.reduced_support();
        assert_eq!(r.support.len(), 2);
        assert_eq!(r.multiplicities, vec![2, 1]);

        let a = example_a();
        let r = a.reduced_support();
        assert_eq!(r.support, a);
        assert_eq!(r.multiplicities, vec![1, 1, 1, 1]);

        let p = Arrangement::from_int_rows(2, &[&[1, 0], &[2, 0], &[3, 0]]).unwrap();
        let r = p.reduced_support();
        assert_eq!(r.support.len(), 1);
        assert_eq!(r.multiplicities, vec![3]);
        assert_eq!(r.class_of, vec![0, 0, 0]);
    }

    #[test]
    fn rank_examples() {
        assert_eq!(example_a().rank(), 3);
        assert_eq!(Arrangement::from_int_rows(2, &[&[1, 0], &[0, 1], &[1, 1]]).unwrap().rank(), 2);
        assert_eq!(Arrangement::new(Ring::standard(3), vec![]).unwrap().rank(), 0);
    }

    #[test]
    fn zero_forms_rejected() {
        assert_eq!(Arrangement::from_int_rows(2, &[&[0, 0]]), Err(Error::ZeroForm));
    }

    #[test]
    fn essentialize_projects_onto_span() {
        // rank-2 arrangement sitting in three variables
        let a = Arrangement::from_int_rows(3, &[&[1, 0, 1], &[0, 1, 0], &[1, 1, 1]]).unwrap();
        let (e, basis) = a.essentialize();
        assert_eq!(e.nvars(), 2);
        assert!(e.is_essential());
        assert_eq!(basis.len(), 2);
        assert_eq!(e.forms()[2], LinearForm::from_ints(&[1, 1]));
    }
}
