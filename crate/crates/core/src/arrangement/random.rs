use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::Arrangement;
use crate::exactalg::{LinearForm, Ring};

/// Parameters for seeded random arrangements with integer coefficients.
#[derive(Clone, Debug, Serialize)]
pub struct RandomSpec {
    pub k: usize,
    pub n: usize,
    /// Coefficients are drawn uniformly from `[-bound, bound]`.
    pub bound: i64,
    /// Reject proportional forms.
    pub reduced: bool,
    /// Minimum rank of the result (retries until met).
    pub min_rank: usize,
}

impl RandomSpec {
    pub fn new(k: usize, n: usize) -> Self {
        RandomSpec { k, n, bound: 3, reduced: true, min_rank: 0 }
    }
}

/// Deterministic for a given `(spec, seed)`.
pub fn random_arrangement(spec: &RandomSpec, seed: u64) -> Arrangement {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let ring = Ring::standard(spec.k);
    assert!(spec.min_rank <= spec.k.min(spec.n), "requested rank is impossible");
    loop {
        let mut forms: Vec<LinearForm> = Vec::with_capacity(spec.n);
        let mut attempts = 0;
        while forms.len() < spec.n && attempts < 10_000 {
            attempts += 1;
            let c: Vec<i64> = (0..spec.k).map(|_| rng.gen_range(-spec.bound..=spec.bound)).collect();
            let f = LinearForm::from_ints(&c);
            if f.is_zero() {
                continue;
            }
            if spec.reduced && forms.iter().any(|g| g.is_proportional(&f)) {
                continue;
            }
            forms.push(f);
        }
        assert_eq!(forms.len(), spec.n, "coefficient bound too small for {} distinct forms", spec.n);
        let a = Arrangement::new(ring.clone(), forms).expect("nonzero forms");
        if a.rank() >= spec.min_rank {
            return a;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seeded_generation_is_deterministic() {
        let spec = RandomSpec { min_rank: 3, ..RandomSpec::new(3, 5) };
        let a = random_arrangement(&spec, 42);
        let b = random_arrangement(&spec, 42);
        assert_eq!(a, b);
        assert!(a.is_reduced());
        assert_eq!(a.rank(), 3);
        assert!(a.forms().iter().flat_map(|f| f.coeffs()).all(|c| c.numer().magnitude() <= &3u32.into()));
    }
}
