//! Ideals generated by `a`-fold products of a multiset of linear forms.

use serde::Serialize;

use crate::arrangement::{min_distance, Arrangement};
use crate::error::{Error, Result};
use crate::exactalg::{LinearForm, Polynomial};
use crate::groebner::Ideal;

/// `I_a(Σ)` together with the index subsets its generators come from.
#[derive(Clone, Debug)]
pub struct FoldIdeal {
    pub source: Arrangement,
    pub a: usize,
    /// Zero-based, increasing; lexicographic order of subsets.
    pub subsets: Vec<Vec<usize>>,
    pub ideal: Ideal,
}

impl FoldIdeal {
    /// Generators in subset order, duplicates kept.
    pub fn gens(&self) -> &[Polynomial] {
        self.ideal.gens()
    }
}

/// Lexicographic list of `a`-subsets of `0..n`.
pub fn subsets(n: usize, a: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if a > n {
        return out;
    }
    let mut cur: Vec<usize> = (0..a).collect();
    loop {
        out.push(cur.clone());
        let Some(i) = (0..a).rev().find(|&i| cur[i] < n - a + i) else {
            break;
        };
        cur[i] += 1;
        for j in i + 1..a {
            cur[j] = cur[j - 1] + 1;
        }
    }
    out
}

/// `I_a(Σ)`: all `C(n, a)` products of `a` members with distinct indices.
/// `I_0 = R` and `I_a = 0` for `a > n`.
pub fn fold_ideal(s: &Arrangement, a: usize) -> FoldIdeal {
    let ring = s.ring();
    let polys = s.polynomials();
    let subs = subsets(s.len(), a);
    let gens: Vec<Polynomial> =
        subs.iter().map(|sub| sub.iter().fold(Polynomial::one(ring), |acc, &i| acc.mul_unchecked(&polys[i]))).collect();
    FoldIdeal { source: s.clone(), a, subsets: subs, ideal: Ideal::new(ring, gens) }
}

#[derive(Clone, Debug, Serialize)]
pub struct PowerIdentityReport {
    pub min_distance: usize,
    /// `(a, I_a == m^a)` for `a = 1..=d`.
    pub checks: Vec<(usize, bool)>,
    pub first_failure: Option<usize>,
    pub pass: bool,
}

/// Checks `I_a(Σ) = m^a` for every `1 <= a <= d(Σ)`.
pub fn check_power_identity(s: &Arrangement) -> Result<PowerIdentityReport> {
    let d = min_distance(s)?;
    let mut checks = Vec::with_capacity(d);
    for a in 1..=d {
        let i = fold_ideal(s, a).ideal;
        let m = Ideal::maximal_power(s.ring(), a as u32);
        checks.push((a, i.equals(&m)?));
    }
    let first_failure = checks.iter().find(|c| !c.1).map(|c| c.0);
    Ok(PowerIdentityReport { min_distance: d, checks, first_failure, pass: first_failure.is_none() })
}

fn position_of(s: &Arrangement, l: &LinearForm) -> Result<usize> {
    s.forms()
        .iter()
        .position(|f| f.is_proportional(l))
        .ok_or_else(|| Error::InvalidInput(format!("form {} is not a member", l.render(s.ring()))))
}

/// `I_a(Σ) : ℓ == I_{a-1}(Σ \ {ℓ})`, removing one copy of `ℓ`.
pub fn colon_step_check(s: &Arrangement, l: &LinearForm, a: usize) -> Result<bool> {
    if a == 0 {
        return Err(Error::InvalidInput("colon step needs a >= 1".into()));
    }
    let idx = position_of(s, l)?;
    let lhs = fold_ideal(s, a).ideal.colon(&s.forms()[idx].to_polynomial(s.ring()))?;
    let rhs = fold_ideal(&s.without(idx), a - 1).ideal;
    lhs.equals(&rhs)
}

/// `I_a(Σ) = ℓ I_{a-1}(Σ') + I_a(Σ')` with `Σ' = Σ \ {ℓ}` (member `idx`).
pub fn split_identity_check(s: &Arrangement, idx: usize, a: usize) -> Result<bool> {
    if a == 0 || idx >= s.len() {
        return Err(Error::InvalidInput("split identity needs a >= 1 and a valid index".into()));
    }
    let rest = s.without(idx);
    let l = s.forms()[idx].to_polynomial(s.ring());
    let rhs = fold_ideal(&rest, a - 1).ideal.scaled_by(&l).sum(&fold_ideal(&rest, a).ideal);
    fold_ideal(s, a).ideal.equals(&rhs)
}

/// `I_{a+1}(Σ) ⊆ I_a(Σ)` for `0 <= a < n`.
pub fn containment_chain_check(s: &Arrangement) -> Result<bool> {
    for a in 0..s.len() {
        if !fold_ideal(s, a).ideal.contains_ideal(&fold_ideal(s, a + 1).ideal)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `I_{n-1}(Σ) = (ℓ_1^{n_1-1} ⋯ ℓ_s^{n_s-1}) I_{s-1}(Σ_0)` where `Σ_0` is the
/// reduced support with multiplicities `n_i`.
pub fn top_factorization_check(s: &Arrangement) -> Result<bool> {
    let n = s.len();
    if n == 0 {
        return Err(Error::InvalidInput("empty multiset".into()));
    }
    let red = s.reduced_support();
    let ring = s.ring();
    let mut factor = Polynomial::one(ring);
    for (f, &m) in red.support.forms().iter().zip(&red.multiplicities) {
        factor = factor.mul_unchecked(&f.to_polynomial(ring).pow(m as u32 - 1));
    }
    let rhs = fold_ideal(&red.support, red.support.len() - 1).ideal.scaled_by(&factor);
    fold_ideal(s, n - 1).ideal.equals(&rhs)
}
