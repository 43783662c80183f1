use std::cmp::Ordering;
use std::collections::btree_map::Entry;
use std::collections::BTreeMap;

use num_traits::{One, Zero};

use super::Budget;
use crate::error::{Error, Result};
use crate::exactalg::{Monomial, MonomialOrder, Polynomial, Rational, RingRef};

/// A reduced Gröbner basis: monic, no leading monomial divides another,
/// tails fully reduced. Sorted by leading monomial, smallest first.
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    ring: RingRef,
    polys: Vec<Polynomial>,
    lms: Vec<Monomial>,
    masks: Vec<u64>,
}

impl GroebnerBasis {
    pub(crate) fn from_reduced(ring: &RingRef, mut polys: Vec<Polynomial>) -> Self {
        polys.sort_by(|a, b| ring.cmp(a.leading_monomial().unwrap(), b.leading_monomial().unwrap()));
        let lms: Vec<Monomial> = polys.iter().map(|p| p.leading_monomial().unwrap().clone()).collect();
        let masks = lms.iter().map(Monomial::support_mask).collect();
        GroebnerBasis { ring: ring.clone(), polys, lms, masks }
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn polys(&self) -> &[Polynomial] {
        &self.polys
    }

    pub fn len(&self) -> usize {
        self.polys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polys.is_empty()
    }

    pub fn leading_monomials(&self) -> &[Monomial] {
        &self.lms
    }

    /// True when the basis is `{1}`.
    pub fn is_unit(&self) -> bool {
        self.lms.first().is_some_and(Monomial::is_one)
    }

    fn reducer_for(&self, m: &Monomial) -> Option<usize> {
        let mask = m.support_mask();
        (0..self.lms.len()).find(|&i| self.masks[i] & !mask == 0 && self.lms[i].divides(m))
    }

    /// Fully reduced remainder of `p`.
    pub fn normal_form(&self, p: &Polynomial) -> Polynomial {
        reduce_full(p, |m| self.reducer_for(m).map(|i| (&self.polys[i], &self.lms[i], 0)), 0).0
    }

    pub fn contains(&self, p: &Polynomial) -> bool {
        self.normal_form(p).is_zero()
    }

    /// Whether `m` lies in the leading-term ideal.
    pub fn is_leading(&self, m: &Monomial) -> bool {
        self.reducer_for(m).is_some()
    }
}

/// Monomial keyed by the ring order, so a `BTreeMap` keeps terms sorted.
struct OrdKey {
    order: MonomialOrder,
    m: Monomial,
}

impl PartialEq for OrdKey {
    fn eq(&self, other: &Self) -> bool {
        self.m == other.m
    }
}

impl Eq for OrdKey {}

impl PartialOrd for OrdKey {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for OrdKey {
    fn cmp(&self, other: &Self) -> Ordering {
        self.order.cmp(&self.m, &other.m)
    }
}

/// Reduces every term of `p` (not just the leading one). `sugar` tracks the
/// sugar degree of the running polynomial.
fn reduce_full<'a>(
    p: &Polynomial,
    find: impl Fn(&Monomial) -> Option<(&'a Polynomial, &'a Monomial, u32)>,
    sugar: u32,
) -> (Polynomial, u32) {
    let ring = p.ring().clone();
    let order = ring.order();
    let mut rem: Vec<(Monomial, Rational)> = Vec::new();
    let mut cur: BTreeMap<OrdKey, Rational> =
        p.terms().iter().map(|(m, c)| (OrdKey { order, m: m.clone() }, c.clone())).collect();
    let mut sugar = sugar;
    while let Some((key, c)) = cur.pop_last() {
        match find(&key.m) {
            Some((g, lm, gs)) => {
                let q = lm.quotient_of(&key.m);
                let coef = -(c / g.leading_coeff().unwrap());
                sugar = sugar.max(ring.wdeg(&q) + gs);
                for (gm, gc) in &g.terms()[1..] {
                    let add = &coef * gc;
                    match cur.entry(OrdKey { order, m: gm.mul(&q) }) {
                        Entry::Vacant(e) => {
                            e.insert(add);
                        }
                        Entry::Occupied(mut e) => {
                            *e.get_mut() += add;
                            if e.get().is_zero() {
                                e.remove();
                            }
                        }
                    }
                }
            }
            None => rem.push((key.m, c)),
        }
    }
    (Polynomial::from_sorted_terms(&ring, rem), sugar)
}

/// Remainder of `p` modulo a reduced Gröbner basis.
pub fn normal_form(p: &Polynomial, gb: &GroebnerBasis) -> Polynomial {
    gb.normal_form(p)
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    sugar: u32,
}

struct Work<'r> {
    ring: &'r RingRef,
    polys: Vec<Polynomial>,
    lms: Vec<Monomial>,
    masks: Vec<u64>,
    sugar: Vec<u32>,
    active: Vec<bool>,
    pairs: Vec<Pair>,
}

impl<'r> Work<'r> {
    fn reducer(&self, m: &Monomial) -> Option<usize> {
        let mask = m.support_mask();
        (0..self.polys.len()).find(|&i| self.active[i] && self.masks[i] & !mask == 0 && self.lms[i].divides(m))
    }

    fn reduce(&self, p: &Polynomial, sugar: u32) -> (Polynomial, u32) {
        reduce_full(p, |m| self.reducer(m).map(|i| (&self.polys[i], &self.lms[i], self.sugar[i])), sugar)
    }

    /// Inserts `h` (monic, reduced) and updates the pair set with the
    /// Gebauer–Möller criteria.
    fn insert(&mut self, h: Polynomial, sugar: u32) {
        let hlm = h.leading_monomial().unwrap().clone();
        let hidx = self.polys.len();

        // new pairs (g, h)
        let mut cands: Vec<(usize, Monomial, bool)> = (0..self.polys.len())
            .filter(|&g| self.active[g])
            .map(|g| (g, self.lms[g].lcm(&hlm), self.lms[g].is_coprime(&hlm)))
            .collect();
        let mut keep = vec![false; cands.len()];
        let mut removed = vec![false; cands.len()];
        for a in 0..cands.len() {
            let (_, ref la, coprime) = cands[a];
            let dominated =
                (0..cands.len()).any(|b| b != a && !removed[b] && (keep[b] || b > a) && cands[b].1.divides(la));
            removed[a] = true;
            if coprime || !dominated {
                keep[a] = true;
            }
        }
        let new_pairs: Vec<Pair> = cands
            .drain(..)
            .zip(keep)
            .filter(|((_, _, coprime), k)| *k && !*coprime)
            .map(|((g, lcm, _), _)| {
                let s = pair_sugar(self.ring, &self.lms[g], self.sugar[g], &hlm, sugar, &lcm);
                Pair { i: g, j: hidx, lcm, sugar: s }
            })
            .collect();

        // old pairs killed by the chain criterion
        let lms = &self.lms;
        self.pairs.retain(|p| !(hlm.divides(&p.lcm) && lms[p.i].lcm(&hlm) != p.lcm && lms[p.j].lcm(&hlm) != p.lcm));
        self.pairs.extend(new_pairs);

        for g in 0..self.polys.len() {
            if self.active[g] && hlm.divides(&self.lms[g]) {
                self.active[g] = false;
            }
        }
        self.masks.push(hlm.support_mask());
        self.lms.push(hlm);
        self.polys.push(h);
        self.sugar.push(sugar);
        self.active.push(true);
    }

    fn select(&mut self) -> Option<Pair> {
        if self.pairs.is_empty() {
            return None;
        }
        let ring = self.ring;
        let mut best = 0;
        for (idx, p) in self.pairs.iter().enumerate().skip(1) {
            let b = &self.pairs[best];
            let ord =
                p.sugar.cmp(&b.sugar).then_with(|| ring.cmp(&p.lcm, &b.lcm)).then_with(|| (p.i, p.j).cmp(&(b.i, b.j)));
            if ord == Ordering::Less {
                best = idx;
            }
        }
        Some(self.pairs.swap_remove(best))
    }

    fn spoly(&self, pair: &Pair) -> Polynomial {
        let (f, g) = (&self.polys[pair.i], &self.polys[pair.j]);
        let mf = self.lms[pair.i].quotient_of(&pair.lcm);
        let mg = self.lms[pair.j].quotient_of(&pair.lcm);
        // both monic
        f.mul_monomial(&mf, &Rational::one()).add_scaled(g, &-Rational::one(), Some(&mg))
    }
}

fn pair_sugar(ring: &RingRef, lm_a: &Monomial, sa: u32, lm_b: &Monomial, sb: u32, lcm: &Monomial) -> u32 {
    let d = ring.wdeg(lcm);
    (sa + d - ring.wdeg(lm_a)).max(sb + d - ring.wdeg(lm_b))
}

/// Reduced Gröbner basis of the ideal generated by `gens` in `ring`'s order.
pub fn buchberger(ring: &RingRef, gens: &[Polynomial], budget: &Budget) -> Result<GroebnerBasis> {
    let mut inputs: Vec<Polynomial> = gens.iter().filter(|g| !g.is_zero()).cloned().collect();
    for g in &inputs {
        if g.ring().as_ref() != ring.as_ref() {
            return Err(Error::RingMismatch(format!("{:?} vs {:?}", g.ring(), ring)));
        }
    }
    let wdeg = |p: &Polynomial| p.terms().iter().map(|(m, _)| ring.wdeg(m)).max();
    inputs.sort_by(|a, b| {
        wdeg(a).cmp(&wdeg(b)).then_with(|| ring.cmp(a.leading_monomial().unwrap(), b.leading_monomial().unwrap()))
    });
    let mut w = Work {
        ring,
        polys: Vec::new(),
        lms: Vec::new(),
        masks: Vec::new(),
        sugar: Vec::new(),
        active: Vec::new(),
        pairs: Vec::new(),
    };
    for g in inputs {
        let s = wdeg(&g).unwrap();
        let (r, s) = w.reduce(&g, s);
        if !r.is_zero() {
            if r.is_constant() {
                return Ok(GroebnerBasis::from_reduced(ring, vec![Polynomial::one(ring)]));
            }
            w.insert(r.monic(), s);
        }
    }
    while let Some(pair) = w.select() {
        if pair.lcm.degree() > budget.max_degree {
            return Err(Error::Budget(format!(
                "S-pair degree {} exceeds limit {}",
                pair.lcm.degree(),
                budget.max_degree
            )));
        }
        let sp = w.spoly(&pair);
        let (r, s) = w.reduce(&sp, pair.sugar);
        if r.is_zero() {
            continue;
        }
        if r.is_constant() {
            return Ok(GroebnerBasis::from_reduced(ring, vec![Polynomial::one(ring)]));
        }
        w.insert(r.monic(), s);
        let active = w.active.iter().filter(|&&a| a).count();
        if active > budget.max_basis {
            return Err(Error::Budget(format!("basis size {} exceeds limit {}", active, budget.max_basis)));
        }
    }
    Ok(interreduce(ring, &w))
}

fn interreduce(ring: &RingRef, w: &Work<'_>) -> GroebnerBasis {
    let idx: Vec<usize> = (0..w.polys.len()).filter(|&i| w.active[i]).collect();
    let lms: Vec<&Monomial> = idx.iter().map(|&i| &w.lms[i]).collect();
    let mut out = Vec::with_capacity(idx.len());
    for (a, &i) in idx.iter().enumerate() {
        // reduce tail of g_i by the other active elements
        let others =
            |m: &Monomial| (0..idx.len()).find(|&b| b != a && lms[b].divides(m)).map(|b| (&w.polys[idx[b]], lms[b], 0));
        let p = &w.polys[i];
        let mut terms = p.terms().to_vec();
        let lead = terms.remove(0);
        let tail = Polynomial::from_sorted_terms(ring, terms);
        let (rt, _) = reduce_full(&tail, others, 0);
        let mut t = vec![lead];
        t.extend(rt.into_terms());
        out.push(Polynomial::from_sorted_terms(ring, t).monic());
    }
    debug_assert!(out.iter().all(|p| p.leading_coeff().is_some_and(|c| c.is_one())));
    debug_assert!(!out.iter().any(|p| p.leading_coeff().is_some_and(Zero::is_zero)));
    GroebnerBasis::from_reduced(ring, out)
}
