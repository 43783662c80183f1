//! Vectors over a free module, Schreyer orders and syzygy computations.

use std::cmp::Ordering;

use num_traits::{One, Zero};

use super::{Budget, GroebnerBasis};
use crate::error::{Error, Result};
use crate::exactalg::{Monomial, MonomialOrder, Polynomial, Rational, RingRef};

pub(crate) trait ModuleOrder {
    fn cmp(&self, ca: usize, ma: &Monomial, cb: usize, mb: &Monomial) -> Ordering;
}

/// Grevlex comparison of `a * la` against `b * lb` without forming products.
fn grevlex_prod(a: &Monomial, la: &Monomial, b: &Monomial, lb: &Monomial) -> Ordering {
    let d = |x: &Monomial, y: &Monomial| x.degree() + y.degree();
    match d(a, la).cmp(&d(b, lb)) {
        Ordering::Equal => {}
        o => return o,
    }
    let (ea, fa, eb, fb) = (a.exponents(), la.exponents(), b.exponents(), lb.exponents());
    for i in (0..ea.len()).rev() {
        let (x, y) = (ea[i] + fa[i], eb[i] + fb[i]);
        if x != y {
            return y.cmp(&x);
        }
    }
    Ordering::Equal
}

/// Induced order on a free module: `m e_c` is compared through `m * lead[c]`
/// under grevlex, ties broken by `rank[c]` (larger rank is larger).
#[derive(Clone, Debug)]
pub(crate) struct Schreyer {
    pub lead: Vec<Monomial>,
    pub rank: Vec<usize>,
}

impl ModuleOrder for Schreyer {
    fn cmp(&self, ca: usize, ma: &Monomial, cb: usize, mb: &Monomial) -> Ordering {
        grevlex_prod(ma, &self.lead[ca], mb, &self.lead[cb]).then_with(|| self.rank[ca].cmp(&self.rank[cb]))
    }
}

/// Position over term: a smaller component index is larger; grevlex inside.
pub(crate) struct Pot;

impl ModuleOrder for Pot {
    fn cmp(&self, ca: usize, ma: &Monomial, cb: usize, mb: &Monomial) -> Ordering {
        cb.cmp(&ca).then_with(|| ma.cmp_grevlex(mb))
    }
}

/// A module element as terms `(component, monomial, coefficient)`, sorted
/// decreasingly in some module order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct ModVec {
    pub terms: Vec<(usize, Monomial, Rational)>,
}

impl ModVec {
    pub fn from_terms<O: ModuleOrder>(ord: &O, terms: impl IntoIterator<Item = (usize, Monomial, Rational)>) -> Self {
        let mut t: Vec<(usize, Monomial, Rational)> = terms.into_iter().filter(|x| !x.2.is_zero()).collect();
        t.sort_by(|a, b| ord.cmp(b.0, &b.1, a.0, &a.1));
        let mut out: Vec<(usize, Monomial, Rational)> = Vec::with_capacity(t.len());
        for (c, m, x) in t {
            match out.last_mut() {
                Some(last) if last.0 == c && last.1 == m => last.2 += x,
                _ => out.push((c, m, x)),
            }
        }
        out.retain(|x| !x.2.is_zero());
        ModVec { terms: out }
    }

    pub fn from_polynomial(p: &Polynomial, comp: usize) -> Self {
        ModVec { terms: p.terms().iter().map(|(m, c)| (comp, m.clone(), c.clone())).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lead(&self) -> Option<&(usize, Monomial, Rational)> {
        self.terms.first()
    }

    /// `self + c * m * other`.
    pub fn add_scaled<O: ModuleOrder>(&self, other: &ModVec, c: &Rational, m: &Monomial, ord: &O) -> ModVec {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let mut a = self.terms.iter().peekable();
        let mut b = other.terms.iter().map(|(oc, om, ox)| (*oc, om.mul(m), ox * c)).peekable();
        loop {
            match (a.peek(), b.peek()) {
                (None, None) => break,
                (Some(_), None) => out.push(a.next().unwrap().clone()),
                (None, Some(_)) => out.push(b.next().unwrap()),
                (Some(x), Some(y)) => match ord.cmp(x.0, &x.1, y.0, &y.1) {
                    Ordering::Greater => out.push(a.next().unwrap().clone()),
                    Ordering::Less => out.push(b.next().unwrap()),
                    Ordering::Equal => {
                        let (ac, am, ax) = a.next().unwrap();
                        let (_, _, bx) = b.next().unwrap();
                        let s = ax + bx;
                        if !s.is_zero() {
                            out.push((*ac, am.clone(), s));
                        }
                    }
                },
            }
        }
        ModVec { terms: out }
    }

    pub fn scale(&self, c: &Rational) -> ModVec {
        ModVec { terms: self.terms.iter().map(|(i, m, x)| (*i, m.clone(), x * c)).collect() }
    }

    /// Component polynomials, `rank` of them.
    pub fn to_polys(&self, ring: &RingRef, rank: usize) -> Vec<Polynomial> {
        let mut parts: Vec<Vec<(Monomial, Rational)>> = vec![Vec::new(); rank];
        for (c, m, x) in &self.terms {
            parts[*c].push((m.clone(), x.clone()));
        }
        parts.into_iter().map(|t| Polynomial::from_terms(ring, t)).collect()
    }
}

/// One step of Schreyer's algorithm. `elems` must be a Gröbner basis of the
/// submodule they generate under `ord`, sorted by lead component and then
/// lexicographically decreasing lead monomial. Returns the induced order on
/// the free module with basis `elems` and generators of the syzygies, which
/// form a Gröbner basis for that order.
pub(crate) fn schreyer_step(elems: &[ModVec], ord: &Schreyer) -> Result<(Schreyer, Vec<ModVec>)> {
    let s = elems.len();
    let leads: Vec<&(usize, Monomial, Rational)> = elems.iter().map(|e| e.lead().expect("nonzero element")).collect();
    let lead: Vec<Monomial> = leads.iter().map(|(c, m, _)| m.mul(&ord.lead[*c])).collect();
    // ties: larger old rank first, then smaller index
    let mut by_rank: Vec<usize> = (0..s).collect();
    by_rank.sort_by(|&a, &b| ord.rank[leads[a].0].cmp(&ord.rank[leads[b].0]).then(b.cmp(&a)));
    let mut rank = vec![0usize; s];
    for (r, &j) in by_rank.iter().enumerate() {
        rank[j] = r;
    }
    let next = Schreyer { lead, rank };

    let mut syz = Vec::new();
    for j in 0..s {
        let (cj, mj, xj) = leads[j];
        let mut cands: Vec<(usize, Monomial)> =
            (j + 1..s).filter(|&k| leads[k].0 == *cj).map(|k| (k, mj.quotient_of(&mj.lcm(&leads[k].1)))).collect();
        // keep k whose m_jk is minimal under divisibility (first among equals)
        cands.sort_by(|a, b| a.1.degree().cmp(&b.1.degree()).then(a.0.cmp(&b.0)));
        let mut kept: Vec<(usize, Monomial)> = Vec::new();
        for (k, m) in cands {
            if !kept.iter().any(|(_, q)| q.divides(&m)) {
                kept.push((k, m));
            }
        }
        for (k, mjk) in kept {
            let (_, mk, xk) = leads[k];
            let mkj = mk.quotient_of(&mj.mul(&mjk));
            let ratio = xj / xk;
            let mut cur = ModVec { terms: Vec::new() }
                .add_scaled(&elems[j], &Rational::one(), &mjk, ord)
                .add_scaled(&elems[k], &-&ratio, &mkj, ord);
            let mut vec_terms = vec![(j, mjk.clone(), Rational::one()), (k, mkj.clone(), -&ratio)];
            while let Some((c, m, x)) = cur.lead().cloned() {
                let u = (0..s)
                    .find(|&u| leads[u].0 == c && leads[u].1.divides(&m))
                    .ok_or_else(|| Error::InvalidInput("module elements are not a Gröbner basis".into()))?;
                let q = leads[u].1.quotient_of(&m);
                let coef = &x / &leads[u].2;
                cur = cur.add_scaled(&elems[u], &-&coef, &q, ord);
                vec_terms.push((u, q, -coef));
            }
            let v = ModVec::from_terms(&next, vec_terms);
            debug_assert!(v.lead().is_some_and(|(c, m, x)| *c == j && *m == mjk && x.is_one()));
            syz.push(v);
        }
    }
    Ok((next, syz))
}

/// Sorts level elements by lead component, then lexicographically
/// decreasing lead monomial. Returns the permutation applied.
pub(crate) fn sort_level(elems: &mut Vec<ModVec>) -> Vec<usize> {
    let mut idx: Vec<usize> = (0..elems.len()).collect();
    idx.sort_by(|&a, &b| {
        let (ca, ma, _) = elems[a].lead().unwrap();
        let (cb, mb, _) = elems[b].lead().unwrap();
        ca.cmp(cb).then_with(|| mb.cmp_lex(ma))
    });
    let sorted: Vec<ModVec> = idx.iter().map(|&i| elems[i].clone()).collect();
    *elems = sorted;
    idx
}

/// A syzygy `(a_1, ..., a_r)` with `sum a_i g_i = 0`.
pub type Syzygy = Vec<Polynomial>;

/// Schreyer generators of the syzygies of a reduced Gröbner basis (in
/// grevlex), indexed like `gb.polys()`.
pub fn syzygies(gb: &GroebnerBasis) -> Result<Vec<Syzygy>> {
    let ring = gb.ring();
    if ring.order() != MonomialOrder::Grevlex {
        return Err(Error::InvalidInput("Schreyer syzygies need a grevlex basis".into()));
    }
    let k = ring.nvars();
    let base = Schreyer { lead: vec![Monomial::one(k)], rank: vec![0] };
    let mut elems: Vec<ModVec> = gb.polys().iter().map(|p| ModVec::from_polynomial(p, 0)).collect();
    let perm = sort_level(&mut elems);
    let (_, syz) = schreyer_step(&elems, &base)?;
    let r = elems.len();
    Ok(syz
        .iter()
        .map(|v| {
            let sorted = v.to_polys(ring, r);
            let mut orig = vec![Polynomial::zero(ring); r];
            for (pos, &i) in perm.iter().enumerate() {
                orig[i] = sorted[pos].clone();
            }
            orig
        })
        .collect())
}

fn mod_degree(shift: &[u32], c: usize, m: &Monomial) -> u32 {
    m.degree() + shift[c]
}

/// Module Buchberger for submodules of a free module under `Pot`, with
/// component shifts used for degrees. Returns a Gröbner basis.
fn module_groebner(gens: Vec<ModVec>, shift: &[u32], budget: &Budget) -> Result<Vec<ModVec>> {
    let ord = Pot;
    let mut basis: Vec<ModVec> = Vec::new();
    let mut pairs: Vec<(u32, usize, usize)> = Vec::new();
    let reduce = |v: &ModVec, basis: &[ModVec]| -> ModVec {
        let mut cur = v.clone();
        let mut rem: Vec<(usize, Monomial, Rational)> = Vec::new();
        while let Some((c, m, x)) = cur.lead().cloned() {
            match basis.iter().find(|b| {
                let (bc, bm, _) = b.lead().unwrap();
                *bc == c && bm.divides(&m)
            }) {
                Some(b) => {
                    let (_, bm, bx) = b.lead().unwrap();
                    cur = cur.add_scaled(b, &-(&x / bx), &bm.quotient_of(&m), &ord);
                }
                None => {
                    rem.push(cur.terms.remove(0));
                }
            }
        }
        ModVec { terms: rem }
    };
    let mut queue = gens;
    queue.sort_by_key(|v| v.lead().map(|(c, m, _)| mod_degree(shift, *c, m)));
    for g in queue {
        let r = reduce(&g, &basis);
        if !r.is_zero() {
            let lc = r.lead().unwrap().2.clone();
            let r = r.scale(&lc.recip());
            let n = basis.len();
            for (i, b) in basis.iter().enumerate() {
                let (ci, mi, _) = b.lead().unwrap();
                let (cn, mn, _) = r.lead().unwrap();
                if ci == cn {
                    pairs.push((mod_degree(shift, *ci, &mi.lcm(mn)), i, n));
                }
            }
            basis.push(r);
        }
    }
    while !pairs.is_empty() {
        let best = (0..pairs.len()).min_by_key(|&p| pairs[p]).unwrap();
        let (deg, i, j) = pairs.swap_remove(best);
        if deg > budget.max_degree {
            return Err(Error::Budget(format!("module S-pair degree {deg} exceeds limit {}", budget.max_degree)));
        }
        let (_, mi, _) = basis[i].lead().unwrap();
        let (_, mj, _) = basis[j].lead().unwrap();
        let l = mi.lcm(mj);
        let s = ModVec { terms: Vec::new() }
            .add_scaled(&basis[i], &Rational::one(), &mi.quotient_of(&l), &ord)
            .add_scaled(&basis[j], &-Rational::one(), &mj.quotient_of(&l), &ord);
        let r = reduce(&s, &basis);
        if !r.is_zero() {
            let lc = r.lead().unwrap().2.clone();
            let r = r.scale(&lc.recip());
            let n = basis.len();
            for (t, b) in basis.iter().enumerate() {
                let (ct, mt, _) = b.lead().unwrap();
                let (cn, mn, _) = r.lead().unwrap();
                if ct == cn {
                    pairs.push((mod_degree(shift, *ct, &mt.lcm(mn)), t, n));
                }
            }
            basis.push(r);
            if basis.len() > budget.max_basis {
                return Err(Error::Budget(format!("module basis size exceeds {}", budget.max_basis)));
            }
        }
    }
    Ok(basis)
}

/// A minimal generating set of the syzygies of arbitrary homogeneous
/// generators `gens` (not necessarily a Gröbner basis), computed in
/// `R ⊕ R^r` with the elements `(g_i, e_i)`.
pub fn syzygies_of(ring: &RingRef, gens: &[Polynomial]) -> Result<Vec<Syzygy>> {
    let r = gens.len();
    let budget = Budget::default();
    let g_ring = ring.reordered(MonomialOrder::Grevlex);
    let mut shift = vec![0u32];
    let mut elems = Vec::with_capacity(r);
    for (i, g) in gens.iter().enumerate() {
        if !g.is_homogeneous() {
            return Err(Error::InvalidInput("syzygies need homogeneous generators".into()));
        }
        shift.push(g.degree().unwrap_or(0));
        let mut terms: Vec<(usize, Monomial, Rational)> =
            g.terms().iter().map(|(m, c)| (0, m.clone(), c.clone())).collect();
        terms.push((i + 1, Monomial::one(ring.nvars()), Rational::one()));
        elems.push(ModVec::from_terms(&Pot, terms));
    }
    let basis = module_groebner(elems, &shift, &budget)?;
    let mut syz: Vec<ModVec> = basis
        .into_iter()
        .filter(|v| v.lead().is_some_and(|(c, _, _)| *c > 0))
        .map(|v| ModVec { terms: v.terms.into_iter().map(|(c, m, x)| (c - 1, m, x)).collect() })
        .collect();
    let syz_shift: Vec<u32> = shift[1..].to_vec();
    syz.sort_by_key(|v| v.lead().map(|(c, m, _)| mod_degree(&syz_shift, *c, m)));
    // greedy minimalization: keep an element unless the earlier kept ones
    // already generate it
    let mut kept: Vec<ModVec> = Vec::new();
    let mut kept_gb: Vec<ModVec> = Vec::new();
    for v in syz {
        let mut cur = v.clone();
        while let Some((c, m, x)) = cur.lead().cloned() {
            match kept_gb.iter().find(|b| {
                let (bc, bm, _) = b.lead().unwrap();
                *bc == c && bm.divides(&m)
            }) {
                Some(b) => {
                    let (_, bm, bx) = b.lead().unwrap();
                    cur = cur.add_scaled(b, &-(&x / bx), &bm.quotient_of(&m), &Pot);
                }
                None => break,
            }
        }
        if !cur.is_zero() {
            kept.push(v);
            kept_gb = module_groebner(kept.clone(), &syz_shift, &budget)?;
        }
    }
    Ok(kept.iter().map(|v| v.to_polys(&g_ring, r).into_iter().map(|p| p.to_ring(ring)).collect()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{parse_polynomial, Ring};
    use crate::groebner::buchberger;

    fn check_syzygy(gens: &[Polynomial], s: &Syzygy) {
        let ring = gens[0].ring();
        let mut acc = Polynomial::zero(ring);
        for (a, g) in s.iter().zip(gens) {
            acc = acc.add(&a.mul(g).unwrap()).unwrap();
        }
        assert!(acc.is_zero());
    }

    #[test]
    fn koszul_syzygy() {
        let r = Ring::new(["x", "y"]);
        let gb = buchberger(&r, &[Polynomial::var(&r, 0), Polynomial::var(&r, 1)], &Budget::default()).unwrap();
        let s = syzygies(&gb).unwrap();
        assert_eq!(s.len(), 1);
        check_syzygy(gb.polys(), &s[0]);
        assert!(s[0].iter().all(|p| p.degree() == Some(1)));
    }

    #[test]
    fn square_of_maximal_ideal() {
        let r = Ring::new(["x", "y"]);
        let gens: Vec<_> = ["x^2", "x*y", "y^2"].iter().map(|t| parse_polynomial(t, &r).unwrap()).collect();
        let gb = buchberger(&r, &gens, &Budget::default()).unwrap();
        let s = syzygies(&gb).unwrap();
        assert_eq!(s.len(), 2);
        for v in &s {
            check_syzygy(gb.polys(), v);
            // degree 3 as module elements
            assert!(v.iter().all(|p| p.is_zero() || p.degree() == Some(1)));
        }
    }

    #[test]
    fn syzygies_of_pencil_products() {
        let r = Ring::new(["x", "y"]);
        let gens: Vec<_> = ["x*y", "x*(x+y)", "y*(x+y)"].iter().map(|t| parse_polynomial(t, &r).unwrap()).collect();
        let s = syzygies_of(&r, &gens).unwrap();
        assert_eq!(s.len(), 2);
        for v in &s {
            check_syzygy(&gens, v);
            assert!(v.iter().all(|p| p.is_zero() || p.degree() == Some(1)));
        }
    }

    #[test]
    fn syzygies_of_non_basis() {
        let r = Ring::new(["x", "y", "z"]);
        let gens: Vec<_> = ["x + y", "y", "x", "z^2"].iter().map(|t| parse_polynomial(t, &r).unwrap()).collect();
        let s = syzygies_of(&r, &gens).unwrap();
        for v in &s {
            check_syzygy(&gens, v);
        }
        // one linear relation among the forms, two Koszul pairs (y, x), and
        // z^2 against the two independent forms
        let degs: Vec<u32> = s
            .iter()
            .map(|v| {
                v.iter()
                    .zip(&gens)
                    .filter(|(a, _)| !a.is_zero())
                    .map(|(a, g)| a.degree().unwrap() + g.degree().unwrap())
                    .max()
                    .unwrap()
            })
            .collect();
        assert_eq!(degs.iter().filter(|&&d| d == 1).count(), 1);
        assert_eq!(degs.iter().filter(|&&d| d == 2).count(), 1);
        assert_eq!(degs.iter().filter(|&&d| d == 3).count(), 2);
    }
}
