//! Second-order Orlik-Terao algebras: the presentation ideal `I(2,A)` of
//! `ℚ[f_{ij}]`, the classical ideal `I(A)`, the symmetric ideal of
//! `I_{n-2}(A)` and Sylvester forms.

use std::collections::{BTreeMap, HashMap};

use num_traits::{One, Zero};
use serde::Serialize;

use crate::arrangement::{circuits3, p_of_arrangement, Arrangement};
use crate::error::{Error, Result};
use crate::exactalg::{monomials_of_degree, LinearForm, Monomial, Polynomial, Rational, Ring, RingRef};
use crate::fold::subsets;
use crate::groebner::Ideal;
use crate::linalg;
use crate::verify::complement_product;

/// `T = ℚ[t_{i,j} : i < j]` and `S = ℚ[y_1..y_n]`. Pairs are numbered in
/// lexicographic order; names are one-based (`t1_2`, `y1`).
#[derive(Clone, Debug)]
pub struct FiberRing {
    pub n: usize,
    pub t: RingRef,
    pub s: RingRef,
    pairs: Vec<(usize, usize)>,
}

impl FiberRing {
    pub fn new(n: usize) -> Self {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
        let t = Ring::new(pairs.iter().map(|&(i, j)| format!("t{}_{}", i + 1, j + 1)));
        let s = Ring::new((1..=n).map(|i| format!("y{i}")));
        FiberRing { n, t, s, pairs }
    }

    pub fn npairs(&self) -> usize {
        self.pairs.len()
    }

    /// Position of `t_{i,j}` (zero-based, either order).
    pub fn pair_var(&self, i: usize, j: usize) -> usize {
        let (i, j) = if i < j { (i, j) } else { (j, i) };
        assert!(i != j && j < self.n, "bad pair ({i}, {j})");
        i * self.n - i * (i + 1) / 2 + (j - i - 1)
    }

    pub fn pair(&self, v: usize) -> (usize, usize) {
        self.pairs[v]
    }

    pub fn t_var(&self, i: usize, j: usize) -> Polynomial {
        Polynomial::var(&self.t, self.pair_var(i, j))
    }

    /// `R[t]` with the `x` variables first.
    pub fn xt_ring(&self, a: &Arrangement) -> RingRef {
        let names = a.ring().names().iter().cloned().chain(self.t.names().iter().cloned());
        Ring::new(names.collect::<Vec<_>>())
    }
}

/// `c_{i1} t_{i2,i3} + c_{i2} t_{i1,i3} + c_{i3} t_{i1,i2}` per circuit.
pub fn standard_linear_gens(a: &Arrangement) -> Result<Vec<Polynomial>> {
    let fr = FiberRing::new(a.len());
    Ok(circuits3(a)?
        .into_iter()
        .map(|c| {
            let [i1, i2, i3] = c.indices;
            let [c1, c2, c3] = &c.coeffs;
            fr.t_var(i2, i3).scale(c1).add_scaled(&fr.t_var(i1, i3), c2, None).add_scaled(&fr.t_var(i1, i2), c3, None)
        })
        .collect())
}

/// `Q¹ = t_{uv} t_{wz} - t_{uw} t_{vz}` and `Q² = t_{uv} t_{wz} - t_{uz} t_{vw}`
/// for every `u < v < w < z`, in that order.
pub fn standard_quadratic_gens(n: usize) -> Vec<Polynomial> {
    let fr = FiberRing::new(n);
    let mut out = Vec::new();
    for q in subsets(n, 4) {
        let [u, v, w, z] = [q[0], q[1], q[2], q[3]];
        let base = fr.t_var(u, v).mul_unchecked(&fr.t_var(w, z));
        out.push(base.sub(&fr.t_var(u, w).mul_unchecked(&fr.t_var(v, z))).unwrap());
        out.push(base.sub(&fr.t_var(u, z).mul_unchecked(&fr.t_var(v, w))).unwrap());
    }
    out
}

/// `I(2,A)`: eliminate `x` and `s` from `⟨t_{ij} - s f_{ij}⟩`. The extra
/// variable keeps the kernel graded when `f_{ij}` are constants (`n = 2`);
/// with `t` of weight `n - 1` the generators are homogeneous.
pub fn ot2_ideal(a: &Arrangement) -> Result<Ideal> {
    a.require_reduced()?;
    let n = a.len();
    if n < 2 {
        return Err(Error::InvalidInput("need at least two forms".into()));
    }
    let fr = FiberRing::new(n);
    let k = a.nvars();
    let names = a.ring().names().iter().cloned().chain(["_s".to_string()]).chain(fr.t.names().iter().cloned());
    let weights = vec![1; k + 1].into_iter().chain(std::iter::repeat_n(n as u32 - 1, fr.npairs())).collect();
    let xst = Ring::new(names.collect::<Vec<_>>()).weighted(weights);
    let s = Polynomial::var(&xst, k);
    let gens: Vec<Polynomial> = (0..fr.npairs())
        .map(|v| {
            let (i, j) = fr.pair(v);
            let f = lift(&complement_product(a, &[i, j]), &xst, 0).mul_unchecked(&s);
            Polynomial::var(&xst, k + 1 + v).sub(&f).unwrap()
        })
        .collect();
    let drop: Vec<usize> = (0..=k).collect();
    Ideal::new(&xst, gens).eliminate(&drop)
}

/// `I(A)`: eliminate `x` and `s` from `⟨y_i - s f/ℓ_i⟩`.
pub fn ot_classical_ideal(a: &Arrangement) -> Result<Ideal> {
    a.require_reduced()?;
    let n = a.len();
    let fr = FiberRing::new(n);
    let k = a.nvars();
    let names = a.ring().names().iter().cloned().chain(["_s".to_string()]).chain(fr.s.names().iter().cloned());
    let weights = vec![1; k + 1].into_iter().chain(std::iter::repeat_n(n as u32, n)).collect();
    let xy = Ring::new(names.collect::<Vec<_>>()).weighted(weights);
    let s = Polynomial::var(&xy, k);
    let gens: Vec<Polynomial> = (0..n)
        .map(|i| {
            let f = lift(&complement_product(a, &[i]), &xy, 0).mul_unchecked(&s);
            Polynomial::var(&xy, k + 1 + i).sub(&f).unwrap()
        })
        .collect();
    let drop: Vec<usize> = (0..=k).collect();
    Ideal::new(&xy, gens).eliminate(&drop)
}

/// Copies `p` into `target`, variable `u` going to `u + offset`.
fn lift(p: &Polynomial, target: &RingRef, offset: usize) -> Polynomial {
    let map: Vec<usize> = (0..p.ring().nvars()).map(|u| u + offset).collect();
    p.map_vars(target, &map)
}

/// `t_{ij} ↦ y_i y_j`.
pub fn embed_t_to_y(f: &Polynomial, fr: &FiberRing) -> Polynomial {
    let images: Vec<Polynomial> = (0..fr.npairs())
        .map(|v| {
            let (i, j) = fr.pair(v);
            Polynomial::var(&fr.s, i).mul_unchecked(&Polynomial::var(&fr.s, j))
        })
        .collect();
    f.substitute(&fr.s, &images)
}

/// `t_{ij} ↦ f_{ij}`; zero exactly when `f` lies in `I(2,A)`.
pub fn evaluate_at_fold(f: &Polynomial, a: &Arrangement) -> Polynomial {
    let fr = FiberRing::new(a.len());
    let images: Vec<Polynomial> = (0..fr.npairs())
        .map(|v| {
            let (i, j) = fr.pair(v);
            complement_product(a, &[i, j])
        })
        .collect();
    f.substitute(a.ring(), &images)
}

/// A multiset of indices (as exponents) splits into pairs of distinct
/// indices iff its size is even and no index exceeds half of it.
fn pairable(exps: &[u16]) -> bool {
    let total: u32 = exps.iter().map(|&e| e as u32).sum();
    total.is_multiple_of(2) && exps.iter().all(|&e| 2 * e as u32 <= total)
}

fn pair_monomial(m: &Monomial, fr: &FiberRing) -> Option<Monomial> {
    let mut exps = m.exponents().to_vec();
    if !pairable(&exps) {
        return None;
    }
    let mut out = vec![0u16; fr.npairs()];
    while let Some(i) = exps.iter().position(|&e| e > 0) {
        exps[i] -= 1;
        let j = (i + 1..fr.n).find(|&j| {
            if exps[j] == 0 {
                return false;
            }
            exps[j] -= 1;
            let ok = pairable(&exps);
            exps[j] += 1;
            ok
        })?;
        exps[j] -= 1;
        out[fr.pair_var(i, j)] += 1;
    }
    Some(Monomial::from_exponents(out))
}

/// Preimage of `M·G` under [`embed_t_to_y`], pairing each term greedily: the
/// smallest remaining index goes with the smallest partner that keeps the rest
/// pairable. `None` if some term cannot be paired.
pub fn pair_into_t(g: &Polynomial, m: &Monomial, fr: &FiberRing) -> Option<Polynomial> {
    let mg = g.mul_monomial(m, &Rational::one());
    if mg.is_zero() || !mg.is_homogeneous() {
        return None;
    }
    let mut terms = Vec::with_capacity(mg.nterms());
    for (mon, c) in mg.terms() {
        terms.push((pair_monomial(mon, fr)?, c.clone()));
    }
    Some(Polynomial::from_terms(&fr.t, terms))
}

/// Minimal dependencies of any size, with coefficients normalized so the
/// first is 1.
pub fn circuits(a: &Arrangement) -> Result<Vec<(Vec<usize>, Vec<Rational>)>> {
    a.require_reduced()?;
    let n = a.len();
    let mut out = Vec::new();
    for s in 3..=(a.rank() + 1).min(n) {
        for sub in subsets(n, s) {
            let cols: Vec<&LinearForm> = sub.iter().map(|&i| &a.forms()[i]).collect();
            let m: Vec<Vec<Rational>> =
                (0..a.nvars()).map(|r| cols.iter().map(|f| f.coeffs()[r].clone()).collect()).collect();
            let ns = linalg::nullspace(&m, s);
            if ns.len() == 1 && ns[0].iter().all(|c| !c.is_zero()) {
                let inv = ns[0][0].recip();
                out.push((sub, ns[0].iter().map(|c| c * &inv).collect()));
            }
        }
    }
    Ok(out)
}

/// `G_C = Σ_j c_j Π_{i ∈ C, i ≠ j} y_i`.
pub fn circuit_generator(indices: &[usize], coeffs: &[Rational], fr: &FiberRing) -> Polynomial {
    let mut terms = Vec::new();
    for (pos, c) in coeffs.iter().enumerate() {
        let mut e = vec![0u16; fr.n];
        for (q, &i) in indices.iter().enumerate() {
            if q != pos {
                e[i] += 1;
            }
        }
        terms.push((Monomial::from_exponents(e), c.clone()));
    }
    Polynomial::from_terms(&fr.s, terms)
}

#[derive(Clone, Debug)]
pub struct Ot2Report {
    pub ideal: Ideal,
    pub minimal_generators: Vec<Polynomial>,
    pub linear: Vec<Polynomial>,
    pub quadratic: Vec<Polynomial>,
    /// Paired preimages of `M·G_C` for circuits `C` and monomials of the two
    /// smallest admissible degrees.
    pub pairings: Vec<Polynomial>,
    pub standard_in_ideal: bool,
    pub pairings_in_ideal: bool,
    pub matches_standard_plus_pairings: bool,
}

impl Ot2Report {
    pub fn pass(&self) -> bool {
        self.standard_in_ideal && self.pairings_in_ideal
    }
}

pub fn ot2_report(a: &Arrangement) -> Result<Ot2Report> {
    let ideal = ot2_ideal(a)?;
    let fr = FiberRing::new(a.len());
    let linear = standard_linear_gens(a)?;
    let quadratic = standard_quadratic_gens(a.len());
    let mut pairings = Vec::new();
    for (idx, coeffs) in circuits(a)? {
        let g = circuit_generator(&idx, &coeffs, &fr);
        let e = ((idx.len() - 1) % 2) as u32;
        for d in [e, e + 2] {
            for m in monomials_of_degree(fr.n, d) {
                if let Some(p) = pair_into_t(&g, &m, &fr) {
                    if !pairings.contains(&p) {
                        pairings.push(p);
                    }
                }
            }
        }
    }
    let mut standard_in_ideal = true;
    for g in linear.iter().chain(&quadratic) {
        standard_in_ideal &= ideal.contains(g)?;
    }
    let mut pairings_in_ideal = true;
    for g in &pairings {
        pairings_in_ideal &= ideal.contains(g)?;
    }
    let candidate = Ideal::new(&fr.t, linear.iter().chain(&quadratic).chain(&pairings).cloned().collect());
    let matches_standard_plus_pairings = candidate.equals(&ideal)?;
    let minimal_generators = ideal.minimal_generators()?;
    Ok(Ot2Report {
        ideal,
        minimal_generators,
        linear,
        quadratic,
        pairings,
        standard_in_ideal,
        pairings_in_ideal,
        matches_standard_plus_pairings,
    })
}

/// Generators of the symmetric ideal of `I_{n-2}(A)` in `R[t]`. Triples are
/// zero-based and increasing.
#[derive(Clone, Debug)]
pub struct SymGenerators {
    pub ring: RingRef,
    pub linear: Vec<([usize; 3], Polynomial)>,
    /// `ℓ_a t_{ab} - ℓ_c t_{bc}`.
    pub a: BTreeMap<[usize; 3], Polynomial>,
    /// `ℓ_a t_{ac} - ℓ_b t_{bc}`.
    pub b: BTreeMap<[usize; 3], Polynomial>,
    /// `ℓ_b t_{ab} - ℓ_c t_{ac}`.
    pub c: BTreeMap<[usize; 3], Polynomial>,
}

impl SymGenerators {
    pub fn all(&self) -> impl Iterator<Item = &Polynomial> {
        self.linear.iter().map(|(_, p)| p).chain(self.a.values()).chain(self.b.values()).chain(self.c.values())
    }
}

pub fn sym_ideal(a: &Arrangement) -> Result<SymGenerators> {
    a.require_reduced()?;
    let n = a.len();
    if n < 3 {
        return Err(Error::InvalidInput("need at least three forms".into()));
    }
    let fr = FiberRing::new(n);
    let ring = fr.xt_ring(a);
    let k = a.nvars();
    let t = |i: usize, j: usize| Polynomial::var(&ring, k + fr.pair_var(i, j));
    let l = |i: usize| lift(&a.forms()[i].to_polynomial(a.ring()), &ring, 0);
    let linear =
        circuits3(a)?.into_iter().zip(standard_linear_gens(a)?).map(|(c, p)| (c.indices, lift(&p, &ring, k))).collect();
    let (mut ga, mut gb, mut gc) = (BTreeMap::new(), BTreeMap::new(), BTreeMap::new());
    for s in subsets(n, 3) {
        let (x, y, z) = (s[0], s[1], s[2]);
        let key = [x, y, z];
        ga.insert(key, l(x).mul_unchecked(&t(x, y)).sub(&l(z).mul_unchecked(&t(y, z))).unwrap());
        gb.insert(key, l(x).mul_unchecked(&t(x, z)).sub(&l(y).mul_unchecked(&t(y, z))).unwrap());
        gc.insert(key, l(y).mul_unchecked(&t(x, y)).sub(&l(z).mul_unchecked(&t(x, z))).unwrap());
    }
    Ok(SymGenerators { ring, linear, a: ga, b: gb, c: gc })
}

fn span_rank<'a>(polys: impl IntoIterator<Item = &'a Polynomial>) -> usize {
    let mut cols: HashMap<Monomial, usize> = HashMap::new();
    let mut rows = Vec::new();
    for p in polys {
        let mut row = Vec::new();
        for (m, c) in p.terms() {
            let next = cols.len();
            row.push((*cols.entry(m.clone()).or_insert(next), c.clone()));
        }
        rows.push(row);
    }
    let dense: Vec<Vec<Rational>> = rows
        .into_iter()
        .map(|row| {
            let mut v = vec![Rational::zero(); cols.len()];
            for (j, c) in row {
                v[j] = c;
            }
            v
        })
        .collect();
    linalg::rank(&dense)
}

/// Dimension of `{ (h_{ij}) ∈ R_1^m : Σ h_{ij} f_{ij} = 0 }`.
fn linear_syzygy_dimension(a: &Arrangement) -> usize {
    let n = a.len();
    let ring = a.ring();
    let fr = FiberRing::new(n);
    let cols: Vec<Polynomial> = (0..fr.npairs())
        .flat_map(|v| {
            let (i, j) = fr.pair(v);
            let f = complement_product(a, &[i, j]);
            (0..a.nvars()).map(move |u| Polynomial::var(ring, u).mul_unchecked(&f)).collect::<Vec<_>>()
        })
        .collect();
    cols.len() - span_rank(&cols)
}

#[derive(Clone, Debug, Serialize)]
pub struct SymReport {
    pub n: usize,
    pub p: usize,
    pub linear_count: usize,
    pub standard_syzygy_count: usize,
    pub all_vanish: bool,
    pub t_degree_one: bool,
    pub minimal_count: usize,
    pub expected_count: usize,
    /// Linear syzygies of the `f_{ij}` computed directly.
    pub syzygy_dimension: usize,
    pub strand_generated: bool,
    pub pass: bool,
}

/// Soundness, t-degree, minimal generator count and the `(1,1)` strand of
/// the symmetric ideal.
pub fn sym_check(a: &Arrangement) -> Result<SymReport> {
    let g = sym_ideal(a)?;
    let n = a.len();
    let k = a.nvars();
    let p = p_of_arrangement(a)?;
    let fr = FiberRing::new(n);
    let images: Vec<Polynomial> = (0..k)
        .map(|u| Polynomial::var(a.ring(), u))
        .chain((0..fr.npairs()).map(|v| {
            let (i, j) = fr.pair(v);
            complement_product(a, &[i, j])
        }))
        .collect();
    let all_vanish = g.all().all(|q| q.substitute(a.ring(), &images).is_zero());
    let t_degree_one = g.all().all(|q| q.terms().iter().all(|(m, _)| m.exponents()[k..].iter().sum::<u16>() == 1));
    let lin: Vec<&Polynomial> = g.linear.iter().map(|(_, q)| q).collect();
    let xs: Vec<Polynomial> = (0..k).map(|u| Polynomial::var(&g.ring, u)).collect();
    let x_lin: Vec<Polynomial> = lin.iter().flat_map(|q| xs.iter().map(move |x| x.mul_unchecked(q))).collect();
    let r01 = span_rank(lin.iter().copied());
    let rx = span_rank(&x_lin);
    let strand: Vec<&Polynomial> = x_lin.iter().chain(g.a.values()).chain(g.b.values()).chain(g.c.values()).collect();
    let r11 = span_rank(strand.iter().copied());
    let minimal_count = r01 + r11 - rx;
    let expected_count = n * (n - 2) - p;
    let syzygy_dimension = linear_syzygy_dimension(a);
    let strand_generated = all_vanish && r11 == syzygy_dimension;
    let pass = all_vanish && t_degree_one && minimal_count == expected_count && strand_generated;
    Ok(SymReport {
        n,
        p,
        linear_count: g.linear.len(),
        standard_syzygy_count: g.a.len() * 3,
        all_vanish,
        t_degree_one,
        minimal_count,
        expected_count,
        syzygy_dimension,
        strand_generated,
        pass,
    })
}

/// Determinant of the content matrix of `rows` with respect to `seq`.
#[derive(Clone, Debug)]
pub struct SylvesterForm {
    pub content: Vec<Vec<Polynomial>>,
    pub determinant: Polynomial,
    /// `determinant = monomial_factor · cofactor`.
    pub monomial_factor: Monomial,
    pub cofactor: Polynomial,
    /// Both vanish under `t ↦ f`.
    pub determinant_in_ideal: bool,
    pub cofactor_in_ideal: bool,
}

fn determinant(m: &[Vec<Polynomial>], ring: &RingRef) -> Polynomial {
    match m.len() {
        0 => Polynomial::one(ring),
        1 => m[0][0].clone(),
        r => {
            let mut acc = Polynomial::zero(ring);
            for c in 0..r {
                if m[0][c].is_zero() {
                    continue;
                }
                let minor: Vec<Vec<Polynomial>> = m[1..]
                    .iter()
                    .map(|row| row.iter().enumerate().filter(|&(j, _)| j != c).map(|(_, p)| p.clone()).collect())
                    .collect();
                let sign = if c % 2 == 0 { Rational::one() } else { -Rational::one() };
                acc = acc.add_scaled(&m[0][c].mul_unchecked(&determinant(&minor, ring)), &sign, None);
            }
            acc
        }
    }
}

/// Writes each row (a polynomial in `R[t]` of `x`-degree one) as
/// `Σ_i C_i(t) · seq_i` and takes `det C`. The decomposition is unique since
/// `seq` is linearly independent.
pub fn sylvester_form(a: &Arrangement, rows: &[Polynomial], seq: &[LinearForm]) -> Result<SylvesterForm> {
    let k = a.nvars();
    let r = seq.len();
    if rows.len() != r {
        return Err(Error::InvalidInput(format!("{} rows for {} forms", rows.len(), r)));
    }
    let s: Vec<Vec<Rational>> = seq.iter().map(|f| f.coeffs().to_vec()).collect();
    if linalg::rank(&s) != r {
        return Err(Error::InvalidInput("sequence forms are linearly dependent".into()));
    }
    let st = linalg::transpose(&s, k);
    let fr = FiberRing::new(a.len());
    let mut content = Vec::with_capacity(r);
    for (ri, row) in rows.iter().enumerate() {
        let mut by_t: BTreeMap<Monomial, Vec<Rational>> = BTreeMap::new();
        for (m, c) in row.terms() {
            let e = m.exponents();
            let xdeg: u16 = e[..k].iter().sum();
            let u = e[..k].iter().position(|&d| d == 1);
            match (xdeg, u) {
                (1, Some(u)) => {
                    let tm = Monomial::from_exponents(e[k..].to_vec());
                    by_t.entry(tm).or_insert_with(|| vec![Rational::zero(); k])[u] += c;
                }
                _ => return Err(Error::InvalidInput(format!("row {} has a term of x-degree {xdeg}", ri + 1))),
            }
        }
        let mut entries = vec![Vec::new(); r];
        for (tm, v) in by_t {
            let c = linalg::solve(&st, &v)
                .ok_or_else(|| Error::InvalidInput(format!("row {} is not expressible in the sequence", ri + 1)))?;
            for (i, ci) in c.into_iter().enumerate() {
                if !ci.is_zero() {
                    entries[i].push((tm.clone(), ci));
                }
            }
        }
        content.push(entries.into_iter().map(|ts| Polynomial::from_terms(&fr.t, ts)).collect::<Vec<_>>());
    }
    let det = determinant(&content, &fr.t);
    let (monomial_factor, cofactor) = match det.monomial_content() {
        Some(m) => {
            let q = det.div_monomial(&m).expect("content divides");
            (m, q)
        }
        None => (Monomial::one(fr.npairs()), det.clone()),
    };
    let determinant_in_ideal = evaluate_at_fold(&det, a).is_zero();
    let cofactor_in_ideal = evaluate_at_fold(&cofactor, a).is_zero();
    Ok(SylvesterForm { content, determinant: det, monomial_factor, cofactor, determinant_in_ideal, cofactor_in_ideal })
}

#[derive(Clone, Debug, Serialize)]
pub struct DimensionReport {
    pub k: usize,
    pub krull_dimension: usize,
    pub pass: bool,
}

/// Krull dimension of `T/I(2,A)` against `k` for essential `A`.
pub fn dimension_check(a: &Arrangement) -> Result<DimensionReport> {
    a.require_essential()?;
    let k = a.nvars();
    if k < 2 {
        return Err(Error::InvalidInput("needs rank >= 2".into()));
    }
    let d = ot2_ideal(a)?.krull_dimension()?;
    Ok(DimensionReport { k, krull_dimension: d, pass: d == k })
}

#[derive(Clone, Debug)]
pub struct PropertiesReport {
    /// Images of the Gröbner basis of `I(2,A)` in `S`.
    pub j: Ideal,
    pub classical: Ideal,
    pub j_in_classical: bool,
    pub colon_equals_classical: bool,
}

impl PropertiesReport {
    pub fn pass(&self) -> bool {
        self.j_in_classical && self.colon_equals_classical
    }
}

/// `J(A) ⊆ I(A)` and `J(A) : ⟨y_1..y_n⟩ = I(A)`.
pub fn properties_check(a: &Arrangement) -> Result<PropertiesReport> {
    let fr = FiberRing::new(a.len());
    let i2 = ot2_ideal(a)?;
    let gb = i2.groebner()?;
    let j = Ideal::new(&fr.s, gb.polys().iter().map(|g| embed_t_to_y(g, &fr)).collect());
    let classical = ot_classical_ideal(a)?;
    let j_in_classical = classical.contains_ideal(&j)?;
    let colon = j.colon_ideal(&Ideal::maximal(&fr.s))?;
    let colon_equals_classical = colon.equals(&classical)?;
    Ok(PropertiesReport { j, classical, j_in_classical, colon_equals_classical })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{parse_polynomial, rat};

    fn arr(k: usize, rows: &[&[i64]]) -> Arrangement {
        Arrangement::from_int_rows(k, rows).unwrap()
    }

    fn example() -> Arrangement {
        arr(3, &[&[1, 0, 0], &[0, 1, 0], &[1, 1, 0], &[0, 0, 1]])
    }

    fn tp(s: &str, fr: &FiberRing) -> Polynomial {
        parse_polynomial(s, &fr.t).unwrap()
    }

    #[test]
    fn pair_numbering() {
        let fr = FiberRing::new(4);
        assert_eq!(fr.npairs(), 6);
        for v in 0..6 {
            let (i, j) = fr.pair(v);
            assert_eq!(fr.pair_var(i, j), v);
        }
        assert_eq!(fr.t.names()[5], "t3_4");
    }

    #[test]
    fn standard_generators_of_example() {
        let fr = FiberRing::new(4);
        let l = standard_linear_gens(&example()).unwrap();
        assert_eq!(l, vec![tp("t2_3 + t1_3 - t1_2", &fr)]);
        let q = standard_quadratic_gens(4);
        assert_eq!(q, vec![tp("t1_2*t3_4 - t1_3*t2_4", &fr), tp("t1_2*t3_4 - t1_4*t2_3", &fr)]);
        assert!(standard_quadratic_gens(3).is_empty());
        assert_eq!(standard_quadratic_gens(5).len(), 10);
        let generic = arr(3, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[1, 1, 1]]);
        assert!(standard_linear_gens(&generic).unwrap().is_empty());
        assert_eq!(standard_linear_gens(&arr(2, &[&[1, 0], &[0, 1], &[1, 1], &[1, -1]])).unwrap().len(), 4);
    }

    #[test]
    fn ot2_ideal_of_example() {
        let fr = FiberRing::new(4);
        let i = ot2_ideal(&example()).unwrap();
        let want = Ideal::new(
            &fr.t,
            vec![
                tp("t2_3 + t1_3 - t1_2", &fr),
                tp("t1_2*t3_4 - t1_3*t2_4", &fr),
                tp("t1_2*t3_4 - t1_4*t2_3", &fr),
                tp("t2_4*t3_4 + t1_4*t3_4 - t1_4*t2_4", &fr),
            ],
        );
        assert!(i.equals(&want).unwrap());
        let r = ot2_report(&example()).unwrap();
        assert!(r.pass() && r.matches_standard_plus_pairings);
        assert_eq!(r.minimal_generators.len(), 4);
    }

    #[test]
    fn small_ot2_ideals_vanish() {
        assert!(ot2_ideal(&arr(3, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]])).unwrap().groebner().unwrap().is_empty());
        assert!(ot2_ideal(&arr(2, &[&[1, 0], &[0, 1]])).unwrap().groebner().unwrap().is_empty());
    }

    #[test]
    fn classical_ideal() {
        let fr = FiberRing::new(4);
        let i = ot_classical_ideal(&example()).unwrap();
        assert!(i.contains(&parse_polynomial("y2*y3 + y1*y3 - y1*y2", &fr.s).unwrap()).unwrap());
        let g = ot_classical_ideal(&arr(3, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]])).unwrap();
        assert!(g.groebner().unwrap().is_empty());
        let fr3 = FiberRing::new(3);
        let p = ot_classical_ideal(&arr(2, &[&[1, 0], &[0, 1], &[1, 1]])).unwrap();
        let gb = p.groebner().unwrap();
        assert_eq!(gb.len(), 1);
        let want = Ideal::new(&fr3.s, vec![parse_polynomial("y2*y3 + y1*y3 - y1*y2", &fr3.s).unwrap()]);
        assert!(p.equals(&want).unwrap());
    }

    #[test]
    fn embedding() {
        let fr = FiberRing::new(4);
        let y = |s: &str| parse_polynomial(s, &fr.s).unwrap();
        assert_eq!(embed_t_to_y(&tp("t2_3 + t1_3 - t1_2", &fr), &fr), y("y2*y3 + y1*y3 - y1*y2"));
        assert!(embed_t_to_y(&standard_quadratic_gens(4)[0], &fr).is_zero());
        assert_eq!(embed_t_to_y(&tp("t1_2", &fr), &fr), y("y1*y2"));
    }

    #[test]
    fn pairings() {
        let fr = FiberRing::new(4);
        let g = parse_polynomial("y2*y3 + y1*y3 - y1*y2", &fr.s).unwrap();
        let m44 = Monomial::from_exponents(vec![0, 0, 0, 2]);
        assert_eq!(pair_into_t(&g, &m44, &fr).unwrap(), tp("t2_4*t3_4 + t1_4*t3_4 - t1_4*t2_4", &fr));
        let m14 = Monomial::from_exponents(vec![1, 0, 0, 1]);
        let p = pair_into_t(&g, &m14, &fr).unwrap();
        assert_eq!(p, tp("t1_2*t3_4 + t1_3*t1_4 - t1_2*t1_4", &fr));
        let q = Ideal::new(&fr.t, standard_quadratic_gens(4));
        let diff = p.sub(&tp("t1_4", &fr).mul_unchecked(&tp("t2_3 + t1_3 - t1_2", &fr))).unwrap();
        assert!(q.contains(&diff).unwrap());
        assert!(pair_into_t(&g, &Monomial::from_exponents(vec![1, 0, 0, 0]), &fr).is_none());
        for m in [m14, m44] {
            let f = pair_into_t(&g, &m, &fr).unwrap();
            assert!(evaluate_at_fold(&f, &example()).is_zero());
            assert_eq!(embed_t_to_y(&f, &fr), g.mul_monomial(&m, &rat(1)));
        }
    }

    #[test]
    fn pairing_avoids_dead_ends() {
        let fr = FiberRing::new(3);
        let m = Monomial::from_exponents(vec![1, 1, 2]);
        assert_eq!(pair_monomial(&m, &fr).unwrap(), Monomial::from_exponents(vec![0, 1, 1]));
    }

    #[test]
    fn sym_examples() {
        let r = sym_check(&example()).unwrap();
        assert!(r.pass, "{r:?}");
        assert_eq!(r.minimal_count, 7);
        let g = arr(3, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[1, 1, 1]]);
        let r = sym_check(&g).unwrap();
        assert!(r.pass);
        assert_eq!((r.minimal_count, r.linear_count), (8, 0));
        let g3 = sym_ideal(&arr(3, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]])).unwrap();
        assert_eq!(g3.a[&[0, 1, 2]], parse_polynomial("x1*t1_2 - x3*t2_3", &g3.ring).unwrap());
    }

    fn same_up_to_sign(p: &Polynomial, q: &Polynomial) -> bool {
        *p == *q || p.neg() == *q
    }

    #[test]
    fn sylvester_golden() {
        for (a1, a2) in [(1, 1), (2, -3), (-1, 5)] {
            let a = arr(2, &[&[1, 0], &[0, 1], &[a1, a2]]);
            let s = sym_ideal(&a).unwrap();
            let seq = [a.forms()[0].clone(), a.forms()[1].clone()];
            let f = sylvester_form(&a, &[s.a[&[0, 1, 2]].clone(), s.b[&[0, 1, 2]].clone()], &seq).unwrap();
            let fr = FiberRing::new(3);
            let l = standard_linear_gens(&a).unwrap().remove(0);
            // the stored circuit is scaled so its first coefficient is 1
            assert_eq!(f.determinant.monic(), tp("t2_3", &fr).mul_unchecked(&l).monic());
            let inner = tp("t1_2", &fr).add_scaled(&tp("t2_3", &fr), &rat(-a1), None).add_scaled(
                &tp("t1_3", &fr),
                &rat(-a2),
                None,
            );
            let want = tp("t2_3", &fr).mul_unchecked(&inner).neg();
            assert_eq!(f.determinant, want);
            assert!(f.determinant_in_ideal && f.cofactor_in_ideal);
        }

        let (a1, a2, a3) = (2, -1, 3);
        let a = arr(3, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[a1, a2, a3]]);
        let s = sym_ideal(&a).unwrap();
        let seq = [a.forms()[0].clone(), a.forms()[1].clone(), a.forms()[2].clone()];
        let rows = [s.a[&[0, 1, 2]].clone(), s.b[&[0, 1, 2]].clone(), s.a[&[0, 1, 3]].clone()];
        let f = sylvester_form(&a, &rows, &seq).unwrap();
        let fr = FiberRing::new(4);
        let big_f = tp("t1_2*t2_4", &fr)
            .scale(&rat(a3))
            .add_scaled(&tp("t1_3*t2_4", &fr), &rat(a2), None)
            .add_scaled(&tp("t2_3*t2_4", &fr), &rat(a1), None)
            .sub(&tp("t1_2*t2_3", &fr))
            .unwrap();
        assert!(same_up_to_sign(&f.determinant, &tp("t2_3", &fr).mul_unchecked(&big_f)));
        assert!(f.cofactor_in_ideal);

        let ex = example();
        let s = sym_ideal(&ex).unwrap();
        let rows = [s.a[&[0, 1, 3]].clone(), s.a[&[0, 2, 3]].clone()];
        let f = sylvester_form(&ex, &rows, &[ex.forms()[0].clone(), ex.forms()[3].clone()]).unwrap();
        assert_eq!(f.determinant, tp("t1_3*t2_4 - t1_2*t3_4", &fr));
        assert_eq!(f.determinant, standard_quadratic_gens(4)[0].neg());
    }

    #[test]
    fn sylvester_errors() {
        let ex = example();
        let s = sym_ideal(&ex).unwrap();
        let rows = [s.a[&[0, 1, 3]].clone(), s.a[&[0, 2, 3]].clone()];
        assert!(sylvester_form(&ex, &rows, &[ex.forms()[0].clone(), ex.forms()[0].clone()]).is_err());
        assert!(sylvester_form(&ex, &rows, &[ex.forms()[0].clone(), ex.forms()[1].clone()]).is_err());
    }

    #[test]
    fn dimensions() {
        assert_eq!(dimension_check(&example()).unwrap().krull_dimension, 3);
        assert!(dimension_check(&arr(2, &[&[1, 0], &[0, 1], &[1, 1]])).unwrap().pass);
        assert!(dimension_check(&arr(3, &[&[1, 0, 0], &[0, 1, 0], &[1, 1, 0]])).is_err());
    }

    #[test]
    fn properties() {
        assert!(properties_check(&example()).unwrap().pass());
        assert!(properties_check(&arr(3, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]])).unwrap().pass());
        assert!(properties_check(&arr(2, &[&[1, 0], &[0, 1], &[1, 1]])).unwrap().pass());
    }
}
