//! Minimal graded free resolutions via iterated Schreyer syzygies.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Serialize, Serializer};

use super::ideal::{inverse_power_coeff, series_coefficients};
use super::modules::{schreyer_step, sort_level, ModVec, Schreyer};
use super::Ideal;
use crate::error::{Error, Result};
use crate::exactalg::{Monomial, MonomialOrder, Polynomial, Rational, RingRef};

/// Graded Betti numbers `β_{i,j}`: homological index `i`, internal degree `j`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BettiTable {
    entries: BTreeMap<(usize, u32), usize>,
}

impl BettiTable {
    pub fn from_entries(entries: impl IntoIterator<Item = ((usize, u32), usize)>) -> Self {
        let mut t = BettiTable::default();
        for ((i, j), b) in entries {
            if b > 0 {
                *t.entries.entry((i, j)).or_default() += b;
            }
        }
        t
    }

    pub fn get(&self, i: usize, j: u32) -> usize {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    /// Nonzero entries in `(i, j)` order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, u32, usize)> + '_ {
        self.entries.iter().map(|(&(i, j), &b)| (i, j, b))
    }

    /// `β_i = Σ_j β_{i,j}` for `i = 0..=pd`.
    pub fn totals(&self) -> Vec<usize> {
        let mut v = vec![0; self.projective_dimension().map_or(0, |p| p + 1)];
        for (&(i, _), &b) in &self.entries {
            v[i] += b;
        }
        v
    }

    pub fn projective_dimension(&self) -> Option<usize> {
        self.entries.keys().map(|&(i, _)| i).max()
    }

    /// `max (j - i)` over nonzero entries.
    pub fn regularity(&self) -> Option<i64> {
        self.entries.keys().map(|&(i, j)| j as i64 - i as i64).max()
    }

    /// `Σ (-1)^i β_{i,j} T^j`, the Hilbert series numerator.
    pub fn hilbert_numerator(&self) -> Vec<BigInt> {
        let top = self.entries.keys().map(|&(_, j)| j as usize).max().unwrap_or(0);
        let mut n = vec![BigInt::zero(); top + 1];
        for (&(i, j), &b) in &self.entries {
            let b = BigInt::from(b);
            if i % 2 == 0 {
                n[j as usize] += b;
            } else {
                n[j as usize] -= b;
            }
        }
        n
    }

    /// Hilbert function of the resolved module implied by the table.
    pub fn hilbert_function(&self, nvars: usize, d_max: u32) -> Vec<BigInt> {
        series_coefficients(&self.hilbert_numerator(), nvars, d_max)
    }

    /// True when every entry with `i >= 1` sits at `j = i + shift`.
    pub fn is_single_strand(&self, shift: u32) -> bool {
        self.entries.keys().all(|&(i, j)| i == 0 || j == i as u32 + shift)
    }

    /// Table in the usual layout: row `j - i`, column `i`.
    pub fn render(&self) -> String {
        let Some(pd) = self.projective_dimension() else {
            return "(zero module)\n".into();
        };
        let rows: Vec<i64> = {
            let lo = self.entries.keys().map(|&(i, j)| j as i64 - i as i64).min().unwrap();
            let hi = self.regularity().unwrap();
            (lo..=hi).collect()
        };
        let width = 1 + self.entries.values().map(|b| b.to_string().len()).max().unwrap_or(1).max(pd.to_string().len());
        let mut s = String::new();
        s.push_str(&format!("{:>6}", ""));
        for i in 0..=pd {
            s.push_str(&format!("{:>w$}", i, w = width + 1));
        }
        s.push_str("\ntotal:");
        for b in self.totals() {
            s.push_str(&format!("{:>w$}", b, w = width + 1));
        }
        s.push('\n');
        for r in rows {
            s.push_str(&format!("{:>5}:", r));
            for i in 0..=pd {
                let j = r + i as i64;
                let b = if j >= 0 { self.get(i, j as u32) } else { 0 };
                let cell = if b == 0 { ".".to_string() } else { b.to_string() };
                s.push_str(&format!("{:>w$}", cell, w = width + 1));
            }
            s.push('\n');
        }
        s
    }
}

impl Serialize for BettiTable {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Entry {
            i: usize,
            j: u32,
            beta: usize,
        }
        ser.collect_seq(self.entries().map(|(i, j, beta)| Entry { i, j, beta }))
    }
}

impl fmt::Display for BettiTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// `0 <- F_0 <- F_1 <- ... <- F_p <- 0` with `F_i = ⊕ R(-degrees[i][c])`.
/// `maps[i]` is `d_{i+1}: F_{i+1} -> F_i` as a dense `rank F_i × rank F_{i+1}`
/// matrix.
#[derive(Clone, Debug)]
pub struct FreeResolution {
    ring: RingRef,
    degrees: Vec<Vec<u32>>,
    maps: Vec<Vec<Vec<Polynomial>>>,
}

impl FreeResolution {
    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    /// Number of free modules (`pd + 1`).
    pub fn len(&self) -> usize {
        self.degrees.len()
    }

    pub fn is_empty(&self) -> bool {
        self.degrees.is_empty()
    }

    pub fn ranks(&self) -> Vec<usize> {
        self.degrees.iter().map(Vec::len).collect()
    }

    pub fn degrees(&self, i: usize) -> &[u32] {
        &self.degrees[i]
    }

    /// `d_i: F_i -> F_{i-1}` for `i >= 1`.
    pub fn map(&self, i: usize) -> &[Vec<Polynomial>] {
        &self.maps[i - 1]
    }

    pub fn betti(&self) -> BettiTable {
        BettiTable::from_entries(
            self.degrees.iter().enumerate().flat_map(|(i, ds)| ds.iter().map(move |&d| ((i, d), 1))),
        )
    }

    /// `d_i ∘ d_{i+1} = 0` for all `i`.
    pub fn is_complex(&self) -> bool {
        for w in self.maps.windows(2) {
            let (a, b) = (&w[0], &w[1]);
            let inner = b.len();
            for row in a {
                for col in 0..b.first().map_or(0, Vec::len) {
                    let mut acc = Polynomial::zero(&self.ring);
                    for (x, brow) in row.iter().zip(b).take(inner) {
                        if !x.is_zero() && !brow[col].is_zero() {
                            acc = acc.add(&x.mul_unchecked(&brow[col])).unwrap();
                        }
                    }
                    if !acc.is_zero() {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Maps are homogeneous of degree zero: entry `(r, c)` of `d_i` is zero
    /// or homogeneous of degree `deg F_i[c] - deg F_{i-1}[r]`.
    pub fn is_graded(&self) -> bool {
        self.maps.iter().enumerate().all(|(i, m)| {
            m.iter().enumerate().all(|(r, row)| {
                row.iter().enumerate().all(|(c, p)| {
                    p.is_zero()
                        || (p.is_homogeneous()
                            && p.degree().map(|d| d + self.degrees[i][r]) == Some(self.degrees[i + 1][c]))
                })
            })
        })
    }

    /// No entry of any differential is a nonzero constant.
    pub fn is_minimal(&self) -> bool {
        self.maps.iter().flatten().flatten().all(|p| p.is_zero() || !p.is_constant())
    }

    /// `Σ_i (-1)^i dim (F_i)_d` for `d = 0..=d_max`.
    pub fn euler_characteristic(&self, d_max: u32) -> Vec<BigInt> {
        let k = self.ring.nvars();
        (0..=d_max)
            .map(|d| {
                let mut s = BigInt::zero();
                for (i, ds) in self.degrees.iter().enumerate() {
                    for &t in ds {
                        if t <= d {
                            let v = inverse_power_coeff((d - t) as usize, k);
                            if i % 2 == 0 {
                                s += v;
                            } else {
                                s -= v;
                            }
                        }
                    }
                }
                s
            })
            .collect()
    }

    /// Largest twist appearing in the resolution.
    pub fn max_twist(&self) -> u32 {
        self.degrees.iter().flatten().copied().max().unwrap_or(0)
    }
}

struct Sparse {
    /// column -> (row -> entry)
    cols: Vec<BTreeMap<usize, Polynomial>>,
}

fn constant_value(p: &Polynomial) -> Option<Rational> {
    (p.is_constant() && !p.is_zero()).then(|| p.leading_coeff().unwrap().clone())
}

/// Minimal graded free resolution of `R/I` for a homogeneous ideal `I`.
///
/// Iterated Schreyer syzygies give a (generally non-minimal) graded free
/// resolution; unit entries are then cancelled one at a time.
pub fn minimal_free_resolution(i: &Ideal) -> Result<(FreeResolution, BettiTable)> {
    if !i.is_homogeneous() {
        return Err(Error::InvalidInput("resolution needs a homogeneous ideal".into()));
    }
    let work = if i.ring().order() == MonomialOrder::Grevlex { i.clone() } else { i.in_order(MonomialOrder::Grevlex) };
    let ring = work.ring().clone();
    let k = ring.nvars();
    let gb = work.groebner()?;

    let mut degrees: Vec<Vec<u32>> = vec![vec![0]];
    let mut maps: Vec<Sparse> = Vec::new();
    let mut ord = Schreyer { lead: vec![Monomial::one(k)], rank: vec![0] };
    let mut elems: Vec<ModVec> = gb.polys().iter().map(|p| ModVec::from_polynomial(p, 0)).collect();
    let budget = work.budget();
    while !elems.is_empty() {
        if maps.len() > k + 1 {
            return Err(Error::InvalidInput("resolution longer than the number of variables".into()));
        }
        sort_level(&mut elems);
        let prev_rank = degrees.last().unwrap().len();
        let mut cols = Vec::with_capacity(elems.len());
        let mut degs = Vec::with_capacity(elems.len());
        for e in &elems {
            let (c, m, _) = e.lead().unwrap();
            let d = m.degree() + degrees.last().unwrap()[*c];
            if d > budget.max_degree {
                return Err(Error::Budget(format!("syzygy degree {d} exceeds limit {}", budget.max_degree)));
            }
            degs.push(d);
            let polys = e.to_polys(&ring, prev_rank);
            cols.push(polys.into_iter().enumerate().filter(|(_, p)| !p.is_zero()).collect());
        }
        degrees.push(degs);
        maps.push(Sparse { cols });
        let (next_ord, syz) = schreyer_step(&elems, &ord)?;
        ord = next_ord;
        elems = syz;
    }

    let (degrees, maps) = minimalize(&ring, degrees, maps);
    let res = FreeResolution { ring: i.ring().clone(), degrees, maps: to_original_ring(maps, i.ring()) };
    let betti = res.betti();
    Ok((res, betti))
}

fn to_original_ring(maps: Vec<Vec<Vec<Polynomial>>>, ring: &RingRef) -> Vec<Vec<Vec<Polynomial>>> {
    maps.into_iter()
        .map(|m| m.into_iter().map(|row| row.into_iter().map(|p| p.to_ring(ring)).collect()).collect())
        .collect()
}

/// Cancels unit entries. For a unit `u` at `(r, c)` of `d_i`, the other
/// columns of `d_i` are cleared in row `r` by a change of basis of `F_i`
/// (which only alters row `c` of `d_{i+1}`), then the summand `R e_c ->
/// R e_r` is split off: column `c` and row `r` of `d_i`, row `c` of
/// `d_{i+1}` and column `r` of `d_{i-1}` are dropped.
fn minimalize(
    ring: &RingRef,
    degrees: Vec<Vec<u32>>,
    mut maps: Vec<Sparse>,
) -> (Vec<Vec<u32>>, Vec<Vec<Vec<Polynomial>>>) {
    let mut alive: Vec<Vec<bool>> = degrees.iter().map(|d| vec![true; d.len()]).collect();
    for lvl in 0..maps.len() {
        // d_{lvl+1}: F_{lvl+1} -> F_lvl
        loop {
            let mut found = None;
            'scan: for (c, col) in maps[lvl].cols.iter().enumerate() {
                if !alive[lvl + 1][c] {
                    continue;
                }
                for (&r, p) in col {
                    if let Some(u) = constant_value(p) {
                        found = Some((r, c, u));
                        break 'scan;
                    }
                }
            }
            let Some((r, c, u)) = found else { break };
            let pivot = maps[lvl].cols[c].clone();
            for (c2, col2) in maps[lvl].cols.iter_mut().enumerate() {
                if c2 == c || !alive[lvl + 1][c2] {
                    continue;
                }
                let Some(a) = col2.get(&r).cloned() else {
                    continue;
                };
                let factor = a.scale(&u.recip());
                for (&r2, q) in &pivot {
                    let delta = factor.mul_unchecked(q);
                    let entry = col2.remove(&r2).unwrap_or_else(|| Polynomial::zero(q.ring()));
                    let v = entry.sub(&delta).unwrap();
                    if !v.is_zero() {
                        col2.insert(r2, v);
                    }
                }
                debug_assert!(!col2.contains_key(&r));
            }
            maps[lvl].cols[c].clear();
            alive[lvl + 1][c] = false;
            alive[lvl][r] = false;
            // row c of d_{lvl+2}
            if lvl + 1 < maps.len() {
                for col in &mut maps[lvl + 1].cols {
                    col.remove(&c);
                }
            }
            // column r of d_lvl
            if lvl >= 1 {
                maps[lvl - 1].cols[r].clear();
            }
        }
    }
    let mut new_degrees: Vec<Vec<u32>> = Vec::new();
    let mut index: Vec<Vec<Option<usize>>> = Vec::new();
    for (lvl, ds) in degrees.iter().enumerate() {
        let mut idx = vec![None; ds.len()];
        let mut kept = Vec::new();
        for (c, &d) in ds.iter().enumerate() {
            if alive[lvl][c] {
                idx[c] = Some(kept.len());
                kept.push(d);
            }
        }
        new_degrees.push(kept);
        index.push(idx);
    }
    let mut out = Vec::new();
    for (lvl, m) in maps.iter().enumerate() {
        let rows = new_degrees[lvl].len();
        let cols = new_degrees[lvl + 1].len();
        let mut dense = vec![vec![Polynomial::zero(ring); cols]; rows];
        for (c, col) in m.cols.iter().enumerate() {
            let Some(nc) = index[lvl + 1][c] else {
                continue;
            };
            for (&r, p) in col {
                let nr = index[lvl][r].expect("entries only in live rows");
                dense[nr][nc] = p.clone();
            }
        }
        out.push(dense);
    }
    while new_degrees.len() > 1 && new_degrees.last().is_some_and(Vec::is_empty) {
        new_degrees.pop();
        out.pop();
    }
    if new_degrees.len() == 1 && new_degrees[0].is_empty() {
        // R/R = 0
        new_degrees.clear();
        out.clear();
    }
    debug_assert!(out.iter().flatten().flatten().all(|p| constant_value(p).is_none() || p.is_zero()));
    (new_degrees, out)
}
