#![allow(dead_code)]

use std::collections::HashMap;

use num_traits::Zero;

use linfold_core::arrangement::{random_arrangement, RandomSpec};
use linfold_core::exactalg::monomials_of_degree;
use linfold_core::{Arrangement, Ideal, Monomial, Polynomial, Rational};

pub fn arr(k: usize, rows: &[&[i64]]) -> Arrangement {
    Arrangement::from_int_rows(k, rows).unwrap()
}

/// Arrangements with `k <= 4`, `3 <= n <= 6`: rank 2, generic and a few with
/// triple points.
pub fn suite() -> Vec<(&'static str, Arrangement)> {
    vec![
        ("pencil3", arr(2, &[&[1, 0], &[0, 1], &[1, 1]])),
        ("pencil4", arr(2, &[&[1, 0], &[0, 1], &[1, 1], &[1, -1]])),
        ("pencil5", arr(2, &[&[1, 0], &[0, 1], &[1, 1], &[1, -1], &[1, 2]])),
        ("pencil3_in_3vars", arr(3, &[&[1, 0, 0], &[0, 1, 0], &[1, 1, 0]])),
        ("triple4", arr(3, &[&[1, 0, 0], &[0, 1, 0], &[1, 1, 0], &[0, 0, 1]])),
        ("generic4", arr(3, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[1, 1, 1]])),
        ("generic5", arr(3, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[1, 1, 1], &[1, 2, 3]])),
        ("triple5", arr(3, &[&[1, 0, 0], &[0, 1, 0], &[1, 1, 0], &[0, 0, 1], &[1, 2, 3]])),
        ("braid6", arr(3, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[1, -1, 0], &[1, 0, -1], &[0, 1, -1]])),
        ("quadruple6", arr(3, &[&[1, 0, 0], &[0, 1, 0], &[1, 1, 0], &[1, -1, 0], &[0, 0, 1], &[1, 2, 3]])),
        ("generic4_5", arr(4, &[&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, 1], &[1, 1, 1, 1]])),
        (
            "generic4_6",
            arr(4, &[&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, 1], &[1, 1, 1, 1], &[1, 2, 3, 4]]),
        ),
    ]
}

/// Essential line arrangements in three variables.
pub fn plane_suite() -> Vec<(&'static str, Arrangement)> {
    suite().into_iter().filter(|(_, a)| a.nvars() == 3 && a.is_essential()).collect()
}

/// Seeded random reduced arrangements of rank at least 3.
pub fn random_rank3(count: usize, seed: u64) -> Vec<Arrangement> {
    (0..count as u64)
        .map(|i| {
            let k = 3 + (i % 2) as usize;
            let n = k + (i % 4) as usize;
            let spec = RandomSpec { k, n, bound: 3, reduced: true, min_rank: 3 };
            random_arrangement(&spec, seed + i)
        })
        .collect()
}

// ---- dense linear algebra, kept separate from the library's own ----

pub fn rank_of(rows: &[Vec<Rational>]) -> usize {
    echelon(rows.to_vec()).len()
}

/// Row echelon basis with pivot column; each row has a 1 at its pivot and
/// zeros there in every other row.
fn echelon(mut rows: Vec<Vec<Rational>>) -> Vec<(usize, Vec<Rational>)> {
    let mut out: Vec<(usize, Vec<Rational>)> = Vec::new();
    for mut r in rows.drain(..) {
        for (p, b) in &out {
            if !r[*p].is_zero() {
                let c = r[*p].clone();
                for (x, y) in r.iter_mut().zip(b) {
                    *x -= &c * y;
                }
            }
        }
        if let Some(p) = r.iter().position(|x| !x.is_zero()) {
            let inv = r[p].recip();
            for x in r.iter_mut() {
                *x *= &inv;
            }
            for (_, b) in out.iter_mut() {
                if !b[p].is_zero() {
                    let c = b[p].clone();
                    for (x, y) in b.iter_mut().zip(&r) {
                        *x -= &c * y;
                    }
                }
            }
            out.push((p, r));
        }
    }
    out
}

/// `(R/I)_d` as `R_d` modulo the span of `m·g`, with a reduction map to
/// coordinates on the non-pivot monomials.
pub struct GradedPiece {
    pub monomials: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
    basis: Vec<(usize, Vec<Rational>)>,
    /// Positions of the monomials that survive in the quotient.
    pub free: Vec<usize>,
}

impl GradedPiece {
    pub fn new(gens: &[Polynomial], nvars: usize, d: u32) -> Self {
        let monomials = monomials_of_degree(nvars, d);
        let index: HashMap<Monomial, usize> = monomials.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
        let mut rows = Vec::new();
        for g in gens {
            let gd = g.degree().unwrap();
            if gd > d {
                continue;
            }
            for m in monomials_of_degree(nvars, d - gd) {
                let mut v = vec![Rational::zero(); monomials.len()];
                for (t, c) in g.terms() {
                    v[index[&t.mul(&m)]] += c;
                }
                rows.push(v);
            }
        }
        let basis = echelon(rows);
        let free = (0..monomials.len()).filter(|c| !basis.iter().any(|(p, _)| p == c)).collect();
        GradedPiece { monomials, index, basis, free }
    }

    pub fn dim(&self) -> usize {
        self.free.len()
    }

    /// Quotient coordinates of a homogeneous polynomial of this degree.
    pub fn reduce(&self, p: &Polynomial) -> Vec<Rational> {
        let mut v = vec![Rational::zero(); self.monomials.len()];
        for (m, c) in p.terms() {
            v[self.index[m]] += c;
        }
        for (piv, b) in &self.basis {
            if !v[*piv].is_zero() {
                let c = v[*piv].clone();
                for (x, y) in v.iter_mut().zip(b) {
                    *x -= &c * y;
                }
            }
        }
        self.free.iter().map(|&i| v[i].clone()).collect()
    }
}

fn subsets_of(n: usize, size: usize) -> Vec<Vec<usize>> {
    if size == 0 {
        return vec![vec![]];
    }
    if n < size {
        return vec![];
    }
    let mut out = subsets_of(n - 1, size);
    for mut s in subsets_of(n - 1, size - 1) {
        s.push(n - 1);
        out.push(s);
    }
    out
}

/// `β_{i,j}(R/I) = dim H_i(K(x; R/I))_j`, computed from the Koszul complex
/// over the graded pieces of `R/I`.
pub fn koszul_betti(gens: &[Polynomial], nvars: usize, i: usize, j: u32) -> usize {
    if (i as u32) > j {
        return 0;
    }
    let ring = gens[0].ring().clone();
    let boundary_rank = |i: usize, j: u32| -> usize {
        // ∂_i : Λ^i ⊗ (R/I)_{j-i} -> Λ^{i-1} ⊗ (R/I)_{j-i+1}
        if i == 0 || i > nvars || (i as u32) > j {
            return 0;
        }
        let src = GradedPiece::new(gens, nvars, j - i as u32);
        let dst = GradedPiece::new(gens, nvars, j - i as u32 + 1);
        let faces = subsets_of(nvars, i - 1);
        let face_idx: HashMap<Vec<usize>, usize> = faces.iter().cloned().enumerate().map(|(a, b)| (b, a)).collect();
        let mut rows = Vec::new();
        for s in subsets_of(nvars, i) {
            for &f in &src.free {
                let mut v = vec![Rational::zero(); faces.len() * dst.dim()];
                let basis_poly =
                    Polynomial::monomial(&ring, src.monomials[f].clone(), Rational::from_integer(1.into()));
                for (pos, &x) in s.iter().enumerate() {
                    let mut face = s.clone();
                    face.remove(pos);
                    let sign = if pos % 2 == 0 { 1 } else { -1 };
                    let img = basis_poly.mul(&Polynomial::var(&ring, x)).unwrap();
                    let coords = dst.reduce(&img);
                    let off = face_idx[&face] * dst.dim();
                    for (q, c) in coords.into_iter().enumerate() {
                        v[off + q] += c * Rational::from_integer(sign.into());
                    }
                }
                rows.push(v);
            }
        }
        rank_of(&rows)
    };
    let chain_dim =
        if i > nvars { 0 } else { subsets_of(nvars, i).len() * GradedPiece::new(gens, nvars, j - i as u32).dim() };
    chain_dim - boundary_rank(i, j) - boundary_rank(i + 1, j)
}

/// Hilbert function of `R/I` by counting monomials outside the span of `I_d`.
pub fn hf_by_linear_algebra(gens: &[Polynomial], nvars: usize, d_max: u32) -> Vec<u64> {
    (0..=d_max).map(|d| GradedPiece::new(gens, nvars, d).dim() as u64).collect()
}

pub fn ideal_gens(i: &Ideal) -> Vec<Polynomial> {
    i.gens().to_vec()
}

fn product_except(a: &Arrangement, skip: &[usize]) -> Polynomial {
    let ring = a.ring();
    let mut p = Polynomial::one(ring);
    for (u, f) in a.forms().iter().enumerate() {
        if !skip.contains(&u) {
            p = p.mul(&f.to_polynomial(ring)).unwrap();
        }
    }
    p
}

/// `dim (ker φ_A)_d` by linear algebra: the kernel of the lifted map
/// `R_d^m -> (R/I_{n-1})_{d+n-2}` minus the part inside `⊕ ⟨ℓ_i, ℓ_j⟩_d`.
pub fn phi_kernel_oracle(a: &Arrangement, d: u32) -> i64 {
    let n = a.len();
    let k = a.nvars();
    let ring = a.ring();
    let top: Vec<Polynomial> = (0..n).map(|i| product_except(a, &[i])).collect();
    let target = GradedPiece::new(&top, k, d + n as u32 - 2);
    let rd = monomials_of_degree(k, d);
    let mut rows = Vec::new();
    let mut sub = 0usize;
    for i in 0..n {
        for j in i + 1..n {
            let f = product_except(a, &[i, j]);
            for m in &rd {
                let p = Polynomial::monomial(ring, m.clone(), Rational::from_integer(1.into())).mul(&f).unwrap();
                rows.push(target.reduce(&p));
            }
            if d >= 1 {
                let idx: HashMap<&Monomial, usize> = rd.iter().enumerate().map(|(q, m)| (m, q)).collect();
                let mut span = Vec::new();
                for l in [i, j] {
                    let lp = a.forms()[l].to_polynomial(ring);
                    for m in monomials_of_degree(k, d - 1) {
                        let p = Polynomial::monomial(ring, m, Rational::from_integer(1.into())).mul(&lp).unwrap();
                        let mut v = vec![Rational::zero(); rd.len()];
                        for (t, c) in p.terms() {
                            v[idx[t]] += c;
                        }
                        span.push(v);
                    }
                }
                sub += rank_of(&span);
            }
        }
    }
    let lifted_kernel = rows.len() - rank_of(&rows);
    lifted_kernel as i64 - sub as i64
}
