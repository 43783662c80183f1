use num_traits::Zero;
use serde::Serialize;

use super::Arrangement;
use crate::error::Result;
use crate::exactalg::{LinearForm, Rational};
use crate::linalg;

/// A rank-2 flat: the maximal set of forms whose span is a given plane.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Flat2 {
    /// Zero-based indices into the arrangement, increasing.
    pub members: Vec<usize>,
    /// Two independent member forms spanning the plane.
    #[serde(skip)]
    pub witness: [LinearForm; 2],
}

impl Flat2 {
    pub fn size(&self) -> usize {
        self.members.len()
    }
}

/// A dependent triple `c1 l_i + c2 l_j + c3 l_k = 0` with `c1 = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Circuit3 {
    pub indices: [usize; 3],
    pub coeffs: [Rational; 3],
}

fn rank_of(forms: &[&LinearForm]) -> usize {
    let rows: Vec<_> = forms.iter().map(|f| f.coeffs().to_vec()).collect();
    linalg::rank(&rows)
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.0[r] != r {
            r = self.0[r];
        }
        let mut y = x;
        while self.0[y] != r {
            let next = self.0[y];
            self.0[y] = r;
            y = next;
        }
        r
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.0[ra.max(rb)] = ra.min(rb);
        }
    }
}

fn pair_index(n: usize, i: usize, j: usize) -> usize {
    // position of (i, j), i < j, in the lexicographic list of pairs
    i * n - i * (i + 1) / 2 + (j - i - 1)
}

/// All rank-2 flats of a reduced arrangement, sorted by member list.
///
/// Pairs are merged whenever they share a dependent triple; each connected
/// class of pairs is one flat.
pub fn rank2_flats(a: &Arrangement) -> Result<Vec<Flat2>> {
    a.require_reduced()?;
    let n = a.len();
    let forms = a.forms();
    let npairs = n * n.saturating_sub(1) / 2;
    let mut uf = UnionFind((0..npairs).collect());
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                if rank_of(&[&forms[i], &forms[j], &forms[k]]) == 2 {
                    let ij = pair_index(n, i, j);
                    uf.union(ij, pair_index(n, i, k));
                    uf.union(ij, pair_index(n, j, k));
                }
            }
        }
    }
    let mut classes: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
    for i in 0..n {
        for j in i + 1..n {
            let root = uf.find(pair_index(n, i, j));
            let members = classes.entry(root).or_default();
            for x in [i, j] {
                if !members.contains(&x) {
                    members.push(x);
                }
            }
        }
    }
    let mut flats: Vec<Flat2> = classes
        .into_values()
        .map(|mut members| {
            members.sort_unstable();
            let witness = [forms[members[0]].clone(), forms[members[1]].clone()];
            Flat2 { members, witness }
        })
        .collect();
    flats.sort_by(|a, b| a.members.cmp(&b.members));
    Ok(flats)
}

/// All dependent triples of a reduced arrangement with normalized
/// dependency coefficients, in lexicographic index order.
pub fn circuits3(a: &Arrangement) -> Result<Vec<Circuit3>> {
    a.require_reduced()?;
    let n = a.len();
    let forms = a.forms();
    let k = a.nvars();
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            for l in j + 1..n {
                // columns are the three forms; null vector gives the dependency
                let m: Vec<Vec<Rational>> = (0..k)
                    .map(|r| {
                        vec![forms[i].coeffs()[r].clone(), forms[j].coeffs()[r].clone(), forms[l].coeffs()[r].clone()]
                    })
                    .collect();
                let ns = linalg::nullspace(&m, 3);
                if ns.len() != 1 {
                    continue;
                }
                let v = &ns[0];
                // reduced input: a dependent triple has all three coefficients nonzero
                debug_assert!(v.iter().all(|c| !c.is_zero()));
                let inv = v[0].recip();
                out.push(Circuit3 { indices: [i, j, l], coeffs: [&v[0] * &inv, &v[1] * &inv, &v[2] * &inv] });
            }
        }
    }
    Ok(out)
}

fn choose2(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// `p(A)`: sum over rank-2 flats of `C(|A_X| - 1, 2)`.
pub fn p_of_arrangement(a: &Arrangement) -> Result<usize> {
    Ok(rank2_flats(a)?.iter().map(|f| choose2(f.size() - 1)).sum())
}

pub fn is_generic3(a: &Arrangement) -> Result<bool> {
    Ok(circuits3(a)?.is_empty())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{rat, Ring};

    fn example_a() -> Arrangement {
        Arrangement::from_int_rows(3, &[&[1, 0, 0], &[0, 1, 0], &[1, 1, 0], &[0, 0, 1]]).unwrap()
    }

    fn members(fl: &[Flat2]) -> Vec<Vec<usize>> {
        fl.iter().map(|f| f.members.clone()).collect()
    }

    /// Brute force: classify each pair by the set of forms in its span.
    fn flats_brute(a: &Arrangement) -> Vec<Vec<usize>> {
        let n = a.len();
        let f = a.forms();
        let mut out: Vec<Vec<usize>> = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let s: Vec<usize> = (0..n).filter(|&l| rank_of(&[&f[i], &f[j], &f[l]]) == 2).collect();
                if !out.contains(&s) {
                    out.push(s);
                }
            }
        }
        out.sort();
        out
    }

    #[test]
    fn flats_of_example() {
        let a = example_a();
        let fl = rank2_flats(&a).unwrap();
        assert_eq!(members(&fl), vec![vec![0, 1, 2], vec![0, 3], vec![1, 3], vec![2, 3]]);
        assert_eq!(members(&fl), flats_brute(&a));
    }

    #[test]
    fn flats_of_pencil_and_generic() {
        let pencil = Arrangement::from_int_rows(2, &[&[1, 0], &[0, 1], &[1, 1]]).unwrap();
        assert_eq!(members(&rank2_flats(&pencil).unwrap()), vec![vec![0, 1, 2]]);
        let generic = Arrangement::from_int_rows(3, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[1, 1, 1]]).unwrap();
        let fl = rank2_flats(&generic).unwrap();
        assert_eq!(fl.len(), 6);
        assert!(fl.iter().all(|f| f.size() == 2));
        assert_eq!(members(&fl), flats_brute(&generic));
    }

    #[test]
    fn non_reduced_rejected() {
        let a = Arrangement::from_int_rows(2, &[&[1, 0], &[2, 0], &[0, 1]]).unwrap();
        assert!(rank2_flats(&a).is_err());
        assert!(circuits3(&a).is_err());
    }

    #[test]
    fn circuits_of_examples() {
        let c = circuits3(&example_a()).unwrap();
        assert_eq!(c.len(), 1);
        assert_eq!(c[0].indices, [0, 1, 2]);
        assert_eq!(c[0].coeffs, [rat(1), rat(1), rat(-1)]);

        let generic = Arrangement::from_int_rows(3, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[1, 1, 1]]).unwrap();
        assert!(circuits3(&generic).unwrap().is_empty());

        let r2 = Arrangement::from_int_rows(2, &[&[1, 0], &[0, 1], &[1, 1], &[1, -1]]).unwrap();
        let c = circuits3(&r2).unwrap();
        let idx: Vec<_> = c.iter().map(|c| c.indices).collect();
        assert_eq!(idx, vec![[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]]);
        let ring = Ring::standard(2);
        for ci in &c {
            let mut sum = crate::exactalg::Polynomial::zero(&ring);
            for (t, &i) in ci.indices.iter().enumerate() {
                sum = sum.add(&r2.forms()[i].to_polynomial(&ring).scale(&ci.coeffs[t])).unwrap();
            }
            assert!(sum.is_zero());
        }
    }

    #[test]
    fn p_values() {
        assert_eq!(p_of_arrangement(&example_a()).unwrap(), 1);
        let pencil = Arrangement::from_int_rows(2, &[&[1, 0], &[0, 1], &[1, 1]]).unwrap();
        assert_eq!(p_of_arrangement(&pencil).unwrap(), 1);
        let generic = Arrangement::from_int_rows(3, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[1, 1, 1]]).unwrap();
        assert_eq!(p_of_arrangement(&generic).unwrap(), 0);
    }

    #[test]
    fn genericity() {
        let generic = Arrangement::from_int_rows(3, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[1, 1, 1]]).unwrap();
        assert!(is_generic3(&generic).unwrap());
        assert!(!is_generic3(&example_a()).unwrap());
        let r2 = Arrangement::from_int_rows(2, &[&[1, 0], &[0, 1], &[1, 2]]).unwrap();
        assert!(!is_generic3(&r2).unwrap());
    }
}
