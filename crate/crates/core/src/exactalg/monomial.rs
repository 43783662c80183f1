use std::cmp::Ordering;
use std::fmt;

/// Dense exponent vector. The length always equals the variable count of the
/// ring the monomial lives in.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Vec<u16>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn from_exponents(exps: Vec<u16>) -> Self {
        Monomial(exps)
    }

    pub fn var(nvars: usize, idx: usize) -> Self {
        let mut e = vec![0; nvars];
        e[idx] = 1;
        Monomial(e)
    }

    #[inline]
    pub fn exponents(&self) -> &[u16] {
        &self.0
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.0.len(), other.0.len());
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    #[inline]
    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Monomial {
        debug_assert!(self.divides(other));
        Monomial(other.0.iter().zip(&self.0).map(|(a, b)| a - b).collect())
    }

    pub fn try_div(&self, divisor: &Monomial) -> Option<Monomial> {
        if divisor.divides(self) {
            Some(divisor.quotient_of(self))
        } else {
            None
        }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.min(b)).collect())
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Indices of variables with positive exponent.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().filter(|(_, &e)| e > 0).map(|(i, _)| i)
    }

    /// Bitmask of the support, folded modulo 64. Used to reject divisibility
    /// tests quickly: if `a | b` then `mask(a) & !mask(b) == 0`.
    #[inline]
    pub fn support_mask(&self) -> u64 {
        let mut m = 0u64;
        for (i, &e) in self.0.iter().enumerate() {
            if e > 0 {
                m |= 1 << (i % 64);
            }
        }
        m
    }

    pub fn pow(&self, k: u16) -> Monomial {
        Monomial(self.0.iter().map(|e| e * k).collect())
    }

    /// Reorders exponents so that new position `i` holds old position `perm[i]`.
    pub fn permuted(&self, perm: &[usize]) -> Monomial {
        Monomial(perm.iter().map(|&p| self.0[p]).collect())
    }

    /// Lexicographic comparison with the first variable largest.
    pub fn cmp_lex(&self, other: &Monomial) -> Ordering {
        self.0.cmp(&other.0)
    }

    /// Graded reverse lexicographic comparison.
    pub fn cmp_grevlex(&self, other: &Monomial) -> Ordering {
        grevlex(&self.0, &other.0)
    }
}

pub(crate) fn grevlex(a: &[u16], b: &[u16]) -> Ordering {
    let da: u32 = a.iter().map(|&e| e as u32).sum();
    let db: u32 = b.iter().map(|&e| e as u32).sum();
    match da.cmp(&db) {
        Ordering::Equal => {}
        o => return o,
    }
    for (x, y) in a.iter().rev().zip(b.iter().rev()) {
        if x != y {
            // smaller exponent in the last differing variable wins
            return y.cmp(x);
        }
    }
    Ordering::Equal
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// Enumerates all exponent vectors of total degree `d` in `n` variables,
/// in lexicographically decreasing order.
pub fn monomials_of_degree(n: usize, d: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut cur = vec![0u16; n];
    fn rec(i: usize, left: u32, cur: &mut Vec<u16>, out: &mut Vec<Monomial>) {
        let n = cur.len();
        if n == 0 {
            if left == 0 {
                out.push(Monomial(Vec::new()));
            }
            return;
        }
        if i == n - 1 {
            cur[i] = left as u16;
            out.push(Monomial(cur.clone()));
            cur[i] = 0;
            return;
        }
        for e in (0..=left).rev() {
            cur[i] = e as u16;
            rec(i + 1, left - e, cur, out);
        }
        cur[i] = 0;
    }
    rec(0, d, &mut cur, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grevlex_basics() {
        let x = Monomial::from_exponents(vec![1, 0, 0]);
        let y = Monomial::from_exponents(vec![0, 1, 0]);
        let z = Monomial::from_exponents(vec![0, 0, 1]);
        assert_eq!(x.cmp_grevlex(&y), Ordering::Greater);
        assert_eq!(y.cmp_grevlex(&z), Ordering::Greater);
        // x*z < y^2 in grevlex
        let xz = x.mul(&z);
        let yy = y.mul(&y);
        assert_eq!(xz.cmp_grevlex(&yy), Ordering::Less);
    }

    #[test]
    fn degree_enumeration_counts() {
        assert_eq!(monomials_of_degree(3, 2).len(), 6);
        assert_eq!(monomials_of_degree(4, 3).len(), 20);
        assert_eq!(monomials_of_degree(2, 0).len(), 1);
        assert_eq!(monomials_of_degree(0, 0).len(), 1);
        assert_eq!(monomials_of_degree(0, 1).len(), 0);
    }

    #[test]
    fn divisibility_and_mask() {
        let a = Monomial::from_exponents(vec![1, 2, 0]);
        let b = Monomial::from_exponents(vec![2, 2, 1]);
        assert!(a.divides(&b));
        assert!(!b.divides(&a));
        assert_eq!(a.support_mask() & !b.support_mask(), 0);
        assert_eq!(a.quotient_of(&b).exponents(), &[1, 0, 1]);
    }
}
