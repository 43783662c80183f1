use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::monomial::Monomial;
use super::ring::{same_ring, RingRef};
use super::{format_rational, Rational};
use crate::error::{Error, Result};

/// Sparse polynomial with rational coefficients.
///
/// Terms are kept sorted by the ring's monomial order, largest first, with no
/// zero coefficients and at most one term per monomial.
#[derive(Clone)]
pub struct Polynomial {
    ring: RingRef,
    terms: Vec<(Monomial, Rational)>,
}

/// Term list `[[exponents], "num/den"]`, leading term first.
impl serde::Serialize for Polynomial {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeSeq;
        let mut seq = ser.serialize_seq(Some(self.terms.len()))?;
        for (m, c) in &self.terms {
            seq.serialize_element(&(m.exponents(), super::format_rational_full(c)))?;
        }
        seq.end()
    }
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        same_ring(&self.ring, &other.ring) && self.terms == other.terms
    }
}
impl Eq for Polynomial {}

impl Polynomial {
    pub fn zero(ring: &RingRef) -> Self {
        Polynomial { ring: ring.clone(), terms: Vec::new() }
    }

    pub fn one(ring: &RingRef) -> Self {
        Self::constant(ring, Rational::one())
    }

    pub fn constant(ring: &RingRef, c: Rational) -> Self {
        Self::monomial(ring, Monomial::one(ring.nvars()), c)
    }

    pub fn var(ring: &RingRef, idx: usize) -> Self {
        Self::monomial(ring, Monomial::var(ring.nvars(), idx), Rational::one())
    }

    pub fn monomial(ring: &RingRef, m: Monomial, c: Rational) -> Self {
        assert_eq!(m.nvars(), ring.nvars(), "monomial length differs from ring");
        let terms = if c.is_zero() { Vec::new() } else { vec![(m, c)] };
        Polynomial { ring: ring.clone(), terms }
    }

    /// Builds a polynomial from arbitrary (possibly repeated, possibly zero)
    /// terms.
    pub fn from_terms(ring: &RingRef, terms: impl IntoIterator<Item = (Monomial, Rational)>) -> Self {
        let mut acc: HashMap<Monomial, Rational> = HashMap::new();
        for (m, c) in terms {
            assert_eq!(m.nvars(), ring.nvars(), "monomial length differs from ring");
            *acc.entry(m).or_insert_with(Rational::zero) += c;
        }
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_by(|a, b| ring.cmp(&b.0, &a.0));
        Polynomial { ring: ring.clone(), terms }
    }

    /// Caller guarantees the terms are sorted (descending) and nonzero.
    pub(crate) fn from_sorted_terms(ring: &RingRef, terms: Vec<(Monomial, Rational)>) -> Self {
        debug_assert!(terms.windows(2).all(|w| ring.cmp(&w[0].0, &w[1].0) == Ordering::Greater));
        debug_assert!(terms.iter().all(|(_, c)| !c.is_zero()));
        Polynomial { ring: ring.clone(), terms }
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn terms(&self) -> &[(Monomial, Rational)] {
        &self.terms
    }

    pub(crate) fn into_terms(self) -> Vec<(Monomial, Rational)> {
        self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn nterms(&self) -> usize {
        self.terms.len()
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some((m0, _)) => {
                let d = m0.degree();
                self.terms.iter().all(|(m, _)| m.degree() == d)
            }
        }
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|(m, _)| m)
    }

    pub fn leading_coeff(&self) -> Option<&Rational> {
        self.terms.first().map(|(_, c)| c)
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.first().map(|(m, c)| (m, c))
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms
            .binary_search_by(|(t, _)| self.ring.cmp(m, t))
            .map(|i| self.terms[i].1.clone())
            .unwrap_or_else(|_| Rational::zero())
    }

    fn check_ring(&self, other: &Polynomial) -> Result<()> {
        if same_ring(&self.ring, &other.ring) {
            Ok(())
        } else {
            Err(Error::RingMismatch(format!("{:?} vs {:?}", self.ring, other.ring)))
        }
    }

    pub fn add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        Ok(self.add_scaled(other, &Rational::one(), None))
    }

    pub fn sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        Ok(self.add_scaled(other, &-Rational::one(), None))
    }

    /// `self + c * m * other`, merging sorted term lists.
    pub(crate) fn add_scaled(&self, other: &Polynomial, c: &Rational, m: Option<&Monomial>) -> Polynomial {
        let ring = &self.ring;
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let mut a = self.terms.iter().peekable();
        let shifted: Vec<(Monomial, Rational)> =
            other.terms.iter().map(|(om, oc)| (m.map_or_else(|| om.clone(), |m| om.mul(m)), oc * c)).collect();
        let mut b = shifted.into_iter().peekable();
        loop {
            match (a.peek(), b.peek()) {
                (None, None) => break,
                (Some(_), None) => out.push(a.next().unwrap().clone()),
                (None, Some(_)) => out.push(b.next().unwrap()),
                (Some((am, _)), Some((bm, _))) => match ring.cmp(am, bm) {
                    Ordering::Greater => out.push(a.next().unwrap().clone()),
                    Ordering::Less => out.push(b.next().unwrap()),
                    Ordering::Equal => {
                        let (am, ac) = a.next().unwrap();
                        let (_, bc) = b.next().unwrap();
                        let s = ac + bc;
                        if !s.is_zero() {
                            out.push((am.clone(), s));
                        }
                    }
                },
            }
        }
        Polynomial { ring: ring.clone(), terms: out }
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial { ring: self.ring.clone(), terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        Polynomial { ring: self.ring.clone(), terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect() }
    }

    /// Multiplication by a monomial preserves the term order.
    pub fn mul_monomial(&self, m: &Monomial, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        Polynomial { ring: self.ring.clone(), terms: self.terms.iter().map(|(t, a)| (t.mul(m), a * c)).collect() }
    }

    pub fn mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        Ok(self.mul_unchecked(other))
    }

    pub(crate) fn mul_unchecked(&self, other: &Polynomial) -> Polynomial {
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        let mut acc: HashMap<Monomial, Rational> = HashMap::with_capacity(self.terms.len() * other.terms.len());
        for (am, ac) in &self.terms {
            for (bm, bc) in &other.terms {
                *acc.entry(am.mul(bm)).or_insert_with(Rational::zero) += ac * bc;
            }
        }
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_by(|a, b| self.ring.cmp(&b.0, &a.0));
        Polynomial { ring: self.ring.clone(), terms }
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = Polynomial::one(&self.ring);
        for _ in 0..e {
            acc = acc.mul_unchecked(self);
        }
        acc
    }

    /// Divides by the leading coefficient.
    pub fn monic(&self) -> Polynomial {
        match self.leading_coeff() {
            None => self.clone(),
            Some(lc) => {
                let inv = lc.recip();
                self.scale(&inv)
            }
        }
    }

    /// Positive leading coefficient, integer coefficients with gcd 1.
    pub fn primitive(&self) -> Polynomial {
        if self.is_zero() {
            return self.clone();
        }
        let mut lcm_den = BigInt::one();
        for (_, c) in &self.terms {
            lcm_den = num_integer::lcm(lcm_den, c.denom().clone());
        }
        let mut g = BigInt::zero();
        for (_, c) in &self.terms {
            let v = c.numer() * (&lcm_den / c.denom());
            g = num_integer::gcd(g, v);
        }
        let mut scale = Rational::new(lcm_den, g);
        if self.terms[0].1.is_negative() {
            scale = -scale;
        }
        self.scale(&scale)
    }

    /// Exact division by a monomial; `None` if some term is not divisible.
    pub fn div_monomial(&self, m: &Monomial) -> Option<Polynomial> {
        let terms: Option<Vec<_>> = self.terms.iter().map(|(t, c)| t.try_div(m).map(|q| (q, c.clone()))).collect();
        terms.map(|terms| Polynomial { ring: self.ring.clone(), terms })
    }

    /// Exact division by a nonzero polynomial. Returns `None` when the
    /// division leaves a remainder.
    pub fn div_exact(&self, d: &Polynomial) -> Result<Option<Polynomial>> {
        self.check_ring(d)?;
        let (dm, dc) = match d.leading_term() {
            None => return Err(Error::InvalidInput("division by zero polynomial".into())),
            Some((m, c)) => (m.clone(), c.clone()),
        };
        let mut rem = self.clone();
        let mut quot = Vec::new();
        while let Some((m, c)) = rem.leading_term() {
            let q = match m.try_div(&dm) {
                Some(q) => q,
                None => return Ok(None),
            };
            let qc = c / &dc;
            rem = rem.add_scaled(d, &-qc.clone(), Some(&q));
            quot.push((q, qc));
        }
        Ok(Some(Polynomial::from_terms(&self.ring, quot)))
    }

    /// Moves the polynomial into another ring with the same variables but a
    /// possibly different order (re-sorting terms).
    pub fn to_ring(&self, ring: &RingRef) -> Polynomial {
        assert_eq!(ring.nvars(), self.ring.nvars());
        if same_ring(ring, &self.ring) {
            return self.clone();
        }
        let mut terms = self.terms.clone();
        terms.sort_by(|a, b| ring.cmp(&b.0, &a.0));
        Polynomial { ring: ring.clone(), terms }
    }

    /// Maps variable `i` of `self.ring` to variable `map[i]` of `target`.
    pub fn map_vars(&self, target: &RingRef, map: &[usize]) -> Polynomial {
        assert_eq!(map.len(), self.ring.nvars());
        let terms = self.terms.iter().map(|(m, c)| {
            let mut e = vec![0u16; target.nvars()];
            for (i, &x) in m.exponents().iter().enumerate() {
                e[map[i]] += x;
            }
            (Monomial::from_exponents(e), c.clone())
        });
        Polynomial::from_terms(target, terms)
    }

    /// Substitutes `images[i]` for variable `i`. All images must live in one
    /// target ring.
    pub fn substitute(&self, target: &RingRef, images: &[Polynomial]) -> Polynomial {
        assert_eq!(images.len(), self.ring.nvars());
        let mut powers: Vec<Vec<Polynomial>> =
            images.iter().map(|p| vec![Polynomial::one(target), p.clone()]).collect();
        let mut out = Polynomial::zero(target);
        for (m, c) in &self.terms {
            let mut t = Polynomial::constant(target, c.clone());
            for (i, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while powers[i].len() <= e as usize {
                    let next = powers[i].last().unwrap().mul_unchecked(&images[i]);
                    powers[i].push(next);
                }
                t = t.mul_unchecked(&powers[i][e as usize]);
            }
            out = out.add_scaled(&t, &Rational::one(), None);
        }
        out
    }

    /// Greatest monomial dividing every term.
    pub fn monomial_content(&self) -> Option<Monomial> {
        let mut it = self.terms.iter();
        let first = it.next()?.0.clone();
        Some(it.fold(first, |g, (m, _)| g.gcd(m)))
    }

    /// Variables occurring in some term.
    pub fn support_vars(&self) -> Vec<usize> {
        let mut used = vec![false; self.ring.nvars()];
        for (m, _) in &self.terms {
            for i in m.support() {
                used[i] = true;
            }
        }
        used.iter().enumerate().filter(|(_, &u)| u).map(|(i, _)| i).collect()
    }

    pub fn render(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let names = self.ring.names();
        let mut s = String::new();
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if i == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let mono: Vec<String> = m
                .exponents()
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(v, &e)| if e == 1 { names[v].clone() } else { format!("{}^{}", names[v], e) })
                .collect();
            if mono.is_empty() {
                s.push_str(&format_rational(&a));
            } else {
                if !a.is_one() {
                    s.push_str(&format_rational(&a));
                    s.push('*');
                }
                s.push_str(&mono.join("*"));
            }
        }
        s
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({})", self.render())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{parse_polynomial, Ring};

    fn p(r: &RingRef, s: &str) -> Polynomial {
        parse_polynomial(s, r).unwrap()
    }

    #[test]
    fn add_examples() {
        let r = Ring::new(["x", "y"]);
        assert!(p(&r, "x").add(&p(&r, "-x")).unwrap().is_zero());
        assert_eq!(p(&r, "x+y").add(&p(&r, "x-y")).unwrap(), p(&r, "2*x"));
        assert_eq!(p(&r, "x^2+x*y").add(&p(&r, "x*y+y^2")).unwrap(), p(&r, "x^2+2*x*y+y^2"));
    }

    #[test]
    fn mul_examples() {
        let r = Ring::new(["x", "y"]);
        assert_eq!(p(&r, "x").mul(&p(&r, "y")).unwrap(), p(&r, "x*y"));
        assert_eq!(p(&r, "x+y").mul(&p(&r, "x-y")).unwrap(), p(&r, "x^2-y^2"));
        let r3 = Ring::standard(3);
        let prod = p(&r3, "x1").mul(&p(&r3, "x2")).unwrap().mul(&p(&r3, "x1+x2")).unwrap();
        assert_eq!(prod, p(&r3, "x1^2*x2 + x1*x2^2"));
        assert_eq!(prod.degree(), Some(3));
    }

    #[test]
    fn ring_mismatch_is_an_error() {
        let a = Ring::new(["x", "y"]);
        let b = Ring::new(["u", "v"]);
        assert!(matches!(p(&a, "x").add(&p(&b, "u")), Err(Error::RingMismatch(_))));
        assert!(p(&a, "x").mul(&p(&b, "u")).is_err());
    }

    #[test]
    fn exact_division() {
        let r = Ring::new(["x", "y"]);
        let f = p(&r, "x^2-y^2");
        assert_eq!(f.div_exact(&p(&r, "x+y")).unwrap(), Some(p(&r, "x-y")));
        assert_eq!(f.div_exact(&p(&r, "x+2*y")).unwrap(), None);
    }

    #[test]
    fn zero_degree_marker() {
        let r = Ring::new(["x"]);
        assert_eq!(Polynomial::zero(&r).degree(), None);
        assert_eq!(Polynomial::one(&r).degree(), Some(0));
    }

    #[test]
    fn primitive_part() {
        let r = Ring::new(["x", "y"]);
        assert_eq!(p(&r, "-2/3*x + 4/9*y").primitive(), p(&r, "3*x - 2*y"));
    }
}
