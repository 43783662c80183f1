use std::fmt;
use std::sync::{Arc, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{buchberger, Budget, GroebnerBasis};
use crate::error::{Error, Result};
use crate::exactalg::{LinearForm, Monomial, MonomialOrder, Polynomial, Rational, Ring, RingRef};

/// An ideal given by generators, with its Gröbner basis (in the ring's own
/// order) computed on first use.
#[derive(Clone)]
pub struct Ideal {
    ring: RingRef,
    gens: Vec<Polynomial>,
    budget: Budget,
    gb: OnceLock<Arc<GroebnerBasis>>,
}

impl Ideal {
    /// Zero generators are dropped.
    pub fn new(ring: &RingRef, gens: Vec<Polynomial>) -> Self {
        for g in &gens {
            assert!(**g.ring() == **ring, "generator ring {:?} differs from {:?}", g.ring(), ring);
        }
        Ideal {
            ring: ring.clone(),
            gens: gens.into_iter().filter(|g| !g.is_zero()).collect(),
            budget: Budget::default(),
            gb: OnceLock::new(),
        }
    }

    pub fn zero(ring: &RingRef) -> Self {
        Ideal::new(ring, Vec::new())
    }

    pub fn unit(ring: &RingRef) -> Self {
        Ideal::new(ring, vec![Polynomial::one(ring)])
    }

    /// The ideal of all variables.
    pub fn maximal(ring: &RingRef) -> Self {
        Ideal::new(ring, (0..ring.nvars()).map(|i| Polynomial::var(ring, i)).collect())
    }

    /// `m^d`, generated by all monomials of degree `d`.
    pub fn maximal_power(ring: &RingRef, d: u32) -> Self {
        let gens = crate::exactalg::monomials_of_degree(ring.nvars(), d)
            .into_iter()
            .map(|m| Polynomial::monomial(ring, m, Rational::one()))
            .collect();
        Ideal::new(ring, gens)
    }

    pub fn with_budget(mut self, budget: Budget) -> Self {
        self.budget = budget;
        self.gb = OnceLock::new();
        self
    }

    pub fn budget(&self) -> Budget {
        self.budget
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn gens(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn is_homogeneous(&self) -> bool {
        self.gens.iter().all(Polynomial::is_homogeneous)
    }

    fn require_homogeneous(&self, what: &str) -> Result<()> {
        if self.is_homogeneous() {
            Ok(())
        } else {
            Err(Error::InvalidInput(format!("{what} needs a homogeneous ideal")))
        }
    }

    fn derived(&self, ring: &RingRef, gens: Vec<Polynomial>) -> Ideal {
        Ideal::new(ring, gens).with_budget(self.budget)
    }

    /// Reduced Gröbner basis in the ring's order (cached).
    pub fn groebner(&self) -> Result<Arc<GroebnerBasis>> {
        if let Some(g) = self.gb.get() {
            return Ok(g.clone());
        }
        let g = Arc::new(buchberger(&self.ring, &self.gens, &self.budget)?);
        // a concurrent fill computes the same basis; either copy is fine
        Ok(self.gb.get_or_init(|| g).clone())
    }

    fn seed_groebner(self, gb: GroebnerBasis) -> Self {
        let _ = self.gb.set(Arc::new(gb));
        self
    }

    pub fn normal_form(&self, p: &Polynomial) -> Result<Polynomial> {
        Ok(self.groebner()?.normal_form(p))
    }

    pub fn contains(&self, p: &Polynomial) -> Result<bool> {
        Ok(self.normal_form(p)?.is_zero())
    }

    /// `other ⊆ self`.
    pub fn contains_ideal(&self, other: &Ideal) -> Result<bool> {
        let gb = self.groebner()?;
        Ok(other.gens.iter().all(|g| gb.contains(g)))
    }

    /// Equality by membership in both directions.
    pub fn equals(&self, other: &Ideal) -> Result<bool> {
        Ok(self.contains_ideal(other)? && other.contains_ideal(self)?)
    }

    pub fn is_unit(&self) -> Result<bool> {
        Ok(self.groebner()?.is_unit())
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn sum(&self, other: &Ideal) -> Ideal {
        let mut g = self.gens.clone();
        g.extend(other.gens.iter().cloned());
        self.derived(&self.ring, g)
    }

    pub fn product(&self, other: &Ideal) -> Ideal {
        let mut g = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                g.push(a.mul_unchecked(b));
            }
        }
        self.derived(&self.ring, g)
    }

    /// `f * I`.
    pub fn scaled_by(&self, f: &Polynomial) -> Ideal {
        self.derived(&self.ring, self.gens.iter().map(|g| g.mul_unchecked(f)).collect())
    }

    /// Same ideal in the same variables under a different monomial order.
    pub fn in_order(&self, order: MonomialOrder) -> Ideal {
        let r = self.ring.reordered(order);
        self.derived(&r, self.gens.iter().map(|g| g.to_ring(&r)).collect())
    }

    /// Eliminates the variables at positions `drop`. The result lives in the
    /// ring of the remaining variables with grevlex, and carries the
    /// restricted basis as its Gröbner basis.
    pub fn eliminate(&self, drop: &[usize]) -> Result<Ideal> {
        let k = self.ring.nvars();
        let mut is_drop = vec![false; k];
        for &d in drop {
            if d >= k {
                return Err(Error::InvalidInput(format!("variable index {d} out of range")));
            }
            is_drop[d] = true;
        }
        let keep: Vec<usize> = (0..k).filter(|&i| !is_drop[i]).collect();
        let dropped: Vec<usize> = (0..k).filter(|&i| is_drop[i]).collect();
        let mut to_new = vec![0usize; k];
        for (pos, &i) in dropped.iter().chain(keep.iter()).enumerate() {
            to_new[i] = pos;
        }
        let names: Vec<String> = dropped.iter().chain(keep.iter()).map(|&i| self.ring.names()[i].clone()).collect();
        let mut elim = Ring::with_order(names, MonomialOrder::Elimination { block: dropped.len() });
        let w = self.ring.weights();
        if !w.is_empty() {
            elim = elim.weighted(dropped.iter().chain(keep.iter()).map(|&i| w[i]).collect());
        }
        let gens: Vec<Polynomial> = self.gens.iter().map(|g| g.map_vars(&elim, &to_new)).collect();
        let gb = buchberger(&elim, &gens, &self.budget)?;

        let target = Ring::new(keep.iter().map(|&i| self.ring.names()[i].clone()));
        let nd = dropped.len();
        let back: Vec<usize> = (0..k).map(|j| j.saturating_sub(nd)).collect();
        let kept: Vec<Polynomial> = gb
            .polys()
            .iter()
            .filter(|p| p.support_vars().iter().all(|&v| v >= nd))
            .map(|p| p.map_vars(&target, &back))
            .collect();
        let restricted = GroebnerBasis::from_reduced(&target, kept.clone());
        Ok(self.derived(&target, kept).seed_groebner(restricted))
    }

    /// `I ∩ J` through `t I + (1 - t) J` and elimination of `t`.
    pub fn intersect(&self, other: &Ideal) -> Result<Ideal> {
        check_same(&self.ring, &other.ring)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Ideal::zero(&self.ring));
        }
        let k = self.ring.nvars();
        let mut names = vec!["_t".to_string()];
        names.extend(self.ring.names().iter().cloned());
        let big = Ring::new(names);
        let shift: Vec<usize> = (1..=k).collect();
        let t = Polynomial::var(&big, 0);
        let one_minus_t = Polynomial::one(&big).sub(&t)?;
        let mut gens = Vec::new();
        for g in &self.gens {
            gens.push(g.map_vars(&big, &shift).mul_unchecked(&t));
        }
        for g in &other.gens {
            gens.push(g.map_vars(&big, &shift).mul_unchecked(&one_minus_t));
        }
        let e = self.derived(&big, gens).eliminate(&[0])?;
        Ok(self.derived(&self.ring, e.gens.iter().map(|g| g.to_ring(&self.ring)).collect()))
    }

    /// `I : g`.
    pub fn colon(&self, g: &Polynomial) -> Result<Ideal> {
        check_same(&self.ring, g.ring())?;
        if g.is_zero() {
            return Ok(Ideal::unit(&self.ring));
        }
        if self.is_homogeneous() && g.is_homogeneous() && g.degree() == Some(1) {
            let l = LinearForm::from_polynomial(g).expect("degree-one homogeneous");
            return self.colon_linear(&l, false);
        }
        let inter = self.intersect(&self.derived(&self.ring, vec![g.clone()]))?;
        let mut out = Vec::with_capacity(inter.gens.len());
        for h in &inter.gens {
            out.push(h.div_exact(g)?.expect("intersection with <g> is divisible by g"));
        }
        Ok(self.derived(&self.ring, out))
    }

    /// `I : J`.
    pub fn colon_ideal(&self, j: &Ideal) -> Result<Ideal> {
        let mut acc = Ideal::unit(&self.ring);
        for g in &j.gens {
            let c = self.colon(g)?;
            acc = if acc.is_unit()? { c } else { acc.intersect(&c)? };
        }
        Ok(acc)
    }

    /// `I : l` or `I : l^∞` for a linear form `l` of a homogeneous ideal.
    /// After a linear change of coordinates `l` is the last variable, where
    /// a grevlex basis divided by powers of that variable is a basis of the
    /// quotient.
    fn colon_linear(&self, l: &LinearForm, infinite: bool) -> Result<Ideal> {
        let k = self.ring.nvars();
        let j = (0..k).rev().find(|&i| !l.coeffs()[i].is_zero()).expect("nonzero form");
        // new variables: y_i = x_i (i != j) at position i' and y = l at the end
        let mut names: Vec<String> = (0..k).filter(|&i| i != j).map(|i| self.ring.names()[i].clone()).collect();
        names.push(format!("_{}", self.ring.names()[j]));
        let r2 = Ring::new(names);
        let pos = |i: usize| if i < j { i } else { i - 1 };
        let cj = &l.coeffs()[j];
        // x_j = (y - sum_{i != j} c_i x_i) / c_j
        let mut images = Vec::with_capacity(k);
        for i in 0..k {
            if i == j {
                let mut terms = vec![(Monomial::var(k, k - 1), cj.recip())];
                for (t, c) in l.coeffs().iter().enumerate() {
                    if t != j && !c.is_zero() {
                        terms.push((Monomial::var(k, pos(t)), -(c / cj)));
                    }
                }
                images.push(Polynomial::from_terms(&r2, terms));
            } else {
                images.push(Polynomial::var(&r2, pos(i)));
            }
        }
        let gens: Vec<Polynomial> = self.gens.iter().map(|g| g.substitute(&r2, &images)).collect();
        let gb = buchberger(&r2, &gens, &self.budget)?;
        let last = k - 1;
        let divided: Vec<Polynomial> = gb
            .polys()
            .iter()
            .map(|p| {
                let e = p.monomial_content().map_or(0, |m| m.exponents()[last]);
                let e = if infinite { e } else { e.min(1) };
                if e == 0 {
                    p.clone()
                } else {
                    let mut ex = vec![0u16; k];
                    ex[last] = e;
                    p.div_monomial(&Monomial::from_exponents(ex)).unwrap()
                }
            })
            .collect();
        // back: y_i -> x_i, y -> l
        let lp = l.to_polynomial(&self.ring);
        let mut back = Vec::with_capacity(k);
        for i in 0..k {
            if i != j {
                back.push(Polynomial::var(&self.ring, i));
            }
        }
        back.push(lp);
        let out = divided.iter().map(|p| p.substitute(&self.ring, &back)).collect();
        Ok(self.derived(&self.ring, out))
    }

    /// `I : g^∞`.
    pub fn saturate_by(&self, g: &Polynomial) -> Result<Ideal> {
        check_same(&self.ring, g.ring())?;
        if self.is_homogeneous() && g.is_homogeneous() && g.degree() == Some(1) {
            let l = LinearForm::from_polynomial(g).expect("degree-one homogeneous");
            return self.colon_linear(&l, true);
        }
        let mut cur = self.clone();
        loop {
            let next = cur.colon(g)?;
            if cur.contains_ideal(&next)? {
                return Ok(cur);
            }
            cur = next;
        }
    }

    /// `I : m^∞ = ∩_i (I : x_i^∞)`.
    pub fn saturate(&self) -> Result<Ideal> {
        self.require_homogeneous("saturation")?;
        let mut acc: Option<Ideal> = None;
        for i in 0..self.ring.nvars() {
            let s = self.saturate_by(&Polynomial::var(&self.ring, i))?;
            acc = Some(match acc {
                None => s,
                Some(a) if a.contains_ideal(&s)? => s,
                Some(a) if s.contains_ideal(&a)? => a,
                Some(a) => a.intersect(&s)?,
            });
        }
        Ok(acc.unwrap_or_else(|| self.clone()))
    }

    /// Numerator `N(T)` of the Hilbert series `N(T) / (1 - T)^k` of `R/I`.
    pub fn hilbert_numerator(&self) -> Result<Vec<BigInt>> {
        self.require_homogeneous("Hilbert series")?;
        let gb = self.groebner()?;
        let gens: Vec<Vec<u16>> = gb.leading_monomials().iter().map(|m| m.exponents().to_vec()).collect();
        let mut n = hs_numerator(gens, self.ring.nvars());
        while n.len() > 1 && n.last().is_some_and(Zero::is_zero) {
            n.pop();
        }
        Ok(n)
    }

    /// `dim_Q (R/I)_d` for `d = 0..=d_max`.
    pub fn hilbert_function(&self, d_max: u32) -> Result<Vec<u64>> {
        let num = self.hilbert_numerator()?;
        Ok(series_coefficients(&num, self.ring.nvars(), d_max)
            .into_iter()
            .map(|c| u64::try_from(c).expect("Hilbert function is nonnegative"))
            .collect())
    }

    /// Krull dimension of `R/I`: the largest set of variables containing the
    /// support of no leading monomial.
    pub fn krull_dimension(&self) -> Result<usize> {
        let gb = self.groebner()?;
        if gb.is_unit() {
            return Err(Error::InvalidInput("Krull dimension of the unit ideal".into()));
        }
        let k = self.ring.nvars();
        if k > 64 {
            return Err(Error::InvalidInput("at most 64 variables supported".into()));
        }
        let mut sets: Vec<u64> = gb.leading_monomials().iter().map(Monomial::support_mask).collect();
        sets.sort_by_key(|s| s.count_ones());
        let mut minimal: Vec<u64> = Vec::new();
        for s in sets {
            if minimal.iter().all(|&x| x & s != x) {
                minimal.push(s);
            }
        }
        let cover = min_vertex_cover(&minimal, 0, k as u32 + 1);
        Ok(k - cover as usize)
    }

    /// A minimal generating set of a homogeneous ideal, chosen greedily from
    /// the generators in order of degree.
    pub fn minimal_generators(&self) -> Result<Vec<Polynomial>> {
        self.require_homogeneous("minimal generators")?;
        let mut gens: Vec<&Polynomial> = self.gens.iter().collect();
        gens.sort_by_key(|g| g.degree());
        let mut kept: Vec<Polynomial> = Vec::new();
        let mut gb: Option<GroebnerBasis> = None;
        for g in gens {
            let inside = gb.as_ref().is_some_and(|b| b.contains(g));
            if !inside {
                kept.push(g.clone());
                gb = Some(buchberger(&self.ring, &kept, &self.budget)?);
            }
        }
        Ok(kept)
    }

    /// Polynomials in the generators rendered one per line.
    pub fn render(&self) -> String {
        self.gens.iter().map(Polynomial::render).collect::<Vec<_>>().join("\n")
    }
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<")?;
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", g.render())?;
        }
        write!(f, "> in {:?}", self.ring)
    }
}

fn check_same(a: &RingRef, b: &RingRef) -> Result<()> {
    if **a == **b {
        Ok(())
    } else {
        Err(Error::RingMismatch(format!("{a:?} vs {b:?}")))
    }
}

fn min_vertex_cover(sets: &[u64], chosen: u64, best: u32) -> u32 {
    let size = chosen.count_ones();
    if size >= best {
        return best;
    }
    let Some(&open) = sets.iter().find(|&&s| s & chosen == 0) else {
        return size;
    };
    let mut best = best;
    let mut bits = open;
    while bits != 0 {
        let b = bits & bits.wrapping_neg();
        bits &= bits - 1;
        best = best.min(min_vertex_cover(sets, chosen | b, best));
    }
    best
}

fn minimalize(mut gens: Vec<Vec<u16>>) -> Vec<Vec<u16>> {
    gens.sort_by_key(|g| g.iter().map(|&e| e as u32).sum::<u32>());
    gens.dedup();
    let mut out: Vec<Vec<u16>> = Vec::with_capacity(gens.len());
    for g in gens {
        if !out.iter().any(|m| m.iter().zip(&g).all(|(a, b)| a <= b)) {
            out.push(g);
        }
    }
    out
}

fn poly_sub_shifted(a: &mut Vec<BigInt>, b: &[BigInt], shift: usize, sign: i32) {
    if a.len() < b.len() + shift {
        a.resize(b.len() + shift, BigInt::zero());
    }
    for (i, c) in b.iter().enumerate() {
        if sign > 0 {
            a[i + shift] += c;
        } else {
            a[i + shift] -= c;
        }
    }
}

/// Hilbert series numerator of `R / M` for a monomial ideal `M`, pivoting on
/// the variable occurring in the most non-pure-power generators:
/// `N(M) = N(M + <x>) + T N(M : x)`.
fn hs_numerator(gens: Vec<Vec<u16>>, k: usize) -> Vec<BigInt> {
    let gens = minimalize(gens);
    let mut counts = vec![0usize; k];
    let mut mixed = false;
    for g in &gens {
        let supp = g.iter().filter(|&&e| e > 0).count();
        if supp > 1 {
            mixed = true;
            for (i, &e) in g.iter().enumerate() {
                if e > 0 {
                    counts[i] += 1;
                }
            }
        }
    }
    if !mixed {
        // pure powers in distinct variables: prod (1 - T^e)
        let mut acc = vec![BigInt::one()];
        for g in &gens {
            let e = g.iter().map(|&e| e as usize).sum::<usize>();
            let mut next = acc.clone();
            poly_sub_shifted(&mut next, &acc, e, -1);
            acc = next;
        }
        return acc;
    }
    let x = (0..k).max_by_key(|&i| (counts[i], std::cmp::Reverse(i))).unwrap();
    let mut plus = gens.clone();
    let mut xv = vec![0u16; k];
    xv[x] = 1;
    plus.push(xv);
    let colon: Vec<Vec<u16>> = gens
        .iter()
        .map(|g| {
            let mut h = g.clone();
            h[x] = h[x].saturating_sub(1);
            h
        })
        .collect();
    let mut n = hs_numerator(plus, k);
    let c = hs_numerator(colon, k);
    poly_sub_shifted(&mut n, &c, 1, 1);
    n
}

/// Coefficients of `N(T) / (1 - T)^k` up to `T^d_max`.
pub(crate) fn series_coefficients(num: &[BigInt], k: usize, d_max: u32) -> Vec<BigInt> {
    (0..=d_max as usize)
        .map(|d| {
            let mut s = BigInt::zero();
            for (j, c) in num.iter().enumerate().take(d + 1) {
                s += c * inverse_power_coeff(d - j, k);
            }
            s
        })
        .collect()
}

/// Coefficient of `T^m` in `1 / (1 - T)^k`.
pub(crate) fn inverse_power_coeff(m: usize, k: usize) -> BigInt {
    if k == 0 {
        return if m == 0 { BigInt::one() } else { BigInt::zero() };
    }
    // C(m + k - 1, k - 1)
    let mut r = BigInt::one();
    for i in 0..k - 1 {
        r = r * BigInt::from(m + 1 + i) / BigInt::from(i + 1);
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::parse_polynomial;

    fn ideal(r: &RingRef, s: &[&str]) -> Ideal {
        Ideal::new(r, s.iter().map(|t| parse_polynomial(t, r).unwrap()).collect())
    }

    fn xy() -> RingRef {
        Ring::new(["x", "y"])
    }

    #[test]
    fn hilbert_examples() {
        let r = xy();
        assert_eq!(Ideal::maximal_power(&r, 2).hilbert_function(3).unwrap(), vec![1, 2, 0, 0]);
        assert_eq!(Ideal::zero(&r).hilbert_function(2).unwrap(), vec![1, 2, 3]);
        let r3 = Ring::new(["x", "y", "z"]);
        let i = ideal(&r3, &["x*y", "y*z", "x*z"]);
        // three coordinate lines: HF = 1, 3, 3, 3, ...
        assert_eq!(i.hilbert_function(4).unwrap(), vec![1, 3, 3, 3, 3]);
        // pairwise products of x1, x2, x1+x2, x3: equals (x1, x2) ∩ m^2, so x3^d survives
        let r = Ring::new(["x1", "x2", "x3"]);
        let i = ideal(&r, &["x1*x2", "x1*(x1+x2)", "x1*x3", "x2*(x1+x2)", "x2*x3", "(x1+x2)*x3"]);
        assert_eq!(i.hilbert_function(3).unwrap(), vec![1, 3, 1, 1]);
    }

    #[test]
    fn hilbert_matches_standard_monomial_count() {
        let r = Ring::new(["a", "b", "c", "d"]);
        let i = ideal(&r, &["a^2*b", "a*c^2 - b*d^2", "b^2*c*d", "d^3 - a*b*c"]);
        let gb = i.groebner().unwrap();
        let hf = i.hilbert_function(7).unwrap();
        for d in 0..=7u32 {
            let count = crate::exactalg::monomials_of_degree(4, d).iter().filter(|m| !gb.is_leading(m)).count();
            assert_eq!(hf[d as usize], count as u64, "degree {d}");
        }
    }

    #[test]
    fn krull_examples() {
        let r = xy();
        assert_eq!(ideal(&r, &["x"]).krull_dimension().unwrap(), 1);
        let r3 = Ring::new(["x", "y", "z"]);
        assert_eq!(Ideal::maximal(&r3).krull_dimension().unwrap(), 0);
        assert_eq!(ideal(&r3, &["x*y", "y*z", "x*z"]).krull_dimension().unwrap(), 1);
        assert_eq!(Ideal::zero(&r3).krull_dimension().unwrap(), 3);
        assert!(Ideal::unit(&r3).krull_dimension().is_err());
    }

    #[test]
    fn eliminate_examples() {
        let r = Ring::new(["x", "t1", "t2"]);
        let e = ideal(&r, &["t1 - x", "t2 - x"]).eliminate(&[0]).unwrap();
        assert_eq!(e.ring().names(), &["t1", "t2"]);
        assert!(e.equals(&ideal(e.ring(), &["t1 - t2"])).unwrap());
        let r = Ring::new(["x", "t"]);
        let e = ideal(&r, &["t - x^2"]).eliminate(&[0]).unwrap();
        assert!(e.is_zero());
    }

    #[test]
    fn colon_intersect_saturate() {
        let r = xy();
        let x = parse_polynomial("x", &r).unwrap();
        let c = ideal(&r, &["x^2", "x*y"]).colon(&x).unwrap();
        assert!(c.equals(&ideal(&r, &["x", "y"])).unwrap());
        let i = ideal(&r, &["x"]).intersect(&ideal(&r, &["y"])).unwrap();
        assert!(i.equals(&ideal(&r, &["x*y"])).unwrap());
        let s = ideal(&r, &["x^2", "x*y"]).saturate().unwrap();
        assert!(s.equals(&ideal(&r, &["x"])).unwrap());
        let s = Ideal::maximal_power(&r, 3).saturate().unwrap();
        assert!(s.is_unit().unwrap());
    }

    #[test]
    fn colon_by_nonlinear_and_linear_agree_with_definition() {
        let r = Ring::new(["x", "y", "z"]);
        let i = ideal(&r, &["x*y*(x+z)", "y*z*(y-z)", "x*z^2"]);
        for g in ["x + y - z", "y*z", "x^2"] {
            let g = parse_polynomial(g, &r).unwrap();
            let c = i.colon(&g).unwrap();
            for h in c.gens() {
                assert!(i.contains(&h.mul(&g).unwrap()).unwrap());
            }
            assert!(c.contains_ideal(&i).unwrap());
        }
        // linear colon equals the generic route through intersection
        let l = parse_polynomial("x + 2*y - z", &r).unwrap();
        let fast = i.colon(&l).unwrap();
        let inter = i.intersect(&Ideal::new(&r, vec![l.clone()])).unwrap();
        let slow = Ideal::new(&r, inter.gens().iter().map(|h| h.div_exact(&l).unwrap().unwrap()).collect());
        assert!(fast.equals(&slow).unwrap());
    }

    #[test]
    fn minimal_generators_drop_redundant() {
        let r = xy();
        let i = ideal(&r, &["x*y", "x^2", "x^2 + x*y", "x^2*y"]);
        let m = i.minimal_generators().unwrap();
        assert_eq!(m.len(), 2);
    }
}
