//! Exact rational arithmetic, monomials and sparse polynomials.

mod monomial;
mod parse;
mod polynomial;
mod ring;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub use monomial::{monomials_of_degree, Monomial};
pub use parse::{parse_linear_form, parse_polynomial, parse_rational};
pub use polynomial::Polynomial;
pub use ring::{MonomialOrder, Ring, RingRef};

/// Reduced fraction with positive denominator (`num_rational` keeps this
/// normal form after every operation).
pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// `"n"` for integers, `"n/d"` otherwise.
pub fn format_rational(q: &Rational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// `"n/d"` always; the serialized form used in reports.
pub fn format_rational_full(q: &Rational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

/// A linear form `c_1 x_1 + ... + c_k x_k`, stored as its coefficient vector.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LinearForm(Vec<Rational>);

impl LinearForm {
    pub fn new(coeffs: Vec<Rational>) -> Self {
        LinearForm(coeffs)
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        LinearForm(coeffs.iter().map(|&c| rat(c)).collect())
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn to_polynomial(&self, ring: &RingRef) -> Polynomial {
        assert_eq!(ring.nvars(), self.0.len(), "form length differs from ring");
        Polynomial::from_terms(
            ring,
            self.0
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (Monomial::var(ring.nvars(), i), c.clone())),
        )
    }

    /// Inverse of [`to_polynomial`](Self::to_polynomial); `None` unless the
    /// polynomial is homogeneous of degree one.
    pub fn from_polynomial(p: &Polynomial) -> Option<LinearForm> {
        let k = p.ring().nvars();
        let mut c = vec![Rational::zero(); k];
        for (m, a) in p.terms() {
            if m.degree() != 1 {
                return None;
            }
            let i = m.support().next()?;
            c[i] = a.clone();
        }
        Some(LinearForm(c))
    }

    /// Scales so that the first nonzero coefficient is 1.
    pub fn normalized(&self) -> LinearForm {
        match self.0.iter().find(|c| !c.is_zero()) {
            None => self.clone(),
            Some(lead) => {
                let inv = lead.recip();
                LinearForm(self.0.iter().map(|c| c * &inv).collect())
            }
        }
    }

    pub fn is_proportional(&self, other: &LinearForm) -> bool {
        !self.is_zero() && self.normalized() == other.normalized()
    }

    pub fn scale(&self, c: &Rational) -> LinearForm {
        LinearForm(self.0.iter().map(|a| a * c).collect())
    }

    pub fn eval(&self, point: &[Rational]) -> Rational {
        self.0.iter().zip(point).fold(Rational::zero(), |acc, (a, b)| acc + a * b)
    }

    pub fn render(&self, ring: &RingRef) -> String {
        self.to_polynomial(ring).render()
    }

    /// Space-separated coefficient vector, parseable in vector mode.
    pub fn render_vector(&self) -> String {
        self.0.iter().map(format_rational).collect::<Vec<_>>().join(" ")
    }
}

impl serde::Serialize for LinearForm {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        serialize_rationals(&self.0, ser)
    }
}

/// Rationals as a list of `"n/d"` strings.
pub fn serialize_rationals<S: serde::Serializer>(v: &[Rational], ser: S) -> std::result::Result<S::Ok, S::Error> {
    ser.collect_seq(v.iter().map(format_rational_full))
}

impl std::fmt::Debug for LinearForm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "[{}]", self.render_vector())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn linear_form_polynomial_round_trip() {
        let r = Ring::standard(3);
        let f = LinearForm::new(vec![rat(1), ratio(2, 3), rat(-1)]);
        let p = f.to_polynomial(&r);
        assert_eq!(p.render(), "x1 + 2/3*x2 - x3");
        assert_eq!(LinearForm::from_polynomial(&p), Some(f));
    }

    #[test]
    fn proportionality() {
        let a = LinearForm::from_ints(&[1, 2, 0]);
        let b = LinearForm::from_ints(&[-2, -4, 0]);
        let c = LinearForm::from_ints(&[1, 2, 1]);
        assert!(a.is_proportional(&b));
        assert!(!a.is_proportional(&c));
    }
}
