//! Text parsers for rationals, linear forms and (for tests and fixtures)
//! general polynomials.
//!
//! Linear forms accept two syntaxes:
//!
//! ```text
//! form   := sign? term (('+'|'-') term)*
//! term   := [rational '*'] variable
//! vector := rational+          (exactly k entries)
//! rational := int ['/' posint]
//! ```
//!
//! Columns in errors are 1-based character offsets.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::polynomial::Polynomial;
use super::ring::RingRef;
use super::{LinearForm, Rational};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn err(col: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line: 0, col, msg: msg.into() }
}

fn tokenize(text: &str) -> Result<Vec<(Tok, usize)>> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = i + 1;
        match c {
            c if c.is_whitespace() => {
                i += 1;
            }
            '0'..='9' => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let s: String = chars[start..i].iter().collect();
                out.push((Tok::Num(s.parse().expect("digits")), col));
            }
            c if c.is_alphabetic() || c == '_' => {
                let start = i;
                while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                out.push((Tok::Ident(chars[start..i].iter().collect()), col));
            }
            '+' => {
                out.push((Tok::Plus, col));
                i += 1;
            }
            '-' | '\u{2212}' => {
                out.push((Tok::Minus, col));
                i += 1;
            }
            '*' | '\u{00b7}' => {
                out.push((Tok::Star, col));
                i += 1;
            }
            '/' => {
                out.push((Tok::Slash, col));
                i += 1;
            }
            '^' => {
                out.push((Tok::Caret, col));
                i += 1;
            }
            '(' => {
                out.push((Tok::LParen, col));
                i += 1;
            }
            ')' => {
                out.push((Tok::RParen, col));
                i += 1;
            }
            other => return Err(err(col, format!("unexpected character '{other}'"))),
        }
    }
    Ok(out)
}

/// Parses `int['/'posint]` with an optional leading sign.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let toks = tokenize(text)?;
    let mut pos = 0;
    let neg = matches!(toks.first(), Some((Tok::Minus, _)));
    if neg || matches!(toks.first(), Some((Tok::Plus, _))) {
        pos += 1;
    }
    let q = rational_at(&toks, &mut pos, text.chars().count() + 1)?;
    if pos != toks.len() {
        return Err(err(toks[pos].1, "trailing input after rational"));
    }
    Ok(if neg { -q } else { q })
}

fn rational_at(toks: &[(Tok, usize)], pos: &mut usize, end_col: usize) -> Result<Rational> {
    let num = match toks.get(*pos) {
        Some((Tok::Num(n), _)) => n.clone(),
        Some((_, c)) => return Err(err(*c, "expected integer")),
        None => return Err(err(end_col, "expected integer")),
    };
    *pos += 1;
    if let Some((Tok::Slash, c)) = toks.get(*pos) {
        let c = *c;
        *pos += 1;
        let den = match toks.get(*pos) {
            Some((Tok::Num(d), _)) => d.clone(),
            _ => return Err(err(c + 1, "expected positive denominator")),
        };
        if den.is_zero() {
            return Err(err(c + 1, "zero denominator"));
        }
        *pos += 1;
        return Ok(Rational::new(num, den));
    }
    Ok(Rational::from_integer(num))
}

/// Parses a linear form in either expression or vector syntax.
pub fn parse_linear_form(text: &str, ring: &RingRef) -> Result<LinearForm> {
    let toks = tokenize(text)?;
    let end_col = text.chars().count() + 1;
    if toks.is_empty() {
        return Err(err(1, "empty linear form"));
    }
    let k = ring.nvars();
    let vector_mode = toks.iter().all(|(t, _)| matches!(t, Tok::Num(_) | Tok::Slash | Tok::Minus | Tok::Plus));
    let mut coeffs = vec![Rational::zero(); k];
    if vector_mode {
        let mut pos = 0;
        let mut vals = Vec::new();
        while pos < toks.len() {
            let start_col = toks[pos].1;
            let mut neg = false;
            match toks[pos].0 {
                Tok::Minus => {
                    neg = true;
                    pos += 1;
                }
                Tok::Plus => pos += 1,
                _ => {}
            }
            let q = rational_at(&toks, &mut pos, end_col)?;
            vals.push((if neg { -q } else { q }, start_col));
        }
        if vals.len() != k {
            return Err(err(1, format!("coefficient vector has {} entries, ring has {} variables", vals.len(), k)));
        }
        for (i, (q, _)) in vals.into_iter().enumerate() {
            coeffs[i] = q;
        }
    } else {
        let mut pos = 0;
        let mut first = true;
        while pos < toks.len() {
            let mut sign = Rational::one();
            match &toks[pos].0 {
                Tok::Plus => pos += 1,
                Tok::Minus => {
                    sign = -sign;
                    pos += 1;
                }
                _ if first => {}
                _ => return Err(err(toks[pos].1, "expected '+' or '-'")),
            }
            first = false;
            let mut coef = Rational::one();
            let term_col = toks.get(pos).map(|t| t.1).unwrap_or(end_col);
            if let Some((Tok::Num(_), _)) = toks.get(pos) {
                coef = rational_at(&toks, &mut pos, end_col)?;
                match toks.get(pos) {
                    Some((Tok::Star, _)) => pos += 1,
                    Some((Tok::Plus | Tok::Minus, _)) | None => {
                        return Err(err(term_col, "constant term in a linear form"));
                    }
                    Some((_, c)) => return Err(err(*c, "expected '*' after coefficient")),
                }
            }
            let (name, col) = match toks.get(pos) {
                Some((Tok::Ident(n), c)) => (n.clone(), *c),
                Some((_, c)) => return Err(err(*c, "expected variable")),
                None => return Err(err(end_col, "expected variable")),
            };
            pos += 1;
            let idx = ring.var_index(&name).ok_or_else(|| Error::Parse {
                line: 0,
                col,
                msg: format!("unknown variable '{name}'"),
            })?;
            if let Some((Tok::Star | Tok::Caret | Tok::Ident(_) | Tok::LParen, c)) = toks.get(pos) {
                return Err(Error::Parse { line: 0, col: *c, msg: "nonlinear term".into() });
            }
            coeffs[idx] += sign * coef;
        }
    }
    let form = LinearForm::new(coeffs);
    if form.is_zero() {
        return Err(Error::ZeroForm);
    }
    Ok(form)
}

/// Parses a polynomial over `ring`: sums of products of rationals, variables,
/// powers and parenthesised subexpressions.
pub fn parse_polynomial(text: &str, ring: &RingRef) -> Result<Polynomial> {
    let toks = tokenize(text)?;
    let mut p = PolyParser { toks: &toks, pos: 0, ring, end_col: text.chars().count() + 1 };
    let out = p.expr()?;
    if p.pos != toks.len() {
        return Err(err(toks[p.pos].1, "unexpected token"));
    }
    Ok(out)
}

struct PolyParser<'a> {
    toks: &'a [(Tok, usize)],
    pos: usize,
    ring: &'a RingRef,
    end_col: usize,
}

impl PolyParser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.0)
    }

    fn col(&self) -> usize {
        self.toks.get(self.pos).map(|t| t.1).unwrap_or(self.end_col)
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut acc = Polynomial::zero(self.ring);
        let mut first = true;
        loop {
            let neg = match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    false
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    true
                }
                _ if first => false,
                _ => break,
            };
            first = false;
            let t = self.term()?;
            acc = if neg { acc.sub(&t)? } else { acc.add(&t)? };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.factor()?;
        while let Some(Tok::Star) = self.peek() {
            self.pos += 1;
            let f = self.factor()?;
            acc = acc.mul(&f)?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Polynomial> {
        let col = self.col();
        let base = match self.peek().cloned() {
            Some(Tok::Num(_)) => {
                let q = rational_at(self.toks, &mut self.pos, self.end_col)?;
                Polynomial::constant(self.ring, q)
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                let idx = self.ring.var_index(&name).ok_or_else(|| err(col, format!("unknown variable '{name}'")))?;
                Polynomial::var(self.ring, idx)
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let e = self.expr()?;
                match self.peek() {
                    Some(Tok::RParen) => self.pos += 1,
                    _ => return Err(err(self.col(), "expected ')'")),
                }
                e
            }
            _ => return Err(err(col, "expected factor")),
        };
        if let Some(Tok::Caret) = self.peek() {
            self.pos += 1;
            match self.peek().cloned() {
                Some(Tok::Num(n)) => {
                    self.pos += 1;
                    let e: u32 = n.try_into().map_err(|_| err(col, "exponent too large"))?;
                    return Ok(base.pow(e));
                }
                _ => return Err(err(self.col(), "expected exponent")),
            }
        }
        Ok(base)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::Ring;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn vector_mode() {
        let r = Ring::standard(3);
        let f = parse_linear_form("1 1 0", &r).unwrap();
        assert_eq!(f.coeffs(), &[q(1, 1), q(1, 1), q(0, 1)]);
        let g = parse_linear_form("-2/3 0 5", &r).unwrap();
        assert_eq!(g.coeffs(), &[q(-2, 3), q(0, 1), q(5, 1)]);
        assert!(parse_linear_form("1 2", &r).is_err());
    }

    #[test]
    fn expression_mode() {
        let r = Ring::standard(3);
        assert_eq!(parse_linear_form("x3", &r).unwrap().coeffs(), &[q(0, 1), q(0, 1), q(1, 1)]);
        let f = parse_linear_form("x1 + 2/3*x2 \u{2212} x3", &r).unwrap();
        assert_eq!(f.coeffs(), &[q(1, 1), q(2, 3), q(-1, 1)]);
        let g = parse_linear_form("-x1 - x2 + x1", &r).unwrap();
        assert_eq!(g.coeffs(), &[q(0, 1), q(-1, 1), q(0, 1)]);
    }

    #[test]
    fn linear_form_errors() {
        let r = Ring::standard(3);
        assert!(matches!(parse_linear_form("x1 \u{2212} x1", &r), Err(Error::ZeroForm)));
        match parse_linear_form("x1 + x7", &r) {
            Err(Error::Parse { col, msg, .. }) => {
                assert_eq!(col, 6);
                assert!(msg.contains("unknown variable"));
            }
            other => panic!("{other:?}"),
        }
        assert!(matches!(parse_linear_form("x1*x2", &r), Err(Error::Parse { col: 3, .. })));
        assert!(matches!(parse_linear_form("x1^2", &r), Err(Error::Parse { .. })));
        assert!(matches!(parse_linear_form("x1 + 3", &r), Err(Error::Parse { .. })));
        assert!(matches!(parse_linear_form("x1 $ x2", &r), Err(Error::Parse { col: 4, .. })));
        assert!(matches!(parse_linear_form("1/0 1 1", &r), Err(Error::Parse { .. })));
    }

    #[test]
    fn polynomial_parser() {
        let r = Ring::new(["x", "y"]);
        let p = parse_polynomial("(x+y)^2 - 2*x*y", &r).unwrap();
        assert_eq!(p, parse_polynomial("x^2 + y^2", &r).unwrap());
        assert!(parse_polynomial("x +", &r).is_err());
        assert!(parse_polynomial("z", &r).is_err());
    }

    #[test]
    fn rationals() {
        assert_eq!(parse_rational("-6/4").unwrap(), q(-3, 2));
        assert_eq!(parse_rational("7").unwrap(), q(7, 1));
        assert!(parse_rational("1/").is_err());
    }
}
