//! Polynomial string grammar.
//!
//! ```text
//! expr   := sign* term (('+' | '-') sign* term)*
//! term   := factor (('*' | '/') factor)*      // '/' only by nonzero constants
//! factor := atom ('^' integer)?
//! atom   := integer | name | '(' expr ')'
//! ```
//!
//! Example: `3/2*x1^2*x2 - x3`.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::polynomial::Poly;
use crate::error::{Error, Result};
use crate::linalg::Rational;

/// Ordered variable names; a polynomial's variable `i` is `names[i]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Variables {
    names: Vec<String>,
}

impl Variables {
    pub fn new(names: Vec<String>) -> Result<Self> {
        for (i, n) in names.iter().enumerate() {
            let valid = n.chars().next().is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
                && n.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
            if !valid {
                return Err(Error::Parse {
                    position: 0,
                    message: format!("invalid variable name {n:?}"),
                });
            }
            if names[..i].contains(n) {
                return Err(Error::Parse {
                    position: 0,
                    message: format!("duplicate variable name {n:?}"),
                });
            }
        }
        Ok(Variables { names })
    }

    /// `prefix1, …, prefixN`.
    pub fn numbered(prefix: &str, n: usize) -> Self {
        Variables {
            names: (1..=n).map(|i| format!("{prefix}{i}")).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index(&self, name: &str) -> Result<usize> {
        self.names
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))
    }

    pub fn concat(&self, other: &Variables) -> Result<Variables> {
        let mut names = self.names.clone();
        names.extend(other.names.iter().cloned());
        Variables::new(names)
    }

    pub fn parse(&self, src: &str) -> Result<Poly> {
        let tokens = tokenize(src)?;
        let mut p = Parser {
            vars: self,
            tokens,
            pos: 0,
            src_len: src.len(),
        };
        let poly = p.expr()?;
        if let Some(t) = p.peek() {
            return Err(Error::Parse {
                position: t.offset,
                message: format!("unexpected {:?}", t.tok),
            });
        }
        Ok(poly)
    }

    pub fn render(&self, p: &Poly) -> String {
        render_with(p, &self.names)
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Name(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

struct Spanned {
    tok: Tok,
    offset: usize,
}

fn tokenize(src: &str) -> Result<Vec<Spanned>> {
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        let start = i;
        let tok = match c {
            ' ' | '\t' | '\n' | '\r' => {
                i += 1;
                continue;
            }
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            d if d.is_ascii_digit() => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                if i < bytes.len() && (bytes[i] == b'.' || bytes[i] == b'e' || bytes[i] == b'E') {
                    return Err(Error::Parse {
                        position: i,
                        message: "floating-point literals are not accepted".into(),
                    });
                }
                out.push(Spanned {
                    tok: Tok::Int(src[start..i].parse().expect("digits")),
                    offset: start,
                });
                continue;
            }
            a if a.is_ascii_alphabetic() || a == '_' => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push(Spanned {
                    tok: Tok::Name(src[start..i].to_string()),
                    offset: start,
                });
                continue;
            }
            other => {
                return Err(Error::Parse {
                    position: i,
                    message: format!("unexpected character {other:?}"),
                })
            }
        };
        out.push(Spanned { tok, offset: start });
        i += 1;
    }
    Ok(out)
}

struct Parser<'a> {
    vars: &'a Variables,
    tokens: Vec<Spanned>,
    pos: usize,
    src_len: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Spanned> {
        self.tokens.get(self.pos)
    }

    fn offset(&self) -> usize {
        self.peek().map_or(self.src_len, |t| t.offset)
    }

    fn eat(&mut self, tok: &Tok) -> bool {
        if self.peek().is_some_and(|t| &t.tok == tok) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn err<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            position: self.offset(),
            message: message.into(),
        })
    }

    fn n(&self) -> usize {
        self.vars.len()
    }

    fn expr(&mut self) -> Result<Poly> {
        let mut acc = self.signed_term()?;
        loop {
            if self.eat(&Tok::Plus) {
                acc = &acc + &self.signed_term()?;
            } else if self.eat(&Tok::Minus) {
                acc = &acc - &self.signed_term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn signed_term(&mut self) -> Result<Poly> {
        let mut negate = false;
        loop {
            if self.eat(&Tok::Minus) {
                negate = !negate;
            } else if !self.eat(&Tok::Plus) {
                break;
            }
        }
        let t = self.term()?;
        Ok(if negate { -t } else { t })
    }

    fn term(&mut self) -> Result<Poly> {
        let mut acc = self.factor()?;
        loop {
            if self.eat(&Tok::Star) {
                acc = &acc * &self.factor()?;
            } else if self.peek().is_some_and(|t| t.tok == Tok::Slash) {
                let at = self.offset();
                self.pos += 1;
                let d = self.factor()?;
                match d.constant_value() {
                    Some(c) if !c.is_zero() => acc = acc.scale(&(Rational::one() / c)),
                    _ => {
                        return Err(Error::Parse {
                            position: at,
                            message: "division is only allowed by a nonzero constant".into(),
                        })
                    }
                }
            } else {
                return Ok(acc);
            }
        }
    }

    fn factor(&mut self) -> Result<Poly> {
        let base = self.atom()?;
        if self.eat(&Tok::Caret) {
            match self.peek().map(|t| t.tok.clone()) {
                Some(Tok::Int(e)) => {
                    let e: u32 = u32::try_from(&e).or_else(|_| self.err("exponent too large"))?;
                    self.pos += 1;
                    Ok(base.pow(e))
                }
                _ => self.err("expected a nonnegative integer exponent"),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<Poly> {
        let Some(t) = self.peek() else {
            return self.err("unexpected end of input");
        };
        let offset = t.offset;
        match t.tok.clone() {
            Tok::Int(v) => {
                self.pos += 1;
                Ok(Poly::constant(self.n(), Rational::from_integer(v)))
            }
            Tok::Name(name) => {
                self.pos += 1;
                let i = self.vars.index(&name).map_err(|_| Error::Parse {
                    position: offset,
                    message: format!("unknown variable `{name}`"),
                })?;
                Ok(Poly::var(self.n(), i))
            }
            Tok::LParen => {
                self.pos += 1;
                let e = self.expr()?;
                if !self.eat(&Tok::RParen) {
                    return self.err("expected `)`");
                }
                Ok(e)
            }
            other => self.err(format!("unexpected {other:?}")),
        }
    }
}

/// Canonical rendering: terms in decreasing graded-lex order.
pub fn render_with(p: &Poly, names: &[String]) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (k, (m, c)) in p.terms().rev().enumerate() {
        let neg = c.is_negative();
        let abs = c.abs();
        if k == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let mut factors: Vec<String> = Vec::new();
        for (i, &e) in m.exponents().iter().enumerate() {
            match e {
                0 => {}
                1 => factors.push(names[i].clone()),
                _ => factors.push(format!("{}^{}", names[i], e)),
            }
        }
        if factors.is_empty() {
            out.push_str(&abs.to_string());
        } else {
            if !abs.is_one() {
                out.push_str(&abs.to_string());
                out.push('*');
            }
            out.push_str(&factors.join("*"));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rational::frac;
    use proptest::prelude::*;

    fn vars3() -> Variables {
        Variables::numbered("x", 3)
    }

    #[test]
    fn parses_grammar_example() {
        let v = vars3();
        let p = v.parse("3/2*x1^2*x2 - x3").unwrap();
        let x1 = Poly::var(3, 0);
        let x2 = Poly::var(3, 1);
        let x3 = Poly::var(3, 2);
        assert_eq!(p, &(&x1.pow(2) * &x2).scale(&frac(3, 2)) - &x3);
        assert_eq!(v.render(&p), "3/2*x1^2*x2 - x3");
    }

    #[test]
    fn parses_parentheses_and_signs() {
        let v = vars3();
        assert_eq!(v.parse("-(x1 + x2)*(x1 - x2)").unwrap(), v.parse("x2^2 - x1^2").unwrap());
        assert_eq!(v.parse("x1/2").unwrap(), v.parse("1/2*x1").unwrap());
        assert_eq!(v.parse("- -x1").unwrap(), v.parse("x1").unwrap());
    }

    #[test]
    fn rejects_bad_input_with_positions() {
        let v = vars3();
        match v.parse("x1 + y7") {
            Err(Error::Parse { position, .. }) => assert_eq!(position, 5),
            other => panic!("expected parse error, got {other:?}"),
        }
        assert!(v.parse("1.5*x1").is_err());
        assert!(v.parse("x1/x2").is_err());
        assert!(v.parse("x1/0").is_err());
        assert!(v.parse("x1 +").is_err());
        assert!(v.parse("(x1").is_err());
        assert!(v.parse("x1 x2").is_err());
    }

    #[test]
    fn rejects_invalid_variable_lists() {
        assert!(Variables::new(vec!["x".into(), "x".into()]).is_err());
        assert!(Variables::new(vec!["1x".into()]).is_err());
    }

    #[test]
    fn renders_zero_and_constants() {
        let v = vars3();
        assert_eq!(v.render(&Poly::zero(3)), "0");
        assert_eq!(v.render(&v.parse("-7/3").unwrap()), "-7/3");
        assert_eq!(v.render(&v.parse("x2 - 1 + x1^2").unwrap()), "x1^2 + x2 - 1");
    }

    fn small_poly() -> impl Strategy<Value = Poly> {
        prop::collection::vec(((0u32..3, 0u32..3, 0u32..3), -5i64..=5, 1i64..4), 0..6).prop_map(|ts| {
            Poly::from_terms(
                3,
                ts.into_iter().map(|((a, b, c), n, d)| {
                    (super::super::polynomial::Monomial::from_exponents(vec![a, b, c]), frac(n, d))
                }),
            )
        })
    }

    proptest! {
        #[test]
        fn render_then_parse_is_identity(p in small_poly()) {
            let v = vars3();
            prop_assert_eq!(v.parse(&v.render(&p)).unwrap(), p);
        }
    }
}
