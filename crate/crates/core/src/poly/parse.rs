//! Recursive-descent parser for the shared expression grammar.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary ('*' unary)*
//! unary  := '-' unary | power
//! power  := atom ('^' (INT | BLADE))*
//! atom   := INT ('/' INT)? | VAR | BLADE | '(' expr ')'
//! VAR    := 'x' INT          (x1 .. xm)
//! BLADE  := 'dx' INT | 'd' INT
//! ```
//!
//! `^` is exponentiation after a scalar and wedge after a blade. Blades only
//! appear in tensor text; plain polynomial parsing rejects them.

use num_bigint::BigInt;

use super::{Polynomial, Rational};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BladeKind {
    /// `dx3`: a coordinate covector.
    Covector,
    /// `d3`: a coordinate vector field.
    Vector,
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Var(usize),
    Blade(BladeKind, usize),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

/// A parsed expression: a sum of `coefficient * (blade word)`.
///
/// Blade words keep the order they were written in; re-sorting with signs is
/// the caller's job.
#[derive(Debug, Clone)]
pub(crate) struct Combination {
    pub terms: Vec<(Polynomial, Vec<usize>)>,
    pub kind: Option<BladeKind>,
}

impl Combination {
    fn scalar(p: Polynomial) -> Self {
        Combination {
            terms: vec![(p, Vec::new())],
            kind: None,
        }
    }

    fn is_scalar(&self) -> bool {
        self.terms.iter().all(|(_, w)| w.is_empty())
    }

    fn into_scalar(self, nvars: usize) -> Polynomial {
        let mut acc = Polynomial::zero(nvars);
        for (p, _) in self.terms {
            acc += &p;
        }
        acc
    }
}

fn err(position: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        position,
        message: message.into(),
    }
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    let read_int = |i: &mut usize| -> Option<&str> {
        let start = *i;
        while *i < bytes.len() && bytes[*i].is_ascii_digit() {
            *i += 1;
        }
        (start < *i).then(|| &text[start..*i])
    };
    while i < bytes.len() {
        let c = bytes[i];
        let pos = i;
        match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'+' => out.push((pos, Tok::Plus)),
            b'-' => out.push((pos, Tok::Minus)),
            b'*' => out.push((pos, Tok::Star)),
            b'/' => out.push((pos, Tok::Slash)),
            b'^' => out.push((pos, Tok::Caret)),
            b'(' => out.push((pos, Tok::LParen)),
            b')' => out.push((pos, Tok::RParen)),
            b'0'..=b'9' => {
                let s = read_int(&mut i).unwrap();
                out.push((pos, Tok::Int(s.parse().unwrap())));
                continue;
            }
            b'x' => {
                i += 1;
                let s = read_int(&mut i).ok_or_else(|| err(pos, "expected variable index after `x`"))?;
                out.push((pos, Tok::Var(parse_index(s, pos)?)));
                continue;
            }
            b'd' => {
                i += 1;
                let kind = if bytes.get(i) == Some(&b'x') {
                    i += 1;
                    BladeKind::Covector
                } else {
                    BladeKind::Vector
                };
                let s = read_int(&mut i).ok_or_else(|| err(pos, "expected index after `d`/`dx`"))?;
                out.push((pos, Tok::Blade(kind, parse_index(s, pos)?)));
                continue;
            }
            _ => {
                let ch = text[pos..].chars().next().unwrap();
                return Err(err(pos, format!("unexpected character `{ch}`")));
            }
        }
        i += 1;
    }
    Ok(out)
}

fn parse_index(s: &str, pos: usize) -> Result<usize> {
    let v: usize = s.parse().map_err(|_| err(pos, "index too large"))?;
    if v == 0 {
        return Err(err(pos, "indices start at 1"));
    }
    Ok(v)
}

struct Parser<'a> {
    toks: &'a [(usize, Tok)],
    pos: usize,
    nvars: usize,
    end: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn here(&self) -> usize {
        self.toks.get(self.pos).map(|(p, _)| *p).unwrap_or(self.end)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(_, t)| t.clone());
        self.pos += 1;
        t
    }

    fn expr(&mut self) -> Result<Combination> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                    let rhs = self.term()?;
                    acc = self.add(acc, rhs, false)?;
                }
                Some(Tok::Minus) => {
                    self.bump();
                    let rhs = self.term()?;
                    acc = self.add(acc, rhs, true)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn add(&self, a: Combination, b: Combination, negate: bool) -> Result<Combination> {
        let kind = self.merge_kind(a.kind, b.kind)?;
        let mut terms = a.terms;
        terms.extend(b.terms.into_iter().map(|(p, w)| (if negate { -p } else { p }, w)));
        Ok(Combination { terms, kind })
    }

    fn merge_kind(&self, a: Option<BladeKind>, b: Option<BladeKind>) -> Result<Option<BladeKind>> {
        match (a, b) {
            (Some(x), Some(y)) if x != y => Err(err(self.here(), "cannot mix form blades (dx) and vector blades (d)")),
            (x, y) => Ok(x.or(y)),
        }
    }

    fn term(&mut self) -> Result<Combination> {
        let mut acc = self.unary()?;
        while let Some(Tok::Star) = self.peek() {
            let at = self.here();
            self.bump();
            let rhs = self.unary()?;
            if !acc.is_scalar() && !rhs.is_scalar() {
                return Err(err(at, "blades must be joined with `^`, not `*`"));
            }
            acc = self.product(acc, rhs)?;
        }
        Ok(acc)
    }

    fn product(&self, a: Combination, b: Combination) -> Result<Combination> {
        let kind = self.merge_kind(a.kind, b.kind)?;
        let mut terms = Vec::with_capacity(a.terms.len() * b.terms.len());
        for (pa, wa) in &a.terms {
            for (pb, wb) in &b.terms {
                let mut w = wa.clone();
                w.extend_from_slice(wb);
                terms.push((pa * pb, w));
            }
        }
        Ok(Combination { terms, kind })
    }

    fn unary(&mut self) -> Result<Combination> {
        if let Some(Tok::Minus) = self.peek() {
            self.bump();
            let inner = self.unary()?;
            return Ok(Combination {
                terms: inner.terms.into_iter().map(|(p, w)| (-p, w)).collect(),
                kind: inner.kind,
            });
        }
        self.power()
    }

    fn power(&mut self) -> Result<Combination> {
        let mut base = self.atom()?;
        while let Some(Tok::Caret) = self.peek() {
            let at = self.here();
            self.bump();
            match self.peek().cloned() {
                Some(Tok::Int(e)) if base.is_scalar() => {
                    self.bump();
                    let e: u32 = e.try_into().map_err(|_| err(at, "exponent too large"))?;
                    let p = base.into_scalar(self.nvars);
                    let mut acc = Polynomial::one(self.nvars);
                    for _ in 0..e {
                        acc = &acc * &p;
                    }
                    base = Combination::scalar(acc);
                }
                Some(Tok::Blade(..)) | Some(Tok::LParen) if !base.is_scalar() => {
                    let rhs = self.atom()?;
                    if rhs.is_scalar() {
                        return Err(err(at, "`^` after a blade must be followed by a blade"));
                    }
                    base = self.product(base, rhs)?;
                }
                _ => {
                    return Err(err(
                        at,
                        "`^` needs an integer exponent or, after a blade, another blade",
                    ))
                }
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Combination> {
        let at = self.here();
        match self.bump() {
            Some(Tok::Int(n)) => {
                let mut c = Rational::from(n);
                if let Some(Tok::Slash) = self.peek() {
                    self.bump();
                    match self.bump() {
                        Some(Tok::Int(d)) => {
                            let d = Rational::from(d);
                            c = c.checked_div(&d).ok_or_else(|| err(at, "zero denominator"))?;
                        }
                        _ => return Err(err(at, "expected integer denominator after `/`")),
                    }
                }
                Ok(Combination::scalar(Polynomial::constant(self.nvars, c)))
            }
            Some(Tok::Var(v)) => {
                if v > self.nvars {
                    return Err(err(at, format!("variable x{v} exceeds chart dimension {}", self.nvars)));
                }
                Ok(Combination::scalar(Polynomial::var(self.nvars, v)?))
            }
            Some(Tok::Blade(kind, i)) => {
                if i > self.nvars {
                    return Err(err(
                        at,
                        format!("blade index {i} exceeds chart dimension {}", self.nvars),
                    ));
                }
                Ok(Combination {
                    terms: vec![(Polynomial::one(self.nvars), vec![i])],
                    kind: Some(kind),
                })
            }
            Some(Tok::LParen) => {
                let inner = self.expr()?;
                match self.bump() {
                    Some(Tok::RParen) => Ok(inner),
                    _ => Err(err(at, "unclosed parenthesis")),
                }
            }
            Some(t) => Err(err(at, format!("unexpected token {t:?}"))),
            None => Err(err(at, "unexpected end of input")),
        }
    }
}

pub(crate) fn parse_combination(text: &str, nvars: usize) -> Result<Combination> {
    let toks = lex(text)?;
    let mut p = Parser {
        toks: &toks,
        pos: 0,
        nvars,
        end: text.len(),
    };
    let out = p.expr()?;
    if p.pos < toks.len() {
        return Err(err(p.here(), "trailing input"));
    }
    Ok(out)
}

pub(crate) fn parse_polynomial(text: &str, nvars: usize) -> Result<Polynomial> {
    let c = parse_combination(text, nvars)?;
    if !c.is_scalar() {
        return Err(err(0, "expected a scalar expression, found a blade"));
    }
    Ok(c.into_scalar(nvars))
}
