//! Sparse multivariate polynomials over the rationals.
//!
//! Variables are positional: a polynomial in `m` variables lives on the chart
//! with coordinates `x1..xm`. Public indices are 1-based to match the printed
//! grammar (`x1`, `x2`, ...).

mod monomial;
pub(crate) mod parse;
mod rational;

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

pub use monomial::{monomials_up_to, Monomial};
pub use rational::Rational;

use crate::error::{Error, Result};

/// A polynomial in `nvars` variables with rational coefficients.
///
/// Terms are kept sorted by ascending graded-lex monomial order with no zero
/// coefficients, so equal polynomials have identical representations.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    nvars: usize,
    terms: Vec<(Monomial, Rational)>,
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Polynomial {
            nvars,
            terms: Vec::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Rational::ONE)
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        if c.is_zero() {
            return Self::zero(nvars);
        }
        Polynomial {
            nvars,
            terms: vec![(Monomial::one(nvars), c)],
        }
    }

    /// The coordinate function `x_var`, 1-based.
    pub fn var(nvars: usize, var: usize) -> Result<Self> {
        check_var(nvars, var)?;
        Ok(Polynomial {
            nvars,
            terms: vec![(Monomial::var(nvars, var - 1), Rational::ONE)],
        })
    }

    pub fn monomial(m: Monomial, c: Rational) -> Self {
        let nvars = m.nvars();
        if c.is_zero() {
            return Self::zero(nvars);
        }
        Polynomial {
            nvars,
            terms: vec![(m, c)],
        }
    }

    /// Builds a polynomial from arbitrary (possibly repeated, possibly zero) terms.
    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Monomial, Rational)>) -> Self {
        let mut raw: Vec<(Monomial, Rational)> = terms.into_iter().collect();
        for (m, _) in &raw {
            assert_eq!(m.nvars(), nvars, "monomial arity differs from polynomial arity");
        }
        raw.sort_by(|a, b| a.0.cmp(&b.0));
        Polynomial {
            nvars,
            terms: combine_sorted(raw),
        }
    }

    /// Parses the expression grammar (`x1`, `3/2`, `+ - * ^`, parentheses).
    pub fn parse(text: &str, nvars: usize) -> Result<Self> {
        parse::parse_polynomial(text, nvars)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> {
        self.terms.iter().map(|(m, c)| (m, c))
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        match self.terms.binary_search_by(|(k, _)| k.cmp(m)) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => Rational::ZERO,
        }
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.last().map(|(m, _)| m.degree())
    }

    pub fn try_add(&self, other: &Polynomial) -> Result<Polynomial> {
        check_same(self.nvars, other.nvars)?;
        Ok(self + other)
    }

    pub fn try_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        check_same(self.nvars, other.nvars)?;
        Ok(self * other)
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.nvars);
        }
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect(),
        }
    }

    /// Formal partial derivative with respect to `x_var` (1-based).
    pub fn diff(&self, var: usize) -> Result<Polynomial> {
        check_var(self.nvars, var)?;
        Ok(self.diff0(var - 1))
    }

    /// Zero-based derivative, unchecked.
    pub(crate) fn diff0(&self, var: usize) -> Polynomial {
        let mut out: Vec<(Monomial, Rational)> = self
            .terms
            .iter()
            .filter_map(|(m, c)| m.diff(var).map(|(e, dm)| (dm, c * &Rational::from_integer(e as i64))))
            .collect();
        // Lowering one exponent is injective and preserves relative order
        // among the surviving terms only within a degree; re-sort to be safe.
        out.sort_by(|a, b| a.0.cmp(&b.0));
        Polynomial {
            nvars: self.nvars,
            terms: out,
        }
    }

    /// Exact evaluation at a rational point.
    pub fn eval(&self, point: &[Rational]) -> Result<Rational> {
        check_same(self.nvars, point.len())?;
        let mut acc = Rational::ZERO;
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(m.exponents()) {
                for _ in 0..e {
                    t = &t * x;
                }
            }
            acc = &acc + &t;
        }
        Ok(acc)
    }

    /// True when every term contains `x_var` (0-based), i.e. `x_var | self`.
    pub(crate) fn divisible_by_var0(&self, var: usize) -> bool {
        self.terms.iter().all(|(m, _)| m.exponents()[var] > 0)
    }

    /// The leading (graded-lex largest) coefficient, if any.
    pub fn leading(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.last().map(|(m, c)| (m, c))
    }

    /// Whether printing needs parentheses when used as a factor.
    pub(crate) fn is_single_term(&self) -> bool {
        self.terms.len() <= 1
    }
}

fn check_var(nvars: usize, var: usize) -> Result<()> {
    if var == 0 || var > nvars {
        return Err(Error::IndexOutOfRange { index: var, dim: nvars });
    }
    Ok(())
}

fn check_same(expected: usize, found: usize) -> Result<()> {
    if expected != found {
        return Err(Error::DimensionMismatch { expected, found });
    }
    Ok(())
}

fn combine_sorted(raw: Vec<(Monomial, Rational)>) -> Vec<(Monomial, Rational)> {
    let mut out: Vec<(Monomial, Rational)> = Vec::with_capacity(raw.len());
    for (m, c) in raw {
        match out.last_mut() {
            Some((lm, lc)) if *lm == m => *lc = &*lc + &c,
            _ => {
                if let Some((_, lc)) = out.last() {
                    if lc.is_zero() {
                        out.pop();
                    }
                }
                out.push((m, c));
            }
        }
    }
    if matches!(out.last(), Some((_, c)) if c.is_zero()) {
        out.pop();
    }
    out
}

fn merge(a: &Polynomial, b: &Polynomial, negate_b: bool) -> Polynomial {
    assert_eq!(a.nvars, b.nvars, "polynomial dimension mismatch");
    let mut out = Vec::with_capacity(a.terms.len() + b.terms.len());
    let (mut i, mut j) = (0, 0);
    let nb = |c: &Rational| if negate_b { -c } else { c.clone() };
    while i < a.terms.len() && j < b.terms.len() {
        let (ma, ca) = &a.terms[i];
        let (mb, cb) = &b.terms[j];
        match ma.cmp(mb) {
            std::cmp::Ordering::Less => {
                out.push((ma.clone(), ca.clone()));
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                out.push((mb.clone(), nb(cb)));
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                let s = if negate_b { ca - cb } else { ca + cb };
                if !s.is_zero() {
                    out.push((ma.clone(), s));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend(a.terms[i..].iter().cloned());
    out.extend(b.terms[j..].iter().map(|(m, c)| (m.clone(), nb(c))));
    Polynomial {
        nvars: a.nvars,
        terms: out,
    }
}

impl<'a> Add<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    /// Panics if the variable counts differ; see [`Polynomial::try_add`].
    fn add(self, rhs: &Polynomial) -> Polynomial {
        if rhs.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return rhs.clone();
        }
        merge(self, rhs, false)
    }
}

impl<'a> Sub<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        if rhs.is_zero() {
            return self.clone();
        }
        merge(self, rhs, true)
    }
}

impl<'a> Mul<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    /// Panics if the variable counts differ; see [`Polynomial::try_mul`].
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.nvars, rhs.nvars, "polynomial dimension mismatch");
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero(self.nvars);
        }
        if self.terms.len() == 1 && self.terms[0].0.is_one() {
            return rhs.scale(&self.terms[0].1);
        }
        if rhs.terms.len() == 1 && rhs.terms[0].0.is_one() {
            return self.scale(&rhs.terms[0].1);
        }
        let mut raw = Vec::with_capacity(self.terms.len() * rhs.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                raw.push((ma.mul(mb), ca * cb));
            }
        }
        raw.sort_by(|a, b| a.0.cmp(&b.0));
        Polynomial {
            nvars: self.nvars,
            terms: combine_sorted(raw),
        }
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr<Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $m(self, rhs: Polynomial) -> Polynomial { (&self).$m(&rhs) }
        }
        impl<'a> $tr<&'a Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $m(self, rhs: &Polynomial) -> Polynomial { (&self).$m(rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl AddAssign<&Polynomial> for Polynomial {
    fn add_assign(&mut self, rhs: &Polynomial) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&Polynomial> for Polynomial {
    fn sub_assign(&mut self, rhs: &Polynomial) {
        *self = &*self - rhs;
    }
}

impl fmt::Display for Polynomial {
    /// Canonical text: terms in descending graded-lex order, e.g. `x1^2 - 3/2*x2 + 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            match (k, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if m.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial[{}]({})", self.nvars, self)
    }
}
