//! Jet-basis sweeps: finite exact certification of multi-differential identities.
//!
//! Every identity verified by this crate is multilinear in its functional
//! slots and involves at most two derivatives per slot, with polynomial
//! coefficients. Such an operator vanishes identically iff it vanishes on all
//! monomials of degree `<= 2` in every slot (the span of those monomials is
//! translation invariant, so every 2-jet at every point is reached). The
//! default bound `D = 3` leaves a margin.
//!
//! Sweeps run tuples in a fixed lexicographic order and report the first
//! failing tuple in that order, whichever execution strategy is used.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exterior::{Form, MultiIndex};
use crate::poly::{monomials_up_to, Polynomial, Rational};

/// How a sweep distributes its work.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Execution {
    Sequential,
    /// Work-stealing over the outer tuple index. Falls back to sequential
    /// when the crate is built without the `parallel` feature.
    Parallel,
}

impl Default for Execution {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            Execution::Parallel
        } else {
            Execution::Sequential
        }
    }
}

/// Test-basis configuration shared by every verifier.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct JetBasisConfig {
    max_degree: u32,
    exhaustive: bool,
    execution: Execution,
}

impl Default for JetBasisConfig {
    fn default() -> Self {
        JetBasisConfig {
            max_degree: Self::DEFAULT_DEGREE,
            exhaustive: false,
            execution: Execution::default(),
        }
    }
}

impl JetBasisConfig {
    pub const DEFAULT_DEGREE: u32 = 3;

    /// Rejects degrees below 2, which cannot certify second-order identities.
    pub fn new(max_degree: u32) -> Result<Self> {
        if max_degree < 2 {
            return Err(Error::JetDegreeTooSmall(max_degree));
        }
        Ok(JetBasisConfig {
            max_degree,
            ..Default::default()
        })
    }

    /// In exhaustive mode every slot runs over the full jet basis, including
    /// slots in which the residual is known to be `C^∞`-linear. The default
    /// reduced mode sweeps such slots over constant-coefficient basis forms
    /// or coordinate functions only.
    pub fn exhaustive(mut self, on: bool) -> Self {
        self.exhaustive = on;
        self
    }

    pub fn with_execution(mut self, execution: Execution) -> Self {
        self.execution = execution;
        self
    }

    pub fn max_degree(&self) -> u32 {
        self.max_degree
    }

    pub fn is_exhaustive(&self) -> bool {
        self.exhaustive
    }

    pub fn execution(&self) -> Execution {
        self.execution
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

/// A failing input tuple together with its nonzero residual, in canonical text.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    #[serde(serialize_with = "named_pairs")]
    pub inputs: Vec<(String, String)>,
    pub residual: String,
}

fn named_pairs<S: serde::Serializer>(pairs: &[(String, String)], s: S) -> std::result::Result<S::Ok, S::Error> {
    #[derive(Serialize)]
    struct Named<'a> {
        name: &'a str,
        value: &'a str,
    }
    s.collect_seq(pairs.iter().map(|(name, value)| Named { name, value }))
}

/// Outcome of one verifier.
///
/// `items_checked` is the number of tuples up to and including the reported
/// counterexample in sweep order, or the full sweep size on a pass.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub check: String,
    pub verdict: Verdict,
    pub counterexample: Option<Counterexample>,
    pub items_checked: u64,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    pub(crate) fn pass(check: &str, items: u64) -> Self {
        CheckReport {
            check: check.to_string(),
            verdict: Verdict::Pass,
            counterexample: None,
            items_checked: items,
        }
    }

    pub(crate) fn fail(check: &str, items: u64, counterexample: Counterexample) -> Self {
        CheckReport {
            check: check.to_string(),
            verdict: Verdict::Fail,
            counterexample: Some(counterexample),
            items_checked: items,
        }
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = match self.verdict {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
        };
        write!(f, "{}: {} ({} items)", self.check, verdict, self.items_checked)?;
        if let Some(cx) = &self.counterexample {
            write!(f, "\n  counterexample:")?;
            for (name, value) in &cx.inputs {
                write!(f, "\n    {name} = {value}")?;
            }
            write!(f, "\n  residual = {}", cx.residual)?;
        }
        Ok(())
    }
}

/// Runs `row(i)` for `i in 0..rows`; each row checks `row_len` tuples in order
/// and returns the position and counterexample of its first failure.
pub(crate) fn sweep_rows<F>(check: &str, execution: Execution, rows: usize, row_len: usize, row: F) -> CheckReport
where
    F: Fn(usize) -> Option<(usize, Counterexample)> + Sync + Send,
{
    let found = first_some(execution, rows, |i| row(i).map(|(j, cx)| (i, j, cx)));
    match found {
        None => CheckReport::pass(check, (rows * row_len) as u64),
        Some((i, j, cx)) => CheckReport::fail(check, (i * row_len + j + 1) as u64, cx),
    }
}

/// The first `Some` of `f(0..n)` in index order.
pub(crate) fn first_some<T, F>(execution: Execution, n: usize, f: F) -> Option<T>
where
    T: Send,
    F: Fn(usize) -> Option<T> + Sync + Send,
{
    match execution {
        #[cfg(feature = "parallel")]
        Execution::Parallel => {
            use rayon::prelude::*;
            (0..n).into_par_iter().find_map_first(f)
        }
        _ => (0..n).find_map(f),
    }
}

/// Monomials `x^γ` with `|γ| <= max_degree`, as polynomials, in basis order.
pub fn jet_basis(dim: usize, max_degree: u32) -> Vec<Polynomial> {
    monomials_up_to(dim, max_degree)
        .into_iter()
        .map(|m| Polynomial::monomial(m, Rational::ONE))
        .collect()
}

/// Coordinate functions `x1..xm`.
pub fn coordinate_basis(dim: usize) -> Vec<Polynomial> {
    (1..=dim).map(|i| Polynomial::var(dim, i).unwrap()).collect()
}

/// Forms `x^γ dx^I` with `|γ| <= max_degree` and `|I| = degree`.
pub fn form_basis(dim: usize, degree: usize, max_degree: u32) -> Vec<Form> {
    let blades = MultiIndex::all(dim, degree);
    jet_basis(dim, max_degree)
        .into_iter()
        .flat_map(|g| blades.iter().map(move |&i| Form::monomial(dim, i, g.clone())))
        .collect()
}

/// Constant-coefficient basis forms `dx^I`.
pub fn constant_form_basis(dim: usize, degree: usize) -> Vec<Form> {
    MultiIndex::all(dim, degree)
        .into_iter()
        .map(|i| Form::monomial(dim, i, Polynomial::one(dim)))
        .collect()
}

/// Increasing `k`-subsets of `0..n`, lexicographic.
pub(crate) fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut cur: Vec<usize> = (0..k).collect();
    loop {
        out.push(cur.clone());
        let Some(p) = (0..k).rev().find(|&p| cur[p] < n - k + p) else {
            return out;
        };
        cur[p] += 1;
        for q in p + 1..k {
            cur[q] = cur[q - 1] + 1;
        }
    }
}

pub(crate) fn label(prefix: &str, i: usize, value: impl fmt::Display) -> (String, String) {
    (format!("{prefix}{i}"), value.to_string())
}
