//! Nambu-Poisson structures: the n-bracket, the `#` map, Hamiltonian fields,
//! and verification of the fundamental identity.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exterior::{inversions, Form, MultiIndex, Multivector};
use crate::poly::{Polynomial, Rational};
use crate::sweep::{
    combinations, coordinate_basis, jet_basis, label, sweep_rows, CheckReport, Counterexample, JetBasisConfig,
};

/// An `n`-vector `Λ` on an `m`-dimensional chart, `2 <= n <= m`.
///
/// Construction does not assume the fundamental identity; use
/// [`NambuStructure::check_fundamental_identity`] to certify it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NambuStructure {
    lambda: Multivector,
}

/// Outcome of the pointwise Plücker test.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Decomposability {
    Decomposable,
    NotDecomposable,
    /// Order 2: regular points are only defined for `n >= 3`.
    NotApplicable,
}

impl NambuStructure {
    pub fn new(lambda: Multivector) -> Result<Self> {
        let (m, n) = (lambda.dim(), lambda.degree());
        if n < 2 {
            return Err(Error::OrderTooSmall { order: n, min: 2 });
        }
        if n > m {
            return Err(Error::InvalidOrder { order: n, dim: m });
        }
        Ok(NambuStructure { lambda })
    }

    pub fn dim(&self) -> usize {
        self.lambda.dim()
    }

    pub fn order(&self) -> usize {
        self.lambda.degree()
    }

    pub fn lambda(&self) -> &Multivector {
        &self.lambda
    }

    /// `{f1, ..., fn} = Λ(df1, ..., dfn)`.
    pub fn nbracket(&self, fs: &[Polynomial]) -> Result<Polynomial> {
        self.check_functions(fs, self.order())?;
        Ok(wedge_of_differentials(self.dim(), fs).pair(&self.lambda))
    }

    /// `#α = ι_α Λ` for an `(n-1)`-form `α`.
    pub fn sharp(&self, alpha: &Form) -> Result<Multivector> {
        self.check_form(alpha, self.order() - 1)?;
        Ok(alpha.contract(&self.lambda))
    }

    /// `X_{f1...f_{n-1}} = #(df1 ∧ ... ∧ df_{n-1})`.
    pub fn hamiltonian(&self, fs: &[Polynomial]) -> Result<Multivector> {
        self.check_functions(fs, self.order() - 1)?;
        Ok(self.hamiltonian_unchecked(fs))
    }

    pub(crate) fn hamiltonian_unchecked(&self, fs: &[Polynomial]) -> Multivector {
        wedge_of_differentials(self.dim(), fs).contract(&self.lambda)
    }

    pub(crate) fn check_form(&self, alpha: &Form, degree: usize) -> Result<()> {
        if alpha.dim() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: alpha.dim(),
            });
        }
        if alpha.degree() != degree {
            return Err(Error::DegreeMismatch {
                expected: degree,
                found: alpha.degree(),
            });
        }
        Ok(())
    }

    pub(crate) fn check_functions(&self, fs: &[Polynomial], arity: usize) -> Result<()> {
        if fs.len() != arity {
            return Err(Error::ArityMismatch {
                expected: arity,
                found: fs.len(),
            });
        }
        for f in fs {
            if f.nvars() != self.dim() {
                return Err(Error::DimensionMismatch {
                    expected: self.dim(),
                    found: f.nvars(),
                });
            }
        }
        Ok(())
    }

    /// Checks `X_f {g1..gn} = Σ_i {g1, .., X_f(g_i), .., gn}` with `f`
    /// ranging over increasing `(n-1)`-subsets of the jet basis.
    ///
    /// The residual equals `(L_{X_f} Λ)(dg1, ..., dgn)`, which depends on the
    /// `g_i` only through their differentials at each point. Reduced mode
    /// therefore takes the `g_i` from increasing tuples of coordinate
    /// functions; exhaustive mode uses jet-basis subsets for them as well.
    pub fn check_fundamental_identity(&self, cfg: &JetBasisConfig) -> CheckReport {
        const NAME: &str = "fundamental-identity";
        let (m, n) = (self.dim(), self.order());
        let basis = jet_basis(m, cfg.max_degree());
        let g_basis = if cfg.is_exhaustive() {
            basis.clone()
        } else {
            coordinate_basis(m)
        };
        let f_tuples = combinations(basis.len(), n - 1);
        let g_tuples = combinations(g_basis.len(), n);
        let dg: Vec<Form> = g_basis.iter().map(Form::differential).collect();
        let g_brackets: Vec<Polynomial> = g_tuples
            .iter()
            .map(|t| wedge_all(m, t.iter().map(|&k| &dg[k])).pair(&self.lambda))
            .collect();

        sweep_rows(NAME, cfg.execution(), f_tuples.len(), g_tuples.len(), |row| {
            let fs: Vec<Polynomial> = f_tuples[row].iter().map(|&k| basis[k].clone()).collect();
            let xf = self.hamiltonian_unchecked(&fs);
            if xf.is_zero() {
                return None;
            }
            // X_f(g) for every g in the basis, computed once per row
            let moved: Vec<Option<Form>> = g_basis
                .iter()
                .map(|g| {
                    let h = xf.apply(g);
                    (!h.is_zero()).then(|| Form::differential(&h))
                })
                .collect();
            for (j, gt) in g_tuples.iter().enumerate() {
                let lhs = xf.apply(&g_brackets[j]);
                let mut rhs = Polynomial::zero(m);
                for (slot, &k) in gt.iter().enumerate() {
                    let Some(dh) = &moved[k] else { continue };
                    let w = wedge_all(
                        m,
                        gt.iter().enumerate().map(|(s, &q)| if s == slot { dh } else { &dg[q] }),
                    );
                    rhs += &w.pair(&self.lambda);
                }
                let residual = &lhs - &rhs;
                if !residual.is_zero() {
                    let mut inputs: Vec<(String, String)> =
                        fs.iter().enumerate().map(|(i, f)| label("f", i + 1, f)).collect();
                    inputs.extend(gt.iter().enumerate().map(|(i, &k)| label("g", i + 1, &g_basis[k])));
                    return Some((
                        j,
                        Counterexample {
                            inputs,
                            residual: residual.to_string(),
                        },
                    ));
                }
            }
            None
        })
    }

    /// Checks `L_{X_f} Λ = 0` for every increasing `(n-1)`-subset `f` of the
    /// jet basis.
    pub fn check_invariance(&self, cfg: &JetBasisConfig) -> CheckReport {
        const NAME: &str = "invariance";
        let (m, n) = (self.dim(), self.order());
        let basis = jet_basis(m, cfg.max_degree());
        let f_tuples = combinations(basis.len(), n - 1);
        sweep_rows(NAME, cfg.execution(), f_tuples.len(), 1, |row| {
            let fs: Vec<Polynomial> = f_tuples[row].iter().map(|&k| basis[k].clone()).collect();
            let xf = self.hamiltonian_unchecked(&fs);
            let residual = xf.lie_derivative(&self.lambda);
            (!residual.is_zero()).then(|| {
                let inputs = fs.iter().enumerate().map(|(i, f)| label("f", i + 1, f)).collect();
                (
                    0,
                    Counterexample {
                        inputs,
                        residual: residual.to_string(),
                    },
                )
            })
        })
    }

    /// Pointwise Plücker relations for `Λ(point)`:
    /// `Σ_k (-1)^k Λ^{I j_k} Λ^{J \ j_k} = 0` for all `|I| = n-1`, `|J| = n+1`.
    ///
    /// A vanishing `Λ(point)` counts as decomposable.
    pub fn plucker_at(&self, point: &[Rational]) -> Result<Decomposability> {
        let (m, n) = (self.dim(), self.order());
        if point.len() != m {
            return Err(Error::DimensionMismatch {
                expected: m,
                found: point.len(),
            });
        }
        if n < 3 {
            return Ok(Decomposability::NotApplicable);
        }
        let mut value = std::collections::HashMap::new();
        for (idx, c) in self.lambda.components() {
            let v = c.eval(point)?;
            if !v.is_zero() {
                value.insert(idx.bits(), v);
            }
        }
        if value.is_empty() {
            return Ok(Decomposability::Decomposable);
        }
        let at = |bits: u64| value.get(&bits).cloned().unwrap_or(Rational::ZERO);
        for i in MultiIndex::all(m, n - 1) {
            for j in MultiIndex::all(m, n + 1) {
                let mut sum = Rational::ZERO;
                for (k, jk) in j.iter0().enumerate() {
                    if i.contains0(jk) {
                        continue;
                    }
                    let b = 1u64 << jk;
                    let left = at(i.bits() | b);
                    if left.is_zero() {
                        continue;
                    }
                    let right = at(j.bits() & !b);
                    if right.is_zero() {
                        continue;
                    }
                    // Λ^{I j_k} in the unsorted word order `I ++ [j_k]`
                    let neg = (k as u32 + inversions(i.bits(), b)) % 2 == 1;
                    let term = &left * &right;
                    sum = if neg { &sum - &term } else { &sum + &term };
                }
                if !sum.is_zero() {
                    return Ok(Decomposability::NotDecomposable);
                }
            }
        }
        Ok(Decomposability::Decomposable)
    }
}

/// `df1 ∧ ... ∧ dfk`.
pub(crate) fn wedge_of_differentials(dim: usize, fs: &[Polynomial]) -> Form {
    let dfs: Vec<Form> = fs.iter().map(Form::differential).collect();
    wedge_all(dim, dfs.iter())
}

pub(crate) fn wedge_all<'a>(dim: usize, forms: impl Iterator<Item = &'a Form>) -> Form {
    let mut acc = Form::scalar(Polynomial::one(dim));
    for w in forms {
        acc = acc.wedge(w);
    }
    acc
}
