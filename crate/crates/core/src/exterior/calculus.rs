//! Contractions, exterior derivative and Lie derivatives.
//!
//! The inherent methods are unchecked and panic on chart mismatch; the free
//! functions validate degrees and charts and report an [`Error`].

use super::{inversions, Form, MultiIndex, Multivector, SkewTensor, TensorKind};
use crate::error::{Error, Result};
use crate::poly::Polynomial;

impl Form {
    /// Canonical pairing `Σ_I ω_I P^I` with `<dx^I, ∂_J> = δ_IJ`.
    pub fn pair(&self, p: &Multivector) -> Polynomial {
        assert_eq!(self.dim, p.dim, "chart dimension mismatch");
        assert_eq!(self.degree, p.degree, "pairing needs equal degrees");
        let mut acc = Polynomial::zero(self.dim);
        // iterate the sparser side
        if self.comps.len() <= p.comps.len() {
            for (i, w) in &self.comps {
                if let Some(c) = p.comps.get(i) {
                    acc += &(w * c);
                }
            }
        } else {
            for (i, c) in &p.comps {
                if let Some(w) = self.comps.get(i) {
                    acc += &(w * c);
                }
            }
        }
        acc
    }

    /// `ι_α P`, the multivector with `<γ, ι_α P> = <α ∧ γ, P>` for all `γ`.
    pub fn contract(&self, p: &Multivector) -> Multivector {
        assert_eq!(self.dim, p.dim, "chart dimension mismatch");
        assert!(self.degree <= p.degree, "contraction degree underflow");
        let mut out = Multivector::zero(self.dim, p.degree - self.degree);
        for (j, pj) in &p.comps {
            for (i, ai) in &self.comps {
                if !i.is_subset_of(*j) {
                    continue;
                }
                let k = j.minus(*i);
                let neg = inversions(i.bits(), k.bits()) % 2 == 1;
                out.add_signed(k, ai * pj, neg);
            }
        }
        out
    }

    /// Coordinate exterior derivative.
    pub fn d(&self) -> Form {
        let mut out = Form::zero(self.dim, self.degree + 1);
        if out.degree > self.dim {
            return out;
        }
        for (i, w) in &self.comps {
            for j in 0..self.dim {
                if i.contains0(j) {
                    continue;
                }
                let dw = w.diff0(j);
                if dw.is_zero() {
                    continue;
                }
                let neg = inversions(1 << j, i.bits()) % 2 == 1;
                out.add_signed(i.union(MultiIndex::singleton(j)), dw, neg);
            }
        }
        out
    }
}

impl Multivector {
    /// `X(f) = Σ_j X^j ∂f/∂x^j` for a vector field `X`.
    pub fn apply(&self, f: &Polynomial) -> Polynomial {
        assert_eq!(self.degree, 1, "only vector fields act on functions");
        assert_eq!(self.dim, f.nvars(), "chart dimension mismatch");
        let mut acc = Polynomial::zero(self.dim);
        for (j, x) in &self.comps {
            let df = f.diff0(j.lowest().unwrap());
            if !df.is_zero() {
                acc += &(x * &df);
            }
        }
        acc
    }

    /// Interior product `i_X ω`, `(i_X ω)(Y1..Y_{k-1}) = ω(X, Y1..Y_{k-1})`.
    pub fn interior(&self, omega: &Form) -> Form {
        assert_eq!(self.degree, 1, "interior product needs a vector field");
        assert_eq!(self.dim, omega.dim, "chart dimension mismatch");
        assert!(omega.degree >= 1, "interior product of a function");
        let mut out = Form::zero(self.dim, omega.degree - 1);
        for (j, xj) in &self.comps {
            for (i, w) in &omega.comps {
                if !j.is_subset_of(*i) {
                    continue;
                }
                let k = i.minus(*j);
                let neg = inversions(j.bits(), k.bits()) % 2 == 1;
                out.add_signed(k, xj * w, neg);
            }
        }
        out
    }

    /// `L_X ω = i_X dω + d(i_X ω)`.
    pub fn lie_derivative_form(&self, omega: &Form) -> Form {
        let a = self.interior(&omega.d());
        if omega.degree == 0 {
            return a;
        }
        &a + &self.interior(omega).d()
    }

    /// `L_X P` by the component formula
    /// `(L_X P)^{i1..ik} = X(P^{i1..ik}) - Σ_s Σ_j ∂_j X^{i_s} P^{i1..j..ik}`.
    pub fn lie_derivative(&self, p: &Multivector) -> Multivector {
        assert_eq!(self.degree, 1, "Lie derivative along a vector field");
        assert_eq!(self.dim, p.dim, "chart dimension mismatch");
        let dim = self.dim;
        let x = self.vector_components();
        // jac[j][i] = ∂X^i/∂x^j
        let jac: Vec<Vec<Polynomial>> = (0..dim).map(|j| x.iter().map(|xi| xi.diff0(j)).collect()).collect();
        let mut out = Multivector::zero(dim, p.degree);
        for (idx, c) in &p.comps {
            out.add_component(*idx, self.apply(c));
            for s in idx.iter0() {
                let rest = idx.minus(MultiIndex::singleton(s));
                for (i, d) in jac[s].iter().enumerate() {
                    if d.is_zero() || rest.contains0(i) {
                        continue;
                    }
                    let (lo, hi) = if i < s { (i, s) } else { (s, i) };
                    let between = if hi > lo + 1 {
                        ((1u64 << hi) - (1u64 << (lo + 1))) & rest.bits()
                    } else {
                        0
                    };
                    // overall sign: the leading minus, times the re-sort sign
                    let neg = between.count_ones() % 2 == 0;
                    out.add_signed(rest.union(MultiIndex::singleton(i)), d * c, neg);
                }
            }
        }
        out
    }
}

fn same_chart<A: TensorKind, B: TensorKind>(a: &SkewTensor<A>, b: &SkewTensor<B>) -> Result<()> {
    if a.dim != b.dim {
        return Err(Error::DimensionMismatch {
            expected: a.dim,
            found: b.dim,
        });
    }
    Ok(())
}

fn chart_of_fn<K: TensorKind>(t: &SkewTensor<K>, f: &Polynomial) -> Result<()> {
    if t.dim != f.nvars() {
        return Err(Error::DimensionMismatch {
            expected: t.dim,
            found: f.nvars(),
        });
    }
    Ok(())
}

fn vector_field(x: &Multivector) -> Result<()> {
    if x.degree != 1 {
        return Err(Error::DegreeMismatch {
            expected: 1,
            found: x.degree,
        });
    }
    Ok(())
}

/// Checked wedge product.
pub fn wedge<K: TensorKind>(a: &SkewTensor<K>, b: &SkewTensor<K>) -> Result<SkewTensor<K>> {
    same_chart(a, b)?;
    Ok(a.wedge(b))
}

/// Checked canonical pairing of a `k`-form with a `k`-vector.
pub fn pair(omega: &Form, p: &Multivector) -> Result<Polynomial> {
    same_chart(omega, p)?;
    if omega.degree != p.degree {
        return Err(Error::DegreeMismatch {
            expected: p.degree,
            found: omega.degree,
        });
    }
    Ok(omega.pair(p))
}

/// Checked `ι_α P`.
pub fn contract_form(alpha: &Form, p: &Multivector) -> Result<Multivector> {
    same_chart(alpha, p)?;
    if alpha.degree > p.degree {
        return Err(Error::DegreeUnderflow {
            inner: alpha.degree,
            outer: p.degree,
        });
    }
    Ok(alpha.contract(p))
}

/// Checked `i_X ω`.
pub fn contract_vec(x: &Multivector, omega: &Form) -> Result<Form> {
    same_chart(x, omega)?;
    vector_field(x)?;
    if omega.degree == 0 {
        return Err(Error::DegreeUnderflow { inner: 1, outer: 0 });
    }
    Ok(x.interior(omega))
}

pub fn ext_d(omega: &Form) -> Form {
    omega.d()
}

/// Checked `L_X ω` (Cartan formula).
pub fn lie_form(x: &Multivector, omega: &Form) -> Result<Form> {
    same_chart(x, omega)?;
    vector_field(x)?;
    Ok(x.lie_derivative_form(omega))
}

/// Checked `L_X P` for a multivector `P`.
pub fn lie_mv(x: &Multivector, p: &Multivector) -> Result<Multivector> {
    same_chart(x, p)?;
    vector_field(x)?;
    Ok(x.lie_derivative(p))
}

/// Lie bracket `[X, Y]` of vector fields.
pub fn vector_bracket(x: &Multivector, y: &Multivector) -> Result<Multivector> {
    vector_field(y)?;
    lie_mv(x, y)
}

/// Checked `X(f)`.
pub fn apply_vec(x: &Multivector, f: &Polynomial) -> Result<Polynomial> {
    vector_field(x)?;
    chart_of_fn(x, f)?;
    Ok(x.apply(f))
}
