//! Low-degree Leibniz algebroid cohomology: the coboundaries `∂⁰`, `∂¹`, the
//! modular `(n-1)`-vector and its class.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::algebroid::{require_order, Left};
use crate::error::{Error, Result};
use crate::exterior::{Form, MultiIndex, Multivector};
use crate::linsolve;
use crate::nambu::NambuStructure;
use crate::poly::{monomials_up_to, Monomial, Polynomial, Rational};
use crate::sweep::{
    combinations, constant_form_basis, form_basis, jet_basis, label, sweep_rows, CheckReport, Counterexample,
    JetBasisConfig,
};

/// The volume form `c e^p dx^1 ∧ ... ∧ dx^m` with `c != 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VolumeForm {
    constant: Rational,
    exponent: Polynomial,
}

impl VolumeForm {
    pub fn new(constant: Rational, exponent: Polynomial) -> Result<Self> {
        if constant.is_zero() {
            return Err(Error::ZeroVolumeConstant);
        }
        Ok(VolumeForm { constant, exponent })
    }

    /// `dx^1 ∧ ... ∧ dx^m`.
    pub fn standard(dim: usize) -> Self {
        VolumeForm {
            constant: Rational::ONE,
            exponent: Polynomial::zero(dim),
        }
    }

    pub fn dim(&self) -> usize {
        self.exponent.nvars()
    }

    pub fn constant(&self) -> &Rational {
        &self.constant
    }

    pub fn exponent(&self) -> &Polynomial {
        &self.exponent
    }

    /// `e^q ν`.
    pub fn rescaled(&self, q: &Polynomial) -> Result<Self> {
        Ok(VolumeForm {
            constant: self.constant.clone(),
            exponent: self.exponent.try_add(q)?,
        })
    }
}

/// The volume structure `Λ_ν = (1/c) ∂_1 ∧ ... ∧ ∂_m` of a constant volume
/// form. Non-constant densities would leave the polynomial ring.
pub fn volume_structure(nu: &VolumeForm) -> Result<NambuStructure> {
    if !nu.exponent.is_zero() {
        return Err(Error::Invalid {
            location: "volume.exponent".into(),
            message: "a volume structure needs exponent 0".into(),
        });
    }
    let m = nu.dim();
    let all = MultiIndex::all(m, m)[0];
    let coeff = Polynomial::constant(m, nu.constant.recip().expect("nonzero constant"));
    NambuStructure::new(Multivector::monomial(m, all, coeff))
}

/// A `C^∞`-linear 1-cochain `α ↦ <α, W>` on `(n-1)`-forms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TensorCochain1 {
    w: Multivector,
}

impl TensorCochain1 {
    pub fn new(w: Multivector) -> Self {
        TensorCochain1 { w }
    }

    pub fn multivector(&self) -> &Multivector {
        &self.w
    }

    pub fn eval(&self, alpha: &Form) -> Result<Polynomial> {
        crate::exterior::pair(alpha, &self.w)
    }
}

fn check_volume(s: &NambuStructure, nu: &VolumeForm) -> Result<()> {
    if nu.dim() != s.dim() {
        return Err(Error::DimensionMismatch {
            expected: s.dim(),
            found: nu.dim(),
        });
    }
    Ok(())
}

/// `M_ν^I = div(X_{x^I}) + X_{x^I}(p)` over increasing `I` of length `n-1`.
pub fn modular_mv(s: &NambuStructure, nu: &VolumeForm) -> Result<Multivector> {
    require_order(s)?;
    check_volume(s, nu)?;
    let (m, k) = (s.dim(), s.order() - 1);
    let mut out = Multivector::zero(m, k);
    for idx in MultiIndex::all(m, k) {
        let x = Form::monomial(m, idx, Polynomial::one(m)).contract(s.lambda());
        let c = &x.divergence() + &x.apply(&nu.exponent);
        out.add_component(idx, c);
    }
    Ok(out)
}

pub fn modular_cochain(s: &NambuStructure, nu: &VolumeForm) -> Result<TensorCochain1> {
    Ok(TensorCochain1::new(modular_mv(s, nu)?))
}

/// `∂⁰f`, the cochain `α ↦ #α(f)`, represented by `(-1)^{n-1} ι_{df} Λ`.
pub fn cobound0(s: &NambuStructure, f: &Polynomial) -> Result<TensorCochain1> {
    s.check_functions(std::slice::from_ref(f), 1)?;
    Ok(TensorCochain1::new(cobound0_mv(s, f)))
}

fn cobound0_mv(s: &NambuStructure, f: &Polynomial) -> Multivector {
    let w = Form::differential(f).contract(s.lambda());
    if s.order().is_multiple_of(2) {
        -w
    } else {
        w
    }
}

/// `(∂¹c)(α, β) = #α(c(β)) - #β(c(α)) - c(⟦α,β⟧)`.
pub fn cobound1_eval(s: &NambuStructure, c: &TensorCochain1, alpha: &Form, beta: &Form) -> Result<Polynomial> {
    require_order(s)?;
    s.check_form(alpha, s.order() - 1)?;
    s.check_form(beta, s.order() - 1)?;
    if c.w.dim() != s.dim() || c.w.degree() != s.order() - 1 {
        return Err(Error::DegreeMismatch {
            expected: s.order() - 1,
            found: c.w.degree(),
        });
    }
    let la = Left::new(s, alpha);
    let lb = Left::new(s, beta);
    Ok(cobound1_prepared(c, &la, &lb, alpha, beta))
}

fn cobound1_prepared(c: &TensorCochain1, la: &Left, lb: &Left, alpha: &Form, beta: &Form) -> Polynomial {
    let t1 = la.sharp().apply(&beta.pair(&c.w));
    let t2 = lb.sharp().apply(&alpha.pair(&c.w));
    let t3 = la.bracket(beta).pair(&c.w);
    &(&t1 - &t2) - &t3
}

/// `div(#α) + #α(p) = <α, M_ν> + (-1)^{n-1} <dα, Λ>` over jet-basis `α`.
pub fn verify_lsv(s: &NambuStructure, nu: &VolumeForm, cfg: &JetBasisConfig) -> Result<CheckReport> {
    let modular = modular_mv(s, nu)?;
    let forms = form_basis(s.dim(), s.order() - 1, cfg.max_degree());
    Ok(sweep_rows("lsv", cfg.execution(), forms.len(), 1, |a| {
        let alpha = &forms[a];
        let x = alpha.contract(s.lambda());
        let lhs = &x.divergence() + &x.apply(&nu.exponent);
        let mut closed = alpha.d().pair(s.lambda());
        if s.order().is_multiple_of(2) {
            closed = -closed;
        }
        let rhs = &alpha.pair(&modular) + &closed;
        let r = &lhs - &rhs;
        (!r.is_zero()).then(|| {
            let cx = Counterexample {
                inputs: vec![("alpha".into(), alpha.to_string())],
                residual: r.to_string(),
            };
            (0, cx)
        })
    }))
}

/// Sweeps `(∂¹c)(α, β) = 0`. The value is `C^∞`-linear in `β`, so reduced
/// mode takes `β = dx^J`.
fn cocycle_sweep(
    s: &NambuStructure,
    name: &str,
    c: &TensorCochain1,
    cfg: &JetBasisConfig,
    extra: &[(String, String)],
) -> CheckReport {
    let (m, k) = (s.dim(), s.order() - 1);
    let alphas = form_basis(m, k, cfg.max_degree());
    let betas = if cfg.is_exhaustive() {
        alphas.clone()
    } else {
        constant_form_basis(m, k)
    };
    let beta_lefts: Vec<Left> = betas.iter().map(|b| Left::new(s, b)).collect();
    sweep_rows(name, cfg.execution(), alphas.len(), betas.len(), |a| {
        let la = Left::new(s, &alphas[a]);
        for (b, beta) in betas.iter().enumerate() {
            let r = cobound1_prepared(c, &la, &beta_lefts[b], &alphas[a], beta);
            if !r.is_zero() {
                let mut inputs = extra.to_vec();
                inputs.push(("alpha".into(), alphas[a].to_string()));
                inputs.push(("beta".into(), beta.to_string()));
                return Some((
                    b,
                    Counterexample {
                        inputs,
                        residual: r.to_string(),
                    },
                ));
            }
        }
        None
    })
}

/// The modular cochain is a 1-cocycle.
pub fn verify_modular_cocycle(s: &NambuStructure, nu: &VolumeForm, cfg: &JetBasisConfig) -> Result<CheckReport> {
    let c = modular_cochain(s, nu)?;
    Ok(cocycle_sweep(s, "modular-cocycle", &c, cfg, &[]))
}

/// `∂¹(∂⁰f) = 0` for every jet-basis `f`.
pub fn verify_coboundary_square(s: &NambuStructure, cfg: &JetBasisConfig) -> Result<CheckReport> {
    const NAME: &str = "coboundary-square";
    require_order(s)?;
    let mut done = 0;
    for f in jet_basis(s.dim(), cfg.max_degree()) {
        let c = TensorCochain1::new(cobound0_mv(s, &f));
        let mut report = cocycle_sweep(s, NAME, &c, cfg, &[("f".into(), f.to_string())]);
        report.items_checked += done;
        if !report.passed() {
            return Ok(report);
        }
        done = report.items_checked;
    }
    Ok(CheckReport::pass(NAME, done))
}

/// `M(f1..f_{n-1})` computed as `div(X_f) + X_f(p)` equals `<df1 ∧ .. , M_ν>`
/// for increasing jet-basis tuples.
pub fn verify_modular_tensoriality(s: &NambuStructure, nu: &VolumeForm, cfg: &JetBasisConfig) -> Result<CheckReport> {
    let modular = modular_mv(s, nu)?;
    let funcs = jet_basis(s.dim(), cfg.max_degree());
    let tuples = combinations(funcs.len(), s.order() - 1);
    Ok(sweep_rows(
        "modular-tensoriality",
        cfg.execution(),
        tuples.len(),
        1,
        |i| {
            let fs: Vec<Polynomial> = tuples[i].iter().map(|&q| funcs[q].clone()).collect();
            let x = s.hamiltonian_unchecked(&fs);
            let lhs = &x.divergence() + &x.apply(&nu.exponent);
            let rhs = crate::nambu::wedge_of_differentials(s.dim(), &fs).pair(&modular);
            let r = &lhs - &rhs;
            (!r.is_zero()).then(|| {
                let inputs = fs.iter().enumerate().map(|(q, f)| label("f", q + 1, f)).collect();
                (
                    0,
                    Counterexample {
                        inputs,
                        residual: r.to_string(),
                    },
                )
            })
        },
    ))
}

/// `M_{e^q ν} = M_ν + ∂⁰q`, compared componentwise.
pub fn verify_volume_change(
    s: &NambuStructure,
    nu: &VolumeForm,
    q: &Polynomial,
    _cfg: &JetBasisConfig,
) -> Result<CheckReport> {
    let shifted = modular_mv(s, &nu.rescaled(q)?)?;
    let expected = &modular_mv(s, nu)? + cobound0(s, q)?.multivector();
    let r = &shifted - &expected;
    Ok(if r.is_zero() {
        CheckReport::pass("volume-change", 1)
    } else {
        let cx = Counterexample {
            inputs: vec![
                ("q".into(), q.to_string()),
                ("shifted".into(), shifted.to_string()),
                ("expected".into(), expected.to_string()),
            ],
            residual: r.to_string(),
        };
        CheckReport::fail("volume-change", 1, cx)
    })
}

/// A component equation `Σ_j a_j ∂f/∂x^j = M^I` that no smooth `f` solves:
/// every `a_j` vanishes on `x^k = 0` while `M^I` does not.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Obstruction {
    /// 1-based component multi-index `I`.
    pub component: Vec<usize>,
    /// 1-based variable `k`; `None` when every `a_j` is zero.
    pub variable: Option<usize>,
    pub equation: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WitnessReport {
    pub feasible: bool,
    pub witness: Option<Polynomial>,
    pub search_degree: u32,
    /// Present when the target is out of reach at every polynomial degree
    /// and for every smooth `f`.
    pub obstruction: Option<Obstruction>,
}

impl WitnessReport {
    pub fn nontrivial_within_polynomials(&self) -> bool {
        self.obstruction.is_some()
    }
}

/// Searches `f` with `deg f <= search_degree` and `∂⁰f = M_ν`.
pub fn exactness_witness(s: &NambuStructure, nu: &VolumeForm, search_degree: u32) -> Result<WitnessReport> {
    let target = modular_mv(s, nu)?;
    coboundary_witness(s, &target, search_degree)
}

/// Searches `f` with `deg f <= search_degree` and `∂⁰f = target`.
pub fn coboundary_witness(s: &NambuStructure, target: &Multivector, search_degree: u32) -> Result<WitnessReport> {
    require_order(s)?;
    let (m, k) = (s.dim(), s.order() - 1);
    if target.dim() != m || target.degree() != k {
        return Err(Error::DegreeMismatch {
            expected: k,
            found: target.degree(),
        });
    }
    let obstruction = find_obstruction(s, target);

    let unknowns = monomials_up_to(m, search_degree);
    let mut rows: BTreeMap<(MultiIndex, Monomial), Vec<(usize, Rational)>> = BTreeMap::new();
    for (col, mono) in unknowns.iter().enumerate() {
        let image = cobound0_mv(s, &Polynomial::monomial(mono.clone(), Rational::ONE));
        for (idx, c) in image.components() {
            for (mu, v) in c.terms() {
                rows.entry((idx, mu.clone())).or_default().push((col, v.clone()));
            }
        }
    }
    for (idx, c) in target.components() {
        for (mu, _) in c.terms() {
            rows.entry((idx, mu.clone())).or_default();
        }
    }
    let rhs: Vec<Rational> = rows
        .keys()
        .map(|(idx, mu)| target.component(*idx).coefficient(mu))
        .collect();
    let matrix: Vec<Vec<(usize, Rational)>> = rows.into_values().collect();
    let solution = linsolve::solve(&matrix, &rhs, unknowns.len());

    let witness =
        solution.map(|x| Polynomial::from_terms(m, unknowns.into_iter().zip(x).filter(|(_, c)| !c.is_zero())));
    debug_assert!(!(witness.is_some() && obstruction.is_some()));
    Ok(WitnessReport {
        feasible: witness.is_some(),
        witness,
        search_degree,
        obstruction,
    })
}

fn find_obstruction(s: &NambuStructure, target: &Multivector) -> Option<Obstruction> {
    let (m, k) = (s.dim(), s.order() - 1);
    // operator[j] = ∂⁰ applied to x^j, so (∂⁰f)^I = Σ_j operator[j]^I ∂f/∂x^j
    let operator: Vec<Multivector> = (1..=m)
        .map(|j| cobound0_mv(s, &Polynomial::var(m, j).unwrap()))
        .collect();
    for idx in MultiIndex::all(m, k) {
        let rhs = target.component(idx);
        if rhs.is_zero() {
            continue;
        }
        let coeffs: Vec<Polynomial> = operator.iter().map(|w| w.component(idx)).collect();
        let variable = if coeffs.iter().all(Polynomial::is_zero) {
            None
        } else {
            match (0..m).find(|&v| coeffs.iter().all(|a| a.divisible_by_var0(v)) && !rhs.divisible_by_var0(v)) {
                Some(v) => Some(v + 1),
                None => continue,
            }
        };
        return Some(Obstruction {
            component: idx.indices(),
            variable,
            equation: format!("{} = {}", operator_text(&coeffs), rhs),
        });
    }
    None
}

fn operator_text(coeffs: &[Polynomial]) -> String {
    let mut out = String::new();
    for (j, a) in coeffs.iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        let negative = a.is_single_term() && a.leading().is_some_and(|(_, c)| c.is_negative());
        let shown = if negative { -a } else { a.clone() };
        out.push_str(match (out.is_empty(), negative) {
            (true, true) => "-",
            (true, false) => "",
            (false, true) => " - ",
            (false, false) => " + ",
        });
        let unit = shown.is_constant() && shown.leading().is_some_and(|(_, c)| c.is_one());
        if !unit {
            if shown.is_single_term() {
                out.push_str(&format!("{shown}*"));
            } else {
                out.push_str(&format!("({shown})*"));
            }
        }
        out.push_str(&format!("∂f/∂x{}", j + 1));
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}
