//! Skew-symmetric tensors with polynomial coefficients on a single chart.
//!
//! Forms and multivectors share one representation, [`SkewTensor`], tagged by
//! a zero-sized kind marker so the two cannot be mixed by accident. Components
//! are stored only on strictly increasing multi-indices; permutation signs are
//! produced when tensors are assembled and never stored.
//!
//! Contraction of a multivector by a form is fixed by the adjunction
//! `<γ, ι_α P> = <α ∧ γ, P>` for every form `γ`. With this convention
//! `#(df1 ∧ … ∧ df_{n-1})(f_n) = Λ(df1, …, df_n)` holds with no extra sign.

mod calculus;
mod multi_index;
mod text;

use std::collections::BTreeMap;
use std::fmt;
use std::marker::PhantomData;
use std::ops::{Add, Neg, Sub};

pub use calculus::{apply_vec, contract_form, contract_vec, ext_d, lie_form, lie_mv, pair, vector_bracket, wedge};
pub(crate) use multi_index::inversions;
pub use multi_index::MultiIndex;

use crate::error::{Error, Result};
use crate::poly::parse::BladeKind;
use crate::poly::{Polynomial, Rational};

/// Marker for differential forms (`dx1^dx2`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Covariant;

/// Marker for multivector fields (`d1^d2`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Contravariant;

pub trait TensorKind: Copy + Eq + Default + Send + Sync + fmt::Debug + 'static {
    /// Text prefix of a basis blade, e.g. `dx` in `dx3`.
    const PREFIX: &'static str;
    #[doc(hidden)]
    const BLADE: BladeKind;
}

impl TensorKind for Covariant {
    const PREFIX: &'static str = "dx";
    const BLADE: BladeKind = BladeKind::Covector;
}

impl TensorKind for Contravariant {
    const PREFIX: &'static str = "d";
    const BLADE: BladeKind = BladeKind::Vector;
}

/// A homogeneous skew-symmetric tensor of fixed degree on an `m`-dimensional chart.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SkewTensor<K: TensorKind> {
    dim: usize,
    degree: usize,
    comps: BTreeMap<MultiIndex, Polynomial>,
    kind: PhantomData<K>,
}

/// A differential form with polynomial coefficients.
pub type Form = SkewTensor<Covariant>;
/// A multivector field with polynomial coefficients; degree 1 is a vector field.
pub type Multivector = SkewTensor<Contravariant>;

impl<K: TensorKind> SkewTensor<K> {
    /// The zero tensor of the given degree. Degrees above `dim` are allowed
    /// only for this exact zero (e.g. the result of an overflowing wedge).
    pub fn zero(dim: usize, degree: usize) -> Self {
        assert!(
            dim <= MultiIndex::MAX_DIM,
            "chart dimension exceeds {}",
            MultiIndex::MAX_DIM
        );
        SkewTensor {
            dim,
            degree,
            comps: BTreeMap::new(),
            kind: PhantomData,
        }
    }

    /// A degree-0 tensor holding a function.
    pub fn scalar(f: Polynomial) -> Self {
        let mut t = Self::zero(f.nvars(), 0);
        t.add_component(MultiIndex::EMPTY, f);
        t
    }

    /// The basis blade on 1-based, strictly increasing chart indices.
    pub fn basis(dim: usize, indices: &[usize]) -> Result<Self> {
        let idx = MultiIndex::new(indices, dim)?;
        Ok(Self::monomial(dim, idx, Polynomial::one(dim)))
    }

    pub fn monomial(dim: usize, idx: MultiIndex, coeff: Polynomial) -> Self {
        let mut t = Self::zero(dim, idx.degree());
        t.add_component(idx, coeff);
        t
    }

    /// Builds a tensor from increasing multi-indices, validating every entry.
    pub fn from_components(
        dim: usize,
        degree: usize,
        comps: impl IntoIterator<Item = (MultiIndex, Polynomial)>,
    ) -> Result<Self> {
        if degree > dim {
            return Err(Error::DegreeMismatch {
                expected: dim,
                found: degree,
            });
        }
        let mut t = Self::zero(dim, degree);
        for (idx, p) in comps {
            if idx.degree() != degree {
                return Err(Error::DegreeMismatch {
                    expected: degree,
                    found: idx.degree(),
                });
            }
            if idx.max_index().is_some_and(|i| i > dim) {
                return Err(Error::IndexOutOfRange {
                    index: idx.max_index().unwrap(),
                    dim,
                });
            }
            if p.nvars() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: p.nvars(),
                });
            }
            t.add_component(idx, p);
        }
        Ok(t)
    }

    /// Parses the tensor text grammar, e.g. `x3*d1^d2 - d2^d3` or `dx1^dx4`.
    pub fn parse(text: &str, dim: usize, degree: usize) -> Result<Self> {
        text::parse_tensor(text, dim, degree)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.comps.is_empty()
    }

    pub fn component(&self, idx: MultiIndex) -> Polynomial {
        self.comps
            .get(&idx)
            .cloned()
            .unwrap_or_else(|| Polynomial::zero(self.dim))
    }

    /// Nonzero components in increasing multi-index order.
    pub fn components(&self) -> impl Iterator<Item = (MultiIndex, &Polynomial)> {
        self.comps.iter().map(|(k, v)| (*k, v))
    }

    pub fn num_components(&self) -> usize {
        self.comps.len()
    }

    /// The coefficient of a degree-0 tensor.
    pub fn to_scalar(&self) -> Option<Polynomial> {
        (self.degree == 0).then(|| self.component(MultiIndex::EMPTY))
    }

    pub(crate) fn add_component(&mut self, idx: MultiIndex, p: Polynomial) {
        debug_assert_eq!(idx.degree(), self.degree);
        if p.is_zero() {
            return;
        }
        match self.comps.entry(idx) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(p);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get() + &p;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub(crate) fn add_signed(&mut self, idx: MultiIndex, p: Polynomial, negative: bool) {
        self.add_component(idx, if negative { -p } else { p });
    }

    /// Multiplies every component by the function `f`.
    pub fn scale(&self, f: &Polynomial) -> Self {
        assert_eq!(f.nvars(), self.dim, "chart dimension mismatch");
        if f.is_zero() {
            return Self::zero(self.dim, self.degree);
        }
        let mut out = Self::zero(self.dim, self.degree);
        for (k, v) in &self.comps {
            out.add_component(*k, v * f);
        }
        out
    }

    pub fn scale_rational(&self, c: &Rational) -> Self {
        let mut out = Self::zero(self.dim, self.degree);
        for (k, v) in &self.comps {
            out.add_component(*k, v.scale(c));
        }
        out
    }

    /// Graded-skew wedge product. A result degree above the chart dimension
    /// yields the exact zero tensor of that nominal degree.
    ///
    /// Panics if the charts differ; [`wedge`] is the checked form.
    pub fn wedge(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim, "chart dimension mismatch");
        let mut out = Self::zero(self.dim, self.degree + other.degree);
        if out.degree > self.dim {
            return out;
        }
        for (a, pa) in &self.comps {
            for (b, pb) in &other.comps {
                if a.bits() & b.bits() != 0 {
                    continue;
                }
                let neg = inversions(a.bits(), b.bits()) % 2 == 1;
                out.add_signed(a.union(*b), pa * pb, neg);
            }
        }
        out
    }

    fn check_compatible(&self, other: &Self) {
        assert_eq!(self.dim, other.dim, "chart dimension mismatch");
        assert_eq!(self.degree, other.degree, "tensor degree mismatch");
    }
}

impl<'a, K: TensorKind> Add<&'a SkewTensor<K>> for &'a SkewTensor<K> {
    type Output = SkewTensor<K>;
    /// Panics on chart or degree mismatch.
    fn add(self, rhs: &SkewTensor<K>) -> SkewTensor<K> {
        self.check_compatible(rhs);
        let mut out = self.clone();
        for (k, v) in &rhs.comps {
            out.add_component(*k, v.clone());
        }
        out
    }
}

impl<'a, K: TensorKind> Sub<&'a SkewTensor<K>> for &'a SkewTensor<K> {
    type Output = SkewTensor<K>;
    fn sub(self, rhs: &SkewTensor<K>) -> SkewTensor<K> {
        self.check_compatible(rhs);
        let mut out = self.clone();
        for (k, v) in &rhs.comps {
            out.add_component(*k, -v);
        }
        out
    }
}

impl<K: TensorKind> Add for SkewTensor<K> {
    type Output = SkewTensor<K>;
    fn add(self, rhs: SkewTensor<K>) -> SkewTensor<K> {
        &self + &rhs
    }
}

impl<K: TensorKind> Sub for SkewTensor<K> {
    type Output = SkewTensor<K>;
    fn sub(self, rhs: SkewTensor<K>) -> SkewTensor<K> {
        &self - &rhs
    }
}

impl<K: TensorKind> Neg for &SkewTensor<K> {
    type Output = SkewTensor<K>;
    fn neg(self) -> SkewTensor<K> {
        SkewTensor {
            dim: self.dim,
            degree: self.degree,
            comps: self.comps.iter().map(|(k, v)| (*k, -v)).collect(),
            kind: PhantomData,
        }
    }
}

impl<K: TensorKind> Neg for SkewTensor<K> {
    type Output = SkewTensor<K>;
    fn neg(self) -> SkewTensor<K> {
        -&self
    }
}

impl<K: TensorKind> fmt::Display for SkewTensor<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        text::write_tensor(self, f)
    }
}

impl<K: TensorKind> fmt::Debug for SkewTensor<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[m={}, k={}]({})", K::PREFIX, self.dim, self.degree, self)
    }
}

impl Multivector {
    /// The components `X^1..X^m` of a vector field, zero-based.
    pub(crate) fn vector_components(&self) -> Vec<Polynomial> {
        debug_assert_eq!(self.degree, 1);
        (0..self.dim)
            .map(|i| self.component(MultiIndex::singleton(i)))
            .collect()
    }

    /// `Σ_j ∂X^j/∂x^j` for a vector field.
    pub fn divergence(&self) -> Polynomial {
        assert_eq!(self.degree, 1, "divergence needs a vector field");
        let mut acc = Polynomial::zero(self.dim);
        for (idx, c) in &self.comps {
            acc += &c.diff0(idx.lowest().unwrap());
        }
        acc
    }
}

impl Form {
    /// `df` for a function `f`.
    pub fn differential(f: &Polynomial) -> Form {
        let dim = f.nvars();
        let mut out = Form::zero(dim, 1);
        for j in 0..dim {
            out.add_component(MultiIndex::singleton(j), f.diff0(j));
        }
        out
    }
}
