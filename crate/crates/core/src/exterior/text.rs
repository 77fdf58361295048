//! Canonical text for tensors: `x3*d1^d2 - d2^d3`, `(x1 + x2)*dx1`, `0`.

use std::fmt;

use super::{inversions, MultiIndex, SkewTensor, TensorKind};
use crate::error::{Error, Result};
use crate::poly::parse::parse_combination;

pub(super) fn write_tensor<K: TensorKind>(t: &SkewTensor<K>, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if t.is_zero() {
        return f.write_str("0");
    }
    for (n, (idx, c)) in t.comps.iter().enumerate() {
        let blade = blade_text::<K>(*idx);
        let negative = c.is_single_term() && c.leading().is_some_and(|(_, k)| k.is_negative());
        let shown = if negative { -c } else { c.clone() };
        match (n, negative) {
            (0, true) => f.write_str("-")?,
            (0, false) => {}
            (_, true) => f.write_str(" - ")?,
            (_, false) => f.write_str(" + ")?,
        }
        if blade.is_empty() {
            if c.is_single_term() {
                write!(f, "{shown}")?;
            } else {
                write!(f, "({shown})")?;
            }
        } else if shown.is_constant() && shown.leading().is_some_and(|(_, k)| k.is_one()) {
            f.write_str(&blade)?;
        } else if c.is_single_term() {
            write!(f, "{shown}*{blade}")?;
        } else {
            write!(f, "({shown})*{blade}")?;
        }
    }
    Ok(())
}

fn blade_text<K: TensorKind>(idx: MultiIndex) -> String {
    idx.indices()
        .iter()
        .map(|i| format!("{}{}", K::PREFIX, i))
        .collect::<Vec<_>>()
        .join("^")
}

pub(super) fn parse_tensor<K: TensorKind>(text: &str, dim: usize, degree: usize) -> Result<SkewTensor<K>> {
    if degree > dim {
        return Err(Error::DegreeMismatch {
            expected: dim,
            found: degree,
        });
    }
    let combo = parse_combination(text, dim)?;
    if let Some(kind) = combo.kind {
        if kind != K::BLADE {
            let want = if K::PREFIX == "dx" {
                "form (dx)"
            } else {
                "multivector (d)"
            };
            return Err(Error::Parse {
                position: 0,
                message: format!("expected {want} blades"),
            });
        }
    }
    let mut out = SkewTensor::<K>::zero(dim, degree);
    for (coeff, word) in combo.terms {
        if coeff.is_zero() {
            continue;
        }
        if word.len() != degree {
            return Err(Error::Parse {
                position: 0,
                message: format!("term of degree {} in a degree-{degree} tensor", word.len()),
            });
        }
        // sort the blade word, tracking the permutation sign
        let mut bits = 0u64;
        let mut negative = false;
        let mut repeated = false;
        for &i in &word {
            let b = 1u64 << (i - 1);
            if bits & b != 0 {
                repeated = true;
                break;
            }
            negative ^= inversions(bits, b) % 2 == 1;
            bits |= b;
        }
        if repeated {
            continue;
        }
        out.add_signed(MultiIndex::from_bits(bits), coeff, negative);
    }
    Ok(out)
}
