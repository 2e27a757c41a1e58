//! The JSON tensor document accepted by every tensor subcommand.
//!
//! ```json
//! {
//!   "n": 4,
//!   "tensor": {"type": "components", "symmetrize": false,
//!              "entries": [{"i": [1, 2], "j": [1, 2], "value": "1"}]},
//!   "volume": "8/3*pi^2",
//!   "orientation": 1
//! }
//! ```
//!
//! Index pairs may be given in either order; `[2, 1]` means `-e12`.

use std::collections::BTreeMap;

use dforms::models::ModelSpec;
use dforms::rational::{self, ratio, Rational};
use dforms::{CurvatureTensor, DoubleForm, MultiIndex, Orientation, PiScalar};
use serde::{Deserialize, Serialize};

use crate::CliError;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TensorDocument {
    pub n: usize,
    pub tensor: TensorSpec,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub volume: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub orientation: Option<i8>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case", deny_unknown_fields)]
pub enum TensorSpec {
    Components {
        entries: Vec<Entry>,
        #[serde(default)]
        symmetrize: bool,
    },
    ConstantCurvature {
        kappa: String,
    },
    ProductOfSpaceForms {
        dims: Vec<usize>,
        kappas: Vec<String>,
    },
    FubiniStudy {
        c: String,
    },
    ConformallyFlat {
        h: Vec<MatrixEntry>,
    },
    RandomAlgebraic {
        seed: u64,
    },
}

/// `R(e_i, e_j) = value` for index pairs `i`, `j`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Entry {
    pub i: [usize; 2],
    pub j: [usize; 2],
    pub value: String,
}

/// `h_ij = h_ji = value`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatrixEntry {
    pub i: usize,
    pub j: usize,
    pub value: String,
}

fn invalid(at: &str, msg: impl std::fmt::Display) -> CliError {
    CliError::Validation(format!("{at}: {msg}"))
}

fn value(at: &str, s: &str) -> Result<Rational, CliError> {
    rational::parse(s).map_err(|e| invalid(at, e))
}

impl TensorDocument {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        let doc: TensorDocument =
            serde_json::from_str(text).map_err(|e| CliError::Validation(format!("document: {e}")))?;
        doc.volume()?;
        doc.orientation()?;
        Ok(doc)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("documents serialize")
    }

    pub fn volume(&self) -> Result<Option<PiScalar>, CliError> {
        self.volume
            .as_deref()
            .map(|v| v.parse::<PiScalar>().map_err(|e| invalid("volume", e)))
            .transpose()
    }

    pub fn orientation(&self) -> Result<Orientation, CliError> {
        match self.orientation {
            None | Some(1) => Ok(Orientation::Standard),
            Some(-1) => Ok(Orientation::Reversed),
            Some(o) => Err(invalid("orientation", format!("must be 1 or -1, got {o}"))),
        }
    }

    /// The catalog model, when the tensor is not given by components.
    pub fn model(&self) -> Result<Option<ModelSpec>, CliError> {
        let n = self.n;
        let spec = match &self.tensor {
            TensorSpec::Components { .. } => return Ok(None),
            TensorSpec::ConstantCurvature { kappa } => ModelSpec::ConstantCurvature {
                n,
                kappa: value("tensor.kappa", kappa)?,
            },
            TensorSpec::ProductOfSpaceForms { dims, kappas } => {
                if dims.iter().sum::<usize>() != n {
                    return Err(invalid("tensor.dims", format!("block sizes {dims:?} do not sum to n = {n}")));
                }
                let kappas = kappas
                    .iter()
                    .enumerate()
                    .map(|(k, v)| value(&format!("tensor.kappas[{k}]"), v))
                    .collect::<Result<_, _>>()?;
                ModelSpec::ProductOfSpaceForms { dims: dims.clone(), kappas }
            }
            TensorSpec::FubiniStudy { c } => {
                if !n.is_multiple_of(2) {
                    return Err(invalid("n", format!("fubini_study needs even n, got {n}")));
                }
                ModelSpec::FubiniStudy {
                    m: n / 2,
                    c: value("tensor.c", c)?,
                }
            }
            TensorSpec::ConformallyFlat { h } => ModelSpec::ConformallyFlat {
                n,
                h: matrix(n, h)?,
            },
            TensorSpec::RandomAlgebraic { seed } => ModelSpec::RandomAlgebraic { n, seed: *seed },
        };
        Ok(Some(spec))
    }

    /// Short human description of the tensor source.
    pub fn subject(&self) -> String {
        match self.model() {
            Ok(Some(m)) => m.to_string(),
            _ => match &self.tensor {
                TensorSpec::Components { entries, symmetrize } => {
                    format!("components(n={}, entries={}, symmetrize={symmetrize})", self.n, entries.len())
                }
                _ => format!("{:?}", self.tensor),
            },
        }
    }

    /// Builds and validates the curvature tensor.
    pub fn build(&self) -> Result<CurvatureTensor, CliError> {
        if let Some(model) = self.model()? {
            return model.build().map_err(|e| invalid("tensor", e));
        }
        let TensorSpec::Components { entries, symmetrize } = &self.tensor else {
            unreachable!("models handled above")
        };
        let r = components(self.n, entries)?;
        let r = if *symmetrize {
            (&r + &r.transpose()).scale(&ratio(1, 2))
        } else {
            r
        };
        CurvatureTensor::validate(r).map_err(|e| invalid("tensor", e))
    }
}

fn check_n(n: usize) -> Result<(), CliError> {
    if (2..=dforms::index::MAX_DIM).contains(&n) {
        Ok(())
    } else {
        Err(invalid("n", format!("must lie in 2..={}, got {n}", dforms::index::MAX_DIM)))
    }
}

fn pair(at: &str, n: usize, ij: [usize; 2]) -> Result<(MultiIndex, i32), CliError> {
    if ij.iter().any(|&i| i == 0 || i > n) {
        return Err(invalid(at, format!("index out of range 1..={n} in {ij:?}")));
    }
    MultiIndex::from_unordered(&ij)
        .map_err(|e| invalid(at, e))?
        .ok_or_else(|| invalid(at, format!("repeated index in {ij:?}")))
}

fn components(n: usize, entries: &[Entry]) -> Result<DoubleForm, CliError> {
    check_n(n)?;
    let mut seen: BTreeMap<(MultiIndex, MultiIndex), usize> = BTreeMap::new();
    let mut terms = vec![];
    for (k, e) in entries.iter().enumerate() {
        let at = format!("tensor.entries[{k}]");
        let (a, sa) = pair(&format!("{at}.i"), n, e.i)?;
        let (b, sb) = pair(&format!("{at}.j"), n, e.j)?;
        if let Some(first) = seen.insert((a, b), k) {
            return Err(invalid(&at, format!("duplicates component of tensor.entries[{first}]")));
        }
        let v = value(&format!("{at}.value"), &e.value)?;
        terms.push(((a, b), v * Rational::from_integer((sa * sb).into())));
    }
    DoubleForm::from_terms(n, 2, 2, terms).map_err(|e| invalid("tensor.entries", e))
}

fn matrix(n: usize, entries: &[MatrixEntry]) -> Result<DoubleForm, CliError> {
    check_n(n)?;
    let mut seen: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    let mut terms = vec![];
    for (k, e) in entries.iter().enumerate() {
        let at = format!("tensor.h[{k}]");
        if e.i == 0 || e.j == 0 || e.i > n || e.j > n {
            return Err(invalid(&at, format!("index out of range 1..={n}")));
        }
        let key = (e.i.min(e.j), e.i.max(e.j));
        if let Some(first) = seen.insert(key, k) {
            return Err(invalid(&at, format!("duplicates tensor.h[{first}]")));
        }
        let v = value(&format!("{at}.value"), &e.value)?;
        let (a, b) = (MultiIndex::singleton(e.i), MultiIndex::singleton(e.j));
        terms.push(((a, b), v.clone()));
        if a != b {
            terms.push(((b, a), v));
        }
    }
    DoubleForm::from_terms(n, 1, 1, terms).map_err(|e| invalid("tensor.h", e))
}

#[cfg(test)]
mod tests {
    use super::*;
    use dforms::rational::int;

    fn doc(text: &str) -> Result<TensorDocument, CliError> {
        TensorDocument::parse(text)
    }

    #[test]
    fn unordered_pairs_carry_signs() {
        let a = doc(r#"{"n": 4, "tensor": {"type": "components", "entries": [
            {"i": [1, 2], "j": [1, 2], "value": "1"}]}}"#)
        .unwrap()
        .build()
        .unwrap();
        let b = doc(r#"{"n": 4, "tensor": {"type": "components", "entries": [
            {"i": [2, 1], "j": [2, 1], "value": "1"}]}}"#)
        .unwrap()
        .build()
        .unwrap();
        assert_eq!(a, b);
        let c = doc(r#"{"n": 4, "tensor": {"type": "components", "symmetrize": true, "entries": [
            {"i": [2, 1], "j": [1, 2], "value": "-1"}]}}"#)
        .unwrap()
        .build()
        .unwrap();
        assert_eq!(a, c);
    }

    #[test]
    fn symmetrize_averages_and_strict_rejects() {
        let text = |sym: bool| {
            format!(
                r#"{{"n": 4, "tensor": {{"type": "components", "symmetrize": {sym}, "entries": [
                {{"i": [1, 2], "j": [1, 3], "value": "2"}}]}}}}"#
            )
        };
        let r = doc(&text(true)).unwrap().build().unwrap();
        assert_eq!(r.form().coeff(MultiIndex::from_indices(&[1, 3]).unwrap(), MultiIndex::from_indices(&[1, 2]).unwrap()), int(1));
        let err = doc(&text(false)).unwrap().build().unwrap_err();
        assert!(matches!(err, CliError::Validation(ref m) if m.contains("symmetric")), "{err}");
    }

    #[test]
    fn errors_carry_locations() {
        let e = doc(r#"{"n": 4, "tensor": {"type": "components", "entries": [
            {"i": [1, 2], "j": [1, 2], "value": "1"},
            {"i": [1, 1], "j": [1, 2], "value": "1"}]}}"#)
        .unwrap()
        .build()
        .unwrap_err();
        assert!(e.to_string().contains("tensor.entries[1].i"), "{e}");
        let e = doc(r#"{"n": 4, "tensor": {"type": "components", "entries": [
            {"i": [1, 2], "j": [1, 2], "value": "1/0"}]}}"#)
        .unwrap()
        .build()
        .unwrap_err();
        assert!(e.to_string().contains("tensor.entries[0].value"), "{e}");
        let e = doc(r#"{"n": 4, "tensor": {"type": "constant_curvature", "kappa": "1", "extra": 1}}"#).unwrap_err();
        assert!(e.to_string().contains("extra"), "{e}");
        let e = doc(r#"{"n": 4, "tensor": {"type": "constant_curvature", "kappa": "1"}, "colour": 1}"#).unwrap_err();
        assert!(e.to_string().contains("colour"), "{e}");
        let e = doc(r#"{"n": 5, "tensor": {"type": "product_of_space_forms", "dims": [2, 2], "kappas": ["1", "1"]}}"#)
            .unwrap()
            .build()
            .unwrap_err();
        assert!(e.to_string().contains("tensor.dims"), "{e}");
    }

    #[test]
    fn bianchi_violations_are_rejected() {
        let e = doc(r#"{"n": 4, "tensor": {"type": "components", "entries": [
            {"i": [1, 2], "j": [3, 4], "value": "1"},
            {"i": [3, 4], "j": [1, 2], "value": "1"}]}}"#)
        .unwrap()
        .build()
        .unwrap_err();
        assert!(e.to_string().to_lowercase().contains("bianchi"), "{e}");
    }
}
