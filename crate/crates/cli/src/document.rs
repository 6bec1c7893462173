use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use solvlat_core::models::AlmostAbelianSpec;
use solvlat_core::scalar::{self, ExactScalar};
use solvlat_core::{KForm, LieAlgebra};

use crate::error::CliError;

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BracketEntry {
    pub i: usize,
    pub j: usize,
    /// Basis index (as a string key) to rational string.
    pub coeffs: BTreeMap<String, String>,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlmostAbelianDoc {
    #[serde(rename = "M")]
    pub m: Vec<Vec<String>>,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermDoc {
    pub indices: Vec<usize>,
    pub coeff: String,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FormDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub degree: Option<usize>,
    pub terms: Vec<TermDoc>,
}

/// A Lie algebra by structure constants `[e_i, e_j] = Σ c_k e_k` (0-based,
/// `i < j`) or by the matrix of `ad_{e₀}` on an abelian ideal, optionally
/// with a 2-form `omega` and a 1-form `theta`.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraDocument {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dim: Option<usize>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub brackets: Vec<BracketEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub almost_abelian: Option<AlmostAbelianDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub omega: Option<FormDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub theta: Option<FormDoc>,
}

fn parse_q(s: &str) -> Result<ExactScalar, CliError> {
    scalar::parse(s).map_err(|e| CliError::Parse(e.to_string()))
}

impl AlgebraDocument {
    pub fn from_json(text: &str) -> Result<Self, CliError> {
        serde_json::from_str(text).map_err(|e| CliError::Parse(format!("algebra document: {e}")))
    }

    pub fn from_algebra(name: &str, g: &LieAlgebra, omega: Option<&KForm>, theta: Option<&KForm>) -> Self {
        let brackets = g
            .brackets()
            .iter()
            .map(|(&(i, j), terms)| BracketEntry {
                i,
                j,
                coeffs: terms.iter().map(|(k, c)| (k.to_string(), scalar::format(c))).collect(),
            })
            .collect();
        AlgebraDocument {
            name: Some(name.to_string()),
            dim: Some(g.dim()),
            brackets,
            almost_abelian: None,
            labels: g.labels().map(|l| l.to_vec()),
            omega: omega.map(FormDoc::from_form),
            theta: theta.map(FormDoc::from_form),
        }
    }

    pub fn from_spec(name: &str, spec: &AlmostAbelianSpec, omega: Option<&KForm>, theta: Option<&KForm>) -> Self {
        AlgebraDocument {
            name: Some(name.to_string()),
            dim: Some(spec.d() + 1),
            almost_abelian: Some(AlmostAbelianDoc {
                m: spec.m.iter().map(|r| r.iter().map(scalar::format).collect()).collect(),
            }),
            omega: omega.map(FormDoc::from_form),
            theta: theta.map(FormDoc::from_form),
            ..Default::default()
        }
    }

    pub fn spec(&self) -> Result<Option<AlmostAbelianSpec>, CliError> {
        let Some(aa) = &self.almost_abelian else {
            return Ok(None);
        };
        let m = aa
            .m
            .iter()
            .map(|r| r.iter().map(|x| parse_q(x)).collect::<Result<Vec<_>, _>>())
            .collect::<Result<Vec<_>, _>>()?;
        let spec = AlmostAbelianSpec::new(m).map_err(|e| CliError::Parse(e.to_string()))?;
        if let Some(d) = self.dim {
            if d != spec.d() + 1 {
                return Err(CliError::Parse(format!("dim {d} does not match {}x{} matrix M", spec.d(), spec.d())));
            }
        }
        Ok(Some(spec))
    }

    pub fn algebra(&self) -> Result<LieAlgebra, CliError> {
        let g = if let Some(spec) = self.spec()? {
            if !self.brackets.is_empty() {
                return Err(CliError::Parse("give either brackets or almost_abelian, not both".into()));
            }
            spec.build()
        } else {
            let dim = self.dim.ok_or_else(|| CliError::Parse("missing `dim`".into()))?;
            let mut entries = Vec::new();
            for b in &self.brackets {
                if b.i >= b.j || b.j >= dim {
                    return Err(CliError::Parse(format!("bracket ({}, {}) needs i < j < dim", b.i, b.j)));
                }
                for (k, c) in &b.coeffs {
                    let k: usize = k
                        .parse()
                        .ok()
                        .filter(|&k| k < dim)
                        .ok_or_else(|| CliError::Parse(format!("bad basis index `{k}`")))?;
                    entries.push((b.i, b.j, k, parse_q(c)?));
                }
            }
            LieAlgebra::from_structure_constants(dim, entries).map_err(|e| CliError::Parse(e.to_string()))?
        };
        match &self.labels {
            Some(l) => g.with_labels(l.clone()).map_err(|e| CliError::Parse(e.to_string())),
            None => Ok(g),
        }
    }

    pub fn omega(&self, dim: usize) -> Result<Option<KForm>, CliError> {
        self.omega.as_ref().map(|f| f.to_form(dim, 2)).transpose()
    }

    pub fn theta(&self, dim: usize) -> Result<Option<KForm>, CliError> {
        self.theta.as_ref().map(|f| f.to_form(dim, 1)).transpose()
    }
}

impl FormDoc {
    pub fn from_form(f: &KForm) -> Self {
        FormDoc {
            degree: Some(f.degree()),
            terms: f
                .terms()
                .map(|(i, c)| TermDoc {
                    indices: i.as_slice().to_vec(),
                    coeff: scalar::format(c),
                })
                .collect(),
        }
    }

    pub fn to_form(&self, dim: usize, degree: usize) -> Result<KForm, CliError> {
        if self.degree.is_some_and(|d| d != degree) {
            return Err(CliError::Parse(format!("expected a {degree}-form")));
        }
        let terms = self
            .terms
            .iter()
            .map(|t| Ok((t.indices.clone(), parse_q(&t.coeff)?)))
            .collect::<Result<Vec<_>, CliError>>()?;
        KForm::from_terms(dim, degree, terms).map_err(|e| CliError::Parse(e.to_string()))
    }
}
