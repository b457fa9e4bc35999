//! JSON job descriptors.

use serde::{Deserialize, Serialize};
use serde_json::Value;

use stable_closure::algebra::StructureConstants;
use stable_closure::hopf::Comultiplication;
use stable_closure::{
    Action, Algebra, Error, Extension, Field, GeneratorMode, HopfAlgebra, Matrix, Result, Scalar,
};

/// A scalar as written in JSON: an integer or a `"num/den"` string.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ScalarSpec {
    Int(i64),
    Text(String),
}

pub type MatrixSpec = Vec<Vec<ScalarSpec>>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraSpec {
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub names: Option<Vec<String>>,
    pub unit: Vec<ScalarSpec>,
    /// `mult[i][j]` lists `[m, c]` pairs with `e_i e_j = Σ c e_m`.
    pub mult: Vec<Vec<Vec<(usize, ScalarSpec)>>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HopfSpec {
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub names: Option<Vec<String>>,
    pub unit: Vec<ScalarSpec>,
    pub mult: Vec<Vec<Vec<(usize, ScalarSpec)>>>,
    /// `comult[i]` lists `[j, k, c]` with `Δ(e_i) = Σ c e_j ⊗ e_k`.
    pub comult: Vec<Vec<(usize, usize, ScalarSpec)>>,
    pub counit: Vec<ScalarSpec>,
    pub antipode: MatrixSpec,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExtensionSpec {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub generators: Option<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub extra_operators: Vec<MatrixSpec>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct JobDescriptor {
    /// `"Q"` or `"F_p"`.
    pub field: String,
    pub algebra: AlgebraSpec,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hopf: Option<HopfSpec>,
    /// One matrix per basis element of `H`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub action: Option<Vec<MatrixSpec>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub extension: Option<ExtensionSpec>,
    /// Generators of a stable ideal for `ideals`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ideal: Option<Vec<Vec<ScalarSpec>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub command: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub output: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub product: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub radical: Option<String>,
}

/// Parses and shape-checks a job; semantic checks happen in [`Job::build`].
pub fn parse_input(text: &str) -> Result<JobDescriptor> {
    let value: Value = serde_json::from_str(text).map_err(|e| {
        Error::Parse {
            path: format!("line {}, column {}", e.line(), e.column()),
            message: e.to_string(),
        }
    })?;
    serde_json::from_value(value.clone()).map_err(|e| Error::Parse {
        path: locate(&value, &e.to_string()),
        message: e.to_string(),
    })
}

/// Best-effort JSON pointer for a serde error: the key it names, if any.
fn locate(value: &Value, msg: &str) -> String {
    let key = msg
        .split('`')
        .nth(1)
        .filter(|_| msg.contains("unknown field") || msg.contains("missing field"));
    match key {
        Some(k) => find_key(value, k, String::new()).unwrap_or_else(|| format!("/{k}")),
        None => "/".into(),
    }
}

fn find_key(value: &Value, key: &str, at: String) -> Option<String> {
    match value {
        Value::Object(map) => {
            if map.contains_key(key) {
                return Some(format!("{at}/{key}"));
            }
            map.iter()
                .find_map(|(k, v)| find_key(v, key, format!("{at}/{k}")))
        }
        _ => None,
    }
}

pub fn parse_field(text: &str) -> Result<Field> {
    let t = text.trim();
    if matches!(t, "Q" | "QQ" | "rational") {
        return Ok(Field::Rational);
    }
    let digits = t
        .strip_prefix("F_")
        .or_else(|| t.strip_prefix('F'))
        .ok_or_else(|| Error::Parse {
            path: "/field".into(),
            message: format!("unknown field '{t}' (use \"Q\" or \"F_p\")"),
        })?;
    let p: u64 = digits.parse().map_err(|_| Error::Parse {
        path: "/field".into(),
        message: format!("invalid characteristic '{digits}'"),
    })?;
    Field::prime(p)
}

fn scalar(field: Field, s: &ScalarSpec, path: &str) -> Result<Scalar> {
    match s {
        ScalarSpec::Int(v) => Ok(field.from_i64(*v)),
        ScalarSpec::Text(t) => field.parse_scalar(t).map_err(|e| Error::Parse {
            path: path.into(),
            message: match e {
                Error::Parse { message, .. } => message,
                other => other.to_string(),
            },
        }),
    }
}

fn vector(field: Field, v: &[ScalarSpec], n: usize, path: &str) -> Result<Vec<Scalar>> {
    if v.len() != n {
        return Err(shape(path, n, v.len()));
    }
    v.iter()
        .enumerate()
        .map(|(i, s)| scalar(field, s, &format!("{path}/{i}")))
        .collect()
}

fn shape(path: &str, expected: usize, found: usize) -> Error {
    Error::Parse {
        path: path.into(),
        message: format!("expected {expected} entries, found {found}"),
    }
}

fn matrix(field: Field, m: &MatrixSpec, n: usize, path: &str) -> Result<Matrix> {
    if m.len() != n {
        return Err(shape(path, n, m.len()));
    }
    let rows: Vec<Vec<Scalar>> = m
        .iter()
        .enumerate()
        .map(|(i, r)| vector(field, r, n, &format!("{path}/{i}")))
        .collect::<Result<_>>()?;
    Matrix::from_rows(field, n, &rows)
}

fn table(
    field: Field,
    dim: usize,
    mult: &[Vec<Vec<(usize, ScalarSpec)>>],
    path: &str,
) -> Result<StructureConstants> {
    if mult.len() != dim {
        return Err(shape(path, dim, mult.len()));
    }
    mult.iter()
        .enumerate()
        .map(|(i, row)| {
            if row.len() != dim {
                return Err(shape(&format!("{path}/{i}"), dim, row.len()));
            }
            row.iter()
                .enumerate()
                .map(|(j, terms)| {
                    terms
                        .iter()
                        .enumerate()
                        .map(|(t, (m, c))| {
                            let p = format!("{path}/{i}/{j}/{t}");
                            if *m >= dim {
                                return Err(Error::Parse {
                                    path: format!("{p}/0"),
                                    message: format!("index {m} out of range for dimension {dim}"),
                                });
                            }
                            Ok((*m, scalar(field, c, &format!("{p}/1"))?))
                        })
                        .collect()
                })
                .collect()
        })
        .collect()
}

fn algebra(field: Field, dim: usize, names: &Option<Vec<String>>, unit: &[ScalarSpec], mult: &[Vec<Vec<(usize, ScalarSpec)>>], path: &str) -> Result<Algebra> {
    if dim == 0 {
        return Err(Error::Parse {
            path: format!("{path}/dim"),
            message: "dimension must be positive (a unit is required)".into(),
        });
    }
    if let Some(n) = names {
        if n.len() != dim {
            return Err(shape(&format!("{path}/names"), dim, n.len()));
        }
    }
    let unit = vector(field, unit, dim, &format!("{path}/unit"))?;
    let mult = table(field, dim, mult, &format!("{path}/mult"))?;
    Algebra::new(field, names.clone(), unit, mult)
}

/// A fully validated job.
#[derive(Clone, Debug)]
pub struct Job {
    pub descriptor: JobDescriptor,
    pub field: Field,
    pub hopf: Option<HopfAlgebra>,
    pub action: Option<Action>,
    pub extension: Extension,
}

impl Job {
    pub fn build(d: &JobDescriptor) -> Result<Job> {
        let field = parse_field(&d.field)?;
        Job::build_over(d, field)
    }

    /// Builds the job with every scalar read in `field` instead.
    pub fn build_over(d: &JobDescriptor, field: Field) -> Result<Job> {
        let a = &d.algebra;
        let alg = algebra(field, a.dim, &a.names, &a.unit, &a.mult, "/algebra")?;
        let hopf = match &d.hopf {
            None => None,
            Some(h) => {
                let ha = algebra(field, h.dim, &h.names, &h.unit, &h.mult, "/hopf")?;
                if h.comult.len() != h.dim {
                    return Err(shape("/hopf/comult", h.dim, h.comult.len()));
                }
                let comult: Comultiplication = h
                    .comult
                    .iter()
                    .enumerate()
                    .map(|(i, terms)| {
                        terms
                            .iter()
                            .enumerate()
                            .map(|(t, (j, k, c))| {
                                Ok((*j, *k, scalar(field, c, &format!("/hopf/comult/{i}/{t}/2"))?))
                            })
                            .collect::<Result<Vec<_>>>()
                    })
                    .collect::<Result<_>>()?;
                let counit = vector(field, &h.counit, h.dim, "/hopf/counit")?;
                let s = matrix(field, &h.antipode, h.dim, "/hopf/antipode")?;
                Some(HopfAlgebra::new(ha, comult, counit, s)?)
            }
        };
        let action = match (&d.action, &hopf) {
            (None, _) => None,
            (Some(_), None) => return Err(Error::Dependency("\"action\" requires a \"hopf\" section".into())),
            (Some(ls), Some(h)) => {
                if ls.len() != h.dim() {
                    return Err(shape("/action", h.dim(), ls.len()));
                }
                let lambda = ls
                    .iter()
                    .enumerate()
                    .map(|(i, m)| matrix(field, m, alg.dim(), &format!("/action/{i}")))
                    .collect::<Result<Vec<_>>>()?;
                Some(Action::new(h.clone(), alg.clone(), lambda)?)
            }
        };
        let spec = d.extension.clone().unwrap_or_default();
        let mode_name = spec
            .generators
            .clone()
            .unwrap_or_else(|| if action.is_some() { "action" } else { "multiplication" }.into());
        let mode = GeneratorMode::parse(&mode_name).ok_or_else(|| Error::Parse {
            path: "/extension/generators".into(),
            message: format!("unknown generator set '{mode_name}' (multiplication, action, both, left)"),
        })?;
        let extra = spec
            .extra_operators
            .iter()
            .enumerate()
            .map(|(i, m)| matrix(field, m, alg.dim(), &format!("/extension/extra_operators/{i}")))
            .collect::<Result<Vec<_>>>()?;
        let extension = Extension::build(alg, mode, action.clone(), extra)?;
        Ok(Job {
            descriptor: d.clone(),
            field,
            hopf,
            action,
            extension,
        })
    }

    /// Generators of the requested ideal, read in the job's field.
    pub fn ideal_generators(&self) -> Result<Option<Vec<Vec<Scalar>>>> {
        let n = self.extension.dim();
        self.descriptor
            .ideal
            .as_ref()
            .map(|vs| {
                vs.iter()
                    .enumerate()
                    .map(|(i, v)| vector(self.field, v, n, &format!("/ideal/{i}")))
                    .collect()
            })
            .transpose()
    }
}

pub fn emit(d: &JobDescriptor) -> String {
    serde_json::to_string_pretty(d).expect("descriptor serializes")
}
