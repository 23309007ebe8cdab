//! JSON files for algebras, representations and morphisms. Scalars are
//! always exact strings.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::exactla::{Field, Matrix};
use crate::repcat::{Morphism, Representation};

pub const FORMAT_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum FieldSpec {
    Q,
    Fp { p: u32 },
    /// `ℚ(T)`.
    Qt,
    /// `𝔽_p(T)`.
    Fpt { p: u32 },
}

impl FieldSpec {
    pub fn build(&self) -> Result<Field> {
        match self {
            FieldSpec::Q => Ok(Field::Rational),
            FieldSpec::Fp { p } => Field::prime(*p),
            FieldSpec::Qt => Field::function(Field::Rational),
            FieldSpec::Fpt { p } => Field::function(Field::prime(*p)?),
        }
    }

    pub fn of(field: &Field) -> Self {
        match field {
            Field::Rational => FieldSpec::Q,
            Field::Prime(p) => FieldSpec::Fp { p: *p },
            Field::Function(b) => match **b {
                Field::Prime(p) => FieldSpec::Fpt { p },
                _ => FieldSpec::Qt,
            },
        }
    }
}

/// A canonical algebra; no weights gives the Kronecker algebra.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraSpec {
    pub field: FieldSpec,
    #[serde(default)]
    pub weights: Vec<usize>,
    #[serde(default)]
    pub params: Vec<String>,
}

impl AlgebraSpec {
    pub fn build(&self) -> Result<Arc<Algebra>> {
        let f = self.field.build()?;
        let params = self.params.iter().map(|s| f.parse_scalar(s)).collect::<Result<Vec<_>>>()?;
        Ok(Arc::new(Algebra::canonical(f, &self.weights, &params)?))
    }

    pub fn of(alg: &Algebra) -> Result<Self> {
        let shape = alg.require_canonical()?;
        Ok(AlgebraSpec {
            field: FieldSpec::of(alg.field()),
            weights: shape.weights.clone(),
            params: shape.params.iter().map(ToString::to_string).collect(),
        })
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let v: Value = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        serde_json::from_value(v).map_err(|e| Error::Parse(e.to_string()))
    }
}

/// The `algebra` entry of a representation file.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum AlgebraRef {
    Inline(AlgebraSpec),
    Path(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RepFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub canrep_format: Option<u32>,
    /// May be omitted when the caller supplies the algebra separately.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub algebra: Option<AlgebraRef>,
    pub dims: BTreeMap<String, usize>,
    #[serde(default)]
    pub arrows: BTreeMap<String, Vec<Vec<String>>>,
}

impl RepFile {
    pub fn from_json(text: &str) -> Result<Self> {
        let v: Value = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        Self::from_value(v)
    }

    pub fn from_value(v: Value) -> Result<Self> {
        let r: RepFile = serde_json::from_value(v).map_err(|e| Error::Parse(e.to_string()))?;
        if let Some(n) = r.canrep_format {
            if n != FORMAT_VERSION {
                return Err(Error::Parse(format!("unsupported canrep_format {n}")));
            }
        }
        Ok(r)
    }

    /// Builds the representation over `alg`; missing vertices have dimension
    /// 0 and missing arrows are zero.
    pub fn build(&self, alg: &Arc<Algebra>) -> Result<Representation> {
        let f = alg.field();
        let mut dims = vec![0; alg.vertex_count()];
        for (label, &d) in &self.dims {
            let v = alg.vertex_index(label).ok_or_else(|| Error::Parse(format!("unknown vertex {label:?}")))?;
            dims[v] = d;
        }
        let mut maps: Vec<Matrix> = alg.arrows().iter().map(|a| Matrix::zeros(f, dims[a.target], dims[a.source])).collect();
        for (label, rows) in &self.arrows {
            let a = alg.arrow_index(label).ok_or_else(|| Error::Parse(format!("unknown arrow {label:?}")))?;
            let ar = &alg.arrows()[a];
            let (r, c) = (dims[ar.target], dims[ar.source]);
            let parsed = parse_matrix(f, rows)?;
            if r * c == 0 && rows.iter().all(Vec::is_empty) {
                continue;
            }
            if parsed.rows() != r || parsed.cols() != c {
                return Err(Error::DimensionMismatch(format!(
                    "arrow {label} needs a {r}×{c} matrix, got {}×{}",
                    parsed.rows(),
                    parsed.cols()
                )));
            }
            maps[a] = parsed;
        }
        Representation::new(alg, dims, maps)
    }
}

pub fn parse_matrix(f: &Field, rows: &[Vec<String>]) -> Result<Matrix> {
    let rows = rows
        .iter()
        .map(|r| r.iter().map(|s| f.parse_scalar(s)).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    if rows.is_empty() {
        return Ok(Matrix::zeros(f, 0, 0));
    }
    Matrix::from_rows(f, rows)
}

pub fn matrix_json(m: &Matrix) -> Value {
    Value::Array(
        (0..m.rows())
            .map(|r| Value::Array(m.row(r).iter().map(|x| Value::String(x.to_string())).collect()))
            .collect(),
    )
}

pub fn dims_json(alg: &Algebra, d: &[usize]) -> Value {
    let mut map = serde_json::Map::new();
    for (label, x) in alg.vertices().iter().zip(d) {
        map.insert(label.clone(), json!(x));
    }
    Value::Object(map)
}

/// A self-contained representation block with the algebra inlined.
pub fn representation_json(m: &Representation) -> Result<Value> {
    let alg = m.algebra();
    let mut arrows = serde_json::Map::new();
    for (a, mat) in alg.arrows().iter().zip(m.maps()) {
        arrows.insert(a.label.clone(), matrix_json(mat));
    }
    Ok(json!({
        "canrep_format": FORMAT_VERSION,
        "algebra": serde_json::to_value(AlgebraSpec::of(alg)?).expect("plain data"),
        "dims": dims_json(alg, m.dims()),
        "arrows": Value::Object(arrows),
    }))
}

/// Parses a block written by [`representation_json`].
pub fn representation_from_json(v: &Value) -> Result<Representation> {
    let file = RepFile::from_value(v.clone())?;
    let Some(AlgebraRef::Inline(spec)) = &file.algebra else {
        return Err(Error::Parse("embedded representation must inline its algebra".into()));
    };
    file.build(&spec.build()?)
}

/// Per-vertex matrices keyed by vertex label.
pub fn morphism_json(g: &Morphism) -> Value {
    let alg = g.source().algebra();
    let mut maps = serde_json::Map::new();
    for (label, m) in alg.vertices().iter().zip(g.maps()) {
        maps.insert(label.clone(), matrix_json(m));
    }
    json!({ "source_dims": dims_json(alg, g.source().dims()), "target_dims": dims_json(alg, g.target().dims()), "maps": Value::Object(maps) })
}

pub fn morphism_from_json(v: &Value, source: &Representation, target: &Representation) -> Result<Morphism> {
    let alg = source.algebra();
    let f = alg.field();
    let obj = v.get("maps").and_then(Value::as_object).ok_or_else(|| Error::Parse("morphism without maps".into()))?;
    let mut maps = Vec::new();
    for (v, label) in alg.vertices().iter().enumerate() {
        let rows: Vec<Vec<String>> = match obj.get(label) {
            Some(x) => serde_json::from_value(x.clone()).map_err(|e| Error::Parse(e.to_string()))?,
            None => Vec::new(),
        };
        let m = parse_matrix(f, &rows)?;
        maps.push(if m.rows() == 0 { Matrix::zeros(f, target.dim(v), source.dim(v)) } else { m });
    }
    Morphism::new(source.clone(), target.clone(), maps)
}
