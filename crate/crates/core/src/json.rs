//! Wire formats. Scalars are strings end to end (`"3/4"`, `"1/2-1/3*i"`),
//! matrices are arrays of arrays of such strings, spectra are sorted lists
//! with repetition. [`canonical_string`] renders any serialisable value with
//! sorted keys so reports are byte-stable and diffable.

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::exact::matrix::Matrix;
use crate::hvs::structure::{Hvs, Sign};
use crate::seifert::data::{FibredLinkData, FracturedData};

/// `hvs.json`: a variation structure.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct HvsJson {
    pub epsilon: Sign,
    pub dim: usize,
    pub b: Matrix,
    pub h: Matrix,
    #[serde(rename = "V")]
    pub v: Matrix,
}

impl HvsJson {
    pub fn from_hvs(v: &Hvs) -> Self {
        HvsJson { epsilon: v.epsilon, dim: v.dim(), b: v.b.clone(), h: v.h.clone(), v: v.v.clone() }
    }

    pub fn into_hvs(self) -> Result<Hvs, String> {
        let v = Hvs::new(self.epsilon, self.b, self.h, self.v);
        if v.dim() != self.dim {
            return Err(format!("dim field {} does not match matrices of size {}", self.dim, v.dim()));
        }
        Ok(v)
    }
}

/// `fibred_link.json`: fibration data with its declared graph invariants.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct FibredLinkJson {
    pub epsilon: Sign,
    pub n: usize,
    pub c: usize,
    pub g: usize,
    pub h: Matrix,
    pub b: Matrix,
    #[serde(rename = "Var")]
    pub var: Matrix,
}

impl FibredLinkJson {
    pub fn from_data(fl: &FibredLinkData, c: usize, g: usize) -> Self {
        FibredLinkJson {
            epsilon: fl.epsilon,
            n: fl.n,
            c,
            g,
            h: fl.h.clone(),
            b: fl.b.clone(),
            var: fl.var.clone(),
        }
    }

    pub fn data(&self) -> FibredLinkData {
        FibredLinkData {
            epsilon: self.epsilon,
            n: self.n,
            h: self.h.clone(),
            b: self.b.clone(),
            var: self.var.clone(),
        }
    }
}

/// `fractured.json`: extracted fractured Seifert data.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct FracturedJson {
    pub epsilon: Sign,
    pub n: usize,
    pub c: usize,
    pub g: usize,
    #[serde(rename = "dimU")]
    pub dim_u: usize,
    #[serde(rename = "S")]
    pub s: Matrix,
    pub h_res: Matrix,
    pub b_res: Matrix,
    pub basis: Matrix,
}

impl FracturedJson {
    pub fn from_data(fd: &FracturedData, epsilon: Sign) -> Self {
        FracturedJson {
            epsilon,
            n: fd.n,
            c: fd.c_gamma,
            g: fd.g_gamma,
            dim_u: fd.dim_u,
            s: fd.s.clone(),
            h_res: fd.h_res.clone(),
            b_res: fd.b_res.clone(),
            basis: fd.basis.clone(),
        }
    }

    pub fn data(&self) -> FracturedData {
        FracturedData {
            n: self.n,
            c_gamma: self.c,
            g_gamma: self.g,
            dim_u: self.dim_u,
            basis: self.basis.clone(),
            s: self.s.clone(),
            h_res: self.h_res.clone(),
            b_res: self.b_res.clone(),
        }
    }
}

/// `linking.json`: pairwise linking numbers; the diagonal is recomputed.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct LinkingJson {
    pub n: usize,
    pub clk: Matrix,
}

/// `murasugi.json`: the numeric inputs of the signature jump bound.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct MurasugiJson {
    pub sig0: i64,
    pub sig1: i64,
    pub null0: usize,
    pub null1: usize,
    #[serde(flatten)]
    pub invariants: crate::cobordism::CobordismInvariants,
}

/// Serialises any value as canonical JSON: objects sorted by key, two-space
/// indentation, `\n` line endings. Byte-identical across runs for equal
/// values.
pub fn canonical_string<T: Serialize>(value: &T) -> serde_json::Result<String> {
    let raw = serde_json::to_value(value)?;
    let sorted = sort_value(raw);
    let mut out = serde_json::to_string_pretty(&sorted)?;
    out.push('\n');
    Ok(out)
}

fn sort_value(v: Value) -> Value {
    match v {
        Value::Object(map) => {
            let mut entries: Vec<(String, Value)> = map.into_iter().collect();
            entries.sort_by(|a, b| a.0.cmp(&b.0));
            let mut out = serde_json::Map::new();
            for (k, val) in entries {
                out.insert(k, sort_value(val));
            }
            Value::Object(out)
        }
        Value::Array(items) => Value::Array(items.into_iter().map(sort_value).collect()),
        other => other,
    }
}
