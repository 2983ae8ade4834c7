//! JSON exchange format for polytopes.
//!
//! ```json
//! { "dim": 2,
//!   "ineqs": [ { "a": ["-1", "0"], "b": "0" }, ... ],
//!   "vertices": [ ["0", "1/2"], ... ] }
//! ```
//!
//! Equations of the affine hull are written as pairs of opposite inequalities.

use serde::{Deserialize, Serialize};
use serde_json::Value;

use super::{HalfSpace, Polytope};
use crate::arith::{format_rational, parse_rational, Rat};
use crate::error::{Error, Result};

#[derive(Serialize, Deserialize)]
struct IneqJson {
    a: Vec<String>,
    b: String,
}

#[derive(Serialize, Deserialize)]
struct PolytopeJson {
    dim: usize,
    ineqs: Vec<IneqJson>,
    #[serde(default)]
    vertices: Option<Vec<Vec<String>>>,
}

fn parse_vec(v: &[String]) -> Result<Vec<Rat>> {
    v.iter().map(|s| parse_rational(s)).collect()
}

impl Polytope {
    pub fn to_json(&self) -> Value {
        let doc = PolytopeJson {
            dim: self.dim,
            ineqs: self
                .halfspaces()
                .iter()
                .map(|h| IneqJson { a: h.a.iter().map(|x| x.to_string()).collect(), b: format_rational(&h.b) })
                .collect(),
            vertices: Some(self.vertices.iter().map(|v| v.iter().map(format_rational).collect()).collect()),
        };
        serde_json::to_value(doc).expect("serialisable")
    }

    /// Reads a polytope. When vertices are given they define the polytope and the
    /// inequalities must describe the same set; otherwise the inequalities are used.
    pub fn from_json(value: &Value) -> Result<Polytope> {
        let doc: PolytopeJson = serde_json::from_value(value.clone()).map_err(|e| Error::Parse(e.to_string()))?;
        let mut hs = Vec::with_capacity(doc.ineqs.len());
        for ineq in &doc.ineqs {
            if ineq.a.len() != doc.dim {
                return Err(Error::Parse(format!(
                    "inequality has {} coefficients, expected {}",
                    ineq.a.len(),
                    doc.dim
                )));
            }
            hs.push(HalfSpace::new(parse_vec(&ineq.a)?, parse_rational(&ineq.b)?)?);
        }
        match doc.vertices.filter(|v| !v.is_empty()) {
            Some(vs) => {
                let pts = vs.iter().map(|v| parse_vec(v)).collect::<Result<Vec<_>>>()?;
                if pts.iter().any(|p| p.len() != doc.dim) {
                    return Err(Error::Parse("vertex of the wrong dimension".into()));
                }
                let p = Polytope::from_points(&pts)?;
                if !hs.is_empty() {
                    let mut given = hs.clone();
                    given.sort();
                    given.dedup();
                    if given != p.halfspaces() {
                        return Err(Error::Parse("inequalities do not match the convex hull of the vertices".into()));
                    }
                }
                Ok(p)
            }
            None => Polytope::from_halfspaces(doc.dim, &hs),
        }
    }

    pub fn from_json_str(s: &str) -> Result<Polytope> {
        let v: Value = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        Polytope::from_json(&v)
    }
}
