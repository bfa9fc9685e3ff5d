//! The JSON cycle-spec format.
//!
//! ```json
//! { "ambient": "pt", "n": 3, "params": { "a": "2/5" },
//!   "components": [
//!     { "coeff": "1", "kind": "curve", "coords": ["1 - a/t", "1 - t", "t"] },
//!     { "coeff": "-1", "kind": "curve", "coords": ["1 - (1-a)/t", "t", "1 - t"] } ] }
//! ```

use std::collections::BTreeMap;

use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::cycle::{Ambient, BoxPoint, Component, Cycle, ParamCurve, VerticalCurve};
use crate::error::{Error, Result};
use crate::exact::{parse_constant, parse_rational_function, GaussRational, Params, Place};
use crate::special::CutAngle;
use crate::tracker::Loop;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum AmbientSpec {
    #[serde(rename = "pt")]
    Pt,
    #[serde(rename = "P1")]
    P1,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum KindSpec {
    Curve,
    Point,
    Vertical,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComponentSpec {
    pub coeff: String,
    pub kind: KindSpec,
    pub coords: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basepoint: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CycleSpecDocument {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub version: Option<u32>,
    pub ambient: AmbientSpec,
    pub n: usize,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub params: BTreeMap<String, String>,
    pub components: Vec<ComponentSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cuts: Option<Vec<f64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub loops: Option<Vec<Loop>>,
}

fn json_error(e: serde_json::Error) -> Error {
    Error::Parse { msg: e.to_string(), line: e.line(), col: e.column() }
}

/// Prefixes the message of an expression error with where it came from.
fn locate(e: Error, what: &str) -> Error {
    match e {
        Error::Parse { msg, line, col } => Error::Parse { msg: format!("{what}: {msg}"), line, col },
        other => other,
    }
}

impl CycleSpecDocument {
    pub fn from_json(src: &str) -> Result<Self> {
        let doc: Self = serde_json::from_str(src).map_err(json_error)?;
        if doc.version.is_some_and(|v| v != 1) {
            return Err(Error::InvalidSpec(format!("unsupported version {:?}", doc.version)));
        }
        Ok(doc)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("spec documents serialize")
    }

    /// Parameter table with `overrides` taking precedence.
    pub fn params(&self, overrides: &Params) -> Result<Params> {
        let mut out = Params::new();
        for (k, v) in &self.params {
            let val = parse_constant(v, &Params::new()).map_err(|e| locate(e, &format!("param {k}")))?;
            out.insert(k.clone(), val);
        }
        for (k, v) in overrides {
            out.insert(k.clone(), v.clone());
        }
        Ok(out)
    }

    pub fn cut_angles(&self) -> Result<Option<Vec<CutAngle>>> {
        match &self.cuts {
            None => Ok(None),
            Some(c) if c.len() != self.n => {
                Err(Error::InvalidSpec(format!("{} cut angles for n = {}", c.len(), self.n)))
            }
            Some(c) => Ok(Some(c.iter().map(|&x| CutAngle::new(x)).collect())),
        }
    }

    pub fn to_cycle(&self, overrides: &Params) -> Result<Cycle> {
        let params = self.params(overrides)?;
        let ambient = match self.ambient {
            AmbientSpec::Pt => Ambient::Pt,
            AmbientSpec::P1 => Ambient::P1,
        };
        let mut terms = Vec::new();
        for (k, c) in self.components.iter().enumerate() {
            let coeff = parse_coeff(&c.coeff).map_err(|e| locate(e, &format!("component {k} coeff")))?;
            if c.coords.len() != self.n {
                return Err(Error::InvalidSpec(format!(
                    "component {k} has {} coordinates, expected {}",
                    c.coords.len(),
                    self.n
                )));
            }
            let base = c
                .basepoint
                .as_ref()
                .map(|b| parse_place(b, &params).map_err(|e| locate(e, &format!("component {k} basepoint"))))
                .transpose()?;
            let comp = match c.kind {
                KindSpec::Curve | KindSpec::Vertical => {
                    let coords = c
                        .coords
                        .iter()
                        .enumerate()
                        .map(|(j, s)| {
                            parse_rational_function(s, &params)
                                .map_err(|e| locate(e, &format!("component {k} z{}", j + 1)))
                        })
                        .collect::<Result<Vec<_>>>()?;
                    let curve = ParamCurve::labeled(coords, format!("c{k}"));
                    match (c.kind, base) {
                        (KindSpec::Curve, None) => Component::Curve(curve),
                        (KindSpec::Curve, Some(_)) => {
                            return Err(Error::InvalidSpec(format!("component {k}: curves take no basepoint")))
                        }
                        (_, Some(b)) => Component::Vertical(VerticalCurve { basepoint: b, fiber: curve }),
                        (_, None) => {
                            return Err(Error::InvalidSpec(format!("component {k}: vertical curve needs a basepoint")))
                        }
                    }
                }
                KindSpec::Point => {
                    let coords = c
                        .coords
                        .iter()
                        .enumerate()
                        .map(|(j, s)| {
                            parse_constant(s, &params).map_err(|e| locate(e, &format!("component {k} z{}", j + 1)))
                        })
                        .collect::<Result<Vec<_>>>()?;
                    Component::Point(BoxPoint { base, coords })
                }
            };
            terms.push((coeff, comp));
        }
        Cycle::new(ambient, self.n, terms).map_err(|e| match e {
            Error::InadmissibleInput(m) => Error::InvalidSpec(m),
            other => other,
        })
    }

    /// A document describing `z` exactly, with no parameters.
    pub fn from_cycle(z: &Cycle) -> Self {
        let components = z
            .terms
            .iter()
            .map(|(c, comp)| {
                let (kind, coords, basepoint) = match comp {
                    Component::Curve(cv) => (KindSpec::Curve, cv.coords.iter().map(|f| f.to_string()).collect(), None),
                    Component::Vertical(v) => (
                        KindSpec::Vertical,
                        v.fiber.coords.iter().map(|f| f.to_string()).collect(),
                        Some(v.basepoint.to_string()),
                    ),
                    Component::Point(p) => (
                        KindSpec::Point,
                        p.coords.iter().map(|g| g.to_string()).collect(),
                        p.base.as_ref().map(|b| b.to_string()),
                    ),
                };
                ComponentSpec { coeff: c.to_string(), kind, coords, basepoint }
            })
            .collect();
        Self {
            version: Some(1),
            ambient: match z.ambient {
                Ambient::Pt => AmbientSpec::Pt,
                Ambient::P1 => AmbientSpec::P1,
            },
            n: z.n,
            params: BTreeMap::new(),
            components,
            cuts: None,
            loops: None,
        }
    }
}

fn parse_coeff(s: &str) -> Result<BigRational> {
    let g = parse_constant(s, &Params::new())?;
    if !g.is_real() {
        return Err(Error::InvalidSpec(format!("coefficient {s} is not rational")));
    }
    Ok(g.re)
}

fn parse_place(s: &str, params: &Params) -> Result<Place> {
    match s.trim() {
        "inf" | "∞" | "infinity" => Ok(Place::Infinity),
        other => Ok(Place::Finite(parse_constant(other, params)?)),
    }
}

/// Parses a Gaussian rational such as `1/2+1/3*i`.
pub fn parse_value(s: &str) -> Result<GaussRational> {
    parse_constant(s, &Params::new())
}
