//! Cubical cycles given by parametrized components, over a point or over P^1.

pub mod admissible;
pub mod boundary;
pub mod families;
pub mod ops;
pub mod realpos;

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::{GaussRational, Place, RationalFunction};

pub use admissible::{check_admissible, AdmissibilityReport, Violation};
pub use boundary::boundary;
pub use ops::{alt, component_is_degenerate, is_degenerate, permute, translate, translate_checked};
pub use realpos::{real_position_check, RealPositionReport};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Ambient {
    Pt,
    P1,
}

/// A curve `t -> (z_1(t), ..., z_n(t))`. The label is cosmetic and ignored
/// by comparisons.
#[derive(Clone, Debug)]
pub struct ParamCurve {
    pub coords: Vec<RationalFunction>,
    pub label: String,
}

impl ParamCurve {
    pub fn new(coords: Vec<RationalFunction>) -> Self {
        Self { coords, label: String::new() }
    }

    pub fn labeled(coords: Vec<RationalFunction>, label: impl Into<String>) -> Self {
        Self { coords, label: label.into() }
    }

    pub fn n(&self) -> usize {
        self.coords.len()
    }
}

impl PartialEq for ParamCurve {
    fn eq(&self, o: &Self) -> bool {
        self.coords == o.coords
    }
}
impl Eq for ParamCurve {}
impl PartialOrd for ParamCurve {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}
impl Ord for ParamCurve {
    fn cmp(&self, o: &Self) -> Ordering {
        self.coords.cmp(&o.coords)
    }
}

/// A point of the cube, optionally lying over a point of the base P^1.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct BoxPoint {
    pub base: Option<Place>,
    pub coords: Vec<GaussRational>,
}

impl BoxPoint {
    pub fn new(coords: Vec<GaussRational>) -> Self {
        Self { base: None, coords }
    }

    pub fn over(base: Place, coords: Vec<GaussRational>) -> Self {
        Self { base: Some(base), coords }
    }
}

/// `{basepoint} x fiber` inside P^1 x cube.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct VerticalCurve {
    pub basepoint: Place,
    pub fiber: ParamCurve,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Component {
    /// Over a point: a curve in the cube. Over P^1: the graph of the
    /// coordinates, with `t` the coordinate of the base.
    Curve(ParamCurve),
    Point(BoxPoint),
    Vertical(VerticalCurve),
}

impl Component {
    pub fn n(&self) -> usize {
        match self {
            Component::Curve(c) => c.n(),
            Component::Point(p) => p.coords.len(),
            Component::Vertical(v) => v.fiber.n(),
        }
    }

    /// Dimension of the component (1 for curves, 0 for points).
    pub fn dim(&self) -> usize {
        match self {
            Component::Point(_) => 0,
            _ => 1,
        }
    }

    /// Coordinates and the base place to attach to boundary points.
    pub(crate) fn curve_data(&self) -> Option<(&ParamCurve, Option<&Place>)> {
        match self {
            Component::Curve(c) => Some((c, None)),
            Component::Vertical(v) => Some((&v.fiber, Some(&v.basepoint))),
            Component::Point(_) => None,
        }
    }

    pub fn label(&self) -> &str {
        match self {
            Component::Curve(c) => &c.label,
            Component::Vertical(v) => &v.fiber.label,
            Component::Point(_) => "",
        }
    }
}

/// A formal sum of components with rational coefficients, kept merged and
/// sorted so that equality is structural.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cycle {
    pub ambient: Ambient,
    pub n: usize,
    pub terms: Vec<(BigRational, Component)>,
}

impl Cycle {
    pub fn zero(ambient: Ambient, n: usize) -> Self {
        Self { ambient, n, terms: Vec::new() }
    }

    /// Builds a normalized cycle; all components must share `n` and dimension.
    pub fn new(ambient: Ambient, n: usize, terms: Vec<(BigRational, Component)>) -> Result<Self> {
        let dim = terms.first().map(|(_, c)| c.dim());
        for (k, (_, c)) in terms.iter().enumerate() {
            if c.n() != n {
                return Err(Error::InadmissibleInput(format!(
                    "component {k} has {} coordinates, expected {n}",
                    c.n()
                )));
            }
            if Some(c.dim()) != dim {
                return Err(Error::InadmissibleInput(format!(
                    "component {k} has a different dimension from component 0"
                )));
            }
            let wrong_ambient = match (ambient, c) {
                (Ambient::Pt, Component::Vertical(_)) => true,
                (Ambient::Pt, Component::Point(p)) => p.base.is_some(),
                (Ambient::P1, Component::Point(p)) => p.base.is_none(),
                _ => false,
            };
            if wrong_ambient {
                return Err(Error::InadmissibleInput(format!(
                    "component {k} does not match the ambient space"
                )));
            }
        }
        Ok(Self::from_terms_unchecked(ambient, n, terms))
    }

    pub(crate) fn from_terms_unchecked(
        ambient: Ambient,
        n: usize,
        terms: Vec<(BigRational, Component)>,
    ) -> Self {
        let mut merged: BTreeMap<Component, BigRational> = BTreeMap::new();
        for (c, comp) in terms {
            match merged.get_mut(&comp) {
                Some(v) => *v += c,
                None => {
                    merged.insert(comp, c);
                }
            }
        }
        let terms = merged
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(comp, c)| (c, comp))
            .collect();
        Self { ambient, n, terms }
    }

    pub fn single(ambient: Ambient, comp: Component) -> Result<Self> {
        let n = comp.n();
        Self::new(ambient, n, vec![(BigRational::one(), comp)])
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, o: &Cycle) -> Cycle {
        let mut terms = self.terms.clone();
        terms.extend(o.terms.iter().cloned());
        Self::from_terms_unchecked(self.ambient, self.n, terms)
    }

    pub fn scale(&self, c: &BigRational) -> Cycle {
        let terms = self.terms.iter().map(|(k, comp)| (k * c, comp.clone())).collect();
        Self::from_terms_unchecked(self.ambient, self.n, terms)
    }

    pub fn sub(&self, o: &Cycle) -> Cycle {
        self.add(&o.scale(&-BigRational::one()))
    }
}

fn fmt_coeff(c: &BigRational) -> String {
    let sign = if c.is_negative() { "-" } else { "+" };
    let a = c.abs();
    let mag = if a.is_one() {
        String::new()
    } else if a.denom().is_one() {
        a.numer().to_string()
    } else {
        format!("{}/{}", a.numer(), a.denom())
    };
    format!("{sign}{mag}")
}

impl fmt::Display for Component {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: Vec<String>| v.join(", ");
        match self {
            Component::Curve(c) => {
                write!(f, "[{}]", join(c.coords.iter().map(|z| z.to_string()).collect()))
            }
            Component::Point(p) => {
                if let Some(b) = &p.base {
                    write!(f, "{{{b}}}x")?;
                }
                write!(f, "({})", join(p.coords.iter().map(|z| z.to_string()).collect()))
            }
            Component::Vertical(v) => write!(
                f,
                "{{{}}}x[{}]",
                v.basepoint,
                join(v.fiber.coords.iter().map(|z| z.to_string()).collect())
            ),
        }
    }
}

impl fmt::Display for Cycle {
    /// E.g. `+(3/5, 2/5)` or `+[1 - 2/5/t, ...] -1/6[...]`; `0` when empty.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (c, comp)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}{}", fmt_coeff(c), comp)?;
        }
        Ok(())
    }
}
