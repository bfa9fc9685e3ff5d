//! Proper intersection with the faces `z_i in {0, inf}` of the cube.

use std::collections::BTreeSet;

use super::{Component, Cycle, ParamCurve};
use crate::error::{Error, Result};
use crate::exact::{ExtValue, GaussRational, Place, RationalFunction};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub component: usize,
    pub message: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AdmissibilityReport {
    pub violations: Vec<Violation>,
    /// Closure points with some coordinate equal to 1; these lie outside the
    /// cube and are not violations.
    pub off_space: Vec<String>,
}

impl AdmissibilityReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Value of a coordinate at a place, as 0, 1, infinity or something else.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum FaceValue {
    Zero,
    One,
    Infinity,
    Other,
}

pub(crate) fn face_value(f: &RationalFunction, p: &Place) -> FaceValue {
    match f.eval_place(p) {
        ExtValue::Infinity => FaceValue::Infinity,
        ExtValue::Finite(v) if v.is_zero() => FaceValue::Zero,
        ExtValue::Finite(v) if v.is_one() => FaceValue::One,
        ExtValue::Finite(_) => FaceValue::Other,
    }
}

/// Places where some coordinate hits 0 or infinity, with per-coordinate orders.
pub(crate) fn face_places(c: &ParamCurve) -> Result<Vec<(usize, Place, i64)>> {
    let mut out = Vec::new();
    for (i, z) in c.coords.iter().enumerate() {
        for (p, m) in z.exact_divisor()? {
            out.push((i, p, m));
        }
    }
    Ok(out)
}

fn check_curve(k: usize, c: &ParamCurve, need_nonconstant: bool, rep: &mut AdmissibilityReport) -> Result<()> {
    let mut bad = false;
    for (i, z) in c.coords.iter().enumerate() {
        if z.is_zero() {
            rep.violations.push(Violation {
                component: k,
                message: format!("coordinate z{} is identically 0", i + 1),
            });
            bad = true;
        } else if z.is_constant_value(&GaussRational::one()) {
            rep.violations.push(Violation {
                component: k,
                message: format!("coordinate z{} is identically 1", i + 1),
            });
            bad = true;
        }
    }
    if need_nonconstant && c.coords.iter().all(RationalFunction::is_constant) {
        rep.violations.push(Violation {
            component: k,
            message: "all coordinates are constant".into(),
        });
        bad = true;
    }
    if bad {
        return Ok(());
    }
    let places: BTreeSet<Place> = face_places(c)?.into_iter().map(|(_, p, _)| p).collect();
    for p in places {
        let vals: Vec<FaceValue> = c.coords.iter().map(|z| face_value(z, &p)).collect();
        let on_face: Vec<usize> = vals
            .iter()
            .enumerate()
            .filter(|(_, v)| matches!(v, FaceValue::Zero | FaceValue::Infinity))
            .map(|(i, _)| i + 1)
            .collect();
        if vals.contains(&FaceValue::One) {
            rep.off_space.push(format!(
                "component {k}: closure point t = {p} has a coordinate equal to 1"
            ));
        } else if on_face.len() >= 2 {
            rep.violations.push(Violation {
                component: k,
                message: format!(
                    "t = {p} lies on a codimension-{} face (coordinates {:?} in {{0, inf}})",
                    on_face.len(),
                    on_face
                ),
            });
        }
    }
    Ok(())
}

fn check_point(k: usize, coords: &[GaussRational], rep: &mut AdmissibilityReport) {
    for (i, v) in coords.iter().enumerate() {
        if v.is_zero() || v.is_one() {
            rep.violations.push(Violation {
                component: k,
                message: format!("point coordinate z{} = {v} lies on a face or off the cube", i + 1),
            });
        }
    }
}

/// Checks every component; face intersections must be Gaussian-rational.
pub fn check_admissible(z: &Cycle) -> Result<AdmissibilityReport> {
    let mut rep = AdmissibilityReport::default();
    for (k, (_, comp)) in z.terms.iter().enumerate() {
        match comp {
            Component::Curve(c) => {
                check_curve(k, c, z.ambient == super::Ambient::Pt, &mut rep)?
            }
            Component::Vertical(v) => check_curve(k, &v.fiber, true, &mut rep)?,
            Component::Point(p) => check_point(k, &p.coords, &mut rep),
        }
    }
    Ok(rep)
}

/// Convenience: error unless admissible.
pub fn require_admissible(z: &Cycle) -> Result<()> {
    let rep = check_admissible(z)?;
    if let Some(v) = rep.violations.first() {
        return Err(Error::InadmissibleInput(format!(
            "component {}: {}",
            v.component, v.message
        )));
    }
    Ok(())
}
