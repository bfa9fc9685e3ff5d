//! Real-position test: along a curve, the locus where `j` coordinates lie
//! on their cuts must have real dimension at most `2 - j`.

use super::{Component, Cycle, ParamCurve};
use crate::error::{Error, Result};
use crate::special::CutAngle;
use crate::tracker::{arc_crossings, track_t};

#[derive(Clone, Debug, Default, PartialEq)]
pub struct RealPositionReport {
    pub violations: Vec<String>,
}

impl RealPositionReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }
}

fn on_cut_const(c: &crate::exact::RationalFunction, cut: CutAngle) -> bool {
    c.constant_value()
        .map(|v| {
            let w = cut.rotate(v.to_complex());
            w.re < 0.0 && w.im.abs() <= 1e-12 * w.norm()
        })
        .unwrap_or(false)
}

fn check_curve(k: usize, c: &ParamCurve, cuts: &[CutAngle], tol: f64, rep: &mut RealPositionReport) -> Result<()> {
    let n = c.n();
    for i in 0..n {
        if on_cut_const(&c.coords[i], cuts[i]) && c.coords.iter().any(|z| !z.is_constant()) {
            rep.violations.push(format!(
                "component {k}: constant z{} lies on its cut along the whole curve",
                i + 1
            ));
        }
    }
    for i in 0..n {
        if c.coords[i].is_constant() {
            continue;
        }
        let arcs = track_t(&c.coords[i], cuts[i], tol)?;
        for j in 0..n {
            if j == i {
                continue;
            }
            let crossings = match arc_crossings(&arcs, &c.coords[j], cuts[j], tol) {
                Ok(x) => x,
                Err(Error::TangentialCrossing(_)) => {
                    rep.violations.push(format!(
                        "component {k}: z{} and z{} are simultaneously on their cuts along an arc",
                        i + 1,
                        j + 1
                    ));
                    continue;
                }
                Err(e) => return Err(e),
            };
            if j < i {
                continue;
            }
            for x in crossings {
                for (l, z) in c.coords.iter().enumerate() {
                    if l == i || l == j {
                        continue;
                    }
                    let w = cuts[l].rotate(z.eval_f64(x.t));
                    if w.re < 0.0 && w.im.abs() <= 1e-9 * w.norm() {
                        rep.violations.push(format!(
                            "component {k}: z{}, z{}, z{} all on their cuts at t = {}",
                            i + 1,
                            j + 1,
                            l + 1,
                            x.t
                        ));
                    }
                }
            }
        }
    }
    Ok(())
}

/// Checks every curve component with one cut angle per coordinate.
pub fn real_position_check(z: &Cycle, cuts: &[CutAngle], tol: f64) -> Result<RealPositionReport> {
    if cuts.len() != z.n {
        return Err(Error::InadmissibleInput(format!(
            "{} cut angles given for n = {}",
            cuts.len(),
            z.n
        )));
    }
    let mut rep = RealPositionReport::default();
    for (k, (_, comp)) in z.terms.iter().enumerate() {
        match comp {
            Component::Curve(c) => check_curve(k, c, cuts, tol, &mut rep)?,
            Component::Vertical(v) => check_curve(k, &v.fiber, cuts, tol, &mut rep)?,
            Component::Point(_) => {}
        }
    }
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cycle::families::{v_cycle, xi_cycle};
    use crate::cycle::{translate, Ambient};
    use crate::exact::{GaussRational, RationalFunction};
    use num_rational::BigRational;
    use num_traits::One;

    #[test]
    fn v_and_xi_are_in_real_position() {
        let a = GaussRational::from_ratio(2, 5);
        let cuts = [CutAngle::default(); 3];
        assert!(real_position_check(&v_cycle(&a), &cuts, 1e-10).unwrap().is_ok());
        assert!(real_position_check(&xi_cycle(&a), &cuts, 1e-10).unwrap().is_ok());
    }

    #[test]
    fn repeated_coordinate_is_flagged_and_translation_fixes_it() {
        let t = RationalFunction::var();
        let c = RationalFunction::constant(GaussRational::from_parts(1, 2, 1, 3));
        let z = Cycle::new(
            Ambient::Pt,
            3,
            vec![(BigRational::one(), Component::Curve(ParamCurve::new(vec![t.clone(), t, c])))],
        )
        .unwrap();
        let cuts = [CutAngle::default(); 3];
        assert!(!real_position_check(&z, &cuts, 1e-10).unwrap().is_ok());
        // alpha = (3 + 4i)/5 is unimodular and not a root of unity
        let alpha = GaussRational::from_parts(3, 5, 4, 5);
        let moved = translate(&z, &[GaussRational::one(), alpha, GaussRational::one()]).unwrap();
        assert!(real_position_check(&moved, &cuts, 1e-10).unwrap().is_ok());
    }
}
