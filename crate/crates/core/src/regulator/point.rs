//! Abel-Jacobi values of cycles over a point: `CH^1(pt, 1)` and `CH^2(pt, 3)`.

use std::f64::consts::PI;

use num_complex::Complex64;
use num_rational::BigRational;
use rayon::prelude::*;

use super::RegulatorValue;
use crate::cycle::{boundary, check_admissible, real_position_check, Ambient, Component, Cycle, ParamCurve};
use crate::error::{Error, Result};
use crate::exact::{gauss::rat_to_f64, RationalFunction};
use crate::special::quad::{compensated_sum, gauss_kronrod_pieces, Quad};
use crate::special::{log_unchecked, CutAngle};
use crate::tracker::{arc_crossings, track_t, CutCrossing};

fn two_pi_i() -> Complex64 {
    Complex64::new(0.0, 2.0 * PI)
}

/// `Σ coeff · log z` for a 0-cycle in the line, modulo `2πi`.
pub fn aj_point_p1(z: &Cycle) -> Result<RegulatorValue> {
    if z.n != 1 || z.ambient != Ambient::Pt {
        return Err(Error::InadmissibleInput("expected a 0-cycle in the 1-cube over a point".into()));
    }
    let mut terms = Vec::new();
    for (c, comp) in &z.terms {
        let Component::Point(p) = comp else {
            return Err(Error::InadmissibleInput("expected point components".into()));
        };
        let x = p.coords[0].to_complex();
        if x.norm() == 0.0 {
            return Err(Error::SingularPoint("log at 0".into()));
        }
        terms.push(x.ln() * rat_to_f64(c));
    }
    Ok(RegulatorValue::new(compensated_sum(terms), 1, 1e-15 * (1 + z.terms.len()) as f64).reduced())
}

/// `∫_{T_f} log g dlog h` over the arcs of `T_f` oriented from poles to
/// zeros of `f`, and the crossing sum `Σ ε log h(p)` over the points where
/// `g` meets its cut on those arcs.
#[derive(Clone, Debug)]
pub struct ArcIntegral {
    pub integral: Quad,
    pub crossings: Vec<CutCrossing>,
    pub crossing_sum: Complex64,
    pub n_arcs: usize,
}

pub fn arc_log_dlog(
    f: &RationalFunction,
    g: &RationalFunction,
    h: &RationalFunction,
    cuts: [CutAngle; 3],
    tol: f64,
) -> Result<ArcIntegral> {
    let zero = Quad { value: Complex64::new(0.0, 0.0), error: 0.0 };
    if f.is_constant() {
        return Ok(ArcIntegral { integral: zero, crossings: vec![], crossing_sum: zero.value, n_arcs: 0 });
    }
    let arcs = track_t(f, cuts[0], tol)?;
    let crossings = arc_crossings(&arcs, g, cuts[1], tol)?;
    let crossing_sum = compensated_sum(
        crossings.iter().map(|x| log_unchecked(h.eval_f64(x.t), cuts[2]) * x.sign as f64),
    );
    let Some(first) = arcs.first() else {
        return Ok(ArcIntegral { integral: zero, crossings, crossing_sum, n_arcs: 0 });
    };
    let ctx = first.ctx.clone();
    let local = ctx.charts.pull_back_all(&[g, h])?;
    let h_const = h.is_constant();
    let mut parts = Vec::new();
    let mut err = 0.0;
    for (ai, arc) in arcs.iter().enumerate() {
        if h_const {
            break;
        }
        let (s0, s1) = arc.sigma_range();
        let mut breaks = vec![s0];
        let mut cs: Vec<f64> = crossings.iter().filter(|x| x.arc == ai).map(|x| x.sigma).collect();
        cs.sort_by(f64::total_cmp);
        // extra breaks every few units of sigma keep the adaptive rule local
        let pieces = ((s1 - s0) / 4.0).ceil().max(1.0) as usize;
        let mut grid: Vec<f64> = (1..pieces).map(|k| s0 + (s1 - s0) * k as f64 / pieces as f64).collect();
        grid.extend(cs);
        grid.sort_by(f64::total_cmp);
        breaks.extend(grid);
        breaks.push(s1);
        let lost = std::cell::Cell::new(None::<Error>);
        let q = gauss_kronrod_pieces(
            |sigma| match arc.point_at(sigma) {
                Ok(p) => {
                    let gv = local[p.chart][0].value(p.u);
                    let (_, hd) = local[p.chart][1].value_dlog(p.u);
                    log_unchecked(gv, cuts[1]) * hd * p.du
                }
                Err(e) => {
                    lost.set(Some(e));
                    Complex64::new(0.0, 0.0)
                }
            },
            &breaks,
            tol,
        );
        if let Some(e) = lost.take() {
            return Err(e);
        }
        // arcs run from the pole (large sigma) to the zero
        parts.push(-q.value);
        err += q.error + arc.residual * tol;
    }
    Ok(ArcIntegral {
        integral: Quad { value: compensated_sum(parts), error: err },
        crossings,
        crossing_sum,
        n_arcs: arcs.len(),
    })
}

/// `∫_C R³` on one curve in the 3-cube.
#[derive(Clone, Debug)]
pub struct ComponentIntegral {
    pub coeff: BigRational,
    pub label: String,
    /// `∫_{T_{z1}} log z2 dlog z3`
    pub arc_integral: Complex64,
    /// `Σ ε log z3` over `T_{z1} ∩ T_{z2}`
    pub crossing_sum: Complex64,
    pub n_crossings: usize,
    /// `2πi · arc_integral + (2πi)² · crossing_sum`
    pub value: Complex64,
    pub error: f64,
}

/// `∫_C R³ = 2πi ∫_{T_{z1}} log z2 dlog z3 + (2πi)² Σ ε log z3`. The term
/// `log z1 dlog z2 ∧ dlog z3` is a holomorphic 2-form and restricts to zero
/// on a curve.
pub fn component_integral(curve: &ParamCurve, cuts: &[CutAngle], tol: f64) -> Result<ComponentIntegral> {
    if curve.n() != 3 || cuts.len() != 3 {
        return Err(Error::InadmissibleInput("expected a curve in the 3-cube and three cuts".into()));
    }
    let [z1, z2, z3] = [&curve.coords[0], &curve.coords[1], &curve.coords[2]];
    let a = arc_log_dlog(z1, z2, z3, [cuts[0], cuts[1], cuts[2]], tol)?;
    let w = two_pi_i();
    let value = w * a.integral.value + w * w * a.crossing_sum;
    let err = 2.0 * PI * a.integral.error + 4.0 * PI * PI * tol * a.crossings.len() as f64;
    Ok(ComponentIntegral {
        coeff: BigRational::from_integer(1.into()),
        label: curve.label.clone(),
        arc_integral: a.integral.value,
        crossing_sum: a.crossing_sum,
        n_crossings: a.crossings.len(),
        value,
        error: err,
    })
}

#[derive(Clone, Debug)]
pub struct AjReport {
    pub value: RegulatorValue,
    /// Value before reduction.
    pub raw: Complex64,
    pub cuts: Vec<CutAngle>,
    pub components: Vec<ComponentIntegral>,
    pub diagnostics: Vec<String>,
}

/// `AJ(Z) = (1/(−2πi)) Σ coeff ∫_C R³` modulo `Z(2)`, for a closed,
/// admissible curve cycle in the 3-cube in real position for `cuts`.
pub fn aj_point_p2(z: &Cycle, cuts: &[CutAngle], tol: f64) -> Result<AjReport> {
    if z.ambient != Ambient::Pt || z.n != 3 {
        return Err(Error::InadmissibleInput("expected a curve cycle in the 3-cube over a point".into()));
    }
    let adm = check_admissible(z)?;
    if !adm.is_ok() {
        let msg: Vec<String> = adm.violations.iter().map(|v| format!("component {}: {}", v.component, v.message)).collect();
        return Err(Error::InadmissibleInput(msg.join("; ")));
    }
    let bd = boundary(z)?;
    if !bd.is_zero() {
        return Err(Error::NonClosedCycle(format!("boundary = {bd}")));
    }
    let rp = real_position_check(z, cuts, tol)?;
    if !rp.is_ok() {
        return Err(Error::TangentialCrossing(rp.violations.join("; ")));
    }
    let components = z
        .terms
        .par_iter()
        .map(|(c, comp)| match comp {
            Component::Curve(curve) => component_integral(curve, cuts, tol).map(|mut ci| {
                ci.coeff = c.clone();
                ci
            }),
            _ => Err(Error::InadmissibleInput("expected curve components".into())),
        })
        .collect::<Result<Vec<_>>>()?;
    let raw = compensated_sum(components.iter().map(|ci| ci.value * rat_to_f64(&ci.coeff))) / -two_pi_i();
    let error = components.iter().map(|ci| ci.error * rat_to_f64(&ci.coeff).abs()).sum::<f64>() / (2.0 * PI);
    let value = RegulatorValue::new(raw, 2, error.max(1e-13)).reduced();
    let mut diagnostics = vec!["holomorphic term log z1 dlog z2∧dlog z3 restricts to 0 on curves".to_string()];
    for ci in &components {
        diagnostics.push(format!(
            "component {} (coeff {}): {} crossing(s), ∫ = {:.15e}{:+.15e}i",
            if ci.label.is_empty() { "?" } else { &ci.label },
            ci.coeff,
            ci.n_crossings,
            ci.value.re,
            ci.value.im
        ));
    }
    if let Some(alt) = value.seam_alternate() {
        diagnostics.push(format!("near a cell edge; alternate representative {:.15e}{:+.15e}i", alt.re, alt.im));
    }
    Ok(AjReport { value, raw, cuts: cuts.to_vec(), components, diagnostics })
}

/// Like [`aj_point_p2`], but if the cycle is not in real position for the
/// given cuts or an arc cannot be tracked, retries with small rotations.
pub fn aj_point_p2_auto(z: &Cycle, cuts: &[CutAngle], tol: f64) -> Result<AjReport> {
    const NUDGES: [[f64; 3]; 5] = [
        [0.0, 0.0, 0.0],
        [0.11, -0.07, 0.05],
        [-0.13, 0.09, -0.06],
        [0.23, 0.17, -0.19],
        [-0.29, -0.21, 0.27],
    ];
    let mut last = None;
    for nudge in NUDGES {
        let c: Vec<CutAngle> = cuts.iter().zip(nudge).map(|(c, d)| CutAngle::new(c.theta() + d)).collect();
        match aj_point_p2(z, &c, tol) {
            Err(e @ (Error::TangentialCrossing(_) | Error::TrackingFailure(_))) => last = Some(e),
            other => return other,
        }
    }
    Err(last.expect("at least one attempt"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cycle::boundary::point_cycle;
    use crate::cycle::families::{v_curve, w_curve, xi_cycle};
    use crate::exact::GaussRational;
    use crate::special::dilog;

    const Z2: f64 = PI * PI / 6.0;

    #[test]
    fn p1_examples() {
        let m1 = point_cycle(vec![GaussRational::from_int(-1)]);
        assert!((aj_point_p1(&m1).unwrap().value - Complex64::new(0.0, PI)).norm() < 1e-15);
        let c = |k: i64| point_cycle(vec![GaussRational::from_int(k)]);
        let z = c(2).add(&c(3)).sub(&c(6));
        assert!(aj_point_p1(&z).unwrap().value.norm() < 1e-14);
        assert!(aj_point_p1(&c(2).sub(&c(2))).unwrap().value.norm() == 0.0);
    }

    #[test]
    fn v_and_w_integrals() {
        let cuts = [CutAngle::default(); 3];
        for (p, q) in [(1, 5), (2, 5), (7, 10)] {
            let a = GaussRational::from_ratio(p, q);
            let af = p as f64 / q as f64;
            let v = component_integral(&v_curve(&a), &cuts, 1e-12).unwrap();
            let want = -two_pi_i() * dilog(Complex64::new(af, 0.0)).unwrap();
            assert!((v.value - want).norm() < 1e-9, "V({af}): {} vs {want}", v.value);
            let w = component_integral(&w_curve(&a), &cuts, 1e-12).unwrap();
            let want = two_pi_i() * (Z2 - dilog(Complex64::new(1.0 - af, 0.0)).unwrap());
            assert!((w.value - want).norm() < 1e-9, "W({af}): {} vs {want}", w.value);
        }
    }

    #[test]
    fn xi_is_zeta2() {
        let a = GaussRational::from_ratio(2, 5);
        let r = aj_point_p2(&xi_cycle(&a), &[CutAngle::default(); 3], 1e-12).unwrap();
        assert!(r.value.distance_mod_lattice(Complex64::new(Z2, 0.0)) < 1e-8, "{:?}", r.value);
        let v = crate::cycle::families::v_cycle(&a);
        assert!(matches!(aj_point_p2(&v, &[CutAngle::default(); 3], 1e-12), Err(Error::NonClosedCycle(_))));
    }

    #[test]
    fn complex_parameter_with_crossings() {
        let a = GaussRational::from_parts(1, 2, 1, 3);
        let z = xi_cycle(&a);
        let r0 = aj_point_p2(&z, &[CutAngle::default(); 3], 1e-12).unwrap();
        assert!(r0.value.distance_mod_lattice(Complex64::new(Z2, 0.0)) < 1e-6, "{:?}", r0.value);
        let cuts = [CutAngle::new(0.0), CutAngle::new(2.8), CutAngle::new(0.0)];
        let r1 = aj_point_p2(&z, &cuts, 1e-12).unwrap();
        assert!(r1.components.iter().any(|c| c.n_crossings > 0), "{:?}", r1.diagnostics);
        assert!(r1.value.distance_mod_lattice(Complex64::new(Z2, 0.0)) < 1e-6, "{:?}", r1.value);
    }

    #[test]
    fn rotated_cuts() {
        let a = GaussRational::from_ratio(2, 5);
        let cuts = [CutAngle::new(0.3), CutAngle::new(-0.2), CutAngle::new(0.1)];
        let r = aj_point_p2(&xi_cycle(&a), &cuts, 1e-12).unwrap();
        assert!(r.value.distance_mod_lattice(Complex64::new(Z2, 0.0)) < 1e-6, "{:?} {:?}", r.value, r.diagnostics);
    }
}
