//! Points where a second function lands on its cut along the arcs of `T_f`.

use num_complex::Complex64;

use super::arc::TArc;
use super::chart::FloatRf;
use super::loops::scan_interval;
use crate::error::{Error, Result};
use crate::exact::RationalFunction;
use crate::special::CutAngle;

#[derive(Clone, Debug, PartialEq)]
pub struct CutCrossing {
    /// Index of the arc (0 for loops).
    pub arc: usize,
    /// Arc parameter `sigma`, or loop parameter.
    pub sigma: f64,
    pub t: Complex64,
    pub sign: i32,
    /// Value of the second function at the crossing.
    pub g_value: Complex64,
}

/// Crossings of `g` with its cut ray along each arc.
///
/// The sign is `sgn(d Im(g e^{-i theta'}) / d tau)` with `tau` the arc
/// parameter in its pole-to-zero orientation: +1 when `arg g` turns
/// clockwise through the cut while moving towards the zero of `f`. With
/// this choice the crossing term compensates exactly for the jump of
/// `log g` along the arc.
pub fn arc_crossings(arcs: &[TArc], g: &RationalFunction, cut_g: CutAngle, tol: f64) -> Result<Vec<CutCrossing>> {
    if g.is_zero() {
        return Err(Error::ZeroFunction);
    }
    let mut out = Vec::new();
    let Some(first) = arcs.first() else { return Ok(out) };
    let ctx = first.ctx.clone();
    if g.is_constant() {
        let w = cut_g.rotate(g.eval_f64(Complex64::new(0.0, 0.0)));
        if w.re < 0.0 && w.im.abs() < 1e-12 * w.norm() {
            return Err(Error::TangentialCrossing(format!("constant {g} lies on its cut")));
        }
        return Ok(out);
    }
    let g_loc: Vec<FloatRf> = ctx
        .charts
        .charts
        .iter()
        .map(|c| c.pull_back(g).map(|h| FloatRf::new(&h)))
        .collect::<Result<_>>()?;
    for (ai, arc) in arcs.iter().enumerate() {
        let w_at = |sigma: f64| -> Complex64 {
            match arc.point_at(sigma) {
                Ok(p) => cut_g.rotate(g_loc[p.chart].value(p.u)),
                Err(_) => Complex64::new(f64::NAN, 0.0),
            }
        };
        for pair in arc.samples.windows(2) {
            let (a, b) = (pair[0].sigma, pair[1].sigma);
            scan_interval(&w_at, a, b, 0, tol, &mut |sigma, sign| {
                if let Ok(p) = arc.point_at(sigma) {
                    let t = ctx.charts.charts[p.chart].to_global(p.u);
                    out.push(CutCrossing { arc: ai, sigma, t, sign, g_value: g_loc[p.chart].value(p.u) });
                }
            })
            .map_err(|e| match e {
                Error::TooCloseToSingularity(m) => Error::TangentialCrossing(m),
                other => other,
            })?;
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{parse_rational_function, Params};
    use crate::tracker::track_t;

    fn rf(s: &str) -> RationalFunction {
        parse_rational_function(s, &Params::new()).unwrap()
    }

    #[test]
    fn no_crossings_on_v_arc() {
        let arcs = track_t(&rf("1 - 2/5/t"), CutAngle::default(), 1e-10).unwrap();
        let c = arc_crossings(&arcs, &rf("1 - t"), CutAngle::default(), 1e-10).unwrap();
        assert!(c.is_empty());
    }

    #[test]
    fn identical_functions_are_tangential() {
        let arcs = track_t(&rf("t^2"), CutAngle::default(), 1e-10).unwrap();
        let r = arc_crossings(&arcs, &rf("t^2"), CutAngle::default(), 1e-10);
        assert!(matches!(r, Err(Error::TangentialCrossing(_))), "{r:?}");
    }

    #[test]
    fn crossings_are_on_the_cut() {
        let arcs = track_t(&rf("t - 1/2 - i/3"), CutAngle::default(), 1e-10).unwrap();
        let c = arc_crossings(&arcs, &rf("1 - t"), CutAngle::default(), 1e-10).unwrap();
        // the arc is the horizontal ray Im t = 1/3, Re t < 1/2; 1 - t is never real
        assert!(c.is_empty());
        let arcs = track_t(&rf("t^2 + t + 1"), CutAngle::new(0.4), 1e-10).unwrap();
        let c = arc_crossings(&arcs, &rf("t - 1/3"), CutAngle::default(), 1e-10).unwrap();
        for x in &c {
            assert!(x.g_value.im.abs() < 1e-10 * x.g_value.norm() && x.g_value.re < 0.0);
        }
    }
}
