//! Closed loops in the parameter plane and their crossings with `T_f`.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::crossings::CutCrossing;
use crate::error::{Error, Result};
use crate::exact::RationalFunction;
use crate::special::quad::gauss_kronrod_pieces;
use crate::special::CutAngle;

/// A closed loop parametrized by `s in [0, 1]`, counterclockwise for circles.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
pub enum Loop {
    Circle { center: [f64; 2], radius: f64 },
    Polyline { vertices: Vec<[f64; 2]> },
}

fn c2(p: [f64; 2]) -> Complex64 {
    Complex64::new(p[0], p[1])
}

impl Loop {
    pub fn circle(center: Complex64, radius: f64) -> Self {
        Loop::Circle { center: [center.re, center.im], radius }
    }

    /// `(gamma(s), gamma'(s))`
    pub fn eval(&self, s: f64) -> (Complex64, Complex64) {
        match self {
            Loop::Circle { center, radius } => {
                let e = Complex64::from_polar(1.0, 2.0 * PI * s);
                (c2(*center) + e * *radius, e * Complex64::new(0.0, 2.0 * PI * radius))
            }
            Loop::Polyline { vertices } => {
                let n = vertices.len();
                let x = s.rem_euclid(1.0) * n as f64;
                let k = (x.floor() as usize).min(n - 1);
                let a = c2(vertices[k]);
                let b = c2(vertices[(k + 1) % n]);
                (a + (b - a) * (x - k as f64), (b - a) * n as f64)
            }
        }
    }

    /// Parameter values where the loop is not smooth.
    pub fn breakpoints(&self) -> Vec<f64> {
        match self {
            Loop::Circle { .. } => vec![0.0, 1.0],
            Loop::Polyline { vertices } => {
                let n = vertices.len();
                (0..=n).map(|k| k as f64 / n as f64).collect()
            }
        }
    }

    /// Distance from `p` to the loop.
    pub fn distance(&self, p: Complex64) -> f64 {
        match self {
            Loop::Circle { center, radius } => ((p - c2(*center)).norm() - radius).abs(),
            Loop::Polyline { vertices } => {
                let n = vertices.len();
                (0..n)
                    .map(|k| {
                        let a = c2(vertices[k]);
                        let b = c2(vertices[(k + 1) % n]);
                        let d = b - a;
                        let s = if d.norm_sqr() == 0.0 {
                            0.0
                        } else {
                            (((p - a) * d.conj()).re / d.norm_sqr()).clamp(0.0, 1.0)
                        };
                        (a + d * s - p).norm()
                    })
                    .fold(f64::INFINITY, f64::min)
            }
        }
    }

    /// A typical length scale of the loop.
    pub fn scale(&self) -> f64 {
        match self {
            Loop::Circle { radius, .. } => *radius,
            Loop::Polyline { vertices } => {
                let n = vertices.len();
                (0..n)
                    .map(|k| (c2(vertices[(k + 1) % n]) - c2(vertices[k])).norm())
                    .sum::<f64>()
                    / (2.0 * PI)
            }
        }
    }

    pub fn validate(&self) -> Result<()> {
        match self {
            Loop::Circle { radius, .. } if !(*radius > 0.0) => {
                Err(Error::InvalidSpec("loop radius must be positive".into()))
            }
            Loop::Polyline { vertices } if vertices.len() < 3 => {
                Err(Error::InvalidSpec("polyline loop needs at least 3 vertices".into()))
            }
            _ => Ok(()),
        }
    }
}

/// Errors if the loop passes within `margin * scale` of a zero or pole of any `f`.
pub fn check_clearance(gamma: &Loop, fs: &[&RationalFunction], margin: f64) -> Result<()> {
    let tol = margin * gamma.scale();
    for f in fs {
        if f.is_constant() {
            continue;
        }
        for (loc, _) in f.zeros_poles()?.entries {
            if let Some(p) = loc.to_complex() {
                if gamma.distance(p) < tol {
                    return Err(Error::TooCloseToSingularity(format!(
                        "loop passes within {:.3e} of a zero/pole of {f} at {p}",
                        gamma.distance(p)
                    )));
                }
            }
        }
    }
    Ok(())
}

/// Winding number of `f o gamma` around 0 by quadrature of `dlog f`.
pub fn winding_by_quadrature(f: &RationalFunction, gamma: &Loop) -> Result<f64> {
    let dlog = f.dlog()?;
    let q = gauss_kronrod_pieces(
        |s| {
            let (z, dz) = gamma.eval(s);
            dlog.eval_f64(z) * dz
        },
        &gamma.breakpoints(),
        1e-11,
    );
    Ok((q.value / Complex64::new(0.0, 2.0 * PI)).re)
}

/// Crossings of the loop with `T_f`. The sign is +1 where `arg f` increases
/// through the cut (counterclockwise), so the signs sum to the winding number.
pub fn loop_cut_crossings(gamma: &Loop, f: &RationalFunction, cut: CutAngle, tol: f64) -> Result<Vec<CutCrossing>> {
    gamma.validate()?;
    check_clearance(gamma, &[f], 1e-9)?;
    // s = 1 is evaluated as s = 0 so that the loop closes exactly
    let w_at = |s: f64| cut.rotate(f.eval_f64(gamma.eval(if s >= 1.0 { 0.0 } else { s }).0));
    let mut out = Vec::new();
    let bps = gamma.breakpoints();
    let mut grid = Vec::new();
    for w in bps.windows(2) {
        for k in 0..64 {
            grid.push(w[0] + (w[1] - w[0]) * k as f64 / 64.0);
        }
    }
    grid.push(1.0);
    for seg in grid.windows(2) {
        scan_interval(&w_at, seg[0], seg[1], 0, tol, &mut |s, sign| {
            let z = gamma.eval(s).0;
            out.push(CutCrossing { arc: 0, sigma: s, t: z, sign, g_value: f.eval_f64(z) });
        })?;
    }
    Ok(out)
}

/// Recursively subdivides until `arg w` changes by less than 0.3 rad, then
/// locates sign changes of `Im w` with `Re w < 0`. `sign` passed to `emit`
/// is `-sgn(d Im w / ds)`.
pub(crate) fn scan_interval<W, E>(w_at: &W, a: f64, b: f64, depth: u32, tol: f64, emit: &mut E) -> Result<()>
where
    W: Fn(f64) -> Complex64,
    E: FnMut(f64, i32),
{
    let wa = w_at(a);
    let wb = w_at(b);
    if !wa.is_finite() || !wb.is_finite() || wa.norm() == 0.0 || wb.norm() == 0.0 {
        return Err(Error::TooCloseToSingularity("value is zero or infinite on the path".into()));
    }
    let darg = (wb / wa).arg().abs();
    if darg > 0.3 && depth < 50 {
        let m = 0.5 * (a + b);
        scan_interval(w_at, a, m, depth + 1, tol, emit)?;
        return scan_interval(w_at, m, b, depth + 1, tol, emit);
    }
    if darg > 0.3 {
        return Err(Error::TooCloseToSingularity("argument varies too fast along the path".into()));
    }
    let ha = wa.im / wa.norm();
    let hb = wb.im / wb.norm();
    let neg = wa.re < 0.0 || wb.re < 0.0;
    if neg && ha.abs() < 1e-12 && hb.abs() < 1e-12 {
        return Err(Error::TangentialCrossing("path runs along the cut".into()));
    }
    if !neg {
        return Ok(());
    }
    // zero counts as positive, so each crossing lands in exactly one interval
    let pos = |h: f64| h >= 0.0;
    if pos(ha) != pos(hb) {
        let (mut lo, mut hi) = (a, b);
        let sa = pos(ha);
        for _ in 0..200 {
            let m = 0.5 * (lo + hi);
            if m <= lo || m >= hi {
                break;
            }
            let wm = w_at(m);
            if pos(wm.im) == sa {
                lo = m;
            } else {
                hi = m;
            }
        }
        let s = 0.5 * (lo + hi);
        // transversality: slope of h at the crossing
        let span = (b - a).abs().max(1e-300);
        let slope = (hb - ha) / span;
        if slope.abs() * span < tol * 1e-3 && (hb - ha).abs() < 1e-12 {
            return Err(Error::TangentialCrossing(format!("tangential crossing near s = {s}")));
        }
        let sign = if hb < ha { 1 } else { -1 };
        emit(s, sign);
    }
    Ok(())
}
