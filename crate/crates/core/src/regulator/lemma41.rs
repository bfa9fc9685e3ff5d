//! Stokes check for `T_f`: for a compactly supported `(0,1)`-form
//! `η = φ dt̄` on the line,
//! `∫ dlog f ∧ η = 2πi ∫_{T_f} η − ∫ log f dη`,
//! with `T_f` oriented from the poles to the zeros of `f`.

use std::cell::Cell;
use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::exact::RationalFunction;
use crate::special::quad::{compensated_sum, gauss_kronrod_pieces};
use crate::special::{log_unchecked, CutAngle};
use crate::tracker::loops::scan_interval;
use crate::tracker::track_t;

/// `φ(t) = amplitude · exp(−1/(1 − |t − c|²/ρ²))` inside the disk `|t − c| < ρ`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Bump {
    pub center: Complex64,
    pub radius: f64,
    pub amplitude: f64,
}

impl Bump {
    pub fn new(center: Complex64, radius: f64) -> Self {
        Self { center, radius, amplitude: 1.0 }
    }

    pub fn zero() -> Self {
        Self { center: Complex64::new(0.0, 0.0), radius: 1.0, amplitude: 0.0 }
    }

    fn q(&self, t: Complex64) -> f64 {
        (t - self.center).norm_sqr() / (self.radius * self.radius)
    }

    pub fn value(&self, t: Complex64) -> f64 {
        let q = self.q(t);
        if q >= 1.0 {
            0.0
        } else {
            self.amplitude * (-1.0 / (1.0 - q)).exp()
        }
    }

    /// `∂φ/∂t`
    pub fn d_dt(&self, t: Complex64) -> Complex64 {
        let q = self.q(t);
        if q >= 1.0 {
            return Complex64::new(0.0, 0.0);
        }
        let dq = (t - self.center).conj() / (self.radius * self.radius);
        -dq * self.value(t) / ((1.0 - q) * (1.0 - q))
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Lemma41Report {
    /// `∫ dlog f ∧ η`
    pub lhs: Complex64,
    /// `2πi ∫_{T_f} η`
    pub arc_term: Complex64,
    /// `−∫ log f dη`
    pub d_term: Complex64,
    pub residual: f64,
}

/// `∫∫ F(t) dx dy` over a disk, as an integral over rays from `c`, with the
/// radial integral split where `split(θ)` says.
fn polar<F, S>(c: Complex64, r_max: f64, f: F, split: S, theta_breaks: &[f64], tol: f64) -> Complex64
where
    F: Fn(Complex64) -> Complex64,
    S: Fn(f64) -> Vec<f64>,
{
    let mut breaks = vec![0.0];
    breaks.extend(theta_breaks.iter().copied().filter(|&x| x > 0.0 && x < 2.0 * PI));
    breaks.push(2.0 * PI);
    breaks.sort_by(f64::total_cmp);
    breaks.dedup();
    gauss_kronrod_pieces(
        |th| {
            let e = Complex64::from_polar(1.0, th);
            let mut rb = vec![0.0];
            rb.extend(split(th).into_iter().filter(|&r| r > 0.0 && r < r_max));
            rb.push(r_max);
            rb.sort_by(f64::total_cmp);
            gauss_kronrod_pieces(|r| f(c + e * r) * r, &rb, tol * 1e-2).value
        },
        &breaks,
        tol,
    )
    .value
}

pub fn lemma41_check(f: &RationalFunction, bump: &Bump, tol: f64) -> Result<Lemma41Report> {
    let zero = Complex64::new(0.0, 0.0);
    if bump.amplitude == 0.0 {
        return Ok(Lemma41Report { lhs: zero, arc_term: zero, d_term: zero, residual: 0.0 });
    }
    if f.is_constant() {
        return Err(Error::ConstantFunction);
    }
    let cut = CutAngle::default();
    let (c, rho) = (bump.center, bump.radius);
    let div = f.zeros_poles()?;
    let special: Vec<(Complex64, i64)> = div
        .entries
        .iter()
        .filter_map(|(loc, m)| loc.to_complex().map(|p| (p, *m)))
        .collect();

    // dlog f = Σ m_k dt/(t − p_k); each term in polar coordinates about p_k,
    // where the integrand is bounded. dt∧dt̄ = −2i dx∧dy.
    let mut lhs_parts = Vec::new();
    for &(p, m) in &special {
        let d = (p - c).norm();
        let (o, r_max) = if d >= rho { (c, rho) } else { (p, d + rho) };
        let v = polar(o, r_max, |t| Complex64::new(bump.value(t), 0.0) / (t - p), |_| vec![], &[], tol);
        lhs_parts.push(v * m as f64);
    }
    let lhs = compensated_sum(lhs_parts) * Complex64::new(0.0, -2.0);

    // 2πi ∫_{T_f} φ dt̄ along arcs from pole to zero (decreasing sigma)
    let arcs = track_t(f, cut, tol)?;
    let lost = Cell::new(None::<Error>);
    let mut arc_parts = Vec::new();
    for arc in &arcs {
        let mut breaks: Vec<f64> = arc.samples.iter().map(|s| s.sigma).collect();
        breaks.dedup();
        let charts = &arc.ctx.charts;
        let q = gauss_kronrod_pieces(
            |sigma| match arc.point_at(sigma) {
                Ok(p) => {
                    let ch = &charts.charts[p.chart];
                    let t = ch.to_global(p.u);
                    let phi = bump.value(t);
                    if phi == 0.0 {
                        return zero;
                    }
                    Complex64::new(phi, 0.0) * (ch.dt_du(p.u) * p.du).conj()
                }
                Err(e) => {
                    lost.set(Some(e));
                    zero
                }
            },
            &breaks,
            tol,
        );
        if let Some(e) = lost.take() {
            return Err(e);
        }
        arc_parts.push(-q.value);
    }
    let arc_term = compensated_sum(arc_parts) * Complex64::new(0.0, 2.0 * PI);

    // −∫ log f ∂_tφ dt∧dt̄ = 2i ∫ log f ∂_tφ dx dy; rays from the bump center,
    // split where they cross T_f or pass a zero/pole
    let theta_breaks: Vec<f64> = special
        .iter()
        .filter(|(p, _)| (p - c).norm() < rho)
        .map(|(p, _)| (p - c).arg().rem_euclid(2.0 * PI))
        .collect();
    let split = |th: f64| -> Vec<f64> {
        let e = Complex64::from_polar(1.0, th);
        let w_at = |r: f64| f.eval_f64(c + e * r);
        let mut out = Vec::new();
        let n = 32;
        for k in 0..n {
            let a = rho * k as f64 / n as f64;
            let b = rho * (k + 1) as f64 / n as f64;
            let _ = scan_interval(&w_at, a, b, 0, 1e-14, &mut |r, _| out.push(r));
        }
        for (p, _) in &special {
            let r = ((p - c) * e.conj()).re;
            if r > 0.0 && r < rho {
                out.push(r);
            }
        }
        out
    };
    let d_term = polar(
        c,
        rho,
        |t| {
            let g = bump.d_dt(t);
            if g == zero {
                return zero;
            }
            log_unchecked(f.eval_f64(t), cut) * g
        },
        split,
        &theta_breaks,
        tol,
    ) * Complex64::new(0.0, 2.0);
    let residual = (lhs - arc_term - d_term).norm();
    Ok(Lemma41Report { lhs, arc_term, d_term, residual })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{parse_rational_function, Params};

    fn rf(s: &str) -> RationalFunction {
        parse_rational_function(s, &Params::new()).unwrap()
    }

    #[test]
    fn zero_form() {
        let r = lemma41_check(&rf("t"), &Bump::zero(), 1e-10).unwrap();
        assert_eq!(r.residual, 0.0);
    }

    #[test]
    fn bump_away_from_the_cut() {
        let r = lemma41_check(&rf("t"), &Bump::new(Complex64::new(1.0, 0.0), 0.8), 1e-10).unwrap();
        assert!(r.arc_term.norm() < 1e-14);
        assert!(r.residual < 1e-5, "{r:?}");
    }

    #[test]
    fn bump_over_zero_and_cut() {
        let r = lemma41_check(&rf("t - 2/5"), &Bump::new(Complex64::new(0.2, 0.1), 0.7), 1e-10).unwrap();
        assert!(r.arc_term.norm() > 1e-3);
        assert!(r.residual < 1e-5, "{r:?}");
    }
}
