//! Continuation of the branches of `T_f = f^{-1}(e^{i theta} R^-)`.
//!
//! A point of `T_f` solves `N(t) + s e^{i theta} D(t) = 0` for some `s > 0`.
//! Branches are seeded at the zeros of `f` from their Puiseux expansions,
//! followed in `sigma = ln s` by a predictor-corrector scheme, and stopped
//! inside the chart of the pole they reach. Sampling runs over
//! `s in [1e-8, 1e8]` and beyond, inside the local charts, until the arc is
//! within about 1e-15 (relative) of its endpoints.

use std::f64::consts::PI;
use std::sync::Arc;

use num_complex::Complex64;

use super::chart::{Center, ChartSet, FloatRf};
use crate::error::{Error, Result};
use crate::exact::roots::aberth;
use crate::exact::{ExtValue, Location, Place, RationalFunction};
use crate::special::CutAngle;

const EPS_END_EXACT: f64 = 1e-15;
const EPS_END_NUMERIC: f64 = 1e-7;
const MIN_STEP: f64 = 1e-9;
const MAX_STEP: f64 = 1.0;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ArcSample {
    pub sigma: f64,
    pub chart: usize,
    pub u: Complex64,
}

/// A point on an arc with its local chart data.
#[derive(Clone, Copy, Debug)]
pub struct ArcPoint {
    pub sigma: f64,
    pub chart: usize,
    pub u: Complex64,
    /// `du/dsigma`
    pub du: Complex64,
}

/// Shared data of all arcs of one function.
#[derive(Debug)]
pub struct TrackContext {
    pub f: RationalFunction,
    pub cut: CutAngle,
    pub charts: ChartSet,
    f_local: Vec<FloatRf>,
    /// Divisor order of f at each chart center (0 for the global chart).
    orders: Vec<i64>,
}

impl TrackContext {
    fn residual_and_derivs(&self, k: usize, sigma: f64, u: Complex64) -> (Complex64, Complex64, Complex64) {
        let (n, d, dn, dd) = self.f_local[k].parts(u);
        let se = self.cut.direction() * sigma.exp();
        (n + se * d, dn + se * dd, -se * d)
    }

    /// `du/dsigma` along the arc.
    pub fn du_dsigma(&self, k: usize, sigma: f64, u: Complex64) -> Complex64 {
        let (_, fu, fs) = self.residual_and_derivs(k, sigma, u);
        fs / fu
    }

    fn newton(&self, k: usize, sigma: f64, mut u: Complex64) -> Option<Complex64> {
        for _ in 0..12 {
            let (r, fu, _) = self.residual_and_derivs(k, sigma, u);
            if fu.norm() == 0.0 || !fu.is_finite() {
                return None;
            }
            let step = r / fu;
            u -= step;
            if !u.is_finite() {
                return None;
            }
            if step.norm() <= 1e-15 * u.norm().max(1e-300) {
                return Some(u);
            }
        }
        // accept a slightly weaker convergence
        let (r, fu, _) = self.residual_and_derivs(k, sigma, u);
        ((r / fu).norm() <= 1e-12 * u.norm().max(1e-300)).then_some(u)
    }

    fn scale(&self, k: usize, u: Complex64) -> f64 {
        if k != 0 {
            // a center where f is regular (infinity with f(inf) on the cut)
            // is crossed, not approached
            if self.orders[k] == 0 {
                return u.norm().max(self.charts.charts[k].radius);
            }
            return u.norm();
        }
        let mut s = 1.0 + u.norm();
        for ch in self.charts.charts.iter().skip(1) {
            if ch.center != Center::Infinity {
                s = s.min((u - ch.c).norm());
            }
        }
        s
    }

    fn eps_end(&self, k: usize) -> f64 {
        if self.charts.charts[k].exact {
            EPS_END_EXACT
        } else {
            EPS_END_NUMERIC
        }
    }

    /// Puiseux roots `u` of `f = -s e^{i theta}` at a chart center of order `m != 0`.
    fn puiseux(&self, k: usize, sigma: f64) -> Vec<Complex64> {
        let m = self.orders[k];
        let lead = self.f_local[k].leading_coefficient(m);
        let target = -self.cut.direction() * sigma.exp() / lead;
        let ma = m.unsigned_abs() as usize;
        // u^m = target
        let w = if m > 0 { target } else { 1.0 / target };
        (0..ma)
            .map(|j| {
                let arg = (w.arg() + 2.0 * PI * j as f64) / ma as f64;
                Complex64::from_polar(w.norm().powf(1.0 / ma as f64), arg)
            })
            .collect()
    }

    /// Point in chart `k` at parameter `sigma`, by Newton from a nearby sample.
    pub fn point_from(&self, s: &ArcSample, sigma: f64) -> Option<ArcPoint> {
        let mut u = s.u;
        let mut sig = s.sigma;
        // substeps keep the predictor inside the Newton basin
        let n_sub = ((sigma - s.sigma).abs() / 0.05).ceil().max(1.0) as usize;
        let h = (sigma - s.sigma) / n_sub as f64;
        for _ in 0..n_sub {
            let du = self.du_dsigma(s.chart, sig, u);
            sig += h;
            u = self.newton(s.chart, sig, u + du * h)?;
        }
        Some(ArcPoint { sigma, chart: s.chart, u, du: self.du_dsigma(s.chart, sigma, u) })
    }

    pub fn f_local(&self, k: usize) -> &FloatRf {
        &self.f_local[k]
    }
}

/// One oriented branch of `T_f`, from a pole to a zero of `f`.
#[derive(Clone, Debug)]
pub struct TArc {
    pub ctx: Arc<TrackContext>,
    /// Pole of f where the arc starts.
    pub start: Location,
    /// Zero of f where the arc ends.
    pub end: Location,
    /// Samples in increasing `sigma` (from the zero end to the pole end);
    /// the arc orientation is decreasing `sigma`.
    pub samples: Vec<ArcSample>,
    /// Maximum angular distance of `f(t)` from the cut ray over the samples.
    pub residual: f64,
}

impl TArc {
    pub fn cut(&self) -> CutAngle {
        self.ctx.cut
    }

    /// `(sigma at the zero end, sigma at the pole end)`
    pub fn sigma_range(&self) -> (f64, f64) {
        (self.samples[0].sigma, self.samples[self.samples.len() - 1].sigma)
    }

    fn nearest_sample(&self, sigma: f64) -> &ArcSample {
        let idx = self.samples.partition_point(|s| s.sigma < sigma);
        let cands = [idx.saturating_sub(1), idx.min(self.samples.len() - 1)];
        cands
            .iter()
            .map(|&i| &self.samples[i])
            .min_by(|a, b| (a.sigma - sigma).abs().total_cmp(&(b.sigma - sigma).abs()))
            .expect("nonempty samples")
    }

    pub fn point_at(&self, sigma: f64) -> Result<ArcPoint> {
        let s = self.nearest_sample(sigma);
        self.ctx
            .point_from(s, sigma)
            .ok_or_else(|| Error::TrackingFailure(format!("lost the arc at sigma = {sigma}")))
    }

    pub fn t_at(&self, sigma: f64) -> Result<Complex64> {
        let p = self.point_at(sigma)?;
        Ok(self.ctx.charts.charts[p.chart].to_global(p.u))
    }

    pub fn start_label(&self) -> String {
        location_label(&self.start)
    }

    pub fn end_label(&self) -> String {
        location_label(&self.end)
    }

    /// Global parameter values of the samples in arc orientation (pole first).
    pub fn polyline(&self) -> Vec<Complex64> {
        self.samples
            .iter()
            .rev()
            .map(|s| self.ctx.charts.charts[s.chart].to_global(s.u))
            .collect()
    }
}

fn location_label(l: &Location) -> String {
    match l {
        Location::Exact(p) => p.to_string(),
        Location::Numeric(v) => {
            let z = v.to_complex();
            format!("{:.12}{:+.12}i", z.re, z.im)
        }
    }
}

fn location_for_chart(ctx: &TrackContext, k: usize, numeric: &[(usize, Location)]) -> Location {
    if let Some((_, loc)) = numeric.iter().find(|(j, _)| *j == k) {
        return loc.clone();
    }
    Location::Exact(ctx.charts.charts[k].place().unwrap_or(Place::Infinity))
}

/// Tracks every branch of `T_f` for the given cut.
/// Errors if a critical value of `f` lies on the cut ray; `T_f` then branches
/// at the critical point and is not a union of disjoint arcs.
fn check_critical_values(f: &RationalFunction, cut: CutAngle) -> Result<()> {
    let on_cut = |v: Complex64| {
        let w = cut.rotate(v);
        w.re < 0.0 && w.im.abs() <= 1e-9 * w.norm()
    };
    let crit = &(&f.num().derivative() * f.den()) - &(f.num() * &f.den().derivative());
    if !crit.is_constant() {
        for c in aberth(&crit.to_complex_coeffs()) {
            let v = f.eval_f64(c);
            if v.is_finite() && v.norm() > 0.0 && on_cut(v) {
                return Err(Error::TrackingFailure(format!(
                    "critical value {v} of f at t = {c} lies on the cut; rotate the cut"
                )));
            }
        }
    }
    if let ExtValue::Finite(c) = f.eval_at_infinity() {
        let g = f - &RationalFunction::constant(c.clone());
        if !c.is_zero() && !g.is_zero() && g.order_at(&Place::Infinity) >= 2 && on_cut(c.to_complex()) {
            return Err(Error::TrackingFailure(format!(
                "critical value {c} of f at infinity lies on the cut; rotate the cut"
            )));
        }
    }
    Ok(())
}

pub fn track_t(f: &RationalFunction, cut: CutAngle, tol: f64) -> Result<Vec<TArc>> {
    check_critical_values(f, cut)?;
    let div = f.zeros_poles()?;
    let locs: Vec<Location> = div.entries.iter().map(|(l, _)| l.clone()).collect();
    let charts = ChartSet::new(&locs);
    let f_local = charts
        .charts
        .iter()
        .map(|c| c.pull_back(f).map(|g| FloatRf::new(&g)))
        .collect::<Result<Vec<_>>>()?;
    let mut orders = vec![0i64; charts.charts.len()];
    let mut numeric = Vec::new();
    for (loc, m) in &div.entries {
        let k = match loc {
            Location::Exact(p) => charts.chart_of_place(p),
            Location::Numeric(v) => charts.chart_near(v.to_complex()),
        };
        if let Some(k) = k {
            orders[k] += m;
            if !loc.is_exact() {
                numeric.push((k, loc.clone()));
            }
        }
    }
    let ctx = Arc::new(TrackContext { f: f.clone(), cut, charts, f_local, orders });

    // seeds at each zero
    let mut seeds = Vec::new();
    for (k, &m) in ctx.orders.iter().enumerate() {
        if m <= 0 {
            continue;
        }
        let lead = ctx.f_local[k].leading_coefficient(m);
        let r = ctx.charts.charts[k].radius;
        let umag = ctx.eps_end(k) * r;
        let sigma0 = lead.norm().ln() + m as f64 * umag.ln();
        for u0 in ctx.puiseux(k, sigma0) {
            let u = ctx
                .newton(k, sigma0, u0)
                .ok_or_else(|| Error::TrackingFailure("seed did not converge".into()))?;
            seeds.push((k, sigma0, u));
        }
    }

    let sigma_guard = {
        let mut g: f64 = 60.0;
        for (k, &m) in ctx.orders.iter().enumerate() {
            if m < 0 {
                let lead = ctx.f_local[k].leading_coefficient(m);
                let r = ctx.charts.charts[k].radius;
                g = g.max(lead.norm().ln() + m as f64 * (ctx.eps_end(k) * r).ln() + 60.0);
            }
        }
        g
    };

    let mut arcs = Vec::new();
    let mut used_endpoints: Vec<(usize, usize)> = Vec::new();
    for (k0, sigma0, u0) in seeds {
        let samples = follow(&ctx, k0, sigma0, u0, sigma_guard)?;
        let last = *samples.last().expect("nonempty");
        // certify the pole end against the Puiseux roots
        let k = last.chart;
        if ctx.orders[k] >= 0 {
            return Err(Error::TrackingFailure("branch did not reach a pole".into()));
        }
        let pred = ctx.puiseux(k, last.sigma);
        let (j, dist) = pred
            .iter()
            .enumerate()
            .map(|(j, p)| (j, (p - last.u).norm() / p.norm()))
            .min_by(|a, b| a.1.total_cmp(&b.1))
            .expect("pole of positive order");
        if dist > 0.1 || used_endpoints.contains(&(k, j)) {
            return Err(Error::TrackingFailure(
                "branch collision: two branches reached the same pole branch".into(),
            ));
        }
        used_endpoints.push((k, j));
        let residual = samples
            .iter()
            .map(|s| {
                let w = ctx.cut.rotate(ctx.f_local[s.chart].value(s.u));
                (-w).arg().abs()
            })
            .fold(0.0, f64::max);
        if residual > tol.max(1e-9) {
            return Err(Error::TrackingFailure(format!("arc residual {residual:e} exceeds tolerance")));
        }
        arcs.push(TArc {
            ctx: ctx.clone(),
            start: location_for_chart(&ctx, k, &numeric),
            end: location_for_chart(&ctx, k0, &numeric),
            samples,
            residual,
        });
    }
    Ok(arcs)
}

fn follow(ctx: &TrackContext, k0: usize, sigma0: f64, u0: Complex64, guard: f64) -> Result<Vec<ArcSample>> {
    let mut samples = vec![ArcSample { sigma: sigma0, chart: k0, u: u0 }];
    let (mut k, mut sigma, mut u) = (k0, sigma0, u0);
    let mut h = 0.1;
    loop {
        if ctx.orders[k] < 0 && u.norm() <= ctx.eps_end(k) * ctx.charts.charts[k].radius {
            return Ok(samples);
        }
        if sigma > guard {
            return Err(Error::TrackingFailure("continuation did not terminate at a pole".into()));
        }
        let du = ctx.du_dsigma(k, sigma, u);
        let pred = u + du * h;
        let scale = ctx.scale(k, u);
        let accepted = ctx.newton(k, sigma + h, pred).filter(|uc| {
            let mv = (uc - u).norm();
            mv <= 0.15 * scale && (uc - pred).norm() <= 0.1 * mv + 1e-13 * scale
        });
        match accepted {
            Some(uc) => {
                sigma += h;
                u = uc;
                let kn = ctx.charts.best_chart(k, u);
                if kn != k {
                    let t = ctx.charts.charts[k].to_global(u);
                    let un = ctx.charts.charts[kn].from_global(t);
                    u = ctx
                        .newton(kn, sigma, un)
                        .ok_or_else(|| Error::TrackingFailure("chart change failed".into()))?;
                    k = kn;
                }
                samples.push(ArcSample { sigma, chart: k, u });
                h = (h * 1.5).min(MAX_STEP);
            }
            None => {
                h *= 0.5;
                if h < MIN_STEP {
                    return Err(Error::TrackingFailure(format!(
                        "step size underflow near t = {}",
                        ctx.charts.charts[k].to_global(u)
                    )));
                }
            }
        }
    }
}
