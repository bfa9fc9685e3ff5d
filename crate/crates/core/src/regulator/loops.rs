//! Pairings of `R²` currents with closed loops in the parameter line.

use std::f64::consts::PI;

use num_complex::Complex64;
use num_rational::BigRational;

use super::RegulatorValue;
use crate::cycle::{boundary, Ambient, Component, Cycle};
use crate::error::{Error, Result};
use crate::exact::{gauss::rat_to_f64, Place, RationalFunction};
use crate::special::quad::{compensated_sum, gauss_kronrod_pieces, Quad};
use crate::special::{log_unchecked, CutAngle};
use crate::tracker::loops::check_clearance;
use crate::tracker::{loop_cut_crossings, CutCrossing, Loop};

/// `∫_γ log f dlog g − 2πi Σ ε log g(p)` for one pair.
#[derive(Clone, Debug)]
pub struct PairingTerm {
    pub integral: Quad,
    pub crossings: Vec<CutCrossing>,
    pub crossing_sum: Complex64,
    pub value: Complex64,
}

fn dlog_along(g: &RationalFunction, gamma: &Loop, s: f64) -> Complex64 {
    let (z, dz) = gamma.eval(s);
    let (v, dv) = g.eval_with_derivative(z);
    dv / v * dz
}

pub fn pair_loop(
    f: &RationalFunction,
    g: &RationalFunction,
    gamma: &Loop,
    cut_f: CutAngle,
    cut_g: CutAngle,
    tol: f64,
) -> Result<PairingTerm> {
    gamma.validate()?;
    check_clearance(gamma, &[f, g], 1e-9)?;
    let crossings = if f.is_constant() {
        let v = f.eval_f64(Complex64::new(0.0, 0.0));
        if cut_f.on_cut(v) {
            return Err(Error::TangentialCrossing(format!("constant {f} lies on its cut")));
        }
        vec![]
    } else {
        loop_cut_crossings(gamma, f, cut_f, tol)?
    };
    let crossing_sum =
        compensated_sum(crossings.iter().map(|x| log_unchecked(g.eval_f64(x.t), cut_g) * x.sign as f64));
    let integral = if g.is_constant() {
        Quad { value: Complex64::new(0.0, 0.0), error: 0.0 }
    } else {
        let mut breaks = gamma.breakpoints();
        breaks.extend(crossings.iter().map(|x| x.sigma));
        breaks.sort_by(f64::total_cmp);
        breaks.dedup();
        gauss_kronrod_pieces(
            |s| log_unchecked(f.eval_f64(gamma.eval(s).0), cut_f) * dlog_along(g, gamma, s),
            &breaks,
            tol,
        )
    };
    let value = integral.value - Complex64::new(0.0, 2.0 * PI) * crossing_sum;
    Ok(PairingTerm { integral, crossings, crossing_sum, value })
}

#[derive(Clone, Debug)]
pub struct PairingReport {
    pub value: RegulatorValue,
    pub raw: Complex64,
    pub terms: Vec<(BigRational, PairingTerm)>,
    pub diagnostics: Vec<String>,
}

/// `∫_γ R_Z` for a closed cycle over the line with `n = 2`: graph
/// components contribute `log f dlog g − 2πi log g δ_{T_f}`, vertical ones
/// nothing.
pub fn loop_pairing_n2(z: &Cycle, gamma: &Loop, cuts: [CutAngle; 2], tol: f64) -> Result<PairingReport> {
    if z.ambient != Ambient::P1 || z.n != 2 {
        return Err(Error::InadmissibleInput("expected a cycle over the line with n = 2".into()));
    }
    let bd = boundary(z)?;
    if !bd.is_zero() {
        return Err(Error::NonClosedCycle(format!("boundary = {bd}")));
    }
    let margin = 1e-9 * gamma.scale();
    for (_, comp) in &z.terms {
        if let Component::Vertical(v) = comp {
            if let Place::Finite(x) = &v.basepoint {
                let d = gamma.distance(x.to_complex());
                if d < margin {
                    return Err(Error::TooCloseToSingularity(format!("loop passes within {d:.3e} of basepoint {x}")));
                }
            }
        }
    }
    let mut terms = Vec::new();
    let mut diagnostics = Vec::new();
    for (c, comp) in &z.terms {
        match comp {
            Component::Curve(curve) => {
                let t = pair_loop(&curve.coords[0], &curve.coords[1], gamma, cuts[0], cuts[1], tol)?;
                diagnostics.push(format!(
                    "graph ({}, {}): {} crossing(s) with T_f",
                    curve.coords[0],
                    curve.coords[1],
                    t.crossings.len()
                ));
                terms.push((c.clone(), t));
            }
            Component::Vertical(v) => diagnostics.push(format!("vertical over {}: contributes 0", v.basepoint)),
            Component::Point(_) => return Err(Error::InadmissibleInput("expected curve components".into())),
        }
    }
    let raw = compensated_sum(terms.iter().map(|(c, t)| t.value * rat_to_f64(c)));
    let error = terms.iter().map(|(c, t)| (t.integral.error + tol) * rat_to_f64(c).abs()).sum::<f64>();
    let value = RegulatorValue::new(raw, 2, error.max(1e-13)).reduced();
    Ok(PairingReport { value, raw, terms, diagnostics })
}

/// `∫_γ R(f_1, f_2)` for the symbol `{f_1, f_2}`. The value is only
/// meaningful modulo `Q(2)`; it is reported reduced modulo `Z(2)`.
pub fn milnor_pair(fs: &[RationalFunction], gamma: &Loop, tol: f64) -> Result<(RegulatorValue, PairingTerm)> {
    if fs.len() != 2 {
        return Err(Error::InadmissibleInput(format!("expected 2 functions, got {}", fs.len())));
    }
    let t = pair_loop(&fs[0], &fs[1], gamma, CutAngle::default(), CutAngle::default(), tol)?;
    let v = RegulatorValue::new(t.value, 2, t.integral.error + tol);
    Ok((v, t))
}

/// Three evaluations of the real regulator of `{f, g}` on `γ`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct MamaReport {
    /// `∫_γ log|f| darg g − log|g| darg f`
    pub form: f64,
    /// `Im(∫_γ log f dlog g − log|g(p)| ∫_γ dlog f)`, `log f` continued from `p = γ(0)`.
    pub continuation: f64,
    /// `Im` of the cut-based pairing `∫_γ log f dlog g − 2πi Σ ε log g`.
    pub pairing: f64,
    pub error: f64,
}

fn continued_log_integral(f: &RationalFunction, g: &RationalFunction, gamma: &Loop, tol: f64) -> Result<Complex64> {
    let fv = |s: f64| f.eval_f64(gamma.eval(s).0);
    // pieces on which arg f moves by less than 0.5
    let mut pts = Vec::new();
    let bps = gamma.breakpoints();
    for w in bps.windows(2) {
        for k in 0..64 {
            pts.push(w[0] + (w[1] - w[0]) * k as f64 / 64.0);
        }
    }
    pts.push(1.0);
    let mut refined = vec![pts[0]];
    for w in pts.windows(2) {
        let mut stack = vec![(w[0], w[1], 0)];
        while let Some((a, b, depth)) = stack.pop() {
            if (fv(b) / fv(a)).arg().abs() > 0.5 && depth < 40 {
                let m = 0.5 * (a + b);
                stack.push((m, b, depth + 1));
                stack.push((a, m, depth + 1));
            } else {
                refined.push(b);
            }
        }
    }
    let mut lcur = fv(0.0).ln();
    let mut parts = Vec::new();
    for w in refined.windows(2) {
        let (a, b) = (w[0], w[1]);
        let mid = fv(0.5 * (a + b));
        let cut = CutAngle::new(mid.arg());
        let k = ((lcur - log_unchecked(fv(a), cut)).im / (2.0 * PI)).round();
        let shift = Complex64::new(0.0, 2.0 * PI * k);
        let q = gauss_kronrod_pieces(
            |s| (log_unchecked(fv(s), cut) + shift) * dlog_along(g, gamma, s),
            &[a, b],
            tol / refined.len() as f64,
        );
        parts.push(q.value);
        lcur = log_unchecked(fv(b), cut) + shift;
    }
    Ok(compensated_sum(parts))
}

/// Real regulator of `{f, g}` on `γ` by three independent prescriptions.
pub fn real_regulator_loop(f: &RationalFunction, g: &RationalFunction, gamma: &Loop, tol: f64) -> Result<MamaReport> {
    gamma.validate()?;
    check_clearance(gamma, &[f, g], 1e-9)?;
    let bps = gamma.breakpoints();
    let form = gauss_kronrod_pieces(
        |s| {
            let z = gamma.eval(s).0;
            let a = f.eval_f64(z).norm().ln() * dlog_along(g, gamma, s).im;
            let b = g.eval_f64(z).norm().ln() * dlog_along(f, gamma, s).im;
            Complex64::new(a - b, 0.0)
        },
        &bps,
        tol,
    );
    let winding_integral = gauss_kronrod_pieces(|s| dlog_along(f, gamma, s), &bps, tol);
    let p = gamma.eval(0.0).0;
    let cont = continued_log_integral(f, g, gamma, tol)?;
    let continuation = (cont - winding_integral.value * g.eval_f64(p).norm().ln()).im;
    let pairing = pair_loop(f, g, gamma, CutAngle::default(), CutAngle::default(), tol)?;
    Ok(MamaReport {
        form: form.value.re,
        continuation,
        pairing: pairing.value.im,
        error: form.error + winding_integral.error + pairing.integral.error + tol,
    })
}
