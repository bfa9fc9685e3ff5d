//! Command-line front end.

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use serde_json::{json, Value};

use crate::currents::{build_r, product_formula_check, verify_identity_52_54};
use crate::cycle::{boundary, check_admissible, component_is_degenerate, real_position_check, Ambient, Cycle};
use crate::error::{Error, Result};
use crate::exact::{parse_rational_function, GaussRational, Params, RationalFunction};
use crate::regulator::{
    aj_point_p1, aj_point_p2, lemma41_check, loop_pairing_n2, milnor_pair, real_regulator_loop, rigidity_scan, Bump,
    RegulatorValue,
};
use crate::spec_doc::{parse_value, CycleSpecDocument};
use crate::special::{bloch_wigner, dilog, log_branch, CutAngle};
use crate::tracker::{track_t, Loop};

/// Environment variable selecting the default quadrature tolerance:
/// `fast` (1e-8), `standard` (1e-10) or `high` (1e-12, the default).
pub const PRECISION_ENV: &str = "HCHOW_PRECISION";

#[derive(Parser, Debug)]
#[command(name = "hchow", version, about = "Higher Chow cycles: boundaries, currents and regulators")]
pub struct Cli {
    /// Machine-readable JSON output.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Admissibility, boundary, degeneracy and real position of a cycle spec.
    Check {
        #[arg(long)]
        spec: String,
        /// Print the parsed cycle back as a spec document.
        #[arg(long)]
        dump_spec: bool,
    },
    /// Check the identities for dRⁿ, dΩⁿ, ∂Tⁿ and the product formula.
    VerifyCurrents {
        #[arg(long, default_value_t = 1)]
        n: usize,
        /// `L,N`: check R^{L+N} against the product of R^L and Rᴺ.
        #[arg(long)]
        product: Option<String>,
    },
    /// Special functions.
    Special {
        #[command(subcommand)]
        op: SpecialOp,
    },
    /// Abel-Jacobi value of a point cycle (n = 1 points or n = 3 curves).
    Aj {
        #[arg(long)]
        spec: String,
        #[arg(long)]
        cuts: Option<String>,
        #[command(flatten)]
        tol: TolArg,
    },
    /// Pairing of a closed cycle over the line with a loop.
    Pair {
        #[arg(long)]
        spec: String,
        #[arg(long = "loop")]
        loop_: Option<String>,
        #[arg(long)]
        cuts: Option<String>,
        #[command(flatten)]
        tol: TolArg,
    },
    /// Real regulator of {f, g} on a loop, by three prescriptions.
    Mama {
        #[arg(long)]
        f: String,
        #[arg(long)]
        g: String,
        #[arg(long = "loop")]
        loop_: String,
        #[command(flatten)]
        tol: TolArg,
    },
    /// Regulator of a Milnor symbol {f1, f2} on a loop.
    Milnor {
        #[arg(long)]
        fs: String,
        #[arg(long = "loop")]
        loop_: String,
        #[command(flatten)]
        tol: TolArg,
    },
    /// AJ values of a spec over several values of one parameter.
    Rigidity {
        #[arg(long)]
        spec: String,
        #[arg(long)]
        param: String,
        #[arg(long)]
        values: String,
        #[arg(long)]
        cuts: Option<String>,
        #[command(flatten)]
        tol: TolArg,
    },
    /// Stokes check for T_f against a bump form.
    Lemma41 {
        #[arg(long)]
        f: String,
        #[arg(long, default_value = "1/5+1/10i")]
        center: String,
        #[arg(long, default_value_t = 0.7)]
        radius: f64,
        #[command(flatten)]
        tol: TolArg,
    },
    /// Arcs of T_f as polylines.
    Arcs {
        #[arg(long)]
        f: String,
        #[arg(long, default_value_t = 0.0)]
        cut: f64,
    },
}

#[derive(Subcommand, Debug)]
pub enum SpecialOp {
    Eval {
        #[arg(long = "fn", value_enum)]
        func: SpecialFn,
        /// `RE,IM`
        #[arg(long, allow_hyphen_values = true)]
        z: String,
        #[arg(long, allow_hyphen_values = true)]
        cut: Option<f64>,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum SpecialFn {
    Dilog,
    D2,
    Log,
}

#[derive(Args, Debug)]
pub struct TolArg {
    /// Quadrature tolerance (default from HCHOW_PRECISION).
    #[arg(long)]
    pub tol: Option<f64>,
}

impl TolArg {
    fn get(&self) -> Result<f64> {
        if let Some(t) = self.tol {
            return if t > 0.0 && t < 1.0 {
                Ok(t)
            } else {
                Err(Error::InvalidSpec(format!("tolerance {t} out of range")))
            };
        }
        match std::env::var(PRECISION_ENV).as_deref() {
            Err(_) | Ok("") | Ok("high") => Ok(1e-12),
            Ok("standard") => Ok(1e-10),
            Ok("fast") => Ok(1e-8),
            Ok(other) => Err(Error::InvalidSpec(format!("{PRECISION_ENV}={other}: expected fast, standard or high"))),
        }
    }
}

/// Text and JSON forms of a command result.
struct Output {
    text: String,
    json: Value,
    code: i32,
}

fn cplx(z: Complex64) -> Value {
    json!({ "re": z.re, "im": z.im })
}

fn value_json(v: &RegulatorValue, raw: Complex64, diagnostics: &[String]) -> Value {
    let mut d: Vec<String> = diagnostics.to_vec();
    if let Some(a) = v.seam_alternate() {
        let s = format!("alternate representative {:.15e}{:+.15e}i", a.re, a.im);
        if !d.iter().any(|x| x.contains("alternate representative")) {
            d.push(s);
        }
    }
    json!({
        "value": cplx(raw),
        "lattice": v.lattice,
        "reduced": cplx(v.value),
        "error": v.error,
        "diagnostics": d,
    })
}

fn fmt_c(z: Complex64) -> String {
    format!("{:.12}{:+.12}i", z.re, z.im)
}

fn value_text(title: &str, v: &RegulatorValue, raw: Complex64, diagnostics: &[String]) -> String {
    let mut s = format!(
        "{title}\n  value   = {}\n  reduced = {} mod (2πi)^{}Z\n  error   ≤ {:.1e}\n",
        fmt_c(raw),
        fmt_c(v.value),
        v.lattice,
        v.error
    );
    for d in diagnostics {
        s.push_str(&format!("  - {d}\n"));
    }
    s
}

fn read_spec(path: &str) -> Result<CycleSpecDocument> {
    let src = std::fs::read_to_string(path).map_err(|e| Error::InvalidSpec(format!("{path}: {e}")))?;
    CycleSpecDocument::from_json(&src)
}

fn parse_f64_list(s: &str, what: &str) -> Result<Vec<f64>> {
    s.split(',')
        .map(|x| x.trim().parse::<f64>().map_err(|_| Error::InvalidSpec(format!("{what}: cannot read {x:?}"))))
        .collect()
}

fn parse_cuts(s: Option<&str>, doc: Option<&CycleSpecDocument>, n: usize) -> Result<Vec<CutAngle>> {
    if let Some(s) = s {
        let v = parse_f64_list(s, "cuts")?;
        if v.len() != n {
            return Err(Error::InvalidSpec(format!("{} cut angles for n = {n}", v.len())));
        }
        return Ok(v.into_iter().map(CutAngle::new).collect());
    }
    if let Some(c) = doc.map(|d| d.cut_angles()).transpose()?.flatten() {
        return Ok(c);
    }
    Ok(vec![CutAngle::default(); n])
}

/// Complex number written as `X`, `X+Yi`, `X-Yi` or `Yi`.
pub fn parse_complex_f64(s: &str) -> Result<Complex64> {
    let bad = || Error::InvalidSpec(format!("cannot read complex number {s:?}"));
    let s = s.trim().replace(' ', "");
    if let Some(body) = s.strip_suffix('i') {
        // split at the last sign that is not part of an exponent
        let bytes = body.as_bytes();
        let mut split = None;
        for k in (1..bytes.len()).rev() {
            if (bytes[k] == b'+' || bytes[k] == b'-') && !matches!(bytes[k - 1], b'e' | b'E') {
                split = Some(k);
                break;
            }
        }
        let (re, im) = match split {
            Some(k) => (&body[..k], &body[k..]),
            None => ("0", body),
        };
        let im = match im {
            "" | "+" => 1.0,
            "-" => -1.0,
            x => x.parse::<f64>().map_err(|_| bad())?,
        };
        Ok(Complex64::new(re.parse::<f64>().map_err(|_| bad())?, im))
    } else {
        Ok(Complex64::new(s.parse::<f64>().map_err(|_| bad())?, 0.0))
    }
}

/// `c=X+Yi,r=R` or `poly=x:y;x:y;...`
pub fn parse_loop(s: &str) -> Result<Loop> {
    let bad = |m: &str| Error::InvalidSpec(format!("loop {s:?}: {m}"));
    let l = if let Some(rest) = s.strip_prefix("poly=") {
        let vertices = rest
            .split(';')
            .map(|p| {
                let (x, y) = p.split_once(':').ok_or_else(|| bad("vertices are x:y"))?;
                Ok([x.trim().parse().map_err(|_| bad("bad x"))?, y.trim().parse().map_err(|_| bad("bad y"))?])
            })
            .collect::<Result<Vec<[f64; 2]>>>()?;
        Loop::Polyline { vertices }
    } else {
        let mut c = None;
        let mut r = None;
        for part in s.split(',') {
            match part.split_once('=') {
                Some(("c", v)) => c = Some(parse_complex_f64(v)?),
                Some(("r", v)) => r = Some(v.trim().parse::<f64>().map_err(|_| bad("bad radius"))?),
                _ => return Err(bad("expected c=X+Yi,r=R or poly=x:y;...")),
            }
        }
        Loop::circle(c.unwrap_or_default(), r.ok_or_else(|| bad("missing r"))?)
    };
    l.validate()?;
    Ok(l)
}

fn rf(s: &str) -> Result<RationalFunction> {
    parse_rational_function(s, &Params::new())
}

fn cmd_check(spec: &str, dump: bool) -> Result<Output> {
    let doc = read_spec(spec)?;
    let z = doc.to_cycle(&Params::new())?;
    if dump {
        let d = CycleSpecDocument::from_cycle(&z);
        return Ok(Output { text: d.to_json() + "\n", json: serde_json::to_value(&d).expect("serializable"), code: 0 });
    }
    let adm = check_admissible(&z)?;
    let mut lines = Vec::new();
    let mut j = json!({ "cycle": z.to_string() });
    if !adm.is_ok() {
        for v in &adm.violations {
            lines.push(format!("component {}: {}", v.component, v.message));
        }
        j["admissible"] = json!(false);
        j["violations"] = json!(lines);
        return Ok(Output { text: format!("not admissible\n  {}\n", lines.join("\n  ")), json: j, code: 2 });
    }
    let bd = boundary(&z)?;
    let bd_text = if bd.is_zero() { "boundary = 0".to_string() } else { format!("boundary = {bd}") };
    lines.push(bd_text);
    lines.push("admissible".into());
    j["admissible"] = json!(true);
    j["boundary"] = json!(bd.to_string());
    j["off_space"] = json!(adm.off_space);
    let over_point = z.ambient == Ambient::Pt;
    let degenerate: Vec<usize> = z
        .terms
        .iter()
        .enumerate()
        .filter(|(_, (_, c))| component_is_degenerate(c, over_point))
        .map(|(k, _)| k)
        .collect();
    if !degenerate.is_empty() {
        lines.push(format!("degenerate components: {degenerate:?}"));
    }
    j["degenerate"] = json!(degenerate);
    let cuts = parse_cuts(None, Some(&doc), z.n)?;
    let rp = real_position_check(&z, &cuts, 1e-10)?;
    if rp.is_ok() {
        lines.push("real-position ok".into());
    } else {
        lines.push(format!("real-position violations: {}", rp.violations.join("; ")));
    }
    j["real_position"] = json!(rp.violations);
    Ok(Output { text: lines.join("; ") + "\n", json: j, code: 0 })
}

fn superscript(n: usize) -> String {
    const D: [char; 10] = ['⁰', '¹', '²', '³', '⁴', '⁵', '⁶', '⁷', '⁸', '⁹'];
    n.to_string().chars().map(|c| D[c.to_digit(10).unwrap() as usize]).collect()
}

fn cmd_verify_currents(n: usize, product: Option<&str>) -> Result<Output> {
    let mut lines = Vec::new();
    let mut ok = true;
    let mut checks = Vec::new();
    if !(1..=6).contains(&n) {
        return Err(Error::InvalidSpec(format!("n = {n} outside 1..=6")));
    }
    let s = superscript(n);
    let ident = if n == 1 {
        "d[R¹]=Ω¹−2πi·δ_{T¹}".to_string()
    } else {
        format!("d[R{s}]=Ω{s}−(2πi){s}·δ_{{T{s}}}−2πi·Σ(−1)^i R(ẑ_i)·δ_{{(z_i)}}")
    };
    let good = verify_identity_52_54(n);
    ok &= good;
    lines.push(format!("{ident}: {}", if good { "ok" } else { "FAILED" }));
    if !good {
        lines.push(format!("  R{s} = {}", build_r(n)));
        lines.push(format!("  d[R{s}] = {}", build_r(n).d()));
    }
    checks.push(json!({ "identity": ident, "ok": good }));
    if let Some(p) = product {
        let v: Vec<usize> = p
            .split(',')
            .map(|x| x.trim().parse::<usize>().map_err(|_| Error::InvalidSpec(format!("--product {p:?}"))))
            .collect::<Result<_>>()?;
        let [l, m] = v[..] else {
            return Err(Error::InvalidSpec(format!("--product expects L,N, got {p:?}")));
        };
        if l + m > 6 {
            return Err(Error::InvalidSpec(format!("L+N = {} exceeds 6", l + m)));
        }
        let good = product_formula_check(l, m);
        ok &= good;
        let ident = format!("R(w;y) = (−1)^{l}(2πi)^{l}·δ_{{T(w)}}·R(y) + R(w)∧Ω(y) with ℓ={l}, n={m}");
        lines.push(format!("{ident}: {}", if good { "ok" } else { "FAILED" }));
        if !good {
            lines.push(format!("  R = {}", build_r(l + m)));
        }
        checks.push(json!({ "identity": ident, "ok": good }));
    }
    Ok(Output { text: lines.join("\n") + "\n", json: json!({ "ok": ok, "checks": checks }), code: if ok { 0 } else { 1 } })
}

fn cmd_special(func: SpecialFn, z: &str, cut: Option<f64>) -> Result<Output> {
    let v = parse_f64_list(z, "--z")?;
    let [re, im] = v[..] else {
        return Err(Error::InvalidSpec("--z expects RE,IM".into()));
    };
    let z = Complex64::new(re, im);
    let (val, name) = match func {
        SpecialFn::Dilog => (dilog(z)?, "Li2"),
        SpecialFn::D2 => (Complex64::new(bloch_wigner(z)?, 0.0), "D2"),
        SpecialFn::Log => (log_branch(z, CutAngle::new(cut.unwrap_or(0.0)))?, "log"),
    };
    Ok(Output {
        text: format!("{name}({}) = {}\n", fmt_c(z), fmt_c(val)),
        json: json!({ "function": name, "z": cplx(z), "value": cplx(val) }),
        code: 0,
    })
}

fn cmd_aj(spec: &str, cuts: Option<&str>, tol: f64) -> Result<Output> {
    let doc = read_spec(spec)?;
    let z = doc.to_cycle(&Params::new())?;
    match (z.ambient, z.n) {
        (Ambient::Pt, 1) => {
            let v = aj_point_p1(&z)?;
            let raw = v.value;
            Ok(Output {
                text: value_text("AJ of a 0-cycle in the 1-cube", &v, raw, &[]),
                json: value_json(&v, raw, &[]),
                code: 0,
            })
        }
        (Ambient::Pt, 3) => {
            let c = parse_cuts(cuts, Some(&doc), 3)?;
            let r = aj_point_p2(&z, &c, tol)?;
            Ok(Output {
                text: value_text("AJ = (1/(−2πi)) ∫_Z R³", &r.value, r.raw, &r.diagnostics),
                json: value_json(&r.value, r.raw, &r.diagnostics),
                code: 0,
            })
        }
        _ => Err(Error::InvalidSpec("aj supports n = 1 points or n = 3 curves over a point".into())),
    }
}

fn loop_from(arg: Option<&str>, doc: &CycleSpecDocument) -> Result<Loop> {
    match arg {
        Some(s) => parse_loop(s),
        None => doc
            .loops
            .as_ref()
            .and_then(|l| l.first().cloned())
            .ok_or_else(|| Error::InvalidSpec("no --loop given and the spec has no loops".into())),
    }
}

fn cmd_pair(spec: &str, lp: Option<&str>, cuts: Option<&str>, tol: f64) -> Result<Output> {
    let doc = read_spec(spec)?;
    let z = doc.to_cycle(&Params::new())?;
    let gamma = loop_from(lp, &doc)?;
    let c = parse_cuts(cuts, Some(&doc), 2)?;
    let r = loop_pairing_n2(&z, &gamma, [c[0], c[1]], tol)?;
    Ok(Output {
        text: value_text("∫_γ R_Z", &r.value, r.raw, &r.diagnostics),
        json: value_json(&r.value, r.raw, &r.diagnostics),
        code: 0,
    })
}

fn cmd_mama(f: &str, g: &str, lp: &str, tol: f64) -> Result<Output> {
    let (f, g, gamma) = (rf(f)?, rf(g)?, parse_loop(lp)?);
    let m = real_regulator_loop(&f, &g, &gamma, tol)?;
    let spread = (m.form - m.continuation).abs().max((m.form - m.pairing).abs());
    Ok(Output {
        text: format!(
            "real regulator of {{{f}, {g}}}\n  ∫ log|f| darg g − log|g| darg f = {:.12}\n  continuation              = {:.12}\n  Im of the cut pairing     = {:.12}\n  spread {:.1e}, error ≤ {:.1e}\n",
            m.form, m.continuation, m.pairing, spread, m.error
        ),
        json: json!({
            "value": m.form, "form": m.form, "continuation": m.continuation, "pairing": m.pairing,
            "spread": spread, "error": m.error,
        }),
        code: 0,
    })
}

fn cmd_milnor(fs: &str, lp: &str, tol: f64) -> Result<Output> {
    let fs = fs.split(',').map(rf).collect::<Result<Vec<_>>>()?;
    let gamma = parse_loop(lp)?;
    let (v, t) = milnor_pair(&fs, &gamma, tol)?;
    let reduced = v.reduced();
    let notes = vec![
        format!("{} crossing(s) of the loop with T_f1", t.crossings.len()),
        "the symbol's regulator is defined modulo Q(2); reported reduced modulo Z(2) only".to_string(),
    ];
    Ok(Output {
        text: value_text("∫_γ R(f1, f2)", &reduced, v.value, &notes),
        json: value_json(&reduced, v.value, &notes),
        code: 0,
    })
}

fn cmd_rigidity(spec: &str, param: &str, values: &str, cuts: Option<&str>, tol: f64) -> Result<Output> {
    let doc = read_spec(spec)?;
    let vals = values.split(',').map(parse_value).collect::<Result<Vec<GaussRational>>>()?;
    let c = parse_cuts(cuts, Some(&doc), doc.n)?;
    let family = |a: &GaussRational| -> Result<Cycle> {
        let mut o = Params::new();
        o.insert(param.to_string(), a.clone());
        doc.to_cycle(&o)
    };
    let rep = rigidity_scan(family, &vals, &c, tol)?;
    let mut text = String::from("AJ over the family\n");
    let mut rows = Vec::new();
    for (a, v) in &rep.rows {
        text.push_str(&format!("  {param} = {a}: {} ± {:.1e}\n", fmt_c(v.value), v.error));
        rows.push(json!({ "param": a.to_string(), "reduced": cplx(v.value), "lattice": v.lattice, "error": v.error }));
    }
    text.push_str(&format!("  max deviation mod lattice = {:.3e}\n", rep.max_deviation));
    Ok(Output { text, json: json!({ "rows": rows, "max_deviation": rep.max_deviation }), code: 0 })
}

fn cmd_lemma41(f: &str, center: &str, radius: f64, tol: f64) -> Result<Output> {
    let f = rf(f)?;
    let c = parse_value(center)?.to_complex();
    let r = lemma41_check(&f, &Bump::new(c, radius), tol)?;
    Ok(Output {
        text: format!(
            "∫ dlog f∧η = {}\n2πi ∫_T η  = {}\n−∫ log f dη = {}\nresidual    = {:.3e}\n",
            fmt_c(r.lhs),
            fmt_c(r.arc_term),
            fmt_c(r.d_term),
            r.residual
        ),
        json: json!({ "lhs": cplx(r.lhs), "arc_term": cplx(r.arc_term), "d_term": cplx(r.d_term), "residual": r.residual }),
        code: 0,
    })
}

fn cmd_arcs(f: &str, cut: f64) -> Result<Output> {
    let f = rf(f)?;
    let arcs = track_t(&f, CutAngle::new(cut), 1e-12)?;
    let mut text = String::new();
    let mut out = Vec::new();
    for (k, a) in arcs.iter().enumerate() {
        let pts: Vec<Complex64> = a.polyline().into_iter().filter(|z| z.is_finite() && z.norm() < 1e6).collect();
        text.push_str(&format!("arc {k}: {} -> {}, {} samples\n", a.start_label(), a.end_label(), pts.len()));
        out.push(json!({
            "from": a.start_label(),
            "to": a.end_label(),
            "points": pts.iter().map(|z| [z.re, z.im]).collect::<Vec<_>>(),
        }));
    }
    Ok(Output { text, json: json!({ "arcs": out }), code: 0 })
}

fn dispatch(cli: &Cli) -> Result<Output> {
    match &cli.command {
        Command::Check { spec, dump_spec } => cmd_check(spec, *dump_spec),
        Command::VerifyCurrents { n, product } => cmd_verify_currents(*n, product.as_deref()),
        Command::Special { op: SpecialOp::Eval { func, z, cut } } => cmd_special(*func, z, *cut),
        Command::Aj { spec, cuts, tol } => cmd_aj(spec, cuts.as_deref(), tol.get()?),
        Command::Pair { spec, loop_, cuts, tol } => cmd_pair(spec, loop_.as_deref(), cuts.as_deref(), tol.get()?),
        Command::Mama { f, g, loop_, tol } => cmd_mama(f, g, loop_, tol.get()?),
        Command::Milnor { fs, loop_, tol } => cmd_milnor(fs, loop_, tol.get()?),
        Command::Rigidity { spec, param, values, cuts, tol } => {
            cmd_rigidity(spec, param, values, cuts.as_deref(), tol.get()?)
        }
        Command::Lemma41 { f, center, radius, tol } => cmd_lemma41(f, center, *radius, tol.get()?),
        Command::Arcs { f, cut } => cmd_arcs(f, *cut),
    }
}

/// Runs the CLI, writing to the given streams, and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = if code == 0 { write!(out, "{e}") } else { write!(err, "{e}") };
            return code;
        }
    };
    match dispatch(&cli) {
        Ok(o) => {
            let _ = if cli.json {
                writeln!(out, "{}", serde_json::to_string_pretty(&o.json).expect("json"))
            } else {
                write!(out, "{}", o.text)
            };
            o.code
        }
        Err(e) => {
            if cli.json {
                let _ = writeln!(out, "{}", json!({ "error": e.kind(), "message": e.to_string() }));
            }
            let _ = writeln!(err, "{}: {e}", e.kind());
            e.exit_code()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complex_and_loop_syntax() {
        assert_eq!(parse_complex_f64("0.5-1.2i").unwrap(), Complex64::new(0.5, -1.2));
        assert_eq!(parse_complex_f64("-2").unwrap(), Complex64::new(-2.0, 0.0));
        assert_eq!(parse_complex_f64("i").unwrap(), Complex64::new(0.0, 1.0));
        assert_eq!(parse_complex_f64("1e-3+2e-1i").unwrap(), Complex64::new(1e-3, 0.2));
        assert_eq!(parse_loop("c=0+0i,r=2").unwrap(), Loop::circle(Complex64::new(0.0, 0.0), 2.0));
        assert!(parse_loop("c=0,r=-1").is_err());
        assert!(matches!(parse_loop("poly=0:0;1:0;0:1").unwrap(), Loop::Polyline { .. }));
    }
}
