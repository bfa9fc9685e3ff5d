use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Signed};

use super::{CurrentExpr, CurrentTerm};

fn sub(i: usize) -> String {
    const D: [char; 10] = ['₀', '₁', '₂', '₃', '₄', '₅', '₆', '₇', '₈', '₉'];
    i.to_string().chars().map(|c| D[c.to_digit(10).unwrap() as usize]).collect()
}

fn sup(k: i32) -> String {
    const D: [char; 10] = ['⁰', '¹', '²', '³', '⁴', '⁵', '⁶', '⁷', '⁸', '⁹'];
    let mut s = if k < 0 { "⁻".to_string() } else { String::new() };
    s.extend(k.unsigned_abs().to_string().chars().map(|c| D[c.to_digit(10).unwrap() as usize]));
    s
}

fn z(i: usize) -> String {
    format!("z{}", sub(i))
}

impl CurrentTerm {
    fn body(&self) -> String {
        let mut head: Vec<String> = self.logs.iter().map(|&i| format!("log {}", z(i))).collect();
        if !self.dlogs.is_empty() {
            head.push(self.dlogs.iter().map(|&i| format!("dlog {}", z(i))).collect::<Vec<_>>().join("∧"));
        }
        let mut parts = vec![head.join(" ")];
        if !self.cuts.is_empty() {
            let ts: Vec<String> = self.cuts.iter().map(|&i| format!("T_{{{}}}", z(i))).collect();
            parts.push(format!("δ_{{{}}}", ts.join("∩")));
        }
        parts.extend(self.faces.iter().map(|&i| format!("δ_{{({})}}", z(i))));
        parts.retain(|p| !p.is_empty());
        parts.join("·")
    }

    /// Rendering of `|coeff|·(2πi)^twist·body`.
    fn magnitude(&self) -> String {
        let c = self.coeff.abs();
        let mut pre = if c.is_one() { String::new() } else { c.to_string() };
        let tw = match self.twist {
            0 => String::new(),
            1 => "2πi".to_string(),
            k => format!("(2πi){}", sup(k)),
        };
        if !tw.is_empty() {
            if !pre.is_empty() {
                pre.push('·');
            }
            pre.push_str(&tw);
        }
        let body = self.body();
        match (pre.is_empty(), body.is_empty()) {
            (true, true) => "1".into(),
            (true, false) => body,
            (false, true) => pre,
            (false, false) => format!("{pre} {body}"),
        }
    }
}

impl fmt::Display for CurrentTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeff < BigRational::from_integer(0.into()) {
            write!(f, "−")?;
        }
        write!(f, "{}", self.magnitude())
    }
}

impl fmt::Display for CurrentExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, t) in self.terms.iter().enumerate() {
            let neg = t.coeff.is_negative();
            match (k, neg) {
                (0, false) => {}
                (0, true) => write!(f, "−")?,
                (_, false) => write!(f, " + ")?,
                (_, true) => write!(f, " − ")?,
            }
            write!(f, "{}", t.magnitude())?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use crate::currents::{build_omega, build_r, build_t};
    use num_rational::BigRational;

    #[test]
    fn notation() {
        assert_eq!(build_r(1).to_string(), "log z₁");
        assert_eq!(build_r(2).to_string(), "log z₁ dlog z₂ − 2πi log z₂·δ_{T_{z₁}}");
        let one = BigRational::from_integer(1.into());
        let d = build_r(1).d();
        assert_eq!(d, build_omega(1).sub(&build_t(1).scale(&one, 1)));
        assert_eq!(d.to_string(), "dlog z₁ − 2πi δ_{T_{z₁}}");
        assert_eq!(build_r(3).d().to_string().matches("δ_{(z").count(), 6);
    }
}
