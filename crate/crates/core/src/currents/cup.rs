//! Triples `(a, f, ω)` of chain part, form part and log part, and their
//! product by the α-weighted multiplication table.

use num_rational::BigRational;
use num_traits::One;

use super::{check_degrees, CurrentExpr, Factor};
use crate::error::{Error, Result};

/// `t` is the chain part (as a current), `omega` the holomorphic form part,
/// `r` the log part, all on a box of dimension `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeligneTriple {
    pub n: usize,
    pub t: CurrentExpr,
    pub omega: CurrentExpr,
    pub r: CurrentExpr,
}

impl DeligneTriple {
    pub fn new(n: usize, t: CurrentExpr, omega: CurrentExpr, r: CurrentExpr) -> Result<Self> {
        let tr = DeligneTriple { n, t, omega, r };
        tr.check()?;
        Ok(tr)
    }

    /// Degree of the form part; `t` must match it and `r` be one less.
    pub fn degree(&self) -> usize {
        self.omega
            .degree()
            .or_else(|| self.t.degree())
            .or_else(|| self.r.degree().map(|x| x + 1))
            .unwrap_or(0)
    }

    fn check(&self) -> Result<()> {
        let d = self.degree();
        check_degrees("form part", self.omega.degree(), d, self.omega.is_zero())?;
        check_degrees("chain part", self.t.degree(), d, self.t.is_zero())?;
        if d == 0 && !self.r.is_zero() {
            return Err(Error::DegreeMismatch("log part of a degree-0 triple must vanish".into()));
        }
        check_degrees("log part", self.r.degree(), d.saturating_sub(1), self.r.is_zero())
    }
}

/// `(2πi δ_{T_z}, dlog z, log z)` on the line.
pub fn level_one_triple() -> DeligneTriple {
    let one = BigRational::one();
    DeligneTriple {
        n: 1,
        t: CurrentExpr::product(1, one.clone(), 1, vec![Factor::Cut(1)]),
        omega: CurrentExpr::product(1, one.clone(), 0, vec![Factor::Dlog(1)]),
        r: CurrentExpr::product(1, one, 0, vec![Factor::Log(1)]),
    }
}

fn parity(k: usize) -> BigRational {
    if k % 2 == 0 {
        BigRational::one()
    } else {
        -BigRational::one()
    }
}

/// External product of `p` on the first coordinates and `q` on the rest:
///
/// ```text
///         a_q              f_q               ω_q
/// a_p   a_p·a_q            0          ±(1−α) a_p·ω_q
/// f_p     0             f_p∧f_q     (−1)^{deg f_p} α f_p·ω_q
/// ω_p  α ω_p·a_q   (1−α) ω_p∧f_q          0
/// ```
///
/// with `± = (−1)^{deg a_p}`, which is what makes the product a cocycle
/// when `d ω = f − a`.
pub fn cup_triple(p: &DeligneTriple, q: &DeligneTriple, alpha: &BigRational) -> Result<DeligneTriple> {
    p.check()?;
    q.check()?;
    let n = p.n + q.n;
    let up = |e: &CurrentExpr| e.shift(n, 0);
    let uq = |e: &CurrentExpr| e.shift(n, p.n);
    let (ap, fp, wp) = (up(&p.t), up(&p.omega), up(&p.r));
    let (aq, fq, wq) = (uq(&q.t), uq(&q.omega), uq(&q.r));
    let dp = p.degree();
    let beta = BigRational::one() - alpha;
    let r = ap
        .mul(&wq)
        .scale(&(&beta * parity(dp)), 0)
        .add(&fp.mul(&wq).scale(&(alpha * parity(dp)), 0))
        .add(&wp.mul(&aq).scale(alpha, 0))
        .add(&wp.mul(&fq).scale(&beta, 0));
    DeligneTriple::new(n, ap.mul(&aq), fp.mul(&fq), r)
}
