//! Symbolic currents on the box: products of `log z_i`, `dlog z_i`, the cut
//! currents `δ_{T_{z_i}}` and face markers `δ_{(z_i)}`, with coefficients in
//! `Q·(2πi)^k`.
//!
//! Sign conventions: `d log z = dlog z − 2πi δ_T`, `d dlog z = −2πi δ_{(z)}`,
//! `d δ_T = −δ_{(z)}`. The last two fix the orientation of the face marker so
//! that `d Ωⁿ = 2πi Σ (−1)^i Ω(ẑ_i)·δ_{(z_i)}`.

mod cup;
mod display;
mod identities;

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub use cup::{cup_triple, level_one_triple, DeligneTriple};
pub use identities::{
    alpha_homotopy_check, build_omega, build_r, build_t, check_d_omega, check_d_t, product_formula_check,
    verify_identity_52_54,
};

/// One factor of a monomial. Indices are 1-based coordinates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Factor {
    Log(usize),
    Dlog(usize),
    Cut(usize),
    Face(usize),
}

impl Factor {
    /// Current degree.
    pub fn degree(self) -> usize {
        match self {
            Factor::Log(_) => 0,
            Factor::Dlog(_) | Factor::Cut(_) => 1,
            Factor::Face(_) => 2,
        }
    }

    pub fn index(self) -> usize {
        match self {
            Factor::Log(i) | Factor::Dlog(i) | Factor::Cut(i) | Factor::Face(i) => i,
        }
    }
}

/// `coeff · (2πi)^twist · Π log z · ∧ dlog z · δ_{∩T} · Π δ_{(z)}` in this order.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CurrentTerm {
    pub coeff: BigRational,
    pub twist: i32,
    pub logs: Vec<usize>,
    pub dlogs: Vec<usize>,
    pub cuts: Vec<usize>,
    pub faces: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
struct Monomial {
    twist: i32,
    logs: Vec<usize>,
    dlogs: Vec<usize>,
    cuts: Vec<usize>,
    faces: Vec<usize>,
}

impl Monomial {
    fn factors(&self) -> Vec<Factor> {
        let mut v: Vec<Factor> = self.logs.iter().map(|&i| Factor::Log(i)).collect();
        v.extend(self.dlogs.iter().map(|&i| Factor::Dlog(i)));
        v.extend(self.cuts.iter().map(|&i| Factor::Cut(i)));
        v.extend(self.faces.iter().map(|&i| Factor::Face(i)));
        v
    }

    /// Sorts an arbitrary product into canonical order. Returns the Koszul
    /// sign, or `None` if the product vanishes.
    fn from_factors(twist: i32, mut fs: Vec<Factor>) -> Option<(i32, Monomial)> {
        let mut sign = 1;
        for i in 1..fs.len() {
            let mut j = i;
            while j > 0 && fs[j - 1] > fs[j] {
                if fs[j - 1].degree() % 2 == 1 && fs[j].degree() % 2 == 1 {
                    sign = -sign;
                }
                fs.swap(j - 1, j);
                j -= 1;
            }
        }
        for w in fs.windows(2) {
            if w[0] == w[1] && w[0].degree() % 2 == 1 {
                return None;
            }
        }
        // a face marker kills every other factor on the same coordinate
        for f in &fs {
            if let Factor::Face(i) = f {
                if fs.iter().filter(|g| g.index() == *i).count() > 1 {
                    return None;
                }
            }
        }
        let mut m = Monomial { twist, logs: vec![], dlogs: vec![], cuts: vec![], faces: vec![] };
        for f in fs {
            match f {
                Factor::Log(i) => m.logs.push(i),
                Factor::Dlog(i) => m.dlogs.push(i),
                Factor::Cut(i) => m.cuts.push(i),
                Factor::Face(i) => m.faces.push(i),
            }
        }
        Some((sign, m))
    }

    fn degree(&self) -> usize {
        self.dlogs.len() + self.cuts.len() + 2 * self.faces.len()
    }
}

impl CurrentTerm {
    pub fn factors(&self) -> Vec<Factor> {
        self.monomial().factors()
    }

    fn monomial(&self) -> Monomial {
        Monomial {
            twist: self.twist,
            logs: self.logs.clone(),
            dlogs: self.dlogs.clone(),
            cuts: self.cuts.clone(),
            faces: self.faces.clone(),
        }
    }

    /// Form degree of the current.
    pub fn degree(&self) -> usize {
        self.monomial().degree()
    }

    /// Weight with each log counting 1, each dlog and cut 1, each face 2.
    pub fn weight(&self) -> usize {
        self.logs.len() + self.dlogs.len() + self.cuts.len() + 2 * self.faces.len()
    }
}

/// A formal sum of terms in canonical normal form.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CurrentExpr {
    pub n: usize,
    pub terms: Vec<CurrentTerm>,
}

impl CurrentExpr {
    pub fn zero(n: usize) -> Self {
        Self { n, terms: vec![] }
    }

    /// The constant current `1`.
    pub fn one(n: usize) -> Self {
        Self::product(n, BigRational::one(), 0, vec![])
    }

    /// `coeff (2πi)^twist` times the product of `factors` in the given order.
    pub fn product(n: usize, coeff: BigRational, twist: i32, factors: Vec<Factor>) -> Self {
        Self::from_raw(n, vec![(coeff, twist, factors)])
    }

    /// Builds the normal form of a sum of raw products.
    pub fn from_raw(n: usize, raw: Vec<(BigRational, i32, Vec<Factor>)>) -> Self {
        let mut acc: BTreeMap<Monomial, BigRational> = BTreeMap::new();
        for (c, tw, fs) in raw {
            assert!(
                fs.iter().all(|f| (1..=n).contains(&f.index())),
                "factor index out of range 1..={n}"
            );
            if c.is_zero() {
                continue;
            }
            if let Some((s, m)) = Monomial::from_factors(tw, fs) {
                let e = acc.entry(m).or_insert_with(BigRational::zero);
                if s > 0 {
                    *e += c;
                } else {
                    *e -= c;
                }
            }
        }
        let terms = acc
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(m, coeff)| CurrentTerm {
                coeff,
                twist: m.twist,
                logs: m.logs,
                dlogs: m.dlogs,
                cuts: m.cuts,
                faces: m.faces,
            })
            .collect();
        Self { n, terms }
    }

    fn raw(&self) -> Vec<(BigRational, i32, Vec<Factor>)> {
        self.terms.iter().map(|t| (t.coeff.clone(), t.twist, t.factors())).collect()
    }

    pub fn from_terms(n: usize, terms: Vec<CurrentTerm>) -> Self {
        Self::from_raw(n, terms.into_iter().map(|t| (t.coeff.clone(), t.twist, t.factors())).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Common form degree of the terms; `None` for zero or mixed expressions.
    pub fn degree(&self) -> Option<usize> {
        let d = self.terms.first()?.degree();
        self.terms.iter().all(|t| t.degree() == d).then_some(d)
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.n.max(other.n);
        let mut raw = self.raw();
        raw.extend(other.raw());
        Self::from_raw(n, raw)
    }

    pub fn neg(&self) -> Self {
        self.scale(&-BigRational::one(), 0)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    /// Multiplies by `c (2πi)^twist`.
    pub fn scale(&self, c: &BigRational, twist: i32) -> Self {
        Self::from_raw(
            self.n,
            self.raw().into_iter().map(|(a, tw, fs)| (a * c, tw + twist, fs)).collect(),
        )
    }

    /// Graded product `self · other`.
    pub fn mul(&self, other: &Self) -> Self {
        let n = self.n.max(other.n);
        let mut raw = Vec::new();
        for (a, ta, fa) in self.raw() {
            for (b, tb, fb) in other.raw() {
                let mut fs = fa.clone();
                fs.extend(fb);
                raw.push((&a * &b, ta + tb, fs));
            }
        }
        Self::from_raw(n, raw)
    }

    /// Renames coordinate `i` to `map[i - 1]` on a box of dimension `n`.
    pub fn relabel(&self, n: usize, map: &[usize]) -> Self {
        let f = |x: Factor| match x {
            Factor::Log(i) => Factor::Log(map[i - 1]),
            Factor::Dlog(i) => Factor::Dlog(map[i - 1]),
            Factor::Cut(i) => Factor::Cut(map[i - 1]),
            Factor::Face(i) => Factor::Face(map[i - 1]),
        };
        Self::from_raw(
            n,
            self.raw().into_iter().map(|(c, tw, fs)| (c, tw, fs.into_iter().map(f).collect())).collect(),
        )
    }

    /// Moves the expression to coordinates `offset+1 ..= offset+self.n` of a
    /// box of dimension `n`.
    pub fn shift(&self, n: usize, offset: usize) -> Self {
        let map: Vec<usize> = (1..=self.n).map(|i| i + offset).collect();
        self.relabel(n, &map)
    }

    /// The differential, by graded Leibniz.
    pub fn d(&self) -> Self {
        let one = BigRational::one();
        let mut raw = Vec::new();
        for (c, tw, fs) in self.raw() {
            let mut before = 0;
            for (p, &f) in fs.iter().enumerate() {
                let sgn = if before % 2 == 0 { c.clone() } else { -c.clone() };
                let images: Vec<(BigRational, i32, Factor)> = match f {
                    Factor::Log(i) => vec![(one.clone(), 0, Factor::Dlog(i)), (-one.clone(), 1, Factor::Cut(i))],
                    Factor::Dlog(i) => vec![(-one.clone(), 1, Factor::Face(i))],
                    Factor::Cut(i) => vec![(-one.clone(), 0, Factor::Face(i))],
                    Factor::Face(_) => vec![],
                };
                for (k, dt, g) in images {
                    let mut new = fs.clone();
                    new[p] = g;
                    raw.push((&sgn * k, tw + dt, new));
                }
                before += f.degree();
            }
        }
        Self::from_raw(self.n, raw)
    }
}

/// `d` as a free function.
pub fn d_current(e: &CurrentExpr) -> CurrentExpr {
    e.d()
}

pub(crate) fn check_degrees(label: &str, got: Option<usize>, want: usize, zero_ok: bool) -> Result<()> {
    match got {
        None if zero_ok => Ok(()),
        Some(d) if d == want => Ok(()),
        other => Err(Error::DegreeMismatch(format!("{label} has degree {other:?}, expected {want}"))),
    }
}
