//! Rational functions in one variable `t` over Q(i), with zero/pole divisors.

use std::fmt;

use num_complex::Complex64;

use super::gauss::GaussRational;
use super::poly::Poly;
use super::roots::{roots_with_multiplicity, FixComplex, Root};
use crate::error::{Error, Result};

/// A point of the parameter line P^1.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Place {
    Finite(GaussRational),
    Infinity,
}

impl Place {
    pub fn to_complex(&self) -> Option<Complex64> {
        match self {
            Place::Finite(g) => Some(g.to_complex()),
            Place::Infinity => None,
        }
    }
}

impl fmt::Display for Place {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Place::Finite(g) => write!(f, "{g}"),
            Place::Infinity => write!(f, "inf"),
        }
    }
}

/// Value of a rational function at a place, possibly infinite.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExtValue {
    Finite(GaussRational),
    Infinity,
}

/// Location of a divisor entry.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Location {
    Exact(Place),
    /// A root outside Q(i), kept at 256-bit fixed precision.
    Numeric(FixComplex),
}

impl Location {
    pub fn is_exact(&self) -> bool {
        matches!(self, Location::Exact(_))
    }

    /// Complex position; `None` for the point at infinity.
    pub fn to_complex(&self) -> Option<Complex64> {
        match self {
            Location::Exact(p) => p.to_complex(),
            Location::Numeric(v) => Some(v.to_complex()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DivisorList {
    pub entries: Vec<(Location, i64)>,
}

impl DivisorList {
    pub fn degree(&self) -> i64 {
        self.entries.iter().map(|(_, m)| m).sum()
    }

    pub fn is_exact(&self) -> bool {
        self.entries.iter().all(|(l, _)| l.is_exact())
    }

    pub fn zeros(&self) -> impl Iterator<Item = &(Location, i64)> {
        self.entries.iter().filter(|(_, m)| *m > 0)
    }

    pub fn poles(&self) -> impl Iterator<Item = &(Location, i64)> {
        self.entries.iter().filter(|(_, m)| *m < 0)
    }

    pub fn multiplicity_at(&self, p: &Place) -> i64 {
        self.entries
            .iter()
            .filter(|(l, _)| matches!(l, Location::Exact(q) if q == p))
            .map(|(_, m)| m)
            .sum()
    }
}

/// `num / den` kept coprime with monic denominator.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RationalFunction {
    num: Poly,
    den: Poly,
}

impl RationalFunction {
    pub fn new(num: Poly, den: Poly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(Self::normalized(num, den))
    }

    fn normalized(num: Poly, den: Poly) -> Self {
        if num.is_zero() {
            return Self { num, den: Poly::one() };
        }
        let g = Poly::gcd(&num, &den);
        let (num, den) = if g.is_constant() {
            (num, den)
        } else {
            (num.div_rem(&g).0, den.div_rem(&g).0)
        };
        let lc = den.leading().inv().expect("nonzero denominator");
        Self { num: num.scale(&lc), den: den.scale(&lc) }
    }

    pub fn from_poly(p: Poly) -> Self {
        Self { num: p, den: Poly::one() }
    }

    pub fn constant(c: GaussRational) -> Self {
        Self::from_poly(Poly::constant(c))
    }

    pub fn from_int(n: i64) -> Self {
        Self::constant(GaussRational::from_int(n))
    }

    pub fn var() -> Self {
        Self::from_poly(Poly::var())
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_constant()
    }

    /// The constant value if `self` is constant.
    pub fn constant_value(&self) -> Option<GaussRational> {
        self.is_constant().then(|| self.num.coeff(0))
    }

    pub fn is_constant_value(&self, c: &GaussRational) -> bool {
        self.constant_value().is_some_and(|v| &v == c)
    }

    /// Degree as a map P^1 -> P^1.
    pub fn degree(&self) -> usize {
        if self.num.is_zero() {
            return 0;
        }
        self.num.degree().max(self.den.degree())
    }

    pub fn derivative(&self) -> Self {
        let n = &(&self.num.derivative() * &self.den) - &(&self.num * &self.den.derivative());
        Self::normalized(n, &self.den * &self.den)
    }

    /// `f'/f`
    pub fn dlog(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroFunction);
        }
        let n = &(&self.num.derivative() * &self.den) - &(&self.num * &self.den.derivative());
        Ok(Self::normalized(n, &self.num * &self.den))
    }

    pub fn checked_div(&self, o: &Self) -> Result<Self> {
        if o.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(Self::normalized(&self.num * &o.den, &self.den * &o.num))
    }

    pub fn powi(&self, e: i32) -> Result<Self> {
        let p = Self::normalized(self.num.pow(e.unsigned_abs()), self.den.pow(e.unsigned_abs()));
        if e >= 0 {
            Ok(p)
        } else {
            Self::from_int(1).checked_div(&p)
        }
    }

    pub fn scale(&self, c: &GaussRational) -> Self {
        Self::normalized(self.num.scale(c), self.den.clone())
    }

    /// `self(h(t))`
    pub fn compose(&self, h: &Self) -> Result<Self> {
        let d = self.num.degree().max(self.den.degree());
        let hom = |p: &Poly| -> Poly {
            let mut acc = Poly::zero();
            for (k, c) in p.coeffs().iter().enumerate() {
                let term = &(&h.num.pow(k as u32) * &h.den.pow((d - k) as u32)).scale(c);
                acc = &acc + term;
            }
            acc
        };
        Self::new(hom(&self.num), hom(&self.den))
    }

    pub fn eval(&self, t: &GaussRational) -> ExtValue {
        let d = self.den.eval(t);
        if d.is_zero() {
            return ExtValue::Infinity;
        }
        ExtValue::Finite(&self.num.eval(t) / &d)
    }

    pub fn eval_at_infinity(&self) -> ExtValue {
        if self.num.is_zero() {
            return ExtValue::Finite(GaussRational::zero());
        }
        let (dn, dd) = (self.num.degree(), self.den.degree());
        if dn > dd {
            ExtValue::Infinity
        } else if dn < dd {
            ExtValue::Finite(GaussRational::zero())
        } else {
            ExtValue::Finite(&self.num.leading() / &self.den.leading())
        }
    }

    pub fn eval_place(&self, p: &Place) -> ExtValue {
        match p {
            Place::Finite(t) => self.eval(t),
            Place::Infinity => self.eval_at_infinity(),
        }
    }

    /// Floating evaluation; poles give a non-finite result.
    pub fn eval_f64(&self, t: Complex64) -> Complex64 {
        self.num.eval_f64(t) / self.den.eval_f64(t)
    }

    /// `(f(t), f'(t))` in floating point.
    pub fn eval_with_derivative(&self, t: Complex64) -> (Complex64, Complex64) {
        let n = self.num.eval_f64(t);
        let d = self.den.eval_f64(t);
        let dn = self.num.derivative().eval_f64(t);
        let dd = self.den.derivative().eval_f64(t);
        (n / d, (dn * d - n * dd) / (d * d))
    }

    /// Order of vanishing at a place (negative for poles).
    pub fn order_at(&self, p: &Place) -> i64 {
        match p {
            Place::Finite(t) => {
                self.num.root_multiplicity(t) as i64 - self.den.root_multiplicity(t) as i64
            }
            Place::Infinity => self.den.degree() as i64 - self.num.degree() as i64,
        }
    }

    pub fn zeros_poles(&self) -> Result<DivisorList> {
        if self.is_constant() {
            return Err(Error::ConstantFunction);
        }
        let mut entries = Vec::new();
        let push = |p: &Poly, sign: i64, entries: &mut Vec<(Location, i64)>| {
            for (r, m) in roots_with_multiplicity(p) {
                let loc = match r {
                    Root::Exact(g) => Location::Exact(Place::Finite(g)),
                    Root::Numeric { value, .. } => Location::Numeric(value),
                };
                entries.push((loc, sign * m as i64));
            }
        };
        push(&self.num, 1, &mut entries);
        push(&self.den, -1, &mut entries);
        let at_inf = self.order_at(&Place::Infinity);
        if at_inf != 0 {
            entries.push((Location::Exact(Place::Infinity), at_inf));
        }
        Ok(DivisorList { entries })
    }

    /// Exact places where `self` takes the value 0 or infinity, with orders.
    /// Fails with `NonRationalFace` if some such place is not in Q(i).
    pub fn exact_divisor(&self) -> Result<Vec<(Place, i64)>> {
        if self.is_constant() {
            return Ok(Vec::new());
        }
        let div = self.zeros_poles()?;
        let mut out = Vec::new();
        for (loc, m) in div.entries {
            match loc {
                Location::Exact(p) => out.push((p, m)),
                Location::Numeric(v) => {
                    let z = v.to_complex();
                    return Err(Error::NonRationalFace(format!(
                        "{} of {} near t = {:.12}{:+.12}i",
                        if m > 0 { "zero" } else { "pole" },
                        self,
                        z.re,
                        z.im
                    )));
                }
            }
        }
        Ok(out)
    }
}

impl std::ops::Add for &RationalFunction {
    type Output = RationalFunction;
    fn add(self, o: &RationalFunction) -> RationalFunction {
        RationalFunction::normalized(
            &(&self.num * &o.den) + &(&o.num * &self.den),
            &self.den * &o.den,
        )
    }
}

impl std::ops::Sub for &RationalFunction {
    type Output = RationalFunction;
    fn sub(self, o: &RationalFunction) -> RationalFunction {
        RationalFunction::normalized(
            &(&self.num * &o.den) - &(&o.num * &self.den),
            &self.den * &o.den,
        )
    }
}

impl std::ops::Mul for &RationalFunction {
    type Output = RationalFunction;
    fn mul(self, o: &RationalFunction) -> RationalFunction {
        RationalFunction::normalized(&self.num * &o.num, &self.den * &o.den)
    }
}

impl std::ops::Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction { num: -&self.num, den: self.den.clone() }
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_constant() {
            if self.num.is_constant() {
                write!(f, "{}", self.num.coeff(0))
            } else {
                write!(f, "{}", self.num)
            }
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}
