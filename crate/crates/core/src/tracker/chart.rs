//! Local coordinates on the parameter line around the zeros and poles of a
//! function: `t = c + u` near a finite point, `t = 1/u` near infinity.
//! Functions are recomposed exactly, so evaluation near a chart center keeps
//! full relative precision in `u`.

use num_complex::Complex64;

use crate::error::Result;
use crate::exact::{GaussRational, Location, Place, Poly, RationalFunction};

#[derive(Clone, Debug, PartialEq)]
pub enum Center {
    Global,
    Finite(GaussRational),
    Infinity,
}

#[derive(Clone, Debug)]
pub struct Chart {
    pub center: Center,
    /// Complex position of the center (unused for global/infinity).
    pub c: Complex64,
    /// Radius in `u` of the region where this chart is preferred.
    pub radius: f64,
    /// Whether the center is an exact point (false for numerically located roots).
    pub exact: bool,
}

impl Chart {
    pub fn to_global(&self, u: Complex64) -> Complex64 {
        match self.center {
            Center::Global => u,
            Center::Finite(_) => self.c + u,
            Center::Infinity => 1.0 / u,
        }
    }

    pub fn from_global(&self, t: Complex64) -> Complex64 {
        match self.center {
            Center::Global => t,
            Center::Finite(_) => t - self.c,
            Center::Infinity => 1.0 / t,
        }
    }

    /// `dt/du`
    pub fn dt_du(&self, u: Complex64) -> Complex64 {
        match self.center {
            Center::Infinity => -1.0 / (u * u),
            _ => Complex64::new(1.0, 0.0),
        }
    }

    /// `g` pulled back to this chart, exactly.
    pub fn pull_back(&self, g: &RationalFunction) -> Result<RationalFunction> {
        match &self.center {
            Center::Global => Ok(g.clone()),
            Center::Finite(c) => {
                let shift = RationalFunction::from_poly(Poly::new(vec![c.clone(), GaussRational::one()]));
                g.compose(&shift)
            }
            Center::Infinity => {
                let inv = RationalFunction::from_int(1).checked_div(&RationalFunction::var())?;
                g.compose(&inv)
            }
        }
    }

    pub fn place(&self) -> Option<Place> {
        match &self.center {
            Center::Global => None,
            Center::Finite(c) => Some(Place::Finite(c.clone())),
            Center::Infinity => Some(Place::Infinity),
        }
    }
}

/// Floating copy of a rational function with its derivative.
#[derive(Clone, Debug)]
pub struct FloatRf {
    num: Vec<Complex64>,
    den: Vec<Complex64>,
    dnum: Vec<Complex64>,
    dden: Vec<Complex64>,
}

fn horner(c: &[Complex64], x: Complex64) -> Complex64 {
    let mut acc = Complex64::new(0.0, 0.0);
    for a in c.iter().rev() {
        acc = acc * x + a;
    }
    acc
}

impl FloatRf {
    pub fn new(f: &RationalFunction) -> Self {
        Self {
            num: f.num().to_complex_coeffs(),
            den: f.den().to_complex_coeffs(),
            dnum: f.num().derivative().to_complex_coeffs(),
            dden: f.den().derivative().to_complex_coeffs(),
        }
    }

    pub fn value(&self, x: Complex64) -> Complex64 {
        horner(&self.num, x) / horner(&self.den, x)
    }

    /// `(N, D, N', D')` at x.
    pub fn parts(&self, x: Complex64) -> (Complex64, Complex64, Complex64, Complex64) {
        (
            horner(&self.num, x),
            horner(&self.den, x),
            horner(&self.dnum, x),
            horner(&self.dden, x),
        )
    }

    /// `(g, g'/g)` at x.
    pub fn value_dlog(&self, x: Complex64) -> (Complex64, Complex64) {
        let (n, d, dn, dd) = self.parts(x);
        (n / d, dn / n - dd / d)
    }

    /// Coefficient of `u^m` at `u = 0` for a known order `m`. Reading the
    /// coefficient at the known index keeps this stable when the chart center
    /// is only an approximation of the root.
    pub fn leading_coefficient(&self, m: i64) -> Complex64 {
        let at = |c: &[Complex64], k: usize| c.get(k).copied().unwrap_or(Complex64::new(0.0, 0.0));
        if m >= 0 {
            at(&self.num, m as usize) / at(&self.den, 0)
        } else {
            at(&self.num, 0) / at(&self.den, m.unsigned_abs() as usize)
        }
    }
}

/// Charts adapted to one function `f`: global, infinity, and one per
/// finite zero or pole.
#[derive(Clone, Debug)]
pub struct ChartSet {
    pub charts: Vec<Chart>,
    /// Index of the chart at infinity.
    pub infinity: usize,
    /// Radius in t beyond which the infinity chart is used.
    pub r_inf: f64,
}

impl ChartSet {
    /// `special`: locations of zeros and poles (finite ones get charts).
    pub fn new(special: &[Location]) -> Self {
        let mut centers: Vec<(Center, Complex64, bool)> = Vec::new();
        for loc in special {
            match loc {
                Location::Exact(Place::Finite(g)) => {
                    let c = Center::Finite(g.clone());
                    if !centers.iter().any(|(x, _, _)| *x == c) {
                        centers.push((c, g.to_complex(), true));
                    }
                }
                Location::Numeric(v) => {
                    let z = v.to_complex();
                    let g = GaussRational::from_complex(z).unwrap_or_else(GaussRational::zero);
                    centers.push((Center::Finite(g), z, false));
                }
                Location::Exact(Place::Infinity) => {}
            }
        }
        let mut charts = vec![Chart { center: Center::Global, c: Complex64::new(0.0, 0.0), radius: f64::INFINITY, exact: true }];
        let mut max_extent: f64 = 0.0;
        for (k, (center, c, exact)) in centers.iter().enumerate() {
            let mut r = 0.3 * (1.0 + c.norm());
            for (j, (_, d, _)) in centers.iter().enumerate() {
                if j != k {
                    r = r.min(0.3 * (c - d).norm());
                }
            }
            max_extent = max_extent.max(c.norm() + r);
            charts.push(Chart { center: center.clone(), c: *c, radius: r, exact: *exact });
        }
        let r_inf = 2.0 * max_extent + 2.0;
        charts.push(Chart {
            center: Center::Infinity,
            c: Complex64::new(0.0, 0.0),
            radius: 1.0 / r_inf,
            exact: true,
        });
        let infinity = charts.len() - 1;
        Self { charts, infinity, r_inf }
    }

    /// Preferred chart for a point given in chart `k` coordinates.
    pub fn best_chart(&self, k: usize, u: Complex64) -> usize {
        let ch = &self.charts[k];
        if k != 0 && u.norm() < 0.8 * ch.radius {
            return k;
        }
        let t = ch.to_global(u);
        if !t.is_finite() || t.norm() > self.r_inf {
            return self.infinity;
        }
        for (j, c) in self.charts.iter().enumerate().skip(1) {
            if j != self.infinity && (t - c.c).norm() < c.radius {
                return j;
            }
        }
        0
    }

    pub fn chart_of_place(&self, p: &Place) -> Option<usize> {
        match p {
            Place::Infinity => Some(self.infinity),
            Place::Finite(g) => self
                .charts
                .iter()
                .position(|c| c.center == Center::Finite(g.clone())),
        }
    }

    pub fn chart_near(&self, z: Complex64) -> Option<usize> {
        self.charts
            .iter()
            .enumerate()
            .skip(1)
            .filter(|(j, _)| *j != self.infinity)
            .min_by(|a, b| (a.1.c - z).norm().total_cmp(&(b.1.c - z).norm()))
            .map(|(j, _)| j)
    }

    /// Pull back several functions into every chart.
    pub fn pull_back_all(&self, fs: &[&RationalFunction]) -> Result<Vec<Vec<FloatRf>>> {
        self.charts
            .iter()
            .map(|ch| {
                fs.iter()
                    .map(|g| ch.pull_back(g).map(|h| FloatRf::new(&h)))
                    .collect::<Result<Vec<_>>>()
            })
            .collect()
    }
}
