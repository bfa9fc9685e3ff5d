//! Polynomial roots over Q(i): exact linear factors where they exist,
//! 256-bit fixed-point approximations (about 77 digits) otherwise.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::gauss::{rat_to_f64, GaussRational};
use super::poly::Poly;

/// Fractional bits of the fixed-point complex type.
pub const FIX_BITS: u64 = 256;

/// A complex number `(re + im i) / 2^FIX_BITS` with big-integer parts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FixComplex {
    pub re: BigInt,
    pub im: BigInt,
}

fn rat_to_fix(r: &BigRational) -> BigInt {
    let scaled: BigInt = r.numer() << FIX_BITS;
    let (q, rem) = scaled.div_mod_floor(r.denom());
    // round half up
    if (rem << 1u32) >= *r.denom() {
        q + 1
    } else {
        q
    }
}

impl FixComplex {
    pub fn zero() -> Self {
        Self { re: BigInt::zero(), im: BigInt::zero() }
    }

    pub fn from_gauss(g: &GaussRational) -> Self {
        Self { re: rat_to_fix(&g.re), im: rat_to_fix(&g.im) }
    }

    pub fn from_complex(z: Complex64) -> Self {
        let g = GaussRational::from_complex(z).unwrap_or_else(GaussRational::zero);
        Self::from_gauss(&g)
    }

    pub fn to_gauss(&self) -> GaussRational {
        let den = BigInt::one() << FIX_BITS;
        GaussRational::new(
            BigRational::new(self.re.clone(), den.clone()),
            BigRational::new(self.im.clone(), den),
        )
    }

    pub fn to_complex(&self) -> Complex64 {
        self.to_gauss().to_complex()
    }

    fn add(&self, o: &Self) -> Self {
        Self { re: &self.re + &o.re, im: &self.im + &o.im }
    }

    fn sub(&self, o: &Self) -> Self {
        Self { re: &self.re - &o.re, im: &self.im - &o.im }
    }

    fn mul(&self, o: &Self) -> Self {
        Self {
            re: (&self.re * &o.re - &self.im * &o.im) >> FIX_BITS,
            im: (&self.re * &o.im + &self.im * &o.re) >> FIX_BITS,
        }
    }

    fn div(&self, o: &Self) -> Option<Self> {
        let den = &o.re * &o.re + &o.im * &o.im;
        if den.is_zero() {
            return None;
        }
        let nre: BigInt = (&self.re * &o.re + &self.im * &o.im) << FIX_BITS;
        let nim: BigInt = (&self.im * &o.re - &self.re * &o.im) << FIX_BITS;
        Some(Self { re: nre / &den, im: nim / den })
    }

    /// max(|re|, |im|) in units of 2^-FIX_BITS.
    fn max_abs(&self) -> BigInt {
        self.re.abs().max(self.im.abs())
    }
}

fn eval_fix(coeffs: &[FixComplex], t: &FixComplex) -> FixComplex {
    let mut acc = FixComplex::zero();
    for c in coeffs.iter().rev() {
        acc = acc.mul(t).add(c);
    }
    acc
}

/// Newton polishing of a simple root in fixed point.  Returns the refined
/// root and the final residual |p(t)| bound (in units of 2^-FIX_BITS).
pub fn polish_root(p: &Poly, start: Complex64) -> (FixComplex, BigInt) {
    let coeffs: Vec<FixComplex> = p.coeffs().iter().map(FixComplex::from_gauss).collect();
    let dcoeffs: Vec<FixComplex> = p
        .derivative()
        .coeffs()
        .iter()
        .map(FixComplex::from_gauss)
        .collect();
    let mut t = FixComplex::from_complex(start);
    let tiny = BigInt::one() << 8u32;
    for _ in 0..400 {
        let v = eval_fix(&coeffs, &t);
        let d = eval_fix(&dcoeffs, &t);
        let Some(step) = v.div(&d) else { break };
        t = t.sub(&step);
        if step.max_abs() <= tiny {
            break;
        }
    }
    let residual = eval_fix(&coeffs, &t).max_abs();
    (t, residual)
}

/// Simultaneous (Aberth-Ehrlich) iteration in double precision.
pub fn aberth(coeffs: &[Complex64]) -> Vec<Complex64> {
    let n = coeffs.len().saturating_sub(1);
    if n == 0 {
        return Vec::new();
    }
    let lead = coeffs[n];
    let c: Vec<Complex64> = coeffs.iter().map(|a| a / lead).collect();
    // Cauchy-type radius for the starting circle
    let radius = 1.0
        + c[..n]
            .iter()
            .map(|a| a.norm())
            .fold(0.0_f64, f64::max);
    let mut z: Vec<Complex64> = (0..n)
        .map(|k| {
            let ang = 2.0 * std::f64::consts::PI * (k as f64) / (n as f64) + 0.4;
            Complex64::from_polar(radius * 0.5 + 0.1, ang)
        })
        .collect();
    let eval = |t: Complex64| {
        let mut p = Complex64::new(0.0, 0.0);
        let mut dp = Complex64::new(0.0, 0.0);
        for a in c.iter().rev() {
            dp = dp * t + p;
            p = p * t + a;
        }
        (p, dp)
    };
    for _ in 0..500 {
        let mut moved = 0.0_f64;
        for k in 0..n {
            let (p, dp) = eval(z[k]);
            if p.norm() == 0.0 {
                continue;
            }
            let ratio = p / dp;
            let mut s = Complex64::new(0.0, 0.0);
            for j in 0..n {
                if j != k {
                    s += 1.0 / (z[k] - z[j]);
                }
            }
            let w = ratio / (1.0 - ratio * s);
            if w.is_finite() {
                z[k] -= w;
                moved = moved.max(w.norm() / (1.0 + z[k].norm()));
            }
        }
        if moved < 1e-15 {
            break;
        }
    }
    z
}

/// Yun squarefree decomposition: returns `(a_k, k)` with `p = lc * prod a_k^k`.
pub fn squarefree_decomposition(p: &Poly) -> Vec<(Poly, usize)> {
    let mut out = Vec::new();
    if p.is_constant() {
        return out;
    }
    let dp = p.derivative();
    let a0 = Poly::gcd(p, &dp);
    let mut b = p.div_rem(&a0).0;
    let mut c = dp.div_rem(&a0).0;
    let mut d = &c - &b.derivative();
    let mut k = 1;
    while !b.is_constant() {
        let a = Poly::gcd(&b, &d);
        if !a.is_constant() {
            out.push((a.clone(), k));
        }
        b = b.div_rem(&a).0;
        c = d.div_rem(&a).0;
        d = &c - &b.derivative();
        k += 1;
    }
    out
}

/// Best rational approximation of `x` by continued fractions, accepted only
/// if within 2^-180 with denominator below 2^96.
fn recognize_rational(x: &BigRational) -> Option<BigRational> {
    let tol = BigRational::new(BigInt::one(), BigInt::one() << 180u32);
    let qmax = BigInt::one() << 96u32;
    let (mut p0, mut q0) = (BigInt::zero(), BigInt::one());
    let (mut p1, mut q1) = (BigInt::one(), BigInt::zero());
    let mut rest = x.clone();
    for _ in 0..200 {
        let a = rest.floor().to_integer();
        let p2 = &a * &p1 + &p0;
        let q2 = &a * &q1 + &q0;
        if q2 > qmax {
            return None;
        }
        let cand = BigRational::new(p2.clone(), q2.clone());
        if (&cand - x).abs() < tol {
            return Some(cand);
        }
        let frac = &rest - BigRational::from_integer(a);
        if frac.is_zero() {
            return Some(cand);
        }
        rest = frac.recip();
        p0 = p1;
        q0 = q1;
        p1 = p2;
        q1 = q2;
    }
    None
}

/// A root of a polynomial over Q(i).
#[derive(Clone, Debug)]
pub enum Root {
    Exact(GaussRational),
    /// Not in Q(i); `value` carries ~77 significant bits-per-part digits and
    /// `residual` is |p(value)| in units of 2^-256.
    Numeric { value: FixComplex, residual: BigInt },
}

impl Root {
    pub fn to_complex(&self) -> Complex64 {
        match self {
            Root::Exact(g) => g.to_complex(),
            Root::Numeric { value, .. } => value.to_complex(),
        }
    }
}

/// All finite roots of `p` with multiplicity.
pub fn roots_with_multiplicity(p: &Poly) -> Vec<(Root, usize)> {
    let mut out = Vec::new();
    for (factor, mult) in squarefree_decomposition(p) {
        let mut rest = factor.monic();
        // peel off linear factors over Q(i) first
        loop {
            if rest.is_constant() {
                break;
            }
            if rest.degree() == 1 {
                let r = -&rest.coeff(0);
                out.push((Root::Exact(r), mult));
                rest = Poly::one();
                break;
            }
            let approx = aberth(&rest.to_complex_coeffs());
            let mut found = None;
            for z in &approx {
                let (fx, _) = polish_root(&rest, *z);
                let g = fx.to_gauss();
                if let (Some(re), Some(im)) = (recognize_rational(&g.re), recognize_rational(&g.im)) {
                    let cand = GaussRational::new(re, im);
                    if rest.eval(&cand).is_zero() {
                        found = Some(cand);
                        break;
                    }
                }
            }
            match found {
                Some(r) => {
                    rest = rest.div_rem(&Poly::linear(&r)).0;
                    out.push((Root::Exact(r), mult));
                }
                None => {
                    for z in approx {
                        let (value, residual) = polish_root(&rest, z);
                        out.push((Root::Numeric { value, residual }, mult));
                    }
                    break;
                }
            }
        }
    }
    out
}

/// Decimal rendering of a fixed-point part with `digits` significant digits.
pub fn fix_to_decimal(v: &BigInt, digits: usize) -> String {
    let r = BigRational::new(v.clone(), BigInt::one() << FIX_BITS);
    let f = rat_to_f64(&r);
    if digits <= 17 {
        return format!("{f:.*e}", digits.saturating_sub(1));
    }
    // exact long division for the extra digits
    let neg = r.is_negative();
    let a = r.abs();
    let int = a.floor().to_integer();
    let mut frac = a - BigRational::from_integer(int.clone());
    let mut s = format!("{}{}.", if neg { "-" } else { "" }, int);
    for _ in 0..digits {
        frac *= BigRational::from_integer(10.into());
        let d = frac.floor().to_integer();
        s.push_str(&d.to_string());
        frac -= BigRational::from_integer(d);
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gaussian_roots_are_exact() {
        // t^2 + 1
        let p = Poly::new(vec![GaussRational::one(), GaussRational::zero(), GaussRational::one()]);
        let roots = roots_with_multiplicity(&p);
        assert_eq!(roots.len(), 2);
        for (r, m) in roots {
            assert_eq!(m, 1);
            match r {
                Root::Exact(g) => assert!(g == GaussRational::i() || g == -GaussRational::i()),
                _ => panic!("expected exact root"),
            }
        }
    }

    #[test]
    fn irrational_roots_are_polished() {
        // t^2 - 2
        let p = Poly::new(vec![GaussRational::from_int(-2), GaussRational::zero(), GaussRational::one()]);
        let roots = roots_with_multiplicity(&p);
        assert_eq!(roots.len(), 2);
        for (r, _) in roots {
            match r {
                Root::Numeric { value, residual } => {
                    assert!(residual < (BigInt::one() << 40u32));
                    let x = value.to_complex();
                    assert!((x.re.abs() - 2f64.sqrt()).abs() < 1e-15);
                    let dec = fix_to_decimal(&value.re.abs(), 60);
                    assert!(dec.starts_with("1.41421356237309504880168872420969807856967187537694"));
                }
                _ => panic!("sqrt 2 is not Gaussian rational"),
            }
        }
    }

    #[test]
    fn multiplicities_from_yun() {
        let a = Poly::linear(&GaussRational::from_ratio(1, 3));
        let b = Poly::linear(&GaussRational::from_parts(2, 7, -1, 5));
        let p = &a.pow(3) * &b.pow(2);
        let mut roots = roots_with_multiplicity(&p);
        roots.sort_by_key(|(_, m)| *m);
        assert_eq!(roots.len(), 2);
        assert_eq!(roots[0].1, 2);
        assert_eq!(roots[1].1, 3);
    }
}
