//! Principal-branch dilogarithm and the Bloch-Wigner function.

use std::f64::consts::PI;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use super::CUT_GUARD;
use crate::error::{Error, Result};

const PI2_6: f64 = PI * PI / 6.0;
const SERIES_TERMS: usize = 30;

/// `B_{2k} / (2k+1)!` for k = 1..SERIES_TERMS, from exact Bernoulli numbers.
fn bernoulli_coeffs() -> &'static [f64] {
    static COEFFS: OnceLock<Vec<f64>> = OnceLock::new();
    COEFFS.get_or_init(|| {
        let m = 2 * SERIES_TERMS;
        // Akiyama-Tanigawa, giving B_n with B_1 = +1/2 (only even n used)
        let mut a: Vec<BigRational> = vec![BigRational::zero(); m + 1];
        let mut bern = Vec::with_capacity(m + 1);
        for n in 0..=m {
            a[n] = BigRational::new(BigInt::one(), BigInt::from(n + 1));
            for j in (1..=n).rev() {
                a[j - 1] = BigRational::from_integer(BigInt::from(j)) * (&a[j - 1] - &a[j]);
            }
            bern.push(a[0].clone());
        }
        let mut fact = BigInt::one();
        let mut out = Vec::with_capacity(SERIES_TERMS);
        for n in 1..=(2 * SERIES_TERMS + 1) {
            fact *= BigInt::from(n);
            if n % 2 == 1 && n >= 3 {
                let v = &bern[n - 1] / BigRational::from_integer(fact.clone());
                out.push(v.to_f64().unwrap_or(0.0));
            }
        }
        out
    })
}

/// Series in `u = -log(1 - z)`: `u - u^2/4 + sum_k B_2k u^(2k+1)/(2k+1)!`.
/// Accurate for |u| well inside 2 pi.
fn dilog_core(z: Complex64) -> Complex64 {
    let u = -(Complex64::new(1.0, 0.0) - z).ln();
    let u2 = u * u;
    let mut acc = u - u2 * 0.25;
    let mut p = u * u2;
    for c in bernoulli_coeffs() {
        let term = p * *c;
        acc += term;
        if term.norm() < 1e-18 * acc.norm() {
            break;
        }
        p *= u2;
    }
    acc
}

/// Principal branch of Li_2, cut along [1, inf).
pub fn dilog(z: Complex64) -> Result<Complex64> {
    if !z.is_finite() {
        return Err(Error::SingularPoint(format!("dilog at {z}")));
    }
    if z.re > 1.0 && z.im.abs() < CUT_GUARD * (1.0 + z.norm()) {
        return Err(Error::OnBranchCut(format!("dilog at {z}")));
    }
    Ok(dilog_unchecked(z))
}

fn dilog_unchecked(z: Complex64) -> Complex64 {
    let one = Complex64::new(1.0, 0.0);
    if z == Complex64::new(0.0, 0.0) {
        return z;
    }
    if z == one {
        return Complex64::new(PI2_6, 0.0);
    }
    if z.norm() > 1.0 {
        // Li2(z) = -pi^2/6 - log^2(-z)/2 - Li2(1/z)
        let l = (-z).ln();
        return -PI2_6 - l * l * 0.5 - dilog_unit_disk(one / z);
    }
    dilog_unit_disk(z)
}

fn dilog_unit_disk(z: Complex64) -> Complex64 {
    let one = Complex64::new(1.0, 0.0);
    if z.re > 0.5 {
        // Li2(z) = pi^2/6 - log z log(1-z) - Li2(1-z)
        let w = one - z;
        let corr = if w == Complex64::new(0.0, 0.0) { Complex64::new(0.0, 0.0) } else { z.ln() * w.ln() };
        return PI2_6 - corr - dilog_core(w);
    }
    dilog_core(z)
}

/// `D(z) = Im Li2(z) + arg(1 - z) log|z|`.
pub fn bloch_wigner(z: Complex64) -> Result<f64> {
    let one = Complex64::new(1.0, 0.0);
    if z == Complex64::new(0.0, 0.0) || z == one || !z.is_finite() {
        return Err(Error::SingularPoint(format!("Bloch-Wigner at {z}")));
    }
    if z.norm() > 1.0 {
        // D(1/z) = -D(z) avoids the cut of Li2
        return Ok(-bloch_wigner_inner(one / z));
    }
    Ok(bloch_wigner_inner(z))
}

fn bloch_wigner_inner(z: Complex64) -> f64 {
    let one = Complex64::new(1.0, 0.0);
    dilog_unchecked(z).im + (one - z).arg() * z.norm().ln()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn series(z: Complex64, terms: usize) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        let mut p = z;
        for k in 1..=terms {
            acc += p / (k * k) as f64;
            p *= z;
        }
        acc
    }

    #[test]
    fn special_values() {
        assert_eq!(dilog(Complex64::new(0.0, 0.0)).unwrap(), Complex64::new(0.0, 0.0));
        assert!((dilog(Complex64::new(1.0, 0.0)).unwrap().re - PI2_6).abs() < 1e-15);
        let half = dilog(Complex64::new(0.5, 0.0)).unwrap();
        let ln2 = 2f64.ln();
        assert!((half.re - (PI * PI / 12.0 - ln2 * ln2 / 2.0)).abs() < 1e-15);
        assert!((half - series(Complex64::new(0.5, 0.0), 200)).norm() < 1e-15);
        assert!((dilog(Complex64::new(-1.0, 0.0)).unwrap().re + PI * PI / 12.0).abs() < 1e-15);
        assert!(dilog(Complex64::new(2.0, 0.0)).is_err());
    }

    #[test]
    fn matches_series_inside_disk() {
        for k in 0..30 {
            let z = Complex64::from_polar(0.05 + 0.02 * k as f64, 0.9 * k as f64);
            let d = dilog(z).unwrap();
            assert!((d - series(z, 400)).norm() < 1e-15, "{z}");
        }
    }

    #[test]
    fn bloch_wigner_basics() {
        for x in [-3.0, -0.5, 0.25, 0.75, 1.5, 7.0] {
            assert!(bloch_wigner(Complex64::new(x, 0.0)).unwrap().abs() < 1e-14);
        }
        // maximum at e^{i pi/3}: 1.0149416064096536...
        let d = bloch_wigner(Complex64::from_polar(1.0, PI / 3.0)).unwrap();
        assert!((d - 1.014_941_606_409_653_6).abs() < 1e-13);
        assert!(bloch_wigner(Complex64::new(1.0, 0.0)).is_err());
    }
}
