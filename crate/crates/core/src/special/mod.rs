//! Branch-aware logarithms, the dilogarithm, and quadrature helpers.

pub mod dilog;
pub mod quad;

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};

pub use dilog::{bloch_wigner, dilog};

/// Relative guard band around branch cuts.
pub const CUT_GUARD: f64 = 1e-12;

/// Direction of a logarithm cut: the ray `e^{i theta} * R^-`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CutAngle {
    theta: f64,
}

impl Default for CutAngle {
    fn default() -> Self {
        Self { theta: 0.0 }
    }
}

impl CutAngle {
    /// Reduces `theta` into (-pi, pi].
    pub fn new(theta: f64) -> Self {
        let mut t = theta.rem_euclid(2.0 * PI);
        if t > PI {
            t -= 2.0 * PI;
        }
        Self { theta: t }
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    /// Unit vector `e^{i theta}`.
    pub fn direction(&self) -> Complex64 {
        Complex64::from_polar(1.0, self.theta)
    }

    /// Rotates `z` so that the cut becomes the standard negative real axis.
    pub fn rotate(&self, z: Complex64) -> Complex64 {
        z * Complex64::from_polar(1.0, -self.theta)
    }

    /// Distance from `z` to the closed cut ray (which contains 0).
    pub fn distance(&self, z: Complex64) -> f64 {
        let w = self.rotate(z);
        if w.re <= 0.0 {
            w.im.abs()
        } else {
            w.norm()
        }
    }

    /// Whether `z` lies on the open cut ray within the guard band.
    pub fn on_cut(&self, z: Complex64) -> bool {
        self.distance(z) < CUT_GUARD * (1.0 + z.norm())
    }
}

/// `log_theta(z) = Log(z e^{-i theta}) + i theta`, with imaginary part in
/// `(theta - pi, theta + pi)`.
pub fn log_branch(z: Complex64, cut: CutAngle) -> Result<Complex64> {
    if cut.on_cut(z) {
        return Err(Error::OnBranchCut(format!(
            "log at {z} with cut angle {}",
            cut.theta()
        )));
    }
    Ok(log_unchecked(z, cut))
}

/// The same branch without the guard-band test (side-limits are whatever
/// floating point gives).
pub fn log_unchecked(z: Complex64, cut: CutAngle) -> Complex64 {
    cut.rotate(z).ln() + Complex64::new(0.0, cut.theta())
}

/// Principal logarithm with the guard-band test.
pub fn log_principal(z: Complex64) -> Result<Complex64> {
    log_branch(z, CutAngle::default())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn log_examples() {
        assert_eq!(log_branch(Complex64::new(1.0, 0.0), CutAngle::default()).unwrap(), Complex64::new(0.0, 0.0));
        let l = log_branch(Complex64::new(0.0, 1.0), CutAngle::default()).unwrap();
        assert!((l - Complex64::new(0.0, PI / 2.0)).norm() < 1e-15);
        // the cut along i*R^- leaves -1 in the upper sheet of the rotated branch
        let l = log_branch(Complex64::new(-1.0, 0.0), CutAngle::new(PI / 2.0)).unwrap();
        assert!((l - Complex64::new(0.0, PI)).norm() < 1e-15);
        assert!(matches!(
            log_branch(Complex64::new(-2.0, 0.0), CutAngle::default()),
            Err(Error::OnBranchCut(_))
        ));
        assert!(log_branch(Complex64::new(0.0, 0.0), CutAngle::default()).is_err());
    }

    #[test]
    fn branches_differ_by_two_pi_i() {
        for k in 0..40 {
            let z = Complex64::from_polar(0.3 + k as f64 * 0.1, k as f64 * 0.77);
            let a = log_branch(z, CutAngle::new(0.0));
            let b = log_branch(z, CutAngle::new(1.3));
            if let (Ok(a), Ok(b)) = (a, b) {
                let m = (a - b).im / (2.0 * PI);
                assert!((m - m.round()).abs() < 1e-12 && (a - b).re.abs() < 1e-12);
                assert!(m.round().abs() <= 1.0);
            }
        }
    }
}
