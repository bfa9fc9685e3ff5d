//! Numerical evaluation of regulator currents: Abel-Jacobi values of point
//! cycles, loop pairings over the line, real regulators, rigidity scans and
//! the Stokes check for `T_f`.

mod lemma41;
mod loops;
mod point;
mod rigidity;

use std::f64::consts::PI;

use num_complex::Complex64;

pub use lemma41::{lemma41_check, Bump, Lemma41Report};
pub use loops::{loop_pairing_n2, milnor_pair, pair_loop, real_regulator_loop, MamaReport, PairingReport, PairingTerm};
pub use point::{aj_point_p1, aj_point_p2, aj_point_p2_auto, arc_log_dlog, component_integral, AjReport, ArcIntegral, ComponentIntegral};
pub use rigidity::{rigidity_scan, RigidityReport};

/// A complex number defined modulo `Z(p) = (2πi)^p Z`, with an error bound.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RegulatorValue {
    pub value: Complex64,
    pub lattice: u32,
    pub error: f64,
}

impl RegulatorValue {
    pub fn new(value: Complex64, lattice: u32, error: f64) -> Self {
        Self { value, lattice, error }
    }

    /// `|(2πi)^p|`
    pub fn period(&self) -> f64 {
        (2.0 * PI).powi(self.lattice as i32)
    }

    /// Whether the lattice lies along the imaginary axis.
    fn imaginary_axis(&self) -> bool {
        self.lattice % 2 == 1
    }

    fn axis_part(&self, z: Complex64) -> f64 {
        if self.imaginary_axis() {
            z.im
        } else {
            z.re
        }
    }

    fn with_axis_part(&self, z: Complex64, x: f64) -> Complex64 {
        if self.imaginary_axis() {
            Complex64::new(z.re, x)
        } else {
            Complex64::new(x, z.im)
        }
    }

    /// Canonical representative: odd `p` reduces the imaginary part into
    /// `(−P/2, P/2]`, even `p` the real part into `[0, P)`, `P = (2π)^p`.
    pub fn reduced(&self) -> Self {
        let p = self.period();
        let x = self.axis_part(self.value);
        let r = if self.imaginary_axis() {
            let mut y = x - p * (x / p).round();
            if y <= -0.5 * p {
                y += p;
            }
            y
        } else {
            let y = x.rem_euclid(p);
            if y >= p {
                0.0
            } else {
                y
            }
        };
        Self { value: self.with_axis_part(self.value, r), ..*self }
    }

    /// The other representative when the reduced value sits within its
    /// error of a cell edge.
    pub fn seam_alternate(&self) -> Option<Complex64> {
        let r = self.reduced();
        let p = self.period();
        let x = self.axis_part(r.value);
        let slack = self.error.max(1e-12 * p);
        let (lo, hi) = if self.imaginary_axis() { (-0.5 * p, 0.5 * p) } else { (0.0, p) };
        if x - lo <= slack {
            Some(self.with_axis_part(r.value, x + p))
        } else if hi - x <= slack {
            Some(self.with_axis_part(r.value, x - p))
        } else {
            None
        }
    }

    /// Distance from `self - other` to the nearest lattice point.
    pub fn distance_mod_lattice(&self, other: Complex64) -> f64 {
        let d = self.value - other;
        let p = self.period();
        let x = self.axis_part(d);
        let x = x - p * (x / p).round();
        let y = if self.imaginary_axis() { d.re } else { d.im };
        x.hypot(y)
    }

    /// Equality mod the lattice within the combined error estimates.
    pub fn equal_mod_lattice(&self, other: &RegulatorValue) -> bool {
        self.distance_mod_lattice(other.value) <= self.error + other.error
    }
}

pub fn reduce_mod_lattice(v: RegulatorValue) -> RegulatorValue {
    v.reduced()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduction_examples() {
        let z2 = PI * PI / 6.0;
        let v = RegulatorValue::new(Complex64::new(z2 + 4.0 * PI * PI, 0.0), 2, 0.0).reduced();
        assert!((v.value.re - z2).abs() < 1e-12);
        let v = RegulatorValue::new(Complex64::new(0.0, 3.0 * PI), 1, 0.0).reduced();
        assert!((v.value.im - PI).abs() < 1e-12);
        let v = RegulatorValue::new(Complex64::new(z2, 0.0), 2, 0.0);
        assert!(v.distance_mod_lattice(Complex64::new(z2 - 4.0 * PI * PI, 0.0)) < 1e-12);
    }

    #[test]
    fn reduction_is_idempotent_and_seams() {
        for x in [-7.0, -0.1, 0.0, 3.0, 39.4, 80.0] {
            for p in 0..4 {
                let v = RegulatorValue::new(Complex64::new(x, x / 3.0), p, 0.0).reduced();
                assert_eq!(v.reduced(), v);
            }
        }
        let v = RegulatorValue::new(Complex64::new(1e-14, 0.0), 2, 1e-10);
        let alt = v.seam_alternate().unwrap();
        assert!((alt.re - 4.0 * PI * PI).abs() < 1e-9);
        assert!(RegulatorValue::new(Complex64::new(1.0, 0.0), 2, 1e-10).seam_alternate().is_none());
    }
}
