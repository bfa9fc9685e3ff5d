//! Quadrature: tanh-sinh for endpoint singularities, adaptive Gauss-Kronrod
//! for smooth pieces, and compensated summation.

use std::f64::consts::PI;

use num_complex::Complex64;

/// Neumaier's compensated sum of complex terms.
#[derive(Clone, Copy, Debug, Default)]
pub struct CompensatedSum {
    sum: Complex64,
    comp: Complex64,
}

fn two_sum_part(sum: f64, comp: &mut f64, x: f64) -> f64 {
    let t = sum + x;
    if sum.abs() >= x.abs() {
        *comp += (sum - t) + x;
    } else {
        *comp += (x - t) + sum;
    }
    t
}

impl CompensatedSum {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, x: Complex64) {
        self.sum.re = two_sum_part(self.sum.re, &mut self.comp.re, x.re);
        self.sum.im = two_sum_part(self.sum.im, &mut self.comp.im, x.im);
    }

    pub fn value(&self) -> Complex64 {
        self.sum + self.comp
    }
}

pub fn compensated_sum<I: IntoIterator<Item = Complex64>>(it: I) -> Complex64 {
    let mut s = CompensatedSum::new();
    for x in it {
        s.add(x);
    }
    s.value()
}

/// Result of a quadrature with its error estimate.
#[derive(Clone, Copy, Debug)]
pub struct Quad {
    pub value: Complex64,
    pub error: f64,
}

/// Tanh-sinh rule on `[a, b]`. The integrand receives `(x, x - a, b - x)`
/// with the endpoint distances computed without cancellation, so integrable
/// endpoint singularities can be evaluated accurately.
pub fn tanh_sinh<F>(f: F, a: f64, b: f64, tol: f64) -> Quad
where
    F: Fn(f64, f64, f64) -> Complex64,
{
    let half = 0.5 * (b - a);
    let tmax = 3.2;
    let mut h = 0.5;
    let eval = |t: f64| -> Complex64 {
        let s = 0.5 * PI * t.sinh();
        let c = s.cosh();
        // 1 - tanh(s) and 1 + tanh(s) without cancellation
        let e = (-2.0 * s.abs()).exp();
        let small = 2.0 * e / (1.0 + e);
        let (da, db) = if s >= 0.0 {
            (half * (2.0 - small), half * small)
        } else {
            (half * small, half * (2.0 - small))
        };
        let w = half * 0.5 * PI * t.cosh() / (c * c);
        if w == 0.0 || da <= 0.0 || db <= 0.0 {
            return Complex64::new(0.0, 0.0);
        }
        let x = if da < db { a + da } else { b - db };
        let v = f(x, da, db);
        if v.is_finite() {
            v * w
        } else {
            Complex64::new(0.0, 0.0)
        }
    };
    let mut sum = CompensatedSum::new();
    sum.add(eval(0.0));
    let mut k = 1;
    while (k as f64) * h <= tmax {
        let t = k as f64 * h;
        sum.add(eval(t));
        sum.add(eval(-t));
        k += 1;
    }
    let mut estimate = sum.value() * h;
    let mut error = f64::INFINITY;
    for level in 0..9 {
        h *= 0.5;
        let mut k = 1;
        while (k as f64) * h <= tmax {
            let t = k as f64 * h;
            sum.add(eval(t));
            sum.add(eval(-t));
            k += 2;
        }
        let next = sum.value() * h;
        error = (next - estimate).norm();
        estimate = next;
        if error <= tol * (1.0 + estimate.norm()) && level >= 2 {
            break;
        }
    }
    Quad { value: estimate, error }
}

const GK_NODES: [f64; 8] = [
    0.991_455_371_120_812_6,
    0.949_107_912_342_758_5,
    0.864_864_423_359_769_1,
    0.741_531_185_599_394_4,
    0.586_087_235_467_691_1,
    0.405_845_151_377_397_2,
    0.207_784_955_007_898_5,
    0.0,
];
const K15_W: [f64; 8] = [
    0.022_935_322_010_529_22,
    0.063_092_092_629_978_55,
    0.104_790_010_322_250_2,
    0.140_653_259_715_525_9,
    0.169_004_726_639_267_9,
    0.190_350_578_064_785_4,
    0.204_432_940_075_298_9,
    0.209_482_141_084_728_8,
];
const G7_W: [f64; 4] = [
    0.129_484_966_168_869_7,
    0.279_705_391_489_276_7,
    0.381_830_050_505_118_9,
    0.417_959_183_673_469_4,
];

fn gk15<F: Fn(f64) -> Complex64>(f: &F, a: f64, b: f64) -> (Complex64, f64) {
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let mut k = Complex64::new(0.0, 0.0);
    let mut g = Complex64::new(0.0, 0.0);
    for (j, x) in GK_NODES.iter().enumerate() {
        let vals = if *x == 0.0 {
            let v = f(c);
            k += v * K15_W[j];
            g += v * G7_W[3];
            continue;
        } else {
            f(c - h * x) + f(c + h * x)
        };
        k += vals * K15_W[j];
        if j % 2 == 1 {
            g += vals * G7_W[j / 2];
        }
    }
    (k * h, ((k - g) * h).norm())
}

/// Adaptive Gauss-Kronrod (7/15) on `[a, b]` to absolute tolerance `tol`.
pub fn gauss_kronrod<F: Fn(f64) -> Complex64>(f: F, a: f64, b: f64, tol: f64) -> Quad {
    let mut stack = vec![(a, b, 0u32)];
    let mut sum = CompensatedSum::new();
    let mut err = 0.0;
    let width = (b - a).abs().max(f64::MIN_POSITIVE);
    while let Some((lo, hi, depth)) = stack.pop() {
        let (v, e) = gk15(&f, lo, hi);
        let local_tol = tol * (hi - lo).abs() / width;
        if e <= local_tol.max(1e-15 * v.norm()) || depth >= 40 {
            sum.add(v);
            err += e;
        } else {
            let m = 0.5 * (lo + hi);
            stack.push((lo, m, depth + 1));
            stack.push((m, hi, depth + 1));
        }
    }
    Quad { value: sum.value(), error: err }
}

/// Gauss-Kronrod over consecutive breakpoints.
pub fn gauss_kronrod_pieces<F: Fn(f64) -> Complex64>(f: F, breaks: &[f64], tol: f64) -> Quad {
    let mut sum = CompensatedSum::new();
    let mut err = 0.0;
    let pieces = breaks.len().saturating_sub(1).max(1) as f64;
    for w in breaks.windows(2) {
        let q = gauss_kronrod(&f, w[0], w[1], tol / pieces);
        sum.add(q.value);
        err += q.error;
    }
    Quad { value: sum.value(), error: err }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tanh_sinh_log_endpoint() {
        // int_0^1 log(x) dx = -1
        let q = tanh_sinh(|_, da, _| Complex64::new(da.ln(), 0.0), 0.0, 1.0, 1e-14);
        assert!((q.value.re + 1.0).abs() < 1e-13, "{:?}", q);
        // int_0^1 log(1-x)/x dx = -pi^2/6
        let q = tanh_sinh(|x, _, db| Complex64::new(db.ln() / x, 0.0), 0.0, 1.0, 1e-14);
        assert!((q.value.re + PI * PI / 6.0).abs() < 1e-12, "{:?}", q);
    }

    #[test]
    fn kronrod_smooth() {
        let q = gauss_kronrod(|x| Complex64::new(x.cos(), x.sin()), 0.0, 2.0 * PI, 1e-13);
        assert!(q.value.norm() < 1e-13);
        let q = gauss_kronrod(|x| Complex64::new(x.exp(), 0.0), 0.0, 1.0, 1e-14);
        assert!((q.value.re - (1f64.exp() - 1.0)).abs() < 1e-14);
    }

    #[test]
    fn compensated() {
        let xs = [1e16, 1.0, -1e16, 1.0].map(|x| Complex64::new(x, 0.0));
        assert_eq!(compensated_sum(xs).re, 2.0);
    }
}
