//! Random exact inputs shared by the integration tests.
#![allow(dead_code)]

use hchow::exact::{GaussRational, Poly, RationalFunction};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `p/q` with `|p| <= max`, `1 <= q <= max`.
pub fn rational(r: &mut ChaCha8Rng, max: i64) -> GaussRational {
    GaussRational::from_ratio(r.gen_range(-max..=max), r.gen_range(1..=max))
}

/// Random Gaussian rational, real half of the time.
pub fn gaussian(r: &mut ChaCha8Rng, max: i64) -> GaussRational {
    if r.gen_bool(0.5) {
        rational(r, max)
    } else {
        GaussRational::from_parts(r.gen_range(-max..=max), r.gen_range(1..=max), r.gen_range(-max..=max), r.gen_range(1..=max))
    }
}

pub fn nonzero(r: &mut ChaCha8Rng, max: i64) -> GaussRational {
    loop {
        let g = gaussian(r, max);
        if !g.is_zero() {
            return g;
        }
    }
}

/// `c · Π (t − x)` over `roots`.
pub fn from_roots(c: GaussRational, roots: &[GaussRational]) -> Poly {
    roots.iter().fold(Poly::constant(c), |p, x| &p * &Poly::linear(x))
}

/// A non-constant function with exact finite zeros and poles, numerator and
/// denominator of degree at most `max_deg`, and its finite divisor.
pub fn factored(r: &mut ChaCha8Rng, max_deg: usize) -> (RationalFunction, Vec<(GaussRational, i64)>) {
    loop {
        let dn = r.gen_range(0..=max_deg);
        let dd = r.gen_range(0..=max_deg);
        if dn + dd == 0 {
            continue;
        }
        let mut zs: Vec<GaussRational> = (0..dn).map(|_| gaussian(r, 4)).collect();
        let mut ps: Vec<GaussRational> = (0..dd).map(|_| gaussian(r, 4)).collect();
        if dn >= 2 && r.gen_bool(0.2) {
            zs[1] = zs[0].clone();
        }
        if dd >= 2 && r.gen_bool(0.2) {
            ps[1] = ps[0].clone();
        }
        if zs.iter().any(|z| ps.contains(z)) {
            continue;
        }
        let f = RationalFunction::new(from_roots(nonzero(r, 5), &zs), from_roots(GaussRational::one(), &ps)).unwrap();
        let mut div: Vec<(GaussRational, i64)> = Vec::new();
        for (set, s) in [(&zs, 1), (&ps, -1)] {
            for z in set.iter() {
                match div.iter_mut().find(|(x, _)| x == z) {
                    Some(e) => e.1 += s,
                    None => div.push((z.clone(), s)),
                }
            }
        }
        return (f, div);
    }
}

/// A function of degree at most `max_deg` with random coefficients; its roots
/// are generally outside Q(i).
pub fn generic(r: &mut ChaCha8Rng, max_deg: usize) -> RationalFunction {
    loop {
        let dn = r.gen_range(0..=max_deg);
        let dd = r.gen_range(0..=max_deg);
        let num = Poly::new((0..=dn).map(|_| gaussian(r, 6)).collect());
        let den = Poly::new((0..=dd).map(|_| gaussian(r, 6)).collect());
        if num.is_zero() || den.is_zero() {
            continue;
        }
        match RationalFunction::new(num, den) {
            Ok(f) if !f.is_constant() => return f,
            _ => continue,
        }
    }
}

pub fn complex_in(r: &mut ChaCha8Rng, lo: f64, hi: f64) -> Complex64 {
    Complex64::new(r.gen_range(lo..hi), r.gen_range(lo..hi))
}
