//! The currents `Rⁿ`, `Ωⁿ`, `δ_{Tⁿ}` and the identities relating them.

use num_rational::BigRational;
use num_traits::One;

use super::{cup_triple, level_one_triple, CurrentExpr, Factor};

fn q(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

fn sign(k: usize) -> BigRational {
    if k % 2 == 0 {
        q(1)
    } else {
        q(-1)
    }
}

/// `Rⁿ = Σ_k (±2πi)^k log z_{k+1} dlog z_{k+2}∧…∧dlog z_n·δ_{T_{z_1}∩…∩T_{z_k}}`
/// with `± = (−1)^{n−1}`. `R⁰ = 0`.
pub fn build_r(n: usize) -> CurrentExpr {
    let raw = (0..n)
        .map(|k| {
            let mut fs = vec![Factor::Log(k + 1)];
            fs.extend((k + 2..=n).map(Factor::Dlog));
            fs.extend((1..=k).map(Factor::Cut));
            (sign((n - 1) * k), k as i32, fs)
        })
        .collect();
    CurrentExpr::from_raw(n, raw)
}

/// `Ωⁿ = dlog z_1∧…∧dlog z_n`, with `Ω⁰ = 1`.
pub fn build_omega(n: usize) -> CurrentExpr {
    CurrentExpr::product(n, BigRational::one(), 0, (1..=n).map(Factor::Dlog).collect())
}

/// `δ_{Tⁿ}` with `Tⁿ = T_{z_1}∩…∩T_{z_n}`, and `δ_{T⁰} = 1`.
pub fn build_t(n: usize) -> CurrentExpr {
    CurrentExpr::product(n, BigRational::one(), 0, (1..=n).map(Factor::Cut).collect())
}

/// Coordinates of the box with `z_i` removed, as a relabeling map.
fn skip(n: usize, i: usize) -> Vec<usize> {
    (1..=n).filter(|&j| j != i).collect()
}

fn face(n: usize, i: usize) -> CurrentExpr {
    CurrentExpr::product(n, BigRational::one(), 0, vec![Factor::Face(i)])
}

/// `Σ_i (−1)^i X(z_1,…,ẑ_i,…,z_n)·δ_{(z_i)}`
fn face_sum(n: usize, build: fn(usize) -> CurrentExpr) -> CurrentExpr {
    (1..=n).fold(CurrentExpr::zero(n), |acc, i| {
        let x = build(n - 1).relabel(n, &skip(n, i)).mul(&face(n, i));
        acc.add(&x.scale(&sign(i), 0))
    })
}

/// `d Ωⁿ = 2πi Σ (−1)^i Ω(ẑ_i)·δ_{(z_i)}`
pub fn check_d_omega(n: usize) -> bool {
    build_omega(n).d() == face_sum(n, build_omega).scale(&q(1), 1)
}

/// `d δ_{Tⁿ} = Σ (−1)^i δ_{T(ẑ_i)}·δ_{(z_i)}`: the boundary of `Tⁿ` on the
/// faces, with `δ_{(z_i)}` standing for `ρ_i⁰ − ρ_i^∞`.
pub fn check_d_t(n: usize) -> bool {
    build_t(n).d() == face_sum(n, build_t)
}

/// `d Rⁿ = Ωⁿ − (2πi)ⁿ δ_{Tⁿ} − 2πi Σ (−1)^i R(ẑ_i)·δ_{(z_i)}`, together with
/// the face identities for `Ωⁿ` and `Tⁿ`.
pub fn verify_identity_52_54(n: usize) -> bool {
    if n == 0 {
        return false;
    }
    let rhs = build_omega(n)
        .sub(&build_t(n).scale(&q(1), n as i32))
        .sub(&face_sum(n, build_r).scale(&q(1), 1));
    build_r(n).d() == rhs && check_d_omega(n) && check_d_t(n)
}

/// `R^{ℓ+n}(w, y) = (−1)^ℓ (2πi)^ℓ δ_{T(w)}·Rⁿ(y) + R^ℓ(w)·Ωⁿ(y)`
pub fn product_formula_check(l: usize, n: usize) -> bool {
    let m = l + n;
    let tw = build_t(l).shift(m, 0);
    let rw = build_r(l).shift(m, 0);
    let ry = build_r(n).shift(m, l);
    let oy = build_omega(n).shift(m, l);
    let rhs = tw.mul(&ry).scale(&sign(l), l as i32).add(&rw.mul(&oy));
    build_r(m) == rhs
}

/// The `R` parts of `R_{z_1} ∪ R_{z_2}` for `α = 0` and `α = 1` differ by
/// `d(log z_1 log z_2)`, the image of `(0, 0, log z_1 log z_2)` under the
/// cone differential, while the chain and form parts agree.
pub fn alpha_homotopy_check() -> bool {
    let (Ok(p0), Ok(p1)) = (
        cup_triple(&level_one_triple(), &level_one_triple(), &q(0)),
        cup_triple(&level_one_triple(), &level_one_triple(), &q(1)),
    ) else {
        return false;
    };
    let c = CurrentExpr::product(2, q(1), 0, vec![Factor::Log(1), Factor::Log(2)]);
    p0.t == p1.t && p0.omega == p1.omega && p0.r.sub(&p1.r) == c.d()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cases() {
        assert_eq!(build_r(1), CurrentExpr::product(1, q(1), 0, vec![Factor::Log(1)]));
        let r2 = CurrentExpr::from_raw(
            2,
            vec![
                (q(1), 0, vec![Factor::Log(1), Factor::Dlog(2)]),
                (q(-1), 1, vec![Factor::Log(2), Factor::Cut(1)]),
            ],
        );
        assert_eq!(build_r(2), r2);
        let r3 = build_r(3);
        assert_eq!(r3.terms.len(), 3);
        assert!(r3.terms.iter().all(|t| t.coeff == q(1)));
        let mut tw: Vec<i32> = r3.terms.iter().map(|t| t.twist).collect();
        tw.sort();
        assert_eq!(tw, vec![0, 1, 2]);
    }

    #[test]
    fn d_r1() {
        let want = build_omega(1).sub(&build_t(1).scale(&q(1), 1));
        assert_eq!(build_r(1).d(), want);
    }

    #[test]
    fn identities_through_six() {
        for n in 1..=6 {
            assert!(verify_identity_52_54(n), "n = {n}");
            assert!(build_r(n).d().d().is_zero());
        }
    }

    #[test]
    fn product_formula() {
        for m in 0..=6 {
            for l in 0..=m {
                assert!(product_formula_check(l, m - l), "l = {l}, n = {}", m - l);
            }
        }
    }

    #[test]
    fn homotopy() {
        assert!(alpha_homotopy_check());
    }
}
