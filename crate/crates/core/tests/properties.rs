mod common;

use std::f64::consts::PI;

use hchow::currents::{CurrentExpr, Factor};
use hchow::cycle::{boundary, check_admissible, translate, Ambient, BoxPoint, Component, Cycle, ParamCurve};
use hchow::exact::{parse_rational_function, ExtValue, GaussRational, Params, RationalFunction};
use hchow::regulator::{aj_point_p1, pair_loop, RegulatorValue};
use hchow::special::{bloch_wigner, log_branch, CutAngle};
use hchow::tracker::Loop;
use num_complex::Complex64;
use num_rational::BigRational;
use proptest::prelude::*;

fn factor() -> impl Strategy<Value = Factor> {
    (0..4u8, 1..=3usize).prop_map(|(k, i)| match k {
        0 => Factor::Log(i),
        1 => Factor::Dlog(i),
        2 => Factor::Cut(i),
        _ => Factor::Face(i),
    })
}

fn ratio() -> impl Strategy<Value = BigRational> {
    (-6i64..=6, 1i64..=6).prop_map(|(p, q)| BigRational::new(p.into(), q.into()))
}

fn term() -> impl Strategy<Value = (BigRational, i32, Vec<Factor>)> {
    (ratio(), 0..3i32, prop::collection::vec(factor(), 0..5))
}

fn current() -> impl Strategy<Value = CurrentExpr> {
    prop::collection::vec(term(), 0..4).prop_map(|t| CurrentExpr::from_raw(3, t))
}

fn gauss() -> impl Strategy<Value = GaussRational> {
    (-6i64..=6, 1i64..=6, -6i64..=6, 1i64..=6).prop_map(|(a, b, c, d)| GaussRational::from_parts(a, b, c, d))
}

fn nonzero_gauss() -> impl Strategy<Value = GaussRational> {
    gauss().prop_filter("nonzero", |g| !g.is_zero())
}

/// Sign of reordering `fs` into `perm` applied to it, counting only swaps of
/// odd-degree factors.
fn koszul_sign(fs: &[Factor], perm: &[usize]) -> i64 {
    let mut s = 1;
    for i in 0..perm.len() {
        for j in i + 1..perm.len() {
            if perm[i] > perm[j] && fs[perm[i]].degree() % 2 == 1 && fs[perm[j]].degree() % 2 == 1 {
                s = -s;
            }
        }
    }
    s
}

fn rf(s: &str) -> RationalFunction {
    parse_rational_function(s, &Params::new()).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn normal_form_is_canonical_under_shuffles(t in term(), perm in Just((0..5).collect::<Vec<usize>>()).prop_shuffle()) {
        let (c, w, fs) = t;
        let perm: Vec<usize> = perm.into_iter().filter(|&k| k < fs.len()).collect();
        let shuffled: Vec<Factor> = perm.iter().map(|&k| fs[k]).collect();
        let sign = BigRational::from_integer(koszul_sign(&fs, &perm).into());
        let a = CurrentExpr::from_raw(3, vec![(c.clone(), w, fs)]);
        let b = CurrentExpr::from_raw(3, vec![(c * sign, w, shuffled)]);
        prop_assert_eq!(a, b);
    }

    #[test]
    fn d_is_linear_and_squares_to_zero(a in current(), b in current(), c in ratio()) {
        prop_assert_eq!(a.add(&b).d(), a.d().add(&b.d()));
        prop_assert_eq!(a.scale(&c, 1).d(), a.d().scale(&c, 1));
        prop_assert!(a.d().d().is_zero());
    }

    #[test]
    fn leibniz_rule(x in term(), y in term()) {
        let a = CurrentExpr::from_raw(3, vec![x]);
        let b = CurrentExpr::from_raw(3, vec![y]);
        if let Some(deg) = a.degree() {
            let sign = BigRational::from_integer(if deg % 2 == 0 { 1 } else { -1 }.into());
            let rhs = a.d().mul(&b).add(&a.mul(&b.d()).scale(&sign, 0));
            prop_assert_eq!(a.mul(&b).d(), rhs);
        }
    }

    #[test]
    fn product_is_associative(a in current(), b in current(), c in current()) {
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
    }

    #[test]
    fn point_aj_is_additive(xs in prop::collection::vec(nonzero_gauss(), 1..4), ys in prop::collection::vec(nonzero_gauss(), 1..4)) {
        let pts = |v: &[GaussRational]| {
            let terms = v
                .iter()
                .map(|g| (BigRational::from_integer(1.into()), Component::Point(BoxPoint::new(vec![g.clone()]))))
                .collect();
            Cycle::new(Ambient::Pt, 1, terms).unwrap()
        };
        let (zx, zy) = (pts(&xs), pts(&ys));
        let sum = aj_point_p1(&zx.add(&zy)).unwrap();
        let parts = aj_point_p1(&zx).unwrap().value + aj_point_p1(&zy).unwrap().value;
        prop_assert!(sum.distance_mod_lattice(parts) < 1e-12);
    }

    #[test]
    fn log_branches_differ_by_lattice(re in -5.0f64..5.0, im in -5.0f64..5.0, t1 in -3.1f64..3.1, t2 in -3.1f64..3.1) {
        let z = Complex64::new(re, im);
        let (c1, c2) = (CutAngle::new(t1), CutAngle::new(t2));
        if let (Ok(a), Ok(b)) = (log_branch(z, c1), log_branch(z, c2)) {
            prop_assert!((a.exp() - z).norm() < 1e-12 * (1.0 + z.norm()));
            let k = (a - b).im / (2.0 * PI);
            prop_assert!((a - b).re.abs() < 1e-12);
            prop_assert!((k - k.round()).abs() < 1e-12 && k.round().abs() <= 1.0);
        }
    }

    #[test]
    fn bloch_wigner_symmetries(re in -4.0f64..4.0, im in -4.0f64..4.0) {
        let z = Complex64::new(re, im);
        let one = Complex64::new(1.0, 0.0);
        prop_assume!(z.norm() > 1e-3 && (one - z).norm() > 1e-3);
        let d = bloch_wigner(z).unwrap();
        prop_assert!((bloch_wigner(z.conj()).unwrap() + d).abs() < 1e-12);
        prop_assert!((bloch_wigner(one / z).unwrap() + d).abs() < 1e-12);
        prop_assert!((bloch_wigner(one - z).unwrap() + d).abs() < 1e-12);
        // bounded by D(e^{i pi/3})
        prop_assert!(d.abs() <= 1.0149416064096536 + 1e-12);
    }

    #[test]
    fn reduction_is_idempotent(re in -200.0f64..200.0, im in -200.0f64..200.0, p in 1u32..4) {
        let v = RegulatorValue::new(Complex64::new(re, im), p, 0.0);
        let r = v.reduced();
        prop_assert!((r.reduced().value - r.value).norm() < 1e-12 * (1.0 + r.value.norm()));
        prop_assert!(v.distance_mod_lattice(r.value) < 1e-10);
    }

    #[test]
    fn boundary_commutes_with_uniform_translation(seed in any::<u64>(), lambda in nonzero_gauss()) {
        let mut r = common::rng(seed);
        let coords = vec![common::factored(&mut r, 2).0, common::factored(&mut r, 2).0];
        let z = Cycle::new(Ambient::Pt, 2, vec![(BigRational::from_integer(1.into()), Component::Curve(ParamCurve::new(coords.clone())))]).unwrap();
        prop_assume!(check_admissible(&z).unwrap().is_ok());
        // points with a coordinate at 1 lie outside the cube, and scaling moves 1
        let one = GaussRational::one();
        let inv = &one / &lambda;
        for (i, zi) in coords.iter().enumerate() {
            for (p, _) in zi.exact_divisor().unwrap() {
                let other = coords[1 - i].eval_place(&p);
                prop_assume!(other != ExtValue::Finite(one.clone()) && other != ExtValue::Finite(inv.clone()));
            }
        }
        let tau = vec![lambda.clone(), lambda.clone()];
        let moved = translate(&z, &tau).unwrap();
        prop_assume!(check_admissible(&moved).unwrap().is_ok());
        prop_assert_eq!(boundary(&moved).unwrap(), translate(&boundary(&z).unwrap(), &tau[1..]).unwrap());
    }

    #[test]
    fn printed_functions_parse_back(seed in any::<u64>()) {
        let mut r = common::rng(seed);
        let f = common::generic(&mut r, 4);
        prop_assert_eq!(rf(&f.to_string()), f);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(20))]

    /// Moving the loop inside an annulus free of zeros and poles, or rotating
    /// the cuts, changes the pairing only by the lattice.
    #[test]
    fn loop_pairing_is_homotopy_invariant(r1 in 0.6f64..1.9, r2 in 0.6f64..1.9, dx in -0.05f64..0.05, t1 in -1.0f64..1.0, t2 in -1.0f64..1.0) {
        let f = rf("(t - 1/2)*(t + i/3)");
        let g = rf("(t - 2)/(t + 3*i)");
        let zero = CutAngle::default();
        let a = pair_loop(&f, &g, &Loop::circle(Complex64::new(0.0, 0.0), r1), zero, zero, 1e-12).unwrap();
        let b = pair_loop(&f, &g, &Loop::circle(Complex64::new(dx, 0.0), r2), CutAngle::new(t1), CutAngle::new(t2), 1e-12).unwrap();
        let v = RegulatorValue::new(a.value, 2, 0.0);
        prop_assert!(v.distance_mod_lattice(b.value) < 1e-8, "{} vs {}", a.value, b.value);
    }
}
