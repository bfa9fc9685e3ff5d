//! Standard curve families in the 3-cube and their combinations.

use num_rational::BigRational;
use num_traits::One;

use super::{Ambient, Component, Cycle, ParamCurve};
use crate::exact::{GaussRational, RationalFunction};

fn t() -> RationalFunction {
    RationalFunction::var()
}

fn one() -> RationalFunction {
    RationalFunction::from_int(1)
}

/// `1 - a/t`
fn one_minus_over_t(a: &GaussRational) -> RationalFunction {
    let a_over_t = RationalFunction::constant(a.clone())
        .checked_div(&t())
        .expect("t is nonzero");
    &one() - &a_over_t
}

/// V(a) = (1 - a/t, 1 - t, t); its boundary is the point (1 - a, a).
pub fn v_curve(a: &GaussRational) -> ParamCurve {
    ParamCurve::labeled(vec![one_minus_over_t(a), &one() - &t(), t()], format!("V({a})"))
}

/// W(b) = (1 - b/t, t, 1 - t); its boundary is the point (b, 1 - b).
pub fn w_curve(b: &GaussRational) -> ParamCurve {
    ParamCurve::labeled(vec![one_minus_over_t(b), t(), &one() - &t()], format!("W({b})"))
}

pub fn v_cycle(a: &GaussRational) -> Cycle {
    Cycle::from_terms_unchecked(
        Ambient::Pt,
        3,
        vec![(BigRational::one(), Component::Curve(v_curve(a)))],
    )
}

pub fn w_cycle(b: &GaussRational) -> Cycle {
    Cycle::from_terms_unchecked(
        Ambient::Pt,
        3,
        vec![(BigRational::one(), Component::Curve(w_curve(b)))],
    )
}

/// xi_a = V(a) - W(1 - a), a closed cycle whose class is independent of `a`.
pub fn xi_cycle(a: &GaussRational) -> Cycle {
    let b = &GaussRational::one() - a;
    v_cycle(a).sub(&w_cycle(&b))
}
