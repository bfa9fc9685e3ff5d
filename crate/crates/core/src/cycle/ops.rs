//! Coordinate permutations, alternation, translation and degeneracy.

use num_bigint::BigInt;
use num_rational::BigRational;

use super::admissible::{check_admissible, AdmissibilityReport};
use super::{BoxPoint, Component, Cycle, ParamCurve, VerticalCurve};
use crate::error::{Error, Result};
use crate::exact::{GaussRational, RationalFunction};

fn map_coords<F, G>(comp: &Component, fc: F, fp: G) -> Component
where
    F: Fn(&[RationalFunction]) -> Vec<RationalFunction>,
    G: Fn(&[GaussRational]) -> Vec<GaussRational>,
{
    match comp {
        Component::Curve(c) => Component::Curve(ParamCurve::labeled(fc(&c.coords), c.label.clone())),
        Component::Vertical(v) => Component::Vertical(VerticalCurve {
            basepoint: v.basepoint.clone(),
            fiber: ParamCurve::labeled(fc(&v.fiber.coords), v.fiber.label.clone()),
        }),
        Component::Point(p) => Component::Point(BoxPoint { base: p.base.clone(), coords: fp(&p.coords) }),
    }
}

/// New coordinate k is old coordinate `sigma[k]`.
pub fn permute(z: &Cycle, sigma: &[usize]) -> Cycle {
    let terms = z
        .terms
        .iter()
        .map(|(c, comp)| {
            let pc = map_coords(
                comp,
                |v| sigma.iter().map(|&k| v[k].clone()).collect(),
                |v| sigma.iter().map(|&k| v[k].clone()).collect(),
            );
            (c.clone(), pc)
        })
        .collect();
    Cycle::from_terms_unchecked(z.ambient, z.n, terms)
}

/// All permutations of `0..n` with their signs.
pub fn permutations(n: usize) -> Vec<(Vec<usize>, i64)> {
    fn rec(prefix: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for k in 0..used.len() {
            if !used[k] {
                used[k] = true;
                prefix.push(k);
                rec(prefix, used, out);
                prefix.pop();
                used[k] = false;
            }
        }
    }
    let mut perms = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], &mut perms);
    perms
        .into_iter()
        .map(|p| {
            let inversions = (0..n)
                .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
                .filter(|&(a, b)| p[a] > p[b])
                .count();
            let sign = if inversions % 2 == 0 { 1 } else { -1 };
            (p, sign)
        })
        .collect()
}

/// `(1/n!) sum_sigma sgn(sigma) sigma(Z)`
pub fn alt(z: &Cycle) -> Cycle {
    let perms = permutations(z.n);
    let nfact = BigRational::from_integer(BigInt::from(perms.len().max(1)));
    let mut acc = Cycle::zero(z.ambient, z.n);
    for (sigma, sign) in perms {
        let w = BigRational::from_integer(sign.into()) / &nfact;
        acc = acc.add(&permute(z, &sigma).scale(&w));
    }
    acc
}

/// Coordinatewise multiplication `z_i -> tau_i z_i`.
pub fn translate(z: &Cycle, tau: &[GaussRational]) -> Result<Cycle> {
    if tau.len() != z.n {
        return Err(Error::InadmissibleInput(format!(
            "translation has {} entries for a cycle with n = {}",
            tau.len(),
            z.n
        )));
    }
    if tau.iter().any(GaussRational::is_zero) {
        return Err(Error::ZeroTranslation);
    }
    let terms = z
        .terms
        .iter()
        .map(|(c, comp)| {
            let tc = map_coords(
                comp,
                |v| v.iter().zip(tau).map(|(f, a)| f.scale(a)).collect(),
                |v| v.iter().zip(tau).map(|(x, a)| x * a).collect(),
            );
            (c.clone(), tc)
        })
        .collect();
    Ok(Cycle::from_terms_unchecked(z.ambient, z.n, terms))
}

/// Translation followed by an admissibility check of the result.
pub fn translate_checked(z: &Cycle, tau: &[GaussRational]) -> Result<(Cycle, AdmissibilityReport)> {
    let out = translate(z, tau)?;
    let rep = check_admissible(&out)?;
    Ok((out, rep))
}

/// True for a full coordinate fiber: one coordinate a degree-1 map onto
/// P^1, all others constant.
pub fn is_degenerate(c: &ParamCurve) -> bool {
    let nonconst: Vec<&RationalFunction> = c.coords.iter().filter(|z| !z.is_constant()).collect();
    nonconst.len() == 1 && nonconst[0].degree() == 1
}

/// Degeneracy for any component; graphs over P^1 are never degenerate.
pub fn component_is_degenerate(comp: &Component, over_point: bool) -> bool {
    match comp {
        Component::Curve(c) => over_point && is_degenerate(c),
        Component::Vertical(v) => is_degenerate(&v.fiber),
        Component::Point(_) => false,
    }
}
