//! The cubical boundary `sum_i (-1)^(i-1) (d0_i - dinf_i)`.

use num_rational::BigRational;

use super::admissible::{face_places, face_value, require_admissible, FaceValue};
use super::{Ambient, BoxPoint, Component, Cycle};
use crate::error::Result;
use crate::exact::{ExtValue, GaussRational};

/// Restricting to `z_i = 0` contributes the remaining coordinates with
/// multiplicity `ord(z_i)`; restricting to `z_i = inf` contributes them with
/// `-|ord|`, i.e. again `ord`. Points with a remaining coordinate equal to 1
/// are outside the cube and dropped. Boundaries of 0-cycles vanish.
pub fn boundary(z: &Cycle) -> Result<Cycle> {
    require_admissible(z)?;
    let n = z.n.saturating_sub(1);
    let mut terms = Vec::new();
    for (coeff, comp) in &z.terms {
        let Some((curve, vbase)) = comp.curve_data() else { continue };
        for (i, place, ord) in face_places(curve)? {
            let others = curve.coords.iter().enumerate().filter(|(j, _)| *j != i);
            if others.clone().any(|(_, w)| face_value(w, &place) == FaceValue::One) {
                continue;
            }
            let coords: Vec<GaussRational> = others
                .map(|(_, w)| match w.eval_place(&place) {
                    ExtValue::Finite(v) => v,
                    // excluded by admissibility unless some coordinate is 1
                    ExtValue::Infinity => unreachable!("admissible curve meets a codim-2 face"),
                })
                .collect();
            let sign: i64 = if i % 2 == 0 { 1 } else { -1 };
            let c = coeff * BigRational::from_integer((sign * ord).into());
            let point = match (z.ambient, vbase) {
                (Ambient::Pt, _) => BoxPoint::new(coords),
                (Ambient::P1, Some(b)) => BoxPoint::over(b.clone(), coords),
                (Ambient::P1, None) => BoxPoint::over(place.clone(), coords),
            };
            terms.push((c, Component::Point(point)));
        }
    }
    Ok(Cycle::from_terms_unchecked(z.ambient, n, terms))
}

/// The point cycle `(coords)` over a point, with coefficient 1.
pub fn point_cycle(coords: Vec<GaussRational>) -> Cycle {
    let n = coords.len();
    Cycle::from_terms_unchecked(
        Ambient::Pt,
        n,
        vec![(BigRational::from_integer(1.into()), Component::Point(BoxPoint::new(coords)))],
    )
}
