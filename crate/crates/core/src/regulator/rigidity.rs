//! AJ values of a one-parameter family of cycles.

use rayon::prelude::*;

use super::{aj_point_p2_auto, RegulatorValue};
use crate::cycle::Cycle;
use crate::error::Result;
use crate::exact::GaussRational;
use crate::special::CutAngle;

#[derive(Clone, Debug)]
pub struct RigidityReport {
    pub rows: Vec<(GaussRational, RegulatorValue)>,
    /// Largest pairwise distance modulo the lattice.
    pub max_deviation: f64,
}

pub fn rigidity_scan<F>(family: F, values: &[GaussRational], cuts: &[CutAngle], tol: f64) -> Result<RigidityReport>
where
    F: Fn(&GaussRational) -> Result<Cycle> + Sync,
{
    let rows = values
        .par_iter()
        .map(|a| {
            let z = family(a)?;
            Ok((a.clone(), aj_point_p2_auto(&z, cuts, tol)?.value))
        })
        .collect::<Result<Vec<_>>>()?;
    let mut max_deviation: f64 = 0.0;
    for (i, (_, x)) in rows.iter().enumerate() {
        for (_, y) in &rows[i + 1..] {
            max_deviation = max_deviation.max(x.distance_mod_lattice(y.value));
        }
    }
    Ok(RigidityReport { rows, max_deviation })
}
