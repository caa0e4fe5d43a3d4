//! Quality indicators: exact hypervolume for up to five objectives, IGD, and
//! the degradation-oriented baseline construction.
//!
//! The degradation baseline removes the distance part of an instance
//! (`ell = 0`), where every sampled solution is Pareto-optimal, and unions
//! the final populations of repeated runs. IGD against that baseline
//! isolates how much of an algorithm's distribution quality is lost to the
//! boundaries rather than to its own distribution style.

use crate::dominance::{nondominated_indices, DominanceRelation};
use crate::error::{check_dims, Error, Result};
use crate::evolve::{run, EvolutionConfig};
use crate::lattice::lattice_count;
use crate::problems::ProblemInstance;
use crate::types::{FrontBounds, ObjectiveVector};

/// Where a baseline set came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BaselineOrigin {
    PfSample,
    IdealUnion,
}

/// A reference set for IGD-style indicators.
#[derive(Debug, Clone, PartialEq)]
pub struct BaselineSet {
    pub points: Vec<ObjectiveVector>,
    pub origin: BaselineOrigin,
}

/// Exact hypervolume dominated by `set` relative to `reference`, for
/// minimization: the measure of the union of boxes `[z, reference]`.
/// Dimension-sweep recursion slicing on the last objective; intended for the
/// desk scale (`m <= 5`, small sets).
pub fn hypervolume(set: &[ObjectiveVector], reference: &ObjectiveVector) -> Result<f64> {
    let m = reference.len();
    for z in set {
        check_dims(m, z.len())?;
    }
    if m > 5 {
        return Err(Error::InvalidParameter(
            "exact hypervolume is limited to m <= 5".into(),
        ));
    }
    let pts: Vec<Vec<f64>> = set
        .iter()
        .filter(|z| {
            z.values()
                .iter()
                .zip(reference.values())
                .all(|(a, r)| a < r)
        })
        .map(|z| z.values().to_vec())
        .collect();
    Ok(hv_rec(&pts, reference.values()))
}

fn hv_rec(pts: &[Vec<f64>], reference: &[f64]) -> f64 {
    let m = reference.len();
    let keep = nondominated_indices(pts, &DominanceRelation::Pareto);
    let pts: Vec<&Vec<f64>> = keep.iter().map(|&i| &pts[i]).collect();
    if pts.is_empty() {
        return 0.0;
    }
    match m {
        1 => {
            let lo = pts.iter().map(|z| z[0]).fold(f64::INFINITY, f64::min);
            reference[0] - lo
        }
        2 => {
            let mut sorted: Vec<&Vec<f64>> = pts.clone();
            sorted.sort_by(|a, b| a[0].total_cmp(&b[0]));
            let mut area = 0.0;
            for (i, z) in sorted.iter().enumerate() {
                let next_x = if i + 1 < sorted.len() {
                    sorted[i + 1][0]
                } else {
                    reference[0]
                };
                area += (next_x - z[0]) * (reference[1] - z[1]);
            }
            area
        }
        _ => {
            let mut levels: Vec<f64> = pts.iter().map(|z| z[m - 1]).collect();
            levels.sort_by(f64::total_cmp);
            levels.dedup();
            let mut total = 0.0;
            for (k, &level) in levels.iter().enumerate() {
                let top = if k + 1 < levels.len() {
                    levels[k + 1]
                } else {
                    reference[m - 1]
                };
                let slab: Vec<Vec<f64>> = pts
                    .iter()
                    .filter(|z| z[m - 1] <= level)
                    .map(|z| z[..m - 1].to_vec())
                    .collect();
                total += (top - level) * hv_rec(&slab, &reference[..m - 1]);
            }
            total
        }
    }
}

/// Inverted generational distance: both sets are normalized by the bounds,
/// then the mean distance from each baseline point to its nearest
/// approximation point is returned.
pub fn igd(
    approx: &[ObjectiveVector],
    baseline: &BaselineSet,
    bounds: &FrontBounds,
) -> Result<f64> {
    if approx.is_empty() {
        return Err(Error::InsufficientData("empty approximation set".into()));
    }
    if baseline.points.is_empty() {
        return Err(Error::InsufficientData("empty baseline set".into()));
    }
    let approx_n: Vec<Vec<f64>> = approx
        .iter()
        .map(|z| bounds.normalize(z.values()))
        .collect::<Result<_>>()?;
    let mut total = 0.0;
    for b in &baseline.points {
        let bn = bounds.normalize(b.values())?;
        let d2 = approx_n
            .iter()
            .map(|a| {
                a.iter()
                    .zip(bn.iter())
                    .map(|(x, y)| (x - y) * (x - y))
                    .sum::<f64>()
            })
            .fold(f64::INFINITY, f64::min);
        total += d2.sqrt();
    }
    Ok(total / baseline.points.len() as f64)
}

/// Builds the ideal-distribution baseline: the position-only variant of the
/// instance is solved `runs` times and the final populations are unioned,
/// giving `runs x population` Pareto-optimal objective vectors shaped by the
/// algorithm's own distribution style.
pub fn build_ideal_baseline(
    instance: &ProblemInstance,
    config: &EvolutionConfig,
    runs: usize,
    seed: u64,
) -> Result<BaselineSet> {
    if runs < 1 {
        return Err(Error::InvalidParameter("runs must be at least 1".into()));
    }
    let ideal_instance = instance.position_only();
    let mut points = Vec::new();
    for k in 0..runs {
        let mut cfg = config.clone();
        cfg.seed = seed.wrapping_add(k as u64);
        let record = run(&ideal_instance, &cfg)?;
        for s in record.final_population {
            points.push(s.objectives.expect("run caches objectives"));
        }
    }
    Ok(BaselineSet {
        points,
        origin: BaselineOrigin::IdealUnion,
    })
}

/// Dense Pareto-front baseline: a uniform simplex lattice mapped through the
/// position function, sized past `C(50 + m - 1, m - 1)` points.
pub fn pf_baseline(instance: &ProblemInstance) -> BaselineSet {
    let m = instance.m();
    let min_points = lattice_count(m, 50) + 1;
    BaselineSet {
        points: instance.pf_sample(min_points),
        origin: BaselineOrigin::PfSample,
    }
}
