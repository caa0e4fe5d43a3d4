//! Enclosed volume behind a reference point, the proxy for the degree of
//! dominance resistance: a larger volume means the reference is easier to
//! dominate by random sampling.
//!
//! Four routes are implemented. The exact polytope decomposition covers
//! linear fronts; Monte Carlo rejection works for every front; the two
//! closed forms are the `p -> infinity` and `p -> 0` limits; and the
//! scalarization integral `H = c_m \int rho^m dlambda` (with `c_m = 1/m`
//! under the sphere surface measure, validated against the box case)
//! estimates the same quantity from Tchebycheff radii along random
//! directions.

mod polytope;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::problems::{CaseStudyFront, FrontSpec, GeneratorKind};
use crate::types::{FrontBounds, IndexSet, ObjectiveVector};

/// A front plus a reference point whose enclosed region is measured.
#[derive(Debug, Clone)]
pub struct EnclosedRegionSpec {
    pub front: FrontSpec,
    pub reference: ObjectiveVector,
}

impl EnclosedRegionSpec {
    pub fn new(front: FrontSpec, reference: ObjectiveVector) -> Result<Self> {
        if front.m() != reference.len() {
            return Err(Error::DimensionMismatch {
                expected: front.m(),
                got: reference.len(),
            });
        }
        Ok(Self { front, reference })
    }

    fn rbar(&self) -> Vec<f64> {
        self.front
            .bounds()
            .normalize(self.reference.values())
            .expect("dims checked at construction")
    }

    /// Product of the raw coordinate scales, converting normalized volume
    /// back to objective units.
    fn scale(&self) -> f64 {
        let b = self.front.bounds();
        b.nadir()
            .iter()
            .zip(b.ideal().iter())
            .map(|(n, i)| n - i)
            .product()
    }
}

/// How a volume estimate was produced.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VolumeMethod {
    ExactLinear,
    MonteCarlo,
    Scalarized,
    LimitPInf,
    LimitPZero,
}

impl VolumeMethod {
    pub fn name(self) -> &'static str {
        match self {
            VolumeMethod::ExactLinear => "exact",
            VolumeMethod::MonteCarlo => "mc",
            VolumeMethod::Scalarized => "scalarized",
            VolumeMethod::LimitPInf => "limit_pinf",
            VolumeMethod::LimitPZero => "limit_pzero",
        }
    }
}

/// A volume value with its sampling uncertainty (zero for exact routes).
#[derive(Debug, Clone, PartialEq)]
pub struct VolumeEstimate {
    pub value: f64,
    pub std_error: f64,
    pub method: VolumeMethod,
    pub samples: u64,
}

impl VolumeEstimate {
    fn exact(value: f64, method: VolumeMethod) -> Self {
        Self {
            value,
            std_error: 0.0,
            method,
            samples: 0,
        }
    }
}

/// Exact volume for linear fronts (`p = 1`): vertex enumeration over the
/// halfspace system followed by a centroid-fan decomposition into simplices.
///
/// Supports the case-study family at `p = 1` (weights `1/(m-1)`), generator-1
/// instances with all `p_i = 1` (weights `d`), and the box-corner front.
pub fn volume_exact_linear(spec: &EnclosedRegionSpec) -> Result<VolumeEstimate> {
    let m = spec.front.m();
    let rbar = spec.rbar();
    if rbar.iter().any(|&r| r <= 0.0) {
        return Ok(VolumeEstimate::exact(0.0, VolumeMethod::ExactLinear));
    }
    let weights: Vec<f64> = match &spec.front {
        FrontSpec::BoxCorner(_) => {
            let v: f64 = rbar.iter().product::<f64>() * spec.scale();
            return Ok(VolumeEstimate::exact(v, VolumeMethod::ExactLinear));
        }
        FrontSpec::CaseStudy(f) => {
            if (f.p - 1.0).abs() > 1e-12 {
                return Err(Error::InvalidParameter(format!(
                    "exact volume requires p = 1, front has p = {}",
                    f.p
                )));
            }
            vec![1.0 / (m as f64 - 1.0); m]
        }
        FrontSpec::Generator(inst) => {
            if inst.generator() != GeneratorKind::G1 {
                return Err(Error::InvalidParameter(
                    "exact volume supports generator-1 fronts only".into(),
                ));
            }
            if inst.params().p.iter().any(|&p| (p - 1.0).abs() > 1e-12) {
                return Err(Error::InvalidParameter(
                    "exact volume requires all p_i = 1".into(),
                ));
            }
            inst.params().d.clone()
        }
    };
    let rows = polytope::weighted_region_rows(&weights, &rbar);
    let verts = polytope::enumerate_vertices(&rows, m);
    let vol = polytope::fan_volume(&rows, &verts, m) * spec.scale();
    Ok(VolumeEstimate::exact(vol, VolumeMethod::ExactLinear))
}

/// Monte Carlo rejection estimate: uniform samples in the box spanned by the
/// ideal point and the reference, accepted iff weakly dominated by the WPF.
/// The standard error comes from the binomial acceptance variance.
pub fn volume_monte_carlo(spec: &EnclosedRegionSpec, n_samples: u64, seed: u64) -> VolumeEstimate {
    let m = spec.front.m();
    let rbar = spec.rbar();
    let box_vol: f64 = rbar.iter().map(|r| r.max(0.0)).product();
    if box_vol <= 0.0 || n_samples == 0 {
        return VolumeEstimate {
            value: 0.0,
            std_error: 0.0,
            method: VolumeMethod::MonteCarlo,
            samples: n_samples,
        };
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut hits = 0u64;
    let mut z = vec![0.0; m];
    for _ in 0..n_samples {
        for (zj, rj) in z.iter_mut().zip(rbar.iter()) {
            *zj = rng.gen::<f64>() * rj;
        }
        if spec.front.weakly_dominated_norm(&z) {
            hits += 1;
        }
    }
    let ratio = hits as f64 / n_samples as f64;
    let scale = spec.scale();
    VolumeEstimate {
        value: box_vol * ratio * scale,
        std_error: box_vol * (ratio * (1.0 - ratio) / n_samples as f64).sqrt() * scale,
        method: VolumeMethod::MonteCarlo,
        samples: n_samples,
    }
}

/// `p -> infinity` closed form: the region is the box between the ideal
/// point and the reference.
pub fn volume_limit_pinf(reference: &ObjectiveVector, bounds: &FrontBounds) -> f64 {
    reference
        .values()
        .iter()
        .zip(bounds.ideal().iter())
        .map(|(r, i)| (r - i).max(0.0))
        .product()
}

/// `p -> 0` closed form: the front collapses onto the `m` extreme vectors
/// and the region is a union of up to `m + 1` boxes.
pub fn volume_limit_pzero(reference: &ObjectiveVector, bounds: &FrontBounds) -> f64 {
    let r = reference.values();
    let ide = bounds.ideal();
    let nad = bounds.nadir();
    let m = r.len();
    let flange = |j: usize| (r[j] - nad[j]).max(0.0);
    let mut total = 0.0;
    for k in 0..m {
        let mut term = (nad[k].min(r[k]) - ide[k]).max(0.0);
        for j in 0..m {
            if j != k {
                term *= flange(j);
            }
        }
        total += term;
    }
    total + (0..m).map(flange).product::<f64>()
}

fn gamma_half_integer(twice: usize) -> f64 {
    // Gamma(twice / 2) via Gamma(1) = 1, Gamma(1/2) = sqrt(pi)
    let mut x = twice as f64 / 2.0;
    let mut acc = 1.0;
    while x > 1.0 + 1e-9 {
        x -= 1.0;
        acc *= x;
    }
    if (x - 0.5).abs() < 1e-12 {
        acc * std::f64::consts::PI.sqrt()
    } else {
        acc
    }
}

/// Surface area of the unit sphere restricted to the nonnegative orthant.
fn orthant_sphere_area(m: usize) -> f64 {
    let full = 2.0 * std::f64::consts::PI.powf(m as f64 / 2.0) / gamma_half_integer(m);
    full / (1u64 << m) as f64
}

/// Scalarization estimate of the enclosed volume: directions uniform on the
/// positive-orthant unit sphere, Tchebycheff radius by bisection along
/// `z = r - t lambda` against the membership test, and
/// `H = (1/m) area mean(rho^m)`.
pub fn volume_scalarized(
    spec: &EnclosedRegionSpec,
    n_directions: u64,
    seed: u64,
) -> VolumeEstimate {
    let m = spec.front.m();
    let rbar = spec.rbar();
    if n_directions == 0 || !spec.front.weakly_dominated_norm(&rbar) {
        return VolumeEstimate {
            value: 0.0,
            std_error: 0.0,
            method: VolumeMethod::Scalarized,
            samples: n_directions,
        };
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut sum = 0.0;
    let mut sum_sq = 0.0;
    let mut lambda = vec![0.0; m];
    let mut z = vec![0.0; m];
    for _ in 0..n_directions {
        loop {
            let mut norm = 0.0;
            for l in lambda.iter_mut() {
                let g: f64 = rng.sample(StandardNormal);
                *l = g.abs();
                norm += *l * *l;
            }
            if norm > 1e-12 {
                let norm = norm.sqrt();
                lambda.iter_mut().for_each(|l| *l /= norm);
                break;
            }
        }
        // the ray leaves { z >= 0 } just past t_exit, so the bracket end is
        // infeasible once pushed beyond the membership tolerance
        let t_exit = lambda
            .iter()
            .zip(rbar.iter())
            .filter(|(l, _)| **l > 1e-12)
            .map(|(l, r)| r / l)
            .fold(f64::INFINITY, f64::min);
        let mut hi = t_exit + 1e-6;
        let mut lo = 0.0;
        let member_at = |t: f64, z: &mut [f64]| {
            for ((zj, rj), lj) in z.iter_mut().zip(rbar.iter()).zip(lambda.iter()) {
                *zj = rj - t * lj;
            }
            spec.front.weakly_dominated_norm(z)
        };
        let mut guard = 0;
        while member_at(hi, &mut z) && guard < 8 {
            hi = hi * 2.0 + 1.0;
            guard += 1;
        }
        for _ in 0..80 {
            let mid = 0.5 * (lo + hi);
            if member_at(mid, &mut z) {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        let rho_m = lo.powi(m as i32);
        sum += rho_m;
        sum_sq += rho_m * rho_m;
    }
    let n = n_directions as f64;
    let mean = sum / n;
    let var = (sum_sq / n - mean * mean).max(0.0);
    let factor = orthant_sphere_area(m) / m as f64 * spec.scale();
    VolumeEstimate {
        value: factor * mean,
        std_error: factor * (var / n).sqrt(),
        method: VolumeMethod::Scalarized,
        samples: n_directions,
    }
}

/// How sweep points are evaluated.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SweepMethod {
    ExactLinear,
    MonteCarlo { samples: u64 },
    Scalarized { directions: u64 },
}

/// One point of a volume sweep: the sweep coordinate (distance or relative
/// position) and its volume estimate.
#[derive(Debug, Clone)]
pub struct SweepPoint {
    pub x: f64,
    pub estimate: VolumeEstimate,
}

fn estimate_at(
    front: &CaseStudyFront,
    rbar: Vec<f64>,
    method: SweepMethod,
    seed: u64,
) -> Result<VolumeEstimate> {
    let reference = ObjectiveVector::new(
        front
            .bounds
            .denormalize(&rbar)
            .expect("reference has front dimension"),
    )?;
    let spec = EnclosedRegionSpec::new(FrontSpec::CaseStudy(front.clone()), reference)?;
    match method {
        SweepMethod::ExactLinear => volume_exact_linear(&spec),
        SweepMethod::MonteCarlo { samples } => Ok(volume_monte_carlo(&spec, samples, seed)),
        SweepMethod::Scalarized { directions } => Ok(volume_scalarized(&spec, directions, seed)),
    }
}

/// The symmetric point of the constrained surface of a boundary of category
/// `nu`: every constrained coordinate equals `1 - (1/nu)^(1/p)`, which
/// solves the restricted surface equation exactly.
pub fn wpb_midpoint(front: &CaseStudyFront, nu: usize) -> f64 {
    1.0 - (1.0 / nu as f64).powf(1.0 / front.p)
}

/// Reference point for a distance sweep (normalized coordinates): the
/// boundary midpoint pushed out by `delta / sqrt(nu)` along the constrained
/// coordinates, free coordinates pinned at `r_free`.
pub fn sweep_reference_norm(
    front: &CaseStudyFront,
    index_set: &IndexSet,
    r_free: f64,
    delta: f64,
) -> Vec<f64> {
    let base = wpb_midpoint(front, index_set.nu());
    let step = delta / (index_set.nu() as f64).sqrt();
    (0..front.m)
        .map(|j| {
            if index_set.contains(j) {
                base + step
            } else {
                r_free
            }
        })
        .collect()
}

/// Volume as a function of the normal distance `delta` between the reference
/// and the boundary `WPB_{nu,I}`, with the unconstrained coordinates held at
/// `r_free`. The curve passes through the origin: the reference lies on the
/// boundary at `delta = 0`.
pub fn delta_sweep(
    front: &CaseStudyFront,
    index_set: &IndexSet,
    r_free: f64,
    deltas: &[f64],
    method: SweepMethod,
    seed: u64,
) -> Result<Vec<SweepPoint>> {
    if index_set.nu() >= front.m {
        return Err(Error::InvalidParameter(
            "index set must leave at least one free coordinate".into(),
        ));
    }
    if deltas.iter().any(|&d| !(d.is_finite() && d >= 0.0)) {
        return Err(Error::InvalidParameter("deltas must be nonnegative".into()));
    }
    deltas
        .par_iter()
        .enumerate()
        .map(|(i, &delta)| {
            let rbar = sweep_reference_norm(front, index_set, r_free, delta);
            let est = estimate_at(front, rbar, method, seed.wrapping_add(i as u64))?;
            Ok(SweepPoint {
                x: delta,
                estimate: est,
            })
        })
        .collect()
}

/// Reference point for a midline sweep (normalized coordinates): the surface
/// point at relative position `s` (0 = middle, 1 = boundary) of a
/// two-coordinate constrained patch, pushed out by `delta` along the local
/// surface normal; free coordinates at `r_free`.
pub fn midline_reference_norm(
    front: &CaseStudyFront,
    index_set: &IndexSet,
    r_free: f64,
    delta: f64,
    s: f64,
) -> Vec<f64> {
    let p = front.p;
    let mid = wpb_midpoint(front, 2);
    let w1 = mid * (1.0 - s);
    let w2 = 1.0 - (1.0 - (1.0 - w1).powf(p)).max(0.0).powf(1.0 / p);
    // inward normal of the surface sum (1 - w)^p = 1
    let g1 = (1.0 - w1).max(0.0).powf(p - 1.0);
    let g2 = (1.0 - w2).max(0.0).powf(p - 1.0);
    let (n1, n2) = if !g1.is_finite() {
        (1.0, 0.0)
    } else if !g2.is_finite() {
        (0.0, 1.0)
    } else {
        let norm = (g1 * g1 + g2 * g2).sqrt();
        (g1 / norm, g2 / norm)
    };
    let members = index_set.members();
    let mut rbar = vec![r_free; front.m];
    rbar[members[0]] = w1 + delta * n1;
    rbar[members[1]] = w2 + delta * n2;
    rbar
}

/// Volume as the reference slides from the middle of a category-2 boundary
/// to its edge at fixed normal distance `delta`.
pub fn midline_sweep(
    front: &CaseStudyFront,
    index_set: &IndexSet,
    delta: f64,
    r_free: f64,
    positions: &[f64],
    method: SweepMethod,
    seed: u64,
) -> Result<Vec<SweepPoint>> {
    if index_set.nu() != 2 {
        return Err(Error::InvalidParameter(
            "midline sweeps are defined for two-coordinate boundaries".into(),
        ));
    }
    if positions.iter().any(|&s| !(0.0..=1.0).contains(&s)) {
        return Err(Error::InvalidParameter(
            "positions must lie in [0, 1]".into(),
        ));
    }
    positions
        .par_iter()
        .enumerate()
        .map(|(i, &s)| {
            let rbar = midline_reference_norm(front, index_set, r_free, delta, s);
            let est = estimate_at(front, rbar, method, seed.wrapping_add(i as u64))?;
            Ok(SweepPoint {
                x: s,
                estimate: est,
            })
        })
        .collect()
}

/// Estimated asymptotic exponent of a volume-distance curve: least-squares
/// slope of `log volume` against `log delta`, restricted to the smallest
/// distances (`delta <= 0.1`). Nonpositive volumes are excluded; fewer than
/// three usable points is an error.
pub fn growth_order(curve: &[(f64, f64)]) -> Result<f64> {
    let pts: Vec<(f64, f64)> = curve
        .iter()
        .filter(|(d, v)| *d > 0.0 && *d <= 0.1 + 1e-12 && *v > 0.0)
        .map(|(d, v)| (d.ln(), v.ln()))
        .collect();
    if pts.len() < 3 {
        return Err(Error::InsufficientData(format!(
            "growth order needs at least 3 usable points with delta <= 0.1, got {}",
            pts.len()
        )));
    }
    let n = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / n;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / n;
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx) * (p.0 - mx)).sum();
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    Ok(sxy / sxx)
}

/// Distance at which two sweep curves over the same grid cross, by linear
/// interpolation of their difference. Returns `None` when no sign change
/// occurs past the origin.
pub fn crossing_delta(a: &[SweepPoint], b: &[SweepPoint]) -> Option<f64> {
    let mut prev: Option<(f64, f64)> = None;
    for (pa, pb) in a.iter().zip(b.iter()) {
        debug_assert!((pa.x - pb.x).abs() < 1e-12);
        let diff = pb.estimate.value - pa.estimate.value;
        if let Some((x0, d0)) = prev {
            if d0 != 0.0 && diff != 0.0 && d0.signum() != diff.signum() {
                return Some(x0 + (pa.x - x0) * d0 / (d0 - diff));
            }
        }
        if pa.x > 0.0 && (pa.estimate.value > 0.0 || pb.estimate.value > 0.0) {
            prev = Some((pa.x, diff));
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::problems::CaseStudyFront;

    fn case_front(m: usize, p: f64) -> CaseStudyFront {
        CaseStudyFront::new(m, p)
            .unwrap()
            .with_flange_span(0.6)
            .unwrap()
    }

    fn spec(front: &CaseStudyFront, r: &[f64]) -> EnclosedRegionSpec {
        EnclosedRegionSpec::new(
            FrontSpec::CaseStudy(front.clone()),
            ObjectiveVector::new(r.to_vec()).unwrap(),
        )
        .unwrap()
    }

    /// Exact volumes for m=3, p=1 sweeps, from slicing the region along the
    /// free coordinate (independent hand derivation).
    fn analytic_nu2(delta: f64, r_free: f64) -> f64 {
        (r_free - 1.0) * delta * delta + (2.0 * 2f64.sqrt() / 6.0) * delta.powi(3)
    }

    fn analytic_nu1(delta: f64, r_free: f64) -> f64 {
        let e = r_free - 1.0;
        e * e * delta + e * delta * delta + delta.powi(3) / 6.0
    }

    #[test]
    fn exact_matches_analytic_nu2() {
        let front = case_front(3, 1.0);
        for (delta, r_free) in [
            (0.1, 1.3),
            (0.2, 1.3),
            (0.4, 1.3),
            (0.2, 1.03),
            (0.54, 1.03),
        ] {
            let idx = IndexSet::new(vec![0, 1], 3).unwrap();
            let rbar = sweep_reference_norm(&front, &idx, r_free, delta);
            let est = volume_exact_linear(&spec(&front, &rbar)).unwrap();
            let expected = analytic_nu2(delta, r_free);
            assert!(
                (est.value - expected).abs() < 1e-9,
                "delta={delta} rfree={r_free}: {} vs {expected}",
                est.value
            );
        }
    }

    #[test]
    fn exact_matches_analytic_nu1() {
        let front = case_front(3, 1.0);
        for (delta, r_free) in [(0.1, 1.3), (0.3, 1.3), (0.2, 1.03), (0.54, 1.03)] {
            let idx = IndexSet::new(vec![0], 3).unwrap();
            let rbar = sweep_reference_norm(&front, &idx, r_free, delta);
            let est = volume_exact_linear(&spec(&front, &rbar)).unwrap();
            let expected = analytic_nu1(delta, r_free);
            assert!(
                (est.value - expected).abs() < 1e-9,
                "delta={delta} rfree={r_free}: {} vs {expected}",
                est.value
            );
        }
    }

    #[test]
    fn exact_handles_generator_fronts() {
        // a linear generator front with nonuniform caps
        let inst = crate::problems::catalog("EMOP4").unwrap();
        let s = EnclosedRegionSpec::new(
            FrontSpec::Generator(inst),
            ObjectiveVector::new(vec![0.55, 0.8, 1.2]).unwrap(),
        )
        .unwrap();
        let exact = volume_exact_linear(&s).unwrap();
        assert!(exact.value > 0.0);
        let mc = volume_monte_carlo(&s, 400_000, 23);
        assert!(
            (mc.value - exact.value).abs() < 3.0 * mc.std_error,
            "mc {} vs exact {} (se {})",
            mc.value,
            exact.value,
            mc.std_error
        );
        // a curved generator front is rejected
        let curved = crate::problems::catalog("EMOP1").unwrap();
        let s = EnclosedRegionSpec::new(
            FrontSpec::Generator(curved),
            ObjectiveVector::new(vec![0.55, 0.8, 1.2]).unwrap(),
        )
        .unwrap();
        assert!(volume_exact_linear(&s).is_err());
    }

    #[test]
    fn exact_zero_on_boundary() {
        let front = case_front(3, 1.0);
        let est = volume_exact_linear(&spec(&front, &[0.5, 0.5, 1.3])).unwrap();
        assert_eq!(est.value, 0.0);
        assert_eq!(est.std_error, 0.0);
    }

    #[test]
    fn exact_rejects_nonlinear_front() {
        let front = case_front(3, 2.0);
        assert!(volume_exact_linear(&spec(&front, &[0.5, 0.5, 1.3])).is_err());
    }

    #[test]
    fn mc_agrees_with_exact() {
        let front = case_front(3, 1.0);
        let s = spec(&front, &[0.6414213562373095, 0.6414213562373095, 1.3]);
        let exact = volume_exact_linear(&s).unwrap();
        let mc = volume_monte_carlo(&s, 400_000, 42);
        assert!(mc.std_error > 0.0);
        assert!(
            (mc.value - exact.value).abs() < 3.0 * mc.std_error,
            "mc {} vs exact {} (se {})",
            mc.value,
            exact.value,
            mc.std_error
        );
    }

    #[test]
    fn mc_degenerate_box_is_zero() {
        let front = case_front(3, 1.0);
        let est = volume_monte_carlo(&spec(&front, &[0.0, 1.0, 1.0]), 1000, 1);
        assert_eq!(est.value, 0.0);
    }

    #[test]
    fn mc_all_feasible_box_ratio_is_one() {
        let bounds = FrontBounds::unit(3);
        let s = EnclosedRegionSpec::new(
            FrontSpec::BoxCorner(bounds),
            ObjectiveVector::new(vec![0.7, 0.4, 0.9]).unwrap(),
        )
        .unwrap();
        let est = volume_monte_carlo(&s, 10_000, 3);
        let expected = 0.7 * 0.4 * 0.9;
        assert!((est.value - expected).abs() < 1e-12);
        assert_eq!(est.std_error, 0.0);
    }

    #[test]
    fn limit_pinf_values() {
        let b = FrontBounds::unit(3);
        let r = |v: &[f64]| ObjectiveVector::new(v.to_vec()).unwrap();
        assert!((volume_limit_pinf(&r(&[1.0, 1.0, 1.0]), &b) - 1.0).abs() < 1e-15);
        assert!((volume_limit_pinf(&r(&[0.5, 1.3, 1.3]), &b) - 0.845).abs() < 1e-12);
        assert_eq!(volume_limit_pinf(&r(&[0.0, 1.3, 1.3]), &b), 0.0);
    }

    #[test]
    fn limit_pzero_values() {
        let b = FrontBounds::unit(3);
        let r = |v: &[f64]| ObjectiveVector::new(v.to_vec()).unwrap();
        assert!((volume_limit_pzero(&r(&[0.5, 1.2, 1.2]), &b) - 0.02).abs() < 1e-12);
        assert_eq!(volume_limit_pzero(&r(&[0.5, 0.5, 0.5]), &b), 0.0);
        assert!((volume_limit_pzero(&r(&[1.1, 1.1, 1.1]), &b) - 0.031).abs() < 1e-12);
    }

    #[test]
    fn mc_high_p_approaches_box_limit() {
        let front = case_front(3, 50.0);
        let s = spec(&front, &[0.9, 0.9, 0.9]);
        let est = volume_monte_carlo(&s, 200_000, 7);
        let limit = volume_limit_pinf(&s.reference, &front.bounds);
        assert!((limit - 0.729).abs() < 1e-12);
        assert!(
            (est.value - limit).abs() < 0.02 * limit,
            "{} vs {limit}",
            est.value
        );
    }

    #[test]
    fn scalarized_matches_box_product() {
        for m in [2usize, 3, 4] {
            let bounds = FrontBounds::unit(m);
            let r: Vec<f64> = (0..m).map(|j| 0.5 + 0.15 * j as f64).collect();
            let s = EnclosedRegionSpec::new(
                FrontSpec::BoxCorner(bounds),
                ObjectiveVector::new(r.clone()).unwrap(),
            )
            .unwrap();
            let est = volume_scalarized(&s, 30_000, 11);
            let expected: f64 = r.iter().product();
            assert!(
                (est.value - expected).abs() < 4.0 * est.std_error.max(1e-4),
                "m={m}: {} vs {expected} (se {})",
                est.value,
                est.std_error
            );
        }
    }

    #[test]
    fn scalarized_agrees_with_mc_on_curved_front() {
        let front = case_front(3, 2.0);
        let idx = IndexSet::new(vec![0, 1], 3).unwrap();
        let rbar = sweep_reference_norm(&front, &idx, 1.3, 0.3);
        let s = spec(&front, &rbar);
        let mc = volume_monte_carlo(&s, 400_000, 5);
        let sc = volume_scalarized(&s, 40_000, 6);
        let sigma = (mc.std_error.powi(2) + sc.std_error.powi(2)).sqrt();
        assert!(
            (mc.value - sc.value).abs() < 3.0 * sigma,
            "mc {} vs scalarized {} (sigma {sigma})",
            mc.value,
            sc.value
        );
    }

    #[test]
    fn scalarized_agrees_with_exact_on_linear_front() {
        let front = case_front(3, 1.0);
        let idx = IndexSet::new(vec![0, 1], 3).unwrap();
        let rbar = sweep_reference_norm(&front, &idx, 1.3, 0.25);
        let s = spec(&front, &rbar);
        let exact = volume_exact_linear(&s).unwrap();
        let sc = volume_scalarized(&s, 60_000, 17);
        assert!(
            (sc.value - exact.value).abs() < 3.0 * sc.std_error,
            "scalarized {} vs exact {} (se {})",
            sc.value,
            exact.value,
            sc.std_error
        );
    }

    #[test]
    fn scalarized_infeasible_reference_is_zero() {
        let front = case_front(3, 1.0);
        let est = volume_scalarized(&spec(&front, &[0.1, 0.1, 0.1]), 100, 2);
        assert_eq!(est.value, 0.0);
    }

    #[test]
    fn sweep_passes_through_origin() {
        let front = case_front(3, 1.0);
        for nu in [1usize, 2] {
            let idx = IndexSet::new((0..nu).collect(), 3).unwrap();
            let curve = delta_sweep(
                &front,
                &idx,
                1.3,
                &[0.0, 0.1, 0.2],
                SweepMethod::ExactLinear,
                0,
            )
            .unwrap();
            assert_eq!(curve[0].estimate.value, 0.0);
            assert!(curve[1].estimate.value > 0.0);
            assert!(curve[2].estimate.value > curve[1].estimate.value);
        }
    }

    #[test]
    fn sweep_base_points_lie_on_surface() {
        for p in [0.5, 1.0, 2.0] {
            let front = case_front(3, p);
            for nu in [1usize, 2] {
                let c = wpb_midpoint(&front, nu);
                let residual: f64 = (0..nu).map(|_| (1.0 - c).powf(p)).sum::<f64>() - 1.0;
                assert!(residual.abs() < 1e-12, "p={p} nu={nu}");
            }
        }
    }

    #[test]
    fn growth_order_synthetic_square() {
        let curve: Vec<(f64, f64)> = (1..=8)
            .map(|i| {
                let d = i as f64 * 0.0125;
                (d, d * d)
            })
            .collect();
        let slope = growth_order(&curve).unwrap();
        assert!((slope - 2.0).abs() < 1e-12);
    }

    #[test]
    fn growth_order_requires_points() {
        assert!(growth_order(&[(0.05, 0.0), (0.08, 0.0), (0.1, 0.0)]).is_err());
        assert!(growth_order(&[(0.5, 1.0), (0.6, 2.0), (0.7, 3.0)]).is_err());
    }

    #[test]
    fn crossing_of_analytic_curves() {
        // nu=1 and nu=2 exact curves at r_free = 1.3 cross at
        // delta = sqrt(0.09 / (2 sqrt(2)/6 - 1/6)) ~ 0.5434
        let front = case_front(3, 1.0);
        let deltas: Vec<f64> = (1..=70).map(|i| i as f64 * 0.01).collect();
        let i1 = IndexSet::new(vec![0], 3).unwrap();
        let i2 = IndexSet::new(vec![0, 1], 3).unwrap();
        let c1 = delta_sweep(&front, &i1, 1.3, &deltas, SweepMethod::ExactLinear, 0).unwrap();
        let c2 = delta_sweep(&front, &i2, 1.3, &deltas, SweepMethod::ExactLinear, 0).unwrap();
        let cross = crossing_delta(&c1, &c2).unwrap();
        let expected = (0.09 / (2.0 * 2f64.sqrt() / 6.0 - 1.0 / 6.0)).sqrt();
        assert!((cross - expected).abs() < 0.01, "{cross} vs {expected}");
    }

    #[test]
    fn monotone_in_reference() {
        let front = case_front(3, 1.0);
        let mut state = 0x2545f4914f6cdd1du64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            (state >> 11) as f64 / (1u64 << 53) as f64
        };
        for _ in 0..20 {
            let r1: Vec<f64> = (0..3).map(|_| 0.3 + next()).collect();
            let r2: Vec<f64> = r1.iter().map(|x| x + 0.2 * next()).collect();
            let v1 = volume_exact_linear(&spec(&front, &r1)).unwrap().value;
            let v2 = volume_exact_linear(&spec(&front, &r2)).unwrap().value;
            assert!(v2 >= v1 - 1e-12, "r1={r1:?} r2={r2:?}: {v1} > {v2}");
        }
    }
}
