//! Weak Pareto boundary categories, dense boundary samples, distances, and
//! dominance-resistant-solution counting.
//!
//! A `WPB` with index set `I` of size `nu` keeps the coordinates in `I` on a
//! restricted trade-off surface while every other coordinate runs free past
//! the nadir. The set is a product of the constrained surface patch and one
//! interval per free coordinate, so set distances split into a surface part
//! and per-coordinate clamp parts. Distances are always taken in normalized
//! objective space, which makes thresholds like 0.05 scale-free.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::problems::{sample_power_surface, FrontSpec, GeneratorKind};
use crate::types::{IndexSet, ObjectiveVector};

/// One boundary `WPB_{nu,i}`: its index set, owning front, and the normalized
/// upper cap of each free coordinate (the lower end is the nadir).
#[derive(Debug, Clone, PartialEq)]
pub struct WpbDescriptor {
    pub index_set: IndexSet,
    pub front: FrontSpec,
    free_caps: Vec<f64>,
}

impl WpbDescriptor {
    pub fn nu(&self) -> usize {
        self.index_set.nu()
    }

    /// Free (unconstrained) coordinate indices, ascending.
    pub fn free_indices(&self) -> Vec<usize> {
        self.index_set.complement(self.front.m())
    }

    /// Normalized extent of free coordinate `j` (must be free): `[1, cap]`.
    pub fn extent_norm(&self, j: usize) -> Option<(f64, f64)> {
        let free = self.free_indices();
        free.iter()
            .position(|&k| k == j)
            .map(|slot| (1.0, self.free_caps[slot]))
    }

    /// Raw-coordinate extent of free coordinate `j`: `[nadir_j, nadir_j + span]`.
    pub fn extent_raw(&self, j: usize) -> Option<(f64, f64)> {
        let (lo, hi) = self.extent_norm(j)?;
        let b = self.front.bounds();
        let scale = b.nadir()[j] - b.ideal()[j];
        Some((b.ideal()[j] + lo * scale, b.ideal()[j] + hi * scale))
    }

    pub fn label(&self) -> String {
        format!("wpb_nu{}_{}", self.nu(), self.index_set.label())
    }

    /// Filesystem-safe variant of [`WpbDescriptor::label`].
    pub fn file_stem(&self) -> String {
        let digits: String = self
            .index_set
            .members()
            .iter()
            .map(|i| (i + 1).to_string())
            .collect();
        format!("wpb_nu{}_i{digits}", self.nu())
    }
}

/// All nonempty `WPB_{nu,i}` descriptors of a front, ordered by `nu` and then
/// lexicographically by index set. A boundary is empty whenever some free
/// coordinate has no slack past the nadir (`ell_j = 0`); the box-corner
/// oracle front has no boundaries at all.
pub fn enumerate_wpbs(front: &FrontSpec) -> Vec<WpbDescriptor> {
    let m = front.m();
    let mut out = Vec::new();
    if matches!(front, FrontSpec::BoxCorner(_)) {
        return out;
    }
    for nu in 1..m {
        for index_set in IndexSet::combinations(m, nu) {
            let free = index_set.complement(m);
            let caps: Option<Vec<f64>> = match front {
                FrontSpec::CaseStudy(f) => Some(vec![1.0 + f.flange_span; free.len()]),
                FrontSpec::Generator(inst) => {
                    let ell = &inst.params().ell;
                    if free.iter().any(|&j| ell[j] <= 0.0) {
                        None
                    } else {
                        Some(free.iter().map(|&j| 1.0 + ell[j]).collect())
                    }
                }
                FrontSpec::BoxCorner(_) => None,
            };
            if let Some(free_caps) = caps {
                out.push(WpbDescriptor {
                    index_set,
                    front: front.clone(),
                    free_caps,
                });
            }
        }
    }
    out
}

/// Uniform grid over the half-open interval `(1, cap]`, excluding the nadir
/// node itself so every sampled point stays strictly off the Pareto front.
#[derive(Debug, Clone, PartialEq)]
struct FreeGrid {
    cap: f64,
    n: usize,
}

impl FreeGrid {
    fn node(&self, k: usize) -> f64 {
        1.0 + (k + 1) as f64 * (self.cap - 1.0) / self.n as f64
    }

    /// Exact distance from `z` to the nearest grid node.
    fn nearest_dist(&self, z: f64) -> f64 {
        let step = (self.cap - 1.0) / self.n as f64;
        let first = 1.0 + step;
        if z <= first {
            first - z
        } else if z >= self.cap {
            z - self.cap
        } else {
            let k = ((z - first) / step).round();
            (z - (first + k * step)).abs()
        }
    }
}

/// A dense sample of one boundary: surface points over the constrained
/// coordinates crossed with grids over the free coordinates. The product is
/// never materialized for distance queries; [`WpbSample::points`] expands it.
#[derive(Debug, Clone, PartialEq)]
pub struct WpbSample {
    pub descriptor: WpbDescriptor,
    pub resolution: usize,
    surface_pts: Vec<Vec<f64>>,
    free_grids: Vec<FreeGrid>,
}

/// Grid sample of the boundary. `resolution` is the number of points per
/// dimension, at least 2. One-dimensional surface patches are resampled
/// uniformly by arc length so the sample index is an objective-space
/// position parameter.
pub fn sample_wpb(descriptor: &WpbDescriptor, resolution: usize) -> Result<WpbSample> {
    if resolution < 2 {
        return Err(Error::InvalidParameter(
            "sample resolution must be at least 2".into(),
        ));
    }
    let surface_pts = match nu2_parameterization(descriptor) {
        Some(curve) => sample_curve_by_arc_length(&curve, resolution),
        None => constrained_surface(descriptor, resolution),
    };
    let free_grids = descriptor
        .free_caps
        .iter()
        .map(|&cap| FreeGrid { cap, n: resolution })
        .collect();
    Ok(WpbSample {
        descriptor: descriptor.clone(),
        resolution,
        surface_pts,
        free_grids,
    })
}

/// Exact point map of a one-dimensional constrained surface patch, from a
/// scalar parameter in `[0,1]` to the two constrained coordinates. `None`
/// when the patch is not a curve.
fn nu2_parameterization(desc: &WpbDescriptor) -> Option<Box<dyn Fn(f64) -> Vec<f64> + '_>> {
    if desc.nu() != 2 {
        return None;
    }
    match &desc.front {
        FrontSpec::CaseStudy(f) => {
            let p = f.p;
            Some(Box::new(move |u: f64| {
                let w1 = u;
                let residual = (1.0 - (1.0 - w1).powf(p)).max(0.0);
                vec![w1, 1.0 - residual.powf(1.0 / p)]
            }))
        }
        FrontSpec::Generator(inst) => match inst.generator() {
            GeneratorKind::G2 => None,
            GeneratorKind::G1 => {
                let params = inst.params();
                let members = desc.index_set.members();
                let (a, b) = (members[0], members[1]);
                let free_sum: f64 = desc
                    .index_set
                    .complement(inst.m())
                    .iter()
                    .map(|&j| params.d[j])
                    .sum();
                let sigma = (1.0 - free_sum).max(0.0);
                if sigma == 0.0 {
                    return None;
                }
                let lo = (sigma - params.d[b]).max(0.0);
                let hi = params.d[a].min(sigma);
                let (da, db) = (params.d[a], params.d[b]);
                let (pa, pb) = (params.p[a], params.p[b]);
                Some(Box::new(move |u: f64| {
                    let ya = lo + u * (hi - lo);
                    let yb = sigma - ya;
                    vec![(ya / da).powf(pa), (yb / db).powf(pb)]
                }))
            }
        },
        FrontSpec::BoxCorner(_) => None,
    }
}

/// Samples a parameterized curve at uniform arc-length fractions: a dense
/// polyline supplies the arc measure, then exact points are recomputed at
/// the interpolated parameters.
fn sample_curve_by_arc_length(curve: &dyn Fn(f64) -> Vec<f64>, resolution: usize) -> Vec<Vec<f64>> {
    let dense_n = (8 * resolution).max(256);
    let params: Vec<f64> = (0..=dense_n).map(|k| k as f64 / dense_n as f64).collect();
    let pts: Vec<Vec<f64>> = params.iter().map(|&u| curve(u)).collect();
    let mut cumulative = vec![0.0];
    for pair in pts.windows(2) {
        let step: f64 = pair[0]
            .iter()
            .zip(pair[1].iter())
            .map(|(a, b)| (a - b) * (a - b))
            .sum::<f64>()
            .sqrt();
        cumulative.push(cumulative.last().unwrap() + step);
    }
    let total = *cumulative.last().unwrap();
    if total <= 0.0 {
        return vec![pts[0].clone()];
    }
    let mut out = Vec::with_capacity(resolution);
    let mut seg = 0usize;
    for k in 0..resolution {
        let target = total * k as f64 / (resolution - 1) as f64;
        while seg + 1 < cumulative.len() - 1 && cumulative[seg + 1] < target {
            seg += 1;
        }
        let span = cumulative[seg + 1] - cumulative[seg];
        let t = if span > 0.0 {
            (target - cumulative[seg]) / span
        } else {
            0.0
        };
        let u = params[seg] + t * (params[seg + 1] - params[seg]);
        out.push(curve(u));
    }
    out
}

/// Points of the constrained surface patch in normalized coordinates,
/// ordered so that the index is a monotone parameter along the patch.
fn constrained_surface(desc: &WpbDescriptor, resolution: usize) -> Vec<Vec<f64>> {
    let nu = desc.nu();
    match &desc.front {
        FrontSpec::CaseStudy(f) => sample_power_surface(nu, f.p, resolution),
        FrontSpec::Generator(inst) => {
            let params = inst.params();
            let members = desc.index_set.members();
            match inst.generator() {
                GeneratorKind::G2 => vec![vec![0.0; nu]],
                GeneratorKind::G1 => {
                    let free_sum: f64 = desc
                        .index_set
                        .complement(inst.m())
                        .iter()
                        .map(|&j| params.d[j])
                        .sum();
                    let sigma = (1.0 - free_sum).max(0.0);
                    if sigma == 0.0 {
                        return vec![vec![0.0; nu]];
                    }
                    // y over { sum = sigma, 0 <= y_j <= d_j }, gridding the
                    // first nu-1 coordinates and solving the last.
                    let mut out = Vec::new();
                    let mut idx = vec![0usize; nu - 1];
                    'outer: loop {
                        let mut y = Vec::with_capacity(nu);
                        for (slot, &i) in idx.iter().enumerate() {
                            let hi = params.d[members[slot]].min(sigma);
                            y.push(i as f64 / (resolution - 1) as f64 * hi);
                        }
                        let last = sigma - y.iter().sum::<f64>();
                        let d_last = params.d[members[nu - 1]];
                        if last >= -1e-12 && last <= d_last + 1e-12 {
                            y.push(last.clamp(0.0, d_last));
                            let w = y
                                .iter()
                                .zip(members.iter())
                                .map(|(y, &j)| (y / params.d[j]).powf(params.p[j]))
                                .collect();
                            out.push(w);
                        }
                        for slot in (0..nu - 1).rev() {
                            idx[slot] += 1;
                            if idx[slot] < resolution {
                                continue 'outer;
                            }
                            idx[slot] = 0;
                            if slot == 0 {
                                break 'outer;
                            }
                        }
                        if nu == 1 {
                            break;
                        }
                    }
                    out
                }
            }
        }
        FrontSpec::BoxCorner(_) => Vec::new(),
    }
}

impl WpbSample {
    pub fn surface_len(&self) -> usize {
        self.surface_pts.len()
    }

    /// Number of points in the full conceptual product sample.
    pub fn len(&self) -> usize {
        self.surface_pts.len() * self.free_grids.iter().map(|g| g.n).product::<usize>()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Materializes the product sample in raw objective coordinates.
    pub fn points(&self) -> Vec<ObjectiveVector> {
        let m = self.descriptor.front.m();
        let bounds = self.descriptor.front.bounds();
        let members = self.descriptor.index_set.members().to_vec();
        let free = self.descriptor.free_indices();
        let mut out = Vec::with_capacity(self.len());
        let mut free_idx = vec![0usize; free.len()];
        for surf in &self.surface_pts {
            loop {
                let mut zbar = vec![0.0; m];
                for (slot, &j) in members.iter().enumerate() {
                    zbar[j] = surf[slot];
                }
                for (slot, &j) in free.iter().enumerate() {
                    zbar[j] = self.free_grids[slot].node(free_idx[slot]);
                }
                let z = bounds.denormalize(&zbar).expect("dims match");
                out.push(ObjectiveVector::new(z).expect("finite sample"));
                let mut slot = free.len();
                loop {
                    if slot == 0 {
                        free_idx.iter_mut().for_each(|i| *i = 0);
                        break;
                    }
                    slot -= 1;
                    free_idx[slot] += 1;
                    if free_idx[slot] < self.free_grids[slot].n {
                        break;
                    }
                    free_idx[slot] = 0;
                    if slot == 0 {
                        break;
                    }
                }
                if free_idx.iter().all(|&i| i == 0) {
                    break;
                }
            }
        }
        out
    }

    /// Distance (normalized coordinates) from `zbar` to the nearest sample
    /// point, using the product structure: surface nearest neighbor plus
    /// per-free-coordinate grid distances.
    pub fn distance_norm(&self, zbar: &[f64]) -> f64 {
        let (_, d2) = self.nearest_norm(zbar);
        d2.sqrt()
    }

    fn nearest_norm(&self, zbar: &[f64]) -> (usize, f64) {
        let members = self.descriptor.index_set.members();
        let free = self.descriptor.free_indices();
        let mut free_d2 = 0.0;
        for (slot, &j) in free.iter().enumerate() {
            let d = self.free_grids[slot].nearest_dist(zbar[j]);
            free_d2 += d * d;
        }
        let mut best = (0usize, f64::INFINITY);
        for (idx, surf) in self.surface_pts.iter().enumerate() {
            let mut d2 = 0.0;
            for (slot, &j) in members.iter().enumerate() {
                let d = zbar[j] - surf[slot];
                d2 += d * d;
            }
            if d2 < best.1 {
                best = (idx, d2);
            }
        }
        (best.0, best.1 + free_d2)
    }

    /// Position of the nearest surface point as a parameter in `[0,1]` along
    /// the sampled patch. Meaningful for one-dimensional patches (`nu = 2`).
    pub fn surface_parameter(&self, zbar: &[f64]) -> f64 {
        if self.surface_pts.len() < 2 {
            return 0.0;
        }
        let (idx, _) = self.nearest_norm(zbar);
        idx as f64 / (self.surface_pts.len() - 1) as f64
    }
}

/// Euclidean set distance (normalized objective space) between a raw
/// objective vector and a sampled boundary.
pub fn distance_to_wpb(z: &ObjectiveVector, sample: &WpbSample) -> Result<f64> {
    if sample.is_empty() {
        return Err(Error::InsufficientData("empty boundary sample".into()));
    }
    let zbar = sample.descriptor.front.bounds().normalize(z.values())?;
    Ok(sample.distance_norm(&zbar))
}

/// Counts recorded objective vectors within `threshold` of any boundary,
/// per category: `gamma_nu` counts a vector once for every `nu` whose
/// boundaries it approaches, matching the per-category protocol.
pub fn count_drs(
    history: &[Vec<ObjectiveVector>],
    samples: &[WpbSample],
    threshold: f64,
) -> Result<BTreeMap<usize, u64>> {
    if threshold < 0.0 || !threshold.is_finite() {
        return Err(Error::InvalidParameter(
            "threshold must be nonnegative".into(),
        ));
    }
    let mut gammas: BTreeMap<usize, u64> = BTreeMap::new();
    let mut nus: Vec<usize> = samples.iter().map(|s| s.descriptor.nu()).collect();
    nus.sort_unstable();
    nus.dedup();
    for &nu in &nus {
        gammas.insert(nu, 0);
    }
    if samples.is_empty() {
        return Ok(gammas);
    }
    let bounds = samples[0].descriptor.front.bounds();
    if samples
        .iter()
        .any(|s| s.descriptor.front.bounds() != bounds)
    {
        return Err(Error::InvalidParameter(
            "all boundary samples must come from the same front".into(),
        ));
    }
    let all: Vec<&ObjectiveVector> = history.iter().flatten().collect();
    let counts: Vec<BTreeMap<usize, u64>> = all
        .par_iter()
        .map(|z| {
            let mut local: BTreeMap<usize, u64> = BTreeMap::new();
            if let Ok(zbar) = bounds.normalize(z.values()) {
                for &nu in &nus {
                    let close = samples
                        .iter()
                        .filter(|s| s.descriptor.nu() == nu)
                        .any(|s| s.distance_norm(&zbar) < threshold);
                    if close {
                        *local.entry(nu).or_insert(0) += 1;
                    }
                }
            }
            local
        })
        .collect();
    for local in counts {
        for (nu, c) in local {
            *gammas.get_mut(&nu).expect("nu key present") += c;
        }
    }
    Ok(gammas)
}

/// Histogram over the surface parameter of vectors within `threshold` of the
/// given boundary. Used to locate where dominance-resistant solutions pile up
/// along a `WPB_{2,i}`.
pub fn position_histogram(
    history: &[Vec<ObjectiveVector>],
    sample: &WpbSample,
    threshold: f64,
    bins: usize,
) -> Result<Vec<u64>> {
    if bins == 0 {
        return Err(Error::InvalidParameter("bins must be positive".into()));
    }
    let bounds = sample.descriptor.front.bounds();
    let mut hist = vec![0u64; bins];
    for z in history.iter().flatten() {
        let zbar = bounds.normalize(z.values())?;
        if sample.distance_norm(&zbar) < threshold {
            let t = sample.surface_parameter(&zbar);
            let bin = ((t * bins as f64) as usize).min(bins - 1);
            hist[bin] += 1;
        }
    }
    Ok(hist)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::problems::{catalog, CaseStudyFront};

    fn case_front(m: usize, p: f64) -> FrontSpec {
        FrontSpec::CaseStudy(CaseStudyFront::new(m, p).unwrap())
    }

    #[test]
    fn enumerate_counts() {
        let descs = enumerate_wpbs(&case_front(3, 1.0));
        assert_eq!(descs.len(), 6);
        assert_eq!(descs.iter().filter(|d| d.nu() == 1).count(), 3);
        assert_eq!(descs.iter().filter(|d| d.nu() == 2).count(), 3);

        let descs = enumerate_wpbs(&case_front(5, 1.0));
        assert_eq!(descs.len(), 30);

        let inst = catalog("EMOP2").unwrap();
        assert_eq!(enumerate_wpbs(&FrontSpec::Generator(inst)).len(), 6);

        let zero_ell = catalog("EMOP2").unwrap().position_only();
        assert!(enumerate_wpbs(&FrontSpec::Generator(zero_ell)).is_empty());
    }

    #[test]
    fn sample_resolution_validated() {
        let descs = enumerate_wpbs(&case_front(3, 1.0));
        assert!(sample_wpb(&descs[0], 1).is_err());
        assert!(sample_wpb(&descs[0], 2).is_ok());
    }

    #[test]
    fn nu1_samples_lie_in_ideal_hyperplane() {
        // Property: WPB_{1,i} lies in the hyperplane perpendicular to axis i.
        for front in [
            case_front(3, 2.0),
            FrontSpec::Generator(catalog("EMOP1").unwrap()),
        ] {
            for desc in enumerate_wpbs(&front).iter().filter(|d| d.nu() == 1) {
                let axis = desc.index_set.members()[0];
                let sample = sample_wpb(desc, 4).unwrap();
                let ideal = front.bounds().ideal()[axis];
                for z in sample.points() {
                    assert!((z[axis] - ideal).abs() < 1e-12);
                }
            }
        }
    }

    #[test]
    fn case_study_samples_satisfy_surface_equation() {
        for p in [0.5, 1.0, 2.0] {
            let front = case_front(3, p);
            for desc in enumerate_wpbs(&front) {
                let sample = sample_wpb(&desc, 16).unwrap();
                let members = desc.index_set.members();
                for z in sample.points() {
                    let constrained: f64 =
                        members.iter().map(|&j| (1.0 - z[j]).max(0.0).powf(p)).sum();
                    assert!(
                        (constrained - 1.0).abs() < 1e-9,
                        "surface residual too large for p={p}"
                    );
                    // free coordinates stay within extent
                    for &j in &desc.free_indices() {
                        let (lo, hi) = desc.extent_norm(j).unwrap();
                        assert!(z[j] > lo && z[j] <= hi + 1e-12);
                    }
                }
            }
        }
    }

    #[test]
    fn sampled_points_are_weakly_dominated_but_not_optimal() {
        let front = case_front(3, 1.0);
        for desc in enumerate_wpbs(&front) {
            let sample = sample_wpb(&desc, 8).unwrap();
            let free = desc.free_indices();
            for z in sample.points() {
                let zv = z.values().to_vec();
                assert!(front.weakly_dominated_norm(&zv));
                // an explicit improving point: pull one free coordinate back
                // to the nadir
                let mut better = zv.clone();
                better[free[0]] = 1.0;
                assert!(front.weakly_dominated_norm(&better));
                assert!(crate::dominance::dominates(&better, &zv).unwrap());
            }
        }
    }

    #[test]
    fn descriptor_point_sets_are_disjoint() {
        let front = case_front(3, 1.0);
        let samples: Vec<WpbSample> = enumerate_wpbs(&front)
            .iter()
            .map(|d| sample_wpb(d, 6).unwrap())
            .collect();
        for a in 0..samples.len() {
            for b in a + 1..samples.len() {
                let pa = samples[a].points();
                let pb = samples[b].points();
                let min_d2 = pa
                    .iter()
                    .flat_map(|x| {
                        pb.iter().map(move |y| {
                            x.values()
                                .iter()
                                .zip(y.values())
                                .map(|(u, v)| (u - v) * (u - v))
                                .sum::<f64>()
                        })
                    })
                    .fold(f64::INFINITY, f64::min);
                assert!(min_d2 > 0.0, "descriptors {a} and {b} share a point");
            }
        }
    }

    #[test]
    fn distance_construction_example() {
        // r = base + Delta/sqrt(nu) on the constrained coordinates gives a
        // set distance of Delta.
        let front = case_front(3, 1.0);
        let descs = enumerate_wpbs(&front);
        let desc = descs
            .iter()
            .find(|d| d.nu() == 2 && d.index_set.members() == [0, 1])
            .unwrap();
        let sample = sample_wpb(desc, 200).unwrap();
        let delta = 0.1;
        let z = ObjectiveVector::new(vec![
            0.5 + delta / 2f64.sqrt(),
            0.5 + delta / 2f64.sqrt(),
            1.3,
        ])
        .unwrap();
        let d = distance_to_wpb(&z, &sample).unwrap();
        assert!((d - delta).abs() < 5e-3, "got {d}");

        // a point on the boundary itself is at grid distance
        let on = ObjectiveVector::new(vec![0.5, 0.5, 1.3]).unwrap();
        assert!(distance_to_wpb(&on, &sample).unwrap() < 5e-3);
    }

    #[test]
    fn distance_is_symmetric_under_free_permutation() {
        let front = case_front(3, 1.0);
        let descs = enumerate_wpbs(&front);
        let desc = descs.iter().find(|d| d.nu() == 1).unwrap();
        let sample = sample_wpb(desc, 50).unwrap();
        let axis = desc.index_set.members()[0];
        let free = desc.free_indices();
        let mut z = vec![0.0; 3];
        z[axis] = 0.2;
        z[free[0]] = 1.1;
        z[free[1]] = 1.4;
        let mut swapped = z.clone();
        swapped.swap(free[0], free[1]);
        let a = distance_to_wpb(&ObjectiveVector::new(z).unwrap(), &sample).unwrap();
        let b = distance_to_wpb(&ObjectiveVector::new(swapped).unwrap(), &sample).unwrap();
        assert!((a - b).abs() < 1e-12);
    }

    #[test]
    fn count_drs_cases() {
        let front = case_front(3, 1.0);
        let samples: Vec<WpbSample> = enumerate_wpbs(&front)
            .iter()
            .map(|d| sample_wpb(d, 64).unwrap())
            .collect();

        let empty: Vec<Vec<ObjectiveVector>> = Vec::new();
        let gammas = count_drs(&empty, &samples, 0.05).unwrap();
        assert!(gammas.values().all(|&g| g == 0));

        // a population exactly on WPB_{2,{1,2}}
        let wpb2 = samples
            .iter()
            .find(|s| s.descriptor.nu() == 2 && s.descriptor.index_set.members() == [0, 1])
            .unwrap();
        let pop: Vec<ObjectiveVector> = wpb2.points().into_iter().take(64).collect();
        let n = pop.len() as u64;
        let gammas = count_drs(std::slice::from_ref(&pop), &samples, 0.05).unwrap();
        assert_eq!(gammas[&2], n);

        let zeros = count_drs(&[pop], &samples, 0.0).unwrap();
        assert!(zeros.values().all(|&g| g == 0));
    }

    #[test]
    fn distance_is_lipschitz() {
        let front = case_front(3, 2.0);
        let descs = enumerate_wpbs(&front);
        let sample = sample_wpb(&descs[4], 40).unwrap();
        let mut state = 0x9e3779b97f4a7c15u64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            (state >> 11) as f64 / (1u64 << 53) as f64
        };
        for _ in 0..200 {
            let z: Vec<f64> = (0..3).map(|_| next() * 2.0).collect();
            let w: Vec<f64> = (0..3).map(|_| next() * 2.0).collect();
            let dz = sample.distance_norm(&z);
            let dw = sample.distance_norm(&w);
            let dist: f64 = z
                .iter()
                .zip(w.iter())
                .map(|(a, b)| (a - b) * (a - b))
                .sum::<f64>()
                .sqrt();
            assert!(dz >= 0.0 && dw >= 0.0);
            assert!((dz - dw).abs() <= dist + 1e-12);
        }
    }
}
