//! Test-problem generators, the case-study front family, and the instance catalog.
//!
//! Both generators share the objective form
//! `f_i(x) = s_i * h_i(x_I) * (1 + g_i(x_II)) + ideal_i`
//! with `n = 2m` decision variables in `[0,1]`. The position part `h`
//! determines the front shape; the distance part `g` controls how far the
//! image extends past the front and therefore the overall size of the weak
//! Pareto boundaries.

use crate::error::{check_dims, Error, Result};
use crate::lattice::simplex_lattice;
use crate::types::{FrontBounds, ObjectiveVector, Solution};

/// Which generator produced an instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GeneratorKind {
    G1,
    G2,
}

/// Parameter vectors controlling one generated instance.
///
/// `gap` is the second generator's offset between the middle and boundary
/// parts of the front. The paper writes it `r`; it is renamed here to avoid
/// collision with the reference point `r` of the volume analysis.
#[derive(Debug, Clone, PartialEq)]
pub struct GeneratorParams {
    pub m: usize,
    pub s: Vec<f64>,
    pub p: Vec<f64>,
    pub ell: Vec<f64>,
    pub d: Vec<f64>,
    pub gap: Option<Vec<f64>>,
    pub ideal: Vec<f64>,
}

impl GeneratorParams {
    pub fn validate(&self, kind: GeneratorKind) -> Result<()> {
        let m = self.m;
        if m < 2 {
            return Err(Error::InvalidParameter("m must be at least 2".into()));
        }
        for (name, v) in [
            ("s", &self.s),
            ("p", &self.p),
            ("ell", &self.ell),
            ("d", &self.d),
            ("ideal", &self.ideal),
        ] {
            check_dims(m, v.len()).map_err(|_| {
                Error::InvalidParameter(format!("{name} must have length m={m}, got {}", v.len()))
            })?;
            if v.iter().any(|x| !x.is_finite()) {
                return Err(Error::InvalidParameter(format!(
                    "{name} has a non-finite entry"
                )));
            }
        }
        if self.s.iter().any(|&x| x <= 0.0) {
            return Err(Error::InvalidParameter("s entries must be positive".into()));
        }
        if self.p.iter().any(|&x| x <= 0.0) {
            return Err(Error::InvalidParameter("p entries must be positive".into()));
        }
        if self.ell.iter().any(|&x| x < 0.0) {
            return Err(Error::InvalidParameter(
                "ell entries must be nonnegative".into(),
            ));
        }
        let d_lo = 1.0 / (m as f64 - 1.0);
        // The printed range is [1/(m-1), 1); the benchmark table itself uses
        // d_i = 1, which disables clipping for that coordinate, so 1 is allowed.
        if self.d.iter().any(|&x| x < d_lo - 1e-12 || x > 1.0) {
            return Err(Error::InvalidParameter(format!(
                "d entries must lie in [1/(m-1), 1] = [{d_lo}, 1]"
            )));
        }
        match (kind, &self.gap) {
            (GeneratorKind::G1, Some(_)) => {
                return Err(Error::InvalidParameter(
                    "gap is only valid for generator 2".into(),
                ))
            }
            (GeneratorKind::G2, None) => {
                return Err(Error::InvalidParameter(
                    "generator 2 requires a gap vector".into(),
                ))
            }
            (GeneratorKind::G2, Some(gap)) => {
                check_dims(m, gap.len())?;
                if gap.iter().any(|&x| !x.is_finite() || x < 0.0) {
                    return Err(Error::InvalidParameter(
                        "gap entries must be nonnegative".into(),
                    ));
                }
            }
            (GeneratorKind::G1, None) => {}
        }
        Ok(())
    }
}

/// A fully specified multi-objective test problem.
#[derive(Debug, Clone, PartialEq)]
pub struct ProblemInstance {
    params: GeneratorParams,
    generator: GeneratorKind,
    pub name: Option<String>,
}

impl ProblemInstance {
    pub fn generator1(params: GeneratorParams) -> Result<Self> {
        params.validate(GeneratorKind::G1)?;
        Ok(Self {
            params,
            generator: GeneratorKind::G1,
            name: None,
        })
    }

    pub fn generator2(params: GeneratorParams) -> Result<Self> {
        params.validate(GeneratorKind::G2)?;
        Ok(Self {
            params,
            generator: GeneratorKind::G2,
            name: None,
        })
    }

    pub fn with_name(mut self, name: &str) -> Self {
        self.name = Some(name.to_string());
        self
    }

    pub fn params(&self) -> &GeneratorParams {
        &self.params
    }

    pub fn generator(&self) -> GeneratorKind {
        self.generator
    }

    pub fn m(&self) -> usize {
        self.params.m
    }

    /// Number of decision variables, fixed at `2m`.
    pub fn n_variables(&self) -> usize {
        2 * self.params.m
    }

    /// Ideal and nadir of the Pareto front. The nadir is `s + ideal` for
    /// every parameter setting of either generator.
    pub fn bounds(&self) -> FrontBounds {
        let nadir = self
            .params
            .ideal
            .iter()
            .zip(self.params.s.iter())
            .map(|(i, s)| i + s)
            .collect();
        FrontBounds::new(self.params.ideal.clone(), nadir).expect("s > 0 guarantees ideal < nadir")
    }

    /// The same instance with `ell = 0`: every solution is Pareto-optimal.
    pub fn position_only(&self) -> Self {
        let mut out = self.clone();
        out.params.ell = vec![0.0; self.params.m];
        if let Some(name) = &self.name {
            out.name = Some(format!("{name}-position-only"));
        }
        out
    }

    /// Position-function image of `x_I` under this instance's generator.
    pub fn position(&self, x_i: &[f64]) -> Result<Vec<f64>> {
        match self.generator {
            GeneratorKind::G1 => g1_position(x_i, &self.params),
            GeneratorKind::G2 => g2_position(x_i, &self.params),
        }
    }

    /// Evaluates the full objective vector of a solution with `2m` variables.
    pub fn evaluate(&self, x: &Solution) -> Result<ObjectiveVector> {
        let m = self.params.m;
        check_dims(2 * m, x.n())?;
        let vars = x.variables();
        let h = self.position(&vars[..m])?;
        let g = distance_values(&vars[m..], &self.params.ell)?;
        let f = h
            .iter()
            .zip(g.iter())
            .zip(self.params.s.iter().zip(self.params.ideal.iter()))
            .map(|((h, g), (s, ide))| s * h * (1.0 + g) + ide)
            .collect();
        ObjectiveVector::new(f)
    }

    /// Deterministic sample of the Pareto front with at least `min_points`
    /// points: a uniform simplex lattice mapped through the position function.
    pub fn pf_sample(&self, min_points: usize) -> Vec<ObjectiveVector> {
        let m = self.params.m;
        let h_res = crate::lattice::lattice_resolution_for(m, min_points);
        simplex_lattice(m, h_res)
            .into_iter()
            .map(|w| {
                let h = match self.generator {
                    GeneratorKind::G1 => {
                        let y = clip_to_d(&w, &self.params.d);
                        g1_from_y(&y, &self.params)
                    }
                    GeneratorKind::G2 => g2_from_yhat(&w, &self.params),
                };
                let f: Vec<f64> = h
                    .iter()
                    .zip(self.params.s.iter().zip(self.params.ideal.iter()))
                    .map(|(h, (s, ide))| s * h + ide)
                    .collect();
                ObjectiveVector::new(f).expect("front image is finite")
            })
            .collect()
    }
}

/// Projects `x_I` onto the unit simplex: `yhat_i = x_i / sum(x)`, with the
/// all-zero input mapped to the uniform vector.
pub fn simplex_projection(x_i: &[f64]) -> Vec<f64> {
    let total: f64 = x_i.iter().sum();
    if total == 0.0 {
        return vec![1.0 / x_i.len() as f64; x_i.len()];
    }
    x_i.iter().map(|x| x / total).collect()
}

/// Redistributes simplex mass so that `y_i <= d_i` while keeping `sum(y) = 1`.
/// Excess above each cap moves to coordinates with slack, proportionally to
/// their remaining capacity.
pub fn clip_to_d(yhat: &[f64], d: &[f64]) -> Vec<f64> {
    let excess: f64 = yhat
        .iter()
        .zip(d.iter())
        .map(|(y, d)| (y - d).max(0.0))
        .sum();
    let capacity: f64 = yhat
        .iter()
        .zip(d.iter())
        .map(|(y, d)| (d - y).max(0.0))
        .sum();
    if capacity == 0.0 {
        // only reachable when yhat equals d exactly
        return d.to_vec();
    }
    yhat.iter()
        .zip(d.iter())
        .map(|(y, d)| y.min(*d) + (d - y).max(0.0) * excess / capacity)
        .collect()
}

fn g1_from_y(y: &[f64], params: &GeneratorParams) -> Vec<f64> {
    y.iter()
        .zip(params.d.iter().zip(params.p.iter()))
        .map(|(y, (d, p))| (y / d).powf(*p))
        .collect()
}

/// Generator 1 position function: `h = (y(x_I|d) / d)^p` componentwise.
pub fn g1_position(x_i: &[f64], params: &GeneratorParams) -> Result<Vec<f64>> {
    check_dims(params.m, x_i.len())?;
    let y = clip_to_d(&simplex_projection(x_i), &params.d);
    Ok(g1_from_y(&y, params))
}

fn g2_from_yhat(yhat: &[f64], params: &GeneratorParams) -> Vec<f64> {
    let gap = params.gap.as_ref().expect("validated G2 params carry gap");
    yhat.iter()
        .zip(params.d.iter().zip(gap.iter().zip(params.p.iter())))
        .map(|(yh, (d, (r, p)))| {
            let y = if yh > d { yh + r } else { *yh };
            (y / (1.0 + r)).powf(*p)
        })
        .collect()
}

/// Generator 2 position function: coordinates above their cap are shifted by
/// `gap`, then `h = (y / (1 + gap))^p` componentwise.
pub fn g2_position(x_i: &[f64], params: &GeneratorParams) -> Result<Vec<f64>> {
    check_dims(params.m, x_i.len())?;
    let yhat = simplex_projection(x_i);
    Ok(g2_from_yhat(&yhat, params))
}

/// Distance part `g_i = ell_i * |2 x_{m+i} - 1|`, zero exactly at `x = 0.5`.
pub fn distance_values(x_ii: &[f64], ell: &[f64]) -> Result<Vec<f64>> {
    check_dims(ell.len(), x_ii.len())?;
    Ok(x_ii
        .iter()
        .zip(ell.iter())
        .map(|(x, l)| l * (2.0 * x - 1.0).abs())
        .collect())
}

/// The case-study front family: in normalized coordinates the Pareto front is
/// `sum_i (1 - z_i)^p = 1` over the unit box, and each weak Pareto boundary
/// flange keeps a subset of coordinates on the corresponding restricted
/// surface while the rest run past the nadir.
#[derive(Debug, Clone, PartialEq)]
pub struct CaseStudyFront {
    pub m: usize,
    pub p: f64,
    pub bounds: FrontBounds,
    /// How far the flanges extend past the nadir, in normalized units.
    /// The family itself leaves this open; samples and extents use this cap.
    pub flange_span: f64,
}

impl CaseStudyFront {
    pub fn new(m: usize, p: f64) -> Result<Self> {
        if m < 2 {
            return Err(Error::InvalidParameter("m must be at least 2".into()));
        }
        if !(p.is_finite() && p > 0.0) {
            return Err(Error::InvalidParameter("p must be positive".into()));
        }
        Ok(Self {
            m,
            p,
            bounds: FrontBounds::unit(m),
            flange_span: 0.5,
        })
    }

    pub fn with_bounds(mut self, bounds: FrontBounds) -> Result<Self> {
        check_dims(self.m, bounds.m())?;
        self.bounds = bounds;
        Ok(self)
    }

    pub fn with_flange_span(mut self, span: f64) -> Result<Self> {
        if !(span.is_finite() && span > 0.0) {
            return Err(Error::InvalidParameter(
                "flange span must be positive".into(),
            ));
        }
        self.flange_span = span;
        Ok(self)
    }

    /// Membership test in normalized coordinates: `z` is weakly dominated by
    /// the weak Pareto front iff `sum_i max(0, 1 - z_i)^p <= 1`. The single
    /// expression covers the front itself and all its flanges. Points on the
    /// surface itself are members; `MEMBERSHIP_EPS` absorbs round-trip noise.
    pub fn weakly_dominated_norm(&self, zbar: &[f64]) -> bool {
        debug_assert_eq!(zbar.len(), self.m);
        let mut acc = 0.0;
        for &z in zbar {
            if z < -MEMBERSHIP_EPS {
                return false;
            }
            let t = 1.0 - z;
            if t > 0.0 {
                acc += t.powf(self.p);
                if acc > 1.0 + MEMBERSHIP_EPS {
                    return false;
                }
            }
        }
        true
    }

    /// Raw-coordinate form of [`CaseStudyFront::weakly_dominated_norm`].
    pub fn weakly_dominated(&self, z: &[f64]) -> Result<bool> {
        Ok(self.weakly_dominated_norm(&self.bounds.normalize(z)?))
    }

    /// Signed residual of the front equation at a normalized point:
    /// `sum_i (1 - z_i)^p - 1`, clamping coordinates past the nadir.
    pub fn surface_residual_norm(&self, zbar: &[f64]) -> f64 {
        zbar.iter()
            .map(|&z| (1.0 - z).max(0.0).powf(self.p))
            .sum::<f64>()
            - 1.0
    }

    /// Deterministic grid sample of the Pareto front (normalized coordinates):
    /// the surface patch inside the unit box.
    pub fn pf_sample_norm(&self, resolution: usize) -> Vec<Vec<f64>> {
        sample_power_surface(self.m, self.p, resolution)
    }
}

/// Grid sample of `{ w in [0,1]^k : sum_j (1 - w_j)^p = 1 }`, gridding the
/// first `k - 1` coordinates and solving for the last.
pub(crate) fn sample_power_surface(k: usize, p: f64, resolution: usize) -> Vec<Vec<f64>> {
    assert!(k >= 1);
    if k == 1 {
        return vec![vec![0.0]];
    }
    let res = resolution.max(2);
    let mut out = Vec::new();
    let mut grid_index = vec![0usize; k - 1];
    'outer: loop {
        let w: Vec<f64> = grid_index
            .iter()
            .map(|&i| i as f64 / (res - 1) as f64)
            .collect();
        let partial: f64 = w.iter().map(|&x| (1.0 - x).powf(p)).sum();
        let residual = 1.0 - partial;
        if (0.0..=1.0).contains(&residual) {
            let last = 1.0 - residual.powf(1.0 / p);
            let mut point = w;
            point.push(last);
            out.push(point);
        }
        for slot in (0..k - 1).rev() {
            grid_index[slot] += 1;
            if grid_index[slot] < res {
                continue 'outer;
            }
            grid_index[slot] = 0;
            if slot == 0 {
                break 'outer;
            }
        }
        if k == 1 {
            break;
        }
    }
    out
}

/// A parametric front description supporting the dominated-by-WPF membership
/// test. The degenerate box corner (single Pareto point at the ideal) is the
/// `p -> infinity` limit of the case-study family and doubles as the oracle
/// for the product closed form.
#[derive(Debug, Clone, PartialEq)]
pub enum FrontSpec {
    CaseStudy(CaseStudyFront),
    Generator(ProblemInstance),
    BoxCorner(FrontBounds),
}

impl FrontSpec {
    pub fn m(&self) -> usize {
        match self {
            FrontSpec::CaseStudy(f) => f.m,
            FrontSpec::Generator(inst) => inst.m(),
            FrontSpec::BoxCorner(b) => b.m(),
        }
    }

    pub fn bounds(&self) -> FrontBounds {
        match self {
            FrontSpec::CaseStudy(f) => f.bounds.clone(),
            FrontSpec::Generator(inst) => inst.bounds(),
            FrontSpec::BoxCorner(b) => b.clone(),
        }
    }

    /// True iff some weak-Pareto-front point weakly dominates `zbar`
    /// (normalized coordinates).
    pub fn weakly_dominated_norm(&self, zbar: &[f64]) -> bool {
        match self {
            FrontSpec::CaseStudy(f) => f.weakly_dominated_norm(zbar),
            FrontSpec::Generator(inst) => generator_weakly_dominated(inst, zbar),
            FrontSpec::BoxCorner(_) => zbar.iter().all(|&z| z >= 0.0),
        }
    }

    pub fn weakly_dominated(&self, z: &[f64]) -> Result<bool> {
        Ok(self.weakly_dominated_norm(&self.bounds().normalize(z)?))
    }
}

/// Tolerance of the weak-dominance membership tests: points computed to lie
/// exactly on a front surface must test as members despite round-trip noise.
pub const MEMBERSHIP_EPS: f64 = 1e-9;

/// Membership for generator fronts: a front point `h <= zbar` exists iff the
/// monotone surface constraint can still reach 1 under the caps `min(zbar, 1)`.
fn generator_weakly_dominated(inst: &ProblemInstance, zbar: &[f64]) -> bool {
    let params = inst.params();
    if zbar.iter().any(|&z| z < -MEMBERSHIP_EPS) {
        return false;
    }
    match inst.generator() {
        GeneratorKind::G1 => {
            // y_j = d_j * h_j^{1/p_j} summed over the front equals 1.
            let reach: f64 = zbar
                .iter()
                .zip(params.d.iter().zip(params.p.iter()))
                .map(|(z, (d, p))| d * z.min(1.0).powf(1.0 / p))
                .sum();
            reach >= 1.0 - MEMBERSHIP_EPS
        }
        GeneratorKind::G2 => {
            let gap = params.gap.as_ref().expect("G2 carries gap");
            // Largest yhat_i whose image stays at or below zbar_i.
            let reach: f64 = zbar
                .iter()
                .zip(params.d.iter().zip(gap.iter().zip(params.p.iter())))
                .map(|(z, (d, (r, p)))| {
                    let c = (1.0 + r) * z.powf(1.0 / p);
                    let t = if c <= *d {
                        c
                    } else if c <= d + r {
                        *d
                    } else {
                        c - r
                    };
                    t.min(1.0)
                })
                .sum();
            reach >= 1.0 - MEMBERSHIP_EPS
        }
    }
}

const EMOP_NAMES: [&str; 16] = [
    "EMOP1", "EMOP2", "EMOP3", "EMOP4", "EMOP5", "EMOP6", "EMOP7", "EMOP8", "EMOP9", "EMOP10",
    "EMOP11", "EMOP12", "EMOP13", "EMOP14", "EMOP15", "EMOP16",
];
const MOPW_NAMES: [&str; 16] = [
    "MOPW1", "MOPW2", "MOPW3", "MOPW4", "MOPW5", "MOPW6", "MOPW7", "MOPW8", "MOPW9", "MOPW10",
    "MOPW11", "MOPW12", "MOPW13", "MOPW14", "MOPW15", "MOPW16",
];

/// All catalog instance names.
pub fn catalog_names() -> Vec<&'static str> {
    EMOP_NAMES
        .iter()
        .chain(MOPW_NAMES.iter())
        .copied()
        .collect()
}

/// Looks up a named instance at its default objective count (`m = 3`).
pub fn catalog(name: &str) -> Result<ProblemInstance> {
    catalog_with_m(name, 3)
}

/// Looks up a named instance. EMOP instances scale with `m`; MOPW instances
/// are fixed at `m = 3`.
pub fn catalog_with_m(name: &str, m: usize) -> Result<ProblemInstance> {
    let unknown = || {
        Error::UnknownInstance(format!(
            "{name}; valid names: {}",
            catalog_names().join(", ")
        ))
    };
    if let Some(idx) = EMOP_NAMES.iter().position(|n| *n == name) {
        let inv = 1.0 / (m as f64 - 1.0);
        // (p, ell, d, gap) per the example-instance table; scalars broadcast.
        let (p, ell, d, gap): (f64, f64, f64, Option<f64>) = match idx + 1 {
            1 => (2.0, 4.0, inv, None),
            2 => (1.0, 4.0, inv, None),
            3 => (0.5, 4.0, inv, None),
            4 => (1.0, 4.0, 0.7, None),
            5 => (1.0, 40.0, 0.7, None),
            6 => (1.0, 400.0, 0.7, None),
            7 => (1.0, 4000.0, 0.7, None),
            8 => (1.0, 40000.0, 0.7, None),
            9 => (1.0, 400.0, 0.9, None),
            10 => (1.0, 400.0, 0.8, None),
            11 => (1.0, 400.0, 0.7, None),
            12 => (1.0, 400.0, 0.6, None),
            13 => (1.0, 400.0, 0.5, None),
            14 => (2.0, 4.0, 0.5, Some(1.0)),
            15 => (1.0, 4.0, 0.5, Some(1.0)),
            16 => (0.5, 4.0, 0.5, Some(1.0)),
            _ => unreachable!(),
        };
        let params = GeneratorParams {
            m,
            s: vec![1.0; m],
            p: vec![p; m],
            ell: vec![ell; m],
            d: vec![d; m],
            gap: gap.map(|g| vec![g; m]),
            ideal: vec![0.0; m],
        };
        let inst = match params.gap {
            None => ProblemInstance::generator1(params)?,
            Some(_) => ProblemInstance::generator2(params)?,
        };
        return Ok(inst.with_name(name));
    }
    if let Some(idx) = MOPW_NAMES.iter().position(|n| *n == name) {
        if m != 3 {
            return Err(Error::InvalidParameter(format!(
                "{name} is defined for m=3 only"
            )));
        }
        let v = |x: f64| vec![x; 3];
        // (p, ell, d, gap) per the benchmark-instance table.
        let (p, ell, d, gap): (Vec<f64>, Vec<f64>, Vec<f64>, Option<Vec<f64>>) = match idx + 1 {
            1 => (v(2.0), v(4.0), v(0.5), None),
            2 => (vec![0.5, 0.5, 2.0], v(4.0), v(0.5), None),
            3 => (v(0.5), v(4.0), v(0.5), None),
            4 => (v(0.5), v(400.0), v(0.9), None),
            5 => (v(2.0), v(4.0), v(0.5), Some(v(0.2))),
            6 => (v(0.5), v(4.0), v(0.9), Some(v(2.0))),
            7 => (v(2.0), v(400.0), vec![0.5, 0.7, 0.7], None),
            8 => (vec![0.5, 0.5, 2.0], v(400.0), vec![0.7, 0.5, 0.5], None),
            9 => (v(0.5), v(40000.0), vec![1.0, 1.0, 0.5], None),
            10 => (v(0.5), vec![4.0, 400.0, 40000.0], v(0.7), None),
            11 => (
                vec![0.5, 0.5, 2.0],
                v(4.0),
                v(0.5),
                Some(vec![2.0, 0.0, 0.0]),
            ),
            12 => (v(0.5), v(4.0), vec![1.0, 0.5, 0.5], Some(v(1.0))),
            13 => (v(2.0), v(40000.0), v(0.5), None),
            14 => (vec![0.5, 0.5, 2.0], v(40000.0), v(0.5), None),
            15 => (v(0.5), v(40000.0), v(0.5), None),
            16 => (v(0.5), v(4.0), v(0.5), Some(v(2.0))),
            _ => unreachable!(),
        };
        let params = GeneratorParams {
            m: 3,
            s: vec![100.0, 10.0, 1.0],
            p,
            ell,
            d,
            gap,
            ideal: vec![1.0, 2.0, 3.0],
        };
        let inst = match params.gap {
            None => ProblemInstance::generator1(params)?,
            Some(_) => ProblemInstance::generator2(params)?,
        };
        return Ok(inst.with_name(name));
    }
    Err(unknown())
}

fn fmt_vec(v: &[f64]) -> String {
    v.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

fn parse_vec(s: &str, key: &str) -> Result<Vec<f64>> {
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<f64>()
                .map_err(|e| Error::Config(format!("bad {key} entry '{t}': {e}")))
        })
        .collect()
}

impl ProblemInstance {
    /// Serializes to the flat key-value config format consumed by the CLI.
    pub fn to_config_string(&self) -> String {
        let p = &self.params;
        let mut out = String::new();
        if let Some(name) = &self.name {
            out.push_str(&format!("name={name}\n"));
        }
        out.push_str(&format!("m={}\n", p.m));
        let gen = match self.generator {
            GeneratorKind::G1 => "g1",
            GeneratorKind::G2 => "g2",
        };
        out.push_str(&format!("generator={gen}\n"));
        out.push_str(&format!("ideal={}\n", fmt_vec(&p.ideal)));
        out.push_str(&format!("s={}\n", fmt_vec(&p.s)));
        out.push_str(&format!("p={}\n", fmt_vec(&p.p)));
        out.push_str(&format!("ell={}\n", fmt_vec(&p.ell)));
        out.push_str(&format!("d={}\n", fmt_vec(&p.d)));
        if let Some(gap) = &p.gap {
            out.push_str(&format!("gap={}\n", fmt_vec(gap)));
        }
        out
    }

    /// Parses the flat key-value config format. Scalars broadcast to vectors.
    pub fn from_config_str(text: &str) -> Result<Self> {
        let mut fields: std::collections::HashMap<&str, &str> = std::collections::HashMap::new();
        for line in text.lines() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| Error::Config(format!("expected key=value, got '{line}'")))?;
            fields.insert(key.trim(), value.trim());
        }
        let m: usize = fields
            .get("m")
            .ok_or_else(|| Error::Config("missing key m".into()))?
            .parse()
            .map_err(|e| Error::Config(format!("bad m: {e}")))?;
        let gen = *fields
            .get("generator")
            .ok_or_else(|| Error::Config("missing key generator".into()))?;
        let vec_field = |key: &str, default: Option<f64>| -> Result<Vec<f64>> {
            match fields.get(key) {
                Some(raw) => {
                    let v = parse_vec(raw, key)?;
                    if v.len() == 1 {
                        Ok(vec![v[0]; m])
                    } else {
                        Ok(v)
                    }
                }
                None => default
                    .map(|x| vec![x; m])
                    .ok_or_else(|| Error::Config(format!("missing key {key}"))),
            }
        };
        let params = GeneratorParams {
            m,
            s: vec_field("s", Some(1.0))?,
            p: vec_field("p", None)?,
            ell: vec_field("ell", None)?,
            d: vec_field("d", None)?,
            gap: if fields.contains_key("gap") {
                Some(vec_field("gap", None)?)
            } else {
                None
            },
            ideal: vec_field("ideal", Some(0.0))?,
        };
        let inst = match gen {
            "g1" | "G1" => ProblemInstance::generator1(params)?,
            "g2" | "G2" => ProblemInstance::generator2(params)?,
            other => return Err(Error::Config(format!("unknown generator '{other}'"))),
        };
        Ok(match fields.get("name") {
            Some(name) => inst.with_name(name),
            None => inst,
        })
    }
}
