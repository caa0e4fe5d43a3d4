//! A small generational engine for the benchmark experiments: SBX and
//! polynomial mutation for variation, with three interchangeable
//! environmental-selection schemes.
//!
//! - `ParetoCrowding`: nondominated sorting plus crowding distance.
//! - `ConeCrowding`: the same skeleton ranked with cone dominance, the
//!   device dominance-based algorithms use to cull dominance-resistant
//!   solutions.
//! - `Decomposition`: simplex-lattice weight vectors, running ideal-point
//!   tracking, and neighborhood replacement under the generalized
//!   scalarizing function, which augments weighted Tchebycheff to avoid
//!   weakly Pareto-optimal attractors.
//!
//! Runs are deterministic given a seed; the population is recorded at every
//! generation so boundary-proximity counts can be taken over whole runs.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::dominance::{relation_holds, DominanceRelation};
use crate::error::{check_dims, Error, Result};
use crate::lattice::simplex_lattice;
use crate::problems::ProblemInstance;
use crate::types::{ObjectiveVector, Solution};

/// Default cone-dominance mixing coefficient. Published algorithms leave
/// this parameter open; the default is this crate's own choice and is
/// echoed into every output.
pub const DEFAULT_CONE_DELTA: f64 = 0.1;
/// Default augmentation weight of the generalized scalarizing function.
pub const DEFAULT_RHO: f64 = 0.05;
/// Default decomposition neighborhood size.
pub const DEFAULT_NEIGHBORHOOD: usize = 20;

/// Environmental-selection scheme.
#[derive(Debug, Clone, PartialEq)]
pub enum Selection {
    ParetoCrowding,
    ConeCrowding { delta: f64 },
    Decomposition { rho: f64, neighborhood: usize },
}

impl Selection {
    pub fn name(&self) -> &'static str {
        match self {
            Selection::ParetoCrowding => "pareto_crowding",
            Selection::ConeCrowding { .. } => "cone_crowding",
            Selection::Decomposition { .. } => "decomposition",
        }
    }
}

/// Population size used in the experiments for `m` objectives.
pub fn default_population_size(m: usize) -> usize {
    match m {
        0..=3 => 91,
        4 => 165,
        _ => 330,
    }
}

/// Function-evaluation budget used in the experiments for `m` objectives.
pub fn default_budget(m: usize) -> u64 {
    match m {
        0..=3 => 50_000,
        4 => 90_000,
        _ => 180_000,
    }
}

/// Full configuration of one run. Unset fields fall back to the
/// experiment defaults for the instance's objective count.
#[derive(Debug, Clone, PartialEq)]
pub struct EvolutionConfig {
    pub population_size: Option<usize>,
    pub max_evaluations: Option<u64>,
    pub seed: u64,
    pub selection: Selection,
    pub sbx_index: f64,
    pub pm_index: f64,
    pub crossover_prob: f64,
    /// Per-variable mutation probability; `None` means `1/n`.
    pub mutation_prob: Option<f64>,
}

impl EvolutionConfig {
    pub fn new(selection: Selection, seed: u64) -> Self {
        Self {
            population_size: None,
            max_evaluations: None,
            seed,
            selection,
            sbx_index: 20.0,
            pm_index: 20.0,
            crossover_prob: 1.0,
            mutation_prob: None,
        }
    }

    pub fn with_population(mut self, n: usize) -> Self {
        self.population_size = Some(n);
        self
    }

    pub fn with_budget(mut self, evals: u64) -> Self {
        self.max_evaluations = Some(evals);
        self
    }
}

/// Everything recorded about one run.
#[derive(Debug, Clone, PartialEq)]
pub struct RunRecord {
    /// Objective vectors of the population at initialization and after each
    /// generation.
    pub snapshots: Vec<Vec<ObjectiveVector>>,
    pub final_population: Vec<Solution>,
    pub evaluations: u64,
    pub seed: u64,
    pub population_size: usize,
}

/// Per-generation view passed to observers.
pub struct GenerationState<'a> {
    pub generation: usize,
    pub variables: &'a [Vec<f64>],
    pub objectives: &'a [Vec<f64>],
    /// Current ideal-point estimate; decomposition mode only.
    pub z_star: Option<&'a [f64]>,
}

/// Simulated binary crossover. Offspring are clipped to `[0,1]`; with
/// probability `1 - prob` the parents pass through unchanged.
pub fn sbx_crossover<R: Rng>(
    a: &Solution,
    b: &Solution,
    index: f64,
    prob: f64,
    rng: &mut R,
) -> Result<(Solution, Solution)> {
    check_dims(a.n(), b.n())?;
    let (xa, xb) = (a.variables(), b.variables());
    let mut ca = xa.to_vec();
    let mut cb = xb.to_vec();
    if rng.gen::<f64>() <= prob {
        for i in 0..xa.len() {
            if rng.gen::<f64>() > 0.5 || (xa[i] - xb[i]).abs() < 1e-14 {
                continue;
            }
            let u: f64 = rng.gen();
            let beta = if u <= 0.5 {
                (2.0 * u).powf(1.0 / (index + 1.0))
            } else {
                (1.0 / (2.0 * (1.0 - u))).powf(1.0 / (index + 1.0))
            };
            ca[i] = (0.5 * ((1.0 + beta) * xa[i] + (1.0 - beta) * xb[i])).clamp(0.0, 1.0);
            cb[i] = (0.5 * ((1.0 - beta) * xa[i] + (1.0 + beta) * xb[i])).clamp(0.0, 1.0);
        }
    }
    Ok((Solution::new(ca)?, Solution::new(cb)?))
}

/// Polynomial mutation with per-variable probability `prob`, clipped to
/// `[0,1]`.
pub fn polynomial_mutation<R: Rng>(
    x: &Solution,
    index: f64,
    prob: f64,
    rng: &mut R,
) -> Result<Solution> {
    let mut vars = x.variables().to_vec();
    for v in vars.iter_mut() {
        if rng.gen::<f64>() >= prob {
            continue;
        }
        let u: f64 = rng.gen();
        let dq = if u < 0.5 {
            let base = 2.0 * u + (1.0 - 2.0 * u) * (1.0 - *v).powf(index + 1.0);
            base.powf(1.0 / (index + 1.0)) - 1.0
        } else {
            let base = 2.0 * (1.0 - u) + 2.0 * (u - 0.5) * (*v).powf(index + 1.0);
            1.0 - base.powf(1.0 / (index + 1.0))
        };
        *v = (*v + dq).clamp(0.0, 1.0);
    }
    Solution::new(vars)
}

/// Generalized scalarizing value
/// `max_i w_i (f_i - z*_i + rho sum_j (f_j - z*_j))`.
pub fn g_gen(f: &[f64], w: &[f64], z_star: &[f64], rho: f64) -> Result<f64> {
    check_dims(f.len(), w.len())?;
    check_dims(f.len(), z_star.len())?;
    let total: f64 = f.iter().zip(z_star.iter()).map(|(f, z)| f - z).sum();
    Ok(f.iter()
        .zip(w.iter().zip(z_star.iter()))
        .map(|(f, (w, z))| w * (f - z + rho * total))
        .fold(f64::NEG_INFINITY, f64::max))
}

/// Lattice resolution whose point count is the smallest at or above the
/// requested population size. The experiment defaults are exact counts.
pub fn lattice_h_for_population(m: usize, population: usize) -> usize {
    crate::lattice::lattice_resolution_for(m, population)
}

struct Engine<'a> {
    instance: &'a ProblemInstance,
    rng: ChaCha8Rng,
    evaluations: u64,
    sbx_index: f64,
    pm_index: f64,
    crossover_prob: f64,
    mutation_prob: f64,
}

impl<'a> Engine<'a> {
    fn evaluate(&mut self, vars: &[f64]) -> Result<Vec<f64>> {
        let sol = Solution::new(vars.to_vec())?;
        let f = self.instance.evaluate(&sol)?;
        self.evaluations += 1;
        Ok(f.values().to_vec())
    }

    fn random_solution(&mut self) -> Vec<f64> {
        let n = self.instance.n_variables();
        (0..n).map(|_| self.rng.gen::<f64>()).collect()
    }

    fn variate(&mut self, a: &[f64], b: &[f64]) -> Result<(Vec<f64>, Vec<f64>)> {
        let pa = Solution::new(a.to_vec())?;
        let pb = Solution::new(b.to_vec())?;
        let (c1, c2) = sbx_crossover(&pa, &pb, self.sbx_index, self.crossover_prob, &mut self.rng)?;
        let m1 = polynomial_mutation(&c1, self.pm_index, self.mutation_prob, &mut self.rng)?;
        let m2 = polynomial_mutation(&c2, self.pm_index, self.mutation_prob, &mut self.rng)?;
        Ok((m1.variables().to_vec(), m2.variables().to_vec()))
    }
}

/// Runs a configured algorithm on an instance. Identical `(instance, config)`
/// pairs produce identical records.
pub fn run(instance: &ProblemInstance, config: &EvolutionConfig) -> Result<RunRecord> {
    run_with_observer(instance, config, |_| {})
}

/// [`run`] with a per-generation callback for instrumentation.
pub fn run_with_observer<F: FnMut(&GenerationState)>(
    instance: &ProblemInstance,
    config: &EvolutionConfig,
    observer: F,
) -> Result<RunRecord> {
    let m = instance.m();
    let requested = config
        .population_size
        .unwrap_or_else(|| default_population_size(m));
    if requested < 2 {
        return Err(Error::InvalidParameter(
            "population must be at least 2".into(),
        ));
    }
    let budget = config.max_evaluations.unwrap_or_else(|| default_budget(m));
    match &config.selection {
        Selection::Decomposition { rho, neighborhood } => {
            if *rho < 0.0 {
                return Err(Error::InvalidParameter("rho must be nonnegative".into()));
            }
            if *neighborhood < 2 {
                return Err(Error::InvalidParameter(
                    "neighborhood must be at least 2".into(),
                ));
            }
            run_decomposition(
                instance,
                config,
                requested,
                budget,
                *rho,
                *neighborhood,
                observer,
            )
        }
        Selection::ParetoCrowding => run_crowding(
            instance,
            config,
            requested,
            budget,
            DominanceRelation::Pareto,
            observer,
        ),
        Selection::ConeCrowding { delta } => {
            if !(0.0..1.0).contains(delta) {
                return Err(Error::InvalidParameter(
                    "cone delta must lie in [0, 1)".into(),
                ));
            }
            let relation = DominanceRelation::Cone(vec![*delta; m]);
            run_crowding(instance, config, requested, budget, relation, observer)
        }
    }
}

fn engine<'a>(instance: &'a ProblemInstance, config: &EvolutionConfig) -> Engine<'a> {
    let n = instance.n_variables();
    Engine {
        instance,
        rng: ChaCha8Rng::seed_from_u64(config.seed),
        evaluations: 0,
        sbx_index: config.sbx_index,
        pm_index: config.pm_index,
        crossover_prob: config.crossover_prob,
        mutation_prob: config.mutation_prob.unwrap_or(1.0 / n as f64),
    }
}

fn snapshot(objs: &[Vec<f64>]) -> Vec<ObjectiveVector> {
    objs.iter()
        .map(|f| ObjectiveVector::new(f.clone()).expect("objective values are finite"))
        .collect()
}

fn finish(
    vars: Vec<Vec<f64>>,
    objs: Vec<Vec<f64>>,
    snapshots: Vec<Vec<ObjectiveVector>>,
    evaluations: u64,
    seed: u64,
) -> RunRecord {
    let final_population = vars
        .into_iter()
        .zip(objs)
        .map(|(v, f)| {
            let mut s = Solution::new(v).expect("population stays in bounds");
            s.objectives = Some(ObjectiveVector::new(f).expect("finite objectives"));
            s
        })
        .collect::<Vec<_>>();
    RunRecord {
        population_size: final_population.len(),
        snapshots,
        final_population,
        evaluations,
        seed,
    }
}

/// Fast nondominated sort; returns each member's front rank (0 is best).
fn nondominated_ranks(objs: &[Vec<f64>], relation: &DominanceRelation) -> Vec<usize> {
    let n = objs.len();
    let mut dominated_by = vec![0usize; n];
    let mut dominates_list: Vec<Vec<usize>> = vec![Vec::new(); n];
    for i in 0..n {
        for j in i + 1..n {
            if relation_holds(&objs[i], &objs[j], relation) {
                dominates_list[i].push(j);
                dominated_by[j] += 1;
            } else if relation_holds(&objs[j], &objs[i], relation) {
                dominates_list[j].push(i);
                dominated_by[i] += 1;
            }
        }
    }
    let mut rank = vec![0usize; n];
    let mut current: Vec<usize> = (0..n).filter(|&i| dominated_by[i] == 0).collect();
    let mut level = 0;
    while !current.is_empty() {
        let mut next = Vec::new();
        for &i in &current {
            rank[i] = level;
            for &j in &dominates_list[i] {
                dominated_by[j] -= 1;
                if dominated_by[j] == 0 {
                    next.push(j);
                }
            }
        }
        level += 1;
        current = next;
    }
    rank
}

/// Crowding distance within one front (indices into `objs`).
fn crowding_distances(objs: &[Vec<f64>], front: &[usize]) -> Vec<f64> {
    let m = objs[0].len();
    let k = front.len();
    let mut dist = vec![0.0f64; k];
    if k <= 2 {
        return vec![f64::INFINITY; k];
    }
    for obj in 0..m {
        let mut order: Vec<usize> = (0..k).collect();
        order.sort_by(|&a, &b| {
            objs[front[a]][obj]
                .total_cmp(&objs[front[b]][obj])
                .then(front[a].cmp(&front[b]))
        });
        dist[order[0]] = f64::INFINITY;
        dist[order[k - 1]] = f64::INFINITY;
        let lo = objs[front[order[0]]][obj];
        let hi = objs[front[order[k - 1]]][obj];
        if hi - lo <= 0.0 {
            continue;
        }
        for w in 1..k - 1 {
            let prev = objs[front[order[w - 1]]][obj];
            let next = objs[front[order[w + 1]]][obj];
            dist[order[w]] += (next - prev) / (hi - lo);
        }
    }
    dist
}

fn run_crowding<F: FnMut(&GenerationState)>(
    instance: &ProblemInstance,
    config: &EvolutionConfig,
    pop_size: usize,
    budget: u64,
    relation: DominanceRelation,
    mut observer: F,
) -> Result<RunRecord> {
    if budget < 2 * pop_size as u64 {
        return Err(Error::InvalidParameter(format!(
            "budget {budget} does not cover initialization plus one generation of {pop_size}"
        )));
    }
    let mut eng = engine(instance, config);
    let mut vars: Vec<Vec<f64>> = (0..pop_size).map(|_| eng.random_solution()).collect();
    let mut objs: Vec<Vec<f64>> = Vec::with_capacity(pop_size);
    for v in &vars {
        let f = eng.evaluate(v)?;
        objs.push(f);
    }
    let mut snapshots = vec![snapshot(&objs)];
    let mut generation = 0usize;
    observer(&GenerationState {
        generation,
        variables: &vars,
        objectives: &objs,
        z_star: None,
    });

    let mut ranks = nondominated_ranks(&objs, &relation);
    let mut crowd = full_crowding(&objs, &ranks);

    while eng.evaluations + pop_size as u64 <= budget {
        generation += 1;
        let mut off_vars: Vec<Vec<f64>> = Vec::with_capacity(pop_size);
        while off_vars.len() < pop_size {
            let p1 = tournament(&mut eng.rng, pop_size, &ranks, &crowd);
            let p2 = tournament(&mut eng.rng, pop_size, &ranks, &crowd);
            let (c1, c2) = eng.variate(&vars[p1], &vars[p2])?;
            off_vars.push(c1);
            if off_vars.len() < pop_size {
                off_vars.push(c2);
            }
        }
        let mut union_vars = vars.clone();
        let mut union_objs = objs.clone();
        for v in off_vars {
            let f = eng.evaluate(&v)?;
            union_vars.push(v);
            union_objs.push(f);
        }
        let keep = environmental_selection(&union_objs, pop_size, &relation);
        vars = keep.iter().map(|&i| union_vars[i].clone()).collect();
        objs = keep.iter().map(|&i| union_objs[i].clone()).collect();
        ranks = nondominated_ranks(&objs, &relation);
        crowd = full_crowding(&objs, &ranks);
        snapshots.push(snapshot(&objs));
        observer(&GenerationState {
            generation,
            variables: &vars,
            objectives: &objs,
            z_star: None,
        });
    }
    Ok(finish(vars, objs, snapshots, eng.evaluations, config.seed))
}

fn full_crowding(objs: &[Vec<f64>], ranks: &[usize]) -> Vec<f64> {
    let mut crowd = vec![0.0; objs.len()];
    let max_rank = ranks.iter().copied().max().unwrap_or(0);
    for level in 0..=max_rank {
        let front: Vec<usize> = (0..objs.len()).filter(|&i| ranks[i] == level).collect();
        if front.is_empty() {
            continue;
        }
        let d = crowding_distances(objs, &front);
        for (slot, &i) in front.iter().enumerate() {
            crowd[i] = d[slot];
        }
    }
    crowd
}

fn tournament<R: Rng>(rng: &mut R, n: usize, ranks: &[usize], crowd: &[f64]) -> usize {
    let a = rng.gen_range(0..n);
    let b = rng.gen_range(0..n);
    if ranks[a] != ranks[b] {
        if ranks[a] < ranks[b] {
            a
        } else {
            b
        }
    } else if crowd[a] != crowd[b] {
        if crowd[a] > crowd[b] {
            a
        } else {
            b
        }
    } else {
        a.min(b)
    }
}

/// Standard truncation: whole fronts first, the split front by descending
/// crowding distance with ties broken by index for determinism.
fn environmental_selection(
    objs: &[Vec<f64>],
    pop_size: usize,
    relation: &DominanceRelation,
) -> Vec<usize> {
    let ranks = nondominated_ranks(objs, relation);
    let max_rank = ranks.iter().copied().max().unwrap_or(0);
    let mut keep: Vec<usize> = Vec::with_capacity(pop_size);
    for level in 0..=max_rank {
        let front: Vec<usize> = (0..objs.len()).filter(|&i| ranks[i] == level).collect();
        if keep.len() + front.len() <= pop_size {
            keep.extend_from_slice(&front);
            if keep.len() == pop_size {
                break;
            }
        } else {
            let dist = crowding_distances(objs, &front);
            let mut order: Vec<usize> = (0..front.len()).collect();
            order.sort_by(|&a, &b| dist[b].total_cmp(&dist[a]).then(front[a].cmp(&front[b])));
            for &slot in order.iter().take(pop_size - keep.len()) {
                keep.push(front[slot]);
            }
            break;
        }
    }
    keep
}

#[allow(clippy::too_many_arguments)]
fn run_decomposition<F: FnMut(&GenerationState)>(
    instance: &ProblemInstance,
    config: &EvolutionConfig,
    requested_pop: usize,
    budget: u64,
    rho: f64,
    neighborhood: usize,
    mut observer: F,
) -> Result<RunRecord> {
    let m = instance.m();
    let h = lattice_h_for_population(m, requested_pop);
    let weights = simplex_lattice(m, h);
    let pop_size = weights.len();
    if budget < 2 * pop_size as u64 {
        return Err(Error::InvalidParameter(format!(
            "budget {budget} does not cover initialization plus one generation of {pop_size}"
        )));
    }
    let t = neighborhood.min(pop_size);
    let neighbors: Vec<Vec<usize>> = (0..pop_size)
        .map(|i| {
            let mut order: Vec<(f64, usize)> = (0..pop_size)
                .map(|j| {
                    let d2: f64 = weights[i]
                        .iter()
                        .zip(weights[j].iter())
                        .map(|(a, b)| (a - b) * (a - b))
                        .sum();
                    (d2, j)
                })
                .collect();
            order.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.cmp(&b.1)));
            order.into_iter().take(t).map(|(_, j)| j).collect()
        })
        .collect();

    let mut eng = engine(instance, config);
    let mut vars: Vec<Vec<f64>> = (0..pop_size).map(|_| eng.random_solution()).collect();
    let mut objs: Vec<Vec<f64>> = Vec::with_capacity(pop_size);
    for v in &vars {
        let f = eng.evaluate(v)?;
        objs.push(f);
    }
    let mut z_star = vec![f64::INFINITY; m];
    for f in &objs {
        for (z, fj) in z_star.iter_mut().zip(f.iter()) {
            *z = z.min(*fj);
        }
    }
    let mut snapshots = vec![snapshot(&objs)];
    let mut generation = 0usize;
    observer(&GenerationState {
        generation,
        variables: &vars,
        objectives: &objs,
        z_star: Some(&z_star),
    });

    while eng.evaluations + pop_size as u64 <= budget {
        generation += 1;
        for i in 0..pop_size {
            let a = neighbors[i][eng.rng.gen_range(0..t)];
            let b = neighbors[i][eng.rng.gen_range(0..t)];
            let (child, _) = eng.variate(&vars[a], &vars[b])?;
            let f = eng.evaluate(&child)?;
            for (z, fj) in z_star.iter_mut().zip(f.iter()) {
                *z = z.min(*fj);
            }
            for &j in &neighbors[i] {
                let new_val = g_gen(&f, &weights[j], &z_star, rho)?;
                let old_val = g_gen(&objs[j], &weights[j], &z_star, rho)?;
                if new_val < old_val {
                    vars[j] = child.clone();
                    objs[j] = f.clone();
                }
            }
        }
        snapshots.push(snapshot(&objs));
        observer(&GenerationState {
            generation,
            variables: &vars,
            objectives: &objs,
            z_star: Some(&z_star),
        });
    }
    Ok(finish(vars, objs, snapshots, eng.evaluations, config.seed))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::problems::catalog;

    fn sol(v: &[f64]) -> Solution {
        Solution::new(v.to_vec()).unwrap()
    }

    #[test]
    fn sbx_zero_probability_is_identity() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let a = sol(&[0.2, 0.8, 0.5]);
        let b = sol(&[0.9, 0.1, 0.4]);
        let (c1, c2) = sbx_crossover(&a, &b, 20.0, 0.0, &mut rng).unwrap();
        assert_eq!(c1.variables(), a.variables());
        assert_eq!(c2.variables(), b.variables());
    }

    #[test]
    fn sbx_identical_parents_give_identical_offspring() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let a = sol(&[0.3, 0.3, 0.3]);
        for _ in 0..50 {
            let (c1, c2) = sbx_crossover(&a, &a, 20.0, 1.0, &mut rng).unwrap();
            assert_eq!(c1.variables(), a.variables());
            assert_eq!(c2.variables(), a.variables());
        }
    }

    #[test]
    fn sbx_children_mean_matches_parent_mean() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let a = sol(&[0.4]);
        let b = sol(&[0.6]);
        let mut acc = 0.0;
        let trials = 10_000;
        for _ in 0..trials {
            let (c1, c2) = sbx_crossover(&a, &b, 15.0, 1.0, &mut rng).unwrap();
            acc += 0.5 * (c1.variables()[0] + c2.variables()[0]);
        }
        let mean = acc / trials as f64;
        assert!((mean - 0.5).abs() < 0.01, "mean {mean}");
    }

    #[test]
    fn sbx_respects_bounds() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        let a = sol(&[0.01, 0.99]);
        let b = sol(&[0.95, 0.02]);
        for _ in 0..2000 {
            let (c1, c2) = sbx_crossover(&a, &b, 2.0, 1.0, &mut rng).unwrap();
            for v in c1.variables().iter().chain(c2.variables()) {
                assert!((0.0..=1.0).contains(v));
            }
        }
    }

    #[test]
    fn pm_zero_probability_is_identity() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let x = sol(&[0.1, 0.5, 0.9]);
        let y = polynomial_mutation(&x, 20.0, 0.0, &mut rng).unwrap();
        assert_eq!(x.variables(), y.variables());
    }

    #[test]
    fn pm_stays_in_bounds_and_rate_matches() {
        let mut rng = ChaCha8Rng::seed_from_u64(6);
        let x = sol(&[0.1, 0.25, 0.5, 0.75, 0.9]);
        let prob = 0.3;
        let mut changed = 0u64;
        let trials = 20_000;
        for _ in 0..trials {
            let y = polynomial_mutation(&x, 20.0, prob, &mut rng).unwrap();
            for (old, new) in x.variables().iter().zip(y.variables()) {
                assert!((0.0..=1.0).contains(new));
                if old != new {
                    changed += 1;
                }
            }
        }
        let rate = changed as f64 / (trials * 5) as f64;
        // mutations at interior points almost never leave the value unchanged
        assert!((rate - prob).abs() < 0.02, "rate {rate}");
    }

    #[test]
    fn g_gen_examples() {
        // rho = 0 degenerates to weighted Tchebycheff
        let v = g_gen(&[2.0, 4.0], &[0.5, 0.5], &[0.0, 0.0], 0.0).unwrap();
        assert!((v - 2.0).abs() < 1e-15);
        let v = g_gen(&[2.0, 4.0], &[0.5, 0.5], &[0.0, 0.0], 0.05).unwrap();
        assert!((v - 2.15).abs() < 1e-12);
        let v = g_gen(&[1.0, 2.0], &[0.3, 0.7], &[1.0, 2.0], 0.3).unwrap();
        assert_eq!(v, 0.0);
        assert!(g_gen(&[1.0], &[0.5, 0.5], &[0.0, 0.0], 0.0).is_err());
    }

    #[test]
    fn run_is_deterministic() {
        let inst = catalog("EMOP2").unwrap();
        for selection in [
            Selection::ParetoCrowding,
            Selection::ConeCrowding {
                delta: DEFAULT_CONE_DELTA,
            },
            Selection::Decomposition {
                rho: DEFAULT_RHO,
                neighborhood: 10,
            },
        ] {
            let config = EvolutionConfig::new(selection, 77)
                .with_population(28)
                .with_budget(560);
            let r1 = run(&inst, &config).unwrap();
            let r2 = run(&inst, &config).unwrap();
            assert_eq!(r1, r2);
        }
    }

    #[test]
    fn budget_must_cover_a_generation() {
        let inst = catalog("EMOP2").unwrap();
        let config = EvolutionConfig::new(Selection::ParetoCrowding, 1)
            .with_population(30)
            .with_budget(40);
        assert!(run(&inst, &config).is_err());
    }

    #[test]
    fn snapshots_cover_evaluations() {
        let inst = catalog("EMOP2").unwrap();
        let config = EvolutionConfig::new(Selection::ParetoCrowding, 9)
            .with_population(20)
            .with_budget(300);
        let rec = run(&inst, &config).unwrap();
        assert_eq!(rec.population_size, 20);
        assert!(rec.evaluations <= 300);
        let covered = rec.snapshots.len() as u64 * 20;
        assert!(covered >= rec.evaluations - 20);
        for pop in &rec.snapshots {
            assert_eq!(pop.len(), 20);
        }
        for s in &rec.final_population {
            assert!(s.variables().iter().all(|v| (0.0..=1.0).contains(v)));
            assert!(s.objectives.is_some());
        }
    }

    #[test]
    fn decomposition_population_snaps_to_lattice() {
        let inst = catalog("EMOP2").unwrap();
        let config = EvolutionConfig::new(
            Selection::Decomposition {
                rho: 0.05,
                neighborhood: 5,
            },
            3,
        )
        .with_population(90)
        .with_budget(600);
        let rec = run(&inst, &config).unwrap();
        // 90 requested, the smallest lattice at or above it has 91 points
        assert_eq!(rec.population_size, 91);
    }

    #[test]
    fn decomposition_best_values_nonincreasing_under_stable_ideal() {
        let inst = catalog("EMOP2").unwrap();
        let rho = 0.05;
        let config = EvolutionConfig::new(
            Selection::Decomposition {
                rho,
                neighborhood: 8,
            },
            11,
        )
        .with_population(15)
        .with_budget(1500);
        let h = lattice_h_for_population(3, 15);
        let weights = simplex_lattice(3, h);
        let mut trace: Vec<(Vec<f64>, Vec<f64>)> = Vec::new();
        run_with_observer(&inst, &config, |state| {
            let z = state.z_star.unwrap().to_vec();
            let vals: Vec<f64> = state
                .objectives
                .iter()
                .zip(weights.iter())
                .map(|(f, w)| g_gen(f, w, &z, rho).unwrap())
                .collect();
            trace.push((z, vals));
        })
        .unwrap();
        let mut checked = 0;
        for pair in trace.windows(2) {
            let (z0, v0) = &pair[0];
            let (z1, v1) = &pair[1];
            if z0 == z1 {
                checked += 1;
                for (a, b) in v0.iter().zip(v1.iter()) {
                    assert!(*b <= a + 1e-12, "subproblem value rose from {a} to {b}");
                }
            }
        }
        assert!(
            checked > 0,
            "ideal point never stabilized between generations"
        );
    }

    #[test]
    fn crowding_selection_is_sound() {
        // no selected nondominated member may be dominated by anything
        // retained or discarded around it
        let inst = catalog("EMOP2").unwrap();
        let config = EvolutionConfig::new(Selection::ParetoCrowding, 13)
            .with_population(16)
            .with_budget(480);
        let rec = run(&inst, &config).unwrap();
        for pair in rec.snapshots.windows(2) {
            let union: Vec<&ObjectiveVector> = pair[0].iter().chain(pair[1].iter()).collect();
            let next = &pair[1];
            let ranks = nondominated_ranks(
                &next.iter().map(|z| z.values().to_vec()).collect::<Vec<_>>(),
                &DominanceRelation::Pareto,
            );
            for (i, z) in next.iter().enumerate() {
                if ranks[i] == 0 {
                    for other in &union {
                        assert!(!crate::dominance::dominates(other.values(), z.values()).unwrap());
                    }
                }
            }
        }
    }
}
