//! Acceptance suite: one test per criterion, each printing a single
//! pass/fail line (visible with `--nocapture`). Tolerances are pinned here,
//! not calibrated at run time.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use wpb_core::evolve::{run, EvolutionConfig, Selection};
use wpb_core::metrics::{hypervolume, igd, BaselineOrigin, BaselineSet};
use wpb_core::problems::{catalog, CaseStudyFront, FrontSpec, GeneratorParams, ProblemInstance};
use wpb_core::problems::{clip_to_d, simplex_projection};
use wpb_core::regress::{lasso_poly_fit_cv, lowest_active_degree};
use wpb_core::types::{FrontBounds, IndexSet, ObjectiveVector, Solution};
use wpb_core::volume::{
    crossing_delta, delta_sweep, growth_order, midline_sweep, volume_exact_linear,
    volume_limit_pzero, volume_monte_carlo, volume_scalarized, EnclosedRegionSpec, SweepMethod,
    SweepPoint,
};
use wpb_core::wpb::{count_drs, enumerate_wpbs, position_histogram, sample_wpb};

fn verdict(criterion: &str, pass: bool, detail: &str) {
    println!(
        "criterion {criterion}: {} ({detail})",
        if pass { "PASS" } else { "FAIL" }
    );
    assert!(pass, "criterion {criterion} failed: {detail}");
}

fn front(m: usize, p: f64) -> CaseStudyFront {
    CaseStudyFront::new(m, p)
        .unwrap()
        .with_flange_span(0.6)
        .unwrap()
}

fn first_nu(m: usize, nu: usize) -> IndexSet {
    IndexSet::new((0..nu).collect(), m).unwrap()
}

fn curve_values(curve: &[SweepPoint]) -> Vec<(f64, f64)> {
    curve.iter().map(|p| (p.x, p.estimate.value)).collect()
}

/// Criterion 1: the enclosed volume grows as `Theta(delta^nu)` toward a
/// category-nu boundary. Exact sweeps for linear fronts, Monte Carlo
/// otherwise; each curve is sampled inside its asymptotic window (the convex
/// front's nu=1 curve carries a sqrt correction, so its window sits deeper).
#[test]
fn criterion_1_growth_order_law() {
    let base = [0.003, 0.005335, 0.009487, 0.016871, 0.03];
    let mut cases: Vec<(usize, f64, usize)> = Vec::new();
    for p in [0.5, 1.0, 2.0] {
        for nu in [1usize, 2] {
            cases.push((3, p, nu));
        }
    }
    for nu in [1usize, 2, 3] {
        cases.push((4, 1.0, nu));
    }
    let results: Vec<(usize, f64, usize, f64)> = cases
        .par_iter()
        .map(|&(m, p, nu)| {
            let f = front(m, p);
            let idx = first_nu(m, nu);
            let method = if (p - 1.0).abs() < 1e-12 {
                SweepMethod::ExactLinear
            } else if nu == 1 {
                SweepMethod::MonteCarlo { samples: 4_000_000 }
            } else {
                SweepMethod::MonteCarlo {
                    samples: 40_000_000,
                }
            };
            let deltas: Vec<f64> = if p > 1.0 && nu == 1 {
                base.iter().map(|d| d / 6.0).collect()
            } else if p > 1.0 && nu == 2 {
                base.iter().map(|d| d / 1.5).collect()
            } else {
                base.to_vec()
            };
            let curve = delta_sweep(&f, &idx, 1.3, &deltas, method, 99).unwrap();
            let slope = growth_order(&curve_values(&curve)).unwrap();
            (m, p, nu, slope)
        })
        .collect();
    let mut detail = String::new();
    let mut pass = true;
    for (m, p, nu, slope) in results {
        detail.push_str(&format!("m{m}/p{p}/nu{nu}:{slope:.3} "));
        if (slope - nu as f64).abs() > 0.15 {
            pass = false;
        }
    }
    verdict("1 growth-order law", pass, detail.trim());
}

/// Criterion 2: Lasso fits of the linear-front curves recover the sparsity
/// pattern (lowest active degree equals nu) for every row of the m=3,4,5
/// table, with the m=3, nu=2 quadratic coefficient at 2.95e-1 within 25%.
#[test]
fn criterion_2_lasso_sparsity_pattern() {
    let deltas: Vec<f64> = (1..=30).map(|i| i as f64 * 0.4 / 30.0).collect();
    let mut cases: Vec<(usize, usize)> = Vec::new();
    for m in [3usize, 4, 5] {
        for nu in 1..m {
            cases.push((m, nu));
        }
    }
    let fits: Vec<(usize, usize, usize, f64)> = cases
        .par_iter()
        .map(|&(m, nu)| {
            let f = front(m, 1.0);
            let idx = first_nu(m, nu);
            let curve = delta_sweep(&f, &idx, 1.3, &deltas, SweepMethod::ExactLinear, 0).unwrap();
            let fit = lasso_poly_fit_cv(&curve_values(&curve), 6).unwrap();
            let low = lowest_active_degree(&fit, 1e-4);
            let coeff = if nu <= fit.coefficients.len() {
                fit.coefficients[nu - 1]
            } else {
                f64::NAN
            };
            (m, nu, low, coeff)
        })
        .collect();
    let mut detail = String::new();
    let mut pass = true;
    for &(m, nu, low, coeff) in &fits {
        detail.push_str(&format!("m{m}/nu{nu}:deg{low} "));
        if low != nu {
            pass = false;
        }
        if m == 3 && nu == 2 {
            detail.push_str(&format!("c2={coeff:.4} "));
            if (coeff - 2.95e-1).abs() > 0.25 * 2.95e-1 {
                pass = false;
            }
        }
    }
    verdict("2 lasso sparsity", pass, detail.trim());
}

/// Criterion 3: the nu=1/nu=2 curves cross at the reported thresholds,
/// 0.54 (p=1) and 0.27 (p=0.5). Those magnitudes belong to the sweeps with
/// the free coordinates at 1.3: the companion sweeps at 1.03 cross at
/// exactly one tenth of the stated values (0.054 and 0.027), which this
/// test also pins to document the resolved reading.
#[test]
fn criterion_3_crossing_thresholds() {
    let cross = |p: f64, r_free: f64, lo: f64, hi: f64, n: usize| -> f64 {
        let f = front(3, p);
        let deltas: Vec<f64> = (0..=n)
            .map(|i| lo + (hi - lo) * i as f64 / n as f64)
            .collect();
        let method = if (p - 1.0).abs() < 1e-12 {
            SweepMethod::ExactLinear
        } else {
            SweepMethod::MonteCarlo { samples: 1_000_000 }
        };
        let c1 = delta_sweep(&f, &first_nu(3, 1), r_free, &deltas, method, 7).unwrap();
        let c2 = delta_sweep(&f, &first_nu(3, 2), r_free, &deltas, method, 8).unwrap();
        crossing_delta(&c1, &c2).unwrap_or(f64::NAN)
    };
    let x_p1 = cross(1.0, 1.3, 0.30, 0.70, 40);
    let x_p05 = cross(0.5, 1.3, 0.10, 0.45, 28);
    let x_p1_near = cross(1.0, 1.03, 0.01, 0.12, 22);
    let x_p05_near = cross(0.5, 1.03, 0.005, 0.06, 22);
    let pass = (x_p1 - 0.54).abs() <= 0.05
        && (x_p05 - 0.27).abs() <= 0.05
        && (x_p1_near - 0.054).abs() <= 0.01
        && (x_p05_near - 0.027).abs() <= 0.01;
    verdict(
        "3 crossing thresholds",
        pass,
        &format!(
            "p1@1.3:{x_p1:.3} p05@1.3:{x_p05:.3} p1@1.03:{x_p1_near:.4} p05@1.03:{x_p05_near:.4}"
        ),
    );
}

/// Criterion 4: midline-sweep shapes. Convex fronts grow strictly toward
/// the boundary; concave fronts rise and then collapse at the boundary;
/// linear fronts are flat over the interior.
#[test]
fn criterion_4_midline_shapes() {
    let positions: Vec<f64> = (0..=10).map(|i| i as f64 / 10.0).collect();
    let idx = first_nu(3, 2);
    let sweep = |p: f64| -> Vec<f64> {
        let f = front(3, p);
        let method = if (p - 1.0).abs() < 1e-12 {
            SweepMethod::ExactLinear
        } else {
            SweepMethod::MonteCarlo { samples: 1_000_000 }
        };
        midline_sweep(&f, &idx, 0.1, 1.3, &positions, method, 3)
            .unwrap()
            .iter()
            .map(|pt| pt.estimate.value)
            .collect()
    };

    let convex = sweep(2.0);
    let strictly_up = convex.windows(2).all(|w| w[1] > w[0]);

    let concave = sweep(0.5);
    let peak = concave.iter().cloned().fold(0.0f64, f64::max);
    let rises = peak > concave[0];
    let collapses = *concave.last().unwrap() < 0.05 * peak;

    let linear = sweep(1.0);
    let interior = &linear[..=8];
    let (lo, hi) = interior
        .iter()
        .fold((f64::INFINITY, 0.0f64), |(lo, hi), &v| {
            (lo.min(v), hi.max(v))
        });
    let flat = (hi - lo) <= 0.10 * hi;

    verdict(
        "4 midline shapes",
        strictly_up && rises && collapses && flat,
        &format!(
            "p2 strictly increasing: {strictly_up}; p0.5 rises {rises} and ends at {:.2}% of peak; p1 interior spread {:.2}%",
            100.0 * concave.last().unwrap() / peak,
            100.0 * (hi - lo) / hi
        ),
    );
}

/// Criterion 5: agreement between independent volume routes.
#[test]
fn criterion_5_oracle_equivalence() {
    // (a) exact vs Monte Carlo on 20 random linear configurations
    let mut rng = ChaCha8Rng::seed_from_u64(501);
    let mut max_sigma = 0.0f64;
    let mut pass = true;
    for trial in 0..20 {
        let m = *[2usize, 3, 4].get(trial % 3).unwrap();
        let f = front(m, 1.0);
        let r: Vec<f64> = (0..m).map(|_| 0.2 + 1.2 * rng.gen::<f64>()).collect();
        let spec =
            EnclosedRegionSpec::new(FrontSpec::CaseStudy(f), ObjectiveVector::new(r).unwrap())
                .unwrap();
        let exact = volume_exact_linear(&spec).unwrap();
        let mc = volume_monte_carlo(&spec, 200_000, 500 + trial as u64);
        let sigma = mc.std_error.max(1e-12);
        let dev = (mc.value - exact.value).abs() / sigma;
        max_sigma = max_sigma.max(dev);
        if dev > 3.0 {
            pass = false;
        }
    }

    // (b) the scalarization integral against the box product closed form
    let box_spec = EnclosedRegionSpec::new(
        FrontSpec::BoxCorner(FrontBounds::unit(3)),
        ObjectiveVector::new(vec![0.5, 0.65, 0.8]).unwrap(),
    )
    .unwrap();
    let sc = volume_scalarized(&box_spec, 40_000, 502);
    let box_dev = (sc.value - 0.26).abs() / sc.std_error.max(1e-12);
    if box_dev > 3.0 {
        pass = false;
    }

    // (c) the p -> 0 closed form against Monte Carlo at p = 0.02
    let mut pzero_worst = 0.0f64;
    for r in [vec![0.5, 1.2, 1.2], vec![1.1, 1.1, 1.1]] {
        let reference = ObjectiveVector::new(r).unwrap();
        let closed = volume_limit_pzero(&reference, &FrontBounds::unit(3));
        let spec =
            EnclosedRegionSpec::new(FrontSpec::CaseStudy(front(3, 0.02)), reference).unwrap();
        let mc = volume_monte_carlo(&spec, 1_000_000, 503);
        let dev = (mc.value - closed).abs() / mc.std_error.max(1e-12);
        pzero_worst = pzero_worst.max(dev);
        if dev > 3.0 {
            pass = false;
        }
    }
    verdict(
        "5 oracle equivalence",
        pass,
        &format!(
            "exact-vs-mc worst {max_sigma:.2} sigma; scalarized-vs-box {box_dev:.2} sigma; pzero-vs-mc worst {pzero_worst:.2} sigma"
        ),
    );
}

fn random_g1(rng: &mut ChaCha8Rng) -> ProblemInstance {
    let m = 2 + rng.gen_range(0..4usize);
    let d_lo = 1.0 / (m as f64 - 1.0);
    let d_hi = (d_lo + 0.3).min(0.8).max(d_lo);
    let params = GeneratorParams {
        m,
        s: (0..m).map(|_| 0.1 + 9.9 * rng.gen::<f64>()).collect(),
        p: (0..m).map(|_| 0.5 + 1.5 * rng.gen::<f64>()).collect(),
        ell: (0..m).map(|_| 10.0 * rng.gen::<f64>()).collect(),
        d: if m == 2 {
            vec![1.0; 2]
        } else {
            (0..m)
                .map(|_| d_lo + (d_hi - d_lo) * rng.gen::<f64>())
                .collect()
        },
        gap: None,
        ideal: (0..m).map(|_| -5.0 + 10.0 * rng.gen::<f64>()).collect(),
    };
    ProblemInstance::generator1(params).unwrap()
}

// The second generator reaches its nadir only as the projected coordinate
// approaches 1, a tail that thins rapidly as p grows and the gap shrinks;
// these ranges keep the expected number of near-nadir samples in 10^4 draws
// above ten per coordinate.
fn random_g2(rng: &mut ChaCha8Rng) -> ProblemInstance {
    let m = 3;
    let params = GeneratorParams {
        m,
        s: (0..m).map(|_| 0.1 + 9.9 * rng.gen::<f64>()).collect(),
        p: (0..m).map(|_| 0.5 + 0.25 * rng.gen::<f64>()).collect(),
        ell: (0..m).map(|_| 10.0 * rng.gen::<f64>()).collect(),
        d: (0..m).map(|_| 0.5 + 0.3 * rng.gen::<f64>()).collect(),
        gap: Some((0..m).map(|_| 1.8 + 0.2 * rng.gen::<f64>()).collect()),
        ideal: (0..m).map(|_| -5.0 + 10.0 * rng.gen::<f64>()).collect(),
    };
    ProblemInstance::generator2(params).unwrap()
}

/// Criterion 6: generator invariants over randomized suites: nadir
/// alignment within 2%, simplex-clip identities, and the hyperplane law for
/// every category-1 boundary sample.
#[test]
fn criterion_6_generator_invariants() {
    let mut rng = ChaCha8Rng::seed_from_u64(601);
    let mut worst_nadir = 0.0f64;
    let mut pass = true;

    // nadir alignment: componentwise max of 10^4 random on-front images
    let instances: Vec<ProblemInstance> = (0..100)
        .map(|k| {
            if k < 50 {
                random_g1(&mut rng)
            } else {
                random_g2(&mut rng)
            }
        })
        .collect();
    let seeds: Vec<u64> = (0..instances.len() as u64).collect();
    let devs: Vec<f64> = instances
        .par_iter()
        .zip(seeds.par_iter())
        .map(|(inst, &seed)| {
            let mut rng = ChaCha8Rng::seed_from_u64(7000 + seed);
            let m = inst.m();
            let mut max_f = vec![f64::NEG_INFINITY; m];
            for _ in 0..10_000 {
                let mut vars: Vec<f64> = (0..m).map(|_| rng.gen::<f64>()).collect();
                vars.extend(std::iter::repeat_n(0.5, m));
                let f = inst.evaluate(&Solution::new(vars).unwrap()).unwrap();
                for (acc, v) in max_f.iter_mut().zip(f.values()) {
                    *acc = acc.max(*v);
                }
            }
            let params = inst.params();
            max_f
                .iter()
                .enumerate()
                .map(|(j, v)| {
                    let nadir = params.s[j] + params.ideal[j];
                    (nadir - v).abs() / params.s[j]
                })
                .fold(0.0f64, f64::max)
        })
        .collect();
    for dev in devs {
        worst_nadir = worst_nadir.max(dev);
        if dev > 0.02 {
            pass = false;
        }
    }

    // clip identities: sum 1 and capped coordinates on 10^5 draws
    let mut worst_sum = 0.0f64;
    let mut worst_cap = 0.0f64;
    for _ in 0..100_000 {
        let m = 2 + rng.gen_range(0..4usize);
        let x: Vec<f64> = (0..m).map(|_| rng.gen::<f64>()).collect();
        let yhat = simplex_projection(&x);
        let d_lo = 1.0 / (m as f64 - 1.0);
        let d: Vec<f64> = (0..m)
            .map(|_| d_lo + (1.0 - d_lo) * rng.gen::<f64>())
            .collect();
        let y = clip_to_d(&yhat, &d);
        worst_sum = worst_sum.max((y.iter().sum::<f64>() - 1.0).abs());
        for (yi, di) in y.iter().zip(d.iter()) {
            worst_cap = worst_cap.max(yi - di);
        }
    }
    if worst_sum > 1e-9 || worst_cap > 1e-12 {
        pass = false;
    }

    // hyperplane law: every category-1 boundary sample sits on its ideal plane
    let mut worst_plane = 0.0f64;
    for inst in instances.iter().take(20) {
        let front = FrontSpec::Generator(inst.clone());
        let bounds = front.bounds();
        for desc in enumerate_wpbs(&front).iter().filter(|d| d.nu() == 1) {
            let axis = desc.index_set.members()[0];
            let sample = sample_wpb(desc, 8).unwrap();
            for z in sample.points() {
                worst_plane = worst_plane.max(
                    (z[axis] - bounds.ideal()[axis]).abs()
                        / (bounds.nadir()[axis] - bounds.ideal()[axis]),
                );
            }
        }
    }
    if worst_plane > 1e-9 {
        pass = false;
    }

    verdict(
        "6 generator invariants",
        pass,
        &format!(
            "nadir dev {:.3}% of range; clip sum dev {worst_sum:.1e}, cap excess {worst_cap:.1e}; hyperplane dev {worst_plane:.1e}",
            100.0 * worst_nadir
        ),
    );
}

/// Criterion 7: evolutionary trends at the default budgets. Pareto-crowding
/// selection accumulates more recorded vectors near category-2 boundaries
/// than category-1 (median over seeds), and under cone selection the
/// positions of near-boundary vectors along the first category-2 boundary
/// peak in its middle third on the convex and concave instances.
#[test]
fn criterion_7_evolutionary_trend() {
    let seeds: Vec<u64> = (0..11).collect();

    let gamma_medians = |name: &str, selection: Selection| -> (u64, u64, Vec<u64>) {
        let inst = catalog(name).unwrap();
        let front = FrontSpec::Generator(inst.clone());
        let samples: Vec<_> = enumerate_wpbs(&front)
            .iter()
            .map(|d| sample_wpb(d, 200).unwrap())
            .collect();
        let wpb21 = samples
            .iter()
            .find(|s| s.descriptor.nu() == 2 && s.descriptor.index_set.members() == [0, 1])
            .unwrap();
        let per_seed: Vec<(u64, u64, Vec<u64>)> = seeds
            .par_iter()
            .map(|&seed| {
                let config = EvolutionConfig::new(selection.clone(), seed);
                let record = run(&inst, &config).unwrap();
                let gammas = count_drs(&record.snapshots, &samples, 0.05).unwrap();
                let hist = position_histogram(&record.snapshots, wpb21, 0.05, 9).unwrap();
                (gammas[&1], gammas[&2], hist)
            })
            .collect();
        let mut g1: Vec<u64> = per_seed.iter().map(|t| t.0).collect();
        let mut g2: Vec<u64> = per_seed.iter().map(|t| t.1).collect();
        g1.sort_unstable();
        g2.sort_unstable();
        let mut hist = vec![0u64; 9];
        for (_, _, h) in &per_seed {
            for (acc, v) in hist.iter_mut().zip(h) {
                *acc += v;
            }
        }
        (g1[g1.len() / 2], g2[g2.len() / 2], hist)
    };

    let mut pass = true;
    let mut detail = String::new();
    for name in ["EMOP2", "EMOP3"] {
        let (g1, g2, _) = gamma_medians(name, Selection::ParetoCrowding);
        detail.push_str(&format!("{name} medians g1={g1} g2={g2}; "));
        if g2 <= g1 {
            pass = false;
        }
    }
    for name in ["EMOP1", "EMOP3"] {
        let (_, _, hist) = gamma_medians(
            name,
            Selection::ConeCrowding {
                delta: wpb_core::evolve::DEFAULT_CONE_DELTA,
            },
        );
        let thirds: Vec<u64> = hist.chunks(3).map(|c| c.iter().sum()).collect();
        detail.push_str(&format!("{name} thirds {thirds:?}; "));
        if !(thirds[1] > thirds[0] && thirds[1] > thirds[2]) {
            pass = false;
        }
    }
    verdict("7 evolutionary trend", pass, detail.trim_end_matches("; "));
}

/// Criterion 8: metric golden cases plus a Monte Carlo hypervolume oracle.
#[test]
fn criterion_8_metric_golden_cases() {
    let obj = |v: &[f64]| ObjectiveVector::new(v.to_vec()).unwrap();
    let mut pass = true;

    let hv1 = hypervolume(&[obj(&[0.5, 0.5])], &obj(&[1.0, 1.0])).unwrap();
    if (hv1 - 0.25).abs() > 1e-12 {
        pass = false;
    }
    let hv2 = hypervolume(&[obj(&[0.2, 0.6]), obj(&[0.5, 0.3])], &obj(&[1.0, 1.0])).unwrap();
    if (hv2 - 0.47).abs() > 1e-12 {
        pass = false;
    }
    let hv3 = hypervolume(&[obj(&[1.0, 0.3]), obj(&[0.3, 1.0])], &obj(&[1.0, 1.0])).unwrap();
    if hv3 != 0.0 {
        pass = false;
    }

    let bounds = FrontBounds::unit(2);
    let baseline = BaselineSet {
        points: vec![obj(&[0.0, 1.0]), obj(&[1.0, 0.0])],
        origin: BaselineOrigin::PfSample,
    };
    let igd_same = igd(&baseline.points.clone(), &baseline, &bounds).unwrap();
    let igd_half = igd(&[obj(&[0.0, 1.0])], &baseline, &bounds).unwrap();
    if igd_same != 0.0 || (igd_half - 2f64.sqrt() / 2.0).abs() > 1e-12 {
        pass = false;
    }

    // random sets against a box-rejection oracle
    let mut rng = ChaCha8Rng::seed_from_u64(801);
    let mut worst = 0.0f64;
    for m in [3usize, 4] {
        for _ in 0..3 {
            let set: Vec<ObjectiveVector> = (0..20)
                .map(|_| obj(&(0..m).map(|_| rng.gen::<f64>() * 0.95).collect::<Vec<_>>()))
                .collect();
            let reference = obj(&vec![1.0; m]);
            let exact = hypervolume(&set, &reference).unwrap();
            let trials = 400_000u64;
            let mut hits = 0u64;
            for _ in 0..trials {
                let z: Vec<f64> = (0..m).map(|_| rng.gen::<f64>()).collect();
                if set
                    .iter()
                    .any(|s| s.values().iter().zip(z.iter()).all(|(a, b)| a <= b))
                {
                    hits += 1;
                }
            }
            let ratio = hits as f64 / trials as f64;
            let se = (ratio * (1.0 - ratio) / trials as f64).sqrt().max(1e-12);
            let dev = (exact - ratio).abs() / se;
            worst = worst.max(dev);
            if dev > 3.0 {
                pass = false;
            }
        }
    }
    verdict(
        "8 metric golden cases",
        pass,
        &format!("hv examples exact; igd examples exact; hv-vs-mc worst {worst:.2} sigma"),
    );
}
