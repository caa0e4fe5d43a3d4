//! Subcommand implementations.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use wpb_core::evolve::{
    self, run, EvolutionConfig, RunRecord, Selection, DEFAULT_CONE_DELTA, DEFAULT_NEIGHBORHOOD,
    DEFAULT_RHO,
};
use wpb_core::metrics::{
    build_ideal_baseline, hypervolume, igd, pf_baseline, BaselineOrigin, BaselineSet,
};
use wpb_core::problems::{catalog_with_m, CaseStudyFront, FrontSpec, ProblemInstance};
use wpb_core::regress::{lasso_poly_fit, lasso_poly_fit_cv, lowest_active_degree};
use wpb_core::types::{IndexSet, ObjectiveVector};
use wpb_core::volume::{
    crossing_delta, delta_sweep, growth_order, midline_sweep, SweepMethod, SweepPoint,
};
use wpb_core::wpb::{count_drs, enumerate_wpbs, position_histogram, sample_wpb, WpbSample};
use wpb_core::{Error, Result};

use crate::report::{read_numeric_csv, Field, Report};
use crate::{EvolveArgs, FitArgs, GenerateArgs, MetricsArgs, VolumeArgs};

pub enum Failure {
    Usage(String),
    Runtime(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        match e {
            Error::UnknownInstance(_) | Error::InvalidParameter(_) | Error::Config(_) => {
                Failure::Usage(e.to_string())
            }
            other => Failure::Runtime(other.to_string()),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Failure {
        Failure::Runtime(e.to_string())
    }
}

type CmdResult = std::result::Result<(), Failure>;

fn load_instance(
    name: &Option<String>,
    config: &Option<PathBuf>,
    m: usize,
) -> std::result::Result<ProblemInstance, Failure> {
    match (name, config) {
        (Some(n), None) => Ok(catalog_with_m(n, m)?),
        (None, Some(path)) => {
            let text = std::fs::read_to_string(path)?;
            Ok(ProblemInstance::from_config_str(&text)?)
        }
        _ => Err(Failure::Usage(
            "exactly one of --instance and --config is required".into(),
        )),
    }
}

fn parse_f64_list(spec: &str) -> Result<Vec<f64>> {
    // either "start:step:end" or a comma list
    if spec.contains(':') {
        let parts: Vec<&str> = spec.split(':').collect();
        if parts.len() != 3 {
            return Err(Error::Config(format!(
                "range must be start:step:end, got '{spec}'"
            )));
        }
        let nums: Vec<f64> = parts
            .iter()
            .map(|t| {
                t.parse::<f64>()
                    .map_err(|e| Error::Config(format!("bad range part '{t}': {e}")))
            })
            .collect::<Result<_>>()?;
        let (start, step, end) = (nums[0], nums[1], nums[2]);
        if step <= 0.0 || end < start {
            return Err(Error::Config(format!("empty range '{spec}'")));
        }
        let mut out = Vec::new();
        let mut k = 0u64;
        loop {
            let x = start + step * k as f64;
            if x > end + 1e-12 {
                break;
            }
            out.push(x);
            k += 1;
        }
        Ok(out)
    } else {
        spec.split(',')
            .map(|t| {
                t.trim()
                    .parse::<f64>()
                    .map_err(|e| Error::Config(format!("bad value '{t}': {e}")))
            })
            .collect()
    }
}

fn objective_header(m: usize) -> Vec<String> {
    (1..=m).map(|i| format!("f{i}")).collect()
}

pub fn cmd_generate(args: &GenerateArgs) -> CmdResult {
    if args.resolution < 2 {
        return Err(Failure::Usage("--resolution must be at least 2".into()));
    }
    let inst = load_instance(&args.instance, &args.config, args.m)?;
    let front = FrontSpec::Generator(inst.clone());
    std::fs::create_dir_all(&args.out)?;

    let meta = [
        (
            "instance".to_string(),
            inst.name.clone().unwrap_or_else(|| "custom".into()),
        ),
        ("resolution".to_string(), args.resolution.to_string()),
        ("pf_points".to_string(), args.pf_points.to_string()),
    ];
    let meta_ref: Vec<(&str, String)> = meta.iter().map(|(k, v)| (k.as_str(), v.clone())).collect();

    // instance config echo
    std::fs::write(args.out.join("instance.cfg"), inst.to_config_string())?;

    let header: Vec<String> = objective_header(inst.m());
    let header_ref: Vec<&str> = header.iter().map(|s| s.as_str()).collect();

    let mut pf = Report::to_file(&args.out.join("pf.csv"))?;
    pf.preamble("generate", &meta_ref)?;
    pf.header(&header_ref)?;
    for z in inst.pf_sample(args.pf_points) {
        pf.row(
            &z.values()
                .iter()
                .map(|&x| Field::Float(x))
                .collect::<Vec<_>>(),
        )?;
    }
    pf.flush()?;

    for desc in enumerate_wpbs(&front) {
        let sample = sample_wpb(&desc, args.resolution)?;
        let path = args.out.join(format!("{}.csv", desc.file_stem()));
        let mut out = Report::to_file(&path)?;
        out.preamble("generate", &meta_ref)?;
        out.comment(&format!("index_set={}", desc.index_set.label()))?;
        out.header(&header_ref)?;
        for z in sample.points() {
            out.row(
                &z.values()
                    .iter()
                    .map(|&x| Field::Float(x))
                    .collect::<Vec<_>>(),
            )?;
        }
        out.flush()?;
    }
    Ok(())
}

fn sweep_methods(args: &VolumeArgs, p: f64) -> std::result::Result<Vec<SweepMethod>, Failure> {
    let mut methods = Vec::new();
    for name in args.method.split(',') {
        let method = match name.trim() {
            "exact" => {
                if (p - 1.0).abs() > 1e-12 {
                    return Err(Failure::Usage(format!(
                        "the exact method requires p = 1, front has p = {p}"
                    )));
                }
                SweepMethod::ExactLinear
            }
            "mc" => SweepMethod::MonteCarlo {
                samples: args.samples,
            },
            "scalarized" => SweepMethod::Scalarized {
                directions: args.directions,
            },
            other => return Err(Failure::Usage(format!("unknown method '{other}'"))),
        };
        methods.push(method);
    }
    if methods.is_empty() {
        return Err(Failure::Usage(
            "--method must name at least one method".into(),
        ));
    }
    Ok(methods)
}

fn sweep_method_name(m: SweepMethod) -> &'static str {
    match m {
        SweepMethod::ExactLinear => "exact",
        SweepMethod::MonteCarlo { .. } => "mc",
        SweepMethod::Scalarized { .. } => "scalarized",
    }
}

pub fn cmd_volume(args: &VolumeArgs) -> CmdResult {
    let front = CaseStudyFront::new(args.m, args.p)?.with_flange_span(args.flange)?;
    let index_set = match &args.index_set {
        Some(spec) => {
            let members: Vec<usize> = spec
                .split(',')
                .map(|t| {
                    t.trim()
                        .parse::<usize>()
                        .ok()
                        .and_then(|i| i.checked_sub(1))
                        .ok_or_else(|| Error::Config(format!("bad 1-based index '{t}'")))
                })
                .collect::<Result<_>>()?;
            IndexSet::new(members, args.m)?
        }
        None => IndexSet::new((0..args.nu).collect(), args.m)?,
    };
    if index_set.nu() != args.nu {
        return Err(Failure::Usage(format!(
            "--index-set has {} members but --nu is {}",
            index_set.nu(),
            args.nu
        )));
    }
    let methods = sweep_methods(args, args.p)?;

    let mut out = match &args.out {
        Some(path) => Report::to_file(path)?,
        None => Report::to_stdout(),
    };
    let meta: Vec<(&str, String)> = vec![
        ("m", args.m.to_string()),
        ("p", args.p.to_string()),
        ("nu", args.nu.to_string()),
        ("index_set", index_set.label()),
        ("r_free", args.rfree.to_string()),
        ("flange", args.flange.to_string()),
        ("method", args.method.clone()),
        ("samples", args.samples.to_string()),
        ("directions", args.directions.to_string()),
        ("seed", args.seed.to_string()),
        (
            "sweep",
            if args.midline {
                "midline".into()
            } else {
                "delta".into()
            },
        ),
    ];
    out.preamble("volume", &meta)?;
    out.header(&[
        "delta_or_position",
        "volume",
        "std_error",
        "method",
        "m",
        "nu",
        "p",
        "r_free",
    ])?;

    let mut curves: Vec<(SweepMethod, Vec<SweepPoint>)> = Vec::new();
    for &method in &methods {
        let curve = if args.midline {
            let positions = parse_f64_list(&args.positions)?;
            midline_sweep(
                &front, &index_set, args.delta, args.rfree, &positions, method, args.seed,
            )?
        } else {
            let deltas = parse_f64_list(&args.deltas)?;
            delta_sweep(&front, &index_set, args.rfree, &deltas, method, args.seed)?
        };
        for pt in &curve {
            out.row(&[
                Field::Float(pt.x),
                Field::Float(pt.estimate.value),
                Field::Float(pt.estimate.std_error),
                Field::Text(pt.estimate.method.name()),
                Field::Int(args.m as i64),
                Field::Int(args.nu as i64),
                Field::Float(args.p),
                Field::Float(args.rfree),
            ])?;
        }
        curves.push((method, curve));
    }

    // optional summary rows appended under the same schema
    for (method, curve) in &curves {
        let pts: Vec<(f64, f64)> = curve.iter().map(|pt| (pt.x, pt.estimate.value)).collect();
        if let Some(cap) = args.fit {
            let fit = lasso_poly_fit_cv(&pts, cap)?;
            for (i, c) in fit.coefficients.iter().enumerate() {
                out.row(&[
                    Field::Float((i + 1) as f64),
                    Field::Float(*c),
                    Field::Float(fit.lambda),
                    Field::Text("lasso_fit"),
                    Field::Int(args.m as i64),
                    Field::Int(args.nu as i64),
                    Field::Float(args.p),
                    Field::Float(args.rfree),
                ])?;
            }
            out.comment(&format!(
                "lowest_active_degree={} method={}",
                lowest_active_degree(&fit, 1e-4),
                sweep_method_name(*method)
            ))?;
        }
        if args.growth && !args.midline {
            let slope = growth_order(&pts)?;
            out.row(&[
                Field::Float(f64::NAN),
                Field::Float(slope),
                Field::Float(0.0),
                Field::Text("growth_order"),
                Field::Int(args.m as i64),
                Field::Int(args.nu as i64),
                Field::Float(args.p),
                Field::Float(args.rfree),
            ])?;
        }
    }
    if args.crossing_with_nu1 && !args.midline {
        let base = IndexSet::new(vec![0], args.m)?;
        let deltas = parse_f64_list(&args.deltas)?;
        let c1 = delta_sweep(&front, &base, args.rfree, &deltas, methods[0], args.seed)?;
        if let Some(x) = crossing_delta(&c1, &curves[0].1) {
            out.comment(&format!("crossing_with_nu1={x:.6}"))?;
        } else {
            out.comment("crossing_with_nu1=none")?;
        }
    }
    out.flush()?;
    Ok(())
}

pub fn cmd_fit(args: &FitArgs) -> CmdResult {
    // keep rows whose first two cells are numeric; extra columns (method
    // tags, configuration echoes) and appended summary rows are ignored
    let text = std::fs::read_to_string(&args.input)?;
    let curve: Vec<(f64, f64)> = text
        .lines()
        .filter(|l| !l.trim().is_empty() && !l.trim_start().starts_with('#'))
        .filter(|l| !l.contains("lasso_fit") && !l.contains("growth_order"))
        .filter_map(|l| {
            let mut cells = l.split(',');
            let x = cells.next()?.trim().parse::<f64>().ok()?;
            let y = cells.next()?.trim().parse::<f64>().ok()?;
            Some((x, y))
        })
        .collect();
    let fit = match args.lambda {
        Some(lambda) => lasso_poly_fit(&curve, args.degree_cap, lambda)?,
        None => lasso_poly_fit_cv(&curve, args.degree_cap)?,
    };
    let mut out = match &args.out {
        Some(path) => Report::to_file(path)?,
        None => Report::to_stdout(),
    };
    let tag = args
        .tag
        .clone()
        .unwrap_or_else(|| args.input.display().to_string());
    out.preamble(
        "fit",
        &[
            ("input", args.input.display().to_string()),
            ("degree_cap", args.degree_cap.to_string()),
            ("points", curve.len().to_string()),
        ],
    )?;
    out.header(&["degree", "coefficient", "lambda", "instance"])?;
    for (i, c) in fit.coefficients.iter().enumerate() {
        out.row(&[
            Field::Int((i + 1) as i64),
            Field::Float(*c),
            Field::Float(fit.lambda),
            Field::Text(&tag),
        ])?;
    }
    out.comment(&format!(
        "lowest_active_degree={}",
        lowest_active_degree(&fit, args.tol)
    ))?;
    out.flush()?;
    Ok(())
}

fn selection_from_args(args: &EvolveArgs) -> std::result::Result<Selection, Failure> {
    match args.select.as_str() {
        "pareto_crowding" => Ok(Selection::ParetoCrowding),
        "cone_crowding" => Ok(Selection::ConeCrowding {
            delta: args.delta.unwrap_or(DEFAULT_CONE_DELTA),
        }),
        "decomposition" => Ok(Selection::Decomposition {
            rho: args.rho.unwrap_or(DEFAULT_RHO),
            neighborhood: args.neighborhood.unwrap_or(DEFAULT_NEIGHBORHOOD),
        }),
        other => Err(Failure::Usage(format!(
            "unknown selection '{other}' (expected pareto_crowding, cone_crowding, or decomposition)"
        ))),
    }
}

fn selection_meta(selection: &Selection) -> Vec<(&'static str, String)> {
    match selection {
        Selection::ParetoCrowding => vec![("selection", "pareto_crowding".to_string())],
        Selection::ConeCrowding { delta } => vec![
            ("selection", "cone_crowding".to_string()),
            ("cone_delta", delta.to_string()),
        ],
        Selection::Decomposition { rho, neighborhood } => vec![
            ("selection", "decomposition".to_string()),
            ("rho", rho.to_string()),
            ("neighborhood", neighborhood.to_string()),
        ],
    }
}

fn write_run_csv(
    path: &Path,
    record: &RunRecord,
    instance: &ProblemInstance,
    meta: &[(&str, String)],
) -> CmdResult {
    let mut out = Report::to_file(path)?;
    out.preamble("evolve", meta)?;
    let json: String = meta
        .iter()
        .map(|(k, v)| format!("\"{k}\":\"{v}\""))
        .collect::<Vec<_>>()
        .join(",");
    out.comment(&format!("config={{{json}}}"))?;
    out.comment(&format!("seed={}", record.seed))?;
    out.comment(&format!("evaluations={}", record.evaluations))?;
    out.comment(&format!("population_size={}", record.population_size))?;
    let mut header = vec!["generation".to_string(), "member_index".to_string()];
    header.extend(objective_header(instance.m()));
    let header_ref: Vec<&str> = header.iter().map(|s| s.as_str()).collect();
    out.header(&header_ref)?;
    for (gen, pop) in record.snapshots.iter().enumerate() {
        for (idx, z) in pop.iter().enumerate() {
            let mut fields = vec![Field::Int(gen as i64), Field::Int(idx as i64)];
            fields.extend(z.values().iter().map(|&x| Field::Float(x)));
            out.row(&fields)?;
        }
    }
    out.flush()?;
    Ok(())
}

fn load_baseline(path: &Path) -> std::result::Result<BaselineSet, Failure> {
    let rows = read_numeric_csv(path)?;
    let points: Vec<ObjectiveVector> = rows
        .into_iter()
        .map(ObjectiveVector::new)
        .collect::<Result<_>>()?;
    if points.is_empty() {
        return Err(Failure::Runtime(format!(
            "baseline file {} holds no points",
            path.display()
        )));
    }
    Ok(BaselineSet {
        points,
        origin: BaselineOrigin::IdealUnion,
    })
}

pub fn cmd_evolve(args: &EvolveArgs) -> CmdResult {
    let inst = load_instance(&args.instance, &args.config, args.m)?;
    let selection = selection_from_args(args)?;
    std::fs::create_dir_all(&args.out)?;

    let mut config = EvolutionConfig::new(selection.clone(), args.seed);
    if let Some(pop) = args.pop {
        config = config.with_population(pop);
    }
    if let Some(budget) = args.budget {
        config = config.with_budget(budget);
    }

    let instance_label = inst.name.clone().unwrap_or_else(|| "custom".into());
    let mut meta: Vec<(&str, String)> = vec![
        ("instance", instance_label.clone()),
        ("m", inst.m().to_string()),
        ("runs", args.runs.to_string()),
        ("seed", args.seed.to_string()),
        (
            "population",
            config
                .population_size
                .unwrap_or_else(|| evolve::default_population_size(inst.m()))
                .to_string(),
        ),
        (
            "budget",
            config
                .max_evaluations
                .unwrap_or_else(|| evolve::default_budget(inst.m()))
                .to_string(),
        ),
        ("threshold", args.threshold.to_string()),
        ("resolution", args.resolution.to_string()),
        ("sbx_index", config.sbx_index.to_string()),
        ("pm_index", config.pm_index.to_string()),
        ("crossover_prob", config.crossover_prob.to_string()),
    ];
    meta.extend(selection_meta(&selection));

    // baseline handling comes first so a missing baseline fails before the runs
    let ideal_baseline: Option<BaselineSet> = if args.igd_down {
        if args.build_baseline {
            Some(build_ideal_baseline(
                &inst,
                &config,
                args.baseline_runs,
                args.seed.wrapping_add(0x5ba5e),
            )?)
        } else if let Some(path) = &args.baseline {
            Some(load_baseline(path)?)
        } else {
            return Err(Failure::Usage(
                "--igd-down needs --build-baseline or --baseline FILE".into(),
            ));
        }
    } else {
        None
    };
    if args.build_baseline {
        if let Some(b) = &ideal_baseline {
            let mut out = Report::to_file(&args.out.join("baseline.csv"))?;
            out.preamble("evolve", &meta)?;
            let header: Vec<String> = objective_header(inst.m());
            let header_ref: Vec<&str> = header.iter().map(|s| s.as_str()).collect();
            out.header(&header_ref)?;
            for z in &b.points {
                out.row(
                    &z.values()
                        .iter()
                        .map(|&x| Field::Float(x))
                        .collect::<Vec<_>>(),
                )?;
            }
            out.flush()?;
        }
    }

    let front = FrontSpec::Generator(inst.clone());
    // cap each constrained-surface grid near 200^2 points so distance
    // queries stay tractable when nu grows past 2
    let samples: Vec<WpbSample> = enumerate_wpbs(&front)
        .iter()
        .map(|d| {
            let res = if d.nu() >= 3 {
                let cap = (40_000f64).powf(1.0 / (d.nu() as f64 - 1.0)).floor() as usize;
                args.resolution.min(cap.max(2))
            } else {
                args.resolution
            };
            sample_wpb(d, res)
        })
        .collect::<Result<_>>()?;

    let mut gamma_out = Report::to_file(&args.out.join("gamma.csv"))?;
    gamma_out.preamble("evolve", &meta)?;
    gamma_out.header(&["instance", "algorithm", "seed", "nu", "gamma"])?;

    let mut metric_out = Report::to_file(&args.out.join("metrics.csv"))?;
    metric_out.preamble("evolve", &meta)?;
    metric_out.header(&["instance", "algorithm", "seed", "metric_name", "value"])?;

    let pf_base = if args.igd {
        Some(pf_baseline(&inst))
    } else {
        None
    };
    let bounds = inst.bounds();

    let mut igd_values: Vec<f64> = Vec::new();
    let mut igd_down_values: Vec<f64> = Vec::new();
    let mut gamma_totals: BTreeMap<usize, Vec<u64>> = BTreeMap::new();
    let mut histogram = vec![0u64; args.bins];
    let wpb21 = samples
        .iter()
        .find(|s| s.descriptor.nu() == 2 && s.descriptor.index_set.members() == [0, 1]);

    for k in 0..args.runs {
        let mut cfg = config.clone();
        cfg.seed = args.seed.wrapping_add(k as u64);
        let record = run(&inst, &cfg)?;
        write_run_csv(
            &args.out.join(format!("run_seed{}.csv", cfg.seed)),
            &record,
            &inst,
            &meta,
        )?;

        let gammas = count_drs(&record.snapshots, &samples, args.threshold)?;
        for (nu, g) in &gammas {
            gamma_out.row(&[
                Field::Text(&instance_label),
                Field::Text(selection.name()),
                Field::Int(cfg.seed as i64),
                Field::Int(*nu as i64),
                Field::Int(*g as i64),
            ])?;
            gamma_totals.entry(*nu).or_default().push(*g);
        }
        if args.histogram {
            if let Some(sample) = wpb21 {
                let h = position_histogram(&record.snapshots, sample, args.threshold, args.bins)?;
                for (acc, v) in histogram.iter_mut().zip(h) {
                    *acc += v;
                }
            }
        }

        let finals: Vec<ObjectiveVector> = record
            .final_population
            .iter()
            .map(|s| s.objectives.clone().expect("objectives cached"))
            .collect();
        if let Some(base) = &pf_base {
            let v = igd(&finals, base, &bounds)?;
            metric_out.row(&[
                Field::Text(&instance_label),
                Field::Text(selection.name()),
                Field::Int(cfg.seed as i64),
                Field::Text("igd"),
                Field::Float(v),
            ])?;
            igd_values.push(v);
        }
        if let Some(base) = &ideal_baseline {
            let v = igd(&finals, base, &bounds)?;
            metric_out.row(&[
                Field::Text(&instance_label),
                Field::Text(selection.name()),
                Field::Int(cfg.seed as i64),
                Field::Text("igd_down"),
                Field::Float(v),
            ])?;
            igd_down_values.push(v);
        }
    }

    let summarize = |vals: &[f64]| -> (f64, f64) {
        let n = vals.len() as f64;
        let mean = vals.iter().sum::<f64>() / n;
        let var = vals.iter().map(|v| (v - mean) * (v - mean)).sum::<f64>() / n;
        (mean, var.sqrt())
    };
    if !igd_values.is_empty() {
        let (mean, std) = summarize(&igd_values);
        metric_out.comment(&format!("igd_mean={mean:.16e}"))?;
        metric_out.comment(&format!("igd_std={std:.16e}"))?;
    }
    if !igd_down_values.is_empty() {
        let (mean, std) = summarize(&igd_down_values);
        metric_out.comment(&format!("igd_down_mean={mean:.16e}"))?;
        metric_out.comment(&format!("igd_down_std={std:.16e}"))?;
    }
    for (nu, vals) in &gamma_totals {
        let mut sorted = vals.clone();
        sorted.sort_unstable();
        gamma_out.comment(&format!("gamma{nu}_median={}", sorted[sorted.len() / 2]))?;
    }
    gamma_out.flush()?;
    metric_out.flush()?;

    if args.histogram {
        let mut hist_out = Report::to_file(&args.out.join("histogram.csv"))?;
        hist_out.preamble("evolve", &meta)?;
        hist_out.header(&["bin", "count"])?;
        for (i, c) in histogram.iter().enumerate() {
            hist_out.row(&[Field::Int(i as i64), Field::Int(*c as i64)])?;
        }
        hist_out.flush()?;
    }
    Ok(())
}

pub fn cmd_metrics(args: &MetricsArgs) -> CmdResult {
    let inst = load_instance(&args.instance, &args.config, args.m)?;
    let rows = read_numeric_csv(&args.input)?;
    let points: Vec<ObjectiveVector> = rows
        .into_iter()
        .filter(|r| r.len() == inst.m())
        .map(ObjectiveVector::new)
        .collect::<Result<_>>()?;
    if points.is_empty() {
        return Err(Failure::Runtime(format!(
            "{} holds no {}-objective rows",
            args.input.display(),
            inst.m()
        )));
    }
    let mut out = match &args.out {
        Some(path) => Report::to_file(path)?,
        None => Report::to_stdout(),
    };
    let instance_label = inst.name.clone().unwrap_or_else(|| "custom".into());
    out.preamble(
        "metrics",
        &[
            ("instance", instance_label.clone()),
            ("input", args.input.display().to_string()),
            ("points", points.len().to_string()),
        ],
    )?;
    out.header(&["instance", "algorithm", "seed", "metric_name", "value"])?;
    if let Some(spec) = &args.reference {
        let reference = ObjectiveVector::new(parse_f64_list(spec)?)?;
        let hv = hypervolume(&points, &reference)?;
        out.row(&[
            Field::Text(&instance_label),
            Field::Text("external"),
            Field::Int(-1),
            Field::Text("hypervolume"),
            Field::Float(hv),
        ])?;
    }
    if args.igd_pf {
        let base = pf_baseline(&inst);
        let v = igd(&points, &base, &inst.bounds())?;
        out.row(&[
            Field::Text(&instance_label),
            Field::Text("external"),
            Field::Int(-1),
            Field::Text("igd"),
            Field::Float(v),
        ])?;
    }
    if let Some(path) = &args.baseline {
        let base = load_baseline(path)?;
        let v = igd(&points, &base, &inst.bounds())?;
        out.row(&[
            Field::Text(&instance_label),
            Field::Text("external"),
            Field::Int(-1),
            Field::Text("igd_down"),
            Field::Float(v),
        ])?;
    }
    out.flush()?;
    Ok(())
}
