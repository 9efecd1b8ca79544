use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rootdisk::bounds::{self, Theorem};
use rootdisk::genpoly::{gen_thm110_instance, gen_thm17_instance, GenSpec};
use rootdisk::hypotheses::{self, default_tol};
use rootdisk::poly::cauchy_bound;
use rootdisk::search::{optimize_params, SearchConfig};
use rootdisk::{io, oracle, BoundReport, Error, Execution, Polynomial};
use serde::Serialize;
use serde_json::json;

mod report;

use report::{Format, Row};

/// Zero-containment disks for polynomials with complex coefficients.
#[derive(Parser)]
#[command(name = "rootdisk", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate one bound at given parameters.
    Bound {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        params: Params,
        #[command(flatten)]
        out: Output,
    },
    /// Check a bound's hypotheses at given parameters.
    Check {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        params: Params,
        #[command(flatten)]
        out: Output,
    },
    /// Search the free parameters for the smallest disk.
    Search {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_parser = parse_theorem)]
        theorem: Theorem,
        #[command(flatten)]
        search: SearchArgs,
        #[command(flatten)]
        out: Output,
    },
    /// Evaluate a bound and check it against the root oracle.
    Verify {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        params: Params,
        #[command(flatten)]
        search: SearchArgs,
        #[command(flatten)]
        out: Output,
    },
    /// Tabulate every applicable bound, searching parameters when none are given.
    Compare {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        t1: Option<f64>,
        #[arg(long)]
        t2: Option<f64>,
        #[command(flatten)]
        search: SearchArgs,
        #[command(flatten)]
        out: Output,
    },
    /// Generate instances satisfying a bound's hypotheses.
    Gen(GenArgs),
}

#[derive(Args)]
struct Input {
    /// Polynomial JSON files ({"coeffs": [[re, im], ...]}).
    files: Vec<PathBuf>,
    /// Inline coefficients, ascending: "re,im;re,im;..." (a lone number is real).
    #[arg(long, conflicts_with = "files", allow_hyphen_values = true)]
    coeffs: Option<String>,
}

#[derive(Args)]
struct Params {
    #[arg(long, value_parser = parse_theorem)]
    theorem: Theorem,
    #[arg(long)]
    t1: Option<f64>,
    #[arg(long)]
    t2: Option<f64>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    m: Option<usize>,
    /// Condition tolerance (default 1e-10 times the largest coefficient modulus).
    #[arg(long)]
    tol: Option<f64>,
}

#[derive(Args)]
struct SearchArgs {
    /// JSON search configuration.
    #[arg(long, env = "ROOTDISK_CONFIG")]
    config: Option<PathBuf>,
    #[arg(long)]
    grid_points: Option<usize>,
    #[arg(long)]
    refine_iterations: Option<usize>,
    #[arg(long)]
    t1_max_factor: Option<f64>,
    #[arg(long = "search-tol")]
    search_tol: Option<f64>,
    /// Evaluate grid points on one thread.
    #[arg(long)]
    sequential: bool,
}

#[derive(Args)]
struct Output {
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Clone, Copy, ValueEnum)]
enum Checker {
    Thm17,
    Thm110,
}

#[derive(Args)]
struct GenArgs {
    #[arg(long, value_enum)]
    checker: Checker,
    #[arg(long)]
    n: usize,
    #[arg(long)]
    k: usize,
    #[arg(long)]
    m: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 1.0)]
    t1: f64,
    #[arg(long, default_value_t = 0.0)]
    t2: f64,
    /// Wedge half-angle of the coefficient arguments.
    #[arg(long, default_value_t = 0.0)]
    alpha: f64,
    /// Number of instances; instance i uses seed + i.
    #[arg(long, default_value_t = 1)]
    count: u64,
    #[arg(long, default_value = ".")]
    out: PathBuf,
}

fn parse_theorem(s: &str) -> Result<Theorem, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// A failure carrying its exit status.
struct Fail {
    code: u8,
    message: String,
}

impl From<Error> for Fail {
    fn from(e: Error) -> Fail {
        let code = match &e {
            Error::Hypothesis(_) | Error::Infeasible(_) | Error::Degree { .. } | Error::GenerationExhausted { .. } => 1,
            Error::Anomaly(_) | Error::Unconverged | Error::ZeroEnclosing | Error::NoReports => 3,
            _ => 2,
        };
        Fail {
            code,
            message: e.to_string(),
        }
    }
}

fn usage(message: impl Into<String>) -> Fail {
    Fail {
        code: 2,
        message: message.into(),
    }
}

type Outcome = Result<u8, Fail>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("rootdisk: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(cmd: Command) -> Outcome {
    match cmd {
        Command::Bound { input, params, out } => cmd_bound(&single(&input)?, &params, out.format),
        Command::Check { input, params, out } => cmd_check(&single(&input)?, &params, out.format),
        Command::Search {
            input,
            theorem,
            search,
            out,
        } => cmd_search(&single(&input)?, theorem, &search, out.format),
        Command::Verify {
            input,
            params,
            search,
            out,
        } => cmd_verify(&single(&input)?, &params, &search, out.format),
        Command::Compare {
            input,
            t1,
            t2,
            search,
            out,
        } => cmd_compare(&input, t1, t2, &search, out.format),
        Command::Gen(args) => cmd_gen(&args),
    }
}

fn load(input: &Input) -> Result<Vec<(String, Polynomial)>, Fail> {
    if let Some(text) = &input.coeffs {
        return Ok(vec![("inline".to_string(), io::parse_inline_coeffs(text)?)]);
    }
    if input.files.is_empty() {
        return Err(usage("no input: pass a polynomial JSON file or --coeffs"));
    }
    let mut files = input.files.clone();
    files.sort();
    files
        .iter()
        .map(|f| Ok((f.display().to_string(), io::read_polynomial(f)?)))
        .collect()
}

fn single(input: &Input) -> Result<Polynomial, Fail> {
    let mut all = load(input)?;
    if all.len() != 1 {
        return Err(usage("this subcommand takes exactly one input"));
    }
    Ok(all.remove(0).1)
}

fn search_config(args: &SearchArgs) -> Result<SearchConfig, Fail> {
    let mut cfg = match &args.config {
        Some(path) => io::read_config(path)?,
        None => SearchConfig::default(),
    };
    if let Some(g) = args.grid_points {
        cfg.grid_points = g;
    }
    if let Some(r) = args.refine_iterations {
        cfg.refine_iterations = r;
    }
    if let Some(f) = args.t1_max_factor {
        cfg.t1_max_factor = f;
    }
    if args.search_tol.is_some() {
        cfg.tol = args.search_tol;
    }
    if args.sequential {
        cfg.execution = Execution::Sequential;
    }
    cfg.validate()?;
    Ok(cfg)
}

fn tol_for(p: &Polynomial, tol: Option<f64>) -> Result<f64, Fail> {
    match tol {
        Some(t) if !(t >= 0.0 && t.is_finite()) => Err(usage(format!("--tol must be nonnegative, got {t}"))),
        Some(t) => Ok(t),
        None => Ok(default_tol(p)),
    }
}

fn required_t1(params: &Params) -> Result<f64, Fail> {
    match (params.t1, params.theorem.is_parameterized()) {
        (Some(t), _) => Ok(t),
        (None, false) => Ok(0.0),
        (None, true) => Err(usage(format!("--t1 is required for {}", params.theorem))),
    }
}

fn emit<T: Serialize>(value: &T) {
    println!("{}", serde_json::to_string_pretty(value).expect("report serializes"));
}

fn cmd_bound(p: &Polynomial, params: &Params, format: Format) -> Outcome {
    let t1 = required_t1(params)?;
    let tol = tol_for(p, params.tol)?;
    let rep = bounds::bound(p, params.theorem, t1, params.t2.unwrap_or(0.0), params.k, params.m, tol);
    let rep = match rep {
        Ok(r) => r,
        Err(Error::Hypothesis(h)) => {
            print_check(&h, format);
            return Err(Error::Hypothesis(h).into());
        }
        Err(e) => return Err(e.into()),
    };
    match format {
        Format::Json => emit(&rep),
        _ => report::print_rows(&[Row::from_report(&rep)], format, false),
    }
    Ok(0)
}

fn print_check(h: &hypotheses::HypothesisReport, format: Format) {
    match format {
        Format::Json => emit(h),
        Format::Csv => report::print_check_csv(h),
        Format::Text => report::print_check_text(h),
    }
}

fn cmd_check(p: &Polynomial, params: &Params, format: Format) -> Outcome {
    let t1 = required_t1(params)?;
    let tol = tol_for(p, params.tol)?;
    let h = hypotheses::check(p, params.theorem, t1, params.t2.unwrap_or(0.0), tol);
    print_check(&h, format);
    Ok(if h.ok { 0 } else { 1 })
}

fn cmd_search(p: &Polynomial, theorem: Theorem, args: &SearchArgs, format: Format) -> Outcome {
    let cfg = search_config(args)?;
    let res = optimize_params(p, theorem, &cfg)?;
    match format {
        Format::Json => emit(&res),
        _ => {
            let rows: Vec<Row> = res.best.iter().map(Row::from_report).collect();
            report::print_rows(&rows, format, false);
            if format == Format::Text {
                println!(
                    "{} evaluations, feasible fraction {}",
                    res.evaluations, res.feasible_fraction
                );
            }
        }
    }
    Ok(if res.infeasible() { 1 } else { 0 })
}

/// Parameters as given on the command line; any may be omitted.
#[derive(Clone, Copy, Default)]
struct Point {
    t1: Option<f64>,
    t2: Option<f64>,
    k: Option<usize>,
    m: Option<usize>,
}

/// The report at the given parameters, or the searched optimum when `t1`
/// is omitted for a parameterized bound.
fn resolve(p: &Polynomial, theorem: Theorem, at: Point, tol: f64, cfg: &SearchConfig) -> Result<BoundReport, Error> {
    match at.t1 {
        Some(t1) => bounds::bound(p, theorem, t1, at.t2.unwrap_or(0.0), at.k, at.m, tol),
        None if !theorem.is_parameterized() => bounds::bound(p, theorem, 0.0, 0.0, None, None, tol),
        None => optimize_params(p, theorem, cfg)?
            .best
            .ok_or_else(|| Error::Infeasible(format!("no feasible parameters found for {theorem}"))),
    }
}

struct Verdict {
    report: BoundReport,
    contained: bool,
    tightness: f64,
    max_violation: f64,
}

fn verdict(p: &Polynomial, report: BoundReport) -> Result<Verdict, Error> {
    let rs = oracle::roots(p, 1e-12, 500)?;
    let allow = 1e-8 * cauchy_bound(p)?.max(1.0);
    let (contained, max_violation) = oracle::verify_containment(&rs, &report.disk, allow)?;
    let tightness = oracle::tightness(&rs, &report.disk)?;
    Ok(Verdict {
        report,
        contained,
        tightness,
        max_violation,
    })
}

fn cmd_verify(p: &Polynomial, params: &Params, args: &SearchArgs, format: Format) -> Outcome {
    let tol = tol_for(p, params.tol)?;
    let cfg = search_config(args)?;
    let at = Point {
        t1: params.t1,
        t2: params.t2,
        k: params.k,
        m: params.m,
    };
    let rep = resolve(p, params.theorem, at, tol, &cfg)?;
    let v = verdict(p, rep)?;
    match format {
        Format::Json => {
            let mut value = serde_json::to_value(&v.report).expect("report serializes");
            let obj = value.as_object_mut().expect("report is an object");
            obj.insert("contained".into(), json!(v.contained));
            obj.insert("tightness".into(), json!(v.tightness));
            obj.insert("max_violation".into(), json!(v.max_violation));
            emit(&value);
        }
        _ => report::print_rows(&[Row::from_verdict(&v.report, v.tightness, v.contained)], format, false),
    }
    Ok(if v.contained { 0 } else { 3 })
}

/// Whether an off-center disk lies inside the origin disk of the bound it
/// refines, at the same parameters.
fn nested(p: &Polynomial, r: &BoundReport) -> Option<bool> {
    let (t1, t2, k) = (r.t1?, r.t2.unwrap_or(0.0), r.k?);
    let alpha = r.wedge.map(|w| w.alpha).unwrap_or(0.0);
    let outer = match r.theorem {
        Theorem::Thm17 | Theorem::Cor19 => bounds::rsm_complex_radius(p, t1, t2, k, alpha),
        Theorem::Thm110 => bounds::rsm_parts_radius(p, t1, t2, k, r.m?),
        _ => return None,
    };
    let scale = cauchy_bound(p).ok()?;
    Some(r.enclosing <= outer + 1e-10 * scale)
}

fn compare_one(
    p: &Polynomial,
    t1: Option<f64>,
    t2: Option<f64>,
    cfg: &SearchConfig,
) -> Result<Vec<(Verdict, Option<bool>)>, Error> {
    let tol = cfg.tol.unwrap_or_else(|| default_tol(p));
    let at = Point {
        t1,
        t2,
        ..Point::default()
    };
    let results = cfg.execution.map(&Theorem::ALL, |&th| resolve(p, th, at, tol, cfg));
    let mut out = Vec::new();
    for r in results {
        match r {
            Ok(rep) => {
                let flag = nested(p, &rep);
                out.push((verdict(p, rep)?, flag));
            }
            Err(e @ Error::Anomaly(_)) => return Err(e),
            Err(_) => {}
        }
    }
    Ok(out)
}

fn cmd_compare(input: &Input, t1: Option<f64>, t2: Option<f64>, args: &SearchArgs, format: Format) -> Outcome {
    let cfg = search_config(args)?;
    let polys = load(input)?;
    let mut rows = Vec::new();
    let mut json_rows = Vec::new();
    let mut any_missing = false;
    for (name, p) in &polys {
        let table = compare_one(p, t1, t2, &cfg)?;
        for (v, flag) in &table {
            any_missing |= !v.contained;
            let mut row = Row::from_verdict(&v.report, v.tightness, v.contained);
            row.nested = *flag;
            row.input = Some(name.clone());
            rows.push(row);
            let mut value = serde_json::to_value(&v.report).expect("report serializes");
            let obj = value.as_object_mut().expect("report is an object");
            obj.insert("tightness".into(), json!(v.tightness));
            obj.insert("contained".into(), json!(v.contained));
            obj.insert("nested".into(), json!(flag));
            obj.insert("input".into(), json!(name));
            json_rows.push(value);
        }
    }
    match format {
        Format::Json => emit(&json_rows),
        _ => report::print_rows(&rows, format, true),
    }
    Ok(if any_missing {
        3
    } else if rows.is_empty() {
        1
    } else {
        0
    })
}

fn cmd_gen(args: &GenArgs) -> Outcome {
    std::fs::create_dir_all(&args.out).map_err(|e| usage(format!("{}: {e}", args.out.display())))?;
    let mut written = Vec::new();
    for i in 0..args.count {
        let mut spec = GenSpec::new(args.n, args.k, args.t1, args.alpha, args.seed.wrapping_add(i));
        spec.t2 = args.t2;
        spec.m = args.m;
        let (name, p) = match args.checker {
            Checker::Thm17 => ("thm17", gen_thm17_instance(&spec)?),
            Checker::Thm110 => ("thm110", gen_thm110_instance(&spec)?),
        };
        let m = spec.m.map(|m| format!("_m{m}")).unwrap_or_default();
        let stem = format!("{name}_n{}_k{}{m}_seed{}", spec.n, spec.k, spec.seed);
        let poly_path = args.out.join(format!("{stem}.json"));
        let meta_path = args.out.join(format!("{stem}.meta.json"));
        write(&poly_path, &io::polynomial_to_json(&p))?;
        let meta = json!({ "spec": spec, "checker": name, "ok": true });
        write(
            &meta_path,
            &serde_json::to_string_pretty(&meta).expect("spec serializes"),
        )?;
        written.push(json!({ "polynomial": poly_path, "sidecar": meta_path }));
    }
    emit(&written);
    Ok(0)
}

fn write(path: &Path, text: &str) -> Result<(), Fail> {
    std::fs::write(path, format!("{text}\n")).map_err(|e| usage(format!("{}: {e}", path.display())))
}
