//! Command line for the orbit machinery: classify points, compute normal
//! forms with verified witnesses, apply group elements, report invariants,
//! and generate sample points. Documents go in and out as JSON.

mod io;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use io::{
    parse_documents, read_input, write_docs, CliError, ElementDoc, ElementInput, InvariantsDoc,
    LabelsDoc, PointDoc, Report, Shape,
};
use poincare_orbits::{
    casimirs, classify_full, coadjoint_act, component_labels, cvk_label, normal_form, polarization,
    sample_orbit, CoadjointPoint, ComponentLabel, OrbitClass, SamplerConfig, Sign, ToleranceConfig,
};

const CONVENTIONS: &str = "\
Conventions: four-vector components are ordered (x, y, z, t); the Minkowski \
form is diag(-1, -1, -1, +1). A point is a pair (M, P) given as JSON \
{\"M\": {\"l\": [..], \"g\": [..]}, \"P\": [..]} with rotation parameters l and \
boost parameters g, or with a row-major 4x4 \"M_matrix\" in place of \"M\". \
Group elements are {\"S\": [[..]], \"C\": [..]} acting on the left, S first and \
then the translation C; the reflections can be named directly as \
{\"involution\": \"space\"} or {\"involution\": \"time\"}. Inputs may be a \
single document, a JSON array, or one document per line, and batch outputs \
mirror the input shape; sample always emits a JSON array.";

#[derive(Parser)]
#[command(
    name = "poincare-orbits",
    version,
    about = "Classify and transport coadjoint orbit points of the full Poincare group",
    long_about = None,
    after_long_help = CONVENTIONS
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Sort points into the orbit catalog and report class, parameters,
    /// labels, and Casimirs
    Classify(CommonArgs),
    /// Classify, then produce the canonical representative and a verified
    /// witness group element reaching it
    NormalForm(CommonArgs),
    /// Report the Casimirs and the polarization vector of each point
    Invariants(CommonArgs),
    /// Apply a group element to each point
    Act(ActArgs),
    /// Generate deterministic points on a chosen orbit component
    Sample(SampleArgs),
}

#[derive(Args)]
struct CommonArgs {
    /// Input file, or - for stdin
    #[arg(long, default_value = "-")]
    input: String,
    /// Classification tolerance
    #[arg(long, default_value_t = 1e-8)]
    tol: f64,
    /// Indent output; line-stream batches become arrays
    #[arg(long)]
    pretty: bool,
    /// Process batch items on N worker threads (0 means one per core)
    #[arg(long, value_name = "N")]
    parallel: Option<usize>,
}

#[derive(Args)]
struct ActArgs {
    #[command(flatten)]
    common: CommonArgs,
    /// Group element to apply: a file path, or inline JSON starting with {
    #[arg(long)]
    element: String,
}

#[derive(Args)]
struct SampleArgs {
    /// Orbit class to draw from
    #[arg(long, value_enum)]
    class: ClassArg,
    /// Mass parameter (massive classes)
    #[arg(long)]
    mu: Option<f64>,
    /// Spin or helicity parameter (spinning and helicity classes)
    #[arg(long)]
    beta: Option<f64>,
    /// Energy sign of the component: + or -
    #[arg(long, default_value = "+", allow_hyphen_values = true)]
    energy: String,
    /// Helicity sign of the component (massless class only): + or -
    #[arg(long, allow_hyphen_values = true)]
    helicity: Option<String>,
    /// Number of points
    #[arg(long, default_value_t = 1)]
    count: usize,
    /// Seed for the deterministic generator
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Bound on the rotation and boost parameter norms
    #[arg(long, default_value_t = 2.0)]
    max_rapidity: f64,
    /// Bound on each translation component
    #[arg(long, default_value_t = 10.0)]
    max_translation: f64,
    /// Indent output; multi-point output becomes an array
    #[arg(long)]
    pretty: bool,
}

#[derive(ValueEnum, Clone, Copy)]
enum ClassArg {
    MassiveSpinning,
    MassiveSpinless,
    MasslessHelicity,
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                print!("{e}");
                std::process::exit(0);
            }
            let detail = e
                .to_string()
                .lines()
                .map(str::trim)
                .filter(|l| !l.is_empty())
                .collect::<Vec<_>>()
                .join("; ");
            eprintln!("{}", CliError::new("usage", detail).to_json());
            std::process::exit(1);
        }
    };
    match run(cli) {
        Ok(code) => std::process::exit(code),
        Err(e) => {
            eprintln!("{}", e.to_json());
            std::process::exit(1);
        }
    }
}

fn run(cli: Cli) -> Result<i32, CliError> {
    match cli.cmd {
        Cmd::Classify(a) => report_cmd(a, false),
        Cmd::NormalForm(a) => report_cmd(a, true),
        Cmd::Invariants(a) => invariants_cmd(a),
        Cmd::Act(a) => act_cmd(a),
        Cmd::Sample(a) => sample_cmd(a),
    }
}

fn tol_config(flag: f64) -> Result<ToleranceConfig, CliError> {
    if !(flag.is_finite() && flag > 0.0) {
        return Err(CliError::new("usage", "--tol must be a positive number"));
    }
    Ok(ToleranceConfig {
        classify: flag,
        structural: flag.max(1e-10),
    })
}

fn load_points(
    common: &CommonArgs,
    tol: &ToleranceConfig,
) -> Result<(Vec<CoadjointPoint>, Shape), CliError> {
    let text = read_input(&common.input)?;
    let (docs, shape) = parse_documents::<PointDoc>(&text)?;
    let mut pts = Vec::with_capacity(docs.len());
    for (i, d) in docs.iter().enumerate() {
        pts.push(d.to_point(tol).map_err(|e| {
            if docs.len() > 1 {
                CliError::new(e.kind, format!("point {i}: {}", e.detail))
            } else {
                e
            }
        })?);
    }
    Ok((pts, shape))
}

fn map_batch<T, F>(
    pts: &[CoadjointPoint],
    parallel: Option<usize>,
    f: F,
) -> Result<Vec<T>, CliError>
where
    T: Send,
    F: Fn(&CoadjointPoint) -> Result<T, CliError> + Sync,
{
    match parallel {
        None => pts.iter().map(&f).collect(),
        Some(n) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(n)
                .build()
                .map_err(|e| CliError::new("usage", format!("building thread pool: {e}")))?;
            pool.install(|| pts.par_iter().map(&f).collect())
        }
    }
}

/// Report for one point; the flag adds the normal-form fields. The second
/// value says whether the point fell outside the catalog.
fn build_report(
    nu: &CoadjointPoint,
    tol: &ToleranceConfig,
    with_normal_form: bool,
) -> Result<(Report, bool), CliError> {
    let full = classify_full(nu, tol);
    let (c1, c2) = casimirs(nu);
    let casimirs = [c1, c2];
    if let OrbitClass::OutOfCatalog { reason } = full.class {
        return Ok((
            Report {
                class: full.class.name(),
                mu: None,
                beta: None,
                labels: None,
                cvk_label: None,
                representative: None,
                witness: None,
                residual: None,
                casimirs,
                marginal: full.marginal,
                reason: Some(reason.as_str()),
            },
            true,
        ));
    }
    let cls = full.class;
    let labels =
        component_labels(nu, &cls).map_err(|e| CliError::new("numerical", e.to_string()))?;
    let (representative, witness, residual) = if with_normal_form {
        let nf = normal_form(nu, tol).map_err(|e| CliError::new("numerical", e.to_string()))?;
        (
            Some(PointDoc::from_point(&nf.representative)),
            Some(ElementDoc::from_element(&nf.witness)),
            Some(nf.residual),
        )
    } else {
        (None, None, None)
    };
    Ok((
        Report {
            class: cls.name(),
            mu: cls.mu(),
            beta: cls.beta(),
            labels: Some(LabelsDoc::from(&labels)),
            cvk_label: cvk_label(&cls),
            representative,
            witness,
            residual,
            casimirs,
            marginal: full.marginal,
            reason: None,
        },
        false,
    ))
}

fn report_cmd(args: CommonArgs, with_normal_form: bool) -> Result<i32, CliError> {
    let tol = tol_config(args.tol)?;
    let (pts, shape) = load_points(&args, &tol)?;
    let results = map_batch(&pts, args.parallel, |p| {
        build_report(p, &tol, with_normal_form)
    })?;
    let any_out = results.iter().any(|(_, out)| *out);
    let reports: Vec<Report> = results.into_iter().map(|(r, _)| r).collect();
    write_docs(&reports, shape, args.pretty)?;
    Ok(if with_normal_form && any_out { 2 } else { 0 })
}

fn invariants_cmd(args: CommonArgs) -> Result<i32, CliError> {
    let tol = tol_config(args.tol)?;
    let (pts, shape) = load_points(&args, &tol)?;
    let docs = map_batch(&pts, args.parallel, |p| {
        let (c1, c2) = casimirs(p);
        Ok(InvariantsDoc {
            c1,
            c2,
            w: polarization(p).as_array(),
        })
    })?;
    write_docs(&docs, shape, args.pretty)?;
    Ok(0)
}

fn act_cmd(args: ActArgs) -> Result<i32, CliError> {
    let tol = tol_config(args.common.tol)?;
    let text = if args.element.trim_start().starts_with('{') {
        args.element.clone()
    } else {
        read_input(&args.element)?
    };
    let doc: ElementInput =
        serde_json::from_str(&text).map_err(|e| CliError::new("parse", format!("element: {e}")))?;
    let g = doc.to_element(&tol)?;
    let (pts, shape) = load_points(&args.common, &tol)?;
    let docs = map_batch(&pts, args.common.parallel, |p| {
        Ok(PointDoc::from_point(&coadjoint_act(&g, p)))
    })?;
    write_docs(&docs, shape, args.common.pretty)?;
    Ok(0)
}

fn parse_sign(s: &str, what: &str) -> Result<Sign, CliError> {
    match s {
        "+" => Ok(Sign::Plus),
        "-" => Ok(Sign::Minus),
        other => Err(CliError::new(
            "usage",
            format!("{what} must be + or -, got {other:?}"),
        )),
    }
}

fn required(v: Option<f64>, flag: &str, class: &str) -> Result<f64, CliError> {
    let v = v.ok_or_else(|| CliError::new("usage", format!("{class} requires {flag}")))?;
    if !(v.is_finite() && v > 0.0) {
        return Err(CliError::new(
            "usage",
            format!("{flag} must be a positive number"),
        ));
    }
    Ok(v)
}

fn forbidden(v: Option<f64>, flag: &str, class: &str) -> Result<(), CliError> {
    if v.is_some() {
        return Err(CliError::new(
            "usage",
            format!("{flag} is not a parameter of {class}"),
        ));
    }
    Ok(())
}

fn sample_cmd(args: SampleArgs) -> Result<i32, CliError> {
    if args.count == 0 {
        return Err(CliError::new("usage", "--count must be at least 1"));
    }
    if !(args.max_rapidity.is_finite() && args.max_rapidity >= 0.0) {
        return Err(CliError::new("usage", "--max-rapidity must be nonnegative"));
    }
    if !(args.max_translation.is_finite() && args.max_translation >= 0.0) {
        return Err(CliError::new(
            "usage",
            "--max-translation must be nonnegative",
        ));
    }
    let energy = parse_sign(&args.energy, "--energy")?;
    let (cls, labels) = match args.class {
        ClassArg::MassiveSpinning => {
            let mu = required(args.mu, "--mu", "massive-spinning")?;
            let beta = required(args.beta, "--beta", "massive-spinning")?;
            if args.helicity.is_some() {
                return Err(CliError::new(
                    "usage",
                    "--helicity only applies to massless-helicity",
                ));
            }
            (
                OrbitClass::MassiveSpinning { mu, beta },
                ComponentLabel {
                    energy_sign: energy,
                    spin_sign: Some(energy),
                    helicity_sign: None,
                },
            )
        }
        ClassArg::MassiveSpinless => {
            let mu = required(args.mu, "--mu", "massive-spinless")?;
            forbidden(args.beta, "--beta", "massive-spinless")?;
            if args.helicity.is_some() {
                return Err(CliError::new(
                    "usage",
                    "--helicity only applies to massless-helicity",
                ));
            }
            (
                OrbitClass::MassiveSpinless { mu },
                ComponentLabel {
                    energy_sign: energy,
                    spin_sign: None,
                    helicity_sign: None,
                },
            )
        }
        ClassArg::MasslessHelicity => {
            let beta = required(args.beta, "--beta", "massless-helicity")?;
            forbidden(args.mu, "--mu", "massless-helicity")?;
            let h = match &args.helicity {
                Some(s) => parse_sign(s, "--helicity")?,
                None => Sign::Plus,
            };
            (
                OrbitClass::MasslessHelicity { beta },
                ComponentLabel {
                    energy_sign: energy,
                    spin_sign: None,
                    helicity_sign: Some(h),
                },
            )
        }
    };
    let cfg = SamplerConfig {
        seed: args.seed,
        max_rapidity: args.max_rapidity,
        max_translation: args.max_translation,
        include_involutions: false,
    };
    let pts = sample_orbit(&cls, &labels, &cfg, args.count)
        .map_err(|e| CliError::new("usage", e.to_string()))?;
    let docs: Vec<PointDoc> = pts.iter().map(PointDoc::from_point).collect();
    write_docs(&docs, Shape::Array, args.pretty)?;
    Ok(0)
}
