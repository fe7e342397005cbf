//! Command-line surface over the hilbgrass kernels.
//!
//! Exit codes are a three-way contract: 0 for success, 1 when a computation
//! ran but a verification or containment check failed, 2 for unusable
//! parameters or input. Nothing else is ever returned.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use hilbgrass::components::{
    component_report, hilbert_poly, hypersurface_class, ComponentReport,
};
use hilbgrass::error::Error;
use hilbgrass::grass::{
    classify_plane, matrix_from_columns, parametrize_plane, plucker_relations,
    GrassmannianContext, PlaneFamilySpec,
};
use hilbgrass::linalg::RationalMatrix;
use hilbgrass::poly::{
    hom_dimension, hypersurface_ideal, HomogeneousPoly, HypersurfaceIdealSpec, PolyTermJson,
};
use hilbgrass::verify::{run_all, Scope};

const DEFAULT_SEED: u64 = 42;

#[derive(Parser)]
#[command(
    name = "hilbgrass",
    about = "Schubert calculus, Pluecker geometry and Hilbert-scheme component counts",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
enum OutputFormat {
    Human,
    Json,
    Tsv,
}

#[derive(Args, Clone, Copy)]
struct FormatArgs {
    /// Output format
    #[arg(long, value_enum, default_value = "human", global = true)]
    format: OutputFormat,
    /// Shorthand for --format json
    #[arg(long, global = true, conflicts_with = "format")]
    json: bool,
}

impl FormatArgs {
    fn mode(&self) -> OutputFormat {
        if self.json {
            OutputFormat::Json
        } else {
            self.format
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Count and describe the components of the Hilbert scheme of degree-d
    /// hypersurfaces in m-planes of G(k,n)
    Components {
        /// Hypersurface degree (at least 3)
        #[arg(long)]
        d: u32,
        /// Dimension of the subspaces the Grassmannian parametrizes
        #[arg(long)]
        k: usize,
        /// Ambient dimension of the Grassmannian G(k,n)
        #[arg(long)]
        n: usize,
        /// Projective dimension of the linear subspaces carrying the hypersurfaces
        #[arg(long)]
        m: usize,
        #[command(flatten)]
        format: FormatArgs,
    },
    /// Expand the Hilbert polynomial of a degree-d hypersurface in an m-plane
    Poly {
        /// Hypersurface degree (at least 1)
        #[arg(long)]
        d: u32,
        /// Projective dimension of the ambient plane (at least 2)
        #[arg(long)]
        m: u32,
        #[command(flatten)]
        format: FormatArgs,
    },
    /// Compare the closed tangent-space formula against the Hom-space oracle
    /// on a seeded hypersurface ideal
    Tangent {
        /// Projective dimension of the ambient space
        #[arg(long = "N")]
        ambient: usize,
        /// Projective dimension of the plane containing the hypersurface
        #[arg(long)]
        m: usize,
        /// Hypersurface degree
        #[arg(long)]
        d: u32,
        /// Seed for the dense random hypersurface form
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[command(flatten)]
        format: FormatArgs,
    },
    /// Print the quadratic relations cutting out G(k,n) in Pluecker space
    Relations {
        /// Dimension of the subspaces the Grassmannian parametrizes
        #[arg(long)]
        k: usize,
        /// Ambient dimension of the Grassmannian G(k,n)
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        format: FormatArgs,
    },
    /// Classify a plane in Pluecker space (from a family spec or an explicit
    /// matrix in a JSON file) and optionally check a hypersurface form on it
    Classify {
        /// Path to the JSON input
        input: PathBuf,
        #[command(flatten)]
        format: FormatArgs,
    },
    /// Run the self-check suite
    Verify {
        /// fast keeps every check under half a minute; full replays the whole grids
        #[arg(long, value_enum, default_value = "fast")]
        scope: ScopeArg,
        /// Seed for the randomized parts of the checks
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[command(flatten)]
        format: FormatArgs,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
enum ScopeArg {
    Fast,
    Full,
}

impl From<ScopeArg> for Scope {
    fn from(arg: ScopeArg) -> Scope {
        match arg {
            ScopeArg::Fast => Scope::Fast,
            ScopeArg::Full => Scope::Full,
        }
    }
}

/// A failed run: the message lands on stderr and the code is the exit code.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: 2,
            message: message.into(),
        }
    }

    fn check(message: impl Into<String>) -> Self {
        Failure {
            code: 1,
            message: message.into(),
        }
    }
}

fn main() -> ExitCode {
    restore_default_sigpipe();
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            eprintln!("{}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}

/// Rust ignores SIGPIPE, so `hilbgrass ... | head` would turn the closed
/// pipe into a println! panic; dying on the signal like any other
/// line-oriented tool is the behavior pipelines expect.
#[cfg(unix)]
fn restore_default_sigpipe() {
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
}

#[cfg(not(unix))]
fn restore_default_sigpipe() {}

fn run(command: Command) -> Result<(), Failure> {
    match command {
        Command::Components { d, k, n, m, format } => cmd_components(d, k, n, m, format.mode()),
        Command::Poly { d, m, format } => cmd_poly(d, m, format.mode()),
        Command::Tangent {
            ambient,
            m,
            d,
            seed,
            format,
        } => cmd_tangent(ambient, m, d, seed, format.mode()),
        Command::Relations { k, n, format } => cmd_relations(k, n, format.mode()),
        Command::Classify { input, format } => cmd_classify(&input, format.mode()),
        Command::Verify {
            scope,
            seed,
            format,
        } => cmd_verify(scope.into(), seed, format.mode()),
    }
}

fn render_report_human(report: &ComponentReport) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "degree {} hypersurfaces in {}-planes of G({},{}): {} component(s)",
        report.d(),
        report.m(),
        report.k(),
        report.n(),
        report.count()
    );
    for c in report.components() {
        let _ = writeln!(
            out,
            "  {}: plane class sigma{}, hypersurface class {}, base F({},{};{}) of dim {}, component dim {}",
            c.family,
            c.plane_class.partition(),
            c.hypersurface_class,
            c.flag.a(),
            c.flag.b(),
            c.flag.n(),
            c.flag.dim(),
            c.dimension
        );
    }
    if report.count() == 2 {
        let _ = writeln!(
            out,
            "  hypersurface classes {}",
            if report.classes_coincide() {
                "coincide"
            } else {
                "differ"
            }
        );
    }
    out
}

fn render_report_tsv(report: &ComponentReport) -> String {
    let mut out = String::from("family\tplane_class\thypersurface_class\tflag\tflag_dim\tdimension\n");
    for c in report.components() {
        let _ = writeln!(
            out,
            "{}\t{}\t{}\tF({},{};{})\t{}\t{}",
            c.family,
            c.plane_class.partition(),
            c.hypersurface_class,
            c.flag.a(),
            c.flag.b(),
            c.flag.n(),
            c.flag.dim(),
            c.dimension
        );
    }
    out
}

fn cmd_components(d: u32, k: usize, n: usize, m: usize, mode: OutputFormat) -> Result<(), Failure> {
    let report = component_report(d, k, n, m).map_err(|e| Failure::usage(e.to_string()))?;
    match mode {
        OutputFormat::Human => print!("{}", render_report_human(&report)),
        OutputFormat::Json => println!("{}", report.to_json_string()),
        OutputFormat::Tsv => print!("{}", render_report_tsv(&report)),
    }
    Ok(())
}

#[derive(Serialize)]
struct PolyOutput {
    d: u32,
    m: u32,
    coefficients: Vec<String>,
    display: String,
}

fn cmd_poly(d: u32, m: u32, mode: OutputFormat) -> Result<(), Failure> {
    if d < 1 {
        return Err(Failure::usage("degree must be at least 1"));
    }
    if m < 2 {
        return Err(Failure::usage("plane dimension must be at least 2"));
    }
    let poly = hilbert_poly(d, m);
    let coefficients: Vec<String> = poly.coefficients().iter().map(|c| c.to_string()).collect();
    match mode {
        OutputFormat::Human => {
            println!("{poly}");
            println!("coefficients (constant first): [{}]", coefficients.join(", "));
        }
        OutputFormat::Json => {
            let out = PolyOutput {
                d,
                m,
                coefficients,
                display: poly.to_string(),
            };
            println!(
                "{}",
                serde_json::to_string(&out).expect("output struct serializes")
            );
        }
        OutputFormat::Tsv => {
            println!("power\tcoefficient");
            for (power, coeff) in coefficients.iter().enumerate() {
                println!("{power}\t{coeff}");
            }
        }
    }
    Ok(())
}

#[derive(Serialize)]
struct TangentOutput {
    ambient: usize,
    m: usize,
    d: u32,
    seed: u64,
    formula: usize,
    oracle: usize,
    #[serde(rename = "match")]
    agree: bool,
}

fn tangent_formula(ambient: usize, m: usize, d: u32) -> usize {
    let mut fiber: i64 = 1;
    for i in 0..m as i64 {
        fiber = fiber * (m as i64 + d as i64 - i) / (i + 1);
    }
    (fiber - 1) as usize + (ambient - m) * (m + 1)
}

fn cmd_tangent(
    ambient: usize,
    m: usize,
    d: u32,
    seed: u64,
    mode: OutputFormat,
) -> Result<(), Failure> {
    let spec = HypersurfaceIdealSpec::dense_seeded(ambient, m, d, seed)
        .map_err(|e| Failure::usage(e.to_string()))?;
    let ideal = hypersurface_ideal(&spec);
    let oracle = hom_dimension(&ideal, 2 * d).map_err(|e| Failure::usage(e.to_string()))?;
    let formula = tangent_formula(ambient, m, d);
    let agree = oracle == formula;
    match mode {
        OutputFormat::Human => {
            let relation = if agree { "=" } else { "!=" };
            println!("{formula} {relation} {oracle}");
        }
        OutputFormat::Json => {
            let out = TangentOutput {
                ambient,
                m,
                d,
                seed,
                formula,
                oracle,
                agree,
            };
            println!(
                "{}",
                serde_json::to_string(&out).expect("output struct serializes")
            );
        }
        OutputFormat::Tsv => {
            println!("formula\toracle\tmatch");
            println!("{formula}\t{oracle}\t{agree}");
        }
    }
    if agree {
        Ok(())
    } else {
        Err(Failure::check(format!(
            "tangent formula {formula} disagrees with the Hom-space oracle {oracle}"
        )))
    }
}

/// Render one Pluecker relation with variables named after their index
/// subsets, e.g. p_01*p_23 - p_02*p_13 + p_03*p_12.
fn render_relation(poly: &HomogeneousPoly, ctx: &GrassmannianContext) -> String {
    let mut out = String::new();
    for (position, term) in poly.to_json_terms().iter().enumerate() {
        let negative = term.coeff.starts_with('-');
        let magnitude = term.coeff.trim_start_matches('-');
        if position == 0 {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        let mut factors = Vec::new();
        if magnitude != "1" {
            factors.push(magnitude.to_string());
        }
        for (var, &e) in term.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            let subset: String = ctx.subsets()[var]
                .iter()
                .map(usize::to_string)
                .collect::<Vec<_>>()
                .join("");
            let var_name = if e == 1 {
                format!("p_{subset}")
            } else {
                format!("p_{subset}^{e}")
            };
            factors.push(var_name);
        }
        out.push_str(&factors.join("*"));
    }
    out
}

#[derive(Serialize)]
struct RelationsOutput {
    k: usize,
    n: usize,
    count: usize,
    relations: Vec<String>,
}

fn cmd_relations(k: usize, n: usize, mode: OutputFormat) -> Result<(), Failure> {
    let ctx = GrassmannianContext::new(k, n).map_err(|e| Failure::usage(e.to_string()))?;
    let rendered: Vec<String> = plucker_relations(&ctx)
        .iter()
        .map(|r| render_relation(r, &ctx))
        .collect();
    match mode {
        OutputFormat::Human => {
            println!(
                "{} relation(s) cut out G({k},{n}) in P^{}",
                rendered.len(),
                ctx.plucker_dim()
            );
            for r in &rendered {
                println!("  {r} = 0");
            }
        }
        OutputFormat::Json => {
            let out = RelationsOutput {
                k,
                n,
                count: rendered.len(),
                relations: rendered,
            };
            println!(
                "{}",
                serde_json::to_string(&out).expect("output struct serializes")
            );
        }
        OutputFormat::Tsv => {
            println!("index\trelation");
            for (i, r) in rendered.iter().enumerate() {
                println!("{i}\t{r}");
            }
        }
    }
    Ok(())
}

#[derive(Serialize)]
struct HypersurfaceClassOutput {
    coeff: i64,
    partition: String,
}

#[derive(Serialize)]
struct ClassifyOutput {
    family: String,
    plane_class: String,
    core_dim: usize,
    span_dim: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    hypersurface_class: Option<HypersurfaceClassOutput>,
    #[serde(skip_serializing_if = "Option::is_none")]
    span_matches: Option<bool>,
}

/// Pull the classification target out of the input JSON: either a family
/// spec (marked by a "family" key) or an explicit column matrix under
/// "plane" with its "k" and "n".
fn classify_target(
    text: &str,
    value: &serde_json::Value,
) -> Result<(GrassmannianContext, RationalMatrix), Failure> {
    if value.get("family").is_some() {
        let spec = PlaneFamilySpec::from_json_str(text)
            .map_err(|e| Failure::usage(e.to_string()))?;
        let plane = parametrize_plane(&spec).map_err(|e| Failure::usage(e.to_string()))?;
        return Ok((spec.context().clone(), plane));
    }
    let read_dim = |key: &str| -> Result<usize, Failure> {
        value
            .get(key)
            .and_then(serde_json::Value::as_u64)
            .map(|v| v as usize)
            .ok_or_else(|| Failure::usage(format!("input needs an integer field {key:?}")))
    };
    let k = read_dim("k")?;
    let n = read_dim("n")?;
    let ctx = GrassmannianContext::new(k, n).map_err(|e| Failure::usage(e.to_string()))?;
    let columns: Vec<Vec<String>> = value
        .get("plane")
        .cloned()
        .map(serde_json::from_value)
        .transpose()
        .map_err(|e| Failure::usage(format!("field \"plane\" is not a column matrix: {e}")))?
        .ok_or_else(|| Failure::usage("input needs either \"family\" or \"plane\""))?;
    let plane = matrix_from_columns(&columns).map_err(|e| Failure::usage(e.to_string()))?;
    if plane.rows() != ctx.coordinate_count() {
        return Err(Failure::usage(format!(
            "plane columns have {} coordinates but G({k},{n}) needs {}",
            plane.rows(),
            ctx.coordinate_count()
        )));
    }
    Ok((ctx, plane))
}

fn classification_failure(error: Error) -> Failure {
    match error {
        Error::UnclassifiablePlane | Error::NotOnGrassmannian | Error::NotDecomposable { .. } => {
            Failure::check(error.to_string())
        }
        other => Failure::usage(other.to_string()),
    }
}

fn cmd_classify(input: &PathBuf, mode: OutputFormat) -> Result<(), Failure> {
    let text = std::fs::read_to_string(input)
        .map_err(|e| Failure::usage(format!("cannot read {}: {e}", input.display())))?;
    let value: serde_json::Value = serde_json::from_str(&text)
        .map_err(|e| Failure::usage(format!("input is not valid JSON: {e}")))?;
    let (ctx, plane) = classify_target(&text, &value)?;

    let form = value
        .get("form")
        .cloned()
        .map(|v| -> Result<HomogeneousPoly, Failure> {
            let terms: Vec<PolyTermJson> = serde_json::from_value(v)
                .map_err(|e| Failure::usage(format!("field \"form\" is malformed: {e}")))?;
            HomogeneousPoly::from_json_terms(plane.cols(), &terms)
                .map_err(|e| Failure::usage(e.to_string()))
        })
        .transpose()?;

    let found = classify_plane(&plane, &ctx).map_err(classification_failure)?;

    let mut hypersurface = None;
    let mut span_matches = None;
    if let Some(form) = form {
        let class = hypersurface_class(&found.class, form.degree())
            .map_err(|e| Failure::usage(e.to_string()))?;
        let (partition, coeff) = class
            .single_term()
            .expect("maximal plane classes bump to a single term");
        hypersurface = Some(HypersurfaceClassOutput {
            coeff,
            partition: partition.to_string(),
        });
        let span = hilbgrass::grass::span_of_hypersurface(&plane, &form)
            .map_err(|e| Failure::usage(e.to_string()))?;
        let matches = span.transpose().row_spaces_equal(&plane.transpose());
        span_matches = Some(matches);
        if !matches {
            print_classification(&found, &hypersurface, &span_matches, mode);
            return Err(Failure::check(
                "the hypersurface span differs from the input plane",
            ));
        }
    }

    print_classification(&found, &hypersurface, &span_matches, mode);
    Ok(())
}

fn print_classification(
    found: &hilbgrass::grass::PlaneClassification,
    hypersurface: &Option<HypersurfaceClassOutput>,
    span_matches: &Option<bool>,
    mode: OutputFormat,
) {
    match mode {
        OutputFormat::Human => {
            println!("family: {}", found.family);
            println!("plane class: sigma{}", found.class.partition());
            println!("core dimension: {}", found.core_dim);
            println!("span dimension: {}", found.span_dim);
            if let Some(h) = hypersurface {
                println!("hypersurface class: {}*sigma{}", h.coeff, h.partition);
            }
            if let Some(ok) = span_matches {
                println!("span check: {}", if *ok { "ok" } else { "MISMATCH" });
            }
        }
        OutputFormat::Json => {
            let out = ClassifyOutput {
                family: found.family.tag().to_string(),
                plane_class: found.class.partition().to_string(),
                core_dim: found.core_dim,
                span_dim: found.span_dim,
                hypersurface_class: hypersurface.as_ref().map(|h| HypersurfaceClassOutput {
                    coeff: h.coeff,
                    partition: h.partition.clone(),
                }),
                span_matches: *span_matches,
            };
            println!(
                "{}",
                serde_json::to_string(&out).expect("output struct serializes")
            );
        }
        OutputFormat::Tsv => {
            println!("family\tplane_class\tcore_dim\tspan_dim\thypersurface_class\tspan_ok");
            let class_text = hypersurface
                .as_ref()
                .map(|h| format!("{}*sigma{}", h.coeff, h.partition))
                .unwrap_or_else(|| "-".into());
            let span_text = span_matches
                .map(|ok| ok.to_string())
                .unwrap_or_else(|| "-".into());
            println!(
                "{}\t{}\t{}\t{}\t{}\t{}",
                found.family,
                found.class.partition(),
                found.core_dim,
                found.span_dim,
                class_text,
                span_text
            );
        }
    }
}

#[derive(Serialize)]
struct VerifyLine {
    index: usize,
    name: &'static str,
    passed: bool,
    detail: String,
}

fn cmd_verify(scope: Scope, seed: u64, mode: OutputFormat) -> Result<(), Failure> {
    let results = run_all(scope, seed);
    match mode {
        OutputFormat::Human => {
            for r in &results {
                println!("{r}");
            }
        }
        OutputFormat::Json => {
            let lines: Vec<VerifyLine> = results
                .iter()
                .map(|r| VerifyLine {
                    index: r.index,
                    name: r.name,
                    passed: r.passed,
                    detail: r.detail.clone(),
                })
                .collect();
            println!(
                "{}",
                serde_json::to_string(&lines).expect("output struct serializes")
            );
        }
        OutputFormat::Tsv => {
            println!("index\tname\tpassed\tdetail");
            for r in &results {
                println!("{}\t{}\t{}\t{}", r.index, r.name, r.passed, r.detail);
            }
        }
    }
    let failed = results.iter().filter(|r| !r.passed).count();
    if failed == 0 {
        if mode == OutputFormat::Human {
            println!("all {} checks passed (scope {scope}, seed {seed})", results.len());
        }
        Ok(())
    } else {
        Err(Failure::check(format!(
            "{failed} of {} checks failed (scope {scope}, seed {seed})",
            results.len()
        )))
    }
}
