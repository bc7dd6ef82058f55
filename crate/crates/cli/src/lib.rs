//! Command-line front end. Every subcommand reads JSON or flags, validates,
//! calls one or two library operations and prints a JSON document with a
//! `"schema": 1` field.
//!
//! Exit codes: 0 on success, 1 when the input is well formed but
//! mathematically invalid (non-symmetric link matrix, non-symplectic
//! monodromy, bad slide, …), 2 on malformed flags, files or JSON.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::de::DeserializeOwned;
use serde_json::{json, Value};
use slide_screen_core as core;
use slide_screen_core::{
    BandSign, CurveOnFiber, EnumerationOptions, FiberSurface, FiberedMonodromy, FramedLink,
    HomologyClass, IntMatrix, QuadraticForm, ScreenConstraint, SlideMove, SlideSequence,
    SurgeryTarget,
};

pub const SCHEMA: u32 = 1;

/// Environment variable capping the number of enumeration workers.
pub const THREADS_ENV: &str = "SLIDE_SCREEN_THREADS";

/// Which subcommand exposes each library operation.
pub const OPERATIONS: &[(&str, &str)] = &[
    ("smith_normal_form", "snf"),
    ("cokernel_invariants", "snf"),
    ("is_gpr_admissible", "link check"),
    ("apply_slide", "link slide"),
    ("surgery_homology", "link homology"),
    ("dual_slide_sequence", "seq dual"),
    ("make_figure_eight", "monodromy show"),
    ("make_trefoil", "monodromy show"),
    ("is_symplectic", "monodromy show"),
    ("screening_form", "monodromy show"),
    ("act", "monodromy show"),
    ("connected_sum", "monodromy sum"),
    ("screen_connected_sum", "monodromy sum"),
    ("brute_force_solutions", "screen brute"),
    ("fibonacci_solutions", "screen fib"),
    ("descent_reduce", "screen descend"),
    ("family_pairing_table", "screen family"),
    ("symplectic_pairing", "screen family"),
    ("is_primitive", "screen family"),
    ("compress", "fiber compress"),
    ("genus_drop_check", "fiber compress"),
    ("isotopic_case_classify", "fiber classify"),
];

#[derive(Debug, Parser)]
#[command(
    name = "slide-screen",
    version,
    about = "Framed-link and fibered-monodromy calculator"
)]
pub struct Cli {
    /// Emit JSON (the only output format; accepted for scripting symmetry).
    #[arg(long, global = true, default_value_t = true)]
    pub json: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Smith normal form of an integer matrix, with its cokernel when square.
    Snf(MatrixInput),
    /// Framed-link operations on a link file {"n": int, "matrix": [[int]]}.
    #[command(subcommand)]
    Link(LinkCommand),
    /// Slide sequences.
    #[command(subcommand)]
    Seq(SeqCommand),
    /// Fibered monodromies.
    #[command(subcommand)]
    Monodromy(MonodromyCommand),
    /// Screening of homology classes.
    #[command(subcommand)]
    Screen(ScreenCommand),
    /// Compression bookkeeping on a fiber surface.
    #[command(subcommand)]
    Fiber(FiberCommand),
}

#[derive(Debug, Args)]
pub struct MatrixInput {
    /// Matrix as inline JSON, e.g. '[[0,2],[2,0]]'.
    #[arg(
        long,
        conflicts_with = "matrix_file",
        required_unless_present = "matrix_file"
    )]
    pub matrix: Option<String>,
    /// File holding a JSON matrix or {"matrix": [[int]]}.
    #[arg(long)]
    pub matrix_file: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct LinkFile {
    #[arg(long)]
    pub link_file: PathBuf,
}

#[derive(Debug, Subcommand)]
pub enum LinkCommand {
    /// Are all framings and linking numbers zero?
    Check(LinkFile),
    /// Apply a handle slide, or a sequence of them from --seq-file.
    Slide(SlideArgs),
    /// First homology of the surgered manifold.
    Homology(LinkFile),
}

#[derive(Debug, Args)]
pub struct SlideArgs {
    #[arg(long)]
    pub link_file: PathBuf,
    /// Component that slides (0-based).
    #[arg(
        long,
        required_unless_present = "seq_file",
        conflicts_with = "seq_file"
    )]
    pub slider: Option<usize>,
    /// Component slid over (0-based).
    #[arg(long, required_unless_present = "seq_file")]
    pub over: Option<usize>,
    /// Band orientation, +1 or -1.
    #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
    pub sign: i64,
    /// Sequence file {"moves": [{"slider": i, "over": j, "sign": ±1}, ...]}.
    #[arg(long)]
    pub seq_file: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum SeqCommand {
    /// Dual sequence: swap slider and over in each move, reverse the order.
    Dual {
        #[arg(long)]
        seq_file: PathBuf,
    },
}

#[derive(Debug, Args)]
pub struct MonodromySource {
    /// Built-in monodromy: figure8 or trefoil.
    #[arg(
        long,
        conflicts_with = "monodromy_file",
        required_unless_present = "monodromy_file"
    )]
    pub monodromy: Option<String>,
    /// File {"genus": int, "matrix": [[int]]} holding a symplectic matrix.
    #[arg(long)]
    pub monodromy_file: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum MonodromyCommand {
    /// Matrix, symplectic check and screening form; optionally the image of a class.
    Show {
        #[command(flatten)]
        source: MonodromySource,
        /// Class to push forward, comma separated, e.g. 1,0.
        #[arg(long, allow_hyphen_values = true)]
        act: Option<String>,
    },
    /// Connected sum; built-ins (in order) come before files (in order).
    Sum {
        #[arg(long = "monodromy")]
        names: Vec<String>,
        #[arg(long = "monodromy-file")]
        files: Vec<PathBuf>,
        /// Per-block classes to screen, JSON [[[m, n], ...], ...].
        #[arg(long, conflicts_with = "classes_file")]
        classes: Option<String>,
        #[arg(long)]
        classes_file: Option<PathBuf>,
        #[command(flatten)]
        constraint: ConstraintArgs,
    },
}

#[derive(Debug, Args)]
pub struct ConstraintArgs {
    #[arg(long, default_value_t = -1, allow_hyphen_values = true)]
    pub lower: i64,
    #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
    pub upper: i64,
}

#[derive(Debug, Subcommand)]
pub enum ScreenCommand {
    /// Exhaustive scan of the box |xᵢ| ≤ bound (inclusive, per coordinate).
    Brute {
        #[command(flatten)]
        source: MonodromySource,
        #[arg(long)]
        bound: i64,
        #[command(flatten)]
        constraint: ConstraintArgs,
        #[arg(long)]
        allow_imprimitive: bool,
        #[arg(long)]
        allow_zero: bool,
        /// Use the printed trefoil form m² + mn + n² instead of the matrix-derived one.
        #[arg(long)]
        paper_form: bool,
    },
    /// Figure-eight solutions from the Fibonacci parametrization.
    Fib {
        #[arg(long)]
        bound: i64,
    },
    /// Descend a genus-one class to its orbit representative.
    Descend {
        #[command(flatten)]
        source: MonodromySource,
        /// Class, comma separated, e.g. 5,3.
        #[arg(long, allow_hyphen_values = true)]
        class: String,
    },
    /// Pairwise intersection table of a family of classes.
    Family {
        /// JSON list of classes, e.g. '[[1,2],[2,3],[3,5]]'.
        #[arg(
            long,
            conflicts_with = "classes_file",
            required_unless_present = "classes_file"
        )]
        classes: Option<String>,
        #[arg(long)]
        classes_file: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Orientation {
    Preserving,
    Reversing,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Target {
    /// #₂(S¹×S²)
    #[value(name = "double-s1xs2")]
    DoubleS1xS2,
}

#[derive(Debug, Args)]
pub struct CurveArgs {
    /// Genus of the closed fiber.
    #[arg(long)]
    pub genus: u32,
    #[arg(long, requires = "split")]
    pub separating: bool,
    /// Genera of the two sides of a separating curve, e.g. 1,1.
    #[arg(long, requires = "separating")]
    pub split: Option<String>,
}

#[derive(Debug, Subcommand)]
pub enum FiberCommand {
    /// Compress the fiber along an essential curve.
    Compress(CurveArgs),
    /// Outcome of fiber-framed surgery on a curve with h(c) isotopic to c.
    Classify {
        #[command(flatten)]
        curve: CurveArgs,
        /// Behaviour of the isotopy h(c) ≃ c on the orientation of c.
        #[arg(long, value_enum)]
        orientation: Option<Orientation>,
        /// Drop the hypothesis h(c) ≃ c (the command then refuses).
        #[arg(long)]
        not_fixed: bool,
        #[arg(long, value_enum)]
        target: Option<Target>,
    },
}

#[derive(Debug)]
pub enum CliError {
    /// Malformed input; exit code 2.
    Input(String),
    /// Well-formed input rejected by the mathematics; exit code 1.
    Domain(String),
}

impl From<core::Error> for CliError {
    fn from(e: core::Error) -> Self {
        CliError::Domain(e.to_string())
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Input(msg) => write!(f, "invalid input: {msg}"),
            CliError::Domain(e) => write!(f, "error: {e}"),
        }
    }
}

type CliResult<T> = Result<T, CliError>;

/// Parses `argv` (program name first), runs the command and writes JSON to
/// `out` or a diagnostic to `err`. Returns the process exit code.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let rendered = e.render().to_string();
            let sink: &mut dyn Write = if code == 0 { out } else { err };
            let _ = write!(sink, "{rendered}");
            return code;
        }
    };
    match execute(&cli.command) {
        Ok(value) => {
            let text = serde_json::to_string_pretty(&value).expect("JSON values serialize");
            let _ = writeln!(out, "{text}");
            0
        }
        Err(e) => {
            let _ = writeln!(err, "{e}");
            match e {
                CliError::Input(_) => 2,
                CliError::Domain(_) => 1,
            }
        }
    }
}

pub fn execute(command: &Command) -> CliResult<Value> {
    match command {
        Command::Snf(input) => snf(input),
        Command::Link(cmd) => link(cmd),
        Command::Seq(SeqCommand::Dual { seq_file }) => {
            let seq: SlideSequence = read_json(seq_file)?;
            let dual = core::dual_slide_sequence(&seq);
            Ok(json!({ "schema": SCHEMA, "input": seq, "moves": dual.moves }))
        }
        Command::Monodromy(cmd) => monodromy(cmd),
        Command::Screen(cmd) => screen(cmd),
        Command::Fiber(cmd) => fiber(cmd),
    }
}

fn read_text(path: &Path) -> CliResult<String> {
    fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn parse_json<T: DeserializeOwned>(text: &str, what: &str) -> CliResult<T> {
    serde_json::from_str(text).map_err(|e| classify_json_error(e, what))
}

/// Syntax and shape errors are input errors; a value the library refused
/// (asymmetric link matrix, non-symplectic monodromy) is a domain error.
fn classify_json_error(e: serde_json::Error, what: &str) -> CliError {
    use serde_json::error::Category;
    let msg = e.to_string();
    let semantic = matches!(e.classify(), Category::Data)
        && ["not symmetric", "intersection form", "empty input"]
            .iter()
            .any(|needle| msg.contains(needle));
    if semantic {
        CliError::Domain(format!("{what}: {msg}"))
    } else {
        CliError::Input(format!("{what}: {msg}"))
    }
}

fn read_json<T: DeserializeOwned>(path: &Path) -> CliResult<T> {
    parse_json(&read_text(path)?, &path.display().to_string())
}

fn parse_matrix(text: &str, what: &str) -> CliResult<IntMatrix> {
    #[derive(serde::Deserialize)]
    #[serde(untagged)]
    enum Shape {
        Bare(Vec<Vec<i64>>),
        Wrapped { matrix: Vec<Vec<i64>> },
    }
    let rows = match parse_json::<Shape>(text, what)? {
        Shape::Bare(rows) | Shape::Wrapped { matrix: rows } => rows,
    };
    IntMatrix::from_rows(rows).map_err(|e| CliError::Input(format!("{what}: {e}")))
}

fn parse_class(text: &str) -> CliResult<HomologyClass> {
    let coords = text
        .split(',')
        .map(|t| {
            t.trim()
                .parse::<i64>()
                .map_err(|e| CliError::Input(format!("class '{text}': {e}")))
        })
        .collect::<CliResult<Vec<_>>>()?;
    HomologyClass::new(coords).map_err(|e| CliError::Input(format!("class '{text}': {e}")))
}

fn parse_pair(text: &str) -> CliResult<(u32, u32)> {
    let parts: Vec<&str> = text.split(',').map(str::trim).collect();
    let [a, b] = parts[..] else {
        return Err(CliError::Input(format!(
            "expected two genera, got '{text}'"
        )));
    };
    let parse = |s: &str| {
        s.parse::<u32>()
            .map_err(|e| CliError::Input(format!("split '{text}': {e}")))
    };
    Ok((parse(a)?, parse(b)?))
}

fn invariants_json(g: &core::AbelianGroupInvariants) -> Value {
    json!({ "free_rank": g.free_rank, "torsion": g.torsion, "group": g.to_string() })
}

fn snf(input: &MatrixInput) -> CliResult<Value> {
    let a = match (&input.matrix, &input.matrix_file) {
        (Some(text), _) => parse_matrix(text, "--matrix")?,
        (None, Some(path)) => parse_matrix(&read_text(path)?, &path.display().to_string())?,
        (None, None) => return Err(CliError::Input("no matrix given".into())),
    };
    let s = core::smith_normal_form(&a)?;
    let cokernel = if a.is_square() {
        invariants_json(&core::cokernel_invariants(&a)?)
    } else {
        Value::Null
    };
    Ok(json!({
        "schema": SCHEMA,
        "source": a,
        "u": s.u,
        "d": s.d,
        "v": s.v,
        "diagonal": s.diagonal(),
        "rank": s.rank(),
        "cokernel": cokernel,
    }))
}

fn link(cmd: &LinkCommand) -> CliResult<Value> {
    match cmd {
        LinkCommand::Check(f) => {
            let l: FramedLink = read_json(&f.link_file)?;
            Ok(json!({
                "schema": SCHEMA,
                "n": l.components(),
                "gpr_admissible": core::is_gpr_admissible(&l),
            }))
        }
        LinkCommand::Homology(f) => {
            let l: FramedLink = read_json(&f.link_file)?;
            let h = core::surgery_homology(&l)?;
            let mut v = invariants_json(&h);
            v["schema"] = json!(SCHEMA);
            v["n"] = json!(l.components());
            Ok(v)
        }
        LinkCommand::Slide(args) => {
            let l: FramedLink = read_json(&args.link_file)?;
            let seq = match (&args.seq_file, args.slider, args.over) {
                (Some(path), _, _) => read_json::<SlideSequence>(path)?,
                (None, Some(slider), Some(over)) => {
                    let sign = BandSign::try_from(args.sign)
                        .map_err(|e| CliError::Input(e.to_string()))?;
                    SlideSequence::new(vec![SlideMove::new(slider, over, sign)])
                }
                _ => {
                    return Err(CliError::Input(
                        "need --slider and --over, or --seq-file".into(),
                    ))
                }
            };
            let after = core::apply_sequence(&l, &seq)?;
            Ok(json!({
                "schema": SCHEMA,
                "before": l,
                "moves": seq.moves,
                "after": after,
            }))
        }
    }
}

fn load_monodromy(source: &MonodromySource) -> CliResult<(String, FiberedMonodromy)> {
    match (&source.monodromy, &source.monodromy_file) {
        (Some(name), _) => named_monodromy(name).map(|h| (name.clone(), h)),
        (None, Some(path)) => Ok((path.display().to_string(), read_json(path)?)),
        (None, None) => Err(CliError::Input(
            "need --monodromy or --monodromy-file".into(),
        )),
    }
}

fn named_monodromy(name: &str) -> CliResult<FiberedMonodromy> {
    core::builtin(name).ok_or_else(|| {
        CliError::Input(format!(
            "unknown monodromy '{name}' (expected figure8 or trefoil)"
        ))
    })
}

fn binary_form_text(q: &QuadraticForm) -> Option<String> {
    let (a, b, c) = q.binary_coefficients()?;
    let terms = [(a, "m^2"), (b, "mn"), (c, "n^2")];
    let mut out = String::new();
    for (coef, mono) in terms.iter().filter(|(c, _)| *c != 0) {
        let sign = if *coef < 0 { "-" } else { "+" };
        let mag = coef.unsigned_abs();
        let body = if mag == 1 {
            mono.to_string()
        } else {
            format!("{mag}{mono}")
        };
        if out.is_empty() {
            out = if *coef < 0 { format!("-{body}") } else { body };
        } else {
            out.push_str(&format!(" {sign} {body}"));
        }
    }
    Some(if out.is_empty() { "0".into() } else { out })
}

fn monodromy(cmd: &MonodromyCommand) -> CliResult<Value> {
    match cmd {
        MonodromyCommand::Show { source, act } => {
            let (name, h) = load_monodromy(source)?;
            let q = core::screening_form(&h);
            let mut v = json!({
                "schema": SCHEMA,
                "name": name,
                "genus": h.genus(),
                "matrix": h.matrix(),
                "symplectic": core::is_symplectic(h.matrix())?,
                "determinant": h.matrix().determinant().ok(),
                "screening_form": q.matrix(),
                "form": binary_form_text(&q),
            });
            if let Some(text) = act {
                let x = parse_class(text)?;
                let image = core::act(&h, &x)?;
                v["act"] = json!({ "class": x, "image": image });
            }
            Ok(v)
        }
        MonodromyCommand::Sum {
            names,
            files,
            classes,
            classes_file,
            constraint,
        } => {
            let mut labels = Vec::new();
            let mut parts = Vec::new();
            for name in names {
                parts.push(named_monodromy(name)?);
                labels.push(name.clone());
            }
            for path in files {
                parts.push(read_json(path)?);
                labels.push(path.display().to_string());
            }
            let (sum, decomposition) = core::connected_sum(&parts)?;
            let blocks: Vec<Value> = labels
                .iter()
                .zip(&decomposition.blocks)
                .zip(decomposition.offsets())
                .map(|((label, b), offset)| json!({ "name": label, "genus": b.genus(), "offset": offset }))
                .collect();
            let mut v = json!({
                "schema": SCHEMA,
                "genus": sum.genus(),
                "matrix": sum.matrix(),
                "blocks": blocks,
            });
            let per_block: Option<Vec<Vec<HomologyClass>>> = match (classes, classes_file) {
                (Some(text), _) => Some(parse_json(text, "--classes")?),
                (None, Some(path)) => Some(read_json(path)?),
                (None, None) => None,
            };
            if let Some(per_block) = per_block {
                let c = ScreenConstraint::new(constraint.lower, constraint.upper)?;
                let report = core::screen_connected_sum(&decomposition, &per_block, c)?;
                v["screen"] = serde_json::to_value(report).expect("report serializes");
            }
            Ok(v)
        }
    }
}

fn workers_from_env() -> CliResult<Option<usize>> {
    match std::env::var(THREADS_ENV) {
        Ok(text) => match text.trim().parse::<usize>() {
            Ok(0) | Err(_) => Err(CliError::Input(format!(
                "{THREADS_ENV} must be a positive integer, got '{text}'"
            ))),
            Ok(n) => Ok(Some(n)),
        },
        Err(_) => Ok(None),
    }
}

/// Coefficient matrix of the printed trefoil form `m² + mn + n²`.
fn printed_trefoil_form() -> QuadraticForm {
    QuadraticForm::from_matrix(IntMatrix::from_rows(vec![vec![1, 1], vec![0, 1]]).expect("2x2"))
        .expect("even dimension")
}

fn solution_json(label: &str, form: &QuadraticForm, s: &core::SolutionSet) -> Value {
    json!({
        "schema": SCHEMA,
        "monodromy": label,
        "form": binary_form_text(form),
        "constraint": s.constraint,
        "bound": s.bound,
        "count": s.len(),
        "solutions": s.classes,
        "values": s.values,
    })
}

fn screen(cmd: &ScreenCommand) -> CliResult<Value> {
    match cmd {
        ScreenCommand::Brute {
            source,
            bound,
            constraint,
            allow_imprimitive,
            allow_zero,
            paper_form,
        } => {
            let (label, h) = load_monodromy(source)?;
            let c = ScreenConstraint::new(constraint.lower, constraint.upper)?;
            let derived = core::screening_form(&h);
            let mut note = None;
            let form = if *paper_form {
                if h == core::make_trefoil() {
                    note = Some(
                        "printed trefoil form m^2 + mn + n^2; the matrix product gives \
                         m^2 - mn + n^2, which maps to it under n -> -n",
                    );
                    printed_trefoil_form()
                } else if h == core::make_figure_eight() {
                    note = Some("printed figure-eight form coincides with the matrix product");
                    derived
                } else {
                    return Err(CliError::Domain(
                        "--paper-form only applies to the built-in monodromies".into(),
                    ));
                }
            } else {
                derived
            };
            let opts = EnumerationOptions {
                allow_zero: *allow_zero,
                allow_imprimitive: *allow_imprimitive,
                workers: workers_from_env()?,
            };
            let s = core::brute_force_solutions(&form, *bound, c, &opts)?;
            let mut v = solution_json(&label, &form, &s);
            if let Some(note) = note {
                v["note"] = json!(note);
            }
            Ok(v)
        }
        ScreenCommand::Fib { bound } => {
            let s = core::fibonacci_solutions(*bound)?;
            let form = core::screening_form(&core::make_figure_eight());
            let mut v = solution_json("figure8", &form, &s);
            v["parametrization"] = json!("fibonacci");
            Ok(v)
        }
        ScreenCommand::Descend { source, class } => {
            let (label, h) = load_monodromy(source)?;
            let x = parse_class(class)?;
            let terminal = core::descent_reduce(&h, &x)?;
            let q = core::screening_form(&h);
            Ok(json!({
                "schema": SCHEMA,
                "monodromy": label,
                "class": x,
                "value": q.value(&x)?,
                "terminal": terminal,
                "terminal_value": q.value(&terminal)?,
            }))
        }
        ScreenCommand::Family {
            classes,
            classes_file,
        } => {
            let classes: Vec<HomologyClass> = match (classes, classes_file) {
                (Some(text), _) => parse_json(text, "--classes")?,
                (None, Some(path)) => read_json(path)?,
                (None, None) => return Err(CliError::Input("no classes given".into())),
            };
            let t = core::family_pairing_table(&classes)?;
            let primitive: Vec<bool> = classes.iter().map(core::is_primitive).collect();
            Ok(json!({
                "schema": SCHEMA,
                "classes": classes,
                "table": t.table,
                "admissible": t.admissible,
                "primitive": primitive,
                "note": "admissible is a necessary condition for disjoint arc representatives, not a sufficient one",
            }))
        }
    }
}

fn curve_from(args: &CurveArgs) -> CliResult<CurveOnFiber> {
    Ok(match (&args.split, args.separating) {
        (Some(text), true) => {
            let (g1, g2) = parse_pair(text)?;
            CurveOnFiber::separating(g1, g2)
        }
        _ => CurveOnFiber::non_separating(),
    })
}

fn fiber(cmd: &FiberCommand) -> CliResult<Value> {
    match cmd {
        FiberCommand::Compress(args) => {
            let f = FiberSurface::connected(args.genus);
            let c = curve_from(args)?;
            let out = core::compress(&f, &c)?;
            let drops: Vec<bool> = out
                .genera
                .iter()
                .map(|&g| core::genus_drop_check(args.genus, g))
                .collect();
            Ok(json!({
                "schema": SCHEMA,
                "input": f,
                "curve": c,
                "output": out,
                "euler_characteristic": {
                    "before": f.euler_characteristic(),
                    "after": out.euler_characteristic(),
                },
                "genus_drop": drops,
            }))
        }
        FiberCommand::Classify {
            curve,
            orientation,
            not_fixed,
            target,
        } => {
            let mut c = curve_from(curve)?;
            if !*not_fixed {
                c = c.fixed(orientation.map(|o| o == Orientation::Preserving));
            }
            let target = target.map(|Target::DoubleS1xS2| SurgeryTarget::DoubleS1xS2);
            let case = core::isotopic_case_classify(curve.genus, &c, target)?;
            let mut v = serde_json::to_value(&case).expect("case serializes");
            v["schema"] = json!(SCHEMA);
            v["genus"] = json!(curve.genus);
            Ok(v)
        }
    }
}
