//! Command-line front end: `generate`, `certify`, `sweep` and `render`.
//!
//! Exit codes: 0 success, 1 usage or I/O error, 2 degenerate parameters,
//! 3 verification failure.

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::value::RawValue;

use crate::config::{grid3_configuration, levi_graph};
use crate::embedding::{
    assemble_with_threshold, extract_graph, point_circle_realization, sweep, validate,
    ConstructionParams, SweepSpec, DEFAULT_SEP_THRESHOLD, DEFAULT_TOL, STAR_PERIOD,
};
use crate::graph::Role;
use crate::io::{embedding_from_json, format_f64, graph_to_json, sweep_to_csv, write_atomic};
use crate::lcf::gray_graph;
use crate::render::{to_svg, RenderStyle};
use crate::symmetry::{find_isomorphism, is_automorphism, is_semiregular, IsomorphismCertificate};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_DEGENERATE: i32 = 2;
pub const EXIT_VERIFICATION: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "gray-ud",
    version,
    about = "Unit-distance drawings of the Gray graph"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Emit the Gray graph as JSON from one of three constructions.
    Generate(GenerateArgs),
    /// Build, validate and certify the drawing at one parameter point.
    Certify(CertifyArgs),
    /// Classify a grid of parameter points and write a CSV map.
    Sweep(SweepArgs),
    /// Draw an embedding as SVG.
    Render(RenderArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Source {
    Lcf,
    Levi,
    Construction,
}

#[derive(Debug, Args)]
pub struct ParamArgs {
    /// Hexagon circumradius, in edge lengths (0 < h < 1).
    #[arg(long, default_value_t = 0.6, allow_negative_numbers = true)]
    pub h: f64,
    /// Vector star rotation (radians unless --degrees).
    #[arg(long, allow_negative_numbers = true)]
    pub theta: Option<f64>,
    /// Read every angle flag in degrees.
    #[arg(long)]
    pub degrees: bool,
}

impl ParamArgs {
    fn params(&self) -> ConstructionParams {
        let theta = match self.theta {
            Some(t) if self.degrees => t.to_radians(),
            Some(t) => t,
            None => ConstructionParams::reference().theta,
        };
        ConstructionParams { h: self.h, theta }
    }
}

#[derive(Debug, Args)]
pub struct ToleranceArgs {
    /// Allowed deviation of an edge length from 1.
    #[arg(long, default_value_t = DEFAULT_TOL)]
    pub tol: f64,
    /// Vertices closer than this count as coincident.
    #[arg(long = "sep-threshold", default_value_t = DEFAULT_SEP_THRESHOLD)]
    pub sep_threshold: f64,
}

impl ToleranceArgs {
    fn check(&self) -> Result<(), String> {
        if !(self.tol > 0.0 && self.tol.is_finite()) {
            return Err(format!("--tol must be positive, got {}", self.tol));
        }
        if !(self.sep_threshold > 0.0 && self.sep_threshold.is_finite()) {
            return Err(format!(
                "--sep-threshold must be positive, got {}",
                self.sep_threshold
            ));
        }
        Ok(())
    }
}

#[derive(Debug, Args)]
pub struct GenerateArgs {
    #[arg(long, value_enum)]
    pub source: Source,
    #[command(flatten)]
    pub params: ParamArgs,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct CertifyArgs {
    #[command(flatten)]
    pub params: ParamArgs,
    #[command(flatten)]
    pub tolerances: ToleranceArgs,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    /// Grid resolution in h and theta.
    #[arg(long, num_args = 2, value_names = ["H", "T"], default_values_t = [32, 32])]
    pub steps: Vec<usize>,
    /// Inclusive h range.
    #[arg(long = "h-range", num_args = 2, value_names = ["LO", "HI"], default_values_t = [0.1, 0.95], allow_negative_numbers = true)]
    pub h_range: Vec<f64>,
    /// Half-open theta range (radians unless --degrees); defaults to one
    /// period of the vector star.
    #[arg(long = "theta-range", num_args = 2, value_names = ["LO", "HI"], allow_negative_numbers = true)]
    pub theta_range: Option<Vec<f64>>,
    #[arg(long)]
    pub degrees: bool,
    #[command(flatten)]
    pub tolerances: ToleranceArgs,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct RenderArgs {
    #[command(flatten)]
    pub params: ParamArgs,
    /// Render an embedding JSON file instead of constructing one.
    #[arg(long, conflicts_with_all = ["h", "theta"])]
    pub input: Option<PathBuf>,
    /// Overlay the unit circles about the hollow vertices.
    #[arg(long)]
    pub circles: bool,
    #[arg(long, default_value_t = 800.0)]
    pub size: f64,
    #[arg(long = "vertex-radius", default_value_t = 5.0)]
    pub vertex_radius: f64,
    #[arg(long = "stroke-width", default_value_t = 1.5)]
    pub stroke_width: f64,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

enum Failure {
    Usage(String),
    Degenerate(String),
    Verification(String),
}

impl Failure {
    fn code(&self) -> i32 {
        match self {
            Failure::Usage(_) => EXIT_USAGE,
            Failure::Degenerate(_) => EXIT_DEGENERATE,
            Failure::Verification(_) => EXIT_VERIFICATION,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Usage(m) | Failure::Degenerate(m) | Failure::Verification(m) => m,
        }
    }
}

/// Parses `args` (program name first) and runs the command. Returns the
/// process exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = stdout.write_all(text.as_bytes());
                    EXIT_OK
                }
                _ => {
                    let _ = stderr.write_all(text.as_bytes());
                    EXIT_USAGE
                }
            };
        }
    };
    let result = match &cli.command {
        Command::Generate(a) => generate(a, stdout),
        Command::Certify(a) => certify(a, stdout),
        Command::Sweep(a) => run_sweep(a, stdout),
        Command::Render(a) => render(a, stdout),
    };
    match result {
        Ok(()) => EXIT_OK,
        Err(f) => {
            let _ = writeln!(stderr, "error: {}", f.message());
            f.code()
        }
    }
}

fn emit(out: &Option<PathBuf>, text: &str, stdout: &mut dyn Write) -> Result<(), Failure> {
    match out {
        Some(path) => write_atomic(path, text.as_bytes())
            .map_err(|e| Failure::Usage(format!("cannot write {}: {e}", path.display()))),
        None => stdout
            .write_all(text.as_bytes())
            .map_err(|e| Failure::Usage(format!("cannot write output: {e}"))),
    }
}

fn degenerate(e: crate::embedding::ConstructionError) -> Failure {
    Failure::Degenerate(format!("degenerate parameters: {} ({e})", e.reason()))
}

fn generate(a: &GenerateArgs, stdout: &mut dyn Write) -> Result<(), Failure> {
    let g = match a.source {
        Source::Lcf => gray_graph(),
        Source::Levi => levi_graph(&grid3_configuration(3)),
        Source::Construction => {
            let e = assemble_with_threshold(a.params.params(), DEFAULT_SEP_THRESHOLD)
                .map_err(degenerate)?;
            extract_graph(&e)
        }
    };
    emit(&a.out, &(graph_to_json(&g) + "\n"), stdout)
}

/// Certificate document written by `certify`.
#[derive(Serialize)]
pub struct Certificate {
    params: NumPair,
    tol: Box<RawValue>,
    sep_threshold: Box<RawValue>,
    vertices: usize,
    edges: usize,
    solid: usize,
    hollow: usize,
    max_edge_length_error: Box<RawValue>,
    min_vertex_separation: Box<RawValue>,
    coincident_pairs: Vec<[usize; 2]>,
    accidental_unit_pairs: Vec<[usize; 2]>,
    symmetry_order: usize,
    induced_symmetry_permutation: Option<crate::symmetry::Permutation>,
    isomorphism: Option<IsomorphismCertificate>,
    point_circle: PointCircleSummary,
    verdicts: Verdicts,
    passed: bool,
}

#[derive(Serialize)]
struct NumPair {
    h: Box<RawValue>,
    theta: Box<RawValue>,
}

#[derive(Serialize)]
struct PointCircleSummary {
    circles: usize,
    required_incidences: usize,
    missing_required: usize,
    accidental_incidences: usize,
    max_required_error: Box<RawValue>,
    gray_configuration: bool,
}

#[derive(Serialize)]
struct Verdicts {
    unit_distance: bool,
    separated: bool,
    polycirculant_z3: bool,
    isomorphic_to_gray: bool,
    point_circle_realization: bool,
}

fn raw(x: f64) -> Box<RawValue> {
    RawValue::from_string(format_f64(x)).expect("formatted number is valid JSON")
}

fn pairs(v: &[(usize, usize)]) -> Vec<[usize; 2]> {
    v.iter().map(|&(a, b)| [a, b]).collect()
}

/// Runs the full certification pipeline at one parameter point.
pub fn build_certificate(
    params: ConstructionParams,
    tol: f64,
    sep_threshold: f64,
) -> Result<Certificate, crate::embedding::ConstructionError> {
    let e = assemble_with_threshold(params, sep_threshold)?;
    let g = e.graph();
    let report = validate(&e, tol, sep_threshold);
    let symmetric = report.symmetry_order.is_multiple_of(3)
        && report
            .induced_symmetry_permutation
            .as_ref()
            .is_some_and(|p| {
                let cube = p.pow(report.symmetry_order / 3);
                is_automorphism(g, &cube) && is_semiregular(&cube, 3)
            });
    let iso = find_isomorphism(g, &gray_graph());
    let pc = point_circle_realization(&e, tol).expect("assembled drawings are balanced");
    let pc_ok = pc.missing_required.is_empty() && pc.is_gray_configuration();
    let verdicts = Verdicts {
        unit_distance: report.is_unit_distance(tol),
        separated: report.coincident_pairs.is_empty(),
        polycirculant_z3: symmetric,
        isomorphic_to_gray: iso.as_ref().is_some_and(|c| c.verified),
        point_circle_realization: pc_ok,
    };
    let passed = verdicts.unit_distance
        && verdicts.separated
        && verdicts.polycirculant_z3
        && verdicts.isomorphic_to_gray
        && verdicts.point_circle_realization;
    Ok(Certificate {
        params: NumPair {
            h: raw(params.h),
            theta: raw(params.theta),
        },
        tol: raw(tol),
        sep_threshold: raw(sep_threshold),
        vertices: g.vertex_count(),
        edges: g.edge_count(),
        solid: g.vertices_with_role(Role::Solid).len(),
        hollow: g.vertices_with_role(Role::Hollow).len(),
        max_edge_length_error: raw(report.max_edge_length_error),
        min_vertex_separation: raw(report.min_vertex_separation),
        coincident_pairs: pairs(&report.coincident_pairs),
        accidental_unit_pairs: pairs(&report.accidental_unit_pairs),
        symmetry_order: report.symmetry_order,
        induced_symmetry_permutation: report.induced_symmetry_permutation,
        isomorphism: iso,
        point_circle: PointCircleSummary {
            circles: pc.circle_centers.len(),
            required_incidences: pc.required.len(),
            missing_required: pc.missing_required.len(),
            accidental_incidences: pc.accidental.len(),
            max_required_error: raw(pc.max_required_error),
            gray_configuration: pc.is_gray_configuration(),
        },
        verdicts,
        passed,
    })
}

impl Certificate {
    pub fn passed(&self) -> bool {
        self.passed
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificates serialize") + "\n"
    }
}

fn certify(a: &CertifyArgs, stdout: &mut dyn Write) -> Result<(), Failure> {
    a.tolerances.check().map_err(Failure::Usage)?;
    let cert = build_certificate(
        a.params.params(),
        a.tolerances.tol,
        a.tolerances.sep_threshold,
    )
    .map_err(degenerate)?;
    emit(&a.out, &cert.to_json(), stdout)?;
    if cert.passed() {
        Ok(())
    } else {
        Err(Failure::Verification(
            "certification failed; see verdicts".into(),
        ))
    }
}

fn run_sweep(a: &SweepArgs, stdout: &mut dyn Write) -> Result<(), Failure> {
    a.tolerances.check().map_err(Failure::Usage)?;
    let to_rad = |x: f64| if a.degrees { x.to_radians() } else { x };
    let theta_range = match &a.theta_range {
        Some(r) => (to_rad(r[0]), to_rad(r[1])),
        None => (0.0, STAR_PERIOD),
    };
    let spec = SweepSpec {
        h_range: (a.h_range[0], a.h_range[1]),
        theta_range,
        steps_h: a.steps[0],
        steps_theta: a.steps[1],
        tol: a.tolerances.tol,
        sep_threshold: a.tolerances.sep_threshold,
    };
    if ![spec.h_range.0, spec.h_range.1, theta_range.0, theta_range.1]
        .iter()
        .all(|x| x.is_finite())
    {
        return Err(Failure::Usage("ranges must be finite".into()));
    }
    emit(&a.out, &sweep_to_csv(&sweep(&spec)), stdout)
}

fn render(a: &RenderArgs, stdout: &mut dyn Write) -> Result<(), Failure> {
    if !(a.size > 0.0 && a.vertex_radius >= 0.0 && a.stroke_width >= 0.0) {
        return Err(Failure::Usage(
            "--size must be positive and radii/widths non-negative".into(),
        ));
    }
    let e = match &a.input {
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
            embedding_from_json(&text)
                .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?
        }
        None => {
            assemble_with_threshold(a.params.params(), DEFAULT_SEP_THRESHOLD).map_err(degenerate)?
        }
    };
    let style = RenderStyle {
        size: a.size,
        vertex_radius: a.vertex_radius,
        stroke_width: a.stroke_width,
        circles: a.circles,
        ..RenderStyle::default()
    };
    emit(&a.out, &to_svg(&e, &style), stdout)
}
