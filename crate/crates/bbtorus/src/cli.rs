//! Command-line front end.
//!
//! Every subcommand reads one complex, either from a file in the plain
//! text format (`--file`) or from a generator expression (`--gen`), picks
//! a coefficient ring (`--ring z|q|f<p>|z-inv:p,q`), and renders a report
//! as text or JSON (`--format`). Reports are deterministic byte for byte.
//!
//! Exit status: 0 on success, 1 on input problems (unreadable files,
//! malformed complexes, unknown rings or generators), 2 when a
//! mathematical hypothesis is violated; in that case a machine-readable
//! JSON object naming the hypothesis and a remedy goes to standard error.

use std::fmt;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use num::BigInt;
use serde_json::{json, Value};

use crate::cd::{cd_bb_group, CdError};
use crate::complex::{
    barycentric_subdivision, generate, ComplexError, Generator, SimplicialComplex,
};
use crate::cover::{
    bb_homology, cover_cohomology_report, euler_characteristic_cover, field_module_decomposition,
    laurent_snf_oracle, CoverError,
};
use crate::face_ring::ModuleSummary;
use crate::homology::{cohomology_summary, reduced_homology, HomologySummary};
use crate::ring::{RingError, RingSpec};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CommandKind {
    Info,
    Flag,
    Homology,
    Torus,
    CoverHomology,
    CoverCohomology,
    Euler,
    Cd,
    Subdivide,
    Generate,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum InputSource {
    File(PathBuf),
    Generator(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
}

#[derive(Debug, Clone)]
pub struct RunConfig {
    pub command: CommandKind,
    pub ring: RingSpec,
    pub input: InputSource,
    pub format: OutputFormat,
}

/// Errors surfaced by a run, split by exit status.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CliError {
    /// Unusable input: exit status 1.
    Input(String),
    /// A violated mathematical hypothesis: exit status 2.
    Precondition { hypothesis: String, remedy: String },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => 1,
            CliError::Precondition { .. } => 2,
        }
    }

    /// Machine-readable form, printed to standard error.
    pub fn to_json(&self) -> Value {
        match self {
            CliError::Input(message) => json!({
                "error": { "kind": "input", "message": message }
            }),
            CliError::Precondition { hypothesis, remedy } => json!({
                "error": {
                    "kind": "precondition",
                    "hypothesis": hypothesis,
                    "remedy": remedy,
                }
            }),
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Input(message) => write!(f, "{message}"),
            CliError::Precondition { hypothesis, remedy } => {
                write!(f, "hypothesis violated: {hypothesis} (remedy: {remedy})")
            }
        }
    }
}

impl From<ComplexError> for CliError {
    fn from(e: ComplexError) -> Self {
        CliError::Input(e.to_string())
    }
}

impl From<RingError> for CliError {
    fn from(e: RingError) -> Self {
        CliError::Input(e.to_string())
    }
}

impl From<CdError> for CliError {
    fn from(e: CdError) -> Self {
        let remedy = match e {
            CdError::NotFlag => {
                "apply flag_completion, or subdivide: barycentric(...) is always flag"
            }
            CdError::TooFewVertices(_) => "use a complex with at least two vertices",
            CdError::EmptyComplex => "use a nonempty complex",
        };
        CliError::Precondition {
            hypothesis: e.to_string(),
            remedy: remedy.to_string(),
        }
    }
}

impl From<CoverError> for CliError {
    fn from(e: CoverError) -> Self {
        match e {
            CoverError::NotRationallyAcyclic => CliError::Precondition {
                hypothesis: "the complex is rationally acyclic".to_string(),
                remedy: "the Euler characteristic of the cover is undefined otherwise".to_string(),
            },
            other => CliError::Input(other.to_string()),
        }
    }
}

fn load_complex(input: &InputSource) -> Result<SimplicialComplex, CliError> {
    match input {
        InputSource::File(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))?;
            Ok(SimplicialComplex::parse(&text)?)
        }
        InputSource::Generator(spec) => Ok(generate(&Generator::parse(spec)?)?),
    }
}

fn module_string(summary: &ModuleSummary, ring: &RingSpec) -> String {
    let symbol = match ring {
        RingSpec::Integers => "Z".to_string(),
        RingSpec::Rationals => "Q".to_string(),
        RingSpec::PrimeField(p) => format!("F_{p}"),
        RingSpec::IntegersInverted(_) => "R".to_string(),
    };
    let mut parts = Vec::new();
    match summary.free_rank {
        0 => {}
        1 => parts.push(symbol.clone()),
        r => parts.push(format!("{symbol}^{r}")),
    }
    for d in &summary.torsion {
        parts.push(format!("{symbol}/{d}"));
    }
    if parts.is_empty() {
        "0".to_string()
    } else {
        parts.join(" + ")
    }
}

fn torsion_strings(torsion: &[BigInt]) -> Vec<String> {
    torsion.iter().map(|t| t.to_string()).collect()
}

fn complex_json(complex: &SimplicialComplex) -> Value {
    json!({
        "vertices": complex.vertex_count(),
        "dim": complex.dimension(),
        "f_vector": complex.f_vector().counts(),
        "flags": { "is_flag": complex.is_flag() },
    })
}

fn header_text(complex: &SimplicialComplex, ring: &RingSpec) -> String {
    format!(
        "complex: {} vertices, dimension {}, f = {}\nring: {}\n",
        complex.vertex_count(),
        complex.dimension(),
        complex.f_vector(),
        ring
    )
}

fn homology_json(summary: &HomologySummary, ring: &RingSpec) -> Value {
    Value::Array(
        summary
            .degrees
            .iter()
            .map(|d| {
                json!({
                    "degree": d.degree,
                    "free_rank": d.free_rank,
                    "torsion": torsion_strings(&d.torsion),
                    "group": d.group_string(ring),
                })
            })
            .collect(),
    )
}

fn homology_text(summary: &HomologySummary, ring: &RingSpec, dual: bool) -> String {
    let mut out = String::new();
    for d in &summary.degrees {
        let name = if dual { "H~^" } else { "H~_" };
        out.push_str(&format!(
            "  {}({}) = {}\n",
            name,
            d.degree,
            d.group_string(ring)
        ));
    }
    out
}

/// Runs one command and renders its report; the caller decides where the
/// string goes.
pub fn run(config: &RunConfig) -> Result<String, CliError> {
    let complex = load_complex(&config.input)?;
    let ring = &config.ring;
    let mut warnings: Vec<String> = Vec::new();

    let (results_json, text_body): (Value, String) = match config.command {
        CommandKind::Info => {
            let f = complex.f_vector();
            let facets = complex.facets().len();
            let json = json!({
                "facet_count": facets,
                "is_flag": complex.is_flag(),
                "reduced_euler": f.reduced_euler(),
            });
            let text = format!(
                "flag: {}\nfacets: {}\nreduced euler sum: {}\n",
                complex.is_flag(),
                facets,
                f.reduced_euler()
            );
            (json, text)
        }
        CommandKind::Flag => {
            let is_flag = complex.is_flag();
            let completion = complex.flag_completion();
            let json = json!({
                "is_flag": is_flag,
                "completion_dim": completion.dimension(),
                "completion_f_vector": completion.f_vector().counts(),
            });
            let text = format!(
                "flag: {}\ncompletion: dimension {}, f = {}\n",
                is_flag,
                completion.dimension(),
                completion.f_vector()
            );
            (json, text)
        }
        CommandKind::Homology => {
            let homology = reduced_homology(&complex, ring);
            let cohomology = cohomology_summary(&complex, ring);
            let acyclic = homology.is_zero_everywhere();
            let json = json!({
                "acyclic": acyclic,
                "homology": homology_json(&homology, ring),
                "cohomology": homology_json(&cohomology, ring),
            });
            let text = format!(
                "acyclic: {}\nreduced homology:\n{}reduced cohomology:\n{}",
                acyclic,
                homology_text(&homology, ring, false),
                homology_text(&cohomology, ring, true)
            );
            (json, text)
        }
        CommandKind::Torus => {
            let summary = crate::face_ring::torus_homology(&complex, ring);
            let ranks = summary.free_ranks();
            let json = json!({ "ranks": ranks });
            let text = format!(
                "torus homology is free with one generator per simplex; ranks by degree: ({})\n",
                ranks
                    .iter()
                    .map(|r| r.to_string())
                    .collect::<Vec<_>>()
                    .join(", ")
            );
            (json, text)
        }
        CommandKind::CoverHomology => {
            let degrees = bb_homology(&complex, ring);
            let mut rows = Vec::new();
            let mut text =
                String::from("cover homology by degree (simplicial degree one lower):\n");
            for d in &degrees {
                rows.push(json!({
                    "degree": d.degree,
                    "simplicial_degree": d.degree as i64 - 1,
                    "trivial_sub_rank": d.trivial_sub_rank,
                    "group_ring_rank": d.group_ring_rank,
                    "trivial_quot_rank": d.trivial_quot_rank,
                    "htilde_free_rank": d.htilde.free_rank,
                    "htilde_torsion": torsion_strings(&d.htilde.torsion),
                    "finitely_generated": d.finitely_generated,
                }));
                text.push_str(&format!(
                    "  H_{} (simplicial {}): fixed submodule rank {}, group-ring rank {}, \
                     trivial quotient rank {}, H~ = {}, finitely generated: {}\n",
                    d.degree,
                    d.degree as i64 - 1,
                    d.trivial_sub_rank,
                    d.group_ring_rank,
                    d.trivial_quot_rank,
                    d.htilde.group_string(ring),
                    d.finitely_generated
                ));
            }
            let (decomposition, oracle_verified) = if ring.is_field() {
                let direct = field_module_decomposition(&complex, ring).expect("ring is a field");
                let oracle = laurent_snf_oracle(&complex, ring).expect("ring is a field");
                let verified = direct == oracle;
                if !verified {
                    warnings.push(
                        "polynomial-matrix oracle disagrees with the rank computation".to_string(),
                    );
                }
                text.push_str(&format!(
                    "field decomposition per degree (a free summands over F[z,1/z], b trivial \
                     summands), oracle verified: {verified}\n"
                ));
                for (n, (a, b)) in direct.degrees.iter().enumerate() {
                    text.push_str(&format!("  H_{n}: a = {a}, b = {b}\n"));
                }
                (
                    Some(Value::Array(
                        direct.degrees.iter().map(|(a, b)| json!([a, b])).collect(),
                    )),
                    Some(verified),
                )
            } else {
                (None, None)
            };
            let json = json!({
                "degrees": rows,
                "field_decomposition": decomposition,
                "oracle_verified": oracle_verified,
            });
            (json, text)
        }
        CommandKind::CoverCohomology => {
            let report = cover_cohomology_report(&complex, ring);
            let mut rows = Vec::new();
            let mut text = format!(
                "ring isomorphism with the face ring modulo beta: {}\n",
                report.ring_isomorphism
            );
            for d in &report.degrees {
                let factor = ModuleSummary {
                    free_rank: d.cokernel_factor.free_rank,
                    torsion: d.cokernel_factor.torsion.clone(),
                };
                rows.push(json!({
                    "degree": d.degree,
                    "fixed_free_rank": d.fixed_subring.free_rank,
                    "fixed_torsion": torsion_strings(&d.fixed_subring.torsion),
                    "cokernel_vanishes": d.cokernel_vanishes,
                    "cokernel_factor_free_rank": factor.free_rank,
                    "cokernel_factor_torsion": torsion_strings(&factor.torsion),
                }));
                let cokernel = if d.cokernel_vanishes {
                    "cokernel 0".to_string()
                } else {
                    format!(
                        "cokernel: Z-indexed product of copies of {}",
                        module_string(&factor, ring)
                    )
                };
                text.push_str(&format!(
                    "  H^{}: fixed subring {}, {}\n",
                    d.degree,
                    module_string(&d.fixed_subring, ring),
                    cokernel
                ));
            }
            let json = json!({
                "ring_isomorphism": report.ring_isomorphism,
                "degrees": rows,
            });
            (json, text)
        }
        CommandKind::Euler => {
            let value = euler_characteristic_cover(&complex)?;
            let json = json!({ "euler_characteristic": value });
            let text = format!("euler characteristic of the cover: {value}\n");
            (json, text)
        }
        CommandKind::Cd => {
            let report = cd_bb_group(&complex, ring)?;
            let json = json!({
                "dim": report.dim,
                "vertex_count": report.vertex_count,
                "is_flag": report.is_flag,
                "is_acyclic": report.is_acyclic,
                "tcd_complex": report.tcd_complex,
                "tcd_cover": report.tcd_cover,
                "cd_lower": report.cd_cover_lower,
                "cd_upper": report.cd_cover_upper,
                "cd": report.cd_exact,
            });
            let text = format!(
                "flag: {}\nacyclic: {}\ntcd(complex) = {}\ntcd(cover) = {}\ncd bounds: [{}, {}]\ncd of the group = {}\n",
                report.is_flag,
                report.is_acyclic,
                report.tcd_complex,
                report.tcd_cover,
                report.cd_cover_lower,
                report.cd_cover_upper,
                report.cd_exact
            );
            (json, text)
        }
        CommandKind::Subdivide => {
            let subdivision = barycentric_subdivision(&complex);
            let canonical = subdivision.to_canonical_string();
            let json = json!({
                "f_vector": subdivision.f_vector().counts(),
                "canonical": canonical,
            });
            (json, canonical)
        }
        CommandKind::Generate => {
            let canonical = complex.to_canonical_string();
            let json = json!({
                "f_vector": complex.f_vector().counts(),
                "canonical": canonical,
            });
            (json, canonical)
        }
    };

    match config.format {
        OutputFormat::Json => {
            let document = json!({
                "complex": complex_json(&complex),
                "ring": ring.to_string(),
                "results": results_json,
                "warnings": warnings,
            });
            Ok(serde_json::to_string_pretty(&document).expect("serializable report") + "\n")
        }
        OutputFormat::Text => {
            // subdivide and generate emit the bare document so output can
            // be fed back in as a complex
            let body = match config.command {
                CommandKind::Subdivide | CommandKind::Generate => text_body,
                _ => format!("{}{}", header_text(&complex, ring), text_body),
            };
            let warning_lines: String =
                warnings.iter().map(|w| format!("warning: {w}\n")).collect();
            Ok(body + &warning_lines)
        }
    }
}

#[derive(Debug, Args)]
struct CommonArgs {
    /// Complex file: one simplex per line, whitespace-separated labels,
    /// `#` comments
    #[arg(long)]
    file: Option<PathBuf>,
    /// Generator expression, e.g. rp2_six, simplex(2), cycle(5),
    /// barycentric(rp2_six)
    #[arg(long = "gen")]
    generator: Option<String>,
    /// Coefficient ring: z, q, f<p>, z-inv:p1,p2,...
    #[arg(long, default_value = "z")]
    ring: String,
    /// Output format
    #[arg(long, value_enum, default_value = "text")]
    format: OutputFormat,
}

impl CommonArgs {
    fn into_config(self, command: CommandKind) -> Result<RunConfig, CliError> {
        let input = match (self.file, self.generator) {
            (Some(path), None) => InputSource::File(path),
            (None, Some(spec)) => InputSource::Generator(spec),
            (Some(_), Some(_)) => {
                return Err(CliError::Input(
                    "pass exactly one of --file and --gen".to_string(),
                ))
            }
            (None, None) => {
                return Err(CliError::Input(
                    "an input is required: --file <PATH> or --gen <SPEC>".to_string(),
                ))
            }
        };
        Ok(RunConfig {
            command,
            ring: RingSpec::parse(&self.ring)?,
            input,
            format: self.format,
        })
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "bbtorus",
    about = "Invariants of torus subcomplexes, their cyclic covers, and Bestvina-Brady groups",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: CliCommand,
}

#[derive(Debug, Subcommand)]
enum CliCommand {
    /// Basic facts: f-vector, dimension, flag property
    Info(CommonArgs),
    /// Flag test and flag completion
    Flag(CommonArgs),
    /// Reduced homology and cohomology of the complex
    Homology(CommonArgs),
    /// Homology of the torus subcomplex (free, one generator per simplex)
    Torus(CommonArgs),
    /// Homology of the infinite cyclic cover as a deck-group module
    CoverHomology(CommonArgs),
    /// Cohomology of the cover: fixed subring and cokernel
    CoverCohomology(CommonArgs),
    /// Euler characteristic of the cover (rationally acyclic complexes)
    Euler(CommonArgs),
    /// Cohomological dimension of the Bestvina-Brady group (flag complexes)
    Cd(CommonArgs),
    /// Barycentric subdivision, printed in the canonical format
    Subdivide(CommonArgs),
    /// Resolve the input (e.g. a generator) to the canonical format
    Generate(CommonArgs),
}

impl CliCommand {
    fn into_config(self) -> Result<RunConfig, CliError> {
        match self {
            CliCommand::Info(a) => a.into_config(CommandKind::Info),
            CliCommand::Flag(a) => a.into_config(CommandKind::Flag),
            CliCommand::Homology(a) => a.into_config(CommandKind::Homology),
            CliCommand::Torus(a) => a.into_config(CommandKind::Torus),
            CliCommand::CoverHomology(a) => a.into_config(CommandKind::CoverHomology),
            CliCommand::CoverCohomology(a) => a.into_config(CommandKind::CoverCohomology),
            CliCommand::Euler(a) => a.into_config(CommandKind::Euler),
            CliCommand::Cd(a) => a.into_config(CommandKind::Cd),
            CliCommand::Subdivide(a) => a.into_config(CommandKind::Subdivide),
            CliCommand::Generate(a) => a.into_config(CommandKind::Generate),
        }
    }
}

/// Full command-line entry point; returns the process exit status.
pub fn main_entry<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    print!("{e}");
                    0
                }
                _ => {
                    eprint!("{e}");
                    1
                }
            };
        }
    };
    let config = match cli.command.into_config() {
        Ok(config) => config,
        Err(e) => {
            eprintln!("{}", e.to_json());
            return e.exit_code();
        }
    };
    match run(&config) {
        Ok(report) => {
            print!("{report}");
            0
        }
        Err(e) => {
            eprintln!("{}", e.to_json());
            e.exit_code()
        }
    }
}
