//! Command-line front end: spec-string parsing, command execution and
//! CSV/JSON rendering.

use std::fmt::Write as _;
use std::io::Write as _;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use crate::analysis::{convergence_study, estimate_inf_sup, FunctionSpec, Norm, StudyConfig};
use crate::error::{Error, Result};
use crate::mesh::{Mesh, MeshFamily};
use crate::projection::{interpolate, Method};
use crate::verify::{run_suite, Suite, VerifyOptions};

pub const EXIT_OK: u8 = 0;
pub const EXIT_VERIFY_FAILED: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_NUMERICAL: u8 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "gradrec",
    version,
    about = "1D gradient recovery by oblique and orthogonal projection"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: CliCommand,
}

#[derive(Debug, Subcommand)]
pub enum CliCommand {
    /// Recover the gradient of a function on one mesh
    Recover(RecoverArgs),
    /// Convergence study over refinement levels
    Study(StudyArgs),
    /// Run identity verification suites
    Verify(VerifyArgs),
    /// Inf-sup constant estimates across refinement levels
    Infsup(InfsupArgs),
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    /// Output file; standard output if omitted
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct RecoverArgs {
    #[arg(long, default_value = "0,1")]
    pub domain: String,
    /// uniform:N | graded:N,DELTA | perturbed:N,RHO,SEED
    #[arg(long)]
    pub mesh: String,
    /// poly:C0,C1,... | sin:A,K | exp:S | file:PATH
    #[arg(long)]
    pub func: String,
    #[arg(long, value_enum, default_value_t = MethodArg::Oblique)]
    pub method: MethodArg,
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct StudyArgs {
    #[arg(long, default_value = "0,1")]
    pub domain: String,
    /// uniform | graded:DELTA | perturbed:RHO[,SEED]
    #[arg(long)]
    pub mesh: String,
    #[arg(long)]
    pub func: String,
    #[arg(long, default_value = "16,32,64,128")]
    pub levels: String,
    #[arg(long, value_enum, default_value_t = MethodArg::Oblique)]
    pub method: MethodArg,
    #[arg(long, value_enum, default_value_t = NormArg::L2Interior)]
    pub norm: NormArg,
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, default_value = "all")]
    pub suite: String,
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
    /// Multiplier applied to every tolerance
    #[arg(long, default_value_t = 1.0)]
    pub tol_scale: f64,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct InfsupArgs {
    #[arg(long, default_value = "0,1")]
    pub domain: String,
    #[arg(long, default_value = "uniform")]
    pub mesh: String,
    #[arg(long, default_value = "8,16,32,64,128")]
    pub levels: String,
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Oblique,
    Orthogonal,
    Both,
}

impl MethodArg {
    fn methods(self) -> Vec<Method> {
        match self {
            MethodArg::Oblique => vec![Method::Oblique],
            MethodArg::Orthogonal => vec![Method::Orthogonal],
            MethodArg::Both => vec![Method::Oblique, Method::Orthogonal],
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum NormArg {
    L2,
    L2Interior,
    MaxNodal,
    MaxNodalInterior,
}

impl From<NormArg> for Norm {
    fn from(n: NormArg) -> Self {
        match n {
            NormArg::L2 => Norm::L2,
            NormArg::L2Interior => Norm::L2Interior,
            NormArg::MaxNodal => Norm::MaxNodal,
            NormArg::MaxNodalInterior => Norm::MaxNodalInterior,
        }
    }
}

/// A parsed `--mesh` value. `n` is present for single-mesh commands and
/// absent for families swept over `--levels`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MeshSpec {
    pub family: MeshFamily,
    pub n: Option<usize>,
}

/// Fully parsed command. Every spec string is resolved here, before any
/// computation starts.
#[derive(Debug, Clone, PartialEq)]
pub enum Command {
    Recover {
        mesh: Mesh,
        func: FunctionSpec,
        methods: Vec<Method>,
    },
    Study(StudyConfig),
    Verify {
        suite: Suite,
        options: VerifyOptions,
    },
    Infsup {
        family: MeshFamily,
        domain: (f64, f64),
        levels: Vec<usize>,
    },
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub command: Command,
    pub format: Format,
    pub out: Option<PathBuf>,
}

/// Rendered artifact and the exit status it implies.
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub output: String,
    pub status: u8,
}

/// Exit status for an error.
pub fn exit_code(e: &Error) -> u8 {
    match e {
        Error::SingularSystem(_) => EXIT_NUMERICAL,
        _ => EXIT_USAGE,
    }
}

fn split_args(body: &str, offset: usize) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut pos = offset;
    for part in body.split(',') {
        out.push((pos, part.trim()));
        pos += part.len() + 1;
    }
    out
}

fn parse_f64(pos: usize, s: &str) -> Result<f64> {
    s.parse::<f64>()
        .ok()
        .filter(|v| v.is_finite())
        .ok_or_else(|| Error::parse(pos, format!("expected a finite number, found '{s}'")))
}

fn parse_usize(pos: usize, s: &str) -> Result<usize> {
    s.parse::<usize>()
        .map_err(|_| Error::parse(pos, format!("expected a non-negative integer, found '{s}'")))
}

fn parse_u64(pos: usize, s: &str) -> Result<u64> {
    s.parse::<u64>()
        .map_err(|_| Error::parse(pos, format!("expected a seed, found '{s}'")))
}

fn head(s: &str) -> (&str, Option<(usize, &str)>) {
    match s.split_once(':') {
        Some((kind, body)) => (kind, Some((kind.len() + 1, body))),
        None => (s, None),
    }
}

fn arity_error(pos: usize, kind: &str, expected: &str) -> Error {
    Error::parse(pos, format!("'{kind}' expects {expected}"))
}

/// Parses `poly:c0,c1,...`, `sin:A,k`, `exp:s` or `file:PATH`.
pub fn parse_function_spec(s: &str) -> Result<FunctionSpec> {
    if s.trim().is_empty() {
        return Err(Error::parse(0, "empty function spec"));
    }
    let (kind, body) = head(s);
    let Some((offset, body)) = body else {
        return Err(Error::parse(
            kind.len(),
            format!("missing ':' after '{kind}'"),
        ));
    };
    let nums = || -> Result<Vec<f64>> {
        split_args(body, offset)
            .into_iter()
            .map(|(p, t)| parse_f64(p, t))
            .collect()
    };
    match kind {
        "poly" => Ok(FunctionSpec::Polynomial(nums()?)),
        "sin" => match nums()?[..] {
            [amplitude, wavenumber] => Ok(FunctionSpec::Sinusoid {
                amplitude,
                wavenumber,
            }),
            _ => Err(arity_error(offset, kind, "A,k")),
        },
        "exp" => match nums()?[..] {
            [scale] => Ok(FunctionSpec::Exponential { scale }),
            _ => Err(arity_error(offset, kind, "s")),
        },
        "file" => read_samples(Path::new(body)),
        _ => Err(Error::parse(0, format!("unknown function kind '{kind}'"))),
    }
}

/// Reads a headerless two-column `x,u` CSV file.
pub fn read_samples(path: &Path) -> Result<FunctionSpec> {
    let text =
        std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    let mut rows = Vec::new();
    let mut pos = 0;
    for line in text.lines() {
        let start = pos;
        pos += line.len() + 1;
        if line.trim().is_empty() {
            continue;
        }
        let cols = split_args(line, start);
        let [(px, x), (pu, u)] = cols[..] else {
            return Err(Error::parse(start, "expected two columns 'x,u'"));
        };
        rows.push((parse_f64(px, x)?, parse_f64(pu, u)?));
    }
    FunctionSpec::sampled(rows)
}

/// Parses `uniform[:n]`, `graded:[n,]delta` or `perturbed:[n,]rho[,seed]`.
/// A missing perturbation seed falls back to `default_seed`.
pub fn parse_mesh_spec(s: &str, default_seed: u64) -> Result<MeshSpec> {
    let (kind, body) = head(s.trim());
    let args = body.map(|(o, b)| split_args(b, o)).unwrap_or_default();
    let at = |k: usize| args.get(k).map(|a| a.0).unwrap_or(s.len());
    let spec = match (kind, args.len()) {
        ("uniform", 0) => MeshSpec {
            family: MeshFamily::Uniform,
            n: None,
        },
        ("uniform", 1) => MeshSpec {
            family: MeshFamily::Uniform,
            n: Some(parse_usize(at(0), args[0].1)?),
        },
        ("graded", 1) => MeshSpec {
            family: MeshFamily::Graded {
                delta: parse_f64(at(0), args[0].1)?,
            },
            n: None,
        },
        ("graded", 2) => MeshSpec {
            family: MeshFamily::Graded {
                delta: parse_f64(at(1), args[1].1)?,
            },
            n: Some(parse_usize(at(0), args[0].1)?),
        },
        ("perturbed", 1 | 2) => MeshSpec {
            family: MeshFamily::Perturbed {
                rho: parse_f64(at(0), args[0].1)?,
                seed: match args.get(1) {
                    Some(&(p, t)) => parse_u64(p, t)?,
                    None => default_seed,
                },
            },
            n: None,
        },
        ("perturbed", 3) => MeshSpec {
            family: MeshFamily::Perturbed {
                rho: parse_f64(at(1), args[1].1)?,
                seed: parse_u64(at(2), args[2].1)?,
            },
            n: Some(parse_usize(at(0), args[0].1)?),
        },
        ("uniform" | "graded" | "perturbed", _) => {
            return Err(arity_error(at(0), kind, "a different number of arguments"))
        }
        _ => return Err(Error::parse(0, format!("unknown mesh kind '{kind}'"))),
    };
    Ok(spec)
}

pub fn parse_domain(s: &str) -> Result<(f64, f64)> {
    let args = split_args(s, 0);
    let [(pa, a), (pb, b)] = args[..] else {
        return Err(Error::parse(0, "domain expects 'alpha,beta'"));
    };
    let (alpha, beta) = (parse_f64(pa, a)?, parse_f64(pb, b)?);
    if beta <= alpha {
        return Err(Error::InvalidInterval { alpha, beta });
    }
    Ok((alpha, beta))
}

pub fn parse_levels(s: &str) -> Result<Vec<usize>> {
    split_args(s, 0)
        .into_iter()
        .map(|(p, t)| parse_usize(p, t))
        .collect()
}

impl RunConfig {
    /// Resolves every spec string of the parsed command line.
    pub fn from_cli(cli: Cli) -> Result<Self> {
        let (command, output) = match cli.command {
            CliCommand::Recover(a) => {
                let (alpha, beta) = parse_domain(&a.domain)?;
                let spec = parse_mesh_spec(&a.mesh, a.seed)?;
                let n = spec
                    .n
                    .ok_or_else(|| Error::parse(a.mesh.len(), "recover needs an element count"))?;
                let mesh = spec.family.build(alpha, beta, n)?;
                let func = parse_function_spec(&a.func)?;
                (
                    Command::Recover {
                        mesh,
                        func,
                        methods: a.method.methods(),
                    },
                    a.output,
                )
            }
            CliCommand::Study(a) => {
                let domain = parse_domain(&a.domain)?;
                let spec = parse_mesh_spec(&a.mesh, a.seed)?;
                if spec.n.is_some() {
                    return Err(Error::parse(0, "study takes a mesh family; use --levels"));
                }
                let method = match a.method.methods()[..] {
                    [m] => m,
                    _ => return Err(Error::parse(0, "study takes a single --method")),
                };
                (
                    Command::Study(StudyConfig {
                        spec: parse_function_spec(&a.func)?,
                        family: spec.family,
                        domain,
                        levels: parse_levels(&a.levels)?,
                        method,
                        norm: a.norm.into(),
                    }),
                    a.output,
                )
            }
            CliCommand::Verify(a) => {
                let suite = Suite::parse(&a.suite)
                    .ok_or_else(|| Error::parse(0, format!("unknown suite '{}'", a.suite)))?;
                (
                    Command::Verify {
                        suite,
                        options: VerifyOptions {
                            seed: a.seed,
                            tol_scale: a.tol_scale,
                        },
                    },
                    a.output,
                )
            }
            CliCommand::Infsup(a) => {
                let domain = parse_domain(&a.domain)?;
                let spec = parse_mesh_spec(&a.mesh, a.seed)?;
                if spec.n.is_some() {
                    return Err(Error::parse(0, "infsup takes a mesh family; use --levels"));
                }
                (
                    Command::Infsup {
                        family: spec.family,
                        domain,
                        levels: parse_levels(&a.levels)?,
                    },
                    a.output,
                )
            }
        };
        Ok(RunConfig {
            command,
            format: output.format,
            out: output.out,
        })
    }
}

/// One table cell.
#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Int(usize),
    Num(f64),
    Text(String),
    Empty,
}

impl Cell {
    fn csv(&self) -> String {
        match self {
            Cell::Int(v) => v.to_string(),
            Cell::Num(v) => format!("{v:?}"),
            Cell::Text(s) => s.clone(),
            Cell::Empty => String::new(),
        }
    }

    fn json(&self) -> Value {
        match self {
            Cell::Int(v) => json!(v),
            Cell::Num(v) => json!(v),
            Cell::Text(s) => json!(s),
            Cell::Empty => Value::Null,
        }
    }

    fn parse(s: &str) -> Self {
        if s.is_empty() {
            Cell::Empty
        } else if let Ok(v) = s.parse::<usize>() {
            Cell::Int(v)
        } else if let Ok(v) = s.parse::<f64>() {
            Cell::Num(v)
        } else {
            Cell::Text(s.to_string())
        }
    }
}

impl From<Option<f64>> for Cell {
    fn from(v: Option<f64>) -> Self {
        v.map_or(Cell::Empty, Cell::Num)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    pub header: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn to_csv(&self) -> String {
        let mut s = self.header.join(",");
        s.push('\n');
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(Cell::csv).collect();
            s.push_str(&cells.join(","));
            s.push('\n');
        }
        s
    }

    pub fn from_csv(text: &str) -> Result<Self> {
        let mut lines = text.lines();
        let header: Vec<String> = lines
            .next()
            .ok_or_else(|| Error::parse(0, "empty table"))?
            .split(',')
            .map(str::to_string)
            .collect();
        let rows = lines
            .filter(|l| !l.is_empty())
            .map(|l| l.split(',').map(Cell::parse).collect())
            .collect();
        Ok(Table { header, rows })
    }

    fn json_rows(&self) -> Value {
        Value::Array(
            self.rows
                .iter()
                .map(|row| {
                    let obj: Map<String, Value> = self
                        .header
                        .iter()
                        .cloned()
                        .zip(row.iter().map(Cell::json))
                        .collect();
                    Value::Object(obj)
                })
                .collect(),
        )
    }
}

fn recover_table(mesh: &Mesh, func: &FunctionSpec, methods: &[Method]) -> Result<Table> {
    let u = interpolate(func, mesh)?;
    let recovered = methods
        .iter()
        .map(|m| m.recover(&u))
        .collect::<Result<Vec<_>>>()?;
    let single = methods.len() == 1;
    let mut header: Vec<String> = vec!["i".into(), "x".into(), "u".into()];
    for m in methods {
        header.push(if single {
            "g".into()
        } else {
            format!("g_{}", m.name())
        });
    }
    header.push("du_exact".into());
    for m in methods {
        header.push(if single {
            "err".into()
        } else {
            format!("err_{}", m.name())
        });
    }
    let mut rows = Vec::with_capacity(mesh.n_nodes());
    for (i, &x) in mesh.nodes().iter().enumerate() {
        let exact = func.derivative(x).ok();
        let mut row = vec![Cell::Int(i), Cell::Num(x), Cell::Num(u.values()[i])];
        row.extend(recovered.iter().map(|g| Cell::Num(g.values()[i])));
        row.push(exact.into());
        row.extend(
            recovered
                .iter()
                .map(|g| Cell::from(exact.map(|d| g.values()[i] - d))),
        );
        rows.push(row);
    }
    Ok(Table { header, rows })
}

fn render(table: &Table, footer: Option<(&str, Option<f64>)>, format: Format) -> String {
    match format {
        Format::Csv => {
            let mut s = table.to_csv();
            if let Some((label, value)) = footer {
                let mut cells = vec![Cell::Text(label.into())];
                cells.extend((2..table.header.len()).map(|_| Cell::Empty));
                cells.push(value.into());
                let cells: Vec<String> = cells.iter().map(Cell::csv).collect();
                let _ = writeln!(s, "{}", cells.join(","));
            }
            s
        }
        Format::Json => {
            let v = match footer {
                Some((label, value)) => json!({ "records": table.json_rows(), label: value }),
                None => table.json_rows(),
            };
            let mut s = serde_json::to_string_pretty(&v).unwrap_or_default();
            s.push('\n');
            s
        }
    }
}

/// Executes a parsed command and renders its artifact.
pub fn run(config: &RunConfig) -> Result<Outcome> {
    let format = config.format;
    match &config.command {
        Command::Recover {
            mesh,
            func,
            methods,
        } => Ok(Outcome {
            output: render(&recover_table(mesh, func, methods)?, None, format),
            status: EXIT_OK,
        }),
        Command::Study(cfg) => {
            let study = convergence_study(cfg)?;
            let table = Table {
                header: ["n", "h", "error", "rate"].map(String::from).to_vec(),
                rows: study
                    .records
                    .iter()
                    .map(|r| {
                        vec![
                            Cell::Int(r.n),
                            Cell::Num(r.h),
                            Cell::Num(r.error),
                            r.rate.into(),
                        ]
                    })
                    .collect(),
            };
            Ok(Outcome {
                output: render(&table, Some(("slope", study.slope)), format),
                status: EXIT_OK,
            })
        }
        Command::Verify { suite, options } => {
            let checks = run_suite(*suite, options)?;
            let passed = checks.iter().all(|c| c.passed);
            let output = match format {
                Format::Csv => {
                    let mut s = String::new();
                    for c in &checks {
                        let _ = writeln!(s, "{c}");
                    }
                    let _ = writeln!(s, "{}", if passed { "ALL PASS" } else { "FAILED" });
                    s
                }
                Format::Json => {
                    let mut s = serde_json::to_string_pretty(&json!({
                        "checks": checks,
                        "passed": passed,
                    }))
                    .unwrap_or_default();
                    s.push('\n');
                    s
                }
            };
            Ok(Outcome {
                output,
                status: if passed { EXIT_OK } else { EXIT_VERIFY_FAILED },
            })
        }
        Command::Infsup {
            family,
            domain,
            levels,
        } => {
            let rows = levels
                .iter()
                .map(|&n| {
                    let mesh = family.build(domain.0, domain.1, n)?;
                    Ok(vec![Cell::Int(n), Cell::Num(estimate_inf_sup(&mesh)?)])
                })
                .collect::<Result<Vec<_>>>()?;
            let table = Table {
                header: vec!["n".into(), "beta".into()],
                rows,
            };
            Ok(Outcome {
                output: render(&table, None, format),
                status: EXIT_OK,
            })
        }
    }
}

/// Writes `contents` to `path` through a temporary file in the same
/// directory, so a failed run never leaves a partial artifact.
pub fn write_atomic(path: &Path, contents: &str) -> Result<()> {
    let dir = match path.parent() {
        Some(d) if !d.as_os_str().is_empty() => d,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    tmp.write_all(contents.as_bytes())?;
    tmp.persist(path).map_err(|e| Error::Io(e.to_string()))?;
    Ok(())
}

/// Entry point shared by the binary: parses arguments, runs, emits output
/// and returns the process exit status.
pub fn main_with_args<I, T>(args: I) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = e.print();
                return EXIT_OK;
            }
            let msg = e.to_string();
            let first = msg
                .lines()
                .next()
                .unwrap_or("")
                .trim_start_matches("error: ");
            eprintln!("error: usage: {first}");
            return EXIT_USAGE;
        }
    };
    let result = RunConfig::from_cli(cli).and_then(|cfg| {
        let outcome = run(&cfg)?;
        match &cfg.out {
            Some(path) => write_atomic(path, &outcome.output)?,
            None => {
                let mut stdout = std::io::stdout().lock();
                stdout.write_all(outcome.output.as_bytes())?;
                stdout.flush()?;
            }
        }
        Ok(outcome.status)
    });
    match result {
        Ok(status) => status,
        Err(e) => {
            eprintln!("error: {}: {}", e.code(), e.to_string().replace('\n', " "));
            exit_code(&e)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn function_specs() {
        assert_eq!(
            parse_function_spec("poly:0,0,1").unwrap(),
            FunctionSpec::Polynomial(vec![0.0, 0.0, 1.0])
        );
        let u = parse_function_spec("poly:3,2,0,1").unwrap();
        assert_eq!(u.value(2.0).unwrap(), 15.0);
        assert_eq!(u.derivative(2.0).unwrap(), 14.0);
        assert_eq!(
            parse_function_spec("sin:1,1").unwrap(),
            FunctionSpec::Sinusoid {
                amplitude: 1.0,
                wavenumber: 1.0
            }
        );
        assert_eq!(
            parse_function_spec("exp:-2.5").unwrap(),
            FunctionSpec::Exponential { scale: -2.5 }
        );
    }

    #[test]
    fn function_spec_errors_carry_positions() {
        assert!(matches!(
            parse_function_spec(""),
            Err(Error::Parse { pos: 0, .. })
        ));
        assert!(matches!(
            parse_function_spec("poly"),
            Err(Error::Parse { pos: 4, .. })
        ));
        assert!(matches!(
            parse_function_spec("poly:1,x,3"),
            Err(Error::Parse { pos: 7, .. })
        ));
        assert!(matches!(
            parse_function_spec("sin:1"),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            parse_function_spec("tan:1"),
            Err(Error::Parse { pos: 0, .. })
        ));
        assert!(matches!(
            parse_function_spec("file:/nonexistent/samples.csv"),
            Err(Error::Io(_))
        ));
    }

    #[test]
    fn mesh_specs() {
        assert_eq!(
            parse_mesh_spec("uniform:4", 1).unwrap(),
            MeshSpec {
                family: MeshFamily::Uniform,
                n: Some(4)
            }
        );
        assert_eq!(parse_mesh_spec("uniform", 1).unwrap().n, None);
        assert_eq!(
            parse_mesh_spec("graded:8,0.2", 1).unwrap(),
            MeshSpec {
                family: MeshFamily::Graded { delta: 0.2 },
                n: Some(8)
            }
        );
        assert_eq!(
            parse_mesh_spec("perturbed:16,0.4,7", 1).unwrap(),
            MeshSpec {
                family: MeshFamily::Perturbed { rho: 0.4, seed: 7 },
                n: Some(16)
            }
        );
        assert_eq!(
            parse_mesh_spec("perturbed:0.4", 9).unwrap().family,
            MeshFamily::Perturbed { rho: 0.4, seed: 9 }
        );
        assert!(matches!(
            parse_mesh_spec("grid:4", 1),
            Err(Error::Parse { pos: 0, .. })
        ));
        assert!(matches!(
            parse_mesh_spec("uniform:4,5", 1),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            parse_mesh_spec("uniform:four", 1),
            Err(Error::Parse { pos: 8, .. })
        ));
    }

    #[test]
    fn domain_and_levels() {
        assert_eq!(parse_domain("-1,2").unwrap(), (-1.0, 2.0));
        assert!(matches!(
            parse_domain("2,1"),
            Err(Error::InvalidInterval { .. })
        ));
        assert!(matches!(parse_domain("1"), Err(Error::Parse { .. })));
        assert_eq!(parse_levels("16,32,64").unwrap(), vec![16, 32, 64]);
        assert!(matches!(
            parse_levels("16,,64"),
            Err(Error::Parse { pos: 3, .. })
        ));
    }

    #[test]
    fn table_round_trip() {
        let mesh = Mesh::graded(0.0, 1.0, 7, 0.1).unwrap();
        let t = recover_table(
            &mesh,
            &FunctionSpec::Exponential { scale: 1.3 },
            &[Method::Oblique],
        )
        .unwrap();
        let csv = t.to_csv();
        let back = Table::from_csv(&csv).unwrap();
        assert_eq!(back.to_csv(), csv);
    }
}
