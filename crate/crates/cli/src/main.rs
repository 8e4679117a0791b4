//! `fockcap` command-line front end.
//!
//! Exit codes: 0 success, 1 a check failed, 2 usage error, 3 I/O error.

use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use fockcap::export::{exact_operator_json, float_operator_json};
use fockcap::lie::{run_lie_checks, LieCheck, LieReport};
use fockcap::model::{
    diagonal_hamiltonian, exact_spectrum, quadratic_hamiltonian_spectrum, toy_levels, toy_spectrum, SpectrumReport,
};
use fockcap::relations::{grid, verify_spec, verify_specs};
use fockcap::scalar::{format_exact, parse_exact};
use fockcap::thermo::{sweep, sweep_csv};
use fockcap::{
    normalize, AlgebraSpec, Backend, Exact, Execution, FockBasis, FockSpace, Kind, Normalization, RelationReport,
};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "fockcap", version, about = "Fock spaces with an occupation cap: operators, checks, spectra")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Dimension and graded dimensions of the Fock space.
    Dim(DimArgs),
    /// Basis listing (CSV unless --json).
    Basis(DimArgs),
    /// Export one operator matrix.
    Ops(OpsArgs),
    /// Relation verification suite.
    Verify(VerifyArgs),
    /// Lie (super)algebra structure checks.
    Lie(LieArgs),
    /// Grand-canonical sweep (CSV unless --json).
    Thermo(ThermoArgs),
    /// Spectrum of a quadratic Hamiltonian.
    Spectrum(SpectrumArgs),
    /// Two-mode toy model spectrum and level table.
    Toy(ToyArgs),
}

#[derive(Args)]
struct Output {
    /// Emit JSON instead of the human-readable format.
    #[arg(long)]
    json: bool,
    /// Write to this file instead of standard output.
    #[arg(long, short)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct SpecArgs {
    #[arg(long, value_enum)]
    kind: KindArg,
    #[arg(long)]
    n: usize,
    #[arg(long)]
    p: u32,
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    Fermi,
    Bose,
}

#[derive(Clone, Copy, ValueEnum)]
enum BackendArg {
    Exact,
    Float,
}

impl From<BackendArg> for Backend {
    fn from(b: BackendArg) -> Self {
        match b {
            BackendArg::Exact => Backend::Exact,
            BackendArg::Float => Backend::Float,
        }
    }
}

#[derive(Args)]
struct DimArgs {
    #[command(flatten)]
    spec: SpecArgs,
    #[command(flatten)]
    out: Output,
}

#[derive(Clone, Copy, ValueEnum)]
enum OpKind {
    Creation,
    Annihilation,
    Number,
}

#[derive(Clone, Copy, ValueEnum)]
enum NormArg {
    Unnormalized,
    Orthonormal,
}

#[derive(Args)]
struct OpsArgs {
    #[command(flatten)]
    spec: SpecArgs,
    #[arg(long, value_enum)]
    op: OpKind,
    /// Mode index, 1-based; required for ladder operators.
    #[arg(long)]
    mode: Option<usize>,
    #[arg(long, value_enum, default_value = "unnormalized")]
    normalization: NormArg,
    #[command(flatten)]
    out: Output,
}

/// Either a single spec or a grid over both kinds.
#[derive(Args)]
struct Selection {
    #[arg(long, value_enum, requires_all = ["n", "p"], conflicts_with = "grid")]
    kind: Option<KindArg>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    p: Option<u32>,
    /// Every spec of both kinds with n <= NMAX and p <= PMAX.
    #[arg(long, num_args = 2, value_names = ["NMAX", "PMAX"])]
    grid: Option<Vec<u32>>,
}

#[derive(Args)]
struct VerifyArgs {
    #[command(flatten)]
    select: Selection,
    #[arg(long, value_enum, default_value = "exact")]
    backend: BackendArg,
    #[command(flatten)]
    out: Output,
}

#[derive(Clone, Copy, ValueEnum)]
enum CheckArg {
    Brackets,
    Identify,
    Branching,
    All,
}

#[derive(Args)]
struct LieArgs {
    #[command(flatten)]
    select: Selection,
    #[arg(long, value_enum, default_value = "all")]
    check: CheckArg,
    #[arg(long, value_enum, default_value = "exact")]
    backend: BackendArg,
    #[command(flatten)]
    out: Output,
}

#[derive(Args)]
struct ThermoArgs {
    #[command(flatten)]
    spec: SpecArgs,
    /// A value, or START:STOP:COUNT for an inclusive linear sweep.
    #[arg(long)]
    beta: String,
    /// A value, or START:STOP:COUNT for an inclusive linear sweep.
    #[arg(long, allow_hyphen_values = true)]
    mu: String,
    /// Comma-separated single-mode energies, one per mode.
    #[arg(long, allow_hyphen_values = true)]
    energies: String,
    #[command(flatten)]
    out: Output,
}

#[derive(Args)]
struct SpectrumArgs {
    #[command(flatten)]
    spec: SpecArgs,
    /// Comma-separated diagonal energies (fractions allowed for the exact backend).
    #[arg(long, allow_hyphen_values = true, conflicts_with = "matrix_file", required_unless_present = "matrix_file")]
    energies: Option<String>,
    /// JSON file holding an n x n symmetric hopping table.
    #[arg(long)]
    matrix_file: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "exact")]
    backend: BackendArg,
    #[command(flatten)]
    out: Output,
}

#[derive(Args)]
struct ToyArgs {
    #[arg(long)]
    p: u32,
    #[command(flatten)]
    out: Output,
}

enum Failure {
    Usage(String),
    Io(String),
}

impl From<fockcap::Error> for Failure {
    fn from(e: fockcap::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

/// Rendered output plus whether every check passed.
struct Emitted {
    text: String,
    pass: bool,
}

impl Emitted {
    fn ok(text: String) -> Self {
        Self { text, pass: true }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let out = match &cli.command {
        Command::Dim(a) | Command::Basis(a) => &a.out,
        Command::Ops(a) => &a.out,
        Command::Verify(a) => &a.out,
        Command::Lie(a) => &a.out,
        Command::Thermo(a) => &a.out,
        Command::Spectrum(a) => &a.out,
        Command::Toy(a) => &a.out,
    };
    let result = dispatch(&cli.command).and_then(|emitted| {
        write_output(out, &emitted.text)?;
        Ok(emitted.pass)
    });
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Io(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}

fn write_output(out: &Output, text: &str) -> Result<(), Failure> {
    match &out.output {
        Some(path) => fs::write(path, text).map_err(|e| Failure::Io(format!("{}: {e}", path.display()))),
        None => io::stdout().write_all(text.as_bytes()).map_err(|e| Failure::Io(e.to_string())),
    }
}

fn dispatch(command: &Command) -> Result<Emitted, Failure> {
    match command {
        Command::Dim(a) => dim(a),
        Command::Basis(a) => basis(a),
        Command::Ops(a) => ops(a),
        Command::Verify(a) => verify(a),
        Command::Lie(a) => lie(a),
        Command::Thermo(a) => thermo(a),
        Command::Spectrum(a) => spectrum(a),
        Command::Toy(a) => toy(a),
    }
}

fn build_spec(kind: KindArg, n: usize, p: u32) -> Result<AlgebraSpec, Failure> {
    let kind = match kind {
        KindArg::Fermi => Kind::Fermi,
        KindArg::Bose => Kind::Bose,
    };
    let spec = AlgebraSpec::new(kind, n, p)?;
    if spec.kind() == Kind::Fermi && spec.p() as usize >= spec.n() {
        eprintln!("warning: {spec} has p >= n; the cap removes no states, only the deformation factors remain");
    }
    Ok(spec)
}

impl SpecArgs {
    fn spec(&self) -> Result<AlgebraSpec, Failure> {
        build_spec(self.kind, self.n, self.p)
    }
}

impl Selection {
    fn specs(&self) -> Result<Vec<AlgebraSpec>, Failure> {
        match (&self.grid, self.kind, self.n, self.p) {
            (Some(bounds), _, _, _) => {
                let (n_max, p_max) = (bounds[0] as usize, bounds[1]);
                if n_max == 0 || p_max == 0 {
                    return Err(Failure::Usage("grid bounds must be positive".into()));
                }
                Ok(grid(&[Kind::Fermi, Kind::Bose], n_max, p_max))
            }
            (None, Some(kind), Some(n), Some(p)) => Ok(vec![build_spec(kind, n, p)?]),
            _ => Err(Failure::Usage("give either --kind/--n/--p or --grid NMAX PMAX".into())),
        }
    }
}

fn to_json(value: &impl serde::Serialize) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("reports serialize");
    text.push('\n');
    text
}

fn join<T: ToString>(items: &[T], sep: &str) -> String {
    items.iter().map(T::to_string).collect::<Vec<_>>().join(sep)
}

fn dim(a: &DimArgs) -> Result<Emitted, Failure> {
    let spec = a.spec.spec()?;
    let grades = spec.graded_dimensions();
    let text = if a.out.json {
        to_json(&json!({ "spec": spec, "dimension": spec.dimension(), "graded_dimensions": grades }))
    } else {
        format!("{}\ngrades: {}\n", spec.dimension(), join(&grades, " "))
    };
    Ok(Emitted::ok(text))
}

fn basis(a: &DimArgs) -> Result<Emitted, Failure> {
    let basis = FockBasis::new(a.spec.spec()?);
    let text = if a.out.json {
        let rows: Vec<Value> = basis
            .states()
            .iter()
            .enumerate()
            .map(|(rank, v)| json!({ "rank": rank, "total": v.total(), "occupations": v.entries() }))
            .collect();
        to_json(&rows)
    } else {
        basis.to_csv()
    };
    Ok(Emitted::ok(text))
}

fn ops(a: &OpsArgs) -> Result<Emitted, Failure> {
    let space = FockSpace::new(a.spec.spec()?);
    let mode = || -> Result<usize, Failure> {
        let m = a.mode.ok_or_else(|| Failure::Usage("--mode is required for ladder operators".into()))?;
        if m == 0 || m > space.spec().n() {
            return Err(Failure::Usage(format!("--mode must lie in 1..={}", space.spec().n())));
        }
        Ok(m - 1)
    };
    let exact = match a.op {
        OpKind::Creation => space.creation(mode()?)?,
        OpKind::Annihilation => space.annihilation(mode()?)?,
        OpKind::Number => space.number(Normalization::Unnormalized),
    };
    let value = match a.normalization {
        NormArg::Unnormalized => exact_operator_json(&exact),
        NormArg::Orthonormal => float_operator_json(&normalize(&exact, &space.gram())?),
    };
    let text = if a.out.json {
        to_json(&value)
    } else {
        let mut text = format!("# {} {}x{} row col value\n", space.spec(), value["dims"][0], value["dims"][1]);
        for entry in value["entries"].as_array().into_iter().flatten() {
            let e = entry.as_array().expect("entry rows are arrays");
            let shown = match e.len() {
                4 if e[3] == json!(1) || e[3] == json!("1") => plain(&e[2]),
                4 => format!("{}/{}", plain(&e[2]), plain(&e[3])),
                _ => e[2].to_string(),
            };
            text.push_str(&format!("{} {} {shown}\n", e[0], e[1]));
        }
        text
    };
    Ok(Emitted::ok(text))
}

/// A JSON scalar without string quotes.
fn plain(v: &Value) -> String {
    v.as_str().map_or_else(|| v.to_string(), str::to_string)
}

fn report_lines(reports: &[RelationReport]) -> String {
    let mut text = String::new();
    for r in reports {
        let tag = if r.pass { "PASS" } else { "FAIL" };
        text.push_str(&format!("{tag} {} {} [{}] residual {}\n", r.spec, r.relation, join(&r.indices, ","), r.residual));
    }
    text
}

fn verify(a: &VerifyArgs) -> Result<Emitted, Failure> {
    let specs = a.select.specs()?;
    let backend = Backend::from(a.backend);
    let reports = if specs.len() == 1 {
        verify_spec(specs[0], backend)
    } else {
        verify_specs(&specs, backend, Execution::default())
    };
    let pass = reports.iter().all(|r| r.pass);
    let text = if a.out.json {
        to_json(&reports)
    } else {
        let failed = reports.iter().filter(|r| !r.pass).count();
        format!("{}{} reports, {failed} failed\n", report_lines(&reports), reports.len())
    };
    Ok(Emitted { text, pass })
}

fn lie(a: &LieArgs) -> Result<Emitted, Failure> {
    let check = match a.check {
        CheckArg::Brackets => LieCheck::Brackets,
        CheckArg::Identify => LieCheck::Identify,
        CheckArg::Branching => LieCheck::Branching,
        CheckArg::All => LieCheck::All,
    };
    let reports: Vec<LieReport> = a
        .select
        .specs()?
        .into_iter()
        .map(|spec| run_lie_checks(spec, check, a.backend.into(), Execution::default()))
        .collect();
    let pass = reports.iter().all(LieReport::pass);
    let text = if a.out.json {
        to_json(&reports)
    } else {
        let mut text = String::new();
        for r in &reports {
            text.push_str(&report_lines(&r.reports));
            if let Some(w) = &r.vacuum_weight {
                text.push_str(&format!("{} vacuum weight {w}\n", r.spec));
            }
            if let Some(b) = &r.branching {
                for block in &b.blocks {
                    text.push_str(&format!(
                        "{} grade {} dim {} (expected {}) E00 = {} invariant {} span {}\n",
                        r.spec, block.grade, block.dimension, block.expected_dimension, block.e00_value, block.invariant,
                        block.span_rank
                    ));
                }
            }
            let tag = if r.pass() { "PASS" } else { "FAIL" };
            text.push_str(&format!("{tag} {}\n", r.spec));
        }
        text
    };
    Ok(Emitted { text, pass })
}

/// `x` or `start:stop:count`, the latter an inclusive linear sweep.
fn parse_range(text: &str, name: &str) -> Result<Vec<f64>, Failure> {
    let bad = || Failure::Usage(format!("--{name}: expected a number or START:STOP:COUNT, got {text:?}"));
    let parts: Vec<&str> = text.split(':').collect();
    match parts.as_slice() {
        [x] => Ok(vec![x.trim().parse().map_err(|_| bad())?]),
        [start, stop, count] => {
            let start: f64 = start.trim().parse().map_err(|_| bad())?;
            let stop: f64 = stop.trim().parse().map_err(|_| bad())?;
            let count: usize = count.trim().parse().map_err(|_| bad())?;
            match count {
                0 => Err(bad()),
                1 => Ok(vec![start]),
                _ => Ok((0..count).map(|k| start + (stop - start) * k as f64 / (count - 1) as f64).collect()),
            }
        }
        _ => Err(bad()),
    }
}

fn parse_list<T>(text: &str, parse: impl Fn(&str) -> Option<T>) -> Result<Vec<T>, Failure> {
    text.split(',')
        .map(|item| parse(item.trim()).ok_or_else(|| Failure::Usage(format!("cannot parse energy {item:?}"))))
        .collect()
}

fn thermo(a: &ThermoArgs) -> Result<Emitted, Failure> {
    let spec = a.spec.spec()?;
    let betas = parse_range(&a.beta, "beta")?;
    let mus = parse_range(&a.mu, "mu")?;
    let energies = parse_list(&a.energies, |s| s.parse::<f64>().ok())?;
    let rows = sweep(spec, &betas, &mus, &energies, Execution::default())?;
    let text = if a.out.json { to_json(&rows) } else { sweep_csv(spec.n(), &rows) };
    Ok(Emitted::ok(text))
}

fn read_table(path: &PathBuf) -> Result<Vec<Vec<Value>>, Failure> {
    let raw = fs::read_to_string(path).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&raw).map_err(|e| Failure::Usage(format!("{}: expected an n x n JSON array: {e}", path.display())))
}

fn spectrum(a: &SpectrumArgs) -> Result<Emitted, Failure> {
    let spec = a.spec.spec()?;
    let n = spec.n();
    // Every input is brought to a table of textual numbers so both backends share one path.
    let table: Vec<Vec<String>> = match (&a.energies, &a.matrix_file) {
        (Some(list), _) => {
            let eps: Vec<String> = list.split(',').map(|s| s.trim().to_string()).collect();
            (0..eps.len())
                .map(|i| (0..eps.len()).map(|j| if i == j { eps[i].clone() } else { "0".into() }).collect())
                .collect()
        }
        (None, Some(path)) => read_table(path)?
            .into_iter()
            .map(|row| row.iter().map(plain).collect())
            .collect(),
        (None, None) => unreachable!("clap requires one input"),
    };
    if table.len() != n || table.iter().any(|row| row.len() != n) {
        return Err(Failure::Usage(format!("expected {n} energies or an {n} x {n} table")));
    }
    let report: SpectrumReport = match a.backend {
        BackendArg::Exact => {
            let mut energies = Vec::with_capacity(n);
            for (i, row) in table.iter().enumerate() {
                for (j, entry) in row.iter().enumerate() {
                    let value = parse_exact(entry).ok_or_else(|| Failure::Usage(format!("cannot parse {entry:?}")))?;
                    if i == j {
                        energies.push(value);
                    } else if value != Exact::from_integer(0.into()) {
                        return Err(Failure::Usage(
                            "the exact backend handles diagonal tables only; use --backend float".into(),
                        ));
                    }
                }
            }
            exact_spectrum(&diagonal_hamiltonian(&FockSpace::new(spec), &energies)?)?
        }
        BackendArg::Float => {
            let floats: Vec<Vec<f64>> = table
                .iter()
                .map(|row| parse_list(&row.join(","), |s| parse_exact(s).map(|q| fockcap::Scalar::to_f64(&q))))
                .collect::<Result<_, _>>()?;
            quadratic_hamiltonian_spectrum(spec, &floats)?
        }
    };
    let text = if a.out.json {
        to_json(&report.levels)
    } else {
        let mut text = String::from("value mult\n");
        for level in &report.levels {
            text.push_str(&format!("{} {}\n", level.value, level.mult));
        }
        text
    };
    Ok(Emitted::ok(text))
}

fn toy(a: &ToyArgs) -> Result<Emitted, Failure> {
    if a.p == 0 {
        return Err(Failure::Usage("--p must be positive".into()));
    }
    let levels = toy_levels(a.p);
    let merged = toy_spectrum(a.p);
    let text = if a.out.json {
        let rows: Vec<Value> = levels
            .iter()
            .map(|l| {
                json!({
                    "n": l.n,
                    "energy": format_exact(&l.energy),
                    "mult": l.mult,
                    "gap": l.gap.as_ref().map(format_exact),
                })
            })
            .collect();
        to_json(&json!({ "p": a.p, "spectrum": merged.levels, "levels": rows }))
    } else {
        let mut text = String::from("E mult\n");
        for level in &merged.levels {
            text.push_str(&format!("{} {}\n", level.value, level.mult));
        }
        text.push_str("\nn E_n mult gap(1-2n/p)\n");
        for l in &levels {
            let gap = l.gap.as_ref().map_or_else(|| "-".to_string(), format_exact);
            text.push_str(&format!("{} {} {} {gap}\n", l.n, format_exact(&l.energy), l.mult));
        }
        text
    };
    Ok(Emitted::ok(text))
}
