//! Command-line front end. This is the only part of the crate that touches
//! the filesystem or standard streams.
//!
//! Exit statuses: 0 success, 1 a certificate or regression check failed,
//! 2 resource cap or invalid configuration, 3 bad parameter specification or
//! unparsable input, 4 I/O failure.

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;
use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use crate::construct::{
    self, normalized_closed_form, remark3_entropy_bound, remark3_params, theorem_entropy_bound,
    ParamSeq, NEEMAN_DEFAULT_C,
};
use crate::error::Error;
use crate::format::{self, format_f64, TableFile};
use crate::spectrum::{
    inverse_transform, stats, HypercubeFunction, SpectralStats, TableLimit, DEFAULT_MAX_TABLE_N,
    HARD_MAX_TABLE_N,
};
use crate::verify::{self, Certificate, OracleReport};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_RESOURCE: i32 = 2;
pub const EXIT_BAD_SPEC: i32 = 3;
pub const EXIT_IO: i32 = 4;

#[derive(Debug, Parser)]
#[command(
    name = "hyperspec",
    version,
    about = "Fourier-Walsh entropy and influence on the hypercube"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build a function and write its value table.
    Gen(RunArgs),
    /// Spectral statistics of a table file or a built function.
    Stats(StatsArgs),
    /// Run certificates (exit 1 if any check fails).
    Verify(VerifyArgs),
    /// Closed-form influence/entropy over an (n, a) grid.
    Sweep(SweepArgs),
    /// Brute-force table for the truncated normalized sum.
    Neeman(NeemanArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    Real,
    Complex,
    Classical,
    Sum,
    Neeman,
}

impl Kind {
    fn as_str(self) -> &'static str {
        match self {
            Kind::Real => "real",
            Kind::Complex => "complex",
            Kind::Classical => "classical",
            Kind::Sum => "sum",
            Kind::Neeman => "neeman",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Default)]
pub enum OutputFormat {
    Csv,
    Json,
    #[default]
    Text,
}

#[derive(Debug, Clone, Args)]
pub struct RunArgs {
    /// Dimension; may be omitted when --a is a list or file.
    #[arg(long)]
    pub n: Option<usize>,
    /// constant (`0.5` or `const:0.5`), `one-over-sqrt-n`, `remark3:<a>`,
    /// `list:<a1,a2,..>` or `file:<path>`.
    #[arg(long = "a", default_value = "one-over-sqrt-n")]
    pub param_spec: String,
    #[arg(long, value_enum, default_value_t = Kind::Real)]
    pub kind: Kind,
    /// Truncation level for the `neeman` kind.
    #[arg(long = "C", default_value_t = NEEMAN_DEFAULT_C)]
    pub c: f64,
    /// Skip L2 normalization of the `neeman` kind.
    #[arg(long)]
    pub raw: bool,
    #[arg(long, default_value_t = verify::AGREEMENT_TOL)]
    pub tol: f64,
    #[arg(long, default_value_t = DEFAULT_MAX_TABLE_N)]
    pub max_table_n: usize,
    /// Required to raise --max-table-n above the default (tables take 16 * 2^n bytes).
    #[arg(long)]
    pub allow_large_tables: bool,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
    pub format: OutputFormat,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct StatsArgs {
    /// Table file to analyse; without it the function is built from the flags.
    pub input: Option<PathBuf>,
    #[command(flatten)]
    pub run: RunArgs,
}

#[derive(Debug, Clone, Args)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub run: RunArgs,
    /// Certify the a_i = sqrt(a/n) family instead of the theorem function.
    #[arg(long)]
    pub remark3: Option<f64>,
    /// Certify the zero-mean lift of the theorem-1 function.
    #[arg(long)]
    pub remark2: bool,
    /// Run a seeded closed-form/brute-force oracle campaign at --n.
    #[arg(long)]
    pub oracle: bool,
    #[arg(long, default_value_t = 100)]
    pub trials: usize,
    /// For `complex` beyond the table cap: sampled modulus check with this many points.
    #[arg(long)]
    pub samples: Option<usize>,
    /// Dimensions for the `neeman` kind.
    #[arg(long, value_delimiter = ',', default_values_t = [8usize, 12, 16, 20])]
    pub ns: Vec<usize>,
}

#[derive(Debug, Clone, Args)]
pub struct SweepArgs {
    #[command(flatten)]
    pub run: RunArgs,
    #[arg(long, value_delimiter = ',', required = true)]
    pub ns: Vec<usize>,
    #[arg(long = "a-values", value_delimiter = ',', required = true)]
    pub a_values: Vec<f64>,
}

#[derive(Debug, Clone, Args)]
pub struct NeemanArgs {
    #[command(flatten)]
    pub run: RunArgs,
    #[arg(long, value_delimiter = ',', default_values_t = [8usize, 12, 16, 20])]
    pub ns: Vec<usize>,
}

/// Where the driving parameters come from.
#[derive(Debug, Clone, PartialEq)]
pub enum ParamSpec {
    Constant(f64),
    OneOverSqrtN,
    Remark3(f64),
    List(Vec<f64>),
    File(PathBuf),
}

impl std::str::FromStr for ParamSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let number = |v: &str| {
            v.trim()
                .parse::<f64>()
                .map_err(|_| Error::invalid(format!("`{v}` is not a number")))
        };
        if s == "one-over-sqrt-n" {
            return Ok(ParamSpec::OneOverSqrtN);
        }
        match s.split_once(':') {
            Some(("const", v)) => Ok(ParamSpec::Constant(number(v)?)),
            Some(("remark3", v)) => Ok(ParamSpec::Remark3(number(v)?)),
            Some(("list", v)) => Ok(ParamSpec::List(
                v.split(',')
                    .filter(|t| !t.trim().is_empty())
                    .map(number)
                    .collect::<Result<_, _>>()?,
            )),
            Some(("file", v)) => Ok(ParamSpec::File(PathBuf::from(v))),
            _ => number(s)
                .map(ParamSpec::Constant)
                .map_err(|_| Error::invalid(format!("unrecognized parameter spec `{s}`"))),
        }
    }
}

#[derive(Debug)]
pub enum CliError {
    Config(String),
    Spec(String),
    Resource(String),
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Config(_) | CliError::Resource(_) => EXIT_RESOURCE,
            CliError::Spec(_) => EXIT_BAD_SPEC,
            CliError::Io(_) => EXIT_IO,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Config(m) | CliError::Spec(m) | CliError::Resource(m) | CliError::Io(m) => m,
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::ResourceLimit { .. } => CliError::Resource(e.to_string()),
            _ => CliError::Spec(e.to_string()),
        }
    }
}

type CliResult<T> = Result<T, CliError>;

/// Validated view of the shared flags.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub n: Option<usize>,
    pub param_spec: ParamSpec,
    pub kind: Kind,
    pub c: f64,
    pub normalize: bool,
    pub tol: f64,
    pub limit: TableLimit,
    pub seed: u64,
    pub format: OutputFormat,
    pub out: Option<PathBuf>,
}

impl RunConfig {
    pub fn from_args(args: &RunArgs) -> CliResult<Self> {
        if args.tol.is_nan() || args.tol <= 0.0 {
            return Err(CliError::Config(format!(
                "--tol must be positive, got {}",
                args.tol
            )));
        }
        if args.max_table_n > DEFAULT_MAX_TABLE_N && !args.allow_large_tables {
            return Err(CliError::Config(format!(
                "--max-table-n above {DEFAULT_MAX_TABLE_N} needs --allow-large-tables"
            )));
        }
        if args.max_table_n > HARD_MAX_TABLE_N {
            return Err(CliError::Config(format!(
                "--max-table-n is limited to {HARD_MAX_TABLE_N}"
            )));
        }
        let param_spec = args.param_spec.parse::<ParamSpec>()?;
        Ok(Self {
            n: args.n,
            param_spec,
            kind: args.kind,
            c: args.c,
            normalize: !args.raw,
            tol: args.tol,
            limit: TableLimit::new(args.max_table_n),
            seed: args.seed,
            format: args.format,
            out: args.out.clone(),
        })
    }

    fn require_n(&self) -> CliResult<usize> {
        self.n
            .ok_or_else(|| CliError::Config("--n is required".into()))
    }

    /// Resolves the parameter sequence, checking its length against --n.
    pub fn params(&self) -> CliResult<ParamSeq> {
        let list = |a: Vec<f64>| -> CliResult<ParamSeq> {
            if let Some(n) = self.n {
                if n != a.len() {
                    return Err(CliError::Spec(format!(
                        "--n {n} but {} parameters given",
                        a.len()
                    )));
                }
            }
            Ok(ParamSeq::new(a)?)
        };
        match &self.param_spec {
            ParamSpec::Constant(c) => Ok(ParamSeq::constant(self.require_n()?, *c)?),
            ParamSpec::OneOverSqrtN => match self.require_n()? {
                // empty sequence: the constant function 1
                0 => Ok(ParamSeq::new(Vec::new())?),
                n => Ok(construct::theorem_params(n)?),
            },
            ParamSpec::Remark3(a) => Ok(remark3_params(self.require_n()?, *a)?),
            ParamSpec::List(a) => list(a.clone()),
            ParamSpec::File(path) => {
                let text = std::fs::read_to_string(path)
                    .map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
                list(format::parse_params(&text)?.into())
            }
        }
    }

    fn dimension(&self) -> CliResult<usize> {
        match (&self.param_spec, self.kind) {
            (ParamSpec::List(_) | ParamSpec::File(_), Kind::Real | Kind::Complex) => {
                Ok(self.params()?.len())
            }
            _ => self.require_n(),
        }
    }
}

/// A built function plus whatever closed form describes it.
struct Built {
    n: usize,
    function: HypercubeFunction,
    summary: Option<(f64, f64)>,
}

fn build(cfg: &RunConfig) -> CliResult<Built> {
    let n = cfg.dimension()?;
    cfg.limit.check(n)?;
    let (function, summary) = match cfg.kind {
        Kind::Real | Kind::Complex => {
            let params = cfg.params()?;
            let nc = normalized_closed_form(&params);
            let f = if cfg.kind == Kind::Real {
                construct::normalized_real(&params, cfg.limit)?
            } else {
                construct::unimodular_complex(&params, cfg.limit)?
            };
            (f, Some((nc.influence, nc.entropy)))
        }
        Kind::Classical => {
            let nf = n as f64;
            (
                construct::classical_normalized(n, cfg.limit)?,
                Some((nf / 2.0, nf)),
            )
        }
        Kind::Sum => (
            construct::normalized_sum(n, cfg.limit)?,
            Some((1.0, (n as f64).log2())),
        ),
        Kind::Neeman => (
            construct::neeman_function(n, cfg.c, cfg.normalize, cfg.limit)?,
            None,
        ),
    };
    Ok(Built {
        n,
        function,
        summary,
    })
}

fn ratio(entropy: f64, influence: f64) -> f64 {
    if influence == 0.0 {
        f64::NAN
    } else {
        entropy / influence
    }
}

fn emit(cfg_out: &Option<PathBuf>, text: &str, stdout: &mut dyn Write) -> CliResult<()> {
    match cfg_out {
        Some(path) => {
            std::fs::write(path, text).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
        }
        None => stdout
            .write_all(text.as_bytes())
            .map_err(|e| CliError::Io(e.to_string())),
    }
}

fn cmd_gen(args: &RunArgs, stdout: &mut dyn Write, stderr: &mut dyn Write) -> CliResult<i32> {
    let cfg = RunConfig::from_args(args)?;
    let built = build(&cfg)?;
    emit(&cfg.out, &format::write_function(&built.function), stdout)?;
    let mut line = format!("n={} kind={}", built.n, cfg.kind.as_str());
    let (i, h, source) = match built.summary {
        Some((i, h)) => (i, h, "closed_form"),
        None => {
            let st = stats(&built.function, cfg.limit)?;
            (st.influence, st.entropy, "brute_force")
        }
    };
    let _ = write!(
        line,
        " influence={} entropy={} bound={} ratio={} source={source}",
        format_f64(i),
        format_f64(h),
        format_f64(theorem_entropy_bound(built.n)),
        format_f64(ratio(h, i)),
    );
    // the summary goes to stderr when stdout carries the table
    let sink: &mut dyn Write = if cfg.out.is_some() { stdout } else { stderr };
    writeln!(sink, "{line}").map_err(|e| CliError::Io(e.to_string()))?;
    Ok(EXIT_OK)
}

/// One `stats` output record; CSV columns follow the field order.
#[derive(Debug, Clone, Serialize)]
pub struct StatsRecord {
    pub n: usize,
    pub kind: String,
    pub l2: f64,
    pub linf: f64,
    pub influence: f64,
    pub entropy: f64,
    pub bound: f64,
    pub ratio: f64,
}

pub const STATS_CSV_HEADER: &str = "n,kind,l2,linf,influence,entropy,bound,ratio";

impl StatsRecord {
    fn new(n: usize, kind: &str, st: &SpectralStats) -> Self {
        Self {
            n,
            kind: kind.to_string(),
            l2: st.l2_norm,
            linf: st.linf_norm,
            influence: st.influence,
            entropy: st.entropy,
            bound: theorem_entropy_bound(n),
            ratio: ratio(st.entropy, st.influence),
        }
    }

    fn values(&self) -> [String; 8] {
        [
            self.n.to_string(),
            self.kind.clone(),
            format_f64(self.l2),
            format_f64(self.linf),
            format_f64(self.influence),
            format_f64(self.entropy),
            format_f64(self.bound),
            format_f64(self.ratio),
        ]
    }
}

fn render_records<T: Serialize>(
    format: OutputFormat,
    header: &str,
    rows: &[T],
    values: impl Fn(&T) -> Vec<String>,
) -> String {
    match format {
        OutputFormat::Csv => {
            let mut out = format!("{header}\n");
            for r in rows {
                out.push_str(&values(r).join(","));
                out.push('\n');
            }
            out
        }
        OutputFormat::Json => {
            let mut out = serde_json::to_string_pretty(rows).expect("records serialize");
            out.push('\n');
            out
        }
        OutputFormat::Text => {
            let keys: Vec<&str> = header.split(',').collect();
            let mut out = String::new();
            for r in rows {
                let fields: Vec<String> = keys
                    .iter()
                    .zip(values(r))
                    .map(|(k, v)| format!("{k}={v}"))
                    .collect();
                out.push_str(&fields.join(" "));
                out.push('\n');
            }
            out
        }
    }
}

fn cmd_stats(args: &StatsArgs, stdout: &mut dyn Write) -> CliResult<i32> {
    let cfg = RunConfig::from_args(&args.run)?;
    let record = match &args.input {
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
            match format::parse_table(&text, cfg.limit)? {
                TableFile::Function { kind, function } => {
                    StatsRecord::new(function.n(), kind.as_str(), &stats(&function, cfg.limit)?)
                }
                TableFile::Spectrum(s) => {
                    let f = inverse_transform(&s, cfg.limit)?;
                    StatsRecord::new(s.n(), "spectrum", &SpectralStats::from_parts(&f, &s))
                }
            }
        }
        None => {
            let built = build(&cfg)?;
            StatsRecord::new(
                built.n,
                cfg.kind.as_str(),
                &stats(&built.function, cfg.limit)?,
            )
        }
    };
    let text = match cfg.format {
        OutputFormat::Json => {
            let mut s = serde_json::to_string_pretty(&record).expect("record serializes");
            s.push('\n');
            s
        }
        f => render_records(f, STATS_CSV_HEADER, &[record], |r| r.values().to_vec()),
    };
    emit(&cfg.out, &text, stdout)?;
    Ok(EXIT_OK)
}

pub const CHECK_CSV_HEADER: &str = "kind,n,check,lhs,relation,rhs,tol,margin,pass";

fn render_certificates(format: OutputFormat, certs: &[Certificate]) -> String {
    match format {
        OutputFormat::Text => certs.iter().map(Certificate::to_text).collect(),
        OutputFormat::Json => {
            let mut s = serde_json::to_string_pretty(certs).expect("certificates serialize");
            s.push('\n');
            s
        }
        OutputFormat::Csv => {
            let mut out = format!("{CHECK_CSV_HEADER}\n");
            for cert in certs {
                for c in &cert.checks {
                    let _ = writeln!(
                        out,
                        "{},{},{},{},{},{},{},{},{}",
                        cert.kind,
                        cert.n,
                        c.name,
                        format_f64(c.lhs),
                        c.relation.symbol(),
                        format_f64(c.rhs),
                        format_f64(c.tol),
                        format_f64(c.margin),
                        c.pass
                    );
                }
            }
            out
        }
    }
}

pub const ORACLE_CSV_HEADER: &str =
    "n,trials,seed,tol,pq_square_sum,l2_norm,linf_bracket,coefficients,influence,entropy,pass";

fn oracle_values(r: &OracleReport) -> Vec<String> {
    vec![
        r.n.to_string(),
        r.trials.to_string(),
        r.seed.map_or_else(String::new, |s| s.to_string()),
        format_f64(r.tol),
        format_f64(r.pq_square_sum),
        format_f64(r.l2_norm),
        format_f64(r.linf_bracket),
        format_f64(r.coefficients),
        format_f64(r.influence),
        format_f64(r.entropy),
        r.passed().to_string(),
    ]
}

fn cmd_verify(args: &VerifyArgs, stdout: &mut dyn Write, stderr: &mut dyn Write) -> CliResult<i32> {
    let cfg = RunConfig::from_args(&args.run)?;

    if args.oracle {
        let n = cfg.require_n()?;
        let report = verify::oracle_campaign(n, args.trials, cfg.seed, cfg.tol, cfg.limit)?;
        let text = render_records(
            cfg.format,
            ORACLE_CSV_HEADER,
            std::slice::from_ref(&report),
            oracle_values,
        );
        emit(&cfg.out, &text, stdout)?;
        if !report.passed() {
            let _ = writeln!(
                stderr,
                "oracle campaign failed: max error {}",
                format_f64(report.max_error())
            );
            return Ok(EXIT_CHECK_FAILED);
        }
        return Ok(EXIT_OK);
    }

    let certs = match cfg.kind {
        Kind::Neeman => {
            let band = (cfg.c == NEEMAN_DEFAULT_C).then_some(verify::NEEMAN_C2_INFLUENCE_BAND);
            vec![verify::neeman_regression(&args.ns, cfg.c, band, cfg.limit)?.certificate()]
        }
        Kind::Sum => {
            return Err(CliError::Config(
                "no certificate is defined for kind `sum`".into(),
            ));
        }
        kind => {
            let n = cfg.require_n()?;
            let mut certs = Vec::new();
            if let Some(a) = args.remark3 {
                certs.push(verify::certify_remark3(n, a, cfg.limit)?);
            }
            if args.remark2 {
                certs.push(verify::certify_remark2(n, cfg.limit)?);
            }
            if certs.is_empty() {
                certs.push(match kind {
                    Kind::Real => verify::certify_theorem1(n, cfg.limit)?,
                    Kind::Complex => match (cfg.limit.check(n), args.samples) {
                        (Err(_), Some(samples)) => {
                            verify::certify_theorem2_sampled(n, samples, cfg.seed)?
                        }
                        _ => verify::certify_theorem2(n, cfg.limit)?,
                    },
                    _ => verify::certify_classical_rs(n, cfg.limit)?,
                });
            }
            certs
        }
    };

    emit(&cfg.out, &render_certificates(cfg.format, &certs), stdout)?;
    let failed: Vec<&Certificate> = certs.iter().filter(|c| !c.overall).collect();
    if failed.is_empty() {
        return Ok(EXIT_OK);
    }
    for cert in failed {
        let _ = writeln!(stderr, "certificate {} n={} failed:", cert.kind, cert.n);
        for c in cert.failed_checks() {
            let _ = writeln!(
                stderr,
                "check={} lhs={} relation={} rhs={} margin={}",
                c.name,
                format_f64(c.lhs),
                c.relation.symbol(),
                format_f64(c.rhs),
                format_f64(c.margin)
            );
        }
    }
    Ok(EXIT_CHECK_FAILED)
}

#[derive(Debug, Clone, Serialize)]
pub struct SweepRow {
    pub n: usize,
    pub a: f64,
    pub influence: f64,
    pub entropy: f64,
    pub bound: f64,
    pub ratio: f64,
}

pub const SWEEP_CSV_HEADER: &str = "n,a,influence,entropy,bound,ratio";

/// Closed-form rows for every `(n, a)` in grid order (n outer, a inner).
pub fn sweep_rows(ns: &[usize], a_values: &[f64]) -> Result<Vec<SweepRow>, Error> {
    let cells: Vec<(usize, f64)> = ns
        .iter()
        .flat_map(|&n| a_values.iter().map(move |&a| (n, a)))
        .collect();
    // rayon's collect keeps input order
    cells
        .par_iter()
        .map(|&(n, a)| {
            let nc = normalized_closed_form(&remark3_params(n, a)?);
            Ok(SweepRow {
                n,
                a,
                influence: nc.influence,
                entropy: nc.entropy,
                bound: remark3_entropy_bound(n, a),
                ratio: ratio(nc.entropy, nc.influence),
            })
        })
        .collect()
}

fn cmd_sweep(args: &SweepArgs, stdout: &mut dyn Write) -> CliResult<i32> {
    let cfg = RunConfig::from_args(&args.run)?;
    if args.ns.is_empty() || args.a_values.is_empty() {
        return Err(CliError::Spec(
            "sweep needs non-empty --ns and --a-values".into(),
        ));
    }
    let rows = sweep_rows(&args.ns, &args.a_values)?;
    let text = render_records(cfg.format, SWEEP_CSV_HEADER, &rows, |r| {
        vec![
            r.n.to_string(),
            format_f64(r.a),
            format_f64(r.influence),
            format_f64(r.entropy),
            format_f64(r.bound),
            format_f64(r.ratio),
        ]
    });
    emit(&cfg.out, &text, stdout)?;
    Ok(EXIT_OK)
}

pub const NEEMAN_CSV_HEADER: &str = "n,C,raw_l2,linf,influence,entropy";

fn cmd_neeman(args: &NeemanArgs, stdout: &mut dyn Write, stderr: &mut dyn Write) -> CliResult<i32> {
    let cfg = RunConfig::from_args(&args.run)?;
    let band = (cfg.c == NEEMAN_DEFAULT_C).then_some(verify::NEEMAN_C2_INFLUENCE_BAND);
    let report = verify::neeman_regression(&args.ns, cfg.c, band, cfg.limit)?;
    let c = report.c;
    let mut text = match cfg.format {
        OutputFormat::Json => {
            let mut s = serde_json::to_string_pretty(&report).expect("report serializes");
            s.push('\n');
            s
        }
        f => render_records(f, NEEMAN_CSV_HEADER, &report.rows, |r| {
            vec![
                r.n.to_string(),
                format_f64(c),
                format_f64(r.raw_l2_norm),
                format_f64(r.linf_norm),
                format_f64(r.influence),
                format_f64(r.entropy),
            ]
        }),
    };
    if cfg.format != OutputFormat::Json {
        let band_verdict = report
            .influence_in_band
            .map_or_else(|| "unpinned".to_string(), |b| b.to_string());
        let line = format!(
            "entropy_increasing={} influence_in_band={band_verdict}\n",
            report.entropy_increasing
        );
        // keep CSV files machine-readable
        if cfg.format == OutputFormat::Csv {
            let _ = stderr.write_all(line.as_bytes());
        } else {
            text.push_str(&line);
        }
    }
    emit(&cfg.out, &text, stdout)?;
    Ok(if report.passed() {
        EXIT_OK
    } else {
        EXIT_CHECK_FAILED
    })
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                EXIT_RESOURCE
            } else {
                EXIT_OK
            };
            let sink: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    let result = match &cli.command {
        Command::Gen(a) => cmd_gen(a, stdout, stderr),
        Command::Stats(a) => cmd_stats(a, stdout),
        Command::Verify(a) => cmd_verify(a, stdout, stderr),
        Command::Sweep(a) => cmd_sweep(a, stdout),
        Command::Neeman(a) => cmd_neeman(a, stdout, stderr),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: {}", e.message());
            e.exit_code()
        }
    }
}
