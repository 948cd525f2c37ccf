//! The `additive-digits` command line.
//!
//! Every CSV output starts with a `#` header echoing the resolved
//! configuration as `key=value` lines; [`RunConfig::parse_header`] reads it
//! back and [`RunConfig::to_args`] turns it into an equivalent argument list.
//! The thread count is not echoed: outputs do not depend on it.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write as _;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::additive::{sieve_range, AdditiveFunctionSpec, ExecConfig};
use crate::block_stats::{census, chi_square, count_formula, stream_census, Block, BlockCensus};
use crate::classify::{bias_demo, classify, ek_stats, DEFAULT_DELTA, DEFAULT_EPS_GRID};
use crate::digit_stream::format::{decode_binary, encode_binary, header_value, parse_text, MAGIC};
use crate::digit_stream::{build_stream, build_window_stream, Base, LengthSchedule};
use crate::error::{Error, Result};
use crate::expsum::{
    decay_profile, exp_sum, phase_prediction, sd_main_term, DecayCovariate, DEFAULT_PRIME_BOUND,
};

const PROGRAM: &str = "additive-digits";

/// Keys echoed for information only; they are not flags.
const INFO_KEYS: [&str; 2] = ["synthetic_K", "spec"];

#[derive(Parser, Debug)]
#[command(name = PROGRAM, version, about = "Digit streams of additive functions")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Worker threads (default: all cores). Outputs do not depend on it.
    #[arg(long, global = true)]
    threads: Option<usize>,

    /// Memory budget in bytes.
    #[arg(long = "memory-budget", global = true, value_parser = parse_count)]
    memory_budget: Option<u64>,

    /// Output path; `-` for standard output.
    #[arg(long, global = true, default_value = "-")]
    out: String,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// f(n) for lo <= n <= max as `n,value`.
    Sieve(SieveArgs),
    /// The concatenated digit stream (f_y(1))...(f_y(max)).
    Stream(StreamArgs),
    /// Block census of a stream file, or of a stream built on the fly.
    Census(CensusArgs),
    /// In-string and total occurrences of one block.
    Count(CountArgs),
    /// Exponential sums with their predicted main terms.
    Expsum(ExpsumArgs),
    /// Almost-constant-on-primes and weak-additivity diagnostics.
    Classify(ClassifyArgs),
    /// Erdős–Kac statistics of f(n), n <= max.
    Ekstats(EkArgs),
    /// Census of high digits of f(n), n <= max.
    Biasdemo(BiasArgs),
}

#[derive(Args, Debug, Clone)]
struct FnArg {
    /// Built-in name (`Omega`, `omega`, `zero`) or a spec file path.
    #[arg(long = "f", default_value = "omega")]
    f: String,
}

#[derive(Args, Debug, Clone)]
struct StreamShape {
    #[arg(long, default_value_t = 10)]
    base: u32,
    #[arg(long, default_value_t = 0.5)]
    y: f64,
    /// Constant synthetic string length K.
    #[arg(long = "force-K")]
    force_k: Option<u32>,
}

#[derive(Args, Debug)]
struct SieveArgs {
    #[command(flatten)]
    f: FnArg,
    #[arg(long, value_parser = parse_count, default_value = "1")]
    min: u64,
    #[arg(long, value_parser = parse_count)]
    max: u64,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Format {
    Text,
    Binary,
}

#[derive(Args, Debug)]
struct StreamArgs {
    #[command(flatten)]
    f: FnArg,
    #[command(flatten)]
    shape: StreamShape,
    #[arg(long, value_parser = parse_count)]
    max: u64,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Build the windowed stream with this eps instead.
    #[arg(long = "window-eps")]
    window_eps: Option<f64>,
}

#[derive(Args, Debug)]
struct CensusArgs {
    /// Stream file (text or binary); omit to build the stream from `--f`.
    #[arg(long)]
    input: Option<String>,
    #[command(flatten)]
    f: FnArg,
    #[command(flatten)]
    shape: StreamShape,
    #[arg(long, value_parser = parse_count)]
    max: Option<u64>,
    #[arg(long, default_value_t = 1)]
    k: usize,
}

#[derive(Args, Debug)]
struct CountArgs {
    #[command(flatten)]
    f: FnArg,
    #[command(flatten)]
    shape: StreamShape,
    #[arg(long)]
    block: String,
    #[arg(long, value_parser = parse_count)]
    max: Option<u64>,
    #[arg(long = "x-grid")]
    x_grid: Option<String>,
    #[arg(long, default_value_t = 0.1)]
    eps: f64,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Prediction {
    Sd,
    Phase,
}

#[derive(Args, Debug)]
struct ExpsumArgs {
    #[command(flatten)]
    f: FnArg,
    #[arg(long, default_value_t = 10)]
    base: u32,
    #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
    a: i64,
    #[arg(long, default_value_t = 1)]
    m: u32,
    #[arg(long, value_parser = parse_count)]
    max: Option<u64>,
    #[arg(long = "x-grid")]
    x_grid: Option<String>,
    /// Euler product prime bound.
    #[arg(long = "P", value_parser = parse_count, default_value_t = DEFAULT_PRIME_BOUND)]
    p: u64,
    #[arg(long, value_enum, default_value = "sd")]
    prediction: Prediction,
}

#[derive(Args, Debug)]
struct ClassifyArgs {
    #[command(flatten)]
    f: FnArg,
    /// Centre value on primes (default: the spec's c).
    #[arg(long)]
    c: Option<f64>,
    #[arg(long, default_value_t = DEFAULT_DELTA)]
    delta: f64,
    #[arg(long = "eps-grid")]
    eps_grid: Option<String>,
    #[arg(long = "x-grid", default_value = "1e3..1e7")]
    x_grid: String,
}

#[derive(Args, Debug)]
struct EkArgs {
    #[command(flatten)]
    f: FnArg,
    #[arg(long, value_parser = parse_count)]
    max: u64,
}

#[derive(Args, Debug)]
struct BiasArgs {
    #[command(flatten)]
    f: FnArg,
    #[arg(long, default_value_t = 2)]
    base: u32,
    #[arg(long, value_parser = parse_count)]
    max: u64,
    /// Digit positions, 1 = least significant.
    #[arg(long, default_value = "4")]
    positions: String,
}

/// Parses a non-negative integer, allowing scientific notation (`1e8`).
pub fn parse_count(s: &str) -> std::result::Result<u64, String> {
    let t = s.trim().replace('_', "");
    if let Ok(v) = t.parse::<u64>() {
        return Ok(v);
    }
    match t.parse::<f64>() {
        Ok(v) if v >= 0.0 && v.fract() == 0.0 && v <= 9.223_372_036_854_775_807e18 => Ok(v as u64),
        _ => Err(format!("`{s}` is not a non-negative integer")),
    }
}

/// A grid: `a,b,c` lists values, `lo..hi` gives `lo, 10 lo, ...` up to `hi`.
pub fn parse_grid(s: &str) -> Result<Vec<u64>> {
    let cfg = |m: String| Error::Config(format!("bad grid `{s}`: {m}"));
    if let Some((lo, hi)) = s.split_once("..") {
        let lo = parse_count(lo).map_err(cfg)?;
        let hi = parse_count(hi).map_err(cfg)?;
        if lo == 0 || lo > hi {
            return Err(cfg("need 0 < lo <= hi".into()));
        }
        let mut out = vec![lo];
        while let Some(next) = out[out.len() - 1].checked_mul(10).filter(|&v| v <= hi) {
            out.push(next);
        }
        Ok(out)
    } else {
        s.split(',').map(|v| parse_count(v).map_err(cfg)).collect()
    }
}

fn parse_reals(s: &str) -> Result<Vec<f64>> {
    s.split(',')
        .map(|v| {
            v.trim()
                .parse::<f64>()
                .map_err(|_| Error::Config(format!("`{v}` is not a number")))
        })
        .collect()
}

/// The resolved configuration echoed into output headers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunConfig {
    pub subcommand: String,
    pub entries: Vec<(String, String)>,
}

impl RunConfig {
    fn new(subcommand: &str) -> Self {
        RunConfig { subcommand: subcommand.to_string(), entries: Vec::new() }
    }

    fn set(&mut self, key: &str, value: impl ToString) -> &mut Self {
        self.entries.push((key.to_string(), value.to_string()));
        self
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.entries.iter().find(|(k, _)| k == key).map(|(_, v)| v.as_str())
    }

    pub fn header(&self) -> String {
        let mut out = format!("# {PROGRAM} {}\n", self.subcommand);
        for (k, v) in &self.entries {
            let _ = writeln!(out, "# {k}={v}");
        }
        out
    }

    /// Reads the leading `#` block written by [`RunConfig::header`].
    pub fn parse_header(text: &str) -> Result<Self> {
        let mut lines = text.lines().enumerate();
        let err = |line: usize, msg: &str| Error::Parse { line: line + 1, msg: msg.to_string() };
        let subcommand = match lines.next() {
            Some((_, l)) => l
                .strip_prefix(&format!("# {PROGRAM} "))
                .ok_or_else(|| err(0, "missing program header"))?
                .to_string(),
            None => return Err(err(0, "empty input")),
        };
        let mut cfg = RunConfig::new(&subcommand);
        for (i, line) in lines {
            let Some(body) = line.strip_prefix("# ") else { break };
            let (k, v) = body.split_once('=').ok_or_else(|| err(i, "expected key=value"))?;
            cfg.set(k, v);
        }
        Ok(cfg)
    }

    /// Arguments that reproduce this run (without `--out` or `--threads`).
    pub fn to_args(&self) -> Vec<String> {
        let mut args = vec![self.subcommand.clone()];
        for (k, v) in &self.entries {
            if INFO_KEYS.contains(&k.as_str()) {
                continue;
            }
            args.push(format!("--{k}"));
            args.push(v.clone());
        }
        args
    }
}

/// Runs the command line; returns the process exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match execute(&cli) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("{PROGRAM}: {e}");
            e.exit_code()
        }
    }
}

fn execute(cli: &Cli) -> Result<()> {
    let mut exec = ExecConfig::default();
    if let Some(t) = cli.threads {
        if t == 0 {
            return Err(Error::Config("--threads must be at least 1".into()));
        }
        exec = exec.with_threads(t);
    }
    if let Some(b) = cli.memory_budget {
        exec = exec.with_memory_budget(b);
    }
    let bytes = match &cli.command {
        Command::Sieve(a) => sieve_cmd(a, &exec)?,
        Command::Stream(a) => stream_cmd(a, &exec)?,
        Command::Census(a) => census_cmd(a, &exec)?,
        Command::Count(a) => count_cmd(a, &exec)?,
        Command::Expsum(a) => expsum_cmd(a, &exec)?,
        Command::Classify(a) => classify_cmd(a)?,
        Command::Ekstats(a) => ek_cmd(a, &exec)?,
        Command::Biasdemo(a) => bias_cmd(a, &exec)?,
    };
    write_output(&cli.out, &bytes)
}

fn write_output(path: &str, bytes: &[u8]) -> Result<()> {
    if path == "-" {
        let mut out = std::io::stdout().lock();
        out.write_all(bytes)?;
        out.flush()?;
    } else {
        std::fs::write(path, bytes)?;
    }
    Ok(())
}

fn spec_of(arg: &FnArg, cfg: &mut RunConfig) -> Result<AdditiveFunctionSpec> {
    let spec = AdditiveFunctionSpec::resolve(&arg.f).map_err(|e| match e {
        Error::Io(io) => Error::Config(format!("cannot read spec file `{}`: {io}", arg.f)),
        other => other,
    })?;
    cfg.set("f", &arg.f);
    cfg.set("spec", spec.describe());
    Ok(spec)
}

fn base_of(b: u32, cfg: &mut RunConfig) -> Result<Base> {
    let base = Base::new(b)?;
    cfg.set("base", b);
    Ok(base)
}

fn schedule_of(shape: &StreamShape, cfg: &mut RunConfig) -> Result<LengthSchedule> {
    let base = base_of(shape.base, cfg)?;
    cfg.set("y", shape.y);
    match shape.force_k {
        Some(k) => {
            cfg.set("force-K", k);
            cfg.set("synthetic_K", true);
            LengthSchedule::forced(shape.y, base, k)
        }
        None => LengthSchedule::new(shape.y, base),
    }
}

fn sieve_cmd(a: &SieveArgs, exec: &ExecConfig) -> Result<Vec<u8>> {
    let mut cfg = RunConfig::new("sieve");
    let spec = spec_of(&a.f, &mut cfg)?;
    cfg.set("min", a.min).set("max", a.max);
    if a.max < a.min {
        return Err(Error::Config("--max must be at least --min".into()));
    }
    let range = sieve_range(&spec, a.min, a.max + 1, exec)?;
    let mut out = cfg.header();
    out.push_str("n,value\n");
    for (n, v) in range.iter() {
        let _ = writeln!(out, "{n},{v}");
    }
    Ok(out.into_bytes())
}

fn stream_cmd(a: &StreamArgs, exec: &ExecConfig) -> Result<Vec<u8>> {
    let mut cfg = RunConfig::new("stream");
    let spec = spec_of(&a.f, &mut cfg)?;
    let schedule = schedule_of(&a.shape, &mut cfg)?;
    cfg.set("max", a.max);
    let stream = match a.window_eps {
        Some(eps) => {
            cfg.set("window-eps", eps);
            build_window_stream(&spec, eps, schedule.base, a.max, a.shape.force_k, exec)?
        }
        None => build_stream(&spec, &schedule, a.max, exec)?,
    };
    match a.format {
        Format::Binary => encode_binary(&stream, schedule.is_synthetic()),
        Format::Text => {
            cfg.set("format", "text");
            let mut out = cfg.header();
            out.push_str(&stream.to_text());
            out.push('\n');
            Ok(out.into_bytes())
        }
    }
}

fn census_csv(cfg: &RunConfig, c: &BlockCensus) -> String {
    let mut out = cfg.header();
    out.push_str("block,count,frequency\n");
    for (block, n) in c.iter() {
        let freq = if c.positions() == 0 { 0.0 } else { n as f64 / c.positions() as f64 };
        let _ = writeln!(out, "{block},{n},{freq}");
    }
    let _ = writeln!(out, "# positions={}", c.positions());
    if let Ok(chi) = chi_square(c) {
        let _ = writeln!(out, "# chi_square={chi}");
        let _ = writeln!(out, "# chi_square_per_position={}", chi / c.positions() as f64);
    }
    out
}

fn census_cmd(a: &CensusArgs, exec: &ExecConfig) -> Result<Vec<u8>> {
    let mut cfg = RunConfig::new("census");
    let c = match &a.input {
        Some(path) => {
            cfg.set("input", path);
            let bytes = std::fs::read(path)?;
            let (stream, synthetic) = if bytes.starts_with(&MAGIC) {
                decode_binary(&bytes)?
            } else {
                let text = String::from_utf8(bytes)
                    .map_err(|_| Error::Config(format!("{path} is neither text nor binary")))?;
                let b = match header_value(&text, "base") {
                    Some(v) => v
                        .parse()
                        .map_err(|_| Error::Config(format!("bad base `{v}` in {path}")))?,
                    None => a.shape.base,
                };
                let synthetic = header_value(&text, "synthetic_K") == Some("true");
                (parse_text(Base::new(b)?, &text)?, synthetic)
            };
            cfg.set("base", stream.base());
            if synthetic {
                cfg.set("synthetic_K", true);
            }
            cfg.set("k", a.k);
            census(&stream, a.k)?
        }
        None => {
            let max = a
                .max
                .ok_or_else(|| Error::Config("census needs --input or --max".into()))?;
            let spec = spec_of(&a.f, &mut cfg)?;
            let schedule = schedule_of(&a.shape, &mut cfg)?;
            cfg.set("max", max).set("k", a.k);
            stream_census(&spec, &schedule, max, a.k, exec)?
        }
    };
    Ok(census_csv(&cfg, &c).into_bytes())
}

fn grid_of(max: Option<u64>, grid: &Option<String>, cfg: &mut RunConfig) -> Result<Vec<u64>> {
    match (max, grid) {
        (_, Some(g)) => {
            cfg.set("x-grid", g);
            parse_grid(g)
        }
        (Some(m), None) => {
            cfg.set("max", m);
            Ok(vec![m])
        }
        (None, None) => Err(Error::Config("need --max or --x-grid".into())),
    }
}

fn count_cmd(a: &CountArgs, exec: &ExecConfig) -> Result<Vec<u8>> {
    let mut cfg = RunConfig::new("count");
    let spec = spec_of(&a.f, &mut cfg)?;
    let schedule = schedule_of(&a.shape, &mut cfg)?;
    let block = Block::parse(schedule.base, &a.block)?;
    cfg.set("block", &a.block).set("eps", a.eps);
    let grid = grid_of(a.max, &a.x_grid, &mut cfg)?;
    let mut out = cfg.header();
    out.push_str("x,n_star,n_formula,u_part,v_part,boundary_occurrences\n");
    for x in grid {
        let r = count_formula(&spec, &schedule, &block, x, a.eps, exec)?;
        let _ = writeln!(
            out,
            "{},{},{},{},{},{}",
            r.x,
            r.n_star,
            r.n_formula,
            r.u_part,
            r.v_part,
            r.boundary_occurrences()
        );
    }
    Ok(out.into_bytes())
}

fn expsum_cmd(a: &ExpsumArgs, exec: &ExecConfig) -> Result<Vec<u8>> {
    let mut cfg = RunConfig::new("expsum");
    let spec = spec_of(&a.f, &mut cfg)?;
    let base = base_of(a.base, &mut cfg)?;
    cfg.set("a", a.a).set("m", a.m);
    let grid = grid_of(a.max, &a.x_grid, &mut cfg)?;
    let record = exp_sum(&spec, a.a, a.m, base, &grid, exec)?;
    let mut trailer = String::new();
    let preds = match a.prediction {
        Prediction::Sd => {
            cfg.set("prediction", "sd").set("P", a.p);
            let sd_grid: Vec<u64> = grid.iter().map(|&x| x.max(3)).collect();
            let sd = sd_main_term(&spec, a.a, a.m, base, &sd_grid, a.p)?;
            let _ = writeln!(trailer, "# c_prime={},{}", sd.c_prime.re, sd.c_prime.im);
            let _ = writeln!(trailer, "# g_euler={},{}", sd.g_euler.re, sd.g_euler.im);
            let _ = writeln!(trailer, "# gamma_recip={},{}", sd.gamma_recip.re, sd.gamma_recip.im);
            let _ = writeln!(trailer, "# tail_proxy={}", sd.tail_proxy);
            let _ = writeln!(trailer, "# converged={}", sd.converged);
            sd.main_term
        }
        Prediction::Phase => {
            cfg.set("prediction", "phase");
            phase_prediction(spec.c(), a.a, a.m, base, &grid)
        }
    };
    let profile = decay_profile(&record, DecayCovariate::default())?;
    match profile.slope {
        Some(s) => {
            let _ = writeln!(trailer, "# decay_slope={s}");
        }
        None => trailer.push_str("# decay_slope=none\n"),
    }
    let _ = writeln!(trailer, "# decay_verdict={}", profile.verdict.as_str());

    let mut out = cfg.header();
    out.push_str("x,S_re,S_im,S_abs,S_abs_over_x,pred_re,pred_im,pred_abs,ratio_abs\n");
    for ((&x, s), p) in grid.iter().zip(&record.sums).zip(&preds) {
        let (sa, pa) = (s.norm(), p.norm());
        // Left empty when the prediction vanishes.
        let ratio = if pa > 0.0 { (sa / pa).to_string() } else { String::new() };
        let _ = writeln!(
            out,
            "{x},{},{},{sa},{},{},{},{pa},{ratio}",
            s.re,
            s.im,
            sa / x as f64,
            p.re,
            p.im
        );
    }
    out.push_str(&trailer);
    Ok(out.into_bytes())
}

fn classify_cmd(a: &ClassifyArgs) -> Result<Vec<u8>> {
    let mut cfg = RunConfig::new("classify");
    let spec = spec_of(&a.f, &mut cfg)?;
    let c = a.c.unwrap_or_else(|| spec.c());
    let eps_grid = match &a.eps_grid {
        Some(g) => parse_reals(g)?,
        None => DEFAULT_EPS_GRID.to_vec(),
    };
    let eps_text = eps_grid.iter().map(f64::to_string).collect::<Vec<_>>().join(",");
    cfg.set("c", c).set("delta", a.delta).set("eps-grid", eps_text).set("x-grid", &a.x_grid);
    let x_grid = parse_grid(&a.x_grid)?;
    let report = classify(&spec, c, a.delta, &eps_grid, &x_grid)?;
    let mut out = cfg.header();
    out.push_str("x,eps,acp_ratio,weak_product,verdict\n");
    for r in report.rows() {
        let _ = writeln!(out, "{},{},{},{},{}", r.x, r.eps, r.acp_ratio, r.weak_product, r.verdict);
    }
    Ok(out.into_bytes())
}

fn ek_cmd(a: &EkArgs, exec: &ExecConfig) -> Result<Vec<u8>> {
    let mut cfg = RunConfig::new("ekstats");
    let spec = spec_of(&a.f, &mut cfg)?;
    cfg.set("max", a.max);
    let r = ek_stats(&spec, a.max, exec)?;
    let mut out = cfg.header();
    out.push_str("value,count\n");
    for (v, n) in r.histogram.iter() {
        let _ = writeln!(out, "{v},{n}");
    }
    let _ = writeln!(out, "# total={}", r.x);
    let _ = writeln!(out, "# sum={}", r.sum);
    let _ = writeln!(out, "# sum_sq={}", r.sum_sq);
    let _ = writeln!(out, "# mean={}", r.mean);
    let _ = writeln!(out, "# variance={}", r.variance);
    let _ = writeln!(out, "# lnln_x={}", r.lnln_x);
    let _ = writeln!(out, "# prime_moment_A={}", r.moments.a);
    let _ = writeln!(out, "# prime_moment_B={}", r.moments.b);
    for t in 1..=3 {
        let _ = writeln!(
            out,
            "# within_{t}sd={} fraction={}",
            r.within[t - 1],
            r.fraction_within(t)
        );
    }
    Ok(out.into_bytes())
}

fn bias_cmd(a: &BiasArgs, exec: &ExecConfig) -> Result<Vec<u8>> {
    let mut cfg = RunConfig::new("biasdemo");
    let spec = spec_of(&a.f, &mut cfg)?;
    let base = base_of(a.base, &mut cfg)?;
    cfg.set("max", a.max).set("positions", &a.positions);
    let positions = a
        .positions
        .split(',')
        .map(|p| {
            p.trim()
                .parse::<u32>()
                .map_err(|_| Error::Config(format!("bad position `{p}`")))
        })
        .collect::<Result<Vec<_>>>()?;
    let c = bias_demo(&spec, base, a.max, &positions, exec)?;
    Ok(census_csv(&cfg, &c).into_bytes())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_in_scientific_notation() {
        assert_eq!(parse_count("1e8"), Ok(100_000_000));
        assert_eq!(parse_count("1_000"), Ok(1000));
        assert_eq!(parse_count("2.5e1"), Ok(25));
        assert!(parse_count("1.5").is_err());
        assert!(parse_count("-3").is_err());
    }

    #[test]
    fn grids() {
        assert_eq!(parse_grid("1e3..1e6").unwrap(), vec![1000, 10_000, 100_000, 1_000_000]);
        assert_eq!(parse_grid("10,20,30").unwrap(), vec![10, 20, 30]);
        assert!(parse_grid("1e4..1e3").is_err());
    }

    #[test]
    fn header_round_trip() {
        let mut cfg = RunConfig::new("count");
        cfg.set("f", "omega").set("spec", "x").set("block", "01").set("synthetic_K", true);
        let text = cfg.header() + "x,n_star\n1,2\n";
        let back = RunConfig::parse_header(&text).unwrap();
        assert_eq!(back, cfg);
        assert_eq!(back.to_args(), vec!["count", "--f", "omega", "--block", "01"]);
        assert!(RunConfig::parse_header("x,y\n").is_err());
    }
}
