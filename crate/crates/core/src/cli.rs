//! `rmgraph` command line.
//!
//! Exit codes: 0 on success, 2 for usage or configuration errors, 1 when a
//! run fails.

use std::ffi::OsString;
use std::fs;
use std::io::{BufWriter, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::channel::LlrVector;
use crate::config::{self, Settings};
use crate::decoder::{GraphSearchDecoder, SearchParams};
use crate::error::{Error, Result};
use crate::harness::{csv_row, json_summary, run_point_with, CSV_HEADER, CSV_VERSION_LINE};
use crate::rm_code::{enumerate_min_weight, make_code};

#[derive(Debug, Parser)]
#[command(name = "rmgraph", version, about = "Reed-Muller graph search decoding")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Monte-Carlo sweep; CSV rows on stdout.
    Simulate {
        #[command(flatten)]
        sweep: SweepArgs,
        /// Also write a JSON summary here.
        #[arg(long)]
        json: Option<PathBuf>,
        /// Write one JSON line per trial here.
        #[arg(long)]
        records: Option<PathBuf>,
    },
    /// Decode one LLR vector read from a file.
    Decode(DecodeArgs),
    /// List the minimum-weight codewords found by the shortening tree.
    EnumerateMinweight {
        #[arg(long)]
        r: u32,
        #[arg(long)]
        m: u32,
        /// Drop repeated leaves.
        #[arg(long)]
        dedup: bool,
        /// Print only the number of leaves.
        #[arg(long)]
        count_only: bool,
    },
    /// Decoder BLER next to the ML lower bound, and exact ML with --exact.
    MlBound {
        #[command(flatten)]
        sweep: SweepArgs,
        /// Run exhaustive ML on every trial (small codes only).
        #[arg(long)]
        exact: bool,
    },
    /// Run the built-in invariant checks.
    Selftest,
}

/// Sweep settings; flags override values read from `--config`.
#[derive(Debug, Args)]
struct SweepArgs {
    /// Flat key=value file.
    #[arg(long)]
    config: Option<PathBuf>,
    #[arg(long)]
    r: Option<String>,
    #[arg(long)]
    m: Option<String>,
    /// bsc or awgn.
    #[arg(long)]
    channel: Option<String>,
    /// Crossover probability, comma list allowed.
    #[arg(long)]
    p: Option<String>,
    /// Eb/N0 in dB, comma list allowed.
    #[arg(long = "ebn0-db")]
    ebn0_db: Option<String>,
    #[arg(long)]
    rate: Option<String>,
    #[arg(long)]
    budget: Option<String>,
    #[arg(long)]
    moves: Option<String>,
    #[arg(long)]
    l: Option<String>,
    #[arg(long)]
    lhat: Option<String>,
    #[arg(long)]
    s: Option<String>,
    /// on or none.
    #[arg(long)]
    crc: Option<String>,
    #[arg(long = "crc-terminate")]
    crc_terminate: Option<String>,
    #[arg(long)]
    trials: Option<String>,
    #[arg(long)]
    seed: Option<String>,
    /// A count, or none.
    #[arg(long = "stop-at-errors")]
    stop_at_errors: Option<String>,
    #[arg(long)]
    workers: Option<String>,
    /// Any other key, as key=value. Repeatable.
    #[arg(long = "set", value_name = "KEY=VALUE")]
    set: Vec<String>,
}

impl SweepArgs {
    fn settings(&self) -> Result<Settings> {
        let mut s = match &self.config {
            Some(path) => {
                let text = fs::read_to_string(path)
                    .map_err(|e| Error::config("config", format!("{}: {e}", path.display())))?;
                config::parse_settings(&text)?
            }
            None => Settings::new(),
        };
        let flags = [
            ("r", &self.r),
            ("m", &self.m),
            ("channel", &self.channel),
            ("p", &self.p),
            ("ebn0_db", &self.ebn0_db),
            ("rate", &self.rate),
            ("budget", &self.budget),
            ("moves", &self.moves),
            ("l", &self.l),
            ("lhat", &self.lhat),
            ("s", &self.s),
            ("crc", &self.crc),
            ("crc_terminate", &self.crc_terminate),
            ("trials", &self.trials),
            ("seed", &self.seed),
            ("stop_at_errors", &self.stop_at_errors),
            ("workers", &self.workers),
        ];
        for (key, value) in flags {
            if let Some(v) = value {
                config::set(&mut s, key, v)?;
            }
        }
        for kv in &self.set {
            let (k, v) = kv
                .split_once('=')
                .ok_or_else(|| Error::config("set", format!("expected key=value, found {kv:?}")))?;
            config::set(&mut s, k, v)?;
        }
        // A channel parameter given on the command line replaces the other kind from the file.
        if self.p.is_some() && self.ebn0_db.is_none() {
            s.remove("ebn0_db");
        }
        if self.ebn0_db.is_some() && self.p.is_none() {
            s.remove("p");
        }
        Ok(s)
    }
}

#[derive(Debug, Args)]
struct DecodeArgs {
    #[arg(long)]
    r: u32,
    #[arg(long)]
    m: u32,
    /// Text file, one LLR per line.
    #[arg(long)]
    llr: PathBuf,
    #[arg(long, default_value_t = config::DEFAULT_BUDGET)]
    budget: f64,
    /// Defaults to the budget.
    #[arg(long)]
    moves: Option<usize>,
    #[arg(long, default_value_t = 8)]
    l: usize,
    #[arg(long, default_value_t = 8)]
    lhat: usize,
    #[arg(long, default_value_t = 5)]
    s: usize,
    /// Seed for the random starting codeword.
    #[arg(long, default_value_t = config::DEFAULT_SEED)]
    seed: u64,
}

/// Reads an LLR file: one real per line, blank lines and `#` comments skipped.
pub fn read_llr_file(path: &std::path::Path, expected_len: usize) -> Result<LlrVector> {
    let text = fs::read_to_string(path).map_err(|e| Error::config("llr", format!("{}: {e}", path.display())))?;
    let mut values = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let v: f64 = line
            .parse()
            .map_err(|_| Error::config("llr", format!("line {}: cannot parse {line:?}", i + 1)))?;
        values.push(v);
    }
    if values.len() != expected_len {
        return Err(Error::LengthMismatch {
            what: "LLR file",
            expected: expected_len,
            actual: values.len(),
        });
    }
    LlrVector::new(values)
}

fn simulate(
    sweep: &SweepArgs,
    json: Option<&PathBuf>,
    records: Option<&PathBuf>,
    exact: Option<bool>,
    out: &mut dyn Write,
) -> Result<()> {
    let settings = sweep.settings()?;
    let points = config::build_points(&settings)?;
    let workers = config::workers(&settings)?;
    let mut record_sink = match records {
        Some(path) => Some(BufWriter::new(fs::File::create(path)?)),
        None => None,
    };

    writeln!(out, "{CSV_VERSION_LINE}")?;
    writeln!(out, "# generator: {}", crate::harness::GENERATOR)?;
    writeln!(out, "# workers={workers}")?;
    for pt in &points {
        writeln!(out, "# config: {}", config::echo(pt))?;
    }
    match exact {
        None => writeln!(out, "{CSV_HEADER}")?,
        Some(_) => writeln!(out, "r,m,channel,param,trials,errors,bler,ml_lb,ml_lb_strict,ml_exact,seed")?,
    }

    let mut done = Vec::new();
    for pt in points {
        let stats = run_point_with(&pt, workers, exact.unwrap_or(false), |rec| {
            if let Some(sink) = record_sink.as_mut() {
                serde_json::to_writer(&mut *sink, rec).map_err(std::io::Error::from)?;
                sink.write_all(b"\n")?;
            }
            Ok(())
        })?;
        match exact {
            None => writeln!(out, "{}", csv_row(&pt, &stats))?,
            Some(_) => {
                let t = stats.trials_run as f64;
                let exact_col = stats
                    .ml_exact_errors
                    .map(|e| format!("{:.6e}", e as f64 / t))
                    .unwrap_or_else(|| "na".into());
                writeln!(
                    out,
                    "{},{},{},{},{},{},{:.6e},{:.6e},{:.6e},{},{}",
                    pt.r,
                    pt.m,
                    pt.channel.name(),
                    pt.channel.parameter(),
                    stats.trials_run,
                    stats.block_errors,
                    stats.bler,
                    stats.ml_lb,
                    stats.ml_lb_strict_errors as f64 / t,
                    exact_col,
                    pt.seed
                )?
            }
        }
        out.flush()?;
        done.push((pt, stats));
    }
    if let Some(mut sink) = record_sink {
        sink.flush()?;
    }
    if let Some(path) = json {
        let text = serde_json::to_string_pretty(&json_summary(&done, workers)).map_err(std::io::Error::from)?;
        fs::write(path, text + "\n")?;
    }
    Ok(())
}

fn decode(a: &DecodeArgs, out: &mut dyn Write) -> Result<()> {
    let code = make_code(a.r, a.m)?;
    let y = read_llr_file(&a.llr, code.length())?;
    let mut params = SearchParams::with_budget(a.budget);
    if let Some(n) = a.moves {
        params.max_moves = n;
    }
    params.breadth = a.l;
    params.extra_breadth = a.lhat;
    params.extra_budget = a.s;
    let mut decoder = GraphSearchDecoder::new(&code, params)?;
    let res = decoder.decode(&y, &mut ChaCha8Rng::seed_from_u64(a.seed))?;
    writeln!(out, "codeword {}", res.codeword)?;
    writeln!(out, "metric {}", res.metric)?;
    writeln!(out, "fht_units {}", res.fht_units)?;
    writeln!(out, "moves {}", res.moves)?;
    writeln!(out, "termination {}", res.termination.as_str())?;
    Ok(())
}

fn enumerate(r: u32, m: u32, dedup: bool, count_only: bool, out: &mut dyn Write) -> Result<()> {
    let code = make_code(r, m)?;
    let leaves = enumerate_min_weight(&code, dedup);
    if count_only {
        writeln!(out, "{}", leaves.count())?;
    } else {
        for leaf in leaves {
            writeln!(out, "{leaf}")?;
        }
    }
    Ok(())
}

fn dispatch(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    match cli.command {
        Command::Simulate { sweep, json, records } => simulate(&sweep, json.as_ref(), records.as_ref(), None, out)?,
        Command::Decode(a) => decode(&a, out)?,
        Command::EnumerateMinweight { r, m, dedup, count_only } => enumerate(r, m, dedup, count_only, out)?,
        Command::MlBound { sweep, exact } => simulate(&sweep, None, None, Some(exact), out)?,
        Command::Selftest => {
            let checks = crate::selftest::run_all();
            for c in &checks {
                writeln!(out, "{c}")?;
            }
            let failed = checks.iter().filter(|c| !c.passed).count();
            if failed > 0 {
                writeln!(err, "{failed} selftest check(s) failed")?;
                return Ok(1);
            }
        }
    }
    Ok(0)
}

/// Runs the command line `args` (including the program name) and returns the
/// exit code.
pub fn run_with_io<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { write!(err, "{text}") } else { write!(out, "{text}") };
            return code;
        }
    };
    match dispatch(cli, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            if e.is_config() {
                2
            } else {
                1
            }
        }
    }
}

/// Entry point for the binary.
pub fn main() -> i32 {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with_io(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock())
}
