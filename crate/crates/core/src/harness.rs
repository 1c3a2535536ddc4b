//! Monte-Carlo driver: BLER, ML lower bound and average complexity per sweep
//! point.
//!
//! Every trial draws from its own generator substream, and records are folded
//! in trial order, so the statistics do not depend on the worker count.

use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::channel::{transmit, ChannelSpec};
use crate::crc::crc_append;
use crate::decoder::{metric, random_bits, GraphSearchDecoder, SearchParams, Termination};
use crate::error::{Error, Result};
use crate::oracle::ml_decode_bruteforce;
use crate::rm_code::{make_code, RmCode};

/// Odd multiplier separating per-trial substreams.
pub const SUBSTREAM_MULTIPLIER: u64 = 0x9E37_79B9_7F4A_7C15;

pub const GENERATOR: &str = "ChaCha8Rng (rand_chacha 0.3), per-trial seed = seed ^ (trial * 0x9E3779B97F4A7C15)";

/// Trials scheduled per parallel batch.
const BATCH: u64 = 256;

/// Generator for trial `trial` of a run seeded with `seed`.
pub fn trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed ^ trial.wrapping_mul(SUBSTREAM_MULTIPLIER))
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SweepPoint {
    pub r: u32,
    pub m: u32,
    pub channel: ChannelSpec,
    pub params: SearchParams,
    pub trials: u64,
    pub seed: u64,
    pub stop_at_errors: Option<u64>,
}

impl SweepPoint {
    pub fn validate(&self) -> Result<RmCode> {
        let code = make_code(self.r, self.m)?;
        self.channel.validate()?;
        self.params.validate()?;
        if let Some(cfg) = &self.params.crc {
            cfg.validate(Some(code.dimension()))?;
        }
        if self.trials == 0 {
            return Err(Error::OutOfRange {
                field: "trials",
                detail: "at least one trial is required".into(),
            });
        }
        Ok(code)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TrialRecord {
    pub trial: u64,
    pub block_error: bool,
    /// Wrong output scoring at least the transmitted codeword.
    pub ml_lb_error: bool,
    /// Wrong output scoring strictly above the transmitted codeword.
    pub ml_lb_strict: bool,
    pub decoded_metric: f64,
    pub transmitted_metric: f64,
    pub fht_units: f64,
    pub moves: usize,
    pub termination: Termination,
    /// Exhaustive ML decision was wrong; only set in exact mode.
    pub ml_exact_error: Option<bool>,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct TerminationCounts {
    pub budget_exhausted: u64,
    pub max_moves: u64,
    pub neighbors_exhausted: u64,
    pub crc_hit: u64,
}

impl TerminationCounts {
    fn bump(&mut self, t: Termination) {
        match t {
            Termination::BudgetExhausted => self.budget_exhausted += 1,
            Termination::MaxMoves => self.max_moves += 1,
            Termination::NeighborsExhausted => self.neighbors_exhausted += 1,
            Termination::CrcHit => self.crc_hit += 1,
        }
    }

    fn merge(&mut self, o: &TerminationCounts) {
        self.budget_exhausted += o.budget_exhausted;
        self.max_moves += o.max_moves;
        self.neighbors_exhausted += o.neighbors_exhausted;
        self.crc_hit += o.crc_hit;
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PointStats {
    pub trials_run: u64,
    pub block_errors: u64,
    pub bler: f64,
    pub ml_lb_errors: u64,
    /// Lower bound on the ML block error rate.
    pub ml_lb: f64,
    /// Same bound counting only strictly better wrong outputs.
    pub ml_lb_strict_errors: u64,
    pub avg_fht_units: f64,
    pub max_fht_units: f64,
    pub avg_moves: f64,
    pub terminations: TerminationCounts,
    pub ml_exact_errors: Option<u64>,
    pub wall_time_s: f64,
}

/// Merge-only tally of trial records.
#[derive(Clone, Debug, Default)]
pub struct StatsAccumulator {
    trials: u64,
    errors: u64,
    ml_lb: u64,
    ml_lb_strict: u64,
    units: f64,
    max_units: f64,
    moves: u64,
    terminations: TerminationCounts,
    ml_exact: Option<u64>,
}

impl StatsAccumulator {
    pub fn push(&mut self, rec: &TrialRecord) {
        self.trials += 1;
        self.errors += rec.block_error as u64;
        self.ml_lb += rec.ml_lb_error as u64;
        self.ml_lb_strict += rec.ml_lb_strict as u64;
        self.units += rec.fht_units;
        self.max_units = self.max_units.max(rec.fht_units);
        self.moves += rec.moves as u64;
        self.terminations.bump(rec.termination);
        if let Some(e) = rec.ml_exact_error {
            *self.ml_exact.get_or_insert(0) += e as u64;
        }
    }

    pub fn merge(&mut self, o: &StatsAccumulator) {
        self.trials += o.trials;
        self.errors += o.errors;
        self.ml_lb += o.ml_lb;
        self.ml_lb_strict += o.ml_lb_strict;
        self.units += o.units;
        self.max_units = self.max_units.max(o.max_units);
        self.moves += o.moves;
        self.terminations.merge(&o.terminations);
        if let Some(e) = o.ml_exact {
            *self.ml_exact.get_or_insert(0) += e;
        }
    }

    pub fn errors(&self) -> u64 {
        self.errors
    }

    pub fn finish(&self, wall_time_s: f64) -> PointStats {
        let t = self.trials.max(1) as f64;
        PointStats {
            trials_run: self.trials,
            block_errors: self.errors,
            bler: self.errors as f64 / t,
            ml_lb_errors: self.ml_lb,
            ml_lb: self.ml_lb as f64 / t,
            ml_lb_strict_errors: self.ml_lb_strict,
            avg_fht_units: self.units / t,
            max_fht_units: self.max_units,
            avg_moves: self.moves as f64 / t,
            terminations: self.terminations,
            ml_exact_errors: self.ml_exact,
            wall_time_s,
        }
    }
}

/// `(tie-inclusive, strict)` ML-error certificates for one trial: a wrong
/// output whose metric reaches the transmitted codeword's proves that an ML
/// decoder errs too (with adversarial tie-breaking for the first flag).
pub fn ml_lower_bound_events(block_error: bool, decoded_metric: f64, transmitted_metric: f64) -> (bool, bool) {
    (
        block_error && decoded_metric >= transmitted_metric,
        block_error && decoded_metric > transmitted_metric,
    )
}

fn trial_with_decoder(
    code: &RmCode,
    point: &SweepPoint,
    decoder: &mut GraphSearchDecoder<'_>,
    trial: u64,
    exact: bool,
) -> Result<TrialRecord> {
    let mut rng = trial_rng(point.seed, trial);
    let k = code.dimension();
    let info = match &point.params.crc {
        Some(cfg) => crc_append(&random_bits(k - cfg.width as usize, &mut rng), cfg, k)?,
        None => random_bits(k, &mut rng),
    };
    let sent = code.encode(&info)?;
    let y = transmit(&sent, &point.channel, &mut rng)?;
    let res = decoder.decode(&y, &mut rng)?;

    let block_error = res.codeword != sent;
    let transmitted_metric = metric(&sent, &y)?;
    // Recomputed from scratch so an exact tie is seen as a tie.
    let decoded_metric = metric(&res.codeword, &y)?;
    let (ml_lb_error, ml_lb_strict) = ml_lower_bound_events(block_error, decoded_metric, transmitted_metric);
    let ml_exact_error = if exact {
        let (ml, _) = ml_decode_bruteforce(code, &y)?;
        Some(ml != sent)
    } else {
        None
    };
    Ok(TrialRecord {
        trial,
        block_error,
        ml_lb_error,
        ml_lb_strict,
        decoded_metric,
        transmitted_metric,
        fht_units: res.fht_units,
        moves: res.moves,
        termination: res.termination,
        ml_exact_error,
    })
}

/// Runs trial `trial_index` of `point` on its own substream.
pub fn run_trial(point: &SweepPoint, trial_index: u64) -> Result<TrialRecord> {
    let code = point.validate()?;
    let mut decoder = GraphSearchDecoder::new(&code, point.params.clone())?;
    trial_with_decoder(&code, point, &mut decoder, trial_index, false)
}

/// Runs a sweep point on `workers` threads.
pub fn run_point(point: &SweepPoint, workers: usize) -> Result<PointStats> {
    run_point_with(point, workers, false, |_| Ok(()))
}

/// Like [`run_point`], additionally handing every kept record, in trial order,
/// to `on_record`. With `exact`, each trial is also decoded by exhaustive ML.
pub fn run_point_with<F>(point: &SweepPoint, workers: usize, exact: bool, mut on_record: F) -> Result<PointStats>
where
    F: FnMut(&TrialRecord) -> Result<()>,
{
    if workers == 0 {
        return Err(Error::OutOfRange {
            field: "workers",
            detail: "at least one worker is required".into(),
        });
    }
    let code = point.validate()?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .map_err(|e| Error::ResourceCap(format!("thread pool: {e}")))?;

    let started = Instant::now();
    let mut acc = StatsAccumulator::default();
    let mut next = 0;
    'batches: while next < point.trials {
        let end = (next + BATCH).min(point.trials);
        let records: Vec<Result<TrialRecord>> = pool.install(|| {
            (next..end)
                .into_par_iter()
                .map_init(
                    || GraphSearchDecoder::new(&code, point.params.clone()).expect("validated"),
                    |decoder, t| trial_with_decoder(&code, point, decoder, t, exact),
                )
                .collect()
        });
        for rec in records {
            let rec = rec?;
            acc.push(&rec);
            on_record(&rec)?;
            if point.stop_at_errors.is_some_and(|cap| acc.errors() >= cap) {
                break 'batches;
            }
        }
        next = end;
    }
    Ok(acc.finish(started.elapsed().as_secs_f64()))
}

pub const CSV_VERSION_LINE: &str = "# rmgraph sweep csv v1";
pub const CSV_HEADER: &str =
    "r,m,channel,param,budget_L,l,lhat,s,crc,trials,errors,bler,ml_lb,avg_units,avg_moves,seed";

fn crc_label(params: &SearchParams) -> String {
    match &params.crc {
        None => "none".into(),
        Some(cfg) => format!(
            "w{}:{:#x}{}",
            cfg.width,
            cfg.poly,
            if params.crc_terminate { ":term" } else { "" }
        ),
    }
}

/// One CSV row matching [`CSV_HEADER`].
pub fn csv_row(point: &SweepPoint, stats: &PointStats) -> String {
    let p = &point.params;
    format!(
        "{},{},{},{},{},{},{},{},{},{},{},{:.6e},{:.6e},{:.4},{:.4},{}",
        point.r,
        point.m,
        point.channel.name(),
        point.channel.parameter(),
        p.budget,
        p.breadth,
        p.extra_breadth,
        p.extra_budget,
        crc_label(p),
        stats.trials_run,
        stats.block_errors,
        stats.bler,
        stats.ml_lb,
        stats.avg_fht_units,
        stats.avg_moves,
        point.seed,
    )
}

/// JSON summary of a run: configuration echo, generator metadata and results.
pub fn json_summary(points: &[(SweepPoint, PointStats)], workers: usize) -> serde_json::Value {
    serde_json::json!({
        "format": "rmgraph-sweep",
        "version": 1,
        "generator": GENERATOR,
        "workers": workers,
        "points": points
            .iter()
            .map(|(pt, st)| serde_json::json!({ "config": pt, "stats": st }))
            .collect::<Vec<_>>(),
    })
}
