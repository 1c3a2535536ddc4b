//! Flat `key=value` sweep configuration.
//!
//! Pairs are separated by whitespace or newlines, `#` starts a comment. The
//! channel parameter (`p` or `ebn0_db`) may be a comma-separated list; every
//! value becomes one sweep point. [`echo`] prints a point back in the same
//! syntax with every default resolved, so a run can be repeated exactly.

use std::collections::BTreeMap;
use std::str::FromStr;

use crate::channel::ChannelSpec;
use crate::crc::CrcConfig;
use crate::decoder::SearchParams;
use crate::error::{Error, Result};
use crate::harness::SweepPoint;
use crate::rm_code::make_code;

pub type Settings = BTreeMap<String, String>;

pub const KEYS: &[&str] = &[
    "r",
    "m",
    "channel",
    "p",
    "ebn0_db",
    "rate",
    "budget",
    "moves",
    "l",
    "lhat",
    "s",
    "crc",
    "crc_terminate",
    "crc_width",
    "crc_poly",
    "crc_init",
    "crc_reflect",
    "crc_xorout",
    "trials",
    "seed",
    "stop_at_errors",
    "workers",
];

pub const DEFAULT_BUDGET: f64 = 1024.0;
pub const DEFAULT_TRIALS: u64 = 1000;
pub const DEFAULT_SEED: u64 = 1;
pub const DEFAULT_STOP_AT_ERRORS: u64 = 100;

/// Parses `key=value` text. Later assignments of a key replace earlier ones.
pub fn parse_settings(text: &str) -> Result<Settings> {
    let mut out = Settings::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("");
        for token in line.split_whitespace() {
            let (key, value) = token.split_once('=').ok_or_else(|| {
                Error::config(
                    format!("line {}", lineno + 1),
                    format!("expected key=value, found {token:?}"),
                )
            })?;
            set(&mut out, key, value)?;
        }
    }
    Ok(out)
}

/// Inserts one setting after checking the key is known.
pub fn set(settings: &mut Settings, key: &str, value: &str) -> Result<()> {
    if !KEYS.contains(&key) {
        return Err(Error::config(key, "unknown key"));
    }
    settings.insert(key.to_string(), value.to_string());
    Ok(())
}

fn get<T: FromStr>(s: &Settings, key: &str) -> Result<Option<T>> {
    s.get(key)
        .map(|v| {
            v.parse::<T>()
                .map_err(|_| Error::config(key, format!("cannot parse {v:?}")))
        })
        .transpose()
}

fn require<T: FromStr>(s: &Settings, key: &str) -> Result<T> {
    get(s, key)?.ok_or_else(|| Error::config(key, "missing"))
}

fn parse_bool(s: &Settings, key: &str) -> Result<Option<bool>> {
    s.get(key)
        .map(|v| match v.as_str() {
            "true" | "on" | "yes" | "1" => Ok(true),
            "false" | "off" | "no" | "0" => Ok(false),
            other => Err(Error::config(key, format!("expected a boolean, found {other:?}"))),
        })
        .transpose()
}

fn parse_int_auto(s: &Settings, key: &str) -> Result<Option<u64>> {
    s.get(key)
        .map(|v| {
            let parsed = match v.strip_prefix("0x").or_else(|| v.strip_prefix("0X")) {
                Some(hex) => u64::from_str_radix(hex, 16),
                None => v.parse(),
            };
            parsed.map_err(|_| Error::config(key, format!("cannot parse {v:?}")))
        })
        .transpose()
}

fn parse_list(s: &Settings, key: &str) -> Result<Option<Vec<f64>>> {
    s.get(key)
        .map(|v| {
            v.split(',')
                .map(|item| {
                    item.trim()
                        .parse::<f64>()
                        .map_err(|_| Error::config(key, format!("cannot parse {item:?}")))
                })
                .collect()
        })
        .transpose()
}

fn crc_from(s: &Settings, k: usize) -> Result<(Option<CrcConfig>, bool)> {
    let terminate = parse_bool(s, "crc_terminate")?.unwrap_or(false);
    let enabled = match s.get("crc").map(String::as_str) {
        None => terminate,
        Some("none" | "off" | "false") => {
            if terminate {
                return Err(Error::config("crc_terminate", "requires crc to be enabled"));
            }
            false
        }
        Some("on" | "true" | "ccitt") => true,
        Some(other) => return Err(Error::config("crc", format!("expected on or none, found {other:?}"))),
    };
    if !enabled {
        return Ok((None, false));
    }
    let d = CrcConfig::default();
    let cfg = CrcConfig {
        width: get(s, "crc_width")?.unwrap_or(d.width),
        poly: parse_int_auto(s, "crc_poly")?.unwrap_or(d.poly),
        init: parse_int_auto(s, "crc_init")?.unwrap_or(d.init),
        reflect: parse_bool(s, "crc_reflect")?.unwrap_or(d.reflect),
        xorout: parse_int_auto(s, "crc_xorout")?.unwrap_or(d.xorout),
    };
    cfg.validate(Some(k))?;
    Ok((Some(cfg), terminate))
}

/// Builds every sweep point described by `s`.
pub fn build_points(s: &Settings) -> Result<Vec<SweepPoint>> {
    let r: u32 = require(s, "r")?;
    let m: u32 = require(s, "m")?;
    let code = make_code(r, m)?;

    let budget: f64 = get(s, "budget")?.unwrap_or(DEFAULT_BUDGET);
    let (crc, crc_terminate) = crc_from(s, code.dimension())?;
    let mut params = SearchParams::with_budget(budget);
    params.max_moves = get(s, "moves")?.unwrap_or(params.max_moves);
    params.breadth = get(s, "l")?.unwrap_or(params.breadth);
    params.extra_breadth = get(s, "lhat")?.unwrap_or(params.extra_breadth);
    params.extra_budget = get(s, "s")?.unwrap_or(params.extra_budget);
    params.crc = crc;
    params.crc_terminate = crc_terminate;
    params.validate()?;

    let trials = get(s, "trials")?.unwrap_or(DEFAULT_TRIALS);
    let seed = parse_int_auto(s, "seed")?.unwrap_or(DEFAULT_SEED);
    let stop_at_errors = match s.get("stop_at_errors").map(String::as_str) {
        None => Some(DEFAULT_STOP_AT_ERRORS),
        Some("none" | "off") => None,
        Some(_) => Some(require::<u64>(s, "stop_at_errors")?),
    };

    let channel_kind = s.get("channel").map(String::as_str).unwrap_or("awgn");
    let channels: Vec<ChannelSpec> = match channel_kind {
        "bsc" => {
            if s.contains_key("ebn0_db") {
                return Err(Error::config("ebn0_db", "not a BSC parameter"));
            }
            parse_list(s, "p")?
                .ok_or_else(|| Error::config("p", "missing for channel=bsc"))?
                .into_iter()
                .map(|p| ChannelSpec::Bsc { p })
                .collect()
        }
        "awgn" | "biawgn" => {
            if s.contains_key("p") {
                return Err(Error::config("p", "not an AWGN parameter"));
            }
            let rate = get(s, "rate")?.unwrap_or_else(|| code.rate());
            parse_list(s, "ebn0_db")?
                .ok_or_else(|| Error::config("ebn0_db", "missing for channel=awgn"))?
                .into_iter()
                .map(|ebn0_db| ChannelSpec::BiAwgn { ebn0_db, rate })
                .collect()
        }
        other => return Err(Error::config("channel", format!("expected bsc or awgn, found {other:?}"))),
    };

    channels
        .into_iter()
        .map(|channel| {
            let pt = SweepPoint {
                r,
                m,
                channel,
                params: params.clone(),
                trials,
                seed,
                stop_at_errors,
            };
            pt.validate()?;
            Ok(pt)
        })
        .collect()
}

pub fn workers(s: &Settings) -> Result<usize> {
    let w = get(s, "workers")?.unwrap_or_else(|| {
        std::thread::available_parallelism()
            .map(|n| n.get())
            .unwrap_or(1)
    });
    if w == 0 {
        return Err(Error::config("workers", "must be at least 1"));
    }
    Ok(w)
}

/// The fully resolved configuration of `pt` in `key=value` form.
pub fn echo(pt: &SweepPoint) -> String {
    let p = &pt.params;
    let mut parts = vec![format!("r={}", pt.r), format!("m={}", pt.m)];
    match pt.channel {
        ChannelSpec::Bsc { p } => parts.push(format!("channel=bsc p={p}")),
        ChannelSpec::BiAwgn { ebn0_db, rate } => {
            parts.push(format!("channel=awgn ebn0_db={ebn0_db} rate={rate}"))
        }
    }
    parts.push(format!(
        "budget={} moves={} l={} lhat={} s={}",
        p.budget, p.max_moves, p.breadth, p.extra_breadth, p.extra_budget
    ));
    match &p.crc {
        None => parts.push("crc=none".into()),
        Some(c) => parts.push(format!(
            "crc=on crc_terminate={} crc_width={} crc_poly={:#x} crc_init={:#x} crc_reflect={} crc_xorout={:#x}",
            p.crc_terminate, c.width, c.poly, c.init, c.reflect, c.xorout
        )),
    }
    parts.push(format!("trials={} seed={}", pt.trials, pt.seed));
    parts.push(match pt.stop_at_errors {
        Some(e) => format!("stop_at_errors={e}"),
        None => "stop_at_errors=none".into(),
    });
    parts.join(" ")
}
