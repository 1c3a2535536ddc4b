//! BSC and BI-AWGN channels producing LLR vectors.
//!
//! LLR convention: `log P(obs | 0) - log P(obs | 1)`, positive favours 0.

use std::ops::Deref;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::codeword::Codeword;
use crate::error::{Error, Result};

/// Channel soft output, one real per code coordinate.
#[derive(Clone, Debug, PartialEq)]
pub struct LlrVector(Vec<f64>);

impl LlrVector {
    pub fn new(values: Vec<f64>) -> Result<Self> {
        if let Some(j) = values.iter().position(|v| !v.is_finite()) {
            return Err(Error::config("llr", format!("entry {j} is not finite")));
        }
        Ok(LlrVector(values))
    }

    pub fn into_inner(self) -> Vec<f64> {
        self.0
    }
}

impl Deref for LlrVector {
    type Target = [f64];

    fn deref(&self) -> &[f64] {
        &self.0
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum ChannelSpec {
    /// Binary symmetric channel with crossover probability `p`.
    Bsc { p: f64 },
    /// BPSK over AWGN at `ebn0_db`; `rate` enters the noise variance.
    #[serde(rename = "awgn")]
    BiAwgn { ebn0_db: f64, rate: f64 },
}

impl ChannelSpec {
    pub fn validate(&self) -> Result<()> {
        match *self {
            ChannelSpec::Bsc { p } => {
                hard_llr_magnitude(p)?;
            }
            ChannelSpec::BiAwgn { ebn0_db, rate } => {
                if !ebn0_db.is_finite() {
                    return Err(Error::OutOfRange {
                        field: "ebn0_db",
                        detail: format!("{ebn0_db} is not finite"),
                    });
                }
                if !(rate > 0.0 && rate <= 1.0) {
                    return Err(Error::OutOfRange {
                        field: "rate",
                        detail: format!("{rate} is outside (0, 1]"),
                    });
                }
            }
        }
        Ok(())
    }

    pub fn name(&self) -> &'static str {
        match self {
            ChannelSpec::Bsc { .. } => "bsc",
            ChannelSpec::BiAwgn { .. } => "awgn",
        }
    }

    /// Crossover probability or Eb/N0 in dB.
    pub fn parameter(&self) -> f64 {
        match *self {
            ChannelSpec::Bsc { p } => p,
            ChannelSpec::BiAwgn { ebn0_db, .. } => ebn0_db,
        }
    }
}

/// `ln((1 - p) / p)`, the LLR magnitude of a hard BSC decision.
pub fn hard_llr_magnitude(p: f64) -> Result<f64> {
    if !(p > 0.0 && p < 0.5) {
        return Err(Error::OutOfRange {
            field: "p",
            detail: format!("crossover probability {p} is outside (0, 0.5)"),
        });
    }
    Ok(((1.0 - p) / p).ln())
}

/// Noise variance `1 / (2 R 10^(EbN0/10))`.
pub fn awgn_sigma2(ebn0_db: f64, rate: f64) -> f64 {
    1.0 / (2.0 * rate * 10f64.powf(ebn0_db / 10.0))
}

/// Converts `10 log10(1 / sigma^2)` to Eb/N0 in dB for the given rate.
pub fn snr_db_to_ebn0_db(snr_db: f64, rate: f64) -> f64 {
    snr_db - 10.0 * (2.0 * rate).log10()
}

/// A pair of independent standard normals by the Box-Muller transform.
pub fn box_muller<R: Rng + ?Sized>(rng: &mut R) -> (f64, f64) {
    // 1 - U keeps the logarithm's argument in (0, 1].
    let u1 = 1.0 - rng.gen::<f64>();
    let u2 = rng.gen::<f64>();
    let radius = (-2.0 * u1.ln()).sqrt();
    let angle = std::f64::consts::TAU * u2;
    (radius * angle.cos(), radius * angle.sin())
}

/// Sends `c` through the channel and returns the receiver LLRs.
pub fn transmit<R: Rng + ?Sized>(c: &Codeword, spec: &ChannelSpec, rng: &mut R) -> Result<LlrVector> {
    spec.validate()?;
    let n = c.len();
    let out = match *spec {
        ChannelSpec::Bsc { p } => {
            let mag = hard_llr_magnitude(p)?;
            (0..n)
                .map(|j| {
                    let received = c.get(j) ^ (rng.gen::<f64>() < p);
                    if received {
                        -mag
                    } else {
                        mag
                    }
                })
                .collect()
        }
        ChannelSpec::BiAwgn { ebn0_db, rate } => {
            let sigma2 = awgn_sigma2(ebn0_db, rate);
            let sigma = sigma2.sqrt();
            let mut out = Vec::with_capacity(n);
            while out.len() < n {
                let (z0, z1) = box_muller(rng);
                for z in [z0, z1] {
                    let j = out.len();
                    if j == n {
                        break;
                    }
                    let x = if c.get(j) { -1.0 } else { 1.0 };
                    out.push(2.0 * (x + sigma * z) / sigma2);
                }
            }
            out
        }
    };
    Ok(LlrVector(out))
}
