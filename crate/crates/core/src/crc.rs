//! Bit-serial CRC over information bit vectors.
//!
//! The CRC occupies the last `width` information positions, most significant
//! bit first.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrcConfig {
    pub width: u32,
    /// Normal representation, implicit leading one.
    pub poly: u64,
    pub init: u64,
    /// Reflect both the input bit order and the output register.
    pub reflect: bool,
    pub xorout: u64,
}

impl Default for CrcConfig {
    /// CRC-16/CCITT-FALSE.
    fn default() -> Self {
        CrcConfig {
            width: 16,
            poly: 0x1021,
            init: 0xFFFF,
            reflect: false,
            xorout: 0,
        }
    }
}

impl CrcConfig {
    fn mask(&self) -> u64 {
        if self.width == 64 {
            u64::MAX
        } else {
            (1u64 << self.width) - 1
        }
    }

    /// Checks the register parameters, and when `k` is given, that the CRC
    /// leaves at least one payload bit in a `k`-bit information vector.
    pub fn validate(&self, k: Option<usize>) -> Result<()> {
        if !(4..=32).contains(&self.width) {
            return Err(Error::OutOfRange {
                field: "crc_width",
                detail: format!("{} is outside 4..=32", self.width),
            });
        }
        for (field, value) in [("crc_poly", self.poly), ("crc_init", self.init), ("crc_xorout", self.xorout)] {
            if value > self.mask() {
                return Err(Error::OutOfRange {
                    field,
                    detail: format!("{value:#x} does not fit in {} bits", self.width),
                });
            }
        }
        if let Some(k) = k {
            if self.width as usize > k.saturating_sub(1) {
                return Err(Error::OutOfRange {
                    field: "crc_width",
                    detail: format!("{} leaves no payload in k = {k}", self.width),
                });
            }
        }
        Ok(())
    }

    /// CRC register value of a bit sequence.
    pub fn compute(&self, bits: &[u8]) -> u64 {
        let mask = self.mask();
        let top = 1u64 << (self.width - 1);
        let mut reg = self.init & mask;
        if self.reflect {
            let poly = reflect_bits(self.poly, self.width);
            reg = reflect_bits(reg, self.width);
            for &b in bits {
                let fb = (reg ^ (b as u64 & 1)) & 1;
                reg >>= 1;
                if fb == 1 {
                    reg ^= poly;
                }
            }
        } else {
            for &b in bits {
                let fb = ((reg & top) != 0) as u64 ^ (b as u64 & 1);
                reg = (reg << 1) & mask;
                if fb == 1 {
                    reg ^= self.poly;
                }
            }
        }
        (reg ^ self.xorout) & mask
    }

    fn crc_bits(&self, bits: &[u8]) -> impl Iterator<Item = u8> {
        let value = self.compute(bits);
        let width = self.width;
        (0..width).rev().map(move |t| ((value >> t) & 1) as u8)
    }
}

fn reflect_bits(v: u64, width: u32) -> u64 {
    (0..width).fold(0, |acc, t| acc | (((v >> t) & 1) << (width - 1 - t)))
}

/// Returns `payload || CRC(payload)`; fails unless the result has exactly `k`
/// bits.
pub fn crc_append(payload: &[u8], cfg: &CrcConfig, k: usize) -> Result<Vec<u8>> {
    if payload.len() + cfg.width as usize != k {
        return Err(Error::LengthMismatch {
            what: "CRC payload",
            expected: k.saturating_sub(cfg.width as usize),
            actual: payload.len(),
        });
    }
    let mut out = payload.to_vec();
    out.extend(cfg.crc_bits(payload));
    Ok(out)
}

/// True iff the trailing `width` bits of `info` are the CRC of the rest.
pub fn crc_check(info: &[u8], cfg: &CrcConfig) -> bool {
    let w = cfg.width as usize;
    if info.len() < w {
        return false;
    }
    let (payload, tail) = info.split_at(info.len() - w);
    cfg.crc_bits(payload).zip(tail).all(|(a, &b)| a == (b & 1))
}

/// MSB-first bits of a byte string.
pub fn bytes_to_bits(bytes: &[u8]) -> Vec<u8> {
    bytes
        .iter()
        .flat_map(|&b| (0..8).rev().map(move |t| (b >> t) & 1))
        .collect()
}
