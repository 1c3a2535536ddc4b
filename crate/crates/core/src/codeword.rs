//! Packed binary vectors of length 2^m.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// A binary vector packed 64 coordinates per word, coordinate `j` in bit
/// `j % 64` of word `j / 64`.
///
/// Equality and hashing are bitwise; unused high bits of the last word are
/// always zero.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Codeword {
    len: usize,
    words: Vec<u64>,
}

impl Codeword {
    pub fn zeros(len: usize) -> Self {
        Codeword {
            len,
            words: vec![0; len.div_ceil(64)],
        }
    }

    pub fn ones(len: usize) -> Self {
        let mut c = Codeword {
            len,
            words: vec![u64::MAX; len.div_ceil(64)],
        };
        c.clear_tail();
        c
    }

    /// Builds a codeword from 0/1 values. Any nonzero byte counts as 1.
    pub fn from_bits(bits: &[u8]) -> Self {
        let mut c = Codeword::zeros(bits.len());
        for (j, &b) in bits.iter().enumerate() {
            if b != 0 {
                c.set(j, true);
            }
        }
        c
    }

    /// Parses a string of `0`/`1` characters, coordinate 0 first.
    pub fn from_bit_str(s: &str) -> Result<Self> {
        let mut c = Codeword::zeros(s.len());
        for (j, ch) in s.chars().enumerate() {
            match ch {
                '0' => {}
                '1' => c.set(j, true),
                other => {
                    return Err(Error::config(
                        "codeword",
                        format!("unexpected character {other:?} at position {j}"),
                    ))
                }
            }
        }
        Ok(c)
    }

    pub(crate) fn from_words(len: usize, words: Vec<u64>) -> Self {
        debug_assert_eq!(words.len(), len.div_ceil(64));
        let mut c = Codeword { len, words };
        c.clear_tail();
        c
    }

    /// Incidence vector of `coords` (0-based).
    pub fn from_support(len: usize, coords: &[u32]) -> Self {
        let mut c = Codeword::zeros(len);
        for &j in coords {
            c.set(j as usize, true);
        }
        c
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.len
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn get(&self, j: usize) -> bool {
        debug_assert!(j < self.len);
        (self.words[j >> 6] >> (j & 63)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, j: usize, bit: bool) {
        debug_assert!(j < self.len);
        let mask = 1u64 << (j & 63);
        if bit {
            self.words[j >> 6] |= mask;
        } else {
            self.words[j >> 6] &= !mask;
        }
    }

    #[inline]
    pub fn flip(&mut self, j: usize) {
        debug_assert!(j < self.len);
        self.words[j >> 6] ^= 1u64 << (j & 63);
    }

    pub fn xor_assign(&mut self, other: &Codeword) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= *b;
        }
    }

    pub fn and_assign(&mut self, other: &Codeword) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= *b;
        }
    }

    pub fn complement(&self) -> Codeword {
        let mut c = Codeword {
            len: self.len,
            words: self.words.iter().map(|w| !w).collect(),
        };
        c.clear_tail();
        c
    }

    pub fn weight(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    /// Indices of the one coordinates, ascending.
    pub fn support(&self) -> Vec<u32> {
        let mut out = Vec::with_capacity(self.weight());
        for (wi, &w) in self.words.iter().enumerate() {
            let mut w = w;
            while w != 0 {
                let t = w.trailing_zeros();
                out.push((wi as u32) * 64 + t);
                w &= w - 1;
            }
        }
        out
    }

    pub fn to_bits(&self) -> Vec<u8> {
        (0..self.len).map(|j| self.get(j) as u8).collect()
    }

    /// Lexicographic order on the coordinate sequence `c_0 c_1 ...`.
    pub fn lex_cmp(&self, other: &Codeword) -> Ordering {
        for (a, b) in self.words.iter().zip(&other.words) {
            let diff = a ^ b;
            if diff != 0 {
                let t = diff.trailing_zeros();
                return if (a >> t) & 1 == 0 {
                    Ordering::Less
                } else {
                    Ordering::Greater
                };
            }
        }
        self.len.cmp(&other.len)
    }

    fn clear_tail(&mut self) {
        let rem = self.len & 63;
        if rem != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
    }
}

impl fmt::Display for Codeword {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for j in 0..self.len {
            f.write_str(if self.get(j) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for Codeword {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.len <= 64 {
            write!(f, "Codeword({self})")
        } else {
            write!(f, "Codeword(len={}, weight={})", self.len, self.weight())
        }
    }
}
