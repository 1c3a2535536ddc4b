//! Fast Hadamard transform and the child heuristics of the shortening tree.

use serde::Serialize;

use crate::error::{Error, Result};

/// In-place `v <- v * H` with `H = [[1, 1], [1, -1]]^{(x) t}`, computed in
/// `t` butterfly stages.
pub fn fht_in_place(v: &mut [f64]) -> Result<()> {
    let n = v.len();
    if !n.is_power_of_two() {
        return Err(Error::NotPowerOfTwo {
            what: "transform input",
            len: n,
        });
    }
    let mut h = 1;
    while h < n {
        for block in v.chunks_exact_mut(2 * h) {
            let (lo, hi) = block.split_at_mut(h);
            for (a, b) in lo.iter_mut().zip(hi.iter_mut()) {
                let (x, y) = (*a, *b);
                *a = x + y;
                *b = x - y;
            }
        }
        h <<= 1;
    }
    Ok(())
}

pub fn fht(v: &[f64]) -> Result<Vec<f64>> {
    let mut out = v.to_vec();
    fht_in_place(&mut out)?;
    Ok(out)
}

/// Turns the transform `h` of a length-`l` segment into the `2l - 2` support
/// sums of the half-weight first-order patterns, in pattern order.
///
/// Pattern `i < l - 1` is column `i + 1` of `H` read as `(1 - H)/2`, so its
/// sum is `(h_0 - h_{i+1}) / 2`; its complement sums to `(h_0 + h_{i+1}) / 2`.
pub fn heuristics_from_spectrum(h: &[f64], out: &mut Vec<f64>) {
    let total = h[0];
    out.clear();
    out.extend(h[1..].iter().map(|&x| 0.5 * (total - x)));
    out.extend(h[1..].iter().map(|&x| 0.5 * (total + x)));
}

/// Support sums `a_i = sum_{j : c_i[j] = 1} segment_j` for every half-weight
/// first-order pattern `c_i`, using one transform.
///
/// These are the plain sums; the factor 2 of the output-metric identity is
/// applied by the caller.
pub fn child_heuristics(segment: &[f64]) -> Result<Vec<f64>> {
    if segment.len() < 2 {
        return Err(Error::OutOfRange {
            field: "segment length",
            detail: format!("{} is below the minimum of 2", segment.len()),
        });
    }
    let h = fht(segment)?;
    let mut out = Vec::with_capacity(2 * h.len() - 2);
    heuristics_from_spectrum(&h, &mut out);
    Ok(out)
}

/// Normalized transform cost: a length-`l` transform costs `l / n` units.
pub fn fht_unit_cost(lengths: &[usize], n: usize) -> f64 {
    lengths.iter().map(|&l| l as f64).sum::<f64>() / n as f64
}

/// Tally of transforms run by one decoder instance.
///
/// Units are kept as a total transformed length so the sum is exact; the raw
/// call count per length is kept alongside for inspection.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct FhtCounter {
    n_ref: usize,
    total_len: u64,
    /// `calls[t]` counts transforms of length `2^t`.
    calls: [u64; 17],
}

impl FhtCounter {
    pub fn new(n_ref: usize) -> Self {
        FhtCounter {
            n_ref,
            total_len: 0,
            calls: [0; 17],
        }
    }

    pub fn record(&mut self, len: usize) {
        self.total_len += len as u64;
        self.calls[len.trailing_zeros() as usize] += 1;
    }

    /// Runs a counted in-place transform.
    pub fn fht(&mut self, v: &mut [f64]) -> Result<()> {
        fht_in_place(v)?;
        self.record(v.len());
        Ok(())
    }

    pub fn units(&self) -> f64 {
        self.total_len as f64 / self.n_ref as f64
    }

    pub fn calls_by_length(&self) -> impl Iterator<Item = (usize, u64)> + '_ {
        self.calls
            .iter()
            .enumerate()
            .filter(|(_, &c)| c > 0)
            .map(|(t, &c)| (1usize << t, c))
    }

    pub fn reset(&mut self) {
        self.total_len = 0;
        self.calls = [0; 17];
    }
}
