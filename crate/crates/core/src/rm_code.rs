//! Reed-Muller code construction, encoding, and the minimum-weight codeword
//! machinery used by the graph search decoder.
//!
//! Coordinate `j` of a length-`2^m` word is the point of EG(m, 2) whose
//! variable `v_t` equals bit `t - 1` of `j` (so `v_1` is the least significant
//! bit). With this ordering column `i` of the Sylvester-Hadamard matrix maps to
//! a first-order codeword without any permutation.
//!
//! A codeword is stored only as its evaluation vector. Encoding goes through
//! the binary Moebius transform from the algebraic normal form, so the
//! generator matrix never has to be materialized for long codes; `generator`
//! builds it on request with the recursive `|u|u+v|` block construction.

use std::collections::HashSet;
use std::fmt;

use crate::codeword::Codeword;
use crate::error::{Error, Result};

pub const MAX_LOG_LENGTH: u32 = 16;

/// The binary Reed-Muller code R(r, m).
#[derive(Clone, Debug)]
pub struct RmCode {
    r: u32,
    m: u32,
    n: usize,
    /// Monomial variable masks in graded order, one per information bit.
    monomials: Vec<u32>,
}

impl RmCode {
    /// Builds R(r, m). Fails when `r > m` or `m > 16`.
    pub fn new(r: u32, m: u32) -> Result<Self> {
        if m > MAX_LOG_LENGTH {
            return Err(Error::OutOfRange {
                field: "m",
                detail: format!("{m} exceeds the maximum log-length {MAX_LOG_LENGTH}"),
            });
        }
        if r > m {
            return Err(Error::OutOfRange {
                field: "r",
                detail: format!("order {r} exceeds log-length {m}"),
            });
        }
        Ok(RmCode {
            r,
            m,
            n: 1usize << m,
            monomials: graded_monomials(r, m),
        })
    }

    pub fn order(&self) -> u32 {
        self.r
    }

    pub fn log_length(&self) -> u32 {
        self.m
    }

    pub fn length(&self) -> usize {
        self.n
    }

    pub fn dimension(&self) -> usize {
        self.monomials.len()
    }

    pub fn min_distance(&self) -> usize {
        1 << (self.m - self.r)
    }

    /// Information rate k / n.
    pub fn rate(&self) -> f64 {
        self.dimension() as f64 / self.n as f64
    }

    /// Variable masks of the generator rows. Bit `t - 1` set means `v_t` is a
    /// factor of the monomial.
    pub fn monomials(&self) -> &[u32] {
        &self.monomials
    }

    /// Generator row `i`: the evaluation vector of monomial `i`.
    pub fn generator_row(&self, i: usize) -> Codeword {
        monomial_row(self.monomials[i], self.n)
    }

    /// The full k x n generator matrix, built recursively from
    /// `G(r, m) = [[G(r, m-1), G(r, m-1)], [0, G(r-1, m-1)]]` and then put
    /// into graded monomial order.
    pub fn generator(&self) -> Vec<Codeword> {
        let mut rows = plotkin_rows(self.r, self.m);
        rows.sort_by(|a, b| graded_cmp(a.0, b.0));
        rows.into_iter().map(|(_, row)| row).collect()
    }

    /// GF(2) combination of the generator rows selected by `info`.
    pub fn encode(&self, info: &[u8]) -> Result<Codeword> {
        if info.len() != self.dimension() {
            return Err(Error::LengthMismatch {
                what: "information vector",
                expected: self.dimension(),
                actual: info.len(),
            });
        }
        let mut anf = Codeword::zeros(self.n);
        for (&mask, &bit) in self.monomials.iter().zip(info) {
            if bit & 1 == 1 {
                anf.set(mask as usize, true);
            }
        }
        moebius_in_place(&mut anf);
        Ok(anf)
    }

    /// Recovers the information bits of a codeword of this code.
    ///
    /// The coefficient of monomial `S` is `XOR_{x subset of S} c(x)`, so only
    /// the points of weight at most `r` are read.
    pub fn info_bits(&self, c: &Codeword) -> Vec<u8> {
        debug_assert_eq!(c.len(), self.n);
        self.monomials
            .iter()
            .map(|&mask| {
                let mut acc = 0u8;
                let mut sub = mask;
                loop {
                    acc ^= c.get(sub as usize) as u8;
                    if sub == 0 {
                        break;
                    }
                    sub = (sub - 1) & mask;
                }
                acc
            })
            .collect()
    }

    /// True iff `c` has the right length and no monomial of degree above `r`
    /// in its algebraic normal form.
    pub fn contains(&self, c: &Codeword) -> bool {
        if c.len() != self.n {
            return false;
        }
        let mut anf = c.clone();
        moebius_in_place(&mut anf);
        anf.support()
            .into_iter()
            .all(|mask| mask.count_ones() <= self.r)
    }

    /// Number of codewords of minimum weight `2^(m-r)`:
    /// `2^r * prod_{i=0}^{m-r-1} (2^(m-i) - 1) / (2^(m-r-i) - 1)`.
    pub fn min_weight_count(&self) -> u128 {
        // The product is the Gaussian binomial [m choose r]_2; accumulating it
        // one factor pair at a time keeps every partial value an integer.
        let mut gauss: u128 = 1;
        for j in 0..(self.m - self.r) {
            gauss = gauss * ((1u128 << (self.m - j)) - 1) / ((1u128 << (j + 1)) - 1);
        }
        gauss << self.r
    }
}

impl fmt::Display for RmCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "R({}, {}) [n={}, k={}, d={}]",
            self.r,
            self.m,
            self.n,
            self.dimension(),
            self.min_distance()
        )
    }
}

/// Shorthand for [`RmCode::new`].
pub fn make_code(r: u32, m: u32) -> Result<RmCode> {
    RmCode::new(r, m)
}

fn graded_cmp(a: u32, b: u32) -> std::cmp::Ordering {
    a.count_ones().cmp(&b.count_ones()).then_with(|| {
        // Lexicographic order of the ascending variable lists: the first
        // differing variable decides, and the mask holding the smaller
        // variable comes first.
        let diff = a ^ b;
        if diff == 0 {
            std::cmp::Ordering::Equal
        } else if a & (1 << diff.trailing_zeros()) != 0 {
            std::cmp::Ordering::Less
        } else {
            std::cmp::Ordering::Greater
        }
    })
}

fn graded_monomials(r: u32, m: u32) -> Vec<u32> {
    let mut masks: Vec<u32> = (0u32..(1 << m)).filter(|s| s.count_ones() <= r).collect();
    masks.sort_by(|&a, &b| graded_cmp(a, b));
    masks
}

fn monomial_row(mask: u32, n: usize) -> Codeword {
    let mut row = Codeword::zeros(n);
    for j in 0..n {
        if (j as u32) & mask == mask {
            row.set(j, true);
        }
    }
    row
}

fn plotkin_rows(r: u32, m: u32) -> Vec<(u32, Codeword)> {
    if m == 0 {
        return vec![(0, Codeword::ones(1))];
    }
    let half = 1usize << (m - 1);
    let mut rows: Vec<(u32, Codeword)> = plotkin_rows(r.min(m - 1), m - 1)
        .into_iter()
        .map(|(mask, u)| {
            let mut row = Codeword::zeros(2 * half);
            for j in u.support() {
                row.set(j as usize, true);
                row.set(j as usize + half, true);
            }
            (mask, row)
        })
        .collect();
    if r >= 1 {
        rows.extend(plotkin_rows(r - 1, m - 1).into_iter().map(|(mask, v)| {
            let mut row = Codeword::zeros(2 * half);
            for j in v.support() {
                row.set(j as usize + half, true);
            }
            (mask | 1 << (m - 1), row)
        }));
    }
    rows
}

/// Binary Moebius transform: `out[x] = XOR_{s subset of x} in[s]`. It is an
/// involution, mapping ANF coefficients to evaluations and back.
pub(crate) fn moebius_in_place(c: &mut Codeword) {
    const LOW: [u64; 6] = [
        0x5555_5555_5555_5555,
        0x3333_3333_3333_3333,
        0x0F0F_0F0F_0F0F_0F0F,
        0x00FF_00FF_00FF_00FF,
        0x0000_FFFF_0000_FFFF,
        0x0000_0000_FFFF_FFFF,
    ];
    let n = c.len();
    let mut words = c.words().to_vec();
    let mut s = 1usize;
    while s < n && s < 64 {
        let low = LOW[s.trailing_zeros() as usize];
        for w in words.iter_mut() {
            *w ^= (*w & low) << s;
        }
        s <<= 1;
    }
    let mut stride = 1usize;
    while stride * 64 < n {
        for w in 0..words.len() {
            if w & stride != 0 {
                words[w] ^= words[w - stride];
            }
        }
        stride <<= 1;
    }
    *c = Codeword::from_words(n, words);
}

/// Parity of `column & j`: entry `(j, column)` of the Sylvester-Hadamard
/// matrix is `(-1)^parity`.
#[inline]
pub(crate) fn hadamard_bit(column: usize, j: usize) -> bool {
    (column & j).count_ones() & 1 == 1
}

/// Bit `j` of half-weight first-order pattern `index` in a space of length
/// `len`. Indices `0..len-1` are Hadamard columns `1..len`, the next `len-1`
/// are their complements.
#[inline]
pub(crate) fn halfweight_bit(index: usize, len: usize, j: usize) -> bool {
    if index < len - 1 {
        hadamard_bit(index + 1, j)
    } else {
        !hadamard_bit(index - (len - 1) + 1, j)
    }
}

/// All `2^(m+1) - 2` codewords of weight `2^(m-1)` in R(1, m).
///
/// Entries `0..n-1` come from Sylvester-Hadamard columns `2..n` through
/// `c_j = (1 - H_{j,i}) / 2`; entries `n-1..2n-2` are their complements in
/// the same column order.
pub fn first_order_halfweight(m: u32) -> Vec<Codeword> {
    let n = 1usize << m;
    if m == 0 {
        return Vec::new();
    }
    (0..2 * n - 2)
        .map(|idx| {
            let mut c = Codeword::zeros(n);
            for j in 0..n {
                if halfweight_bit(idx, n, j) {
                    c.set(j, true);
                }
            }
            c
        })
        .collect()
}

/// A strictly increasing set of coordinates whose size is a power of two.
/// Indices are 0-based.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CoordSet(Vec<u32>);

impl CoordSet {
    pub fn new(coords: Vec<u32>) -> Result<Self> {
        if !coords.len().is_power_of_two() {
            return Err(Error::NotPowerOfTwo {
                what: "coordinate set",
                len: coords.len(),
            });
        }
        if coords.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::config(
                "coordinate set",
                "coordinates must be strictly increasing",
            ));
        }
        Ok(CoordSet(coords))
    }

    pub fn full(n: usize) -> Self {
        CoordSet((0..n as u32).collect())
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Coordinates numbered from 1, as in the usual drawing of the tree.
    pub fn one_based(&self) -> Vec<u32> {
        self.0.iter().map(|&j| j + 1).collect()
    }

    pub fn to_codeword(&self, n: usize) -> Codeword {
        Codeword::from_support(n, &self.0)
    }

    /// The coordinates retained by half-weight pattern `index`.
    pub fn child(&self, index: usize) -> CoordSet {
        CoordSet(restrict(&self.0, index))
    }

    /// All `2l - 2` children in half-weight pattern order.
    pub fn children(&self) -> Vec<CoordSet> {
        let l = self.len();
        if l < 2 {
            return Vec::new();
        }
        (0..2 * l - 2).map(|i| self.child(i)).collect()
    }
}

impl fmt::Display for CoordSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.one_based().iter().map(u32::to_string).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

/// Keeps `coords[j]` for every local position `j` where half-weight pattern
/// `index` is one.
pub(crate) fn restrict(coords: &[u32], index: usize) -> Vec<u32> {
    let len = coords.len();
    coords
        .iter()
        .enumerate()
        .filter(|&(j, _)| halfweight_bit(index, len, j))
        .map(|(_, &c)| c)
        .collect()
}

/// Depth-first walk over the leaves of the shortening tree.
///
/// A node of size `l` has `2l - 2` children, one per half-weight first-order
/// pattern restricted to its coordinates; nodes of size `2^(m-r)` are leaves
/// and carry the support of a minimum-weight codeword. Without deduplication
/// the same support is reached along many paths.
pub struct MinWeightLeaves {
    n: usize,
    leaf_len: usize,
    stack: Vec<(CoordSet, usize)>,
    seen: Option<HashSet<Codeword>>,
}

impl Iterator for MinWeightLeaves {
    type Item = CoordSet;

    fn next(&mut self) -> Option<CoordSet> {
        while let Some((node, next_child)) = self.stack.last_mut() {
            if node.len() == self.leaf_len {
                let (leaf, _) = self.stack.pop().expect("non-empty stack");
                if let Some(seen) = self.seen.as_mut() {
                    if !seen.insert(leaf.to_codeword(self.n)) {
                        continue;
                    }
                }
                return Some(leaf);
            }
            let l = node.len();
            if *next_child < 2 * l - 2 {
                let child = node.child(*next_child);
                *next_child += 1;
                self.stack.push((child, 0));
            } else {
                self.stack.pop();
            }
        }
        None
    }
}

/// Streams the minimum-weight supports of `code` by walking the shortening
/// tree. With `dedup` each support is emitted once, and the stream length
/// equals [`RmCode::min_weight_count`].
pub fn enumerate_min_weight(code: &RmCode, dedup: bool) -> MinWeightLeaves {
    MinWeightLeaves {
        n: code.length(),
        leaf_len: code.min_distance(),
        stack: vec![(CoordSet::full(code.length()), 0)],
        seen: dedup.then(HashSet::new),
    }
}
