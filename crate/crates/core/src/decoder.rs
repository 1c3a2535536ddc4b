//! Local graph search decoding.
//!
//! The decoder walks the graph whose nodes are codewords and whose edges join
//! codewords at minimum distance. Each move picks a neighbour with a greedy
//! depth-first descent of the shortening tree, steered by support sums that a
//! single Hadamard transform per tree level provides.

use std::collections::HashSet;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::codeword::Codeword;
use crate::crc::{crc_check, CrcConfig};
use crate::error::{Error, Result};
use crate::rm_code::{restrict, RmCode};
use crate::transform::{heuristics_from_spectrum, FhtCounter};

/// Decoder knobs.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SearchParams {
    /// Budget in units of one length-n transform, checked before each move.
    pub budget: f64,
    pub max_moves: usize,
    /// Root children descended per step.
    pub breadth: usize,
    /// Extra root children tried when the first `breadth` all lead to
    /// visited codewords.
    pub extra_breadth: usize,
    /// How many steps may use the extra children before they are disabled.
    pub extra_budget: usize,
    /// Stop as soon as a newly best codeword passes the CRC.
    pub crc_terminate: bool,
    pub crc: Option<CrcConfig>,
}

impl SearchParams {
    /// `l = 8`, `l_hat = 8`, `s = 5`, and `N = budget`, no CRC.
    pub fn with_budget(budget: f64) -> Self {
        SearchParams {
            budget,
            max_moves: if budget.is_finite() { budget.ceil() as usize } else { usize::MAX },
            breadth: 8,
            extra_breadth: 8,
            extra_budget: 5,
            crc_terminate: false,
            crc: None,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.breadth == 0 {
            return Err(Error::OutOfRange {
                field: "l",
                detail: "search breadth must be at least 1".into(),
            });
        }
        if self.budget.is_nan() || self.budget <= 0.0 {
            return Err(Error::OutOfRange {
                field: "budget",
                detail: format!("{} is not positive", self.budget),
            });
        }
        if self.crc_terminate && self.crc.is_none() {
            return Err(Error::config(
                "crc_terminate",
                "CRC termination requested without a CRC configuration",
            ));
        }
        Ok(())
    }
}

/// Codewords the walk has already stood on.
#[derive(Clone, Debug, Default)]
pub struct VisitedSet(HashSet<Codeword>);

impl VisitedSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, c: Codeword) -> bool {
        self.0.insert(c)
    }

    pub fn contains(&self, c: &Codeword) -> bool {
        self.0.contains(c)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn clear(&mut self) {
        self.0.clear();
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Termination {
    BudgetExhausted,
    MaxMoves,
    NeighborsExhausted,
    CrcHit,
}

impl Termination {
    pub const ALL: [Termination; 4] = [
        Termination::BudgetExhausted,
        Termination::MaxMoves,
        Termination::NeighborsExhausted,
        Termination::CrcHit,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            Termination::BudgetExhausted => "budget_exhausted",
            Termination::MaxMoves => "max_moves",
            Termination::NeighborsExhausted => "neighbors_exhausted",
            Termination::CrcHit => "crc_hit",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct DecodeResult {
    /// Best codeword seen.
    pub codeword: Codeword,
    pub metric: f64,
    pub fht_units: f64,
    pub moves: usize,
    pub termination: Termination,
    /// Distinct codewords visited, including the start.
    pub visited: usize,
    /// `(length, calls)` pairs for every transform length used.
    pub fht_calls: Vec<(usize, u64)>,
}

/// Result of one greedy descent from a root child down to a leaf.
#[derive(Clone, Debug, PartialEq)]
pub enum Descent {
    Unvisited { candidate: Codeword, leaf_sum: f64 },
    AlreadyVisited,
}

/// Result of one `NextStep` call.
#[derive(Clone, Debug, PartialEq)]
pub enum StepOutcome {
    Found {
        candidate: Codeword,
        /// Full metric of `candidate`.
        metric: f64,
        /// Sign-adjusted LLR sum over the flipped coordinates.
        leaf_sum: f64,
        extra_children: bool,
    },
    /// Every candidate examined was already visited.
    Exhausted { extra_children: bool },
}

impl StepOutcome {
    pub fn extra_children(&self) -> bool {
        match *self {
            StepOutcome::Found { extra_children, .. } | StepOutcome::Exhausted { extra_children } => {
                extra_children
            }
        }
    }

    pub fn metric(&self) -> Option<f64> {
        match *self {
            StepOutcome::Found { metric, .. } => Some(metric),
            StepOutcome::Exhausted { .. } => None,
        }
    }
}

/// Correlation metric `sum (1 - 2 c_i) y_i`; the ML codeword maximizes it.
pub fn metric(c: &Codeword, y: &[f64]) -> Result<f64> {
    if c.len() != y.len() {
        return Err(Error::LengthMismatch {
            what: "LLR vector",
            expected: c.len(),
            actual: y.len(),
        });
    }
    Ok(metric_unchecked(c, y))
}

pub(crate) fn metric_unchecked(c: &Codeword, y: &[f64]) -> f64 {
    y.iter()
        .enumerate()
        .map(|(j, &v)| if c.get(j) { -v } else { v })
        .sum()
}

/// `(1 - 2 c_i) y_i`: LLRs seen from `c`, so that flipping a set of
/// coordinates lowers the metric by twice their sum.
pub fn sign_adjust(c: &Codeword, y: &[f64]) -> Vec<f64> {
    y.iter()
        .enumerate()
        .map(|(j, &v)| if c.get(j) { -v } else { v })
        .collect()
}

/// Index of the smallest value; the lowest index wins ties.
fn argmin(a: &[f64]) -> usize {
    let mut best = 0;
    for (i, &v) in a.iter().enumerate().skip(1) {
        if v < a[best] {
            best = i;
        }
    }
    best
}

/// Greedy depth-first descent below the node holding `coords`.
///
/// `entry_sum` is the sign-adjusted LLR sum over `coords`, as chosen by the
/// parent. At a leaf (size `2^(m-r)`) the coordinates are flipped in
/// `current`; otherwise the child with the smallest support sum is followed.
pub fn next_step_descent(
    code: &RmCode,
    y_signed: &[f64],
    coords: &[u32],
    entry_sum: f64,
    visited: &VisitedSet,
    current: &Codeword,
    counter: &mut FhtCounter,
) -> Descent {
    if coords.len() <= code.min_distance() {
        let mut candidate = current.clone();
        for &j in coords {
            candidate.flip(j as usize);
        }
        return if visited.contains(&candidate) {
            Descent::AlreadyVisited
        } else {
            Descent::Unvisited {
                candidate,
                leaf_sum: entry_sum,
            }
        };
    }
    let mut spectrum: Vec<f64> = coords.iter().map(|&j| y_signed[j as usize]).collect();
    counter
        .fht(&mut spectrum)
        .expect("tree nodes have power-of-two size");
    let mut sums = Vec::with_capacity(2 * coords.len() - 2);
    heuristics_from_spectrum(&spectrum, &mut sums);
    let child = argmin(&sums);
    let retained = restrict(coords, child);
    next_step_descent(code, y_signed, &retained, sums[child], visited, current, counter)
}

/// One greedy `NextStep`: up to `breadth` descents from the root children with
/// the smallest support sums, then up to `extra_breadth` more if all of those
/// landed on visited codewords. Stops early at the first unvisited candidate
/// that improves on `current`.
pub fn next_step_greedy(
    code: &RmCode,
    y: &[f64],
    current: &Codeword,
    visited: &VisitedSet,
    breadth: usize,
    extra_breadth: usize,
    counter: &mut FhtCounter,
) -> StepOutcome {
    let n = code.length();
    let current_metric = metric_unchecked(current, y);

    if code.order() == 0 {
        // The root is already a leaf: the only neighbour is the complement.
        let candidate = current.complement();
        return if visited.contains(&candidate) {
            StepOutcome::Exhausted { extra_children: false }
        } else {
            StepOutcome::Found {
                candidate,
                metric: -current_metric,
                leaf_sum: current_metric,
                extra_children: false,
            }
        };
    }

    let y_signed = sign_adjust(current, y);
    let mut spectrum = y_signed.clone();
    counter.fht(&mut spectrum).expect("code length is a power of two");
    let mut sums = Vec::with_capacity(2 * n - 2);
    heuristics_from_spectrum(&spectrum, &mut sums);

    let tries = (breadth + extra_breadth).min(sums.len());
    let mut order: Vec<usize> = (0..sums.len()).collect();
    let by_sum = |&a: &usize, &b: &usize| sums[a].total_cmp(&sums[b]).then(a.cmp(&b));
    if tries < order.len() {
        order.select_nth_unstable_by(tries, by_sum);
        order.truncate(tries);
    }
    order.sort_unstable_by(by_sum);

    let root: Vec<u32> = (0..n as u32).collect();
    let mut best: Option<(Codeword, f64)> = None;
    let mut extra_children = false;
    for (i, &child) in order.iter().enumerate() {
        if i >= breadth {
            if best.is_some() {
                break;
            }
            extra_children = true;
        }
        let retained = restrict(&root, child);
        let descent = next_step_descent(code, &y_signed, &retained, sums[child], visited, current, counter);
        if let Descent::Unvisited { candidate, leaf_sum } = descent {
            if best.as_ref().is_none_or(|(_, s)| leaf_sum < *s) {
                best = Some((candidate, leaf_sum));
            }
        }
        if matches!(best, Some((_, s)) if s < 0.0) {
            break;
        }
    }

    match best {
        Some((candidate, leaf_sum)) => StepOutcome::Found {
            candidate,
            metric: current_metric - 2.0 * leaf_sum,
            leaf_sum,
            extra_children,
        },
        None => StepOutcome::Exhausted { extra_children },
    }
}

/// A uniformly random codeword: the encoding of uniform information bits.
pub fn random_codeword<R: Rng + ?Sized>(code: &RmCode, rng: &mut R) -> Codeword {
    let info = random_bits(code.dimension(), rng);
    code.encode(&info).expect("info has length k")
}

pub(crate) fn random_bits<R: Rng + ?Sized>(len: usize, rng: &mut R) -> Vec<u8> {
    let mut out = Vec::with_capacity(len);
    while out.len() < len {
        let word: u64 = rng.gen();
        let take = (len - out.len()).min(64);
        out.extend((0..take).map(|t| ((word >> t) & 1) as u8));
    }
    out
}

/// A reusable decoder: owns the visited set and the transform tally.
#[derive(Debug)]
pub struct GraphSearchDecoder<'c> {
    code: &'c RmCode,
    params: SearchParams,
    visited: VisitedSet,
    counter: FhtCounter,
}

impl<'c> GraphSearchDecoder<'c> {
    pub fn new(code: &'c RmCode, params: SearchParams) -> Result<Self> {
        params.validate()?;
        if let Some(cfg) = &params.crc {
            cfg.validate(Some(code.dimension()))?;
        }
        Ok(GraphSearchDecoder {
            code,
            counter: FhtCounter::new(code.length()),
            params,
            visited: VisitedSet::new(),
        })
    }

    pub fn params(&self) -> &SearchParams {
        &self.params
    }

    /// Decodes starting from a uniformly random codeword drawn from `rng`.
    pub fn decode<R: Rng + ?Sized>(&mut self, y: &[f64], rng: &mut R) -> Result<DecodeResult> {
        if y.len() != self.code.length() {
            return Err(Error::LengthMismatch {
                what: "LLR vector",
                expected: self.code.length(),
                actual: y.len(),
            });
        }
        let start = random_codeword(self.code, rng);
        Ok(self.decode_from(y, start))
    }

    /// Runs the walk from a given codeword of the code.
    pub fn decode_from(&mut self, y: &[f64], start: Codeword) -> DecodeResult {
        let code = self.code;
        let params = &self.params;
        self.visited.clear();
        self.counter.reset();

        let mut current = start;
        self.visited.insert(current.clone());
        let mut best = current.clone();
        let mut best_metric = metric_unchecked(&current, y);
        let mut extra_breadth = if params.extra_budget == 0 { 0 } else { params.extra_breadth };
        let mut extra_used = 0;
        let mut moves = 0;

        let termination = loop {
            if moves >= params.max_moves {
                break Termination::MaxMoves;
            }
            if self.counter.units() > params.budget {
                break Termination::BudgetExhausted;
            }
            let step = next_step_greedy(
                code,
                y,
                &current,
                &self.visited,
                params.breadth,
                extra_breadth,
                &mut self.counter,
            );
            if step.extra_children() {
                extra_used += 1;
                if extra_used >= params.extra_budget {
                    extra_breadth = 0;
                }
            }
            let StepOutcome::Found { candidate, metric, .. } = step else {
                break Termination::NeighborsExhausted;
            };
            // The walk moves even when the neighbour is worse.
            current = candidate;
            self.visited.insert(current.clone());
            moves += 1;
            if metric > best_metric {
                best = current.clone();
                best_metric = metric;
                if params.crc_terminate {
                    let cfg = params.crc.as_ref().expect("validated");
                    if crc_check(&code.info_bits(&best), cfg) {
                        break Termination::CrcHit;
                    }
                }
            }
        };

        DecodeResult {
            codeword: best,
            metric: best_metric,
            fht_units: self.counter.units(),
            moves,
            termination,
            visited: self.visited.len(),
            fht_calls: self.counter.calls_by_length().collect(),
        }
    }
}

/// Decodes `y` with a fresh [`GraphSearchDecoder`].
pub fn graph_search<R: Rng + ?Sized>(
    code: &RmCode,
    y: &[f64],
    params: &SearchParams,
    rng: &mut R,
) -> Result<DecodeResult> {
    GraphSearchDecoder::new(code, params.clone())?.decode(y, rng)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rm_code::{first_order_halfweight, make_code};
    use proptest::prelude::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn bits(s: &str) -> Codeword {
        Codeword::from_bit_str(s).unwrap()
    }

    const Y: [f64; 4] = [3.0, -1.0, 2.0, 4.0];

    #[test]
    fn metric_examples() {
        let y = [1.0, -2.0, 3.0, 4.0];
        assert_eq!(metric(&bits("0000"), &y).unwrap(), 6.0);
        assert_eq!(metric(&bits("1111"), &y).unwrap(), -6.0);
        assert_eq!(metric(&bits("0100"), &y).unwrap(), 10.0);
        assert!(metric(&bits("010"), &y).is_err());
    }

    #[test]
    fn single_descent_r12() {
        let code = make_code(1, 2).unwrap();
        let current = Codeword::zeros(4);
        let mut visited = VisitedSet::new();
        visited.insert(current.clone());
        let mut counter = FhtCounter::new(4);

        // Pattern 0110 has the smallest root support sum (1).
        let coords = restrict(&[0, 1, 2, 3], 2);
        assert_eq!(coords, vec![1, 2]);
        let d = next_step_descent(&code, &Y, &coords, 1.0, &visited, &current, &mut counter);
        assert_eq!(
            d,
            Descent::Unvisited {
                candidate: bits("0110"),
                leaf_sum: 1.0
            }
        );

        // Exhaustive check over the six neighbours of 0000.
        let best = first_order_halfweight(2)
            .into_iter()
            .max_by(|a, b| metric(a, &Y).unwrap().total_cmp(&metric(b, &Y).unwrap()))
            .unwrap();
        assert_eq!(best, bits("0110"));
        assert_eq!(metric(&best, &Y).unwrap(), 6.0);

        visited.insert(bits("0110"));
        let d = next_step_descent(&code, &Y, &coords, 1.0, &visited, &current, &mut counter);
        assert_eq!(d, Descent::AlreadyVisited);
    }

    #[test]
    fn descent_tie_breaks_to_lowest_index() {
        let code = make_code(2, 3).unwrap();
        let current = Codeword::zeros(8);
        let visited = VisitedSet::new();
        let mut counter = FhtCounter::new(8);
        let coords: Vec<u32> = (0..8).collect();
        let d = next_step_descent(&code, &[0.0; 8], &coords, 0.0, &visited, &current, &mut counter);
        // Child 0 keeps the odd coordinates {1,3,5,7}; its child 0 keeps the
        // odd positions of that list.
        assert_eq!(
            d,
            Descent::Unvisited {
                candidate: Codeword::from_support(8, &[3, 7]),
                leaf_sum: 0.0
            }
        );
        // Transforms of length 8 and 4.
        assert_eq!(counter.units(), 1.5);
    }

    #[test]
    fn greedy_step_examples() {
        let code = make_code(1, 2).unwrap();
        let current = Codeword::zeros(4);
        let mut visited = VisitedSet::new();
        visited.insert(current.clone());
        let mut counter = FhtCounter::new(4);

        let out = next_step_greedy(&code, &Y, &current, &visited, 1, 0, &mut counter);
        assert_eq!(
            out,
            StepOutcome::Found {
                candidate: bits("0110"),
                metric: 6.0,
                leaf_sum: 1.0,
                extra_children: false
            }
        );

        visited.insert(bits("0110"));
        let out = next_step_greedy(&code, &Y, &current, &visited, 1, 1, &mut counter);
        assert_eq!(
            out,
            StepOutcome::Found {
                candidate: bits("1100"),
                metric: 4.0,
                leaf_sum: 2.0,
                extra_children: true
            }
        );

        for w in first_order_halfweight(2) {
            visited.insert(w);
        }
        let out = next_step_greedy(&code, &Y, &current, &visited, 3, 3, &mut counter);
        assert_eq!(out, StepOutcome::Exhausted { extra_children: true });
        assert_eq!(out.metric(), None);
    }

    #[test]
    fn greedy_stops_at_first_improvement() {
        // The best root child already yields a negative leaf sum, so only one
        // descent runs: root transform plus one half-length transform.
        let code = make_code(2, 3).unwrap();
        let y = [-5.0, -5.0, 1.0, 1.0, 1.0, 1.0, 1.0, 1.0];
        let current = Codeword::zeros(8);
        let mut visited = VisitedSet::new();
        visited.insert(current.clone());
        let mut counter = FhtCounter::new(8);
        let out = next_step_greedy(&code, &y, &current, &visited, 8, 0, &mut counter);
        assert_eq!(out.metric(), Some(metric(&bits("11000000"), &y).unwrap()));
        assert_eq!(counter.units(), 1.5);
    }

    #[test]
    fn noiseless_consensus() {
        let code = make_code(1, 2).unwrap();
        let y = [5.0, -5.0, 5.0, -5.0];
        for seed in 0..20 {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let res = graph_search(&code, &y, &SearchParams::with_budget(100.0), &mut rng).unwrap();
            assert_eq!(res.codeword, bits("0101"));
            assert_eq!(res.metric, 20.0);
        }
    }

    #[test]
    fn unlimited_walk_reaches_ml_on_r24() {
        let code = make_code(2, 4).unwrap();
        let params = SearchParams::with_budget(f64::INFINITY);
        let mut rng = ChaCha8Rng::seed_from_u64(24);
        let mut hits = 0;
        for _ in 0..1000 {
            let y = gaussian_y(16, &mut rng);
            let (_, ml) = crate::oracle::ml_decode_bruteforce(&code, &y).unwrap();
            let res = graph_search(&code, &y, &params, &mut rng).unwrap();
            assert_eq!(res.termination, Termination::NeighborsExhausted);
            hits += ((res.metric - ml).abs() < 1e-9) as u32;
        }
        assert!(hits >= 990, "{hits} of 1000 reached the ML metric");
    }

    #[test]
    fn zero_moves_returns_start() {
        let code = make_code(2, 4).unwrap();
        let params = SearchParams {
            max_moves: 0,
            ..SearchParams::with_budget(10.0)
        };
        let y = vec![1.0; 16];
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        let start = random_codeword(&code, &mut ChaCha8Rng::seed_from_u64(4));
        let res = graph_search(&code, &y, &params, &mut rng).unwrap();
        assert_eq!(res.codeword, start);
        assert_eq!(res.moves, 0);
        assert_eq!(res.termination, Termination::MaxMoves);
        assert_eq!(res.fht_units, 0.0);
    }

    #[test]
    fn rejects_bad_inputs() {
        let code = make_code(1, 3).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        let params = SearchParams::with_budget(8.0);
        assert!(graph_search(&code, &[0.0; 4], &params, &mut rng).is_err());
        let bad = SearchParams { breadth: 0, ..params.clone() };
        assert!(graph_search(&code, &[0.0; 8], &bad, &mut rng).is_err());
        let bad = SearchParams {
            crc_terminate: true,
            ..params
        };
        assert!(graph_search(&code, &[0.0; 8], &bad, &mut rng).is_err());
    }

    #[test]
    fn repetition_code_walk() {
        let code = make_code(0, 3).unwrap();
        let y = [-1.0; 8];
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let res = graph_search(&code, &y, &SearchParams::with_budget(10.0), &mut rng).unwrap();
        assert_eq!(res.codeword, Codeword::ones(8));
        assert_eq!(res.metric, 8.0);
    }

    fn gaussian_y(n: usize, rng: &mut ChaCha8Rng) -> Vec<f64> {
        (0..n).map(|_| crate::channel::box_muller(rng).0 * 2.0).collect()
    }

    #[test]
    fn walk_invariants() {
        let code = make_code(3, 6).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(77);
        for trial in 0..40 {
            let y = gaussian_y(64, &mut rng);
            let params = SearchParams::with_budget(40.0);
            let seed = 1000 + trial;
            let a = graph_search(&code, &y, &params, &mut ChaCha8Rng::seed_from_u64(seed)).unwrap();
            let b = graph_search(&code, &y, &params, &mut ChaCha8Rng::seed_from_u64(seed)).unwrap();
            assert_eq!(a, b);
            assert!(code.contains(&a.codeword));
            assert!((a.metric - metric(&a.codeword, &y).unwrap()).abs() < 1e-6);
            assert!(a.visited <= a.moves + 1);
            let calls_units: f64 =
                a.fht_calls.iter().map(|&(l, c)| (l as u64 * c) as f64).sum::<f64>() / 64.0;
            assert_eq!(a.fht_units, calls_units);
            // One move costs at most (breadth + extra) descents, each below 2 units.
            assert!(a.fht_units <= params.budget + 1.0 + 16.0 * 0.75);
        }
    }

    #[test]
    fn candidates_are_codewords_at_minimum_distance() {
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        for (r, m) in [(1, 3), (2, 4), (3, 5), (2, 5), (4, 5)] {
            let code = make_code(r, m).unwrap();
            let mut counter = FhtCounter::new(code.length());
            for _ in 0..30 {
                let y = gaussian_y(code.length(), &mut rng);
                let current = random_codeword(&code, &mut rng);
                let mut visited = VisitedSet::new();
                visited.insert(current.clone());
                let out = next_step_greedy(&code, &y, &current, &visited, 4, 4, &mut counter);
                let StepOutcome::Found { candidate, metric: m, .. } = out else {
                    panic!("fresh walk cannot be exhausted")
                };
                assert!(code.contains(&candidate));
                let mut diff = candidate.clone();
                diff.xor_assign(&current);
                assert_eq!(diff.weight(), code.min_distance());
                assert!((m - metric(&candidate, &y).unwrap()).abs() < 1e-9);
            }
        }
    }

    proptest! {
        #[test]
        fn metric_delta_identity(seed in any::<u64>(), flips in proptest::collection::vec(0usize..32, 0..32)) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let y = gaussian_y(32, &mut rng);
            let c = Codeword::from_bits(&random_bits(32, &mut rng));
            let mut e = Codeword::zeros(32);
            for f in flips { e.set(f, true); }
            let mut ce = c.clone();
            ce.xor_assign(&e);
            let ys = sign_adjust(&c, &y);
            let support_sum: f64 = e.support().iter().map(|&j| ys[j as usize]).sum();
            let lhs = metric(&c, &y).unwrap() - metric(&ce, &y).unwrap();
            prop_assert!((lhs - 2.0 * support_sum).abs() < 1e-9);
        }
    }
}
