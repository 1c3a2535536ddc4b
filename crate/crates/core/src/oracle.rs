//! Exhaustive reference decoders and enumerations for small codes.

use std::collections::{HashSet, VecDeque};

use rand::Rng;

use crate::codeword::Codeword;
use crate::decoder::{metric, random_codeword};
use crate::error::{Error, Result};
use crate::rm_code::{enumerate_min_weight, RmCode};

/// Largest dimension the exhaustive oracles accept.
pub const MAX_ORACLE_DIMENSION: usize = 24;
/// Largest dimension for the traversal, which stores every node.
pub const MAX_TRAVERSAL_DIMENSION: usize = 20;

fn check_dimension(code: &RmCode, cap: usize) -> Result<()> {
    if code.dimension() > cap {
        return Err(Error::ResourceCap(format!(
            "{code} has dimension {} above the oracle cap of {cap}",
            code.dimension()
        )));
    }
    Ok(())
}

/// Every codeword, in Gray-code order of the information bits.
pub fn all_codewords(code: &RmCode) -> Result<impl Iterator<Item = Codeword> + '_> {
    check_dimension(code, MAX_ORACLE_DIMENSION)?;
    let rows: Vec<Codeword> = (0..code.dimension()).map(|i| code.generator_row(i)).collect();
    let total = 1u64 << code.dimension();
    let mut current = Codeword::zeros(code.length());
    Ok((0..total).map(move |i| {
        if i > 0 {
            current.xor_assign(&rows[i.trailing_zeros() as usize]);
        }
        current.clone()
    }))
}

/// ML decoding by enumeration: the codeword of largest metric, ties resolved
/// to the lexicographically smallest codeword.
pub fn ml_decode_bruteforce(code: &RmCode, y: &[f64]) -> Result<(Codeword, f64)> {
    if y.len() != code.length() {
        return Err(Error::LengthMismatch {
            what: "LLR vector",
            expected: code.length(),
            actual: y.len(),
        });
    }
    let mut best: Option<(Codeword, f64)> = None;
    for c in all_codewords(code)? {
        let m = metric(&c, y)?;
        let better = match &best {
            None => true,
            Some((b, bm)) => m > *bm || (m == *bm && c.lex_cmp(b).is_lt()),
        };
        if better {
            best = Some((c, m));
        }
    }
    Ok(best.expect("a code has at least one codeword"))
}

#[derive(Clone, Debug, PartialEq)]
pub struct TraversalOutcome {
    pub codeword: Codeword,
    pub metric: f64,
    /// Distinct nodes reached.
    pub visited: usize,
}

/// Breadth-first traversal of the minimum-distance graph from a random start,
/// returning the best node seen. Neighbours are generated by XOR with every
/// minimum-weight codeword from the shortening tree.
pub fn graph_traversal_decode<R: Rng + ?Sized>(
    code: &RmCode,
    y: &[f64],
    rng: &mut R,
) -> Result<TraversalOutcome> {
    check_dimension(code, MAX_TRAVERSAL_DIMENSION)?;
    if y.len() != code.length() {
        return Err(Error::LengthMismatch {
            what: "LLR vector",
            expected: code.length(),
            actual: y.len(),
        });
    }
    let n = code.length();
    let edges: Vec<Codeword> = enumerate_min_weight(code, true)
        .map(|s| s.to_codeword(n))
        .collect();

    let start = random_codeword(code, rng);
    let mut seen = HashSet::new();
    seen.insert(start.clone());
    let mut best = (start.clone(), metric(&start, y)?);
    let mut queue = VecDeque::from([start]);
    while let Some(node) = queue.pop_front() {
        for e in &edges {
            let mut next = node.clone();
            next.xor_assign(e);
            if seen.contains(&next) {
                continue;
            }
            let m = metric(&next, y)?;
            if m > best.1 {
                best = (next.clone(), m);
            }
            seen.insert(next.clone());
            queue.push_back(next);
        }
    }
    Ok(TraversalOutcome {
        codeword: best.0,
        metric: best.1,
        visited: seen.len(),
    })
}

/// `C(n, k)`, saturating at `u128::MAX`.
fn binomial(n: usize, k: usize) -> u128 {
    let mut acc = 1u128;
    for i in 0..k {
        match acc.checked_mul((n - i) as u128) {
            Some(v) => acc = v / (i + 1) as u128,
            None => return u128::MAX,
        }
    }
    acc
}

/// All codewords of weight exactly `2^(m-r)`, by whichever exhaustive scan is
/// smaller: every codeword, or every weight-`d` vector tested for membership.
pub fn min_weight_bruteforce(code: &RmCode) -> Result<HashSet<Codeword>> {
    let d = code.min_distance();
    let n = code.length();
    let by_words = 1u128 << code.dimension().min(127);
    let by_supports = binomial(n, d);
    if by_words <= by_supports {
        return Ok(all_codewords(code)?.filter(|c| c.weight() == d).collect());
    }
    if by_supports > 1u128 << MAX_ORACLE_DIMENSION {
        return Err(Error::ResourceCap(format!(
            "{code}: {by_supports} weight-{d} vectors above the oracle cap"
        )));
    }
    let mut out = HashSet::new();
    let mut support: Vec<u32> = (0..d as u32).collect();
    loop {
        let c = Codeword::from_support(n, &support);
        if code.contains(&c) {
            out.insert(c);
        }
        // Next d-subset in lexicographic order.
        let Some(i) = (0..d).rev().find(|&i| (support[i] as usize) < n - d + i) else {
            break;
        };
        support[i] += 1;
        for j in i + 1..d {
            support[j] = support[j - 1] + 1;
        }
    }
    Ok(out)
}

/// GF(2) rank of a set of equal-length vectors, by elimination on packed
/// words.
pub fn gf2_rank<'a>(vectors: impl IntoIterator<Item = &'a Codeword>) -> usize {
    // Pivot rows keyed by their lowest set bit.
    let mut basis: Vec<(usize, Vec<u64>)> = Vec::new();
    for v in vectors {
        let mut w = v.words().to_vec();
        for (pivot, row) in &basis {
            if (w[pivot / 64] >> (pivot % 64)) & 1 == 1 {
                for (a, b) in w.iter_mut().zip(row) {
                    *a ^= b;
                }
            }
        }
        if let Some(wi) = w.iter().position(|&x| x != 0) {
            let pivot = wi * 64 + w[wi].trailing_zeros() as usize;
            // Keep the basis fully reduced on pivot columns.
            for (_, row) in basis.iter_mut() {
                if (row[pivot / 64] >> (pivot % 64)) & 1 == 1 {
                    for (a, b) in row.iter_mut().zip(&w) {
                        *a ^= b;
                    }
                }
            }
            basis.push((pivot, w));
        }
    }
    basis.len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rm_code::make_code;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn ml_examples() {
        let code = make_code(1, 2).unwrap();
        let (c, m) = ml_decode_bruteforce(&code, &[5.0, -5.0, 5.0, -5.0]).unwrap();
        assert_eq!(c.to_string(), "0101");
        assert_eq!(m, 20.0);

        let code = make_code(2, 4).unwrap();
        let (c, m) = ml_decode_bruteforce(&code, &[0.0; 16]).unwrap();
        assert!(c.is_zero());
        assert_eq!(m, 0.0);
    }

    #[test]
    fn ml_beats_random_codewords() {
        let code = make_code(2, 4).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        let y: Vec<f64> = (0..16).map(|_| rng.gen_range(-3.0..3.0)).collect();
        let (_, best) = ml_decode_bruteforce(&code, &y).unwrap();
        for _ in 0..100 {
            let c = random_codeword(&code, &mut rng);
            assert!(best >= metric(&c, &y).unwrap());
        }
    }

    #[test]
    fn caps() {
        let big = make_code(3, 9).unwrap();
        assert!(matches!(ml_decode_bruteforce(&big, &[0.0; 512]), Err(Error::ResourceCap(_))));
        assert!(matches!(min_weight_bruteforce(&big), Err(Error::ResourceCap(_))));
        // k = 256 and C(512, 8) are both far above the cap.
        let mid = make_code(6, 9).unwrap();
        assert!(matches!(min_weight_bruteforce(&mid), Err(Error::ResourceCap(_))));
    }

    #[test]
    fn min_weight_small() {
        assert_eq!(min_weight_bruteforce(&make_code(2, 3).unwrap()).unwrap().len(), 28);
        assert_eq!(min_weight_bruteforce(&make_code(1, 4).unwrap()).unwrap().len(), 30);
        let rep = min_weight_bruteforce(&make_code(0, 3).unwrap()).unwrap();
        assert_eq!(rep, HashSet::from([Codeword::ones(8)]));
        // High-rate codes go through the support scan.
        let even = min_weight_bruteforce(&make_code(4, 5).unwrap()).unwrap();
        assert_eq!(even.len(), 496);
        assert_eq!(min_weight_bruteforce(&make_code(5, 5).unwrap()).unwrap().len(), 32);
        let r35 = make_code(3, 5).unwrap();
        assert_eq!(min_weight_bruteforce(&r35).unwrap().len() as u128, r35.min_weight_count());
    }

    #[test]
    fn traversal_reaches_every_node() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        for (r, m) in [(1, 3), (2, 3), (2, 4)] {
            let code = make_code(r, m).unwrap();
            let y = vec![0.0; code.length()];
            let out = graph_traversal_decode(&code, &y, &mut rng).unwrap();
            assert_eq!(out.visited, 1 << code.dimension());
        }
    }

    #[test]
    fn rank_of_identity_and_dependent_rows() {
        let rows: Vec<Codeword> = (0..70).map(|j| Codeword::from_support(70, &[j])).collect();
        assert_eq!(gf2_rank(&rows), 70);
        let a = Codeword::from_bit_str("1100").unwrap();
        let b = Codeword::from_bit_str("0110").unwrap();
        let c = Codeword::from_bit_str("1010").unwrap();
        assert_eq!(gf2_rank([&a, &b, &c]), 2);
    }
}
