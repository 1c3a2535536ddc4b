//! Quick invariant checks, run by `rmgraph selftest`.

use std::collections::HashSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::codeword::Codeword;
use crate::crc::{bytes_to_bits, CrcConfig};
use crate::decoder::{graph_search, SearchParams};
use crate::error::Result;
use crate::oracle::{gf2_rank, graph_traversal_decode, min_weight_bruteforce, ml_decode_bruteforce};
use crate::rm_code::{enumerate_min_weight, make_code};
use crate::transform::{child_heuristics, fht};

#[derive(Clone, Debug, PartialEq)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl std::fmt::Display for Check {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let tag = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{tag} {}: {}", self.name, self.detail)
    }
}

fn check(name: &'static str, f: impl FnOnce() -> Result<(bool, String)>) -> Check {
    match f() {
        Ok((passed, detail)) => Check { name, passed, detail },
        Err(e) => Check {
            name,
            passed: false,
            detail: format!("error: {e}"),
        },
    }
}

fn gaussian(n: usize, rng: &mut ChaCha8Rng) -> Vec<f64> {
    (0..n).map(|_| crate::channel::box_muller(rng).0).collect()
}

pub fn run_all() -> Vec<Check> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5e1f);
    let mut out = Vec::new();

    out.push(check("fht_involution", || {
        let mut worst = 0.0f64;
        for log in 1..=10 {
            let x = gaussian(1 << log, &mut rng);
            let back = fht(&fht(&x)?)?;
            for (a, b) in x.iter().zip(&back) {
                worst = worst.max((a * (1 << log) as f64 - b).abs());
            }
        }
        Ok((worst < 1e-9, format!("max deviation {worst:.2e}")))
    }));

    out.push(check("child_heuristics_vs_naive", || {
        let code_len = 32;
        let y = gaussian(code_len, &mut rng);
        let a = child_heuristics(&y)?;
        let mut worst = 0.0f64;
        for (i, c) in crate::rm_code::first_order_halfweight(5).iter().enumerate() {
            let naive: f64 = c.support().iter().map(|&j| y[j as usize]).sum();
            worst = worst.max((naive - a[i]).abs());
        }
        Ok((worst < 1e-9, format!("62 children, max deviation {worst:.2e}")))
    }));

    out.push(check("encode_roundtrip", || {
        let code = make_code(3, 6)?;
        for _ in 0..50 {
            let info: Vec<u8> = (0..code.dimension()).map(|_| rng.gen_range(0..2)).collect();
            let c = code.encode(&info)?;
            if code.info_bits(&c) != info || !code.contains(&c) {
                return Ok((false, "round trip failed".into()));
            }
        }
        Ok((true, "R(3,6), 50 words".into()))
    }));

    out.push(check("min_weight_tree", || {
        let code = make_code(2, 4)?;
        let n = code.length();
        let tree: HashSet<Codeword> = enumerate_min_weight(&code, true).map(|s| s.to_codeword(n)).collect();
        let brute = min_weight_bruteforce(&code)?;
        let rank = gf2_rank(&brute);
        let ok = tree == brute && tree.len() as u128 == code.min_weight_count() && rank == code.dimension();
        Ok((ok, format!("R(2,4): {} words, rank {rank}", tree.len())))
    }));

    out.push(check("oracle_equivalence", || {
        let code = make_code(2, 4)?;
        for _ in 0..20 {
            let y = gaussian(code.length(), &mut rng);
            let (_, ml) = ml_decode_bruteforce(&code, &y)?;
            let t = graph_traversal_decode(&code, &y, &mut rng)?;
            if (t.metric - ml).abs() > 1e-9 || t.visited != 1 << code.dimension() {
                return Ok((false, format!("traversal {} vs ML {ml}", t.metric)));
            }
        }
        Ok((true, "R(2,4), 20 vectors".into()))
    }));

    out.push(check("graph_search_moves", || {
        let code = make_code(2, 5)?;
        let y = gaussian(code.length(), &mut rng);
        let res = graph_search(&code, &y, &SearchParams::with_budget(64.0), &mut rng)?;
        let ok = code.contains(&res.codeword) && res.visited >= 1 && res.fht_units <= 64.0 + 2.0;
        Ok((ok, format!("{} moves, {:.3} units", res.moves, res.fht_units)))
    }));

    out.push(check("crc_check_value", || {
        let v = CrcConfig::default().compute(&bytes_to_bits(b"123456789"));
        Ok((v == 0x29B1, format!("{v:#06x}")))
    }));

    out
}
