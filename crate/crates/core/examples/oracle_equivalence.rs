// Compare the graph search, the exhaustive graph traversal and brute-force
// ML on a small code.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rmgraph::oracle::{graph_traversal_decode, ml_decode_bruteforce};
use rmgraph::{graph_search, make_code, SearchParams};

pub fn run_example() -> rmgraph::Result<()> {
    let code = make_code(2, 4)?;
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let params = SearchParams::with_budget(f64::INFINITY);
    let trials = 200;
    let (mut traversal_hits, mut search_hits) = (0, 0);
    for _ in 0..trials {
        let y: Vec<f64> = (0..code.length()).map(|_| rng.gen_range(-4.0..4.0)).collect();
        let (_, ml) = ml_decode_bruteforce(&code, &y)?;
        let t = graph_traversal_decode(&code, &y, &mut rng)?;
        let s = graph_search(&code, &y, &params, &mut rng)?;
        traversal_hits += (t.metric == ml) as u32;
        search_hits += ((s.metric - ml).abs() < 1e-9) as u32;
    }
    println!("{code}, {trials} random LLR vectors");
    println!("traversal reached ML:    {traversal_hits}/{trials}");
    println!("graph search reached ML: {search_hits}/{trials}");
    assert_eq!(traversal_hits, trials);
    Ok(())
}

#[allow(dead_code)]
fn main() -> rmgraph::Result<()> {
    run_example()
}
