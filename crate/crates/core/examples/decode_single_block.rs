// Send one block over BI-AWGN and decode it with the graph search.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rmgraph::decoder::random_codeword;
use rmgraph::{graph_search, make_code, metric, transmit, ChannelSpec, SearchParams};

pub fn run_example() -> rmgraph::Result<()> {
    let code = make_code(3, 7)?;
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let sent = random_codeword(&code, &mut rng);
    let channel = ChannelSpec::BiAwgn {
        ebn0_db: 2.0,
        rate: code.rate(),
    };
    let y = transmit(&sent, &channel, &mut rng)?;

    let params = SearchParams::with_budget(256.0);
    let res = graph_search(&code, &y, &params, &mut rng)?;
    println!("{code} at Eb/N0 2 dB, budget {}", params.budget);
    println!("decoded correctly: {}", res.codeword == sent);
    println!("metric {:.3} (sent {:.3})", res.metric, metric(&sent, &y)?);
    println!(
        "{} moves, {:.3} units, {} codewords visited, stopped on {}",
        res.moves,
        res.fht_units,
        res.visited,
        res.termination.as_str()
    );
    for (len, calls) in &res.fht_calls {
        println!("  FHT length {len}: {calls} calls");
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> rmgraph::Result<()> {
    run_example()
}
