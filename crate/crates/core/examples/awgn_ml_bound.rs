// BLER next to the ML lower bound on BI-AWGN, with exact ML on a code small
// enough to enumerate.

use rmgraph::harness::{run_point_with, SweepPoint};
use rmgraph::{make_code, ChannelSpec, SearchParams};

pub fn run_example() -> rmgraph::Result<()> {
    for (r, m, exact) in [(2, 4, true), (2, 7, false)] {
        let rate = make_code(r, m)?.rate();
        let point = SweepPoint {
            r,
            m,
            channel: ChannelSpec::BiAwgn { ebn0_db: 1.0, rate },
            params: SearchParams::with_budget(128.0),
            trials: 300,
            seed: 9,
            stop_at_errors: None,
        };
        let stats = run_point_with(&point, 1, exact, |_| Ok(()))?;
        print!(
            "R({r},{m}) Eb/N0 1 dB: bler {:.4}, ml lower bound {:.4}",
            stats.bler, stats.ml_lb
        );
        match stats.ml_exact_errors {
            Some(e) => println!(", exact ML {:.4}", e as f64 / stats.trials_run as f64),
            None => println!(),
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> rmgraph::Result<()> {
    run_example()
}
