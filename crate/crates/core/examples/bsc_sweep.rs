// A small BLER sweep over the binary symmetric channel, printed as CSV.

use rmgraph::harness::{csv_row, run_point, SweepPoint, CSV_HEADER};
use rmgraph::{ChannelSpec, SearchParams};

pub fn run_example() -> rmgraph::Result<()> {
    let workers = std::thread::available_parallelism().map_or(1, |n| n.get());
    println!("{CSV_HEADER}");
    for p in [0.06, 0.08, 0.10] {
        let point = SweepPoint {
            r: 2,
            m: 6,
            channel: ChannelSpec::Bsc { p },
            params: SearchParams::with_budget(64.0),
            trials: 400,
            seed: 1,
            stop_at_errors: Some(50),
        };
        let stats = run_point(&point, workers)?;
        println!("{}", csv_row(&point, &stats));
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> rmgraph::Result<()> {
    run_example()
}
