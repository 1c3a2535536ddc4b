// Stopping the search early once the best codeword passes a CRC.

use rmgraph::harness::{run_point, SweepPoint};
use rmgraph::{crc_append, crc_check, make_code, ChannelSpec, CrcConfig, SearchParams};

pub fn run_example() -> rmgraph::Result<()> {
    let cfg = CrcConfig::default();
    let payload = vec![1u8, 0, 1, 1, 0, 0, 1, 0];
    let info = crc_append(&payload, &cfg, payload.len() + cfg.width as usize)?;
    println!("payload {payload:?} with CRC passes: {}", crc_check(&info, &cfg));

    let code = make_code(3, 7)?;
    let plain = SweepPoint {
        r: 3,
        m: 7,
        channel: ChannelSpec::BiAwgn {
            ebn0_db: 3.0,
            rate: code.rate(),
        },
        params: SearchParams::with_budget(256.0),
        trials: 200,
        seed: 3,
        stop_at_errors: None,
    };
    let mut with_crc = plain.clone();
    with_crc.params.crc = Some(cfg);
    with_crc.params.crc_terminate = true;

    for (label, point) in [("no CRC", &plain), ("CRC-16", &with_crc)] {
        let s = run_point(point, 1)?;
        println!(
            "{label}: bler {:.4}, avg units {:.2}, crc stops {}",
            s.bler, s.avg_fht_units, s.terminations.crc_hit
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> rmgraph::Result<()> {
    run_example()
}
