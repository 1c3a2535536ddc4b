// Build a Reed-Muller code, encode a message and list its minimum-weight
// codewords through the shortening tree.

use rmgraph::rm_code::{enumerate_min_weight, make_code};

pub fn run_example() -> rmgraph::Result<()> {
    let code = make_code(2, 4)?;
    println!("{code}, rate {:.4}", code.rate());

    let info: Vec<u8> = (0..code.dimension()).map(|i| (i % 3 == 0) as u8).collect();
    let c = code.encode(&info)?;
    println!("info     {:?}", info);
    println!("codeword {c}");
    assert!(code.contains(&c));
    assert_eq!(code.info_bits(&c), info);

    let leaves: Vec<_> = enumerate_min_weight(&code, true).collect();
    println!(
        "{} minimum-weight codewords (formula: {})",
        leaves.len(),
        code.min_weight_count()
    );
    for leaf in leaves.iter().take(5) {
        println!("  {leaf}");
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> rmgraph::Result<()> {
    run_example()
}
