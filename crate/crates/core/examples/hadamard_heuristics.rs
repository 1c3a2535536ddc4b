// The fast Hadamard transform and the per-child support sums derived from it.

use rmgraph::rm_code::first_order_halfweight;
use rmgraph::transform::{child_heuristics, fht, fht_unit_cost};

pub fn run_example() -> rmgraph::Result<()> {
    let y = [3.0, -1.0, 2.0, 4.0];
    println!("y         {y:?}");
    println!("spectrum  {:?}", fht(&y)?);

    let sums = child_heuristics(&y)?;
    for (pattern, sum) in first_order_halfweight(2).iter().zip(&sums) {
        println!("  child {pattern}: support sum {sum}");
    }

    // One descent through R(4,9): transforms of length 512, 256, 128 and 64.
    let units = fht_unit_cost(&[512, 256, 128, 64], 512);
    println!("one R(4,9) descent costs {units} units");
    Ok(())
}

#[allow(dead_code)]
fn main() -> rmgraph::Result<()> {
    run_example()
}
