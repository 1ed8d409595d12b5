//! Checks the decomposition of the permutation character of SL(d,p) on
//! Z_p^d into irreducibles, class by class.
//!
//! ```bash
//! cargo run --release --example characters
//! ```

use std::error::Error;

use dw_motion::characters::{burnside_check, verify_character_identity};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    for (d, p) in [(2, 2), (2, 3), (2, 5), (3, 2), (3, 3)] {
        let r = verify_character_identity(d, p)?;
        println!(
            "SL({d},{p}): {} classes, max residual {:.1e}, coverage {:?}, χ = {}",
            r.class_count,
            r.max_residual,
            r.coverage,
            r.decomposition.join(" + ")
        );
    }
    print!("{}", verify_character_identity(2, 5)?.to_csv());
    let b = burnside_check(2, 3)?;
    println!("Σχ² = {} = {}·{} orbits on pairs", b.sum_of_squares, b.group_order, b.orbits);
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
