//! Counts boundary labels: pairs of a hom class and an irreducible
//! representation of its centralizer.
//!
//! ```bash
//! cargo run --example label_counts
//! ```

use std::error::Error;

use dw_motion::dw::{count_labels, Surface};
use dw_motion::group::FiniteGroup;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    for spec in ["S:3", "Z:4", "Q8", "D:4"] {
        let g: FiniteGroup = spec.parse()?;
        let counts: Vec<String> = ["sphere", "circle", "torus"]
            .iter()
            .map(|s| -> Result<String, Box<dyn Error>> {
                let surface: Surface = s.parse()?;
                Ok(format!("{s} {}", count_labels(&surface.presentation(), &g)?.count))
            })
            .collect::<Result<_, _>>()?;
        println!("{spec:>4}: {}", counts.join(", "));
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
