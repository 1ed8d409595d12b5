//! Assembles V_G(Y × S¹) from the spaces V_{C_G(g)}(Y) and checks that the
//! assembly map intertwines the mapping-class actions.
//!
//! ```bash
//! cargo run --release --example dimension_reduction
//! ```

use std::error::Error;

use dw_motion::dw::{assemble_dimension_reduction, verify_intertwiner, Surface};
use dw_motion::group::FiniteGroup;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    for spec in ["S:3", "Z:6", "Q8", "SL2:3"] {
        let g: FiniteGroup = spec.parse()?;
        for surface in [Surface::Circle, Surface::Torus] {
            let py = surface.presentation();
            let map = assemble_dimension_reduction(&py, &g)?;
            let dims: Vec<usize> = map.blocks.iter().map(|b| b.source.len()).collect();
            let squares: Vec<String> = surface
                .mapping_class_generators()
                .iter()
                .map(|(name, f)| -> Result<String, Box<dyn Error>> {
                    Ok(format!("{name}:{}", verify_intertwiner(&map, &py, &g, f)?.holds))
                })
                .collect::<Result<_, _>>()?;
            println!(
                "{spec:>6} {surface:?}: Σ {dims:?} = {} vs {} (bijective {}) {}",
                map.source_dim(),
                map.target.len(),
                map.is_bijective(),
                squares.join(" ")
            );
        }
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
