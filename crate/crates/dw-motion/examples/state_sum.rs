//! Counts flat colorings of triangulations, evaluates the state sum and
//! checks it against homomorphism counts and the cylinder idempotent.
//!
//! ```bash
//! cargo run --release --example state_sum
//! ```

use std::error::Error;

use dw_motion::group::FiniteGroup;
use dw_motion::simplicial::{
    partition_function, verify_idempotent_blocks, verify_lemma1, BoundaryColoring, Triangulation,
};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let z2: FiniteGroup = "Z:2".parse()?;
    let s3: FiniteGroup = "S:3".parse()?;

    for (name, t, g) in [
        ("circle, 3 vertices", Triangulation::circle(3), &s3),
        ("triangle", Triangulation::triangle(), &s3),
        ("torus, 7 vertices", Triangulation::torus7(), &z2),
    ] {
        let r = verify_lemma1(&t, g)?;
        println!(
            "{name:>20} over {}: #Col = {}, |G|^(v-1)·#Hom = {}, {}",
            g.name(),
            r.colorings,
            r.predicted,
            if r.holds { "equal" } else { "DIFFERENT" }
        );
    }

    let tri = Triangulation::triangle();
    let tau = BoundaryColoring::from_json(&tri, &s3, include_str!("../data/triangle_boundary.json"))?;
    let z = partition_function(&tri, &s3, Some(&tau))?;
    println!("Z(triangle, τ) = {z} ≈ {:.6}", z.to_f64());
    let free = partition_function(&tri, &s3, None)?;
    println!("Z(triangle) summed over boundary = {free}");

    let circle = Triangulation::circle(3);
    let annulus = Triangulation::product_with_interval(&circle)?;
    for g in [&z2, &s3] {
        let r = verify_idempotent_blocks(&circle, &annulus, g)?;
        println!(
            "Z(circle × I) over {}: dim {}, {} blocks, block diagonal {}, constant {}, idempotent {}",
            g.name(),
            r.dimension,
            r.blocks.len(),
            r.block_diagonal,
            r.constant_blocks,
            r.idempotent
        );
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
