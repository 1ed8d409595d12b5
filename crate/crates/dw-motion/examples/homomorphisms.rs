//! Enumerates homomorphisms from presented groups into S₃ and groups them
//! into conjugation classes.
//!
//! ```bash
//! cargo run --example homomorphisms
//! ```

use std::error::Error;

use dw_motion::group::FiniteGroup;
use dw_motion::homs::{enumerate_homs, HomClasses};
use dw_motion::presentation::Presentation;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let g: FiniteGroup = "S:3".parse()?;
    let cases = [
        ("circle", Presentation::circle()),
        ("torus", Presentation::torus()),
        ("genus 2", Presentation::closed_surface(2)),
        ("klein bottle", Presentation::parse("gens: a b\nrel: a b a^-1 b")?),
        ("3-torus", Presentation::torus_dim(3)),
    ];
    for (name, p) in &cases {
        let homs = enumerate_homs(p, &g);
        let classes = HomClasses::from_homs(&homs, &g)?;
        println!("{name:>12}: |Hom| = {:>4}, classes = {:>3}", homs.len(), classes.len());
    }

    let classes = HomClasses::of(&Presentation::torus(), &g);
    println!("torus classes as (ρ(a), ρ(b)):");
    for c in classes.classes() {
        let im: Vec<&str> = c.canonical.images.iter().map(|&e| g.label(e)).collect();
        println!("  {im:?}  orbit {}", c.orbit_size);
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
