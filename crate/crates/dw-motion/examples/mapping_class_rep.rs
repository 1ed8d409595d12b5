//! Permutation representations of the mapping class groups of T² and T³,
//! including the order of the SL(3,Z) image.
//!
//! ```bash
//! cargo run --release --example mapping_class_rep
//! ```

use std::error::Error;

use dw_motion::dw::{mcg_rep, sl3_generation_identities, DwSpace, Surface};
use dw_motion::group::FiniteGroup;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let g: FiniteGroup = "S:3".parse()?;
    let torus = Surface::Torus;
    let space = DwSpace::new(&torus.presentation(), &g);
    let rep = mcg_rep(&space, &g, &torus.mapping_class_generators())?;
    println!("V_S3(T²) has dimension {}", space.dim());
    for (name, p) in rep.names.iter().zip(&rep.perms) {
        println!("  {name} = {}", p.cycle_notation());
    }
    println!("  image order {:?}", rep.image_order(1 << 16));

    let t3 = Surface::ThreeTorus;
    for n in [2, 3] {
        let zn = FiniteGroup::cyclic(n)?;
        let space = DwSpace::new(&t3.presentation(), &zn);
        let rep = mcg_rep(&space, &zn, &t3.mapping_class_generators())?;
        let sl3 = FiniteGroup::special_linear(3, n as u32)?;
        println!(
            "T³ over Z{n}: dim {}, image order {:?}, |SL(3,{n})| = {}",
            space.dim(),
            rep.image_order(1 << 20),
            sl3.order()
        );
    }
    let (t, s) = sl3_generation_identities();
    println!("T3 = T21: {t}, S3 = S21·S23: {s}");
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
