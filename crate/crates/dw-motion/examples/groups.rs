//! Builds the built-in groups and prints their conjugacy classes.
//!
//! ```bash
//! cargo run --example groups
//! ```

use std::error::Error;

use dw_motion::group::FiniteGroup;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    for spec in ["Z:6", "S:3", "D:4", "Q8", "SL2:3", "prod(Z:2,S:3)"] {
        let g: FiniteGroup = spec.parse()?;
        let cc = g.conjugacy_classes();
        let sizes: Vec<usize> = cc.classes().iter().map(Vec::len).collect();
        println!("{spec:>14}: order {:>3}, {} classes, sizes {sizes:?}", g.order(), cc.len());
    }

    let s3: FiniteGroup = "S:3".parse()?;
    let t = s3.element("(12)")?;
    let c = s3.centralizer(&[t]);
    let names: Vec<&str> = c.iter().map(|&e| s3.label(e)).collect();
    println!("C_S3((12)) = {names:?}");

    let sl = FiniteGroup::special_linear(2, 3)?;
    let z = (0..sl.order()).find(|&e| sl.matrix(e) == Some(&[2, 0, 0, 2][..])).ok_or("-I missing")?;
    println!("SL(2,3): -I is {} with centralizer of order {}", sl.label(z), sl.centralizer(&[z]).len());
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
