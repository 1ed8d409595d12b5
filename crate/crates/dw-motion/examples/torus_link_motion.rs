//! Motion-group representations of parallel torus links with pure-flux
//! labels, and the relator check for every commuting label pair.
//!
//! ```bash
//! cargo run --release --example torus_link_motion
//! ```

use std::error::Error;

use dw_motion::group::FiniteGroup;
use dw_motion::links::{motion_presentation, motion_rep, verify_motion_relations, FluxLabel, LinkFamily};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let g: FiniteGroup = "S:3".parse()?;
    for (p, q, n) in [(3, 2, 2), (3, 2, 3), (3, 1, 2), (1, 1, 3)] {
        let link = LinkFamily::torus(p, q, n)?;
        let mp = motion_presentation(&link);
        println!("{link} ({:?} family, {} relators)", mp.family, mp.relators.len());
        for a in 0..g.order() {
            for b in 0..g.order() {
                if !g.commutes(a, b) {
                    continue;
                }
                let m = motion_rep(&link, &g, FluxLabel { g: a, h: b }, None)?;
                let report = verify_motion_relations(&m.rep, &mp);
                if !report.all_hold() {
                    println!(
                        "  flux ({}, {}): dim {}, failing {:?}",
                        g.label(a),
                        g.label(b),
                        m.space.dim(),
                        report.failures()
                    );
                }
            }
        }
    }

    let link = LinkFamily::torus(3, 2, 2)?;
    let m = motion_rep(&link, &g, FluxLabel { g: 0, h: 0 }, None)?;
    println!("{link}, trivial flux: dim {}", m.space.dim());
    for (name, perm) in m.rep.names.iter().zip(&m.rep.perms) {
        println!("  {name} = {}", perm.cycle_notation());
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
