//! Compares the necklace-link motion representation with the braid
//! representation on a punctured disk over the axis centralizer.
//!
//! ```bash
//! cargo run --release --example necklace
//! ```

use std::error::Error;

use dw_motion::group::FiniteGroup;
use dw_motion::links::{motion_presentation, motion_rep, necklace_t_check, verify_motion_relations, FluxLabel, LinkFamily};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let g: FiniteGroup = "S:3".parse()?;
    let c = g.element("(123)")?;
    for n in [2, 3] {
        for gl in 0..g.order() {
            if !g.commutes(gl, c) {
                continue;
            }
            let r = necklace_t_check(&g, n, gl, c, c)?;
            println!(
                "n = {n}, g = {:>5}: link dim {}, disk dim {}, T bijective {}, squares commute {}, images equal {} (order {:?})",
                g.label(gl),
                r.link_dim,
                r.disk_dim,
                r.bijective,
                r.commutes,
                r.images_equal,
                r.link_image_order
            );
        }
    }

    let link = LinkFamily::Necklace(3);
    let m = motion_rep(&link, &g, FluxLabel { g: 0, h: c }, Some(FluxLabel { g: c, h: c }))?;
    let report = verify_motion_relations(&m.rep, &motion_presentation(&link));
    println!("necklace:3 relators hold: {}", report.all_hold());
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
