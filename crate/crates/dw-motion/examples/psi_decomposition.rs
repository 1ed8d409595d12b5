//! Splits a torus-link space into blocks by the classes of (x, y) and maps
//! each block bijectively onto a punctured-cylinder space over a
//! centralizer.
//!
//! ```bash
//! cargo run --release --example psi_decomposition
//! ```

use std::error::Error;

use dw_motion::group::FiniteGroup;
use dw_motion::links::{psi_all_blocks, thm2_decomposition, BaseChoice, FluxLabel};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let g: FiniteGroup = "S:3".parse()?;
    let t = g.element("(12)")?;
    let flux = FluxLabel { g: t, h: 0 };
    let cc = g.conjugacy_classes();
    for r in psi_all_blocks(&g, 3, 2, 2, flux, BaseChoice::Minimal)? {
        println!(
            "block ([{}], [{}]): |S| = {}, |F| = {} over a centralizer of order {}, bijective {}, natural {}",
            g.label(cc.rep(r.x_class)),
            g.label(cc.rep(r.y_class)),
            r.s_dim(),
            r.f_dim,
            r.centralizer_order,
            r.bijective(),
            r.natural
        );
    }

    for spec in ["S:3", "Z:6"] {
        let g: FiniteGroup = spec.parse()?;
        let mut rows = Vec::new();
        for a in 0..g.order() {
            for b in 0..g.order() {
                if g.commutes(a, b) {
                    let r = thm2_decomposition(&g, 3, 2, 2, FluxLabel { g: a, h: b })?;
                    if r.lhs_dim > 0 {
                        rows.push(format!("({},{}) {}={}", g.label(a), g.label(b), r.lhs_dim, r.rhs_dim));
                    }
                }
            }
        }
        println!("{spec}: nonzero label spaces {}", rows.join(", "));
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
