//! Parses presentations and endomorphism files, and composes substitutions.
//!
//! ```bash
//! cargo run --example presentations
//! ```

use std::error::Error;

use dw_motion::presentation::{Endomorphism, Presentation};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let p = Presentation::parse(include_str!("../data/torus.pres"))?;
    print!("{}", p.to_text());

    let s = Endomorphism::parse(&p, include_str!("../data/t2_s.endo"))?;
    let t = Endomorphism::parse(&p, include_str!("../data/t2_t.endo"))?;
    println!("S:\n{}", s.render(&p));
    println!("T:\n{}", t.render(&p));

    // (ST)^3 and S^2 act on the abelianization as -I.
    let st = s.compose(&t);
    let st3 = st.compose(&st).compose(&st);
    println!("(ST)^3:\n{}", st3.render(&p));
    println!("S^2:\n{}", s.compose(&s).render(&p));

    let w = p.word("a b a^-1 b^-1 a a")?;
    println!("a b a^-1 b^-1 a a reduces to {}", p.render(&w));
    println!("its image under T is {}", p.render(&w.substitute(&t)));

    let parsed = Presentation::parse("gens: x y\nrel: x^3 y^-2  # trefoil\n")?;
    println!("trefoil group: {}", parsed.to_text().trim_end().replace('\n', "; "));
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
