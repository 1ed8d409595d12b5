//! Runs the command-line front end in process and prints its JSON report.
//!
//! ```bash
//! cargo run --example cli_report
//! ```

use std::error::Error;

use dw_motion::cli;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = cli::run(["dwm", "dw", "labels", "--group", "S:3", "--surface", "torus"], &mut out, &mut err);
    print!("{}", String::from_utf8(out)?);
    if code != 0 {
        return Err(String::from_utf8(err)?.into());
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
