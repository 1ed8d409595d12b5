//! Runs every example so they stay in sync with the library.

#[allow(dead_code)]
#[path = "../examples/characters.rs"]
mod characters;
#[allow(dead_code)]
#[path = "../examples/cli_report.rs"]
mod cli_report;
#[allow(dead_code)]
#[path = "../examples/dimension_reduction.rs"]
mod dimension_reduction;
#[allow(dead_code)]
#[path = "../examples/groups.rs"]
mod groups;
#[allow(dead_code)]
#[path = "../examples/homomorphisms.rs"]
mod homomorphisms;
#[allow(dead_code)]
#[path = "../examples/label_counts.rs"]
mod label_counts;
#[allow(dead_code)]
#[path = "../examples/mapping_class_rep.rs"]
mod mapping_class_rep;
#[allow(dead_code)]
#[path = "../examples/necklace.rs"]
mod necklace;
#[allow(dead_code)]
#[path = "../examples/presentations.rs"]
mod presentations;
#[allow(dead_code)]
#[path = "../examples/psi_decomposition.rs"]
mod psi_decomposition;
#[allow(dead_code)]
#[path = "../examples/state_sum.rs"]
mod state_sum;
#[allow(dead_code)]
#[path = "../examples/torus_link_motion.rs"]
mod torus_link_motion;

#[test]
fn characters_runs() {
    characters::run_example().unwrap();
}

#[test]
fn cli_report_runs() {
    cli_report::run_example().unwrap();
}

#[test]
fn dimension_reduction_runs() {
    dimension_reduction::run_example().unwrap();
}

#[test]
fn groups_runs() {
    groups::run_example().unwrap();
}

#[test]
fn homomorphisms_runs() {
    homomorphisms::run_example().unwrap();
}

#[test]
fn label_counts_runs() {
    label_counts::run_example().unwrap();
}

#[test]
fn mapping_class_rep_runs() {
    mapping_class_rep::run_example().unwrap();
}

#[test]
fn necklace_runs() {
    necklace::run_example().unwrap();
}

#[test]
fn presentations_runs() {
    presentations::run_example().unwrap();
}

#[test]
fn psi_decomposition_runs() {
    psi_decomposition::run_example().unwrap();
}

#[test]
fn state_sum_runs() {
    state_sum::run_example().unwrap();
}

#[test]
fn torus_link_motion_runs() {
    torus_link_motion::run_example().unwrap();
}
