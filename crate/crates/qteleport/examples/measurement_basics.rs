//! State construction, tensor products, and projective collapse.
//!
//! Run with: cargo run --example measurement_basics

use num_complex::Complex64;
use qteleport::measure::{measure_bell, measure_in_basis, BasisSpec};
use qteleport::state::{QubitLabel, StateVector};

fn c(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

fn main() {
    let q1 = QubitLabel::Particle(1);
    let q2 = QubitLabel::Particle(2);
    let q3 = QubitLabel::Particle(3);

    // Build (0.6|0> + 0.8|1>) ⊗ Phi+ on particles 1, (2, 3).
    let single = StateVector::new(vec![q1], vec![c(0.6), c(0.8)]).unwrap();
    let r = std::f64::consts::FRAC_1_SQRT_2;
    let bell = StateVector::new(vec![q2, q3], vec![c(r), c(0.0), c(0.0), c(r)]).unwrap();
    let state = single.tensor(&bell).unwrap();
    println!("three-qubit register, norm = {}", state.norm());

    // Measure particle 1 in a rotated basis.
    let basis = BasisSpec::new([c(0.8), c(0.6)], [c(0.6), c(-0.8)], "rotated").unwrap();
    println!("\nmeasuring particle 1 in a rotated basis:");
    for branch in measure_in_basis(&state, q1, &basis).unwrap() {
        println!(
            "  outcome {:<2} probability {:.6}  post-state norm {:.6}",
            branch.outcome_label,
            branch.probability,
            branch.post_state.norm()
        );
    }

    // Bell measurement on the entangled pair: Phi+ comes out with certainty.
    println!("\nBell measurement on particles (2, 3):");
    for branch in measure_bell(&state, (q2, q3)).unwrap() {
        println!(
            "  outcome {:<4} probability {:.6}{}",
            branch.outcome_label,
            branch.probability,
            if branch.negligible { "  (negligible)" } else { "" }
        );
    }

    // Collapse is permanent: re-measuring reproduces the outcome.
    let first = &measure_bell(&state, (q2, q3)).unwrap()[0];
    let again = &measure_bell(&first.post_state, (q2, q3)).unwrap()[0];
    println!(
        "\nre-measuring the Phi+ branch gives Phi+ with probability {:.12}",
        again.probability
    );
}
