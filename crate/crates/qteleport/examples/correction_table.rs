//! The full correction tables: which Pauli pair Bob applies for each
//! combination of Alice's measurement outcomes, and which branches are
//! unrecoverable in scheme 1.
//!
//! Run with: cargo run --example correction_table

use qteleport::measure::BellOutcome;
use qteleport::protocol::{correction_scheme1, correction_scheme2, BasisOutcome};

fn main() {
    println!("scheme 1 (conclusive basis on particle 5):");
    println!("  {:<6} {:<3} correction on (1, 2)", "Bell", "p5");
    for bell in BellOutcome::ALL {
        for outcome in BasisOutcome::ALL {
            let entry = match correction_scheme1(bell, outcome) {
                Some(op) => op.label(),
                None => "unrecoverable".to_string(),
            };
            println!("  {:<6} {:<3} {entry}", bell.label(), outcome.label());
        }
    }

    println!("\nscheme 2 (balanced basis on particle 5 after the ancilla filter):");
    println!("  {:<6} {:<3} correction on (1, 2)", "Bell", "p5");
    for bell in BellOutcome::ALL {
        for outcome in BasisOutcome::ALL {
            println!(
                "  {:<6} {:<3} {}",
                bell.label(),
                outcome.label(),
                correction_scheme2(bell, outcome).label()
            );
        }
    }
}
