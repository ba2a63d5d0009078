//! Single sampled teleportation trajectories for both schemes.
//!
//! Run with: cargo run --example teleport_run

use num_complex::Complex64;
use qteleport::measure::RngSeed;
use qteleport::protocol::{run_scheme1_sampled, run_scheme2_sampled, ChannelParams, InputParams};

fn main() {
    let ch = ChannelParams::from_alpha_sq(0.8).unwrap();
    let inp = InputParams::new(Complex64::new(0.6, 0.0), Complex64::new(0.0, 0.8)).unwrap();

    println!("scheme 1 trajectories (success probability 2*alpha^2*beta^2 = 0.32):");
    for seed in 0..6 {
        let r = run_scheme1_sampled(&ch, &inp, RngSeed(seed)).unwrap();
        println!(
            "  seed {seed}: {:<10} success={:<5} bits={} fidelity={}",
            r.branch_trace.join(" "),
            r.success,
            r.message.total_bits,
            r.fidelity_vs_target
                .map(|f| format!("{f:.12}"))
                .unwrap_or_else(|| "-".into()),
        );
    }

    println!("\nscheme 2 trajectories (success probability 2*beta^2 = 0.40):");
    for seed in 0..6 {
        let r = run_scheme2_sampled(&ch, &inp, RngSeed(seed)).unwrap();
        println!(
            "  seed {seed}: {:<14} success={:<5} bits={} fidelity={}",
            r.branch_trace.join(" "),
            r.success,
            r.message.total_bits,
            r.fidelity_vs_target
                .map(|f| format!("{f:.12}"))
                .unwrap_or_else(|| "-".into()),
        );
    }

    // On success Bob holds a|00> + b|11> exactly.
    let success = (0..)
        .map(|s| run_scheme2_sampled(&ch, &inp, RngSeed(s)).unwrap())
        .find(|r| r.success)
        .unwrap();
    let bob = success.bob_state.unwrap();
    println!("\nBob's corrected state on a successful run:");
    for (idx, amp) in bob.amps().iter().enumerate() {
        if amp.norm() > 1e-12 {
            println!("  |{:02b}> : {amp}", idx);
        }
    }
}
