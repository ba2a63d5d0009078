//! Seeded Monte-Carlo verification of the closed-form success
//! probabilities with binomial error bars.
//!
//! Run with: cargo run --release --example monte_carlo

use num_complex::Complex64;
use qteleport::analysis::{closed_form_success, monte_carlo};
use qteleport::measure::RngSeed;
use qteleport::output::z_score;
use qteleport::protocol::{ChannelParams, InputParams};

fn main() {
    let ch = ChannelParams::from_alpha_sq(0.8).unwrap();
    let inp = InputParams::new(Complex64::new(0.6, 0.0), Complex64::new(0.8, 0.0)).unwrap();
    let trials = 100_000;

    for scheme in [1u8, 2u8] {
        let closed = closed_form_success(scheme, &ch).unwrap();
        let m = monte_carlo(scheme, &ch, &inp, trials, RngSeed(2024)).unwrap();
        println!(
            "scheme {scheme}: {}/{} successes, estimate {:.5} +/- {:.5}, closed form {:.5}, z = {:+.3}",
            m.successes,
            m.trials,
            m.estimate,
            m.std_error,
            closed,
            z_score(m.estimate, closed, m.std_error),
        );
    }

    // identical seed, identical counts
    let a = monte_carlo(1, &ch, &inp, 10_000, RngSeed(7)).unwrap();
    let b = monte_carlo(1, &ch, &inp, 10_000, RngSeed(7)).unwrap();
    println!(
        "\nreproducibility: seed 7 twice gives {} and {} successes",
        a.successes, b.successes
    );
}
