//! Success-probability comparison of the two schemes over the channel
//! entanglement grid.
//!
//! Run with: cargo run --example sweep_comparison

use num_complex::Complex64;
use qteleport::analysis::{default_grid, sweep};
use qteleport::protocol::InputParams;

fn main() {
    let inp = InputParams::new(Complex64::new(0.6, 0.0), Complex64::new(0.8, 0.0)).unwrap();
    let rows = sweep(&default_grid(), &inp).unwrap();
    println!("{:>9} {:>13} {:>13} {:>8}", "alpha^2", "scheme1", "scheme2", "ratio");
    for r in &rows {
        println!(
            "{:>9.2} {:>13.10} {:>13.10} {:>8.4}",
            r.alpha_sq, r.scheme1_prob, r.scheme2_prob, r.ratio
        );
    }
    println!("\nscheme 2 dominates everywhere; the ratio 2a\u{b2}b\u{b2} / 2b\u{b2} equals alpha^2.");
    println!("at alpha^2 = 0.5 (GHZ channel) scheme 2 becomes deterministic.");
}
