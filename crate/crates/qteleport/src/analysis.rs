//! Branch-tree reports, closed-form comparison, parameter sweeps, and
//! seeded Monte-Carlo estimation with binomial error bars.

use crate::error::{Error, Result};
use crate::measure::RngSeed;
use crate::protocol::{
    run_scheme1, run_scheme2, sample_scheme1, sample_scheme2, BranchRecord, ChannelParams,
    InputParams,
};

/// Exact branch table for one scheme at one parameter point, with the
/// closed-form success probability alongside for comparison.
#[derive(Debug, Clone)]
pub struct BranchReport {
    pub scheme: u8,
    pub channel: ChannelParams,
    pub input: InputParams,
    pub leaves: Vec<BranchRecord>,
    pub total_success_probability: f64,
    pub closed_form_probability: f64,
    pub max_abs_deviation: f64,
}

/// One grid point of the scheme-1 vs scheme-2 comparison.
#[derive(Debug, Clone, Copy)]
pub struct SweepRow {
    pub alpha_sq: f64,
    pub scheme1_prob: f64,
    pub scheme2_prob: f64,
    pub ratio: f64,
}

/// Monte-Carlo success-rate estimate.
#[derive(Debug, Clone, Copy)]
pub struct McEstimate {
    pub trials: u64,
    pub successes: u64,
    pub estimate: f64,
    pub std_error: f64,
}

/// The published closed forms: 2α²β² for scheme 1, 2β² for scheme 2.
pub fn closed_form_success(scheme: u8, p: &ChannelParams) -> Result<f64> {
    let (a2, b2) = (p.alpha() * p.alpha(), p.beta() * p.beta());
    match scheme {
        1 => Ok(2.0 * a2 * b2),
        2 => Ok(2.0 * b2),
        s => Err(Error::InvalidParameter(format!("scheme must be 1 or 2, got {s}"))),
    }
}

fn enumerate(scheme: u8, ch: &ChannelParams, inp: &InputParams) -> Result<Vec<BranchRecord>> {
    match scheme {
        1 => run_scheme1(ch, inp),
        2 => run_scheme2(ch, inp),
        s => Err(Error::InvalidParameter(format!("scheme must be 1 or 2, got {s}"))),
    }
}

/// Full exact enumeration of one scheme with closed-form comparison.
pub fn report(scheme: u8, ch: &ChannelParams, inp: &InputParams) -> Result<BranchReport> {
    let leaves = enumerate(scheme, ch, inp)?;
    let total_success_probability: f64 = leaves
        .iter()
        .filter(|l| l.success)
        .map(|l| l.probability)
        .sum();
    let closed_form_probability = closed_form_success(scheme, ch)?;
    Ok(BranchReport {
        scheme,
        channel: *ch,
        input: *inp,
        leaves,
        total_success_probability,
        closed_form_probability,
        max_abs_deviation: (total_success_probability - closed_form_probability).abs(),
    })
}

/// Evaluates both schemes' success probabilities over an α² grid.
pub fn sweep(grid: &[f64], inp: &InputParams) -> Result<Vec<SweepRow>> {
    let mut rows = Vec::with_capacity(grid.len());
    for &alpha_sq in grid {
        if !(0.5..=1.0 + 1e-12).contains(&alpha_sq) {
            return Err(Error::InvalidParameter(format!(
                "grid value {alpha_sq} outside [0.5, 1]"
            )));
        }
        let ch = ChannelParams::from_alpha_sq(alpha_sq.min(1.0))?;
        let r1 = report(1, &ch, inp)?;
        let r2 = report(2, &ch, inp)?;
        let (s1, s2) = (r1.total_success_probability, r2.total_success_probability);
        let ratio = if s2 > 0.0 { s1 / s2 } else { 0.0 };
        rows.push(SweepRow {
            alpha_sq,
            scheme1_prob: s1,
            scheme2_prob: s2,
            ratio,
        });
    }
    Ok(rows)
}

/// The default α² grid: 0.50 to 1.00 in steps of 0.05.
pub fn default_grid() -> Vec<f64> {
    (0..=10).map(|k| 0.5 + 0.05 * k as f64).collect()
}

/// Estimates the success probability by seeded sampled runs.
pub fn monte_carlo(
    scheme: u8,
    ch: &ChannelParams,
    inp: &InputParams,
    trials: u64,
    seed: RngSeed,
) -> Result<McEstimate> {
    if trials == 0 {
        return Err(Error::InvalidParameter("trials must be at least 1".into()));
    }
    let mut rng = seed.stream();
    let mut successes = 0u64;
    for _ in 0..trials {
        let outcome = match scheme {
            1 => sample_scheme1(ch, inp, &mut rng)?,
            2 => sample_scheme2(ch, inp, &mut rng)?,
            s => {
                return Err(Error::InvalidParameter(format!(
                    "scheme must be 1 or 2, got {s}"
                )))
            }
        };
        if outcome.success {
            successes += 1;
        }
    }
    let estimate = successes as f64 / trials as f64;
    let std_error = (estimate * (1.0 - estimate) / trials as f64).sqrt();
    Ok(McEstimate {
        trials,
        successes,
        estimate,
        std_error,
    })
}
