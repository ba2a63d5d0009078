//! CSV and JSON rendering of protocol results, branch reports, sweeps,
//! and Monte-Carlo estimates.
//!
//! Both formats serialize floating-point values with shortest round-trip
//! precision, so the same invocation carries identical numeric values in
//! either format. All records are newline-terminated UTF-8.

use serde_json::json;

use crate::analysis::{BranchReport, McEstimate, SweepRow};
use crate::protocol::{BranchRecord, ProtocolResult};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Csv,
    Json,
}

fn csv_opt_f64(v: Option<f64>) -> String {
    v.map(|x| x.to_string()).unwrap_or_default()
}

fn csv_opt_u8(v: Option<u8>) -> String {
    v.map(|x| x.to_string()).unwrap_or_default()
}

pub fn render_run_csv(r: &ProtocolResult) -> String {
    let mut out = String::from("scheme,success,fidelity,classical_bits,branch_trace\n");
    out.push_str(&format!(
        "{},{},{},{},{}\n",
        r.scheme,
        r.success,
        csv_opt_f64(r.fidelity_vs_target),
        r.message.total_bits,
        r.branch_trace.join("/"),
    ));
    out
}

pub fn render_run_json(r: &ProtocolResult) -> String {
    let mut s = serde_json::to_string_pretty(&json!({
        "scheme": r.scheme,
        "success": r.success,
        "fidelity": r.fidelity_vs_target,
        "classical_bits": r.message.total_bits,
        "branch_trace": r.branch_trace,
    }))
    .expect("serializable");
    s.push('\n');
    s
}

fn leaf_json(leaf_id: usize, l: &BranchRecord) -> serde_json::Value {
    json!({
        "leaf_id": leaf_id,
        "bell_outcome": l.bell.label(),
        "ancilla_outcome": l.ancilla,
        "basis_outcome": l.basis_outcome.map(|b| b.label()),
        "probability": l.probability,
        "success": l.success,
        "fidelity": l.fidelity,
        "classical_bits": l.message.total_bits,
    })
}

pub fn render_report_csv(r: &BranchReport) -> String {
    let mut out = String::from(
        "leaf_id,bell_outcome,ancilla_outcome,basis_outcome,probability,success,fidelity,classical_bits\n",
    );
    for (leaf_id, l) in r.leaves.iter().enumerate() {
        out.push_str(&format!(
            "{},{},{},{},{},{},{},{}\n",
            leaf_id,
            l.bell.label(),
            csv_opt_u8(l.ancilla),
            l.basis_outcome.map(|b| b.label()).unwrap_or(""),
            l.probability,
            l.success,
            csv_opt_f64(l.fidelity),
            l.message.total_bits,
        ));
    }
    out
}

pub fn render_report_json(r: &BranchReport) -> String {
    let leaves: Vec<_> = r
        .leaves
        .iter()
        .enumerate()
        .map(|(i, l)| leaf_json(i, l))
        .collect();
    let mut s = serde_json::to_string_pretty(&json!({
        "scheme": r.scheme,
        "alpha_sq": r.channel.alpha() * r.channel.alpha(),
        "leaves": leaves,
        "total_success_probability": r.total_success_probability,
        "closed_form_probability": r.closed_form_probability,
        "max_abs_deviation": r.max_abs_deviation,
    }))
    .expect("serializable");
    s.push('\n');
    s
}

pub fn render_sweep_csv(rows: &[SweepRow]) -> String {
    let mut out = String::from("alpha_sq,scheme1_prob,scheme2_prob,ratio\n");
    for r in rows {
        out.push_str(&format!(
            "{},{},{},{}\n",
            r.alpha_sq, r.scheme1_prob, r.scheme2_prob, r.ratio
        ));
    }
    out
}

pub fn render_sweep_json(rows: &[SweepRow]) -> String {
    let rows: Vec<_> = rows
        .iter()
        .map(|r| {
            json!({
                "alpha_sq": r.alpha_sq,
                "scheme1_prob": r.scheme1_prob,
                "scheme2_prob": r.scheme2_prob,
                "ratio": r.ratio,
            })
        })
        .collect();
    let mut s = serde_json::to_string_pretty(&json!({ "rows": rows })).expect("serializable");
    s.push('\n');
    s
}

/// z-score of the estimate against the closed form; 0 when both error
/// and difference vanish (degenerate certain outcomes).
pub fn z_score(estimate: f64, closed_form: f64, std_error: f64) -> f64 {
    let diff = estimate - closed_form;
    if std_error == 0.0 {
        if diff == 0.0 {
            0.0
        } else {
            f64::INFINITY.copysign(diff)
        }
    } else {
        diff / std_error
    }
}

pub fn render_mc_csv(m: &McEstimate, closed_form: f64) -> String {
    let z = z_score(m.estimate, closed_form, m.std_error);
    format!(
        "trials,successes,estimate,std_error,closed_form,z_score\n{},{},{},{},{},{}\n",
        m.trials, m.successes, m.estimate, m.std_error, closed_form, z
    )
}

pub fn render_mc_json(m: &McEstimate, closed_form: f64) -> String {
    let z = z_score(m.estimate, closed_form, m.std_error);
    let mut s = serde_json::to_string_pretty(&json!({
        "trials": m.trials,
        "successes": m.successes,
        "estimate": m.estimate,
        "std_error": m.std_error,
        "closed_form": closed_form,
        "z_score": z,
    }))
    .expect("serializable");
    s.push('\n');
    s
}
