//! Projective measurements: computational, arbitrary single-qubit bases,
//! and the two-qubit Bell basis.
//!
//! Every measurement is available as exhaustive branch enumeration (exact
//! probabilities with collapsed post-states) or as seeded sampling over
//! the enumerated branches. Measured qubits stay in the register,
//! collapsed to the outcome ket; dropping them is an explicit
//! [`StateVector::extract_subsystem`] step.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::state::{QubitLabel, StateVector, ALGEBRA_TOL, NEGLIGIBLE_PROB};

/// An orthonormal single-qubit basis {|x⟩, |y⟩}.
#[derive(Debug, Clone)]
pub struct BasisSpec {
    x_ket: [Complex64; 2],
    y_ket: [Complex64; 2],
    name: String,
}

impl BasisSpec {
    pub fn new(x_ket: [Complex64; 2], y_ket: [Complex64; 2], name: &str) -> Result<Self> {
        let nx = x_ket[0].norm_sqr() + x_ket[1].norm_sqr();
        let ny = y_ket[0].norm_sqr() + y_ket[1].norm_sqr();
        let overlap = x_ket[0].conj() * y_ket[0] + x_ket[1].conj() * y_ket[1];
        if (nx - 1.0).abs() > ALGEBRA_TOL
            || (ny - 1.0).abs() > ALGEBRA_TOL
            || overlap.norm() > ALGEBRA_TOL
        {
            return Err(Error::NotOrthonormal);
        }
        Ok(Self {
            x_ket,
            y_ket,
            name: name.to_string(),
        })
    }

    /// The computational basis {|0⟩, |1⟩} with outcomes labeled "0" and "1".
    pub fn computational() -> Self {
        Self {
            x_ket: [Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0)],
            y_ket: [Complex64::new(0.0, 0.0), Complex64::new(1.0, 0.0)],
            name: "computational".to_string(),
        }
    }

    pub fn x_ket(&self) -> &[Complex64; 2] {
        &self.x_ket
    }

    pub fn y_ket(&self) -> &[Complex64; 2] {
        &self.y_ket
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    fn outcome_labels(&self) -> [&'static str; 2] {
        if self.name == "computational" {
            ["0", "1"]
        } else {
            ["x", "y"]
        }
    }
}

/// The four Bell-measurement outcomes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BellOutcome {
    PhiPlus,
    PhiMinus,
    PsiPlus,
    PsiMinus,
}

impl BellOutcome {
    pub const ALL: [BellOutcome; 4] = [
        BellOutcome::PhiPlus,
        BellOutcome::PhiMinus,
        BellOutcome::PsiPlus,
        BellOutcome::PsiMinus,
    ];

    /// Amplitudes of the Bell ket over the ordered pair, big-endian.
    pub fn ket(self) -> [Complex64; 4] {
        let r = std::f64::consts::FRAC_1_SQRT_2;
        let c = |v: f64| Complex64::new(v, 0.0);
        match self {
            BellOutcome::PhiPlus => [c(r), c(0.0), c(0.0), c(r)],
            BellOutcome::PhiMinus => [c(r), c(0.0), c(0.0), c(-r)],
            BellOutcome::PsiPlus => [c(0.0), c(r), c(r), c(0.0)],
            BellOutcome::PsiMinus => [c(0.0), c(r), c(-r), c(0.0)],
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            BellOutcome::PhiPlus => "Phi+",
            BellOutcome::PhiMinus => "Phi-",
            BellOutcome::PsiPlus => "Psi+",
            BellOutcome::PsiMinus => "Psi-",
        }
    }

    /// The two classical bits Alice sends for this outcome.
    pub fn bits(self) -> (u8, u8) {
        match self {
            BellOutcome::PhiPlus => (0, 0),
            BellOutcome::PhiMinus => (0, 1),
            BellOutcome::PsiPlus => (1, 0),
            BellOutcome::PsiMinus => (1, 1),
        }
    }
}

/// One leaf of a measurement: outcome label, exact probability, and the
/// collapsed (still full-register) post-state.
///
/// Branches below probability 1e-14 are flagged `negligible`; their
/// post-state is the unnormalized projection and must not be consumed.
#[derive(Debug, Clone)]
pub struct MeasurementBranch {
    pub outcome_label: String,
    pub probability: f64,
    pub post_state: StateVector,
    pub negligible: bool,
}

/// Deterministic seed for sampled execution.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RngSeed(pub u64);

impl RngSeed {
    pub fn stream(self) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.0)
    }
}

fn branch_from_projection(
    label: &str,
    amps: Vec<Complex64>,
    state: &StateVector,
) -> MeasurementBranch {
    let prob: f64 = amps.iter().map(|a| a.norm_sqr()).sum();
    let raw = StateVector::from_raw(state.labels().to_vec(), amps);
    if prob < NEGLIGIBLE_PROB {
        MeasurementBranch {
            outcome_label: label.to_string(),
            probability: prob,
            post_state: raw,
            negligible: true,
        }
    } else {
        MeasurementBranch {
            outcome_label: label.to_string(),
            probability: prob,
            post_state: raw.renormalized(),
            negligible: false,
        }
    }
}

/// Measures `target` in an arbitrary orthonormal basis; two branches.
pub fn measure_in_basis(
    state: &StateVector,
    target: QubitLabel,
    basis: &BasisSpec,
) -> Result<Vec<MeasurementBranch>> {
    let shift = state.bit_shifts(&[target])?[0];
    let labels = basis.outcome_labels();
    let kets = [basis.x_ket(), basis.y_ket()];
    let mut out = Vec::with_capacity(2);
    for (ket, label) in kets.into_iter().zip(labels) {
        let mut amps = vec![Complex64::new(0.0, 0.0); state.dim()];
        for i0 in 0..state.dim() {
            if (i0 >> shift) & 1 == 1 {
                continue;
            }
            let i1 = i0 | (1 << shift);
            let coeff = ket[0].conj() * state.amps()[i0] + ket[1].conj() * state.amps()[i1];
            amps[i0] = coeff * ket[0];
            amps[i1] = coeff * ket[1];
        }
        out.push(branch_from_projection(label, amps, state));
    }
    Ok(out)
}

/// Measures `target` in the computational basis {|0⟩, |1⟩}.
pub fn measure_computational(
    state: &StateVector,
    target: QubitLabel,
) -> Result<Vec<MeasurementBranch>> {
    measure_in_basis(state, target, &BasisSpec::computational())
}

/// Bell measurement on an ordered pair of qubits; four branches keyed by
/// [`BellOutcome`], pair collapsed onto the outcome ket in the register.
pub fn measure_bell(
    state: &StateVector,
    pair: (QubitLabel, QubitLabel),
) -> Result<Vec<MeasurementBranch>> {
    if pair.0 == pair.1 {
        return Err(Error::DuplicateLabel(pair.0));
    }
    let shifts = state.bit_shifts(&[pair.0, pair.1])?;
    let (s0, s1) = (shifts[0], shifts[1]);
    let pmask = (1usize << s0) | (1usize << s1);
    let mut out = Vec::with_capacity(4);
    for outcome in BellOutcome::ALL {
        let ket = outcome.ket();
        let mut amps = vec![Complex64::new(0.0, 0.0); state.dim()];
        for base in 0..state.dim() {
            if base & pmask != 0 {
                continue;
            }
            let idx = |k: usize| base | ((k >> 1) & 1) << s0 | (k & 1) << s1;
            let coeff: Complex64 = (0..4).map(|k| ket[k].conj() * state.amps()[idx(k)]).sum();
            for k in 0..4 {
                amps[idx(k)] = coeff * ket[k];
            }
        }
        out.push(branch_from_projection(outcome.label(), amps, state));
    }
    Ok(out)
}

/// Draws one branch with its stated probability from an enumerated list.
pub fn sample_branch<'a, R: Rng>(
    branches: &'a [MeasurementBranch],
    rng: &mut R,
) -> Result<&'a MeasurementBranch> {
    let sum: f64 = branches.iter().map(|b| b.probability).sum();
    if (sum - 1.0).abs() > 1e-9 {
        return Err(Error::DegenerateProbabilities { sum });
    }
    let u: f64 = rng.gen::<f64>() * sum;
    let mut acc = 0.0;
    let mut last_real = None;
    for b in branches {
        if b.negligible {
            continue;
        }
        acc += b.probability;
        last_real = Some(b);
        if u < acc {
            return Ok(b);
        }
    }
    last_real.ok_or(Error::DegenerateProbabilities { sum })
}
