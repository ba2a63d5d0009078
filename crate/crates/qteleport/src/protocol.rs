//! The two probabilistic teleportation schemes as executable pipelines.
//!
//! Both schemes teleport a|00⟩₄₅ + b|11⟩₄₅ over the channel
//! α|000⟩₁₂₃ + β|111⟩₁₂₃ (0 ≤ β ≤ α). Scheme 1 follows the Bell
//! measurement on particles 3, 4 with a measurement of particle 5 in a
//! channel-adapted basis and succeeds with probability 2α²β². Scheme 2
//! inserts a collective unitary on particle 5 plus an ancilla, filters
//! on the ancilla, and succeeds with probability 2β².

use num_complex::Complex64;
use rand::Rng;

use crate::error::{Error, Result};
use crate::measure::{
    measure_bell, measure_computational, measure_in_basis, sample_branch, BasisSpec, BellOutcome,
    MeasurementBranch, RngSeed,
};
use crate::state::{QubitLabel, StateVector, UnitaryMatrix, NEGLIGIBLE_PROB, NORM_TOL};

pub const P1: QubitLabel = QubitLabel::Particle(1);
pub const P2: QubitLabel = QubitLabel::Particle(2);
pub const P3: QubitLabel = QubitLabel::Particle(3);
pub const P4: QubitLabel = QubitLabel::Particle(4);
pub const P5: QubitLabel = QubitLabel::Particle(5);
pub const ANCILLA: QubitLabel = QubitLabel::Ancilla;

/// Real channel coefficients with α² + β² = 1 and 0 ≤ β ≤ α.
#[derive(Debug, Clone, Copy)]
pub struct ChannelParams {
    alpha: f64,
    beta: f64,
}

impl ChannelParams {
    pub fn new(alpha: f64, beta: f64) -> Result<Self> {
        if !alpha.is_finite() || !beta.is_finite() || alpha < 0.0 || beta < 0.0 {
            return Err(Error::InvalidParameter(format!(
                "channel coefficients must be finite and nonnegative, got ({alpha}, {beta})"
            )));
        }
        let norm_sq = alpha * alpha + beta * beta;
        if (norm_sq - 1.0).abs() > NORM_TOL {
            return Err(Error::NotNormalized {
                norm: norm_sq.sqrt(),
            });
        }
        let norm = norm_sq.sqrt();
        let (alpha, beta) = (alpha / norm, beta / norm);
        if beta > alpha {
            return Err(Error::BetaExceedsAlpha { alpha, beta });
        }
        Ok(Self { alpha, beta })
    }

    /// Builds from α²; β² is inferred as 1 − α².
    pub fn from_alpha_sq(alpha_sq: f64) -> Result<Self> {
        // tolerate rounding from grid accumulation at the endpoints
        if !(-1e-12..=1.0 + 1e-12).contains(&alpha_sq) {
            return Err(Error::InvalidParameter(format!(
                "alpha-sq must lie in [0, 1], got {alpha_sq}"
            )));
        }
        let alpha_sq = alpha_sq.clamp(0.0, 1.0);
        Self::new(alpha_sq.sqrt(), (1.0 - alpha_sq).sqrt())
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }
}

/// Coefficients of the entangled state to teleport, |a|² + |b|² = 1.
#[derive(Debug, Clone, Copy)]
pub struct InputParams {
    a: Complex64,
    b: Complex64,
}

impl InputParams {
    pub fn new(a: Complex64, b: Complex64) -> Result<Self> {
        if !a.re.is_finite() || !a.im.is_finite() || !b.re.is_finite() || !b.im.is_finite() {
            return Err(Error::NonFiniteAmplitude);
        }
        let norm = (a.norm_sqr() + b.norm_sqr()).sqrt();
        if (norm - 1.0).abs() > NORM_TOL {
            return Err(Error::NotNormalized { norm });
        }
        Ok(Self {
            a: a / norm,
            b: b / norm,
        })
    }

    pub fn a(&self) -> Complex64 {
        self.a
    }

    pub fn b(&self) -> Complex64 {
        self.b
    }

    /// The teleportation target a|00⟩₁₂ + b|11⟩₁₂ on Bob's particles.
    pub fn target_state(&self) -> StateVector {
        let zero = Complex64::new(0.0, 0.0);
        StateVector::new(vec![P1, P2], vec![self.a, zero, zero, self.b])
            .expect("normalized by construction")
    }
}

/// Single-qubit Pauli factor of a correction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Pauli {
    I,
    X,
    Z,
    ZX,
}

impl Pauli {
    pub const ALL: [Pauli; 4] = [Pauli::I, Pauli::X, Pauli::Z, Pauli::ZX];

    pub fn matrix(self) -> UnitaryMatrix {
        match self {
            Pauli::I => UnitaryMatrix::identity(2),
            Pauli::X => UnitaryMatrix::pauli_x(),
            Pauli::Z => UnitaryMatrix::pauli_z(),
            Pauli::ZX => UnitaryMatrix::pauli_z().matmul(&UnitaryMatrix::pauli_x()),
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Pauli::I => "I",
            Pauli::X => "X",
            Pauli::Z => "Z",
            Pauli::ZX => "ZX",
        }
    }
}

/// Local correction Bob applies: one Pauli factor per particle.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CorrectionOp {
    pub particle1: Pauli,
    pub particle2: Pauli,
}

impl CorrectionOp {
    pub fn apply(&self, state: &StateVector) -> Result<StateVector> {
        state
            .apply_unitary(&[P1], &self.particle1.matrix())?
            .apply_unitary(&[P2], &self.particle2.matrix())
    }

    pub fn label(&self) -> String {
        format!("{}⊗{}", self.particle1.label(), self.particle2.label())
    }
}

/// Classical bits Alice sends for one leaf.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ClassicalMessage {
    pub bell_bits: u8,
    pub flag_bits: u8,
    pub total_bits: u8,
}

impl ClassicalMessage {
    fn new(flag_bits: u8) -> Self {
        Self {
            bell_bits: 2,
            flag_bits,
            total_bits: 2 + flag_bits,
        }
    }
}

/// Outcome of the conclusive-basis (or balanced-basis) measurement.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BasisOutcome {
    X,
    Y,
}

impl BasisOutcome {
    pub const ALL: [BasisOutcome; 2] = [BasisOutcome::X, BasisOutcome::Y];

    pub fn label(self) -> &'static str {
        match self {
            BasisOutcome::X => "x",
            BasisOutcome::Y => "y",
        }
    }
}

/// One leaf of a scheme's branch tree.
#[derive(Debug, Clone)]
pub struct BranchRecord {
    pub scheme: u8,
    pub bell: BellOutcome,
    /// Ancilla measurement result (scheme 2 only).
    pub ancilla: Option<u8>,
    /// Basis measurement on particle 5; absent on scheme-2 failure leaves.
    pub basis_outcome: Option<BasisOutcome>,
    pub probability: f64,
    pub success: bool,
    pub correction: Option<CorrectionOp>,
    /// Bob's corrected two-qubit state, present only on non-negligible success leaves.
    pub bob_state: Option<StateVector>,
    /// Fidelity of the corrected Bob state against a|00⟩+b|11⟩.
    pub fidelity: Option<f64>,
    pub message: ClassicalMessage,
    /// Full collapsed register at the leaf, before correction.
    pub post_state: Option<StateVector>,
    pub negligible: bool,
}

impl BranchRecord {
    pub fn trace(&self) -> Vec<String> {
        let mut t = vec![self.bell.label().to_string()];
        if let Some(a) = self.ancilla {
            t.push(format!("a={a}"));
        }
        if let Some(b) = self.basis_outcome {
            t.push(b.label().to_string());
        }
        t
    }
}

/// Outcome of one sampled protocol run.
#[derive(Debug, Clone)]
pub struct ProtocolResult {
    pub scheme: u8,
    pub success: bool,
    pub bob_state: Option<StateVector>,
    pub fidelity_vs_target: Option<f64>,
    pub message: ClassicalMessage,
    pub branch_trace: Vec<String>,
}

/// α|000⟩₁₂₃ + β|111⟩₁₂₃.
pub fn make_channel(p: &ChannelParams) -> StateVector {
    let mut amps = vec![Complex64::new(0.0, 0.0); 8];
    amps[0] = Complex64::new(p.alpha, 0.0);
    amps[7] = Complex64::new(p.beta, 0.0);
    StateVector::new(vec![P1, P2, P3], amps).expect("normalized by construction")
}

/// a|00⟩₄₅ + b|11⟩₄₅.
pub fn make_input(p: &InputParams) -> StateVector {
    let zero = Complex64::new(0.0, 0.0);
    StateVector::new(vec![P4, P5], vec![p.a, zero, zero, p.b])
        .expect("normalized by construction")
}

/// Channel-adapted basis: |x⟩ = α|0⟩ + β|1⟩, |y⟩ = β|0⟩ − α|1⟩.
pub fn conclusive_basis(p: &ChannelParams) -> BasisSpec {
    let c = |v: f64| Complex64::new(v, 0.0);
    BasisSpec::new([c(p.alpha), c(p.beta)], [c(p.beta), c(-p.alpha)], "conclusive")
        .expect("orthonormal for normalized channel")
}

/// Balanced basis: |x⟩ = (|0⟩+|1⟩)/√2, |y⟩ = (|0⟩−|1⟩)/√2.
pub fn balanced_basis() -> BasisSpec {
    let r = std::f64::consts::FRAC_1_SQRT_2;
    let c = |v: f64| Complex64::new(v, 0.0);
    BasisSpec::new([c(r), c(r)], [c(r), c(-r)], "balanced").expect("orthonormal")
}

// The published 4x4 filters are written over the basis ordering
// {|0⟩₅|0⟩ₐ, |1⟩₅|0⟩ₐ, |0⟩₅|1⟩ₐ, |1⟩₅|1⟩ₐ} (particle 5 least
// significant). Re-index to our big-endian (5, a) target ordering so the
// matrices can be applied with targets [P5, ANCILLA] directly.
fn reindex_to_big_endian(rows: [[f64; 4]; 4]) -> Result<UnitaryMatrix> {
    const PERM: [usize; 4] = [0, 2, 1, 3];
    let mut entries = [0.0f64; 16];
    for (i, &pi) in PERM.iter().enumerate() {
        for (j, &pj) in PERM.iter().enumerate() {
            entries[i * 4 + j] = rows[pi][pj];
        }
    }
    UnitaryMatrix::from_reals(4, &entries)
}

/// Collective filter on (particle 5, ancilla) for the Φ± Bell branches.
pub fn collective_unitary_phi(p: &ChannelParams) -> Result<UnitaryMatrix> {
    if p.alpha == 0.0 {
        return Err(Error::InvalidParameter("alpha must be positive".into()));
    }
    let r = p.beta / p.alpha;
    let k = (1.0 - r * r).max(0.0).sqrt();
    reindex_to_big_endian([
        [r, 0.0, k, 0.0],
        [0.0, 1.0, 0.0, 0.0],
        [0.0, 0.0, 0.0, -1.0],
        [k, 0.0, -r, 0.0],
    ])
}

/// Collective filter on (particle 5, ancilla) for the Ψ± Bell branches.
pub fn collective_unitary_psi(p: &ChannelParams) -> Result<UnitaryMatrix> {
    if p.alpha == 0.0 {
        return Err(Error::InvalidParameter("alpha must be positive".into()));
    }
    let r = p.beta / p.alpha;
    let k = (1.0 - r * r).max(0.0).sqrt();
    reindex_to_big_endian([
        [0.0, r, k, 0.0],
        [1.0, 0.0, 0.0, 0.0],
        [0.0, 0.0, 0.0, -1.0],
        [0.0, k, -r, 0.0],
    ])
}

/// Scheme-1 correction table. `None` marks the unrecoverable branches:
/// Φ± with outcome x and Ψ± with outcome y leave Bob holding states that
/// depend on the unknown input coefficients.
pub fn correction_scheme1(bell: BellOutcome, outcome: BasisOutcome) -> Option<CorrectionOp> {
    use BasisOutcome::{X, Y};
    use BellOutcome::*;
    match (bell, outcome) {
        (PhiPlus, X) | (PhiMinus, X) | (PsiPlus, Y) | (PsiMinus, Y) => None,
        (PhiPlus, Y) => Some(CorrectionOp {
            particle1: Pauli::Z,
            particle2: Pauli::I,
        }),
        (PhiMinus, Y) => Some(CorrectionOp {
            particle1: Pauli::I,
            particle2: Pauli::I,
        }),
        (PsiPlus, X) => Some(CorrectionOp {
            particle1: Pauli::X,
            particle2: Pauli::X,
        }),
        (PsiMinus, X) => Some(CorrectionOp {
            particle1: Pauli::ZX,
            particle2: Pauli::X,
        }),
    }
}

/// Scheme-2 correction table: total, since failure is decided by the ancilla.
pub fn correction_scheme2(bell: BellOutcome, outcome: BasisOutcome) -> CorrectionOp {
    use BasisOutcome::{X, Y};
    use BellOutcome::*;
    let (p1, p2) = match (bell, outcome) {
        (PhiPlus, X) | (PhiMinus, Y) => (Pauli::I, Pauli::I),
        (PhiPlus, Y) | (PhiMinus, X) => (Pauli::Z, Pauli::I),
        (PsiPlus, X) | (PsiMinus, Y) => (Pauli::X, Pauli::X),
        (PsiPlus, Y) | (PsiMinus, X) => (Pauli::ZX, Pauli::X),
    };
    CorrectionOp {
        particle1: p1,
        particle2: p2,
    }
}

fn full_initial_state(ch: &ChannelParams, inp: &InputParams) -> StateVector {
    make_channel(ch)
        .tensor(&make_input(inp))
        .expect("disjoint labels")
}

fn bell_outcome_of(branch: &MeasurementBranch) -> BellOutcome {
    BellOutcome::ALL
        .into_iter()
        .find(|o| o.label() == branch.outcome_label)
        .expect("bell branch label")
}

fn basis_outcome_of(branch: &MeasurementBranch) -> BasisOutcome {
    match branch.outcome_label.as_str() {
        "x" => BasisOutcome::X,
        _ => BasisOutcome::Y,
    }
}

#[allow(clippy::too_many_arguments)]
fn finish_leaf(
    scheme: u8,
    bell: BellOutcome,
    ancilla: Option<u8>,
    outcome: BasisOutcome,
    probability: f64,
    negligible: bool,
    post: Option<&StateVector>,
    correction: Option<CorrectionOp>,
    message: ClassicalMessage,
    target: &StateVector,
) -> Result<BranchRecord> {
    let success = correction.is_some();
    let (bob_state, fidelity) = match (&correction, post, negligible) {
        (Some(op), Some(state), false) => {
            let bob = state.extract_subsystem(&[P1, P2])?;
            let corrected = op.apply(&bob)?;
            let fid = corrected.fidelity(target)?;
            (Some(corrected), Some(fid))
        }
        _ => (None, None),
    };
    Ok(BranchRecord {
        scheme,
        bell,
        ancilla,
        basis_outcome: Some(outcome),
        probability,
        success,
        correction,
        bob_state,
        fidelity,
        message,
        post_state: post.cloned(),
        negligible,
    })
}

/// Enumerates all 8 leaves of scheme 1 (4 Bell × 2 basis outcomes).
pub fn run_scheme1(ch: &ChannelParams, inp: &InputParams) -> Result<Vec<BranchRecord>> {
    let full = full_initial_state(ch, inp);
    let target = inp.target_state();
    let basis = conclusive_basis(ch);
    let mut leaves = Vec::with_capacity(8);
    for bell_branch in measure_bell(&full, (P3, P4))? {
        let bell = bell_outcome_of(&bell_branch);
        if bell_branch.negligible {
            // Fixed-shape tree: emit both children with zero probability.
            for outcome in BasisOutcome::ALL {
                leaves.push(finish_leaf(
                    1,
                    bell,
                    None,
                    outcome,
                    0.0,
                    true,
                    None,
                    correction_scheme1(bell, outcome),
                    ClassicalMessage::new(1),
                    &target,
                )?);
            }
            continue;
        }
        for sub in measure_in_basis(&bell_branch.post_state, P5, &basis)? {
            let outcome = basis_outcome_of(&sub);
            let prob = bell_branch.probability * sub.probability;
            let negligible = sub.negligible || prob < NEGLIGIBLE_PROB;
            let post = if negligible { None } else { Some(&sub.post_state) };
            leaves.push(finish_leaf(
                1,
                bell,
                None,
                outcome,
                prob,
                negligible,
                post,
                correction_scheme1(bell, outcome),
                ClassicalMessage::new(1),
                &target,
            )?);
        }
    }
    Ok(leaves)
}

fn scheme2_collective(ch: &ChannelParams, bell: BellOutcome) -> Result<UnitaryMatrix> {
    match bell {
        BellOutcome::PhiPlus | BellOutcome::PhiMinus => collective_unitary_phi(ch),
        BellOutcome::PsiPlus | BellOutcome::PsiMinus => collective_unitary_psi(ch),
    }
}

fn scheme2_failure_leaf(
    bell: BellOutcome,
    probability: f64,
    negligible: bool,
    post: Option<&StateVector>,
) -> BranchRecord {
    BranchRecord {
        scheme: 2,
        bell,
        ancilla: Some(1),
        basis_outcome: None,
        probability,
        success: false,
        correction: None,
        bob_state: None,
        fidelity: None,
        message: ClassicalMessage::new(1),
        post_state: post.cloned(),
        negligible,
    }
}

/// Enumerates all 12 leaves of scheme 2:
/// 4 Bell × (ancilla-|1⟩ failure leaf + ancilla-|0⟩ × 2 basis outcomes).
pub fn run_scheme2(ch: &ChannelParams, inp: &InputParams) -> Result<Vec<BranchRecord>> {
    let full = full_initial_state(ch, inp);
    let target = inp.target_state();
    let basis = balanced_basis();
    let mut leaves = Vec::with_capacity(12);
    for bell_branch in measure_bell(&full, (P3, P4))? {
        let bell = bell_outcome_of(&bell_branch);
        if bell_branch.negligible {
            leaves.push(scheme2_failure_leaf(bell, 0.0, true, None));
            for outcome in BasisOutcome::ALL {
                leaves.push(finish_leaf(
                    2,
                    bell,
                    Some(0),
                    outcome,
                    0.0,
                    true,
                    None,
                    Some(correction_scheme2(bell, outcome)),
                    ClassicalMessage::new(2),
                    &target,
                )?);
            }
            continue;
        }
        let with_ancilla = bell_branch
            .post_state
            .tensor(&StateVector::basis_qubit(ANCILLA, 0))?;
        let filtered =
            with_ancilla.apply_unitary(&[P5, ANCILLA], &scheme2_collective(ch, bell)?)?;
        let ancilla_branches = measure_computational(&filtered, ANCILLA)?;
        // branch 0 is |0⟩ₐ (continue), branch 1 is |1⟩ₐ (failure)
        let fail = &ancilla_branches[1];
        let fail_prob = bell_branch.probability * fail.probability;
        let fail_negl = fail.negligible || fail_prob < NEGLIGIBLE_PROB;
        leaves.push(scheme2_failure_leaf(
            bell,
            fail_prob,
            fail_negl,
            if fail_negl { None } else { Some(&fail.post_state) },
        ));
        let cont = &ancilla_branches[0];
        if cont.negligible {
            for outcome in BasisOutcome::ALL {
                leaves.push(finish_leaf(
                    2,
                    bell,
                    Some(0),
                    outcome,
                    0.0,
                    true,
                    None,
                    Some(correction_scheme2(bell, outcome)),
                    ClassicalMessage::new(2),
                    &target,
                )?);
            }
            continue;
        }
        let cont_prob = bell_branch.probability * cont.probability;
        for sub in measure_in_basis(&cont.post_state, P5, &basis)? {
            let outcome = basis_outcome_of(&sub);
            let prob = cont_prob * sub.probability;
            let negligible = sub.negligible || prob < NEGLIGIBLE_PROB;
            let post = if negligible { None } else { Some(&sub.post_state) };
            leaves.push(finish_leaf(
                2,
                bell,
                Some(0),
                outcome,
                prob,
                negligible,
                post,
                Some(correction_scheme2(bell, outcome)),
                ClassicalMessage::new(2),
                &target,
            )?);
        }
    }
    Ok(leaves)
}

fn result_from_leaf(leaf: &BranchRecord) -> ProtocolResult {
    ProtocolResult {
        scheme: leaf.scheme,
        success: leaf.success,
        bob_state: leaf.bob_state.clone(),
        fidelity_vs_target: leaf.fidelity,
        message: leaf.message,
        branch_trace: leaf.trace(),
    }
}

/// Plays one scheme-1 trajectory: Bell sample, then conclusive-basis sample.
pub fn run_scheme1_sampled(
    ch: &ChannelParams,
    inp: &InputParams,
    seed: RngSeed,
) -> Result<ProtocolResult> {
    let mut rng = seed.stream();
    sample_scheme1(ch, inp, &mut rng)
}

pub fn sample_scheme1<R: Rng>(
    ch: &ChannelParams,
    inp: &InputParams,
    rng: &mut R,
) -> Result<ProtocolResult> {
    let full = full_initial_state(ch, inp);
    let target = inp.target_state();
    let bell_branch = {
        let branches = measure_bell(&full, (P3, P4))?;
        sample_branch(&branches, rng)?.clone()
    };
    let bell = bell_outcome_of(&bell_branch);
    let sub = {
        let branches = measure_in_basis(&bell_branch.post_state, P5, &conclusive_basis(ch))?;
        sample_branch(&branches, rng)?.clone()
    };
    let outcome = basis_outcome_of(&sub);
    let leaf = finish_leaf(
        1,
        bell,
        None,
        outcome,
        bell_branch.probability * sub.probability,
        false,
        Some(&sub.post_state),
        correction_scheme1(bell, outcome),
        ClassicalMessage::new(1),
        &target,
    )?;
    Ok(result_from_leaf(&leaf))
}

/// Plays one scheme-2 trajectory: Bell sample, collective filter,
/// ancilla sample, then (on |0⟩ₐ) balanced-basis sample.
pub fn run_scheme2_sampled(
    ch: &ChannelParams,
    inp: &InputParams,
    seed: RngSeed,
) -> Result<ProtocolResult> {
    let mut rng = seed.stream();
    sample_scheme2(ch, inp, &mut rng)
}

pub fn sample_scheme2<R: Rng>(
    ch: &ChannelParams,
    inp: &InputParams,
    rng: &mut R,
) -> Result<ProtocolResult> {
    let full = full_initial_state(ch, inp);
    let target = inp.target_state();
    let bell_branch = {
        let branches = measure_bell(&full, (P3, P4))?;
        sample_branch(&branches, rng)?.clone()
    };
    let bell = bell_outcome_of(&bell_branch);
    let with_ancilla = bell_branch
        .post_state
        .tensor(&StateVector::basis_qubit(ANCILLA, 0))?;
    let filtered = with_ancilla.apply_unitary(&[P5, ANCILLA], &scheme2_collective(ch, bell)?)?;
    let ancilla_branch = {
        let branches = measure_computational(&filtered, ANCILLA)?;
        sample_branch(&branches, rng)?.clone()
    };
    if ancilla_branch.outcome_label == "1" {
        let leaf = scheme2_failure_leaf(bell, 0.0, false, Some(&ancilla_branch.post_state));
        return Ok(result_from_leaf(&leaf));
    }
    let sub = {
        let branches = measure_in_basis(&ancilla_branch.post_state, P5, &balanced_basis())?;
        sample_branch(&branches, rng)?.clone()
    };
    let outcome = basis_outcome_of(&sub);
    let leaf = finish_leaf(
        2,
        bell,
        Some(0),
        outcome,
        0.0,
        false,
        Some(&sub.post_state),
        Some(correction_scheme2(bell, outcome)),
        ClassicalMessage::new(2),
        &target,
    )?;
    Ok(result_from_leaf(&leaf))
}
