//! Dense complex state vectors over a small labeled qubit register.
//!
//! Amplitudes are stored big-endian: the leftmost label is the most
//! significant bit, so index 0 is |00...0⟩. All operations are pure and
//! return new values; comparisons that must ignore global phase go
//! through [`StateVector::fidelity`].

use std::fmt;

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Tolerance for input normalization (states are renormalized exactly after the check).
pub const NORM_TOL: f64 = 1e-9;
/// Tolerance for algebraic identities on registers of at most 6 qubits.
pub const ALGEBRA_TOL: f64 = 1e-12;
/// Tolerance for the rank-1 product check in subsystem extraction.
pub const RANK_TOL: f64 = 1e-10;
/// Branches below this probability are flagged negligible.
pub const NEGLIGIBLE_PROB: f64 = 1e-14;

/// A qubit in the register: numbered particles plus the auxiliary qubit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum QubitLabel {
    Particle(u8),
    Ancilla,
}

impl fmt::Display for QubitLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QubitLabel::Particle(n) => write!(f, "{n}"),
            QubitLabel::Ancilla => write!(f, "a"),
        }
    }
}

/// Normalized state vector over an ordered list of labeled qubits.
#[derive(Debug, Clone)]
pub struct StateVector {
    labels: Vec<QubitLabel>,
    amps: Vec<Complex64>,
}

impl StateVector {
    /// Builds a register from labels and amplitudes.
    ///
    /// The amplitude vector must have length 2^n and norm within 1e-9 of 1;
    /// it is then renormalized exactly.
    pub fn new(labels: Vec<QubitLabel>, amps: Vec<Complex64>) -> Result<Self> {
        let n = labels.len();
        if amps.len() != 1usize << n {
            return Err(Error::DimensionMismatch {
                got: amps.len(),
                qubits: n,
            });
        }
        for (i, l) in labels.iter().enumerate() {
            if labels[..i].contains(l) {
                return Err(Error::DuplicateLabel(*l));
            }
        }
        if amps.iter().any(|a| !a.re.is_finite() || !a.im.is_finite()) {
            return Err(Error::NonFiniteAmplitude);
        }
        let norm = amps.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt();
        if (norm - 1.0).abs() > NORM_TOL {
            return Err(Error::NotNormalized { norm });
        }
        let amps = amps.into_iter().map(|a| a / norm).collect();
        Ok(Self { labels, amps })
    }

    /// Single basis state |bit⟩ on one labeled qubit.
    pub fn basis_qubit(label: QubitLabel, bit: u8) -> Self {
        let mut amps = vec![Complex64::new(0.0, 0.0); 2];
        amps[bit as usize] = Complex64::new(1.0, 0.0);
        Self {
            labels: vec![label],
            amps,
        }
    }

    pub fn labels(&self) -> &[QubitLabel] {
        &self.labels
    }

    pub fn amps(&self) -> &[Complex64] {
        &self.amps
    }

    pub fn num_qubits(&self) -> usize {
        self.labels.len()
    }

    pub fn dim(&self) -> usize {
        self.amps.len()
    }

    pub fn norm(&self) -> f64 {
        self.amps.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt()
    }

    /// Bit shift of `label` in the big-endian index.
    fn bit_shift(&self, label: QubitLabel) -> Result<usize> {
        let pos = self
            .labels
            .iter()
            .position(|&l| l == label)
            .ok_or(Error::UnknownLabel(label))?;
        Ok(self.labels.len() - 1 - pos)
    }

    pub(crate) fn bit_shifts(&self, targets: &[QubitLabel]) -> Result<Vec<usize>> {
        targets.iter().map(|&t| self.bit_shift(t)).collect()
    }

    /// Tensor product; labels of `self` followed by labels of `other`.
    pub fn tensor(&self, other: &StateVector) -> Result<StateVector> {
        if other.labels.iter().any(|l| self.labels.contains(l)) {
            return Err(Error::OverlappingLabels);
        }
        let mut labels = self.labels.clone();
        labels.extend_from_slice(&other.labels);
        let mut amps = Vec::with_capacity(self.amps.len() * other.amps.len());
        for a in &self.amps {
            for b in &other.amps {
                amps.push(a * b);
            }
        }
        Ok(StateVector { labels, amps })
    }

    /// Applies `u` to the listed target qubits, identity elsewhere.
    ///
    /// The first target is the most significant bit of the matrix basis.
    pub fn apply_unitary(&self, targets: &[QubitLabel], u: &UnitaryMatrix) -> Result<StateVector> {
        let t = targets.len();
        if u.dim != 1 << t {
            return Err(Error::TargetDimensionMismatch {
                dim: u.dim,
                targets: t,
            });
        }
        let shifts = self.bit_shifts(targets)?;
        let m = u.dim;
        let tmask: usize = shifts.iter().map(|&s| 1usize << s).sum();
        let mut amps = self.amps.clone();
        let mut idx = vec![0usize; m];
        for base in 0..self.amps.len() {
            if base & tmask != 0 {
                continue;
            }
            for (k, slot) in idx.iter_mut().enumerate() {
                let mut full = base;
                for (j, &s) in shifts.iter().enumerate() {
                    if (k >> (t - 1 - j)) & 1 == 1 {
                        full |= 1 << s;
                    }
                }
                *slot = full;
            }
            for (row, slot) in idx.iter().enumerate() {
                let mut acc = Complex64::new(0.0, 0.0);
                for (col, src) in idx.iter().enumerate() {
                    acc += u.entry(row, col) * self.amps[*src];
                }
                amps[*slot] = acc;
            }
        }
        Ok(StateVector {
            labels: self.labels.clone(),
            amps,
        })
    }

    /// ⟨self|other⟩, conjugate-linear in `self`. Label lists must match exactly.
    pub fn inner_product(&self, other: &StateVector) -> Result<Complex64> {
        if self.labels != other.labels {
            return Err(Error::LabelMismatch);
        }
        Ok(self
            .amps
            .iter()
            .zip(&other.amps)
            .map(|(a, b)| a.conj() * b)
            .sum())
    }

    /// |⟨self|other⟩|², invariant under global phase of either argument.
    pub fn fidelity(&self, other: &StateVector) -> Result<f64> {
        Ok(self.inner_product(other)?.norm_sqr())
    }

    /// Extracts the factor of the state on the `keep` qubits.
    ///
    /// Fails with [`Error::EntangledCut`] unless the state is a tensor
    /// product of the kept and discarded subsystems (reshaped amplitude
    /// matrix has rank 1 within 1e-10). The result is normalized and
    /// defined up to global phase.
    pub fn extract_subsystem(&self, keep: &[QubitLabel]) -> Result<StateVector> {
        let keep_shifts = self.bit_shifts(keep)?;
        let rest: Vec<QubitLabel> = self
            .labels
            .iter()
            .copied()
            .filter(|l| !keep.contains(l))
            .collect();
        let rest_shifts = self.bit_shifts(&rest)?;
        let kd = 1usize << keep.len();
        let dd = 1usize << rest.len();

        let full_index = |k: usize, d: usize| -> usize {
            let mut idx = 0usize;
            for (j, &s) in keep_shifts.iter().enumerate() {
                idx |= ((k >> (keep.len() - 1 - j)) & 1) << s;
            }
            for (j, &s) in rest_shifts.iter().enumerate() {
                idx |= ((d >> (rest.len() - 1 - j)) & 1) << s;
            }
            idx
        };

        // Pivot at the largest entry, then verify every 2x2 minor against it.
        let mut pivot = (0usize, 0usize);
        let mut pivot_mag = 0.0;
        for k in 0..kd {
            for d in 0..dd {
                let mag = self.amps[full_index(k, d)].norm();
                if mag > pivot_mag {
                    pivot_mag = mag;
                    pivot = (k, d);
                }
            }
        }
        let (k0, d0) = pivot;
        let p = self.amps[full_index(k0, d0)];
        let mut residual = 0.0f64;
        for k in 0..kd {
            for d in 0..dd {
                let predicted =
                    self.amps[full_index(k, d0)] * self.amps[full_index(k0, d)] / p;
                let dev = (self.amps[full_index(k, d)] - predicted).norm();
                residual = residual.max(dev);
            }
        }
        if residual > RANK_TOL {
            return Err(Error::EntangledCut { residual });
        }
        let mut amps: Vec<Complex64> = (0..kd).map(|k| self.amps[full_index(k, d0)]).collect();
        let norm = amps.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt();
        for a in &mut amps {
            *a /= norm;
        }
        Ok(StateVector {
            labels: keep.to_vec(),
            amps,
        })
    }

    pub(crate) fn from_raw(labels: Vec<QubitLabel>, amps: Vec<Complex64>) -> Self {
        Self { labels, amps }
    }

    pub(crate) fn renormalized(&self) -> StateVector {
        let norm = self.norm();
        StateVector {
            labels: self.labels.clone(),
            amps: self.amps.iter().map(|a| a / norm).collect(),
        }
    }
}

/// Unitary 2x2 or 4x4 matrix, row-major, checked U†U = I on construction.
#[derive(Debug, Clone)]
pub struct UnitaryMatrix {
    dim: usize,
    entries: Vec<Complex64>,
}

impl UnitaryMatrix {
    pub fn new(dim: usize, entries: Vec<Complex64>) -> Result<Self> {
        if entries.len() != dim * dim {
            return Err(Error::DimensionMismatch {
                got: entries.len(),
                qubits: dim,
            });
        }
        let mut deviation = 0.0f64;
        for i in 0..dim {
            for j in 0..dim {
                let mut acc = Complex64::new(0.0, 0.0);
                for k in 0..dim {
                    acc += entries[k * dim + i].conj() * entries[k * dim + j];
                }
                let expected = if i == j { 1.0 } else { 0.0 };
                deviation = deviation.max((acc - expected).norm());
            }
        }
        if deviation > ALGEBRA_TOL {
            return Err(Error::NotUnitary { deviation });
        }
        Ok(Self { dim, entries })
    }

    pub fn from_reals(dim: usize, entries: &[f64]) -> Result<Self> {
        Self::new(
            dim,
            entries.iter().map(|&r| Complex64::new(r, 0.0)).collect(),
        )
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entry(&self, row: usize, col: usize) -> Complex64 {
        self.entries[row * self.dim + col]
    }

    pub fn identity(dim: usize) -> Self {
        let mut entries = vec![Complex64::new(0.0, 0.0); dim * dim];
        for i in 0..dim {
            entries[i * dim + i] = Complex64::new(1.0, 0.0);
        }
        Self { dim, entries }
    }

    pub fn pauli_x() -> Self {
        Self::from_reals(2, &[0.0, 1.0, 1.0, 0.0]).expect("pauli x is unitary")
    }

    pub fn pauli_z() -> Self {
        Self::from_reals(2, &[1.0, 0.0, 0.0, -1.0]).expect("pauli z is unitary")
    }

    /// Matrix product self * other.
    pub fn matmul(&self, other: &UnitaryMatrix) -> UnitaryMatrix {
        assert_eq!(self.dim, other.dim);
        let d = self.dim;
        let mut entries = vec![Complex64::new(0.0, 0.0); d * d];
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    entries[i * d + j] += self.entry(i, k) * other.entry(k, j);
                }
            }
        }
        UnitaryMatrix { dim: d, entries }
    }

    pub fn dagger(&self) -> UnitaryMatrix {
        let d = self.dim;
        let mut entries = vec![Complex64::new(0.0, 0.0); d * d];
        for i in 0..d {
            for j in 0..d {
                entries[i * d + j] = self.entry(j, i).conj();
            }
        }
        UnitaryMatrix { dim: d, entries }
    }
}
