use crate::state::QubitLabel;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, thiserror::Error)]
pub enum Error {
    #[error("amplitude count {got} does not match 2^{qubits}")]
    DimensionMismatch { got: usize, qubits: usize },

    #[error("duplicate qubit label {0}")]
    DuplicateLabel(QubitLabel),

    #[error("state norm {norm} is outside the 1e-9 band around 1")]
    NotNormalized { norm: f64 },

    #[error("non-finite amplitude")]
    NonFiniteAmplitude,

    #[error("unknown qubit label {0}")]
    UnknownLabel(QubitLabel),

    #[error("registers share qubit labels")]
    OverlappingLabels,

    #[error("label lists differ between states")]
    LabelMismatch,

    #[error("matrix is not unitary: max |U\u{2020}U - I| = {deviation:.3e}")]
    NotUnitary { deviation: f64 },

    #[error("unitary of dimension {dim} does not fit {targets} target qubit(s)")]
    TargetDimensionMismatch { dim: usize, targets: usize },

    #[error("basis vectors are not orthonormal")]
    NotOrthonormal,

    #[error("subsystem cut is entangled (rank-1 residual {residual:.3e}); this indicates a protocol-logic bug")]
    EntangledCut { residual: f64 },

    #[error("branch probabilities sum to {sum}, not 1")]
    DegenerateProbabilities { sum: f64 },

    #[error("channel requires beta <= alpha, got alpha={alpha}, beta={beta}; relabel so the larger coefficient comes first")]
    BetaExceedsAlpha { alpha: f64, beta: f64 },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}
