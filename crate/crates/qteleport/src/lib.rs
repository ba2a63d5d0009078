//! Desk-scale state-vector simulation of two probabilistic schemes that
//! teleport a two-particle entangled state a|00⟩ + b|11⟩ over the
//! non-maximally entangled three-particle channel α|000⟩ + β|111⟩.
//!
//! The crate exposes:
//! - [`state`]: dense complex state vectors over labeled qubits with
//!   tensor products, unitary application, and fidelity;
//! - [`measure`]: projective measurements (computational, arbitrary
//!   single-qubit bases, Bell basis) as exact branch enumeration or
//!   seeded sampling;
//! - [`protocol`]: the two teleportation schemes as executable pipelines
//!   with full correction tables;
//! - [`analysis`]: branch reports, closed-form comparison (2α²β² and
//!   2β²), parameter sweeps, and Monte-Carlo estimation;
//! - [`output`]: deterministic CSV/JSON rendering.
//!
//! See the `examples/` directory for one runnable example per capability.

pub mod analysis;
pub mod error;
pub mod measure;
pub mod output;
pub mod protocol;
pub mod state;

pub use error::{Error, Result};
pub use measure::{BasisSpec, BellOutcome, MeasurementBranch, RngSeed};
pub use protocol::{BranchRecord, ChannelParams, CorrectionOp, InputParams, ProtocolResult};
pub use state::{QubitLabel, StateVector, UnitaryMatrix};
