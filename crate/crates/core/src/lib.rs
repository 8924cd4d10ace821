//! Two-qubit Ising dynamics in an inhomogeneous longitudinal field.
//!
//! The Hamiltonian is `H = -J σ1·σ2 + B1 σ1z + B2 σ2z` (ħ = 1). The crate
//! provides its closed-form propagator together with an independent
//! eigendecomposition oracle, Schmidt-based entanglement measures,
//! separable-range witnesses, evolution-loop and exchange (SWAP) designs,
//! and the separability-recurrence function used to study periodicity.
//!
//! Every routine is generic over [`Real`]; the `f64` aliases at the crate
//! root are what the CLI and the tolerance-pinned tests use.
//!
//! Conventions: basis order `|00>, |01>, |10>, |11>`; physical time `t` at
//! every interface, scaled time `t' = R t` only where a name says so.

// `!(x > 0)` style guards deliberately reject NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod control;
pub mod eigen;
pub mod entanglement;
pub mod error;
pub mod hamiltonian;
pub mod isotropy;
pub mod matrix;
pub mod params;
pub mod periodicity;
pub mod propagator;
pub mod roots;
pub mod scalar;
pub mod state;
pub mod witness;

pub use control::{design_loop, design_swap, enumerate_loops, verify_control, ControlTarget, LoopSpec, SwapSpec};
pub use entanglement::{max_entanglement_times, schmidt, MaxEntanglementTimes, SchmidtData};
pub use error::{IsingError, Result};
pub use hamiltonian::{energies, hamiltonian, spectrum, SpectralData};
pub use matrix::{Mat4, Unitary4};
pub use params::{CouplingParams, Normalized};
pub use propagator::{evolve, propagator, propagator_closed_form, propagator_oracle};
pub use scalar::{Cplx, Real};
pub use state::{Qubit, TwoQubitState};
pub use witness::{Observable, Verdict, WitnessVerdict};

/// Double-precision coupling parameters.
pub type Params = CouplingParams<f64>;
/// Double-precision two-qubit state.
pub type State = TwoQubitState<f64>;
/// Double-precision single-qubit state.
pub type Qubit64 = Qubit<f64>;
/// Double-precision propagator.
pub type Propagator = Unitary4<f64>;
/// Double-precision 4×4 matrix.
pub type Matrix = Mat4<f64>;
/// Double-precision complex number.
pub type C64 = Cplx<f64>;
/// Double-precision Schmidt data.
pub type Schmidt = SchmidtData<f64>;
/// Double-precision loop design.
pub type Loop = LoopSpec<f64>;
/// Double-precision exchange design.
pub type Swap = SwapSpec<f64>;

/// Single-precision coupling parameters.
pub type Params32 = CouplingParams<f32>;
/// Single-precision two-qubit state.
pub type State32 = TwoQubitState<f32>;
