//! Hamiltonian matrix and its closed-form spectrum.

use crate::error::Result;
use crate::matrix::Mat4;
use crate::params::CouplingParams;
use crate::scalar::{re, Real};
use crate::state::TwoQubitState;

/// `H = -J σ1·σ2 + B1 σ1z + B2 σ2z` in the basis `|00>, |01>, |10>, |11>`.
pub fn hamiltonian<T: Real>(p: &CouplingParams<T>) -> Mat4<T> {
    let j = p.coupling();
    let (bp, bm) = (p.field_sum(), p.field_diff());
    let o = T::zero();
    let off = -(j + j);
    Mat4::from_real([
        [bp - j, o, o, o],
        [o, bm + j, off, o],
        [o, off, -bm + j, o],
        [o, o, o, -bp - j],
    ])
}

/// Closed-form eigenpairs of the Hamiltonian.
///
/// Energies are `E1 = -J-B+`, `E2 = -J+B+`, `E3 = J-R`, `E4 = J+R` with
/// `u1 = |11>`, `u2 = |00>` and `u3`, `u4` in the `|01>,|10>` block.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectralData<T> {
    pub energies: [T; 4],
    pub states: [TwoQubitState<T>; 4],
}

/// Closed-form energies `[-J-B+, -J+B+, J-R, J+R]`, labeled as in
/// [`spectrum`]. Defined for every parameter set, including `R = 0`.
pub fn energies<T: Real>(p: &CouplingParams<T>) -> [T; 4] {
    let j = p.coupling();
    let bp = p.field_sum();
    let r = p.scale();
    [-j - bp, -j + bp, j - r, j + r]
}

/// Eigenvalues and eigenvectors from their closed forms. Requires `R > 0`.
///
/// The block eigenvectors are written with half-angle weights
/// `sqrt((1 ∓ b-)/2)`, which equal `√2 j / sqrt(1 ± b-)` for `J > 0` and stay
/// finite when `J = 0` (where `b- = ±1`).
pub fn spectrum<T: Real>(p: &CouplingParams<T>) -> Result<SpectralData<T>> {
    let n = p.try_normalized()?;
    let half = T::lit(0.5);
    let sign = if n.coupling < T::zero() { -T::one() } else { T::one() };
    let lo = (half * (T::one() - n.field_diff)).max(T::zero()).sqrt();
    let hi = (half * (T::one() + n.field_diff)).max(T::zero()).sqrt();
    let z = re(T::zero());
    let u3 = TwoQubitState::from_amplitudes([z, re(lo), re(sign * hi), z]);
    let u4 = TwoQubitState::from_amplitudes([z, re(hi), re(-sign * lo), z]);
    Ok(SpectralData {
        energies: energies(p),
        states: [TwoQubitState::basis(3), TwoQubitState::basis(0), u3, u4],
    })
}
