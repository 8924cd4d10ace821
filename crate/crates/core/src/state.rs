//! Pure states of one and two qubits.
//!
//! Two-qubit amplitudes are ordered `|00>, |01>, |10>, |11>` (first qubit is
//! the high bit) everywhere in the crate.

use std::ops::Index;

use crate::error::{IsingError, Result};
use crate::scalar::{re, Cplx, Real};

/// Normalization tolerance used by the checked constructors.
pub const NORM_TOL: f64 = 1e-12;

/// Single-qubit amplitudes `a|0> + b|1>`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Qubit<T> {
    pub zero: Cplx<T>,
    pub one: Cplx<T>,
}

impl<T: Real> Qubit<T> {
    pub fn new(zero: Cplx<T>, one: Cplx<T>) -> Self {
        Self { zero, one }
    }

    pub fn ket0() -> Self {
        Self::new(re(T::one()), re(T::zero()))
    }

    pub fn ket1() -> Self {
        Self::new(re(T::zero()), re(T::one()))
    }

    /// Real superposition `a|0> + b|1>`.
    pub fn real(a: T, b: T) -> Self {
        Self::new(re(a), re(b))
    }

    pub fn norm_sqr(&self) -> T {
        self.zero.norm_sqr() + self.one.norm_sqr()
    }

    pub fn normalized(&self) -> Result<Self> {
        let n = self.norm_sqr().sqrt();
        if !(n > T::zero()) {
            return Err(IsingError::InvalidArgument("zero single-qubit vector".into()));
        }
        Ok(Self::new(self.zero / n, self.one / n))
    }

    /// `self ⊗ other`, with `self` as the first qubit.
    pub fn tensor(&self, other: &Qubit<T>) -> TwoQubitState<T> {
        TwoQubitState::from_amplitudes([
            self.zero * other.zero,
            self.zero * other.one,
            self.one * other.zero,
            self.one * other.one,
        ])
    }
}

/// Two-qubit pure state `α|00> + β|01> + γ|10> + δ|11>`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TwoQubitState<T> {
    amps: [Cplx<T>; 4],
}

impl<T: Real> TwoQubitState<T> {
    /// Wraps amplitudes without checking normalization.
    pub fn from_amplitudes(amps: [Cplx<T>; 4]) -> Self {
        Self { amps }
    }

    /// Wraps amplitudes, requiring unit norm within [`NORM_TOL`].
    pub fn new(amps: [Cplx<T>; 4]) -> Result<Self> {
        let s = Self { amps };
        let dev = (s.norm_sqr() - T::one()).abs();
        if dev > T::lit(NORM_TOL).max(T::epsilon() * T::lit(16.0)) {
            return Err(IsingError::InvalidArgument(format!(
                "state not normalized (|norm^2 - 1| = {dev})"
            )));
        }
        Ok(s)
    }

    /// Rescales arbitrary nonzero amplitudes to unit norm.
    pub fn normalize(amps: [Cplx<T>; 4]) -> Result<Self> {
        let n = Self { amps }.norm_sqr().sqrt();
        if !(n > T::zero()) || !n.is_finite() {
            return Err(IsingError::InvalidArgument("cannot normalize zero vector".into()));
        }
        Ok(Self {
            amps: amps.map(|a| a / n),
        })
    }

    pub fn from_real(amps: [T; 4]) -> Result<Self> {
        Self::normalize(amps.map(re))
    }

    /// Computational basis state `|k>` for `k ∈ 0..4`.
    pub fn basis(k: usize) -> Self {
        assert!(k < 4, "basis index out of range");
        let mut amps = [re(T::zero()); 4];
        amps[k] = re(T::one());
        Self { amps }
    }

    /// `(|01> + |10>)/√2`.
    pub fn beta01() -> Self {
        let h = T::FRAC_1_SQRT_2();
        Self::from_amplitudes([re(T::zero()), re(h), re(h), re(T::zero())])
    }

    /// `(|01> - |10>)/√2`.
    pub fn beta10() -> Self {
        let h = T::FRAC_1_SQRT_2();
        Self::from_amplitudes([re(T::zero()), re(h), re(-h), re(T::zero())])
    }

    pub fn amplitudes(&self) -> &[Cplx<T>; 4] {
        &self.amps
    }

    /// Amplitude matrix `[[α, β], [γ, δ]]` (rows: first qubit).
    pub fn amplitude_matrix(&self) -> [[Cplx<T>; 2]; 2] {
        [[self.amps[0], self.amps[1]], [self.amps[2], self.amps[3]]]
    }

    /// `αδ - βγ`.
    pub fn determinant(&self) -> Cplx<T> {
        self.amps[0] * self.amps[3] - self.amps[1] * self.amps[2]
    }

    pub fn norm_sqr(&self) -> T {
        self.amps.iter().fold(T::zero(), |acc, a| acc + a.norm_sqr())
    }

    /// `<self|other>`.
    pub fn inner(&self, other: &Self) -> Cplx<T> {
        self.amps
            .iter()
            .zip(other.amps.iter())
            .fold(re(T::zero()), |acc, (a, b)| acc + a.conj() * b)
    }

    /// `|<self|other>|²`; equals one iff the states agree up to global phase.
    pub fn fidelity(&self, other: &Self) -> T {
        self.inner(other).norm_sqr()
    }

    /// Exchanges the two qubits.
    pub fn swap_qubits(&self) -> Self {
        let [a, b, g, d] = self.amps;
        Self::from_amplitudes([a, g, b, d])
    }

    pub fn scale(&self, factor: Cplx<T>) -> Self {
        Self {
            amps: self.amps.map(|a| a * factor),
        }
    }

    /// Largest elementwise modulus of `self - other`.
    pub fn max_abs_diff(&self, other: &Self) -> T {
        self.amps
            .iter()
            .zip(other.amps.iter())
            .fold(T::zero(), |acc, (a, b)| acc.max((*a - *b).norm()))
    }
}

impl<T> Index<usize> for TwoQubitState<T> {
    type Output = Cplx<T>;

    fn index(&self, k: usize) -> &Cplx<T> {
        &self.amps[k]
    }
}
