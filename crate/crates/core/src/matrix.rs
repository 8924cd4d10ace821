//! Dense 4×4 complex matrices over the two-qubit computational basis.

use std::ops::{Add, Mul, Sub};

use crate::scalar::{re, Cplx, Real};
use crate::state::TwoQubitState;

/// Row-major 4×4 complex matrix.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Mat4<T>(pub [[Cplx<T>; 4]; 4]);

impl<T: Real> Mat4<T> {
    pub fn zero() -> Self {
        Self([[re(T::zero()); 4]; 4])
    }

    pub fn identity() -> Self {
        Self::diag([re(T::one()); 4])
    }

    pub fn diag(d: [Cplx<T>; 4]) -> Self {
        let mut m = Self::zero();
        for (k, v) in d.into_iter().enumerate() {
            m.0[k][k] = v;
        }
        m
    }

    pub fn from_real(rows: [[T; 4]; 4]) -> Self {
        Self(rows.map(|r| r.map(re)))
    }

    /// Exchange operator `I_{1↔2}`: `|01> ↔ |10>`, `|00>` and `|11>` fixed.
    pub fn exchange() -> Self {
        let (o, l) = (T::zero(), T::one());
        Self::from_real([[l, o, o, o], [o, o, l, o], [o, l, o, o], [o, o, o, l]])
    }

    /// `σ1·σ2 = σx⊗σx + σy⊗σy + σz⊗σz`.
    pub fn spin_dot() -> Self {
        let (o, l, t) = (T::zero(), T::one(), T::lit(2.0));
        Self::from_real([[l, o, o, o], [o, -l, t, o], [o, t, -l, o], [o, o, o, l]])
    }

    /// `|a><b|` for basis indices.
    pub fn outer(a: &TwoQubitState<T>, b: &TwoQubitState<T>) -> Self {
        let mut m = Self::zero();
        for r in 0..4 {
            for col in 0..4 {
                m.0[r][col] = a[r] * b[col].conj();
            }
        }
        m
    }

    pub fn adjoint(&self) -> Self {
        let mut m = Self::zero();
        for r in 0..4 {
            for col in 0..4 {
                m.0[r][col] = self.0[col][r].conj();
            }
        }
        m
    }

    pub fn scale(&self, factor: Cplx<T>) -> Self {
        Self(self.0.map(|row| row.map(|x| x * factor)))
    }

    pub fn trace(&self) -> Cplx<T> {
        (0..4).fold(re(T::zero()), |acc, k| acc + self.0[k][k])
    }

    pub fn apply(&self, s: &TwoQubitState<T>) -> TwoQubitState<T> {
        let mut out = [re(T::zero()); 4];
        for (r, slot) in out.iter_mut().enumerate() {
            *slot = (0..4).fold(re(T::zero()), |acc, col| acc + self.0[r][col] * s[col]);
        }
        TwoQubitState::from_amplitudes(out)
    }

    /// `<s|M|s>`.
    pub fn expectation(&self, s: &TwoQubitState<T>) -> Cplx<T> {
        s.inner(&self.apply(s))
    }

    /// Largest elementwise modulus of `self - other`.
    pub fn max_abs_diff(&self, other: &Self) -> T {
        let mut worst = T::zero();
        for r in 0..4 {
            for col in 0..4 {
                worst = worst.max((self.0[r][col] - other.0[r][col]).norm());
            }
        }
        worst
    }

    /// `max |M - M†|`.
    pub fn hermiticity_residual(&self) -> T {
        self.max_abs_diff(&self.adjoint())
    }

    /// `max |M†M - I|`.
    pub fn unitarity_residual(&self) -> T {
        (self.adjoint() * *self).max_abs_diff(&Self::identity())
    }

    pub fn entry(&self, r: usize, col: usize) -> Cplx<T> {
        self.0[r][col]
    }
}

impl<T: Real> Mul for Mat4<T> {
    type Output = Self;

    fn mul(self, rhs: Self) -> Self {
        let mut m = Self::zero();
        for r in 0..4 {
            for col in 0..4 {
                m.0[r][col] = (0..4).fold(re(T::zero()), |acc, k| acc + self.0[r][k] * rhs.0[k][col]);
            }
        }
        m
    }
}

impl<T: Real> Add for Mat4<T> {
    type Output = Self;

    fn add(mut self, rhs: Self) -> Self {
        for r in 0..4 {
            for col in 0..4 {
                self.0[r][col] = self.0[r][col] + rhs.0[r][col];
            }
        }
        self
    }
}

impl<T: Real> Sub for Mat4<T> {
    type Output = Self;

    fn sub(self, rhs: Self) -> Self {
        self + rhs.scale(re(-T::one()))
    }
}

/// A 4×4 matrix produced by one of the propagator routines.
///
/// Construction is crate-private so every value satisfies `U†U = I` up to
/// rounding; [`Unitary4::unitarity_residual`] reports the actual deviation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Unitary4<T>(Mat4<T>);

impl<T: Real> Unitary4<T> {
    pub(crate) fn from_matrix_unchecked(m: Mat4<T>) -> Self {
        Self(m)
    }

    pub fn identity() -> Self {
        Self(Mat4::identity())
    }

    pub fn matrix(&self) -> &Mat4<T> {
        &self.0
    }

    pub fn into_matrix(self) -> Mat4<T> {
        self.0
    }

    pub fn adjoint(&self) -> Self {
        Self(self.0.adjoint())
    }

    pub fn compose(&self, later: &Self) -> Self {
        Self(later.0 * self.0)
    }

    pub fn apply(&self, s: &TwoQubitState<T>) -> TwoQubitState<T> {
        self.0.apply(s)
    }

    pub fn unitarity_residual(&self) -> T {
        self.0.unitarity_residual()
    }

    pub fn entry(&self, r: usize, col: usize) -> Cplx<T> {
        self.0 .0[r][col]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exchange_is_unitary_involution() {
        let x = Mat4::<f64>::exchange();
        assert_eq!(x * x, Mat4::<f64>::identity());
        assert_eq!(x.unitarity_residual(), 0.0);
    }

    #[test]
    fn spin_dot_equals_twice_swap_minus_identity() {
        let lhs = Mat4::<f64>::spin_dot();
        let rhs = Mat4::<f64>::exchange().scale(re(2.0)) - Mat4::<f64>::identity();
        assert!(lhs.max_abs_diff(&rhs) < 1e-15);
    }

    #[test]
    fn product_state_outer_trace() {
        let s = TwoQubitState::<f64>::beta01();
        let p = Mat4::<f64>::outer(&s, &s);
        assert!((p.trace().re - 1.0).abs() < 1e-15);
        assert!(p.hermiticity_residual() < 1e-15);
    }
}
