//! Dipolar coupling tensor from two g-tensors and the isotropy test that
//! decides when it reduces to a scalar Ising coupling `-J s1·s2`.

use std::ops::{Add, Mul, Sub};

use num_traits::Zero;

use crate::error::{IsingError, Result};
use crate::scalar::{Cplx, Real};

pub type Tensor3<S> = [[S; 3]; 3];

/// Absolute tolerance on off-diagonal entries and diagonal spread.
pub const ISOTROPY_TOL: f64 = 1e-9;

/// Entry type of a g-tensor: real or complex.
pub trait TensorEntry<T: Real>: Copy + Zero + Add<Output = Self> + Sub<Output = Self> + Mul<Output = Self> {
    fn from_real(x: T) -> Self;
    fn modulus(self) -> T;
    /// Imaginary part (zero for real entries).
    fn imag(self) -> T;
    fn real(self) -> T;
}

impl<T: Real> TensorEntry<T> for T {
    fn from_real(x: T) -> Self {
        x
    }
    fn modulus(self) -> T {
        self.abs()
    }
    fn imag(self) -> T {
        T::zero()
    }
    fn real(self) -> T {
        self
    }
}

impl<T: Real> TensorEntry<T> for Cplx<T> {
    fn from_real(x: T) -> Self {
        Cplx::new(x, T::zero())
    }
    fn modulus(self) -> T {
        self.norm()
    }
    fn imag(self) -> T {
        self.im
    }
    fn real(self) -> T {
        self.re
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct IsotropyReport<S, T> {
    /// `J_jl` with the positive prefactor `μ0 / 4π r³` set to one.
    pub coupling: Tensor3<S>,
    pub is_isotropic: bool,
    /// Mean diagonal entry when the tensor is isotropic with a real scalar.
    pub scalar: Option<T>,
}

/// Coupling tensor
/// `J_jl = -(Σ_i g1_ij g2_il - 3 Σ_ik g1_ij g2_kl r_i r_k)`
/// and the isotropy decision for it.
pub fn isotropy_check<T: Real, S: TensorEntry<T>>(
    g1: &Tensor3<S>,
    g2: &Tensor3<S>,
    r_hat: [T; 3],
) -> Result<IsotropyReport<S, T>> {
    let norm = r_hat.iter().fold(T::zero(), |a, &x| a + x * x).sqrt();
    if !((norm - T::one()).abs() <= T::lit(1e-12).max(T::epsilon() * T::lit(8.0))) {
        return Err(IsingError::InvalidArgument(format!(
            "direction must be a unit vector (norm {norm})"
        )));
    }
    let r = r_hat.map(S::from_real);
    let proj = |g: &Tensor3<S>, col: usize| (0..3).fold(S::zero(), |a, i| a + g[i][col] * r[i]);
    let three = S::from_real(T::lit(3.0));
    let mut coupling = [[S::zero(); 3]; 3];
    for (j, row) in coupling.iter_mut().enumerate() {
        for (l, slot) in row.iter_mut().enumerate() {
            let gram = (0..3).fold(S::zero(), |a, i| a + g1[i][j] * g2[i][l]);
            *slot = S::zero() - (gram - three * proj(g1, j) * proj(g2, l));
        }
    }

    let tol = T::lit(ISOTROPY_TOL);
    let off_ok = (0..3).all(|j| (0..3).all(|l| j == l || coupling[j][l].modulus() < tol));
    let diag_ok = (0..3).all(|j| (coupling[j][j] - coupling[0][0]).modulus() < tol);
    let mean = (coupling[0][0] + coupling[1][1] + coupling[2][2]) * S::from_real(T::one() / T::lit(3.0));
    let is_isotropic = off_ok && diag_ok && mean.imag().abs() < tol;
    Ok(IsotropyReport {
        coupling,
        is_isotropic,
        scalar: is_isotropic.then(|| mean.real()),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn eye(scale: f64) -> Tensor3<f64> {
        [[scale, 0.0, 0.0], [0.0, scale, 0.0], [0.0, 0.0, scale]]
    }

    #[test]
    fn scalar_g_is_dipolar_anisotropic() {
        let rep = isotropy_check(&eye(1.5), &eye(1.5), [0.0, 0.0, 1.0]).unwrap();
        assert!(!rep.is_isotropic);
        assert_eq!(rep.scalar, None);
        let k = 1.5 * 1.5;
        assert!((rep.coupling[0][0] + k).abs() < 1e-15);
        assert!((rep.coupling[2][2] - 2.0 * k).abs() < 1e-15);
    }

    #[test]
    fn zero_tensors_are_trivially_isotropic() {
        let rep = isotropy_check(&eye(0.0), &eye(0.0), [1.0, 0.0, 0.0]).unwrap();
        assert!(rep.is_isotropic);
        assert_eq!(rep.scalar, Some(0.0));
    }

    #[test]
    fn rejects_non_unit_direction() {
        assert!(matches!(
            isotropy_check(&eye(1.0), &eye(1.0), [1.0, 1.0, 0.0]),
            Err(IsingError::InvalidArgument(_))
        ));
    }

    type C = Cplx<f64>;

    fn symmetric_pattern(c: f64, diag: [C; 3]) -> Tensor3<C> {
        let c = C::new(c, 0.0);
        [[diag[0], -c, c], [c, diag[1], -c], [-c, c, diag[2]]]
    }

    // The three bilinear constraints that cancel the off-diagonal couplings
    // for the symmetric pattern along (1,1,1)/√3.
    fn constraints(g: &Tensor3<C>) -> [C; 3] {
        let [[g11, g12, g13], [g21, g22, g23], [g31, g32, g33]] = *g;
        [
            -g22 * (g11 + g31) - g12 * (g21 + g31) - (g11 + g21) * g32,
            -g23 * (g11 + g31) - g13 * (g21 + g31) - (g11 + g21) * g33,
            -g23 * (g12 + g32) - g13 * (g22 + g32) - (g12 + g22) * g33,
        ]
    }

    fn det3(m: [[C; 3]; 3]) -> C {
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    }

    fn solve_diagonal(c: f64, mut d: [C; 3]) -> [C; 3] {
        let h = 1e-7;
        for _ in 0..50 {
            let f = constraints(&symmetric_pattern(c, d));
            let mut jac = [[C::new(0.0, 0.0); 3]; 3];
            for k in 0..3 {
                let mut e = d;
                e[k] += h;
                let fk = constraints(&symmetric_pattern(c, e));
                for row in 0..3 {
                    jac[row][k] = (fk[row] - f[row]) / h;
                }
            }
            let den = det3(jac);
            let mut step = [C::new(0.0, 0.0); 3];
            for (k, slot) in step.iter_mut().enumerate() {
                let mut m = jac;
                for row in 0..3 {
                    m[row][k] = f[row];
                }
                *slot = det3(m) / den;
            }
            for k in 0..3 {
                d[k] -= step[k];
            }
        }
        d
    }

    #[test]
    fn symmetric_pattern_needs_imaginary_diagonal() {
        let c = 0.7;
        let d = solve_diagonal(c, [C::new(0.3, 0.5), C::new(0.2, 0.9), C::new(-0.1, 0.4)]);
        let g = symmetric_pattern(c, d);
        assert!(constraints(&g).iter().all(|z| z.norm() < 1e-12));
        for z in d {
            assert!((z - C::new(0.0, c)).norm() < 1e-9, "{z}");
        }
        let s = 1.0 / 3f64.sqrt();
        let rep = isotropy_check(&g, &g, [s, s, s]).unwrap();
        assert!(rep.is_isotropic);
        assert!((rep.scalar.unwrap() + 2.0 * c * c).abs() < 1e-9);
        // A real diagonal leaves the tensor anisotropic.
        let real = symmetric_pattern(c, [C::new(c, 0.0); 3]);
        assert!(!isotropy_check(&real, &real, [s, s, s]).unwrap().is_isotropic);
    }
}
