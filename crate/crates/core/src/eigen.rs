//! Cyclic complex Jacobi eigensolver for 4×4 Hermitian matrices.
//!
//! Independent of the closed-form spectrum: it only sees matrix entries.

use crate::error::{IsingError, Result};
use crate::matrix::Mat4;
use crate::scalar::{cis, re, Real};
use crate::state::TwoQubitState;

const MAX_SWEEPS: usize = 64;

/// Eigenpairs of a Hermitian matrix, eigenvalues ascending.
#[derive(Debug, Clone, PartialEq)]
pub struct HermitianEigen<T> {
    pub values: [T; 4],
    pub vectors: [TwoQubitState<T>; 4],
}

impl<T: Real> HermitianEigen<T> {
    /// `Σ f(λ_k) |v_k><v_k|`.
    pub fn reconstruct_with(&self, f: impl Fn(T) -> crate::scalar::Cplx<T>) -> Mat4<T> {
        self.values
            .iter()
            .zip(self.vectors.iter())
            .fold(Mat4::zero(), |acc, (&lam, v)| acc + Mat4::outer(v, v).scale(f(lam)))
    }
}

fn off_norm<T: Real>(a: &Mat4<T>) -> T {
    let mut s = T::zero();
    for r in 0..4 {
        for col in 0..4 {
            if r != col {
                s = s + a.0[r][col].norm_sqr();
            }
        }
    }
    s.sqrt()
}

fn frob_norm<T: Real>(a: &Mat4<T>) -> T {
    a.0.iter()
        .flat_map(|row| row.iter())
        .fold(T::zero(), |acc, x| acc + x.norm_sqr())
        .sqrt()
}

/// Diagonalizes a Hermitian matrix by Jacobi rotations.
pub fn hermitian_eigen<T: Real>(m: &Mat4<T>) -> Result<HermitianEigen<T>> {
    let scale = frob_norm(m);
    if !scale.is_finite() {
        return Err(IsingError::NumericFailure("non-finite matrix entries".into()));
    }
    if m.hermiticity_residual() > T::lit(1e-12).max(T::epsilon() * T::lit(64.0)) * scale.max(T::one()) {
        return Err(IsingError::InvalidArgument("matrix is not Hermitian".into()));
    }
    let mut a = *m;
    let mut v = Mat4::<T>::identity();
    let target = T::epsilon() * scale;
    let mut converged = scale == T::zero();
    for _ in 0..MAX_SWEEPS {
        if off_norm(&a) <= target {
            converged = true;
            break;
        }
        for p in 0..3 {
            for q in (p + 1)..4 {
                let z = a.0[p][q];
                let r = z.norm();
                if r == T::zero() {
                    continue;
                }
                let phase = z.arg();
                let (ap, aq) = (a.0[p][p].re, a.0[q][q].re);
                let theta = T::lit(0.5) * (-(r + r)).atan2(ap - aq);
                let (s, c) = theta.sin_cos();
                let w = cis(-phase);
                let mut g = Mat4::<T>::identity();
                g.0[p][p] = re(c);
                g.0[p][q] = re(s);
                g.0[q][p] = w * re(-s);
                g.0[q][q] = w * re(c);
                a = g.adjoint() * a * g;
                // Clean the annihilated pair and keep the diagonal real.
                a.0[p][q] = re(T::zero());
                a.0[q][p] = re(T::zero());
                a.0[p][p] = re(a.0[p][p].re);
                a.0[q][q] = re(a.0[q][q].re);
                v = v * g;
            }
        }
    }
    if !converged && off_norm(&a) > target * T::lit(16.0) {
        return Err(IsingError::NumericFailure("Jacobi iteration did not converge".into()));
    }
    let mut order = [0usize, 1, 2, 3];
    order.sort_by(|&x, &y| a.0[x][x].re.partial_cmp(&a.0[y][y].re).expect("finite eigenvalues"));
    let values = order.map(|k| a.0[k][k].re);
    let vectors = order.map(|k| TwoQubitState::from_amplitudes([v.0[0][k], v.0[1][k], v.0[2][k], v.0[3][k]]));
    Ok(HermitianEigen { values, vectors })
}
