//! Time evolution `U(t) = exp(-iHt)`.
//!
//! [`propagator_closed_form`] evaluates the analytic matrix elements;
//! [`propagator_oracle`] exponentiates through a generic Jacobi
//! eigendecomposition and shares no code with it.

use crate::eigen::hermitian_eigen;
use crate::error::{IsingError, Result};
use crate::hamiltonian::hamiltonian;
use crate::matrix::{Mat4, Unitary4};
use crate::params::CouplingParams;
use crate::scalar::{c, cis, Real};
use crate::state::TwoQubitState;

/// Closed-form propagator in scaled time `t' = R t`. Requires `R > 0`.
pub fn propagator_closed_form<T: Real>(p: &CouplingParams<T>, t: T) -> Result<Unitary4<T>> {
    if !t.is_finite() {
        return Err(IsingError::InvalidArgument(format!("non-finite time {t}")));
    }
    let n = p.try_normalized()?;
    let tp = p.scaled_time(t);
    let (s, co) = tp.sin_cos();
    let (bp, bm, j) = (n.field_sum, n.field_diff, n.coupling);
    let block_phase = cis(-tp * j);
    let two = T::lit(2.0);

    let mut m = Mat4::zero();
    m.0[0][0] = cis(-tp * (bp - j));
    m.0[1][1] = block_phase * c(co, -bm * s);
    m.0[1][2] = block_phase * c(T::zero(), two * j * s);
    m.0[2][1] = m.0[1][2];
    m.0[2][2] = block_phase * c(co, bm * s);
    m.0[3][3] = cis(tp * (bp + j));
    Ok(Unitary4::from_matrix_unchecked(m))
}

/// Oracle propagator `Σ e^{-iE_k t} |v_k><v_k|` from a numerical eigendecomposition.
///
/// Also valid for degenerate parameters.
pub fn propagator_oracle<T: Real>(p: &CouplingParams<T>, t: T) -> Result<Unitary4<T>> {
    if !t.is_finite() {
        return Err(IsingError::InvalidArgument(format!("non-finite time {t}")));
    }
    let eig = hermitian_eigen(&hamiltonian(p))?;
    Ok(Unitary4::from_matrix_unchecked(eig.reconstruct_with(|e| cis(-e * t))))
}

/// Propagator for any parameters: the closed form when `R > 0`, otherwise
/// the diagonal phase evolution `exp(-i diag(H) t)` (H is diagonal when `R = 0`).
pub fn propagator<T: Real>(p: &CouplingParams<T>, t: T) -> Result<Unitary4<T>> {
    if !p.is_degenerate() {
        return propagator_closed_form(p, t);
    }
    if !t.is_finite() {
        return Err(IsingError::InvalidArgument(format!("non-finite time {t}")));
    }
    let h = hamiltonian(p);
    let d = [0, 1, 2, 3].map(|k| cis(-h.0[k][k].re * t));
    Ok(Unitary4::from_matrix_unchecked(Mat4::diag(d)))
}

/// Evolves a normalized state for physical time `t`.
pub fn evolve<T: Real>(s: &TwoQubitState<T>, p: &CouplingParams<T>, t: T) -> Result<TwoQubitState<T>> {
    Ok(propagator(p, t)?.apply(s))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hamiltonian::spectrum;
    use crate::scalar::re;
    use std::f64::consts::PI;

    #[test]
    fn identity_at_zero_time() {
        let p = CouplingParams::<f64>::new(0.8, -1.3, 2.1).unwrap();
        for u in [
            propagator_closed_form(&p, 0.0).unwrap(),
            propagator_oracle(&p, 0.0).unwrap(),
        ] {
            assert!(u.matrix().max_abs_diff(&Mat4::<f64>::identity()) < 1e-14);
        }
    }

    #[test]
    fn field_free_quarter_period_is_global_phase() {
        let p = CouplingParams::<f64>::new(1.0, 0.0, 0.0).unwrap();
        let u = propagator_closed_form(&p, PI / 2.0).unwrap();
        let phase = u.entry(0, 0);
        assert!(u.matrix().max_abs_diff(&Mat4::<f64>::identity().scale(phase)) < 1e-14);
    }

    #[test]
    fn field_free_eighth_matches_oracle() {
        let p = CouplingParams::<f64>::new(1.0, 0.0, 0.0).unwrap();
        let a = propagator_closed_form(&p, PI / 4.0).unwrap();
        let b = propagator_oracle(&p, PI / 4.0).unwrap();
        assert!(a.matrix().max_abs_diff(b.matrix()) < 1e-13);
        // t' = π/2: central block is e^{-iπ/4} [[0, i], [i, 0]].
        let expected = cis(-PI / 4.0) * c(0.0, 1.0);
        assert!((a.entry(1, 2) - expected).norm() < 1e-14);
        assert!(a.entry(1, 1).norm() < 1e-15);
    }

    #[test]
    fn oracle_group_property() {
        let p = CouplingParams::<f64>::new(-0.4, 1.7, 0.2).unwrap();
        let (t1, t2) = (0.37, 1.91);
        let a = propagator_oracle(&p, t1).unwrap();
        let b = propagator_oracle(&p, t2).unwrap();
        let ab = propagator_oracle(&p, t1 + t2).unwrap();
        assert!(a.compose(&b).matrix().max_abs_diff(ab.matrix()) < 1e-12);
    }

    #[test]
    fn corner_states_only_acquire_phase() {
        let p = CouplingParams::<f64>::new(0.6, 1.1, -0.4).unwrap();
        let n = p.normalized().unwrap();
        for t in [0.0, 0.3, 2.9, 17.0] {
            let tp = p.scaled_time(t);
            let s = evolve(&TwoQubitState::<f64>::basis(0), &p, t).unwrap();
            let expected = TwoQubitState::<f64>::basis(0).scale(cis(-tp * (n.field_sum - n.coupling)));
            assert!(s.max_abs_diff(&expected) < 1e-13);
            assert!((s.norm_sqr() - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn ket01_evolution_formula() {
        let p = CouplingParams::<f64>::new(1.0, 1.5, -0.5).unwrap();
        let n = p.normalized().unwrap();
        let t = 0.731;
        let tp = p.scaled_time(t);
        let got = evolve(&TwoQubitState::<f64>::basis(1), &p, t).unwrap();
        let ph = cis(-n.coupling * tp);
        let expected = TwoQubitState::<f64>::from_amplitudes([
            re(0.0),
            ph * c(tp.cos(), -n.field_diff * tp.sin()),
            ph * c(0.0, 2.0 * n.coupling * tp.sin()),
            re(0.0),
        ]);
        assert!(got.max_abs_diff(&expected) < 1e-14);
    }

    #[test]
    fn eigenstates_are_stationary() {
        let p = CouplingParams::<f64>::new(0.9, 2.3, -0.6).unwrap();
        let sd = spectrum(&p).unwrap();
        for u in sd.states.iter() {
            for t in [0.4, 3.3, 11.0] {
                let w = propagator_oracle(&p, t).unwrap().apply(u);
                assert!((u.fidelity(&w) - 1.0).abs() < 1e-10);
            }
        }
    }

    #[test]
    fn degenerate_parameters() {
        let p = CouplingParams::<f64>::new(0.0, 0.5, 0.5).unwrap();
        assert_eq!(propagator_closed_form(&p, 1.0), Err(IsingError::DegenerateParameters));
        let a = propagator(&p, 1.3).unwrap();
        let b = propagator_oracle(&p, 1.3).unwrap();
        assert!(a.matrix().max_abs_diff(b.matrix()) < 1e-14);
    }

    #[test]
    fn rejects_non_finite_time() {
        let p = CouplingParams::<f64>::new(1.0, 0.0, 0.0).unwrap();
        assert!(propagator_closed_form(&p, f64::NAN).is_err());
        assert!(propagator_oracle(&p, f64::INFINITY).is_err());
    }

    #[test]
    fn single_precision_unitarity() {
        let p = CouplingParams::<f32>::new(1.0, 0.5, -0.25).unwrap();
        let u = propagator_closed_form(&p, 2.0).unwrap();
        assert!(u.unitarity_residual() < 1e-5);
    }
}
