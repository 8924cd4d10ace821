//! Separability recurrence of evolved two-qubit states.
//!
//! For `|ψ> = α|00> + β|01> + γ|10> + δ|11>` the evolved amplitudes in
//! scaled time `t'` are
//!
//! ```text
//! α(t') = α e^{-i(b+ - j)t'}
//! β(t') = e^{-ijt'} [β (cos t' - i b- sin t') + 2ij γ sin t']
//! γ(t') = e^{-ijt'} [γ (cos t' + i b- sin t') + 2ij β sin t']
//! δ(t') = δ e^{i(b+ + j)t'}
//! ```
//!
//! and the state is a product state exactly when `Δ(t') = α(t')δ(t') - β(t')γ(t')`
//! vanishes. Writing `β = γ r e^{iφ}` the recurrence of `Δ` is governed by
//! [`f_function`], via `Δ(t') = F γ² e^{iφ} + Δ(0) e^{2ijt'}`.

use crate::error::{IsingError, Result};
use crate::params::CouplingParams;
use crate::scalar::{c, cis, re, Cplx, Real};
use crate::state::TwoQubitState;

/// Amplitude ratio `β/γ = r e^{iφ}` together with the reduced coupling `j`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PolarCoupling<T> {
    r: T,
    phi: T,
    coupling: T,
    field_diff: T,
}

impl<T: Real> PolarCoupling<T> {
    /// Uses the non-negative root `b- = sqrt(1 - 4j²)`; requires `j ∈ (0, ½]`.
    pub fn new(r: T, phi: T, coupling: T) -> Result<Self> {
        check_coupling(coupling)?;
        let field_diff = (T::one() - T::lit(4.0) * coupling * coupling).max(T::zero()).sqrt();
        Self::with_field_diff(r, phi, coupling, field_diff)
    }

    /// Explicit `b-`, which must satisfy `b-² + 4j² = 1`.
    pub fn with_field_diff(r: T, phi: T, coupling: T, field_diff: T) -> Result<Self> {
        if !(r >= T::zero()) || !r.is_finite() || !phi.is_finite() {
            return Err(IsingError::InvalidArgument(format!(
                "need finite r >= 0 and phi, got r={r}, phi={phi}"
            )));
        }
        if !coupling.is_finite() || !field_diff.is_finite() {
            return Err(IsingError::InvalidArgument("non-finite reduced coupling".into()));
        }
        let tol = T::lit(1e-9).max(T::epsilon() * T::lit(64.0));
        if (field_diff * field_diff + T::lit(4.0) * coupling * coupling - T::one()).abs() > tol {
            return Err(IsingError::InvalidArgument(format!(
                "b-² + 4j² must equal 1 (b-={field_diff}, j={coupling})"
            )));
        }
        Ok(PolarCoupling {
            r,
            phi,
            coupling,
            field_diff,
        })
    }

    /// Reads `r, φ` from `β/γ` and `j, b-` from the parameters.
    pub fn from_state(s: &TwoQubitState<T>, p: &CouplingParams<T>) -> Result<Self> {
        let [_, beta, gamma, _] = *s.amplitudes();
        if gamma.norm() == T::zero() {
            return Err(IsingError::InvalidArgument(
                "the |10> amplitude must be non-zero".into(),
            ));
        }
        let ratio = beta / gamma;
        let n = p.try_normalized()?;
        Self::with_field_diff(ratio.norm(), ratio.arg(), n.coupling, n.field_diff)
    }

    pub fn r(&self) -> T {
        self.r
    }

    pub fn phi(&self) -> T {
        self.phi
    }

    pub fn coupling(&self) -> T {
        self.coupling
    }

    pub fn field_diff(&self) -> T {
        self.field_diff
    }

    /// `F` at scaled time `t'`.
    pub fn evaluate(&self, t_prime: T) -> Cplx<T> {
        let two = T::lit(2.0);
        let j = self.coupling;
        let b = self.field_diff;
        let (s, co) = t_prime.sin_cos();
        let i = c(T::zero(), T::one());
        let drift = cis(-two * j * t_prime);
        let first = i * re(-two * self.r * self.r * j * s) * cis(self.phi) * drift * c(co, -b * s);
        let middle = re(two * self.r) * (i * re((two * j * t_prime).sin()) + drift * re(T::lit(4.0) * j * j * s * s));
        let last = i * re(-two * j * s) * cis(-self.phi) * drift * c(co, b * s);
        first + middle + last
    }
}

fn check_coupling<T: Real>(j: T) -> Result<()> {
    if j > T::zero() && j <= T::lit(0.5) {
        Ok(())
    } else {
        Err(IsingError::InvalidArgument(format!(
            "reduced coupling j must lie in (0, 1/2], got {j}"
        )))
    }
}

/// Evolves amplitude-by-amplitude in scaled time. Agrees with
/// [`crate::propagator::evolve`].
pub fn amplitude_evolution<T: Real>(s: &TwoQubitState<T>, p: &CouplingParams<T>, t: T) -> Result<TwoQubitState<T>> {
    let n = p.try_normalized()?;
    if !t.is_finite() {
        return Err(IsingError::InvalidArgument(format!("time must be finite, got {t}")));
    }
    let tp = p.scaled_time(t);
    let (j, bm, bp) = (n.coupling, n.field_diff, n.field_sum);
    let two = T::lit(2.0);
    let [a, b, g, d] = *s.amplitudes();
    let (sn, cs) = tp.sin_cos();
    let drift = cis(-j * tp);
    let mix = c(T::zero(), two * j * sn);
    Ok(TwoQubitState::from_amplitudes([
        a * cis(-(bp - j) * tp),
        drift * (b * c(cs, -bm * sn) + mix * g),
        drift * (g * c(cs, bm * sn) + mix * b),
        d * cis((bp + j) * tp),
    ]))
}

/// `Δ(t') = α(t')δ(t') - β(t')γ(t')`.
pub fn delta_t<T: Real>(s: &TwoQubitState<T>, p: &CouplingParams<T>, t: T) -> Result<Cplx<T>> {
    Ok(amplitude_evolution(s, p, t)?.determinant())
}

/// Closed-form expansion of `Δ(t')` in the initial amplitudes.
pub fn delta_t_expanded<T: Real>(s: &TwoQubitState<T>, p: &CouplingParams<T>, t: T) -> Result<Cplx<T>> {
    let n = p.try_normalized()?;
    let tp = p.scaled_time(t);
    let (j, bm) = (n.coupling, n.field_diff);
    let two = T::lit(2.0);
    let [a, b, g, d] = *s.amplitudes();
    let sn = tp.sin();
    let sn2 = sn * sn;
    let forward = cis(two * j * tp);
    let back = cis(-two * j * tp);
    let bracket = (b * b + g * g) * c(T::zero(), j * (two * tp).sin()) + (b * b - g * g) * re(two * j * bm * sn2)
        - b * g * re(T::lit(8.0) * j * j * sn2);
    Ok(a * d * forward - b * g * back - back * bracket)
}

/// `F(r, φ, j, t')` with `b- = sqrt(1 - 4j²)`.
pub fn f_function<T: Real>(r: T, phi: T, j: T, t_prime: T) -> Result<Cplx<T>> {
    Ok(PolarCoupling::new(r, phi, j)?.evaluate(t_prime))
}

/// Times in `[t_lo, t_hi]` where `|F|` has a local minimum below `tol`.
///
/// Grid local minima (endpoints included) are refined by bisection on the
/// slope of `|F|²`. Output is sorted and deduplicated.
pub fn scan_roots<T: Real>(pc: &PolarCoupling<T>, t_lo: T, t_hi: T, grid_points: usize, tol: T) -> Result<Vec<T>> {
    if !(t_lo < t_hi) || !t_lo.is_finite() || !t_hi.is_finite() {
        return Err(IsingError::InvalidArgument(format!(
            "need finite t_lo < t_hi, got [{t_lo}, {t_hi}]"
        )));
    }
    if grid_points < 100 {
        return Err(IsingError::InvalidArgument(format!(
            "grid_points must be >= 100, got {grid_points}"
        )));
    }
    let step = (t_hi - t_lo) / T::from_int(grid_points as i64 - 1);
    let grid: Vec<T> = (0..grid_points).map(|k| t_lo + step * T::from_int(k as i64)).collect();
    let mag: Vec<T> = grid.iter().map(|&t| pc.evaluate(t).norm()).collect();
    let h = T::lit(1e-6).max(T::epsilon().sqrt()) * (T::one() + t_hi.abs().max(t_lo.abs()));
    let slope = |t: T| (pc.evaluate(t + h).norm_sqr() - pc.evaluate(t - h).norm_sqr()) / (h + h);

    let mut roots: Vec<T> = Vec::new();
    let last = grid_points - 1;
    for k in 0..grid_points {
        let left_ok = k == 0 || mag[k] <= mag[k - 1];
        let right_ok = k == last || mag[k] <= mag[k + 1];
        if !(left_ok && right_ok) {
            continue;
        }
        let lo = if k == 0 { grid[0] } else { grid[k - 1] };
        let hi = if k == last { grid[last] } else { grid[k + 1] };
        let candidate = if slope(lo) >= T::zero() {
            lo
        } else if slope(hi) <= T::zero() {
            hi
        } else {
            crate::roots::bisect(&slope, lo, hi, 60, T::zero()).unwrap_or(grid[k])
        };
        if pc.evaluate(candidate).norm() < tol {
            roots.push(candidate);
        }
    }
    roots.sort_by(|a, b| a.partial_cmp(b).expect("finite roots"));
    roots.dedup_by(|a, b| (*a - *b).abs() < step * T::lit(0.5));
    Ok(roots)
}

/// `-4πn r (r² - 1) sin φ`; zero when rational-coupling roots survive a
/// first-order perturbation of `j`.
pub fn root_preservation_residual<T: Real>(n: i64, r: T, phi: T) -> T {
    -T::lit(4.0) * T::PI() * T::from_int(n) * r * (r * r - T::one()) * phi.sin()
}
