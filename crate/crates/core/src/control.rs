//! Evolution loops (`U(T) ∝ I`) and qubit exchange (`U(T) ∝ I_{1↔2}`).

use crate::error::{IsingError, Result};
use crate::matrix::Mat4;
use crate::params::CouplingParams;
use crate::propagator::{evolve, propagator};
use crate::scalar::{cis, i_unit, re, Cplx, Real};
use crate::state::{Qubit, TwoQubitState};

/// Loop design for integers `(n, m, s)`:
/// `B+ = 2(s-m)J/(m+s-n)`, `B- = ±2J sqrt((2n-m-s)(m+s))/(m+s-n)`,
/// `T = (m+s-n)π/(2J)`, giving `U(T) = (-1)^n e^{-iJT} I`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LoopSpec<T> {
    pub n: i64,
    pub m: i64,
    pub s: i64,
    /// Sign chosen for `B-`.
    pub sign: i8,
    pub coupling: T,
    pub field_sum: T,
    pub field_diff: T,
    pub period: T,
    pub expected_phase: Cplx<T>,
}

impl<T: Real> LoopSpec<T> {
    pub fn params(&self) -> CouplingParams<T> {
        CouplingParams::from_sum_diff(self.coupling, self.field_sum, self.field_diff).expect("loop fields are finite")
    }
}

/// Exchange design for `n ≥ 0`, `m ∈ ℤ`: `B+ = 8Jm/(2n+1)`, `B- = 0`,
/// `T = (2n+1)π/(4|J|)`, giving `U(T) = i sgn(J) (-1)^n e^{-iJT} I_{1↔2}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SwapSpec<T> {
    pub n: i64,
    pub m: i64,
    pub coupling: T,
    pub field_sum: T,
    pub field_diff: T,
    pub period: T,
    pub expected_phase: Cplx<T>,
}

impl<T: Real> SwapSpec<T> {
    pub fn params(&self) -> CouplingParams<T> {
        CouplingParams::from_sum_diff(self.coupling, self.field_sum, self.field_diff).expect("swap fields are finite")
    }
}

fn loop_violation(n: i64, m: i64, s: i64, positive_coupling: bool) -> Option<String> {
    let k = m + s;
    if n <= 0 {
        return Some("0 < n".into());
    }
    if positive_coupling {
        if n >= k {
            return Some(format!("n < m+s ({n} >= {k})"));
        }
        if k > 2 * n {
            return Some(format!("m+s <= 2n ({k} > {})", 2 * n));
        }
    } else {
        // T = (m+s-n)π/(2J) > 0 with J < 0 requires m+s < n.
        if k >= n {
            return Some(format!("m+s < n for J < 0 ({k} >= {n})"));
        }
        if k < 0 {
            return Some(format!("0 <= m+s for J < 0 ({k} < 0)"));
        }
    }
    None
}

/// Designs an evolution loop. `sign` picks the sign of `B-` (±1).
pub fn design_loop<T: Real>(n: i64, m: i64, s: i64, coupling: T, sign: i8) -> Result<LoopSpec<T>> {
    if coupling == T::zero() || !coupling.is_finite() {
        return Err(IsingError::InvalidArgument(format!(
            "loop requires finite J != 0, got {coupling}"
        )));
    }
    if sign != 1 && sign != -1 {
        return Err(IsingError::InvalidArgument(format!(
            "sign must be +1 or -1, got {sign}"
        )));
    }
    if let Some(violated) = loop_violation(n, m, s, coupling > T::zero()) {
        return Err(IsingError::InvalidLoopIndices { n, m, s, violated });
    }
    let denom = T::from_int(m + s - n);
    let two_j = coupling + coupling;
    let field_sum = two_j * T::from_int(s - m) / denom;
    let radicand = T::from_int((2 * n - m - s) * (m + s));
    let field_diff = T::from_int(sign as i64) * two_j * radicand.sqrt() / denom;
    let period = denom * T::PI() / two_j;
    let parity = if n % 2 == 0 { T::one() } else { -T::one() };
    Ok(LoopSpec {
        n,
        m,
        s,
        sign,
        coupling,
        field_sum,
        field_diff,
        period,
        expected_phase: cis(-coupling * period) * re(parity),
    })
}

/// Designs an exchange operation.
pub fn design_swap<T: Real>(n: i64, m: i64, coupling: T) -> Result<SwapSpec<T>> {
    if coupling == T::zero() || !coupling.is_finite() {
        return Err(IsingError::InvalidArgument(format!(
            "swap requires finite J != 0, got {coupling}"
        )));
    }
    if n < 0 {
        return Err(IsingError::InvalidArgument(format!(
            "swap index n must be >= 0, got {n}"
        )));
    }
    let odd = T::from_int(2 * n + 1);
    let period = odd * T::PI() / (T::lit(4.0) * coupling.abs());
    let parity = if n % 2 == 0 { T::one() } else { -T::one() };
    let sign = coupling.signum();
    Ok(SwapSpec {
        n,
        m,
        coupling,
        field_sum: T::lit(8.0) * coupling * T::from_int(m) / odd,
        field_diff: T::zero(),
        period,
        expected_phase: i_unit::<T>() * re(sign * parity) * cis(-coupling * period),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ControlTarget {
    Identity,
    Exchange,
}

impl ControlTarget {
    pub fn matrix<T: Real>(self) -> Mat4<T> {
        match self {
            ControlTarget::Identity => Mat4::identity(),
            ControlTarget::Exchange => Mat4::exchange(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ControlCheck<T> {
    /// `sqrt(1 - |tr(U† V)|/4) ∈ [0, 1]`; zero iff `U = e^{iφ} V`.
    pub distance: T,
    /// `e^{iφ}` with `U(T) ≈ e^{iφ} · target`.
    pub phase: Cplx<T>,
}

/// Phase-invariant distance between `U(T)` and the target.
///
/// For unitaries `‖U - e^{iφ}V‖²_F = 8 - 2|tr(V†U)|` at the optimal phase, so
/// the distance is evaluated as `‖U - e^{iφ}V‖_F / √8`, which avoids the
/// cancellation in `1 - |tr|/4` near zero.
pub fn verify_control<T: Real>(p: &CouplingParams<T>, period: T, target: ControlTarget) -> Result<ControlCheck<T>> {
    let u = propagator(p, period)?;
    let v = target.matrix::<T>();
    let overlap = (v.adjoint() * *u.matrix()).trace();
    let mag = overlap.norm();
    let phase = if mag > T::zero() { overlap / mag } else { re(T::one()) };
    let diff = *u.matrix() - v.scale(phase);
    let frob = diff
        .0
        .iter()
        .flat_map(|row| row.iter())
        .fold(T::zero(), |acc, z| acc + z.norm_sqr())
        .sqrt();
    let distance = (frob / T::lit(8.0).sqrt()).min(T::one());
    Ok(ControlCheck { distance, phase })
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

/// All primitive loop designs with `n ≤ n_max` and `m, s ≥ 0`, sorted by
/// period (ties by `(n, m, s, sign)`).
///
/// Index triples sharing a common factor `p > 1` repeat a smaller loop `p`
/// times and are skipped. Both signs of `B-` are listed when `B- ≠ 0`.
pub fn enumerate_loops<T: Real>(coupling: T, n_max: i64) -> Result<Vec<LoopSpec<T>>> {
    if n_max < 1 {
        return Err(IsingError::InvalidArgument(format!("n_max must be >= 1, got {n_max}")));
    }
    let mut out = Vec::new();
    for n in 1..=n_max {
        for m in 0..=2 * n {
            for s in 0..=(2 * n - m) {
                if gcd(gcd(n, m), s) != 1 {
                    continue;
                }
                if loop_violation(n, m, s, coupling > T::zero()).is_some() {
                    continue;
                }
                let signs: &[i8] = if 2 * n == m + s { &[1] } else { &[1, -1] };
                for &sign in signs {
                    out.push(design_loop(n, m, s, coupling, sign)?);
                }
            }
        }
    }
    out.sort_by(|a, b| {
        a.period
            .partial_cmp(&b.period)
            .expect("finite periods")
            .then((a.n, a.m, a.s, -a.sign).cmp(&(b.n, b.m, b.s, -b.sign)))
    });
    Ok(out)
}

/// Evolves `χ ⊗ ψ` through one exchange period.
pub fn apply_exchange_demo<T: Real>(chi: &Qubit<T>, psi: &Qubit<T>, spec: &SwapSpec<T>) -> Result<TwoQubitState<T>> {
    for q in [chi, psi] {
        if (q.norm_sqr() - T::one()).abs() > T::lit(1e-12).max(T::epsilon() * T::lit(16.0)) {
            return Err(IsingError::InvalidArgument("input qubit not normalized".into()));
        }
    }
    evolve(&chi.tensor(psi), &spec.params(), spec.period)
}
