//! Schmidt decomposition, entanglement entropy and the times at which the
//! Ising evolution makes `|01>` or `|10>` maximally entangled.

use crate::error::{IsingError, Result};
use crate::params::CouplingParams;
use crate::propagator::evolve;
use crate::scalar::{cis, re, Real};
use crate::state::TwoQubitState;

/// Schmidt probabilities, `Δ = |det A|` and base-2 entropy of a pure state.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SchmidtData<T> {
    pub lambda1: T,
    pub lambda2: T,
    pub delta: T,
    pub entropy: T,
}

/// `-x log2 x` with `0 log 0 = 0`.
fn entropy_term<T: Real>(x: T) -> T {
    if x <= T::zero() {
        T::zero()
    } else {
        -x * x.log2()
    }
}

/// Binary entropy of the Schmidt pair `(λ, 1-λ)`.
pub fn binary_entropy<T: Real>(lambda: T) -> T {
    let l = lambda.max(T::zero()).min(T::one());
    entropy_term(l) + entropy_term(T::one() - l)
}

/// Schmidt data from the eigenvalues of `A A†` for the amplitude matrix `A`.
pub fn schmidt<T: Real>(s: &TwoQubitState<T>) -> SchmidtData<T> {
    let [[a, b], [g, d]] = s.amplitude_matrix();
    // A A† = [[p, q], [q*, r]]
    let p = a.norm_sqr() + b.norm_sqr();
    let r = g.norm_sqr() + d.norm_sqr();
    let q = a * g.conj() + b * d.conj();
    let half = T::lit(0.5);
    let mean = half * (p + r);
    let radius = (half * (p - r)).hypot(q.norm());
    let lambda1 = mean + radius;
    let delta = s.determinant().norm();
    // det(A A†) = |det A|²; avoids cancellation in mean - radius.
    let lambda2 = if lambda1 > T::zero() {
        (delta * delta / lambda1).min(lambda1)
    } else {
        T::zero()
    };
    SchmidtData {
        lambda1,
        lambda2,
        delta,
        entropy: (entropy_term(lambda1) + entropy_term(lambda2)).max(T::zero()),
    }
}

/// `λ = ½(1 ± sqrt(1 - 4Δ²))` from the determinant alone.
pub fn lambdas_from_delta<T: Real>(delta: T) -> (T, T) {
    let half = T::lit(0.5);
    let root = (T::one() - T::lit(4.0) * delta * delta).max(T::zero()).sqrt();
    (half * (T::one() + root), half * (T::one() - root))
}

/// Times of maximal entanglement for `|01>` (and `|10>`) within one period.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MaxEntanglementTimes<T> {
    /// First maximum in `[0, π/R]`; for unattainable parameters, the time of
    /// the entropy supremum `π/(2R)`.
    pub t_a: T,
    /// Second maximum `π/R - t_a`.
    pub t_b: T,
    /// State recurrence period `2π/R`.
    pub period: T,
    /// `B-² ≤ 4J²`.
    pub attainable: bool,
    /// `B-² = 4J²`: the two maxima merge (`t_a = t_b`).
    pub two_touch: bool,
    /// Largest entropy reached from `|01>`: one when attainable, otherwise
    /// the binary entropy of `λ2 = 4j²`.
    pub max_entropy: T,
}

pub fn max_entanglement_times<T: Real>(p: &CouplingParams<T>) -> Result<MaxEntanglementTimes<T>> {
    let j = p.coupling();
    if j == T::zero() {
        return Err(IsingError::NoEntanglementGeneration);
    }
    let r = p.scale();
    let period = T::TAU() / r;
    let bm2 = p.field_diff() * p.field_diff();
    let four_j2 = T::lit(4.0) * j * j;
    let two_touch = bm2 == four_j2;
    if bm2 <= four_j2 {
        let t_a = (-bm2 / four_j2).max(-T::one()).acos() / (r + r);
        let t_b = if two_touch { t_a } else { T::PI() / r - t_a };
        return Ok(MaxEntanglementTimes {
            t_a,
            t_b,
            period,
            attainable: true,
            two_touch,
            max_entropy: T::one(),
        });
    }
    let peak = T::FRAC_PI_2() / r;
    Ok(MaxEntanglementTimes {
        t_a: peak,
        t_b: peak,
        period,
        attainable: false,
        two_touch: false,
        max_entropy: binary_entropy(four_j2 / (r * r)),
    })
}

/// Which single-excitation basis state is evolved.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SplitInput {
    /// `|0₁1₂>`
    Ket01,
    /// `|1₁0₂>`
    Ket10,
}

impl SplitInput {
    pub fn state<T: Real>(self) -> TwoQubitState<T> {
        match self {
            SplitInput::Ket01 => TwoQubitState::basis(1),
            SplitInput::Ket10 => TwoQubitState::basis(2),
        }
    }
}

/// First (`A`, at `t_a`) or second (`B`, at `t_b`) maximum in a half period.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Branch {
    A,
    B,
}

/// Maximally entangled state reached from `which` at the chosen branch time,
/// in the form `(e^{iφ}|01> + |10>)/√2` (for `|01>`) or
/// `(|01> + e^{iφ}|10>)/√2` (for `|10>`), up to global phase.
///
/// `tan φ = ±sqrt(4J² - B-²)/B-`; the quadrant is fixed by the actual
/// amplitude ratio, so the result agrees with direct evolution.
pub fn max_entangled_result_state<T: Real>(
    p: &CouplingParams<T>,
    which: SplitInput,
    branch: Branch,
) -> Result<TwoQubitState<T>> {
    let times = max_entanglement_times(p)?;
    if !times.attainable {
        return Err(IsingError::NotAttainable);
    }
    let j = p.coupling();
    let bm = p.field_diff();
    let root = (T::lit(4.0) * j * j - bm * bm).max(T::zero()).sqrt();
    // cot t' is non-negative at t_a and non-positive at t_b.
    let kappa = match branch {
        Branch::A => T::one(),
        Branch::B => -T::one(),
    };
    let two_j = j + j;
    let h = re(T::FRAC_1_SQRT_2());
    let z = re(T::zero());
    Ok(match which {
        SplitInput::Ket01 => {
            let phi = (-kappa * root / two_j).atan2(-bm / two_j);
            TwoQubitState::from_amplitudes([z, h * cis(phi), h, z])
        }
        SplitInput::Ket10 => {
            let phi = (-kappa * root / two_j).atan2(bm / two_j);
            TwoQubitState::from_amplitudes([z, h, h * cis(phi), z])
        }
    })
}

/// Branch time from [`max_entanglement_times`].
pub fn branch_time<T: Real>(times: &MaxEntanglementTimes<T>, branch: Branch) -> T {
    match branch {
        Branch::A => times.t_a,
        Branch::B => times.t_b,
    }
}

/// `sin θ β01 - cos θ β10`.
pub fn theta_state<T: Real>(theta: T) -> TwoQubitState<T> {
    let (s, c) = theta.sin_cos();
    let h = T::FRAC_1_SQRT_2();
    let z = re(T::zero());
    TwoQubitState::from_amplitudes([z, re(h * (s - c)), re(h * (s + c)), z])
}

/// Schmidt data of `sin θ β01 - cos θ β10` after evolving for time `t`.
pub fn theta_family_schmidt<T: Real>(theta: T, p: &CouplingParams<T>, t: T) -> Result<SchmidtData<T>> {
    Ok(schmidt(&evolve(&theta_state(theta), p, t)?))
}

/// Closed-form Schmidt pair for the θ family as commonly quoted, kept only
/// for side-by-side comparison with
/// [`theta_family_schmidt`]. It does not reproduce the evolved state (at
/// `t' = 0` it yields `(½, ½)` for every θ). Returns `None` when its radicand
/// leaves `[0, 1]`.
pub fn theta_family_quoted<T: Real>(theta: T, j: T, t_prime: T) -> Option<(T, T)> {
    let four = T::lit(4.0);
    let st = t_prime.sin();
    let s4 = (st * st) * (st * st);
    let sth = theta.sin();
    let sth4 = (sth * sth) * (sth * sth);
    let s2th = (theta + theta).sin();
    let radicand = T::lit(16.0) * j * j * (T::one() - four * j * j) * s4 * sth4
        + s2th * s2th * ((j + j) * t_prime).sin().powi(2)
        + s2th * s2th * (four * j * j * st * st * (four * j * t_prime).cos() - j * (four * j * t_prime).sin());
    if !(radicand >= T::zero() && radicand <= T::one()) {
        return None;
    }
    let half = T::lit(0.5);
    let root = radicand.sqrt();
    Some((half * (T::one() + root), half * (T::one() - root)))
}
