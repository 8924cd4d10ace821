//! Expectation values, separable ranges and entanglement-witness verdicts.
//!
//! Separable ranges of `<H>` and of the real-amplitude product profile `f(x, y)`
//! are both extrema of `h(u, v) = k cos(u+v) + c1 cos u + c2 cos v`. Those are
//! found exactly: the four corners `u, v ∈ {0, π}` plus the interior
//! stationary points, which reduce to a quadratic (see
//! [`trig_pair_stationary_values`]).

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};

use crate::error::Result;
use crate::hamiltonian::hamiltonian;
use crate::matrix::Mat4;
use crate::params::CouplingParams;
use crate::propagator::propagator_closed_form;
use crate::scalar::{c, Cplx, Real};
use crate::state::{Qubit, TwoQubitState};

/// Margin used before declaring a value outside a separable interval.
pub const VERDICT_MARGIN: f64 = 1e-9;

/// `<s|H|s>`; the imaginary residue is discarded (see [`expectation`]).
pub fn energy_expectation<T: Real>(s: &TwoQubitState<T>, p: &CouplingParams<T>) -> T {
    hamiltonian(p).expectation(s).re
}

/// `<s|σ1·σ2|s>` in `[-3, 1]`.
pub fn spin_dot_expectation<T: Real>(s: &TwoQubitState<T>) -> T {
    Mat4::spin_dot().expectation(s).re
}

/// Full complex expectation, for checking that the imaginary part vanishes.
pub fn expectation<T: Real>(m: &Mat4<T>, s: &TwoQubitState<T>) -> Cplx<T> {
    m.expectation(s)
}

/// `[-M, M]` with `M = max(J + |B-|, |B+|)`, the separable energy interval as
/// usually quoted for this model.
///
/// This interval is NOT a valid bound in general (for `J > 0` the product
/// state `|11>` has energy `-J - B+`, below `-M` whenever `B+ > |B-|`);
/// [`separable_energy_range`] gives the exact interval used by the witness.
pub fn separable_energy_bounds<T: Real>(p: &CouplingParams<T>) -> (T, T) {
    let m = (p.coupling() + p.field_diff().abs()).max(p.field_sum().abs());
    (-m, m)
}

/// Exact range of `<H>` over all product states.
///
/// For unit Bloch vectors `n1, n2`, `<H> = -J n1·n2 + B1 z1 + B2 z2`; the
/// extrema are coplanar, leaving `-J cos(a - b) + B1 cos a + B2 cos b` on
/// the torus.
pub fn separable_energy_range<T: Real>(p: &CouplingParams<T>) -> (T, T) {
    envelope(&trig_pair_stationary_values(
        -p.coupling(),
        p.field_1(),
        p.field_2(),
        false,
    ))
}

fn envelope<T: Real>(vals: &[T]) -> (T, T) {
    vals.iter().fold((T::infinity(), T::neg_infinity()), |(lo, hi), &v| {
        (lo.min(v), hi.max(v))
    })
}

/// Stationary values of `h(u, v) = k cos(u+v) + c1 cos u + c2 cos v`.
///
/// With `upper_half = false` the domain is the whole torus (all stationary
/// points); with `upper_half = true` it is `[0, π]²`, where the edges are
/// monotone so corners plus interior stationary points still contain both
/// extrema. The returned set always contains the global min and max.
pub fn trig_pair_stationary_values<T: Real>(k: T, c1: T, c2: T, upper_half: bool) -> Vec<T> {
    // Corners (0,0), (0,π), (π,0), (π,π).
    let mut vals = vec![k + c1 + c2, -k + c1 - c2, -k - c1 + c2, k - c1 - c2];
    if k == T::zero() || c1 == T::zero() || c2 == T::zero() {
        return vals;
    }
    if upper_half && c1 * c2 < T::zero() {
        return vals;
    }
    // Interior: c1 sin u = c2 sin v = -k sin(u+v) = σ ≠ 0 gives
    // cos v / c1 + cos u / c2 = -1/k with sin u = σ/c1, sin v = σ/c2.
    // Squaring twice yields a quadratic in q = σ².
    let four = T::lit(4.0);
    let two = T::lit(2.0);
    let a1 = T::one() / (c1 * c1);
    let a2 = T::one() / (c2 * c2);
    let b = a1 * a2;
    let kk = T::one() / (k * k);
    let l = kk - a1 - a2;
    let m = b + b;
    let qa = four * b * b - m * m;
    let qb = -four * (a1 * b + a2 * b) - two * l * m;
    let qc = four * a1 * a2 - l * l;

    let mut qs: Vec<T> = Vec::with_capacity(2);
    let scale = qa.abs().max(qb.abs()).max(qc.abs());
    if qa.abs() > T::epsilon() * T::lit(64.0) * scale {
        let mut disc = qb * qb - four * qa * qc;
        if disc < T::zero() && disc > -T::lit(1e-10) * qb * qb {
            disc = T::zero();
        }
        if disc >= T::zero() {
            let root = disc.sqrt();
            // Stable quadratic roots.
            let w = -T::lit(0.5) * (qb + qb.signum() * root);
            if w != T::zero() {
                qs.push(w / qa);
                qs.push(qc / w);
            } else {
                qs.push(T::zero());
            }
        }
    } else if qb != T::zero() {
        qs.push(-qc / qb);
    }

    let q_max = (c1 * c1).min(c2 * c2);
    let tol = T::lit(1e-7) * (kk.sqrt() + a1.sqrt() + a2.sqrt());
    for q in qs {
        if !(q > T::zero()) || q > q_max * (T::one() + T::lit(1e-9)) {
            continue;
        }
        let q = q.min(q_max);
        let mag_u = (T::one() - q * a1).max(T::zero()).sqrt();
        let mag_v = (T::one() - q * a2).max(T::zero()).sqrt();
        let mut best: Option<(T, T, T)> = None;
        for eu in [T::one(), -T::one()] {
            for ev in [T::one(), -T::one()] {
                let (cu, cv) = (eu * mag_u, ev * mag_v);
                let res = (cv / c1 + cu / c2 + T::one() / k).abs();
                if best.is_none_or(|(r, _, _)| res < r) {
                    best = Some((res, cu, cv));
                }
            }
        }
        if let Some((res, cu, cv)) = best {
            if res <= tol {
                let cos_sum = cu * cv - q / (c1 * c2);
                vals.push(k * cos_sum + c1 * cu + c2 * cv);
            }
        }
    }
    vals
}

/// `f(x, y) = 2(x sqrt(1-y²) + y sqrt(1-x²))² + β1(2x²-1) + β2(2y²-1)` on `[0, 1]²`.
pub fn real_product_profile<T: Real>(beta1: T, beta2: T, x: T, y: T) -> T {
    let two = T::lit(2.0);
    let sx = (T::one() - x * x).max(T::zero()).sqrt();
    let sy = (T::one() - y * y).max(T::zero()).sqrt();
    let mix = x * sy + y * sx;
    two * mix * mix + beta1 * (two * x * x - T::one()) + beta2 * (two * y * y - T::one())
}

/// `(min, max)` of [`real_product_profile`] on an `n × n` grid including the edges.
pub fn real_product_grid_range<T: Real>(beta1: T, beta2: T, n: usize) -> (T, T) {
    let n = n.max(2);
    let step = T::one() / T::from_int(n as i64 - 1);
    let mut lo = T::infinity();
    let mut hi = T::neg_infinity();
    for i in 0..n {
        let x = (T::from_int(i as i64) * step).min(T::one());
        for k in 0..n {
            let y = (T::from_int(k as i64) * step).min(T::one());
            let v = real_product_profile(beta1, beta2, x, y);
            lo = lo.min(v);
            hi = hi.max(v);
        }
    }
    (lo, hi)
}

/// Extrema of `f(x, y)` on `[0, 1]²`.
#[derive(Debug, Clone, PartialEq)]
pub struct RealProductExtrema<T> {
    /// `{-β+, 2-β-, 2+β-, β+}` with `β± = (β1 ± β2)/2`, as usually quoted.
    pub quoted: [T; 4],
    /// Exact stationary values (corners and interior), ascending.
    pub analytic: Vec<T>,
    /// Dense-grid cross-check (400 × 400).
    pub grid_min: T,
    pub grid_max: T,
}

impl<T: Real> RealProductExtrema<T> {
    pub fn quoted_range(&self) -> (T, T) {
        envelope(&self.quoted)
    }

    pub fn analytic_range(&self) -> (T, T) {
        envelope(&self.analytic)
    }
}

pub const REAL_PRODUCT_GRID: usize = 400;

pub fn real_product_extrema<T: Real>(beta1: T, beta2: T) -> RealProductExtrema<T> {
    let half = T::lit(0.5);
    let two = T::lit(2.0);
    let bp = half * (beta1 + beta2);
    let bm = half * (beta1 - beta2);
    // With x = sin(u/2), y = sin(v/2): f = 1 - [cos(u+v) + β1 cos u + β2 cos v].
    let mut analytic: Vec<T> = trig_pair_stationary_values(T::one(), beta1, beta2, true)
        .into_iter()
        .map(|h| T::one() - h)
        .collect();
    analytic.sort_by(|a, b| a.partial_cmp(b).expect("finite"));
    let (grid_min, grid_max) = real_product_grid_range(beta1, beta2, REAL_PRODUCT_GRID);
    RealProductExtrema {
        quoted: [-bp, two - bm, two + bm, bp],
        analytic,
        grid_min,
        grid_max,
    }
}

/// Heisenberg-picture `U†(t) σ1·σ2 U(t)`. Requires `R > 0`.
pub fn spin_dot_heisenberg<T: Real>(p: &CouplingParams<T>, t: T) -> Result<Mat4<T>> {
    let n = p.try_normalized()?;
    let tp = p.scaled_time(t);
    let (j, b) = (n.coupling, n.field_diff);
    let s2 = tp.sin() * tp.sin();
    let two = T::lit(2.0);
    let eight = T::lit(8.0);
    let mut m = Mat4::zero();
    m.0[0][0] = c(T::one(), T::zero());
    m.0[3][3] = c(T::one(), T::zero());
    m.0[1][1] = c(-(T::one() + eight * j * b * s2), T::zero());
    m.0[2][2] = c(-(T::one() - eight * j * b * s2), T::zero());
    m.0[1][2] = c(two * (T::one() - two * b * b * s2), two * b * (tp + tp).sin());
    m.0[2][1] = m.0[1][2].conj();
    Ok(m)
}

/// Same operator by explicit conjugation with the closed-form propagator.
pub fn spin_dot_conjugated<T: Real>(p: &CouplingParams<T>, t: T) -> Result<Mat4<T>> {
    let u = propagator_closed_form(p, t)?;
    Ok(u.matrix().adjoint() * Mat4::spin_dot() * *u.matrix())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Observable {
    Energy,
    SpinDot,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Entangled,
    Inconclusive,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WitnessVerdict<T> {
    pub value: T,
    pub separable_lo: T,
    pub separable_hi: T,
    pub verdict: Verdict,
}

/// Compares an expectation value against the exact separable interval of
/// the observable (`[-1, 1]` for `σ1·σ2`, [`separable_energy_range`] for `H`).
pub fn witness_verdict<T: Real>(
    s: &TwoQubitState<T>,
    p: &CouplingParams<T>,
    observable: Observable,
) -> WitnessVerdict<T> {
    let (value, (lo, hi)) = match observable {
        Observable::Energy => (energy_expectation(s, p), separable_energy_range(p)),
        Observable::SpinDot => (spin_dot_expectation(s), (-T::one(), T::one())),
    };
    let margin = T::lit(VERDICT_MARGIN);
    let verdict = if value < lo - margin || value > hi + margin {
        Verdict::Entangled
    } else {
        Verdict::Inconclusive
    };
    WitnessVerdict {
        value,
        separable_lo: lo,
        separable_hi: hi,
        verdict,
    }
}

fn haar_qubit<T: Real>(rng: &mut ChaCha8Rng) -> Qubit<T> {
    loop {
        let v: [f64; 4] = std::array::from_fn(|_| StandardNormal.sample(rng));
        let n = v.iter().map(|x| x * x).sum::<f64>().sqrt();
        if n > 1e-12 {
            return Qubit::new(
                c(T::lit(v[0] / n), T::lit(v[1] / n)),
                c(T::lit(v[2] / n), T::lit(v[3] / n)),
            );
        }
    }
}

/// Haar-random product states `χ ⊗ ψ`; deterministic for a given seed.
pub fn sample_product_states<T: Real>(seed: u64, count: usize) -> Vec<TwoQubitState<T>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let a = haar_qubit::<T>(&mut rng);
            let b = haar_qubit::<T>(&mut rng);
            a.tensor(&b)
        })
        .collect()
}

/// Haar-random single-qubit pairs, for exchange experiments.
pub fn sample_qubit_pairs<T: Real>(seed: u64, count: usize) -> Vec<(Qubit<T>, Qubit<T>)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| (haar_qubit(&mut rng), haar_qubit(&mut rng)))
        .collect()
}
