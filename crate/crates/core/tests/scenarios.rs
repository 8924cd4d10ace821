use std::f64::consts::PI;

use ising_core::control::{apply_exchange_demo, design_swap};
use ising_core::entanglement::{max_entanglement_times, schmidt, theta_family_schmidt};
use ising_core::periodicity::{f_function, scan_roots, PolarCoupling};
use ising_core::witness::{sample_product_states, sample_qubit_pairs, spin_dot_expectation, spin_dot_heisenberg};
use ising_core::{evolve, spectrum, Params, State};

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

#[test]
fn entropy_of_split_input_peaks_at_predicted_times() {
    for bm in [0.0, 1.0, 2.0] {
        let p = Params::from_sum_diff(1.0, 0.0, bm).unwrap();
        let times = max_entanglement_times(&p).unwrap();
        for t in [times.t_a, times.t_b] {
            let s = evolve(&State::basis(1), &p, t).unwrap();
            assert!((schmidt(&s).entropy - 1.0).abs() < 1e-9, "B-={bm} t={t}");
        }
        let back = evolve(&State::basis(1), &p, times.period).unwrap();
        assert!(back.fidelity(&State::basis(1)) > 1.0 - 1e-12);
    }
}

#[test]
fn strong_inhomogeneity_caps_entropy() {
    let p = Params::from_sum_diff(1.0, 0.0, 4.0).unwrap();
    let period = p.period().unwrap();
    let steps = 4096;
    let peak = (0..=steps)
        .map(|k| schmidt(&evolve(&State::basis(1), &p, 2.0 * period * k as f64 / steps as f64).unwrap()).entropy)
        .fold(0.0, f64::max);
    assert!((peak - 0.721_928_094_887_362_3).abs() < 1e-6);
}

#[test]
fn theta_family_recurs_for_quarter_coupling() {
    let p = Params::from_reduced_coupling(0.25).unwrap();
    let theta = PI / 8.0;
    for k in 0..40 {
        let t = 0.17 * k as f64;
        let a = theta_family_schmidt(theta, &p, t).unwrap().entropy;
        let b = theta_family_schmidt(theta, &p, t + 2.0 * PI).unwrap().entropy;
        assert!((a - b).abs() < 1e-9);
    }
}

#[test]
fn eigenstate_spin_dot_is_stationary() {
    let p = Params::new(0.8, 1.1, -0.6).unwrap();
    let n = p.normalized().unwrap();
    let spec = spectrum(&p).unwrap();
    let want = [1.0, 1.0, 4.0 * n.coupling - 1.0, -4.0 * n.coupling - 1.0];
    for t in [0.0, 0.4, 1.7] {
        let m = spin_dot_heisenberg(&p, t).unwrap();
        let mut got: Vec<f64> = spec.states.iter().map(|u| m.expectation(u).re).collect();
        got.sort_by(|a, b| a.partial_cmp(b).unwrap());
        let mut w = want.to_vec();
        w.sort_by(|a, b| a.partial_cmp(b).unwrap());
        for (g, w) in got.iter().zip(&w) {
            assert!((g - w).abs() < 1e-10);
        }
    }
}

#[test]
fn product_sampling_approaches_spin_dot_extremes() {
    let states = sample_product_states::<f64>(7, 100_000);
    let vals: Vec<f64> = states.iter().map(spin_dot_expectation).collect();
    let lo = vals.iter().cloned().fold(f64::INFINITY, f64::min);
    let hi = vals.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    assert!(lo >= -1.0 - 1e-9 && hi <= 1.0 + 1e-9);
    assert!(lo < -1.0 + 1e-2 && hi > 1.0 - 1e-2);
}

#[test]
fn exchange_transfers_random_qubits() {
    for m in [-2, 0, 3] {
        let spec = design_swap(1, m, 0.9).unwrap();
        for (chi, psi) in sample_qubit_pairs::<f64>(11, 25) {
            let out = apply_exchange_demo(&chi, &psi, &spec).unwrap();
            assert!(out.fidelity(&psi.tensor(&chi)) > 1.0 - 1e-10);
            assert!(schmidt(&out).entropy < 1e-9);
        }
    }
}

#[test]
fn rational_coupling_root_lattice() {
    for m in 1..=5i64 {
        for n in 1..=m {
            if gcd(n, m) != 1 {
                continue;
            }
            let j = n as f64 / (2.0 * m as f64);
            for (r, phi) in [(0.3, 0.0), (1.0, 1.2), (1.7, -2.5), (0.0, 0.4)] {
                let f = f_function(r, phi, j, m as f64 * PI).unwrap();
                assert!(f.norm() < 1e-12, "j={j} r={r} phi={phi}: {}", f.norm());
            }
        }
    }
}

#[test]
fn quarter_coupling_roots_repeat_every_two_pi() {
    let pc = PolarCoupling::new(1.0, 0.0, 0.25).unwrap();
    let roots = scan_roots(&pc, 0.0, 8.0 * PI, 4000, 1e-10).unwrap();
    assert!(roots.len() >= 5);
    for r in &roots {
        let shifted = r + 2.0 * PI;
        if shifted <= 8.0 * PI + 1e-9 {
            assert!(roots.iter().any(|q| (q - shifted).abs() < 1e-6), "{r} has no partner");
        }
    }
}

#[test]
fn irrational_coupling_breaks_root_periodicity() {
    let j = 1.0 / 7f64.sqrt();
    let pc = PolarCoupling::new(1.0, PI / 2.0, j).unwrap();
    let roots = scan_roots(&pc, 0.0, 16.0 * PI, 8000, 1e-8).unwrap();
    let gaps: Vec<f64> = roots.windows(2).map(|w| w[1] - w[0]).collect();
    let uniform = gaps.len() >= 2 && gaps.iter().all(|g| (g - gaps[0]).abs() < 1e-6);
    assert!(!uniform, "roots {roots:?}");
    let pc = PolarCoupling::new(1.0, 0.0, j).unwrap();
    let roots = scan_roots(&pc, 0.0, 8.0 * PI, 4000, 1e-10).unwrap();
    assert!(!roots.iter().any(|r| (r - 2.0 * PI).abs() < 0.01));
}

#[test]
fn vanishing_ratio_keeps_sine_roots_for_any_coupling() {
    for j in [0.25, 0.3, 1.0 / 7f64.sqrt()] {
        let pc = PolarCoupling::new(0.0, 0.0, j).unwrap();
        let roots = scan_roots(&pc, 3.0 * PI, 5.0 * PI, 2000, 1e-10).unwrap();
        assert!(roots.iter().any(|r| (r - 4.0 * PI).abs() < 0.05));
    }
}
