//! Datasets behind figures 1-6.

use std::f64::consts::PI;

use ising_core::control::{design_loop, design_swap};
use ising_core::entanglement::{binary_entropy, schmidt, theta_family_quoted, theta_family_schmidt};
use ising_core::periodicity::PolarCoupling;
use ising_core::{energies, evolve, Params, Qubit64, State, C64};

use crate::args::{time_grid, Opts};
use crate::commands::symmetric_grid;
use crate::error::CliError;
use crate::table::{Cell, Table};

pub fn figure_dataset(id: u8, opts: &Opts) -> Result<Table, CliError> {
    match id {
        1 => energy_levels(opts),
        2 => split_input_entropy(opts),
        3 => theta_family(opts),
        4 => loops(opts),
        5 => exchange(opts),
        6 => separability_function(opts),
        other => Err(CliError::Usage(format!("--figure must be 1-6, got {other}"))),
    }
}

fn nonzero_coupling(opts: &Opts) -> Result<f64, CliError> {
    let j = opts.coupling();
    if j == 0.0 || !j.is_finite() {
        return Err(CliError::Usage(format!("this figure needs a finite --j != 0, got {j}")));
    }
    Ok(j)
}

fn p_grid(opts: &Opts) -> Result<Vec<f64>, CliError> {
    Ok(match opts.family_p()? {
        Some(p) => vec![p],
        None => (0..=20).map(|k| k as f64 / 20.0).collect(),
    })
}

fn energy_levels(opts: &Opts) -> Result<Table, CliError> {
    let j = nonzero_coupling(opts)?;
    let count = opts.steps_or(40)?;
    let mut table = Table::new(&[
        "b_minus_over_j",
        "b_plus_over_j",
        "e1_over_j",
        "e2_over_j",
        "e3_over_j",
        "e4_over_j",
    ]);
    for x in symmetric_grid(4.0, count) {
        for y in symmetric_grid(4.0, count) {
            let e = energies(&Params::from_sum_diff(j, y * j, x * j)?);
            let mut row: Vec<Cell> = vec![x.into(), y.into()];
            row.extend(e.iter().map(|&v| Cell::Num(v / j)));
            table.push(row);
        }
    }
    Ok(table)
}

fn split_input_entropy(opts: &Opts) -> Result<Table, CliError> {
    let j = nonzero_coupling(opts)?;
    let list = if opts.b_minus.is_empty() {
        vec![0.0, 1.0, 2.0, 4.0]
    } else {
        opts.b_minus.clone()
    };
    let per_period = opts.steps_or(512)?;
    let mut table = Table::new(&["t", "b_minus", "entropy"]);
    for bm in list {
        let p = Params::from_sum_diff(j, opts.b_plus.unwrap_or(0.0), bm)?;
        let span = 2.0 * p.period()?;
        for t in time_grid(span, 2 * per_period) {
            let s = evolve(&State::basis(1), &p, t)?;
            table.push(vec![t.into(), bm.into(), schmidt(&s).entropy.into()]);
        }
    }
    Ok(table)
}

/// Reduced couplings shown for the θ family: four rationals and 1/√7.
pub const THETA_COUPLINGS: [f64; 5] = [1.0 / 16.0, 1.0 / 8.0, 1.0 / 4.0, 3.0 / 8.0, 0.377_964_473_009_227_2];

fn theta_family(opts: &Opts) -> Result<Table, CliError> {
    let js: Vec<f64> = match opts.j {
        Some(j) => vec![j],
        None => THETA_COUPLINGS.to_vec(),
    };
    let thetas: Vec<f64> = match opts.theta {
        Some(th) => vec![th],
        None => (0..=8).map(|k| k as f64 * PI / 16.0).collect(),
    };
    let t_max = opts.t_max_or(8.0 * PI)?;
    let steps = opts.steps_or(1024)?;
    let mut table = Table::new(&["j", "theta", "t_prime", "entropy", "entropy_quoted"]);
    for &j in &js {
        let p = Params::from_reduced_coupling(j)?;
        for &theta in &thetas {
            for t in time_grid(t_max, steps) {
                let s = theta_family_schmidt(theta, &p, t)?;
                let quoted = theta_family_quoted(theta, j, t).map(|(l1, _)| binary_entropy(l1));
                table.push(vec![j.into(), theta.into(), t.into(), s.entropy.into(), quoted.into()]);
            }
        }
    }
    Ok(table)
}

fn phi_family(p: f64, sign: f64) -> State {
    let z = C64::new(0.0, 0.0);
    State::from_amplitudes([z, C64::new(p.sqrt(), 0.0), C64::new(sign * (1.0 - p).sqrt(), 0.0), z])
}

/// `(source, (n, m, s) label, params, period)`.
type LoopRun = (&'static str, Option<(i64, i64, i64)>, Params, f64);

fn loops(opts: &Opts) -> Result<Table, CliError> {
    let j = nonzero_coupling(opts)?;
    let steps = opts.steps_or(128)?;
    let ps = p_grid(opts)?;
    let mut runs: Vec<LoopRun> = Vec::new();
    // Field-free loop: (1,1,1) for J > 0, (1,0,0) for J < 0.
    let (n, m, s) = if j > 0.0 { (1, 1, 1) } else { (1, 0, 0) };
    let l = design_loop(n, m, s, j, 1)?;
    runs.push(("design", Some((n, m, s)), l.params(), l.period));
    let overrides = [opts.b_plus.is_some(), !opts.b_minus.is_empty(), opts.t_max.is_some()];
    if overrides.iter().any(|&o| o) {
        if !overrides.iter().all(|&o| o) {
            return Err(CliError::Usage(
                "figure 4 override needs --b-plus, --b-minus and --t-max together".into(),
            ));
        }
        let p = Params::from_sum_diff(j, opts.b_plus.unwrap_or(0.0), opts.single_b_minus()?.unwrap_or(0.0))?;
        let label = match (opts.n, opts.m, opts.s) {
            (Some(n), Some(m), Some(s)) => Some((n, m, s)),
            _ => None,
        };
        runs.push(("override", label, p, opts.t_max_or(1.0)?));
    }
    let mut table = Table::new(&["source", "family", "n", "m", "s", "p", "t", "entropy"]);
    for (source, label, params, period) in runs {
        let idx = |k: usize| label.map_or(Cell::Empty, |(n, m, s)| Cell::Int([n, m, s][k]));
        for (family, sign) in [("plus", 1.0), ("minus", -1.0)] {
            for &p in &ps {
                let s0 = phi_family(p, sign);
                for t in time_grid(period, steps) {
                    let e = schmidt(&evolve(&s0, &params, t)?).entropy;
                    table.push(vec![
                        source.into(),
                        family.into(),
                        idx(0),
                        idx(1),
                        idx(2),
                        p.into(),
                        t.into(),
                        e.into(),
                    ]);
                }
            }
        }
    }
    Ok(table)
}

/// Initial states (a)-(f) of the exchange figure.
pub fn exchange_family(label: char, p: f64) -> State {
    let a = p.sqrt();
    let b = (1.0 - p).sqrt();
    match label {
        'a' => Qubit64::real(a, b).tensor(&Qubit64::ket0()),
        'b' => Qubit64::real(a, b).tensor(&Qubit64::real(a, -b)),
        'c' => Qubit64::real(b, a).tensor(&Qubit64::real(a, -b)),
        'd' => Qubit64::real(b, a).tensor(&Qubit64::real(a, b)),
        'e' => State::from_amplitudes([
            C64::new(a, 0.0),
            C64::new(0.0, 0.0),
            C64::new(0.0, 0.0),
            C64::new(b, 0.0),
        ]),
        'f' => State::from_amplitudes([
            C64::new(0.0, 0.0),
            C64::new(a, 0.0),
            C64::new(b, 0.0),
            C64::new(0.0, 0.0),
        ]),
        other => panic!("unknown exchange family {other}"),
    }
}

fn exchange(opts: &Opts) -> Result<Table, CliError> {
    let j = nonzero_coupling(opts)?;
    let sw = design_swap(0, 0, j)?;
    let params = sw.params();
    let steps = opts.steps_or(128)?;
    let ps = p_grid(opts)?;
    let mut table = Table::new(&["state", "p", "t", "entropy"]);
    for label in ['a', 'b', 'c', 'd', 'e', 'f'] {
        for &p in &ps {
            let s0 = exchange_family(label, p);
            for t in time_grid(sw.period, steps) {
                let e = schmidt(&evolve(&s0, &params, t)?).entropy;
                table.push(vec![label.to_string().into(), p.into(), t.into(), e.into()]);
            }
        }
    }
    Ok(table)
}

/// Panels of the `|F|` figure: `(label, j, φ)`.
pub fn separability_panels() -> [(char, f64, f64); 6] {
    let irrational = 1.0 / 7f64.sqrt();
    [
        ('a', 0.25, 0.0),
        ('b', 0.25, PI / 2.0),
        ('c', 0.25, PI),
        ('d', irrational, 0.0),
        ('e', irrational, PI / 2.0),
        ('f', irrational, PI),
    ]
}

pub const SEPARABILITY_RATIOS: [f64; 4] = [0.0, 0.5, 1.0, 2.0];

fn separability_function(opts: &Opts) -> Result<Table, CliError> {
    let t_max = opts.t_max_or(8.0 * PI)?;
    let steps = opts.steps_or(2048)?;
    let ratios: Vec<f64> = opts.r.map_or(SEPARABILITY_RATIOS.to_vec(), |r| vec![r]);
    let mut table = Table::new(&["panel", "j", "phi", "r", "t_prime", "abs_f"]);
    for (label, j, phi) in separability_panels() {
        for &r in &ratios {
            let pc = PolarCoupling::new(r, phi, j)?;
            for t in time_grid(t_max, steps) {
                table.push(vec![
                    label.to_string().into(),
                    j.into(),
                    phi.into(),
                    r.into(),
                    t.into(),
                    pc.evaluate(t).norm().into(),
                ]);
            }
        }
    }
    Ok(table)
}
