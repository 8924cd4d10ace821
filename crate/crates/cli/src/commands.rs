use std::f64::consts::PI;

use ising_core::control::{design_loop, design_swap, enumerate_loops, verify_control, ControlTarget};
use ising_core::entanglement::{schmidt, theta_state};
use ising_core::periodicity::{scan_roots, PolarCoupling};
use ising_core::witness::{sample_product_states, separable_energy_bounds, witness_verdict, Observable, Verdict};
use ising_core::{energies, evolve, spectrum, Params, State};

use crate::args::{time_grid, Command, InitialState, Opts};
use crate::error::CliError;
use crate::figures::figure_dataset;
use crate::table::{Cell, Table};

pub fn run(command: Command, opts: &Opts) -> Result<Table, CliError> {
    match command {
        Command::Spectrum => spectrum_table(opts),
        Command::Evolve => evolve_table(opts),
        Command::EntropySweep => entropy_sweep_table(opts),
        Command::Witness => witness_table(opts),
        Command::Loop => loop_table(opts),
        Command::Swap => swap_table(opts),
        Command::Periodicity => periodicity_table(opts),
        Command::Figure => {
            let id = opts
                .figure
                .ok_or_else(|| CliError::Usage("figure requires --figure <1-6>".into()))?;
            figure_dataset(id, opts)
        }
    }
}

/// Symmetric grid of `count + 1` points on `[-half_width, half_width]`.
pub(crate) fn symmetric_grid(half_width: f64, count: usize) -> impl Iterator<Item = f64> {
    (0..=count).map(move |k| -half_width + 2.0 * half_width * k as f64 / count as f64)
}

pub(crate) fn energy_grid(j: f64, count: usize, header: &[&str]) -> Result<Table, CliError> {
    let mut table = Table::new(header);
    for bm in symmetric_grid(4.0 * j.abs(), count) {
        for bp in symmetric_grid(4.0 * j.abs(), count) {
            let e = energies(&Params::from_sum_diff(j, bp, bm)?);
            let mut row: Vec<Cell> = vec![bm.into(), bp.into()];
            row.extend(e.iter().map(|&x| Cell::Num(x)));
            table.push(row);
        }
    }
    Ok(table)
}

fn spectrum_table(opts: &Opts) -> Result<Table, CliError> {
    let header = ["b_minus", "b_plus", "e1", "e2", "e3", "e4"];
    if opts.any_field() {
        let p = opts.params()?;
        let mut table = Table::new(&header);
        let mut row: Vec<Cell> = vec![p.field_diff().into(), p.field_sum().into()];
        row.extend(energies(&p).iter().map(|&x| Cell::Num(x)));
        table.push(row);
        return Ok(table);
    }
    let j = opts.coupling();
    if j == 0.0 {
        return Err(CliError::Usage(
            "the field grid is scaled by |J|; pass --j != 0 or explicit fields".into(),
        ));
    }
    energy_grid(j, opts.steps_or(40)?, &header)
}

pub(crate) fn initial_state(choice: InitialState, theta: Option<f64>) -> Result<State, CliError> {
    Ok(match choice {
        InitialState::Ket00 => State::basis(0),
        InitialState::Ket01 => State::basis(1),
        InitialState::Ket10 => State::basis(2),
        InitialState::Ket11 => State::basis(3),
        InitialState::Bell01 => State::beta01(),
        InitialState::Bell10 => State::beta10(),
        InitialState::Theta => {
            let theta = theta.ok_or_else(|| CliError::Usage("--state theta requires --theta".into()))?;
            theta_state(theta)
        }
    })
}

fn evolve_table(opts: &Opts) -> Result<Table, CliError> {
    let p = opts.params()?;
    let s0 = initial_state(opts.state.unwrap_or(InitialState::Ket01), opts.theta)?;
    let t_max = opts.t_max_or(p.period().unwrap_or(2.0 * PI))?;
    let steps = opts.steps_or(256)?;
    let mut table = Table::new(&[
        "t", "t_prime", "re_00", "im_00", "re_01", "im_01", "re_10", "im_10", "re_11", "im_11", "entropy",
    ]);
    for t in time_grid(t_max, steps) {
        let s = evolve(&s0, &p, t)?;
        let mut row: Vec<Cell> = vec![t.into(), p.scaled_time(t).into()];
        for a in s.amplitudes() {
            row.push(a.re.into());
            row.push(a.im.into());
        }
        row.push(schmidt(&s).entropy.into());
        table.push(row);
    }
    Ok(table)
}

fn entropy_sweep_table(opts: &Opts) -> Result<Table, CliError> {
    let j = opts.coupling();
    let (bp, list) = if opts.uses_individual_fields() {
        let p = opts.params()?;
        (p.field_sum(), vec![p.field_diff()])
    } else if opts.b_minus.is_empty() {
        (opts.b_plus.unwrap_or(0.0), vec![0.0, 1.0, 2.0, 4.0])
    } else {
        (opts.b_plus.unwrap_or(0.0), opts.b_minus.clone())
    };
    let s0 = initial_state(opts.state.unwrap_or(InitialState::Ket01), opts.theta)?;
    let steps = opts.steps_or(512)?;
    let mut table = Table::new(&["t", "b_minus", "entropy"]);
    for bm in list {
        let p = Params::from_sum_diff(j, bp, bm)?;
        let t_max = opts.t_max_or(p.period().unwrap_or(2.0 * PI))?;
        for t in time_grid(t_max, steps) {
            table.push(vec![t.into(), bm.into(), schmidt(&evolve(&s0, &p, t)?).entropy.into()]);
        }
    }
    Ok(table)
}

fn witness_table(opts: &Opts) -> Result<Table, CliError> {
    let p = opts.params()?;
    if opts.samples == 0 {
        return Err(CliError::Usage("--samples must be > 0".into()));
    }
    let mut named: Vec<(String, State)> = vec![
        ("ket00".into(), State::basis(0)),
        ("ket01".into(), State::basis(1)),
        ("ket10".into(), State::basis(2)),
        ("ket11".into(), State::basis(3)),
        ("bell01".into(), State::beta01()),
        ("bell10".into(), State::beta10()),
    ];
    if let Ok(spec) = spectrum(&p) {
        for (k, u) in spec.states.iter().enumerate() {
            named.push((format!("u{}", k + 1), *u));
        }
    }
    let (quoted_lo, quoted_hi) = separable_energy_bounds(&p);
    let mut table = Table::new(&[
        "state",
        "observable",
        "value",
        "separable_lo",
        "separable_hi",
        "quoted_lo",
        "quoted_hi",
        "verdict",
    ]);
    let verdict_name = |v: Verdict| match v {
        Verdict::Entangled => "entangled",
        Verdict::Inconclusive => "inconclusive",
    };
    for obs in [Observable::Energy, Observable::SpinDot] {
        let (obs_name, qlo, qhi) = match obs {
            Observable::Energy => ("energy", quoted_lo, quoted_hi),
            Observable::SpinDot => ("spin_dot", -1.0, 1.0),
        };
        for (name, s) in &named {
            let v = witness_verdict(s, &p, obs);
            table.push(vec![
                name.as_str().into(),
                obs_name.into(),
                v.value.into(),
                v.separable_lo.into(),
                v.separable_hi.into(),
                qlo.into(),
                qhi.into(),
                verdict_name(v.verdict).into(),
            ]);
        }
        // Extremes over the sampled product states.
        let samples = sample_product_states::<f64>(opts.seed, opts.samples);
        let verdicts: Vec<_> = samples.iter().map(|s| witness_verdict(s, &p, obs)).collect();
        let (lo, hi) = (verdicts[0].separable_lo, verdicts[0].separable_hi);
        let any_entangled = verdicts.iter().any(|v| v.verdict == Verdict::Entangled);
        let min = verdicts.iter().map(|v| v.value).fold(f64::INFINITY, f64::min);
        let max = verdicts.iter().map(|v| v.value).fold(f64::NEG_INFINITY, f64::max);
        for (label, value) in [("product_min", min), ("product_max", max)] {
            table.push(vec![
                label.into(),
                obs_name.into(),
                value.into(),
                lo.into(),
                hi.into(),
                qlo.into(),
                qhi.into(),
                if any_entangled { "entangled" } else { "inconclusive" }.into(),
            ]);
        }
    }
    Ok(table)
}

const CONTROL_HEADER: [&str; 11] = [
    "n", "m", "s", "sign", "j", "b_plus", "b_minus", "period", "phase_re", "phase_im", "distance",
];

fn loop_table(opts: &Opts) -> Result<Table, CliError> {
    let j = opts.coupling();
    let specs = match (opts.n, opts.m, opts.s) {
        (Some(n), Some(m), Some(s)) => {
            let signs = match opts.sign {
                Some(sg) => vec![sg],
                None => vec![1, -1],
            };
            let mut v = Vec::new();
            for sg in signs {
                let l = design_loop(n, m, s, j, sg)?;
                if !v.iter().any(|w: &ising_core::Loop| w.field_diff == l.field_diff) {
                    v.push(l);
                }
            }
            v
        }
        (None, None, None) => enumerate_loops(j, 3)?,
        (Some(n_max), None, None) => enumerate_loops(j, n_max)?,
        _ => {
            return Err(CliError::Usage(
                "loop takes --n, --m and --s together (or only --n as the enumeration limit)".into(),
            ))
        }
    };
    let mut table = Table::new(&CONTROL_HEADER);
    for l in specs {
        let chk = verify_control(&l.params(), l.period, ControlTarget::Identity)?;
        table.push(vec![
            l.n.into(),
            l.m.into(),
            l.s.into(),
            (l.sign as i64).into(),
            l.coupling.into(),
            l.field_sum.into(),
            l.field_diff.into(),
            l.period.into(),
            chk.phase.re.into(),
            chk.phase.im.into(),
            chk.distance.into(),
        ]);
    }
    Ok(table)
}

fn swap_table(opts: &Opts) -> Result<Table, CliError> {
    let j = opts.coupling();
    let pairs: Vec<(i64, i64)> = match (opts.n, opts.m) {
        (Some(n), Some(m)) => vec![(n, m)],
        (None, None) => (0..=3).flat_map(|n| (-3..=3).map(move |m| (n, m))).collect(),
        _ => return Err(CliError::Usage("swap takes --n and --m together".into())),
    };
    let mut table = Table::new(&CONTROL_HEADER);
    for (n, m) in pairs {
        let sw = design_swap(n, m, j)?;
        let chk = verify_control(&sw.params(), sw.period, ControlTarget::Exchange)?;
        table.push(vec![
            n.into(),
            m.into(),
            Cell::Empty,
            Cell::Empty,
            sw.coupling.into(),
            sw.field_sum.into(),
            sw.field_diff.into(),
            sw.period.into(),
            chk.phase.re.into(),
            chk.phase.im.into(),
            chk.distance.into(),
        ]);
    }
    Ok(table)
}

fn periodicity_table(opts: &Opts) -> Result<Table, CliError> {
    let pc = PolarCoupling::new(opts.r.unwrap_or(1.0), opts.phi.unwrap_or(0.0), opts.j.unwrap_or(0.25))?;
    let t_max = opts.t_max_or(8.0 * PI)?;
    if opts.roots {
        let grid = opts.steps_or(4000)?.max(100);
        let roots = scan_roots(&pc, 0.0, t_max, grid, 1e-10)?;
        let mut table = Table::new(&["index", "t_prime", "abs_f"]);
        for (k, t) in roots.into_iter().enumerate() {
            table.push(vec![(k as i64).into(), t.into(), pc.evaluate(t).norm().into()]);
        }
        return Ok(table);
    }
    let mut table = Table::new(&["t_prime", "abs_f", "re_f", "im_f"]);
    for t in time_grid(t_max, opts.steps_or(2048)?) {
        let f = pc.evaluate(t);
        table.push(vec![t.into(), f.norm().into(), f.re.into(), f.im.into()]);
    }
    Ok(table)
}
