use std::process::Command;

use ising_cli::{figure_dataset, Opts, Table};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_ising2q"))
}

fn run(args: &[&str]) -> (i32, String, String) {
    let out = bin().args(args).output().unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn parse(csv: &str) -> (Vec<String>, Vec<Vec<String>>) {
    let mut lines = csv.lines();
    let header = lines.next().unwrap().split(',').map(str::to_string).collect();
    let rows = lines.map(|l| l.split(',').map(str::to_string).collect()).collect();
    (header, rows)
}

fn col(t: &Table, name: &str) -> Vec<f64> {
    let k = t.column(name).unwrap();
    t.rows()
        .iter()
        .map(|r| match &r[k] {
            ising_cli::Cell::Num(x) => *x,
            other => panic!("{other:?}"),
        })
        .collect()
}

fn text(t: &Table, name: &str) -> Vec<String> {
    let k = t.column(name).unwrap();
    t.rows()
        .iter()
        .map(|r| match &r[k] {
            ising_cli::Cell::Text(s) => s.clone(),
            other => panic!("{other:?}"),
        })
        .collect()
}

fn opts() -> Opts {
    Opts {
        precision: 12,
        seed: 7,
        samples: 100,
        ..Default::default()
    }
}

#[test]
fn usage_errors_exit_with_two() {
    for args in [
        &["evolve", "--t-max", "0"][..],
        &["spectrum", "--b1", "1", "--b-plus", "2"],
        &["figure"],
        &["figure", "--figure", "7"],
        &["evolve", "--steps", "1"],
        &["spectrum", "--precision", "18"],
        &["loop", "--n", "3", "--m", "0", "--s", "2"],
        &["bogus"],
    ] {
        let (code, stdout, stderr) = run(args);
        assert_eq!(code, 2, "{args:?}: {stderr}");
        assert!(stdout.is_empty());
        assert!(!stderr.is_empty());
    }
}

#[test]
fn degenerate_numeric_request_exits_with_one() {
    // J = 0 with equal fields has no scaled time.
    let (code, _, stderr) = run(&["periodicity", "--j", "0"]);
    assert_eq!(code, 2, "{stderr}");
    let (code, _, stderr) = run(&["entropy-sweep", "--j", "0", "--b-minus", "0", "--t-max", "1"]);
    assert_eq!(code, 0, "{stderr}");
    let (code, _, _) = run(&["figure", "--figure", "2", "--j", "0"]);
    assert_eq!(code, 2);
}

#[test]
fn spectrum_row_matches_closed_form() {
    let (code, out, _) = run(&["spectrum", "--j", "1", "--b1", "2", "--b2", "1"]);
    assert_eq!(code, 0);
    let (header, rows) = parse(&out);
    assert_eq!(header, ["b_minus", "b_plus", "e1", "e2", "e3", "e4"]);
    let v: Vec<f64> = rows[0].iter().map(|x| x.parse().unwrap()).collect();
    let r = 5f64.sqrt();
    let want = [1.0, 3.0, -4.0, 2.0, 1.0 - r, 1.0 + r];
    for (a, b) in v.iter().zip(want) {
        assert!((a - b).abs() < 1e-11);
    }
}

#[test]
fn output_is_deterministic_and_file_matches_stdout() {
    let args = ["witness", "--b-minus", "4", "--samples", "500", "--seed", "3"];
    let (_, a, _) = run(&args);
    let (_, b, _) = run(&args);
    assert_eq!(a, b);
    let path = std::env::temp_dir().join(format!("ising2q-{}.csv", std::process::id()));
    let mut with_out: Vec<&str> = args.to_vec();
    let p = path.to_str().unwrap().to_string();
    with_out.extend(["--out", &p]);
    let (code, stdout, _) = run(&with_out);
    assert_eq!(code, 0);
    assert!(stdout.is_empty());
    assert_eq!(std::fs::read_to_string(&path).unwrap(), a);
    std::fs::remove_file(path).unwrap();
}

#[test]
fn precision_round_trip() {
    for precision in [6usize, 9, 12, 17] {
        let mut o = opts();
        o.precision = precision as u8;
        o.b_minus = vec![1.0];
        let table = ising_cli::run(ising_cli::Command::Evolve, &o).unwrap();
        let csv = table.render(precision).unwrap();
        let (_, rows) = parse(&csv);
        let k = table.column("entropy").unwrap();
        for (row, lib) in rows.iter().zip(table.rows()) {
            let parsed: f64 = row[k].parse().unwrap();
            if let ising_cli::Cell::Num(x) = lib[k] {
                let tol = 10f64.powi(1 - precision as i32) * x.abs().max(1e-300);
                assert!((parsed - x).abs() <= tol, "{parsed} vs {x}");
            }
        }
    }
}

#[test]
fn split_input_figure_reaches_full_entropy_up_to_the_limit_case() {
    let t = figure_dataset(2, &opts()).unwrap();
    let bm = col(&t, "b_minus");
    let s = col(&t, "entropy");
    for target in [0.0, 1.0, 2.0, 4.0] {
        let peak = bm
            .iter()
            .zip(&s)
            .filter(|(b, _)| **b == target)
            .map(|(_, e)| *e)
            .fold(0.0, f64::max);
        if target <= 2.0 {
            assert!(peak > 1.0 - 1e-4, "B-={target}: {peak}");
        } else {
            assert!((peak - 0.7219).abs() < 1e-3);
        }
    }
}

#[test]
fn theta_figure_quarter_coupling_is_periodic() {
    let mut o = opts();
    o.j = Some(0.25);
    o.theta = Some(std::f64::consts::PI / 8.0);
    o.steps = Some(1024);
    let t = figure_dataset(3, &o).unwrap();
    let s = col(&t, "entropy");
    // 1024 steps over 8π: a 2π shift is 256 rows.
    for k in 0..s.len() - 256 {
        assert!((s[k] - s[k + 256]).abs() < 1e-9);
    }
}

#[test]
fn exchange_figure_behaviour() {
    let t = figure_dataset(5, &opts()).unwrap();
    let label = text(&t, "state");
    let time = col(&t, "t");
    let s = col(&t, "entropy");
    let p = col(&t, "p");
    let period = time.iter().cloned().fold(0.0, f64::max);
    for k in 0..s.len() {
        match label[k].as_str() {
            "a" | "b" | "c" | "d" if time[k] == period => assert!(s[k] < 1e-9),
            "e" => {
                let h = |x: f64| if x <= 0.0 { 0.0 } else { -x * x.log2() };
                assert!((s[k] - (h(p[k]) + h(1.0 - p[k]))).abs() < 1e-9);
            }
            _ => {}
        }
    }
    // Family (a) with p strictly inside (0, 1) passes through an entangled stage.
    let ridge = (0..s.len())
        .filter(|&k| label[k] == "a" && (p[k] - 0.5).abs() < 1e-12)
        .map(|k| s[k])
        .fold(0.0, f64::max);
    assert!(ridge > 0.3, "{ridge}");
}

#[test]
fn loop_figure_returns_states_at_period() {
    let t = figure_dataset(4, &opts()).unwrap();
    let time = col(&t, "t");
    let s = col(&t, "entropy");
    let p = col(&t, "p");
    let period = time.iter().cloned().fold(0.0, f64::max);
    let h = |x: f64| if x <= 0.0 { 0.0 } else { -x * x.log2() };
    for k in 0..s.len() {
        if time[k] == period || time[k] == 0.0 {
            assert!((s[k] - (h(p[k]) + h(1.0 - p[k]))).abs() < 1e-9);
        }
    }
}

#[test]
fn loop_figure_override_requires_all_flags() {
    let (code, _, _) = run(&["figure", "--figure", "4", "--b-plus", "4"]);
    assert_eq!(code, 2);
    let (code, out, stderr) = run(&[
        "figure",
        "--figure",
        "4",
        "--j",
        "-1",
        "--b-plus",
        "4",
        "--b-minus",
        "5.656854249492381",
        "--t-max",
        "1.5707963267948966",
        "--n",
        "3",
        "--m",
        "0",
        "--s",
        "2",
        "--p",
        "0.3",
        "--steps",
        "8",
    ]);
    assert_eq!(code, 0, "{stderr}");
    assert!(out.lines().any(|l| l.starts_with("override,plus,3,0,2,0.3,")));
}

#[test]
fn separability_figure_panels() {
    let t = figure_dataset(6, &opts()).unwrap();
    assert_eq!(text(&t, "panel").iter().filter(|p| *p == "a").count(), 4 * 2049);
    assert!(col(&t, "abs_f").iter().all(|x| x.is_finite() && *x >= 0.0));
}

#[test]
fn control_commands() {
    let (code, out, _) = run(&["loop", "--n", "2", "--m", "1", "--s", "2", "--sign", "1"]);
    assert_eq!(code, 0);
    let (_, rows) = parse(&out);
    assert_eq!(rows.len(), 1);
    assert_eq!(rows[0][5], "2.0");
    let dist: f64 = rows[0][10].parse().unwrap();
    assert!(dist < 1e-9);
    let (code, out, _) = run(&["swap"]);
    assert_eq!(code, 0);
    let (_, rows) = parse(&out);
    assert_eq!(rows.len(), 28);
    assert!(rows.iter().all(|r| r[10].parse::<f64>().unwrap() < 1e-9));
}

#[test]
fn periodicity_roots_command() {
    let (code, out, _) = run(&["periodicity", "--roots", "--j", "0.25", "--r", "1", "--phi", "0"]);
    assert_eq!(code, 0);
    let (_, rows) = parse(&out);
    let roots: Vec<f64> = rows.iter().map(|r| r[1].parse().unwrap()).collect();
    let want: Vec<f64> = (0..5).map(|k| 2.0 * std::f64::consts::PI * k as f64).collect();
    assert_eq!(roots.len(), want.len());
    for (a, b) in roots.iter().zip(want) {
        assert!((a - b).abs() < 1e-9);
    }
}
