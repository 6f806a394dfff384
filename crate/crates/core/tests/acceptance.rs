//! Acceptance criteria. Each test prints one `[PASS]` / `[FAIL]` line and then
//! asserts, so `cargo test --test acceptance -- --nocapture` doubles as a report.

use std::f64::consts::{FRAC_PI_2, PI, TAU};
use std::time::{Duration, Instant};

use cpgraph::entanglement::*;
use cpgraph::graph::{GraphStateSpec, QubitInit, WeightedGraph};
use cpgraph::graphstate::{build_graph_state, prepare_initial};
use cpgraph::measurement::{estimate_entanglement, DEFAULT_SHOTS};
use cpgraph::sweep::{run_sweep, SweepKind, SweepSpec};
use cpgraph::Axis;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const IDENTITY_TOL: f64 = 1e-12;
const ROUTE_TOL: f64 = 1e-10;

fn verdict(id: &str, title: &str, failures: &[String], elapsed: Duration, budget: Duration) {
    let mut failures = failures.to_vec();
    if elapsed > budget {
        failures.push(format!("runtime {elapsed:?} exceeds {budget:?}"));
    }
    let status = if failures.is_empty() { "PASS" } else { "FAIL" };
    println!("[{status}] {id} {title} ({elapsed:.2?})");
    for f in failures.iter().take(10) {
        println!("       - {f}");
    }
    assert!(failures.is_empty(), "{id} failed: {failures:?}");
}

fn check(failures: &mut Vec<String>, ok: bool, msg: impl FnOnce() -> String) {
    if !ok {
        failures.push(msg());
    }
}

fn maxent() -> GraphStateSpec {
    GraphStateSpec::two_qubit(FRAC_PI_2, FRAC_PI_2, PI).unwrap()
}

fn random_specs(count: usize, seed: u64) -> Vec<GraphStateSpec> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(2..=8);
            GraphStateSpec::random(&mut rng, n, 0.5).unwrap()
        })
        .collect()
}

fn median(mut xs: Vec<f64>) -> f64 {
    xs.sort_by(f64::total_cmp);
    let n = xs.len();
    if n % 2 == 1 {
        xs[n / 2]
    } else {
        0.5 * (xs[n / 2 - 1] + xs[n / 2])
    }
}

#[test]
fn ac1_maximal_two_qubit_entanglement() {
    let start = Instant::now();
    let mut f = Vec::new();
    let spec = maxent();
    let state = build_graph_state(&spec).unwrap();
    let closed = entanglement_closed_form(&spec, 0).unwrap();
    let exact = entanglement_from_bloch(&state.bloch_vector(0).unwrap());
    let oracle = entanglement_oracle_schmidt(&state, 0).unwrap();
    for (name, v) in [("closed", closed), ("exact", exact), ("oracle", oracle)] {
        check(&mut f, (v - 0.5).abs() <= IDENTITY_TOL, || {
            format!("{name} = {v}")
        });
    }
    let shots = estimate_entanglement(&spec, 0, DEFAULT_SHOTS, 1, 0.0)
        .unwrap()
        .e_estimate;
    check(&mut f, (0.47..=0.5).contains(&shots), || {
        format!("shot estimate {shots}")
    });
    verdict(
        "AC1",
        "maximal two-qubit entanglement = 1/2",
        &f,
        start.elapsed(),
        Duration::from_secs(1),
    );
}

#[test]
fn ac2_phi_line() {
    let start = Instant::now();
    let mut f = Vec::new();
    let table = run_sweep(&SweepSpec::new(SweepKind::PhiLine, 21)).unwrap();
    check(&mut f, table.rows.len() == 21, || {
        format!("{} rows", table.rows.len())
    });
    for r in &table.rows {
        let phi = r.coords[0];
        let analytic = 0.5 * (1.0 - (phi / 2.0).cos().abs());
        check(
            &mut f,
            (r.e_closed - analytic).abs() <= IDENTITY_TOL,
            || format!("phi {phi}: closed {} vs {analytic}", r.e_closed),
        );
        check(
            &mut f,
            (r.e_closed - two_qubit_e_phi(phi)).abs() <= IDENTITY_TOL,
            || format!("phi {phi}: two_qubit_e_phi disagrees"),
        );
        check(&mut f, (r.e_closed - r.e_exact).abs() <= ROUTE_TOL, || {
            format!("phi {phi}: closed {} vs exact {}", r.e_closed, r.e_exact)
        });
    }
    let first = &table.rows[0];
    let mid = &table.rows[10];
    let last = &table.rows[20];
    check(
        &mut f,
        first.coords[0] == 0.0 && last.coords[0] == TAU && mid.coords[0] == PI,
        || "endpoints/midpoint not exact".into(),
    );
    check(
        &mut f,
        first.e_closed.abs() <= IDENTITY_TOL && last.e_closed.abs() <= IDENTITY_TOL,
        || format!("E at 0 / 2pi = {} / {}", first.e_closed, last.e_closed),
    );
    check(&mut f, (mid.e_closed - 0.5).abs() <= IDENTITY_TOL, || {
        format!("E at pi = {}", mid.e_closed)
    });
    verdict(
        "AC2",
        "phi line ½(1−|cos φ/2|), 21 points",
        &f,
        start.elapsed(),
        Duration::from_secs(1),
    );
}

#[test]
fn ac3_theta_surface() {
    let start = Instant::now();
    let mut f = Vec::new();
    let table = run_sweep(&SweepSpec::new(SweepKind::ThetaGrid, 11)).unwrap();
    check(&mut f, table.rows.len() == 121, || {
        format!("{} rows", table.rows.len())
    });
    let mut saw_center = false;
    for r in &table.rows {
        let (t0, t1) = (r.coords[0], r.coords[1]);
        check(&mut f, (r.e_closed - r.e_exact).abs() <= ROUTE_TOL, || {
            format!("({t0}, {t1}): closed {} vs exact {}", r.e_closed, r.e_exact)
        });
        check(
            &mut f,
            (r.e_closed - two_qubit_e_theta(t0, t1).unwrap()).abs() <= IDENTITY_TOL,
            || format!("({t0}, {t1}): two-qubit theta formula disagrees"),
        );
        let edge = |t: f64| t == 0.0 || t == PI;
        if edge(t0) || edge(t1) {
            check(&mut f, r.e_closed.abs() <= IDENTITY_TOL, || {
                format!("({t0}, {t1}): E = {}", r.e_closed)
            });
        }
        if t0 == FRAC_PI_2 && t1 == FRAC_PI_2 {
            saw_center = true;
            check(&mut f, (r.e_closed - 0.5).abs() <= IDENTITY_TOL, || {
                format!("center E = {}", r.e_closed)
            });
        }
    }
    check(&mut f, saw_center, || "grid misses (pi/2, pi/2)".into());
    verdict(
        "AC3",
        "theta surface on 11x11 grid",
        &f,
        start.elapsed(),
        Duration::from_secs(2),
    );
}

#[test]
fn ac4_general_formula_cross_validation() {
    let start = Instant::now();
    let mut f = Vec::new();
    let mut checked = 0;
    for (s, spec) in random_specs(200, 4).iter().enumerate() {
        let state = build_graph_state(spec).unwrap();
        for l in 0..spec.n_qubits() {
            let closed = entanglement_closed_form(spec, l).unwrap();
            let oracle = entanglement_oracle_schmidt(&state, l).unwrap();
            let exact = entanglement_from_bloch(&state.bloch_vector(l).unwrap());
            check(&mut f, (closed - oracle).abs() < ROUTE_TOL, || {
                format!("spec {s} qubit {l}: closed {closed} oracle {oracle}")
            });
            check(&mut f, (closed - exact).abs() < ROUTE_TOL, || {
                format!("spec {s} qubit {l}: closed {closed} exact {exact}")
            });
            check(&mut f, (0.0..=0.5).contains(&closed), || {
                format!("spec {s} qubit {l}: E = {closed} out of range")
            });
            checked += 1;
        }
    }
    println!("       {checked} qubit evaluations over 200 specs");
    verdict(
        "AC4",
        "closed form vs statevector and Schmidt routes",
        &f,
        start.elapsed(),
        Duration::from_secs(30),
    );
}

#[test]
fn ac5_mean_spin_components() {
    let start = Instant::now();
    let mut f = Vec::new();
    for (s, spec) in random_specs(200, 4).iter().enumerate() {
        let state = build_graph_state(spec).unwrap();
        for l in 0..spec.n_qubits() {
            let formula = [
                mean_sigma_x(spec, l).unwrap(),
                mean_sigma_y(spec, l).unwrap(),
                mean_sigma_z(spec, l).unwrap(),
            ];
            for (axis, v) in [Axis::X, Axis::Y, Axis::Z].into_iter().zip(formula) {
                let sim = state.expectation_pauli(l, axis).unwrap();
                check(&mut f, (v - sim).abs() < ROUTE_TOL, || {
                    format!("spec {s} qubit {l} {axis:?}: {v} vs {sim}")
                });
            }
            let cos = spec.init(l).unwrap().theta().cos();
            check(&mut f, formula[2] == cos, || {
                format!("spec {s} qubit {l}: <sz> {} != cos theta {cos}", formula[2])
            });
        }
    }
    verdict(
        "AC5",
        "mean-spin component formulas",
        &f,
        start.elapsed(),
        Duration::from_secs(30),
    );
}

#[test]
fn ac6_degree_dependence() {
    let start = Instant::now();
    let mut f = Vec::new();
    let (theta, phi) = (FRAC_PI_2, FRAC_PI_2);
    let path = GraphStateSpec::uniform(WeightedGraph::path(3, phi).unwrap(), 0.0, theta).unwrap();
    let cycle = GraphStateSpec::uniform(WeightedGraph::cycle(4, phi).unwrap(), 0.0, theta).unwrap();
    let e_path = entanglement_closed_form(&path, 1).unwrap();
    let e_cycle = entanglement_closed_form(&cycle, 0).unwrap();
    check(&mut f, (e_path - e_cycle).abs() <= IDENTITY_TOL, || {
        format!("path {e_path} vs cycle {e_cycle}")
    });
    let uniform = entanglement_uniform(theta, phi, 2).unwrap();
    check(&mut f, uniform == 0.25, || {
        format!("uniform(pi/2, pi/2, 2) = {uniform}")
    });
    check(&mut f, (e_path - uniform).abs() <= IDENTITY_TOL, || {
        format!("path {e_path} vs uniform {uniform}")
    });
    let sim = entanglement_from_bloch(&build_graph_state(&cycle).unwrap().bloch_vector(0).unwrap());
    check(&mut f, (sim - uniform).abs() <= ROUTE_TOL, || {
        format!("simulated cycle {sim}")
    });
    verdict(
        "AC6",
        "degree-only dependence for uniform parameters",
        &f,
        start.elapsed(),
        Duration::from_secs(1),
    );
}

#[test]
fn ac7_invariance_suite() {
    const INSTANCES: usize = 60;
    let start = Instant::now();
    let mut f = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let specs = random_specs(INSTANCES, 70);

    // alpha invariance
    for (s, spec) in specs.iter().enumerate() {
        let inits = spec
            .inits()
            .iter()
            .map(|q| QubitInit::new(rng.gen_range(0.0..TAU), q.theta()).unwrap())
            .collect();
        let shifted = GraphStateSpec::new(spec.graph().clone(), inits).unwrap();
        let a = build_graph_state(spec).unwrap();
        let b = build_graph_state(&shifted).unwrap();
        for l in 0..spec.n_qubits() {
            let (ca, cb) = (
                entanglement_closed_form(spec, l).unwrap(),
                entanglement_closed_form(&shifted, l).unwrap(),
            );
            check(&mut f, ca == cb, || {
                format!("alpha: spec {s} qubit {l}: closed form moved {ca} -> {cb}")
            });
            let ea = entanglement_from_bloch(&a.bloch_vector(l).unwrap());
            let eb = entanglement_from_bloch(&b.bloch_vector(l).unwrap());
            check(&mut f, (ea - eb).abs() < ROUTE_TOL, || {
                format!("alpha: spec {s} qubit {l}: simulated {ea} -> {eb}")
            });
        }
    }

    // theta reflection on random subsets of the closed neighborhood
    for (s, spec) in specs.iter().enumerate() {
        let l = rng.gen_range(0..spec.n_qubits());
        let mut closed_nbhd = spec.graph().neighborhood(l).unwrap();
        closed_nbhd.insert(l);
        let inits = spec
            .inits()
            .iter()
            .enumerate()
            .map(|(m, q)| {
                if closed_nbhd.contains(&m) && rng.gen_bool(0.5) {
                    QubitInit::new(q.alpha(), PI - q.theta()).unwrap()
                } else {
                    *q
                }
            })
            .collect();
        let reflected = GraphStateSpec::new(spec.graph().clone(), inits).unwrap();
        let (a, b) = (
            entanglement_closed_form(spec, l).unwrap(),
            entanglement_closed_form(&reflected, l).unwrap(),
        );
        check(&mut f, (a - b).abs() < IDENTITY_TOL, || {
            format!("reflection: spec {s} qubit {l}: {a} vs {b}")
        });
    }

    // locality: redraw everything outside the closed neighborhood
    for (s, spec) in specs.iter().enumerate() {
        let n = spec.n_qubits();
        let l = rng.gen_range(0..n);
        let nbrs = spec.graph().neighborhood(l).unwrap();
        let inits = spec
            .inits()
            .iter()
            .enumerate()
            .map(|(m, q)| {
                if m == l || nbrs.contains(&m) {
                    *q
                } else {
                    QubitInit::new(rng.gen_range(0.0..TAU), rng.gen_range(0.0..=PI)).unwrap()
                }
            })
            .collect();
        let mut edges: Vec<_> = spec
            .graph()
            .incident(l)
            .unwrap()
            .iter()
            .map(|&(k, phi)| (l, k, phi))
            .collect();
        for i in 0..n {
            for j in i + 1..n {
                if i != l && j != l && rng.gen_bool(0.5) {
                    edges.push((i, j, rng.gen_range(0.0..TAU)));
                }
            }
        }
        let modified = GraphStateSpec::new(WeightedGraph::new(n, edges).unwrap(), inits).unwrap();
        let a = entanglement_closed_form(spec, l).unwrap();
        let b = entanglement_closed_form(&modified, l).unwrap();
        check(&mut f, (a - b).abs() < IDENTITY_TOL, || {
            format!("locality: spec {s} qubit {l}: {a} vs {b}")
        });
        let sim = entanglement_from_bloch(
            &build_graph_state(&modified)
                .unwrap()
                .bloch_vector(l)
                .unwrap(),
        );
        check(&mut f, (sim - b).abs() < ROUTE_TOL, || {
            format!("locality: spec {s} qubit {l}: simulated {sim} vs {b}")
        });
    }

    // edge order: two random permutations
    for (s, spec) in specs.iter().enumerate() {
        let mut states = Vec::new();
        for _ in 0..2 {
            let mut edges = spec.graph().edges().to_vec();
            edges.shuffle(&mut rng);
            let mut state = prepare_initial(spec).unwrap();
            for e in &edges {
                state.apply_cp(e.i, e.j, e.phi).unwrap();
            }
            states.push(state);
        }
        let worst = states[0]
            .amplitudes()
            .iter()
            .zip(states[1].amplitudes())
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max);
        check(&mut f, worst < IDENTITY_TOL, || {
            format!("edge order: spec {s}: max amplitude gap {worst}")
        });
    }

    println!("       {INSTANCES} instances per invariant");
    verdict(
        "AC7",
        "alpha / reflection / locality / edge-order invariance",
        &f,
        start.elapsed(),
        Duration::from_secs(60),
    );
}

#[test]
fn ac8_shot_estimator_statistics() {
    let start = Instant::now();
    let mut f = Vec::new();
    let spec = maxent();
    let levels = [100u64, 1_000, 10_000, 100_000];
    let medians: Vec<f64> = levels
        .iter()
        .map(|&shots| {
            median(
                (0..20)
                    .map(|seed| {
                        (estimate_entanglement(&spec, 0, shots, seed, 0.0)
                            .unwrap()
                            .e_estimate
                            - 0.5)
                            .abs()
                    })
                    .collect(),
            )
        })
        .collect();
    println!("       median |e_shots - 0.5| per shots {levels:?}: {medians:?}");
    for (w, pair) in medians.windows(2).zip(levels.windows(2)) {
        check(&mut f, w[1] <= w[0], || {
            format!(
                "median rose from {} ({} shots) to {} ({} shots)",
                w[0], pair[0], w[1], pair[1]
            )
        });
    }
    check(&mut f, medians[3] < 0.01, || {
        format!("median at 1e5 shots = {}", medians[3])
    });
    verdict(
        "AC8",
        "shot estimator converges at flip = 0",
        &f,
        start.elapsed(),
        Duration::from_secs(60),
    );
}

#[test]
fn ac9_noisy_phi_sweep_tracks_analytic_curve() {
    let start = Instant::now();
    let mut f = Vec::new();
    let sweep = SweepSpec::new(SweepKind::PhiLine, 21).with_shots(DEFAULT_SHOTS, 2023, 0.03);
    let table = run_sweep(&sweep).unwrap();
    let mut worst: f64 = 0.0;
    for r in &table.rows {
        let phi = r.coords[0];
        let analytic = two_qubit_e_phi(phi);
        let shot = r.measurement.as_ref().unwrap().e_estimate;
        worst = worst.max((shot - analytic).abs());
        check(&mut f, (shot - analytic).abs() <= 0.05, || {
            format!("phi {phi}: shots {shot} vs analytic {analytic}")
        });
    }
    println!("       worst deviation {worst:.4} at flip 0.03, {DEFAULT_SHOTS} shots/basis");
    verdict(
        "AC9",
        "noisy phi sweep within 0.05 of analytic curve",
        &f,
        start.elapsed(),
        Duration::from_secs(60),
    );
}
