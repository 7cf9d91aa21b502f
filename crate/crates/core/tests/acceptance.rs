//! Acceptance criteria. Each test prints one `[PASS]` / `[FAIL]` line; run with
//! `cargo test -p seidel-core --release --test acceptance -- --nocapture --test-threads=1`.

mod common;

use std::time::{Duration, Instant};

use seidel_core::search::{scan_stream, ScanConfig};
use seidel_core::tol::ENERGY_TOL;
use seidel_core::{
    certify_theorem1, certify_theorem2, charpoly_exact, check_cospectral, check_equienergetic,
    complement, d_m, d_m_star, graph_from_graph6, graph_to_graph6, integer_root_multiplicity,
    lemma1_spectrum, lemma2_spectrum, seidel_energy, seidel_matrix, seidel_spectrum, Graph,
};

fn verdict(id: u32, name: &str, failures: &[String], elapsed: Duration) {
    let status = if failures.is_empty() { "PASS" } else { "FAIL" };
    println!("[{status}] criterion {id:>2}: {name} ({:.2?})", elapsed);
    for f in failures.iter().take(10) {
        println!("         {f}");
    }
    assert!(failures.is_empty(), "criterion {id} failed: {failures:?}");
}

macro_rules! check {
    ($failures:ident, $cond:expr, $($msg:tt)+) => {
        let ok = $cond;
        if !ok {
            $failures.push(format!($($msg)+));
        }
    };
}

#[test]
fn criterion_01_complete_graph_baseline() {
    let start = Instant::now();
    let mut failures = Vec::new();
    for n in 2..=12usize {
        let g = Graph::complete(n).unwrap();
        let s = seidel_spectrum(&g).unwrap();
        let mut expected = vec![1.0; n - 1];
        expected.push(1.0 - n as f64);
        let numeric_ok = s
            .values
            .iter()
            .zip(&expected)
            .all(|(a, b)| (a - b).abs() <= 1e-9);
        check!(failures, numeric_ok, "K_{n}: spectrum {s}");
        check!(
            failures,
            s.to_string() == format!("{{1^{}, {}^1}}", n - 1, 1 - n as i64),
            "K_{n}: grouped {s}"
        );
        let p = charpoly_exact(&seidel_matrix(&g).unwrap());
        let m1 = integer_root_multiplicity(&p, 1);
        let m2 = integer_root_multiplicity(&p, 1 - n as i64);
        check!(
            failures,
            m1 == n - 1 && m2 == 1,
            "K_{n}: exact multiplicities {m1}, {m2}"
        );
        let e = seidel_energy(&g).unwrap();
        check!(
            failures,
            (e - (2 * n - 2) as f64).abs() <= 1e-9,
            "K_{n}: SE = {e}"
        );
    }
    let elapsed = start.elapsed();
    check!(
        failures,
        elapsed < Duration::from_secs(1),
        "runtime {elapsed:?} >= 1 s"
    );
    verdict(
        1,
        "K_n spectrum, exact multiplicities and SE(K_n) = 2n-2 for n = 2..12",
        &failures,
        elapsed,
    );
}

#[test]
fn criterion_02_lemma_equivalence_on_catalog() {
    let start = Instant::now();
    let mut failures = Vec::new();
    let mut checked = 0;
    let mut coincident = 0;
    for g in common::catalog() {
        let n = g.n();
        let sigma = seidel_spectrum(&g).unwrap();
        let base = charpoly_exact(&seidel_matrix(&g).unwrap());
        let code = graph_to_graph6(&g).unwrap();
        for m in [2usize, 3] {
            let a = d_m(&g, m).unwrap();
            let b = d_m_star(&g, m).unwrap();
            for (graph, closed, pad, sigma_on_pad) in [
                (&a, lemma1_spectrum(&sigma, m, n).unwrap(), -1i64, -1i64),
                (&b, lemma2_spectrum(&sigma, m, n).unwrap(), 1, 1),
            ] {
                let numeric = seidel_spectrum(graph).unwrap();
                let predicted = closed.values();
                let agree = numeric.values.len() == predicted.len()
                    && numeric
                        .values
                        .iter()
                        .zip(&predicted)
                        .all(|(x, y)| (x - y).abs() <= 1e-8);
                check!(
                    failures,
                    agree,
                    "{code} m={m}: {numeric} vs {}",
                    closed.to_spectrum()
                );

                // padding eigenvalue: mn - n copies, plus one per σ_i mapped onto it
                let exact =
                    integer_root_multiplicity(&charpoly_exact(&seidel_matrix(graph).unwrap()), pad);
                let extra = integer_root_multiplicity(&base, sigma_on_pad);
                coincident += usize::from(extra > 0);
                check!(
                    failures,
                    exact == m * n - n + extra && exact >= m * n - n,
                    "{code} m={m}: multiplicity of {pad} is {exact}, expected {} + {extra}",
                    m * n - n
                );
                checked += 1;
            }
        }
    }
    check!(failures, checked == 208 * 4, "checked {checked} instances");
    println!(
        "         {checked} instances, {coincident} with a mapped eigenvalue on the padding value"
    );
    verdict(
        2,
        "closed forms of D_m / D_m* on all graphs with n <= 6, m in {2,3}",
        &failures,
        start.elapsed(),
    );
}

#[test]
fn criterion_03_theorem1_positive_instance() {
    let start = Instant::now();
    let mut failures = Vec::new();
    let k2 = Graph::complete(2).unwrap();
    for m in 2..=5usize {
        let c = certify_theorem1(&k2, m).unwrap();
        let target = (4 * m - 2) as f64;
        check!(
            failures,
            (c.energy_a - target).abs() <= 1e-8,
            "m={m}: SE(D_m) = {}",
            c.energy_a
        );
        check!(
            failures,
            (c.energy_b - target).abs() <= 1e-8,
            "m={m}: SE(D_m*) = {}",
            c.energy_b
        );
        check!(failures, c.equienergetic, "m={m}: not equienergetic");
        check!(failures, !c.cospectral, "m={m}: cospectral");
        check!(
            failures,
            c.closed_form_agrees,
            "m={m}: closed form disagrees"
        );
        check!(failures, !c.is_violation(), "m={m}: {:?}", c.violations);
    }
    verdict(
        3,
        "K_2, m = 2..5: SE = 4m-2 on both sides, non-cospectral",
        &failures,
        start.elapsed(),
    );
}

#[test]
fn criterion_04_theorem1_refutation_direction() {
    let start = Instant::now();
    let mut failures = Vec::new();
    let c = certify_theorem1(&Graph::complete(3).unwrap(), 2).unwrap();
    check!(
        failures,
        (c.energy_a - 12.0).abs() <= 1e-8,
        "SE(D_2(K_3)) = {}",
        c.energy_a
    );
    check!(
        failures,
        (c.energy_b - 10.0).abs() <= 1e-8,
        "SE(D_2*(K_3)) = {}",
        c.energy_b
    );
    check!(
        failures,
        (c.energy_delta - 2.0).abs() <= 1e-8,
        "delta = {}",
        c.energy_delta
    );
    check!(
        failures,
        c.hypothesis.bound_met && !c.hypothesis.balanced,
        "hypothesis {:?}",
        c.hypothesis
    );
    check!(failures, !c.equienergetic, "reported equienergetic");
    verdict(
        4,
        "K_3, m = 2: energies 12 and 10",
        &failures,
        start.elapsed(),
    );
}

#[test]
fn criterion_05_theorem2_instances() {
    let start = Instant::now();
    let mut failures = Vec::new();
    let c = certify_theorem2(&Graph::complete(2).unwrap(), 2).unwrap();
    check!(
        failures,
        c.spectrum_a.len() == 8 && c.spectrum_b.len() == 8,
        "orders"
    );
    check!(
        failures,
        (c.energy_a - 18.0).abs() <= 1e-8,
        "K_2: SE_a = {}",
        c.energy_a
    );
    check!(
        failures,
        (c.energy_b - 18.0).abs() <= 1e-8,
        "K_2: SE_b = {}",
        c.energy_b
    );
    check!(failures, !c.cospectral, "K_2: cospectral");

    // stated values for K_3, m = 2
    let c = certify_theorem2(&Graph::complete(3).unwrap(), 2).unwrap();
    check!(
        failures,
        (c.energy_a - 38.0).abs() <= 1e-8,
        "K_3: SE(D_2*(D_2(K_3))) = {}, stated 38",
        c.energy_a
    );
    check!(
        failures,
        (c.energy_b - 30.0).abs() <= 1e-8,
        "K_3: SE(D_2(D_2*(K_3))) = {}, stated 30",
        c.energy_b
    );
    verdict(
        5,
        "theorem-2 compositions: K_2 (18 = 18), K_3 (38 vs 30)",
        &failures,
        start.elapsed(),
    );
}

#[test]
fn criterion_06_sign_ledger() {
    let start = Instant::now();
    let mut failures = Vec::new();
    let mut pairs = 0;
    for power in [1i32, 2] {
        for m in 2..=11u32 {
            let m = f64::from(m);
            let shift = (m - 1.0).powi(power);
            let scale = m.powi(power);
            let bound = ((m - 1.0) / m).powi(power);
            for k in 0..500 {
                let mag = bound + f64::from(k) * 0.1;
                for sigma in [mag, -mag] {
                    let lhs = (scale * sigma + shift).abs() - (scale * sigma - shift).abs();
                    let rhs = 2.0 * shift * sigma.signum();
                    check!(
                        failures,
                        (lhs - rhs).abs() <= 1e-12 * rhs.abs(),
                        "power {power} m={m} σ={sigma}: {lhs} vs {rhs}"
                    );
                }
            }
            pairs += 1000;
        }
    }
    check!(failures, pairs == 20_000, "pairs {pairs}");
    let elapsed = start.elapsed();
    check!(
        failures,
        elapsed < Duration::from_secs(1),
        "runtime {elapsed:?} >= 1 s"
    );
    verdict(
        6,
        "sign ledger on 10,000 (σ, m) pairs per theorem",
        &failures,
        elapsed,
    );
}

#[test]
fn criterion_07_global_invariants() {
    let start = Instant::now();
    let mut failures = Vec::new();
    let mut rng = common::rng(7);
    for i in 0..500usize {
        let n = 1 + i % 20;
        let p = (i % 9) as f64 / 8.0;
        let g = common::random_graph(&mut rng, n, p);
        let s = seidel_spectrum(&g).unwrap();
        let nf = n as f64;
        check!(
            failures,
            s.sum().abs() <= 1e-9 * nf,
            "graph {i}: trace {}",
            s.sum()
        );
        check!(
            failures,
            (s.sum_of_squares() - nf * (nf - 1.0)).abs() <= 1e-8 * nf * nf,
            "graph {i}: square sum {}",
            s.sum_of_squares()
        );
        let ec = seidel_energy(&complement(&g).unwrap()).unwrap();
        check!(
            failures,
            (s.energy() - ec).abs() <= 1e-8,
            "graph {i}: SE {} vs {ec}",
            s.energy()
        );
    }
    verdict(
        7,
        "trace, Frobenius and complement energy on 500 random graphs",
        &failures,
        start.elapsed(),
    );
}

#[test]
fn criterion_08_small_equienergetic_pair() {
    let start = Instant::now();
    let mut failures = Vec::new();
    let k3 = Graph::complete(3).unwrap();
    let p3 = Graph::path(3).unwrap();
    let (eq, delta) = check_equienergetic(&k3, &p3, ENERGY_TOL).unwrap();
    check!(failures, eq, "not equienergetic, delta {delta}");
    for (name, g) in [("K_3", &k3), ("P_3", &p3)] {
        let e = seidel_energy(g).unwrap();
        check!(failures, (e - 4.0).abs() <= 1e-9, "SE({name}) = {e}");
    }
    check!(
        failures,
        !check_cospectral(&k3, &p3, 1e-9).unwrap(),
        "cospectral"
    );
    verdict(
        8,
        "K_3 and P_3 equienergetic (SE = 4), non-cospectral",
        &failures,
        start.elapsed(),
    );
}

#[test]
fn criterion_09_search_determinism_and_oracle() {
    let start = Instant::now();
    let mut failures = Vec::new();
    let lines = common::catalog_lines();
    let mut config = ScanConfig::new(1, 2);
    config.exact_verify = true;
    let serial = scan_stream(&lines, &config).unwrap();
    config.parallelism = 4;
    let parallel = scan_stream(&lines, &config).unwrap();
    check!(
        failures,
        serial.to_json().unwrap() == parallel.to_json().unwrap(),
        "serial and parallel JSON differ"
    );

    let found: Vec<usize> = serial
        .certificates
        .iter()
        .filter(|c| c.certificate.hypothesis.satisfied)
        .map(|c| c.line)
        .collect();
    let brute: Vec<usize> = lines
        .iter()
        .enumerate()
        .filter(|(_, l)| {
            let ev = common::oracle_eigenvalues(&graph_from_graph6(l).unwrap());
            let pos = ev.iter().filter(|&&x| x > 1e-7).count();
            let neg = ev.iter().filter(|&&x| x < -1e-7).count();
            ev.iter().all(|x| x.abs() >= 0.5 - 1e-7) && pos == neg && pos + neg == ev.len()
        })
        .map(|(i, _)| i + 1)
        .collect();
    check!(
        failures,
        found == brute,
        "scan found {found:?}, brute force {brute:?}"
    );
    check!(
        failures,
        serial.totals.scanned == 208,
        "scanned {}",
        serial.totals.scanned
    );
    check!(
        failures,
        serial.totals.accounted() == serial.totals.scanned,
        "accounting {:?}",
        serial.totals
    );
    check!(
        failures,
        !serial.has_violations(),
        "violations {:?}",
        serial.totals
    );
    println!(
        "         {} hypothesis-satisfying graphs among 208",
        brute.len()
    );
    verdict(
        9,
        "catalog scan: serial == parallel JSON, oracle-equivalent hypothesis set",
        &failures,
        start.elapsed(),
    );
}

#[test]
fn criterion_10_graph6_codec() {
    let start = Instant::now();
    let mut failures = Vec::new();
    let mut rng = common::rng(10);
    for i in 0..10_000usize {
        let n = 1 + i % 62;
        let p = (i % 11) as f64 / 10.0;
        let g = common::random_graph(&mut rng, n, p);
        let s = graph_to_graph6(&g).unwrap();
        check!(
            failures,
            graph_from_graph6(&s).as_ref() == Ok(&g),
            "round trip failed for {s}"
        );
    }
    check!(
        failures,
        graph_from_graph6("@").unwrap() == Graph::empty(1).unwrap(),
        "@ -> K_1"
    );
    check!(
        failures,
        graph_from_graph6("C~").unwrap() == Graph::complete(4).unwrap(),
        "C~ -> K_4"
    );
    check!(
        failures,
        graph_to_graph6(&Graph::empty(1).unwrap()).unwrap() == "@",
        "K_1 -> @"
    );
    check!(
        failures,
        graph_to_graph6(&Graph::complete(4).unwrap()).unwrap() == "C~",
        "K_4 -> C~"
    );
    verdict(
        10,
        "graph6 round trip on 10,000 random graphs plus fixed vectors",
        &failures,
        start.elapsed(),
    );
}
