// SPDX-License-Identifier: Apache-2.0

//! Acceptance criteria, one PASS/FAIL line each. Exits nonzero if any fails.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use sombor::analysis::{
    cubic10_fixtures, energy_classes, integer_energy_search, match_corpus, permanent_report, CorpusReport,
    DEFAULT_CLASS_TOL, DEFAULT_SCAN_TOL, TABLE_ENERGY_TOL,
};
use sombor::charpoly::{
    charpoly_complete, charpoly_complete_bipartite, charpoly_cycle, charpoly_generic, charpoly_path, charpoly_star,
    coefficient_envelope, coefficients_agree,
};
use sombor::combinat::{canonical_cert, generate_all, generate_k_regular, ryser_permanent};
use sombor::sombor::sombor_matrix;
use sombor::spectra::{eigenvalues_symmetric, koolen_moulton_bound, mcclelland_bound, sombor_energy, DEFAULT_TOL};
use sombor::{disjoint_union, Graph, Poly, QSqrt2, SomborPoly};
use sombor_validation::{Outcome, Suite};

fn corpus() -> (Vec<Graph>, CorpusReport, Duration) {
    let start = Instant::now();
    let graphs = generate_k_regular(10, 3, false).expect("generation").graphs;
    let report = match_corpus(&graphs, &cubic10_fixtures()).expect("matching");
    (graphs, report, start.elapsed())
}

fn random_graph(rng: &mut StdRng, n: usize, p: f64) -> Graph {
    let edges: Vec<(usize, usize)> =
        (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).filter(|_| rng.gen_bool(p)).collect();
    Graph::from_edges(n, edges).unwrap()
}

fn random_graph_sized(rng: &mut StdRng, max_n: usize) -> Graph {
    let n = rng.gen_range(1..=max_n);
    let p = rng.gen_range(0.05..=1.0);
    random_graph(rng, n, p)
}

fn forgotten(g: &Graph) -> u128 {
    g.degrees().iter().map(|&d| (d as u128).pow(3)).sum()
}

fn naive_permanent(a: &[Vec<u8>]) -> BigInt {
    fn go(a: &[Vec<u8>], row: usize, used: &mut [bool]) -> BigInt {
        if row == a.len() {
            return BigInt::from(1);
        }
        let mut total = BigInt::from(0);
        for c in 0..a.len() {
            if !used[c] && a[row][c] == 1 {
                used[c] = true;
                total += go(a, row + 1, used);
                used[c] = false;
            }
        }
        total
    }
    go(a, 0, &mut vec![false; a.len()])
}

fn energy(g: &Graph) -> f64 {
    sombor_energy(g).unwrap().energy
}

fn corpus_polynomials() -> Outcome {
    let (graphs, report, elapsed) = corpus();
    let inexact: Vec<String> = report
        .matches
        .iter()
        .filter(|m| !m.is_exact())
        .map(|m| {
            let deltas: Vec<String> = m
                .poly_delta
                .iter()
                .map(|d| format!("l^{} computed {} table {}", d.power, d.computed, d.fixture))
                .collect();
            format!("{} nearest [{}]", m.nearest, deltas.join(", "))
        })
        .collect();
    let reported = report.matches.iter().filter(|m| !m.is_exact()).all(|m| !m.poly_delta.is_empty());
    let passed = graphs.len() == 21 && report.exact_rows >= 19 && reported && elapsed < Duration::from_secs(60);
    Outcome::new(
        passed,
        format!(
            "{} graphs, {} exact rows, {:.2}s; non-exact: {}",
            graphs.len(),
            report.exact_rows,
            elapsed.as_secs_f64(),
            if inexact.is_empty() { "none".into() } else { inexact.join("; ") }
        ),
    )
}

fn corpus_energies() -> Outcome {
    let (_, report, _) = corpus();
    let off: Vec<String> = report
        .matches
        .iter()
        .filter(|m| m.energy_delta > TABLE_ENERGY_TOL)
        .map(|m| format!("{} {:.6} vs {:.3} (|d| {:.5})", m.nearest, m.energy, m.table_energy, m.energy_delta))
        .collect();
    let by_label = |l: &str| report.matches.iter().find(|m| m.nearest == l).map(|m| m.energy).unwrap_or(f64::NAN);
    let min = report.matches.iter().map(|m| m.energy).fold(f64::INFINITY, f64::min);
    let max = report.matches.iter().map(|m| m.energy).fold(f64::NEG_INFINITY, f64::max);
    let ordering = (by_label("G_21") - min).abs() < 1e-9
        && (by_label("G_12") - max).abs() < 1e-9
        && (by_label("G_17") - max).abs() < 1e-9;
    let extremes = ordering
        && (by_label("G_21") - 50.911).abs() <= TABLE_ENERGY_TOL
        && (by_label("G_12") - 67.882).abs() <= TABLE_ENERGY_TOL
        && (by_label("G_17") - 67.882).abs() <= TABLE_ENERGY_TOL;
    // informational only: does each table entry equal the computed energy cut to three decimals?
    let truncated =
        report.matches.iter().all(|m| ((m.energy * 1000.0).floor() / 1000.0 - m.table_energy).abs() < 1e-9);
    Outcome::new(
        off.is_empty() && extremes,
        format!(
            "{} of {} rows beyond {TABLE_ENERGY_TOL:e}{}{}; G_21 minimum and G_12/G_17 maximum: {ordering}, extremes within tolerance: {extremes}; table equals truncation of computed values: {truncated}",
            off.len(),
            report.matches.len(),
            if off.is_empty() { "" } else { ": " },
            off.join(", ")
        ),
    )
}

fn petersen() -> Outcome {
    let p = Graph::petersen();
    let poly = charpoly_generic(&sombor_matrix(&p)).poly;
    let lin = |r: i64| Poly::linear(QSqrt2::sqrt2_times(r));
    let expected = &(&lin(9) * &lin(-6).pow(4)) * &lin(3).pow(5);
    let poly_ok = poly == SomborPoly::Exact(expected);
    let report = sombor_energy(&p).unwrap();
    let exact_ok = report.exact_energy == Some(QSqrt2::sqrt2_times(48));
    let value_ok = (report.energy - 67.8822509939).abs() <= 1e-9;

    let (_, corpus, _) = corpus();
    let cert = canonical_cert(&p).unwrap();
    let hit = corpus.matches.iter().find(|m| m.cert == cert).map(|m| m.nearest.clone());
    let in_class = matches!(hit.as_deref(), Some("G_12" | "G_17"));
    let is_max = corpus.matches.iter().all(|m| m.energy <= report.energy + 1e-9);
    Outcome::new(
        poly_ok && exact_ok && value_ok && in_class && is_max,
        format!(
            "charpoly exact match: {poly_ok}; energy {:.10} = {}; cert is {}; corpus maximum: {is_max}",
            report.energy,
            report.exact_energy.map_or("?".into(), |e| e.to_string()),
            hit.unwrap_or_else(|| "absent".into())
        ),
    )
}

fn agrees_with_engine(closed: Poly<QSqrt2>, g: &Graph) -> bool {
    let m = sombor_matrix(g);
    let generic = charpoly_generic(&m).poly;
    let closed = SomborPoly::Exact(closed);
    if matches!(generic, SomborPoly::Exact(_)) {
        return generic == closed;
    }
    let envelope = coefficient_envelope(&eigenvalues_symmetric(&m, DEFAULT_TOL).unwrap());
    coefficients_agree(&generic, &closed, &envelope, 1e-8)
}

fn closed_forms() -> Outcome {
    let mut bad = Vec::new();
    let mut checked = 0;
    let mut check = |name: String, closed: Poly<QSqrt2>, g: Graph| {
        checked += 1;
        if !agrees_with_engine(closed, &g) {
            bad.push(name);
        }
    };
    for n in 1..=12 {
        if n >= 2 {
            check(format!("P_{n}"), charpoly_path(n).unwrap(), Graph::path(n).unwrap());
            check(format!("S_{n}"), charpoly_star(n).unwrap(), Graph::star(n).unwrap());
        }
        if n >= 3 {
            check(format!("C_{n}"), charpoly_cycle(n).unwrap(), Graph::cycle(n).unwrap());
        }
        check(format!("K_{n}"), charpoly_complete(n).unwrap(), Graph::complete(n).unwrap());
        for m in 1..=12 {
            check(format!("K_{m},{n}"), charpoly_complete_bipartite(m, n).unwrap(), Graph::complete_bipartite(m, n).unwrap());
        }
    }
    let base = charpoly_path(2).unwrap() == Poly::from_integers(&[-2, 0, 1])
        && charpoly_path(3).unwrap() == Poly::from_integers(&[0, -10, 0, 1])
        && charpoly_path(4).unwrap() == Poly::from_integers(&[25, 0, -18, 0, 1]);
    Outcome::new(
        bad.is_empty() && base,
        format!("{checked} family members compared, mismatches: {bad:?}; base cases exact: {base}"),
    )
}

fn equivalence_classes() -> Outcome {
    let (_, report, _) = corpus();
    let graphs: Vec<Graph> = report.matches.iter().map(|m| m.graph.clone()).collect();
    let classes = energy_classes(&graphs, DEFAULT_CLASS_TOL).unwrap();
    let found: BTreeSet<BTreeSet<String>> = classes
        .non_singleton()
        .map(|c| c.members.iter().map(|&i| report.matches[i].nearest.clone()).collect())
        .collect();
    let expected: BTreeSet<BTreeSet<String>> = [["G_1", "G_8"], ["G_12", "G_17"], ["G_16", "G_20"]]
        .iter()
        .map(|pair| pair.iter().map(|s| s.to_string()).collect())
        .collect();
    let evidence: Vec<String> = classes
        .non_singleton()
        .map(|c| format!("{:?}", c.evidence).to_lowercase())
        .collect();
    Outcome::new(
        found == expected && classes.unique_count() == 15,
        format!("non-singleton classes {found:?} ({}), {} unique", evidence.join("/"), classes.unique_count()),
    )
}

fn permanents() -> Outcome {
    let (_, report, _) = corpus();
    let fixtures = cubic10_fixtures();
    let rows = permanent_report(&report, &fixtures).unwrap();
    let want = [("G_1", 72), ("G_8", 72), ("G_16", 144), ("G_20", 180), ("G_7", 85), ("G_11", 85)];
    let got: Vec<String> = want
        .iter()
        .map(|(l, _)| {
            let p = rows.iter().find(|r| r.label == *l).map(|r| r.permanent.to_string());
            format!("{l}={}", p.unwrap_or_else(|| "?".into()))
        })
        .collect();
    let values_ok = want
        .iter()
        .all(|(l, v)| rows.iter().any(|r| r.label == *l && r.permanent == BigInt::from(*v)));

    let mut rng = StdRng::seed_from_u64(0x9e37);
    let mut disagreements = 0;
    for _ in 0..200 {
        let n = rng.gen_range(1..=7);
        let density = rng.gen_range(0.2..=1.0);
        let a: Vec<Vec<u8>> = (0..n).map(|_| (0..n).map(|_| u8::from(rng.gen_bool(density))).collect()).collect();
        if ryser_permanent(&a).unwrap() != naive_permanent(&a) {
            disagreements += 1;
        }
    }
    Outcome::new(
        values_ok && disagreements == 0,
        format!("{}; Ryser vs expansion disagreements on 200 matrices: {disagreements}", got.join(" ")),
    )
}

fn bounds() -> Outcome {
    let (graphs, _, _) = corpus();
    let mut rng = StdRng::seed_from_u64(0xb0b);
    let random: Vec<Graph> = (0..500).map(|_| random_graph_sized(&mut rng, 12)).collect();
    let mut worst_mc = f64::INFINITY;
    let mut worst_km = f64::INFINITY;
    for g in graphs.iter().chain(&random) {
        let e = energy(g);
        worst_mc = worst_mc.min(mcclelland_bound(g) - e);
        worst_km = worst_km.min(koolen_moulton_bound(g).value - e);
    }
    let cubic = &graphs[0];
    let mc = mcclelland_bound(cubic);
    let km = koolen_moulton_bound(cubic).value;
    let values_ok = (mc - 5400f64.sqrt()).abs() <= 1e-9 && (km - 71.055).abs() <= 5e-4;
    Outcome::new(
        worst_mc >= -1e-9 && worst_km >= -1e-9 && values_ok,
        format!(
            "min slack McClelland {worst_mc:.3e}, Koolen-Moulton {worst_km:.3e} over {} graphs; cubic n=10: {mc:.6} and {km:.6}",
            graphs.len() + random.len()
        ),
    )
}

fn spectral_identities() -> Outcome {
    let mut rng = StdRng::seed_from_u64(0x5eed);
    let mut graphs: Vec<Graph> = (0..500).map(|_| random_graph_sized(&mut rng, 12)).collect();
    for (n, k) in [(10, 3), (8, 3), (7, 4), (6, 2), (9, 4)] {
        graphs.extend(generate_k_regular(n, k, false).unwrap().graphs);
    }
    let (mut trace_bad, mut square_bad, mut coeff_bad, mut exact_count) = (0, 0, 0, 0);
    for g in &graphs {
        let m = sombor_matrix(g);
        let rho = eigenvalues_symmetric(&m, DEFAULT_TOL).unwrap();
        let two_f = 2.0 * forgotten(g) as f64;
        if rho.iter().sum::<f64>().abs() > 1e-8 {
            trace_bad += 1;
        }
        if (rho.iter().map(|x| x * x).sum::<f64>() - two_f).abs() > 1e-6 * two_f.max(1.0) {
            square_bad += 1;
        }
        let n = g.order();
        let f = forgotten(g) as i64;
        let ok = match charpoly_generic(&m).poly {
            SomborPoly::Exact(p) => {
                exact_count += 1;
                (n < 1 || p.coeff(n - 1) == QSqrt2::integer(0)) && (n < 2 || p.coeff(n - 2) == QSqrt2::integer(-f))
            }
            SomborPoly::Float(p) => {
                let scale = (f as f64).max(1.0);
                p.coeff(n - 1).abs() <= 1e-6 * scale && (n < 2 || (p.coeff(n - 2) + f as f64).abs() <= 1e-6 * scale)
            }
        };
        if !ok {
            coeff_bad += 1;
        }
    }
    Outcome::new(
        trace_bad + square_bad + coeff_bad == 0,
        format!(
            "{} graphs ({exact_count} exact mode): trace failures {trace_bad}, trace-of-square failures {square_bad}, coefficient failures {coeff_bad}",
            graphs.len()
        ),
    )
}

fn union_and_deletion() -> Outcome {
    let mut rng = StdRng::seed_from_u64(0x0d15);
    let mut union_bad = 0;
    for _ in 0..100 {
        let a = random_graph_sized(&mut rng, 8);
        let b = random_graph_sized(&mut rng, 8);
        let u = disjoint_union(&[a.clone(), b.clone()]);
        let (pa, pb) = (charpoly_generic(&sombor_matrix(&a)).poly, charpoly_generic(&sombor_matrix(&b)).poly);
        let product = pa.mul(&pb).unwrap_or_else(|_| SomborPoly::Float(&pa.to_float() * &pb.to_float()));
        let report = sombor_energy(&u).unwrap();
        let envelope = coefficient_envelope(&report.eigenvalues);
        let poly_ok = coefficients_agree(&charpoly_generic(&sombor_matrix(&u)).poly, &product, &envelope, 1e-8);
        if !poly_ok || (report.energy - energy(&a) - energy(&b)).abs() > 1e-9 {
            union_bad += 1;
        }
    }
    let mut worst: f64 = 0.0;
    for n in 3..=12 {
        let cycle = Graph::cycle(n).unwrap().delete_edge(0, n - 1).unwrap();
        worst = worst.max((energy(&cycle) - energy(&Graph::path(n).unwrap())).abs());
        let star = Graph::star(n).unwrap().delete_edge(0, 1).unwrap();
        worst = worst.max((energy(&star) - energy(&Graph::star(n - 1).unwrap())).abs());
    }
    for n in 2..=12 {
        let path = Graph::path(n).unwrap();
        for r in 1..n {
            let split = energy(&path.delete_edge(r - 1, r).unwrap());
            worst = worst.max((split - energy(&Graph::path(r).unwrap()) - energy(&Graph::path(n - r).unwrap())).abs());
        }
    }
    Outcome::new(
        union_bad == 0 && worst <= 1e-9,
        format!("union failures {union_bad} of 100; worst deletion-identity gap {worst:.2e}"),
    )
}

fn conjecture_scan() -> Outcome {
    let start = Instant::now();
    let mut family = Vec::new();
    for n in 1..=7 {
        family.extend(generate_all(n, false).unwrap().graphs);
    }
    let report = integer_energy_search(&family, DEFAULT_SCAN_TOL).unwrap();
    let elapsed = start.elapsed();
    let path = std::path::Path::new(env!("CARGO_TARGET_TMPDIR")).join("conjecture_scan_n7.txt");
    let mut text = format!(
        "graphs with at least one edge on n <= 7: {}\nedgeless skipped: {}\ntolerance: {:e}\nhits: {}\n",
        report.scanned,
        report.skipped_edgeless,
        report.tol,
        report.hits.len()
    );
    for h in &report.hits {
        text.push_str(&format!("{}\t{:.12}\t{}\t{:.3e}\t{:?}\n", h.graph6, h.energy, h.nearest_integer, h.gap, h.verdict));
    }
    let written = std::fs::write(&path, &text).is_ok();
    Outcome::new(
        written && elapsed < Duration::from_secs(600),
        format!(
            "scanned {} graphs in {:.2}s, {} within {:e} of an integer; report at {}",
            report.scanned,
            elapsed.as_secs_f64(),
            report.hits.len(),
            report.tol,
            path.display()
        ),
    )
}

fn main() {
    let mut suite = Suite::default();
    suite.run("1", "corpus polynomial reproduction", corpus_polynomials);
    suite.run("2", "corpus energy reproduction", corpus_energies);
    suite.run("3", "Petersen graph", petersen);
    suite.run("4", "closed forms vs generic engine", closed_forms);
    suite.run("5", "energy equivalence classes", equivalence_classes);
    suite.run("6", "permanents", permanents);
    suite.run("7", "energy upper bounds", bounds);
    suite.run("8", "spectral identities", spectral_identities);
    suite.run("9", "union and deletion identities", union_and_deletion);
    suite.run("10", "integer-energy scan", conjecture_scan);
    std::process::exit(suite.finish());
}
