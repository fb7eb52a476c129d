// SPDX-License-Identifier: Apache-2.0

use std::path::Path;

use serde_json::{json, Map, Value};
use sombor::analysis::{
    cubic10_fixtures, energy_classes, integer_energy_search, match_corpus, parse_fixtures, permanent_report, Fixture,
};
use sombor::charpoly::{
    charpoly_complete, charpoly_complete_bipartite, charpoly_cycle, charpoly_generic, charpoly_path, charpoly_star,
    coefficient_envelope, coefficients_agree, CharPolyResult, Family,
};
use sombor::combinat::{generate_all, generate_k_regular, ryser_permanent, ALL_GRAPHS_MAX_ORDER};
use sombor::poly::{render, PolyStyle};
use sombor::sombor::{sombor_matrix, SomborWeight, WeightKind};
use sombor::spectra::{
    energy_complete, energy_complete_bipartite, energy_star, sombor_energy_with_tol, SpectraError, SpectrumReport,
    DEFAULT_TOL,
};
use sombor::{Graph, QSqrt2, SomborPoly};

use crate::input::{build_family, family_name, FamilyName, Input, Named};
use crate::CliError;

pub struct Output {
    pub json: bool,
    pub ascii: bool,
    pub timestamps: bool,
}

impl Output {
    fn emit(&self, command: &str, fields: Value) {
        let mut obj = Map::new();
        obj.insert("schema".into(), json!(sombor::SCHEMA));
        obj.insert("command".into(), json!(command));
        if self.timestamps {
            let secs = std::time::SystemTime::now()
                .duration_since(std::time::UNIX_EPOCH)
                .map_or(0, |d| d.as_secs());
            obj.insert("timestamp".into(), json!(secs));
        }
        if let Value::Object(m) = fields {
            obj.extend(m);
        }
        println!("{}", Value::Object(obj));
    }

    fn style(&self) -> PolyStyle {
        if self.ascii {
            PolyStyle::ascii()
        } else {
            PolyStyle::unicode()
        }
    }

    /// `48*sqrt(2)` becomes `48√2` unless ASCII output was requested.
    fn radical(&self, s: &str) -> String {
        if self.ascii {
            return s.to_string();
        }
        let s = s.replace("*sqrt(", "√(").replace("sqrt(", "√(");
        let mut out = String::with_capacity(s.len());
        let mut rest = s.as_str();
        while let Some(i) = rest.find("√(") {
            out.push_str(&rest[..i]);
            out.push('√');
            let tail = &rest[i + "√(".len()..];
            let close = tail.find(')').unwrap_or(tail.len());
            out.push_str(&tail[..close]);
            rest = tail.get(close + 1..).unwrap_or("");
        }
        out.push_str(rest);
        out
    }
}

fn failure(e: SpectraError) -> CliError {
    match e {
        SpectraError::BadTolerance(_) => CliError::Input(e.to_string()),
        other => CliError::Failure(other.to_string()),
    }
}

fn load_nonempty(input: &Input) -> Result<Vec<Named>, CliError> {
    let graphs = input.load()?;
    if graphs.is_empty() {
        return Err(CliError::Input("no graphs in input".into()));
    }
    Ok(graphs)
}

fn weight_cell(w: Option<SomborWeight>, ascii: bool) -> String {
    let root = if ascii { "sqrt" } else { "√" };
    let Some(w) = w else { return "0".into() };
    match (w.kind, ascii) {
        (WeightKind::Rational(k), _) => k.to_string(),
        (WeightKind::Sqrt2Multiple(1), true) => "sqrt(2)".into(),
        (WeightKind::Sqrt2Multiple(1), false) => "√2".into(),
        (WeightKind::Sqrt2Multiple(k), true) => format!("{k}*sqrt(2)"),
        (WeightKind::Sqrt2Multiple(k), false) => format!("{k}√2"),
        (WeightKind::Irrational, true) => format!("{root}({})", w.squared),
        (WeightKind::Irrational, false) => format!("{root}{}", w.squared),
    }
}

pub fn matrix(out: &Output, input: &Input) -> Result<(), CliError> {
    for Named { name, graph } in load_nonempty(input)? {
        let m = sombor_matrix(&graph);
        if out.json {
            out.emit("matrix", json!({ "graph": name, "matrix": m.to_json() }));
            continue;
        }
        let n = m.order();
        let cells: Vec<Vec<String>> =
            (0..n).map(|i| (0..n).map(|j| weight_cell(m.entry(i, j), out.ascii)).collect()).collect();
        let width = cells.iter().flatten().map(|c| c.chars().count()).max().unwrap_or(1);
        println!("{name} (n = {n}, {})", if m.all_exact() { "exact" } else { "float" });
        for row in cells {
            let line: Vec<String> =
                row.iter().map(|c| format!("{}{c}", " ".repeat(width - c.chars().count()))).collect();
            println!("  {}", line.join(" "));
        }
    }
    Ok(())
}

fn closed_form(family: FamilyName, n: Option<usize>, m: Option<usize>) -> Option<Result<CharPolyResult, CliError>> {
    let wrap = |r: Result<sombor::Poly<QSqrt2>, sombor::RangeError>, family| {
        r.map(|p| CharPolyResult { poly: SomborPoly::Exact(p), family }).map_err(|e| CliError::Input(e.to_string()))
    };
    let n = n?;
    Some(match family {
        FamilyName::Path => wrap(charpoly_path(n), Family::Path),
        FamilyName::Cycle => wrap(charpoly_cycle(n), Family::Cycle),
        FamilyName::Star => wrap(charpoly_star(n), Family::Star),
        FamilyName::Complete => wrap(charpoly_complete(n), Family::Complete),
        FamilyName::CompleteBipartite => wrap(charpoly_complete_bipartite(m?, n), Family::CompleteBipartite),
        FamilyName::Petersen => return None,
    })
}

pub fn charpoly(out: &Output, input: &Input, generic: bool) -> Result<(), CliError> {
    let graphs = load_nonempty(input)?;
    let single = graphs.len() == 1;
    for Named { name, graph } in graphs {
        let result = match input.family.filter(|_| !generic).and_then(|f| closed_form(f, input.n, input.m)) {
            Some(r) => r?,
            None => charpoly_generic(&sombor_matrix(&graph)),
        };
        if out.json {
            out.emit(
                "charpoly",
                json!({
                    "graph": name,
                    "family": result.family,
                    "poly": result.poly.to_json(),
                    "rendered": render(&result.poly, PolyStyle::ascii()),
                }),
            );
        } else if single {
            println!("{}", render(&result.poly, out.style()));
        } else {
            println!("{name}\t{}", render(&result.poly, out.style()));
        }
    }
    Ok(())
}

fn report_fields(name: &str, r: &SpectrumReport, eigenvalues: bool) -> Value {
    let mut v = serde_json::to_value(r).expect("report serializes");
    if let Value::Object(m) = &mut v {
        if !eigenvalues {
            m.remove("eigenvalues");
        }
        m.insert("graph".into(), json!(name));
    }
    v
}

pub fn spectrum(out: &Output, input: &Input, tol: f64, eigenvalues: bool) -> Result<(), CliError> {
    let command = if eigenvalues { "spectrum" } else { "energy" };
    for Named { name, graph } in load_nonempty(input)? {
        let r = sombor_energy_with_tol(&graph, tol).map_err(failure)?;
        if out.json {
            out.emit(command, report_fields(&name, &r, eigenvalues));
            continue;
        }
        let exact = r.exact_energy.as_ref().map(|e| format!(" = {}", out.radical(&e.to_string()))).unwrap_or_default();
        if eigenvalues {
            println!("{name}");
            for (i, x) in r.eigenvalues.iter().enumerate() {
                println!("  rho_{:<3} {x:>16.10}", i + 1);
            }
            println!("  energy   {:>16.10}{exact}", r.energy);
            println!("  residual {:>16.3e}", r.residual);
        } else {
            println!("{name}\t{:.10}{exact}", r.energy);
        }
    }
    Ok(())
}

pub fn bounds(out: &Output, input: &Input, tol: f64) -> Result<(), CliError> {
    let graphs = load_nonempty(input)?;
    if !out.json {
        println!("{:<20} {:>14} {:>14} {:>14}", "graph", "energy", "mcclelland", "koolen-moulton");
    }
    for Named { name, graph } in graphs {
        let r = sombor_energy_with_tol(&graph, tol).map_err(failure)?;
        if out.json {
            out.emit(
                "bounds",
                json!({
                    "graph": name,
                    "energy": r.energy,
                    "mcclelland_bound": r.mcclelland_bound,
                    "koolen_moulton_bound": r.koolen_moulton_bound,
                    "koolen_moulton_clamped": r.koolen_moulton_clamped,
                }),
            );
        } else {
            let flag = if r.koolen_moulton_clamped { " (clamped)" } else { "" };
            println!(
                "{name:<20} {:>14.6} {:>14.6} {:>14.6}{flag}",
                r.energy, r.mcclelland_bound, r.koolen_moulton_bound
            );
        }
    }
    Ok(())
}

pub fn permanent(out: &Output, input: &Input) -> Result<(), CliError> {
    for Named { name, graph } in load_nonempty(input)? {
        let p = ryser_permanent(&graph.adjacency_matrix()).map_err(|e| CliError::Input(e.to_string()))?;
        if out.json {
            out.emit("permanent", json!({ "graph": name, "permanent": p.to_string() }));
        } else {
            println!("{name}\t{p}");
        }
    }
    Ok(())
}

pub fn generate(out: &Output, n: usize, k: usize, connected: bool, path: Option<&Path>) -> Result<(), CliError> {
    let e = generate_k_regular(n, k, connected).map_err(|e| CliError::Input(e.to_string()))?;
    if let Some(note) = &e.note {
        eprintln!("note: {note}");
    }
    if let Some(path) = path {
        let sidecar = path.with_extension(match path.extension() {
            Some(ext) => format!("{}.json", ext.to_string_lossy()),
            None => "json".into(),
        });
        let write = |p: &Path, s: String| std::fs::write(p, s).map_err(|e| CliError::Input(format!("{}: {e}", p.display())));
        write(path, e.to_graph6_lines())?;
        write(&sidecar, format!("{:#}\n", e.certs_json()))?;
        eprintln!("wrote {} graphs to {} and {}", e.len(), path.display(), sidecar.display());
    } else if out.json {
        out.emit("generate", json!({ "n": n, "k": k, "connected": connected, "corpus": e.certs_json() }));
    } else {
        print!("{}", e.to_graph6_lines());
    }
    Ok(())
}

fn load_fixtures(path: Option<&Path>) -> Result<Vec<Fixture>, CliError> {
    match path {
        None => Ok(cubic10_fixtures()),
        Some(p) => {
            let text = std::fs::read_to_string(p).map_err(|e| CliError::Input(format!("{}: {e}", p.display())))?;
            parse_fixtures(&text).map_err(|e| CliError::Input(format!("{}: {e}", p.display())))
        }
    }
}

pub fn corpus_verify(
    out: &Output,
    n: usize,
    k: usize,
    energy_tol: f64,
    max_poly_mismatches: usize,
    fixtures: Option<&Path>,
) -> Result<(), CliError> {
    let fixtures = load_fixtures(fixtures)?;
    let generated = generate_k_regular(n, k, false).map_err(|e| CliError::Input(e.to_string()))?;
    let report = match_corpus(&generated.graphs, &fixtures).map_err(|e| CliError::Mismatch(e.to_string()))?;
    let permanents = permanent_report(&report, &fixtures).map_err(|e| CliError::Failure(e.to_string()))?;

    let poly_mismatches = report.matches.len() - report.exact_rows;
    let energy_fail = report.matches.iter().filter(|m| m.energy_delta > energy_tol).count();
    let perm_fail = permanents.iter().filter(|p| p.agrees() == Some(false)).count();
    let mut problems = Vec::new();
    if generated.len() != fixtures.len() {
        problems.push(format!("generated {} graphs for {} fixtures", generated.len(), fixtures.len()));
    }
    if poly_mismatches > max_poly_mismatches {
        problems.push(format!("{poly_mismatches} polynomial rows differ from their fixture"));
    }
    if energy_fail > 0 {
        problems.push(format!("{energy_fail} energies differ from the table by more than {energy_tol:e}"));
    }
    if perm_fail > 0 {
        problems.push(format!("{perm_fail} permanents differ from the printed values"));
    }

    if out.json {
        let rows: Vec<Value> = report
            .matches
            .iter()
            .zip(&permanents)
            .map(|(m, p)| {
                json!({
                    "label": m.nearest,
                    "exact_match": m.is_exact(),
                    "cert": m.cert,
                    "energy": m.energy,
                    "exact_energy": m.exact_energy.as_ref().map(ToString::to_string),
                    "table_energy": m.table_energy,
                    "energy_delta": m.energy_delta,
                    "poly_delta": m.poly_delta.iter().map(|d| json!({
                        "power": d.power,
                        "computed": d.computed.to_string(),
                        "fixture": d.fixture.to_string(),
                        "delta": d.delta.to_string(),
                    })).collect::<Vec<_>>(),
                    "permanent": p.permanent.to_string(),
                    "claimed_permanent": p.claimed,
                })
            })
            .collect();
        out.emit(
            "corpus verify",
            json!({
                "n": n,
                "k": k,
                "generated": generated.len(),
                "exact_rows": report.exact_rows,
                "orphan_fixtures": report.orphan_fixtures,
                "energy_tol": energy_tol,
                "rows": rows,
                "ok": problems.is_empty(),
            }),
        );
    } else {
        println!(
            "{:<6} {:<7} {:<12} {:>11} {:>9} {:>9} {:>6} {:>7}",
            "label", "poly", "cert", "energy", "table", "|delta|", "per", "printed"
        );
        for (m, p) in report.matches.iter().zip(&permanents) {
            let flag = if m.energy_delta > energy_tol { " *" } else { "" };
            println!(
                "{:<6} {:<7} {:<12} {:>11.6} {:>9.3} {:>9.5} {:>6} {:>7}{flag}",
                m.nearest,
                if m.is_exact() { "exact" } else { "nearest" },
                m.cert.as_str(),
                m.energy,
                m.table_energy,
                m.energy_delta,
                p.permanent.to_string(),
                p.claimed.map_or("-".into(), |c| c.to_string()),
            );
        }
        let lam = if out.ascii { "l" } else { "λ" };
        for m in report.matches.iter().filter(|m| !m.is_exact()) {
            println!("{} coefficient differences (computed vs table):", m.nearest);
            for d in &m.poly_delta {
                println!(
                    "  {lam}^{}: {} vs {} (delta {})",
                    d.power,
                    out.radical(&d.computed.to_string()),
                    out.radical(&d.fixture.to_string()),
                    out.radical(&d.delta.to_string())
                );
            }
        }
        println!(
            "{} graphs, {} exact polynomial rows, {} energies beyond {energy_tol:e} (marked *)",
            generated.len(),
            report.exact_rows,
            energy_fail
        );
    }
    if problems.is_empty() {
        Ok(())
    } else {
        Err(CliError::Mismatch(problems.join("; ")))
    }
}

pub fn classes(out: &Output, input: &Input, corpus: bool, tol: f64) -> Result<(), CliError> {
    if !(tol > 0.0 && tol.is_finite()) {
        return Err(CliError::Input(format!("--tol must be positive, got {tol}")));
    }
    let named: Vec<Named> = if corpus {
        let generated = generate_k_regular(10, 3, false).map_err(|e| CliError::Input(e.to_string()))?;
        let report = match_corpus(&generated.graphs, &cubic10_fixtures()).map_err(|e| CliError::Mismatch(e.to_string()))?;
        report.matches.into_iter().map(|m| Named { name: m.nearest, graph: m.graph }).collect()
    } else {
        load_nonempty(input)?
    };
    let graphs: Vec<Graph> = named.iter().map(|n| n.graph.clone()).collect();
    let c = energy_classes(&graphs, tol).map_err(|e| CliError::Failure(e.to_string()))?;
    let names = |idx: &[usize]| idx.iter().map(|&i| named[i].name.clone()).collect::<Vec<_>>();
    if out.json {
        let classes: Vec<Value> = c
            .classes
            .iter()
            .map(|cl| json!({ "members": names(&cl.members), "energy": cl.energy, "evidence": cl.evidence }))
            .collect();
        let unique: Vec<usize> = (0..named.len()).filter(|&i| c.unique[i]).collect();
        out.emit(
            "classes",
            json!({ "tol": tol, "classes": classes, "unique": names(&unique), "unique_count": c.unique_count() }),
        );
    } else {
        println!("{:>14} {:<10} members", "energy", "evidence");
        for cl in &c.classes {
            let evidence = serde_json::to_value(cl.evidence).expect("evidence serializes");
            println!("{:>14.8} {:<10} {}", cl.energy, evidence.as_str().unwrap_or(""), names(&cl.members).join(", "));
        }
        println!("{} of {} graphs are unique in energy (tol {tol:e})", c.unique_count(), named.len());
    }
    Ok(())
}

pub fn conjecture_scan(
    out: &Output,
    input: &Input,
    stdin: bool,
    max_n: usize,
    connected: bool,
    tol: f64,
) -> Result<(), CliError> {
    let mut graphs: Vec<Graph> = if input.is_given() || stdin {
        input.load()?.into_iter().map(|n| n.graph).collect()
    } else {
        if max_n > ALL_GRAPHS_MAX_ORDER {
            return Err(CliError::Input(format!("--max-n is limited to {ALL_GRAPHS_MAX_ORDER}")));
        }
        let mut all = Vec::new();
        for n in 1..=max_n {
            all.extend(generate_all(n, connected).map_err(|e| CliError::Input(e.to_string()))?.graphs);
        }
        all
    };
    if connected {
        graphs.retain(Graph::is_connected);
    }
    let report = integer_energy_search(&graphs, tol).map_err(|e| match e {
        sombor::analysis::AnalysisError::BadTolerance(_) => CliError::Input(e.to_string()),
        other => CliError::Failure(other.to_string()),
    })?;
    if out.json {
        out.emit("conjecture scan", serde_json::to_value(&report).expect("report serializes"));
        return Ok(());
    }
    println!(
        "scanned {} graphs with at least one edge ({} edgeless skipped), tol {:e}",
        report.scanned, report.skipped_edgeless, report.tol
    );
    if report.hits.is_empty() {
        println!("no energy within tolerance of an integer");
    }
    for h in &report.hits {
        let verdict = serde_json::to_value(h.verdict).expect("verdict serializes");
        println!(
            "{}\tenergy {:.12}\tnearest {}\tgap {:.3e}\t{}",
            h.graph6,
            h.energy,
            h.nearest_integer,
            h.gap,
            verdict.as_str().unwrap_or("")
        );
    }
    Ok(())
}

pub fn family(out: &Output, family: FamilyName, n: Option<usize>, m: Option<usize>) -> Result<(), CliError> {
    let graph = build_family(family, n, m)?;
    let name = family_name(family, n, m);
    let generic = charpoly_generic(&sombor_matrix(&graph));
    let result = match closed_form(family, n, m) {
        Some(r) => r?,
        None => generic.clone(),
    };
    let report = sombor_energy_with_tol(&graph, DEFAULT_TOL).map_err(failure)?;
    let envelope = coefficient_envelope(&report.eigenvalues);
    let agrees = coefficients_agree(&generic.poly, &result.poly, &envelope, 1e-8);

    let closed_energy: Option<String> = match family {
        FamilyName::Star => Some(energy_star(graph.order()).map_err(|e| CliError::Input(e.to_string()))?.to_string()),
        FamilyName::Complete => Some(energy_complete(graph.order()).map_err(|e| CliError::Input(e.to_string()))?.to_string()),
        FamilyName::CompleteBipartite => Some(
            energy_complete_bipartite(m.unwrap_or(0), n.unwrap_or(0))
                .map_err(|e| CliError::Input(e.to_string()))?
                .to_string(),
        ),
        _ => report.exact_energy.as_ref().map(ToString::to_string),
    };

    if out.json {
        out.emit(
            "family",
            json!({
                "graph": name,
                "family": result.family,
                "poly": result.poly.to_json(),
                "rendered": render(&result.poly, PolyStyle::ascii()),
                "energy": report.energy,
                "exact_energy": closed_energy,
                "generic_agrees": agrees,
            }),
        );
    } else {
        println!("{name}");
        println!("  charpoly  {}", render(&result.poly, out.style()));
        let exact = closed_energy.map(|e| format!(" = {}", out.radical(&e))).unwrap_or_default();
        println!("  energy    {:.10}{exact}", report.energy);
        println!("  generic engine agrees: {}", if agrees { "yes" } else { "NO" });
    }
    if agrees {
        Ok(())
    } else {
        Err(CliError::Mismatch(format!("closed form for {name} disagrees with the generic engine")))
    }
}
