// SPDX-License-Identifier: Apache-2.0

use std::collections::{BTreeMap, HashSet};

use rayon::prelude::*;
use serde::Serialize;

use super::canon::{canonical_form, CanonicalForm};
use super::CombinatError;
use crate::graph::Graph;

pub const REGULAR_MAX_ORDER: usize = 12;
pub const ALL_GRAPHS_MAX_ORDER: usize = 8;

/// Isomorphism-class representatives in canonical labeling, sorted by
/// certificate.
#[derive(Debug, Clone)]
pub struct Enumeration {
    pub graphs: Vec<Graph>,
    pub certs: Vec<CanonicalForm>,
    /// Why the enumeration is empty when it is empty for a structural reason.
    pub note: Option<String>,
}

impl Enumeration {
    pub fn len(&self) -> usize {
        self.graphs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.graphs.is_empty()
    }

    /// One graph6 string per line.
    pub fn to_graph6_lines(&self) -> String {
        self.certs.iter().map(|c| format!("{c}\n")).collect()
    }

    pub fn certs_json(&self) -> serde_json::Value {
        #[derive(Serialize)]
        struct Sidecar<'a> {
            schema: &'static str,
            count: usize,
            certs: &'a [CanonicalForm],
            #[serde(skip_serializing_if = "Option::is_none")]
            note: Option<&'a str>,
        }
        serde_json::to_value(Sidecar {
            schema: crate::SCHEMA,
            count: self.len(),
            certs: &self.certs,
            note: self.note.as_deref(),
        })
        .expect("sidecar serializes")
    }

    fn from_map(map: BTreeMap<CanonicalForm, Graph>, connected_only: bool, note: Option<String>) -> Self {
        let (certs, graphs) = map.into_iter().filter(|(_, g)| !connected_only || g.is_connected()).unzip();
        Enumeration { graphs, certs, note }
    }
}

/// All k-regular graphs on `n` vertices up to isomorphism.
///
/// Grows partial graphs by saturating the lowest-labeled unsaturated vertex
/// in every possible way and keeps one representative per certificate.
pub fn generate_k_regular(n: usize, k: usize, connected_only: bool) -> Result<Enumeration, CombinatError> {
    if n > REGULAR_MAX_ORDER {
        return Err(CombinatError::TooLarge { what: "generate_k_regular", n, cap: REGULAR_MAX_ORDER });
    }
    if k >= n {
        return Err(CombinatError::DegreeTooLarge { n, k });
    }
    if n * k % 2 == 1 {
        let note = format!("no {k}-regular graph on {n} vertices: n*k = {} is odd", n * k);
        return Ok(Enumeration { graphs: Vec::new(), certs: Vec::new(), note: Some(note) });
    }

    let mut complete = BTreeMap::new();
    let mut seen = HashSet::new();
    let mut frontier = vec![Graph::empty(n)];
    while !frontier.is_empty() {
        let mut children: Vec<(CanonicalForm, Graph)> = frontier
            .par_iter()
            .flat_map_iter(|g| saturate_next(g, k))
            .map(|g| canonical_form(&g).expect("order within canonical cap"))
            .collect();
        children.sort_by(|a, b| a.0.cmp(&b.0));
        children.dedup_by(|a, b| a.0 == b.0);
        frontier.clear();
        for (cert, g) in children {
            if !seen.insert(cert.clone()) {
                continue;
            }
            if g.degrees().iter().all(|&d| d == k) {
                complete.insert(cert, g);
            } else {
                frontier.push(g);
            }
        }
    }
    if n > 0 && k == 0 {
        let (cert, g) = canonical_form(&Graph::empty(n)).expect("order within canonical cap");
        complete.insert(cert, g);
    }

    let mut out = Enumeration::from_map(complete, connected_only, None);
    if out.is_empty() && connected_only {
        out.note = Some(format!("no connected {k}-regular graph on {n} vertices"));
    }
    Ok(out)
}

/// Children of `g` obtained by joining its first unsaturated vertex to
/// every admissible set of partners. Partners with identical neighborhoods
/// are interchangeable, so only the count taken from each such class varies.
fn saturate_next(g: &Graph, k: usize) -> Vec<Graph> {
    let n = g.order();
    let deg = g.degrees();
    let Some(u) = (0..n).find(|&v| deg[v] < k) else {
        return Vec::new();
    };
    let need = k - deg[u];
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for w in (0..n).filter(|&w| w != u && deg[w] < k && !g.has_edge(u, w)) {
        match classes.iter_mut().find(|c| g.neighbors(c[0]) == g.neighbors(w)) {
            Some(c) => c.push(w),
            None => classes.push(vec![w]),
        }
    }

    let edges: Vec<(usize, usize)> = g.edges().collect();
    let mut out = Vec::new();
    let mut counts = vec![0; classes.len()];
    choose_counts(&classes, need, 0, &mut counts, &mut |counts| {
        let mut new_edges = edges.clone();
        for (class, &c) in classes.iter().zip(counts) {
            new_edges.extend(class[..c].iter().map(|&w| (u.min(w), u.max(w))));
        }
        let child = Graph::from_edges(n, new_edges).expect("partners are valid and distinct");
        if completable(&child, k) {
            out.push(child);
        }
    });
    out
}

fn choose_counts(classes: &[Vec<usize>], remaining: usize, i: usize, counts: &mut [usize], f: &mut dyn FnMut(&[usize])) {
    if i == classes.len() {
        if remaining == 0 {
            f(counts);
        }
        return;
    }
    let left: usize = classes[i + 1..].iter().map(Vec::len).sum();
    let lo = remaining.saturating_sub(left);
    for c in lo..=classes[i].len().min(remaining) {
        counts[i] = c;
        choose_counts(classes, remaining - c, i + 1, counts, f);
    }
    counts[i] = 0;
}

/// Necessary condition: each unsaturated vertex has enough unsaturated
/// non-neighbors left to reach degree `k`.
fn completable(g: &Graph, k: usize) -> bool {
    let deg = g.degrees();
    let open: Vec<usize> = (0..g.order()).filter(|&v| deg[v] < k).collect();
    open.iter().all(|&v| {
        let room = open.iter().filter(|&&w| w != v && !g.has_edge(v, w)).count();
        k - deg[v] <= room
    })
}

/// Every graph on `n` vertices up to isomorphism, built by adding one edge
/// at a time and deduplicating each edge-count level by certificate.
pub fn generate_all(n: usize, connected_only: bool) -> Result<Enumeration, CombinatError> {
    if n > ALL_GRAPHS_MAX_ORDER {
        return Err(CombinatError::TooLarge { what: "generate_all", n, cap: ALL_GRAPHS_MAX_ORDER });
    }
    let mut all = BTreeMap::new();
    let mut level: Vec<(CanonicalForm, Graph)> = vec![canonical_form(&Graph::empty(n)).expect("order within canonical cap")];
    while !level.is_empty() {
        let mut next: Vec<(CanonicalForm, Graph)> = level
            .par_iter()
            .flat_map_iter(|(_, g)| {
                let edges: Vec<(usize, usize)> = g.edges().collect();
                let mut kids = Vec::new();
                for u in 0..n {
                    for v in u + 1..n {
                        if !g.has_edge(u, v) {
                            let mut e = edges.clone();
                            e.push((u, v));
                            kids.push(Graph::from_edges(n, e).expect("new edge is valid"));
                        }
                    }
                }
                kids
            })
            .map(|g| canonical_form(&g).expect("order within canonical cap"))
            .collect();
        next.sort_by(|a, b| a.0.cmp(&b.0));
        next.dedup_by(|a, b| a.0 == b.0);
        all.extend(level);
        level = next;
    }
    Ok(Enumeration::from_map(all, connected_only, None))
}
