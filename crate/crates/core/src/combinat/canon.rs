// SPDX-License-Identifier: Apache-2.0

use std::fmt;

use serde::{Deserialize, Serialize};

use super::CombinatError;
use crate::graph::Graph;
use crate::graph6::to_graph6;

pub const CANON_MAX_ORDER: usize = 16;

/// Isomorphism certificate: the lexicographically least graph6 string over
/// all relabelings reachable by individualization-refinement.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CanonicalForm(String);

impl CanonicalForm {
    pub fn as_str(&self) -> &str {
        &self.0
    }

    pub fn into_string(self) -> String {
        self.0
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

pub fn canonical_cert(g: &Graph) -> Result<CanonicalForm, CombinatError> {
    canonical_form(g).map(|(cert, _)| cert)
}

/// Certificate together with the canonically relabeled graph.
pub fn canonical_form(g: &Graph) -> Result<(CanonicalForm, Graph), CombinatError> {
    let n = g.order();
    if n > CANON_MAX_ORDER {
        return Err(CombinatError::TooLarge { what: "canonical_cert", n, cap: CANON_MAX_ORDER });
    }
    let mut search = Search { g, best: None };
    search.run(vec![(0..n).collect()]);
    let (cert, graph) = search.best.expect("search visits at least one leaf");
    Ok((CanonicalForm(cert), graph))
}

struct Search<'a> {
    g: &'a Graph,
    best: Option<(String, Graph)>,
}

impl Search<'_> {
    fn run(&mut self, partition: Vec<Vec<usize>>) {
        let partition = refine(self.g, partition);
        let target = partition
            .iter()
            .enumerate()
            .filter(|(_, c)| c.len() > 1)
            .min_by_key(|(i, c)| (c.len(), *i))
            .map(|(i, _)| i);
        let Some(ti) = target else {
            self.leaf(&partition);
            return;
        };
        let cell = &partition[ti];
        for (pos, &v) in cell.iter().enumerate() {
            if cell[..pos].iter().any(|&u| twins(self.g, u, v)) {
                continue;
            }
            let mut child = Vec::with_capacity(partition.len() + 1);
            child.extend_from_slice(&partition[..ti]);
            child.push(vec![v]);
            child.push(cell.iter().copied().filter(|&w| w != v).collect());
            child.extend_from_slice(&partition[ti + 1..]);
            self.run(child);
        }
    }

    fn leaf(&mut self, partition: &[Vec<usize>]) {
        let mut perm = vec![0; self.g.order()];
        for (label, cell) in partition.iter().enumerate() {
            perm[cell[0]] = label;
        }
        let relabeled = self.g.relabel(&perm).expect("partition is a permutation");
        let code = to_graph6(&relabeled);
        if self.best.as_ref().is_none_or(|(b, _)| code < *b) {
            self.best = Some((code, relabeled));
        }
    }
}

/// `N(u) \ {v} = N(v) \ {u}`; swapping such a pair is an automorphism.
fn twins(g: &Graph, u: usize, v: usize) -> bool {
    let nu = g.neighbors(u).iter().filter(|&&w| w != v);
    let nv = g.neighbors(v).iter().filter(|&&w| w != u);
    nu.eq(nv)
}

/// Coarsest equitable refinement of an ordered partition. Cells split by
/// their neighbor-count signature against every current cell, with the
/// pieces ordered by signature, so the result is invariant under relabeling.
fn refine(g: &Graph, mut partition: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    let n = g.order();
    let mut cell_of = vec![0; n];
    loop {
        for (i, cell) in partition.iter().enumerate() {
            for &v in cell {
                cell_of[v] = i;
            }
        }
        let k = partition.len();
        let mut next = Vec::with_capacity(n);
        for cell in &partition {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut keyed: Vec<(Vec<u32>, usize)> = cell
                .iter()
                .map(|&v| {
                    let mut sig = vec![0u32; k];
                    for &w in g.neighbors(v) {
                        sig[cell_of[w]] += 1;
                    }
                    (sig, v)
                })
                .collect();
            keyed.sort();
            let mut start = 0;
            for i in 1..=keyed.len() {
                if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                    next.push(keyed[start..i].iter().map(|(_, v)| *v).collect());
                    start = i;
                }
            }
        }
        if next.len() == partition.len() {
            return next;
        }
        partition = next;
    }
}
