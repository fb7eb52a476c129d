// SPDX-License-Identifier: Apache-2.0
#![allow(dead_code)]

use num_bigint::BigInt;
use petgraph::graph::UnGraph;
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use sombor::Graph;

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

pub fn random_graph(rng: &mut StdRng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

pub fn random_perm(rng: &mut StdRng, n: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(rng);
    p
}

pub fn to_petgraph(g: &Graph) -> UnGraph<(), ()> {
    let mut h = UnGraph::new_undirected();
    let nodes: Vec<_> = (0..g.order()).map(|_| h.add_node(())).collect();
    for (u, v) in g.edges() {
        h.add_edge(nodes[u], nodes[v], ());
    }
    h
}

pub fn isomorphic(a: &Graph, b: &Graph) -> bool {
    petgraph::algo::is_isomorphic(&to_petgraph(a), &to_petgraph(b))
}

/// Permanent by expanding over all n! permutations.
pub fn naive_permanent(a: &[Vec<u8>]) -> BigInt {
    fn go(a: &[Vec<u8>], row: usize, used: &mut Vec<bool>) -> BigInt {
        if row == a.len() {
            return BigInt::from(1);
        }
        let mut total = BigInt::from(0);
        for col in 0..a.len() {
            if !used[col] && a[row][col] == 1 {
                used[col] = true;
                total += go(a, row + 1, used);
                used[col] = false;
            }
        }
        total
    }
    go(a, 0, &mut vec![false; a.len()])
}

/// `Σ_v d_v³`, straight from the degree sequence.
pub fn forgotten(g: &Graph) -> u128 {
    g.degrees().iter().map(|&d| (d as u128).pow(3)).sum()
}
