// SPDX-License-Identifier: Apache-2.0

mod common;

use num_bigint::BigInt;
use rand::Rng;
use sombor::combinat::{generate_k_regular, ryser_permanent};
use sombor::Graph;

#[test]
fn ryser_matches_permutation_expansion() {
    let mut rng = common::rng(200);
    for _ in 0..200 {
        let n = rng.gen_range(1..=7);
        let density = rng.gen_range(0.2..=1.0);
        let a: Vec<Vec<u8>> = (0..n).map(|_| (0..n).map(|_| u8::from(rng.gen_bool(density))).collect()).collect();
        assert_eq!(ryser_permanent(&a).unwrap(), common::naive_permanent(&a), "{a:?}");
    }
}

#[test]
fn permanent_is_relabeling_invariant() {
    let mut rng = common::rng(9);
    for g in generate_k_regular(8, 3, false).unwrap().graphs.iter().chain([Graph::petersen()].iter()) {
        let p = ryser_permanent(&g.adjacency_matrix()).unwrap();
        for _ in 0..3 {
            let h = g.relabel(&common::random_perm(&mut rng, g.order())).unwrap();
            assert_eq!(ryser_permanent(&h.adjacency_matrix()).unwrap(), p);
        }
    }
}

#[test]
fn printed_adjacency_matrix() {
    let a: Vec<Vec<u8>> = [
        "0100010001",
        "1011000000",
        "0101100000",
        "0110100000",
        "0011010000",
        "1000101000",
        "0000010110",
        "0000001011",
        "0000001101",
        "1000000110",
    ]
    .iter()
    .map(|r| r.bytes().map(|b| b - b'0').collect())
    .collect();
    assert_eq!(ryser_permanent(&a).unwrap(), BigInt::from(72));
    assert_eq!(common::naive_permanent(&a), BigInt::from(72));
}
