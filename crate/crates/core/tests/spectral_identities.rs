// SPDX-License-Identifier: Apache-2.0

mod common;

use proptest::prelude::*;
use rand::SeedableRng;
use sombor::charpoly::charpoly_generic;
use sombor::combinat::generate_k_regular;
use sombor::sombor::sombor_matrix;
use sombor::spectra::{eigenvalues_symmetric, DEFAULT_TOL};
use sombor::{Graph, QSqrt2, SomborPoly};

fn graph_strategy() -> impl Strategy<Value = Graph> {
    (1usize..=12, 0.0f64..=1.0, any::<u64>()).prop_map(|(n, p, seed)| {
        let mut rng = rand::rngs::StdRng::seed_from_u64(seed);
        common::random_graph(&mut rng, n, p)
    })
}

fn check_coefficients(g: &Graph) {
    let n = g.order();
    let f = common::forgotten(g);
    match charpoly_generic(&sombor_matrix(g)).poly {
        SomborPoly::Exact(p) => {
            assert!(p.is_monic());
            assert_eq!(p.degree(), Some(n));
            if n >= 1 {
                assert_eq!(p.coeff(n - 1), QSqrt2::integer(0));
            }
            if n >= 2 {
                assert_eq!(p.coeff(n - 2), QSqrt2::integer(-(f as i64)));
            }
        }
        SomborPoly::Float(p) => {
            assert_eq!(p.degree(), Some(n));
            assert_eq!(p.coeff(n), 1.0);
            let scale = (f as f64).max(1.0);
            assert!(p.coeff(n - 1).abs() <= 1e-6 * scale, "λ^(n-1) coefficient {}", p.coeff(n - 1));
            if n >= 2 {
                let c = p.coeff(n - 2);
                assert!((c + f as f64).abs() <= 1e-6 * scale, "λ^(n-2) coefficient {c} vs -{f}");
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn trace_and_trace_of_square(g in graph_strategy()) {
        let rho = eigenvalues_symmetric(&sombor_matrix(&g), DEFAULT_TOL).unwrap();
        let sum: f64 = rho.iter().sum();
        let sum_sq: f64 = rho.iter().map(|x| x * x).sum();
        let two_f = 2.0 * common::forgotten(&g) as f64;
        prop_assert!(sum.abs() <= 1e-8, "trace {sum}");
        prop_assert!((sum_sq - two_f).abs() <= 1e-6 * two_f.max(1.0), "{sum_sq} vs {two_f}");
    }

    #[test]
    fn charpoly_low_order_coefficients(g in graph_strategy()) {
        check_coefficients(&g);
    }
}

#[test]
fn exact_mode_coefficients_on_regular_graphs() {
    let mut seen_exact = 0;
    for (n, k) in [(4, 3), (6, 3), (8, 3), (10, 3), (6, 2), (7, 4), (9, 4), (8, 5)] {
        for g in generate_k_regular(n, k, false).unwrap().graphs {
            assert!(sombor_matrix(&g).all_exact());
            check_coefficients(&g);
            seen_exact += 1;
        }
    }
    assert!(seen_exact > 40);
}
