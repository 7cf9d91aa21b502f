#![allow(dead_code)]

use nalgebra::DMatrix;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use seidel_core::{graph_from_graph6, Graph};

pub const CATALOG: &str = include_str!("../data/graphs_n1_to_6.g6");

/// All 208 non-isomorphic simple graphs on 1..=6 vertices.
pub fn catalog() -> Vec<Graph> {
    CATALOG
        .lines()
        .map(|l| graph_from_graph6(l).expect("catalog line decodes"))
        .collect()
}

pub fn catalog_lines() -> Vec<&'static str> {
    CATALOG.lines().collect()
}

pub fn random_graph(rng: &mut StdRng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for v in 1..n {
        for u in 0..v {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

/// Seidel matrix built straight from the definition, as an nalgebra matrix.
pub fn seidel_dmatrix(g: &Graph) -> DMatrix<f64> {
    let n = g.n();
    DMatrix::from_fn(n, n, |i, j| {
        if i == j {
            0.0
        } else if g.has_edge(i, j) {
            -1.0
        } else {
            1.0
        }
    })
}

/// Seidel eigenvalues from nalgebra's symmetric eigensolver, sorted descending.
pub fn oracle_eigenvalues(g: &Graph) -> Vec<f64> {
    let mut v: Vec<f64> = seidel_dmatrix(g)
        .symmetric_eigenvalues()
        .iter()
        .copied()
        .collect();
    v.sort_by(|a, b| b.total_cmp(a));
    v
}

pub fn assert_close_slices(actual: &[f64], expected: &[f64], tol: f64) {
    assert_eq!(actual.len(), expected.len(), "{actual:?} vs {expected:?}");
    for (a, e) in actual.iter().zip(expected) {
        assert!(
            (a - e).abs() <= tol,
            "{actual:?} vs {expected:?} (tol {tol})"
        );
    }
}
