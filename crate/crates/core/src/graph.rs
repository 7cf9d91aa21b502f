//! Dense undirected graphs and the `D_m` / `D_m*` constructions.
//!
//! Vertices of a constructed graph are numbered copy-major: vertex `u` of copy `i`
//! has index `i * n + u`.

use crate::error::{Error, Result};
use crate::matrix::{kronecker_with_cap, IntSymMatrix};
use crate::tol::DEFAULT_MAX_DIM;

/// Dense undirected graph. Diagonal entries of the adjacency matrix are loop flags.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<bool>,
    loops_allowed: bool,
}

impl Graph {
    /// Builds a graph from a row-major 0/1 adjacency matrix.
    pub fn from_adjacency(n: usize, adj: Vec<bool>, loops_allowed: bool) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidParameter(
                "graph must have at least one vertex".into(),
            ));
        }
        if adj.len() != n * n {
            return Err(Error::SizeMismatch {
                expected: n * n,
                actual: adj.len(),
            });
        }
        for u in 0..n {
            if !loops_allowed && adj[u * n + u] {
                return Err(Error::LoopsPresent);
            }
            for v in (u + 1)..n {
                if adj[u * n + v] != adj[v * n + u] {
                    return Err(Error::NotSymmetric { row: u, col: v });
                }
            }
        }
        Ok(Self {
            n,
            adj,
            loops_allowed,
        })
    }

    /// Builds a graph from an exact 0/1 symmetric matrix.
    pub fn from_matrix(m: &IntSymMatrix, loops_allowed: bool) -> Result<Self> {
        let adj = m
            .as_slice()
            .iter()
            .map(|&x| match x {
                0 => Ok(false),
                1 => Ok(true),
                other => Err(Error::InvalidMatrix(format!(
                    "adjacency entry {other} is not 0 or 1"
                ))),
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_adjacency(m.n(), adj, loops_allowed)
    }

    /// Simple graph from an edge list. Self-loops and out-of-range endpoints are rejected.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::empty(n)?;
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidParameter(format!(
                    "edge ({u}, {v}) out of range for {n} vertices"
                )));
            }
            if u == v {
                return Err(Error::LoopsPresent);
            }
            g.set(u, v, true);
        }
        Ok(g)
    }

    /// Edgeless simple graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        Self::from_adjacency(n, vec![false; n * n], false)
    }

    pub fn complete(n: usize) -> Result<Self> {
        let adj = (0..n * n).map(|k| k / n != k % n).collect();
        Self::from_adjacency(n, adj, false)
    }

    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidParameter(
                "cycle needs at least 3 vertices".into(),
            ));
        }
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Self::from_edges(n, &edges)
    }

    pub fn path(n: usize) -> Result<Self> {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Self::from_edges(n, &edges)
    }

    pub(crate) fn set(&mut self, u: usize, v: usize, on: bool) {
        self.adj[u * self.n + v] = on;
        self.adj[v * self.n + u] = on;
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u * self.n + v]
    }

    pub fn loops_allowed(&self) -> bool {
        self.loops_allowed
    }

    pub fn has_loops(&self) -> bool {
        (0..self.n).any(|u| self.has_edge(u, u))
    }

    /// True when the graph carries no loops, regardless of the `loops_allowed` tag.
    pub fn is_simple(&self) -> bool {
        !self.has_loops()
    }

    /// Number of edges, each loop counted once.
    pub fn edge_count(&self) -> usize {
        (0..self.n)
            .map(|u| (u..self.n).filter(|&v| self.has_edge(u, v)).count())
            .sum()
    }

    pub fn degree(&self, u: usize) -> usize {
        (0..self.n)
            .filter(|&v| v != u && self.has_edge(u, v))
            .count()
    }

    /// Row-major adjacency flags.
    pub fn adjacency_flags(&self) -> &[bool] {
        &self.adj
    }

    pub(crate) fn require_simple(&self) -> Result<()> {
        if self.has_loops() {
            Err(Error::LoopsPresent)
        } else {
            Ok(())
        }
    }

    fn to_matrix(&self) -> IntSymMatrix {
        IntSymMatrix::from_upper_fn(self.n, |u, v| i64::from(self.has_edge(u, v)))
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let edges: Vec<(usize, usize)> = (0..self.n)
            .flat_map(|u| (u..self.n).map(move |v| (u, v)))
            .filter(|&(u, v)| self.has_edge(u, v))
            .collect();
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("loops_allowed", &self.loops_allowed)
            .field("edges", &edges)
            .finish()
    }
}

/// Complement of a simple graph. The diagonal stays zero.
pub fn complement(g: &Graph) -> Result<Graph> {
    g.require_simple()?;
    let n = g.n;
    let adj = (0..n * n).map(|k| k / n != k % n && !g.adj[k]).collect();
    Ok(Graph {
        n,
        adj,
        loops_allowed: false,
    })
}

/// `G^r`: adds a loop at every vertex, so the adjacency becomes `A + I`.
pub fn add_loops(g: &Graph) -> Result<Graph> {
    g.require_simple()?;
    let mut out = g.clone();
    for u in 0..g.n {
        out.adj[u * g.n + u] = true;
    }
    out.loops_allowed = true;
    Ok(out)
}

/// `G^ur`: zeroes the diagonal.
pub fn remove_loops(g: &Graph) -> Graph {
    let mut out = g.clone();
    for u in 0..g.n {
        out.adj[u * g.n + u] = false;
    }
    out.loops_allowed = false;
    out
}

fn check_m(m: usize) -> Result<()> {
    if m < 2 {
        return Err(Error::InvalidParameter(format!(
            "m must be at least 2, got {m}"
        )));
    }
    Ok(())
}

/// `D_m(G)`, adjacency `J_m ⊗ A(G)`.
pub fn d_m(g: &Graph, m: usize) -> Result<Graph> {
    d_m_with_cap(g, m, DEFAULT_MAX_DIM)
}

pub fn d_m_with_cap(g: &Graph, m: usize, max_dim: usize) -> Result<Graph> {
    check_m(m)?;
    g.require_simple()?;
    let adj = kronecker_with_cap(&IntSymMatrix::ones(m), &g.to_matrix(), max_dim)?;
    let out = Graph::from_matrix(&adj, false)?;
    debug_assert!(out.is_simple());
    Ok(out)
}

/// `D_m*(G)`, adjacency `J_m ⊗ (A(G) + I) − I`.
pub fn d_m_star(g: &Graph, m: usize) -> Result<Graph> {
    d_m_star_with_cap(g, m, DEFAULT_MAX_DIM)
}

pub fn d_m_star_with_cap(g: &Graph, m: usize, max_dim: usize) -> Result<Graph> {
    check_m(m)?;
    g.require_simple()?;
    let looped = add_loops(g)?.to_matrix();
    let blown = kronecker_with_cap(&IntSymMatrix::ones(m), &looped, max_dim)?;
    let adj = &blown - &IntSymMatrix::identity(blown.n());
    Graph::from_matrix(&adj, false)
}

pub(crate) fn adjacency_of(g: &Graph) -> IntSymMatrix {
    g.to_matrix()
}
