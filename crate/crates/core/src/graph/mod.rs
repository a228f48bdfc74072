//! The commuting graph of `Tr(R)` and its exact invariants.

pub mod bits;
pub mod clique;
mod export;
mod fast;
mod invariants;

use std::collections::HashMap;

pub use bits::{Adjacency, BitGraph, Complement};
pub use clique::Budget;
pub use export::{export, to_csv_degrees, to_dot, ExportFormat, DOT_VERTEX_CAP};
pub use fast::{canonical_degrees, edge_count_fast, CanonicalDegree, DEFAULT_PAIR_CAP};
pub use invariants::{
    all_sources_diameter, component_edge_counts, components, count_maximum_cliques, invariants,
    Diameter, Extremal, InvariantReport,
};

use crate::error::{Error, Result};
use crate::ring::Ring;
use crate::trimat::{self, Class, Ut2};

pub const DEFAULT_DENSE_CAP: u64 = 20_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GraphOptions {
    /// Largest vertex count stored as dense bit rows.
    pub dense_cap: u64,
    /// Above `dense_cap`, answer adjacency on demand instead of failing.
    pub allow_implicit: bool,
    /// Hard limit on enumerated vertices in either mode.
    pub vertex_cap: u64,
}

impl Default for GraphOptions {
    fn default() -> Self {
        GraphOptions {
            dense_cap: DEFAULT_DENSE_CAP,
            allow_implicit: false,
            vertex_cap: 1 << 22,
        }
    }
}

#[derive(Clone, Debug)]
enum Storage {
    Dense(BitGraph),
    /// Adjacency is recomputed from `commutes` when asked.
    Implicit,
}

/// Partition of the vertices into sets of mutual true twins (equal closed
/// neighbourhoods) together with the graph they induce on the classes.
#[derive(Clone, Debug)]
pub struct TwinQuotient {
    /// Members of each class in ascending vertex order; classes are ordered
    /// by their first member.
    pub classes: Vec<Vec<usize>>,
    pub class_of: Vec<u32>,
    pub graph: BitGraph,
}

impl TwinQuotient {
    pub fn weights(&self) -> Vec<u64> {
        self.classes.iter().map(|c| c.len() as u64).collect()
    }
}

#[derive(Clone, Debug)]
pub struct CommutingGraph<'r> {
    ring: &'r Ring,
    vertices: Vec<Ut2>,
    storage: Storage,
    degrees: Vec<u64>,
    edges: u64,
}

pub fn build_graph(ring: &Ring) -> Result<CommutingGraph<'_>> {
    build_graph_with(ring, GraphOptions::default())
}

pub fn build_graph_with(ring: &Ring, opts: GraphOptions) -> Result<CommutingGraph<'_>> {
    let count = trimat::vertex_count(ring);
    if count > opts.dense_cap && !opts.allow_implicit {
        return Err(Error::CapExceeded {
            what: "vertex count",
            size: count as u128,
            cap: opts.dense_cap as u128,
        });
    }
    let vertices = trimat::enumerate_vertices(ring, opts.vertex_cap)?;
    let n = vertices.len();
    if count <= opts.dense_cap {
        let mut adj = BitGraph::new(n);
        for i in 0..n {
            let a = vertices[i];
            for (j, b) in vertices.iter().enumerate().skip(i + 1) {
                if trimat::commutes_unchecked(ring, &a, b) {
                    adj.add_edge(i, j);
                }
            }
        }
        let degrees: Vec<u64> = (0..n).map(|v| adj.degree(v) as u64).collect();
        let edges = degrees.iter().sum::<u64>() / 2;
        Ok(CommutingGraph {
            ring,
            vertices,
            storage: Storage::Dense(adj),
            degrees,
            edges,
        })
    } else {
        let mut graph = CommutingGraph {
            ring,
            vertices,
            storage: Storage::Implicit,
            degrees: Vec::new(),
            edges: 0,
        };
        let q = graph.twin_quotient();
        let sizes = q.weights();
        let class_degree: Vec<u64> = (0..q.classes.len())
            .map(|c| sizes[c] - 1 + q.graph.neighbors(c).map(|d| sizes[d]).sum::<u64>())
            .collect();
        graph.degrees = q
            .class_of
            .iter()
            .map(|&c| class_degree[c as usize])
            .collect();
        graph.edges = graph.degrees.iter().sum::<u64>() / 2;
        Ok(graph)
    }
}

impl<'r> CommutingGraph<'r> {
    pub fn ring(&self) -> &'r Ring {
        self.ring
    }

    pub fn vertices(&self) -> &[Ut2] {
        &self.vertices
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> u64 {
        self.edges
    }

    pub fn is_dense(&self) -> bool {
        matches!(self.storage, Storage::Dense(_))
    }

    /// Dense adjacency, if stored.
    pub fn adjacency(&self) -> Option<&BitGraph> {
        match &self.storage {
            Storage::Dense(g) => Some(g),
            Storage::Implicit => None,
        }
    }

    pub fn degree(&self, v: usize) -> u64 {
        self.degrees[v]
    }

    pub fn degrees(&self) -> &[u64] {
        &self.degrees
    }

    pub fn is_adjacent(&self, u: usize, v: usize) -> bool {
        match &self.storage {
            Storage::Dense(g) => g.has_edge(u, v),
            Storage::Implicit => {
                u != v
                    && trimat::commutes_unchecked(self.ring, &self.vertices[u], &self.vertices[v])
            }
        }
    }

    /// Index of a vertex; vertices are sorted, so this is a binary search.
    pub fn index_of(&self, m: &Ut2) -> Option<usize> {
        self.vertices.binary_search(m).ok()
    }

    pub fn class_of(&self, v: usize) -> Class {
        trimat::class_of(self.ring, &self.vertices[v]).expect("vertices are noncentral")
    }

    /// `sum_v deg(v) == 2 |E|`.
    pub fn handshake_holds(&self) -> bool {
        let total: u64 = self.degrees.iter().sum();
        let counted = match &self.storage {
            Storage::Dense(g) => g.edge_count(),
            Storage::Implicit => self.edges,
        };
        total == 2 * counted
    }

    /// Degree sum over each class `A_i*`.
    pub fn class_degree_sums(&self) -> [u64; 8] {
        let mut sums = [0u64; 8];
        for v in 0..self.vertices.len() {
            sums[self.class_of(v).index()] += self.degrees[v];
        }
        sums
    }

    /// Groups vertices into classes of true twins. Dense graphs are grouped by
    /// comparing closed neighbourhood rows; implicit graphs by central-shift
    /// coset, whose members share a centralizer.
    pub fn twin_quotient(&self) -> TwinQuotient {
        let n = self.vertices.len();
        let mut class_of = vec![u32::MAX; n];
        let mut classes: Vec<Vec<usize>> = Vec::new();
        match &self.storage {
            Storage::Dense(g) => {
                let mut closed = vec![0u64; g.words()];
                let mut seen: HashMap<Vec<u64>, u32> = HashMap::new();
                for (v, slot) in class_of.iter_mut().enumerate() {
                    closed.copy_from_slice(g.row(v));
                    bits::insert(&mut closed, v);
                    let next = classes.len() as u32;
                    let c = *seen.entry(closed.clone()).or_insert(next);
                    if c == next {
                        classes.push(Vec::new());
                    }
                    classes[c as usize].push(v);
                    *slot = c;
                }
            }
            Storage::Implicit => {
                let r = self.ring.order() as usize;
                let mut by_pair: HashMap<usize, u32> = HashMap::new();
                for (v, m) in self.vertices.iter().enumerate() {
                    let canon = trimat::canonicalize(self.ring, m).matrix;
                    let key = canon.x.value() as usize * r + canon.y.value() as usize;
                    let next = classes.len() as u32;
                    let c = *by_pair.entry(key).or_insert(next);
                    if c == next {
                        classes.push(Vec::new());
                    }
                    classes[c as usize].push(v);
                    class_of[v] = c;
                }
            }
        }
        let k = classes.len();
        let mut graph = BitGraph::new(k);
        for a in 0..k {
            for b in a + 1..k {
                if self.is_adjacent(classes[a][0], classes[b][0]) {
                    graph.add_edge(a, b);
                }
            }
        }
        TwinQuotient {
            classes,
            class_of,
            graph,
        }
    }
}
