//! Brute-force ground truth.
//!
//! Everything here multiplies matrices out in full and compares the
//! products; none of it relies on central-shift cosets, twin classes or any
//! closed form.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::CommutingGraph;
use crate::ring::{crt_map, Ring};
use crate::trimat::{self, Ut2};

pub const NAIVE_VERTEX_CAP: u64 = 20_000;
pub const CENTRALIZER_CAP: u64 = 1 << 20;
pub const EXHAUSTIVE_VERTEX_CAP: usize = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    NaivePairs,
    ExhaustiveCentralizer,
    ExhaustiveSearch,
    CrtAdjacency,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleResult {
    pub quantity: String,
    pub value: u64,
    pub method: Method,
    /// Number of objects enumerated.
    pub instance_size: u64,
}

fn commute_by_product(ring: &Ring, a: &Ut2, b: &Ut2) -> bool {
    trimat::mul(ring, a, b).expect("same ring") == trimat::mul(ring, b, a).expect("same ring")
}

/// Unordered pairs of distinct noncentral matrices with `AB = BA`.
pub fn naive_edge_count(ring: &Ring) -> Result<OracleResult> {
    let vs = trimat::enumerate_vertices(ring, NAIVE_VERTEX_CAP)?;
    let mut edges = 0u64;
    for (i, a) in vs.iter().enumerate() {
        for b in &vs[i + 1..] {
            if commute_by_product(ring, a, b) {
                edges += 1;
            }
        }
    }
    let n = vs.len() as u64;
    Ok(OracleResult {
        quantity: "edges".into(),
        value: edges,
        method: Method::NaivePairs,
        instance_size: n * (n - 1) / 2,
    })
}

/// Degree of `a`: matrices of `Tr(R)` commuting with it, other than itself
/// and the scalars.
pub fn exhaustive_centralizer_degree(ring: &Ring, a: &Ut2) -> Result<OracleResult> {
    if !a.belongs_to(ring) {
        return Err(Error::MixedRings);
    }
    if trimat::is_central(ring, a) {
        return Err(Error::CentralMatrix);
    }
    let r = ring.order() as u128;
    if r * r * r > CENTRALIZER_CAP as u128 {
        return Err(Error::CapExceeded {
            what: "matrix ring order",
            size: r * r * r,
            cap: CENTRALIZER_CAP as u128,
        });
    }
    let mut degree = 0u64;
    for x in ring.elements() {
        for y in ring.elements() {
            for z in ring.elements() {
                let b = Ut2::new(x, y, z);
                if b != *a && !trimat::is_central(ring, &b) && commute_by_product(ring, a, &b) {
                    degree += 1;
                }
            }
        }
    }
    Ok(OracleResult {
        quantity: format!("degree of {}", a.literal(ring)),
        value: degree,
        method: Method::ExhaustiveCentralizer,
        instance_size: (r * r * r) as u64,
    })
}

/// Exact extremal values of a graph on at most 64 vertices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExhaustiveExtremal {
    pub omega: u64,
    pub alpha: u64,
    pub omega_witness: Vec<usize>,
    pub alpha_witness: Vec<usize>,
    /// Number of cliques of size `omega`.
    pub max_clique_count: u64,
    /// Number of independent sets of size `alpha`.
    pub max_independent_count: u64,
}

struct SubsetSearch {
    adj: Vec<u64>,
    best: u32,
    best_set: u64,
    count: u64,
}

impl SubsetSearch {
    /// Visits every set `current ∪ S` with `S ⊆ cand` that stays pairwise
    /// adjacent, each exactly once. The only pruning is that a set which
    /// cannot reach the best size so far is not extended.
    fn visit(&mut self, current: u64, cand: u64) {
        let size = current.count_ones();
        if size > self.best {
            self.best = size;
            self.best_set = current;
            self.count = 0;
        }
        if size == self.best {
            self.count += 1;
        }
        if size + cand.count_ones() < self.best {
            return;
        }
        let mut rest = cand;
        while rest != 0 {
            let v = rest.trailing_zeros();
            rest &= rest - 1;
            self.visit(current | 1 << v, rest & self.adj[v as usize]);
        }
    }
}

fn largest_sets(adj: Vec<u64>) -> (u32, Vec<usize>, u64) {
    let n = adj.len();
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut s = SubsetSearch {
        adj,
        best: 0,
        best_set: 0,
        count: 0,
    };
    s.visit(0, all);
    let witness = (0..n).filter(|&v| s.best_set >> v & 1 == 1).collect();
    (s.best, witness, s.count)
}

/// ω and α by full subset search, with adjacency recomputed from products.
pub fn exhaustive_extremal(graph: &CommutingGraph<'_>) -> Result<ExhaustiveExtremal> {
    let n = graph.vertex_count();
    if n > EXHAUSTIVE_VERTEX_CAP {
        return Err(Error::CapExceeded {
            what: "exhaustive search vertices",
            size: n as u128,
            cap: EXHAUSTIVE_VERTEX_CAP as u128,
        });
    }
    let ring = graph.ring();
    let vs = graph.vertices();
    let mut adj = vec![0u64; n];
    let mut non = vec![0u64; n];
    for u in 0..n {
        for v in 0..n {
            if u != v {
                if commute_by_product(ring, &vs[u], &vs[v]) {
                    adj[u] |= 1 << v;
                } else {
                    non[u] |= 1 << v;
                }
            }
        }
    }
    let (omega, omega_witness, max_clique_count) = largest_sets(adj);
    let (alpha, alpha_witness, max_independent_count) = largest_sets(non);
    Ok(ExhaustiveExtremal {
        omega: omega as u64,
        alpha: alpha as u64,
        omega_witness,
        alpha_witness,
        max_clique_count,
        max_independent_count,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "kind")]
pub enum CrtMismatch {
    /// A noncentral matrix lifted to a central one.
    LostNoncentrality { source: String },
    /// Two matrices lifted to the same image.
    NotInjective { first: String, second: String },
    /// Commutation differs before and after lifting.
    Adjacency { first: String, second: String },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrtCheck {
    pub holds: bool,
    pub result: OracleResult,
    pub mismatch: Option<CrtMismatch>,
}

/// Lifts `Z_mn -> Z_m x Z_n` entrywise and checks it is a graph isomorphism
/// of the commuting graphs.
pub fn verify_crt_iso(m: u64, n: u64) -> Result<CrtCheck> {
    let map = crt_map(m, n)?;
    let (src, dst) = (map.source(), map.target());
    let vs = trimat::enumerate_vertices(src, NAIVE_VERTEX_CAP)?;
    let lift = |a: &Ut2| -> Result<Ut2> {
        Ok(Ut2::new(map.apply(a.x)?, map.apply(a.y)?, map.apply(a.z)?))
    };
    let images = vs.iter().map(lift).collect::<Result<Vec<_>>>()?;
    let done = |mismatch: Option<CrtMismatch>, checked: u64| CrtCheck {
        holds: mismatch.is_none(),
        result: OracleResult {
            quantity: format!("CRT adjacency Z_{} -> Z_{m} x Z_{n}", m * n),
            value: checked,
            method: Method::CrtAdjacency,
            instance_size: vs.len() as u64,
        },
        mismatch,
    };
    let mut seen = HashSet::new();
    for (i, (a, b)) in vs.iter().zip(&images).enumerate() {
        if trimat::is_central(dst, b) {
            let source = a.literal(src);
            return Ok(done(
                Some(CrtMismatch::LostNoncentrality { source }),
                i as u64,
            ));
        }
        if !seen.insert(*b) {
            let j = images.iter().position(|c| c == b).expect("seen before");
            return Ok(done(
                Some(CrtMismatch::NotInjective {
                    first: vs[j].literal(src),
                    second: a.literal(src),
                }),
                i as u64,
            ));
        }
    }
    let mut checked = 0u64;
    for i in 0..vs.len() {
        for j in i + 1..vs.len() {
            checked += 1;
            if commute_by_product(src, &vs[i], &vs[j])
                != commute_by_product(dst, &images[i], &images[j])
            {
                return Ok(done(
                    Some(CrtMismatch::Adjacency {
                        first: vs[i].literal(src),
                        second: vs[j].literal(src),
                    }),
                    checked,
                ));
            }
        }
    }
    // equal vertex counts and injectivity make the lift a bijection
    debug_assert_eq!(vs.len() as u64, trimat::vertex_count(dst));
    Ok(done(None, checked))
}
