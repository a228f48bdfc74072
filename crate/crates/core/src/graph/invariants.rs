//! Components, diameter, clique and independence numbers.
//!
//! All quantities are computed on the twin quotient: true twins share every
//! distance and either all or none of a class lies in a maximum clique, so
//! ω is a maximum-weight clique of the quotient (weights = class sizes) and α
//! is a maximum independent set of the quotient (one vertex per class).

use std::collections::{BTreeMap, VecDeque};
use std::fmt;
use std::time::Duration;

use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::bits::{self, BitGraph};
use super::clique::{self, Budget};
use super::{CommutingGraph, TwinQuotient};
use crate::trimat;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Diameter {
    Finite(u64),
    Infinite,
}

impl Diameter {
    pub fn is_finite(self) -> bool {
        matches!(self, Diameter::Finite(_))
    }
}

impl fmt::Display for Diameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Diameter::Finite(d) => write!(f, "{d}"),
            Diameter::Infinite => f.write_str("infinity"),
        }
    }
}

impl Serialize for Diameter {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Diameter::Finite(d) => s.serialize_u64(*d),
            Diameter::Infinite => s.serialize_str("infinity"),
        }
    }
}

impl<'de> Deserialize<'de> for Diameter {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        struct V;
        impl Visitor<'_> for V {
            type Value = Diameter;
            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("a non-negative integer or \"infinity\"")
            }
            fn visit_u64<E: de::Error>(self, v: u64) -> Result<Diameter, E> {
                Ok(Diameter::Finite(v))
            }
            fn visit_i64<E: de::Error>(self, v: i64) -> Result<Diameter, E> {
                u64::try_from(v)
                    .map(Diameter::Finite)
                    .map_err(|_| E::custom("negative diameter"))
            }
            fn visit_str<E: de::Error>(self, v: &str) -> Result<Diameter, E> {
                if v == "infinity" {
                    Ok(Diameter::Infinite)
                } else {
                    Err(E::invalid_value(de::Unexpected::Str(v), &self))
                }
            }
        }
        d.deserialize_any(V)
    }
}

/// An extremal quantity. When `exact` is false the true value lies in
/// `[value, upper_bound]` and `witness` still realises `value`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Extremal {
    pub value: u64,
    pub exact: bool,
    pub witness: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub upper_bound: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantReport {
    pub ring: String,
    pub vertices: u64,
    pub edges: u64,
    #[serde(with = "histogram")]
    pub degree_histogram: BTreeMap<u64, u64>,
    pub regular: bool,
    /// Component sizes, ordered by smallest member.
    pub components: Vec<u64>,
    pub diameter: Diameter,
    pub omega: Extremal,
    pub alpha: Extremal,
    pub max_clique_count: Option<u64>,
}

/// JSON object keys are strings; parse them back explicitly so the map also
/// survives being flattened into a larger report.
mod histogram {
    use std::collections::BTreeMap;

    use serde::de::Error;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(map: &BTreeMap<u64, u64>, s: S) -> Result<S::Ok, S::Error> {
        s.collect_map(map.iter().map(|(k, v)| (k.to_string(), v)))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BTreeMap<u64, u64>, D::Error> {
        BTreeMap::<String, u64>::deserialize(d)?
            .into_iter()
            .map(|(k, v)| k.parse().map(|k| (k, v)).map_err(D::Error::custom))
            .collect()
    }
}

impl InvariantReport {
    pub fn min_degree(&self) -> Option<u64> {
        self.degree_histogram.keys().next().copied()
    }

    pub fn max_degree(&self) -> Option<u64> {
        self.degree_histogram.keys().next_back().copied()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// Component sizes by breadth-first search, ordered by smallest member.
pub fn components(g: &BitGraph) -> Vec<u64> {
    component_labels(g, None).1
}

fn component_labels(g: &BitGraph, weights: Option<&[u64]>) -> (Vec<u32>, Vec<u64>) {
    let n = g.len();
    let mut label = vec![u32::MAX; n];
    let mut sizes = Vec::new();
    let mut queue = VecDeque::new();
    for s in 0..n {
        if label[s] != u32::MAX {
            continue;
        }
        let id = sizes.len() as u32;
        let mut size = 0u64;
        label[s] = id;
        queue.push_back(s);
        while let Some(u) = queue.pop_front() {
            size += weights.map_or(1, |w| w[u]);
            for v in g.neighbors(u) {
                if label[v] == u32::MAX {
                    label[v] = id;
                    queue.push_back(v);
                }
            }
        }
        sizes.push(size);
    }
    (label, sizes)
}

/// Largest BFS level reached from `s`, using bit-parallel frontiers.
fn eccentricity(g: &BitGraph, s: usize) -> u64 {
    let mut seen = vec![0u64; g.words()];
    bits::insert(&mut seen, s);
    let mut frontier = seen.clone();
    let mut next = vec![0u64; g.words()];
    let mut depth = 0;
    loop {
        next.iter_mut().for_each(|w| *w = 0);
        for u in bits::ones(&frontier) {
            for (a, r) in next.iter_mut().zip(g.row(u)) {
                *a |= r;
            }
        }
        for (a, s) in next.iter_mut().zip(&seen) {
            *a &= !s;
        }
        if bits::is_empty(&next) {
            return depth;
        }
        depth += 1;
        for (s, a) in seen.iter_mut().zip(&next) {
            *s |= a;
        }
        std::mem::swap(&mut frontier, &mut next);
    }
}

/// Diameter by BFS from every vertex; infinite when disconnected.
pub fn all_sources_diameter(g: &BitGraph) -> Diameter {
    if components(g).len() > 1 {
        return Diameter::Infinite;
    }
    Diameter::Finite((0..g.len()).map(|s| eccentricity(g, s)).max().unwrap_or(0))
}

/// Distances between distinct vertices of distinct classes equal quotient
/// distances; twins inside a class are at distance 1.
fn quotient_diameter(q: &TwinQuotient, component_count: usize) -> Diameter {
    if component_count > 1 {
        return Diameter::Infinite;
    }
    let across = (0..q.graph.len())
        .map(|s| eccentricity(&q.graph, s))
        .max()
        .unwrap_or(0);
    let within = u64::from(q.classes.iter().any(|c| c.len() > 1));
    Diameter::Finite(across.max(within))
}

fn expand(q: &TwinQuotient, classes: &[usize], all_members: bool) -> Vec<usize> {
    let mut out: Vec<usize> = if all_members {
        classes
            .iter()
            .flat_map(|&c| q.classes[c].iter().copied())
            .collect()
    } else {
        classes.iter().map(|&c| q.classes[c][0]).collect()
    };
    out.sort_unstable();
    out
}

fn extremal(search: clique::CliqueSearch, witness: Vec<usize>) -> Extremal {
    Extremal {
        value: search.value,
        exact: search.exact,
        witness,
        upper_bound: (!search.exact).then_some(search.upper_bound),
    }
}

/// Checks a witness against `commutes` directly, independent of the stored
/// adjacency.
fn verify_witness(graph: &CommutingGraph<'_>, set: &[usize], want_edges: bool) -> bool {
    let ring = graph.ring();
    let vs = graph.vertices();
    set.iter().enumerate().all(|(i, &u)| {
        set[i + 1..].iter().all(|&v| {
            u != v && trimat::commutes(ring, &vs[u], &vs[v]).expect("same ring") == want_edges
        })
    })
}

/// Full invariant report. Each extremal search gets its own `budget`.
pub fn invariants(graph: &CommutingGraph<'_>, budget: Duration) -> InvariantReport {
    let q = graph.twin_quotient();
    let weights = q.weights();

    let mut degree_histogram = BTreeMap::new();
    for &d in graph.degrees() {
        *degree_histogram.entry(d).or_insert(0u64) += 1;
    }
    let regular = degree_histogram.len() <= 1;

    let (_, components) = component_labels(&q.graph, Some(&weights));
    let diameter = quotient_diameter(&q, components.len());

    let omega_search = clique::max_weight_clique(&q.graph, &weights, &mut Budget::new(budget));
    let omega_witness = expand(&q, &omega_search.witness, true);
    assert!(
        verify_witness(graph, &omega_witness, true),
        "ω witness is not a clique"
    );
    let omega = extremal(omega_search, omega_witness);

    let alpha_search = clique::max_independent_set(&q.graph, &mut Budget::new(budget));
    let alpha_witness = expand(&q, &alpha_search.witness, false);
    assert!(
        verify_witness(graph, &alpha_witness, false),
        "α witness is not independent"
    );
    let alpha = extremal(alpha_search, alpha_witness);

    let max_clique_count = if omega.exact {
        let c = clique::count_max_weight_cliques(
            &q.graph,
            &weights,
            omega.value,
            &mut Budget::new(budget),
        );
        c.exact.then_some(c.count)
    } else {
        None
    };

    InvariantReport {
        ring: graph.ring().spec().to_string(),
        vertices: graph.vertex_count() as u64,
        edges: graph.edge_count(),
        degree_histogram,
        regular,
        components,
        diameter,
        omega,
        alpha,
        max_clique_count,
    }
}

/// Edge count of each component, in the order of [`InvariantReport::components`].
pub fn component_edge_counts(graph: &CommutingGraph<'_>) -> Vec<u64> {
    let q = graph.twin_quotient();
    let (labels, sizes) = component_labels(&q.graph, None);
    let mut twice = vec![0u64; sizes.len()];
    for (v, &c) in q.class_of.iter().enumerate() {
        twice[labels[c as usize] as usize] += graph.degree(v);
    }
    twice.into_iter().map(|t| t / 2).collect()
}

/// Number of maximum cliques of `graph`, given the exact clique number.
pub fn count_maximum_cliques(
    graph: &CommutingGraph<'_>,
    omega: u64,
    budget: Duration,
) -> clique::CliqueCount {
    let q = graph.twin_quotient();
    clique::count_max_weight_cliques(&q.graph, &q.weights(), omega, &mut Budget::new(budget))
}
