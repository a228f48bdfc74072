//! Exact maximum (weight) clique search.
//!
//! Branch and bound over bit sets: vertices are relabelled in degeneracy
//! order, candidate sets are greedily coloured at every node and the colour
//! classes give the bound (sum of the heaviest weight per class). Ties are
//! always broken by the lower vertex index so witnesses are reproducible.
//! Maximum cliques are counted with Bron–Kerbosch using Tomita pivoting.

use std::time::{Duration, Instant};

use super::bits::{self, Adjacency, BitGraph};

/// Wall-clock allowance for an extremal search.
#[derive(Clone, Debug)]
pub struct Budget {
    deadline: Option<Instant>,
    ticks: u64,
    exhausted: bool,
}

impl Budget {
    pub fn unlimited() -> Budget {
        Budget {
            deadline: None,
            ticks: 0,
            exhausted: false,
        }
    }

    pub fn new(limit: Duration) -> Budget {
        Budget {
            deadline: Some(Instant::now() + limit),
            ticks: 0,
            exhausted: false,
        }
    }

    pub fn seconds(secs: f64) -> Budget {
        Budget::new(Duration::from_secs_f64(secs))
    }

    pub fn is_exhausted(&self) -> bool {
        self.exhausted
    }

    /// Counts one search node; returns true once the deadline has passed.
    #[inline]
    pub(crate) fn tick(&mut self) -> bool {
        if self.exhausted {
            return true;
        }
        self.ticks += 1;
        if self.ticks.is_multiple_of(1024) {
            if let Some(d) = self.deadline {
                if Instant::now() >= d {
                    self.exhausted = true;
                }
            }
        }
        self.exhausted
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliqueSearch {
    /// Weight of the best clique found (exact when `exact`).
    pub value: u64,
    pub exact: bool,
    /// Vertices of the best clique found, ascending.
    pub witness: Vec<usize>,
    /// Proven upper bound; equals `value` when `exact`.
    pub upper_bound: u64,
}

/// Smallest-last ordering, reversed so the densest core comes first.
pub fn degeneracy_order<A: Adjacency>(g: &A) -> Vec<usize> {
    let n = g.vertex_count();
    let mut degree: Vec<usize> = (0..n).map(|v| g.degree_of(v)).collect();
    let mut remaining = bits::full(n);
    let mut hit = vec![0u64; remaining.len()];
    let mut sequence = Vec::with_capacity(n);
    for _ in 0..n {
        let v = bits::ones(&remaining)
            .min_by_key(|&v| (degree[v], v))
            .unwrap();
        bits::remove(&mut remaining, v);
        sequence.push(v);
        g.intersect_into(v, &remaining, &mut hit);
        for u in bits::ones(&hit) {
            degree[u] -= 1;
        }
    }
    sequence.reverse();
    sequence
}

fn relabel<A: Adjacency>(g: &A, order: &[usize]) -> BitGraph {
    let n = order.len();
    let mut h = BitGraph::new(n);
    for i in 0..n {
        for j in i + 1..n {
            if g.adjacent(order[i], order[j]) {
                h.add_edge(i, j);
            }
        }
    }
    h
}

/// Greedy colouring of `cand` in index order. Returns the vertices grouped by
/// colour and, for each, the bound accumulated up to its colour class.
fn colour_bounds(g: &BitGraph, weights: &[u64], cand: &[u64]) -> (Vec<usize>, Vec<u64>) {
    let mut left = cand.to_vec();
    let mut verts = Vec::new();
    let mut bounds = Vec::new();
    let mut acc = 0u64;
    let mut avail = vec![0u64; cand.len()];
    while !bits::is_empty(&left) {
        avail.copy_from_slice(&left);
        let start = verts.len();
        let mut heaviest = 0u64;
        while let Some(u) = bits::first(&avail) {
            verts.push(u);
            heaviest = heaviest.max(weights[u]);
            bits::remove(&mut left, u);
            bits::remove(&mut avail, u);
            for (a, r) in avail.iter_mut().zip(g.row(u)) {
                *a &= !r;
            }
        }
        acc += heaviest;
        bounds.extend(std::iter::repeat_n(acc, verts.len() - start));
    }
    (verts, bounds)
}

struct Search<'a> {
    g: &'a BitGraph,
    weights: &'a [u64],
    best: u64,
    best_set: Vec<usize>,
    current: Vec<usize>,
    budget: &'a mut Budget,
}

impl Search<'_> {
    fn expand(&mut self, mut cand: Vec<u64>, weight: u64) {
        if self.budget.tick() {
            return;
        }
        let (verts, bounds) = colour_bounds(self.g, self.weights, &cand);
        let mut next = vec![0u64; cand.len()];
        for k in (0..verts.len()).rev() {
            if weight + bounds[k] <= self.best || self.budget.is_exhausted() {
                return;
            }
            let v = verts[k];
            let w = weight + self.weights[v];
            self.current.push(v);
            for ((n, c), r) in next.iter_mut().zip(&cand).zip(self.g.row(v)) {
                *n = c & r;
            }
            if bits::is_empty(&next) {
                if w > self.best {
                    self.best = w;
                    self.best_set = self.current.clone();
                }
            } else {
                self.expand(next.clone(), w);
            }
            self.current.pop();
            bits::remove(&mut cand, v);
        }
    }
}

/// Maximum-weight clique. Weights must be positive.
pub fn max_weight_clique<A: Adjacency>(
    g: &A,
    weights: &[u64],
    budget: &mut Budget,
) -> CliqueSearch {
    let n = g.vertex_count();
    assert_eq!(weights.len(), n);
    if n == 0 {
        return CliqueSearch {
            value: 0,
            exact: true,
            witness: Vec::new(),
            upper_bound: 0,
        };
    }
    let order = degeneracy_order(g);
    let h = relabel(g, &order);
    let w: Vec<u64> = order.iter().map(|&v| weights[v]).collect();
    let all = bits::full(n);
    let (_, root_bounds) = colour_bounds(&h, &w, &all);
    let root_bound = root_bounds.last().copied().unwrap_or(0);

    // seed with the heaviest single vertex (lowest index on ties)
    let seed = (0..n)
        .max_by_key(|&v| (w[v], std::cmp::Reverse(v)))
        .unwrap();
    let mut search = Search {
        g: &h,
        weights: &w,
        best: w[seed],
        best_set: vec![seed],
        current: Vec::new(),
        budget,
    };
    search.expand(all, 0);
    let exact = !search.budget.is_exhausted();
    let mut witness: Vec<usize> = search.best_set.iter().map(|&i| order[i]).collect();
    witness.sort_unstable();
    CliqueSearch {
        value: search.best,
        exact,
        witness,
        upper_bound: if exact {
            search.best
        } else {
            root_bound.max(search.best)
        },
    }
}

pub fn max_clique<A: Adjacency>(g: &A, budget: &mut Budget) -> CliqueSearch {
    max_weight_clique(g, &vec![1; g.vertex_count()], budget)
}

/// Maximum independent set as a maximum clique of the complement.
pub fn max_independent_set(g: &BitGraph, budget: &mut Budget) -> CliqueSearch {
    max_clique(&bits::Complement(g), budget)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CliqueCount {
    pub count: u64,
    pub exact: bool,
}

struct Counter<'a, A: Adjacency> {
    g: &'a A,
    weights: &'a [u64],
    target: u64,
    count: u64,
    budget: &'a mut Budget,
    words: usize,
}

impl<A: Adjacency> Counter<'_, A> {
    fn weight_of(&self, set: &[u64]) -> u64 {
        bits::ones(set).map(|v| self.weights[v]).sum()
    }

    fn bk(&mut self, weight: u64, mut p: Vec<u64>, mut x: Vec<u64>) {
        if self.budget.tick() {
            return;
        }
        if bits::is_empty(&p) {
            if bits::is_empty(&x) && weight == self.target {
                self.count += 1;
            }
            return;
        }
        if weight + self.weight_of(&p) < self.target {
            return;
        }
        let mut tmp = vec![0u64; self.words];
        let mut pivot = None;
        let mut pivot_hits = 0usize;
        for u in bits::ones(&p).chain(bits::ones(&x)) {
            self.g.intersect_into(u, &p, &mut tmp);
            let hits = bits::count(&tmp);
            if pivot.is_none() || hits > pivot_hits {
                pivot = Some(u);
                pivot_hits = hits;
            }
        }
        let pivot = pivot.unwrap();
        self.g.intersect_into(pivot, &p, &mut tmp);
        let branch: Vec<usize> = bits::ones(&p).filter(|&v| !bits::test(&tmp, v)).collect();
        for v in branch {
            if self.budget.is_exhausted() {
                return;
            }
            let mut np = vec![0u64; self.words];
            let mut nx = vec![0u64; self.words];
            self.g.intersect_into(v, &p, &mut np);
            self.g.intersect_into(v, &x, &mut nx);
            self.bk(weight + self.weights[v], np, nx);
            bits::remove(&mut p, v);
            bits::insert(&mut x, v);
        }
    }
}

/// Number of distinct cliques of weight exactly `target`, where `target` is
/// the maximum clique weight (so every such clique is maximal).
pub fn count_max_weight_cliques<A: Adjacency>(
    g: &A,
    weights: &[u64],
    target: u64,
    budget: &mut Budget,
) -> CliqueCount {
    let n = g.vertex_count();
    let words = bits::words_for(n);
    let mut counter = Counter {
        g,
        weights,
        target,
        count: 0,
        budget,
        words,
    };
    counter.bk(0, bits::full(n), vec![0; words]);
    CliqueCount {
        count: counter.count,
        exact: !counter.budget.is_exhausted(),
    }
}

pub fn is_clique<A: Adjacency>(g: &A, set: &[usize]) -> bool {
    set.iter()
        .enumerate()
        .all(|(i, &u)| set[i + 1..].iter().all(|&v| u != v && g.adjacent(u, v)))
}
