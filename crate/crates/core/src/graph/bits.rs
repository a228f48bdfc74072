//! Dense bit-row adjacency.

#[inline]
pub(crate) fn words_for(n: usize) -> usize {
    n.div_ceil(64)
}

#[inline]
pub(crate) fn test(set: &[u64], i: usize) -> bool {
    set[i >> 6] >> (i & 63) & 1 == 1
}

#[inline]
pub(crate) fn insert(set: &mut [u64], i: usize) {
    set[i >> 6] |= 1 << (i & 63);
}

#[inline]
pub(crate) fn remove(set: &mut [u64], i: usize) {
    set[i >> 6] &= !(1 << (i & 63));
}

pub(crate) fn count(set: &[u64]) -> usize {
    set.iter().map(|w| w.count_ones() as usize).sum()
}

pub(crate) fn is_empty(set: &[u64]) -> bool {
    set.iter().all(|&w| w == 0)
}

pub(crate) fn full(n: usize) -> Vec<u64> {
    let mut v = vec![u64::MAX; words_for(n)];
    if !n.is_multiple_of(64) {
        if let Some(last) = v.last_mut() {
            *last = (1u64 << (n % 64)) - 1;
        }
    }
    v
}

pub(crate) fn first(set: &[u64]) -> Option<usize> {
    set.iter()
        .position(|&w| w != 0)
        .map(|i| i * 64 + set[i].trailing_zeros() as usize)
}

/// Iterates the set bits in increasing order.
pub(crate) fn ones(set: &[u64]) -> impl Iterator<Item = usize> + '_ {
    set.iter().enumerate().flat_map(|(wi, &w)| {
        let mut w = w;
        std::iter::from_fn(move || {
            if w == 0 {
                return None;
            }
            let b = w.trailing_zeros() as usize;
            w &= w - 1;
            Some(wi * 64 + b)
        })
    })
}

/// Simple undirected graph stored as one bit row per vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BitGraph {
    n: usize,
    words: usize,
    rows: Vec<u64>,
}

impl BitGraph {
    pub fn new(n: usize) -> BitGraph {
        let words = words_for(n);
        BitGraph {
            n,
            words,
            rows: vec![0; n * words],
        }
    }

    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> BitGraph {
        let mut g = BitGraph::new(n);
        for (u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    #[inline]
    pub fn words(&self) -> usize {
        self.words
    }

    #[inline]
    pub fn row(&self, v: usize) -> &[u64] {
        &self.rows[v * self.words..(v + 1) * self.words]
    }

    #[inline]
    pub(crate) fn row_mut(&mut self, v: usize) -> &mut [u64] {
        &mut self.rows[v * self.words..(v + 1) * self.words]
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u != v, "self-loop at {u}");
        let w = self.words;
        insert(&mut self.rows[u * w..(u + 1) * w], v);
        insert(&mut self.rows[v * w..(v + 1) * w], u);
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        test(self.row(u), v)
    }

    pub fn degree(&self, v: usize) -> usize {
        count(self.row(v))
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        ones(self.row(v))
    }

    pub fn edge_count(&self) -> u64 {
        (0..self.n).map(|v| self.degree(v) as u64).sum::<u64>() / 2
    }

    pub fn complement(&self) -> BitGraph {
        let mut g = BitGraph::new(self.n);
        let all = full(self.n);
        for v in 0..self.n {
            let row = g.row_mut(v);
            for (dst, (src, mask)) in row.iter_mut().zip(self.row(v).iter().zip(&all)) {
                *dst = !src & mask;
            }
            remove(row, v);
        }
        g
    }

    /// Subgraph induced on `keep`, renumbered in the given order.
    pub fn induced(&self, keep: &[usize]) -> BitGraph {
        let mut g = BitGraph::new(keep.len());
        for (i, &u) in keep.iter().enumerate() {
            for (j, &v) in keep.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }
}

/// Neighbourhood access used by the clique solvers, so a complement can be
/// searched without materialising it.
pub trait Adjacency {
    fn vertex_count(&self) -> usize;
    fn adjacent(&self, u: usize, v: usize) -> bool;
    /// `dst = src ∩ N(v)`.
    fn intersect_into(&self, v: usize, src: &[u64], dst: &mut [u64]);
    fn degree_of(&self, v: usize) -> usize;
}

impl Adjacency for BitGraph {
    fn vertex_count(&self) -> usize {
        self.n
    }

    #[inline]
    fn adjacent(&self, u: usize, v: usize) -> bool {
        self.has_edge(u, v)
    }

    #[inline]
    fn intersect_into(&self, v: usize, src: &[u64], dst: &mut [u64]) {
        for ((d, s), r) in dst.iter_mut().zip(src).zip(self.row(v)) {
            *d = s & r;
        }
    }

    fn degree_of(&self, v: usize) -> usize {
        self.degree(v)
    }
}

/// Complement view: rows are negated on the fly.
#[derive(Clone, Copy, Debug)]
pub struct Complement<'a>(pub &'a BitGraph);

impl Adjacency for Complement<'_> {
    fn vertex_count(&self) -> usize {
        self.0.n
    }

    #[inline]
    fn adjacent(&self, u: usize, v: usize) -> bool {
        u != v && !self.0.has_edge(u, v)
    }

    #[inline]
    fn intersect_into(&self, v: usize, src: &[u64], dst: &mut [u64]) {
        for ((d, s), r) in dst.iter_mut().zip(src).zip(self.0.row(v)) {
            *d = s & !r;
        }
        remove(dst, v);
    }

    fn degree_of(&self, v: usize) -> usize {
        self.0.n - 1 - self.0.degree(v)
    }
}
