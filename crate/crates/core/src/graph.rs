//! Immutable simple undirected graphs.
//!
//! Vertices are `0..n`. Adjacency is kept both as sorted neighbor lists and,
//! for graphs of order at most 64, as one bitmask per vertex so domination
//! style searches can work on [`VertexSet`] words.

use std::fmt;

use crate::error::{Error, Result};

/// Default ceiling on graph order accepted by constructors.
pub const DEFAULT_MAX_ORDER: usize = 64;

/// A set of vertices of a graph with at most 64 vertices, packed into a word.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(pub u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn full(n: usize) -> Self {
        if n >= 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(v: usize) -> Self {
        VertexSet(1u64 << v)
    }

    pub fn from_vertices<I: IntoIterator<Item = usize>>(it: I) -> Self {
        it.into_iter().fold(VertexSet::EMPTY, |s, v| s.with(v))
    }

    #[inline]
    pub fn contains(self, v: usize) -> bool {
        v < 64 && self.0 >> v & 1 == 1
    }

    #[inline]
    pub fn with(self, v: usize) -> Self {
        VertexSet(self.0 | 1u64 << v)
    }

    #[inline]
    pub fn without(self, v: usize) -> Self {
        VertexSet(self.0 & !(1u64 << v))
    }

    #[inline]
    pub fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    #[inline]
    pub fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    #[inline]
    pub fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    #[inline]
    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(v)
            }
        })
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        VertexSet::from_vertices(iter)
    }
}

/// A simple undirected graph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<Vec<usize>>,
    masks: Vec<u64>,
    size: usize,
    label: Option<String>,
}

impl Graph {
    /// Builds a graph from an edge list, rejecting loops, repeated edges and
    /// out-of-range endpoints.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        Self::from_edges_with_max(n, edges, DEFAULT_MAX_ORDER)
    }

    pub fn from_edges_with_max<I>(n: usize, edges: I, max_order: usize) -> Result<Graph>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if n > max_order {
            return Err(Error::Overflow { order: n, max: max_order });
        }
        let mut adj = vec![Vec::new(); n];
        let mut size = 0;
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidVertex { vertex: u.max(v), order: n });
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("loop at vertex {u}")));
            }
            if adj[u].contains(&v) {
                return Err(Error::InvalidGraph(format!("repeated edge {u}-{v}")));
            }
            adj[u].push(v);
            adj[v].push(u);
            size += 1;
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        let masks = if n <= 64 {
            adj.iter()
                .map(|list| list.iter().fold(0u64, |m, &v| m | 1 << v))
                .collect()
        } else {
            Vec::new()
        };
        Ok(Graph { n, adj, masks, size, label: None })
    }

    /// Like [`Graph::from_edges`] but silently merges repeated edges.
    pub(crate) fn from_edge_set<I>(n: usize, edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut list: Vec<(usize, usize)> = edges
            .into_iter()
            .map(|(u, v)| if u < v { (u, v) } else { (v, u) })
            .collect();
        list.sort_unstable();
        list.dedup();
        Self::from_edges_with_max(n, list, usize::MAX)
    }

    pub fn empty(n: usize) -> Graph {
        Graph::from_edges_with_max(n, std::iter::empty(), usize::MAX).expect("edgeless graph")
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Graph {
        self.label = Some(label.into());
        self
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn size(&self) -> usize {
        self.size
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        if self.n <= 64 {
            self.masks[u] >> v & 1 == 1
        } else {
            self.adj[u].binary_search(&v).is_ok()
        }
    }

    /// Edges as `(u, v)` with `u < v`, in ascending order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    /// True when vertex bitmasks are available (order at most 64).
    pub fn fits_word(&self) -> bool {
        self.n <= 64
    }

    /// Open neighborhood N(v) as a bitmask. Requires order ≤ 64.
    #[inline]
    pub fn open_mask(&self, v: usize) -> VertexSet {
        VertexSet(self.masks[v])
    }

    /// Closed neighborhood N[v] as a bitmask. Requires order ≤ 64.
    #[inline]
    pub fn closed_mask(&self, v: usize) -> VertexSet {
        VertexSet(self.masks[v] | 1 << v)
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    /// Open and closed neighborhoods of a vertex set.
    pub fn neighborhoods(&self, s: VertexSet) -> (VertexSet, VertexSet) {
        let open = s
            .iter()
            .fold(VertexSet::EMPTY, |acc, v| acc.union(self.open_mask(v)));
        (open, open.union(s))
    }

    pub fn open_neighborhood(&self, s: VertexSet) -> VertexSet {
        self.neighborhoods(s).0
    }

    pub fn closed_neighborhood(&self, s: VertexSet) -> VertexSet {
        self.neighborhoods(s).1
    }

    /// True when every vertex lies in `N[s]`.
    pub fn dominates(&self, s: VertexSet) -> bool {
        self.closed_neighborhood(s) == self.vertex_set()
    }

    /// True when every vertex has a neighbor in `s`.
    pub fn totally_dominates(&self, s: VertexSet) -> bool {
        self.open_neighborhood(s) == self.vertex_set()
    }

    pub fn has_isolated_vertex(&self) -> bool {
        self.adj.iter().any(Vec::is_empty)
    }

    /// Subgraph induced by `vertices`, renumbered in ascending order.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Graph {
        let mut index = vec![usize::MAX; self.n];
        let mut sorted = vertices.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        for (i, &v) in sorted.iter().enumerate() {
            index[v] = i;
        }
        let edges = self
            .edges()
            .filter(|&(u, v)| index[u] != usize::MAX && index[v] != usize::MAX)
            .map(|(u, v)| (index[u], index[v]));
        Graph::from_edges_with_max(sorted.len(), edges, usize::MAX).expect("induced subgraph")
    }

    /// Graph with vertex `perm[i]` of `self` renamed to `i`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        let mut inverse = vec![0; self.n];
        for (i, &v) in perm.iter().enumerate() {
            inverse[v] = i;
        }
        let edges = self.edges().map(|(u, v)| (inverse[u], inverse[v]));
        let mut g = Graph::from_edges_with_max(self.n, edges, usize::MAX).expect("relabel");
        g.label = self.label.clone();
        g
    }

    /// Disjoint union, `other` shifted past the vertices of `self`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.n;
        let edges = self
            .edges()
            .chain(other.edges().map(|(u, v)| (u + shift, v + shift)));
        Graph::from_edges_with_max(self.n + other.n, edges, usize::MAX).expect("disjoint union")
    }

    /// Same vertex set and edge set, labels ignored.
    pub fn same_edges(&self, other: &Graph) -> bool {
        self.n == other.n && self.adj == other.adj
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("m", &self.size)
            .field("label", &self.label)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c4() -> Graph {
        Graph::from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap()
    }

    #[test]
    fn rejects_loops_and_multi_edges() {
        assert!(Graph::from_edges(2, [(0, 0)]).is_err());
        assert!(Graph::from_edges(2, [(0, 1), (1, 0)]).is_err());
        assert!(matches!(
            Graph::from_edges(2, [(0, 2)]),
            Err(Error::InvalidVertex { .. })
        ));
    }

    #[test]
    fn order_cap() {
        assert!(matches!(
            Graph::from_edges(65, std::iter::empty()),
            Err(Error::Overflow { order: 65, max: 64 })
        ));
        assert!(Graph::from_edges_with_max(65, std::iter::empty(), 100).is_ok());
    }

    #[test]
    fn neighborhoods_of_c4() {
        let g = c4();
        let (open, closed) = g.neighborhoods(VertexSet::singleton(0));
        assert_eq!(open.to_vec(), vec![1, 3]);
        assert_eq!(closed.to_vec(), vec![0, 1, 3]);
        assert_eq!(g.neighborhoods(VertexSet::EMPTY), (VertexSet::EMPTY, VertexSet::EMPTY));
    }

    #[test]
    fn adjacency_is_symmetric() {
        let g = c4();
        for (u, v) in g.edges() {
            assert!(g.has_edge(u, v) && g.has_edge(v, u));
        }
        assert_eq!(g.size(), 4);
    }

    #[test]
    fn induced_and_relabel() {
        let g = c4();
        let h = g.induced_subgraph(&[0, 1, 2]);
        assert_eq!(h.size(), 2);
        let r = g.relabel(&[0, 2, 1, 3]);
        assert!(r.has_edge(0, 2) && r.has_edge(2, 1));
        assert!(!r.has_edge(0, 1));
    }

    #[test]
    fn domination_predicates() {
        let g = c4();
        assert!(g.dominates(VertexSet::from_vertices([0, 2])));
        assert!(!g.dominates(VertexSet::singleton(0)));
        assert!(g.totally_dominates(VertexSet::from_vertices([0, 1])));
        assert!(!g.totally_dominates(VertexSet::from_vertices([0, 2])));
    }
}
