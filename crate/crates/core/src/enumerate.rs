//! Small-graph corpus: canonical forms and exhaustive enumeration.
//!
//! The canonical form of a graph is the lexicographically smallest adjacency
//! bit-string over all vertex permutations, reading the upper triangle
//! column by column: `(0,1), (0,2), (1,2), (0,3), (1,3), (2,3), …`. Column
//! order lets the permutation search prune on prefixes.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::metrics::is_connected;

/// Largest order accepted by [`canonical_form`].
pub const CANONICAL_MAX_ORDER: usize = 8;
/// Largest order accepted by [`enumerate_connected`].
pub const ENUMERATION_MAX_ORDER: usize = 7;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    pub n: usize,
    /// Adjacency bits, first pair in the most significant position.
    pub code: u64,
}

fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

impl CanonicalForm {
    pub fn to_graph(self) -> Graph {
        graph_from_code(self.n, self.code)
    }
}

fn graph_from_code(n: usize, code: u64) -> Graph {
    let total = pair_count(n);
    let mut edges = Vec::new();
    let mut p = 0;
    for j in 1..n {
        for i in 0..j {
            if code >> (total - 1 - p) & 1 == 1 {
                edges.push((i, j));
            }
            p += 1;
        }
    }
    Graph::from_edge_set(n, edges).expect("decoded graph")
}

struct CanonSearch<'g> {
    g: &'g Graph,
    total: usize,
    perm: Vec<usize>,
    used: Vec<bool>,
    best: u64,
}

impl CanonSearch<'_> {
    fn run(&mut self, pos: usize, prefix: u64, len: usize) {
        let n = self.g.order();
        if pos == n {
            if prefix < self.best {
                self.best = prefix;
            }
            return;
        }
        for v in 0..n {
            if self.used[v] {
                continue;
            }
            let mut code = prefix;
            for i in 0..pos {
                code = code << 1 | self.g.has_edge(self.perm[i], v) as u64;
            }
            let new_len = len + pos;
            if new_len > 0 && code > self.best >> (self.total - new_len) {
                continue;
            }
            self.used[v] = true;
            self.perm[pos] = v;
            self.run(pos + 1, code, new_len);
            self.used[v] = false;
        }
    }
}

/// Permutation-minimal canonical form. Orders above 8 are rejected.
pub fn canonical_form(g: &Graph) -> Result<CanonicalForm> {
    let n = g.order();
    if n > CANONICAL_MAX_ORDER {
        return Err(Error::CapExceeded { order: n, cap: CANONICAL_MAX_ORDER });
    }
    let total = pair_count(n);
    let mut search = CanonSearch {
        g,
        total,
        perm: vec![0; n],
        used: vec![false; n],
        best: if total == 0 { 0 } else { u64::MAX >> (64 - total) },
    };
    search.run(0, 0, 0);
    Ok(CanonicalForm { n, code: search.best })
}

pub fn is_isomorphic(a: &Graph, b: &Graph) -> Result<bool> {
    if a.order() != b.order() || a.size() != b.size() {
        return Ok(false);
    }
    Ok(canonical_form(a)? == canonical_form(b)?)
}

/// One representative per isomorphism class of graphs on `n` vertices,
/// connected or not, in ascending canonical order.
pub fn enumerate_classes(n: usize) -> Result<Vec<Graph>> {
    if n > ENUMERATION_MAX_ORDER {
        return Err(Error::CapExceeded { order: n, cap: ENUMERATION_MAX_ORDER });
    }
    Ok(class_codes(n).into_iter().map(|c| c.to_graph()).collect())
}

fn class_codes(n: usize) -> BTreeSet<CanonicalForm> {
    // Every graph on n vertices is a graph on n-1 vertices plus one vertex
    // joined to some subset, so extending each smaller class reaches all.
    let mut level: BTreeSet<CanonicalForm> = BTreeSet::new();
    level.insert(CanonicalForm { n: 0, code: 0 });
    for k in 1..=n {
        let mut next = BTreeSet::new();
        for form in &level {
            let base = form.to_graph();
            let old = k - 1;
            for subset in 0u64..(1 << old) {
                let edges = base
                    .edges()
                    .chain((0..old).filter(|&v| subset >> v & 1 == 1).map(|v| (v, old)));
                let g = Graph::from_edge_set(k, edges).expect("extension");
                next.insert(canonical_form(&g).expect("order within cap"));
            }
        }
        level = next;
    }
    level
}

/// Every connected simple graph on `n` labeled vertices, or one per
/// isomorphism class when `dedup` is set. `1 ≤ n ≤ 7`.
pub fn enumerate_connected(n: usize, dedup: bool) -> Result<Box<dyn Iterator<Item = Graph>>> {
    if n == 0 || n > ENUMERATION_MAX_ORDER {
        return Err(Error::CapExceeded { order: n, cap: ENUMERATION_MAX_ORDER });
    }
    if n == ENUMERATION_MAX_ORDER {
        log::warn!("enumerating graphs of order {n}: expect a long run");
    }
    if dedup {
        let graphs: Vec<Graph> = class_codes(n)
            .into_iter()
            .map(CanonicalForm::to_graph)
            .filter(is_connected)
            .collect();
        Ok(Box::new(graphs.into_iter()))
    } else {
        let total = pair_count(n);
        Ok(Box::new(
            (0u64..1 << total)
                .map(move |code| graph_from_code(n, code))
                .filter(is_connected),
        ))
    }
}

/// Dedup corpus of connected graphs for every order in `range`.
pub fn connected_corpus(range: std::ops::RangeInclusive<usize>) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for n in range {
        out.extend(enumerate_connected(n, true)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::{build, FamilySpec};

    /// Canonical form by plain iteration over every permutation.
    fn brute_canonical(g: &Graph) -> u64 {
        fn permutations(n: usize) -> Vec<Vec<usize>> {
            if n == 0 {
                return vec![vec![]];
            }
            let mut out = Vec::new();
            for p in permutations(n - 1) {
                for pos in 0..=p.len() {
                    let mut q = p.clone();
                    q.insert(pos, n - 1);
                    out.push(q);
                }
            }
            out
        }
        let n = g.order();
        permutations(n)
            .into_iter()
            .map(|perm| {
                let mut code = 0u64;
                for j in 1..n {
                    for i in 0..j {
                        code = code << 1 | g.has_edge(perm[i], perm[j]) as u64;
                    }
                }
                code
            })
            .min()
            .unwrap()
    }

    #[test]
    fn pruned_canonical_matches_brute_force() {
        for n in 1..=5 {
            for g in enumerate_connected(n, false).unwrap().step_by(7) {
                assert_eq!(canonical_form(&g).unwrap().code, brute_canonical(&g));
            }
        }
    }

    #[test]
    fn class_counts() {
        let connected: Vec<usize> = (1..=6)
            .map(|n| enumerate_connected(n, true).unwrap().count())
            .collect();
        assert_eq!(connected, vec![1, 1, 2, 6, 21, 112]);
        let all: Vec<usize> = (1..=5).map(|n| enumerate_classes(n).unwrap().len()).collect();
        assert_eq!(all, vec![1, 2, 4, 11, 34]);
    }

    #[test]
    fn labeled_connected_counts() {
        // connected labeled graphs: 1, 1, 4, 38, 728
        let counts: Vec<usize> = (1..=5)
            .map(|n| enumerate_connected(n, false).unwrap().count())
            .collect();
        assert_eq!(counts, vec![1, 1, 4, 38, 728]);
    }

    #[test]
    fn order_three_classes_are_p3_and_k3() {
        let gs: Vec<Graph> = enumerate_connected(3, true).unwrap().collect();
        let sizes: Vec<usize> = gs.iter().map(Graph::size).collect();
        assert_eq!(sizes, vec![2, 3]);
    }

    #[test]
    fn cap_enforced() {
        assert!(enumerate_connected(8, true).is_err());
        assert!(enumerate_connected(0, true).is_err());
        assert!(canonical_form(&Graph::empty(9)).is_err());
    }

    #[test]
    fn isomorphism_ignores_labels() {
        let c4 = build(&FamilySpec::Cycle(4)).unwrap();
        let grid = build(&FamilySpec::Grid(2, 2)).unwrap();
        assert!(is_isomorphic(&c4, &grid).unwrap());
        let p4 = build(&FamilySpec::Path(4)).unwrap();
        let star = build(&FamilySpec::Star(3)).unwrap();
        assert!(!is_isomorphic(&p4, &star).unwrap());
    }
}
