//! BFS distances and the metric invariants built on them.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Breadth-first distances from `source`; `None` for unreachable vertices.
pub fn bfs_distances(g: &Graph, source: usize) -> Vec<Option<usize>> {
    let mut dist = vec![None; g.order()];
    let mut queue = VecDeque::new();
    dist[source] = Some(0);
    queue.push_back(source);
    while let Some(u) = queue.pop_front() {
        let d = dist[u].unwrap();
        for &w in g.neighbors(u) {
            if dist[w].is_none() {
                dist[w] = Some(d + 1);
                queue.push_back(w);
            }
        }
    }
    dist
}

/// All-pairs distance matrix, `None` across components.
pub fn distance_matrix(g: &Graph) -> Vec<Vec<Option<usize>>> {
    (0..g.order()).map(|v| bfs_distances(g, v)).collect()
}

pub fn is_connected(g: &Graph) -> bool {
    g.order() == 0 || bfs_distances(g, 0).iter().all(Option::is_some)
}

/// Connected components, each sorted, in order of smallest vertex.
pub fn components(g: &Graph) -> Vec<Vec<usize>> {
    let mut seen = vec![false; g.order()];
    let mut out = Vec::new();
    for s in 0..g.order() {
        if seen[s] {
            continue;
        }
        let comp: Vec<usize> = bfs_distances(g, s)
            .iter()
            .enumerate()
            .filter_map(|(v, d)| d.map(|_| v))
            .collect();
        for &v in &comp {
            seen[v] = true;
        }
        out.push(comp);
    }
    out
}

pub fn eccentricity(g: &Graph, v: usize) -> Result<usize> {
    if v >= g.order() {
        return Err(Error::InvalidVertex { vertex: v, order: g.order() });
    }
    bfs_distances(g, v)
        .into_iter()
        .try_fold(0, |acc, d| d.map(|d| acc.max(d)))
        .ok_or(Error::DisconnectedGraph)
}

pub fn diameter(g: &Graph) -> Result<usize> {
    if g.order() == 0 {
        return Err(Error::InvalidParameters("diameter of the empty graph".into()));
    }
    (0..g.order()).try_fold(0, |acc, v| Ok(acc.max(eccentricity(g, v)?)))
}

/// Length of a shortest cycle, `None` for forests.
pub fn girth(g: &Graph) -> Option<usize> {
    // BFS from every vertex; a non-tree edge (u, w) closes a cycle of length
    // at most d(u) + d(w) + 1, and the minimum over all roots is exact.
    let mut best: Option<usize> = None;
    for root in 0..g.order() {
        let mut dist = vec![usize::MAX; g.order()];
        let mut parent = vec![usize::MAX; g.order()];
        let mut queue = VecDeque::new();
        dist[root] = 0;
        queue.push_back(root);
        while let Some(u) = queue.pop_front() {
            for &w in g.neighbors(u) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if parent[u] != w {
                    let len = dist[u] + dist[w] + 1;
                    best = Some(best.map_or(len, |b| b.min(len)));
                }
            }
        }
    }
    best
}
