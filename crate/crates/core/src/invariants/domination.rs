use std::fmt;

use super::{InvariantResult, Witness};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Largest order accepted by the subset enumerations below.
pub const DOMINATION_MAX_ORDER: usize = 24;

/// `f = (V0, V1, V2)` with `f(v) = i` on `Vi`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RomanFunction {
    pub v0: VertexSet,
    pub v1: VertexSet,
    pub v2: VertexSet,
}

impl RomanFunction {
    /// The cheapest function with the given `V2`: everything outside
    /// `N[V2]` must carry weight one.
    pub fn from_v2(g: &Graph, v2: VertexSet) -> Self {
        let closed = g.closed_neighborhood(v2);
        RomanFunction {
            v0: closed.difference(v2),
            v1: g.vertex_set().difference(closed),
            v2,
        }
    }

    pub fn weight(&self) -> u64 {
        2 * self.v2.len() as u64 + self.v1.len() as u64
    }

    /// Partition of `V(g)` with every `V0` vertex adjacent to `V2`.
    pub fn is_roman_dominating(&self, g: &Graph) -> bool {
        let all = g.vertex_set();
        let disjoint = self.v0.intersection(self.v1).is_empty()
            && self.v0.intersection(self.v2).is_empty()
            && self.v1.intersection(self.v2).is_empty();
        disjoint
            && self.v0.union(self.v1).union(self.v2) == all
            && self.v0.is_subset(g.open_neighborhood(self.v2))
    }

    pub fn value(&self, v: usize) -> u32 {
        if self.v2.contains(v) {
            2
        } else if self.v1.contains(v) {
            1
        } else {
            0
        }
    }
}

impl fmt::Display for RomanFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "V0={} V1={} V2={}", self.v0, self.v1, self.v2)
    }
}

/// Subsets of `0..n` with exactly `k` elements, in increasing numeric order
/// of their bitmasks.
pub(crate) fn subsets_of_size(n: usize, k: usize) -> impl Iterator<Item = VertexSet> {
    let limit: u64 = if n >= 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut next = if k == 0 {
        Some(0u64)
    } else if k > n {
        None
    } else if k == 64 {
        Some(u64::MAX)
    } else {
        Some((1u64 << k) - 1)
    };
    std::iter::from_fn(move || {
        let cur = next?;
        next = if cur == 0 {
            None
        } else {
            // Gosper's hack
            let c = cur & cur.wrapping_neg();
            let r = cur.wrapping_add(c);
            if r == 0 {
                None
            } else {
                let nxt = (((r ^ cur) >> 2) / c) | r;
                (nxt <= limit && nxt.count_ones() as usize == k).then_some(nxt)
            }
        };
        Some(VertexSet(cur))
    })
}

fn check_order(g: &Graph) -> Result<()> {
    if g.order() == 0 {
        return Err(Error::InvalidParameters("empty graph".into()));
    }
    if g.order() > DOMINATION_MAX_ORDER {
        return Err(Error::CapExceeded { order: g.order(), cap: DOMINATION_MAX_ORDER });
    }
    Ok(())
}

fn smallest_set(g: &Graph, from: usize, pred: impl Fn(VertexSet) -> bool) -> InvariantResult {
    let n = g.order();
    for k in from..=n {
        if let Some(s) = subsets_of_size(n, k).find(|&s| pred(s)) {
            return InvariantResult { value: k as u64, witness: Witness::Set(s), exhaustive: true };
        }
    }
    unreachable!("the full vertex set qualifies")
}

/// Domination number `γ(G)`.
pub fn gamma(g: &Graph) -> Result<InvariantResult> {
    check_order(g)?;
    Ok(smallest_set(g, 1, |s| g.dominates(s)))
}

/// Total domination number `γ_t(G)`; undefined with an isolated vertex.
pub fn gamma_t(g: &Graph) -> Result<InvariantResult> {
    check_order(g)?;
    if let Some(v) = (0..g.order()).find(|&v| g.degree(v) == 0) {
        return Err(Error::IsolatedVertex(v));
    }
    Ok(smallest_set(g, 2, |s| g.totally_dominates(s)))
}

/// Roman domination number `γ_R(G)` with a minimum-weight function.
pub fn gamma_r(g: &Graph) -> Result<InvariantResult> {
    check_order(g)?;
    let n = g.order();
    let mut best = RomanFunction::from_v2(g, VertexSet::EMPTY);
    for k in 1..=n {
        if 2 * k as u64 >= best.weight() {
            break;
        }
        for v2 in subsets_of_size(n, k) {
            let f = RomanFunction::from_v2(g, v2);
            if f.weight() < best.weight() {
                best = f;
            }
        }
    }
    Ok(InvariantResult { value: best.weight(), witness: Witness::Roman(best), exhaustive: true })
}

/// Among all minimum-weight Roman dominating functions, one with the fewest
/// weight-one vertices (equivalently the most weight-two vertices).
pub fn roman_function_min_n1(g: &Graph) -> Result<RomanFunction> {
    let target = gamma_r(g)?.value;
    let n = g.order();
    let max_k = (target / 2) as usize;
    for k in (0..=max_k.min(n)).rev() {
        if let Some(f) = subsets_of_size(n, k)
            .map(|v2| RomanFunction::from_v2(g, v2))
            .find(|f| f.weight() == target)
        {
            return Ok(f);
        }
    }
    unreachable!("gamma_r found a function of this weight")
}
