//! Budgeted search for light solvable configurations on graphs too large for
//! an exact answer.
//!
//! The search starts from two pebbles on each vertex of a greedy dominating
//! set and asks for successively lighter configurations. A weight whose
//! candidates are exhausted proves the previous one optimal; a budget hit
//! leaves the best weight found as an upper bound only.

use std::fmt;

use pebblab_core::invariants::{find_configuration, EnumerationOptions, SearchOrder, SearchOutcome};
use pebblab_core::pebbling::{Block, Pebbler};
use pebblab_core::{Configuration, Error, Graph, Result};

/// Repeatedly takes the vertex that dominates the most undominated vertices.
pub fn greedy_dominating_set(g: &Graph) -> Vec<usize> {
    let n = g.order();
    let mut covered = vec![false; n];
    let mut chosen = Vec::new();
    let gain = |v: usize, covered: &[bool]| {
        usize::from(!covered[v]) + g.neighbors(v).iter().filter(|&&u| !covered[u]).count()
    };
    while covered.iter().any(|c| !c) {
        let best = (0..n).max_by_key(|&v| (gain(v, &covered), std::cmp::Reverse(v))).expect("nonempty");
        covered[best] = true;
        for &u in g.neighbors(best) {
            covered[u] = true;
        }
        chosen.push(best);
    }
    chosen.sort_unstable();
    chosen
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Bound {
    Exact,
    UpperBound,
}

impl fmt::Display for Bound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Bound::Exact => "EXACT",
            Bound::UpperBound => "UPPER-BOUND",
        })
    }
}

#[derive(Debug, Clone)]
pub struct Exploration {
    pub best: Configuration,
    pub bound: Bound,
    /// Candidates examined at the weight where the search stopped.
    pub examined: u64,
    /// Blocks of `best`.
    pub blocks: Vec<Block>,
}

impl Exploration {
    pub fn weight(&self) -> u64 {
        self.best.weight()
    }
}

/// Searches for the lightest solvable configuration with at most `cap`
/// pebbles per vertex, within the enumeration budget of `opts`.
pub fn explore(g: &Graph, cap: u32, opts: &EnumerationOptions) -> Result<Exploration> {
    if cap == 0 {
        return Err(Error::InvalidParameters("pebble cap must be at least 1".into()));
    }
    let n = g.order();
    let mut best = if cap == 1 {
        Configuration::new(vec![1; n])
    } else {
        let mut counts = vec![0; n];
        for v in greedy_dominating_set(g) {
            counts[v] = 2;
        }
        Configuration::new(counts)
    };
    let mut bound = Bound::Exact;
    let mut examined = 0;
    let mut w = best.weight();
    while w > 1 {
        w -= 1;
        match find_configuration(g, cap, w as u32, SearchOrder::HeavyFirst, opts)? {
            SearchOutcome::Found(c) => best = c,
            SearchOutcome::Exhausted => break,
            SearchOutcome::BudgetHit { examined: e } => {
                bound = Bound::UpperBound;
                examined = e;
                break;
            }
        }
    }
    let blocks = Pebbler::with_options(g, opts.search).blocks(&best)?;
    Ok(Exploration { best, bound, examined, blocks })
}
