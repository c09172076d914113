//! Pebbling configurations, move-sequence reachability, and coverage.
//!
//! A pebbling move takes two pebbles off a vertex and puts one on a
//! neighbor. Reachability is decided by an exhaustive depth-first search over
//! count vectors with a visited set; every move lowers the weight by one, so
//! the search depth is bounded by the starting weight.
//!
//! The search also prunes with the dyadic potential
//! `Σ_u f(u) · 2^{-d(u, v)}`: a move `u → w` never raises it (the two pebbles
//! removed from `u` are worth at least the one added at `w`), so a state whose
//! potential towards `v` is below one can never put a pebble on `v`.

use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;
use rustc_hash::FxHashSet;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::metrics::distance_matrix;

/// Default ceiling on the weight of configurations handed to the search.
pub const DEFAULT_WEIGHT_BUDGET: u32 = 20;

/// Pebble counts per vertex.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Configuration {
    counts: Vec<u32>,
    weight: u64,
    cap: Option<u32>,
}

impl Configuration {
    pub fn new(counts: Vec<u32>) -> Self {
        let weight = counts.iter().map(|&c| c as u64).sum();
        Configuration { counts, weight, cap: None }
    }

    pub fn zeros(n: usize) -> Self {
        Configuration::new(vec![0; n])
    }

    /// A configuration that records the per-vertex cap `t` it was drawn
    /// under. Fails if some count exceeds the cap.
    pub fn with_cap(counts: Vec<u32>, cap: u32) -> Result<Self> {
        if let Some((vertex, &count)) = counts.iter().enumerate().find(|(_, &c)| c > cap) {
            return Err(Error::CapViolated { vertex, count, cap });
        }
        Ok(Configuration { cap: Some(cap), ..Configuration::new(counts) })
    }

    /// Pebbles on the given vertices only.
    pub fn single_source(n: usize, source: usize, pebbles: u32) -> Self {
        let mut counts = vec![0; n];
        counts[source] = pebbles;
        Configuration::new(counts)
    }

    pub fn counts(&self) -> &[u32] {
        &self.counts
    }

    pub fn weight(&self) -> u64 {
        self.weight
    }

    pub fn cap(&self) -> Option<u32> {
        self.cap
    }

    pub fn len(&self) -> usize {
        self.counts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    pub fn get(&self, v: usize) -> u32 {
        self.counts[v]
    }

    /// Vertices holding at least one pebble.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.counts.iter().enumerate().filter(|(_, &c)| c > 0).map(|(v, _)| v)
    }

    /// Keeps the pebbles on `keep` and clears every other vertex.
    pub fn restrict(&self, keep: &[usize]) -> Configuration {
        let mut counts = vec![0; self.counts.len()];
        for &v in keep {
            counts[v] = self.counts[v];
        }
        Configuration::new(counts)
    }

    /// Pointwise `self ≤ other`.
    pub fn le(&self, other: &Configuration) -> bool {
        self.counts.len() == other.counts.len()
            && self.counts.iter().zip(&other.counts).all(|(a, b)| a <= b)
    }

    pub fn max_count(&self) -> u32 {
        self.counts.iter().copied().max().unwrap_or(0)
    }
}

impl fmt::Debug for Configuration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Configuration({self})")
    }
}

/// The text format: one line of space-separated counts.
impl fmt::Display for Configuration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.counts.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl FromStr for Configuration {
    type Err = Error;

    fn from_str(s: &str) -> Result<Configuration> {
        let counts = s
            .split_whitespace()
            .map(|tok| {
                tok.parse::<u32>()
                    .map_err(|_| Error::parse(1, format!("bad pebble count {tok:?}")))
            })
            .collect::<Result<Vec<u32>>>()?;
        Ok(Configuration::new(counts))
    }
}

/// A witness that some target can receive a pebble.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MoveSequence {
    pub steps: Vec<(usize, usize)>,
    pub target: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ReplayError {
    NotAdjacent { step: usize, from: usize, to: usize },
    Negative { step: usize, vertex: usize },
    TargetEmpty { target: usize },
    OutOfRange,
}

impl MoveSequence {
    /// Replays the steps from `f`, returning the final counts.
    pub fn replay(&self, g: &Graph, f: &Configuration) -> std::result::Result<Vec<u64>, ReplayError> {
        let n = g.order();
        if f.len() != n || self.target >= n {
            return Err(ReplayError::OutOfRange);
        }
        let mut counts: Vec<u64> = f.counts().iter().map(|&c| c as u64).collect();
        for (step, &(from, to)) in self.steps.iter().enumerate() {
            if from >= n || to >= n {
                return Err(ReplayError::OutOfRange);
            }
            if !g.has_edge(from, to) {
                return Err(ReplayError::NotAdjacent { step, from, to });
            }
            if counts[from] < 2 {
                return Err(ReplayError::Negative { step, vertex: from });
            }
            counts[from] -= 2;
            counts[to] += 1;
        }
        if counts[self.target] == 0 {
            return Err(ReplayError::TargetEmpty { target: self.target });
        }
        Ok(counts)
    }

    pub fn is_valid(&self, g: &Graph, f: &Configuration) -> bool {
        self.replay(g, f).is_ok()
    }
}

/// Witness text: one `from->to` line per step, then `target t reached`.
impl fmt::Display for MoveSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (from, to) in &self.steps {
            writeln!(f, "{from}->{to}")?;
        }
        write!(f, "target {} reached", self.target)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverageResult {
    /// Covered vertices, ascending.
    pub covered: Vec<usize>,
    /// Witness per covered vertex, indexed by vertex, when requested.
    pub per_target_witness: Option<Vec<Option<MoveSequence>>>,
    pub cov_size: usize,
}

impl CoverageResult {
    pub fn contains(&self, v: usize) -> bool {
        self.covered.binary_search(&v).is_ok()
    }

    pub fn uncovered(&self, n: usize) -> Vec<usize> {
        (0..n).filter(|v| !self.contains(*v)).collect()
    }
}

/// A unit or block: a set of sources and what their pebbles cover together.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Block {
    pub sources: Vec<usize>,
    pub covered: Vec<usize>,
    pub pebbles: u64,
}

impl Block {
    pub fn covering_ratio(&self) -> Ratio<u64> {
        Ratio::new(self.covered.len() as u64, self.pebbles)
    }
}

/// Precomputed dyadic weights `2^{D - d(u,v)}`; `None` if the distances are
/// too large for 128-bit sums.
pub(crate) struct Potential {
    pub(crate) n: usize,
    /// Row-major `table[u * n + v]`.
    pub(crate) table: Vec<u128>,
    pub(crate) threshold: u128,
}

const POTENTIAL_MAX_DEPTH: usize = 110;

impl Potential {
    fn new(g: &Graph) -> Option<Potential> {
        let dist = distance_matrix(g);
        let depth = dist.iter().flatten().flatten().copied().max().unwrap_or(0);
        if depth > POTENTIAL_MAX_DEPTH {
            return None;
        }
        let n = g.order();
        let mut table = vec![0u128; n * n];
        for u in 0..n {
            for v in 0..n {
                if let Some(d) = dist[u][v] {
                    table[u * n + v] = 1u128 << (depth - d);
                }
            }
        }
        Some(Potential { n, table, threshold: 1u128 << depth })
    }

    #[inline]
    fn reaches(&self, state: &[u8], v: usize) -> bool {
        let mut sum = 0u128;
        for (u, &c) in state.iter().enumerate() {
            if c > 0 {
                sum += c as u128 * self.table[u * self.n + v];
                if sum >= self.threshold {
                    return true;
                }
            }
        }
        false
    }
}

#[derive(Debug, Clone, Copy)]
pub struct SearchOptions {
    /// Largest configuration weight the search accepts (at most 255).
    pub weight_budget: u32,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions { weight_budget: DEFAULT_WEIGHT_BUDGET }
    }
}

/// Reachability engine bound to one graph; reuse it across many
/// configurations to share the distance tables.
pub struct Pebbler<'g> {
    g: &'g Graph,
    options: SearchOptions,
    potential: Option<Potential>,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Goal {
    Target(usize),
    All,
}

struct Node {
    parent: u32,
    step: (u32, u32),
}

struct Explorer<'a, 'g> {
    pebbler: &'a Pebbler<'g>,
    goal: Goal,
    visited: FxHashSet<Box<[u8]>>,
    nodes: Vec<Node>,
    covered: Vec<bool>,
    first_node: Vec<u32>,
    remaining: usize,
}

const NO_NODE: u32 = u32::MAX;

impl Explorer<'_, '_> {
    fn done(&self) -> bool {
        match self.goal {
            Goal::Target(t) => self.covered[t],
            Goal::All => self.remaining == 0,
        }
    }

    fn worth_expanding(&self, state: &[u8]) -> bool {
        let Some(pot) = &self.pebbler.potential else {
            return true;
        };
        match self.goal {
            Goal::Target(t) => pot.reaches(state, t),
            Goal::All => (0..state.len()).any(|v| !self.covered[v] && pot.reaches(state, v)),
        }
    }

    /// Returns true once the goal is met.
    fn visit(&mut self, state: &mut Vec<u8>, node: u32) -> bool {
        for (v, &c) in state.iter().enumerate() {
            if c > 0 && !self.covered[v] {
                self.covered[v] = true;
                self.first_node[v] = node;
                self.remaining -= 1;
            }
        }
        if self.done() {
            return true;
        }
        if !self.worth_expanding(state) {
            return false;
        }
        let g = self.pebbler.g;
        for u in 0..state.len() {
            if state[u] < 2 {
                continue;
            }
            for &w in g.neighbors(u) {
                state[u] -= 2;
                state[w] += 1;
                if !self.visited.contains(state.as_slice()) {
                    self.visited.insert(state.clone().into_boxed_slice());
                    let child = self.nodes.len() as u32;
                    self.nodes.push(Node { parent: node, step: (u as u32, w as u32) });
                    if self.visit(state, child) {
                        state[u] += 2;
                        state[w] -= 1;
                        return true;
                    }
                }
                state[u] += 2;
                state[w] -= 1;
            }
        }
        false
    }

    fn witness(&self, target: usize) -> Option<MoveSequence> {
        if !self.covered[target] {
            return None;
        }
        let mut steps = Vec::new();
        let mut node = self.first_node[target];
        while node != 0 {
            let n = &self.nodes[node as usize];
            steps.push((n.step.0 as usize, n.step.1 as usize));
            node = n.parent;
        }
        steps.reverse();
        Some(MoveSequence { steps, target })
    }
}

impl<'g> Pebbler<'g> {
    pub fn new(g: &'g Graph) -> Self {
        Self::with_options(g, SearchOptions::default())
    }

    pub fn with_options(g: &'g Graph, options: SearchOptions) -> Self {
        Pebbler { g, options, potential: Potential::new(g) }
    }

    pub fn graph(&self) -> &'g Graph {
        self.g
    }

    pub(crate) fn potential(&self) -> Option<&Potential> {
        self.potential.as_ref()
    }

    pub fn options(&self) -> SearchOptions {
        self.options
    }

    fn check(&self, f: &Configuration) -> Result<Vec<u8>> {
        if f.len() != self.g.order() {
            return Err(Error::LengthMismatch { expected: self.g.order(), got: f.len() });
        }
        let budget = self.options.weight_budget.min(u8::MAX as u32);
        if f.weight() > budget as u64 {
            return Err(Error::WeightCapExceeded { weight: f.weight(), budget });
        }
        Ok(f.counts().iter().map(|&c| c as u8).collect())
    }

    fn explore(&self, start: Vec<u8>, goal: Goal, premark: bool) -> Explorer<'_, 'g> {
        let n = self.g.order();
        let mut ex = Explorer {
            pebbler: self,
            goal,
            visited: FxHashSet::default(),
            nodes: vec![Node { parent: NO_NODE, step: (0, 0) }],
            covered: vec![false; n],
            first_node: vec![NO_NODE; n],
            remaining: n,
        };
        if premark {
            // Vertices next to a vertex with two pebbles are one move away;
            // only used when no witnesses are requested.
            for u in 0..n {
                if start[u] >= 2 {
                    for &w in self.g.neighbors(u) {
                        if !ex.covered[w] {
                            ex.covered[w] = true;
                            ex.remaining -= 1;
                        }
                    }
                }
            }
        }
        let mut state = start;
        ex.visited.insert(state.clone().into_boxed_slice());
        ex.visit(&mut state, 0);
        ex
    }

    /// A move sequence putting a pebble on `target`, or `None`. The empty
    /// sequence is returned when `target` already holds a pebble.
    pub fn reachable(&self, f: &Configuration, target: usize) -> Result<Option<MoveSequence>> {
        let start = self.check(f)?;
        if target >= self.g.order() {
            return Err(Error::InvalidVertex { vertex: target, order: self.g.order() });
        }
        let ex = self.explore(start, Goal::Target(target), false);
        Ok(ex.witness(target))
    }

    pub fn coverage(&self, f: &Configuration, with_witnesses: bool) -> Result<CoverageResult> {
        let start = self.check(f)?;
        let n = self.g.order();
        let ex = self.explore(start, Goal::All, !with_witnesses);
        let covered: Vec<usize> = (0..n).filter(|&v| ex.covered[v]).collect();
        let per_target_witness =
            with_witnesses.then(|| (0..n).map(|v| ex.witness(v)).collect::<Vec<_>>());
        Ok(CoverageResult { cov_size: covered.len(), covered, per_target_witness })
    }

    pub fn is_solvable(&self, f: &Configuration) -> Result<bool> {
        let start = self.check(f)?;
        if let Some(pot) = &self.potential {
            if (0..start.len()).any(|v| !pot.reaches(&start, v)) {
                return Ok(false);
            }
        }
        Ok(self.explore(start, Goal::All, true).remaining == 0)
    }

    /// Solvability of a raw count vector; skips validation. Used by the
    /// enumerators, which build vectors of the right length.
    pub(crate) fn is_solvable_counts(&self, counts: &[u8]) -> bool {
        if let Some(pot) = &self.potential {
            if (0..counts.len()).any(|v| !pot.reaches(counts, v)) {
                return false;
            }
        }
        self.explore(counts.to_vec(), Goal::All, true).remaining == 0
    }

    pub fn covering_ratio(&self, f: &Configuration) -> Result<Ratio<u64>> {
        if f.weight() == 0 {
            return Err(Error::EmptyConfiguration);
        }
        let cov = self.coverage(f, false)?;
        Ok(Ratio::new(cov.cov_size as u64, f.weight()))
    }

    /// One unit per pebbled vertex: the coverage of that vertex's pebbles
    /// alone.
    pub fn units(&self, f: &Configuration) -> Result<Vec<Block>> {
        self.check(f)?;
        f.support()
            .map(|s| {
                let cov = self.coverage(&f.restrict(&[s]), false)?;
                Ok(Block { sources: vec![s], covered: cov.covered, pebbles: f.get(s) as u64 })
            })
            .collect()
    }

    /// Groups units that share a covered vertex; each block's coverage is
    /// that of the block's sources together.
    pub fn blocks(&self, f: &Configuration) -> Result<Vec<Block>> {
        if f.weight() == 0 {
            return Err(Error::EmptyConfiguration);
        }
        let units = self.units(f)?;
        let mut parent: Vec<usize> = (0..units.len()).collect();
        fn find(parent: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while parent[r] != r {
                r = parent[r];
            }
            let mut y = x;
            while parent[y] != r {
                let next = parent[y];
                parent[y] = r;
                y = next;
            }
            r
        }
        for a in 0..units.len() {
            for b in a + 1..units.len() {
                let share = units[a].covered.iter().any(|v| units[b].covered.binary_search(v).is_ok());
                if share {
                    let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
                    parent[ra.max(rb)] = ra.min(rb);
                }
            }
        }
        let mut groups: Vec<Vec<usize>> = Vec::new();
        let mut slot = vec![usize::MAX; units.len()];
        for i in 0..units.len() {
            let r = find(&mut parent, i);
            if slot[r] == usize::MAX {
                slot[r] = groups.len();
                groups.push(Vec::new());
            }
            groups[slot[r]].push(units[i].sources[0]);
        }
        groups
            .into_iter()
            .map(|sources| {
                let restricted = f.restrict(&sources);
                let cov = self.coverage(&restricted, false)?;
                Ok(Block { pebbles: restricted.weight(), sources, covered: cov.covered })
            })
            .collect()
    }
}

pub fn reachable(g: &Graph, f: &Configuration, target: usize) -> Result<Option<MoveSequence>> {
    Pebbler::new(g).reachable(f, target)
}

pub fn coverage(g: &Graph, f: &Configuration, with_witnesses: bool) -> Result<CoverageResult> {
    Pebbler::new(g).coverage(f, with_witnesses)
}

pub fn is_solvable(g: &Graph, f: &Configuration) -> Result<bool> {
    Pebbler::new(g).is_solvable(f)
}

/// `Cov(f) / |f|` as an exact fraction.
pub fn covering_ratio(g: &Graph, f: &Configuration) -> Result<Ratio<u64>> {
    Pebbler::new(g).covering_ratio(f)
}

pub fn blocks(g: &Graph, f: &Configuration) -> Result<Vec<Block>> {
    Pebbler::new(g).blocks(f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::enumerate_connected;
    use crate::family::{build, FamilySpec};
    use proptest::prelude::*;

    fn cfg(c: &[u32]) -> Configuration {
        Configuration::new(c.to_vec())
    }

    fn path(n: usize) -> Graph {
        build(&FamilySpec::Path(n)).unwrap()
    }

    /// Unmemoized search over every move sequence.
    fn naive_reachable(g: &Graph, counts: &mut Vec<u32>, target: usize) -> bool {
        if counts[target] > 0 {
            return true;
        }
        for u in 0..counts.len() {
            if counts[u] < 2 {
                continue;
            }
            for &w in g.neighbors(u) {
                counts[u] -= 2;
                counts[w] += 1;
                let hit = naive_reachable(g, counts, target);
                counts[u] += 2;
                counts[w] -= 1;
                if hit {
                    return true;
                }
            }
        }
        false
    }

    fn all_configs(n: usize, weight: u32) -> Vec<Vec<u32>> {
        if n == 0 {
            return if weight == 0 { vec![vec![]] } else { vec![] };
        }
        let mut out = Vec::new();
        for first in 0..=weight {
            for mut rest in all_configs(n - 1, weight - first) {
                rest.insert(0, first);
                out.push(rest);
            }
        }
        out
    }

    #[test]
    fn single_forced_move() {
        let k2 = build(&FamilySpec::Complete(2)).unwrap();
        let w = reachable(&k2, &cfg(&[2, 0]), 1).unwrap().unwrap();
        assert_eq!(w.steps, vec![(0, 1)]);
        assert_eq!(w.to_string(), "0->1\ntarget 1 reached");
    }

    #[test]
    fn one_pebble_never_moves() {
        assert_eq!(reachable(&path(3), &cfg(&[1, 0, 0]), 2).unwrap(), None);
    }

    #[test]
    fn p3_center_pair() {
        let g = path(3);
        let f = cfg(&[0, 2, 0]);
        assert_eq!(reachable(&g, &f, 0).unwrap().unwrap().steps, vec![(1, 0)]);
        assert_eq!(reachable(&g, &f, 2).unwrap().unwrap().steps, vec![(1, 2)]);
        assert_eq!(reachable(&g, &f, 1).unwrap().unwrap().steps, vec![]);
    }

    #[test]
    fn coverage_examples() {
        let p5 = path(5);
        let cov = coverage(&p5, &cfg(&[0, 0, 2, 0, 0]), false).unwrap();
        assert_eq!(cov.covered, vec![1, 2, 3]);
        let c4 = build(&FamilySpec::Cycle(4)).unwrap();
        assert_eq!(coverage(&c4, &cfg(&[2, 0, 1, 0]), true).unwrap().cov_size, 4);
        assert_eq!(coverage(&c4, &cfg(&[0, 0, 0, 0]), false).unwrap().cov_size, 0);
    }

    #[test]
    fn solvable_examples() {
        for n in 2..7 {
            let k = build(&FamilySpec::Complete(n)).unwrap();
            assert!(is_solvable(&k, &Configuration::single_source(n, 0, 2)).unwrap());
        }
        let k1 = build(&FamilySpec::Complete(1)).unwrap();
        assert!(is_solvable(&k1, &cfg(&[1])).unwrap());
    }

    #[test]
    fn cap_applies_only_initially() {
        let p4 = path(4);
        let f = Configuration::with_cap(vec![2, 2, 0, 0], 2).unwrap();
        // first witness for vertex 2 goes 0->1 (vertex 1 holds three) then 1->2
        let w = reachable(&p4, &f, 2).unwrap().unwrap();
        assert_eq!(w.steps, vec![(0, 1), (1, 2)]);
        assert!(w.is_valid(&p4, &f));
        // potential towards vertex 3 is 2/8 + 2/4 < 1
        assert_eq!(reachable(&p4, &f, 3).unwrap(), None);
        assert!(!is_solvable(&p4, &f).unwrap());
        assert!(Configuration::with_cap(vec![3, 0], 2).is_err());
    }

    #[test]
    fn covering_ratios() {
        let g = build(&FamilySpec::Grid(6, 4)).unwrap();
        let interior = (0..24).find(|&v| g.degree(v) == 4).unwrap();
        let r = covering_ratio(&g, &Configuration::single_source(24, interior, 2)).unwrap();
        assert_eq!(r, Ratio::new(5, 2));
        let one = covering_ratio(&g, &Configuration::single_source(24, 0, 1)).unwrap();
        assert_eq!(one, Ratio::from_integer(1));
        let p2 = path(2);
        assert_eq!(covering_ratio(&p2, &cfg(&[2, 0])).unwrap(), Ratio::from_integer(1));
        assert_eq!(covering_ratio(&p2, &cfg(&[0, 0])), Err(Error::EmptyConfiguration));
    }

    #[test]
    fn block_examples() {
        let p4 = path(4);
        let b = blocks(&p4, &cfg(&[2, 0, 0, 2])).unwrap();
        assert_eq!(b.len(), 2);
        assert_eq!(b[0].covered, vec![0, 1]);
        let p3 = path(3);
        let b = blocks(&p3, &cfg(&[2, 0, 2])).unwrap();
        assert_eq!(b.len(), 1);
        assert_eq!(b[0].sources, vec![0, 2]);
        let p10 = path(10);
        let b = blocks(&p10, &cfg(&[2, 0, 0, 0, 0, 2, 0, 0, 0, 0])).unwrap();
        assert_eq!(b.len(), 2);
    }

    #[test]
    fn errors() {
        let p3 = path(3);
        assert!(matches!(
            coverage(&p3, &cfg(&[1, 1]), false),
            Err(Error::LengthMismatch { expected: 3, got: 2 })
        ));
        assert!(matches!(
            is_solvable(&p3, &cfg(&[21, 0, 0])),
            Err(Error::WeightCapExceeded { .. })
        ));
        assert!(reachable(&p3, &cfg(&[1, 0, 0]), 3).is_err());
    }

    #[test]
    fn memoized_matches_naive_on_small_graphs() {
        for n in 1..=5 {
            let graphs: Vec<Graph> = enumerate_connected(n, true).unwrap().collect();
            for g in &graphs {
                let pebbler = Pebbler::new(g);
                for w in 0..=6u32 {
                    for counts in all_configs(n, w) {
                        let f = Configuration::new(counts.clone());
                        let cov = pebbler.coverage(&f, false).unwrap();
                        for t in 0..n {
                            let expected = naive_reachable(g, &mut counts.clone(), t);
                            assert_eq!(cov.contains(t), expected, "{g:?} {f} -> {t}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn witnesses_agree_between_single_target_and_coverage() {
        let g = build(&FamilySpec::Grid(3, 3)).unwrap();
        let f = cfg(&[4, 0, 0, 0, 0, 0, 0, 0, 2]);
        let cov = coverage(&g, &f, true).unwrap();
        let witnesses = cov.per_target_witness.unwrap();
        for t in 0..9 {
            assert_eq!(witnesses[t], reachable(&g, &f, t).unwrap());
        }
    }

    fn graph_and_config() -> impl Strategy<Value = (Graph, Vec<u32>, Vec<u32>)> {
        (2usize..=6).prop_flat_map(|n| {
            let pairs = n * (n - 1) / 2;
            (
                Just(n),
                prop::collection::vec(any::<bool>(), pairs),
                prop::collection::vec(0u32..3, n),
                prop::collection::vec(0u32..2, n),
            )
                .prop_map(|(n, bits, f, extra)| {
                    let mut edges = Vec::new();
                    let mut p = 0;
                    for u in 0..n {
                        for v in u + 1..n {
                            if bits[p] {
                                edges.push((u, v));
                            }
                            p += 1;
                        }
                    }
                    let g = Graph::from_edges(n, edges).unwrap();
                    let bigger = f.iter().zip(&extra).map(|(a, b)| a + b).collect();
                    (g, f, bigger)
                })
        })
    }

    proptest! {
        #[test]
        fn witnesses_replay((g, f, _) in graph_and_config()) {
            let f = Configuration::new(f);
            let cov = coverage(&g, &f, true).unwrap();
            let witnesses = cov.per_target_witness.clone().unwrap();
            for v in 0..g.order() {
                match &witnesses[v] {
                    Some(w) => prop_assert!(w.is_valid(&g, &f)),
                    None => prop_assert!(!cov.contains(v)),
                }
            }
        }

        #[test]
        fn coverage_is_monotone((g, f, bigger) in graph_and_config()) {
            let small = coverage(&g, &Configuration::new(f), false).unwrap();
            let large = coverage(&g, &Configuration::new(bigger), false).unwrap();
            prop_assert!(small.covered.iter().all(|v| large.contains(*v)));
        }

        #[test]
        fn premarked_coverage_matches_witnessed((g, f, _) in graph_and_config()) {
            let f = Configuration::new(f);
            let a = coverage(&g, &f, false).unwrap();
            let b = coverage(&g, &f, true).unwrap();
            prop_assert_eq!(a.covered, b.covered);
            prop_assert_eq!(is_solvable(&g, &f).unwrap(), b.cov_size == g.order());
        }
    }
}
