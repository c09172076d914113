use std::ops::ControlFlow;

use rayon::prelude::*;

use super::{InvariantResult, Witness};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::metrics::{diameter, is_connected};
use crate::pebbling::{Configuration, Pebbler, Potential, SearchOptions};

/// Largest order accepted by [`pebbling_number`] unless overridden.
pub const PEBBLING_NUMBER_MAX_ORDER: usize = 10;

const BATCH: usize = 4096;

#[derive(Debug, Clone, Copy)]
pub struct EnumerationOptions {
    /// Ceiling on candidate configurations handed to the solvability test.
    pub config_budget: u64,
    pub search: SearchOptions,
    /// Check candidate batches on the current rayon pool.
    pub parallel: bool,
}

impl Default for EnumerationOptions {
    fn default() -> Self {
        EnumerationOptions {
            config_budget: 200_000_000,
            search: SearchOptions::default(),
            parallel: false,
        }
    }
}

/// Order in which candidate configurations of a fixed weight are visited.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SearchOrder {
    /// Ascending lexicographic order of count vectors.
    Lex,
    /// Value profiles with the most capped vertices first, then ascending
    /// lexicographic order of positions within a profile. Finds witnesses
    /// sooner on graphs that need many heavy sources.
    HeavyFirst,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchOutcome {
    Found(Configuration),
    /// Every candidate was examined and none matched.
    Exhausted,
    BudgetHit { examined: u64 },
}

/// Fixed-weight enumerator with a potential-based branch-and-bound.
struct Enumerator<'a> {
    n: usize,
    cap: u8,
    bound: Option<Bound<'a>>,
    counts: Vec<u8>,
    examined: u64,
    budget: u64,
    parallel: bool,
    batch: Vec<Vec<u8>>,
    accept: &'a (dyn Fn(&[u8]) -> bool + Sync),
    outcome: Option<SearchOutcome>,
}

struct Bound<'a> {
    pot: &'a Potential,
    /// `suffix[i * n + v] = max_{u ≥ i} table[u][v]`.
    suffix: Vec<u128>,
    partial: Vec<u128>,
}

impl<'a> Bound<'a> {
    fn new(pot: &'a Potential) -> Self {
        let n = pot.n;
        let mut suffix = vec![0u128; (n + 1) * n];
        for i in (0..n).rev() {
            for v in 0..n {
                suffix[i * n + v] = suffix[(i + 1) * n + v].max(pot.table[i * n + v]);
            }
        }
        Bound { pot, suffix, partial: vec![0; n] }
    }

    /// False when some vertex cannot gather potential one no matter how the
    /// remaining pebbles are placed on positions `i..`.
    fn feasible(&self, i: usize, rem: u32) -> bool {
        let n = self.pot.n;
        (0..n).all(|v| self.partial[v] + rem as u128 * self.suffix[i * n + v] >= self.pot.threshold)
    }

    fn add(&mut self, u: usize, c: u8) {
        let n = self.pot.n;
        for v in 0..n {
            self.partial[v] += c as u128 * self.pot.table[u * n + v];
        }
    }

    fn remove(&mut self, u: usize, c: u8) {
        let n = self.pot.n;
        for v in 0..n {
            self.partial[v] -= c as u128 * self.pot.table[u * n + v];
        }
    }
}

impl Enumerator<'_> {
    fn flush(&mut self) -> ControlFlow<()> {
        if self.batch.is_empty() {
            return ControlFlow::Continue(());
        }
        let accept = self.accept;
        let hit = if self.parallel {
            self.batch.par_iter().position_first(|c| accept(c))
        } else {
            self.batch.iter().position(|c| accept(c))
        };
        let result = match hit {
            Some(idx) => {
                let counts = self.batch[idx].iter().map(|&c| c as u32).collect();
                self.outcome = Some(SearchOutcome::Found(Configuration::new(counts)));
                ControlFlow::Break(())
            }
            None => ControlFlow::Continue(()),
        };
        self.batch.clear();
        result
    }

    fn leaf(&mut self) -> ControlFlow<()> {
        self.examined += 1;
        if self.examined > self.budget {
            self.flush()?;
            self.outcome = Some(SearchOutcome::BudgetHit { examined: self.examined - 1 });
            return ControlFlow::Break(());
        }
        self.batch.push(self.counts.clone());
        if self.batch.len() >= BATCH {
            self.flush()?;
        }
        ControlFlow::Continue(())
    }

    /// Ascending lexicographic enumeration of vectors with `rem` pebbles
    /// left for positions `i..`.
    fn lex(&mut self, i: usize, rem: u32) -> ControlFlow<()> {
        if let Some(b) = &self.bound {
            if !b.feasible(i, rem) {
                return ControlFlow::Continue(());
            }
        }
        if rem == 0 {
            return self.leaf();
        }
        if i == self.n || rem > self.cap as u32 * (self.n - i) as u32 {
            return ControlFlow::Continue(());
        }
        for c in 0..=self.cap.min(rem as u8) {
            self.place(i, c);
            let flow = self.lex(i + 1, rem - c as u32);
            self.unplace(i, c);
            flow?;
        }
        ControlFlow::Continue(())
    }

    /// Enumeration with a fixed multiset of nonzero values: `left[c]` more
    /// vertices get exactly `c` pebbles.
    fn profile(&mut self, i: usize, left: &mut [usize], rem: u32, parts: usize) -> ControlFlow<()> {
        if let Some(b) = &self.bound {
            if !b.feasible(i, rem) {
                return ControlFlow::Continue(());
            }
        }
        if parts == 0 {
            return self.leaf();
        }
        if self.n - i < parts {
            return ControlFlow::Continue(());
        }
        // zero first keeps positions in ascending lexicographic order
        self.profile(i + 1, left, rem, parts)?;
        for c in 1..left.len() {
            if left[c] == 0 {
                continue;
            }
            left[c] -= 1;
            self.place(i, c as u8);
            let flow = self.profile(i + 1, left, rem - c as u32, parts - 1);
            self.unplace(i, c as u8);
            left[c] += 1;
            flow?;
        }
        ControlFlow::Continue(())
    }

    fn place(&mut self, i: usize, c: u8) {
        self.counts[i] = c;
        if c > 0 {
            if let Some(b) = &mut self.bound {
                b.add(i, c);
            }
        }
    }

    fn unplace(&mut self, i: usize, c: u8) {
        self.counts[i] = 0;
        if c > 0 {
            if let Some(b) = &mut self.bound {
                b.remove(i, c);
            }
        }
    }
}

/// Partitions of `w` into parts of size at most `cap`, as part-count
/// vectors, most large parts first.
fn profiles(w: u32, cap: u8) -> Vec<Vec<usize>> {
    fn rec(w: u32, max: u8, acc: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if w == 0 {
            out.push(acc.clone());
            return;
        }
        if max == 0 {
            return;
        }
        let biggest = (w / max as u32) as usize;
        for k in (0..=biggest).rev() {
            acc[max as usize] += k;
            rec(w - k as u32 * max as u32, max - 1, acc, out);
            acc[max as usize] -= k;
        }
    }
    let mut out = Vec::new();
    rec(w, cap, &mut vec![0; cap as usize + 1], &mut out);
    out
}

fn run_search(
    pebbler: &Pebbler<'_>,
    cap: u32,
    weight: u32,
    order: SearchOrder,
    prune: bool,
    accept: &(dyn Fn(&[u8]) -> bool + Sync),
    opts: &EnumerationOptions,
    examined: &mut u64,
) -> Result<SearchOutcome> {
    let budget = opts.search.weight_budget.min(u8::MAX as u32);
    if weight > budget {
        return Err(Error::WeightCapExceeded { weight: weight as u64, budget });
    }
    let n = pebbler.graph().order();
    let cap = cap.min(weight).min(u8::MAX as u32) as u8;
    let mut en = Enumerator {
        n,
        cap,
        bound: if prune { pebbler.potential().map(Bound::new) } else { None },
        counts: vec![0; n],
        examined: *examined,
        budget: opts.config_budget,
        parallel: opts.parallel,
        batch: Vec::with_capacity(BATCH),
        accept,
        outcome: None,
    };
    match order {
        SearchOrder::Lex => {
            let _ = en.lex(0, weight);
        }
        SearchOrder::HeavyFirst => {
            for mut left in profiles(weight, cap) {
                let parts = left.iter().sum();
                if en.profile(0, &mut left, weight, parts).is_break() {
                    break;
                }
            }
        }
    }
    if en.outcome.is_none() {
        let _ = en.flush();
    }
    *examined = en.examined.min(opts.config_budget);
    Ok(en.outcome.unwrap_or(SearchOutcome::Exhausted))
}

fn require_connected(g: &Graph) -> Result<()> {
    if g.order() == 0 {
        return Err(Error::InvalidParameters("empty graph".into()));
    }
    if !is_connected(g) {
        return Err(Error::DisconnectedGraph);
    }
    Ok(())
}

/// Searches the cap-`t` configurations of exactly `weight` pebbles for a
/// solvable one, in the given order.
pub fn find_configuration(
    g: &Graph,
    t: u32,
    weight: u32,
    order: SearchOrder,
    opts: &EnumerationOptions,
) -> Result<SearchOutcome> {
    require_connected(g)?;
    let pebbler = Pebbler::with_options(g, opts.search);
    let accept = |c: &[u8]| pebbler.is_solvable_counts(c);
    let mut examined = 0;
    let outcome = run_search(&pebbler, t, weight, order, true, &accept, opts, &mut examined)?;
    Ok(match outcome {
        SearchOutcome::Found(c) => SearchOutcome::Found(with_cap(c, t)),
        other => other,
    })
}

fn with_cap(c: Configuration, t: u32) -> Configuration {
    Configuration::with_cap(c.counts().to_vec(), t).expect("enumerated under the cap")
}

/// `π*_t(G)`: least weight of a solvable configuration with at most `t`
/// pebbles per vertex. The witness is the lexicographically smallest
/// solvable count vector of that weight.
pub fn pi_star_t(g: &Graph, t: u32) -> Result<InvariantResult> {
    pi_star_t_with(g, t, &EnumerationOptions::default())
}

pub fn pi_star_t_with(g: &Graph, t: u32, opts: &EnumerationOptions) -> Result<InvariantResult> {
    if t == 0 {
        return Err(Error::InvalidParameters("pebble cap t must be at least 1".into()));
    }
    min_solvable_weight(g, Some(t), opts)
}

/// `π*(G)`: least weight of any solvable configuration.
pub fn pi_star(g: &Graph) -> Result<InvariantResult> {
    pi_star_with(g, &EnumerationOptions::default())
}

pub fn pi_star_with(g: &Graph, opts: &EnumerationOptions) -> Result<InvariantResult> {
    min_solvable_weight(g, None, opts)
}

fn min_solvable_weight(g: &Graph, t: Option<u32>, opts: &EnumerationOptions) -> Result<InvariantResult> {
    require_connected(g)?;
    let pebbler = Pebbler::with_options(g, opts.search);
    let accept = |c: &[u8]| pebbler.is_solvable_counts(c);
    let mut examined = 0;
    for w in 1.. {
        let cap = t.unwrap_or(w);
        let outcome = run_search(&pebbler, cap, w, SearchOrder::Lex, true, &accept, opts, &mut examined)?;
        match outcome {
            SearchOutcome::Found(c) => {
                let c = match t {
                    Some(t) => with_cap(c, t),
                    None => c,
                };
                return Ok(InvariantResult {
                    value: w as u64,
                    witness: Witness::Configuration(c),
                    exhaustive: true,
                });
            }
            SearchOutcome::Exhausted => {}
            SearchOutcome::BudgetHit { .. } => {
                return Err(Error::BudgetExceeded { budget: opts.config_budget, lower_bound: w as u64 });
            }
        }
    }
    unreachable!("all-ones configuration is solvable on a connected graph")
}

/// `max(n, 2^diam)`, the two classical lower bounds on `π(G)`.
pub fn pebbling_lower_bound(g: &Graph) -> Result<u64> {
    let d = diameter(g)?;
    let pow = if d >= 63 { u64::MAX } else { 1u64 << d };
    Ok(pow.max(g.order() as u64))
}

/// `π(G)`: least `k` such that every configuration of weight `k` is
/// solvable. The witness is an unsolvable configuration of weight `k - 1`.
pub fn pebbling_number(g: &Graph) -> Result<InvariantResult> {
    pebbling_number_with(g, &EnumerationOptions::default(), PEBBLING_NUMBER_MAX_ORDER)
}

pub fn pebbling_number_with(g: &Graph, opts: &EnumerationOptions, max_order: usize) -> Result<InvariantResult> {
    require_connected(g)?;
    if g.order() > max_order {
        return Err(Error::CapExceeded { order: g.order(), cap: max_order });
    }
    let pebbler = Pebbler::with_options(g, opts.search);
    let reject = |c: &[u8]| !pebbler.is_solvable_counts(c);
    let mut examined = 0;
    let mut unsolvable_at = |k: u32| -> Result<Option<Configuration>> {
        match run_search(&pebbler, k, k, SearchOrder::Lex, false, &reject, opts, &mut examined)? {
            SearchOutcome::Found(c) => Ok(Some(c)),
            SearchOutcome::Exhausted => Ok(None),
            SearchOutcome::BudgetHit { .. } => Err(Error::BudgetExceeded {
                budget: opts.config_budget,
                lower_bound: k as u64,
            }),
        }
    };
    // Solvability is monotone in added pebbles, so "all weight-k
    // configurations solvable" is monotone in k.
    let lower = pebbling_lower_bound(g)?;
    let budget = opts.search.weight_budget.min(u8::MAX as u32) as u64;
    if lower > budget + 1 {
        return Err(Error::WeightCapExceeded { weight: lower, budget: budget as u32 });
    }
    let mut k = (lower - 1) as u32;
    let mut witness = unsolvable_at(k)?;
    while witness.is_none() {
        k -= 1;
        witness = unsolvable_at(k)?;
    }
    loop {
        match unsolvable_at(k + 1)? {
            Some(c) => {
                k += 1;
                witness = Some(c);
            }
            None => {
                return Ok(InvariantResult {
                    value: k as u64 + 1,
                    witness: Witness::Configuration(witness.expect("set above")),
                    exhaustive: true,
                });
            }
        }
    }
}

/// Class 0: `π(G) = |V(G)|`.
pub fn is_class0(g: &Graph) -> Result<bool> {
    Ok(pebbling_number(g)?.value == g.order() as u64)
}
