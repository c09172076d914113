//! Verification campaigns. Each suite expands into a list of jobs in a fixed
//! order; jobs run on a worker pool and the results keep the job order, so
//! a report depends only on the options and never on scheduling.

use std::fmt;
use std::ops::RangeInclusive;
use std::str::FromStr;
use std::time::Instant;

use num_rational::Ratio;
use pebblab_core::characterization::{
    classify_with, closed_form, in_family_f, oracle, OracleInvariant, Predicted,
};
use pebblab_core::enumerate::{enumerate_classes, enumerate_connected};
use pebblab_core::family::build;
use pebblab_core::invariants::{
    find_configuration, gamma, gamma_r, gamma_t, pebbling_number_with, pi_star_t_with,
    pi_star_with, roman_function_min_n1, EnumerationOptions, InvariantResult, SearchOrder,
    SearchOutcome, Witness as CoreWitness, PEBBLING_NUMBER_MAX_ORDER,
};
use pebblab_core::metrics::{components, diameter, girth};
use pebblab_core::pebbling::{MoveSequence, Pebbler, SearchOptions};
use pebblab_core::{Configuration, Error, FamilySpec, Graph, Result, VertexSet};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::instance::Instance;
use crate::report::{Record, Report, Status};
use crate::witness::{Item, Witness};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Thm1,
    Thm25,
    Roman,
    Trees,
    Grids,
    Corona,
    Bounds,
    All,
}

impl Suite {
    pub const EACH: [Suite; 7] = [
        Suite::Thm1,
        Suite::Thm25,
        Suite::Roman,
        Suite::Trees,
        Suite::Grids,
        Suite::Corona,
        Suite::Bounds,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Thm1 => "thm1",
            Suite::Thm25 => "thm2-5",
            Suite::Roman => "roman",
            Suite::Trees => "trees",
            Suite::Grids => "grids",
            Suite::Corona => "corona",
            Suite::Bounds => "bounds",
            Suite::All => "all",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Suite, String> {
        Suite::EACH
            .into_iter()
            .chain([Suite::All])
            .find(|x| x.name() == s)
            .ok_or_else(|| format!("unknown suite {s:?}"))
    }
}

/// Parses `a..b` or `a..=b`, both inclusive, or a single `n`.
pub fn parse_range(s: &str) -> std::result::Result<RangeInclusive<usize>, String> {
    let num = |x: &str| x.trim().parse::<usize>().map_err(|_| format!("bad range bound {x:?}"));
    let range = match s.split_once("..") {
        Some((a, b)) => num(a)?..=num(b.strip_prefix('=').unwrap_or(b))?,
        None => num(s)?..=num(s)?,
    };
    if range.is_empty() {
        return Err(format!("empty range {s:?}"));
    }
    Ok(range)
}

#[derive(Debug, Clone)]
pub struct VerifyOptions {
    /// Overrides the suite's default order range.
    pub range: Option<RangeInclusive<usize>>,
    pub seed: u64,
    pub jobs: usize,
    /// Ceiling on candidate configurations per enumeration.
    pub config_budget: u64,
    /// Largest configuration weight the reachability search accepts.
    pub weight_budget: u32,
    /// Require `u, v, w` pairwise distinct in the triple conditions.
    pub distinct: bool,
    /// Record wall-clock times; off gives byte-identical reports.
    pub timing: bool,
    /// Run the exhaustive lower bounds for the larger grids.
    pub long: bool,
    pub trees: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            range: None,
            seed: 7,
            jobs: 1,
            config_budget: EnumerationOptions::default().config_budget,
            weight_budget: SearchOptions::default().weight_budget,
            distinct: true,
            timing: true,
            long: false,
            trees: 200,
        }
    }
}

impl VerifyOptions {
    fn enumeration(&self) -> EnumerationOptions {
        EnumerationOptions {
            config_budget: self.config_budget,
            search: SearchOptions { weight_budget: self.weight_budget },
            parallel: false,
        }
    }

    fn range_or(&self, default: RangeInclusive<usize>) -> RangeInclusive<usize> {
        self.range.clone().unwrap_or(default)
    }
}

/// What a job reports back.
#[derive(Debug, Clone)]
pub struct Outcome {
    pub expected: String,
    pub computed: String,
    pub status: Status,
    pub witness: Witness,
}

impl Outcome {
    fn new(expected: impl ToString, computed: impl ToString, status: Status, witness: Witness) -> Self {
        Outcome { expected: expected.to_string(), computed: computed.to_string(), status, witness }
    }

    /// PASS when `expected == computed`, else `on_mismatch`.
    fn compare(expected: u64, computed: u64, witness: Witness, on_mismatch: Status) -> Self {
        let status = if expected == computed { Status::Pass } else { on_mismatch };
        Outcome::new(expected, computed, status, witness)
    }

    /// PASS when `computed <= bound`, else `on_violation`.
    fn at_most(label: &str, bound: u64, computed: u64, witness: Witness, on_violation: Status) -> Self {
        let status = if computed <= bound { Status::Pass } else { on_violation };
        Outcome::new(format!("<={label}={bound}"), computed, status, witness)
    }

    fn holds(ok: bool, detail: String, witness: Witness, on_violation: Status) -> Self {
        let (computed, status) = if ok {
            ("holds".to_string(), Status::Pass)
        } else {
            (format!("violated:{detail}"), on_violation)
        };
        Outcome::new("holds", computed, status, witness)
    }
}

type Task = Box<dyn Fn(&Graph, &Ctx) -> Result<Outcome> + Send + Sync>;

pub struct Job {
    pub claim: String,
    pub instance: Instance,
    task: Task,
}

impl Job {
    fn new(
        claim: impl Into<String>,
        instance: impl Into<Instance>,
        task: impl Fn(&Graph, &Ctx) -> Result<Outcome> + Send + Sync + 'static,
    ) -> Job {
        Job { claim: claim.into(), instance: instance.into(), task: Box::new(task) }
    }
}

struct Ctx {
    enumeration: EnumerationOptions,
    distinct: bool,
}

fn spec(s: &str) -> FamilySpec {
    s.parse().expect("built-in family spec")
}

fn ceil_div(a: usize, b: usize) -> u64 {
    a.div_ceil(b) as u64
}

fn solvable_item(r: &InvariantResult, cap: Option<u32>) -> Item {
    match &r.witness {
        CoreWitness::Configuration(c) => Item::Solvable { cap, config: c.clone() },
        other => Item::Note(other.to_string()),
    }
}

fn pi2(g: &Graph, ctx: &Ctx) -> Result<(u64, Item)> {
    let r = pi_star_t_with(g, 2, &ctx.enumeration)?;
    Ok((r.value, solvable_item(&r, Some(2))))
}

fn pistar(g: &Graph, ctx: &Ctx) -> Result<(u64, Item)> {
    let r = pi_star_with(g, &ctx.enumeration)?;
    Ok((r.value, solvable_item(&r, None)))
}

fn roman(g: &Graph) -> Result<(u64, Item)> {
    let r = gamma_r(g)?;
    let item = match &r.witness {
        CoreWitness::Roman(f) => Item::roman(f),
        other => Item::Note(other.to_string()),
    };
    Ok((r.value, item))
}

fn domination(g: &Graph) -> Result<(u64, Item)> {
    let r = gamma(g)?;
    Ok((r.value, Item::Dominating(r.set().unwrap_or_default())))
}

fn pebbling(g: &Graph, ctx: &Ctx) -> Result<(u64, Item)> {
    let r = pebbling_number_with(g, &ctx.enumeration, PEBBLING_NUMBER_MAX_ORDER)?;
    let item = match r.configuration() {
        Some(c) => Item::Unsolvable(c.clone()),
        None => Item::Note(r.witness.to_string()),
    };
    Ok((r.value, item))
}

/// A value claim with an exact expected value.
fn value_job(
    claim: &str,
    instance: impl Into<Instance>,
    expected: u64,
    compute: impl Fn(&Graph, &Ctx) -> Result<(u64, Item)> + Send + Sync + 'static,
) -> Job {
    Job::new(claim, instance, move |g, ctx| {
        let (value, item) = compute(g, ctx)?;
        Ok(Outcome::compare(expected, value, item.into(), Status::Fail))
    })
}

fn pi2_oracle_job(claim: &str, s: FamilySpec) -> Job {
    let expected = closed_form(&s, OracleInvariant::PiStar2).expect("oracle entry for suite instance");
    value_job(claim, s, expected, pi2)
}

fn corpus(range: RangeInclusive<usize>) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for n in range {
        out.extend(enumerate_connected(n, true)?);
    }
    Ok(out)
}

fn thm1_jobs(opts: &VerifyOptions) -> Result<Vec<Job>> {
    let mut jobs = Vec::new();
    for g in corpus(opts.range_or(1..=6))? {
        if g.order() == 1 {
            jobs.push(value_job("class-trivial", g, 1, pi2));
            continue;
        }
        jobs.push(Job::new("class-small", g, |g, ctx| {
            let c = classify_with(g, ctx.distinct)?;
            let (value, item) = pi2(g, ctx)?;
            let witness = Witness::one(Item::Certificate { certificate: c.certificate, distinct: ctx.distinct })
                .with(item);
            let expected = match c.predicted.value() {
                Some(v) if v <= 4 => v.to_string(),
                _ => ">4".to_string(),
            };
            let ok = match c.predicted.value() {
                Some(v) if v <= 4 => value == v,
                _ => value > 4,
            };
            let status = if ok { Status::Pass } else { Status::Fail };
            Ok(Outcome::new(expected, value, status, witness))
        }));
    }
    Ok(jobs)
}

fn thm25_jobs(opts: &VerifyOptions) -> Result<Vec<Job>> {
    let mut jobs = Vec::new();
    for g in corpus(opts.range_or(1..=6))? {
        if g.order() < 2 {
            continue;
        }
        let girth_five = girth(&g).is_none_or(|c| c >= 5);
        jobs.push(Job::new("class-five", g.clone(), |g, ctx| {
            let c = classify_with(g, ctx.distinct)?;
            let (value, item) = pi2(g, ctx)?;
            let predicted_five = c.predicted == Predicted::Five;
            let expected = if predicted_five { "5" } else { "!5" };
            let witness = Witness::one(Item::Certificate { certificate: c.certificate, distinct: ctx.distinct })
                .with(item);
            let status = if predicted_five == (value == 5) { Status::Pass } else { Status::Disagreement };
            Ok(Outcome::new(expected, value, status, witness))
        }));
        if girth_five {
            jobs.push(girth_five_job(g));
        }
    }
    jobs.push(value_job("pi2-petersen", spec("petersen"), 5, pi2));
    jobs.push(Job::new("class-petersen", spec("petersen"), |g, ctx| {
        let c = classify_with(g, ctx.distinct)?;
        let status = if c.predicted == Predicted::Five { Status::Pass } else { Status::Fail };
        let witness = Witness::one(Item::Certificate { certificate: c.certificate, distinct: ctx.distinct });
        Ok(Outcome::new("five", c.predicted, status, witness))
    }));
    for s in ["f:1,1,1", "f:2,0,0", "f:2,1,1", "f:3,2,4"] {
        jobs.push(value_job("pi2-family-f", spec(s), 4, pi2));
        jobs.push(girth_five_job(spec(s)));
    }
    Ok(jobs)
}

/// On girth-five graphs, `π*₂ = 4` exactly when `γ_t = 3` or the graph is a
/// two-hub family member.
fn girth_five_job(instance: impl Into<Instance>) -> Job {
    Job::new("girth5-four", instance, |g, ctx| {
        let (value, item) = pi2(g, ctx)?;
        let gt = gamma_t(g)?;
        let member = in_family_f(g);
        let rhs = gt.value == 3 || member.is_some();
        let mut witness = Witness::one(item).with(Item::TotalDominating(gt.set().unwrap_or_default()));
        if let Some((i, j, k)) = member {
            witness = witness.with(Item::Note(format!("f:{i},{j},{k}")));
        }
        let status = if rhs == (value == 4) { Status::Pass } else { Status::Disagreement };
        Ok(Outcome::new(format!("four={rhs}"), format!("four={}", value == 4), status, witness))
    })
}

fn roman_jobs(opts: &VerifyOptions) -> Result<Vec<Job>> {
    let mut jobs = Vec::new();
    for n in opts.range_or(3..=12) {
        let s = FamilySpec::Path(n);
        if let Some(e) = closed_form(&s, OracleInvariant::GammaR) {
            jobs.push(value_job("roman-paths", s.clone(), e, |g, _| roman(g)));
        }
        if closed_form(&s, OracleInvariant::PiStar2).is_some() {
            jobs.push(pi2_oracle_job("pi2-paths", s));
        }
    }
    for n in 1..=6 {
        for g in enumerate_classes(n)? {
            jobs.push(Job::new("roman-sandwich", g.clone(), |g, _| {
                let (gm, dom) = domination(g)?;
                let (gr, rf) = roman(g)?;
                Ok(Outcome::holds(
                    gm <= gr && gr <= 2 * gm,
                    format!("gamma={gm},gamma_r={gr}"),
                    Witness::one(dom).with(rf),
                    Status::Fail,
                ))
            }));
            if !g.has_isolated_vertex() {
                jobs.push(Job::new("roman-min-n1", g, |g, _| {
                    let f = roman_function_min_n1(g)?;
                    let broken = min_n1_violations(g, &f);
                    Ok(Outcome::holds(broken.is_empty(), broken.join("+"), Item::roman(&f).into(), Status::Fail))
                }));
            }
        }
    }
    Ok(jobs)
}

/// Clauses of the structure of a minimum-weight Roman function with fewest
/// weight-one vertices that `f` breaks, by letter.
fn min_n1_violations(g: &Graph, f: &pebblab_core::invariants::RomanFunction) -> Vec<&'static str> {
    let nb = |v: usize| g.neighbors(v).iter().copied();
    let mut out = Vec::new();
    if f.v1.iter().any(|x| nb(x).any(|y| f.v2.contains(y))) {
        out.push("a");
    }
    if f.v1.iter().any(|x| nb(x).any(|y| f.v1.contains(y))) {
        out.push("b");
    }
    if f.v1.iter().any(|x| !nb(x).any(|y| f.v0.contains(y))) {
        out.push("c");
    }
    if f.v0.iter().any(|x| nb(x).filter(|&y| f.v1.contains(y)).count() > 1) {
        out.push("d");
    }
    let keep = f.v0.union(f.v2).to_vec();
    if !keep.is_empty() {
        let h = g.induced_subgraph(&keep);
        let v2 = VertexSet::from_vertices(
            keep.iter().enumerate().filter(|&(_, &v)| f.v2.contains(v)).map(|(i, _)| i),
        );
        let minimum = gamma(&h).map(|r| r.value == f.v2.len() as u64).unwrap_or(false);
        if !h.dominates(v2) || !minimum {
            out.push("e");
        }
    }
    out
}

fn tree_jobs(opts: &VerifyOptions) -> Result<Vec<Job>> {
    let range = opts.range_or(3..=12);
    if *range.start() < 3 {
        return Err(Error::InvalidParameters("random trees need at least 3 vertices".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut jobs = Vec::new();
    for _ in 0..opts.trees {
        let n = rng.gen_range(range.clone());
        let seq: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
        let s = FamilySpec::PruferTree(seq);
        let path = FamilySpec::Path(n);
        jobs.push(Job::new("tree-pi2-bound", s.clone(), move |g, ctx| {
            let (value, item) = pi2(g, ctx)?;
            Ok(Outcome::at_most("ceil(2n/3)", ceil_div(2 * n, 3), value, item.into(), Status::Disagreement))
        }));
        jobs.push(Job::new("tree-pi2-5n7", s.clone(), move |g, ctx| {
            let (value, item) = pi2(g, ctx)?;
            Ok(Outcome::at_most("ceil(5n/7)", ceil_div(5 * n, 7), value, item.into(), Status::Disagreement))
        }));
        let p = path.clone();
        jobs.push(Job::new("tree-roman-vs-path", s.clone(), move |g, _| {
            let (value, item) = roman(g)?;
            let bound = gamma_r(&build(&p)?)?.value;
            Ok(Outcome::at_most("gamma_r(P_n)", bound, value, item.into(), Status::Disagreement))
        }));
        jobs.push(Job::new("tree-gamma-vs-path", s, move |g, _| {
            let (value, item) = domination(g)?;
            let bound = gamma(&build(&path)?)?.value;
            Ok(Outcome::at_most("gamma(P_n)", bound, value, item.into(), Status::Disagreement))
        }));
    }
    Ok(jobs)
}

fn grid_jobs(opts: &VerifyOptions) -> Result<Vec<Job>> {
    let range = opts.range_or(2..=6);
    let mut jobs = Vec::new();
    for n in range.clone().filter(|&n| n >= 2) {
        jobs.push(pi2_oracle_job("pi2-grid-x2", FamilySpec::Grid(n, 2)));
    }
    for n in range.clone().filter(|&n| n >= 2) {
        jobs.push(pi2_oracle_job("pi2-grid-x3", FamilySpec::Grid(n, 3)));
    }
    for n in range.clone().filter(|&n| (2..=4).contains(&n)) {
        let s = FamilySpec::Grid(n, 3);
        let expected = closed_form(&s, OracleInvariant::PiStar).expect("grid x3 oracle");
        jobs.push(value_job("pistar-grid-x3", s, expected, pistar));
    }
    for n in range.filter(|&n| (4..=6).contains(&n)) {
        let s = FamilySpec::Grid(n, 4);
        let expected = closed_form(&s, OracleInvariant::PiStar2).expect("grid x4 oracle");
        if n == 4 {
            jobs.push(value_job("pi2-grid-x4", s, expected, pi2));
        } else {
            jobs.push(grid_upper_job(s.clone(), expected));
            if opts.long {
                jobs.push(grid_lower_job(s, expected));
            }
        }
    }
    jobs.extend(coverage_jobs());
    Ok(jobs)
}

/// A solvable cap-2 configuration of the predicted weight exists.
fn grid_upper_job(s: FamilySpec, weight: u64) -> Job {
    Job::new("pi2-grid-x4-upper", s, move |g, ctx| {
        let out = find_configuration(g, 2, weight as u32, SearchOrder::HeavyFirst, &ctx.enumeration)?;
        Ok(match out {
            SearchOutcome::Found(c) => {
                let item = Item::Solvable { cap: Some(2), config: c };
                Outcome::new(format!("<={weight}"), weight, Status::Pass, item.into())
            }
            SearchOutcome::Exhausted => {
                Outcome::new(format!("<={weight}"), "none", Status::Fail, Witness::none())
            }
            SearchOutcome::BudgetHit { examined } => Outcome::new(
                format!("<={weight}"),
                "budget",
                Status::SkippedBudget,
                Item::Note(format!("examined {examined}")).into(),
            ),
        })
    })
}

/// No solvable cap-2 configuration one pebble lighter exists.
fn grid_lower_job(s: FamilySpec, weight: u64) -> Job {
    Job::new("pi2-grid-x4-lower", s, move |g, ctx| {
        let lighter = weight as u32 - 1;
        let out = find_configuration(g, 2, lighter, SearchOrder::Lex, &ctx.enumeration)?;
        let expected = format!(">{lighter}");
        Ok(match out {
            SearchOutcome::Exhausted => Outcome::new(expected, format!(">{lighter}"), Status::Pass, Witness::none()),
            SearchOutcome::Found(c) => {
                let item = Item::Solvable { cap: Some(2), config: c };
                Outcome::new(expected, lighter, Status::Fail, item.into())
            }
            SearchOutcome::BudgetHit { examined } => Outcome::new(
                expected,
                "budget",
                Status::SkippedBudget,
                Item::Note(format!("examined {examined}")).into(),
            ),
        })
    })
}

fn ratio_string(r: Ratio<u64>) -> String {
    r.to_string()
}

/// Every cap-`cap` configuration of exactly `weight` pebbles, in
/// lexicographic order.
pub fn for_each_configuration(n: usize, cap: u32, weight: u32, mut visit: impl FnMut(&[u32])) {
    fn rec(v: usize, left: u32, cap: u32, c: &mut Vec<u32>, visit: &mut dyn FnMut(&[u32])) {
        if v == c.len() {
            if left == 0 {
                visit(c);
            }
            return;
        }
        let room = (c.len() - v - 1) as u32 * cap;
        for x in (0..=left.min(cap)).rev() {
            if left - x > room {
                break;
            }
            c[v] = x;
            rec(v + 1, left - x, cap, c, visit);
        }
        c[v] = 0;
    }
    rec(0, weight, cap, &mut vec![0; n], &mut visit);
}

fn coverage_jobs() -> Vec<Job> {
    let mut jobs = Vec::new();
    let big = spec("grid:6x4");
    jobs.push(Job::new("ratio-one-pebble", big.clone(), |g, ctx| {
        let p = Pebbler::with_options(g, ctx.enumeration.search);
        let f = Configuration::single_source(g.order(), 0, 1);
        let r = p.covering_ratio(&f)?;
        let status = if r == Ratio::from_integer(1) { Status::Pass } else { Status::Fail };
        Ok(Outcome::new("1", ratio_string(r), status, Item::Config(f).into()))
    }));
    jobs.push(Job::new("ratio-two-on-degree-4", big.clone(), |g, ctx| {
        let p = Pebbler::with_options(g, ctx.enumeration.search);
        let v = (0..g.order()).find(|&v| g.degree(v) == 4).expect("interior vertex");
        let f = Configuration::single_source(g.order(), v, 2);
        let r = p.covering_ratio(&f)?;
        let status = if r == Ratio::new(5, 2) { Status::Pass } else { Status::Fail };
        Ok(Outcome::new("5/2", ratio_string(r), status, Item::Config(f).into()))
    }));
    jobs.push(Job::new("two-unit-blocks", big, |g, ctx| {
        let p = Pebbler::with_options(g, ctx.enumeration.search);
        let n = g.order();
        let mut worst = (Ratio::from_integer(0), Configuration::zeros(n));
        for a in 0..n {
            for b in a + 1..n {
                for (ca, cb) in [(1, 1), (1, 2), (2, 1), (2, 2)] {
                    let mut counts = vec![0; n];
                    counts[a] = ca;
                    counts[b] = cb;
                    let f = Configuration::new(counts);
                    for block in p.blocks(&f)? {
                        if block.sources.len() == 2 && block.covering_ratio() > worst.0 {
                            worst = (block.covering_ratio(), f.clone());
                        }
                    }
                }
            }
        }
        Ok(block_outcome(worst))
    }));
    for (s, max_weight) in [("grid:4x4", 6), ("grid:5x4", 5), ("grid:6x4", 5)] {
        jobs.push(Job::new("block-ratio", spec(s), move |g, ctx| {
            let p = Pebbler::with_options(g, ctx.enumeration.search);
            let mut worst = (Ratio::from_integer(0), Configuration::zeros(g.order()));
            let mut failure = None;
            for w in 1..=max_weight {
                for_each_configuration(g.order(), 2, w, |c| {
                    let f = Configuration::new(c.to_vec());
                    match p.blocks(&f) {
                        Ok(blocks) => {
                            for block in blocks {
                                if block.covering_ratio() > worst.0 {
                                    worst = (block.covering_ratio(), f.clone());
                                }
                            }
                        }
                        Err(e) => failure = Some(e),
                    }
                });
            }
            match failure {
                Some(e) => Err(e),
                None => Ok(block_outcome(worst)),
            }
        }));
    }
    jobs
}

fn block_outcome((ratio, f): (Ratio<u64>, Configuration)) -> Outcome {
    let status = if ratio <= Ratio::from_integer(3) { Status::Pass } else { Status::Fail };
    Outcome::new("<=3", ratio_string(ratio), status, Item::Config(f).into())
}

fn corona_jobs(opts: &VerifyOptions) -> Result<Vec<Job>> {
    let keep = |n: usize| opts.range.as_ref().is_none_or(|r| r.contains(&n));
    let mut jobs = Vec::new();
    let mut add = |kind: &str, base: &str, ns: RangeInclusive<usize>, h: &str| {
        for n in ns.filter(|&n| keep(n)) {
            let s = spec(&format!("{kind}:({base}:{n},{h})"));
            let entry = oracle(&s, OracleInvariant::PiStar2).expect("corona oracle entry");
            jobs.push(pi2_oracle_job(entry.claim, s));
        }
    };
    add("corona", "cycle", 4..=6, "complete:1");
    add("corona", "path", 4..=5, "complete:1");
    add("corona", "complete", 3..=4, "complete:1");
    add("ncorona", "complete", 2..=3, "complete:2");
    add("ncorona", "cycle", 4..=7, "complete:1");
    add("ncorona", "path", 4..=6, "complete:1");
    // the second operand does not change the value
    add("corona", "cycle", 5..=5, "complete:2");
    add("corona", "complete", 3..=3, "path:3");
    add("ncorona", "cycle", 5..=5, "complete:2");
    Ok(jobs)
}

fn bound_jobs(opts: &VerifyOptions) -> Result<Vec<Job>> {
    let mut jobs = Vec::new();
    for g in corpus(opts.range_or(3..=6))? {
        jobs.push(Job::new("bound-chain", g, |g, ctx| {
            let n = g.order();
            let (ps, _) = pistar(g, ctx)?;
            let (p2, item) = pi2(g, ctx)?;
            let (gr, rf) = roman(g)?;
            let (gm, dom) = domination(g)?;
            let ok = ps <= p2 && p2 <= gr && gr <= 2 * gm && p2 <= ceil_div(2 * n, 3);
            let detail = format!("pistar={ps},pi2={p2},gamma_r={gr},gamma={gm}");
            Ok(Outcome::holds(ok, detail, Witness::one(item).with(rf).with(dom), Status::Fail))
        }));
    }
    for n in 1..=6 {
        for g in enumerate_classes(n)? {
            jobs.push(Job::new("upper-extreme", g, |g, ctx| {
                let parts = components(g);
                let mut total = 0;
                for c in &parts {
                    total += pi2(&g.induced_subgraph(c), ctx)?.0;
                }
                let matching = parts.iter().all(|c| c.len() <= 2);
                let n = g.order() as u64;
                Ok(Outcome::holds(
                    (total == n) == matching,
                    format!("pi2={total},small_components={matching}"),
                    Witness::none(),
                    Status::Fail,
                ))
            }));
        }
    }
    for g in corpus(2..=opts.range.as_ref().map_or(7, |r| (*r.end()).min(7)))? {
        if diameter(&g)? == 2 {
            let n = g.order() as u64;
            jobs.push(Job::new("diam2-pebbling", g, move |g, ctx| {
                let (value, item) = pebbling(g, ctx)?;
                Ok(Outcome::at_most("n+1", n + 1, value, item.into(), Status::Fail))
            }));
        }
    }
    for d in 1..=3 {
        jobs.push(value_job("pebbling-hypercube", FamilySpec::Hypercube(d), 1 << d, pebbling));
    }
    jobs.push(value_job("pebbling-path", FamilySpec::Path(3), 4, pebbling));
    jobs.push(Job::new("class0-hypercube", FamilySpec::Hypercube(3), |g, ctx| {
        let (value, item) = pebbling(g, ctx)?;
        let class0 = value == g.order() as u64;
        let status = if class0 { Status::Pass } else { Status::Fail };
        Ok(Outcome::new("true", class0, status, item.into()))
    }));
    jobs.push(value_job("pistar-cycle", FamilySpec::Cycle(4), 3, pistar));
    jobs.push(Job::new("cap-semantics", FamilySpec::Path(4), |g, ctx| {
        // the cap binds the starting counts only; this replay holds three
        // pebbles on vertex 1 after the first move
        let f = Configuration::with_cap(vec![2, 2, 0, 0], 2)?;
        let moves = MoveSequence { steps: vec![(0, 1), (1, 2)], target: 2 };
        let peak = match moves.replay(g, &f) {
            Ok(_) => peak_count(&f, &moves),
            Err(e) => {
                let item = Item::Note(format!("replay rejected: {e:?}"));
                return Ok(Outcome::new("accepted", "rejected", Status::Fail, item.into()));
            }
        };
        let p = Pebbler::with_options(g, ctx.enumeration.search);
        let reachable = p.reachable(&f, 2)?.is_some();
        let ok = peak > u64::from(f.cap().unwrap_or(u32::MAX)) && reachable;
        let status = if ok { Status::Pass } else { Status::Fail };
        let computed = if ok { "accepted".to_string() } else { format!("reachable={reachable}") };
        Ok(Outcome::new("accepted", computed, status, Item::Moves { config: f, moves }.into()))
    }));
    Ok(jobs)
}

/// Largest count any vertex holds while `moves` is replayed from `f`.
fn peak_count(f: &Configuration, moves: &MoveSequence) -> u64 {
    let mut counts: Vec<u64> = f.counts().iter().map(|&c| c as u64).collect();
    let mut peak = counts.iter().copied().max().unwrap_or(0);
    for &(a, b) in &moves.steps {
        counts[a] -= 2;
        counts[b] += 1;
        peak = peak.max(counts[b]);
    }
    peak
}

/// Expands a suite into its jobs, in canonical order.
pub fn jobs(suite: Suite, opts: &VerifyOptions) -> Result<Vec<Job>> {
    Ok(match suite {
        Suite::Thm1 => thm1_jobs(opts)?,
        Suite::Thm25 => thm25_jobs(opts)?,
        Suite::Roman => roman_jobs(opts)?,
        Suite::Trees => tree_jobs(opts)?,
        Suite::Grids => grid_jobs(opts)?,
        Suite::Corona => corona_jobs(opts)?,
        Suite::Bounds => bound_jobs(opts)?,
        Suite::All => {
            let mut all = Vec::new();
            for s in Suite::EACH {
                all.extend(jobs(s, opts)?);
            }
            all
        }
    })
}

fn run_job(job: &Job, ctx: &Ctx, timing: bool) -> Record {
    let start = Instant::now();
    let outcome = job.instance.graph().and_then(|g| (job.task)(&g, ctx));
    let runtime_ms = if timing { start.elapsed().as_millis() as u64 } else { 0 };
    let outcome = outcome.unwrap_or_else(|e| match e {
        Error::BudgetExceeded { lower_bound, .. } => Outcome::new(
            "-",
            "budget",
            Status::SkippedBudget,
            Item::Note(format!("lower bound {lower_bound}")).into(),
        ),
        Error::WeightCapExceeded { .. } | Error::CapExceeded { .. } => {
            Outcome::new("-", "budget", Status::SkippedBudget, Item::Note(e.to_string()).into())
        }
        other => Outcome::new("-", "error", Status::Fail, Item::Note(other.to_string()).into()),
    });
    Record {
        claim_id: job.claim.clone(),
        instance: job.instance.to_string(),
        expected: outcome.expected,
        computed: outcome.computed,
        status: outcome.status,
        runtime_ms,
        witness: outcome.witness,
    }
}

pub fn header(suite: Suite, opts: &VerifyOptions) -> Vec<String> {
    let range = opts
        .range
        .as_ref()
        .map_or("default".to_string(), |r| format!("{}..{}", r.start(), r.end()));
    vec![
        format!("pebblab verify suite={suite}"),
        format!("seed={} range={range} trees={}", opts.seed, opts.trees),
        format!(
            "triple conditions: u,v,w {}",
            if opts.distinct { "pairwise distinct" } else { "w may equal u or v" }
        ),
        format!(
            "config_budget={} weight_budget={} long={}",
            opts.config_budget, opts.weight_budget, opts.long
        ),
        "claim_id\tinstance\texpected\tcomputed\tstatus\truntime_ms\twitness".to_string(),
    ]
}

/// Runs a suite on a pool of `opts.jobs` workers.
pub fn run(suite: Suite, opts: &VerifyOptions) -> Result<Report> {
    let jobs = jobs(suite, opts)?;
    let ctx = Ctx { enumeration: opts.enumeration(), distinct: opts.distinct };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(opts.jobs.max(1))
        .build()
        .map_err(|e| Error::InvalidParameters(e.to_string()))?;
    let records = pool.install(|| jobs.par_iter().map(|j| run_job(j, &ctx, opts.timing)).collect());
    Ok(Report { header: header(suite, opts), records })
}

/// Records whose witnesses fail to replay, with the reasons.
pub fn replay(report: &Report) -> Vec<(usize, String)> {
    report
        .records
        .iter()
        .enumerate()
        .filter_map(|(i, r)| {
            let g = match r.instance.parse::<Instance>().and_then(|inst| inst.graph()) {
                Ok(g) => g,
                Err(e) => return Some((i, format!("instance: {e}"))),
            };
            let failures = r.witness.replay(&g, r.computed_value());
            (!failures.is_empty()).then(|| {
                let text: Vec<String> = failures.iter().map(ToString::to_string).collect();
                (i, text.join("; "))
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges() {
        assert_eq!(parse_range("2..5").unwrap(), 2..=5);
        assert_eq!(parse_range("2..=5").unwrap(), 2..=5);
        assert_eq!(parse_range("4").unwrap(), 4..=4);
        assert!(parse_range("5..2").is_err());
        assert!(parse_range("a..2").is_err());
    }

    #[test]
    fn suite_names() {
        for s in Suite::EACH {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert_eq!("all".parse::<Suite>().unwrap(), Suite::All);
        assert!("thm9".parse::<Suite>().is_err());
    }

    #[test]
    fn configuration_walk() {
        let mut seen = Vec::new();
        for_each_configuration(3, 2, 2, |c| seen.push(c.to_vec()));
        assert_eq!(seen.len(), 6);
        assert_eq!(seen[0], vec![2, 0, 0]);
        assert_eq!(seen[5], vec![0, 0, 2]);
        let mut count = 0;
        for_each_configuration(16, 2, 6, |_| count += 1);
        assert_eq!(count, 41328);
    }

    #[test]
    fn corona_suite_passes() {
        let opts = VerifyOptions { timing: false, ..Default::default() };
        let report = run(Suite::Corona, &opts).unwrap();
        assert_eq!(report.summary().pass, report.records.len());
        assert!(replay(&report).is_empty());
    }
}
