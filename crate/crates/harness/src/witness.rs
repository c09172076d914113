//! Witness strings carried by report records, and their replay checks.
//!
//! A witness is a `;`-separated list of items, each `kind:payload`:
//!
//! | kind | payload | check |
//! |---|---|---|
//! | `solvable` | `t=<cap or ->:<counts>` | solvable, within the cap |
//! | `unsolvable` | `<counts>` | some vertex unreachable |
//! | `dom`, `tdom` | `<v>,<v>,...` | dominating / totally dominating |
//! | `roman` | `v2=<set>|v1=<set>` | Roman dominating |
//! | `cert` | `distinct` or `relaxed`, then a certificate | certificate validates |
//! | `moves` | `<counts>|<from>-><to>,...|<target>` | replays onto the target |
//! | `config` | `<counts>` | length matches (data only) |
//! | `note` | free text | none |
//!
//! When the record's computed field is an integer, weighted items must agree
//! with it: a solvable configuration or a set or Roman function has that
//! weight, an unsolvable configuration has one pebble less.

use std::fmt;
use std::str::FromStr;

use pebblab_core::characterization::{Certificate, Condition, Triple};
use pebblab_core::invariants::RomanFunction;
use pebblab_core::pebbling::is_solvable;
use pebblab_core::{Configuration, Error, Graph, MoveSequence, Result, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Item {
    Solvable { cap: Option<u32>, config: Configuration },
    Unsolvable(Configuration),
    Dominating(VertexSet),
    TotalDominating(VertexSet),
    Roman { v2: VertexSet, v1: VertexSet },
    Certificate { certificate: Certificate, distinct: bool },
    Moves { config: Configuration, moves: MoveSequence },
    Config(Configuration),
    Note(String),
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Witness(pub Vec<Item>);

impl Witness {
    pub fn none() -> Self {
        Witness(Vec::new())
    }

    pub fn one(item: Item) -> Self {
        Witness(vec![item])
    }

    pub fn with(mut self, item: Item) -> Self {
        self.0.push(item);
        self
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl From<Item> for Witness {
    fn from(item: Item) -> Self {
        Witness::one(item)
    }
}

impl Item {
    pub fn roman(f: &RomanFunction) -> Item {
        Item::Roman { v2: f.v2, v1: f.v1 }
    }
}

fn write_set(f: &mut fmt::Formatter<'_>, s: VertexSet) -> fmt::Result {
    for (i, v) in s.iter().enumerate() {
        if i > 0 {
            write!(f, ",")?;
        }
        write!(f, "{v}")?;
    }
    Ok(())
}

impl fmt::Display for Item {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Item::Solvable { cap, config } => match cap {
                Some(t) => write!(f, "solvable:t={t}:{config}"),
                None => write!(f, "solvable:t=-:{config}"),
            },
            Item::Unsolvable(config) => write!(f, "unsolvable:{config}"),
            Item::Dominating(s) => {
                write!(f, "dom:")?;
                write_set(f, *s)
            }
            Item::TotalDominating(s) => {
                write!(f, "tdom:")?;
                write_set(f, *s)
            }
            Item::Roman { v2, v1 } => {
                write!(f, "roman:v2=")?;
                write_set(f, *v2)?;
                write!(f, "|v1=")?;
                write_set(f, *v1)
            }
            Item::Certificate { certificate, distinct } => {
                let mode = if *distinct { "distinct" } else { "relaxed" };
                write!(f, "cert:{mode}:{certificate}")
            }
            Item::Moves { config, moves } => {
                write!(f, "moves:{config}|")?;
                for (i, (a, b)) in moves.steps.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{a}->{b}")?;
                }
                write!(f, "|{}", moves.target)
            }
            Item::Config(config) => write!(f, "config:{config}"),
            Item::Note(text) => write!(f, "note:{text}"),
        }
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "-");
        }
        for (i, item) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ";")?;
            }
            write!(f, "{item}")?;
        }
        Ok(())
    }
}

fn bad(msg: impl Into<String>) -> Error {
    Error::Parse { line: 1, message: msg.into() }
}

fn parse_usize(s: &str) -> Result<usize> {
    s.trim().parse().map_err(|_| bad(format!("bad integer {s:?}")))
}

fn parse_set(s: &str) -> Result<VertexSet> {
    s.split(',')
        .filter(|x| !x.is_empty())
        .map(|x| {
            let v = parse_usize(x)?;
            if v >= 64 {
                return Err(bad(format!("vertex {v} outside a word set")));
            }
            Ok(v)
        })
        .collect::<Result<Vec<usize>>>()
        .map(VertexSet::from_vertices)
}

/// Reads `k=v` fields separated by commas, in the given order.
fn fields<'a>(s: &'a str, keys: &[&str]) -> Result<Vec<&'a str>> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != keys.len() {
        return Err(bad(format!("expected fields {keys:?} in {s:?}")));
    }
    parts
        .iter()
        .zip(keys)
        .map(|(p, k)| {
            p.strip_prefix(k)
                .and_then(|r| r.strip_prefix('='))
                .ok_or_else(|| bad(format!("expected {k}= in {s:?}")))
        })
        .collect()
}

pub fn parse_certificate(s: &str) -> Result<Certificate> {
    let (kind, rest) = s.split_once(':').ok_or_else(|| bad(format!("bad certificate {s:?}")))?;
    Ok(match kind {
        "dominating" => Certificate::DominatingVertex(parse_usize(rest)?),
        "total" => {
            let (a, b) = rest.split_once(',').ok_or_else(|| bad("expected a,b"))?;
            Certificate::TotalPair(parse_usize(a)?, parse_usize(b)?)
        }
        "pair" => {
            let f = fields(rest, &["u", "v"])?;
            Certificate::Pair(parse_usize(f[0])?, parse_usize(f[1])?)
        }
        "i" | "ii" | "iii" => {
            let condition = match kind {
                "i" => Condition::I,
                "ii" => Condition::II,
                _ => Condition::III,
            };
            let f = fields(rest, &["u", "v", "w"])?;
            Certificate::Triple(Triple {
                u: parse_usize(f[0])?,
                v: parse_usize(f[1])?,
                w: parse_usize(f[2])?,
                condition,
            })
        }
        "none" => {
            let f = fields(rest, &["gamma", "gamma_t"])?;
            Certificate::Excluded { gamma: parse_usize(f[0])? as u64, gamma_t: parse_usize(f[1])? as u64 }
        }
        _ => return Err(bad(format!("unknown certificate kind {kind:?}"))),
    })
}

impl FromStr for Item {
    type Err = Error;

    fn from_str(s: &str) -> Result<Item> {
        let (kind, payload) = s.split_once(':').ok_or_else(|| bad(format!("bad witness item {s:?}")))?;
        Ok(match kind {
            "solvable" => {
                let rest = payload.strip_prefix("t=").ok_or_else(|| bad("expected t="))?;
                let (cap, counts) = rest.split_once(':').ok_or_else(|| bad("expected cap"))?;
                let cap = if cap == "-" { None } else { Some(parse_usize(cap)? as u32) };
                Item::Solvable { cap, config: counts.parse()? }
            }
            "unsolvable" => Item::Unsolvable(payload.parse()?),
            "dom" => Item::Dominating(parse_set(payload)?),
            "tdom" => Item::TotalDominating(parse_set(payload)?),
            "roman" => {
                let (v2, v1) = payload.split_once('|').ok_or_else(|| bad("expected v2|v1"))?;
                let v2 = v2.strip_prefix("v2=").ok_or_else(|| bad("expected v2="))?;
                let v1 = v1.strip_prefix("v1=").ok_or_else(|| bad("expected v1="))?;
                Item::Roman { v2: parse_set(v2)?, v1: parse_set(v1)? }
            }
            "cert" => {
                let (mode, cert) = payload.split_once(':').ok_or_else(|| bad("expected mode"))?;
                let distinct = match mode {
                    "distinct" => true,
                    "relaxed" => false,
                    _ => return Err(bad(format!("unknown mode {mode:?}"))),
                };
                Item::Certificate { certificate: parse_certificate(cert)?, distinct }
            }
            "moves" => {
                let mut parts = payload.split('|');
                let (Some(config), Some(steps), Some(target), None) =
                    (parts.next(), parts.next(), parts.next(), parts.next())
                else {
                    return Err(bad("expected counts|steps|target"));
                };
                let steps = steps
                    .split(',')
                    .filter(|x| !x.is_empty())
                    .map(|st| {
                        let (a, b) = st.split_once("->").ok_or_else(|| bad("expected a->b"))?;
                        Ok((parse_usize(a)?, parse_usize(b)?))
                    })
                    .collect::<Result<Vec<_>>>()?;
                Item::Moves {
                    config: config.parse()?,
                    moves: MoveSequence { steps, target: parse_usize(target)? },
                }
            }
            "config" => Item::Config(payload.parse()?),
            "note" => Item::Note(payload.to_string()),
            _ => return Err(bad(format!("unknown witness kind {kind:?}"))),
        })
    }
}

impl FromStr for Witness {
    type Err = Error;

    fn from_str(s: &str) -> Result<Witness> {
        if s == "-" || s.is_empty() {
            return Ok(Witness::none());
        }
        s.split(';').map(str::parse).collect::<Result<Vec<Item>>>().map(Witness)
    }
}

/// Why a witness item failed replay.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReplayFailure {
    pub item: String,
    pub reason: String,
}

impl fmt::Display for ReplayFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.item, self.reason)
    }
}

fn check_len(g: &Graph, config: &Configuration) -> std::result::Result<(), String> {
    if config.len() == g.order() {
        Ok(())
    } else {
        Err(format!("{} counts for {} vertices", config.len(), g.order()))
    }
}

fn check_value(expected: Option<u64>, got: u64) -> std::result::Result<(), String> {
    match expected {
        Some(e) if e != got => Err(format!("weight {got} disagrees with computed {e}")),
        _ => Ok(()),
    }
}

fn check_set(g: &Graph, s: VertexSet) -> std::result::Result<(), String> {
    if s.is_subset(g.vertex_set()) {
        Ok(())
    } else {
        Err("set names vertices outside the graph".into())
    }
}

impl Item {
    /// Re-validates the item against `g` using engine primitives only.
    /// `computed` is the record's computed value when it is an integer.
    pub fn replay(&self, g: &Graph, computed: Option<u64>) -> std::result::Result<(), String> {
        match self {
            Item::Solvable { cap, config } => {
                check_len(g, config)?;
                if let Some(t) = cap {
                    if config.max_count() > *t {
                        return Err(format!("count above the cap {t}"));
                    }
                }
                if !is_solvable(g, config).map_err(|e| e.to_string())? {
                    return Err("configuration is not solvable".into());
                }
                check_value(computed, config.weight())
            }
            Item::Unsolvable(config) => {
                check_len(g, config)?;
                if is_solvable(g, config).map_err(|e| e.to_string())? {
                    return Err("configuration is solvable".into());
                }
                check_value(computed.map(|c| c.saturating_sub(1)), config.weight())
            }
            Item::Dominating(s) => {
                check_set(g, *s)?;
                if !g.dominates(*s) {
                    return Err("set does not dominate".into());
                }
                check_value(computed, s.len() as u64)
            }
            Item::TotalDominating(s) => {
                check_set(g, *s)?;
                if !g.totally_dominates(*s) {
                    return Err("set does not totally dominate".into());
                }
                check_value(computed, s.len() as u64)
            }
            Item::Roman { v2, v1 } => {
                check_set(g, v2.union(*v1))?;
                let f = RomanFunction {
                    v0: g.vertex_set().difference(v2.union(*v1)),
                    v1: *v1,
                    v2: *v2,
                };
                if !f.is_roman_dominating(g) {
                    return Err("not a Roman dominating function".into());
                }
                check_value(computed, f.weight())
            }
            Item::Certificate { certificate, distinct } => {
                let in_range = certificate.vertices().iter().all(|&v| v < g.order());
                if in_range && g.fits_word() && certificate.validate(g, *distinct) {
                    Ok(())
                } else {
                    Err("certificate does not validate".into())
                }
            }
            Item::Moves { config, moves } => {
                check_len(g, config)?;
                moves.replay(g, config).map(|_| ()).map_err(|e| format!("{e:?}"))
            }
            Item::Config(config) => check_len(g, config),
            Item::Note(_) => Ok(()),
        }
    }
}

impl Witness {
    pub fn replay(&self, g: &Graph, computed: Option<u64>) -> Vec<ReplayFailure> {
        self.0
            .iter()
            .filter_map(|item| {
                item.replay(g, computed)
                    .err()
                    .map(|reason| ReplayFailure { item: item.to_string(), reason })
            })
            .collect()
    }
}
