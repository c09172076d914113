//! Named graph families, graph products, and the textual family grammar.
//!
//! Grammar (whitespace-free):
//!
//! ```text
//! spec    := name | name ":" params
//! params  := int | int "x" int | int ("," int)* | "(" spec "," spec ")"
//! ```
//!
//! Examples: `path:6`, `grid:4x5`, `corona:(cycle:5,complete:1)`, `f:3,2,4`,
//! `hypercube:3`, `petersen`, `prufer:3,3,1` (a tree of order 5).

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::{Graph, DEFAULT_MAX_ORDER};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FamilyKind {
    Path,
    Cycle,
    Complete,
    Star,
    Wheel,
    Petersen,
    Hypercube,
    Grid,
    Corona,
    NCorona,
    FFamily,
    PruferTree,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum FamilySpec {
    /// `P_n`, `n` vertices.
    Path(usize),
    /// `C_n`, `n ≥ 3`.
    Cycle(usize),
    /// `K_n`.
    Complete(usize),
    /// `K_{1,n}`: center 0 and `n` leaves.
    Star(usize),
    /// `W_{1,n}`: hub 0 joined to the rim cycle `1..=n`, `n ≥ 3`.
    Wheel(usize),
    Petersen,
    /// `Q^d` on binary `d`-tuples.
    Hypercube(usize),
    /// `P_n □ P_m`.
    Grid(usize, usize),
    /// `G ∘ H`.
    Corona(Box<FamilySpec>, Box<FamilySpec>),
    /// `G ⋆ H`.
    NCorona(Box<FamilySpec>, Box<FamilySpec>),
    /// `G_{i,j,k}`.
    FFamily { i: usize, j: usize, k: usize },
    /// Tree decoded from a Prüfer sequence; order is `len + 2`.
    PruferTree(Vec<usize>),
}

impl FamilySpec {
    pub fn kind(&self) -> FamilyKind {
        match self {
            FamilySpec::Path(_) => FamilyKind::Path,
            FamilySpec::Cycle(_) => FamilyKind::Cycle,
            FamilySpec::Complete(_) => FamilyKind::Complete,
            FamilySpec::Star(_) => FamilyKind::Star,
            FamilySpec::Wheel(_) => FamilyKind::Wheel,
            FamilySpec::Petersen => FamilyKind::Petersen,
            FamilySpec::Hypercube(_) => FamilyKind::Hypercube,
            FamilySpec::Grid(..) => FamilyKind::Grid,
            FamilySpec::Corona(..) => FamilyKind::Corona,
            FamilySpec::NCorona(..) => FamilyKind::NCorona,
            FamilySpec::FFamily { .. } => FamilyKind::FFamily,
            FamilySpec::PruferTree(_) => FamilyKind::PruferTree,
        }
    }

    pub fn corona(g: FamilySpec, h: FamilySpec) -> FamilySpec {
        FamilySpec::Corona(Box::new(g), Box::new(h))
    }

    pub fn ncorona(g: FamilySpec, h: FamilySpec) -> FamilySpec {
        FamilySpec::NCorona(Box::new(g), Box::new(h))
    }

    /// Order of the graph this spec builds, without building it.
    /// Saturates instead of overflowing.
    pub fn order(&self) -> usize {
        match self {
            FamilySpec::Path(n) | FamilySpec::Cycle(n) | FamilySpec::Complete(n) => *n,
            FamilySpec::Star(n) | FamilySpec::Wheel(n) => n.saturating_add(1),
            FamilySpec::Petersen => 10,
            FamilySpec::Hypercube(d) => {
                if *d >= usize::BITS as usize - 1 {
                    usize::MAX
                } else {
                    1 << d
                }
            }
            FamilySpec::Grid(n, m) => n.saturating_mul(*m),
            FamilySpec::Corona(g, h) | FamilySpec::NCorona(g, h) => {
                g.order().saturating_mul(h.order().saturating_add(1))
            }
            FamilySpec::FFamily { i, j, k } => 2usize
                .saturating_add(i.saturating_mul(2))
                .saturating_add(*j)
                .saturating_add(*k),
            FamilySpec::PruferTree(seq) => seq.len() + 2,
        }
    }

    /// Checks the family's parameter constraints.
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidParameters(msg));
        match self {
            FamilySpec::Path(n) | FamilySpec::Complete(n) | FamilySpec::Star(n) if *n < 1 => {
                bad(format!("{self}: size must be at least 1"))
            }
            FamilySpec::Cycle(n) | FamilySpec::Wheel(n) if *n < 3 => {
                bad(format!("{self}: size must be at least 3"))
            }
            FamilySpec::Hypercube(d) if *d < 1 => bad(format!("{self}: dimension must be at least 1")),
            FamilySpec::Grid(n, m) if *n < 1 || *m < 1 => {
                bad(format!("{self}: grid sides must be at least 1"))
            }
            FamilySpec::FFamily { i, j, k } => {
                if *i < 1 {
                    bad(format!("{self}: requires i >= 1"))
                } else if i + j < 2 {
                    bad(format!("{self}: requires i + j >= 2"))
                } else if i + k < 2 {
                    bad(format!("{self}: requires i + k >= 2"))
                } else {
                    Ok(())
                }
            }
            FamilySpec::PruferTree(seq) => {
                let n = seq.len() + 2;
                match seq.iter().find(|&&x| x >= n) {
                    Some(x) => bad(format!("{self}: entry {x} is not below the order {n}")),
                    None => Ok(()),
                }
            }
            FamilySpec::Corona(g, h) => {
                g.validate()?;
                h.validate()
            }
            FamilySpec::NCorona(g, h) => {
                g.validate()?;
                h.validate()?;
                if g.order() < 2 {
                    bad(format!("{self}: base graph must have order at least 2"))
                } else {
                    Ok(())
                }
            }
            _ => Ok(()),
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Path(n) => write!(f, "path:{n}"),
            FamilySpec::Cycle(n) => write!(f, "cycle:{n}"),
            FamilySpec::Complete(n) => write!(f, "complete:{n}"),
            FamilySpec::Star(n) => write!(f, "star:{n}"),
            FamilySpec::Wheel(n) => write!(f, "wheel:{n}"),
            FamilySpec::Petersen => write!(f, "petersen"),
            FamilySpec::Hypercube(d) => write!(f, "hypercube:{d}"),
            FamilySpec::Grid(n, m) => write!(f, "grid:{n}x{m}"),
            FamilySpec::Corona(g, h) => write!(f, "corona:({g},{h})"),
            FamilySpec::NCorona(g, h) => write!(f, "ncorona:({g},{h})"),
            FamilySpec::FFamily { i, j, k } => write!(f, "f:{i},{j},{k}"),
            FamilySpec::PruferTree(seq) => {
                write!(f, "prufer:")?;
                for (idx, x) in seq.iter().enumerate() {
                    if idx > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{x}")?;
                }
                Ok(())
            }
        }
    }
}

impl FromStr for FamilySpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<FamilySpec> {
        let s = s.trim();
        let (spec, rest) = parse_spec(s)?;
        if !rest.is_empty() {
            return Err(Error::parse(1, format!("trailing input {rest:?} in family spec")));
        }
        Ok(spec)
    }
}

fn parse_spec(s: &str) -> Result<(FamilySpec, &str)> {
    let name_end = s
        .find(|c: char| !(c.is_ascii_alphanumeric() || c == '_'))
        .unwrap_or(s.len());
    let name = &s[..name_end];
    let mut rest = &s[name_end..];
    let has_params = rest.starts_with(':');
    if has_params {
        rest = &rest[1..];
    }
    let err = |msg: &str| Error::parse(1, format!("{msg} in family spec {s:?}"));

    if matches!(name, "corona" | "ncorona") {
        if !has_params {
            return Err(err("missing operands"));
        }
        let inner = rest.strip_prefix('(').ok_or_else(|| err("expected '('"))?;
        let (g, after) = parse_spec(inner)?;
        let after = after.strip_prefix(',').ok_or_else(|| err("expected ','"))?;
        let (h, after) = parse_spec(after)?;
        let after = after.strip_prefix(')').ok_or_else(|| err("expected ')'"))?;
        let spec = if name == "corona" {
            FamilySpec::corona(g, h)
        } else {
            FamilySpec::ncorona(g, h)
        };
        return Ok((spec, after));
    }

    // Numeric parameters run until a ',' that is followed by a non-digit, or
    // a ')' closing an enclosing product.
    let param_end = if has_params {
        let bytes = rest.as_bytes();
        let mut end = 0;
        while end < bytes.len() {
            let c = bytes[end];
            if c == b')' {
                break;
            }
            if c == b',' && !bytes.get(end + 1).is_some_and(u8::is_ascii_digit) {
                break;
            }
            end += 1;
        }
        end
    } else {
        0
    };
    let params = &rest[..param_end];
    let rest = &rest[param_end..];

    let ints = |sep: char| -> Result<Vec<usize>> {
        if params.is_empty() {
            return Ok(Vec::new());
        }
        params
            .split(sep)
            .map(|p| p.parse::<usize>().map_err(|_| err("bad integer parameter")))
            .collect()
    };
    let one = || -> Result<usize> {
        match ints(',')?.as_slice() {
            [n] => Ok(*n),
            _ => Err(err("expected one integer parameter")),
        }
    };

    let spec = match name {
        "path" => FamilySpec::Path(one()?),
        "cycle" => FamilySpec::Cycle(one()?),
        "complete" => FamilySpec::Complete(one()?),
        "star" => FamilySpec::Star(one()?),
        "wheel" => FamilySpec::Wheel(one()?),
        "hypercube" => FamilySpec::Hypercube(one()?),
        "petersen" => {
            if has_params && !params.is_empty() {
                return Err(err("petersen takes no parameters"));
            }
            FamilySpec::Petersen
        }
        "grid" => match ints('x')?.as_slice() {
            [n, m] => FamilySpec::Grid(*n, *m),
            _ => return Err(err("expected NxM")),
        },
        "f" | "f_family" => match ints(',')?.as_slice() {
            [i, j, k] => FamilySpec::FFamily { i: *i, j: *j, k: *k },
            _ => return Err(err("expected i,j,k")),
        },
        "prufer" | "prufer_tree" => FamilySpec::PruferTree(ints(',')?),
        _ => return Err(err("unknown family")),
    };
    Ok((spec, rest))
}

/// Builds the graph for `spec` with the default order ceiling.
pub fn build(spec: &FamilySpec) -> Result<Graph> {
    build_with_max(spec, DEFAULT_MAX_ORDER)
}

pub fn build_with_max(spec: &FamilySpec, max_order: usize) -> Result<Graph> {
    spec.validate()?;
    let order = spec.order();
    if order > max_order {
        return Err(Error::Overflow { order, max: max_order });
    }
    let g = match spec {
        FamilySpec::Path(n) => Graph::from_edge_set(*n, (1..*n).map(|v| (v - 1, v)))?,
        FamilySpec::Cycle(n) => Graph::from_edge_set(*n, (0..*n).map(|v| (v, (v + 1) % n)))?,
        FamilySpec::Complete(n) => {
            Graph::from_edge_set(*n, (0..*n).flat_map(|u| (u + 1..*n).map(move |v| (u, v))))?
        }
        FamilySpec::Star(n) => Graph::from_edge_set(n + 1, (1..=*n).map(|v| (0, v)))?,
        FamilySpec::Wheel(n) => {
            let rim = (0..*n).map(|i| (1 + i, 1 + (i + 1) % n));
            let spokes = (1..=*n).map(|v| (0, v));
            Graph::from_edge_set(n + 1, rim.chain(spokes))?
        }
        FamilySpec::Petersen => {
            let outer = (0..5).map(|i| (i, (i + 1) % 5));
            let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
            let spokes = (0..5).map(|i| (i, i + 5));
            Graph::from_edge_set(10, outer.chain(inner).chain(spokes))?
        }
        FamilySpec::Hypercube(d) => {
            let n = 1usize << d;
            let edges = (0..n).flat_map(|x| {
                (0..*d).filter_map(move |b| {
                    let y = x ^ (1 << b);
                    (x < y).then_some((x, y))
                })
            });
            Graph::from_edge_set(n, edges)?
        }
        FamilySpec::Grid(n, m) => {
            let pn = build_with_max(&FamilySpec::Path(*n), max_order)?;
            let pm = build_with_max(&FamilySpec::Path(*m), max_order)?;
            cartesian_product_with_max(&pn, &pm, max_order)?
        }
        FamilySpec::Corona(g, h) => corona_with_max(
            &build_with_max(g, max_order)?,
            &build_with_max(h, max_order)?,
            max_order,
        )?,
        FamilySpec::NCorona(g, h) => neighborhood_corona_with_max(
            &build_with_max(g, max_order)?,
            &build_with_max(h, max_order)?,
            max_order,
        )?,
        FamilySpec::FFamily { i, j, k } => f_family(*i, *j, *k)?,
        FamilySpec::PruferTree(seq) => prufer_tree(seq)?,
    };
    Ok(g.with_label(spec.to_string()))
}

/// `G_{i,j,k}`: hubs `u = 0`, `v = 1`; path `p` is `u - (2+2p) - (3+2p) - v`;
/// then `j` pendants on `u`, then `k` pendants on `v`.
fn f_family(i: usize, j: usize, k: usize) -> Result<Graph> {
    let n = 2 + 2 * i + j + k;
    let mut edges = Vec::with_capacity(n);
    for p in 0..i {
        let a = 2 + 2 * p;
        edges.extend([(0, a), (a, a + 1), (a + 1, 1)]);
    }
    let first_pendant = 2 + 2 * i;
    edges.extend((0..j).map(|x| (0, first_pendant + x)));
    edges.extend((0..k).map(|x| (1, first_pendant + j + x)));
    Graph::from_edge_set(n, edges)
}

fn prufer_tree(seq: &[usize]) -> Result<Graph> {
    let n = seq.len() + 2;
    let mut degree = vec![1usize; n];
    for &x in seq {
        degree[x] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &x in seq {
        let leaf = (0..n).find(|&v| degree[v] == 1).expect("a leaf always exists");
        edges.push((leaf, x));
        degree[leaf] -= 1;
        degree[x] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    Graph::from_edge_set(n, edges)
}

/// Cartesian product `g □ h`; vertex `(a, x)` is numbered `a·|V(h)| + x`.
pub fn cartesian_product(g: &Graph, h: &Graph) -> Result<Graph> {
    cartesian_product_with_max(g, h, DEFAULT_MAX_ORDER)
}

pub fn cartesian_product_with_max(g: &Graph, h: &Graph, max_order: usize) -> Result<Graph> {
    if g.order() == 0 || h.order() == 0 {
        return Err(Error::InvalidParameters("cartesian product of an empty graph".into()));
    }
    let hn = h.order();
    let order = g.order().saturating_mul(hn);
    if order > max_order {
        return Err(Error::Overflow { order, max: max_order });
    }
    let mut edges = Vec::new();
    for a in 0..g.order() {
        edges.extend(h.edges().map(|(x, y)| (a * hn + x, a * hn + y)));
    }
    for (a, b) in g.edges() {
        edges.extend((0..hn).map(|x| (a * hn + x, b * hn + x)));
    }
    Graph::from_edge_set(order, edges)
}

fn product_layout(g: &Graph, h: &Graph, max_order: usize) -> Result<(usize, Vec<(usize, usize)>)> {
    let n = g.order();
    let hn = h.order();
    let order = n.saturating_mul(hn + 1);
    if order > max_order {
        return Err(Error::Overflow { order, max: max_order });
    }
    let mut edges: Vec<(usize, usize)> = g.edges().collect();
    for i in 0..n {
        let base = n + i * hn;
        edges.extend(h.edges().map(|(x, y)| (base + x, base + y)));
    }
    Ok((order, edges))
}

/// Corona `g ∘ h`: base vertices `0..n`, copy `i` of `h` at `n + i·|V(h)|`,
/// every vertex of copy `i` joined to base vertex `i`.
pub fn corona(g: &Graph, h: &Graph) -> Result<Graph> {
    corona_with_max(g, h, DEFAULT_MAX_ORDER)
}

pub fn corona_with_max(g: &Graph, h: &Graph, max_order: usize) -> Result<Graph> {
    let (order, mut edges) = product_layout(g, h, max_order)?;
    let (n, hn) = (g.order(), h.order());
    for i in 0..n {
        edges.extend((0..hn).map(|x| (i, n + i * hn + x)));
    }
    Graph::from_edge_set(order, edges)
}

/// Neighborhood corona `g ⋆ h`: same layout as [`corona`], but copy `i` is
/// joined to every neighbor of base vertex `i`.
pub fn neighborhood_corona(g: &Graph, h: &Graph) -> Result<Graph> {
    neighborhood_corona_with_max(g, h, DEFAULT_MAX_ORDER)
}

pub fn neighborhood_corona_with_max(g: &Graph, h: &Graph, max_order: usize) -> Result<Graph> {
    let (order, mut edges) = product_layout(g, h, max_order)?;
    let (n, hn) = (g.order(), h.order());
    for i in 0..n {
        for &u in g.neighbors(i) {
            edges.extend((0..hn).map(|x| (u, n + i * hn + x)));
        }
    }
    Graph::from_edge_set(order, edges)
}
