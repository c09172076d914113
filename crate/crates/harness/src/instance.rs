//! Self-contained instance strings for report records.
//!
//! An instance is either a family spec (`grid:4x4`, `corona:(cycle:5,complete:1)`)
//! or an explicit labeled graph `edges:<n>:<u>-<v>,<u>-<v>,...`. Either form
//! rebuilds the exact graph the record was computed on.

use std::fmt;
use std::str::FromStr;

use pebblab_core::family::build;
use pebblab_core::{Error, FamilySpec, Graph, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Instance {
    Family(FamilySpec),
    Edges(Graph),
}

impl Instance {
    pub fn graph(&self) -> Result<Graph> {
        match self {
            Instance::Family(spec) => build(spec),
            Instance::Edges(g) => Ok(g.clone()),
        }
    }

    pub fn spec(&self) -> Option<&FamilySpec> {
        match self {
            Instance::Family(spec) => Some(spec),
            Instance::Edges(_) => None,
        }
    }
}

impl From<FamilySpec> for Instance {
    fn from(spec: FamilySpec) -> Self {
        Instance::Family(spec)
    }
}

impl From<Graph> for Instance {
    fn from(g: Graph) -> Self {
        Instance::Edges(g)
    }
}

impl fmt::Display for Instance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Instance::Family(spec) => write!(f, "{spec}"),
            Instance::Edges(g) => {
                write!(f, "edges:{}:", g.order())?;
                for (i, (u, v)) in g.edges().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{u}-{v}")?;
                }
                Ok(())
            }
        }
    }
}

impl FromStr for Instance {
    type Err = Error;

    fn from_str(s: &str) -> Result<Instance> {
        let Some(rest) = s.strip_prefix("edges:") else {
            return Ok(Instance::Family(s.parse()?));
        };
        let bad = |msg: &str| Error::Parse { line: 1, message: format!("{msg} in instance {s:?}") };
        let (n, list) = rest.split_once(':').ok_or_else(|| bad("missing ':' after order"))?;
        let n: usize = n.parse().map_err(|_| bad("bad order"))?;
        let edges = list
            .split(',')
            .filter(|e| !e.is_empty())
            .map(|e| {
                let (u, v) = e.split_once('-').ok_or_else(|| bad("bad edge"))?;
                Ok((u.parse().map_err(|_| bad("bad vertex"))?, v.parse().map_err(|_| bad("bad vertex"))?))
            })
            .collect::<Result<Vec<(usize, usize)>>>()?;
        Ok(Instance::Edges(Graph::from_edges(n, edges)?))
    }
}
