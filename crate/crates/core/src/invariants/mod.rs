//! Exact invariants: optimal and restricted optimal pebbling numbers, the
//! classical pebbling number, and domination numbers.

use std::fmt;

use crate::graph::VertexSet;
use crate::pebbling::Configuration;

mod domination;
mod optimal;

pub use domination::{gamma, gamma_r, gamma_t, roman_function_min_n1, RomanFunction, DOMINATION_MAX_ORDER};
pub use optimal::{
    find_configuration, is_class0, pebbling_lower_bound, pebbling_number, pebbling_number_with,
    pi_star, pi_star_t, pi_star_t_with, pi_star_with, EnumerationOptions, SearchOrder,
    SearchOutcome, PEBBLING_NUMBER_MAX_ORDER,
};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    Configuration(Configuration),
    Set(VertexSet),
    Roman(RomanFunction),
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::Configuration(c) => write!(f, "{c}"),
            Witness::Set(s) => write!(f, "{s}"),
            Witness::Roman(r) => write!(f, "{r}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantResult {
    pub value: u64,
    pub witness: Witness,
    /// True when every smaller value was ruled out by full enumeration.
    pub exhaustive: bool,
}

impl InvariantResult {
    pub fn configuration(&self) -> Option<&Configuration> {
        match &self.witness {
            Witness::Configuration(c) => Some(c),
            _ => None,
        }
    }

    pub fn set(&self) -> Option<VertexSet> {
        match &self.witness {
            Witness::Set(s) => Some(*s),
            _ => None,
        }
    }
}
