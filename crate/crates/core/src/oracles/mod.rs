//! Exact brute-force solvers used as ground truth by the checks.
//!
//! Every oracle is exact or fails with [`Error::ResourceLimit`]; none returns
//! an unlabeled heuristic answer. Witnesses are deterministic for a given
//! input (the first optimum met by a fixed search order).

mod biclique;
mod coloring;
mod independence;
mod rectangles;

pub use biclique::{enumerate_bicliques, min_biclique_partition, BicliqueCover};
pub use coloring::{chromatic_bounds, chromatic_number, ChromaticBounds, Coloring};
pub use independence::{independence_number, max_clique, IndependentSet};
pub use rectangles::{maximal_rectangles, min_rectangle_cover, nondeterministic_complexity, BoolMatrix, Rectangle, RectangleCover};

use crate::error::{Error, Result};

/// Size guard and search-node budget for one oracle call.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchLimits {
    pub max_order: usize,
    pub node_budget: u64,
}

impl SearchLimits {
    pub const fn new(max_order: usize, node_budget: u64) -> Self {
        SearchLimits {
            max_order,
            node_budget,
        }
    }

    pub(crate) fn check_order(&self, what: &str, order: usize) -> Result<()> {
        if order > self.max_order {
            return Err(Error::limit(format!("{what} input size"), order as u128, self.max_order as u128));
        }
        Ok(())
    }
}

pub(crate) struct Budget {
    what: &'static str,
    used: u64,
    limit: u64,
}

impl Budget {
    pub(crate) fn new(what: &'static str, limit: u64) -> Self {
        Budget { what, used: 0, limit }
    }

    #[inline]
    pub(crate) fn tick(&mut self) -> Result<()> {
        self.used += 1;
        if self.used > self.limit {
            return Err(Error::limit(format!("{} search nodes", self.what), self.used as u128, self.limit as u128));
        }
        Ok(())
    }

    pub(crate) fn used(&self) -> u64 {
        self.used
    }
}
