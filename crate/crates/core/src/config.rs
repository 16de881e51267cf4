//! Run configuration shared by the CLI, the suites and the FFI layer.

use serde::{Deserialize, Serialize};

use crate::clis::AmbiguousEdge;
use crate::error::{Error, Result};
use crate::oracles::SearchLimits;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunConfig {
    /// Largest `n^7` accepted when building `G(n)`; the default admits `n <= 3`.
    pub vertex_limit: u64,
    /// Largest `n^(7t)` accepted for OR powers; the default admits `n = 2, t = 2`.
    pub product_vertex_limit: u64,
    /// Largest number of (clique, independent set) pairs in the reverse
    /// construction.
    pub pair_limit: usize,
    /// Search-node budget for every oracle call.
    pub node_budget: u64,
    pub ambiguous_edge: AmbiguousEdge,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            vertex_limit: 10_000,
            product_vertex_limit: 20_000,
            pair_limit: 5_000,
            node_budget: 200_000_000,
            ambiguous_edge: AmbiguousEdge::Nonedge,
        }
    }
}

impl RunConfig {
    pub fn validate(&self) -> Result<()> {
        if self.vertex_limit == 0 || self.product_vertex_limit == 0 || self.pair_limit == 0 || self.node_budget == 0 {
            return Err(Error::invalid("all limits must be positive"));
        }
        Ok(())
    }

    /// Independence search sized for `G(n)` under this configuration.
    pub fn independence_limits(&self) -> SearchLimits {
        SearchLimits::new(self.vertex_limit.max(SearchLimits::INDEPENDENCE.max_order as u64) as usize, self.node_budget)
    }

    pub fn chromatic_limits(&self) -> SearchLimits {
        SearchLimits::new(SearchLimits::CHROMATIC.max_order, self.node_budget)
    }

    pub fn rectangle_limits(&self) -> SearchLimits {
        SearchLimits::new(SearchLimits::RECTANGLES.max_order, self.node_budget)
    }

    pub fn biclique_limits(&self) -> SearchLimits {
        SearchLimits::new(SearchLimits::BICLIQUE.max_order, self.node_budget)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults() {
        let c = RunConfig::default();
        assert!(c.validate().is_ok());
        assert!(c.vertex_limit >= 3u64.pow(7) && c.vertex_limit < 4u64.pow(7));
        assert!(c.product_vertex_limit >= 2u64.pow(14));
        assert!(c.independence_limits().max_order >= 2187);
        let bad = RunConfig { pair_limit: 0, ..c };
        assert!(bad.validate().is_err());
    }
}
