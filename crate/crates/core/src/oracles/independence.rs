use super::{Budget, SearchLimits};
use crate::bitset::BitSet;
use crate::error::Result;
use crate::graph::Graph;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndependentSet {
    pub size: usize,
    /// Sorted vertex indices of one maximum independent set.
    pub set: Vec<usize>,
    pub nodes: u64,
}

impl SearchLimits {
    pub const INDEPENDENCE: SearchLimits = SearchLimits::new(256, 200_000_000);
}

/// Exact `α(G)` with a witness: maximum clique of the complement.
pub fn independence_number(g: &Graph, limits: &SearchLimits) -> Result<IndependentSet> {
    limits.check_order("independence number", g.order())?;
    let (size, set, nodes) = clique_search(&g.complement(), limits.node_budget, "independence")?;
    Ok(IndependentSet { size, set, nodes })
}

/// Exact clique number with a witness.
pub fn max_clique(g: &Graph, limits: &SearchLimits) -> Result<(usize, Vec<usize>)> {
    limits.check_order("clique number", g.order())?;
    let (size, set, _) = clique_search(g, limits.node_budget, "clique")?;
    Ok((size, set))
}

/// Branch and bound with greedy-colouring bounds over bitset adjacency.
/// Vertices are relabelled by non-increasing degree so that bitset order is
/// the colouring order.
fn clique_search(g: &Graph, budget: u64, what: &'static str) -> Result<(usize, Vec<usize>, u64)> {
    let n = g.order();
    if n == 0 {
        return Ok((0, Vec::new(), 0));
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let mut pos = vec![0usize; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let adj: Vec<BitSet> = order
        .iter()
        .map(|&v| BitSet::from_indices(n, g.neighbors(v).iter().map(|w| pos[w])))
        .collect();

    let mut search = CliqueSearch {
        adj: &adj,
        best: Vec::new(),
        current: Vec::new(),
        budget: Budget::new(what, budget),
    };
    // Seed with a greedy clique so the first bounds already prune.
    let mut cand = BitSet::full(n);
    while let Some(v) = cand.first() {
        search.best.push(v);
        cand.intersect_with(&adj[v]);
    }
    search.expand(BitSet::full(n))?;

    let mut set: Vec<usize> = search.best.iter().map(|&i| order[i]).collect();
    set.sort_unstable();
    Ok((set.len(), set, search.budget.used()))
}

struct CliqueSearch<'a> {
    adj: &'a [BitSet],
    best: Vec<usize>,
    current: Vec<usize>,
    budget: Budget,
}

impl CliqueSearch<'_> {
    fn expand(&mut self, mut cand: BitSet) -> Result<()> {
        self.budget.tick()?;
        let (verts, bounds) = self.colour_sort(&cand);
        for k in (0..verts.len()).rev() {
            if self.current.len() + bounds[k] <= self.best.len() {
                return Ok(());
            }
            let v = verts[k];
            self.current.push(v);
            let next = cand.intersection(&self.adj[v]);
            if next.is_empty() {
                if self.current.len() > self.best.len() {
                    self.best = self.current.clone();
                }
            } else {
                self.expand(next)?;
            }
            self.current.pop();
            cand.remove(v);
        }
        Ok(())
    }

    /// Greedy sequential colouring; returns vertices in colour order with the
    /// colour count reached at each position.
    fn colour_sort(&self, cand: &BitSet) -> (Vec<usize>, Vec<usize>) {
        let mut verts = Vec::with_capacity(cand.count());
        let mut bounds = Vec::with_capacity(verts.capacity());
        let mut uncoloured = cand.clone();
        let mut colour = 0;
        while !uncoloured.is_empty() {
            colour += 1;
            let mut q = uncoloured.clone();
            while let Some(v) = q.first() {
                q.remove(v);
                q.difference_with(&self.adj[v]);
                uncoloured.remove(v);
                verts.push(v);
                bounds.push(colour);
            }
        }
        (verts, bounds)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn alpha(g: &Graph) -> usize {
        let r = independence_number(g, &SearchLimits::INDEPENDENCE).unwrap();
        assert!(g.is_independent(&r.set));
        assert_eq!(r.set.len(), r.size);
        r.size
    }

    fn brute_alpha(g: &Graph) -> usize {
        let n = g.order();
        (0u32..1 << n)
            .filter(|&m| {
                let set: Vec<usize> = (0..n).filter(|&i| m >> i & 1 == 1).collect();
                g.is_independent(&set)
            })
            .map(|m| m.count_ones() as usize)
            .max()
            .unwrap_or(0)
    }

    #[test]
    fn small_graphs() {
        for k in 1..7 {
            assert_eq!(alpha(&Graph::complete(k)), 1);
            assert_eq!(alpha(&Graph::empty(k)), k);
        }
        assert_eq!(alpha(&Graph::cycle(5)), 2);
        assert_eq!(alpha(&Graph::cycle(7)), 3);
        assert_eq!(alpha(&Graph::complete_bipartite(2, 3)), 3);
        assert_eq!(alpha(&Graph::empty(0)), 0);
    }

    #[test]
    fn agrees_with_enumeration() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..60 {
            let n = rng.gen_range(1..=12);
            let p = rng.gen_range(0.1..0.9);
            let g = Graph::from_fn(n, |_, _| rng.gen_bool(p));
            assert_eq!(alpha(&g), brute_alpha(&g));
        }
    }

    #[test]
    fn order_and_budget_limits() {
        let tight = SearchLimits::new(4, 10);
        assert!(independence_number(&Graph::empty(5), &tight).is_err());
        let starved = SearchLimits::new(100, 1);
        assert!(independence_number(&Graph::cycle(9), &starved).is_err());
    }
}
