use super::{Budget, SearchLimits};
use crate::error::{Error, Result};
use crate::graph::{star_partition, Biclique, BicliqueSystem, Graph};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BicliqueCover {
    /// `bp_t(G)`.
    pub size: usize,
    pub system: BicliqueSystem,
}

impl SearchLimits {
    pub const BICLIQUE: SearchLimits = SearchLimits::new(8, 100_000_000);
}

/// Every biclique of `g`, each unordered bipartition once with the smallest
/// vertex of `U ∪ W` in `U`.
pub fn enumerate_bicliques(g: &Graph) -> Vec<Biclique> {
    fn go(g: &Graph, v: usize, left: &mut Vec<usize>, right: &mut Vec<usize>, out: &mut Vec<Biclique>) {
        if v == g.order() {
            if !left.is_empty() && !right.is_empty() {
                out.push(Biclique::new(left.iter().copied(), right.iter().copied()).unwrap());
            }
            return;
        }
        go(g, v + 1, left, right, out);
        if right.iter().all(|&w| g.has_edge(v, w)) {
            left.push(v);
            go(g, v + 1, left, right, out);
            left.pop();
        }
        if !left.is_empty() && left.iter().all(|&u| g.has_edge(u, v)) {
            right.push(v);
            go(g, v + 1, left, right, out);
            right.pop();
        }
    }
    let mut out = Vec::new();
    go(g, 0, &mut Vec::new(), &mut Vec::new(), &mut out);
    out
}

/// Exact minimum number of bicliques covering every edge at least once and
/// at most `t` times (`t = 1`: biclique partition number).
pub fn min_biclique_partition(g: &Graph, t: usize, limits: &SearchLimits) -> Result<BicliqueCover> {
    if t == 0 {
        return Err(Error::invalid("multiplicity bound must be positive"));
    }
    limits.check_order("biclique partition", g.order())?;
    let edges: Vec<(usize, usize)> = g.edges().collect();
    if edges.len() > 64 {
        return Err(Error::limit("biclique partition edges", edges.len() as u128, 64));
    }
    let edge_id = |u: usize, v: usize| edges.binary_search(&(u.min(v), u.max(v))).unwrap();

    let bicliques = enumerate_bicliques(g);
    let masks: Vec<u64> = bicliques
        .iter()
        .map(|b| {
            let mut m = 0u64;
            for &u in b.left() {
                for &w in b.right() {
                    m |= 1 << edge_id(u, w);
                }
            }
            m
        })
        .collect();
    let mut containing = vec![Vec::new(); edges.len()];
    for (i, &m) in masks.iter().enumerate() {
        for (e, list) in containing.iter_mut().enumerate() {
            if m >> e & 1 == 1 {
                list.push(i);
            }
        }
    }
    let max_size = masks.iter().map(|m| m.count_ones()).max().unwrap_or(1) as usize;

    let stars = star_partition(g);
    let all = if edges.len() == 64 { !0 } else { (1u64 << edges.len()) - 1 };
    let mut search = CoverSearch {
        masks: &masks,
        containing: &containing,
        t: t as u8,
        counts: vec![0; edges.len()],
        saturated: 0,
        chosen: Vec::new(),
        max_size,
        budget: Budget::new("biclique partition", limits.node_budget),
    };
    let lower = edges.len().div_ceil(max_size.max(1));
    for k in lower..stars.len() {
        if search.dfs(all, k)? {
            let parts = search.chosen.iter().map(|&i| bicliques[i].clone()).collect();
            return Ok(BicliqueCover {
                size: k,
                system: BicliqueSystem::new(g.order(), parts, t)?,
            });
        }
    }
    Ok(BicliqueCover {
        size: stars.len(),
        system: stars.with_bound(t)?,
    })
}

struct CoverSearch<'a> {
    masks: &'a [u64],
    containing: &'a [Vec<usize>],
    t: u8,
    counts: Vec<u8>,
    saturated: u64,
    chosen: Vec<usize>,
    max_size: usize,
    budget: Budget,
}

impl CoverSearch<'_> {
    fn eligible(&self, b: usize) -> bool {
        self.masks[b] & self.saturated == 0
    }

    fn apply(&mut self, b: usize, delta: i8) {
        let mut m = self.masks[b];
        while m != 0 {
            let e = m.trailing_zeros() as usize;
            m &= m - 1;
            self.counts[e] = (self.counts[e] as i8 + delta) as u8;
            if self.counts[e] == self.t {
                self.saturated |= 1 << e;
            } else {
                self.saturated &= !(1 << e);
            }
        }
    }

    /// Whether `uncovered` can be covered with at most `left` more bicliques.
    fn dfs(&mut self, uncovered: u64, left: usize) -> Result<bool> {
        self.budget.tick()?;
        if uncovered == 0 {
            return Ok(true);
        }
        if left == 0 || (uncovered.count_ones() as usize) > left * self.max_size {
            return Ok(false);
        }
        // Branch on the uncovered edge with the fewest eligible bicliques.
        let mut best: Option<(usize, usize)> = None;
        let mut m = uncovered;
        while m != 0 {
            let e = m.trailing_zeros() as usize;
            m &= m - 1;
            let c = self.containing[e].iter().filter(|&&b| self.eligible(b)).count();
            if best.is_none_or(|(_, bc)| c < bc) {
                best = Some((e, c));
                if c == 0 {
                    return Ok(false);
                }
            }
        }
        let (e, _) = best.unwrap();
        let containing = self.containing;
        for &b in &containing[e] {
            if !self.eligible(b) {
                continue;
            }
            self.apply(b, 1);
            self.chosen.push(b);
            if self.dfs(uncovered & !self.masks[b], left - 1)? {
                self.apply(b, -1);
                return Ok(true);
            }
            self.chosen.pop();
            self.apply(b, -1);
        }
        Ok(false)
    }
}
