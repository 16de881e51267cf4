use super::{max_clique, Budget, SearchLimits};
use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coloring {
    pub colors: usize,
    /// `assignment[v]` in `0..colors`.
    pub assignment: Vec<usize>,
}

impl Coloring {
    pub fn is_proper(&self, g: &Graph) -> bool {
        self.assignment.len() == g.order()
            && self.assignment.iter().all(|&c| c < self.colors.max(1))
            && g.edges().all(|(u, v)| self.assignment[u] != self.assignment[v])
    }

    /// Colour classes, each sorted.
    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut classes = vec![Vec::new(); self.colors];
        for (v, &c) in self.assignment.iter().enumerate() {
            classes[c].push(v);
        }
        classes
    }
}

/// Outcome of a budgeted search: `lower <= χ(G) <= upper`, with a colouring
/// achieving `upper`. `exact` iff the bounds met.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChromaticBounds {
    pub lower: usize,
    pub upper: usize,
    pub coloring: Coloring,
    pub exact: bool,
}

impl SearchLimits {
    pub const CHROMATIC: SearchLimits = SearchLimits::new(64, 50_000_000);
}

/// Exact `χ(G)` with a witness colouring.
pub fn chromatic_number(g: &Graph, limits: &SearchLimits) -> Result<Coloring> {
    limits.check_order("chromatic number", g.order())?;
    let bounds = chromatic_bounds(g, limits.node_budget)?;
    if !bounds.exact {
        return Err(Error::limit(
            format!("chromatic search nodes (bounds {}..={})", bounds.lower, bounds.upper),
            limits.node_budget as u128 + 1,
            limits.node_budget as u128,
        ));
    }
    Ok(bounds.coloring)
}

/// DSATUR branch and bound. Runs until the bounds meet or `node_budget`
/// is spent; never fails on budget, it reports the interval instead.
pub fn chromatic_bounds(g: &Graph, node_budget: u64) -> Result<ChromaticBounds> {
    let n = g.order();
    if n == 0 {
        let coloring = Coloring { colors: 0, assignment: Vec::new() };
        return Ok(ChromaticBounds { lower: 0, upper: 0, coloring, exact: true });
    }
    let lower = match max_clique(g, &SearchLimits::new(usize::MAX, node_budget)) {
        Ok((size, _)) => size,
        Err(Error::ResourceLimit { .. }) => 1 + (g.edge_count() > 0) as usize,
        Err(e) => return Err(e),
    };

    let mut search = Dsatur::new(g);
    search.best = greedy_dsatur(g);
    let mut budget = Budget::new("chromatic", node_budget);
    let outcome = if search.best.colors > lower {
        search.branch(0, 0, lower, &mut budget)
    } else {
        Ok(())
    };
    let exact = match outcome {
        Ok(()) => true,
        Err(Error::ResourceLimit { .. }) => false,
        Err(e) => return Err(e),
    };
    let upper = search.best.colors;
    Ok(ChromaticBounds {
        lower: if exact { upper } else { lower },
        upper,
        coloring: search.best,
        exact,
    })
}

const UNCOLORED: usize = usize::MAX;

struct Dsatur<'a> {
    g: &'a Graph,
    colour: Vec<usize>,
    /// `counts[v][c]`: coloured neighbours of `v` with colour `c`.
    counts: Vec<Vec<u32>>,
    saturation: Vec<usize>,
    best: Coloring,
}

impl<'a> Dsatur<'a> {
    fn new(g: &'a Graph) -> Self {
        let n = g.order();
        Dsatur {
            g,
            colour: vec![UNCOLORED; n],
            counts: vec![vec![0; n]; n],
            saturation: vec![0; n],
            best: Coloring { colors: n, assignment: (0..n).collect() },
        }
    }

    fn pick(&self) -> usize {
        (0..self.g.order())
            .filter(|&v| self.colour[v] == UNCOLORED)
            .max_by_key(|&v| {
                let free_deg = self.g.neighbors(v).iter().filter(|&w| self.colour[w] == UNCOLORED).count();
                (self.saturation[v], free_deg, std::cmp::Reverse(v))
            })
            .expect("called with an uncoloured vertex")
    }

    fn set(&mut self, v: usize, c: usize) {
        self.colour[v] = c;
        for w in self.g.neighbors(v).iter() {
            if self.counts[w][c] == 0 {
                self.saturation[w] += 1;
            }
            self.counts[w][c] += 1;
        }
    }

    fn unset(&mut self, v: usize) {
        let c = self.colour[v];
        self.colour[v] = UNCOLORED;
        for w in self.g.neighbors(v).iter() {
            self.counts[w][c] -= 1;
            if self.counts[w][c] == 0 {
                self.saturation[w] -= 1;
            }
        }
    }

    fn branch(&mut self, coloured: usize, used: usize, lower: usize, budget: &mut Budget) -> Result<()> {
        budget.tick()?;
        if coloured == self.g.order() {
            self.best = Coloring { colors: used, assignment: self.colour.clone() };
            return Ok(());
        }
        let v = self.pick();
        // A new colour is only worth opening if it stays below the incumbent.
        let limit = (used + 1).min(self.best.colors - 1);
        for c in 0..limit {
            if self.counts[v][c] > 0 {
                continue;
            }
            self.set(v, c);
            let res = self.branch(coloured + 1, used.max(c + 1), lower, budget);
            self.unset(v);
            res?;
            if self.best.colors <= lower || self.best.colors <= used {
                return Ok(());
            }
        }
        Ok(())
    }
}

fn greedy_dsatur(g: &Graph) -> Coloring {
    let mut d = Dsatur::new(g);
    let mut used = 0;
    for _ in 0..g.order() {
        let v = d.pick();
        let c = (0..).find(|&c| c >= g.order() || d.counts[v][c] == 0).unwrap();
        d.set(v, c);
        used = used.max(c + 1);
    }
    Coloring { colors: used, assignment: d.colour }
}
