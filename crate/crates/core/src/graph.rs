//! Finite simple graphs over dense vertex indices, bicliques, biclique
//! systems, and the constructions the counterexample is assembled from.
//!
//! Canonical index maps:
//! - [`blowup`]: copy `a` of vertex `v` is `v * m + a`.
//! - [`or_product`]: `(g, h)` is `g * |H| + h`.

use std::collections::BTreeSet;

use serde_json::json;

use crate::bitset::BitSet;
use crate::certificate::Certificate;
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Graph {
    order: usize,
    rows: Vec<BitSet>,
}

impl Graph {
    pub fn empty(order: usize) -> Self {
        Graph {
            order,
            rows: vec![BitSet::new(order); order],
        }
    }

    pub fn from_edges(order: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut g = Graph::empty(order);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Builds the graph on `order` vertices where `u ~ v` iff `adjacent(u, v)`;
    /// the predicate is only consulted for `u < v`.
    pub fn from_fn(order: usize, mut adjacent: impl FnMut(usize, usize) -> bool) -> Self {
        let mut g = Graph::empty(order);
        for u in 0..order {
            for v in u + 1..order {
                if adjacent(u, v) {
                    g.rows[u].insert(v);
                    g.rows[v].insert(u);
                }
            }
        }
        g
    }

    /// Rows must be symmetric with an empty diagonal.
    pub(crate) fn from_rows_unchecked(rows: Vec<BitSet>) -> Self {
        let order = rows.len();
        debug_assert!(rows.iter().all(|r| r.capacity() == order));
        Graph { order, rows }
    }

    pub fn complete(k: usize) -> Self {
        Graph::from_fn(k, |_, _| true)
    }

    pub fn cycle(k: usize) -> Self {
        assert!(k >= 3, "cycles need at least three vertices");
        Graph::from_fn(k, |u, v| v == u + 1 || (u == 0 && v == k - 1))
    }

    pub fn path(k: usize) -> Self {
        Graph::from_fn(k, |u, v| v == u + 1)
    }

    /// Parts `[0, a)` and `[a, a + b)`.
    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        Graph::from_fn(a + b, |u, v| u < a && v >= a)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        if u >= self.order || v >= self.order {
            return Err(Error::invalid(format!(
                "edge ({u}, {v}) outside a graph of order {}",
                self.order
            )));
        }
        if u == v {
            return Err(Error::invalid(format!("loop at vertex {u}")));
        }
        self.rows[u].insert(v);
        self.rows[v].insert(u);
        Ok(())
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u].contains(v)
    }

    pub fn neighbors(&self, v: usize) -> &BitSet {
        &self.rows[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].count()
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(BitSet::count).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.order).flat_map(move |u| self.rows[u].iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn complement(&self) -> Graph {
        let rows = (0..self.order)
            .map(|u| {
                let mut r = BitSet::full(self.order);
                r.difference_with(&self.rows[u]);
                r.remove(u);
                r
            })
            .collect();
        Graph::from_rows_unchecked(rows)
    }

    pub fn induced(&self, vertices: &[usize]) -> Graph {
        Graph::from_fn(vertices.len(), |a, b| self.has_edge(vertices[a], vertices[b]))
    }

    pub fn is_independent(&self, set: &[usize]) -> bool {
        set.iter()
            .enumerate()
            .all(|(k, &u)| set[k + 1..].iter().all(|&v| u != v && !self.has_edge(u, v)))
    }

    pub fn is_clique(&self, set: &[usize]) -> bool {
        set.iter()
            .enumerate()
            .all(|(k, &u)| set[k + 1..].iter().all(|&v| self.has_edge(u, v)))
    }
}

/// A complete bipartite graph `B(U, W)` with disjoint nonempty sides stored
/// as sorted vertex lists.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Biclique {
    left: Vec<usize>,
    right: Vec<usize>,
}

impl Biclique {
    pub fn new(left: impl IntoIterator<Item = usize>, right: impl IntoIterator<Item = usize>) -> Result<Self> {
        let left: BTreeSet<usize> = left.into_iter().collect();
        let right: BTreeSet<usize> = right.into_iter().collect();
        if left.is_empty() || right.is_empty() {
            return Err(Error::invalid("biclique sides must be nonempty"));
        }
        if let Some(v) = left.intersection(&right).next() {
            return Err(Error::invalid(format!("vertex {v} lies on both biclique sides")));
        }
        Ok(Biclique {
            left: left.into_iter().collect(),
            right: right.into_iter().collect(),
        })
    }

    /// Like [`Biclique::new`] but returns `None` when a side is empty.
    pub fn nonempty(left: impl IntoIterator<Item = usize>, right: impl IntoIterator<Item = usize>) -> Result<Option<Self>> {
        let left: Vec<usize> = left.into_iter().collect();
        let right: Vec<usize> = right.into_iter().collect();
        if left.is_empty() || right.is_empty() {
            return Ok(None);
        }
        Biclique::new(left, right).map(Some)
    }

    pub fn left(&self) -> &[usize] {
        &self.left
    }

    pub fn right(&self) -> &[usize] {
        &self.right
    }

    pub fn edge_count(&self) -> usize {
        self.left.len() * self.right.len()
    }

    /// Whether the unordered pair `{u, v}` crosses the bipartition.
    pub fn covers(&self, u: usize, v: usize) -> bool {
        let l = |x: &usize| self.left.binary_search(x).is_ok();
        let r = |x: &usize| self.right.binary_search(x).is_ok();
        (l(&u) && r(&v)) || (l(&v) && r(&u))
    }

    fn max_vertex(&self) -> usize {
        self.left.last().copied().max(self.right.last().copied()).unwrap_or(0)
    }

    /// The blown-up biclique under the map `(v, a) -> v * m + a`.
    pub fn blowup(&self, m: usize) -> Biclique {
        let blow = |side: &[usize]| side.iter().flat_map(|&v| (0..m).map(move |a| v * m + a)).collect();
        Biclique {
            left: blow(&self.left),
            right: blow(&self.right),
        }
    }

    /// Applies an injective vertex relabelling.
    pub fn relabel(&self, map: impl Fn(usize) -> usize) -> Biclique {
        let mut left: Vec<_> = self.left.iter().map(|&v| map(v)).collect();
        let mut right: Vec<_> = self.right.iter().map(|&v| map(v)).collect();
        left.sort_unstable();
        right.sort_unstable();
        Biclique { left, right }
    }

    /// The biclique as a graph on `order` vertices.
    pub fn to_graph(&self, order: usize) -> Graph {
        let mut g = Graph::empty(order);
        for &u in &self.left {
            for &w in &self.right {
                g.rows[u].insert(w);
                g.rows[w].insert(u);
            }
        }
        g
    }
}

/// A list of bicliques over `[0, host_order)` meant to cover every edge of a
/// host graph between once and `bound` times; `bound == 1` is a partition.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BicliqueSystem {
    host_order: usize,
    parts: Vec<Biclique>,
    bound: usize,
}

impl BicliqueSystem {
    pub fn new(host_order: usize, parts: Vec<Biclique>, bound: usize) -> Result<Self> {
        if bound == 0 {
            return Err(Error::invalid("multiplicity bound must be positive"));
        }
        if let Some(b) = parts.iter().find(|b| b.max_vertex() >= host_order) {
            return Err(Error::invalid(format!(
                "biclique vertex {} outside host of order {host_order}",
                b.max_vertex()
            )));
        }
        Ok(BicliqueSystem {
            host_order,
            parts,
            bound,
        })
    }

    pub fn host_order(&self) -> usize {
        self.host_order
    }

    pub fn parts(&self) -> &[Biclique] {
        &self.parts
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn with_bound(mut self, bound: usize) -> Result<Self> {
        if bound == 0 {
            return Err(Error::invalid("multiplicity bound must be positive"));
        }
        self.bound = bound;
        Ok(self)
    }

    /// Blows every part up by `m`, giving a system on `host_order * m` vertices.
    pub fn blowup(&self, m: usize) -> BicliqueSystem {
        BicliqueSystem {
            host_order: self.host_order * m,
            parts: self.parts.iter().map(|b| b.blowup(m)).collect(),
            bound: self.bound,
        }
    }

    pub fn into_parts(self) -> Vec<Biclique> {
        self.parts
    }
}

/// Checks that every part is a biclique of `g` (no non-edge is covered) and
/// that every edge is covered between 1 and `sys.bound()` times.
///
/// Work is proportional to the sum over vertices of the sizes of the opposite
/// sides of the parts containing them; memory is one counter per vertex.
pub fn verify_biclique_system(g: &Graph, sys: &BicliqueSystem) -> Result<Certificate> {
    if g.order() != sys.host_order {
        return Err(Error::invalid(format!(
            "system host order {} does not match graph order {}",
            sys.host_order,
            g.order()
        )));
    }
    let n = g.order();
    let t = sys.bound;

    // For each vertex, the parts containing it and on which side.
    let mut incidence: Vec<Vec<(u32, bool)>> = vec![Vec::new(); n];
    for (k, b) in sys.parts.iter().enumerate() {
        for &u in &b.left {
            incidence[u].push((k as u32, true));
        }
        for &w in &b.right {
            incidence[w].push((k as u32, false));
        }
    }

    let mut counts = vec![0u32; n];
    let mut touched = Vec::new();
    let mut max_mult = 0u32;
    let mut histogram = vec![0u64; t + 1];
    let mut failure = None;

    'vertices: for u in 0..n {
        for &(k, on_left) in &incidence[u] {
            let b = &sys.parts[k as usize];
            let opposite = if on_left { &b.right } else { &b.left };
            for &v in opposite {
                if v > u {
                    if counts[v] == 0 {
                        touched.push(v);
                    }
                    counts[v] += 1;
                }
            }
        }
        // Pairs (u, v), v > u, that are edges or were touched.
        let mut candidates: Vec<usize> = g.neighbors(u).iter().filter(|&v| v > u).collect();
        candidates.extend(touched.iter().copied().filter(|&v| !g.has_edge(u, v)));
        candidates.sort_unstable();
        for v in candidates {
            let c = counts[v];
            let edge = g.has_edge(u, v);
            let kind = if !edge && c > 0 {
                Some("non-edge covered")
            } else if edge && c == 0 {
                Some("edge uncovered")
            } else if edge && c as usize > t {
                Some("edge covered too often")
            } else {
                None
            };
            if let Some(kind) = kind {
                failure = Some(json!({ "kind": kind, "pair": [u, v], "multiplicity": c }));
                break 'vertices;
            }
            if edge {
                max_mult = max_mult.max(c);
                histogram[c as usize] += 1;
            }
        }
        for v in touched.drain(..) {
            counts[v] = 0;
        }
    }

    let cert = match failure {
        Some(w) => Certificate::fail("biclique-system", w),
        None => Certificate::pass("biclique-system").with_witness(json!({
            "max_multiplicity": max_mult,
            "edges_by_multiplicity": histogram[1..].to_vec(),
        })),
    };
    Ok(cert
        .param("order", n)
        .param("edges", g.edge_count())
        .param("parts", sys.parts.len())
        .param("bound", t))
}

/// Star partition in increasing vertex order: part `v` is `B({v}, later
/// neighbours of v)`, skipped when empty. At most `N - 1` parts.
pub fn star_partition(g: &Graph) -> BicliqueSystem {
    let parts = (0..g.order())
        .filter_map(|v| {
            let later: Vec<usize> = g.neighbors(v).iter().filter(|&w| w > v).collect();
            if later.is_empty() {
                None
            } else {
                Some(Biclique::new([v], later).expect("star sides are disjoint and nonempty"))
            }
        })
        .collect();
    BicliqueSystem {
        host_order: g.order(),
        parts,
        bound: 1,
    }
}

/// `m`-blowup: copy `a` of `v` is `v * m + a`; copies of adjacent vertices
/// are adjacent, copies of one vertex are not.
pub fn blowup(g: &Graph, m: usize) -> Graph {
    assert!(m >= 1, "blowup factor must be positive");
    let order = g.order() * m;
    let rows = (0..order)
        .map(|x| {
            let mut row = BitSet::new(order);
            for w in g.neighbors(x / m).iter() {
                row.insert_range(w * m, m);
            }
            row
        })
        .collect();
    Graph::from_rows_unchecked(rows)
}

/// OR product: `(g, h) ~ (g', h')` iff `g ~ g'` or `h ~ h'`.
pub fn or_product(g: &Graph, h: &Graph) -> Graph {
    let nh = h.order();
    let order = g.order() * nh;
    let rows = (0..order)
        .map(|x| {
            let (gi, hi) = (x / nh, x % nh);
            let mut row = BitSet::new(order);
            for gj in 0..g.order() {
                if g.has_edge(gi, gj) {
                    row.insert_range(gj * nh, nh);
                } else {
                    row.or_shifted(h.neighbors(hi), gj * nh, nh);
                }
            }
            row
        })
        .collect();
    Graph::from_rows_unchecked(rows)
}
