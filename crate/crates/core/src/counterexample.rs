//! The graph `G(n)` on `[n]^7`, its edge-disjoint pieces `G_i` (one per
//! subcube of the decomposition of `S`), the reduced graphs on `[n]^5`, the
//! explicit biclique partition assembled from star partitions, and the
//! `t`-cover of the OR power `G^t`.
//!
//! Vertex `(x_1, ..., x_d) ∈ [n]^d` has index `Σ (x_i - 1) n^(d - i)`
//! (mixed radix, most significant coordinate first). The OR power uses the
//! [`or_product`] map, so `(h_1, ..., h_t)` is `Σ h_i N^(t - i)` with
//! `N = n^7`.

use serde_json::json;

use crate::bitset::BitSet;
use crate::certificate::Certificate;
use crate::cube::{build_s, decompose_s, CubePoint, CubeSet, Subcube};
use crate::error::{Error, Result};
use crate::graph::{blowup, or_product, star_partition, verify_biclique_system, Biclique, BicliqueSystem, Graph};

pub const ARITY: usize = 7;

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct GridPoint {
    coords: Vec<u32>,
}

impl GridPoint {
    pub fn new(coords: Vec<u32>) -> Self {
        assert!(!coords.is_empty(), "grid points have positive arity");
        GridPoint { coords }
    }

    /// Checks every coordinate lies in `[1, n]`.
    pub fn in_grid(coords: Vec<u32>, n: u32) -> Result<Self> {
        if coords.is_empty() {
            return Err(Error::invalid("grid points have positive arity"));
        }
        if let Some(c) = coords.iter().find(|&&c| c < 1 || c > n) {
            return Err(Error::invalid(format!("coordinate {c} outside [1, {n}]")));
        }
        Ok(GridPoint { coords })
    }

    pub fn arity(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[u32] {
        &self.coords
    }

    /// Mixed-radix index in `[n]^arity`.
    pub fn index(&self, n: u32) -> usize {
        self.coords
            .iter()
            .fold(0usize, |acc, &c| acc * n as usize + (c - 1) as usize)
    }

    pub fn from_index(mut index: usize, n: u32, arity: usize) -> Self {
        let mut coords = vec![0u32; arity];
        for c in coords.iter_mut().rev() {
            *c = (index % n as usize) as u32 + 1;
            index /= n as usize;
        }
        GridPoint { coords }
    }
}

/// Restriction of `x` to the 1-based coordinates in `positions` (sorted).
pub fn project(x: &GridPoint, positions: &[usize]) -> Result<GridPoint> {
    if positions.is_empty() {
        return Err(Error::invalid("projection onto no coordinates"));
    }
    if positions.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::invalid("projection positions must be strictly increasing"));
    }
    let coords = positions
        .iter()
        .map(|&i| {
            if (1..=x.arity()).contains(&i) {
                Ok(x.coords[i - 1])
            } else {
                Err(Error::invalid(format!("position {i} outside [1, {}]", x.arity())))
            }
        })
        .collect::<Result<_>>()?;
    Ok(GridPoint { coords })
}

fn checked_power(n: usize, e: usize, what: &str, limit: u64) -> Result<usize> {
    let required = (n as u128).checked_pow(e as u32).unwrap_or(u128::MAX);
    if required > limit as u128 {
        return Err(Error::limit(what, required, limit as u128));
    }
    Ok(required as usize)
}

/// Digits (0-based) of every vertex of `[n]^arity`, row-major.
fn digit_table(n: usize, arity: usize, order: usize) -> Vec<u8> {
    let mut digits = vec![0u8; order * arity];
    for v in 0..order {
        let mut x = v;
        for i in (0..arity).rev() {
            digits[v * arity + i] = (x % n) as u8;
            x /= n;
        }
    }
    digits
}

/// Graph on `[n]^arity` with `x ~ y` iff the mask of `ρ(x, y)` is admissible.
fn pattern_graph(n: usize, arity: usize, admissible: &[bool], vertex_limit: u64) -> Result<Graph> {
    if n == 0 {
        return Err(Error::invalid("n must be positive"));
    }
    debug_assert!(!admissible[0], "the zero pattern would create loops");
    let order = checked_power(n, arity, &format!("[{n}]^{arity} vertices"), vertex_limit)?;
    let digits = digit_table(n, arity, order);
    Ok(Graph::from_fn(order, |u, v| {
        let (du, dv) = (&digits[u * arity..(u + 1) * arity], &digits[v * arity..(v + 1) * arity]);
        let mask = du
            .iter()
            .zip(dv)
            .fold(0usize, |m, (a, b)| m << 1 | (a != b) as usize);
        admissible[mask]
    }))
}

fn admissible_table(set: &CubeSet) -> Vec<bool> {
    set.mask_table()
}

/// `G(n)`: `x ~ y` iff `ρ(x, y) ∈ S`.
pub fn build_g(n: usize, vertex_limit: u64) -> Result<Graph> {
    pattern_graph(n, ARITY, &admissible_table(&build_s()), vertex_limit)
}

/// `G_i`: same vertices as `G(n)`, `x ~ y` iff `ρ(x, y) ∈ part`.
pub fn build_g_i(n: usize, part: &Subcube, vertex_limit: u64) -> Result<Graph> {
    if part.dim() != ARITY {
        return Err(Error::invalid(format!("piece must live in Q_7, got Q_{}", part.dim())));
    }
    if part.contains(&CubePoint::zeros(ARITY)) {
        return Err(Error::invalid("piece contains the zero pattern"));
    }
    let set = CubeSet::new(ARITY, part.members())?;
    pattern_graph(n, ARITY, &admissible_table(&set), vertex_limit)
}

/// A reduced graph on `[n]^k` (`k` = fixed coordinates of the piece) with
/// the map identifying its blowup with the piece's graph on `[n]^7`.
#[derive(Clone, Debug)]
pub struct ReducedGraph {
    pub graph: Graph,
    /// 1-based positions of the fixed coordinates, increasing.
    pub fixed_positions: Vec<usize>,
    /// 1-based positions of the free coordinates, increasing.
    pub free_positions: Vec<usize>,
    /// Copies per vertex in the blowup, `n^(free)`.
    pub blowup_factor: usize,
    /// `to_host[v * blowup_factor + a]` is the `[n]^7` index of copy `a` of
    /// reduced vertex `v`: fixed coordinates from `v`, free ones from `a`,
    /// both in mixed radix over increasing positions.
    pub to_host: Vec<usize>,
}

/// The reduced graph of a two-dimensional piece: vertices `[n]^5` indexed
/// over the fixed positions; `x ~ y` iff they differ exactly where the
/// piece's fixed value is 1.
pub fn reduced_graph(n: usize, part: &Subcube, vertex_limit: u64) -> Result<ReducedGraph> {
    if part.dim() != ARITY || part.fixed().len() != 5 {
        return Err(Error::invalid(format!(
            "reduced graph needs a piece of Q_7 with 5 fixed coordinates, got {} of Q_{}",
            part.fixed().len(),
            part.dim()
        )));
    }
    checked_power(n, ARITY, &format!("[{n}]^7 vertices"), vertex_limit)?;
    let fixed_positions: Vec<usize> = part.fixed().keys().copied().collect();
    let free_positions = part.free_coords();
    let pattern = part
        .fixed()
        .values()
        .fold(0usize, |m, &b| m << 1 | b as usize);
    if pattern == 0 {
        return Err(Error::invalid("piece fixes only zeros, so it contains the zero pattern"));
    }
    let k = fixed_positions.len();
    let mut admissible = vec![false; 1 << k];
    admissible[pattern] = true;
    let graph = pattern_graph(n, k, &admissible, vertex_limit)?;

    let copies = n.pow(free_positions.len() as u32);
    let reduced_order = graph.order();
    let mut to_host = vec![0usize; reduced_order * copies];
    let mut coords = vec![0u32; ARITY];
    for v in 0..reduced_order {
        let fixed_pt = GridPoint::from_index(v, n as u32, k);
        for a in 0..copies {
            let free_pt = GridPoint::from_index(a, n as u32, free_positions.len());
            for (p, c) in fixed_positions.iter().zip(fixed_pt.coords()) {
                coords[p - 1] = *c;
            }
            for (p, c) in free_positions.iter().zip(free_pt.coords()) {
                coords[p - 1] = *c;
            }
            to_host[v * copies + a] = GridPoint::new(coords.clone()).index(n as u32);
        }
    }
    Ok(ReducedGraph {
        graph,
        fixed_positions,
        free_positions,
        blowup_factor: copies,
        to_host,
    })
}

impl ReducedGraph {
    /// Whether `blowup(reduced, n^2)` and `host` agree on every pair under
    /// `to_host`.
    pub fn blowup_matches(&self, host: &Graph) -> bool {
        let blown = blowup(&self.graph, self.blowup_factor);
        if blown.order() != host.order() {
            return false;
        }
        (0..blown.order()).all(|x| {
            let hx = self.to_host[x];
            (0..blown.order()).all(|y| blown.has_edge(x, y) == host.has_edge(hx, self.to_host[y]))
        })
    }

    /// Star partition of the reduced graph, blown up and mapped into `[n]^7`.
    pub fn lifted_star_partition(&self) -> BicliqueSystem {
        let order = self.to_host.len();
        let parts = star_partition(&self.graph)
            .blowup(self.blowup_factor)
            .into_parts()
            .into_iter()
            .map(|b| b.relabel(|x| self.to_host[x]))
            .collect();
        BicliqueSystem::new(order, parts, 1).expect("lifted parts stay within the host")
    }
}

/// One piece of the partition of `G(n)`.
#[derive(Clone, Debug)]
pub struct PartitionPiece {
    pub subcube: Subcube,
    pub system: BicliqueSystem,
}

/// Per-piece partitions of `G(n)`, built lazily in decomposition order.
pub fn partition_pieces(n: usize, vertex_limit: u64) -> Result<impl Iterator<Item = Result<PartitionPiece>>> {
    if n == 0 {
        return Err(Error::invalid("n must be positive"));
    }
    checked_power(n, ARITY, &format!("[{n}]^7 vertices"), vertex_limit)?;
    Ok(decompose_s().into_iter().map(move |subcube| {
        let reduced = reduced_graph(n, &subcube, vertex_limit)?;
        Ok(PartitionPiece {
            system: reduced.lifted_star_partition(),
            subcube,
        })
    }))
}

/// Biclique partition of `G(n)` with at most `30 (n^5 - 1)` parts.
pub fn partition_g(n: usize, vertex_limit: u64) -> Result<BicliqueSystem> {
    let order = checked_power(n.max(1), ARITY, &format!("[{n}]^7 vertices"), vertex_limit)?;
    let mut parts = Vec::new();
    for piece in partition_pieces(n, vertex_limit)? {
        parts.extend(piece?.system.into_parts());
    }
    BicliqueSystem::new(order, parts, 1)
}

/// `30 (n^5 - 1)`.
pub fn partition_size_bound(n: usize) -> usize {
    30 * (n.pow(5) - 1)
}

/// Verifies the partition piece by piece: each piece's system must partition
/// its `G_i`, and the `G_i` must be edge-disjoint with union `G(n)`. Holds
/// `G(n)`, one `G_i`, and a running union in memory.
pub fn verify_partition_by_piece(n: usize, vertex_limit: u64) -> Result<Certificate> {
    let g = build_g(n, vertex_limit)?;
    let order = g.order();
    let mut union: Vec<BitSet> = vec![BitSet::new(order); order];
    let mut total_parts = 0usize;
    let mut edge_sum = 0usize;
    let mut failure = None;
    for (k, piece) in partition_pieces(n, vertex_limit)?.enumerate() {
        let piece = piece?;
        let gi = build_g_i(n, &piece.subcube, vertex_limit)?;
        edge_sum += gi.edge_count();
        total_parts += piece.system.len();
        let cert = verify_biclique_system(&gi, &piece.system)?;
        if !cert.passed() {
            failure = Some(json!({ "piece": k, "subcube": piece.subcube.to_string(), "certificate": cert.witness }));
            break;
        }
        if let Some(u) = (0..order).find(|&u| !union[u].is_disjoint(gi.neighbors(u))) {
            failure = Some(json!({ "piece": k, "overlap_at_vertex": u }));
            break;
        }
        for (u, row) in union.iter_mut().enumerate() {
            row.union_with(gi.neighbors(u));
        }
    }
    if failure.is_none() {
        if let Some(u) = (0..order).find(|&u| &union[u] != g.neighbors(u)) {
            failure = Some(json!({ "union_differs_at_vertex": u }));
        }
    }
    let bound = partition_size_bound(n);
    if failure.is_none() && total_parts > bound {
        failure = Some(json!({ "size": total_parts, "bound": bound }));
    }
    let cert = match failure {
        Some(w) => Certificate::fail("partition-by-piece", w),
        None => Certificate::pass("partition-by-piece").with_witness(json!({ "size": total_parts })),
    };
    Ok(cert
        .param("n", n)
        .param("vertices", order)
        .param("edges", g.edge_count())
        .param("piece_edge_sum", edge_sum)
        .param("size_bound", bound))
}

/// `G^t` as an iterated OR product of `G(n)`, with the `t`-cover made of one
/// blown-up copy of [`partition_g`] per coordinate.
pub fn cover_g_power(n: usize, t: usize, vertex_limit: u64, product_vertex_limit: u64) -> Result<(Graph, BicliqueSystem)> {
    if t == 0 {
        return Err(Error::invalid("power must be positive"));
    }
    checked_power(n.max(1), ARITY * t, &format!("[{n}]^(7*{t}) vertices"), product_vertex_limit)?;
    let g = build_g(n, vertex_limit)?;
    let base = partition_g(n, vertex_limit)?;
    let order_g = g.order();

    let mut power = g.clone();
    for _ in 1..t {
        power = or_product(&power, &g);
    }
    let order = power.order();

    let mut parts = Vec::with_capacity(base.len() * t);
    for i in 0..t {
        // Coordinate i has weight N^(t-1-i); the other coordinates range freely.
        let weight = order_g.pow((t - 1 - i) as u32);
        let lift = |side: &[usize]| -> Vec<usize> {
            let mut out: Vec<usize> = (0..order)
                .filter(|x| side.binary_search(&(x / weight % order_g)).is_ok())
                .collect();
            out.sort_unstable();
            out
        };
        for b in base.parts() {
            parts.push(Biclique::new(lift(b.left()), lift(b.right()))?);
        }
    }
    Ok((power, BicliqueSystem::new(order, parts, t)?))
}

/// Structure of an independent set of `G(n)`: the distinct `p_1234` values
/// pairwise differ in all four coordinates, members sharing a `p_1234` value
/// differ in all of the last three, a class of four or more forces a single
/// class, and `|I| <= 3n`.
pub fn projection_dichotomy(n: usize, set: &[usize]) -> Certificate {
    use std::collections::BTreeMap;
    let mut classes: BTreeMap<Vec<u32>, Vec<Vec<u32>>> = BTreeMap::new();
    for &v in set {
        let x = GridPoint::from_index(v, n as u32, ARITY);
        classes
            .entry(x.coords()[..4].to_vec())
            .or_default()
            .push(x.coords()[4..].to_vec());
    }
    let all_differ = |a: &[u32], b: &[u32]| a.iter().zip(b).all(|(x, y)| x != y);
    let keys: Vec<_> = classes.keys().cloned().collect();
    let heads_ok = keys
        .iter()
        .enumerate()
        .all(|(i, a)| keys[i + 1..].iter().all(|b| all_differ(a, b)));
    let tails_ok = classes.values().all(|tails| {
        tails
            .iter()
            .enumerate()
            .all(|(i, a)| tails[i + 1..].iter().all(|b| all_differ(a, b)))
    });
    let largest = classes.values().map(Vec::len).max().unwrap_or(0);
    let single_if_large = largest < 4 || classes.len() == 1;
    let within = set.len() <= 3 * n;
    let ok = heads_ok && tails_ok && single_if_large && within;
    Certificate::from_check(
        "projection-dichotomy",
        ok,
        json!({
            "size": set.len(),
            "classes": classes.len(),
            "largest_class": largest,
            "heads_pairwise_all_differ": heads_ok,
            "tails_pairwise_all_differ": tails_ok,
            "large_class_is_unique": single_if_large,
            "size_at_most_3n": within,
        }),
    )
    .param("n", n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cube::rho;

    const LIMIT: u64 = 10_000;

    #[test]
    fn projection_examples() {
        let x = GridPoint::new(vec![3, 1, 4, 1, 5, 9, 2]);
        assert_eq!(project(&x, &[1, 2, 3, 4]).unwrap().coords(), &[3, 1, 4, 1]);
        assert_eq!(project(&x, &[1, 2, 3, 4, 5, 6, 7]).unwrap(), x);
        assert_eq!(project(&x, &[5, 6, 7]).unwrap().coords(), &[5, 9, 2]);
        assert!(project(&x, &[0]).is_err());
        assert!(project(&x, &[8]).is_err());
    }

    #[test]
    fn index_map_round_trips() {
        for v in [0, 1, 77, 2186] {
            let x = GridPoint::from_index(v, 3, 7);
            assert_eq!(x.index(3), v);
        }
        assert_eq!(GridPoint::new(vec![1, 1, 1, 1, 1, 1, 2]).index(2), 1);
        assert_eq!(GridPoint::new(vec![2, 1, 1, 1, 1, 1, 1]).index(2), 64);
    }

    #[test]
    fn g1_is_a_single_vertex() {
        let g = build_g(1, LIMIT).unwrap();
        assert_eq!((g.order(), g.edge_count()), (1, 0));
        assert!(partition_g(1, LIMIT).unwrap().is_empty());
    }

    #[test]
    fn g2_counts() {
        let g = build_g(2, LIMIT).unwrap();
        assert_eq!(g.order(), 128);
        assert!((0..128).all(|v| g.degree(v) == 120));
        assert_eq!(g.edge_count(), 7680);
        assert!(g.has_edge(0, 127));
    }

    #[test]
    fn g_adjacency_agrees_with_rho() {
        let s = build_s();
        let g = build_g(2, LIMIT).unwrap();
        for (u, v) in [(0, 5), (3, 100), (17, 64), (0, 7)] {
            let x = GridPoint::from_index(u, 2, 7);
            let y = GridPoint::from_index(v, 2, 7);
            assert_eq!(g.has_edge(u, v), s.contains(&rho(&x, &y).unwrap()));
        }
    }

    #[test]
    fn vertex_limit_is_enforced() {
        match build_g(4, LIMIT) {
            Err(Error::ResourceLimit { required, limit, .. }) => {
                assert_eq!((required, limit), (16384, 10_000));
            }
            other => panic!("expected a limit error, got {other:?}"),
        }
        assert!(build_g(4, 20_000).is_ok());
    }

    #[test]
    fn pieces_of_g2() {
        let g = build_g(2, LIMIT).unwrap();
        let mut total = 0;
        for part in decompose_s() {
            let gi = build_g_i(2, &part, LIMIT).unwrap();
            assert!((0..128).all(|v| gi.degree(v) == 4));
            assert_eq!(gi.edge_count(), 256);
            assert!(gi.edges().all(|(u, v)| g.has_edge(u, v)));
            total += gi.edge_count();
            assert_eq!(build_g_i(1, &part, LIMIT).unwrap().edge_count(), 0);
        }
        assert_eq!(total, g.edge_count());
    }

    #[test]
    fn reduced_graph_n2_is_a_matching_and_blows_up_to_the_piece() {
        for part in decompose_s() {
            let r = reduced_graph(2, &part, LIMIT).unwrap();
            assert_eq!(r.graph.order(), 32);
            assert!((0..32).all(|v| r.graph.degree(v) == 1));
            assert_eq!(r.blowup_factor, 4);
            let gi = build_g_i(2, &part, LIMIT).unwrap();
            assert!(r.blowup_matches(&gi), "{part}");
        }
    }

    #[test]
    fn reduced_graph_edge_cases() {
        let part = &decompose_s()[0];
        let r = reduced_graph(1, part, LIMIT).unwrap();
        assert_eq!((r.graph.order(), r.graph.edge_count()), (1, 0));
        let wrong: Subcube = "0*0*0*1".parse().unwrap();
        assert!(matches!(reduced_graph(2, &wrong, LIMIT), Err(Error::InvalidInput(_))));
    }

    #[test]
    fn partition_g2_verifies() {
        let g = build_g(2, LIMIT).unwrap();
        let p = partition_g(2, LIMIT).unwrap();
        assert_eq!(p.len(), 480);
        assert!(p.len() <= partition_size_bound(2));
        assert!(verify_biclique_system(&g, &p).unwrap().passed());
        assert!(verify_partition_by_piece(2, LIMIT).unwrap().passed());
    }

    #[test]
    fn cover_with_one_factor_is_the_partition() {
        let (g, sys) = cover_g_power(2, 1, LIMIT, 20_000).unwrap();
        assert_eq!(g, build_g(2, LIMIT).unwrap());
        assert_eq!(sys, partition_g(2, LIMIT).unwrap());
    }

    #[test]
    fn power_limit_is_enforced() {
        assert!(matches!(
            cover_g_power(2, 2, LIMIT, 10_000),
            Err(Error::ResourceLimit { .. })
        ));
    }

    #[test]
    fn dichotomy_flags_bad_sets() {
        // Two points sharing coordinate 1 but with different p_1234.
        let a = GridPoint::new(vec![1, 1, 1, 1, 1, 1, 1]).index(2);
        let b = GridPoint::new(vec![1, 2, 2, 2, 2, 2, 2]).index(2);
        assert!(!projection_dichotomy(2, &[a, b]).passed());
        let c = GridPoint::new(vec![2, 2, 2, 2, 2, 2, 1]).index(2);
        let d = GridPoint::new(vec![1, 1, 1, 1, 2, 2, 2]).index(2);
        assert!(projection_dichotomy(2, &[a, d]).passed());
        assert!(projection_dichotomy(2, &[a, c]).passed());
    }
}
