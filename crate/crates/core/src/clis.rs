//! Reductions between biclique partitions and the clique vs. independent set
//! problem `CL-IS_Γ`: Alice holds a clique `C` of a public graph `Γ`, Bob an
//! independent set `I`, and they must output `|C ∩ I| ∈ {0, 1}`.
//!
//! Forward direction: a partition `{B(U_i, W_i)}` of `G` yields the graph `Γ`
//! on the bicliques and a matrix `M′` whose zero-rectangle covers colour `G`.
//! Reverse direction: from `Γ` build the graph `H` on disjoint (clique,
//! independent set) pairs, which has a 2-cover by `|V(Γ)|` bicliques.

use std::fmt;

use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::bitset::BitSet;
use crate::certificate::Certificate;
use crate::error::{Error, Result};
use crate::graph::{verify_biclique_system, Biclique, BicliqueSystem, Graph};
use crate::oracles::{chromatic_number, min_rectangle_cover, BoolMatrix, SearchLimits};

/// Entry of a characteristic vector.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Mark {
    /// The vertex is on the left side `U_i`.
    Zero,
    /// The vertex is on the right side `W_i`.
    One,
    /// The vertex is outside the biclique.
    Star,
}

impl Mark {
    pub fn symbol(self) -> char {
        match self {
            Mark::Zero => '0',
            Mark::One => '1',
            Mark::Star => '*',
        }
    }

    pub fn from_symbol(c: char) -> Option<Mark> {
        match c {
            '0' => Some(Mark::Zero),
            '1' => Some(Mark::One),
            '*' | '⋆' => Some(Mark::Star),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CharVector(pub Vec<Mark>);

impl CharVector {
    pub fn of(b: &Biclique, n: usize) -> CharVector {
        let mut marks = vec![Mark::Star; n];
        for &u in b.left() {
            marks[u] = Mark::Zero;
        }
        for &w in b.right() {
            marks[w] = Mark::One;
        }
        CharVector(marks)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, j: usize) -> Mark {
        self.0[j]
    }

    fn shared(&self, other: &CharVector, mark: Mark) -> Option<usize> {
        (0..self.len()).find(|&j| self.0[j] == mark && other.0[j] == mark)
    }
}

impl fmt::Display for CharVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.iter().try_for_each(|m| write!(f, "{}", m.symbol()))
    }
}

impl std::str::FromStr for CharVector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.trim()
            .chars()
            .map(|c| Mark::from_symbol(c).ok_or_else(|| Error::parse(1, format!("unexpected mark {c:?}"))))
            .collect::<Result<Vec<_>>>()
            .map(CharVector)
    }
}

/// How to resolve pairs of bicliques whose vectors share neither a 1 nor a 0.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum AmbiguousEdge {
    Edge,
    #[default]
    Nonedge,
}

fn check_partition(partition: &BicliqueSystem, g: Option<&Graph>) -> Result<()> {
    if partition.bound() != 1 {
        return Err(Error::invalid(format!("expected a partition (bound 1), got bound {}", partition.bound())));
    }
    if let Some(g) = g {
        let cert = verify_biclique_system(g, partition)?;
        if !cert.passed() {
            return Err(Error::invalid(format!(
                "not a biclique partition of the graph: {}",
                cert.witness.unwrap_or_default()
            )));
        }
    }
    Ok(())
}

/// One vector per biclique of the partition, over vertices `0..n`.
pub fn characteristic_vectors(partition: &BicliqueSystem) -> Result<Vec<CharVector>> {
    check_partition(partition, None)?;
    let n = partition.host_order();
    Ok(partition.parts().iter().map(|b| CharVector::of(b, n)).collect())
}

/// The graph `Γ` on the bicliques: `i ~ i′` if their vectors share a 1,
/// `i ≁ i′` if they share a 0, and `ambiguous` decides the rest.
///
/// Vectors sharing both a 1 at `j` and a 0 at `j′` mean the edge `{j, j′}`
/// is covered twice; this is reported as [`Error::WellDefinedness`].
pub fn gamma_from_partition(partition: &BicliqueSystem, ambiguous: AmbiguousEdge) -> Result<Graph> {
    let vectors = characteristic_vectors(partition)?;
    gamma_from_vectors(&vectors, ambiguous)
}

pub fn gamma_from_vectors(vectors: &[CharVector], ambiguous: AmbiguousEdge) -> Result<Graph> {
    let m = vectors.len();
    let mut g = Graph::empty(m);
    for i in 0..m {
        for k in i + 1..m {
            let one = vectors[i].shared(&vectors[k], Mark::One);
            let zero = vectors[i].shared(&vectors[k], Mark::Zero);
            let adjacent = match (one, zero) {
                (Some(one_at), Some(zero_at)) => {
                    return Err(Error::WellDefinedness {
                        first: i,
                        second: k,
                        one_at,
                        zero_at,
                    })
                }
                (Some(_), None) => true,
                (None, Some(_)) => false,
                (None, None) => ambiguous == AmbiguousEdge::Edge,
            };
            if adjacent {
                g.add_edge(i, k)?;
            }
        }
    }
    Ok(g)
}

/// A graph with a family of cliques (Alice's inputs), a family of
/// independent sets (Bob's inputs) and the matrix `M[p][q] = |C_p ∩ I_q|`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClisInstance {
    gamma: Graph,
    cliques: Vec<Vec<usize>>,
    independents: Vec<Vec<usize>>,
    matrix: BoolMatrix,
}

fn normalize(set: &[usize], order: usize, what: &str) -> Result<Vec<usize>> {
    let mut s = set.to_vec();
    s.sort_unstable();
    s.dedup();
    if let Some(&v) = s.iter().find(|&&v| v >= order) {
        return Err(Error::invalid(format!("{what} mentions vertex {v}, graph has {order}")));
    }
    Ok(s)
}

fn meets(a: &[usize], b: &[usize]) -> usize {
    a.iter().filter(|v| b.binary_search(v).is_ok()).count()
}

impl ClisInstance {
    pub fn new(gamma: Graph, cliques: Vec<Vec<usize>>, independents: Vec<Vec<usize>>) -> Result<Self> {
        let n = gamma.order();
        let cliques = cliques
            .iter()
            .map(|c| normalize(c, n, "clique"))
            .collect::<Result<Vec<_>>>()?;
        let independents = independents
            .iter()
            .map(|c| normalize(c, n, "independent set"))
            .collect::<Result<Vec<_>>>()?;
        if let Some(c) = cliques.iter().find(|c| !gamma.is_clique(c)) {
            return Err(Error::invalid(format!("{c:?} is not a clique")));
        }
        if let Some(s) = independents.iter().find(|s| !gamma.is_independent(s)) {
            return Err(Error::invalid(format!("{s:?} is not independent")));
        }
        let matrix = BoolMatrix::from_fn(cliques.len(), independents.len(), |p, q| {
            meets(&cliques[p], &independents[q]) as u8
        });
        Ok(ClisInstance {
            gamma,
            cliques,
            independents,
            matrix,
        })
    }

    /// Every clique and every independent set of `gamma`, each family in
    /// lexicographic order and including the empty set.
    pub fn full(gamma: Graph, maximal_only: bool, family_limit: usize) -> Result<Self> {
        let cliques = all_cliques(&gamma, maximal_only, family_limit)?;
        let independents = all_cliques(&gamma.complement(), maximal_only, family_limit)?;
        ClisInstance::new(gamma, cliques, independents)
    }

    pub fn gamma(&self) -> &Graph {
        &self.gamma
    }

    pub fn cliques(&self) -> &[Vec<usize>] {
        &self.cliques
    }

    pub fn independents(&self) -> &[Vec<usize>] {
        &self.independents
    }

    pub fn matrix(&self) -> &BoolMatrix {
        &self.matrix
    }
}

/// All cliques of `g` (or only the inclusion-maximal ones), sorted
/// lexicographically; the empty set comes first unless `maximal_only`.
pub fn all_cliques(g: &Graph, maximal_only: bool, limit: usize) -> Result<Vec<Vec<usize>>> {
    fn extend(
        g: &Graph,
        current: &mut Vec<usize>,
        candidates: &BitSet,
        maximal_only: bool,
        limit: usize,
        out: &mut Vec<Vec<usize>>,
    ) -> Result<()> {
        let maximal = g.order() == 0 || (0..g.order()).all(|v| current.contains(&v) || !current.iter().all(|&c| g.has_edge(c, v)));
        if !maximal_only || maximal {
            out.push(current.clone());
            if out.len() > limit {
                return Err(Error::limit("clique family", out.len() as u128, limit as u128));
            }
        }
        for v in candidates.iter() {
            let mut next = candidates.intersection(g.neighbors(v));
            for u in 0..=v {
                next.remove(u);
            }
            current.push(v);
            extend(g, current, &next, maximal_only, limit, out)?;
            current.pop();
        }
        Ok(())
    }
    let mut out = Vec::new();
    extend(g, &mut Vec::new(), &BitSet::full(g.order()), maximal_only, limit, &mut out)?;
    out.sort();
    Ok(out)
}

/// `Γ` from the partition together with `C_j = {q : v_qj = 1}` and
/// `I_j = {q : v_qj = 0}` for every vertex `j` of the partitioned graph. The
/// resulting square matrix `M′` has a zero diagonal.
pub fn canonical_instance(partition: &BicliqueSystem, ambiguous: AmbiguousEdge) -> Result<ClisInstance> {
    let vectors = characteristic_vectors(partition)?;
    let gamma = gamma_from_vectors(&vectors, ambiguous)?;
    let n = partition.host_order();
    let column = |j: usize, mark: Mark| -> Vec<usize> { (0..vectors.len()).filter(|&q| vectors[q].get(j) == mark).collect() };
    let cliques = (0..n).map(|j| column(j, Mark::One)).collect();
    let independents = (0..n).map(|j| column(j, Mark::Zero)).collect();
    let inst = ClisInstance::new(gamma, cliques, independents)?;
    debug_assert!((0..n).all(|j| inst.matrix.get(j, j) == 0));
    Ok(inst)
}

/// Compares the zero-cover number of `M′` with `χ(G)`.
///
/// A zero rectangle `R × K` of `M′` contains diagonal entries only for
/// vertices of `R ∩ K`, and those are pairwise non-adjacent in `G`; the
/// rectangles of a zero-cover therefore induce a colouring of `G`.
pub fn chi_lower_bound_check(
    g: &Graph,
    partition: &BicliqueSystem,
    rect_limits: &SearchLimits,
    chromatic_limits: &SearchLimits,
) -> Result<Certificate> {
    check_partition(partition, Some(g))?;
    let inst = canonical_instance(partition, AmbiguousEdge::default())?;
    let zero_diag = (0..g.order()).all(|j| inst.matrix.get(j, j) == 0);
    let cover = min_rectangle_cover(&inst.matrix, 0, rect_limits)?;
    let chi = chromatic_number(g, chromatic_limits)?;
    let classes: Vec<Vec<usize>> = cover
        .rectangles
        .iter()
        .map(|r| r.rows.iter().copied().filter(|v| r.cols.binary_search(v).is_ok()).collect())
        .collect();
    let independent = classes.iter().all(|c| g.is_independent(c));
    let mut covered = vec![false; g.order()];
    for &v in classes.iter().flatten() {
        covered[v] = true;
    }
    let covers_all = covered.iter().all(|&c| c);
    let cliques_ok = inst.cliques.iter().all(|c| inst.gamma.is_clique(c));
    let independents_ok = inst.independents.iter().all(|s| inst.gamma.is_independent(s));
    let ok = zero_diag && independent && covers_all && cliques_ok && independents_ok && cover.size >= chi.colors;
    Ok(Certificate::from_check(
        "chi-lower-bound",
        ok,
        json!({
            "zero_cover": cover.size,
            "chromatic_number": chi.colors,
            "zero_diagonal": zero_diag,
            "classes_independent": independent,
            "classes_cover_vertices": covers_all,
            "rectangle_classes": classes,
        }),
    )
    .param("order", g.order())
    .param("bicliques", partition.len()))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Party {
    Alice,
    Bob,
}

/// What a message says. An echo repeats the vertex just received, which is
/// no longer live, so the receiver tells it apart from a fresh send.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Move {
    Send(usize),
    Echo(usize),
    Pass,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Message {
    pub speaker: Party,
    pub content: Move,
    /// Flag bit followed by the fixed-width vertex name.
    pub bits: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Transcript {
    pub messages: Vec<Message>,
    pub answer: u8,
    pub total_bits: usize,
}

/// `ceil(log2 m)`, the width of a vertex name.
pub fn name_width(m: usize) -> usize {
    if m <= 1 {
        0
    } else {
        (usize::BITS - (m - 1).leading_zeros()) as usize
    }
}

/// `(2 + 2 ceil(log2 m)) (floor(log2 m) + 1)`.
pub fn protocol_bit_bound(m: usize) -> usize {
    if m == 0 {
        return 0;
    }
    let rounds = (usize::BITS - 1 - m.leading_zeros()) as usize + 1;
    (2 + 2 * name_width(m)) * rounds
}

/// Runs the deterministic protocol on clique `cliques[c]` and independent
/// set `independents[i]`.
///
/// Both parties track a public live set containing `C ∩ I`. Alice names a
/// live vertex of `C` with at most half the live set as live neighbours,
/// and the live set shrinks to its neighbours; Bob names a live vertex of
/// `I` with at least half as live neighbours, and the live set shrinks to
/// its non-neighbours. A named vertex lying in the receiver's set is echoed
/// back and the answer is 1. Two consecutive passes, or an empty live set,
/// mean the answer is 0.
pub fn yannakakis_protocol(inst: &ClisInstance, c: usize, i: usize) -> Result<Transcript> {
    let clique = inst
        .cliques
        .get(c)
        .ok_or_else(|| Error::invalid(format!("clique index {c} out of range")))?;
    let indep = inst
        .independents
        .get(i)
        .ok_or_else(|| Error::invalid(format!("independent set index {i} out of range")))?;
    let g = &inst.gamma;
    let m = g.order();
    let width = name_width(m);
    let sets = [BitSet::from_indices(m, clique.iter().copied()), BitSet::from_indices(m, indep.iter().copied())];

    let mut live = BitSet::full(m);
    let mut messages = Vec::new();
    let mut pending: Option<usize> = None;
    let mut last_passed = false;
    let mut speaker = Party::Alice;
    let encode = |flag: bool, v: Option<usize>| {
        let mut s = String::from(if flag { "1" } else { "0" });
        if let Some(v) = v {
            for b in (0..width).rev() {
                s.push(if v >> b & 1 == 1 { '1' } else { '0' });
            }
        }
        s
    };

    let answer = loop {
        let mine = &sets[speaker as usize];
        let resolved = pending.take();
        if let Some(p) = resolved {
            if mine.contains(p) {
                messages.push(Message {
                    speaker,
                    content: Move::Echo(p),
                    bits: encode(true, Some(p)),
                });
                break 1;
            }
        }
        let size = live.count();
        if size == 0 {
            if resolved.is_some() {
                messages.push(Message {
                    speaker,
                    content: Move::Pass,
                    bits: encode(false, None),
                });
            }
            break 0;
        }
        let degree = |v: usize| g.neighbors(v).intersection_count(&live);
        let pick = match speaker {
            Party::Alice => mine
                .intersection(&live)
                .iter()
                .map(|v| (degree(v), v))
                .filter(|&(d, _)| 2 * d <= size)
                .min(),
            Party::Bob => mine
                .intersection(&live)
                .iter()
                .map(|v| (std::cmp::Reverse(degree(v)), v))
                .filter(|&(std::cmp::Reverse(d), _)| 2 * d >= size)
                .min()
                .map(|(std::cmp::Reverse(d), v)| (d, v)),
        };
        match pick {
            Some((_, v)) => {
                messages.push(Message {
                    speaker,
                    content: Move::Send(v),
                    bits: encode(true, Some(v)),
                });
                match speaker {
                    Party::Alice => live.intersect_with(g.neighbors(v)),
                    Party::Bob => {
                        live.difference_with(g.neighbors(v));
                        live.remove(v);
                    }
                }
                pending = Some(v);
                last_passed = false;
            }
            None => {
                messages.push(Message {
                    speaker,
                    content: Move::Pass,
                    bits: encode(false, None),
                });
                if last_passed {
                    break 0;
                }
                last_passed = true;
            }
        }
        speaker = match speaker {
            Party::Alice => Party::Bob,
            Party::Bob => Party::Alice,
        };
    };
    let total_bits = messages.iter().map(|m| m.bits.len()).sum();
    Ok(Transcript {
        messages,
        answer,
        total_bits,
    })
}

/// The graph `H` on pairs `(C, I)` of a clique and an independent set of
/// `Γ` with `C ∩ I = ∅`, adjacent iff `C ∩ I′ ≠ ∅` or `C′ ∩ I ≠ ∅`, with the
/// bicliques `U_v = {(C, I) : v ∈ C}`, `W_v = {(C, I) : v ∈ I}`.
#[derive(Clone, Debug)]
pub struct ReverseConstruction {
    /// Vertices of `H` in lexicographic order.
    pub pairs: Vec<(Vec<usize>, Vec<usize>)>,
    pub graph: Graph,
    /// Bound 2; parts with an empty side are dropped.
    pub system: BicliqueSystem,
    /// The vertex of `Γ` behind each part.
    pub part_vertices: Vec<usize>,
    pub gamma_order: usize,
}

pub fn build_h(gamma: &Graph, pair_limit: usize) -> Result<ReverseConstruction> {
    let n = gamma.order();
    if n > 64 {
        return Err(Error::limit("reverse construction graph order", n as u128, 64));
    }
    let cliques = all_cliques(gamma, false, pair_limit)?;
    let independents = all_cliques(&gamma.complement(), false, pair_limit)?;
    let mask = |s: &[usize]| s.iter().fold(0u64, |m, &v| m | 1 << v);
    let mut pairs = Vec::new();
    let mut masks = Vec::new();
    for c in &cliques {
        for i in &independents {
            let (mc, mi) = (mask(c), mask(i));
            if mc & mi == 0 {
                pairs.push((c.clone(), i.clone()));
                masks.push((mc, mi));
                if pairs.len() > pair_limit {
                    return Err(Error::limit("clique/independent-set pairs", pairs.len() as u128, pair_limit as u128));
                }
            }
        }
    }
    let graph = Graph::from_fn(pairs.len(), |a, b| {
        let ((ca, ia), (cb, ib)) = (masks[a], masks[b]);
        ca & ib != 0 || cb & ia != 0
    });
    let mut parts = Vec::new();
    let mut part_vertices = Vec::new();
    for v in 0..n {
        let left = (0..pairs.len()).filter(|&p| masks[p].0 >> v & 1 == 1);
        let right = (0..pairs.len()).filter(|&p| masks[p].1 >> v & 1 == 1);
        if let Some(b) = Biclique::nonempty(left, right)? {
            parts.push(b);
            part_vertices.push(v);
        }
    }
    let system = BicliqueSystem::new(pairs.len(), parts, 2)?;
    Ok(ReverseConstruction {
        pairs,
        graph,
        system,
        part_vertices,
        gamma_order: n,
    })
}

impl ReverseConstruction {
    /// Checks that each part has disjoint sides, that each part is a
    /// biclique of `H`, and that the system 2-covers `H` exactly.
    pub fn verify(&self) -> Result<Certificate> {
        let disjoint = self
            .system
            .parts()
            .iter()
            .all(|b| b.left().iter().all(|v| b.right().binary_search(v).is_err()));
        let complete = self
            .system
            .parts()
            .iter()
            .all(|b| b.left().iter().all(|&u| b.right().iter().all(|&w| self.graph.has_edge(u, w))));
        let cover = verify_biclique_system(&self.graph, &self.system)?;
        let ok = disjoint && complete && cover.passed() && self.system.len() <= self.gamma_order;
        Ok(Certificate::from_check(
            "reverse-construction",
            ok,
            json!({
                "sides_disjoint": disjoint,
                "parts_complete": complete,
                "two_cover": cover.witness,
            }),
        )
        .param("gamma_order", self.gamma_order)
        .param("h_order", self.graph.order())
        .param("h_edges", self.graph.edge_count())
        .param("parts", self.system.len()))
    }
}

/// Compares the zero-cover number of the full instance `M` of `Γ` with
/// `χ(H)`. Each colour class of `H` spans a zero rectangle of `M`, so
/// `C⁰(M) <= χ(H)`; the rectangles read off the colouring are also checked.
pub fn cover_vs_coloring_check(
    gamma: &Graph,
    pair_limit: usize,
    rect_limits: &SearchLimits,
    chromatic_limits: &SearchLimits,
) -> Result<Certificate> {
    let inst = ClisInstance::full(gamma.clone(), false, pair_limit)?;
    let h = build_h(gamma, pair_limit)?;
    let cover = min_rectangle_cover(&inst.matrix, 0, rect_limits)?;
    let coloring = chromatic_number(&h.graph, chromatic_limits)?;
    let row_of = |c: &Vec<usize>| inst.cliques.binary_search(c).expect("pair clique listed");
    let col_of = |s: &Vec<usize>| inst.independents.binary_search(s).expect("pair independent set listed");
    let rectangles_ok = coloring.classes().iter().all(|class| {
        let rows: Vec<usize> = class.iter().map(|&p| row_of(&h.pairs[p].0)).collect();
        let cols: Vec<usize> = class.iter().map(|&p| col_of(&h.pairs[p].1)).collect();
        rows.iter().all(|&r| cols.iter().all(|&c| inst.matrix.get(r, c) == 0))
    });
    let ok = rectangles_ok && cover.size <= coloring.colors;
    Ok(Certificate::from_check(
        "zero-cover-vs-coloring",
        ok,
        json!({
            "zero_cover": cover.size,
            "chromatic_number_h": coloring.colors,
            "classes_are_zero_rectangles": rectangles_ok,
        }),
    )
    .param("gamma_order", gamma.order())
    .param("h_order", h.graph.order())
    .param("cliques", inst.cliques.len())
    .param("independents", inst.independents.len()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::star_partition;

    fn b(l: &[usize], r: &[usize]) -> Biclique {
        Biclique::new(l.iter().copied(), r.iter().copied()).unwrap()
    }

    fn k3_partition() -> BicliqueSystem {
        BicliqueSystem::new(3, vec![b(&[0], &[1, 2]), b(&[1], &[2])], 1).unwrap()
    }

    #[test]
    fn vectors_of_k3() {
        let v = characteristic_vectors(&k3_partition()).unwrap();
        assert_eq!(v.iter().map(|x| x.to_string()).collect::<Vec<_>>(), ["011", "*01"]);
        let edge = BicliqueSystem::new(2, vec![b(&[0], &[1])], 1).unwrap();
        assert_eq!(characteristic_vectors(&edge).unwrap()[0].to_string(), "01");
        assert!(characteristic_vectors(&BicliqueSystem::new(4, vec![], 1).unwrap()).unwrap().is_empty());
        assert_eq!("0*1".parse::<CharVector>().unwrap().to_string(), "0*1");
        assert!("0x1".parse::<CharVector>().is_err());
    }

    #[test]
    fn gamma_rules() {
        let g = gamma_from_partition(&k3_partition(), AmbiguousEdge::Nonedge).unwrap();
        assert_eq!(g, Graph::complete(2));
        let single = BicliqueSystem::new(3, vec![b(&[0], &[1, 2])], 1).unwrap();
        assert_eq!(gamma_from_partition(&single, AmbiguousEdge::Nonedge).unwrap().order(), 1);
        let matching = BicliqueSystem::new(4, vec![b(&[0], &[1]), b(&[2], &[3])], 1).unwrap();
        assert_eq!(gamma_from_partition(&matching, AmbiguousEdge::Nonedge).unwrap().edge_count(), 0);
        assert_eq!(gamma_from_partition(&matching, AmbiguousEdge::Edge).unwrap().edge_count(), 1);
    }

    #[test]
    fn double_cover_is_ill_defined() {
        let vectors: Vec<CharVector> = ["011", "001"].iter().map(|s| s.parse().unwrap()).collect();
        match gamma_from_vectors(&vectors, AmbiguousEdge::Nonedge) {
            Err(Error::WellDefinedness {
                first: 0,
                second: 1,
                one_at: 2,
                zero_at: 0,
            }) => {}
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn canonical_k3() {
        let inst = canonical_instance(&k3_partition(), AmbiguousEdge::Nonedge).unwrap();
        assert_eq!(inst.cliques()[2], vec![0, 1]);
        assert_eq!(inst.independents()[0], vec![0]);
        assert_eq!(inst.matrix().to_string(), "000\n100\n110\n");
        let edgeless = canonical_instance(&BicliqueSystem::new(3, vec![], 1).unwrap(), AmbiguousEdge::Nonedge).unwrap();
        assert!(edgeless.cliques().iter().all(Vec::is_empty));
        assert_eq!(edgeless.gamma().order(), 0);
    }

    #[test]
    fn chi_checks() {
        let r = SearchLimits::RECTANGLES;
        let c = SearchLimits::CHROMATIC;
        let k3 = chi_lower_bound_check(&Graph::complete(3), &k3_partition(), &r, &c).unwrap();
        assert!(k3.passed());
        assert!(k3.witness.as_ref().unwrap()["zero_cover"].as_u64().unwrap() >= 3);
        let e = Graph::complete(2);
        let cert = chi_lower_bound_check(&e, &star_partition(&e), &r, &c).unwrap();
        assert!(cert.passed());
        assert_eq!(cert.witness.unwrap()["chromatic_number"], 2);
        let empty = Graph::empty(3);
        let cert = chi_lower_bound_check(&empty, &star_partition(&empty), &r, &c).unwrap();
        assert!(cert.passed());
        assert_eq!(cert.witness.unwrap()["chromatic_number"], 1);
    }

    #[test]
    fn clique_families() {
        let p3 = Graph::path(3);
        assert_eq!(all_cliques(&p3, false, 100).unwrap(), vec![vec![], vec![0], vec![0, 1], vec![1], vec![1, 2], vec![2]]);
        assert_eq!(all_cliques(&p3, true, 100).unwrap(), vec![vec![0, 1], vec![1, 2]]);
        assert_eq!(all_cliques(&Graph::complete(4), false, 100).unwrap().len(), 16);
        assert!(all_cliques(&Graph::complete(4), false, 10).is_err());
        assert_eq!(all_cliques(&Graph::empty(0), true, 10).unwrap(), vec![Vec::<usize>::new()]);
    }

    #[test]
    fn protocol_small_cases() {
        let inst = ClisInstance::new(Graph::empty(1), vec![vec![0]], vec![vec![0]]).unwrap();
        let t = yannakakis_protocol(&inst, 0, 0).unwrap();
        assert_eq!(t.answer, 1);
        assert!(t.total_bits <= protocol_bit_bound(1));
        let c5 = ClisInstance::full(Graph::cycle(5), false, 1000).unwrap();
        for c in 0..c5.cliques().len() {
            for i in 0..c5.independents().len() {
                let t = yannakakis_protocol(&c5, c, i).unwrap();
                assert_eq!(t.answer, c5.matrix().get(c, i));
                assert!(t.total_bits <= protocol_bit_bound(5));
                assert_eq!(t.total_bits, t.messages.iter().map(|m| m.bits.len()).sum::<usize>());
            }
        }
        assert!(yannakakis_protocol(&c5, 99, 0).is_err());
    }

    #[test]
    fn bit_bound_values() {
        assert_eq!(protocol_bit_bound(1), 2);
        assert_eq!(protocol_bit_bound(2), 8);
        assert_eq!(protocol_bit_bound(5), 24);
        assert_eq!(protocol_bit_bound(8), 32);
        assert_eq!(name_width(8), 3);
        assert_eq!(name_width(9), 4);
    }

    #[test]
    fn reverse_construction_small() {
        let h1 = build_h(&Graph::complete(1), 100).unwrap();
        assert_eq!(h1.pairs, vec![(vec![], vec![]), (vec![], vec![0]), (vec![0], vec![])]);
        assert!(h1.system.len() <= 1);
        assert!(h1.verify().unwrap().passed());
        let h2 = build_h(&Graph::complete(2), 100).unwrap();
        assert!(h2.system.len() <= 2);
        assert!(h2.verify().unwrap().passed());
        assert!(build_h(&Graph::empty(5), 10).is_err());
    }

    #[test]
    fn cover_vs_coloring_small() {
        let r = SearchLimits::new(200, 50_000_000);
        let c = SearchLimits::new(200, 50_000_000);
        for g in [Graph::complete(2), Graph::path(3), Graph::empty(2)] {
            assert!(cover_vs_coloring_check(&g, 1000, &r, &c).unwrap().passed());
        }
    }
}
