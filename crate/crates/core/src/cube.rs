//! Points and axis-aligned subcubes of the Boolean cube, the seven-dimensional
//! set `S` of admissible difference patterns, and its partition into thirty
//! two-dimensional subcubes.
//!
//! Coordinates are 1-based in every external representation. Internally a
//! point of `Q_dim` is a mask whose bit `dim - i` holds coordinate `i`, so the
//! mask read as a binary number lists the coordinates left to right and the
//! derived ordering is lexicographic.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use serde_json::json;

use crate::certificate::Certificate;
use crate::counterexample::GridPoint;
use crate::error::{Error, Result};

pub const MAX_DIM: usize = 64;

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct CubePoint {
    dim: usize,
    mask: u64,
}

impl CubePoint {
    pub fn from_bits(bits: &[u8]) -> Result<Self> {
        if bits.is_empty() || bits.len() > MAX_DIM {
            return Err(Error::invalid(format!(
                "cube dimension must be in 1..={MAX_DIM}, got {}",
                bits.len()
            )));
        }
        let mut mask = 0u64;
        for &b in bits {
            if b > 1 {
                return Err(Error::invalid(format!("cube coordinate {b} is not 0 or 1")));
            }
            mask = mask << 1 | b as u64;
        }
        Ok(CubePoint {
            dim: bits.len(),
            mask,
        })
    }

    /// `mask` bit `dim - i` is coordinate `i`.
    pub fn from_mask(dim: usize, mask: u64) -> Self {
        assert!((1..=MAX_DIM).contains(&dim));
        assert!(dim == 64 || mask >> dim == 0, "mask wider than dimension");
        CubePoint { dim, mask }
    }

    pub fn zeros(dim: usize) -> Self {
        CubePoint::from_mask(dim, 0)
    }

    pub fn ones(dim: usize) -> Self {
        CubePoint::from_mask(dim, low_bits(dim))
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn mask(&self) -> u64 {
        self.mask
    }

    /// Value of coordinate `i` (1-based).
    pub fn bit(&self, i: usize) -> u8 {
        assert!((1..=self.dim).contains(&i));
        (self.mask >> (self.dim - i) & 1) as u8
    }

    pub fn bits(&self) -> Vec<u8> {
        (1..=self.dim).map(|i| self.bit(i)).collect()
    }

    pub fn weight(&self) -> u32 {
        self.mask.count_ones()
    }

    /// Concatenation `(self, suffix)` in `Q_{a+b}`.
    pub fn concat(&self, suffix: &CubePoint) -> CubePoint {
        CubePoint::from_mask(self.dim + suffix.dim, self.mask << suffix.dim | suffix.mask)
    }
}

impl fmt::Display for CubePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in self.bits() {
            write!(f, "{b}")?;
        }
        Ok(())
    }
}

fn low_bits(dim: usize) -> u64 {
    if dim == 64 {
        !0
    } else {
        (1u64 << dim) - 1
    }
}

/// Comparing function: coordinate `i` is 1 exactly when `x_i != y_i`.
pub fn rho(x: &GridPoint, y: &GridPoint) -> Result<CubePoint> {
    if x.arity() != y.arity() {
        return Err(Error::invalid(format!(
            "arity mismatch: {} vs {}",
            x.arity(),
            y.arity()
        )));
    }
    let bits: Vec<u8> = x
        .coords()
        .iter()
        .zip(y.coords())
        .map(|(a, b)| (a != b) as u8)
        .collect();
    CubePoint::from_bits(&bits)
}

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Subcube {
    dim: usize,
    fixed: BTreeMap<usize, u8>,
}

impl Subcube {
    pub fn new(dim: usize, fixed: BTreeMap<usize, u8>) -> Result<Self> {
        if !(1..=MAX_DIM).contains(&dim) {
            return Err(Error::invalid(format!("subcube dimension {dim} out of range")));
        }
        for (&i, &v) in &fixed {
            if !(1..=dim).contains(&i) {
                return Err(Error::invalid(format!(
                    "fixed coordinate {i} outside [1, {dim}]"
                )));
            }
            if v > 1 {
                return Err(Error::invalid(format!("fixed value {v} is not 0 or 1")));
            }
        }
        Ok(Subcube { dim, fixed })
    }

    /// The smallest subcube containing `points`; fails unless the points are
    /// exactly its member set.
    pub fn spanning(points: &[CubePoint]) -> Result<Self> {
        let first = points
            .first()
            .ok_or_else(|| Error::invalid("cannot span an empty point list"))?;
        let dim = first.dim;
        if points.iter().any(|p| p.dim != dim) {
            return Err(Error::invalid("points of different dimensions"));
        }
        let fixed = (1..=dim)
            .filter(|&i| points.iter().all(|p| p.bit(i) == first.bit(i)))
            .map(|i| (i, first.bit(i)))
            .collect();
        let cube = Subcube::new(dim, fixed)?;
        let distinct: BTreeSet<_> = points.iter().copied().collect();
        if distinct.len() != points.len() || distinct != cube.members().into_iter().collect() {
            return Err(Error::invalid(format!(
                "{} points do not form a subcube",
                points.len()
            )));
        }
        Ok(cube)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn fixed(&self) -> &BTreeMap<usize, u8> {
        &self.fixed
    }

    pub fn free_dim(&self) -> usize {
        self.dim - self.fixed.len()
    }

    /// Free coordinates in increasing order.
    pub fn free_coords(&self) -> Vec<usize> {
        (1..=self.dim)
            .filter(|i| !self.fixed.contains_key(i))
            .collect()
    }

    pub fn contains(&self, p: &CubePoint) -> bool {
        p.dim == self.dim && self.fixed.iter().all(|(&i, &v)| p.bit(i) == v)
    }

    /// Members in increasing order.
    pub fn members(&self) -> Vec<CubePoint> {
        let free = self.free_coords();
        let mut base = 0u64;
        for (&i, &v) in &self.fixed {
            base |= (v as u64) << (self.dim - i);
        }
        let mut out: Vec<CubePoint> = (0..1u64 << free.len())
            .map(|sel| {
                let mut mask = base;
                for (k, &i) in free.iter().enumerate() {
                    mask |= (sel >> k & 1) << (self.dim - i);
                }
                CubePoint::from_mask(self.dim, mask)
            })
            .collect();
        out.sort();
        out
    }
}

/// Pattern notation: one character per coordinate, `0`/`1` fixed, `*` free.
impl fmt::Display for Subcube {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 1..=self.dim {
            match self.fixed.get(&i) {
                Some(v) => write!(f, "{v}")?,
                None => write!(f, "*")?,
            }
        }
        Ok(())
    }
}

impl FromStr for Subcube {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut fixed = BTreeMap::new();
        for (k, c) in s.chars().enumerate() {
            match c {
                '0' => {
                    fixed.insert(k + 1, 0);
                }
                '1' => {
                    fixed.insert(k + 1, 1);
                }
                '*' => {}
                other => {
                    return Err(Error::invalid(format!("bad subcube character {other:?}")))
                }
            }
        }
        Subcube::new(s.chars().count(), fixed)
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CubeSet {
    dim: usize,
    members: BTreeSet<CubePoint>,
}

impl CubeSet {
    pub fn new(dim: usize, members: impl IntoIterator<Item = CubePoint>) -> Result<Self> {
        let members: BTreeSet<_> = members.into_iter().collect();
        if members.iter().any(|p| p.dim != dim) {
            return Err(Error::invalid("cube set members must share the set's dimension"));
        }
        Ok(CubeSet { dim, members })
    }

    pub fn full(dim: usize) -> Self {
        let members = (0..=low_bits(dim)).map(|m| CubePoint::from_mask(dim, m));
        CubeSet::new(dim, members).expect("uniform dimension")
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, p: &CubePoint) -> bool {
        self.members.contains(p)
    }

    pub fn iter(&self) -> impl Iterator<Item = &CubePoint> {
        self.members.iter()
    }

    /// Membership table indexed by mask; only for `dim <= 20`.
    pub fn mask_table(&self) -> Vec<bool> {
        assert!(self.dim <= 20, "mask table too large");
        let mut table = vec![false; 1 << self.dim];
        for p in &self.members {
            table[p.mask as usize] = true;
        }
        table
    }
}

/// `Q_3^-`: the cube `Q_3` without its all-zero and all-one points.
pub fn q3_minus() -> Vec<CubePoint> {
    (1..7).map(|m| CubePoint::from_mask(3, m)).collect()
}

/// `S = Q_7 \ [(1^4 x Q_3^-) ∪ {0^7} ∪ {0^4 x 1^3}]`; 120 points.
pub fn build_s() -> CubeSet {
    let ones4 = CubePoint::ones(4);
    let zeros4 = CubePoint::zeros(4);
    let mut removed: BTreeSet<CubePoint> = q3_minus().iter().map(|y| ones4.concat(y)).collect();
    removed.insert(CubePoint::zeros(7));
    removed.insert(zeros4.concat(&CubePoint::ones(3)));
    let members = CubeSet::full(7).members.into_iter().filter(|p| !removed.contains(p));
    CubeSet::new(7, members).expect("uniform dimension")
}

fn pt(bits: &[u8]) -> CubePoint {
    CubePoint::from_bits(bits).expect("literal point")
}

/// Partition of `Q_3^-` into three edges: {001,011}, {010,110}, {100,101}.
pub fn q3_minus_edges() -> [[CubePoint; 2]; 3] {
    [
        [pt(&[0, 0, 1]), pt(&[0, 1, 1])],
        [pt(&[0, 1, 0]), pt(&[1, 1, 0])],
        [pt(&[1, 0, 0]), pt(&[1, 0, 1])],
    ]
}

/// Split of `Q_3` into `{x_1 = 0}` and `{x_1 = 1}`.
pub fn q3_halves() -> [Vec<CubePoint>; 2] {
    let all: Vec<_> = (0..8).map(|m| CubePoint::from_mask(3, m)).collect();
    [
        all.iter().copied().filter(|p| p.bit(1) == 0).collect(),
        all.iter().copied().filter(|p| p.bit(1) == 1).collect(),
    ]
}

/// Adjacent prefix pairs whose `Q_3^-` fibres form the first family.
const PREFIX_PAIRS: [[[u8; 4]; 2]; 4] = [
    [[0, 0, 0, 0], [0, 0, 0, 1]],
    [[0, 0, 1, 1], [1, 0, 1, 1]],
    [[0, 1, 0, 1], [0, 1, 1, 1]],
    [[1, 1, 0, 1], [1, 0, 0, 1]],
];

/// Each row is one subcube: four prefixes times a constant suffix.
const PREFIX_QUADS: [([[u8; 4]; 4], [u8; 3]); 4] = [
    ([[1, 1, 1, 1], [1, 1, 0, 1], [1, 0, 1, 1], [1, 0, 0, 1]], [0, 0, 0]),
    ([[1, 1, 1, 1], [1, 1, 0, 1], [1, 0, 1, 1], [1, 0, 0, 1]], [1, 1, 1]),
    ([[0, 1, 1, 1], [0, 1, 0, 1], [0, 0, 1, 1], [0, 0, 0, 1]], [0, 0, 0]),
    ([[0, 1, 1, 1], [0, 1, 0, 1], [0, 0, 1, 1], [0, 0, 0, 1]], [1, 1, 1]),
];

/// Prefixes whose full `Q_3` fibre lies in `S`.
const FULL_FIBRE_PREFIXES: [[u8; 4]; 7] = [
    [0, 0, 1, 0],
    [0, 1, 0, 0],
    [1, 0, 0, 0],
    [0, 1, 1, 0],
    [1, 0, 1, 0],
    [1, 1, 0, 0],
    [1, 1, 1, 0],
];

/// The three families of the decomposition, in order: 12 subcubes from
/// adjacent prefix pairs over `Q_3^-`, 4 constant-suffix subcubes, and 14
/// subcubes from full `Q_3` fibres.
pub fn decompose_s_families() -> [Vec<Subcube>; 3] {
    let span = |pts: Vec<CubePoint>| Subcube::spanning(&pts).expect("recipe yields subcubes");

    let mut pairs = Vec::with_capacity(12);
    for [a, b] in PREFIX_PAIRS {
        let (x1, x2) = (pt(&a), pt(&b));
        for [y1, y2] in q3_minus_edges() {
            pairs.push(span(vec![
                x1.concat(&y1),
                x1.concat(&y2),
                x2.concat(&y1),
                x2.concat(&y2),
            ]));
        }
    }

    let quads = PREFIX_QUADS
        .iter()
        .map(|(prefixes, suffix)| {
            let y = pt(suffix);
            span(prefixes.iter().map(|x| pt(x).concat(&y)).collect())
        })
        .collect();

    let mut fibres = Vec::with_capacity(14);
    for prefix in FULL_FIBRE_PREFIXES {
        let x = pt(&prefix);
        for half in q3_halves() {
            fibres.push(span(half.iter().map(|y| x.concat(y)).collect()));
        }
    }

    [pairs, quads, fibres]
}

/// The 30 two-dimensional subcubes partitioning [`build_s`], in family order.
pub fn decompose_s() -> Vec<Subcube> {
    decompose_s_families().into_iter().flatten().collect()
}

/// Passes iff `parts` are pairwise disjoint and cover exactly `target`.
/// A failing certificate lists every offending point.
pub fn verify_subcube_partition(target: &CubeSet, parts: &[Subcube]) -> Certificate {
    let claim = "subcube-partition";
    if let Some(k) = parts.iter().position(|p| p.dim != target.dim) {
        return Certificate::fail(
            claim,
            json!({ "dimension_mismatch": { "part": k, "dim": parts[k].dim } }),
        )
        .param("dim", target.dim);
    }
    let mut cover: BTreeMap<CubePoint, Vec<usize>> = BTreeMap::new();
    for (k, part) in parts.iter().enumerate() {
        for p in part.members() {
            cover.entry(p).or_default().push(k);
        }
    }
    let twice: Vec<_> = cover
        .iter()
        .filter(|(_, ks)| ks.len() > 1)
        .map(|(p, ks)| json!({ "point": p.to_string(), "parts": ks }))
        .collect();
    let outside: Vec<_> = cover
        .keys()
        .filter(|p| !target.contains(p))
        .map(|p| p.to_string())
        .collect();
    let uncovered: Vec<_> = target
        .iter()
        .filter(|p| !cover.contains_key(p))
        .map(|p| p.to_string())
        .collect();

    let cert = if twice.is_empty() && outside.is_empty() && uncovered.is_empty() {
        Certificate::pass(claim).with_witness(json!({ "covered": target.len() }))
    } else {
        Certificate::fail(
            claim,
            json!({ "covered_twice": twice, "outside": outside, "uncovered": uncovered }),
        )
    };
    cert.param("dim", target.dim)
        .param("parts", parts.len())
        .param("target_size", target.len())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gp(c: &[u32]) -> GridPoint {
        GridPoint::new(c.to_vec())
    }

    #[test]
    fn rho_examples() {
        let a = gp(&[1, 2, 3, 4, 5, 6, 7]);
        assert_eq!(rho(&a, &a).unwrap(), CubePoint::zeros(7));
        let ones = rho(&gp(&[1; 7]), &gp(&[2; 7])).unwrap();
        assert_eq!(ones, CubePoint::ones(7));
        let r = rho(&gp(&[1; 7]), &gp(&[1, 1, 1, 1, 2, 2, 1])).unwrap();
        assert_eq!(r.bits(), vec![0, 0, 0, 0, 1, 1, 0]);
    }

    #[test]
    fn rho_arity_mismatch() {
        assert!(matches!(
            rho(&gp(&[1, 2]), &gp(&[1, 2, 3])),
            Err(Error::InvalidInput(_))
        ));
    }

    #[test]
    fn s_membership_examples() {
        let s = build_s();
        assert_eq!(s.len(), 120);
        assert!(s.contains(&CubePoint::ones(7)));
        assert!(!s.contains(&CubePoint::zeros(7)));
        assert!(!s.contains(&pt(&[1, 1, 1, 1, 0, 0, 1])));
        assert!(!s.contains(&pt(&[0, 0, 0, 0, 1, 1, 1])));
    }

    #[test]
    fn s_matches_definition_by_enumeration() {
        // Independent restatement: drop prefix 1111 with a mixed suffix,
        // and the two points 0000000, 0000111.
        let s = build_s();
        for m in 0u64..128 {
            let p = CubePoint::from_mask(7, m);
            let prefix = m >> 3;
            let suffix = m & 7;
            let excluded = (prefix == 0b1111 && suffix != 0 && suffix != 7)
                || m == 0
                || m == 0b0000111;
            assert_eq!(s.contains(&p), !excluded, "{p}");
        }
    }

    #[test]
    fn q3_minus_edges_partition_q3_minus() {
        let target = CubeSet::new(3, q3_minus()).unwrap();
        let parts: Vec<_> = q3_minus_edges()
            .iter()
            .map(|e| Subcube::spanning(e).unwrap())
            .collect();
        assert!(parts.iter().all(|p| p.free_dim() == 1));
        assert!(verify_subcube_partition(&target, &parts).passed());
    }

    #[test]
    fn decomposition_shape() {
        let fams = decompose_s_families();
        assert_eq!(fams.iter().map(Vec::len).collect::<Vec<_>>(), vec![12, 4, 14]);
        let all = decompose_s();
        assert_eq!(all.len(), 30);
        assert!(all.iter().all(|c| c.free_dim() == 2 && c.members().len() == 4));
        assert!(verify_subcube_partition(&build_s(), &all).passed());
    }

    #[test]
    fn decomposition_order_is_stable() {
        let all = decompose_s();
        assert_eq!(all[0].to_string(), "000*0*1");
        assert_eq!(all[12].to_string(), "1**1000");
        assert_eq!(all[16].to_string(), "00100**");
        assert_eq!(all[29].to_string(), "11101**");
    }

    #[test]
    fn halving_a_square() {
        let q2 = CubeSet::full(2);
        let parts = vec!["0*".parse().unwrap(), "1*".parse().unwrap()];
        assert!(verify_subcube_partition(&q2, &parts).passed());
    }

    #[test]
    fn deleting_a_part_leaves_four_uncovered() {
        let mut parts = decompose_s();
        parts.remove(7);
        let cert = verify_subcube_partition(&build_s(), &parts);
        assert!(!cert.passed());
        let w = cert.witness.unwrap();
        assert_eq!(w["uncovered"].as_array().unwrap().len(), 4);
        assert!(w["covered_twice"].as_array().unwrap().is_empty());
    }

    #[test]
    fn overlap_and_outside_are_reported() {
        let q2 = CubeSet::new(2, [pt(&[0, 0]), pt(&[0, 1]), pt(&[1, 0])]).unwrap();
        let parts: Vec<Subcube> = vec!["0*".parse().unwrap(), "*0".parse().unwrap(), "1*".parse().unwrap()];
        let w = verify_subcube_partition(&q2, &parts).witness.unwrap();
        assert_eq!(w["outside"], json!(["11"]));
        assert_eq!(w["covered_twice"].as_array().unwrap().len(), 2);
    }

    #[test]
    fn spanning_rejects_non_cubes() {
        assert!(Subcube::spanning(&[pt(&[0, 0]), pt(&[1, 1])]).is_err());
        assert!(Subcube::spanning(&[pt(&[0, 0]), pt(&[0, 0])]).is_err());
    }

    #[test]
    fn pattern_round_trip() {
        for c in decompose_s() {
            assert_eq!(c.to_string().parse::<Subcube>().unwrap(), c);
        }
    }
}
