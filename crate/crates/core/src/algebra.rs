//! Lower-bound machinery for `t`-biclique covers of complete graphs, over
//! exact rationals.
//!
//! A cover `{B(U_j, W_j)}` of `K_k` of size `d` with multiplicity at most `t`
//! gives `J - I = Σ_{0<|S|<=t} σ(|S|) A_S` where `A_S` is the adjacency
//! matrix of the common edges of the parts in `S`. Each `A_S` splits into at
//! most `2^(|S|-1)` bicliques; replacing each biclique matrix `B` by the
//! rank-one half `B'` (ones from the first side to the second) leaves an
//! antisymmetric residual `T` with `J - I = Σ 2c B' + T`. Then `I + T` has
//! full rank `k` yet rank at most `1 + #B'`, so `k <= 1 + Σ 2^(s-1) C(d, s)`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::seq::SliceRandom;
use rand::Rng;
use serde_json::json;

use crate::certificate::Certificate;
use crate::error::{Error, Result};
use crate::graph::{verify_biclique_system, Biclique, BicliqueSystem, Graph};

/// Dense matrix of exact rationals.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigRational>,
}

impl RationalMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RationalMatrix {
            rows,
            cols,
            data: vec![BigRational::zero(); rows * cols],
        }
    }

    pub fn identity(k: usize) -> Self {
        let mut m = RationalMatrix::zeros(k, k);
        for i in 0..k {
            m[(i, i)] = BigRational::one();
        }
        m
    }

    pub fn ones(rows: usize, cols: usize) -> Self {
        RationalMatrix {
            rows,
            cols,
            data: vec![BigRational::one(); rows * cols],
        }
    }

    pub fn from_i64(rows: usize, cols: usize, f: impl Fn(usize, usize) -> i64) -> Self {
        let data = (0..rows * cols)
            .map(|k| BigRational::from_integer(BigInt::from(f(k / cols, k % cols))))
            .collect();
        RationalMatrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn transpose(&self) -> Self {
        let mut t = RationalMatrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t[(c, r)] = self[(r, c)].clone();
            }
        }
        t
    }

    pub fn add_scaled(&mut self, other: &RationalMatrix, factor: &BigRational) {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        for (a, b) in self.data.iter_mut().zip(&other.data) {
            if !b.is_zero() {
                *a += b * factor;
            }
        }
    }

    pub fn sub(&self, other: &RationalMatrix) -> RationalMatrix {
        let mut out = self.clone();
        out.add_scaled(other, &-BigRational::one());
        out
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn is_antisymmetric(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|r| (r..self.cols).all(|c| (&self[(r, c)] + &self[(c, r)]).is_zero()))
    }

    pub fn max_abs(&self) -> BigRational {
        self.data
            .iter()
            .map(|x| x.abs())
            .max()
            .unwrap_or_else(BigRational::zero)
    }

    /// Exact rank by Gaussian elimination.
    pub fn rank(&self) -> usize {
        self.clone().eliminate().0
    }

    /// Exact determinant of a square matrix.
    pub fn determinant(&self) -> BigRational {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let (rank, det) = self.clone().eliminate();
        if rank < self.rows {
            BigRational::zero()
        } else {
            det
        }
    }

    /// Row-reduces in place; returns the rank and the product of pivots
    /// (signed by row swaps).
    fn eliminate(mut self) -> (usize, BigRational) {
        let mut rank = 0;
        let mut det = BigRational::one();
        for c in 0..self.cols {
            let Some(p) = (rank..self.rows).find(|&r| !self[(r, c)].is_zero()) else {
                continue;
            };
            if p != rank {
                for k in 0..self.cols {
                    self.data.swap(p * self.cols + k, rank * self.cols + k);
                }
                det = -det;
            }
            let pivot = self[(rank, c)].clone();
            det *= &pivot;
            for r in rank + 1..self.rows {
                if self[(r, c)].is_zero() {
                    continue;
                }
                let f = &self[(r, c)] / &pivot;
                for k in c..self.cols {
                    let delta = &self[(rank, k)] * &f;
                    self[(r, k)] -= delta;
                }
            }
            rank += 1;
            if rank == self.rows {
                break;
            }
        }
        (rank, det)
    }
}

impl std::ops::Index<(usize, usize)> for RationalMatrix {
    type Output = BigRational;

    fn index(&self, (r, c): (usize, usize)) -> &BigRational {
        &self.data[r * self.cols + c]
    }
}

impl std::ops::IndexMut<(usize, usize)> for RationalMatrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut BigRational {
        &mut self.data[r * self.cols + c]
    }
}

fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

/// `1 + Σ_{s=1}^{t} 2^(s-1) C(d, s)`: the largest `k` for which `K_k` can
/// have a `t`-cover by `d` bicliques.
pub fn peck_bound(d: u64, t: u64) -> u128 {
    1 + (1..=t.min(d))
        .map(|s| (1u128 << (s - 1)) * binomial(d, s))
        .sum::<u128>()
}

fn check_indices(cover: &BicliqueSystem, subset: &[usize]) -> Result<()> {
    if subset.is_empty() {
        return Err(Error::invalid("index subset must be nonempty"));
    }
    if subset.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::invalid("index subset must be strictly increasing"));
    }
    if let Some(&j) = subset.iter().find(|&&j| j >= cover.len()) {
        return Err(Error::invalid(format!("biclique index {j} out of range (system has {})", cover.len())));
    }
    Ok(())
}

/// Graph of the pairs covered by every biclique indexed by `subset`
/// (0-based, strictly increasing).
pub fn intersection_graph(cover: &BicliqueSystem, subset: &[usize]) -> Result<Graph> {
    check_indices(cover, subset)?;
    let parts = cover.parts();
    let first = &parts[subset[0]];
    let mut g = Graph::empty(cover.host_order());
    for &u in first.left() {
        for &w in first.right() {
            if subset[1..].iter().all(|&j| parts[j].covers(u, w)) {
                g.add_edge(u, w)?;
            }
        }
    }
    Ok(g)
}

/// Splits the common edges of the bicliques in `subset` into at most
/// `2^(|subset|-1)` edge-disjoint bicliques. The largest index is the
/// distinguished one; for each `z ∈ {0,1}^(s-1)` the part is
///
/// `X_z = ∩_{z_j=0} U_j ∩_{z_j=1} W_j ∩ U_s`,
/// `Y_z = ∩_{z_j=0} W_j ∩_{z_j=1} U_j ∩ W_s`,
///
/// emitted in increasing `z` (first index as the most significant bit) with
/// empty-sided parts dropped.
pub fn split_intersection(cover: &BicliqueSystem, subset: &[usize]) -> Result<Vec<Biclique>> {
    check_indices(cover, subset)?;
    let parts = cover.parts();
    let n = cover.host_order();
    let member = |side: &[usize]| {
        let mut m = vec![false; n];
        for &v in side {
            m[v] = true;
        }
        m
    };
    let sides: Vec<(Vec<bool>, Vec<bool>)> = subset
        .iter()
        .map(|&j| (member(parts[j].left()), member(parts[j].right())))
        .collect();
    let (rest, last) = sides.split_at(sides.len() - 1);
    let (last_u, last_w) = &last[0];
    let s1 = rest.len();
    let mut out = Vec::new();
    for z in 0u64..1 << s1 {
        let bit = |j: usize| z >> (s1 - 1 - j) & 1;
        let x: Vec<usize> = (0..n)
            .filter(|&v| {
                last_u[v]
                    && rest
                        .iter()
                        .enumerate()
                        .all(|(j, (u, w))| if bit(j) == 0 { u[v] } else { w[v] })
            })
            .collect();
        let y: Vec<usize> = (0..n)
            .filter(|&v| {
                last_w[v]
                    && rest
                        .iter()
                        .enumerate()
                        .all(|(j, (u, w))| if bit(j) == 0 { w[v] } else { u[v] })
            })
            .collect();
        if let Some(b) = Biclique::nonempty(x, y)? {
            out.push(b);
        }
    }
    Ok(out)
}

/// Sign attached to `A_S` with `|S| = s` in the inclusion-exclusion sum.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SignConvention {
    /// `(-1)^(s+1)`: positive for single bicliques.
    Alternating,
    /// `(-1)^s`.
    Negated,
}

impl SignConvention {
    pub fn sign(self, s: usize) -> i64 {
        let odd = s % 2 == 1;
        match self {
            SignConvention::Alternating => {
                if odd {
                    1
                } else {
                    -1
                }
            }
            SignConvention::Negated => {
                if odd {
                    -1
                } else {
                    1
                }
            }
        }
    }

    fn label(self) -> &'static str {
        match self {
            SignConvention::Alternating => "(-1)^(s+1)",
            SignConvention::Negated => "(-1)^s",
        }
    }
}

/// Nonempty index subsets of `[0, d)` of size at most `t`, by size then
/// lexicographically.
pub fn small_subsets(d: usize, t: usize) -> Vec<Vec<usize>> {
    fn extend(d: usize, size: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == size {
            out.push(cur.clone());
            return;
        }
        for j in start..d {
            cur.push(j);
            extend(d, size, j + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    for size in 1..=t.min(d) {
        extend(d, size, 0, &mut Vec::new(), &mut out);
    }
    out
}

fn validate_complete_cover(cover: &BicliqueSystem) -> Result<()> {
    let k = cover.host_order();
    let cert = verify_biclique_system(&Graph::complete(k), cover)?;
    if !cert.passed() {
        return Err(Error::invalid(format!(
            "not a {}-cover of K_{k}: {}",
            cover.bound(),
            cert.witness.unwrap_or_default()
        )));
    }
    Ok(())
}

fn adjacency(g: &Graph) -> RationalMatrix {
    RationalMatrix::from_i64(g.order(), g.order(), |r, c| g.has_edge(r, c) as i64)
}

/// Checks `J - I = Σ_{0<|S|<=t} σ(|S|) A_S` entrywise.
pub fn verify_cover_identity(cover: &BicliqueSystem, sign: SignConvention) -> Result<Certificate> {
    validate_complete_cover(cover)?;
    let k = cover.host_order();
    let mut sum = RationalMatrix::zeros(k, k);
    let subsets = small_subsets(cover.len(), cover.bound());
    for s in &subsets {
        let factor = BigRational::from_integer(sign.sign(s.len()).into());
        sum.add_scaled(&adjacency(&intersection_graph(cover, s)?), &factor);
    }
    let target = RationalMatrix::ones(k, k).sub(&RationalMatrix::identity(k));
    let diff = target.sub(&sum);
    let discrepancy = diff.max_abs();
    let cert = Certificate::from_check(
        "cover-identity",
        diff.is_zero(),
        json!({ "max_abs_discrepancy": discrepancy.to_string(), "terms": subsets.len() }),
    );
    Ok(cert
        .param("k", k)
        .param("d", cover.len())
        .param("t", cover.bound())
        .param("sign", sign.label()))
}

/// Builds the rank-one halves and the antisymmetric residual for a `t`-cover
/// of `K_k` and certifies `k <= m + 1`, `m` the number of rank-one terms.
pub fn rank_certificate(cover: &BicliqueSystem) -> Result<Certificate> {
    validate_complete_cover(cover)?;
    let k = cover.host_order();
    let (d, t) = (cover.len(), cover.bound());

    let mut halves_ok = true;
    let mut rank_one_sum = RationalMatrix::zeros(k, k);
    let mut m = 0usize;
    let mut split_sizes = Vec::new();
    for s in small_subsets(d, t) {
        let pieces = split_intersection(cover, &s)?;
        split_sizes.push(pieces.len());
        let coeff = BigRational::from_integer((2 * SignConvention::Alternating.sign(s.len())).into());
        for b in pieces {
            let half = RationalMatrix::from_i64(k, k, |r, c| {
                (b.left().binary_search(&r).is_ok() && b.right().binary_search(&c).is_ok()) as i64
            });
            halves_ok &= half.rank() == 1;
            rank_one_sum.add_scaled(&half, &coeff);
            m += 1;
        }
    }

    let jmi = RationalMatrix::ones(k, k).sub(&RationalMatrix::identity(k));
    let residual = jmi.sub(&rank_one_sum);
    let antisymmetric = residual.is_antisymmetric();
    let mut shifted = RationalMatrix::identity(k);
    shifted.add_scaled(&residual, &BigRational::one());
    let shifted_rank = shifted.rank();
    let det = shifted.determinant();
    let nonsingular = shifted_rank == k;
    let bound_holds = k <= m + 1;
    let peck = peck_bound(d as u64, t as u64);
    let ok = halves_ok && antisymmetric && nonsingular && bound_holds && (m as u128 + 1) <= peck;

    let max_split = split_sizes.iter().copied().max().unwrap_or(0);
    Ok(Certificate::from_check(
        "rank-certificate",
        ok,
        json!({
            "rank_one_terms": m,
            "halves_rank_one": halves_ok,
            "residual_antisymmetric": antisymmetric,
            "rank_identity_plus_residual": shifted_rank,
            "det_identity_plus_residual": det.to_string(),
            "k_at_most_terms_plus_one": bound_holds,
            "largest_split": max_split,
        }),
    )
    .param("k", k)
    .param("d", d)
    .param("t", t)
    .param("peck_bound", peck.to_string()))
}

/// A random valid `t`-cover of `K_k`: a random recursive bisection (a
/// partition of size `k - 1`), then extra random bicliques that keep every
/// multiplicity at most `t`, then random removals that keep every edge
/// covered. Part order is shuffled.
pub fn random_t_cover(k: usize, t: usize, rng: &mut impl Rng) -> Result<BicliqueSystem> {
    if k < 2 || t == 0 {
        return Err(Error::invalid("random covers need k >= 2 and t >= 1"));
    }
    fn bisect(set: Vec<usize>, rng: &mut impl Rng, out: &mut Vec<Biclique>) {
        if set.len() < 2 {
            return;
        }
        let mut set = set;
        set.shuffle(rng);
        let cut = rng.gen_range(1..set.len());
        let right = set.split_off(cut);
        out.push(Biclique::new(set.iter().copied(), right.iter().copied()).expect("nonempty disjoint halves"));
        bisect(set, rng, out);
        bisect(right, rng, out);
    }
    let mut parts = Vec::new();
    bisect((0..k).collect(), rng, &mut parts);

    let mut mult = vec![vec![0usize; k]; k];
    let touch = |mult: &mut Vec<Vec<usize>>, b: &Biclique, delta: isize| {
        for &u in b.left() {
            for &w in b.right() {
                mult[u][w] = (mult[u][w] as isize + delta) as usize;
                mult[w][u] = mult[u][w];
            }
        }
    };
    for b in &parts {
        touch(&mut mult, b, 1);
    }
    if t > 1 {
        for _ in 0..rng.gen_range(0..=2 * k) {
            let side: Vec<u8> = (0..k).map(|_| rng.gen_range(0..3)).collect();
            let left = (0..k).filter(|&v| side[v] == 1);
            let right = (0..k).filter(|&v| side[v] == 2);
            let Some(b) = Biclique::nonempty(left, right)? else { continue };
            if b.left().iter().all(|&u| b.right().iter().all(|&w| mult[u][w] < t)) {
                touch(&mut mult, &b, 1);
                parts.push(b);
            }
        }
    }
    let mut order: Vec<usize> = (0..parts.len()).collect();
    order.shuffle(rng);
    let mut keep = vec![true; parts.len()];
    for i in order {
        let b = &parts[i];
        if rng.gen_bool(0.5) && b.left().iter().all(|&u| b.right().iter().all(|&w| mult[u][w] > 1)) {
            touch(&mut mult, &parts[i].clone(), -1);
            keep[i] = false;
        }
    }
    let mut kept: Vec<Biclique> = parts.into_iter().zip(keep).filter_map(|(b, k)| k.then_some(b)).collect();
    kept.shuffle(rng);
    BicliqueSystem::new(k, kept, t)
}
