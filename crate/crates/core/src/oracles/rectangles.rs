use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use super::{Budget, SearchLimits};
use crate::bitset::BitSet;
use crate::error::{Error, Result};

/// Dense 0/1 matrix.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct BoolMatrix {
    rows: usize,
    cols: usize,
    data: Vec<u8>,
}

impl BoolMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<u8>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::invalid(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        if data.iter().any(|&x| x > 1) {
            return Err(Error::invalid("matrix entries must be 0 or 1"));
        }
        Ok(BoolMatrix { rows, cols, data })
    }

    pub fn from_rows(rows: &[Vec<u8>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::invalid("ragged matrix rows"));
        }
        BoolMatrix::new(rows.len(), cols, rows.concat())
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> u8) -> Self {
        let data = (0..rows * cols).map(|k| f(k / cols, k % cols)).collect();
        BoolMatrix::new(rows, cols, data).expect("entries must be binary")
    }

    pub fn identity(k: usize) -> Self {
        BoolMatrix::from_fn(k, k, |i, j| (i == j) as u8)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u8 {
        self.data[r * self.cols + c]
    }

    pub fn transpose(&self) -> BoolMatrix {
        BoolMatrix::from_fn(self.cols, self.rows, |r, c| self.get(c, r))
    }

    pub fn count(&self, value: u8) -> usize {
        self.data.iter().filter(|&&x| x == value).count()
    }
}

/// Rows of `0`/`1` characters, one line per matrix row.
impl fmt::Display for BoolMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            for c in 0..self.cols {
                write!(f, "{}", self.get(r, c))?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

impl FromStr for BoolMatrix {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut rows = Vec::new();
        for (k, line) in s.lines().enumerate() {
            let row = line
                .trim_end()
                .chars()
                .map(|ch| match ch {
                    '0' => Ok(0),
                    '1' => Ok(1),
                    other => Err(Error::parse(k + 1, format!("unexpected character {other:?}"))),
                })
                .collect::<Result<Vec<u8>>>()?;
            if let Some(first) = rows.first().map(Vec::len) {
                if row.len() != first {
                    return Err(Error::parse(k + 1, format!("row has {} entries, expected {first}", row.len())));
                }
            }
            rows.push(row);
        }
        BoolMatrix::from_rows(&rows)
    }
}

/// Combinatorial rectangle `rows × cols`, both sorted.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Rectangle {
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
}

impl Rectangle {
    pub fn contains(&self, r: usize, c: usize) -> bool {
        self.rows.binary_search(&r).is_ok() && self.cols.binary_search(&c).is_ok()
    }

    pub fn is_monochromatic(&self, m: &BoolMatrix, value: u8) -> bool {
        self.rows.iter().all(|&r| self.cols.iter().all(|&c| m.get(r, c) == value))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RectangleCover {
    /// `C^value(M)`.
    pub size: usize,
    pub rectangles: Vec<Rectangle>,
}

impl RectangleCover {
    /// Every rectangle is `value`-monochromatic and every `value` entry is
    /// covered.
    pub fn is_valid(&self, m: &BoolMatrix, value: u8) -> bool {
        self.rectangles.len() == self.size
            && self.rectangles.iter().all(|r| !r.rows.is_empty() && !r.cols.is_empty() && r.is_monochromatic(m, value))
            && (0..m.rows()).all(|r| {
                (0..m.cols()).all(|c| m.get(r, c) != value || self.rectangles.iter().any(|x| x.contains(r, c)))
            })
    }
}

impl SearchLimits {
    /// `max_order` bounds the number of entries to cover.
    pub const RECTANGLES: SearchLimits = SearchLimits::new(64, 50_000_000);
}

/// `ceil(log2 c)`, the nondeterministic complexity of a function whose
/// cover number is `c`; 0 when `c <= 1`.
pub fn nondeterministic_complexity(cover_size: usize) -> u32 {
    if cover_size <= 1 {
        0
    } else {
        usize::BITS - (cover_size - 1).leading_zeros()
    }
}

/// All inclusion-maximal `value`-monochromatic rectangles, sorted. Column
/// sets of maximal rectangles are exactly the nonempty intersections of row
/// supports.
pub fn maximal_rectangles(m: &BoolMatrix, value: u8, budget: u64) -> Result<Vec<Rectangle>> {
    let supports: Vec<BitSet> = (0..m.rows())
        .map(|r| BitSet::from_indices(m.cols(), (0..m.cols()).filter(|&c| m.get(r, c) == value)))
        .collect();
    let mut closed: BTreeSet<Vec<u64>> = BTreeSet::new();
    let mut family: Vec<BitSet> = Vec::new();
    for s in supports.iter().filter(|s| !s.is_empty()) {
        let mut fresh = vec![s.clone()];
        for f in &family {
            let x = f.intersection(s);
            if !x.is_empty() {
                fresh.push(x);
            }
        }
        for x in fresh {
            if closed.insert(x.words().to_vec()) {
                family.push(x);
                if family.len() as u64 > budget {
                    return Err(Error::limit("maximal rectangles", family.len() as u128, budget as u128));
                }
            }
        }
    }
    let mut out: Vec<Rectangle> = family
        .iter()
        .map(|cols| Rectangle {
            rows: (0..m.rows()).filter(|&r| cols.is_subset(&supports[r])).collect(),
            cols: cols.iter().collect(),
        })
        .collect();
    out.sort();
    Ok(out)
}

/// Exact `C^value(M)`: the fewest `value`-monochromatic rectangles covering
/// all `value` entries (overlaps allowed), solved as set cover over the
/// maximal rectangles.
pub fn min_rectangle_cover(m: &BoolMatrix, value: u8, limits: &SearchLimits) -> Result<RectangleCover> {
    if value > 1 {
        return Err(Error::invalid("rectangle colour must be 0 or 1"));
    }
    let entries: Vec<(usize, usize)> = (0..m.rows())
        .flat_map(|r| (0..m.cols()).map(move |c| (r, c)))
        .filter(|&(r, c)| m.get(r, c) == value)
        .collect();
    limits.check_order("rectangle cover", entries.len())?;
    if entries.is_empty() {
        return Ok(RectangleCover { size: 0, rectangles: Vec::new() });
    }
    let rects = maximal_rectangles(m, value, limits.node_budget)?;
    let sets: Vec<BitSet> = rects
        .iter()
        .map(|rect| {
            BitSet::from_indices(
                entries.len(),
                entries.iter().enumerate().filter(|(_, &(r, c))| rect.contains(r, c)).map(|(k, _)| k),
            )
        })
        .collect();
    let mut containing = vec![Vec::new(); entries.len()];
    for (i, s) in sets.iter().enumerate() {
        for e in s.iter() {
            containing[e].push(i);
        }
    }
    let mut search = SetCover {
        sets: &sets,
        containing: &containing,
        chosen: Vec::new(),
        budget: Budget::new("rectangle cover", limits.node_budget),
    };
    let all = BitSet::full(entries.len());
    let mut k = search.lower_bound(&all);
    loop {
        if search.dfs(&all, k)? {
            let rectangles = search.chosen.iter().map(|&i| rects[i].clone()).collect();
            return Ok(RectangleCover { size: k, rectangles });
        }
        k += 1;
    }
}

struct SetCover<'a> {
    sets: &'a [BitSet],
    containing: &'a [Vec<usize>],
    chosen: Vec<usize>,
    budget: Budget,
}

impl SetCover<'_> {
    /// Greedy packing of elements no two of which share a set.
    fn lower_bound(&self, uncovered: &BitSet) -> usize {
        let mut blocked = BitSet::new(uncovered.capacity());
        let mut count = 0;
        for e in uncovered.iter() {
            if blocked.contains(e) {
                continue;
            }
            count += 1;
            for &s in &self.containing[e] {
                blocked.union_with(&self.sets[s]);
            }
        }
        count
    }

    fn dfs(&mut self, uncovered: &BitSet, left: usize) -> Result<bool> {
        self.budget.tick()?;
        if uncovered.is_empty() {
            return Ok(true);
        }
        if left == 0 || self.lower_bound(uncovered) > left {
            return Ok(false);
        }
        let e = uncovered
            .iter()
            .min_by_key(|&e| (self.containing[e].len(), e))
            .expect("nonempty");
        let containing = self.containing;
        for &s in &containing[e] {
            self.chosen.push(s);
            let mut next = uncovered.clone();
            next.difference_with(&self.sets[s]);
            if self.dfs(&next, left - 1)? {
                return Ok(true);
            }
            self.chosen.pop();
        }
        Ok(false)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cover(m: &BoolMatrix, v: u8) -> usize {
        let c = min_rectangle_cover(m, v, &SearchLimits::RECTANGLES).unwrap();
        assert!(c.is_valid(m, v));
        c.size
    }

    /// Independent oracle: try every family of `k` monochromatic rectangles
    /// (all row-set × col-set pairs), increasing `k`.
    fn brute_cover(m: &BoolMatrix, v: u8) -> usize {
        let (r, c) = (m.rows(), m.cols());
        let mut rects: Vec<u64> = Vec::new();
        for rs in 1u32..1 << r {
            for cs in 1u32..1 << c {
                let mut mask = 0u64;
                let mut ok = true;
                for i in 0..r {
                    for j in 0..c {
                        if rs >> i & 1 == 1 && cs >> j & 1 == 1 {
                            ok &= m.get(i, j) == v;
                            mask |= 1 << (i * c + j);
                        }
                    }
                }
                if ok {
                    rects.push(mask);
                }
            }
        }
        let target: u64 = (0..r * c).filter(|&k| m.get(k / c, k % c) == v).map(|k| 1u64 << k).sum();
        fn fits(rects: &[u64], target: u64, k: usize, acc: u64, from: usize) -> bool {
            if acc & target == target {
                return true;
            }
            k > 0 && (from..rects.len()).any(|i| fits(rects, target, k - 1, acc | rects[i], i + 1))
        }
        (0..).find(|&k| fits(&rects, target, k, 0, 0)).unwrap()
    }

    #[test]
    fn all_ones() {
        let m = BoolMatrix::from_fn(3, 4, |_, _| 1);
        assert_eq!(cover(&m, 1), 1);
        assert_eq!(cover(&m, 0), 0);
    }

    #[test]
    fn identity_zero_covers_match_enumeration() {
        for k in 2..=4 {
            let m = BoolMatrix::identity(k);
            assert_eq!(cover(&m, 0), brute_cover(&m, 0), "k={k}");
            assert_eq!(cover(&m, 1), k);
        }
    }

    #[test]
    fn identity_3_zero_cover_is_3() {
        // Frozen from `brute_cover`: the six off-diagonal zeros of I_3 need
        // three rectangles.
        assert_eq!(brute_cover(&BoolMatrix::identity(3), 0), 3);
        assert_eq!(cover(&BoolMatrix::identity(3), 0), 3);
    }

    #[test]
    fn random_matrices_match_enumeration() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        for _ in 0..40 {
            let (r, c) = (rng.gen_range(1..=4), rng.gen_range(1..=4));
            let m = BoolMatrix::from_fn(r, c, |_, _| rng.gen_bool(0.5) as u8);
            for v in 0..2 {
                assert_eq!(cover(&m, v), brute_cover(&m, v));
                assert_eq!(cover(&m.transpose(), v), cover(&m, v));
            }
        }
    }

    #[test]
    fn complexity_is_ceil_log2() {
        let got: Vec<u32> = (0..=9).map(nondeterministic_complexity).collect();
        assert_eq!(got, vec![0, 0, 1, 2, 2, 3, 3, 3, 3, 4]);
    }

    #[test]
    fn text_round_trip_and_errors() {
        let m = BoolMatrix::from_rows(&[vec![1, 0, 1], vec![0, 0, 1]]).unwrap();
        assert_eq!(m.to_string(), "101\n001\n");
        assert_eq!(m.to_string().parse::<BoolMatrix>().unwrap(), m);
        match "10\n1\n".parse::<BoolMatrix>() {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 2),
            other => panic!("{other:?}"),
        }
        assert!("12\n".parse::<BoolMatrix>().is_err());
    }

    #[test]
    fn too_many_entries() {
        let m = BoolMatrix::from_fn(9, 9, |_, _| 0);
        assert!(matches!(
            min_rectangle_cover(&m, 0, &SearchLimits::RECTANGLES),
            Err(Error::ResourceLimit { .. })
        ));
    }
}
