//! Test corpora: every graph up to isomorphism on a few vertices, and
//! seeded random graphs.

use std::collections::BTreeSet;

use rand::Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest order accepted by [`all_graphs`].
pub const MAX_CORPUS_ORDER: usize = 8;

fn pair_bit(u: usize, v: usize) -> u32 {
    let (a, b) = if u < v { (u, v) } else { (v, u) };
    (b * (b - 1) / 2 + a) as u32
}

fn encode(adj: &[u32], perm: &[usize]) -> u64 {
    let n = adj.len();
    let mut code = 0u64;
    for u in 0..n {
        for v in u + 1..n {
            if adj[u] >> v & 1 == 1 {
                code |= 1 << pair_bit(perm[u], perm[v]);
            }
        }
    }
    code
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
    fn heap(k: usize, p: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k <= 1 {
            out.push(p.clone());
            return;
        }
        for i in 0..k {
            heap(k - 1, p, out);
            let j = if k % 2 == 0 { i } else { 0 };
            p.swap(j, k - 1);
        }
    }
    heap(n, &mut p, &mut out);
    out
}

fn decode(n: usize, code: u64) -> Graph {
    Graph::from_fn(n, |u, v| code >> pair_bit(u, v) & 1 == 1)
}

/// One representative of every isomorphism class of graphs on exactly `n`
/// vertices, ordered by canonical code (the least edge-bit encoding over all
/// relabellings).
pub fn all_graphs(n: usize) -> Result<Vec<Graph>> {
    if n > MAX_CORPUS_ORDER {
        return Err(Error::limit("corpus graph order", n as u128, MAX_CORPUS_ORDER as u128));
    }
    let mut codes: BTreeSet<u64> = BTreeSet::from([0]);
    for k in 1..=n {
        let perms = permutations(k);
        let mut next = BTreeSet::new();
        for &code in &codes {
            let mut adj = vec![0u32; k];
            for u in 0..k - 1 {
                for v in u + 1..k - 1 {
                    if code >> pair_bit(u, v) & 1 == 1 {
                        adj[u] |= 1 << v;
                        adj[v] |= 1 << u;
                    }
                }
            }
            for nbrs in 0u32..1 << (k - 1) {
                let mut a = adj.clone();
                for u in 0..k - 1 {
                    if nbrs >> u & 1 == 1 {
                        a[u] |= 1 << (k - 1);
                        a[k - 1] |= 1 << u;
                    }
                }
                let canon = perms.iter().map(|p| encode(&a, p)).min().unwrap_or(0);
                next.insert(canon);
            }
        }
        codes = next;
    }
    Ok(codes.into_iter().map(|c| decode(n, c)).collect())
}

/// All graphs with `1..=n` vertices, by order then canonical code.
pub fn graphs_up_to(n: usize) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for k in 1..=n {
        out.extend(all_graphs(k)?);
    }
    Ok(out)
}

/// `G(n, p)` random graph.
pub fn random_graph(n: usize, p: f64, rng: &mut impl Rng) -> Graph {
    Graph::from_fn(n, |_, _| rng.gen_bool(p))
}
