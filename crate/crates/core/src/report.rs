//! End-to-end reports and the named check suites driven by the CLI.

use std::fmt::Write as _;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use crate::algebra::{peck_bound, random_t_cover, rank_certificate, verify_cover_identity, SignConvention};
use crate::certificate::Certificate;
use crate::clis::{
    build_h, canonical_instance, chi_lower_bound_check, cover_vs_coloring_check, protocol_bit_bound, yannakakis_protocol,
    ClisInstance,
};
use crate::config::RunConfig;
use crate::corpus::{graphs_up_to, random_graph};
use crate::counterexample::{
    build_g, build_g_i, cover_g_power, partition_g, partition_size_bound, projection_dichotomy, reduced_graph,
    verify_partition_by_piece, ARITY,
};
use crate::cube::{build_s, decompose_s, decompose_s_families, q3_minus, q3_minus_edges, verify_subcube_partition, CubePoint, CubeSet, Subcube};
use crate::error::{Error, Result};
use crate::graph::{star_partition, verify_biclique_system, Graph};
use crate::oracles::{independence_number, min_biclique_partition, SearchLimits};

/// Numbers and certificates of the counterexample pipeline for one `n`.
#[derive(Clone, Debug, PartialEq)]
pub struct DemoReport {
    pub n: usize,
    pub vertices: usize,
    pub edges: usize,
    pub piece_edge_sum: usize,
    pub alpha: usize,
    pub independent_set: Vec<usize>,
    pub chi_lower_bound: usize,
    pub partition_size: usize,
    pub partition_bound: usize,
    pub certificates: Vec<Certificate>,
}

impl DemoReport {
    pub fn passed(&self) -> bool {
        self.certificates.iter().all(Certificate::passed)
    }

    /// `chi_lower_bound / partition_size` with six decimals, or `undefined`
    /// for an empty partition.
    pub fn ratio(&self) -> String {
        if self.partition_size == 0 {
            "undefined".into()
        } else {
            format!("{:.6}", self.chi_lower_bound as f64 / self.partition_size as f64)
        }
    }

    /// Deterministic text: `key: value` lines, then each certificate as JSON.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let verdict = if self.passed() { "pass" } else { "fail" };
        let _ = writeln!(out, "report: demo");
        let _ = writeln!(out, "n: {}", self.n);
        let _ = writeln!(out, "vertices: {}", self.vertices);
        let _ = writeln!(out, "edges: {}", self.edges);
        let _ = writeln!(out, "piece_edge_sum: {}", self.piece_edge_sum);
        let _ = writeln!(out, "alpha: {}", self.alpha);
        let _ = writeln!(out, "alpha_bound_3n: {}", 3 * self.n);
        let _ = writeln!(out, "chi_lower_bound: {}", self.chi_lower_bound);
        let _ = writeln!(out, "partition_size: {}", self.partition_size);
        let _ = writeln!(out, "partition_bound: {}", self.partition_bound);
        let _ = writeln!(out, "ratio_chi_lower_bound_to_partition_size: {}", self.ratio());
        let _ = writeln!(out, "verdict: {verdict}");
        for c in &self.certificates {
            let _ = writeln!(out, "certificate:\n{}", c.to_json());
        }
        out
    }
}

/// Builds `G(n)`, its partition and its independence number, and checks
/// every step.
pub fn demo(n: usize, cfg: &RunConfig) -> Result<DemoReport> {
    cfg.validate()?;
    if n == 0 {
        return Err(Error::invalid("n must be positive"));
    }
    let g = build_g(n, cfg.vertex_limit)?;
    let mut certificates = vec![verify_subcube_partition(&build_s(), &decompose_s())];

    let pieces = verify_partition_by_piece(n, cfg.vertex_limit)?;
    let piece_edge_sum = pieces.parameters["piece_edge_sum"].as_u64().unwrap_or(0) as usize;
    certificates.push(pieces);

    let partition = partition_g(n, cfg.vertex_limit)?;
    let bound = partition_size_bound(n);
    certificates.push(verify_biclique_system(&g, &partition)?);
    certificates.push(
        Certificate::from_check(
            "partition-size",
            partition.len() <= bound,
            json!({ "size": partition.len(), "bound": bound }),
        )
        .param("n", n),
    );

    let alpha = independence_number(&g, &cfg.independence_limits())?;
    certificates.push(
        Certificate::from_check(
            "independence-number",
            g.is_independent(&alpha.set) && alpha.set.len() == alpha.size && alpha.size <= 3 * n,
            json!({ "alpha": alpha.size, "set": alpha.set, "search_nodes": alpha.nodes }),
        )
        .param("n", n)
        .param("bound", 3 * n),
    );
    certificates.push(projection_dichotomy(n, &alpha.set));

    let vertices = g.order();
    let chi_lower_bound = vertices.div_ceil(alpha.size.max(1));
    Ok(DemoReport {
        n,
        vertices,
        edges: g.edge_count(),
        piece_edge_sum,
        alpha: alpha.size,
        independent_set: alpha.set,
        chi_lower_bound,
        partition_size: partition.len(),
        partition_bound: bound,
        certificates,
    })
}

pub const SUITES: [&str; 4] = ["cube", "partition", "peck", "clis"];

/// Runs a named suite and returns every certificate it produced.
pub fn suite(name: &str, cfg: &RunConfig) -> Result<Vec<Certificate>> {
    cfg.validate()?;
    match name {
        "cube" => cube_suite(),
        "partition" => partition_suite(cfg),
        "peck" => peck_suite(cfg),
        "clis" => clis_suite(cfg),
        other => Err(Error::invalid(format!("unknown suite {other:?}; expected one of {}", SUITES.join(", ")))),
    }
}

fn cube_suite() -> Result<Vec<Certificate>> {
    let s = build_s();
    let families = decompose_s_families();
    let parts = decompose_s();
    let excluded = [
        CubePoint::zeros(ARITY),
        CubePoint::zeros(4).concat(&CubePoint::ones(3)),
    ];
    let prefix_ones = CubePoint::ones(4);
    let excluded_ok = excluded.iter().all(|p| !s.contains(p)) && q3_minus().iter().all(|q| !s.contains(&prefix_ones.concat(q)));

    let q3m = CubeSet::new(3, q3_minus())?;
    let edges: Vec<Subcube> = q3_minus_edges()
        .iter()
        .map(|e| Subcube::spanning(e))
        .collect::<Result<_>>()?;

    Ok(vec![
        Certificate::from_check(
            "s-definition",
            s.len() == 120 && excluded_ok && s.contains(&CubePoint::ones(ARITY)),
            json!({ "size": s.len(), "exclusions_respected": excluded_ok }),
        ),
        verify_subcube_partition(&s, &parts),
        Certificate::from_check(
            "decomposition-shape",
            parts.len() == 30 && parts.iter().all(|p| p.free_dim() == 2),
            json!({
                "parts": parts.len(),
                "families": families.iter().map(Vec::len).collect::<Vec<_>>(),
                "free_dimensions": parts.iter().map(Subcube::free_dim).collect::<std::collections::BTreeSet<_>>(),
            }),
        ),
        Certificate::from_check(
            "decomposition-families",
            families.iter().map(Vec::len).eq([12, 4, 14]),
            json!({ "sizes": families.iter().map(Vec::len).collect::<Vec<_>>() }),
        ),
        verify_subcube_partition(&q3m, &edges),
    ])
}

fn partition_suite(cfg: &RunConfig) -> Result<Vec<Certificate>> {
    let mut out = Vec::new();
    let g2 = build_g(2, cfg.vertex_limit)?;
    let regular = (0..g2.order()).all(|v| g2.degree(v) == 120);
    out.push(
        Certificate::from_check(
            "g2-shape",
            regular && g2.order() == 128 && g2.edge_count() == 7680,
            json!({ "order": g2.order(), "edges": g2.edge_count(), "regular_120": regular }),
        )
        .param("n", 2),
    );
    for n in 1..=3 {
        if (n as u64).pow(ARITY as u32) > cfg.vertex_limit {
            continue;
        }
        out.push(verify_partition_by_piece(n, cfg.vertex_limit)?);
        let g = build_g(n, cfg.vertex_limit)?;
        let p = partition_g(n, cfg.vertex_limit)?;
        let bound = partition_size_bound(n);
        out.push(verify_biclique_system(&g, &p)?.param("n", n));
        out.push(
            Certificate::from_check("partition-size", p.len() <= bound, json!({ "size": p.len(), "bound": bound }))
                .param("n", n),
        );
    }
    let mismatched: Vec<String> = decompose_s()
        .iter()
        .map(|part| -> Result<Option<String>> {
            let reduced = reduced_graph(2, part, cfg.vertex_limit)?;
            let host = build_g_i(2, part, cfg.vertex_limit)?;
            Ok((!reduced.blowup_matches(&host)).then(|| part.to_string()))
        })
        .filter_map(Result::transpose)
        .collect::<Result<_>>()?;
    out.push(
        Certificate::from_check("blowup-identity", mismatched.is_empty(), json!({ "mismatched_parts": mismatched }))
            .param("n", 2),
    );
    if 2u64.pow(2 * ARITY as u32) <= cfg.product_vertex_limit {
        let (power, cover) = cover_g_power(2, 2, cfg.vertex_limit, cfg.product_vertex_limit)?;
        let cert = verify_biclique_system(&power, &cover)?;
        let max = cert.witness.as_ref().and_then(|w| w["max_multiplicity"].as_u64());
        out.push(cert.clone().param("n", 2).param("t", 2));
        out.push(
            Certificate::from_check("power-cover-multiplicity", cert.passed() && max == Some(2), json!({ "max_multiplicity": max }))
                .param("n", 2)
                .param("t", 2),
        );
    }
    Ok(out)
}

/// Seed of the random covers in the `peck` suite.
pub const PECK_SEED: u64 = 0x5eed_c0de;

fn peck_suite(cfg: &RunConfig) -> Result<Vec<Certificate>> {
    let mut out = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(PECK_SEED);
    let mut identity_ok = 0;
    let mut negated_fails = 0;
    let mut rank_ok = 0;
    let mut bound_ok = 0;
    let covers = 50;
    for i in 0..covers {
        let (k, t) = (2 + i % 7, 1 + i % 3);
        let cover = random_t_cover(k, t, &mut rng)?;
        identity_ok += verify_cover_identity(&cover, SignConvention::Alternating)?.passed() as usize;
        negated_fails += (!verify_cover_identity(&cover, SignConvention::Negated)?.passed()) as usize;
        rank_ok += rank_certificate(&cover)?.passed() as usize;
        bound_ok += (k as u128 <= peck_bound(cover.len() as u64, t as u64)) as usize;
    }
    out.push(
        Certificate::from_check(
            "random-cover-identities",
            identity_ok == covers && negated_fails == covers && rank_ok == covers && bound_ok == covers,
            json!({
                "covers": covers,
                "identity_alternating_pass": identity_ok,
                "identity_negated_fail": negated_fails,
                "rank_certificates_pass": rank_ok,
                "peck_bound_holds": bound_ok,
            }),
        )
        .param("seed", PECK_SEED),
    );
    let limits = cfg.biclique_limits();
    let mut gp = Vec::new();
    for k in 2..=6 {
        let g = Graph::complete(k);
        gp.push((k, min_biclique_partition(&g, 1, &limits)?.size, star_partition(&g).len()));
    }
    out.push(Certificate::from_check(
        "graham-pollak",
        gp.iter().all(|&(k, bp, star)| bp == k - 1 && star == k - 1),
        json!(gp.iter().map(|&(k, bp, _)| json!({ "k": k, "bp": bp })).collect::<Vec<_>>()),
    ));
    let bp2_k4 = min_biclique_partition(&Graph::complete(4), 2, &limits)?;
    let bp2_k5 = min_biclique_partition(&Graph::complete(5), 2, &limits)?;
    let consistent = 5 <= peck_bound(bp2_k5.size as u64, 2);
    out.push(Certificate::from_check(
        "two-cover-floor",
        bp2_k4.size == 2 && 4 <= peck_bound(2, 2) && peck_bound(2, 2) == 5 && consistent,
        json!({ "bp2_k4": bp2_k4.size, "bp2_k5": bp2_k5.size, "peck_bound_2_2": peck_bound(2, 2) }),
    ));
    Ok(out)
}

/// Seed of the random graphs in the `clis` suite.
pub const CLIS_SEED: u64 = 0xc115;

fn clis_suite(cfg: &RunConfig) -> Result<Vec<Certificate>> {
    let mut out = Vec::new();
    let corpus6 = graphs_up_to(6)?;
    let mut forward_fail = None;
    for (idx, g) in corpus6.iter().enumerate() {
        let p = star_partition(g);
        let inst = canonical_instance(&p, cfg.ambiguous_edge)?;
        let structural = (0..g.order()).all(|j| inst.matrix().get(j, j) == 0);
        let cert = chi_lower_bound_check(g, &p, &cfg.rectangle_limits(), &cfg.chromatic_limits())?;
        if !(structural && cert.passed()) {
            forward_fail = Some(json!({ "graph": idx, "edges": g.edges().collect::<Vec<_>>(), "certificate": cert.witness }));
            break;
        }
    }
    out.push(Certificate::from_check(
        "forward-reduction",
        forward_fail.is_none(),
        forward_fail.unwrap_or(json!({ "graphs": corpus6.len() })),
    ));

    let mut rng = ChaCha8Rng::seed_from_u64(CLIS_SEED);
    let mut runs = 0usize;
    let mut protocol_fail = None;
    let mut max_bits = 0;
    for k in 0..50 {
        let m = 1 + k % 12;
        let g = random_graph(m, [0.25, 0.5, 0.75][k % 3], &mut rng);
        let inst = ClisInstance::full(g, false, cfg.pair_limit)?;
        let bound = protocol_bit_bound(m);
        'pairs: for c in 0..inst.cliques().len() {
            for i in 0..inst.independents().len() {
                let t = yannakakis_protocol(&inst, c, i)?;
                runs += 1;
                max_bits = max_bits.max(t.total_bits);
                if t.answer != inst.matrix().get(c, i) || t.total_bits > bound {
                    protocol_fail = Some(json!({ "graph": k, "clique": c, "independent": i, "bits": t.total_bits, "bound": bound }));
                    break 'pairs;
                }
            }
        }
        if protocol_fail.is_some() {
            break;
        }
    }
    out.push(
        Certificate::from_check(
            "protocol",
            protocol_fail.is_none(),
            protocol_fail.unwrap_or(json!({ "runs": runs, "max_bits": max_bits })),
        )
        .param("seed", CLIS_SEED),
    );

    let mut reverse_fail = None;
    let corpus5 = graphs_up_to(5)?;
    for (idx, g) in corpus5.iter().enumerate() {
        let cert = build_h(g, cfg.pair_limit)?.verify()?;
        if !cert.passed() {
            reverse_fail = Some(json!({ "graph": idx, "certificate": cert.witness }));
            break;
        }
    }
    out.push(Certificate::from_check(
        "reverse-construction",
        reverse_fail.is_none(),
        reverse_fail.unwrap_or(json!({ "graphs": corpus5.len() })),
    ));

    let wide = SearchLimits::new(cfg.pair_limit, cfg.node_budget);
    let mut cover_fail = None;
    let corpus4 = graphs_up_to(4)?;
    for (idx, g) in corpus4.iter().enumerate() {
        let cert = cover_vs_coloring_check(g, cfg.pair_limit, &wide, &wide)?;
        if !cert.passed() {
            cover_fail = Some(json!({ "graph": idx, "certificate": cert.witness }));
            break;
        }
    }
    out.push(Certificate::from_check(
        "zero-cover-vs-coloring",
        cover_fail.is_none(),
        cover_fail.unwrap_or(json!({ "graphs": corpus4.len() })),
    ));
    Ok(out)
}
