use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use bpchi_core::algebra::{intersection_graph, random_t_cover, small_subsets, split_intersection};
use bpchi_core::clis::characteristic_vectors;
use bpchi_core::counterexample::GridPoint;
use bpchi_core::cube::rho;
use bpchi_core::graph::{blowup, or_product, star_partition, verify_biclique_system, BicliqueSystem, Graph};
use bpchi_core::io;
use bpchi_core::oracles::{independence_number, min_biclique_partition, min_rectangle_cover, BoolMatrix, SearchLimits};

fn graph(max_order: usize) -> impl Strategy<Value = Graph> {
    (1..=max_order).prop_flat_map(|n| {
        prop::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut g = Graph::empty(n);
            let mut it = bits.into_iter();
            for v in 1..n {
                for u in 0..v {
                    if it.next().unwrap() {
                        g.add_edge(u, v).unwrap();
                    }
                }
            }
            g
        })
    })
}

fn matrix(max: usize) -> impl Strategy<Value = BoolMatrix> {
    (1..=max, 1..=max).prop_flat_map(|(r, c)| {
        prop::collection::vec(0u8..2, r * c).prop_map(move |d| BoolMatrix::new(r, c, d).unwrap())
    })
}

fn alpha(g: &Graph) -> usize {
    independence_number(g, &SearchLimits::INDEPENDENCE).unwrap().size
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn rho_is_symmetric(x in prop::collection::vec(0u32..4, 7), y in prop::collection::vec(0u32..4, 7)) {
        let (a, b) = (GridPoint::new(x.clone()), GridPoint::new(y.clone()));
        let r = rho(&a, &b).unwrap();
        prop_assert_eq!(&r, &rho(&b, &a).unwrap());
        prop_assert_eq!(r.weight() as usize, x.iter().zip(&y).filter(|(p, q)| p != q).count());
    }

    #[test]
    fn star_partition_is_valid(g in graph(9)) {
        let p = star_partition(&g);
        prop_assert!(verify_biclique_system(&g, &p).unwrap().passed());
        prop_assert!(p.len() < g.order().max(1));
    }

    #[test]
    fn verification_ignores_part_order(g in graph(8), seed in any::<u64>()) {
        use rand::seq::SliceRandom;
        let p = star_partition(&g);
        let mut parts = p.parts().to_vec();
        parts.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
        let shuffled = BicliqueSystem::new(g.order(), parts.clone(), 1).unwrap();
        prop_assert!(verify_biclique_system(&g, &shuffled).unwrap().passed());
        if let Some(first) = parts.first().cloned() {
            parts.push(first);
            let doubled = BicliqueSystem::new(g.order(), parts, 1).unwrap();
            prop_assert!(!verify_biclique_system(&g, &doubled).unwrap().passed());
        }
    }

    #[test]
    fn blowup_partition_is_valid(g in graph(6), m in 1usize..=3) {
        let sys = star_partition(&g).blowup(m);
        prop_assert!(verify_biclique_system(&blowup(&g, m), &sys).unwrap().passed());
    }

    #[test]
    fn or_product_alpha_is_submultiplicative(g in graph(5), h in graph(5)) {
        prop_assert!(alpha(&or_product(&g, &h)) <= alpha(&g) * alpha(&h));
    }

    #[test]
    fn two_cover_number_at_most_partition_number(g in graph(5)) {
        let limits = SearchLimits::BICLIQUE;
        let bp1 = min_biclique_partition(&g, 1, &limits).unwrap().size;
        let bp2 = min_biclique_partition(&g, 2, &limits).unwrap().size;
        prop_assert!(bp2 <= bp1);
    }

    #[test]
    fn split_intersection_partitions_the_intersection(k in 2usize..=6, t in 1usize..=3, seed in any::<u64>()) {
        let cover = random_t_cover(k, t, &mut ChaCha8Rng::seed_from_u64(seed)).unwrap();
        for subset in small_subsets(cover.len(), t.min(3)) {
            let h = intersection_graph(&cover, &subset).unwrap();
            let pieces = split_intersection(&cover, &subset).unwrap();
            let sys = BicliqueSystem::new(k, pieces, 1).unwrap();
            prop_assert!(verify_biclique_system(&h, &sys).unwrap().passed());
        }
    }

    #[test]
    fn rectangle_cover_is_transpose_invariant(m in matrix(5), value in 0u8..2) {
        let limits = SearchLimits::RECTANGLES;
        let a = min_rectangle_cover(&m, value, &limits).unwrap();
        let b = min_rectangle_cover(&m.transpose(), value, &limits).unwrap();
        prop_assert!(a.is_valid(&m, value));
        prop_assert_eq!(a.size, b.size);
    }

    #[test]
    fn dimacs_round_trips(g in graph(12)) {
        prop_assert_eq!(io::read_dimacs(&io::write_dimacs(&g)).unwrap(), g);
    }

    #[test]
    fn system_and_vector_round_trips(g in graph(10)) {
        let sys = star_partition(&g);
        prop_assert_eq!(&io::read_system(&io::write_system(&sys)).unwrap(), &sys);
        let vecs = characteristic_vectors(&sys).unwrap();
        prop_assert_eq!(io::read_vectors(&io::write_vectors(&vecs)).unwrap(), vecs);
    }

    #[test]
    fn matrix_round_trips(m in matrix(7)) {
        prop_assert_eq!(io::read_matrix(&io::write_matrix(&m)).unwrap(), m);
    }
}

#[test]
fn protocol_exhaustive_on_small_graphs() {
    use bpchi_core::clis::{protocol_bit_bound, yannakakis_protocol, ClisInstance};
    use bpchi_core::corpus::graphs_up_to;
    for g in graphs_up_to(7).unwrap() {
        let m = g.order();
        let inst = ClisInstance::full(g, false, 10_000).unwrap();
        for (c, clique) in inst.cliques().iter().enumerate() {
            for (i, indep) in inst.independents().iter().enumerate() {
                let t = yannakakis_protocol(&inst, c, i).unwrap();
                assert_eq!(t.answer as usize, clique.iter().filter(|v| indep.contains(v)).count());
                assert!(t.total_bits <= protocol_bit_bound(m));
            }
        }
    }
}
