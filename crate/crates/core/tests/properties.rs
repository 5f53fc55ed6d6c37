mod common;

use induced_convexity::convexity::{
    is_3ss, is_semisimplicial, semisimplicial_vertices, three_ss_vertices, Alignment,
    ConvexityKind,
};
use induced_convexity::graph6::{parse_edge_list, write_edge_list};
use induced_convexity::intervals::monophonic_interval_pair;
use induced_convexity::patterns::{is_a_free, is_chordal, is_chordal_by_elimination, is_hhd_free, is_hhda_free};
use induced_convexity::{canonical_form, canonical_graph, canonical_labeling, parse_graph6, write_graph6};
use induced_convexity::{Graph, VertexSet};
use proptest::prelude::*;

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let edges: Vec<(usize, usize)> = (1..n)
                .flat_map(|j| (0..j).map(move |i| (i, j)))
                .zip(bits)
                .filter(|(_, b)| *b)
                .map(|(e, _)| e)
                .collect();
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}

fn with_perm(max_n: usize) -> impl Strategy<Value = (Graph, Vec<usize>)> {
    arb_graph(max_n).prop_flat_map(|g| {
        let n = g.order();
        (Just(g), Just((0..n).collect::<Vec<_>>()).prop_shuffle())
    })
}

fn with_sets(max_n: usize) -> impl Strategy<Value = (Graph, VertexSet, VertexSet)> {
    arb_graph(max_n).prop_flat_map(|g| {
        let full = (1u64 << g.order()) - 1;
        (Just(g), any::<u64>(), any::<u64>())
            .prop_map(move |(g, a, b)| (g, VertexSet::from_bits(a & full), VertexSet::from_bits(b & full)))
    })
}

fn image(s: VertexSet, perm: &[usize]) -> VertexSet {
    s.iter().map(|v| perm[v]).collect()
}

fn arb_kind() -> impl Strategy<Value = ConvexityKind> {
    proptest::sample::select(ConvexityKind::STANDARD.to_vec())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn graph6_round_trip(g in arb_graph(62)) {
        prop_assert_eq!(parse_graph6(&write_graph6(&g)).unwrap(), g);
    }

    #[test]
    fn edge_list_round_trip(g in arb_graph(20)) {
        prop_assert_eq!(parse_edge_list(&write_edge_list(&g)).unwrap(), g);
    }

    #[test]
    fn canonical_form_is_invariant((g, perm) in with_perm(8)) {
        prop_assert_eq!(canonical_form(&g.relabel(&perm)).unwrap(), canonical_form(&g).unwrap());
        let labeling = canonical_labeling(&g).unwrap();
        prop_assert_eq!(g.relabel(&labeling), canonical_graph(&g).unwrap());
    }

    #[test]
    fn freeness_is_invariant((g, perm) in with_perm(8)) {
        let h = g.relabel(&perm);
        prop_assert_eq!(is_chordal(&g), is_chordal(&h));
        prop_assert_eq!(is_hhd_free(&g), is_hhd_free(&h));
        prop_assert_eq!(is_hhda_free(&g), is_hhda_free(&h));
        prop_assert_eq!(is_a_free(&g), is_a_free(&h));
        prop_assert_eq!(is_chordal(&g), is_chordal_by_elimination(&g));
    }

    #[test]
    fn monophonic_interval_is_equivariant((g, perm) in with_perm(8)) {
        let h = g.relabel(&perm);
        for u in 0..g.order() {
            for v in u + 1..g.order() {
                let a = monophonic_interval_pair(&g, u, v);
                let b = monophonic_interval_pair(&h, perm[u], perm[v]);
                match (a, b) {
                    (Ok(a), Ok(b)) => prop_assert_eq!(image(a, &perm), b),
                    (Err(_), Err(_)) => {}
                    (a, b) => prop_assert!(false, "{:?} vs {:?}", a, b),
                }
            }
        }
    }

    #[test]
    fn hull_is_a_closure((g, s, t) in with_sets(7), kind in arb_kind()) {
        let a = Alignment::new(&g, kind).unwrap();
        let hs = a.hull(s);
        prop_assert!(s.is_subset(hs));
        prop_assert_eq!(a.hull(hs), hs);
        prop_assert!(a.is_convex(hs));
        prop_assert!(hs.is_subset(a.hull(s | t)));
        if a.is_convex(s) && a.is_convex(t) {
            prop_assert!(a.is_convex(s & t));
        }
    }

    #[test]
    fn m33_is_m3_and_m3k((g, s, _t) in with_sets(7)) {
        let m33 = Alignment::new(&g, ConvexityKind::M33).unwrap();
        let m3 = Alignment::new(&g, ConvexityKind::M3Path).unwrap();
        let m3k = Alignment::new(&g, ConvexityKind::MonophonicK(3)).unwrap();
        prop_assert_eq!(m33.is_convex(s), m3.is_convex(s) && m3k.is_convex(s));
    }

    #[test]
    fn extreme_points_generate_a_subset((g, s, _t) in with_sets(7), kind in arb_kind()) {
        let a = Alignment::new(&g, kind).unwrap();
        let c = a.hull(s);
        let ex = a.extreme_points(c).unwrap();
        prop_assert!(a.hull(ex).is_subset(c));
    }

    #[test]
    fn three_ss_implies_semisimplicial((g, s, _t) in with_sets(8)) {
        prop_assert!(three_ss_vertices(&g, s).is_subset(semisimplicial_vertices(&g, s)));
        for v in s.iter() {
            if is_3ss(&g, s, v).unwrap() {
                prop_assert!(is_semisimplicial(&g, s, v).unwrap());
            }
        }
    }
}
