use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use turanlab::bits::bit;
use turanlab::canon::certificate;
use turanlab::construct::{blow_up, complete, edge_count_turan, odd_balloon, turan};
use turanlab::extremal::enumerate_extremal;
use turanlab::family::{family_q_bipartite, ForbiddenFamily};
use turanlab::invariants::{chromatic_number, clique_number, covering_number};
use turanlab::suite::{random_shaped, random_symmetric_instance};
use turanlab::symmetry::{find_symmetric_vertices, in_symmetry_class, replicate};
use turanlab::{contains_subgraph, parse_graph6, Budget, Graph};

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        prop::collection::vec(any::<bool>(), n * n.saturating_sub(1) / 2).prop_map(move |pairs| {
            let mut g = Graph::new(n).unwrap();
            let mut it = pairs.into_iter();
            for u in 0..n {
                for v in 0..u {
                    if it.next().unwrap() {
                        g.add_edge(u, v);
                    }
                }
            }
            g
        })
    })
}

fn with_perm(max_n: usize) -> impl Strategy<Value = (Graph, Vec<usize>)> {
    graph(max_n).prop_flat_map(|g| {
        let n = g.order();
        (Just(g), Just((0..n).collect::<Vec<_>>()).prop_shuffle())
    })
}

fn is_embedding(host: &Graph, pattern: &Graph, map: &[usize]) -> bool {
    let mut seen = 0u64;
    for &h in map {
        if h >= host.order() || seen & bit(h) != 0 {
            return false;
        }
        seen |= bit(h);
    }
    pattern.edges().iter().all(|&(u, v)| host.has_edge(map[u], map[v]))
}

/// Every subset of `0..n`, as a mask.
fn subsets(n: usize) -> impl Iterator<Item = u64> {
    0..1u64 << n
}

fn properly_coloured(g: &Graph, k: usize) -> bool {
    let n = g.order();
    if n == 0 {
        return true;
    }
    if k == 0 {
        return false;
    }
    let mut col = vec![0usize; n];
    loop {
        if g.edges().iter().all(|&(u, v)| col[u] != col[v]) {
            return true;
        }
        let mut i = 0;
        while i < n {
            col[i] += 1;
            if col[i] < k {
                break;
            }
            col[i] = 0;
            i += 1;
        }
        if i == n {
            return false;
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn graph6_round_trip(g in graph(20)) {
        let s = g.to_graph6();
        prop_assert_eq!(parse_graph6(&s).unwrap(), g);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn complement_is_an_involution(g in graph(12)) {
        let c = g.complement();
        prop_assert_eq!(c.complement(), g.clone());
        let n = g.order();
        prop_assert_eq!(g.edge_count() + c.edge_count(), n * n.saturating_sub(1) / 2);
    }

    #[test]
    fn certificate_is_a_relabelling_invariant((g, perm) in with_perm(11)) {
        let h = g.relabeled(&perm);
        prop_assert_eq!(certificate(&g), certificate(&h));
    }

    #[test]
    fn induced_subgraphs_lose_edges(g in graph(12), mask in any::<u64>()) {
        let h = g.induced(mask & g.vertices());
        prop_assert!(h.edge_count() <= g.edge_count());
    }

    #[test]
    fn containment_is_monotone(g in graph(9), mask in any::<u64>(), drop in any::<u64>(), extra in graph(9)) {
        // pattern: an induced subgraph with some edges removed
        let mut p = g.induced(mask & g.vertices());
        for (i, (u, v)) in p.edges().into_iter().enumerate() {
            if drop >> (i % 64) & 1 == 1 {
                p.remove_edge(u, v);
            }
        }
        let mut host = g.clone();
        for (u, v) in extra.edges() {
            if u < host.order() && v < host.order() && !host.has_edge(u, v) {
                host.add_edge(u, v);
            }
        }
        let map = contains_subgraph(&host, &p);
        prop_assert!(map.as_ref().is_some_and(|m| is_embedding(&host, &p, m)));
    }

    #[test]
    fn containment_ignores_labels((g, perm) in with_perm(8), p in graph(5)) {
        let a = contains_subgraph(&g, &p);
        let b = contains_subgraph(&g.relabeled(&perm), &p);
        prop_assert_eq!(a.is_some(), b.is_some());
        if let Some(m) = a {
            prop_assert!(is_embedding(&g, &p, &m));
        }
    }

    #[test]
    fn chromatic_bounds(g in graph(10)) {
        let chi = chromatic_number(&g);
        prop_assert!(clique_number(&g) <= chi);
        prop_assert!(chi <= g.max_degree() + 1 || g.order() == 0);
        prop_assert!(properly_coloured(&g, chi));
        prop_assert!(chi == 0 || !properly_coloured(&g, chi - 1));
    }

    #[test]
    fn join_adds_chromatic_numbers(a in graph(6), b in graph(6)) {
        let j = Graph::join(&[&a, &b]).unwrap();
        prop_assert_eq!(chromatic_number(&j), chromatic_number(&a) + chromatic_number(&b));
        prop_assert_eq!(j.edge_count(), a.edge_count() + b.edge_count() + a.order() * b.order());
    }

    #[test]
    fn covering_number_by_subsets(g in graph(10)) {
        let best = subsets(g.order())
            .filter(|&s| g.edges().iter().all(|&(u, v)| (s >> u | s >> v) & 1 == 1))
            .map(|s| s.count_ones() as usize)
            .min()
            .unwrap();
        prop_assert_eq!(covering_number(&g), best);
    }

    #[test]
    fn turan_graphs(n in 0usize..20, r in 1usize..6) {
        let t = turan(n, r).unwrap();
        prop_assert_eq!(t.edge_count(), edge_count_turan(n, r));
        if r < n {
            prop_assert!(contains_subgraph(&t, &complete(r + 1).unwrap()).is_none());
        }
    }

    #[test]
    fn blow_up_counts(g in graph(7), p in 1usize..4) {
        let b = blow_up(&g, p).unwrap();
        let e = g.edge_count();
        prop_assert_eq!(b.order(), g.order() + e * (p - 1));
        prop_assert_eq!(b.edge_count(), e * (p + 1) * p / 2);
    }

    #[test]
    fn triangle_ballooning_is_the_two_blow_up(g in graph(6)) {
        prop_assert_eq!(certificate(&odd_balloon(&g, &[3]).unwrap()), certificate(&blow_up(&g, 2).unwrap()));
    }

    #[test]
    fn symmetric_vertex_classes(g in graph(10)) {
        let classes = find_symmetric_vertices(&g);
        let mut class_of = vec![usize::MAX; g.order()];
        for (i, c) in classes.iter().enumerate() {
            for &v in c {
                prop_assert_eq!(class_of[v], usize::MAX);
                class_of[v] = i;
            }
        }
        for u in 0..g.order() {
            for v in 0..u {
                let same = !g.has_edge(u, v) && g.neighbors(u) & !bit(v) == g.neighbors(v) & !bit(u);
                prop_assert_eq!(class_of[u] == class_of[v], same);
            }
        }
    }

    #[test]
    fn bipartite_q_is_a_least_independent_cover(g in graph(8)) {
        prop_assume!(g.is_bipartite() && g.edge_count() > 0);
        let fam = ForbiddenFamily::single(g.clone()).unwrap();
        let best = subsets(g.order())
            .filter(|&s| g.induced(s).edge_count() == 0 && g.edges().iter().all(|&(u, v)| (s >> u | s >> v) & 1 == 1))
            .map(|s| s.count_ones() as usize)
            .min();
        prop_assert_eq!(family_q_bipartite(&fam), best);
        prop_assert_eq!(Some(fam.q()), best);
    }

    #[test]
    fn q_is_a_least_independent_set_leaving_r_colourable(g in graph(7)) {
        prop_assume!(g.edge_count() > 0);
        let fam = ForbiddenFamily::single(g.clone()).unwrap();
        let r = fam.r();
        let best = subsets(g.order())
            .filter(|&s| g.induced(s).edge_count() == 0 && properly_coloured(&g.induced(g.vertices() & !s), r))
            .map(|s| s.count_ones() as usize)
            .min()
            .unwrap();
        prop_assert_eq!(fam.q(), best);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn replication_counts(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (_, fam) = random_symmetric_instance(&mut rng).unwrap();
        let g = &fam.host;
        let q1 = fam.blocks[0].iter().fold(0u64, |m, &v| m | bit(v));
        let outside = g.vertices() & !fam.union_mask();
        let inner = g.induced(q1).edge_count();
        let h = replicate(&fam).unwrap();
        prop_assert_eq!(h.order(), g.order() + fam.block_order());
        prop_assert_eq!(h.edge_count(), g.edge_count() + inner + g.edges_between(q1, outside));
    }

    #[test]
    fn shaped_graphs_are_in_the_symmetry_class(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (g, cert) = random_shaped(&mut rng).unwrap();
        let t2 = cert.max_co_size();
        let (q, r) = (cert.q(), cert.r());
        let c = (q + r * t2).max(1);
        let out = in_symmetry_class(&g, r, c, Budget::nodes(2_000_000)).unwrap();
        let found = out.found();
        prop_assert!(found.is_some_and(|f| f.check(&g, r, c).is_ok()));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn extremal_numbers_grow_with_n(f in graph(4)) {
        prop_assume!(f.edge_count() > 0);
        let fam = ForbiddenFamily::single(f.clone()).unwrap();
        let mut last = 0;
        for n in f.order()..=7 {
            let rep = enumerate_extremal(n, &fam).unwrap();
            prop_assert!(rep.ex >= last);
            last = rep.ex;
        }
    }
}
