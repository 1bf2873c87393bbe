mod common;

use common::relabel;
use pathcontract::oracle::{all_witness_structures, oracle_dcs, oracle_path_contraction, DcsParts};
use pathcontract::{
    bpc, compute_gamma, enumerate_minimal_connectors, enumerate_small_connected, is_immovable, make_immovable, nsoepc,
    p5_contract, reconstruct, soepc, solve, solve_3dcs, Constants, Fraction, Graph, VertexSet,
};
use proptest::prelude::*;
use proptest::sample::Index;

/// Random spanning tree plus extra edges, so always connected.
fn connected_graph(min: usize, max: usize) -> impl Strategy<Value = Graph> {
    (min..=max).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        (
            Just(n),
            proptest::collection::vec(any::<Index>(), n - 1),
            proptest::collection::vec(0u8..4, pairs),
        )
            .prop_map(|(n, parents, extra)| {
                let mut g = Graph::new(n).unwrap();
                for (i, p) in parents.iter().enumerate() {
                    g.add_edge(i + 1, p.index(i + 1)).unwrap();
                }
                let mut k = 0;
                for u in 0..n {
                    for v in u + 1..n {
                        if extra[k] == 0 {
                            g.add_edge(u, v).unwrap();
                        }
                        k += 1;
                    }
                }
                g
            })
    })
}

fn subset_of(g: &Graph, bits: u128) -> VertexSet {
    VertexSet::from_bits(bits) & g.vertices()
}

fn fraction() -> impl Strategy<Value = Fraction> {
    (1u64..=8).prop_flat_map(|q| (1..=q).prop_map(move |p| Fraction::new(p, q).unwrap()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn neighborhood_and_boundary(g in connected_graph(1, 12), bits in any::<u128>()) {
        let s = subset_of(&g, bits);
        let nb = g.neighborhood(s);
        prop_assert!(!nb.intersects(s));
        prop_assert!(g.boundary(s).is_subset(s));
        prop_assert_eq!(g.closed_neighborhood(s), s | nb);
        for v in g.boundary(s) {
            prop_assert!(g.adj(v).intersects(nb));
        }
    }

    #[test]
    fn components_partition(g in connected_graph(1, 12), bits in any::<u128>()) {
        let s = subset_of(&g, bits);
        let comps = g.components(s);
        let mut union = VertexSet::EMPTY;
        for (i, &c) in comps.iter().enumerate() {
            prop_assert!(g.is_connected_set(c));
            prop_assert!(!union.intersects(c));
            union |= c;
            for &d in &comps[i + 1..] {
                prop_assert!(!g.sets_adjacent(c, d));
                prop_assert!(c.min() < d.min());
            }
        }
        prop_assert_eq!(union, s);
    }

    #[test]
    fn text_format_round_trips(g in connected_graph(1, 20)) {
        prop_assert_eq!(g.to_text().parse::<Graph>().unwrap(), g);
    }

    #[test]
    fn fraction_text_round_trips(f in fraction()) {
        prop_assert_eq!(f.to_string().parse::<Fraction>().unwrap(), f);
    }

    #[test]
    fn small_connected_is_monotone(g in connected_graph(1, 11), r1 in fraction(), r2 in fraction()) {
        let (lo, hi) = if r1 <= r2 { (r1, r2) } else { (r2, r1) };
        let a = enumerate_small_connected(&g, lo);
        let b = enumerate_small_connected(&g, hi);
        let mut dedup = b.clone();
        dedup.dedup();
        prop_assert_eq!(dedup.len(), b.len());
        prop_assert!(a.iter().all(|s| b.binary_search_by_key(&(s.len(), s.bits()), |t| (t.len(), t.bits())).is_ok()));
    }

    #[test]
    fn gamma_table_invariants(g in connected_graph(1, 10), rho in fraction()) {
        let table = compute_gamma(&g, rho);
        for (s, e) in table.iter() {
            prop_assert!(g.is_connected_set(s));
            prop_assert!(rho.admits(g.closed_neighborhood(s).len(), g.n()));
            prop_assert_eq!(e.gamma == 1, e.pred.is_none());
            if let Some(a) = e.pred {
                let prev = s - a;
                prop_assert_eq!(table.gamma(prev), Some(e.gamma - 1));
                prop_assert!(g.is_connected_set(a));
                prop_assert!(g.neighborhood(prev).is_subset(a));
            }
            let w = reconstruct(&table, s).unwrap();
            prop_assert!(w.check_within(&g, s).is_ok());
            prop_assert!(g.boundary(s).is_subset(w.parts()[w.t() - 1]));
        }
    }

    #[test]
    fn oracle_witness_quotients_to_path(g in connected_graph(1, 9)) {
        let (t, w) = oracle_path_contraction(&g).unwrap();
        prop_assert!(w.check(&g).is_ok());
        prop_assert_eq!(g.quotient(w.parts()).unwrap().as_path_length(), Some(t));
        prop_assert_eq!(w.odd_set() | w.even_set(), g.vertices());
        prop_assert!(!w.odd_set().intersects(w.even_set()));
        if g.n() >= 2 {
            prop_assert!(t >= 2);
        }
    }

    #[test]
    fn singleton_end_bags_suffice(g in connected_graph(3, 8)) {
        let (t, _) = oracle_path_contraction(&g).unwrap();
        if t >= 3 {
            let found = all_witness_structures(&g).into_iter().any(|w| {
                w.t() == t && w.parts()[0].len() == 1 && w.parts()[t - 1].len() == 1
            });
            prop_assert!(found);
        }
    }

    #[test]
    fn results_ignore_labels(g in connected_graph(2, 9), seed in any::<u64>()) {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let perm = common::random_permutation(&mut rng, g.n());
        let h = relabel(&g, &perm);
        let c = Constants::default();
        prop_assert_eq!(oracle_path_contraction(&g).unwrap().0, oracle_path_contraction(&h).unwrap().0);
        let (a, b) = (solve(&g, &c).unwrap(), solve(&h, &c).unwrap());
        prop_assert_eq!(a.t, b.t);
        prop_assert!(a.witness.check(&g).is_ok() && b.witness.check(&h).is_ok());
    }

    #[test]
    fn subroutines_monotone_in_parameter(g in connected_graph(2, 8), r1 in fraction(), r2 in fraction()) {
        let (lo, hi) = if r1 <= r2 { (r1, r2) } else { (r2, r1) };
        prop_assert!(soepc(&g, lo).t <= soepc(&g, hi).t);
        prop_assert!(bpc(&g, lo).t <= bpc(&g, hi).t);
        prop_assert!(nsoepc(&g, lo).t <= nsoepc(&g, hi).t);
    }

    #[test]
    fn p5_matches_oracle(g in connected_graph(1, 9)) {
        let (t, _) = oracle_path_contraction(&g).unwrap();
        prop_assert_eq!(p5_contract(&g), t >= 5);
    }

    #[test]
    fn three_dcs_with_guessed_terminals(g in connected_graph(2, 7), b1 in any::<u128>(), b2 in any::<u128>(), empty in 0u8..3) {
        let (z1, z2) = match empty {
            0 => (VertexSet::EMPTY, VertexSet::EMPTY),
            1 => (VertexSet::EMPTY, subset_of(&g, b2)),
            _ => (subset_of(&g, b1), VertexSet::EMPTY),
        };
        let got = solve_3dcs(&g, z1, z2).unwrap();
        prop_assert_eq!(got.is_some(), oracle_dcs(&g, z1, z2, DcsParts::Three).unwrap());
        if let Some(t) = got {
            prop_assert!(t.is_solution(&g, z1, z2));
        }
    }

    #[test]
    fn immovable_solutions_and_connector_unions(g in connected_graph(4, 8), b1 in any::<u128>(), b2 in any::<u128>()) {
        let z1 = subset_of(&g, b1);
        let z2 = subset_of(&g, b2) - z1;
        prop_assume!(!z1.is_empty() && !z2.is_empty() && z1.len() + z2.len() <= 4);
        if let Some(sol) = solve_3dcs(&g, z1, z2).unwrap() {
            let fixed = make_immovable(&g, sol, z1, z2).unwrap();
            prop_assert!(fixed.is_solution(&g, z1, z2));
            prop_assert_eq!(is_immovable(&g, fixed, z1, z2), Ok(true));
            prop_assert!(sol.u.is_subset(fixed.u));
            // a minimal Z_i-connector inside each side, in original labels
            let side = |v: VertexSet, z: VertexSet| -> Vec<VertexSet> {
                let (h, map) = g.induced(v).unwrap();
                let local: VertexSet = map.iter().enumerate().filter(|(_, &o)| z.contains(o)).map(|(i, _)| i).collect();
                enumerate_minimal_connectors(&h, local)
                    .into_iter()
                    .map(|c| c.iter().map(|i| map[i]).collect())
                    .collect()
            };
            let aux = g.with_edge(z1.min().unwrap(), z2.min().unwrap());
            let all = enumerate_minimal_connectors(&aux, z1 | z2);
            for s1 in side(fixed.v1, z1) {
                for s2 in side(fixed.v2, z2) {
                    prop_assert!(all.contains(&(s1 | s2)));
                }
            }
        }
    }
}
