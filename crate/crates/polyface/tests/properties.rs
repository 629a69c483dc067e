//! Randomized cross-checks over seeded random posets, reaching sizes the
//! exhaustive sweeps do not.

use polyface::census::{self, Polytope};
use polyface::poset::Poset;
use polyface::{bijection, gen, oracle, report};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;

fn arb_poset(max_n: usize) -> impl Strategy<Value = Poset> {
    (1..=max_n, any::<u64>(), 0.05f64..0.95)
        .prop_map(|(n, seed, density)| gen::random(n, density, seed))
}

fn relabel(p: &Poset, seed: u64) -> Poset {
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let mut perm: Vec<usize> = (0..p.n()).collect();
    perm.shuffle(&mut rng);
    let covers: Vec<(usize, usize)> =
        p.covers().into_iter().map(|(a, b)| (perm[a], perm[b])).collect();
    Poset::from_covers(p.n(), &covers).expect("relabeling preserves acyclicity")
}

proptest! {
    /// Filters and antichains are two views of the same objects.
    #[test]
    fn filters_and_antichains_correspond(p in arb_poset(7)) {
        let filters = p.filters();
        prop_assert_eq!(filters.len(), p.antichains().len());
        for &f in &filters {
            let a = p.filter_to_antichain(f).expect("filters convert");
            prop_assert_eq!(p.antichain_to_filter(a).expect("antichains convert"), f);
        }
    }

    /// Reversing the order reverses nothing countable: the order polytope
    /// reflects through x -> 1 - x and the chain polytope is unchanged.
    #[test]
    fn opposite_poset_preserves_the_face_census(p in arb_poset(6)) {
        let q = p.opposite();
        for which in [Polytope::Order, Polytope::Chain] {
            prop_assert_eq!(census::f_vector2(&p, which), census::f_vector2(&q, which));
        }
    }

    /// The support-by-support triangle count uses completely different
    /// machinery (boundary-trace counters) than the direct enumeration.
    #[test]
    fn triangle_count_by_support_matches_enumeration(p in arb_poset(6)) {
        for which in [Polytope::Order, Polytope::Chain] {
            prop_assert_eq!(
                census::triangle_count_by_support(&p, which),
                census::f_vector2(&p, which).f2_tri
            );
        }
    }

    #[test]
    fn square_correspondence_stays_clean(p in arb_poset(7)) {
        prop_assert!(bijection::check_squares(&p).is_clean());
    }

    #[test]
    fn canonical_form_is_relabeling_invariant(p in arb_poset(7), seed in any::<u64>()) {
        let q = relabel(&p, seed);
        prop_assert_eq!(gen::canonical_form(&p), gen::canonical_form(&q));
        prop_assert!(gen::are_isomorphic(&p, &q));
    }

    #[test]
    fn poset_json_round_trips(p in arb_poset(7)) {
        let text = serde_json::to_string(&p).expect("posets serialize");
        let back: Poset = serde_json::from_str(&text).expect("round trip parses");
        prop_assert_eq!(back, p);
    }

    /// Small random posets agree with the geometry face by face.
    #[test]
    fn census_matches_oracle_on_random_posets(p in arb_poset(4)) {
        for which in [Polytope::Order, Polytope::Chain] {
            let combined = report::census_with_oracle(&p, which).expect("oracle runs");
            prop_assert!(
                combined.matches,
                "mismatch on {:?}: {:?} vs {:?}",
                p, combined.census.f_vector, combined.oracle.f_vector
            );
        }
    }

    /// The two facet systems stay irredundant on random posets.
    #[test]
    fn facet_systems_are_irredundant(p in arb_poset(6)) {
        for (sys, verts) in [
            (oracle::order_facets(&p), oracle::order_vertices(&p)),
            (oracle::chain_facets(&p), oracle::chain_vertices(&p)),
        ] {
            let info = oracle::facet_info(&sys, &verts).expect("vertices lie in the system");
            prop_assert!(info.non_facets.is_empty());
            prop_assert_eq!(info.facet_count, sys.inequalities.len());
        }
    }
}
