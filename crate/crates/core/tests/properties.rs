mod common;

use bicoh_core::braid::{are_equal, exponent_sum, perm_of};
use bicoh_core::coherence::iso_exists;
use bicoh_core::functor::eval_word;
use bicoh_core::movie::moves::candidate_steps;
use bicoh_core::movie::{
    apply_move, check_certificate, movie_equivalent, parse_movie, validate_movie, Catalog, SearchOptions,
};
use bicoh_core::term::{parse_one_cell, parse_two_cell, src_obj, tgt_obj, TwoCell};
use proptest::prelude::*;
use proptest::test_runner::RngSeed;
use rand::Rng;

use common::*;

fn config(cases: u32) -> ProptestConfig {
    ProptestConfig { cases, rng_seed: RngSeed::Fixed(0x5eed), failure_persistence: None, ..ProptestConfig::default() }
}

const GENS: &[&str] = &["x", "y", "z"];

fn random_two_cell(r: &mut TestRng, depth: usize) -> TwoCell {
    let o = |r: &mut TestRng| random_obj(r, GENS, 3, 0.2);
    let c = |r: &mut TestRng| {
        let x = random_obj(r, GENS, 3, 0.2);
        random_cell(r, &x, 2, true)
    };
    let pick = if depth == 0 { r.gen_range(0..8) } else { r.gen_range(0..12) };
    match pick {
        0 => TwoCell::Id2(c(r)),
        1 => TwoCell::EtaA(o(r), o(r), o(r)),
        2 => TwoCell::EpsL(o(r)),
        3 => TwoCell::EtaB(o(r), o(r)),
        4 => TwoCell::Pi(o(r), o(r), o(r), o(r)),
        5 => TwoCell::HexR(o(r), o(r), o(r)),
        6 => TwoCell::NatB(c(r), c(r)),
        7 => TwoCell::CompAssoc(c(r), c(r), c(r)),
        8 => TwoCell::inv(random_two_cell(r, depth - 1)),
        9 => TwoCell::vcomp(random_two_cell(r, depth - 1), random_two_cell(r, depth - 1)),
        10 => TwoCell::hcomp(random_two_cell(r, depth - 1), random_two_cell(r, depth - 1)),
        _ => TwoCell::tensor(random_two_cell(r, depth - 1), random_two_cell(r, depth - 1)),
    }
}

proptest! {
    #![proptest_config(config(256))]

    #[test]
    fn one_cells_round_trip_through_text(seed in any::<u64>()) {
        let mut r = rng(seed);
        let x = random_obj(&mut r, GENS, 5, 0.2);
        let f = random_cell(&mut r, &x, 4, true);
        let text = f.to_string();
        prop_assert_eq!(parse_one_cell(&text).unwrap(), f);
    }

    #[test]
    fn two_cells_round_trip_through_text(seed in any::<u64>()) {
        let mut r = rng(seed);
        let a = random_two_cell(&mut r, 3);
        let text = a.to_string();
        prop_assert_eq!(parse_two_cell(&text).unwrap(), a);
    }

    #[test]
    fn coherence_cells_evaluate_to_the_empty_word(seed in any::<u64>()) {
        let mut r = rng(seed);
        let x = random_obj(&mut r, GENS, 6, 0.3);
        let f = random_cell(&mut r, &x, 6, false);
        prop_assert!(f.is_braid_free());
        prop_assert!(eval_word(&f).unwrap().is_empty());
    }

    #[test]
    fn normalizing_cells_are_well_formed(seed in any::<u64>()) {
        let mut r = rng(seed);
        let x = random_obj(&mut r, GENS, 6, 0.3);
        let (n, out) = normalize(&x);
        prop_assert_eq!(src_obj(&n).unwrap(), x.clone());
        prop_assert_eq!(tgt_obj(&n).unwrap(), out.clone());
        prop_assert_eq!(out.flatten(), x.flatten());
    }

    #[test]
    fn equality_is_an_equivalence(seed in any::<u64>()) {
        let mut r = rng(seed);
        let n = r.gen_range(2..=4);
        let a = random_word(&mut r, n, 6);
        // b is a conjugate-free rewrite of a: a · w · w⁻¹
        let w = random_word(&mut r, n, 3);
        let b = a.concat(&w).unwrap().concat(&w.inverse()).unwrap();
        let c = random_word(&mut r, n, 6);
        prop_assert!(are_equal(&a, &a).unwrap());
        prop_assert!(are_equal(&a, &b).unwrap());
        prop_assert!(are_equal(&b, &a).unwrap());
        let (ab, bc, ac) = (are_equal(&a, &b).unwrap(), are_equal(&b, &c).unwrap(), are_equal(&a, &c).unwrap());
        prop_assert_eq!(are_equal(&c, &b).unwrap(), bc);
        if ab && bc {
            prop_assert!(ac);
        }
        prop_assert_eq!(ac, artin_equal(&a, &c));
    }

    #[test]
    fn movie_frames_share_invariants(seed in any::<u64>()) {
        let mut r = rng(seed);
        let m = random_movie(&mut r, 4, 4, 8);
        validate_movie(&m).unwrap();
        let first = m.first();
        for w in m.frames() {
            prop_assert!(are_equal(first, w).unwrap());
            prop_assert_eq!(exponent_sum(first), exponent_sum(w));
            prop_assert_eq!(perm_of(first), perm_of(w));
        }
        prop_assert_eq!(parse_movie(&m.to_string()).unwrap(), m);
    }

    #[test]
    fn moves_keep_movies_valid(seed in any::<u64>()) {
        let mut r = rng(seed);
        let m = random_movie(&mut r, 4, 3, 4);
        let catalog = Catalog::with_gated();
        let steps = candidate_steps(&m, &catalog);
        prop_assume!(!steps.is_empty());
        let step = &steps[r.gen_range(0..steps.len())];
        let out = apply_move(&m, step, &catalog).unwrap();
        validate_movie(&out).unwrap();
        prop_assert_eq!(out.first(), m.first());
        prop_assert_eq!(out.last(), m.last());
    }
}

proptest! {
    #![proptest_config(config(48))]

    #[test]
    fn found_certificates_replay(seed in any::<u64>()) {
        let mut r = rng(seed);
        let m = random_movie(&mut r, 3, 3, 3);
        let steps = candidate_steps(&m, &Catalog::standard());
        prop_assume!(!steps.is_empty());
        let step = &steps[r.gen_range(0..steps.len())];
        let other = apply_move(&m, step, &Catalog::standard()).unwrap();
        let outcome = movie_equivalent(&m, &other, &SearchOptions::with_budget(2)).unwrap();
        let cert = outcome.certificate().expect("one move apart");
        prop_assert!(cert.len() <= 1);
        prop_assert!(check_certificate(&m, &other, cert));
    }

    #[test]
    fn parallel_coherence_cells_are_isomorphic(seed in any::<u64>()) {
        let mut r = rng(seed);
        let x = random_obj(&mut r, GENS, 5, 0.3);
        let f = normalized(random_cell(&mut r, &x, 4, false));
        let g = normalized(random_cell(&mut r, &x, 4, false));
        prop_assert_eq!(tgt_obj(&f).unwrap(), tgt_obj(&g).unwrap());
        prop_assert!(iso_exists(&f, &g).unwrap().verdict);
    }
}
