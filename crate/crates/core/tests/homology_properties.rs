mod common;

use num_bigint::BigInt;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use common::{random_exponents, rank_by_gcd_rows};
use torelli_core::classes::classify;
use torelli_core::homology::{
    action_kernel_rank, build_model, is_identity_action, multitransvection, twist_action, twist_action_product,
    SymplecticLattice, Transvection,
};
use torelli_core::surface::gen_random;
use torelli_core::torelli::{is_torelli, torelli_rank};
use torelli_core::{IntMatrix, Multitwist};

/// Pairwise orthogonal primitive vectors in the standard lattice: integer
/// combinations of `a_1..a_g` with content 1.
fn isotropic_family(g: usize) -> impl Strategy<Value = Vec<Transvection>> {
    prop::collection::vec((prop::collection::vec(-3i64..=3, g), -4i64..=4), 1..5).prop_map(move |items| {
        let mut out: Vec<Transvection> = Vec::new();
        for (coeffs, m) in items {
            let mut v = vec![0i64; 2 * g];
            for (i, c) in coeffs.iter().enumerate() {
                v[2 * i] = *c;
            }
            let content = coeffs.iter().fold(0i64, |a, &b| num_integer::gcd(a, b));
            if content != 1 {
                continue;
            }
            let t = Transvection::from_i64(&v, m);
            let lat = SymplecticLattice::standard(g);
            if out.iter().all(|o| multitransvection(&lat, &[o.clone(), t.clone()]).is_ok()) {
                out.push(t);
            }
        }
        out
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn actions_are_symplectic(g in 2u64..=5, seed in any::<u64>()) {
        let s = gen_random(g, seed).unwrap();
        let model = build_model(&s).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let cls = classify(s.graph());
        let m = Multitwist::new(s.graph().clone(), random_exponents(&mut rng, &cls, s.graph().edge_count(), 3, false)).unwrap();
        let a = twist_action(&model, &m).unwrap();
        prop_assert!(model.lattice().preserves_form(&a));
        prop_assert_eq!(&a, &twist_action_product(&model, &m).unwrap());
    }

    #[test]
    fn model_invariants_hold(g in 2u64..=6, seed in any::<u64>()) {
        let s = gen_random(g, seed).unwrap();
        let model = build_model(&s).unwrap();
        prop_assert_eq!(model.lattice().rank() as u64, 2 * g);
        let cls = classify(s.graph());
        prop_assert_eq!(model.check_invariants(&cls), Ok(()));
    }

    #[test]
    fn identity_action_iff_torelli(g in 2u64..=5, seed in any::<u64>(), torelli in any::<bool>()) {
        let s = gen_random(g, seed).unwrap();
        let model = build_model(&s).unwrap();
        let cls = classify(s.graph());
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed);
        let m = Multitwist::new(s.graph().clone(), random_exponents(&mut rng, &cls, s.graph().edge_count(), 2, torelli)).unwrap();
        prop_assert_eq!(is_torelli(&m), is_identity_action(&model, &m).unwrap());
    }

    #[test]
    fn kernel_rank_matches_formula(g in 2u64..=6, seed in any::<u64>()) {
        let s = gen_random(g, seed).unwrap();
        let model = build_model(&s).unwrap();
        prop_assert_eq!(action_kernel_rank(&model), torelli_rank(&classify(s.graph())));
    }

    #[test]
    fn transvection_powers(v in prop::collection::vec(-3i64..=3, 4), m in 0i64..6) {
        let lat = SymplecticLattice::standard(2);
        let content = v.iter().fold(0i64, |a, &b| num_integer::gcd(a, b));
        prop_assume!(content == 1);
        let single = multitransvection(&lat, &[Transvection::from_i64(&v, 1)]).unwrap();
        let mut power = IntMatrix::identity(4);
        for _ in 0..m {
            power = &power * &single;
        }
        prop_assert_eq!(&multitransvection(&lat, &[Transvection::from_i64(&v, m)]).unwrap(), &power);
        let back = multitransvection(&lat, &[Transvection::from_i64(&v, -m)]).unwrap();
        prop_assert!((&power * &back).is_identity());
        prop_assert!(lat.preserves_form(&power));
    }

    #[test]
    fn orthogonal_transvections_commute(family in isotropic_family(3), rot in 0usize..5) {
        let lat = SymplecticLattice::standard(3);
        let forward = multitransvection(&lat, &family).unwrap();
        let mut rotated = family.clone();
        if !rotated.is_empty() {
            let k = rot % rotated.len();
            rotated.rotate_left(k);
        }
        rotated.reverse();
        prop_assert_eq!(&forward, &multitransvection(&lat, &rotated).unwrap());
        prop_assert!(lat.preserves_form(&forward));
    }

    #[test]
    fn bareiss_rank_matches_gcd_rows(rows in prop::collection::vec(prop::collection::vec(-4i64..=4, 5), 0..7)) {
        let big: Vec<Vec<BigInt>> = rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
        let expected = rank_by_gcd_rows(&big);
        let got = if rows.is_empty() { 0 } else { IntMatrix::from_rows(&rows).rank() };
        prop_assert_eq!(got, expected);
    }
}
