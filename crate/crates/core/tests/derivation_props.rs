mod common;

use common::*;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use schubert_core::{
    apply_d, apply_dbar, dbar_operator_poly, leibniz_expand, pieri_expand, DerivationEngine,
    IndexTuple, MultiVector,
};

fn spec_for(choice: u8) -> std::sync::Arc<schubert_core::ModuleSpec> {
    match choice % 3 {
        0 => classical(6),
        1 => quantum(6),
        _ => generic_spec(6),
    }
}

#[test]
fn pieri_matches_leibniz_small() {
    for (_, spec) in three_specs(6) {
        for k in 1..=3 {
            for index in IndexTuple::all(k, 6) {
                for h in 0..=5 {
                    assert_eq!(
                        pieri_expand(h, &index, &spec).unwrap(),
                        leibniz_expand(h, &index, &spec).unwrap(),
                        "I = {index}, h = {h}"
                    );
                }
            }
        }
    }
}

#[test]
fn leibniz_matches_independent_oracle() {
    for (_, spec) in three_specs(5) {
        for k in 1..=3 {
            for index in IndexTuple::all(k, 5) {
                for h in 0..=4 {
                    let want = oracle_apply_d(&spec, h, &oracle_basis(&spec, index.indices()));
                    assert_eq!(to_oracle(&leibniz_expand(h, &index, &spec).unwrap()), want);
                }
            }
        }
    }
}

#[test]
fn pieri_shifts_are_admissible() {
    for k in 1..=3 {
        for index in IndexTuple::all(k, 7) {
            for h in 0..=5 {
                for shift in schubert_core::pieri_shifts(&index, h) {
                    assert_eq!(shift.iter().sum::<u32>(), h);
                    let i = index.indices();
                    for j in 0..k - 1 {
                        assert!(i[j] + shift[j] < i[j + 1]);
                    }
                }
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn derivations_commute(seed in any::<u64>(), i in 1u32..=4, j in 1u32..=4, k in 1usize..=3, s in any::<u8>()) {
        let spec = spec_for(s);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let v = random_vector(&mut rng, &spec, k, 3);
        prop_assert_eq!(
            apply_d(i, &apply_d(j, &v).unwrap()).unwrap(),
            apply_d(j, &apply_d(i, &v).unwrap()).unwrap()
        );
    }

    #[test]
    fn leibniz_rule(seed in any::<u64>(), h in 0u32..=4, s in any::<u8>()) {
        let spec = spec_for(s);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = rng.gen_range(1..=4);
        let b = rng.gen_range(1..=5 - a);
        let alpha = random_vector(&mut rng, &spec, a, 3);
        let beta = random_vector(&mut rng, &spec, b, 3);
        let lhs = apply_d(h, &alpha.wedge(&beta).unwrap()).unwrap();
        let mut rhs = MultiVector::zero(&spec, a + b);
        for h1 in 0..=h {
            let t = apply_d(h1, &alpha).unwrap().wedge(&apply_d(h - h1, &beta).unwrap()).unwrap();
            rhs = rhs.try_add(&t).unwrap();
        }
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn inverse_identity(seed in any::<u64>(), h in 1u32..=6, k in 1usize..=3, s in any::<u8>()) {
        let spec = spec_for(s);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let v = random_vector(&mut rng, &spec, k, 3);
        let mut acc = MultiVector::zero(&spec, k);
        for i in 0..=h {
            let t = apply_dbar(i, &apply_d(h - i, &v).unwrap()).unwrap();
            acc = if i % 2 == 0 { acc.try_add(&t).unwrap() } else { acc.try_sub(&t).unwrap() };
        }
        prop_assert!(acc.is_zero());
    }

    #[test]
    fn dbar_vanishes_above_k(seed in any::<u64>(), k in 1usize..=4, extra in 1u32..=4, s in any::<u8>()) {
        let spec = spec_for(s);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let v = random_vector(&mut rng, &spec, k, 3);
        prop_assert!(apply_dbar(k as u32 + extra, &v).unwrap().is_zero());
    }

    #[test]
    fn dbar_determinant_matches_recursion(seed in any::<u64>(), h in 0u32..=6, k in 1usize..=3, s in any::<u8>()) {
        let spec = spec_for(s);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let v = random_vector(&mut rng, &spec, k, 3);
        let engine = DerivationEngine::new(&spec);
        prop_assert_eq!(
            engine.apply_operator(&dbar_operator_poly(h), &v).unwrap(),
            engine.apply_dbar(h, &v).unwrap()
        );
    }

    #[test]
    fn integration_by_parts(seed in any::<u64>(), h in 0u32..=4, s in any::<u8>()) {
        let spec = spec_for(s);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = rng.gen_range(1..=4);
        let b = rng.gen_range(1..=5 - a);
        let alpha = random_vector(&mut rng, &spec, a, 3);
        let beta = random_vector(&mut rng, &spec, b, 3);
        let lhs = apply_d(h, &alpha).unwrap().wedge(&beta).unwrap();
        let mut rhs = MultiVector::zero(&spec, a + b);
        for i in 0..=h {
            let t = apply_d(h - i, &alpha.wedge(&apply_dbar(i, &beta).unwrap()).unwrap()).unwrap();
            rhs = if i % 2 == 0 { rhs.try_add(&t).unwrap() } else { rhs.try_sub(&t).unwrap() };
        }
        prop_assert_eq!(lhs, rhs);
    }
}
