mod common;

use std::sync::Arc;

use common::*;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use schubert_core::{normalize_wedge, Degree, IndexTuple, ModuleSpec, MultiVector, Ring};

fn equivariant() -> Arc<ModuleSpec> {
    let ring = Ring::parse_declaration("y1:1,y2:1,y3:1,y4:1,q:4").unwrap();
    ModuleSpec::from_polynomial(
        "(X - y1 + y1)*(X - y2 + y1)*(X - y3 + y1)*(X - y4 + y1) + q",
        &ring,
        Some(4),
    )
    .unwrap()
}

#[test]
fn reduction_matches_division() {
    let mut specs = vec![equivariant()];
    for n in 1..=6 {
        specs.extend(three_specs(n).into_iter().map(|(_, s)| s));
    }
    for spec in &specs {
        let n = spec.rank().unwrap();
        for m in 1..=n + 6 {
            let got = to_oracle(&spec.reduce_index(m).unwrap());
            let want: OracleWedge = division_oracle(spec, m)
                .into_iter()
                .map(|(i, c)| (vec![i], c))
                .collect();
            assert_eq!(got, want, "m = {m}, p = {}", spec.polynomial_string());
            if m <= n {
                assert_eq!(got.len(), 1);
                assert!(got[&vec![m]].is_one());
            }
        }
    }
}

#[test]
fn free_module_overflows_loudly() {
    let spec = free(5);
    assert!(spec.reduce_index(5).is_ok());
    assert!(spec.reduce_index(6).is_err());
    let v = MultiVector::basis(&spec, &IndexTuple::new(vec![4, 5]).unwrap()).unwrap();
    assert!(schubert_core::apply_d(1, &v).is_err());
}

#[test]
fn wedge_json_round_trip() {
    let spec = quantum(4);
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..20 {
        let v = random_vector(&mut rng, &spec, 2, 4);
        let terms = v.to_wedge_terms();
        let json = serde_json::to_string(&terms).unwrap();
        let back: Vec<schubert_core::exterior::WedgeTerm> = serde_json::from_str(&json).unwrap();
        assert_eq!(MultiVector::from_wedge_terms(&spec, 2, &back).unwrap(), v);
    }
}

proptest! {
    #[test]
    fn normalize_is_alternating(raw in prop::collection::vec(1u32..=9, 1..5), pos in 0usize..4) {
        let spec = generic_spec(5);
        let one = int(spec.ring(), 1);
        let v = normalize_wedge(&raw, &one, &spec).unwrap();
        if pos + 1 < raw.len() {
            let mut swapped = raw.clone();
            swapped.swap(pos, pos + 1);
            let w = normalize_wedge(&swapped, &one, &spec).unwrap();
            prop_assert_eq!(w, v.neg());
        }
        let mut repeated = raw.clone();
        repeated.push(raw[pos % raw.len()]);
        prop_assert!(normalize_wedge(&repeated, &one, &spec).unwrap().is_zero());
    }

    #[test]
    fn homogeneous_vectors_stay_weight_consistent(seed in any::<u64>(), k in 1usize..=3, h in 0u32..=4) {
        // εⁱ has degree i and cᵢ degree i, so weight(I) + deg(coeff) is constant
        let spec = generic_spec(5);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let b = random_index(&mut rng, k, 5);
        let v = MultiVector::basis(&spec, &b).unwrap();
        let w = schubert_core::apply_d(h, &v).unwrap();
        let target = b.weight() as u64 + h as u64;
        for (i, c) in w.terms() {
            prop_assert_eq!(c.graded_degree(), Degree::Homogeneous(target - i.weight() as u64));
        }
    }

    #[test]
    fn wedge_is_bilinear_and_graded_commutative(seed in any::<u64>(), a in 1usize..=2, b in 1usize..=2) {
        let spec = quantum(5);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let x = random_vector(&mut rng, &spec, a, 3);
        let y = random_vector(&mut rng, &spec, b, 3);
        let z = random_vector(&mut rng, &spec, b, 3);
        let sign = if a * b % 2 == 1 { -1 } else { 1 };
        prop_assert_eq!(
            x.wedge(&y).unwrap(),
            y.wedge(&x).unwrap().scale(&int(spec.ring(), sign)).unwrap()
        );
        prop_assert_eq!(
            x.wedge(&y.try_add(&z).unwrap()).unwrap(),
            x.wedge(&y).unwrap().try_add(&x.wedge(&z).unwrap()).unwrap()
        );
        let two = int(spec.ring(), 2);
        prop_assert_eq!(
            x.scale(&two).unwrap().wedge(&y).unwrap(),
            x.wedge(&y).unwrap().scale(&two).unwrap()
        );
    }
}
