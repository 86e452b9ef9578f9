//! The functor identities on random representations over random splits:
//! round trip, shift compatibility, triangle identities, counit naturality,
//! counit support, and torsion transfer.

use pathalg_core::corpus::random_weighted_quiver;
use pathalg_core::hilbert::path_counts;
use pathalg_core::reps::{
    check_adjunction, counit, functor_f, functor_f_mor, functor_g, functor_g_mor, projective,
    random_projective_morphism, random_rep, torsion_transfer_check, RepMorphism, SplitData,
    TruncatedGradedRep,
};
use pathalg_core::{weight_discrepancy, DEFAULT_ENUM_BUDGET};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::sync::Arc;

fn random_split(seed: u64) -> SplitData {
    let q = Arc::new(random_weighted_quiver(&mut ChaCha8Rng::seed_from_u64(seed), true));
    let heavy = q.arrows().iter().find(|a| a.degree > 1).unwrap().name.clone();
    SplitData::new(q, &heavy).unwrap()
}

#[test]
fn adjunction_identities_on_random_quivers() {
    for seed in 0..5u64 {
        let s = random_split(seed);
        let report = check_adjunction(&s, 6, 6, 3, seed).unwrap();
        assert!(report.passed(), "seed {seed}: {:?}", report.failures);
    }
}

#[test]
fn functors_act_on_morphisms() {
    // F of a projective-generated morphism still validates, and G brings it
    // back to a morphism between the round-tripped representations.
    for seed in 0..5u64 {
        let s = random_split(seed);
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0xF00);
        let m = random_rep(s.before(), 0, 6, 3, &mut rng);
        let Some(phi) = random_projective_morphism(&m, &mut rng, DEFAULT_ENUM_BUDGET).unwrap()
        else {
            continue;
        };
        let f_phi = functor_f_mor(&phi, &s);
        // Revalidation from raw parts must succeed.
        let revalidated = RepMorphism::try_new(
            f_phi.source().clone(),
            f_phi.target().clone(),
            (0..s.after().vertex_count())
                .map(|v| {
                    f_phi.source().space(v).degrees()
                        .chain(f_phi.target().space(v).degrees())
                        .filter_map(|d| f_phi.component(v, d).map(|m| (d, m.clone())))
                        .collect()
                })
                .collect(),
        );
        assert!(revalidated.is_ok(), "seed {seed}: {:?}", revalidated.err());
        let back = functor_g_mor(&f_phi, &s);
        assert_eq!(back.source(), phi.source());
        assert_eq!(back.target(), phi.target());
    }
}

#[test]
fn shift_commutes_with_the_split_functor() {
    for seed in 0..5u64 {
        let s = random_split(seed);
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0xABC);
        let m = random_rep(s.before(), 0, 6, 3, &mut rng);
        for k in [-2i64, -1, 0, 1, 2] {
            assert_eq!(functor_f(&m.shift(k), &s), functor_f(&m, &s).shift(k));
        }
    }
}

#[test]
fn projective_dimensions_follow_shifted_path_counts() {
    // Small fixed quiver with a cycle, then a shallow window over a random
    // one; deep windows over dense quivers have exponentially many paths.
    let fixed = Arc::new(
        pathalg_core::WeightedQuiver::new(
            vec!["u".into(), "v".into()],
            vec![
                pathalg_core::Arrow { name: "a".into(), source: "u".into(), target: "v".into(), degree: 1 },
                pathalg_core::Arrow { name: "b".into(), source: "v".into(), target: "u".into(), degree: 2 },
            ],
        )
        .unwrap(),
    );
    let shallow = random_split(3).before().clone();
    for (q, hi) in [(fixed, 8i64), (shallow, 4)] {
        let table = path_counts(&q, hi as usize);
        for shift in [0i64, 2] {
            let p = projective(&q, 0, shift, 0, hi, DEFAULT_ENUM_BUDGET).unwrap();
            for v in 0..q.vertex_count() {
                for d in 0..=hi {
                    let e = d - shift;
                    let expect = if e < 0 {
                        0u64
                    } else {
                        table.count(0, v, e as usize).try_into().unwrap()
                    };
                    assert_eq!(p.rep.space(v).dim_at(d).unwrap() as u64, expect);
                }
            }
        }
    }
}

#[test]
fn torsion_transfers_across_the_split() {
    // Zero representations are torsion on both sides of any split.
    for seed in 0..5u64 {
        let s = random_split(seed);
        let zero = TruncatedGradedRep::zero(s.before().clone(), 0, 6);
        let t = torsion_transfer_check(&zero, &s, 1, DEFAULT_ENUM_BUDGET).unwrap();
        assert!(t.torsion_source && t.torsion_image && t.agree(), "seed {seed}");
    }

    // On a single heavy loop the projective cycles forever, so neither side
    // is torsion; projectives over dense quivers would blow up, so the
    // non-torsion case sticks to this small fixed quiver.
    let q = Arc::new(
        pathalg_core::WeightedQuiver::new(
            vec!["v".into()],
            vec![pathalg_core::Arrow {
                name: "b".into(),
                source: "v".into(),
                target: "v".into(),
                degree: 2,
            }],
        )
        .unwrap(),
    );
    let s = SplitData::new(q, "b").unwrap();
    let p = projective(s.before(), 0, 0, 0, 8, DEFAULT_ENUM_BUDGET).unwrap();
    let t = torsion_transfer_check(&p.rep, &s, 2, DEFAULT_ENUM_BUDGET).unwrap();
    assert!(!t.torsion_source && !t.torsion_image && t.agree());
    assert!(t.forward_ok());
}

#[test]
fn counit_components_away_from_z_are_identities() {
    for seed in 0..5u64 {
        let s = random_split(seed);
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x11);
        let n = random_rep(s.after(), 0, 6, 3, &mut rng);
        let eps = counit(&n, &s);
        for v in 0..s.after().vertex_count() {
            if v == s.z() {
                continue;
            }
            for d in n.space(v).degrees() {
                assert!(eps.component(v, d).unwrap().is_identity());
            }
        }
        assert_eq!(functor_g(eps.source(), &s), functor_g(&n, &s));
    }
}

#[test]
fn normalization_composes_adjunctions() {
    // Iterating the split functor across a whole normalization still round
    // trips representations step by step.
    let q = Arc::new(random_weighted_quiver(&mut ChaCha8Rng::seed_from_u64(8), true));
    let d = weight_discrepancy(&q);
    assert!(d > 0);
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    let mut current_rep = random_rep(&q, 0, 6, 2, &mut rng);
    let mut current_q = q;
    for _ in 0..d {
        let heavy = current_q.arrows().iter().find(|a| a.degree > 1).unwrap().name.clone();
        let s = SplitData::new(current_q.clone(), &heavy).unwrap();
        let image = functor_f(&current_rep, &s);
        assert_eq!(functor_g(&image, &s), current_rep);
        current_rep = image;
        current_q = s.after().clone();
    }
    assert!(current_q.all_degrees_one());
}
