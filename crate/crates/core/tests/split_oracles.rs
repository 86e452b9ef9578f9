//! Split-step invariants checked against an independent path tally, plus
//! order-independence of normalization on random quivers.

use pathalg_core::corpus::random_weighted_quiver;
use pathalg_core::hilbert::path_counts;
use pathalg_core::split::{
    check_split_invariance, normalize_with_order, split_arrow, SplitOrder,
};
use pathalg_core::{
    normalize_to_degree_one, weight_discrepancy, QuiverPath, WeightedQuiver, DEFAULT_ENUM_BUDGET,
};
use num_bigint::BigUint;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::collections::HashMap;

/// Independent tally of paths u→v by degree, by breadth-first extension.
fn brute_counts(q: &WeightedQuiver, max_degree: u64) -> HashMap<(usize, usize, u64), u64> {
    let mut counts: HashMap<(usize, usize, u64), u64> = HashMap::new();
    let mut frontier: Vec<QuiverPath> =
        (0..q.vertex_count()).map(QuiverPath::trivial).collect();
    for p in &frontier {
        *counts.entry((p.source, p.source, 0)).or_default() += 1;
    }
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for p in &frontier {
            for a in 0..q.arrow_count() {
                if q.src(a) != p.target(q) {
                    continue;
                }
                let degree = p.degree(q) + q.degree(a) as u64;
                if degree > max_degree {
                    continue;
                }
                let mut arrows = p.arrows.clone();
                arrows.push(a);
                let ext = QuiverPath { source: p.source, arrows };
                *counts.entry((ext.source, ext.target(q), degree)).or_default() += 1;
                next.push(ext);
            }
        }
        frontier = next;
    }
    counts
}

#[test]
fn dp_counts_match_the_brute_tally() {
    for seed in 0..10u64 {
        let q = random_weighted_quiver(&mut ChaCha8Rng::seed_from_u64(seed), false);
        let table = path_counts(&q, 7);
        let brute = brute_counts(&q, 7);
        for u in 0..q.vertex_count() {
            for v in 0..q.vertex_count() {
                for d in 0..=7u64 {
                    let expect = brute.get(&(u, v, d)).copied().unwrap_or(0);
                    assert_eq!(
                        *table.count(u, v, d as usize),
                        BigUint::from(expect),
                        "seed {seed} ({u},{v},{d})"
                    );
                }
            }
        }
    }
}

#[test]
fn splits_preserve_counts_between_old_vertices() {
    for seed in 0..10u64 {
        let q = random_weighted_quiver(&mut ChaCha8Rng::seed_from_u64(seed), true);
        let heavy = q.arrows().iter().find(|a| a.degree > 1).unwrap().name.clone();
        let (out, step) = split_arrow(&q, &heavy).unwrap();
        // Library check with witnesses.
        let report = check_split_invariance(&q, &out, &step, 8, 5, DEFAULT_ENUM_BUDGET).unwrap();
        assert!(report.passed(), "seed {seed}: {:?}", report.failures);
        // Independent tally of both sides.
        let before = brute_counts(&q, 8);
        let after = brute_counts(&out, 8);
        for u in 0..q.vertex_count() {
            for v in 0..q.vertex_count() {
                let au = out.vertex_index(&q.vertices()[u]).unwrap();
                let av = out.vertex_index(&q.vertices()[v]).unwrap();
                for d in 0..=8u64 {
                    assert_eq!(
                        before.get(&(u, v, d)).copied().unwrap_or(0),
                        after.get(&(au, av, d)).copied().unwrap_or(0),
                        "seed {seed} ({u},{v},{d})"
                    );
                }
            }
        }
    }
}

#[test]
fn normalization_counts_are_order_independent() {
    for seed in 0..10u64 {
        let q = random_weighted_quiver(&mut ChaCha8Rng::seed_from_u64(seed), true);
        let d = weight_discrepancy(&q);
        let (first, t1) = normalize_with_order(&q, SplitOrder::FirstDeclared);
        let (last, t2) = normalize_with_order(&q, SplitOrder::LastDeclared);
        for (out, trace) in [(&first, &t1), (&last, &t2)] {
            assert_eq!(trace.len() as u64, d);
            assert_eq!(out.vertex_count() as u64, q.vertex_count() as u64 + d);
            assert_eq!(out.arrow_count() as u64, q.arrow_count() as u64 + d);
            assert!(out.all_degrees_one());
        }
        let ca = path_counts(&first, 8);
        let cb = path_counts(&last, 8);
        for u in 0..q.vertex_count() {
            for v in 0..q.vertex_count() {
                let (u1, v1) = (
                    first.vertex_index(&q.vertices()[u]).unwrap(),
                    first.vertex_index(&q.vertices()[v]).unwrap(),
                );
                let (u2, v2) = (
                    last.vertex_index(&q.vertices()[u]).unwrap(),
                    last.vertex_index(&q.vertices()[v]).unwrap(),
                );
                for deg in 0..=8usize {
                    assert_eq!(ca.count(u1, v1, deg), cb.count(u2, v2, deg), "seed {seed}");
                }
            }
        }
    }
}

#[test]
fn discrepancy_decreases_one_per_step() {
    for seed in 0..10u64 {
        let q = random_weighted_quiver(&mut ChaCha8Rng::seed_from_u64(seed), true);
        let mut current = q.clone();
        let mut expected = weight_discrepancy(&q);
        while let Some(b) = current.arrows().iter().find(|a| a.degree > 1).map(|a| a.name.clone()) {
            let (next, _) = split_arrow(&current, &b).unwrap();
            assert_eq!(weight_discrepancy(&next), expected - 1);
            expected -= 1;
            current = next;
        }
        assert_eq!(expected, 0);
        let (direct, trace) = normalize_to_degree_one(&q);
        assert_eq!(direct, current);
        assert_eq!(trace.len() as u64, weight_discrepancy(&q));
    }
}
