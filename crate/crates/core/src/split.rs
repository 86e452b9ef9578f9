//! Splitting arrows of degree > 1 and normalizing a weighted quiver to a
//! path algebra generated in degree one.
//!
//! A split replaces an arrow b of degree > 1 by a fresh vertex z, an arrow b′
//! of degree 1 into z, and an arrow b″ of degree deg(b) − 1 out of z. Each
//! split lowers the weight discrepancy by exactly one, so iterating from the
//! lowest-indexed heavy arrow terminates in D(kQ) steps.

use crate::error::{Error, Result};
use crate::hilbert::{enumerate_paths_by_degree, path_counts};
use crate::model::{Arrow, QuiverPath, WeightedQuiver};
use crate::report::CheckReport;
use serde::{Deserialize, Serialize};
use std::collections::HashSet;

/// Σ deg(a) − |Q₁|; zero exactly when all arrows have degree one.
pub fn weight_discrepancy(q: &WeightedQuiver) -> u64 {
    q.arrows().iter().map(|a| a.degree as u64 - 1).sum()
}

/// Record of one arrow split.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SplitStep {
    pub arrow: String,
    pub new_vertex: String,
    pub b_prime: String,
    pub b_dblprime: String,
}

/// The ordered splits taking a quiver to its degree-one normalization.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct SplitTrace(pub Vec<SplitStep>);

impl SplitTrace {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

fn fresh_vertex_name(used: &HashSet<&str>, counter: &mut usize) -> String {
    loop {
        let name = format!("z{counter}");
        *counter += 1;
        if !used.contains(name.as_str()) {
            return name;
        }
    }
}

fn fresh_arrow_name(used: &HashSet<&str>, base: &str, primes: usize) -> String {
    let mut name = format!("{base}{}", "'".repeat(primes));
    while used.contains(name.as_str()) {
        name.push('\'');
    }
    name
}

/// Splits arrow `b`, which must have degree > 1. All other arrows keep their
/// position, endpoints, and degrees; b is replaced in place by b′ then b″.
pub fn split_arrow(q: &WeightedQuiver, b: &str) -> Result<(WeightedQuiver, SplitStep)> {
    let mut counter = 1;
    split_arrow_counted(q, b, &mut counter)
}

fn split_arrow_counted(
    q: &WeightedQuiver,
    b: &str,
    vertex_counter: &mut usize,
) -> Result<(WeightedQuiver, SplitStep)> {
    let idx = q
        .arrow_index(b)
        .ok_or_else(|| Error::validation("arrow", format!("unknown arrow {b:?}")))?;
    let degree = q.degree(idx);
    if degree <= 1 {
        return Err(Error::validation(
            "arrow",
            format!("arrow {b:?} has degree 1; only arrows of degree > 1 split"),
        ));
    }

    let vertex_names: HashSet<&str> = q.vertices().iter().map(|v| v.as_str()).collect();
    let z = fresh_vertex_name(&vertex_names, vertex_counter);
    let mut arrow_names: HashSet<&str> = q.arrows().iter().map(|a| a.name.as_str()).collect();
    let b_prime = fresh_arrow_name(&arrow_names, b, 1);
    arrow_names.remove(b);
    let owned_prime = b_prime.clone();
    arrow_names.insert(owned_prime.as_str());
    let b_dblprime = fresh_arrow_name(&arrow_names, b, 2);

    let mut vertices = q.vertices().to_vec();
    vertices.push(z.clone());
    let mut arrows: Vec<Arrow> = Vec::with_capacity(q.arrow_count() + 1);
    for (i, a) in q.arrows().iter().enumerate() {
        if i == idx {
            arrows.push(Arrow {
                name: b_prime.clone(),
                source: a.source.clone(),
                target: z.clone(),
                degree: 1,
            });
            arrows.push(Arrow {
                name: b_dblprime.clone(),
                source: z.clone(),
                target: a.target.clone(),
                degree: degree - 1,
            });
        } else {
            arrows.push(a.clone());
        }
    }
    let out = WeightedQuiver::new(vertices, arrows)?;
    Ok((out, SplitStep { arrow: b.to_string(), new_vertex: z, b_prime, b_dblprime }))
}

/// Which heavy arrow to split next.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SplitOrder {
    /// Lowest-indexed arrow of degree > 1 first (the default policy).
    FirstDeclared,
    /// Highest-indexed first; used to check order-independence of counts.
    LastDeclared,
}

/// Splits until every arrow has degree one. The trace has length D(kQ);
/// a degree-one quiver comes back unchanged with an empty trace.
pub fn normalize_to_degree_one(q: &WeightedQuiver) -> (WeightedQuiver, SplitTrace) {
    normalize_with_order(q, SplitOrder::FirstDeclared)
}

pub fn normalize_with_order(q: &WeightedQuiver, order: SplitOrder) -> (WeightedQuiver, SplitTrace) {
    let mut current = q.clone();
    let mut steps = Vec::new();
    let mut counter = 1;
    loop {
        let heavy = match order {
            SplitOrder::FirstDeclared => current.arrows().iter().find(|a| a.degree > 1),
            SplitOrder::LastDeclared => current.arrows().iter().rev().find(|a| a.degree > 1),
        };
        let Some(b) = heavy else {
            return (current, SplitTrace(steps));
        };
        let name = b.name.clone();
        let (next, step) =
            split_arrow_counted(&current, &name, &mut counter).expect("heavy arrow splits");
        current = next;
        steps.push(step);
    }
}

/// Carries a path of the un-split quiver into the split quiver by replacing
/// every occurrence of b with b′·b″. Degree and endpoints are preserved, the
/// map is injective, and its image is exactly the paths between old vertices
/// that neither start nor end at z.
pub fn transfer_path(
    before: &WeightedQuiver,
    after: &WeightedQuiver,
    step: &SplitStep,
    p: &QuiverPath,
) -> QuiverPath {
    let b_idx = before.arrow_index(&step.arrow).expect("split arrow exists in source quiver");
    let bp = after.arrow_index(&step.b_prime).expect("b' exists");
    let bpp = after.arrow_index(&step.b_dblprime).expect("b'' exists");
    let mut arrows = Vec::with_capacity(p.arrows.len() + 1);
    for &a in &p.arrows {
        if a == b_idx {
            arrows.push(bp);
            arrows.push(bpp);
        } else {
            let name = &before.arrows()[a].name;
            arrows.push(after.arrow_index(name).expect("old arrow kept across split"));
        }
    }
    let source = after
        .vertex_index(&before.vertices()[p.source])
        .expect("old vertex kept across split");
    QuiverPath { source, arrows }
}

/// Checks a single split step: the discrepancy drops by one, vertex and
/// arrow counts each grow by one, per-degree path counts between old
/// vertices are unchanged up to `count_max_degree`, and the path transfer
/// is a bijection onto the paths of the split quiver with old endpoints
/// (exhaustive up to `transfer_max_degree`, which is enumeration-bound).
/// Failures carry a named witness path or vertex pair.
pub fn check_split_invariance(
    before: &WeightedQuiver,
    after: &WeightedQuiver,
    step: &SplitStep,
    count_max_degree: usize,
    transfer_max_degree: usize,
    budget: usize,
) -> Result<CheckReport> {
    let mut report = CheckReport::default();
    report.record(weight_discrepancy(after) + 1 == weight_discrepancy(before), || {
        format!(
            "weight discrepancy {} did not drop by 1 (now {})",
            weight_discrepancy(before),
            weight_discrepancy(after)
        )
    });
    report.record(after.vertex_count() == before.vertex_count() + 1, || {
        "vertex count did not grow by 1".into()
    });
    report.record(after.arrow_count() == before.arrow_count() + 1, || {
        "arrow count did not grow by 1".into()
    });

    // Per-degree counts between old vertices.
    let tb = path_counts(before, count_max_degree);
    let ta = path_counts(after, count_max_degree);
    let old_vertex = |u: usize| {
        after
            .vertex_index(&before.vertices()[u])
            .expect("old vertex kept across split")
    };
    for u in 0..before.vertex_count() {
        for v in 0..before.vertex_count() {
            let (au, av) = (old_vertex(u), old_vertex(v));
            for d in 0..=count_max_degree {
                report.record(tb.count(u, v, d) == ta.count(au, av, d), || {
                    format!(
                        "paths {}→{} of degree {d}: {} before vs {} after",
                        before.vertices()[u],
                        before.vertices()[v],
                        tb.count(u, v, d),
                        ta.count(au, av, d)
                    )
                });
            }
        }
    }

    // Exhaustive transfer bijection.
    let before_paths = enumerate_paths_by_degree(before, transfer_max_degree as u64, budget)?;
    let mut image: HashSet<QuiverPath> = HashSet::with_capacity(before_paths.len());
    for p in &before_paths {
        let t = transfer_path(before, after, step, p);
        report.record(t.degree(after) == p.degree(before), || {
            format!("transfer of {} changed degree", p.display(before))
        });
        report.record(
            after.vertices()[t.source] == before.vertices()[p.source]
                && after.vertices()[t.target(after)] == before.vertices()[p.target(before)],
            || format!("transfer of {} moved an endpoint", p.display(before)),
        );
        report.record(image.insert(t), || {
            format!("transfer is not injective at {}", p.display(before))
        });
    }
    let z = after.vertex_index(&step.new_vertex).expect("new vertex exists");
    let after_paths = enumerate_paths_by_degree(after, transfer_max_degree as u64, budget)?;
    for p in &after_paths {
        if p.source == z || p.target(after) == z {
            continue;
        }
        report.record(image.remove(p), || {
            format!("path {} between old vertices has no preimage", p.display(after))
        });
    }
    report.record(image.is_empty(), || {
        let stray = image.iter().next().expect("nonempty");
        format!("transferred path {} not found in split quiver", stray.display(after))
    });
    Ok(report)
}
