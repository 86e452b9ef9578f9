//! Named verification suites over a single input, used by the command-line
//! driver and by the pipeline after each transformation step.

use crate::error::{Error, Result};
use crate::hilbert::{count_paths_by_length, enumerate_paths_by_degree, path_counts};
use crate::model::{AlgebraInput, MonomialPresentation, QuiverMonomialAlgebra, WeightedQuiver, Word};
use crate::reps::{check_adjunction, SplitData};
use crate::split::{
    check_split_invariance, normalize_with_order, weight_discrepancy, SplitOrder, SplitTrace,
};
use crate::ufn::{build_ufnarovskii, check_f_is_graded_hom, check_graded_generation};
use crate::words::FactorAutomaton;
use num_bigint::BigUint;
use serde_json::json;
use std::collections::HashMap;
use std::sync::Arc;

/// Tuning knobs shared by the suites; defaults match the CLI defaults.
#[derive(Debug, Clone, Copy)]
pub struct SuiteOptions {
    pub max_degree: usize,
    pub trials: usize,
    pub seed: u64,
    pub budget: usize,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions {
            max_degree: 8,
            trials: 100,
            seed: 0,
            budget: crate::words::DEFAULT_ENUM_BUDGET,
        }
    }
}

#[derive(Debug, Clone)]
pub struct SuiteCheck {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

/// Result of one verification suite: one line per check.
#[derive(Debug, Clone)]
pub struct SuiteReport {
    pub suite: String,
    pub checks: Vec<SuiteCheck>,
}

impl SuiteReport {
    fn new(suite: &str) -> Self {
        SuiteReport { suite: suite.into(), checks: Vec::new() }
    }

    fn push(&mut self, name: &str, pass: bool, detail: impl Into<String>) {
        self.checks.push(SuiteCheck { name: name.into(), pass, detail: detail.into() });
    }

    fn push_report(&mut self, name: &str, r: &crate::report::CheckReport) {
        let detail = if r.passed() {
            format!("{} checks", r.checks)
        } else {
            format!("{} of {} checks failed; first: {}", r.failures.len(), r.checks, r.failures[0])
        };
        self.push(name, r.passed(), detail);
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn render_text(&self) -> String {
        let mut out = format!("suite {}\n", self.suite);
        for c in &self.checks {
            out.push_str(&format!(
                "  {} {} — {}\n",
                if c.pass { "ok  " } else { "FAIL" },
                c.name,
                c.detail
            ));
        }
        out.push_str(&format!(
            "suite {}: {}\n",
            self.suite,
            if self.passed() { "pass" } else { "FAIL" }
        ));
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "suite": self.suite,
            "pass": self.passed(),
            "checks": self.checks.iter().map(|c| json!({
                "name": c.name,
                "pass": c.pass,
                "detail": c.detail,
            })).collect::<Vec<_>>(),
        })
    }
}

/// Ufnarovskii graph suite: layer sizes, arrow-degree law, the path/word
/// length bijection, label-target reconstruction round trip, the graded
/// homomorphism identities, and graded generation.
pub fn run_ufgraph_suite(p: &MonomialPresentation, opts: SuiteOptions) -> Result<SuiteReport> {
    let mut report = SuiteReport::new("ufgraph");
    let automaton = FactorAutomaton::new(p);
    let g = build_ufnarovskii(p, opts.budget)?;
    let q = g.quiver();
    let l = g.ell();

    let v_expected = automaton.count_by_length(l);
    let a_expected = automaton.count_by_length(l + 1);
    report.push(
        "layer sizes",
        BigUint::from(q.vertex_count()) == v_expected
            && BigUint::from(q.arrow_count()) == a_expected,
        format!("ℓ={l}, |Q0|={}, |Q1|={}", q.vertex_count(), q.arrow_count()),
    );

    let degree_law = (0..q.arrow_count())
        .all(|a| q.degree(a) == p.letter_degree(g.label(a)));
    report.push("arrow degrees follow labels", degree_law, format!("{} arrows", q.arrow_count()));

    let mut bijection = true;
    let mut detail = String::new();
    for r in 0..=8usize {
        let paths = count_paths_by_length(q, r);
        let words = automaton.count_by_length(r + l);
        if paths != words {
            bijection = false;
            detail = format!("length {r}: {paths} paths vs {words} words");
            break;
        }
    }
    if bijection {
        detail = "paths of length r = legal words of length r+ℓ, r ≤ 8".into();
    }
    report.push("length bijection", bijection, detail);

    let mut round_trip = crate::report::CheckReport::default();
    let paths = crate::hilbert::enumerate_paths_by_length(q, 6, opts.budget)?;
    let mut seen: HashMap<(Word, usize), crate::model::QuiverPath> = HashMap::new();
    for path in paths {
        let label = g.path_label(&path);
        let target = path.target(q);
        round_trip.record(
            g.path_from_label_target(&label, target).as_ref() == Some(&path),
            || format!("reconstruction failed for {}", path.display(q)),
        );
        round_trip.record(seen.insert((label.clone(), target), path.clone()).is_none(), || {
            format!("two paths labeled {} end at {}", p.word_string(&label), q.vertices()[target])
        });
    }
    report.push_report("label-target reconstruction (length ≤ 6)", &round_trip);

    let hom = check_f_is_graded_hom(&g, opts.trials, 2 * l + 2, opts.seed);
    report.push_report("graded homomorphism", &hom);

    let generation = check_graded_generation(&g, opts.max_degree as u64, opts.budget)?;
    report.push_report("graded generation", &generation);

    Ok(report)
}

/// Split suite: normalization counts under two split orders, per-step path
/// count invariance between old vertices, and the transfer bijection.
pub fn run_split_suite(q: &WeightedQuiver, opts: SuiteOptions) -> Result<SuiteReport> {
    let mut report = SuiteReport::new("split");
    let d = weight_discrepancy(q);
    let n = opts.max_degree.min(10);

    for (name, order) in [("first-declared", SplitOrder::FirstDeclared), ("last-declared", SplitOrder::LastDeclared)] {
        let (out, trace) = normalize_with_order(q, order);
        let ok = trace.len() as u64 == d
            && out.vertex_count() as u64 == q.vertex_count() as u64 + d
            && out.arrow_count() as u64 == q.arrow_count() as u64 + d
            && out.all_degrees_one();
        report.push(
            &format!("normalization counts ({name} order)"),
            ok,
            format!(
                "D={d}, |Q̄0|={}, |Q̄1|={}, trace length {}",
                out.vertex_count(),
                out.arrow_count(),
                trace.len()
            ),
        );
    }

    let mut current = q.clone();
    let mut step_no = 0;
    loop {
        let Some(b) = current.arrows().iter().find(|a| a.degree > 1).map(|a| a.name.clone()) else {
            break;
        };
        let (next, step) = crate::split::split_arrow(&current, &b)?;
        step_no += 1;
        let transfer_n = n.min(6);
        let inv = check_split_invariance(&current, &next, &step, n, transfer_n, opts.budget)?;
        report.push_report(&format!("step {step_no}: split {b} (counts ≤ {n}, transfer ≤ {transfer_n})"), &inv);
        current = next;
    }
    if step_no == 0 {
        report.push("already degree one", true, "no arrow of degree > 1");
    }
    Ok(report)
}

/// Adjunction suite: the functor identities of each arrow split, on seeded
/// random representations.
pub fn run_adjunction_suite(q: &WeightedQuiver, opts: SuiteOptions) -> Result<SuiteReport> {
    let mut report = SuiteReport::new("adjunction");
    let heavy: Vec<String> =
        q.arrows().iter().filter(|a| a.degree > 1).map(|a| a.name.clone()).collect();
    if heavy.is_empty() {
        report.push("already degree one", true, "no arrow of degree > 1 to split");
        return Ok(report);
    }
    let shared = Arc::new(q.clone());
    let window_hi = opts.max_degree.min(8) as i64;
    let samples = opts.trials.clamp(1, 100);
    for name in heavy {
        let data = SplitData::new(shared.clone(), &name)?;
        let r = check_adjunction(&data, samples, window_hi, 4, opts.seed)?;
        report.push_report(&format!("split {name}: adjunction identities ({samples} samples)"), &r);
    }
    Ok(report)
}

/// Hilbert suite: dynamic-programming counts against explicit enumeration,
/// the degree-zero law, degree/length agreement in the degree-one case, and
/// for presentations the algebra/graph comparison with its length bijection.
pub fn run_hilbert_suite(input: &AlgebraInput, opts: SuiteOptions) -> Result<SuiteReport> {
    let mut report = SuiteReport::new("hilbert");
    match input {
        AlgebraInput::Quiver(q) | AlgebraInput::QuiverWithRelations(QuiverMonomialAlgebra { quiver: q, .. }) => {
            quiver_count_checks(&mut report, q, opts)?;
        }
        AlgebraInput::Presentation(p) => {
            let automaton = FactorAutomaton::new(p);
            let n_small = opts.max_degree.min(6);
            let series = automaton.count_by_degree(n_small);
            let mut enumerated = vec![BigUint::default(); n_small + 1];
            // Degree ≥ length, so lengths up to n_small cover all degrees.
            for len in 0..=n_small {
                for w in automaton.enumerate_by_length(len, opts.budget)? {
                    let d = p.word_degree(&w) as usize;
                    if d <= n_small {
                        enumerated[d] += BigUint::from(1u32);
                    }
                }
            }
            report.push(
                "degree counts vs enumeration",
                series.coeffs == enumerated,
                format!("degrees ≤ {n_small}"),
            );
            let cmp = crate::hilbert::compare_series(p, opts.max_degree, 8, opts.budget)?;
            report.push(
                "algebra vs graph series (diagnostic)",
                true,
                format!(
                    "A: {}, kQ(A): {} (difference makes no claim)",
                    cmp.algebra_series, cmp.graph_series
                ),
            );
            report.push(
                "length bijection",
                cmp.bijection_pass,
                "paths of length r = legal words of length r+ℓ, r ≤ 8",
            );
            let g = build_ufnarovskii(p, opts.budget)?;
            quiver_count_checks(&mut report, g.quiver(), opts)?;
        }
    }
    Ok(report)
}

fn quiver_count_checks(report: &mut SuiteReport, q: &WeightedQuiver, opts: SuiteOptions) -> Result<()> {
    let n_small = opts.max_degree.min(6);
    let table = path_counts(q, n_small);
    let paths = enumerate_paths_by_degree(q, n_small as u64, opts.budget)?;
    let n = q.vertex_count();
    let mut tally = vec![0u64; (n_small + 1) * n * n];
    for p in &paths {
        let d = p.degree(q) as usize;
        tally[(d * n + p.source) * n + p.target(q)] += 1;
    }
    let mut agree = true;
    'outer: for d in 0..=n_small {
        for u in 0..n {
            for v in 0..n {
                if BigUint::from(tally[(d * n + u) * n + v]) != *table.count(u, v, d) {
                    agree = false;
                    break 'outer;
                }
            }
        }
    }
    report.push(
        "path counts vs enumeration",
        agree,
        format!("{} paths of degree ≤ {n_small}", paths.len()),
    );
    let diag_ok = (0..n).all(|u| {
        (0..n).all(|v| {
            let expect = if u == v { 1u32 } else { 0 };
            *table.count(u, v, 0) == BigUint::from(expect)
        })
    });
    report.push("degree 0 is the idempotent table", diag_ok, format!("{n} vertices"));
    if q.all_degrees_one() {
        report.push(
            "degree marginals equal length marginals",
            table.by_degree() == table.by_length(),
            "all arrows in degree 1",
        );
    }
    Ok(())
}

/// Check used after a connectification step: for every degree 1 ≤ d ≤ N the
/// legal words of the arrow presentation count exactly the paths of degree d
/// avoiding the relation paths as factors.
pub fn run_connectify_check(
    alg: &QuiverMonomialAlgebra,
    presented: &MonomialPresentation,
    opts: SuiteOptions,
) -> Result<SuiteReport> {
    let mut report = SuiteReport::new("connectify");
    let n = opts.max_degree.min(8);
    let automaton = FactorAutomaton::new(presented);
    let series = automaton.count_by_degree(n);
    let q = &alg.quiver;
    let paths = enumerate_paths_by_degree(q, n as u64, opts.budget)?;
    let relation_words: Vec<Vec<usize>> =
        alg.relations.iter().map(|r| r.arrows.clone()).collect();
    let mut counts = vec![BigUint::default(); n + 1];
    for p in &paths {
        if p.is_empty() {
            continue;
        }
        let has_relation = relation_words
            .iter()
            .any(|r| p.arrows.windows(r.len()).any(|w| w == r.as_slice()));
        if !has_relation {
            counts[p.degree(q) as usize] += BigUint::from(1u32);
        }
    }
    let agree = (1..=n).all(|d| series.coeffs[d] == counts[d]);
    report.push(
        "graded dimensions preserved in degrees ≥ 1",
        agree,
        format!(
            "legal-word counts {} vs relation-free path counts, degrees 1..={n}",
            crate::words::DegreeSeries { coeffs: series.coeffs[1..].to_vec() }
        ),
    );
    report.push(
        "alphabet size equals arrow count",
        presented.alphabet_size() == q.arrow_count(),
        format!("{} generators", presented.alphabet_size()),
    );
    let quadratic = presented.forbidden().iter().filter(|w| w.len() == 2).count();
    let composable = (0..q.arrow_count())
        .flat_map(|a| (0..q.arrow_count()).map(move |b| (a, b)))
        .filter(|&(a, b)| q.tgt(a) == q.src(b))
        .count();
    let noncomposable = q.arrow_count() * q.arrow_count() - composable;
    // Length-2 relation paths are composable by definition, so they add to
    // the quadratic words without overlapping the non-composable pairs.
    let expected = noncomposable
        + alg
            .relations
            .iter()
            .filter(|r| r.len() == 2)
            .map(|r| Word(r.arrows.clone()))
            .collect::<std::collections::HashSet<_>>()
            .len();
    let pass = quadratic == expected;
    report.push(
        "quadratic words count non-composable pairs",
        pass,
        format!("{quadratic} quadratic forbidden words, {composable} composable pairs"),
    );
    Ok(report)
}

/// Dispatches a named suite on a parsed input, building intermediate
/// artifacts as required.
pub fn run_named_suite(name: &str, input: &AlgebraInput, opts: SuiteOptions) -> Result<SuiteReport> {
    match name {
        "ufgraph" => match input {
            AlgebraInput::Presentation(p) => run_ufgraph_suite(p, opts),
            _ => Err(Error::validation("suite", "ufgraph suite requires a monomial presentation")),
        },
        "split" => match input {
            AlgebraInput::Quiver(q) => run_split_suite(q, opts),
            AlgebraInput::Presentation(p) => {
                let g = build_ufnarovskii(p, opts.budget)?;
                run_split_suite(g.quiver(), opts)
            }
            AlgebraInput::QuiverWithRelations(alg) => run_split_suite(&alg.quiver, opts),
        },
        "adjunction" => match input {
            AlgebraInput::Quiver(q) => run_adjunction_suite(q, opts),
            AlgebraInput::Presentation(p) => {
                let g = build_ufnarovskii(p, opts.budget)?;
                run_adjunction_suite(g.quiver(), opts)
            }
            AlgebraInput::QuiverWithRelations(alg) => run_adjunction_suite(&alg.quiver, opts),
        },
        "hilbert" => run_hilbert_suite(input, opts),
        other => Err(Error::validation("suite", format!("unknown suite {other:?}"))),
    }
}

/// Convenience used by the pipeline: a split trace plus its suite.
pub fn normalize_and_check(q: &WeightedQuiver, opts: SuiteOptions) -> Result<(WeightedQuiver, SplitTrace, SuiteReport)> {
    let (out, trace) = crate::split::normalize_to_degree_one(q);
    let report = run_split_suite(q, opts)?;
    Ok((out, trace, report))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::parse_input;

    fn opts() -> SuiteOptions {
        SuiteOptions { max_degree: 6, trials: 20, seed: 0, ..Default::default() }
    }

    #[test]
    fn suites_pass_on_example_4_8() {
        let input = parse_input(
            br#"{"kind":"monomial","generators":[{"name":"x","degree":1},{"name":"y","degree":2}],"forbidden":["yx","xxx"]}"#,
        )
        .unwrap();
        for suite in ["ufgraph", "split", "adjunction", "hilbert"] {
            let report = run_named_suite(suite, &input, opts()).unwrap();
            assert!(report.passed(), "{suite} failed:\n{}", report.render_text());
        }
    }

    #[test]
    fn connectify_check_passes_on_split_graph() {
        let input = parse_input(
            br#"{"kind":"quiver","vertices":["xx","xy","yy","z1"],"arrows":[
                {"name":"xxy","source":"xx","target":"xy","degree":1},
                {"name":"xyy","source":"xy","target":"yy","degree":1},
                {"name":"yyy'","source":"yy","target":"z1","degree":1},
                {"name":"yyy''","source":"z1","target":"yy","degree":1}]}"#,
        )
        .unwrap();
        let crate::model::AlgebraInput::Quiver(q) = input else { panic!() };
        let alg: QuiverMonomialAlgebra = q.into();
        let presented = crate::model::connectify(&alg).unwrap();
        let report = run_connectify_check(&alg, &presented, opts()).unwrap();
        assert!(report.passed(), "{}", report.render_text());
    }

    #[test]
    fn unknown_suite_is_rejected() {
        let input = parse_input(
            br#"{"kind":"quiver","vertices":["v"],"arrows":[]}"#,
        )
        .unwrap();
        assert!(run_named_suite("nope", &input, opts()).is_err());
    }
}
