//! Degree- and length-indexed path counting for weighted quivers, graded
//! dimension series for monomial algebras, and the side-by-side comparison
//! of an algebra with its Ufnarovskii graph.
//!
//! Counts are exact big integers; path counts grow exponentially in general.

use crate::error::{Error, Result};
use crate::model::{MonomialPresentation, QuiverPath, WeightedQuiver};
use crate::ufn::{build_ufnarovskii, UfnGraph};
use crate::words::{biguint_json, DegreeSeries, FactorAutomaton};
use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use serde_json::json;

/// Path counts per ordered vertex pair and degree, with marginals by degree
/// and by length.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathCountTable {
    vertices: Vec<String>,
    max_degree: usize,
    /// `counts[(d * n + u) * n + v]` = number of paths u→v of degree d.
    counts: Vec<BigUint>,
    by_degree: Vec<BigUint>,
    by_length: Vec<BigUint>,
}

impl PathCountTable {
    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    pub fn count(&self, u: usize, v: usize, d: usize) -> &BigUint {
        let n = self.vertices.len();
        &self.counts[(d * n + u) * n + v]
    }

    /// Total number of paths of each degree 0..=N.
    pub fn by_degree(&self) -> &[BigUint] {
        &self.by_degree
    }

    /// Total number of paths of each length 0..=N.
    pub fn by_length(&self) -> &[BigUint] {
        &self.by_length
    }

    pub fn degree_series(&self) -> DegreeSeries {
        DegreeSeries { coeffs: self.by_degree.clone() }
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "max_degree": self.max_degree,
            "by_degree": self.by_degree.iter().map(biguint_json).collect::<Vec<_>>(),
            "by_length": self.by_length.iter().map(biguint_json).collect::<Vec<_>>(),
        })
    }
}

/// Exact per-pair path counts for all degrees ≤ `max_degree`, by dynamic
/// programming: a path of degree d ending with arrow a into v is a path of
/// degree d − deg(a) into s(a) followed by a.
pub fn path_counts(q: &WeightedQuiver, max_degree: usize) -> PathCountTable {
    let n = q.vertex_count();
    let dims = (max_degree + 1) * n * n;
    let mut counts = vec![BigUint::zero(); dims];
    // Degree 0: the vertex idempotents.
    for u in 0..n {
        counts[u * n + u] = BigUint::one();
    }
    for d in 1..=max_degree {
        for a in 0..q.arrow_count() {
            let da = q.degree(a) as usize;
            if da > d {
                continue;
            }
            let (s, t) = (q.src(a), q.tgt(a));
            for u in 0..n {
                let prev = counts[((d - da) * n + u) * n + s].clone();
                if !prev.is_zero() {
                    counts[(d * n + u) * n + t] += prev;
                }
            }
        }
    }
    let by_degree: Vec<BigUint> = (0..=max_degree)
        .map(|d| counts[d * n * n..(d + 1) * n * n].iter().sum())
        .collect();
    let by_length: Vec<BigUint> =
        (0..=max_degree).map(|r| count_paths_by_length(q, r)).collect();
    PathCountTable {
        vertices: q.vertices().to_vec(),
        max_degree,
        counts,
        by_degree,
        by_length,
    }
}

/// Number of paths of length exactly `r`. For an Ufnarovskii graph with
/// parameter ℓ this equals the number of legal words of length r + ℓ.
pub fn count_paths_by_length(q: &WeightedQuiver, r: usize) -> BigUint {
    let n = q.vertex_count();
    // cur[v] = number of paths of the current length ending at v.
    let mut cur = vec![BigUint::one(); n];
    for _ in 0..r {
        let mut next = vec![BigUint::zero(); n];
        for a in 0..q.arrow_count() {
            let add = cur[q.src(a)].clone();
            next[q.tgt(a)] += add;
        }
        cur = next;
    }
    cur.into_iter().sum()
}

/// All paths of degree ≤ `max_degree`, including the length-0 paths, in
/// depth-first order (by source vertex, then arrow index). Errors out when
/// more than `budget` paths exist.
pub fn enumerate_paths_by_degree(
    q: &WeightedQuiver,
    max_degree: u64,
    budget: usize,
) -> Result<Vec<QuiverPath>> {
    enumerate_paths(q, max_degree, usize::MAX, budget)
}

/// All paths of length ≤ `max_len`, in the same deterministic order.
pub fn enumerate_paths_by_length(
    q: &WeightedQuiver,
    max_len: usize,
    budget: usize,
) -> Result<Vec<QuiverPath>> {
    enumerate_paths(q, u64::MAX, max_len, budget)
}

/// All paths out of one vertex with degree ≤ `max_degree`, depth-first.
pub fn enumerate_paths_from(
    q: &WeightedQuiver,
    source: usize,
    max_degree: u64,
    budget: usize,
) -> Result<Vec<QuiverPath>> {
    let mut out_arrows: Vec<Vec<usize>> = vec![Vec::new(); q.vertex_count()];
    for a in 0..q.arrow_count() {
        out_arrows[q.src(a)].push(a);
    }
    let mut out = Vec::new();
    let mut stack = Vec::new();
    dfs_paths(q, &out_arrows, source, source, 0, max_degree, usize::MAX, budget, &mut stack, &mut out)?;
    Ok(out)
}

fn enumerate_paths(
    q: &WeightedQuiver,
    max_degree: u64,
    max_len: usize,
    budget: usize,
) -> Result<Vec<QuiverPath>> {
    let mut out_arrows: Vec<Vec<usize>> = vec![Vec::new(); q.vertex_count()];
    for a in 0..q.arrow_count() {
        out_arrows[q.src(a)].push(a);
    }
    let mut out = Vec::new();
    let mut stack: Vec<usize> = Vec::new();
    for source in 0..q.vertex_count() {
        dfs_paths(q, &out_arrows, source, source, 0, max_degree, max_len, budget, &mut stack, &mut out)?;
    }
    Ok(out)
}

#[allow(clippy::too_many_arguments)]
fn dfs_paths(
    q: &WeightedQuiver,
    out_arrows: &[Vec<usize>],
    source: usize,
    at: usize,
    degree: u64,
    max_degree: u64,
    max_len: usize,
    budget: usize,
    stack: &mut Vec<usize>,
    out: &mut Vec<QuiverPath>,
) -> Result<()> {
    if out.len() >= budget {
        return Err(Error::BudgetExceeded(format!("more than {budget} paths enumerated")));
    }
    out.push(QuiverPath { source, arrows: stack.clone() });
    if stack.len() == max_len {
        return Ok(());
    }
    for &a in &out_arrows[at] {
        let nd = degree + q.degree(a) as u64;
        if nd > max_degree {
            continue;
        }
        stack.push(a);
        dfs_paths(q, out_arrows, source, q.tgt(a), nd, max_degree, max_len, budget, stack, out)?;
        stack.pop();
    }
    Ok(())
}

/// Side-by-side degree series of a monomial algebra and of its Ufnarovskii
/// graph's path algebra, plus the length-indexed bijection check.
///
/// The series difference is diagnostic only: the graph map has torsion kernel
/// and cokernel, so no equality of graded dimensions is claimed at any
/// degree. Pass/fail is decided solely by the length bijection
/// #paths of length r = #legal words of length r + ℓ.
#[derive(Debug, Clone)]
pub struct SeriesComparison {
    pub ell: usize,
    pub algebra_series: DegreeSeries,
    pub graph_series: DegreeSeries,
    /// graph coefficient minus algebra coefficient, per degree.
    pub difference: Vec<BigInt>,
    /// (r, paths of length r, legal words of length r + ℓ)
    pub bijection_rows: Vec<(usize, BigUint, BigUint)>,
    pub bijection_pass: bool,
}

/// Builds the comparison for degrees 0..=N, checking the length bijection for
/// r ≤ `bijection_len_max`.
pub fn compare_series(
    p: &MonomialPresentation,
    max_degree: usize,
    bijection_len_max: usize,
    budget: usize,
) -> Result<SeriesComparison> {
    let graph = build_ufnarovskii(p, budget)?;
    Ok(compare_series_with_graph(p, &graph, max_degree, bijection_len_max))
}

pub fn compare_series_with_graph(
    p: &MonomialPresentation,
    graph: &UfnGraph,
    max_degree: usize,
    bijection_len_max: usize,
) -> SeriesComparison {
    let automaton = FactorAutomaton::new(p);
    let algebra_series = automaton.count_by_degree(max_degree);
    let table = path_counts(graph.quiver(), max_degree);
    let graph_series = table.degree_series();
    let difference: Vec<BigInt> = algebra_series
        .coeffs
        .iter()
        .zip(&graph_series.coeffs)
        .map(|(a, g)| BigInt::from(g.clone()) - BigInt::from(a.clone()))
        .collect();
    let mut bijection_rows = Vec::new();
    let mut bijection_pass = true;
    for r in 0..=bijection_len_max {
        let paths = count_paths_by_length(graph.quiver(), r);
        let words = automaton.count_by_length(r + graph.ell());
        bijection_pass &= paths == words;
        bijection_rows.push((r, paths, words));
    }
    SeriesComparison {
        ell: graph.ell(),
        algebra_series,
        graph_series,
        difference,
        bijection_rows,
        bijection_pass,
    }
}

impl SeriesComparison {
    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "ell": self.ell,
            "algebra_by_degree": self.algebra_series.to_json(),
            "graph_by_degree": self.graph_series.to_json(),
            "difference": self.difference.iter().map(|d| {
                serde_json::Value::Number(d.to_string().parse().expect("decimal integer"))
            }).collect::<Vec<_>>(),
            "length_bijection": self.bijection_rows.iter().map(|(r, paths, words)| json!({
                "length": r,
                "paths": biguint_json(paths),
                "legal_words": biguint_json(words),
            })).collect::<Vec<_>>(),
            "length_bijection_pass": self.bijection_pass,
        })
    }

    /// Aligned plain-text table.
    pub fn to_table(&self) -> String {
        let header: Vec<String> = (0..self.algebra_series.coeffs.len()).map(|d| d.to_string()).collect();
        let alg: Vec<String> = self.algebra_series.coeffs.iter().map(|c| c.to_string()).collect();
        let gph: Vec<String> = self.graph_series.coeffs.iter().map(|c| c.to_string()).collect();
        let dif: Vec<String> = self.difference.iter().map(|c| c.to_string()).collect();
        let mut out = render_table(&[
            ("degree", &header),
            ("algebra", &alg),
            ("graph", &gph),
            ("diff", &dif),
        ]);
        out.push('\n');
        let lens: Vec<String> = self.bijection_rows.iter().map(|(r, _, _)| r.to_string()).collect();
        let paths: Vec<String> = self.bijection_rows.iter().map(|(_, p, _)| p.to_string()).collect();
        let words: Vec<String> = self.bijection_rows.iter().map(|(_, _, w)| w.to_string()).collect();
        out.push_str(&render_table(&[
            ("length", &lens),
            ("paths", &paths),
            (&format!("words(+{})", self.ell), &words),
        ]));
        out.push_str(&format!(
            "length bijection: {}\n",
            if self.bijection_pass { "pass" } else { "FAIL" }
        ));
        out
    }
}

/// Renders labeled rows with right-aligned columns.
pub fn render_table(rows: &[(&str, &Vec<String>)]) -> String {
    let label_width = rows.iter().map(|(l, _)| l.len()).max().unwrap_or(0);
    let ncols = rows.iter().map(|(_, r)| r.len()).max().unwrap_or(0);
    let mut widths = vec![0usize; ncols];
    for (_, row) in rows {
        for (i, cell) in row.iter().enumerate() {
            widths[i] = widths[i].max(cell.len());
        }
    }
    let mut out = String::new();
    for (label, row) in rows {
        out.push_str(&format!("{label:<label_width$}"));
        for (i, cell) in row.iter().enumerate() {
            out.push_str(&format!("  {cell:>w$}", w = widths[i]));
        }
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{parse_input, AlgebraInput, Arrow};
    use crate::words::DEFAULT_ENUM_BUDGET;

    fn quiver_4_8() -> WeightedQuiver {
        WeightedQuiver::new(
            vec!["xx".into(), "xy".into(), "yy".into()],
            vec![
                Arrow { name: "xxy".into(), source: "xx".into(), target: "xy".into(), degree: 1 },
                Arrow { name: "xyy".into(), source: "xy".into(), target: "yy".into(), degree: 1 },
                Arrow { name: "yyy".into(), source: "yy".into(), target: "yy".into(), degree: 2 },
            ],
        )
        .unwrap()
    }

    #[test]
    fn degree_marginals_of_example_4_8_graph() {
        let table = path_counts(&quiver_4_8(), 4);
        let expect: Vec<BigUint> = [3u32, 2, 2, 1, 2].iter().map(|&c| BigUint::from(c)).collect();
        assert_eq!(table.by_degree(), expect.as_slice());
    }

    #[test]
    fn degree_zero_is_the_identity_table() {
        let q = quiver_4_8();
        let table = path_counts(&q, 2);
        for u in 0..3 {
            for v in 0..3 {
                let expect = if u == v { BigUint::one() } else { BigUint::zero() };
                assert_eq!(*table.count(u, v, 0), expect);
            }
        }
    }

    #[test]
    fn single_arrow_quiver_counts() {
        let q = WeightedQuiver::new(
            vec!["u".into(), "v".into()],
            vec![Arrow { name: "a".into(), source: "u".into(), target: "v".into(), degree: 1 }],
        )
        .unwrap();
        let table = path_counts(&q, 3);
        let expect: Vec<BigUint> = [2u32, 1, 0, 0].iter().map(|&c| BigUint::from(c)).collect();
        assert_eq!(table.by_degree(), expect.as_slice());
    }

    #[test]
    fn loop_of_degree_two_counts_even_degrees() {
        let q = WeightedQuiver::new(
            vec!["v".into()],
            vec![Arrow { name: "b".into(), source: "v".into(), target: "v".into(), degree: 2 }],
        )
        .unwrap();
        let table = path_counts(&q, 6);
        let expect: Vec<BigUint> = [1u32, 0, 1, 0, 1, 0, 1].iter().map(|&c| BigUint::from(c)).collect();
        assert_eq!(table.by_degree(), expect.as_slice());
    }

    #[test]
    fn lengths_match_legal_word_layers() {
        assert_eq!(count_paths_by_length(&quiver_4_8(), 0), BigUint::from(3u32));
        // L_4 = {xxyy, xyyy, yyyy}
        assert_eq!(count_paths_by_length(&quiver_4_8(), 2), BigUint::from(3u32));
    }

    #[test]
    fn enumeration_matches_count_table() {
        let q = quiver_4_8();
        let table = path_counts(&q, 10);
        let paths = enumerate_paths_by_degree(&q, 10, DEFAULT_ENUM_BUDGET).unwrap();
        for d in 0..=10u64 {
            let listed = paths.iter().filter(|p| p.degree(&q) == d).count();
            assert_eq!(BigUint::from(listed), table.by_degree()[d as usize], "degree {d}");
        }
    }

    #[test]
    fn comparison_of_example_4_8() {
        let p = match parse_input(
            br#"{"kind":"monomial","generators":[{"name":"x","degree":1},{"name":"y","degree":2}],"forbidden":["yx","xxx"]}"#,
        )
        .unwrap()
        {
            AlgebraInput::Presentation(p) => p,
            _ => unreachable!(),
        };
        let cmp = compare_series(&p, 6, 8, DEFAULT_ENUM_BUDGET).unwrap();
        let alg: Vec<BigUint> = [1u32, 1, 2, 1, 2, 1, 2].iter().map(|&c| BigUint::from(c)).collect();
        let gph: Vec<BigUint> = [3u32, 2, 2, 1, 2, 1, 2].iter().map(|&c| BigUint::from(c)).collect();
        assert_eq!(cmp.algebra_series.coeffs, alg);
        assert_eq!(cmp.graph_series.coeffs, gph);
        assert!(cmp.bijection_pass);
        let diff: Vec<BigInt> = [2, 1, 0, 0, 0, 0, 0].iter().map(|&c| BigInt::from(c)).collect();
        assert_eq!(cmp.difference, diff);
    }

    #[test]
    fn comparison_of_free_algebra_is_exact() {
        let p = match parse_input(
            br#"{"kind":"monomial","generators":[{"name":"x","degree":1},{"name":"y","degree":1}],"forbidden":[]}"#,
        )
        .unwrap()
        {
            AlgebraInput::Presentation(p) => p,
            _ => unreachable!(),
        };
        let cmp = compare_series(&p, 8, 8, DEFAULT_ENUM_BUDGET).unwrap();
        assert_eq!(cmp.algebra_series, cmp.graph_series);
        assert!(cmp.difference.iter().all(|d| d.is_zero()));
        assert!(cmp.bijection_pass);
    }
}
