//! The weighted Ufnarovskii graph of a connected monomial algebra, its arrow
//! labeling, the graded homomorphism onto the graph's path algebra, and the
//! combinatorial identities that make the construction work.
//!
//! Vertices are the legal words of length ℓ and arrows the legal words of
//! length ℓ+1, where ℓ+1 is the maximum length of a forbidden word. An arrow
//! w runs from the length-ℓ prefix of w to its length-ℓ suffix, is labeled by
//! the first letter of w, and carries that letter's degree.

use crate::error::Result;
use crate::model::{Arrow, MonomialPresentation, QuiverPath, WeightedQuiver, Word};
use crate::report::CheckReport;
use crate::words::FactorAutomaton;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::{BTreeMap, HashMap};

/// A composable arrow sequence in an Ufnarovskii graph. The label word and
/// degree are derived through [`UfnGraph`] accessors.
pub type LabeledPath = QuiverPath;

/// The maximum forbidden-word length minus one; 0 when no word is forbidden,
/// which makes the graph of a free algebra a single vertex with one loop per
/// letter.
pub fn ell(p: &MonomialPresentation) -> usize {
    p.forbidden().iter().map(|w| w.len()).max().unwrap_or(1) - 1
}

/// The weighted Ufnarovskii graph of a presentation.
#[derive(Debug, Clone)]
pub struct UfnGraph {
    presentation: MonomialPresentation,
    ell: usize,
    quiver: WeightedQuiver,
    vertex_words: Vec<Word>,
    arrow_words: Vec<Word>,
    /// Letter index labeling each arrow (the first letter of its word).
    labels: Vec<usize>,
    arrow_by_word: HashMap<Word, usize>,
}

/// Builds the graph: vertices are legal words of length ℓ, arrows legal words
/// of length ℓ+1 with prefix source, suffix target, first-letter label, and
/// the label's degree.
pub fn build_ufnarovskii(p: &MonomialPresentation, budget: usize) -> Result<UfnGraph> {
    let automaton = FactorAutomaton::new(p);
    let l = ell(p);
    let vertex_words = automaton.enumerate_by_length(l, budget)?;
    let arrow_words = automaton.enumerate_by_length(l + 1, budget)?;

    let vertices: Vec<String> = vertex_words.iter().map(|w| p.word_string(w)).collect();
    let vertex_by_word: HashMap<Word, usize> =
        vertex_words.iter().enumerate().map(|(i, w)| (w.clone(), i)).collect();
    let arrow_by_word: HashMap<Word, usize> =
        arrow_words.iter().enumerate().map(|(i, w)| (w.clone(), i)).collect();

    let mut arrows = Vec::with_capacity(arrow_words.len());
    let mut labels = Vec::with_capacity(arrow_words.len());
    for w in &arrow_words {
        let prefix = Word(w.0[..l].to_vec());
        let suffix = Word(w.0[w.len() - l..].to_vec());
        // Factors of a legal word are legal, so both ends are vertices.
        debug_assert!(vertex_by_word.contains_key(&prefix));
        debug_assert!(vertex_by_word.contains_key(&suffix));
        let label = w.0[0];
        labels.push(label);
        arrows.push(Arrow {
            name: p.word_string(w),
            source: p.word_string(&prefix),
            target: p.word_string(&suffix),
            degree: p.letter_degree(label),
        });
    }
    let quiver = WeightedQuiver::new(vertices, arrows)?;
    Ok(UfnGraph {
        presentation: p.clone(),
        ell: l,
        quiver,
        vertex_words,
        arrow_words,
        labels,
        arrow_by_word,
    })
}

impl UfnGraph {
    pub fn ell(&self) -> usize {
        self.ell
    }

    pub fn presentation(&self) -> &MonomialPresentation {
        &self.presentation
    }

    pub fn quiver(&self) -> &WeightedQuiver {
        &self.quiver
    }

    pub fn vertex_word(&self, v: usize) -> &Word {
        &self.vertex_words[v]
    }

    pub fn arrow_word(&self, a: usize) -> &Word {
        &self.arrow_words[a]
    }

    /// Letter index labeling arrow `a`.
    pub fn label(&self, a: usize) -> usize {
        self.labels[a]
    }

    /// The label word of a path: the concatenation of its arrow labels.
    pub fn path_label(&self, p: &LabeledPath) -> Word {
        Word(p.arrows.iter().map(|&a| self.labels[a]).collect())
    }

    pub fn path_degree(&self, p: &LabeledPath) -> u64 {
        p.degree(&self.quiver)
    }

    /// The unique path with the given label word ending at vertex `v`, if it
    /// exists. The path is reconstructed right to left: writing the target
    /// word after the label, every window of ℓ+1 consecutive letters must be
    /// an arrow; the windows then chain into a path by construction.
    pub fn path_from_label_target(&self, label: &Word, v: usize) -> Option<LabeledPath> {
        let r = label.len();
        if r == 0 {
            return Some(QuiverPath::trivial(v));
        }
        let mut full = label.0.clone();
        full.extend_from_slice(&self.vertex_words[v].0);
        let mut arrows = Vec::with_capacity(r);
        for i in 0..r {
            let w = Word(full[i..i + self.ell + 1].to_vec());
            arrows.push(*self.arrow_by_word.get(&w)?);
        }
        let source = self.quiver.src(arrows[0]);
        Some(QuiverPath { source, arrows })
    }

    /// The graded-algebra map on a word: the sum of all paths labeled by it,
    /// each with coefficient one. The empty word maps to the sum of all
    /// vertex idempotents. Illegal words map to zero because no legal word
    /// extends them.
    pub fn apply_f(&self, w: &Word) -> PathSum {
        let mut terms = BTreeMap::new();
        for v in 0..self.quiver.vertex_count() {
            if let Some(p) = self.path_from_label_target(w, v) {
                terms.insert(p, BigRational::one());
            }
        }
        PathSum { terms }
    }

    /// Sum of all vertex idempotents — the image of the identity.
    pub fn identity_sum(&self) -> PathSum {
        PathSum {
            terms: (0..self.quiver.vertex_count())
                .map(|v| (QuiverPath::trivial(v), BigRational::one()))
                .collect(),
        }
    }

    /// GraphViz rendering: vertex label is the word; arrow label is
    /// `word/letter:degree`.
    pub fn to_dot(&self) -> String {
        let p = &self.presentation;
        let mut out = String::from("digraph ufnarovskii {\n  rankdir=LR;\n");
        for (i, w) in self.vertex_words.iter().enumerate() {
            out.push_str(&format!(
                "  n{} [label={}];\n",
                i,
                crate::model::dot_quote(&p.word_string(w))
            ));
        }
        for (i, w) in self.arrow_words.iter().enumerate() {
            let label = format!(
                "{}/{}:{}",
                p.word_string(w),
                p.generators()[self.labels[i]].name,
                self.quiver.degree(i)
            );
            out.push_str(&format!(
                "  n{} -> n{} [label={}];\n",
                self.quiver.src(i),
                self.quiver.tgt(i),
                crate::model::dot_quote(&label)
            ));
        }
        out.push_str("}\n");
        out
    }
}

/// A formal rational combination of paths, homogeneous in all intended uses.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathSum {
    terms: BTreeMap<QuiverPath, BigRational>,
}

impl PathSum {
    pub fn zero() -> Self {
        PathSum { terms: BTreeMap::new() }
    }

    pub fn from_path(p: QuiverPath) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(p, BigRational::one());
        PathSum { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&QuiverPath, &BigRational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &PathSum) -> PathSum {
        let mut terms = self.terms.clone();
        for (p, c) in &other.terms {
            let entry = terms.entry(p.clone()).or_insert_with(BigRational::zero);
            *entry += c;
            if entry.is_zero() {
                terms.remove(p);
            }
        }
        PathSum { terms }
    }

    /// Bilinear extension of path concatenation: `p·q` is defined when the
    /// target of `p` is the source of `q`, and is zero otherwise.
    pub fn mul(&self, other: &PathSum, q: &WeightedQuiver) -> PathSum {
        let mut terms: BTreeMap<QuiverPath, BigRational> = BTreeMap::new();
        for (p1, c1) in &self.terms {
            let t = p1.target(q);
            for (p2, c2) in &other.terms {
                if p2.source != t {
                    continue;
                }
                let mut arrows = p1.arrows.clone();
                arrows.extend_from_slice(&p2.arrows);
                let prod = QuiverPath { source: p1.source, arrows };
                let entry = terms.entry(prod).or_insert_with(BigRational::zero);
                *entry += c1 * c2;
            }
        }
        terms.retain(|_, c| !c.is_zero());
        PathSum { terms }
    }

    /// True when every path in the sum has the same given degree.
    pub fn homogeneous_of_degree(&self, q: &WeightedQuiver, degree: u64) -> bool {
        self.terms.keys().all(|p| p.degree(q) == degree)
    }

    pub fn display(&self, q: &WeightedQuiver) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        self.terms
            .iter()
            .map(|(p, c)| {
                if c.is_one() {
                    p.display(q)
                } else {
                    format!("{}·{}", c, p.display(q))
                }
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

/// Checks that the word-to-path-sum map is a graded algebra morphism:
/// forbidden words map to zero, the map is multiplicative on `trials` seeded
/// random word pairs, images are homogeneous of the word's degree, and the
/// identity image acts as a left identity.
pub fn check_f_is_graded_hom(
    g: &UfnGraph,
    trials: usize,
    max_len: usize,
    seed: u64,
) -> CheckReport {
    let mut report = CheckReport::default();
    let p = g.presentation();
    let q = g.quiver();

    for w in p.forbidden() {
        let image = g.apply_f(w);
        report.record(image.is_zero(), || {
            format!("f({}) = {} ≠ 0 for forbidden word", p.word_string(w), image.display(q))
        });
    }

    let alphabet = p.alphabet_size();
    for trial in 0..trials {
        // Independent stream per trial, so results do not depend on order.
        let mut rng = trial_rng(seed, trial as u64);
        let u = random_word(&mut rng, alphabet, max_len);
        let v = random_word(&mut rng, alphabet, max_len);
        let uv = u.concat(&v);
        let fu = g.apply_f(&u);
        let fv = g.apply_f(&v);
        let fuv = g.apply_f(&uv);
        report.record(fu.mul(&fv, q) == fuv, || {
            format!(
                "f({})·f({}) ≠ f({})",
                p.word_string(&u),
                p.word_string(&v),
                p.word_string(&uv)
            )
        });
        for w in [&u, &v, &uv] {
            let fw = g.apply_f(w);
            report.record(
                fw.is_zero() || fw.homogeneous_of_degree(q, p.word_degree(w)),
                || format!("f({}) is not homogeneous of degree {}", p.word_string(w), p.word_degree(w)),
            );
        }
        report.record(g.identity_sum().mul(&fu, q) == fu, || {
            format!("f(ε)·f({}) ≠ f({})", p.word_string(&u), p.word_string(&u))
        });
    }
    report
}

/// Checks graded generation: for every path of degree ≤ `max_degree`,
/// multiplying the image of its label by the target idempotent recovers
/// exactly that path. Images are cached per label word, since many paths
/// share one.
pub fn check_graded_generation(g: &UfnGraph, max_degree: u64, budget: usize) -> Result<CheckReport> {
    let mut report = CheckReport::default();
    let q = g.quiver();
    let paths = crate::hilbert::enumerate_paths_by_degree(q, max_degree, budget)?;
    let mut images: HashMap<Word, PathSum> = HashMap::new();
    for path in &paths {
        let label = g.path_label(path);
        let image = images.entry(label.clone()).or_insert_with(|| g.apply_f(&label));
        let target = path.target(q);
        let recovered = image.mul(&PathSum::from_path(QuiverPath::trivial(target)), q);
        report.record(recovered == PathSum::from_path(path.clone()), || {
            format!(
                "f({})·e_{} = {} ≠ {}",
                g.presentation().word_string(&label),
                q.vertices()[target],
                recovered.display(q),
                path.display(q)
            )
        });
    }
    Ok(report)
}

fn random_word(rng: &mut ChaCha8Rng, alphabet: usize, max_len: usize) -> Word {
    let len = rng.random_range(0..=max_len);
    Word((0..len).map(|_| rng.random_range(0..alphabet)).collect())
}

pub(crate) fn trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    // Distinct fixed stream per trial.
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial.wrapping_add(1));
    rng
}

// ---------------------------------------------------------------------------
// Growth classification
// ---------------------------------------------------------------------------

/// Growth of the path count sequence of a quiver.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Growth {
    /// Cumulative path counts grow like a polynomial of this degree: the
    /// maximum number of cycle-bearing strongly connected components on a
    /// directed chain. Degree 0 means finitely many paths.
    Polynomial(usize),
    Exponential,
}

impl std::fmt::Display for Growth {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Growth::Polynomial(d) => write!(f, "polynomial({d})"),
            Growth::Exponential => write!(f, "exponential"),
        }
    }
}

/// Exponential iff some strongly connected component carries two distinct
/// cycles (it has more internal arrows than vertices); otherwise polynomial
/// of degree the maximum number of cycle-bearing components on a directed
/// chain in the condensation.
pub fn classify_growth(q: &WeightedQuiver) -> Growth {
    use petgraph::graph::{DiGraph, NodeIndex};

    let mut graph: DiGraph<(), ()> = DiGraph::new();
    let nodes: Vec<NodeIndex> = (0..q.vertex_count()).map(|_| graph.add_node(())).collect();
    for a in 0..q.arrow_count() {
        graph.add_edge(nodes[q.src(a)], nodes[q.tgt(a)], ());
    }
    // Reverse topological order: successors of a component appear earlier.
    let sccs = petgraph::algo::tarjan_scc(&graph);
    let mut scc_of = vec![0usize; q.vertex_count()];
    for (i, scc) in sccs.iter().enumerate() {
        for n in scc {
            scc_of[n.index()] = i;
        }
    }
    let mut internal_edges = vec![0usize; sccs.len()];
    for a in 0..q.arrow_count() {
        if scc_of[q.src(a)] == scc_of[q.tgt(a)] {
            internal_edges[scc_of[q.src(a)]] += 1;
        }
    }
    let mut best = vec![0usize; sccs.len()];
    let mut answer = 0usize;
    for (i, scc) in sccs.iter().enumerate() {
        if internal_edges[i] > scc.len() {
            return Growth::Exponential;
        }
        let cycle_bearing = internal_edges[i] >= 1;
        let mut downstream = 0usize;
        for n in scc {
            for e in graph.edges(*n) {
                let j = scc_of[petgraph::visit::EdgeRef::target(&e).index()];
                if j != i {
                    downstream = downstream.max(best[j]);
                }
            }
        }
        best[i] = downstream + usize::from(cycle_bearing);
        answer = answer.max(best[i]);
    }
    Growth::Polynomial(answer)
}
