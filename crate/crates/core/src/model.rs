//! Core data model: weighted quivers, monomial presentations, words, paths,
//! class detection, and the connectification reduction.
//!
//! All values are immutable after construction and every operation here is a
//! pure function, so concurrent use needs no synchronization.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::collections::{HashMap, HashSet};
use std::fmt;
use std::sync::Arc;

/// An arrow of a weighted quiver. `degree >= 1` always holds after validation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Arrow {
    pub name: String,
    pub source: String,
    pub target: String,
    pub degree: u32,
}

/// A finite directed multigraph with a positive integer degree on each arrow.
///
/// Vertex and arrow ids are strings, unique within their kind. Declaration
/// order is preserved and is the canonical order for all emitted artifacts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedQuiver {
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
    // Resolved endpoint indices, parallel to `arrows`.
    src: Vec<usize>,
    tgt: Vec<usize>,
}

impl WeightedQuiver {
    pub fn new(vertices: Vec<String>, arrows: Vec<Arrow>) -> Result<Self> {
        let mut vidx: HashMap<&str, usize> = HashMap::new();
        for (i, v) in vertices.iter().enumerate() {
            if vidx.insert(v.as_str(), i).is_some() {
                return Err(Error::validation(
                    format!("vertices[{i}]"),
                    format!("duplicate vertex id {v:?}"),
                ));
            }
        }
        let mut seen: HashSet<&str> = HashSet::new();
        let mut src = Vec::with_capacity(arrows.len());
        let mut tgt = Vec::with_capacity(arrows.len());
        for (i, a) in arrows.iter().enumerate() {
            if !seen.insert(a.name.as_str()) {
                return Err(Error::validation(
                    format!("arrows[{i}].name"),
                    format!("duplicate arrow id {:?}", a.name),
                ));
            }
            if a.degree < 1 {
                return Err(Error::validation(
                    format!("arrows[{i}].degree"),
                    "degree must be ≥ 1",
                ));
            }
            let s = *vidx.get(a.source.as_str()).ok_or_else(|| {
                Error::validation(
                    format!("arrows[{i}].source"),
                    format!("unknown vertex {:?}", a.source),
                )
            })?;
            let t = *vidx.get(a.target.as_str()).ok_or_else(|| {
                Error::validation(
                    format!("arrows[{i}].target"),
                    format!("unknown vertex {:?}", a.target),
                )
            })?;
            src.push(s);
            tgt.push(t);
        }
        Ok(WeightedQuiver { vertices, arrows, src, tgt })
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn arrow_count(&self) -> usize {
        self.arrows.len()
    }

    pub fn vertex_index(&self, id: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == id)
    }

    pub fn arrow_index(&self, id: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.name == id)
    }

    /// Index of the source vertex of arrow `a`.
    pub fn src(&self, a: usize) -> usize {
        self.src[a]
    }

    /// Index of the target vertex of arrow `a`.
    pub fn tgt(&self, a: usize) -> usize {
        self.tgt[a]
    }

    pub fn degree(&self, a: usize) -> u32 {
        self.arrows[a].degree
    }

    pub fn all_degrees_one(&self) -> bool {
        self.arrows.iter().all(|a| a.degree == 1)
    }

    /// GraphViz rendering with stable node keys and declaration ordering.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph quiver {\n  rankdir=LR;\n");
        for (i, v) in self.vertices.iter().enumerate() {
            out.push_str(&format!("  n{} [label={}];\n", i, dot_quote(display_id(v))));
        }
        for (i, a) in self.arrows.iter().enumerate() {
            out.push_str(&format!(
                "  n{} -> n{} [label={}];\n",
                self.src[i],
                self.tgt[i],
                dot_quote(&format!("{}:{}", a.name, a.degree)),
            ));
        }
        out.push_str("}\n");
        out
    }
}

/// Empty ids only occur for the empty word; render those as ε.
fn display_id(id: &str) -> &str {
    if id.is_empty() {
        "ε"
    } else {
        id
    }
}

pub(crate) fn dot_quote(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('"');
    for c in s.chars() {
        if c == '"' || c == '\\' {
            out.push('\\');
        }
        out.push(c);
    }
    out.push('"');
    out
}

/// A composable sequence of arrows in a quiver; `arrows` empty means the
/// length-0 path at `source`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct QuiverPath {
    pub source: usize,
    pub arrows: Vec<usize>,
}

impl QuiverPath {
    pub fn trivial(v: usize) -> Self {
        QuiverPath { source: v, arrows: Vec::new() }
    }

    /// Builds a path and checks composability: consecutive arrows must chain
    /// target-to-source, and the first arrow must start at `source`.
    pub fn new(q: &WeightedQuiver, source: usize, arrows: Vec<usize>) -> Result<Self> {
        let mut at = source;
        for (i, &a) in arrows.iter().enumerate() {
            if a >= q.arrow_count() {
                return Err(Error::validation(format!("path[{i}]"), "unknown arrow index"));
            }
            if q.src(a) != at {
                return Err(Error::validation(
                    format!("path[{i}]"),
                    format!("arrow {:?} does not compose at vertex {:?}", q.arrows()[a].name, q.vertices()[at]),
                ));
            }
            at = q.tgt(a);
        }
        Ok(QuiverPath { source, arrows })
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arrows.is_empty()
    }

    pub fn target(&self, q: &WeightedQuiver) -> usize {
        self.arrows.last().map_or(self.source, |&a| q.tgt(a))
    }

    pub fn degree(&self, q: &WeightedQuiver) -> u64 {
        self.arrows.iter().map(|&a| q.degree(a) as u64).sum()
    }

    pub fn display(&self, q: &WeightedQuiver) -> String {
        if self.arrows.is_empty() {
            format!("e_{}", display_id(&q.vertices()[self.source]))
        } else {
            self.arrows
                .iter()
                .map(|&a| q.arrows()[a].name.as_str())
                .collect::<Vec<_>>()
                .join("·")
        }
    }
}

/// A word over a presentation's alphabet, stored as generator indices.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Word(pub Vec<usize>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = self.0.clone();
        letters.extend_from_slice(&other.0);
        Word(letters)
    }

    /// True if `factor` occurs as a contiguous subword.
    pub fn contains_factor(&self, factor: &Word) -> bool {
        if factor.is_empty() {
            return true;
        }
        self.0.windows(factor.len()).any(|w| w == factor.0.as_slice())
    }
}

/// A generator letter with its positive degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Generator {
    pub name: String,
    pub degree: u32,
}

/// A connected monomial algebra presented by generators and forbidden words.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialPresentation {
    generators: Vec<Generator>,
    forbidden: Vec<Word>,
}

impl MonomialPresentation {
    /// Validates letter uniqueness, positive degrees, and that forbidden words
    /// are nonempty. Duplicate forbidden words are dropped, keeping first
    /// occurrence order.
    pub fn new(generators: Vec<Generator>, forbidden: Vec<Word>) -> Result<Self> {
        let mut seen: HashSet<&str> = HashSet::new();
        for (i, g) in generators.iter().enumerate() {
            if g.name.is_empty() {
                return Err(Error::validation(
                    format!("generators[{i}].name"),
                    "generator name must be nonempty",
                ));
            }
            if !seen.insert(g.name.as_str()) {
                return Err(Error::validation(
                    format!("generators[{i}].name"),
                    format!("duplicate generator {:?}", g.name),
                ));
            }
            if g.degree < 1 {
                return Err(Error::validation(
                    format!("generators[{i}].degree"),
                    "degree must be ≥ 1",
                ));
            }
        }
        let mut kept: Vec<Word> = Vec::new();
        for (i, w) in forbidden.into_iter().enumerate() {
            if w.is_empty() {
                return Err(Error::validation(
                    format!("forbidden[{i}]"),
                    "forbidden words must be nonempty",
                ));
            }
            if let Some(&bad) = w.0.iter().find(|&&l| l >= generators.len()) {
                return Err(Error::validation(
                    format!("forbidden[{i}]"),
                    format!("unknown letter index {bad}"),
                ));
            }
            if !kept.contains(&w) {
                kept.push(w);
            }
        }
        Ok(MonomialPresentation { generators, forbidden: kept })
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn forbidden(&self) -> &[Word] {
        &self.forbidden
    }

    pub fn alphabet_size(&self) -> usize {
        self.generators.len()
    }

    pub fn letter_index(&self, name: &str) -> Option<usize> {
        self.generators.iter().position(|g| g.name == name)
    }

    pub fn letter_degree(&self, letter: usize) -> u32 {
        self.generators[letter].degree
    }

    pub fn all_degrees_one(&self) -> bool {
        self.generators.iter().all(|g| g.degree == 1)
    }

    pub fn word_degree(&self, w: &Word) -> u64 {
        w.0.iter().map(|&l| self.generators[l].degree as u64).sum()
    }

    /// Canonical string form of a word: plain concatenation when every letter
    /// name is a single character, otherwise letters joined with `·`.
    /// The empty word renders as ε.
    pub fn word_string(&self, w: &Word) -> String {
        if w.is_empty() {
            return "ε".to_string();
        }
        if self.generators.iter().all(|g| g.name.chars().count() == 1) {
            w.0.iter().map(|&l| self.generators[l].name.as_str()).collect()
        } else {
            w.0.iter()
                .map(|&l| self.generators[l].name.as_str())
                .collect::<Vec<_>>()
                .join("·")
        }
    }

    /// Parses a word given as one string of single-character letter names.
    pub fn parse_word_text(&self, text: &str, location: &str) -> Result<Word> {
        let mut letters = Vec::new();
        for c in text.chars() {
            let name = c.to_string();
            let l = self.letter_index(&name).ok_or_else(|| {
                Error::validation(location, format!("unknown letter {name:?} in word {text:?}"))
            })?;
            letters.push(l);
        }
        Ok(Word(letters))
    }

    pub fn parse_word_parts(&self, parts: &[String], location: &str) -> Result<Word> {
        let mut letters = Vec::new();
        for p in parts {
            let l = self
                .letter_index(p)
                .ok_or_else(|| Error::validation(location, format!("unknown letter {p:?}")))?;
            letters.push(l);
        }
        Ok(Word(letters))
    }
}

/// A weighted quiver together with a finite set of path relations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuiverMonomialAlgebra {
    pub quiver: WeightedQuiver,
    pub relations: Vec<QuiverPath>,
}

impl QuiverMonomialAlgebra {
    /// Every relation must be a composable path of length ≥ 1.
    pub fn new(quiver: WeightedQuiver, relations: Vec<QuiverPath>) -> Result<Self> {
        for (i, r) in relations.iter().enumerate() {
            if r.is_empty() {
                return Err(Error::validation(
                    format!("relations[{i}]"),
                    "relations must be paths of length ≥ 1",
                ));
            }
            // Re-validate composability against this quiver.
            QuiverPath::new(&quiver, r.source, r.arrows.clone())
                .map_err(|_| Error::validation(format!("relations[{i}]"), "relation is not a composable path"))?;
        }
        Ok(QuiverMonomialAlgebra { quiver, relations })
    }
}

impl From<WeightedQuiver> for QuiverMonomialAlgebra {
    fn from(quiver: WeightedQuiver) -> Self {
        QuiverMonomialAlgebra { quiver, relations: Vec::new() }
    }
}

/// The five classes of graded algebras handled by the pipeline.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum AlgebraClass {
    PA1,
    WPA,
    MA,
    CMA,
    CMA1,
}

impl fmt::Display for AlgebraClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            AlgebraClass::PA1 => "PA1",
            AlgebraClass::WPA => "WPA",
            AlgebraClass::MA => "MA",
            AlgebraClass::CMA => "CMA",
            AlgebraClass::CMA1 => "CMA1",
        };
        f.write_str(s)
    }
}

impl std::str::FromStr for AlgebraClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_uppercase().as_str() {
            "PA1" => Ok(AlgebraClass::PA1),
            "WPA" => Ok(AlgebraClass::WPA),
            "MA" => Ok(AlgebraClass::MA),
            "CMA" => Ok(AlgebraClass::CMA),
            "CMA1" => Ok(AlgebraClass::CMA1),
            other => Err(Error::validation("class", format!("unknown class {other:?}"))),
        }
    }
}

/// All class labels that apply to an input, most specific first.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub labels: Vec<AlgebraClass>,
}

impl Classification {
    pub fn most_specific(&self) -> AlgebraClass {
        self.labels[0]
    }

    pub fn contains(&self, c: AlgebraClass) -> bool {
        self.labels.contains(&c)
    }
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.labels[0])?;
        if self.labels.len() > 1 {
            let rest: Vec<String> = self.labels[1..].iter().map(|c| c.to_string()).collect();
            write!(f, " (also {})", rest.join(", "))?;
        }
        Ok(())
    }
}

/// A parsed and validated input algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AlgebraInput {
    Presentation(MonomialPresentation),
    Quiver(WeightedQuiver),
    QuiverWithRelations(QuiverMonomialAlgebra),
}

/// Returns every applicable class label, most specific first:
/// presentations are CMA (CMA1 when generated in degree one), relation-free
/// quivers are WPA (PA1 when all arrows have degree one), and quivers with
/// relations are MA. Containments CMA1 ⊆ CMA ⊆ MA and PA1 ⊆ WPA ⊆ MA are
/// reflected in the label set.
pub fn classify(input: &AlgebraInput) -> Classification {
    let labels = match input {
        AlgebraInput::Presentation(p) => {
            if p.all_degrees_one() {
                vec![AlgebraClass::CMA1, AlgebraClass::CMA, AlgebraClass::MA]
            } else {
                vec![AlgebraClass::CMA, AlgebraClass::MA]
            }
        }
        AlgebraInput::Quiver(q) => {
            if q.all_degrees_one() {
                vec![AlgebraClass::PA1, AlgebraClass::WPA, AlgebraClass::MA]
            } else {
                vec![AlgebraClass::WPA, AlgebraClass::MA]
            }
        }
        AlgebraInput::QuiverWithRelations(_) => vec![AlgebraClass::MA],
    };
    Classification { labels }
}

// ---------------------------------------------------------------------------
// JSON input/output
// ---------------------------------------------------------------------------

#[derive(Debug, Serialize, Deserialize)]
#[serde(untagged)]
enum RawWord {
    Text(String),
    Parts(Vec<String>),
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawGenerator {
    name: String,
    degree: i64,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawPresentation {
    kind: String,
    generators: Vec<RawGenerator>,
    #[serde(default)]
    forbidden: Vec<RawWord>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawArrow {
    name: String,
    source: String,
    target: String,
    degree: i64,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawQuiver {
    kind: String,
    vertices: Vec<String>,
    arrows: Vec<RawArrow>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    relations: Vec<Vec<String>>,
}

fn checked_degree(d: i64, location: String) -> Result<u32> {
    if d < 1 {
        return Err(Error::Validation { location, message: "degree must be ≥ 1".into() });
    }
    u32::try_from(d).map_err(|_| Error::Validation { location, message: "degree too large".into() })
}

/// Parses a JSON input into a validated algebra. The `kind` field selects the
/// schema: `"monomial"` for presentations, `"quiver"` for (weighted) quivers,
/// which become quiver monomial algebras when `relations` is nonempty.
/// Ordering of vertices, arrows, and generators is preserved from the input.
pub fn parse_input(text: &[u8]) -> Result<AlgebraInput> {
    let value: serde_json::Value =
        serde_json::from_slice(text).map_err(|e| Error::Parse(e.to_string()))?;
    let kind = value
        .get("kind")
        .and_then(|k| k.as_str())
        .ok_or_else(|| Error::Parse("missing or non-string \"kind\" field".into()))?;
    match kind {
        "monomial" => {
            let raw: RawPresentation =
                serde_json::from_value(value).map_err(|e| Error::Parse(e.to_string()))?;
            Ok(AlgebraInput::Presentation(build_presentation(raw)?))
        }
        "quiver" => {
            let raw: RawQuiver =
                serde_json::from_value(value).map_err(|e| Error::Parse(e.to_string()))?;
            build_quiver_input(raw)
        }
        other => Err(Error::Parse(format!(
            "unknown kind {other:?}; expected \"monomial\" or \"quiver\""
        ))),
    }
}

fn build_presentation(raw: RawPresentation) -> Result<MonomialPresentation> {
    let mut generators = Vec::with_capacity(raw.generators.len());
    for (i, g) in raw.generators.into_iter().enumerate() {
        let degree = checked_degree(g.degree, format!("generators[{i}].degree"))?;
        generators.push(Generator { name: g.name, degree });
    }
    // Words are resolved against a relation-free presentation first so letter
    // lookups can use the validated alphabet.
    let base = MonomialPresentation::new(generators, Vec::new())?;
    let mut forbidden = Vec::with_capacity(raw.forbidden.len());
    for (i, w) in raw.forbidden.iter().enumerate() {
        let loc = format!("forbidden[{i}]");
        let word = match w {
            RawWord::Text(t) => base.parse_word_text(t, &loc)?,
            RawWord::Parts(parts) => base.parse_word_parts(parts, &loc)?,
        };
        forbidden.push(word);
    }
    MonomialPresentation::new(base.generators, forbidden)
}

fn build_quiver_input(raw: RawQuiver) -> Result<AlgebraInput> {
    let mut arrows = Vec::with_capacity(raw.arrows.len());
    for (i, a) in raw.arrows.into_iter().enumerate() {
        let degree = checked_degree(a.degree, format!("arrows[{i}].degree"))?;
        arrows.push(Arrow { name: a.name, source: a.source, target: a.target, degree });
    }
    let quiver = WeightedQuiver::new(raw.vertices, arrows)?;
    if raw.relations.is_empty() {
        return Ok(AlgebraInput::Quiver(quiver));
    }
    let mut relations = Vec::with_capacity(raw.relations.len());
    for (i, names) in raw.relations.iter().enumerate() {
        let loc = format!("relations[{i}]");
        if names.is_empty() {
            return Err(Error::validation(loc, "relations must be paths of length ≥ 1"));
        }
        let mut idxs = Vec::with_capacity(names.len());
        for n in names {
            let a = quiver
                .arrow_index(n)
                .ok_or_else(|| Error::validation(&loc, format!("unknown arrow {n:?}")))?;
            idxs.push(a);
        }
        let source = quiver.src(idxs[0]);
        let path = QuiverPath::new(&quiver, source, idxs)
            .map_err(|_| Error::validation(&loc, "relation is not a composable path"))?;
        relations.push(path);
    }
    Ok(AlgebraInput::QuiverWithRelations(QuiverMonomialAlgebra { quiver, relations }))
}

fn word_to_raw(p: &MonomialPresentation, w: &Word) -> RawWord {
    if p.generators().iter().all(|g| g.name.chars().count() == 1) {
        RawWord::Text(w.0.iter().map(|&l| p.generators()[l].name.as_str()).collect())
    } else {
        RawWord::Parts(w.0.iter().map(|&l| p.generators()[l].name.clone()).collect())
    }
}

/// Emits an input back to its JSON form; `parse_input(emit_json(x)) == x`.
pub fn emit_json(input: &AlgebraInput) -> serde_json::Value {
    match input {
        AlgebraInput::Presentation(p) => {
            let raw = RawPresentation {
                kind: "monomial".into(),
                generators: p
                    .generators()
                    .iter()
                    .map(|g| RawGenerator { name: g.name.clone(), degree: g.degree as i64 })
                    .collect(),
                forbidden: p.forbidden().iter().map(|w| word_to_raw(p, w)).collect(),
            };
            serde_json::to_value(raw).expect("presentation serializes")
        }
        AlgebraInput::Quiver(q) => quiver_to_value(q, &[]),
        AlgebraInput::QuiverWithRelations(alg) => quiver_to_value(&alg.quiver, &alg.relations),
    }
}

fn quiver_to_value(q: &WeightedQuiver, relations: &[QuiverPath]) -> serde_json::Value {
    let raw = RawQuiver {
        kind: "quiver".into(),
        vertices: q.vertices().to_vec(),
        arrows: q
            .arrows()
            .iter()
            .map(|a| RawArrow {
                name: a.name.clone(),
                source: a.source.clone(),
                target: a.target.clone(),
                degree: a.degree as i64,
            })
            .collect(),
        relations: relations
            .iter()
            .map(|p| p.arrows.iter().map(|&a| q.arrows()[a].name.clone()).collect())
            .collect(),
    };
    serde_json::to_value(raw).expect("quiver serializes")
}

/// Pretty JSON with a trailing newline; the canonical emitted form.
pub fn emit_string(input: &AlgebraInput) -> String {
    let mut s = serde_json::to_string_pretty(&emit_json(input)).expect("serializes");
    s.push('\n');
    s
}

// ---------------------------------------------------------------------------
// Connectification and forbidden-word reduction
// ---------------------------------------------------------------------------

/// Presents the one-vertex algebra on the quiver's arrows: one generator per
/// arrow carrying the arrow's degree, with a word `ab` forbidden whenever
/// `t(a) ≠ s(b)`, plus every relation path rewritten as a word of arrows.
///
/// Fails on an arrowless quiver: the result would be a product of copies of
/// the ground field with no generators, which this presentation cannot house.
pub fn connectify(alg: &QuiverMonomialAlgebra) -> Result<MonomialPresentation> {
    let q = &alg.quiver;
    if q.arrow_count() == 0 {
        return Err(Error::validation(
            "quiver",
            "connectify requires at least one arrow (an arrowless quiver has no generators)",
        ));
    }
    let generators: Vec<Generator> = q
        .arrows()
        .iter()
        .map(|a| Generator { name: a.name.clone(), degree: a.degree })
        .collect();
    let mut forbidden: Vec<Word> = Vec::new();
    for a in 0..q.arrow_count() {
        for b in 0..q.arrow_count() {
            if q.tgt(a) != q.src(b) {
                forbidden.push(Word(vec![a, b]));
            }
        }
    }
    for rel in &alg.relations {
        forbidden.push(Word(rel.arrows.clone()));
    }
    MonomialPresentation::new(generators, forbidden)
}

/// Removes every forbidden word that contains another forbidden word as a
/// proper factor. The generated ideal, and hence word legality, is unchanged;
/// the operation is idempotent.
pub fn reduce_forbidden(p: &MonomialPresentation) -> MonomialPresentation {
    let forbidden = p.forbidden();
    let kept: Vec<Word> = forbidden
        .iter()
        .filter(|w| {
            !forbidden
                .iter()
                .any(|u| u.len() < w.len() && w.contains_factor(u))
        })
        .cloned()
        .collect();
    MonomialPresentation::new(p.generators().to_vec(), kept)
        .expect("reduction preserves validity")
}

/// Shared handle used by representation-level code.
pub type QuiverRef = Arc<WeightedQuiver>;
