//! Truncated graded representations of weighted quivers over the rationals,
//! the degree shift, the functors induced by an arrow split, the counit of
//! their adjunction, and executable checks of the identities they satisfy.
//!
//! A representation assigns each vertex a graded vector space on a finite
//! degree window and each arrow a's exact rational matrix per degree, raising
//! degree by deg(a). Windows are tracked per vertex: a degree outside the
//! window is unknown rather than zero, and every identity below is asserted
//! only where both sides are defined. This keeps all functor identities
//! exact matrix equalities instead of approximations at truncation edges.

use crate::error::{Error, Result};
use crate::hilbert::enumerate_paths_from;
use crate::linalg::{Mat, Rat, RowSpace};
use crate::model::{QuiverPath, QuiverRef, WeightedQuiver};
use crate::report::CheckReport;
use crate::split::{split_arrow, SplitStep};
use crate::words::DEFAULT_ENUM_BUDGET;
use num_bigint::BigInt;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use serde_json::json;
use std::collections::BTreeMap;
use std::str::FromStr;
use std::sync::Arc;

/// A graded vector space on a contiguous degree window: dimension
/// `dims[(d - lo)]` in degree d. Degrees outside the window are unknown.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedSpace {
    lo: i64,
    dims: Vec<usize>,
}

impl GradedSpace {
    pub fn new(lo: i64, dims: Vec<usize>) -> Self {
        if dims.is_empty() {
            // Canonical empty window, so equality of reps is well defined.
            return GradedSpace { lo: 0, dims };
        }
        GradedSpace { lo, dims }
    }

    pub fn empty() -> Self {
        GradedSpace { lo: 0, dims: Vec::new() }
    }

    pub fn lo(&self) -> i64 {
        self.lo
    }

    /// Inclusive upper end; `lo - 1` when the window is empty.
    pub fn hi(&self) -> i64 {
        self.lo + self.dims.len() as i64 - 1
    }

    pub fn degrees(&self) -> impl Iterator<Item = i64> {
        self.lo..=self.hi()
    }

    pub fn dim_at(&self, d: i64) -> Option<usize> {
        if d < self.lo || d > self.hi() {
            None
        } else {
            Some(self.dims[(d - self.lo) as usize])
        }
    }

    /// The window of the shifted space: degree d of the shift holds what
    /// degree d + k held before.
    pub fn shift(&self, k: i64) -> GradedSpace {
        GradedSpace::new(self.lo - k, self.dims.clone())
    }

    fn overlap(&self, other: &GradedSpace) -> (i64, i64) {
        (self.lo.max(other.lo), self.hi().min(other.hi()))
    }
}

/// A truncated graded representation: one graded space per vertex, one exact
/// rational matrix per arrow per degree where source and target are both
/// inside their windows.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedGradedRep {
    quiver: QuiverRef,
    spaces: Vec<GradedSpace>,
    /// Per arrow: source degree ↦ matrix of shape dim(t, d+deg) × dim(s, d).
    maps: Vec<BTreeMap<i64, Mat>>,
}

impl TruncatedGradedRep {
    /// Validates shape: a matrix must exist exactly for the degrees where
    /// both endpoints are in-window, with matching dimensions.
    pub fn new(
        quiver: QuiverRef,
        spaces: Vec<GradedSpace>,
        maps: Vec<BTreeMap<i64, Mat>>,
    ) -> Result<Self> {
        if spaces.len() != quiver.vertex_count() || maps.len() != quiver.arrow_count() {
            return Err(Error::validation("rep", "space or map table has wrong length"));
        }
        for a in 0..quiver.arrow_count() {
            let (s, t, deg) = (quiver.src(a), quiver.tgt(a), quiver.degree(a) as i64);
            let name = &quiver.arrows()[a].name;
            for (&d, m) in &maps[a] {
                let sd = spaces[s].dim_at(d);
                let td = spaces[t].dim_at(d + deg);
                match (sd, td) {
                    (Some(sd), Some(td)) => {
                        if m.rows() != td || m.cols() != sd {
                            return Err(Error::validation(
                                format!("rep.maps[{name}][{d}]"),
                                format!(
                                    "matrix is {}×{}, expected {}×{}",
                                    m.rows(),
                                    m.cols(),
                                    td,
                                    sd
                                ),
                            ));
                        }
                    }
                    _ => {
                        return Err(Error::validation(
                            format!("rep.maps[{name}][{d}]"),
                            "map defined outside the degree window",
                        ))
                    }
                }
            }
            for d in spaces[s].degrees() {
                if spaces[t].dim_at(d + deg).is_some() && !maps[a].contains_key(&d) {
                    return Err(Error::validation(
                        format!("rep.maps[{name}][{d}]"),
                        "missing map on an in-window degree",
                    ));
                }
            }
        }
        Ok(TruncatedGradedRep { quiver, spaces, maps })
    }

    /// The zero representation on a uniform window.
    pub fn zero(quiver: QuiverRef, lo: i64, hi: i64) -> Self {
        let len = (hi - lo + 1).max(0) as usize;
        let spaces = vec![GradedSpace::new(lo, vec![0; len]); quiver.vertex_count()];
        let maps = build_maps(&quiver, &spaces, |_, _, rows, cols| Mat::zeros(rows, cols));
        TruncatedGradedRep { quiver, spaces, maps }
    }

    pub fn quiver(&self) -> &QuiverRef {
        &self.quiver
    }

    pub fn space(&self, v: usize) -> &GradedSpace {
        &self.spaces[v]
    }

    pub fn map_at(&self, a: usize, d: i64) -> Option<&Mat> {
        self.maps[a].get(&d)
    }

    pub fn map_degrees(&self, a: usize) -> impl Iterator<Item = i64> + '_ {
        self.maps[a].keys().copied()
    }

    /// Componentwise regrading: degree d of the result holds degree d + k.
    pub fn shift(&self, k: i64) -> Self {
        let spaces = self.spaces.iter().map(|s| s.shift(k)).collect();
        let maps = self
            .maps
            .iter()
            .map(|m| m.iter().map(|(&d, mat)| (d - k, mat.clone())).collect())
            .collect();
        TruncatedGradedRep { quiver: self.quiver.clone(), spaces, maps }
    }

    pub fn total_dim(&self) -> usize {
        self.spaces.iter().map(|s| s.dims.iter().sum::<usize>()).sum()
    }

    /// Direct sum over the same quiver. A degree outside either summand's
    /// window is unknown, so the result lives on the per-vertex overlap.
    pub fn direct_sum(&self, other: &Self) -> Result<Self> {
        if self.quiver != other.quiver {
            return Err(Error::validation("rep", "direct sum across different quivers"));
        }
        let spaces: Vec<GradedSpace> = self
            .spaces
            .iter()
            .zip(&other.spaces)
            .map(|(a, b)| {
                let (lo, hi) = a.overlap(b);
                let dims = (lo..=hi)
                    .map(|d| a.dim_at(d).unwrap() + b.dim_at(d).unwrap())
                    .collect();
                GradedSpace::new(lo, dims)
            })
            .collect();
        let q = self.quiver.clone();
        let maps = build_maps(&q, &spaces, |a, d, rows, cols| {
            let mut m = Mat::zeros(rows, cols);
            let (sa, ta) = (q.src(a), q.tgt(a));
            let deg = q.degree(a) as i64;
            let (m1, m2) = (self.map_at(a, d), other.map_at(a, d));
            let r1 = self.spaces[ta].dim_at(d + deg).unwrap_or(0);
            let c1 = self.spaces[sa].dim_at(d).unwrap_or(0);
            if let Some(m1) = m1 {
                for i in 0..m1.rows() {
                    for j in 0..m1.cols() {
                        m.set(i, j, m1.at(i, j).clone());
                    }
                }
            }
            if let Some(m2) = m2 {
                for i in 0..m2.rows() {
                    for j in 0..m2.cols() {
                        m.set(r1 + i, c1 + j, m2.at(i, j).clone());
                    }
                }
            }
            m
        });
        TruncatedGradedRep::new(q, spaces, maps)
    }

    /// Serializes spaces and matrices; rationals become `"p/q"` strings.
    pub fn to_json(&self) -> serde_json::Value {
        let spaces: Vec<_> = self
            .spaces
            .iter()
            .enumerate()
            .map(|(v, s)| {
                json!({
                    "vertex": self.quiver.vertices()[v],
                    "lo": s.lo,
                    "dims": s.dims,
                })
            })
            .collect();
        let mut maps = Vec::new();
        for (a, table) in self.maps.iter().enumerate() {
            for (&d, m) in table {
                let rows: Vec<Vec<String>> = (0..m.rows())
                    .map(|i| m.row(i).iter().map(|x| x.to_string()).collect())
                    .collect();
                maps.push(json!({
                    "arrow": self.quiver.arrows()[a].name,
                    "degree": d,
                    "matrix": rows,
                }));
            }
        }
        json!({ "spaces": spaces, "maps": maps })
    }

    /// Parses the `to_json` format back against a quiver.
    pub fn from_json(quiver: QuiverRef, value: &serde_json::Value) -> Result<Self> {
        let bad = |msg: &str| Error::Parse(format!("rep json: {msg}"));
        let spaces_json = value
            .get("spaces")
            .and_then(|s| s.as_array())
            .ok_or_else(|| bad("missing spaces array"))?;
        let mut spaces = vec![GradedSpace::empty(); quiver.vertex_count()];
        for entry in spaces_json {
            let name = entry.get("vertex").and_then(|v| v.as_str()).ok_or_else(|| bad("space without vertex"))?;
            let v = quiver
                .vertex_index(name)
                .ok_or_else(|| Error::validation("rep.spaces", format!("unknown vertex {name:?}")))?;
            let lo = entry.get("lo").and_then(|x| x.as_i64()).ok_or_else(|| bad("space without lo"))?;
            let dims: Vec<usize> = entry
                .get("dims")
                .and_then(|x| serde_json::from_value(x.clone()).ok())
                .ok_or_else(|| bad("space without dims"))?;
            spaces[v] = GradedSpace::new(lo, dims);
        }
        let mut maps: Vec<BTreeMap<i64, Mat>> = vec![BTreeMap::new(); quiver.arrow_count()];
        let maps_json = value
            .get("maps")
            .and_then(|s| s.as_array())
            .ok_or_else(|| bad("missing maps array"))?;
        for entry in maps_json {
            let name = entry.get("arrow").and_then(|v| v.as_str()).ok_or_else(|| bad("map without arrow"))?;
            let a = quiver
                .arrow_index(name)
                .ok_or_else(|| Error::validation("rep.maps", format!("unknown arrow {name:?}")))?;
            let d = entry.get("degree").and_then(|x| x.as_i64()).ok_or_else(|| bad("map without degree"))?;
            let rows_json = entry
                .get("matrix")
                .and_then(|x| x.as_array())
                .ok_or_else(|| bad("map without matrix"))?;
            let mut rows: Vec<Vec<Rat>> = Vec::with_capacity(rows_json.len());
            for row in rows_json {
                let cells = row.as_array().ok_or_else(|| bad("matrix row is not an array"))?;
                let mut out = Vec::with_capacity(cells.len());
                for c in cells {
                    let s = c.as_str().ok_or_else(|| bad("matrix entry is not a string"))?;
                    out.push(Rat::from_str(s).map_err(|e| bad(&format!("bad rational {s:?}: {e}")))?);
                }
                rows.push(out);
            }
            let sd = spaces[quiver.src(a)]
                .dim_at(d)
                .ok_or_else(|| bad("map outside window"))?;
            let mat = if rows.is_empty() { Mat::zeros(0, sd) } else { Mat::from_rows(rows) };
            maps[a].insert(d, mat);
        }
        TruncatedGradedRep::new(quiver, spaces, maps)
    }
}

/// Builds the full map table for given spaces, calling `f` for each required
/// (arrow, degree) with the expected shape.
fn build_maps(
    quiver: &WeightedQuiver,
    spaces: &[GradedSpace],
    mut f: impl FnMut(usize, i64, usize, usize) -> Mat,
) -> Vec<BTreeMap<i64, Mat>> {
    let mut maps = Vec::with_capacity(quiver.arrow_count());
    for a in 0..quiver.arrow_count() {
        let (s, t, deg) = (quiver.src(a), quiver.tgt(a), quiver.degree(a) as i64);
        let mut table = BTreeMap::new();
        for d in spaces[s].degrees() {
            if let (Some(cols), Some(rows)) = (spaces[s].dim_at(d), spaces[t].dim_at(d + deg)) {
                table.insert(d, f(a, d, rows, cols));
            }
        }
        maps.push(table);
    }
    maps
}

// ---------------------------------------------------------------------------
// Morphisms
// ---------------------------------------------------------------------------

/// A degree-preserving morphism of representations over one quiver: a matrix
/// per vertex per degree in the overlap of the two windows, commuting with
/// the arrow maps wherever all four sides are defined.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RepMorphism {
    source: TruncatedGradedRep,
    target: TruncatedGradedRep,
    components: Vec<BTreeMap<i64, Mat>>,
}

impl RepMorphism {
    /// Validates shapes, totality on window overlaps, and every commuting
    /// square; the error names the arrow, degree, and first bad entry.
    pub fn try_new(
        source: TruncatedGradedRep,
        target: TruncatedGradedRep,
        components: Vec<BTreeMap<i64, Mat>>,
    ) -> Result<Self> {
        if source.quiver != target.quiver {
            return Err(Error::validation("morphism", "source and target quiver differ"));
        }
        let q = source.quiver.clone();
        if components.len() != q.vertex_count() {
            return Err(Error::validation("morphism", "component table has wrong length"));
        }
        for v in 0..q.vertex_count() {
            let (lo, hi) = source.spaces[v].overlap(&target.spaces[v]);
            for d in lo..=hi {
                let m = components[v].get(&d).ok_or_else(|| {
                    Error::validation(
                        format!("morphism[{}][{d}]", q.vertices()[v]),
                        "missing component on an in-window degree",
                    )
                })?;
                let rows = target.spaces[v].dim_at(d).unwrap();
                let cols = source.spaces[v].dim_at(d).unwrap();
                if m.rows() != rows || m.cols() != cols {
                    return Err(Error::validation(
                        format!("morphism[{}][{d}]", q.vertices()[v]),
                        format!("component is {}×{}, expected {rows}×{cols}", m.rows(), m.cols()),
                    ));
                }
            }
            for &d in components[v].keys() {
                if d < lo || d > hi {
                    return Err(Error::validation(
                        format!("morphism[{}][{d}]", q.vertices()[v]),
                        "component outside the window overlap",
                    ));
                }
            }
        }
        // Commuting squares.
        for a in 0..q.arrow_count() {
            let (s, t, deg) = (q.src(a), q.tgt(a), q.degree(a) as i64);
            for (&d, ma) in &source.maps[a] {
                let (Some(na), Some(ps), Some(pt)) = (
                    target.maps[a].get(&d),
                    components[s].get(&d),
                    components[t].get(&(d + deg)),
                ) else {
                    continue;
                };
                let lhs = pt.mul(ma);
                let rhs = na.mul(ps);
                if lhs != rhs {
                    let witness = first_difference(&lhs, &rhs);
                    return Err(Error::validation(
                        format!("morphism square [{}][{d}]", q.arrows()[a].name),
                        format!(
                            "does not commute at entry ({}, {}): {} ≠ {}",
                            witness.0,
                            witness.1,
                            lhs.at(witness.0, witness.1),
                            rhs.at(witness.0, witness.1)
                        ),
                    ));
                }
            }
        }
        Ok(RepMorphism { source, target, components })
    }

    pub fn identity(m: &TruncatedGradedRep) -> Self {
        let components = m
            .spaces
            .iter()
            .map(|s| s.degrees().map(|d| (d, Mat::identity(s.dim_at(d).unwrap()))).collect())
            .collect();
        RepMorphism { source: m.clone(), target: m.clone(), components }
    }

    pub fn source(&self) -> &TruncatedGradedRep {
        &self.source
    }

    pub fn target(&self) -> &TruncatedGradedRep {
        &self.target
    }

    pub fn component(&self, v: usize, d: i64) -> Option<&Mat> {
        self.components[v].get(&d)
    }

    /// True when source and target coincide and every component is an
    /// identity matrix.
    pub fn is_identity(&self) -> bool {
        self.source == self.target
            && self
                .components
                .iter()
                .all(|c| c.values().all(|m| m.is_identity()))
    }

    /// Composition g ∘ f where self maps B→C and `f` maps A→B; components are
    /// taken on the degrees where both factors are defined.
    pub fn compose_after(&self, f: &RepMorphism) -> Result<RepMorphism> {
        if f.target != self.source {
            return Err(Error::validation("morphism", "composition endpoints do not match"));
        }
        let mut components = Vec::with_capacity(self.components.len());
        for v in 0..self.components.len() {
            let mut table = BTreeMap::new();
            for (&d, g) in &self.components[v] {
                if let Some(fm) = f.components[v].get(&d) {
                    table.insert(d, g.mul(fm));
                }
            }
            components.push(table);
        }
        RepMorphism::try_new(f.source.clone(), self.target.clone(), components)
    }

    /// Per-vertex, per-degree kernel dimensions (nullities).
    pub fn kernel_dims(&self) -> Vec<BTreeMap<i64, usize>> {
        self.components
            .iter()
            .map(|c| c.iter().map(|(&d, m)| (d, m.cols() - m.rank())).collect())
            .collect()
    }

    /// Per-vertex, per-degree cokernel dimensions.
    pub fn cokernel_dims(&self) -> Vec<BTreeMap<i64, usize>> {
        self.components
            .iter()
            .map(|c| c.iter().map(|(&d, m)| (d, m.rows() - m.rank())).collect())
            .collect()
    }

    /// The kernel as a representation on the overlap windows, with arrow maps
    /// restricted to the kernel bases.
    pub fn kernel_rep(&self) -> TruncatedGradedRep {
        let q = self.source.quiver.clone();
        let mut bases: Vec<BTreeMap<i64, crate::linalg::SubspaceBasis>> =
            vec![BTreeMap::new(); q.vertex_count()];
        let mut spaces = Vec::with_capacity(q.vertex_count());
        for v in 0..q.vertex_count() {
            let (lo, hi) = self.source.spaces[v].overlap(&self.target.spaces[v]);
            let dims: Vec<usize> = (lo..=hi)
                .map(|d| {
                    let ns = self.components[v][&d].nullspace();
                    let dim = ns.dim();
                    bases[v].insert(d, ns);
                    dim
                })
                .collect();
            spaces.push(GradedSpace::new(lo, dims));
        }
        let maps = build_maps(&q, &spaces, |a, d, rows, cols| {
            let (s, t, deg) = (q.src(a), q.tgt(a), q.degree(a) as i64);
            let Some(ma) = self.source.maps[a].get(&d) else {
                // Outside the source rep's own domain; kernel map is empty.
                return Mat::zeros(rows, cols);
            };
            let bs = &bases[s][&d];
            let bt = &bases[t][&(d + deg)];
            Mat::from_fn(rows, cols, |i, j| {
                let image = ma.apply(bs.basis.row(j));
                bt.coords(&image)[i].clone()
            })
        });
        TruncatedGradedRep::new(q, spaces, maps).expect("kernel is a valid rep")
    }

    /// The cokernel as a representation on the overlap windows, with arrow
    /// maps induced on the quotients.
    pub fn cokernel_rep(&self) -> TruncatedGradedRep {
        let q = self.target.quiver.clone();
        let mut images: Vec<BTreeMap<i64, RowSpace>> = vec![BTreeMap::new(); q.vertex_count()];
        let mut spaces = Vec::with_capacity(q.vertex_count());
        for v in 0..q.vertex_count() {
            let (lo, hi) = self.source.spaces[v].overlap(&self.target.spaces[v]);
            let dims: Vec<usize> = (lo..=hi)
                .map(|d| {
                    let m = &self.components[v][&d];
                    let mut space = RowSpace::new(m.rows());
                    for j in 0..m.cols() {
                        let col: Vec<Rat> = (0..m.rows()).map(|i| m.at(i, j).clone()).collect();
                        space.insert(&col);
                    }
                    let dim = m.rows() - space.dim();
                    images[v].insert(d, space);
                    dim
                })
                .collect();
            spaces.push(GradedSpace::new(lo, dims));
        }
        let maps = build_maps(&q, &spaces, |a, d, rows, cols| {
            let (s, t, deg) = (q.src(a), q.tgt(a), q.degree(a) as i64);
            let Some(na) = self.target.maps[a].get(&d) else {
                return Mat::zeros(rows, cols);
            };
            let proj = images[t][&(d + deg)].quotient_proj();
            let lift = images[s][&d].quotient_lift();
            proj.mul(na).mul(&lift)
        });
        TruncatedGradedRep::new(q, spaces, maps).expect("cokernel is a valid rep")
    }
}

fn first_difference(a: &Mat, b: &Mat) -> (usize, usize) {
    for i in 0..a.rows() {
        for j in 0..a.cols() {
            if a.at(i, j) != b.at(i, j) {
                return (i, j);
            }
        }
    }
    (0, 0)
}

// ---------------------------------------------------------------------------
// Projectives
// ---------------------------------------------------------------------------

/// The truncation of the shifted projective at a vertex: basis paths out of
/// the vertex, a path of degree e sitting in degree `shift` + e, and arrow
/// maps given by right concatenation.
#[derive(Debug, Clone)]
pub struct TruncatedProjective {
    pub vertex: usize,
    pub shift: i64,
    pub rep: TruncatedGradedRep,
    /// Per vertex and degree, the ordered basis paths landing there.
    pub basis: Vec<BTreeMap<i64, Vec<QuiverPath>>>,
}

pub fn projective(
    quiver: &QuiverRef,
    vertex: usize,
    shift: i64,
    lo: i64,
    hi: i64,
    budget: usize,
) -> Result<TruncatedProjective> {
    let mut basis: Vec<BTreeMap<i64, Vec<QuiverPath>>> =
        vec![BTreeMap::new(); quiver.vertex_count()];
    if hi >= shift {
        let max_degree = (hi - shift) as u64;
        for p in enumerate_paths_from(quiver, vertex, max_degree, budget)? {
            let d = shift + p.degree(quiver) as i64;
            if d < lo {
                continue;
            }
            basis[p.target(quiver)].entry(d).or_default().push(p);
        }
    }
    let len = (hi - lo + 1).max(0) as usize;
    let spaces: Vec<GradedSpace> = (0..quiver.vertex_count())
        .map(|v| {
            let dims = (lo..=lo + len as i64 - 1)
                .map(|d| basis[v].get(&d).map_or(0, |paths| paths.len()))
                .collect();
            GradedSpace::new(lo, dims)
        })
        .collect();
    // Position lookup per (vertex, degree) so map construction stays linear.
    let index: Vec<BTreeMap<i64, std::collections::HashMap<&QuiverPath, usize>>> = basis
        .iter()
        .map(|per_degree| {
            per_degree
                .iter()
                .map(|(&d, paths)| (d, paths.iter().enumerate().map(|(i, p)| (p, i)).collect()))
                .collect()
        })
        .collect();
    let empty: Vec<QuiverPath> = Vec::new();
    let maps = build_maps(quiver, &spaces, |a, d, rows, cols| {
        let (s, t, deg) = (quiver.src(a), quiver.tgt(a), quiver.degree(a) as i64);
        let src_paths = basis[s].get(&d).unwrap_or(&empty);
        let mut m = Mat::zeros(rows, cols);
        for (j, p) in src_paths.iter().enumerate() {
            let mut arrows = p.arrows.clone();
            arrows.push(a);
            let extended = QuiverPath { source: p.source, arrows };
            if let Some(&i) = index[t].get(&(d + deg)).and_then(|pos| pos.get(&extended)) {
                m.set(i, j, crate::linalg::rat(1, 1));
            }
        }
        m
    });
    let rep = TruncatedGradedRep::new(quiver.clone(), spaces, maps)?;
    Ok(TruncatedProjective { vertex, shift, rep, basis })
}

// ---------------------------------------------------------------------------
// The split functors and their counit
// ---------------------------------------------------------------------------

/// An arrow split with both quivers and resolved indices; the context for
/// the functors between their representation categories.
#[derive(Debug, Clone)]
pub struct SplitData {
    before: QuiverRef,
    after: QuiverRef,
    step: SplitStep,
    b_idx: usize,
    b_src: usize,
    b_degree: i64,
    z_idx: usize,
    bp_idx: usize,
    bpp_idx: usize,
}

impl SplitData {
    /// Splits `arrow` (degree > 1) of `before`.
    pub fn new(before: QuiverRef, arrow: &str) -> Result<Self> {
        let (after, step) = split_arrow(&before, arrow)?;
        Self::from_parts(before, Arc::new(after), step)
    }

    pub fn from_parts(before: QuiverRef, after: QuiverRef, step: SplitStep) -> Result<Self> {
        let missing = |what: &str| Error::validation("split", format!("{what} not found"));
        let b_idx = before.arrow_index(&step.arrow).ok_or_else(|| missing("split arrow"))?;
        Ok(SplitData {
            b_src: before.src(b_idx),
            b_degree: before.degree(b_idx) as i64,
            b_idx,
            z_idx: after.vertex_index(&step.new_vertex).ok_or_else(|| missing("new vertex"))?,
            bp_idx: after.arrow_index(&step.b_prime).ok_or_else(|| missing("b'"))?,
            bpp_idx: after.arrow_index(&step.b_dblprime).ok_or_else(|| missing("b''"))?,
            before,
            after,
            step,
        })
    }

    pub fn before(&self) -> &QuiverRef {
        &self.before
    }

    pub fn after(&self) -> &QuiverRef {
        &self.after
    }

    pub fn step(&self) -> &SplitStep {
        &self.step
    }

    pub fn z(&self) -> usize {
        self.z_idx
    }

    pub fn b_degree(&self) -> i64 {
        self.b_degree
    }

    /// Index in `after` of an arrow other than b′, b″, given its index in
    /// `before`. Positions after the split point shift by one.
    fn old_arrow(&self, a: usize) -> usize {
        debug_assert!(a != self.b_idx);
        if a < self.b_idx {
            a
        } else {
            a + 1
        }
    }
}

/// The representation of the split quiver induced by one of the original:
/// the new vertex carries the shifted source space of b, b′ acts as the
/// identity in degree one, and b″ acts as b did.
pub fn functor_f(m: &TruncatedGradedRep, s: &SplitData) -> TruncatedGradedRep {
    assert_eq!(m.quiver, s.before, "rep must live over the un-split quiver");
    let mut spaces = m.spaces.clone();
    spaces.push(m.spaces[s.b_src].shift(-1));

    let mut maps: Vec<BTreeMap<i64, Mat>> = vec![BTreeMap::new(); s.after.arrow_count()];
    for a in 0..s.before.arrow_count() {
        if a == s.b_idx {
            continue;
        }
        maps[s.old_arrow(a)] = m.maps[a].clone();
    }
    // b′ is the identity wherever the source space exists.
    maps[s.bp_idx] = m.spaces[s.b_src]
        .degrees()
        .map(|d| (d, Mat::identity(m.spaces[s.b_src].dim_at(d).unwrap())))
        .collect();
    // b″ is b's map, re-indexed through the new vertex.
    maps[s.bpp_idx] = m.maps[s.b_idx].iter().map(|(&d, mat)| (d + 1, mat.clone())).collect();
    TruncatedGradedRep::new(s.after.clone(), spaces, maps).expect("split image is a valid rep")
}

/// The inverse direction: drop the new vertex and compose b″ ∘ b′ back into
/// a single map for b. Composites that would pass outside the new vertex's
/// window are taken to be zero; with uniform or functor-image windows this
/// never happens because deg(b) ≥ 2.
pub fn functor_g(n: &TruncatedGradedRep, s: &SplitData) -> TruncatedGradedRep {
    assert_eq!(n.quiver, s.after, "rep must live over the split quiver");
    let spaces: Vec<GradedSpace> = n.spaces[..s.before.vertex_count()].to_vec();
    let q = s.before.clone();
    let maps = build_maps(&q, &spaces, |a, d, rows, cols| {
        if a == s.b_idx {
            match (n.maps[s.bp_idx].get(&d), n.maps[s.bpp_idx].get(&(d + 1))) {
                (Some(first), Some(second)) => second.mul(first),
                _ => Mat::zeros(rows, cols),
            }
        } else {
            n.maps[s.old_arrow(a)][&d].clone()
        }
    });
    TruncatedGradedRep::new(q, spaces, maps).expect("composed rep is valid")
}

pub fn functor_f_mor(phi: &RepMorphism, s: &SplitData) -> RepMorphism {
    let source = functor_f(&phi.source, s);
    let target = functor_f(&phi.target, s);
    let mut components = phi.components.clone();
    components.push(
        phi.components[s.b_src]
            .iter()
            .map(|(&d, m)| (d + 1, m.clone()))
            .collect(),
    );
    RepMorphism { source, target, components }
}

pub fn functor_g_mor(psi: &RepMorphism, s: &SplitData) -> RepMorphism {
    let source = functor_g(&psi.source, s);
    let target = functor_g(&psi.target, s);
    let components = psi.components[..s.before.vertex_count()].to_vec();
    RepMorphism { source, target, components }
}

/// The counit at N: the natural morphism F(G(N)) → N that is the identity
/// away from the new vertex and acts by N's b′ map at it.
pub fn counit(n: &TruncatedGradedRep, s: &SplitData) -> RepMorphism {
    let source = functor_f(&functor_g(n, s), s);
    let mut components: Vec<BTreeMap<i64, Mat>> = Vec::with_capacity(s.after.vertex_count());
    for v in 0..s.after.vertex_count() {
        let (lo, hi) = source.spaces[v].overlap(&n.spaces[v]);
        let table: BTreeMap<i64, Mat> = (lo..=hi)
            .map(|d| {
                let m = if v == s.z_idx {
                    n.maps[s.bp_idx]
                        .get(&(d - 1))
                        .cloned()
                        .unwrap_or_else(|| {
                            Mat::zeros(
                                n.spaces[v].dim_at(d).unwrap(),
                                source.spaces[v].dim_at(d).unwrap(),
                            )
                        })
                } else {
                    Mat::identity(n.spaces[v].dim_at(d).unwrap())
                };
                (d, m)
            })
            .collect();
        components.push(table);
    }
    RepMorphism { source, target: n.clone(), components }
}

// ---------------------------------------------------------------------------
// Torsion window surrogate
// ---------------------------------------------------------------------------

/// True iff every composite of at least one arrow map with total degree
/// ≥ `d0` that is fully defined inside the windows is zero.
///
/// This is one-sided by construction: a truncation can witness torsion
/// failing, but can never certify that the untruncated module is torsion.
pub fn is_torsion_window(m: &TruncatedGradedRep, d0: i64, budget: usize) -> Result<bool> {
    let q = &m.quiver;
    let lo = m.spaces.iter().filter(|s| !s.dims.is_empty()).map(|s| s.lo()).min();
    let hi = m.spaces.iter().filter(|s| !s.dims.is_empty()).map(|s| s.hi()).max();
    let (Some(lo), Some(hi)) = (lo, hi) else {
        return Ok(true);
    };
    let span = (hi - lo).max(0) as u64;
    for source in 0..q.vertex_count() {
        for p in enumerate_paths_from(q, source, span, budget)? {
            if p.is_empty() || (p.degree(q) as i64) < d0 {
                continue;
            }
            for start in m.spaces[source].degrees() {
                if let Some(product) = composite_along(m, &p, start) {
                    if !product.is_zero() {
                        return Ok(false);
                    }
                }
            }
        }
    }
    Ok(true)
}

/// Product of the arrow maps along a path starting at the given degree; None
/// when any step is outside the windows.
fn composite_along(m: &TruncatedGradedRep, p: &QuiverPath, start: i64) -> Option<Mat> {
    let q = &m.quiver;
    let mut d = start;
    let mut acc: Option<Mat> = None;
    for &a in &p.arrows {
        let step = m.map_at(a, d)?;
        acc = Some(match acc {
            None => step.clone(),
            Some(prev) => step.mul(&prev),
        });
        d += q.degree(a) as i64;
    }
    acc
}

/// Report of the torsion transfer across a split: source torsion must imply
/// image torsion at the slack-adjusted cutoff, and the two agree away from
/// window boundary effects.
#[derive(Debug, Clone)]
pub struct TorsionTransfer {
    pub d0: i64,
    pub torsion_source: bool,
    pub torsion_image: bool,
}

impl TorsionTransfer {
    /// Source torsion propagates forward unconditionally.
    pub fn forward_ok(&self) -> bool {
        !self.torsion_source || self.torsion_image
    }

    pub fn agree(&self) -> bool {
        self.torsion_source == self.torsion_image
    }
}

/// Compares torsion of M at `d0` with torsion of F(M) at `d0 + deg(b)`; the
/// slack accounts for composites that begin or end inside the split arrow.
pub fn torsion_transfer_check(
    m: &TruncatedGradedRep,
    s: &SplitData,
    d0: i64,
    budget: usize,
) -> Result<TorsionTransfer> {
    let torsion_source = is_torsion_window(m, d0, budget)?;
    let torsion_image = is_torsion_window(&functor_f(m, s), d0 + s.b_degree, budget)?;
    Ok(TorsionTransfer { d0, torsion_source, torsion_image })
}

// ---------------------------------------------------------------------------
// Random generation and the adjunction check
// ---------------------------------------------------------------------------

pub fn random_rep(
    quiver: &QuiverRef,
    lo: i64,
    hi: i64,
    max_dim: usize,
    rng: &mut ChaCha8Rng,
) -> TruncatedGradedRep {
    let len = (hi - lo + 1).max(0) as usize;
    let spaces: Vec<GradedSpace> = (0..quiver.vertex_count())
        .map(|_| GradedSpace::new(lo, (0..len).map(|_| rng.random_range(0..=max_dim)).collect()))
        .collect();
    let maps = build_maps(quiver, &spaces, |_, _, rows, cols| random_matrix(rows, cols, rng));
    TruncatedGradedRep::new(quiver.clone(), spaces, maps).expect("random rep is valid")
}

fn random_matrix(rows: usize, cols: usize, rng: &mut ChaCha8Rng) -> Mat {
    Mat::from_fn(rows, cols, |_, _| {
        Rat::new(BigInt::from(rng.random_range(-2i64..=2)), BigInt::from(rng.random_range(1i64..=2)))
    })
}

fn random_vector(len: usize, rng: &mut ChaCha8Rng) -> Vec<Rat> {
    (0..len)
        .map(|_| Rat::new(BigInt::from(rng.random_range(-2i64..=2)), BigInt::from(rng.random_range(1i64..=2))))
        .collect()
}

/// A morphism into `n` generated by a random homogeneous element through the
/// projective correspondence: pick (v, d) with nonzero dimension, send the
/// trivial path to a random element, and extend along path concatenation.
/// Returns None when `n` has no element to pick.
///
/// Elements are drawn from the top few degrees so the projective stays
/// shallow; its window still reaches the top of `n`'s window, which keeps
/// the component domains of naturality composites aligned exactly.
pub fn random_projective_morphism(
    n: &TruncatedGradedRep,
    rng: &mut ChaCha8Rng,
    budget: usize,
) -> Result<Option<RepMorphism>> {
    let hi = n.spaces.iter().map(|s| s.hi()).max().unwrap_or(-1);
    let lo = n.spaces.iter().map(|s| s.lo()).min().unwrap_or(0);
    let d_min = (hi - 2).max(lo);
    let positions: Vec<(usize, i64)> = (0..n.quiver.vertex_count())
        .flat_map(|v| n.spaces[v].degrees().map(move |d| (v, d)))
        .filter(|&(v, d)| d >= d_min && n.spaces[v].dim_at(d).unwrap() > 0)
        .collect();
    if positions.is_empty() {
        return Ok(None);
    }
    let (v0, d0) = positions[rng.random_range(0..positions.len())];
    let element = random_vector(n.spaces[v0].dim_at(d0).unwrap(), rng);
    let p = projective(&n.quiver, v0, d0, d0, hi, budget)?;

    let mut components = Vec::with_capacity(n.quiver.vertex_count());
    for v in 0..n.quiver.vertex_count() {
        let (wlo, whi) = p.rep.spaces[v].overlap(&n.spaces[v]);
        let mut table = BTreeMap::new();
        for d in wlo..=whi {
            let rows = n.spaces[v].dim_at(d).unwrap();
            let empty: Vec<QuiverPath> = Vec::new();
            let paths = p.basis[v].get(&d).unwrap_or(&empty);
            let mut m = Mat::zeros(rows, paths.len());
            for (j, path) in paths.iter().enumerate() {
                if let Some(val) = act_along(n, path, d0, &element) {
                    for (i, x) in val.into_iter().enumerate() {
                        m.set(i, j, x);
                    }
                }
            }
            table.insert(d, m);
        }
        components.push(table);
    }
    Ok(Some(RepMorphism::try_new(p.rep, n.clone(), components)?))
}

/// Applies the arrow maps of `n` along a path to an element placed in degree
/// `start` at the path's source.
fn act_along(n: &TruncatedGradedRep, p: &QuiverPath, start: i64, element: &[Rat]) -> Option<Vec<Rat>> {
    let q = &n.quiver;
    let mut d = start;
    let mut value = element.to_vec();
    for &a in &p.arrows {
        value = n.map_at(a, d)?.apply(&value);
        d += q.degree(a) as i64;
    }
    Some(value)
}

/// Runs the full adjunction identity suite on seeded random representations
/// over the split: round trip, triangle identities, counit naturality, and
/// support of the counit's kernel and cokernel.
pub fn check_adjunction(
    s: &SplitData,
    samples: usize,
    window_hi: i64,
    max_dim: usize,
    seed: u64,
) -> Result<CheckReport> {
    let mut report = CheckReport::default();
    for i in 0..samples {
        let mut rng = crate::ufn::trial_rng(seed, i as u64);
        // Round trip and left triangle on the un-split side.
        let m = random_rep(&s.before, 0, window_hi, max_dim, &mut rng);
        let fm = functor_f(&m, s);
        report.record(functor_g(&fm, s) == m, || format!("sample {i}: G(F(M)) ≠ M"));
        let eps_fm = counit(&fm, s);
        report.record(eps_fm.is_identity(), || format!("sample {i}: ε_F(M) is not the identity"));
        report.record(
            functor_f(&m.shift(1), s) == fm.shift(1),
            || format!("sample {i}: F(M(1)) ≠ F(M)(1)"),
        );

        // Counit checks on the split side.
        let n = random_rep(&s.after, 0, window_hi, max_dim, &mut rng);
        let eps = counit(&n, s);
        let validated = RepMorphism::try_new(
            eps.source.clone(),
            eps.target.clone(),
            eps.components.clone(),
        );
        report.record(validated.is_ok(), || {
            format!("sample {i}: counit is not a morphism: {}", validated.as_ref().unwrap_err())
        });
        report.record(
            functor_g_mor(&eps, s) == RepMorphism::identity(&functor_g(&n, s)),
            || format!("sample {i}: G(ε_N) is not the identity"),
        );
        for (table, v) in [(eps.kernel_dims(), "kernel"), (eps.cokernel_dims(), "cokernel")] {
            for (vertex, degrees) in table.iter().enumerate() {
                if vertex == s.z_idx {
                    continue;
                }
                report.record(degrees.values().all(|&dim| dim == 0), || {
                    format!(
                        "sample {i}: {v} of ε_N is nonzero at vertex {}",
                        s.after.vertices()[vertex]
                    )
                });
            }
        }

        // Naturality against a projective-generated morphism ψ: P → N.
        if let Some(psi) = random_projective_morphism(&n, &mut rng, DEFAULT_ENUM_BUDGET)? {
            let lhs = counit(&psi.target, s).compose_after(&functor_f_mor(&functor_g_mor(&psi, s), s))?;
            let rhs = psi.compose_after(&counit(&psi.source, s))?;
            report.record(lhs == rhs, || format!("sample {i}: counit naturality square broke"));
        }
    }
    Ok(report)
}
