//! Finitely presented, dimension-truncated simplicial sets.
//!
//! A [`FiniteSSet`] stores only its nondegenerate simplices. Every simplex,
//! degenerate or not, is addressed by a [`SimplexRef`]: an admissible
//! degeneracy word `s_{i_1} ... s_{i_p}` (with `i_1 > ... > i_p`) applied to a
//! nondegenerate simplex. This is the Eilenberg–Zilber normal form, and it is
//! unique, so equality of simplices is equality of refs.
//!
//! The presentation carries a truncation dimension `D`: levels `0..=D` are
//! represented exactly and nothing above `D` is visible. Operations that would
//! need a level above `D` fail with [`SSetError::TruncationExceeded`].
//!
//! The degeneracy relation `s_i s_j = s_{j+1} s_i` (`i <= j`) is built into the
//! normal form; the face relations `d_i d_j = d_{j-1} d_i` (`i < j`) are what
//! [`FiniteSSet::validate`] checks.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::delta::{self, DeltaError, OrdinalMap};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SSetError {
    #[error(transparent)]
    Delta(#[from] DeltaError),
    #[error("operator starts on [{op_target}] but the simplex has dimension {simplex_dim}")]
    DimensionMismatch { op_target: usize, simplex_dim: usize },
    #[error("dimension {requested} exceeds truncation {truncation}")]
    TruncationExceeded { requested: usize, truncation: i64 },
    #[error("truncation mismatch: {left} vs {right}")]
    TruncationMismatch { left: i64, right: i64 },
    #[error("simplex {dim}:{index} does not exist")]
    UnknownSimplex { dim: usize, index: usize },
    #[error("simplex {dim}:{index} has {found} faces, expected {expected}")]
    FaceCount {
        dim: usize,
        index: usize,
        found: usize,
        expected: usize,
    },
    #[error("face {face} of simplex {dim}:{index} has dimension {found}, expected {expected}")]
    FaceDimension {
        dim: usize,
        index: usize,
        face: usize,
        found: usize,
        expected: usize,
    },
    #[error("degeneracy word {indices:?} is not admissible on a simplex of dimension {dim}")]
    InadmissibleWord { indices: Vec<usize>, dim: usize },
    #[error("map images do not match the source generators")]
    MapShape,
    #[error("map does not commute with face {face} at source simplex {dim}:{index}")]
    NotNatural { dim: usize, index: usize, face: usize },
    #[error("maps are not composable: target of the first is not the source of the second")]
    NotComposable,
}

/// A nondegenerate simplex, addressed by dimension and position in that level.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SimplexKey {
    pub dim: usize,
    pub index: usize,
}

impl SimplexKey {
    pub fn new(dim: usize, index: usize) -> Self {
        Self { dim, index }
    }
}

/// Admissible degeneracy word, indices strictly decreasing left to right.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DegeneracyWord(Vec<usize>);

impl DegeneracyWord {
    pub fn empty() -> Self {
        Self(Vec::new())
    }

    /// Checks the word is admissible on a simplex of dimension `base_dim`.
    pub fn new(indices: Vec<usize>, base_dim: usize) -> Result<Self, SSetError> {
        let decreasing = indices.windows(2).all(|w| w[0] > w[1]);
        let top = base_dim + indices.len();
        if !decreasing || indices.first().is_some_and(|&i| i >= top) {
            return Err(SSetError::InadmissibleWord { indices, dim: base_dim });
        }
        Ok(Self(indices))
    }

    /// The word `s_{n-1} ... s_1 s_0`, taking a vertex to dimension `n`.
    pub fn total(n: usize) -> Self {
        Self((0..n).rev().collect())
    }

    /// Word of the surjection `η`, so that `η^* y` is this word applied to `y`.
    pub fn from_surjection(eta: &OrdinalMap) -> Self {
        debug_assert!(eta.is_surjective());
        Self(delta::repeat_positions(eta))
    }

    /// The surjection `[dim] -> [dim - len]` this word encodes.
    pub fn to_surjection(&self, dim: usize) -> OrdinalMap {
        delta::surjection_with_repeats(dim, &self.0)
    }

    pub fn indices(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// A simplex of any level, in normal form.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SimplexRef {
    pub word: DegeneracyWord,
    pub key: SimplexKey,
}

impl SimplexRef {
    pub fn nondegenerate(key: SimplexKey) -> Self {
        Self {
            word: DegeneracyWord::empty(),
            key,
        }
    }

    pub fn new(word: DegeneracyWord, key: SimplexKey) -> Self {
        Self { word, key }
    }

    pub fn dim(&self) -> usize {
        self.key.dim + self.word.len()
    }

    pub fn is_degenerate(&self) -> bool {
        !self.word.is_empty()
    }

    /// The surjection `η` with `self = η^* key`.
    pub fn degeneracy_map(&self) -> OrdinalMap {
        self.word.to_surjection(self.dim())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Simplex {
    pub label: Option<String>,
    /// Entry `i` is `d_i` of this simplex; empty for vertices.
    pub faces: Vec<SimplexRef>,
}

impl Simplex {
    pub fn vertex(label: impl Into<String>) -> Self {
        Self {
            label: Some(label.into()),
            faces: Vec::new(),
        }
    }

    pub fn new(label: Option<String>, faces: Vec<SimplexRef>) -> Self {
        Self { label, faces }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteSSet {
    truncation: Option<usize>,
    levels: Vec<Vec<Simplex>>,
}

fn trunc_num(t: Option<usize>) -> i64 {
    t.map_or(-1, |d| d as i64)
}

impl FiniteSSet {
    /// The empty simplicial set. `None` encodes truncation `-1`.
    pub fn empty(truncation: Option<usize>) -> Self {
        Self {
            truncation,
            levels: Vec::new(),
        }
    }

    /// Builds a presentation from its nondegenerate simplices, checking that
    /// every face reference resolves to a simplex of the right dimension.
    pub fn from_levels(truncation: Option<usize>, mut levels: Vec<Vec<Simplex>>) -> Result<Self, SSetError> {
        while levels.last().is_some_and(|l| l.is_empty()) {
            levels.pop();
        }
        let cap = levels.len();
        if cap > 0 && truncation.is_none_or(|d| cap > d + 1) {
            return Err(SSetError::TruncationExceeded {
                requested: cap - 1,
                truncation: trunc_num(truncation),
            });
        }
        for (dim, level) in levels.iter().enumerate() {
            for (index, simplex) in level.iter().enumerate() {
                let expected = if dim == 0 { 0 } else { dim + 1 };
                if simplex.faces.len() != expected {
                    return Err(SSetError::FaceCount {
                        dim,
                        index,
                        found: simplex.faces.len(),
                        expected,
                    });
                }
                for (face, r) in simplex.faces.iter().enumerate() {
                    if r.dim() != dim - 1 {
                        return Err(SSetError::FaceDimension {
                            dim,
                            index,
                            face,
                            found: r.dim(),
                            expected: dim - 1,
                        });
                    }
                    if r.key.index >= levels[r.key.dim].len() {
                        return Err(SSetError::UnknownSimplex {
                            dim: r.key.dim,
                            index: r.key.index,
                        });
                    }
                    DegeneracyWord::new(r.word.0.clone(), r.key.dim)?;
                }
            }
        }
        Ok(Self { truncation, levels })
    }

    pub fn truncation(&self) -> Option<usize> {
        self.truncation
    }

    /// Truncation as a signed integer, `-1` for the bare empty set.
    pub fn truncation_num(&self) -> i64 {
        trunc_num(self.truncation)
    }

    /// Highest dimension carrying a nondegenerate simplex.
    pub fn top_dim(&self) -> Option<usize> {
        self.levels.len().checked_sub(1)
    }

    pub fn is_empty(&self) -> bool {
        self.levels.is_empty()
    }

    pub fn count(&self, dim: usize) -> usize {
        self.levels.get(dim).map_or(0, Vec::len)
    }

    /// Nondegenerate simplex counts by dimension, up to the top dimension.
    pub fn f_vector(&self) -> Vec<usize> {
        self.levels.iter().map(Vec::len).collect()
    }

    pub fn levels(&self) -> &[Vec<Simplex>] {
        &self.levels
    }

    pub fn simplex(&self, key: SimplexKey) -> Option<&Simplex> {
        self.levels.get(key.dim)?.get(key.index)
    }

    pub fn label(&self, key: SimplexKey) -> Option<&str> {
        self.simplex(key)?.label.as_deref()
    }

    /// Keys of all nondegenerate simplices of dimension `dim`.
    pub fn keys(&self, dim: usize) -> impl Iterator<Item = SimplexKey> + '_ {
        (0..self.count(dim)).map(move |index| SimplexKey { dim, index })
    }

    pub fn all_keys(&self) -> impl Iterator<Item = SimplexKey> + '_ {
        (0..self.levels.len()).flat_map(move |d| self.keys(d))
    }

    /// Finds a vertex by label.
    pub fn vertex_by_label(&self, label: &str) -> Option<SimplexKey> {
        self.keys(0).find(|&k| self.label(k) == Some(label))
    }

    pub fn contains(&self, key: SimplexKey) -> bool {
        key.index < self.count(key.dim)
    }

    pub(crate) fn with_truncation(mut self, truncation: Option<usize>) -> Self {
        self.truncation = truncation;
        self
    }

    fn check_level(&self, dim: usize) -> Result<(), SSetError> {
        if self.truncation.is_none_or(|d| dim > d) {
            return Err(SSetError::TruncationExceeded {
                requested: dim,
                truncation: self.truncation_num(),
            });
        }
        Ok(())
    }

    /// Acts on `x` by the simplicial operator `op : [k] -> [n]` (contravariantly),
    /// returning the normal form of `op^* x`.
    pub fn apply_operator(&self, op: &OrdinalMap, x: &SimplexRef) -> Result<SimplexRef, SSetError> {
        if op.target_dim() != x.dim() {
            return Err(SSetError::DimensionMismatch {
                op_target: op.target_dim(),
                simplex_dim: x.dim(),
            });
        }
        if !self.contains(x.key) {
            return Err(SSetError::UnknownSimplex {
                dim: x.key.dim,
                index: x.key.index,
            });
        }
        self.check_level(op.source_dim())?;
        // op^* (η^* y) = (η ∘ op)^* y
        let mut phi = op.then(&x.degeneracy_map())?;
        let mut key = x.key;
        loop {
            if phi.is_surjective() {
                return Ok(SimplexRef::new(DegeneracyWord::from_surjection(&phi), key));
            }
            // φ misses some i, so φ = δ_i ∘ φ' and φ^* y = φ'^* (d_i y)
            let i = phi.missed()[0];
            let lowered: Vec<usize> = phi.values().iter().map(|&v| if v > i { v - 1 } else { v }).collect();
            let phi_prime = OrdinalMap::from_table_unchecked(phi.target_dim() - 1, lowered);
            let face = &self.levels[key.dim][key.index].faces[i];
            phi = phi_prime.then(&face.degeneracy_map())?;
            key = face.key;
        }
    }

    /// `d_i x`.
    pub fn face(&self, x: &SimplexRef, i: usize) -> Result<SimplexRef, SSetError> {
        self.apply_operator(&OrdinalMap::coface(i, x.dim())?, x)
    }

    /// `s_i x`.
    pub fn degeneracy(&self, x: &SimplexRef, i: usize) -> Result<SimplexRef, SSetError> {
        self.apply_operator(&OrdinalMap::codegeneracy(i, x.dim())?, x)
    }

    /// All faces `d_0 x, ..., d_n x` of a simplex of dimension `n >= 1`.
    pub fn faces_of(&self, x: &SimplexRef) -> Result<Vec<SimplexRef>, SSetError> {
        (0..=x.dim()).map(|i| self.face(x, i)).collect()
    }

    /// Vertices of `x`, in order: the images of `0, ..., n` under `x : Δ[n] -> K`.
    pub fn vertices_of(&self, x: &SimplexRef) -> Result<Vec<SimplexKey>, SSetError> {
        (0..=x.dim())
            .map(|v| {
                let op = OrdinalMap::constant(0, x.dim(), v)?;
                Ok(self.apply_operator(&op, x)?.key)
            })
            .collect()
    }

    /// Every simplex of dimension `n`, degenerate ones included.
    ///
    /// Ordered by nondegenerate simplex (dimension, then index), then by
    /// degeneracy word in lexicographic order.
    pub fn level_set(&self, n: usize) -> Result<Vec<SimplexRef>, SSetError> {
        self.check_level(n)?;
        let mut out = Vec::new();
        for m in 0..=n.min(self.levels.len().saturating_sub(1)) {
            if m >= self.levels.len() {
                break;
            }
            let words = admissible_words(n, n - m);
            for key in self.keys(m) {
                for w in &words {
                    out.push(SimplexRef::new(w.clone(), key));
                }
            }
        }
        Ok(out)
    }

    /// Checks `d_i d_j = d_{j-1} d_i` for `i < j` on every nondegenerate
    /// simplex of dimension at least 2.
    pub fn validate(&self) -> ValidationReport {
        let mut violations = Vec::new();
        for dim in 2..self.levels.len() {
            for key in self.keys(dim) {
                let faces = &self.levels[dim][key.index].faces;
                for j in 1..=dim {
                    for i in 0..j {
                        let lhs = self.face(&faces[j], i);
                        let rhs = self.face(&faces[i], j - 1);
                        match (lhs, rhs) {
                            (Ok(l), Ok(r)) if l == r => {}
                            (Ok(l), Ok(r)) => violations.push(Violation {
                                simplex: key,
                                i,
                                j,
                                lhs: self.describe(&l),
                                rhs: self.describe(&r),
                            }),
                            (l, r) => violations.push(Violation {
                                simplex: key,
                                i,
                                j,
                                lhs: l.map_or_else(|e| e.to_string(), |s| self.describe(&s)),
                                rhs: r.map_or_else(|e| e.to_string(), |s| self.describe(&s)),
                            }),
                        }
                    }
                }
            }
        }
        ValidationReport { violations }
    }

    /// Human-readable name of a simplex, e.g. `s1 s0 v`.
    pub fn describe(&self, x: &SimplexRef) -> String {
        let base = match self.label(x.key) {
            Some(l) => l.to_string(),
            None => format!("x{}_{}", x.key.dim, x.key.index),
        };
        let mut parts: Vec<String> = x.word.indices().iter().map(|i| format!("s{i}")).collect();
        parts.push(base);
        parts.join(" ")
    }
}

/// All admissible words of length `len` landing in dimension `n`, in
/// lexicographic order.
pub(crate) fn admissible_words(n: usize, len: usize) -> Vec<DegeneracyWord> {
    // a word is a `len`-subset of {0, ..., n-1}, listed decreasingly
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(len);
    fn rec(start: usize, n: usize, len: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if current.len() == len {
            let mut w = current.clone();
            w.reverse();
            out.push(w);
            return;
        }
        for i in start..n {
            current.push(i);
            rec(i + 1, n, len, current, out);
            current.pop();
        }
    }
    let mut raw = Vec::new();
    rec(0, n, len, &mut current, &mut raw);
    raw.sort();
    out.extend(raw.into_iter().map(DegeneracyWord));
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub simplex: SimplexKey,
    pub i: usize,
    pub j: usize,
    pub lhs: String,
    pub rhs: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "simplex {}:{}: d{} d{} = {} but d{} d{} = {}",
            self.simplex.dim,
            self.simplex.index,
            self.i,
            self.j,
            self.lhs,
            self.j - 1,
            self.i,
            self.rhs
        )
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

/// A map of simplicial sets, stored by its values on nondegenerate generators.
#[derive(Debug, Clone)]
pub struct SimplicialMap {
    source: Arc<FiniteSSet>,
    target: Arc<FiniteSSet>,
    images: Vec<Vec<SimplexRef>>,
}

impl PartialEq for SimplicialMap {
    fn eq(&self, other: &Self) -> bool {
        self.images == other.images && same(&self.source, &other.source) && same(&self.target, &other.target)
    }
}

impl Eq for SimplicialMap {}

fn same(a: &Arc<FiniteSSet>, b: &Arc<FiniteSSet>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

impl SimplicialMap {
    /// Checks that `images` commute with every face map.
    pub fn new(
        source: Arc<FiniteSSet>,
        target: Arc<FiniteSSet>,
        images: Vec<Vec<SimplexRef>>,
    ) -> Result<Self, SSetError> {
        let map = Self::new_unchecked(source, target, images)?;
        map.check_naturality()?;
        Ok(map)
    }

    fn new_unchecked(
        source: Arc<FiniteSSet>,
        target: Arc<FiniteSSet>,
        images: Vec<Vec<SimplexRef>>,
    ) -> Result<Self, SSetError> {
        if images.len() != source.levels.len()
            || images.iter().zip(&source.levels).any(|(img, lvl)| img.len() != lvl.len())
        {
            return Err(SSetError::MapShape);
        }
        for (dim, level) in images.iter().enumerate() {
            for r in level {
                if r.dim() != dim || !target.contains(r.key) {
                    return Err(SSetError::MapShape);
                }
            }
        }
        Ok(Self { source, target, images })
    }

    fn check_naturality(&self) -> Result<(), SSetError> {
        for dim in 1..self.source.levels.len() {
            for (index, simplex) in self.source.levels[dim].iter().enumerate() {
                let img = &self.images[dim][index];
                for (i, face) in simplex.faces.iter().enumerate() {
                    let via_face = self.apply(face)?;
                    let via_image = self.target.face(img, i)?;
                    if via_face != via_image {
                        return Err(SSetError::NotNatural { dim, index, face: i });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn source(&self) -> &FiniteSSet {
        &self.source
    }

    pub fn target(&self) -> &FiniteSSet {
        &self.target
    }

    pub fn source_arc(&self) -> &Arc<FiniteSSet> {
        &self.source
    }

    pub fn target_arc(&self) -> &Arc<FiniteSSet> {
        &self.target
    }

    pub fn images(&self) -> &[Vec<SimplexRef>] {
        &self.images
    }

    pub fn image(&self, key: SimplexKey) -> &SimplexRef {
        &self.images[key.dim][key.index]
    }

    /// Image of an arbitrary simplex: `f(η^* y) = η^* f(y)`.
    pub fn apply(&self, x: &SimplexRef) -> Result<SimplexRef, SSetError> {
        if !self.source.contains(x.key) {
            return Err(SSetError::UnknownSimplex {
                dim: x.key.dim,
                index: x.key.index,
            });
        }
        let fy = self.image(x.key);
        if x.word.is_empty() {
            return Ok(fy.clone());
        }
        self.target.apply_operator(&x.degeneracy_map(), fy)
    }

    /// True when the map is a bijection on nondegenerate simplices in every
    /// dimension.
    pub fn is_isomorphism(&self) -> bool {
        if self.source.f_vector() != self.target.f_vector() {
            return false;
        }
        self.images.iter().enumerate().all(|(dim, level)| {
            let mut hit = vec![false; self.target.count(dim)];
            level.iter().all(|r| {
                if r.is_degenerate() || hit[r.key.index] {
                    return false;
                }
                hit[r.key.index] = true;
                true
            })
        })
    }
}

pub fn identity_map(k: &Arc<FiniteSSet>) -> SimplicialMap {
    let images = k
        .levels
        .iter()
        .enumerate()
        .map(|(dim, lvl)| (0..lvl.len()).map(|index| SimplexRef::nondegenerate(SimplexKey { dim, index })).collect())
        .collect();
    SimplicialMap {
        source: k.clone(),
        target: k.clone(),
        images,
    }
}

/// `g ∘ f`.
pub fn compose_maps(f: &SimplicialMap, g: &SimplicialMap) -> Result<SimplicialMap, SSetError> {
    if !same(&f.target, &g.source) {
        return Err(SSetError::NotComposable);
    }
    let images = f
        .images
        .iter()
        .map(|lvl| lvl.iter().map(|r| g.apply(r)).collect::<Result<Vec<_>, _>>())
        .collect::<Result<Vec<_>, _>>()?;
    Ok(SimplicialMap {
        source: f.source.clone(),
        target: g.target.clone(),
        images,
    })
}

/// A level of the target together with each element's faces, indexed for
/// lookup by face tuple.
struct IndexedLevel {
    simplices: Vec<SimplexRef>,
    by_faces: HashMap<Vec<SimplexRef>, Vec<usize>>,
}

impl IndexedLevel {
    fn new(target: &FiniteSSet, n: usize) -> Result<Self, SSetError> {
        let simplices = target.level_set(n)?;
        let mut by_faces: HashMap<Vec<SimplexRef>, Vec<usize>> = HashMap::new();
        for (pos, s) in simplices.iter().enumerate() {
            let faces = if n == 0 { Vec::new() } else { target.faces_of(s)? };
            by_faces.entry(faces).or_default().push(pos);
        }
        Ok(Self { simplices, by_faces })
    }
}

/// Depth-first search over assignments `generator -> simplex of L` that commute
/// with faces. `visit` returns `false` to stop the search.
pub(crate) fn search_maps(
    source: &FiniteSSet,
    target: &FiniteSSet,
    mut visit: impl FnMut(&[Vec<SimplexRef>]) -> bool,
) -> Result<(), SSetError> {
    if let Some(top) = source.top_dim() {
        match target.truncation() {
            Some(d) if d >= top => {}
            _ => {
                return Err(SSetError::TruncationMismatch {
                    left: top as i64,
                    right: target.truncation_num(),
                });
            }
        }
    }
    let indexed = (0..source.levels.len())
        .map(|n| IndexedLevel::new(target, n))
        .collect::<Result<Vec<_>, _>>()?;
    let order: Vec<SimplexKey> = source.all_keys().collect();
    let mut images: Vec<Vec<SimplexRef>> = source
        .levels
        .iter()
        .map(|lvl| vec![SimplexRef::nondegenerate(SimplexKey::new(0, 0)); lvl.len()])
        .collect();

    struct Search<'a, F> {
        source: &'a FiniteSSet,
        target: &'a FiniteSSet,
        indexed: &'a [IndexedLevel],
        order: &'a [SimplexKey],
        images: &'a mut Vec<Vec<SimplexRef>>,
        visit: F,
    }

    impl<F: FnMut(&[Vec<SimplexRef>]) -> bool> Search<'_, F> {
        fn image_of(&self, r: &SimplexRef) -> Result<SimplexRef, SSetError> {
            let fy = &self.images[r.key.dim][r.key.index];
            if r.word.is_empty() {
                Ok(fy.clone())
            } else {
                self.target.apply_operator(&r.degeneracy_map(), fy)
            }
        }

        fn run(&mut self, pos: usize) -> Result<bool, SSetError> {
            if pos == self.order.len() {
                return Ok((self.visit)(self.images));
            }
            let key = self.order[pos];
            let level = &self.indexed[key.dim];
            let candidates: Vec<usize> = if key.dim == 0 {
                (0..level.simplices.len()).collect()
            } else {
                let wanted = self.source.levels[key.dim][key.index]
                    .faces
                    .iter()
                    .map(|f| self.image_of(f))
                    .collect::<Result<Vec<_>, _>>()?;
                level.by_faces.get(&wanted).cloned().unwrap_or_default()
            };
            for c in candidates {
                self.images[key.dim][key.index] = level.simplices[c].clone();
                if !self.run(pos + 1)? {
                    return Ok(false);
                }
            }
            Ok(true)
        }
    }

    let mut search = Search {
        source,
        target,
        indexed: &indexed,
        order: &order,
        images: &mut images,
        visit: &mut visit,
    };
    search.run(0)?;
    Ok(())
}

/// Every simplicial map `K -> L`, in deterministic order.
///
/// Requires every nondegenerate simplex of `K` to sit within the truncation
/// of `L`.
pub fn enumerate_simplicial_maps(k: &FiniteSSet, l: &FiniteSSet) -> Result<Vec<SimplicialMap>, SSetError> {
    let source = Arc::new(k.clone());
    let target = Arc::new(l.clone());
    let mut out = Vec::new();
    search_maps(k, l, |images| {
        out.push(SimplicialMap {
            source: source.clone(),
            target: target.clone(),
            images: images.to_vec(),
        });
        true
    })?;
    Ok(out)
}

/// `|Hom(K, L)|` without materializing the maps.
pub fn count_simplicial_maps(k: &FiniteSSet, l: &FiniteSSet) -> Result<usize, SSetError> {
    let mut n = 0;
    search_maps(k, l, |_| {
        n += 1;
        true
    })?;
    Ok(n)
}
