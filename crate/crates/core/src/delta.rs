//! The simplex category: finite ordinals `[n] = {0 < 1 < ... < n}` and the
//! order-preserving maps between them.
//!
//! Maps are stored as full value tables. Generator words (cofaces and
//! codegeneracies) are derived views produced by [`factorize`]; every
//! comparison and composition works on the tables.

use std::fmt;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DeltaError {
    #[error("cannot compose: first map lands in [{first_target}] but second map starts at [{second_source}]")]
    DimensionMismatch {
        first_target: usize,
        second_source: usize,
    },
    #[error("generator index {index} out of range on [{dim}]")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("value table {values:?} is not an order-preserving map into [{target}]")]
    NotMonotone { values: Vec<usize>, target: usize },
    #[error("a map needs at least one value")]
    EmptyTable,
    #[error("generator word {indices:?} is not in canonical order")]
    NonCanonicalWord { indices: Vec<usize> },
}

/// The finite ordinal `[n]`, with `n + 1` elements.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Ordinal(pub usize);

impl Ordinal {
    pub fn len(self) -> usize {
        self.0 + 1
    }

    pub fn is_empty(self) -> bool {
        false
    }
}

impl fmt::Display for Ordinal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.0)
    }
}

/// A monotone map `[k] -> [n]`, given by its values on `0..=k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OrdinalMap {
    target: usize,
    values: Vec<usize>,
}

impl OrdinalMap {
    pub fn new(target: usize, values: Vec<usize>) -> Result<Self, DeltaError> {
        if values.is_empty() {
            return Err(DeltaError::EmptyTable);
        }
        let monotone = values.windows(2).all(|w| w[0] <= w[1]);
        if !monotone || values.iter().any(|&v| v > target) {
            return Err(DeltaError::NotMonotone { values, target });
        }
        Ok(Self { target, values })
    }

    pub(crate) fn from_table_unchecked(target: usize, values: Vec<usize>) -> Self {
        debug_assert!(!values.is_empty());
        debug_assert!(values.windows(2).all(|w| w[0] <= w[1]));
        debug_assert!(values.iter().all(|&v| v <= target));
        Self { target, values }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_table_unchecked(n, (0..=n).collect())
    }

    /// The constant map `[k] -> [n]` with value `v`.
    pub fn constant(k: usize, n: usize, v: usize) -> Result<Self, DeltaError> {
        if v > n {
            return Err(DeltaError::IndexOutOfRange { index: v, dim: n });
        }
        Ok(Self::from_table_unchecked(n, vec![v; k + 1]))
    }

    /// The injection `[n-1] -> [n]` whose image omits `i`.
    pub fn coface(i: usize, n: usize) -> Result<Self, DeltaError> {
        if n == 0 || i > n {
            return Err(DeltaError::IndexOutOfRange { index: i, dim: n });
        }
        let values = (0..n).map(|j| if j < i { j } else { j + 1 }).collect();
        Ok(Self::from_table_unchecked(n, values))
    }

    /// The surjection `[n+1] -> [n]` hitting `i` twice.
    pub fn codegeneracy(i: usize, n: usize) -> Result<Self, DeltaError> {
        if i > n {
            return Err(DeltaError::IndexOutOfRange { index: i, dim: n });
        }
        let values = (0..=n + 1).map(|j| if j <= i { j } else { j - 1 }).collect();
        Ok(Self::from_table_unchecked(n, values))
    }

    pub fn source(&self) -> Ordinal {
        Ordinal(self.values.len() - 1)
    }

    pub fn target(&self) -> Ordinal {
        Ordinal(self.target)
    }

    pub fn source_dim(&self) -> usize {
        self.values.len() - 1
    }

    pub fn target_dim(&self) -> usize {
        self.target
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn apply(&self, j: usize) -> usize {
        self.values[j]
    }

    pub fn is_identity(&self) -> bool {
        self.values.len() == self.target + 1 && self.values.iter().enumerate().all(|(j, &v)| j == v)
    }

    pub fn is_injective(&self) -> bool {
        self.values.windows(2).all(|w| w[0] < w[1])
    }

    pub fn is_surjective(&self) -> bool {
        self.values[0] == 0
            && *self.values.last().unwrap() == self.target
            && self.values.windows(2).all(|w| w[1] - w[0] <= 1)
    }

    /// Sorted image of the map.
    pub fn image(&self) -> Vec<usize> {
        let mut image = self.values.clone();
        image.dedup();
        image
    }

    /// Elements of the target not hit by the map, in increasing order.
    pub fn missed(&self) -> Vec<usize> {
        let image = self.image();
        (0..=self.target).filter(|v| image.binary_search(v).is_err()).collect()
    }

    /// `then ∘ self`: apply `self` first.
    pub fn then(&self, then: &OrdinalMap) -> Result<OrdinalMap, DeltaError> {
        if self.target != then.source_dim() {
            return Err(DeltaError::DimensionMismatch {
                first_target: self.target,
                second_source: then.source_dim(),
            });
        }
        let values = self.values.iter().map(|&v| then.values[v]).collect();
        Ok(Self::from_table_unchecked(then.target, values))
    }
}

impl fmt::Display for OrdinalMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]->[{}](", self.source_dim(), self.target)?;
        for (j, v) in self.values.iter().enumerate() {
            if j > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str(")")
    }
}

/// `g ∘ f`. Fails unless `f` lands where `g` starts.
pub fn compose(f: &OrdinalMap, g: &OrdinalMap) -> Result<OrdinalMap, DeltaError> {
    f.then(g)
}

/// All monotone maps `[k] -> [n]` in lexicographic order of their value tables.
///
/// There are `binomial(n + k + 1, k + 1)` of them.
pub fn enumerate_maps(k: usize, n: usize) -> Vec<OrdinalMap> {
    let mut out = Vec::new();
    let mut values = vec![0usize; k + 1];
    loop {
        out.push(OrdinalMap::from_table_unchecked(n, values.clone()));
        // advance to the next weakly increasing table
        let Some(pos) = (0..=k).rev().find(|&p| values[p] < n) else {
            break;
        };
        let next = values[pos] + 1;
        for v in &mut values[pos..] {
            *v = next;
        }
    }
    out
}

/// Codegeneracies `σ_{i_1}, σ_{i_2}, ...` in application order, starting on
/// `[source_dim]`. Canonical words have strictly decreasing indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CodegeneracyWord {
    pub source_dim: usize,
    pub indices: Vec<usize>,
}

/// Cofaces `δ_{j_1}, δ_{j_2}, ...` in application order, starting on
/// `[source_dim]`. Canonical words have strictly increasing indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CofaceWord {
    pub source_dim: usize,
    pub indices: Vec<usize>,
}

impl CodegeneracyWord {
    pub fn target_dim(&self) -> usize {
        self.source_dim - self.indices.len()
    }

    pub fn is_canonical(&self) -> bool {
        self.indices.windows(2).all(|w| w[0] > w[1])
    }

    /// The composite surjection `[source_dim] -> [target_dim]`.
    pub fn to_map(&self) -> Result<OrdinalMap, DeltaError> {
        let mut acc = OrdinalMap::identity(self.source_dim);
        let mut dim = self.source_dim;
        for &i in &self.indices {
            if dim == 0 {
                return Err(DeltaError::IndexOutOfRange { index: i, dim });
            }
            acc = acc.then(&OrdinalMap::codegeneracy(i, dim - 1)?)?;
            dim -= 1;
        }
        Ok(acc)
    }
}

impl CofaceWord {
    pub fn target_dim(&self) -> usize {
        self.source_dim + self.indices.len()
    }

    pub fn is_canonical(&self) -> bool {
        self.indices.windows(2).all(|w| w[0] < w[1])
    }

    /// The composite injection `[source_dim] -> [target_dim]`.
    pub fn to_map(&self) -> Result<OrdinalMap, DeltaError> {
        let mut acc = OrdinalMap::identity(self.source_dim);
        for (dim, &j) in (self.source_dim..).zip(&self.indices) {
            acc = acc.then(&OrdinalMap::coface(j, dim + 1)?)?;
        }
        Ok(acc)
    }
}

/// Epi–mono factorization `f = mono ∘ epi`, in canonical generator words.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    pub degeneracies: CodegeneracyWord,
    pub faces: CofaceWord,
}

impl Factorization {
    pub fn recompose(&self) -> Result<OrdinalMap, DeltaError> {
        self.degeneracies.to_map()?.then(&self.faces.to_map()?)
    }
}

/// Factor `f` as a canonical codegeneracy word followed by a canonical
/// coface word.
pub fn factorize(f: &OrdinalMap) -> Factorization {
    let k = f.source_dim();
    // positions where f repeats a value, applied largest first
    let degeneracies: Vec<usize> = (0..k).rev().filter(|&j| f.values[j] == f.values[j + 1]).collect();
    let faces = f.missed();
    let image_dim = k - degeneracies.len();
    Factorization {
        degeneracies: CodegeneracyWord {
            source_dim: k,
            indices: degeneracies,
        },
        faces: CofaceWord {
            source_dim: image_dim,
            indices: faces,
        },
    }
}

/// The surjective part of `f`, `[k] -> [image size - 1]`.
pub fn epi_part(f: &OrdinalMap) -> OrdinalMap {
    let mut rank = 0;
    let mut values = Vec::with_capacity(f.values.len());
    values.push(0);
    for w in f.values.windows(2) {
        if w[1] != w[0] {
            rank += 1;
        }
        values.push(rank);
    }
    OrdinalMap::from_table_unchecked(rank, values)
}

/// The injective part of `f`, onto its image.
pub fn mono_part(f: &OrdinalMap) -> OrdinalMap {
    OrdinalMap::from_table_unchecked(f.target, f.image())
}

/// The surjection `[n] -> [n - |repeats|]` identifying `j` with `j + 1`
/// exactly for `j` in `repeats`.
pub(crate) fn surjection_with_repeats(n: usize, repeats: &[usize]) -> OrdinalMap {
    let mut values = Vec::with_capacity(n + 1);
    let mut v = 0;
    values.push(0);
    for j in 0..n {
        if !repeats.contains(&j) {
            v += 1;
        }
        values.push(v);
    }
    OrdinalMap::from_table_unchecked(v, values)
}

/// Positions `j` with `f(j) == f(j+1)`, in decreasing order.
pub(crate) fn repeat_positions(f: &OrdinalMap) -> Vec<usize> {
    let k = f.source_dim();
    (0..k).rev().filter(|&j| f.values[j] == f.values[j + 1]).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn binomial(n: usize, k: usize) -> usize {
        if k > n {
            return 0;
        }
        let mut acc = 1usize;
        for i in 0..k {
            acc = acc * (n - i) / (i + 1);
        }
        acc
    }

    fn map(target: usize, values: &[usize]) -> OrdinalMap {
        OrdinalMap::new(target, values.to_vec()).unwrap()
    }

    #[test]
    fn compose_examples() {
        let d0 = OrdinalMap::coface(0, 1).unwrap();
        let s0 = OrdinalMap::codegeneracy(0, 0).unwrap();
        assert_eq!(compose(&d0, &s0).unwrap(), OrdinalMap::identity(0));

        let d1 = OrdinalMap::coface(1, 2).unwrap();
        assert_eq!(compose(&d0, &d1).unwrap(), map(2, &[2]));

        for f in enumerate_maps(2, 3) {
            assert_eq!(compose(&OrdinalMap::identity(2), &f).unwrap(), f);
        }
        assert!(matches!(
            compose(&d0, &d0),
            Err(DeltaError::DimensionMismatch { first_target: 1, second_source: 0 })
        ));
    }

    #[test]
    fn generators_on_small_ordinals() {
        assert_eq!(OrdinalMap::coface(0, 1).unwrap().values(), &[1]);
        assert_eq!(OrdinalMap::coface(1, 1).unwrap().values(), &[0]);
        assert_eq!(OrdinalMap::codegeneracy(0, 0).unwrap().values(), &[0, 0]);
        let images: Vec<Vec<usize>> = (0..=2).map(|i| OrdinalMap::coface(i, 2).unwrap().image()).collect();
        assert_eq!(images, vec![vec![1, 2], vec![0, 2], vec![0, 1]]);
        assert!(OrdinalMap::coface(2, 1).is_err());
        assert!(OrdinalMap::coface(0, 0).is_err());
        assert!(OrdinalMap::codegeneracy(3, 2).is_err());
    }

    #[test]
    fn rejects_non_monotone_tables() {
        assert!(OrdinalMap::new(2, vec![1, 0]).is_err());
        assert!(OrdinalMap::new(1, vec![0, 2]).is_err());
        assert!(OrdinalMap::new(1, vec![]).is_err());
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_maps(0, 1).len(), 2);
        let maps = enumerate_maps(1, 2);
        assert_eq!(maps.len(), 6);
        assert_eq!(maps.iter().filter(|f| f.is_injective()).count(), 3);
        assert_eq!(maps.iter().filter(|f| f.image().len() == 1).count(), 3);
        for k in 0..=6 {
            assert_eq!(enumerate_maps(k, 0).len(), 1);
            for n in 0..=6 {
                assert_eq!(enumerate_maps(k, n).len(), binomial(n + k + 1, k + 1), "k={k} n={n}");
            }
        }
        let lex = enumerate_maps(2, 2);
        assert!(lex.windows(2).all(|w| w[0].values() < w[1].values()));
    }

    #[test]
    fn factorization_examples() {
        let id = factorize(&OrdinalMap::identity(3));
        assert!(id.degeneracies.indices.is_empty() && id.faces.indices.is_empty());

        let collapse = factorize(&OrdinalMap::codegeneracy(0, 0).unwrap());
        assert_eq!(collapse.degeneracies.indices, vec![0]);
        assert!(collapse.faces.indices.is_empty());

        let f = map(2, &[0, 0, 2]);
        let fz = factorize(&f);
        assert_eq!(fz.degeneracies, CodegeneracyWord { source_dim: 2, indices: vec![0] });
        assert_eq!(fz.faces, CofaceWord { source_dim: 1, indices: vec![1] });
    }

    /// Brute force: among all words of the right length, only the canonical
    /// one recomposes to `(0,0,2)`.
    #[test]
    fn factorization_matches_brute_force_search() {
        let f = map(2, &[0, 0, 2]);
        let mut found = Vec::new();
        for s in 0..=1 {
            for d in 0..=2 {
                let word = Factorization {
                    degeneracies: CodegeneracyWord { source_dim: 2, indices: vec![s] },
                    faces: CofaceWord { source_dim: 1, indices: vec![d] },
                };
                if word.recompose().unwrap() == f {
                    found.push((s, d));
                }
            }
        }
        assert_eq!(found, vec![(0, 1)]);
    }

    #[test]
    fn factorization_round_trips() {
        for k in 0..=5 {
            for n in 0..=5 {
                for f in enumerate_maps(k, n) {
                    let fz = factorize(&f);
                    assert!(fz.degeneracies.is_canonical() && fz.faces.is_canonical());
                    assert_eq!(fz.recompose().unwrap(), f);
                    assert_eq!(epi_part(&f).then(&mono_part(&f)).unwrap(), f);
                    assert_eq!(fz.degeneracies.to_map().unwrap(), epi_part(&f));
                }
            }
        }
    }

    #[test]
    fn cosimplicial_identities() {
        let d = |i, n| OrdinalMap::coface(i, n).unwrap();
        let s = |i, n| OrdinalMap::codegeneracy(i, n).unwrap();
        for n in 1..=6 {
            // δ_j δ_i = δ_i δ_{j-1} for i < j, as maps [n-1] -> [n+1]
            for j in 0..=n + 1 {
                for i in 0..j {
                    let lhs = d(i, n).then(&d(j, n + 1)).unwrap();
                    let rhs = d(j - 1, n).then(&d(i, n + 1)).unwrap();
                    assert_eq!(lhs, rhs);
                }
            }
        }
        for n in 0..=6 {
            // σ_j σ_i = σ_i σ_{j+1} for i <= j, as maps [n+2] -> [n]
            for j in 0..=n {
                for i in 0..=j {
                    let lhs = s(i, n + 1).then(&s(j, n)).unwrap();
                    let rhs = s(j + 1, n + 1).then(&s(i, n)).unwrap();
                    assert_eq!(lhs, rhs);
                }
            }
        }
        for n in 1..=6 {
            // σ_j δ_i as maps [n] -> [n]
            for j in 0..=n {
                for i in 0..=n + 1 {
                    let lhs = d(i, n + 1).then(&s(j, n)).unwrap();
                    if i < j {
                        assert_eq!(lhs, s(j - 1, n - 1).then(&d(i, n)).unwrap());
                    } else if i == j || i == j + 1 {
                        assert!(lhs.is_identity());
                    } else {
                        assert_eq!(lhs, s(j, n - 1).then(&d(i - 1, n)).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn composition_is_associative() {
        let mut all = Vec::new();
        for k in 0..=3 {
            for n in 0..=3 {
                all.extend(enumerate_maps(k, n));
            }
        }
        for f in &all {
            for g in all.iter().filter(|g| g.source_dim() == f.target_dim()) {
                let fg = f.then(g).unwrap();
                for h in all.iter().filter(|h| h.source_dim() == g.target_dim()) {
                    assert_eq!(fg.then(h).unwrap(), f.then(&g.then(h).unwrap()).unwrap());
                }
            }
        }
    }

    #[test]
    fn repeat_positions_invert_surjection_builder() {
        for n in 0..=5 {
            for f in enumerate_maps(n, n).into_iter().filter(|f| f.is_surjective()) {
                let reps = repeat_positions(&f);
                assert_eq!(surjection_with_repeats(n, &reps), f);
            }
        }
    }
}
