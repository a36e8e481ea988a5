//! Builders for standard simplicial sets and the operations combining them.

use std::collections::{BTreeSet, HashMap};
use std::sync::Arc;

use thiserror::Error;

use crate::complexes::OrientedComplex;
use crate::delta::{self, OrdinalMap};
use crate::sset::{
    DegeneracyWord, FiniteSSet, SSetError, Simplex, SimplexKey, SimplexRef, SimplicialMap, admissible_words,
    enumerate_simplicial_maps,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error(transparent)]
    SSet(#[from] SSetError),
    #[error("dimension {n} does not fit in truncation {truncation}")]
    TooLarge { n: usize, truncation: usize },
    #[error("horn index {k} out of range for dimension {n}")]
    HornIndex { n: usize, k: usize },
    #[error("truncation mismatch: {left} vs {right}")]
    TruncationMismatch { left: i64, right: i64 },
    #[error("cannot collapse an empty subobject")]
    EmptySubobject,
    #[error("subobject is not closed under faces: {dim}:{index} has a face outside it")]
    NotFaceClosed { dim: usize, index: usize },
    #[error("subobject does not match its parent")]
    SubobjectShape,
    #[error("simplex {{{}}} is not totally ordered", .0.join(","))]
    NotAChain(Vec<String>),
}

/// Face-closed subset of the nondegenerate simplices of a parent presentation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubSSet {
    members: Vec<Vec<bool>>,
}

impl SubSSet {
    pub fn new(parent: &FiniteSSet, keys: impl IntoIterator<Item = SimplexKey>) -> Result<Self, ConstructionError> {
        let mut members: Vec<Vec<bool>> = parent.f_vector().iter().map(|&n| vec![false; n]).collect();
        for k in keys {
            if !parent.contains(k) {
                return Err(SSetError::UnknownSimplex { dim: k.dim, index: k.index }.into());
            }
            members[k.dim][k.index] = true;
        }
        let sub = Self { members };
        sub.check_closed(parent)?;
        Ok(sub)
    }

    /// The smallest face-closed subobject containing `keys`.
    pub fn generated_by(parent: &FiniteSSet, keys: impl IntoIterator<Item = SimplexKey>) -> Result<Self, ConstructionError> {
        let mut members: Vec<Vec<bool>> = parent.f_vector().iter().map(|&n| vec![false; n]).collect();
        let mut stack: Vec<SimplexKey> = keys.into_iter().collect();
        while let Some(k) = stack.pop() {
            let simplex = parent
                .simplex(k)
                .ok_or(SSetError::UnknownSimplex { dim: k.dim, index: k.index })?;
            if std::mem::replace(&mut members[k.dim][k.index], true) {
                continue;
            }
            stack.extend(simplex.faces.iter().map(|f| f.key));
        }
        Ok(Self { members })
    }

    fn check_closed(&self, parent: &FiniteSSet) -> Result<(), ConstructionError> {
        if self.members.len() != parent.levels().len()
            || self.members.iter().zip(parent.levels()).any(|(m, l)| m.len() != l.len())
        {
            return Err(ConstructionError::SubobjectShape);
        }
        for key in parent.all_keys() {
            if self.contains(key) {
                let simplex = parent.simplex(key).unwrap();
                if simplex.faces.iter().any(|f| !self.contains(f.key)) {
                    return Err(ConstructionError::NotFaceClosed {
                        dim: key.dim,
                        index: key.index,
                    });
                }
            }
        }
        Ok(())
    }

    pub fn contains(&self, key: SimplexKey) -> bool {
        self.members.get(key.dim).and_then(|l| l.get(key.index)).copied().unwrap_or(false)
    }

    pub fn is_empty(&self) -> bool {
        self.members.iter().all(|l| l.iter().all(|&b| !b))
    }

    pub fn keys(&self) -> Vec<SimplexKey> {
        self.members
            .iter()
            .enumerate()
            .flat_map(|(dim, l)| {
                l.iter()
                    .enumerate()
                    .filter(|(_, b)| **b)
                    .map(move |(index, _)| SimplexKey { dim, index })
            })
            .collect()
    }

    /// The subobject as a simplicial set, with its inclusion into the parent.
    pub fn to_sset(&self, parent: &FiniteSSet) -> Result<(FiniteSSet, SimplicialMap), ConstructionError> {
        self.check_closed(parent)?;
        let mut renumber: HashMap<SimplexKey, SimplexKey> = HashMap::new();
        let mut levels: Vec<Vec<Simplex>> = Vec::new();
        let mut images: Vec<Vec<SimplexRef>> = Vec::new();
        for key in parent.all_keys().filter(|&k| self.contains(k)) {
            while levels.len() <= key.dim {
                levels.push(Vec::new());
                images.push(Vec::new());
            }
            let old = parent.simplex(key).unwrap();
            let faces = old
                .faces
                .iter()
                .map(|f| SimplexRef::new(f.word.clone(), renumber[&f.key]))
                .collect();
            renumber.insert(key, SimplexKey::new(key.dim, levels[key.dim].len()));
            levels[key.dim].push(Simplex::new(old.label.clone(), faces));
            images[key.dim].push(SimplexRef::nondegenerate(key));
        }
        let sub = Arc::new(FiniteSSet::from_levels(parent.truncation(), levels)?);
        let inclusion = SimplicialMap::new(sub.clone(), Arc::new(parent.clone()), images)?;
        Ok(((*sub).clone(), inclusion))
    }
}

/// Builds a presentation whose nondegenerate simplices are vertex tuples, each
/// listed in orientation order; the `i`-th face drops the `i`-th vertex. Every
/// face of a listed tuple must itself be listed.
fn from_ordered_tuples(
    labels: &[String],
    tuples: &BTreeSet<Vec<usize>>,
    truncation: Option<usize>,
) -> Result<FiniteSSet, SSetError> {
    let top = tuples.iter().map(Vec::len).max().unwrap_or(0);
    let mut by_dim: Vec<Vec<&Vec<usize>>> = vec![Vec::new(); top];
    for t in tuples {
        by_dim[t.len() - 1].push(t);
    }
    let mut index: HashMap<&[usize], usize> = HashMap::new();
    let mut levels = Vec::with_capacity(top);
    for (dim, list) in by_dim.iter().enumerate() {
        let mut level = Vec::with_capacity(list.len());
        for (pos, t) in list.iter().enumerate() {
            index.insert(t.as_slice(), pos);
            if dim == 0 {
                level.push(Simplex::vertex(labels[t[0]].clone()));
                continue;
            }
            let faces = (0..=dim)
                .map(|i| {
                    let mut f = (*t).clone();
                    f.remove(i);
                    let at = index[f.as_slice()];
                    SimplexRef::nondegenerate(SimplexKey::new(dim - 1, at))
                })
                .collect();
            level.push(Simplex::new(None, faces));
        }
        levels.push(level);
    }
    FiniteSSet::from_levels(truncation, levels)
}

fn numbered_labels(n: usize) -> Vec<String> {
    (0..=n).map(|i| i.to_string()).collect()
}

fn subsets_of_ordinal(n: usize) -> impl Iterator<Item = Vec<usize>> {
    (1u64..1u64 << (n + 1)).map(move |mask| (0..=n).filter(|b| mask >> b & 1 == 1).collect())
}

/// `Δ[n]`: nondegenerate `k`-simplices are the injective monotone maps
/// `[k] -> [n]`. Vertices are labelled `0..=n`.
pub fn standard_simplex(n: usize, truncation: usize) -> Result<FiniteSSet, ConstructionError> {
    if n > truncation {
        return Err(ConstructionError::TooLarge { n, truncation });
    }
    let tuples = subsets_of_ordinal(n).collect();
    Ok(from_ordered_tuples(&numbered_labels(n), &tuples, Some(truncation))?)
}

/// `∂Δ[n]`, which is empty for `n = 0`.
pub fn boundary(n: usize, truncation: usize) -> Result<FiniteSSet, ConstructionError> {
    if n > truncation + 1 {
        return Err(ConstructionError::TooLarge { n, truncation });
    }
    let tuples = subsets_of_ordinal(n).filter(|s| s.len() < n + 1).collect();
    Ok(from_ordered_tuples(&numbered_labels(n), &tuples, Some(truncation))?)
}

/// `Λ^k[n]`: the boundary without the face opposite vertex `k`.
pub fn horn(n: usize, k: usize, truncation: usize) -> Result<FiniteSSet, ConstructionError> {
    if n == 0 || k > n {
        return Err(ConstructionError::HornIndex { n, k });
    }
    if n > truncation + 1 {
        return Err(ConstructionError::TooLarge { n, truncation });
    }
    let tuples = subsets_of_ordinal(n)
        .filter(|s| s.len() < n + 1 && !(s.len() == n && !s.contains(&k)))
        .collect();
    Ok(from_ordered_tuples(&numbered_labels(n), &tuples, Some(truncation))?)
}

fn join_truncations(k: &FiniteSSet, l: &FiniteSSet) -> Result<Option<usize>, ConstructionError> {
    match (k.truncation(), l.truncation()) {
        (None, t) | (t, None) => Ok(t),
        (Some(a), Some(b)) if a == b => Ok(Some(a)),
        (Some(a), Some(b)) => Err(ConstructionError::TruncationMismatch {
            left: a as i64,
            right: b as i64,
        }),
    }
}

/// The product with its two projections.
#[derive(Debug, Clone)]
pub struct Product {
    pub sset: FiniteSSet,
    pub left: SimplicialMap,
    pub right: SimplicialMap,
}

/// Writes a pair of `n`-simplices `(a, b)` as `γ^* (a', b')` with `γ` the
/// largest common degeneracy and `(a', b')` a nondegenerate pair.
fn split_pair(a: &SimplexRef, b: &SimplexRef) -> (DegeneracyWord, SimplexRef, SimplexRef) {
    let n = a.dim();
    let common: Vec<usize> = a.word.indices().iter().copied().filter(|i| b.word.indices().contains(i)).collect();
    let gamma = delta::surjection_with_repeats(n, &common);
    let reduce = |x: &SimplexRef| {
        let alpha = x.degeneracy_map();
        // α factors as α' ∘ γ; read α' off one preimage per point
        let mut values = vec![0; gamma.target_dim() + 1];
        for j in 0..=n {
            values[gamma.apply(j)] = alpha.apply(j);
        }
        let alpha_prime = OrdinalMap::new(alpha.target_dim(), values).expect("quotient of a monotone map");
        SimplexRef::new(DegeneracyWord::from_surjection(&alpha_prime), x.key)
    };
    let word = DegeneracyWord::from_surjection(&gamma);
    (word, reduce(a), reduce(b))
}

fn disjoint(a: &DegeneracyWord, b: &DegeneracyWord) -> bool {
    a.indices().iter().all(|i| !b.indices().contains(i))
}

/// `K × L`, computed levelwise through the shuffle description: the
/// nondegenerate `n`-simplices are pairs `(s_A y, s_B z)` with disjoint
/// degeneracy index sets `A`, `B`.
pub fn product(k: &FiniteSSet, l: &FiniteSSet) -> Result<Product, ConstructionError> {
    let truncation = join_truncations(k, l)?;
    let top = match (k.top_dim(), l.top_dim(), truncation) {
        (Some(p), Some(q), Some(d)) => (p + q).min(d),
        _ => {
            let empty = Arc::new(FiniteSSet::empty(truncation));
            let proj = |t: &FiniteSSet| SimplicialMap::new(empty.clone(), Arc::new(t.clone()), Vec::new());
            return Ok(Product {
                sset: (*empty).clone(),
                left: proj(k)?,
                right: proj(l)?,
            });
        }
    };
    let mut index: HashMap<(SimplexRef, SimplexRef), usize> = HashMap::new();
    let mut levels: Vec<Vec<Simplex>> = Vec::with_capacity(top + 1);
    let mut left_images: Vec<Vec<SimplexRef>> = Vec::with_capacity(top + 1);
    let mut right_images: Vec<Vec<SimplexRef>> = Vec::with_capacity(top + 1);
    for n in 0..=top {
        let mut level = Vec::new();
        let (mut li, mut ri) = (Vec::new(), Vec::new());
        for p in 0..=n.min(k.top_dim().unwrap()) {
            for q in 0..=n.min(l.top_dim().unwrap()) {
                if p + q < n {
                    continue;
                }
                let left_words = admissible_words(n, n - p);
                let right_words = admissible_words(n, n - q);
                for y in k.keys(p) {
                    for z in l.keys(q) {
                        for wa in &left_words {
                            for wb in right_words.iter().filter(|wb| disjoint(wa, wb)) {
                                let a = SimplexRef::new(wa.clone(), y);
                                let b = SimplexRef::new(wb.clone(), z);
                                let faces = if n == 0 {
                                    Vec::new()
                                } else {
                                    (0..=n)
                                        .map(|i| {
                                            let (word, fa, fb) = split_pair(&k.face(&a, i)?, &l.face(&b, i)?);
                                            let dim = fa.dim();
                                            let at = index[&(fa, fb)];
                                            Ok(SimplexRef::new(word, SimplexKey::new(dim, at)))
                                        })
                                        .collect::<Result<Vec<_>, SSetError>>()?
                                };
                                let label = (n == 0).then(|| {
                                    format!(
                                        "({},{})",
                                        k.describe(&a),
                                        l.describe(&b)
                                    )
                                });
                                index.insert((a.clone(), b.clone()), level.len());
                                level.push(Simplex::new(label, faces));
                                li.push(a);
                                ri.push(b);
                            }
                        }
                    }
                }
            }
        }
        levels.push(level);
        left_images.push(li);
        right_images.push(ri);
    }
    let sset = Arc::new(FiniteSSet::from_levels(truncation, levels)?);
    let left_target = Arc::new(k.clone().with_truncation_of(truncation));
    let right_target = Arc::new(l.clone().with_truncation_of(truncation));
    let left = SimplicialMap::new(sset.clone(), left_target, left_images)?;
    let right = SimplicialMap::new(sset.clone(), right_target, right_images)?;
    Ok(Product {
        sset: (*sset).clone(),
        left,
        right,
    })
}

trait RetruncateEmpty {
    fn with_truncation_of(self, t: Option<usize>) -> Self;
}

impl RetruncateEmpty for FiniteSSet {
    /// Empty factors adopt the joined truncation so their maps line up.
    fn with_truncation_of(self, t: Option<usize>) -> Self {
        if self.truncation().is_none() { self.with_truncation(t) } else { self }
    }
}

/// Disjoint union; the simplices of `L` follow those of `K` in each level.
pub fn coproduct(k: &FiniteSSet, l: &FiniteSSet) -> Result<FiniteSSet, ConstructionError> {
    let truncation = join_truncations(k, l)?;
    let top = k.levels().len().max(l.levels().len());
    let mut levels: Vec<Vec<Simplex>> = vec![Vec::new(); top];
    for (dim, lvl) in k.levels().iter().enumerate() {
        levels[dim].extend(lvl.iter().cloned());
    }
    let offset = k.f_vector();
    for (dim, lvl) in l.levels().iter().enumerate() {
        for s in lvl {
            let faces = s
                .faces
                .iter()
                .map(|f| {
                    let shift = offset.get(f.key.dim).copied().unwrap_or(0);
                    SimplexRef::new(f.word.clone(), SimplexKey::new(f.key.dim, f.key.index + shift))
                })
                .collect();
            levels[dim].push(Simplex::new(s.label.clone(), faces));
        }
    }
    Ok(FiniteSSet::from_levels(truncation, levels)?)
}

/// `K / A`: collapses the subobject `A` to a new base vertex `*`, placed
/// first among the vertices. Returns the quotient and the projection.
pub fn collapse(k: &FiniteSSet, a: &SubSSet) -> Result<(FiniteSSet, SimplicialMap), ConstructionError> {
    a.check_closed(k)?;
    if a.is_empty() {
        return Err(ConstructionError::EmptySubobject);
    }
    let base = SimplexKey::new(0, 0);
    let mut renumber: HashMap<SimplexKey, SimplexKey> = HashMap::new();
    let mut levels: Vec<Vec<Simplex>> = vec![vec![Simplex::vertex("*")]];
    let retarget = |r: &SimplexRef, renumber: &HashMap<SimplexKey, SimplexKey>| {
        if a.contains(r.key) {
            SimplexRef::new(DegeneracyWord::total(r.dim()), base)
        } else {
            SimplexRef::new(r.word.clone(), renumber[&r.key])
        }
    };
    for key in k.all_keys().filter(|&x| !a.contains(x)) {
        while levels.len() <= key.dim {
            levels.push(Vec::new());
        }
        let old = k.simplex(key).unwrap();
        let faces = old.faces.iter().map(|f| retarget(f, &renumber)).collect();
        renumber.insert(key, SimplexKey::new(key.dim, levels[key.dim].len()));
        levels[key.dim].push(Simplex::new(old.label.clone(), faces));
    }
    let quotient = Arc::new(FiniteSSet::from_levels(k.truncation(), levels)?);
    let images = k
        .levels()
        .iter()
        .enumerate()
        .map(|(dim, lvl)| {
            (0..lvl.len())
                .map(|index| retarget(&SimplexRef::nondegenerate(SimplexKey::new(dim, index)), &renumber))
                .collect()
        })
        .collect();
    let projection = SimplicialMap::new(Arc::new(k.clone()), quotient.clone(), images)?;
    Ok(((*quotient).clone(), projection))
}

/// Drops the nondegenerate simplices above dimension `m`; the truncation is
/// kept.
pub fn skeleton(k: &FiniteSSet, m: usize) -> Result<FiniteSSet, ConstructionError> {
    let truncation = k.truncation().unwrap_or(0);
    if k.truncation().is_some_and(|d| m > d) {
        return Err(ConstructionError::TooLarge { n: m, truncation });
    }
    let levels = k.levels().iter().take(m + 1).cloned().collect();
    Ok(FiniteSSet::from_levels(k.truncation(), levels)?)
}

/// `Map(K, L)_n = Hom(K × Δ[n], L)`.
///
/// `K` is read at the truncation of `L`; the product must fit there.
pub fn mapping_space_level(k: &FiniteSSet, l: &FiniteSSet, n: usize) -> Result<Vec<SimplicialMap>, ConstructionError> {
    let Some(d) = l.truncation() else {
        return Err(SSetError::TruncationExceeded {
            requested: n,
            truncation: -1,
        }
        .into());
    };
    let needed = k.top_dim().map_or(n, |t| t + n);
    if needed > d {
        return Err(SSetError::TruncationExceeded {
            requested: needed,
            truncation: d as i64,
        }
        .into());
    }
    let k = k.clone().with_truncation(Some(d));
    let simplex = standard_simplex(n, d)?;
    let prod = product(&k, &simplex)?;
    Ok(enumerate_simplicial_maps(&prod.sset, l)?)
}

/// Nondegenerate `n`-simplices are the `(n+1)`-element simplices of `K` in
/// increasing vertex order; faces delete the `i`-th vertex.
pub fn oriented_to_sset(k: &OrientedComplex, truncation: usize) -> Result<FiniteSSet, ConstructionError> {
    let complex = k.complex();
    if let Some(dim) = complex.dimension()
        && dim > truncation
    {
        return Err(ConstructionError::TooLarge { n: dim, truncation });
    }
    let mut tuples = BTreeSet::new();
    for s in complex.simplices() {
        let ordered = k.ordered(s);
        if ordered.windows(2).any(|w| !k.leq(w[0], w[1])) {
            return Err(ConstructionError::NotAChain(complex.labels(s)));
        }
        tuples.insert(ordered);
    }
    Ok(from_ordered_tuples(complex.vertices(), &tuples, Some(truncation))?)
}
