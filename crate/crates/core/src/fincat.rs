//! Finite categories given by composition tables, and their nerves.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::sset::{DegeneracyWord, FiniteSSet, SSetError, Simplex, SimplexKey, SimplexRef, SimplicialMap};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Morphism {
    pub name: String,
    pub src: usize,
    pub dst: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CategoryError {
    #[error("unknown object {0}")]
    UnknownObject(usize),
    #[error("unknown morphism {0}")]
    UnknownMorphism(usize),
    #[error("identity {morphism} is not an endomorphism of object {object}")]
    BadIdentity { object: usize, morphism: usize },
    #[error("expected {expected} identities, got {got}")]
    IdentityCount { expected: usize, got: usize },
    #[error("composition {f} then {g} listed twice with different results")]
    ConflictingComposite { f: usize, g: usize },
    #[error("composition {f} then {g} is not composable")]
    NotComposable { f: usize, g: usize },
    #[error("category table is invalid: {0}")]
    Invalid(CategoryViolation),
    #[error("functor does not preserve structure: {0}")]
    NotAFunctor(String),
    #[error(transparent)]
    SSet(#[from] SSetError),
}

/// A failed law in a composition table. Morphisms are named.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CategoryViolation {
    MissingComposite { f: String, g: String },
    WrongEndpoints { f: String, g: String, composite: String },
    NotAssociative { f: String, g: String, h: String },
    LeftUnit { f: String },
    RightUnit { f: String },
}

impl fmt::Display for CategoryViolation {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::MissingComposite { f, g } => write!(out, "no composite for {g}∘{f}"),
            Self::WrongEndpoints { f, g, composite } => {
                write!(out, "{g}∘{f} = {composite} has the wrong source or target")
            }
            Self::NotAssociative { f, g, h } => write!(out, "({h}∘{g})∘{f} ≠ {h}∘({g}∘{f})"),
            Self::LeftUnit { f } => write!(out, "id∘{f} ≠ {f}"),
            Self::RightUnit { f } => write!(out, "{f}∘id ≠ {f}"),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CategoryReport {
    pub violations: Vec<CategoryViolation>,
}

impl CategoryReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinCategory {
    objects: Vec<String>,
    morphisms: Vec<Morphism>,
    identities: Vec<usize>,
    /// `(f, g) -> g∘f` for `f: a -> b`, `g: b -> c`.
    table: HashMap<(usize, usize), usize>,
}

impl FinCategory {
    /// Builds a table. With `identities = None` an identity `id_<obj>` is
    /// appended for every object. In either case, unit composites that are not
    /// listed are filled in; listed ones are kept as given so that broken unit
    /// laws stay visible to [`validate_category`].
    pub fn new(
        objects: Vec<String>,
        mut morphisms: Vec<Morphism>,
        identities: Option<Vec<usize>>,
        compositions: &[(usize, usize, usize)],
    ) -> Result<Self, CategoryError> {
        for m in &morphisms {
            for o in [m.src, m.dst] {
                if o >= objects.len() {
                    return Err(CategoryError::UnknownObject(o));
                }
            }
        }
        let identities = match identities {
            Some(ids) => {
                if ids.len() != objects.len() {
                    return Err(CategoryError::IdentityCount {
                        expected: objects.len(),
                        got: ids.len(),
                    });
                }
                for (object, &m) in ids.iter().enumerate() {
                    let mor = morphisms.get(m).ok_or(CategoryError::UnknownMorphism(m))?;
                    if mor.src != object || mor.dst != object {
                        return Err(CategoryError::BadIdentity { object, morphism: m });
                    }
                }
                ids
            }
            None => {
                let start = morphisms.len();
                for (o, name) in objects.iter().enumerate() {
                    morphisms.push(Morphism {
                        name: format!("id_{name}"),
                        src: o,
                        dst: o,
                    });
                }
                (start..morphisms.len()).collect()
            }
        };
        let mut table = HashMap::new();
        for &(f, g, gf) in compositions {
            for m in [f, g, gf] {
                if m >= morphisms.len() {
                    return Err(CategoryError::UnknownMorphism(m));
                }
            }
            if morphisms[f].dst != morphisms[g].src {
                return Err(CategoryError::NotComposable { f, g });
            }
            if table.insert((f, g), gf).is_some_and(|old| old != gf) {
                return Err(CategoryError::ConflictingComposite { f, g });
            }
        }
        for (m, mor) in morphisms.iter().enumerate() {
            table.entry((identities[mor.src], m)).or_insert(m);
            table.entry((m, identities[mor.dst])).or_insert(m);
        }
        Ok(Self {
            objects,
            morphisms,
            identities,
            table,
        })
    }

    pub fn objects(&self) -> &[String] {
        &self.objects
    }

    pub fn morphisms(&self) -> &[Morphism] {
        &self.morphisms
    }

    pub fn identity(&self, object: usize) -> usize {
        self.identities[object]
    }

    pub fn identities(&self) -> &[usize] {
        &self.identities
    }

    pub fn is_identity(&self, m: usize) -> bool {
        self.identities[self.morphisms[m].src] == m
    }

    /// `g∘f`, if listed.
    pub fn compose(&self, f: usize, g: usize) -> Option<usize> {
        self.table.get(&(f, g)).copied()
    }

    /// Listed composites as `(f, g, g∘f)`, sorted.
    pub fn compositions(&self) -> Vec<(usize, usize, usize)> {
        let mut out: Vec<_> = self.table.iter().map(|(&(f, g), &gf)| (f, g, gf)).collect();
        out.sort_unstable();
        out
    }

    pub fn hom(&self, a: usize, b: usize) -> Vec<usize> {
        (0..self.morphisms.len())
            .filter(|&m| self.morphisms[m].src == a && self.morphisms[m].dst == b)
            .collect()
    }

    pub fn object_by_label(&self, label: &str) -> Option<usize> {
        self.objects.iter().position(|o| o == label)
    }

    fn name(&self, m: usize) -> String {
        self.morphisms[m].name.clone()
    }

    fn composable_pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let n = self.morphisms.len();
        (0..n).flat_map(move |f| (0..n).filter(move |&g| self.morphisms[f].dst == self.morphisms[g].src).map(move |g| (f, g)))
    }
}

/// Checks totality, endpoints, associativity and both unit laws.
pub fn validate_category(c: &FinCategory) -> CategoryReport {
    let mut violations = Vec::new();
    let mut total = true;
    for (f, g) in c.composable_pairs() {
        match c.compose(f, g) {
            None => {
                total = false;
                violations.push(CategoryViolation::MissingComposite {
                    f: c.name(f),
                    g: c.name(g),
                });
            }
            Some(gf) => {
                let m = &c.morphisms[gf];
                if m.src != c.morphisms[f].src || m.dst != c.morphisms[g].dst {
                    total = false;
                    violations.push(CategoryViolation::WrongEndpoints {
                        f: c.name(f),
                        g: c.name(g),
                        composite: c.name(gf),
                    });
                }
            }
        }
    }
    for (m, mor) in c.morphisms.iter().enumerate() {
        if c.compose(m, c.identities[mor.dst]) != Some(m) {
            violations.push(CategoryViolation::LeftUnit { f: c.name(m) });
        }
        if c.compose(c.identities[mor.src], m) != Some(m) {
            violations.push(CategoryViolation::RightUnit { f: c.name(m) });
        }
    }
    if total {
        for (f, g) in c.composable_pairs() {
            for h in (0..c.morphisms.len()).filter(|&h| c.morphisms[h].src == c.morphisms[g].dst) {
                let left = c.compose(c.compose(f, g).unwrap(), h);
                let right = c.compose(f, c.compose(g, h).unwrap());
                if left != right {
                    violations.push(CategoryViolation::NotAssociative {
                        f: c.name(f),
                        g: c.name(g),
                        h: c.name(h),
                    });
                }
            }
        }
    }
    CategoryReport { violations }
}

fn checked(c: &FinCategory) -> Result<(), CategoryError> {
    match validate_category(c).violations.into_iter().next() {
        None => Ok(()),
        Some(v) => Err(CategoryError::Invalid(v)),
    }
}

/// The poset `[n] = {0 < 1 < ... < n}` with one arrow `i -> j` for `i <= j`.
pub fn poset_category(n: usize) -> FinCategory {
    let objects: Vec<String> = (0..=n).map(|i| i.to_string()).collect();
    let mut morphisms = Vec::new();
    let mut index = HashMap::new();
    for i in 0..=n {
        for j in i..=n {
            index.insert((i, j), morphisms.len());
            let name = if i == j { format!("id_{i}") } else { format!("{i}->{j}") };
            morphisms.push(Morphism { name, src: i, dst: j });
        }
    }
    let identities = (0..=n).map(|i| index[&(i, i)]).collect();
    let mut compositions = Vec::new();
    for i in 0..=n {
        for j in i..=n {
            for k in j..=n {
                compositions.push((index[&(i, j)], index[&(j, k)], index[&(i, k)]));
            }
        }
    }
    FinCategory::new(objects, morphisms, Some(identities), &compositions).expect("poset table")
}

/// The cyclic group `Z/n` on one object; morphism `k` is `g^k`, with `g^0 = e`.
pub fn cyclic_group(n: usize) -> FinCategory {
    assert!(n > 0, "cyclic group of order zero");
    let morphisms = (0..n)
        .map(|k| Morphism {
            name: match k {
                0 => "e".into(),
                1 => "g".into(),
                _ => format!("g{k}"),
            },
            src: 0,
            dst: 0,
        })
        .collect();
    let compositions: Vec<_> = (0..n).flat_map(|a| (0..n).map(move |b| (a, b, (a + b) % n))).collect();
    FinCategory::new(vec!["*".into()], morphisms, Some(vec![0]), &compositions).expect("group table")
}

/// Two objects with a single isomorphism `f: a -> b` and its inverse.
pub fn two_object_groupoid() -> FinCategory {
    let mor = |name: &str, src, dst| Morphism {
        name: name.into(),
        src,
        dst,
    };
    let morphisms = vec![mor("id_a", 0, 0), mor("id_b", 1, 1), mor("f", 0, 1), mor("f'", 1, 0)];
    // f then f' is id_a; f' then f is id_b
    let compositions = [(2, 3, 0), (3, 2, 1)];
    FinCategory::new(vec!["a".into(), "b".into()], morphisms, Some(vec![0, 1]), &compositions).expect("groupoid table")
}

/// Disjoint union; objects and morphisms of `d` follow those of `c`, and
/// labels are suffixed when they collide.
pub fn disjoint_union(c: &FinCategory, d: &FinCategory) -> FinCategory {
    let clash = c.objects.iter().any(|o| d.objects.contains(o));
    let suffix = |s: &str, side: usize| if clash { format!("{s}.{side}") } else { s.to_string() };
    let objects = c
        .objects
        .iter()
        .map(|o| suffix(o, 0))
        .chain(d.objects.iter().map(|o| suffix(o, 1)))
        .collect();
    let (no, nm) = (c.objects.len(), c.morphisms.len());
    let morphisms = c
        .morphisms
        .iter()
        .map(|m| Morphism {
            name: suffix(&m.name, 0),
            ..m.clone()
        })
        .chain(d.morphisms.iter().map(|m| Morphism {
            name: suffix(&m.name, 1),
            src: m.src + no,
            dst: m.dst + no,
        }))
        .collect();
    let identities = c.identities.iter().copied().chain(d.identities.iter().map(|i| i + nm)).collect();
    let compositions: Vec<_> = c
        .compositions()
        .into_iter()
        .chain(d.compositions().into_iter().map(|(f, g, h)| (f + nm, g + nm, h + nm)))
        .collect();
    FinCategory::new(objects, morphisms, Some(identities), &compositions).expect("union of valid tables")
}

/// One object with morphisms `e` and `g` where `g∘e = e`, breaking the unit law.
pub fn broken_unit_category() -> FinCategory {
    let morphisms = vec![
        Morphism {
            name: "e".into(),
            src: 0,
            dst: 0,
        },
        Morphism {
            name: "g".into(),
            src: 0,
            dst: 0,
        },
    ];
    let compositions = [(0, 1, 0), (1, 1, 1)];
    FinCategory::new(vec!["*".into()], morphisms, Some(vec![0]), &compositions).expect("well-formed table")
}

pub fn is_groupoid(c: &FinCategory) -> bool {
    c.morphisms.iter().enumerate().all(|(f, m)| {
        c.hom(m.dst, m.src).into_iter().any(|g| {
            c.compose(f, g) == Some(c.identities[m.src]) && c.compose(g, f) == Some(c.identities[m.dst])
        })
    })
}

struct ChainIndex {
    levels: Vec<HashMap<(usize, Vec<usize>), usize>>,
}

impl ChainIndex {
    /// Normal form of a chain of morphisms starting at `start`: identities
    /// are removed, and their positions form the degeneracy word.
    fn lookup(&self, c: &FinCategory, start: usize, chain: &[usize]) -> SimplexRef {
        let mut word = Vec::new();
        let mut reduced = Vec::new();
        for (p, &m) in chain.iter().enumerate() {
            if c.is_identity(m) {
                word.push(p);
            } else {
                reduced.push(m);
            }
        }
        word.reverse();
        let dim = reduced.len();
        let index = self.levels[dim][&(start, reduced)];
        let key = SimplexKey::new(dim, index);
        SimplexRef::new(DegeneracyWord::new(word, dim).expect("identity positions are admissible"), key)
    }
}

fn chain_faces(c: &FinCategory, start: usize, chain: &[usize], index: &ChainIndex) -> Result<Vec<SimplexRef>, CategoryError> {
    let n = chain.len();
    let mut faces = Vec::with_capacity(n + 1);
    for i in 0..=n {
        let (face_start, face) = if i == 0 {
            (c.morphisms[chain[0]].dst, chain[1..].to_vec())
        } else if i == n {
            (start, chain[..n - 1].to_vec())
        } else {
            let (f, g) = (chain[i - 1], chain[i]);
            let gf = c.compose(f, g).ok_or_else(|| {
                CategoryError::Invalid(CategoryViolation::MissingComposite {
                    f: c.name(f),
                    g: c.name(g),
                })
            })?;
            let mut face = chain[..i - 1].to_vec();
            face.push(gf);
            face.extend_from_slice(&chain[i + 1..]);
            (start, face)
        };
        faces.push(index.lookup(c, face_start, &face));
    }
    Ok(faces)
}

/// `N(C)` truncated at `truncation`; nondegenerate `n`-simplices are chains of
/// `n` composable non-identity morphisms, in lexicographic order.
pub fn nerve(c: &FinCategory, truncation: usize) -> Result<FiniteSSet, CategoryError> {
    checked(c)?;
    let mut index = ChainIndex { levels: Vec::new() };
    let mut levels: Vec<Vec<Simplex>> = Vec::new();
    for (n, chains) in chains_by_level(c, truncation + 1).into_iter().enumerate() {
        let mut level = Vec::with_capacity(chains.len());
        for (start, chain) in &chains {
            level.push(if n == 0 {
                Simplex::vertex(c.objects[*start].clone())
            } else {
                let label = chain.iter().map(|&m| c.name(m)).collect::<Vec<_>>().join(",");
                Simplex::new(Some(label), chain_faces(c, *start, chain, &index)?)
            });
        }
        index.levels.push(chains.into_iter().enumerate().map(|(i, ch)| (ch, i)).collect());
        levels.push(level);
    }
    Ok(FiniteSSet::from_levels(Some(truncation), levels)?)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Functor<'a> {
    pub source: &'a FinCategory,
    pub target: &'a FinCategory,
    pub object_map: Vec<usize>,
    pub morphism_map: Vec<usize>,
}

impl<'a> Functor<'a> {
    pub fn new(
        source: &'a FinCategory,
        target: &'a FinCategory,
        object_map: Vec<usize>,
        morphism_map: Vec<usize>,
    ) -> Result<Self, CategoryError> {
        let f = Self {
            source,
            target,
            object_map,
            morphism_map,
        };
        if f.object_map.len() != source.objects.len() || f.morphism_map.len() != source.morphisms.len() {
            return Err(CategoryError::NotAFunctor("assignment has the wrong length".into()));
        }
        if let Some(&o) = f.object_map.iter().find(|&&o| o >= target.objects.len()) {
            return Err(CategoryError::UnknownObject(o));
        }
        if let Some(&m) = f.morphism_map.iter().find(|&&m| m >= target.morphisms.len()) {
            return Err(CategoryError::UnknownMorphism(m));
        }
        for (m, mor) in source.morphisms.iter().enumerate() {
            let img = &target.morphisms[f.morphism_map[m]];
            if img.src != f.object_map[mor.src] || img.dst != f.object_map[mor.dst] {
                return Err(CategoryError::NotAFunctor(format!("{} lands between the wrong objects", mor.name)));
            }
        }
        for o in 0..source.objects.len() {
            if f.morphism_map[source.identities[o]] != target.identities[f.object_map[o]] {
                return Err(CategoryError::NotAFunctor(format!("identity of {} not preserved", source.objects[o])));
            }
        }
        for (a, b) in source.composable_pairs() {
            let Some(ba) = source.compose(a, b) else { continue };
            if target.compose(f.morphism_map[a], f.morphism_map[b]) != Some(f.morphism_map[ba]) {
                return Err(CategoryError::NotAFunctor(format!(
                    "{}∘{} not preserved",
                    source.name(b),
                    source.name(a)
                )));
            }
        }
        Ok(f)
    }

    pub fn identity(c: &'a FinCategory) -> Self {
        Self {
            source: c,
            target: c,
            object_map: (0..c.objects.len()).collect(),
            morphism_map: (0..c.morphisms.len()).collect(),
        }
    }
}

/// All functors `C -> D`, ordered lexicographically by object assignment and
/// then by morphism assignment.
pub fn enumerate_functors<'a>(c: &'a FinCategory, d: &'a FinCategory) -> Vec<Functor<'a>> {
    let mut out = Vec::new();
    if d.objects.is_empty() {
        if c.objects.is_empty() {
            out.push(Functor {
                source: c,
                target: d,
                object_map: Vec::new(),
                morphism_map: Vec::new(),
            });
        }
        return out;
    }
    let mut objects = vec![0; c.objects.len()];
    loop {
        let mut morphisms = vec![usize::MAX; c.morphisms.len()];
        assign_morphisms(c, d, &objects, &mut morphisms, 0, &mut out);
        // odometer over object assignments, last position fastest
        let mut pos = objects.len();
        loop {
            if pos == 0 {
                return out;
            }
            pos -= 1;
            objects[pos] += 1;
            if objects[pos] < d.objects.len() {
                break;
            }
            objects[pos] = 0;
        }
    }
}

fn assign_morphisms<'a>(
    c: &'a FinCategory,
    d: &'a FinCategory,
    objects: &[usize],
    morphisms: &mut Vec<usize>,
    next: usize,
    out: &mut Vec<Functor<'a>>,
) {
    if next == morphisms.len() {
        out.push(Functor {
            source: c,
            target: d,
            object_map: objects.to_vec(),
            morphism_map: morphisms.clone(),
        });
        return;
    }
    let mor = &c.morphisms[next];
    let candidates = if c.is_identity(next) {
        vec![d.identities[objects[mor.src]]]
    } else {
        d.hom(objects[mor.src], objects[mor.dst])
    };
    for m in candidates {
        morphisms[next] = m;
        // check every composite whose three morphisms are now assigned
        let consistent = (0..=next).all(|a| {
            (0..=next).all(|b| match c.compose(a, b) {
                Some(ba) if ba <= next && (a == next || b == next || ba == next) => {
                    d.compose(morphisms[a], morphisms[b]) == Some(morphisms[ba])
                }
                _ => true,
            })
        });
        if consistent {
            assign_morphisms(c, d, objects, morphisms, next + 1, out);
        }
    }
    morphisms[next] = usize::MAX;
}

fn isomorphic(c: &FinCategory, a: usize, b: usize) -> bool {
    c.hom(a, b).into_iter().any(|f| {
        c.hom(b, a)
            .into_iter()
            .any(|g| c.compose(f, g) == Some(c.identities[a]) && c.compose(g, f) == Some(c.identities[b]))
    })
}

/// Fully faithful and essentially surjective.
pub fn is_equivalence(f: &Functor<'_>) -> bool {
    let (c, d) = (f.source, f.target);
    for a in 0..c.objects.len() {
        for b in 0..c.objects.len() {
            let mut images: Vec<usize> = c.hom(a, b).into_iter().map(|m| f.morphism_map[m]).collect();
            images.sort_unstable();
            images.dedup();
            if images != d.hom(f.object_map[a], f.object_map[b]) {
                return false;
            }
        }
    }
    (0..d.objects.len()).all(|y| f.object_map.iter().any(|&x| isomorphic(d, x, y)))
}

/// `N(F): N(C) -> N(D)` at the given truncation.
pub fn nerve_map(f: &Functor<'_>, truncation: usize) -> Result<SimplicialMap, CategoryError> {
    let source = Arc::new(nerve(f.source, truncation)?);
    let target = Arc::new(nerve(f.target, truncation)?);
    nerve_map_between(f, source, target)
}

pub(crate) fn nerve_map_between(
    f: &Functor<'_>,
    source: Arc<FiniteSSet>,
    target: Arc<FiniteSSet>,
) -> Result<SimplicialMap, CategoryError> {
    let d = f.target;
    let truncation = target.truncation().unwrap_or(0);
    // rebuild the chain index of the target nerve
    let mut index = ChainIndex { levels: Vec::new() };
    let source_chains = chains_by_level(f.source, source.levels().len());
    for level in chains_by_level(d, target.levels().len().min(truncation + 1)) {
        index.levels.push(level.into_iter().enumerate().map(|(i, ch)| (ch, i)).collect());
    }
    let images = source_chains
        .iter()
        .map(|level| {
            level
                .iter()
                .map(|(start, chain)| {
                    let mapped: Vec<usize> = chain.iter().map(|&m| f.morphism_map[m]).collect();
                    index.lookup(d, f.object_map[*start], &mapped)
                })
                .collect()
        })
        .collect();
    Ok(SimplicialMap::new(source, target, images)?)
}

fn chains_by_level(c: &FinCategory, levels: usize) -> Vec<Vec<(usize, Vec<usize>)>> {
    let proper: Vec<usize> = (0..c.morphisms.len()).filter(|&m| !c.is_identity(m)).collect();
    let mut out = Vec::new();
    let mut chains: Vec<(usize, Vec<usize>)> = (0..c.objects.len()).map(|o| (o, Vec::new())).collect();
    for _ in 0..levels {
        let next = chains
            .iter()
            .flat_map(|(start, chain)| {
                let tip = chain.last().map_or(*start, |&m| c.morphisms[m].dst);
                proper.iter().filter(move |&&m| c.morphisms[m].src == tip).map(move |&m| {
                    let mut ch = chain.clone();
                    ch.push(m);
                    (*start, ch)
                })
            })
            .collect();
        out.push(std::mem::replace(&mut chains, next));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::standard_simplex;
    use crate::sset::{count_simplicial_maps, enumerate_simplicial_maps};

    #[test]
    fn corpus_tables_are_valid() {
        for c in [poset_category(0), poset_category(2), cyclic_group(2), cyclic_group(3), two_object_groupoid()] {
            assert!(validate_category(&c).is_valid(), "{:?}", validate_category(&c));
        }
        let u = disjoint_union(&cyclic_group(2), &cyclic_group(2));
        assert!(validate_category(&u).is_valid());
        assert_eq!(u.objects(), ["*.0", "*.1"]);
    }

    #[test]
    fn broken_tables_are_rejected() {
        let report = validate_category(&broken_unit_category());
        assert!(report.violations.contains(&CategoryViolation::RightUnit { f: "g".into() }));

        let mor = |name: &str| Morphism {
            name: name.into(),
            src: 0,
            dst: 0,
        };
        let partial = FinCategory::new(vec!["*".into()], vec![mor("e"), mor("g")], Some(vec![0]), &[]).unwrap();
        assert_eq!(
            validate_category(&partial).violations,
            vec![CategoryViolation::MissingComposite { f: "g".into(), g: "g".into() }]
        );

        // a, b with a∘a = b, a∘b = a, b∘a = b, b∘b = b: not associative
        let ms = vec![mor("e"), mor("a"), mor("b")];
        let table = [(1, 1, 2), (1, 2, 1), (2, 1, 2), (2, 2, 2)];
        let bad = FinCategory::new(vec!["*".into()], ms, Some(vec![0]), &table).unwrap();
        assert!(validate_category(&bad)
            .violations
            .iter()
            .any(|v| matches!(v, CategoryViolation::NotAssociative { .. })));
        assert!(nerve(&bad, 2).is_err());
    }

    #[test]
    fn construction_errors() {
        let mor = |src, dst| Morphism {
            name: "m".into(),
            src,
            dst,
        };
        let objs = || vec!["a".to_string(), "b".to_string()];
        assert!(matches!(
            FinCategory::new(objs(), vec![mor(0, 2)], None, &[]),
            Err(CategoryError::UnknownObject(2))
        ));
        assert!(matches!(
            FinCategory::new(objs(), vec![mor(0, 1), mor(1, 1)], Some(vec![0, 1]), &[]),
            Err(CategoryError::BadIdentity { object: 0, .. })
        ));
        assert!(matches!(
            FinCategory::new(objs(), vec![mor(0, 1)], None, &[(0, 0, 0)]),
            Err(CategoryError::NotComposable { .. })
        ));
    }

    #[test]
    fn implied_identities() {
        let c = FinCategory::new(
            vec!["a".into(), "b".into()],
            vec![Morphism {
                name: "f".into(),
                src: 0,
                dst: 1,
            }],
            None,
            &[],
        )
        .unwrap();
        assert!(validate_category(&c).is_valid());
        assert_eq!(c.morphisms()[c.identity(1)].name, "id_b");
        assert_eq!(enumerate_functors(&c, &poset_category(1)).len(), 3);
    }

    #[test]
    fn small_nerves() {
        let d = 3;
        assert_eq!(nerve(&poset_category(0), d).unwrap(), standard_simplex(0, d).unwrap());
        for n in 0..=2 {
            let nv = nerve(&poset_category(n), d).unwrap();
            let simplex = standard_simplex(n, d).unwrap();
            assert_eq!(nv.f_vector(), simplex.f_vector());
            assert!(nv.validate().is_valid());
            let isos = enumerate_simplicial_maps(&nv, &simplex).unwrap();
            assert!(isos.iter().any(|m| m.is_isomorphism()));
        }
    }

    #[test]
    fn group_nerves_have_one_simplex_per_dimension() {
        let z2 = nerve(&cyclic_group(2), 4).unwrap();
        assert_eq!(z2.f_vector(), vec![1; 5]);
        assert!(z2.validate().is_valid());
        // d1(g,g) composes to e, so it is the degenerate edge on the vertex
        let gg = SimplexRef::nondegenerate(SimplexKey::new(2, 0));
        assert_eq!(z2.face(&gg, 1).unwrap(), SimplexRef::new(DegeneracyWord::total(1), SimplexKey::new(0, 0)));

        let z3 = nerve(&cyclic_group(3), 3).unwrap();
        assert_eq!(z3.f_vector(), vec![1, 2, 4, 8]);
        assert!(z3.validate().is_valid());
    }

    #[test]
    fn nerve_levels_match_objects_and_morphisms() {
        let g = two_object_groupoid();
        let nv = nerve(&g, 3).unwrap();
        assert_eq!(nv.count(0), g.objects().len());
        assert_eq!(nv.level_set(1).unwrap().len(), g.morphisms().len());
        assert_eq!(nv.f_vector(), vec![2, 2, 2, 2]);
    }

    #[test]
    fn functor_counts() {
        let (p0, p1) = (poset_category(0), poset_category(1));
        assert_eq!(enumerate_functors(&p0, &p1).len(), 2);
        assert_eq!(enumerate_functors(&p1, &p0).len(), 1);
        assert_eq!(enumerate_functors(&p1, &p1).len(), 3);
        let z2 = cyclic_group(2);
        assert_eq!(enumerate_functors(&z2, &cyclic_group(3)).len(), 1);
        assert_eq!(enumerate_functors(&z2, &z2).len(), 2);
        assert_eq!(enumerate_functors(&cyclic_group(3), &cyclic_group(3)).len(), 3);
        for f in enumerate_functors(&p1, &z2) {
            Functor::new(f.source, f.target, f.object_map.clone(), f.morphism_map.clone()).unwrap();
        }
    }

    #[test]
    fn functors_must_preserve_structure() {
        let z2 = cyclic_group(2);
        assert!(Functor::new(&z2, &z2, vec![0], vec![1, 1]).is_err());
        assert!(Functor::new(&z2, &z2, vec![0], vec![0, 0]).is_ok());
        let z3 = cyclic_group(3);
        assert!(Functor::new(&z2, &z3, vec![0], vec![0, 1]).is_err());
    }

    #[test]
    fn groupoids() {
        assert!(is_groupoid(&cyclic_group(2)));
        assert!(!is_groupoid(&poset_category(1)));
        assert!(is_groupoid(&poset_category(0)));
        assert!(is_groupoid(&disjoint_union(&cyclic_group(2), &cyclic_group(2))));
        assert!(is_groupoid(&two_object_groupoid()));
    }

    #[test]
    fn equivalences() {
        let p1 = poset_category(1);
        assert!(is_equivalence(&Functor::identity(&p1)));
        let p0 = poset_category(0);
        let fs = enumerate_functors(&p0, &p1);
        assert!(fs.iter().all(|f| !is_equivalence(f)));

        let g = two_object_groupoid();
        let point = poset_category(0);
        for target in 0..2 {
            let inc = Functor::new(&point, &g, vec![target], vec![g.identity(target)]).unwrap();
            assert!(is_equivalence(&inc));
        }
        let collapse = enumerate_functors(&g, &point);
        assert_eq!(collapse.len(), 1);
        assert!(is_equivalence(&collapse[0]));
    }

    #[test]
    fn nerve_is_fully_faithful_on_small_pairs() {
        let cats = [poset_category(0), poset_category(1), poset_category(2), cyclic_group(2), cyclic_group(3)];
        for c in &cats {
            for d in &cats {
                let functors = enumerate_functors(c, d).len();
                let maps = count_simplicial_maps(&nerve(c, 3).unwrap(), &nerve(d, 3).unwrap()).unwrap();
                assert_eq!(functors, maps);
            }
        }
    }

    #[test]
    fn nerve_maps_are_injective_on_functors() {
        let (p1, p2) = (poset_category(1), poset_category(2));
        let maps: Vec<SimplicialMap> = enumerate_functors(&p1, &p2)
            .iter()
            .map(|f| nerve_map(f, 3).unwrap())
            .collect();
        assert_eq!(maps.len(), 6);
        for (i, a) in maps.iter().enumerate() {
            for b in &maps[i + 1..] {
                assert_ne!(a.images(), b.images());
            }
        }
        let z2 = cyclic_group(2);
        let triv = Functor::new(&z2, &z2, vec![0], vec![0, 0]).unwrap();
        let m = nerve_map(&triv, 3).unwrap();
        assert!(m.images()[1][0].is_degenerate());
    }
}
