//! Normalized chains, integral homology, Euler characteristic and π₀.

pub mod snf;

use std::fmt;

use num_bigint::BigInt;
use thiserror::Error;

use crate::sset::{FiniteSSet, SSetError, SimplexKey, SimplexRef, SimplicialMap};
pub use snf::{Matrix, SnfResult, determinant, smith_normal_form};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HomologyError {
    #[error("simplicial identities fail: {0}")]
    Invalid(String),
    #[error("boundary of boundary is nonzero in degree {0}")]
    NotAComplex(usize),
    #[error("chain map does not commute with the differential in degree {0}")]
    NotAChainMap(usize),
    #[error("degree {requested} is beyond the truncation {truncation}")]
    OutOfRange { requested: usize, truncation: i64 },
    #[error("integer overflow in a differential")]
    Overflow,
    #[error(transparent)]
    SSet(#[from] SSetError),
}

/// A bounded chain complex of free abelian groups. `differentials[n]` is
/// `∂_n: C_n -> C_{n-1}` as a `rank(n-1) × rank(n)` matrix, with `∂_0`
/// of shape `0 × rank(0)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainComplex {
    ranks: Vec<usize>,
    differentials: Vec<Matrix>,
}

impl ChainComplex {
    pub fn new(differentials: Vec<Matrix>) -> Result<Self, HomologyError> {
        let ranks: Vec<usize> = differentials.iter().map(Matrix::cols).collect();
        for (n, d) in differentials.iter().enumerate() {
            let below = if n == 0 { 0 } else { ranks[n - 1] };
            assert_eq!(d.rows(), below, "differential {n} has the wrong shape");
            if n >= 1 {
                let dd = differentials[n - 1].checked_mul(d).ok_or(HomologyError::Overflow)?;
                if !dd.is_zero() {
                    return Err(HomologyError::NotAComplex(n));
                }
            }
        }
        Ok(Self { ranks, differentials })
    }

    pub fn ranks(&self) -> &[usize] {
        &self.ranks
    }

    pub fn rank(&self, n: usize) -> usize {
        self.ranks.get(n).copied().unwrap_or(0)
    }

    pub fn differential(&self, n: usize) -> Matrix {
        match self.differentials.get(n) {
            Some(d) => d.clone(),
            None => Matrix::zeros(self.rank(n.wrapping_sub(1)), self.rank(n)),
        }
    }

    /// Degrees stored explicitly; everything above is zero.
    pub fn len(&self) -> usize {
        self.ranks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ranks.is_empty()
    }

    /// `ker ∂_n / im ∂_{n+1}`.
    pub fn homology(&self, n: usize) -> HomologyGroup {
        let rank_n = self.rank(n);
        let out = smith_normal_form(&self.differential(n)).rank();
        let incoming = smith_normal_form(&self.differential(n + 1));
        HomologyGroup {
            betti: rank_n - out - incoming.rank(),
            torsion: incoming.torsion(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomologyGroup {
    pub betti: usize,
    /// Invariant factors, each dividing the next.
    pub torsion: Vec<BigInt>,
}

impl HomologyGroup {
    pub fn zero() -> Self {
        Self {
            betti: 0,
            torsion: Vec::new(),
        }
    }

    pub fn free(betti: usize) -> Self {
        Self {
            betti,
            torsion: Vec::new(),
        }
    }

    pub fn new(betti: usize, torsion: &[u64]) -> Self {
        Self {
            betti,
            torsion: torsion.iter().map(|&t| BigInt::from(t)).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.betti == 0 && self.torsion.is_empty()
    }
}

impl fmt::Display for HomologyGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.betti {
            0 => {}
            1 => parts.push("Z".to_string()),
            b => parts.push(format!("Z^{b}")),
        }
        parts.extend(self.torsion.iter().map(|t| format!("Z/{t}")));
        if parts.is_empty() { f.write_str("0") } else { f.write_str(&parts.join(" ⊕ ")) }
    }
}

/// A homology group with the truncation caveat: in the top degree `D` the
/// incoming differential is unknown, so the result may be too large.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Homology {
    pub degree: usize,
    pub group: HomologyGroup,
    pub top_degree_caveat: bool,
}

impl fmt::Display for Homology {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "H_{} = {}", self.degree, self.group)?;
        if self.top_degree_caveat {
            f.write_str(" (upper differential unknown)")?;
        }
        Ok(())
    }
}

fn require_valid(k: &FiniteSSet) -> Result<(), HomologyError> {
    match k.validate().violations.first() {
        None => Ok(()),
        Some(v) => Err(HomologyError::Invalid(v.to_string())),
    }
}

/// Generators are the nondegenerate simplices; `∂x = Σ (-1)^i d_i x` with
/// degenerate faces dropped.
pub fn normalized_chains(k: &FiniteSSet) -> Result<ChainComplex, HomologyError> {
    require_valid(k)?;
    let f = k.f_vector();
    let mut differentials = vec![Matrix::zeros(0, f.first().copied().unwrap_or(0))];
    for n in 1..f.len() {
        let mut d = Matrix::zeros(f[n - 1], f[n]);
        for (col, simplex) in k.levels()[n].iter().enumerate() {
            for (i, face) in simplex.faces.iter().enumerate() {
                if face.is_degenerate() {
                    continue;
                }
                let sign = if i % 2 == 0 { 1 } else { -1 };
                let v = d.get(face.key.index, col) + sign;
                d.set(face.key.index, col, v);
            }
        }
        differentials.push(d);
    }
    ChainComplex::new(differentials)
}

pub fn homology(k: &FiniteSSet, n: usize) -> Result<Homology, HomologyError> {
    let chains = normalized_chains(k)?;
    homology_of(k, &chains, n)
}

fn homology_of(k: &FiniteSSet, chains: &ChainComplex, n: usize) -> Result<Homology, HomologyError> {
    // the empty set has no simplices in any degree
    if let Some(d) = k.truncation()
        && n > d
    {
        return Err(HomologyError::OutOfRange {
            requested: n,
            truncation: d as i64,
        });
    }
    Ok(Homology {
        degree: n,
        group: chains.homology(n),
        top_degree_caveat: k.truncation() == Some(n),
    })
}

/// `H_0 … H_max`.
pub fn homology_up_to(k: &FiniteSSet, max: usize) -> Result<Vec<Homology>, HomologyError> {
    let chains = normalized_chains(k)?;
    (0..=max).map(|n| homology_of(k, &chains, n)).collect()
}

/// Alternating count of nondegenerate simplices.
pub fn euler_characteristic(k: &FiniteSSet) -> i64 {
    k.f_vector()
        .iter()
        .enumerate()
        .map(|(n, &c)| if n % 2 == 0 { c as i64 } else { -(c as i64) })
        .sum()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Components {
    pub count: usize,
    /// Component number of each vertex, numbered in order of first vertex.
    pub of_vertex: Vec<usize>,
}

pub fn pi0(k: &FiniteSSet) -> Components {
    let n = k.count(0);
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    if k.levels().len() > 1 {
        for edge in &k.levels()[1] {
            let (a, b) = (edge.faces[0].key.index, edge.faces[1].key.index);
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            if ra != rb {
                parent[ra.max(rb)] = ra.min(rb);
            }
        }
    }
    let mut number = vec![usize::MAX; n];
    let mut of_vertex = Vec::with_capacity(n);
    let mut count = 0;
    for v in 0..n {
        let r = find(&mut parent, v);
        if number[r] == usize::MAX {
            number[r] = count;
            count += 1;
        }
        of_vertex.push(number[r]);
    }
    Components { count, of_vertex }
}

/// `matrices[n]` sends generators of `C_n(K)` to `C_n(L)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainMap {
    pub matrices: Vec<Matrix>,
}

/// Nondegenerate generators go to their images, degenerate images to zero.
pub fn induced_chain_map(f: &SimplicialMap) -> Result<ChainMap, HomologyError> {
    let (source, target) = (normalized_chains(f.source())?, normalized_chains(f.target())?);
    let matrices = chain_map_matrices(f, &source, &target)?;
    Ok(ChainMap { matrices })
}

fn chain_map_matrices(f: &SimplicialMap, source: &ChainComplex, target: &ChainComplex) -> Result<Vec<Matrix>, HomologyError> {
    let mut matrices = Vec::with_capacity(source.len());
    for n in 0..source.len() {
        let mut m = Matrix::zeros(target.rank(n), source.rank(n));
        for index in 0..source.rank(n) {
            let img: &SimplexRef = f.image(SimplexKey::new(n, index));
            if !img.is_degenerate() {
                m.set(img.key.index, index, 1);
            }
        }
        matrices.push(m);
    }
    for n in 1..matrices.len() {
        let lhs = target.differential(n).checked_mul(&matrices[n]).ok_or(HomologyError::Overflow)?;
        let rhs = matrices[n - 1].checked_mul(&source.differential(n)).ok_or(HomologyError::Overflow)?;
        if lhs != rhs {
            return Err(HomologyError::NotAChainMap(n));
        }
    }
    Ok(matrices)
}

fn negated(m: &Matrix) -> Matrix {
    m.map(|&x| -x)
}

/// The mapping cone: `Cone_n = C_{n-1} ⊕ C'_n` with
/// `d(a, b) = (-∂a, f(a) + ∂'b)`.
pub fn mapping_cone(f: &SimplicialMap) -> Result<ChainComplex, HomologyError> {
    let (c, c2) = (normalized_chains(f.source())?, normalized_chains(f.target())?);
    let fm = chain_map_matrices(f, &c, &c2)?;
    let f_at = |n: usize| fm.get(n).cloned().unwrap_or_else(|| Matrix::zeros(c2.rank(n), c.rank(n)));
    let top = c.len().max(c2.len()) + 1;
    let mut differentials = Vec::with_capacity(top);
    for n in 0..top {
        let d = if n == 0 {
            Matrix::zeros(0, c2.rank(0))
        } else {
            // Cone_n -> Cone_{n-1} = C_{n-2} ⊕ C'_{n-1}
            let below = if n >= 2 { c.rank(n - 2) } else { 0 };
            let top_left = if n >= 2 { negated(&c.differential(n - 1)) } else { Matrix::zeros(0, c.rank(0)) };
            Matrix::block(
                &top_left,
                &Matrix::zeros(below, c2.rank(n)),
                &f_at(n - 1),
                &c2.differential(n),
            )
        };
        differentials.push(d);
    }
    ChainComplex::new(differentials)
}

/// Whether `f_*` is an isomorphism in every degree `< m` and onto in degree
/// `m`, read off from the acyclicity of the mapping cone in degrees `<= m`.
/// Needs `m + 1` within both truncations.
pub fn homology_iso_below(f: &SimplicialMap, m: usize) -> Result<bool, HomologyError> {
    for k in [f.source(), f.target()] {
        if let Some(d) = k.truncation()
            && m + 1 > d
        {
            return Err(HomologyError::OutOfRange {
                requested: m + 1,
                truncation: d as i64,
            });
        }
    }
    let cone = mapping_cone(f)?;
    Ok((0..=m).all(|n| cone.homology(n).is_zero()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{SubSSet, boundary, collapse, coproduct, product, standard_simplex};
    use crate::fincat::{Functor, cyclic_group, enumerate_functors, nerve, nerve_map, poset_category};
    use crate::sset::{compose_maps, identity_map};
    use std::sync::Arc;

    fn circle(d: usize) -> FiniteSSet {
        let d1 = standard_simplex(1, d).unwrap();
        let ends = SubSSet::new(&d1, d1.keys(0)).unwrap();
        collapse(&d1, &ends).unwrap().0
    }

    fn groups(k: &FiniteSSet, max: usize) -> Vec<String> {
        homology_up_to(k, max).unwrap().iter().map(|h| h.group.to_string()).collect()
    }

    fn m(rows: &[&[i64]]) -> Matrix {
        let cols = rows.first().map_or(0, |r| r.len());
        Matrix::from_rows(rows.iter().map(|r| r.to_vec()).collect(), cols)
    }

    #[test]
    fn circle_chains() {
        let c = normalized_chains(&circle(2)).unwrap();
        assert_eq!(c.ranks(), [1, 1]);
        assert_eq!(c.differential(1), m(&[&[0]]));
        assert_eq!(groups(&circle(2), 1), ["Z", "Z"]);
    }

    #[test]
    fn group_nerve_chains() {
        let c = normalized_chains(&nerve(&cyclic_group(2), 3).unwrap()).unwrap();
        assert_eq!(c.ranks(), [1, 1, 1, 1]);
        assert_eq!(c.differential(1), m(&[&[0]]));
        assert_eq!(c.differential(2), m(&[&[2]]));
        assert_eq!(c.differential(3), m(&[&[0]]));
        let k = nerve(&cyclic_group(2), 4).unwrap();
        assert_eq!(groups(&k, 3), ["Z", "Z/2", "0", "Z/2"]);
    }

    #[test]
    fn spheres_and_simplices() {
        let s2 = boundary(3, 3).unwrap();
        assert_eq!(groups(&s2, 2), ["Z", "0", "Z"]);
        assert_eq!(euler_characteristic(&s2), 2);
        for n in 0..=4 {
            let k = standard_simplex(n, 4).unwrap();
            normalized_chains(&k).unwrap();
            assert_eq!(euler_characteristic(&k), 1);
            assert_eq!(homology(&k, 0).unwrap().group, HomologyGroup::free(1));
        }
    }

    #[test]
    fn torus() {
        let c = circle(3);
        let t = product(&c, &c).unwrap().sset;
        assert_eq!(groups(&t, 2), ["Z", "Z^2", "Z"]);
        assert_eq!(euler_characteristic(&t), 0);
        assert_eq!(euler_characteristic(&c), 0);
    }

    #[test]
    fn top_degree_is_flagged() {
        let k = circle(2);
        assert!(homology(&k, 2).unwrap().top_degree_caveat);
        assert!(!homology(&k, 1).unwrap().top_degree_caveat);
        assert!(matches!(homology(&k, 3), Err(HomologyError::OutOfRange { .. })));
        assert_eq!(homology(&k, 2).unwrap().to_string(), "H_2 = 0 (upper differential unknown)");
    }

    #[test]
    fn display() {
        assert_eq!(HomologyGroup::zero().to_string(), "0");
        assert_eq!(HomologyGroup::new(2, &[2, 6]).to_string(), "Z^2 ⊕ Z/2 ⊕ Z/6");
        assert_eq!(HomologyGroup::new(0, &[3]).to_string(), "Z/3");
    }

    #[test]
    fn invalid_presentations_are_rejected() {
        use crate::sset::{Simplex, SimplexKey};
        let nd = |d, i| SimplexRef::nondegenerate(SimplexKey::new(d, i));
        let bad = FiniteSSet::from_levels(
            Some(2),
            vec![
                vec![Simplex::vertex("a"), Simplex::vertex("b"), Simplex::vertex("c")],
                vec![
                    Simplex::new(None, vec![nd(0, 1), nd(0, 0)]),
                    Simplex::new(None, vec![nd(0, 2), nd(0, 0)]),
                    Simplex::new(None, vec![nd(0, 2), nd(0, 1)]),
                ],
                vec![Simplex::new(None, vec![nd(1, 0), nd(1, 1), nd(1, 2)])],
            ],
        )
        .unwrap();
        assert!(matches!(normalized_chains(&bad), Err(HomologyError::Invalid(_))));
    }

    #[test]
    fn components() {
        assert_eq!(pi0(&boundary(1, 2).unwrap()).count, 2);
        assert_eq!(pi0(&circle(2)).count, 1);
        let two = coproduct(&standard_simplex(2, 2).unwrap(), &circle(2)).unwrap();
        let p = pi0(&two);
        assert_eq!(p.count, 2);
        assert_eq!(p.of_vertex, [0, 0, 0, 1]);
        assert_eq!(pi0(&FiniteSSet::empty(None)).count, 0);
    }

    #[test]
    fn chain_maps() {
        let k = Arc::new(standard_simplex(2, 3).unwrap());
        let id = induced_chain_map(&identity_map(&k)).unwrap();
        assert_eq!(id.matrices, vec![Matrix::identity(3), Matrix::identity(3), Matrix::identity(1)]);

        let d1 = standard_simplex(1, 2).unwrap();
        let ends = SubSSet::new(&d1, d1.keys(0)).unwrap();
        let (_, proj) = collapse(&d1, &ends).unwrap();
        let f = induced_chain_map(&proj).unwrap();
        assert_eq!(f.matrices, vec![m(&[&[1, 1]]), m(&[&[1]])]);
    }

    #[test]
    fn chain_maps_compose() {
        let (p1, p2) = (poset_category(1), poset_category(2));
        let f = &enumerate_functors(&p1, &p2)[1];
        let g = &enumerate_functors(&p2, &p1)[2];
        let nf = nerve_map(f, 3).unwrap();
        let ng = crate::fincat::nerve_map_between(g, nf.target_arc().clone(), Arc::new(nerve(&p1, 3).unwrap())).unwrap();
        let gf = compose_maps(&nf, &ng).unwrap();
        let (a, b, ab) = (
            induced_chain_map(&nf).unwrap(),
            induced_chain_map(&ng).unwrap(),
            induced_chain_map(&gf).unwrap(),
        );
        for n in 0..ab.matrices.len() {
            assert_eq!(b.matrices[n].checked_mul(&a.matrices[n]).unwrap(), ab.matrices[n]);
        }
    }

    #[test]
    fn functors_from_the_point_are_homology_isomorphisms() {
        let (p0, p1) = (poset_category(0), poset_category(1));
        for f in enumerate_functors(&p0, &p1) {
            let map = nerve_map(&f, 4).unwrap();
            assert!(homology_iso_below(&map, 3).unwrap());
            assert_eq!(groups(map.source(), 3), groups(map.target(), 3));
        }
        // the inclusion of a point into a circle is not
        let c = Arc::new(circle(3));
        let point = Arc::new(standard_simplex(0, 3).unwrap());
        let inc = SimplicialMap::new(point, c, vec![vec![SimplexRef::nondegenerate(SimplexKey::new(0, 0))]]).unwrap();
        assert!(homology_iso_below(&inc, 0).unwrap());
        assert!(!homology_iso_below(&inc, 1).unwrap());
        assert!(homology_iso_below(&inc, 3).is_err());
    }

    #[test]
    fn group_homomorphisms_on_homology() {
        // Z/2 -> Z/2 trivial: kills H_1 = Z/2, so not an isomorphism
        let z2 = cyclic_group(2);
        let triv = Functor::new(&z2, &z2, vec![0], vec![0, 0]).unwrap();
        let m = nerve_map(&triv, 4).unwrap();
        assert!(homology_iso_below(&m, 0).unwrap());
        assert!(!homology_iso_below(&m, 1).unwrap());
        let id = nerve_map(&Functor::identity(&z2), 4).unwrap();
        assert!(homology_iso_below(&id, 3).unwrap());
    }
}
