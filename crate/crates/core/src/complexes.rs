//! Abstract and oriented simplicial complexes, their products, and the
//! standard-basis geometric realization.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::fmt::Write as _;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ComplexViolation {
    DuplicateVertex(String),
    EmptySimplex,
    UnknownVertex { label: String },
    MissingVertex { label: String },
    MissingFace { face: Vec<String> },
    OrderCycle { a: String, b: String },
    NotAChain { simplex: Vec<String> },
}

impl fmt::Display for ComplexViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::DuplicateVertex(v) => write!(f, "vertex {v} listed twice"),
            Self::EmptySimplex => write!(f, "empty simplex"),
            Self::UnknownVertex { label } => write!(f, "simplex uses unknown vertex {label}"),
            Self::MissingVertex { label } => write!(f, "singleton {{{label}}} is missing"),
            Self::MissingFace { face } => write!(f, "missing face {{{}}}", face.join(",")),
            Self::OrderCycle { a, b } => write!(f, "order relates {a} and {b} both ways"),
            Self::NotAChain { simplex } => {
                write!(f, "simplex {{{}}} is not totally ordered", simplex.join(","))
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invalid complex: {}", .0.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("; "))]
pub struct ComplexError(pub Vec<ComplexViolation>);

/// A finite vertex set with a downward-closed family of nonempty subsets.
///
/// Simplices are stored as sorted lists of vertex positions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AbstractComplex {
    vertices: Vec<String>,
    simplices: BTreeSet<Vec<usize>>,
}

/// Accepts `(V, S)` iff every singleton is present and `S` is closed under
/// taking nonempty subsets. Every missing face is reported.
pub fn validate_complex(vertices: &[String], simplices: &[Vec<String>]) -> Result<AbstractComplex, ComplexError> {
    let mut violations = BTreeSet::new();
    let mut index = HashMap::new();
    for (i, v) in vertices.iter().enumerate() {
        if index.insert(v.as_str(), i).is_some() {
            violations.insert(ComplexViolation::DuplicateVertex(v.clone()));
        }
    }
    let mut set = BTreeSet::new();
    for s in simplices {
        if s.is_empty() {
            violations.insert(ComplexViolation::EmptySimplex);
            continue;
        }
        let mut ids = Vec::with_capacity(s.len());
        for label in s {
            match index.get(label.as_str()) {
                Some(&i) => ids.push(i),
                None => {
                    violations.insert(ComplexViolation::UnknownVertex { label: label.clone() });
                }
            }
        }
        if ids.len() == s.len() {
            ids.sort_unstable();
            ids.dedup();
            set.insert(ids);
        }
    }
    for (i, v) in vertices.iter().enumerate() {
        if !set.contains(&vec![i]) {
            violations.insert(ComplexViolation::MissingVertex { label: v.clone() });
        }
    }
    for s in &set {
        for face in proper_subsets(s) {
            if face.len() > 1 && !set.contains(&face) {
                violations.insert(ComplexViolation::MissingFace {
                    face: face.iter().map(|&i| vertices[i].clone()).collect(),
                });
            }
        }
    }
    if violations.is_empty() {
        Ok(AbstractComplex {
            vertices: vertices.to_vec(),
            simplices: set,
        })
    } else {
        Err(ComplexError(violations.into_iter().collect()))
    }
}

fn proper_subsets(s: &[usize]) -> impl Iterator<Item = Vec<usize>> + '_ {
    let n = s.len();
    (1u64..(1u64 << n) - 1).map(move |mask| (0..n).filter(|b| mask >> b & 1 == 1).map(|b| s[b]).collect())
}

fn nonempty_subsets<T: Clone>(s: &[T]) -> impl Iterator<Item = Vec<T>> + '_ {
    let n = s.len();
    assert!(n < 63, "simplex too large to enumerate subsets");
    (1u64..1u64 << n).map(move |mask| (0..n).filter(|b| mask >> b & 1 == 1).map(|b| s[b].clone()).collect())
}

impl AbstractComplex {
    /// The downward closure of `generators`, plus every vertex as a singleton.
    pub fn closure(vertices: Vec<String>, generators: &[Vec<usize>]) -> Self {
        let mut simplices: BTreeSet<Vec<usize>> = (0..vertices.len()).map(|i| vec![i]).collect();
        for g in generators {
            let mut g = g.clone();
            g.sort_unstable();
            g.dedup();
            simplices.extend(nonempty_subsets(&g));
        }
        Self { vertices, simplices }
    }

    /// The full simplex on the given vertices.
    pub fn simplex(vertices: Vec<String>) -> Self {
        let all: Vec<usize> = (0..vertices.len()).collect();
        Self::closure(vertices, &[all])
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn simplices(&self) -> &BTreeSet<Vec<usize>> {
        &self.simplices
    }

    pub fn len(&self) -> usize {
        self.simplices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.simplices.is_empty()
    }

    pub fn contains(&self, simplex: &[usize]) -> bool {
        self.simplices.contains(simplex)
    }

    pub fn labels(&self, simplex: &[usize]) -> Vec<String> {
        simplex.iter().map(|&i| self.vertices[i].clone()).collect()
    }

    /// Simplices listed as label sets, in storage order.
    pub fn labelled_simplices(&self) -> Vec<Vec<String>> {
        self.simplices.iter().map(|s| self.labels(s)).collect()
    }

    /// Simplex counts by dimension.
    pub fn f_vector(&self) -> Vec<usize> {
        let top = self.simplices.iter().map(Vec::len).max().unwrap_or(0);
        let mut f = vec![0; top];
        for s in &self.simplices {
            f[s.len() - 1] += 1;
        }
        f
    }

    /// Simplices not properly contained in another, in lexicographic order.
    pub fn maximal_simplices(&self) -> Vec<Vec<usize>> {
        self.simplices
            .iter()
            .filter(|s| !self.simplices.iter().any(|t| t.len() > s.len() && is_subset(s, t)))
            .cloned()
            .collect()
    }

    pub fn dimension(&self) -> Option<usize> {
        self.simplices.iter().map(|s| s.len() - 1).max()
    }
}

fn is_subset(small: &[usize], big: &[usize]) -> bool {
    small.iter().all(|x| big.binary_search(x).is_ok())
}

/// `Σ_σ (-1)^{|σ| - 1}`.
pub fn euler_characteristic_complex(k: &AbstractComplex) -> i64 {
    k.simplices.iter().map(|s| if s.len() % 2 == 1 { 1 } else { -1 }).sum()
}

fn pair_label(a: &str, b: &str) -> String {
    format!("({a},{b})")
}

fn product_vertices(k: &[String], l: &[String]) -> Vec<String> {
    k.iter().flat_map(|a| l.iter().map(move |b| pair_label(a, b))).collect()
}

/// All nonempty `σ ⊆ V_K × V_L` whose two projections are simplices.
///
/// Vertex `(a, b)` sits at position `a * |V_L| + b`.
pub fn product_complex(k: &AbstractComplex, l: &AbstractComplex) -> AbstractComplex {
    let width = l.vertices.len();
    let mut simplices = BTreeSet::new();
    for s in k.maximal_simplices() {
        for t in l.maximal_simplices() {
            let cells: Vec<usize> = s.iter().flat_map(|&a| t.iter().map(move |&b| a * width + b)).collect();
            simplices.extend(nonempty_subsets(&cells).map(|mut c| {
                c.sort_unstable();
                c
            }));
        }
    }
    AbstractComplex {
        vertices: product_vertices(&k.vertices, &l.vertices),
        simplices,
    }
}

/// An abstract complex with a partial order on its vertices, in which every
/// simplex is a chain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrientedComplex {
    complex: AbstractComplex,
    /// `below[a][b]` iff `a <= b`; reflexive and transitive.
    below: Vec<Vec<bool>>,
}

impl OrientedComplex {
    /// Orders the vertices by the reflexive–transitive closure of `relations`
    /// (pairs `a <= b` by vertex position).
    pub fn new(complex: AbstractComplex, relations: &[(usize, usize)]) -> Result<Self, ComplexError> {
        let n = complex.vertices.len();
        let mut below = vec![vec![false; n]; n];
        for (i, row) in below.iter_mut().enumerate() {
            row[i] = true;
        }
        for &(a, b) in relations {
            below[a][b] = true;
        }
        for m in 0..n {
            for a in 0..n {
                if below[a][m] {
                    for b in 0..n {
                        if below[m][b] {
                            below[a][b] = true;
                        }
                    }
                }
            }
        }
        let mut violations = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                if below[a][b] && below[b][a] {
                    violations.push(ComplexViolation::OrderCycle {
                        a: complex.vertices[a].clone(),
                        b: complex.vertices[b].clone(),
                    });
                }
            }
        }
        let oriented = Self { complex, below };
        for s in &oriented.complex.simplices {
            if !oriented.is_chain(s) {
                violations.push(ComplexViolation::NotAChain {
                    simplex: oriented.complex.labels(s),
                });
            }
        }
        if violations.is_empty() {
            Ok(oriented)
        } else {
            Err(ComplexError(violations))
        }
    }

    /// Orders vertices by their listing order.
    pub fn with_listing_order(complex: AbstractComplex) -> Self {
        let n = complex.vertices.len();
        let below = (0..n).map(|a| (0..n).map(|b| a <= b).collect()).collect();
        Self { complex, below }
    }

    pub fn complex(&self) -> &AbstractComplex {
        &self.complex
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.below[a][b]
    }

    fn is_chain(&self, s: &[usize]) -> bool {
        s.iter().all(|&a| s.iter().all(|&b| self.below[a][b] || self.below[b][a]))
    }

    /// Generating relations `a <= b` (a != b), as vertex positions.
    pub fn relations(&self) -> Vec<(usize, usize)> {
        let n = self.below.len();
        (0..n)
            .flat_map(|a| (0..n).map(move |b| (a, b)))
            .filter(|&(a, b)| a != b && self.below[a][b])
            .collect()
    }

    /// The vertices of `s` listed in increasing order.
    pub fn ordered(&self, s: &[usize]) -> Vec<usize> {
        let mut v = s.to_vec();
        v.sort_by_key(|&a| s.iter().filter(|&&b| self.below[b][a]).count());
        v
    }
}

/// Vertices `V_K × V_L` with the componentwise order; simplices are the
/// chains whose projections are simplices.
pub fn product_oriented(k: &OrientedComplex, l: &OrientedComplex) -> OrientedComplex {
    let width = l.complex.vertices.len();
    let n = k.complex.vertices.len() * width;
    let below: Vec<Vec<bool>> = (0..n)
        .map(|p| {
            (0..n)
                .map(|q| k.below[p / width][q / width] && l.below[p % width][q % width])
                .collect()
        })
        .collect();
    let mut simplices = BTreeSet::new();
    for s in k.complex.maximal_simplices() {
        for t in l.complex.maximal_simplices() {
            let cells: Vec<usize> = s.iter().flat_map(|&a| t.iter().map(move |&b| a * width + b)).collect();
            for mut c in nonempty_subsets(&cells) {
                if c.iter().all(|&p| c.iter().all(|&q| below[p][q] || below[q][p])) {
                    c.sort_unstable();
                    simplices.insert(c);
                }
            }
        }
    }
    OrientedComplex {
        complex: AbstractComplex {
            vertices: product_vertices(&k.complex.vertices, &l.complex.vertices),
            simplices,
        },
        below,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RealizeError {
    #[error("vertex labelling is not a bijection onto 1..={0}")]
    NotBijective(usize),
}

/// Vertices placed at standard basis vectors, with maximal simplices.
#[derive(Debug, Clone, PartialEq)]
pub struct RealizedComplex {
    /// Vertex labels in coordinate order: entry `i` sits at `e_{i+1}`.
    pub labels: Vec<String>,
    pub coordinates: Vec<Vec<f64>>,
    /// Maximal simplices as sorted coordinate positions, lexicographic.
    pub maximal: Vec<Vec<usize>>,
}

/// Places vertex `v` at `e_{φ(v)}` in `R^|V|`. `phi[i]` is the 1-based
/// coordinate of the `i`-th vertex.
pub fn realize(k: &AbstractComplex, phi: &[usize]) -> Result<RealizedComplex, RealizeError> {
    let n = k.vertices.len();
    let mut position = vec![usize::MAX; n];
    if phi.len() != n {
        return Err(RealizeError::NotBijective(n));
    }
    for (v, &p) in phi.iter().enumerate() {
        if p == 0 || p > n || position[p - 1] != usize::MAX {
            return Err(RealizeError::NotBijective(n));
        }
        position[p - 1] = v;
    }
    let labels = position.iter().map(|&v| k.vertices[v].clone()).collect();
    let coordinates = (0..n)
        .map(|i| (0..n).map(|j| if i == j { 1.0 } else { 0.0 }).collect())
        .collect();
    let mut maximal: Vec<Vec<usize>> = k
        .maximal_simplices()
        .into_iter()
        .map(|s| {
            let mut c: Vec<usize> = s.iter().map(|&v| phi[v] - 1).collect();
            c.sort_unstable();
            c
        })
        .collect();
    maximal.sort();
    Ok(RealizedComplex {
        labels,
        coordinates,
        maximal,
    })
}

/// `φ` numbering vertices in listing order.
pub fn listing_order(k: &AbstractComplex) -> Vec<usize> {
    (1..=k.vertices.len()).collect()
}

impl RealizedComplex {
    /// Recovers the abstract complex by closing the maximal faces downward.
    pub fn to_complex(&self) -> AbstractComplex {
        AbstractComplex::closure(self.labels.clone(), &self.maximal)
    }

    /// OFF mesh text. Vertices are projected to their first three coordinates;
    /// the picture is not a faithful embedding once there are more than three.
    pub fn to_off(&self) -> String {
        let mut out = String::new();
        out.push_str("OFF\n");
        let _ = writeln!(out, "{} {} 0", self.coordinates.len(), self.maximal.len());
        for c in &self.coordinates {
            let xyz: Vec<String> = (0..3).map(|j| format!("{:.1}", c.get(j).copied().unwrap_or(0.0))).collect();
            let _ = writeln!(out, "{}", xyz.join(" "));
        }
        for face in &self.maximal {
            let idx: Vec<String> = face.iter().map(usize::to_string).collect();
            let _ = writeln!(out, "{} {}", face.len(), idx.join(" "));
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct OffMesh {
    pub vertices: Vec<[f64; 3]>,
    pub faces: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("OFF line {line}: {message}")]
pub struct OffError {
    pub line: usize,
    pub message: String,
}

/// Parses the subset of OFF produced by [`RealizedComplex::to_off`]; `#`
/// comments and blank lines are skipped.
pub fn parse_off(text: &str) -> Result<OffMesh, OffError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    let err = |line, message: &str| OffError {
        line,
        message: message.to_string(),
    };
    let (ln, header) = lines.next().ok_or_else(|| err(0, "empty input"))?;
    if header != "OFF" {
        return Err(err(ln, "expected OFF header"));
    }
    let (ln, counts) = lines.next().ok_or_else(|| err(ln, "missing counts line"))?;
    let counts: Vec<usize> = counts
        .split_whitespace()
        .map(str::parse)
        .collect::<Result<_, _>>()
        .map_err(|_| err(ln, "bad counts"))?;
    if counts.len() != 3 {
        return Err(err(ln, "counts line needs three integers"));
    }
    let mut vertices = Vec::with_capacity(counts[0]);
    for _ in 0..counts[0] {
        let (ln, l) = lines.next().ok_or_else(|| err(ln, "missing vertex line"))?;
        let xyz: Vec<f64> = l
            .split_whitespace()
            .map(str::parse)
            .collect::<Result<_, _>>()
            .map_err(|_| err(ln, "bad coordinate"))?;
        if xyz.len() != 3 {
            return Err(err(ln, "vertex needs three coordinates"));
        }
        vertices.push([xyz[0], xyz[1], xyz[2]]);
    }
    let mut faces = Vec::with_capacity(counts[1]);
    for _ in 0..counts[1] {
        let (ln, l) = lines.next().ok_or_else(|| err(ln, "missing face line"))?;
        let nums: Vec<usize> = l
            .split_whitespace()
            .map(str::parse)
            .collect::<Result<_, _>>()
            .map_err(|_| err(ln, "bad face index"))?;
        if nums.is_empty() || nums[0] + 1 != nums.len() {
            return Err(err(ln, "face length does not match its count"));
        }
        if nums[1..].iter().any(|&i| i >= vertices.len()) {
            return Err(err(ln, "face index out of range"));
        }
        faces.push(nums[1..].to_vec());
    }
    if let Some((ln, _)) = lines.next() {
        return Err(err(ln, "trailing data"));
    }
    Ok(OffMesh { vertices, faces })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(v: &[&str]) -> Vec<String> {
        v.iter().map(|x| x.to_string()).collect()
    }

    fn ten_simplex_listing() -> Vec<Vec<String>> {
        [
            &["a"][..],
            &["b"],
            &["c"],
            &["d"],
            &["a", "b"],
            &["a", "c"],
            &["b", "c"],
            &["b", "d"],
            &["c", "d"],
            &["a", "c", "d"],
        ]
        .iter()
        .map(|x| s(x))
        .collect()
    }

    /// The four-vertex example as the closure of its maximal faces; this adds
    /// the edge {a,d} that the listing above leaves out.
    fn example_k() -> AbstractComplex {
        AbstractComplex::closure(s(&["a", "b", "c", "d"]), &[vec![0, 1], vec![1, 2], vec![1, 3], vec![0, 2, 3]])
    }

    #[test]
    fn four_vertex_listing_lacks_an_edge() {
        let err = validate_complex(&s(&["a", "b", "c", "d"]), &ten_simplex_listing()).unwrap_err();
        assert_eq!(err.0, vec![ComplexViolation::MissingFace { face: s(&["a", "d"]) }]);

        let mut fixed = ten_simplex_listing();
        fixed.push(s(&["a", "d"]));
        let k = validate_complex(&s(&["a", "b", "c", "d"]), &fixed).unwrap();
        assert_eq!(k, example_k());
        assert_eq!(k.len(), 11);
        assert_eq!(k.f_vector(), vec![4, 6, 1]);
    }

    #[test]
    fn reports_missing_face() {
        let simplices: Vec<Vec<String>> = [&["a"][..], &["b"], &["c"], &["a", "b"], &["a", "c"], &["a", "b", "c"]]
            .iter()
            .map(|x| s(x))
            .collect();
        let err = validate_complex(&s(&["a", "b", "c"]), &simplices).unwrap_err();
        assert_eq!(err.0, vec![ComplexViolation::MissingFace { face: s(&["b", "c"]) }]);
    }

    #[test]
    fn single_point_and_bad_inputs() {
        assert!(validate_complex(&s(&["a"]), &[s(&["a"])]).is_ok());
        let err = validate_complex(&s(&["a", "b"]), &[s(&["a"]), s(&["z"])]).unwrap_err();
        assert!(err.0.contains(&ComplexViolation::MissingVertex { label: "b".into() }));
        assert!(err.0.contains(&ComplexViolation::UnknownVertex { label: "z".into() }));
        let err = validate_complex(&s(&["a", "a"]), &[s(&["a"])]).unwrap_err();
        assert!(err.0.contains(&ComplexViolation::DuplicateVertex("a".into())));
    }

    #[test]
    fn unoriented_products() {
        let d1 = AbstractComplex::simplex(s(&["v0", "v1"]));
        let two_points = AbstractComplex::closure(s(&["w0", "w1"]), &[]);
        let p = product_complex(&d1, &two_points);
        assert_eq!(p.f_vector(), vec![4, 2]);

        let square = product_complex(&d1, &d1);
        assert_eq!(square.len(), 15);
        assert_eq!(square.f_vector(), vec![4, 6, 4, 1]);

        let point = AbstractComplex::simplex(s(&["p"]));
        let k = example_k();
        let pk = product_complex(&point, &k);
        assert_eq!(pk.simplices(), k.simplices());
    }

    #[test]
    fn oriented_product_is_the_square() {
        let d1 = OrientedComplex::with_listing_order(AbstractComplex::simplex(s(&["v0", "v1"])));
        let p = product_oriented(&d1, &d1);
        assert_eq!(p.complex().f_vector(), vec![4, 5, 2]);
        // (v0,v1) and (v1,v0) sit at positions 1 and 2
        assert!(!p.complex().simplices().iter().any(|x| x.contains(&1) && x.contains(&2)));
        assert_eq!(p.complex().maximal_simplices(), vec![vec![0, 1, 3], vec![0, 2, 3]]);

        let point = OrientedComplex::with_listing_order(AbstractComplex::simplex(s(&["p"])));
        let k = OrientedComplex::with_listing_order(example_k());
        assert_eq!(product_oriented(&point, &k).complex().simplices(), k.complex().simplices());
    }

    #[test]
    fn orientation_must_make_simplices_chains() {
        let tri = AbstractComplex::simplex(s(&["a", "b", "c"]));
        let err = OrientedComplex::new(tri.clone(), &[(0, 1)]).unwrap_err();
        assert!(matches!(err.0[0], ComplexViolation::NotAChain { .. }));
        let ok = OrientedComplex::new(tri.clone(), &[(0, 1), (1, 2)]).unwrap();
        assert!(ok.leq(0, 2));
        let err = OrientedComplex::new(tri, &[(0, 1), (1, 0), (1, 2)]).unwrap_err();
        assert!(err.0.iter().any(|v| matches!(v, ComplexViolation::OrderCycle { .. })));
    }

    #[test]
    fn realization_examples() {
        let tri = AbstractComplex::simplex(s(&["0", "1", "2"]));
        let r = realize(&tri, &listing_order(&tri)).unwrap();
        assert_eq!(r.coordinates, vec![vec![1.0, 0.0, 0.0], vec![0.0, 1.0, 0.0], vec![0.0, 0.0, 1.0]]);
        assert_eq!(r.maximal, vec![vec![0, 1, 2]]);

        let point = AbstractComplex::simplex(s(&["p"]));
        assert_eq!(realize(&point, &[1]).unwrap().coordinates, vec![vec![1.0]]);

        let k = example_k();
        let r = realize(&k, &listing_order(&k)).unwrap();
        let labelled: Vec<Vec<String>> = r.maximal.iter().map(|m| m.iter().map(|&i| r.labels[i].clone()).collect()).collect();
        assert_eq!(labelled, vec![s(&["a", "b"]), s(&["a", "c", "d"]), s(&["b", "c"]), s(&["b", "d"])]);
        assert_eq!(r.to_complex(), k);

        assert!(realize(&k, &[1, 1, 2, 3]).is_err());
        assert!(realize(&k, &[1, 2, 3]).is_err());
        assert!(realize(&k, &[0, 1, 2, 3]).is_err());
    }

    #[test]
    fn realization_respects_phi() {
        let k = example_k();
        let r = realize(&k, &[4, 3, 2, 1]).unwrap();
        assert_eq!(r.labels, s(&["d", "c", "b", "a"]));
        assert_eq!(r.to_complex().labelled_simplices().len(), 11);
        let back = r.to_complex();
        let mut a: Vec<Vec<String>> = back.labelled_simplices().into_iter().map(|mut x| { x.sort(); x }).collect();
        let mut b: Vec<Vec<String>> = k.labelled_simplices();
        a.sort();
        b.sort();
        assert_eq!(a, b);
    }

    #[test]
    fn off_export_parses_back() {
        let k = example_k();
        let r = realize(&k, &listing_order(&k)).unwrap();
        let off = r.to_off();
        assert!(off.starts_with("OFF\n4 4 0\n1.0 0.0 0.0\n"));
        let mesh = parse_off(&off).unwrap();
        assert_eq!(mesh.vertices.len(), 4);
        assert_eq!(mesh.vertices[3], [0.0, 0.0, 0.0]);
        assert_eq!(mesh.faces, r.maximal);
        assert!(parse_off("OFF\n1 1 0\n0 0 0\n3 0 1 2\n").is_err());
        assert!(parse_off("PLY\n").is_err());
    }

    #[test]
    fn euler_characteristics() {
        let tri = AbstractComplex::simplex(s(&["0", "1", "2"]));
        assert_eq!(euler_characteristic_complex(&tri), 1);
        let bd = AbstractComplex::closure(s(&["0", "1", "2"]), &[vec![0, 1], vec![1, 2], vec![0, 2]]);
        assert_eq!(euler_characteristic_complex(&bd), 0);
        assert_eq!(euler_characteristic_complex(&octahedron()), 2);
        assert_eq!(octahedron().f_vector(), vec![6, 12, 8]);
    }

    pub(crate) fn octahedron() -> AbstractComplex {
        // top, bottom, then the equator in cyclic order
        let v = s(&["t", "b", "e0", "e1", "e2", "e3"]);
        let mut faces = Vec::new();
        for pole in [0, 1] {
            for i in 0..4 {
                faces.push(vec![pole, 2 + i, 2 + (i + 1) % 4]);
            }
        }
        AbstractComplex::closure(v, &faces)
    }
}
