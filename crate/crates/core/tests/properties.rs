mod common;

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use proptest::prelude::*;

use common::{D, circle, collapsed_edge, simplex, times};
use simplicial::constructions::{boundary, horn, product};
use simplicial::delta::{OrdinalMap, compose, enumerate_maps, factorize};
use simplicial::document::{ObjectDocument, parse_document, serialize_document};
use simplicial::fincat::{FinCategory, Morphism, enumerate_functors, nerve, validate_category};
use simplicial::homology::{Matrix, euler_characteristic, smith_normal_form};
use simplicial::horn::{is_groupoid_nerve_up_to, is_kan_up_to, is_nerve_up_to, is_quasicategory_up_to};
use simplicial::sset::count_simplicial_maps;
use simplicial::{FiniteSSet};

fn corpus() -> &'static [(String, FiniteSSet)] {
    static CORPUS: OnceLock<Vec<(String, FiniteSSet)>> = OnceLock::new();
    CORPUS.get_or_init(common::corpus)
}

/// Finite objects whose products stay within truncation `D`.
fn small() -> Vec<FiniteSSet> {
    vec![
        simplex(0),
        simplex(1),
        simplex(2),
        boundary(2, D).unwrap(),
        horn(2, 0, D).unwrap(),
        circle(),
        collapsed_edge(),
    ]
}

fn small_objects() -> &'static [FiniteSSet] {
    static SMALL: OnceLock<Vec<FiniteSSet>> = OnceLock::new();
    SMALL.get_or_init(small)
}

fn monotone(k: usize, n: usize) -> impl Strategy<Value = OrdinalMap> {
    proptest::collection::vec(0..=n, k + 1).prop_map(move |mut v| {
        v.sort_unstable();
        OrdinalMap::new(n, v).unwrap()
    })
}

proptest! {
    #[test]
    fn cosimplicial_identities(n in 2usize..7, i in 0usize..7, j in 0usize..7) {
        let (i, j) = (i.min(j), i.max(j));
        prop_assume!(j <= n && i < j);
        // δ_j δ_i = δ_i δ_{j-1} on [n-2] -> [n]
        let lhs = compose(&OrdinalMap::coface(i, n - 1).unwrap(), &OrdinalMap::coface(j, n).unwrap()).unwrap();
        let rhs = compose(&OrdinalMap::coface(j - 1, n - 1).unwrap(), &OrdinalMap::coface(i, n).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn codegeneracy_identities(n in 0usize..6, i in 0usize..6, j in 0usize..6) {
        let (i, j) = (i.min(j), i.max(j));
        prop_assume!(j <= n);
        // σ_j σ_i = σ_i σ_{j+1} on [n+2] -> [n]
        let lhs = compose(&OrdinalMap::codegeneracy(i, n + 1).unwrap(), &OrdinalMap::codegeneracy(j, n).unwrap()).unwrap();
        let rhs = compose(&OrdinalMap::codegeneracy(j + 1, n + 1).unwrap(), &OrdinalMap::codegeneracy(i, n).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn mixed_identities(n in 1usize..6, i in 0usize..7, j in 0usize..6) {
        prop_assume!(i <= n + 1 && j <= n);
        // σ_j δ_i : [n] -> [n]
        let s = OrdinalMap::codegeneracy(j, n).unwrap();
        let lhs = compose(&OrdinalMap::coface(i, n + 1).unwrap(), &s).unwrap();
        let rhs = if i < j {
            compose(&OrdinalMap::codegeneracy(j - 1, n - 1).unwrap(), &OrdinalMap::coface(i, n).unwrap()).unwrap()
        } else if i == j || i == j + 1 {
            OrdinalMap::identity(n)
        } else {
            compose(&OrdinalMap::codegeneracy(j, n - 1).unwrap(), &OrdinalMap::coface(i - 1, n).unwrap()).unwrap()
        };
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn factorization_recomposes((k, n) in (0usize..7, 0usize..7), seed in any::<u64>()) {
        let maps = enumerate_maps(k, n);
        let f = &maps[(seed % maps.len() as u64) as usize];
        let fac = factorize(f);
        prop_assert!(fac.degeneracies.is_canonical() && fac.faces.is_canonical());
        prop_assert_eq!(&fac.recompose().unwrap(), f);
    }

    #[test]
    fn composition_is_associative(f in monotone(2, 3), g in monotone(3, 4), h in monotone(4, 2)) {
        let left = compose(&compose(&f, &g).unwrap(), &h).unwrap();
        let right = compose(&f, &compose(&g, &h).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }
}

fn face_identities_hold(k: &FiniteSSet, dim: usize) -> Result<(), TestCaseError> {
    for x in k.level_set(dim).unwrap() {
        let n = x.dim();
        for i in 0..=n {
            for j in (i + 1)..=n {
                if n >= 2 {
                    let a = k.face(&k.face(&x, j).unwrap(), i).unwrap();
                    let b = k.face(&k.face(&x, i).unwrap(), j - 1).unwrap();
                    prop_assert_eq!(a, b, "d{} d{} on {}", i, j, k.describe(&x));
                }
            }
        }
        for j in 0..=n {
            let s = k.degeneracy(&x, j).unwrap();
            for i in 0..=n + 1 {
                let lhs = k.face(&s, i).unwrap();
                let rhs = if i < j {
                    k.degeneracy(&k.face(&x, i).unwrap(), j - 1).unwrap()
                } else if i == j || i == j + 1 {
                    x.clone()
                } else {
                    k.degeneracy(&k.face(&x, i - 1).unwrap(), j).unwrap()
                };
                prop_assert_eq!(lhs, rhs, "d{} s{} on {}", i, j, k.describe(&x));
            }
            for i in 0..=j {
                let lhs = k.degeneracy(&k.degeneracy(&x, j).unwrap(), i).unwrap();
                let rhs = k.degeneracy(&k.degeneracy(&x, i).unwrap(), j + 1).unwrap();
                prop_assert_eq!(lhs, rhs, "s{} s{} on {}", i, j, k.describe(&x));
            }
        }
    }
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn simplicial_identities_on_corpus(idx in 0usize..1000, dim in 0usize..=2) {
        let (_, k) = &corpus()[idx % corpus().len()];
        face_identities_hold(k, dim)?;
    }

    #[test]
    fn product_is_a_product(a in 0usize..7, b in 0usize..7, n in 0usize..3) {
        let (k, l) = (&small_objects()[a], &small_objects()[b]);
        let p = product(k, l).unwrap();
        let t = simplex(n);
        let want = count_simplicial_maps(&t, k).unwrap() * count_simplicial_maps(&t, l).unwrap();
        prop_assert_eq!(count_simplicial_maps(&t, &p.sset).unwrap(), want);
        for m in 0..=3 {
            let got = p.sset.level_set(m).unwrap().len();
            prop_assert_eq!(got, k.level_set(m).unwrap().len() * l.level_set(m).unwrap().len());
        }
        for x in p.sset.level_set(n).unwrap() {
            let pair = (p.left.apply(&x).unwrap(), p.right.apply(&x).unwrap());
            let again = p.sset.level_set(n).unwrap().into_iter()
                .filter(|y| (p.left.apply(y).unwrap(), p.right.apply(y).unwrap()) == pair)
                .count();
            prop_assert_eq!(again, 1);
        }
    }

    #[test]
    fn euler_characteristic_is_multiplicative(a in 0usize..7, b in 0usize..7) {
        let (k, l) = (&small_objects()[a], &small_objects()[b]);
        prop_assert_eq!(euler_characteristic(&times(k, l)), euler_characteristic(k) * euler_characteristic(l));
    }

    #[test]
    fn implication_lattice(idx in 0usize..1000) {
        let (name, k) = &corpus()[idx % corpus().len()];
        let kan = is_kan_up_to(k, 3).unwrap().passed();
        let qcat = is_quasicategory_up_to(k, 3).unwrap().passed();
        let nerve = is_nerve_up_to(k, 3).unwrap().passed();
        let groupoid = is_groupoid_nerve_up_to(k, 3).unwrap().passed();
        prop_assert!(!groupoid || nerve, "{}", name);
        prop_assert!(!groupoid || kan, "{}", name);
        prop_assert!(!nerve || qcat, "{}", name);
        prop_assert!(!kan || qcat, "{}", name);
    }

    #[test]
    fn documents_round_trip(a in 0usize..7, b in 0usize..7) {
        let doc = ObjectDocument::sset("p", times(&small_objects()[a], &small_objects()[b]));
        let text = serialize_document(&doc);
        let back = parse_document(&text).unwrap();
        prop_assert_eq!(serialize_document(&back), text);
        prop_assert_eq!(back, doc);
    }
}

/// Cofactor expansion; small matrices only.
fn det(m: &[Vec<i64>]) -> BigInt {
    if m.is_empty() {
        return BigInt::from(1);
    }
    let mut total = BigInt::zero();
    for c in 0..m.len() {
        let minor: Vec<Vec<i64>> = m[1..]
            .iter()
            .map(|r| r.iter().enumerate().filter(|&(j, _)| j != c).map(|(_, &v)| v).collect())
            .collect();
        let term = BigInt::from(m[0][c]) * det(&minor);
        if c % 2 == 0 { total += term } else { total -= term }
    }
    total
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    (0u32..1 << n)
        .filter(|s| s.count_ones() as usize == k)
        .map(|s| (0..n).filter(|i| s >> i & 1 == 1).collect())
        .collect()
}

/// `gcd` of all `k x k` minors.
fn determinantal_divisor(m: &[Vec<i64>], k: usize) -> BigInt {
    let (rows, cols) = (m.len(), m[0].len());
    let mut g = BigInt::zero();
    for r in subsets(rows, k) {
        for c in subsets(cols, k) {
            let minor: Vec<Vec<i64>> = r.iter().map(|&i| c.iter().map(|&j| m[i][j]).collect()).collect();
            g = num_integer::Integer::gcd(&g, &det(&minor));
        }
    }
    g
}

fn matrix() -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1usize..5, 1usize..5).prop_flat_map(|(r, c)| proptest::collection::vec(proptest::collection::vec(-6i64..=6, c), r))
}

proptest! {
    #[test]
    fn snf_matches_determinantal_divisors(rows in matrix()) {
        let cols = rows[0].len();
        let m = Matrix::from_rows(rows.clone(), cols);
        let snf = smith_normal_form(&m);
        prop_assert_eq!(snf.recompose(), m.to_big());
        let d = &snf.diagonal;
        for w in d.windows(2) {
            prop_assert!(w[1].is_zero() || (!w[0].is_zero() && (&w[1] % &w[0]).is_zero()));
            prop_assert!(!w[0].is_negative());
        }
        let mut product = BigInt::from(1);
        for k in 1..=rows.len().min(cols) {
            product *= &d[k - 1];
            prop_assert_eq!(product.abs(), determinantal_divisor(&rows, k));
        }
    }
}

/// A random poset on `0..n` from a strictly upper triangular relation.
fn poset(n: usize, bits: u64) -> FinCategory {
    let mut le = vec![vec![false; n]; n];
    let mut bit = 0;
    for i in 0..n {
        le[i][i] = true;
        for j in i + 1..n {
            le[i][j] = bits >> bit & 1 == 1;
            bit += 1;
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if le[i][k] && le[k][j] {
                    le[i][j] = true;
                }
            }
        }
    }
    let mut morphisms = Vec::new();
    let mut index = std::collections::HashMap::new();
    for i in 0..n {
        for j in 0..n {
            if le[i][j] && i != j {
                index.insert((i, j), morphisms.len());
                morphisms.push(Morphism { name: format!("{i}<{j}"), src: i, dst: j });
            }
        }
    }
    let objects: Vec<String> = (0..n).map(|i| format!("p{i}")).collect();
    let mut compositions = Vec::new();
    for (&(i, j), &f) in &index {
        for (&(j2, k), &g) in &index {
            if j == j2 {
                compositions.push((f, g, index[&(i, k)]));
            }
        }
    }
    FinCategory::new(objects, morphisms, None, &compositions).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn random_posets_have_nerves(n in 1usize..4, bits in any::<u64>(), m in 1usize..4, bits2 in any::<u64>()) {
        let c = poset(n, bits);
        let d = poset(m, bits2);
        prop_assert!(validate_category(&c).is_valid());
        let nc = nerve(&c, 3).unwrap();
        let nd = nerve(&d, 3).unwrap();
        prop_assert!(nc.validate().is_valid());
        prop_assert!(is_nerve_up_to(&nc, 2).unwrap().passed());
        prop_assert_eq!(enumerate_functors(&c, &d).len(), count_simplicial_maps(&nc, &nd).unwrap());
    }
}
