#![allow(dead_code)]

use simplicial::constructions::{self, SubSSet, boundary, collapse, horn, product, standard_simplex};
use simplicial::fincat::{self, FinCategory};
use simplicial::{FiniteSSet, SimplexKey, SimplexRef};

pub const D: usize = 4;

pub fn simplex(n: usize) -> FiniteSSet {
    standard_simplex(n, D).unwrap()
}

pub fn circle() -> FiniteSSet {
    let d1 = simplex(1);
    let ends = SubSSet::new(&d1, d1.keys(0)).unwrap();
    collapse(&d1, &ends).unwrap().0
}

pub fn sphere2() -> FiniteSSet {
    let d2 = simplex(2);
    let b = SubSSet::generated_by(&d2, d2.keys(1)).unwrap();
    collapse(&d2, &b).unwrap().0
}

pub fn collapsed_edge() -> FiniteSSet {
    let d2 = simplex(2);
    let e = SubSSet::generated_by(&d2, [SimplexKey::new(1, 2)]).unwrap();
    collapse(&d2, &e).unwrap().0
}

pub fn times(a: &FiniteSSet, b: &FiniteSSet) -> FiniteSSet {
    product(a, b).unwrap().sset
}

pub fn categories() -> Vec<(String, FinCategory)> {
    vec![
        ("[0]".into(), fincat::poset_category(0)),
        ("[1]".into(), fincat::poset_category(1)),
        ("[2]".into(), fincat::poset_category(2)),
        ("Z/2".into(), fincat::cyclic_group(2)),
        ("Z/3".into(), fincat::cyclic_group(3)),
        ("iso".into(), fincat::two_object_groupoid()),
        ("[1]+Z/2".into(), fincat::disjoint_union(&fincat::poset_category(1), &fincat::cyclic_group(2))),
    ]
}

pub fn corpus() -> Vec<(String, FiniteSSet)> {
    let mut out = Vec::new();
    for n in 0..=4 {
        out.push((format!("Δ[{n}]"), simplex(n)));
    }
    for n in 1..=4 {
        out.push((format!("∂Δ[{n}]"), boundary(n, D).unwrap()));
    }
    for n in 1..=4 {
        for k in 0..=n {
            out.push((format!("Λ^{k}[{n}]"), horn(n, k, D).unwrap()));
        }
    }
    out.push(("circle".into(), circle()));
    out.push(("S^2".into(), sphere2()));
    out.push(("Δ[2]/edge".into(), collapsed_edge()));
    out.push(("Δ[1]×Δ[1]".into(), times(&simplex(1), &simplex(1))));
    out.push(("Δ[1]×Δ[2]".into(), times(&simplex(1), &simplex(2))));
    out.push(("∂Δ[2]×Δ[1]".into(), times(&boundary(2, D).unwrap(), &simplex(1))));
    out.push(("torus".into(), times(&circle(), &circle())));
    out.push(("Λ^1[2]×Δ[1]".into(), times(&horn(2, 1, D).unwrap(), &simplex(1))));
    out.push((
        "Δ[0]+circle".into(),
        constructions::coproduct(&simplex(0), &circle()).unwrap(),
    ));
    for (name, c) in categories() {
        out.push((format!("N({name})"), fincat::nerve(&c, D).unwrap()));
    }
    out
}

fn rebuild(k: &FiniteSSet, edit: impl FnOnce(&mut Vec<Vec<simplicial::Simplex>>)) -> FiniteSSet {
    let mut levels = k.levels().to_vec();
    edit(&mut levels);
    FiniteSSet::from_levels(k.truncation(), levels).expect("mutation keeps references well formed")
}

/// Presentations whose face references resolve but break an identity.
pub fn mutants() -> Vec<(String, FiniteSSet)> {
    let d2 = simplex(2);
    let d3 = simplex(3);
    let b3 = boundary(3, D).unwrap();
    let square = times(&simplex(1), &simplex(1));
    let n2 = fincat::nerve(&fincat::poset_category(2), D).unwrap();
    vec![
        ("Δ[2] with d0, d1 swapped".into(), rebuild(&d2, |l| l[2][0].faces.swap(0, 1))),
        ("Δ[2] with d2 = d0".into(), rebuild(&d2, |l| l[2][0].faces[2] = l[2][0].faces[0].clone())),
        ("Δ[3] with a reversed top".into(), rebuild(&d3, |l| l[3][0].faces.reverse())),
        (
            "∂Δ[3] with a collapsed face".into(),
            rebuild(&b3, |l| {
                let v = l[2][0].faces[0].clone();
                let s0 = simplicial::DegeneracyWord::new(vec![0], 0).unwrap();
                l[2][0].faces[0] = SimplexRef::new(s0, b3.vertices_of(&v).unwrap()[0]);
            }),
        ),
        (
            "square with an edge's ends swapped".into(),
            rebuild(&square, |l| l[1][0].faces.swap(0, 1)),
        ),
        ("N([2]) with d1 = d2".into(), rebuild(&n2, |l| l[2][0].faces[1] = l[2][0].faces[2].clone())),
    ]
}
