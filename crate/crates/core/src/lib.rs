//! Finitely presented simplicial sets.
//!
//! A [`FiniteSSet`] stores its nondegenerate simplices level by level; every
//! simplex is a degeneracy word applied to one of them. On top of that sit
//! standard constructions (simplices, horns, products, quotients), nerves of
//! finite categories, horn-filler recognition and integral homology.
//!
//! ```
//! use simplicial::{constructions, homology};
//!
//! let d1 = constructions::standard_simplex(1, 3).unwrap();
//! let ends = constructions::SubSSet::new(&d1, d1.keys(0)).unwrap();
//! let (circle, _) = constructions::collapse(&d1, &ends).unwrap();
//! assert_eq!(circle.f_vector(), vec![1, 1]);
//! assert_eq!(homology::homology(&circle, 1).unwrap().group.to_string(), "Z");
//! ```

pub mod complexes;
pub mod constructions;
pub mod delta;
pub mod document;
pub mod fincat;
pub mod homology;
pub mod horn;
pub mod sset;

pub use delta::OrdinalMap;
pub use sset::{DegeneracyWord, FiniteSSet, Simplex, SimplexKey, SimplexRef, SimplicialMap};
