//! Cayley extensions of maniplexes.
//!
//! Flag graphs are stored as `n` adjacency involutions over dense flag ids.
//! A [`CayleyExtender`] (a facet pairing `r_n` plus one voltage per facet in
//! a finite group) yields a rank `n + 1` derived maniplex whose automorphism
//! group acts regularly on facets. Around that core the crate provides
//! automorphism groups and symmetry type graphs, a polytopality checker,
//! truncated balls of universal extensions, friendly groups, flat
//! amalgamations and text formats.

pub mod acceptance;
pub mod amalgamation;
pub mod automorphisms;
pub mod caps;
pub mod constructions;
pub mod error;
pub mod extender;
pub mod friendly;
pub mod groups;
pub mod io;
pub mod maniplex;
pub mod partition;
pub mod perm;
pub mod universal;

pub use automorphisms::{
    automorphism_group, is_isomorphic, is_regular, quotient_by, symmetry_type_graph, AutomorphismGroup,
    SymmetryTypeGraph,
};
pub use error::{Error, Result};
pub use extender::{
    derived_maniplex, face_lattice_oracle, is_polytopal, CayleyExtender, Coextender, DerivedManiplex, PreExtender,
};
pub use groups::{parse_group_spec, FacetPairing, GroupModel, ReducedWord};
pub use maniplex::{ColorWord, Premaniplex};
pub use partition::Partition;
pub use perm::Perm;
