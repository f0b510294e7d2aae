//! Exact enumeration of involutive Baxter permutations through
//! non-intersecting lattice walks.
//!
//! The crate pairs every counting formula with an exhaustive oracle:
//! permutation censuses ([`perm`]), vertex-disjoint walk triples and their
//! LGV determinants ([`walks`]), the sink-decoration code ([`sink_code`]),
//! the head-swap involution on diagonal path triples ([`path_swap`]), and
//! the closed forms themselves ([`closed_forms`]).

pub mod arith;
pub mod bounds;
pub mod closed_forms;
pub mod error;
pub mod path_swap;
pub mod perm;
pub mod sink_code;
pub mod walks;

pub use bounds::Bounds;
pub use error::{Error, Result};
pub use perm::{ParameterProfile, Permutation};
pub use walks::{BinaryWalk, LatticePoint, Step, WalkTuple};
