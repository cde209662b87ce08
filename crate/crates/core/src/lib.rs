//! Exact computation of the trivariate Tutte polynomial of signed graphs,
//! the joint Tutte polynomial of matroid pairs, and brute-force counters
//! for flows, colorings and tensions over finite abelian groups.

pub mod battery;
pub mod budget;
pub mod enumerate;
pub mod error;
pub mod graph;
pub mod group;
pub mod io;
pub mod matroid;
pub mod poly;
mod subsets;
pub mod tutte;
pub mod verify;

pub use error::{Error, Result};
pub use graph::{ComponentProfile, Edge, EdgeClass, EdgeSubset, FrameRole, GraphRole, Sign, SignedGraph};
pub use group::{FiniteAbelianGroup, GroupElement};
pub use poly::{Rational, TriPoly, Var};
