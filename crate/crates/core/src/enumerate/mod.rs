//! Brute-force enumerators used as independent checks on the polynomial
//! evaluations.

pub mod circuits;
pub mod colorings;
pub mod delta;
pub mod flows;
pub mod orientation;
pub mod tensions;

use serde::{Deserialize, Serialize};

use crate::group::GroupElement;

/// A group value on every edge, indexed by edge.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct EdgeFunction {
    pub values: Vec<GroupElement>,
}

pub use circuits::{circuit_walk, enumerate_circuits, Circuit, CircuitKind, CircuitWalk, Cycle};
pub use orientation::{default_orientation, Orientation};
pub use tensions::{count_tensions, TensionCounts, TensionMode};
