//! Shared fixtures for the benchmarks.

use forge_core::constructions::{cube, toroid_44, two_hat};
use forge_core::{CayleyExtender, DerivedManiplex};

pub fn two_hat_cube() -> CayleyExtender {
    two_hat(&cube(3).expect("cube")).expect("two-hat")
}

/// Derived maniplex of the {4,4}_(a,0),(0,b) toroid.
pub fn toroid(a: usize, b: usize) -> DerivedManiplex {
    toroid_44(a, b).expect("toroid").derive()
}
