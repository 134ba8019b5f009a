//! Exact kernels for Weyl groups, weight orbits, the rational group algebra
//! and the orbit-indexed correspondence matrices built on top of them.
//!
//! Everything here is `no_std` (with `alloc`). All arithmetic is exact: weights
//! and form values are arbitrary-precision rationals, group elements are small
//! integer matrices acting on the right of row vectors written in the
//! fundamental-weight basis.
//!
//! The invariant form is normalized so that long roots have squared length 2.
#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod algebra;
pub mod correspondence;
pub mod error;
pub mod lattice;
pub mod linalg;
pub mod report;
pub mod root;
pub mod tabulated;
pub mod weyl;

pub use algebra::{AlgebraElement, Character, GroupAlgebra};
pub use correspondence::{CorrespondenceKind, CorrespondenceMatrix, ExponentData};
pub use error::{Error, Result};
pub use lattice::{IntMatrix, LatticeBasis, SnfResult};
pub use linalg::{QMatrix, Rational};
pub use report::{Check, Report, Verdict};
pub use root::{Family, LieType, RootDatum, Weight};
pub use weyl::{CosetSystem, WeightOrbit, WeylElement, WeylGroup};

/// Default cap on |W| for anything that enumerates the group or works in the
/// group algebra.
pub const DEFAULT_MAX_GROUP_ORDER: u64 = 10_000;

/// Default cap on orbit sizes for dense correspondence matrices.
pub const DEFAULT_MAX_DENSE_ORBIT: usize = 4_096;

/// Short description of the form normalization, carried by every export.
pub const NORMALIZATION: &str = "invariant form normalized so that long roots have squared length 2";
