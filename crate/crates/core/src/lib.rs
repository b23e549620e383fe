//! Exact delta-matroid calculus over GF(2) and GF(4).
//!
//! Ground sets have at most 64 elements and subsets are `u64` masks. The
//! crate covers principal pivot transforms, the twist / loop complementation
//! / dual pivot action on set systems, matroids given by bases, graphs as
//! symmetric GF(2) matrices, bicycle spaces and the principal tripartition,
//! and the transition / Penrose / Tutte polynomial family.

pub mod bicycle;
pub mod bits;
pub mod capacity;
pub mod error;
pub mod field;
pub mod format;
pub mod graph;
pub mod ground;
pub mod matrix;
pub mod matroid;
pub mod poly;
pub mod setsys;
pub mod vector;

pub use bits::Mask;
pub use error::{Error, Result};
pub use field::{Automorphism, Field, FieldTag, Gf4};
pub use bicycle::Tripartition;
pub use graph::Graph;
pub use ground::Ground;
pub use matrix::{RectMatrix, SquareMatrix};
pub use matroid::{Matroid, Subspace};
pub use setsys::{Op, OpKind, SetSystem};
pub use vector::PackedVec;
pub use poly::{IntPoly, Poly, Poly2, RatPoly, TransitionWeights};
