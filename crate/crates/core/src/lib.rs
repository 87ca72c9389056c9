//! Exact Steiner 3-eccentricity on trees.
//!
//! The crate computes Steiner distances and Steiner k-eccentricities of
//! trees exactly, implements the degree-sequence preserving σ move and the
//! segment-sliding π move together with the reductions built from them,
//! constructs the extremal families (caterpillars, brooms, generalized and
//! balanced stars), and checks the extremal claims about these families on
//! every tree of small order.
//!
//! Averages are exact rationals. The arithmetic is generic over the integer
//! type (see [`num::ExactInt`]); [`Rational`] is the default instantiation.

pub mod census;
pub mod error;
pub mod extremal;
pub mod num;
pub mod steiner;
pub mod transforms;
pub mod tree;

pub use error::{Error, Result};
pub use tree::{CanonicalForm, DegreeSequence, PathInTree, SegmentSequence, Tree, Vertex};

/// Exact average with 64-bit numerator and denominator.
pub type Rational = num_rational::Ratio<i64>;

/// Exact average with 128-bit numerator and denominator.
pub type WideRational = num_rational::Ratio<i128>;
