//! Exact intersection-theory toolkit for Fano positivity questions.
//!
//! The crate computes Chern characters of tangent bundles on a small catalog
//! of spaces (weighted projective spaces, complete intersections,
//! Grassmannians, products and split `P¹`-bundles) and decides whether the
//! anticanonical class is ample and whether `ch₂(T_X) = (c₁² − 2c₂)/2` is nef
//! against cataloged effective surface classes. Every coefficient is an exact
//! rational number.

pub mod error;
pub mod chern;
pub mod classify;
pub mod report;
pub mod ring;
pub mod spaces;
pub mod spec_text;

pub use error::{Error, Result};
pub use chern::{bundle_quotient, tensor, tensor_line, whitney_sum, ChernCharacter, FormalBundle};
pub use ring::{GradedClass, Partition, Rational, Ring, RingKind};
