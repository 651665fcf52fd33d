//! Exact linear algebra over fields and Z, LLL reduction (integer and
//! floating-Gram), and minimal kernel bases of polynomial matrices with
//! row-degree profiles.
//!
//! Everything operates on immutable inputs and returns fresh values; all
//! asserted properties (exact re-substitution, saturation, the Lovasz
//! condition, pivot minimality) are checkable afterwards with the provided
//! predicates.

pub mod lll;
pub mod matrix;
pub mod popov;
pub mod zmat;

pub use lll::{gram_lll, lll_reduce, lovasz_holds, GramLllError};
pub use matrix::{rank_kernel_field, ExactMatrix};
pub use popov::{min_kernel_basis, weak_popov, DegreeProfile, PolyMat};
pub use zmat::{hnf_with_transform, integer_kernel, kernel_is_saturated};
