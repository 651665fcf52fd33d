//! Exact scalar and series arithmetic.
//!
//! Everything in this crate is exact: prime and extension finite fields with
//! deterministically chosen moduli, arbitrary-precision rationals, dense
//! univariate and sparse multivariate polynomials, truncated power series over
//! finite-field extensions, truncated unramified p-adic rings, and Newton/Hensel
//! lifting of points on polynomial systems.
//!
//! All values are immutable after construction and all operations are pure
//! functions, so everything here is safe to use from multiple threads.

pub mod algebra;
pub mod ext;
pub mod fiber;
pub mod field;
pub mod fq;
pub mod hensel;
pub mod intutil;
pub mod linalg;
pub mod multipoly;
pub mod poly;
pub mod polyfactor;
pub mod rat;
pub mod ratfn;
pub mod series;
pub mod zpoly;
pub mod zq;

pub use ext::ExtField;
pub use field::{Field, FiniteField};
pub use fq::Fq;
pub use rat::{BigRat, QField};
pub use series::{SeriesRing, TruncSeries};
pub use zq::ZqRing;

/// Errors shared across the arithmetic layer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ArithError {
    /// A claimed prime is not prime.
    NotPrime(u64),
    /// Precision mismatch between truncated operands.
    PrecisionMismatch { left: usize, right: usize },
    /// Inversion of a non-unit was requested.
    NotAUnit,
    /// The Jacobian of a system is not a unit at the approximate root.
    JacobianNotUnit,
    /// Equations do not vanish at the claimed approximate root.
    NotARoot,
    /// An algebra that must be etale (separable) is not.
    NotEtale,
    /// Input outside the supported families.
    Unsupported(String),
}

impl std::fmt::Display for ArithError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ArithError::NotPrime(p) => write!(f, "{p} is not prime"),
            ArithError::PrecisionMismatch { left, right } => {
                write!(f, "precision mismatch: {left} vs {right}")
            }
            ArithError::NotAUnit => write!(f, "element is not a unit"),
            ArithError::JacobianNotUnit => write!(f, "jacobian is not a unit at the point"),
            ArithError::NotARoot => write!(f, "equations do not vanish at the approximate root"),
            ArithError::NotEtale => write!(f, "algebra is not etale"),
            ArithError::Unsupported(s) => write!(f, "unsupported input: {s}"),
        }
    }
}

impl std::error::Error for ArithError {}
