//! Exact computations for Artinian Gorenstein quotients of `k[x, y, z, w]`
//! with Hilbert function 1, 4, 4, 1.
//!
//! The crate covers exact coefficient fields, sparse polynomials, Macaulay
//! inverse systems, Gröbner bases with colon ideals and Hilbert series, graded
//! free complexes with an acyclicity certificate and mapping cones, and a
//! [`catalog`] of every non-quadratic case together with the pipeline that
//! builds and certifies its minimal free resolution by doubling.
//!
//! ```
//! use gorlab::{annihilator, parse_dual, DualGenerator, FieldDescriptor};
//!
//! let q = FieldDescriptor::Rationals;
//! let f = DualGenerator::new(parse_dual("X*Y[2] + Z*W[2]", q)?)?;
//! let i = annihilator(&f);
//! assert_eq!(i.minimal_generators().count(), 9);
//! assert_eq!(i.artinian_hilbert_function(12), Some(vec![1, 4, 4, 1]));
//! # Ok::<(), gorlab::Error>(())
//! ```

pub mod catalog;
pub mod field;
pub mod groebner;
pub mod homalg;
pub mod invsys;
pub mod linalg;
pub mod matrix;
pub mod monomial;
pub mod poly;
pub mod text;

pub use catalog::{case_data, run_case, verify_all, CaseId, CatalogError, Certificate, Params};
pub use field::{FieldDescriptor, FieldError, Scalar};
pub use groebner::{GroebnerError, HilbertSeries, Ideal};
pub use homalg::{BettiTable, GradedComplex, GradedMatrix, HomalgError};
pub use invsys::{annihilator, DividedForm, DualGenerator, InvsysError};
pub use matrix::PolyMatrix;
pub use poly::{LinearChange, PolyError, Polynomial};
pub use text::{parse_dual, parse_poly, ParseError};

/// Any error raised by the crate.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Groebner(#[from] GroebnerError),
    #[error(transparent)]
    Invsys(#[from] InvsysError),
    #[error(transparent)]
    Homalg(#[from] HomalgError),
    #[error(transparent)]
    Catalog(#[from] CatalogError),
}

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/polynomials.md")]
    mod polynomials {}
    #[doc = include_str!("../../../book/src/inverse-systems.md")]
    mod inverse_systems {}
    #[doc = include_str!("../../../book/src/groebner.md")]
    mod groebner {}
    #[doc = include_str!("../../../book/src/complexes.md")]
    mod complexes {}
    #[doc = include_str!("../../../book/src/doubling.md")]
    mod doubling {}
    #[doc = include_str!("../../../book/src/certificates.md")]
    mod certificates {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
    #[doc = include_str!("../../../README.md")]
    mod readme {}
}
