//! Exact computations in the oriented skein category: standard bases of
//! morphism spaces, the bar involution, and Kazhdan–Lusztig type canonical
//! bases, including those of quantized walled Brauer algebras.

pub mod canonical;
pub mod category;
pub mod check;
pub mod diagram;
pub mod engine;
pub mod error;
pub mod gram;
pub mod homspace;
pub mod kl;
pub mod linalg;
pub mod linkeval;
pub mod morphism;
pub mod poly;
pub mod qwb;
pub mod render;
pub mod scalar;
pub mod tangle;
pub mod verify;

pub use engine::Engine;
pub use error::{Result, SkeinError};
pub use morphism::Morphism;
pub use poly::{Coefficient, LaurentPoly, QPoly};
pub use scalar::{negative_part_solve, ZFraction};

use num_bigint::BigInt;

/// Laurent polynomials in `q, t` with arbitrary-precision coefficients.
pub type IntLaurent = LaurentPoly<BigInt>;
/// Laurent polynomials in `q` alone.
pub type QLaurent = QPoly<BigInt>;
/// The coefficient ring `Z[q^±, t^±, 1/(q - q^{-1})]`.
pub type Scalar = ZFraction<BigInt>;
