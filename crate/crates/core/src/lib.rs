//! Exact symbolic kernel for Cohen-Macaulayness obstructions in
//! amalgamated rings R = k + Q inside polynomial rings S = k[x_1..x_n].
//!
//! The pipeline, bottom to top:
//!
//! * [`poly`] — sparse exact polynomial arithmetic over QQ and F_p;
//! * [`groebner`] — Buchberger's algorithm and the ideal toolbox
//!   (membership with reduction traces, radical membership, intersection,
//!   colon, saturation, gcd, dimension and height);
//! * [`cech`] — the computable vanishing test for the second Cech
//!   cohomology of a pair, with certificate exponents;
//! * [`kq`] — the k + Q subring model: membership in R-ideals,
//!   regular-sequence testing in R, and the assembled obstruction report;
//! * [`semigroup`] — bounded normality checks for the semigroups whose
//!   rings the k + Q construction realizes;
//! * [`parse`] — expression and ring-declaration parsing.

pub mod cech;
pub mod error;
pub mod field;
pub mod groebner;
pub mod kq;
pub mod monomial;
pub mod parse;
pub mod poly;
pub mod ring;
pub mod semigroup;

pub use error::{Error, Result};
pub use field::{Coeff, CoefficientField};
pub use monomial::{Monomial, MonomialOrder};
pub use poly::{Polynomial, Term};
pub use ring::RingDescriptor;
