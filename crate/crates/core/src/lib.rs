//! Numerics for Ramanujan-type Fourier cosine integrals and their
//! representations as series of Meijer G-functions.
//!
//! Modules, bottom up:
//! - [`gammaplex`]: complex gamma, reciprocal gamma, Pochhammer symbols.
//! - [`hyper`]: pFq and Fox-Wright series with convergence classification.
//! - [`meijerg`]: Meijer G by Mellin-Barnes contour quadrature.
//! - [`quadratures`]: oscillatory quadrature oracle for every integral.
//! - [`series`]: the G-series representations and algebraic tail acceleration.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod error;
pub mod gammaplex;
pub mod hyper;
pub mod meijerg;
pub mod quadratures;
pub mod series;
pub mod summation;

pub use error::{Error, Result};
pub use num_complex::Complex64 as ComplexValue;
