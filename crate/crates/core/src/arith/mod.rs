//! Exact arithmetic: integers, Laurent polynomials in the scalar parameters,
//! their fraction field, and multivariate polynomials in `x`.

pub mod gcd;
pub mod linalg;
pub mod parse;
pub mod poly;
pub mod ratfn;
pub mod ring;
pub mod special;
pub mod xpoly;

pub use gcd::gcd;
pub use parse::parse_poly;
pub use poly::{AlphaPoly, BiPoly, PMono, Param, Poly};
pub use ratfn::{RatBi, RatFn};
pub use ring::Ring;
pub use special::{gauss_binomial, pochhammer_t, substitute, SubstRule};
pub use xpoly::{poly_exact_div, vandermonde, XMono, XPoly, MAX_VARS};
