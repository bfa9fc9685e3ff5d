//! Exact arithmetic over Q(i): numbers, polynomials, rational functions.

pub mod gauss;
pub mod parse;
pub mod poly;
pub mod ratfunc;
pub mod roots;

pub use gauss::GaussRational;
pub use parse::{parse_constant, parse_rational_function, Params};
pub use poly::Poly;
pub use ratfunc::{DivisorList, ExtValue, Location, Place, RationalFunction};
