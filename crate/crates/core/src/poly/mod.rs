//! Exact polynomial arithmetic: Laurent polynomials, truncated series,
//! monomial maps and reduced rational functions.

mod gcd;
mod laurent;
mod monomial_map;
mod rational_fn;
mod series;
mod univariate;

pub use gcd::{exact_div, gcd, is_polynomial};
pub use laurent::{Exp, Grading, Laurent};
pub use monomial_map::MonomialMap;
pub use rational_fn::RationalExpr;
pub use series::TruncatedSeries;
pub use univariate::Series1;
