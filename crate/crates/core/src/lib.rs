//! Exact arithmetic for sparse ("fewnomial") polynomials over the rationals.
//!
//! The crate is organised around three questions about a bivariate
//! polynomial `f` with `t` nonzero terms and a line `y = a*x + b`:
//!
//! * how many sign variations a univariate polynomial has ([`descartes`]);
//! * how many real roots `f(x, a*x + b)` can have, with the `6t - 4` bound
//!   and its counting convention ([`line`]), checked by an exact Sturm/Yun
//!   root counter ([`realroots`]);
//! * whether `y - a*x - b` divides `f`, decided through odd specializations
//!   `f(x, x^n)` so the cost depends on `log(deg f)` rather than on the degree
//!   ([`divisibility`]).
//!
//! All coefficients are exact rationals. Exponents are unsigned integers
//! below `2^63`.

pub mod descartes;
pub mod divisibility;
pub mod error;
pub mod expr;
pub mod line;
pub mod poly;
pub mod primes;
pub mod rational;
pub mod realroots;

pub use error::{Error, Result};
pub use line::{Line, RootCountReport};
pub use poly::{BiTerm, DenseUniPoly, SparseBiPoly, SparseUniPoly};
pub use rational::Rational;
