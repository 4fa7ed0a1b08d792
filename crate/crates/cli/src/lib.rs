//! Command-line front end and verification campaigns.

pub mod bench;
pub mod fuzz;
pub mod gen;
