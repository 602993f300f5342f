//! Exact classification of reciprocal quartics `x^4 + A*x^3 + B*x^2 + A*x + 1`
//! over Z: irreducibility, monogenicity and Galois group, both by closed-form
//! coefficient conditions and by generic oracles (Dedekind index criterion,
//! resultant discriminants, resolvent-cubic Galois computation), with campaign
//! tooling that cross-validates the two routes over exhaustive grids.

pub mod dedekind;
pub mod error;
pub mod galois;
pub mod numtheory;
pub mod polyint;
pub mod polymod;
pub mod reciprocal;
pub mod survey;

pub use error::{Error, Result};
