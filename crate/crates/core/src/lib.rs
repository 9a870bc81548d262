//! Exact lattice counting and asymptotic verification for irreducible
//! su(3) representations.
//!
//! The irreducible representations of su(3) are indexed by pairs of positive
//! integers `(j, k)` and have dimension `jk(j+k)/2`. This crate counts them
//! exactly ([`lattice`]), evaluates the two-term expansion of their
//! summatory function ([`asymptotics`]), checks the integral identities that
//! feed the expansion ([`quadrature`]), sums the associated Witten zeta
//! series ([`witten_zeta`]) and probes counts under other homogeneous forms
//! ([`forms`]).

pub mod asymptotics;
pub mod error;
pub mod forms;
pub mod grid;
pub mod lattice;
pub mod quadrature;
pub mod sum;
pub mod witten_zeta;

pub use error::{Error, Result};

/// Largest `x` accepted by the exact counting routines.
pub const MAX_X: u64 = 1_000_000_000_000_000;
