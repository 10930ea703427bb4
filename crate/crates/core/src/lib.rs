//! Phase space and Wigner distributions for `N`-level quantum systems whose
//! configuration space is a finite group of order `N`.
//!
//! Positions are group elements, momenta are the matrix elements `(j, m, n)`
//! of the unitary irreps, and for odd `N` the unique square roots in the
//! group give two Wigner distributions, their phase-point operators and an
//! overcomplete extended distribution combining both.

pub mod catalog;
pub mod cli;
pub mod error;
pub mod group;
pub mod io;
pub mod linalg;
pub mod report;
pub mod repr;
pub mod wigner;

pub use error::{Error, Result};
pub use catalog::{catalog, lookup, parse_spec, CatalogEntry};
pub use group::{build_group, verify_sqrt_properties, GroupSpec, GroupTable};
pub use report::{verify_all, verify_group, SuiteOptions, VerificationReport};
