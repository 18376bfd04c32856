//! Exact computations for semisimple Hopf algebras of dimension `pqr`:
//! groups of square-free order, second cohomology, fiber functors,
//! abelian-extension Hopf algebras and categorical Morita classes.

#![allow(clippy::needless_range_loop)]

pub mod cohomology;
pub mod cyclotomic;
pub mod error;
pub mod fiber;
pub mod group;
pub mod hopf;
pub mod linalg;
pub mod morita;
pub mod numbers;
pub mod report;

pub use error::{Error, Result};
pub use group::{FiniteGroup, MatchedPair, Subgroup};
