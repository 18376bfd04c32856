//! Fixtures shared by the benchmarks.

use hopf_pqr::group::{from_catalog, DEFAULT_TABLE_THRESHOLD};
use hopf_pqr::FiniteGroup;

/// The catalog of order `pqr`, panicking on invalid input.
pub fn catalog(p: u64, q: u64, r: u64) -> Vec<FiniteGroup> {
    from_catalog(p, q, r, DEFAULT_TABLE_THRESHOLD).expect("valid triple")
}

/// The non-abelian catalog group with the most conjugacy classes.
pub fn busiest(p: u64, q: u64, r: u64) -> FiniteGroup {
    catalog(p, q, r)
        .into_iter()
        .filter(|g| !g.is_abelian())
        .max_by_key(|g| g.conjugacy_classes().len())
        .expect("a non-abelian group")
}
