//! The groups of order `pqr` with `r < q < p` primes.
//!
//! Each catalog entry is a triple presentation `Z_p ⋊ (Z_q ⋊ Z_r)`:
//!
//! | id    | condition      | `u`      | `v`      | `w`          |
//! |-------|----------------|----------|----------|--------------|
//! | G1    | none           | 1        | 1        | 1            |
//! | G2    | r ∣ q−1        | 1        | 1        | K(q,r)       |
//! | G3    | r ∣ p−1        | 1        | K(p,r)   | 1            |
//! | G4(n) | r ∣ p−1, q−1   | 1        | K(p,r)   | K(q,r)^n     |
//! | G5    | q ∣ p−1        | K(p,q)   | 1        | 1            |
//! | G6    | qr ∣ p−1       | K(p,q)   | K(p,r)   | 1            |

use serde::Serialize;

use super::{is_isomorphic, structured_invariants, FiniteGroup, GroupTag, TriplePresentation};
use crate::error::{Error, Result};
use crate::numbers::{check_prime_triple, element_of_order, pow_mod};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(tag = "family", rename_all = "UPPERCASE")]
pub enum CatalogKind {
    G1,
    G2,
    G3,
    G4 { n: u64 },
    G5,
    G6,
}

impl CatalogKind {
    pub fn label(&self) -> String {
        match self {
            CatalogKind::G4 { n } => format!("G4(n={n})"),
            other => format!("{other:?}"),
        }
    }
}

fn k(order: u64, modulus: u64) -> Result<u64> {
    Ok(element_of_order(order, modulus)?.value())
}

/// The presentation of a catalog group, or an error when its divisibility
/// condition fails.
pub fn catalog_presentation(kind: CatalogKind, p: u64, q: u64, r: u64) -> Result<TriplePresentation> {
    let (u, v, w) = match kind {
        CatalogKind::G1 => (1, 1, 1),
        CatalogKind::G2 => (1, 1, k(r, q)?),
        CatalogKind::G3 => (1, k(r, p)?, 1),
        CatalogKind::G4 { n } => {
            if n == 0 || n >= r {
                return Err(Error::InvalidParameters(format!("G4 index n={n} outside 1..{r}")));
            }
            (1, k(r, p)?, pow_mod(k(r, q)?, n, q))
        }
        CatalogKind::G5 => (k(q, p)?, 1, 1),
        CatalogKind::G6 => (k(q, p)?, k(r, p)?, 1),
    };
    TriplePresentation::new(p, q, r, u, v, w)
}

fn display_name(kind: CatalogKind, p: u64, q: u64, r: u64) -> String {
    match kind {
        CatalogKind::G1 => format!("Z{}", p * q * r),
        CatalogKind::G2 => format!("(Z{q}⋊Z{r})×Z{p}"),
        CatalogKind::G3 => format!("(Z{p}⋊Z{r})×Z{q}"),
        CatalogKind::G4 { .. } => format!("(Z{p}×Z{q})⋊Z{r}"),
        CatalogKind::G5 => format!("(Z{p}⋊Z{q})×Z{r}"),
        CatalogKind::G6 => format!("Z{p}⋊Z{}", q * r),
    }
}

/// Catalog group `kind` at `(p, q, r)`.
pub fn catalog_group(kind: CatalogKind, p: u64, q: u64, r: u64, threshold: usize) -> Result<FiniteGroup> {
    let pres = catalog_presentation(kind, p, q, r)?;
    FiniteGroup::from_triple(
        pres,
        threshold,
        GroupTag::Catalog { id: kind },
        format!("{} = {}", kind.label(), display_name(kind, p, q, r)),
    )
}

/// The member `G4(n)` of the G4 family.
pub fn g4_member(p: u64, q: u64, r: u64, n: u64, threshold: usize) -> Result<FiniteGroup> {
    catalog_group(CatalogKind::G4 { n }, p, q, r, threshold)
}

/// Every catalog presentation whose conditions hold, in catalog order,
/// before deduplication.
pub fn catalog_kinds(p: u64, q: u64, r: u64) -> Vec<CatalogKind> {
    let qp = (p - 1).is_multiple_of(q);
    let rp = (p - 1).is_multiple_of(r);
    let rq = (q - 1).is_multiple_of(r);
    let mut out = vec![CatalogKind::G1];
    if rq {
        out.push(CatalogKind::G2);
    }
    if rp {
        out.push(CatalogKind::G3);
    }
    if rp && rq {
        out.extend((1..r).map(|n| CatalogKind::G4 { n }));
    }
    if qp {
        out.push(CatalogKind::G5);
    }
    if qp && rp && (p - 1).is_multiple_of(q * r) {
        out.push(CatalogKind::G6);
    }
    out
}

/// Whether two catalog groups are isomorphic. Above the table threshold
/// only structured invariants are available, and those must separate the
/// groups.
fn same_group(a: &FiniteGroup, b: &FiniteGroup) -> Result<bool> {
    if a.has_table() && b.has_table() {
        return Ok(is_isomorphic(a, b)?.is_some());
    }
    match (structured_invariants(a), structured_invariants(b)) {
        (Some(x), Some(y)) if x != y => Ok(false),
        _ => Err(Error::RequiresTable {
            order: a.order(),
            threshold: super::table_threshold_from_env(),
        }),
    }
}

/// The groups of order `pqr`, one per isomorphism class, in catalog order.
pub fn from_catalog(p: u64, q: u64, r: u64, threshold: usize) -> Result<Vec<FiniteGroup>> {
    check_prime_triple(p, q, r)?;
    let mut out: Vec<FiniteGroup> = Vec::new();
    for kind in catalog_kinds(p, q, r) {
        let g = catalog_group(kind, p, q, r, threshold)?;
        let mut duplicate = false;
        for h in &out {
            if same_group(h, &g)? {
                duplicate = true;
                break;
            }
        }
        if !duplicate {
            out.push(g);
        }
    }
    Ok(out)
}
