//! Finite groups of small (mostly square-free) order.
//!
//! A [`FiniteGroup`] is either backed by a Cayley table (orders up to the
//! table threshold) or by structured triple arithmetic, or both. Element 0
//! is always the identity.

mod catalog;
mod character;
mod iso;
mod products;
mod subgroup;
mod triple;

use std::collections::{BTreeMap, VecDeque};
use std::fmt;
use std::sync::{Arc, OnceLock};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::numbers::{divisors, MetacyclicParams};

pub use catalog::{catalog_group, catalog_kinds, catalog_presentation, from_catalog, g4_member, CatalogKind};
pub use character::{conjugation_action, CharacterGroup};
pub use iso::{abelian_invariants, is_isomorphic, structured_invariants, GroupInvariants, StructuredInvariants};
pub use products::{
    bicrossed_product, direct_product, semidirect_product, validate_matched_pair, MatchedPair, MatchedPairReport,
};
pub use subgroup::Subgroup;
pub use triple::TriplePresentation;

use triple::TripleArith;

/// Default largest order for which a Cayley table is materialised.
pub const DEFAULT_TABLE_THRESHOLD: usize = 5000;

/// Exhaustive associativity is checked up to this order; above it a fixed
/// number of random triples is sampled.
pub const EXHAUSTIVE_ASSOCIATIVITY_ORDER: usize = 200;
pub const SAMPLED_ASSOCIATIVITY_TRIPLES: usize = 100_000;

/// Table threshold, honouring `HOPF_PQR_TABLE_THRESHOLD`.
pub fn table_threshold_from_env() -> usize {
    std::env::var("HOPF_PQR_TABLE_THRESHOLD")
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .unwrap_or(DEFAULT_TABLE_THRESHOLD)
}

/// Where a group came from.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum GroupTag {
    Cyclic { n: u64 },
    Catalog { id: CatalogKind },
    Triple { presentation: TriplePresentation },
    Metacyclic { params: MetacyclicParams },
    Direct,
    Semidirect,
    DualSemidirect,
    Bicrossed,
    Character,
    Subgroup,
    Table,
}

#[derive(Clone)]
pub struct FiniteGroup {
    order: usize,
    table: Option<Arc<[u32]>>,
    inverses: Arc<[u32]>,
    triple: Option<Arc<TripleArith>>,
    tag: GroupTag,
    name: String,
    cache: Arc<GroupCache>,
}

#[derive(Default)]
struct GroupCache {
    generators: OnceLock<Vec<usize>>,
    element_orders: OnceLock<Vec<usize>>,
    classes: OnceLock<Vec<Vec<usize>>>,
    subgroups: OnceLock<Vec<Subgroup>>,
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("name", &self.name)
            .field("order", &self.order)
            .field("table", &self.table.is_some())
            .finish()
    }
}

impl FiniteGroup {
    /// Builds a group from a row-major multiplication table, checking the
    /// group axioms.
    pub fn from_table(order: usize, table: Vec<u32>, tag: GroupTag, name: impl Into<String>) -> Result<Self> {
        if order == 0 || table.len() != order * order {
            return Err(Error::InvalidTable(format!(
                "expected {} entries, found {}",
                order * order,
                table.len()
            )));
        }
        for x in 0..order {
            if table[x] as usize != x || table[x * order] as usize != x {
                return Err(Error::InvalidTable("element 0 is not the identity".into()));
            }
        }
        let mut seen = vec![usize::MAX; order];
        for row in 0..order {
            for col in 0..order {
                let v = table[row * order + col] as usize;
                if v >= order || seen[v] == row {
                    return Err(Error::InvalidTable(format!("row {row} is not a permutation")));
                }
                seen[v] = row;
            }
        }
        let mut inverses = vec![0u32; order];
        for x in 0..order {
            let y = (0..order)
                .find(|&y| table[x * order + y] == 0)
                .ok_or_else(|| Error::InvalidTable(format!("{x} has no inverse")))?;
            inverses[x] = y as u32;
        }
        let group = Self {
            order,
            table: Some(table.into()),
            inverses: inverses.into(),
            triple: None,
            tag,
            name: name.into(),
            cache: Arc::default(),
        };
        group.check_associativity()?;
        Ok(group)
    }

    /// Builds a group from a presentation `Z_p ⋊ (Z_q ⋊ Z_r)`. A table is
    /// attached when the order is at most `threshold`.
    pub fn from_triple(
        pres: TriplePresentation,
        threshold: usize,
        tag: GroupTag,
        name: impl Into<String>,
    ) -> Result<Self> {
        pres.validate()?;
        let arith = TripleArith::new(pres.clone());
        let order = pres.order() as usize;
        let inverses: Vec<u32> = (0..order).map(|x| arith.inv(x) as u32).collect();
        let table = if order <= threshold {
            let mut t = Vec::with_capacity(order * order);
            for x in 0..order {
                for y in 0..order {
                    t.push(arith.mul(x, y) as u32);
                }
            }
            Some(Arc::from(t))
        } else {
            None
        };
        let group = Self {
            order,
            table,
            inverses: inverses.into(),
            triple: Some(Arc::new(arith)),
            tag,
            name: name.into(),
            cache: Arc::default(),
        };
        group.check_associativity()?;
        Ok(group)
    }

    pub fn cyclic(n: usize) -> Result<Self> {
        let mut t = Vec::with_capacity(n * n);
        for x in 0..n {
            for y in 0..n {
                t.push(((x + y) % n) as u32);
            }
        }
        Self::from_table(n, t, GroupTag::Cyclic { n: n as u64 }, format!("Z{n}"))
    }

    /// The metacyclic group `G(m, n, r, λ)`; element `a^i b^j` has index
    /// `i * n + j`.
    pub fn metacyclic(params: MetacyclicParams) -> Result<Self> {
        params.validate()?;
        let m = params.m as usize;
        let n = params.n as usize;
        let r = params.r_reduced() as usize;
        let k = params.power_exponent() as usize;
        let mut rpow = vec![1 % m; n];
        for j in 1..n {
            rpow[j] = rpow[j - 1] * r % m;
        }
        let order = m * n;
        let mut t = Vec::with_capacity(order * order);
        for x in 0..order {
            let (i, j) = (x / n, x % n);
            for y in 0..order {
                let (i2, j2) = (y / n, y % n);
                let mut ni = (i + i2 * rpow[j]) % m;
                let mut nj = j + j2;
                if nj >= n {
                    nj -= n;
                    ni = (ni + k) % m;
                }
                t.push((ni * n + nj) as u32);
            }
        }
        let name = format!("G({},{},{},{})", params.m, params.n, params.r, params.lambda);
        Self::from_table(order, t, GroupTag::Metacyclic { params }, name)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn tag(&self) -> &GroupTag {
        &self.tag
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn with_tag(mut self, tag: GroupTag) -> Self {
        self.tag = tag;
        self
    }

    pub fn has_table(&self) -> bool {
        self.table.is_some()
    }

    pub fn presentation(&self) -> Option<&TriplePresentation> {
        self.triple.as_ref().map(|t| &t.pres)
    }

    pub(crate) fn require_table(&self) -> Result<&[u32]> {
        self.table.as_deref().ok_or(Error::RequiresTable {
            order: self.order,
            threshold: table_threshold_from_env(),
        })
    }

    #[inline]
    pub fn mul(&self, x: usize, y: usize) -> usize {
        match (&self.table, &self.triple) {
            (Some(t), _) => t[x * self.order + y] as usize,
            (None, Some(a)) => a.mul(x, y),
            (None, None) => unreachable!("group without multiplication"),
        }
    }

    #[inline]
    pub fn inv(&self, x: usize) -> usize {
        self.inverses[x] as usize
    }

    /// `g x g^-1`
    #[inline]
    pub fn conj(&self, g: usize, x: usize) -> usize {
        self.mul(self.mul(g, x), self.inv(g))
    }

    pub fn pow(&self, x: usize, mut e: u64) -> usize {
        let mut acc = 0;
        let mut base = x;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    pub fn element_order(&self, x: usize) -> usize {
        self.element_orders()[x]
    }

    pub fn element_orders(&self) -> &[usize] {
        self.cache.element_orders.get_or_init(|| {
            let divs = divisors(self.order as u64);
            (0..self.order)
                .map(|x| {
                    divs.iter()
                        .copied()
                        .find(|&d| self.pow(x, d) == 0)
                        .expect("element order divides the group order") as usize
                })
                .collect()
        })
    }

    /// Histogram `order -> number of elements of that order`.
    pub fn order_histogram(&self) -> BTreeMap<usize, usize> {
        let mut h = BTreeMap::new();
        for &o in self.element_orders() {
            *h.entry(o).or_insert(0) += 1;
        }
        h
    }

    pub fn is_abelian(&self) -> bool {
        let gens = self.generators();
        gens.iter()
            .all(|&a| gens.iter().all(|&b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn is_central(&self, z: usize) -> bool {
        self.generators().iter().all(|&g| self.mul(g, z) == self.mul(z, g))
    }

    pub fn center(&self) -> Vec<usize> {
        self.elements().filter(|&z| self.is_central(z)).collect()
    }

    /// A small generating set, chosen greedily by element order.
    pub fn generators(&self) -> &[usize] {
        self.cache.generators.get_or_init(|| {
            if self.order == 1 {
                return Vec::new();
            }
            if let Some(a) = &self.triple {
                let pres = &a.pres;
                return pres.generator_indices().into_iter().filter(|&g| g != 0).collect();
            }
            let orders = self.element_orders();
            let mut by_order: Vec<usize> = (1..self.order).collect();
            by_order.sort_by_key(|&x| (std::cmp::Reverse(orders[x]), x));
            let mut gens = Vec::new();
            let mut span = vec![false; self.order];
            span[0] = true;
            let mut size = 1;
            for x in by_order {
                if size == self.order {
                    break;
                }
                if span[x] {
                    continue;
                }
                gens.push(x);
                let members = self.closure(&gens);
                size = members.len();
                span.iter_mut().for_each(|s| *s = false);
                for m in members {
                    span[m] = true;
                }
            }
            gens
        })
    }

    /// Subgroup generated by `gens`, as a sorted member list.
    pub fn closure(&self, gens: &[usize]) -> Vec<usize> {
        let mut seen = vec![false; self.order];
        seen[0] = true;
        let mut out = vec![0usize];
        let mut queue = VecDeque::from([0usize]);
        while let Some(x) = queue.pop_front() {
            for &g in gens {
                let y = self.mul(x, g);
                if !seen[y] {
                    seen[y] = true;
                    out.push(y);
                    queue.push_back(y);
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// Conjugacy classes, each sorted, ordered by smallest member.
    pub fn conjugacy_classes(&self) -> &[Vec<usize>] {
        self.cache.classes.get_or_init(|| {
            let mut class_of = vec![usize::MAX; self.order];
            let mut classes = Vec::new();
            let gens = self.generators().to_vec();
            for x in 0..self.order {
                if class_of[x] != usize::MAX {
                    continue;
                }
                let id = classes.len();
                let mut members = vec![x];
                class_of[x] = id;
                let mut queue = VecDeque::from([x]);
                while let Some(y) = queue.pop_front() {
                    for &g in &gens {
                        let z = self.conj(g, y);
                        if class_of[z] == usize::MAX {
                            class_of[z] = id;
                            members.push(z);
                            queue.push_back(z);
                        }
                    }
                }
                members.sort_unstable();
                classes.push(members);
            }
            classes
        })
    }

    pub fn centralizer(&self, x: usize) -> Vec<usize> {
        self.elements().filter(|&h| self.mul(x, h) == self.mul(h, x)).collect()
    }

    /// Derived subgroup `[G, G]`.
    pub fn derived_subgroup(&self) -> Vec<usize> {
        let mut comms = Vec::new();
        let gens = self.generators();
        // Normal closure of generator commutators.
        for &a in gens {
            for &b in gens {
                let c = self.mul(self.mul(a, b), self.mul(self.inv(a), self.inv(b)));
                if c != 0 {
                    comms.push(c);
                }
            }
        }
        let mut current = self.closure(&comms);
        loop {
            let mut extra = current.clone();
            for &x in &current {
                for &g in gens {
                    extra.push(self.conj(g, x));
                }
            }
            let next = self.closure(&extra);
            if next.len() == current.len() {
                return current;
            }
            current = next;
        }
    }

    fn check_associativity(&self) -> Result<()> {
        let fail = |a, b, c| Err(Error::InvalidTable(format!("associativity fails at ({a}, {b}, {c})")));
        if self.order <= EXHAUSTIVE_ASSOCIATIVITY_ORDER {
            for a in 0..self.order {
                for b in 0..self.order {
                    let ab = self.mul(a, b);
                    for c in 0..self.order {
                        if self.mul(ab, c) != self.mul(a, self.mul(b, c)) {
                            return fail(a, b, c);
                        }
                    }
                }
            }
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0000 ^ self.order as u64);
            for _ in 0..SAMPLED_ASSOCIATIVITY_TRIPLES {
                let (a, b, c) = (
                    rng.gen_range(0..self.order),
                    rng.gen_range(0..self.order),
                    rng.gen_range(0..self.order),
                );
                if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)) {
                    return fail(a, b, c);
                }
            }
        }
        Ok(())
    }

    /// Plain-text Cayley table: one row per element, space-separated indices.
    pub fn cayley_table_text(&self) -> Result<String> {
        let t = self.require_table()?;
        let mut out = String::with_capacity(t.len() * 4);
        for row in t.chunks(self.order) {
            let line: Vec<String> = row.iter().map(|v| v.to_string()).collect();
            out.push_str(&line.join(" "));
            out.push('\n');
        }
        Ok(out)
    }

    pub(crate) fn cached_subgroups(&self) -> &OnceLock<Vec<Subgroup>> {
        &self.cache.subgroups
    }
}
