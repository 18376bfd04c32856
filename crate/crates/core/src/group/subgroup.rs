use std::cmp::Ordering;
use std::collections::HashSet;

use serde::Serialize;

use super::{FiniteGroup, GroupTag};
use crate::error::{Error, Result};

/// A subgroup, stored as the sorted list of its members in the parent.
#[derive(Debug, Clone, Serialize)]
pub struct Subgroup {
    members: Vec<usize>,
    #[serde(skip)]
    gens: Vec<usize>,
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.members == other.members
    }
}

impl Eq for Subgroup {}

impl PartialOrd for Subgroup {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Subgroup {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.members.len(), &self.members).cmp(&(other.members.len(), &other.members))
    }
}

impl std::hash::Hash for Subgroup {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.members.hash(state)
    }
}

impl Subgroup {
    /// Validates `members` as a subgroup of `g`.
    pub fn from_members(g: &FiniteGroup, members: Vec<usize>) -> Result<Self> {
        let mut members = members;
        members.sort_unstable();
        members.dedup();
        if members.first() != Some(&0) {
            return Err(Error::NotASubgroup("identity missing".into()));
        }
        if members.iter().any(|&x| x >= g.order()) {
            return Err(Error::NotASubgroup("element out of range".into()));
        }
        if !g.order().is_multiple_of(members.len()) {
            return Err(Error::NotASubgroup(format!(
                "order {} does not divide {}",
                members.len(),
                g.order()
            )));
        }
        let gens = small_generating_set(g, &members);
        let sub = Self { members, gens };
        if g.closure(&sub.gens) != sub.members {
            return Err(Error::NotASubgroup("not closed under multiplication".into()));
        }
        Ok(sub)
    }

    pub fn generated_by(g: &FiniteGroup, gens: &[usize]) -> Self {
        let members = g.closure(gens);
        let gens = small_generating_set(g, &members);
        Self { members, gens }
    }

    pub fn whole(g: &FiniteGroup) -> Self {
        Self {
            members: (0..g.order()).collect(),
            gens: g.generators().to_vec(),
        }
    }

    pub fn trivial() -> Self {
        Self {
            members: vec![0],
            gens: Vec::new(),
        }
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn generators(&self) -> &[usize] {
        &self.gens
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members.binary_search(&x).is_ok()
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.members.iter().all(|&x| other.contains(x))
    }

    /// Position of `x` in the member list.
    pub fn position(&self, x: usize) -> Option<usize> {
        self.members.binary_search(&x).ok()
    }

    pub fn intersection(&self, other: &Subgroup, g: &FiniteGroup) -> Subgroup {
        let members: Vec<usize> = self.members.iter().copied().filter(|&x| other.contains(x)).collect();
        let gens = small_generating_set(g, &members);
        Subgroup { members, gens }
    }

    /// `x S x^-1`
    pub fn conjugate(&self, g: &FiniteGroup, x: usize) -> Subgroup {
        let mut members: Vec<usize> = self.members.iter().map(|&s| g.conj(x, s)).collect();
        members.sort_unstable();
        let gens = self.gens.iter().map(|&s| g.conj(x, s)).collect();
        Subgroup { members, gens }
    }

    pub fn is_abelian(&self, g: &FiniteGroup) -> bool {
        self.gens
            .iter()
            .all(|&a| self.gens.iter().all(|&b| g.mul(a, b) == g.mul(b, a)))
    }

    /// The subgroup as a group in its own right; element `i` is `members[i]`.
    pub fn as_group(&self, g: &FiniteGroup) -> Result<FiniteGroup> {
        let n = self.members.len();
        let mut table = Vec::with_capacity(n * n);
        for &a in &self.members {
            for &b in &self.members {
                let pos = self
                    .position(g.mul(a, b))
                    .ok_or_else(|| Error::NotASubgroup("not closed".into()))?;
                table.push(pos as u32);
            }
        }
        FiniteGroup::from_table(n, table, GroupTag::Subgroup, format!("{}<{}>", g.name(), n))
    }
}

fn small_generating_set(g: &FiniteGroup, members: &[usize]) -> Vec<usize> {
    if members.len() <= 1 {
        return Vec::new();
    }
    let orders = g.element_orders();
    let mut cands: Vec<usize> = members.iter().copied().filter(|&x| x != 0).collect();
    cands.sort_by_key(|&x| (std::cmp::Reverse(orders[x]), x));
    let mut gens = Vec::new();
    let mut span: HashSet<usize> = HashSet::from([0]);
    for x in cands {
        if span.len() == members.len() {
            break;
        }
        if span.contains(&x) {
            continue;
        }
        gens.push(x);
        span = g.closure(&gens).into_iter().collect();
    }
    gens
}

impl FiniteGroup {
    /// All subgroups, each once, sorted by `(order, members)`.
    ///
    /// Built as joins of cyclic subgroups; for square-free orders every
    /// subgroup is 2-generated so the first round of pairwise joins already
    /// finds everything, and the second round only confirms the fixpoint.
    pub fn subgroups(&self) -> Result<Vec<Subgroup>> {
        self.require_table()?;
        if let Some(s) = self.cached_subgroups().get() {
            return Ok(s.clone());
        }
        let mut seen: HashSet<Vec<usize>> = HashSet::new();
        let mut cyclic: Vec<Subgroup> = Vec::new();
        for x in 0..self.order() {
            let members = self.closure(&[x]);
            if seen.insert(members.clone()) {
                cyclic.push(Subgroup {
                    members,
                    gens: if x == 0 { vec![] } else { vec![x] },
                });
            }
        }
        let mut all = cyclic.clone();
        let mut frontier = cyclic.clone();
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for h in &frontier {
                for c in &cyclic {
                    let Some(&cg) = c.gens.first() else { continue };
                    if h.contains(cg) {
                        continue;
                    }
                    let mut gens = h.gens.clone();
                    gens.push(cg);
                    let members = self.closure(&gens);
                    if seen.insert(members.clone()) {
                        let sub = Subgroup {
                            gens: small_generating_set(self, &members),
                            members,
                        };
                        next.push(sub.clone());
                        all.push(sub);
                    }
                }
            }
            frontier = next;
        }
        all.sort();
        let _ = self.cached_subgroups().set(all.clone());
        Ok(all)
    }

    pub fn is_normal(&self, s: &Subgroup) -> Result<bool> {
        if s.members.iter().any(|&x| x >= self.order()) || s.members.first() != Some(&0) {
            return Err(Error::NotASubgroup("members outside the group".into()));
        }
        if self.closure(&s.gens) != s.members {
            return Err(Error::NotASubgroup("not closed".into()));
        }
        Ok(self
            .generators()
            .iter()
            .all(|&g| s.gens.iter().all(|&x| s.contains(self.conj(g, x)))))
    }

    /// Normal subgroups that are abelian, sorted.
    pub fn normal_abelian_subgroups(&self) -> Result<Vec<Subgroup>> {
        let mut out = Vec::new();
        for s in self.subgroups()? {
            if s.is_abelian(self) && self.is_normal(&s)? {
                out.push(s);
            }
        }
        Ok(out)
    }

    /// Smallest (canonical order) subgroup `K` with `K ∩ N = 1` and `KN = G`.
    pub fn complement(&self, n: &Subgroup) -> Result<Subgroup> {
        if !self.is_normal(n)? {
            return Err(Error::NotASubgroup("complement requires a normal subgroup".into()));
        }
        let target = self.order() / n.order();
        for k in self.subgroups()? {
            if k.order() != target {
                continue;
            }
            if k.members.iter().all(|&x| x == 0 || !n.contains(x)) {
                return Ok(k);
            }
        }
        Err(Error::NoComplement(n.order()))
    }

    /// Subgroups grouped into conjugacy classes; each class sorted, classes
    /// ordered by their smallest member.
    pub fn subgroup_classes(&self) -> Result<Vec<Vec<Subgroup>>> {
        let subs = self.subgroups()?;
        let mut assigned: HashSet<Vec<usize>> = HashSet::new();
        let mut classes = Vec::new();
        for s in &subs {
            if assigned.contains(&s.members) {
                continue;
            }
            let mut class = vec![s.clone()];
            assigned.insert(s.members.clone());
            let mut idx = 0;
            while idx < class.len() {
                let cur = class[idx].clone();
                for &g in self.generators() {
                    let c = cur.conjugate(self, g);
                    if assigned.insert(c.members.clone()) {
                        class.push(c);
                    }
                }
                idx += 1;
            }
            class.sort();
            classes.push(class);
        }
        Ok(classes)
    }
}
