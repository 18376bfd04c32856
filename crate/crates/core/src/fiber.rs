//! Fiber functors on group-theoretical categories `C(G, 1, F, α)` and
//! Galois-object counts.
//!
//! A fiber functor is a pair `(L, β)` with `L ≤ G`, `LF = G` and
//! `α|_{F∩L} - β|_{F∩L}` non-degenerate, taken up to `g·(L, β) = (gLg⁻¹, β^g)`.

use serde::Serialize;

use crate::cohomology::{h2_any, is_cohomologous, is_nondegenerate, Cocycle, BRUTE_FORCE_THRESHOLD};
use crate::error::{Error, Result};
use crate::group::{bicrossed_product, FiniteGroup, Subgroup};
use crate::hopf::a_matched_pair;
use crate::numbers::{is_perfect_square, lcm_u64};

#[derive(Debug, Clone)]
pub struct GTCategoryData {
    pub group: FiniteGroup,
    pub f: Subgroup,
    /// Only the trivial associator is supported.
    pub omega_trivial: bool,
    pub alpha: Cocycle,
}

impl GTCategoryData {
    /// `C(G, 1, F, 1)`.
    pub fn new(group: &FiniteGroup, f: Subgroup) -> Self {
        let alpha = Cocycle::trivial(group, f.clone(), f.order().max(1) as u64);
        Self {
            group: group.clone(),
            f,
            omega_trivial: true,
            alpha,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct FiberFunctorWitness {
    pub subgroup: Subgroup,
    #[serde(skip)]
    pub beta: Cocycle,
    /// Index of `β` among the enumerated classes of `H²(L)`.
    pub class_index: usize,
    /// Number of pairs `(L', β')` in the conjugation orbit.
    pub orbit_size: usize,
}

/// Whether `L·F = G`, checked on the product set.
pub fn is_factorization(g: &FiniteGroup, l: &Subgroup, f: &Subgroup) -> bool {
    let inter = l.intersection(f, g).order();
    if l.order() * f.order() != g.order() * inter {
        return false;
    }
    let mut hit = vec![false; g.order()];
    for &a in l.members() {
        for &b in f.members() {
            hit[g.mul(a, b)] = true;
        }
    }
    hit.into_iter().all(|x| x)
}

struct Candidate {
    l: Subgroup,
    beta: Cocycle,
    class_index: usize,
    /// Whether `H²(L)` is trivial, so every cocycle on `L` is a coboundary.
    h2_trivial: bool,
}

/// All equivalence classes of fiber functors, each as its canonical
/// witness: the least `(|L|, members of L, class index)` in the orbit.
pub fn fiber_functors(cat: &GTCategoryData) -> Result<Vec<FiberFunctorWitness>> {
    if !cat.omega_trivial {
        return Err(Error::Unsupported("nontrivial associator".into()));
    }
    let g = &cat.group;
    let f = &cat.f;
    let mut cands: Vec<Candidate> = Vec::new();
    for l in g.subgroups()? {
        if !is_factorization(g, &l, f) {
            continue;
        }
        let inter = l.intersection(f, g);
        // A simple twisted group algebra has square dimension.
        if inter.order() > BRUTE_FORCE_THRESHOLD && !is_perfect_square(inter.order() as u64) {
            continue;
        }
        let h = h2_any(g, &l)?;
        let classes = h.all_classes(g, &l)?;
        let h2_trivial = h.is_trivial();
        let alpha = cat.alpha.restrict(&inter)?;
        for (class_index, beta) in classes.into_iter().enumerate() {
            let m = lcm_u64(alpha.modulus(), beta.modulus());
            let diff = alpha.with_modulus(m)?.sub(&beta.restrict(&inter)?.with_modulus(m)?)?;
            if is_nondegenerate(&diff)? {
                cands.push(Candidate {
                    l: l.clone(),
                    beta,
                    class_index,
                    h2_trivial,
                });
            }
        }
    }

    let mut assigned = vec![false; cands.len()];
    let mut out = Vec::new();
    for i in 0..cands.len() {
        if assigned[i] {
            continue;
        }
        assigned[i] = true;
        let mut orbit = 1;
        for x in g.elements() {
            let target = cands[i].l.conjugate(g, g.inv(x));
            let mut transported: Option<Cocycle> = None;
            for j in 0..cands.len() {
                if assigned[j] || cands[j].l != target {
                    continue;
                }
                let same = if cands[j].h2_trivial {
                    true
                } else {
                    let t = transported.get_or_insert_with(|| cands[i].beta.conj_transport(x));
                    is_cohomologous(t, &cands[j].beta)?
                };
                if same {
                    assigned[j] = true;
                    orbit += 1;
                }
            }
        }
        out.push(FiberFunctorWitness {
            subgroup: cands[i].l.clone(),
            beta: cands[i].beta.clone(),
            class_index: cands[i].class_index,
            orbit_size: orbit,
        });
    }
    Ok(out)
}

/// Conjugacy classes of pairs `(S, α)` with `α` non-degenerate on `S`.
pub fn nondeg_pairs(g: &FiniteGroup) -> Result<Vec<(Subgroup, Cocycle)>> {
    let cat = GTCategoryData::new(g, Subgroup::whole(g));
    Ok(fiber_functors(&cat)?
        .into_iter()
        .map(|w| (w.subgroup, w.beta))
        .collect())
}

/// A Hopf algebra of the order-`pqr` catalog.
#[derive(Debug, Clone, Copy)]
pub enum HopfDescriptor<'a> {
    GroupAlgebra(&'a FiniteGroup),
    DualGroupAlgebra(&'a FiniteGroup),
    /// `A_p(first; second) = k^{Z_p ⋊ Z_first} # k[Z_second]`.
    A {
        p: u64,
        first: u64,
        second: u64,
    },
}

/// `Rep(k^Γ # k[F]) ≅ C(F ⋈ Γ, 1, F, 1)` for `A_p(first; second)`, with `F`
/// embedded as `(x, e)`.
pub fn a_representation_category(p: u64, first: u64, second: u64) -> Result<GTCategoryData> {
    let mp = a_matched_pair(p, first, second)?;
    let g = bicrossed_product(&mp)?;
    let ng = mp.gamma.order();
    let f = Subgroup::from_members(&g, (0..mp.f.order()).map(|x| x * ng).collect())?;
    Ok(GTCategoryData::new(&g, f))
}

/// Number of Galois objects, up to isomorphism.
pub fn galois_object_count(h: HopfDescriptor<'_>) -> Result<usize> {
    match h {
        HopfDescriptor::GroupAlgebra(g) | HopfDescriptor::DualGroupAlgebra(g) => Ok(nondeg_pairs(g)?.len()),
        HopfDescriptor::A { p, first, second } => {
            Ok(fiber_functors(&a_representation_category(p, first, second)?)?.len())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::direct_product;

    #[test]
    fn klein_four_has_two_pairs() {
        let z2 = FiniteGroup::cyclic(2).unwrap();
        let v4 = direct_product(&z2, &z2).unwrap();
        let pairs = nondeg_pairs(&v4).unwrap();
        assert_eq!(pairs.len(), 2);
        assert_eq!(pairs[0].0.order(), 1);
        assert_eq!(pairs[1].0.order(), 4);
    }

    #[test]
    fn cyclic_four_has_one_pair() {
        assert_eq!(nondeg_pairs(&FiniteGroup::cyclic(4).unwrap()).unwrap().len(), 1);
    }

    #[test]
    fn trivial_f_gives_whole_group() {
        let g = FiniteGroup::cyclic(6).unwrap();
        let w = fiber_functors(&GTCategoryData::new(&g, Subgroup::trivial())).unwrap();
        assert_eq!(w.len(), 1);
        assert_eq!(w[0].subgroup.order(), 6);
    }

    #[test]
    fn a7_has_one_galois_object() {
        assert_eq!(
            galois_object_count(HopfDescriptor::A {
                p: 7,
                first: 3,
                second: 2
            })
            .unwrap(),
            1
        );
        let w = fiber_functors(&a_representation_category(7, 3, 2).unwrap()).unwrap();
        assert_eq!(w[0].subgroup.order(), 21);
    }
}
