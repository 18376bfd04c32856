//! Isomorphism invariants and the isomorphism search.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use serde::Serialize;

use super::FiniteGroup;
use crate::error::Result;
use crate::numbers::factorize;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GroupInvariants {
    pub order: usize,
    pub order_histogram: BTreeMap<usize, usize>,
    pub center_order: usize,
    pub class_sizes: Vec<usize>,
    pub abelianization: Vec<u64>,
}

impl GroupInvariants {
    pub fn of(g: &FiniteGroup) -> Self {
        let mut class_sizes: Vec<usize> = g.conjugacy_classes().iter().map(Vec::len).collect();
        class_sizes.sort_unstable();
        Self {
            order: g.order(),
            order_histogram: g.order_histogram(),
            center_order: g.center().len(),
            class_sizes,
            abelianization: abelian_invariants(g),
        }
    }
}

/// Invariants computable from structured arithmetic alone, for groups too
/// large for a Cayley table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StructuredInvariants {
    pub order: usize,
    pub order_histogram: BTreeMap<usize, usize>,
    pub center_order: usize,
    /// Primes whose Sylow subgroup is generated by a normal coordinate
    /// generator, in the order used by `action_image`.
    pub normal_sylows: Vec<u64>,
    /// The set of exponent tuples `e` with `g x g^-1 = x^e` on each normal
    /// cyclic Sylow generator `x`, over all `g`.
    pub action_image: BTreeSet<Vec<u64>>,
}

/// Invariants of a group given by a triple presentation. Only the structured
/// multiplication is used.
pub fn structured_invariants(g: &FiniteGroup) -> Option<StructuredInvariants> {
    let pres = g.presentation()?.clone();
    let [a, b, c] = pres.generator_indices();
    let gens = g.generators().to_vec();
    // Candidates: the coordinate generators with their orders; a Sylow
    // subgroup <x> is normal iff every generator conjugates x into <x>.
    let mut sylows: Vec<(u64, usize, Vec<usize>)> = Vec::new();
    for (prime, x) in [(pres.p, a), (pres.q, b), (pres.r, c)] {
        if prime == 1 {
            continue;
        }
        let powers: Vec<usize> = (0..prime).map(|e| g.pow(x, e)).collect();
        let normal = gens.iter().all(|&s| powers.contains(&g.conj(s, x)));
        if normal {
            sylows.push((prime, x, powers));
        }
    }
    let mut image = BTreeSet::new();
    for y in g.elements() {
        let tuple: Vec<u64> = sylows
            .iter()
            .map(|(_, x, powers)| {
                let z = g.conj(y, *x);
                powers.iter().position(|&w| w == z).expect("normal Sylow") as u64
            })
            .collect();
        image.insert(tuple);
    }
    Some(StructuredInvariants {
        order: g.order(),
        order_histogram: g.order_histogram(),
        center_order: g.center().len(),
        normal_sylows: sylows.iter().map(|s| s.0).collect(),
        action_image: image,
    })
}

/// Invariant factors `d_1 | d_2 | ...` (all > 1) of the abelianization.
pub fn abelian_invariants(g: &FiniteGroup) -> Vec<u64> {
    let derived = g.derived_subgroup();
    let mut in_derived = vec![false; g.order()];
    for &x in &derived {
        in_derived[x] = true;
    }
    let quotient = (g.order() / derived.len()) as u64;
    // For each prime, |A[p^k]| determines the p-primary partition.
    let mut per_prime: Vec<Vec<u64>> = Vec::new();
    for (p, e) in factorize(quotient) {
        let mut counts = vec![1u64];
        let mut pk = 1u64;
        for _ in 0..e {
            pk *= p;
            let hits = g.elements().filter(|&x| in_derived[g.pow(x, pk)]).count();
            counts.push((hits / derived.len()) as u64);
        }
        // log_p of counts gives s_k = sum_i min(k, e_i); the number of
        // cyclic factors of order >= p^k is s_k - s_{k-1}.
        let logs: Vec<u32> = counts.iter().map(|&c| c.ilog(p)).collect();
        let at_least: Vec<u32> = (1..logs.len()).map(|k| logs[k] - logs[k - 1]).collect();
        let mut exps = Vec::new();
        for k in 0..at_least.len() {
            let next = at_least.get(k + 1).copied().unwrap_or(0);
            for _ in 0..(at_least[k] - next) {
                exps.push(p.pow(k as u32 + 1));
            }
        }
        exps.sort_unstable_by(|a, b| b.cmp(a));
        per_prime.push(exps);
    }
    let len = per_prime.iter().map(Vec::len).max().unwrap_or(0);
    let mut out = vec![1u64; len];
    for exps in per_prime {
        for (i, pe) in exps.into_iter().enumerate() {
            out[i] *= pe;
        }
    }
    out.reverse();
    out
}

/// Decides isomorphism. Returns an explicit isomorphism `phi` (as the image
/// list `phi[x]`) when one exists.
pub fn is_isomorphic(g: &FiniteGroup, h: &FiniteGroup) -> Result<Option<Vec<usize>>> {
    if g.order() != h.order() {
        return Ok(None);
    }
    if g.order() == 1 {
        return Ok(Some(vec![0]));
    }
    if !g.has_table() || !h.has_table() {
        let (Some(a), Some(b)) = (structured_invariants(g), structured_invariants(h)) else {
            g.require_table()?;
            h.require_table()?;
            unreachable!()
        };
        if a != b {
            return Ok(None);
        }
        g.require_table()?;
        h.require_table()?;
    }
    if GroupInvariants::of(g) != GroupInvariants::of(h) {
        return Ok(None);
    }
    let gens = search_generators(g, h);
    let g_orders = g.element_orders();
    let h_orders = h.element_orders();
    let reps: Vec<usize> = h
        .conjugacy_classes()
        .iter()
        .map(|c| c[0])
        .filter(|&x| h_orders[x] == g_orders[gens[0]])
        .collect();
    let candidates: Vec<Vec<usize>> = gens
        .iter()
        .enumerate()
        .map(|(i, &x)| {
            if i == 0 {
                reps.clone()
            } else {
                h.elements().filter(|&y| h_orders[y] == g_orders[x]).collect()
            }
        })
        .collect();
    let mut images = vec![0usize; gens.len()];
    Ok(search(g, h, &gens, &candidates, &mut images, 0))
}

fn search(
    g: &FiniteGroup,
    h: &FiniteGroup,
    gens: &[usize],
    candidates: &[Vec<usize>],
    images: &mut Vec<usize>,
    depth: usize,
) -> Option<Vec<usize>> {
    if depth == gens.len() {
        return extend(g, h, gens, images);
    }
    for &y in &candidates[depth] {
        images[depth] = y;
        if let Some(phi) = search(g, h, gens, candidates, images, depth + 1) {
            return Some(phi);
        }
    }
    None
}

/// Extends `gens[i] -> images[i]` along the Cayley graph. Consistency on
/// every edge makes the map a homomorphism; injectivity makes it an
/// isomorphism.
fn extend(g: &FiniteGroup, h: &FiniteGroup, gens: &[usize], images: &[usize]) -> Option<Vec<usize>> {
    const UNSET: usize = usize::MAX;
    let mut phi = vec![UNSET; g.order()];
    let mut hit = vec![false; h.order()];
    phi[0] = 0;
    hit[0] = true;
    let mut queue = VecDeque::from([0usize]);
    while let Some(x) = queue.pop_front() {
        for (&s, &t) in gens.iter().zip(images) {
            let y = g.mul(x, s);
            let fy = h.mul(phi[x], t);
            if phi[y] == UNSET {
                if hit[fy] {
                    return None;
                }
                phi[y] = fy;
                hit[fy] = true;
                queue.push_back(y);
            } else if phi[y] != fy {
                return None;
            }
        }
    }
    phi.iter().all(|&v| v != UNSET).then_some(phi)
}

/// A generating set of `g`, preferring a pair with the fewest candidate
/// images in `h`.
fn search_generators(g: &FiniteGroup, h: &FiniteGroup) -> Vec<usize> {
    let g_orders = g.element_orders();
    let mut count_in_h: BTreeMap<usize, usize> = BTreeMap::new();
    for &o in h.element_orders() {
        *count_in_h.entry(o).or_insert(0) += 1;
    }
    let mut reps_in_h: BTreeMap<usize, usize> = BTreeMap::new();
    for c in h.conjugacy_classes() {
        *reps_in_h.entry(h.element_orders()[c[0]]).or_insert(0) += 1;
    }
    let mut pairs: Vec<(usize, usize, usize)> = Vec::new();
    for class in g.conjugacy_classes() {
        let x = class[0];
        if x == 0 {
            continue;
        }
        let first = reps_in_h.get(&g_orders[x]).copied().unwrap_or(0);
        for y in 1..g.order() {
            let second = count_in_h.get(&g_orders[y]).copied().unwrap_or(0);
            pairs.push((first * second, x, y));
        }
    }
    pairs.sort_unstable();
    for &(_, x, y) in &pairs {
        if g.closure(&[x, y]).len() == g.order() {
            return vec![x, y];
        }
    }
    for class in g.conjugacy_classes() {
        if class[0] != 0 && g.closure(&[class[0]]).len() == g.order() {
            return vec![class[0]];
        }
    }
    // Not 2-generated: extend from the first conjugacy-class representative.
    let mut gens = vec![pairs.first().map_or(g.generators()[0], |p| p.1)];
    let mut span = g.closure(&gens);
    while span.len() < g.order() {
        let x = g
            .elements()
            .find(|x| span.binary_search(x).is_err())
            .expect("span is proper");
        gens.push(x);
        span = g.closure(&gens);
    }
    gens
}
