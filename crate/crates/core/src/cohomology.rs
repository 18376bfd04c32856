//! Second cohomology `H²(L, k*)` with roots of unity as coefficients.
//!
//! A cocycle with values in `Z_N` stands for `(g, h) ↦ ζ_N^{β(g,h)}`. For a
//! prime `p` with `M = p^{v_p(|L|)}` the `p`-part of `H²(L, k*)` is
//! `H²(L, Z_M)` modulo the Bockstein image of `Hom(L, k*)`.
//!
//! A normalized cocycle is determined by its values `f(x, s)` with `s` in a
//! generating set `S`: along a breadth-first spanning tree of the Cayley
//! graph, `f(g, hs) = f(g, h) + f(gh, s) - f(h, s)`. The cocycle identity
//! only needs checking for `l ∈ S`, because `δf` is itself a 3-cocycle, so
//! the identity for `l` and `m` implies it for `lm`.

use std::collections::HashSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::{FiniteGroup, Subgroup};
use crate::linalg::{LocalSnf, ModMatrix};
use crate::numbers::{factorize, gcd_u64, schur_h, MetacyclicParams};

/// Largest order for which `h2` solves the linear system directly.
pub const BRUTE_FORCE_THRESHOLD: usize = 42;

/// A normalized 2-cocycle on a subgroup `domain` of `group`, valued in
/// `Z_modulus`. Values are indexed by positions in the domain's member list.
#[derive(Debug, Clone)]
pub struct Cocycle {
    group: FiniteGroup,
    domain: Subgroup,
    modulus: u64,
    values: Vec<u64>,
}

impl PartialEq for Cocycle {
    fn eq(&self, other: &Self) -> bool {
        self.domain == other.domain && self.modulus == other.modulus && self.values == other.values
    }
}

impl Eq for Cocycle {}

impl Cocycle {
    /// Validates normalization and the cocycle identity.
    pub fn new(group: &FiniteGroup, domain: Subgroup, modulus: u64, values: Vec<u64>) -> Result<Self> {
        let k = domain.order();
        if modulus == 0 || values.len() != k * k {
            return Err(Error::NotACocycle("value table has the wrong size".into()));
        }
        let c = Self {
            group: group.clone(),
            domain,
            modulus,
            values: values.into_iter().map(|v| v % modulus).collect(),
        };
        if (0..k).any(|i| c.values[i] != 0 || c.values[i * k] != 0) {
            return Err(Error::NotACocycle("not normalized".into()));
        }
        if let Some((a, b, d)) = c.first_violation() {
            return Err(Error::NotACocycle(format!(
                "identity fails at positions ({a}, {b}, {d})"
            )));
        }
        Ok(c)
    }

    pub(crate) fn new_unchecked(group: &FiniteGroup, domain: Subgroup, modulus: u64, values: Vec<u64>) -> Self {
        Self {
            group: group.clone(),
            domain,
            modulus,
            values,
        }
    }

    pub fn trivial(group: &FiniteGroup, domain: Subgroup, modulus: u64) -> Self {
        let k = domain.order();
        Self::new_unchecked(group, domain, modulus, vec![0; k * k])
    }

    /// `δc(g, h) = c(g) + c(h) - c(gh)` for a 1-cochain indexed by domain
    /// positions with `c(e) = 0`.
    pub fn coboundary(group: &FiniteGroup, domain: Subgroup, modulus: u64, c: &[u64]) -> Result<Self> {
        let k = domain.order();
        if c.len() != k || !c[0].is_multiple_of(modulus) {
            return Err(Error::NotACocycle("1-cochain must have c(e) = 0".into()));
        }
        let mut values = Vec::with_capacity(k * k);
        for (i, &g) in domain.members().iter().enumerate() {
            for (j, &h) in domain.members().iter().enumerate() {
                let gh = domain.position(group.mul(g, h)).expect("closed");
                values.push((c[i] % modulus + c[j] % modulus + modulus - c[gh] % modulus) % modulus);
            }
        }
        Ok(Self::new_unchecked(group, domain, modulus, values))
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn domain(&self) -> &Subgroup {
        &self.domain
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn values(&self) -> &[u64] {
        &self.values
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|&v| v == 0)
    }

    /// Value at domain positions `(i, j)`.
    #[inline]
    pub fn at(&self, i: usize, j: usize) -> u64 {
        self.values[i * self.domain.order() + j]
    }

    /// Value at group elements `(g, h)` of the domain.
    pub fn value(&self, g: usize, h: usize) -> Option<u64> {
        Some(self.at(self.domain.position(g)?, self.domain.position(h)?))
    }

    fn first_violation(&self) -> Option<(usize, usize, usize)> {
        let k = self.domain.order();
        let pos = |x: usize| self.domain.position(x).expect("closed");
        let mem = self.domain.members();
        let n = self.modulus;
        let mut prod = vec![0usize; k * k];
        for i in 0..k {
            for j in 0..k {
                prod[i * k + j] = pos(self.group.mul(mem[i], mem[j]));
            }
        }
        let check = |a: usize, b: usize, c: usize| {
            let lhs = self.at(a, b) + self.at(prod[a * k + b], c);
            let rhs = self.at(b, c) + self.at(a, prod[b * k + c]);
            lhs % n == rhs % n
        };
        if k <= 60 {
            for a in 0..k {
                for b in 0..k {
                    for c in 0..k {
                        if !check(a, b, c) {
                            return Some((a, b, c));
                        }
                    }
                }
            }
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(0x0c0c_7c1e ^ k as u64);
            for _ in 0..200_000 {
                let (a, b, c) = (rng.gen_range(0..k), rng.gen_range(0..k), rng.gen_range(0..k));
                if !check(a, b, c) {
                    return Some((a, b, c));
                }
            }
        }
        None
    }

    /// Whether the cocycle identity holds (exhaustive up to domain order 60,
    /// sampled above).
    pub fn satisfies_cocycle_identity(&self) -> bool {
        self.first_violation().is_none()
    }

    fn same_shape(&self, other: &Self) -> Result<()> {
        if self.domain != other.domain || self.modulus != other.modulus {
            return Err(Error::CocycleMismatch);
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_shape(other)?;
        let n = self.modulus;
        let values = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| (a + b) % n)
            .collect();
        Ok(Self::new_unchecked(&self.group, self.domain.clone(), n, values))
    }

    pub fn neg(&self) -> Self {
        let n = self.modulus;
        let values = self.values.iter().map(|a| (n - a) % n).collect();
        Self::new_unchecked(&self.group, self.domain.clone(), n, values)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: u64) -> Self {
        let n = self.modulus;
        let values = self.values.iter().map(|a| a * (c % n) % n).collect();
        Self::new_unchecked(&self.group, self.domain.clone(), n, values)
    }

    /// The same cocycle read in `Z_new` through `Z_N ⊂ Z_new`; requires
    /// `N | new`.
    pub fn with_modulus(&self, new: u64) -> Result<Self> {
        if !new.is_multiple_of(self.modulus) {
            return Err(Error::InvalidParameters(format!(
                "modulus {} does not divide {new}",
                self.modulus
            )));
        }
        let f = new / self.modulus;
        let values = self.values.iter().map(|a| a * f).collect();
        Ok(Self::new_unchecked(&self.group, self.domain.clone(), new, values))
    }

    /// Restriction to a subgroup of the domain.
    pub fn restrict(&self, s: &Subgroup) -> Result<Self> {
        if !s.is_subgroup_of(&self.domain) {
            return Err(Error::NotASubgroup(
                "restriction target is not inside the domain".into(),
            ));
        }
        let pos: Vec<usize> = s
            .members()
            .iter()
            .map(|&x| self.domain.position(x).expect("contained"))
            .collect();
        let mut values = Vec::with_capacity(pos.len() * pos.len());
        for &i in &pos {
            for &j in &pos {
                values.push(self.at(i, j));
            }
        }
        Ok(Self::new_unchecked(&self.group, s.clone(), self.modulus, values))
    }

    /// `β^g(h, l) = β(g h g⁻¹, g l g⁻¹)` on `g⁻¹ L g`.
    pub fn conj_transport(&self, g: usize) -> Self {
        let grp = &self.group;
        let target = self.domain.conjugate(grp, grp.inv(g));
        let back: Vec<usize> = target
            .members()
            .iter()
            .map(|&h| {
                self.domain
                    .position(grp.conj(g, h))
                    .expect("conjugate lies in the domain")
            })
            .collect();
        let mut values = Vec::with_capacity(back.len() * back.len());
        for &i in &back {
            for &j in &back {
                values.push(self.at(i, j));
            }
        }
        Self::new_unchecked(grp, target, self.modulus, values)
    }
}

/// How a cohomology group was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum H2Source {
    BruteForce,
    Formula,
}

#[derive(Debug, Clone)]
pub struct CohomologyGroup {
    pub group_order: usize,
    /// `d_1 | d_2 | ...`, all greater than 1.
    pub invariant_factors: Vec<u64>,
    /// One cocycle per invariant factor, of that order in `H²`. Empty for
    /// formula results.
    pub representatives: Vec<Cocycle>,
    pub source: H2Source,
}

impl CohomologyGroup {
    pub fn order(&self) -> u64 {
        self.invariant_factors.iter().product()
    }

    pub fn is_trivial(&self) -> bool {
        self.invariant_factors.is_empty()
    }

    /// One representative per class: all combinations of the generators.
    pub fn all_classes(&self, group: &FiniteGroup, domain: &Subgroup) -> Result<Vec<Cocycle>> {
        if self.representatives.len() != self.invariant_factors.len() {
            if self.is_trivial() {
                return Ok(vec![Cocycle::trivial(group, domain.clone(), self.group_order as u64)]);
            }
            return Err(Error::Unsupported("no explicit representatives for this group".into()));
        }
        let mut out = vec![Cocycle::trivial(group, domain.clone(), self.group_order as u64)];
        for (rep, &d) in self.representatives.iter().zip(&self.invariant_factors) {
            let mut next = Vec::with_capacity(out.len() * d as usize);
            for base in &out {
                for c in 0..d {
                    next.push(base.add(&rep.scale(c))?);
                }
            }
            out = next;
        }
        Ok(out)
    }
}

/// Normalized 2-cochains parameterised by their values on `(x, s)`,
/// `x ≠ e`, `s ∈ S`.
struct CochainModel {
    group: FiniteGroup,
    n: usize,
    gens: Vec<usize>,
    /// BFS order of elements (identity first) with `parent[w] = (h, i)`,
    /// `w = h · gens[i]`.
    order: Vec<usize>,
    parent: Vec<(usize, usize)>,
    /// `expansion[(g * n + w) * m + param]`: coefficient of parameter
    /// `param` in `f(g, w)`.
    expansion: Vec<i32>,
    m: usize,
}

impl CochainModel {
    fn new(group: &FiniteGroup) -> Self {
        let n = group.order();
        let gens = group.generators().to_vec();
        let ns = gens.len();
        let m = n.saturating_sub(1) * ns;
        let mut parent = vec![(usize::MAX, 0); n];
        let mut order = vec![0usize];
        parent[0] = (0, 0);
        let mut head = 0;
        while head < order.len() {
            let h = order[head];
            head += 1;
            for (i, &s) in gens.iter().enumerate() {
                let w = group.mul(h, s);
                if parent[w].0 == usize::MAX {
                    parent[w] = (h, i);
                    order.push(w);
                }
            }
        }
        let param = |x: usize, i: usize| (x - 1) * ns + i;
        let mut expansion = vec![0i32; n * n * m];
        for g in 1..n {
            for &w in &order[1..] {
                let (h, i) = parent[w];
                let (dst, src) = ((g * n + w) * m, (g * n + h) * m);
                for t in 0..m {
                    expansion[dst + t] = expansion[src + t];
                }
                let gh = group.mul(g, h);
                if gh != 0 {
                    expansion[dst + param(gh, i)] += 1;
                }
                if h != 0 {
                    expansion[dst + param(h, i)] -= 1;
                }
            }
        }
        Self {
            group: group.clone(),
            n,
            gens,
            order,
            parent,
            expansion,
            m,
        }
    }

    fn param(&self, x: usize, i: usize) -> usize {
        (x - 1) * self.gens.len() + i
    }

    fn expansion(&self, g: usize, w: usize) -> &[i32] {
        let start = (g * self.n + w) * self.m;
        &self.expansion[start..start + self.m]
    }

    /// Rows `F(g, h, s)` of the cocycle identity on parameters, mod `modulus`.
    fn constraints(&self, modulus: u64) -> ModMatrix {
        let (n, m) = (self.n, self.m);
        let mut seen: HashSet<Vec<u64>> = HashSet::new();
        let mut rows = Vec::new();
        let mut row = vec![0i64; m];
        for g in 1..n {
            for h in 1..n {
                let gh = self.group.mul(g, h);
                for (i, &s) in self.gens.iter().enumerate() {
                    let hs = self.group.mul(h, s);
                    row.iter_mut().for_each(|x| *x = 0);
                    row[self.param(h, i)] += 1;
                    if gh != 0 {
                        row[self.param(gh, i)] -= 1;
                    }
                    for (x, (&a, &b)) in row
                        .iter_mut()
                        .zip(self.expansion(g, hs).iter().zip(self.expansion(g, h)))
                    {
                        *x += a as i64 - b as i64;
                    }
                    let reduced: Vec<u64> = row.iter().map(|&x| x.rem_euclid(modulus as i64) as u64).collect();
                    if reduced.iter().any(|&x| x != 0) && seen.insert(reduced.clone()) {
                        rows.push(reduced);
                    }
                }
            }
        }
        ModMatrix::from_rows(m, &rows)
    }

    /// Parameters of a full value table (indexed by group elements).
    fn params_of(&self, values: &[u64], modulus: u64) -> Vec<u64> {
        let mut out = vec![0u64; self.m];
        for x in 1..self.n {
            for (i, &s) in self.gens.iter().enumerate() {
                out[self.param(x, i)] = values[x * self.n + s] % modulus;
            }
        }
        out
    }

    /// Full value table from parameters.
    fn table_of(&self, params: &[u64], modulus: u64) -> Vec<u64> {
        let n = self.n;
        let mut out = vec![0u64; n * n];
        for g in 1..n {
            for w in 1..n {
                let acc = self
                    .expansion(g, w)
                    .iter()
                    .zip(params)
                    .fold(0i128, |acc, (&c, &p)| acc + c as i128 * p as i128);
                out[g * n + w] = acc.rem_euclid(modulus as i128) as u64;
            }
        }
        out
    }

    /// `δ(1_y)` for `y ≠ e`, in parameter coordinates.
    fn coboundary_generators(&self, modulus: u64) -> Vec<Vec<u64>> {
        (1..self.n)
            .map(|y| {
                let mut v = vec![0u64; self.m];
                for x in 1..self.n {
                    for (i, &s) in self.gens.iter().enumerate() {
                        let val = (x == y) as i64 + (s == y) as i64 - (self.group.mul(x, s) == y) as i64;
                        v[self.param(x, i)] = val.rem_euclid(modulus as i64) as u64;
                    }
                }
                v
            })
            .collect()
    }

    /// Generators of `Hom(L, Z_k)` as value lists over all elements.
    fn characters(&self, p: u64, e: u32) -> Vec<Vec<u64>> {
        let k = p.pow(e);
        let ns = self.gens.len();
        // chi(w) as a combination of the values chi(s).
        let mut comb = vec![vec![0i64; ns]; self.n];
        for &w in &self.order[1..] {
            let (h, i) = self.parent[w];
            comb[w] = comb[h].clone();
            comb[w][i] += 1;
        }
        let mut rows = Vec::new();
        for w in 0..self.n {
            for (i, &s) in self.gens.iter().enumerate() {
                let ws = self.group.mul(w, s);
                let row: Vec<u64> = (0..ns)
                    .map(|t| (comb[ws][t] - comb[w][t] - (t == i) as i64).rem_euclid(k as i64) as u64)
                    .collect();
                if row.iter().any(|&x| x != 0) {
                    rows.push(row);
                }
            }
        }
        let snf = LocalSnf::compute(&ModMatrix::from_rows(ns, &rows), p, e);
        snf.kernel_generators()
            .into_iter()
            .map(|(on_gens, _)| {
                comb.iter()
                    .map(|c| {
                        c.iter()
                            .zip(&on_gens)
                            .fold(0i128, |acc, (&a, &b)| acc + a as i128 * b as i128)
                            .rem_euclid(k as i128) as u64
                    })
                    .collect()
            })
            .collect()
    }

    /// Bockstein images of `Hom(L, Z_k)` (`k = p^e`) as parameter vectors;
    /// values are 0 or 1 in any modulus.
    fn bockstein_generators(&self, p: u64, e: u32) -> Vec<Vec<u64>> {
        let k = p.pow(e);
        self.characters(p, e)
            .into_iter()
            .map(|chi| {
                let mut v = vec![0u64; self.m];
                for x in 1..self.n {
                    for (i, &s) in self.gens.iter().enumerate() {
                        let xs = self.group.mul(x, s);
                        let carry = (chi[x] + chi[s]) as i64 - chi[xs] as i64;
                        debug_assert!(carry == 0 || carry == k as i64);
                        v[self.param(x, i)] = (carry / k as i64) as u64;
                    }
                }
                v
            })
            .collect()
    }
}

/// `log_p` of the size of the `Z/p^e`-span of `vectors`.
fn span_log(vectors: &[Vec<u64>], len: usize, p: u64, e: u32) -> u32 {
    if vectors.is_empty() {
        return 0;
    }
    let mut mat = ModMatrix::zeros(len, vectors.len());
    for (j, v) in vectors.iter().enumerate() {
        for (i, &x) in v.iter().enumerate() {
            mat.data[i * vectors.len() + j] = x;
        }
    }
    LocalSnf::compute(&mat, p, e).valuations.iter().map(|&v| e - v).sum()
}

fn p_part(n: u64, p: u64) -> (u64, u32) {
    let mut e = 0;
    let mut m = 1;
    let mut x = n;
    while x.is_multiple_of(p) {
        x /= p;
        m *= p;
        e += 1;
    }
    (m, e)
}

/// `H²(L, k*)` by solving the cocycle system, with explicit representatives
/// valued in `Z_|L|`.
pub fn h2(group: &FiniteGroup) -> Result<CohomologyGroup> {
    h2_on(group, &Subgroup::whole(group))
}

/// `(p, p-part of |L|, (order, parameters) per cyclic factor)`.
type PrimePart = (u64, u64, Vec<(u64, Vec<u64>)>);

/// `H²(S, k*)` for a subgroup `S` of `group`; representatives live on `S`.
pub fn h2_on(group: &FiniteGroup, s: &Subgroup) -> Result<CohomologyGroup> {
    let k = s.order();
    if k > BRUTE_FORCE_THRESHOLD {
        return Err(Error::CohomologyTooLarge {
            order: k,
            threshold: BRUTE_FORCE_THRESHOLD,
        });
    }
    let l = s.as_group(group)?;
    let model = CochainModel::new(&l);
    let n = k as u64;
    // Per prime: (order, parameter vector mod p-part), largest first.
    let mut per_prime: Vec<PrimePart> = Vec::new();
    for (p, _) in factorize(n) {
        let (mp, e) = p_part(n, p);
        let z = LocalSnf::compute(&model.constraints(mp), p, e);
        let kernel = z.kernel_generators();
        if kernel.is_empty() {
            continue;
        }
        let mut rels: Vec<Vec<u64>> = model
            .coboundary_generators(mp)
            .iter()
            .chain(model.bockstein_generators(p, e).iter())
            .map(|b| z.kernel_coordinates(b))
            .collect();
        for (i, (_, a)) in kernel.iter().enumerate() {
            let mut row = vec![0u64; kernel.len()];
            row[i] = p.pow(*a) % mp;
            rels.push(row);
        }
        let q = LocalSnf::compute(&ModMatrix::from_rows(kernel.len(), &rels), p, e);
        let mut comps = Vec::new();
        for (j, &c) in q.valuations.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let t = q.v_inv.row(j);
            let mut params = vec![0u64; model.m];
            for (ti, (zi, _)) in t.iter().zip(&kernel) {
                for (x, y) in params.iter_mut().zip(zi) {
                    *x = (*x + ti * y) % mp;
                }
            }
            comps.push((p.pow(c), params));
        }
        comps.sort_by_key(|c| std::cmp::Reverse(c.0));
        per_prime.push((p, mp, comps));
    }
    let len = per_prime.iter().map(|x| x.2.len()).max().unwrap_or(0);
    let mut factors = Vec::with_capacity(len);
    let mut reps = Vec::with_capacity(len);
    for i in 0..len {
        let mut d = 1u64;
        let mut values = vec![0u64; k * k];
        for (_, mp, comps) in &per_prime {
            if let Some((order, params)) = comps.get(i) {
                d *= order;
                let scale = n / mp;
                for (v, t) in values.iter_mut().zip(model.table_of(params, *mp)) {
                    *v = (*v + t * scale) % n;
                }
            }
        }
        factors.push(d);
        reps.push(Cocycle::new(group, s.clone(), n, values)?);
    }
    factors.reverse();
    reps.reverse();
    Ok(CohomologyGroup {
        group_order: k,
        invariant_factors: factors,
        representatives: reps,
        source: H2Source::BruteForce,
    })
}

/// The closed form: `H²(G(m,n,r,λ), k*)` is cyclic of order `(λ, h(m,n,r))`.
pub fn schur_multiplier_metacyclic(params: MetacyclicParams) -> Result<CohomologyGroup> {
    params.validate()?;
    let h = schur_h(params.m, params.n, params.r)?;
    let d = gcd_u64(params.lambda.unsigned_abs(), h);
    Ok(CohomologyGroup {
        group_order: params.order() as usize,
        invariant_factors: if d > 1 { vec![d] } else { vec![] },
        representatives: vec![],
        source: H2Source::Formula,
    })
}

/// Recognises `group` as some `G(m, n, r, λ)`: finds a cyclic normal
/// subgroup `<a>` with cyclic quotient generated by `b`, then reads off
/// `b a b⁻¹ = a^r` and `b^n = a^k`.
pub fn metacyclic_params(group: &FiniteGroup) -> Option<MetacyclicParams> {
    let size = group.order();
    if size == 1 {
        return MetacyclicParams::new(1, 1, 1, 1).ok();
    }
    let orders = group.element_orders();
    let mut cands: Vec<usize> = group.elements().collect();
    cands.sort_by_key(|&x| (std::cmp::Reverse(orders[x]), x));
    let mut tried = HashSet::new();
    for a in cands {
        let m = orders[a];
        let cyclic = group.closure(&[a]);
        if !tried.insert(cyclic.clone()) {
            continue;
        }
        let mut in_a = vec![usize::MAX; size];
        let mut x = 0;
        for i in 0..m {
            in_a[x] = i;
            x = group.mul(x, a);
        }
        let normal = group.generators().iter().all(|&g| in_a[group.conj(g, a)] != usize::MAX);
        if !normal {
            continue;
        }
        let n = size / m;
        for b in group.elements() {
            // smallest power of b inside <a> must be n
            let mut y = b;
            let mut j = 1;
            while in_a[y] == usize::MAX {
                y = group.mul(y, b);
                j += 1;
            }
            if j != n {
                continue;
            }
            let r = in_a[group.conj(b, a)] as u64;
            let k = in_a[y] as u64;
            let m64 = m as u64;
            let g = gcd_u64(m64, (r + m64 - 1) % m64);
            let unit = m64 / g;
            if !k.is_multiple_of(unit) {
                return None;
            }
            let lambda = if k == 0 { g } else { k / unit };
            return MetacyclicParams::new(m64, n as u64, r as i64, lambda as i64).ok();
        }
    }
    None
}

/// `H²` by brute force under the threshold, otherwise by the closed form
/// after metacyclic recognition.
pub fn h2_any(group: &FiniteGroup, s: &Subgroup) -> Result<CohomologyGroup> {
    if s.order() <= BRUTE_FORCE_THRESHOLD {
        return h2_on(group, s);
    }
    let l = s.as_group(group)?;
    let params = metacyclic_params(&l).ok_or_else(|| Error::CohomologyTooLarge {
        order: s.order(),
        threshold: BRUTE_FORCE_THRESHOLD,
    })?;
    let mut out = schur_multiplier_metacyclic(params)?;
    out.group_order = s.order();
    Ok(out)
}

/// Whether `b1 - b2` is trivial in `H²(L, k*)`.
pub fn is_cohomologous(b1: &Cocycle, b2: &Cocycle) -> Result<bool> {
    b1.same_shape(b2)?;
    let d = b1.sub(b2)?;
    if d.is_zero() {
        return Ok(true);
    }
    let k = d.domain.order();
    if k > BRUTE_FORCE_THRESHOLD {
        let h = h2_any(&d.group, &d.domain)?;
        if h.is_trivial() {
            return Ok(true);
        }
        return Err(Error::CohomologyTooLarge {
            order: k,
            threshold: BRUTE_FORCE_THRESHOLD,
        });
    }
    let l = d.domain.as_group(&d.group)?;
    let model = CochainModel::new(&l);
    for (p, _) in factorize(k as u64) {
        let (np, e) = p_part(d.modulus, p);
        if e == 0 {
            continue;
        }
        let (_, el) = p_part(k as u64, p);
        let target = model.params_of(&d.values, np);
        if target.iter().all(|&x| x == 0) {
            continue;
        }
        let mut gens = model.coboundary_generators(np);
        gens.extend(model.bockstein_generators(p, el));
        let before = span_log(&gens, model.m, p, e);
        gens.push(target);
        if span_log(&gens, model.m, p, e) != before {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Whether the twisted group algebra `k_β[L]` is simple: exactly one
/// conjugacy class (that of `e`) is β-regular.
pub fn is_nondegenerate(beta: &Cocycle) -> Result<bool> {
    Ok(regular_class_count(beta)? == 1)
}

/// Number of β-regular conjugacy classes of the domain, i.e. the number of
/// simple components of `k_β[L]`.
pub fn regular_class_count(beta: &Cocycle) -> Result<usize> {
    let l = beta.domain.as_group(&beta.group)?;
    let n = beta.modulus;
    let mut count = 0;
    for class in l.conjugacy_classes() {
        let g = class[0];
        let regular = l
            .elements()
            .filter(|&h| l.mul(g, h) == l.mul(h, g))
            .all(|h| beta.at(g, h) % n == beta.at(h, g) % n);
        if regular {
            count += 1;
        }
    }
    Ok(count)
}
