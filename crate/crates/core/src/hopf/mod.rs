//! Finite-dimensional Hopf algebras as exact structure constants.

mod irreps;
mod smash;

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::hash::Hash;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rustc_hash::FxHashMap;
use serde::Serialize;

use crate::cyclotomic::{Cyclotomic, Scalar};
use crate::error::{Error, Result};
use crate::group::{FiniteGroup, MatchedPair};

pub use irreps::{algebra_irrep_dimensions, grouplike_count, irrep_dimension_vector, AlgebraInvariants};
pub use smash::{a_matched_pair, build_a, smash_product};

/// Verification is exhaustive up to this dimension and sampled above it.
pub const EXHAUSTIVE_DIMENSION: usize = 64;
const SAMPLED_TRIPLES: usize = 2000;
const SAMPLED_PAIRS: usize = 128;
const SAMPLED_SINGLES: usize = 64;

/// Sparse linear combination of basis vectors.
pub type LinComb = Vec<(usize, Scalar)>;

#[derive(Debug, Clone)]
pub struct HopfStructureConstants {
    pub name: String,
    pub dim: usize,
    pub labels: Vec<String>,
    /// `mult[i * dim + j] = e_i e_j`
    pub mult: Vec<LinComb>,
    /// `comult[k] = Δ(e_k)` as terms `(i, j, c)` for `c e_i ⊗ e_j`
    pub comult: Vec<Vec<(usize, usize, Scalar)>>,
    pub unit: LinComb,
    pub counit: Vec<Scalar>,
    pub antipode: Vec<LinComb>,
    /// The matched pair when the algebra is `k^Γ # k[F]` in its standard
    /// basis `e_g # x`, index `g * |F| + x`.
    pub smash: Option<Arc<MatchedPair>>,
}

fn normalize(mut v: LinComb) -> LinComb {
    v.retain(|(_, s)| !s.is_zero());
    v.sort();
    v
}

fn normalize3(mut v: Vec<(usize, usize, Scalar)>) -> Vec<(usize, usize, Scalar)> {
    v.retain(|(_, _, s)| !s.is_zero());
    v.sort();
    v
}

/// Formal sum of keyed roots of unity with integer multiplicities. Values
/// are only collapsed into cyclotomic integers when compared.
#[derive(Debug, Clone)]
struct Sum<K: Hash + Eq>(FxHashMap<(K, Scalar), i64>);

impl<K: Hash + Eq + Ord + Clone> Sum<K> {
    fn new() -> Self {
        Self(FxHashMap::default())
    }

    fn basis(k: K) -> Self {
        let mut s = Self::new();
        s.add(k, Scalar::ONE, 1);
        s
    }

    fn add(&mut self, k: K, s: Scalar, c: i64) {
        if c != 0 && !s.is_zero() {
            *self.0.entry((k, s)).or_insert(0) += c;
        }
    }

    fn terms(&self) -> impl Iterator<Item = (&K, Scalar, i64)> {
        self.0.iter().filter(|(_, &c)| c != 0).map(|((k, s), &c)| (k, *s, c))
    }

    fn collapse(&self) -> BTreeMap<K, Cyclotomic> {
        let mut out: BTreeMap<K, Cyclotomic> = BTreeMap::new();
        for (k, s, c) in self.terms() {
            out.entry(k.clone()).or_default().add_scalar(s, c);
        }
        out.retain(|_, v| !v.is_zero());
        out
    }

    fn is_zero(&self) -> bool {
        self.collapse().is_empty()
    }

    fn equals(mut self, other: &Self) -> bool {
        for (k, s, c) in other.terms() {
            self.add(k.clone(), s, -c);
        }
        self.is_zero()
    }
}

fn from_lincomb(v: &LinComb) -> Sum<usize> {
    let mut s = Sum::new();
    for &(i, c) in v {
        s.add(i, c, 1);
    }
    s
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AxiomCheck {
    pub axiom: &'static str,
    pub passed: bool,
    pub exhaustive: bool,
    pub cases: usize,
    /// Basis indices at which the first failure was found.
    pub witness: Option<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HopfAxiomReport {
    pub dimension: usize,
    pub checks: Vec<AxiomCheck>,
}

impl HopfAxiomReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn check(&self, axiom: &str) -> Option<&AxiomCheck> {
        self.checks.iter().find(|c| c.axiom == axiom)
    }

    pub fn first_failure(&self) -> Option<&AxiomCheck> {
        self.checks.iter().find(|c| !c.passed)
    }
}

impl HopfStructureConstants {
    /// Sorts entries and drops zero coefficients so that equal algebras have
    /// equal tables.
    pub fn normalized(mut self) -> Self {
        self.mult = self.mult.into_iter().map(normalize).collect();
        self.comult = self.comult.into_iter().map(normalize3).collect();
        self.unit = normalize(self.unit);
        self.antipode = self.antipode.into_iter().map(normalize).collect();
        self
    }

    /// Whether the structure tables coincide (names and labels ignored).
    pub fn same_tables(&self, other: &Self) -> bool {
        self.dim == other.dim
            && self.mult == other.mult
            && self.comult == other.comult
            && self.unit == other.unit
            && self.counit == other.counit
            && self.antipode == other.antipode
    }

    /// The group algebra `k[G]`.
    pub fn group_algebra(g: &FiniteGroup) -> Self {
        let n = g.order();
        let mut mult = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                mult.push(vec![(g.mul(a, b), Scalar::ONE)]);
            }
        }
        Self {
            name: format!("k[{}]", g.name()),
            dim: n,
            labels: (0..n).map(|x| format!("g{x}")).collect(),
            mult,
            comult: (0..n).map(|x| vec![(x, x, Scalar::ONE)]).collect(),
            unit: vec![(0, Scalar::ONE)],
            counit: vec![Scalar::ONE; n],
            antipode: (0..n).map(|x| vec![(g.inv(x), Scalar::ONE)]).collect(),
            smash: None,
        }
        .normalized()
    }

    /// The function algebra `k^G`, the dual of `k[G]`.
    pub fn function_algebra(g: &FiniteGroup) -> Self {
        let mut h = dual_hopf(&Self::group_algebra(g));
        h.name = format!("k^{}", g.name());
        h
    }

    fn mul_sum(&self, a: &Sum<usize>, b: &Sum<usize>) -> Sum<usize> {
        let mut out = Sum::new();
        for (&i, s, c) in a.terms() {
            for (&j, t, d) in b.terms() {
                let st = s.mul(t);
                for &(k, u) in &self.mult[i * self.dim + j] {
                    out.add(k, st.mul(u), c * d);
                }
            }
        }
        out
    }

    fn comult_sum(&self, a: &Sum<usize>) -> Sum<(usize, usize)> {
        let mut out = Sum::new();
        for (&k, s, c) in a.terms() {
            for &(i, j, t) in &self.comult[k] {
                out.add((i, j), s.mul(t), c);
            }
        }
        out
    }

    /// Multiplies a linear combination of basis vectors by another.
    pub fn multiply(&self, a: &LinComb, b: &LinComb) -> BTreeMap<usize, Cyclotomic> {
        self.mul_sum(&from_lincomb(a), &from_lincomb(b)).collapse()
    }

    /// `Δ` of a linear combination.
    pub fn comultiply(&self, a: &LinComb) -> BTreeMap<(usize, usize), Cyclotomic> {
        self.comult_sum(&from_lincomb(a)).collapse()
    }

    pub fn counit_of(&self, a: &LinComb) -> Cyclotomic {
        let mut out = Cyclotomic::zero();
        for &(i, s) in a {
            out.add_scalar(s.mul(self.counit[i]), 1);
        }
        out
    }

    pub fn is_commutative(&self) -> bool {
        let n = self.dim;
        (0..n).all(|i| (i + 1..n).all(|j| self.mult[i * n + j] == self.mult[j * n + i]))
    }

    pub fn is_cocommutative(&self) -> bool {
        self.comult.iter().all(|terms| {
            let mut a = Sum::new();
            let mut b = Sum::new();
            for &(i, j, s) in terms {
                a.add((i, j), s, 1);
                b.add((j, i), s, 1);
            }
            a.equals(&b)
        })
    }

    /// Plain-text listing of every nonzero structure constant:
    /// `M i j k s` for `e_i e_j ∋ s e_k`, `D k i j s` for `Δ(e_k) ∋ s e_i ⊗ e_j`,
    /// `U k s`, `E k s` and `S i k s`; `s` is the exponent `num/den` of the
    /// root of unity.
    pub fn tensor_listing(&self) -> String {
        let mut out = String::new();
        let n = self.dim;
        let _ = writeln!(out, "# {} dim {}", self.name, n);
        for i in 0..n {
            for j in 0..n {
                for (k, s) in &self.mult[i * n + j] {
                    let _ = writeln!(out, "M {i} {j} {k} {s}");
                }
            }
        }
        for (k, terms) in self.comult.iter().enumerate() {
            for (i, j, s) in terms {
                let _ = writeln!(out, "D {k} {i} {j} {s}");
            }
        }
        for (k, s) in &self.unit {
            let _ = writeln!(out, "U {k} {s}");
        }
        for (k, s) in self.counit.iter().enumerate() {
            if !s.is_zero() {
                let _ = writeln!(out, "E {k} {s}");
            }
        }
        for (i, terms) in self.antipode.iter().enumerate() {
            for (k, s) in terms {
                let _ = writeln!(out, "S {i} {k} {s}");
            }
        }
        out
    }
}

/// The dual Hopf algebra in the dual basis: multiplication and
/// comultiplication are exchanged, as are unit and counit, and the
/// antipode is transposed.
pub fn dual_hopf(h: &HopfStructureConstants) -> HopfStructureConstants {
    let n = h.dim;
    let mut mult: Vec<LinComb> = vec![Vec::new(); n * n];
    for (k, terms) in h.comult.iter().enumerate() {
        for &(i, j, s) in terms {
            mult[i * n + j].push((k, s));
        }
    }
    let mut comult: Vec<Vec<(usize, usize, Scalar)>> = vec![Vec::new(); n];
    for i in 0..n {
        for j in 0..n {
            for &(k, s) in &h.mult[i * n + j] {
                comult[k].push((i, j, s));
            }
        }
    }
    let unit: LinComb = h
        .counit
        .iter()
        .enumerate()
        .filter(|(_, s)| !s.is_zero())
        .map(|(k, &s)| (k, s))
        .collect();
    let mut counit = vec![Scalar::Zero; n];
    for &(k, s) in &h.unit {
        counit[k] = s;
    }
    let mut antipode: Vec<LinComb> = vec![Vec::new(); n];
    for (j, terms) in h.antipode.iter().enumerate() {
        for &(i, s) in terms {
            antipode[i].push((j, s));
        }
    }
    let (name, labels) = match h.name.strip_prefix("dual ") {
        Some(base) => (
            base.to_string(),
            h.labels.iter().map(|l| l.trim_start_matches('*').to_string()).collect(),
        ),
        None => (
            format!("dual {}", h.name),
            h.labels.iter().map(|l| format!("*{l}")).collect(),
        ),
    };
    HopfStructureConstants {
        name,
        dim: n,
        labels,
        mult,
        comult,
        unit,
        counit,
        antipode,
        smash: None,
    }
    .normalized()
}

struct Sampler {
    exhaustive: bool,
    rng: ChaCha8Rng,
    n: usize,
}

impl Sampler {
    fn new(n: usize) -> Self {
        Self {
            exhaustive: n <= EXHAUSTIVE_DIMENSION,
            rng: ChaCha8Rng::seed_from_u64(0x0a11_0ac5 ^ n as u64),
            n,
        }
    }

    fn singles(&mut self) -> Vec<usize> {
        if self.exhaustive || self.n <= SAMPLED_SINGLES {
            (0..self.n).collect()
        } else {
            (0..SAMPLED_SINGLES).map(|_| self.rng.gen_range(0..self.n)).collect()
        }
    }

    fn pairs(&mut self) -> Vec<(usize, usize)> {
        if self.exhaustive {
            (0..self.n).flat_map(|i| (0..self.n).map(move |j| (i, j))).collect()
        } else {
            (0..SAMPLED_PAIRS)
                .map(|_| (self.rng.gen_range(0..self.n), self.rng.gen_range(0..self.n)))
                .collect()
        }
    }

    fn triples(&mut self) -> Vec<(usize, usize, usize)> {
        if self.exhaustive {
            let n = self.n;
            (0..n)
                .flat_map(|i| (0..n).flat_map(move |j| (0..n).map(move |k| (i, j, k))))
                .collect()
        } else {
            (0..SAMPLED_TRIPLES)
                .map(|_| {
                    (
                        self.rng.gen_range(0..self.n),
                        self.rng.gen_range(0..self.n),
                        self.rng.gen_range(0..self.n),
                    )
                })
                .collect()
        }
    }
}

fn run_check<T: Copy>(
    axiom: &'static str,
    exhaustive: bool,
    cases: Vec<T>,
    witness: impl Fn(T) -> Vec<usize>,
    ok: impl Fn(T) -> bool,
) -> AxiomCheck {
    let count = cases.len();
    for c in cases {
        if !ok(c) {
            return AxiomCheck {
                axiom,
                passed: false,
                exhaustive,
                cases: count,
                witness: Some(witness(c)),
            };
        }
    }
    AxiomCheck {
        axiom,
        passed: true,
        exhaustive,
        cases: count,
        witness: None,
    }
}

/// Checks every Hopf-algebra axiom on basis elements: exhaustively up to
/// [`EXHAUSTIVE_DIMENSION`], on a fixed pseudo-random sample above.
pub fn verify_hopf_axioms(h: &HopfStructureConstants) -> HopfAxiomReport {
    let n = h.dim;
    let mut sampler = Sampler::new(n);
    let ex = sampler.exhaustive;
    let unit = from_lincomb(&h.unit);
    let e = Sum::basis;
    let mut checks = Vec::new();

    let shape_ok = h.mult.len() == n * n
        && h.comult.len() == n
        && h.counit.len() == n
        && h.antipode.len() == n
        && h.mult.iter().flatten().all(|&(k, _)| k < n)
        && h.comult.iter().flatten().all(|&(i, j, _)| i < n && j < n)
        && h.antipode.iter().flatten().all(|&(k, _)| k < n)
        && h.unit.iter().all(|&(k, _)| k < n);
    checks.push(AxiomCheck {
        axiom: "shape",
        passed: shape_ok,
        exhaustive: true,
        cases: 1,
        witness: None,
    });
    if !shape_ok {
        return HopfAxiomReport { dimension: n, checks };
    }

    checks.push(run_check(
        "associativity",
        ex,
        sampler.triples(),
        |(i, j, k)| vec![i, j, k],
        |(i, j, k)| {
            let left = h.mul_sum(&h.mul_sum(&e(i), &e(j)), &e(k));
            let right = h.mul_sum(&e(i), &h.mul_sum(&e(j), &e(k)));
            left.equals(&right)
        },
    ));

    checks.push(run_check(
        "unit",
        true,
        (0..n).collect(),
        |i| vec![i],
        |i| h.mul_sum(&unit, &e(i)).equals(&e(i)) && h.mul_sum(&e(i), &unit).equals(&e(i)),
    ));

    checks.push(run_check(
        "coassociativity",
        ex,
        sampler.singles(),
        |k| vec![k],
        |k| {
            let mut diff = Sum::new();
            for &(i, j, s) in &h.comult[k] {
                for &(a, b, t) in &h.comult[i] {
                    diff.add((a, b, j), s.mul(t), 1);
                }
                for &(a, b, t) in &h.comult[j] {
                    diff.add((i, a, b), s.mul(t), -1);
                }
            }
            diff.is_zero()
        },
    ));

    checks.push(run_check(
        "counit",
        true,
        (0..n).collect(),
        |k| vec![k],
        |k| {
            let mut left = Sum::new();
            let mut right = Sum::new();
            for &(i, j, s) in &h.comult[k] {
                left.add(j, s.mul(h.counit[i]), 1);
                right.add(i, s.mul(h.counit[j]), 1);
            }
            left.equals(&e(k)) && right.equals(&e(k))
        },
    ));

    checks.push(run_check(
        "comultiplication_multiplicative",
        ex,
        sampler.pairs(),
        |(i, j)| vec![i, j],
        |(i, j)| {
            let lhs = h.comult_sum(&h.mul_sum(&e(i), &e(j)));
            let mut rhs = Sum::new();
            for &(a, b, s) in &h.comult[i] {
                for &(c, d, t) in &h.comult[j] {
                    let st = s.mul(t);
                    for &(x, u) in &h.mult[a * n + c] {
                        for &(y, v) in &h.mult[b * n + d] {
                            rhs.add((x, y), st.mul(u).mul(v), 1);
                        }
                    }
                }
            }
            lhs.equals(&rhs)
        },
    ));

    checks.push(run_check(
        "counit_multiplicative",
        ex,
        sampler.pairs(),
        |(i, j)| vec![i, j],
        |(i, j)| {
            let mut lhs = Sum::new();
            for &(k, s) in &h.mult[i * n + j] {
                lhs.add((), s.mul(h.counit[k]), 1);
            }
            let mut rhs = Sum::new();
            rhs.add((), h.counit[i].mul(h.counit[j]), 1);
            lhs.equals(&rhs)
        },
    ));

    checks.push(run_check(
        "unit_comultiplicative",
        true,
        vec![()],
        |_| vec![],
        |_| {
            let lhs = h.comult_sum(&unit);
            let mut rhs = Sum::new();
            for &(a, s) in &h.unit {
                for &(b, t) in &h.unit {
                    rhs.add((a, b), s.mul(t), 1);
                }
            }
            let mut eps = Sum::new();
            for &(a, s) in &h.unit {
                eps.add((), s.mul(h.counit[a]), 1);
            }
            lhs.equals(&rhs) && eps.equals(&Sum::basis(()))
        },
    ));

    let antipode_side = |k: usize, left: bool| {
        let mut acc = Sum::new();
        for &(i, j, s) in &h.comult[k] {
            let prod = if left {
                h.mul_sum(&from_lincomb(&h.antipode[i]), &e(j))
            } else {
                h.mul_sum(&e(i), &from_lincomb(&h.antipode[j]))
            };
            for (&x, t, c) in prod.terms() {
                acc.add(x, s.mul(t), c);
            }
        }
        let mut expected = Sum::new();
        for (&x, t, c) in unit.terms() {
            expected.add(x, t.mul(h.counit[k]), c);
        }
        acc.equals(&expected)
    };
    checks.push(run_check(
        "antipode",
        ex,
        sampler.singles(),
        |k| vec![k],
        |k| antipode_side(k, true) && antipode_side(k, false),
    ));

    HopfAxiomReport { dimension: n, checks }
}

/// Fails with the first violated axiom.
pub fn require_hopf(h: &HopfStructureConstants) -> Result<HopfAxiomReport> {
    let report = verify_hopf_axioms(h);
    if let Some(f) = report.first_failure() {
        return Err(Error::HopfAxiom(format!(
            "{}: {} fails at {:?}",
            h.name, f.axiom, f.witness
        )));
    }
    Ok(report)
}
