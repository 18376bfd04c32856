//! Acceptance run: one PASS/FAIL line per criterion with its wall time.

mod common;

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use common::{
    dihedral, multiplier_order_four, multiplier_order_square_free, orbit_stabilizer_degrees, square_free_group_count,
    IntegerHopf,
};
use hopf_pqr::cohomology::{
    h2, h2_any, h2_on, is_cohomologous, metacyclic_params, schur_multiplier_metacyclic, Cocycle,
};
use hopf_pqr::cyclotomic::Scalar;
use hopf_pqr::fiber::{a_representation_category, fiber_functors, galois_object_count, GTCategoryData, HopfDescriptor};
use hopf_pqr::group::{
    direct_product, from_catalog, g4_member, is_isomorphic, semidirect_product, CatalogKind, GroupTag,
    DEFAULT_TABLE_THRESHOLD,
};
use hopf_pqr::hopf::{
    a_matched_pair, algebra_irrep_dimensions, build_a, dual_hopf, irrep_dimension_vector, smash_product,
    verify_hopf_axioms, HopfStructureConstants,
};
use hopf_pqr::morita::{abelian_isolation_check, g4_partners, morita_neighbors, morita_partition_of, HopfNode};
use hopf_pqr::numbers::{holder_count, is_perfect_square, mod_inverse, table1_case, MetacyclicParams};
use hopf_pqr::report::{self, Options, EXTENDED_TRIPLE};
use hopf_pqr::{FiniteGroup, MatchedPair, Subgroup};
use proptest::strategy::{Strategy, ValueTree};
use proptest::test_runner::{Config, RngAlgorithm, TestRng, TestRunner};

type Run = Result<String, String>;

/// `(number, name, budget in seconds, run)`
type Criterion = (u32, &'static str, u64, fn() -> Run);

const T: usize = DEFAULT_TABLE_THRESHOLD;

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn ok<X>(r: hopf_pqr::Result<X>) -> Result<X, String> {
    r.map_err(|e| e.to_string())
}

fn subgroup_orbit_count(g: &FiniteGroup, subs: &[Subgroup]) -> usize {
    let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
    let mut classes = 0;
    for s in subs {
        if seen.contains(s.members()) {
            continue;
        }
        classes += 1;
        for x in g.elements() {
            let mut c: Vec<usize> = s.members().iter().map(|&m| g.mul(g.mul(x, m), g.inv(x))).collect();
            c.sort_unstable();
            seen.insert(c);
        }
    }
    classes
}

fn group_counts() -> Run {
    let rows = [
        ((7, 5, 3), 2),
        ((5, 3, 2), 4),
        ((13, 3, 2), 6),
        ((13, 7, 3), 5),
        ((31, 5, 3), 4),
        ((7, 3, 2), 6),
    ];
    for ((p, q, r), expected) in rows {
        let n = p * q * r;
        let groups = ok(from_catalog(p, q, r, T))?;
        let holder = ok(holder_count(n))?;
        let row = ok(table1_case(p, q, r))?.count;
        let oracle = square_free_group_count(n);
        ensure!(
            groups.len() as u64 == expected && holder == expected && row == expected && oracle == expected,
            "({p},{q},{r}): catalog {} holder {holder} row {row} oracle {oracle}, expected {expected}",
            groups.len()
        );
        for (i, a) in groups.iter().enumerate() {
            ensure!(a.order() as u64 == n, "{} has order {}", a.name(), a.order());
            for b in &groups[i + 1..] {
                ensure!(ok(is_isomorphic(a, b))?.is_none(), "{} ≅ {}", a.name(), b.name());
            }
        }
    }
    Ok("6 triples: catalog = holder = table row = presentation count".into())
}

fn two_primes(n: usize, primes: [u64; 3]) -> bool {
    primes
        .iter()
        .enumerate()
        .any(|(i, &a)| primes[i + 1..].iter().any(|&b| (a * b) as usize == n))
}

/// Largest order given to the full cocycle-system oracle.
const ORACLE_ORDER: usize = 26;

fn schur_multipliers() -> Run {
    let params = [
        (7, 3, 2, 1),
        (2, 2, 1, 2),
        (2, 2, 1, 1),
        (4, 2, 3, 2),
        (4, 2, 3, 1),
        (3, 3, 1, 3),
        (6, 2, 1, 2),
        (5, 2, 4, 1),
        (9, 2, 8, 1),
        (7, 6, 3, 1),
        (13, 3, 3, 1),
        (8, 2, 7, 2),
        (4, 4, 1, 4),
        (6, 6, 1, 6),
    ];
    let mut compared = 0;
    for (m, n, r, l) in params {
        let mp = ok(MetacyclicParams::new(m, n, r, l))?;
        let g = ok(FiniteGroup::metacyclic(mp))?;
        let brute = ok(h2(&g))?;
        let formula = ok(schur_multiplier_metacyclic(mp))?;
        ensure!(
            brute.invariant_factors == formula.invariant_factors,
            "G({m},{n},{r},{l}): solver {:?} formula {:?}",
            brute.invariant_factors,
            formula.invariant_factors
        );
        let order = g.order() as u64;
        let reference = if order == 4 {
            Some(multiplier_order_four(&g))
        } else if hopf_pqr::numbers::is_square_free(order) && order <= ORACLE_ORDER as u64 {
            Some(multiplier_order_square_free(&g))
        } else {
            None
        };
        if let Some(x) = reference {
            ensure!(x == brute.order(), "G({m},{n},{r},{l}): full system gives {x}");
        }
        compared += 1;
    }

    // Two-prime subgroups of every catalog group, one oracle run per
    // (order, abelian) type.
    let mut oracle_cache: std::collections::BTreeMap<(usize, bool), u64> = Default::default();
    let (mut small, mut large) = (0, 0);
    for (p, q, r) in [(7, 5, 3), (5, 3, 2), (13, 3, 2), (13, 7, 3), (31, 5, 3), (7, 3, 2)] {
        for g in ok(from_catalog(p, q, r, T))? {
            for s in ok(g.subgroups())? {
                if !two_primes(s.order(), [p, q, r]) {
                    continue;
                }
                let sg = ok(s.as_group(&g))?;
                let params = metacyclic_params(&sg).ok_or(format!("order {} not recognized", s.order()))?;
                let formula = ok(schur_multiplier_metacyclic(params))?;
                ensure!(
                    formula.is_trivial(),
                    "formula: order-{} subgroup of {}",
                    s.order(),
                    g.name()
                );
                if s.order() <= hopf_pqr::cohomology::BRUTE_FORCE_THRESHOLD {
                    ensure!(
                        ok(h2_on(&g, &s))?.is_trivial(),
                        "solver: order-{} subgroup of {}",
                        s.order(),
                        g.name()
                    );
                    if s.order() <= ORACLE_ORDER {
                        let key = (s.order(), sg.is_abelian());
                        let reference = *oracle_cache
                            .entry(key)
                            .or_insert_with(|| multiplier_order_square_free(&sg));
                        ensure!(
                            reference == 1,
                            "full system: order-{} subgroup of {}",
                            s.order(),
                            g.name()
                        );
                    }
                    small += 1;
                } else {
                    ensure!(
                        ok(h2_any(&g, &s))?.is_trivial(),
                        "order-{} subgroup of {}",
                        s.order(),
                        g.name()
                    );
                    large += 1;
                }
            }
        }
    }
    ensure!(compared >= 10, "only {compared} metacyclic groups");
    Ok(format!(
        "{compared} metacyclic groups agree; {small} two-prime catalog subgroups of order ≤ 42 trivial by solver and formula ({} types also by the full system), {large} larger by formula",
        oracle_cache.len()
    ))
}

/// `{x : x^k = e}`, when it is a normal subgroup of order `k`.
fn hall_subgroup(g: &FiniteGroup, k: usize) -> Option<Vec<usize>> {
    let set: Vec<usize> = g.elements().filter(|&x| g.pow(x, k as u64) == 0).collect();
    let closed = set
        .iter()
        .all(|&a| set.iter().all(|&b| set.binary_search(&g.mul(a, b)).is_ok()));
    let normal = set
        .iter()
        .all(|&a| g.elements().all(|x| set.binary_search(&g.conj(x, a)).is_ok()));
    (set.len() == k && closed && normal).then_some(set)
}

fn galois_objects() -> Run {
    let mut algebras = 0;
    for (p, q, r) in [(7, 3, 2), (31, 5, 3)] {
        for g in ok(from_catalog(p, q, r, T))? {
            for h in [HopfDescriptor::GroupAlgebra(&g), HopfDescriptor::DualGroupAlgebra(&g)] {
                let c = ok(galois_object_count(h))?;
                ensure!(c == 1, "{h:?}: {c} Galois objects");
                algebras += 1;
            }
            // Non-degenerate classes need square order; only the trivial
            // subgroup has one.
            let square: Vec<Subgroup> = ok(g.subgroups())?
                .into_iter()
                .filter(|s| is_perfect_square(s.order() as u64))
                .collect();
            ensure!(
                subgroup_orbit_count(&g, &square) == 1,
                "{}: square-order subgroups",
                g.name()
            );
        }
        for (first, second) in [(q, r), (r, q)] {
            let c = ok(galois_object_count(HopfDescriptor::A { p, first, second }))?;
            ensure!(c == 1, "A_{p}({first};{second}): {c} Galois objects");
            algebras += 1;
            let cat = ok(a_representation_category(p, first, second))?;
            let w = ok(fiber_functors(&cat))?;
            let k = (p * first) as usize;
            let hall = hall_subgroup(&cat.group, k).ok_or(format!("no normal subgroup of order {k}"))?;
            ensure!(
                w.len() == 1 && w[0].subgroup.members() == hall.as_slice(),
                "A_{p}({first};{second}): witness"
            );
            // Complements of F up to conjugacy, counted directly.
            let comps: Vec<Subgroup> = ok(cat.group.subgroups())?
                .into_iter()
                .filter(|l| l.order() * cat.f.order() == cat.group.order())
                .filter(|l| l.members().iter().all(|&x| x == 0 || !cat.f.contains(x)))
                .collect();
            ensure!(
                subgroup_orbit_count(&cat.group, &comps) == 1,
                "A_{p}({first};{second}): complements"
            );
        }
    }
    Ok(format!(
        "{algebras} Hopf algebras with one Galois object; witnesses are the normal Hall subgroups"
    ))
}

fn morita_counts() -> Run {
    let mut out = Vec::new();
    for ((p, q, r), expected) in [
        ((31, 5, 3), 4),
        ((13, 3, 2), 6),
        ((5, 3, 2), 4),
        ((13, 7, 3), 4),
        ((7, 5, 3), 2),
    ] {
        let groups = ok(from_catalog(p, q, r, T))?;
        let part = ok(morita_partition_of(p, q, r, &groups))?;
        ensure!(
            part.classes.len() == expected,
            "({p},{q},{r}): {} classes, expected {expected}",
            part.classes.len()
        );
        ensure!(
            abelian_isolation_check(&part, &groups),
            "({p},{q},{r}): abelian group not isolated"
        );
        let covered: usize = part.classes.iter().map(Vec::len).sum();
        ensure!(
            covered == part.nodes.len(),
            "({p},{q},{r}): classes do not partition the nodes"
        );
        out.push(format!("({p},{q},{r})→{expected}"));
    }
    Ok(out.join(" "))
}

fn controls(mp: &MatchedPair) -> Result<HopfStructureConstants, String> {
    ok(smash_product(&MatchedPair::trivial(mp.f.clone(), mp.gamma.clone())))
}

type Fault = (&'static str, fn(&mut HopfStructureConstants));

fn faults() -> Vec<Fault> {
    vec![
        ("product moved", |h| {
            let ij = h.mult.iter().position(|v| !v.is_empty()).unwrap() + 3 * h.dim + 1;
            let (k, s) = h.mult[ij].first().copied().unwrap_or((0, Scalar::ONE));
            h.mult[ij] = vec![((k + 1) % h.dim, s)];
        }),
        ("product sign", |h| {
            let ij = h.mult.iter().rposition(|v| !v.is_empty()).unwrap();
            h.mult[ij][0].1 = h.mult[ij][0].1.mul(Scalar::root(1, 2));
        }),
        ("coproduct term dropped", |h| {
            h.comult[7].pop();
        }),
        ("antipode moved", |h| {
            let (k, s) = h.antipode[5][0];
            h.antipode[5] = vec![((k + 1) % h.dim, s)];
        }),
        ("counit zeroed", |h| h.counit[0] = Scalar::Zero),
        ("unit term dropped", |h| {
            h.unit.pop();
        }),
    ]
}

fn hopf_axioms() -> Run {
    let mut algebras = Vec::new();
    for (first, second) in [(2, 3), (3, 2)] {
        let a = ok(build_a(7, first, second))?;
        let mp = ok(a_matched_pair(7, first, second))?;
        let control = controls(&mp)?;
        algebras.push(dual_hopf(&a));
        algebras.push(dual_hopf(&control));
        algebras.push(control);
        algebras.push(a);
    }
    for h in &algebras {
        let rep = verify_hopf_axioms(h);
        ensure!(rep.all_passed(), "{}: {:?}", h.name, rep.first_failure());
        ensure!(rep.checks.iter().all(|c| c.exhaustive), "{}: not exhaustive", h.name);
        ensure!(
            IntegerHopf::new(h).first_failure().is_none(),
            "{}: integer check fails",
            h.name
        );
    }
    let mut located = 0;
    for base in [&algebras[3], &algebras[7]] {
        let clean = IntegerHopf::new(base);
        for (what, inject) in faults() {
            let mut bad = base.clone();
            inject(&mut bad);
            let rep = verify_hopf_axioms(&bad);
            let f = rep
                .first_failure()
                .ok_or(format!("{}: {what} not detected", base.name))?;
            let at = f
                .witness
                .clone()
                .ok_or(format!("{}: {what} has no witness", base.name))?;
            let oracle = IntegerHopf::new(&bad);
            ensure!(
                !oracle.holds(f.axiom, &at) && clean.holds(f.axiom, &at),
                "{}: {what}: witness {} {at:?} not confirmed",
                base.name,
                f.axiom
            );
            ensure!(
                oracle.first_failure().is_some(),
                "{}: {what}: oracle sees no failure",
                base.name
            );
            located += 1;
        }
    }
    Ok(format!(
        "{} algebras pass exhaustively; {located} injected faults located",
        algebras.len()
    ))
}

fn irreps() -> Run {
    let mut expect_23 = vec![1u64; 6];
    expect_23.extend([3; 4]);
    let mut expect_32 = vec![1u64; 6];
    expect_32.extend([2; 9]);
    let a23 = ok(build_a(7, 2, 3))?;
    let a32 = ok(build_a(7, 3, 2))?;
    for (h, expected, first, second) in [(&a23, &expect_23, 2, 3), (&a32, &expect_32, 3, 2)] {
        let v = ok(irrep_dimension_vector(h))?;
        ensure!(&v == expected, "{}: {v:?}", h.name);
        ensure!(v.iter().map(|d| d * d).sum::<u64>() == 42, "{}: squares", h.name);
        let oracle = orbit_stabilizer_degrees(&ok(a_matched_pair(7, first, second))?);
        ensure!(&oracle == expected, "{}: orbit count {oracle:?}", h.name);
        let generic = ok(algebra_irrep_dimensions(h))?;
        ensure!(
            &generic.irrep_dimensions == expected,
            "{}: algebra invariants {generic:?}",
            h.name
        );
    }
    let dual = ok(algebra_irrep_dimensions(&dual_hopf(&a23)))?;
    ensure!(dual.irrep_dimensions == expect_32, "dual: {:?}", dual.irrep_dimensions);
    Ok("A_7(2;3) {1⁶,3⁴}, A_7(3;2) {1⁶,2⁹}, dual(A_7(2;3)) {1⁶,2⁹}".into())
}

/// `Ĥ ⋊ K` for `H = ⟨x⟩` of prime order `p`, built from the conjugation
/// action of a complement `K`: `k` acting by `u` on `H` acts by `u⁻¹` on `Ĥ`.
fn dual_partner(g: &FiniteGroup, p: u64) -> Result<FiniteGroup, String> {
    let x = g
        .elements()
        .find(|&x| g.element_order(x) as u64 == p)
        .ok_or("no element of order p")?;
    let h = Subgroup::generated_by(g, &[x]);
    let k = ok(g.complement(&h))?;
    let kg = ok(k.as_group(g))?;
    let mut action = Vec::new();
    for &km in k.members() {
        let y = g.mul(g.mul(km, x), g.inv(km));
        let u = (1..p).find(|&u| g.pow(x, u) == y).ok_or("not a power")?;
        let inv = mod_inverse(u, p).ok_or("no inverse")?;
        action.extend((0..p).map(|j| (j * inv % p) as u32));
    }
    ok(semidirect_product(
        &FiniteGroup::cyclic(p as usize).map_err(|e| e.to_string())?,
        &kg,
        &action,
    ))
}

fn g4_phenomenon() -> Run {
    let (p, q, r) = (13, 7, 3);
    let groups = ok(from_catalog(p, q, r, T))?;
    for n in 1..r {
        let g = ok(g4_member(p, q, r, n, T))?;
        let partner = dual_partner(&g, p)?;
        let mut hit = false;
        for (t, w) in ok(morita_neighbors(&g))? {
            ensure!(
                t.order() == g.order() && w.varpi_trivial,
                "neighbor of G4({n}) malformed"
            );
            hit |= ok(is_isomorphic(&t, &partner))?.is_some();
        }
        ensure!(hit, "no neighbor of G4({n}) is isomorphic to Ĥ⋊K");
    }
    let part = ok(morita_partition_of(p, q, r, &groups))?;
    let g4_nodes: Vec<usize> = part
        .nodes
        .iter()
        .enumerate()
        .filter(|(_, node)| match node {
            HopfNode::GroupAlgebra { group } | HopfNode::FunctionAlgebra { group } => {
                matches!(
                    groups[*group].tag(),
                    GroupTag::Catalog {
                        id: CatalogKind::G4 { .. }
                    }
                )
            }
            _ => false,
        })
        .map(|(i, _)| i)
        .collect();
    ensure!(
        g4_nodes.len() == 2 * (r as usize - 1),
        "G4 family has {} nodes",
        g4_nodes.len()
    );
    let classes: BTreeSet<_> = g4_nodes.iter().map(|&i| part.class_of(i)).collect();
    ensure!(classes.len() == 1, "G4 family spread over {} classes", classes.len());
    ensure!(part.classes.len() == 4, "{} classes", part.classes.len());

    let (ep, eq, er) = EXTENDED_TRIPLE;
    let reports = ok(g4_partners(ep, eq, er, T))?;
    let found = reports
        .iter()
        .find(|x| x.non_isomorphic_partner.is_some())
        .ok_or("no non-isomorphic partner at the extended triple")?;
    ensure!(!found.separating_invariants.is_empty(), "partner not separated");
    Ok(format!(
        "(13,7,3): neighbors ≅ Ĥ⋊K, G4 family in one class of 4; ({ep},{eq},{er}): G4({}) ~ G4({}) separated by {}",
        found.n,
        found.non_isomorphic_partner.unwrap(),
        found.separating_invariants.join(", ")
    ))
}

fn small_groups() -> Vec<FiniteGroup> {
    let z2 = FiniteGroup::cyclic(2).unwrap();
    vec![
        dihedral(3),
        FiniteGroup::cyclic(6).unwrap(),
        dihedral(5),
        direct_product(&z2, &z2).unwrap(),
        FiniteGroup::cyclic(4).unwrap(),
        FiniteGroup::metacyclic(MetacyclicParams::new(7, 3, 2, 1).unwrap()).unwrap(),
        direct_product(&dihedral(3), &z2).unwrap(),
    ]
}

fn properties() -> Run {
    const CASES: u32 = 1000;
    let mut total = 0;
    for g in small_groups() {
        let n = g.order();
        let whole = Subgroup::whole(&g);
        let m = n as u64;
        let hg = ok(h2(&g))?;
        let reps = ok(hg.all_classes(&g, &whole))?;
        let mut runner = TestRunner::new_with_rng(
            Config {
                cases: CASES,
                ..Config::default()
            },
            TestRng::deterministic_rng(RngAlgorithm::ChaCha),
        );
        let strategy = (
            proptest::collection::vec(0..m, n - 1),
            0..reps.len(),
            1..reps.len().max(2),
        );
        for _ in 0..CASES {
            let (tail, class, shift) = strategy.new_tree(&mut runner).map_err(|e| e.to_string())?.current();
            let mut c = vec![0];
            c.extend(tail);
            let d = ok(Cocycle::coboundary(&g, whole.clone(), m, &c))?;
            ensure!(d.satisfies_cocycle_identity(), "{}: δc is not a cocycle", g.name());
            let zero = Cocycle::trivial(&g, whole.clone(), m);
            ensure!(ok(is_cohomologous(&d, &zero))?, "{}: δc not a coboundary", g.name());
            let rep = &reps[class];
            let moved = ok(rep.add(&d))?;
            ensure!(moved.satisfies_cocycle_identity(), "{}: β + δc not a cocycle", g.name());
            ensure!(ok(is_cohomologous(&moved, rep))?, "{}: β + δc left its class", g.name());
            if reps.len() > 1 {
                let other = &reps[(class + shift) % reps.len()];
                ensure!(
                    !ok(is_cohomologous(&moved, other))?,
                    "{}: distinct classes merged",
                    g.name()
                );
            }
            total += 1;
        }
    }

    let mut conj = 0;
    for g in small_groups() {
        for f in ok(g.subgroups())? {
            let base = ok(fiber_functors(&GTCategoryData::new(&g, f.clone())))?.len();
            for x in g.elements() {
                let moved = ok(fiber_functors(&GTCategoryData::new(&g, f.conjugate(&g, x))))?.len();
                ensure!(moved == base, "{}: count changes under conjugation of F", g.name());
                conj += 1;
            }
        }
    }

    let opts = Options {
        threshold: T,
        extended: false,
    };
    for (p, q, r) in [(7, 3, 2), (13, 7, 3)] {
        let a = ok(report::classify(p, q, r, opts))?.to_json();
        let b = ok(report::classify(p, q, r, opts))?.to_json();
        ensure!(a == b, "({p},{q},{r}): reports differ between runs");
    }
    let a = ok(report::verify(7, 3, 2, opts))?.to_json();
    let b = ok(report::verify(7, 3, 2, opts))?.to_json();
    ensure!(a == b, "(7,3,2): verify reports differ between runs");
    Ok(format!(
        "{total} cocycle cases, {conj} conjugated fiber-functor counts, reports byte-identical"
    ))
}

fn main() {
    let criteria: [Criterion; 8] = [
        (1, "group counts", 30, group_counts),
        (2, "Schur multipliers", 60, schur_multipliers),
        (3, "Galois objects", 120, galois_objects),
        (4, "Morita classes", 120, morita_counts),
        (5, "Hopf axioms", 30, hopf_axioms),
        (6, "irreducible degrees", 10, irreps),
        (7, "G4 partners", 600, g4_phenomenon),
        (8, "properties", 60, properties),
    ];
    let mut failed = 0;
    for (id, name, budget, run) in criteria {
        let start = Instant::now();
        let result = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        let elapsed = start.elapsed();
        let result = result.and_then(|d| {
            if elapsed > Duration::from_secs(budget) {
                Err(format!("{d}; over the {budget} s budget"))
            } else {
                Ok(d)
            }
        });
        match result {
            Ok(d) => println!("PASS {id} {name} [{:.2} s / {budget} s] {d}", elapsed.as_secs_f64()),
            Err(e) => {
                failed += 1;
                println!("FAIL {id} {name} [{:.2} s / {budget} s] {e}", elapsed.as_secs_f64());
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
