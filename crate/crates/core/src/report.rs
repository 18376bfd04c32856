//! End-to-end pipelines behind the command-line tool, producing
//! deterministic reports.

use std::fmt::Write as _;

use serde::Serialize;

use crate::cohomology::{
    h2_any, h2_on, metacyclic_params, schur_multiplier_metacyclic, H2Source, BRUTE_FORCE_THRESHOLD,
};
use crate::error::{Error, Result};
use crate::fiber::{a_representation_category, fiber_functors, galois_object_count, HopfDescriptor};
use crate::group::{catalog_group, direct_product, from_catalog, CatalogKind, FiniteGroup, GroupTag, Subgroup};
use crate::hopf::{
    algebra_irrep_dimensions, build_a, dual_hopf, irrep_dimension_vector, verify_hopf_axioms, HopfStructureConstants,
    EXHAUSTIVE_DIMENSION,
};
use crate::morita::{
    abelian_isolation_check, expected_class_count, g4_partners, morita_partition_of, G4PartnerReport, HopfNode,
};
use crate::numbers::{check_prime_triple, holder_count, table1_case, MetacyclicParams};

pub const SCHEMA_VERSION: u32 = 1;

/// Triple used by the extended structured-arithmetic run.
pub const EXTENDED_TRIPLE: (u64, u64, u64) = (331, 11, 5);

#[derive(Debug, Clone, Copy)]
pub struct Options {
    pub threshold: usize,
    pub extended: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct GroupEntry {
    pub index: usize,
    pub name: String,
    pub order: usize,
    pub tag: GroupTag,
    pub abelian: bool,
    pub center_order: usize,
    pub h2: Vec<u64>,
    pub h2_source: H2Source,
}

#[derive(Debug, Clone, Serialize)]
pub struct HopfEntry {
    pub label: String,
    pub node: HopfNode,
    pub dimension: u64,
}

#[derive(Debug, Clone, Serialize)]
pub struct GaloisEntry {
    pub hopf: String,
    pub count: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    fn new(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            passed,
            detail: detail.into(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub schema: u32,
    pub command: &'static str,
    pub triple: [u64; 3],
    pub case: u8,
    pub groups: Vec<GroupEntry>,
    pub hopf_algebras: Vec<HopfEntry>,
    pub galois_object_counts: Vec<GaloisEntry>,
    pub morita_classes: Vec<Vec<String>>,
    pub checks: Vec<Check>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub extended: Option<Vec<G4PartnerReport>>,
}

impl Report {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> Vec<&Check> {
        self.checks.iter().filter(|c| !c.passed).collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

struct Classified {
    report: Report,
    groups: Vec<FiniteGroup>,
}

fn classify_inner(p: u64, q: u64, r: u64, opts: Options) -> Result<Classified> {
    check_prime_triple(p, q, r)?;
    let row = table1_case(p, q, r)?;
    let groups = from_catalog(p, q, r, opts.threshold)?;
    let mut checks = Vec::new();
    let holder = holder_count(p * q * r)?;
    checks.push(Check::new(
        "group_count",
        groups.len() as u64 == holder && holder == row.count,
        format!("catalog {}, Hölder {holder}, table {}", groups.len(), row.count),
    ));

    let mut entries = Vec::new();
    for (index, g) in groups.iter().enumerate() {
        let h = h2_any(g, &Subgroup::whole(g))?;
        entries.push(GroupEntry {
            index,
            name: g.name().to_string(),
            order: g.order(),
            tag: g.tag().clone(),
            abelian: g.is_abelian(),
            center_order: g.center().len(),
            h2: h.invariant_factors,
            h2_source: h.source,
        });
    }

    let partition = morita_partition_of(p, q, r, &groups)?;
    let n = p * q * r;
    let mut hopf = Vec::new();
    let mut galois = Vec::new();
    for (i, &node) in partition.nodes.iter().enumerate() {
        let label = partition.labels[i].clone();
        let desc = match node {
            HopfNode::GroupAlgebra { group } => HopfDescriptor::GroupAlgebra(&groups[group]),
            HopfNode::FunctionAlgebra { group } => HopfDescriptor::DualGroupAlgebra(&groups[group]),
            HopfNode::Extension { p, first, second } => HopfDescriptor::A { p, first, second },
        };
        galois.push(GaloisEntry {
            hopf: label.clone(),
            count: galois_object_count(desc)?,
        });
        hopf.push(HopfEntry {
            label,
            node,
            dimension: n,
        });
    }
    let bad: Vec<&str> = galois
        .iter()
        .filter(|g| g.count != 1)
        .map(|g| g.hopf.as_str())
        .collect();
    checks.push(Check::new(
        "galois_objects",
        bad.is_empty(),
        if bad.is_empty() {
            format!("all {} Hopf algebras have exactly one", galois.len())
        } else {
            format!("count differs from 1 for {}", bad.join(", "))
        },
    ));

    let expected = expected_class_count(p, q, r)?;
    checks.push(Check::new(
        "morita_class_count",
        partition.classes.len() as u64 == expected,
        format!("computed {}, expected {expected}", partition.classes.len()),
    ));
    let mut seen = vec![0usize; partition.nodes.len()];
    for c in &partition.classes {
        for &i in c {
            seen[i] += 1;
        }
    }
    checks.push(Check::new(
        "morita_partition",
        seen.iter().all(|&k| k == 1),
        format!("{} nodes in {} classes", partition.nodes.len(), partition.classes.len()),
    ));
    checks.push(Check::new(
        "abelian_isolation",
        abelian_isolation_check(&partition, &groups),
        format!("class of k[Z{n}]"),
    ));

    let extended = if opts.extended {
        let (ep, eq, er) = EXTENDED_TRIPLE;
        let rep = g4_partners(ep, eq, er, opts.threshold)?;
        let ok = rep.iter().all(|x| x.non_isomorphic_partner.is_some_and(|m| m != x.n));
        checks.push(Check::new(
            "g4_non_isomorphic_partner",
            ok,
            format!("structured run at ({ep},{eq},{er})"),
        ));
        Some(rep)
    } else {
        None
    };

    Ok(Classified {
        report: Report {
            schema: SCHEMA_VERSION,
            command: "classify",
            triple: [p, q, r],
            case: row.case,
            groups: entries,
            hopf_algebras: hopf,
            galois_object_counts: galois,
            morita_classes: partition.class_labels(),
            checks,
            extended,
        },
        groups,
    })
}

/// Catalog, cohomology, Galois-object counts and Morita classes.
pub fn classify(p: u64, q: u64, r: u64, opts: Options) -> Result<Report> {
    Ok(classify_inner(p, q, r, opts)?.report)
}

fn axiom_check(name: &str, h: &HopfStructureConstants) -> Check {
    let report = verify_hopf_axioms(h);
    let mode = if h.dim <= EXHAUSTIVE_DIMENSION {
        "exhaustive"
    } else {
        "sampled"
    };
    match report.first_failure() {
        None => Check::new(
            format!("hopf_axioms:{name}"),
            true,
            format!("dimension {}, {mode}", h.dim),
        ),
        Some(f) => Check::new(
            format!("hopf_axioms:{name}"),
            false,
            format!("{} fails at {:?}", f.axiom, f.witness),
        ),
    }
}

/// Everything `classify` checks, plus Hopf axioms, representation
/// dimensions, fiber-functor witnesses and the H² cross-check.
pub fn verify(p: u64, q: u64, r: u64, opts: Options) -> Result<Report> {
    let Classified { mut report, groups } = classify_inner(p, q, r, opts)?;
    report.command = "verify";
    let checks = &mut report.checks;

    for g in &groups {
        checks.push(axiom_check(
            &format!("k[{}]", g.name()),
            &HopfStructureConstants::group_algebra(g),
        ));
        checks.push(axiom_check(
            &format!("k^{}", g.name()),
            &HopfStructureConstants::function_algebra(g),
        ));
    }

    // Brute force against the closed form on every small subgroup.
    let mut compared = 0;
    let mut disagreements = Vec::new();
    for g in &groups {
        if !g.has_table() {
            continue;
        }
        for s in g.subgroups()? {
            if s.order() > BRUTE_FORCE_THRESHOLD {
                continue;
            }
            let Some(params) = metacyclic_params(&s.as_group(g)?) else {
                continue;
            };
            let brute = h2_on(g, &s)?.invariant_factors;
            let formula = schur_multiplier_metacyclic(params)?.invariant_factors;
            compared += 1;
            if brute != formula {
                disagreements.push(format!("{} subgroup of order {}", g.name(), s.order()));
            }
        }
    }
    checks.push(Check::new(
        "cohomology_crosscheck",
        disagreements.is_empty(),
        if disagreements.is_empty() {
            format!("{compared} subgroups agree")
        } else {
            disagreements.join("; ")
        },
    ));

    if (p - 1).is_multiple_of(q * r) {
        let mut dims = Vec::new();
        for (first, second) in [(q, r), (r, q)] {
            let a = build_a(p, first, second)?;
            let label = a.name.clone();
            checks.push(axiom_check(&label, &a));
            let dual = dual_hopf(&a);
            checks.push(axiom_check(&format!("dual {label}"), &dual));
            checks.push(Check::new(
                format!("dual_involution:{label}"),
                dual_hopf(&dual).same_tables(&a),
                "dual of dual equals original tables",
            ));
            let v = irrep_dimension_vector(&a)?;
            let sum: u64 = v.iter().map(|d| d * d).sum();
            checks.push(Check::new(
                format!("irrep_dimensions:{label}"),
                sum == a.dim as u64,
                format!("{} irreducibles, sum of squares {sum}", v.len()),
            ));
            let cat = a_representation_category(p, first, second)?;
            let w = fiber_functors(&cat)?;
            let ok = w.len() == 1
                && w[0].subgroup.order() as u64 == p * first
                && cat.group.is_normal(&w[0].subgroup)?
                && cat
                    .group
                    .subgroups()?
                    .iter()
                    .filter(|s| s.order() as u64 == p * first)
                    .count()
                    == 1;
            checks.push(Check::new(
                format!("fiber_witness:{label}"),
                ok,
                format!("witness order {}", w.first().map_or(0, |x| x.subgroup.order())),
            ));
            dims.push((dual, v));
        }
        // Invariants of the dual of one extension against the other.
        for i in 0..2 {
            let (dual, _) = &dims[i];
            let (_, other) = &dims[1 - i];
            if dual.dim <= EXHAUSTIVE_DIMENSION {
                let inv = algebra_irrep_dimensions(dual)?;
                checks.push(Check::new(
                    format!("dual_invariants:{}", dual.name),
                    &inv.irrep_dimensions == other,
                    format!("{:?}", inv.irrep_dimensions),
                ));
            }
        }
    }
    Ok(report)
}

/// How to name a group on the command line.
#[derive(Debug, Clone)]
pub enum GroupSelector {
    Metacyclic(MetacyclicParams),
    /// `Z6`, `S3`, `D5`, or direct products such as `Z2xZ2`.
    Named(String),
    Catalog {
        kind: CatalogKind,
        p: u64,
        q: u64,
        r: u64,
    },
}

fn named_factor(s: &str) -> Result<FiniteGroup> {
    let bad = || Error::InvalidParameters(format!("unknown group factor {s:?}"));
    let (head, num) = s.split_at(1);
    let n: i64 = num.parse().map_err(|_| bad())?;
    match head {
        "Z" | "C" if n >= 1 => FiniteGroup::cyclic(n as usize),
        "S" if n == 3 => FiniteGroup::metacyclic(MetacyclicParams::new(3, 2, 2, 1)?),
        "D" if n >= 3 => FiniteGroup::metacyclic(MetacyclicParams::new(n as u64, 2, n - 1, 1)?),
        _ => Err(bad()),
    }
}

/// Parses names like `Z2xZ2` or `D5`.
pub fn parse_named_group(name: &str) -> Result<FiniteGroup> {
    let mut factors = name.split(['x', '×']).filter(|s| !s.is_empty());
    let first = factors
        .next()
        .ok_or_else(|| Error::InvalidParameters("empty group name".into()))?;
    let mut g = named_factor(first)?;
    for f in factors {
        g = direct_product(&g, &named_factor(f)?)?;
    }
    Ok(g.with_name(name))
}

/// Parses catalog ids `G1`..`G6`, with `G4:n` for the family.
pub fn parse_catalog_kind(id: &str) -> Result<CatalogKind> {
    let bad = || Error::InvalidParameters(format!("unknown catalog id {id:?}"));
    if let Some(n) = id.strip_prefix("G4:") {
        return Ok(CatalogKind::G4 {
            n: n.parse().map_err(|_| bad())?,
        });
    }
    Ok(match id {
        "G1" => CatalogKind::G1,
        "G2" => CatalogKind::G2,
        "G3" => CatalogKind::G3,
        "G5" => CatalogKind::G5,
        "G6" => CatalogKind::G6,
        _ => return Err(bad()),
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct CohomologyReport {
    pub schema: u32,
    pub group: String,
    pub order: usize,
    /// Invariant factors from the linear solver; absent above its threshold.
    pub brute_force: Option<Vec<u64>>,
    /// Invariant factors from the metacyclic closed form; absent when the
    /// group is not recognized as metacyclic.
    pub formula: Option<Vec<u64>>,
    pub agree: bool,
}

pub fn cohomology(selector: &GroupSelector, threshold: usize) -> Result<CohomologyReport> {
    let (g, known) = match selector {
        GroupSelector::Metacyclic(params) => (FiniteGroup::metacyclic(*params)?, Some(*params)),
        GroupSelector::Named(name) => (parse_named_group(name)?, None),
        &GroupSelector::Catalog { kind, p, q, r } => {
            check_prime_triple(p, q, r)?;
            (catalog_group(kind, p, q, r, threshold)?, None)
        }
    };
    let brute = if g.order() <= BRUTE_FORCE_THRESHOLD {
        Some(h2_on(&g, &Subgroup::whole(&g))?.invariant_factors)
    } else {
        None
    };
    let params = match known {
        Some(p) => Some(p),
        None if g.has_table() => metacyclic_params(&g),
        None => None,
    };
    let formula = params
        .map(|p| schur_multiplier_metacyclic(p).map(|h| h.invariant_factors))
        .transpose()?;
    let agree = match (&brute, &formula) {
        (Some(a), Some(b)) => a == b,
        _ => true,
    };
    Ok(CohomologyReport {
        schema: SCHEMA_VERSION,
        group: g.name().to_string(),
        order: g.order(),
        brute_force: brute,
        formula,
        agree,
    })
}

fn factors(v: &[u64]) -> String {
    if v.is_empty() {
        "0".into()
    } else {
        v.iter().map(|d| format!("Z{d}")).collect::<Vec<_>>().join(" × ")
    }
}

pub fn render_cohomology(r: &CohomologyReport) -> String {
    let show = |x: &Option<Vec<u64>>| x.as_deref().map_or("-".to_string(), factors);
    format!(
        "{} (order {})\n  brute force: {}\n  formula:     {}\n  {}\n",
        r.group,
        r.order,
        show(&r.brute_force),
        show(&r.formula),
        if r.agree { "agree" } else { "DISAGREE" }
    )
}

/// Human-readable summary.
pub fn render_pretty(r: &Report) -> String {
    let mut s = String::new();
    let [p, q, r3] = r.triple;
    let _ = writeln!(s, "{} {p} {q} {r3}  (case {})", r.command, r.case);
    let _ = writeln!(s, "\ngroups:");
    for g in &r.groups {
        let _ = writeln!(s, "  {:<40} order {:<6} H² {}", g.name, g.order, factors(&g.h2));
    }
    let _ = writeln!(s, "\nGalois objects:");
    for e in &r.galois_object_counts {
        let _ = writeln!(s, "  {:<44} {}", e.hopf, e.count);
    }
    let _ = writeln!(s, "\nMorita classes ({}):", r.morita_classes.len());
    for (i, c) in r.morita_classes.iter().enumerate() {
        let _ = writeln!(s, "  [{}] {}", i + 1, c.join(", "));
    }
    if let Some(ext) = &r.extended {
        let _ = writeln!(s, "\nG4 partners at {EXTENDED_TRIPLE:?}:");
        for e in ext {
            let _ = writeln!(
                s,
                "  n={} partner {:?} separated by {}",
                e.n,
                e.non_isomorphic_partner,
                e.separating_invariants.join(", ")
            );
        }
    }
    let _ = writeln!(s, "\nchecks:");
    for c in &r.checks {
        let _ = writeln!(
            s,
            "  {} {:<40} {}",
            if c.passed { "PASS" } else { "FAIL" },
            c.name,
            c.detail
        );
    }
    s
}
