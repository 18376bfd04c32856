//! Brute-force reference computations shared by the integration tests.
//! None of them calls the algorithms they are compared against.
#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use hopf_pqr::cyclotomic::Scalar;
use hopf_pqr::group::{FiniteGroup, GroupTag, MatchedPair, TriplePresentation};
use hopf_pqr::hopf::HopfStructureConstants;

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn factor(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        while n.is_multiple_of(d) {
            out.push(d);
            n /= d;
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Groups of square-free order `n` are `<a, b | a^m, b^k, b a b^-1 = a^t>`
/// with `mk = n`, `t^k = 1` and `gcd(m, k(t - 1)) = 1`; two are isomorphic
/// iff `m` agrees and `⟨t⟩ ≤ Z_m^*` agrees. Counts those pairs directly.
pub fn square_free_group_count(n: u64) -> u64 {
    let mut total = 0;
    for m in (1..=n).filter(|m| n.is_multiple_of(*m)) {
        let k = n / m;
        if m == 1 {
            total += 1;
            continue;
        }
        let mut seen: BTreeSet<Vec<u64>> = BTreeSet::new();
        for t in 2..m {
            if gcd(t, m) != 1 || gcd(t - 1, m) != 1 {
                continue;
            }
            let mut powers = vec![1];
            let mut x = t;
            while x != 1 {
                powers.push(x);
                x = x * t % m;
            }
            if !k.is_multiple_of(powers.len() as u64) {
                continue;
            }
            powers.sort_unstable();
            seen.insert(powers);
        }
        total += seen.len() as u64;
    }
    total
}

fn inv_mod(x: u64, p: u64) -> u64 {
    (1..p).find(|&y| x * y % p == 1).unwrap()
}

/// Rank over `F_p`, inserting rows one at a time into a fully reduced
/// basis. A reduced basis row vanishes on every other pivot column, so a
/// sparse row needs one subtraction per nonzero pivot entry.
pub fn rank_mod_p(rows: Vec<Vec<u64>>, p: u64) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut pivot_of: Vec<Option<usize>> = vec![None; cols];
    let mut basis: Vec<(usize, Vec<u64>)> = Vec::new();
    for mut row in rows {
        for c in 0..cols {
            let x = row[c] % p;
            if x == 0 {
                continue;
            }
            if let Some(b) = pivot_of[c] {
                let prow = &basis[b].1;
                for (y, z) in row.iter_mut().zip(prow) {
                    *y = (*y % p + p - x * z % p) % p;
                }
            }
        }
        let Some(c) = (0..cols).find(|&c| row[c] % p != 0) else {
            continue;
        };
        let inv = inv_mod(row[c] % p, p);
        for y in row.iter_mut() {
            *y = *y % p * inv % p;
        }
        for (_, other) in basis.iter_mut() {
            let x = other[c];
            if x != 0 {
                for (y, z) in other.iter_mut().zip(&row) {
                    *y = (*y + p - x * z % p) % p;
                }
            }
        }
        pivot_of[c] = Some(basis.len());
        basis.push((c, row));
    }
    basis.len()
}

/// |H²(L, k*)| = |Z²(L, Z_N)| / |B²(L, Z_N)| / |Hom(L, Z_N)| for square-free
/// N = |L|, from the full cocycle system over every triple.
pub fn multiplier_order_square_free(g: &FiniteGroup) -> u64 {
    let n = g.order();
    if n == 1 {
        return 1;
    }
    let var = |a: usize, b: usize| (a - 1) * (n - 1) + (b - 1);
    let cols = (n - 1) * (n - 1);
    let mut total = 1u64;
    let mut primes = factor(n as u64);
    primes.dedup();
    for p in primes {
        assert!(!(n as u64).is_multiple_of(p * p), "order must be square-free");
        let mut cocycle_rows = Vec::new();
        for a in 1..n {
            for b in 1..n {
                for c in 1..n {
                    let mut row = vec![0u64; cols];
                    let mut add = |x: usize, y: usize, s: i64| {
                        if x != 0 && y != 0 {
                            let v = &mut row[var(x, y)];
                            *v = ((*v as i64 + s).rem_euclid(p as i64)) as u64;
                        }
                    };
                    add(b, c, 1);
                    add(g.mul(a, b), c, -1);
                    add(a, g.mul(b, c), 1);
                    add(a, b, -1);
                    cocycle_rows.push(row);
                }
            }
        }
        let z_dim = cols - rank_mod_p(cocycle_rows, p);
        let delta_rows: Vec<Vec<u64>> = (1..n)
            .map(|y| {
                let mut row = vec![0u64; cols];
                for a in 1..n {
                    for b in 1..n {
                        let v = (a == y) as i64 + (b == y) as i64 - (g.mul(a, b) == y) as i64;
                        row[var(a, b)] = v.rem_euclid(p as i64) as u64;
                    }
                }
                row
            })
            .collect();
        let b_dim = rank_mod_p(delta_rows, p);
        let hom_dim = (n - 1) - b_dim;
        total *= p.pow((z_dim - b_dim - hom_dim) as u32);
    }
    total
}

/// Enumerates all normalized 2-cochains of an order-4 group mod 4.
pub fn multiplier_order_four(g: &FiniteGroup) -> u64 {
    assert_eq!(g.order(), 4);
    let n = 4usize;
    let m = 4u64;
    let mut cocycles = 0u64;
    let mut f = [0u64; 16];
    for code in 0..4u64.pow(9) {
        let mut c = code;
        for a in 1..n {
            for b in 1..n {
                f[a * n + b] = c % m;
                c /= m;
            }
        }
        let ok = (0..n).all(|a| {
            (0..n).all(|b| {
                (0..n)
                    .all(|d| (f[b * n + d] + f[a * n + g.mul(b, d)]) % m == (f[a * n + b] + f[g.mul(a, b) * n + d]) % m)
            })
        });
        cocycles += ok as u64;
    }
    let mut coboundaries = std::collections::HashSet::new();
    let mut homs = 0u64;
    for code in 0..64u64 {
        let cch = [0, code % 4, code / 4 % 4, code / 16];
        let mut d = [0u64; 16];
        for a in 0..n {
            for b in 0..n {
                d[a * n + b] = (cch[a] + cch[b] + m - cch[g.mul(a, b)]) % m;
            }
        }
        homs += d.iter().all(|&x| x == 0) as u64;
        coboundaries.insert(d);
    }
    cocycles / coboundaries.len() as u64 / homs
}

pub fn dihedral(n: u64) -> FiniteGroup {
    let pres = TriplePresentation::new(n, 2, 1, n - 1, 1, 1).unwrap();
    FiniteGroup::from_triple(pres, 5000, GroupTag::Table, format!("D{n}")).unwrap()
}

/// Irrep degrees of `k^Γ # k[F]` for abelian `F`: one irrep of degree `|O|`
/// per orbit `O` of `F` on `Γ` and character of the stabilizer.
pub fn orbit_stabilizer_degrees(mp: &MatchedPair) -> Vec<u64> {
    let (ng, nf) = (mp.gamma.order(), mp.f.order());
    assert!(mp.f.is_abelian());
    let mut seen = vec![false; ng];
    let mut out = Vec::new();
    for s in 0..ng {
        if seen[s] {
            continue;
        }
        let orbit: BTreeSet<usize> = (0..nf).map(|x| mp.left[s * nf + x] as usize).collect();
        for &o in &orbit {
            seen[o] = true;
        }
        let stab = nf / orbit.len();
        out.extend(std::iter::repeat_n(orbit.len() as u64, stab));
    }
    out.sort_unstable();
    out
}

/// Hopf tables whose constants are all `0` or `±1`, checked in plain integers.
pub struct IntegerHopf {
    pub dim: usize,
    mult: Vec<Vec<(usize, i64)>>,
    comult: Vec<Vec<(usize, usize, i64)>>,
    unit: Vec<(usize, i64)>,
    counit: Vec<i64>,
    antipode: Vec<Vec<(usize, i64)>>,
}

fn int(s: Scalar) -> i64 {
    match s {
        Scalar::Zero => 0,
        Scalar::Root { num: 0, .. } => 1,
        Scalar::Root { num: 1, den: 2 } => -1,
        other => panic!("constant {other} is not rational"),
    }
}

type Vector = BTreeMap<usize, i64>;

fn clean<K: Ord + Clone>(mut v: BTreeMap<K, i64>) -> BTreeMap<K, i64> {
    v.retain(|_, c| *c != 0);
    v
}

impl IntegerHopf {
    pub fn new(h: &HopfStructureConstants) -> Self {
        let lin = |v: &Vec<(usize, Scalar)>| v.iter().map(|&(i, s)| (i, int(s))).collect::<Vec<_>>();
        Self {
            dim: h.dim,
            mult: h.mult.iter().map(lin).collect(),
            comult: h
                .comult
                .iter()
                .map(|v| v.iter().map(|&(i, j, s)| (i, j, int(s))).collect())
                .collect(),
            unit: lin(&h.unit),
            counit: h.counit.iter().map(|&s| int(s)).collect(),
            antipode: h.antipode.iter().map(lin).collect(),
        }
    }

    fn mul(&self, a: &Vector, b: &Vector) -> Vector {
        let mut out = Vector::new();
        for (&i, &x) in a {
            for (&j, &y) in b {
                for &(k, z) in &self.mult[i * self.dim + j] {
                    *out.entry(k).or_default() += x * y * z;
                }
            }
        }
        clean(out)
    }

    fn basis(i: usize) -> Vector {
        Vector::from([(i, 1)])
    }

    fn unit_vector(&self) -> Vector {
        clean(self.unit.iter().copied().collect())
    }

    /// Whether `axiom` holds at the given basis indices; index conventions
    /// follow the library's witnesses.
    pub fn holds(&self, axiom: &str, at: &[usize]) -> bool {
        let e = Self::basis;
        match axiom {
            "associativity" => {
                let (i, j, k) = (at[0], at[1], at[2]);
                self.mul(&self.mul(&e(i), &e(j)), &e(k)) == self.mul(&e(i), &self.mul(&e(j), &e(k)))
            }
            "unit" => {
                let u = self.unit_vector();
                self.mul(&u, &e(at[0])) == e(at[0]) && self.mul(&e(at[0]), &u) == e(at[0])
            }
            "coassociativity" => {
                let mut l = BTreeMap::new();
                let mut r = BTreeMap::new();
                for &(i, j, s) in &self.comult[at[0]] {
                    for &(a, b, t) in &self.comult[i] {
                        *l.entry((a, b, j)).or_insert(0) += s * t;
                    }
                    for &(a, b, t) in &self.comult[j] {
                        *r.entry((i, a, b)).or_insert(0) += s * t;
                    }
                }
                clean(l) == clean(r)
            }
            "counit" => {
                let mut l = Vector::new();
                let mut r = Vector::new();
                for &(i, j, s) in &self.comult[at[0]] {
                    *l.entry(j).or_default() += s * self.counit[i];
                    *r.entry(i).or_default() += s * self.counit[j];
                }
                clean(l) == e(at[0]) && clean(r) == e(at[0])
            }
            "comultiplication_multiplicative" => {
                let (i, j) = (at[0], at[1]);
                let mut lhs = BTreeMap::new();
                for &(k, c) in &self.mult[i * self.dim + j] {
                    for &(a, b, s) in &self.comult[k] {
                        *lhs.entry((a, b)).or_insert(0) += c * s;
                    }
                }
                let mut rhs = BTreeMap::new();
                for &(a, b, s) in &self.comult[i] {
                    for &(c, d, t) in &self.comult[j] {
                        for &(x, u) in &self.mult[a * self.dim + c] {
                            for &(y, v) in &self.mult[b * self.dim + d] {
                                *rhs.entry((x, y)).or_insert(0) += s * t * u * v;
                            }
                        }
                    }
                }
                clean(lhs) == clean(rhs)
            }
            "counit_multiplicative" => {
                let (i, j) = (at[0], at[1]);
                let lhs: i64 = self.mult[i * self.dim + j]
                    .iter()
                    .map(|&(k, c)| c * self.counit[k])
                    .sum();
                lhs == self.counit[i] * self.counit[j]
            }
            "unit_comultiplicative" => {
                let mut lhs = BTreeMap::new();
                for &(k, c) in &self.unit {
                    for &(a, b, s) in &self.comult[k] {
                        *lhs.entry((a, b)).or_insert(0) += c * s;
                    }
                }
                let mut rhs = BTreeMap::new();
                for &(a, s) in &self.unit {
                    for &(b, t) in &self.unit {
                        *rhs.entry((a, b)).or_insert(0) += s * t;
                    }
                }
                let eps: i64 = self.unit.iter().map(|&(a, s)| s * self.counit[a]).sum();
                clean(lhs) == clean(rhs) && eps == 1
            }
            "antipode" => {
                let k = at[0];
                let expected: Vector = clean(
                    self.unit_vector()
                        .into_iter()
                        .map(|(x, c)| (x, c * self.counit[k]))
                        .collect(),
                );
                let side = |left: bool| {
                    let mut acc = Vector::new();
                    for &(i, j, s) in &self.comult[k] {
                        let prod = if left {
                            self.mul(&self.antipode[i].iter().copied().collect(), &e(j))
                        } else {
                            self.mul(&e(i), &self.antipode[j].iter().copied().collect())
                        };
                        for (x, c) in prod {
                            *acc.entry(x).or_default() += s * c;
                        }
                    }
                    clean(acc)
                };
                side(true) == expected && side(false) == expected
            }
            other => panic!("unknown axiom {other}"),
        }
    }

    /// First failing axiom over every basis index, in the library's order.
    pub fn first_failure(&self) -> Option<(&'static str, Vec<usize>)> {
        let n = self.dim;
        let singles = |name: &'static str| (0..n).find(|&k| !self.holds(name, &[k])).map(|k| (name, vec![k]));
        let pairs = |name: &'static str| {
            (0..n * n)
                .find(|&x| !self.holds(name, &[x / n, x % n]))
                .map(|x| (name, vec![x / n, x % n]))
        };
        (0..n * n * n)
            .find(|&x| !self.holds("associativity", &[x / (n * n), x / n % n, x % n]))
            .map(|x| ("associativity", vec![x / (n * n), x / n % n, x % n]))
            .or_else(|| singles("unit"))
            .or_else(|| singles("coassociativity"))
            .or_else(|| singles("counit"))
            .or_else(|| pairs("comultiplication_multiplicative"))
            .or_else(|| pairs("counit_multiplicative"))
            .or_else(|| (!self.holds("unit_comultiplicative", &[])).then(|| ("unit_comultiplicative", vec![])))
            .or_else(|| singles("antipode"))
    }
}
