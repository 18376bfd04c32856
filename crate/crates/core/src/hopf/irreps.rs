use num_rational::BigRational;
use num_traits::Zero;
use serde::Serialize;

use super::{dual_hopf, HopfStructureConstants};
use crate::cyclotomic::Scalar;
use crate::error::{Error, Result};
use crate::group::{FiniteGroup, Subgroup};
use crate::linalg::{rank_over_q, rational, RationalSpan};

/// Degrees `d ≥ 2`, `count` of them, with `Σ d² = total`. Every solution is
/// returned, in nondecreasing order.
fn degree_multisets(count: usize, total: u64) -> Vec<Vec<u64>> {
    fn go(count: usize, total: u64, min: u64, acc: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if count == 0 {
            if total == 0 {
                out.push(acc.clone());
            }
            return;
        }
        let mut d = min;
        while d * d * count as u64 <= total {
            acc.push(d);
            go(count - 1, total - d * d, d, acc, out);
            acc.pop();
            d += 1;
        }
    }
    let mut out = Vec::new();
    go(count, total, 2, &mut Vec::new(), &mut out);
    out
}

/// Irreducible degrees from the number of irreducibles, the number of
/// one-dimensional ones and the total dimension, when these determine them.
fn solve_degrees(dim: u64, irreducibles: usize, linear: usize) -> Result<Vec<u64>> {
    let rest = dim
        .checked_sub(linear as u64)
        .ok_or_else(|| Error::Consistency("more linear characters than dimension".into()))?;
    let mut sols = degree_multisets(irreducibles - linear, rest);
    match sols.len() {
        1 => {
            let mut d = vec![1; linear];
            d.append(&mut sols[0]);
            Ok(d)
        }
        0 => Err(Error::Consistency(format!(
            "no degrees fit dimension {dim} with {irreducibles} irreducibles, {linear} linear"
        ))),
        _ => Err(Error::Unsupported(format!(
            "degrees not determined by dimension {dim}, {irreducibles} irreducibles, {linear} linear"
        ))),
    }
}

fn group_degrees(g: &FiniteGroup) -> Result<Vec<u64>> {
    let linear = g.order() / g.derived_subgroup().len();
    solve_degrees(g.order() as u64, g.conjugacy_classes().len(), linear)
}

/// Irreducible dimensions of a smash product `k^Γ # k[F]`: each `F`-orbit
/// `O` on `Γ` with stabilizer `F_g` contributes `|O|·d` for every
/// irreducible degree `d` of `F_g`. Sorted ascending.
pub fn irrep_dimension_vector(h: &HopfStructureConstants) -> Result<Vec<u64>> {
    let mp = h.smash.as_ref().ok_or(Error::NotASmashProduct)?;
    let (ng, nf) = (mp.gamma.order(), mp.f.order());
    let mut seen = vec![false; ng];
    let mut dims = Vec::new();
    for g in 0..ng {
        if seen[g] {
            continue;
        }
        let mut orbit = Vec::new();
        for x in 0..nf {
            let s = mp.triangle_left(g, x);
            if !seen[s] {
                seen[s] = true;
                orbit.push(s);
            }
        }
        let stab: Vec<usize> = (0..nf).filter(|&x| mp.triangle_left(g, x) == g).collect();
        let stab = Subgroup::from_members(&mp.f, stab)?.as_group(&mp.f)?;
        for d in group_degrees(&stab)? {
            dims.push(orbit.len() as u64 * d);
        }
    }
    dims.sort_unstable();
    Ok(dims)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AlgebraInvariants {
    pub dimension: usize,
    /// Dimension of the center, the number of irreducibles.
    pub center_dimension: usize,
    /// Number of one-dimensional representations.
    pub linear_count: usize,
    pub irrep_dimensions: Vec<u64>,
}

fn integer_coeff(s: Scalar) -> Result<i64> {
    match s {
        Scalar::Zero => Ok(0),
        s if s.is_one() => Ok(1),
        _ => Err(Error::Unsupported(
            "rational invariants need 0/1 structure constants".into(),
        )),
    }
}

/// Center dimension, abelianization dimension and irreducible degrees of
/// the underlying algebra, computed over `Q` from the multiplication table.
/// Requires structure constants in `{0, 1}`.
pub fn algebra_irrep_dimensions(h: &HopfStructureConstants) -> Result<AlgebraInvariants> {
    let n = h.dim;
    let mut prod = vec![vec![0i64; n]; n * n];
    for (ij, terms) in h.mult.iter().enumerate() {
        for &(k, s) in terms {
            prod[ij][k] += integer_coeff(s)?;
        }
    }
    let comm = |i: usize, j: usize| -> Vec<i64> { (0..n).map(|k| prod[i * n + j][k] - prod[j * n + i][k]).collect() };

    // z ↦ ([z, e_j])_j; rows indexed by (j, k), columns by the coordinate of z.
    let mut rows = Vec::new();
    for j in 0..n {
        let cols: Vec<Vec<i64>> = (0..n).map(|i| comm(i, j)).collect();
        for k in 0..n {
            let row: Vec<BigRational> = (0..n).map(|i| rational(cols[i][k])).collect();
            if row.iter().any(|x| !x.is_zero()) {
                rows.push(row);
            }
        }
    }
    let center_dimension = n - rank_over_q(rows);

    // Two-sided ideal generated by commutators.
    let mut ideal = RationalSpan::new();
    let mut queue: Vec<Vec<BigRational>> = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let v: Vec<BigRational> = comm(i, j).into_iter().map(rational).collect();
            if ideal.insert(v.clone()) {
                queue.push(v);
            }
        }
    }
    while let Some(v) = queue.pop() {
        if ideal.dim() == n {
            break;
        }
        for b in 0..n {
            let mut left = vec![rational(0); n];
            let mut right = vec![rational(0); n];
            for (i, c) in v.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                for k in 0..n {
                    if prod[b * n + i][k] != 0 {
                        left[k] += c * rational(prod[b * n + i][k]);
                    }
                    if prod[i * n + b][k] != 0 {
                        right[k] += c * rational(prod[i * n + b][k]);
                    }
                }
            }
            for w in [left, right] {
                if ideal.insert(w.clone()) {
                    queue.push(w);
                }
            }
        }
    }
    let linear_count = n - ideal.dim();
    let irrep_dimensions = solve_degrees(n as u64, center_dimension, linear_count)?;
    Ok(AlgebraInvariants {
        dimension: n,
        center_dimension,
        linear_count,
        irrep_dimensions,
    })
}

/// Number of grouplike elements: the one-dimensional representations of
/// the dual.
pub fn grouplike_count(h: &HopfStructureConstants) -> Result<usize> {
    Ok(algebra_irrep_dimensions(&dual_hopf(h))?.linear_count)
}
