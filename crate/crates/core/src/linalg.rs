//! Exact linear algebra: Smith normal form over `Z/p^e` and ranks over `Q`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::numbers::mod_inverse;

/// Dense row-major matrix over `Z/p^e`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModMatrix {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<u64>,
}

impl ModMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    pub fn from_rows(cols: usize, rows: &[Vec<u64>]) -> Self {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged matrix");
            data.extend_from_slice(r);
        }
        Self {
            rows: rows.len(),
            cols,
            data,
        }
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.data[i * self.cols + j]
    }

    #[inline]
    fn set(&mut self, i: usize, j: usize, v: u64) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[u64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    /// `self · x` modulo `modulus`.
    pub fn apply(&self, x: &[u64], modulus: u64) -> Vec<u64> {
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(x)
                    .fold(0u128, |acc, (&a, &b)| (acc + a as u128 * b as u128) % modulus as u128) as u64
            })
            .collect()
    }
}

/// Smith form `A V = U⁻¹ D` over `Z/p^e` with column transform `V` tracked.
///
/// `valuations[i]` is `v_p` of the i-th diagonal entry, or `e` for a zero
/// column. The same numbers describe the kernel of `A` (a direct sum of
/// `Z/p^{valuations[i]}` along the columns of `V`) and the cokernel of a
/// relation matrix.
#[derive(Debug, Clone)]
pub struct LocalSnf {
    pub prime: u64,
    pub exponent: u32,
    pub modulus: u64,
    pub valuations: Vec<u32>,
    pub v: ModMatrix,
    pub v_inv: ModMatrix,
}

fn valuation(x: u64, p: u64, cap: u32) -> u32 {
    if x == 0 {
        return cap;
    }
    let mut v = 0;
    let mut y = x;
    while y.is_multiple_of(p) {
        y /= p;
        v += 1;
    }
    v.min(cap)
}

impl LocalSnf {
    /// Reduces `a` (entries taken mod `p^e`).
    pub fn compute(a: &ModMatrix, p: u64, e: u32) -> Self {
        let m = p.pow(e);
        let mut a = a.clone();
        a.data.iter_mut().for_each(|x| *x %= m);
        let n = a.cols;
        let mut v = ModMatrix::identity(n);
        let mut v_inv = ModMatrix::identity(n);
        let mut valuations = vec![e; n];
        let mulm = |x: u64, y: u64| ((x as u128 * y as u128) % m as u128) as u64;
        let mut live: Vec<usize> = (0..a.rows).filter(|&i| a.row(i).iter().any(|&x| x != 0)).collect();
        for k in 0..n.min(a.rows) {
            // Pivot of minimal valuation among live rows and columns >= k.
            let mut best: Option<(u32, usize, usize)> = None;
            'scan: for &i in &live {
                for j in k..n {
                    let x = a.get(i, j);
                    if x != 0 {
                        let val = valuation(x, p, e);
                        if best.is_none_or(|b| val < b.0) {
                            best = Some((val, i, j));
                            if val == 0 {
                                break 'scan;
                            }
                        }
                    }
                }
            }
            let Some((val, pi, pj)) = best else { break };
            if pj != k {
                for i in 0..a.rows {
                    a.data.swap(i * n + pj, i * n + k);
                }
                for i in 0..n {
                    v.data.swap(i * n + pj, i * n + k);
                }
                for c in 0..n {
                    v_inv.data.swap(pj * n + c, k * n + c);
                }
            }
            // Normalise the pivot to p^val by scaling column k by a unit.
            let pv = p.pow(val);
            let unit = a.get(pi, k) / pv;
            let unit_inv = mod_inverse(unit % m, m).expect("unit part is invertible");
            for i in 0..a.rows {
                let x = a.get(i, k);
                a.set(i, k, mulm(x, unit_inv));
            }
            for i in 0..n {
                let x = v.get(i, k);
                v.set(i, k, mulm(x, unit_inv));
            }
            for j in 0..n {
                let x = v_inv.get(k, j);
                v_inv.set(k, j, mulm(x, unit));
            }
            // Clear column k in the other rows.
            let pivot_row: Vec<u64> = a.row(pi).to_vec();
            for &i in &live {
                if i == pi {
                    continue;
                }
                let x = a.get(i, k);
                if x == 0 {
                    continue;
                }
                let factor = x / pv;
                for j in k..n {
                    let y = a.get(i, j);
                    let sub = mulm(factor, pivot_row[j]);
                    a.set(i, j, (y + m - sub) % m);
                }
            }
            // Clear row pi in the other columns; only V, V⁻¹ need updating
            // since column k is otherwise zero.
            for j in k + 1..n {
                let x = a.get(pi, j);
                if x == 0 {
                    continue;
                }
                let factor = x / pv;
                a.set(pi, j, 0);
                for i in 0..n {
                    let vk = v.get(i, k);
                    let y = v.get(i, j);
                    v.set(i, j, (y + m - mulm(factor, vk)) % m);
                }
                for c in 0..n {
                    let vj = v_inv.get(j, c);
                    let y = v_inv.get(k, c);
                    v_inv.set(k, c, (y + mulm(factor, vj)) % m);
                }
            }
            valuations[k] = val;
            live.retain(|&i| i != pi && a.row(i)[k..].iter().any(|&x| x != 0));
        }
        Self {
            prime: p,
            exponent: e,
            modulus: m,
            valuations,
            v,
            v_inv,
        }
    }

    /// Generators of the kernel `{x : A x = 0}` with their orders `p^a`;
    /// components of order 1 are omitted.
    pub fn kernel_generators(&self) -> Vec<(Vec<u64>, u32)> {
        let n = self.valuations.len();
        let mut out = Vec::new();
        for (i, &a) in self.valuations.iter().enumerate() {
            if a == 0 {
                continue;
            }
            let scale = self.prime.pow(self.exponent - a);
            let col: Vec<u64> = (0..n).map(|r| self.v.get(r, i) * scale % self.modulus).collect();
            out.push((col, a));
        }
        out
    }

    /// Coordinates of a kernel vector along [`Self::kernel_generators`].
    pub fn kernel_coordinates(&self, x: &[u64]) -> Vec<u64> {
        let y = self.v_inv.apply(x, self.modulus);
        self.valuations
            .iter()
            .enumerate()
            .filter(|(_, &a)| a > 0)
            .map(|(i, &a)| {
                let scale = self.prime.pow(self.exponent - a);
                debug_assert_eq!(y[i] % scale, 0, "vector is not in the kernel");
                y[i] / scale % self.prime.pow(a)
            })
            .collect()
    }
}

/// Rank of a rational matrix by fraction-exact Gaussian elimination.
pub fn rank_over_q(mut rows: Vec<Vec<BigRational>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let inv = BigRational::one() / rows[rank][c].clone();
        let pivot: Vec<BigRational> = rows[rank].iter().map(|x| x * &inv).collect();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == rank || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, y) in row.iter_mut().zip(&pivot).skip(c) {
                *x -= &f * y;
            }
        }
        rows[rank] = pivot;
        rank += 1;
    }
    rank
}

/// An incrementally grown row-reduced basis of a subspace of `Q^n`.
#[derive(Debug, Clone, Default)]
pub struct RationalSpan {
    basis: Vec<(usize, Vec<BigRational>)>,
}

impl RationalSpan {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn vectors(&self) -> impl Iterator<Item = &Vec<BigRational>> {
        self.basis.iter().map(|(_, v)| v)
    }

    /// Adds `v`; returns whether the span grew.
    pub fn insert(&mut self, mut v: Vec<BigRational>) -> bool {
        for (pivot, b) in &self.basis {
            if !v[*pivot].is_zero() {
                let f = v[*pivot].clone();
                for (x, y) in v.iter_mut().zip(b) {
                    *x -= &f * y;
                }
            }
        }
        let Some(pivot) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = BigRational::one() / v[pivot].clone();
        v.iter_mut().for_each(|x| *x *= &inv);
        for (_, b) in self.basis.iter_mut() {
            if !b[pivot].is_zero() {
                let f = b[pivot].clone();
                for (x, y) in b.iter_mut().zip(&v) {
                    *x -= &f * y;
                }
            }
        }
        self.basis.push((pivot, v));
        true
    }
}

pub fn rational(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}
