//! Exact roots of unity and sums of them.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::numbers::{divisors, gcd_u64, lcm_u64};

/// `e^{2πi num/den}` with `num/den` reduced into `[0, 1)`, or zero.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Scalar {
    Zero,
    Root { num: u64, den: u64 },
}

impl Scalar {
    pub const ONE: Scalar = Scalar::Root { num: 0, den: 1 };

    pub fn root(num: i64, den: u64) -> Self {
        assert!(den > 0, "denominator must be positive");
        let n = num.rem_euclid(den as i64) as u64;
        let g = gcd_u64(n, den);
        Scalar::Root {
            num: n / g,
            den: den / g,
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Scalar::Zero)
    }

    pub fn is_one(&self) -> bool {
        *self == Self::ONE
    }

    #[allow(clippy::should_implement_trait)]
    pub fn mul(self, other: Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Root { num: 0, .. }, x) | (x, Scalar::Root { num: 0, .. }) => x,
            (Scalar::Root { num: a, den: b }, Scalar::Root { num: c, den: d }) => {
                let l = lcm_u64(b, d);
                Scalar::root((a * (l / b) + c * (l / d)) as i64, l)
            }
            _ => Scalar::Zero,
        }
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(self) -> Option<Scalar> {
        match self {
            Scalar::Zero => None,
            Scalar::Root { num, den } => Some(Scalar::root(-(num as i64), den)),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Zero => write!(f, "0"),
            Scalar::Root { num, den } => write!(f, "{num}/{den}"),
        }
    }
}

/// An element of `Z[ζ_D]`, stored as integer multiplicities of the powers
/// `ζ_D^k`. Equality is decided after reduction modulo `Φ_D`.
#[derive(Debug, Clone, Default)]
pub struct Cyclotomic {
    terms: BTreeMap<(u64, u64), i64>,
}

impl Cyclotomic {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_scalar(s: Scalar) -> Self {
        let mut c = Self::zero();
        c.add_scalar(s, 1);
        c
    }

    /// Adds `k · s`.
    pub fn add_scalar(&mut self, s: Scalar, k: i64) {
        if let Scalar::Root { num, den } = s {
            let e = self.terms.entry((num, den)).or_insert(0);
            *e += k;
            if *e == 0 {
                self.terms.remove(&(num, den));
            }
        }
    }

    pub fn add(&mut self, other: &Cyclotomic) {
        for (&(num, den), &k) in &other.terms {
            self.add_scalar(Scalar::Root { num, den }, k);
        }
    }

    pub fn sub(&mut self, other: &Cyclotomic) {
        for (&(num, den), &k) in &other.terms {
            self.add_scalar(Scalar::Root { num, den }, -k);
        }
    }

    /// Multiplication by a root of unity.
    pub fn times(&self, s: Scalar) -> Cyclotomic {
        let mut out = Cyclotomic::zero();
        for (&(num, den), &k) in &self.terms {
            out.add_scalar(Scalar::Root { num, den }.mul(s), k);
        }
        out
    }

    pub fn mul(&self, other: &Cyclotomic) -> Cyclotomic {
        let mut out = Cyclotomic::zero();
        for (&(n1, d1), &k1) in &self.terms {
            for (&(n2, d2), &k2) in &other.terms {
                out.add_scalar(
                    Scalar::Root { num: n1, den: d1 }.mul(Scalar::Root { num: n2, den: d2 }),
                    k1 * k2,
                );
            }
        }
        out
    }

    /// The value as an integer, if it is one.
    pub fn as_integer(&self) -> Option<i64> {
        let (_, poly) = self.reduced();
        poly[1..].iter().all(|&c| c == 0).then_some(poly[0])
    }

    fn common_order(&self) -> u64 {
        self.terms.keys().fold(1, |acc, &(_, d)| lcm_u64(acc, d))
    }

    /// Coefficients modulo `Φ_D` (degree below `φ(D)`).
    pub fn reduced(&self) -> (u64, Vec<i64>) {
        let d = self.common_order();
        let mut poly = vec![0i64; d as usize];
        for (&(num, den), &k) in &self.terms {
            poly[(num * (d / den)) as usize] += k;
        }
        let phi = cyclotomic_polynomial(d);
        let deg = phi.len() - 1;
        for i in (deg..poly.len()).rev() {
            let c = poly[i];
            if c != 0 {
                for (j, &pc) in phi.iter().enumerate() {
                    poly[i - deg + j] -= c * pc;
                }
            }
        }
        poly.truncate(deg.max(1));
        (d, poly)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty() || self.reduced().1.iter().all(|&c| c == 0)
    }
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        let mut diff = self.clone();
        diff.sub(other);
        diff.is_zero()
    }
}

/// Integer coefficients of `Φ_n`, lowest degree first.
pub fn cyclotomic_polynomial(n: u64) -> Vec<i64> {
    // x^n - 1 divided by Φ_d for every proper divisor d.
    let mut poly = vec![0i64; n as usize + 1];
    poly[0] = -1;
    poly[n as usize] = 1;
    for d in divisors(n) {
        if d == n {
            continue;
        }
        poly = divide_monic(&poly, &cyclotomic_polynomial(d));
    }
    poly
}

fn divide_monic(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let qd = num.len() - 1 - dd;
    let mut q = vec![0i64; qd + 1];
    for i in (0..=qd).rev() {
        let c = rem[i + dd];
        q[i] = c;
        for (j, &dc) in den.iter().enumerate() {
            rem[i + j] -= c * dc;
        }
    }
    debug_assert!(rem.iter().all(|&x| x == 0), "inexact cyclotomic division");
    q
}
