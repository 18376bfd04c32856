//! Structured arithmetic for groups `Z_p ⋊ (Z_q ⋊ Z_r)` written as normal
//! forms `a^i b^j c^k`.
//!
//! Every group of square-free order pqr in the catalog has this shape: `a`
//! generates a normal cyclic subgroup, `b` acts on it by `a ↦ a^u`, `c` acts
//! by `a ↦ a^v` and on `b` by `b ↦ b^w`. Elements are indexed
//! lexicographically, `(i * q + j) * r + k`, so index 0 is the identity.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::numbers::{gcd_u64, pow_mod};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct TriplePresentation {
    pub p: u64,
    pub q: u64,
    pub r: u64,
    /// `b a b^-1 = a^u`
    pub u: u64,
    /// `c a c^-1 = a^v`
    pub v: u64,
    /// `c b c^-1 = b^w`
    pub w: u64,
}

#[derive(Debug, Clone)]
pub(crate) struct TripleArith {
    pub(crate) pres: TriplePresentation,
    upow: Vec<u64>,
    vpow: Vec<u64>,
    wpow: Vec<u64>,
}

impl TriplePresentation {
    pub fn new(p: u64, q: u64, r: u64, u: u64, v: u64, w: u64) -> Result<Self> {
        let pres = Self {
            p,
            q,
            r,
            u: u % p.max(1),
            v: v % p.max(1),
            w: w % q.max(1),
        };
        pres.validate()?;
        Ok(pres)
    }

    pub fn validate(&self) -> Result<()> {
        let Self { p, q, r, u, v, w } = *self;
        if p == 0 || q == 0 || r == 0 {
            return Err(Error::InvalidParameters("cyclic orders must be positive".into()));
        }
        let bad = |msg: String| Err(Error::InvalidParameters(msg));
        if gcd_u64(u, p) != 1 || gcd_u64(v, p) != 1 || gcd_u64(w, q) != 1 {
            return bad(format!("exponents must be units: u={u}, v={v} mod {p}, w={w} mod {q}"));
        }
        if pow_mod(u, q, p) != 1 % p {
            return bad(format!("u^q != 1 mod p (u={u}, q={q}, p={p})"));
        }
        if pow_mod(v, r, p) != 1 % p {
            return bad(format!("v^r != 1 mod p (v={v}, r={r}, p={p})"));
        }
        if pow_mod(w, r, q) != 1 % q {
            return bad(format!("w^r != 1 mod q (w={w}, r={r}, q={q})"));
        }
        // c b c^-1 = b^w must act on <a> like b does.
        if pow_mod(u, w, p) != u % p {
            return bad(format!("u^w != u mod p (u={u}, w={w}, p={p})"));
        }
        Ok(())
    }

    pub fn order(&self) -> u64 {
        self.p * self.q * self.r
    }

    pub fn index(&self, i: u64, j: u64, k: u64) -> usize {
        ((i % self.p * self.q + j % self.q) * self.r + k % self.r) as usize
    }

    pub fn coords(&self, x: usize) -> (u64, u64, u64) {
        let x = x as u64;
        let k = x % self.r;
        let j = (x / self.r) % self.q;
        let i = x / (self.r * self.q);
        (i, j, k)
    }

    /// Indices of the generators `a`, `b`, `c`.
    pub fn generator_indices(&self) -> [usize; 3] {
        [self.index(1, 0, 0), self.index(0, 1, 0), self.index(0, 0, 1)]
    }
}

impl TripleArith {
    pub(crate) fn new(pres: TriplePresentation) -> Self {
        let powers = |base: u64, count: u64, modulus: u64| {
            let mut out = Vec::with_capacity(count as usize);
            let mut x = 1 % modulus;
            for _ in 0..count {
                out.push(x);
                x = x * base % modulus;
            }
            out
        };
        let upow = powers(pres.u, pres.q, pres.p);
        let vpow = powers(pres.v, pres.r, pres.p);
        let wpow = powers(pres.w, pres.r, pres.q);
        Self { pres, upow, vpow, wpow }
    }

    pub(crate) fn mul(&self, x: usize, y: usize) -> usize {
        let pr = &self.pres;
        let (i, j, k) = pr.coords(x);
        let (i2, j2, k2) = pr.coords(y);
        let twist = self.upow[j as usize] * self.vpow[k as usize] % pr.p;
        let ni = (i + i2 * twist) % pr.p;
        let nj = (j + j2 * self.wpow[k as usize]) % pr.q;
        let nk = (k + k2) % pr.r;
        pr.index(ni, nj, nk)
    }

    pub(crate) fn inv(&self, x: usize) -> usize {
        let pr = &self.pres;
        let (i, j, k) = pr.coords(x);
        let k2 = (pr.r - k) % pr.r;
        // j + j2 w^k = 0  =>  j2 = -j w^(r-k)
        let j2 = (pr.q - j * self.wpow[k2 as usize] % pr.q) % pr.q;
        // i + i2 u^j2... solve with the twist of x: i + i2 * u^j v^k = 0
        let u_inv = self.upow[((pr.q - j) % pr.q) as usize];
        let v_inv = self.vpow[k2 as usize];
        let i2 = (pr.p - i * u_inv % pr.p * v_inv % pr.p) % pr.p;
        pr.index(i2, j2, k2)
    }
}
