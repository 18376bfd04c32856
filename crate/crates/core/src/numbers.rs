//! Modular arithmetic and the two closed-form group counts used by the
//! catalog: Hölder's count of square-free order groups and the metacyclic
//! multiplier bound `h(m, n, r)`.

use num_integer::Integer;
use serde::Serialize;

use crate::error::{Error, Result};

/// A residue class `value mod modulus`, always stored reduced.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Residue {
    modulus: u64,
    value: u64,
}

impl Residue {
    pub fn new(value: i64, modulus: u64) -> Result<Self> {
        if modulus == 0 {
            return Err(Error::InvalidParameters("modulus must be positive".into()));
        }
        Ok(Self {
            modulus,
            value: value.rem_euclid(modulus as i64) as u64,
        })
    }

    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }
}

/// Parameters of the metacyclic group
/// `<a, b | a^m = 1, b a b^-1 = a^r, b^n = a^(m λ / (m, r-1))>`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct MetacyclicParams {
    pub m: u64,
    pub n: u64,
    pub r: i64,
    pub lambda: i64,
}

impl MetacyclicParams {
    pub fn new(m: u64, n: u64, r: i64, lambda: i64) -> Result<Self> {
        let params = Self { m, n, r, lambda };
        params.validate()?;
        Ok(params)
    }

    pub fn validate(&self) -> Result<()> {
        if self.m == 0 || self.n == 0 {
            return Err(Error::InvalidParameters("m and n must be positive".into()));
        }
        let r = self.r.rem_euclid(self.m as i64) as u64;
        if pow_mod(r, self.n, self.m) != 1 % self.m {
            return Err(Error::InvalidParameters(format!(
                "r^n = {}^{} is not 1 mod {}",
                self.r, self.n, self.m
            )));
        }
        Ok(())
    }

    /// Residue of `r` in `[0, m)`.
    pub fn r_reduced(&self) -> u64 {
        self.r.rem_euclid(self.m as i64) as u64
    }

    /// Exponent `k` with `b^n = a^k`, reduced mod m.
    pub fn power_exponent(&self) -> u64 {
        let g = gcd_u64(self.m, (self.r_reduced() + self.m - 1) % self.m);
        let k = (self.m / g) as i128 * self.lambda as i128;
        k.rem_euclid(self.m as i128) as u64
    }

    pub fn order(&self) -> u64 {
        self.m * self.n
    }
}

/// Row of the order-pqr group count table.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Table1Row {
    pub case: u8,
    pub count: u64,
    pub q_divides_p_minus_1: bool,
    pub r_divides_p_minus_1: bool,
    pub r_divides_q_minus_1: bool,
}

pub fn gcd_u64(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}

pub fn lcm_u64(a: u64, b: u64) -> u64 {
    a.lcm(&b)
}

pub fn pow_mod(base: u64, mut exp: u64, modulus: u64) -> u64 {
    if modulus == 1 {
        return 0;
    }
    let m = modulus as u128;
    let mut acc: u128 = 1;
    let mut b = (base as u128) % m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        exp >>= 1;
    }
    acc as u64
}

/// Inverse of `a` modulo `m`, if it exists.
pub fn mod_inverse(a: u64, m: u64) -> Option<u64> {
    if m == 1 {
        return Some(0);
    }
    let e = (a as i128).extended_gcd(&(m as i128));
    if e.gcd != 1 {
        return None;
    }
    Some(e.x.rem_euclid(m as i128) as u64)
}

/// Trial-division primality test.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Prime factorisation as `(prime, exponent)` pairs, ascending.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            let mut e = 0;
            while n.is_multiple_of(d) {
                n /= d;
                e += 1;
            }
            out.push((d, e));
        }
        d += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn divisors(n: u64) -> Vec<u64> {
    let mut out = vec![1u64];
    for (p, e) in factorize(n) {
        let len = out.len();
        let mut pk = 1;
        for _ in 0..e {
            pk *= p;
            for i in 0..len {
                out.push(out[i] * pk);
            }
        }
    }
    out.sort_unstable();
    out
}

pub fn is_square_free(n: u64) -> bool {
    n > 0 && factorize(n).iter().all(|&(_, e)| e == 1)
}

pub fn is_perfect_square(n: u64) -> bool {
    let s = (n as f64).sqrt() as u64;
    (s.saturating_sub(1)..=s + 1).any(|t| t * t == n)
}

/// Multiplicative order of a unit.
pub fn mult_order(a: Residue) -> Result<u64> {
    if gcd_u64(a.value, a.modulus) != 1 {
        return Err(Error::NotAUnit {
            value: a.value,
            modulus: a.modulus,
        });
    }
    if a.modulus == 1 {
        return Ok(1);
    }
    let mut k = 1u64;
    let mut x = a.value;
    while x != 1 {
        x = ((x as u128 * a.value as u128) % a.modulus as u128) as u64;
        k += 1;
    }
    Ok(k)
}

/// Smallest residue in `[2, p-1]` of multiplicative order exactly `r`
/// (or `1` when `r = 1`).
pub fn element_of_order(r: u64, p: u64) -> Result<Residue> {
    if r == 0 || p < 2 || !(p - 1).is_multiple_of(r) {
        return Err(Error::NoElementOfOrder { order: r, modulus: p });
    }
    if r == 1 {
        return Residue::new(1, p);
    }
    for t in 2..p {
        let res = Residue::new(t as i64, p)?;
        if gcd_u64(t, p) == 1 && mult_order(res)? == r {
            return Ok(res);
        }
    }
    Err(Error::NoElementOfOrder { order: r, modulus: p })
}

/// Number of groups of square-free order `n` (Hölder).
pub fn holder_count(n: u64) -> Result<u64> {
    if !is_square_free(n) {
        return Err(Error::NotSquareFree(n));
    }
    let mut total = 0u64;
    for m in divisors(n) {
        let primes_m: Vec<u64> = factorize(m).into_iter().map(|(p, _)| p).collect();
        let mut prod = 1u64;
        for (p1, _) in factorize(n / m) {
            let c = primes_m.iter().filter(|&&q1| q1 % p1 == 1).count() as u32;
            prod *= (p1.pow(c) - 1) / (p1 - 1);
        }
        total += prod;
    }
    Ok(total)
}

/// `h(m, n, r) = (m, 1 + r + ... + r^(n-1)) (m, r - 1) / m`.
pub fn schur_h(m: u64, n: u64, r: i64) -> Result<u64> {
    let params = MetacyclicParams { m, n, r, lambda: 1 };
    params.validate()?;
    let rr = params.r_reduced();
    let mut geometric = 0u64;
    let mut power = 1 % m;
    for _ in 0..n {
        geometric = (geometric + power) % m;
        power = ((power as u128 * rr as u128) % m as u128) as u64;
    }
    let num = gcd_u64(m, geometric) * gcd_u64(m, (rr + m - 1) % m);
    if !num.is_multiple_of(m) {
        return Err(Error::InvalidParameters(format!("h({m},{n},{r}) is not integral")));
    }
    Ok(num / m)
}

/// Classify `(p, q, r)` into the eight divisibility cases and return the
/// group count of that case.
pub fn table1_case(p: u64, q: u64, r: u64) -> Result<Table1Row> {
    if !(r < q && q < p) {
        return Err(Error::Misordered { p, q, r });
    }
    let qp = (p - 1).is_multiple_of(q);
    let rp = (p - 1).is_multiple_of(r);
    let rq = (q - 1).is_multiple_of(r);
    let case = 1 + 4 * qp as u8 + 2 * rp as u8 + rq as u8;
    let count = match case {
        1 => 1,
        2 | 3 | 5 => 2,
        4 => r + 2,
        6 => 3,
        7 => 4,
        _ => r + 4,
    };
    Ok(Table1Row {
        case,
        count,
        q_divides_p_minus_1: qp,
        r_divides_p_minus_1: rp,
        r_divides_q_minus_1: rq,
    })
}

/// Checks that `r < q < p` are primes.
pub fn check_prime_triple(p: u64, q: u64, r: u64) -> Result<()> {
    for x in [p, q, r] {
        if !is_prime(x) {
            return Err(Error::NotPrime(x));
        }
    }
    if !(r < q && q < p) {
        return Err(Error::Misordered { p, q, r });
    }
    Ok(())
}
