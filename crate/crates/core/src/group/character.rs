//! Character groups of finite abelian groups.

use super::{abelian_invariants, FiniteGroup, GroupTag, Subgroup};
use crate::error::{Error, Result};
use crate::numbers::{gcd_u64, lcm_u64};

/// The dual `Ĥ = Hom(H, Q/Z)` of an abelian group `H`.
///
/// `H` is decomposed as `⊕ <h_i>` with `h_i` of order `d_i`; a character
/// `ρ` is the tuple `(c_i)` with `ρ(h_i) = c_i / d_i`, indexed in mixed
/// radix (last coordinate fastest).
#[derive(Debug, Clone)]
pub struct CharacterGroup {
    dual: FiniteGroup,
    basis: Vec<usize>,
    orders: Vec<u64>,
    exponent: u64,
    /// Coordinates of each element of `H` in the basis.
    coords: Vec<Vec<u64>>,
}

impl CharacterGroup {
    pub fn new(h: &FiniteGroup) -> Result<Self> {
        if !h.is_abelian() {
            return Err(Error::NotAbelian);
        }
        let mut orders = abelian_invariants(h);
        orders.reverse();
        // Greedy basis, largest order first.
        let mut basis = Vec::new();
        let mut span = vec![0usize];
        for &d in &orders {
            let x = h
                .elements()
                .find(|&x| {
                    h.element_order(x) as u64 == d && {
                        let mut gens = basis.clone();
                        gens.push(x);
                        h.closure(&gens).len() == span.len() * d as usize
                    }
                })
                .ok_or_else(|| Error::Consistency("no independent basis element".into()))?;
            basis.push(x);
            span = h.closure(&basis);
        }
        let mut coords = vec![Vec::new(); h.order()];
        let mut index = vec![0u64; basis.len()];
        loop {
            let mut x = 0usize;
            for (i, &b) in basis.iter().enumerate() {
                x = h.mul(x, h.pow(b, index[i]));
            }
            coords[x] = index.clone();
            if !advance(&mut index, &orders) {
                break;
            }
        }
        let exponent = orders.iter().fold(1, |a, &d| lcm_u64(a, d));
        let n: usize = orders.iter().product::<u64>() as usize;
        let mut table = Vec::with_capacity(n * n);
        for a in 0..n {
            let ca = unrank(a, &orders);
            for b in 0..n {
                let cb = unrank(b, &orders);
                let sum: Vec<u64> = ca.iter().zip(&cb).zip(&orders).map(|((x, y), d)| (x + y) % d).collect();
                table.push(rank(&sum, &orders) as u32);
            }
        }
        let dual = FiniteGroup::from_table(n, table, GroupTag::Character, format!("dual({})", h.name()))?;
        Ok(Self {
            dual,
            basis,
            orders,
            exponent,
            coords,
        })
    }

    /// `Ĥ` as a group.
    pub fn group(&self) -> &FiniteGroup {
        &self.dual
    }

    pub fn basis(&self) -> &[usize] {
        &self.basis
    }

    pub fn exponent(&self) -> u64 {
        self.exponent
    }

    /// `⟨ρ, g⟩ · exponent`, an integer mod `exponent`.
    pub fn pairing(&self, rho: usize, g: usize) -> u64 {
        let c = unrank(rho, &self.orders);
        c.iter()
            .zip(&self.coords[g])
            .zip(&self.orders)
            .map(|((ci, gi), d)| ci * gi % d * (self.exponent / d))
            .sum::<u64>()
            % self.exponent
    }

    /// `⟨ρ, g⟩` as a reduced fraction `(num, den)` in `[0, 1)`.
    pub fn pairing_fraction(&self, rho: usize, g: usize) -> (u64, u64) {
        let v = self.pairing(rho, g);
        let d = gcd_u64(v, self.exponent);
        (v / d, self.exponent / d)
    }

    /// The character with `⟨ρ, b⟩ = values(b) / exponent` on the basis.
    fn character_from(&self, values: impl Fn(usize) -> u64) -> usize {
        let c: Vec<u64> = self
            .basis
            .iter()
            .zip(&self.orders)
            .map(|(&b, d)| values(b) / (self.exponent / d))
            .collect();
        rank(&c, &self.orders)
    }

    /// Given a left action of `K` on `H` by automorphisms, with
    /// `action[k * |H| + h] = k·h`, the induced left action on `Ĥ`:
    /// `(k·ρ)(h) = ρ(k⁻¹·h)`. Output is indexed `k * |Ĥ| + ρ`.
    pub fn dual_action(&self, k: &FiniteGroup, action: &[u32]) -> Result<Vec<u32>> {
        let nh = self.coords.len();
        if action.len() != k.order() * nh {
            return Err(Error::NotAnAction("action table has the wrong size".into()));
        }
        let n = self.dual.order();
        let mut out = Vec::with_capacity(k.order() * n);
        for g in k.elements() {
            let gi = k.inv(g);
            for rho in 0..n {
                out.push(self.character_from(|h| self.pairing(rho, action[gi * nh + h] as usize)) as u32);
            }
        }
        Ok(out)
    }
}

fn advance(index: &mut [u64], orders: &[u64]) -> bool {
    for i in (0..index.len()).rev() {
        index[i] += 1;
        if index[i] < orders[i] {
            return true;
        }
        index[i] = 0;
    }
    false
}

fn rank(c: &[u64], orders: &[u64]) -> usize {
    c.iter()
        .zip(orders)
        .fold(0, |acc, (x, d)| acc * *d as usize + *x as usize)
}

fn unrank(mut x: usize, orders: &[u64]) -> Vec<u64> {
    let mut c = vec![0u64; orders.len()];
    for i in (0..orders.len()).rev() {
        let d = orders[i] as usize;
        c[i] = (x % d) as u64;
        x /= d;
    }
    c
}

/// Conjugation action of `k_sub` on the normal subgroup `h_sub` of `g`, in
/// subgroup positions: `out[i * |H| + j]` is the position in `H` of
/// `k_i h_j k_i⁻¹`.
pub fn conjugation_action(g: &FiniteGroup, h_sub: &Subgroup, k_sub: &Subgroup) -> Result<Vec<u32>> {
    let mut out = Vec::with_capacity(h_sub.order() * k_sub.order());
    for &k in k_sub.members() {
        for &h in h_sub.members() {
            let y = g.conj(k, h);
            let pos = h_sub
                .position(y)
                .ok_or_else(|| Error::NotASubgroup("conjugation leaves the subgroup".into()))?;
            out.push(pos as u32);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::direct_product;

    #[test]
    fn dual_of_z6() {
        let h = FiniteGroup::cyclic(6).unwrap();
        let chi = CharacterGroup::new(&h).unwrap();
        assert_eq!(chi.group().order(), 6);
        assert_eq!(chi.basis(), &[1]);
        assert_eq!(chi.pairing_fraction(1, 1), (1, 6));
        assert_eq!(chi.pairing_fraction(2, 3), (0, 1));
    }

    #[test]
    fn pairing_is_bilinear_and_perfect() {
        let z2 = FiniteGroup::cyclic(2).unwrap();
        let h = direct_product(&z2, &FiniteGroup::cyclic(6).unwrap()).unwrap();
        let chi = CharacterGroup::new(&h).unwrap();
        let e = chi.exponent();
        let hat = chi.group();
        for a in hat.elements() {
            for b in hat.elements() {
                for g in h.elements() {
                    assert_eq!(
                        chi.pairing(hat.mul(a, b), g),
                        (chi.pairing(a, g) + chi.pairing(b, g)) % e
                    );
                }
            }
            if a != 0 {
                assert!(h.elements().any(|g| chi.pairing(a, g) != 0));
            }
        }
    }

    #[test]
    fn trivial_action_dualizes_to_trivial() {
        let h = FiniteGroup::cyclic(5).unwrap();
        let k = FiniteGroup::cyclic(3).unwrap();
        let action: Vec<u32> = (0..3).flat_map(|_| 0..5u32).collect();
        let chi = CharacterGroup::new(&h).unwrap();
        assert_eq!(chi.dual_action(&k, &action).unwrap(), action);
    }

    #[test]
    fn dual_action_inverts_exponent() {
        // Z3 acting on Z7 by x -> 2x; on characters the generator acts by
        // the inverse 4.
        let h = FiniteGroup::cyclic(7).unwrap();
        let k = FiniteGroup::cyclic(3).unwrap();
        let action: Vec<u32> = (0..3u32)
            .flat_map(|g| (0..7u32).map(move |x| x * 2u32.pow(g) % 7))
            .collect();
        let chi = CharacterGroup::new(&h).unwrap();
        let dual = chi.dual_action(&k, &action).unwrap();
        assert_eq!(dual[7 + 1], 4);
    }

    #[test]
    fn rejects_nonabelian() {
        let g = FiniteGroup::metacyclic(crate::numbers::MetacyclicParams::new(7, 3, 2, 1).unwrap()).unwrap();
        assert_eq!(CharacterGroup::new(&g).unwrap_err(), Error::NotAbelian);
    }
}
