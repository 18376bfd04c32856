//! Direct, semidirect and bicrossed products.

use serde::Serialize;

use super::{FiniteGroup, GroupTag};
use crate::error::{Error, Result};

pub fn direct_product(a: &FiniteGroup, b: &FiniteGroup) -> Result<FiniteGroup> {
    let (na, nb) = (a.order(), b.order());
    let n = na * nb;
    let mut t = Vec::with_capacity(n * n);
    for x in 0..n {
        let (xa, xb) = (x / nb, x % nb);
        for y in 0..n {
            let (ya, yb) = (y / nb, y % nb);
            t.push((a.mul(xa, ya) * nb + b.mul(xb, yb)) as u32);
        }
    }
    FiniteGroup::from_table(n, t, GroupTag::Direct, format!("{} x {}", a.name(), b.name()))
}

/// `A ⋊ K` with `action[k * |A| + a] = k·a`; element `(a, k)` has index
/// `a * |K| + k` and `(a, k)(a', k') = (a (k·a'), k k')`.
pub fn semidirect_product(a: &FiniteGroup, k: &FiniteGroup, action: &[u32]) -> Result<FiniteGroup> {
    let (na, nk) = (a.order(), k.order());
    if action.len() != na * nk {
        return Err(Error::NotAnAction("action table has the wrong size".into()));
    }
    let act = |g: usize, x: usize| action[g * na + x] as usize;
    for x in 0..na {
        if act(0, x) != x {
            return Err(Error::NotAnAction("identity does not act trivially".into()));
        }
    }
    for g in 0..nk {
        let mut hit = vec![false; na];
        for x in 0..na {
            let y = act(g, x);
            if y >= na || hit[y] {
                return Err(Error::NotAnAction(format!("element {g} does not act bijectively")));
            }
            hit[y] = true;
            for x2 in 0..na {
                if act(g, a.mul(x, x2)) != a.mul(y, act(g, x2)) {
                    return Err(Error::NotAnAction(format!(
                        "element {g} is not a homomorphism at ({x}, {x2})"
                    )));
                }
            }
        }
        for h in 0..nk {
            let gh = k.mul(g, h);
            if (0..na).any(|x| act(gh, x) != act(g, act(h, x))) {
                return Err(Error::NotAnAction(format!("not compatible at ({g}, {h})")));
            }
        }
    }
    let n = na * nk;
    let mut t = Vec::with_capacity(n * n);
    for x in 0..n {
        let (xa, xk) = (x / nk, x % nk);
        for y in 0..n {
            let (ya, yk) = (y / nk, y % nk);
            t.push((a.mul(xa, act(xk, ya)) * nk + k.mul(xk, yk)) as u32);
        }
    }
    FiniteGroup::from_table(n, t, GroupTag::Semidirect, format!("{} x| {}", a.name(), k.name()))
}

/// Two groups `F`, `Γ` with actions `◁: Γ × F → Γ` and `▷: Γ × F → F`.
///
/// Tables are indexed `s * |F| + x` for `s ∈ Γ`, `x ∈ F`.
#[derive(Debug, Clone)]
pub struct MatchedPair {
    pub f: FiniteGroup,
    pub gamma: FiniteGroup,
    /// `s ◁ x ∈ Γ`
    pub left: Vec<u32>,
    /// `s ▷ x ∈ F`
    pub right: Vec<u32>,
}

impl MatchedPair {
    /// Pair where `F` acts on `Γ` by automorphisms through `◁` and `▷` is
    /// trivial. `action(s, x)` must return `s ◁ x`.
    pub fn from_right_action(f: FiniteGroup, gamma: FiniteGroup, action: impl Fn(usize, usize) -> usize) -> Self {
        let (nf, ng) = (f.order(), gamma.order());
        let mut left = Vec::with_capacity(nf * ng);
        let mut right = Vec::with_capacity(nf * ng);
        for s in 0..ng {
            for x in 0..nf {
                left.push(action(s, x) as u32);
                right.push(x as u32);
            }
        }
        Self { f, gamma, left, right }
    }

    pub fn trivial(f: FiniteGroup, gamma: FiniteGroup) -> Self {
        Self::from_right_action(f, gamma, |s, _| s)
    }

    #[inline]
    pub fn triangle_left(&self, s: usize, x: usize) -> usize {
        self.left[s * self.f.order() + x] as usize
    }

    #[inline]
    pub fn triangle_right(&self, s: usize, x: usize) -> usize {
        self.right[s * self.f.order() + x] as usize
    }

    pub fn right_is_trivial(&self) -> bool {
        let nf = self.f.order();
        self.right.iter().enumerate().all(|(i, &y)| y as usize == i % nf)
    }

    /// The same data with the roles of the two groups exchanged.
    pub fn swapped(&self) -> MatchedPair {
        let (nf, ng) = (self.f.order(), self.gamma.order());
        let mut left = vec![0u32; nf * ng];
        let mut right = vec![0u32; nf * ng];
        for s in 0..ng {
            for x in 0..nf {
                left[x * ng + s] = self.triangle_right(s, x) as u32;
                right[x * ng + s] = self.triangle_left(s, x) as u32;
            }
        }
        MatchedPair {
            f: self.gamma.clone(),
            gamma: self.f.clone(),
            left,
            right,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MatchedPairReport {
    pub valid: bool,
    pub checked: usize,
    pub first_violation: Option<String>,
}

impl MatchedPairReport {
    pub fn into_result(self) -> Result<()> {
        match self.first_violation {
            None => Ok(()),
            Some(v) => Err(Error::InvalidMatchedPair(v)),
        }
    }
}

/// Checks the unit laws, the two action laws and the two compatibility
/// conditions `s▷(xy) = (s▷x)((s◁x)▷y)` and `(st)◁x = (s◁(t▷x))(t◁x)`.
pub fn validate_matched_pair(mp: &MatchedPair) -> MatchedPairReport {
    let (f, g) = (&mp.f, &mp.gamma);
    let (nf, ng) = (f.order(), g.order());
    let mut checked = 0usize;
    let fail = |checked, msg: String| MatchedPairReport {
        valid: false,
        checked,
        first_violation: Some(msg),
    };
    if mp.left.len() != nf * ng || mp.right.len() != nf * ng {
        return fail(0, "action tables have the wrong size".into());
    }
    if mp.left.iter().any(|&s| s as usize >= ng) || mp.right.iter().any(|&x| x as usize >= nf) {
        return fail(0, "action value out of range".into());
    }
    let lt = |s, x| mp.triangle_left(s, x);
    let rt = |s, x| mp.triangle_right(s, x);
    for x in 0..nf {
        checked += 2;
        if lt(0, x) != 0 {
            return fail(checked, format!("e ◁ {x} != e"));
        }
        if rt(0, x) != x {
            return fail(checked, format!("e ▷ {x} != {x}"));
        }
    }
    for s in 0..ng {
        checked += 2;
        if lt(s, 0) != s {
            return fail(checked, format!("{s} ◁ e != {s}"));
        }
        if rt(s, 0) != 0 {
            return fail(checked, format!("{s} ▷ e != e"));
        }
    }
    for s in 0..ng {
        for x in 0..nf {
            for y in 0..nf {
                checked += 2;
                if lt(lt(s, x), y) != lt(s, f.mul(x, y)) {
                    return fail(checked, format!("({s} ◁ {x}) ◁ {y} != {s} ◁ ({x}{y})"));
                }
                let lhs = rt(s, f.mul(x, y));
                let rhs = f.mul(rt(s, x), rt(lt(s, x), y));
                if lhs != rhs {
                    return fail(checked, format!("{s} ▷ ({x}·{y}) = {lhs} but (s▷x)((s◁x)▷y) = {rhs}"));
                }
            }
        }
    }
    for s in 0..ng {
        for t in 0..ng {
            for x in 0..nf {
                checked += 2;
                if rt(s, rt(t, x)) != rt(g.mul(s, t), x) {
                    return fail(checked, format!("{s} ▷ ({t} ▷ {x}) != ({s}{t}) ▷ {x}"));
                }
                let lhs = lt(g.mul(s, t), x);
                let rhs = g.mul(lt(s, rt(t, x)), lt(t, x));
                if lhs != rhs {
                    return fail(checked, format!("({s}·{t}) ◁ {x} = {lhs} but (s◁(t▷x))(t◁x) = {rhs}"));
                }
            }
        }
    }
    MatchedPairReport {
        valid: true,
        checked,
        first_violation: None,
    }
}

/// The group `F ⋈ Γ` on `F × Γ` with `(x, s)(y, t) = (x(s▷y), (s◁y)t)`;
/// `(x, s)` has index `x * |Γ| + s`.
pub fn bicrossed_product(mp: &MatchedPair) -> Result<FiniteGroup> {
    validate_matched_pair(mp).into_result()?;
    let (nf, ng) = (mp.f.order(), mp.gamma.order());
    let n = nf * ng;
    let mut t = Vec::with_capacity(n * n);
    for a in 0..n {
        let (x, s) = (a / ng, a % ng);
        for b in 0..n {
            let (y, u) = (b / ng, b % ng);
            let first = mp.f.mul(x, mp.triangle_right(s, y));
            let second = mp.gamma.mul(mp.triangle_left(s, y), u);
            t.push((first * ng + second) as u32);
        }
    }
    FiniteGroup::from_table(
        n,
        t,
        GroupTag::Bicrossed,
        format!("{} |x| {}", mp.f.name(), mp.gamma.name()),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{is_isomorphic, TriplePresentation};

    fn nonabelian_21() -> FiniteGroup {
        let pres = TriplePresentation::new(7, 3, 1, 2, 1, 1).unwrap();
        FiniteGroup::from_triple(pres, 5000, GroupTag::Table, "Z7:Z3").unwrap()
    }

    #[test]
    fn semidirect_trivial_action_is_direct() {
        let a = FiniteGroup::cyclic(5).unwrap();
        let k = FiniteGroup::cyclic(3).unwrap();
        let action: Vec<u32> = (0..3).flat_map(|_| 0..5u32).collect();
        let sd = semidirect_product(&a, &k, &action).unwrap();
        let dp = direct_product(&a, &k).unwrap();
        assert!(is_isomorphic(&sd, &dp).unwrap().is_some());
        assert!(sd.is_abelian());
    }

    #[test]
    fn semidirect_order_21() {
        let a = FiniteGroup::cyclic(7).unwrap();
        let k = FiniteGroup::cyclic(3).unwrap();
        // k acts by multiplication by 2^k.
        let action: Vec<u32> = (0..3u32)
            .flat_map(|g| (0..7u32).map(move |x| x * 2u32.pow(g) % 7))
            .collect();
        let sd = semidirect_product(&a, &k, &action).unwrap();
        assert!(!sd.is_abelian());
        assert!(is_isomorphic(&sd, &nonabelian_21()).unwrap().is_some());
    }

    #[test]
    fn semidirect_rejects_non_automorphism() {
        let a = FiniteGroup::cyclic(7).unwrap();
        let k = FiniteGroup::cyclic(3).unwrap();
        // x -> x + 1 is not a homomorphism.
        let action: Vec<u32> = (0..3u32)
            .flat_map(|g| (0..7u32).map(move |x| if g == 0 { x } else { (x + g) % 7 }))
            .collect();
        assert!(matches!(
            semidirect_product(&a, &k, &action),
            Err(Error::NotAnAction(_))
        ));
    }

    #[test]
    fn bicrossed_with_trivial_actions_is_direct() {
        let f = FiniteGroup::cyclic(3).unwrap();
        let g = nonabelian_21();
        let mp = MatchedPair::trivial(f.clone(), g.clone());
        assert!(validate_matched_pair(&mp).valid);
        let b = bicrossed_product(&mp).unwrap();
        assert_eq!(b.order(), 63);
        assert!(is_isomorphic(&b, &direct_product(&f, &g).unwrap()).unwrap().is_some());
    }

    #[test]
    fn bicrossed_with_trivial_right_action_is_semidirect() {
        // Z3 acting on Z7 by x -> 2x (right action s ◁ g = 2^g s).
        let f = FiniteGroup::cyclic(3).unwrap();
        let gamma = FiniteGroup::cyclic(7).unwrap();
        let mp = MatchedPair::from_right_action(f.clone(), gamma.clone(), |s, x| s * 2usize.pow(x as u32) % 7);
        let b = bicrossed_product(&mp).unwrap();
        let action: Vec<u32> = (0..3u32)
            .flat_map(|g| (0..7u32).map(move |x| x * 4u32.pow(g) % 7))
            .collect();
        let sd = semidirect_product(&gamma, &f, &action).unwrap();
        assert!(is_isomorphic(&b, &sd).unwrap().is_some());
    }
}
