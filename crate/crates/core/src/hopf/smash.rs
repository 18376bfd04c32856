use std::sync::Arc;

use super::{require_hopf, HopfStructureConstants, LinComb};
use crate::cyclotomic::Scalar;
use crate::error::{Error, Result};
use crate::group::{validate_matched_pair, FiniteGroup, GroupTag, MatchedPair, TriplePresentation};
use crate::numbers::{element_of_order, is_prime};

/// `k^Γ # k[F]` in the basis `e_g # x`, index `g * |F| + x`:
///
/// `(e_g#x)(e_h#y) = δ_{g◁x,h} e_g#xy`,
/// `Δ(e_g#x) = Σ_{st=g} e_s#(t▷x) ⊗ e_t#x`,
/// `S(e_g#x) = e_{(g◁x)^-1} # (g▷x)^-1`.
///
/// The axioms are checked before returning.
pub fn smash_product(mp: &MatchedPair) -> Result<HopfStructureConstants> {
    validate_matched_pair(mp).into_result()?;
    let h = smash_tables(mp);
    require_hopf(&h)?;
    Ok(h)
}

pub(super) fn smash_tables(mp: &MatchedPair) -> HopfStructureConstants {
    let (gamma, f) = (&mp.gamma, &mp.f);
    let (ng, nf) = (gamma.order(), f.order());
    let dim = ng * nf;
    let idx = |g: usize, x: usize| g * nf + x;

    let mut mult: Vec<LinComb> = vec![Vec::new(); dim * dim];
    for g in 0..ng {
        for x in 0..nf {
            let h = mp.triangle_left(g, x);
            for y in 0..nf {
                mult[idx(g, x) * dim + idx(h, y)] = vec![(idx(g, f.mul(x, y)), Scalar::ONE)];
            }
        }
    }

    let mut comult = vec![Vec::new(); dim];
    for s in 0..ng {
        for t in 0..ng {
            let g = gamma.mul(s, t);
            for x in 0..nf {
                comult[idx(g, x)].push((idx(s, mp.triangle_right(t, x)), idx(t, x), Scalar::ONE));
            }
        }
    }

    let unit = (0..ng).map(|g| (idx(g, 0), Scalar::ONE)).collect();
    let counit = (0..dim)
        .map(|i| if i / nf == 0 { Scalar::ONE } else { Scalar::Zero })
        .collect();
    let antipode = (0..dim)
        .map(|i| {
            let (g, x) = (i / nf, i % nf);
            let s = gamma.inv(mp.triangle_left(g, x));
            let y = f.inv(mp.triangle_right(g, x));
            vec![(idx(s, y), Scalar::ONE)]
        })
        .collect();

    HopfStructureConstants {
        name: format!("k^{} # k[{}]", gamma.name(), f.name()),
        dim,
        labels: (0..dim).map(|i| format!("e{}#{}", i / nf, i % nf)).collect(),
        mult,
        comult,
        unit,
        counit,
        antipode,
        smash: Some(Arc::new(mp.clone())),
    }
    .normalized()
}

/// The matched pair of `A_p(first; second)`: `Γ = Z_p ⋊ Z_first` with
/// `a b a^-1 = b^t` and `F = Z_second` acting by `b ◁ g = b^m`, `a ◁ g = a`,
/// `▷` trivial. `t` and `m` are the least residues of the required orders.
pub fn a_matched_pair(p: u64, first: u64, second: u64) -> Result<MatchedPair> {
    for x in [p, first, second] {
        if !is_prime(x) {
            return Err(Error::NotPrime(x));
        }
    }
    if first == second || !(p - 1).is_multiple_of(first * second) {
        return Err(Error::InvalidParameters(format!(
            "A_{p}({first};{second}) needs {first}·{second} | {p} - 1"
        )));
    }
    let t = element_of_order(first, p)?.value();
    let m = element_of_order(second, p)?.value();
    let pres = TriplePresentation::new(p, first, 1, t, 1, 1)?;
    let gamma = FiniteGroup::from_triple(pres, usize::MAX, GroupTag::Semidirect, format!("Z{p}⋊Z{first}"))?;
    let f = FiniteGroup::cyclic(second as usize)?;
    // m^k for the generator power k = x.
    let mut mpow = vec![1u64; second as usize];
    for k in 1..second as usize {
        mpow[k] = mpow[k - 1] * m % p;
    }
    let fo = first as usize;
    Ok(MatchedPair::from_right_action(f, gamma, |s, x| {
        let (i, j) = (s / fo, s % fo);
        (i * mpow[x] as usize % p as usize) * fo + j
    }))
}

/// `A_p(first; second) = k^{Z_p ⋊ Z_first} # k[Z_second]`.
pub fn build_a(p: u64, first: u64, second: u64) -> Result<HopfStructureConstants> {
    let mp = a_matched_pair(p, first, second)?;
    let mut h = smash_product(&mp)?;
    h.name = format!("A_{p}({first};{second})");
    Ok(h)
}
