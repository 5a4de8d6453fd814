use std::sync::Arc;

use super::HopfPresentation;
use crate::error::Result;
use crate::ncengine::{NCElement, Presentation, TensorElement};
use crate::outcome::Outcome;

/// Polynomial words of total degree `1..=d` in tower order.
pub fn test_monomials(p: &Arc<Presentation>, d: u32) -> Result<Vec<NCElement>> {
    let gens = p.generators();
    let mut exps: Vec<Vec<u32>> = vec![vec![]];
    for _ in &gens {
        exps = exps
            .into_iter()
            .flat_map(|e| {
                let used: u32 = e.iter().sum();
                (0..=d - used).map(move |k| {
                    let mut e2 = e.clone();
                    e2.push(k);
                    e2
                })
            })
            .collect();
    }
    exps.sort_by_key(|e| (e.iter().sum::<u32>(), std::cmp::Reverse(e.clone())));
    let mut out = Vec::new();
    for e in exps.into_iter().filter(|e| e.iter().sum::<u32>() > 0) {
        let word: Vec<(&str, u32)> = gens.iter().zip(&e).map(|(g, k)| (g.name(), *k)).collect();
        out.push(NCElement::word(p, &word)?);
    }
    Ok(out)
}

fn first_failure(
    items: &[NCElement],
    f: impl Fn(&NCElement) -> Result<(TensorElement, TensorElement)>,
) -> Result<Outcome> {
    for x in items {
        let (l, r) = f(x)?;
        if l != r {
            return Ok(Outcome::fail(x.to_string(), &l - &r));
        }
    }
    Ok(Outcome::Pass)
}

/// `(Δ⊗id)Δ = (id⊗Δ)Δ` on every word of degree ≤ `d`.
pub fn check_coassociativity(h: &HopfPresentation, d: u32) -> Result<Outcome> {
    let delta = h.coproduct();
    let sq = [h.algebra().clone(), h.algebra().clone()];
    first_failure(&test_monomials(h.algebra(), d)?, |x| {
        let dx = delta.apply(x)?;
        Ok((dx.map_leg(0, &sq, &|m| delta.apply(m))?, dx.map_leg(1, &sq, &|m| delta.apply(m))?))
    })
}

/// `(ε⊗id)Δ = id = (id⊗ε)Δ`.
pub fn check_counit(h: &HopfPresentation, d: u32) -> Result<Outcome> {
    let (delta, eps) = (h.coproduct(), h.counit());
    let items = test_monomials(h.algebra(), d)?;
    let left = first_failure(&items, |x| {
        Ok((delta.apply(x)?.map_leg(0, &[], &|m| eps.apply(m))?, TensorElement::from_element(x)))
    })?;
    let right = first_failure(&items, |x| {
        Ok((delta.apply(x)?.map_leg(1, &[], &|m| eps.apply(m))?, TensorElement::from_element(x)))
    })?;
    Ok(left.and(right))
}

/// `m(γ⊗id)Δ = ε·1 = m(id⊗γ)Δ`.
pub fn check_antipode(h: &HopfPresentation, d: u32) -> Result<Outcome> {
    let (delta, eps, gamma) = (h.coproduct(), h.counit(), h.antipode());
    let a = std::slice::from_ref(h.algebra());
    let items = test_monomials(h.algebra(), d)?;
    let mut out = Outcome::Pass;
    for leg in 0..2 {
        out = out.and(first_failure(&items, |x| {
            let l = delta.apply(x)?.map_leg(leg, a, &|m| gamma.apply(m))?.multiply_legs(0)?;
            Ok((l, TensorElement::constant(a, eps.apply_scalar(x)?)))
        })?);
    }
    Ok(out)
}

/// Δ, ε and γ respect the relations: `Δ([x,y]) = [Δx,Δy]`, `ε([x,y]) = 0`,
/// `γ([x,y]) = [γy,γx]` on generators, and `Δ(ab) = Δ(a)Δ(b)` for words
/// with `deg a + deg b ≤ d`.
pub fn check_bialgebra_compatibility(h: &HopfPresentation, d: u32) -> Result<Outcome> {
    let (delta, eps, gamma) = (h.coproduct(), h.counit(), h.antipode());
    let gens: Vec<NCElement> =
        h.algebra().generators().iter().map(|v| h.gen(v.name())).collect::<Result<_>>()?;
    for (i, x) in gens.iter().enumerate() {
        for y in &gens[i + 1..] {
            let at = format!("[{x},{y}]");
            let c = x.commutator(y)?;
            let l = delta.apply(&c)?;
            let r = delta.apply(x)?.commutator(&delta.apply(y)?)?;
            if l != r {
                return Ok(Outcome::fail(format!("Δ{at}"), &l - &r));
            }
            let e = eps.apply_scalar(&c)?;
            if !e.is_zero() {
                return Ok(Outcome::fail(format!("ε{at}"), crate::coeffring::Scalar::to_string(&e)));
            }
            let l = gamma.apply_element(&c)?;
            let r = gamma.apply_element(y)?.commutator(&gamma.apply_element(x)?)?;
            if l != r {
                return Ok(Outcome::fail(format!("γ{at}"), &l - &r));
            }
        }
    }
    let words = test_monomials(h.algebra(), d)?;
    for a in &words {
        for b in &words {
            if a.max_degree() + b.max_degree() > d {
                continue;
            }
            let l = delta.apply(&a.mul(b)?)?;
            let r = delta.apply(a)?.mul(&delta.apply(b)?)?;
            if l != r {
                return Ok(Outcome::fail(format!("Δ(({a})·({b}))"), &l - &r));
            }
        }
    }
    Ok(Outcome::Pass)
}

/// `[c, g] = 0` for every generator `g`.
pub fn check_centrality(p: &Arc<Presentation>, c: &NCElement) -> Result<Outcome> {
    let c = c.rebase(p)?;
    for v in p.generators() {
        let r = c.commutator(&NCElement::gen(p, v.name())?)?;
        if !r.is_zero() {
            return Ok(Outcome::fail(format!("[C, {v}]"), r));
        }
    }
    Ok(Outcome::Pass)
}

/// Coassociativity, counit, antipode and compatibility together.
pub fn check_all(h: &HopfPresentation, d: u32) -> Result<Outcome> {
    Ok(check_coassociativity(h, d)?
        .and(check_counit(h, d)?)
        .and(check_antipode(h, d)?)
        .and(check_bialgebra_compatibility(h, d)?))
}
