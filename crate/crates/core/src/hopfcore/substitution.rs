use std::sync::Arc;

use super::{catalog_get, HopfPresentation};
use crate::coeffring::{cosh, sinh, Param, Scalar, Var};
use crate::error::{Error, Result};
use crate::ncengine::{Morphism, NCElement, Presentation, TensorElement, TowerBuilder};
use crate::outcome::Outcome;

fn ck_key(s: i8) -> Result<&'static str> {
    match s {
        -1 => Ok("funv-ck-elliptic"),
        0 => Ok("funv-ck-parabolic"),
        1 => Ok("funv-ck-hyperbolic"),
        _ => Err(Error::Config(format!("s must be -1, 0 or 1, got {s}"))),
    }
}

/// Relations of the light-cone coordinates rewritten in `(θ, a1, a2)` with
/// parameter `w'`.
pub fn nonstandard_relations() -> Result<Arc<Presentation>> {
    let t = TowerBuilder::new("funs-iso11-nonstandard").block(&["theta"]).poly("a1").poly("a2").build()?;
    let th = Var::new("theta");
    let wp = Scalar::param(Param::Wp);
    let one = Scalar::one();
    let chm1 = &cosh(th, one.clone()) - &crate::coeffring::ExpPoly::one();
    let sh = sinh(th, one);
    let (a1, a2) = (NCElement::gen(&t, "a1")?, NCElement::gen(&t, "a2")?);
    t.with_rules(&[
        ("theta", "a1", NCElement::func(&t, &(&chm1 - &sh).scale(&wp))?),
        ("theta", "a2", NCElement::func(&t, &(&sh - &chm1).scale(&wp))?),
        ("a1", "a2", (&a1 + &a2).scale(&wp)),
    ])
}

/// `θ ↦ cθ·χ`, `a1 ↦ a₋ + a₊`, `a2 ↦ c2·(a₋ − a₊)`, `p ↦ cp·w`.
fn coordinate_map(
    target: &Arc<Presentation>,
    source: &Arc<Presentation>,
    c_theta: &Scalar,
    c2: &Scalar,
    p: Param,
    cp: &Scalar,
) -> Result<Morphism> {
    let (am, ap, chi) =
        (NCElement::gen(source, "a-")?, NCElement::gen(source, "a+")?, NCElement::gen(source, "chi")?);
    let mut m = Morphism::algebra(target, source).with_param(p, cp * &Scalar::param(Param::W));
    m.set_element("theta", &chi.scale(c_theta))?;
    m.set_element("a1", &(&am + &ap))?;
    m.set_element("a2", &(&am - &ap).scale(c2))?;
    Ok(m)
}

/// Whether `φ` carries every relation of its source to an identity of its
/// target.
fn relations_preserved(phi: &Morphism) -> Result<Outcome> {
    let p = phi.source();
    let gens = p.generators();
    for (i, x) in gens.iter().enumerate() {
        for y in &gens[i + 1..] {
            let (gx, gy) = (NCElement::gen(p, x.name())?, NCElement::gen(p, y.name())?);
            let l = phi.apply_element(&gx.commutator(&gy)?)?;
            let r = phi.apply_element(&gx)?.commutator(&phi.apply_element(&gy)?)?;
            if l != r {
                return Ok(Outcome::fail(format!("[{x},{y}]"), &l - &r));
            }
        }
    }
    Ok(Outcome::Pass)
}

/// Whether `φ` intertwines coproducts and antipodes on generators.
fn structure_preserved(phi: &Morphism, target: &HopfPresentation, source: &HopfPresentation) -> Result<Outcome> {
    let a = std::slice::from_ref(source.algebra());
    let sq = [source.algebra().clone(), source.algebra().clone()];
    for v in target.algebra().generators() {
        let x = target.gen(v.name())?;
        let l: TensorElement = target
            .delta(&x)?
            .map_leg(0, a, &|m| phi.apply(m))?
            .map_leg(1, a, &|m| phi.apply(m))?
            .rebase(&sq)?;
        let r = source.delta(&phi.apply_element(&x)?)?;
        if l != r {
            return Ok(Outcome::fail(format!("Δ({v})"), &l - &r));
        }
        let l = phi.apply_element(&target.gamma(&x)?)?;
        let r = source.gamma(&phi.apply_element(&x)?)?;
        if l != r {
            return Ok(Outcome::fail(format!("γ({v})"), &l - &r));
        }
    }
    Ok(Outcome::Pass)
}

/// Substitutes `a1 = a₋+a₊`, `a2 = (a₋−a₊)/j`, `θ = −2χ/j`, `v = −2w/j`
/// into the Cayley–Klein member `s` and checks that relations, coproduct
/// and antipode become identities of the light-cone algebra. The dual
/// unit (`s = 0`) has no inverse, so that case is not applicable.
pub fn verify_unit_substitution(source: &HopfPresentation, s: i8) -> Result<Outcome> {
    let target = catalog_get(ck_key(s)?)?;
    if s == 0 {
        return Ok(Outcome::NotApplicable("the dual unit has no inverse".into()));
    }
    let jinv = Scalar::j(s).inverse()?;
    let m2 = Scalar::int(-2).try_mul(&jinv)?;
    let phi = coordinate_map(target.algebra(), source.algebra(), &m2, &jinv, Param::V, &m2)?;
    Ok(relations_preserved(&phi)?.and(structure_preserved(&phi, &target, source)?))
}

/// `θ = −2χ`, `a1 = a₋+a₊`, `a2 = a₋−a₊` with `w' = −2w` maps the
/// non-standard relations into the light-cone algebra.
pub fn verify_nonstandard_substitution(source: &HopfPresentation) -> Result<Outcome> {
    let target = nonstandard_relations()?;
    let m2 = Scalar::int(-2);
    let phi = coordinate_map(&target, source.algebra(), &m2, &Scalar::one(), Param::Wp, &m2)?;
    relations_preserved(&phi)
}
