use super::Ctx;
use crate::coeffring::{sinh, ExpPoly, Param, Scalar, Var};
use crate::error::Result;
use crate::hopfcore::{
    casimir_pk, catalog, catalog_get, check_all, check_antipode, check_bialgebra_compatibility, check_centrality,
    check_coassociativity, check_counit, contract_presentation, verify_nonstandard_substitution,
    verify_unit_substitution, Contraction, HopfPresentation,
};
use crate::ncengine::NCElement;

pub(crate) fn ck_key(s: i8) -> &'static str {
    match s {
        -1 => "funv-ck-elliptic",
        0 => "funv-ck-parabolic",
        _ => "funv-ck-hyperbolic",
    }
}

pub(super) fn hopf_axioms(ctx: &mut Ctx) {
    let d = ctx.order(3);
    let signs = ctx.signs();
    for e in catalog() {
        if e.hopf.s().is_some_and(|s| !signs.contains(&s)) {
            continue;
        }
        ctx.uses(e.key);
        let h = &e.hopf;
        ctx.outcome(format!("{}: coassociativity", e.key), check_coassociativity(h, d));
        ctx.outcome(format!("{}: counit", e.key), check_counit(h, d));
        ctx.outcome(format!("{}: antipode", e.key), check_antipode(h, d));
        ctx.outcome(format!("{}: compatibility", e.key), check_bialgebra_compatibility(h, d));
        for g in &e.goldens {
            ctx.check(format!("{}: {}", e.key, g.name), g.holds(), format!("{} ≠ {}", g.lhs, g.rhs));
        }
    }
}

pub(super) fn casimir(ctx: &mut Ctx) {
    ctx.uses("uw-iso11-pk");
    ctx.attempt("casimir", |ctx| {
        let h = catalog_get("uw-iso11-pk")?;
        let c = casimir_pk(h.algebra())?;
        for x in ["K", "P+", "P-"] {
            let comm = c.commutator(&h.gen(x)?)?;
            ctx.check(format!("[C, {x}] = 0"), comm.is_zero(), comm);
        }
        ctx.outcome("C is central", check_centrality(h.algebra(), &c));
        Ok(())
    });
}

pub(super) fn antipode_conjugation(ctx: &mut Ctx) {
    ctx.uses("uw-iso11-pk");
    ctx.attempt("antipode-conjugation", |ctx| {
        let h = catalog_get("uw-iso11-pk")?;
        let p = h.algebra();
        let w = Scalar::param(Param::W);
        let pp = Var::new("P+");
        let e_p = NCElement::func(p, &ExpPoly::exp_var(pp, w.clone()))?;
        let e_m = NCElement::func(p, &ExpPoly::exp_var(pp, -&w))?;
        let k = h.gen("K")?;
        let conj = -&(&(&e_p * &k) * &e_m);
        let expected = &(-&k) + &NCElement::func(p, &sinh(pp, w).scale(&Scalar::int(2)))?;
        ctx.equal("−e^{wP+} K e^{−wP+} = −K + 2 sinh(wP+)", Ok(conj), &expected);
        ctx.equal("γ(K) = −K + 2 sinh(wP+)", h.gamma(&k), &expected);
        for x in ["P+", "P-"] {
            let g = h.gen(x)?;
            ctx.equal(format!("γ({x}) = −e^{{wP+}} {x} e^{{−wP+}}"), h.gamma(&g), &-&(&(&e_p * &g) * &e_m));
        }
        Ok(())
    });
}

/// `[θ, a1] = −vεθ`, `[θ, a2] = v(θ − εθ²/2)`, `[a1, a2] = v(a1 + εa2)`.
fn heisenberg_quadratic(h: &HopfPresentation) -> Result<[(&'static str, NCElement, NCElement); 3]> {
    let (th, a1, a2) = (h.gen("theta")?, h.gen("a1")?, h.gen("a2")?);
    let v = Scalar::param(Param::V);
    let eps = Scalar::j(0);
    let ve = &v * &eps;
    let th2 = &th * &th;
    Ok([
        ("[θ, a1] = −vεθ", th.commutator(&a1)?, th.scale(&-&ve)),
        ("[θ, a2] = v(θ − εθ²/2)", th.commutator(&a2)?, &th.scale(&v) - &th2.scale(&(&ve * &Scalar::rat(1, 2)))),
        ("[a1, a2] = v(a1 + εa2)", a1.commutator(&a2)?, &a1.scale(&v) + &a2.scale(&ve)),
    ])
}

pub(super) fn cayley_klein(ctx: &mut Ctx) {
    let d = ctx.order(3);
    for s in ctx.signs() {
        let key = ck_key(s);
        ctx.uses(key);
        ctx.attempt(key, |ctx| {
            let h = catalog_get(key)?;
            ctx.outcome(format!("{key}: Hopf axioms"), check_all(&h, d));
            if s == 0 {
                for (name, got, expected) in heisenberg_quadratic(&h)? {
                    ctx.equal(format!("{key}: {name}"), Ok(got), &expected);
                }
            }
            Ok(())
        });
    }
    ctx.uses("funw-iso11");
    ctx.attempt("substitutions", |ctx| {
        let fun = catalog_get("funw-iso11")?;
        for s in ctx.signs() {
            ctx.outcome(format!("unit substitution s = {s} into the light-cone algebra"), verify_unit_substitution(&fun, s));
        }
        ctx.outcome("non-standard relations with w' = −2w", verify_nonstandard_substitution(&fun));
        Ok(())
    });
}

pub(super) fn contraction(ctx: &mut Ctx) {
    let d = ctx.order(3);
    let signs: Vec<i8> = ctx.signs().into_iter().filter(|s| *s != 0).collect();
    let mut contracted = Vec::new();
    for s in signs {
        let key = ck_key(s);
        ctx.uses(key);
        ctx.attempt(key, |ctx| {
            let c = contract_presentation(&catalog_get(key)?, &Contraction::heisenberg())?;
            let (th, a1, a2) = (c.gen("theta")?, c.gen("a1")?, c.gen("a2")?);
            let vp = Scalar::param(Param::Vp);
            ctx.equal(format!("{key}: [θ', a1'] = 0"), th.commutator(&a1), &NCElement::zero(c.algebra()));
            ctx.equal(format!("{key}: [θ', a2'] = v'θ'"), th.commutator(&a2), &th.scale(&vp));
            ctx.equal(format!("{key}: [a1', a2'] = v'a1'"), a1.commutator(&a2), &a1.scale(&vp));
            ctx.outcome(format!("{key}: contracted Hopf axioms"), check_all(&c, d));
            contracted.push(c);
            Ok(())
        });
    }
    if let [x, y] = contracted.as_slice() {
        ctx.check("both signs give the same presentation", render(x) == render(y), format!("{}\nvs\n{}", render(x), render(y)));
    }
}

/// Rules, coproducts and antipodes as text.
fn render(h: &HopfPresentation) -> String {
    let a = h.algebra();
    let mut out: Vec<String> = a.rules().map(|((x, y), _)| format!("[{x}, {y}] = {}", a.rule_element(*x, *y))).collect();
    for v in a.generators() {
        let d = h.coproduct_of(v.name()).map(|d| d.to_string()).unwrap_or_default();
        let g = h.antipode_of(v.name()).map(|g| g.to_string()).unwrap_or_default();
        out.push(format!("Δ({v}) = {d}; γ({v}) = {g}"));
    }
    out.join("\n")
}
