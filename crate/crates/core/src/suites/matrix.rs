use std::sync::Arc;

use super::algebra::ck_key;
use super::Ctx;
use crate::coeffring::{cosh, q, sinh, ExpPoly, LinForm, Param, Scalar, Var};
use crate::error::Result;
use crate::hopfcore::{catalog_get, nonstandard_relations};
use crate::matrep::{
    check_coproduct_multiplicativity, check_frt, coaction_check, ck_group_element, frt_r_matrix, q_matrices_12, q_matrix,
    specialize_t, t_dq, t_q, verify_basis_change, PlanePresentation, SymMatrix,
};
use crate::ncengine::{NCElement, Presentation, TowerBuilder};

fn w() -> Scalar {
    Scalar::param(Param::W)
}

fn func(p: &Arc<Presentation>, f: &ExpPoly) -> Result<NCElement> {
    NCElement::func(p, f)
}

/// The 3×3 group element with `a₋ ± a₊` and `cosh 2χ`, `−sinh 2χ`.
fn eg(p: &Arc<Presentation>) -> Result<SymMatrix> {
    let chi = Var::new("chi");
    let (c, s) = (func(p, &cosh(chi, Scalar::int(2)))?, func(p, &sinh(chi, Scalar::int(2)))?);
    let (am, ap) = (NCElement::gen(p, "a-")?, NCElement::gen(p, "a+")?);
    let (z, u) = (NCElement::zero(p), NCElement::one(p));
    SymMatrix::new(p, vec![vec![u, z.clone(), z], vec![&am + &ap, c.clone(), -&s], vec![&am - &ap, -&s, c]])
}

fn exp_lin(p: &Arc<Presentation>, pairs: &[(&str, Scalar)]) -> Result<NCElement> {
    func(p, &ExpPoly::exp(&LinForm::from_pairs(pairs.iter().map(|(x, c)| (Var::new(x), c.clone())))))
}

/// The 4×4 group element in `H, A₊, A₋`.
fn ez(p: &Arc<Presentation>) -> Result<SymMatrix> {
    let g = |x: &str| NCElement::gen(p, x);
    let (z, u) = (NCElement::zero(p), NCElement::one(p));
    let w2 = w().scale(&q(2));
    SymMatrix::new(
        p,
        vec![
            vec![u.clone(), z.clone(), g("H")?, g("A+")?],
            vec![z.clone(), exp_lin(p, &[("A+", -&w2)])?, z.clone(), g("A-")?],
            vec![z.clone(), z.clone(), exp_lin(p, &[("A+", w2)])?, z.clone()],
            vec![z.clone(), z.clone(), z, u],
        ],
    )
}

/// The same group element in `A₁, A₂, A₁₂`.
fn ezc(p: &Arc<Presentation>) -> Result<SymMatrix> {
    let g = |x: &str| NCElement::gen(p, x);
    let (z, u) = (NCElement::zero(p), NCElement::one(p));
    let w2 = w().scale(&q(2));
    let diff_m = exp_lin(p, &[("A1", -&w2), ("A2", w2.clone())])?;
    let diff_p = exp_lin(p, &[("A1", w2.clone()), ("A2", -&w2)])?;
    let a1 = exp_lin(p, &[("A1", -&w2)])?;
    let corner = (&(&diff_m - &a1.scale(&Scalar::int(2))) + &u).scale(&w2.inverse()?);
    SymMatrix::new(
        p,
        vec![
            vec![u.clone(), z.clone(), g("A12")?.scale(&Scalar::int(-2)), &g("A1")? - &g("A2")?],
            vec![z.clone(), diff_m, z.clone(), corner],
            vec![z.clone(), z.clone(), diff_p, z.clone()],
            vec![z.clone(), z.clone(), z, u],
        ],
    )
}

fn equal_matrix(ctx: &mut Ctx, name: &str, got: Result<SymMatrix>, expected: Result<SymMatrix>) {
    match (got, expected) {
        (Ok(g), Ok(e)) => ctx.check(name, g == e, format!("\n{}\nexpected\n{}", g.render(), e.render())),
        (Err(e), _) | (_, Err(e)) => ctx.outcome(name, Err(e)),
    }
}

pub(super) fn t_specialization(ctx: &mut Ctx) {
    ctx.uses("funw-iso11");
    ctx.uses("uw-iso11-ah");
    ctx.attempt("t-specialization", |ctx| {
        let fun = catalog_get("funw-iso11")?;
        let u = catalog_get("uw-iso11-ah")?;
        equal_matrix(ctx, "T over Fun_w in the 3×3 realization", t_dq(fun.algebra()), eg(fun.algebra()));
        equal_matrix(ctx, "T over U_w in the 4×4 realization", t_q(u.algebra()), ez(u.algebra()));
        let p = TowerBuilder::new("second-factorization").block(&["A1", "A2", "A12"]).build()?;
        let [(_, q1), (_, q2), (_, qt)] = q_matrices_12()?;
        let second = specialize_t(&[("A1", q1), ("A2", q2), ("A12", qt)], &p, 4);
        equal_matrix(ctx, "T in the second 4×4 factorization", second, ezc(&p));
        ctx.outcome("Δ of Fun_w is the matrix coproduct", check_coproduct_multiplicativity(&t_dq(fun.algebra())?, &fun));
        ctx.outcome("Δ of U_w is the matrix coproduct", check_coproduct_multiplicativity(&t_q(u.algebra())?, &u));
        Ok(())
    });
}

pub(super) fn frt(ctx: &mut Ctx) {
    ctx.uses("funw-iso11");
    ctx.attempt("frt", |ctx| {
        let fun = catalog_get("funw-iso11")?;
        ctx.outcome("R T1 T2 = T2 T1 R (81 entries)", check_frt(&frt_r_matrix(&w()), &t_dq(fun.algebra())?));
        let classical = fun.algebra().map_rules(&|_, _, v| v.map_scalars(&|s| s.subst_param(Param::W, &Scalar::zero())))?;
        ctx.outcome("w = 0: R = 1 and T has commuting entries", check_frt(&frt_r_matrix(&Scalar::zero()), &t_dq(&classical)?));
        Ok(())
    });
}

pub(super) fn basis_change(ctx: &mut Ctx) {
    ctx.attempt("basis-change", |ctx| {
        let first = [("A-", q_matrix("a-")?), ("A+", q_matrix("a+")?), ("H", q_matrix("chi")?)];
        let [(_, q1), (_, q2), (_, qt)] = q_matrices_12()?;
        let bc = verify_basis_change(&first, &[("A1", q1), ("A2", q2), ("A12", qt)], 4)?;
        ctx.outcome("both factorizations agree entrywise", Ok(bc.outcome.clone()));
        let p = &bc.pres;
        let rel = |x: &str| bc.relations.iter().find(|(n, _)| n == x).map(|(_, e)| e.clone());
        let g = |x: &str| NCElement::gen(p, x);
        let w2 = w().scale(&q(2));
        let am = (&(&exp_lin(p, &[("A1", -&w2), ("A2", w2.clone())])? - &exp_lin(p, &[("A1", -&w2)])?.scale(&Scalar::int(2)))
            + &NCElement::one(p))
            .scale(&w2.inverse()?);
        let missing = || crate::error::Error::UnknownGenerator("relation".into());
        ctx.equal("A+ = A1 − A2", rel("A+").ok_or_else(missing), &(&g("A1")? - &g("A2")?));
        ctx.equal("H = −2 A12", rel("H").ok_or_else(missing), &g("A12")?.scale(&Scalar::int(-2)));
        ctx.equal("A- = (e^{−2w(A1−A2)} − 2e^{−2wA1} + 1)/2w", rel("A-").ok_or_else(missing), &am);
        let limit = rel("A-").ok_or_else(missing).and_then(|e| e.limit_param(Param::W));
        ctx.equal("w → 0: A- → A1 + A2", limit, &(&g("A1")? + &g("A2")?));
        Ok(())
    });
}

pub(super) fn coaction(ctx: &mut Ctx) {
    ctx.uses("funw-iso11");
    ctx.uses("funs-iso11-standard");
    ctx.attempt("coaction", |ctx| {
        let fun = catalog_get("funw-iso11")?;
        let plane = PlanePresentation::nonstandard(w().scale(&q(-2)))?;
        ctx.outcome("Fun_w on [x1, x2] = −2w(x1 + x2)", coaction_check(&t_dq(fun.algebra())?, &plane));
        let ns = nonstandard_relations()?;
        let plane = PlanePresentation::nonstandard(Scalar::param(Param::Wp))?;
        ctx.outcome("non-standard group on [x1, x2] = w'(x1 + x2)", coaction_check(&ck_group_element(&ns, 1)?, &plane));
        let st = catalog_get("funs-iso11-standard")?;
        let out = coaction_check(&ck_group_element(st.algebra(), 1)?, &PlanePresentation::standard()?);
        ctx.outcome("standard group on [x1, x2] = w' x1", out);
        for s in ctx.signs() {
            let key = ck_key(s);
            ctx.uses(key);
            let h = catalog_get(key)?;
            let g = ck_group_element(h.algebra(), s)?;
            ctx.outcome(format!("{key} on [x1, x2] = v(x1 + j x2)"), coaction_check(&g, &PlanePresentation::cayley_klein(s)?));
        }
        Ok(())
    });
}
