use super::Ctx;
use crate::coeffring::{Param, Scalar};
use crate::hopfcore::catalog_get;
use crate::liebialg::{iso11_pk, sb2};
use crate::matrep::{t_dq, t_q};
use crate::outcome::Outcome;
use crate::poissonlie::{
    bracket_table, check_jacobi, check_poisson_hopf, check_weyl_correspondence, eeo_table, field_closure,
    iso11_left_fields, iso11_recipe, iso11_right_fields, iso11_table, sb2_left_fields, sb2_recipe, sb2_right_fields,
    sb2_right_fields_from_group_law, sb2_table, Closure,
};

fn closure(ctx: &mut Ctx, name: &str, c: crate::error::Result<Closure>, sign: i8) {
    match c {
        Ok(c) => {
            let ok = c.outcome.is_pass() && c.sign == Some(sign);
            ctx.check(format!("{name} close with sign {sign:+}"), ok, format!("sign {:?}: {}", c.sign, c.outcome));
        }
        Err(e) => ctx.outcome(name, Err(e)),
    }
}

pub(super) fn sklyanin(ctx: &mut Ctx) {
    ctx.attempt("sklyanin", |ctx| {
        let w = Scalar::param(Param::W);
        closure(ctx, "ISO(1,1) left fields", field_closure(&iso11_left_fields(), &iso11_pk()), 1);
        closure(ctx, "ISO(1,1) right fields", field_closure(&iso11_right_fields(), &iso11_pk()), -1);
        closure(ctx, "SB(2) left fields", field_closure(&sb2_left_fields(), &sb2()), 1);
        closure(ctx, "SB(2) right fields", field_closure(&sb2_right_fields_from_group_law(), &sb2()), -1);
        // The alternative right set with e^{−2wA₊} mixes both signs; the check
        // passes when that inconsistency is detected.
        let alt = field_closure(&sb2_right_fields(), &sb2())?;
        ctx.check("SB(2) right fields with e^{−2wA+} do not close", matches!(alt.outcome, Outcome::Fail(_)), alt.outcome);

        ctx.equal("r = w K∧P+ on ISO(1,1)", bracket_table(&iso11_recipe(&w)), &iso11_table());
        ctx.equal("r = K∧P+ on ISO(1,1)", bracket_table(&iso11_recipe(&Scalar::one())), &eeo_table());
        ctx.equal("r̂ on SB(2)", bracket_table(&sb2_recipe(sb2_right_fields_from_group_law())), &sb2_table());
        for (name, t) in [("ISO(1,1)", iso11_table()), ("SB(2)", sb2_table())] {
            ctx.outcome(format!("{name} bracket satisfies Jacobi"), check_jacobi(&t));
        }
        Ok(())
    });
}

pub(super) fn weyl(ctx: &mut Ctx) {
    ctx.uses("funw-iso11");
    ctx.uses("uw-iso11-ah");
    ctx.attempt("weyl-correspondence", |ctx| {
        let fun = catalog_get("funw-iso11")?;
        let pairs = [("chi", "chi"), ("a+", "a+"), ("a-", "a-")];
        let t = t_dq(fun.algebra())?;
        ctx.outcome("Fun_w from the ISO(1,1) bracket", check_weyl_correspondence(&iso11_table(), &fun, &pairs, Some(&t)));
        let u = catalog_get("uw-iso11-ah")?;
        let pairs = [("H", "H"), ("A+", "A+"), ("A-", "A-")];
        let t = t_q(u.algebra())?;
        ctx.outcome("U_w from the SB(2) bracket", check_weyl_correspondence(&sb2_table(), &u, &pairs, Some(&t)));
        Ok(())
    });
}

pub(super) fn poisson_hopf(ctx: &mut Ctx) {
    ctx.uses("funw-iso11");
    ctx.uses("uw-iso11-ah");
    ctx.attempt("poisson-hopf", |ctx| {
        let fun = catalog_get("funw-iso11")?;
        let t = t_dq(fun.algebra())?;
        ctx.outcome("ISO(1,1) bracket is multiplicative", check_poisson_hopf(&iso11_table(), &t));
        ctx.outcome("ISO(1,1) bracket at w = 1 is multiplicative", check_poisson_hopf(&eeo_table(), &t));
        let u = catalog_get("uw-iso11-ah")?;
        ctx.outcome("SB(2) bracket is multiplicative", check_poisson_hopf(&sb2_table(), &t_q(u.algebra())?));
        Ok(())
    });
}
