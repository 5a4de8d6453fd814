use super::Ctx;
use crate::coeffring::{q, qr, Param, Scalar};
use crate::error::Result;
use crate::hopfcore::catalog_get;
use crate::liebialg::{
    check_bialgebra_duality, check_cocycle, check_cojacobi, check_cybe, check_mcybe, coboundary_cocommutator, delta_nc,
    iso11_ah, iso11_pk, linearized_cocommutator, r_hat, r_n, r_n_ah, r_s, sb2, schouten, search_diagonal_pairing,
    Bivector, Cocommutator, LieAlgebraSC, Tensor2,
};
use crate::outcome::Outcome;

fn wedge(g: &LieAlgebraSC, x: &str, y: &str, c: Scalar) -> Result<Bivector> {
    Ok(Bivector::wedge(g.dim(), g.index(x)?, g.index(y)?, c))
}

/// `δ(A₊) = 0`, `δ(A₋) = 2w A₋∧A₊`, `δ(H) = 2w H∧A₊`.
fn delta_ah() -> Result<Cocommutator> {
    let g = iso11_ah();
    let w2 = Scalar::param(Param::W).scale(&q(2));
    Cocommutator::from_images(&g, &[("A-", wedge(&g, "A-", "A+", w2.clone())?), ("H", wedge(&g, "H", "A+", w2)?)])
}

/// `δ̂(Q(a±)) = ±2 Q(χ)∧Q(a±)`, `δ̂(Q(χ)) = 0`.
fn delta_sb2() -> Result<Cocommutator> {
    let g = sb2();
    Cocommutator::from_images(
        &g,
        &[("Q(a+)", wedge(&g, "Q(chi)", "Q(a+)", Scalar::int(2))?), ("Q(a-)", wedge(&g, "Q(chi)", "Q(a-)", Scalar::int(-2))?)],
    )
}

fn render(g: &LieAlgebraSC, d: &Cocommutator) -> String {
    let rows: Vec<String> = g.names().iter().zip(&d.images).map(|(n, b)| format!("δ({n}) = {}", b.render(g.names()))).collect();
    rows.join("; ")
}

pub(super) fn cybe(ctx: &mut Ctx) {
    ctx.attempt("bialgebra-cybe", |ctx| {
        let g = iso11_pk();
        ctx.outcome("[[r_n, r_n]] = 0", check_cybe(&g, &r_n()));
        let s = schouten(&g, &r_s())?;
        ctx.check("[[r_s, r_s]] ≠ 0", !s.is_zero(), "vanishes");
        ctx.outcome("[[r_s, r_s]] is ad-invariant", check_mcybe(&g, &r_s()));
        ctx.outcome("δ_nc satisfies the cocycle condition", check_cocycle(&g, &delta_nc()));
        ctx.outcome("δ_nc satisfies co-Jacobi", check_cojacobi(&g, &delta_nc()));

        let ah = iso11_ah();
        let expected = delta_ah()?;
        let got = coboundary_cocommutator(&ah, &r_n_ah())?;
        ctx.check("coboundary of w H∧A+", got == expected, render(&ah, &got));
        let hat = coboundary_cocommutator(&sb2(), &r_hat())?;
        ctx.check("coboundary of (1/w) Q(a+)∧Q(chi)", hat == delta_sb2()?, render(&sb2(), &hat));
        ctx.outcome("[[r̂, r̂]] = 0", check_cybe(&sb2(), &r_hat()));

        ctx.uses("uw-iso11-ah");
        ctx.uses("funw-iso11");
        let lin = linearized_cocommutator(&catalog_get("uw-iso11-ah")?, &ah, &["A-", "A+", "H"])?;
        ctx.check("first-order antisymmetrized Δ of U_w", lin == expected, render(&ah, &lin));
        let lin = linearized_cocommutator(&catalog_get("funw-iso11")?, &sb2(), &["a-", "a+", "chi"])?;
        ctx.check("first-order antisymmetrized Δ of Fun_w", lin == delta_sb2()?, render(&sb2(), &lin));
        Ok(())
    });
}

fn diag(v: &[Scalar]) -> Tensor2 {
    let n = v.len();
    (0..n).map(|i| (0..n).map(|j| if i == j { v[i].clone() } else { Scalar::zero() }).collect()).collect()
}

pub(super) fn duality(ctx: &mut Ctx) {
    ctx.attempt("bialgebra-duality", |ctx| {
        let (g1, g2) = (iso11_ah(), sb2());
        let (d1, d2) = (delta_ah()?, delta_sb2()?);
        let ones = diag(&[Scalar::one(), Scalar::one(), Scalar::one()]);
        ctx.outcome("⟨A±, Q(a±)⟩ = ⟨H, Q(chi)⟩ = 1", check_bialgebra_duality(&g1, &d1, &g2, &d2, &ones));
        let candidates: Vec<Scalar> =
            [qr(1, 1), qr(-1, 1), qr(2, 1), qr(-2, 1), qr(1, 2), qr(-1, 2)].into_iter().map(Scalar::from_q).collect();
        let found = search_diagonal_pairing(&g1, &d1, &g2, &d2, &candidates)?;
        let forced = found.solutions.iter().all(|s| s[1].is_one() && s[2].is_one());
        ctx.check(
            format!("diagonal normalizations: {} of {} work, all with ⟨A+, Q(a+)⟩ = ⟨H, Q(chi)⟩ = 1", found.solutions.len(), found.tried),
            !found.solutions.is_empty() && forced,
            format!("{:?}", found.solutions.iter().map(|s| s.iter().map(|x| x.to_string()).collect::<Vec<_>>()).collect::<Vec<_>>()),
        );
        let scaled = diag(&[Scalar::one(), Scalar::int(2), Scalar::one()]);
        let o = check_bialgebra_duality(&g1, &d1, &g2, &d2, &scaled)?;
        ctx.check("⟨A+, Q(a+)⟩ = 2 is rejected", matches!(o, Outcome::Fail(_)), o);
        Ok(())
    });
}
