use std::collections::BTreeMap;
use std::sync::{Arc, Mutex, OnceLock};

use super::Ctx;
use crate::coeffring::{q, Param, Scalar};
use crate::dualform::{
    compute_structure_tensor, coordinate_lie_algebra as coordinate_report, extract_dual_commutators,
    verify_dual_product, verify_recurrences, StructureTensor,
};
use crate::error::Result;
use crate::hopfcore::catalog_get;

/// Structure tensors of the quantum algebra, computed once per cutoff.
fn tensor(cutoff: u32) -> Result<Arc<StructureTensor>> {
    static CACHE: OnceLock<Mutex<BTreeMap<u32, Arc<StructureTensor>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(f) = cache.lock().unwrap().get(&cutoff) {
        return Ok(f.clone());
    }
    let f = Arc::new(compute_structure_tensor(&catalog_get("uw-iso11-ah")?, cutoff)?);
    cache.lock().unwrap().insert(cutoff, f.clone());
    Ok(f)
}

pub(super) fn structure_tensor(ctx: &mut Ctx) {
    let d = ctx.order(4);
    ctx.uses("uw-iso11-ah");
    ctx.attempt("structure-tensor", |ctx| {
        let f = tensor(d)?;
        let fails = verify_recurrences(&f);
        let witness = fails.first().map(|x| format!("{} at {}: expected {}, found {}", x.family, x.indices, x.expected, x.found));
        ctx.check(format!("recurrences on {} stored entries", f.len()), fails.is_empty(), witness.unwrap_or_default());
        let f6 = tensor(d.max(6))?;
        let w = Scalar::param(Param::W);
        for k in 1..=6u32 {
            ctx.equal(format!("F^(0,0,{k})_(0,0,1;0,1,0) = 2^{k} w"), Ok(f6.get([0, 0, k], [0, 0, 1], [0, 1, 0])), &w.scale(&q(1 << k)));
        }
        Ok(())
    });
}

pub(super) fn dual_product(ctx: &mut Ctx) {
    let d = ctx.order(4);
    ctx.uses("uw-iso11-ah");
    ctx.uses("funw-iso11");
    ctx.attempt("dual-product", |ctx| {
        let fun = catalog_get("funw-iso11")?;
        let bad = verify_dual_product(&*tensor(d)?, fun.algebra(), d)?;
        let witness = bad.first().map(|b| format!("p{:?}·p{:?}: residual {}", b.lmn, b.qrs, b.residual));
        ctx.check(format!("p_lmn p_qrs = Σ F p_abc up to degree {d}"), bad.is_empty(), witness.unwrap_or_default());
        Ok(())
    });
}

pub(super) fn dual_commutators(ctx: &mut Ctx) {
    let d = ctx.order(4);
    ctx.uses("uw-iso11-ah");
    ctx.uses("funw-iso11");
    ctx.attempt("dual-commutators", |ctx| {
        let fun = catalog_get("funw-iso11")?;
        for c in extract_dual_commutators(&*tensor(d)?, fun.algebra(), d)? {
            ctx.check(format!("[{}, {}] from the tensor", c.left, c.right), c.matches(), format!("{} vs {}", c.series, c.closed));
        }
        Ok(())
    });
}

pub(super) fn coordinate_lie_algebra(ctx: &mut Ctx) {
    ctx.uses("funw-iso11");
    ctx.attempt("coordinate-lie-algebra", |ctx| {
        let r = coordinate_report(&catalog_get("funw-iso11")?, -4..=4)?;
        for b in &r.brackets {
            ctx.equal(format!("[{}, {}]", b.left, b.right), Ok(b.value.clone()), &b.expected);
        }
        for c in &r.coproducts {
            ctx.equal(format!("Δ({})", c.element), Ok(c.value.clone()), &c.expected);
        }
        ctx.check("brackets close on e^{2mχ}, a+, a-", r.lie_closed, "bracket leaves the span");
        ctx.check("coproduct and antipode close", r.hopf_closed, "leaves the subalgebra");
        ctx.check("antisymmetry", r.antisymmetric, "asymmetric bracket");
        ctx.check("Jacobi", r.jacobi, "Jacobi fails");
        Ok(())
    });
}
