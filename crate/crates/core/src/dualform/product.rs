use std::sync::Arc;

use rayon::prelude::*;

use super::{degree, triples, StructureTensor, Triple};
use crate::coeffring::{qr, Scalar};
use crate::error::Result;
use crate::ncengine::{NCElement, Presentation};

fn factorial(n: u32) -> i64 {
    (1..=n as i64).product()
}

/// `p_{qrs} = a₋^q/q! · a₊^r/r! · χ^s/s!`.
pub fn dual_basis(fun: &Arc<Presentation>, t: Triple) -> Result<NCElement> {
    let x = NCElement::word(fun, &[("a-", t[0]), ("a+", t[1]), ("chi", t[2])])?;
    Ok(x.scale(&Scalar::from_q(qr(1, factorial(t[0]) * factorial(t[1]) * factorial(t[2])))))
}

/// A product `p_{lmn}·p_{qrs}` that disagrees with `Σ F^{abc}_{lmn;qrs} p_{abc}`.
#[derive(Clone, Debug)]
pub struct DualWitness {
    pub lmn: Triple,
    pub qrs: Triple,
    pub left: NCElement,
    pub right: NCElement,
    pub residual: NCElement,
}

/// `Σ_{abc} coeff(abc)·p_{abc}` over triples of degree `≤ d`.
fn combine(fun: &Arc<Presentation>, d: u32, coeff: impl Fn(Triple) -> Scalar) -> Result<NCElement> {
    let mut acc = NCElement::zero(fun);
    for abc in triples(d) {
        let c = coeff(abc);
        if !c.is_zero() {
            acc = acc.try_add(&dual_basis(fun, abc)?.scale(&c))?;
        }
    }
    Ok(acc)
}

/// Compares products of dual basis elements computed from the relations
/// with the structure tensor, for all pairs of combined degree `≤ d`.
pub fn verify_dual_product(f: &StructureTensor, fun: &Arc<Presentation>, d: u32) -> Result<Vec<DualWitness>> {
    let d = d.min(f.cutoff());
    let ts = triples(d);
    let pairs: Vec<(Triple, Triple)> = ts
        .iter()
        .flat_map(|l| ts.iter().map(move |q| (*l, *q)))
        .filter(|(l, q)| degree(l) + degree(q) <= d)
        .collect();
    let results: Vec<Result<Option<DualWitness>>> = pairs
        .into_par_iter()
        .map(|(lmn, qrs)| {
            let left = dual_basis(fun, lmn)?.mul(&dual_basis(fun, qrs)?)?.expand_to_degree(d);
            let right = combine(fun, d, |abc| f.get(abc, lmn, qrs))?;
            let residual = &left - &right;
            Ok((!residual.is_zero()).then_some(DualWitness { lmn, qrs, left, right, residual }))
        })
        .collect();
    let mut out = Vec::new();
    for r in results {
        out.extend(r?);
    }
    Ok(out)
}

/// A coordinate commutator read from the tensor next to the closed form.
#[derive(Clone, Debug)]
pub struct DualCommutator {
    pub left: &'static str,
    pub right: &'static str,
    pub series: NCElement,
    pub closed: NCElement,
}

impl DualCommutator {
    pub fn matches(&self) -> bool {
        self.series == self.closed
    }
}

/// `[p_u, p_v] = Σ (F^{abc}_{u;v} − F^{abc}_{v;u}) p_{abc}` for the
/// coordinate pairs, next to the relations of `fun` expanded to degree `d`.
pub fn extract_dual_commutators(f: &StructureTensor, fun: &Arc<Presentation>, d: u32) -> Result<Vec<DualCommutator>> {
    let d = d.min(f.cutoff());
    let coord = |n: &str| -> Triple {
        match n {
            "a-" => [1, 0, 0],
            "a+" => [0, 1, 0],
            _ => [0, 0, 1],
        }
    };
    let mut out = Vec::new();
    for (u, v) in [("chi", "a+"), ("chi", "a-"), ("a+", "a-")] {
        let (tu, tv) = (coord(u), coord(v));
        let series = combine(fun, d, |abc| &f.get(abc, tu, tv) - &f.get(abc, tv, tu))?;
        let closed = NCElement::gen(fun, u)?.commutator(&NCElement::gen(fun, v)?)?.expand_to_degree(d);
        out.push(DualCommutator { left: u, right: v, series, closed });
    }
    Ok(out)
}
