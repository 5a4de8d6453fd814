use std::collections::BTreeMap;

use super::HopfPresentation;
use crate::coeffring::{Param, Scalar, Var};
use crate::error::{Error, Result};
use crate::ncengine::{NCElement, TensorElement};

/// `g = λ^k·g'` for listed generators and `p = λ^k·p'` for the parameter.
#[derive(Clone, Debug)]
pub struct Contraction {
    pub generators: Vec<(String, i32)>,
    pub param: Option<(Param, Param, i32)>,
}

impl Contraction {
    /// `a2 = λa2'`, `θ = λθ'`, `v = λv'`.
    pub fn heisenberg() -> Self {
        Contraction {
            generators: vec![("theta".into(), 1), ("a2".into(), 1)],
            param: Some((Param::V, Param::Vp, 1)),
        }
    }
}

fn lambda_pow(k: i32) -> Result<Scalar> {
    Scalar::param(Param::Lambda).pow(k)
}

fn in_map(what: &str, e: Error) -> Error {
    match e {
        Error::DivergentLimit(m) => Error::DivergentLimit(format!("{what}: {m}")),
        e => e,
    }
}

/// Rescales generators and the parameter by powers of `λ`, then takes
/// `λ → 0` in every relation and structure map.
pub fn contract_presentation(h: &HopfPresentation, c: &Contraction) -> Result<HopfPresentation> {
    let a = h.algebra();
    let mut mu: BTreeMap<Var, Scalar> = BTreeMap::new();
    for (g, k) in &c.generators {
        mu.insert(a.lookup(g)?, lambda_pow(*k)?);
    }
    let factor = |v: Var| mu.get(&v).cloned().unwrap_or_else(Scalar::one);
    let (new_param, subst) = match c.param {
        Some((old, new, k)) => (new, Some((old, &lambda_pow(k)? * &Scalar::param(new)))),
        None => (h.param(), None),
    };
    let sub = |s: &Scalar| match &subst {
        Some((p, img)) => s.subst_param(*p, img),
        None => Ok(s.clone()),
    };
    let prep = |x: &NCElement, scale: &Scalar| -> Result<NCElement> {
        x.rescale(&mu)?.map_scalars(&|s| sub(s))?.scale(scale).limit_param(Param::Lambda)
    };

    let contracted = a.map_rules(&|hi, lo, x| {
        let inv = (&factor(hi) * &factor(lo)).inverse()?;
        prep(x, &inv).map_err(|e| in_map(&format!("[{hi},{lo}]"), e))
    })?;
    let contracted = contracted.renamed(&format!("{}-contracted", h.name()));
    let sq = [contracted.clone(), contracted.clone()];
    let mut out = HopfPresentation::new(&format!("{}-contracted", h.name()), &contracted, new_param, h.s());
    for v in a.generators() {
        let inv = factor(v).inverse()?;
        let mut d: TensorElement = h.coproduct_of(v.name())?.clone();
        for leg in 0..2 {
            d = d.map_leg(leg, std::slice::from_ref(a), &|m| Ok(TensorElement::from_element(&m.rescale(&mu)?)))?;
        }
        let d = d
            .map_scalars(&|s| sub(s))?
            .scale(&inv)
            .limit_param(Param::Lambda)
            .map_err(|e| in_map(&format!("Δ({v})"), e))?
            .rebase(&sq)?;
        let eps = sub(h.counit_of(v.name())?)?.try_mul(&inv)?;
        if matches!(eps.power_range(Param::Lambda), Some((lo, _)) if lo < 0) {
            return Err(Error::DivergentLimit(format!("ε({v}): {eps}")));
        }
        let eps = eps.coeff_of(Param::Lambda, 0);
        let gamma = prep(h.antipode_of(v.name())?, &inv).map_err(|e| in_map(&format!("γ({v})"), e))?;
        out.set(v.name(), d, eps, gamma.rebase(&contracted)?)?;
    }
    Ok(out)
}
