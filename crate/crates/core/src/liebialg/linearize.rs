use super::{Bivector, Cocommutator, LieAlgebraSC, Tensor2};
use crate::coeffring::Scalar;
use crate::error::{Error, Result};
use crate::hopfcore::HopfPresentation;
use crate::ncengine::NCElement;

/// Bilinear part of `Δ(x) − σΔ(x)` for each generator, in the basis of `g`.
///
/// `gens[i]` is the Hopf generator sent to the `i`-th basis element of `g`.
/// Constant and linear parts must cancel.
pub fn linearized_cocommutator(h: &HopfPresentation, g: &LieAlgebraSC, gens: &[&str]) -> Result<Cocommutator> {
    let n = g.dim();
    if gens.len() != n {
        return Err(Error::Dimension(format!("{} generators for a {n}-dimensional algebra", gens.len())));
    }
    let tower: Vec<String> = h.algebra().generators().iter().map(|v| v.name().to_string()).collect();
    let position = |t: usize| -> Result<usize> {
        gens.iter().position(|x| *x == tower[t]).ok_or_else(|| Error::UnknownGenerator(tower[t].clone()))
    };
    let probe = NCElement::one(h.algebra());
    let mut images = Vec::with_capacity(n);
    for x in gens {
        let d = h.delta(&h.gen(x)?)?;
        let anti = d.try_add(&d.flip(0).scale(&Scalar::int(-1)))?.expand_to_degree(1)?;
        let mut t: Tensor2 = vec![vec![Scalar::zero(); n]; n];
        for (key, c) in anti.iter() {
            let e0 = probe.exponents(&key[0]).ok_or_else(|| Error::Unsupported("exponential left after expansion".into()))?;
            let e1 = probe.exponents(&key[1]).ok_or_else(|| Error::Unsupported("exponential left after expansion".into()))?;
            let (s0, s1): (u32, u32) = (e0.iter().sum(), e1.iter().sum());
            if (s0, s1) != (1, 1) {
                return Err(Error::Mismatch(format!("Δ({x}) − σΔ({x}) has a term of bidegree ({s0}, {s1})")));
            }
            let a = position(e0.iter().position(|e| *e == 1).unwrap())?;
            let b = position(e1.iter().position(|e| *e == 1).unwrap())?;
            t[a][b] = &t[a][b] + c;
        }
        images.push(Bivector::from_tensor(&t)?);
    }
    Ok(Cocommutator { images })
}
