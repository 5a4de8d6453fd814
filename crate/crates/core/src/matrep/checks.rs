use std::collections::BTreeMap;
use std::sync::Arc;

use rayon::prelude::*;

use super::{d_matrix, exp_numeric, specialize_t, NumericMatrix, SymMatrix};
use crate::coeffring::{Scalar, Var};
use crate::error::{Error, Result};
use crate::hopfcore::HopfPresentation;
use crate::liebialg::LieAlgebraSC;
use crate::ncengine::{Morphism, NCElement, Part, Presentation, TensorElement, TowerBuilder};
use crate::outcome::Outcome;

/// `Δ(G_{ij}) = Σ_k G_{ik} ⊗ G_{kj}` for every entry.
pub fn check_coproduct_multiplicativity(g: &SymMatrix, h: &HopfPresentation) -> Result<Outcome> {
    let u = h.algebra();
    let n = g.dim();
    for i in 0..n {
        for j in 0..n {
            let lhs = h.delta(&g.get(i, j).rebase(u)?)?;
            let mut rhs = TensorElement::zero(&[u.clone(), u.clone()]);
            for k in 0..n {
                rhs = rhs.try_add(&TensorElement::pure(&[g.get(i, k).rebase(u)?, g.get(k, j).rebase(u)?]))?;
            }
            let res = lhs.try_add(&rhs.scale(&Scalar::int(-1)))?;
            if !res.is_zero() {
                return Ok(Outcome::fail(format!("Δ(G[{}][{}])", i + 1, j + 1), res));
            }
        }
    }
    Ok(Outcome::Pass)
}

/// `1⊗1 + w(D(H)⊗D(A₊) − D(A₊)⊗D(H))`.
pub fn frt_r_matrix(w: &Scalar) -> NumericMatrix {
    let (h, ap) = (d_matrix("H").unwrap(), d_matrix("A+").unwrap());
    let wedge = h.kron(&ap).sub(&ap.kron(&h)).unwrap();
    NumericMatrix::identity(9).add(&wedge.scale(w)).unwrap()
}

/// `R T₁ T₂ = T₂ T₁ R` with `T₁ = T⊗I`, `T₂ = I⊗T`, entry by entry.
pub fn check_frt(r: &NumericMatrix, t: &SymMatrix) -> Result<Outcome> {
    let n = t.dim();
    let nn = n * n;
    if r.dim() != nn {
        return Err(Error::Dimension(format!("R is {}×{}, expected {nn}×{nn}", r.dim(), r.dim())));
    }
    let split = |x: usize| (x / n, x % n);
    // (T₁T₂)_{(i,a),(j,b)} = T_ij T_ab and (T₂T₁)_{(i,a),(j,b)} = T_ab T_ij.
    let t12 = |x: usize, y: usize| -> Result<NCElement> {
        let ((i, a), (j, b)) = (split(x), split(y));
        t.get(i, j).mul(t.get(a, b))
    };
    let t21 = |x: usize, y: usize| -> Result<NCElement> {
        let ((i, a), (j, b)) = (split(x), split(y));
        t.get(a, b).mul(t.get(i, j))
    };
    let cells: Vec<(usize, usize)> = (0..nn).flat_map(|x| (0..nn).map(move |y| (x, y))).collect();
    let results: Vec<Result<Option<(usize, usize, NCElement)>>> = cells
        .into_par_iter()
        .map(|(x, y)| {
            let mut res = NCElement::zero(t.pres());
            for z in 0..nn {
                if !r.get(x, z).is_zero() {
                    res = res.try_add(&t12(z, y)?.scale(r.get(x, z)))?;
                }
                if !r.get(z, y).is_zero() {
                    res = res.try_add(&t21(x, z)?.scale(&-r.get(z, y)))?;
                }
            }
            Ok((!res.is_zero()).then_some((x, y, res)))
        })
        .collect();
    for r in results {
        if let Some((x, y, res)) = r? {
            return Ok(Outcome::fail(format!("entry ({}, {})", x + 1, y + 1), res));
        }
    }
    Ok(Outcome::Pass)
}

fn rep_of<'a>(reps: &'a BTreeMap<Var, NumericMatrix>, v: Var) -> Result<&'a NumericMatrix> {
    reps.get(&v).ok_or_else(|| Error::UnknownGenerator(v.name().to_string()))
}

/// Image of `x` with every generator replaced by its matrix; exponentials
/// go through the spectral decomposition.
fn evaluate(x: &NCElement, reps: &BTreeMap<Var, NumericMatrix>, n: usize) -> Result<NumericMatrix> {
    let mut out = NumericMatrix::zero(n);
    for (m, c) in x.iter() {
        let mut acc = NumericMatrix::identity(n);
        for (part, level) in m.parts().iter().zip(x.pres().levels()) {
            match part {
                Part::Pow(e) => acc = acc.mul(&rep_of(reps, level.vars()[0])?.pow(*e))?,
                Part::Fn(f) => {
                    for (v, d) in f.degs() {
                        acc = acc.mul(&rep_of(reps, *v)?.pow(*d))?;
                    }
                    if f.has_exp() {
                        let mut arg = NumericMatrix::zero(n);
                        for (v, k) in f.exp().iter() {
                            arg = arg.add(&rep_of(reps, *v)?.scale(k))?;
                        }
                        acc = acc.mul(&exp_numeric(&arg)?)?;
                    }
                }
            }
        }
        out = out.add(&acc.scale(c))?;
    }
    Ok(out)
}

/// The matrices satisfy every commutation rule of `pres`.
pub fn check_representation(reps: &[(&str, NumericMatrix)], pres: &Arc<Presentation>) -> Result<Outcome> {
    let n = reps.first().map(|(_, m)| m.dim()).unwrap_or(0);
    let mut map = BTreeMap::new();
    for (name, m) in reps {
        if m.dim() != n {
            return Err(Error::Dimension(format!("{name} is {}×{}, expected {n}×{n}", m.dim(), m.dim())));
        }
        map.insert(pres.lookup(name)?, m.clone());
    }
    let gens = pres.generators();
    for (a, x) in gens.iter().enumerate() {
        for y in &gens[..a] {
            let (hi, lo) = if pres.level_of(*x)? >= pres.level_of(*y)? { (*x, *y) } else { (*y, *x) };
            let lhs = rep_of(&map, hi)?.commutator(rep_of(&map, lo)?)?;
            let rhs = evaluate(&pres.rule_element(hi, lo), &map, n)?;
            let res = lhs.sub(&rhs)?;
            if !res.is_zero() {
                return Ok(Outcome::fail(format!("[{hi}, {lo}]"), format!("\n{res}")));
            }
        }
    }
    Ok(Outcome::Pass)
}

/// The matrices close the brackets of `g` (matched by basis name).
pub fn check_lie_representation(reps: &[(&str, NumericMatrix)], g: &LieAlgebraSC) -> Result<Outcome> {
    let mut by_index = vec![None; g.dim()];
    for (name, m) in reps {
        by_index[g.index(name)?] = Some(m.clone());
    }
    let mats: Vec<NumericMatrix> = by_index
        .into_iter()
        .enumerate()
        .map(|(i, m)| m.ok_or_else(|| Error::UnknownGenerator(g.names()[i].clone())))
        .collect::<Result<_>>()?;
    let n = mats[0].dim();
    for i in 0..g.dim() {
        for j in i + 1..g.dim() {
            let mut rhs = NumericMatrix::zero(n);
            for (k, c) in g.bracket_basis(i, j).iter().enumerate() {
                rhs = rhs.add(&mats[k].scale(c))?;
            }
            let res = mats[i].commutator(&mats[j])?.sub(&rhs)?;
            if !res.is_zero() {
                return Ok(Outcome::fail(format!("[{}, {}]", g.names()[i], g.names()[j]), format!("\n{res}")));
            }
        }
    }
    Ok(Outcome::Pass)
}

/// Relations expressing the first factorization's symbols through the
/// second's, read from entries that isolate a symbol.
#[derive(Clone, Debug)]
pub struct BasisChange {
    pub pres: Arc<Presentation>,
    pub relations: Vec<(String, NCElement)>,
    pub outcome: Outcome,
}

/// Compares `Π exp(M_i x_i)` for two factorizations over commuting symbols.
pub fn verify_basis_change(
    first: &[(&str, NumericMatrix)],
    second: &[(&str, NumericMatrix)],
    n: usize,
) -> Result<BasisChange> {
    let mut names: Vec<&str> = Vec::new();
    for (x, _) in first.iter().chain(second) {
        if !names.contains(x) {
            names.push(x);
        }
    }
    let pres = TowerBuilder::new("basis-change").block(&names).build()?;
    let t1 = specialize_t(first, &pres, n)?;
    let t2 = specialize_t(second, &pres, n)?;
    let mut relations = Vec::new();
    for (x, _) in first {
        let g = NCElement::gen(&pres, x)?;
        let found = (0..n).flat_map(|a| (0..n).map(move |b| (a, b))).find(|(a, b)| *t1.get(*a, *b) == g);
        match found {
            Some((a, b)) => relations.push((x.to_string(), t2.get(a, b).clone())),
            None => {
                let outcome = Outcome::fail(format!("{x}"), "no entry of the first factorization isolates it");
                return Ok(BasisChange { pres, relations, outcome });
            }
        }
    }
    let mut phi = Morphism::algebra(&pres, &pres);
    for name in &names {
        let image = match relations.iter().find(|(x, _)| x == name) {
            Some((_, e)) => e.clone(),
            None => NCElement::gen(&pres, name)?,
        };
        phi.set_element(name, &image)?;
    }
    for a in 0..n {
        for b in 0..n {
            let res = &phi.apply_element(t1.get(a, b))? - t2.get(a, b);
            if !res.is_zero() {
                let outcome = Outcome::fail(format!("entry ({}, {})", a + 1, b + 1), res);
                return Ok(BasisChange { pres, relations, outcome });
            }
        }
    }
    Ok(BasisChange { pres, relations, outcome: Outcome::Pass })
}
