use super::element::{add_term, assemble, Factor, NCElement, NcMono, Part, Terms};
use super::tensor::TensorElement;
use crate::coeffring::{ExpPoly, Param, Scalar};
use crate::error::{Error, Result};
use std::sync::Arc;

use super::presentation::Presentation;

/// A single monomial with every `p`-dependent exponential expanded up to
/// `p^order`.
fn expand_mono(pres: &Arc<Presentation>, m: &NcMono, p: Param, order: i32) -> Result<NCElement> {
    let mut factors = Vec::new();
    for part in m.parts() {
        factors.push(match part {
            Part::Pow(e) => Factor::Pow(*e),
            Part::Fn(f) => Factor::Poly(ExpPoly::from_mono(f.clone()).expand_in_param(p, order)?),
        });
    }
    Ok(NCElement::from_terms(pres, assemble(&Scalar::one(), factors)))
}

/// Orders of `p` needed so that every non-positive power is exact.
fn needed_order(c: &Scalar, p: Param) -> i32 {
    c.power_range(p).map_or(0, |(lo, _)| (-lo).max(0))
}

fn check_finite<'a>(p: Param, mut it: impl Iterator<Item = &'a Scalar>, what: impl Fn() -> String) -> Result<()> {
    match it.find(|c| matches!(c.power_range(p), Some((lo, _)) if lo < 0)) {
        Some(c) => Err(Error::DivergentLimit(format!("{} in {}", crate::coeffring::fmt_coeff(c), what()))),
        None => Ok(()),
    }
}

impl NCElement {
    /// Taylor-expands every exponential and drops words of total degree
    /// above `d`.
    pub fn expand_to_degree(&self, d: u32) -> NCElement {
        let mut out = Terms::new();
        for (m, c) in self.iter() {
            if m.poly_degree() > d {
                continue;
            }
            let factors = m
                .parts()
                .iter()
                .map(|p| match p {
                    Part::Pow(e) => Factor::Pow(*e),
                    Part::Fn(f) => Factor::Poly(ExpPoly::from_mono(f.clone()).expand_series(d)),
                })
                .collect();
            for (m2, c2) in assemble(c, factors) {
                if m2.total_degree() <= d {
                    add_term(&mut out, m2, c2);
                }
            }
        }
        NCElement::from_terms(self.pres(), out)
    }

    /// Exponent of each generator (tower order) in a polynomial word.
    pub fn exponents(&self, m: &NcMono) -> Option<Vec<u32>> {
        let mut out = Vec::new();
        for (p, level) in m.parts().iter().zip(self.pres().levels()) {
            match p {
                Part::Pow(e) => out.push(*e),
                Part::Fn(f) => {
                    if f.has_exp() {
                        return None;
                    }
                    out.extend(level.vars().iter().map(|v| f.deg(*v)));
                }
            }
        }
        Some(out)
    }

    /// The polynomial word with the given per-generator exponents.
    pub fn word_mono(&self, exps: &[u32]) -> Result<NcMono> {
        let gens = self.pres().generators();
        let mut x = NCElement::one(self.pres());
        for (g, e) in gens.iter().zip(exps) {
            x = x.mul(&NCElement::gen(self.pres(), g.name())?.pow(*e)?)?;
        }
        let m = x.iter().next().map(|(m, _)| m.clone()).expect("words are nonzero");
        Ok(m)
    }

    /// Coefficient table keyed by per-generator exponents; words carrying
    /// exponentials are skipped.
    pub fn table(&self) -> Vec<(Vec<u32>, Scalar)> {
        self.iter().filter_map(|(m, c)| self.exponents(m).map(|e| (e, c.clone()))).collect()
    }
}

impl NCElement {
    /// Value at `p → 0`, expanding `p`-dependent exponentials; fails if a
    /// negative power of `p` survives.
    pub fn limit_param(&self, p: Param) -> Result<NCElement> {
        let mut acc = NCElement::zero(self.pres());
        for (m, c) in self.iter() {
            let e = expand_mono(self.pres(), m, p, needed_order(c, p))?;
            acc = acc.try_add(&e.scale(c))?;
        }
        check_finite(p, acc.iter().map(|(_, c)| c), || acc.to_string())?;
        acc.map_scalars(&|s| Ok(s.coeff_of(p, 0)))
    }
}

impl TensorElement {
    /// Legwise-expanded [`NCElement::limit_param`].
    pub fn limit_param(&self, p: Param) -> Result<TensorElement> {
        let mut acc = TensorElement::zero(self.legs());
        for (key, c) in self.iter() {
            let order = needed_order(c, p);
            let mut term = TensorElement::constant(&[], c.clone());
            for (m, pres) in key.iter().zip(self.legs()) {
                term = term.tensor(&TensorElement::from_element(&expand_mono(pres, m, p, order)?));
            }
            acc = acc.try_add(&term)?;
        }
        check_finite(p, acc.iter().map(|(_, c)| c), || acc.to_string())?;
        acc.map_scalars(&|s| Ok(s.coeff_of(p, 0)))
    }

    /// Legwise [`NCElement::expand_to_degree`].
    pub fn expand_to_degree(&self, d: u32) -> Result<TensorElement> {
        let mut acc = self.clone();
        for i in 0..self.power() {
            let pres = self.legs()[i].clone();
            acc = acc.map_leg(i, std::slice::from_ref(&pres), &|x| {
                Ok(TensorElement::from_element(&x.expand_to_degree(d)))
            })?;
        }
        Ok(acc)
    }
}
