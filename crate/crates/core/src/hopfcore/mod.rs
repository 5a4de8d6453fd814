//! Hopf algebra presentations on top of normal-ordering towers, the
//! catalog, and verifiers for the Hopf axioms.

mod axioms;
mod catalog;
mod contraction;
mod substitution;
#[cfg(test)]
mod tests;

use std::collections::BTreeMap;
use std::sync::Arc;

pub use axioms::{
    check_all, check_antipode, check_bialgebra_compatibility, check_centrality, check_coassociativity,
    check_counit, test_monomials,
};
pub use catalog::{catalog, catalog_entry, catalog_get, casimir_pk, CatalogEntry, Golden, CATALOG_KEYS};
pub use contraction::{contract_presentation, Contraction};
pub use substitution::{nonstandard_relations, verify_nonstandard_substitution, verify_unit_substitution};

use crate::coeffring::{Param, Scalar, Var};
use crate::error::{Error, Result};
use crate::ncengine::{Morphism, NCElement, Presentation, TensorElement};

/// Algebra plus coproduct, counit and antipode on generators.
#[derive(Clone, Debug)]
pub struct HopfPresentation {
    name: String,
    algebra: Arc<Presentation>,
    coproduct: BTreeMap<Var, TensorElement>,
    counit: BTreeMap<Var, Scalar>,
    antipode: BTreeMap<Var, NCElement>,
    param: Param,
    s: Option<i8>,
}

impl HopfPresentation {
    /// Empty structure maps; fill with [`HopfPresentation::set`].
    pub fn new(name: &str, algebra: &Arc<Presentation>, param: Param, s: Option<i8>) -> Self {
        HopfPresentation {
            name: name.into(),
            algebra: algebra.clone(),
            coproduct: BTreeMap::new(),
            counit: BTreeMap::new(),
            antipode: BTreeMap::new(),
            param,
            s,
        }
    }

    pub fn set(&mut self, gen: &str, delta: TensorElement, eps: Scalar, gamma: NCElement) -> Result<()> {
        let v = self.algebra.lookup(gen)?;
        let sq = [self.algebra.clone(), self.algebra.clone()];
        self.coproduct.insert(v, delta.rebase(&sq)?);
        self.counit.insert(v, eps);
        self.antipode.insert(v, gamma.rebase(&self.algebra)?);
        Ok(())
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn algebra(&self) -> &Arc<Presentation> {
        &self.algebra
    }

    /// The deformation parameter.
    pub fn param(&self) -> Param {
        self.param
    }

    /// `j² = s` for the Cayley–Klein family.
    pub fn s(&self) -> Option<i8> {
        self.s
    }

    pub fn gen(&self, name: &str) -> Result<NCElement> {
        NCElement::gen(&self.algebra, name)
    }

    pub fn coproduct_of(&self, gen: &str) -> Result<&TensorElement> {
        let v = self.algebra.lookup(gen)?;
        self.coproduct.get(&v).ok_or_else(|| Error::UnknownGenerator(format!("no coproduct for {gen}")))
    }

    pub fn counit_of(&self, gen: &str) -> Result<&Scalar> {
        let v = self.algebra.lookup(gen)?;
        self.counit.get(&v).ok_or_else(|| Error::UnknownGenerator(format!("no counit for {gen}")))
    }

    pub fn antipode_of(&self, gen: &str) -> Result<&NCElement> {
        let v = self.algebra.lookup(gen)?;
        self.antipode.get(&v).ok_or_else(|| Error::UnknownGenerator(format!("no antipode for {gen}")))
    }

    fn square(&self) -> [Arc<Presentation>; 2] {
        [self.algebra.clone(), self.algebra.clone()]
    }

    pub fn coproduct(&self) -> Morphism {
        let mut m = Morphism::new(&self.algebra, &self.square(), false);
        for (v, t) in &self.coproduct {
            m.set(v.name(), t.clone()).expect("images have two legs");
        }
        m
    }

    pub fn counit(&self) -> Morphism {
        let mut m = Morphism::new(&self.algebra, &[], false);
        for (v, c) in &self.counit {
            m.set_scalar(v.name(), c.clone()).expect("scalar image");
        }
        m
    }

    pub fn antipode(&self) -> Morphism {
        let mut m = Morphism::new(&self.algebra, std::slice::from_ref(&self.algebra), true);
        for (v, x) in &self.antipode {
            m.set_element(v.name(), x).expect("one-leg image");
        }
        m
    }

    pub fn delta(&self, x: &NCElement) -> Result<TensorElement> {
        self.coproduct().apply(x)
    }

    pub fn epsilon(&self, x: &NCElement) -> Result<Scalar> {
        self.counit().apply_scalar(x)
    }

    pub fn gamma(&self, x: &NCElement) -> Result<NCElement> {
        self.antipode().apply_element(x)
    }

    /// Same structure maps over a tower with the same levels but other
    /// rules.
    pub fn with_algebra(&self, algebra: &Arc<Presentation>) -> Result<HopfPresentation> {
        let mut out = HopfPresentation::new(&self.name, algebra, self.param, self.s);
        for v in self.algebra.generators() {
            out.set(
                v.name(),
                self.coproduct_of(v.name())?.clone(),
                self.counit_of(v.name())?.clone(),
                self.antipode_of(v.name())?.clone(),
            )?;
        }
        Ok(out)
    }

    /// Replaces the coproduct of one generator.
    pub fn with_coproduct(&self, gen: &str, delta: TensorElement) -> Result<HopfPresentation> {
        let mut out = self.clone();
        let v = self.algebra.lookup(gen)?;
        out.coproduct.insert(v, delta.rebase(&self.square())?);
        Ok(out)
    }

    pub fn renamed(&self, name: &str) -> HopfPresentation {
        HopfPresentation { name: name.into(), ..self.clone() }
    }
}
