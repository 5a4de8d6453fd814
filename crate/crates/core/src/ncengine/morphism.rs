use std::collections::BTreeMap;
use std::sync::Arc;

use super::element::{NCElement, Part};
use super::presentation::{Level, Presentation};
use super::tensor::TensorElement;
use crate::coeffring::{ExpPoly, LinForm, Param, Scalar, Var};
use crate::error::{Error, Result};

/// Extension of a generator map to the whole algebra, multiplicatively or
/// anti-multiplicatively, into a tensor power (one leg: an algebra; no legs:
/// scalars).
#[derive(Clone, Debug)]
pub struct Morphism {
    source: Arc<Presentation>,
    target: Vec<Arc<Presentation>>,
    images: BTreeMap<Var, TensorElement>,
    anti: bool,
    params: Vec<(Param, Scalar)>,
}

impl Morphism {
    pub fn new(source: &Arc<Presentation>, target: &[Arc<Presentation>], anti: bool) -> Self {
        Morphism { source: source.clone(), target: target.to_vec(), images: BTreeMap::new(), anti, params: Vec::new() }
    }

    /// Homomorphism into a single tower.
    pub fn algebra(source: &Arc<Presentation>, target: &Arc<Presentation>) -> Self {
        Self::new(source, std::slice::from_ref(target), false)
    }

    pub fn source(&self) -> &Arc<Presentation> {
        &self.source
    }

    pub fn target(&self) -> &[Arc<Presentation>] {
        &self.target
    }

    pub fn is_anti(&self) -> bool {
        self.anti
    }

    pub fn set(&mut self, gen: &str, image: TensorElement) -> Result<()> {
        let v = self.source.lookup(gen)?;
        if image.power() != self.target.len() {
            return Err(Error::Dimension(format!("image of {gen} has {} legs", image.power())));
        }
        self.images.insert(v, image);
        Ok(())
    }

    pub fn set_element(&mut self, gen: &str, image: &NCElement) -> Result<()> {
        self.set(gen, TensorElement::from_element(image))
    }

    pub fn set_scalar(&mut self, gen: &str, s: Scalar) -> Result<()> {
        self.set(gen, TensorElement::constant(&[], s))
    }

    /// Also substitute a deformation parameter in coefficients.
    pub fn with_param(mut self, p: Param, image: Scalar) -> Self {
        self.params.push((p, image));
        self
    }

    pub fn image(&self, g: Var) -> Result<&TensorElement> {
        self.images.get(&g).ok_or_else(|| Error::UnknownGenerator(format!("{g} has no image")))
    }

    fn map_scalar(&self, s: &Scalar) -> Result<Scalar> {
        let mut out = s.clone();
        for (p, img) in &self.params {
            out = out.subst_param(*p, img)?;
        }
        Ok(out)
    }

    /// `e^{Σ c_v·image(v)}` for images that are linear in commuting
    /// generators, one linear form per leg.
    fn exp_image(&self, lin: &LinForm) -> Result<TensorElement> {
        let mut per_leg: Vec<LinForm> = vec![LinForm::zero(); self.target.len()];
        for (v, c) in lin.iter() {
            let c = self.map_scalar(c)?;
            let img = self.image(*v)?;
            for (key, d) in img.iter() {
                let nontrivial: Vec<usize> = (0..key.len()).filter(|&i| !key[i].is_one()).collect();
                let term = match nontrivial.as_slice() {
                    [i] => {
                        let lvl = &self.target[*i].levels();
                        let mut found = None;
                        for (pidx, p) in key[*i].parts().iter().enumerate() {
                            if let (Part::Fn(m), Level::Block(_)) = (p, &lvl[pidx]) {
                                if !m.is_one() {
                                    found = ExpPoly::from_mono(m.clone()).as_linear();
                                }
                            }
                        }
                        let single_part = key[*i].parts().iter().filter(|p| !p.is_trivial()).count() == 1;
                        match found {
                            Some(l) if single_part => Some((*i, l)),
                            _ => None,
                        }
                    }
                    _ => None,
                };
                let Some((i, l)) = term else {
                    return Err(Error::Unsupported(format!(
                        "exponential of {v} needs a linear image in commuting generators, got {img}"
                    )));
                };
                per_leg[i] = per_leg[i].add(&l.scale(&(&c * d)));
            }
        }
        let mut out = TensorElement::constant(&[], Scalar::one());
        for (i, l) in per_leg.iter().enumerate() {
            let e = NCElement::func(&self.target[i], &ExpPoly::exp(l))?;
            out = out.tensor(&TensorElement::from_element(&e));
        }
        Ok(out)
    }

    /// Image of an element.
    pub fn apply(&self, x: &NCElement) -> Result<TensorElement> {
        if !x.pres().same_levels(&self.source) {
            return Err(Error::Mismatch(format!("{} vs {}", x.pres().name(), self.source.name())));
        }
        let mut out = TensorElement::zero(&self.target);
        let mut cache: BTreeMap<(usize, Part), TensorElement> = BTreeMap::new();
        for (m, c) in x.iter() {
            let mut factors = Vec::new();
            for (i, p) in m.parts().iter().enumerate() {
                if p.is_trivial() {
                    continue;
                }
                let key = (i, p.clone());
                let img = match cache.get(&key) {
                    Some(t) => t.clone(),
                    None => {
                        let t = self.part_image(i, p)?;
                        cache.insert(key, t.clone());
                        t
                    }
                };
                factors.push(img);
            }
            if self.anti {
                factors.reverse();
            }
            let mut term = TensorElement::constant(&self.target, self.map_scalar(c)?);
            for f in &factors {
                term = term.mul(f)?;
            }
            out = out.try_add(&term)?;
        }
        Ok(out)
    }

    fn part_image(&self, level: usize, p: &Part) -> Result<TensorElement> {
        match (p, &self.source.levels()[level]) {
            (Part::Pow(e), Level::Poly(g)) => self.image(*g)?.pow(*e),
            (Part::Fn(m), Level::Block(_)) => {
                let mut acc = TensorElement::one(&self.target);
                for (v, d) in m.degs() {
                    acc = acc.mul(&self.image(*v)?.pow(*d)?)?;
                }
                if m.has_exp() {
                    acc = acc.mul(&self.exp_image(m.exp())?)?;
                }
                Ok(acc)
            }
            _ => unreachable!("part kind follows level kind"),
        }
    }

    /// Image of an element under a map into one tower.
    pub fn apply_element(&self, x: &NCElement) -> Result<NCElement> {
        self.apply(x)?.into_element()
    }

    /// Image of an element under a map into scalars.
    pub fn apply_scalar(&self, x: &NCElement) -> Result<Scalar> {
        self.apply(x)?.into_scalar()
    }
}
