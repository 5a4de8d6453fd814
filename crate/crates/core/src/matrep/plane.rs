use std::sync::Arc;

use super::SymMatrix;
use crate::coeffring::{Param, Scalar};
use crate::error::{Error, Result};
use crate::ncengine::{NCElement, Presentation, TensorElement, TowerBuilder};
use crate::outcome::Outcome;

/// Coordinates `x1, x2` with `[x1, x2] = c₁x1 + c₂x2`.
#[derive(Clone, Debug)]
pub struct PlanePresentation {
    pres: Arc<Presentation>,
    c1: Scalar,
    c2: Scalar,
}

impl PlanePresentation {
    pub fn new(name: &str, c1: Scalar, c2: Scalar) -> Result<Self> {
        let base = TowerBuilder::new(name).poly("x1").poly("x2").build()?;
        let value = &NCElement::gen(&base, "x1")?.scale(&c1) + &NCElement::gen(&base, "x2")?.scale(&c2);
        let pres = base.with_rules(&[("x1", "x2", value)])?;
        Ok(PlanePresentation { pres, c1, c2 })
    }

    /// `[x1, x2] = w'(x1 + x2)`.
    pub fn nonstandard(wp: Scalar) -> Result<Self> {
        Self::new("plane-nonstandard", wp.clone(), wp)
    }

    /// `[x1, x2] = w' x1`.
    pub fn standard() -> Result<Self> {
        Self::new("plane-standard", Scalar::param(Param::Wp), Scalar::zero())
    }

    /// `[x1, x2] = v(x1 + j x2)` with `j² = s`.
    pub fn cayley_klein(s: i8) -> Result<Self> {
        let v = Scalar::param(Param::V);
        Self::new("plane-ck", v.clone(), &v * &Scalar::j(s))
    }

    pub fn pres(&self) -> &Arc<Presentation> {
        &self.pres
    }

    pub fn constants(&self) -> (&Scalar, &Scalar) {
        (&self.c1, &self.c2)
    }
}

/// `x'_i = G_{i0}⊗1 + G_{i1}⊗x1 + G_{i2}⊗x2` satisfies the plane relation in
/// `Fun ⊗ Plane`, the legs commuting with each other.
pub fn coaction_check(g: &SymMatrix, plane: &PlanePresentation) -> Result<Outcome> {
    if g.dim() != 3 {
        return Err(Error::Dimension(format!("coaction needs a 3×3 matrix, got {}×{}", g.dim(), g.dim())));
    }
    let p = plane.pres();
    let coords = [NCElement::one(p), NCElement::gen(p, "x1")?, NCElement::gen(p, "x2")?];
    let legs = [g.pres().clone(), p.clone()];
    let image = |i: usize| -> Result<TensorElement> {
        let mut acc = TensorElement::zero(&legs);
        for (k, x) in coords.iter().enumerate() {
            acc = acc.try_add(&TensorElement::pure(&[g.get(i, k).clone(), x.clone()]))?;
        }
        Ok(acc)
    };
    let (x1, x2) = (image(1)?, image(2)?);
    let lhs = x1.commutator(&x2)?;
    let (c1, c2) = plane.constants();
    let rhs = x1.scale(c1).try_add(&x2.scale(c2))?;
    let res = lhs.try_add(&rhs.scale(&Scalar::int(-1)))?;
    Ok(if res.is_zero() { Outcome::Pass } else { Outcome::fail("[x1', x2']", res) })
}

