use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use super::element::{NCElement, NcMono, Terms};
use super::presentation::Presentation;
use crate::coeffring::{fmt_coeff, Scalar};
use crate::error::{Error, Result};

type TKey = Vec<NcMono>;

/// Sum of tensor monomials `c · m₁ ⊗ … ⊗ m_k`. Legs may live in different
/// towers; a one-leg tensor is an algebra element and a zero-leg tensor a
/// scalar.
#[derive(Clone)]
pub struct TensorElement {
    legs: Vec<Arc<Presentation>>,
    terms: BTreeMap<TKey, Scalar>,
}

fn add_key(t: &mut BTreeMap<TKey, Scalar>, k: TKey, c: Scalar) {
    if c.is_zero() {
        return;
    }
    match t.get_mut(&k) {
        Some(old) => {
            *old += &c;
            if old.is_zero() {
                t.remove(&k);
            }
        }
        None => {
            t.insert(k, c);
        }
    }
}

impl PartialEq for TensorElement {
    fn eq(&self, other: &Self) -> bool {
        self.legs.len() == other.legs.len()
            && self.legs.iter().zip(&other.legs).all(|(a, b)| a.same_levels(b))
            && self.terms == other.terms
    }
}

impl Eq for TensorElement {}

impl fmt::Debug for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl TensorElement {
    pub fn zero(legs: &[Arc<Presentation>]) -> Self {
        TensorElement { legs: legs.to_vec(), terms: BTreeMap::new() }
    }

    pub fn one(legs: &[Arc<Presentation>]) -> Self {
        Self::constant(legs, Scalar::one())
    }

    pub fn constant(legs: &[Arc<Presentation>], c: Scalar) -> Self {
        let mut t = Self::zero(legs);
        let key = legs.iter().map(|p| NcMono::one(p.levels())).collect();
        add_key(&mut t.terms, key, c);
        t
    }

    /// `x₁ ⊗ x₂ ⊗ …`.
    pub fn pure(factors: &[NCElement]) -> Self {
        let legs: Vec<_> = factors.iter().map(|x| x.pres().clone()).collect();
        let mut acc: Vec<(TKey, Scalar)> = vec![(Vec::new(), Scalar::one())];
        for x in factors {
            let mut next = Vec::new();
            for (k, c) in &acc {
                for (m, d) in x.iter() {
                    let mut k2 = k.clone();
                    k2.push(m.clone());
                    next.push((k2, c * d));
                }
            }
            acc = next;
        }
        let mut out = Self::zero(&legs);
        for (k, c) in acc {
            add_key(&mut out.terms, k, c);
        }
        out
    }

    pub fn from_element(x: &NCElement) -> Self {
        Self::pure(std::slice::from_ref(x))
    }

    pub fn legs(&self) -> &[Arc<Presentation>] {
        &self.legs
    }

    pub fn power(&self) -> usize {
        self.legs.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&TKey, &Scalar)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, key: &[NcMono]) -> Scalar {
        self.terms.get(key).cloned().unwrap_or_default()
    }

    fn check_compatible(&self, other: &TensorElement) -> Result<()> {
        if self.legs.len() != other.legs.len() {
            return Err(Error::Dimension(format!(
                "tensor powers {} and {}",
                self.legs.len(),
                other.legs.len()
            )));
        }
        for (a, b) in self.legs.iter().zip(&other.legs) {
            if !a.same_levels(b) {
                return Err(Error::Mismatch(format!("{} vs {}", a.name(), b.name())));
            }
        }
        Ok(())
    }

    pub fn try_add(&self, other: &TensorElement) -> Result<TensorElement> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (k, c) in &other.terms {
            add_key(&mut out.terms, k.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Scalar) -> TensorElement {
        let mut out = Self::zero(&self.legs);
        for (k, d) in &self.terms {
            add_key(&mut out.terms, k.clone(), d * c);
        }
        out
    }

    /// Legwise product.
    pub fn mul(&self, other: &TensorElement) -> Result<TensorElement> {
        self.check_compatible(other)?;
        let mut out = Self::zero(&self.legs);
        for (ka, ca) in &self.terms {
            for (kb, cb) in &other.terms {
                let mut acc: Vec<(TKey, Scalar)> = vec![(Vec::new(), ca * cb)];
                for (i, pres) in self.legs.iter().enumerate() {
                    let prod = pres.mul_mono(&ka[i], &kb[i])?;
                    let mut next = Vec::with_capacity(acc.len() * prod.len());
                    for (k, c) in &acc {
                        for (m, d) in &prod {
                            let mut k2 = k.clone();
                            k2.push(m.clone());
                            next.push((k2, c * d));
                        }
                    }
                    acc = next;
                }
                for (k, c) in acc {
                    add_key(&mut out.terms, k, c);
                }
            }
        }
        Ok(out)
    }

    pub fn pow(&self, n: u32) -> Result<TensorElement> {
        let mut acc = Self::one(&self.legs);
        for _ in 0..n {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// `u ⊗ v` (legs concatenated).
    pub fn tensor(&self, other: &TensorElement) -> TensorElement {
        let mut legs = self.legs.clone();
        legs.extend(other.legs.iter().cloned());
        let mut out = Self::zero(&legs);
        for (ka, ca) in &self.terms {
            for (kb, cb) in &other.terms {
                let mut k = ka.clone();
                k.extend(kb.iter().cloned());
                add_key(&mut out.terms, k, ca * cb);
            }
        }
        out
    }

    /// Same terms over towers with identical levels (e.g. after rules
    /// changed).
    pub fn rebase(&self, legs: &[Arc<Presentation>]) -> Result<TensorElement> {
        let probe = TensorElement::zero(legs);
        probe.check_compatible(self)?;
        Ok(TensorElement { legs: legs.to_vec(), terms: self.terms.clone() })
    }

    /// Legwise commutator.
    pub fn commutator(&self, other: &TensorElement) -> Result<TensorElement> {
        self.mul(other)?.try_add(&-&other.mul(self)?)
    }

    /// The single leg as an algebra element.
    pub fn into_element(&self) -> Result<NCElement> {
        if self.legs.len() != 1 {
            return Err(Error::Dimension(format!("expected one leg, found {}", self.legs.len())));
        }
        let mut t = Terms::new();
        for (k, c) in &self.terms {
            super::element::add_term(&mut t, k[0].clone(), c.clone());
        }
        Ok(NCElement::from_terms(&self.legs[0], t))
    }

    /// The value of a zero-leg tensor.
    pub fn into_scalar(&self) -> Result<Scalar> {
        if !self.legs.is_empty() {
            return Err(Error::Dimension(format!("expected no legs, found {}", self.legs.len())));
        }
        Ok(self.terms.values().next().cloned().unwrap_or_default())
    }

    /// Replaces leg `i` by `f(monomial)`, a tensor with any number of legs
    /// over the towers `new_legs`.
    pub fn map_leg(
        &self,
        i: usize,
        new_legs: &[Arc<Presentation>],
        f: &dyn Fn(&NCElement) -> Result<TensorElement>,
    ) -> Result<TensorElement> {
        let mut legs = self.legs[..i].to_vec();
        legs.extend(new_legs.iter().cloned());
        legs.extend(self.legs[i + 1..].iter().cloned());
        let mut out = Self::zero(&legs);
        let mut cache: BTreeMap<NcMono, TensorElement> = BTreeMap::new();
        for (k, c) in &self.terms {
            let img = match cache.get(&k[i]) {
                Some(t) => t.clone(),
                None => {
                    let mut t = Terms::new();
                    super::element::add_term(&mut t, k[i].clone(), Scalar::one());
                    let img = f(&NCElement::from_terms(&self.legs[i], t))?;
                    cache.insert(k[i].clone(), img.clone());
                    img
                }
            };
            for (ki, ci) in &img.terms {
                let mut key = k[..i].to_vec();
                key.extend(ki.iter().cloned());
                key.extend(k[i + 1..].iter().cloned());
                add_key(&mut out.terms, key, c * ci);
            }
        }
        Ok(out)
    }

    /// Multiplies legs `i` and `i+1` together (they must share a tower).
    pub fn multiply_legs(&self, i: usize) -> Result<TensorElement> {
        if i + 1 >= self.legs.len() || self.legs[i].id() != self.legs[i + 1].id() {
            return Err(Error::Mismatch("adjacent legs must share one tower".into()));
        }
        let pres = &self.legs[i];
        let mut legs = self.legs[..=i].to_vec();
        legs.extend(self.legs[i + 2..].iter().cloned());
        let mut out = Self::zero(&legs);
        for (k, c) in &self.terms {
            let prod = pres.mul_mono(&k[i], &k[i + 1])?;
            for (m, d) in &prod {
                let mut key = k[..i].to_vec();
                key.push(m.clone());
                key.extend(k[i + 2..].iter().cloned());
                add_key(&mut out.terms, key, c * d);
            }
        }
        Ok(out)
    }

    /// Exchanges legs `i` and `i+1`.
    pub fn flip(&self, i: usize) -> TensorElement {
        let mut legs = self.legs.clone();
        legs.swap(i, i + 1);
        let mut out = Self::zero(&legs);
        for (k, c) in &self.terms {
            let mut key = k.clone();
            key.swap(i, i + 1);
            add_key(&mut out.terms, key, c.clone());
        }
        out
    }

    /// Applies a scalar map to every coefficient and exponent.
    pub fn map_scalars(&self, f: &dyn Fn(&Scalar) -> Result<Scalar>) -> Result<TensorElement> {
        let mut acc = Self::zero(&self.legs);
        for (k, c) in &self.terms {
            let mut term = TensorElement::constant(&[], f(c)?);
            for (m, pres) in k.iter().zip(&self.legs) {
                let mut t = Terms::new();
                super::element::add_term(&mut t, m.clone(), Scalar::one());
                let x = NCElement::from_terms(pres, t).map_scalars(f)?;
                term = term.tensor(&TensorElement::from_element(&x));
            }
            acc = acc.try_add(&term)?;
        }
        Ok(acc)
    }
}

impl std::ops::Add for &TensorElement {
    type Output = TensorElement;
    fn add(self, rhs: &TensorElement) -> TensorElement {
        self.try_add(rhs).expect("tensors of one shape")
    }
}

impl std::ops::Neg for &TensorElement {
    type Output = TensorElement;
    fn neg(self) -> TensorElement {
        self.scale(&Scalar::int(-1))
    }
}

impl std::ops::Sub for &TensorElement {
    type Output = TensorElement;
    fn sub(self, rhs: &TensorElement) -> TensorElement {
        self + &(-rhs)
    }
}

impl std::ops::Mul for &TensorElement {
    type Output = TensorElement;
    fn mul(self, rhs: &TensorElement) -> TensorElement {
        TensorElement::mul(self, rhs).expect("tensors of one shape")
    }
}

impl fmt::Display for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(k, c)| {
                let body: Vec<String> =
                    k.iter().zip(&self.legs).map(|(m, p)| m.render(p.levels())).collect();
                let body = body.join("⊗");
                if body.is_empty() {
                    fmt_coeff(c)
                } else if c.is_one() {
                    body
                } else {
                    format!("{}·{}", fmt_coeff(c), body)
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}
