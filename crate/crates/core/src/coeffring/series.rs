//! Series expansion, parameter limits and substitutions on [`ExpPoly`].

use std::collections::BTreeMap;

use super::expoly::{inv_factorial, ExpMono, ExpPoly, LinForm, Var};
use super::scalar::{Param, Scalar};
use crate::error::{Error, Result};

impl ExpPoly {
    /// Replaces every exponential by its Taylor polynomial and drops all
    /// terms of total variable degree above `order`.
    pub fn expand_series(&self, order: u32) -> ExpPoly {
        let mut out = ExpPoly::zero();
        for (m, c) in self.terms() {
            let base = m.total_degree();
            if base > order {
                continue;
            }
            let poly = ExpPoly::from_mono(ExpMono::new(m.degs().clone(), LinForm::zero())).scale(c);
            if !m.has_exp() {
                out = &out + &poly;
                continue;
            }
            let l = m.exp().to_poly();
            let mut lk = ExpPoly::one();
            for k in 0..=(order - base) {
                if k > 0 {
                    lk = &lk * &l;
                }
                let term = (&poly * &lk).scale(&Scalar::from_q(inv_factorial(k)));
                out = &out + &term;
            }
        }
        out.truncate_degree(order)
    }

    /// Drops terms of total variable degree above `order`.
    pub fn truncate_degree(&self, order: u32) -> ExpPoly {
        let mut out = ExpPoly::zero();
        for (m, c) in self.terms() {
            if m.total_degree() <= order {
                out.add_term(m.clone(), c.clone());
            }
        }
        out
    }

    /// Expands every exponential whose exponent carries positive powers of
    /// `p` and keeps terms up to `p^order`. Exponentials free of `p` stay
    /// formal.
    pub fn expand_in_param(&self, p: Param, order: i32) -> Result<ExpPoly> {
        let mut out = ExpPoly::zero();
        for (m, c) in self.terms() {
            let Some((cmin, _)) = c.power_range(p) else { continue };
            let mono = ExpPoly::from_mono(ExpMono::new(m.degs().clone(), LinForm::zero()));
            let mut stay = LinForm::zero();
            let mut expand = LinForm::zero();
            for (x, s) in m.exp().iter() {
                match s.power_range(p) {
                    Some((0, 0)) => stay = stay.add(&LinForm::single(*x, s.clone())),
                    Some((lo, _)) if lo >= 1 => expand = expand.add(&LinForm::single(*x, s.clone())),
                    _ => {
                        return Err(Error::Unsupported(format!(
                            "exponent coefficient {s} of {x} is not expandable in {}",
                            p.name()
                        )))
                    }
                }
            }
            let fixed = &mono * &ExpPoly::exp(&stay);
            let fixed = fixed.scale(c);
            if expand.is_zero() {
                out = &out + &fixed;
                continue;
            }
            let l = expand.to_poly();
            let kmax = order - cmin;
            let mut lk = ExpPoly::one();
            for k in 0..=kmax.max(0) {
                if k > 0 {
                    lk = &lk * &l;
                }
                out = &out + &(&fixed * &lk).scale(&Scalar::from_q(inv_factorial(k as u32)));
            }
        }
        out.map_scalars(|s| Ok(s.truncate(p, order)))
    }

    /// The `p⁰` coefficient after expanding in `p`; errors if a negative
    /// power of `p` survives.
    pub fn limit_param(&self, p: Param) -> Result<ExpPoly> {
        let g = self.expand_in_param(p, 0)?;
        for (m, c) in g.terms() {
            if let Some((lo, _)) = c.power_range(p) {
                if lo < 0 {
                    let mut single = ExpPoly::zero();
                    single.add_term(m.clone(), c.clone());
                    return Err(Error::DivergentLimit(single.to_string()));
                }
            }
        }
        g.map_scalars(|s| Ok(s.coeff_of(p, 0)))
    }

    /// Applies `f` to all coefficients and exponent coefficients, rebuilding
    /// canonical form.
    pub fn map_scalars(&self, f: impl Fn(&Scalar) -> Result<Scalar>) -> Result<ExpPoly> {
        let mut out = ExpPoly::zero();
        for (m, c) in self.terms() {
            let lin = LinForm::from_pairs(
                m.exp().iter().map(|(x, s)| Ok((*x, f(s)?))).collect::<Result<Vec<_>>>()?,
            );
            let term = &ExpPoly::from_mono(ExpMono::new(m.degs().clone(), LinForm::zero())) * &ExpPoly::exp(&lin);
            out = &out + &term.scale(&f(c)?);
        }
        Ok(out)
    }

    /// Replaces a parameter by a scalar everywhere.
    pub fn subst_param(&self, p: Param, image: &Scalar) -> Result<ExpPoly> {
        self.map_scalars(|s| s.subst_param(p, image))
    }

    /// Linear change of variables `x ↦ Σ c_y · y`; unmapped variables stay.
    pub fn substitute(&self, map: &BTreeMap<Var, LinForm>) -> Result<ExpPoly> {
        let images: BTreeMap<Var, ExpPoly> = map.iter().map(|(x, l)| (*x, l.to_poly())).collect();
        self.compose(&images)
    }

    /// General substitution `x ↦ image(x)`. Variables occurring in an
    /// exponent must map to linear forms.
    pub fn compose(&self, map: &BTreeMap<Var, ExpPoly>) -> Result<ExpPoly> {
        let mut out = ExpPoly::zero();
        for (m, c) in self.terms() {
            let mut term = ExpPoly::constant(c.clone());
            for (x, d) in m.degs() {
                let img = match map.get(x) {
                    Some(p) => p.pow(*d),
                    None => ExpPoly::from_mono(ExpMono::var_pow(*x, *d)),
                };
                term = term.try_mul(&img)?;
            }
            let mut lin = LinForm::zero();
            for (x, s) in m.exp().iter() {
                match map.get(x) {
                    None => lin = lin.add(&LinForm::single(*x, s.clone())),
                    Some(img) => {
                        let l = img.as_linear().ok_or_else(|| {
                            Error::UnsupportedSubstitution(format!("{x} ↦ {img} inside an exponential"))
                        })?;
                        lin = lin.add(&l.scale(s));
                    }
                }
            }
            term = term.try_mul(&ExpPoly::exp(&lin))?;
            out = &out + &term;
        }
        Ok(out)
    }

    /// Coefficient of `p^k`.
    pub fn param_coeff(&self, p: Param, k: i32) -> ExpPoly {
        self.map_scalars(|s| Ok(s.coeff_of(p, k))).expect("coefficient extraction cannot fail")
    }
}

/// `cosh(c·x)` as exponentials.
pub fn cosh(x: Var, c: Scalar) -> ExpPoly {
    let half = Scalar::rat(1, 2);
    (&ExpPoly::exp_var(x, c.clone()) + &ExpPoly::exp_var(x, -&c)).scale(&half)
}

/// `sinh(c·x)` as exponentials.
pub fn sinh(x: Var, c: Scalar) -> ExpPoly {
    let half = Scalar::rat(1, 2);
    (&ExpPoly::exp_var(x, c.clone()) - &ExpPoly::exp_var(x, -&c)).scale(&half)
}

/// `sinh(j·c·x)/j` in a ring with `j² = s`; exact polynomial `c·x` when
/// `s = 0`.
pub fn sinh_j_over_j(x: Var, c: Scalar, s: i8) -> ExpPoly {
    if s == 0 {
        return ExpPoly::var(x).scale(&c);
    }
    let j = Scalar::j(s);
    let jinv = j.inverse().expect("j invertible for s ≠ 0");
    sinh(x, &j * &c).scale(&jinv)
}

/// `(cosh(j·c·x) − 1)/j²`; exact `c²x²/2` when `s = 0`.
pub fn cosh_j_minus_one_over_j2(x: Var, c: Scalar, s: i8) -> ExpPoly {
    if s == 0 {
        return ExpPoly::from_mono(ExpMono::var_pow(x, 2)).scale(&(&(&c * &c) * &Scalar::rat(1, 2)));
    }
    let j = Scalar::j(s);
    (&cosh(x, &j * &c) - &ExpPoly::one()).scale(&Scalar::int(s as i64))
}

/// `cosh(j·c·x)`.
pub fn cosh_j(x: Var, c: Scalar, s: i8) -> ExpPoly {
    cosh(x, &Scalar::j(s) * &c)
}
