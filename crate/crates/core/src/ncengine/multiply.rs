//! Normal ordering by the binomial-derivation formulas.
//!
//! For a polynomial generator `g` above a block, `gᶜ f = Σ C(c,k) δᵏ(f) g^{c−k}`
//! with `δ(f) = Σ ∂ᵥf·[g,v]`; for a block above a polynomial generator,
//! `f gᵈ = Σ C(d,k) g^{d−k} Dᵏ(f)` with `D(f) = Σ ∂ᵥf·[v,g]`. Two polynomial
//! generators are exchanged one factor at a time.

use super::element::{add_scaled, add_term, NcMono, Part, Terms};
use super::presentation::{Level, Presentation};
use crate::coeffring::{ExpPoly, Scalar, Var};
use crate::error::Result;

fn binomial(n: u32, k: u32) -> Scalar {
    let mut b: i64 = 1;
    for i in 0..k as i64 {
        b = b * (n as i64 - i) / (i + 1);
    }
    Scalar::int(b)
}

impl Presentation {
    pub(crate) fn mul_terms(&self, x: &Terms, y: &Terms) -> Result<Terms> {
        let mut out = Terms::new();
        for (a, ca) in x {
            for (b, cb) in y {
                let prod = self.mul_mono(a, b)?;
                add_scaled(&mut out, &prod, &(ca * cb));
            }
        }
        Ok(out)
    }

    /// Product of two normal monomials.
    pub(crate) fn mul_mono(&self, a: &NcMono, b: &NcMono) -> Result<Terms> {
        let (Some(la), Some(fb)) = (a.last_nontrivial(), b.first_nontrivial()) else {
            let m = if a.is_one() { b.clone() } else { a.clone() };
            let mut t = Terms::new();
            add_term(&mut t, m, Scalar::one());
            return Ok(t);
        };
        if la <= fb {
            let m = merge(a, b, la);
            self.check_cap(&m)?;
            let mut t = Terms::new();
            add_term(&mut t, m, Scalar::one());
            return Ok(t);
        }
        let key = (a.clone(), b.clone());
        if let Some(hit) = self.mono_cache.lock().expect("cache lock").get(&key) {
            return Ok(hit.clone());
        }
        let head = a.with_part(la, a.trivial_part(la));
        let pushed = self.left_mul_part(la, &a.parts()[la], b)?;
        let mut out = Terms::new();
        for (m, c) in &pushed {
            add_scaled(&mut out, &self.mul_mono(&head, m)?, c);
        }
        self.mono_cache.lock().expect("cache lock").insert(key, out.clone());
        Ok(out)
    }

    /// `p·y` for a part `p` sitting at level `lvl`.
    fn left_mul_part(&self, lvl: usize, p: &Part, y: &NcMono) -> Result<Terms> {
        let single = NcMono::one(self.levels()).with_part(lvl, p.clone());
        let i = match y.first_nontrivial() {
            Some(i) if i < lvl => i,
            _ => {
                let m = merge(&single, y, lvl);
                self.check_cap(&m)?;
                let mut t = Terms::new();
                add_term(&mut t, m, Scalar::one());
                return Ok(t);
            }
        };
        let rest = y.with_part(i, y.trivial_part(i));
        let swapped = self.swap(lvl, p, i, &y.parts()[i])?;
        let mut out = Terms::new();
        for (m, c) in &swapped {
            add_scaled(&mut out, &self.mul_mono(m, &rest)?, c);
        }
        Ok(out)
    }

    /// Normal form of `p·q` with `p` at level `hi` above `q` at level `lo`.
    fn swap(&self, hi: usize, p: &Part, lo: usize, q: &Part) -> Result<Terms> {
        let key = (hi, p.clone(), lo, q.clone());
        if let Some(hit) = self.swap_cache.lock().expect("cache lock").get(&key) {
            return Ok(hit.clone());
        }
        let one = NcMono::one(self.levels());
        let out = match (p, q) {
            (Part::Pow(c), Part::Fn(f)) => {
                let g = self.poly_gen(hi);
                let rules = self.derivation_rules(lo, |v| (g, v))?;
                let mut out = Terms::new();
                let mut d = ExpPoly::from_mono(f.clone());
                for k in 0..=*c {
                    if k > 0 {
                        d = apply_derivation(&d, &rules);
                    }
                    if d.is_zero() {
                        break;
                    }
                    let base = one.with_part(hi, Part::Pow(c - k));
                    for (m, s) in d.terms() {
                        add_term(&mut out, base.with_part(lo, Part::Fn(m.clone())), s * &binomial(*c, k));
                    }
                }
                out
            }
            (Part::Fn(f), Part::Pow(e)) => {
                let g = self.poly_gen(lo);
                let rules = self.derivation_rules(hi, |v| (v, g))?;
                let mut out = Terms::new();
                let mut d = ExpPoly::from_mono(f.clone());
                for k in 0..=*e {
                    if k > 0 {
                        d = apply_derivation(&d, &rules);
                    }
                    if d.is_zero() {
                        break;
                    }
                    let base = one.with_part(lo, Part::Pow(e - k));
                    for (m, s) in d.terms() {
                        add_term(&mut out, base.with_part(hi, Part::Fn(m.clone())), s * &binomial(*e, k));
                    }
                }
                out
            }
            (Part::Fn(_), Part::Fn(_)) => {
                let mut out = Terms::new();
                add_term(&mut out, one.with_part(lo, q.clone()).with_part(hi, p.clone()), Scalar::one());
                out
            }
            (Part::Pow(c), Part::Pow(d)) => self.swap_polys(hi, *c, lo, *d)?,
        };
        self.swap_cache.lock().expect("cache lock").insert(key, out.clone());
        Ok(out)
    }

    fn swap_polys(&self, hi: usize, c: u32, lo: usize, d: u32) -> Result<Terms> {
        let one = NcMono::one(self.levels());
        let g_hi = |e: u32| one.with_part(hi, Part::Pow(e));
        let g_lo = |e: u32| one.with_part(lo, Part::Pow(e));
        if c > 1 {
            let inner = self.swap(hi, &Part::Pow(1), lo, &Part::Pow(d))?;
            let mut out = Terms::new();
            for (m, s) in &inner {
                add_scaled(&mut out, &self.mul_mono(&g_hi(c - 1), m)?, s);
            }
            return Ok(out);
        }
        // g·hᵈ = h·(g·h^{d−1}) + [g,h]·h^{d−1}
        let rule = self
            .rule(self.poly_gen(hi), self.poly_gen(lo))
            .map(|r| r.value.clone())
            .unwrap_or_default();
        let mut out = Terms::new();
        let inner = if d == 1 {
            let mut t = Terms::new();
            add_term(&mut t, g_hi(1), Scalar::one());
            t
        } else {
            self.swap(hi, &Part::Pow(1), lo, &Part::Pow(d - 1))?
        };
        for (m, s) in &inner {
            add_scaled(&mut out, &self.mul_mono(&g_lo(1), m)?, s);
        }
        for (m, s) in &rule {
            add_scaled(&mut out, &self.mul_mono(m, &g_lo(d - 1))?, s);
        }
        Ok(out)
    }

    fn poly_gen(&self, level: usize) -> Var {
        match &self.levels()[level] {
            Level::Poly(g) => *g,
            Level::Block(_) => unreachable!("polynomial level expected"),
        }
    }

    /// `(v, rule value)` for every generator `v` of the block at `level`,
    /// where the rule key is produced by `key(v)`.
    fn derivation_rules(&self, level: usize, key: impl Fn(Var) -> (Var, Var)) -> Result<Vec<(Var, ExpPoly)>> {
        let mut out = Vec::new();
        for v in self.vars_of_level(level) {
            let (a, b) = key(v);
            let r = self.block_rule(a, b, level)?;
            if !r.is_zero() {
                out.push((v, r));
            }
        }
        Ok(out)
    }
}

fn merge(a: &NcMono, b: &NcMono, at: usize) -> NcMono {
    let mut parts = Vec::with_capacity(a.parts().len());
    for (i, (x, y)) in a.parts().iter().zip(b.parts()).enumerate() {
        let p = if i < at {
            x.clone()
        } else if i > at {
            y.clone()
        } else {
            match (x, y) {
                (Part::Pow(e), Part::Pow(f)) => Part::Pow(e + f),
                (Part::Fn(e), Part::Fn(f)) => Part::Fn(e.mul(f)),
                _ => unreachable!("part kind follows level kind"),
            }
        };
        parts.push(p);
    }
    NcMono(parts)
}

pub(crate) fn apply_derivation(f: &ExpPoly, rules: &[(Var, ExpPoly)]) -> ExpPoly {
    let mut out = ExpPoly::zero();
    for (v, r) in rules {
        let d = f.partial_derivative(*v);
        if !d.is_zero() {
            out = &out + &(&d * r);
        }
    }
    out
}
