//! Slow reference multiplication: rewrite one adjacent out-of-order pair at
//! a time until the word is ordered. Used to cross-check the fast product.

use std::collections::HashMap;

use super::element::{add_scaled, add_term, NCElement, NcMono, Part, Terms};
use super::multiply::apply_derivation;
use super::presentation::{Level, Presentation};
use crate::coeffring::{ExpMono, ExpPoly, Scalar, Var};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
enum Atom {
    Gen(usize),
    Fn(usize, ExpMono),
}

impl Atom {
    fn level(&self) -> usize {
        match self {
            Atom::Gen(l) | Atom::Fn(l, _) => *l,
        }
    }
}

fn atoms(m: &NcMono) -> Vec<Atom> {
    let mut w = Vec::new();
    for (i, p) in m.parts().iter().enumerate() {
        match p {
            Part::Pow(e) => w.extend(std::iter::repeat(Atom::Gen(i)).take(*e as usize)),
            Part::Fn(f) if !f.is_one() => w.push(Atom::Fn(i, f.clone())),
            Part::Fn(_) => {}
        }
    }
    w
}

struct Rewriter<'a> {
    pres: &'a Presentation,
    memo: HashMap<Vec<Atom>, Terms>,
}

impl Rewriter<'_> {
    fn normalize(&mut self, word: Vec<Atom>) -> Result<Terms> {
        if let Some(hit) = self.memo.get(&word) {
            return Ok(hit.clone());
        }
        let out = self.normalize_uncached(&word)?;
        self.memo.insert(word, out.clone());
        Ok(out)
    }

    fn normalize_uncached(&mut self, word: &[Atom]) -> Result<Terms> {
        for k in 0..word.len().saturating_sub(1) {
            let (a, b) = (&word[k], &word[k + 1]);
            if let (Atom::Fn(la, f), Atom::Fn(lb, g)) = (a, b) {
                if la == lb {
                    let mut w = word[..k].to_vec();
                    w.push(Atom::Fn(*la, f.mul(g)));
                    w.extend_from_slice(&word[k + 2..]);
                    return self.normalize(w);
                }
            }
            if a.level() > b.level() {
                return self.exchange(word, k);
            }
        }
        let mut m = NcMono::one(self.pres.levels());
        for a in word {
            let i = a.level();
            let p = match (a, &m.parts()[i]) {
                (Atom::Gen(_), Part::Pow(e)) => Part::Pow(e + 1),
                (Atom::Fn(_, f), Part::Fn(g)) => Part::Fn(g.mul(f)),
                _ => unreachable!("atom kind follows level kind"),
            };
            m = m.with_part(i, p);
        }
        self.pres.check_cap(&m)?;
        let mut t = Terms::new();
        add_term(&mut t, m, Scalar::one());
        Ok(t)
    }

    /// `ab → ba + [a,b]` at position `k`.
    fn exchange(&mut self, word: &[Atom], k: usize) -> Result<Terms> {
        let (a, b) = (&word[k], &word[k + 1]);
        let splice = |mid: Vec<Atom>| {
            let mut w = word[..k].to_vec();
            w.extend(mid);
            w.extend_from_slice(&word[k + 2..]);
            w
        };
        let mut out = self.normalize(splice(vec![b.clone(), a.clone()]))?;
        let correction: Vec<(Vec<Atom>, Scalar)> = match (a, b) {
            (Atom::Gen(hi), Atom::Gen(lo)) => {
                let (g, h) = (self.gen(*hi), self.gen(*lo));
                match self.pres.rule(g, h) {
                    Some(r) => r.value.iter().map(|(m, c)| (atoms(m), c.clone())).collect(),
                    None => Vec::new(),
                }
            }
            (Atom::Gen(hi), Atom::Fn(lo, f)) => {
                let g = self.gen(*hi);
                let rules = self.block_rules(*lo, |v| (g, v))?;
                fn_atoms(*lo, &apply_derivation(&ExpPoly::from_mono(f.clone()), &rules))
            }
            (Atom::Fn(hi, f), Atom::Gen(lo)) => {
                let g = self.gen(*lo);
                let rules = self.block_rules(*hi, |v| (v, g))?;
                fn_atoms(*hi, &apply_derivation(&ExpPoly::from_mono(f.clone()), &rules))
            }
            (Atom::Fn(..), Atom::Fn(..)) => Vec::new(),
        };
        for (mid, c) in correction {
            let t = self.normalize(splice(mid))?;
            add_scaled(&mut out, &t, &c);
        }
        Ok(out)
    }

    fn gen(&self, level: usize) -> Var {
        match &self.pres.levels()[level] {
            Level::Poly(g) => *g,
            Level::Block(_) => unreachable!("polynomial level expected"),
        }
    }

    fn block_rules(
        &self,
        level: usize,
        key: impl Fn(Var) -> (Var, Var),
    ) -> Result<Vec<(Var, ExpPoly)>> {
        let mut out = Vec::new();
        for v in self.pres.levels()[level].vars() {
            let (a, b) = key(v);
            out.push((v, self.pres.block_rule(a, b, level)?));
        }
        Ok(out)
    }
}

fn fn_atoms(level: usize, f: &ExpPoly) -> Vec<(Vec<Atom>, Scalar)> {
    f.terms()
        .map(|(m, c)| {
            let w = if m.is_one() { Vec::new() } else { vec![Atom::Fn(level, m.clone())] };
            (w, c.clone())
        })
        .collect()
}

/// Product computed by single adjacent exchanges only.
pub fn oracle_multiply(x: &NCElement, y: &NCElement) -> Result<NCElement> {
    if x.pres().id() != y.pres().id() {
        return Err(Error::Mismatch(format!("{} vs {}", x.pres().name(), y.pres().name())));
    }
    let mut rw = Rewriter { pres: x.pres(), memo: HashMap::new() };
    let mut out = Terms::new();
    for (a, ca) in x.iter() {
        for (b, cb) in y.iter() {
            let mut w = atoms(a);
            w.extend(atoms(b));
            let t = rw.normalize(w)?;
            add_scaled(&mut out, &t, &(ca * cb));
        }
    }
    Ok(NCElement::from_terms(x.pres(), out))
}
