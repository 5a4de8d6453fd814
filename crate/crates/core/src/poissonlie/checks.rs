use std::collections::BTreeMap;

use num_traits::Zero;

use super::PoissonStructure;
use crate::coeffring::{ExpPoly, LinForm, Scalar, Var, NPARAMS, Q};
use crate::error::{Error, Result};
use crate::hopfcore::HopfPresentation;
use crate::matrep::{check_coproduct_multiplicativity, SymMatrix};
use crate::ncengine::{NCElement, Part};
use crate::outcome::Outcome;

/// Reads a normal-ordered element as a commutative function, renaming
/// generators through `rename` (unlisted ones keep their names).
pub fn to_function(x: &NCElement, rename: &BTreeMap<Var, Var>) -> Result<ExpPoly> {
    let lin: BTreeMap<Var, LinForm> = rename.iter().map(|(a, b)| (*a, LinForm::single(*b, Scalar::one()))).collect();
    let mut out = ExpPoly::zero();
    for (m, c) in x.iter() {
        let mut term = ExpPoly::constant(c.clone());
        for (part, level) in m.parts().iter().zip(x.pres().levels()) {
            match part {
                Part::Pow(0) => {}
                Part::Pow(e) => {
                    let g = level.vars()[0];
                    term = &term * &ExpPoly::var(*rename.get(&g).unwrap_or(&g)).pow(*e);
                }
                Part::Fn(f) => term = &term * &ExpPoly::from_mono(f.clone()).substitute(&lin)?,
            }
        }
        out = &out + &term;
    }
    Ok(out)
}

/// `{x, {y, z}} + {y, {z, x}} + {z, {x, y}} = 0` on every coordinate triple.
pub fn check_jacobi(p: &PoissonStructure) -> Result<Outcome> {
    let c = p.coords();
    let b = |x: Var, f: &ExpPoly| p.bracket(&ExpPoly::var(x), f);
    let e = |i: usize, j: usize| p.bracket(&ExpPoly::var(c[i]), &ExpPoly::var(c[j]));
    for i in 0..c.len() {
        for j in i + 1..c.len() {
            for k in j + 1..c.len() {
                let sum = &(&b(c[i], &e(j, k)) + &b(c[j], &e(k, i))) + &b(c[k], &e(i, j));
                if !sum.is_zero() {
                    return Ok(Outcome::fail(format!("{{{}, {{{}, {}}}}} + cyclic", c[i], c[j], c[k]), sum));
                }
            }
        }
    }
    Ok(Outcome::Pass)
}

/// For every pair in `pairing` (coordinate, generator), the quantum
/// commutator read as a function equals the Poisson bracket; with a group
/// law, the quantum coproduct is also its matrix coproduct.
pub fn check_weyl_correspondence(
    p: &PoissonStructure,
    h: &HopfPresentation,
    pairing: &[(&str, &str)],
    group_law: Option<&SymMatrix>,
) -> Result<Outcome> {
    let u = h.algebra();
    let mut rename = BTreeMap::new();
    let mut gens = Vec::new();
    for (coord, gen) in pairing {
        p.index(Var::new(coord))?;
        rename.insert(u.lookup(gen)?, Var::new(coord));
        gens.push((Var::new(coord), NCElement::gen(u, gen)?));
    }
    for (a, (x, gx)) in gens.iter().enumerate() {
        for (y, gy) in &gens[a + 1..] {
            let quantum = to_function(&gx.commutator(gy)?, &rename)?;
            let classical = p.bracket(&ExpPoly::var(*x), &ExpPoly::var(*y));
            let res = &quantum - &classical;
            if !res.is_zero() {
                return Ok(Outcome::fail(format!("[{x}, {y}] − {{{x}, {y}}}"), res));
            }
        }
    }
    match group_law {
        Some(g) => check_coproduct_multiplicativity(g, h),
        None => Ok(Outcome::Pass),
    }
}

type Key = (crate::coeffring::ExpMono, bool, [i32; NPARAMS]);

fn vectorize(f: &ExpPoly) -> BTreeMap<Key, Q> {
    let mut v = BTreeMap::new();
    for (m, c) in f.terms() {
        for (x, j, pw) in c.iter_terms() {
            v.insert((m.clone(), j, pw), x.clone());
        }
    }
    v
}

/// Q-span of candidate functions, kept in echelon form.
struct Span {
    rows: Vec<(Key, BTreeMap<Key, Q>, BTreeMap<usize, Q>)>,
}

impl Span {
    fn reduce(&self, mut v: BTreeMap<Key, Q>, mut combo: BTreeMap<usize, Q>) -> (BTreeMap<Key, Q>, BTreeMap<usize, Q>) {
        for (pivot, row, rc) in &self.rows {
            let Some(f) = v.get(pivot).cloned() else { continue };
            for (k, x) in row {
                let e = v.entry(k.clone()).or_insert_with(Q::zero);
                *e -= &f * x;
                if e.is_zero() {
                    v.remove(k);
                }
            }
            for (k, x) in rc {
                let e = combo.entry(*k).or_insert_with(Q::zero);
                *e -= &f * x;
            }
        }
        (v, combo)
    }

    fn insert(&mut self, idx: usize, f: &ExpPoly) {
        let (v, combo) = self.reduce(vectorize(f), BTreeMap::from([(idx, Q::from_integer(1.into()))]));
        if let Some((pivot, p)) = v.iter().next().map(|(k, x)| (k.clone(), x.clone())) {
            let row = v.into_iter().map(|(k, x)| (k, x / &p)).collect();
            let rc = combo.into_iter().map(|(k, x)| (k, x / &p)).collect();
            self.rows.push((pivot, row, rc));
        }
    }

    /// `f = Σ c_k · candidate_k`, if possible.
    fn solve(&self, f: &ExpPoly) -> Option<BTreeMap<usize, Q>> {
        let (v, combo) = self.reduce(vectorize(f), BTreeMap::new());
        v.is_empty().then(|| combo.into_iter().map(|(k, x)| (k, -x)).collect())
    }
}

/// The coproduct of functions on a matrix group, `Δ(G_ij) = Σ_k G_ik ⊗ G_kj`,
/// with the two legs as renamed coordinates.
struct GroupLaw {
    n: usize,
    entries: Vec<ExpPoly>,
    legs: [BTreeMap<Var, LinForm>; 2],
    span: Span,
    exps: Vec<LinForm>,
}

impl GroupLaw {
    fn new(g: &SymMatrix, coords: &[Var]) -> Result<Self> {
        let n = g.dim();
        let mut entries = Vec::new();
        for i in 0..n {
            for j in 0..n {
                let f = to_function(g.get(i, j), &BTreeMap::new())?;
                if let Some(x) = f.support().into_iter().find(|x| !coords.contains(x)) {
                    return Err(Error::UnknownVariable(x.name().into()));
                }
                entries.push(f);
            }
        }
        let leg = |k: usize| coords.iter().map(|x| (*x, LinForm::single(Var::new(&format!("{x}_{k}")), Scalar::one()))).collect();
        let mut span = Span { rows: Vec::new() };
        span.insert(0, &ExpPoly::one());
        let mut exps = Vec::new();
        for (k, f) in entries.iter().enumerate() {
            span.insert(k + 1, f);
            for (m, _) in f.terms() {
                if m.has_exp() && !exps.contains(m.exp()) {
                    exps.push(m.exp().clone());
                }
            }
        }
        Ok(GroupLaw { n, entries, legs: [leg(1), leg(2)], span, exps })
    }

    fn leg(&self, f: &ExpPoly, k: usize) -> Result<ExpPoly> {
        f.substitute(&self.legs[k])
    }

    fn leg_var(&self, x: Var, k: usize) -> Var {
        *self.legs[k][&x].iter().next().unwrap().0
    }

    fn delta_entry(&self, i: usize, j: usize) -> Result<ExpPoly> {
        let mut out = ExpPoly::zero();
        for k in 0..self.n {
            let a = self.leg(&self.entries[i * self.n + k], 0)?;
            let b = self.leg(&self.entries[k * self.n + j], 1)?;
            out = &out + &(&a * &b);
        }
        Ok(out)
    }

    fn delta_combo(&self, combo: &BTreeMap<usize, Q>) -> Result<ExpPoly> {
        let mut out = ExpPoly::zero();
        for (k, c) in combo {
            let d = if *k == 0 { ExpPoly::one() } else { self.delta_entry((k - 1) / self.n, (k - 1) % self.n)? };
            out = &out + &d.scale(&Scalar::from_q(c.clone()));
        }
        Ok(out)
    }

    fn delta_exp(&self, l: &LinForm) -> Result<ExpPoly> {
        if let Some(c) = self.span.solve(&ExpPoly::exp(l)) {
            return self.delta_combo(&c);
        }
        for e in &self.exps {
            for k in 2..=8 {
                if e.scale(&Scalar::int(k)) == *l {
                    if let Some(c) = self.span.solve(&ExpPoly::exp(e)) {
                        return Ok(self.delta_combo(&c)?.pow(k as u32));
                    }
                }
            }
        }
        Err(Error::Unsupported(format!("e^({}) is not generated by the group-law entries", ExpPoly::exp(l))))
    }

    /// `Δf`, coordinates and exponentials being resolved through the span of
    /// the entries.
    fn delta(&self, f: &ExpPoly) -> Result<ExpPoly> {
        let mut out = ExpPoly::zero();
        for (m, c) in f.terms() {
            let mut term = ExpPoly::constant(c.clone());
            for (x, d) in m.degs() {
                let combo = self.span.solve(&ExpPoly::var(*x)).ok_or_else(|| {
                    Error::Unsupported(format!("{x} is not a combination of the group-law entries"))
                })?;
                term = &term * &self.delta_combo(&combo)?.pow(*d);
            }
            if m.has_exp() {
                term = &term * &self.delta_exp(m.exp())?;
            }
            out = &out + &term;
        }
        Ok(out)
    }

    /// Product bracket on the two legs.
    fn tensor_bracket(&self, p: &PoissonStructure, a: &ExpPoly, b: &ExpPoly) -> Result<ExpPoly> {
        let c = p.coords();
        let mut out = ExpPoly::zero();
        for k in 0..2 {
            for x in c {
                let da = a.partial_derivative(self.leg_var(*x, k));
                if da.is_zero() {
                    continue;
                }
                for y in c {
                    let db = b.partial_derivative(self.leg_var(*y, k));
                    let t = p.bracket(&ExpPoly::var(*x), &ExpPoly::var(*y));
                    if !db.is_zero() && !t.is_zero() {
                        out = &out + &(&(&da * &db) * &self.leg(&t, k)?);
                    }
                }
            }
        }
        Ok(out)
    }
}

/// The group law is a Poisson map: `{Δf, Δg} = Δ{f, g}` for every pair of
/// non-constant matrix entries, which generate the coordinate ring.
pub fn check_poisson_hopf(p: &PoissonStructure, g: &SymMatrix) -> Result<Outcome> {
    let law = GroupLaw::new(g, p.coords())?;
    let n = law.n;
    let mut picked: Vec<(usize, usize)> = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let f = &law.entries[i * n + j];
            if f.as_scalar().is_none() && !picked.iter().any(|(a, b)| law.entries[a * n + b] == *f) {
                picked.push((i, j));
            }
        }
    }
    for (s, (i, j)) in picked.iter().enumerate() {
        for (k, l) in &picked[s + 1..] {
            let (f, h) = (&law.entries[i * n + j], &law.entries[k * n + l]);
            let lhs = law.tensor_bracket(p, &law.delta_entry(*i, *j)?, &law.delta_entry(*k, *l)?)?;
            let rhs = law.delta(&p.bracket(f, h))?;
            let res = &lhs - &rhs;
            if !res.is_zero() {
                return Ok(Outcome::fail(format!("{{Δ G[{}][{}], Δ G[{}][{}]}}", i + 1, j + 1, k + 1, l + 1), res));
            }
        }
    }
    Ok(Outcome::Pass)
}
