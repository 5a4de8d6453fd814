use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::Arc;

use super::presentation::{Level, Presentation};
use crate::coeffring::{fmt_coeff, ExpMono, ExpPoly, LinForm, Scalar, Var};
use crate::error::{Error, Result};

/// Content of one tower level inside a normal monomial.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Part {
    Pow(u32),
    Fn(ExpMono),
}

impl Part {
    pub fn is_trivial(&self) -> bool {
        match self {
            Part::Pow(e) => *e == 0,
            Part::Fn(m) => m.is_one(),
        }
    }

    pub fn degree(&self) -> u32 {
        match self {
            Part::Pow(e) => *e,
            Part::Fn(m) => m.total_degree(),
        }
    }
}

/// Normal-ordered word: one [`Part`] per tower level, read left to right.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NcMono(pub(crate) Vec<Part>);

impl NcMono {
    pub fn one(levels: &[Level]) -> Self {
        NcMono(
            levels
                .iter()
                .map(|l| match l {
                    Level::Poly(_) => Part::Pow(0),
                    Level::Block(_) => Part::Fn(ExpMono::one()),
                })
                .collect(),
        )
    }

    pub fn parts(&self) -> &[Part] {
        &self.0
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(Part::is_trivial)
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().map(Part::degree).sum()
    }

    /// Degree carried by polynomial levels only.
    pub fn poly_degree(&self) -> u32 {
        self.0.iter().map(|p| if let Part::Pow(e) = p { *e } else { 0 }).sum()
    }

    pub fn has_exp(&self) -> bool {
        self.0.iter().any(|p| matches!(p, Part::Fn(m) if m.has_exp()))
    }

    pub(crate) fn first_nontrivial(&self) -> Option<usize> {
        self.0.iter().position(|p| !p.is_trivial())
    }

    pub(crate) fn last_nontrivial(&self) -> Option<usize> {
        self.0.iter().rposition(|p| !p.is_trivial())
    }

    pub(crate) fn with_part(&self, i: usize, p: Part) -> NcMono {
        let mut v = self.0.clone();
        v[i] = p;
        NcMono(v)
    }

    pub(crate) fn trivial_part(&self, i: usize) -> Part {
        match self.0[i] {
            Part::Pow(_) => Part::Pow(0),
            Part::Fn(_) => Part::Fn(ExpMono::one()),
        }
    }

    /// Exponent of a polynomial level, or the monomial of a block level.
    pub fn pow_at(&self, i: usize) -> u32 {
        match &self.0[i] {
            Part::Pow(e) => *e,
            Part::Fn(m) => m.total_degree(),
        }
    }

    pub(crate) fn render(&self, levels: &[Level]) -> String {
        let mut out = Vec::new();
        for (p, l) in self.0.iter().zip(levels) {
            match (p, l) {
                (Part::Pow(0), _) => {}
                (Part::Pow(1), Level::Poly(g)) => out.push(g.to_string()),
                (Part::Pow(e), Level::Poly(g)) => out.push(format!("{g}^{e}")),
                (Part::Fn(m), _) if m.is_one() => {}
                (Part::Fn(m), _) => out.push(m.to_string()),
                _ => unreachable!("part kind follows level kind"),
            }
        }
        if out.is_empty() {
            "1".to_string()
        } else {
            out.join("·")
        }
    }
}

impl Ord for NcMono {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree().cmp(&other.total_degree()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for NcMono {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

pub(crate) type Terms = BTreeMap<NcMono, Scalar>;

pub(crate) fn add_term(t: &mut Terms, m: NcMono, c: Scalar) {
    if c.is_zero() {
        return;
    }
    match t.get_mut(&m) {
        Some(old) => {
            *old += &c;
            if old.is_zero() {
                t.remove(&m);
            }
        }
        None => {
            t.insert(m, c);
        }
    }
}

pub(crate) fn add_scaled(t: &mut Terms, other: &Terms, c: &Scalar) {
    for (m, d) in other {
        add_term(t, m.clone(), d * c);
    }
}

/// Per-level factor used while assembling ordered products.
pub(crate) enum Factor {
    Pow(u32),
    Poly(ExpPoly),
}

/// Expands an ordered product of level factors into normal terms.
pub(crate) fn assemble(coeff: &Scalar, factors: Vec<Factor>) -> Terms {
    let mut acc: Vec<(Vec<Part>, Scalar)> = vec![(Vec::new(), coeff.clone())];
    for f in factors {
        acc = match f {
            Factor::Pow(e) => acc
                .into_iter()
                .map(|(mut ps, c)| {
                    ps.push(Part::Pow(e));
                    (ps, c)
                })
                .collect(),
            Factor::Poly(p) => {
                let mut next = Vec::new();
                for (ps, c) in &acc {
                    for (m, d) in p.terms() {
                        let mut q = ps.clone();
                        q.push(Part::Fn(m.clone()));
                        next.push((q, c * d));
                    }
                }
                next
            }
        };
    }
    let mut out = Terms::new();
    for (ps, c) in acc {
        add_term(&mut out, NcMono(ps), c);
    }
    out
}

/// Element of a tower algebra in normal form.
#[derive(Clone)]
pub struct NCElement {
    pres: Arc<Presentation>,
    terms: Terms,
}

impl fmt::Debug for NCElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl PartialEq for NCElement {
    fn eq(&self, other: &Self) -> bool {
        self.pres.same_levels(&other.pres) && self.terms == other.terms
    }
}

impl Eq for NCElement {}

impl NCElement {
    pub(crate) fn from_terms(pres: &Arc<Presentation>, terms: Terms) -> Self {
        NCElement { pres: pres.clone(), terms }
    }

    pub fn zero(pres: &Arc<Presentation>) -> Self {
        Self::from_terms(pres, Terms::new())
    }

    pub fn one(pres: &Arc<Presentation>) -> Self {
        Self::constant(pres, Scalar::one())
    }

    pub fn constant(pres: &Arc<Presentation>, c: Scalar) -> Self {
        let mut t = Terms::new();
        add_term(&mut t, NcMono::one(pres.levels()), c);
        Self::from_terms(pres, t)
    }

    /// A single generator.
    pub fn gen(pres: &Arc<Presentation>, name: &str) -> Result<Self> {
        let v = pres.lookup(name)?;
        let i = pres.level_of(v)?;
        let one = NcMono::one(pres.levels());
        let part = match &pres.levels()[i] {
            Level::Poly(_) => Part::Pow(1),
            Level::Block(_) => Part::Fn(ExpMono::var_pow(v, 1)),
        };
        let mut t = Terms::new();
        add_term(&mut t, one.with_part(i, part), Scalar::one());
        Ok(Self::from_terms(pres, t))
    }

    /// Generators raised to powers, multiplied in tower order.
    pub fn word(pres: &Arc<Presentation>, powers: &[(&str, u32)]) -> Result<Self> {
        let mut x = Self::one(pres);
        for (g, e) in powers {
            x = x.mul(&Self::gen(pres, g)?.pow(*e)?)?;
        }
        Ok(x)
    }

    /// Embeds a commutative function of block generators.
    pub fn func(pres: &Arc<Presentation>, f: &ExpPoly) -> Result<Self> {
        let n = pres.levels().len();
        let mut out = Terms::new();
        for (m, c) in f.terms() {
            let mut degs: Vec<BTreeMap<Var, u32>> = vec![BTreeMap::new(); n];
            let mut lins: Vec<Vec<(Var, Scalar)>> = vec![Vec::new(); n];
            for (x, d) in m.degs() {
                degs[block_level(pres, *x)?].insert(*x, *d);
            }
            for (x, s) in m.exp().iter() {
                lins[block_level(pres, *x)?].push((*x, s.clone()));
            }
            let factors = (0..n)
                .map(|i| match &pres.levels()[i] {
                    Level::Poly(_) => Factor::Pow(0),
                    Level::Block(_) => Factor::Poly(ExpPoly::from_mono(ExpMono::new(
                        std::mem::take(&mut degs[i]),
                        LinForm::from_pairs(std::mem::take(&mut lins[i])),
                    ))),
                })
                .collect();
            add_scaled(&mut out, &assemble(&Scalar::one(), factors), c);
        }
        Ok(Self::from_terms(pres, out))
    }

    pub fn pres(&self) -> &Arc<Presentation> {
        &self.pres
    }

    pub(crate) fn terms(&self) -> &Terms {
        &self.terms
    }

    pub fn iter(&self) -> impl Iterator<Item = (&NcMono, &Scalar)> {
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

    pub fn coeff(&self, m: &NcMono) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    /// Scalar value if the element is a constant.
    pub fn as_scalar(&self) -> Option<Scalar> {
        match self.terms.len() {
            0 => Some(Scalar::zero()),
            1 => self.terms.iter().next().filter(|(m, _)| m.is_one()).map(|(_, c)| c.clone()),
            _ => None,
        }
    }

    /// The element as a commutative function when only block levels occur.
    pub fn as_func(&self) -> Option<ExpPoly> {
        let mut out = ExpPoly::zero();
        for (m, c) in &self.terms {
            let mut term = ExpPoly::constant(c.clone());
            for p in m.parts() {
                match p {
                    Part::Pow(0) => {}
                    Part::Pow(_) => return None,
                    Part::Fn(e) => term = &term * &ExpPoly::from_mono(e.clone()),
                }
            }
            out = &out + &term;
        }
        Some(out)
    }

    /// Generators appearing anywhere in the element.
    pub fn support(&self) -> BTreeSet<Var> {
        let mut s = BTreeSet::new();
        for m in self.terms.keys() {
            for (p, l) in m.parts().iter().zip(self.pres.levels()) {
                match (p, l) {
                    (Part::Pow(e), Level::Poly(g)) if *e > 0 => {
                        s.insert(*g);
                    }
                    (Part::Fn(f), _) => {
                        s.extend(f.support());
                    }
                    _ => {}
                }
            }
        }
        s
    }

    pub fn max_degree(&self) -> u32 {
        self.terms.keys().map(NcMono::total_degree).max().unwrap_or(0)
    }

    pub fn max_poly_degree(&self) -> u32 {
        self.terms.keys().map(NcMono::poly_degree).max().unwrap_or(0)
    }

    pub fn has_exp(&self) -> bool {
        self.terms.keys().any(NcMono::has_exp)
    }

    fn check_same(&self, other: &NCElement) -> Result<()> {
        if Arc::ptr_eq(&self.pres, &other.pres) || self.pres.id() == other.pres.id() {
            Ok(())
        } else {
            Err(Error::Mismatch(format!("{} vs {}", self.pres.name(), other.pres.name())))
        }
    }

    pub fn try_add(&self, other: &NCElement) -> Result<NCElement> {
        if !self.pres.same_levels(&other.pres) {
            return Err(Error::Mismatch(format!("{} vs {}", self.pres.name(), other.pres.name())));
        }
        let mut t = self.terms.clone();
        add_scaled(&mut t, &other.terms, &Scalar::one());
        Ok(Self::from_terms(&self.pres, t))
    }

    pub fn scale(&self, c: &Scalar) -> NCElement {
        let mut t = Terms::new();
        add_scaled(&mut t, &self.terms, c);
        Self::from_terms(&self.pres, t)
    }

    /// Product in normal form.
    pub fn mul(&self, other: &NCElement) -> Result<NCElement> {
        self.check_same(other)?;
        Ok(Self::from_terms(&self.pres, self.pres.mul_terms(&self.terms, &other.terms)?))
    }

    pub fn pow(&self, n: u32) -> Result<NCElement> {
        let mut acc = Self::one(&self.pres);
        for _ in 0..n {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// `xy − yx`.
    pub fn commutator(&self, other: &NCElement) -> Result<NCElement> {
        Ok(&self.mul(other)? - &other.mul(self)?)
    }

    /// Moves the element to another presentation with the same tower.
    pub fn rebase(&self, pres: &Arc<Presentation>) -> Result<NCElement> {
        if !self.pres.same_levels(pres) {
            return Err(Error::Mismatch(format!("{} vs {}", self.pres.name(), pres.name())));
        }
        Ok(Self::from_terms(pres, self.terms.clone()))
    }

    /// Rebuilds the element term by term: `coeff` maps coefficients,
    /// `block` maps each block monomial, `poly` gives the scalar picked up by
    /// a polynomial generator power.
    pub fn transform(
        &self,
        coeff: &dyn Fn(&Scalar) -> Result<Scalar>,
        block: &dyn Fn(&ExpMono) -> Result<ExpPoly>,
        poly: &dyn Fn(Var, u32) -> Result<Scalar>,
    ) -> Result<NCElement> {
        let mut out = Terms::new();
        for (m, c) in &self.terms {
            let mut k = coeff(c)?;
            let mut factors = Vec::new();
            for (p, l) in m.parts().iter().zip(self.pres.levels()) {
                match (p, l) {
                    (Part::Pow(e), Level::Poly(g)) => {
                        if *e > 0 {
                            k = k.try_mul(&poly(*g, *e)?)?;
                        }
                        factors.push(Factor::Pow(*e));
                    }
                    (Part::Fn(f), _) => factors.push(Factor::Poly(block(f)?)),
                    _ => unreachable!("part kind follows level kind"),
                }
            }
            add_scaled(&mut out, &assemble(&Scalar::one(), factors), &k);
        }
        Ok(Self::from_terms(&self.pres, out))
    }

    /// Applies `f` to every scalar, including exponent coefficients.
    pub fn map_scalars(&self, f: &dyn Fn(&Scalar) -> Result<Scalar>) -> Result<NCElement> {
        self.transform(f, &|m| ExpPoly::from_mono(m.clone()).map_scalars(f), &|_, _| Ok(Scalar::one()))
    }

    /// Applies `f` to every block monomial.
    pub fn map_blocks(&self, f: &dyn Fn(&ExpPoly) -> Result<ExpPoly>) -> Result<NCElement> {
        self.transform(&|c| Ok(c.clone()), &|m| f(&ExpPoly::from_mono(m.clone())), &|_, _| Ok(Scalar::one()))
    }

    /// Replaces each listed generator `g` by `μ_g·g`.
    pub fn rescale(&self, factors: &BTreeMap<Var, Scalar>) -> Result<NCElement> {
        let lin: BTreeMap<Var, LinForm> =
            factors.iter().map(|(x, s)| (*x, LinForm::single(*x, s.clone()))).collect();
        self.transform(
            &|c| Ok(c.clone()),
            &|m| ExpPoly::from_mono(m.clone()).substitute(&lin),
            &|g, e| match factors.get(&g) {
                Some(s) => s.pow(e as i32),
                None => Ok(Scalar::one()),
            },
        )
    }

    /// Keeps only terms satisfying `keep`.
    pub fn filter(&self, keep: impl Fn(&NcMono) -> bool) -> NCElement {
        let t = self.terms.iter().filter(|(m, _)| keep(m)).map(|(m, c)| (m.clone(), c.clone())).collect();
        Self::from_terms(&self.pres, t)
    }

    pub fn render_mono(&self, m: &NcMono) -> String {
        m.render(self.pres.levels())
    }
}

fn block_level(pres: &Presentation, x: Var) -> Result<usize> {
    let i = pres.level_of(x)?;
    if pres.levels()[i].is_block() {
        Ok(i)
    } else {
        Err(Error::Unsupported(format!("{x} is not a commuting-block generator")))
    }
}

impl std::ops::Add for &NCElement {
    type Output = NCElement;
    fn add(self, rhs: &NCElement) -> NCElement {
        self.try_add(rhs).expect("elements of one tower")
    }
}

impl std::ops::Neg for &NCElement {
    type Output = NCElement;
    fn neg(self) -> NCElement {
        self.scale(&Scalar::int(-1))
    }
}

impl std::ops::Sub for &NCElement {
    type Output = NCElement;
    fn sub(self, rhs: &NCElement) -> NCElement {
        self + &(-rhs)
    }
}

impl std::ops::Mul for &NCElement {
    type Output = NCElement;
    fn mul(self, rhs: &NCElement) -> NCElement {
        NCElement::mul(self, rhs).expect("product in one tower")
    }
}

impl fmt::Display for NCElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(m, c)| {
                if m.is_one() {
                    fmt_coeff(c)
                } else if c.is_one() {
                    self.render_mono(m)
                } else {
                    format!("{}·{}", fmt_coeff(c), self.render_mono(m))
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}
