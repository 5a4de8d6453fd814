//! Commutative exponential polynomials `Σ c · x^α · e^{L}`.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashSet};
use std::fmt;
use std::sync::Mutex;

use super::scalar::{q, Q, Scalar};
use crate::error::{Error, Result};

/// Interned variable name. Ordered by name.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Var(&'static str);

static INTERNER: Mutex<Option<HashSet<&'static str>>> = Mutex::new(None);

impl Var {
    pub fn new(name: &str) -> Var {
        let mut guard = INTERNER.lock().unwrap();
        let set = guard.get_or_insert_with(HashSet::new);
        if let Some(s) = set.get(name) {
            return Var(s);
        }
        let leaked: &'static str = Box::leak(name.to_owned().into_boxed_str());
        set.insert(leaked);
        Var(leaked)
    }

    pub fn name(self) -> &'static str {
        self.0
    }
}

impl fmt::Debug for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Linear form `Σ c_x · x`, the exponent of an exponential symbol.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LinForm(BTreeMap<Var, Scalar>);

impl LinForm {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn single(x: Var, c: Scalar) -> Self {
        let mut m = BTreeMap::new();
        if !c.is_zero() {
            m.insert(x, c);
        }
        LinForm(m)
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (Var, Scalar)>) -> Self {
        let mut out = LinForm::zero();
        for (x, c) in pairs {
            out = out.add(&LinForm::single(x, c));
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn coeff(&self, x: Var) -> Scalar {
        self.0.get(&x).cloned().unwrap_or_default()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Var, &Scalar)> {
        self.0.iter()
    }

    pub fn add(&self, other: &LinForm) -> LinForm {
        let mut m = self.0.clone();
        for (x, c) in &other.0 {
            let e = m.entry(*x).or_default();
            *e = &*e + c;
        }
        m.retain(|_, c| !c.is_zero());
        LinForm(m)
    }

    pub fn scale(&self, s: &Scalar) -> LinForm {
        let mut m: BTreeMap<Var, Scalar> = self.0.iter().map(|(x, c)| (*x, c * s)).collect();
        m.retain(|_, c| !c.is_zero());
        LinForm(m)
    }

    fn real_part(&self) -> LinForm {
        let mut m: BTreeMap<Var, Scalar> = self.0.iter().map(|(x, c)| (*x, c.real_part())).collect();
        m.retain(|_, c| !c.is_zero());
        LinForm(m)
    }

    fn j_part(&self) -> LinForm {
        let mut m: BTreeMap<Var, Scalar> = self.0.iter().map(|(x, c)| (*x, c.j_part())).collect();
        m.retain(|_, c| !c.is_zero());
        LinForm(m)
    }

    fn jsq(&self) -> Option<i8> {
        self.0.values().find_map(|c| c.jsq())
    }

    /// The linear polynomial `Σ c_x x` as an [`ExpPoly`].
    pub fn to_poly(&self) -> ExpPoly {
        let mut out = ExpPoly::zero();
        for (x, c) in &self.0 {
            out = &out + &ExpPoly::var(*x).scale(c);
        }
        out
    }
}

/// Basis element `x^α · e^{L}` of the coefficient ring.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct ExpMono {
    degs: BTreeMap<Var, u32>,
    exp: LinForm,
}

impl ExpMono {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn new(degs: BTreeMap<Var, u32>, exp: LinForm) -> Self {
        let mut degs = degs;
        degs.retain(|_, d| *d > 0);
        ExpMono { degs, exp }
    }

    pub fn var_pow(x: Var, d: u32) -> Self {
        let mut degs = BTreeMap::new();
        if d > 0 {
            degs.insert(x, d);
        }
        ExpMono { degs, exp: LinForm::zero() }
    }

    pub fn is_one(&self) -> bool {
        self.degs.is_empty() && self.exp.is_zero()
    }

    pub fn degs(&self) -> &BTreeMap<Var, u32> {
        &self.degs
    }

    pub fn exp(&self) -> &LinForm {
        &self.exp
    }

    pub fn deg(&self, x: Var) -> u32 {
        self.degs.get(&x).copied().unwrap_or(0)
    }

    pub fn total_degree(&self) -> u32 {
        self.degs.values().sum()
    }

    pub fn has_exp(&self) -> bool {
        !self.exp.is_zero()
    }

    /// Product of two basis elements (again a basis element).
    pub fn mul(&self, other: &ExpMono) -> ExpMono {
        let mut degs = self.degs.clone();
        for (x, d) in &other.degs {
            *degs.entry(*x).or_insert(0) += d;
        }
        ExpMono { degs, exp: self.exp.add(&other.exp) }
    }

    /// Variables occurring in the monomial part or the exponent.
    pub fn support(&self) -> impl Iterator<Item = Var> + '_ {
        self.degs.keys().copied().chain(self.exp.0.keys().copied())
    }

    pub fn max_degree(&self) -> u32 {
        self.degs.values().copied().max().unwrap_or(0)
    }
}

impl Ord for ExpMono {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.degs.cmp(&other.degs))
            .then_with(|| self.exp.cmp(&other.exp))
    }
}

impl PartialOrd for ExpMono {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Canonical element of the commutative exponential-polynomial ring.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExpPoly {
    terms: BTreeMap<ExpMono, Scalar>,
}

impl ExpPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Scalar::one())
    }

    pub fn constant(c: Scalar) -> Self {
        let mut p = ExpPoly::zero();
        p.add_term(ExpMono::one(), c);
        p
    }

    pub fn var(x: Var) -> Self {
        Self::from_mono(ExpMono::var_pow(x, 1))
    }

    pub fn from_mono(m: ExpMono) -> Self {
        let mut p = ExpPoly::zero();
        p.add_term(m, Scalar::one());
        p
    }

    /// `e^{L}`, normalized for the ring's unit: with `j² = 0` the `j` part of
    /// the exponent is replaced by its exact truncation `1 + jL₁`, with
    /// `j² = 1` it is split over `e^{±L₁}`.
    pub fn exp(l: &LinForm) -> Self {
        match l.jsq() {
            None | Some(-1) => ExpPoly::from_mono(ExpMono { degs: BTreeMap::new(), exp: l.clone() }),
            Some(s) => {
                let re = l.real_part();
                let im = l.j_part();
                let base = ExpPoly::from_mono(ExpMono { degs: BTreeMap::new(), exp: re });
                let j = Scalar::j(s);
                let jpart = if s == 0 {
                    &ExpPoly::one() + &im.to_poly().scale(&j)
                } else {
                    let half = Scalar::rat(1, 2);
                    let plus = ExpPoly::from_mono(ExpMono { degs: BTreeMap::new(), exp: im.clone() });
                    let minus = ExpPoly::from_mono(ExpMono {
                        degs: BTreeMap::new(),
                        exp: im.scale(&Scalar::int(-1)),
                    });
                    &plus.scale(&(&half + &(&half * &j))) + &minus.scale(&(&half - &(&half * &j)))
                };
                &base * &jpart
            }
        }
    }

    /// `e^{c·x}`.
    pub fn exp_var(x: Var, c: Scalar) -> Self {
        Self::exp(&LinForm::single(x, c))
    }

    /// Builds a canonical element from `(coefficient, degrees, exponent)`
    /// triples with arbitrary duplicates.
    pub fn canonicalize(raw: impl IntoIterator<Item = (Scalar, BTreeMap<Var, u32>, LinForm)>) -> Self {
        let mut out = ExpPoly::zero();
        for (c, degs, l) in raw {
            let mono = ExpPoly::from_mono(ExpMono::new(degs, LinForm::zero()));
            out = &out + &(&mono * &ExpPoly::exp(&l)).scale(&c);
        }
        out
    }

    pub(crate) fn add_term(&mut self, m: ExpMono, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get() + &c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
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

    pub fn terms(&self) -> impl Iterator<Item = (&ExpMono, &Scalar)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> impl Iterator<Item = (ExpMono, Scalar)> {
        self.terms.into_iter()
    }

    pub fn coeff(&self, m: &ExpMono) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    /// The value if this is a constant.
    pub fn as_scalar(&self) -> Option<Scalar> {
        match self.terms.len() {
            0 => Some(Scalar::zero()),
            1 => self.terms.get(&ExpMono::one()).cloned(),
            _ => None,
        }
    }

    pub fn scale(&self, s: &Scalar) -> ExpPoly {
        let mut out = ExpPoly::zero();
        for (m, c) in &self.terms {
            out.add_term(m.clone(), c * s);
        }
        out
    }

    pub fn try_mul(&self, other: &ExpPoly) -> Result<ExpPoly> {
        let mut out = ExpPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), ca.try_mul(cb)?);
            }
        }
        Ok(out)
    }

    pub fn pow(&self, n: u32) -> ExpPoly {
        let mut acc = ExpPoly::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// All variables occurring anywhere.
    pub fn support(&self) -> std::collections::BTreeSet<Var> {
        self.terms.keys().flat_map(|m| m.support()).collect()
    }

    pub fn max_total_degree(&self) -> u32 {
        self.terms.keys().map(|m| m.total_degree()).max().unwrap_or(0)
    }

    /// `∂f/∂x`; `vars` lists the ring's variables.
    pub fn partial_derivative_checked(&self, x: Var, vars: &[Var]) -> Result<ExpPoly> {
        if !vars.contains(&x) {
            return Err(Error::UnknownVariable(x.name().into()));
        }
        Ok(self.partial_derivative(x))
    }

    /// `∂f/∂x` by the Leibniz rule and `∂e^{L} = L[x]·e^{L}`.
    pub fn partial_derivative(&self, x: Var) -> ExpPoly {
        let mut out = ExpPoly::zero();
        for (m, c) in &self.terms {
            let d = m.deg(x);
            if d > 0 {
                let mut degs = m.degs.clone();
                *degs.get_mut(&x).unwrap() -= 1;
                out.add_term(ExpMono::new(degs, m.exp.clone()), c.scale(&q(d as i64)));
            }
            let l = m.exp.coeff(x);
            if !l.is_zero() {
                out.add_term(m.clone(), c * &l);
            }
        }
        out
    }

    /// Whether every term is a constant multiple of a single variable.
    pub fn as_linear(&self) -> Option<LinForm> {
        let mut l = LinForm::zero();
        for (m, c) in &self.terms {
            if m.has_exp() || m.total_degree() != 1 {
                return None;
            }
            let (x, _) = m.degs.iter().next().unwrap();
            l = l.add(&LinForm::single(*x, c.clone()));
        }
        Some(l)
    }
}

impl std::ops::Add for &ExpPoly {
    type Output = ExpPoly;
    fn add(self, rhs: &ExpPoly) -> ExpPoly {
        let (big, small) = if self.terms.len() >= rhs.terms.len() { (self, rhs) } else { (rhs, self) };
        let mut out = big.clone();
        for (m, c) in &small.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl std::ops::Neg for &ExpPoly {
    type Output = ExpPoly;
    fn neg(self) -> ExpPoly {
        self.scale(&Scalar::int(-1))
    }
}

impl std::ops::Sub for &ExpPoly {
    type Output = ExpPoly;
    fn sub(self, rhs: &ExpPoly) -> ExpPoly {
        self + &(-rhs)
    }
}

impl std::ops::Mul for &ExpPoly {
    type Output = ExpPoly;
    fn mul(self, rhs: &ExpPoly) -> ExpPoly {
        self.try_mul(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

pub(crate) fn fmt_coeff(c: &Scalar) -> String {
    if c.len() > 1 {
        format!("({c})")
    } else {
        c.to_string()
    }
}

impl fmt::Display for ExpMono {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self
            .degs
            .iter()
            .map(|(x, d)| if *d == 1 { x.to_string() } else { format!("{x}^{d}") })
            .collect();
        if !self.exp.is_zero() {
            let inner: Vec<String> = self
                .exp
                .iter()
                .map(|(x, c)| if c.is_one() { x.to_string() } else { format!("{}·{}", fmt_coeff(c), x) })
                .collect();
            parts.push(format!("e^{{{}}}", inner.join("+")));
        }
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join("·"))
        }
    }
}

impl fmt::Display for ExpPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let rendered: Vec<String> = self
            .terms
            .iter()
            .map(|(m, c)| {
                if m.is_one() {
                    fmt_coeff(c)
                } else if c.is_one() {
                    m.to_string()
                } else {
                    format!("{}·{}", fmt_coeff(c), m)
                }
            })
            .collect();
        write!(f, "{}", rendered.join(" + "))
    }
}

/// `c / n!` helper used by series code.
pub(crate) fn inv_factorial(n: u32) -> Q {
    let mut f = Q::from_integer(1.into());
    for k in 1..=n {
        f *= q(k as i64);
    }
    f.recip()
}
