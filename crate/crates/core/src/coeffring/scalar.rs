//! Exact scalars: Laurent polynomials in the deformation parameters with
//! rational coefficients, optionally extended by a Cayley–Klein unit `j`
//! with `j² = s`, `s ∈ {−1, 0, +1}`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact rational number.
pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn qr(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

/// Deformation (or contraction) parameters a scalar may depend on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Param {
    W,
    Wp,
    V,
    Vp,
    Lambda,
}

pub const NPARAMS: usize = 5;

impl Param {
    pub const ALL: [Param; NPARAMS] = [Param::W, Param::Wp, Param::V, Param::Vp, Param::Lambda];

    pub(crate) fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            Param::W => "w",
            Param::Wp => "w'",
            Param::V => "v",
            Param::Vp => "v'",
            Param::Lambda => "λ",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub(crate) struct SKey {
    pw: [i32; NPARAMS],
    j: bool,
}

impl SKey {
    const ONE: SKey = SKey { pw: [0; NPARAMS], j: false };

    fn degree(&self) -> i32 {
        self.pw.iter().sum()
    }
}

/// An exact scalar `Σ c · j^{0|1} · Π p^k`.
///
/// Canonical: zero coefficients are never stored and `jsq` is `None`
/// whenever no term carries `j`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Scalar {
    terms: BTreeMap<SKey, Q>,
    jsq: Option<i8>,
}

fn merge_jsq(a: Option<i8>, b: Option<i8>) -> Result<Option<i8>> {
    match (a, b) {
        (Some(x), Some(y)) if x != y => Err(Error::Config(format!(
            "scalars from rings with j² = {x} and j² = {y} cannot be combined"
        ))),
        (Some(x), _) | (_, Some(x)) => Ok(Some(x)),
        _ => Ok(None),
    }
}

impl Scalar {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_q(Q::one())
    }

    pub fn from_q(c: Q) -> Self {
        let mut s = Self::zero();
        if !c.is_zero() {
            s.terms.insert(SKey::ONE, c);
        }
        s
    }

    pub fn int(n: i64) -> Self {
        Self::from_q(q(n))
    }

    pub fn rat(n: i64, d: i64) -> Self {
        Self::from_q(qr(n, d))
    }

    /// The monomial `c · p^k`.
    pub fn monomial(c: Q, p: Param, k: i32) -> Self {
        let mut key = SKey::ONE;
        key.pw[p.index()] = k;
        let mut s = Self::zero();
        if !c.is_zero() {
            s.terms.insert(key, c);
        }
        s
    }

    pub fn param(p: Param) -> Self {
        Self::monomial(Q::one(), p, 1)
    }

    /// The Cayley–Klein unit `j` of a ring with `j² = s`.
    pub fn j(s: i8) -> Self {
        assert!((-1..=1).contains(&s), "j² must be −1, 0 or +1");
        let mut t = BTreeMap::new();
        t.insert(SKey { pw: [0; NPARAMS], j: true }, Q::one());
        Self { terms: t, jsq: Some(s) }
    }

    /// `j²` of the ring this scalar lives in, if `j` occurs.
    pub fn jsq(&self) -> Option<i8> {
        self.jsq
    }

    fn normalize(mut self) -> Self {
        self.terms.retain(|_, c| !c.is_zero());
        if !self.terms.keys().any(|k| k.j) {
            self.jsq = None;
        }
        self
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&SKey::ONE).is_some_and(|c| c.is_one())
    }

    pub fn has_j(&self) -> bool {
        self.jsq.is_some()
    }

    /// Rational value when the scalar is a constant.
    pub fn as_rational(&self) -> Option<Q> {
        match self.terms.len() {
            0 => Some(Q::zero()),
            1 => self.terms.get(&SKey::ONE).cloned(),
            _ => None,
        }
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn try_add(&self, other: &Scalar) -> Result<Scalar> {
        let jsq = merge_jsq(self.jsq, other.jsq)?;
        let mut terms = self.terms.clone();
        for (k, c) in &other.terms {
            *terms.entry(*k).or_insert_with(Q::zero) += c;
        }
        Ok(Scalar { terms, jsq }.normalize())
    }

    pub fn try_mul(&self, other: &Scalar) -> Result<Scalar> {
        let jsq = merge_jsq(self.jsq, other.jsq)?;
        let mut terms: BTreeMap<SKey, Q> = BTreeMap::new();
        for (ka, ca) in &self.terms {
            for (kb, cb) in &other.terms {
                let mut pw = [0; NPARAMS];
                for (i, p) in pw.iter_mut().enumerate() {
                    *p = ka.pw[i] + kb.pw[i];
                }
                let (j, factor) = match (ka.j, kb.j) {
                    (true, true) => {
                        let s = jsq.expect("j term without j² recorded");
                        if s == 0 {
                            continue;
                        }
                        (false, q(s as i64))
                    }
                    (a, b) => (a || b, Q::one()),
                };
                *terms.entry(SKey { pw, j }).or_insert_with(Q::zero) += ca * cb * factor;
            }
        }
        Ok(Scalar { terms, jsq }.normalize())
    }

    pub fn scale(&self, c: &Q) -> Scalar {
        if c.is_zero() {
            return Scalar::zero();
        }
        Scalar {
            terms: self.terms.iter().map(|(k, v)| (*k, v * c)).collect(),
            jsq: self.jsq,
        }
    }

    /// Multiplicative inverse of a single-term scalar.
    ///
    /// `j` is invertible only for `s = ±1`, where `j⁻¹ = s·j`.
    pub fn inverse(&self) -> Result<Scalar> {
        if self.terms.len() != 1 {
            return Err(Error::Unsupported(format!("cannot invert non-monomial scalar {self}")));
        }
        let (k, c) = self.terms.iter().next().unwrap();
        let mut pw = [0; NPARAMS];
        for (i, p) in pw.iter_mut().enumerate() {
            *p = -k.pw[i];
        }
        let mut inv = Scalar::monomial_key(SKey { pw, j: false }, c.recip());
        if k.j {
            let s = self.jsq.unwrap();
            if s == 0 {
                return Err(Error::Unsupported("the dual unit has no inverse".into()));
            }
            inv = inv.try_mul(&Scalar::j(s).scale(&q(s as i64)))?;
        }
        Ok(inv)
    }

    fn monomial_key(key: SKey, c: Q) -> Scalar {
        let mut s = Scalar::zero();
        if !c.is_zero() {
            s.terms.insert(key, c);
        }
        s
    }

    /// Integer power; negative exponents require an invertible monomial.
    pub fn pow(&self, n: i32) -> Result<Scalar> {
        let base = if n < 0 { self.inverse()? } else { self.clone() };
        let mut acc = Scalar::one();
        for _ in 0..n.unsigned_abs() {
            acc = acc.try_mul(&base)?;
        }
        Ok(acc)
    }

    /// `j`-free part `a` of `a + j·b`.
    pub fn real_part(&self) -> Scalar {
        Scalar {
            terms: self.terms.iter().filter(|(k, _)| !k.j).map(|(k, c)| (*k, c.clone())).collect(),
            jsq: None,
        }
    }

    /// Coefficient `b` of `j` in `a + j·b`.
    pub fn j_part(&self) -> Scalar {
        Scalar {
            terms: self
                .terms
                .iter()
                .filter(|(k, _)| k.j)
                .map(|(k, c)| (SKey { pw: k.pw, j: false }, c.clone()))
                .collect(),
            jsq: None,
        }
    }

    /// Minimum and maximum exponent of `p` across terms.
    pub fn power_range(&self, p: Param) -> Option<(i32, i32)> {
        let mut it = self.terms.keys().map(|k| k.pw[p.index()]);
        let first = it.next()?;
        Some(it.fold((first, first), |(lo, hi), e| (lo.min(e), hi.max(e))))
    }

    /// Coefficient of `p^k` (other parameters and `j` are kept).
    pub fn coeff_of(&self, p: Param, k: i32) -> Scalar {
        Scalar {
            terms: self
                .terms
                .iter()
                .filter(|(key, _)| key.pw[p.index()] == k)
                .map(|(key, c)| {
                    let mut key = *key;
                    key.pw[p.index()] = 0;
                    (key, c.clone())
                })
                .collect(),
            jsq: self.jsq,
        }
        .normalize()
    }

    /// Drop all terms whose power of `p` exceeds `max`.
    pub fn truncate(&self, p: Param, max: i32) -> Scalar {
        Scalar {
            terms: self
                .terms
                .iter()
                .filter(|(key, _)| key.pw[p.index()] <= max)
                .map(|(k, c)| (*k, c.clone()))
                .collect(),
            jsq: self.jsq,
        }
        .normalize()
    }

    /// Replace the parameter `p` by `image`.
    pub fn subst_param(&self, p: Param, image: &Scalar) -> Result<Scalar> {
        let mut out = Scalar::zero();
        for (k, c) in &self.terms {
            let e = k.pw[p.index()];
            let mut rest = *k;
            rest.pw[p.index()] = 0;
            let mut base = Scalar::monomial_key(SKey { pw: rest.pw, j: false }, c.clone());
            if rest.j {
                base = base.try_mul(&Scalar::j(self.jsq.unwrap()))?;
            }
            let term = if e == 0 { base } else { base.try_mul(&image.pow(e)?)? };
            out = out.try_add(&term)?;
        }
        Ok(out)
    }

    /// Total parameter degree of the lowest and highest term.
    pub fn degree_range(&self) -> Option<(i32, i32)> {
        let mut it = self.terms.keys().map(|k| k.degree());
        let first = it.next()?;
        Some(it.fold((first, first), |(lo, hi), e| (lo.min(e), hi.max(e))))
    }

    /// Whether all terms share one parameter monomial (ignoring `j`).
    pub fn is_single_power(&self) -> bool {
        let mut it = self.terms.keys().map(|k| k.pw);
        match it.next() {
            None => true,
            Some(first) => it.all(|p| p == first),
        }
    }

    /// Iterate `(coefficient, has_j, parameter exponents)`.
    pub fn iter_terms(&self) -> impl Iterator<Item = (&Q, bool, [i32; NPARAMS])> {
        self.terms.iter().map(|(k, c)| (c, k.j, k.pw))
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::int(n)
    }
}

impl From<Q> for Scalar {
    fn from(c: Q) -> Self {
        Scalar::from_q(c)
    }
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        self.try_add(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Add for Scalar {
    type Output = Scalar;
    fn add(self, rhs: Scalar) -> Scalar {
        &self + &rhs
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        *self = &*self + rhs;
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar { terms: self.terms.iter().map(|(k, c)| (*k, -c)).collect(), jsq: self.jsq }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self + &(-rhs)
    }
}

impl Sub for Scalar {
    type Output = Scalar;
    fn sub(self, rhs: Scalar) -> Scalar {
        &self - &rhs
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        *self = &*self - rhs;
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        self.try_mul(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Mul for Scalar {
    type Output = Scalar;
    fn mul(self, rhs: Scalar) -> Scalar {
        &self * &rhs
    }
}

fn fmt_q(c: &Q) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in &self.terms {
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            first = false;
            let mut factors: Vec<String> = Vec::new();
            if k.j {
                factors.push("j".into());
            }
            for p in Param::ALL {
                match k.pw[p.index()] {
                    0 => {}
                    1 => factors.push(p.name().into()),
                    e => factors.push(format!("{}^{}", p.name(), e)),
                }
            }
            if factors.is_empty() {
                write!(f, "{}", fmt_q(&mag))?;
            } else if mag.is_one() {
                write!(f, "{}", factors.join("·"))?;
            } else {
                write!(f, "{}·{}", fmt_q(&mag), factors.join("·"))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w() -> Scalar {
        Scalar::param(Param::W)
    }

    #[test]
    fn laurent_cancellation() {
        let winv = w().inverse().unwrap();
        assert!((&w() * &winv).is_one());
        assert_eq!(w().pow(-2).unwrap(), Scalar::monomial(q(1), Param::W, -2));
    }

    #[test]
    fn j_squares_to_s() {
        for s in [-1i8, 0, 1] {
            let jj = &Scalar::j(s) * &Scalar::j(s);
            assert_eq!(jj, Scalar::int(s as i64));
        }
    }

    #[test]
    fn j_inverse() {
        for s in [-1i8, 1] {
            let j = Scalar::j(s);
            assert!((&j * &j.inverse().unwrap()).is_one());
        }
        assert!(Scalar::j(0).inverse().is_err());
    }

    #[test]
    fn mismatched_units_are_rejected() {
        assert!(Scalar::j(1).try_add(&Scalar::j(-1)).is_err());
        assert!(Scalar::j(1).try_mul(&Scalar::j(0)).is_err());
    }

    #[test]
    fn parameter_substitution() {
        // v -> -2 j w  with j² = +1: v² = 4w²
        let img = &(&Scalar::int(-2) * &Scalar::j(1)) * &w();
        let v2 = Scalar::monomial(q(1), Param::V, 2);
        assert_eq!(v2.subst_param(Param::V, &img).unwrap(), Scalar::monomial(q(4), Param::W, 2));
    }

    #[test]
    fn display_is_stable() {
        let s = &(&w() * &Scalar::int(2)) - &Scalar::rat(1, 2);
        assert_eq!(s.to_string(), "-1/2 + 2·w");
    }
}
