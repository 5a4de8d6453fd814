use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::NumericMatrix;
use crate::coeffring::{Param, Scalar, Q};
use crate::error::{Error, Result};

/// Eigenvalues `c_i·μ` with algebraic and minimal-polynomial multiplicity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Spectrum {
    pub scale: Scalar,
    pub roots: Vec<(Q, u32, u32)>,
}

/// `t^k e^{λt}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExpTerm {
    pub k: u32,
    pub lambda: Scalar,
}

/// Faddeev–LeVerrier; `c[k]` is the coefficient of `x^k`.
fn char_poly(m: &NumericMatrix) -> Vec<Scalar> {
    let n = m.dim();
    let mut c = vec![Scalar::zero(); n + 1];
    c[n] = Scalar::one();
    let mut mk = NumericMatrix::zero(n);
    for k in 1..=n {
        mk = m.mul(&mk).unwrap().add(&NumericMatrix::identity(n).scale(&c[n - k + 1])).unwrap();
        c[n - k] = m.mul(&mk).unwrap().trace().scale(&Q::new(BigInt::from(-1), BigInt::from(k)));
    }
    c
}

fn unsupported(m: &NumericMatrix, why: &str) -> Error {
    Error::UnsupportedSpectrum(format!("{why} for\n{m}"))
}

/// `μ` with `a_k = r_k μ^k` for every coefficient, taken from the first
/// nonzero one.
fn homogeneous_scale(m: &NumericMatrix, c: &[Scalar]) -> Result<Scalar> {
    let n = c.len() - 1;
    for k in 1..=n {
        let a = &c[n - k];
        if a.is_zero() {
            continue;
        }
        let mut terms = a.iter_terms();
        let (_, has_j, pw) = terms.next().unwrap();
        if has_j || terms.next().is_some() {
            return Err(unsupported(m, "characteristic coefficient is not a single monomial"));
        }
        let mut mu = Scalar::one();
        for p in Param::ALL {
            let e = pw[p.index()];
            if e % k as i32 != 0 {
                return Err(unsupported(m, "eigenvalue scale is not a parameter monomial"));
            }
            mu = &mu * &Scalar::param(p).pow(e / k as i32)?;
        }
        return Ok(mu);
    }
    Ok(Scalar::one())
}

fn eval(p: &[Q], y: &Q) -> Q {
    p.iter().rev().fold(Q::zero(), |acc, c| acc * y + c)
}

/// Divides by `y − r`, assuming `r` is a root.
fn deflate(p: &[Q], r: &Q) -> Vec<Q> {
    let n = p.len() - 1;
    let mut out = vec![Q::zero(); n];
    let mut carry = Q::zero();
    for i in (0..n).rev() {
        carry = &p[i + 1] + &carry * r;
        out[i] = carry.clone();
    }
    out
}

fn divisors(n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            out.push(n / d);
        }
        d += 1;
    }
    out
}

/// Rational roots with multiplicity of a rational polynomial (ascending).
fn rational_roots(m: &NumericMatrix, mut p: Vec<Q>) -> Result<Vec<(Q, u32)>> {
    let mut roots: Vec<(Q, u32)> = Vec::new();
    let push = |roots: &mut Vec<(Q, u32)>, r: Q| match roots.iter_mut().find(|(x, _)| *x == r) {
        Some(e) => e.1 += 1,
        None => roots.push((r, 1)),
    };
    while p.len() > 1 && p[0].is_zero() {
        p.remove(0);
        push(&mut roots, Q::zero());
    }
    if p.len() > 1 {
        let lcm = p.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = p.iter().map(|c| (c * Q::from_integer(lcm.clone())).to_integer()).collect();
        let a0 = ints[0].abs().to_u64().filter(|x| *x < 1 << 40);
        let an = ints[ints.len() - 1].abs().to_u64().filter(|x| *x < 1 << 40);
        let (Some(a0), Some(an)) = (a0, an) else {
            return Err(unsupported(m, "characteristic coefficients too large"));
        };
        for num in divisors(a0) {
            for den in divisors(an) {
                for sign in [1i64, -1] {
                    let r = Q::new(BigInt::from(sign) * BigInt::from(num), BigInt::from(den));
                    while p.len() > 1 && eval(&p, &r).is_zero() {
                        p = deflate(&p, &r);
                        push(&mut roots, r.clone());
                    }
                }
            }
        }
    }
    if p.len() > 1 {
        return Err(unsupported(m, "characteristic polynomial does not split over the rationals"));
    }
    Ok(roots)
}

fn annihilator(m: &NumericMatrix, mu: &Scalar, roots: &[(Q, u32)]) -> NumericMatrix {
    let n = m.dim();
    let mut out = NumericMatrix::identity(n);
    for (c, k) in roots {
        let shifted = m.sub(&NumericMatrix::identity(n).scale(&mu.scale(c))).unwrap();
        out = out.mul(&shifted.pow(*k)).unwrap();
    }
    out
}

pub fn spectrum(m: &NumericMatrix) -> Result<Spectrum> {
    let c = char_poly(m);
    let mu = homogeneous_scale(m, &c)?;
    let n = c.len() - 1;
    let mut p = vec![Q::zero(); n + 1];
    for (k, ck) in c.iter().enumerate() {
        let r = ck * &mu.pow(k as i32 - n as i32)?;
        p[k] = r.as_rational().ok_or_else(|| unsupported(m, "eigenvalues are not multiples of one scale"))?;
    }
    let alg = rational_roots(m, p)?;
    let mut minimal: Vec<(Q, u32)> = alg.clone();
    for i in 0..minimal.len() {
        while minimal[i].1 > 1 {
            minimal[i].1 -= 1;
            if !annihilator(m, &mu, &minimal).is_zero() {
                minimal[i].1 += 1;
                break;
            }
        }
    }
    Ok(Spectrum { scale: mu, roots: alg.into_iter().zip(minimal).map(|((c, a), (_, k))| (c, a, k)).collect() })
}

fn invert(mut a: Vec<Vec<Q>>) -> Option<Vec<Vec<Q>>> {
    let n = a.len();
    let mut inv: Vec<Vec<Q>> = (0..n).map(|i| (0..n).map(|j| if i == j { Q::one() } else { Q::zero() }).collect()).collect();
    for col in 0..n {
        let piv = (col..n).find(|r| !a[*r][col].is_zero())?;
        a.swap(col, piv);
        inv.swap(col, piv);
        let d = a[col][col].clone();
        for j in 0..n {
            a[col][j] = &a[col][j] / &d;
            inv[col][j] = &inv[col][j] / &d;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for j in 0..n {
                    let (x, y) = (&a[col][j] * &f, &inv[col][j] * &f);
                    a[r][j] -= x;
                    inv[r][j] -= y;
                }
            }
        }
    }
    Some(inv)
}

fn falling(l: u32, k: u32) -> Q {
    Q::from_integer(((l - k + 1)..=l).map(BigInt::from).product())
}

/// `exp(Mt) = Σ t^k e^{λt} C_{k,λ}` by Hermite interpolation of `e^{xt}`
/// on the minimal polynomial.
pub fn exp_terms(m: &NumericMatrix) -> Result<Vec<(ExpTerm, NumericMatrix)>> {
    let sp = spectrum(m)?;
    let mu = &sp.scale;
    let conds: Vec<(usize, u32)> =
        sp.roots.iter().enumerate().flat_map(|(i, (_, _, k))| (0..*k).map(move |j| (i, j))).collect();
    let d = conds.len();
    let a: Vec<Vec<Q>> = conds
        .iter()
        .map(|(i, k)| {
            let c = &sp.roots[*i].0;
            (0..d as u32)
                .map(|l| if l < *k { Q::zero() } else { falling(l, *k) * num_traits::pow(c.clone(), (l - k) as usize) })
                .collect()
        })
        .collect();
    let s = invert(a).ok_or_else(|| unsupported(m, "singular interpolation system"))?;
    let powers: Vec<NumericMatrix> = (0..d as u32).map(|l| m.pow(l)).collect();
    let mut out = Vec::new();
    for (col, (i, k)) in conds.iter().enumerate() {
        let mut c = NumericMatrix::zero(m.dim());
        for (l, pl) in powers.iter().enumerate() {
            if s[l][col].is_zero() {
                continue;
            }
            let f = mu.pow(*k as i32 - l as i32)?.scale(&s[l][col]);
            c = c.add(&pl.scale(&f))?;
        }
        if !c.is_zero() {
            out.push((ExpTerm { k: *k, lambda: mu.scale(&sp.roots[*i].0) }, c));
        }
    }
    Ok(out)
}

/// `exp(N)` for `N` with only the eigenvalue zero.
pub fn exp_numeric(n: &NumericMatrix) -> Result<NumericMatrix> {
    let mut out = NumericMatrix::zero(n.dim());
    for (t, c) in exp_terms(n)? {
        if !t.lambda.is_zero() {
            return Err(unsupported(n, "exp(N) with a nonzero eigenvalue has no exact scalar value"));
        }
        out = out.add(&c)?;
    }
    Ok(out)
}
