//! Finite-dimensional Lie bialgebras: structure constants, r-matrices,
//! Schouten bracket, cocommutators and duality.

mod catalog;
mod checks;
mod linearize;
#[cfg(test)]
mod tests;

use std::collections::BTreeMap;
use std::fmt;

pub use catalog::{delta_nc, iso11_ah, iso11_pk, r_hat, r_n, r_n_ah, r_s, sb2};
pub use checks::{
    check_bialgebra_duality, check_cocycle, check_cojacobi, check_cybe, check_mcybe, coboundary_cocommutator,
    schouten, search_diagonal_pairing, PairingSearch,
};
pub use linearize::linearized_cocommutator;

use crate::coeffring::Scalar;
use crate::error::{Error, Result};

/// `[e_i, e_j] = Σ_k c[i][j][k] e_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieAlgebraSC {
    names: Vec<String>,
    c: Vec<Vec<Vec<Scalar>>>,
}

pub type Vector = Vec<Scalar>;

impl LieAlgebraSC {
    /// Brackets listed once per unordered pair; the rest follows by
    /// antisymmetry. Jacobi is checked.
    pub fn new(names: &[&str], brackets: &[(&str, &str, &[(&str, Scalar)])]) -> Result<Self> {
        let n = names.len();
        let mut g = LieAlgebraSC {
            names: names.iter().map(|s| s.to_string()).collect(),
            c: vec![vec![vec![Scalar::zero(); n]; n]; n],
        };
        for (x, y, value) in brackets {
            let (i, j) = (g.index(x)?, g.index(y)?);
            if i == j {
                return Err(Error::Config(format!("[{x},{x}] must vanish")));
            }
            for (z, s) in value.iter() {
                let k = g.index(z)?;
                g.c[i][j][k] = &g.c[i][j][k] + s;
                g.c[j][i][k] = -&g.c[i][j][k];
            }
        }
        if let Some((i, j, k)) = g.jacobi_failure() {
            return Err(Error::Config(format!(
                "Jacobi fails on ({}, {}, {})",
                g.names[i], g.names[j], g.names[k]
            )));
        }
        Ok(g)
    }

    pub fn dim(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index(&self, name: &str) -> Result<usize> {
        self.names.iter().position(|n| n == name).ok_or_else(|| Error::UnknownGenerator(name.into()))
    }

    pub fn constant(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.c[i][j][k]
    }

    pub fn basis(&self, i: usize) -> Vector {
        let mut v = vec![Scalar::zero(); self.dim()];
        v[i] = Scalar::one();
        v
    }

    /// `[e_i, e_j]` as a vector.
    pub fn bracket_basis(&self, i: usize, j: usize) -> &Vector {
        &self.c[i][j]
    }

    pub fn bracket(&self, x: &Vector, y: &Vector) -> Vector {
        let n = self.dim();
        let mut out = vec![Scalar::zero(); n];
        for i in 0..n {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..n {
                if y[j].is_zero() {
                    continue;
                }
                let xy = &x[i] * &y[j];
                for k in 0..n {
                    if !self.c[i][j][k].is_zero() {
                        out[k] = &out[k] + &(&xy * &self.c[i][j][k]);
                    }
                }
            }
        }
        out
    }

    fn jacobi_failure(&self) -> Option<(usize, usize, usize)> {
        let n = self.dim();
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let (ei, ej, ek) = (self.basis(i), self.basis(j), self.basis(k));
                    let a = self.bracket(&ei, &self.bracket(&ej, &ek));
                    let b = self.bracket(&ej, &self.bracket(&ek, &ei));
                    let c = self.bracket(&ek, &self.bracket(&ei, &ej));
                    if (0..n).any(|m| !(&(&a[m] + &b[m]) + &c[m]).is_zero()) {
                        return Some((i, j, k));
                    }
                }
            }
        }
        None
    }
}

/// Dense `n×n` or `n×n×n` tensor of scalars.
pub type Tensor2 = Vec<Vec<Scalar>>;
pub type Tensor3 = Vec<Vec<Vec<Scalar>>>;

/// `Σ_{i<j} r^{ij} e_i∧e_j` with `e_i∧e_j = e_i⊗e_j − e_j⊗e_i`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Bivector {
    n: usize,
    coeffs: BTreeMap<(usize, usize), Scalar>,
}

impl Bivector {
    pub fn zero(n: usize) -> Self {
        Bivector { n, coeffs: BTreeMap::new() }
    }

    /// `c·e_i∧e_j` for any `i ≠ j`.
    pub fn wedge(n: usize, i: usize, j: usize, c: Scalar) -> Self {
        let mut b = Self::zero(n);
        b.add(i, j, c);
        b
    }

    fn add(&mut self, i: usize, j: usize, c: Scalar) {
        if i == j || c.is_zero() {
            return;
        }
        let (key, c) = if i < j { ((i, j), c) } else { ((j, i), -&c) };
        let v = &self.coeffs.get(&key).cloned().unwrap_or_default() + &c;
        if v.is_zero() {
            self.coeffs.remove(&key);
        } else {
            self.coeffs.insert(key, v);
        }
    }

    /// From a dense tensor, which must be antisymmetric.
    pub fn from_tensor(t: &Tensor2) -> Result<Self> {
        let n = t.len();
        let mut b = Self::zero(n);
        for i in 0..n {
            if !t[i][i].is_zero() {
                return Err(Error::Mismatch("tensor is not antisymmetric".into()));
            }
            for j in i + 1..n {
                if t[i][j] != -&t[j][i] {
                    return Err(Error::Mismatch("tensor is not antisymmetric".into()));
                }
                b.add(i, j, t[i][j].clone());
            }
        }
        Ok(b)
    }

    pub fn to_tensor(&self) -> Tensor2 {
        let mut t = vec![vec![Scalar::zero(); self.n]; self.n];
        for ((i, j), c) in &self.coeffs {
            t[*i][*j] = c.clone();
            t[*j][*i] = -c;
        }
        t
    }

    pub fn coeff(&self, i: usize, j: usize) -> Scalar {
        match i.cmp(&j) {
            std::cmp::Ordering::Less => self.coeffs.get(&(i, j)).cloned().unwrap_or_default(),
            std::cmp::Ordering::Greater => -&self.coeff(j, i),
            std::cmp::Ordering::Equal => Scalar::zero(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&(usize, usize), &Scalar)> {
        self.coeffs.iter()
    }

    pub fn plus(&self, other: &Bivector) -> Bivector {
        let mut out = self.clone();
        for ((i, j), c) in &other.coeffs {
            out.add(*i, *j, c.clone());
        }
        out
    }

    pub fn scale(&self, s: &Scalar) -> Bivector {
        let mut out = Self::zero(self.n);
        for ((i, j), c) in &self.coeffs {
            out.add(*i, *j, c * s);
        }
        out
    }

    pub fn render(&self, names: &[String]) -> String {
        if self.coeffs.is_empty() {
            return "0".into();
        }
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .map(|((i, j), c)| format!("{}·{}∧{}", paren(c), names[*i], names[*j]))
            .collect();
        parts.join(" + ")
    }
}

/// `Σ_{i<j<k} t^{ijk} e_i∧e_j∧e_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Trivector {
    n: usize,
    coeffs: BTreeMap<(usize, usize, usize), Scalar>,
}

impl Trivector {
    /// From a dense tensor, which must be totally antisymmetric.
    pub fn from_tensor(t: &Tensor3) -> Result<Self> {
        let n = t.len();
        let mut coeffs = BTreeMap::new();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let v = &t[i][j][k];
                    let ok = *v == -&t[j][i][k] && *v == -&t[i][k][j];
                    if !ok {
                        return Err(Error::Mismatch("tensor is not totally antisymmetric".into()));
                    }
                    if i < j && j < k && !v.is_zero() {
                        coeffs.insert((i, j, k), v.clone());
                    }
                }
            }
        }
        Ok(Trivector { n, coeffs })
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&(usize, usize, usize), &Scalar)> {
        self.coeffs.iter()
    }

    pub fn render(&self, names: &[String]) -> String {
        if self.coeffs.is_empty() {
            return "0".into();
        }
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .map(|((i, j, k), c)| format!("{}·{}∧{}∧{}", paren(c), names[*i], names[*j], names[*k]))
            .collect();
        parts.join(" + ")
    }
}

impl fmt::Display for Trivector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .map(|((i, j, k), c)| format!("{}·e{i}∧e{j}∧e{k}", paren(c)))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// `δ(e_i)` for each basis element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cocommutator {
    pub images: Vec<Bivector>,
}

impl Cocommutator {
    /// Images given by basis name; unlisted elements map to zero.
    pub fn from_images(g: &LieAlgebraSC, images: &[(&str, Bivector)]) -> Result<Self> {
        let mut out = vec![Bivector::zero(g.dim()); g.dim()];
        for (x, b) in images {
            out[g.index(x)?] = b.clone();
        }
        Ok(Cocommutator { images: out })
    }

    /// `δ` extended linearly, as a dense tensor.
    pub fn apply(&self, x: &Vector) -> Tensor2 {
        let n = x.len();
        let mut t = vec![vec![Scalar::zero(); n]; n];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            let d = self.images[i].to_tensor();
            for a in 0..n {
                for b in 0..n {
                    if !d[a][b].is_zero() {
                        t[a][b] = &t[a][b] + &(xi * &d[a][b]);
                    }
                }
            }
        }
        t
    }
}

fn paren(c: &Scalar) -> String {
    if c.len() > 1 {
        format!("({c})")
    } else {
        c.to_string()
    }
}
