//! Matrix representations with noncommutative entries: exact matrix
//! exponentials, specialized T-matrices, FRT relations and coactions.

mod checks;
mod plane;
mod spectral;

use std::fmt;
use std::sync::Arc;

pub use checks::{
    check_coproduct_multiplicativity, check_frt, check_lie_representation, check_representation, frt_r_matrix,
    verify_basis_change, BasisChange,
};
pub use plane::{coaction_check, PlanePresentation};
pub use spectral::{exp_numeric, exp_terms, spectrum, ExpTerm, Spectrum};

use crate::coeffring::{ExpPoly, Scalar, Var};
use crate::error::{Error, Result};
use crate::ncengine::{NCElement, Presentation};

/// Square matrix of exact scalars.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NumericMatrix {
    e: Vec<Vec<Scalar>>,
}

impl NumericMatrix {
    pub fn new(rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::Dimension(format!("matrix with {n} rows is not square")));
        }
        Ok(NumericMatrix { e: rows })
    }

    pub fn from_ints(rows: &[&[i64]]) -> Result<Self> {
        Self::new(rows.iter().map(|r| r.iter().map(|x| Scalar::int(*x)).collect()).collect())
    }

    pub fn zero(n: usize) -> Self {
        NumericMatrix { e: vec![vec![Scalar::zero(); n]; n] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n);
        for i in 0..n {
            m.e[i][i] = Scalar::one();
        }
        m
    }

    /// `c·E_{ij}` (0-based).
    pub fn unit(n: usize, i: usize, j: usize, c: Scalar) -> Self {
        let mut m = Self::zero(n);
        m.e[i][j] = c;
        m
    }

    pub fn dim(&self) -> usize {
        self.e.len()
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.e[i][j]
    }

    pub fn is_zero(&self) -> bool {
        self.e.iter().flatten().all(Scalar::is_zero)
    }

    pub fn trace(&self) -> Scalar {
        (0..self.dim()).fold(Scalar::zero(), |acc, i| &acc + &self.e[i][i])
    }

    fn check_dim(&self, other: &NumericMatrix) -> Result<()> {
        if self.dim() != other.dim() {
            return Err(Error::Dimension(format!("{}×{} against {}×{}", self.dim(), self.dim(), other.dim(), other.dim())));
        }
        Ok(())
    }

    pub fn add(&self, other: &NumericMatrix) -> Result<NumericMatrix> {
        self.check_dim(other)?;
        Ok(NumericMatrix {
            e: self.e.iter().zip(&other.e).map(|(a, b)| a.iter().zip(b).map(|(x, y)| x + y).collect()).collect(),
        })
    }

    pub fn sub(&self, other: &NumericMatrix) -> Result<NumericMatrix> {
        self.add(&other.scale(&Scalar::int(-1)))
    }

    pub fn scale(&self, c: &Scalar) -> NumericMatrix {
        NumericMatrix { e: self.e.iter().map(|r| r.iter().map(|x| x * c).collect()).collect() }
    }

    pub fn mul(&self, other: &NumericMatrix) -> Result<NumericMatrix> {
        self.check_dim(other)?;
        let n = self.dim();
        let mut out = Self::zero(n);
        for i in 0..n {
            for k in 0..n {
                if self.e[i][k].is_zero() {
                    continue;
                }
                for j in 0..n {
                    if !other.e[k][j].is_zero() {
                        out.e[i][j] = &out.e[i][j] + &(&self.e[i][k] * &other.e[k][j]);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn pow(&self, k: u32) -> NumericMatrix {
        let mut out = Self::identity(self.dim());
        for _ in 0..k {
            out = out.mul(self).expect("same dimension");
        }
        out
    }

    pub fn commutator(&self, other: &NumericMatrix) -> Result<NumericMatrix> {
        self.mul(other)?.sub(&other.mul(self)?)
    }

    /// `(A ⊗ B)_{(i,a),(j,b)} = A_{ij} B_{ab}`.
    pub fn kron(&self, other: &NumericMatrix) -> NumericMatrix {
        let (n, m) = (self.dim(), other.dim());
        let mut out = Self::zero(n * m);
        for i in 0..n {
            for j in 0..n {
                for a in 0..m {
                    for b in 0..m {
                        out.e[i * m + a][j * m + b] = &self.e[i][j] * &other.e[a][b];
                    }
                }
            }
        }
        out
    }
}

impl fmt::Display for NumericMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.e {
            let cells: Vec<String> = row.iter().map(|x| x.to_string()).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

/// Square matrix with entries in one algebra.
#[derive(Clone, Debug)]
pub struct SymMatrix {
    pres: Arc<Presentation>,
    e: Vec<Vec<NCElement>>,
}

impl SymMatrix {
    pub fn new(pres: &Arc<Presentation>, rows: Vec<Vec<NCElement>>) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::Dimension(format!("matrix with {n} rows is not square")));
        }
        let e = rows.iter().map(|r| r.iter().map(|x| x.rebase(pres)).collect::<Result<_>>()).collect::<Result<_>>()?;
        Ok(SymMatrix { pres: pres.clone(), e })
    }

    pub fn from_numeric(pres: &Arc<Presentation>, m: &NumericMatrix) -> Self {
        let e = m.e.iter().map(|r| r.iter().map(|x| NCElement::constant(pres, x.clone())).collect()).collect();
        SymMatrix { pres: pres.clone(), e }
    }

    pub fn identity(pres: &Arc<Presentation>, n: usize) -> Self {
        Self::from_numeric(pres, &NumericMatrix::identity(n))
    }

    pub fn pres(&self) -> &Arc<Presentation> {
        &self.pres
    }

    pub fn dim(&self) -> usize {
        self.e.len()
    }

    pub fn get(&self, i: usize, j: usize) -> &NCElement {
        &self.e[i][j]
    }

    pub fn rows(&self) -> &[Vec<NCElement>] {
        &self.e
    }

    pub fn mul(&self, other: &SymMatrix) -> Result<SymMatrix> {
        let n = self.dim();
        if other.dim() != n {
            return Err(Error::Dimension(format!("{n}×{n} against {}×{}", other.dim(), other.dim())));
        }
        let mut e = vec![vec![NCElement::zero(&self.pres); n]; n];
        for (i, row) in e.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                for k in 0..n {
                    let (a, b) = (&self.e[i][k], &other.e[k][j]);
                    if !a.is_zero() && !b.is_zero() {
                        *cell = cell.try_add(&a.mul(b)?)?;
                    }
                }
            }
        }
        Ok(SymMatrix { pres: self.pres.clone(), e })
    }

    /// Entrywise map into another algebra.
    pub fn map(&self, f: impl Fn(&NCElement) -> Result<NCElement>) -> Result<SymMatrix> {
        let e: Vec<Vec<NCElement>> =
            self.e.iter().map(|r| r.iter().map(&f).collect::<Result<_>>()).collect::<Result<_>>()?;
        let pres = e.first().and_then(|r| r.first()).map(|x| x.pres().clone()).unwrap_or_else(|| self.pres.clone());
        Ok(SymMatrix { pres, e })
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for row in &self.e {
            let cells: Vec<String> = row.iter().map(|x| x.to_string()).collect();
            out.push_str(&format!("[{}]\n", cells.join(", ")));
        }
        out
    }
}

/// `exp(M t)` with `t` a generator of `pres`; entries are `Σ t^k e^{λt}`.
pub fn matrix_exp_generator(m: &NumericMatrix, pres: &Arc<Presentation>, t: &str) -> Result<SymMatrix> {
    let var = pres.lookup(t)?;
    let n = m.dim();
    let mut e = vec![vec![NCElement::zero(pres); n]; n];
    for (term, c) in exp_terms(m)? {
        let mut f = NCElement::gen(pres, t)?.pow(term.k)?;
        if !term.lambda.is_zero() {
            f = f.mul(&NCElement::func(pres, &ExpPoly::exp_var(var, term.lambda.clone()))?)?;
        }
        for (i, row) in e.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                if !c.get(i, j).is_zero() {
                    *cell = cell.try_add(&f.scale(c.get(i, j)))?;
                }
            }
        }
    }
    Ok(SymMatrix { pres: pres.clone(), e })
}

/// Ordered product `Π exp(M_i t_i)`; the identity of size `n` if empty.
pub fn specialize_t(factors: &[(&str, NumericMatrix)], pres: &Arc<Presentation>, n: usize) -> Result<SymMatrix> {
    let mut out = SymMatrix::identity(pres, n);
    for (t, m) in factors {
        if m.dim() != n {
            return Err(Error::Dimension(format!("factor {t} is {}×{}, expected {n}×{n}", m.dim(), m.dim())));
        }
        out = out.mul(&matrix_exp_generator(m, pres, t)?)?;
    }
    Ok(out)
}

/// The 3×3 matrices of `K`, `P₊`, `P₋` (also those of `H`, `A₊`, `A₋`).
pub fn d_matrices() -> [(&'static str, NumericMatrix); 3] {
    [
        ("K", NumericMatrix::from_ints(&[&[0, 0, 0], &[0, 0, -2], &[0, -2, 0]]).unwrap()),
        ("P+", NumericMatrix::from_ints(&[&[0, 0, 0], &[1, 0, 0], &[-1, 0, 0]]).unwrap()),
        ("P-", NumericMatrix::from_ints(&[&[0, 0, 0], &[1, 0, 0], &[1, 0, 0]]).unwrap()),
    ]
}

pub fn d_matrix(name: &str) -> Result<NumericMatrix> {
    let key = match name {
        "H" => "K",
        "A+" => "P+",
        "A-" => "P-",
        other => other,
    };
    d_matrices()
        .into_iter()
        .find(|(n, _)| *n == key)
        .map(|(_, m)| m)
        .ok_or_else(|| Error::UnknownGenerator(name.into()))
}

/// The 4×4 matrices `Q(χ̂)`, `Q(â₋)`, `Q(â₊)`.
pub fn q_matrices() -> [(&'static str, NumericMatrix); 3] {
    let w2 = Scalar::param(crate::coeffring::Param::W).scale(&crate::coeffring::q(2));
    let ap = NumericMatrix::unit(4, 0, 3, Scalar::one())
        .add(&NumericMatrix::unit(4, 1, 1, -&w2))
        .and_then(|m| m.add(&NumericMatrix::unit(4, 2, 2, w2)))
        .unwrap();
    [
        ("chi", NumericMatrix::unit(4, 0, 2, Scalar::one())),
        ("a-", NumericMatrix::unit(4, 1, 3, Scalar::one())),
        ("a+", ap),
    ]
}

pub fn q_matrix(name: &str) -> Result<NumericMatrix> {
    q_matrices().into_iter().find(|(n, _)| *n == name).map(|(_, m)| m).ok_or_else(|| Error::UnknownGenerator(name.into()))
}

/// `e^{â₋D(A₋)} e^{â₊D(A₊)} e^{χ̂D(H)}` over `Fun_w`.
pub fn t_dq(fun: &Arc<Presentation>) -> Result<SymMatrix> {
    specialize_t(&[("a-", d_matrix("A-")?), ("a+", d_matrix("A+")?), ("chi", d_matrix("H")?)], fun, 3)
}

/// `e^{A₋Q(â₋)} e^{A₊Q(â₊)} e^{HQ(χ̂)}` over `U_w`.
pub fn t_q(u: &Arc<Presentation>) -> Result<SymMatrix> {
    specialize_t(&[("A-", q_matrix("a-")?), ("A+", q_matrix("a+")?), ("H", q_matrix("chi")?)], u, 4)
}

/// `Q(â₁) = Q(â₋) + Q(â₊)`, `Q(â₂) = Q(â₋) − Q(â₊)`, `Q(θ̂) = −2Q(χ̂)`.
pub fn q_matrices_12() -> Result<[(&'static str, NumericMatrix); 3]> {
    let (am, ap, chi) = (q_matrix("a-")?, q_matrix("a+")?, q_matrix("chi")?);
    Ok([("a1", am.add(&ap)?), ("a2", am.sub(&ap)?), ("theta", chi.scale(&Scalar::int(-2)))])
}

/// The group element with rows `(1,0,0)`, `(a1, C, S₁)`, `(a2, S₂, C)`
/// for a `(θ, a1, a2)` algebra; `C = cosh jθ`, `S₁ = j sinh jθ`,
/// `S₂ = sinh jθ / j` with `j² = s`.
pub fn ck_group_element(pres: &Arc<Presentation>, s: i8) -> Result<SymMatrix> {
    use crate::coeffring::{cosh_j, sinh_j_over_j};
    let th = Var::new("theta");
    let one = Scalar::one();
    let c = NCElement::func(pres, &cosh_j(th, one.clone(), s))?;
    let s2 = NCElement::func(pres, &sinh_j_over_j(th, one, s))?;
    let s1 = s2.scale(&Scalar::int(s as i64));
    let (z, u) = (NCElement::zero(pres), NCElement::one(pres));
    SymMatrix::new(
        pres,
        vec![
            vec![u, z.clone(), z],
            vec![NCElement::gen(pres, "a1")?, c.clone(), s1],
            vec![NCElement::gen(pres, "a2")?, s2, c],
        ],
    )
}

impl PartialEq for SymMatrix {
    fn eq(&self, other: &Self) -> bool {
        self.e == other.e
    }
}

impl fmt::Display for SymMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}
