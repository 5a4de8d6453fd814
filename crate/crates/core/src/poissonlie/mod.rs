//! Poisson–Lie structures on function algebras of groups: invariant vector
//! fields, Sklyanin brackets and the Jacobi / Poisson–Hopf / quantization
//! checks.

mod catalog;
mod checks;

use std::collections::BTreeMap;
use std::fmt;

pub use catalog::{
    eeo_table, iso11_left_fields, iso11_recipe, iso11_right_fields, iso11_table, sb2_left_fields, sb2_recipe,
    sb2_right_fields, sb2_right_fields_from_group_law, sb2_table,
};
pub use checks::{check_jacobi, check_poisson_hopf, check_weyl_correspondence, to_function};

use crate::coeffring::{ExpPoly, Scalar, Var};
use crate::error::{Error, Result};
use crate::liebialg::{LieAlgebraSC, Tensor2};
use crate::outcome::Outcome;

/// Derivation `Σ_x c_x ∂_x` of a commutative coordinate ring.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VectorField {
    comps: BTreeMap<Var, ExpPoly>,
}

impl VectorField {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn new(comps: &[(&str, ExpPoly)]) -> Self {
        let mut out = Self::zero();
        for (x, c) in comps {
            out = out.plus(&Self::single(Var::new(x), c.clone()));
        }
        out
    }

    fn single(x: Var, c: ExpPoly) -> Self {
        let mut comps = BTreeMap::new();
        if !c.is_zero() {
            comps.insert(x, c);
        }
        VectorField { comps }
    }

    /// `∂_x`.
    pub fn partial(x: &str) -> Self {
        Self::single(Var::new(x), ExpPoly::one())
    }

    pub fn component(&self, x: Var) -> ExpPoly {
        self.comps.get(&x).cloned().unwrap_or_default()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Var, &ExpPoly)> {
        self.comps.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.comps.is_empty()
    }

    pub fn apply(&self, f: &ExpPoly) -> ExpPoly {
        let mut out = ExpPoly::zero();
        for (x, c) in &self.comps {
            let d = f.partial_derivative(*x);
            if !d.is_zero() {
                out = &out + &(c * &d);
            }
        }
        out
    }

    pub fn plus(&self, other: &VectorField) -> VectorField {
        let mut comps = self.comps.clone();
        for (x, c) in &other.comps {
            let sum = &comps.get(x).cloned().unwrap_or_default() + c;
            if sum.is_zero() {
                comps.remove(x);
            } else {
                comps.insert(*x, sum);
            }
        }
        VectorField { comps }
    }

    pub fn scale(&self, s: &Scalar) -> VectorField {
        let comps: BTreeMap<Var, ExpPoly> =
            self.comps.iter().map(|(x, c)| (*x, c.scale(s))).filter(|(_, c)| !c.is_zero()).collect();
        VectorField { comps }
    }
}

impl fmt::Display for VectorField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.comps.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .comps
            .iter()
            .map(|(x, c)| if c.len() > 1 { format!("({c})·∂_{x}") } else { format!("{c}·∂_{x}") })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// `[X, Y] = X∘Y − Y∘X`, computed on coordinates.
pub fn field_commutator(x: &VectorField, y: &VectorField) -> VectorField {
    let mut vars: Vec<Var> = x.comps.keys().chain(y.comps.keys()).copied().collect();
    vars.sort();
    vars.dedup();
    let mut out = VectorField::zero();
    for v in vars {
        let c = &x.apply(&y.component(v)) - &y.apply(&x.component(v));
        out = out.plus(&VectorField::single(v, c));
    }
    out
}

/// Invariant fields indexed by Lie algebra basis names.
pub type FieldSet = BTreeMap<String, VectorField>;

/// How a field set closes: `[X_a, X_b] = ε Σ c_ab^c X_c` with one sign `ε`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Closure {
    pub sign: Option<i8>,
    pub outcome: Outcome,
}

pub fn field_closure(fields: &FieldSet, g: &LieAlgebraSC) -> Result<Closure> {
    let field = |i: usize| {
        fields.get(&g.names()[i]).ok_or_else(|| Error::Config(format!("no vector field for {}", g.names()[i])))
    };
    let mut sign: Option<i8> = None;
    for i in 0..g.dim() {
        for j in i + 1..g.dim() {
            let lhs = field_commutator(field(i)?, field(j)?);
            let mut rhs = VectorField::zero();
            for (k, c) in g.bracket_basis(i, j).iter().enumerate() {
                if !c.is_zero() {
                    rhs = rhs.plus(&field(k)?.scale(c));
                }
            }
            let at = format!("[X_{}, X_{}]", g.names()[i], g.names()[j]);
            let measured = if rhs.is_zero() {
                if !lhs.is_zero() {
                    return Ok(Closure { sign, outcome: Outcome::fail(at, lhs) });
                }
                continue;
            } else if lhs == rhs {
                1
            } else if lhs == rhs.scale(&Scalar::int(-1)) {
                -1
            } else {
                return Ok(Closure { sign, outcome: Outcome::fail(at, lhs) });
            };
            match sign {
                Some(s) if s != measured => {
                    let outcome = Outcome::fail(at, format!("sign {measured} after sign {s}"));
                    return Ok(Closure { sign, outcome });
                }
                _ => sign = Some(measured),
            }
        }
    }
    Ok(Closure { sign, outcome: Outcome::Pass })
}

/// Coordinates with an antisymmetric table of fundamental brackets,
/// extended to all functions as a biderivation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PoissonStructure {
    coords: Vec<Var>,
    table: Vec<Vec<ExpPoly>>,
}

impl PoissonStructure {
    /// Entries listed once per pair; the transposed entries follow.
    pub fn new(coords: &[&str], entries: &[(&str, &str, ExpPoly)]) -> Result<Self> {
        let n = coords.len();
        let mut p = PoissonStructure {
            coords: coords.iter().map(|x| Var::new(x)).collect(),
            table: vec![vec![ExpPoly::zero(); n]; n],
        };
        let mut seen = Vec::new();
        for (x, y, v) in entries {
            let (i, j) = (p.index(Var::new(x))?, p.index(Var::new(y))?);
            if i == j {
                return Err(Error::Config(format!("{{{x}, {x}}} must vanish")));
            }
            if seen.contains(&(i.min(j), i.max(j))) {
                return Err(Error::Config(format!("{{{x}, {y}}} given twice")));
            }
            seen.push((i.min(j), i.max(j)));
            p.table[i][j] = v.clone();
            p.table[j][i] = -v;
        }
        Ok(p)
    }

    pub fn from_table(coords: &[Var], table: Vec<Vec<ExpPoly>>) -> Result<Self> {
        let n = coords.len();
        if table.len() != n || table.iter().any(|r| r.len() != n) {
            return Err(Error::Dimension(format!("bracket table must be {n}×{n}")));
        }
        for i in 0..n {
            for j in 0..=i {
                if table[i][j] != -&table[j][i] {
                    return Err(Error::Config(format!("table not antisymmetric at {{{}, {}}}", coords[i], coords[j])));
                }
            }
        }
        Ok(PoissonStructure { coords: coords.to_vec(), table })
    }

    pub fn zero(coords: &[&str]) -> Self {
        Self::new(coords, &[]).expect("empty table")
    }

    pub fn coords(&self) -> &[Var] {
        &self.coords
    }

    pub fn index(&self, x: Var) -> Result<usize> {
        self.coords.iter().position(|c| *c == x).ok_or_else(|| Error::UnknownVariable(x.name().into()))
    }

    /// `{x, y}` for coordinates.
    pub fn entry(&self, x: &str, y: &str) -> Result<&ExpPoly> {
        Ok(&self.table[self.index(Var::new(x))?][self.index(Var::new(y))?])
    }

    /// Replaces `{x, y}` (and `{y, x}`).
    pub fn with_entry(&self, x: &str, y: &str, v: ExpPoly) -> Result<Self> {
        let (i, j) = (self.index(Var::new(x))?, self.index(Var::new(y))?);
        if i == j {
            return Err(Error::Config(format!("{{{x}, {x}}} must vanish")));
        }
        let mut out = self.clone();
        out.table[j][i] = -&v;
        out.table[i][j] = v;
        Ok(out)
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        let table = self.table.iter().map(|r| r.iter().map(|v| v.scale(s)).collect()).collect();
        PoissonStructure { coords: self.coords.clone(), table }
    }

    pub fn is_zero(&self) -> bool {
        self.table.iter().flatten().all(ExpPoly::is_zero)
    }

    /// `{f, g} = Σ ∂_i f ∂_j g {x_i, x_j}`.
    pub fn bracket(&self, f: &ExpPoly, g: &ExpPoly) -> ExpPoly {
        let df: Vec<ExpPoly> = self.coords.iter().map(|x| f.partial_derivative(*x)).collect();
        let dg: Vec<ExpPoly> = self.coords.iter().map(|x| g.partial_derivative(*x)).collect();
        let mut out = ExpPoly::zero();
        for (i, a) in df.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in dg.iter().enumerate() {
                if !b.is_zero() && !self.table[i][j].is_zero() {
                    out = &out + &(&(a * b) * &self.table[i][j]);
                }
            }
        }
        out
    }

    /// One line `{x, y} = …` per coordinate pair, in coordinate order.
    pub fn render(&self) -> String {
        let mut lines = Vec::new();
        for i in 0..self.coords.len() {
            for j in i + 1..self.coords.len() {
                lines.push(format!("{{{}, {}}} = {}", self.coords[i], self.coords[j], self.table[i][j]));
            }
        }
        lines.join("\n")
    }
}

impl fmt::Display for PoissonStructure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

/// An r-matrix on `g` with left and right invariant fields on the group.
#[derive(Clone, Debug)]
pub struct SklyaninRecipe {
    pub algebra: LieAlgebraSC,
    pub r: Tensor2,
    pub left: FieldSet,
    pub right: FieldSet,
    pub coords: Vec<Var>,
}

impl SklyaninRecipe {
    /// The same recipe with `r` replaced by its antisymmetric part.
    pub fn antisymmetrized(&self) -> Self {
        let n = self.r.len();
        let half = Scalar::rat(1, 2);
        let r = (0..n).map(|a| (0..n).map(|b| (&self.r[a][b] - &self.r[b][a]).try_mul(&half).unwrap()).collect()).collect();
        SklyaninRecipe { r, ..self.clone() }
    }
}

/// `{f, g} = r^{αβ}(X_α^L f · X_β^L g − X_α^R f · X_β^R g)`.
pub fn sklyanin_bracket(recipe: &SklyaninRecipe, f: &ExpPoly, g: &ExpPoly) -> Result<ExpPoly> {
    let names = recipe.algebra.names();
    fn get<'a>(set: &'a FieldSet, names: &[String], side: &str, a: usize) -> Result<&'a VectorField> {
        set.get(&names[a]).ok_or_else(|| Error::Config(format!("no {side} field for {}", names[a])))
    }
    let mut out = ExpPoly::zero();
    for (a, row) in recipe.r.iter().enumerate() {
        for (b, c) in row.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (la, lb) = (get(&recipe.left, names, "left", a)?, get(&recipe.left, names, "left", b)?);
            let (ra, rb) = (get(&recipe.right, names, "right", a)?, get(&recipe.right, names, "right", b)?);
            let term = &(&la.apply(f) * &lb.apply(g)) - &(&ra.apply(f) * &rb.apply(g));
            out = &out + &term.scale(c);
        }
    }
    Ok(out)
}

/// The Sklyanin bracket on every coordinate pair.
pub fn bracket_table(recipe: &SklyaninRecipe) -> Result<PoissonStructure> {
    let n = recipe.coords.len();
    let mut table = vec![vec![ExpPoly::zero(); n]; n];
    for i in 0..n {
        for j in 0..n {
            if i != j {
                let (x, y) = (ExpPoly::var(recipe.coords[i]), ExpPoly::var(recipe.coords[j]));
                table[i][j] = sklyanin_bracket(recipe, &x, &y)?;
            }
        }
    }
    PoissonStructure::from_table(&recipe.coords, table)
}
