use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::{Arc, Mutex};

use super::element::{NCElement, NcMono, Part, Terms};
use crate::coeffring::{ExpPoly, Var};
use crate::error::{Error, Result};

static NEXT_ID: AtomicU64 = AtomicU64::new(1);

/// Default cap on any single exponent in a normal monomial.
pub const DEFAULT_EXPONENT_CAP: u32 = 16;

/// One level of a tower: a generator that only appears polynomially, or a
/// cluster of mutually commuting generators that may carry exponentials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Level {
    Poly(Var),
    Block(Vec<Var>),
}

impl Level {
    pub fn vars(&self) -> Vec<Var> {
        match self {
            Level::Poly(g) => vec![*g],
            Level::Block(vs) => vs.clone(),
        }
    }

    pub fn is_block(&self) -> bool {
        matches!(self, Level::Block(_))
    }
}

/// Commutator `[hi, lo]` and the generators it is declared to depend on.
#[derive(Clone, Debug)]
pub struct Rule {
    pub(crate) value: Terms,
    pub(crate) deps: BTreeSet<Var>,
}

impl Rule {
    pub fn deps(&self) -> &BTreeSet<Var> {
        &self.deps
    }
}

type SwapKey = (usize, Part, usize, Part);

/// Ordered tower of generators with commutation rules between levels.
pub struct Presentation {
    id: u64,
    name: String,
    levels: Vec<Level>,
    level_of: BTreeMap<Var, usize>,
    rules: BTreeMap<(Var, Var), Rule>,
    exp_cap: u32,
    pub(crate) swap_cache: Mutex<HashMap<SwapKey, Terms>>,
    pub(crate) mono_cache: Mutex<HashMap<(NcMono, NcMono), Terms>>,
}

impl fmt::Debug for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Presentation")
            .field("name", &self.name)
            .field("levels", &self.levels)
            .field("rules", &self.rules.len())
            .finish()
    }
}

/// Builds the level structure of a [`Presentation`].
#[derive(Clone, Debug)]
pub struct TowerBuilder {
    name: String,
    levels: Vec<Level>,
    cap: u32,
}

impl TowerBuilder {
    pub fn new(name: &str) -> Self {
        TowerBuilder { name: name.to_string(), levels: Vec::new(), cap: DEFAULT_EXPONENT_CAP }
    }

    pub fn poly(mut self, g: &str) -> Self {
        self.levels.push(Level::Poly(Var::new(g)));
        self
    }

    pub fn block(mut self, gens: &[&str]) -> Self {
        self.levels.push(Level::Block(gens.iter().map(|g| Var::new(g)).collect()));
        self
    }

    pub fn exponent_cap(mut self, cap: u32) -> Self {
        self.cap = cap;
        self
    }

    /// A presentation without commutation rules (every pair commutes until
    /// rules are attached with [`Presentation::with_rules`]).
    pub fn build(self) -> Result<Arc<Presentation>> {
        let mut level_of = BTreeMap::new();
        for (i, l) in self.levels.iter().enumerate() {
            for v in l.vars() {
                if level_of.insert(v, i).is_some() {
                    return Err(Error::Config(format!("generator {v} declared twice")));
                }
            }
        }
        Ok(Arc::new(Presentation::raw(self.name, self.levels, level_of, BTreeMap::new(), self.cap)))
    }
}

impl Presentation {
    fn raw(
        name: String,
        levels: Vec<Level>,
        level_of: BTreeMap<Var, usize>,
        rules: BTreeMap<(Var, Var), Rule>,
        exp_cap: u32,
    ) -> Presentation {
        Presentation {
            id: NEXT_ID.fetch_add(1, Ordering::Relaxed),
            name,
            levels,
            level_of,
            rules,
            exp_cap,
            swap_cache: Mutex::new(HashMap::new()),
            mono_cache: Mutex::new(HashMap::new()),
        }
    }

    pub fn id(&self) -> u64 {
        self.id
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn levels(&self) -> &[Level] {
        &self.levels
    }

    pub fn exponent_cap(&self) -> u32 {
        self.exp_cap
    }

    /// All generators in tower order.
    pub fn generators(&self) -> Vec<Var> {
        self.levels.iter().flat_map(|l| l.vars()).collect()
    }

    pub fn level_of(&self, g: Var) -> Result<usize> {
        self.level_of.get(&g).copied().ok_or_else(|| Error::UnknownGenerator(g.name().to_string()))
    }

    pub fn lookup(&self, name: &str) -> Result<Var> {
        let v = Var::new(name);
        self.level_of(v).map(|_| v)
    }

    pub fn same_levels(&self, other: &Presentation) -> bool {
        self.levels == other.levels
    }

    pub fn rules(&self) -> impl Iterator<Item = (&(Var, Var), &Rule)> {
        self.rules.iter()
    }

    /// `[hi, lo]` as stored (`hi` strictly above `lo` in the tower).
    pub(crate) fn rule(&self, hi: Var, lo: Var) -> Option<&Rule> {
        self.rules.get(&(hi, lo))
    }

    /// Rule value as an element of this presentation; zero if absent.
    pub fn rule_element(self: &Arc<Self>, hi: Var, lo: Var) -> NCElement {
        match self.rule(hi, lo) {
            Some(r) => NCElement::from_terms(self, r.value.clone()),
            None => NCElement::zero(self),
        }
    }

    /// A copy of this tower with the given commutators `[x, y] = value`.
    /// Pairs may be given in either order; the declared dependency set
    /// defaults to the support of the value.
    pub fn with_rules(self: &Arc<Self>, rules: &[(&str, &str, NCElement)]) -> Result<Arc<Presentation>> {
        let specs: Vec<_> = rules.iter().map(|(x, y, v)| (*x, *y, v.clone(), None)).collect();
        self.with_declared_rules(&specs)
    }

    /// Like [`Presentation::with_rules`] with explicit dependency sets.
    pub fn with_declared_rules(
        self: &Arc<Self>,
        rules: &[(&str, &str, NCElement, Option<Vec<&str>>)],
    ) -> Result<Arc<Presentation>> {
        let mut table = self.rules.clone();
        for (x, y, value, deps) in rules {
            let (vx, vy) = (self.lookup(x)?, self.lookup(y)?);
            if !self.same_levels(value.pres()) {
                return Err(Error::Mismatch(format!("rule [{x},{y}] built over a different tower")));
            }
            let (lx, ly) = (self.level_of[&vx], self.level_of[&vy]);
            let (key, val) = match lx.cmp(&ly) {
                std::cmp::Ordering::Greater => ((vx, vy), value.clone()),
                std::cmp::Ordering::Less => ((vy, vx), -value),
                std::cmp::Ordering::Equal => {
                    if value.is_zero() {
                        continue;
                    }
                    return Err(Error::Config(format!("[{x},{y}] lies inside one level and must vanish")));
                }
            };
            let deps = match deps {
                Some(ds) => ds.iter().map(|d| self.lookup(d)).collect::<Result<BTreeSet<_>>>()?,
                None => val.support(),
            };
            table.insert(key, Rule { value: val.terms().clone(), deps });
        }
        Ok(Arc::new(Presentation::raw(
            self.name.clone(),
            self.levels.clone(),
            self.level_of.clone(),
            table,
            self.exp_cap,
        )))
    }

    /// Same tower and rules under a new name.
    pub fn renamed(self: &Arc<Self>, name: &str) -> Arc<Presentation> {
        Arc::new(Presentation::raw(
            name.to_string(),
            self.levels.clone(),
            self.level_of.clone(),
            self.rules.clone(),
            self.exp_cap,
        ))
    }

    /// Same tower with a different exponent cap.
    pub fn with_exponent_cap(self: &Arc<Self>, cap: u32) -> Arc<Presentation> {
        Arc::new(Presentation::raw(
            self.name.clone(),
            self.levels.clone(),
            self.level_of.clone(),
            self.rules.clone(),
            cap,
        ))
    }

    /// Rewrites every rule value with `f(hi, lo, value)`.
    pub fn map_rules(
        self: &Arc<Self>,
        f: &dyn Fn(Var, Var, &NCElement) -> Result<NCElement>,
    ) -> Result<Arc<Presentation>> {
        let mut table = BTreeMap::new();
        for ((hi, lo), r) in &self.rules {
            let e = f(*hi, *lo, &NCElement::from_terms(self, r.value.clone()))?;
            if !e.is_zero() {
                table.insert((*hi, *lo), Rule { value: e.terms().clone(), deps: e.support() });
            }
        }
        Ok(Arc::new(Presentation::raw(
            self.name.clone(),
            self.levels.clone(),
            self.level_of.clone(),
            table,
            self.exp_cap,
        )))
    }

    /// Rule `[hi, lo]` read as a function of the block at `level`, as needed
    /// by the derivation formulas.
    pub(crate) fn block_rule(&self, hi: Var, lo: Var, level: usize) -> Result<ExpPoly> {
        let Some(r) = self.rule(hi, lo) else { return Ok(ExpPoly::zero()) };
        let mut out = ExpPoly::zero();
        for (m, c) in &r.value {
            for (i, p) in m.parts().iter().enumerate() {
                if i != level && !p.is_trivial() {
                    return Err(Error::Unsupported(format!(
                        "[{hi},{lo}] is not a function of the block at level {level}"
                    )));
                }
            }
            let f = match &m.parts()[level] {
                Part::Fn(e) => ExpPoly::from_mono(e.clone()),
                Part::Pow(_) => unreachable!("block level holds functions"),
            };
            out = &out + &f.scale(c);
        }
        Ok(out)
    }

    pub(crate) fn check_cap(&self, m: &NcMono) -> Result<()> {
        for p in m.parts() {
            let e = match p {
                Part::Pow(e) => *e,
                Part::Fn(f) => f.max_degree(),
            };
            if e > self.exp_cap {
                return Err(Error::ExponentOverflow { exponent: e, cap: self.exp_cap });
            }
        }
        Ok(())
    }

    pub(crate) fn vars_of_level(&self, i: usize) -> Vec<Var> {
        self.levels[i].vars()
    }
}
