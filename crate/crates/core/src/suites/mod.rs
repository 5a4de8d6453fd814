//! Named verification suites over the catalog, and their reports.

mod algebra;
mod bialgebra;
mod dual;
mod matrix;
mod poisson;
#[cfg(test)]
mod tests;

use std::fmt::{self, Display, Write as _};
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::outcome::Outcome;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    NotApplicable,
}

impl Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "FAIL",
            Status::NotApplicable => "n/a",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

impl CheckResult {
    pub fn from_outcome(name: impl Into<String>, o: Outcome) -> Self {
        let name = name.into();
        match o {
            Outcome::Pass => CheckResult { name, status: Status::Pass, witness: None },
            Outcome::Fail(w) => {
                CheckResult { name, status: Status::Fail, witness: Some(format!("at {}: {}", w.at, w.residual)) }
            }
            Outcome::NotApplicable(r) => CheckResult { name, status: Status::NotApplicable, witness: Some(r) },
        }
    }
}

/// What a suite actually ran with.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SuiteConfig {
    pub order: Option<u32>,
    pub catalog_keys: Vec<String>,
    pub s: Option<i8>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteResult {
    pub suite: String,
    pub status: Status,
    pub checks: Vec<CheckResult>,
    /// Wall time, recorded only when timings are requested so that reports
    /// stay reproducible by default.
    pub millis: Option<u64>,
    pub config: SuiteConfig,
}

impl SuiteResult {
    fn skipped(name: &str, why: &str) -> Self {
        SuiteResult {
            suite: name.into(),
            status: Status::NotApplicable,
            checks: vec![CheckResult { name: "skipped".into(), status: Status::NotApplicable, witness: Some(why.into()) }],
            millis: None,
            config: SuiteConfig::default(),
        }
    }

    pub fn failed(&self) -> bool {
        self.status == Status::Fail
    }
}

/// Options shared by all suites; `None` means each suite's default.
#[derive(Clone, Copy, Debug, Default)]
pub struct RunConfig {
    pub order: Option<u32>,
    pub s: Option<i8>,
    pub timings: bool,
}

/// Collects check results while a suite runs.
pub struct Ctx {
    cfg: RunConfig,
    echo: SuiteConfig,
    checks: Vec<CheckResult>,
}

impl Ctx {
    fn new(cfg: RunConfig) -> Self {
        Ctx { cfg, echo: SuiteConfig { s: cfg.s, ..Default::default() }, checks: Vec::new() }
    }

    /// The truncation order, falling back to `default`.
    pub fn order(&mut self, default: u32) -> u32 {
        let d = self.cfg.order.unwrap_or(default);
        self.echo.order = Some(d);
        d
    }

    /// Cayley–Klein signs selected by `--s`.
    pub fn signs(&self) -> Vec<i8> {
        match self.cfg.s {
            Some(s) => vec![s],
            None => vec![-1, 0, 1],
        }
    }

    pub fn uses(&mut self, key: &str) {
        if !self.echo.catalog_keys.iter().any(|k| k == key) {
            self.echo.catalog_keys.push(key.into());
        }
    }

    pub fn outcome(&mut self, name: impl Into<String>, o: Result<Outcome>) {
        let o = o.unwrap_or_else(|e| Outcome::fail("error", e));
        self.checks.push(CheckResult::from_outcome(name, o));
    }

    pub fn check(&mut self, name: impl Into<String>, ok: bool, witness: impl Display) {
        self.outcome(name, Ok(if ok { Outcome::Pass } else { Outcome::fail("value", witness) }));
    }

    /// `got == expected`, the witness showing both sides.
    pub fn equal<T: PartialEq + Display>(&mut self, name: impl Into<String>, got: Result<T>, expected: &T) {
        let o = got.map(|g| if g == *expected { Outcome::Pass } else { Outcome::fail("value", format!("{g} ≠ {expected}")) });
        self.outcome(name, o);
    }

    /// Runs a fallible block; an error becomes a failing check.
    pub fn attempt(&mut self, name: &str, f: impl FnOnce(&mut Ctx) -> Result<()>) {
        if let Err(e) = f(self) {
            self.outcome(name, Err(e));
        }
    }
}

pub struct SuiteSpec {
    pub name: &'static str,
    pub description: &'static str,
    pub tags: &'static [&'static str],
    run: fn(&mut Ctx),
}

macro_rules! suite {
    ($name:expr, $desc:expr, [$($tag:expr),*], $run:path) => {
        SuiteSpec { name: $name, description: $desc, tags: &[$($tag),*], run: $run }
    };
}

static REGISTRY: [SuiteSpec; 18] = [
    suite!("hopf-axioms", "coassociativity, counit, antipode and compatibility for every catalog entry", ["hopf"], algebra::hopf_axioms),
    suite!("casimir", "centrality of the deformed Casimir", ["hopf"], algebra::casimir),
    suite!("antipode-conjugation", "antipode as conjugation by e^{wP+}", ["hopf"], algebra::antipode_conjugation),
    suite!("structure-tensor", "recurrences and closed-form entries of the structure tensor", ["dual"], dual::structure_tensor),
    suite!("dual-product", "products of dual basis elements against the structure tensor", ["dual"], dual::dual_product),
    suite!("dual-commutators", "commutators of dual coordinates read from the tensor", ["dual"], dual::dual_commutators),
    suite!("coordinate-lie-algebra", "Lie and Hopf closure of e^{2mχ}, a+, a-", ["dual"], dual::coordinate_lie_algebra),
    suite!("bialgebra-cybe", "Yang–Baxter equations, cocycles and first-order coproducts", ["bialgebra"], bialgebra::cybe),
    suite!("bialgebra-duality", "iso(1,1) and sb(2) as dual Lie bialgebras", ["bialgebra"], bialgebra::duality),
    suite!("t-specialization", "T-matrices in matrix realizations and their coproducts", ["matrix"], matrix::t_specialization),
    suite!("frt", "RTT relations for the 3×3 T-matrix", ["matrix"], matrix::frt),
    suite!("basis-change", "relation between the two 4×4 factorizations", ["matrix"], matrix::basis_change),
    suite!("sklyanin", "Sklyanin bracket tables and invariant field closure", ["poisson"], poisson::sklyanin),
    suite!("weyl-correspondence", "quantum commutators against Poisson brackets", ["poisson"], poisson::weyl),
    suite!("poisson-hopf", "group laws are Poisson maps", ["poisson"], poisson::poisson_hopf),
    suite!("cayley-klein", "Cayley–Klein members: axioms, Heisenberg relations, substitutions", ["hopf", "cayley-klein"], algebra::cayley_klein),
    suite!("coaction", "coactions on quantum planes", ["matrix", "cayley-klein"], matrix::coaction),
    suite!("contraction", "Heisenberg contraction of both Cayley–Klein signs", ["hopf", "cayley-klein"], algebra::contraction),
];

pub fn registry() -> &'static [SuiteSpec] {
    &REGISTRY
}

/// Suites in registry order, optionally restricted to one tag.
pub fn list_suites(tag: Option<&str>) -> Vec<&'static SuiteSpec> {
    REGISTRY.iter().filter(|s| tag.is_none_or(|t| s.tags.contains(&t))).collect()
}

pub fn find_suite(name: &str) -> Result<&'static SuiteSpec> {
    REGISTRY.iter().find(|s| s.name == name).ok_or_else(|| Error::Config(format!("unknown suite {name}")))
}

/// Renders a `name  description` table.
pub fn render_list(specs: &[&SuiteSpec]) -> String {
    let width = specs.iter().map(|s| s.name.len()).max().unwrap_or(0);
    specs.iter().map(|s| format!("{:width$}  {}\n", s.name, s.description)).collect()
}

pub fn run_suite(spec: &SuiteSpec, cfg: RunConfig) -> SuiteResult {
    let start = Instant::now();
    let mut ctx = Ctx::new(cfg);
    (spec.run)(&mut ctx);
    let status = if ctx.checks.iter().any(|c| c.status == Status::Fail) {
        Status::Fail
    } else if ctx.checks.iter().any(|c| c.status == Status::Pass) {
        Status::Pass
    } else {
        Status::NotApplicable
    };
    SuiteResult {
        suite: spec.name.into(),
        status,
        checks: ctx.checks,
        millis: cfg.timings.then(|| start.elapsed().as_millis() as u64),
        config: ctx.echo,
    }
}

/// Runs the named suites (all when empty). Without `fail_fast` they run in
/// parallel; with it, in name order, skipping everything after the first
/// failing suite. Results are sorted by suite name.
pub fn run_suites(names: &[String], cfg: RunConfig, jobs: Option<usize>, fail_fast: bool) -> Result<Vec<SuiteResult>> {
    let mut specs: Vec<&SuiteSpec> = if names.is_empty() || names.iter().any(|n| n == "all") {
        REGISTRY.iter().collect()
    } else {
        names.iter().map(|n| find_suite(n)).collect::<Result<_>>()?
    };
    specs.sort_by_key(|s| s.name);
    specs.dedup_by_key(|s| s.name);
    if fail_fast {
        return Ok(run_until_failure(&specs, cfg));
    }
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(j) = jobs {
        builder = builder.num_threads(j.max(1));
    }
    let pool = builder.build().map_err(|e| Error::Config(e.to_string()))?;
    Ok(pool.install(|| specs.par_iter().map(|s| run_suite(s, cfg)).collect()))
}

fn run_until_failure(specs: &[&SuiteSpec], cfg: RunConfig) -> Vec<SuiteResult> {
    let mut out = Vec::new();
    let mut failed = false;
    for s in specs {
        if failed {
            out.push(SuiteResult::skipped(s.name, "an earlier suite failed"));
        } else {
            let r = run_suite(s, cfg);
            failed = r.failed();
            out.push(r);
        }
    }
    out
}

#[derive(Serialize)]
struct Report<'a> {
    status: Status,
    suites: &'a [SuiteResult],
}

fn overall(results: &[SuiteResult]) -> Status {
    if results.iter().any(SuiteResult::failed) {
        Status::Fail
    } else {
        Status::Pass
    }
}

pub fn render_json(results: &[SuiteResult]) -> String {
    let report = Report { status: overall(results), suites: results };
    serde_json::to_string_pretty(&report).expect("report serializes") + "\n"
}

pub fn render_text(results: &[SuiteResult]) -> String {
    let mut out = String::new();
    for r in results {
        let mut cfg = Vec::new();
        if let Some(d) = r.config.order {
            cfg.push(format!("order {d}"));
        }
        if let Some(s) = r.config.s {
            cfg.push(format!("s = {s}"));
        }
        if !r.config.catalog_keys.is_empty() {
            cfg.push(r.config.catalog_keys.join(", "));
        }
        if let Some(ms) = r.millis {
            cfg.push(format!("{ms} ms"));
        }
        let _ = write!(out, "== {} [{}]", r.suite, r.status);
        let _ = if cfg.is_empty() { writeln!(out) } else { writeln!(out, " ({})", cfg.join("; ")) };
        for c in &r.checks {
            let _ = writeln!(out, "  {:4}  {}", c.status.to_string(), c.name);
            if let Some(w) = &c.witness {
                let _ = writeln!(out, "        {w}");
            }
        }
    }
    let checks: usize = results.iter().map(|r| r.checks.len()).sum();
    let failures: usize = results.iter().flat_map(|r| &r.checks).filter(|c| c.status == Status::Fail).count();
    let _ = writeln!(out, "{}: {} suites, {checks} checks, {failures} failing", overall(results), results.len());
    out
}

/// 0 when nothing failed, 1 otherwise.
pub fn exit_code(results: &[SuiteResult]) -> i32 {
    if overall(results) == Status::Fail {
        1
    } else {
        0
    }
}
