//! One line per acceptance criterion; the test fails if any criterion does.

use std::collections::BTreeMap;
use std::io::Write;
use std::sync::Arc;
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use qgf_core::coeffring::{ExpPoly, Param, Scalar, Var};
use qgf_core::dualform::{compute_structure_tensor, verify_dual_product};
use qgf_core::hopfcore::{catalog, catalog_get, contract_presentation, test_monomials, Contraction, HopfPresentation};
use qgf_core::ncengine::{oracle_multiply, NCElement, Presentation};
use qgf_core::poissonlie::to_function;
use qgf_core::suites::{find_suite, render_json, render_text, run_suite, run_suites, RunConfig, Status, SuiteResult};
use qgf_core::Result;

struct Verdict {
    ok: bool,
    detail: String,
}

fn verdict(ok: bool, detail: impl Into<String>) -> Verdict {
    Verdict { ok, detail: detail.into() }
}

fn suite(name: &str, order: Option<u32>) -> (SuiteResult, Duration) {
    let start = Instant::now();
    let r = run_suite(find_suite(name).expect("registered"), RunConfig { order, ..Default::default() });
    (r, start.elapsed())
}

/// All named suites pass; the detail lists check counts or the first failure.
fn suites_pass(names: &[&str]) -> Verdict {
    let mut details = Vec::new();
    let mut ok = true;
    for n in names {
        let (r, _) = suite(n, None);
        ok &= r.status == Status::Pass;
        let count = |s: Status| r.checks.iter().filter(|c| c.status == s).count();
        match r.checks.iter().find(|c| c.status == Status::Fail) {
            Some(c) => details.push(format!("{n}: {} {}", c.name, c.witness.clone().unwrap_or_default())),
            None => details.push(format!("{n}: {} pass, {} n/a", count(Status::Pass), count(Status::NotApplicable))),
        }
    }
    verdict(ok, details.join("; "))
}

fn c1() -> Verdict {
    let (r, t) = suite("hopf-axioms", Some(3));
    let keys = r.config.catalog_keys.len();
    let ok = r.status == Status::Pass && keys == 7 && t < Duration::from_secs(60);
    verdict(ok, format!("{keys} catalog entries, {} checks, {:.1} s", r.checks.len(), t.as_secs_f64()))
}

fn c5() -> Verdict {
    let start = Instant::now();
    let run = || -> Result<usize> {
        let f = compute_structure_tensor(&catalog_get("uw-iso11-ah")?, 4)?;
        Ok(verify_dual_product(&f, catalog_get("funw-iso11")?.algebra(), 4)?.len())
    };
    let bad = run();
    let t = start.elapsed();
    // Index triples of degree ≤ 4, paired with combined degree ≤ 4.
    let by_degree = |d: u32| ((d + 1) * (d + 2) / 2) as usize;
    let products: usize = (0..=4).map(|a| (0..=4 - a).map(|b| by_degree(a) * by_degree(b)).sum::<usize>()).sum();
    let ok = matches!(bad, Ok(0)) && t < Duration::from_secs(120);
    verdict(ok, format!("{products} products, mismatches {bad:?}, {:.2} s including the tensor", t.as_secs_f64()))
}

/// Coefficient of `λ^k` in `f`, after checking that lower powers vanish.
fn leading(f: &ExpPoly, k: i32) -> std::result::Result<ExpPoly, String> {
    for low in -4..k {
        let c = f.param_coeff(Param::Lambda, low);
        if !c.is_zero() {
            return Err(format!("λ^{low} term {c} does not vanish"));
        }
    }
    Ok(f.param_coeff(Param::Lambda, k))
}

/// Contracted relations computed on commutative functions: substitute
/// `θ = λθ'`, `a2 = λa2'`, `v = λv'` into the relation, expand in `λ` and
/// keep the order that survives the division by the generators' weights.
fn series_contraction(h: &HopfPresentation) -> Result<BTreeMap<(String, String), ExpPoly>> {
    let lam = Scalar::param(Param::Lambda);
    let weight = |x: &str| if x == "theta" || x == "a2" { 1 } else { 0 };
    let scaled: BTreeMap<Var, ExpPoly> =
        ["theta", "a2"].iter().map(|x| (Var::new(x), ExpPoly::var(Var::new(x)).scale(&lam))).collect();
    let v = &lam * &Scalar::param(Param::Vp);
    let a = h.algebra();
    let mut out = BTreeMap::new();
    for ((hi, lo), _) in a.rules() {
        let f = to_function(&a.rule_element(*hi, *lo), &BTreeMap::new())?;
        let f = f.subst_param(Param::V, &v)?.compose(&scaled)?.expand_series(6);
        let k = weight(hi.name()) + weight(lo.name());
        let c = leading(&f, k).map_err(|e| qgf_core::Error::Config(format!("[{hi}, {lo}]: {e}")))?;
        // Report every relation as [x, y] with x first in theta, a1, a2.
        let order = |x: &str| ["theta", "a1", "a2"].iter().position(|g| *g == x);
        let (x, y, c) = if order(hi.name()) < order(lo.name()) { (hi, lo, c) } else { (lo, hi, -&c) };
        out.insert((x.name().to_string(), y.name().to_string()), c);
    }
    Ok(out)
}

fn c12() -> Verdict {
    let base = suites_pass(&["contraction"]);
    let th = ExpPoly::var(Var::new("theta"));
    let a1 = ExpPoly::var(Var::new("a1"));
    let vp = Scalar::param(Param::Vp);
    let expected: BTreeMap<(String, String), ExpPoly> = [
        (("theta", "a1"), ExpPoly::zero()),
        (("theta", "a2"), th.scale(&vp)),
        (("a1", "a2"), a1.scale(&vp)),
    ]
    .into_iter()
    .map(|((x, y), f)| ((x.to_string(), y.to_string()), f))
    .collect();
    let mut problems = Vec::new();
    for key in ["funv-ck-elliptic", "funv-ck-hyperbolic"] {
        let run = || -> Result<Option<String>> {
            let h = catalog_get(key)?;
            let series = series_contraction(&h)?;
            if series != expected {
                return Ok(Some(format!("{key}: series gives {series:?}")));
            }
            let c = contract_presentation(&h, &Contraction::heisenberg())?;
            for ((hi, lo), f) in &series {
                let (x, y) = (c.gen(hi)?, c.gen(lo)?);
                let got = to_function(&x.commutator(&y)?, &BTreeMap::new())?;
                if got != *f {
                    return Ok(Some(format!("{key}: [{hi}, {lo}] engine {got} vs series {f}")));
                }
            }
            Ok(None)
        };
        match run() {
            Ok(None) => {}
            Ok(Some(p)) => problems.push(p),
            Err(e) => problems.push(format!("{key}: {e}")),
        }
    }
    let ok = base.ok && problems.is_empty();
    let detail = if problems.is_empty() { format!("{}; λ-series agrees for s = ±1", base.detail) } else { problems.join("; ") };
    verdict(ok, detail)
}

/// Words of degree ≤ 4 plus `e^{x}` for block generators, with degrees.
fn monomials(p: &Arc<Presentation>) -> Result<Vec<(u32, NCElement)>> {
    let mut out = vec![(0, NCElement::one(p))];
    for m in test_monomials(p, 4)? {
        let d = m.iter().next().map(|(mono, _)| mono.total_degree()).unwrap_or(0);
        out.push((d, m));
    }
    for l in p.levels() {
        if l.is_block() {
            for x in l.vars() {
                out.push((1, NCElement::func(p, &ExpPoly::exp_var(x, Scalar::one()))?));
                out.push((1, NCElement::func(p, &ExpPoly::exp_var(x, Scalar::int(-2)))?));
            }
        }
    }
    Ok(out)
}

fn random_element(rng: &mut ChaCha8Rng, pool: &[NCElement]) -> NCElement {
    let mut x = NCElement::zero(pool[0].pres());
    for _ in 0..rng.gen_range(1..=3) {
        let m = pool.choose(rng).expect("non-empty pool");
        x = &x + &m.scale(&Scalar::int(rng.gen_range(-3..=3)));
    }
    x
}

fn c13() -> Verdict {
    let mut pairs = 0usize;
    let mut triples = 0usize;
    let mut problems = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for e in catalog() {
        let p = e.hopf.algebra();
        let run = |rng: &mut ChaCha8Rng, pairs: &mut usize, triples: &mut usize| -> Result<Option<String>> {
            let ms = monomials(p)?;
            for (dx, x) in &ms {
                for (dy, y) in &ms {
                    if dx + dy > 4 {
                        continue;
                    }
                    *pairs += 1;
                    let (fast, slow) = (x * y, oracle_multiply(x, y)?);
                    if fast != slow {
                        return Ok(Some(format!("{}: ({x})·({y}) = {fast} vs {slow}", e.key)));
                    }
                }
            }
            let pool: Vec<NCElement> = ms.into_iter().filter(|(d, _)| *d <= 2).map(|(_, m)| m).collect();
            for _ in 0..100 {
                let (x, y, z) = (random_element(rng, &pool), random_element(rng, &pool), random_element(rng, &pool));
                *triples += 1;
                if &(&x * &y) * &z != &x * &(&y * &z) {
                    return Ok(Some(format!("{}: associativity fails for {x}, {y}, {z}", e.key)));
                }
            }
            Ok(None)
        };
        match run(&mut rng, &mut pairs, &mut triples) {
            Ok(None) => {}
            Ok(Some(p)) => problems.push(p),
            Err(err) => problems.push(format!("{}: {err}", e.key)),
        }
    }
    let a = run_suites(&[], RunConfig::default(), Some(4), false);
    let b = run_suites(&[], RunConfig::default(), Some(1), false);
    let identical = match (&a, &b) {
        (Ok(a), Ok(b)) => render_json(a) == render_json(b) && render_text(a) == render_text(b),
        _ => false,
    };
    if !identical {
        problems.push("reports differ between runs".into());
    }
    let detail = format!(
        "{pairs} product pairs, {triples} associativity triples over {} algebras, reports byte-identical: {identical}{}",
        catalog().len(),
        if problems.is_empty() { String::new() } else { format!("; {}", problems.join("; ")) }
    );
    verdict(problems.is_empty(), detail)
}

#[test]
fn acceptance() {
    let criteria: Vec<(&str, Box<dyn Fn() -> Verdict>)> = vec![
        ("Hopf axioms at order 3 for every catalog entry", Box::new(c1)),
        ("Casimir centrality", Box::new(|| suites_pass(&["casimir"]))),
        ("antipode as conjugation", Box::new(|| suites_pass(&["antipode-conjugation"]))),
        ("structure tensor recurrences and closed forms", Box::new(|| suites_pass(&["structure-tensor"]))),
        ("dual basis products against the structure tensor", Box::new(c5)),
        ("T-matrix specializations and coproducts", Box::new(|| suites_pass(&["t-specialization"]))),
        ("FRT relations", Box::new(|| suites_pass(&["frt"]))),
        ("basis change between factorizations", Box::new(|| suites_pass(&["basis-change"]))),
        ("Sklyanin, Jacobi, Weyl and Poisson–Hopf", Box::new(|| suites_pass(&["sklyanin", "weyl-correspondence", "poisson-hopf"]))),
        ("Lie bialgebras", Box::new(|| suites_pass(&["bialgebra-cybe", "bialgebra-duality"]))),
        ("Cayley–Klein family and coactions", Box::new(|| suites_pass(&["cayley-klein", "coaction"]))),
        ("contraction with λ-series cross-check", Box::new(c12)),
        ("engine integrity and report determinism", Box::new(c13)),
    ];
    let mut failed = Vec::new();
    let mut out = std::io::stdout();
    let _ = writeln!(out);
    for (i, (name, f)) in criteria.iter().enumerate() {
        let v = f();
        let tag = if v.ok { "PASS" } else { "FAIL" };
        let _ = writeln!(out, "criterion {:2} {tag}: {name} — {}", i + 1, v.detail);
        if !v.ok {
            failed.push(i + 1);
        }
    }
    assert!(failed.is_empty(), "failing criteria: {failed:?}");
}
