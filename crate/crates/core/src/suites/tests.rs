use super::*;

fn names(specs: &[&SuiteSpec]) -> Vec<&'static str> {
    specs.iter().map(|s| s.name).collect()
}

#[test]
fn registry_and_tags() {
    assert_eq!(registry().len(), 18);
    assert_eq!(names(&list_suites(Some("poisson"))), ["sklyanin", "weyl-correspondence", "poisson-hopf"]);
    assert_eq!(list_suites(Some("cayley-klein")).len(), 3);
    assert!(list_suites(Some("nope")).is_empty());
    assert!(matches!(find_suite("nope"), Err(Error::Config(_))));
    assert!(run_suites(&["casimir".into(), "nope".into()], RunConfig::default(), None, false).is_err());
    let listing = render_list(&list_suites(None));
    assert_eq!(listing.lines().count(), 18);
}

#[test]
fn low_order_axioms_pass() {
    let cfg = RunConfig { order: Some(1), ..Default::default() };
    let r = run_suite(find_suite("hopf-axioms").unwrap(), cfg);
    assert_eq!(r.status, Status::Pass, "{}", render_text(std::slice::from_ref(&r)));
    assert_eq!(r.config.order, Some(1));
    assert_eq!(r.config.catalog_keys.len(), 7);
    assert!(r.millis.is_none());
}

#[test]
fn sign_filter() {
    let cfg = RunConfig { order: Some(1), s: Some(0), ..Default::default() };
    let r = run_suite(find_suite("contraction").unwrap(), cfg);
    assert_eq!(r.status, Status::NotApplicable);
    let r = run_suite(find_suite("cayley-klein").unwrap(), cfg);
    assert_eq!(r.status, Status::Pass, "{}", render_text(std::slice::from_ref(&r)));
    assert_eq!(r.config.s, Some(0));
}

#[test]
fn json_shape() {
    let cfg = RunConfig { timings: true, ..Default::default() };
    let rs = run_suites(&["casimir".into(), "antipode-conjugation".into()], cfg, Some(2), false).unwrap();
    let v: serde_json::Value = serde_json::from_str(&render_json(&rs)).unwrap();
    assert_eq!(v["status"], "pass");
    let suites = v["suites"].as_array().unwrap();
    assert_eq!(suites[0]["suite"], "antipode-conjugation");
    for s in suites {
        for key in ["suite", "status", "checks", "millis", "config"] {
            assert!(s.get(key).is_some(), "{key}");
        }
        assert!(s["millis"].is_u64());
    }
    assert_eq!(exit_code(&rs), 0);
}

#[test]
fn reports_are_deterministic() {
    let names = ["casimir".to_string(), "bialgebra-cybe".into(), "sklyanin".into()];
    let a = run_suites(&names, RunConfig::default(), Some(3), false).unwrap();
    let b = run_suites(&names, RunConfig::default(), Some(1), false).unwrap();
    assert_eq!(render_json(&a), render_json(&b));
    assert_eq!(render_text(&a), render_text(&b));
}

fn broken(ctx: &mut Ctx) {
    ctx.check("one is two", false, "1 ≠ 2");
}

#[test]
fn fail_fast_skips_the_rest() {
    let bad = SuiteSpec { name: "broken", description: "", tags: &[], run: broken };
    let specs = [find_suite("casimir").unwrap(), &bad, find_suite("frt").unwrap()];
    let rs = run_until_failure(&specs, RunConfig::default());
    let statuses: Vec<Status> = rs.iter().map(|r| r.status).collect();
    assert_eq!(statuses, [Status::Pass, Status::Fail, Status::NotApplicable]);
    assert_eq!(rs[1].checks[0].witness.as_deref(), Some("at value: 1 ≠ 2"));
    assert_eq!(rs[2].checks[0].name, "skipped");
    assert_eq!(exit_code(&rs), 1);
    assert!(render_text(&rs[1..2]).starts_with("== broken [FAIL]\n"));
    let v: serde_json::Value = serde_json::from_str(&render_json(&rs)).unwrap();
    assert_eq!(v["status"], "fail");
}
