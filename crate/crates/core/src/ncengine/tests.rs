use std::sync::Arc;

use super::*;
use crate::coeffring::{ExpPoly, Param, Scalar, Var};

fn w() -> Scalar {
    Scalar::param(Param::W)
}

fn e(x: &str, c: Scalar) -> ExpPoly {
    ExpPoly::exp_var(Var::new(x), c)
}

fn v(x: &str) -> ExpPoly {
    ExpPoly::var(Var::new(x))
}

fn uah() -> Arc<Presentation> {
    let t = TowerBuilder::new("uah").block(&["A-", "A+"]).poly("H").build().unwrap();
    let winv = w().inverse().unwrap();
    let h_ap = (&e("A+", w().scale(&crate::coeffring::q(2))) - &ExpPoly::one()).scale(&winv);
    let h_am = (&v("A-") * &e("A+", w().scale(&crate::coeffring::q(2)))).scale(&Scalar::int(-2));
    t.with_rules(&[
        ("H", "A+", NCElement::func(&t, &h_ap).unwrap()),
        ("H", "A-", NCElement::func(&t, &h_am).unwrap()),
    ])
    .unwrap()
}

fn fun() -> Arc<Presentation> {
    let t = TowerBuilder::new("fun").poly("a-").poly("a+").block(&["chi"]).build().unwrap();
    let chi_ap = (&e("chi", Scalar::int(2)) - &ExpPoly::one()).scale(&w());
    let am = NCElement::gen(&t, "a-").unwrap();
    t.with_rules(&[
        ("chi", "a+", NCElement::func(&t, &chi_ap).unwrap()),
        ("a+", "a-", am.scale(&w().scale(&crate::coeffring::q(-2)))),
    ])
    .unwrap()
}

fn g(p: &Arc<Presentation>, n: &str) -> NCElement {
    NCElement::gen(p, n).unwrap()
}

fn f(p: &Arc<Presentation>, x: &ExpPoly) -> NCElement {
    NCElement::func(p, x).unwrap()
}

#[test]
fn h_times_a_minus() {
    let p = uah();
    let lhs = &g(&p, "H") * &g(&p, "A-");
    let e2 = e("A+", w().scale(&crate::coeffring::q(2)));
    let expected = &(&g(&p, "A-") * &g(&p, "H")) - &f(&p, &(&v("A-") * &e2).scale(&Scalar::int(2)));
    assert_eq!(lhs, expected);
}

#[test]
fn commuting_cluster_needs_no_correction() {
    let p = uah();
    assert_eq!(&g(&p, "A+") * &g(&p, "A-"), &g(&p, "A-") * &g(&p, "A+"));
}

#[test]
fn h_squared_times_a_minus_matches_oracle() {
    let p = uah();
    let h2 = g(&p, "H").pow(2).unwrap();
    let lhs = &h2 * &g(&p, "A-");
    let oracle = oracle_multiply(&h2, &g(&p, "A-")).unwrap();
    assert_eq!(lhs, oracle);
    let e2 = f(&p, &e("A+", w().scale(&crate::coeffring::q(2))));
    let am = g(&p, "A-");
    let expected = &(&(&am * &h2) - &(&(&am * &e2) * &g(&p, "H")).scale(&Scalar::int(4)))
        + &(&am * &e2).scale(&Scalar::int(4));
    assert_eq!(lhs, expected, "got {lhs}");
}

#[test]
fn fun_commutators() {
    let p = fun();
    let c = g(&p, "chi").commutator(&g(&p, "a+")).unwrap();
    let expected = f(&p, &(&e("chi", Scalar::int(2)) - &ExpPoly::one()).scale(&w()));
    assert_eq!(c, expected);
    assert!(g(&p, "chi").commutator(&g(&p, "a-")).unwrap().is_zero());
    let c = g(&p, "a+").commutator(&g(&p, "a-")).unwrap();
    assert_eq!(c, g(&p, "a-").scale(&w().scale(&crate::coeffring::q(-2))));
}

#[test]
fn fast_product_agrees_with_oracle_on_small_words() {
    for p in [uah(), fun()] {
        let gens = p.generators();
        let mut monos = vec![NCElement::one(&p)];
        for a in &gens {
            monos.push(g(&p, a.name()));
            for b in &gens {
                monos.push(&g(&p, a.name()) * &g(&p, b.name()));
            }
        }
        for x in &monos {
            for y in &monos {
                assert_eq!(x * y, oracle_multiply(x, y).unwrap(), "{x} * {y}");
            }
        }
    }
}

#[test]
fn exponent_cap_is_enforced() {
    let p = uah().with_exponent_cap(3);
    let h = g(&p, "H");
    assert!(matches!(h.pow(4), Err(crate::Error::ExponentOverflow { exponent: 4, cap: 3 })));
}

fn upk() -> Arc<Presentation> {
    let t = TowerBuilder::new("upk").block(&["P-", "P+"]).poly("K").build().unwrap();
    let winv = w().inverse().unwrap();
    let sinh = crate::coeffring::sinh(Var::new("P+"), w());
    let cosh = crate::coeffring::cosh(Var::new("P+"), w());
    t.with_rules(&[
        ("K", "P+", NCElement::func(&t, &sinh.scale(&winv.scale(&crate::coeffring::q(2)))).unwrap()),
        ("K", "P-", NCElement::func(&t, &(&v("P-") * &cosh).scale(&Scalar::int(-2))).unwrap()),
    ])
    .unwrap()
}

#[test]
fn k_p_plus_commutator() {
    let p = upk();
    let c = g(&p, "K").commutator(&g(&p, "P+")).unwrap();
    let sinh = crate::coeffring::sinh(Var::new("P+"), w());
    assert_eq!(c, f(&p, &sinh.scale(&w().inverse().unwrap().scale(&crate::coeffring::q(2)))));
}

#[test]
fn conjugated_k_gives_antipode() {
    let p = upk();
    let ep = f(&p, &e("P+", w()));
    let em = f(&p, &e("P+", -w()));
    let lhs = -&(&(&ep * &g(&p, "K")) * &em);
    let sinh = crate::coeffring::sinh(Var::new("P+"), w());
    let expected = &(-&g(&p, "K")) + &f(&p, &sinh.scale(&Scalar::int(2)));
    assert_eq!(lhs, expected);
}

#[test]
fn self_commutator_vanishes() {
    let p = uah();
    let x = &(&g(&p, "H") * &g(&p, "A-")) + &f(&p, &e("A+", w()));
    assert!(x.commutator(&x).unwrap().is_zero());
}

fn delta_am(p: &Arc<Presentation>) -> TensorElement {
    let two_w = w().scale(&crate::coeffring::q(2));
    &TensorElement::pure(&[f(p, &e("A+", -&two_w)), g(p, "A-")])
        + &TensorElement::pure(&[g(p, "A-"), NCElement::one(p)])
}

#[test]
fn tensor_products() {
    let p = uah();
    let one = NCElement::one(&p);
    let ap = g(&p, "A+");
    let lhs = &TensorElement::pure(&[one.clone(), ap.clone()]) * &TensorElement::pure(&[ap.clone(), one.clone()]);
    assert_eq!(lhs, TensorElement::pure(&[ap.clone(), ap.clone()]));

    let d = delta_am(&p);
    let sq = &d * &d;
    let four_w = w().scale(&crate::coeffring::q(4));
    let two_w = w().scale(&crate::coeffring::q(2));
    let am = g(&p, "A-");
    let expected = &(&TensorElement::pure(&[f(&p, &e("A+", -&four_w)), am.pow(2).unwrap()])
        + &TensorElement::pure(&[&am * &f(&p, &e("A+", -&two_w)), am.clone()]).scale(&Scalar::int(2)))
        + &TensorElement::pure(&[am.pow(2).unwrap(), one.clone()]);
    assert_eq!(sq, expected);

    let dap = &TensorElement::pure(&[one.clone(), ap.clone()]) + &TensorElement::pure(&[ap.clone(), one.clone()]);
    let cube = dap.pow(3).unwrap();
    assert_eq!(cube.coeff(&[NcMono::one(p.levels()), ap.pow(3).unwrap().iter().next().unwrap().0.clone()]), Scalar::one());
    assert_eq!(cube.len(), 4);
    let three = TensorElement::pure(&[one.clone(), one.clone(), one.clone()]);
    assert!(matches!(three.mul(&dap), Err(crate::Error::Dimension(_))));
}

fn coproduct_uah(p: &Arc<Presentation>) -> Morphism {
    let two_w = w().scale(&crate::coeffring::q(2));
    let one = NCElement::one(p);
    let mut m = Morphism::new(p, &[p.clone(), p.clone()], false);
    m.set("A+", &TensorElement::pure(&[one.clone(), g(p, "A+")]) + &TensorElement::pure(&[g(p, "A+"), one.clone()]))
        .unwrap();
    m.set("A-", delta_am(p)).unwrap();
    m.set("H", &TensorElement::pure(&[one.clone(), g(p, "H")]) + &TensorElement::pure(&[g(p, "H"), f(p, &e("A+", two_w))]))
        .unwrap();
    m
}

#[test]
fn morphism_extends_multiplicatively() {
    let p = uah();
    let delta = coproduct_uah(&p);
    let x = &g(&p, "A-") * &g(&p, "A+");
    let lhs = delta.apply(&x).unwrap();
    let rhs = &delta.apply(&g(&p, "A-")).unwrap() * &delta.apply(&g(&p, "A+")).unwrap();
    assert_eq!(lhs, rhs);
    let y = f(&p, &e("A+", w()));
    let img = delta.apply(&y).unwrap();
    assert_eq!(img, TensorElement::pure(&[y.clone(), y.clone()]));
    let mut eps = Morphism::new(&p, &[], false);
    for gname in ["A-", "A+", "H"] {
        eps.set_scalar(gname, Scalar::zero()).unwrap();
    }
    assert!(eps.apply_scalar(&(&g(&p, "H") * &g(&p, "A-"))).unwrap().is_zero());
    assert_eq!(eps.apply_scalar(&y).unwrap(), Scalar::one());
}

#[test]
fn exponential_of_nonlinear_image_is_rejected() {
    let p = uah();
    let mut m = Morphism::algebra(&p, &p);
    m.set_element("A+", &(&g(&p, "A+") * &g(&p, "A-"))).unwrap();
    m.set_element("A-", &g(&p, "A-")).unwrap();
    m.set_element("H", &g(&p, "H")).unwrap();
    assert!(matches!(m.apply(&f(&p, &e("A+", w()))), Err(crate::Error::Unsupported(_))));
    let partial = Morphism::algebra(&p, &p);
    assert!(matches!(partial.apply(&g(&p, "H")), Err(crate::Error::UnknownGenerator(_))));
}

#[test]
fn expansion_examples() {
    let p = uah();
    let d = delta_am(&p).expand_to_degree(2).unwrap();
    let one = NCElement::one(&p);
    let am = g(&p, "A-");
    let ap = g(&p, "A+");
    let two_w = w().scale(&crate::coeffring::q(2));
    let expected = &(&(&TensorElement::pure(&[one.clone(), am.clone()])
        + &TensorElement::pure(&[am.clone(), one.clone()]))
        - &TensorElement::pure(&[ap.clone(), am.clone()]).scale(&two_w))
        + &TensorElement::pure(&[ap.pow(2).unwrap(), am.clone()]).scale(&(&w() * &w()).scale(&crate::coeffring::q(2)));
    assert_eq!(d, expected);

    let word = &(&am * &ap) * &g(&p, "H");
    assert_eq!(word.expand_to_degree(3), word);
    assert_eq!(word.expand_to_degree(7), word);

    let q = fun();
    let x = f(&q, &(&e("chi", Scalar::int(2)) - &ExpPoly::one()).scale(&w()));
    assert_eq!(x.expand_to_degree(1), g(&q, "chi").scale(&two_w));
}

#[test]
fn catalog_like_towers_validate() {
    assert!(validate_presentation(&uah()).is_valid());
    assert!(validate_presentation(&fun()).is_valid());
    assert!(validate_presentation(&upk()).is_valid());
}

#[test]
fn rule_leaving_its_block_is_reported() {
    let p = uah();
    let bad = p.with_rules(&[("H", "A+", g(&p, "H"))]).unwrap();
    let report = validate_presentation(&bad);
    assert!(!report.is_valid());
    assert_eq!(report.issues[0].pair, "[H,A+]");
    assert!(report.issues[0].residual.contains('H'));
}

#[test]
fn wrong_dependency_declaration_is_reported() {
    let p = uah();
    let c = p.rule_element(Var::new("H"), Var::new("A+"));
    let bad = p.with_declared_rules(&[("H", "A+", c, Some(vec!["A-"]))]).unwrap();
    let report = validate_presentation(&bad);
    assert_eq!(report.issues.len(), 1);
    assert_eq!(report.issues[0].check, "declared dependencies");
}

#[test]
fn jacobi_failure_is_reported() {
    // three polynomial generators with [z,y] = x, [z,x] = 0, [y,x] = y: not associative
    let t = TowerBuilder::new("bad").poly("x").poly("y").poly("z").build().unwrap();
    let bad = t
        .with_rules(&[("z", "y", g(&t, "x")), ("y", "x", g(&t, "y"))])
        .unwrap();
    let report = validate_presentation(&bad);
    assert!(report.issues.iter().any(|i| i.check == "Jacobi"), "{report:?}");
}
