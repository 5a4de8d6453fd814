use super::*;
use crate::coeffring::{ExpPoly, Param, Scalar, Var};
use crate::ncengine::{validate_presentation, NCElement, TensorElement};
use crate::outcome::Outcome;

fn w() -> Scalar {
    Scalar::param(Param::W)
}

fn f(h: &HopfPresentation, x: &ExpPoly) -> NCElement {
    NCElement::func(h.algebra(), x).unwrap()
}

fn t2(a: &NCElement, b: &NCElement) -> TensorElement {
    TensorElement::pure(&[a.clone(), b.clone()])
}

#[test]
fn catalog_has_seven_unique_keys() {
    let keys: std::collections::BTreeSet<_> = catalog().iter().map(|e| e.key).collect();
    assert_eq!(keys.len(), 7);
    for k in CATALOG_KEYS {
        assert!(keys.contains(k));
    }
    assert!(matches!(catalog_get("uz-sl2"), Err(crate::Error::UnknownCatalogKey(_))));
}

#[test]
fn every_entry_validates_and_goldens_hold() {
    for e in catalog() {
        let r = validate_presentation(e.hopf.algebra());
        assert!(r.is_valid(), "{}: {:?}", e.key, r.issues);
        for g in &e.goldens {
            assert!(g.holds(), "{} / {}: {} ≠ {}", e.key, g.name, g.lhs, g.rhs);
        }
        for v in e.hopf.algebra().generators() {
            assert!(e.hopf.counit_of(v.name()).unwrap().is_zero());
        }
    }
}

#[test]
fn pk_coproduct_of_p_minus() {
    let h = catalog_get("uw-iso11-pk").unwrap();
    let pp = Var::new("P+");
    let pm = h.gen("P-").unwrap();
    let expected = &t2(&f(&h, &ExpPoly::exp_var(pp, -w())), &pm) + &t2(&pm, &f(&h, &ExpPoly::exp_var(pp, w())));
    assert_eq!(h.coproduct_of("P-").unwrap(), &expected);
}

#[test]
fn funw_antipode_of_a_plus() {
    let h = catalog_get("funw-iso11").unwrap();
    let e = f(&h, &ExpPoly::exp_var(Var::new("chi"), Scalar::int(-2)));
    let expected = (&e * &h.gen("a+").unwrap()).scale(&Scalar::int(-1));
    assert_eq!(h.gamma(&h.gen("a+").unwrap()).unwrap(), expected);
}

#[test]
fn parabolic_bracket_has_dual_unit() {
    let h = catalog_get("funv-ck-parabolic").unwrap();
    let (a1, a2) = (h.gen("a1").unwrap(), h.gen("a2").unwrap());
    let v = Scalar::param(Param::V);
    let expected = &a1.scale(&v) + &a2.scale(&(&v * &Scalar::j(0)));
    assert_eq!(a1.commutator(&a2).unwrap(), expected);
    // the other two brackets are polynomial: −vεθ and v(θ − εθ²/2)
    let th = Var::new("theta");
    let eps = Scalar::j(0);
    let c1 = h.gen("theta").unwrap().commutator(&a1).unwrap();
    assert_eq!(c1, f(&h, &ExpPoly::var(th).scale(&-&(&v * &eps))));
    let c2 = h.gen("theta").unwrap().commutator(&a2).unwrap();
    let th2 = &ExpPoly::var(th) * &ExpPoly::var(th);
    let expected = &ExpPoly::var(th).scale(&v) - &th2.scale(&(&(&v * &eps) * &Scalar::rat(1, 2)));
    assert_eq!(c2, f(&h, &expected));
}

#[test]
fn ck_brackets_split_into_real_and_imaginary_parts() {
    for key in ["funv-ck-elliptic", "funv-ck-parabolic", "funv-ck-hyperbolic"] {
        let h = catalog_get(key).unwrap();
        let s = h.s().unwrap();
        for ((hi, lo), _) in h.algebra().rules() {
            let x = h.algebra().rule_element(*hi, *lo);
            let split = |part: fn(&Scalar) -> Scalar| {
                let t = x.iter().map(|(m, c)| (m.clone(), part(c))).filter(|(_, c)| !c.is_zero()).collect();
                NCElement::from_terms(h.algebra(), t)
            };
            let (re, im) = (split(Scalar::real_part), split(Scalar::j_part));
            assert!(!re.iter().any(|(_, c)| c.has_j()) && !im.iter().any(|(_, c)| c.has_j()));
            if s != -1 {
                // exponents of the elliptic member carry j themselves
                assert_eq!(&re + &im.scale(&Scalar::j(s)), x, "{key} [{hi},{lo}]");
            }
        }
    }
}

#[test]
fn antipode_axiom_on_k_vanishes() {
    let h = catalog_get("uw-iso11-pk").unwrap();
    let k = h.gen("K").unwrap();
    let a = std::slice::from_ref(h.algebra());
    let gamma = h.antipode();
    let r = h.delta(&k).unwrap().map_leg(0, a, &|m| gamma.apply(m)).unwrap().multiply_legs(0).unwrap();
    assert!(r.is_zero(), "{r}");
}

#[test]
fn uah_and_funw_are_coassociative() {
    for key in ["uw-iso11-ah", "funw-iso11"] {
        assert_eq!(check_coassociativity(&catalog_get(key).unwrap(), 3).unwrap(), Outcome::Pass, "{key}");
    }
}

#[test]
fn hyperbolic_passes_at_degree_two() {
    let h = catalog_get("funv-ck-hyperbolic").unwrap();
    assert!(check_counit(&h, 2).unwrap().is_pass());
    assert!(check_antipode(&h, 2).unwrap().is_pass());
}

#[test]
fn dropped_sinh_term_is_caught_at_a_plus() {
    let h = catalog_get("funw-iso11").unwrap();
    let one = NCElement::one(h.algebra());
    let ap = h.gen("a+").unwrap();
    let ch = f(&h, &crate::coeffring::cosh(Var::new("chi"), Scalar::int(2)));
    let bad = h.with_coproduct("a+", &t2(&ap, &one) + &t2(&ch, &ap)).unwrap();
    match check_coassociativity(&bad, 3).unwrap() {
        Outcome::Fail(w) => assert_eq!(w.at, ap.to_string()),
        o => panic!("expected a witness, got {o}"),
    }
    assert!(!check_bialgebra_compatibility(&bad, 2).unwrap().is_pass());
}

#[test]
fn compatibility_examples() {
    let h = catalog_get("uw-iso11-pk").unwrap();
    let (k, pp) = (h.gen("K").unwrap(), h.gen("P+").unwrap());
    let l = h.delta(&k.commutator(&pp).unwrap()).unwrap();
    let r = h.delta(&k).unwrap().commutator(&h.delta(&pp).unwrap()).unwrap();
    assert_eq!(l, r);
    let h = catalog_get("funw-iso11").unwrap();
    let (chi, am) = (h.gen("chi").unwrap(), h.gen("a-").unwrap());
    assert!(h.delta(&chi).unwrap().commutator(&h.delta(&am).unwrap()).unwrap().is_zero());
}

#[test]
fn casimir_is_central_only_for_the_right_relations() {
    let h = catalog_get("uw-iso11-pk").unwrap();
    let c = casimir_pk(h.algebra()).unwrap();
    assert_eq!(check_centrality(h.algebra(), &c).unwrap(), Outcome::Pass);
    assert!(c.commutator(&h.gen("P+").unwrap()).unwrap().is_zero());
    let bad = h
        .algebra()
        .map_rules(&|hi, lo, x| Ok(if (hi.name(), lo.name()) == ("K", "P-") { x.scale(&Scalar::int(2)) } else { x.clone() }))
        .unwrap();
    assert!(matches!(check_centrality(&bad, &c).unwrap(), Outcome::Fail(_)));
}

#[test]
fn unit_substitutions() {
    let src = catalog_get("funw-iso11").unwrap();
    assert_eq!(verify_unit_substitution(&src, 1).unwrap(), Outcome::Pass);
    assert_eq!(verify_unit_substitution(&src, -1).unwrap(), Outcome::Pass);
    assert!(matches!(verify_unit_substitution(&src, 0).unwrap(), Outcome::NotApplicable(_)));
    assert_eq!(verify_nonstandard_substitution(&src).unwrap(), Outcome::Pass);
}

/// Expected brackets are the leading λ-coefficients read off the series
/// `sinh(jx)/j = x + s x³/6 + …`, `cosh(jx) − 1 = s x²/2 + …`.
#[test]
fn heisenberg_contraction() {
    let hyper = catalog_get("funv-ck-hyperbolic").unwrap();
    let ell = catalog_get("funv-ck-elliptic").unwrap();
    let c = contract_presentation(&hyper, &Contraction::heisenberg()).unwrap();
    let c2 = contract_presentation(&ell, &Contraction::heisenberg()).unwrap();
    let vp = Scalar::param(Param::Vp);
    let g = |n: &str| c.gen(n).unwrap();
    assert!(g("theta").commutator(&g("a1")).unwrap().is_zero());
    assert_eq!(g("theta").commutator(&g("a2")).unwrap(), g("theta").scale(&vp));
    assert_eq!(g("a1").commutator(&g("a2")).unwrap(), g("a1").scale(&vp));
    let rules = |h: &HopfPresentation| -> Vec<String> {
        h.algebra().rules().map(|((a, b), _)| format!("{a}{b}{}", h.algebra().rule_element(*a, *b))).collect()
    };
    assert_eq!(rules(&c), rules(&c2));
    for v in ["theta", "a1", "a2"] {
        assert_eq!(
            c.coproduct_of(v).unwrap().to_string(),
            c2.coproduct_of(v).unwrap().to_string(),
            "coproduct of {v}"
        );
        assert_eq!(c.antipode_of(v).unwrap().to_string(), c2.antipode_of(v).unwrap().to_string());
    }
    let one = NCElement::one(c.algebra());
    let expected = &(&t2(&g("a2"), &one) + &t2(&one, &g("a2"))) + &t2(&g("theta"), &g("a1"));
    assert_eq!(c.coproduct_of("a2").unwrap(), &expected);
    assert!(check_all(&c, 3).unwrap().is_pass());
}

#[test]
fn trivial_rescaling_is_identity() {
    let h = catalog_get("funv-ck-hyperbolic").unwrap();
    let id = Contraction { generators: vec![("a1".into(), 0)], param: None };
    let c = contract_presentation(&h, &id).unwrap();
    for ((a, b), _) in h.algebra().rules() {
        assert_eq!(c.algebra().rule_element(*a, *b).to_string(), h.algebra().rule_element(*a, *b).to_string());
    }
    for v in ["theta", "a1", "a2"] {
        assert_eq!(c.coproduct_of(v).unwrap().to_string(), h.coproduct_of(v).unwrap().to_string());
    }
}

#[test]
fn rescaling_only_a1_diverges() {
    let h = catalog_get("funv-ck-hyperbolic").unwrap();
    let bad = Contraction { generators: vec![("a1".into(), 1)], param: None };
    assert!(matches!(contract_presentation(&h, &bad), Err(crate::Error::DivergentLimit(_))));
}

#[test]
fn all_entries_pass_every_axiom_at_degree_three() {
    for e in catalog() {
        let o = check_all(&e.hopf, 3).unwrap();
        assert_eq!(o, Outcome::Pass, "{}", e.key);
    }
}
