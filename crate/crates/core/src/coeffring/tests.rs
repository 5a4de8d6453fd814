use std::collections::BTreeMap;

use proptest::prelude::*;

use super::*;
use crate::error::Error;

fn w() -> Scalar {
    Scalar::param(Param::W)
}

fn x() -> Var {
    Var::new("x")
}

fn degs(pairs: &[(Var, u32)]) -> BTreeMap<Var, u32> {
    pairs.iter().copied().collect()
}

#[test]
fn canonicalize_merges_without_collision() {
    let f = ExpPoly::canonicalize(vec![
        (Scalar::one(), degs(&[]), LinForm::single(x(), &w() * &Scalar::int(2))),
        (Scalar::int(-1), degs(&[]), LinForm::zero()),
    ]);
    let expected = &ExpPoly::exp_var(x(), &w() * &Scalar::int(2)) - &ExpPoly::one();
    assert_eq!(f, expected);
    assert_eq!(f.len(), 2);
}

#[test]
fn canonicalize_cancels() {
    let f = ExpPoly::canonicalize(vec![
        (Scalar::one(), degs(&[(x(), 1)]), LinForm::zero()),
        (Scalar::int(-1), degs(&[(x(), 1)]), LinForm::zero()),
    ]);
    assert!(f.is_zero());
}

#[test]
fn canonicalize_order_independent() {
    let raw = vec![
        (Scalar::int(3), degs(&[(x(), 2)]), LinForm::zero()),
        (Scalar::one(), degs(&[]), LinForm::single(x(), w())),
        (Scalar::int(-3), degs(&[(x(), 2)]), LinForm::zero()),
        (Scalar::int(2), degs(&[(x(), 1)]), LinForm::single(x(), w())),
    ];
    let mut rev = raw.clone();
    rev.reverse();
    let a = ExpPoly::canonicalize(raw.clone());
    assert_eq!(a, ExpPoly::canonicalize(rev));
    let again = ExpPoly::canonicalize(a.terms().map(|(m, c)| (c.clone(), m.degs().clone(), m.exp().clone())));
    assert_eq!(a, again);
}

#[test]
fn dual_unit_truncates_exponential() {
    let theta = Var::new("θ");
    let e = ExpPoly::exp_var(theta, Scalar::j(0));
    let expected = &ExpPoly::one() + &ExpPoly::var(theta).scale(&Scalar::j(0));
    assert_eq!(e, expected);
}

#[test]
fn double_unit_exponential_splits() {
    let theta = Var::new("θ");
    // cosh(jθ) = cosh θ and sinh(jθ) = j sinh θ for j² = 1.
    let cj = cosh(theta, Scalar::j(1));
    assert_eq!(cj, cosh(theta, Scalar::one()));
    let sj = sinh(theta, Scalar::j(1));
    assert_eq!(sj, sinh(theta, Scalar::one()).scale(&Scalar::j(1)));
}

#[test]
fn laurent_cancellation_in_product() {
    let e2 = ExpPoly::exp_var(x(), &w() * &Scalar::int(2));
    let winv = w().inverse().unwrap();
    let f = &e2.scale(&winv) - &ExpPoly::constant(winv.clone());
    let g = &ExpPoly::constant(w()) * &f;
    assert_eq!(g, &e2 - &ExpPoly::one());
}

#[test]
fn inverse_exponentials() {
    let p = &ExpPoly::exp_var(x(), w()) * &ExpPoly::exp_var(x(), -&w());
    assert_eq!(p, ExpPoly::one());
}

#[test]
fn casimir_stored_form() {
    let pp = Var::new("P+");
    let pm = Var::new("P-");
    let half_winv = w().inverse().unwrap().scale(&qr(1, 2));
    let sinh_over = (&ExpPoly::exp_var(pp, w()) - &ExpPoly::exp_var(pp, -&w())).scale(&half_winv);
    let c = &sinh_over * &ExpPoly::var(pm).scale(&Scalar::int(2));
    // 2 P₋ sinh(wP₊)/w = w⁻¹ P₋ e^{wP₊} − w⁻¹ P₋ e^{−wP₊}
    let winv = w().inverse().unwrap();
    let expected = ExpPoly::canonicalize(vec![
        (winv.clone(), degs(&[(pm, 1)]), LinForm::single(pp, w())),
        (-&winv, degs(&[(pm, 1)]), LinForm::single(pp, -&w())),
    ]);
    assert_eq!(c, expected);
}

#[test]
fn mismatched_rings_are_a_configuration_error() {
    let a = ExpPoly::constant(Scalar::j(1));
    let b = ExpPoly::constant(Scalar::j(-1));
    assert!(matches!(a.try_mul(&b), Err(Error::Config(_))));
}

#[test]
fn partial_derivatives() {
    let ap = Var::new("A+");
    let am = Var::new("A-");
    let e = ExpPoly::exp_var(ap, &w() * &Scalar::int(2));
    assert_eq!(e.partial_derivative(ap), e.scale(&(&w() * &Scalar::int(2))));
    let sq = ExpPoly::var(am).pow(2);
    assert_eq!(sq.partial_derivative(am), ExpPoly::var(am).scale(&Scalar::int(2)));
    let chi = Var::new("χ");
    let ch = cosh(chi, Scalar::int(2));
    assert_eq!(ch.partial_derivative(chi), sinh(chi, Scalar::int(2)).scale(&Scalar::int(2)));
    assert!(matches!(
        sq.partial_derivative_checked(Var::new("nope"), &[am, ap]),
        Err(Error::UnknownVariable(_))
    ));
}

#[test]
fn taylor_expansions() {
    let e = ExpPoly::exp_var(x(), &w() * &Scalar::int(2));
    let expected = ExpPoly::canonicalize(vec![
        (Scalar::one(), degs(&[]), LinForm::zero()),
        (&w() * &Scalar::int(2), degs(&[(x(), 1)]), LinForm::zero()),
        (&(&w() * &w()) * &Scalar::int(2), degs(&[(x(), 2)]), LinForm::zero()),
    ]);
    assert_eq!(e.expand_series(2), expected);

    let chi = Var::new("χ");
    let f = (&ExpPoly::exp_var(chi, Scalar::int(2)) - &ExpPoly::one()).scale(&w());
    let expected = ExpPoly::canonicalize(vec![
        (&w() * &Scalar::int(2), degs(&[(chi, 1)]), LinForm::zero()),
        (&w() * &Scalar::int(2), degs(&[(chi, 2)]), LinForm::zero()),
        (w().scale(&qr(4, 3)), degs(&[(chi, 3)]), LinForm::zero()),
    ]);
    assert_eq!(f.expand_series(3), expected);
}

/// Series oracle: `cosh(jλθ) − 1 = Σ_{k≥1} s^k λ^{2k} θ^{2k} / (2k)!`, built
/// term by term without any exponential symbol.
fn cosh_j_series_oracle(theta: Var, s: i8, lambda_order: u32) -> ExpPoly {
    let mut out = ExpPoly::zero();
    let mut k = 1;
    while 2 * k <= lambda_order {
        let mut fact = q(1);
        for i in 1..=(2 * k) {
            fact *= q(i as i64);
        }
        let c = Scalar::monomial(q((s as i64).pow(k)) / fact, Param::Lambda, 2 * k as i32);
        out = &out + &ExpPoly::from_mono(ExpMono::var_pow(theta, 2 * k)).scale(&c);
        k += 1;
    }
    out
}

#[test]
fn param_graded_expansion_matches_series_oracle() {
    let theta = Var::new("θ");
    for s in [-1i8, 0, 1] {
        let c = &Scalar::j(s) * &Scalar::param(Param::Lambda);
        let f = &cosh(theta, c) - &ExpPoly::one();
        for order in [2, 4] {
            let got = f.expand_in_param(Param::Lambda, order).unwrap();
            assert_eq!(got, cosh_j_series_oracle(theta, s, order as u32), "s={s} order={order}");
        }
    }
    // the D=2 λ-graded value is s·λ²θ²/2
    let c = &Scalar::j(1) * &Scalar::param(Param::Lambda);
    let got = (&cosh(theta, c) - &ExpPoly::one()).expand_in_param(Param::Lambda, 2).unwrap();
    let expected = ExpPoly::from_mono(ExpMono::var_pow(theta, 2))
        .scale(&Scalar::monomial(qr(1, 2), Param::Lambda, 2));
    assert_eq!(got, expected);
}

#[test]
fn substitutions() {
    let theta = Var::new("θ");
    let chi = Var::new("χ");
    let mut map = BTreeMap::new();
    map.insert(theta, LinForm::single(chi, Scalar::int(-2)));
    let f = ExpPoly::exp_var(theta, Scalar::one());
    assert_eq!(f.substitute(&map).unwrap(), ExpPoly::exp_var(chi, Scalar::int(-2)));

    let g = &(&ExpPoly::var(theta).pow(2) + &ExpPoly::exp_var(theta, w())) + &ExpPoly::var(chi);
    assert_eq!(g.substitute(&BTreeMap::new()).unwrap(), g);

    let a2 = Var::new("a2");
    let a2p = Var::new("a2'");
    let lam = Scalar::param(Param::Lambda);
    let mut map = BTreeMap::new();
    map.insert(a2, LinForm::single(a2p, lam.clone()));
    let h = ExpPoly::var(a2).scale(&lam.inverse().unwrap());
    let sub = h.substitute(&map).unwrap();
    assert_eq!(sub.limit_param(Param::Lambda).unwrap(), ExpPoly::var(a2p));
}

#[test]
fn nonlinear_substitution_in_exponent_is_rejected() {
    let theta = Var::new("θ");
    let mut map = BTreeMap::new();
    map.insert(theta, ExpPoly::var(theta).pow(2));
    let f = ExpPoly::exp_var(theta, Scalar::one());
    assert!(matches!(f.compose(&map), Err(Error::UnsupportedSubstitution(_))));
}

#[test]
fn classical_limits() {
    let ap = Var::new("A+");
    let winv = w().inverse().unwrap();
    let f = (&ExpPoly::exp_var(ap, &w() * &Scalar::int(2)) - &ExpPoly::one()).scale(&winv);
    assert_eq!(f.limit_param(Param::W).unwrap(), ExpPoly::var(ap).scale(&Scalar::int(2)));

    // A₋ = (e^{−2w(A₁−A₂)} − 2e^{−2wA₁} + 1)/(2w) → A₁ + A₂
    let a1 = Var::new("A1");
    let a2 = Var::new("A2");
    let m2w = &w() * &Scalar::int(-2);
    let e1 = ExpPoly::exp(&LinForm::from_pairs([(a1, m2w.clone()), (a2, -&m2w)]));
    let e2 = ExpPoly::exp_var(a1, m2w.clone());
    let am = (&(&e1 - &e2.scale(&Scalar::int(2))) + &ExpPoly::one()).scale(&winv.scale(&qr(1, 2)));
    assert_eq!(am.limit_param(Param::W).unwrap(), &ExpPoly::var(a1) + &ExpPoly::var(a2));

    let div = ExpPoly::constant(winv);
    assert!(matches!(div.limit_param(Param::W), Err(Error::DivergentLimit(_))));
}

#[test]
fn canonical_text_is_deterministic() {
    let f = &(&ExpPoly::exp_var(x(), w()) + &ExpPoly::var(x()).pow(2)) - &ExpPoly::constant(Scalar::rat(1, 2));
    assert_eq!(f.to_string(), "-1/2 + e^{w·x} + x^2");
}

fn arb_scalar() -> impl Strategy<Value = Scalar> {
    prop::collection::vec((-3i64..=3, -2i32..=2), 1..3).prop_map(|ts| {
        ts.into_iter()
            .fold(Scalar::zero(), |acc, (c, k)| &acc + &Scalar::monomial(q(c), Param::W, k))
    })
}

fn arb_poly_in(s: Option<i8>) -> impl Strategy<Value = ExpPoly> {
    let vars = ["x", "y"];
    prop::collection::vec((arb_scalar(), 0u32..3, 0u32..2, -2i64..=2, prop::bool::ANY), 0..4).prop_map(
        move |terms| {
            let mut out = ExpPoly::zero();
            for (c, dx, dy, e, jflag) in terms {
                let mut d = BTreeMap::new();
                d.insert(Var::new(vars[0]), dx);
                d.insert(Var::new(vars[1]), dy);
                let mut c = c;
                if let (Some(s), true) = (s, jflag) {
                    c = &c * &Scalar::j(s);
                }
                let l = LinForm::single(Var::new(vars[0]), &Scalar::param(Param::W) * &Scalar::int(e));
                out = &out + &ExpPoly::canonicalize(vec![(c, d, l)]);
            }
            out
        },
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn product_commutes(f in arb_poly_in(None), g in arb_poly_in(None)) {
        prop_assert_eq!(&f * &g, &g * &f);
    }

    #[test]
    fn ring_axioms(f in arb_poly_in(Some(-1)), g in arb_poly_in(Some(-1)), h in arb_poly_in(Some(-1))) {
        prop_assert_eq!(&(&f * &g) * &h, &f * &(&g * &h));
        prop_assert_eq!(&f * &(&g + &h), &(&f * &g) + &(&f * &h));
        prop_assert_eq!(&(&f + &g) + &h, &f + &(&g + &h));
    }

    #[test]
    fn leibniz(f in arb_poly_in(None), g in arb_poly_in(None)) {
        let xv = Var::new("x");
        let lhs = (&f * &g).partial_derivative(xv);
        let rhs = &(&f.partial_derivative(xv) * &g) + &(&f * &g.partial_derivative(xv));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn expansion_is_multiplicative(f in arb_poly_in(None), g in arb_poly_in(None)) {
        let d = 3;
        let lhs = (&f * &g).expand_series(d);
        let rhs = (&f.expand_series(d) * &g.expand_series(d)).expand_series(d);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn dual_unit_annihilates(f in arb_poly_in(Some(0)), g in arb_poly_in(Some(0))) {
        let j = ExpPoly::constant(Scalar::j(0));
        prop_assert!((&(&j * &f) * &(&j * &g)).is_zero());
    }
}
