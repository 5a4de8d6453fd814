use std::sync::{Arc, OnceLock};

use super::HopfPresentation;
use crate::coeffring::{cosh, cosh_j, cosh_j_minus_one_over_j2, sinh, sinh_j_over_j, ExpPoly, Param, Scalar, Var};
use crate::error::{Error, Result};
use crate::ncengine::{Morphism, NCElement, Presentation, TensorElement, TowerBuilder};

pub const CATALOG_KEYS: [&str; 7] = [
    "uw-iso11-pk",
    "uw-iso11-ah",
    "funw-iso11",
    "funs-iso11-standard",
    "funv-ck-elliptic",
    "funv-ck-parabolic",
    "funv-ck-hyperbolic",
];

/// A named identity that should hold exactly.
#[derive(Clone, Debug)]
pub struct Golden {
    pub name: String,
    pub lhs: TensorElement,
    pub rhs: TensorElement,
}

impl Golden {
    fn new(name: &str, lhs: TensorElement, rhs: TensorElement) -> Self {
        Golden { name: name.into(), lhs, rhs }
    }

    fn elements(name: &str, lhs: &NCElement, rhs: &NCElement) -> Self {
        Self::new(name, TensorElement::from_element(lhs), TensorElement::from_element(rhs))
    }

    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub key: &'static str,
    pub hopf: HopfPresentation,
    pub goldens: Vec<Golden>,
}

static CATALOG: OnceLock<Vec<CatalogEntry>> = OnceLock::new();

/// All entries, built once.
pub fn catalog() -> &'static [CatalogEntry] {
    CATALOG.get_or_init(|| build().expect("catalog data is well formed"))
}

pub fn catalog_entry(key: &str) -> Result<&'static CatalogEntry> {
    catalog().iter().find(|e| e.key == key).ok_or_else(|| Error::UnknownCatalogKey(key.into()))
}

pub fn catalog_get(key: &str) -> Result<HopfPresentation> {
    Ok(catalog_entry(key)?.hopf.clone())
}

fn build() -> Result<Vec<CatalogEntry>> {
    let pk = pk()?;
    let ah = ah(&pk.hopf)?;
    Ok(vec![pk, ah, funw()?, standard()?, ck("funv-ck-elliptic", -1)?, ck("funv-ck-parabolic", 0)?, ck("funv-ck-hyperbolic", 1)?])
}

fn w() -> Scalar {
    Scalar::param(Param::W)
}

fn var(x: &str) -> ExpPoly {
    ExpPoly::var(Var::new(x))
}

fn g(p: &Arc<Presentation>, name: &str) -> Result<NCElement> {
    NCElement::gen(p, name)
}

fn f(p: &Arc<Presentation>, x: &ExpPoly) -> Result<NCElement> {
    NCElement::func(p, x)
}

fn t2(a: &NCElement, b: &NCElement) -> TensorElement {
    TensorElement::pure(&[a.clone(), b.clone()])
}

fn primitive(x: &NCElement) -> TensorElement {
    let one = NCElement::one(x.pres());
    &t2(x, &one) + &t2(&one, x)
}

/// `C_w = 2P₋ sinh(wP₊)/w`.
pub fn casimir_pk(p: &Arc<Presentation>) -> Result<NCElement> {
    let c = &var("P-") * &sinh(Var::new("P+"), w());
    f(p, &c.scale(&Scalar::int(2).try_mul(&w().inverse()?)?))
}

fn pk() -> Result<CatalogEntry> {
    let t = TowerBuilder::new("uw-iso11-pk").block(&["P-", "P+"]).poly("K").build()?;
    let pp = Var::new("P+");
    let winv = w().inverse()?;
    let k_pp = sinh(pp, w()).scale(&Scalar::int(2).try_mul(&winv)?);
    let k_pm = (&var("P-") * &cosh(pp, w())).scale(&Scalar::int(-2));
    let a = t.with_rules(&[("K", "P+", f(&t, &k_pp)?), ("K", "P-", f(&t, &k_pm)?)])?;
    let e_m = f(&a, &ExpPoly::exp_var(pp, -w()))?;
    let e_p = f(&a, &ExpPoly::exp_var(pp, w()))?;
    let mut h = HopfPresentation::new("uw-iso11-pk", &a, Param::W, None);
    let minus = Scalar::int(-1);
    let (p_plus, p_minus, k) = (g(&a, "P+")?, g(&a, "P-")?, g(&a, "K")?);
    h.set("P+", primitive(&p_plus), Scalar::zero(), p_plus.scale(&minus))?;
    h.set("P-", &t2(&e_m, &p_minus) + &t2(&p_minus, &e_p), Scalar::zero(), p_minus.scale(&minus))?;
    let gamma_k = &k.scale(&minus) + &f(&a, &sinh(pp, w()).scale(&Scalar::int(2)))?;
    h.set("K", &t2(&e_m, &k) + &t2(&k, &e_p), Scalar::zero(), gamma_k)?;

    let mut goldens = Vec::new();
    for x in ["K", "P+", "P-"] {
        let gx = g(&a, x)?;
        let conj = (&(&e_p * &gx) * &e_m).scale(&minus);
        goldens.push(Golden::elements(&format!("antipode of {x} is conjugation"), &h.gamma(&gx)?, &conj));
    }
    let c = casimir_pk(&a)?;
    goldens.push(Golden::elements("Casimir commutes with K", &c.commutator(&k)?, &NCElement::zero(&a)));
    Ok(CatalogEntry { key: "uw-iso11-pk", hopf: h, goldens })
}

/// `ψ: {A,H} → {P,K}` and `φ: {P,K} → {A,H}` of the basis change
/// `A₊ = P₊, A₋ = e^{−wP₊}P₋, H = e^{wP₊}K`.
fn basis_change(pk: &Arc<Presentation>, ah: &Arc<Presentation>) -> Result<(Morphism, Morphism)> {
    let mut psi = Morphism::algebra(ah, pk);
    psi.set_element("A+", &g(pk, "P+")?)?;
    psi.set_element("A-", &(&f(pk, &ExpPoly::exp_var(Var::new("P+"), -w()))? * &g(pk, "P-")?))?;
    psi.set_element("H", &(&f(pk, &ExpPoly::exp_var(Var::new("P+"), w()))? * &g(pk, "K")?))?;
    let mut phi = Morphism::algebra(pk, ah);
    phi.set_element("P+", &g(ah, "A+")?)?;
    phi.set_element("P-", &(&f(ah, &ExpPoly::exp_var(Var::new("A+"), w()))? * &g(ah, "A-")?))?;
    phi.set_element("K", &(&f(ah, &ExpPoly::exp_var(Var::new("A+"), -w()))? * &g(ah, "H")?))?;
    Ok((psi, phi))
}

fn ah(pk: &HopfPresentation) -> Result<CatalogEntry> {
    let t = TowerBuilder::new("uw-iso11-ah").block(&["A-", "A+"]).poly("H").build()?;
    let ap = Var::new("A+");
    let e2 = ExpPoly::exp_var(ap, w().scale(&crate::coeffring::q(2)));
    let h_ap = (&e2 - &ExpPoly::one()).scale(&w().inverse()?);
    let h_am = (&var("A-") * &e2).scale(&Scalar::int(-2));
    let a = t.with_rules(&[("H", "A+", f(&t, &h_ap)?), ("H", "A-", f(&t, &h_am)?)])?;
    let (psi, phi) = basis_change(pk.algebra(), &a)?;
    let one = NCElement::one(&a);
    let e2p = f(&a, &e2)?;
    let e2m = f(&a, &ExpPoly::exp_var(ap, w().scale(&crate::coeffring::q(-2))))?;
    let (a_plus, a_minus, hh) = (g(&a, "A+")?, g(&a, "A-")?, g(&a, "H")?);
    let coproducts = [
        ("A+", primitive(&a_plus)),
        ("A-", &t2(&e2m, &a_minus) + &t2(&a_minus, &one)),
        ("H", &t2(&one, &hh) + &t2(&hh, &e2p)),
    ];
    let mut h = HopfPresentation::new("uw-iso11-ah", &a, Param::W, None);
    let mut goldens = Vec::new();
    let sq = [a.clone(), a.clone()];
    for (x, delta) in coproducts {
        // The antipode is not listed for this basis; transport it.
        let gx = g(&a, x)?;
        let gamma = phi.apply_element(&pk.gamma(&psi.apply_element(&gx)?)?)?;
        let from_pk = pk.delta(&psi.apply_element(&gx)?)?;
        let from_pk = from_pk
            .map_leg(0, std::slice::from_ref(&a), &|m| phi.apply(m))?
            .map_leg(1, std::slice::from_ref(&a), &|m| phi.apply(m))?
            .rebase(&sq)?;
        goldens.push(Golden::new(&format!("coproduct of {x} matches the P,K basis"), delta.clone(), from_pk));
        h.set(x, delta, Scalar::zero(), gamma)?;
    }
    let minus = Scalar::int(-1);
    goldens.push(Golden::elements("antipode of A+", &h.gamma(&a_plus)?, &a_plus.scale(&minus)));
    goldens.push(Golden::elements("antipode of A-", &h.gamma(&a_minus)?, &(&e2p * &a_minus).scale(&minus)));
    let gamma_h = &(&(&e2m * &hh).scale(&minus) + &one.scale(&Scalar::int(2))) - &e2m.scale(&Scalar::int(2));
    goldens.push(Golden::elements("antipode of H", &h.gamma(&hh)?, &gamma_h));
    Ok(CatalogEntry { key: "uw-iso11-ah", hopf: h, goldens })
}

fn funw() -> Result<CatalogEntry> {
    let t = TowerBuilder::new("funw-iso11").poly("a-").poly("a+").block(&["chi"]).build()?;
    let chi = Var::new("chi");
    let two = Scalar::int(2);
    let chi_ap = (&ExpPoly::exp_var(chi, two.clone()) - &ExpPoly::one()).scale(&w());
    let a = t.with_rules(&[
        ("chi", "a+", f(&t, &chi_ap)?),
        ("chi", "a-", NCElement::zero(&t)),
        ("a+", "a-", g(&t, "a-")?.scale(&w().scale(&crate::coeffring::q(-2)))),
    ])?;
    let one = NCElement::one(&a);
    let ch = f(&a, &cosh(chi, two.clone()))?;
    let sh = f(&a, &sinh(chi, two.clone()))?;
    let (a_plus, a_minus, x) = (g(&a, "a+")?, g(&a, "a-")?, g(&a, "chi")?);
    let minus = Scalar::int(-1);
    let em = f(&a, &ExpPoly::exp_var(chi, -&two))?;
    let ep = f(&a, &ExpPoly::exp_var(chi, two.clone()))?;
    let mut h = HopfPresentation::new("funw-iso11", &a, Param::W, None);
    h.set("chi", primitive(&x), Scalar::zero(), x.scale(&minus))?;
    let d_plus = &(&t2(&a_plus, &one) + &t2(&ch, &a_plus)) + &t2(&sh, &a_plus);
    h.set("a+", d_plus, Scalar::zero(), (&em * &a_plus).scale(&minus))?;
    let d_minus = &(&t2(&a_minus, &one) + &t2(&ch, &a_minus)) - &t2(&sh, &a_minus);
    h.set("a-", d_minus, Scalar::zero(), (&ep * &a_minus).scale(&minus))?;
    let goldens = vec![
        Golden::new(
            "coproduct of a+ in closed form",
            h.coproduct_of("a+")?.clone(),
            &t2(&a_plus, &one) + &t2(&ep, &a_plus),
        ),
        Golden::elements("antipode of a+", h.antipode_of("a+")?, &(&em * &a_plus).scale(&minus)),
    ];
    Ok(CatalogEntry { key: "funw-iso11", hopf: h, goldens })
}

/// Coordinates of `G` with rows `(1,0,0), (a1, C, jS), (a2, S/j, C)`:
/// `Δ(G) = G⊗̇G` and `γ(G) = G⁻¹`.
fn group_maps(h: &mut HopfPresentation, c: &NCElement, js: &NCElement, s_j: &NCElement) -> Result<()> {
    let a = h.algebra().clone();
    let one = NCElement::one(&a);
    let minus = Scalar::int(-1);
    let (th, a1, a2) = (g(&a, "theta")?, g(&a, "a1")?, g(&a, "a2")?);
    h.set("theta", primitive(&th), Scalar::zero(), th.scale(&minus))?;
    let d1 = &(&t2(&a1, &one) + &t2(c, &a1)) + &t2(js, &a2);
    h.set("a1", d1, Scalar::zero(), &(c * &a1).scale(&minus) + &(js * &a2))?;
    let d2 = &(&t2(&a2, &one) + &t2(c, &a2)) + &t2(s_j, &a1);
    h.set("a2", d2, Scalar::zero(), &(c * &a2).scale(&minus) + &(s_j * &a1))?;
    Ok(())
}

fn standard() -> Result<CatalogEntry> {
    let t = TowerBuilder::new("funs-iso11-standard").block(&["theta"]).poly("a1").poly("a2").build()?;
    let th = Var::new("theta");
    let wp = Scalar::param(Param::Wp);
    let one = ExpPoly::one();
    let a = t.with_rules(&[
        ("theta", "a1", f(&t, &(&cosh(th, Scalar::one()) - &one).scale(&wp))?),
        ("theta", "a2", f(&t, &sinh(th, Scalar::one()).scale(&wp))?),
        ("a1", "a2", g(&t, "a1")?.scale(&wp)),
    ])?;
    let c = f(&a, &cosh(th, Scalar::one()))?;
    let s = f(&a, &sinh(th, Scalar::one()))?;
    let mut h = HopfPresentation::new("funs-iso11-standard", &a, Param::Wp, None);
    group_maps(&mut h, &c, &s, &s)?;
    let goldens = vec![Golden::new(
        "coproduct of cosh theta is an entry of G⊗̇G",
        h.delta(&c)?,
        &t2(&c, &c) + &t2(&s, &s),
    )];
    Ok(CatalogEntry { key: "funs-iso11-standard", hopf: h, goldens })
}

/// The Cayley–Klein family with `j² = s`.
fn ck(key: &'static str, s: i8) -> Result<CatalogEntry> {
    let t = TowerBuilder::new(key).block(&["theta"]).poly("a1").poly("a2").build()?;
    let th = Var::new("theta");
    let v = Scalar::param(Param::V);
    let j = Scalar::j(s);
    let one = Scalar::one();
    let sh_j = sinh_j_over_j(th, one.clone(), s);
    // (cosh jθ − 1) = j²·(cosh jθ − 1)/j²
    let chm1_j2 = cosh_j_minus_one_over_j2(th, one.clone(), s);
    let chm1 = chm1_j2.scale(&Scalar::int(s as i64));
    let r1 = &chm1 - &sh_j.scale(&j);
    let r2 = &sh_j - &chm1_j2.scale(&j);
    let (a1, a2) = (g(&t, "a1")?, g(&t, "a2")?);
    let a = t.with_rules(&[
        ("theta", "a1", f(&t, &r1.scale(&v))?),
        ("theta", "a2", f(&t, &r2.scale(&v))?),
        ("a1", "a2", (&a1 + &a2.scale(&j)).scale(&v)),
    ])?;
    let c = f(&a, &cosh_j(th, one.clone(), s))?;
    // j·sinh jθ = j²·sinh(jθ)/j
    let js = f(&a, &sh_j.scale(&Scalar::int(s as i64)))?;
    let s_j = f(&a, &sh_j)?;
    let mut h = HopfPresentation::new(key, &a, Param::V, Some(s));
    group_maps(&mut h, &c, &js, &s_j)?;
    let (a1, a2) = (g(&a, "a1")?, g(&a, "a2")?);
    let goldens = vec![Golden::elements(
        "[a1,a2] = v(a1 + j·a2)",
        &a1.commutator(&a2)?,
        &(&a1 + &a2.scale(&j)).scale(&v),
    )];
    Ok(CatalogEntry { key, hopf: h, goldens })
}
