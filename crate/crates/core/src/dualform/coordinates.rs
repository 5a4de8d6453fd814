use std::ops::RangeInclusive;

use crate::coeffring::{ExpPoly, Param, Scalar, Var};
use crate::error::Result;
use crate::hopfcore::HopfPresentation;
use crate::ncengine::{NCElement, NcMono, Part, TensorElement};

#[derive(Clone, Debug)]
pub struct BracketRow {
    pub left: String,
    pub right: String,
    pub value: NCElement,
    pub expected: NCElement,
}

#[derive(Clone, Debug)]
pub struct CoproductRow {
    pub element: String,
    pub value: TensorElement,
    pub expected: TensorElement,
}

/// Brackets and coproducts of `f_m = e^{2mχ}`, `a₊`, `a₋`.
#[derive(Clone, Debug)]
pub struct CoordinateReport {
    pub brackets: Vec<BracketRow>,
    pub coproducts: Vec<CoproductRow>,
    /// Every bracket stays in the span of `{f_k, a₊, a₋}`.
    pub lie_closed: bool,
    /// Coproduct and antipode keep `{f_m, a₊}` inside the algebra they
    /// generate.
    pub hopf_closed: bool,
    pub antisymmetric: bool,
    pub jacobi: bool,
}

impl CoordinateReport {
    pub fn all_match(&self) -> bool {
        self.brackets.iter().all(|b| b.value == b.expected) && self.coproducts.iter().all(|c| c.value == c.expected)
    }

    pub fn passes(&self) -> bool {
        self.all_match() && self.lie_closed && self.hopf_closed && self.antisymmetric && self.jacobi
    }
}

/// `k` when the block part is exactly `e^{2kχ}` with integer `k`.
fn f_index(m: &NcMono, chi: Var) -> Option<i64> {
    let Part::Fn(e) = &m.parts()[2] else { return None };
    if !e.degs().is_empty() {
        return None;
    }
    if !e.has_exp() {
        return Some(0);
    }
    let c = e.exp().coeff(chi).as_rational()?;
    let half = c / crate::coeffring::q(2);
    (half.is_integer() && e.exp().iter().count() == 1).then(|| half.to_integer().try_into().ok()).flatten()
}

fn in_span(x: &NCElement, chi: Var) -> bool {
    x.iter().all(|(m, _)| match (m.pow_at(0), m.pow_at(1)) {
        (0, 0) => f_index(m, chi).is_some(),
        (1, 0) | (0, 1) => f_index(m, chi) == Some(0),
        _ => false,
    })
}

/// In the subalgebra generated by `f_m` and `a₊`.
fn in_plus_subalgebra(x: &NCElement, chi: Var) -> bool {
    x.iter().all(|(m, _)| m.pow_at(0) == 0 && f_index(m, chi).is_some())
}

pub fn coordinate_lie_algebra(fun: &HopfPresentation, range: RangeInclusive<i32>) -> Result<CoordinateReport> {
    let p = fun.algebra();
    let chi = Var::new("chi");
    let w = Scalar::param(Param::W);
    let f = |m: i32| NCElement::func(p, &ExpPoly::exp_var(chi, Scalar::int(2 * m as i64)));
    let (ap, am) = (fun.gen("a+")?, fun.gen("a-")?);
    let mut basis: Vec<(String, NCElement)> = Vec::new();
    for m in range.clone() {
        basis.push((format!("f{m}"), f(m)?));
    }
    basis.push(("a+".into(), ap.clone()));
    basis.push(("a-".into(), am.clone()));
    let zero = NCElement::zero(p);

    let mut brackets = Vec::new();
    for m in range.clone() {
        let two_wm = w.scale(&crate::coeffring::q(2 * m as i64));
        brackets.push(BracketRow {
            left: format!("f{m}"),
            right: "a+".into(),
            value: f(m)?.commutator(&ap)?,
            expected: (&f(m + 1)? - &f(m)?).scale(&two_wm),
        });
        brackets.push(BracketRow {
            left: format!("f{m}"),
            right: "a-".into(),
            value: f(m)?.commutator(&am)?,
            expected: zero.clone(),
        });
        for n in range.clone().filter(|n| *n > m) {
            brackets.push(BracketRow {
                left: format!("f{m}"),
                right: format!("f{n}"),
                value: f(m)?.commutator(&f(n)?)?,
                expected: zero.clone(),
            });
        }
    }
    brackets.push(BracketRow {
        left: "a+".into(),
        right: "a-".into(),
        value: ap.commutator(&am)?,
        expected: am.scale(&w.scale(&crate::coeffring::q(-2))),
    });

    let one = NCElement::one(p);
    let t2 = |a: &NCElement, b: &NCElement| TensorElement::pure(&[a.clone(), b.clone()]);
    let mut coproducts = Vec::new();
    for m in range.clone() {
        coproducts.push(CoproductRow { element: format!("f{m}"), value: fun.delta(&f(m)?)?, expected: t2(&f(m)?, &f(m)?) });
    }
    coproducts.push(CoproductRow {
        element: "a+".into(),
        value: fun.delta(&ap)?,
        expected: &t2(&ap, &one) + &t2(&f(1)?, &ap),
    });
    coproducts.push(CoproductRow {
        element: "a-".into(),
        value: fun.delta(&am)?,
        expected: &t2(&am, &one) + &t2(&f(-1)?, &am),
    });

    let mut lie_closed = true;
    let mut antisymmetric = true;
    for (i, (_, x)) in basis.iter().enumerate() {
        for (_, y) in &basis[i + 1..] {
            let c = x.commutator(y)?;
            lie_closed &= in_span(&c, chi);
            antisymmetric &= c == -&y.commutator(x)?;
        }
    }
    let mut jacobi = true;
    for (i, (_, x)) in basis.iter().enumerate() {
        for (j, (_, y)) in basis.iter().enumerate().skip(i + 1) {
            for (_, z) in &basis[j + 1..] {
                let a = x.commutator(&y.commutator(z)?)?;
                let b = y.commutator(&z.commutator(x)?)?;
                let c = z.commutator(&x.commutator(y)?)?;
                jacobi &= (&(&a + &b) + &c).is_zero();
            }
        }
    }
    let mut hopf_closed = true;
    let plus_gens = basis.iter().filter(|(n, _)| n != "a-");
    for (_, x) in plus_gens {
        let d = fun.delta(x)?;
        hopf_closed &= d.iter().all(|(k, _)| {
            k.iter().all(|m| {
                let mut t = std::collections::BTreeMap::new();
                t.insert(m.clone(), Scalar::one());
                in_plus_subalgebra(&NCElement::from_terms(p, t), chi)
            })
        });
        hopf_closed &= in_plus_subalgebra(&fun.gamma(x)?, chi);
    }
    Ok(CoordinateReport { brackets, coproducts, lie_closed, hopf_closed, antisymmetric, jacobi })
}

/// `[g_n, a1]` and `[g_n, a2]` for `g_n = e^{nθ}` in a `(θ, a1, a2)`
/// algebra; there is no closed form to compare with.
pub fn exponential_generator_brackets(h: &HopfPresentation, range: RangeInclusive<i32>) -> Result<Vec<(String, String, NCElement)>> {
    let th = Var::new("theta");
    let mut out = Vec::new();
    for n in range {
        let g = NCElement::func(h.algebra(), &ExpPoly::exp_var(th, Scalar::int(n as i64)))?;
        for a in ["a1", "a2"] {
            out.push((format!("g{n}"), a.to_string(), g.commutator(&h.gen(a)?)?));
        }
    }
    Ok(out)
}
