use std::sync::OnceLock;

use super::*;
use crate::coeffring::{Param, Scalar};
use crate::hopfcore::catalog_get;
use crate::ncengine::{oracle_multiply, TensorElement};

fn w() -> Scalar {
    Scalar::param(Param::W)
}

fn f4() -> &'static StructureTensor {
    static F: OnceLock<StructureTensor> = OnceLock::new();
    F.get_or_init(|| compute_structure_tensor(&catalog_get("uw-iso11-ah").unwrap(), 4).unwrap())
}

#[test]
fn unit_and_special_entries() {
    let f = f4();
    assert!(f.get([1, 0, 0], [1, 0, 0], [0, 0, 0]).is_one());
    assert!(f.get([1, 0, 0], [0, 0, 0], [1, 0, 0]).is_one());
    assert!(f.get([0, 1, 1], [0, 0, 1], [0, 1, 0]).is_one());
}

#[test]
fn h_power_column_is_two_to_the_k_w() {
    let f = compute_structure_tensor(&catalog_get("uw-iso11-ah").unwrap(), 6).unwrap();
    for k in 1..=6u32 {
        let expected = w().scale(&crate::coeffring::q(1 << k));
        assert_eq!(f.get([0, 0, k], [0, 0, 1], [0, 1, 0]), expected, "k = {k}");
    }
    assert_eq!(f.restrict(4), *f4());
}

#[test]
fn recurrences_hold_and_corruption_is_named() {
    let f = f4();
    let fails = verify_recurrences(f);
    assert!(fails.is_empty(), "{fails:?}");
    let mut bad = f.clone();
    bad.set([1, 1, 0], [0, 1, 0], [1, 0, 0], Scalar::int(7));
    let fails = verify_recurrences(&bad);
    assert!(fails.iter().any(|x| x.family == "A+ recurrence"), "{fails:?}");
}

#[test]
fn a_plus_row_picks_up_terms_when_a_minus_is_present() {
    assert_eq!(f4().get([1, 1, 0], [0, 1, 0], [1, 1, 0]), -&w().scale(&crate::coeffring::q(2)));
}

#[test]
fn dual_product_matches_relations() {
    let fun = catalog_get("funw-iso11").unwrap();
    let bad = verify_dual_product(f4(), fun.algebra(), 4).unwrap();
    assert!(bad.is_empty(), "{} failures, first {:?}", bad.len(), bad.first().map(|b| b.residual.to_string()));
}

#[test]
fn dual_product_examples() {
    let fun = catalog_get("funw-iso11").unwrap();
    let p = fun.algebra();
    let chi_ap = &dual_basis(p, [0, 0, 1]).unwrap() * &dual_basis(p, [0, 1, 0]).unwrap();
    let ap_chi = &dual_basis(p, [0, 1, 0]).unwrap() * &dual_basis(p, [0, 0, 1]).unwrap();
    let e2 = NCElement::func(p, &crate::coeffring::ExpPoly::exp_var(crate::coeffring::Var::new("chi"), Scalar::int(2))).unwrap();
    assert_eq!(chi_ap, &ap_chi + &(&e2 - &NCElement::one(p)).scale(&w()));
    for t in triples(3) {
        let prod = &dual_basis(p, [1, 0, 0]).unwrap() * &dual_basis(p, t).unwrap();
        let next = dual_basis(p, [t[0] + 1, t[1], t[2]]).unwrap().scale(&Scalar::int(t[0] as i64 + 1));
        assert_eq!(prod, next);
        assert_eq!(&dual_basis(p, [0, 0, 0]).unwrap() * &dual_basis(p, t).unwrap(), dual_basis(p, t).unwrap());
    }
}

#[test]
fn commutators_read_from_the_tensor() {
    let fun = catalog_get("funw-iso11").unwrap();
    for c in extract_dual_commutators(f4(), fun.algebra(), 4).unwrap() {
        assert!(c.matches(), "[{},{}]: {} vs {}", c.left, c.right, c.series, c.closed);
    }
}

#[test]
fn coordinate_lie_algebra_closes() {
    let fun = catalog_get("funw-iso11").unwrap();
    let r = coordinate_lie_algebra(&fun, -4..=4).unwrap();
    for b in &r.brackets {
        assert_eq!(b.value, b.expected, "[{},{}]", b.left, b.right);
    }
    for c in &r.coproducts {
        assert_eq!(c.value, c.expected, "Δ({})", c.element);
    }
    assert!(r.lie_closed && r.hopf_closed && r.antisymmetric && r.jacobi);
}

#[test]
fn standard_exponential_brackets_are_reported() {
    let h = catalog_get("funs-iso11-standard").unwrap();
    let rows = exponential_generator_brackets(&h, -2..=2).unwrap();
    assert_eq!(rows.len(), 10);
    assert!(rows.iter().filter(|r| r.0 == "g0").all(|r| r.2.is_zero()));
}

#[test]
fn dump_lines() {
    let f = compute_structure_tensor(&catalog_get("uw-iso11-ah").unwrap(), 1).unwrap();
    let dump = f.dump();
    assert!(dump.lines().any(|l| l == "1 0 0 | 1 0 0 | 0 0 0 | 1"), "{dump}");
    assert!(dump.lines().any(|l| l == "0 0 0 | 0 0 0 | 0 0 0 | 1"));
    assert_eq!(dump.lines().count(), f.len());
}

/// Coproducts rebuilt as products of generator coproducts, each leg
/// multiplied by exhaustive rewriting.
#[test]
fn tensor_agrees_with_rewriting_oracle() {
    let u = catalog_get("uw-iso11-ah").unwrap();
    let d = 3;
    let gens: Vec<TensorElement> = ["A-", "A+", "H"].iter().map(|g| u.delta(&u.gen(g).unwrap()).unwrap()).collect();
    let legs = [u.algebra().clone(), u.algebra().clone()];
    let slow_mul = |x: &TensorElement, y: &TensorElement| -> TensorElement {
        let mut acc = TensorElement::zero(&legs);
        for (kx, cx) in x.iter() {
            for (ky, cy) in y.iter() {
                let mut term = TensorElement::constant(&[], cx * cy);
                for i in 0..2 {
                    let prod = oracle_multiply(&mono(u.algebra(), &kx[i]), &mono(u.algebra(), &ky[i])).unwrap();
                    term = term.tensor(&TensorElement::from_element(&prod));
                }
                acc = acc.try_add(&term).unwrap();
            }
        }
        acc
    };
    for abc in triples(d) {
        let mut x = TensorElement::one(&legs);
        for (g, e) in gens.iter().zip(abc) {
            for _ in 0..e {
                x = slow_mul(&x, g);
            }
        }
        let x = x.expand_to_degree(d).unwrap();
        for (k, c) in x.iter() {
            let probe = NCElement::one(u.algebra());
            let (l, q) = (probe.exponents(&k[0]).unwrap(), probe.exponents(&k[1]).unwrap());
            assert_eq!(f4().get(abc, [l[0], l[1], l[2]], [q[0], q[1], q[2]]), *c, "{abc:?} {l:?} {q:?}");
        }
        let count = f4().iter().filter(|((a, l, q), _)| *a == abc && degree(l) <= d && degree(q) <= d).count();
        assert_eq!(count, x.len(), "{abc:?}");
    }
}

fn mono(p: &std::sync::Arc<crate::ncengine::Presentation>, m: &crate::ncengine::NcMono) -> NCElement {
    let mut t = std::collections::BTreeMap::new();
    t.insert(m.clone(), Scalar::one());
    NCElement::from_terms(p, t)
}
