use super::*;
use crate::coeffring::{q, qr, Param};
use crate::hopfcore::catalog_get;
use crate::outcome::Outcome;

fn w() -> Scalar {
    Scalar::param(Param::W)
}

fn wedge(g: &LieAlgebraSC, x: &str, y: &str, c: Scalar) -> Bivector {
    Bivector::wedge(g.dim(), g.index(x).unwrap(), g.index(y).unwrap(), c)
}

/// Direct sum over `[r₁₂,r₁₃] + [r₁₂,r₂₃] + [r₁₃,r₂₃]` with elementary
/// tensors, independent of the dense accumulation in `schouten`.
fn schouten_by_terms(g: &LieAlgebraSC, r: &Bivector) -> Tensor3 {
    let n = g.dim();
    let rt = r.to_tensor();
    let mut terms: Vec<(Scalar, usize, usize)> = Vec::new();
    for a in 0..n {
        for b in 0..n {
            if !rt[a][b].is_zero() {
                terms.push((rt[a][b].clone(), a, b));
            }
        }
    }
    let mut t = vec![vec![vec![Scalar::zero(); n]; n]; n];
    for (c1, a, b) in &terms {
        for (c2, c, d) in &terms {
            let k = c1 * c2;
            for (m, s) in g.bracket(&g.basis(*a), &g.basis(*c)).iter().enumerate() {
                t[m][*b][*d] = &t[m][*b][*d] + &(&k * s);
            }
            for (m, s) in g.bracket(&g.basis(*b), &g.basis(*c)).iter().enumerate() {
                t[*a][m][*d] = &t[*a][m][*d] + &(&k * s);
            }
            for (m, s) in g.bracket(&g.basis(*b), &g.basis(*d)).iter().enumerate() {
                t[*a][*c][m] = &t[*a][*c][m] + &(&k * s);
            }
        }
    }
    t
}

#[test]
fn jacobi_is_enforced() {
    let bad = LieAlgebraSC::new(
        &["x", "y", "z"],
        &[("x", "y", &[("z", Scalar::one())]), ("y", "z", &[("y", Scalar::one())])],
    );
    assert!(bad.is_err());
    assert_eq!(iso11_pk().constant(0, 1, 1), &Scalar::int(2));
    assert_eq!(iso11_pk().constant(1, 0, 1), &Scalar::int(-2));
}

#[test]
fn schouten_of_catalog_r_matrices() {
    let g = iso11_pk();
    assert!(schouten(&g, &r_n()).unwrap().is_zero());
    assert!(schouten(&g, &Bivector::zero(3)).unwrap().is_zero());
    let s = schouten(&g, &r_s()).unwrap();
    assert!(!s.is_zero());
    assert_eq!(Trivector::from_tensor(&schouten_by_terms(&g, &r_s())).unwrap(), s);
    assert!(check_cybe(&g, &r_n()).unwrap().is_pass());
    assert!(matches!(check_cybe(&g, &r_s()).unwrap(), Outcome::Fail(_)));
    assert!(check_mcybe(&g, &r_s()).unwrap().is_pass());
    assert!(check_mcybe(&g, &r_n()).unwrap().is_pass());
}

#[test]
fn translations_wedge_is_a_solution() {
    let g = iso11_pk();
    let r = wedge(&g, "P+", "P-", Scalar::one());
    let dense = schouten_by_terms(&g, &r);
    assert!(dense.iter().flatten().flatten().all(Scalar::is_zero));
    assert!(check_cybe(&g, &r).unwrap().is_pass());
}

#[test]
fn schouten_is_totally_antisymmetric_for_generic_r() {
    let g = iso11_pk();
    let r = wedge(&g, "K", "P+", Scalar::int(3))
        .plus(&wedge(&g, "K", "P-", w()))
        .plus(&wedge(&g, "P+", "P-", Scalar::from_q(qr(-1, 2))));
    assert!(Trivector::from_tensor(&schouten_by_terms(&g, &r)).is_ok());
    assert!(schouten(&g, &r).is_ok());
}

#[test]
fn every_r_on_sb2_solves_cybe() {
    // Every plane in sb(2) is a subalgebra.
    let g = sb2();
    let names = ["Q(a-)", "Q(a+)", "Q(chi)"];
    for (i, x) in names.iter().enumerate() {
        for y in &names[i + 1..] {
            for z in &names {
                let r = wedge(&g, x, y, Scalar::one()).plus(&wedge(&g, x, z, Scalar::int(3)));
                assert!(schouten(&g, &r).unwrap().is_zero());
            }
        }
    }
}

#[test]
fn mcybe_failure_on_non_invariant_schouten() {
    // Λ³ is a line on which ad x acts by tr ad x = 1.
    let g = LieAlgebraSC::new(
        &["x", "y", "z"],
        &[("x", "y", &[("z", Scalar::one())]), ("x", "z", &[("z", Scalar::one())])],
    )
    .unwrap();
    let r = wedge(&g, "x", "y", Scalar::one());
    assert!(!schouten(&g, &r).unwrap().is_zero());
    let Outcome::Fail(wit) = check_mcybe(&g, &r).unwrap() else { panic!("expected a witness") };
    assert!(wit.at.contains("ad(x)"), "{wit:?}");
}

#[test]
fn coboundary_from_w_h_wedge_a_plus() {
    let g = iso11_ah();
    let d = coboundary_cocommutator(&g, &r_n_ah()).unwrap();
    let two_w = w().scale(&q(2));
    assert!(d.images[g.index("A+").unwrap()].is_zero());
    assert_eq!(d.images[g.index("A-").unwrap()], wedge(&g, "A-", "A+", two_w.clone()));
    assert_eq!(d.images[g.index("H").unwrap()], wedge(&g, "H", "A+", two_w));
}

#[test]
fn coboundary_from_r_hat_on_sb2() {
    let g = sb2();
    let d = coboundary_cocommutator(&g, &r_hat()).unwrap();
    assert!(d.images[g.index("Q(chi)").unwrap()].is_zero());
    assert_eq!(d.images[g.index("Q(a+)").unwrap()], wedge(&g, "Q(chi)", "Q(a+)", Scalar::int(2)));
    assert_eq!(d.images[g.index("Q(a-)").unwrap()], wedge(&g, "Q(chi)", "Q(a-)", Scalar::int(-2)));
    assert!(check_cybe(&g, &r_hat()).unwrap().is_pass());
}

#[test]
fn coboundaries_are_bialgebras() {
    for (g, r) in [(iso11_pk(), r_n()), (iso11_pk(), r_s()), (iso11_ah(), r_n_ah()), (sb2(), r_hat())] {
        let d = coboundary_cocommutator(&g, &r).unwrap();
        assert!(check_cocycle(&g, &d).unwrap().is_pass());
        assert!(check_cojacobi(&g, &d).unwrap().is_pass());
    }
}

#[test]
fn non_coboundary_cocommutator() {
    let g = iso11_pk();
    let d = delta_nc();
    assert!(check_cocycle(&g, &d).unwrap().is_pass());
    assert!(check_cojacobi(&g, &d).unwrap().is_pass());
    let bad = Cocommutator::from_images(&g, &[("P+", wedge(&g, "K", "P-", Scalar::one()))]).unwrap();
    let Outcome::Fail(wit) = check_cocycle(&g, &bad).unwrap() else { panic!("expected a witness") };
    assert!(wit.at.contains("P+"), "{wit:?}");
}

fn ah_delta() -> Cocommutator {
    let g = iso11_ah();
    let two_w = w().scale(&q(2));
    Cocommutator::from_images(&g, &[("A-", wedge(&g, "A-", "A+", two_w.clone())), ("H", wedge(&g, "H", "A+", two_w))])
        .unwrap()
}

fn sb2_delta() -> Cocommutator {
    let g = sb2();
    Cocommutator::from_images(
        &g,
        &[
            ("Q(a+)", wedge(&g, "Q(chi)", "Q(a+)", Scalar::int(2))),
            ("Q(a-)", wedge(&g, "Q(chi)", "Q(a-)", Scalar::int(-2))),
        ],
    )
    .unwrap()
}

fn diag(v: &[Scalar]) -> Tensor2 {
    let n = v.len();
    (0..n).map(|i| (0..n).map(|j| if i == j { v[i].clone() } else { Scalar::zero() }).collect()).collect()
}

#[test]
fn iso11_and_sb2_are_dual() {
    let (g1, g2) = (iso11_ah(), sb2());
    let ones = diag(&[Scalar::one(), Scalar::one(), Scalar::one()]);
    assert!(check_bialgebra_duality(&g1, &ah_delta(), &g2, &sb2_delta(), &ones).unwrap().is_pass());

    let candidates: Vec<Scalar> =
        [qr(1, 1), qr(-1, 1), qr(2, 1), qr(-2, 1), qr(1, 2), qr(-1, 2)].into_iter().map(Scalar::from_q).collect();
    let found = search_diagonal_pairing(&g1, &ah_delta(), &g2, &sb2_delta(), &candidates).unwrap();
    assert_eq!(found.tried, 216);
    // ⟨A₊, Q(a₊)⟩ = ⟨H, Q(χ)⟩ = 1 are forced; ⟨A₋, Q(a₋)⟩ is free.
    assert_eq!(found.solutions.len(), 6);
    assert!(found.solutions.iter().all(|s| s[1].is_one() && s[2].is_one()));

    let scaled = diag(&[Scalar::one(), Scalar::int(2), Scalar::one()]);
    assert!(matches!(check_bialgebra_duality(&g1, &ah_delta(), &g2, &sb2_delta(), &scaled).unwrap(), Outcome::Fail(_)));
}

#[test]
fn abelian_self_duality_and_degenerate_pairing() {
    let g = LieAlgebraSC::new(&["x", "y"], &[]).unwrap();
    let zero = Cocommutator::from_images(&g, &[]).unwrap();
    let id = diag(&[Scalar::one(), Scalar::one()]);
    assert!(check_bialgebra_duality(&g, &zero, &g, &zero, &id).unwrap().is_pass());
    let singular = diag(&[Scalar::one(), Scalar::zero()]);
    assert!(matches!(
        check_bialgebra_duality(&g, &zero, &g, &zero, &singular),
        Err(crate::error::Error::DegeneratePairing(_))
    ));
}

#[test]
fn first_order_of_ah_coproduct() {
    let h = catalog_get("uw-iso11-ah").unwrap();
    let g = iso11_ah();
    let lin = linearized_cocommutator(&h, &g, &["A-", "A+", "H"]).unwrap();
    assert_eq!(lin, ah_delta());
    assert_eq!(lin, coboundary_cocommutator(&g, &r_n_ah()).unwrap());
}

#[test]
fn linearized_coproduct_of_funw() {
    let h = catalog_get("funw-iso11").unwrap();
    let lin = linearized_cocommutator(&h, &sb2(), &["a-", "a+", "chi"]).unwrap();
    assert_eq!(lin, sb2_delta());
}
