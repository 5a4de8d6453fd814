use super::{Bivector, Cocommutator, LieAlgebraSC};
use crate::coeffring::{Param, Scalar};
use crate::error::Result;

fn w() -> Scalar {
    Scalar::param(Param::W)
}

/// iso(1,1) with `[K, P±] = ±2P±`, `[P+, P−] = 0`.
pub fn iso11_pk() -> LieAlgebraSC {
    LieAlgebraSC::new(
        &["K", "P+", "P-"],
        &[("K", "P+", &[("P+", Scalar::int(2))]), ("K", "P-", &[("P-", Scalar::int(-2))])],
    )
    .expect("iso(1,1) satisfies Jacobi")
}

/// iso(1,1) in the basis `A₋, A₊, H` with `[H, A±] = ±2A±`.
pub fn iso11_ah() -> LieAlgebraSC {
    LieAlgebraSC::new(
        &["A-", "A+", "H"],
        &[("H", "A+", &[("A+", Scalar::int(2))]), ("H", "A-", &[("A-", Scalar::int(-2))])],
    )
    .expect("iso(1,1) satisfies Jacobi")
}

/// The dual algebra with basis `Q(a₋), Q(a₊), Q(χ)`.
pub fn sb2() -> LieAlgebraSC {
    let w2 = w().scale(&crate::coeffring::q(2));
    LieAlgebraSC::new(
        &["Q(a-)", "Q(a+)", "Q(chi)"],
        &[
            ("Q(chi)", "Q(a+)", &[("Q(chi)", w2.clone())]),
            ("Q(a+)", "Q(a-)", &[("Q(a-)", -&w2)]),
        ],
    )
    .expect("sb(2) satisfies Jacobi")
}

fn wedge(g: &LieAlgebraSC, x: &str, y: &str, c: Scalar) -> Result<Bivector> {
    Ok(Bivector::wedge(g.dim(), g.index(x)?, g.index(y)?, c))
}

/// `K∧P₊` on [`iso11_pk`].
pub fn r_n() -> Bivector {
    wedge(&iso11_pk(), "K", "P+", Scalar::one()).unwrap()
}

/// `K∧(P₋ + P₊)` on [`iso11_pk`].
pub fn r_s() -> Bivector {
    let g = iso11_pk();
    wedge(&g, "K", "P-", Scalar::one()).unwrap().plus(&wedge(&g, "K", "P+", Scalar::one()).unwrap())
}

/// `w·H∧A₊` on [`iso11_ah`].
pub fn r_n_ah() -> Bivector {
    wedge(&iso11_ah(), "H", "A+", w()).unwrap()
}

/// `(1/w)·Q(a₊)∧Q(χ)` on [`sb2`].
pub fn r_hat() -> Bivector {
    let inv = w().inverse().unwrap();
    wedge(&sb2(), "Q(a+)", "Q(chi)", inv).unwrap()
}

/// `δ(K) = 0`, `δ(P±) = P±∧K` on [`iso11_pk`]; not a coboundary.
pub fn delta_nc() -> Cocommutator {
    let g = iso11_pk();
    Cocommutator::from_images(
        &g,
        &[
            ("P+", wedge(&g, "P+", "K", Scalar::one()).unwrap()),
            ("P-", wedge(&g, "P-", "K", Scalar::one()).unwrap()),
        ],
    )
    .unwrap()
}
