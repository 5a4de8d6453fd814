use super::{FieldSet, PoissonStructure, SklyaninRecipe, VectorField};
use crate::coeffring::{q, ExpPoly, Param, Scalar, Var};
use crate::liebialg::{iso11_pk, r_hat, r_n, sb2};

fn w() -> Scalar {
    Scalar::param(Param::W)
}

fn var(x: &str) -> ExpPoly {
    ExpPoly::var(Var::new(x))
}

fn set(fields: Vec<(&str, VectorField)>) -> FieldSet {
    fields.into_iter().map(|(n, f)| (n.to_string(), f)).collect()
}

/// `X_K = ∂_χ`, `X_{P±} = e^{±2χ}∂_{a±}`.
pub fn iso11_left_fields() -> FieldSet {
    let chi = Var::new("chi");
    set(vec![
        ("K", VectorField::partial("chi")),
        ("P+", VectorField::new(&[("a+", ExpPoly::exp_var(chi, Scalar::int(2)))])),
        ("P-", VectorField::new(&[("a-", ExpPoly::exp_var(chi, Scalar::int(-2)))])),
    ])
}

/// `X_K = ∂_χ + 2a₊∂_{a₊} − 2a₋∂_{a₋}`, `X_{P±} = ∂_{a±}`.
pub fn iso11_right_fields() -> FieldSet {
    let k = VectorField::new(&[
        ("chi", ExpPoly::one()),
        ("a+", var("a+").scale(&Scalar::int(2))),
        ("a-", var("a-").scale(&Scalar::int(-2))),
    ]);
    set(vec![("K", k), ("P+", VectorField::partial("a+")), ("P-", VectorField::partial("a-"))])
}

/// `c·K∧P₊` on ISO(1,1) in coordinates `χ, a₊, a₋`.
pub fn iso11_recipe(c: &Scalar) -> SklyaninRecipe {
    SklyaninRecipe {
        algebra: iso11_pk(),
        r: r_n().scale(c).to_tensor(),
        left: iso11_left_fields(),
        right: iso11_right_fields(),
        coords: ["chi", "a+", "a-"].map(Var::new).to_vec(),
    }
}

/// `m∘((e^{2χ} − 1)∂_χ∧∂_{a₊} − 2a₋∂_{a₊}∧∂_{a₋})`.
pub fn eeo_table() -> PoissonStructure {
    let e2 = ExpPoly::exp_var(Var::new("chi"), Scalar::int(2));
    PoissonStructure::new(
        &["chi", "a+", "a-"],
        &[("chi", "a+", &e2 - &ExpPoly::one()), ("a+", "a-", var("a-").scale(&Scalar::int(-2)))],
    )
    .expect("valid table")
}

/// `{χ, a₊} = w(e^{2χ} − 1)`, `{χ, a₋} = 0`, `{a₊, a₋} = −2w a₋`.
pub fn iso11_table() -> PoissonStructure {
    eeo_table().scale(&w())
}

/// `X_{Q(χ)} = ∂_H`, `X_{Q(a₊)} = 2wH∂_H + ∂_{A₊}`, `X_{Q(a₋)} = e^{−2wA₊}∂_{A₋}`.
pub fn sb2_left_fields() -> FieldSet {
    let w2 = w().scale(&q(2));
    set(vec![
        ("Q(chi)", VectorField::partial("H")),
        ("Q(a+)", VectorField::new(&[("H", var("H").scale(&w2)), ("A+", ExpPoly::one())])),
        ("Q(a-)", VectorField::new(&[("A-", ExpPoly::exp_var(Var::new("A+"), -&w2))])),
    ])
}

fn sb2_right(chi_sign: i64) -> FieldSet {
    let w2 = w().scale(&q(2));
    set(vec![
        ("Q(chi)", VectorField::new(&[("H", ExpPoly::exp_var(Var::new("A+"), w2.scale(&q(chi_sign))))])),
        ("Q(a+)", VectorField::new(&[("A-", var("A-").scale(&-&w2)), ("A+", ExpPoly::one())])),
        ("Q(a-)", VectorField::partial("A-")),
    ])
}

/// Right fields with `X_{Q(χ)} = e^{−2wA₊}∂_H` (these do not close),
/// `X_{Q(a₊)} = −2wA₋∂_{A₋} + ∂_{A₊}`, `X_{Q(a₋)} = ∂_{A₋}`.
pub fn sb2_right_fields() -> FieldSet {
    sb2_right(-1)
}

/// Right fields read off the group law of the 4×4 realization; they differ
/// from [`sb2_right_fields`] only in `X_{Q(χ)} = e^{2wA₊}∂_H`.
pub fn sb2_right_fields_from_group_law() -> FieldSet {
    sb2_right(1)
}

/// `(1/w)·Q(a₊)∧Q(χ)` on SB(2) in coordinates `H, A₊, A₋`.
pub fn sb2_recipe(right: FieldSet) -> SklyaninRecipe {
    SklyaninRecipe {
        algebra: sb2(),
        r: r_hat().to_tensor(),
        left: sb2_left_fields(),
        right,
        coords: ["H", "A+", "A-"].map(Var::new).to_vec(),
    }
}

/// `{H, A₊} = (e^{2wA₊} − 1)/w`, `{H, A₋} = −2A₋e^{2wA₊}`, `{A₊, A₋} = 0`.
pub fn sb2_table() -> PoissonStructure {
    let e2 = ExpPoly::exp_var(Var::new("A+"), w().scale(&q(2)));
    let winv = w().inverse().expect("w is invertible");
    PoissonStructure::new(
        &["H", "A+", "A-"],
        &[("H", "A+", (&e2 - &ExpPoly::one()).scale(&winv)), ("H", "A-", (&var("A-") * &e2).scale(&Scalar::int(-2)))],
    )
    .expect("valid table")
}
