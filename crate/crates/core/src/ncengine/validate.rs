use std::fmt;
use std::sync::Arc;

use super::element::NCElement;
use super::presentation::{Level, Presentation};
use crate::coeffring::Var;

/// One violated tower hypothesis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValidationIssue {
    pub check: String,
    pub pair: String,
    pub residual: String,
}

impl fmt::Display for ValidationIssue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} at {}: {}", self.check, self.pair, self.residual)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub issues: Vec<ValidationIssue>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.issues.is_empty()
    }

    fn push(&mut self, check: &str, pair: String, residual: String) {
        self.issues.push(ValidationIssue { check: check.into(), pair, residual });
    }
}

/// Checks the hypotheses the normal-ordering formulas rely on:
///
/// * a rule involving a commuting block must be a function of that block
///   and commute with each of its generators;
/// * declared dependency sets match the actual support;
/// * the Jacobi identity holds for every generator triple.
pub fn validate_presentation(p: &Arc<Presentation>) -> ValidationReport {
    let mut report = ValidationReport::default();
    for ((hi, lo), rule) in p.rules() {
        let pair = format!("[{hi},{lo}]");
        let value = p.rule_element(*hi, *lo);
        let support = value.support();
        if &support != rule.deps() {
            report.push(
                "declared dependencies",
                pair.clone(),
                format!("declared {:?}, actual {:?}", names(rule.deps().iter()), names(support.iter())),
            );
        }
        let (lh, ll) = (p.level_of(*hi).expect("stored"), p.level_of(*lo).expect("stored"));
        let block = match (&p.levels()[lh], &p.levels()[ll]) {
            (Level::Block(_), Level::Block(_)) => {
                report.push("blocks commute", pair.clone(), value.to_string());
                continue;
            }
            (Level::Poly(_), Level::Block(_)) => ll,
            (Level::Block(_), Level::Poly(_)) => lh,
            (Level::Poly(_), Level::Poly(_)) => continue,
        };
        let block_vars = p.levels()[block].vars();
        if let Some(stray) = support.iter().find(|v| !block_vars.contains(v)) {
            report.push(
                "function of the block",
                pair.clone(),
                format!("{value} involves {stray} outside {:?}", names(block_vars.iter())),
            );
            continue;
        }
        for v in &block_vars {
            let g = NCElement::gen(p, v.name()).expect("block generator");
            match value.commutator(&g) {
                Ok(r) if r.is_zero() => {}
                Ok(r) => report.push("commutant", format!("[{pair}, {v}]"), r.to_string()),
                Err(e) => report.push("commutant", format!("[{pair}, {v}]"), e.to_string()),
            }
        }
    }
    if !report.is_valid() {
        return report;
    }
    let gens = p.generators();
    for (i, x) in gens.iter().enumerate() {
        for (j, y) in gens.iter().enumerate().skip(i + 1) {
            for z in gens.iter().skip(j + 1) {
                match jacobi(p, *x, *y, *z) {
                    Ok(r) if r.is_zero() => {}
                    Ok(r) => report.push("Jacobi", format!("({x},{y},{z})"), r.to_string()),
                    Err(e) => report.push("Jacobi", format!("({x},{y},{z})"), e.to_string()),
                }
            }
        }
    }
    report
}

fn jacobi(p: &Arc<Presentation>, x: Var, y: Var, z: Var) -> crate::Result<NCElement> {
    let g = |v: Var| NCElement::gen(p, v.name());
    let (x, y, z) = (g(x)?, g(y)?, g(z)?);
    let a = x.commutator(&y.commutator(&z)?)?;
    let b = y.commutator(&z.commutator(&x)?)?;
    let c = z.commutator(&x.commutator(&y)?)?;
    Ok(&(&a + &b) + &c)
}

fn names<'a>(it: impl Iterator<Item = &'a Var>) -> Vec<&'static str> {
    it.map(|v| v.name()).collect()
}
