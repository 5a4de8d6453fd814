//! The structure tensor of the coproduct in the ordered basis
//! `A₋^a A₊^b H^c`, and its dual reading as the product of the coordinate
//! algebra.

mod coordinates;
mod product;
mod recurrences;
#[cfg(test)]
mod tests;

use std::collections::BTreeMap;
use std::fmt::Write as _;

use rayon::prelude::*;

pub use coordinates::{coordinate_lie_algebra, exponential_generator_brackets, CoordinateReport};
pub use product::{dual_basis, extract_dual_commutators, verify_dual_product, DualCommutator, DualWitness};
pub use recurrences::{verify_recurrences, RecurrenceFailure};

use crate::coeffring::Scalar;
use crate::error::{Error, Result};
use crate::hopfcore::HopfPresentation;
use crate::ncengine::NCElement;

pub type Triple = [u32; 3];

/// Index triples of total degree `≤ d`, by degree then lexicographically
/// descending.
pub fn triples(d: u32) -> Vec<Triple> {
    let mut out = Vec::new();
    for n in 0..=d {
        for a in (0..=n).rev() {
            for b in (0..=n - a).rev() {
                out.push([a, b, n - a - b]);
            }
        }
    }
    out
}

pub fn degree(t: &Triple) -> u32 {
    t.iter().sum()
}

/// `Δ(X^{abc}) = Σ F^{abc}_{lmn;qrs} X^{lmn} ⊗ X^{qrs}`, materialized for
/// all triples of degree `≤ cutoff`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureTensor {
    cutoff: u32,
    source: String,
    entries: BTreeMap<(Triple, Triple, Triple), Scalar>,
}

impl StructureTensor {
    pub fn cutoff(&self) -> u32 {
        self.cutoff
    }

    pub fn source(&self) -> &str {
        &self.source
    }

    /// `F^{abc}_{lmn;qrs}` (zero when absent; indices must be in range).
    pub fn get(&self, abc: Triple, lmn: Triple, qrs: Triple) -> Scalar {
        self.entries.get(&(abc, lmn, qrs)).cloned().unwrap_or_default()
    }

    /// Like [`StructureTensor::get`] but with possibly negative indices,
    /// which give zero.
    pub(crate) fn get_i(&self, abc: [i64; 3], lmn: [i64; 3], qrs: [i64; 3]) -> Scalar {
        let conv = |t: [i64; 3]| -> Option<Triple> {
            t.iter().all(|x| *x >= 0).then(|| [t[0] as u32, t[1] as u32, t[2] as u32])
        };
        match (conv(abc), conv(lmn), conv(qrs)) {
            (Some(a), Some(l), Some(q)) => self.get(a, l, q),
            _ => Scalar::zero(),
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (&(Triple, Triple, Triple), &Scalar)> {
        self.entries.iter()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Overwrites one entry (zero removes it).
    pub fn set(&mut self, abc: Triple, lmn: Triple, qrs: Triple, value: Scalar) {
        if value.is_zero() {
            self.entries.remove(&(abc, lmn, qrs));
        } else {
            self.entries.insert((abc, lmn, qrs), value);
        }
    }

    /// Entries whose three triples all have degree `≤ d`.
    pub fn restrict(&self, d: u32) -> StructureTensor {
        StructureTensor {
            cutoff: d.min(self.cutoff),
            source: self.source.clone(),
            entries: self
                .entries
                .iter()
                .filter(|((a, l, q), _)| degree(a) <= d && degree(l) <= d && degree(q) <= d)
                .map(|(k, v)| (*k, v.clone()))
                .collect(),
        }
    }

    /// One line `a b c | l m n | q r s | scalar` per nonzero entry.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        let t = |x: &Triple| format!("{} {} {}", x[0], x[1], x[2]);
        for ((a, l, q), v) in &self.entries {
            let _ = writeln!(out, "{} | {} | {} | {}", t(a), t(l), t(q), v);
        }
        out
    }
}

/// Normal-orders `Δ(A₋^a A₊^b H^c)`, expands both legs to degree `cutoff`
/// and reads off coefficients. The source must have generators `A-`, `A+`
/// (commuting block) and `H`.
pub fn compute_structure_tensor(u: &HopfPresentation, cutoff: u32) -> Result<StructureTensor> {
    if cutoff == 0 {
        return Err(Error::Config("cutoff must be at least 1".into()));
    }
    let alg = u.algebra();
    for g in ["A-", "A+", "H"] {
        alg.lookup(g)?;
    }
    let delta = u.coproduct();
    let rows: Vec<Result<Vec<((Triple, Triple, Triple), Scalar)>>> = triples(cutoff)
        .into_par_iter()
        .map(|abc| {
            let x = NCElement::word(alg, &[("A-", abc[0]), ("A+", abc[1]), ("H", abc[2])])?;
            let d = delta.apply(&x)?.expand_to_degree(cutoff)?;
            let mut row = Vec::new();
            for (key, c) in d.iter() {
                let leg = |i: usize| -> Result<Triple> {
                    let probe = NCElement::one(alg);
                    let e = probe.exponents(&key[i]).ok_or_else(|| {
                        Error::Unsupported("exponential left after expansion".into())
                    })?;
                    Ok([e[0], e[1], e[2]])
                };
                row.push(((abc, leg(0)?, leg(1)?), c.clone()));
            }
            Ok(row)
        })
        .collect();
    let mut entries = BTreeMap::new();
    for r in rows {
        entries.extend(r?);
    }
    Ok(StructureTensor { cutoff, source: u.name().into(), entries })
}
