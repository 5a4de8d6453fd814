use super::{Bivector, Cocommutator, LieAlgebraSC, Tensor2, Tensor3, Trivector};
use crate::coeffring::Scalar;
use crate::error::{Error, Result};
use crate::outcome::Outcome;

fn zeros2(n: usize) -> Tensor2 {
    vec![vec![Scalar::zero(); n]; n]
}

fn zeros3(n: usize) -> Tensor3 {
    vec![zeros2(n); n]
}

fn acc(slot: &mut Scalar, a: &Scalar, b: &Scalar) {
    if !a.is_zero() && !b.is_zero() {
        *slot = &*slot + &(a * b);
    }
}

fn render2(t: &Tensor2, names: &[String]) -> String {
    let mut parts = Vec::new();
    for (a, row) in t.iter().enumerate() {
        for (b, c) in row.iter().enumerate() {
            if !c.is_zero() {
                parts.push(format!("({c})·{}⊗{}", names[a], names[b]));
            }
        }
    }
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(" + ")
    }
}

fn sub2(x: &Tensor2, y: &Tensor2) -> Tensor2 {
    x.iter().zip(y).map(|(a, b)| a.iter().zip(b).map(|(p, q)| p - q).collect()).collect()
}

fn is_zero2(t: &Tensor2) -> bool {
    t.iter().flatten().all(Scalar::is_zero)
}

/// `[[r, r]] = [r₁₂, r₁₃] + [r₁₂, r₂₃] + [r₁₃, r₂₃]`.
pub fn schouten(g: &LieAlgebraSC, r: &Bivector) -> Result<Trivector> {
    let n = g.dim();
    let rt = r.to_tensor();
    let mut t = zeros3(n);
    for a in 0..n {
        for b in 0..n {
            if rt[a][b].is_zero() {
                continue;
            }
            for c in 0..n {
                for d in 0..n {
                    if rt[c][d].is_zero() {
                        continue;
                    }
                    let k = &rt[a][b] * &rt[c][d];
                    for m in 0..n {
                        acc(&mut t[m][b][d], &k, g.constant(a, c, m));
                        acc(&mut t[a][m][d], &k, g.constant(b, c, m));
                        acc(&mut t[a][c][m], &k, g.constant(b, d, m));
                    }
                }
            }
        }
    }
    Trivector::from_tensor(&t)
}

pub fn check_cybe(g: &LieAlgebraSC, r: &Bivector) -> Result<Outcome> {
    let s = schouten(g, r)?;
    Ok(if s.is_zero() { Outcome::Pass } else { Outcome::fail("[[r,r]]", s.render(g.names())) })
}

/// `[[r, r]]` is ad-invariant.
pub fn check_mcybe(g: &LieAlgebraSC, r: &Bivector) -> Result<Outcome> {
    let n = g.dim();
    let s = schouten(g, r)?;
    let mut dense = zeros3(n);
    for ((i, j, k), c) in s.iter() {
        let (i, j, k) = (*i, *j, *k);
        for (p, q, r, sign) in [(i, j, k, 1), (j, k, i, 1), (k, i, j, 1), (j, i, k, -1), (i, k, j, -1), (k, j, i, -1)] {
            dense[p][q][r] = if sign > 0 { c.clone() } else { -c };
        }
    }
    for x in 0..n {
        let mut out = zeros3(n);
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    let v = &dense[a][b][c];
                    if v.is_zero() {
                        continue;
                    }
                    for m in 0..n {
                        acc(&mut out[m][b][c], v, g.constant(x, a, m));
                        acc(&mut out[a][m][c], v, g.constant(x, b, m));
                        acc(&mut out[a][b][m], v, g.constant(x, c, m));
                    }
                }
            }
        }
        if out.iter().flatten().flatten().any(|v| !v.is_zero()) {
            let residual = Trivector::from_tensor(&out)?;
            return Ok(Outcome::fail(format!("ad({})[[r,r]]", g.names()[x]), residual.render(g.names())));
        }
    }
    Ok(Outcome::Pass)
}

/// `(ad_x ⊗ 1 + 1 ⊗ ad_x) t` for a basis element `x`.
fn act(g: &LieAlgebraSC, x: usize, t: &Tensor2) -> Tensor2 {
    let n = g.dim();
    let mut out = zeros2(n);
    for a in 0..n {
        for b in 0..n {
            if t[a][b].is_zero() {
                continue;
            }
            for m in 0..n {
                acc(&mut out[m][b], &t[a][b], g.constant(x, a, m));
                acc(&mut out[a][m], &t[a][b], g.constant(x, b, m));
            }
        }
    }
    out
}

/// `δ(x) = [x ⊗ 1 + 1 ⊗ x, r]`.
pub fn coboundary_cocommutator(g: &LieAlgebraSC, r: &Bivector) -> Result<Cocommutator> {
    let rt = r.to_tensor();
    let images = (0..g.dim()).map(|x| Bivector::from_tensor(&act(g, x, &rt))).collect::<Result<_>>()?;
    Ok(Cocommutator { images })
}

/// `δ([x, y]) = x·δ(y) − y·δ(x)` on basis pairs.
pub fn check_cocycle(g: &LieAlgebraSC, delta: &Cocommutator) -> Result<Outcome> {
    let n = g.dim();
    for i in 0..n {
        for j in i + 1..n {
            let lhs = delta.apply(g.bracket_basis(i, j));
            let rhs = sub2(&act(g, i, &delta.images[j].to_tensor()), &act(g, j, &delta.images[i].to_tensor()));
            let res = sub2(&lhs, &rhs);
            if !is_zero2(&res) {
                return Ok(Outcome::fail(format!("({}, {})", g.names()[i], g.names()[j]), render2(&res, g.names())));
            }
        }
    }
    Ok(Outcome::Pass)
}

/// The cyclic sum of `(δ ⊗ 1)δ(x)` vanishes.
pub fn check_cojacobi(g: &LieAlgebraSC, delta: &Cocommutator) -> Result<Outcome> {
    let n = g.dim();
    let dense: Vec<Tensor2> = delta.images.iter().map(Bivector::to_tensor).collect();
    for x in 0..n {
        let d = &dense[x];
        let mut t = zeros3(n);
        for p in 0..n {
            for c in 0..n {
                if d[p][c].is_zero() {
                    continue;
                }
                for a in 0..n {
                    for b in 0..n {
                        acc(&mut t[a][b][c], &d[p][c], &dense[p][a][b]);
                    }
                }
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    let s = &(&t[a][b][c] + &t[b][c][a]) + &t[c][a][b];
                    if !s.is_zero() {
                        let names = g.names();
                        return Ok(Outcome::fail(
                            format!("{} at {}⊗{}⊗{}", names[x], names[a], names[b], names[c]),
                            s,
                        ));
                    }
                }
            }
        }
    }
    Ok(Outcome::Pass)
}

fn determinant(m: &Tensor2) -> Scalar {
    let n = m.len();
    if n == 0 {
        return Scalar::one();
    }
    let mut det = Scalar::zero();
    for (col, c) in m[0].iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let minor: Tensor2 = m[1..]
            .iter()
            .map(|row| row.iter().enumerate().filter(|(k, _)| *k != col).map(|(_, v)| v.clone()).collect())
            .collect();
        let term = c * &determinant(&minor);
        det = if col % 2 == 0 { &det + &term } else { &det - &term };
    }
    det
}

/// `⟨δ₁(x), ξ⊗η⟩ = ⟨x, [ξ, η]⟩` and `⟨δ₂(ξ), x⊗y⟩ = ⟨ξ, [x, y]⟩` for
/// the pairing `pairing[i][a] = ⟨e_i, f_a⟩`.
pub fn check_bialgebra_duality(
    g1: &LieAlgebraSC,
    d1: &Cocommutator,
    g2: &LieAlgebraSC,
    d2: &Cocommutator,
    pairing: &Tensor2,
) -> Result<Outcome> {
    let n = g1.dim();
    if g2.dim() != n || pairing.len() != n || pairing.iter().any(|row| row.len() != n) {
        return Err(Error::Dimension(format!("pairing between dimensions {n} and {}", g2.dim())));
    }
    if determinant(pairing).is_zero() {
        return Err(Error::DegeneratePairing("the pairing matrix is singular".into()));
    }
    let pair2 = |t: &Tensor2, a: usize, b: usize, left: bool| {
        let mut s = Scalar::zero();
        for p in 0..n {
            for q in 0..n {
                if t[p][q].is_zero() {
                    continue;
                }
                let k = if left { &pairing[p][a] * &pairing[q][b] } else { &pairing[a][p] * &pairing[b][q] };
                acc(&mut s, &t[p][q], &k);
            }
        }
        s
    };
    for i in 0..n {
        let d = d1.images[i].to_tensor();
        for a in 0..n {
            for b in a + 1..n {
                let lhs = pair2(&d, a, b, true);
                let mut rhs = Scalar::zero();
                for m in 0..n {
                    acc(&mut rhs, g2.constant(a, b, m), &pairing[i][m]);
                }
                if lhs != rhs {
                    let at = format!("⟨δ({}), {}⊗{}⟩", g1.names()[i], g2.names()[a], g2.names()[b]);
                    return Ok(Outcome::fail(at, &lhs - &rhs));
                }
            }
        }
    }
    for a in 0..n {
        let d = d2.images[a].to_tensor();
        for i in 0..n {
            for j in i + 1..n {
                let lhs = pair2(&d, i, j, false);
                let mut rhs = Scalar::zero();
                for m in 0..n {
                    acc(&mut rhs, g1.constant(i, j, m), &pairing[m][a]);
                }
                if lhs != rhs {
                    let at = format!("⟨δ({}), {}⊗{}⟩", g2.names()[a], g1.names()[i], g1.names()[j]);
                    return Ok(Outcome::fail(at, &lhs - &rhs));
                }
            }
        }
    }
    Ok(Outcome::Pass)
}

#[derive(Clone, Debug)]
pub struct PairingSearch {
    pub tried: usize,
    /// Diagonal entries `⟨e_i, f_i⟩` of every pairing that passes.
    pub solutions: Vec<Vec<Scalar>>,
}

/// Tries every diagonal pairing with entries from `candidates`.
pub fn search_diagonal_pairing(
    g1: &LieAlgebraSC,
    d1: &Cocommutator,
    g2: &LieAlgebraSC,
    d2: &Cocommutator,
    candidates: &[Scalar],
) -> Result<PairingSearch> {
    let n = g1.dim();
    let k = candidates.len();
    let mut out = PairingSearch { tried: 0, solutions: Vec::new() };
    if k == 0 {
        return Ok(out);
    }
    for code in 0..k.pow(n as u32) {
        let diag: Vec<Scalar> = (0..n).map(|i| candidates[(code / k.pow(i as u32)) % k].clone()).collect();
        let mut p = zeros2(n);
        for i in 0..n {
            p[i][i] = diag[i].clone();
        }
        out.tried += 1;
        match check_bialgebra_duality(g1, d1, g2, d2, &p) {
            Ok(o) if o.is_pass() => out.solutions.push(diag),
            Ok(_) | Err(Error::DegeneratePairing(_)) => {}
            Err(e) => return Err(e),
        }
    }
    Ok(out)
}
