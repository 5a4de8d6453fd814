use super::{triples, StructureTensor, Triple};
use crate::coeffring::{q, qr, Param, Scalar};

/// One violated identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RecurrenceFailure {
    pub family: &'static str,
    pub indices: String,
    pub expected: Scalar,
    pub found: Scalar,
}

fn delta(a: &Triple, b: &Triple) -> Scalar {
    if a == b {
        Scalar::one()
    } else {
        Scalar::zero()
    }
}

fn i(t: &Triple) -> [i64; 3] {
    [t[0] as i64, t[1] as i64, t[2] as i64]
}

fn fmt(abc: &Triple, lmn: &Triple, qrs: &Triple) -> String {
    format!("F^{abc:?}_{lmn:?};{qrs:?}")
}

/// Checks, on every in-range index:
///
/// * unit rows and columns (`lmn = 0`, `qrs = 0`, `abc = 0`);
/// * the `A₋` recurrence from `Δ(A₋)Δ(X^{(a−1)bc})`;
/// * the `A₊` recurrence from `Δ(A₊)Δ(X^{a(b−1)c})`;
/// * the `A₋` row `F^{abc}_{100;qrs} = a·δ^a_{q+1}δ^b_rδ^c_s`;
/// * the `A₊` row `F^{0bc}_{010;0rs} = b·δ^b_{r+1}δ^c_s` (only without
///   `A₋`: for `a ≥ 1` the factor `e^{−2wA₊}` in `Δ(A₋)` adds terms);
/// * the `H` column `F^{abc}_{lmn;001} = c·δ^a_lδ^b_mδ^c_{n+1}`.
pub fn verify_recurrences(f: &StructureTensor) -> Vec<RecurrenceFailure> {
    let d = f.cutoff();
    let ts = triples(d);
    let zero: Triple = [0, 0, 0];
    let mw2 = Scalar::param(Param::W).scale(&q(-2));
    let mut out = Vec::new();
    let mut check = |family: &'static str, abc: &Triple, lmn: &Triple, qrs: &Triple, expected: Scalar| {
        let found = f.get(*abc, *lmn, *qrs);
        if found != expected {
            out.push(RecurrenceFailure { family, indices: fmt(abc, lmn, qrs), expected, found });
        }
    };
    for abc in &ts {
        for t in &ts {
            check("unit on the left", abc, &zero, t, delta(abc, t));
            check("unit on the right", abc, t, &zero, delta(abc, t));
            check("unit source", &zero, abc, t, if *abc == zero && *t == zero { Scalar::one() } else { Scalar::zero() });
        }
    }
    for abc in &ts {
        for lmn in &ts {
            for qrs in &ts {
                let (a, l, q) = (i(abc), i(lmn), i(qrs));
                if abc[0] >= 1 {
                    let src = [a[0] - 1, a[1], a[2]];
                    let mut e = f.get_i(src, [l[0] - 1, l[1], l[2]], q);
                    let mut pw = Scalar::one();
                    for k in (0..=l[1]).rev() {
                        // pw = (−2w)^{m−k}/(m−k)!
                        e = &e + &(&f.get_i(src, [l[0], k, l[2]], [q[0] - 1, q[1], q[2]]) * &pw);
                        let j = l[1] - k + 1;
                        pw = (&pw * &mw2).scale(&qr(1, j));
                    }
                    check("A- recurrence", abc, lmn, qrs, e);
                }
                if abc[1] >= 1 {
                    let src = [a[0], a[1] - 1, a[2]];
                    let e = &f.get_i(src, [l[0], l[1] - 1, l[2]], q) + &f.get_i(src, l, [q[0], q[1] - 1, q[2]]);
                    check("A+ recurrence", abc, lmn, qrs, e);
                }
            }
        }
    }
    for abc in &ts {
        for t in &ts {
            let target = [t[0] + 1, t[1], t[2]];
            let e = if *abc == target { Scalar::int(abc[0] as i64) } else { Scalar::zero() };
            check("A- row", abc, &[1, 0, 0], t, e);
            if abc[0] == 0 && t[0] == 0 {
                let target = [0, t[1] + 1, t[2]];
                let e = if *abc == target { Scalar::int(abc[1] as i64) } else { Scalar::zero() };
                check("A+ row", abc, &[0, 1, 0], t, e);
            }
            let target = [t[0], t[1], t[2] + 1];
            let e = if *abc == target { Scalar::int(abc[2] as i64) } else { Scalar::zero() };
            check("H column", abc, t, &[0, 0, 1], e);
        }
    }
    out
}
