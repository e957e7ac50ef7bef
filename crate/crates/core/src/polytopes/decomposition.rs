//! Finite check that the lifted polytopes equal `𝒮₁ ⊔ 𝒮₂ ⊔ 𝒮₃`.

use std::collections::BTreeSet;

use super::{
    convert_ijk, in_p_0, in_p_c, in_p_m, in_p_mbar, in_s1, in_s2, in_s3, PolytopeElement4,
    UpsilonElement,
};
use crate::digits::Prime;

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct DecompositionReport {
    /// Elements of the box lying in more than one family.
    pub overlaps: Vec<UpsilonElement>,
    /// Lifted polytope points not found in any family.
    pub missing_from_families: Vec<UpsilonElement>,
    /// Family members not produced by the lift.
    pub missing_from_lift: Vec<UpsilonElement>,
    pub family_size: usize,
}

impl DecompositionReport {
    pub fn holds(&self) -> bool {
        self.overlaps.is_empty()
            && self.missing_from_families.is_empty()
            && self.missing_from_lift.is_empty()
    }
}

/// Image of `ℳ₁ ∪ … ∪ ℳ₄` under the grading shift, plus the `𝒮₃` points,
/// restricted to `0 <= a, b <= ab_bound`.
fn lifted(p: Prime, ab_bound: i64) -> BTreeSet<UpsilonElement> {
    let pp = p.get();
    let reach = 3 * pp + 3;
    let mut out = BTreeSet::new();
    for s in 1..=pp {
        for t in 1..=pp {
            for j0 in -reach..=reach {
                for k0 in -reach..=reach {
                    let e = PolytopeElement4::new(s, j0, k0, t);
                    let flags = (in_p_c(p, e), in_p_0(p, e), in_p_mbar(p, e), in_p_m(p, e));
                    if flags == (false, false, false, false) {
                        continue;
                    }
                    for a in 0..=ab_bound {
                        for b in 0..=ab_bound {
                            let member = (flags.0 && a == b)
                                || (flags.1 && a == b - 1)
                                || (flags.2 && a == b + 1)
                                || (flags.3 && a > b + 1);
                            if !member {
                                continue;
                            }
                            let (i, j, k) =
                                convert_ijk(p, j0, k0, a, b).expect("every ℳ-set has a >= b - 1");
                            out.insert(UpsilonElement::new(s, i, j, k, a, b, t));
                        }
                    }
                }
            }
        }
        out.insert(UpsilonElement::new(s, 1, 1, 0, 0, 0, pp + 1 - s));
    }
    out
}

/// Scans a box of `ℤ⁷` wide enough to contain every family member with
/// `0 <= a, b <= ab_bound`, checks pairwise disjointness of `𝒮₁, 𝒮₂, 𝒮₃`,
/// and compares their union with the lifted polytopes.
pub fn verify_decomposition(p: Prime, ab_bound: i64) -> DecompositionReport {
    let pp = p.get();
    let mut report = DecompositionReport::default();
    let mut families = BTreeSet::new();
    let j_range = (-pp * (ab_bound + 2))..=(2 * pp + 2);
    let k_range = (-2 * pp)..=((pp - 1) * (ab_bound + 2) + 2 * pp);
    for s in 1..=pp {
        for t in 1..=pp {
            for a in 0..=ab_bound {
                for b in 0..=ab_bound {
                    for i in (-2 * ab_bound - 2)..=2 {
                        for j in j_range.clone() {
                            for k in k_range.clone() {
                                let v = UpsilonElement::new(s, i, j, k, a, b, t);
                                let hits = u8::from(in_s1(p, &v))
                                    + u8::from(in_s2(p, &v))
                                    + u8::from(in_s3(p, &v));
                                if hits > 1 {
                                    report.overlaps.push(v);
                                }
                                if hits > 0 {
                                    families.insert(v);
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    let lift = lifted(p, ab_bound);
    report.missing_from_families = lift.difference(&families).copied().collect();
    report.missing_from_lift = families.difference(&lift).copied().collect();
    report.family_size = families.len();
    report
}
