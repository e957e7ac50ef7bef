use num_traits::{One, Zero};
use proptest::prelude::*;
use weyl_ext::digits::{digits_of, weight_deltas};
use weyl_ext::partitions::bounds::{evaluate, lower_bound_witness, FormulaId};
use weyl_ext::polytopes::{count_basis, enumerate_cases};
use weyl_ext::{duality_partner, Count, Prime, Recursion};

fn prime(p: i64) -> Prime {
    Prime::new(p).unwrap()
}

#[test]
fn duality_on_q2_blocks() {
    for pp in [2, 3, 5] {
        let p = prime(pp);
        let mut r = Recursion::new(p);
        let n = p.pow(2).unwrap();
        for m in 1..=n {
            for l in 1..=n {
                let (dm, dl) = duality_partner(p, 2, m, l).unwrap();
                for k in 0..n {
                    assert_eq!(
                        r.ext_dim(k, m, l, Some(2)).unwrap().total,
                        r.ext_dim(k, dm, dl, Some(2)).unwrap().total,
                        "p={pp} k={k} m={m} l={l}"
                    );
                }
            }
        }
    }
}

#[test]
fn q_stability() {
    for pp in [2, 3] {
        let p = prime(pp);
        let mut r = Recursion::new(p);
        for q in 1..=3u32 {
            let n = p.pow(q).unwrap();
            for m in 1..=n {
                for l in m..=n {
                    for k in 0..=(l - m).min(8) {
                        assert_eq!(
                            r.ext_dim(k, m, l, Some(q)).unwrap().total,
                            r.ext_dim(k, m, l, Some(q + 1)).unwrap().total,
                            "p={pp} q={q} k={k} m={m} l={l}"
                        );
                    }
                }
            }
        }
    }
}

#[test]
fn cases_agree_with_recursion_at_q3() {
    let p = prime(3);
    let mut r = Recursion::new(p);
    for m in 1..=27 {
        for l in m..=27 {
            for k in 0..=(l - m).min(6) {
                let fast = r.ext_dim(k, m, l, Some(3)).unwrap().total;
                let cases = enumerate_cases(p, 3, k, m, l).unwrap().len();
                assert_eq!(fast, Count::from(cases), "k={k} m={m} l={l}");
                assert_eq!(cases as u64, count_basis(p, 3, k, m, l).unwrap());
            }
        }
    }
}

#[test]
fn dimension_dominates_b() {
    for pp in [2, 3] {
        let p = prime(pp);
        let mut r = Recursion::new(p);
        let q = 3;
        let n = p.pow(q).unwrap();
        for m in 1..=n {
            for l in m..=n {
                let s = digits_of(p, q, m).unwrap().digits;
                let t = digits_of(p, q, l).unwrap().digits;
                let w = weight_deltas(&s, &t).unwrap();
                for k in 0..=(l - m).min(10) {
                    let dim = r.ext_dim(k, m, l, Some(q)).unwrap().total;
                    assert!(dim >= r.b(k, w.as_slice()), "p={pp} k={k} m={m} l={l}");
                }
            }
        }
    }
}

#[test]
fn identity_and_small_block_values() {
    for pp in [2, 3, 5] {
        let p = prime(pp);
        let mut r = Recursion::new(p);
        for m in 1..=pp * pp {
            assert!(r.ext_dim(0, m, m, None).unwrap().total.is_one());
        }
    }
    let mut r = Recursion::new(prime(3));
    let ones = [(0, 1, 2), (1, 1, 2), (1, 1, 3), (2, 1, 3)];
    for (m, l) in [(1, 2), (1, 3)] {
        for k in 0..=5 {
            let dim = r.ext_dim(k, m, l, Some(1)).unwrap().total;
            let expect = u32::from(ones.contains(&(k, m, l)));
            assert_eq!(dim, Count::from(expect), "k={k} m={m} l={l}");
        }
    }
}

#[test]
fn upper_bound_on_q3_grid() {
    let p = prime(3);
    let mut r = Recursion::new(p);
    for k in 0..=10 {
        let mut best = Count::zero();
        for m in 1..=27 {
            for l in m..=27 {
                best = best.max(r.ext_dim(k, m, l, Some(3)).unwrap().total);
            }
        }
        assert!(
            evaluate(FormulaId::XUpper, p, k).unwrap().is_above(&best),
            "k={k}"
        );
    }
}

#[test]
fn witness_indices_carry_nonzero_ext() {
    let p = prime(3);
    let mut r = Recursion::new(p);
    let mut failures = Vec::new();
    for k in 10..=20 {
        for m in 1..=5 {
            let l = lower_bound_witness(p, k, m).unwrap();
            if r.ext_dim(k, m, l, None).unwrap().total.is_zero() {
                failures.push((k, m, l));
            }
        }
    }
    assert!(
        failures.is_empty(),
        "zero dimension at (k, m, ℓ) = {failures:?}"
    );
}

proptest! {
    #[test]
    fn zero_outside_degree_window(pp in prop::sample::select(vec![2i64, 3, 5]),
                                  m in 1i64..=125, l in 1i64..=125, shift in 1i64..=50, below in any::<bool>()) {
        let mut r = Recursion::new(prime(pp));
        let k = if below { -shift } else { (l - m).max(-1) + shift };
        prop_assert!(r.ext_dim(k, m, l, None).unwrap().is_zero());
    }

    #[test]
    fn ext_dim_is_deterministic(m in 1i64..=81, l in 1i64..=81, k in 0i64..=10) {
        let p = prime(3);
        let a = Recursion::new(p).ext_dim(k, m, l, None).unwrap();
        let mut shared = Recursion::with_capacity(p, 16);
        shared.ext_dim(k + 1, 1, 81, None).unwrap();
        prop_assert_eq!(a, shared.ext_dim(k, m, l, None).unwrap());
    }
}
