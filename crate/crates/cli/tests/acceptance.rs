//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

use std::process::Command;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use weyl_ext::partitions::bounds::{
    constants_c1_c2, evaluate, f_q_eval, lower_bound_witness, sandwich_s_t, FormulaId,
};
use weyl_ext::partitions::{b_explicit, default_m_max, q_p, PartitionTable};
use weyl_ext::polytopes::{count_basis, enumerate_cases};
use weyl_ext::weights::{block_position, BlockPosition, BlockResult, WeightPair};
use weyl_ext::{duality_partner, Count, Prime, Recursion};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn prime(p: i64) -> Prime {
    Prime::new(p).unwrap()
}

fn zero() -> Count {
    Count::from(0u32)
}

fn check(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, limit: Duration, what: &str) -> Result<(), String> {
    let spent = start.elapsed();
    check(spent <= limit, || {
        format!("{what} took {spent:.2?}, limit {limit:?}")
    })
}

fn oracle_equivalence() -> Outcome {
    let start = Instant::now();
    let mut cells = 0;
    for pp in [2, 3, 5] {
        let p = prime(pp);
        let mut r = Recursion::new(p);
        for q in 1..=2u32 {
            let n = p.pow(q).unwrap();
            for m in 1..=n {
                for e in m..=n {
                    for k in 0..=(e - m) {
                        let fast = r.ext_dim(k, m, e, Some(q)).unwrap().total;
                        let dfs = count_basis(p, q, k, m, e).unwrap();
                        let cases = enumerate_cases(p, q, k, m, e).unwrap().len() as u64;
                        check(fast == Count::from(dfs) && dfs == cases, || {
                            format!("p={pp} q={q} k={k} m={m} e={e}: recursion {fast}, dfs {dfs}, cases {cases}")
                        })?;
                        cells += 1;
                    }
                }
            }
        }
    }
    within(start, Duration::from_secs(60), "oracle sweep")?;
    Ok(format!("{cells} cells in {:.2?}", start.elapsed()))
}

fn duality() -> Outcome {
    let start = Instant::now();
    let mut cells = 0;
    for pp in [2, 3] {
        let p = prime(pp);
        let mut r = Recursion::new(p);
        let n = p.pow(2).unwrap();
        for m in 1..=n {
            for e in 1..=n {
                let (dm, de) = duality_partner(p, 2, m, e).unwrap();
                for k in 0..n {
                    let a = r.ext_dim(k, m, e, Some(2)).unwrap().total;
                    let b = r.ext_dim(k, dm, de, Some(2)).unwrap().total;
                    check(a == b, || {
                        format!("p={pp} k={k} m={m} e={e}: {a} vs dual {b}")
                    })?;
                    cells += 1;
                }
            }
        }
    }
    within(start, Duration::from_secs(30), "duality sweep")?;
    Ok(format!("{cells} cells in {:.2?}", start.elapsed()))
}

fn q_independence() -> Outcome {
    let p = prime(3);
    let mut r = Recursion::new(p);
    let mut cells = 0;
    for m in 1..=9 {
        for e in 1..=9 {
            for k in 0..9 {
                let a = r.ext_dim(k, m, e, Some(2)).unwrap().total;
                let b = r.ext_dim(k, m, e, Some(3)).unwrap().total;
                check(a == b, || {
                    format!("k={k} m={m} e={e}: q=2 gives {a}, q=3 gives {b}")
                })?;
                cells += 1;
            }
        }
    }
    Ok(format!("{cells} cells"))
}

fn a_via_b() -> Outcome {
    let mut keys = 0;
    for pp in [2i64, 3] {
        let mut r = Recursion::new(prime(pp));
        let span: Vec<i64> = ((1 - pp)..pp).collect();
        let mut level: Vec<Vec<i64>> = vec![vec![]];
        for _ in 1..=3 {
            level = level
                .iter()
                .flat_map(|w| span.iter().map(move |&x| [w.as_slice(), &[x]].concat()))
                .collect();
            for w in &level {
                for k in -2..=12 {
                    let a = r.a(k, w);
                    let b = r.a_via_b(k, w);
                    check(a == b, || format!("p={pp} k={k} w={w:?}: {a} vs {b}"))?;
                    keys += 1;
                }
            }
        }
    }
    Ok(format!("{keys} keys"))
}

fn b_explicit_matches() -> Outcome {
    let mut rng = rand::rngs::StdRng::seed_from_u64(20_240_101);
    let primes = [2i64, 3, 5];
    let mut tables: Vec<Recursion> = primes.iter().map(|&pp| Recursion::new(prime(pp))).collect();
    let mut nonzero = 0;
    let mut tried = 0;
    while tried < 1000 {
        let idx = rng.gen_range(0..primes.len());
        let pp = primes[idx];
        let h = rng.gen_range(2..=5);
        let v: Vec<i64> = (0..h).map(|_| rng.gen_range(1 - pp..pp)).collect();
        let big_v = v.iter().fold(0i64, |acc, &x| acc * pp + x);
        if big_v < 0 {
            continue;
        }
        let l = rng.gen_range(0..=big_v + 2);
        let explicit = b_explicit(prime(pp), l, &v).map_err(|e| e.to_string())?;
        let rec = tables[idx].b(l, &v);
        check(explicit == rec, || {
            format!("p={pp} l={l} v={v:?}: explicit {explicit}, recursion {rec}")
        })?;
        if rec != zero() {
            nonzero += 1;
        }
        tried += 1;
    }
    Ok(format!("{tried} keys, {nonzero} nonzero"))
}

/// Weakly decreasing `d >= m_0 >= m_1 >= …` with `Σ m_i p^i = M`.
fn r_direct(p: i64, m: i64, d: i64) -> u64 {
    fn go(p: i64, rem: i64, cap: i64, scale: i64) -> u64 {
        if rem == 0 {
            return 1;
        }
        if scale > rem || cap == 0 {
            return 0;
        }
        (1..=cap.min(rem / scale))
            .map(|mi| go(p, rem - mi * scale, mi, scale * p))
            .sum()
    }
    go(p, m, d, 1)
}

fn partition_identities() -> Outcome {
    for pp in [2, 3, 5] {
        let p = prime(pp);
        let mut t = PartitionTable::new(p);
        for big_d in 0..=200 {
            for d in 0..=200 {
                let a = q_p(p, big_d, d);
                let b = t.q_via_r(big_d, d).unwrap();
                check(a == b, || {
                    format!("p={pp} D={big_d} d={d}: q {a}, via r {b}")
                })?;
            }
        }
        for m in 0..=500 {
            for d in 0..=20 {
                let a = t.r(m, d);
                let b = r_direct(pp, m, d);
                check(a == Count::from(b), || {
                    format!("p={pp} M={m} d={d}: recursion {a}, direct {b}")
                })?;
            }
        }
        for d in 0..=300 {
            let lower: Count = (0..=d / (pp + 1)).map(|x| t.r(x, x)).sum();
            let upper: Count = (0..=d / pp).map(|x| t.r(x, x)).sum();
            let mid = t.r(d, d);
            check(lower <= mid && mid <= upper, || {
                format!("p={pp} d={d}: {lower} <= {mid} <= {upper} fails")
            })?;
        }
    }
    Ok("q = q_via_r, r = direct, sandwich".into())
}

fn analytic_sandwich() -> Outcome {
    let slack = 1.0 + weyl_ext::partitions::bounds::RELATIVE_SLACK;
    for pp in [2, 3, 5] {
        let p = prime(pp);
        let mut t = PartitionTable::new(p);
        let (c1, c2) = constants_c1_c2(p);
        for d in 0..=300 {
            let exact = t.r(d, d);
            let x = d as f64;
            let (s, tt) = sandwich_s_t(p, x).map_err(|e| e.to_string())?;
            check(s.is_below(&exact) && tt.is_above(&exact), || {
                format!("p={pp} d={d}: S={} r={exact} T={}", s.value, tt.value)
            })?;
            let lo = c1.value * f_q_eval(pp + 1, x).unwrap().value;
            let hi = c2.value * f_q_eval(pp, x).unwrap().value;
            check(
                lo <= s.value * slack && s.value <= tt.value && tt.value <= hi * slack,
                || {
                    format!(
                        "p={pp} d={d}: chain {lo} <= {} <= {} <= {hi} fails",
                        s.value, tt.value
                    )
                },
            )?;
        }
    }
    Ok("p in {2,3,5}, d <= 300".into())
}

fn bound_conformance() -> Outcome {
    for pp in [2, 3, 5] {
        let p = prime(pp);
        let mut t = PartitionTable::new(p);
        for d in 0..=12 {
            let z = t.z_scan(d, default_m_max(p, d).unwrap()).unwrap();
            let bound = evaluate(FormulaId::ZpUpper, p, d).unwrap();
            check(bound.is_above(&z), || {
                format!("p={pp} d={d}: z_scan {z} > {}", bound.value)
            })?;
        }
    }
    let p = prime(3);
    let mut r = Recursion::new(p);
    for k in 0..=10 {
        let mut best = zero();
        for m in 1..=27 {
            for e in 1..=27 {
                best = best.max(r.ext_dim(k, m, e, Some(3)).unwrap().total);
            }
        }
        let bound = evaluate(FormulaId::XUpper, p, k).unwrap();
        check(bound.is_above(&best), || {
            format!("k={k}: max dimension {best} > {}", bound.value)
        })?;
    }
    for k in 10..=20 {
        for m in 1..=5 {
            let e = lower_bound_witness(p, k, m).unwrap();
            let dim = r.ext_dim(k, m, e, None).unwrap().total;
            check(dim != zero(), || {
                format!("witness k={k} m={m} e={e} has dimension 0")
            })?;
        }
    }
    Ok("z_scan, q=3 grid maxima, witnesses".into())
}

fn zero_region() -> Outcome {
    let mut rng = rand::rngs::StdRng::seed_from_u64(12);
    let primes = [2i64, 3, 5, 7];
    for _ in 0..200 {
        let pp = primes[rng.gen_range(0..primes.len())];
        let m = rng.gen_range(1..=500);
        let e = rng.gen_range(1..=500);
        let k = if rng.gen_bool(0.5) {
            -rng.gen_range(1..=100)
        } else {
            (e - m).max(-1) + rng.gen_range(1..=100)
        };
        let dim = Recursion::new(prime(pp)).ext_dim(k, m, e, None).unwrap();
        check(dim.total == zero(), || {
            format!("p={pp} k={k} m={m} e={e}: {}", dim.total)
        })?;
    }
    Ok("200 random cells".into())
}

fn known_values() -> Outcome {
    for pp in [2, 3, 5] {
        let mut r = Recursion::new(prime(pp));
        for m in 1..=pp * pp {
            let d = r.ext_dim(0, m, m, None).unwrap().total;
            check(d == Count::from(1u32), || {
                format!("p={pp} Ext^0(Δ_{m}, Δ_{m}) = {d}")
            })?;
        }
    }
    let mut r = Recursion::new(prime(3));
    let ones = [(0, 2), (1, 2), (1, 3), (2, 3)];
    for e in [2, 3] {
        for k in 0..=10 {
            let d = r.ext_dim(k, 1, e, Some(1)).unwrap().total;
            let want = Count::from(u32::from(ones.contains(&(k, e))));
            check(d == want, || {
                format!("p=3 Ext^{k}(Δ_1, Δ_{e}) = {d}, expected {want}")
            })?;
        }
    }
    Ok("identities and p=3 single-digit values".into())
}

fn lambdamu() -> Outcome {
    let at =
        |p: i64, lambda: i64, mu: i64| block_position(prime(p), WeightPair { lambda, mu }).unwrap();
    let pos = |m, e| BlockResult::Position(BlockPosition { m, e });
    check(at(3, 0, 0) == pos(1, 1), || "(3,0,0)".into())?;
    check(at(3, 2, 0) == BlockResult::NotSameBlock, || {
        "(3,2,0)".into()
    })?;
    check(at(3, 4, 0) == pos(1, 2), || "(3,4,0)".into())?;
    for p in [2, 3] {
        for l in 0..=100 {
            for u in 0..=100 {
                let lifted = at(p, p * l + p - 1, p * u + p - 1);
                check(lifted == at(p, l, u), || {
                    format!("p={p} λ={l} μ={u}: Steinberg lift differs")
                })?;
            }
        }
    }
    Ok("examples and Steinberg recursion".into())
}

fn determinism() -> Outcome {
    let bin = env!("CARGO_BIN_EXE_weyl-ext");
    let run = |extra: &[&str]| -> Result<Vec<u8>, String> {
        let out = Command::new(bin)
            .args(["table", "-p", "3", "-q", "2", "-k", "1"])
            .args(extra)
            .output()
            .map_err(|e| e.to_string())?;
        check(out.status.success(), || {
            format!("table exited with {}", out.status)
        })?;
        Ok(out.stdout)
    };
    let reference = run(&[])?;
    for i in 1..5 {
        check(run(&[])? == reference, || format!("run {i} differs"))?;
    }
    check(run(&["--workers", "1"])? == reference, || {
        "1 worker differs".into()
    })?;
    check(run(&["--workers", "8"])? == reference, || {
        "8 workers differ".into()
    })?;
    let rows = reference.iter().filter(|&&b| b == b'\n').count();
    check(rows == 10, || format!("expected 10 lines, got {rows}"))?;
    Ok("5 runs, 1 and 8 workers identical".into())
}

fn main() {
    let criteria: [Criterion; 12] = [
        ("oracle equivalence", oracle_equivalence),
        ("duality", duality),
        ("q-independence", q_independence),
        ("A recursion = sum of B", a_via_b),
        ("explicit B = recursive B", b_explicit_matches),
        ("partition identities", partition_identities),
        ("analytic sandwich", analytic_sandwich),
        ("bound conformance", bound_conformance),
        ("zero region", zero_region),
        ("known values", known_values),
        ("weights to block position", lambdamu),
        ("determinism", determinism),
    ];
    let mut failures = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(run).unwrap_or_else(|_| Err("panicked".into()));
        let spent = start.elapsed();
        match outcome {
            Ok(note) => println!("PASS {:>2} {name}: {note} [{spent:.2?}]", i + 1),
            Err(why) => {
                failures += 1;
                println!("FAIL {:>2} {name}: {why} [{spent:.2?}]", i + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failures,
        criteria.len()
    );
    if failures > 0 {
        std::process::exit(1);
    }
}
