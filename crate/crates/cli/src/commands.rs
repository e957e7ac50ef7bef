use std::io::Write;

use num_bigint::BigUint;
use rayon::prelude::*;
use rayon::ThreadPool;
use weyl_ext::partitions::bounds::{constants_c1_c2, evaluate, sandwich_s_t, FormulaId};
use weyl_ext::partitions::{default_m_max, q_p, sigma_p, PartitionTable};
use weyl_ext::polytopes::{count_basis, enumerate_basis};
use weyl_ext::weights::{block_position, BlockResult, WeightPair};
use weyl_ext::{duality_partner, minimal_q, Prime, Recursion};

use crate::{Command, Failure, PartitionKind, Query, TableArgs, VerifyArgs};

type Out<'a> = &'a mut dyn Write;

fn emit(out: Out, line: impl AsRef<str>) -> Result<(), Failure> {
    writeln!(out, "{}", line.as_ref()).map_err(|e| Failure::Check(format!("write failed: {e}")))
}

fn prime(p: i64) -> Result<Prime, Failure> {
    Ok(Prime::new(p)?)
}

fn pool(workers: usize) -> Result<ThreadPool, Failure> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .map_err(|e| Failure::Check(format!("cannot start worker pool: {e}")))
}

pub fn run(command: Command, out: Out) -> Result<(), Failure> {
    match command {
        Command::Dim(q) => dim(q, out),
        Command::Oracle(q) => oracle(q, out),
        Command::Table(t) => table(t, out),
        Command::Verify(v) => verify(v, out),
        Command::Series { p, d, max } => {
            let mut t = PartitionTable::new(prime(p)?);
            for (m, count) in t.series(d, max)? {
                emit(out, format!("{m},{count}"))?;
            }
            Ok(())
        }
        Command::Partition(kind) => partition(kind, out),
        Command::Bounds { p, k, d } => bounds(prime(p)?, k, d, out),
        Command::Weights { p, lambda, mu } => {
            match block_position(prime(p)?, WeightPair { lambda, mu })? {
                BlockResult::Position(pos) => emit(out, format!("m = {}, e = {}", pos.m, pos.e)),
                BlockResult::NotSameBlock => emit(out, "dimension 0 for all k"),
            }
        }
    }
}

fn resolve_q(p: Prime, query: &Query) -> u32 {
    query
        .q
        .unwrap_or_else(|| minimal_q(p, query.m.max(1), query.e.max(1)))
}

fn dim(query: Query, out: Out) -> Result<(), Failure> {
    let p = prime(query.p)?;
    let q = resolve_q(p, &query);
    let mut r = Recursion::new(p);
    let b = r.ext_dim(query.k, query.m, query.e, Some(q))?;
    emit(out, format!("dimension = {}", b.total))?;
    if query.verbose {
        emit(out, format!("q = {q}"))?;
        for (name, v) in [("D1", &b.d1), ("D2", &b.d2), ("D3", &b.d3), ("D4", &b.d4)] {
            emit(out, format!("{name} = {v}"))?;
        }
    }
    Ok(())
}

fn oracle(query: Query, out: Out) -> Result<(), Failure> {
    let p = prime(query.p)?;
    let q = resolve_q(p, &query);
    if query.m < 1 || query.e < 1 {
        return Err(Failure::Usage("indices m and e must be >= 1".into()));
    }
    let tuples = enumerate_basis(p, q, query.k, query.m, query.e)?;
    emit(out, format!("dimension = {}", tuples.len()))?;
    if query.verbose {
        for t in &tuples {
            emit(out, t.to_string())?;
        }
    }
    Ok(())
}

fn table(args: TableArgs, out: Out) -> Result<(), Failure> {
    let p = prime(args.p)?;
    if args.q == 0 {
        return Err(Failure::Usage("q must be >= 1".into()));
    }
    if args.k < 0 {
        return Err(Failure::Usage(format!("k = {} must be >= 0", args.k)));
    }
    let n = p.pow(args.q)?;
    let (q, k) = (args.q, args.k);
    let workers = pool(args.workers)?;
    let fixed = |cells: Vec<(i64, i64)>| -> Result<Vec<BigUint>, Failure> {
        let dims: Vec<_> = workers.install(|| {
            cells
                .par_iter()
                .map_init(
                    || Recursion::new(p),
                    |r, &(m, e)| r.ext_dim(k, m, e, Some(q)).map(|b| b.total),
                )
                .collect()
        });
        Ok(dims.into_iter().collect::<Result<_, _>>()?)
    };
    match (args.m, args.e) {
        (Some(m), _) => {
            let dims = fixed((1..=n).map(|e| (m, e)).collect())?;
            emit(out, "e,dim")?;
            for (e, d) in (1..=n).zip(dims) {
                emit(out, format!("{e},{d}"))?;
            }
        }
        (None, Some(e)) => {
            let dims = fixed((1..=n).map(|m| (m, e)).collect())?;
            emit(out, "m,dim")?;
            for (m, d) in (1..=n).zip(dims) {
                emit(out, format!("{m},{d}"))?;
            }
        }
        (None, None) => {
            let rows: Vec<Result<String, weyl_ext::Error>> = workers.install(|| {
                (1..=n)
                    .into_par_iter()
                    .map_init(
                        || Recursion::new(p),
                        |r, e| {
                            let mut line = e.to_string();
                            for m in 1..=n {
                                line.push(',');
                                line.push_str(&r.ext_dim(k, m, e, Some(q))?.total.to_string());
                            }
                            Ok(line)
                        },
                    )
                    .collect()
            });
            let header: Vec<String> = (1..=n).map(|m| m.to_string()).collect();
            emit(out, format!("e\\m,{}", header.join(",")))?;
            for row in rows {
                emit(out, row?)?;
            }
        }
    }
    Ok(())
}

struct Cell {
    k: i64,
    m: i64,
    e: i64,
    recursion: BigUint,
    oracle: u64,
    dual: BigUint,
    next_q: BigUint,
}

fn verify(args: VerifyArgs, out: Out) -> Result<(), Failure> {
    let p = prime(args.p)?;
    let q = args.q;
    if q == 0 {
        return Err(Failure::Usage("q must be >= 1".into()));
    }
    let n = p.pow(q)?;
    p.pow(q + 1)?;
    let ks: Vec<i64> = match args.k {
        Some(k) => vec![k],
        None => (0..n).collect(),
    };
    let cells: Vec<(i64, i64, i64)> = ks
        .iter()
        .flat_map(|&k| (1..=n).flat_map(move |e| (1..=n).map(move |m| (k, m, e))))
        .collect();
    let workers = pool(args.workers)?;
    let results: Vec<Result<Cell, weyl_ext::Error>> = workers.install(|| {
        cells
            .par_iter()
            .map_init(
                || Recursion::new(p),
                |r, &(k, m, e)| {
                    let (dm, de) = duality_partner(p, q, m, e)?;
                    Ok(Cell {
                        k,
                        m,
                        e,
                        recursion: r.ext_dim(k, m, e, Some(q))?.total,
                        oracle: count_basis(p, q, k, m, e)?,
                        dual: r.ext_dim(k, dm, de, Some(q))?.total,
                        next_q: r.ext_dim(k, m, e, Some(q + 1))?.total,
                    })
                },
            )
            .collect()
    });
    let results: Vec<Cell> = results
        .into_iter()
        .collect::<Result<_, _>>()
        .map_err(|e| Failure::Check(format!("internal error: {e}")))?;

    type Probe = fn(&Cell) -> Option<String>;
    let probes: [(&str, Probe); 3] = [
        ("oracle", |c| {
            (c.recursion != BigUint::from(c.oracle))
                .then(|| format!("recursion {}, enumeration {}", c.recursion, c.oracle))
        }),
        ("duality", |c| {
            (c.recursion != c.dual)
                .then(|| format!("dimension {}, dual dimension {}", c.recursion, c.dual))
        }),
        ("q-stability", |c| {
            (c.recursion != c.next_q)
                .then(|| format!("dimension {}, with q+1 {}", c.recursion, c.next_q))
        }),
    ];
    let mut failed = false;
    for (name, probe) in probes {
        let bad: Vec<(&Cell, String)> = results
            .iter()
            .filter_map(|c| probe(c).map(|why| (c, why)))
            .collect();
        match bad.first() {
            None => emit(out, format!("{name}: pass ({} cells)", results.len()))?,
            Some((c, why)) => {
                failed = true;
                emit(
                    out,
                    format!(
                        "{name}: FAIL ({} of {} cells); first at p={p}, q={q}, k={}, m={}, e={}: {why}",
                        bad.len(),
                        results.len(),
                        c.k,
                        c.m,
                        c.e
                    ),
                )?;
            }
        }
    }
    if failed {
        Err(Failure::Check("verify: FAILED".into()))
    } else {
        emit(out, "verify: ok")
    }
}

fn partition(kind: PartitionKind, out: Out) -> Result<(), Failure> {
    match kind {
        PartitionKind::Q { p, big_d, d } => emit(
            out,
            format!("q_{p}({big_d}, {d}) = {}", q_p(prime(p)?, big_d, d)),
        ),
        PartitionKind::R { p, big_m, d, h } => {
            let mut t = PartitionTable::new(prime(p)?);
            match h {
                None => emit(out, format!("r_{p}({big_m}, {d}) = {}", t.r(big_m, d))),
                Some(h) => emit(
                    out,
                    format!("r_{p}^{h}({big_m}, {d}) = {}", t.r_h(big_m, d, h)),
                ),
            }
        }
        PartitionKind::Z { p, d, max } => {
            let pr = prime(p)?;
            let limit = match max {
                Some(m) => m,
                None => default_m_max(pr, d)?,
            };
            let z = PartitionTable::new(pr).z_scan(d, limit)?;
            emit(out, format!("Z_{p}({d}) >= {z} (scan 0 <= M <= {limit})"))
        }
        PartitionKind::Sigma { p, big_d } => emit(
            out,
            format!("sigma_{p}({big_d}) = {}", sigma_p(prime(p)?, big_d)?),
        ),
    }
}

fn bounds(p: Prime, k: Option<i64>, d: Option<i64>, out: Out) -> Result<(), Failure> {
    let (n, use_k) = match (k, d) {
        (Some(k), _) => (k, true),
        (None, Some(d)) => (d, false),
        (None, None) => return Err(Failure::Usage("one of -k or -d is required".into())),
    };
    for id in FormulaId::EVALUATORS
        .into_iter()
        .filter(|id| id.takes_k() == use_k)
    {
        match evaluate(id, p, n) {
            Ok(v) => emit(out, v.to_string())?,
            Err(e) => emit(out, format!("{id} = n/a ({e})"))?,
        }
    }
    if !use_k {
        if n >= 0 {
            let (s, t) = sandwich_s_t(p, n as f64)?;
            emit(out, s.to_string())?;
            emit(out, t.to_string())?;
        }
        let (c1, c2) = constants_c1_c2(p);
        emit(out, c1.to_string())?;
        emit(out, c2.to_string())?;
    }
    Ok(())
}
