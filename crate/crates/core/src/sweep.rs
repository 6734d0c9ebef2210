//! Exhaustive verification sweeps over `S_n` and over all monotone triangles.
//!
//! Every sweep is an indexed check `k -> pass/fail` folded into a [`Tally`].
//! With the `parallel` feature the indices are spread over a rayon pool;
//! without it, or under [`Execution::Sequential`], they run in order on the
//! calling thread. The fold keeps counts and the failure with the smallest
//! index, so reports do not depend on the worker count.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::bigrassmannian::{
    below_set, beta_positional, beta_report, beta_transposition_delta, inversion_summands,
};
use crate::error::{Error, Result};
use crate::oracle::{bruhat_leq_bfs, oracle_beta};
use crate::perm::{factorial, Permutation};
use crate::triangle::{
    enumerate_triangles, triangle_of_permutation, JoinIrreducibleIndex, MonotoneTriangle,
};

/// Largest degree `verify` accepts.
pub const MAX_VERIFY_DEGREE: usize = 7;
/// Degree caps for the individual suites.
pub const MAX_ORACLE_SWEEP_DEGREE: usize = 6;
pub const MAX_PAIRWISE_DEGREE: usize = 5;
pub const MAX_LATTICE_EXHAUSTIVE_ORDER: usize = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Execution {
    Sequential,
    /// `jobs == 0` uses rayon's default pool.
    Parallel {
        jobs: usize,
    },
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Tally {
    pub checked: u64,
    pub flagged: u64,
    pub first_failure: Option<(u64, String)>,
}

impl Tally {
    fn single(index: u64, outcome: std::result::Result<bool, String>) -> Tally {
        match outcome {
            Ok(flag) => Tally {
                checked: 1,
                flagged: u64::from(flag),
                first_failure: None,
            },
            Err(msg) => Tally {
                checked: 1,
                flagged: 0,
                first_failure: Some((index, msg)),
            },
        }
    }

    fn merge(self, other: Tally) -> Tally {
        let first_failure = match (self.first_failure, other.first_failure) {
            (Some(a), Some(b)) => Some(if a.0 <= b.0 { a } else { b }),
            (a, b) => a.or(b),
        };
        Tally {
            checked: self.checked + other.checked,
            flagged: self.flagged + other.flagged,
            first_failure,
        }
    }

    pub fn passed(&self) -> bool {
        self.first_failure.is_none()
    }
}

/// Runs `check` on every index in `0..count`. `Ok(flag)` passes and counts
/// toward `flagged` when `flag` is set; `Err` records a failure.
pub fn tally<F>(exec: Execution, count: u64, check: F) -> Tally
where
    F: Fn(u64) -> std::result::Result<bool, String> + Sync + Send,
{
    match exec {
        Execution::Sequential => sequential_tally(count, &check),
        Execution::Parallel { jobs } => parallel_tally(jobs, count, &check),
    }
}

fn sequential_tally<F>(count: u64, check: &F) -> Tally
where
    F: Fn(u64) -> std::result::Result<bool, String>,
{
    (0..count).fold(Tally::default(), |acc, k| {
        acc.merge(Tally::single(k, check(k)))
    })
}

#[cfg(feature = "parallel")]
fn parallel_tally<F>(jobs: usize, count: u64, check: &F) -> Tally
where
    F: Fn(u64) -> std::result::Result<bool, String> + Sync + Send,
{
    use rayon::prelude::*;

    let run = || {
        (0..count)
            .into_par_iter()
            .map(|k| Tally::single(k, check(k)))
            .reduce(Tally::default, Tally::merge)
    };
    if jobs == 0 {
        return run();
    }
    match rayon::ThreadPoolBuilder::new().num_threads(jobs).build() {
        Ok(pool) => pool.install(run),
        Err(_) => run(),
    }
}

#[cfg(not(feature = "parallel"))]
fn parallel_tally<F>(_jobs: usize, count: u64, check: &F) -> Tally
where
    F: Fn(u64) -> std::result::Result<bool, String> + Sync + Send,
{
    sequential_tally(count, check)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SuiteStatus {
    Passed,
    Failed,
    Skipped,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub name: String,
    pub degree: usize,
    pub status: SuiteStatus,
    pub checked: u64,
    pub flagged: u64,
    pub note: String,
    pub failure: Option<String>,
}

impl SuiteReport {
    fn from_tally(name: &str, degree: usize, tally: Tally, note: String) -> Self {
        let status = if tally.passed() {
            SuiteStatus::Passed
        } else {
            SuiteStatus::Failed
        };
        SuiteReport {
            name: name.to_string(),
            degree,
            status,
            checked: tally.checked,
            flagged: tally.flagged,
            note,
            failure: tally.first_failure.map(|(_, msg)| msg),
        }
    }

    fn skipped(name: &str, degree: usize, note: String) -> Self {
        SuiteReport {
            name: name.to_string(),
            degree,
            status: SuiteStatus::Skipped,
            checked: 0,
            flagged: 0,
            note,
            failure: None,
        }
    }

    fn fail(mut self, msg: String) -> Self {
        self.status = SuiteStatus::Failed;
        self.failure.get_or_insert(msg);
        self
    }

    pub fn passed(&self) -> bool {
        self.status != SuiteStatus::Failed
    }
}

fn nth(n: usize, rank: u64) -> Permutation {
    Permutation::from_lex_rank(n, rank).expect("rank below n!")
}

/// All four closed forms agree, match the size of `B(x)`, and (for
/// `n <= 6`) equal the brute-force count and set. `flagged` counts the
/// oracle-backed cases.
pub fn formula_agreement(n: usize, exec: Execution) -> SuiteReport {
    let with_oracle = n <= MAX_ORACLE_SWEEP_DEGREE;
    let bound = JoinIrreducibleIndex::count(n);
    let tally = tally(exec, factorial(n), |k| {
        let x = nth(n, k);
        let r = beta_report(&x);
        if !r.agree {
            return Err(format!("{x}: methods disagree {r:?}"));
        }
        let beta = r.beta_positional;
        if beta > bound {
            return Err(format!("{x}: beta {beta} exceeds {bound}"));
        }
        let below = below_set(&x);
        if below.len() as u64 != beta {
            return Err(format!("{x}: |B(x)| = {} but beta = {beta}", below.len()));
        }
        if !with_oracle {
            return Ok(false);
        }
        let (count, members) = oracle_beta(&x).map_err(|e| e.to_string())?;
        if count != beta {
            return Err(format!("{x}: oracle counts {count}, formulas give {beta}"));
        }
        let mut listed: Vec<Permutation> = below.permutations().cloned().collect();
        listed.sort();
        if listed != members {
            return Err(format!("{x}: listed B(x) differs from the oracle's set"));
        }
        Ok(true)
    });
    let note = if with_oracle {
        "positional = squares = inversions = sigma = |B(x)| = oracle".to_string()
    } else {
        "positional = squares = inversions = sigma = |B(x)|; oracle skipped above n = 6".to_string()
    };
    SuiteReport::from_tally("formula-agreement", n, tally, note)
}

/// `beta(x) - beta(x t_ij) = (j - i)(x(i) - x(j))` for every pair `i < j`.
pub fn transposition_delta(n: usize, exec: Execution) -> SuiteReport {
    let tally = tally(exec, factorial(n), |k| {
        let x = nth(n, k);
        let beta = beta_positional(&x) as i64;
        for i in 1..=n {
            for j in i + 1..=n {
                let w = x.apply_transposition(i, j).map_err(|e| e.to_string())?;
                let lhs = beta - beta_positional(&w) as i64;
                let rhs = beta_transposition_delta(&x, i, j).map_err(|e| e.to_string())?;
                if lhs != rhs {
                    return Err(format!("{x}, ({i},{j}): difference {lhs} but delta {rhs}"));
                }
            }
        }
        Ok(false)
    });
    let pairs = n * n.saturating_sub(1) / 2;
    SuiteReport::from_tally(
        "transposition-delta",
        n,
        tally,
        format!("{pairs} pairs per permutation"),
    )
}

/// `beta(x) >= length(x)`, each inversion contributes at least 1, and
/// equality holds exactly when every contribution is 1. `flagged` counts
/// the equality cases.
pub fn positivity(n: usize, exec: Execution) -> SuiteReport {
    let tally = tally(exec, factorial(n), |k| {
        let x = nth(n, k);
        let summands: Vec<u64> = inversion_summands(&x).map(|(_, d)| d).collect();
        if let Some(d) = summands.iter().find(|&&d| d < 1) {
            return Err(format!("{x}: inversion summand {d}"));
        }
        let beta: u64 = summands.iter().sum();
        let len = x.length();
        if beta < len {
            return Err(format!("{x}: beta {beta} below length {len}"));
        }
        let tight = summands.iter().all(|&d| d == 1);
        if (beta == len) != tight {
            return Err(format!("{x}: equality case mismatch"));
        }
        Ok(beta == len)
    });
    SuiteReport::from_tally(
        "positivity",
        n,
        tally,
        "beta >= length, summands >= 1".to_string(),
    )
}

/// The permutations `J_abc` are pairwise distinct, number `C(n+1,3)`, and
/// are exactly the bigrassmannian elements of `S_n`. `flagged` counts the
/// bigrassmannian permutations found by the sweep.
pub fn census(n: usize, exec: Execution) -> SuiteReport {
    let expected = JoinIrreducibleIndex::count(n);
    let generated: Vec<Permutation> = JoinIrreducibleIndex::all(n)
        .map(|idx| idx.permutation())
        .collect();
    let distinct: HashSet<&Permutation> = generated.iter().collect();
    let tally = tally(exec, factorial(n), |k| {
        let x = nth(n, k);
        let bigrassmannian = x.is_bigrassmannian();
        if bigrassmannian != distinct.contains(&x) {
            return Err(format!(
                "{x}: bigrassmannian = {bigrassmannian} but J_abc membership disagrees"
            ));
        }
        Ok(bigrassmannian)
    });
    let note = format!(
        "{} bigrassmannians, C({},3) = {expected}",
        tally.flagged,
        n + 1
    );
    let mut report = SuiteReport::from_tally("census", n, tally, note);
    if generated.len() as u64 != expected || distinct.len() != generated.len() {
        report = report.fail(format!(
            "{} triples gave {} distinct permutations, expected {expected}",
            generated.len(),
            distinct.len()
        ));
    }
    let found = report.flagged;
    if found != expected {
        report = report.fail(format!(
            "found {found} bigrassmannians, expected {expected}"
        ));
    }
    report
}

/// For every triple and every triangle `x` of order `n`:
/// `J_abc <= x` exactly when `x[a][b] >= c`. `J_abc` satisfies its own
/// condition, so this also pins it as the least such triangle.
pub fn adjunction(n: usize, exec: Execution) -> Result<SuiteReport> {
    cap(n, MAX_PAIRWISE_DEGREE)?;
    let triangles: Vec<MonotoneTriangle> = enumerate_triangles(n)?.collect();
    let joins: Vec<(JoinIrreducibleIndex, MonotoneTriangle)> = JoinIrreducibleIndex::all(n)
        .map(|idx| (idx, idx.triangle()))
        .collect();
    let per = joins.len() as u64;
    let tally = tally(exec, triangles.len() as u64 * per, |k| {
        let x = &triangles[(k / per) as usize];
        let (idx, j) = &joins[(k % per) as usize];
        let below = j.leq(x).map_err(|e| e.to_string())?;
        let threshold = x.get(idx.a, idx.b) >= idx.c;
        if below != threshold {
            return Err(format!(
                "J{idx} <= [{}] is {below}, entry test is {threshold}",
                x.to_string().replace('\n', " / ")
            ));
        }
        Ok(below)
    });
    let note = format!("{} triangles x {per} triples", triangles.len());
    Ok(SuiteReport::from_tally("adjunction", n, tally, note))
}

/// Triangle order and reduction-chain Bruhat order give the same verdict
/// on every ordered pair of `S_n`. `flagged` counts comparable pairs.
pub fn bruhat_equivalence(n: usize, exec: Execution) -> Result<SuiteReport> {
    cap(n, MAX_PAIRWISE_DEGREE)?;
    let perms: Vec<Permutation> = (0..factorial(n)).map(|k| nth(n, k)).collect();
    let triangles: Vec<MonotoneTriangle> = perms.iter().map(triangle_of_permutation).collect();
    let size = perms.len() as u64;
    let tally = tally(exec, size * size, |k| {
        let (a, b) = ((k / size) as usize, (k % size) as usize);
        let by_triangle = triangles[a].leq(&triangles[b]).map_err(|e| e.to_string())?;
        let by_chain = bruhat_leq_bfs(&perms[a], &perms[b]).map_err(|e| e.to_string())?;
        if by_triangle != by_chain {
            return Err(format!(
                "{} vs {}: triangle {by_triangle}, reduction chains {by_chain}",
                perms[a], perms[b]
            ));
        }
        Ok(by_chain)
    });
    Ok(SuiteReport::from_tally(
        "bruhat-equivalence",
        n,
        tally,
        format!("{size}^2 ordered pairs"),
    ))
}

/// Idempotence, commutativity, associativity, absorption and both
/// distributive laws on one triple.
pub fn check_lattice_laws(
    s: &MonotoneTriangle,
    t: &MonotoneTriangle,
    u: &MonotoneTriangle,
) -> std::result::Result<(), String> {
    let law = |name: &str, holds: bool| if holds { Ok(()) } else { Err(name.to_string()) };
    let wrap = |r: Result<MonotoneTriangle>| r.map_err(|e| e.to_string());
    let j = |x: &MonotoneTriangle, y: &MonotoneTriangle| wrap(x.join(y));
    let m = |x: &MonotoneTriangle, y: &MonotoneTriangle| wrap(x.meet(y));

    law("join idempotent", &j(s, s)? == s)?;
    law("meet idempotent", &m(s, s)? == s)?;
    law("join commutative", j(s, t)? == j(t, s)?)?;
    law("meet commutative", m(s, t)? == m(t, s)?)?;
    law("join associative", j(&j(s, t)?, u)? == j(s, &j(t, u)?)?)?;
    law("meet associative", m(&m(s, t)?, u)? == m(s, &m(t, u)?)?)?;
    law("absorption join/meet", &j(s, &m(s, t)?)? == s)?;
    law("absorption meet/join", &m(s, &j(s, t)?)? == s)?;
    law(
        "meet distributes",
        m(s, &j(t, u)?)? == j(&m(s, t)?, &m(s, u)?)?,
    )?;
    law(
        "join distributes",
        j(s, &m(t, u)?)? == m(&j(s, t)?, &j(s, u)?)?,
    )?;
    let (js, ms) = (j(s, t)?, m(s, t)?);
    law(
        "join is an upper bound",
        s.leq(&js).unwrap_or(false) && t.leq(&js).unwrap_or(false),
    )?;
    law(
        "meet is a lower bound",
        ms.leq(s).unwrap_or(false) && ms.leq(t).unwrap_or(false),
    )?;
    law("join stays monotone", js.is_valid() && ms.is_valid())?;
    law(
        "join is least",
        !(s.leq(u).unwrap_or(false) && t.leq(u).unwrap_or(false)) || js.leq(u).unwrap_or(false),
    )?;
    law(
        "meet is greatest",
        !(u.leq(s).unwrap_or(false) && u.leq(t).unwrap_or(false)) || u.leq(&ms).unwrap_or(false),
    )?;
    Ok(())
}

/// Lattice laws on every ordered triple of triangles of order `n`.
pub fn lattice_laws(n: usize, exec: Execution) -> Result<SuiteReport> {
    cap(n, MAX_LATTICE_EXHAUSTIVE_ORDER)?;
    let triangles: Vec<MonotoneTriangle> = enumerate_triangles(n)?.collect();
    let size = triangles.len() as u64;
    let tally = tally(exec, size * size * size, |k| {
        let (s, t, u) = (
            &triangles[(k / (size * size)) as usize],
            &triangles[(k / size % size) as usize],
            &triangles[(k % size) as usize],
        );
        check_lattice_laws(s, t, u)
            .map(|_| false)
            .map_err(|law| format!("{law} fails on triple #{k}"))
    });
    Ok(SuiteReport::from_tally(
        "lattice-laws",
        n,
        tally,
        format!("{size}^3 triples"),
    ))
}

fn cap(n: usize, max: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::EmptyPermutation);
    }
    if n > max {
        return Err(Error::DegreeTooLarge { n, max });
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub degree: usize,
    pub permutations: u64,
    pub bigrassmannians: u64,
    pub suites: Vec<SuiteReport>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.suites.iter().all(SuiteReport::passed)
    }
}

/// Every suite at degree `n`; suites whose cap is below `n` are skipped.
pub fn verify(n: usize, exec: Execution) -> Result<VerifyReport> {
    cap(n, MAX_VERIFY_DEGREE)?;
    let census = census(n, exec);
    let bigrassmannians = census.flagged;
    let mut suites = vec![
        formula_agreement(n, exec),
        transposition_delta(n, exec),
        positivity(n, exec),
        census,
    ];
    type Suite = fn(usize, Execution) -> Result<SuiteReport>;
    let capped: [(&str, usize, Suite); 3] = [
        ("adjunction", MAX_PAIRWISE_DEGREE, adjunction),
        (
            "bruhat-equivalence",
            MAX_PAIRWISE_DEGREE,
            bruhat_equivalence,
        ),
        ("lattice-laws", MAX_LATTICE_EXHAUSTIVE_ORDER, lattice_laws),
    ];
    for (name, max, suite) in capped {
        if n <= max {
            suites.push(suite(n, exec)?);
        } else {
            suites.push(SuiteReport::skipped(
                name,
                n,
                format!("exhaustive only up to n = {max}"),
            ));
        }
    }
    Ok(VerifyReport {
        degree: n,
        permutations: factorial(n),
        bigrassmannians,
        suites,
    })
}
