//! Desk-scale acceptance run. Prints one line per criterion and exits
//! non-zero when any criterion fails.

use std::path::{Path, PathBuf};
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use kpell_core::oeis::OeisMapping;
use kpell_core::quadrature::{float_exact_limit, legendre_rule, verify_numeric, DEFAULT_TOLERANCE};
use kpell_core::seq::Classical;
use kpell_core::sweep::{run_sweep, RunOptions, SweepMode, SweepSpec, Target};
use kpell_core::theorem::TheoremId;
use kpell_core::{
    binet_pair, check_lemma21, check_lemma22, classical, kpell, kpell_lucas, rhs_exact, Status, Theorem,
};
use num_bigint::BigInt;
use num_traits::{Signed, Zero};

struct Outcome {
    pass: bool,
    note: String,
}

fn ok(note: impl Into<String>) -> Outcome {
    Outcome { pass: true, note: note.into() }
}

fn fail(note: impl Into<String>) -> Outcome {
    Outcome { pass: false, note: note.into() }
}

fn within(elapsed: Duration, limit: Duration, inner: Outcome) -> Outcome {
    let note = format!("{} in {:.2?} (limit {:?})", inner.note, elapsed, limit);
    Outcome { pass: inner.pass && elapsed < limit, note }
}

fn data_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/data")
}

fn kpell_bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_kpell"))
}

fn theorems(k: u64, l: u64, n: u64, r: u64) -> [Theorem; 6] {
    [
        Theorem::p_ln(k, l, n).unwrap(),
        Theorem::q_ln(k, l, n).unwrap(),
        Theorem::p_lnr(k, l, n, r).unwrap(),
        Theorem::q_lnr(k, l, n, r).unwrap(),
        Theorem::p_even(k, n).unwrap(),
        Theorem::p_odd(k, n).unwrap(),
    ]
}

fn table_reproduction() -> Outcome {
    let golden = std::fs::read_to_string(data_dir().join("table_6_10.txt")).unwrap();
    let start = Instant::now();
    let out = kpell_bin().args(["table", "--k-max", "6", "--n-max", "10"]).output().unwrap();
    let elapsed = start.elapsed();
    let got = String::from_utf8(out.stdout).unwrap();
    let cells = |s: &str| -> Vec<String> {
        s.lines()
            .filter(|l| l.starts_with("P(") || l.starts_with("Q("))
            .flat_map(|l| l.split('\t').skip(1).map(String::from).collect::<Vec<_>>())
            .collect()
    };
    let want = cells(&golden);
    let have = cells(&got);
    let matching = want.iter().zip(&have).filter(|(a, b)| a == b).count();
    let inner = if out.status.success() && got == golden && want.len() == 132 {
        ok(format!("{matching}/132 values match"))
    } else {
        fail(format!("{matching}/{} values match, exit {:?}", want.len(), out.status.code()))
    };
    within(elapsed, Duration::from_secs(1), inner)
}

fn binet_equivalence() -> Outcome {
    let start = Instant::now();
    let mut equalities = 0u32;
    let mut bad = Vec::new();
    for k in 1..=20u64 {
        for n in 0..=200u64 {
            let pair = binet_pair(k, n).unwrap();
            for (got, want) in [(&pair.p, kpell(k, n).unwrap()), (&pair.q, kpell_lucas(k, n).unwrap())] {
                if *got == want {
                    equalities += 1;
                } else {
                    bad.push((k, n));
                }
            }
        }
    }
    let inner = if bad.is_empty() && equalities == 20 * 201 * 2 {
        ok(format!("{equalities} exact equalities"))
    } else {
        fail(format!("{} mismatches, first {:?}", bad.len(), bad.first()))
    };
    within(start.elapsed(), Duration::from_secs(10), inner)
}

fn lemma_sweep() -> Outcome {
    let mut checked = 0;
    let mut failed = Vec::new();
    for k in 1..=10u64 {
        for n in 0..=30u64 {
            let rep = check_lemma21(k, n).unwrap();
            checked += 1;
            if !rep.passed() {
                failed.push(format!("lemma21 k={k} n={n}"));
            }
            for m in 0..=30u64 {
                let rep = check_lemma22(k, m, n).unwrap();
                checked += 1;
                if !rep.passed() {
                    failed.push(format!("lemma22 k={k} m={m} n={n}"));
                }
            }
        }
    }
    if failed.is_empty() {
        ok(format!("{checked} checks, 0 failures"))
    } else {
        fail(format!("{} failures, first {}", failed.len(), failed[0]))
    }
}

fn desk_spec(targets: Vec<Target>) -> SweepSpec {
    SweepSpec { targets, k: 1..=10, l: 0..=8, m: 0..=8, n: 0..=8, r: 0..=8 }
}

fn exact_sweep() -> Outcome {
    let targets = TheoremId::ALL.into_iter().map(Target::Theorem).collect();
    let opts = RunOptions { mode: SweepMode::Exact, tol: DEFAULT_TOLERANCE, jobs: 1 };
    let start = Instant::now();
    let reports = run_sweep(&desk_spec(targets), opts).unwrap();
    let elapsed = start.elapsed();
    let failures: Vec<_> = reports.iter().filter(|r| r.status != Status::Pass).collect();
    // The report RHS is printed as a bare scalar exactly when the t-part is zero.
    let with_t = reports.iter().filter(|r| r.rhs.contains('t')).count();
    let edge = reports.iter().filter(|r| r.params.n == Some(0) || r.params.l == Some(0)).count();
    let inner = if failures.is_empty() && with_t == 0 {
        ok(format!("{} reports ({edge} with n=0 or l=0), 0 failures, 0 nonzero t-parts", reports.len()))
    } else {
        fail(format!("{} failures, {with_t} nonzero t-parts", failures.len()))
    };
    within(elapsed, Duration::from_secs(60), inner)
}

fn reduction_consistency() -> Outcome {
    let mut compared = 0;
    for k in 1..=10u64 {
        for n in 0..=8u64 {
            for l in 0..=8u64 {
                let [p_ln, q_ln, p_lnr, q_lnr, ..] = theorems(k, l, n, 0);
                if rhs_exact(&p_lnr).unwrap() != rhs_exact(&p_ln).unwrap() {
                    return fail(format!("P reduction k={k} l={l} n={n}"));
                }
                if rhs_exact(&q_lnr).unwrap() != rhs_exact(&q_ln).unwrap() {
                    return fail(format!("Q reduction k={k} l={l} n={n}"));
                }
                compared += 2;
            }
            let even = rhs_exact(&Theorem::p_even(k, n).unwrap()).unwrap();
            if even != rhs_exact(&Theorem::p_ln(k, 2, n).unwrap()).unwrap() {
                return fail(format!("even reduction k={k} n={n}"));
            }
            compared += 1;
        }
    }
    ok(format!("{compared} exact equalities"))
}

fn numeric_agreement() -> Outcome {
    let limit = float_exact_limit();
    let (mut pass, mut skipped, mut wrong) = (0, 0, Vec::new());
    for k in 1..=10u64 {
        for l in 0..=8u64 {
            for n in 0..=8u64 {
                for r in 0..=8u64 {
                    for th in theorems(k, l, n, r) {
                        if !th.id().uses_r() && r > 0 || !th.id().uses_l() && l > 0 {
                            continue;
                        }
                        let rep = verify_numeric(&th, DEFAULT_TOLERANCE).unwrap();
                        let above = th.lhs().abs() > limit;
                        match (rep.status, above) {
                            (Status::Pass, false) => pass += 1,
                            (Status::SkippedOverflow, true) => skipped += 1,
                            _ => wrong.push(format!("{th}: {:?} {}", rep.status, rep.detail)),
                        }
                    }
                }
            }
        }
    }
    if wrong.is_empty() {
        ok(format!("{pass} pass, {skipped} skipped-overflow, 0 fail"))
    } else {
        fail(format!("{} wrong, first {}", wrong.len(), wrong[0]))
    }
}

fn moment(j: i32) -> f64 {
    if j % 2 == 1 {
        0.0
    } else {
        2.0 / (j as f64 + 1.0)
    }
}

fn error_of(value: f64, exact: f64) -> f64 {
    if exact == 0.0 {
        value.abs()
    } else {
        ((value - exact) / exact).abs()
    }
}

fn quadrature_exactness() -> Outcome {
    let mut tight = 0;
    for m in 1..=64usize {
        let rule = legendre_rule(m).unwrap();
        for j in 0..=(2 * m as i32 - 1) {
            let err = error_of(rule.integrate(|x| x.powi(j)), moment(j));
            if err > 1e-13 {
                return fail(format!("m={m} j={j} error {err:e}"));
            }
        }
        let j = 2 * m as i32;
        if error_of(rule.integrate(|x| x.powi(j)), moment(j)) > 1e-13 {
            tight += 1;
        }
    }
    if tight > 0 {
        ok(format!("exact through j=2m-1 for m=1..64; j=2m exceeds 1e-13 for {tight} values of m"))
    } else {
        fail("j=2m never exceeded the bound")
    }
}

fn specialization_bridge() -> Outcome {
    let (mut f, mut g) = (BigInt::zero(), BigInt::from(1));
    let (mut lu, mut lv) = (BigInt::from(2), BigInt::from(1));
    for n in 0..=40u64 {
        match (classical(Classical::Fibonacci, n), classical(Classical::Lucas, n)) {
            (Ok(fib), Ok(luc)) if fib == f && luc == lu => {}
            (fib, luc) => return fail(format!("n={n}: {fib:?} {luc:?}, want {f} {lu}")),
        }
        let next = &f + &g;
        f = std::mem::replace(&mut g, next);
        let next = &lu + &lv;
        lu = std::mem::replace(&mut lv, next);
    }
    ok("F(n) and L(n) match for n=0..40")
}

fn oeis_cross_check() -> Outcome {
    let mut matched = Vec::new();
    for mapping in OeisMapping::bundled() {
        let id = &mapping.oeis_id;
        let file = data_dir().join(format!("oeis/b{}.txt", &id[1..]));
        let out = kpell_bin()
            .args(["oeis", "--id", id, "--n", "30", "--file"])
            .arg(&file)
            .output()
            .unwrap();
        if !out.status.success() {
            return fail(format!("{id}: {}", String::from_utf8_lossy(&out.stdout).trim()));
        }
        matched.push(id.clone());
    }
    if matched.len() == 8 {
        ok(format!("{} of 8 full matches at offset 0", matched.len()))
    } else {
        fail(format!("only {} mappings bundled", matched.len()))
    }
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("table reproduction", table_reproduction),
        ("binet vs recurrence", binet_equivalence),
        ("lemma sweep", lemma_sweep),
        ("exact theorem sweep", exact_sweep),
        ("reduction consistency", reduction_consistency),
        ("numeric agreement", numeric_agreement),
        ("quadrature exactness", quadrature_exactness),
        ("specialization bridge", specialization_bridge),
        ("oeis cross-check", oeis_cross_check),
    ];
    let mut failures = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let outcome = check();
        let tag = if outcome.pass { "PASS" } else { "FAIL" };
        println!("criterion {} [{tag}] {name}: {}", i + 1, outcome.note);
        failures += usize::from(!outcome.pass);
    }
    println!("acceptance: {}/9 criteria passed", 9 - failures);
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
