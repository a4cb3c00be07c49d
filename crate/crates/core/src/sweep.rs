//! Cartesian parameter sweeps over theorems and lemmas.
//!
//! Reports come back in tuple order whatever the worker count.

use std::fmt;
use std::ops::RangeInclusive;
use std::str::FromStr;

use rayon::prelude::*;

use crate::error::Result;
use crate::identities::{check_lemma21, check_lemma22};
use crate::quadrature::{verify_numeric, DEFAULT_TOLERANCE};
use crate::report::VerificationReport;
use crate::theorem::{verify, Theorem, TheoremId, TheoremParams};

/// Something a sweep can check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Target {
    Theorem(TheoremId),
    Lemma21,
    Lemma22,
}

impl Target {
    pub fn all() -> Vec<Target> {
        let mut v: Vec<Target> = TheoremId::ALL.into_iter().map(Target::Theorem).collect();
        v.extend([Target::Lemma21, Target::Lemma22]);
        v
    }

    /// Parses a comma-separated list; `all` expands to every target and
    /// `theorems` to the six integral representations.
    pub fn parse_set(s: &str) -> std::result::Result<Vec<Target>, String> {
        let mut out = Vec::new();
        for part in s.split(',').map(str::trim) {
            match part {
                "all" => out.extend(Target::all()),
                "theorems" => out.extend(TheoremId::ALL.into_iter().map(Target::Theorem)),
                other => out.push(other.parse()?),
            }
        }
        out.sort();
        out.dedup();
        if out.is_empty() {
            return Err("empty theorem set".into());
        }
        Ok(out)
    }
}

impl FromStr for Target {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "lemma21" => Ok(Target::Lemma21),
            "lemma22" => Ok(Target::Lemma22),
            other => other.parse().map(Target::Theorem),
        }
    }
}

impl fmt::Display for Target {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Target::Theorem(id) => write!(f, "{id}"),
            Target::Lemma21 => f.write_str("lemma21"),
            Target::Lemma22 => f.write_str("lemma22"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SweepMode {
    Exact,
    Numeric,
    Both,
}

impl FromStr for SweepMode {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "exact" => Ok(SweepMode::Exact),
            "numeric" => Ok(SweepMode::Numeric),
            "both" => Ok(SweepMode::Both),
            other => Err(format!("unknown mode {other:?}")),
        }
    }
}

/// One concrete tuple.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Check {
    Theorem(Theorem),
    Lemma21 { k: u64, n: u64 },
    Lemma22 { k: u64, m: u64, n: u64 },
}

impl Check {
    /// Reports for this tuple; lemmas are exact-only and produce nothing in
    /// pure numeric mode.
    pub fn run(&self, mode: SweepMode, tol: f64) -> Result<Vec<VerificationReport>> {
        let exact = matches!(mode, SweepMode::Exact | SweepMode::Both);
        let numeric = matches!(mode, SweepMode::Numeric | SweepMode::Both);
        let mut out = Vec::with_capacity(2);
        match *self {
            Check::Theorem(th) => {
                if exact {
                    out.push(verify(&th)?);
                }
                if numeric {
                    out.push(verify_numeric(&th, tol)?);
                }
            }
            Check::Lemma21 { k, n } if exact => out.push(check_lemma21(k, n)?),
            Check::Lemma22 { k, m, n } if exact => out.push(check_lemma22(k, m, n)?),
            _ => {}
        }
        Ok(out)
    }
}

/// Parameter ranges for a sweep. `l` and `r` are ignored by targets that do
/// not use them; `m` is only used by `lemma22`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepSpec {
    pub targets: Vec<Target>,
    pub k: RangeInclusive<u64>,
    pub l: RangeInclusive<u64>,
    pub m: RangeInclusive<u64>,
    pub n: RangeInclusive<u64>,
    pub r: RangeInclusive<u64>,
}

impl SweepSpec {
    /// Every tuple, sorted by target and then parameters.
    pub fn checks(&self) -> Result<Vec<Check>> {
        let mut out = Vec::new();
        for &target in &self.targets {
            for k in self.k.clone() {
                match target {
                    Target::Theorem(id) => {
                        let ls: Vec<Option<u64>> =
                            if id.uses_l() { self.l.clone().map(Some).collect() } else { vec![None] };
                        let rs: Vec<Option<u64>> =
                            if id.uses_r() { self.r.clone().map(Some).collect() } else { vec![None] };
                        for &l in &ls {
                            for n in self.n.clone() {
                                for &r in &rs {
                                    out.push(Check::Theorem(Theorem::new(id, TheoremParams { k, l, n, r })?));
                                }
                            }
                        }
                    }
                    Target::Lemma21 => out.extend(self.n.clone().map(|n| Check::Lemma21 { k, n })),
                    Target::Lemma22 => {
                        for m in self.m.clone() {
                            out.extend(self.n.clone().map(|n| Check::Lemma22 { k, m, n }));
                        }
                    }
                }
            }
        }
        Ok(out)
    }
}

/// Sweep options beyond the ranges.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RunOptions {
    pub mode: SweepMode,
    pub tol: f64,
    /// Worker threads; `0` or `1` runs on the calling thread.
    pub jobs: usize,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions { mode: SweepMode::Exact, tol: DEFAULT_TOLERANCE, jobs: 1 }
    }
}

/// Runs every check and returns the reports in check order.
pub fn run_checks(checks: &[Check], opts: RunOptions) -> Result<Vec<VerificationReport>> {
    let run = |c: &Check| c.run(opts.mode, opts.tol);
    let nested: Vec<Vec<VerificationReport>> = if opts.jobs <= 1 {
        checks.iter().map(run).collect::<Result<_>>()?
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(opts.jobs)
            .build()
            .expect("thread pool construction");
        pool.install(|| checks.par_iter().map(run).collect::<Result<_>>())?
    };
    Ok(nested.into_iter().flatten().collect())
}

pub fn run_sweep(spec: &SweepSpec, opts: RunOptions) -> Result<Vec<VerificationReport>> {
    run_checks(&spec.checks()?, opts)
}
