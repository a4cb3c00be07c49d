//! Gauss-Legendre quadrature and floating-point verification of the integral
//! representations.
//!
//! The integrands are rebuilt here directly in `f64` from the sequence
//! values, independently of the exact ring expansion, so agreement between
//! the two paths is a genuine cross-check.

use std::collections::HashMap;
use std::f64::consts::PI;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};

use crate::error::{Error, Result};
use crate::report::{Mode, Status, VerificationReport};
use crate::seq::{kpell, kpell_lucas};
use crate::theorem::{Theorem, TheoremId};

/// Largest supported node count.
pub const MAX_NODES: usize = 256;

/// Default relative tolerance for [`verify_numeric`].
pub const DEFAULT_TOLERANCE: f64 = 1e-12;

const NEWTON_STEP_TOL: f64 = 1e-15;
const NEWTON_MAX_ITER: usize = 100;

/// An `m`-point Gauss-Legendre rule on `[-1, 1]`, nodes ascending.
#[derive(Debug, Clone, PartialEq)]
pub struct QuadratureRule {
    nodes: Vec<f64>,
    weights: Vec<f64>,
}

impl QuadratureRule {
    pub fn m(&self) -> usize {
        self.nodes.len()
    }

    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn integrate(&self, f: impl Fn(f64) -> f64) -> f64 {
        self.nodes.iter().zip(&self.weights).map(|(&x, &w)| w * f(x)).sum()
    }
}

/// `(P_m(x), P_{m-1}(x))` by the three-term recurrence.
fn legendre(m: usize, x: f64) -> (f64, f64) {
    let (mut prev, mut cur) = (1.0, x);
    if m == 0 {
        return (1.0, 0.0);
    }
    for j in 2..=m {
        let j = j as f64;
        let next = ((2.0 * j - 1.0) * x * cur - (j - 1.0) * prev) / j;
        prev = cur;
        cur = next;
    }
    (cur, prev)
}

fn legendre_derivative(m: usize, x: f64) -> (f64, f64) {
    let (p, pm1) = legendre(m, x);
    (p, m as f64 * (x * p - pm1) / (x * x - 1.0))
}

/// Builds the `m`-point rule by Newton iteration on `P_m` from the cosine
/// initial guesses; weights are `2 / ((1 - x^2) P_m'(x)^2)`.
pub fn legendre_rule(m: usize) -> Result<QuadratureRule> {
    if m == 0 || m > MAX_NODES {
        return Err(Error::RuleSize(m));
    }
    let mut nodes = vec![0.0; m];
    let mut weights = vec![0.0; m];
    // Roots come in +/- pairs; solve for the non-negative half only.
    for i in 0..m.div_ceil(2) {
        let mid = m % 2 == 1 && i == m / 2;
        let mut x = if mid { 0.0 } else { (PI * (i as f64 + 0.75) / (m as f64 + 0.5)).cos() };
        if !mid {
            let mut converged = false;
            for _ in 0..NEWTON_MAX_ITER {
                let (p, dp) = legendre_derivative(m, x);
                let dx = p / dp;
                x -= dx;
                if dx.abs() <= NEWTON_STEP_TOL {
                    converged = true;
                    break;
                }
            }
            if !converged {
                return Err(Error::NoConvergence { m, index: i });
            }
        }
        let (_, dp) = legendre_derivative(m, x);
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        nodes[m - 1 - i] = x;
        nodes[i] = -x;
        weights[m - 1 - i] = w;
        weights[i] = w;
    }
    Ok(QuadratureRule { nodes, weights })
}

fn cache() -> &'static RwLock<HashMap<usize, Arc<QuadratureRule>>> {
    static CACHE: OnceLock<RwLock<HashMap<usize, Arc<QuadratureRule>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// Like [`legendre_rule`], memoized per `m`.
pub fn cached_rule(m: usize) -> Result<Arc<QuadratureRule>> {
    if let Some(rule) = cache().read().unwrap_or_else(|e| e.into_inner()).get(&m) {
        return Ok(Arc::clone(rule));
    }
    let rule = Arc::new(legendre_rule(m)?);
    let mut guard = cache().write().unwrap_or_else(|e| e.into_inner());
    Ok(Arc::clone(guard.entry(m).or_insert(rule)))
}

/// `prefactor * (u0 + u1 x) * (b0 + b1 x)^exponent` in double precision.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FloatIntegrand {
    pub prefactor: f64,
    pub factor: (f64, f64),
    pub base: (f64, f64),
    pub exponent: u32,
}

impl FloatIntegrand {
    pub fn degree(&self) -> usize {
        let base_deg = if self.base.1 != 0.0 { self.exponent as usize } else { 0 };
        base_deg + usize::from(self.factor.1 != 0.0)
    }

    /// Node count with a margin of two above the exactness requirement.
    pub fn node_count(&self) -> usize {
        (self.degree() + 1).div_ceil(2) + 2
    }

    pub fn eval(&self, x: f64) -> f64 {
        (self.factor.0 + self.factor.1 * x) * (self.base.0 + self.base.1 * x).powi(self.exponent as i32)
    }

    pub fn integrate(&self) -> Result<f64> {
        let rule = cached_rule(self.node_count())?;
        Ok(self.prefactor * rule.integrate(|x| self.eval(x)))
    }
}

fn f(v: &BigInt) -> f64 {
    v.to_f64().unwrap_or(f64::INFINITY)
}

/// The right-hand side integrand evaluated in floating point. For `n = 0`
/// the collapsed constant integrand is used.
pub fn float_integrand(theorem: &Theorem) -> FloatIntegrand {
    let (k, n) = (theorem.k(), theorem.n());
    let seq = |g: fn(u64, u64) -> Result<BigInt>, i| f(&g(k, i).expect("k validated at construction"));
    let delta = 2.0 * ((1 + k) as f64).sqrt();
    let nf = n as f64;
    let constant = |prefactor, c| FloatIntegrand { prefactor, factor: (c, 0.0), base: (1.0, 0.0), exponent: 0 };

    if n == 0 {
        return match theorem.id() {
            TheoremId::PLn | TheoremId::PEven => constant(0.0, 1.0),
            TheoremId::QLn => constant(1.0, 1.0),
            TheoremId::PLnr => constant(0.5, seq(kpell, theorem.r())),
            TheoremId::QLnr => constant(0.5, seq(kpell_lucas, theorem.r())),
            TheoremId::POdd => constant(0.5, 1.0),
        };
    }
    let exponent = u32::try_from(n - 1).unwrap_or(u32::MAX).min(i32::MAX as u32);
    let kf = k as f64;
    let pow2 = |e: u64| 2f64.powi(e as i32);
    match theorem.id() {
        TheoremId::PEven => FloatIntegrand {
            prefactor: nf,
            factor: (1.0, 0.0),
            base: (kf + 2.0, delta),
            exponent,
        },
        TheoremId::POdd => FloatIntegrand {
            prefactor: 0.5,
            factor: (2.0 * nf + kf + 2.0, (nf + 1.0) * delta),
            base: (kf + 2.0, delta),
            exponent,
        },
        id => {
            let (pl, ql) = (seq(kpell, theorem.l()), seq(kpell_lucas, theorem.l()));
            let base = (ql, delta * pl);
            match id {
                TheoremId::PLn => FloatIntegrand { prefactor: nf * pl / pow2(n), factor: (1.0, 0.0), base, exponent },
                TheoremId::QLn => FloatIntegrand {
                    prefactor: 1.0 / pow2(n),
                    factor: (ql, (nf + 1.0) * delta * pl),
                    base,
                    exponent,
                },
                TheoremId::PLnr => {
                    let (pr, qr) = (seq(kpell, theorem.r()), seq(kpell_lucas, theorem.r()));
                    FloatIntegrand {
                        prefactor: 1.0 / pow2(n + 1),
                        factor: (nf * pl * qr + pr * ql, (nf + 1.0) * delta * pl * pr),
                        base,
                        exponent,
                    }
                }
                TheoremId::QLnr => {
                    let (pr, qr) = (seq(kpell, theorem.r()), seq(kpell_lucas, theorem.r()));
                    FloatIntegrand {
                        prefactor: 1.0 / pow2(n + 1),
                        factor: (nf * delta * delta * pl * pr + ql * qr, (nf + 1.0) * delta * pl * qr),
                        base,
                        exponent,
                    }
                }
                TheoremId::PEven | TheoremId::POdd => unreachable!(),
            }
        }
    }
}

/// Right-hand side by quadrature.
pub fn rhs_numeric(theorem: &Theorem) -> Result<f64> {
    float_integrand(theorem).integrate()
}

/// `2^53`: the largest magnitude below which every integer is an `f64`.
pub fn float_exact_limit() -> BigInt {
    BigInt::from(1u64 << 53)
}

/// Numeric-mode verification: passes iff
/// `|rhs - lhs| / max(1, |lhs|) <= tol`. A left-hand side beyond `2^53`
/// yields [`Status::SkippedOverflow`] without evaluating the integral.
pub fn verify_numeric(theorem: &Theorem, tol: f64) -> Result<VerificationReport> {
    let lhs = theorem.lhs();
    let mut report = VerificationReport {
        id: theorem.id().name().to_owned(),
        params: theorem.report_params(),
        mode: Mode::Numeric,
        lhs: lhs.to_string(),
        rhs: String::new(),
        status: Status::SkippedOverflow,
        detail: String::new(),
        parts: Vec::new(),
    };
    if lhs.abs() > float_exact_limit() {
        report.rhs = "n/a".to_owned();
        report.detail = "lhs exceeds 2^53".to_owned();
        return Ok(report);
    }
    let integrand = float_integrand(theorem);
    let rhs = integrand.integrate()?;
    let lhs_f = f(&lhs);
    let rel = (rhs - lhs_f).abs() / lhs_f.abs().max(1.0);
    report.rhs = format!("{rhs:?}");
    report.status = Status::from_bool(rel <= tol);
    report.detail = format!("m={} rel_err={rel:.3e}", integrand.node_count());
    Ok(report)
}
