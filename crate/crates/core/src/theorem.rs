//! Exact verification of the integral representations.
//!
//! Every representation has the shape
//!
//! ```text
//! c * integral_{-1}^{1} (u0 + u1 x) (b0 + b1 x)^(n-1) dx
//! ```
//!
//! with ring coefficients built from lower-index `P` and `Q` values and
//! `2 sqrt(1+k)` realized as `2t`. The integrand is expanded by the binomial
//! theorem and integrated term by term, so the right-hand side comes out as
//! an exact element `a + b t`; it must equal the left-hand side with `b = 0`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::{expand_linear_power, integrate_sym, poly_mul, RingPoly};
use crate::report::{Mode, ReportParams, Status, VerificationReport};
use crate::ring::RingRat;
use crate::seq::{check_k, kpell, kpell_lucas};

/// Which integral representation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum TheoremId {
    /// `P(k, l n)`
    PLn,
    /// `Q(k, l n)`
    QLn,
    /// `P(k, l n + r)`
    PLnr,
    /// `Q(k, l n + r)`
    QLnr,
    /// `P(k, 2n)`
    PEven,
    /// `P(k, 2n + 1)`
    POdd,
}

impl TheoremId {
    pub const ALL: [TheoremId; 6] =
        [TheoremId::PLn, TheoremId::QLn, TheoremId::PLnr, TheoremId::QLnr, TheoremId::PEven, TheoremId::POdd];

    pub fn name(self) -> &'static str {
        match self {
            TheoremId::PLn => "p-ln",
            TheoremId::QLn => "q-ln",
            TheoremId::PLnr => "p-lnr",
            TheoremId::QLnr => "q-lnr",
            TheoremId::PEven => "p-even",
            TheoremId::POdd => "p-odd",
        }
    }

    pub fn uses_l(self) -> bool {
        !matches!(self, TheoremId::PEven | TheoremId::POdd)
    }

    pub fn uses_r(self) -> bool {
        matches!(self, TheoremId::PLnr | TheoremId::QLnr)
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TheoremId {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        TheoremId::ALL
            .into_iter()
            .find(|t| t.name() == s)
            .ok_or_else(|| format!("unknown theorem {s:?}"))
    }
}

/// Raw parameters `(k, l, n, r)`; `l` and `r` only where the theorem uses them.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TheoremParams {
    pub k: u64,
    pub l: Option<u64>,
    pub n: u64,
    pub r: Option<u64>,
}

/// A theorem together with parameters that have been checked against it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Theorem {
    id: TheoremId,
    params: TheoremParams,
}

impl Theorem {
    pub fn new(id: TheoremId, params: TheoremParams) -> Result<Self> {
        check_k(params.k)?;
        let name = id.name();
        match (id.uses_l(), params.l) {
            (true, None) => return Err(Error::MissingParam { theorem: name, param: "l" }),
            (false, Some(_)) => return Err(Error::InvalidParams { theorem: name, param: "l" }),
            _ => {}
        }
        match (id.uses_r(), params.r) {
            (true, None) => return Err(Error::MissingParam { theorem: name, param: "r" }),
            (false, Some(_)) => return Err(Error::InvalidParams { theorem: name, param: "r" }),
            _ => {}
        }
        Ok(Theorem { id, params })
    }

    pub fn p_ln(k: u64, l: u64, n: u64) -> Result<Self> {
        Self::new(TheoremId::PLn, TheoremParams { k, l: Some(l), n, r: None })
    }

    pub fn q_ln(k: u64, l: u64, n: u64) -> Result<Self> {
        Self::new(TheoremId::QLn, TheoremParams { k, l: Some(l), n, r: None })
    }

    pub fn p_lnr(k: u64, l: u64, n: u64, r: u64) -> Result<Self> {
        Self::new(TheoremId::PLnr, TheoremParams { k, l: Some(l), n, r: Some(r) })
    }

    pub fn q_lnr(k: u64, l: u64, n: u64, r: u64) -> Result<Self> {
        Self::new(TheoremId::QLnr, TheoremParams { k, l: Some(l), n, r: Some(r) })
    }

    pub fn p_even(k: u64, n: u64) -> Result<Self> {
        Self::new(TheoremId::PEven, TheoremParams { k, l: None, n, r: None })
    }

    pub fn p_odd(k: u64, n: u64) -> Result<Self> {
        Self::new(TheoremId::POdd, TheoremParams { k, l: None, n, r: None })
    }

    pub fn id(&self) -> TheoremId {
        self.id
    }

    pub fn params(&self) -> TheoremParams {
        self.params
    }

    pub fn k(&self) -> u64 {
        self.params.k
    }

    pub fn n(&self) -> u64 {
        self.params.n
    }

    pub fn l(&self) -> u64 {
        self.params.l.unwrap_or(0)
    }

    pub fn r(&self) -> u64 {
        self.params.r.unwrap_or(0)
    }

    pub fn d(&self) -> u64 {
        self.params.k + 1
    }

    pub fn report_params(&self) -> ReportParams {
        ReportParams { k: self.params.k, l: self.params.l, m: None, n: Some(self.params.n), r: self.params.r }
    }

    /// Index of the sequence term on the left-hand side.
    pub fn lhs_index(&self) -> u64 {
        let (l, n, r) = (self.l(), self.n(), self.r());
        match self.id {
            TheoremId::PLn | TheoremId::QLn => l * n,
            TheoremId::PLnr | TheoremId::QLnr => l * n + r,
            TheoremId::PEven => 2 * n,
            TheoremId::POdd => 2 * n + 1,
        }
    }

    /// The left-hand side, from the recurrence.
    pub fn lhs(&self) -> BigInt {
        let k = self.k();
        let idx = self.lhs_index();
        let v = match self.id {
            TheoremId::QLn | TheoremId::QLnr => kpell_lucas(k, idx),
            _ => kpell(k, idx),
        };
        v.expect("k validated at construction")
    }

    /// The exact integrand for `n >= 1`; `None` for `n = 0`, where the
    /// right-hand side has a closed form (see [`rhs_exact`]).
    pub fn integrand(&self) -> Option<Integrand> {
        let n = self.n();
        if n == 0 {
            return None;
        }
        let (k, d) = (self.k(), self.d());
        let seq = |f: fn(u64, u64) -> Result<BigInt>, i| f(k, i).expect("k validated at construction");
        let int = |v: BigInt| RingRat::scalar(BigRational::from_integer(v), d);
        let nn = BigInt::from(n);
        let delta = RingRat::new(BigRational::zero(), BigRational::from_integer(2.into()), d);
        let pow2 = |e: u64| BigRational::from_integer(BigInt::one() << e);

        let integrand = match self.id {
            TheoremId::PLn | TheoremId::QLn | TheoremId::PLnr | TheoremId::QLnr => {
                let (pl, ql) = (seq(kpell, self.l()), seq(kpell_lucas, self.l()));
                let base = (int(ql.clone()), &delta * &int(pl.clone()));
                match self.id {
                    TheoremId::PLn => Integrand {
                        prefactor: BigRational::from_integer(&nn * &pl) / pow2(n),
                        factor: (RingRat::one(d), RingRat::zero(d)),
                        base,
                        exponent: n - 1,
                    },
                    TheoremId::QLn => Integrand {
                        prefactor: pow2(n).recip(),
                        factor: (int(ql), &(&delta * &int(pl)) * &int(&nn + 1)),
                        base,
                        exponent: n - 1,
                    },
                    TheoremId::PLnr => {
                        let (pr, qr) = (seq(kpell, self.r()), seq(kpell_lucas, self.r()));
                        Integrand {
                            prefactor: pow2(n + 1).recip(),
                            factor: (
                                int(&nn * &pl * &qr + &pr * &ql),
                                &delta * &int((&nn + 1) * &pl * &pr),
                            ),
                            base,
                            exponent: n - 1,
                        }
                    }
                    TheoremId::QLnr => {
                        let (pr, qr) = (seq(kpell, self.r()), seq(kpell_lucas, self.r()));
                        let delta_sq = &delta * &delta;
                        Integrand {
                            prefactor: pow2(n + 1).recip(),
                            factor: (
                                &(&delta_sq * &int(&nn * &pl * &pr)) + &int(&ql * &qr),
                                &delta * &int((&nn + 1) * &pl * &qr),
                            ),
                            base,
                            exponent: n - 1,
                        }
                    }
                    _ => unreachable!(),
                }
            }
            TheoremId::PEven => Integrand {
                prefactor: BigRational::from_integer(nn),
                factor: (RingRat::one(d), RingRat::zero(d)),
                base: (int(BigInt::from(k) + 2), delta),
                exponent: n - 1,
            },
            TheoremId::POdd => Integrand {
                prefactor: BigRational::new(1.into(), 2.into()),
                factor: (int(&nn * 2u32 + k + 2u32), &delta * &int(&nn + 1)),
                base: (int(BigInt::from(k) + 2), delta),
                exponent: n - 1,
            },
        };
        Some(integrand)
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}(k={}", self.id, self.k())?;
        if let Some(l) = self.params.l {
            write!(f, ", l={l}")?;
        }
        write!(f, ", n={}", self.n())?;
        if let Some(r) = self.params.r {
            write!(f, ", r={r}")?;
        }
        f.write_str(")")
    }
}

/// `prefactor * integral_{-1}^{1} (factor) (base)^exponent dx`, each of
/// `factor` and `base` given as `(constant, linear)` coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Integrand {
    pub prefactor: BigRational,
    pub factor: (RingRat, RingRat),
    pub base: (RingRat, RingRat),
    pub exponent: u64,
}

impl Integrand {
    /// The integrand fully multiplied out as a polynomial in `x`.
    pub fn expand(&self) -> Result<RingPoly> {
        let d = self.base.0.d();
        let power = expand_linear_power(&self.base.0, &self.base.1, self.exponent)?;
        let factor = RingPoly::new(vec![self.factor.0.clone(), self.factor.1.clone()], d)?;
        poly_mul(&factor, &power)
    }

    pub fn evaluate(&self) -> Result<RingRat> {
        Ok(integrate_sym(&self.expand()?).scale(&self.prefactor))
    }
}

/// Exact value of the right-hand side.
///
/// For `n = 0` the exponent would be `-1`. In every case the linear factor
/// then equals the base times a constant, so the quotient collapses:
///
/// * `p-ln`: prefactor `n P(l) / 2^n` is zero, giving `0`.
/// * `q-ln`: `(Q + 2t P x) / (Q + 2t P x) = 1` and `integral 1 = 2`, giving `2`.
/// * `p-lnr`: factor `P(r) (Q(l) + 2t P(l) x)`, so `(1/2) * 2 P(r) = P(r)`.
/// * `q-lnr`: factor `Q(r) (Q(l) + 2t P(l) x)`, so `(1/2) * 2 Q(r) = Q(r)`.
/// * `p-even`: prefactor `n` is zero, giving `0`.
/// * `p-odd`: factor equals the base, so `(1/2) * 2 = 1`.
pub fn rhs_exact(theorem: &Theorem) -> Result<RingRat> {
    match theorem.integrand() {
        Some(integrand) => integrand.evaluate(),
        None => {
            let (k, d) = (theorem.k(), theorem.d());
            let v = match theorem.id() {
                TheoremId::PLn | TheoremId::PEven => BigInt::zero(),
                TheoremId::QLn => BigInt::from(2),
                TheoremId::PLnr => kpell(k, theorem.r())?,
                TheoremId::QLnr => kpell_lucas(k, theorem.r())?,
                TheoremId::POdd => BigInt::one(),
            };
            Ok(RingRat::scalar(BigRational::from_integer(v), d))
        }
    }
}

/// Right-hand side of `p-ln` through the antiderivative instead of the
/// binomial expansion:
/// `integral (c0 + c1 x)^(n-1) dx = ((c0 + c1)^n - (c0 - c1)^n) / (n c1)`.
///
/// `None` when `n = 0` or `P(l) = 0` (then `c1 = 0` cannot be divided by).
pub fn rhs_p_ln_antiderivative(k: u64, l: u64, n: u64) -> Result<Option<RingRat>> {
    let theorem = Theorem::p_ln(k, l, n)?;
    let Some(integrand) = theorem.integrand() else {
        return Ok(None);
    };
    let (c0, c1) = &integrand.base;
    let divisor = c1.scale(&BigRational::from_integer(n.into()));
    let Some(inv) = divisor.inverse() else {
        return Ok(None);
    };
    let upper = (c0 + c1).pow(n);
    let lower = (c0 - c1).pow(n);
    let integral = &(&upper - &lower) * &inv;
    Ok(Some(integral.scale(&integrand.prefactor)))
}

/// Exact-mode verification report.
pub fn verify(theorem: &Theorem) -> Result<VerificationReport> {
    let lhs = theorem.lhs();
    let rhs = rhs_exact(theorem)?;
    let expected = RingRat::scalar(BigRational::from_integer(lhs.clone()), theorem.d());
    let ok = rhs == expected;
    let detail = if ok {
        String::new()
    } else {
        let mut s = String::new();
        if !rhs.b().is_zero() {
            s.push_str("rhs has nonzero t-component; ");
        }
        match theorem.integrand() {
            Some(integrand) => {
                let poly = integrand.expand()?;
                s.push_str(&format!("prefactor {} times integral of {}", integrand.prefactor, poly));
            }
            None => s.push_str("n = 0 closed form"),
        }
        s
    };
    Ok(VerificationReport {
        id: theorem.id().name().to_owned(),
        params: theorem.report_params(),
        mode: Mode::Exact,
        lhs: lhs.to_string(),
        rhs: rhs.to_string(),
        status: Status::from_bool(ok),
        detail,
        parts: Vec::new(),
    })
}
