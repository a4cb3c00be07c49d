//! Exact checks of the preparatory identities relating `P` and `Q`.
//!
//! Sequence values come from the recurrence in [`crate::seq`], never from
//! the Binet route, so a failure here points at a real disagreement between
//! the recurrence and the ring algebra.

use std::fmt;

use num_bigint::BigInt;

use crate::error::Result;
use crate::report::{PartVerdict, ReportParams, Status, VerificationReport};
use crate::ring::{phi, signed_power, RingInt};
use crate::seq::{kpell, kpell_lucas};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum IdentityId {
    /// `Q(n) + 2t P(n) = 2 phi^n`
    L21i,
    /// `Q(n) - 2t P(n) = 2 conj(phi)^n`
    L21ii,
    /// `Q(n)^2 - 4(1+k) P(n)^2 = 4(-k)^n`
    L21iii,
    /// `2 P(m+n) = P(m) Q(n) + P(n) Q(m)`
    L22i,
    /// `2 Q(m+n) = Q(m) Q(n) + 4(1+k) P(m) P(n)`
    L22ii,
}

impl IdentityId {
    pub fn part(self) -> &'static str {
        match self {
            IdentityId::L21i | IdentityId::L22i => "i",
            IdentityId::L21ii | IdentityId::L22ii => "ii",
            IdentityId::L21iii => "iii",
        }
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let group = match self {
            IdentityId::L21i | IdentityId::L21ii | IdentityId::L21iii => "lemma21",
            IdentityId::L22i | IdentityId::L22ii => "lemma22",
        };
        write!(f, "{group}.{}", self.part())
    }
}

fn verdict<T: PartialEq + ToString>(id: IdentityId, lhs: T, rhs: T) -> PartVerdict {
    PartVerdict {
        part: id.part().to_owned(),
        status: Status::from_bool(lhs == rhs),
        lhs: lhs.to_string(),
        rhs: rhs.to_string(),
    }
}

/// Checks all three parts of the `(k, n)` lemma.
pub fn check_lemma21(k: u64, n: u64) -> Result<VerificationReport> {
    let p = kpell(k, n)?;
    let q = kpell_lucas(k, n)?;
    let d = k + 1;
    let phi_n = phi(k)?.pow(n);
    let two = RingInt::scalar(2, d);
    let two_t = RingInt::new(0, 2, d);
    let p_emb = RingInt::scalar(p.clone(), d);
    let q_emb = RingInt::scalar(q.clone(), d);

    let lhs_i = &q_emb + &(&two_t * &p_emb);
    let rhs_i = &two * &phi_n;
    let lhs_ii = &q_emb - &(&two_t * &p_emb);
    let rhs_ii = &two * &phi_n.conj();
    let lhs_iii = &q * &q - BigInt::from(4) * BigInt::from(d) * &p * &p;
    let rhs_iii = BigInt::from(4) * signed_power(k, n);

    let parts = vec![
        verdict(IdentityId::L21i, lhs_i, rhs_i),
        verdict(IdentityId::L21ii, lhs_ii, rhs_ii),
        verdict(IdentityId::L21iii, lhs_iii, rhs_iii),
    ];
    Ok(VerificationReport::from_parts("lemma21", ReportParams { k, n: Some(n), ..Default::default() }, parts))
}

/// Checks both parts of the `(k, m, n)` addition lemma.
pub fn check_lemma22(k: u64, m: u64, n: u64) -> Result<VerificationReport> {
    let (pm, qm) = (kpell(k, m)?, kpell_lucas(k, m)?);
    let (pn, qn) = (kpell(k, n)?, kpell_lucas(k, n)?);
    let (ps, qs) = (kpell(k, m + n)?, kpell_lucas(k, m + n)?);
    let four_d = BigInt::from(4) * BigInt::from(k + 1);

    let parts = vec![
        verdict(IdentityId::L22i, ps * 2, &pm * &qn + &pn * &qm),
        verdict(IdentityId::L22ii, qs * 2, &qm * &qn + four_d * &pm * &pn),
    ];
    Ok(VerificationReport::from_parts(
        "lemma22",
        ReportParams { k, m: Some(m), n: Some(n), ..Default::default() },
        parts,
    ))
}
