//! k-Pell and k-Pell-Lucas numbers by their linear recurrence.
//!
//! Both families satisfy `x(n) = 2 x(n-1) + k x(n-2)`; they differ only in
//! their initial values, `P(0), P(1) = 0, 1` and `Q(0), Q(1) = 2, 2`.
//! Everything is computed with big integers and two rolling values.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Sequence values are plain big integers.
pub type SequenceValue = BigInt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    /// `P(k, n)`, starting `0, 1`.
    KPell,
    /// `Q(k, n)`, starting `2, 2`.
    KPellLucas,
}

impl Family {
    fn seeds(self) -> (BigInt, BigInt) {
        match self {
            Family::KPell => (BigInt::zero(), BigInt::one()),
            Family::KPellLucas => (BigInt::from(2), BigInt::from(2)),
        }
    }

    /// Single-letter symbol, `P` or `Q`.
    pub fn symbol(self) -> char {
        match self {
            Family::KPell => 'P',
            Family::KPellLucas => 'Q',
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::KPell => f.write_str("pell"),
            Family::KPellLucas => f.write_str("pell-lucas"),
        }
    }
}

/// A fully specified term: family, `k >= 1` and index `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SequenceParams {
    family: Family,
    k: u64,
    n: u64,
}

impl SequenceParams {
    pub fn new(family: Family, k: u64, n: u64) -> Result<Self> {
        check_k(k)?;
        Ok(Self { family, k, n })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn k(&self) -> u64 {
        self.k
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn value(&self) -> SequenceValue {
        term(self.family, self.k, self.n)
    }
}

pub(crate) fn check_k(k: u64) -> Result<()> {
    match k {
        0 => Err(Error::ZeroK),
        // d = 1 + k must fit
        u64::MAX => Err(Error::KTooLarge(k)),
        _ => Ok(()),
    }
}

fn term(family: Family, k: u64, n: u64) -> BigInt {
    let (mut prev, mut cur) = family.seeds();
    if n == 0 {
        return prev;
    }
    let k = BigInt::from(k);
    for _ in 1..n {
        let next = (&cur << 1u32) + &k * &prev;
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

/// `P(k, n)`.
pub fn kpell(k: u64, n: u64) -> Result<SequenceValue> {
    check_k(k)?;
    Ok(term(Family::KPell, k, n))
}

/// `Q(k, n)`.
pub fn kpell_lucas(k: u64, n: u64) -> Result<SequenceValue> {
    check_k(k)?;
    Ok(term(Family::KPellLucas, k, n))
}

/// Dispatches to [`kpell`] or [`kpell_lucas`].
pub fn value(family: Family, k: u64, n: u64) -> Result<SequenceValue> {
    check_k(k)?;
    Ok(term(family, k, n))
}

/// Terms `n_from..=n_to` in a single pass. An empty range (`n_from > n_to`)
/// yields an empty vector.
pub fn sequence_range(family: Family, k: u64, n_from: u64, n_to: u64) -> Result<Vec<SequenceValue>> {
    check_k(k)?;
    if n_from > n_to {
        return Ok(Vec::new());
    }
    let kb = BigInt::from(k);
    let (mut prev, mut cur) = family.seeds();
    let mut out = Vec::with_capacity(usize::try_from(n_to - n_from + 1).unwrap_or(0));
    // `prev` holds the term at index i, `cur` the term at i + 1.
    let mut i = 0u64;
    loop {
        if i >= n_from {
            out.push(prev.clone());
        }
        if i == n_to {
            break;
        }
        let next = (&cur << 1u32) + &kb * &prev;
        prev = std::mem::replace(&mut cur, next);
        i += 1;
    }
    Ok(out)
}

/// The classical sequences recovered from `k = 1` and `k = 4`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Classical {
    Fibonacci,
    Lucas,
    Pell,
    PellLucas,
}

/// Classical Fibonacci, Lucas, Pell and Pell-Lucas numbers.
///
/// Fibonacci and Lucas come from `F(n) = P(4, n) / 2^(n-1)` and
/// `L(n) = Q(4, n) / 2^n`; both divisions are checked to be exact. `F(0)` is
/// defined directly as `0`.
pub fn classical(name: Classical, n: u64) -> Result<SequenceValue> {
    match name {
        Classical::Pell => kpell(1, n),
        Classical::PellLucas => kpell_lucas(1, n),
        Classical::Fibonacci => {
            if n == 0 {
                return Ok(BigInt::zero());
            }
            exact_shift(kpell(4, n)?, n - 1, "P(4, n) / 2^(n-1)")
        }
        Classical::Lucas => exact_shift(kpell_lucas(4, n)?, n, "Q(4, n) / 2^n"),
    }
}

fn exact_shift(value: BigInt, bits: u64, what: &str) -> Result<BigInt> {
    let divisor = BigInt::one() << bits;
    let (q, r) = value.div_rem(&divisor);
    if !r.is_zero() {
        return Err(Error::Inexact(format!("{what} leaves remainder {r}")));
    }
    Ok(q)
}
