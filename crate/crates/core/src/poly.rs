//! Polynomials in the integration variable `x` with ring coefficients, and
//! their exact integrals over `[-1, 1]`.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::ring::RingRat;

/// `sum_j coeffs[j] x^j`, trailing zero coefficients stripped.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RingPoly {
    coeffs: Vec<RingRat>,
    d: u64,
}

impl RingPoly {
    pub fn new(coeffs: Vec<RingRat>, d: u64) -> Result<Self> {
        if let Some(bad) = coeffs.iter().find(|c| c.d() != d) {
            return Err(Error::RingMismatch { left: d, right: bad.d() });
        }
        let mut p = RingPoly { coeffs, d };
        p.normalize();
        Ok(p)
    }

    pub fn zero(d: u64) -> Self {
        RingPoly { coeffs: Vec::new(), d }
    }

    pub fn one(d: u64) -> Self {
        RingPoly { coeffs: vec![RingRat::one(d)], d }
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(RingRat::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[RingRat] {
        &self.coeffs
    }

    pub fn d(&self) -> u64 {
        self.d
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl fmt::Display for RingPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match j {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})*x")?,
                _ => write!(f, "({c})*x^{j}")?,
            }
        }
        Ok(())
    }
}

/// `C(n, j)` for `j = 0..=n` by the multiplicative recurrence.
pub fn binomial_row(n: u64) -> Vec<BigInt> {
    let mut row = Vec::with_capacity(n as usize + 1);
    let mut c = BigInt::one();
    row.push(c.clone());
    for j in 1..=n {
        c = c * BigInt::from(n - j + 1) / BigInt::from(j);
        row.push(c.clone());
    }
    row
}

/// `(c0 + c1 x)^e` by the binomial theorem.
pub fn expand_linear_power(c0: &RingRat, c1: &RingRat, e: u64) -> Result<RingPoly> {
    if c0.d() != c1.d() {
        return Err(Error::RingMismatch { left: c0.d(), right: c1.d() });
    }
    let d = c0.d();
    let binom = binomial_row(e);
    // c0^(e-j) for j = 0..=e, built from the top down.
    let mut c0_pows = vec![RingRat::one(d); e as usize + 1];
    for j in (0..e as usize).rev() {
        c0_pows[j] = &c0_pows[j + 1] * c0;
    }
    let mut coeffs = Vec::with_capacity(e as usize + 1);
    let mut c1_pow = RingRat::one(d);
    for (j, b) in binom.into_iter().enumerate() {
        let term = (&c0_pows[j] * &c1_pow).scale(&BigRational::from_integer(b));
        coeffs.push(term);
        c1_pow = &c1_pow * c1;
    }
    RingPoly::new(coeffs, d)
}

/// Convolution product.
pub fn poly_mul(p: &RingPoly, q: &RingPoly) -> Result<RingPoly> {
    if p.d != q.d {
        return Err(Error::RingMismatch { left: p.d, right: q.d });
    }
    if p.is_zero() || q.is_zero() {
        return Ok(RingPoly::zero(p.d));
    }
    let mut coeffs = vec![RingRat::zero(p.d); p.coeffs.len() + q.coeffs.len() - 1];
    for (i, a) in p.coeffs.iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        for (j, b) in q.coeffs.iter().enumerate() {
            coeffs[i + j] = &coeffs[i + j] + &(a * b);
        }
    }
    RingPoly::new(coeffs, p.d)
}

/// `integral_{-1}^{1} x^j dx`: zero for odd `j`, `2 / (j + 1)` for even `j`.
pub fn moment(j: usize) -> BigRational {
    if j % 2 == 1 {
        BigRational::zero()
    } else {
        BigRational::new(BigInt::from(2), BigInt::from(j + 1))
    }
}

/// Exact integral over `[-1, 1]`.
pub fn integrate_sym(p: &RingPoly) -> RingRat {
    p.coeffs
        .iter()
        .enumerate()
        .filter(|(j, _)| j % 2 == 0)
        .fold(RingRat::zero(p.d), |acc, (j, c)| &acc + &c.scale(&moment(j)))
}
