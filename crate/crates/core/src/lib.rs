//! Exact and numeric verification of integral representations of the
//! k-Pell numbers `P(k, n)` and k-Pell-Lucas numbers `Q(k, n)`.
//!
//! * [`seq`]: the sequences by recurrence, plus Fibonacci, Lucas, Pell and
//!   Pell-Lucas as special cases.
//! * [`ring`]: exact arithmetic in `Z[t]/(t^2 - d)` and the Binet formulas.
//! * [`identities`]: the `P`/`Q` product and addition identities.
//! * [`poly`] and [`theorem`]: exact expansion and integration of the
//!   integral representations over `[-1, 1]`.
//! * [`quadrature`]: Gauss-Legendre rules and floating-point verification.
//! * [`oeis`] and [`sweep`]: OEIS cross-checks and parameter sweeps.
//!
//! ```
//! use kpell_core::{kpell, theorem::{verify, Theorem}};
//!
//! assert_eq!(kpell(1, 6).unwrap(), 70.into());
//! assert!(verify(&Theorem::p_ln(1, 2, 3).unwrap()).unwrap().passed());
//! ```

pub mod error;
pub mod identities;
pub mod oeis;
pub mod poly;
pub mod quadrature;
pub mod report;
pub mod ring;
pub mod seq;
pub mod sweep;
pub mod theorem;

pub use error::{Error, Result};
pub use identities::{check_lemma21, check_lemma22, IdentityId};
pub use oeis::{OeisMapping, OeisOutcome};
pub use poly::RingPoly;
pub use quadrature::{legendre_rule, verify_numeric, QuadratureRule};
pub use report::{Mode, ReportParams, Status, Summary, VerificationReport};
pub use ring::{binet_pair, BinetPair, RingInt, RingRat};
pub use seq::{classical, kpell, kpell_lucas, sequence_range, Classical, Family, SequenceParams, SequenceValue};
pub use theorem::{rhs_exact, verify, Theorem, TheoremId, TheoremParams};

pub use num_bigint::BigInt;
pub use num_rational::BigRational;
