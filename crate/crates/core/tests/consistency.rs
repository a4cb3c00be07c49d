//! Cross-theorem consistency and exact/numeric agreement.

use kpell_core::quadrature::{float_exact_limit, legendre_rule, rhs_numeric, verify_numeric, DEFAULT_TOLERANCE};
use kpell_core::theorem::rhs_p_ln_antiderivative;
use kpell_core::{rhs_exact, BigRational, RingRat, Status, Theorem};
use num_traits::Signed;

fn k_range() -> std::ops::RangeInclusive<u64> {
    1..=10
}

#[test]
fn r_zero_collapses_to_the_plain_theorems() {
    for k in k_range() {
        for l in 0..=8 {
            for n in 0..=8 {
                let p_lnr = rhs_exact(&Theorem::p_lnr(k, l, n, 0).unwrap()).unwrap();
                let p_ln = rhs_exact(&Theorem::p_ln(k, l, n).unwrap()).unwrap();
                assert_eq!(p_lnr, p_ln, "k={k} l={l} n={n}");
                let q_lnr = rhs_exact(&Theorem::q_lnr(k, l, n, 0).unwrap()).unwrap();
                let q_ln = rhs_exact(&Theorem::q_ln(k, l, n).unwrap()).unwrap();
                assert_eq!(q_lnr, q_ln, "k={k} l={l} n={n}");
            }
        }
    }
}

#[test]
fn even_representation_is_p_ln_at_l_two() {
    for k in k_range() {
        for n in 0..=20 {
            assert_eq!(
                rhs_exact(&Theorem::p_even(k, n).unwrap()).unwrap(),
                rhs_exact(&Theorem::p_ln(k, 2, n).unwrap()).unwrap(),
            );
        }
    }
}

#[test]
fn odd_representation_from_the_recurrence_step() {
    // P(2n+1) = (P(2n+2) - k P(2n)) / 2, taken on the right-hand sides
    for k in k_range() {
        for n in 0..=20 {
            let odd = rhs_exact(&Theorem::p_odd(k, n).unwrap()).unwrap();
            let next = rhs_exact(&Theorem::p_even(k, n + 1).unwrap()).unwrap();
            let even = rhs_exact(&Theorem::p_even(k, n).unwrap()).unwrap();
            let combo = (&next - &even.scale(&BigRational::from_integer(k.into())))
                .scale(&BigRational::new(1.into(), 2.into()));
            assert_eq!(odd, combo, "k={k} n={n}");
        }
    }
}

#[test]
fn antiderivative_and_expansion_agree_on_larger_n() {
    for k in [1u64, 3, 4, 8, 17] {
        for l in 1..=5 {
            for n in [1u64, 2, 9, 25, 40] {
                let alt = rhs_p_ln_antiderivative(k, l, n).unwrap().unwrap();
                assert_eq!(alt, rhs_exact(&Theorem::p_ln(k, l, n).unwrap()).unwrap());
            }
        }
    }
}

#[test]
fn numeric_agrees_with_exact() {
    let limit = float_exact_limit();
    let mut compared = 0;
    for k in k_range() {
        for l in 0..=8 {
            for n in 0..=8 {
                for r in 0..=8 {
                    let th = Theorem::q_lnr(k, l, n, r).unwrap();
                    if th.lhs().abs() > limit {
                        continue;
                    }
                    let exact = rhs_exact(&th).unwrap().to_f64();
                    let numeric = rhs_numeric(&th).unwrap();
                    let rel = (numeric - exact).abs() / exact.abs().max(1.0);
                    assert!(rel <= 1e-11, "{th}: {numeric} vs {exact}");
                    compared += 1;
                }
            }
        }
    }
    assert!(compared > 1000);
}

#[test]
fn skip_is_exactly_the_overflow_boundary() {
    let limit = float_exact_limit();
    let first_above = (1..).find(|&n| kpell_core::kpell(1, n).unwrap() > limit).unwrap();
    let below = Theorem::p_ln(1, 1, first_above - 1).unwrap();
    let above = Theorem::p_ln(1, 1, first_above).unwrap();
    assert_eq!(verify_numeric(&below, DEFAULT_TOLERANCE).unwrap().status, Status::Pass);
    assert_eq!(verify_numeric(&above, DEFAULT_TOLERANCE).unwrap().status, Status::SkippedOverflow);
}

#[test]
fn rule_degree_is_tight() {
    for m in 1..=20usize {
        let rule = legendre_rule(m).unwrap();
        let j = 2 * m as i32;
        let got = rule.integrate(|x| x.powi(j));
        let want = 2.0 / (j as f64 + 1.0);
        assert!((got - want).abs() / want > 1e-13, "m={m}");
    }
}

#[test]
fn ring_evaluation_matches_float() {
    let x = RingRat::new(BigRational::new(3.into(), 2.into()), BigRational::from_integer(2.into()), 5);
    assert!((x.to_f64() - (1.5 + 2.0 * 5f64.sqrt())).abs() < 1e-15);
}
