use num_bigint::BigInt;
use proptest::prelude::*;

use super::*;
use crate::corpus::{double_line, intersection, rational_curve};
use crate::error::Error;

fn big(x: i64) -> BigInt {
    BigInt::from(x)
}

fn inv_c(e: i64, adeg: i64, d: u64) -> Invariants {
    Invariants { e: Some(big(e)), adeg: Some(big(adeg)), d: Some(d), ..Default::default() }
}

fn inv_delta(deltas: &[u64], c: u64, d: u64) -> Invariants {
    Invariants { deltas: Some(deltas.to_vec()), c: Some(c), d: Some(d), ..Default::default() }
}

#[test]
fn worked_values() {
    assert_eq!(eval_bound("C4", &inv_c(2, 2, 2)).unwrap(), big(3));
    assert_eq!(eval_bound("E1", &inv_delta(&[2, 2], 2, 2)).unwrap(), big(25));
    let f3 = Invariants { m: Some(big(2)), alpha: Some(1), beta: Some(1), index: Some(2), ..Default::default() };
    assert_eq!(eval_bound("F3", &f3).unwrap(), big(4096));
}

#[test]
fn curve_of_degree_six() {
    // m = 15 + 6 = 21 and [2^{-1}] = 0.
    let inv = inv_c(6, 6, 2);
    assert_eq!(eval_bound("C6ii", &inv).unwrap(), big(15));
    assert_eq!(eval_bound("C6i", &inv).unwrap(), big(20));
    assert_eq!(eval_bound("C7", &inv).unwrap(), big(6));
    let d3 = inv_c(6, 6, 3);
    assert_eq!(eval_bound("C6ii", &d3).unwrap(), big(21 * 21 - 6 * 21));
}

#[test]
fn missing_invariants_are_errors() {
    let err = eval_bound("C4", &Invariants { e: Some(big(2)), d: Some(2), ..Default::default() }).unwrap_err();
    assert_eq!(err, Error::IncompleteInput("adeg".into()));
    assert!(matches!(eval_bound("E1", &Invariants::default()), Err(Error::IncompleteInput(_))));
    assert!(matches!(eval_bound("nonsense", &Invariants::default()), Err(Error::InvalidInput(_))));
    assert!(matches!(eval_bound("C4", &inv_c(2, 2, 1)), Err(Error::InvalidInput(_))));
}

#[test]
fn coefficient_bounds() {
    // The intersection with n = 4, c = 2, r = 3: pi = 9, reg I = 6.
    let base = Invariants {
        n: Some(4),
        d: Some(2),
        c: Some(2),
        deltas: Some(vec![3, 3, 3, 3]),
        adeg: Some(big(4)),
        reg: Some(5),
        index: Some(1),
        ..Default::default()
    };
    assert_eq!(eval_bound("B3b", &base).unwrap(), big(54));
    // 3/2 min{4^3, 4 * 3^3} = 96.
    assert_eq!(eval_bound("B7", &base).unwrap(), big(96));
    assert_eq!(eval_bound("I3", &base).unwrap(), eval_bound("B3", &base).unwrap());
    assert_eq!(eval_bound("B3", &base).unwrap(), big(16 * 6));
    let two = Invariants { index: Some(2), ..base.clone() };
    assert_eq!(eval_bound("B3", &two).unwrap(), big(16 * 36 * 3 / 2));
    let odd = Invariants { adeg: Some(big(3)), c: Some(1), index: Some(2), ..base };
    // floor(3/2 * 3 * 36) = 162, and floor(3/2 * 3 * 49) with reg I = 7.
    assert_eq!(eval_bound("B3", &odd).unwrap(), big(162));
    let odd7 = Invariants { reg: Some(6), ..odd };
    assert_eq!(eval_bound("B3", &odd7).unwrap(), big(220));
}

#[test]
fn strict_and_rounded_forms() {
    // Delta = 2, c = 1: (3/2) 2 + 2 = 5 exactly, so the strict bound is 5^3 - 1.
    let inv = Invariants { index: Some(1), ..inv_delta(&[2], 1, 2) };
    assert_eq!(eval_bound("E7", &inv).unwrap(), big(124));
    // Delta = 3, c = 1, d = 1: floor(7.5).
    assert_eq!(eval_bound("F4i", &inv_delta(&[3], 1, 1)).unwrap(), big(7));
    // d = 2: floor(7.5^4) = floor(3164.0625); the strict bound at i = 1 is
    // the largest integer below 7.5^3 = 421.875.
    assert_eq!(eval_bound("F4i", &inv_delta(&[3], 1, 2)).unwrap(), big(3164));
    let e7 = Invariants { index: Some(1), ..inv_delta(&[3], 1, 2) };
    assert_eq!(eval_bound("E7", &e7).unwrap(), big(421));
    assert_eq!(f4_base(&inv_delta(&[3], 1, 2)).unwrap(), big(8));
}

#[test]
fn pointwise_cohomology_bounds() {
    // b = min{pi, adeg^c}.
    let inv = Invariants { adeg: Some(big(2)), t: Some(3), reg: Some(4), index: Some(1), e: Some(big(3)), ..inv_delta(&[2, 2], 2, 3) };
    // (4 - 1) * binom(4, 2) + binom(5, 2) with b = 4.
    assert_eq!(eval_bound("D1", &inv).unwrap(), big(3 * 6 + 10));
    assert_eq!(eval_bound("A4i", &inv).unwrap(), big(18));
    // (b - 1) binom(4 + 3 - 1 - 2, 1) binom(1, 1).
    assert_eq!(eval_bound("A4ii", &inv).unwrap(), big(3 * 4));
    assert_eq!(eval_bound("A4iii", &Invariants { t: Some(1), ..inv.clone() }).unwrap(), big(3));
    assert!(eval_bound("A4iii", &Invariants { t: Some(4), ..inv }).is_err());
}

#[test]
fn section_e_small_dimension() {
    let inv = inv_delta(&[3, 2, 2], 2, 1);
    assert_eq!(sigma(&inv).unwrap(), big(3));
    assert_eq!(pi(&inv).unwrap(), big(6));
    assert_eq!(eval_bound("E2", &inv).unwrap(), big(5));
    assert_eq!(eval_bound("E3", &inv).unwrap(), big(5));
    assert_eq!(eval_bound("E5i", &inv).unwrap(), big(7));
    assert_eq!(eval_bound("E5ii", &inv).unwrap(), big(8 - 1));
}

#[test]
fn f3_reproduces_f4_shape() {
    for d in 1..=4u64 {
        for (delta, c) in [(2u64, 1u64), (2, 2), (4, 1), (3, 1), (3, 2), (5, 3)] {
            let inv = inv_delta(&vec![delta; c as usize], c, d);
            let m = f4_base(&inv).unwrap();
            let f3 = Invariants { m: Some(m), alpha: Some(1), beta: Some(1), index: Some(d - 1), ..Default::default() };
            let via_f3 = eval_bound("F3", &f3).unwrap();
            let f4 = eval_bound("F4i", &inv).unwrap();
            if delta % 2 == 0 {
                assert_eq!(via_f3, f4, "delta {delta}, c {c}, d {d}");
            } else {
                assert!(f4 <= via_f3);
            }
        }
    }
}

#[test]
fn spec_table_covers_names() {
    for s in BOUND_SPECS {
        assert!(spec(s.name).is_some());
    }
    assert_eq!(spec("I2i").unwrap().name, "F4i");
    assert!(spec("zzz").is_none());
}

proptest! {
    #[test]
    fn c4_monotone(e in 1i64..8, adeg in 1i64..8, d in 2u64..5) {
        let adeg = adeg.max(e);
        let here = eval_bound("C4", &inv_c(e, adeg, d)).unwrap();
        prop_assert!(here <= eval_bound("C4", &inv_c(e, adeg + 1, d)).unwrap());
        prop_assert!(here <= eval_bound("C4", &inv_c(e + 1, adeg + 1, d)).unwrap());
        prop_assert!(here <= eval_bound("C4", &inv_c(e, adeg, d + 1)).unwrap());
    }

    #[test]
    fn e1_monotone_in_each_degree(ds in proptest::collection::vec(1u64..6, 1..4), k in 0usize..3, d in 1u64..4) {
        let c = ds.len() as u64;
        let here = eval_bound("E1", &inv_delta(&ds, c, d)).unwrap();
        let mut up = ds.clone();
        let k = k % up.len();
        up[k] += 1;
        prop_assert!(here <= eval_bound("E1", &inv_delta(&up, c, d)).unwrap());
    }

    #[test]
    fn delta_bounds_monotone(delta in 2u64..7, c in 1u64..4, d in 1u64..4, i in 1u64..3) {
        let here = inv_delta(&vec![delta; c as usize], c, d);
        let up = inv_delta(&vec![delta + 1; c as usize], c, d);
        for name in ["F4i", "E5i", "E5ii", "E2", "E3"] {
            prop_assert!(eval_bound(name, &here).unwrap() <= eval_bound(name, &up).unwrap(), "{}", name);
        }
        let with_i = |v: &Invariants| Invariants { index: Some(i), ..v.clone() };
        for name in ["E7", "E7i"] {
            prop_assert!(eval_bound(name, &with_i(&here)).unwrap() <= eval_bound(name, &with_i(&up)).unwrap());
        }
    }

    #[test]
    fn hilbert_function_bound_monotone_in_t(delta in 1u64..5, c in 1u64..3, d in 1u64..4, t in 0i64..12) {
        let inv = Invariants { t: Some(t), ..inv_delta(&vec![delta; c as usize], c, d) };
        let next = Invariants { t: Some(t + 1), ..inv.clone() };
        prop_assert!(eval_bound("D1", &inv).unwrap() <= eval_bound("D1", &next).unwrap());
    }
}

#[test]
fn explorer_small_cases() {
    let r = finiteness_explorer(2, 1, 1).unwrap();
    assert_eq!((r.ideals, r.functions.len()), (2, 1));
    // Unions of at most two coordinate points of P^2, plus single points.
    let r = finiteness_explorer(3, 2, 1).unwrap();
    assert_eq!(r.ideals, 3 + 3);
    assert_eq!(r.functions.len(), 2);
    assert!(r.c4_bound.is_none());
    let r = finiteness_explorer(3, 3, 2).unwrap();
    assert!(r.within_c4);
    assert!(finiteness_explorer(7, 1, 1).is_err());
}

#[test]
fn double_line_audit() {
    let entry = double_line(3).unwrap();
    let report = audit(&AuditInput::from_entry(&entry).unwrap(), &AuditOptions::default()).unwrap();
    let inv = &report.invariants;
    assert_eq!((inv.reg, inv.e.clone(), inv.adeg.clone()), (Some(3), big(2), Some(big(2))));
    // P(s) = 2s + 4 = 2 binom(s + 1, 1) - e_1, so e_1 = 1 - t.
    assert_eq!(inv.e_list, vec![big(2), big(-2)]);
    let c4 = report.entry("C4").unwrap();
    assert!(!c4.hypotheses_met);
    assert_eq!((c4.bound.clone(), c4.actual.clone()), (Some(big(3)), Some(big(4))));
    let c6 = report.entry("C6i").unwrap();
    assert_eq!((c6.bound.clone(), c6.actual.clone(), c6.satisfied), (Some(big(2)), Some(big(3)), Some(false)));
    let b3 = report.entry("B3[i=1]").unwrap();
    assert!(b3.hypotheses_met);
    assert_eq!((b3.bound.clone(), b3.actual.clone(), b3.satisfied), (Some(big(16)), Some(big(2)), Some(true)));
    assert!(report.violations().is_empty(), "{:?}", report.violations());
}

#[test]
fn intersection_audit() {
    let entry = intersection(4, 2, 3).unwrap();
    let report = audit(&AuditInput::from_entry(&entry).unwrap(), &AuditOptions::default()).unwrap();
    assert_eq!(report.invariants.reg, Some(5));
    assert_eq!(report.invariants.e_list, vec![big(1), big(-16)]);
    for name in ["B3b[i=1]", "B7[i=1]"] {
        let b = report.entry(name).unwrap();
        assert!(b.hypotheses_met && b.satisfied == Some(true), "{b:?}");
    }
    assert!(report.violations().is_empty(), "{:?}", report.violations());
    assert!(report.errors.is_empty(), "{:?}", report.errors);
}

#[test]
fn rational_curve_audit() {
    let entry = rational_curve(6).unwrap();
    let report = audit(&AuditInput::from_entry(&entry).unwrap(), &AuditOptions::default()).unwrap();
    let c7 = report.entry("C7").unwrap();
    assert!(c7.hypotheses_met && c7.satisfied == Some(true));
    assert_eq!(c7.bound, Some(big(6)));
    let c6 = report.entry("C6ii").unwrap();
    assert_eq!((c6.bound.clone(), c6.actual.clone()), (Some(big(15)), Some(big(4))));
    assert!(report.violations().is_empty(), "{:?}", report.violations());
}

#[test]
fn report_round_trips() {
    let entry = double_line(2).unwrap();
    let report = audit(&AuditInput::from_entry(&entry).unwrap(), &AuditOptions::default()).unwrap();
    let text = serde_json::to_string(&report).unwrap();
    let back: BoundReport = serde_json::from_str(&text).unwrap();
    assert_eq!(back, report);
}
