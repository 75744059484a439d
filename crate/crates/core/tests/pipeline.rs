use std::path::PathBuf;

use num_bigint::BigInt;

use cmreg::bounds::{audit, AuditOptions};
use cmreg::cohomology::{cohomology, RegOptions};
use cmreg::groebner::GbOptions;
use cmreg::hilbert::{brute_force_hilbert, hilbert_of_ideal};
use cmreg::io::{IdealFile, ReportDocument, Seeds};
use cmreg::ring::TermOrder;

fn load(name: &str) -> IdealFile {
    let p = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../corpus").join(name);
    IdealFile::parse(&std::fs::read_to_string(p).unwrap(), true).unwrap()
}

#[test]
fn pentagon_end_to_end() {
    let f = load("pentagon.ideal");
    let i = f.ideal(&GbOptions::default()).unwrap();
    // A cycle with five vertices and five edges: H(t) = 5t for t >= 1.
    let hs = hilbert_of_ideal(&i, &TermOrder::GrevLex).unwrap();
    for t in 0..8u64 {
        let want = BigInt::from(if t == 0 { 1 } else { 5 * t });
        assert_eq!(hs.value(t), want);
        assert_eq!(brute_force_hilbert(&i, t).unwrap(), want);
    }
    // Connected, with one loop: h^1 = 0 and h^2(0) = 1.
    let (table, _, _) = cohomology(&i, Some((-2, 3)), &RegOptions::default()).unwrap();
    assert!(table.h[1].iter().all(|v| *v == BigInt::from(0)));
    assert_eq!(table.value(2, 0), Some(&BigInt::from(1)));
    assert_eq!(table.regularity(), 2);
}

#[test]
fn corpus_files_match_their_expected_blocks() {
    for name in ["pentagon.ideal", "double_line_t3.ideal", "rational_curve_e6.ideal", "intersection_n4c2r3.ideal"] {
        let f = load(name);
        let input = f.audit_input(name, &GbOptions::default()).unwrap();
        let r = audit(&input, &AuditOptions::default()).unwrap();
        for (k, v) in &f.expected {
            let got = match k.as_str() {
                "n" => serde_json::json!(r.invariants.n),
                "d" => serde_json::json!(r.invariants.d),
                "e" => serde_json::json!(r.invariants.e.to_string().parse::<i64>().unwrap()),
                "adeg" => serde_json::json!(r.invariants.adeg.as_ref().map(|a| a.to_string().parse::<i64>().unwrap())),
                "reg" => serde_json::json!(r.invariants.reg),
                _ => continue,
            };
            assert_eq!(&got, v, "{name}: {k}");
        }
        assert!(r.violations().is_empty(), "{name}: {:?}", r.violations());
    }
}

#[test]
fn report_document_survives_a_round_trip() {
    let reports: Vec<_> = ["pentagon.ideal", "twisted_cubic.ideal"]
        .iter()
        .map(|n| audit(&load(n).audit_input(n, &GbOptions::default()).unwrap(), &AuditOptions::default()).unwrap())
        .collect();
    let doc = ReportDocument::new(Seeds { seed: 0, trials: 3 }, reports, Default::default());
    let back = ReportDocument::parse(&doc.render()).unwrap();
    assert_eq!(back.render(), doc.render());
    assert_eq!(back.violations(), 0);
}
