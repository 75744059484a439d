use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

use super::*;
use crate::bounds::{audit, AuditOptions, Reducedness};
use crate::corpus::{named_entries, Recipe};
use crate::error::Error;
use crate::groebner::GbOptions;
use crate::ring::{Coeff, FieldSpec, Monomial, Polynomial, Ring, TermOrder};

fn names(list: &[&str]) -> Vec<String> {
    list.iter().map(|s| s.to_string()).collect()
}

#[test]
fn principal_ideal() {
    let f = parse_ideal_file("ring: Q\nvars: x y\ngens:\n x^2 - y^2", true).unwrap();
    assert_eq!(f.gens.len(), 1);
    assert_eq!(f.gens[0].num_terms(), 2);
    let i = f.ideal(&GbOptions::default()).unwrap();
    assert_eq!(i.generators().len(), 1);
    assert_eq!(i.display_generators(), vec!["x^2 - y^2".to_string()]);
}

#[test]
fn coefficients_reduce_mod_p() {
    let f = parse_ideal_file("ring: GF(7)\nvars: x\ngens:\n 8*x", true).unwrap();
    let r = Ring::new(1, FieldSpec::Prime(7));
    assert_eq!(f.gens, vec![Polynomial::var(r, 0)]);
    let g = parse_ideal_file("ring: GF(7)\nvars: x y\ngens:\n 1/2 x - 4*y", true).unwrap();
    assert_eq!(g.gens[0].coeff(&Monomial::var(2, 0)), Coeff::Mod(4));
    assert_eq!(g.gens[0].coeff(&Monomial::var(2, 1)), Coeff::Mod(3));
}

#[test]
fn rational_coefficients() {
    let f = parse_polynomial("-3/6*x*y^2 + 2 y^3", Ring::rationals(2), &names(&["x", "y"])).unwrap();
    let half = Coeff::Rat(BigRational::new(BigInt::from(-1), BigInt::from(2)));
    assert_eq!(f.coeff(&Monomial::new(vec![1, 2])), half);
    assert_eq!(f.coeff(&Monomial::new(vec![0, 3])), Coeff::Rat(BigRational::from_integer(2.into())));
}

#[test]
fn dangling_caret_reports_column() {
    let err = parse_ideal_file("ring: Q\nvars: x\ngens:\n  x^", true).unwrap_err();
    assert_eq!(err, Error::Syntax { line: 4, col: 5, msg: "expected an exponent after '^'".into() });
}

#[test]
fn syntax_errors_are_located() {
    let err = parse_ideal_file("ring: Q\nvars: x y\ngens:\n  x*z", true).unwrap_err();
    assert!(matches!(err, Error::Syntax { line: 4, col: 5, .. }), "{err:?}");
    let err = parse_ideal_file("ring: Q\nvars: x y\ngens:\n  x y", true).unwrap_err();
    assert!(matches!(err, Error::Syntax { line: 4, col: 5, .. }), "{err:?}");
    let err = parse_ideal_file("ring: Q\nvars: x y\ngens:\n  x + + y", true).unwrap_err();
    assert!(matches!(err, Error::Syntax { line: 4, .. }), "{err:?}");
    let err = parse_ideal_file("ring: R\nvars: x\ngens:\n x", true).unwrap_err();
    assert!(matches!(err, Error::Syntax { line: 1, col: 7, .. }), "{err:?}");
    let err = parse_ideal_file("vars: x\ngens:\n x", true).unwrap_err();
    assert_eq!(err.code(), "E_SYNTAX");
}

#[test]
fn non_homogeneous_generator_names_term() {
    let err = parse_ideal_file("ring: Q\nvars: x y z\ngens:\n  x*y\n  y - x^3 + z^3", true).unwrap_err();
    assert_eq!(err, Error::NonHomogeneous("- x^3 (line 5, column 5)".into()));
    assert_eq!(err.code(), "E_NONHOMOGENEOUS");
    // Cancelled terms do not count.
    let f = parse_ideal_file("ring: Q\nvars: x y\ngens:\n  x + x^2 - x", true).unwrap();
    assert!(f.gens[0].is_homogeneous());
}

#[test]
fn unknown_keys() {
    let text = "ring: Q\nvars: x\ncolour: blue\ngens:\n x";
    let err = parse_ideal_file(text, true).unwrap_err();
    assert!(matches!(err, Error::Syntax { line: 3, col: 1, .. }));
    let f = parse_ideal_file(text, false).unwrap();
    assert_eq!(f.warnings.len(), 1);
}

#[test]
fn comments_orders_and_expected_block() {
    let text = "# a plane conic\nid: conic\nring: Q\nvars: x y z   # three\norder: block(1)\nreduced: yes\ngens:\n  x*z - y^2\nexpected:\n  e: 2\n  P: \"2t + 1\"\n  h: [1, 1]\n";
    let f = parse_ideal_file(text, true).unwrap();
    assert_eq!(f.id.as_deref(), Some("conic"));
    assert_eq!(f.order, Some(TermOrder::Block(1)));
    assert_eq!(f.reduced, Some(Reducedness::Asserted));
    assert_eq!(f.expected["e"], serde_json::json!(2));
    assert_eq!(f.expected["P"], serde_json::json!("2t + 1"));
    assert_eq!(f.expected["h"], serde_json::json!([1, 1]));
    let g = parse_ideal_file(&f.render(), true).unwrap();
    assert_eq!(g.render(), f.render());
    assert!(parse_ideal_file("ring: Q\nvars: x x\ngens:\n x", true).is_err());
    assert!(parse_ideal_file("ring: Q\nvars: x\norder: block(3)\ngens:\n x", true).is_err());
}

#[test]
fn named_entries_round_trip_through_files() {
    let opts = GbOptions::default();
    for entry in named_entries().unwrap() {
        let text = IdealFile::from_entry(&entry).render();
        let f = parse_ideal_file(&text, true).unwrap();
        let back = f.corpus_entry("unused", &opts).unwrap();
        assert_eq!(back.id, entry.id);
        assert_eq!(back.recipe, entry.recipe);
        let order = TermOrder::GrevLex;
        assert_eq!(back.ideal.gb(&order).unwrap().generators(), entry.ideal.gb(&order).unwrap().generators());
    }
}

#[test]
fn recipe_must_match_generators() {
    let text = "ring: Q\nvars: x y u v\nrecipe: double_line t=2\ngens:\n  x^2\n  x*y\n  y^2\n  x*u^3 + y*v^3\n";
    let err = parse_ideal_file(text, true).unwrap().corpus_entry("dl", &GbOptions::default()).unwrap_err();
    assert_eq!(err.code(), "E_INPUT");
    assert!(parse_recipe("double_line").is_err());
    assert!(parse_recipe("double_line t=1 s=2").is_err());
    assert_eq!(parse_recipe("intersection n=4 c=2 r=3").unwrap(), Recipe::Intersection { n: 4, c: 2, r: 3 });
}

#[test]
fn report_document_round_trips() {
    let entry = crate::corpus::intersection(4, 2, 3).unwrap();
    let input = crate::bounds::AuditInput::from_entry(&entry).unwrap();
    let report = audit(&input, &AuditOptions::default()).unwrap();
    let mut timings = std::collections::BTreeMap::new();
    timings.insert(report.id.clone(), 12.5);
    let doc = ReportDocument::new(Seeds { seed: 0, trials: 3 }, vec![report], timings);
    let text = doc.render();
    assert_eq!(ReportDocument::parse(&text).unwrap(), doc);
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    for key in ["version", "seeds", "ideals", "timings"] {
        assert!(v.get(key).is_some(), "{key}");
    }
    let inv = &v["ideals"][0]["invariants"];
    for key in [
        "n", "d", "c", "delta", "deltas", "e", "e_list", "adeg", "adeg_source", "reg", "reg_confidence", "B_colength",
        "gotzmann_c", "B_list", "postulation",
    ] {
        assert!(inv.get(key).is_some(), "{key}");
    }
    let bound = &v["ideals"][0]["bounds"][0];
    for key in ["name", "hypotheses_met", "bound", "actual", "satisfied", "slack"] {
        assert!(bound.get(key).is_some(), "{key}");
    }
    assert_eq!(doc.without_timings().timings.len(), 0);
    assert!(ReportDocument::parse("{\"version\": 9}").is_err());
}

fn arb_homogeneous(n: usize) -> impl Strategy<Value = Vec<Polynomial>> {
    let poly = (1u32..4).prop_flat_map(move |deg| {
        let monos = crate::ring::monomials_of_degree(n, deg);
        let k = monos.len();
        proptest::collection::vec((0..k, -4i64..5, 1i64..4), 1..5).prop_map(move |ts| {
            Polynomial::from_terms(
                Ring::rationals(n),
                ts.into_iter().map(|(m, a, b)| (monos[m].clone(), Coeff::Rat(BigRational::new(a.into(), b.into())))),
            )
            .unwrap()
        })
    });
    proptest::collection::vec(poly, 1..4)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn render_parse_preserves_the_ideal(gens in arb_homogeneous(3)) {
        let ring = Ring::rationals(3);
        let ideal = crate::groebner::IdealHandle::new(ring, gens).unwrap();
        let text = IdealFile::from_ideal(&ideal).render();
        let back = parse_ideal_file(&text, true).unwrap().ideal(&GbOptions::default()).unwrap();
        prop_assert_eq!(back.generators(), ideal.generators());
        let order = TermOrder::GrevLex;
        let (a, b) = (back.gb(&order).unwrap(), ideal.gb(&order).unwrap());
        prop_assert_eq!(a.generators(), b.generators());
    }
}
