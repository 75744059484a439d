use num_bigint::BigInt;
use num_traits::Zero;
use proptest::prelude::*;

use super::*;
use crate::groebner::IdealHandle;
use crate::monomial::MonomialIdeal;
use crate::ring::{monomials_of_degree, FieldSpec, Monomial, Ring};

fn mono(n: usize, rows: &[&[u32]]) -> MonomialIdeal {
    MonomialIdeal::from_exponents(n, &rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).unwrap()
}

fn big(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

/// Strongly stable closure of some monomials.
fn borel_closure(n: usize, seeds: Vec<Monomial>) -> MonomialIdeal {
    let mut all = seeds;
    let mut k = 0;
    while k < all.len() {
        let m = all[k].clone();
        for j in 1..n {
            if m.exps()[j] == 0 {
                continue;
            }
            for i in 0..j {
                let moved = m.with_exp(j, m.exps()[j] - 1).with_exp(i, m.exps()[i] + 1);
                if !all.contains(&moved) {
                    all.push(moved);
                }
            }
        }
        k += 1;
    }
    MonomialIdeal::new(n, all)
}

/// `x_i -> x_i^q`, which keeps the Borel-type property.
fn frobenius(i: &MonomialIdeal, q: u32) -> MonomialIdeal {
    MonomialIdeal::new(
        i.nvars(),
        i.generators().iter().map(|g| Monomial::new(g.exps().iter().map(|e| e * q).collect())).collect(),
    )
}

/// `l((J^sat / J)_u)` by listing monomials.
fn counted_lengths(step: &ChainStep, upto: u32) -> Vec<BigInt> {
    (0..=upto)
        .map(|u| {
            let c = monomials_of_degree(step.n, u)
                .into_iter()
                .filter(|m| step.j_sat.contains(m) && !step.j.contains(m))
                .count();
            BigInt::from(c)
        })
        .collect()
}

#[test]
fn coordinate_hyperplane() {
    let i = mono(2, &[&[1, 0]]);
    let c = borel_chain(&i).unwrap();
    assert_eq!(c.l(), 0);
    assert_eq!(c.steps[0].n, 1);
    assert!(c.steps[0].j_sat.is_unit());
    assert_eq!(c.steps[0].total_length(), BigInt::from(1));
    let t = local_cohomology(&i, Some((-4, 2))).unwrap();
    for s in -4..=2 {
        let want = if s <= -1 { 1 } else { 0 };
        assert_eq!(t.value(1, s).unwrap(), &BigInt::from(want), "t = {s}");
    }
    assert_eq!(t.regularity(), 0);
}

#[test]
fn embedded_point_on_a_line() {
    let i = mono(2, &[&[2, 0], &[1, 1]]);
    let c = borel_chain(&i).unwrap();
    assert_eq!(c.l(), 1);
    assert_eq!(c.steps[0].n, 2);
    assert_eq!(c.steps[1].ideal, mono(2, &[&[1, 0]]));
    assert_eq!(c.steps[0].lengths, big(&[0, 1]));
    assert_eq!(c.steps[1].lengths, big(&[1]));
    let t = local_cohomology(&i, Some((-5, 4))).unwrap();
    for s in -5..=4 {
        assert_eq!(t.value(0, s).unwrap(), &BigInt::from((s == 1) as i64));
        assert_eq!(t.value(1, s).unwrap(), &BigInt::from((s <= -1) as i64));
    }
    assert_eq!(t.a, vec![Some(1), Some(-1)]);
    assert_eq!(t.regularity(), 1);
    let g = gs_check(&i, (-5, 4)).unwrap();
    assert!(g.passed);
    let cert = monomial_regularity(&i, &FieldSpec::Rationals, RegStrategy::Auto).unwrap();
    assert_eq!(cert.reg_ideal(), 2);
    assert!(cert.cross_checked);
}

#[test]
fn chain_lengths_match_enumeration() {
    for i in [
        mono(2, &[&[2, 0], &[1, 1], &[0, 3]]),
        mono(3, &[&[2, 0, 0], &[1, 1, 0], &[0, 2, 0], &[1, 0, 1]]),
        frobenius(&mono(3, &[&[1, 0, 0], &[0, 2, 0], &[0, 1, 1]]), 2),
    ] {
        let c = borel_chain(&i).unwrap();
        for s in &c.steps {
            let end = s.end().unwrap();
            assert_eq!(counted_lengths(s, end as u32 + 3)[..s.lengths.len()], s.lengths[..], "{i}");
            assert!(counted_lengths(s, end as u32 + 3)[s.lengths.len()..].iter().all(|x| x.is_zero()));
        }
    }
}

#[test]
fn last_module_has_length_e() {
    let i = mono(3, &[&[2, 0, 0], &[1, 1, 0], &[0, 3, 0]]);
    let c = borel_chain(&i).unwrap();
    let e = crate::hilbert::series(&i).degree();
    assert_eq!(c.steps.last().unwrap().total_length(), e);
    assert_eq!(c.codim(), 2);
}

#[test]
fn zero_ideal_and_polynomial_ring() {
    let i = MonomialIdeal::zero(3);
    let t = local_cohomology(&i, Some((-6, 3))).unwrap();
    assert_eq!(t.dim, 3);
    // H^3 of K[x,y,z] has dimension binom(-t-1, 2) in degree t.
    assert_eq!(t.value(3, -3).unwrap(), &BigInt::from(1));
    assert_eq!(t.value(3, -5).unwrap(), &BigInt::from(6));
    assert_eq!(t.regularity(), 0);
    assert!(gs_check(&i, (-6, 3)).unwrap().passed);
}

#[test]
fn example_b4_regularity() {
    let i = mono(4, &[&[3, 0, 0, 0], &[0, 3, 0, 0], &[1, 0, 2, 0], &[0, 1, 2, 0]]);
    assert!(i.is_borel_type());
    let cert = monomial_regularity(&i, &FieldSpec::Rationals, RegStrategy::Hpv).unwrap();
    assert_eq!(cert.reg, 5);
    let k = monomial_regularity(&i, &FieldSpec::Rationals, RegStrategy::Koszul).unwrap();
    assert_eq!(k.reg, 5);
}

#[test]
fn koszul_betti_of_complete_intersection() {
    let i = mono(4, &[&[1, 1, 0, 0], &[0, 0, 1, 1]]);
    let b = graded_betti(&i, &FieldSpec::Rationals).unwrap();
    let listed: Vec<_> = b.into_iter().collect();
    assert_eq!(listed, vec![((0, 2), 2), ((1, 4), 1)]);
    assert_eq!(betti_regularity(&i, &FieldSpec::Rationals).unwrap(), Some(3));
}

#[test]
fn hochster_agrees_with_chain_on_linear_ideals() {
    let w = (-6, 3);
    for i in [mono(3, &[&[1, 0, 0], &[0, 1, 0]]), MonomialIdeal::zero(2), mono(4, &[&[1, 0, 0, 0]])] {
        assert!(i.is_borel_type() && i.is_squarefree());
        let a = local_cohomology(&i, Some(w)).unwrap();
        let b = hochster(&i, &FieldSpec::Rationals).unwrap().table(w);
        assert_eq!(a, b, "{i}");
    }
}

#[test]
fn hochster_on_a_square_cycle() {
    // Four-cycle x1x3, x2x4: R/I is Cohen-Macaulay of dimension 2.
    let i = mono(4, &[&[1, 0, 1, 0], &[0, 1, 0, 1]]);
    let hs = hochster(&i, &FieldSpec::Rationals).unwrap();
    assert_eq!(hs.dim, 2);
    assert_eq!(hs.a(0), None);
    assert_eq!(hs.a(1), None);
    let t = hs.table((-8, 3));
    assert_eq!(t.a[2], Some(0));
    assert_eq!(t.regularity(), 2);
    assert!(gs_check_table(&i, &t).passed);
}

#[test]
fn strategies_and_pipeline() {
    let ring = Ring::rationals(2);
    let i = IdealHandle::from_monomial(ring, &mono(2, &[&[2, 0], &[1, 1]])).unwrap();
    let c = regularity(&i, RegStrategy::Auto, &RegOptions::default()).unwrap();
    assert_eq!((c.reg_ideal(), c.confidence), (2, Confidence::Exact));
    let g = regularity(&i, RegStrategy::Gin, &RegOptions::default()).unwrap();
    assert_eq!(g.method, RegMethod::GinPipeline);
    assert_eq!(g.reg, 1);
    let ne = mono(2, &[&[0, 2]]);
    assert!(matches!(monomial_regularity(&ne, &FieldSpec::Rationals, RegStrategy::Ek), Err(crate::Error::Hypothesis(_))));
    assert!(matches!(borel_chain(&ne), Err(crate::Error::Hypothesis(_))));
}

#[test]
fn section_of_zero_ideal() {
    let i = IdealHandle::new(Ring::rationals(2), Vec::new()).unwrap();
    let t = hyperplane_section(&i, 7).unwrap();
    assert_eq!(t.ring().nvars, 1);
    assert!(t.is_zero());
}

#[test]
fn simple_residual_identity() {
    // P - H at t = 1 for (x1^2, x1x2) is 1 - 2.
    let i = mono(2, &[&[2, 0], &[1, 1]]);
    let t = local_cohomology(&i, Some((1, 1))).unwrap();
    let lhs = BigInt::from(1 - 2);
    let rhs = -t.value(0, 1).unwrap() + t.value(1, 1).unwrap();
    assert_eq!(lhs, rhs);
}

fn arb_borel() -> impl Strategy<Value = MonomialIdeal> {
    (1usize..=4).prop_flat_map(|n| {
        (
            Just(n),
            prop::collection::vec(prop::collection::vec(0u32..=2, n), 1..=3),
            1u32..=2,
        )
            .prop_map(|(n, rows, q)| {
                let seeds: Vec<Monomial> = rows.into_iter().map(Monomial::new).filter(|m| !m.is_one()).collect();
                let seeds = if seeds.is_empty() { vec![Monomial::var(n, 0)] } else { seeds };
                frobenius(&borel_closure(n, seeds), q)
            })
    })
}

fn arb_squarefree() -> impl Strategy<Value = MonomialIdeal> {
    (2usize..=5).prop_flat_map(|n| {
        (Just(n), prop::collection::vec(1u32..(1 << n), 1..=4)).prop_map(|(n, masks)| {
            let gens = masks
                .into_iter()
                .filter(|m| m.count_ones() >= 2)
                .map(|m| Monomial::new((0..n).map(|v| m >> v & 1).collect()))
                .collect();
            MonomialIdeal::new(n, gens)
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn grothendieck_serre_holds(i in arb_borel()) {
        prop_assert!(i.is_borel_type());
        let check = gs_check(&i, (-8, 8)).unwrap();
        prop_assert!(check.passed, "{i}: {:?}", check.residuals);
    }

    #[test]
    fn stable_routes_agree(i in arb_borel()) {
        let k = FieldSpec::Rationals;
        let h = monomial_regularity(&i, &k, RegStrategy::Hpv).unwrap();
        let b = monomial_regularity(&i, &k, RegStrategy::Koszul).unwrap();
        prop_assert_eq!(h.reg, b.reg, "{}", i);
        if i.is_strongly_stable() {
            prop_assert!(h.cross_checked);
        }
    }

    #[test]
    fn hochster_satisfies_identity(i in arb_squarefree()) {
        let hs = hochster(&i, &FieldSpec::Rationals).unwrap();
        let t = hs.table((-8, 4));
        prop_assert!(gs_check_table(&i, &t).passed, "{}", i);
        let b = monomial_regularity(&i, &FieldSpec::Rationals, RegStrategy::Koszul).unwrap();
        prop_assert_eq!(t.regularity(), b.reg, "{}", i);
    }
}
