use homfly_core::exactalg::{
    a_bracket, quantum_bracket, ring_membership, z, LaurentQA, QFraction, Rational, RingSpec,
};
use proptest::prelude::*;

fn laurent() -> impl Strategy<Value = LaurentQA> {
    prop::collection::vec((-4i64..=4, -3i64..=3, -5i64..=5), 0..6).prop_map(|terms| {
        terms.into_iter().fold(LaurentQA::zero(), |acc, (qe, ae, c)| {
            &acc + &LaurentQA::monomial(Rational::from_integer(c.into()), qe, ae)
        })
    })
}

fn z2a_poly() -> impl Strategy<Value = (LaurentQA, Vec<(u32, i64, i64)>)> {
    prop::collection::vec((0u32..=3, -2i64..=2, -4i64..=4), 0..5).prop_map(|rows| {
        let z2 = z().pow(2);
        let poly = rows.iter().fold(LaurentQA::zero(), |acc, &(g, q, n)| {
            &acc + &z2.pow(g).shift(0, 1, 2 * q).scale_int(n)
        });
        (poly, rows)
    })
}

proptest! {
    #[test]
    fn ring_axioms(f in laurent(), g in laurent(), h in laurent()) {
        prop_assert_eq!(&f * &g, &g * &f);
        prop_assert_eq!(&(&f + &g) * &h, &(&f * &h) + &(&g * &h));
        prop_assert_eq!(&(&f * &g) * &h, &f * &(&g * &h));
        prop_assert!((&f - &f).is_zero());
    }

    #[test]
    fn exact_division_inverts_multiplication(f in laurent(), g in laurent()) {
        prop_assume!(!g.is_zero());
        prop_assert_eq!((&f * &g).exact_div(&g).unwrap(), f);
    }

    #[test]
    fn adams_is_a_ring_map(f in laurent(), g in laurent(), d in 1u32..=3) {
        prop_assert_eq!((&f * &g).adams(d), &f.adams(d) * &g.adams(d));
        prop_assert_eq!((&f + &g).adams(d), &f.adams(d) + &g.adams(d));
    }

    #[test]
    fn substitutions_are_involutions(f in laurent()) {
        prop_assert_eq!(f.invert_q().invert_q(), f.clone());
        prop_assert_eq!(f.invert_a().invert_a(), f.clone());
        let flipped = f.substitute_sign(true, true).unwrap();
        prop_assert_eq!(flipped.substitute_sign(true, true).unwrap(), f);
    }

    #[test]
    fn fraction_field_operations(f in laurent(), g in laurent(), k in 1i64..=4) {
        let a = QFraction::from(f.clone()).div_bracket(k).unwrap();
        let b = QFraction::from(g.clone()).div_bracket(1).unwrap();
        prop_assert_eq!(&(&a + &b) - &b, a.clone());
        prop_assert_eq!(a.mul_laurent(&quantum_bracket(k)), QFraction::from(f.clone()));
        if !g.is_zero() {
            prop_assert_eq!((&a * &b).div(&b).unwrap(), a);
        }
    }

    #[test]
    fn serde_round_trip(f in laurent(), k in 1i64..=3) {
        let json = serde_json::to_string(&f).unwrap();
        prop_assert_eq!(serde_json::from_str::<LaurentQA>(&json).unwrap(), f.clone());
        let q = QFraction::from(f).div_bracket(k).unwrap();
        let json = serde_json::to_string(&q).unwrap();
        prop_assert_eq!(serde_json::from_str::<QFraction>(&json).unwrap(), q);
    }

    #[test]
    fn z_basis_rewrite_round_trips((poly, _rows) in z2a_poly(), pole in 0u32..=2) {
        let mut f = QFraction::from(poly);
        for _ in 0..2 * pole {
            f = f.div_bracket(1).unwrap();
        }
        let v = ring_membership(f.clone(), RingSpec::ZsqA { epsilon: 0, pole });
        prop_assert!(v.pass, "{:?}", v);
        prop_assert_eq!(v.rewrite.unwrap().expand(), f);
    }

    #[test]
    fn odd_a_power_leaves_even_laurent(f in laurent()) {
        let even = f.adams(2);
        let even_spec = RingSpec::EvenLaurent { epsilon: 0 };
        let odd_spec = RingSpec::EvenLaurent { epsilon: 1 };
        prop_assert!(ring_membership(even.clone(), even_spec).pass);
        let odd = even.shift(0, 1, 1);
        prop_assert!(ring_membership(odd.clone(), odd_spec).pass);
        if !odd.is_zero() {
            prop_assert!(!ring_membership(odd, even_spec).pass);
        }
    }
}

#[test]
fn brackets() {
    assert_eq!(quantum_bracket(1), z());
    assert_eq!(a_bracket(), LaurentQA::a() - LaurentQA::a_pow(-1));
    assert_eq!(quantum_bracket(4).exact_div(&quantum_bracket(2)).unwrap(), LaurentQA::q_pow(2) + LaurentQA::q_pow(-2));
    assert!(quantum_bracket(3).exact_div(&quantum_bracket(2)).is_err());
}

#[test]
fn z_squared_a_table() {
    // (z² + 2)(a - a⁻¹) in the basis z^{2g} a^{2Q+1}.
    let f = &(z().pow(2) + LaurentQA::from_int(2)) * &a_bracket();
    let v = ring_membership(f, RingSpec::ZsqA { epsilon: 1, pole: 0 });
    assert!(v.pass);
    let rows: Vec<(u32, i64, i64)> = v
        .rewrite
        .unwrap()
        .rows()
        .into_iter()
        .map(|(g, q, n)| (g, q, n.to_string().parse().unwrap()))
        .collect();
    assert_eq!(rows, vec![(0, -1, -2), (0, 0, 2), (1, -1, -1), (1, 0, 1)]);
}

#[test]
fn membership_rejections() {
    let v = ring_membership(LaurentQA::q(), RingSpec::EvenLaurent { epsilon: 0 });
    assert!(!v.pass);
    assert!(v.offending.is_some());
    let half = LaurentQA::constant(Rational::new(1.into(), 2.into()));
    assert!(!ring_membership(half, RingSpec::Zz2).pass);
    assert!(!ring_membership(z(), RingSpec::Zz2).pass);
    assert!(ring_membership(z().pow(2), RingSpec::Zz2).pass);
}
