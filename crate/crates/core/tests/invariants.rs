use homfly_core::combinat::{partitions_up_to, Partition};
use homfly_core::exactalg::{a_bracket, QFraction};
use homfly_core::invariants::{
    colored_W, framed_H, normalized_P, unknot_colored, verify_meridian_distinct, verify_strong_integrality,
    verify_symmetries, verify_torus_swap, Flavor, FramedKnot, InvariantCache, InvariantKey, Knot, TorusKnot,
};
use proptest::prelude::*;

fn p(v: &[u32]) -> Partition {
    Partition::new(v.to_vec()).unwrap()
}

fn small_color() -> impl Strategy<Value = Partition> {
    prop::sample::select(partitions_up_to(2))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn unknot_symmetries_over_framing(tau in -3i64..=3, l in small_color(), m in small_color()) {
        let k = FramedKnot::unknot(tau);
        let v = verify_symmetries(&k, &l, &m);
        prop_assert!(v.pass, "{:?}", v);
        let v = verify_strong_integrality(&k, &l, &m);
        prop_assert!(v.pass, "{:?}", v);
    }

    #[test]
    fn trefoil_symmetries_over_framing(tau in -2i64..=2, l in prop::sample::select(partitions_up_to(2))) {
        let k = FramedKnot::new(Knot::torus(2, 3).unwrap(), tau);
        let v = verify_symmetries(&k, &l, &Partition::empty());
        prop_assert!(v.pass, "{:?}", v);
    }
}

#[test]
fn fundamental_unknot_is_a_bracket_ratio() {
    let w = unknot_colored(&p(&[1]));
    let expect = QFraction::from(a_bracket()).div_bracket(1).unwrap();
    assert_eq!(w, expect);
    assert_eq!(colored_W(Knot::Unknot, &p(&[1])).unwrap(), expect);
    assert_eq!(framed_H(&FramedKnot::unknot(0), &p(&[1])).unwrap(), expect);
}

#[test]
fn torus_knots_with_one_crossing_strand_are_unknots() {
    for r in 2..=3 {
        for l in partitions_up_to(3).into_iter().skip(1) {
            let t = colored_W(Knot::torus(r, 1).unwrap(), &l).unwrap();
            assert_eq!(t, unknot_colored(&l), "r={r}, λ={l}");
        }
    }
}

#[test]
fn torus_swap() {
    for (r, s) in [(2, 3), (2, 5), (3, 4)] {
        let t = TorusKnot::new(r, s).unwrap();
        for l in partitions_up_to(2).into_iter().skip(1) {
            assert!(verify_torus_swap(t, &l).pass, "{t}, λ={l}");
        }
    }
}

#[test]
fn normalized_zero_framed_unknot_is_one() {
    let k = FramedKnot::unknot(0);
    for l in partitions_up_to(3) {
        assert!(normalized_P(&k, &l, &Partition::empty()).unwrap().is_one(), "λ={l}");
    }
}

#[test]
fn meridian_eigenvalues() {
    assert!(verify_meridian_distinct(4).pass);
}

#[test]
fn knot_parsing() {
    assert_eq!("unknot".parse::<Knot>().unwrap(), Knot::Unknot);
    assert_eq!("torus:2,3".parse::<Knot>().unwrap(), Knot::torus(2, 3).unwrap());
    assert!("torus:2,4".parse::<Knot>().is_err());
    assert!("torus:1,3".parse::<Knot>().is_err());
    assert!("figure8".parse::<Knot>().is_err());
    assert_eq!(FramedKnot::diagram(Knot::torus(2, 3).unwrap()).framing, 3);
}

#[test]
fn cache_round_trips_through_disk() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("nested").join("cache.json");
    let cache = InvariantCache::load(&path).unwrap();
    assert!(cache.is_empty());
    let key = InvariantKey {
        knot: Knot::torus(2, 3).unwrap(),
        color: p(&[2]),
        reverse: Partition::empty(),
        framing: 0,
        flavor: Flavor::Colored,
    };
    let value = cache.get_or_compute(&key).unwrap();
    cache.save(&path).unwrap();
    let back = InvariantCache::load(&path).unwrap();
    assert_eq!(back.keys(), vec![key.clone()]);
    assert_eq!(back.get(&key), Some(value));
}

#[test]
fn cache_rejects_foreign_engine_and_bad_flavors() {
    let text = r#"{"engine_version": "other 0.0.0", "entries": []}"#;
    assert!(InvariantCache::from_json(text).is_err());
    let key = InvariantKey {
        knot: Knot::Unknot,
        color: p(&[1]),
        reverse: p(&[1]),
        framing: 0,
        flavor: Flavor::Colored,
    };
    assert!(key.compute().is_err());
}
