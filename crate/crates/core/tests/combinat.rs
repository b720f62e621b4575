use homfly_core::combinat::{
    character, is_prime, lr_coeff, lr_product, mobius, partition_divisors, partition_quotient, partitions_of,
    partitions_up_to, Partition,
};
use proptest::prelude::*;

fn partition(max: u32) -> impl Strategy<Value = Partition> {
    prop::collection::vec(1u32..=max, 0..=max as usize).prop_map(Partition::from_unsorted)
}

fn same_weight_pair(max: u32) -> impl Strategy<Value = (Partition, Partition)> {
    (1..=max).prop_flat_map(|n| {
        let parts = partitions_of(n);
        (prop::sample::select(parts.clone()), prop::sample::select(parts))
    })
}

fn factorial(n: u32) -> i64 {
    (1..=n as i64).product()
}

proptest! {
    #[test]
    fn conjugation_is_an_involution(l in partition(6)) {
        prop_assert_eq!(l.conjugate().conjugate(), l.clone());
        prop_assert_eq!(l.conjugate().weight(), l.weight());
        prop_assert_eq!(l.conjugate().kappa(), -l.kappa());
    }

    #[test]
    fn lr_is_symmetric_and_conjugation_invariant(l in partition(3), m in partition(3)) {
        for nu in partitions_of(l.weight() + m.weight()) {
            let c = lr_coeff(&l, &m, &nu);
            prop_assert_eq!(c, lr_coeff(&m, &l, &nu));
            prop_assert_eq!(c, lr_coeff(&l.conjugate(), &m.conjugate(), &nu.conjugate()));
        }
    }

    #[test]
    fn lr_product_preserves_dimension(l in partition(3), m in partition(3)) {
        let n = l.weight() + m.weight();
        let id = |p: &Partition| character(p, &Partition::from_unsorted(vec![1; p.weight() as usize]));
        let lhs: i64 = lr_product(&l, &m).iter().map(|(nu, c)| *c as i64 * id(nu)).sum();
        let binom = factorial(n) / (factorial(l.weight()) * factorial(m.weight()));
        prop_assert_eq!(lhs, binom * id(&l) * id(&m));
    }

    #[test]
    fn sign_twist_of_characters((l, m) in same_weight_pair(7)) {
        let sign = if (m.weight() as usize - m.length()).is_multiple_of(2) { 1 } else { -1 };
        prop_assert_eq!(character(&l.conjugate(), &m), sign * character(&l, &m));
    }
}

#[test]
fn partition_counts() {
    let counts: Vec<usize> = (0..=10).map(|n| partitions_of(n).len()).collect();
    assert_eq!(counts, [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
    assert_eq!(partitions_up_to(4).len(), 1 + 1 + 2 + 3 + 5);
}

#[test]
fn partition_validation() {
    assert!(Partition::new(vec![2, 1]).is_ok());
    assert!(Partition::new(vec![1, 2]).is_err());
    assert!(Partition::new(vec![2, 0]).is_err());
    assert_eq!(Partition::hook(2, 1).parts(), &[3, 1]);
    assert_eq!(Partition::hook(2, 1).as_hook(), Some((2, 1)));
    assert!(!Partition::new(vec![2, 2]).unwrap().is_hook());
}

#[test]
fn column_orthogonality_and_dimension_sum() {
    for n in 1..=7 {
        let parts = partitions_of(n);
        let ones = Partition::from_unsorted(vec![1; n as usize]);
        let sq: i64 = parts.iter().map(|l| character(l, &ones).pow(2)).sum();
        assert_eq!(sq, factorial(n));
        for m in &parts {
            let s: i64 = parts.iter().map(|l| character(l, m).pow(2)).sum();
            assert_eq!(s as u128, m.zmu(), "μ={m}");
        }
    }
}

#[test]
fn hook_length_formula() {
    for n in 1..=7 {
        let ones = Partition::from_unsorted(vec![1; n as usize]);
        for l in partitions_of(n) {
            let hooks: i64 = l.hook_lengths().iter().map(|&h| h as i64).product();
            assert_eq!(character(&l, &ones), factorial(n) / hooks, "λ={l}");
        }
    }
}

#[test]
fn number_theory_helpers() {
    let mu: Vec<i64> = (1..=10).map(mobius).collect();
    assert_eq!(mu, [1, -1, -1, 0, -1, 1, -1, 0, 0, 1]);
    let primes: Vec<u32> = (1..20).filter(|&p| is_prime(p)).collect();
    assert_eq!(primes, [2, 3, 5, 7, 11, 13, 17, 19]);
    let m = Partition::new(vec![6, 4, 2]).unwrap();
    assert_eq!(partition_divisors(&m), [1, 2]);
    assert_eq!(partition_quotient(&m, 2).unwrap().parts(), &[3, 2, 1]);
    assert!(partition_quotient(&m, 3).is_err());
}
