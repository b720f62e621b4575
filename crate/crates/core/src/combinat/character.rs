//! Symmetric-group characters by the Murnaghan–Nakayama rule on beta-sets.

use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use super::partition::Partition;

type Key = (Vec<u32>, Vec<u32>);

fn cache() -> &'static RwLock<HashMap<Key, i64>> {
    static CACHE: OnceLock<RwLock<HashMap<Key, i64>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// `χ_λ(μ)`; zero when the weights differ.
pub fn character(lambda: &Partition, mu: &Partition) -> i64 {
    if lambda.weight() != mu.weight() {
        return 0;
    }
    mn(lambda.parts(), mu.parts())
}

fn mn(lambda: &[u32], mu: &[u32]) -> i64 {
    if mu.is_empty() {
        return 1;
    }
    let key = (lambda.to_vec(), mu.to_vec());
    if let Some(&v) = cache().read().expect("character cache poisoned").get(&key) {
        return v;
    }

    let r = mu[0];
    let rest = &mu[1..];
    let l = lambda.len();
    // beta-set β_i = λ_i + (l - i), strictly decreasing
    let beta: Vec<i64> = lambda.iter().enumerate().map(|(i, &p)| p as i64 + (l - 1 - i) as i64).collect();
    let mut total = 0i64;
    for (idx, &b) in beta.iter().enumerate() {
        let target = b - r as i64;
        if target < 0 || beta.contains(&target) {
            continue;
        }
        let crossed = beta.iter().filter(|&&x| x > target && x < b).count();
        let mut nb = beta.clone();
        nb[idx] = target;
        nb.sort_unstable_by(|a, b| b.cmp(a));
        let len = nb.len();
        let mut shape: Vec<u32> = nb.iter().enumerate().map(|(i, &x)| (x - (len - 1 - i) as i64) as u32).collect();
        while shape.last() == Some(&0) {
            shape.pop();
        }
        let sign = if crossed % 2 == 0 { 1 } else { -1 };
        total += sign * mn(&shape, rest);
    }

    cache().write().expect("character cache poisoned").insert(key, total);
    total
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinat::partition::partitions_of;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn small_values() {
        assert_eq!(character(&p(&[1]), &p(&[1])), 1);
        assert_eq!(character(&p(&[2, 1]), &p(&[1, 1, 1])), 2);
        assert_eq!(character(&p(&[2, 1]), &p(&[3])), -1);
        assert_eq!(character(&p(&[2, 1]), &p(&[2, 1])), 0);
        assert_eq!(character(&p(&[2]), &p(&[1])), 0);
        assert_eq!(character(&Partition::empty(), &Partition::empty()), 1);
    }

    #[test]
    fn hooks_on_cycle() {
        for d in 1..=8u32 {
            for n in 0..d {
                let m = d - 1 - n;
                let sign = if n % 2 == 0 { 1 } else { -1 };
                assert_eq!(character(&Partition::hook(m, n), &Partition::row(d)), sign);
            }
            for l in partitions_of(d) {
                if !l.is_hook() {
                    assert_eq!(character(&l, &Partition::row(d)), 0);
                }
            }
        }
    }
}
