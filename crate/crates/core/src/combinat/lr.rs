//! Littlewood–Richardson coefficients by enumeration of LR tableaux.

use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use super::partition::Partition;

type Key = (Partition, Partition, Partition);

fn cache() -> &'static RwLock<HashMap<Key, u64>> {
    static CACHE: OnceLock<RwLock<HashMap<Key, u64>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// `c^ν_{λ,μ}`: the number of semistandard fillings of `ν/λ` with content `μ`
/// whose right-to-left, top-to-bottom reading word is a lattice word.
pub fn lr_coeff(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    if lambda.weight() + mu.weight() != nu.weight() || !nu.contains(lambda) || !nu.contains(mu) {
        return 0;
    }
    let key = (lambda.clone(), mu.clone(), nu.clone());
    if let Some(&v) = cache().read().expect("lr cache poisoned").get(&key) {
        return v;
    }

    // cells of ν/λ in reading order
    let mut cells = Vec::new();
    for i in 1..=nu.length() as u32 {
        let lo = lambda.part(i as usize);
        for j in (lo + 1..=nu.part(i as usize)).rev() {
            cells.push((i, j));
        }
    }
    let mut grid: HashMap<(u32, u32), u32> = HashMap::new();
    let mut used = vec![0u32; mu.length() + 1];
    let count = fill(0, &cells, lambda, mu, &mut grid, &mut used);

    cache().write().expect("lr cache poisoned").insert(key, count);
    count
}

fn fill(
    k: usize,
    cells: &[(u32, u32)],
    lambda: &Partition,
    mu: &Partition,
    grid: &mut HashMap<(u32, u32), u32>,
    used: &mut Vec<u32>,
) -> u64 {
    if k == cells.len() {
        return 1;
    }
    let (i, j) = cells[k];
    // right neighbour (already placed) bounds from above
    let hi = grid.get(&(i, j + 1)).copied().unwrap_or(mu.length() as u32);
    // the cell above, if in the skew shape, bounds strictly from below
    let lo = if i > 1 && j > lambda.part(i as usize - 1) { grid[&(i - 1, j)] + 1 } else { 1 };
    let mut total = 0;
    for v in lo..=hi {
        let vi = v as usize;
        if used[vi] >= mu.part(vi) {
            continue;
        }
        if v > 1 && used[vi] + 1 > used[vi - 1] {
            continue;
        }
        used[vi] += 1;
        grid.insert((i, j), v);
        total += fill(k + 1, cells, lambda, mu, grid, used);
        grid.remove(&(i, j));
        used[vi] -= 1;
    }
    total
}

/// All `ν` with `c^ν_{λ,μ} ≠ 0`, with their coefficients, in increasing order.
pub fn lr_product(lambda: &Partition, mu: &Partition) -> Vec<(Partition, u64)> {
    super::partition::partitions_of(lambda.weight() + mu.weight())
        .into_iter()
        .filter_map(|nu| {
            let c = lr_coeff(lambda, mu, &nu);
            (c > 0).then_some((nu, c))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn examples() {
        let l = p(&[2, 1]);
        assert_eq!(lr_coeff(&l, &Partition::empty(), &l), 1);
        assert_eq!(lr_coeff(&Partition::empty(), &l, &l), 1);
        assert_eq!(lr_coeff(&p(&[1]), &p(&[1]), &p(&[2])), 1);
        assert_eq!(lr_coeff(&p(&[1]), &p(&[1]), &p(&[1, 1])), 1);
        assert_eq!(lr_coeff(&p(&[1]), &p(&[2]), &p(&[1, 1, 1])), 0);
        assert_eq!(lr_coeff(&l, &l, &p(&[3, 2, 1])), 2);
    }
}
