//! Independent brute-force routes used to cross-check the fast combinatorics.
//!
//! Nothing here calls into the Murnaghan–Nakayama or Littlewood–Richardson
//! implementations: characters come from the bialternant formula and Schur
//! products from explicit semistandard-tableau expansions.

use std::collections::{BTreeMap, HashMap};

use super::partition::Partition;
use crate::error::{Error, Result};

/// Largest weight the oracles accept.
pub const ORACLE_CAP: u32 = 7;

// All permutations of 0..n with their signs.
fn signed_permutations(n: usize) -> Vec<(Vec<usize>, i64)> {
    fn rec(avail: &mut Vec<usize>, cur: &mut Vec<usize>, sign: i64, out: &mut Vec<(Vec<usize>, i64)>) {
        if avail.is_empty() {
            out.push((cur.clone(), sign));
            return;
        }
        for i in 0..avail.len() {
            let x = avail.remove(i);
            cur.push(x);
            // picking the i-th smallest remaining element contributes i inversions
            rec(avail, cur, if i % 2 == 0 { sign } else { -sign }, out);
            cur.pop();
            avail.insert(i, x);
        }
    }
    let mut out = Vec::new();
    rec(&mut (0..n).collect(), &mut Vec::new(), 1, &mut out);
    out
}

// Number of ways to send each part to a variable so the variable sums equal `alpha`.
fn power_sum_coefficient(parts: &[u32], alpha: &mut Vec<i64>) -> i64 {
    match parts.split_first() {
        None => alpha.iter().all(|&x| x == 0) as i64,
        Some((&p, rest)) => {
            let mut total = 0;
            for i in 0..alpha.len() {
                if alpha[i] >= p as i64 {
                    alpha[i] -= p as i64;
                    total += power_sum_coefficient(rest, alpha);
                    alpha[i] += p as i64;
                }
            }
            total
        }
    }
}

/// `χ_λ(μ)` as the coefficient of `x^{λ+δ}` in `a_δ · p_μ`.
pub fn character_oracle(lambda: &Partition, mu: &Partition) -> Result<i64> {
    let n = lambda.weight().max(mu.weight());
    if n > ORACLE_CAP {
        return Err(Error::TooLarge { size: n as usize, cap: ORACLE_CAP as usize });
    }
    if lambda.weight() != mu.weight() {
        return Ok(0);
    }
    let vars = lambda.length();
    if vars == 0 {
        return Ok(1);
    }
    let target: Vec<i64> = (0..vars).map(|i| lambda.part(i + 1) as i64 + (vars - 1 - i) as i64).collect();
    let mut total = 0;
    for (perm, sign) in signed_permutations(vars) {
        // a_δ contributes sgn(σ) x^{σ(δ)}
        let mut alpha: Vec<i64> = (0..vars).map(|i| target[i] - (vars - 1 - perm[i]) as i64).collect();
        if alpha.iter().any(|&x| x < 0) {
            continue;
        }
        total += sign * power_sum_coefficient(mu.parts(), &mut alpha);
    }
    Ok(total)
}

/// Monomial expansion of `s_λ(x_1..x_n)`: content vector -> number of SSYT.
pub fn schur_monomials(shape: &Partition, nvars: usize) -> HashMap<Vec<u32>, u64> {
    let cells = shape.cells();
    let mut grid: HashMap<(u32, u32), usize> = HashMap::new();
    let mut out: HashMap<Vec<u32>, u64> = HashMap::new();
    let mut content = vec![0u32; nvars];

    fn fill(
        k: usize,
        cells: &[(u32, u32)],
        nvars: usize,
        grid: &mut HashMap<(u32, u32), usize>,
        content: &mut Vec<u32>,
        out: &mut HashMap<Vec<u32>, u64>,
    ) {
        if k == cells.len() {
            *out.entry(content.clone()).or_insert(0) += 1;
            return;
        }
        let (i, j) = cells[k];
        let lo_row = if j > 1 { grid[&(i, j - 1)] } else { 0 };
        let lo_col = if i > 1 { grid[&(i - 1, j)] + 1 } else { 0 };
        for v in lo_row.max(lo_col)..nvars {
            grid.insert((i, j), v);
            content[v] += 1;
            fill(k + 1, cells, nvars, grid, content, out);
            content[v] -= 1;
        }
        grid.remove(&(i, j));
    }

    fill(0, &cells, nvars, &mut grid, &mut content, &mut out);
    out
}

/// Schur expansion of `s_λ · s_μ`, computed from monomial expansions and
/// triangular (Kostka) elimination.
pub fn schur_product_expansion(lambda: &Partition, mu: &Partition) -> BTreeMap<Partition, i64> {
    let nvars = lambda.length() + mu.length();
    let left = schur_monomials(lambda, nvars);
    let right = schur_monomials(mu, nvars);

    // Only dominant (non-increasing) exponents are needed for the elimination.
    let mut coeffs: BTreeMap<Vec<u32>, i64> = BTreeMap::new();
    for (a, ca) in &left {
        for (b, cb) in &right {
            let e: Vec<u32> = a.iter().zip(b).map(|(x, y)| x + y).collect();
            if e.windows(2).all(|w| w[0] >= w[1]) {
                *coeffs.entry(e).or_insert(0) += (ca * cb) as i64;
            }
        }
    }

    let mut result = BTreeMap::new();
    while let Some((top, &c)) = coeffs.iter().next_back() {
        let top = top.clone();
        if c == 0 {
            coeffs.remove(&top);
            continue;
        }
        let nu = Partition::from_unsorted(top.clone());
        for (content, k) in schur_monomials(&nu, nvars) {
            if content.windows(2).all(|w| w[0] >= w[1]) {
                let e = coeffs.entry(content.clone()).or_insert(0);
                *e -= c * k as i64;
                if *e == 0 {
                    coeffs.remove(&content);
                }
            }
        }
        result.insert(nu, c);
    }
    result
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn oracle_values() {
        assert_eq!(character_oracle(&p(&[2, 1]), &p(&[1, 1, 1])).unwrap(), 2);
        assert_eq!(character_oracle(&p(&[2, 1]), &p(&[3])).unwrap(), -1);
        assert_eq!(character_oracle(&p(&[1, 1]), &p(&[2])).unwrap(), -1);
        assert!(matches!(
            character_oracle(&p(&[8]), &p(&[8])),
            Err(Error::TooLarge { size: 8, cap: 7 })
        ));
    }

    #[test]
    fn schur_products() {
        let e = schur_product_expansion(&p(&[1]), &p(&[1]));
        assert_eq!(e.get(&p(&[2])), Some(&1));
        assert_eq!(e.get(&p(&[1, 1])), Some(&1));
        assert_eq!(e.len(), 2);
        let e = schur_product_expansion(&p(&[1]), &p(&[2]));
        assert_eq!(e.get(&p(&[1, 1, 1])), None);
        assert_eq!(e.len(), 2);
        let e = schur_product_expansion(&p(&[2, 1]), &p(&[2, 1]));
        assert_eq!(e.get(&p(&[3, 2, 1])), Some(&2));
    }

    #[test]
    fn kostka_counts() {
        let m = schur_monomials(&p(&[2, 1]), 3);
        assert_eq!(m[&vec![1, 1, 1]], 2);
        assert_eq!(m[&vec![2, 1, 0]], 1);
    }
}
