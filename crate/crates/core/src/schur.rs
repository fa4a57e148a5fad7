use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::combinat::Partition;

/// A finite integer combination of Schur functions.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SchurSum {
    terms: BTreeMap<Partition, BigInt>,
}

impl SchurSum {
    pub fn single(p: Partition) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(p, BigInt::one());
        SchurSum { terms }
    }

    pub fn add(&mut self, p: Partition, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(p).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn coefficient(&self, p: &Partition) -> BigInt {
        self.terms.get(p).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> &BTreeMap<Partition, BigInt> {
        &self.terms
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Partition, &BigInt)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Drops every term whose partition does not fit the box.
    pub fn truncate_to_box(&self, rows: usize, cols: usize) -> SchurSum {
        SchurSum {
            terms: self
                .terms
                .iter()
                .filter(|(p, _)| p.fits(rows, cols))
                .map(|(p, c)| (p.clone(), c.clone()))
                .collect(),
        }
    }
}

/// Partitions nu containing lambda with nu/lambda a horizontal strip of size k.
fn horizontal_strips(lambda: &Partition, k: usize, max_rows: usize) -> Vec<Partition> {
    let rows = (lambda.len() + 1).min(max_rows);
    let mut out = Vec::new();
    if lambda.len() > max_rows {
        return out;
    }
    let mut cur = Vec::with_capacity(rows);
    strip_rec(lambda, k, rows, &mut cur, &mut out);
    out
}

fn strip_rec(lambda: &Partition, left: usize, rows: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
    let i = cur.len();
    if i == rows {
        if left == 0 {
            out.push(Partition::trimmed(cur.clone()));
        }
        return;
    }
    let base = lambda.part(i);
    let cap = if i == 0 { base + left } else { lambda.part(i - 1).min(base + left) };
    for v in base..=cap {
        cur.push(v);
        strip_rec(lambda, left - (v - base), rows, cur, out);
        cur.pop();
    }
}

fn times_h(sum: &SchurSum, k: usize, max_rows: usize) -> SchurSum {
    let mut out = SchurSum::default();
    for (p, c) in sum.iter() {
        for nu in horizontal_strips(p, k, max_rows) {
            out.add(nu, c.clone());
        }
    }
    out
}

/// `s_lambda * s_mu` restricted to partitions with at most `max_rows` rows.
///
/// `s_mu` is expanded by the Jacobi-Trudi determinant in complete homogeneous
/// functions and each factor is applied with the Pieri rule. Discarding long
/// rows is the specialization to `max_rows` variables, a ring map, so it may be
/// done after every step.
pub fn schur_product_rows(lambda: &Partition, mu: &Partition, max_rows: usize) -> SchurSum {
    let mut out = SchurSum::default();
    if lambda.len() > max_rows || mu.len() > max_rows {
        return out;
    }
    let l = mu.len();
    let mut used = vec![false; l];
    jt_rec(mu, 0, &mut used, true, SchurSum::single(lambda.clone()), max_rows, &mut out);
    out
}

fn jt_rec(
    mu: &Partition,
    i: usize,
    used: &mut [bool],
    positive: bool,
    acc: SchurSum,
    max_rows: usize,
    out: &mut SchurSum,
) {
    let l = used.len();
    if i == l {
        for (p, c) in acc.iter() {
            out.add(p.clone(), if positive { c.clone() } else { -c.clone() });
        }
        return;
    }
    for j in 0..l {
        if used[j] {
            continue;
        }
        let idx = mu.part(i) as i64 - i as i64 + j as i64;
        // sign of the permutation built so far: count later-used smaller columns
        let inversions = used[j + 1..].iter().filter(|&&u| u).count();
        if idx < 0 {
            continue;
        }
        let next = if idx == 0 { acc.clone() } else { times_h(&acc, idx as usize, max_rows) };
        if next.is_empty() {
            continue;
        }
        used[j] = true;
        jt_rec(mu, i + 1, used, positive ^ (inversions % 2 == 1), next, max_rows, out);
        used[j] = false;
    }
}

pub fn schur_product(lambda: &Partition, mu: &Partition) -> SchurSum {
    schur_product_rows(lambda, mu, lambda.len() + mu.len())
}

pub fn lr_coefficient(lambda: &Partition, mu: &Partition, nu: &Partition) -> BigInt {
    if nu.weight() != lambda.weight() + mu.weight() || !nu.contains(lambda) || !nu.contains(mu) {
        return BigInt::zero();
    }
    let c = schur_product_rows(lambda, mu, nu.len()).coefficient(nu);
    debug_assert!(!c.is_negative());
    c
}

/// Counts Littlewood-Richardson tableaux of shape `nu/lambda` and content `mu`
/// by brute-force filling. Kept independent of [`lr_coefficient`].
pub fn lr_tableau_count(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    if !nu.contains(lambda) || nu.weight() != lambda.weight() + mu.weight() {
        return 0;
    }
    let rows = nu.len();
    let mut grid: Vec<Vec<usize>> = (0..rows).map(|i| vec![0; nu.part(i)]).collect();
    let mut counts = vec![0usize; mu.len() + 1];
    let mut read = vec![0usize; mu.len() + 2];
    let mut total = 0;
    fill_row(0, lambda, mu, nu, &mut grid, &mut counts, &mut read, &mut total);
    total
}

#[allow(clippy::too_many_arguments)]
fn fill_row(
    row: usize,
    lambda: &Partition,
    mu: &Partition,
    nu: &Partition,
    grid: &mut Vec<Vec<usize>>,
    counts: &mut Vec<usize>,
    read: &mut Vec<usize>,
    total: &mut u64,
) {
    if row == nu.len() {
        if (1..=mu.len()).all(|v| counts[v] == mu.part(v - 1)) {
            *total += 1;
        }
        return;
    }
    let start = lambda.part(row);
    fill_cell(row, start, lambda, mu, nu, grid, counts, read, total);
}

#[allow(clippy::too_many_arguments)]
fn fill_cell(
    row: usize,
    col: usize,
    lambda: &Partition,
    mu: &Partition,
    nu: &Partition,
    grid: &mut Vec<Vec<usize>>,
    counts: &mut Vec<usize>,
    read: &mut Vec<usize>,
    total: &mut u64,
) {
    if col == nu.part(row) {
        // row complete: check the lattice condition reading right to left
        let start = lambda.part(row);
        let saved = read.clone();
        let mut ok = true;
        for c in (start..nu.part(row)).rev() {
            let v = grid[row][c];
            read[v] += 1;
            if v > 1 && read[v] > read[v - 1] {
                ok = false;
                break;
            }
        }
        if ok {
            fill_row(row + 1, lambda, mu, nu, grid, counts, read, total);
        }
        *read = saved;
        return;
    }
    let lo_row = if col > lambda.part(row) { grid[row][col - 1] } else { 1 };
    let lo_col = if row > 0 && col >= lambda.part(row - 1) { grid[row - 1][col] + 1 } else { 1 };
    let lo = lo_row.max(lo_col);
    for v in lo..=mu.len() {
        if counts[v] == mu.part(v - 1) {
            continue;
        }
        grid[row][col] = v;
        counts[v] += 1;
        fill_cell(row, col + 1, lambda, mu, nu, grid, counts, read, total);
        counts[v] -= 1;
    }
    grid[row][col] = 0;
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn pieri_cases() {
        assert_eq!(lr_coefficient(&p(&[1]), &p(&[1]), &p(&[2])), BigInt::one());
        assert_eq!(lr_coefficient(&p(&[1]), &p(&[1]), &p(&[1, 1])), BigInt::one());
        let prod = schur_product(&p(&[1]), &p(&[1]));
        assert_eq!(prod.len(), 2);
    }

    #[test]
    fn identity_product() {
        let mu = p(&[3, 1, 1]);
        assert_eq!(schur_product(&Partition::empty(), &mu), SchurSum::single(mu.clone()));
        assert_eq!(schur_product(&mu, &Partition::empty()), SchurSum::single(mu));
    }

    #[test]
    fn classic_multiplicity_two() {
        let l = p(&[2, 1]);
        assert_eq!(lr_coefficient(&l, &l, &p(&[3, 2, 1])), BigInt::from(2));
        assert_eq!(lr_tableau_count(&l, &l, &p(&[3, 2, 1])), 2);
    }

    #[test]
    fn tableau_examples() {
        assert_eq!(lr_tableau_count(&p(&[1]), &p(&[1]), &p(&[2])), 1);
        assert_eq!(lr_tableau_count(&p(&[2]), &p(&[1]), &p(&[2, 2])), 0);
        assert_eq!(lr_tableau_count(&p(&[2]), &p(&[2]), &p(&[2, 2])), 1);
        assert_eq!(lr_tableau_count(&p(&[1]), &p(&[1, 1]), &p(&[2, 1])), 1);
    }

    #[test]
    fn square_times_square() {
        let q = p(&[2, 2]);
        let prod = schur_product(&q, &q);
        assert_eq!(prod.coefficient(&p(&[4, 4])), BigInt::one());
        assert_eq!(prod.coefficient(&p(&[2, 2, 2, 2])), BigInt::one());
        assert_eq!(prod.coefficient(&p(&[3, 3, 1, 1])), BigInt::one());
        assert_eq!(prod.coefficient(&p(&[3, 2, 2, 1])), BigInt::one());
    }
}
