use std::fmt;

use itertools::Itertools;

use crate::error::{Error, Result};

/// A weakly decreasing list of positive parts. Trailing zeros are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::BadPartition(parts));
        }
        Ok(Self::trimmed(parts))
    }

    pub(crate) fn trimmed(mut parts: Vec<usize>) -> Self {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Part `i` (0-based), zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn weight(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn fits(&self, rows: usize, cols: usize) -> bool {
        self.len() <= rows && self.part(0) <= cols
    }

    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }

    pub fn check_box(&self, r: usize, n: usize) -> Result<()> {
        if r > n || !self.fits(r, n - r) {
            return Err(Error::BoxViolation(self.0.clone(), r, n.saturating_sub(r)));
        }
        Ok(())
    }

    /// All partitions inside the `rows x cols` box, in lexicographic order of parts.
    pub fn all_in_box(rows: usize, cols: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(rows);
        fill_box(rows, cols, &mut cur, &mut out);
        out
    }

    /// All partitions of `k`.
    pub fn all_of_weight(k: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        fill_weight(k, k, &mut cur, &mut out);
        out
    }
}

fn fill_box(rows: usize, cols: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if cur.len() == rows {
        out.push(Partition::trimmed(cur.clone()));
        return;
    }
    let cap = cur.last().copied().unwrap_or(cols);
    for p in 0..=cap {
        cur.push(p);
        fill_box(rows, cols, cur, out);
        cur.pop();
    }
}

fn fill_weight(left: usize, cap: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if left == 0 {
        out.push(Partition(cur.clone()));
        return;
    }
    for p in (1..=cap.min(left)).rev() {
        cur.push(p);
        fill_weight(left - p, p, cur, out);
        cur.pop();
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            write!(f, "s[0]")
        } else {
            write!(f, "s[{}]", self.0.iter().join(","))
        }
    }
}

/// A Schubert condition `I = {i_1 < ... < i_r}` inside `{1..n}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SchubertSubset {
    elems: Vec<usize>,
    n: usize,
}

impl SchubertSubset {
    pub fn new(elems: Vec<usize>, n: usize) -> Result<Self> {
        let ok = elems.windows(2).all(|w| w[0] < w[1])
            && elems.first().map_or(true, |&e| e >= 1)
            && elems.last().map_or(true, |&e| e <= n);
        if !ok {
            return Err(Error::BadSubset(elems, n));
        }
        Ok(SchubertSubset { elems, n })
    }

    pub fn elems(&self) -> &[usize] {
        &self.elems
    }

    pub fn r(&self) -> usize {
        self.elems.len()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn contains(&self, i: usize) -> bool {
        self.elems.binary_search(&i).is_ok()
    }

    /// Every r-subset of `{1..n}` in lexicographic order.
    pub fn all(r: usize, n: usize) -> Vec<SchubertSubset> {
        (1..=n)
            .combinations(r)
            .map(|elems| SchubertSubset { elems, n })
            .collect()
    }

    /// The subset whose partition is `lambda`; inverse of [`subset_to_partition`].
    pub fn from_partition(lambda: &Partition, r: usize, n: usize) -> Result<Self> {
        lambda.check_box(r, n)?;
        let elems = (1..=r).map(|j| n - r + j - lambda.part(j - 1)).collect();
        Ok(SchubertSubset { elems, n })
    }

    /// One step of the downward shift. Returns the new subset and whether
    /// `1` was in the subset (in which case the degree drops by one).
    pub fn rotate_down(&self) -> (SchubertSubset, bool) {
        if self.contains(1) {
            let mut elems: Vec<usize> = self.elems[1..].iter().map(|i| i - 1).collect();
            elems.push(self.n);
            (SchubertSubset { elems, n: self.n }, true)
        } else {
            let elems = self.elems.iter().map(|i| i - 1).collect();
            (SchubertSubset { elems, n: self.n }, false)
        }
    }

    /// Inverse of [`rotate_down`](Self::rotate_down). The flag reports whether
    /// `n` was in the subset (in which case the degree rises by one).
    pub fn rotate_up(&self) -> (SchubertSubset, bool) {
        if self.contains(self.n) {
            let mut elems = vec![1];
            elems.extend(self.elems[..self.r() - 1].iter().map(|k| k + 1));
            (SchubertSubset { elems, n: self.n }, true)
        } else {
            let elems = self.elems.iter().map(|k| k + 1).collect();
            (SchubertSubset { elems, n: self.n }, false)
        }
    }
}

impl fmt::Display for SchubertSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.elems.iter().join(","))
    }
}

pub fn subset_to_partition(i: &SchubertSubset) -> Partition {
    let (r, n) = (i.r(), i.n());
    Partition::trimmed(
        i.elems
            .iter()
            .enumerate()
            .map(|(j, &e)| n - r + j + 1 - e)
            .collect(),
    )
}

pub fn codim_of_subset(i: &SchubertSubset) -> usize {
    let (r, n) = (i.r(), i.n());
    i.elems
        .iter()
        .enumerate()
        .map(|(j, &e)| n - r + j + 1 - e)
        .sum()
}

pub fn dual_partition(lambda: &Partition, r: usize, n: usize) -> Result<Partition> {
    lambda.check_box(r, n)?;
    let c = n - r;
    Ok(Partition::trimmed(
        (0..r).map(|j| c - lambda.part(r - 1 - j)).collect(),
    ))
}

fn common_ring(subsets: &[SchubertSubset]) -> Result<Option<(usize, usize)>> {
    let mut ring = None;
    for s in subsets {
        match ring {
            None => ring = Some((s.r(), s.n())),
            Some(rn) if rn != (s.r(), s.n()) => return Err(Error::RingMismatch),
            _ => {}
        }
    }
    Ok(ring)
}

/// The degree `delta` solving `sum codim = r(n-r) + delta*n - r*D`, provided it
/// is an integer and the degree left after shifting `D` to zero is nonnegative.
pub fn solve_degree(subsets: &[SchubertSubset], r: usize, n: usize, big_d: i64) -> Result<Option<i64>> {
    if let Some(rn) = common_ring(subsets)? {
        if rn != (r, n) {
            return Err(Error::RingMismatch);
        }
    }
    let total: i64 = subsets.iter().map(|s| codim_of_subset(s) as i64).sum();
    let (ri, ni) = (r as i64, n as i64);
    let num = total - ri * (ni - ri) + ri * big_d;
    if num.rem_euclid(ni) != 0 {
        return Ok(None);
    }
    let delta = num.div_euclid(ni);
    let base = match subsets.first() {
        Some(first) => base_degree(first, delta, big_d),
        None => delta,
    };
    Ok((base >= 0).then_some(delta))
}

/// Degree remaining once the first condition has been shifted until `D = 0`.
pub(crate) fn base_degree(first: &SchubertSubset, mut d: i64, mut big_d: i64) -> i64 {
    let mut cur = first.clone();
    while big_d > 0 {
        let (next, dropped) = cur.rotate_down();
        d -= dropped as i64;
        big_d -= 1;
        cur = next;
    }
    while big_d < 0 {
        let (next, raised) = cur.rotate_up();
        d += raised as i64;
        big_d += 1;
        cur = next;
    }
    d
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ss(e: &[usize], n: usize) -> SchubertSubset {
        SchubertSubset::new(e.to_vec(), n).unwrap()
    }

    #[test]
    fn conversions() {
        assert_eq!(subset_to_partition(&ss(&[1], 3)).parts(), &[2]);
        assert!(subset_to_partition(&ss(&[3], 3)).is_empty());
        assert_eq!(subset_to_partition(&ss(&[1, 2], 4)).parts(), &[2, 2]);
        assert_eq!(codim_of_subset(&ss(&[1, 2], 4)), 4);
        assert_eq!(codim_of_subset(&ss(&[3, 4], 4)), 0);
    }

    #[test]
    fn duals() {
        let d = dual_partition(&Partition::empty(), 1, 3).unwrap();
        assert_eq!(d.parts(), &[2]);
        let d = dual_partition(&Partition::new(vec![2, 2]).unwrap(), 2, 4).unwrap();
        assert!(d.is_empty());
        let d = dual_partition(&Partition::new(vec![2, 1]).unwrap(), 2, 4).unwrap();
        assert_eq!(d.parts(), &[1]);
        assert!(dual_partition(&Partition::new(vec![3]).unwrap(), 2, 4).is_err());
    }

    #[test]
    fn rejects_unsorted() {
        assert!(SchubertSubset::new(vec![2, 1], 3).is_err());
        assert!(SchubertSubset::new(vec![0, 1], 3).is_err());
        assert!(SchubertSubset::new(vec![1, 4], 3).is_err());
        assert!(Partition::new(vec![1, 2]).is_err());
    }

    #[test]
    fn degree_solver() {
        let t = vec![ss(&[1, 2], 4); 3];
        assert_eq!(solve_degree(&t, 2, 4, 0).unwrap(), Some(2));
        let t = vec![ss(&[2], 3), ss(&[2], 3), ss(&[1], 3)];
        assert_eq!(solve_degree(&t, 1, 3, 0).unwrap(), None);
        let t = vec![ss(&[1], 2); 3];
        assert_eq!(solve_degree(&t, 1, 2, 0).unwrap(), Some(1));
        let t = vec![ss(&[1], 2), ss(&[1, 2], 2)];
        assert_eq!(solve_degree(&t, 1, 2, 0), Err(Error::RingMismatch));
    }

    #[test]
    fn rotation_examples() {
        assert_eq!(ss(&[2, 3], 3).rotate_down(), (ss(&[1, 2], 3), false));
        assert_eq!(ss(&[1, 3], 3).rotate_down(), (ss(&[2, 3], 3), true));
        assert_eq!(ss(&[1, 2], 3).rotate_up(), (ss(&[2, 3], 3), false));
        assert_eq!(ss(&[2, 3], 3).rotate_up(), (ss(&[1, 3], 3), true));
    }

    #[test]
    fn box_enumeration_counts() {
        assert_eq!(Partition::all_in_box(2, 2).len(), 6);
        assert_eq!(Partition::all_in_box(2, 3).len(), 10);
        assert_eq!(Partition::all_of_weight(5).len(), 7);
        assert_eq!(Partition::all_of_weight(0), vec![Partition::empty()]);
    }
}
