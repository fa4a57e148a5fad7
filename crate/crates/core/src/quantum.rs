use std::collections::BTreeMap;
use std::fmt;

use itertools::Itertools;
use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{One, Signed, Zero};

use crate::combinat::{dual_partition, Partition};
use crate::error::{Error, Result};
use crate::schur::schur_product_rows;

/// An element of the small quantum cohomology ring of Gr(r, n): a finite sum of
/// `coefficient * q^d * s_lambda` with lambda in the r x (n-r) box.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuantumClass {
    r: usize,
    n: usize,
    terms: BTreeMap<(u32, Partition), BigInt>,
}

impl QuantumClass {
    pub fn zero(r: usize, n: usize) -> Self {
        QuantumClass { r, n, terms: BTreeMap::new() }
    }

    pub fn one(r: usize, n: usize) -> Self {
        Self::schubert(Partition::empty(), r, n).expect("empty partition fits every box")
    }

    pub fn schubert(lambda: Partition, r: usize, n: usize) -> Result<Self> {
        lambda.check_box(r, n)?;
        let mut c = Self::zero(r, n);
        c.terms.insert((0, lambda), BigInt::one());
        Ok(c)
    }

    pub fn ring(&self) -> (usize, usize) {
        (self.r, self.n)
    }

    pub fn add_term(&mut self, qdeg: u32, lambda: Partition, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let key = (qdeg, lambda);
        let slot = self.terms.entry(key.clone()).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn coefficient(&self, qdeg: u32, lambda: &Partition) -> BigInt {
        self.terms.get(&(qdeg, lambda.clone())).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (u32, &Partition, &BigInt)> {
        self.terms.iter().map(|((d, p), c)| (*d, p, c))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The classical part, i.e. the specialization q = 0.
    pub fn at_q_zero(&self) -> QuantumClass {
        QuantumClass {
            r: self.r,
            n: self.n,
            terms: self.terms.iter().filter(|((d, _), _)| *d == 0).map(|(k, v)| (k.clone(), v.clone())).collect(),
        }
    }
}

impl fmt::Display for QuantumClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, ((d, p), c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let a = c.abs();
            if !a.is_one() {
                write!(f, "{a}*")?;
            }
            match d {
                0 => {}
                1 => write!(f, "q*")?,
                _ => write!(f, "q^{d}*")?,
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

/// Rim-hook reduction of a partition with at most r rows into the r x (n-r)
/// box. Returns the reduced partition, the q-degree and the sign, or `None`
/// when the class vanishes.
pub fn rim_hook_reduce(nu: &Partition, r: usize, n: usize) -> Option<(Partition, u32, bool)> {
    if nu.len() > r {
        return None;
    }
    if nu.part(0) <= n - r {
        return Some((nu.clone(), 0, true));
    }
    let beta: Vec<usize> = (0..r).map(|i| nu.part(i) + r - 1 - i).collect();
    let residues: Vec<usize> = beta.iter().map(|b| b % n).collect();
    if residues.iter().duplicates().next().is_some() {
        return None;
    }
    let d: usize = beta.iter().map(|b| b / n).sum();
    // parity of the permutation that sorts residues into decreasing order
    let mut inversions = 0;
    for i in 0..r {
        for j in i + 1..r {
            if residues[i] < residues[j] {
                inversions += 1;
            }
        }
    }
    let mut sorted = residues.clone();
    sorted.sort_unstable_by(|a, b| b.cmp(a));
    let core = Partition::trimmed((0..r).map(|i| sorted[i] - (r - 1 - i)).collect());
    let negative = (inversions + (r - 1) * d) % 2 == 1;
    Some((core, d as u32, !negative))
}

pub fn quantum_product(a: &QuantumClass, b: &QuantumClass) -> Result<QuantumClass> {
    if a.ring() != b.ring() {
        return Err(Error::RingMismatch);
    }
    let (r, n) = a.ring();
    let mut out = QuantumClass::zero(r, n);
    for ((da, la), ca) in &a.terms {
        for ((db, lb), cb) in &b.terms {
            let coeff = ca * cb;
            for (nu, c) in schur_product_rows(la, lb, r).iter() {
                if let Some((core, d, positive)) = rim_hook_reduce(nu, r, n) {
                    let term = &coeff * c;
                    out.add_term(da + db + d, core, if positive { term } else { -term });
                }
            }
        }
    }
    Ok(out)
}

fn dimension_matches(classes: &[Partition], d: i64, r: usize, n: usize) -> bool {
    let total: i64 = classes.iter().map(|c| c.weight() as i64).sum();
    d >= 0 && total == (r * (n - r)) as i64 + d * n as i64
}

/// The genus-zero Gromov-Witten number of Gr(r, n) with the given Schubert
/// classes at distinct points and curve degree `d`.
pub fn gw_number(classes: &[Partition], d: i64, r: usize, n: usize) -> Result<BigInt> {
    if classes.len() < 2 {
        return Err(Error::TooFewClasses(2));
    }
    for c in classes {
        c.check_box(r, n)?;
    }
    if !dimension_matches(classes, d, r, n) {
        return Ok(BigInt::zero());
    }
    let (last, rest) = classes.split_last().expect("at least two classes");
    let mut acc = QuantumClass::schubert(rest[0].clone(), r, n)?;
    for c in &rest[1..] {
        acc = quantum_product(&acc, &QuantumClass::schubert(c.clone(), r, n)?)?;
    }
    let dual = dual_partition(last, r, n)?;
    Ok(acc.coefficient(d as u32, &dual))
}

fn det(mut m: Vec<Vec<Complex64>>) -> Complex64 {
    let k = m.len();
    let mut acc = Complex64::new(1.0, 0.0);
    for col in 0..k {
        let pivot = (col..k)
            .max_by(|&a, &b| m[a][col].norm().partial_cmp(&m[b][col].norm()).unwrap())
            .unwrap();
        if m[pivot][col].norm() == 0.0 {
            return Complex64::new(0.0, 0.0);
        }
        if pivot != col {
            m.swap(pivot, col);
            acc = -acc;
        }
        acc *= m[col][col];
        for row in col + 1..k {
            let factor = m[row][col] / m[col][col];
            for c in col..k {
                let v = m[col][c];
                m[row][c] -= factor * v;
            }
        }
    }
    acc
}

fn schur_poly(lambda: &Partition, x: &[Complex64]) -> Complex64 {
    let r = x.len();
    let alt = |shift: &dyn Fn(usize) -> usize| {
        det((0..r).map(|i| (0..r).map(|j| x[i].powu(shift(j) as u32)).collect()).collect())
    };
    alt(&|j| lambda.part(j) + r - 1 - j) / alt(&|j| r - 1 - j)
}

fn vi_raw(classes: &[Partition], r: usize, n: usize) -> Complex64 {
    // roots of x^n = (-1)^(r+1)
    let offset = if r % 2 == 0 { 1.0 } else { 0.0 };
    let roots: Vec<Complex64> = (0..n)
        .map(|k| Complex64::from_polar(1.0, std::f64::consts::PI * (2.0 * k as f64 + offset) / n as f64))
        .collect();
    let mut total = Complex64::new(0.0, 0.0);
    for pick in roots.iter().copied().combinations(r) {
        let mut term: Complex64 = classes.iter().map(|c| schur_poly(c, &pick)).product();
        for (i, zi) in pick.iter().enumerate() {
            term *= zi;
            for (j, zj) in pick.iter().enumerate() {
                if i != j {
                    term *= zi - zj;
                }
            }
        }
        total += term;
    }
    total
}

/// Floating-point evaluation of the same invariant through the residue sum
/// over r-tuples of roots of unity. Normalized so that the point class has
/// degree-zero invariant 1.
pub fn vafa_intriligator_estimate(classes: &[Partition], d: i64, r: usize, n: usize) -> f64 {
    if !dimension_matches(classes, d, r, n) {
        return 0.0;
    }
    let point = Partition::trimmed(vec![n - r; r]);
    let norm = vi_raw(&[point], r, n);
    (vi_raw(classes, r, n) / norm).re
}
