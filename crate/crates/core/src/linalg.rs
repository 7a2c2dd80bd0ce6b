//! Exact sparse linear algebra over the integers.
//!
//! Rows are reduced fraction-free and divided by their content after every
//! step. Elimination first runs on checked `i128`; if any intermediate value
//! overflows, the whole computation is repeated over `BigInt`.

use std::collections::BTreeMap;
use std::fmt::Debug;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

pub(crate) trait Scalar: Clone + Debug + PartialEq {
    fn zero_value() -> Self;
    fn is_zero_value(&self) -> bool;
    fn from_big(x: &BigInt) -> Option<Self>;
    fn to_big(&self) -> BigInt;
    fn mul(&self, other: &Self) -> Option<Self>;
    fn sub(&self, other: &Self) -> Option<Self>;
    fn neg(&self) -> Self;
    fn gcd_with(&self, other: &Self) -> Self;
    /// Exact quotient; the caller guarantees divisibility.
    fn div(&self, other: &Self) -> Self;
    fn is_neg(&self) -> bool;
}

impl Scalar for i128 {
    fn zero_value() -> Self {
        0
    }
    fn is_zero_value(&self) -> bool {
        *self == 0
    }
    fn from_big(x: &BigInt) -> Option<Self> {
        num_traits::ToPrimitive::to_i128(x)
    }
    fn to_big(&self) -> BigInt {
        BigInt::from(*self)
    }
    fn mul(&self, other: &Self) -> Option<Self> {
        self.checked_mul(*other)
    }
    fn sub(&self, other: &Self) -> Option<Self> {
        self.checked_sub(*other)
    }
    fn neg(&self) -> Self {
        -self
    }
    fn gcd_with(&self, other: &Self) -> Self {
        Integer::gcd(self, other)
    }
    fn div(&self, other: &Self) -> Self {
        self / other
    }
    fn is_neg(&self) -> bool {
        *self < 0
    }
}

impl Scalar for BigInt {
    fn zero_value() -> Self {
        Zero::zero()
    }
    fn is_zero_value(&self) -> bool {
        Zero::is_zero(self)
    }
    fn from_big(x: &BigInt) -> Option<Self> {
        Some(x.clone())
    }
    fn to_big(&self) -> BigInt {
        self.clone()
    }
    fn mul(&self, other: &Self) -> Option<Self> {
        Some(self * other)
    }
    fn sub(&self, other: &Self) -> Option<Self> {
        Some(self - other)
    }
    fn neg(&self) -> Self {
        -self
    }
    fn gcd_with(&self, other: &Self) -> Self {
        Integer::gcd(self, other)
    }
    fn div(&self, other: &Self) -> Self {
        self / other
    }
    fn is_neg(&self) -> bool {
        Signed::is_negative(self)
    }
}

/// Sparse row: `(column, value)` pairs sorted by column, no zeros.
pub(crate) type SparseRow<T> = Vec<(usize, T)>;

/// Row echelon form built incrementally; each stored row is keyed by its
/// leading column.
#[derive(Clone, Debug)]
pub(crate) struct Echelon<T> {
    pub columns: usize,
    rows: BTreeMap<usize, SparseRow<T>>,
}

fn normalize<T: Scalar>(row: &mut SparseRow<T>) {
    let mut g = T::zero_value();
    for (_, v) in row.iter() {
        g = g.gcd_with(v);
    }
    let flip = row.first().is_some_and(|(_, v)| v.is_neg());
    if !g.is_zero_value() {
        let g = if flip { g.neg() } else { g };
        for (_, v) in row.iter_mut() {
            *v = v.div(&g);
        }
    }
}

/// `a·x − b·y` over sparse rows.
fn combine<T: Scalar>(a: &T, x: &SparseRow<T>, b: &T, y: &SparseRow<T>) -> Option<SparseRow<T>> {
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    while i < x.len() || j < y.len() {
        let take_x = j >= y.len() || (i < x.len() && x[i].0 < y[j].0);
        let take_y = i >= x.len() || (j < y.len() && y[j].0 < x[i].0);
        let (col, val) = if take_x {
            let r = (x[i].0, a.mul(&x[i].1)?);
            i += 1;
            r
        } else if take_y {
            let r = (y[j].0, b.mul(&y[j].1)?.neg());
            j += 1;
            r
        } else {
            let r = (x[i].0, a.mul(&x[i].1)?.sub(&b.mul(&y[j].1)?)?);
            i += 1;
            j += 1;
            r
        };
        if !val.is_zero_value() {
            out.push((col, val));
        }
    }
    Some(out)
}

impl<T: Scalar> Echelon<T> {
    pub fn new(columns: usize) -> Self {
        Echelon { columns, rows: BTreeMap::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `row` against the stored pivots; `Some(None)` means it was dependent.
    fn reduce(&self, mut row: SparseRow<T>) -> Option<Option<SparseRow<T>>> {
        row.retain(|(_, v)| !v.is_zero_value());
        normalize(&mut row);
        loop {
            let Some((lead, lead_val)) = row.first().cloned() else {
                return Some(None);
            };
            match self.rows.get(&lead) {
                None => return Some(Some(row)),
                Some(pivot) => {
                    let p = &pivot[0].1;
                    let g = p.gcd_with(&lead_val);
                    let (a, b) = (p.div(&g), lead_val.div(&g));
                    row = combine(&a, &row, &b, pivot)?;
                    normalize(&mut row);
                }
            }
        }
    }

    /// Adds a row; returns whether the rank grew, or `None` on overflow.
    pub fn insert(&mut self, row: SparseRow<T>) -> Option<bool> {
        match self.reduce(row)? {
            None => Some(false),
            Some(r) => {
                self.rows.insert(r[0].0, r);
                Some(true)
            }
        }
    }

    /// A basis of the right kernel `{x : A x = 0}` with primitive integer vectors.
    pub fn kernel(&self) -> Option<Vec<Vec<BigInt>>> {
        let pivots: Vec<usize> = self.rows.keys().copied().collect();
        let free: Vec<usize> = (0..self.columns).filter(|c| !self.rows.contains_key(c)).collect();
        let mut out = Vec::with_capacity(free.len());
        for &f in &free {
            let mut x: Vec<BigInt> = vec![<BigInt as Zero>::zero(); self.columns];
            x[f] = BigInt::from(1);
            for &c in pivots.iter().rev() {
                let row = &self.rows[&c];
                let lead = row[0].1.to_big();
                let mut s = <BigInt as Zero>::zero();
                for (col, v) in &row[1..] {
                    if !Zero::is_zero(&x[*col]) {
                        s += v.to_big() * &x[*col];
                    }
                }
                if Zero::is_zero(&s) {
                    continue;
                }
                let g = Integer::gcd(&s, &lead);
                let scale = &lead / &g;
                if scale != BigInt::from(1) {
                    for v in x.iter_mut() {
                        if !Zero::is_zero(v) {
                            *v *= &scale;
                        }
                    }
                }
                x[c] = -(&s / &g);
            }
            let g = x.iter().fold(<BigInt as Zero>::zero(), |acc, v| Integer::gcd(&acc, v));
            if g > BigInt::from(1) {
                for v in x.iter_mut() {
                    *v = &*v / &g;
                }
            }
            out.push(x);
        }
        Some(out)
    }
}

fn convert<T: Scalar>(rows: &[SparseRow<BigInt>]) -> Option<Vec<SparseRow<T>>> {
    rows.iter().map(|r| r.iter().map(|(c, v)| Some((*c, T::from_big(v)?))).collect()).collect()
}

fn kernel_of<T: Scalar>(columns: usize, rows: &[SparseRow<BigInt>]) -> Option<Vec<Vec<BigInt>>> {
    let mut e = Echelon::<T>::new(columns);
    for r in convert::<T>(rows)? {
        e.insert(r)?;
    }
    e.kernel()
}

/// Kernel basis of the matrix with the given sparse rows.
pub(crate) fn kernel(columns: usize, rows: &[SparseRow<BigInt>]) -> Vec<Vec<BigInt>> {
    kernel_of::<i128>(columns, rows)
        .or_else(|| kernel_of::<BigInt>(columns, rows))
        .expect("big-integer elimination cannot overflow")
}

fn rank_of<T: Scalar>(columns: usize, rows: &[SparseRow<BigInt>]) -> Option<usize> {
    let mut e = Echelon::<T>::new(columns);
    for r in convert::<T>(rows)? {
        e.insert(r)?;
    }
    Some(e.rank())
}

pub(crate) fn rank(columns: usize, rows: &[SparseRow<BigInt>]) -> usize {
    rank_of::<i128>(columns, rows)
        .or_else(|| rank_of::<BigInt>(columns, rows))
        .expect("big-integer elimination cannot overflow")
}

/// Indices of a maximal subset of `candidates` independent modulo `base`,
/// chosen greedily in order.
pub(crate) fn extend_basis(columns: usize, base: &[SparseRow<BigInt>], candidates: &[SparseRow<BigInt>]) -> Vec<usize> {
    fn run<T: Scalar>(columns: usize, base: &[SparseRow<BigInt>], cand: &[SparseRow<BigInt>]) -> Option<Vec<usize>> {
        let mut e = Echelon::<T>::new(columns);
        for r in convert::<T>(base)? {
            e.insert(r)?;
        }
        let mut picked = Vec::new();
        for (i, r) in convert::<T>(cand)?.into_iter().enumerate() {
            if e.insert(r)? {
                picked.push(i);
            }
        }
        Some(picked)
    }
    run::<i128>(columns, base, candidates)
        .or_else(|| run::<BigInt>(columns, base, candidates))
        .expect("big-integer elimination cannot overflow")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dense_to_sparse(v: &[BigInt]) -> SparseRow<BigInt> {
        v.iter().enumerate().filter(|(_, x)| !Zero::is_zero(*x)).map(|(i, x)| (i, x.clone())).collect()
    }

    fn row(v: &[i64]) -> SparseRow<BigInt> {
        dense_to_sparse(&v.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>())
    }

    fn apply(rows: &[Vec<i64>], x: &[BigInt]) -> Vec<BigInt> {
        rows.iter().map(|r| r.iter().zip(x).map(|(&a, b)| BigInt::from(a) * b).sum()).collect()
    }

    #[test]
    fn kernel_small() {
        let m = vec![vec![1, 2, 3], vec![2, 4, 6], vec![1, 0, -1]];
        let rows: Vec<_> = m.iter().map(|r| row(r)).collect();
        assert_eq!(rank(3, &rows), 2);
        let k = kernel(3, &rows);
        assert_eq!(k.len(), 1);
        assert!(apply(&m, &k[0]).iter().all(Zero::is_zero));
        assert_eq!(k[0], vec![BigInt::from(1), BigInt::from(-2), BigInt::from(1)]);
    }

    #[test]
    fn overflow_falls_back_to_big_integers() {
        let big = i64::MAX;
        let m = [vec![big, big - 1, 3], vec![big - 2, big, 5], vec![7, big - 5, big]];
        let rows: Vec<_> = m.iter().map(|r| row(r)).collect();
        assert_eq!(rank(3, &rows), 3);
        assert!(kernel(3, &rows).is_empty());
    }

    #[test]
    fn extend_picks_independent() {
        let base = vec![row(&[1, 0, 0])];
        let cand = vec![row(&[2, 0, 0]), row(&[1, 1, 0]), row(&[0, 3, 0]), row(&[0, 0, 1])];
        assert_eq!(extend_basis(3, &base, &cand), vec![1, 3]);
    }

    proptest::proptest! {
        #[test]
        fn kernel_vectors_annihilate(m in proptest::collection::vec(proptest::collection::vec(-3i64..4, 5), 0..6)) {
            let rows: Vec<_> = m.iter().map(|r| row(r)).collect();
            let k = kernel(5, &rows);
            proptest::prop_assert_eq!(k.len() + rank(5, &rows), 5);
            for x in &k {
                proptest::prop_assert!(apply(&m, x).iter().all(Zero::is_zero));
            }
        }
    }
}
