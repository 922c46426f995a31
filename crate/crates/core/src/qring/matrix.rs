//! Dense matrices over exact fields: echelon forms, rank and nullspace.
//!
//! Pivoting is deterministic: columns are scanned left to right and the first
//! row (from the current one down) with a nonzero entry becomes the pivot row.

#![allow(clippy::needless_range_loop)]

use std::fmt::Debug;

use super::laurent::LaurentPolynomial;
use super::quadratic::QuadraticFieldElement;
use super::ratfunc::RationalFunction;
use crate::error::{Error, Result};

/// Minimal exact-field interface. Elements carry enough context to produce
/// their own zero and one (needed for `Q(sqrt q)`, whose elements know `q`).
pub trait Field: Clone + PartialEq + Debug {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn inv(&self) -> Option<Self>;

    /// Whether two elements may be combined.
    fn compatible(&self, _other: &Self) -> bool {
        true
    }

    /// Error describing why `compatible` failed.
    fn incompatibility(&self, _other: &Self) -> Error {
        Error::SpaceMismatch
    }

    /// Reduced row-echelon form; fields may override with a smarter scheme.
    fn reduced_echelon(m: &ExactMatrix<Self>) -> Echelon<Self> {
        gauss_jordan(m)
    }
}

/// Fields with an ordering compatible with the ring operations.
pub trait OrderedField: Field {
    fn signum(&self) -> i32;
}

impl Field for RationalFunction {
    fn zero_like(&self) -> Self {
        RationalFunction::zero()
    }
    fn one_like(&self) -> Self {
        RationalFunction::one()
    }
    fn is_zero(&self) -> bool {
        RationalFunction::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Option<Self> {
        RationalFunction::inv(self)
    }
    fn reduced_echelon(m: &ExactMatrix<Self>) -> Echelon<Self> {
        bareiss_reduced_echelon(m)
    }
}

impl Field for QuadraticFieldElement {
    fn zero_like(&self) -> Self {
        QuadraticFieldElement::zero(self.prime())
    }
    fn one_like(&self) -> Self {
        QuadraticFieldElement::one(self.prime())
    }
    fn is_zero(&self) -> bool {
        QuadraticFieldElement::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Option<Self> {
        QuadraticFieldElement::inv(self)
    }
    fn compatible(&self, other: &Self) -> bool {
        self.radicand() == other.radicand()
    }
    fn incompatibility(&self, other: &Self) -> Error {
        Error::MixedRadicand(self.radicand(), other.radicand())
    }
}

impl OrderedField for QuadraticFieldElement {
    fn signum(&self) -> i32 {
        QuadraticFieldElement::signum(self)
    }
}

/// A rectangular matrix stored row-major.
///
/// `unit` is a representative element used to create zeros and ones; it is
/// what lets empty matrices over `Q(sqrt q)` still know their field.
#[derive(Clone, Debug, PartialEq)]
pub struct ExactMatrix<T> {
    rows: usize,
    cols: usize,
    entries: Vec<T>,
    unit: T,
}

/// Result of a reduced row-echelon computation.
#[derive(Clone, Debug, PartialEq)]
pub struct Echelon<T> {
    /// Nonzero rows of the reduced echelon form (pivot entries are one).
    pub rows: Vec<Vec<T>>,
    /// Pivot column of each row.
    pub pivots: Vec<usize>,
}

impl<T: Field> ExactMatrix<T> {
    /// Builds a matrix from rows. `unit` fixes the field (any element of it).
    pub fn from_rows(rows: Vec<Vec<T>>, cols: usize, unit: &T) -> Result<Self> {
        let nrows = rows.len();
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::Ragged);
        }
        let entries: Vec<T> = rows.into_iter().flatten().collect();
        for e in &entries {
            if !e.compatible(unit) {
                return Err(e.incompatibility(unit));
            }
        }
        Ok(Self {
            rows: nrows,
            cols,
            entries,
            unit: unit.one_like(),
        })
    }

    pub fn zeros(rows: usize, cols: usize, unit: &T) -> Self {
        Self {
            rows,
            cols,
            entries: vec![unit.zero_like(); rows * cols],
            unit: unit.one_like(),
        }
    }

    pub fn identity(n: usize, unit: &T) -> Self {
        let mut m = Self::zeros(n, n, unit);
        for i in 0..n {
            m.set(i, i, unit.one_like());
        }
        m
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &T {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: T) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[T] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<T>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn unit(&self) -> &T {
        &self.unit
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows, &self.unit);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    pub fn is_symmetric(&self) -> bool {
        self.rows == self.cols && (0..self.rows).all(|r| (0..r).all(|c| self.get(r, c) == self.get(c, r)))
    }

    /// Rows selected by index, in the given order.
    pub fn select_rows(&self, idx: &[usize]) -> Self {
        Self {
            rows: idx.len(),
            cols: self.cols,
            entries: idx.iter().flat_map(|&r| self.row(r).iter().cloned()).collect(),
            unit: self.unit.clone(),
        }
    }

    pub fn mul_vec(&self, v: &[T]) -> Vec<T> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .fold(self.unit.zero_like(), |acc, (a, b)| acc.add(&a.mul(b)))
            })
            .collect()
    }

    pub fn reduced_echelon(&self) -> Echelon<T> {
        T::reduced_echelon(self)
    }

    pub fn rank(&self) -> usize {
        self.reduced_echelon().pivots.len()
    }

    /// A basis of the right nullspace, one vector per free column (in column
    /// order), with a one at the free column and zeros at the other free
    /// columns.
    pub fn kernel(&self) -> Vec<Vec<T>> {
        kernel_from_echelon(&self.reduced_echelon(), self.cols, &self.unit)
    }

    /// Positive semidefiniteness of a symmetric matrix over an ordered field,
    /// via symmetric Gaussian elimination.
    pub fn is_positive_semidefinite(&self) -> bool
    where
        T: OrderedField,
    {
        if !self.is_symmetric() {
            return false;
        }
        let n = self.rows;
        let mut a: Vec<Vec<T>> = self.row_vecs();
        for k in 0..n {
            let s = a[k][k].signum();
            if s < 0 {
                return false;
            }
            if s == 0 {
                if (k..n).any(|j| !a[k][j].is_zero()) {
                    return false;
                }
                continue;
            }
            let inv = a[k][k].inv().unwrap();
            for i in k + 1..n {
                if a[i][k].is_zero() {
                    continue;
                }
                let f = a[i][k].mul(&inv);
                for j in k..n {
                    let d = f.mul(&a[k][j]);
                    a[i][j] = a[i][j].sub(&d);
                }
            }
        }
        true
    }
}

/// Nullspace basis read off a reduced echelon form.
pub fn kernel_from_echelon<T: Field>(ech: &Echelon<T>, cols: usize, unit: &T) -> Vec<Vec<T>> {
    let mut is_pivot = vec![false; cols];
    for &p in &ech.pivots {
        is_pivot[p] = true;
    }
    (0..cols)
        .filter(|&c| !is_pivot[c])
        .map(|free| {
            let mut v = vec![unit.zero_like(); cols];
            v[free] = unit.one_like();
            for (row, &p) in ech.rows.iter().zip(&ech.pivots) {
                v[p] = row[free].neg();
            }
            v
        })
        .collect()
}

/// Plain Gauss-Jordan elimination.
pub fn gauss_jordan<T: Field>(m: &ExactMatrix<T>) -> Echelon<T> {
    let mut a = m.row_vecs();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..m.cols {
        if r == a.len() {
            break;
        }
        let Some(p) = (r..a.len()).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let inv = a[r][c].inv().unwrap();
        for x in a[r].iter_mut() {
            *x = x.mul(&inv);
        }
        for i in 0..a.len() {
            if i != r && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                for j in c..m.cols {
                    let d = f.mul(&a[r][j]);
                    a[i][j] = a[i][j].sub(&d);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    a.truncate(r);
    Echelon { rows: a, pivots }
}

/// Fraction-free (Bareiss) forward elimination over `Z[v, v^-1]`, then back
/// substitution in `Q(v)` on the pivot rows only.
///
/// Rows are first cleared of denominators; during forward elimination every
/// entry stays a Laurent polynomial because each update is divided exactly by
/// the previous pivot.
pub fn bareiss_reduced_echelon(m: &ExactMatrix<RationalFunction>) -> Echelon<RationalFunction> {
    let cols = m.ncols();
    let mut a: Vec<Vec<LaurentPolynomial>> = (0..m.nrows()).map(|r| clear_denominators(m.row(r))).collect();
    let mut pivots = Vec::new();
    let mut prev = LaurentPolynomial::one();
    let mut r = 0;
    for c in 0..cols {
        if r == a.len() {
            break;
        }
        let Some(p) = (r..a.len()).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let (head, tail) = a.split_at_mut(r + 1);
        let pivot_row = &head[r];
        for row in tail.iter_mut() {
            let f = row[c].clone();
            for j in 0..cols {
                let v = &(&pivot_row[c] * &row[j]) - &(&f * &pivot_row[j]);
                row[j] = v.div_exact(&prev).expect("bareiss division is exact");
            }
        }
        prev = a[r][c].clone();
        pivots.push(c);
        r += 1;
    }
    a.truncate(r);

    // back substitution over Q(v)
    let mut rows: Vec<Vec<RationalFunction>> = a
        .into_iter()
        .map(|row| row.into_iter().map(RationalFunction::from_laurent).collect())
        .collect();
    for k in (0..rows.len()).rev() {
        let c = pivots[k];
        let inv = rows[k][c].inv().unwrap();
        for x in rows[k].iter_mut() {
            if !x.is_zero() {
                *x = &*x * &inv;
            }
        }
        for i in 0..k {
            if rows[i][c].is_zero() {
                continue;
            }
            let f = rows[i][c].clone();
            for j in c..cols {
                if rows[k][j].is_zero() {
                    continue;
                }
                let d = &f * &rows[k][j];
                rows[i][j] = &rows[i][j] - &d;
            }
        }
    }
    Echelon { rows, pivots }
}

fn clear_denominators(row: &[RationalFunction]) -> Vec<LaurentPolynomial> {
    let mut lcm = LaurentPolynomial::one();
    for x in row {
        let d = x.denominator();
        if d.is_one() {
            continue;
        }
        let g = lcm.gcd(d);
        lcm = &lcm * &d.div_exact(&g).unwrap();
    }
    row.iter()
        .map(|x| {
            let scale = lcm.div_exact(x.denominator()).unwrap();
            x.numerator() * &scale
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qring::Prime;

    fn rf(n: i64) -> RationalFunction {
        RationalFunction::from_int(n)
    }

    #[test]
    fn identity_has_trivial_kernel() {
        let m = ExactMatrix::identity(2, &rf(1));
        assert!(m.kernel().is_empty());
        assert_eq!(m.rank(), 2);
    }

    #[test]
    fn all_ones_kernel() {
        let m = ExactMatrix::from_rows(vec![vec![rf(1), rf(1)], vec![rf(1), rf(1)]], 2, &rf(1)).unwrap();
        assert_eq!(m.kernel(), vec![vec![rf(-1), rf(1)]]);
        // same up to scaling as (1, -1)
        let q = Prime::new(2).unwrap();
        let one = QuadraticFieldElement::one(q);
        let mq = ExactMatrix::from_rows(vec![vec![one.clone(), one.clone()]; 2], 2, &one).unwrap();
        assert_eq!(mq.kernel().len(), 1);
    }

    #[test]
    fn mixed_radicands_rejected() {
        let a = QuadraticFieldElement::one(Prime::new(2).unwrap());
        let b = QuadraticFieldElement::one(Prime::new(3).unwrap());
        let err = ExactMatrix::from_rows(vec![vec![a.clone(), b]], 2, &a).unwrap_err();
        assert!(matches!(err, Error::MixedRadicand(3, 2)));
        assert!(matches!(
            ExactMatrix::from_rows(vec![vec![rf(1)], vec![]], 1, &rf(1)),
            Err(Error::Ragged)
        ));
    }

    #[test]
    fn bareiss_matches_gauss_jordan() {
        let v = RationalFunction::v_pow(1);
        let w = &v + &rf(1);
        let rows = vec![
            vec![v.clone(), w.clone(), rf(2), &v * &w],
            vec![&v * &v, &v * &w, &v * &rf(2), &(&v * &v) * &w],
            vec![rf(1), w.inv().unwrap(), v.inv().unwrap(), rf(0)],
        ];
        let m = ExactMatrix::from_rows(rows, 4, &rf(1)).unwrap();
        let a = bareiss_reduced_echelon(&m);
        let b = gauss_jordan(&m);
        assert_eq!(a, b);
        assert_eq!(a.pivots.len(), 2);
        for k in m.kernel() {
            assert!(m.mul_vec(&k).iter().all(|x| x.is_zero()));
        }
    }

    #[test]
    fn psd_detection() {
        let q = Prime::new(3).unwrap();
        let e = |n| QuadraticFieldElement::from_int(n, q);
        let ok = ExactMatrix::from_rows(vec![vec![e(2), e(1)], vec![e(1), e(2)]], 2, &e(1)).unwrap();
        let bad = ExactMatrix::from_rows(vec![vec![e(1), e(2)], vec![e(2), e(1)]], 2, &e(1)).unwrap();
        let singular = ExactMatrix::from_rows(vec![vec![e(1), e(1)], vec![e(1), e(1)]], 2, &e(1)).unwrap();
        assert!(ok.is_positive_semidefinite());
        assert!(!bad.is_positive_semidefinite());
        assert!(singular.is_positive_semidefinite());
    }
}
