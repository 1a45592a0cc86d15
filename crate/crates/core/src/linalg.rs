//! Dense exact linear algebra over a [`Field`].
//!
//! Graded pieces in this crate are tiny, so everything is plain Gaussian
//! elimination on row-major storage.

use crate::error::{Error, Result};
use crate::field::Field;

/// Largest column count accepted by elimination routines.
pub const MAX_COLUMNS: usize = 2000;

#[derive(Debug, Clone, PartialEq)]
pub struct Matrix<E> {
    rows: usize,
    cols: usize,
    data: Vec<E>,
}

impl<E: Clone> Matrix<E> {
    pub fn from_vec(rows: usize, cols: usize, data: Vec<E>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::ShapeMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        Ok(Self { rows, cols, data })
    }

    pub fn filled(rows: usize, cols: usize, value: E) -> Self {
        Self {
            rows,
            cols,
            data: vec![value; rows * cols],
        }
    }

    pub fn zeros<F: Field<Elem = E>>(field: &F, rows: usize, cols: usize) -> Self {
        Self::filled(rows, cols, field.zero())
    }

    pub fn identity<F: Field<Elem = E>>(field: &F, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    /// Builds a matrix whose columns are the given vectors.
    pub fn from_columns<F: Field<Elem = E>>(field: &F, rows: usize, columns: &[Vec<E>]) -> Self {
        let mut m = Self::zeros(field, rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            debug_assert_eq!(col.len(), rows);
            for (i, v) in col.iter().enumerate() {
                m.set(i, j, v.clone());
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn get(&self, i: usize, j: usize) -> &E {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: E) {
        self.data[i * self.cols + j] = v;
    }

    pub fn entries(&self) -> &[E] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[E] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<E> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut data = Vec::with_capacity(self.data.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                data.push(self.get(i, j).clone());
            }
        }
        Self {
            rows: self.cols,
            cols: self.rows,
            data,
        }
    }

    /// Keeps the listed columns, in the given order.
    pub fn select_columns(&self, cols: &[usize]) -> Self {
        let mut data = Vec::with_capacity(self.rows * cols.len());
        for i in 0..self.rows {
            for &j in cols {
                data.push(self.get(i, j).clone());
            }
        }
        Self {
            rows: self.rows,
            cols: cols.len(),
            data,
        }
    }

    /// Horizontal concatenation.
    pub fn hstack(&self, other: &Self) -> Result<Self> {
        if self.rows != other.rows {
            return Err(Error::ShapeMismatch(format!(
                "hstack of {}x{} and {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut data = Vec::with_capacity(self.data.len() + other.data.len());
        for i in 0..self.rows {
            data.extend_from_slice(self.row(i));
            data.extend_from_slice(other.row(i));
        }
        Ok(Self {
            rows: self.rows,
            cols: self.cols + other.cols,
            data,
        })
    }

    pub fn is_zero<F: Field<Elem = E>>(&self, field: &F) -> bool {
        self.data.iter().all(|x| field.is_zero(x))
    }

    pub fn mul<F: Field<Elem = E>>(&self, field: &F, rhs: &Self) -> Result<Self> {
        if self.cols != rhs.rows {
            return Err(Error::ShapeMismatch(format!(
                "product of {}x{} and {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = Self::zeros(field, self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if field.is_zero(a) {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if field.is_zero(b) {
                        continue;
                    }
                    let cur = out.get(i, j).clone();
                    out.set(i, j, field.add(&cur, &field.mul(a, b)));
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec<F: Field<Elem = E>>(&self, field: &F, v: &[E]) -> Result<Vec<E>> {
        if v.len() != self.cols {
            return Err(Error::ShapeMismatch(format!(
                "{}x{} matrix times vector of length {}",
                self.rows,
                self.cols,
                v.len()
            )));
        }
        Ok((0..self.rows)
            .map(|i| {
                self.row(i).iter().zip(v).fold(field.zero(), |acc, (a, b)| {
                    field.add(&acc, &field.mul(a, b))
                })
            })
            .collect())
    }

    pub fn sub<F: Field<Elem = E>>(&self, field: &F, rhs: &Self) -> Result<Self> {
        if self.shape() != rhs.shape() {
            return Err(Error::ShapeMismatch("difference of unequal shapes".into()));
        }
        Ok(Self {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| field.sub(a, b))
                .collect(),
        })
    }
}

/// Result of a reduced row echelon computation.
#[derive(Debug, Clone)]
pub struct Echelon<E> {
    pub rref: Matrix<E>,
    pub pivots: Vec<usize>,
}

fn guard_cols(cols: usize) -> Result<()> {
    if cols > MAX_COLUMNS {
        return Err(Error::GuardExceeded {
            what: "dense elimination columns".into(),
            count: cols as u128,
            limit: MAX_COLUMNS as u128,
        });
    }
    Ok(())
}

pub fn rref<F: Field>(field: &F, a: &Matrix<F::Elem>) -> Result<Echelon<F::Elem>> {
    guard_cols(a.cols)?;
    let mut m = a.clone();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..m.cols {
        if r == m.rows {
            break;
        }
        let Some(pr) = (r..m.rows).find(|&i| !field.is_zero(m.get(i, c))) else {
            continue;
        };
        if pr != r {
            for j in 0..m.cols {
                m.data.swap(pr * m.cols + j, r * m.cols + j);
            }
        }
        let inv = field.inv(m.get(r, c)).expect("nonzero pivot");
        for j in c..m.cols {
            let v = field.mul(m.get(r, j), &inv);
            m.set(r, j, v);
        }
        for i in 0..m.rows {
            if i == r {
                continue;
            }
            let factor = m.get(i, c).clone();
            if field.is_zero(&factor) {
                continue;
            }
            for j in c..m.cols {
                let v = field.sub(m.get(i, j), &field.mul(&factor, m.get(r, j)));
                m.set(i, j, v);
            }
        }
        pivots.push(c);
        r += 1;
    }
    Ok(Echelon { rref: m, pivots })
}

pub fn rank<F: Field>(field: &F, a: &Matrix<F::Elem>) -> Result<usize> {
    if a.rows == 0 || a.cols == 0 {
        return Ok(0);
    }
    // eliminate along the shorter side
    if a.cols > a.rows {
        return Ok(rref(field, &a.transpose())?.pivots.len());
    }
    Ok(rref(field, a)?.pivots.len())
}

/// Columns form a basis of the kernel. The result has `cols(A)` rows.
pub fn kernel_basis<F: Field>(field: &F, a: &Matrix<F::Elem>) -> Result<Matrix<F::Elem>> {
    let n = a.cols;
    if a.rows == 0 {
        return Ok(Matrix::identity(field, n));
    }
    let ech = rref(field, a)?;
    let free: Vec<usize> = (0..n).filter(|c| !ech.pivots.contains(c)).collect();
    let mut basis = Matrix::zeros(field, n, free.len());
    for (k, &fc) in free.iter().enumerate() {
        basis.set(fc, k, field.one());
        for (row, &pc) in ech.pivots.iter().enumerate() {
            let v = field.neg(ech.rref.get(row, fc));
            basis.set(pc, k, v);
        }
    }
    Ok(basis)
}

/// Some `x` with `A x = b`, or `None` when the system is inconsistent.
pub fn solve<F: Field>(
    field: &F,
    a: &Matrix<F::Elem>,
    b: &[F::Elem],
) -> Result<Option<Vec<F::Elem>>> {
    if b.len() != a.rows {
        return Err(Error::ShapeMismatch(format!(
            "right-hand side of length {} for {} rows",
            b.len(),
            a.rows
        )));
    }
    let bcol = Matrix::from_vec(a.rows, 1, b.to_vec())?;
    let aug = a.hstack(&bcol)?;
    let ech = rref(field, &aug)?;
    if ech.pivots.last() == Some(&a.cols) {
        return Ok(None);
    }
    let mut x = vec![field.zero(); a.cols];
    for (row, &pc) in ech.pivots.iter().enumerate() {
        x[pc] = ech.rref.get(row, a.cols).clone();
    }
    Ok(Some(x))
}

/// Solves `A X = B` column by column; `None` if any column is inconsistent.
pub fn solve_matrix<F: Field>(
    field: &F,
    a: &Matrix<F::Elem>,
    b: &Matrix<F::Elem>,
) -> Result<Option<Matrix<F::Elem>>> {
    if b.rows != a.rows {
        return Err(Error::ShapeMismatch("solve_matrix row mismatch".into()));
    }
    let aug = a.hstack(b)?;
    let ech = rref(field, &aug)?;
    if ech.pivots.iter().any(|&p| p >= a.cols) {
        return Ok(None);
    }
    let mut x = Matrix::zeros(field, a.cols, b.cols);
    for (row, &pc) in ech.pivots.iter().enumerate() {
        for j in 0..b.cols {
            x.set(pc, j, ech.rref.get(row, a.cols + j).clone());
        }
    }
    Ok(Some(x))
}

/// Indices of standard basis vectors completing the column span of `a` to
/// the whole space, chosen greedily in increasing order.
pub fn complement_basis<F: Field>(field: &F, a: &Matrix<F::Elem>) -> Result<Vec<usize>> {
    let n = a.rows;
    let id = Matrix::identity(field, n);
    let aug = a.hstack(&id)?;
    let ech = rref(field, &aug)?;
    Ok(ech
        .pivots
        .iter()
        .filter(|&&p| p >= a.cols)
        .map(|&p| p - a.cols)
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, RationalField};

    fn int_matrix<F: Field>(f: &F, rows: usize, cols: usize, v: &[i64]) -> Matrix<F::Elem> {
        Matrix::from_vec(rows, cols, v.iter().map(|&x| f.from_i64(x)).collect()).unwrap()
    }

    #[test]
    fn identity_has_full_rank() {
        let f = PrimeField::default();
        let id = Matrix::identity(&f, 3);
        assert_eq!(rank(&f, &id).unwrap(), 3);
        assert_eq!(kernel_basis(&f, &id).unwrap().cols(), 0);
    }

    #[test]
    fn zero_matrix_kernel() {
        let f = RationalField;
        let z = Matrix::zeros(&f, 2, 3);
        assert_eq!(rank(&f, &z).unwrap(), 0);
        assert_eq!(kernel_basis(&f, &z).unwrap().cols(), 3);
    }

    #[test]
    fn kernel_vectors_are_annihilated() {
        let f = RationalField;
        let a = int_matrix(&f, 2, 4, &[1, 2, 3, 4, 2, 4, 6, 9]);
        let k = kernel_basis(&f, &a).unwrap();
        assert_eq!(k.cols(), 2);
        assert!(a.mul(&f, &k).unwrap().is_zero(&f));
    }

    #[test]
    fn solve_consistent_and_inconsistent() {
        let f = PrimeField::default();
        let a = int_matrix(&f, 2, 2, &[1, 1, 2, 2]);
        let b = vec![f.from_i64(3), f.from_i64(6)];
        let x = solve(&f, &a, &b).unwrap().unwrap();
        assert_eq!(a.mul_vec(&f, &x).unwrap(), b);
        let bad = vec![f.from_i64(3), f.from_i64(7)];
        assert!(solve(&f, &a, &bad).unwrap().is_none());
    }

    #[test]
    fn shape_errors() {
        let f = PrimeField::default();
        let a = Matrix::zeros(&f, 2, 3);
        assert!(a.mul(&f, &a).is_err());
        assert!(solve(&f, &a, &[0]).is_err());
        assert!(Matrix::from_vec(2, 2, vec![0u64; 3]).is_err());
    }

    #[test]
    fn complement_completes_span() {
        let f = RationalField;
        let a = int_matrix(&f, 3, 1, &[1, 1, 0]);
        let c = complement_basis(&f, &a).unwrap();
        assert_eq!(c.len(), 2);
        let mut full = a.clone();
        for i in c {
            let mut e = vec![f.zero(); 3];
            e[i] = f.one();
            full = full.hstack(&Matrix::from_vec(3, 1, e).unwrap()).unwrap();
        }
        assert_eq!(rank(&f, &full).unwrap(), 3);
    }

    #[test]
    fn prime_and_rational_ranks_agree() {
        use rand::Rng;
        let (p, q) = (PrimeField::default(), RationalField);
        let mut r = crate::sample::rng(crate::sample::DEFAULT_SEED);
        for _ in 0..100 {
            let v: Vec<i64> = (0..64).map(|_| r.gen_range(-3..=3)).collect();
            let a = int_matrix(&p, 8, 8, &v);
            let b = int_matrix(&q, 8, 8, &v);
            assert_eq!(rank(&p, &a).unwrap(), rank(&q, &b).unwrap(), "{v:?}");
        }
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn matrix() -> impl Strategy<Value = (usize, usize, Vec<i64>)> {
            (1usize..6, 1usize..6).prop_flat_map(|(r, c)| {
                (
                    Just(r),
                    Just(c),
                    proptest::collection::vec(-4i64..=4, r * c),
                )
            })
        }

        proptest! {
            #[test]
            fn rank_plus_nullity((r, c, v) in matrix()) {
                let f = RationalField;
                let a = int_matrix(&f, r, c, &v);
                let k = kernel_basis(&f, &a).unwrap();
                prop_assert_eq!(rank(&f, &a).unwrap() + k.cols(), c);
                prop_assert!(a.mul(&f, &k).unwrap().is_zero(&f));
            }

            #[test]
            fn rref_is_idempotent((r, c, v) in matrix()) {
                let f = PrimeField::default();
                let a = int_matrix(&f, r, c, &v);
                let e = rref(&f, &a).unwrap();
                let e2 = rref(&f, &e.rref).unwrap();
                prop_assert_eq!(e.rref, e2.rref);
                prop_assert_eq!(e.pivots, e2.pivots);
            }

            #[test]
            fn solve_recovers_images((r, c, v) in matrix(), x in proptest::collection::vec(-4i64..=4, 6)) {
                let f = RationalField;
                let a = int_matrix(&f, r, c, &v);
                let x: Vec<_> = x[..c].iter().map(|&t| f.from_i64(t)).collect();
                let b = a.mul_vec(&f, &x).unwrap();
                let y = solve(&f, &a, &b).unwrap().expect("b is in the image");
                prop_assert_eq!(a.mul_vec(&f, &y).unwrap(), b);
            }
        }
    }
}
