//! Exact dense linear algebra over a field scalar.
//!
//! Small and unoptimized on purpose: the spaces involved have dimension at
//! most the rank of the root system.

use crate::scalar::{from_int, Scalar};

/// Element of the dual root space, with coordinates in the simple-root basis.
#[derive(Debug, Clone, PartialEq)]
pub struct RationalVector<T: Scalar> {
    coords: Vec<T>,
}

impl<T: Scalar> RationalVector<T> {
    pub fn new(coords: Vec<T>) -> Self {
        Self { coords }
    }

    pub fn zero(dim: usize) -> Self {
        Self { coords: vec![T::zero(); dim] }
    }

    /// Embeds an integer coordinate vector (e.g. a root).
    pub fn from_ints(coords: &[i64]) -> Self {
        Self { coords: coords.iter().map(|&c| from_int(c)).collect() }
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[T] {
        &self.coords
    }

    pub fn coord(&self, i: usize) -> &T {
        &self.coords[i]
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.dim(), other.dim());
        Self {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.dim(), other.dim());
        Self {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a.clone() - b.clone())
                .collect(),
        }
    }

    pub fn neg(&self) -> Self {
        Self { coords: self.coords.iter().map(|a| -a.clone()).collect() }
    }

    pub fn scale(&self, s: &T) -> Self {
        Self { coords: self.coords.iter().map(|a| a.clone() * s.clone()).collect() }
    }
}

/// Dense matrix over the scalar field, row major.
#[derive(Debug, Clone, PartialEq)]
pub struct Matrix<T: Scalar> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Scalar> Matrix<T> {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![T::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            *m.at_mut(i, i) = T::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c));
        Self { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.cols + j]
    }

    pub fn at_mut(&mut self, i: usize, j: usize) -> &mut T {
        &mut self.data[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows);
        let mut out = Self::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k).clone();
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let t = a.clone() * other.at(k, j).clone();
                    *out.at_mut(i, j) = out.at(i, j).clone() + t;
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &RationalVector<T>) -> RationalVector<T> {
        assert_eq!(self.cols, v.dim());
        let mut out = vec![T::zero(); self.rows];
        for i in 0..self.rows {
            let mut acc = T::zero();
            for j in 0..self.cols {
                acc = acc + self.at(i, j).clone() * v.coord(j).clone();
            }
            out[i] = acc;
        }
        RationalVector::new(out)
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols && (0..self.rows).all(|i| {
            (0..self.cols).all(|j| {
                if i == j {
                    self.at(i, j).is_one()
                } else {
                    self.at(i, j).is_zero()
                }
            })
        })
    }
}

/// Solves `A x = b` by Gaussian elimination. Returns `None` when the system
/// is inconsistent; when the solution space is positive-dimensional an
/// arbitrary (pivot-determined) solution is returned.
pub fn solve<T: Scalar>(a: &Matrix<T>, b: &[T]) -> Option<Vec<T>> {
    assert_eq!(a.rows(), b.len());
    let rows = a.rows();
    let cols = a.cols();
    let mut m: Vec<Vec<T>> = (0..rows)
        .map(|i| {
            let mut row = a.row(i).to_vec();
            row.push(b[i].clone());
            row
        })
        .collect();

    let mut pivot_cols = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = T::one() / m[r][c].clone();
        for j in c..=cols {
            m[r][j] = m[r][j].clone() * inv.clone();
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in c..=cols {
                    let t = f.clone() * m[r][j].clone();
                    m[i][j] = m[i][j].clone() - t;
                }
            }
        }
        pivot_cols.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    // Inconsistent iff a zero row has nonzero rhs.
    for row in m.iter().skip(r) {
        if row[cols] != T::zero() && row[..cols].iter().all(|x| x.is_zero()) {
            return None;
        }
    }
    let mut x = vec![T::zero(); cols];
    for (k, &c) in pivot_cols.iter().enumerate() {
        x[c] = m[k][cols].clone();
    }
    Some(x)
}

/// Row-reduces the given vectors and returns a basis of their span.
pub fn row_space_basis<T: Scalar>(vecs: &[RationalVector<T>]) -> Vec<RationalVector<T>> {
    if vecs.is_empty() {
        return Vec::new();
    }
    let cols = vecs[0].dim();
    let mut m: Vec<Vec<T>> = vecs.iter().map(|v| v.coords().to_vec()).collect();
    let mut basis = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = T::one() / m[r][c].clone();
        for j in 0..cols {
            m[r][j] = m[r][j].clone() * inv.clone();
        }
        for i in 0..m.len() {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in 0..cols {
                    let t = f.clone() * m[r][j].clone();
                    m[i][j] = m[i][j].clone() - t;
                }
            }
        }
        r += 1;
        if r == m.len() {
            break;
        }
    }
    for row in m.into_iter().take(r) {
        basis.push(RationalVector::new(row));
    }
    basis
}

pub fn span_rank<T: Scalar>(vecs: &[RationalVector<T>]) -> usize {
    row_space_basis(vecs).len()
}

/// Whether `v` lies in the span of `vecs`.
pub fn in_span<T: Scalar>(v: &RationalVector<T>, vecs: &[RationalVector<T>]) -> bool {
    if v.is_zero() {
        return true;
    }
    let mut all: Vec<RationalVector<T>> = vecs.to_vec();
    let rank_before = span_rank(&all);
    all.push(v.clone());
    span_rank(&all) == rank_before
}

/// Whether two families span the same subspace.
pub fn spans_equal<T: Scalar>(a: &[RationalVector<T>], b: &[RationalVector<T>]) -> bool {
    a.iter().all(|v| in_span(v, b)) && b.iter().all(|v| in_span(v, a))
}

/// Expresses `v` in the given (independent) basis, if possible.
pub fn coordinates_in_basis<T: Scalar>(
    v: &RationalVector<T>,
    basis: &[RationalVector<T>],
) -> Option<Vec<T>> {
    if basis.is_empty() {
        return v.is_zero().then(Vec::new);
    }
    let dim = v.dim();
    let mut rows = Vec::with_capacity(dim);
    for i in 0..dim {
        rows.push(basis.iter().map(|b| b.coord(i).clone()).collect::<Vec<_>>());
    }
    let a = Matrix::from_rows(rows);
    let x = solve(&a, v.coords())?;
    // `solve` ignores surplus equations only when consistent; re-check.
    let mut recon = RationalVector::zero(dim);
    for (c, b) in x.iter().zip(basis) {
        recon = recon.add(&b.scale(c));
    }
    (&recon == v).then_some(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rat;

    fn rv(cs: &[i64]) -> RationalVector<Rat> {
        RationalVector::from_ints(cs)
    }

    #[test]
    fn solve_simple_system() {
        // 2x - y = 1, -x + 2y = 1  =>  x = y = 1
        let a = Matrix::from_rows(vec![
            vec![from_int::<Rat>(2), from_int(-1)],
            vec![from_int(-1), from_int(2)],
        ]);
        let x = solve(&a, &[from_int(1), from_int(1)]).unwrap();
        assert_eq!(x, vec![from_int::<Rat>(1), from_int(1)]);
    }

    #[test]
    fn span_operations() {
        let v1 = rv(&[1, 0, 1]);
        let v2 = rv(&[0, 1, 1]);
        let sum = rv(&[1, 1, 2]);
        let out = rv(&[1, 1, 1]);
        assert_eq!(span_rank(&[v1.clone(), v2.clone(), sum.clone()]), 2);
        assert!(in_span(&sum, &[v1.clone(), v2.clone()]));
        assert!(!in_span(&out, &[v1.clone(), v2.clone()]));
        assert!(spans_equal(&[v1.clone(), v2.clone()], &[sum.clone(), v1.clone()]));
        let coords = coordinates_in_basis(&sum, &[v1, v2]).unwrap();
        assert_eq!(coords, vec![from_int::<Rat>(1), from_int(1)]);
    }
}
