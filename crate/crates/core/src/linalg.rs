//! Dense exact linear algebra: row canonical form, rank, nullspace, leading
//! columns, inverse, and rational reconstruction of modular residues.

use std::fmt;
use std::ops::{Index, IndexMut};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::{Field, Rational};

/// Dense row-major matrix over a field.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Field> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![T::zero(); rows * cols] }
    }

    pub fn identity(k: usize) -> Self {
        let mut m = Self::zeros(k, k);
        for i in 0..k {
            m[(i, i)] = T::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.len());
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        let nrows = rows.len();
        Ok(Matrix { rows: nrows, cols, data: rows.into_iter().flatten().collect() })
    }

    /// Builds a matrix with a known column count, so that zero rows are representable.
    pub fn from_rows_with_cols(cols: usize, rows: Vec<Vec<T>>) -> Result<Self> {
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch(format!("expected rows of length {cols}")));
        }
        let nrows = rows.len();
        Ok(Matrix { rows: nrows, cols, data: rows.into_iter().flatten().collect() })
    }

    pub fn from_i64_rows(rows: &[Vec<i64>]) -> Result<Self> {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&v| T::from_int(v)).collect()).collect())
    }

    pub fn num_rows(&self) -> usize {
        self.rows
    }

    pub fn num_cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_mut(&mut self, i: usize) -> &mut [T] {
        &mut self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn rows_iter(&self) -> impl Iterator<Item = &[T]> {
        (0..self.rows).map(move |i| self.row(i))
    }

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        self.rows_iter().map(|r| r.to_vec()).collect()
    }

    /// Integer entries (symmetric residues over `F_p`); `None` if some entry is not an integer.
    pub fn to_i64_rows(&self) -> Option<Vec<Vec<i64>>> {
        self.rows_iter().map(|r| r.iter().map(|x| x.to_int()).collect()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix<T>) -> Result<Matrix<T>> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                let orow = other.row(k);
                let dst = out.row_mut(i);
                for (d, b) in dst.iter_mut().zip(orow) {
                    d.add_mul(a, b);
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[T]) -> Result<Vec<T>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch(format!("vector of length {} for {} columns", v.len(), self.cols)));
        }
        Ok(self
            .rows_iter()
            .map(|r| {
                let mut acc = T::zero();
                for (a, b) in r.iter().zip(v) {
                    acc.add_mul(a, b);
                }
                acc
            })
            .collect())
    }

    pub fn scale(&self, c: &T) -> Self {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| x.clone() * c.clone()).collect() }
    }

    pub fn add(&self, other: &Matrix<T>) -> Result<Matrix<T>> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch("matrix sum".into()));
        }
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a.clone() + b.clone()).collect(),
        })
    }

    /// Vertical concatenation.
    pub fn stack(&self, other: &Matrix<T>) -> Result<Matrix<T>> {
        if self.cols != other.cols {
            return Err(Error::DimensionMismatch(format!("stacking {} and {} columns", self.cols, other.cols)));
        }
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Ok(Matrix { rows: self.rows + other.rows, cols: self.cols, data })
    }

    /// Reduced row-echelon form, same shape, zero rows last.
    pub fn rcf(&self) -> Matrix<T> {
        let mut m = self.clone();
        m.rcf_in_place();
        m
    }

    /// Reduces in place and returns the rank.
    pub fn rcf_in_place(&mut self) -> usize {
        let (rows, cols) = (self.rows, self.cols);
        let mut r = 0;
        for c in 0..cols {
            if r == rows {
                break;
            }
            let Some(piv) = (r..rows).find(|&i| !self[(i, c)].is_zero()) else { continue };
            self.swap_rows(r, piv);
            let inv = self[(r, c)].inv().expect("nonzero pivot");
            for x in self.row_mut(r) {
                *x = x.clone() * inv.clone();
            }
            let pivot_row: Vec<T> = self.row(r)[c..].to_vec();
            for i in 0..rows {
                if i == r || self[(i, c)].is_zero() {
                    continue;
                }
                let f = -self[(i, c)].clone();
                let row = &mut self.row_mut(i)[c..];
                for (x, p) in row.iter_mut().zip(&pivot_row) {
                    x.add_mul(&f, p);
                }
            }
            r += 1;
        }
        r
    }

    /// Nonzero rows of the RCF.
    pub fn rcf_nonzero(&self) -> Matrix<T> {
        let mut m = self.rcf();
        let r = m.leading_columns_unchecked().len();
        m.data.truncate(r * m.cols);
        m.rows = r;
        m
    }

    pub fn rank(&self) -> usize {
        self.clone().rcf_in_place()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    pub fn is_rcf(&self) -> bool {
        let mut last: Option<usize> = None;
        let mut seen_zero = false;
        for i in 0..self.rows {
            match self.row(i).iter().position(|x| !x.is_zero()) {
                None => seen_zero = true,
                Some(c) => {
                    if seen_zero || last.is_some_and(|l| c <= l) || !self[(i, c)].is_one() {
                        return false;
                    }
                    if (0..self.rows).any(|k| k != i && !self[(k, c)].is_zero()) {
                        return false;
                    }
                    last = Some(c);
                }
            }
        }
        true
    }

    fn leading_columns_unchecked(&self) -> Vec<usize> {
        self.rows_iter().filter_map(|r| r.iter().position(|x| !x.is_zero())).collect()
    }

    /// Positions of the leading ones; errors unless the matrix is in RCF.
    pub fn leading_profile(&self) -> Result<LeadingProfile> {
        if !self.is_rcf() {
            return Err(Error::NotRcf);
        }
        Ok(LeadingProfile { pairs: self.leading_columns_unchecked().into_iter().enumerate().collect() })
    }

    /// Canonical nullspace basis: one vector per free column, that free
    /// variable set to 1 and the others to 0.
    pub fn nullspace_basis(&self) -> Vec<Vec<T>> {
        let r = self.rcf();
        let lead = r.leading_columns_unchecked();
        let mut is_lead = vec![false; self.cols];
        for &c in &lead {
            is_lead[c] = true;
        }
        (0..self.cols)
            .filter(|&f| !is_lead[f])
            .map(|f| {
                let mut v = vec![T::zero(); self.cols];
                v[f] = T::one();
                for (i, &c) in lead.iter().enumerate() {
                    v[c] = -r[(i, f)].clone();
                }
                v
            })
            .collect()
    }

    /// Inverse by Gauss-Jordan elimination.
    pub fn inverse(&self) -> Result<Matrix<T>> {
        if self.rows != self.cols {
            return Err(Error::DimensionMismatch(format!("{}x{} is not square", self.rows, self.cols)));
        }
        let k = self.rows;
        let mut aug = Self::zeros(k, 2 * k);
        for i in 0..k {
            for j in 0..k {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, k + i)] = T::one();
        }
        aug.rcf_in_place();
        for i in 0..k {
            if !aug[(i, i)].is_one() {
                return Err(Error::NotInvertible("singular matrix".into(), T::characteristic()));
            }
        }
        let mut inv = Self::zeros(k, k);
        for i in 0..k {
            inv.row_mut(i).clone_from_slice(&aug.row(i)[k..]);
        }
        Ok(inv)
    }

    /// CSV of the entries; each entry must be an integer.
    pub fn to_csv(&self) -> Result<String> {
        let rows = self.to_i64_rows().ok_or_else(|| Error::Parse("matrix has non-integer entries".into()))?;
        let mut out = String::new();
        for r in rows {
            let line: Vec<String> = r.iter().map(|v| v.to_string()).collect();
            out.push_str(&line.join(","));
            out.push('\n');
        }
        Ok(out)
    }

    pub fn from_csv(text: &str) -> Result<Self> {
        let rows: Vec<Vec<i64>> = text
            .lines()
            .filter(|l| !l.trim().is_empty())
            .map(|l| {
                l.split(',')
                    .map(|t| t.trim().parse::<i64>().map_err(|_| Error::Parse(format!("bad entry in {l:?}"))))
                    .collect()
            })
            .collect::<Result<_>>()?;
        Self::from_i64_rows(&rows)
    }
}

impl<T> Index<(usize, usize)> for Matrix<T> {
    type Output = T;
    #[inline]
    fn index(&self, (i, j): (usize, usize)) -> &T {
        &self.data[i * self.cols + j]
    }
}

impl<T> IndexMut<(usize, usize)> for Matrix<T> {
    #[inline]
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        &mut self.data[i * self.cols + j]
    }
}

impl<T: fmt::Display> fmt::Display for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.data.iter().map(|x| x.to_string()).collect();
        let width = cells.iter().map(|s| s.len()).max().unwrap_or(1);
        for row in cells.chunks(self.cols.max(1)) {
            let line: Vec<String> = row.iter().map(|s| format!("{s:>width$}")).collect();
            writeln!(f, "[{}]", line.join(" "))?;
        }
        Ok(())
    }
}

impl<T: fmt::Debug> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{}", self.rows, self.cols)?;
        for row in self.data.chunks(self.cols.max(1)) {
            writeln!(f, "{row:?}")?;
        }
        Ok(())
    }
}

/// Leading-one positions `(row, column)` of a matrix in RCF, both 0-based.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct LeadingProfile {
    pub pairs: Vec<(usize, usize)>,
}

impl LeadingProfile {
    /// The set of leading columns, increasing.
    pub fn jset(&self) -> Vec<usize> {
        self.pairs.iter().map(|&(_, j)| j).collect()
    }

    pub fn contains_column(&self, j: usize) -> bool {
        self.pairs.iter().any(|&(_, c)| c == j)
    }
}

impl fmt::Display for LeadingProfile {
    /// Sorted 1-based "(i,j)" pairs.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.pairs.iter().map(|(i, j)| format!("({},{})", i + 1, j + 1)).collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// Incremental row canonical form.
///
/// Rows are kept fully reduced, so each stored row is zero outside its own
/// pivot and the current free columns; reducing an incoming vector only
/// touches those free columns.
#[derive(Clone, Debug)]
pub struct RowReducer<T> {
    cols: usize,
    rows: Vec<Vec<T>>,
    pivots: Vec<usize>,
    pivot_row: Vec<Option<usize>>,
    free: Vec<usize>,
}

impl<T: Field> RowReducer<T> {
    pub fn new(cols: usize) -> Self {
        RowReducer { cols, rows: Vec::new(), pivots: Vec::new(), pivot_row: vec![None; cols], free: (0..cols).collect() }
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.cols
    }

    /// Reduces `v` against the stored rows; the result is zero on every pivot column.
    pub fn reduce(&self, v: &mut [T]) {
        debug_assert_eq!(v.len(), self.cols);
        for (k, &c) in self.pivots.iter().enumerate() {
            if v[c].is_zero() {
                continue;
            }
            let f = -v[c].clone();
            let row = &self.rows[k];
            for &j in &self.free {
                if !row[j].is_zero() {
                    v[j].add_mul(&f, &row[j]);
                }
            }
            v[c] = T::zero();
        }
    }

    /// Whether `v` lies in the current row space.
    pub fn contains(&self, v: &[T]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w.iter().all(|x| x.is_zero())
    }

    /// Adds a row; returns `true` if the rank went up.
    pub fn insert(&mut self, mut v: Vec<T>) -> bool {
        if self.is_full() {
            return false;
        }
        self.reduce(&mut v);
        let Some(&c) = self.free.iter().find(|&&j| !v[j].is_zero()) else { return false };
        let inv = v[c].inv().expect("nonzero");
        for &j in &self.free {
            if !v[j].is_zero() {
                v[j] = v[j].clone() * inv.clone();
            }
        }
        self.free.retain(|&j| j != c);
        for row in self.rows.iter_mut() {
            if row[c].is_zero() {
                continue;
            }
            let f = -row[c].clone();
            for &j in &self.free {
                if !v[j].is_zero() {
                    row[j].add_mul(&f, &v[j]);
                }
            }
            row[c] = T::zero();
        }
        self.pivot_row[c] = Some(self.rows.len());
        self.rows.push(v);
        self.pivots.push(c);
        true
    }

    /// The reduced rows sorted by pivot column: the nonzero rows of the RCF.
    pub fn to_matrix(&self) -> Matrix<T> {
        let mut order: Vec<usize> = (0..self.rows.len()).collect();
        order.sort_by_key(|&k| self.pivots[k]);
        let rows = order.into_iter().map(|k| self.rows[k].clone()).collect();
        Matrix::from_rows_with_cols(self.cols, rows).expect("uniform rows")
    }

    /// Leading columns, increasing.
    pub fn leading_columns(&self) -> Vec<usize> {
        let mut p = self.pivots.clone();
        p.sort_unstable();
        p
    }

    /// Canonical basis of the right nullspace of the stored rows.
    pub fn nullspace_basis(&self) -> Vec<Vec<T>> {
        self.free
            .iter()
            .map(|&f| {
                let mut v = vec![T::zero(); self.cols];
                v[f] = T::one();
                for (k, &c) in self.pivots.iter().enumerate() {
                    v[c] = -self.rows[k][f].clone();
                }
                v
            })
            .collect()
    }
}

/// Rational with denominator dividing `denominator_bound` whose image mod `p`
/// is `residue`, chosen with the smallest numerator in absolute value (ties go
/// to the smaller denominator).
///
/// Fails when the best numerator exceeds `sqrt((p-1)/2)`, beyond which the
/// preimage is no longer determined by the residue.
pub fn rational_reconstruct(residue: u64, p: u64, denominator_bound: u64) -> Result<Rational> {
    let residue = residue % p;
    if residue == 0 {
        return Ok(Rational::zero());
    }
    let limit = ((p - 1) / 2) as f64;
    let numer_bound = limit.sqrt().floor() as i64;
    let mut best: Option<(i64, u64)> = None;
    for b in 1..=denominator_bound {
        if !denominator_bound.is_multiple_of(b) || b % p == 0 {
            continue;
        }
        let a = ((residue as u128 * b as u128) % p as u128) as i64;
        let a = if a > (p / 2) as i64 { a - p as i64 } else { a };
        if best.is_none_or(|(ba, _)| a.abs() < ba.abs()) {
            best = Some((a, b));
        }
    }
    match best {
        Some((a, b)) if a.abs() <= numer_bound => Ok(Rational::new(BigInt::from(a), BigInt::from(b))),
        _ => Err(Error::NoRationalPreimage { residue, p, bound: denominator_bound }),
    }
}

/// Rank over the rationals by fraction-free (Bareiss) elimination on integers.
pub fn integer_rank(rows: &[Vec<i64>]) -> usize {
    let mut m: Vec<Vec<BigInt>> = rows.iter().map(|r| r.iter().map(|&v| BigInt::from(v)).collect()).collect();
    let nrows = m.len();
    let ncols = m.first().map_or(0, |r| r.len());
    let mut rank = 0;
    let mut prev = BigInt::one();
    for c in 0..ncols {
        if rank == nrows {
            break;
        }
        let Some(piv) = (rank..nrows).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(rank, piv);
        for i in rank + 1..nrows {
            for j in c + 1..ncols {
                let v = (&m[rank][c] * &m[i][j] - &m[i][c] * &m[rank][j]) / &prev;
                m[i][j] = v;
            }
            m[i][c] = BigInt::zero();
        }
        prev = m[rank][c].clone();
        rank += 1;
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Fp;

    type F = Fp<101>;

    fn m(rows: &[Vec<i64>]) -> Matrix<F> {
        Matrix::from_i64_rows(rows).unwrap()
    }

    #[test]
    fn rcf_basics() {
        let id = Matrix::<F>::identity(3);
        assert_eq!(id.rcf(), id);
        let z = Matrix::<F>::zeros(2, 3);
        assert_eq!(z.rcf(), z);
        assert_eq!(z.rank(), 0);
        let a = m(&[vec![2, 4, 6], vec![1, 2, 4], vec![3, 6, 10]]);
        let r = a.rcf();
        assert_eq!(r.to_i64_rows().unwrap(), vec![vec![1, 2, 0], vec![0, 0, 1], vec![0, 0, 0]]);
        assert_eq!(r.rcf(), r);
        assert!(r.is_rcf());
        assert!(!a.is_rcf());
    }

    #[test]
    fn nullspace_is_canonical() {
        let a = m(&[vec![1, 2, 0, 3], vec![0, 0, 1, -1]]);
        let ns = a.nullspace_basis();
        let ints: Vec<Vec<i64>> = ns.iter().map(|v| v.iter().map(|x| x.symmetric()).collect()).collect();
        assert_eq!(ints, vec![vec![-2, 1, 0, 0], vec![-3, 0, 1, 1]]);
        for v in &ns {
            assert!(a.mul_vec(v).unwrap().iter().all(|x| x.is_zero()));
        }
        assert!(Matrix::<F>::identity(4).nullspace_basis().is_empty());
    }

    #[test]
    fn leading_profile_rules() {
        let a = m(&[vec![1, 2, 0], vec![0, 0, 1]]);
        assert_eq!(a.leading_profile().unwrap().pairs, vec![(0, 0), (1, 2)]);
        assert_eq!(a.leading_profile().unwrap().to_string(), "(1,1) (2,3)");
        assert!(m(&[vec![2, 0]]).leading_profile().is_err());
        assert!(Matrix::<F>::zeros(2, 2).leading_profile().unwrap().pairs.is_empty());
    }

    #[test]
    fn inverse_roundtrip() {
        let a = m(&[vec![1, 2], vec![3, 4]]);
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv).unwrap(), Matrix::identity(2));
        assert!(m(&[vec![1, 2], vec![2, 4]]).inverse().is_err());
    }

    #[test]
    fn row_reducer_matches_rcf() {
        let rows = vec![vec![0, 1, 2, 3], vec![1, 1, 1, 1], vec![1, 2, 3, 4], vec![2, 0, 5, 1]];
        let mut red = RowReducer::<F>::new(4);
        let grew: Vec<bool> = rows.iter().map(|r| red.insert(r.iter().map(|&v| F::new(v)).collect())).collect();
        assert_eq!(grew, vec![true, true, false, true]);
        assert_eq!(red.to_matrix(), m(&rows).rcf_nonzero());
        assert_eq!(red.nullspace_basis(), m(&rows).nullspace_basis());
    }

    #[test]
    fn reconstruct_examples() {
        assert_eq!(rational_reconstruct(0, 101, 6).unwrap(), Rational::zero());
        assert_eq!(rational_reconstruct(34, 101, 6).unwrap(), Rational::new(1.into(), 3.into()));
        let r = F::from_ratio(-1, 6).unwrap();
        let r7919 = Fp::<7919>::from_ratio(-1, 6).unwrap();
        assert_eq!(rational_reconstruct(r.residue() as u64, 101, 6).unwrap(), Rational::new((-1).into(), 6.into()));
        assert_eq!(
            rational_reconstruct(r7919.residue() as u64, 7919, 720).unwrap(),
            Rational::new((-1).into(), 6.into())
        );
        assert!(rational_reconstruct(50, 101, 1).is_err());
    }

    #[test]
    fn bareiss_rank() {
        assert_eq!(integer_rank(&[vec![1, 2], vec![2, 4]]), 1);
        assert_eq!(integer_rank(&[vec![0, 0], vec![0, 3]]), 1);
        assert_eq!(integer_rank(&[vec![2, 1, 0], vec![1, 3, 1], vec![0, 1, 4]]), 3);
    }

    #[test]
    fn csv_roundtrip() {
        let a = m(&[vec![1, -2], vec![0, 5]]);
        let text = a.to_csv().unwrap();
        assert_eq!(text, "1,-2\n0,5\n");
        assert_eq!(Matrix::<F>::from_csv(&text).unwrap(), a);
    }
}
