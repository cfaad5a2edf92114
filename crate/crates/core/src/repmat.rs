//! Clifton matrices and the natural representation `R(p) = A_iota^{-1} A_p`.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::groupalg::GroupAlgebraElement;
use crate::linalg::Matrix;
use crate::perm::{enumerate, factorial, Permutation};
use crate::scalar::Field;
use crate::tableau::{standard_tableaux, Partition, Tableau};

/// Largest degree accepted by [`rep_table`].
pub const REP_TABLE_CAP: usize = 8;

/// Entry `(i, j)` of the Clifton matrix: the sign of the column permutation
/// of `ti` that moves every number into its row in `ptj`, or 0 if none exists.
///
/// `row_in_ptj[x - 1]` is the row of `x` in `p T_j`.
fn clifton_entry(ti: &Tableau, row_in_ptj: &[usize]) -> i64 {
    let shape = ti.shape();
    let mut grid: Vec<Vec<u8>> = ti.rows().to_vec();
    let mut pos = ti.positions();
    let mut e = 1;
    for k in 1..=ti.n() {
        let (ri, ci) = pos[k - 1];
        let rj = row_in_ptj[k - 1];
        if ri == rj {
            continue;
        }
        if ci >= shape.row_len(rj) {
            return 0;
        }
        let other = grid[rj][ci] as usize;
        if other < k {
            return 0;
        }
        e = -e;
        grid[ri][ci] = other as u8;
        grid[rj][ci] = k as u8;
        pos[k - 1] = (rj, ci);
        pos[other - 1] = (ri, ci);
    }
    e
}

fn rows_of(t: &Tableau) -> Vec<usize> {
    t.positions().into_iter().map(|(r, _)| r).collect()
}

fn clifton_ints(tableaux: &[Tableau], p: &Permutation) -> Vec<i64> {
    let d = tableaux.len();
    let mut out = vec![0; d * d];
    for (j, tj) in tableaux.iter().enumerate() {
        let ptj = tj.apply(p).expect("degree checked by caller");
        let rows = rows_of(&ptj);
        for (i, ti) in tableaux.iter().enumerate() {
            out[i * d + j] = clifton_entry(ti, &rows);
        }
    }
    out
}

fn check_degree(shape: &Partition, p: &Permutation) -> Result<()> {
    if p.degree() != shape.n() {
        return Err(Error::DegreeMismatch(p.degree(), shape.n()));
    }
    Ok(())
}

fn to_matrix<S: Field>(d: usize, ints: &[i64]) -> Matrix<S> {
    let rows = ints.chunks(d.max(1)).map(|r| r.iter().map(|&v| S::from_int(v)).collect()).collect();
    Matrix::from_rows_with_cols(d, rows).expect("square")
}

/// The Clifton matrix `A^lambda_p`, entries in `{0, 1, -1}`.
pub fn clifton_matrix<S: Field>(shape: &Partition, p: &Permutation) -> Result<Matrix<S>> {
    check_degree(shape, p)?;
    let tableaux = standard_tableaux(shape);
    Ok(to_matrix(tableaux.len(), &clifton_ints(&tableaux, p)))
}

/// Inverse of a unit upper triangular matrix by back-substitution.
pub(crate) fn unit_upper_inverse<S: Field>(a: &Matrix<S>) -> Matrix<S> {
    let d = a.num_rows();
    let mut inv = Matrix::<S>::identity(d);
    for i in (0..d).rev() {
        for j in i + 1..d {
            // inv[i][j] = -sum_{i<k<=j} a[i][k] inv[k][j]
            let mut acc = S::zero();
            for k in i + 1..=j {
                acc.add_mul(&a[(i, k)], &inv[(k, j)]);
            }
            inv[(i, j)] = -acc;
        }
    }
    inv
}

/// Natural representation of one partition, with `A_iota^{-1}` cached.
#[derive(Clone, Debug)]
pub struct Representation<S> {
    shape: Partition,
    tableaux: Vec<Tableau>,
    a_iota_inv: Matrix<S>,
}

impl<S: Field> Representation<S> {
    pub fn new(shape: &Partition) -> Self {
        let tableaux = standard_tableaux(shape);
        let a_iota = to_matrix::<S>(tableaux.len(), &clifton_ints(&tableaux, &Permutation::identity(shape.n())));
        Representation { shape: shape.clone(), a_iota_inv: unit_upper_inverse(&a_iota), tableaux }
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn dim(&self) -> usize {
        self.tableaux.len()
    }

    pub fn clifton(&self, p: &Permutation) -> Result<Matrix<S>> {
        check_degree(&self.shape, p)?;
        Ok(to_matrix(self.dim(), &clifton_ints(&self.tableaux, p)))
    }

    /// `R(p)`.
    pub fn matrix(&self, p: &Permutation) -> Result<Matrix<S>> {
        self.a_iota_inv.mul(&self.clifton(p)?)
    }
}

/// `R^lambda(p) = (A^lambda_iota)^{-1} A^lambda_p`.
pub fn rep_matrix<S: Field>(shape: &Partition, p: &Permutation) -> Result<Matrix<S>> {
    Representation::new(shape).matrix(p)
}

/// `phi_lambda(x) = sum_p x_p R(p)`.
pub fn phi<S: Field>(shape: &Partition, x: &GroupAlgebraElement<S>) -> Result<Matrix<S>> {
    if x.degree() != shape.n() {
        return Err(Error::DegreeMismatch(x.degree(), shape.n()));
    }
    let rep = Representation::<S>::new(shape);
    let mut acc = Matrix::zeros(rep.dim(), rep.dim());
    for (p, c) in x.terms() {
        acc = acc.add(&rep.matrix(p)?.scale(c))?;
    }
    Ok(acc)
}

/// `R(p)` for every `p` in `S_n`, indexed by lex rank.
#[derive(Clone, Debug)]
pub struct RepTable<S> {
    shape: Partition,
    d: usize,
    mats: Vec<Matrix<S>>,
}

impl<S: Field> RepTable<S> {
    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn dim(&self) -> usize {
        self.d
    }

    pub fn get(&self, p: &Permutation) -> &Matrix<S> {
        &self.mats[p.rank0()]
    }

    /// `phi_lambda(x)` from the cached matrices.
    pub fn phi(&self, x: &GroupAlgebraElement<S>) -> Matrix<S> {
        let mut acc = Matrix::zeros(self.d, self.d);
        self.phi_accumulate(x, &mut acc, 0);
        acc
    }

    /// Adds `phi(x)` into the `d x d` block of `out` starting at column `col`.
    pub fn phi_accumulate(&self, x: &GroupAlgebraElement<S>, out: &mut Matrix<S>, col: usize) {
        for (p, c) in x.terms() {
            let m = self.get(p);
            for i in 0..self.d {
                for j in 0..self.d {
                    let v = &m[(i, j)];
                    if !v.is_zero() {
                        out[(i, col + j)].add_mul(c, v);
                    }
                }
            }
        }
    }
}

/// Builds `R(p)` for all of `S_n`, in parallel over `p`.
pub fn rep_table<S: Field>(shape: &Partition) -> Result<RepTable<S>> {
    let n = shape.n();
    if n > REP_TABLE_CAP {
        return Err(Error::DegreeCap { n, cap: REP_TABLE_CAP });
    }
    let rep = Representation::<S>::new(shape);
    let perms = enumerate(n)?;
    let mats: Vec<Matrix<S>> =
        perms.par_iter().map(|p| rep.matrix(p).expect("degree matches")).collect();
    debug_assert_eq!(mats.len() as u64, factorial(n));
    Ok(RepTable { shape: shape.clone(), d: rep.dim(), mats })
}

/// CSV with a `lambda,p` header line, the labels, then the integer rows.
pub fn matrix_to_csv<S: Field>(shape: &Partition, p: &Permutation, m: &Matrix<S>) -> Result<String> {
    Ok(format!("lambda,p\n{shape},{p}\n{}", m.to_csv()?))
}

pub fn matrix_from_csv<S: Field>(text: &str) -> Result<(Partition, Permutation, Matrix<S>)> {
    let mut lines = text.lines();
    if lines.next().map(str::trim) != Some("lambda,p") {
        return Err(Error::Parse("missing lambda,p header".into()));
    }
    let label = lines.next().ok_or_else(|| Error::Parse("missing label line".into()))?;
    let (l, p) = label.split_once(',').ok_or_else(|| Error::Parse(format!("bad label {label:?}")))?;
    let rest: Vec<&str> = lines.collect();
    Ok((l.parse()?, p.parse()?, Matrix::from_csv(&rest.join("\n"))?))
}
