//! Per-partition computations: for each `lambda`, the identities of the
//! algebra and the known ones are compared inside the isotypic component,
//! with columns `[U_1j]_k` ordered type-major.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::algebras::StructureAlgebra;
use crate::error::{Error, Result};
use crate::groupalg::{GroupAlgebraElement, MatrixUnits};
use crate::linalg::{Matrix, RowReducer};
use crate::polyid::eval::monomial_values;
use crate::polyid::fill::{iteration_rng, random_args, FillConfig, Stabilizer};
use crate::polyid::poly::{MultilinearPoly, TypeBasis};
use crate::repmat::{rep_table, RepTable};
use crate::scalar::Field;
use crate::tableau::{partitions, Partition};

/// Largest degree of the per-partition pipeline.
pub const MODULE_CAP: usize = 8;

fn check_degree(n: usize) -> Result<()> {
    if n == 0 || n > MODULE_CAP {
        return Err(Error::DegreeCap { n, cap: MODULE_CAP });
    }
    Ok(())
}

/// `U_11, ..., U_1d` as sparse `(lex rank, coefficient)` lists.
fn first_row_units<S: Field>(shape: &Partition) -> Result<Vec<GroupAlgebraElement<S>>> {
    let mu = MatrixUnits::<S>::new(shape)?;
    (1..=mu.dim()).map(|j| mu.unit(1, j)).collect()
}

/// Snapshot of a per-partition fill, enough to resume it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AllmatCheckpoint {
    pub shape: String,
    pub seed: u64,
    pub history: Vec<usize>,
    pub stable: usize,
    /// Reduced evaluation rows, entries written as integers or `a/b`.
    pub rows: Vec<Vec<String>>,
}

impl AllmatCheckpoint {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("plain data")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn iterations(&self) -> usize {
        self.history.len()
    }
}

/// Identities of the algebra in one isotypic component.
#[derive(Clone, Debug)]
pub struct Allmat<S> {
    pub shape: Partition,
    /// Rank of the evaluation matrix.
    pub rank: usize,
    pub rank_history: Vec<usize>,
    /// RCF of the identity space; columns `k * d + (j - 1)`.
    pub matrix: Matrix<S>,
}

/// [`compute_allmat_resumable`] without checkpoints.
pub fn compute_allmat<S: Field>(
    alg: &StructureAlgebra<S>,
    shape: &Partition,
    basis: TypeBasis,
    cfg: &FillConfig,
) -> Result<Allmat<S>> {
    compute_allmat_resumable(alg, shape, basis, cfg, None, &mut |_| Ok(()))
}

/// Fills the evaluation matrix of `[U_1j]_k` at random arguments until its
/// rank settles. `on_iteration` sees a checkpoint after every iteration.
pub fn compute_allmat_resumable<S: Field>(
    alg: &StructureAlgebra<S>,
    shape: &Partition,
    basis: TypeBasis,
    cfg: &FillConfig,
    resume: Option<AllmatCheckpoint>,
    on_iteration: &mut dyn FnMut(&AllmatCheckpoint) -> Result<()>,
) -> Result<Allmat<S>> {
    let n = shape.n();
    check_degree(n)?;
    let units = first_row_units::<S>(shape)?;
    let units: Vec<Vec<(usize, S)>> =
        units.iter().map(|u| u.terms().map(|(p, c)| (p.rank0(), c.clone())).collect()).collect();
    let d = units.len();
    let t = basis.num_types(n);
    let cols = t * d;
    let label = shape.to_string();
    let mut reducer = RowReducer::new(cols);
    let mut stab = Stabilizer::default();
    if let Some(cp) = resume {
        if cp.shape != label || cp.seed != cfg.seed {
            return Err(Error::Parse(format!("checkpoint for {} seed {} does not match {label} seed {}", cp.shape, cp.seed, cfg.seed)));
        }
        for row in &cp.rows {
            let v = row
                .iter()
                .map(|s| S::parse_ratio(s).ok_or_else(|| Error::Parse(format!("bad checkpoint entry {s:?}"))))
                .collect::<Result<Vec<S>>>()?;
            if v.len() != cols {
                return Err(Error::DimensionMismatch(format!("checkpoint row of length {} for {cols} columns", v.len())));
            }
            reducer.insert(v);
        }
        stab = Stabilizer { history: cp.history, stable: cp.stable };
        if stab.stable >= cfg.stable_iters || reducer.is_full() {
            return Ok(finish(shape, reducer, stab));
        }
    }
    let a = alg.dim();
    loop {
        let it = stab.history.len();
        let mut rng = iteration_rng(cfg.seed, &label, it);
        let vals = monomial_values(alg, &random_args(alg, n, &mut rng), basis);
        let mut rows = vec![vec![S::zero(); cols]; a];
        for k in 0..t {
            for (j, u) in units.iter().enumerate() {
                let col = k * d + j;
                for (r, coef) in u {
                    for (c, x) in vals.get(k, *r).iter().enumerate() {
                        if !x.is_zero() {
                            rows[c][col].add_mul(coef, x);
                        }
                    }
                }
            }
        }
        for row in rows {
            reducer.insert(row);
        }
        let done = stab.record(reducer.rank(), reducer.is_full(), cfg)?;
        let cp = AllmatCheckpoint {
            shape: label.clone(),
            seed: cfg.seed,
            history: stab.history.clone(),
            stable: stab.stable,
            rows: reducer.to_matrix().rows_iter().map(|r| r.iter().map(|x| x.to_string()).collect()).collect(),
        };
        on_iteration(&cp)?;
        if done {
            return Ok(finish(shape, reducer, stab));
        }
    }
}

fn finish<S: Field>(shape: &Partition, reducer: RowReducer<S>, stab: Stabilizer) -> Allmat<S> {
    let null = reducer.nullspace_basis();
    let matrix = Matrix::from_rows_with_cols(reducer.cols(), null).expect("uniform rows").rcf_nonzero();
    Allmat { shape: shape.clone(), rank: reducer.rank(), rank_history: stab.history, matrix }
}

/// Accumulates `phi_lambda` blocks of known identities, one `d x t d` block
/// per polynomial.
#[derive(Clone, Debug)]
pub struct OldmatBuilder<S> {
    table: RepTable<S>,
    basis: TypeBasis,
    types: usize,
    reducer: RowReducer<S>,
}

impl<S: Field> OldmatBuilder<S> {
    pub fn new(shape: &Partition, basis: TypeBasis) -> Result<Self> {
        check_degree(shape.n())?;
        let table = rep_table::<S>(shape)?;
        let types = basis.num_types(shape.n());
        let reducer = RowReducer::new(types * table.dim());
        Ok(OldmatBuilder { table, basis, types, reducer })
    }

    pub fn shape(&self) -> &Partition {
        self.table.shape()
    }

    pub fn rank(&self) -> usize {
        self.reducer.rank()
    }

    /// `[phi(f_1) ... phi(f_t)]` for the type components `f_k` of `f`.
    pub fn block(&self, f: &MultilinearPoly<S>) -> Result<Matrix<S>> {
        if f.degree() != self.shape().n() {
            return Err(Error::DegreeMismatch(f.degree(), self.shape().n()));
        }
        if f.basis() != self.basis {
            return Err(Error::Parse("identity uses a different monomial basis".into()));
        }
        let d = self.table.dim();
        let mut out = Matrix::<S>::zeros(d, self.types * d);
        for ((k, p), c) in f.terms() {
            let m = self.table.get(p);
            for i in 0..d {
                for j in 0..d {
                    let v = &m[(i, j)];
                    if !v.is_zero() {
                        out[(i, k * d + j)].add_mul(c, v);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn add(&mut self, f: &MultilinearPoly<S>) -> Result<()> {
        if self.reducer.is_full() {
            return Ok(());
        }
        let b = self.block(f)?;
        for row in b.to_rows() {
            self.reducer.insert(row);
        }
        Ok(())
    }

    pub fn add_all(&mut self, fs: &[MultilinearPoly<S>]) -> Result<()> {
        fs.iter().try_for_each(|f| self.add(f))
    }

    /// RCF of everything added so far (nonzero rows).
    pub fn matrix(&self) -> Matrix<S> {
        self.reducer.to_matrix()
    }
}

/// RCF of the stacked `phi_lambda` blocks of `known`, all of degree `n`.
pub fn compute_oldmat<S: Field>(known: &[MultilinearPoly<S>], shape: &Partition, basis: TypeBasis) -> Result<Matrix<S>> {
    let mut b = OldmatBuilder::new(shape, basis)?;
    b.add_all(known)?;
    Ok(b.matrix())
}

/// Comparison of the algebra's identities with the known ones for one partition.
#[derive(Clone, Debug)]
pub struct PartitionReport<S> {
    pub shape: Partition,
    pub d: usize,
    pub types: usize,
    pub allmat: Matrix<S>,
    pub oldmat: Matrix<S>,
    /// Evaluation-matrix ranks per fill iteration.
    pub rank_history: Vec<usize>,
}

impl<S: Field> PartitionReport<S> {
    pub fn r_all(&self) -> usize {
        self.allmat.num_rows()
    }

    pub fn r_old(&self) -> usize {
        self.oldmat.num_rows()
    }

    /// 0-based rows of `allmat` whose leading column is not a leading
    /// column of `oldmat`.
    pub fn new_rows(&self) -> Vec<usize> {
        let old = self.oldmat.leading_profile().expect("oldmat is in RCF");
        let all = self.allmat.leading_profile().expect("allmat is in RCF");
        all.pairs.iter().filter(|(_, j)| !old.contains_column(*j)).map(|(i, _)| *i).collect()
    }

    pub fn new_count(&self) -> usize {
        self.r_all().saturating_sub(self.r_old())
    }

    /// Whether the known identities lie in the span of the computed ones.
    pub fn old_within_all(&self) -> bool {
        self.r_old() == 0 || self.allmat.stack(&self.oldmat).map(|m| m.rank() == self.r_all()).unwrap_or(false)
    }

    /// `lambda,d_lambda,r_all,r_old,new_count`.
    pub fn csv_row(&self) -> String {
        format!("{},{},{},{},{}", self.shape, self.d, self.r_all(), self.r_old(), self.new_count())
    }
}

/// Polynomial `sum_k sum_j c_kj [U_1j]_k` for one row of coefficients.
pub fn row_to_poly<S: Field>(shape: &Partition, basis: TypeBasis, row: &[S]) -> Result<MultilinearPoly<S>> {
    let units = first_row_units::<S>(shape)?;
    let d = units.len();
    let t = basis.num_types(shape.n());
    if row.len() != t * d {
        return Err(Error::DimensionMismatch(format!("row of length {} for {} columns", row.len(), t * d)));
    }
    let mut comps = Vec::with_capacity(t);
    for k in 0..t {
        let mut x = GroupAlgebraElement::zero(shape.n());
        for (j, u) in units.iter().enumerate() {
            let c = &row[k * d + j];
            if !c.is_zero() {
                x = x.add(&u.scale(c))?;
            }
        }
        comps.push(x);
    }
    MultilinearPoly::from_components(basis, &comps)
}

/// One polynomial per new leading column, read off the rows of `allmat`.
pub fn new_identities<S: Field>(report: &PartitionReport<S>, basis: TypeBasis) -> Result<Vec<MultilinearPoly<S>>> {
    report.new_rows().into_iter().map(|i| row_to_poly(&report.shape, basis, report.allmat.row(i))).collect()
}

/// Reports for a whole degree.
#[derive(Clone, Debug)]
pub struct IdentityModuleReport<S> {
    pub degree: usize,
    pub algebra: String,
    pub partitions: Vec<PartitionReport<S>>,
}

impl<S: Field> IdentityModuleReport<S> {
    pub const CSV_HEADER: &'static str = "lambda,d_lambda,r_all,r_old,new_count";

    pub fn to_csv(&self) -> String {
        let mut s = format!("{}\n", Self::CSV_HEADER);
        for p in &self.partitions {
            s.push_str(&p.csv_row());
            s.push('\n');
        }
        s
    }

    pub fn has_new_identities(&self) -> bool {
        self.partitions.iter().any(|p| p.new_count() > 0)
    }

    /// `sum_lambda d_lambda r_all(lambda)`: dimension of all identities.
    pub fn total_identities(&self) -> usize {
        self.partitions.iter().map(|p| p.d * p.r_all()).sum()
    }
}

/// Runs both sides for every requested partition of `n` (all if `only` is
/// `None`). `known` may mix degrees up to `n`; each is lifted to degree `n`.
pub fn analyze<S: Field>(
    alg: &StructureAlgebra<S>,
    n: usize,
    basis: TypeBasis,
    known: &[MultilinearPoly<S>],
    cfg: &FillConfig,
    only: Option<&[Partition]>,
) -> Result<IdentityModuleReport<S>> {
    check_degree(n)?;
    let lifted = crate::polyid::named::lift_all(known, n)?;
    let shapes: Vec<Partition> = match only {
        Some(list) => {
            if let Some(bad) = list.iter().find(|l| l.n() != n) {
                return Err(Error::DegreeMismatch(bad.n(), n));
            }
            list.to_vec()
        }
        None => partitions(n),
    };
    let partitions = shapes
        .par_iter()
        .map(|shape| {
            let all = compute_allmat(alg, shape, basis, cfg)?;
            let oldmat = compute_oldmat(&lifted, shape, basis)?;
            Ok(PartitionReport {
                shape: shape.clone(),
                d: shape.dimension() as usize,
                types: basis.num_types(n),
                allmat: all.matrix,
                oldmat,
                rank_history: all.rank_history,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(IdentityModuleReport { degree: n, algebra: alg.name().to_string(), partitions })
}

/// Per-partition ranks of `known` and of `known` plus `candidate`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Membership {
    pub ranks: Vec<(Partition, usize, usize)>,
}

impl Membership {
    pub fn is_member(&self) -> bool {
        self.ranks.iter().all(|(_, a, b)| a == b)
    }
}

/// Whether `candidate` lies in the `S_n`-module generated by `known` (all of
/// the candidate's degree), decided one partition at a time.
pub fn membership_test<S: Field>(
    known: &[MultilinearPoly<S>],
    candidate: &MultilinearPoly<S>,
) -> Result<Membership> {
    let n = candidate.degree();
    check_degree(n)?;
    if let Some(f) = known.iter().find(|f| f.degree() != n) {
        return Err(Error::DegreeMismatch(f.degree(), n));
    }
    let ranks = partitions(n)
        .par_iter()
        .map(|shape| {
            let mut b = OldmatBuilder::new(shape, candidate.basis())?;
            b.add_all(known)?;
            let before = b.rank();
            b.add(candidate)?;
            Ok((shape.clone(), before, b.rank()))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Membership { ranks })
}
