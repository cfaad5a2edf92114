//! The group algebra `F S_n`: sparse elements, row and column symmetrizers,
//! Young idempotents and the matrix units of the Wedderburn decomposition.

use std::collections::BTreeMap;
use std::fmt;


use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::perm::{factorial, Permutation};
use crate::repmat;
use crate::scalar::Field;
use crate::tableau::{partitions, standard_tableaux, Partition, Tableau};

/// Largest degree for which [`psi_matrix`] builds the dense `n! x n!` matrix.
pub const PSI_CAP: usize = 5;

/// A finite linear combination of permutations of one degree.
#[derive(Clone, PartialEq, Eq)]
pub struct GroupAlgebraElement<S> {
    n: usize,
    coeffs: BTreeMap<Permutation, S>,
}

impl<S: Field> GroupAlgebraElement<S> {
    pub fn zero(n: usize) -> Self {
        GroupAlgebraElement { n, coeffs: BTreeMap::new() }
    }

    pub fn basis(p: Permutation) -> Self {
        Self::term(p, S::one())
    }

    pub fn identity(n: usize) -> Self {
        Self::basis(Permutation::identity(n))
    }

    pub fn term(p: Permutation, c: S) -> Self {
        let mut x = Self::zero(p.degree());
        x.add_term(p, c);
        x
    }

    pub fn from_terms<I: IntoIterator<Item = (Permutation, S)>>(n: usize, terms: I) -> Result<Self> {
        let mut x = Self::zero(n);
        for (p, c) in terms {
            if p.degree() != n {
                return Err(Error::DegreeMismatch(p.degree(), n));
            }
            x.add_term(p, c);
        }
        Ok(x)
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, p: &Permutation) -> S {
        self.coeffs.get(p).cloned().unwrap_or_else(S::zero)
    }

    /// Terms in lexicographic order of the permutations.
    pub fn terms(&self) -> impl Iterator<Item = (&Permutation, &S)> {
        self.coeffs.iter()
    }

    /// `self += c * p`. Panics if `p` has the wrong degree.
    pub fn add_term(&mut self, p: Permutation, c: S) {
        assert_eq!(p.degree(), self.n, "permutation degree does not match element");
        if c.is_zero() {
            return;
        }
        match self.coeffs.entry(p) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += &c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_degree(other)?;
        let mut out = self.clone();
        for (p, c) in other.terms() {
            out.add_term(*p, c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&-S::one()))
    }

    pub fn scale(&self, c: &S) -> Self {
        if c.is_zero() {
            return Self::zero(self.n);
        }
        GroupAlgebraElement { n: self.n, coeffs: self.coeffs.iter().map(|(p, x)| (*p, x.clone() * c.clone())).collect() }
    }

    fn check_degree(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            return Err(Error::DegreeMismatch(self.n, other.n));
        }
        Ok(())
    }

    /// The product in `F S_n`.
    pub fn multiply(&self, other: &Self) -> Result<Self> {
        self.check_degree(other)?;
        let mut acc: BTreeMap<Permutation, S> = BTreeMap::new();
        for (p, a) in self.terms() {
            for (q, b) in other.terms() {
                let e = acc.entry(p.compose_unchecked(q)).or_insert_with(S::zero);
                e.add_mul(a, b);
            }
        }
        acc.retain(|_, c| !c.is_zero());
        Ok(GroupAlgebraElement { n: self.n, coeffs: acc })
    }

    /// `self * q`.
    pub fn mul_perm_right(&self, q: &Permutation) -> Self {
        assert_eq!(q.degree(), self.n);
        GroupAlgebraElement { n: self.n, coeffs: self.coeffs.iter().map(|(p, c)| (p.compose_unchecked(q), c.clone())).collect() }
    }

    /// `q * self`.
    pub fn mul_perm_left(&self, q: &Permutation) -> Self {
        assert_eq!(q.degree(), self.n);
        GroupAlgebraElement { n: self.n, coeffs: self.coeffs.iter().map(|(p, c)| (q.compose_unchecked(p), c.clone())).collect() }
    }

    /// Coefficients on the lex-ordered basis of `S_n`.
    pub fn to_dense(&self) -> Vec<S> {
        let mut v = vec![S::zero(); factorial(self.n) as usize];
        for (p, c) in self.terms() {
            v[p.rank0()] = c.clone();
        }
        v
    }

    pub fn from_dense(n: usize, v: &[S]) -> Result<Self> {
        if v.len() as u64 != factorial(n) {
            return Err(Error::DimensionMismatch(format!("{} coefficients for S_{n}", v.len())));
        }
        let coeffs =
            v.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(k, c)| (Permutation::unrank0(n, k), c.clone())).collect();
        Ok(GroupAlgebraElement { n, coeffs })
    }

    /// One `coefficient<TAB>permutation` line per term.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for (p, c) in self.terms() {
            s.push_str(&format!("{c}\t{p}\n"));
        }
        s
    }

    pub fn from_text(n: usize, text: &str) -> Result<Self> {
        let mut x = Self::zero(n);
        for line in text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#')) {
            let (c, p) = line.split_once('\t').ok_or_else(|| Error::Parse(format!("missing tab in {line:?}")))?;
            let c = S::parse_ratio(c).ok_or_else(|| Error::Parse(format!("bad coefficient {c:?}")))?;
            let p: Permutation = p.parse()?;
            if p.degree() != n {
                return Err(Error::DegreeMismatch(p.degree(), n));
            }
            x.add_term(p, c);
        }
        Ok(x)
    }
}

impl<S: fmt::Display> fmt::Display for GroupAlgebraElement<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.coeffs.iter().map(|(p, c)| format!("{c}*{p}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl<S: fmt::Debug> fmt::Debug for GroupAlgebraElement<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.coeffs.iter()).finish()
    }
}

/// `H_T`: the sum of the row-preserving permutations.
pub fn symmetric_sum<S: Field>(t: &Tableau) -> Result<GroupAlgebraElement<S>> {
    GroupAlgebraElement::from_terms(t.n(), t.horizontal_group()?.into_iter().map(|h| (h, S::one())))
}

/// `V_T`: the signed sum of the column-preserving permutations.
pub fn alternating_sum<S: Field>(t: &Tableau) -> Result<GroupAlgebraElement<S>> {
    GroupAlgebraElement::from_terms(t.n(), t.vertical_group()?.into_iter().map(|v| (v, S::from_int(v.sign()))))
}

/// `D_T = H_T V_T`.
pub fn young_symmetrizer<S: Field>(t: &Tableau) -> Result<GroupAlgebraElement<S>> {
    symmetric_sum::<S>(t)?.multiply(&alternating_sum(t)?)
}

fn require_invertible_factorial<S: Field>(n: usize) -> Result<S> {
    let nf = S::from_int(factorial(n) as i64);
    nf.inv().ok_or_else(|| Error::NotInvertible(format!("{n}!"), S::characteristic()))
}

/// `E_T = (d / n!) H_T V_T`, an idempotent.
pub fn idempotent<S: Field>(t: &Tableau) -> Result<GroupAlgebraElement<S>> {
    let inv = require_invertible_factorial::<S>(t.n())?;
    let d = S::from_int(t.shape().dimension() as i64);
    Ok(young_symmetrizer::<S>(t)?.scale(&(d * inv)))
}

/// The unit upper triangular matrix `(xi_ij)`, which is the Clifton matrix of the identity.
pub fn xi_matrix<S: Field>(shape: &Partition) -> Matrix<S> {
    repmat::clifton_matrix(shape, &Permutation::identity(shape.n())).expect("identity has the right degree")
}

/// Matrix units `U_ij` for one partition.
///
/// `U_ij = sum_b eta_jb E_i s_ib`, where `eta` is the inverse of the xi
/// matrix, `E_i` the idempotent of the `i`-th standard tableau, and
/// `s_ib T_b = T_i`.
#[derive(Clone, Debug)]
pub struct MatrixUnits<S> {
    shape: Partition,
    tableaux: Vec<Tableau>,
    idempotents: Vec<GroupAlgebraElement<S>>,
    eta: Matrix<S>,
}

impl<S: Field> MatrixUnits<S> {
    pub fn new(shape: &Partition) -> Result<Self> {
        require_invertible_factorial::<S>(shape.n())?;
        let tableaux = standard_tableaux(shape);
        let idempotents = tableaux.iter().map(idempotent).collect::<Result<Vec<_>>>()?;
        let eta = repmat::unit_upper_inverse(&xi_matrix::<S>(shape));
        Ok(MatrixUnits { shape: shape.clone(), tableaux, idempotents, eta })
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn dim(&self) -> usize {
        self.tableaux.len()
    }

    pub fn tableaux(&self) -> &[Tableau] {
        &self.tableaux
    }

    /// `E_i`, 1-based.
    pub fn idempotent(&self, i: usize) -> &GroupAlgebraElement<S> {
        &self.idempotents[i - 1]
    }

    /// `s_ij` with `s_ij T_j = T_i`, 1-based.
    pub fn transition(&self, i: usize, j: usize) -> Permutation {
        self.tableaux[i - 1].transition_from(&self.tableaux[j - 1]).expect("same shape")
    }

    /// `U_ij`, 1-based.
    pub fn unit(&self, i: usize, j: usize) -> Result<GroupAlgebraElement<S>> {
        let d = self.dim();
        if i == 0 || j == 0 || i > d || j > d {
            return Err(Error::IndexOutOfRange { i, j, dim: d });
        }
        let n = self.shape.n();
        let mut right = GroupAlgebraElement::zero(n);
        for b in 1..=d {
            let c = self.eta[(j - 1, b - 1)].clone();
            if !c.is_zero() {
                right.add_term(self.transition(i, b), c);
            }
        }
        self.idempotents[i - 1].multiply(&right)
    }
}

/// `U^lambda_ij` for 1-based `i, j`.
pub fn matrix_unit<S: Field>(shape: &Partition, i: usize, j: usize) -> Result<GroupAlgebraElement<S>> {
    MatrixUnits::new(shape)?.unit(i, j)
}

/// The `n! x n!` matrix of the Wedderburn isomorphism: column `(lambda, i, j)`
/// (partitions largest first, then `i`, then `j`) holds the coefficients of
/// `U^lambda_ij` on the lex-ordered permutations.
pub fn psi_matrix<S: Field>(n: usize) -> Result<Matrix<S>> {
    if n > PSI_CAP {
        return Err(Error::SizeCap { size: factorial(n) as usize, cap: factorial(PSI_CAP) as usize });
    }
    let size = factorial(n) as usize;
    let mut m = Matrix::zeros(size, size);
    let mut col = 0;
    for shape in partitions(n) {
        let units = MatrixUnits::<S>::new(&shape)?;
        for i in 1..=units.dim() {
            for j in 1..=units.dim() {
                for (p, c) in units.unit(i, j)?.terms() {
                    m[(p.rank0(), col)] = c.clone();
                }
                col += 1;
            }
        }
    }
    debug_assert_eq!(col, size);
    Ok(m)
}
