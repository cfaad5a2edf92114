//! Multilinear nonassociative polynomials of degree `n`.
//!
//! A monomial is an association type together with a permutation `p`; its
//! leaves, left to right, are `x_{p(1)}, ..., x_{p(n)}`. The group `S_n` acts
//! by renaming variables, so `sigma . (k, p) = (k, sigma p)` and each type
//! component is an element of the group algebra.

use std::collections::BTreeMap;
use std::fmt;

use crate::algebras::{AlgebraElement, StructureAlgebra};
use crate::error::{Error, Result};
use crate::groupalg::GroupAlgebraElement;
use crate::perm::{factorial, Permutation, MAX_DEGREE};
use crate::polyid::types::{catalog, leaf_offset};
use crate::scalar::Field;

/// Which monomials are distinguished.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum TypeBasis {
    /// All association types (free nonassociative algebra).
    #[default]
    Free,
    /// A single type: monomials are words (free associative algebra).
    Associative,
}

impl TypeBasis {
    pub fn num_types(self, n: usize) -> usize {
        match self {
            TypeBasis::Free => catalog().count(n),
            TypeBasis::Associative => 1,
        }
    }

    /// Number of monomials, `t * n!`.
    pub fn num_monomials(self, n: usize) -> usize {
        self.num_types(n) * factorial(n) as usize
    }

    pub(crate) fn tree_code(self, n: usize, k: usize) -> &'static [u8] {
        match self {
            TypeBasis::Free => catalog().code(n, k),
            TypeBasis::Associative => catalog().code(n, 0),
        }
    }
}

/// `(type, permutation)` with a 0-based type index.
pub type Monomial = (usize, Permutation);

#[derive(Clone, PartialEq, Eq)]
pub struct MultilinearPoly<S> {
    n: usize,
    basis: TypeBasis,
    terms: BTreeMap<Monomial, S>,
}

impl<S: Field> MultilinearPoly<S> {
    pub fn zero(n: usize, basis: TypeBasis) -> Self {
        assert!((1..=MAX_DEGREE).contains(&n), "degree {n} outside 1..={MAX_DEGREE}");
        MultilinearPoly { n, basis, terms: BTreeMap::new() }
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, S)>>(n: usize, basis: TypeBasis, terms: I) -> Result<Self> {
        let mut f = Self::zero(n, basis);
        for ((k, p), c) in terms {
            f.add_term(k, p, c)?;
        }
        Ok(f)
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn basis(&self) -> TypeBasis {
        self.basis
    }

    pub fn num_types(&self) -> usize {
        self.basis.num_types(self.n)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &S)> {
        self.terms.iter()
    }

    pub fn coeff(&self, k: usize, p: &Permutation) -> S {
        self.terms.get(&(k, *p)).cloned().unwrap_or_else(S::zero)
    }

    pub fn add_term(&mut self, k: usize, p: Permutation, c: S) -> Result<()> {
        if p.degree() != self.n {
            return Err(Error::DegreeMismatch(p.degree(), self.n));
        }
        if k >= self.num_types() {
            return Err(Error::IndexOutOfRange { i: k + 1, j: 1, dim: self.num_types() });
        }
        self.add_term_unchecked(k, p, c);
        Ok(())
    }

    fn add_term_unchecked(&mut self, k: usize, p: Permutation, c: S) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry((k, p)).or_insert_with(S::zero);
        *e += &c;
        if e.is_zero() {
            self.terms.remove(&(k, p));
        }
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            return Err(Error::DegreeMismatch(self.n, other.n));
        }
        if self.basis != other.basis {
            return Err(Error::Parse("polynomials use different monomial bases".into()));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let mut out = self.clone();
        for ((k, p), c) in &other.terms {
            out.add_term_unchecked(*k, *p, c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&-S::one()))
    }

    pub fn scale(&self, c: &S) -> Self {
        let mut out = Self::zero(self.n, self.basis);
        for (m, v) in &self.terms {
            out.add_term_unchecked(m.0, m.1, v.clone() * c.clone());
        }
        out
    }

    /// `sigma . f`: replaces every `x_i` by `x_{sigma(i)}`.
    pub fn act(&self, sigma: &Permutation) -> Result<Self> {
        if sigma.degree() != self.n {
            return Err(Error::DegreeMismatch(sigma.degree(), self.n));
        }
        let terms = self.terms.iter().map(|((k, p), c)| ((*k, sigma.compose_unchecked(p)), c.clone())).collect();
        Ok(MultilinearPoly { n: self.n, basis: self.basis, terms })
    }

    /// The group-algebra element multiplying type `k` (0-based).
    pub fn component(&self, k: usize) -> GroupAlgebraElement<S> {
        let mut x = GroupAlgebraElement::zero(self.n);
        for ((kk, p), c) in self.terms.range((k, Permutation::identity(self.n))..) {
            if *kk != k {
                break;
            }
            x.add_term(*p, c.clone());
        }
        x
    }

    /// Builds `sum_k [x_k]_k` from one group-algebra element per type.
    pub fn from_components(basis: TypeBasis, comps: &[GroupAlgebraElement<S>]) -> Result<Self> {
        let n = comps.first().map(|c| c.degree()).ok_or_else(|| Error::Parse("no components".into()))?;
        if comps.len() != basis.num_types(n) {
            return Err(Error::DimensionMismatch(format!("{} components for {} types", comps.len(), basis.num_types(n))));
        }
        let mut f = Self::zero(n, basis);
        for (k, x) in comps.iter().enumerate() {
            if x.degree() != n {
                return Err(Error::DegreeMismatch(x.degree(), n));
            }
            for (p, c) in x.terms() {
                f.add_term_unchecked(k, *p, c.clone());
            }
        }
        Ok(f)
    }

    /// Coefficient vector of length `t * n!`, type-major, then lex order.
    pub fn to_dense(&self) -> Vec<S> {
        let nf = factorial(self.n) as usize;
        let mut v = vec![S::zero(); self.basis.num_monomials(self.n)];
        for ((k, p), c) in &self.terms {
            v[k * nf + p.rank0()] = c.clone();
        }
        v
    }

    pub fn from_dense(n: usize, basis: TypeBasis, v: &[S]) -> Result<Self> {
        let nf = factorial(n) as usize;
        if v.len() != basis.num_monomials(n) {
            return Err(Error::DimensionMismatch(format!("vector of length {} for {} monomials", v.len(), basis.num_monomials(n))));
        }
        let mut f = Self::zero(n, basis);
        for (i, c) in v.iter().enumerate() {
            if !c.is_zero() {
                f.terms.insert((i / nf, Permutation::unrank0(n, i % nf)), c.clone());
            }
        }
        Ok(f)
    }

    /// The `n + 2` consequences in degree `n + 1`: `x_i -> x_i x_{n+1}` for
    /// each `i`, then `f x_{n+1}` and `x_{n+1} f`.
    pub fn consequences(&self) -> Result<Vec<Self>> {
        let n = self.n;
        let m = n + 1;
        if m > MAX_DEGREE {
            return Err(Error::DegreeCap { n: m, cap: MAX_DEGREE });
        }
        let cat = catalog();
        let mut out = vec![Self::zero(m, self.basis); n + 2];
        for ((k, p), c) in &self.terms {
            let code = self.basis.tree_code(n, *k);
            let leaves: Vec<usize> = p.images().iter().map(|&x| x as usize).collect();
            for (i, f) in out.iter_mut().enumerate().take(n) {
                let pos = leaves.iter().position(|&x| x == i + 1).expect("multilinear");
                let mut new_code = code.to_vec();
                let off = leaf_offset(code, pos);
                new_code.splice(off..off + 1, [1, 0, 0]);
                let mut new_leaves = leaves.clone();
                new_leaves.insert(pos + 1, m);
                f.push_word(cat.index_of(&new_code), &new_leaves, c);
            }
            let mut right = vec![1];
            right.extend_from_slice(code);
            right.push(0);
            let mut leaves_r = leaves.clone();
            leaves_r.push(m);
            out[n].push_word(cat.index_of(&right), &leaves_r, c);
            let mut left = vec![1, 0];
            left.extend_from_slice(code);
            let mut leaves_l = vec![m];
            leaves_l.extend_from_slice(&leaves);
            out[n + 1].push_word(cat.index_of(&left), &leaves_l, c);
        }
        Ok(out)
    }

    fn push_word(&mut self, k: Option<usize>, leaves: &[usize], c: &S) {
        let k = match self.basis {
            TypeBasis::Free => k.expect("catalogued"),
            TypeBasis::Associative => 0,
        };
        let p = Permutation::new(leaves).expect("leaves form a permutation");
        self.add_term_unchecked(k, p, c.clone());
    }

    /// All consequences in degree `target`, by repeated [`consequences`](Self::consequences).
    pub fn lift_to(&self, target: usize) -> Result<Vec<Self>> {
        if target < self.n {
            return Err(Error::DegreeMismatch(self.n, target));
        }
        let mut layer = vec![self.clone()];
        for _ in self.n..target {
            let mut next = Vec::new();
            for f in &layer {
                next.extend(f.consequences()?);
            }
            layer = next;
        }
        Ok(layer)
    }

    /// Value at `args[i] = x_{i+1}`.
    pub fn evaluate(&self, alg: &StructureAlgebra<S>, args: &[AlgebraElement<S>]) -> Result<AlgebraElement<S>> {
        if args.len() != self.n {
            return Err(Error::DimensionMismatch(format!("{} arguments for degree {}", args.len(), self.n)));
        }
        let d = alg.dim();
        if let Some(a) = args.iter().find(|a| a.dim() != d) {
            return Err(Error::DimensionMismatch(format!("argument of dimension {} in algebra of dimension {d}", a.dim())));
        }
        let mut acc = vec![S::zero(); d];
        for ((k, p), c) in &self.terms {
            let code = self.basis.tree_code(self.n, *k);
            let mut pos = 0;
            let mut leaf = 0;
            let v = eval_tree(alg, code, &mut pos, &mut leaf, p.images(), args);
            for (a, x) in acc.iter_mut().zip(&v) {
                a.add_mul(c, x);
            }
        }
        Ok(AlgebraElement { coords: acc })
    }

    /// One `coeff<TAB>type<TAB>perm` line per term, types 1-based.
    pub fn to_fixture(&self) -> String {
        let mut s = String::new();
        if self.basis == TypeBasis::Associative {
            s.push_str("# basis: associative\n");
        }
        s.push_str(&format!("# degree: {}\n", self.n));
        for ((k, p), c) in &self.terms {
            s.push_str(&format!("{c}\t{}\t{p}\n", k + 1));
        }
        s
    }

    pub fn from_fixture(text: &str) -> Result<Self> {
        let mut basis = TypeBasis::Free;
        let mut degree = None;
        let mut rows = Vec::new();
        for line in text.lines().map(str::trim).filter(|l| !l.is_empty()) {
            if let Some(comment) = line.strip_prefix('#') {
                let comment = comment.trim();
                if comment == "basis: associative" {
                    basis = TypeBasis::Associative;
                } else if let Some(d) = comment.strip_prefix("degree:") {
                    degree = Some(d.trim().parse().map_err(|_| Error::Parse(format!("bad degree line {line:?}")))?);
                }
                continue;
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            let [c, k, p] = fields[..] else {
                return Err(Error::Parse(format!("expected coeff, type, perm: {line:?}")));
            };
            let c = S::parse_ratio(c).ok_or_else(|| Error::Parse(format!("bad coefficient {c:?}")))?;
            let k: usize = k.parse().map_err(|_| Error::Parse(format!("bad type index {k:?}")))?;
            let p: Permutation = p.parse()?;
            rows.push((k, p, c));
        }
        let n = degree.or_else(|| rows.first().map(|r| r.1.degree())).ok_or_else(|| Error::Parse("empty polynomial".into()))?;
        let mut f = Self::zero(n, basis);
        for (k, p, c) in rows {
            if k == 0 {
                return Err(Error::Parse("type indices are 1-based".into()));
            }
            f.add_term(k - 1, p, c)?;
        }
        Ok(f)
    }
}

fn eval_tree<S: Field>(
    alg: &StructureAlgebra<S>,
    code: &[u8],
    pos: &mut usize,
    leaf: &mut usize,
    images: &[u8],
    args: &[AlgebraElement<S>],
) -> Vec<S> {
    let tag = code[*pos];
    *pos += 1;
    if tag == 0 {
        let v = args[images[*leaf] as usize - 1].coords.clone();
        *leaf += 1;
        return v;
    }
    let l = eval_tree(alg, code, pos, leaf, images, args);
    let r = eval_tree(alg, code, pos, leaf, images, args);
    let mut out = vec![S::zero(); alg.dim()];
    alg.mul_into(&l, &r, &mut out);
    out
}

impl<S: Field> fmt::Display for MultilinearPoly<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, ((k, p), c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            let code = self.basis.tree_code(self.n, *k);
            let mut s = String::new();
            write_monomial(code, &mut 0, &mut 0, p.images(), true, &mut s);
            write!(f, "({c}) {s}")?;
        }
        Ok(())
    }
}

impl<S: Field> fmt::Debug for MultilinearPoly<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultilinearPoly({self})")
    }
}

fn write_monomial(code: &[u8], pos: &mut usize, leaf: &mut usize, images: &[u8], top: bool, out: &mut String) {
    let tag = code[*pos];
    *pos += 1;
    if tag == 0 {
        out.push_str(&format!("x{}", images[*leaf]));
        *leaf += 1;
        return;
    }
    if !top {
        out.push('(');
    }
    write_monomial(code, pos, leaf, images, false, out);
    write_monomial(code, pos, leaf, images, false, out);
    if !top {
        out.push(')');
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rational;

    type Q = Rational;

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn q(v: i64) -> Q {
        Q::from_int(v)
    }

    #[test]
    fn associator_consequences() {
        // (x1,x2,x3) = (x1x2)x3 - x1(x2x3)
        let f = MultilinearPoly::from_terms(3, TypeBasis::Free, [((0, perm("123")), q(1)), ((1, perm("123")), q(-1))])
            .unwrap();
        let cs = f.consequences().unwrap();
        assert_eq!(cs.len(), 5);
        // x1 -> x1 x4: ((x1x4)x2)x3 - (x1x4)(x2x3)
        assert_eq!(cs[0].to_string(), "(1) ((x1x4)x2)x3 + (-1) (x1x4)(x2x3)");
        // f x4
        assert_eq!(cs[3].to_string(), "(1) ((x1x2)x3)x4 + (-1) (x1(x2x3))x4");
        // x4 f
        assert_eq!(cs[4].to_string(), "(1) x4((x1x2)x3) + (-1) x4(x1(x2x3))");
        assert_eq!(f.lift_to(5).unwrap().len(), 30);
    }

    #[test]
    fn dense_roundtrip_and_action() {
        let f = MultilinearPoly::from_terms(3, TypeBasis::Free, [((1, perm("213")), q(2)), ((0, perm("321")), q(-3))])
            .unwrap();
        let v = f.to_dense();
        assert_eq!(v.len(), 12);
        assert_eq!(MultilinearPoly::from_dense(3, TypeBasis::Free, &v).unwrap(), f);
        let s = perm("231");
        let g = f.act(&s).unwrap();
        assert_eq!(g.coeff(1, &s.compose(&perm("213")).unwrap()), q(2));
        let comps: Vec<_> = (0..2).map(|k| f.component(k)).collect();
        assert_eq!(MultilinearPoly::from_components(TypeBasis::Free, &comps).unwrap(), f);
    }

    #[test]
    fn fixture_roundtrip() {
        let f = MultilinearPoly::from_terms(3, TypeBasis::Free, [((0, perm("132")), q(1)), ((1, perm("123")), q(-1))])
            .unwrap();
        let text = f.to_fixture();
        assert_eq!(text, "# degree: 3\n1\t1\t132\n-1\t2\t123\n");
        assert_eq!(MultilinearPoly::<Q>::from_fixture(&text).unwrap(), f);
        assert!(MultilinearPoly::<Q>::from_fixture("1\t0\t12").is_err());
        assert!(MultilinearPoly::<Q>::from_fixture("1\t3\t123").is_err());
    }

    #[test]
    fn associative_consequences() {
        let f = MultilinearPoly::from_terms(2, TypeBasis::Associative, [((0, perm("12")), q(1)), ((0, perm("21")), q(-1))])
            .unwrap();
        let cs = f.consequences().unwrap();
        // x1 -> x1x3 in x1x2 - x2x1
        assert_eq!(cs[0].coeff(0, &perm("132")), q(1));
        assert_eq!(cs[0].coeff(0, &perm("213")), q(-1));
        assert_eq!(cs[3].coeff(0, &perm("312")), q(1));
    }
}
