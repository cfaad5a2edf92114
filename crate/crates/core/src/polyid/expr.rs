//! Integer nonassociative polynomials in named variables, used to write
//! identities down before linearizing them into [`MultilinearPoly`] form.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::perm::{enumerate, Permutation};
use crate::polyid::poly::{MultilinearPoly, TypeBasis};
use crate::polyid::types::catalog;
use crate::scalar::Field;

/// A bracketed word: prefix tree code and its leaf labels.
type Word = (Vec<u8>, Vec<u8>);

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Expr {
    terms: BTreeMap<Word, i64>,
}

impl Expr {
    pub fn zero() -> Expr {
        Expr::default()
    }

    pub fn var(label: u8) -> Expr {
        let mut e = Expr::zero();
        e.terms.insert((vec![0], vec![label]), 1);
        e
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    fn push(&mut self, w: Word, c: i64) {
        if c == 0 {
            return;
        }
        let e = self.terms.entry(w.clone()).or_insert(0);
        *e += c;
        if *e == 0 {
            self.terms.remove(&w);
        }
    }

    pub fn add(&self, other: &Expr) -> Expr {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.push(w.clone(), *c);
        }
        out
    }

    pub fn sub(&self, other: &Expr) -> Expr {
        self.add(&other.scale(-1))
    }

    pub fn scale(&self, k: i64) -> Expr {
        let mut out = Expr::zero();
        for (w, c) in &self.terms {
            out.push(w.clone(), c * k);
        }
        out
    }

    pub fn mul(&self, other: &Expr) -> Expr {
        let mut out = Expr::zero();
        for ((ca, la), a) in &self.terms {
            for ((cb, lb), b) in &other.terms {
                let mut code = Vec::with_capacity(ca.len() + cb.len() + 1);
                code.push(1);
                code.extend_from_slice(ca);
                code.extend_from_slice(cb);
                let mut leaves = la.clone();
                leaves.extend_from_slice(lb);
                out.push((code, leaves), a * b);
            }
        }
        out
    }

    /// `xy - yx`.
    pub fn commutator(&self, other: &Expr) -> Expr {
        self.mul(other).sub(&other.mul(self))
    }

    /// `xy + yx`.
    pub fn jordan(&self, other: &Expr) -> Expr {
        self.mul(other).add(&other.mul(self))
    }

    /// `(xy)z - x(yz)`.
    pub fn associator(&self, y: &Expr, z: &Expr) -> Expr {
        self.mul(y).mul(z).sub(&self.mul(&y.mul(z)))
    }

    /// Renames labels through `map` (labels not in the map are kept).
    pub fn relabel(&self, map: &BTreeMap<u8, u8>) -> Expr {
        let mut out = Expr::zero();
        for ((code, leaves), c) in &self.terms {
            let leaves = leaves.iter().map(|l| *map.get(l).unwrap_or(l)).collect();
            out.push((code.clone(), leaves), *c);
        }
        out
    }

    /// `sum_sigma sign(sigma) f(x_{sigma(1)}, ..., x_{sigma(k)})` over the
    /// listed variables.
    pub fn alternate(&self, vars: &[u8]) -> Result<Expr> {
        let mut out = Expr::zero();
        for s in enumerate(vars.len())? {
            let map = vars.iter().enumerate().map(|(i, &v)| (v, vars[s.apply(i + 1) - 1])).collect();
            out = out.add(&self.relabel(&map).scale(s.sign()));
        }
        Ok(out)
    }

    /// Full linearization of `var`: in each monomial the `k = new.len()`
    /// occurrences of `var` are replaced by `new` in every order and summed.
    /// Monomials whose count of `var` is not `k` are rejected.
    pub fn linearize(&self, var: u8, new: &[u8]) -> Result<Expr> {
        let k = new.len();
        let orders = enumerate(k)?;
        let mut out = Expr::zero();
        for ((code, leaves), c) in &self.terms {
            let slots: Vec<usize> = leaves.iter().enumerate().filter(|(_, &l)| l == var).map(|(i, _)| i).collect();
            if slots.len() != k {
                return Err(Error::Parse(format!("variable {var} occurs {} times, expected {k}", slots.len())));
            }
            for s in &orders {
                let mut ls = leaves.clone();
                for (j, &slot) in slots.iter().enumerate() {
                    ls[slot] = new[s.apply(j + 1) - 1];
                }
                out.push((code.clone(), ls), *c);
            }
        }
        Ok(out)
    }

    /// Converts to a multilinear polynomial in `x_1, ..., x_n`.
    pub fn to_multilinear<S: Field>(&self, n: usize, basis: TypeBasis) -> Result<MultilinearPoly<S>> {
        let cat = catalog();
        let mut f = MultilinearPoly::zero(n, basis);
        for ((code, leaves), c) in &self.terms {
            if leaves.len() != n {
                return Err(Error::DegreeMismatch(leaves.len(), n));
            }
            let p = Permutation::new(&leaves.iter().map(|&l| l as usize).collect::<Vec<_>>())?;
            let k = match basis {
                TypeBasis::Free => cat.index_of(code).expect("catalogued"),
                TypeBasis::Associative => 0,
            };
            f.add_term(k, p, S::from_int(*c))?;
        }
        Ok(f)
    }
}

/// `x_1, ..., x_n` as expressions.
pub fn vars(n: u8) -> Vec<Expr> {
    (1..=n).map(Expr::var).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rational;

    #[test]
    fn commutator_and_associator() {
        let x = vars(3);
        assert_eq!(x[0].commutator(&x[0]), Expr::zero());
        let a = x[0].associator(&x[1], &x[2]);
        assert_eq!(a.len(), 2);
        let f = a.to_multilinear::<Rational>(3, TypeBasis::Free).unwrap();
        assert_eq!(f.to_string(), "(1) (x1x2)x3 + (-1) x1(x2x3)");
        assert!(a.to_multilinear::<Rational>(3, TypeBasis::Associative).unwrap().is_zero());
    }

    #[test]
    fn linearize_square() {
        // x^2 linearizes to x1x2 + x2x1
        let x = Expr::var(9);
        let l = x.mul(&x).linearize(9, &[1, 2]).unwrap();
        assert_eq!(l, Expr::var(1).jordan(&Expr::var(2)));
        assert!(x.mul(&x).linearize(9, &[1, 2, 3]).is_err());
    }

    #[test]
    fn alternating_sum_of_word() {
        let x = vars(3);
        let w = x[0].mul(&x[1]).mul(&x[2]);
        let s = w.alternate(&[1, 2, 3]).unwrap();
        assert_eq!(s.len(), 6);
        assert_eq!(s.alternate(&[1, 2, 3]).unwrap(), s.scale(6));
    }
}
