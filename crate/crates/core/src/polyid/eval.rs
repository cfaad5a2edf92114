//! Values of every monomial of degree `n` at one argument tuple.
//!
//! A subword of a monomial is determined by its association type and its
//! ordered tuple of distinct variables, so the values are built up by length:
//! for each injective tuple of length `m` and each type of degree `m`, the
//! value is the product of two shorter entries.

use rayon::prelude::*;

use crate::algebras::StructureAlgebra;
use crate::perm::factorial;
use crate::polyid::poly::TypeBasis;
use crate::polyid::types::catalog;
use crate::scalar::Field;

/// Lex index of an injective tuple of values in `1..=n`.
fn tuple_rank(tuple: &[u8], n: usize) -> usize {
    let mut rank = 0;
    let mut used: u16 = 0;
    for (k, &v) in tuple.iter().enumerate() {
        let v = v as usize;
        let smaller = (v - 1) - (used & ((1u16 << (v - 1)) - 1)).count_ones() as usize;
        rank = rank * (n - k) + smaller;
        used |= 1 << (v - 1);
    }
    rank
}

/// Injective tuples of length `m` from `1..=n` in lex order.
fn tuples(n: usize, m: usize) -> Vec<Vec<u8>> {
    fn rec(n: usize, m: usize, cur: &mut Vec<u8>, used: u16, out: &mut Vec<Vec<u8>>) {
        if cur.len() == m {
            out.push(cur.clone());
            return;
        }
        for v in 1..=n as u8 {
            if used & (1 << (v - 1)) == 0 {
                cur.push(v);
                rec(n, m, cur, used | (1 << (v - 1)), out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(n, m, &mut Vec::with_capacity(m), 0, &mut out);
    out
}

/// Flat table: entry `((k * n! + rank0(p)) * d + c)` is coordinate `c` of
/// monomial `(k, p)`.
pub(crate) struct MonomialValues<S> {
    pub types: usize,
    pub d: usize,
    pub data: Vec<S>,
}

impl<S> MonomialValues<S> {
    #[inline]
    pub fn get(&self, k: usize, p_rank: usize) -> &[S] {
        let nf = self.data.len() / (self.types * self.d);
        let at = (k * nf + p_rank) * self.d;
        &self.data[at..at + self.d]
    }
}

pub(crate) fn monomial_values<S: Field>(
    alg: &StructureAlgebra<S>,
    args: &[Vec<S>],
    basis: TypeBasis,
) -> MonomialValues<S> {
    let n = args.len();
    let d = alg.dim();
    let cat = catalog();
    let types_at = |m: usize| match basis {
        TypeBasis::Free => cat.count(m),
        TypeBasis::Associative => 1,
    };
    // levels[m][(tuple_rank * types + k) * d + c]
    let mut levels: Vec<Vec<S>> = vec![Vec::new(); n + 1];
    levels[1] = args.iter().flat_map(|a| a.iter().cloned()).collect();
    for m in 2..=n {
        let t = types_at(m);
        let ts = tuples(n, m);
        let mut out = vec![S::zero(); ts.len() * t * d];
        let levels_ref = &levels;
        out.par_chunks_mut(t * d).zip(ts.par_iter()).for_each(|(chunk, tuple)| {
            for k in 0..t {
                let split = cat.split(m, k).expect("degree at least 2");
                let (a, l, r) = match basis {
                    TypeBasis::Free => (split.left_degree, split.left, split.right),
                    TypeBasis::Associative => (m - 1, 0, 0),
                };
                let (ta, tb) = (types_at(a), types_at(m - a));
                let li = (tuple_rank(&tuple[..a], n) * ta + l) * d;
                let ri = (tuple_rank(&tuple[a..], n) * tb + r) * d;
                let x = &levels_ref[a][li..li + d];
                let y = &levels_ref[m - a][ri..ri + d];
                alg.mul_into(x, y, &mut chunk[k * d..(k + 1) * d]);
            }
        });
        levels[m] = out;
    }
    // reorder the top level from tuple-major to type-major
    let t = types_at(n);
    let nf = factorial(n) as usize;
    let top = std::mem::take(&mut levels[n]);
    let mut data = vec![S::zero(); top.len()];
    for r in 0..nf {
        for k in 0..t {
            let src = (r * t + k) * d;
            let dst = (k * nf + r) * d;
            data[dst..dst + d].clone_from_slice(&top[src..src + d]);
        }
    }
    MonomialValues { types: t, d, data }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebras::{matrix_algebra, octonions, AlgebraElement};
    use crate::perm::enumerate;
    use crate::polyid::poly::MultilinearPoly;
    use crate::scalar::Fp;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    type F = Fp<101>;

    #[test]
    fn tuple_ranks_are_lex() {
        for (m, n) in [(2, 4), (3, 5), (5, 5)] {
            for (i, t) in tuples(n, m).iter().enumerate() {
                assert_eq!(tuple_rank(t, n), i);
            }
        }
    }

    fn check(alg: &StructureAlgebra<F>, n: usize, basis: TypeBasis) {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let args: Vec<AlgebraElement<F>> = (0..n).map(|_| alg.random_element(&mut rng)).collect();
        let raw: Vec<Vec<F>> = args.iter().map(|a| a.coords.clone()).collect();
        let vals = monomial_values(alg, &raw, basis);
        for k in 0..basis.num_types(n) {
            for p in enumerate(n).unwrap() {
                let f = MultilinearPoly::from_terms(n, basis, [((k, p), F::from_int(1))]).unwrap();
                assert_eq!(vals.get(k, p.rank0()), &f.evaluate(alg, &args).unwrap().coords[..]);
            }
        }
    }

    #[test]
    fn agrees_with_direct_evaluation() {
        check(&octonions(), 4, TypeBasis::Free);
        check(&matrix_algebra(2).unwrap(), 4, TypeBasis::Associative);
    }
}
