use num_integer::Integer;
use proptest::prelude::*;

use symident::algebras::octonions;
use symident::groupalg::{symmetric_sum, GroupAlgebraElement};
use symident::linalg::{integer_rank, rational_reconstruct};
use symident::perm::{enumerate, factorial, Permutation};
use symident::polyid::{MultilinearPoly, NamedIdentity, TypeBasis};
use symident::repmat::Representation;
use symident::tableau::{partitions, standard_tableaux};
use symident::{Field, Fp, Matrix, Rational, F101};

type F = F101;
type Q = Rational;

fn perm_pair(max_n: usize) -> impl Strategy<Value = (Permutation, Permutation)> {
    (1..=max_n).prop_flat_map(|n| {
        let nf = factorial(n);
        (1..=nf, 1..=nf).prop_map(move |(a, b)| (Permutation::unrank(n, a).unwrap(), Permutation::unrank(n, b).unwrap()))
    })
}

fn small_matrix() -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1..=8usize, 1..=8usize)
        .prop_flat_map(|(r, c)| prop::collection::vec(prop::collection::vec(-5i64..=5, c), r))
}

fn fmat(rows: &[Vec<i64>]) -> Matrix<F> {
    Matrix::from_i64_rows(rows).unwrap()
}

proptest! {
    #[test]
    fn sign_is_multiplicative((p, q) in perm_pair(8)) {
        prop_assert_eq!((p * q).sign(), p.sign() * q.sign());
    }

    #[test]
    fn inverse_and_composition((p, q) in perm_pair(8)) {
        let n = p.degree();
        prop_assert!((p * p.inverse()).is_identity());
        prop_assert_eq!((p * q).inverse(), q.inverse() * p.inverse());
        for x in 1..=n {
            prop_assert_eq!((p * q).apply(x), p.apply(q.apply(x)));
        }
    }

    #[test]
    fn rank_round_trip(n in 1usize..=9, seed in any::<u64>()) {
        let r = seed % factorial(n) + 1;
        let p = Permutation::unrank(n, r).unwrap();
        prop_assert_eq!(p.lex_rank(), r);
        prop_assert_eq!(p.rank0() as u64, r - 1);
    }

    #[test]
    fn rank_ignores_row_order(rows in small_matrix(), seed in any::<u64>()) {
        let mut shuffled = rows.clone();
        let len = shuffled.len();
        shuffled.rotate_left(seed as usize % len);
        prop_assert_eq!(fmat(&rows).rank(), fmat(&shuffled).rank());
    }

    #[test]
    fn rcf_is_idempotent(rows in small_matrix()) {
        let r = fmat(&rows).rcf();
        prop_assert!(r.is_rcf());
        prop_assert_eq!(r.rcf(), r);
    }

    #[test]
    fn nullspace_vectors_are_annihilated(rows in small_matrix()) {
        let m = fmat(&rows);
        let null = m.nullspace_basis();
        prop_assert_eq!(null.len() + m.rank(), m.num_cols());
        for v in null {
            prop_assert!(m.mul_vec(&v).unwrap().iter().all(|x| x.residue() == 0));
        }
    }

    #[test]
    fn modular_rank_matches_integer_rank(rows in small_matrix()) {
        // every minor is below the Hadamard bound 5^8 * 8^4 < 2^31 - 1, so no
        // nonzero minor vanishes modulo that prime
        let exact = integer_rank(&rows);
        prop_assert_eq!(Matrix::<Q>::from_i64_rows(&rows).unwrap().rank(), exact);
        prop_assert_eq!(Matrix::<Fp<2_147_483_647>>::from_i64_rows(&rows).unwrap().rank(), exact);
        prop_assert!(fmat(&rows).rank() <= exact);
    }

    #[test]
    fn leading_columns_of_a_subspace_are_contained(rows in small_matrix(), coeffs in prop::collection::vec(-3i64..=3, 8)) {
        let m = fmat(&rows);
        // a single combination of the rows spans a subspace of the row space
        let c = m.num_cols();
        let combo: Vec<i64> = (0..c).map(|j| rows.iter().zip(&coeffs).map(|(r, k)| r[j] * k).sum()).collect();
        let sub = fmat(&[combo]).rcf();
        let all = m.rcf().leading_profile().unwrap().jset();
        for j in sub.leading_profile().unwrap().jset() {
            prop_assert!(all.contains(&j));
        }
    }

    #[test]
    fn module_action_is_a_group_action(a in any::<u64>(), b in any::<u64>(), which in 0usize..4) {
        let id = [NamedIdentity::LeftAlternative, NamedIdentity::RightAlternative, NamedIdentity::AltDeg4, NamedIdentity::R1][which];
        let f = id.poly::<F>();
        let n = f.degree();
        let p = Permutation::unrank(n, a % factorial(n) + 1).unwrap();
        let q = Permutation::unrank(n, b % factorial(n) + 1).unwrap();
        prop_assert_eq!(f.act(&(p * q)).unwrap(), f.act(&q).unwrap().act(&p).unwrap());
        prop_assert_eq!(f.act(&Permutation::identity(n)).unwrap(), f);
    }

    #[test]
    fn consequences_remain_identities(which in 0usize..3, seed in any::<u64>()) {
        use rand::SeedableRng;
        type G = Fp<1_000_003>;
        let id = [NamedIdentity::LeftAlternative, NamedIdentity::RightAlternative, NamedIdentity::AltDeg4][which];
        let o = octonions::<G>();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        for g in id.poly::<G>().consequences().unwrap() {
            let args: Vec<_> = (0..g.degree()).map(|_| o.random_element(&mut rng)).collect();
            prop_assert!(g.evaluate(&o, &args).unwrap().is_zero());
        }
    }

    #[test]
    fn dense_round_trip(which in 0usize..9) {
        let f = NamedIdentity::ALL[which].poly::<F>();
        let back = MultilinearPoly::from_dense(f.degree(), TypeBasis::Free, &f.to_dense()).unwrap();
        prop_assert_eq!(&back, &f);
        let q = NamedIdentity::ALL[which].poly::<Q>();
        prop_assert_eq!(MultilinearPoly::<Q>::from_fixture(&q.to_fixture()).unwrap(), q);
    }
}

#[test]
fn dimensions_square_sum_and_hooks() {
    for n in 1..=7 {
        let mut total = 0;
        for lam in partitions(n) {
            let d = lam.dimension();
            assert_eq!(d, lam.dimension_by_hooks(), "{lam}");
            assert_eq!(d as usize, standard_tableaux(&lam).len(), "{lam}");
            total += d * d;
        }
        assert_eq!(total, factorial(n));
    }
}

#[test]
fn representations_are_homomorphisms() {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(99);
    for n in 2..=6 {
        let perms = enumerate(n).unwrap();
        for lam in partitions(n) {
            let rep = Representation::<F>::new(&lam);
            for _ in 0..200 {
                let p = &perms[rng.gen_range(0..perms.len())];
                let q = &perms[rng.gen_range(0..perms.len())];
                let lhs = rep.matrix(&(p * q)).unwrap();
                assert_eq!(lhs, rep.matrix(p).unwrap().mul(&rep.matrix(q).unwrap()).unwrap(), "{lam} {p} {q}");
            }
        }
    }
}

#[test]
fn symmetric_sums_conjugate() {
    for n in 1..=5 {
        let perms = enumerate(n).unwrap();
        for lam in partitions(n) {
            for t in standard_tableaux(&lam) {
                let h = symmetric_sum::<Q>(&t).unwrap();
                for p in &perms {
                    let hp = symmetric_sum::<Q>(&t.apply(p).unwrap()).unwrap();
                    let conj = GroupAlgebraElement::basis(*p)
                        .multiply(&h)
                        .unwrap()
                        .multiply(&GroupAlgebraElement::basis(p.inverse()))
                        .unwrap();
                    assert_eq!(hp, conj, "{t} {p}");
                }
            }
        }
    }
}

/// Fractions `a/b` in lowest terms with `|a| <= 50` and `b | 120`.
fn small_fractions() -> Vec<(i64, i64)> {
    let mut out: Vec<(i64, i64)> = (1..=120i64)
        .filter(|b| 120 % b == 0)
        .flat_map(|b| (-50i64..=50).map(move |a| (a / a.gcd(&b), b / a.gcd(&b))))
        .collect();
    out.sort();
    out.dedup();
    out
}

#[test]
fn reconstruction_round_trip() {
    const P: u64 = 5003;
    let fracs = small_fractions();
    let residue = |&(a, b): &(i64, i64)| Fp::<5003>::from_ratio(a, b).unwrap().residue() as u64;
    let mut failures = Vec::new();
    for f in &fracs {
        let r = residue(f);
        let ambiguous = fracs.iter().filter(|g| residue(g) == r).count() > 1;
        let ok = rational_reconstruct(r, P, 120).is_ok_and(|q| q == Q::from_ratio(f.0, f.1).unwrap());
        if !ok {
            failures.push((*f, ambiguous));
        }
    }
    // 42 = 5040/120 and 5040 = 5003 + 37, so 42 and 37/120 share a residue;
    // the smaller numerator wins and +-42 cannot be recovered
    assert_eq!(failures, [((-42, 1), true), ((42, 1), true)]);
}
