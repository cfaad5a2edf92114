use symident::algebras::{matrix_algebra, octonions, StructureAlgebra};
use symident::polyid::fill::iteration_rng;
use symident::polyid::{
    analyze, fill_and_reduce, module_generators, new_generators, standard_polynomial, FillConfig, TypeBasis,
};
use symident::F101;

type F = F101;

#[test]
fn m2_degree_four_nullspace_is_s4() {
    let m2 = matrix_algebra::<F>(2).unwrap();
    let r = fill_and_reduce(&m2, 4, TypeBasis::Associative, &FillConfig::new(1)).unwrap();
    assert_eq!((r.rank, r.nullity()), (23, 1));
    let s4 = standard_polynomial::<F>(4).unwrap();
    let v = &r.identities[0];
    // proportional: v = c * s4
    let w = s4.to_dense();
    let c = v[0];
    assert_ne!(c.residue(), 0);
    assert!(v.iter().zip(&w).all(|(a, b)| *a == c * *b));
}

#[test]
fn m2_degree_five() {
    let m2 = matrix_algebra::<F>(2).unwrap();
    let all = fill_and_reduce(&m2, 5, TypeBasis::Associative, &FillConfig::new(1)).unwrap();
    assert_eq!((all.rank, all.nullity()), (91, 29));
    let s4 = standard_polynomial::<F>(4).unwrap();
    let cons = s4.consequences().unwrap();
    assert_eq!(cons.len(), 6);
    let (old, _) = module_generators(&[s4], 5, TypeBasis::Associative).unwrap();
    assert_eq!(old, 24);
    let new = new_generators(&all, &cons).unwrap();
    assert_eq!(new.len(), 1);
    assert!(new[0].len() <= 18, "support {}", new[0].len());
    let mut rng = iteration_rng(3, "check", 0);
    for _ in 0..20 {
        let args: Vec<_> = (0..5).map(|_| m2.random_element(&mut rng)).collect();
        assert!(new[0].evaluate(&m2, &args).unwrap().is_zero());
    }
}

fn cross_check(alg: &StructureAlgebra<F>, n: usize, basis: TypeBasis) {
    let cfg = FillConfig::new(17);
    let global = fill_and_reduce(alg, n, basis, &cfg).unwrap();
    let per = analyze(alg, n, basis, &[], &cfg, None).unwrap();
    assert_eq!(global.nullity(), per.total_identities(), "{} degree {n}", alg.name());
}

#[test]
fn global_and_partitioned_counts_agree() {
    let o = octonions::<F>();
    let m2 = matrix_algebra::<F>(2).unwrap();
    for n in [3, 4] {
        cross_check(&o, n, TypeBasis::Free);
        cross_check(&m2, n, TypeBasis::Associative);
        cross_check(&m2, n, TypeBasis::Free);
    }
}
