use std::collections::BTreeSet;

use eigencong::falg::{algebra_homs, decompose, homs_from_decomposition, local_decomposition, restriction_collision, FpAlgebra, FpVec};
use eigencong::order::{maximal_order, Order};
use eigencong::NumberField;
use eigencong_kernels::{linalg, Field, Matrix, PrimeField, ZPoly};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const PRIMES: [u64; 5] = [2, 3, 5, 7, 13];

/// A product of finite fields of total dimension ≤ 12 on a random basis.
fn random_product(seed: u64) -> (FpAlgebra, Vec<usize>) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let p = PRIMES[rng.gen_range(0..PRIMES.len())];
    let mut degrees = Vec::new();
    let target = rng.gen_range(1..=12);
    while degrees.iter().sum::<usize>() < target {
        let left = target - degrees.iter().sum::<usize>();
        degrees.push(rng.gen_range(1..=left.min(4)));
    }
    let a = FpAlgebra::product_of_fields(p, &degrees).unwrap();
    let n = a.dim();
    let pf = PrimeField::new(p).unwrap();
    let basis = loop {
        let m = Matrix::from_fn(n, n, |_, _| rng.gen_range(0..p));
        if linalg::rank(&pf, &m) == n {
            break m;
        }
    };
    (a.change_basis(&basis).unwrap(), degrees)
}

fn random_elements(a: &FpAlgebra, count: usize, rng: &mut ChaCha8Rng) -> Vec<FpVec> {
    (0..count).map(|_| (0..a.dim()).map(|_| rng.gen_range(0..a.p())).collect()).collect()
}

#[test]
fn algebra_suite() {
    for seed in 0..100u64 {
        let (a, degrees) = random_product(seed);
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0xabcdef);
        assert!(a.is_semisimple());

        // |S(A)| = dim A, and each member is a ring homomorphism.
        let homs = algebra_homs(&a).unwrap();
        assert_eq!(homs.len(), a.dim(), "seed {seed}");
        let distinct: BTreeSet<_> = homs.iter().map(|h| h.images.clone()).collect();
        assert_eq!(distinct.len(), homs.len());
        for h in &homs {
            assert_eq!(h.apply(a.one()), h.target.one());
            for x in random_elements(&a, 3, &mut rng) {
                for y in random_elements(&a, 2, &mut rng) {
                    assert_eq!(h.apply(&a.mul(&x, &y)), h.target.mul(&h.apply(&x), &h.apply(&y)));
                }
            }
        }

        let dec = decompose(&a).unwrap();
        let mut got: Vec<usize> = dec.components.iter().map(|c| c.degree()).collect();
        let mut want = degrees.clone();
        got.sort();
        want.sort();
        assert_eq!(got, want);

        // Subalgebras generated by 0, 1 or 2 random elements.
        for gens in 0..3 {
            let b = a.subalgebra_image(&random_elements(&a, gens, &mut rng)).unwrap();
            assert!(b.algebra.is_semisimple(), "seed {seed}");
            match restriction_collision(&a, &b).unwrap() {
                Some((h1, h2)) => {
                    assert!(b.dim() < a.dim());
                    assert_ne!(h1, h2);
                    for v in &b.inclusion {
                        assert_eq!(h1.apply(v), h2.apply(v));
                    }
                }
                None => assert_eq!(b.dim(), a.dim()),
            }
        }

        // Embedding list for r copies of F_{p^f}.
        let f = degrees[0];
        let r = degrees.len().min(3);
        let equal = FpAlgebra::product_of_fields(a.p(), &vec![f; r]).unwrap();
        let list = homs_from_decomposition(&decompose(&equal).unwrap()).unwrap();
        let distinct: BTreeSet<_> = list.iter().map(|h| h.images.clone()).collect();
        assert_eq!(list.len(), r * f);
        assert_eq!(distinct.len(), r * f);
    }
}

#[test]
fn order_quotients() {
    let field = |c: &[i64]| NumberField::new(ZPoly::from_i64s(c)).unwrap();
    // Z[i]/2 = F_2[x]/(x+1)^2.
    let zi = Order::equation_order(&field(&[1, 0, 1]));
    let a = zi.quotient_mod_p(2).unwrap();
    assert!(!a.is_semisimple());
    assert_eq!(a.radical().len(), 1);
    // Z[i]/3 = F_9, Z[i]/5 = F_5 × F_5.
    let loc = local_decomposition(&zi.quotient_mod_p(3).unwrap()).unwrap();
    assert_eq!((loc.len(), loc[0].residue_degree), (1, 2));
    assert_eq!(decompose(&zi.quotient_mod_p(5).unwrap()).unwrap().components.len(), 2);

    // Structure constants agree with the order's multiplication mod p.
    let o = maximal_order(&field(&[-2, 0, 0, 1])).unwrap();
    let a = o.quotient_mod_p(7).unwrap();
    for i in 0..3 {
        for j in 0..3 {
            let exact: Vec<u64> = o.mult_entry(i, j).iter().map(|c| PrimeField::new(7).unwrap().reduce(c)).collect();
            assert_eq!(a.basis_product(i, j), exact);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn local_factors_cover_dimension(seed in 0u64..10_000, nil in 0usize..3) {
        // A × F_p[ε]/(ε^{nil+1}) on the standard basis.
        let (a, _) = random_product(seed);
        let p = a.p();
        let base = a.dim();
        let m = nil + 1;
        let n = base + m;
        let mut table = vec![vec![0u64; n]; n * n];
        for i in 0..base {
            for j in 0..base {
                table[i * n + j][..base].copy_from_slice(&a.basis_product(i, j));
            }
        }
        for i in 0..m {
            for j in 0..m {
                if i + j < m {
                    table[(base + i) * n + base + j][base + i + j] = 1;
                }
            }
        }
        let mut one = a.one().clone();
        one.extend(std::iter::once(1).chain(std::iter::repeat(0).take(m - 1)));
        let big = FpAlgebra::new(p, n, table, one).unwrap();
        let loc = local_decomposition(&big).unwrap();
        let total: usize = loc.iter().map(|l| l.length * l.residue_degree).sum();
        prop_assert_eq!(total, n);
        prop_assert_eq!(big.radical().len(), nil);
        prop_assert_eq!(big.is_semisimple(), nil == 0);
    }
}
