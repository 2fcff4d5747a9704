use eigencong_kernels::arith::primes_up_to;
use eigencong_kernels::factor::{factor_mod_p, factor_mod_p_seeded, factor_over_q, is_irreducible, roots};
use eigencong_kernels::zpoly::FpPoly;
use eigencong_kernels::{PolyRing, PrimeField, ZPoly};
use num_bigint::BigInt;
use proptest::prelude::*;

fn ring(p: u64) -> PolyRing<PrimeField> {
    PolyRing::new(PrimeField::new(p).unwrap())
}

/// All monic polynomials of degree `d` over F_p.
fn monics(p: u64, d: usize) -> Vec<FpPoly> {
    let r = ring(p);
    let count = p.pow(d as u32);
    (0..count)
        .map(|mut n| {
            let mut c = Vec::with_capacity(d + 1);
            for _ in 0..d {
                c.push(n % p);
                n /= p;
            }
            c.push(1);
            r.from_coeffs(c)
        })
        .collect()
}

/// Brute-force irreducibility: no monic divisor of degree 1..=deg/2.
fn brute_irreducible(p: u64, f: &FpPoly) -> bool {
    let r = ring(p);
    let n = f.deg();
    if n == 0 {
        return false;
    }
    for d in 1..=n / 2 {
        for g in monics(p, d) {
            if r.rem(f, &g).is_zero() {
                return false;
            }
        }
    }
    true
}

fn fp_strategy() -> impl Strategy<Value = (u64, Vec<u64>)> {
    prop::sample::select(vec![2u64, 3, 5, 7]).prop_flat_map(|p| (Just(p), prop::collection::vec(0..p, 2..8)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn mod_p_factors_multiply_back_and_are_irreducible((p, c) in fp_strategy()) {
        let r = ring(p);
        let f = r.from_coeffs(c);
        prop_assume!(!f.is_zero());
        let facs = factor_mod_p(r.field(), &f).unwrap();
        let prod = facs.iter().fold(r.one(), |acc, (g, m)| r.mul(&acc, &r.pow(g, *m as u64)));
        prop_assert_eq!(prod, r.monic(&f));
        for (g, _) in &facs {
            prop_assert!(r.is_monic(g));
            prop_assert!(brute_irreducible(p, g));
            prop_assert_eq!(is_irreducible(&r, g), true);
        }
        prop_assert_eq!(is_irreducible(&r, &f), brute_irreducible(p, &f));
        // Sorted by degree then coefficients, and independent of the seed.
        for w in facs.windows(2) {
            prop_assert!((w[0].0.deg(), w[0].0.coeffs()) < (w[1].0.deg(), w[1].0.coeffs()));
        }
        prop_assert_eq!(factor_mod_p_seeded(r.field(), &f, 12345).unwrap(), facs);
    }

    #[test]
    fn roots_match_exhaustive_search((p, c) in fp_strategy()) {
        let r = ring(p);
        let f = r.from_coeffs(c);
        prop_assume!(!f.is_zero());
        let expect: Vec<u64> = (0..p).filter(|x| r.eval(&f, x) == 0).collect();
        prop_assert_eq!(roots(&r, &f, 7).unwrap(), expect);
    }
}

/// Possible degrees of proper factors over Z, given modular degree patterns.
fn subset_sums(degs: &[usize]) -> Vec<bool> {
    let total: usize = degs.iter().sum();
    let mut can = vec![false; total + 1];
    can[0] = true;
    for &d in degs {
        for s in (d..=total).rev() {
            if can[s - d] {
                can[s] = true;
            }
        }
    }
    can
}

/// Degree-pattern sieve: proves irreducibility over Q when the subset sums
/// of modular factor degrees across several primes leave no proper degree.
fn sieve_irreducible(f: &ZPoly) -> bool {
    let n = f.deg();
    let mut possible = vec![true; n + 1];
    for p in primes_up_to(300) {
        let field = PrimeField::new(p).unwrap();
        let r = PolyRing::new(field);
        let red = f.reduce_mod(&field);
        if red.deg() != n || !r.is_squarefree(&red) {
            continue;
        }
        let degs: Vec<usize> = factor_mod_p(&field, &red)
            .unwrap()
            .iter()
            .flat_map(|(g, m)| std::iter::repeat_n(g.deg(), *m))
            .collect();
        let can = subset_sums(&degs);
        for d in 1..n {
            possible[d] &= can[d];
        }
        if (1..n).all(|d| !possible[d]) {
            return true;
        }
    }
    false
}

fn small_factor() -> impl Strategy<Value = ZPoly> {
    prop::collection::vec(-6i64..=6, 2..=4).prop_filter_map("nonconstant", |c| {
        let f = ZPoly::from_i64s(&c);
        (f.deg() >= 1).then_some(f)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn rational_factorization_is_exact_and_irreducible(
        parts in prop::collection::vec(small_factor(), 1..=4),
        unit in prop::sample::select(vec![-3i64, -1, 1, 2]),
    ) {
        let f = parts.iter().fold(ZPoly::from_i64s(&[unit]), |acc, g| acc.mul(g));
        prop_assume!(f.deg() <= 10);
        let fac = factor_over_q(&f).unwrap();
        prop_assert_eq!(fac.expand(), f.clone());
        for (g, _) in &fac.factors {
            prop_assert_eq!(g.content(), BigInt::from(1));
            prop_assert!(g.lc() > BigInt::from(0));
            prop_assert!(g.deg() == 1 || sieve_irreducible(g), "factor {} not proven irreducible", g);
        }
        // At least as many irreducible factors as nonconstant parts given.
        let count: usize = fac.factors.iter().map(|(_, m)| *m).sum();
        prop_assert!(count >= parts.len());
    }

    #[test]
    fn general_polynomials_refactor(c in prop::collection::vec(-20i64..=20, 1..=11)) {
        let f = ZPoly::from_i64s(&c);
        prop_assume!(!f.is_zero());
        let fac = factor_over_q(&f).unwrap();
        prop_assert_eq!(fac.expand(), f);
    }
}

#[test]
fn documented_examples() {
    let f5 = PrimeField::new(5).unwrap();
    let r5 = ring(5);
    let got = factor_mod_p(&f5, &r5.from_coeffs(vec![1, 0, 1])).unwrap();
    assert_eq!(got, vec![(r5.from_coeffs(vec![2, 1]), 1), (r5.from_coeffs(vec![3, 1]), 1)]);

    let x4m1 = factor_over_q(&ZPoly::from_i64s(&[-1, 0, 0, 0, 1])).unwrap();
    assert_eq!(x4m1.factors.len(), 3);
    assert_eq!(x4m1.factors[2].0, ZPoly::from_i64s(&[1, 0, 1]));

    let golden = factor_over_q(&ZPoly::from_i64s(&[-1, -1, 1])).unwrap();
    assert_eq!(golden.factors, vec![(ZPoly::from_i64s(&[-1, -1, 1]), 1)]);

    let sq = factor_over_q(&ZPoly::from_i64s(&[0, 0, 1])).unwrap();
    assert_eq!(sq.factors, vec![(ZPoly::from_i64s(&[0, 1]), 2)]);
}

#[test]
fn weight_24_hecke_polynomial() {
    let f = ZPoly::from_i64s(&[-20468736, -1080, 1]);
    let fac = factor_over_q(&f).unwrap();
    assert_eq!(fac.factors, vec![(f.clone(), 1)]);
    // Over F_144169 it has a double root.
    let p = PrimeField::new(144169).unwrap();
    let m = factor_mod_p(&p, &f.reduce_mod(&p)).unwrap();
    assert_eq!(m.len(), 1);
    assert_eq!(m[0].1, 2);
}
