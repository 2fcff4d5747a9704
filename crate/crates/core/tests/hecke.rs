use eigencong::hecke::*;
use eigencong::order::maximal_order;
use eigencong::{Error, NumberField};
use eigencong_kernels::arith::{is_prime_u64, primes_up_to};
use eigencong_kernels::{linalg, Field, IntMatrix, Matrix, Rationals, ZPoly};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use proptest::prelude::*;

/// `dim M_k` counts monomials `E_4^a E_6^b` of weight `k`; one of them is
/// not cuspidal.
fn dimension_by_monomials(k: i64) -> usize {
    let monomials = (0..=k / 4).filter(|a| (k - 4 * a) % 6 == 0).count();
    monomials.saturating_sub(1)
}

/// `q Π (1 − q^n)^24`, independent of the Eisenstein series.
fn delta_product(b: usize) -> Vec<BigInt> {
    let mut s = vec![BigInt::zero(); b + 1];
    s[1] = BigInt::one();
    for n in 1..=b {
        for _ in 0..24 {
            for i in (n..=b).rev() {
                let t = s[i - n].clone();
                s[i] -= t;
            }
        }
    }
    s
}

fn zpoly(c: &[i64]) -> ZPoly {
    ZPoly::from_i64s(c)
}

#[test]
fn dimensions() {
    let start = std::time::Instant::now();
    for k in (12..=40).step_by(2) {
        let b = dimension(k) + 2;
        assert_eq!(miller_basis(k, b.max(2)).unwrap().len(), dimension_by_monomials(k), "k = {k}");
        assert_eq!(dimension(k), dimension_by_monomials(k));
    }
    assert!(start.elapsed().as_secs_f64() < 1.0);
}

#[test]
fn delta_expansion() {
    let d = delta(50);
    assert_eq!(d.coeffs(), delta_product(50).as_slice());
    assert_eq!(d.coeff(2).unwrap(), &BigInt::from(-24));
    assert_eq!(d.coeff(3).unwrap(), &BigInt::from(252));
    assert_eq!(*d.coeff(6).unwrap(), d.coeff(2).unwrap() * d.coeff(3).unwrap());
    let a = |n: usize| d.coeff(n).unwrap().clone();
    for p in primes_up_to(50) {
        let p = p as usize;
        let pk = BigInt::from(p).pow(11);
        let mut q = p;
        while q * p <= 50 {
            assert_eq!(a(q * p), a(p) * a(q) - &pk * a(q / p), "p = {p}, q = {q}");
            q *= p;
        }
    }
    for m in 2..=50usize {
        for n in 2..=50 / m {
            if m.gcd(&n) == 1 {
                assert_eq!(a(m * n), a(m) * a(n));
            }
        }
    }
}

#[test]
fn miller_basis_shape() {
    for k in (12..=60).step_by(2) {
        let basis = miller_basis(k, 30).unwrap();
        assert_eq!(basis.len(), dimension(k));
        for (j, g) in basis.iter().enumerate() {
            assert!(g.is_cuspidal());
            assert_eq!(g.weight(), k);
            for i in 1..=basis.len() {
                let expected = BigInt::from((i == j + 1) as i64);
                assert_eq!(g.coeff(i).unwrap(), &expected, "k = {k}");
            }
        }
    }
    assert!(miller_basis(14, 10).unwrap().is_empty());
    assert_eq!(miller_basis(12, 10).unwrap()[0], delta(10));
    assert!(matches!(miller_basis(13, 10), Err(Error::WeightUnsupported(13))));
    assert!(matches!(miller_basis(10, 10), Err(Error::WeightUnsupported(10))));
    assert!(matches!(miller_basis(36, 4), Err(Error::InsufficientPrecision(_))));
    assert!(matches!(delta(5).coeff(6), Err(Error::InsufficientPrecision(_))));
}

#[test]
fn hecke_matrices() {
    assert_eq!(hecke_matrix(12, 2, 10).unwrap(), IntMatrix::from_i64_rows(&[&[-24]]));
    assert!(matches!(hecke_matrix(36, 4, 11), Err(Error::InsufficientPrecision(_))));
    for k in (12..=40).step_by(2) {
        let d = dimension(k);
        let b = 40.max(12 * d);
        let basis = miller_basis(k, b).unwrap();
        let t = |n: usize| hecke_matrix_on(&basis, n).unwrap();
        assert_eq!(t(1), IntMatrix::identity(d));
        for (m, n) in [(2, 3), (2, 5), (3, 4), (2, 7), (3, 5)] {
            if m * n * d <= b {
                assert_eq!(t(m).mul(&t(n)), t(m * n), "k = {k}");
            }
        }
        // T_p^2 = T_{p^2} + p^{k-1}.
        for p in [2usize, 3] {
            if p * p * d <= b {
                let pk = BigInt::from(p).pow((k - 1) as u32);
                let sq = t(p).mul(&t(p));
                let rhs = Matrix::from_fn(d, d, |i, j| &t(p * p)[(i, j)] + if i == j { pk.clone() } else { BigInt::zero() });
                assert_eq!(sq, rhs);
            }
        }
    }
}

/// Coordinates of `f` on a basis, solved from the first `n` coefficients.
fn coords_on(basis: &[Vec<BigInt>], f: &[BigInt], n: usize) -> Vec<BigRational> {
    let q = |x: &BigInt| BigRational::from_integer(x.clone());
    let cols: Vec<Vec<BigRational>> = basis.iter().map(|g| g[1..=n].iter().map(q).collect()).collect();
    let m = Matrix::from_cols(n, &cols);
    let rhs: Vec<BigRational> = f[1..=n].iter().map(q).collect();
    linalg::solve(&Rationals, &m, &rhs).expect("f lies in the span")
}

#[test]
fn weight_24_char_poly_on_two_bases() {
    let expected = zpoly(&[-20468736, -1080, 1]);
    assert_eq!(int_charpoly(&hecke_matrix(24, 2, 10).unwrap()), expected);

    // Δ·E_4³ and Δ·E_6², with T_2 solved on their first two coefficients.
    let b = 20;
    let e4 = eisenstein(4, b).unwrap();
    let e6 = eisenstein(6, b).unwrap();
    let d = delta(b);
    let products = [d.mul(&e4).mul(&e4).mul(&e4), d.mul(&e6).mul(&e6)];
    let coeffs: Vec<Vec<BigInt>> = products.iter().map(|g| g.coeffs().to_vec()).collect();
    let cols: Vec<Vec<BigRational>> =
        products.iter().map(|g| coords_on(&coeffs, hecke_operator(g, 2).coeffs(), 2)).collect();
    let m = Matrix::from_cols(2, &cols);
    let cp = linalg::charpoly(&Rationals, &m);
    let cp: Vec<BigInt> = cp.iter().map(|c| c.to_integer()).collect();
    assert_eq!(ZPoly::new(cp), expected);
    // The image agrees beyond the coefficients used to solve.
    for (g, c) in products.iter().zip(&cols) {
        let tg = hecke_operator(g, 2);
        for n in 3..=tg.precision() {
            let v = coeffs
                .iter()
                .zip(c)
                .fold(BigRational::zero(), |acc, (h, x)| acc + x * BigRational::from_integer(h[n].clone()));
            assert_eq!(v, BigRational::from_integer(tg.coeffs()[n].clone()));
        }
    }
}

#[test]
fn eigenform_fields() {
    let fs = eigenforms(12).unwrap();
    assert_eq!(fs.len(), 1);
    assert_eq!(fs[0].field().degree(), 1);
    assert_eq!(fs[0].coeff(2), Some(&fs[0].field().from_int(-24)));

    let fs = eigenforms(24).unwrap();
    assert_eq!(fs.len(), 1);
    let k = fs[0].field();
    assert_eq!(k.minpoly(), &zpoly(&[-20468736, -1080, 1]));
    assert_eq!(fs[0].coeff(2), Some(&k.gen()));
    // 1080² + 4·20468736 = 24²·144169 and 144169 is squarefree.
    assert_eq!(k.minpoly().discriminant(), BigInt::from(576) * BigInt::from(144169));
    assert_eq!(maximal_order(k).unwrap().disc(), BigInt::from(144169));
    let sqrt = NumberField::new(zpoly(&[-144169, 0, 1])).unwrap();
    assert_eq!(maximal_order(&sqrt).unwrap().disc(), BigInt::from(144169));

    assert_eq!(eigenforms(26).unwrap()[0].field().degree(), 1);
    assert!(eigenforms(14).unwrap().is_empty());
    assert!(matches!(eigenforms(13), Err(Error::WeightUnsupported(13))));
    assert!(matches!(eigenforms(62), Err(Error::WeightUnsupported(62))));

    let cubic = eigenforms(36).unwrap();
    assert_eq!(cubic.len(), 1);
    assert_eq!(cubic[0].field().minpoly(), &ZPoly::new(vec![
        "-1467625047588864".parse().unwrap(),
        "-59208339456".parse().unwrap(),
        BigInt::from(-139656),
        BigInt::one(),
    ]));
}

#[test]
fn eigenform_invariants() {
    for k in (12..=40).step_by(2) {
        let lev = LevelOne::with_precision(k, 30).unwrap();
        assert_eq!(lev.generator(), (1, 0));
        let total: usize = lev.eigenforms().iter().map(|f| f.field().degree()).sum();
        assert_eq!(total, dimension(k));
        for f in lev.eigenforms() {
            assert_eq!(f.coeff(1), Some(&f.field().one()));
            assert!(multiplicativity_check(f), "k = {k}");
            assert!(ramanujan_check(f), "k = {k}");
            // a_2 is a root of the characteristic polynomial of T_2.
            let v = f.field().eval_zpoly(&int_charpoly(lev.operator(2)), f.coeff(2).unwrap());
            assert!(f.field().is_zero(&v));
            assert_eq!(lev.operator(1), &IntMatrix::identity(dimension(k)));
        }
    }
}

#[test]
fn ramanujan_rejects_large_coefficients() {
    let q = NumberField::rationals();
    let mut coeffs = eigenforms(12).unwrap()[0].coeffs().to_vec();
    coeffs[1] = q.from_int(3000); // 2·2^{5.5} ≈ 90.5
    let fake = Eigenform::new(12, 1, q.clone(), coeffs).unwrap();
    assert!(!ramanujan_check(&fake));
    let bad = Eigenform::new(12, 1, q.clone(), vec![q.from_int(2)]);
    assert!(matches!(bad, Err(Error::Invalid(_))));
}

#[test]
fn lattices() {
    let t = hecke_lattice(12, 10).unwrap();
    assert_eq!(t.rank(), 1);
    assert_eq!(index_in_normalization(&t), BigInt::one());
    assert!(matches!(hecke_lattice(36, 2), Err(Error::InsufficientPrecision(_))));

    let t = hecke_lattice(24, 10).unwrap();
    assert_eq!(t.rank(), 2);
    let idx = index_in_normalization(&t);
    assert_eq!(idx, t.orbits()[0].index);
    // [O:T]² = disc(T)/disc(O) for one orbit.
    let disc_t = t.disc_trace_form();
    let ratio = &disc_t / t.orbits()[0].maximal_order.disc();
    assert_eq!(&idx * &idx, ratio);
    assert_eq!(ratio * t.orbits()[0].maximal_order.disc(), disc_t);

    let t = hecke_lattice(36, default_precision(36)).unwrap();
    assert_eq!(t.rank(), 3);
    assert_eq!(t.orbits().len(), 1);
}

#[test]
fn discriminant_decomposition() {
    for k in (12..=40).step_by(2) {
        let r = disc_decomposition(k).unwrap();
        assert!(r.holds, "k = {k}: {r:?}");
        assert_eq!(r.disc_t, r.rhs());
        if r.orbit_indices.len() <= 1 {
            assert_eq!(r.congruence_module_order, BigInt::one());
        }
    }
    let r = disc_decomposition(12).unwrap();
    assert_eq!((r.disc_t.clone(), r.rhs()), (BigInt::one(), BigInt::one()));
    let r = disc_decomposition(24).unwrap();
    assert_eq!(r.disc_t, &r.orbit_indices[0] * &r.orbit_indices[0] * BigInt::from(144169));
}

#[test]
fn sturm_bounds() {
    assert_eq!(sturm_bound(12), 1);
    assert_eq!(sturm_bound(24), 2);
    assert_eq!(sturm_bound(36), 3);
    assert_eq!(default_precision(36), 10);
    assert_eq!(default_precision(200), 18);
}

#[test]
fn primes_of_disc_t_detect_congruences() {
    use eigencong::congruence::characteristic_p_congruence;
    for k in (12..=40).step_by(2) {
        let t = hecke_lattice(k, default_precision(k)).unwrap();
        let disc = t.disc_trace_form();
        let bound = sturm_bound(k);
        let mut checked_outside = 0;
        for p in primes_up_to(200).into_iter().chain(
            eigencong_kernels::arith::prime_divisors(&disc).unwrap().iter().filter_map(num_traits::ToPrimitive::to_u64),
        ) {
            let divides = disc.is_multiple_of(&BigInt::from(p));
            if !divides {
                checked_outside += 1;
            }
            assert!(is_prime_u64(p));
            assert_eq!(characteristic_p_congruence(t.orbits(), p, bound).unwrap(), divides, "k = {k}, p = {p}");
        }
        assert!(checked_outside > 30);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn hecke_operators_commute(k in (6i64..=20).prop_map(|x| 2 * x), m in 1usize..6, n in 1usize..6, c in proptest::collection::vec(-50i64..50, 4)) {
        let d = dimension(k);
        prop_assume!(d > 0);
        let basis = miller_basis(k, 60 * d).unwrap();
        let mut f = basis[0].clone();
        for (g, ci) in basis.iter().zip(&c).skip(1) {
            let coeffs = f.coeffs().iter().zip(g.coeffs()).map(|(a, b)| a + BigInt::from(*ci) * b).collect();
            f = QExpansion::new(k, coeffs);
        }
        let mn = hecke_operator(&hecke_operator(&f, n), m);
        let nm = hecke_operator(&hecke_operator(&f, m), n);
        let len = mn.precision().min(nm.precision());
        prop_assert_eq!(&mn.coeffs()[..=len], &nm.coeffs()[..=len]);
        if m.gcd(&n) == 1 {
            let direct = hecke_operator(&f, m * n);
            prop_assert_eq!(&direct.coeffs()[..=len.min(direct.precision())], &mn.coeffs()[..=len.min(direct.precision())]);
        }
    }

    #[test]
    fn series_product_is_commutative(a in proptest::collection::vec(-1000i64..1000, 1..20), b in proptest::collection::vec(-1000i64..1000, 1..20)) {
        let x = QExpansion::new(0, a.into_iter().map(BigInt::from).collect());
        let y = QExpansion::new(0, b.into_iter().map(BigInt::from).collect());
        prop_assert_eq!(x.mul(&y), y.mul(&x));
    }
}
