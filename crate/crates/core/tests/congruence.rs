use eigencong::congruence::*;
use eigencong::hecke::{eigenforms, sturm_bound, Eigenform, LevelOne, Orbit};
use eigencong::prime::{j_group, split_prime};
use eigencong::{Automorphism, Error, NumberField};
use eigencong_kernels::arith::primes_up_to;
use eigencong_kernels::{Field, ZPoly};
use num_bigint::BigInt;

fn weight24() -> FormData {
    FormData::new("24", eigenforms(24).unwrap().remove(0)).unwrap()
}

/// Coefficients in `Z[√5]` with `a_2 = √5`, so `R = Z[√5]` has index 2 in
/// the ring of integers of `Q(√5)`.
fn synthetic() -> FormData {
    let k = NumberField::new(ZPoly::from_i64s(&[-5, 0, 1])).unwrap();
    let r5 = k.gen();
    let c = |a: i64, b: i64| k.add(&k.from_int(a), &k.mul(&k.from_int(b), &r5));
    let coeffs = vec![c(1, 0), c(0, 1), c(3, 0), c(1, 2), c(-2, 0), c(0, 3)];
    FormData::new("synthetic", Eigenform::new(24, 1, k, coeffs).unwrap()).unwrap()
}

fn nontrivial(fd: &FormData) -> Automorphism {
    fd.automorphisms().iter().find(|s| !s.is_identity()).unwrap().clone()
}

#[test]
fn sturm_bounds() {
    assert_eq!(sturm_bound_level(12, 1), 1);
    assert_eq!(sturm_bound_level(24, 1), 2);
    assert_eq!(sturm_bound_level(36, 1), 3);
    assert_eq!(sturm_bound_level(2, 23), 4);
    assert_eq!(sturm_bound_level(2, 11), 2);
    for k in (12..=60).step_by(2) {
        assert_eq!(sturm_bound_level(k, 1), sturm_bound(k));
    }
}

#[test]
fn congruence_checks() {
    let fd = weight24();
    let coeffs = fd.native_coefficients();
    let id = Automorphism::identity(fd.field());
    let sigma = nontrivial(&fd);
    for p in [2u64, 5, 144169] {
        for q in split_prime(fd.maximal_order(), p).unwrap() {
            let c = check_congruence(&coeffs, &id, &q, 10).unwrap();
            assert!(c.holds);
            assert_eq!(c.log.len(), 10);
        }
    }
    let above = split_prime(fd.maximal_order(), 144169).unwrap();
    assert_eq!(above.len(), 1);
    let c = check_congruence(&coeffs, &sigma, &above[0], 10).unwrap();
    assert!(c.holds);
    assert!(c.log.iter().all(|e| e.in_ideal && above[0].residue_field().is_zero(&e.residue)));

    // 5 is prime to 144169·24 and unramified.
    for q in split_prime(fd.maximal_order(), 5).unwrap() {
        assert!(j_group(&q, fd.automorphisms()).unwrap().is_trivial());
        let c = check_congruence(&coeffs, &sigma, &q, 2).unwrap();
        assert!(!c.holds);
        assert!(c.log[0].in_ideal);
        assert!(!c.log[1].in_ideal);
    }

    let other = synthetic();
    let q = &split_prime(other.maximal_order(), 2).unwrap()[0];
    assert!(matches!(check_congruence(&coeffs, &sigma, q, 2), Err(Error::EmbeddingFailure(_))));
    assert!(matches!(check_congruence(&coeffs, &sigma, &above[0], 11), Err(Error::InsufficientPrecision(_))));
}

#[test]
fn proposition_forward() {
    let fd = weight24();
    let sigma = nontrivial(&fd);
    let q = &split_prime(fd.maximal_order(), 144169).unwrap()[0];
    let v = prop1_forward(&fd, &sigma, q, 2).unwrap();
    assert_eq!(v.j_element.as_ref(), Some(&sigma));
    assert!(!v.index_divisible);

    // 2 | [O:R] = 24 and 2 is unramified in Q(√144169): index branch alone.
    for q in split_prime(fd.maximal_order(), 2).unwrap() {
        if let Ok(v) = prop1_forward(&fd, &sigma, &q, 2) {
            assert!(v.index_divisible);
            assert!(v.j_element.is_none());
        }
    }

    let syn = synthetic();
    assert_eq!(syn.index(), &BigInt::from(2));
    let s = nontrivial(&syn);
    let q2 = &split_prime(syn.maximal_order(), 2).unwrap()[0];
    let v = prop1_forward(&syn, &s, q2, 6).unwrap();
    assert!(v.index_divisible);
    assert!(v.j_element.is_none());
    // 5 ramifies and 5 ∤ 2.
    let q5 = &split_prime(syn.maximal_order(), 5).unwrap()[0];
    let v = prop1_forward(&syn, &s, q5, 6).unwrap();
    assert!(v.j_element.is_some() && !v.index_divisible);

    let id = Automorphism::identity(syn.field());
    assert!(matches!(prop1_forward(&syn, &id, q2, 6), Err(Error::HypothesisUnmet(_))));
    let q11 = &split_prime(syn.maximal_order(), 11).unwrap()[0];
    assert!(matches!(prop1_forward(&syn, &s, q11, 6), Err(Error::HypothesisUnmet(_))));
}

#[test]
fn inertia_elements_give_congruences() {
    for k in [24i64, 28, 30, 32, 34, 38] {
        let fd = FormData::new(k.to_string(), eigenforms(k).unwrap().remove(0)).unwrap();
        for &p in fd.ramified() {
            for q in split_prime(fd.maximal_order(), p).unwrap() {
                assert_eq!(prop1_inertia(&fd, &q, 10).unwrap().len(), 1, "k = {k}, p = {p}");
            }
        }
    }
}

#[test]
fn witnesses() {
    let fd = weight24();
    let w = find_witness(&fd, 144169, 2).unwrap();
    assert_eq!(w.branch, Branch::Ramified);
    assert_eq!(w.sigma, nontrivial(&fd));
    assert!(w.acts_on_base);
    for p in [2u64, 3] {
        let w = find_witness(&fd, p, 10).unwrap();
        assert_eq!(w.branch, Branch::Index);
        assert!(!w.sigma.is_identity());
        assert!(check_congruence(&fd.closure_coefficients(), &w.sigma, &w.prime, 10).unwrap().holds);
        // The randomized splitting only changes how the answer is found.
        for seed in [1u64, 0xdead_beef, u64::MAX] {
            let v = find_witness_seeded(&fd, p, 10, seed).unwrap();
            assert_eq!((&v.sigma, v.prime.hnf()), (&w.sigma, w.prime.hnf()), "seed {seed}");
        }
    }
    assert!(matches!(find_witness(&fd, 5, 2), Err(Error::HypothesisUnmet(_))));

    let syn = synthetic();
    let w = find_witness(&syn, 2, 6).unwrap();
    assert_eq!(w.branch, Branch::Index);
    assert_eq!(w.prime.p(), 2);
    assert_eq!(w.prime.residue_degree(), 2);
    assert_eq!(w.sigma, nontrivial(&syn));
    assert!(w.log.iter().all(|e| e.in_ideal));
    assert!(matches!(find_witness(&syn, 7, 6), Err(Error::HypothesisUnmet(_))));
    assert_eq!(find_witness(&syn, 5, 6).unwrap().branch, Branch::Ramified);
}

#[test]
fn galois_iff() {
    let q = FormData::new("12", eigenforms(12).unwrap().remove(0)).unwrap();
    let r = verify_galois_iff(&q, 1000, 1).unwrap();
    assert!(r.s1.is_empty() && r.s2.is_empty());

    let r = verify_galois_iff(&weight24(), 1000, 2).unwrap();
    assert_eq!(r.s1, vec![2, 3, 144169]);
    assert_eq!(r.s2, r.s1);

    let r = verify_galois_iff(&synthetic(), 200, 6).unwrap();
    assert_eq!(r.s1, vec![2, 5]);
    assert_eq!(r.s2, vec![2, 5]);

    let cubic = FormData::new("36", eigenforms(36).unwrap().remove(0)).unwrap();
    assert!(!cubic.is_galois());
    assert!(matches!(verify_galois_iff(&cubic, 100, 3), Err(Error::NotGalois)));
}

#[test]
fn non_galois_one_way() {
    let lev = LevelOne::new(36).unwrap();
    let fd = FormData::new("36", lev.eigenforms()[0].clone()).unwrap();
    assert_eq!(fd.closure().field().degree(), 6);
    assert!(fd.closure_index().is_none());
    let r = analyze(&fd, &AnalysisOptions::default()).unwrap();
    assert!(r.certified);
    let s1 = fd.s1();
    assert_eq!(r.corollary, CorollaryVerdict::OneWay(s1.clone()));
    for p in s1 {
        let v = r.verdicts.iter().find(|v| v.p == p).unwrap();
        assert!(v.witness.is_some());
    }
}

#[test]
fn cross_congruence_pairs() {
    let t = eigencong::hecke::hecke_lattice(24, 10).unwrap();
    assert!(cross_congruences(t.orbits(), 2, 2).unwrap().is_empty());

    // Two rational coefficient lists agreeing modulo 5 but not modulo 7.
    let q = NumberField::rationals();
    let mk = |v: &[i64]| Orbit::new(Eigenform::new(2, 11, q.clone(), v.iter().map(|&x| q.from_int(x)).collect()).unwrap()).unwrap();
    let f = mk(&[1, -2, -1, 2, 1, 2]);
    let g = mk(&[1, 3, 4, -3, 6, 7]);
    let h = mk(&[1, 0, 0, 0, 0, 0]);
    let orbits = [f, g, h];
    assert_eq!(cross_congruences(&orbits, 5, 6).unwrap(), vec![(0, 1)]);
    assert!(cross_congruences(&orbits, 7, 6).unwrap().is_empty());
    assert_eq!(cross_congruences(&orbits, 2, 2).unwrap(), vec![(0, 2)]);
    assert!(characteristic_p_congruence(&orbits, 5, 6).unwrap());
    assert!(!characteristic_p_congruence(&orbits, 7, 6).unwrap());
}

#[test]
fn level_one_coverage_small() {
    for k in [12i64, 16, 24, 26, 28] {
        for (i, f) in eigenforms(k).unwrap().into_iter().enumerate() {
            let fd = FormData::new(format!("{k}.{i}"), f).unwrap();
            let r = analyze(&fd, &AnalysisOptions { scan: 300, ..Default::default() }).unwrap();
            for v in &r.verdicts {
                let w = v.witness.as_ref().unwrap();
                assert!(check_congruence(&fd.closure_coefficients(), &w.sigma, &w.prime, w.bound).unwrap().holds);
            }
            for p in primes_up_to(50) {
                if !fd.s1().contains(&p) {
                    assert!(matches!(find_witness(&fd, p, r.bound), Err(Error::HypothesisUnmet(_))));
                }
            }
        }
    }
}
