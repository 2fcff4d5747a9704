//! Acceptance run: one PASS/FAIL line per criterion, with its time limit.

use std::collections::BTreeSet;
use std::path::PathBuf;
use std::time::{Duration, Instant};

use eigencong::congruence::{find_witness, search_witness, sturm_bound_level, verify_galois_iff, Branch, FormData};
use eigencong::falg::{algebra_homs, decompose, homs_from_decomposition, restriction_collision, FpAlgebra, FpVec};
use eigencong::hecke::{delta, dimension, disc_report, eigenforms, eisenstein, hecke_matrix, hecke_operator, int_charpoly, miller_basis, HeckeLattice, LevelOne};
use eigencong::order::maximal_order;
use eigencong::prime::{split_prime, split_prime_kummer_dedekind, split_prime_local};
use eigencong::{j_group, Error, NumberField, PrimeIdeal};
use eigencong_cli::app::{analyze_eigenform_file, analyze_weight, RunOptions, SYNTHETIC};
use eigencong_cli::fetch::{fetch, Source};
use eigencong_cli::file::EigenformFile;
use eigencong_cli::report::{BranchReport, Provenance};
use eigencong_kernels::arith::{prime_divisors, primes_up_to};
use eigencong_kernels::{linalg, Field, Matrix, PrimeField, Rationals, ZPoly};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn weights() -> impl Iterator<Item = i64> {
    (12..=40).step_by(2)
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 { a } else { gcd(b, a % b) }
}

/// `dim S_k` at level one: ⌊k/12⌋, less one when k ≡ 2 (mod 12).
fn classical_dimension(k: i64) -> usize {
    (if k % 12 == 2 { k / 12 - 1 } else { k / 12 }) as usize
}

fn dimensions() -> Outcome {
    for k in weights() {
        let d = classical_dimension(k);
        let basis = miller_basis(k, d + 2).map_err(err)?;
        ensure(basis.len() == d && dimension(k) == d, || format!("k = {k}: basis {} vs {d}", basis.len()))?;
        // Leading terms q^1..q^d make the basis independent.
        for (j, g) in basis.iter().enumerate() {
            let c = g.coeffs();
            ensure(c[..=j].iter().all(Zero::is_zero) && c[j + 1] == BigInt::from(1), || format!("k = {k}: basis element {j} not echelon"))?;
        }
    }
    Ok("dim S_k matches for k = 12..40".into())
}

/// `q Π (1 − q^n)^24` to `q^b` in machine integers.
fn delta_product(b: usize) -> Vec<i128> {
    let mut c = vec![0i128; b + 1];
    c[1] = 1;
    for n in 1..=b {
        for _ in 0..24 {
            for m in (n..=b).rev() {
                c[m] -= c[m - n];
            }
        }
    }
    c
}

fn delta_sanity() -> Outcome {
    let b = 50;
    let d = delta(b);
    let tau: Vec<i128> = d.coeffs().iter().map(|x| x.to_i128().unwrap()).collect();
    // (E_4^3 − E_6^2)/1728 against the product formula.
    let e4 = eisenstein(4, b).map_err(err)?;
    let e6 = eisenstein(6, b).map_err(err)?;
    let (a, c) = (e4.mul(&e4).mul(&e4), e6.mul(&e6));
    for n in 0..=b {
        let v = (&a.coeffs()[n] - &c.coeffs()[n]).to_i128().unwrap();
        ensure(v % 1728 == 0 && v / 1728 == tau[n], || format!("coefficient {n} of (E4³−E6²)/1728"))?;
    }
    ensure(tau == delta_product(b), || "Δ differs from q∏(1−q^n)^24".into())?;
    ensure(tau[2] == -24 && tau[3] == 252 && tau[6] == tau[2] * tau[3], || "τ(2), τ(3), τ(6)".into())?;
    let mut checked = 0;
    for p in primes_up_to(b as u64) {
        let p = p as usize;
        let mut q = p;
        while q * p <= b {
            let lhs = tau[q * p];
            let rhs = tau[p] * tau[q] - (p as i128).pow(11) * tau[q / p];
            ensure(lhs == rhs, || format!("τ({}) recursion", q * p))?;
            checked += 1;
            q *= p;
        }
    }
    for m in 2..=b {
        for n in 2..=b / m {
            if gcd(m, n) == 1 {
                ensure(tau[m * n] == tau[m] * tau[n], || format!("τ({m}·{n})"))?;
            }
        }
    }
    Ok(format!("τ(2) = −24, τ(3) = 252, {checked} prime-power relations and multiplicativity to 50"))
}

fn coords_on(basis: &[Vec<BigInt>], f: &[BigInt], n: usize) -> Option<Vec<BigRational>> {
    let q = |x: &BigInt| BigRational::from_integer(x.clone());
    let cols: Vec<Vec<BigRational>> = basis.iter().map(|g| g[1..=n].iter().map(q).collect()).collect();
    let rhs: Vec<BigRational> = f[1..=n].iter().map(q).collect();
    linalg::solve(&Rationals, &Matrix::from_cols(n, &cols), &rhs)
}

fn weight_24() -> Outcome {
    let expected = ZPoly::from_i64s(&[-20468736, -1080, 1]);
    let miller = int_charpoly(&hecke_matrix(24, 2, 10).map_err(err)?);
    ensure(miller == expected, || format!("Miller basis gives {:?}", miller.coeffs()))?;

    // Δ·E_4³ and Δ·E_6²; T_2 solved on two coefficients, confirmed on the rest.
    let b = 20;
    let (e4, e6, d) = (eisenstein(4, b).map_err(err)?, eisenstein(6, b).map_err(err)?, delta(b));
    let products = [d.mul(&e4).mul(&e4).mul(&e4), d.mul(&e6).mul(&e6)];
    let coeffs: Vec<Vec<BigInt>> = products.iter().map(|g| g.coeffs().to_vec()).collect();
    let mut cols = Vec::new();
    for g in &products {
        let tg = hecke_operator(g, 2);
        let c = coords_on(&coeffs, tg.coeffs(), 2).ok_or("T_2 image not in span")?;
        for n in 3..=tg.precision() {
            let v = coeffs.iter().zip(&c).fold(BigRational::zero(), |acc, (h, x)| acc + x * BigRational::from_integer(h[n].clone()));
            ensure(v == BigRational::from_integer(tg.coeffs()[n].clone()), || format!("T_2 image differs at q^{n}"))?;
        }
        cols.push(c);
    }
    let cp: Vec<BigInt> = linalg::charpoly(&Rationals, &Matrix::from_cols(2, &cols)).iter().map(|c| c.to_integer()).collect();
    ensure(ZPoly::new(cp) == expected, || "second basis disagrees".into())?;

    let fd = FormData::new("24", eigenforms(24).map_err(err)?.remove(0)).map_err(err)?;
    let k = fd.field();
    ensure(k.minpoly() == &expected, || "coefficient field is not cut out by the T_2 polynomial".into())?;
    // (θ − 540)/12 squares to 144169.
    let s = k.mul(&k.sub(&k.gen(), &k.from_int(540)), &k.from_rational(BigRational::new(1.into(), 12.into())));
    ensure(k.mul(&s, &s) == k.from_int(144169), || "field is not Q(√144169)".into())?;
    ensure(fd.maximal_order().disc() == BigInt::from(144169), || format!("disc(O) = {}", fd.maximal_order().disc()))?;

    let above = split_prime(fd.maximal_order(), 144169).map_err(err)?;
    ensure(above.len() == 1 && above[0].ramification_index() == 2, || "144169 is not ramified".into())?;
    let w = find_witness(&fd, 144169, 2).map_err(err)?;
    ensure(w.branch == Branch::Ramified && !w.sigma.is_identity() && w.prime.ramification_index() == 2, || "witness above 144169".into())?;

    // Among p ≤ 1000 and 144169 the inertia-type witness lives only at
    // 144169; the remaining witness primes are those of [O:R] = 24.
    let candidates: BTreeSet<u64> = primes_up_to(1000).into_iter().chain([144169]).collect();
    let mut inertia = Vec::new();
    let mut any = Vec::new();
    for &p in &candidates {
        for q in split_prime(fd.maximal_order(), p).map_err(err)? {
            if !j_group(&q, fd.automorphisms()).map_err(err)?.is_trivial() {
                inertia.push(p);
                break;
            }
        }
        if search_witness(&fd, p, 2).map_err(err)?.is_some() {
            any.push(p);
        }
    }
    ensure(inertia == [144169], || format!("inertia witnesses at {inertia:?}"))?;
    ensure(fd.index() == &BigInt::from(24) && any == [2, 3, 144169], || format!("witness primes {any:?}"))?;
    Ok("T_2 char poly agrees on two bases; K = Q(√144169); ramified witness at 𝔭 | 144169 (index primes 2, 3 also witness)".into())
}

fn level_one_forms() -> Result<Vec<(i64, FormData)>, String> {
    let mut out = Vec::new();
    for k in weights() {
        for (i, f) in eigenforms(k).map_err(err)?.into_iter().enumerate() {
            out.push((k, FormData::new(format!("{k}.{i}"), f).map_err(err)?));
        }
    }
    Ok(out)
}

fn galois_iff() -> Outcome {
    let mut seen = Vec::new();
    for (k, fd) in level_one_forms()? {
        if !fd.is_galois() {
            continue;
        }
        let r = verify_galois_iff(&fd, 1000, sturm_bound_level(k, 1).max(1)).map_err(err)?;
        ensure(r.consistent(), || format!("k = {k}: S1 = {:?}, S2 = {:?}", r.s1, r.s2))?;
        seen.push(k);
    }
    Ok(format!("S1 = S2 for Galois orbits at k = {seen:?}"))
}

fn theorem_coverage() -> Outcome {
    let mut witnesses = 0;
    let mut orbits = 0;
    for (k, fd) in level_one_forms()? {
        orbits += 1;
        let bound = fd.form().precision();
        let mut primes: BTreeSet<u64> = fd.closure_ramified().iter().copied().collect();
        match fd.closure_index() {
            Some(i) => {
                for p in prime_divisors(i).map_err(err)? {
                    primes.insert(p.to_u64().ok_or("index prime beyond 64 bits")?);
                }
            }
            // R has smaller rank than Õ, so every prime divides [Õ:R]:
            // scan to 1000 and add every large prime in sight.
            None => {
                primes.extend(primes_up_to(1000));
                primes.extend(fd.s1());
            }
        }
        for p in primes {
            match find_witness(&fd, p, bound) {
                Ok(w) => {
                    ensure(!w.sigma.is_identity() && w.log.iter().all(|e| e.in_ideal), || format!("k = {k}, p = {p}"))?;
                    witnesses += 1;
                }
                Err(e @ Error::WitnessVerificationFailed(_)) => return Err(format!("k = {k}, p = {p}: {e}")),
                Err(e) => return Err(format!("k = {k}, p = {p}: {e}")),
            }
        }
    }
    Ok(format!("{witnesses} witnesses over {orbits} orbits, none failed verification"))
}

fn disc_identity() -> Outcome {
    let mut shown = Vec::new();
    for k in weights() {
        let lev = LevelOne::new(k).map_err(err)?;
        let t = HeckeLattice::from_level_one(&lev).map_err(err)?;
        let d = disc_report(&t);
        ensure(d.holds && d.disc_t == d.rhs(), || format!("k = {k}: {} vs {}", d.disc_t, d.rhs()))?;
        if k == 24 || k == 36 {
            shown.push(format!("k={k}: C={} [O:R]={:?}", d.congruence_module_order, d.orbit_indices.iter().map(|i| i.to_string()).collect::<Vec<_>>()));
        }
    }
    Ok(format!("disc(T) = C²·Π[O_i:R_i]²·disc(O_i) for k = 12..40 ({})", shown.join("; ")))
}

const SUITE_PRIMES: [u64; 5] = [2, 3, 5, 7, 13];

fn random_product(seed: u64) -> Result<(FpAlgebra, Vec<usize>), String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let p = SUITE_PRIMES[rng.gen_range(0..SUITE_PRIMES.len())];
    let target = rng.gen_range(1..=12);
    let mut degrees = Vec::new();
    while degrees.iter().sum::<usize>() < target {
        let left = target - degrees.iter().sum::<usize>();
        degrees.push(rng.gen_range(1..=left.min(4)));
    }
    let a = FpAlgebra::product_of_fields(p, &degrees).map_err(err)?;
    let n = a.dim();
    let pf = PrimeField::new(p).map_err(err)?;
    let basis = loop {
        let m = Matrix::from_fn(n, n, |_, _| rng.gen_range(0..p));
        if linalg::rank(&pf, &m) == n {
            break m;
        }
    };
    Ok((a.change_basis(&basis).map_err(err)?, degrees))
}

fn random_elements(a: &FpAlgebra, count: usize, rng: &mut ChaCha8Rng) -> Vec<FpVec> {
    (0..count).map(|_| (0..a.dim()).map(|_| rng.gen_range(0..a.p())).collect()).collect()
}

fn algebra_suite() -> Outcome {
    let mut subalgebras = 0;
    for seed in 0..100u64 {
        let (a, degrees) = random_product(seed)?;
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0xabcdef);
        let homs = algebra_homs(&a).map_err(err)?;
        let distinct: BTreeSet<_> = homs.iter().map(|h| h.images.clone()).collect();
        ensure(homs.len() == a.dim() && distinct.len() == homs.len(), || format!("seed {seed}: |S(A)| = {}", homs.len()))?;
        for h in &homs {
            for x in random_elements(&a, 3, &mut rng) {
                for y in random_elements(&a, 2, &mut rng) {
                    ensure(h.apply(&a.mul(&x, &y)) == h.target.mul(&h.apply(&x), &h.apply(&y)), || format!("seed {seed}: not multiplicative"))?;
                }
            }
        }
        for gens in 0..3 {
            let b = a.subalgebra_image(&random_elements(&a, gens, &mut rng)).map_err(err)?;
            ensure(b.algebra.is_semisimple(), || format!("seed {seed}: subalgebra not semisimple"))?;
            match restriction_collision(&a, &b).map_err(err)? {
                Some((h1, h2)) => {
                    ensure(b.dim() < a.dim() && h1 != h2, || format!("seed {seed}: bad collision"))?;
                    ensure(b.inclusion.iter().all(|v| h1.apply(v) == h2.apply(v)), || format!("seed {seed}: collision disagrees on B"))?;
                }
                None => ensure(b.dim() == a.dim(), || format!("seed {seed}: proper subalgebra without collision"))?,
            }
            subalgebras += 1;
        }
        let (f, r) = (degrees[0], degrees.len().min(3));
        let equal = FpAlgebra::product_of_fields(a.p(), &vec![f; r]).map_err(err)?;
        let list = homs_from_decomposition(&decompose(&equal).map_err(err)?).map_err(err)?;
        let distinct: BTreeSet<_> = list.iter().map(|h| h.images.clone()).collect();
        ensure(list.len() == r * f && distinct.len() == r * f, || format!("seed {seed}: embedding list has {}", distinct.len()))?;
    }
    Ok(format!("100 algebras, {subalgebras} subalgebras"))
}

/// Monogenic fields of degree ≤ 5, so Kummer-Dedekind applies at every prime.
const SPLITTING_FIELDS: [&[i64]; 10] = [
    &[1, 0, 1],
    &[-1, -1, 1],
    &[-2, 0, 0, 1],
    &[1, 1, 1, 1, 1],
    &[-1, -2, 1, 1],
    &[-7, 0, 0, 1],
    &[-1, -1, 0, 0, 0, 1],
    &[-1, -1, 0, 1],
    &[-2, 0, 0, 0, 1],
    &[-2, 0, 0, 0, 0, 1],
];

fn splitting_oracles() -> Outcome {
    let mut pairs = 0;
    for c in SPLITTING_FIELDS {
        let k = NumberField::new(ZPoly::from_i64s(c)).map_err(err)?;
        let o = maximal_order(&k).map_err(err)?;
        ensure(o.equation_order_index() == BigInt::from(1), || format!("{c:?} is not monogenic"))?;
        for p in primes_up_to(99) {
            let ef = |v: &[PrimeIdeal]| {
                let mut x: Vec<(usize, usize)> = v.iter().map(|q| (q.ramification_index(), q.residue_degree())).collect();
                x.sort();
                x
            };
            let local = split_prime_local(&o, p).map_err(err)?;
            let kd = split_prime_kummer_dedekind(&o, p).map_err(err)?;
            ensure(ef(&local) == ef(&kd), || format!("{c:?} at {p}: {:?} vs {:?}", ef(&local), ef(&kd)))?;
            ensure(ef(&local).iter().map(|(e, f)| e * f).sum::<usize>() == k.degree(), || format!("{c:?} at {p}: Σef"))?;
            for (x, y) in local.iter().zip(&kd) {
                ensure(x.hnf() == y.hnf() && x.residue_images() == y.residue_images(), || format!("{c:?} at {p}: ideals differ"))?;
            }
            pairs += 1;
        }
    }
    Ok(format!("{pairs} (field, p) pairs agree"))
}

fn synthetic_fixture() -> Outcome {
    let file = EigenformFile::parse(SYNTHETIC).map_err(err)?;
    let doc = analyze_eigenform_file(&file, "synthetic", Provenance::File { name: "synthetic-sqrt5.eigenform".into() }, &RunOptions::default()).map_err(err)?;
    let f = &doc.forms[0];
    ensure(f.index == "2", || format!("[O:R] = {}", f.index))?;
    let v = f.verdicts.iter().find(|v| v.p == 2).ok_or("no verdict at 2")?;
    let w = &doc.witnesses[v.witness.ok_or("no witness at 2")?];
    ensure(w.branch == BranchReport::Index && w.ramification_index == 1, || format!("{:?} branch at 2", w.branch))?;
    ensure(w.log.iter().all(|e| e.in_ideal), || "congruence fails".into())?;
    Ok(format!("[O:R] = 2, index-branch witness at 2O (f = {})", w.residue_degree))
}

fn offline_determinism() -> Outcome {
    let run = || -> Result<Vec<String>, String> {
        let mut docs: Vec<String> = weights().map(|k| analyze_weight(k, &RunOptions::default()).map(|d| d.to_json()).map_err(err)).collect::<Result<_, _>>()?;
        let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures/remote");
        let file = fetch("fx-23-2-a", &Source::Fixtures(dir)).map_err(err)?;
        let doc = analyze_eigenform_file(&file, "fx-23-2-a", Provenance::Fetched { id: "fx-23-2-a".into() }, &RunOptions::default()).map_err(err)?;
        docs.push(doc.to_json());
        Ok(docs)
    };
    let (a, b) = (run()?, run()?);
    ensure(a == b, || "reports differ between runs".into())?;
    ensure(a.last().map(String::as_str) == Some(include_str!("golden/fx-23-2-a.report.json")), || "fixture report differs from the recorded one".into())?;
    let bytes: usize = a.iter().map(String::len).sum();
    Ok(format!("{} reports, {bytes} bytes, identical across two runs; fetch served from fixtures", a.len()))
}

struct Criterion {
    name: &'static str,
    limit: Option<Duration>,
    run: fn() -> Outcome,
}

const CRITERIA: &[Criterion] = &[
    Criterion { name: "dimension agreement", limit: Some(Duration::from_secs(1)), run: dimensions },
    Criterion { name: "Δ sanity", limit: None, run: delta_sanity },
    Criterion { name: "weight-24 reproduction", limit: Some(Duration::from_secs(5)), run: weight_24 },
    Criterion { name: "Galois iff", limit: Some(Duration::from_secs(120)), run: galois_iff },
    Criterion { name: "theorem coverage", limit: Some(Duration::from_secs(300)), run: theorem_coverage },
    Criterion { name: "discriminant identity", limit: None, run: disc_identity },
    Criterion { name: "finite-algebra suite", limit: None, run: algebra_suite },
    Criterion { name: "splitting oracle equivalence", limit: None, run: splitting_oracles },
    Criterion { name: "synthetic index fixture", limit: None, run: synthetic_fixture },
    Criterion { name: "offline determinism", limit: None, run: offline_determinism },
];

fn main() {
    let mut failed = 0;
    for (i, c) in CRITERIA.iter().enumerate() {
        let start = Instant::now();
        let outcome = (c.run)();
        let elapsed = start.elapsed();
        let limit = c.limit.map_or(String::new(), |l| format!(", limit {:.0?}", l));
        let outcome = match (outcome, c.limit) {
            (Ok(_), Some(l)) if elapsed > l => Err(format!("took {elapsed:.2?}")),
            (o, _) => o,
        };
        match outcome {
            Ok(detail) => println!("PASS [{:>2}] {}: {detail} ({elapsed:.2?}{limit})", i + 1, c.name),
            Err(why) => {
                failed += 1;
                println!("FAIL [{:>2}] {}: {why} ({elapsed:.2?}{limit})", i + 1, c.name);
            }
        }
    }
    println!("{} of {} criteria passed", CRITERIA.len() - failed, CRITERIA.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
