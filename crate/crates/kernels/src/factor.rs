//! Polynomial factorization over finite fields and over `Q`.
//!
//! Finite fields: squarefree decomposition, distinct-degree factorization,
//! and Cantor–Zassenhaus equal-degree splitting driven by a seeded ChaCha
//! generator. The routines are generic over [`FiniteFieldOps`] so that they
//! also serve extension fields built downstream.
//!
//! Integers: Zassenhaus' method: factor modulo a good prime, lift the
//! factorization quadratically (multifactor Hensel tree), recombine lifted
//! factors by subset trial division.

use std::cmp::Ordering;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::arith::{is_prime_u64, prime_factors_u64};
use crate::field::{FiniteFieldOps, PrimeField, Rationals};
use crate::poly::{Poly, PolyRing};
use crate::zpoly::{FpPoly, ZPoly};
use crate::{KernelError, Result, DEFAULT_SEED};

const MAX_SPLIT_ATTEMPTS: usize = 10_000;

fn cmp_polys<F: FiniteFieldOps>(field: &F, a: &Poly<F::Elem>, b: &Poly<F::Elem>) -> Ordering {
    a.len().cmp(&b.len()).then_with(|| {
        for (x, y) in a.coeffs().iter().zip(b.coeffs()) {
            match field.cmp_elems(x, y) {
                Ordering::Equal => continue,
                o => return o,
            }
        }
        Ordering::Equal
    })
}

fn frobenius_inverse<F: FiniteFieldOps>(field: &F, a: &F::Elem) -> F::Elem {
    // a^(p^(f-1)) inverts x -> x^p on F_{p^f}.
    let p = field.characteristic();
    let mut r = a.clone();
    for _ in 0..field.extension_degree().saturating_sub(1) {
        r = field.pow(&r, p);
    }
    r
}

fn pth_root<F: FiniteFieldOps>(ring: &PolyRing<F>, f: &Poly<F::Elem>) -> Poly<F::Elem> {
    let field = ring.field();
    let p = field.characteristic() as usize;
    let coeffs = f
        .coeffs()
        .iter()
        .step_by(p)
        .map(|c| frobenius_inverse(field, c))
        .collect();
    ring.from_coeffs(coeffs)
}

/// Squarefree decomposition of a monic polynomial: pairwise coprime
/// squarefree parts with multiplicities.
pub fn squarefree_decomposition<F: FiniteFieldOps>(
    ring: &PolyRing<F>,
    f: &Poly<F::Elem>,
) -> Vec<(Poly<F::Elem>, usize)> {
    let p = ring.field().characteristic() as usize;
    let mut out = Vec::new();
    if f.deg() == 0 {
        return out;
    }
    let d = ring.derivative(f);
    if d.is_zero() {
        for (g, m) in squarefree_decomposition(ring, &pth_root(ring, f)) {
            out.push((g, m * p));
        }
        return out;
    }
    let mut c = ring.gcd(f, &d);
    let mut w = ring.div_exact(f, &c).expect("gcd divides");
    let mut i = 1;
    while w.deg() > 0 {
        let y = ring.gcd(&w, &c);
        let z = ring.div_exact(&w, &y).expect("gcd divides");
        if z.deg() > 0 {
            out.push((z, i));
        }
        i += 1;
        c = ring.div_exact(&c, &y).expect("gcd divides");
        w = y;
    }
    if c.deg() > 0 {
        for (g, m) in squarefree_decomposition(ring, &pth_root(ring, &c)) {
            out.push((g, m * p));
        }
    }
    out
}

fn frobenius_power<F: FiniteFieldOps>(
    ring: &PolyRing<F>,
    a: &Poly<F::Elem>,
    modulus: &Poly<F::Elem>,
) -> Poly<F::Elem> {
    // a^q mod modulus, q = |F|.
    let p = ring.field().characteristic();
    let mut r = ring.rem(a, modulus);
    for _ in 0..ring.field().extension_degree() {
        r = ring.powmod(&r, p, modulus);
    }
    r
}

/// Distinct-degree factorization of a monic squarefree polynomial.
pub fn distinct_degree<F: FiniteFieldOps>(
    ring: &PolyRing<F>,
    f: &Poly<F::Elem>,
) -> Vec<(usize, Poly<F::Elem>)> {
    let mut out = Vec::new();
    let mut rest = f.clone();
    let x = ring.x();
    let mut h = ring.rem(&x, &rest);
    let mut d = 0;
    while rest.deg() > 0 {
        d += 1;
        if 2 * d > rest.deg() {
            out.push((rest.deg(), rest.clone()));
            break;
        }
        h = frobenius_power(ring, &h, &rest);
        let g = ring.gcd(&ring.sub(&h, &x), &rest);
        if g.deg() > 0 {
            rest = ring.div_exact(&rest, &g).expect("gcd divides");
            h = ring.rem(&h, &rest);
            out.push((d, g));
        }
    }
    out
}

fn random_poly<F: FiniteFieldOps, R: Rng>(ring: &PolyRing<F>, below: usize, rng: &mut R) -> Poly<F::Elem> {
    let coeffs = (0..below).map(|_| ring.field().random_elem(rng)).collect();
    ring.from_coeffs(coeffs)
}

/// Splits a monic squarefree product of irreducibles of degree `d`.
pub fn equal_degree<F: FiniteFieldOps, R: Rng>(
    ring: &PolyRing<F>,
    f: &Poly<F::Elem>,
    d: usize,
    rng: &mut R,
) -> Result<Vec<Poly<F::Elem>>> {
    let n = f.deg();
    if n == d {
        return Ok(vec![f.clone()]);
    }
    let field = ring.field();
    let odd = field.characteristic() != 2;
    let exponent = (field.order().pow(d as u32) - BigUint::one()) >> 1;
    for _ in 0..MAX_SPLIT_ATTEMPTS {
        let a = random_poly(ring, n, rng);
        if a.deg() == 0 {
            continue;
        }
        let b = if odd {
            let t = ring.powmod_big(&a, &exponent, f);
            ring.sub(&t, &ring.one())
        } else {
            // Absolute trace to F_2.
            let mut acc = ring.zero();
            let mut term = ring.rem(&a, f);
            for _ in 0..d * field.extension_degree() {
                acc = ring.add(&acc, &term);
                term = ring.mulmod(&term, &term, f);
            }
            acc
        };
        let g = ring.gcd(&b, f);
        if g.deg() > 0 && g.deg() < n {
            let h = ring.div_exact(f, &g).expect("gcd divides");
            let mut out = equal_degree(ring, &g, d, rng)?;
            out.extend(equal_degree(ring, &h, d, rng)?);
            return Ok(out);
        }
    }
    Err(KernelError::SplittingFailed(MAX_SPLIT_ATTEMPTS))
}

/// Complete factorization over a finite field: the leading coefficient and
/// the monic irreducible factors with multiplicities, sorted by degree then
/// lexicographically on coefficients (constant term first).
pub fn factor_finite<F: FiniteFieldOps>(
    ring: &PolyRing<F>,
    f: &Poly<F::Elem>,
    seed: u64,
) -> Result<(F::Elem, Vec<(Poly<F::Elem>, usize)>)> {
    let Some(lc) = f.lc().cloned() else {
        return Err(KernelError::ZeroPolynomial);
    };
    let monic = ring.monic(f);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    for (part, mult) in squarefree_decomposition(ring, &monic) {
        for (d, prod) in distinct_degree(ring, &part) {
            for g in equal_degree(ring, &prod, d, &mut rng)? {
                out.push((g, mult));
            }
        }
    }
    let field = ring.field().clone();
    out.sort_by(|a, b| cmp_polys(&field, &a.0, &b.0));
    Ok((lc, out))
}

/// Distinct roots in the field, sorted by the field's element order.
pub fn roots<F: FiniteFieldOps>(ring: &PolyRing<F>, f: &Poly<F::Elem>, seed: u64) -> Result<Vec<F::Elem>> {
    if f.is_zero() {
        return Err(KernelError::ZeroPolynomial);
    }
    let field = ring.field().clone();
    let monic = ring.monic(f);
    if monic.deg() == 0 {
        return Ok(Vec::new());
    }
    let x = ring.x();
    let xq = frobenius_power(ring, &x, &monic);
    let g = ring.gcd(&ring.sub(&xq, &x), &monic);
    if g.deg() == 0 {
        return Ok(Vec::new());
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out: Vec<F::Elem> = equal_degree(ring, &g, 1, &mut rng)?
        .into_iter()
        .map(|lin| field.neg(&lin.coeffs()[0]))
        .collect();
    out.sort_by(|a, b| field.cmp_elems(a, b));
    Ok(out)
}

/// Rabin's irreducibility test.
pub fn is_irreducible<F: FiniteFieldOps>(ring: &PolyRing<F>, f: &Poly<F::Elem>) -> bool {
    let Some(n) = f.degree() else { return false };
    if n == 0 {
        return false;
    }
    if n == 1 {
        return true;
    }
    let f = ring.monic(f);
    let x = ring.x();
    let iterate = |k: usize| {
        let mut h = ring.rem(&x, &f);
        for _ in 0..k {
            h = frobenius_power(ring, &h, &f);
        }
        h
    };
    if !ring.sub(&iterate(n), &ring.rem(&x, &f)).is_zero() {
        return false;
    }
    for r in prime_factors_u64(n as u64) {
        let h = iterate(n / r as usize);
        if ring.gcd(&ring.sub(&h, &x), &f).deg() > 0 {
            return false;
        }
    }
    true
}

/// Factors a nonzero polynomial over `F_p` with the default seed.
pub fn factor_mod_p(field: &PrimeField, f: &FpPoly) -> Result<Vec<(FpPoly, usize)>> {
    factor_mod_p_seeded(field, f, DEFAULT_SEED)
}

pub fn factor_mod_p_seeded(field: &PrimeField, f: &FpPoly, seed: u64) -> Result<Vec<(FpPoly, usize)>> {
    let ring = PolyRing::new(*field);
    factor_finite(&ring, f, seed).map(|(_, v)| v)
}

// ---------------------------------------------------------------------------
// Factorization over Z.

/// `unit · Π factor^mult`, factors primitive with positive leading coefficient.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZFactorization {
    pub unit: BigInt,
    pub factors: Vec<(ZPoly, usize)>,
}

impl ZFactorization {
    pub fn expand(&self) -> ZPoly {
        self.factors
            .iter()
            .fold(ZPoly::new(vec![self.unit.clone()]), |acc, (g, m)| acc.mul(&g.pow(*m as u32)))
    }

    /// Irreducible factors listed with repetition.
    pub fn flat(&self) -> Vec<ZPoly> {
        self.factors
            .iter()
            .flat_map(|(g, m)| std::iter::repeat_n(g.clone(), *m))
            .collect()
    }
}

fn zsort(v: &mut [(ZPoly, usize)]) {
    v.sort_by(|a, b| a.0.deg().cmp(&b.0.deg()).then_with(|| a.0.coeffs().cmp(b.0.coeffs())));
}

/// Squarefree decomposition of a primitive integer polynomial (Yun).
pub fn squarefree_decomposition_z(f: &ZPoly) -> Vec<(ZPoly, usize)> {
    let ring = PolyRing::new(Rationals);
    let g = f.to_q();
    let dg = ring.derivative(&g);
    let a0 = ring.gcd(&g, &dg);
    let mut b = ring.div_exact(&g, &a0).unwrap();
    let mut c = ring.div_exact(&dg, &a0).unwrap();
    let mut d = ring.sub(&c, &ring.derivative(&b));
    let mut out = Vec::new();
    let mut i = 1;
    while b.deg() > 0 {
        let a = ring.gcd(&b, &d);
        b = ring.div_exact(&b, &a).unwrap();
        c = ring.div_exact(&d, &a).unwrap();
        d = ring.sub(&c, &ring.derivative(&b));
        if a.deg() > 0 {
            out.push((ZPoly::from_q_primitive(&a), i));
        }
        i += 1;
    }
    out
}

/// Factors a nonzero integer polynomial into irreducibles over `Q`.
///
/// The result multiplies back to `f` exactly: `unit` absorbs the content
/// and sign.
pub fn factor_over_q(f: &ZPoly) -> Result<ZFactorization> {
    if f.is_zero() {
        return Err(KernelError::ZeroPolynomial);
    }
    let mut unit = f.content();
    if f.lc().is_negative() {
        unit = -unit;
    }
    let g = f.primitive_part();
    let mut factors: Vec<(ZPoly, usize)> = Vec::new();
    if g.deg() > 0 {
        for (part, mult) in squarefree_decomposition_z(&g) {
            for h in factor_squarefree_z(&part)? {
                factors.push((h, mult));
            }
        }
    }
    zsort(&mut factors);
    Ok(ZFactorization { unit, factors })
}

/// Irreducible factors of a primitive squarefree polynomial of positive degree.
pub fn factor_squarefree_z(g: &ZPoly) -> Result<Vec<ZPoly>> {
    let n = g.deg();
    if n <= 1 {
        return Ok(vec![g.primitive_part()]);
    }
    // A factor of x: strip it so the constant term is nonzero.
    if g.coeffs()[0].is_zero() {
        let x = ZPoly::from_i64s(&[0, 1]);
        let rest = g.div_exact(&x).expect("x divides");
        let mut out = vec![x];
        out.extend(factor_squarefree_z(&rest)?);
        let mut tagged: Vec<(ZPoly, usize)> = out.into_iter().map(|p| (p, 1)).collect();
        zsort(&mut tagged);
        return Ok(tagged.into_iter().map(|(p, _)| p).collect());
    }
    let (p, modular) = choose_prime(g)?;
    if modular.len() == 1 {
        return Ok(vec![g.clone()]);
    }
    let bound = coefficient_bound(g);
    let mut k = 0u32;
    let mut pk = BigInt::from(p);
    while pk <= bound {
        k += 1;
        pk = &pk * &pk;
    }
    let lifted = hensel_lift(g, &modular, p, k);
    let mut out = recombine(g, lifted, &pk);
    let mut tagged: Vec<(ZPoly, usize)> = out.drain(..).map(|p| (p, 1)).collect();
    zsort(&mut tagged);
    Ok(tagged.into_iter().map(|(p, _)| p).collect())
}

/// Among the first few primes not dividing `lc(g)` and keeping `g`
/// squarefree, the one with the fewest modular factors.
fn choose_prime(g: &ZPoly) -> Result<(u64, Vec<FpPoly>)> {
    const CANDIDATES: usize = 5;
    let lc = g.lc();
    let mut best: Option<(u64, Vec<FpPoly>)> = None;
    let mut seen = 0;
    let mut p = 2u64;
    while seen < CANDIDATES {
        if is_prime_u64(p) && !(&lc % BigInt::from(p)).is_zero() {
            let field = PrimeField::new(p).expect("prime");
            let ring = PolyRing::new(field);
            let red = g.reduce_mod(&field);
            if ring.is_squarefree(&red) {
                seen += 1;
                let facs: Vec<FpPoly> = factor_mod_p(&field, &red)?.into_iter().map(|(f, _)| f).collect();
                if best.as_ref().is_none_or(|(_, b)| facs.len() < b.len()) {
                    let irreducible = facs.len() == 1;
                    best = Some((p, facs));
                    if irreducible {
                        break;
                    }
                }
            }
        }
        p += 1;
    }
    Ok(best.expect("some good prime exists"))
}

/// Twice the Mignotte bound times `|lc|`: every coefficient of
/// `lc(g)/lc(h) · h` for a factor `h` is below it in absolute value.
fn coefficient_bound(g: &ZPoly) -> BigInt {
    let n = g.deg();
    let norm2_sq: BigInt = g.coeffs().iter().map(|c| c * c).sum();
    let norm2 = BigInt::from(norm2_sq.magnitude().sqrt()) + 1;
    norm2 * (BigInt::one() << n) * g.lc().abs() * 2
}

// Polynomials over Z/mZ as BigInt vectors reduced into [0, m).
fn zm_trim(mut v: Vec<BigInt>) -> Vec<BigInt> {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
    v
}

fn zm_reduce(v: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    zm_trim(v.iter().map(|c| c.mod_floor(m)).collect())
}

fn zm_add(a: &[BigInt], b: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    let n = a.len().max(b.len());
    let z = BigInt::zero();
    zm_reduce(
        &(0..n)
            .map(|i| a.get(i).unwrap_or(&z) + b.get(i).unwrap_or(&z))
            .collect::<Vec<_>>(),
        m,
    )
}

fn zm_sub(a: &[BigInt], b: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    let n = a.len().max(b.len());
    let z = BigInt::zero();
    zm_reduce(
        &(0..n)
            .map(|i| a.get(i).unwrap_or(&z) - b.get(i).unwrap_or(&z))
            .collect::<Vec<_>>(),
        m,
    )
}

fn zm_mul(a: &[BigInt], b: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut v = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            v[i + j] += x * y;
        }
    }
    zm_reduce(&v, m)
}

/// Division by a monic polynomial over Z/mZ.
fn zm_divrem(a: &[BigInt], b: &[BigInt], m: &BigInt) -> (Vec<BigInt>, Vec<BigInt>) {
    let db = b.len() - 1;
    debug_assert!(b[db].is_one());
    if a.len() <= db {
        return (Vec::new(), a.to_vec());
    }
    let mut r = a.to_vec();
    let mut q = vec![BigInt::zero(); a.len() - db];
    for i in (0..q.len()).rev() {
        let c = r[i + db].mod_floor(m);
        if c.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            r[i + j] = (&r[i + j] - &c * bj).mod_floor(m);
        }
        q[i] = c;
    }
    r.truncate(db);
    (zm_trim(q), zm_reduce(&r, m))
}

fn to_zm(p: &FpPoly) -> Vec<BigInt> {
    p.coeffs().iter().map(|&c| BigInt::from(c)).collect()
}

/// One quadratic Hensel step: lifts `f ≡ g·h`, `s·g + t·h ≡ 1` from modulus
/// `m` to `m²`. `h` is monic.
#[allow(clippy::type_complexity)]
fn hensel_step(
    f: &[BigInt],
    g: &[BigInt],
    h: &[BigInt],
    s: &[BigInt],
    t: &[BigInt],
    m2: &BigInt,
) -> (Vec<BigInt>, Vec<BigInt>, Vec<BigInt>, Vec<BigInt>) {
    let e = zm_sub(&zm_reduce(f, m2), &zm_mul(g, h, m2), m2);
    let (q, r) = zm_divrem(&zm_mul(s, &e, m2), h, m2);
    let g2 = zm_add(&zm_add(g, &zm_mul(t, &e, m2), m2), &zm_mul(&q, g, m2), m2);
    let h2 = zm_add(h, &r, m2);
    let b = zm_sub(
        &zm_add(&zm_mul(s, &g2, m2), &zm_mul(t, &h2, m2), m2),
        &[BigInt::one()],
        m2,
    );
    let (c, d) = zm_divrem(&zm_mul(s, &b, m2), &h2, m2);
    let s2 = zm_sub(s, &d, m2);
    let t2 = zm_sub(&zm_sub(t, &zm_mul(t, &b, m2), m2), &zm_mul(&c, &g2, m2), m2);
    (g2, h2, s2, t2)
}

/// Lifts monic modular factors of `target` (known mod `p^(2^k)`) to monic
/// factors modulo `p^(2^k)`.
fn hensel_tree(target: &[BigInt], factors: &[FpPoly], p: u64, k: u32) -> Vec<Vec<BigInt>> {
    let field = PrimeField::new(p).expect("prime");
    let ring = PolyRing::new(field);
    let mut full = BigInt::from(p);
    for _ in 0..k {
        full = &full * &full;
    }
    if factors.len() == 1 {
        // Monic associate of the target.
        let lc = target.last().expect("nonzero target").mod_floor(&full);
        let inv = lc.modinv(&full).expect("leading coefficient is a unit");
        return vec![zm_reduce(&target.iter().map(|c| c * &inv).collect::<Vec<_>>(), &full)];
    }
    let (left, right) = factors.split_at(factors.len() / 2);
    let lc_mod_p = field.reduce(target.last().unwrap());
    let g0 = ring.scale(&ring.product(left.iter()), &lc_mod_p);
    let h0 = ring.product(right.iter());
    let (one, s0, t0) = ring.xgcd(&g0, &h0);
    debug_assert!(one.degree() == Some(0));
    let mut g = to_zm(&g0);
    let mut h = to_zm(&h0);
    let mut s = to_zm(&s0);
    let mut t = to_zm(&t0);
    let mut m = BigInt::from(p);
    for _ in 0..k {
        let m2 = &m * &m;
        (g, h, s, t) = hensel_step(target, &g, &h, &s, &t, &m2);
        m = m2;
    }
    let mut out = hensel_tree(&g, left, p, k);
    out.extend(hensel_tree(&h, right, p, k));
    out
}

fn hensel_lift(g: &ZPoly, modular: &[FpPoly], p: u64, k: u32) -> Vec<Vec<BigInt>> {
    hensel_tree(g.coeffs(), modular, p, k)
}

fn symmetric(v: &[BigInt], m: &BigInt) -> ZPoly {
    let half = m / 2;
    ZPoly::new(
        v.iter()
            .map(|c| {
                let r = c.mod_floor(m);
                if r > half {
                    r - m
                } else {
                    r
                }
            })
            .collect(),
    )
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..k).collect();
    if k > n {
        return out;
    }
    loop {
        out.push(cur.clone());
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if cur[i] != i + n - k {
                break;
            }
            if i == 0 && cur[0] == n - k {
                return out;
            }
        }
        cur[i] += 1;
        for j in i + 1..k {
            cur[j] = cur[j - 1] + 1;
        }
    }
}

fn recombine(g: &ZPoly, mut lifted: Vec<Vec<BigInt>>, pk: &BigInt) -> Vec<ZPoly> {
    let mut rest = g.clone();
    let mut out = Vec::new();
    let mut size = 1;
    'outer: while 2 * size <= lifted.len() {
        let lc = rest.lc();
        let c0 = &rest.coeffs()[0] * &lc;
        for subset in combinations(lifted.len(), size) {
            // Cheap constant-term test before the full trial division.
            let mut ct = lc.clone();
            for &i in &subset {
                ct = (ct * lifted[i].first().cloned().unwrap_or_default()).mod_floor(pk);
            }
            let ct = symmetric(&[ct], pk);
            let ctv = ct.coeffs().first().cloned().unwrap_or_default();
            if ctv.is_zero() || !(&c0 % &ctv).is_zero() {
                continue;
            }
            let mut cand = vec![lc.clone()];
            for &i in &subset {
                cand = zm_mul(&cand, &lifted[i], pk);
            }
            let h = symmetric(&cand, pk).primitive_part();
            if let Some(q) = rest.div_exact(&h) {
                out.push(h);
                rest = q;
                let mut keep = Vec::new();
                for (i, f) in lifted.into_iter().enumerate() {
                    if !subset.contains(&i) {
                        keep.push(f);
                    }
                }
                lifted = keep;
                continue 'outer;
            }
        }
        size += 1;
    }
    if rest.deg() > 0 {
        out.push(rest.primitive_part());
    }
    out
}

/// Convenience: is an integer polynomial irreducible over `Q`?
pub fn is_irreducible_over_q(f: &ZPoly) -> bool {
    match factor_over_q(f) {
        Ok(fac) => f.deg() > 0 && fac.factors.len() == 1 && fac.factors[0].1 == 1,
        Err(_) => false,
    }
}

/// Smallest prime not dividing `n`; used for good-reduction searches.
pub fn smallest_prime_not_dividing(n: &BigInt) -> u64 {
    let mut p = 2;
    loop {
        if is_prime_u64(p) && !(n % BigInt::from(p)).is_zero() {
            return p;
        }
        p += 1;
    }
}

/// Integer content helper exposed for callers building primitive parts.
pub fn integer_content(v: &[BigInt]) -> BigInt {
    v.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
}
