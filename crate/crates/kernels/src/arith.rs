//! Integer utilities: word-sized modular arithmetic, primality, and
//! factorization of arbitrary-precision integers.

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::{KernelError, Result};

/// Pollard-Brent gives up on a constant after this many rounds, and on
/// the number after `RHO_CONSTANTS` constants.
const RHO_ROUNDS: u64 = 1 << 21;
const RHO_CONSTANTS: u64 = 6;

#[inline]
pub fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

#[inline]
pub fn add_mod(a: u64, b: u64, m: u64) -> u64 {
    let s = a as u128 + b as u128;
    (s % m as u128) as u64
}

#[inline]
pub fn sub_mod(a: u64, b: u64, m: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        m - (b - a)
    }
}

pub fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Inverse of `a` modulo `m`, if it exists.
pub fn inv_mod(a: u64, m: u64) -> Option<u64> {
    let (mut r0, mut r1) = (m as i128, (a % m) as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    if r0 != 1 {
        return None;
    }
    Some(t0.rem_euclid(m as i128) as u64)
}

/// Reduces an arbitrary integer into `[0, m)`.
pub fn reduce_mod(a: &BigInt, m: u64) -> u64 {
    let r = a.mod_floor(&BigInt::from(m));
    r.to_u64().expect("residue fits in u64")
}

/// Deterministic Miller–Rabin for all 64-bit inputs.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n % p == 0 {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 325, 9375, 28178, 450775, 9780504, 1795265022] {
        let a = a % n;
        if a == 0 {
            continue;
        }
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Strong probable-prime test to the first twenty prime bases.
///
/// Deterministic below 3.3·10^24; beyond that a composite passing all
/// twenty bases is not known to exist.
pub fn is_probable_prime(n: &BigUint) -> bool {
    if let Some(small) = n.to_u64() {
        return is_prime_u64(small);
    }
    if n.is_even() {
        return false;
    }
    let one = BigUint::one();
    let n_minus_1 = n - &one;
    let s = n_minus_1.trailing_zeros().unwrap_or(0);
    let d = &n_minus_1 >> s;
    'witness: for a in primes_up_to(71) {
        let a = BigUint::from(a);
        let mut x = a.modpow(&d, n);
        if x == one || x == n_minus_1 {
            continue;
        }
        for _ in 1..s {
            x = (&x * &x) % n;
            if x == n_minus_1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// All primes `<= bound`, ascending.
pub fn primes_up_to(bound: u64) -> Vec<u64> {
    if bound < 2 {
        return Vec::new();
    }
    let n = bound as usize;
    let mut sieve = vec![true; n + 1];
    sieve[0] = false;
    sieve[1] = false;
    let mut i = 2;
    while i * i <= n {
        if sieve[i] {
            let mut j = i * i;
            while j <= n {
                sieve[j] = false;
                j += i;
            }
        }
        i += 1;
    }
    sieve
        .iter()
        .enumerate()
        .filter_map(|(i, &b)| b.then_some(i as u64))
        .collect()
}

/// Smallest prime strictly greater than `n`.
pub fn next_prime(n: u64) -> u64 {
    let mut c = n + 1;
    while !is_prime_u64(c) {
        c += 1;
    }
    c
}

fn pollard_brent(n: &BigUint, c: u64) -> Option<BigUint> {
    let c = BigUint::from(c);
    let f = |x: &BigUint| (x * x + &c) % n;
    let mut y = BigUint::from(2u32);
    let mut r = 1u64;
    let mut q = BigUint::one();
    let m = 128u64;
    let mut g = BigUint::one();
    let mut x = y.clone();
    let mut ys = y.clone();
    while g.is_one() {
        x = y.clone();
        for _ in 0..r {
            y = f(&y);
        }
        let mut k = 0;
        while k < r && g.is_one() {
            ys = y.clone();
            for _ in 0..m.min(r - k) {
                y = f(&y);
                let diff = if x > y { &x - &y } else { &y - &x };
                q = (q * diff) % n;
            }
            g = q.gcd(n);
            k += m;
        }
        r *= 2;
        if r > RHO_ROUNDS {
            return None;
        }
    }
    if &g == n {
        loop {
            ys = f(&ys);
            let diff = if x > ys { &x - &ys } else { &ys - &x };
            g = diff.gcd(n);
            if !g.is_one() {
                break;
            }
        }
    }
    (&g != n).then_some(g)
}

fn split_composite(n: BigUint, out: &mut Vec<BigUint>) -> Result<()> {
    if n.is_one() {
        return Ok(());
    }
    if is_probable_prime(&n) {
        out.push(n);
        return Ok(());
    }
    for c in 1..=RHO_CONSTANTS {
        if let Some(d) = pollard_brent(&n, c) {
            let other = &n / &d;
            split_composite(d, out)?;
            return split_composite(other, out);
        }
    }
    Err(KernelError::FactorizationFailed(n.to_string()))
}

/// Prime factorization of `|n|` as ascending `(prime, exponent)` pairs.
///
/// `0` and `±1` have empty factorizations. Fails when a composite
/// cofactor resists Pollard-Brent; the attempt is deterministic.
pub fn factor_integer(n: &BigInt) -> Result<Vec<(BigUint, u32)>> {
    let mut m = n.magnitude().clone();
    let mut found: Vec<BigUint> = Vec::new();
    if m.is_zero() {
        return Ok(Vec::new());
    }
    for p in primes_up_to(10_000) {
        let bp = BigUint::from(p);
        while (&m % &bp).is_zero() {
            m /= &bp;
            found.push(bp.clone());
        }
        if m.is_one() {
            break;
        }
    }
    split_composite(m, &mut found)?;
    found.sort();
    let mut out: Vec<(BigUint, u32)> = Vec::new();
    for p in found {
        match out.last_mut() {
            Some((q, e)) if *q == p => *e += 1,
            _ => out.push((p, 1)),
        }
    }
    Ok(out)
}

/// Distinct prime divisors of `n`, ascending.
pub fn prime_divisors(n: &BigInt) -> Result<Vec<BigUint>> {
    Ok(factor_integer(n)?.into_iter().map(|(p, _)| p).collect())
}

/// `p`-adic valuation of a nonzero integer.
pub fn valuation(n: &BigInt, p: u64) -> u32 {
    assert!(!n.is_zero(), "valuation of zero");
    let bp = BigInt::from(p);
    let mut m = n.clone();
    let mut v = 0;
    while (&m % &bp).is_zero() {
        m /= &bp;
        v += 1;
    }
    v
}

/// Floor of the square root of a nonnegative integer.
pub fn isqrt(n: &BigUint) -> BigUint {
    n.sqrt()
}

/// Exact square root when `n` is a perfect square.
pub fn exact_sqrt(n: &BigInt) -> Option<BigInt> {
    if n.sign() == Sign::Minus {
        return None;
    }
    let r = n.magnitude().sqrt();
    (&r * &r == *n.magnitude()).then(|| BigInt::from(r))
}

pub fn gcd_u64(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub fn lcm_usize(a: usize, b: usize) -> usize {
    a / gcd_u64(a as u64, b as u64) as usize * b
}

/// Divisors of `n` in ascending order.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// Distinct prime factors of a machine integer.
pub fn prime_factors_u64(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_primes() {
        assert_eq!(primes_up_to(30), vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
        assert!(is_prime_u64(144169));
        assert!(is_prime_u64(269461929553));
        assert!(!is_prime_u64(144169 * 7));
        assert_eq!(next_prime(7), 11);
    }

    #[test]
    fn factor_big() {
        // 2^6 * 3^2 * 144169, the discriminant of the weight-24 Hecke polynomial.
        let n = BigInt::from(83041344u64);
        let f = factor_integer(&n).unwrap();
        let got: Vec<(u64, u32)> = f.iter().map(|(p, e)| (p.to_u64().unwrap(), *e)).collect();
        assert_eq!(got, vec![(2, 6), (3, 2), (144169, 1)]);

        let semi = BigInt::from(1_000_003u64) * BigInt::from(998_244_353u64) * BigInt::from(1_000_000_007u64);
        let f = factor_integer(&semi).unwrap();
        assert_eq!(f.len(), 3);
        assert!(f.iter().all(|(_, e)| *e == 1));
    }

    #[test]
    fn inverse_and_isqrt() {
        assert_eq!(inv_mod(3, 7), Some(5));
        assert_eq!(inv_mod(6, 9), None);
        assert_eq!(exact_sqrt(&BigInt::from(144)), Some(BigInt::from(12)));
        assert_eq!(exact_sqrt(&BigInt::from(145)), None);
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
    }
}
