//! Sturm sequences and exact real-root counting for rational polynomials.

use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::field::Rationals;
use crate::poly::PolyRing;
use crate::zpoly::QPoly;

/// Sturm chain `p, p', -rem(p, p'), …` (made squarefree first).
pub fn sturm_sequence(p: &QPoly) -> Vec<QPoly> {
    let ring = PolyRing::new(Rationals);
    if p.is_zero() {
        return Vec::new();
    }
    let g = ring.gcd(p, &ring.derivative(p));
    let p = ring.div_exact(p, &g).expect("gcd divides");
    let mut seq = vec![p.clone(), ring.derivative(&p)];
    loop {
        let n = seq.len();
        if seq[n - 1].is_zero() {
            seq.pop();
            break;
        }
        let r = ring.rem(&seq[n - 2], &seq[n - 1]);
        if r.is_zero() {
            break;
        }
        seq.push(ring.neg(&r));
    }
    seq
}

fn sign(x: &BigRational) -> i8 {
    if x.is_zero() {
        0
    } else if x.is_positive() {
        1
    } else {
        -1
    }
}

fn variations(signs: impl Iterator<Item = i8>) -> usize {
    let mut last = 0;
    let mut v = 0;
    for s in signs.filter(|&s| s != 0) {
        if last != 0 && s != last {
            v += 1;
        }
        last = s;
    }
    v
}

fn sign_at(seq: &[QPoly], x: &BigRational) -> usize {
    let ring = PolyRing::new(Rationals);
    variations(seq.iter().map(|q| sign(&ring.eval(q, x))))
}

fn sign_at_inf(seq: &[QPoly], positive: bool) -> usize {
    variations(seq.iter().map(|q| {
        let s = sign(q.lc().expect("nonzero in chain"));
        if !positive && q.deg() % 2 == 1 {
            -s
        } else {
            s
        }
    }))
}

/// Number of distinct real roots in the half-open interval `(a, b]`.
pub fn count_roots_in(p: &QPoly, a: &BigRational, b: &BigRational) -> usize {
    let seq = sturm_sequence(p);
    if seq.is_empty() {
        return 0;
    }
    sign_at(&seq, a).saturating_sub(sign_at(&seq, b))
}

/// Number of distinct real roots strictly greater than `a`.
pub fn count_roots_above(p: &QPoly, a: &BigRational) -> usize {
    let seq = sturm_sequence(p);
    if seq.is_empty() {
        return 0;
    }
    sign_at(&seq, a).saturating_sub(sign_at_inf(&seq, true))
}

/// Number of distinct real roots.
pub fn count_real_roots(p: &QPoly) -> usize {
    let seq = sturm_sequence(p);
    if seq.is_empty() {
        return 0;
    }
    sign_at_inf(&seq, false).saturating_sub(sign_at_inf(&seq, true))
}

/// True when every root of `p` is real.
pub fn all_roots_real(p: &QPoly) -> bool {
    let ring = PolyRing::new(Rationals);
    let g = ring.gcd(p, &ring.derivative(p));
    let sq = ring.div_exact(p, &g).expect("gcd divides");
    count_real_roots(p) == sq.deg()
}
