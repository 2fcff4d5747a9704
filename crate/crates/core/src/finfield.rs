//! Finite fields `F_{p^f} = F_p[z]/(C_f)` with a canonical modulus.

use std::cmp::Ordering;

use eigencong_kernels::arith::{add_mod, mul_mod, sub_mod};
use eigencong_kernels::factor::{is_irreducible, roots};
use eigencong_kernels::zpoly::FpPoly;
use eigencong_kernels::{Field, FiniteFieldOps, Poly, PolyRing, PrimeField, DEFAULT_SEED};
use rand::Rng;

use crate::error::Result;

/// Smallest monic irreducible polynomial of degree `f` over `F_p` in a
/// fixed enumeration: by largest coefficient first, then by the base-`p`
/// value `Σ c_i p^i` of the lower coefficients.
pub fn canonical_irreducible(p: u64, f: usize) -> FpPoly {
    let field = PrimeField::new(p).expect("prime");
    let ring = PolyRing::new(field);
    if f == 1 {
        return ring.from_coeffs(vec![0, 1]);
    }
    for b in 1..=p {
        // Every vector with entries < b and at least one entry = b - 1,
        // ordered from the top coefficient down.
        let count = (b as u128).pow(f as u32);
        for mut n in 0..count {
            let mut c = vec![0u64; f + 1];
            let mut top = false;
            for ci in c.iter_mut().take(f) {
                *ci = (n % b as u128) as u64;
                top |= *ci == b - 1;
                n /= b as u128;
            }
            if !top {
                continue;
            }
            c[f] = 1;
            let g = ring.from_coeffs(c);
            if is_irreducible(&ring, &g) {
                return g;
            }
        }
    }
    unreachable!("irreducible polynomials of every degree exist")
}

/// `F_{p^f}`; elements are coordinate vectors of length `f` on `1, z, …`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteField {
    base: PrimeField,
    modulus: FpPoly,
}

pub type FfElem = Vec<u64>;

impl FiniteField {
    pub fn new(p: u64, f: usize) -> Result<Self> {
        let base = PrimeField::new(p)?;
        Ok(Self { base, modulus: canonical_irreducible(p, f) })
    }

    pub fn p(&self) -> u64 {
        self.base.p()
    }

    pub fn degree(&self) -> usize {
        self.modulus.deg()
    }

    pub fn modulus(&self) -> &FpPoly {
        &self.modulus
    }

    pub fn prime_field(&self) -> PrimeField {
        self.base
    }

    fn ring(&self) -> PolyRing<PrimeField> {
        PolyRing::new(self.base)
    }

    pub fn to_poly(&self, a: &FfElem) -> FpPoly {
        self.ring().from_coeffs(a.clone())
    }

    pub fn from_poly(&self, a: &FpPoly) -> FfElem {
        let r = self.ring().rem(a, &self.modulus);
        let mut v = r.into_coeffs();
        v.resize(self.degree(), 0);
        v
    }

    pub fn from_base(&self, c: u64) -> FfElem {
        let mut v = vec![0; self.degree()];
        v[0] = c % self.p();
        v
    }

    /// The class of `z`.
    pub fn gen(&self) -> FfElem {
        self.from_poly(&self.ring().x())
    }

    pub fn frobenius(&self, a: &FfElem) -> FfElem {
        self.pow(a, self.p())
    }

    pub fn frobenius_power(&self, a: &FfElem, n: usize) -> FfElem {
        let mut r = a.clone();
        for _ in 0..n % self.degree().max(1) {
            r = self.frobenius(&r);
        }
        r
    }

    /// Roots in this field of a polynomial over it, sorted.
    pub fn roots_of(&self, f: &Poly<FfElem>) -> Result<Vec<FfElem>> {
        Ok(roots(&PolyRing::new(self.clone()), f, DEFAULT_SEED)?)
    }

    /// Roots in this field of a polynomial over the prime field.
    pub fn roots_of_base(&self, f: &FpPoly) -> Result<Vec<FfElem>> {
        let lifted = PolyRing::new(self.clone()).from_coeffs(f.coeffs().iter().map(|&c| self.from_base(c)).collect());
        self.roots_of(&lifted)
    }

    /// Element from its coordinates in a subfield presented by `sub`, using
    /// `root` as the image of the subfield generator.
    pub fn embed(&self, coords: &[u64], root: &FfElem) -> FfElem {
        let mut acc = self.zero();
        for &c in coords.iter().rev() {
            acc = self.add(&self.mul(&acc, root), &self.from_base(c));
        }
        acc
    }

    /// Coordinates lie in the prime field.
    pub fn as_base(&self, a: &FfElem) -> Option<u64> {
        a.iter().skip(1).all(|&c| c == 0).then(|| a[0])
    }
}

impl Field for FiniteField {
    type Elem = FfElem;

    fn zero(&self) -> FfElem {
        vec![0; self.degree()]
    }
    fn one(&self) -> FfElem {
        self.from_base(1)
    }
    fn is_zero(&self, a: &FfElem) -> bool {
        a.iter().all(|&c| c == 0)
    }
    fn add(&self, a: &FfElem, b: &FfElem) -> FfElem {
        a.iter().zip(b).map(|(&x, &y)| add_mod(x, y, self.p())).collect()
    }
    fn sub(&self, a: &FfElem, b: &FfElem) -> FfElem {
        a.iter().zip(b).map(|(&x, &y)| sub_mod(x, y, self.p())).collect()
    }
    fn neg(&self, a: &FfElem) -> FfElem {
        a.iter().map(|&x| sub_mod(0, x, self.p())).collect()
    }
    fn mul(&self, a: &FfElem, b: &FfElem) -> FfElem {
        let ring = self.ring();
        let f = self.degree();
        if f == 1 {
            return vec![mul_mod(a[0], b[0], self.p())];
        }
        self.from_poly(&ring.mul(&ring.from_coeffs(a.clone()), &ring.from_coeffs(b.clone())))
    }
    fn inv(&self, a: &FfElem) -> FfElem {
        assert!(!self.is_zero(a), "inverse of zero");
        let ring = self.ring();
        let inv = ring.inv_mod(&ring.from_coeffs(a.clone()), &self.modulus).expect("field element invertible");
        self.from_poly(&inv)
    }
    fn from_i64(&self, n: i64) -> FfElem {
        self.from_base(n.rem_euclid(self.p() as i64) as u64)
    }
}

impl FiniteFieldOps for FiniteField {
    fn characteristic(&self) -> u64 {
        self.p()
    }
    fn extension_degree(&self) -> usize {
        self.degree()
    }
    fn random_elem<R: Rng>(&self, rng: &mut R) -> FfElem {
        (0..self.degree()).map(|_| rng.gen_range(0..self.p())).collect()
    }
    fn cmp_elems(&self, a: &FfElem, b: &FfElem) -> Ordering {
        a.iter().rev().cmp(b.iter().rev())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_moduli() {
        assert_eq!(canonical_irreducible(2, 2).coeffs(), &[1, 1, 1]);
        assert_eq!(canonical_irreducible(3, 2).coeffs(), &[1, 0, 1]);
        assert_eq!(canonical_irreducible(5, 1).coeffs(), &[0, 1]);
        // x^3 + c is never irreducible when p ≡ 2 (mod 3).
        let big = 269461929553u64;
        let c = canonical_irreducible(big, 3);
        assert_eq!(c.deg(), 3);
    }

    #[test]
    fn frobenius_has_order_f() {
        let f = FiniteField::new(3, 4).unwrap();
        let z = f.gen();
        assert_ne!(f.frobenius_power(&z, 2), z);
        let mut w = z.clone();
        for _ in 0..4 {
            w = f.frobenius(&w);
        }
        assert_eq!(w, z);
        let inv = f.inv(&z);
        assert_eq!(f.mul(&inv, &z), f.one());
    }
}
