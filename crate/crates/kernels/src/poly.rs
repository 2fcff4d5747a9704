//! Dense univariate polynomials over a [`Field`].

use num_bigint::BigUint;

use crate::field::Field;

/// Coefficients low-to-high with no trailing zeros; the zero polynomial has
/// no coefficients. Construct through a [`PolyRing`] so trimming is applied.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Poly<E> {
    coeffs: Vec<E>,
}

impl<E: Clone> Poly<E> {
    pub fn coeffs(&self) -> &[E] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<E> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with the zero polynomial mapped to 0. Only for callers that
    /// have already excluded zero.
    pub fn deg(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn lc(&self) -> Option<&E> {
        self.coeffs.last()
    }

    pub fn coeff(&self, i: usize) -> Option<&E> {
        self.coeffs.get(i)
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }
}

/// Polynomial arithmetic over the field `F`.
#[derive(Debug, Clone)]
pub struct PolyRing<F: Field> {
    field: F,
}

impl<F: Field> PolyRing<F> {
    pub fn new(field: F) -> Self {
        Self { field }
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn from_coeffs(&self, mut coeffs: Vec<F::Elem>) -> Poly<F::Elem> {
        while coeffs.last().is_some_and(|c| self.field.is_zero(c)) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero(&self) -> Poly<F::Elem> {
        Poly { coeffs: Vec::new() }
    }

    pub fn one(&self) -> Poly<F::Elem> {
        self.constant(self.field.one())
    }

    pub fn constant(&self, c: F::Elem) -> Poly<F::Elem> {
        self.from_coeffs(vec![c])
    }

    /// `c·x^n`.
    pub fn monomial(&self, c: F::Elem, n: usize) -> Poly<F::Elem> {
        let mut v = vec![self.field.zero(); n + 1];
        v[n] = c;
        self.from_coeffs(v)
    }

    pub fn x(&self) -> Poly<F::Elem> {
        self.monomial(self.field.one(), 1)
    }

    pub fn add(&self, a: &Poly<F::Elem>, b: &Poly<F::Elem>) -> Poly<F::Elem> {
        let n = a.len().max(b.len());
        let z = self.field.zero();
        let v = (0..n)
            .map(|i| {
                let x = a.coeffs.get(i).unwrap_or(&z);
                let y = b.coeffs.get(i).unwrap_or(&z);
                self.field.add(x, y)
            })
            .collect();
        self.from_coeffs(v)
    }

    pub fn sub(&self, a: &Poly<F::Elem>, b: &Poly<F::Elem>) -> Poly<F::Elem> {
        let n = a.len().max(b.len());
        let z = self.field.zero();
        let v = (0..n)
            .map(|i| {
                let x = a.coeffs.get(i).unwrap_or(&z);
                let y = b.coeffs.get(i).unwrap_or(&z);
                self.field.sub(x, y)
            })
            .collect();
        self.from_coeffs(v)
    }

    pub fn neg(&self, a: &Poly<F::Elem>) -> Poly<F::Elem> {
        Poly {
            coeffs: a.coeffs.iter().map(|c| self.field.neg(c)).collect(),
        }
    }

    pub fn scale(&self, a: &Poly<F::Elem>, c: &F::Elem) -> Poly<F::Elem> {
        self.from_coeffs(a.coeffs.iter().map(|x| self.field.mul(x, c)).collect())
    }

    pub fn mul(&self, a: &Poly<F::Elem>, b: &Poly<F::Elem>) -> Poly<F::Elem> {
        if a.is_zero() || b.is_zero() {
            return self.zero();
        }
        let mut v = vec![self.field.zero(); a.len() + b.len() - 1];
        for (i, x) in a.coeffs.iter().enumerate() {
            if self.field.is_zero(x) {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                let t = self.field.mul(x, y);
                v[i + j] = self.field.add(&v[i + j], &t);
            }
        }
        self.from_coeffs(v)
    }

    pub fn pow(&self, a: &Poly<F::Elem>, mut e: u64) -> Poly<F::Elem> {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    /// Euclidean division; panics when `b` is zero.
    pub fn divrem(&self, a: &Poly<F::Elem>, b: &Poly<F::Elem>) -> (Poly<F::Elem>, Poly<F::Elem>) {
        let db = b.degree().expect("division by the zero polynomial");
        if a.len() <= db {
            return (self.zero(), a.clone());
        }
        let inv_lc = self.field.inv(b.lc().unwrap());
        let mut r = a.coeffs.clone();
        let mut q = vec![self.field.zero(); a.len() - db];
        for i in (0..q.len()).rev() {
            let c = self.field.mul(&r[i + db], &inv_lc);
            if self.field.is_zero(&c) {
                continue;
            }
            for (j, bj) in b.coeffs.iter().enumerate() {
                let t = self.field.mul(&c, bj);
                r[i + j] = self.field.sub(&r[i + j], &t);
            }
            q[i] = c;
        }
        r.truncate(db);
        (self.from_coeffs(q), self.from_coeffs(r))
    }

    pub fn rem(&self, a: &Poly<F::Elem>, b: &Poly<F::Elem>) -> Poly<F::Elem> {
        self.divrem(a, b).1
    }

    /// Exact quotient, `None` when `b` does not divide `a`.
    pub fn div_exact(&self, a: &Poly<F::Elem>, b: &Poly<F::Elem>) -> Option<Poly<F::Elem>> {
        let (q, r) = self.divrem(a, b);
        r.is_zero().then_some(q)
    }

    pub fn monic(&self, a: &Poly<F::Elem>) -> Poly<F::Elem> {
        match a.lc() {
            None => self.zero(),
            Some(lc) => {
                let inv = self.field.inv(lc);
                self.scale(a, &inv)
            }
        }
    }

    pub fn is_monic(&self, a: &Poly<F::Elem>) -> bool {
        a.lc().is_some_and(|c| self.field.is_one(c))
    }

    /// Monic gcd (zero if both inputs are zero).
    pub fn gcd(&self, a: &Poly<F::Elem>, b: &Poly<F::Elem>) -> Poly<F::Elem> {
        // Monic remainders keep coefficient growth in check over Q and K.
        let (mut r0, mut r1) = (self.monic(a), self.monic(b));
        while !r1.is_zero() {
            let r = self.rem(&r0, &r1);
            r0 = r1;
            r1 = self.monic(&r);
        }
        self.monic(&r0)
    }

    /// Extended gcd: returns monic `g` and `s, t` with `s·a + t·b = g`.
    pub fn xgcd(
        &self,
        a: &Poly<F::Elem>,
        b: &Poly<F::Elem>,
    ) -> (Poly<F::Elem>, Poly<F::Elem>, Poly<F::Elem>) {
        let (mut r0, mut r1) = (a.clone(), b.clone());
        let (mut s0, mut s1) = (self.one(), self.zero());
        let (mut t0, mut t1) = (self.zero(), self.one());
        while !r1.is_zero() {
            let (q, r) = self.divrem(&r0, &r1);
            let s = self.sub(&s0, &self.mul(&q, &s1));
            let t = self.sub(&t0, &self.mul(&q, &t1));
            (r0, r1) = (r1, r);
            (s0, s1) = (s1, s);
            (t0, t1) = (t1, t);
        }
        match r0.lc() {
            None => (r0, s0, t0),
            Some(lc) => {
                let inv = self.field.inv(lc);
                (self.scale(&r0, &inv), self.scale(&s0, &inv), self.scale(&t0, &inv))
            }
        }
    }

    /// Inverse of `a` modulo `m`, if `gcd(a, m) = 1`.
    pub fn inv_mod(&self, a: &Poly<F::Elem>, m: &Poly<F::Elem>) -> Option<Poly<F::Elem>> {
        let (g, s, _) = self.xgcd(a, m);
        (g.degree() == Some(0)).then(|| self.rem(&s, m))
    }

    pub fn derivative(&self, a: &Poly<F::Elem>) -> Poly<F::Elem> {
        if a.len() <= 1 {
            return self.zero();
        }
        let v = a.coeffs[1..]
            .iter()
            .enumerate()
            .map(|(i, c)| self.field.mul(c, &self.field.from_i64(i as i64 + 1)))
            .collect();
        self.from_coeffs(v)
    }

    pub fn eval(&self, a: &Poly<F::Elem>, x: &F::Elem) -> F::Elem {
        let mut acc = self.field.zero();
        for c in a.coeffs.iter().rev() {
            acc = self.field.add(&self.field.mul(&acc, x), c);
        }
        acc
    }

    /// `a(b(x))`.
    pub fn compose(&self, a: &Poly<F::Elem>, b: &Poly<F::Elem>) -> Poly<F::Elem> {
        let mut acc = self.zero();
        for c in a.coeffs.iter().rev() {
            acc = self.add(&self.mul(&acc, b), &self.constant(c.clone()));
        }
        acc
    }

    pub fn mulmod(&self, a: &Poly<F::Elem>, b: &Poly<F::Elem>, m: &Poly<F::Elem>) -> Poly<F::Elem> {
        self.rem(&self.mul(a, b), m)
    }

    pub fn powmod(&self, a: &Poly<F::Elem>, mut e: u64, m: &Poly<F::Elem>) -> Poly<F::Elem> {
        let mut base = self.rem(a, m);
        let mut acc = self.rem(&self.one(), m);
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mulmod(&acc, &base, m);
            }
            base = self.mulmod(&base, &base, m);
            e >>= 1;
        }
        acc
    }

    pub fn powmod_big(&self, a: &Poly<F::Elem>, e: &BigUint, m: &Poly<F::Elem>) -> Poly<F::Elem> {
        let mut acc = self.rem(&self.one(), m);
        let base = self.rem(a, m);
        for i in (0..e.bits()).rev() {
            acc = self.mulmod(&acc, &acc, m);
            if e.bit(i) {
                acc = self.mulmod(&acc, &base, m);
            }
        }
        acc
    }

    pub fn is_squarefree(&self, a: &Poly<F::Elem>) -> bool {
        let d = self.derivative(a);
        if d.is_zero() {
            return a.degree().unwrap_or(0) == 0;
        }
        self.gcd(a, &d).degree() == Some(0)
    }

    /// Product of a list of polynomials.
    pub fn product<'a, I>(&self, it: I) -> Poly<F::Elem>
    where
        I: IntoIterator<Item = &'a Poly<F::Elem>>,
        F::Elem: 'a,
    {
        it.into_iter().fold(self.one(), |acc, p| self.mul(&acc, p))
    }

    /// Maps coefficients into another field.
    pub fn map_from<G: Field>(
        &self,
        other: &Poly<G::Elem>,
        f: impl Fn(&G::Elem) -> F::Elem,
    ) -> Poly<F::Elem> {
        self.from_coeffs(other.coeffs.iter().map(f).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;

    #[test]
    fn divrem_and_gcd_mod_7() {
        let r = PolyRing::new(PrimeField::new(7).unwrap());
        // (x+1)(x+2) and (x+1)(x+3)
        let a = r.from_coeffs(vec![2, 3, 1]);
        let b = r.from_coeffs(vec![3, 4, 1]);
        let g = r.gcd(&a, &b);
        assert_eq!(g.coeffs(), &[1, 1]);
        let (q, rem) = r.divrem(&a, &g);
        assert!(rem.is_zero());
        assert_eq!(q.coeffs(), &[2, 1]);
        let (g2, s, t) = r.xgcd(&a, &b);
        assert_eq!(g2, g);
        assert_eq!(r.add(&r.mul(&s, &a), &r.mul(&t, &b)), g);
    }

    #[test]
    fn compose_and_derivative() {
        let r = PolyRing::new(PrimeField::new(5).unwrap());
        let a = r.from_coeffs(vec![1, 0, 1]); // x^2 + 1
        let b = r.from_coeffs(vec![1, 1]); // x + 1
        assert_eq!(r.compose(&a, &b).coeffs(), &[2, 2, 1]);
        assert_eq!(r.derivative(&a).coeffs(), &[0, 2]);
        assert_eq!(r.eval(&a, &2), 0);
    }
}
