//! Number fields `K = Q[x]/(m)` with exact arithmetic on the power basis.

use std::fmt;
use std::sync::Arc;

use eigencong_kernels::factor::factor_over_q;
use eigencong_kernels::linalg::{self, Matrix};
use eigencong_kernels::zpoly::QPoly;
use eigencong_kernels::arith::next_prime;
use eigencong_kernels::{Field, Poly, PolyRing, PrimeField, Rationals, ZPoly};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Degree caps for field constructions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest base field accepted by `galois_closure`.
    pub field_degree: usize,
    /// Largest Galois closure that will be built.
    pub closure_degree: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Self { field_degree: 6, closure_degree: 24 }
    }
}

struct Inner {
    minpoly: ZPoly,
    degree: usize,
    /// `θ^(d+i)` on the power basis, `0 <= i < d-1`.
    high_powers: Vec<Vec<BigRational>>,
    /// `Tr(θ^i)` for `0 <= i < d`.
    power_traces: Vec<BigRational>,
}

/// `K = Q[x]/(m)` for a monic irreducible integer polynomial `m`; `θ` is the
/// class of `x`.
#[derive(Clone)]
pub struct NumberField(Arc<Inner>);

impl PartialEq for NumberField {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.minpoly == other.0.minpoly
    }
}

impl Eq for NumberField {}

impl fmt::Debug for NumberField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NumberField({})", self.0.minpoly)
    }
}

/// Element of a number field: rational coordinates on `1, θ, …, θ^(d-1)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldElement {
    coords: Vec<BigRational>,
}

impl FieldElement {
    pub fn coords(&self) -> &[BigRational] {
        &self.coords
    }

    /// Least common denominator of the coordinates.
    pub fn denominator(&self) -> BigInt {
        use num_integer::Integer;
        self.coords.iter().fold(BigInt::one(), |l, c| l.lcm(c.denom()))
    }

    pub fn is_rational(&self) -> bool {
        self.coords.iter().skip(1).all(Zero::is_zero)
    }
}

fn q(n: impl Into<BigInt>) -> BigRational {
    BigRational::from_integer(n.into())
}

impl NumberField {
    /// Validates `m` (monic, irreducible over `Q`) and builds the field.
    pub fn new(minpoly: ZPoly) -> Result<Self> {
        if minpoly.deg() == 0 || !minpoly.is_monic() {
            return Err(Error::NotIrreducible(minpoly.to_string()));
        }
        let fac = factor_over_q(&minpoly)?;
        if fac.factors.len() != 1 || fac.factors[0].1 != 1 {
            return Err(Error::NotIrreducible(minpoly.to_string()));
        }
        Ok(Self::new_unchecked(minpoly))
    }

    /// Builds the field without the irreducibility check; the caller vouches
    /// for `m`.
    pub(crate) fn new_unchecked(minpoly: ZPoly) -> Self {
        let d = minpoly.deg();
        let m: Vec<BigRational> = minpoly.coeffs().iter().map(|c| q(c.clone())).collect();
        let mut high_powers: Vec<Vec<BigRational>> = Vec::new();
        if d >= 1 {
            // θ^d = -Σ m_i θ^i
            let mut cur: Vec<BigRational> = m[..d].iter().map(|c| -c).collect();
            for _ in 0..d.saturating_sub(1) {
                high_powers.push(cur.clone());
                // multiply by θ
                let top = cur[d - 1].clone();
                let mut next = vec![BigRational::zero(); d];
                for i in (1..d).rev() {
                    next[i] = cur[i - 1].clone();
                }
                for i in 0..d {
                    next[i] -= &top * &m[i];
                }
                cur = next;
            }
        }
        let power_traces = newton_power_sums(&m, d);
        NumberField(Arc::new(Inner { minpoly, degree: d, high_powers, power_traces }))
    }

    /// The field `Q`, presented as `Q[x]/(x)`.
    pub fn rationals() -> Self {
        Self::new_unchecked(ZPoly::from_i64s(&[0, 1]))
    }

    pub fn degree(&self) -> usize {
        self.0.degree
    }

    pub fn minpoly(&self) -> &ZPoly {
        &self.0.minpoly
    }

    pub fn gen(&self) -> FieldElement {
        if self.degree() == 1 {
            // θ is the root of a linear polynomial x + c.
            return self.from_rational(-q(self.0.minpoly.coeffs()[0].clone()));
        }
        let mut c = vec![BigRational::zero(); self.degree()];
        c[1] = BigRational::one();
        FieldElement { coords: c }
    }

    pub fn from_int(&self, n: impl Into<BigInt>) -> FieldElement {
        self.from_rational(q(n.into()))
    }

    pub fn from_rational(&self, r: BigRational) -> FieldElement {
        let mut c = vec![BigRational::zero(); self.degree()];
        c[0] = r;
        FieldElement { coords: c }
    }

    pub fn from_coords(&self, coords: Vec<BigRational>) -> Result<FieldElement> {
        if coords.len() != self.degree() {
            return Err(Error::Invalid(format!(
                "expected {} coordinates, got {}",
                self.degree(),
                coords.len()
            )));
        }
        Ok(FieldElement { coords })
    }

    pub fn from_int_coords(&self, coords: &[BigInt]) -> Result<FieldElement> {
        self.from_coords(coords.iter().map(|c| q(c.clone())).collect())
    }

    /// Reduction of a rational polynomial in `θ`.
    pub fn from_qpoly(&self, p: &QPoly) -> FieldElement {
        let d = self.degree();
        if d == 1 {
            let ring = PolyRing::new(Rationals);
            return self.from_rational(ring.eval(p, &self.gen().coords[0]));
        }
        let mut c = vec![BigRational::zero(); d];
        for (i, a) in p.coeffs().iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            if i < d {
                c[i] += a;
            } else if i - d < self.0.high_powers.len() {
                for (cj, h) in c.iter_mut().zip(&self.0.high_powers[i - d]) {
                    *cj += a * h;
                }
            } else {
                let ring = PolyRing::new(Rationals);
                let r = ring.rem(p, &self.0.minpoly.to_q());
                return self.from_qpoly(&r);
            }
        }
        FieldElement { coords: c }
    }

    pub fn to_qpoly(&self, a: &FieldElement) -> QPoly {
        PolyRing::new(Rationals).from_coeffs(a.coords.clone())
    }

    /// Matrix of multiplication by `a`; column `j` holds `a·θ^j`.
    pub fn mul_matrix(&self, a: &FieldElement) -> Matrix<BigRational> {
        let d = self.degree();
        let mut cols = Vec::with_capacity(d);
        let mut cur = a.clone();
        let theta = self.gen();
        for _ in 0..d {
            cols.push(cur.coords.clone());
            cur = self.mul(&cur, &theta);
        }
        Matrix::from_cols(d, &cols)
    }

    pub fn trace(&self, a: &FieldElement) -> BigRational {
        a.coords
            .iter()
            .zip(&self.0.power_traces)
            .fold(BigRational::zero(), |acc, (c, t)| acc + c * t)
    }

    pub fn norm(&self, a: &FieldElement) -> BigRational {
        linalg::det(&Rationals, &self.mul_matrix(a))
    }

    /// Monic minimal polynomial of `a` over `Q`.
    pub fn element_minpoly(&self, a: &FieldElement) -> QPoly {
        let ring = PolyRing::new(Rationals);
        let cp = ring.from_coeffs(linalg::charpoly(&Rationals, &self.mul_matrix(a)));
        // The characteristic polynomial is a power of the minimal one.
        let g = ring.gcd(&cp, &ring.derivative(&cp));
        ring.monic(&ring.div_exact(&cp, &g).expect("gcd divides"))
    }

    pub fn is_integral(&self, a: &FieldElement) -> bool {
        self.element_minpoly(a).coeffs().iter().all(|c| c.is_integer())
    }

    /// Evaluates a rational polynomial at `a`.
    pub fn eval_qpoly(&self, p: &QPoly, a: &FieldElement) -> FieldElement {
        let mut acc = self.zero();
        for c in p.coeffs().iter().rev() {
            acc = self.add(&self.mul(&acc, a), &self.from_rational(c.clone()));
        }
        acc
    }

    pub fn eval_zpoly(&self, p: &ZPoly, a: &FieldElement) -> FieldElement {
        self.eval_qpoly(&p.to_q(), a)
    }

    pub fn poly_ring(&self) -> PolyRing<NumberField> {
        PolyRing::new(self.clone())
    }

    /// Lifts a rational polynomial into `K[x]`.
    pub fn lift_poly(&self, p: &QPoly) -> Poly<FieldElement> {
        self.poly_ring()
            .from_coeffs(p.coeffs().iter().map(|c| self.from_rational(c.clone())).collect())
    }

    pub fn format_element(&self, a: &FieldElement) -> String {
        let parts: Vec<String> = a.coords.iter().map(|c| c.to_string()).collect();
        format!("[{}]", parts.join(", "))
    }
}

/// Power sums `Σ θ_i^k` for `k < d` by Newton's identities.
fn newton_power_sums(m: &[BigRational], d: usize) -> Vec<BigRational> {
    // m = x^d + c_{d-1} x^{d-1} + … + c_0; e_j = (-1)^j c_{d-j}.
    let mut p = vec![BigRational::zero(); d.max(1)];
    if d == 0 {
        return p;
    }
    p[0] = q(d as i64);
    for k in 1..d {
        let mut s = BigRational::zero();
        for i in 1..k {
            s += &m[d - i] * &p[k - i];
        }
        s += &m[d - k] * q(k as i64);
        p[k] = -s;
    }
    p
}

impl Field for NumberField {
    type Elem = FieldElement;

    fn zero(&self) -> FieldElement {
        FieldElement { coords: vec![BigRational::zero(); self.degree()] }
    }

    fn one(&self) -> FieldElement {
        self.from_int(1)
    }

    fn is_zero(&self, a: &FieldElement) -> bool {
        a.coords.iter().all(Zero::is_zero)
    }

    fn add(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        FieldElement { coords: a.coords.iter().zip(&b.coords).map(|(x, y)| x + y).collect() }
    }

    fn sub(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        FieldElement { coords: a.coords.iter().zip(&b.coords).map(|(x, y)| x - y).collect() }
    }

    fn neg(&self, a: &FieldElement) -> FieldElement {
        FieldElement { coords: a.coords.iter().map(|x| -x).collect() }
    }

    fn mul(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        let d = self.degree();
        if d == 1 {
            return FieldElement { coords: vec![&a.coords[0] * &b.coords[0]] };
        }
        let mut prod = vec![BigRational::zero(); 2 * d - 1];
        for (i, x) in a.coords.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coords.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                prod[i + j] += x * y;
            }
        }
        let (low, high) = prod.split_at(d);
        let mut c = low.to_vec();
        for (k, h) in high.iter().enumerate() {
            if h.is_zero() {
                continue;
            }
            for (cj, r) in c.iter_mut().zip(&self.0.high_powers[k]) {
                *cj += h * r;
            }
        }
        FieldElement { coords: c }
    }

    fn inv(&self, a: &FieldElement) -> FieldElement {
        assert!(!self.is_zero(a), "inverse of zero");
        if self.degree() == 1 {
            return FieldElement { coords: vec![a.coords[0].recip()] };
        }
        let ring = PolyRing::new(Rationals);
        let inv = ring
            .inv_mod(&self.to_qpoly(a), &self.0.minpoly.to_q())
            .expect("nonzero element of a field is invertible");
        self.from_qpoly(&inv)
    }

    fn from_i64(&self, n: i64) -> FieldElement {
        self.from_int(n)
    }
}

/// A field automorphism, determined by the image of `θ`.
#[derive(Clone, PartialEq, Eq)]
pub struct Automorphism {
    field: NumberField,
    image: FieldElement,
}

impl fmt::Debug for Automorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "θ ↦ {}", self.field.format_element(&self.image))
    }
}

impl Automorphism {
    pub fn identity(field: &NumberField) -> Self {
        Self { field: field.clone(), image: field.gen() }
    }

    /// `θ ↦ image`; `image` must be a root of the minimal polynomial.
    pub fn new(field: &NumberField, image: FieldElement) -> Result<Self> {
        let v = field.eval_zpoly(field.minpoly(), &image);
        if !field.is_zero(&v) {
            return Err(Error::Invalid("image is not a root of the minimal polynomial".into()));
        }
        Ok(Self { field: field.clone(), image })
    }

    pub fn field(&self) -> &NumberField {
        &self.field
    }

    pub fn image(&self) -> &FieldElement {
        &self.image
    }

    pub fn is_identity(&self) -> bool {
        self.image == self.field.gen()
    }

    pub fn apply(&self, a: &FieldElement) -> FieldElement {
        let k = &self.field;
        let mut acc = k.zero();
        for c in a.coords.iter().rev() {
            acc = k.add(&k.mul(&acc, &self.image), &k.from_rational(c.clone()));
        }
        acc
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Automorphism) -> Automorphism {
        Automorphism { field: self.field.clone(), image: self.apply(&other.image) }
    }

    pub fn inverse(&self) -> Automorphism {
        let mut prev = Automorphism::identity(&self.field);
        let mut cur = self.clone();
        while !cur.is_identity() {
            prev = cur.clone();
            cur = self.compose(&cur);
        }
        prev
    }

    pub fn order(&self) -> usize {
        let mut n = 1;
        let mut cur = self.clone();
        while !cur.is_identity() {
            cur = self.compose(&cur);
            n += 1;
        }
        n
    }
}

fn squarefree_char0(k: &NumberField, f: &Poly<FieldElement>) -> Vec<(Poly<FieldElement>, usize)> {
    let ring = k.poly_ring();
    let df = ring.derivative(f);
    let a0 = ring.gcd(f, &df);
    let mut b = ring.div_exact(f, &a0).expect("gcd divides");
    let mut c = ring.div_exact(&df, &a0).expect("gcd divides");
    let mut d = ring.sub(&c, &ring.derivative(&b));
    let mut out = Vec::new();
    let mut i = 1;
    while b.deg() > 0 {
        let a = ring.gcd(&b, &d);
        b = ring.div_exact(&b, &a).expect("gcd divides");
        c = ring.div_exact(&d, &a).expect("gcd divides");
        d = ring.sub(&c, &ring.derivative(&b));
        if a.deg() > 0 {
            out.push((a, i));
        }
        i += 1;
    }
    out
}

/// Newton interpolation over `Q` through `(x_i, y_i)`.
fn interpolate(xs: &[BigRational], ys: &[BigRational]) -> QPoly {
    let ring = PolyRing::new(Rationals);
    let n = xs.len();
    let mut coef = ys.to_vec();
    for j in 1..n {
        for i in (j..n).rev() {
            coef[i] = (&coef[i] - &coef[i - 1]) / (&xs[i] - &xs[i - j]);
        }
    }
    let mut p = ring.constant(coef[n - 1].clone());
    for i in (0..n - 1).rev() {
        let lin = ring.from_coeffs(vec![-xs[i].clone(), BigRational::one()]);
        p = ring.add(&ring.mul(&p, &lin), &ring.constant(coef[i].clone()));
    }
    p
}

/// Shift sequence 0, 1, -1, 2, -2, …
pub(crate) fn shifts() -> impl Iterator<Item = i64> {
    std::iter::once(0).chain((1..).flat_map(|s| [s, -s]))
}

/// One result of the norm method: a squarefree norm `N(x) = Norm(g(x - sθ))`,
/// its irreducible rational factors and the matching factors of `g` over `K`.
pub(crate) struct NormSplit {
    pub shift: i64,
    pub parts: Vec<(ZPoly, Poly<FieldElement>)>,
}

/// `Norm_{K/Q}(g(x - sθ))` by evaluation and interpolation.
fn shifted_norm(k: &NumberField, g: &Poly<FieldElement>, s: i64) -> QPoly {
    let ring = k.poly_ring();
    let theta = k.gen();
    let lin = ring.from_coeffs(vec![k.neg(&k.mul(&k.from_int(s), &theta)), k.one()]);
    let gs = ring.compose(g, &lin);
    let n = k.degree() * g.deg();
    let xs: Vec<BigRational> = (0..=n as i64).map(q).collect();
    let ys: Vec<BigRational> = xs.iter().map(|x| k.norm(&ring.eval(&gs, &k.from_rational(x.clone())))).collect();
    interpolate(&xs, &ys)
}

/// A squarefree reduction modulo a prime not dividing the leading
/// coefficient proves squarefreeness over `Q`. A shift that fails here is
/// simply skipped, so no exact gcd over `Q` is ever needed.
fn squarefree_mod_some_prime(f: &ZPoly) -> bool {
    let mut p = 1u64 << 31;
    for _ in 0..6 {
        p = next_prime(p);
        if (f.lc() % p).is_zero() {
            continue;
        }
        let field = PrimeField::new(p).expect("prime");
        if PolyRing::new(field).is_squarefree(&f.reduce_mod(&field)) {
            return true;
        }
    }
    false
}

/// Factors a monic squarefree `g ∈ K[x]` by the norm method.
pub(crate) fn norm_split(k: &NumberField, g: &Poly<FieldElement>) -> Result<NormSplit> {
    let ring = k.poly_ring();
    let theta = k.gen();
    for s in shifts().take(200) {
        let norm = shifted_norm(k, g, s);
        if !squarefree_mod_some_prime(&ZPoly::from_q_primitive(&norm)) {
            continue;
        }
        let fac = factor_over_q(&ZPoly::from_q_primitive(&norm))?;
        let back = ring.from_coeffs(vec![k.mul(&k.from_int(s), &theta), k.one()]);
        let mut parts = Vec::new();
        for (ni, _) in fac.factors {
            let lifted = k.lift_poly(&ni.to_q());
            let h = ring.gcd(g, &ring.compose(&lifted, &back));
            parts.push((ni, h));
        }
        return Ok(NormSplit { shift: s, parts });
    }
    Err(Error::Invalid("no squarefree norm found within shift budget".into()))
}

fn cmp_kpoly(a: &Poly<FieldElement>, b: &Poly<FieldElement>) -> std::cmp::Ordering {
    a.deg().cmp(&b.deg()).then_with(|| a.coeffs().cmp(b.coeffs()))
}

/// Irreducible monic factors of `f ∈ K[x]` with multiplicities, sorted by
/// degree then coefficients.
pub fn factor_over_field(k: &NumberField, f: &Poly<FieldElement>) -> Result<Vec<(Poly<FieldElement>, usize)>> {
    if f.is_zero() {
        return Err(eigencong_kernels::KernelError::ZeroPolynomial.into());
    }
    let ring = k.poly_ring();
    let f = ring.monic(f);
    let mut out = Vec::new();
    for (part, mult) in squarefree_char0(k, &f) {
        if part.deg() == 1 {
            out.push((part, mult));
            continue;
        }
        for (_, h) in norm_split(k, &part)?.parts {
            out.push((h, mult));
        }
    }
    out.sort_by(|a, b| cmp_kpoly(&a.0, &b.0));
    Ok(out)
}

/// Distinct roots in `K` of a rational polynomial, sorted.
pub fn roots_in_field(k: &NumberField, p: &QPoly) -> Result<Vec<FieldElement>> {
    let f = k.lift_poly(p);
    let mut roots: Vec<FieldElement> = factor_over_field(k, &f)?
        .into_iter()
        .filter(|(g, _)| g.deg() == 1)
        .map(|(g, _)| k.neg(&g.coeffs()[0]))
        .collect();
    roots.sort();
    Ok(roots)
}

/// All automorphisms of `K`, identity first, then by image coordinates.
pub fn automorphisms(k: &NumberField) -> Result<Vec<Automorphism>> {
    let id = k.gen();
    let mut roots = roots_in_field(k, &k.minpoly().to_q())?;
    roots.retain(|r| *r != id);
    let mut out = vec![Automorphism::identity(k)];
    out.extend(roots.into_iter().map(|image| Automorphism { field: k.clone(), image }));
    Ok(out)
}

pub fn is_galois(k: &NumberField) -> Result<bool> {
    Ok(automorphisms(k)?.len() == k.degree())
}
