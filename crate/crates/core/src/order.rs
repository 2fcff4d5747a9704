//! Orders in number fields as integer lattices on the power basis.
//!
//! An order is stored as `(1/den)·H` where `H` is a lower-triangular column
//! HNF and `den` is minimal, so two orders are equal exactly when their data
//! are.

use std::sync::Arc;

use eigencong_kernels::arith::{factor_integer, prime_divisors};
use eigencong_kernels::{Field, IntMatrix, Matrix};
use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::falg::{FpAlgebra, FpVec};
use crate::numfield::{FieldElement, NumberField};

/// A lattice `(1/den)·H` of possibly deficient rank inside `K`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct Lattice {
    pub hnf: IntMatrix,
    pub den: BigInt,
}

impl Lattice {
    pub fn from_elements(k: &NumberField, elems: &[FieldElement]) -> Lattice {
        let d = k.degree();
        let den = elems.iter().fold(BigInt::one(), |acc, e| acc.lcm(&e.denominator()));
        let cols: Vec<Vec<BigInt>> = elems
            .iter()
            .map(|e| e.coords().iter().map(|c| (c * &den).to_integer()).collect())
            .collect();
        let m = if cols.is_empty() { IntMatrix::zeros(d, 0) } else { Matrix::from_cols(d, &cols) };
        let mut hnf = m.hnf_basis();
        let g = hnf.entries().iter().fold(den.clone(), |acc, x| acc.gcd(x));
        let den = &den / &g;
        if !g.is_one() {
            hnf = hnf.map(|x| x / &g);
        }
        Lattice { hnf, den }
    }

    pub fn rank(&self) -> usize {
        self.hnf.cols()
    }

    pub fn elements(&self, k: &NumberField) -> Vec<FieldElement> {
        (0..self.rank())
            .map(|j| {
                let c = (0..k.degree()).map(|i| BigRational::new(self.hnf[(i, j)].clone(), self.den.clone())).collect();
                k.from_coords(c).expect("lattice column has field degree")
            })
            .collect()
    }

    /// Integer coordinates of a full-rank lattice member.
    pub fn coords(&self, a: &FieldElement) -> Option<Vec<BigInt>> {
        let v: Vec<BigRational> = a.coords().iter().map(|c| c * &self.den).collect();
        if v.iter().any(|x| !x.is_integer()) {
            return None;
        }
        let v: Vec<BigInt> = v.into_iter().map(|x| x.to_integer()).collect();
        solve_lower(&self.hnf, &v)
    }
}

/// Integer solution of `H c = v` for square lower-triangular `H`.
pub(crate) fn solve_lower(h: &IntMatrix, v: &[BigInt]) -> Option<Vec<BigInt>> {
    let n = h.cols();
    assert_eq!(h.rows(), n);
    let mut c: Vec<BigInt> = Vec::with_capacity(n);
    for i in 0..n {
        let mut r = v[i].clone();
        for (j, cj) in c.iter().enumerate() {
            r -= &h[(i, j)] * cj;
        }
        let (q, rem) = r.div_rem(&h[(i, i)]);
        if !rem.is_zero() {
            return None;
        }
        c.push(q);
    }
    Some(c)
}

#[derive(Debug)]
struct OrderData {
    field: NumberField,
    lattice: Lattice,
    basis: Vec<FieldElement>,
    /// `mult[i*d + j]` holds the coordinates of `b_i b_j`.
    mult: Vec<Vec<BigInt>>,
    one: Vec<BigInt>,
    maximal: bool,
}

/// A full-rank subring of `K` containing `1`.
#[derive(Clone)]
pub struct Order(Arc<OrderData>);

impl PartialEq for Order {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || (self.0.field == other.0.field && self.0.lattice == other.0.lattice)
    }
}

impl Eq for Order {}

impl std::fmt::Debug for Order {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Order")
            .field("minpoly", &self.0.field.minpoly().to_string())
            .field("den", &self.0.lattice.den)
            .field("hnf", &self.0.lattice.hnf)
            .finish()
    }
}

impl Order {
    fn from_lattice(field: &NumberField, lattice: Lattice, maximal: bool) -> Result<Order> {
        let d = field.degree();
        if lattice.rank() != d {
            return Err(Error::RankDeficient { rank: lattice.rank(), expected: d });
        }
        let basis = lattice.elements(field);
        let one = lattice.coords(&field.one()).ok_or(Error::Invalid("lattice does not contain 1".into()))?;
        let mut mult = vec![Vec::new(); d * d];
        for i in 0..d {
            for j in i..d {
                let c = lattice
                    .coords(&field.mul(&basis[i], &basis[j]))
                    .ok_or(Error::Invalid("lattice is not closed under multiplication".into()))?;
                mult[j * d + i] = c.clone();
                mult[i * d + j] = c;
            }
        }
        Ok(Order(Arc::new(OrderData { field: field.clone(), lattice, basis, mult, one, maximal })))
    }

    /// Order spanned over `Z` by `elems`; fails unless that span is a ring.
    pub fn from_basis(field: &NumberField, elems: &[FieldElement]) -> Result<Order> {
        if let Some(e) = elems.iter().find(|e| !field.is_integral(e)) {
            return Err(Error::NotAlgebraicInteger(field.format_element(e)));
        }
        Self::from_lattice(field, Lattice::from_elements(field, elems), false)
    }

    /// `Z[θ]`.
    pub fn equation_order(field: &NumberField) -> Order {
        let d = field.degree();
        let lattice = Lattice { hnf: IntMatrix::identity(d), den: BigInt::one() };
        Self::from_lattice(field, lattice, d == 1).expect("Z[θ] is an order")
    }

    pub fn field(&self) -> &NumberField {
        &self.0.field
    }

    pub fn degree(&self) -> usize {
        self.0.field.degree()
    }

    pub fn basis(&self) -> &[FieldElement] {
        &self.0.basis
    }

    pub fn hnf(&self) -> &IntMatrix {
        &self.0.lattice.hnf
    }

    pub fn denominator(&self) -> &BigInt {
        &self.0.lattice.den
    }

    pub fn is_maximal(&self) -> bool {
        self.0.maximal
    }

    /// Coordinates of `a` on the order basis, if `a` lies in the order.
    pub fn coords(&self, a: &FieldElement) -> Option<Vec<BigInt>> {
        self.0.lattice.coords(a)
    }

    pub fn contains(&self, a: &FieldElement) -> bool {
        self.coords(a).is_some()
    }

    pub fn element(&self, coords: &[BigInt]) -> FieldElement {
        let k = &self.0.field;
        coords.iter().zip(&self.0.basis).fold(k.zero(), |acc, (c, b)| {
            if c.is_zero() {
                acc
            } else {
                k.add(&acc, &k.mul(&k.from_int(c.clone()), b))
            }
        })
    }

    pub fn one_coords(&self) -> &[BigInt] {
        &self.0.one
    }

    /// Coordinates of `b_i b_j`.
    pub fn mult_entry(&self, i: usize, j: usize) -> &[BigInt] {
        &self.0.mult[i * self.degree() + j]
    }

    /// Product in order coordinates.
    pub fn mul_coords(&self, a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
        let d = self.degree();
        let mut out = vec![BigInt::zero(); d];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let c = x * y;
                for (o, t) in out.iter_mut().zip(self.mult_entry(i, j)) {
                    *o += &c * t;
                }
            }
        }
        out
    }

    /// Integer trace-form Gram matrix `tr(b_i b_j)`.
    pub fn trace_form(&self) -> IntMatrix {
        let k = &self.0.field;
        let d = self.degree();
        let traces: Vec<BigInt> = self.0.basis.iter().map(|b| k.trace(b).to_integer()).collect();
        Matrix::from_fn(d, d, |i, j| self.mult_entry(i, j).iter().zip(&traces).map(|(c, t)| c * t).sum())
    }

    pub fn disc(&self) -> BigInt {
        self.trace_form().det()
    }

    /// `[O : Z[θ]] = den^d / det H`.
    pub fn equation_order_index(&self) -> BigInt {
        let d = self.degree() as u32;
        let det: BigInt = (0..self.degree()).map(|i| self.hnf()[(i, i)].clone()).product();
        self.denominator().pow(d) / det
    }

    /// `O/pO` with structure constants reduced mod `p`.
    pub fn quotient_mod_p(&self, p: u64) -> Result<FpAlgebra> {
        let bp = BigInt::from(p);
        let red = |v: &[BigInt]| -> FpVec { v.iter().map(|x| x.mod_floor(&bp).to_u64().unwrap()).collect() };
        let table = self.0.mult.iter().map(|v| red(v)).collect();
        FpAlgebra::new_unchecked(p, self.degree(), table, red(&self.0.one))
    }

    /// Reduction of an order element to `O/pO` coordinates.
    pub fn reduce_mod_p(&self, a: &FieldElement, p: u64) -> Option<FpVec> {
        let bp = BigInt::from(p);
        self.coords(a).map(|c| c.iter().map(|x| x.mod_floor(&bp).to_u64().unwrap()).collect())
    }

    fn mark_maximal(self) -> Order {
        match Arc::try_unwrap(self.0) {
            Ok(mut data) => {
                data.maximal = true;
                Order(Arc::new(data))
            }
            Err(arc) => {
                let d = &*arc;
                Order(Arc::new(OrderData {
                    field: d.field.clone(),
                    lattice: d.lattice.clone(),
                    basis: d.basis.clone(),
                    mult: d.mult.clone(),
                    one: d.one.clone(),
                    maximal: true,
                }))
            }
        }
    }

    /// `[self : smaller]`.
    pub fn index_of(&self, smaller: &Order) -> Result<BigInt> {
        index(self, smaller)
    }
}

const CLOSURE_ROUNDS: usize = 64;

/// The ring `Z[gens]`.
pub fn order_generated_by(field: &NumberField, gens: &[FieldElement]) -> Result<Order> {
    if gens.is_empty() {
        return Err(Error::Invalid("empty generator list".into()));
    }
    if let Some(e) = gens.iter().find(|e| !field.is_integral(e)) {
        return Err(Error::NotAlgebraicInteger(field.format_element(e)));
    }
    let mut span: Vec<FieldElement> = std::iter::once(field.one()).chain(gens.iter().cloned()).collect();
    let mut lat = Lattice::from_elements(field, &span);
    for _ in 0..CLOSURE_ROUNDS {
        let basis = lat.elements(field);
        span = basis.clone();
        for i in 0..basis.len() {
            for j in i..basis.len() {
                span.push(field.mul(&basis[i], &basis[j]));
            }
        }
        let next = Lattice::from_elements(field, &span);
        if next == lat {
            return Order::from_lattice(field, lat, false);
        }
        lat = next;
    }
    Err(Error::ClosureUnstable(CLOSURE_ROUNDS))
}

/// `[larger : smaller]` as `|det|` of the change of basis.
pub fn index(larger: &Order, smaller: &Order) -> Result<BigInt> {
    if larger.field() != smaller.field() {
        return Err(Error::NotSublattice);
    }
    let d = larger.degree();
    let mut cols = Vec::with_capacity(d);
    for b in smaller.basis() {
        cols.push(larger.coords(b).ok_or(Error::NotSublattice)?);
    }
    Ok(Matrix::from_cols(d, &cols).det().abs())
}

/// One Round-2 step at `p`: the ring of multipliers of the `p`-radical.
fn enlarge_at(o: &Order, p: u64) -> Result<Order> {
    let d = o.degree();
    let k = o.field();
    let bp = BigInt::from(p);
    let a = o.quotient_mod_p(p)?;
    // I = pO + lift(rad(O/pO)), in order coordinates.
    let mut gens: Vec<Vec<BigInt>> = (0..d)
        .map(|i| (0..d).map(|j| if i == j { bp.clone() } else { BigInt::zero() }).collect())
        .collect();
    for v in a.radical() {
        gens.push(v.iter().map(|&x| BigInt::from(x)).collect());
    }
    let ideal = Matrix::from_cols(d, &gens).hnf_basis();
    let ideal_cols = ideal.columns();
    // Kernel of x ↦ (y ↦ xy) from O/pO to End(I/pI).
    let pf = a.prime_field();
    let mut map_cols: Vec<FpVec> = Vec::with_capacity(d);
    for i in 0..d {
        let mut col = Vec::with_capacity(d * d);
        let mut ei = vec![BigInt::zero(); d];
        ei[i] = BigInt::one();
        for beta in &ideal_cols {
            let prod = o.mul_coords(&ei, beta);
            let c = solve_lower(&ideal, &prod).ok_or(Error::Invalid("radical is not an ideal".into()))?;
            col.extend(c.iter().map(|x| x.mod_floor(&bp).to_u64().unwrap()));
        }
        map_cols.push(col);
    }
    let kernel = eigencong_kernels::linalg::kernel(&pf, &Matrix::from_cols(d * d, &map_cols));
    let pinv = BigRational::new(BigInt::one(), bp.clone());
    let mut elems: Vec<FieldElement> = o.basis().to_vec();
    for v in kernel {
        let coords: Vec<BigInt> = v.iter().map(|&x| BigInt::from(x)).collect();
        elems.push(k.mul(&o.element(&coords), &k.from_rational(pinv.clone())));
    }
    Order::from_lattice(k, Lattice::from_elements(k, &elems), false)
}

/// Enlarges `o` until it is `p`-maximal.
pub fn p_maximal(o: &Order, p: u64) -> Result<Order> {
    let mut cur = o.clone();
    loop {
        let next = enlarge_at(&cur, p)?;
        if next == cur {
            return Ok(cur);
        }
        cur = next;
    }
}

fn prime_u64(p: &BigUint) -> Result<u64> {
    p.to_u64()
        .filter(|&x| x < 1 << 63)
        .ok_or_else(|| Error::Invalid(format!("prime {p} exceeds the word-size bound")))
}

/// The ring of integers `O_K` by Round 2 from `Z[θ]`.
pub fn maximal_order(field: &NumberField) -> Result<Order> {
    let start = Order::equation_order(field);
    let mut cur = start.clone();
    for (p, e) in factor_integer(&start.disc())? {
        if e >= 2 {
            cur = p_maximal(&cur, prime_u64(&p)?)?;
        }
    }
    Ok(cur.mark_maximal())
}

/// Round 2 from `start` at the given primes only. Every prime dividing
/// `disc(start)` to a power above one must be listed; this is verified by
/// checking that the final discriminant has no other prime factor.
pub fn maximal_order_with_hint(start: &Order, primes: &[u64]) -> Result<Order> {
    let mut cur = start.clone();
    let mut disc = start.disc();
    for &p in primes {
        let bp = BigInt::from(p);
        if disc.is_multiple_of(&(&bp * &bp)) {
            cur = p_maximal(&cur, p)?;
        }
        while disc.is_multiple_of(&bp) && !disc.is_zero() {
            disc /= &bp;
        }
    }
    if !disc.abs().is_one() {
        return Err(Error::Invalid("discriminant has a prime factor outside the hint".into()));
    }
    Ok(cur.mark_maximal())
}

/// Primes dividing `disc(o)`.
pub fn disc_primes(o: &Order) -> Result<Vec<u64>> {
    prime_divisors(&o.disc())?.iter().map(prime_u64).collect()
}
