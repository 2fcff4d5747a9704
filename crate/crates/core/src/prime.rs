//! Prime ideals of maximal orders, residue maps and the groups `J_𝔭`.

use std::cmp::Ordering;

use eigencong_kernels::arith::prime_divisors;
use eigencong_kernels::factor::factor_mod_p;
use eigencong_kernels::{linalg, Field, IntMatrix, Matrix, PrimeField};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::falg::{cmp_images, local_decomposition, CrtDecomposition};
use crate::finfield::{FfElem, FiniteField};
use crate::numfield::{Automorphism, FieldElement};
use crate::order::{maximal_order, solve_lower, Order};

/// A prime `𝔭` of a maximal order with its canonical residue map.
#[derive(Debug, Clone)]
pub struct PrimeIdeal {
    order: Order,
    p: u64,
    /// HNF basis of `𝔭` in order coordinates.
    basis: IntMatrix,
    e: usize,
    f: usize,
    residue_field: FiniteField,
    residue_images: Vec<FfElem>,
}

impl PartialEq for PrimeIdeal {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order && self.basis == other.basis
    }
}

impl Eq for PrimeIdeal {}

impl PrimeIdeal {
    fn build(
        order: &Order,
        p: u64,
        gens: Vec<Vec<BigInt>>,
        e: usize,
        residue_field: FiniteField,
        residue_images: Vec<FfElem>,
    ) -> Result<PrimeIdeal> {
        let d = order.degree();
        let bp = BigInt::from(p);
        let mut cols: Vec<Vec<BigInt>> = (0..d)
            .map(|i| (0..d).map(|j| if i == j { bp.clone() } else { BigInt::zero() }).collect())
            .collect();
        cols.extend(gens);
        let basis = Matrix::from_cols(d, &cols).hnf_basis();
        let f = residue_field.degree();
        let residue_images = canonical_residue(&residue_field, residue_images);
        let ideal = PrimeIdeal { order: order.clone(), p, basis, e, f, residue_field, residue_images };
        let norm: BigInt = (0..d).map(|i| ideal.basis[(i, i)].clone()).product();
        if norm != bp.pow(f as u32) {
            return Err(Error::Invalid(format!("prime above {p} has norm {norm}, expected {p}^{f}")));
        }
        for i in 0..d {
            let mut ei = vec![BigInt::zero(); d];
            ei[i] = 1.into();
            for beta in ideal.basis.columns() {
                if !ideal.contains_coords(&order.mul_coords(&ei, &beta)) {
                    return Err(Error::Invalid(format!("lattice above {p} is not an ideal")));
                }
            }
        }
        Ok(ideal)
    }

    pub fn order(&self) -> &Order {
        &self.order
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn ramification_index(&self) -> usize {
        self.e
    }

    pub fn residue_degree(&self) -> usize {
        self.f
    }

    pub fn hnf(&self) -> &IntMatrix {
        &self.basis
    }

    pub fn residue_field(&self) -> &FiniteField {
        &self.residue_field
    }

    /// Images of the order basis in the residue field.
    pub fn residue_images(&self) -> &[FfElem] {
        &self.residue_images
    }

    /// Lattice generators of `𝔭` as field elements.
    pub fn elements(&self) -> Vec<FieldElement> {
        self.basis.columns().iter().map(|c| self.order.element(c)).collect()
    }

    pub fn contains_coords(&self, c: &[BigInt]) -> bool {
        solve_lower(&self.basis, c).is_some()
    }

    /// Membership by lattice coordinates; independent of the residue map.
    pub fn contains(&self, a: &FieldElement) -> bool {
        self.order.coords(a).is_some_and(|c| self.contains_coords(&c))
    }

    /// Class of an order element in `F_{p^f}`.
    pub fn reduce(&self, a: &FieldElement) -> Option<FfElem> {
        let c = self.order.coords(a)?;
        Some(self.reduce_coords(&c))
    }

    pub fn reduce_coords(&self, c: &[BigInt]) -> FfElem {
        let k = &self.residue_field;
        let bp = BigInt::from(self.p);
        c.iter().zip(&self.residue_images).fold(k.zero(), |acc, (x, img)| {
            let x = x.mod_floor(&bp).to_u64().unwrap();
            if x == 0 {
                acc
            } else {
                k.add(&acc, &k.mul(&k.from_base(x), img))
            }
        })
    }

    /// `σ(𝔭) ⊆ other`.
    pub fn maps_into(&self, sigma: &Automorphism, other: &PrimeIdeal) -> bool {
        self.elements().iter().all(|x| other.contains(&sigma.apply(x)))
    }
}

/// Frobenius conjugate of the residue map with lexicographically least images.
fn canonical_residue(field: &FiniteField, images: Vec<FfElem>) -> Vec<FfElem> {
    let mut best = images.clone();
    let mut cur = images;
    for _ in 1..field.degree() {
        cur = cur.iter().map(|x| field.frobenius(x)).collect();
        if cmp_images(field, &cur, &best) == Ordering::Less {
            best = cur.clone();
        }
    }
    best
}

fn check_maximal(o: &Order) -> Result<()> {
    if o.is_maximal() || *o == maximal_order(o.field())? {
        Ok(())
    } else {
        Err(Error::NotMaximalOrder)
    }
}

fn finish(o: &Order, p: u64, mut primes: Vec<PrimeIdeal>) -> Result<Vec<PrimeIdeal>> {
    primes.sort_by(|a, b| a.basis.entries().cmp(b.basis.entries()));
    let total: usize = primes.iter().map(|q| q.e * q.f).sum();
    if total != o.degree() {
        return Err(Error::Invalid(format!("Σ e·f = {total} at {p}, expected {}", o.degree())));
    }
    Ok(primes)
}

/// Kummer–Dedekind splitting; requires `p ∤ [O : Z[θ]]`.
pub fn split_prime_kummer_dedekind(o: &Order, p: u64) -> Result<Vec<PrimeIdeal>> {
    check_maximal(o)?;
    let bp = BigInt::from(p);
    if o.equation_order_index().is_multiple_of(&bp) {
        return Err(Error::Invalid(format!("{p} divides the index of Z[θ]")));
    }
    let k = o.field();
    let d = o.degree();
    let pf = PrimeField::new(p)?;
    let den_inv = pf.inv(&pf.reduce(o.denominator()));
    let hnf = o.hnf();
    let mut out = Vec::new();
    for (g, e) in factor_mod_p(&pf, &k.minpoly().reduce_mod(&pf))? {
        let lifted = eigencong_kernels::ZPoly::new(g.coeffs().iter().map(|&c| BigInt::from(c)).collect());
        let gt = k.eval_zpoly(&lifted, &k.gen());
        let gens: Vec<Vec<BigInt>> = o
            .basis()
            .iter()
            .map(|b| o.coords(&k.mul(&gt, b)).expect("product lies in the order"))
            .collect();
        let field = FiniteField::new(p, g.deg())?;
        let rho = field.roots_of_base(&g)?.into_iter().next().expect("factor has a root in its residue field");
        let images: Vec<FfElem> = (0..d)
            .map(|j| {
                let col: Vec<u64> = (0..d).map(|i| pf.mul(&pf.reduce(&hnf[(i, j)]), &den_inv)).collect();
                field.embed(&col, &rho)
            })
            .collect();
        out.push(PrimeIdeal::build(o, p, gens, e, field, images)?);
    }
    finish(o, p, out)
}

/// Splitting through the local decomposition of `O/pO`.
pub fn split_prime_local(o: &Order, p: u64) -> Result<Vec<PrimeIdeal>> {
    check_maximal(o)?;
    let a = o.quotient_mod_p(p)?;
    let mut out = Vec::new();
    for lf in local_decomposition(&a)? {
        let gens = lf.max_ideal.iter().map(|v| v.iter().map(|&x| BigInt::from(x)).collect()).collect();
        out.push(PrimeIdeal::build(o, p, gens, lf.length, lf.residue_field, lf.residue_images)?);
    }
    finish(o, p, out)
}

/// Primes above an unramified `p`, one per CRT component of `O/pO`, in
/// component order.
pub(crate) fn primes_from_components(o: &Order, p: u64, dec: &CrtDecomposition) -> Result<Vec<PrimeIdeal>> {
    let pf = PrimeField::new(p)?;
    dec.components
        .iter()
        .map(|c| {
            let map = Matrix::from_cols(c.degree(), &c.projection);
            let gens = linalg::kernel(&pf, &map).iter().map(|v| v.iter().map(|&x| BigInt::from(x)).collect()).collect();
            PrimeIdeal::build(o, p, gens, 1, c.field.clone(), c.projection.clone())
        })
        .collect()
}

/// `pO = Π 𝔭_i^{e_i}`, primes sorted by HNF.
pub fn split_prime(o: &Order, p: u64) -> Result<Vec<PrimeIdeal>> {
    if o.equation_order_index().is_multiple_of(&BigInt::from(p)) {
        split_prime_local(o, p)
    } else {
        split_prime_kummer_dedekind(o, p)
    }
}

/// Primes dividing `disc(O)`, each confirmed by a ramified prime above it.
pub fn ramified_primes(o: &Order) -> Result<Vec<u64>> {
    check_maximal(o)?;
    let mut out = Vec::new();
    for p in prime_divisors(&o.disc())? {
        let p = p.to_u64().ok_or(Error::Invalid(format!("prime {p} exceeds the word-size bound")))?;
        if !split_prime(o, p)?.iter().any(|q| q.e > 1) {
            return Err(Error::Invalid(format!("{p} divides disc(O) but is unramified")));
        }
        out.push(p);
    }
    Ok(out)
}

/// `J_𝔭`: automorphisms with `σ(𝔭) ⊆ 𝔭` acting trivially on `O/𝔭`.
#[derive(Debug, Clone)]
pub struct JGroup {
    pub prime: PrimeIdeal,
    pub elements: Vec<Automorphism>,
}

impl JGroup {
    pub fn is_trivial(&self) -> bool {
        self.elements.iter().all(|s| s.is_identity())
    }

    pub fn nontrivial(&self) -> impl Iterator<Item = &Automorphism> {
        self.elements.iter().filter(|s| !s.is_identity())
    }
}

pub fn acts_trivially(prime: &PrimeIdeal, sigma: &Automorphism) -> bool {
    let k = prime.order.field();
    prime.order.basis().iter().all(|b| prime.contains(&k.sub(&sigma.apply(b), b)))
}

pub fn j_group(prime: &PrimeIdeal, auts: &[Automorphism]) -> Result<JGroup> {
    let elements: Vec<Automorphism> =
        auts.iter().filter(|s| prime.maps_into(s, prime) && acts_trivially(prime, s)).cloned().collect();
    if !elements.iter().any(|s| s.is_identity()) {
        return Err(Error::Invalid("automorphism list lacks the identity".into()));
    }
    for a in &elements {
        for b in &elements {
            let c = a.compose(b);
            if !elements.iter().any(|x| x.image() == c.image()) {
                return Err(Error::Invalid("J group is not closed under composition".into()));
            }
        }
    }
    Ok(JGroup { prime: prime.clone(), elements })
}
