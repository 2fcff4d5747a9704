//! Galois closures by iterated root adjunction.
//!
//! Each step adjoins a root `β` of a nonlinear factor of `m` over the current
//! field `E = Q(γ)` using `γ' = β + sγ`, where `s` is the first shift making the
//! norm squarefree. The generator is tracked as an integer combination of the
//! roots of `m`, so the Galois group can be read off from permutations of the
//! roots instead of by factoring over the closure.

use eigencong_kernels::{Field, Poly, ZPoly};
use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::numfield::{automorphisms, norm_split, roots_in_field, Automorphism, FieldElement, Limits, NumberField};

/// `K̃` with the embedding `K → K̃`, the roots of `m` and `Gal(K̃/Q)`.
#[derive(Debug, Clone)]
pub struct GaloisClosureData {
    base: NumberField,
    field: NumberField,
    embedding: FieldElement,
    roots: Vec<FieldElement>,
    group: Vec<Automorphism>,
}

impl GaloisClosureData {
    pub fn base(&self) -> &NumberField {
        &self.base
    }

    pub fn field(&self) -> &NumberField {
        &self.field
    }

    /// Image of `θ` in `K̃`.
    pub fn embedding(&self) -> &FieldElement {
        &self.embedding
    }

    /// Sorted roots of `m` in `K̃`.
    pub fn roots(&self) -> &[FieldElement] {
        &self.roots
    }

    /// `Gal(K̃/Q)`, identity first, then by image of the generator.
    pub fn group(&self) -> &[Automorphism] {
        &self.group
    }

    pub fn is_trivial_extension(&self) -> bool {
        self.field == self.base
    }

    pub fn embed(&self, a: &FieldElement) -> FieldElement {
        self.field.eval_qpoly(&self.base.to_qpoly(a), &self.embedding)
    }

    /// Whether `σ` restricts to the identity on the image of `K`.
    pub fn fixes_base(&self, sigma: &Automorphism) -> bool {
        sigma.apply(&self.embedding) == self.embedding
    }
}

/// Image of the old generator `γ` in `E' = Q[t]/(N)`, where `t = β + sγ` and
/// `h(β) = 0` for `h ∈ E[x]`.
fn old_generator_in(e: &NumberField, h: &Poly<FieldElement>, s: i64, e2: &NumberField) -> Result<FieldElement> {
    let ring = e2.poly_ring();
    let t = e2.gen();
    // t - s·y as a polynomial in y.
    let lin = ring.from_coeffs(vec![t, e2.from_int(-s)]);
    let mut g = ring.zero();
    let mut pw = ring.one();
    for c in h.coeffs() {
        let cy = ring.from_coeffs(c.coords().iter().map(|q| e2.from_rational(q.clone())).collect());
        g = ring.add(&g, &ring.mul(&cy, &pw));
        pw = ring.mul(&pw, &lin);
    }
    let me = e2.lift_poly(&e.minpoly().to_q());
    let gcd = ring.gcd(&me, &g);
    if gcd.deg() != 1 {
        return Err(Error::Invalid(format!("primitive element recovery gave degree {}", gcd.deg())));
    }
    Ok(e2.neg(&gcd.coeffs()[0]))
}

fn check_field_degree(k: &NumberField, limits: &Limits) -> Result<()> {
    if k.degree() > limits.field_degree {
        return Err(Error::DegreeBoundExceeded { got: k.degree(), cap: limits.field_degree });
    }
    Ok(())
}

pub fn galois_closure(k: &NumberField) -> Result<GaloisClosureData> {
    galois_closure_with(k, &Limits::default())
}

pub fn galois_closure_with(k: &NumberField, limits: &Limits) -> Result<GaloisClosureData> {
    check_field_degree(k, limits)?;
    let d = k.degree();
    let m = k.minpoly().to_q();
    let auts = automorphisms(k)?;
    if auts.len() == d {
        let roots = {
            let mut r: Vec<FieldElement> = auts.iter().map(|a| a.image().clone()).collect();
            r.sort();
            r
        };
        return Ok(GaloisClosureData {
            base: k.clone(),
            field: k.clone(),
            embedding: k.gen(),
            roots,
            group: auts,
        });
    }

    // Tracked roots and the generator as Σ λ_i r_i over them.
    let mut e = k.clone();
    let mut embedding = k.gen();
    let mut tracked: Vec<FieldElement> = vec![k.gen()];
    let mut lambda: Vec<i64> = vec![1];
    let mut roots = roots_in_field(&e, &m)?;
    while roots.len() < d {
        let ring = e.poly_ring();
        let mut g = e.lift_poly(&m);
        for r in &roots {
            let lin = ring.from_coeffs(vec![e.neg(r), e.one()]);
            g = ring.div_exact(&g, &lin).expect("root divides");
        }
        let split = norm_split(&e, &g)?;
        let s = split.shift;
        let (n, h) = split
            .parts
            .into_iter()
            .find(|(_, h)| h.deg() > 1)
            .ok_or_else(|| Error::Invalid("no nonlinear factor left".into()))?;
        if n.deg() > limits.closure_degree {
            return Err(Error::DegreeBoundExceeded { got: n.deg(), cap: limits.closure_degree });
        }
        let e2 = NumberField::new_unchecked(monic_primitive(&n));
        let gamma = old_generator_in(&e, &h, s, &e2)?;
        let map = |a: &FieldElement| e2.eval_qpoly(&e.to_qpoly(a), &gamma);
        embedding = map(&embedding);
        tracked = tracked.iter().map(map).collect();
        // β = t - sγ is the new root.
        let beta = e2.sub(&e2.gen(), &e2.mul(&e2.from_int(s), &gamma));
        tracked.push(beta);
        lambda = lambda.iter().map(|l| l * s).collect();
        lambda.push(1);
        e = e2;
        roots = roots_in_field(&e, &m)?;
    }

    let idx: Vec<usize> = tracked
        .iter()
        .map(|t| roots.iter().position(|r| r == t).expect("tracked root is a root"))
        .collect();
    let mg = e.minpoly().to_q();
    let mut images: Vec<FieldElement> = Vec::new();
    for perm in permutations(d) {
        let img = idx.iter().zip(&lambda).fold(e.zero(), |acc, (&i, &l)| {
            e.add(&acc, &e.mul(&e.from_int(l), &roots[perm[i]]))
        });
        if images.contains(&img) {
            continue;
        }
        let val = e.eval_qpoly(&mg, &img);
        if e.is_zero(&val) {
            images.push(img);
        }
    }
    if images.len() != e.degree() {
        return Err(Error::Invalid(format!("found {} automorphisms of a degree-{} closure", images.len(), e.degree())));
    }
    let id = e.gen();
    images.retain(|x| *x != id);
    images.sort();
    let mut group = vec![Automorphism::identity(&e)];
    group.extend(images.into_iter().map(|x| Automorphism::new(&e, x).expect("image is a root")));
    Ok(GaloisClosureData { base: k.clone(), field: e, embedding, roots, group })
}

/// Norms are monic up to sign.
fn monic_primitive(n: &ZPoly) -> ZPoly {
    let p = n.primitive_part();
    if p.lc() < BigInt::zero() {
        p.neg()
    } else {
        p
    }
}

/// All permutations of `0..n` in lexicographic order.
fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..n).collect();
    loop {
        out.push(cur.clone());
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| cur[i] < cur[i + 1]) else {
            return out;
        };
        let j = (i + 1..n).rev().find(|&j| cur[j] > cur[i]).unwrap();
        cur.swap(i, j);
        cur[i + 1..].reverse();
    }
}
