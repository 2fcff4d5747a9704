//! Finite commutative `F_p`-algebras given by structure constants.
//!
//! Semisimple algebras are products of finite fields; [`decompose`] finds the
//! primitive idempotents (unique, so the result does not depend on the
//! random elements used to find them) and a canonical isomorphism of each
//! component with the canonical model of `F_{p^f}`.

use eigencong_kernels::arith::lcm_usize;
use eigencong_kernels::factor::factor_mod_p;
use eigencong_kernels::linalg::{self, Matrix};
use eigencong_kernels::zpoly::FpPoly;
use eigencong_kernels::{Field, FiniteFieldOps, KernelError, PolyRing, PrimeField, DEFAULT_SEED};
use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::finfield::{FfElem, FiniteField};

pub type FpVec = Vec<u64>;

/// Commutative unital `F_p`-algebra of dimension `n`; `table[i*n + j]` holds
/// the coordinates of `e_i e_j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FpAlgebra {
    field: PrimeField,
    dim: usize,
    table: Vec<FpVec>,
    one: FpVec,
}

impl FpAlgebra {
    /// Checks commutativity, associativity on basis triples and the unit.
    pub fn new(p: u64, dim: usize, table: Vec<FpVec>, one: FpVec) -> Result<Self> {
        let a = Self::new_unchecked(p, dim, table, one)?;
        let n = dim;
        for i in 0..n {
            for j in 0..n {
                if a.basis_product(i, j) != a.basis_product(j, i) {
                    return Err(Error::Invalid(format!("not commutative at ({i}, {j})")));
                }
                for k in 0..n {
                    let l = a.mul(&a.basis_product(i, j), &a.unit_vector(k));
                    let r = a.mul(&a.unit_vector(i), &a.basis_product(j, k));
                    if l != r {
                        return Err(Error::Invalid(format!("not associative at ({i}, {j}, {k})")));
                    }
                }
            }
            if a.mul(&a.one, &a.unit_vector(i)) != a.unit_vector(i) {
                return Err(Error::Invalid("unit does not act as identity".into()));
            }
        }
        Ok(a)
    }

    pub(crate) fn new_unchecked(p: u64, dim: usize, table: Vec<FpVec>, one: FpVec) -> Result<Self> {
        let field = PrimeField::new(p)?;
        if table.len() != dim * dim || table.iter().any(|v| v.len() != dim) || one.len() != dim {
            return Err(Error::Invalid("structure constants have the wrong shape".into()));
        }
        Ok(Self { field, dim, table, one })
    }

    /// `F_{p^{f_1}} × … × F_{p^{f_r}}` on the concatenated power bases of the
    /// canonical models.
    pub fn product_of_fields(p: u64, degrees: &[usize]) -> Result<Self> {
        let n: usize = degrees.iter().sum();
        let mut table = vec![vec![0; n]; n * n];
        let mut one = vec![0; n];
        let mut off = 0;
        for &f in degrees {
            let ff = FiniteField::new(p, f)?;
            one[off] = 1;
            for i in 0..f {
                for j in 0..f {
                    let mut a = ff.zero();
                    a[i] = 1;
                    let mut b = ff.zero();
                    b[j] = 1;
                    let c = ff.mul(&a, &b);
                    table[(off + i) * n + off + j][off..off + f].copy_from_slice(&c);
                }
            }
            off += f;
        }
        Self::new_unchecked(p, n, table, one)
    }

    /// Same algebra on the basis given by the columns of an invertible matrix.
    pub fn change_basis(&self, basis: &Matrix<u64>) -> Result<Self> {
        let f = &self.field;
        let inv = linalg::inverse(f, basis).ok_or(Error::Invalid("basis change is singular".into()))?;
        let n = self.dim;
        let cols = basis.columns();
        let mut table = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                table.push(linalg::mat_vec(f, &inv, &self.mul(&cols[i], &cols[j])));
            }
        }
        let one = linalg::mat_vec(f, &inv, &self.one);
        Self::new_unchecked(self.p(), n, table, one)
    }

    pub fn p(&self) -> u64 {
        self.field.p()
    }

    pub fn prime_field(&self) -> PrimeField {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn one(&self) -> &FpVec {
        &self.one
    }

    pub fn zero(&self) -> FpVec {
        vec![0; self.dim]
    }

    pub fn unit_vector(&self, i: usize) -> FpVec {
        let mut v = self.zero();
        v[i] = 1;
        v
    }

    pub fn basis_product(&self, i: usize, j: usize) -> FpVec {
        self.table[i * self.dim + j].clone()
    }

    pub fn add(&self, a: &[u64], b: &[u64]) -> FpVec {
        a.iter().zip(b).map(|(x, y)| self.field.add(x, y)).collect()
    }

    pub fn sub(&self, a: &[u64], b: &[u64]) -> FpVec {
        a.iter().zip(b).map(|(x, y)| self.field.sub(x, y)).collect()
    }

    pub fn scale(&self, a: &[u64], c: u64) -> FpVec {
        a.iter().map(|x| self.field.mul(x, &c)).collect()
    }

    pub fn mul(&self, a: &[u64], b: &[u64]) -> FpVec {
        let f = &self.field;
        let n = self.dim;
        let mut out = vec![0u64; n];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                if y == 0 {
                    continue;
                }
                let c = f.mul(&x, &y);
                for (o, &t) in out.iter_mut().zip(&self.table[i * n + j]) {
                    if t != 0 {
                        *o = f.add(o, &f.mul(&c, &t));
                    }
                }
            }
        }
        out
    }

    pub fn pow(&self, a: &[u64], e: &BigUint) -> FpVec {
        let mut acc = self.one.clone();
        for i in (0..e.bits()).rev() {
            acc = self.mul(&acc, &acc);
            if e.bit(i) {
                acc = self.mul(&acc, a);
            }
        }
        acc
    }

    /// Column `j` is `a·e_j`.
    pub fn mult_matrix(&self, a: &[u64]) -> Matrix<u64> {
        let cols: Vec<FpVec> = (0..self.dim).map(|j| self.mul(a, &self.unit_vector(j))).collect();
        Matrix::from_cols(self.dim, &cols)
    }

    pub fn trace(&self, a: &[u64]) -> u64 {
        let m = self.mult_matrix(a);
        (0..self.dim).fold(0, |acc, i| self.field.add(&acc, &m[(i, i)]))
    }

    /// Polynomial evaluated at `x`, with `unit` standing in for `1`.
    pub fn eval_at(&self, poly: &FpPoly, x: &[u64], unit: &[u64]) -> FpVec {
        let mut acc = self.zero();
        for &c in poly.coeffs().iter().rev() {
            acc = self.add(&self.mul(&acc, x), &self.scale(unit, c));
        }
        acc
    }

    /// Minimal polynomial of `x` in the algebra with unit `unit`.
    pub fn minpoly_rel(&self, x: &[u64], unit: &[u64]) -> FpPoly {
        let f = &self.field;
        let ring = PolyRing::new(*f);
        let mut powers: Vec<FpVec> = vec![unit.to_vec()];
        loop {
            let next = self.mul(powers.last().unwrap(), x);
            let m = Matrix::from_cols(self.dim, &powers);
            if let Some(c) = linalg::solve(f, &m, &next) {
                let mut coeffs: Vec<u64> = c.iter().map(|v| f.neg(v)).collect();
                coeffs.push(1);
                return ring.from_coeffs(coeffs);
            }
            powers.push(next);
        }
    }

    pub fn minpoly(&self, x: &[u64]) -> FpPoly {
        self.minpoly_rel(x, &self.one.clone())
    }

    /// Trace-form determinant is nonzero.
    pub fn is_semisimple(&self) -> bool {
        let f = &self.field;
        let n = self.dim;
        let traces: Vec<u64> = (0..n).map(|i| self.trace(&self.unit_vector(i))).collect();
        let gram = Matrix::from_fn(n, n, |i, j| {
            self.table[i * n + j].iter().zip(&traces).fold(0, |acc, (c, t)| f.add(&acc, &f.mul(c, t)))
        });
        !f.is_zero(&linalg::det(f, &gram))
    }

    /// Basis of the nilradical: kernel of `x ↦ x^{p^t}` with `p^t >= dim`.
    pub fn radical(&self) -> Vec<FpVec> {
        let p = BigUint::from(self.p());
        let mut q = p.clone();
        while q < BigUint::from(self.dim) {
            q *= &p;
        }
        let cols: Vec<FpVec> = (0..self.dim).map(|j| self.pow(&self.unit_vector(j), &q)).collect();
        linalg::kernel(&self.field, &Matrix::from_cols(self.dim, &cols))
    }

    /// Quotient by the ideal spanned by `ideal`.
    pub fn quotient(&self, ideal: &[FpVec]) -> Result<Quotient> {
        let f = &self.field;
        let n = self.dim;
        let (rows, pivots) = if ideal.is_empty() {
            (Matrix::filled(0, n, 0), Vec::new())
        } else {
            let (r, piv) = linalg::rref(f, &Matrix::from_rows(ideal.to_vec()));
            (r, piv)
        };
        let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
        let project = |a: &[u64]| -> FpVec {
            let mut v = a.to_vec();
            for (r, &pc) in pivots.iter().enumerate() {
                let c = v[pc];
                if c != 0 {
                    for j in 0..n {
                        v[j] = f.sub(&v[j], &f.mul(&c, &rows[(r, j)]));
                    }
                }
            }
            free.iter().map(|&j| v[j]).collect()
        };
        let m = free.len();
        let lifts: Vec<FpVec> = free.iter().map(|&j| self.unit_vector(j)).collect();
        let mut table = Vec::with_capacity(m * m);
        for a in &lifts {
            for b in &lifts {
                table.push(project(&self.mul(a, b)));
            }
        }
        let one = project(&self.one);
        let proj_cols: Vec<FpVec> = (0..n).map(|j| project(&self.unit_vector(j))).collect();
        let projection = Matrix::from_cols(m, &proj_cols);
        Ok(Quotient { algebra: Self::new_unchecked(self.p(), m, table, one)?, projection, lifts })
    }

    /// Smallest unital subalgebra containing `gens`.
    pub fn subalgebra_image(&self, gens: &[FpVec]) -> Result<Subalgebra> {
        let f = &self.field;
        let n = self.dim;
        let mut span: Vec<FpVec> = std::iter::once(self.one.clone()).chain(gens.iter().cloned()).collect();
        let mut basis = echelon(f, n, &span);
        loop {
            for a in &basis {
                for b in &basis {
                    span.push(self.mul(a, b));
                }
            }
            let next = echelon(f, n, &span);
            span = next.clone();
            if next.len() == basis.len() {
                basis = next;
                break;
            }
            basis = next;
        }
        let pivots: Vec<usize> = basis.iter().map(|v| v.iter().position(|&c| c != 0).unwrap()).collect();
        let coords = |v: &[u64]| -> FpVec { pivots.iter().map(|&pc| v[pc]).collect() };
        let m = basis.len();
        let mut table = Vec::with_capacity(m * m);
        for a in &basis {
            for b in &basis {
                table.push(coords(&self.mul(a, b)));
            }
        }
        let one = coords(&self.one);
        Ok(Subalgebra { algebra: Self::new_unchecked(self.p(), m, table, one)?, inclusion: basis })
    }
}

/// Nonzero rows of the reduced row echelon form of `vs`.
fn echelon(f: &PrimeField, n: usize, vs: &[FpVec]) -> Vec<FpVec> {
    if vs.is_empty() {
        return Vec::new();
    }
    let (r, piv) = linalg::rref(f, &Matrix::from_rows(vs.to_vec()));
    (0..piv.len()).map(|i| r.row(i)).collect::<Vec<_>>().into_iter().filter(|v| v.len() == n).collect()
}

/// `A/I` with the projection matrix and lifts of its basis.
#[derive(Debug, Clone)]
pub struct Quotient {
    pub algebra: FpAlgebra,
    /// `dim(A/I) × dim(A)` matrix of the projection.
    pub projection: Matrix<u64>,
    pub lifts: Vec<FpVec>,
}

impl Quotient {
    pub fn project(&self, a: &[u64]) -> FpVec {
        linalg::mat_vec(&self.algebra.prime_field(), &self.projection, a)
    }

    pub fn lift(&self, b: &[u64]) -> FpVec {
        let f = self.algebra.prime_field();
        let n = self.projection.cols();
        let mut v = vec![0; n];
        for (c, l) in b.iter().zip(&self.lifts) {
            for j in 0..n {
                v[j] = f.add(&v[j], &f.mul(c, &l[j]));
            }
        }
        v
    }
}

/// A subalgebra `B ⊆ A` with an echelon basis given in `A`-coordinates.
#[derive(Debug, Clone)]
pub struct Subalgebra {
    pub algebra: FpAlgebra,
    pub inclusion: Vec<FpVec>,
}

impl Subalgebra {
    pub fn dim(&self) -> usize {
        self.inclusion.len()
    }
}

/// One field factor `eA ≅ F_{p^f}` of a semisimple algebra.
#[derive(Debug, Clone)]
pub struct Component {
    pub field: FiniteField,
    pub idempotent: FpVec,
    /// Images of the basis vectors of `A` under the projection `π`.
    pub projection: Vec<FfElem>,
}

impl Component {
    pub fn degree(&self) -> usize {
        self.field.degree()
    }

    pub fn project(&self, a: &[u64]) -> FfElem {
        let k = &self.field;
        a.iter()
            .zip(&self.projection)
            .fold(k.zero(), |acc, (&c, img)| if c == 0 { acc } else { k.add(&acc, &k.mul(&k.from_base(c), img)) })
    }
}

/// Chinese-remainder decomposition of a semisimple algebra.
#[derive(Debug, Clone)]
pub struct CrtDecomposition {
    pub components: Vec<Component>,
}

const MAX_ATTEMPTS: usize = 2000;

fn crt_idempotents(a: &FpAlgebra, x: &[u64], unit: &[u64], mu: &FpPoly, factors: &[FpPoly]) -> Vec<FpVec> {
    let ring = PolyRing::new(a.prime_field());
    factors
        .iter()
        .map(|pi| {
            let qi = ring.div_exact(mu, pi).expect("factor divides");
            let inv = ring.inv_mod(&ring.rem(&qi, pi), pi).expect("coprime factors");
            let ui = ring.rem(&ring.mul(&qi, &inv), mu);
            a.eval_at(&ui, x, unit)
        })
        .collect()
}

/// Isomorphism `eA → F_{p^f}` with lexicographically smallest image vector.
fn component_from_primitive(a: &FpAlgebra, e: &[u64], x: &[u64], mu: &FpPoly) -> Result<Component> {
    let f = mu.deg();
    let p = a.p();
    let field = FiniteField::new(p, f)?;
    let pf = a.prime_field();
    let mut powers = vec![e.to_vec()];
    for _ in 1..f {
        powers.push(a.mul(powers.last().unwrap(), x));
    }
    let krylov = Matrix::from_cols(a.dim(), &powers);
    let coords: Vec<FpVec> = (0..a.dim())
        .map(|j| {
            let v = a.mul(e, &a.unit_vector(j));
            linalg::solve(&pf, &krylov, &v).expect("component is spanned by powers of x")
        })
        .collect();
    let mut best: Option<Vec<FfElem>> = None;
    for rho in field.roots_of_base(mu)? {
        let imgs: Vec<FfElem> = coords.iter().map(|c| field.embed(c, &rho)).collect();
        let better = match &best {
            None => true,
            Some(b) => cmp_images(&field, &imgs, b) == std::cmp::Ordering::Less,
        };
        if better {
            best = Some(imgs);
        }
    }
    let projection = best.ok_or_else(|| Error::Invalid("minimal polynomial has no root".into()))?;
    Ok(Component { field, idempotent: e.to_vec(), projection })
}

pub(crate) fn cmp_images(field: &FiniteField, a: &[FfElem], b: &[FfElem]) -> std::cmp::Ordering {
    for (x, y) in a.iter().zip(b) {
        match field.cmp_elems(x, y) {
            std::cmp::Ordering::Equal => continue,
            o => return o,
        }
    }
    std::cmp::Ordering::Equal
}

fn split_component<R: Rng>(a: &FpAlgebra, e: &[u64], rng: &mut R, out: &mut Vec<Component>) -> Result<()> {
    let pf = a.prime_field();
    let n_e = linalg::rank(&pf, &a.mult_matrix(e));
    for attempt in 0..MAX_ATTEMPTS {
        let x = if attempt < a.dim() {
            a.mul(e, &a.unit_vector(attempt))
        } else {
            let r: FpVec = (0..a.dim()).map(|_| rng.gen_range(0..a.p())).collect();
            a.mul(e, &r)
        };
        let mu = a.minpoly_rel(&x, e);
        let facs = factor_mod_p(&pf, &mu)?;
        if facs.iter().any(|(_, m)| *m > 1) {
            return Err(Error::NotSemisimple);
        }
        if facs.len() > 1 {
            let polys: Vec<FpPoly> = facs.into_iter().map(|(g, _)| g).collect();
            for eps in crt_idempotents(a, &x, e, &mu, &polys) {
                split_component(a, &eps, rng, out)?;
            }
            return Ok(());
        }
        if mu.deg() == n_e {
            out.push(component_from_primitive(a, e, &x, &mu)?);
            return Ok(());
        }
    }
    Err(KernelError::SplittingFailed(MAX_ATTEMPTS).into())
}

/// Primitive idempotents and component fields, sorted by idempotent.
pub fn decompose(a: &FpAlgebra) -> Result<CrtDecomposition> {
    decompose_seeded(a, DEFAULT_SEED)
}

pub fn decompose_seeded(a: &FpAlgebra, seed: u64) -> Result<CrtDecomposition> {
    if !a.is_semisimple() {
        return Err(Error::NotSemisimple);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut components = Vec::new();
    split_component(a, a.one(), &mut rng, &mut components)?;
    components.sort_by(|x, y| x.idempotent.cmp(&y.idempotent));
    Ok(CrtDecomposition { components })
}

/// An `F_p`-algebra homomorphism `A → F_{p^L}`: `Frob^frobenius ∘ ι ∘ π_component`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraHom {
    pub component: usize,
    pub frobenius: usize,
    pub target: FiniteField,
    /// Images of the basis vectors of `A`.
    pub images: Vec<FfElem>,
}

impl AlgebraHom {
    pub fn apply(&self, a: &[u64]) -> FfElem {
        let k = &self.target;
        a.iter()
            .zip(&self.images)
            .fold(k.zero(), |acc, (&c, img)| if c == 0 { acc } else { k.add(&acc, &k.mul(&k.from_base(c), img)) })
    }
}

/// The hom-set `S(A)` into one fixed `F_{p^L}`, `L = lcm(f_i)`, ordered by
/// component then Frobenius power.
pub fn algebra_homs(a: &FpAlgebra) -> Result<Vec<AlgebraHom>> {
    let dec = decompose(a)?;
    homs_from_decomposition(&dec)
}

pub fn homs_from_decomposition(dec: &CrtDecomposition) -> Result<Vec<AlgebraHom>> {
    let Some(first) = dec.components.first() else {
        return Ok(Vec::new());
    };
    let p = first.field.p();
    let l = dec.components.iter().fold(1, |acc, c| lcm_usize(acc, c.degree()));
    let target = FiniteField::new(p, l)?;
    let mut out = Vec::new();
    for (i, comp) in dec.components.iter().enumerate() {
        let iota = target.roots_of_base(comp.field.modulus())?.into_iter().next().expect("subfield embeds");
        let base: Vec<FfElem> = comp.projection.iter().map(|c| target.embed(c, &iota)).collect();
        for n in 0..comp.degree() {
            let images = base.iter().map(|x| target.frobenius_power(x, n)).collect();
            out.push(AlgebraHom { component: i, frobenius: n, target: target.clone(), images });
        }
    }
    Ok(out)
}

/// First pair (in the canonical hom order) of distinct homs of `A` agreeing
/// on `B`; `None` when `B = A`.
pub fn restriction_collision(a: &FpAlgebra, b: &Subalgebra) -> Result<Option<(AlgebraHom, AlgebraHom)>> {
    if b.dim() == a.dim() {
        return Ok(None);
    }
    let homs = algebra_homs(a)?;
    Ok(first_collision(&homs, b).map(|(i, j)| (homs[i].clone(), homs[j].clone())))
}

pub(crate) fn first_collision(homs: &[AlgebraHom], b: &Subalgebra) -> Option<(usize, usize)> {
    let restricted: Vec<Vec<FfElem>> = homs.iter().map(|h| b.inclusion.iter().map(|v| h.apply(v)).collect()).collect();
    for i in 0..homs.len() {
        for j in i + 1..homs.len() {
            if restricted[i] == restricted[j] {
                return Some((i, j));
            }
        }
    }
    None
}

/// Local factor of an arbitrary finite algebra: a maximal ideal with its
/// residue field and the length `e` of the local component.
#[derive(Debug, Clone)]
pub struct LocalFactor {
    pub residue_degree: usize,
    pub length: usize,
    pub max_ideal: Vec<FpVec>,
    pub residue_field: FiniteField,
    /// Images of the basis vectors of `A` in the residue field.
    pub residue_images: Vec<FfElem>,
}

/// Decomposition of `A` into local factors, via `A/rad(A)` and idempotent
/// lifting.
pub fn local_decomposition(a: &FpAlgebra) -> Result<Vec<LocalFactor>> {
    let pf = a.prime_field();
    let rad = a.radical();
    let quot = a.quotient(&rad)?;
    let dec = decompose(&quot.algebra)?;
    let mut out = Vec::new();
    for comp in &dec.components {
        let f = comp.degree();
        let imgs: Vec<FfElem> = (0..a.dim()).map(|j| comp.project(&quot.project(&a.unit_vector(j)))).collect();
        let map = Matrix::from_cols(f, &imgs);
        let max_ideal = linalg::kernel(&pf, &map);
        let mut e = quot.lift(&comp.idempotent);
        for _ in 0..64 {
            let e2 = a.mul(&e, &e);
            if e2 == e {
                break;
            }
            let e3 = a.mul(&e2, &e);
            e = a.sub(&a.scale(&e2, 3 % a.p()), &a.scale(&e3, 2 % a.p()));
        }
        if a.mul(&e, &e) != e {
            return Err(Error::Invalid("idempotent lifting did not converge".into()));
        }
        let len = linalg::rank(&pf, &a.mult_matrix(&e));
        out.push(LocalFactor {
            residue_degree: f,
            length: len / f,
            max_ideal,
            residue_field: comp.field.clone(),
            residue_images: imgs,
        });
    }
    Ok(out)
}
