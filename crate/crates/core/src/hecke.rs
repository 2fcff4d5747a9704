//! Level-one cusp forms: the Miller basis, Hecke operators, eigenforms, the
//! Hecke lattice `T ⊆ ⊕ O_i` and its discriminant decomposition.

use eigencong_kernels::arith::{is_prime_u64, primes_up_to};
use eigencong_kernels::factor::factor_over_q;
use eigencong_kernels::sturm::{all_roots_real, count_roots_above};
use eigencong_kernels::zpoly::QPoly;
use eigencong_kernels::{linalg, Field, IntMatrix, Matrix, PolyRing, Rationals, ZPoly};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::numfield::{FieldElement, NumberField};
use crate::order::{index, maximal_order, order_generated_by, Order};

/// Largest weight handled by default.
pub const MAX_WEIGHT: i64 = 60;

fn check_weight(k: i64) -> Result<()> {
    if k < 12 || k % 2 != 0 || k > MAX_WEIGHT {
        return Err(Error::WeightUnsupported(k));
    }
    Ok(())
}

/// Classical dimension of `S_k(SL_2(Z))` for even `k ≥ 0`.
pub fn dimension(k: i64) -> usize {
    if k < 12 || k % 2 != 0 {
        return 0;
    }
    let q = (k / 12) as usize;
    if k % 12 == 2 {
        q - 1
    } else {
        q
    }
}

/// Coefficients a cusp form of weight `k` is determined by.
pub fn sturm_bound(k: i64) -> usize {
    (k / 12).max(0) as usize
}

pub fn default_precision(k: i64) -> usize {
    10.max(sturm_bound(k) + 2)
}

/// `a_0 + a_1 q + … + a_B q^B`, exact to `O(q^{B+1})`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QExpansion {
    weight: i64,
    coeffs: Vec<BigInt>,
}

impl QExpansion {
    pub fn new(weight: i64, coeffs: Vec<BigInt>) -> Self {
        assert!(!coeffs.is_empty(), "an expansion carries at least a_0");
        Self { weight, coeffs }
    }

    pub fn weight(&self) -> i64 {
        self.weight
    }

    pub fn precision(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, n: usize) -> Result<&BigInt> {
        self.coeffs
            .get(n)
            .ok_or_else(|| Error::InsufficientPrecision(format!("a_{n} requested at precision {}", self.precision())))
    }

    pub fn is_cuspidal(&self) -> bool {
        self.coeffs[0].is_zero()
    }

    pub fn mul(&self, other: &QExpansion) -> QExpansion {
        let b = self.precision().min(other.precision());
        let mut out = vec![BigInt::zero(); b + 1];
        for (i, x) in self.coeffs.iter().enumerate().take(b + 1) {
            if x.is_zero() {
                continue;
            }
            for (j, y) in other.coeffs.iter().enumerate().take(b + 1 - i) {
                out[i + j] += x * y;
            }
        }
        QExpansion::new(self.weight + other.weight, out)
    }

    fn sub_scaled(&self, c: &BigInt, other: &QExpansion) -> QExpansion {
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - c * b).collect();
        QExpansion::new(self.weight, coeffs)
    }
}

fn divisor_power_sum(n: u64, r: u32) -> BigInt {
    (1..=n).filter(|d| n % d == 0).map(|d| BigInt::from(d).pow(r)).sum()
}

/// `E_4` or `E_6` normalized with constant term 1.
pub fn eisenstein(k: i64, b: usize) -> Result<QExpansion> {
    let (c, r) = match k {
        4 => (240, 3),
        6 => (-504, 5),
        _ => return Err(Error::WeightUnsupported(k)),
    };
    let mut coeffs = vec![BigInt::one()];
    coeffs.extend((1..=b as u64).map(|n| BigInt::from(c) * divisor_power_sum(n, r)));
    Ok(QExpansion::new(k, coeffs))
}

fn one(b: usize) -> QExpansion {
    let mut coeffs = vec![BigInt::zero(); b + 1];
    coeffs[0] = BigInt::one();
    QExpansion::new(0, coeffs)
}

/// `Δ = (E_4³ − E_6²)/1728`.
pub fn delta(b: usize) -> QExpansion {
    let e4 = eisenstein(4, b).unwrap();
    let e6 = eisenstein(6, b).unwrap();
    let num = e4.mul(&e4).mul(&e4).sub_scaled(&BigInt::one(), &e6.mul(&e6));
    let d = BigInt::from(1728);
    let coeffs = num
        .coeffs
        .iter()
        .map(|c| {
            assert!(c.is_multiple_of(&d), "E4^3 - E6^2 is divisible by 1728");
            c / &d
        })
        .collect();
    QExpansion::new(12, coeffs)
}

/// Modular form of weight `w ∈ {0, 4, 6, 8, 10, 14}` with constant term 1.
fn eisenstein_product(w: i64, b: usize) -> QExpansion {
    let e4 = || eisenstein(4, b).unwrap();
    let e6 = || eisenstein(6, b).unwrap();
    match w {
        0 => one(b),
        4 => e4(),
        6 => e6(),
        8 => e4().mul(&e4()),
        10 => e4().mul(&e6()),
        14 => e4().mul(&e4()).mul(&e6()),
        _ => unreachable!("weight {w} is not a residual weight"),
    }
}

/// Echelon basis `g_1, …, g_d` of `S_k` with `a_i(g_j) = δ_ij` for `i, j ≤ d`.
pub fn miller_basis(k: i64, b: usize) -> Result<Vec<QExpansion>> {
    check_weight(k)?;
    let d = dimension(k);
    if b < d + 2 {
        return Err(Error::InsufficientPrecision(format!("Miller basis of weight {k} needs B ≥ {}", d + 2)));
    }
    if d == 0 {
        return Ok(Vec::new());
    }
    let rest = k - 12 * d as i64;
    let e = eisenstein_product(rest, b);
    let del = delta(b);
    let e4_cubed = {
        let e4 = eisenstein(4, b)?;
        e4.mul(&e4).mul(&e4)
    };
    // g_j = Δ^j · E_4^{3(d−j)} · E_rest.
    let mut basis = Vec::with_capacity(d);
    for j in 1..=d {
        let mut g = e.clone();
        for _ in 0..j {
            g = g.mul(&del);
        }
        for _ in j..d {
            g = g.mul(&e4_cubed);
        }
        basis.push(g);
    }
    for j in (0..d).rev() {
        for i in j + 1..d {
            let c = basis[j].coeffs[i + 1].clone();
            if !c.is_zero() {
                basis[j] = basis[j].sub_scaled(&c, &basis[i]);
            }
        }
    }
    Ok(basis)
}

/// `T_n g` to precision `⌊B/n⌋`, via `a_m(T_n g) = Σ_{e | (m,n)} e^{k−1} a_{mn/e²}(g)`.
pub fn hecke_operator(g: &QExpansion, n: usize) -> QExpansion {
    assert!(n >= 1, "Hecke operators are indexed from 1");
    let b = g.precision() / n;
    let w = (g.weight - 1) as u32;
    let coeffs = (0..=b)
        .map(|m| {
            if m == 0 {
                // The constant term scales by σ_{k−1}(n).
                return divisor_power_sum(n as u64, w) * &g.coeffs[0];
            }
            let gcd = m.gcd(&n);
            (1..=gcd)
                .filter(|e| gcd % e == 0)
                .map(|e| BigInt::from(e).pow(w) * &g.coeffs[m * n / (e * e)])
                .sum()
        })
        .collect();
    QExpansion::new(g.weight, coeffs)
}

/// Matrix of `T_n` on an echelon basis: column `j` holds `a_1..a_d(T_n g_j)`.
pub fn hecke_matrix_on(basis: &[QExpansion], n: usize) -> Result<IntMatrix> {
    let d = basis.len();
    let mut cols = Vec::with_capacity(d);
    for g in basis {
        if n * d > g.precision() {
            return Err(Error::InsufficientPrecision(format!(
                "T_{n} on a {d}-dimensional space needs B ≥ {}, have {}",
                n * d,
                g.precision()
            )));
        }
        let t = hecke_operator(g, n);
        cols.push((1..=d).map(|m| t.coeffs[m].clone()).collect::<Vec<_>>());
    }
    Ok(Matrix::from_cols(d, &cols))
}

pub fn hecke_matrix(k: i64, n: usize, b: usize) -> Result<IntMatrix> {
    let basis = miller_basis(k, b)?;
    hecke_matrix_on(&basis, n)
}

fn to_q(m: &IntMatrix) -> Matrix<BigRational> {
    m.map(|x| BigRational::from_integer(x.clone()))
}

/// Characteristic polynomial of an integer matrix.
pub fn int_charpoly(m: &IntMatrix) -> ZPoly {
    let cp = linalg::charpoly(&Rationals, &to_q(m));
    ZPoly::new(cp.iter().map(|c| c.to_integer()).collect())
}

/// A normalized eigenform: `a_1 = 1`, integral coefficients in `K`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Eigenform {
    weight: i64,
    level: u64,
    field: NumberField,
    coeffs: Vec<FieldElement>,
}

impl Eigenform {
    /// `coeffs[n−1] = a_n`.
    pub fn new(weight: i64, level: u64, field: NumberField, coeffs: Vec<FieldElement>) -> Result<Self> {
        if coeffs.first() != Some(&field.one()) {
            return Err(Error::Invalid("eigenform is not normalized: a_1 ≠ 1".into()));
        }
        for (i, a) in coeffs.iter().enumerate() {
            if !field.is_integral(a) {
                return Err(Error::NotAlgebraicInteger(format!("a_{} = {}", i + 1, field.format_element(a))));
            }
        }
        Ok(Self { weight, level, field, coeffs })
    }

    pub fn weight(&self) -> i64 {
        self.weight
    }

    pub fn level(&self) -> u64 {
        self.level
    }

    pub fn field(&self) -> &NumberField {
        &self.field
    }

    pub fn precision(&self) -> usize {
        self.coeffs.len()
    }

    /// `a_1..a_B`.
    pub fn coeffs(&self) -> &[FieldElement] {
        &self.coeffs
    }

    /// `a_n` for `1 ≤ n ≤ B`.
    pub fn coeff(&self, n: usize) -> Option<&FieldElement> {
        n.checked_sub(1).and_then(|i| self.coeffs.get(i))
    }

    /// `R = Z[a_n : n ≤ B]`.
    pub fn coefficient_order(&self) -> Result<Order> {
        order_generated_by(&self.field, &self.coeffs)
    }
}

/// Hecke data of one weight: basis, operators `T_1..T_B`, generator and
/// eigenforms.
#[derive(Debug, Clone)]
pub struct LevelOne {
    weight: i64,
    precision: usize,
    basis: Vec<QExpansion>,
    operators: Vec<IntMatrix>,
    generator: (i64, i64),
    forms: Vec<Eigenform>,
}

/// Shifts `c` tried in `T_2 + c·T_3`.
const GENERATOR_SHIFTS: [i64; 7] = [0, 1, -1, 2, -2, 3, -3];

impl LevelOne {
    pub fn new(k: i64) -> Result<Self> {
        Self::with_precision(k, default_precision(k))
    }

    pub fn with_precision(k: i64, b: usize) -> Result<Self> {
        check_weight(k)?;
        if b < sturm_bound(k).max(2) {
            return Err(Error::InsufficientPrecision(format!("B = {b} is below the Sturm bound of weight {k}")));
        }
        let d = dimension(k);
        let basis = miller_basis(k, (b * d.max(1)).max(d + 2))?;
        let operators = (1..=b).map(|n| hecke_matrix_on(&basis, n)).collect::<Result<Vec<_>>>()?;
        let mut lev = LevelOne { weight: k, precision: b, basis, operators, generator: (1, 0), forms: Vec::new() };
        if d == 0 {
            return Ok(lev);
        }
        let (g, c) = lev.find_generator()?;
        lev.generator = (1, c);
        lev.forms = lev.eigenvectors(&g)?;
        Ok(lev)
    }

    pub fn weight(&self) -> i64 {
        self.weight
    }

    pub fn precision(&self) -> usize {
        self.precision
    }

    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[QExpansion] {
        &self.basis
    }

    /// `T_n` for `1 ≤ n ≤ B`.
    pub fn operator(&self, n: usize) -> &IntMatrix {
        &self.operators[n - 1]
    }

    /// `(a, c)` with the generator `a·T_2 + c·T_3`.
    pub fn generator(&self) -> (i64, i64) {
        self.generator
    }

    pub fn eigenforms(&self) -> &[Eigenform] {
        &self.forms
    }

    fn generator_matrix(&self, c: i64) -> IntMatrix {
        let t2 = self.operator(2);
        let t3 = self.operator(3);
        let d = self.dimension();
        Matrix::from_fn(d, d, |i, j| &t2[(i, j)] + BigInt::from(c) * &t3[(i, j)])
    }

    /// Every `T_n`, `n ≤ B`, lies in `Q[G]`.
    fn generates(&self, g: &IntMatrix) -> bool {
        let d = self.dimension();
        let gq = to_q(g);
        let mut powers = vec![linalg::identity(&Rationals, d)];
        for _ in 1..d {
            powers.push(linalg::mat_mul(&Rationals, powers.last().unwrap(), &gq));
        }
        let flat = |m: &Matrix<BigRational>| m.entries().to_vec();
        let cols: Vec<Vec<BigRational>> = powers.iter().map(flat).collect();
        let a = Matrix::from_cols(d * d, &cols);
        self.operators.iter().all(|t| linalg::solve(&Rationals, &a, &flat(&to_q(t))).is_some())
    }

    fn find_generator(&self) -> Result<(IntMatrix, i64)> {
        for c in GENERATOR_SHIFTS {
            if c != 0 && self.precision < 3 {
                break;
            }
            let g = self.generator_matrix(c);
            if int_charpoly(&g).is_squarefree() && self.generates(&g) {
                return Ok((g, c));
            }
        }
        Err(Error::GeneratorFailure)
    }

    fn eigenvectors(&self, g: &IntMatrix) -> Result<Vec<Eigenform>> {
        let d = self.dimension();
        let fac = factor_over_q(&int_charpoly(g))?;
        let mut forms = Vec::new();
        for (p, _) in &fac.factors {
            let k = NumberField::new(p.clone())?;
            let theta = k.gen();
            let m = Matrix::from_fn(d, d, |i, j| {
                let x = k.from_int(g[(i, j)].clone());
                if i == j {
                    k.sub(&x, &theta)
                } else {
                    x
                }
            });
            let ker = linalg::kernel(&k, &m);
            if ker.len() != 1 {
                return Err(Error::Invalid(format!("eigenspace of dimension {} over a simple factor", ker.len())));
            }
            let v = &ker[0];
            if k.is_zero(&v[0]) {
                return Err(Error::Invalid("eigenvector with a_1 = 0".into()));
            }
            let inv = k.inv(&v[0]);
            let c: Vec<FieldElement> = v.iter().map(|x| k.mul(x, &inv)).collect();
            let coeffs = (1..=self.precision)
                .map(|n| {
                    c.iter().zip(&self.basis).fold(k.zero(), |acc, (cj, gj)| {
                        k.add(&acc, &k.mul(cj, &k.from_int(gj.coeffs[n].clone())))
                    })
                })
                .collect();
            forms.push(Eigenform::new(self.weight, 1, k, coeffs)?);
        }
        Ok(forms)
    }
}

pub fn eigenforms(k: i64) -> Result<Vec<Eigenform>> {
    Ok(LevelOne::new(k)?.forms)
}

/// One Galois orbit with its coefficient order `R_i` and maximal order `O_i`.
#[derive(Debug, Clone)]
pub struct Orbit {
    pub form: Eigenform,
    pub coefficient_order: Order,
    pub maximal_order: Order,
    pub index: BigInt,
}

impl Orbit {
    pub fn new(form: Eigenform) -> Result<Self> {
        let r = form.coefficient_order()?;
        let o = maximal_order(form.field())?;
        let index = index(&o, &r)?;
        Ok(Orbit { form, coefficient_order: r, maximal_order: o, index })
    }

    pub fn degree(&self) -> usize {
        self.form.field().degree()
    }
}

/// `T ⊆ ⊕ O_i`, spanned by `(a_n(f_1), …, a_n(f_s))` for `n ≤ B`.
#[derive(Debug, Clone)]
pub struct HeckeLattice {
    weight: i64,
    precision: usize,
    orbits: Vec<Orbit>,
    /// HNF basis in the concatenated `O_i` coordinates.
    basis: IntMatrix,
    /// `a_n` vectors in the concatenated `R_i` coordinates.
    r_coords: Vec<Vec<BigInt>>,
    operators: Vec<IntMatrix>,
}

fn concat_coords(orbits: &[Orbit], n: usize, pick: impl Fn(&Orbit) -> &Order) -> Result<Vec<BigInt>> {
    let mut v = Vec::new();
    for o in orbits {
        let a = o.form.coeff(n).ok_or_else(|| Error::InsufficientPrecision(format!("a_{n}")))?;
        v.extend(pick(o).coords(a).ok_or_else(|| Error::NotAlgebraicInteger(format!("a_{n}")))?);
    }
    Ok(v)
}

/// Componentwise product in `⊕ O_i`, in concatenated coordinates.
fn product_coords(orbits: &[Orbit], a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = Vec::new();
    let mut off = 0;
    for o in orbits {
        let d = o.degree();
        out.extend(o.maximal_order.mul_coords(&a[off..off + d], &b[off..off + d]));
        off += d;
    }
    out
}

pub fn hecke_lattice(k: i64, b: usize) -> Result<HeckeLattice> {
    HeckeLattice::from_level_one(&LevelOne::with_precision(k, b)?)
}

impl HeckeLattice {
    pub fn from_level_one(lev: &LevelOne) -> Result<Self> {
        let orbits = lev.eigenforms().iter().cloned().map(Orbit::new).collect::<Result<Vec<_>>>()?;
        let rank: usize = orbits.iter().map(Orbit::degree).sum();
        let b = lev.precision();
        let o_cols = (1..=b).map(|n| concat_coords(&orbits, n, |o| &o.maximal_order)).collect::<Result<Vec<_>>>()?;
        let r_coords = (1..=b).map(|n| concat_coords(&orbits, n, |o| &o.coefficient_order)).collect::<Result<Vec<_>>>()?;
        let basis = if rank == 0 { IntMatrix::zeros(0, 0) } else { Matrix::from_cols(rank, &o_cols).hnf_basis() };
        if basis.cols() != rank || rank != lev.dimension() {
            return Err(Error::RankDeficient { rank: basis.cols(), expected: lev.dimension() });
        }
        let t = HeckeLattice {
            weight: lev.weight(),
            precision: b,
            orbits,
            basis,
            r_coords,
            operators: lev.operators.clone(),
        };
        t.check_ring()?;
        Ok(t)
    }

    fn contains_coords(&self, v: &[BigInt]) -> bool {
        crate::order::solve_lower(&self.basis, v).is_some()
    }

    fn check_ring(&self) -> Result<()> {
        let cols = self.basis.columns();
        let one: Vec<BigInt> = self.orbits.iter().flat_map(|o| o.maximal_order.one_coords().to_vec()).collect();
        if !self.contains_coords(&one) {
            return Err(Error::Invalid("Hecke lattice misses the identity".into()));
        }
        for a in &cols {
            for b in &cols {
                if !self.contains_coords(&product_coords(&self.orbits, a, b)) {
                    return Err(Error::Invalid("Hecke lattice is not closed under multiplication".into()));
                }
            }
        }
        Ok(())
    }

    pub fn weight(&self) -> i64 {
        self.weight
    }

    pub fn precision(&self) -> usize {
        self.precision
    }

    pub fn orbits(&self) -> &[Orbit] {
        &self.orbits
    }

    pub fn rank(&self) -> usize {
        self.basis.cols()
    }

    pub fn hnf(&self) -> &IntMatrix {
        &self.basis
    }

    /// `|⊕ R_i / T|` from the Smith invariants of `T` in `⊕ R_i` coordinates.
    pub fn congruence_module_order(&self) -> BigInt {
        if self.rank() == 0 {
            return BigInt::one();
        }
        let m = Matrix::from_cols(self.rank(), &self.r_coords);
        m.snf().iter().take(self.rank()).map(|d| d.abs()).product()
    }

    /// `disc(T)` from the trace form `tr(A_i A_j)` on a `Z`-basis of the
    /// integer Hecke matrices; no number field is involved.
    pub fn disc_trace_form(&self) -> BigInt {
        let d = self.rank();
        if d == 0 {
            return BigInt::one();
        }
        let flat: Vec<Vec<BigInt>> = self.operators.iter().map(|t| t.entries().to_vec()).collect();
        let span = Matrix::from_cols(d * d, &flat).hnf_basis();
        let mats: Vec<IntMatrix> = span.columns().into_iter().map(|c| Matrix::from_fn(d, d, |i, j| c[i * d + j].clone())).collect();
        let trace = |a: &IntMatrix, b: &IntMatrix| -> BigInt {
            let mut s = BigInt::zero();
            for i in 0..d {
                for j in 0..d {
                    s += &a[(i, j)] * &b[(j, i)];
                }
            }
            s
        };
        let gram = IntMatrix::from_fn(mats.len(), mats.len(), |i, j| trace(&mats[i], &mats[j]));
        gram.det()
    }
}

/// `[⊕ O_i : T]` as the HNF determinant.
pub fn index_in_normalization(t: &HeckeLattice) -> BigInt {
    (0..t.rank()).map(|i| t.basis[(i, i)].abs()).product()
}

/// The four quantities in `disc(T) = C² · Π [O_i:R_i]² disc(O_i)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiscReport {
    pub weight: i64,
    pub disc_t: BigInt,
    pub congruence_module_order: BigInt,
    pub orbit_indices: Vec<BigInt>,
    pub orbit_discs: Vec<BigInt>,
    pub normalization_index: BigInt,
    pub holds: bool,
}

impl DiscReport {
    pub fn rhs(&self) -> BigInt {
        let c = &self.congruence_module_order;
        self.orbit_indices.iter().zip(&self.orbit_discs).fold(c * c, |acc, (i, d)| acc * i * i * d)
    }
}

pub fn disc_report(t: &HeckeLattice) -> DiscReport {
    let orbit_indices: Vec<BigInt> = t.orbits.iter().map(|o| o.index.clone()).collect();
    let orbit_discs: Vec<BigInt> = t.orbits.iter().map(|o| o.maximal_order.disc()).collect();
    let mut r = DiscReport {
        weight: t.weight,
        disc_t: t.disc_trace_form(),
        congruence_module_order: t.congruence_module_order(),
        orbit_indices,
        orbit_discs,
        normalization_index: index_in_normalization(t),
        holds: false,
    };
    let idx_product: BigInt = r.orbit_indices.iter().product::<BigInt>() * &r.congruence_module_order;
    r.holds = r.disc_t == r.rhs() && idx_product == r.normalization_index;
    r
}

pub fn disc_decomposition(k: i64) -> Result<DiscReport> {
    Ok(disc_report(&hecke_lattice(k, default_precision(k))?))
}

/// `Q(y) = ±P(√y)P(−√y)`, whose roots are the squares of the roots of `P`.
fn squared_roots(p: &QPoly) -> QPoly {
    let ring = PolyRing::new(Rationals);
    let neg = ring.from_coeffs(
        p.coeffs().iter().enumerate().map(|(i, c)| if i % 2 == 0 { c.clone() } else { -c.clone() }).collect(),
    );
    let prod = ring.mul(p, &neg);
    ring.from_coeffs(prod.coeffs().iter().step_by(2).cloned().collect())
}

/// Every real embedding of every `a_p`, `p ≤ B` prime, is real-rooted with
/// `|a_p| ≤ 2p^{(k−1)/2}`; exact via Sturm sequences.
pub fn ramanujan_check(f: &Eigenform) -> bool {
    let k = f.field();
    primes_up_to(f.precision() as u64).into_iter().all(|p| {
        let a = f.coeff(p as usize).expect("p ≤ B");
        let mp = k.element_minpoly(a);
        let bound = BigRational::from_integer(BigInt::from(4) * BigInt::from(p).pow((f.weight() - 1) as u32));
        all_roots_real(&mp) && count_roots_above(&squared_roots(&mp), &bound) == 0
    })
}

/// `a_{mn} = a_m a_n` for coprime `m, n` and the prime-power recursion, within precision.
pub fn multiplicativity_check(f: &Eigenform) -> bool {
    let k = f.field();
    let b = f.precision();
    let a = |n: usize| f.coeff(n).unwrap();
    for m in 2..=b {
        for n in 2..=b / m {
            if m.gcd(&n) == 1 && *a(m * n) != k.mul(a(m), a(n)) {
                return false;
            }
        }
    }
    for p in (2..=b).filter(|&p| is_prime_u64(p as u64)) {
        let pk = k.from_int(BigInt::from(p).pow((f.weight() - 1) as u32));
        let mut prev = k.one();
        let mut cur = a(p).clone();
        let mut q = p;
        while q * p <= b {
            let next = k.sub(&k.mul(a(p), &cur), &k.mul(&pk, &prev));
            if *a(q * p) != next {
                return false;
            }
            prev = cur;
            cur = next;
            q *= p;
        }
    }
    true
}
