//! Congruences between an eigenform and its Galois conjugates, and between
//! forms of different orbits.

use std::collections::BTreeSet;

use eigencong_kernels::arith::{lcm_usize, prime_divisors, primes_up_to};
use eigencong_kernels::{Field, DEFAULT_SEED};
use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::ToPrimitive;

use crate::closure::{galois_closure_with, GaloisClosureData};
use crate::error::{Error, Result};
use crate::falg::{decompose_seeded, first_collision, homs_from_decomposition};
use crate::finfield::{FfElem, FiniteField};
use crate::hecke::{Eigenform, Orbit};
use crate::numfield::{automorphisms, Automorphism, FieldElement, Limits, NumberField};
use crate::order::{maximal_order_with_hint, order_generated_by, Order};
use crate::prime::{j_group, primes_from_components, split_prime, PrimeIdeal};

/// `⌊k·[SL_2(Z) : Γ_0(N)]/12⌋`; `⌊k/12⌋` at level one.
pub fn sturm_bound_level(k: i64, level: u64) -> usize {
    let mut num = BigUint::from(k.max(0) as u64) * BigUint::from(level);
    let mut den = BigUint::from(12u32);
    for p in prime_divisors(&BigInt::from(level)).expect("word-size integers factor") {
        num *= &p + 1u32;
        den *= &p;
    }
    (num / den).to_usize().unwrap_or(usize::MAX)
}

fn u64_prime(p: &BigUint) -> Result<u64> {
    p.to_u64().ok_or_else(|| Error::Invalid(format!("prime {p} exceeds the word-size bound")))
}

/// An eigenform with everything the congruence checks need: `R ⊆ O ⊆ K`,
/// `Aut(K)`, the Galois closure `K̃` with `Õ`, and `[Õ:R]`.
#[derive(Debug, Clone)]
pub struct FormData {
    pub label: String,
    pub orbit: Orbit,
    automorphisms: Vec<Automorphism>,
    ramified: Vec<u64>,
    index_primes: Vec<u64>,
    closure: GaloisClosureData,
    closure_order: Order,
    closure_ramified: Vec<u64>,
    closure_index: Option<BigInt>,
}

impl FormData {
    pub fn new(label: impl Into<String>, form: Eigenform) -> Result<Self> {
        Self::with_limits(label, form, &Limits::default())
    }

    pub fn with_limits(label: impl Into<String>, form: Eigenform, limits: &Limits) -> Result<Self> {
        let orbit = Orbit::new(form)?;
        let k = orbit.form.field().clone();
        let automorphisms = automorphisms(&k)?;
        let o = &orbit.maximal_order;
        let disc_o = o.disc();
        // Every prime where an order in K or K̃ can be non-maximal divides disc(m).
        let hint: Vec<u64> = prime_divisors(&k.minpoly().discriminant())?.iter().map(u64_prime).collect::<Result<_>>()?;
        let index_primes: Vec<u64> = prime_divisors(&orbit.index)?.iter().map(u64_prime).collect::<Result<_>>()?;
        let ramified: Vec<u64> = hint.iter().copied().filter(|&p| disc_o.is_multiple_of(&BigInt::from(p))).collect();
        let closure = galois_closure_with(&k, limits)?;
        let (closure_order, closure_ramified) = if closure.is_trivial_extension() {
            (o.clone(), ramified.clone())
        } else {
            let start = order_generated_by(closure.field(), closure.roots())?;
            let big = maximal_order_with_hint(&start, &hint)?;
            let d = big.disc();
            let ram = hint.iter().copied().filter(|&p| d.is_multiple_of(&BigInt::from(p))).collect();
            (big, ram)
        };
        let closure_index = if closure.is_trivial_extension() {
            Some(orbit.index.clone())
        } else {
            None
        };
        Ok(FormData {
            label: label.into(),
            orbit,
            automorphisms,
            ramified,
            index_primes,
            closure,
            closure_order,
            closure_ramified,
            closure_index,
        })
    }

    pub fn form(&self) -> &Eigenform {
        &self.orbit.form
    }

    pub fn field(&self) -> &NumberField {
        self.orbit.form.field()
    }

    /// `[O:R]`.
    pub fn index(&self) -> &BigInt {
        &self.orbit.index
    }

    pub fn maximal_order(&self) -> &Order {
        &self.orbit.maximal_order
    }

    pub fn coefficient_order(&self) -> &Order {
        &self.orbit.coefficient_order
    }

    pub fn automorphisms(&self) -> &[Automorphism] {
        &self.automorphisms
    }

    pub fn is_galois(&self) -> bool {
        self.automorphisms.len() == self.field().degree()
    }

    /// Primes ramified in `O`.
    pub fn ramified(&self) -> &[u64] {
        &self.ramified
    }

    pub fn closure(&self) -> &GaloisClosureData {
        &self.closure
    }

    /// `Õ`.
    pub fn closure_order(&self) -> &Order {
        &self.closure_order
    }

    pub fn closure_ramified(&self) -> &[u64] {
        &self.closure_ramified
    }

    /// `[Õ:R]`; `None` when `K̃ ≠ K`, where `R` has smaller rank than `Õ`
    /// and every prime divides the (infinite) index.
    pub fn closure_index(&self) -> Option<&BigInt> {
        self.closure_index.as_ref()
    }

    pub fn divides_index(&self, p: u64) -> bool {
        self.index().is_multiple_of(&BigInt::from(p))
    }

    pub fn divides_closure_index(&self, p: u64) -> bool {
        self.closure_index.as_ref().is_none_or(|i| i.is_multiple_of(&BigInt::from(p)))
    }

    /// `{p : p | disc(O)·[O:R]}`.
    pub fn s1(&self) -> Vec<u64> {
        let mut s: BTreeSet<u64> = self.ramified.iter().copied().collect();
        s.extend(self.index_primes.iter().copied());
        s.into_iter().collect()
    }

    pub fn native_coefficients(&self) -> EmbeddedCoefficients {
        EmbeddedCoefficients { field: self.field().clone(), coeffs: self.form().coeffs().to_vec() }
    }

    pub fn closure_coefficients(&self) -> EmbeddedCoefficients {
        EmbeddedCoefficients::via_closure(self.form(), &self.closure).expect("closure of the form's own field")
    }
}

/// Coefficients `a_1..a_B` placed in a field owning the primes under test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EmbeddedCoefficients {
    field: NumberField,
    coeffs: Vec<FieldElement>,
}

impl EmbeddedCoefficients {
    pub fn native(f: &Eigenform) -> Self {
        Self { field: f.field().clone(), coeffs: f.coeffs().to_vec() }
    }

    pub fn via_closure(f: &Eigenform, closure: &GaloisClosureData) -> Result<Self> {
        if closure.base() != f.field() {
            return Err(Error::EmbeddingFailure("closure of a different field".into()));
        }
        Ok(Self { field: closure.field().clone(), coeffs: f.coeffs().iter().map(|a| closure.embed(a)).collect() })
    }

    pub fn field(&self) -> &NumberField {
        &self.field
    }

    pub fn coeffs(&self) -> &[FieldElement] {
        &self.coeffs
    }
}

/// Residue of `a_n − σ(a_n)` in `O/𝔭`, and lattice membership in `𝔭`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResidueEntry {
    pub n: usize,
    pub residue: FfElem,
    pub in_ideal: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CongruenceCheck {
    pub holds: bool,
    pub log: Vec<ResidueEntry>,
}

/// Whether `a_n ≡ σ(a_n) mod 𝔭` for `n ≤ bound`.
pub fn check_congruence(
    coeffs: &EmbeddedCoefficients,
    sigma: &Automorphism,
    prime: &PrimeIdeal,
    bound: usize,
) -> Result<CongruenceCheck> {
    let k = prime.order().field();
    if coeffs.field() != k || sigma.field() != k {
        return Err(Error::EmbeddingFailure("coefficients, automorphism and prime live in different fields".into()));
    }
    if bound > coeffs.coeffs.len() {
        return Err(Error::InsufficientPrecision(format!("bound {bound} exceeds {} coefficients", coeffs.coeffs.len())));
    }
    let mut log = Vec::with_capacity(bound);
    for (i, a) in coeffs.coeffs.iter().take(bound).enumerate() {
        let diff = k.sub(a, &sigma.apply(a));
        let residue = prime
            .reduce(&diff)
            .ok_or_else(|| Error::EmbeddingFailure(format!("a_{} is not in the order of the prime", i + 1)))?;
        let in_ideal = prime.contains(&diff);
        if in_ideal != prime.residue_field().is_zero(&residue) {
            return Err(Error::Invalid(format!("residue map and lattice disagree at a_{}", i + 1)));
        }
        log.push(ResidueEntry { n: i + 1, residue, in_ideal });
    }
    Ok(CongruenceCheck { holds: log.iter().all(|e| e.in_ideal), log })
}

/// The disjuncts of the first statement of the proposition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Prop1Verdict {
    pub j_element: Option<Automorphism>,
    pub index_divisible: bool,
}

/// Given `f ≡ σ(f) mod 𝔭` with `σ ≠ 1`: `J_𝔭 ≠ 1` or `p | [O:R]`.
pub fn prop1_forward(fd: &FormData, sigma: &Automorphism, prime: &PrimeIdeal, bound: usize) -> Result<Prop1Verdict> {
    if sigma.is_identity() {
        return Err(Error::HypothesisUnmet("σ is the identity".into()));
    }
    if prime.order() != fd.maximal_order() {
        return Err(Error::EmbeddingFailure("prime is not a prime of O".into()));
    }
    if !check_congruence(&fd.native_coefficients(), sigma, prime, bound)?.holds {
        return Err(Error::HypothesisUnmet(format!("f is not congruent to σ(f) modulo the prime above {}", prime.p())));
    }
    let j = j_group(prime, fd.automorphisms())?;
    let verdict = Prop1Verdict { j_element: j.nontrivial().next().cloned(), index_divisible: fd.divides_index(prime.p()) };
    if verdict.j_element.is_none() && !verdict.index_divisible {
        return Err(Error::PropositionViolated(format!(
            "J is trivial at the prime above {} and {} ∤ [O:R]",
            prime.p(),
            prime.p()
        )));
    }
    Ok(verdict)
}

/// Second statement: every nontrivial `σ ∈ J_𝔭` gives `f ≡ σ(f) mod 𝔭`.
pub fn prop1_inertia(fd: &FormData, prime: &PrimeIdeal, bound: usize) -> Result<Vec<Automorphism>> {
    let j = j_group(prime, fd.automorphisms())?;
    let coeffs = fd.native_coefficients();
    let mut out = Vec::new();
    for s in j.nontrivial() {
        if !check_congruence(&coeffs, s, prime, bound)?.holds {
            return Err(Error::PropositionViolated(format!("an element of J fails at the prime above {}", prime.p())));
        }
        out.push(s.clone());
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Branch {
    Ramified,
    Index,
}

/// `(σ, 𝔭)` in `K̃` with `a_n ≡ σ(a_n) mod 𝔭` for `n ≤ bound`.
#[derive(Debug, Clone)]
pub struct CongruenceWitness {
    pub label: String,
    pub p: u64,
    pub sigma: Automorphism,
    pub prime: PrimeIdeal,
    pub branch: Branch,
    pub bound: usize,
    pub log: Vec<ResidueEntry>,
    /// `σ` moves the image of `K` in `K̃`.
    pub acts_on_base: bool,
}

/// The theorem's construction at `p`.
pub fn find_witness(fd: &FormData, p: u64, bound: usize) -> Result<CongruenceWitness> {
    find_witness_seeded(fd, p, bound, DEFAULT_SEED)
}

/// As [`find_witness`]; `seed` drives the randomized splitting of `Õ/pÕ`.
/// The witness returned does not depend on it.
pub fn find_witness_seeded(fd: &FormData, p: u64, bound: usize, seed: u64) -> Result<CongruenceWitness> {
    let ramifies = fd.closure_ramified().contains(&p);
    if !ramifies && !fd.divides_closure_index(p) {
        return Err(Error::HypothesisUnmet(format!("{p} is unramified in Õ and does not divide [Õ:R]")));
    }
    let (sigma, prime, branch) = if ramifies { ramified_witness(fd, p)? } else { index_witness(fd, p, seed)? };
    let coeffs = fd.closure_coefficients();
    let check = check_congruence(&coeffs, &sigma, &prime, bound)?;
    let big = fd.closure().field();
    let on_r = fd.coefficient_order().basis().iter().all(|b| {
        let x = fd.closure().embed(b);
        prime.contains(&big.sub(&x, &sigma.apply(&x)))
    });
    if sigma.is_identity() || !check.holds || !on_r {
        return Err(Error::WitnessVerificationFailed(format!("{} at {p}", fd.label)));
    }
    let acts_on_base = !fd.closure().fixes_base(&sigma);
    Ok(CongruenceWitness {
        label: fd.label.clone(),
        p,
        sigma,
        prime,
        branch,
        bound,
        log: check.log,
        acts_on_base,
    })
}

/// A nontrivial inertia element at the first ramified prime above `p`.
fn ramified_witness(fd: &FormData, p: u64) -> Result<(Automorphism, PrimeIdeal, Branch)> {
    let primes = split_prime(fd.closure_order(), p)?;
    let prime = primes
        .into_iter()
        .find(|q| q.ramification_index() > 1)
        .ok_or_else(|| Error::Invalid(format!("{p} divides disc(Õ) but no prime above it ramifies")))?;
    let j = j_group(&prime, fd.closure().group())?;
    let sigma = j
        .nontrivial()
        .next()
        .cloned()
        .ok_or_else(|| Error::Invalid(format!("trivial inertia at a ramified prime above {p}")))?;
    Ok((sigma, prime, Branch::Ramified))
}

/// The unramified branch: a colliding pair of homs `Õ/pÕ → F_{p^L}` that
/// agree on the image of `R`, transported to an automorphism.
fn index_witness(fd: &FormData, p: u64, seed: u64) -> Result<(Automorphism, PrimeIdeal, Branch)> {
    let big = fd.closure_order();
    let a = big.quotient_mod_p(p)?;
    let dec = decompose_seeded(&a, seed)?;
    let homs = homs_from_decomposition(&dec)?;
    let primes = primes_from_components(big, p, &dec)?;
    for (q, c) in primes.iter().zip(&dec.components) {
        if q.residue_images() != c.projection.as_slice() {
            return Err(Error::Invalid("component projection is not the canonical residue map".into()));
        }
    }
    let r_images: Vec<FieldElement> = fd.coefficient_order().basis().iter().map(|b| fd.closure().embed(b)).collect();
    let gens = r_images
        .iter()
        .map(|x| big.reduce_mod_p(x, p).ok_or(Error::NotSublattice))
        .collect::<Result<Vec<_>>>()?;
    let sub = a.subalgebra_image(&gens)?;
    let (i1, i2) = first_collision(&homs, &sub)
        .ok_or_else(|| Error::Invalid(format!("image of R/{p}R is all of Õ/{p}Õ")))?;
    let (h1, h2) = (&homs[i1], &homs[i2]);
    let (pj, pk) = (&primes[h1.component], &primes[h2.component]);
    let field = pj.residue_field().clone();
    let f = field.degree();
    if pk.residue_degree() != f {
        return Err(Error::Invalid("residue degrees differ in a Galois extension".into()));
    }
    // φ(a + 𝔭_j) = a + 𝔭_k on R, as a Frobenius power on canonical models.
    let shift = (h1.frobenius + f - h2.frobenius % f) % f;
    let phi = |x: &FfElem| field.frobenius_power(x, shift);
    for x in &r_images {
        if pk.reduce(x) != pj.reduce(x).map(|y| phi(&y)) {
            return Err(Error::Invalid("collision does not induce φ on R".into()));
        }
    }
    let group = fd.closure().group();
    let sigma = group
        .iter()
        .find(|s| pj.maps_into(s, pk))
        .ok_or_else(|| Error::Invalid("no automorphism carries 𝔭_j to 𝔭_k".into()))?;
    // τ in the decomposition group of 𝔭_j with σ̄ ∘ τ̄ = φ.
    let tau = group
        .iter()
        .filter(|t| pj.maps_into(t, pj))
        .find(|t| {
            big.basis().iter().all(|b| {
                let lhs = pk.reduce(&sigma.apply(&t.apply(b)));
                lhs.is_some() && lhs == pj.reduce(b).map(|y| phi(&y))
            })
        })
        .ok_or_else(|| Error::Invalid("decomposition group does not realize φ".into()))?;
    let w = tau.inverse().compose(&sigma.inverse());
    Ok((w, pj.clone(), Branch::Index))
}

/// Exhaustive search over nontrivial `σ ∈ Aut(K)` and primes of `O` above `p`.
pub fn search_witness(fd: &FormData, p: u64, bound: usize) -> Result<Option<(Automorphism, PrimeIdeal)>> {
    let nontrivial: Vec<&Automorphism> = fd.automorphisms().iter().filter(|s| !s.is_identity()).collect();
    if nontrivial.is_empty() {
        return Ok(None);
    }
    let coeffs = fd.native_coefficients();
    for q in split_prime(fd.maximal_order(), p)? {
        for s in &nontrivial {
            if check_congruence(&coeffs, s, &q, bound)?.holds {
                return Ok(Some(((*s).clone(), q)));
            }
        }
    }
    Ok(None)
}

/// Both sides of the Galois-case equivalence over a scanned range.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GaloisIff {
    pub scan: u64,
    pub s1: Vec<u64>,
    pub s2: Vec<u64>,
}

impl GaloisIff {
    pub fn consistent(&self) -> bool {
        self.s1 == self.s2
    }
}

pub fn verify_galois_iff(fd: &FormData, scan: u64, bound: usize) -> Result<GaloisIff> {
    if !fd.is_galois() {
        return Err(Error::NotGalois);
    }
    let s1 = fd.s1();
    let candidates: BTreeSet<u64> = primes_up_to(scan).into_iter().chain(s1.iter().copied()).collect();
    let mut s2 = Vec::new();
    for p in candidates {
        if search_witness(fd, p, bound)?.is_some() {
            s2.push(p);
        }
    }
    Ok(GaloisIff { scan, s1, s2 })
}

/// Reductions `T → F_{p^L}` of the eigenforms of one orbit.
#[derive(Debug, Clone)]
struct ReducedSystems {
    ramified: bool,
    systems: Vec<Vec<FfElem>>,
}

fn reduced_systems(forms: &[&Orbit], p: u64, bound: usize) -> Result<(FiniteField, Vec<ReducedSystems>)> {
    let split: Vec<Vec<PrimeIdeal>> = forms.iter().map(|o| split_prime(&o.maximal_order, p)).collect::<Result<_>>()?;
    let l = split.iter().flatten().fold(1, |acc, q| lcm_usize(acc, q.residue_degree()));
    let target = FiniteField::new(p, l)?;
    let mut out = Vec::new();
    for (o, primes) in forms.iter().zip(&split) {
        if bound > o.form.precision() {
            return Err(Error::InsufficientPrecision(format!("bound {bound} exceeds {}", o.form.precision())));
        }
        let mut systems = Vec::new();
        for q in primes {
            let iota = target.roots_of_base(q.residue_field().modulus())?.into_iter().next().expect("subfield embeds");
            let base: Vec<FfElem> = o.form.coeffs()[..bound]
                .iter()
                .map(|a| target.embed(&q.reduce(a).expect("coefficients are integral"), &iota))
                .collect();
            for t in 0..q.residue_degree() {
                systems.push(base.iter().map(|x| target.frobenius_power(x, t)).collect());
            }
        }
        out.push(ReducedSystems { ramified: primes.iter().any(|q| q.ramification_index() > 1), systems });
    }
    Ok((target, out))
}

/// Two of the normalized eigenforms (conjugate or not) agree modulo a prime
/// above `p` on `a_n`, `n ≤ bound`.
pub fn characteristic_p_congruence(orbits: &[Orbit], p: u64, bound: usize) -> Result<bool> {
    let refs: Vec<&Orbit> = orbits.iter().collect();
    let (_, red) = reduced_systems(&refs, p, bound)?;
    if red.iter().any(|r| r.ramified) {
        return Ok(true);
    }
    let all: Vec<&Vec<FfElem>> = red.iter().flat_map(|r| &r.systems).collect();
    let distinct: BTreeSet<&Vec<FfElem>> = all.iter().copied().collect();
    Ok(distinct.len() < all.len())
}

/// Pairs `(i, j)`, `i < j`, of orbits with congruent members modulo a prime
/// above `p`, comparing `a_n` for `n ≤ bound`.
pub fn cross_congruences(orbits: &[Orbit], p: u64, bound: usize) -> Result<Vec<(usize, usize)>> {
    let weights: BTreeSet<(i64, u64)> = orbits.iter().map(|o| (o.form.weight(), o.form.level())).collect();
    if weights.len() > 1 {
        return Err(Error::Invalid("forms of different weight or level".into()));
    }
    let refs: Vec<&Orbit> = orbits.iter().collect();
    let (_, red) = reduced_systems(&refs, p, bound)?;
    let mut out = Vec::new();
    for i in 0..red.len() {
        let mine: BTreeSet<&Vec<FfElem>> = red[i].systems.iter().collect();
        for (j, other) in red.iter().enumerate().skip(i + 1) {
            if other.systems.iter().any(|s| mine.contains(s)) {
                out.push((i, j));
            }
        }
    }
    Ok(out)
}

/// Per-prime findings for one orbit.
#[derive(Debug, Clone)]
pub struct PrimeVerdict {
    pub p: u64,
    pub divides_index: bool,
    pub divides_closure_index: bool,
    pub ramifies: bool,
    pub ramifies_in_closure: bool,
    pub witness: Option<CongruenceWitness>,
    /// Nontrivial elements of `J_𝔭` over primes of `O` above `p`, each
    /// confirmed to give a congruence.
    pub inertia_congruences: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CorollaryVerdict {
    /// `K` Galois: both sides of the equivalence.
    Iff(GaloisIff),
    /// `K` not Galois: every `p | disc(O)·[O:R]` has a witness over `K̃`.
    OneWay(Vec<u64>),
}

#[derive(Debug, Clone)]
pub struct AnalysisReport {
    pub label: String,
    pub weight: i64,
    pub level: u64,
    pub minpoly: Vec<BigInt>,
    pub index: BigInt,
    pub disc_o: BigInt,
    pub ramified: Vec<u64>,
    pub galois: bool,
    pub closure_degree: usize,
    pub closure_disc: BigInt,
    pub closure_index: Option<BigInt>,
    pub bound: usize,
    /// `bound` reaches the Sturm bound, so congruences are certified.
    pub certified: bool,
    pub verdicts: Vec<PrimeVerdict>,
    pub corollary: CorollaryVerdict,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AnalysisOptions {
    /// Coefficients compared; defaults to the Sturm bound, clipped to what
    /// the form carries.
    pub bound: Option<usize>,
    pub scan: u64,
    pub seed: u64,
}

impl Default for AnalysisOptions {
    fn default() -> Self {
        Self { bound: None, scan: 1000, seed: DEFAULT_SEED }
    }
}

pub fn analyze(fd: &FormData, opts: &AnalysisOptions) -> Result<AnalysisReport> {
    let f = fd.form();
    let sturm = sturm_bound_level(f.weight(), f.level()).max(1);
    let bound = opts.bound.unwrap_or(sturm).min(f.precision());
    let certified = bound >= sturm;

    let s1 = fd.s1();
    let mut primes: BTreeSet<u64> = s1.iter().copied().collect();
    primes.extend(fd.closure_ramified().iter().copied());
    if let Some(i) = fd.closure_index() {
        for p in prime_divisors(i)? {
            primes.insert(u64_prime(&p)?);
        }
    }
    let mut verdicts = Vec::new();
    for &p in &primes {
        let ramifies_in_closure = fd.closure_ramified().contains(&p);
        let divides_closure_index = fd.divides_closure_index(p);
        let witness = if ramifies_in_closure || divides_closure_index { Some(find_witness_seeded(fd, p, bound, opts.seed)?) } else { None };
        let mut inertia_congruences = 0;
        if fd.ramified().contains(&p) {
            for q in split_prime(fd.maximal_order(), p)? {
                inertia_congruences += prop1_inertia(fd, &q, bound)?.len();
            }
        }
        verdicts.push(PrimeVerdict {
            p,
            divides_index: fd.divides_index(p),
            divides_closure_index,
            ramifies: fd.ramified().contains(&p),
            ramifies_in_closure,
            witness,
            inertia_congruences,
        });
    }
    for &p in &s1 {
        let v = verdicts.iter().find(|v| v.p == p).expect("S1 primes are analyzed");
        if v.witness.is_none() {
            return Err(Error::CorollaryViolated(format!("{p} divides disc(O)·[O:R] but has no witness")));
        }
    }
    let corollary = if fd.is_galois() {
        let iff = verify_galois_iff(fd, opts.scan, bound)?;
        if !iff.consistent() {
            return Err(Error::CorollaryViolated(format!("S1 = {:?} but witnesses at {:?}", iff.s1, iff.s2)));
        }
        CorollaryVerdict::Iff(iff)
    } else {
        CorollaryVerdict::OneWay(s1)
    };
    let minpoly = fd.field().minpoly().coeffs().to_vec();
    Ok(AnalysisReport {
        label: fd.label.clone(),
        weight: f.weight(),
        level: f.level(),
        minpoly,
        index: fd.index().clone(),
        disc_o: fd.maximal_order().disc(),
        ramified: fd.ramified().to_vec(),
        galois: fd.is_galois(),
        closure_degree: fd.closure().field().degree(),
        closure_disc: fd.closure_order().disc(),
        closure_index: fd.closure_index().cloned(),
        bound,
        certified,
        verdicts,
        corollary,
    })
}
