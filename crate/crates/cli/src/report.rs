//! JSON analysis reports.
//!
//! Big integers and rationals are strings; primes, counts and residue
//! coordinates are plain JSON integers. Every list is in a fixed order,
//! so equal inputs give byte-identical documents.

use eigencong::congruence::{AnalysisReport, Branch, CongruenceWitness, CorollaryVerdict, FormData, PrimeVerdict};
use eigencong::hecke::{multiplicativity_check, ramanujan_check, DiscReport};
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::file::format_rational;

pub const FORMAT: &str = "eigencong-report v1";
pub const BOUND_LIMITED: &str = "bound-limited, not a certification";

pub fn tool_version() -> String {
    format!("eigencong {}", env!("CARGO_PKG_VERSION"))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ReportDocument {
    pub format: String,
    pub tool: String,
    pub provenance: Provenance,
    pub options: OptionsReport,
    /// Level-one Hecke algebra data; absent for ingested forms.
    pub hecke: Option<HeckeReport>,
    pub forms: Vec<FormReport>,
    pub witnesses: Vec<WitnessReport>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case", deny_unknown_fields)]
pub enum Provenance {
    Generated { weight: i64 },
    File { name: String },
    Fetched { id: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OptionsReport {
    pub bound: Option<usize>,
    pub scan: u64,
    pub seed: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HeckeReport {
    pub weight: i64,
    pub dimension: usize,
    pub precision: usize,
    /// `(a, c)` with generator `a·T_2 + c·T_3`.
    pub generator: (i64, i64),
    /// Characteristic polynomial of `T_2`, constant term first.
    pub charpoly_t2: Vec<String>,
    pub disc_t: String,
    pub congruence_module_order: String,
    pub orbit_indices: Vec<String>,
    pub orbit_discs: Vec<String>,
    pub normalization_index: String,
    pub disc_identity_holds: bool,
    pub cross_congruences: Vec<CrossReport>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CrossReport {
    pub p: u64,
    pub pairs: Vec<(usize, usize)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FormReport {
    pub label: String,
    pub weight: i64,
    pub level: u64,
    pub minpoly: Vec<String>,
    pub precision: usize,
    pub index: String,
    pub disc_o: String,
    pub ramified: Vec<u64>,
    pub galois: bool,
    pub closure: ClosureReport,
    pub bound: usize,
    pub sturm_bound: usize,
    pub certified: bool,
    pub note: Option<String>,
    pub sanity: Option<SanityReport>,
    pub verdicts: Vec<VerdictReport>,
    pub corollary: CorollaryReport,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ClosureReport {
    pub degree: usize,
    pub minpoly: Vec<String>,
    pub disc: String,
    /// `[Õ:R]`, absent when `R` spans less than `Õ`.
    pub index: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SanityReport {
    pub multiplicative: bool,
    pub ramanujan: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VerdictReport {
    pub p: u64,
    pub divides_index: bool,
    pub divides_closure_index: bool,
    pub ramifies: bool,
    pub ramifies_in_closure: bool,
    pub inertia_congruences: usize,
    /// Position in the document's witness list.
    pub witness: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case", deny_unknown_fields)]
pub enum CorollaryReport {
    Iff { scan: u64, s1: Vec<u64>, s2: Vec<u64>, consistent: bool },
    OneWay { s1: Vec<u64> },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum BranchReport {
    Ramified,
    Index,
}

/// Everything needed to recheck `a_n ≡ σ(a_n) mod 𝔭` by hand: `σ` as the
/// image of the generator of `K̃`, `𝔭` by a lower-triangular Z-basis in
/// coordinates on `order_basis`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WitnessReport {
    pub form: String,
    pub p: u64,
    pub branch: BranchReport,
    pub acts_on_base: bool,
    pub closure_minpoly: Vec<String>,
    pub sigma: Vec<String>,
    pub order_basis: Vec<Vec<String>>,
    pub prime_basis: Vec<Vec<String>>,
    pub ramification_index: usize,
    pub residue_degree: usize,
    /// Modulus of the residue field `F_p[t]/(m)`, constant term first.
    pub residue_modulus: Vec<u64>,
    pub bound: usize,
    pub log: Vec<ResidueReport>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ResidueReport {
    pub n: usize,
    /// `a_n − σ(a_n) mod 𝔭` on the power basis of the residue field.
    pub residue: Vec<u64>,
    pub in_ideal: bool,
}

impl ReportDocument {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
        s.push('\n');
        s
    }

    pub fn from_json(s: &str) -> serde_json::Result<Self> {
        serde_json::from_str(s)
    }

    /// True when some form was compared below its Sturm bound.
    pub fn bound_limited(&self) -> bool {
        self.forms.iter().any(|f| !f.certified)
    }
}

fn strings(v: &[BigInt]) -> Vec<String> {
    v.iter().map(|c| c.to_string()).collect()
}

fn witness_report(w: &CongruenceWitness) -> WitnessReport {
    let big = w.prime.order();
    let field = big.field();
    let hnf = w.prime.hnf();
    WitnessReport {
        form: w.label.clone(),
        p: w.p,
        branch: match w.branch {
            Branch::Ramified => BranchReport::Ramified,
            Branch::Index => BranchReport::Index,
        },
        acts_on_base: w.acts_on_base,
        closure_minpoly: strings(field.minpoly().coeffs()),
        sigma: w.sigma.image().coords().iter().map(format_rational).collect(),
        order_basis: big.basis().iter().map(|b| b.coords().iter().map(format_rational).collect()).collect(),
        prime_basis: hnf.columns().iter().map(|c| strings(c)).collect(),
        ramification_index: w.prime.ramification_index(),
        residue_degree: w.prime.residue_degree(),
        residue_modulus: w.prime.residue_field().modulus().coeffs().to_vec(),
        bound: w.bound,
        log: w.log.iter().map(|e| ResidueReport { n: e.n, residue: e.residue.clone(), in_ideal: e.in_ideal }).collect(),
    }
}

fn verdict_report(v: &PrimeVerdict, witnesses: &mut Vec<WitnessReport>) -> VerdictReport {
    let witness = v.witness.as_ref().map(|w| {
        witnesses.push(witness_report(w));
        witnesses.len() - 1
    });
    VerdictReport {
        p: v.p,
        divides_index: v.divides_index,
        divides_closure_index: v.divides_closure_index,
        ramifies: v.ramifies,
        ramifies_in_closure: v.ramifies_in_closure,
        inertia_congruences: v.inertia_congruences,
        witness,
    }
}

/// Converts one analysis, appending its witnesses to `witnesses`.
pub fn form_report(fd: &FormData, r: &AnalysisReport, sturm: usize, witnesses: &mut Vec<WitnessReport>) -> FormReport {
    let level_one = r.level == 1;
    FormReport {
        label: r.label.clone(),
        weight: r.weight,
        level: r.level,
        minpoly: strings(&r.minpoly),
        precision: fd.form().precision(),
        index: r.index.to_string(),
        disc_o: r.disc_o.to_string(),
        ramified: r.ramified.clone(),
        galois: r.galois,
        closure: ClosureReport {
            degree: r.closure_degree,
            minpoly: strings(fd.closure().field().minpoly().coeffs()),
            disc: r.closure_disc.to_string(),
            index: r.closure_index.as_ref().map(|i| i.to_string()),
        },
        bound: r.bound,
        sturm_bound: sturm,
        certified: r.certified,
        note: (!r.certified).then(|| BOUND_LIMITED.to_string()),
        // The prime-power recursion and the bound on |a_p| used here are the
        // level-one ones.
        sanity: level_one.then(|| SanityReport {
            multiplicative: multiplicativity_check(fd.form()),
            ramanujan: ramanujan_check(fd.form()),
        }),
        verdicts: r.verdicts.iter().map(|v| verdict_report(v, witnesses)).collect(),
        corollary: match &r.corollary {
            CorollaryVerdict::Iff(g) => {
                CorollaryReport::Iff { scan: g.scan, s1: g.s1.clone(), s2: g.s2.clone(), consistent: g.consistent() }
            }
            CorollaryVerdict::OneWay(s1) => CorollaryReport::OneWay { s1: s1.clone() },
        },
    }
}

pub fn hecke_report(d: &DiscReport, dimension: usize, precision: usize, generator: (i64, i64), charpoly: &[BigInt], cross: Vec<CrossReport>) -> HeckeReport {
    HeckeReport {
        weight: d.weight,
        dimension,
        precision,
        generator,
        charpoly_t2: strings(charpoly),
        disc_t: d.disc_t.to_string(),
        congruence_module_order: d.congruence_module_order.to_string(),
        orbit_indices: strings(&d.orbit_indices),
        orbit_discs: strings(&d.orbit_discs),
        normalization_index: d.normalization_index.to_string(),
        disc_identity_holds: d.holds,
        cross_congruences: cross,
    }
}
