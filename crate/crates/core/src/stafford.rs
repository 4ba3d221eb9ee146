//! Chain data of `P` and `Q`, the map `ψ: S² → S`, the Bézout witness and
//! its splitting, Stafford's two conditions, and the combined verdict.
//!
//! `ψ(u, v) = (y + s)·u + r·v`. With the standard instance its kernel is the
//! second homotopy module of the presentation complex of `Q`, and
//! `v ↦ (−lift(v), v)` identifies it with `V`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::builtin;
use crate::certificate::{equivalence_verdict, ConjugacyCertificate};
use crate::error::{Error, Result};
use crate::klein::{eval_combo, SPoly};
use crate::laurent::RPoly;
use crate::presentation::{boundary_matrices, Presentation};
use crate::skew::{in_v, no_monic_degree_one, witnesses, StaffordInstance};

/// `ψ(u, v) = (y + s)·u + r·v`.
pub fn psi(u: &SPoly, v: &SPoly, inst: &StaffordInstance) -> SPoly {
    &(&inst.y_plus_s() * u) + &(&SPoly::from_r(inst.r().clone()) * v)
}

/// `alpha, beta` with `r·alpha + (y + s)·beta = 1`, i.e. `ψ(beta, alpha) = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BezoutWitness {
    pub alpha: SPoly,
    pub beta: SPoly,
}

#[derive(Serialize, Deserialize)]
struct BezoutJson {
    alpha: String,
    beta: String,
}

impl BezoutWitness {
    pub fn new(alpha: SPoly, beta: SPoly) -> Self {
        BezoutWitness { alpha, beta }
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let raw: BezoutJson = serde_json::from_str(text)?;
        Ok(BezoutWitness {
            alpha: raw.alpha.parse()?,
            beta: raw.beta.parse()?,
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&BezoutJson {
            alpha: self.alpha.to_string(),
            beta: self.beta.to_string(),
        })
        .expect("witness serializes")
    }

    /// The section `t(1) = (beta, alpha)`.
    pub fn section(&self) -> [SPoly; 2] {
        [self.beta.clone(), self.alpha.clone()]
    }
}

pub fn verify_bezout(w: &BezoutWitness, inst: &StaffordInstance) -> bool {
    let lhs = &(&SPoly::from_r(inst.r().clone()) * &w.alpha) + &(&inst.y_plus_s() * &w.beta);
    lhs.is_one()
}

type Matrix2 = [[SPoly; 2]; 2];

fn mat_mul(a: &Matrix2, b: &Matrix2) -> Matrix2 {
    let entry = |i: usize, j: usize| &(&a[i][0] * &b[0][j]) + &(&a[i][1] * &b[1][j]);
    [[entry(0, 0), entry(0, 1)], [entry(1, 0), entry(1, 1)]]
}

/// The idempotent `π = id − t∘ψ` on `S²` built from a Bézout witness.
///
/// Homomorphisms of right modules act by left multiplication on columns,
/// so `ψ` is the row `[y + s, r]`, `t` the column `[beta, alpha]` and
/// `π = I − t·ψ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Splitting {
    pub psi_row: [SPoly; 2],
    pub section: [SPoly; 2],
    pub projection: Matrix2,
}

impl Splitting {
    pub fn new(w: &BezoutWitness, inst: &StaffordInstance) -> Self {
        let psi_row = [inst.y_plus_s(), SPoly::from_r(inst.r().clone())];
        let section = w.section();
        let one = SPoly::one();
        let entry = |i: usize, j: usize| {
            let t_psi = &section[i] * &psi_row[j];
            if i == j {
                &one - &t_psi
            } else {
                -t_psi
            }
        };
        let projection = [[entry(0, 0), entry(0, 1)], [entry(1, 0), entry(1, 1)]];
        Splitting { psi_row, section, projection }
    }

    pub fn apply_psi(&self, v: &[SPoly; 2]) -> SPoly {
        &(&self.psi_row[0] * &v[0]) + &(&self.psi_row[1] * &v[1])
    }

    pub fn apply_projection(&self, v: &[SPoly; 2]) -> [SPoly; 2] {
        let row = |i: usize| &(&self.projection[i][0] * &v[0]) + &(&self.projection[i][1] * &v[1]);
        [row(0), row(1)]
    }

    pub fn psi_of_section_is_identity(&self) -> bool {
        self.apply_psi(&self.section).is_one()
    }

    pub fn projection_is_idempotent(&self) -> bool {
        mat_mul(&self.projection, &self.projection) == self.projection
    }

    /// `ψ∘π` vanishes on both basis vectors.
    pub fn projection_lands_in_kernel(&self) -> bool {
        (0..2).all(|j| {
            let column = [self.projection[0][j].clone(), self.projection[1][j].clone()];
            self.apply_psi(&column).is_zero()
        })
    }
}

/// `ψ∘t = id`, `π² = π` and `ψ∘π = 0`, checked exactly.
pub fn splitting_check(w: &BezoutWitness, inst: &StaffordInstance) -> bool {
    let sp = Splitting::new(w, inst);
    sp.psi_of_section_is_identity() && sp.projection_is_idempotent() && sp.projection_lands_in_kernel()
}

/// Evaluated boundary maps of `P` and `Q` over the common generators `x, y`
/// (edge order `x`, `y`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainData {
    /// Boundary of the single 2-cell `D` of `P`.
    pub d2_p: Vec<SPoly>,
    /// Boundaries of the 2-cells `D₁, D₂` of `Q`.
    pub d2_q: Vec<Vec<SPoly>>,
    pub d1: Vec<SPoly>,
}

impl ChainData {
    pub fn build(p: &Presentation, q: &Presentation) -> Result<Self> {
        if p.generators() != q.generators() {
            return Err(Error::GeneratorMismatch);
        }
        let bp = boundary_matrices(p, eval_combo)?;
        let bq = boundary_matrices(q, eval_combo)?;
        let d2_p = bp.d2.into_iter().next().ok_or_else(|| {
            Error::InvalidCertificate("P must have at least one relator".into())
        })?;
        Ok(ChainData { d2_p, d2_q: bq.d2, d1: bp.d1 })
    }

    pub fn builtin() -> Self {
        ChainData::build(&builtin::p(), &builtin::q()).expect("built-in chain data")
    }

    fn composite(&self, row: &[SPoly]) -> SPoly {
        row.iter()
            .zip(&self.d1)
            .fold(SPoly::zero(), |acc, (entry, edge)| &acc + &(edge * entry))
    }

    /// `d₁∘d₂ = 0` for both presentations.
    pub fn composites_vanish(&self) -> bool {
        self.composite(&self.d2_p).is_zero() && self.d2_q.iter().all(|row| self.composite(row).is_zero())
    }
}

/// `y − x⁻¹` and `x³ − x − 1`.
pub fn standard_factors() -> [SPoly; 2] {
    [
        &SPoly::y_pow(1) - &SPoly::x_pow(-1),
        SPoly::from_r(RPoly::from_terms([(3, 1), (1, -1), (0, -1)])),
    ]
}

/// Whether each row of `rows` equals `base·factor` entrywise.
pub fn rows_factor_through(base: &[SPoly], rows: &[Vec<SPoly>], factors: &[SPoly]) -> bool {
    rows.len() == factors.len()
        && rows.iter().zip(factors).all(|(row, factor)| {
            row.len() == base.len() && row.iter().zip(base).all(|(entry, b)| *entry == b * factor)
        })
}

/// `d₂′(D₁) = d₂(D)·(y − x⁻¹)` and `d₂′(D₂) = d₂(D)·(x³ − x − 1)`.
pub fn verify_factorization(chains: &ChainData) -> bool {
    rows_factor_through(&chains.d2_p, &chains.d2_q, &standard_factors())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StaffordVerdict {
    pub condition_i: bool,
    pub condition_ii: bool,
    pub witnesses_ok: bool,
}

pub fn stafford_verdict(inst: &StaffordInstance, w: &BezoutWitness) -> StaffordVerdict {
    let condition_i = psi(&w.beta, &w.alpha, inst).is_one();
    let condition_ii = no_monic_degree_one(inst);
    let witnesses_ok = match witnesses(inst) {
        Ok(found) => {
            in_v(&found.degree_one, inst)
                && found.degree_one.y_span() == Some(1)
                && found.degree_one.leading_coefficient().is_some_and(|c| !c.is_unit())
                && in_v(&found.monic, inst)
                && found.monic.leading_coefficient().is_some_and(RPoly::is_one)
                && condition_ii
        }
        Err(_) => false,
    };
    StaffordVerdict { condition_i, condition_ii, witnesses_ok }
}

/// Everything the verdict depends on.
#[derive(Clone, Debug)]
pub struct ReportInputs {
    pub p: Presentation,
    pub q: Presentation,
    pub q_over_p: Vec<ConjugacyCertificate>,
    pub p_over_q: Vec<ConjugacyCertificate>,
    pub instance: StaffordInstance,
    pub witness: BezoutWitness,
}

impl ReportInputs {
    pub fn builtin() -> Self {
        ReportInputs {
            p: builtin::p(),
            q: builtin::q(),
            q_over_p: builtin::q_over_p(),
            p_over_q: vec![builtin::p_over_q()],
            instance: StaffordInstance::standard(),
            witness: builtin::bezout_witness(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportEcho {
    pub p: String,
    pub q: String,
    pub chi_p: i64,
    pub chi_q: i64,
    pub r: String,
    pub s: String,
    pub alpha: String,
    pub beta: String,
    pub degree_one_witness: Option<String>,
    pub monic_witness: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NonFreenessReport {
    pub chi_ok: bool,
    pub pi1_ok: bool,
    pub factorization_ok: bool,
    pub bezout_ok: bool,
    pub splitting_ok: bool,
    pub condition_i: bool,
    pub condition_ii: bool,
    pub witnesses_ok: bool,
    pub theorem_a: bool,
    pub failures: Vec<String>,
    pub inputs: ReportEcho,
}

impl NonFreenessReport {
    /// `(flag name, description, value)` in report order.
    pub fn flags(&self) -> [(&'static str, &'static str, bool); 9] {
        [
            ("chi_ok", "Euler characteristics chi(Q) = 1 = chi(K with bubble), chi(P) = 0", self.chi_ok),
            ("pi1_ok", "P and Q present the same group (certificates in both directions)", self.pi1_ok),
            ("factorization_ok", "d2'(D1) = d2(D)(y - x^-1) and d2'(D2) = d2(D)(x^3 - x - 1)", self.factorization_ok),
            ("bezout_ok", "(x^3-x-1)(x^-3-x^-4-y^-1) - (y-x^-1)(x^4-x^2-x)y^-1 = 1", self.bezout_ok),
            ("splitting_ok", "ker psi + S = S^2: psi t = id, pi^2 = pi, psi pi = 0", self.splitting_ok),
            ("condition_i", "rS + (y+s)S = S", self.condition_i),
            ("condition_ii", "s r^sigma not in rR (x^3-x-1 does not divide x^3+x^2-1)", self.condition_ii),
            ("witnesses_ok", "V has degree-one and monic elements but no monic degree-one element", self.witnesses_ok),
            ("theorem_a", "H2 of the universal cover of X_Q is stably free and not free", self.theorem_a),
        ]
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

impl fmt::Display for NonFreenessReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (name, description, ok) in self.flags() {
            let mark = if ok { "PASS" } else { "FAIL" };
            writeln!(f, "[{mark}] {name:<16} {description}")?;
        }
        let e = &self.inputs;
        writeln!(f, "P = {}  (chi = {})", e.p, e.chi_p)?;
        writeln!(f, "Q = {}  (chi = {})", e.q, e.chi_q)?;
        writeln!(f, "r = {}, s = {}", e.r, e.s)?;
        writeln!(f, "alpha = {}, beta = {}", e.alpha, e.beta)?;
        if let Some(w) = &e.degree_one_witness {
            writeln!(f, "degree-one element of V: {w}")?;
        }
        if let Some(w) = &e.monic_witness {
            writeln!(f, "monic element of V: {w}")?;
        }
        for failure in &self.failures {
            writeln!(f, "failure: {failure}")?;
        }
        Ok(())
    }
}

/// Runs every check on `inputs`. Errors become `false` flags plus an entry
/// in `failures`; nothing aborts.
pub fn build_report(inputs: &ReportInputs) -> NonFreenessReport {
    let mut failures = Vec::new();
    let mut record = |label: &str, result: Result<bool>| match result {
        Ok(ok) => ok,
        Err(e) => {
            failures.push(format!("{label}: {e}"));
            false
        }
    };

    let chi_p = inputs.p.euler_characteristic();
    let chi_q = inputs.q.euler_characteristic();
    // K with a bubble: chi(K) + 1
    let chi_ok = chi_q == 1 && chi_p == 0 && chi_q == chi_p + 1;

    let pi1_ok = record(
        "presentation equivalence",
        equivalence_verdict(&inputs.p, &inputs.q, &inputs.q_over_p, &inputs.p_over_q),
    );

    let factorization_ok = record(
        "factorization",
        ChainData::build(&inputs.p, &inputs.q).map(|chains| {
            let certified = inputs.q.relators().iter().zip(standard_factors()).all(|(relator, factor)| {
                inputs.q_over_p.iter().any(|c| {
                    &c.target == relator
                        && c.boundary_factor(&inputs.p).is_ok_and(|m| m.len() == 1 && m.get(&0) == Some(&factor))
                })
            });
            chains.composites_vanish() && verify_factorization(&chains) && certified
        }),
    );

    let inst = &inputs.instance;
    let bezout_ok = verify_bezout(&inputs.witness, inst);
    let splitting_ok = bezout_ok && splitting_check(&inputs.witness, inst);
    let verdict = stafford_verdict(inst, &inputs.witness);
    let found = witnesses(inst);
    if let Err(e) = &found {
        failures.push(format!("witnesses: {e}"));
    }

    let theorem_a = chi_ok
        && pi1_ok
        && factorization_ok
        && bezout_ok
        && splitting_ok
        && verdict.condition_i
        && verdict.condition_ii
        && verdict.witnesses_ok;

    NonFreenessReport {
        chi_ok,
        pi1_ok,
        factorization_ok,
        bezout_ok,
        splitting_ok,
        condition_i: verdict.condition_i,
        condition_ii: verdict.condition_ii,
        witnesses_ok: verdict.witnesses_ok,
        theorem_a,
        failures,
        inputs: ReportEcho {
            p: inputs.p.to_string(),
            q: inputs.q.to_string(),
            chi_p,
            chi_q,
            r: inst.r().to_string(),
            s: inst.s().to_string(),
            alpha: inputs.witness.alpha.to_string(),
            beta: inputs.witness.beta.to_string(),
            degree_one_witness: found.as_ref().ok().map(|w| w.degree_one.to_string()),
            monic_witness: found.as_ref().ok().map(|w| w.monic.to_string()),
        },
    }
}

/// The verdict for the built-in data.
pub fn theorem_a_report() -> NonFreenessReport {
    build_report(&ReportInputs::builtin())
}
