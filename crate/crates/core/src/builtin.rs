//! Data shipped with the library: the Klein bottle presentation `P`, the
//! two-relator presentation `Q`, the certificates relating them and the
//! Bézout witness for `r = x³ − x − 1`, `s = −x⁻¹`.

use crate::certificate::ConjugacyCertificate;
use crate::presentation::Presentation;
use crate::stafford::BezoutWitness;

pub const P_JSON: &str = include_str!("../data/P.json");
pub const Q_JSON: &str = include_str!("../data/Q.json");
pub const Q1_OVER_P_JSON: &str = include_str!("../data/q1_over_p.json");
pub const Q2_OVER_P_JSON: &str = include_str!("../data/q2_over_p.json");
/// `P`'s relator as a product of conjugates of `Q`'s relators.
pub const P_OVER_Q_JSON: &str = include_str!("../data/p_over_q.json");
pub const BEZOUT_JSON: &str = include_str!("../data/bezout.json");

/// `⟨x, y | y⁻¹xyx⟩`
pub fn p() -> Presentation {
    Presentation::from_json(P_JSON).expect("built-in P parses")
}

/// `⟨x, y | y⁻²xy²x⁻¹, x⁻³y⁻¹xyx²y⁻¹x⁻²y⟩`
pub fn q() -> Presentation {
    Presentation::from_json(Q_JSON).expect("built-in Q parses")
}

/// Looks up a built-in presentation by the name used in certificate files.
pub fn presentation(name: &str) -> Option<Presentation> {
    match name {
        "P" => Some(p()),
        "Q" => Some(q()),
        _ => None,
    }
}

pub fn q_over_p() -> Vec<ConjugacyCertificate> {
    let p = p();
    [Q1_OVER_P_JSON, Q2_OVER_P_JSON]
        .iter()
        .map(|text| ConjugacyCertificate::from_json(text, &p).expect("built-in certificate parses"))
        .collect()
}

pub fn p_over_q() -> ConjugacyCertificate {
    ConjugacyCertificate::from_json(P_OVER_Q_JSON, &q()).expect("built-in certificate parses")
}

pub fn bezout_witness() -> BezoutWitness {
    BezoutWitness::from_json(BEZOUT_JSON).expect("built-in witness parses")
}

/// Every built-in certificate.
pub fn certificates() -> Vec<ConjugacyCertificate> {
    let mut all = q_over_p();
    all.push(p_over_q());
    all
}
