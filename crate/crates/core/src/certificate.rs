//! Product-of-conjugates certificates.
//!
//! A certificate over a source presentation claims
//! `target = ∏ᵢ wᵢ·R_{jᵢ}^{εᵢ}·wᵢ⁻¹` in the free group, which witnesses that
//! `target` lies in the normal closure of the source relators.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::klein::{eval_word, SPoly};
use crate::presentation::Presentation;
use crate::word::Word;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factor {
    pub conjugator: Word,
    pub relator: usize,
    /// `+1` or `−1`.
    pub sign: i8,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjugacyCertificate {
    pub target: Word,
    /// Name of the source presentation, e.g. `P`.
    pub source: String,
    pub factors: Vec<Factor>,
}

#[derive(Serialize, Deserialize)]
struct FactorJson {
    w: String,
    rel: usize,
    sign: i8,
}

#[derive(Serialize, Deserialize)]
struct CertificateJson {
    target: String,
    source: String,
    factors: Vec<FactorJson>,
}

impl Factor {
    pub fn new(conjugator: Word, relator: usize, sign: i8) -> Result<Self> {
        if sign != 1 && sign != -1 {
            return Err(Error::InvalidCertificate(format!("sign {sign} is not ±1")));
        }
        Ok(Factor { conjugator, relator, sign })
    }

    /// `w·R^{ε}·w⁻¹` for the source relator `R`.
    pub fn expand(&self, src: &Presentation) -> Result<Word> {
        let relator = src.relators().get(self.relator).ok_or(Error::RelatorIndex {
            index: self.relator,
            count: src.relators().len(),
        })?;
        Ok(relator.pow(self.sign.into()).conjugate(&self.conjugator))
    }
}

impl ConjugacyCertificate {
    pub fn new(target: Word, source: impl Into<String>, factors: Vec<Factor>) -> Self {
        ConjugacyCertificate {
            target,
            source: source.into(),
            factors,
        }
    }

    /// Parses the JSON form; words are read against the generators of `src`.
    pub fn from_json(text: &str, src: &Presentation) -> Result<Self> {
        let raw: CertificateJson = serde_json::from_str(text)?;
        let gens = src.generators();
        let factors = raw
            .factors
            .iter()
            .map(|f| Factor::new(Word::parse(&f.w, gens)?, f.rel, f.sign))
            .collect::<Result<Vec<_>>>()?;
        Ok(ConjugacyCertificate {
            target: Word::parse(&raw.target, gens)?,
            source: raw.source,
            factors,
        })
    }

    /// Reads only the `source` field of a certificate document.
    pub fn source_of_json(text: &str) -> Result<String> {
        Ok(serde_json::from_str::<CertificateJson>(text)?.source)
    }

    pub fn to_json(&self) -> String {
        let raw = CertificateJson {
            target: self.target.to_string(),
            source: self.source.clone(),
            factors: self
                .factors
                .iter()
                .map(|f| FactorJson {
                    w: f.conjugator.to_string(),
                    rel: f.relator,
                    sign: f.sign,
                })
                .collect(),
        };
        serde_json::to_string_pretty(&raw).expect("certificate serializes")
    }

    /// The freely reduced product of all factors.
    pub fn product(&self, src: &Presentation) -> Result<Word> {
        self.factors.iter().try_fold(Word::identity(), |acc, f| {
            Ok(acc.multiply(&f.expand(src)?))
        })
    }

    /// Multiplies out the factors and compares with the target.
    pub fn check(&self, src: &Presentation) -> Result<bool> {
        Ok(self.product(src)? == self.target)
    }

    fn same_source(&self, other: &ConjugacyCertificate) -> Result<()> {
        if self.source != other.source {
            return Err(Error::IncompatibleSources(self.source.clone(), other.source.clone()));
        }
        Ok(())
    }

    /// Certificate for `self.target · other.target`.
    pub fn concat(&self, other: &ConjugacyCertificate) -> Result<ConjugacyCertificate> {
        self.same_source(other)?;
        let mut factors = self.factors.clone();
        factors.extend(other.factors.iter().cloned());
        Ok(ConjugacyCertificate::new(
            self.target.multiply(&other.target),
            self.source.clone(),
            factors,
        ))
    }

    /// Certificate for `target⁻¹`: factors reversed with flipped signs.
    pub fn invert(&self) -> ConjugacyCertificate {
        let factors = self
            .factors
            .iter()
            .rev()
            .map(|f| Factor {
                conjugator: f.conjugator.clone(),
                relator: f.relator,
                sign: -f.sign,
            })
            .collect();
        ConjugacyCertificate::new(self.target.invert(), self.source.clone(), factors)
    }

    /// Certificate for `u·target·u⁻¹`.
    pub fn conjugate(&self, u: &Word) -> ConjugacyCertificate {
        let factors = self
            .factors
            .iter()
            .map(|f| Factor {
                conjugator: u.multiply(&f.conjugator),
                relator: f.relator,
                sign: f.sign,
            })
            .collect();
        ConjugacyCertificate::new(self.target.conjugate(u), self.source.clone(), factors)
    }

    /// Per-factor contributions `(jᵢ, εᵢ·wᵢ⁻¹)` to the chain-level boundary.
    pub fn factor_contributions(&self, src: &Presentation) -> Result<Vec<(usize, SPoly)>> {
        if !self.check(src)? {
            return Err(Error::InvalidCertificate(format!(
                "factors do not multiply out to {}",
                self.target
            )));
        }
        self.factors
            .iter()
            .map(|f| {
                let image = SPoly::from(eval_word(&f.conjugator.invert())?);
                let signed = if f.sign < 0 { -image } else { image };
                Ok((f.relator, signed))
            })
            .collect()
    }

    /// `j ↦ Σ_{i: jᵢ = j} εᵢ·wᵢ⁻¹` in `S`: the factor by which the boundary of
    /// the target's 2-cell is built from the boundary of source cell `j`.
    ///
    /// In the group ring every conjugate of a relator is 1, so the Fox
    /// derivative of a product of conjugates only sees the conjugators.
    pub fn boundary_factor(&self, src: &Presentation) -> Result<BTreeMap<usize, SPoly>> {
        let mut out: BTreeMap<usize, SPoly> = BTreeMap::new();
        for (j, c) in self.factor_contributions(src)? {
            let entry = out.entry(j).or_default();
            *entry = &*entry + &c;
        }
        Ok(out)
    }
}

/// Whether `p` and `q` have the same normal closure of relators in the free
/// group on their common generators: every relator of `q` has a passing
/// certificate over `p` and vice versa.
pub fn equivalence_verdict(
    p: &Presentation,
    q: &Presentation,
    certs_q_over_p: &[ConjugacyCertificate],
    certs_p_over_q: &[ConjugacyCertificate],
) -> Result<bool> {
    if p.generators() != q.generators() {
        return Err(Error::GeneratorMismatch);
    }
    fn covered(
        targets: &Presentation,
        src: &Presentation,
        certs: &[ConjugacyCertificate],
    ) -> Result<bool> {
        for relator in targets.relators() {
            let mut found = false;
            for c in certs.iter().filter(|c| &c.target == relator) {
                if c.check(src)? {
                    found = true;
                    break;
                }
            }
            if !found {
                return Ok(false);
            }
        }
        Ok(true)
    }
    Ok(covered(q, p, certs_q_over_p)? && covered(p, q, certs_p_over_q)?)
}

/// An equation `lhs = rhs` in the group presented by `source`, carried with a
/// certificate for `lhs·rhs⁻¹`. Used to replay hand proofs as certificates.
#[derive(Clone, Debug)]
pub struct Relation {
    pub lhs: Word,
    pub rhs: Word,
    pub cert: ConjugacyCertificate,
}

impl Relation {
    /// A relator `R` read as `R = 1`.
    pub fn relator(src: &Presentation, source: &str, index: usize) -> Result<Relation> {
        let relator = src.relators().get(index).cloned().ok_or(Error::RelatorIndex {
            index,
            count: src.relators().len(),
        })?;
        let cert = ConjugacyCertificate::new(
            relator.clone(),
            source,
            vec![Factor::new(Word::identity(), index, 1)?],
        );
        Ok(Relation { lhs: relator, rhs: Word::identity(), cert })
    }

    /// Re-targets the certificate to `lhs·rhs⁻¹` for words that agree with
    /// the current ones in the free group.
    pub fn restate(self, lhs: Word, rhs: Word) -> Result<Relation> {
        if lhs.multiply(&rhs.invert()) != self.cert.target {
            return Err(Error::InvalidCertificate(format!(
                "{lhs} = {rhs} is not a free rewrite of {}",
                self.cert.target
            )));
        }
        Ok(Relation { lhs, rhs, cert: self.cert })
    }

    pub fn symmetric(&self) -> Relation {
        Relation {
            lhs: self.rhs.clone(),
            rhs: self.lhs.clone(),
            cert: self.cert.invert(),
        }
    }

    /// `a = b`, `b = c` gives `a = c`.
    pub fn then(&self, next: &Relation) -> Result<Relation> {
        if self.rhs != next.lhs {
            return Err(Error::InvalidCertificate(format!(
                "cannot chain {} with {}",
                self.rhs, next.lhs
            )));
        }
        Ok(Relation {
            lhs: self.lhs.clone(),
            rhs: next.rhs.clone(),
            cert: self.cert.concat(&next.cert)?,
        })
    }

    /// `u·lhs = u·rhs`.
    pub fn left_multiply(&self, u: &Word) -> Relation {
        Relation {
            lhs: u.multiply(&self.lhs),
            rhs: u.multiply(&self.rhs),
            cert: self.cert.conjugate(u),
        }
    }

    /// `lhs·u = rhs·u`
    pub fn right_multiply(&self, u: &Word) -> Relation {
        Relation {
            lhs: self.lhs.multiply(u),
            rhs: self.rhs.multiply(u),
            cert: self.cert.clone(),
        }
    }

    /// `u·lhs·u⁻¹ = u·rhs·u⁻¹`.
    pub fn conjugate(&self, u: &Word) -> Relation {
        Relation {
            lhs: self.lhs.conjugate(u),
            rhs: self.rhs.conjugate(u),
            cert: self.cert.conjugate(u),
        }
    }

    /// `p·lhs·q = p·rhs·q`.
    pub fn in_context(&self, p: &Word, q: &Word) -> Relation {
        self.left_multiply(p).right_multiply(q)
    }
}
