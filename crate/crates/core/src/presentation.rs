//! Finite presentations, Fox derivatives and the boundary maps of the
//! universal cover of a presentation complex.
//!
//! Modules are right modules throughout. The left Fox derivative `∂w/∂g`
//! is converted with the anti-involution `Σ aᵢwᵢ ↦ Σ aᵢwᵢ⁻¹` before it is
//! evaluated, which turns
//! `∂(uv)/∂g = ∂u/∂g + u·∂v/∂g` into right multiplication by `u⁻¹`. With
//! this convention the edge boundary is `e_g ↦ g⁻¹ − 1` and
//! `Σ_g d₁(e_g)·d₂(g) = 0` for every relator.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::klein::SPoly;
use crate::word::{Generator, Word};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    generators: Vec<Generator>,
    relators: Vec<Word>,
}

#[derive(Serialize, Deserialize)]
struct PresentationJson {
    generators: Vec<String>,
    relators: Vec<String>,
}

impl Presentation {
    pub fn new(generators: Vec<Generator>, relators: Vec<Word>) -> Result<Self> {
        for r in &relators {
            if let Some(g) = r.generators_used().find(|g| !generators.contains(g)) {
                return Err(Error::UndeclaredGenerator(g.name().to_string()));
            }
        }
        Ok(Presentation { generators, relators })
    }

    /// Parses relator strings against the given generator names.
    pub fn parse(generators: &[&str], relators: &[&str]) -> Result<Self> {
        let gens = generators
            .iter()
            .map(|g| Generator::new(*g))
            .collect::<Result<Vec<_>>>()?;
        let rels = relators
            .iter()
            .map(|r| Word::parse(r, &gens))
            .collect::<Result<Vec<_>>>()?;
        Presentation::new(gens, rels)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let raw: PresentationJson = serde_json::from_str(text)?;
        let gens: Vec<&str> = raw.generators.iter().map(String::as_str).collect();
        let rels: Vec<&str> = raw.relators.iter().map(String::as_str).collect();
        Presentation::parse(&gens, &rels)
    }

    pub fn to_json(&self) -> String {
        let raw = PresentationJson {
            generators: self.generators.iter().map(|g| g.name().to_string()).collect(),
            relators: self.relators.iter().map(Word::to_string).collect(),
        };
        serde_json::to_string(&raw).expect("presentation serializes")
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    pub fn generator(&self, name: &str) -> Result<&Generator> {
        self.generators
            .iter()
            .find(|g| g.name() == name)
            .ok_or_else(|| Error::UndeclaredGenerator(name.to_string()))
    }

    /// 2-cells minus 1-cells plus the single 0-cell.
    pub fn euler_characteristic(&self) -> i64 {
        self.relators.len() as i64 - self.generators.len() as i64 + 1
    }

    /// Same generators, relators in a different order.
    pub fn with_relators(&self, relators: Vec<Word>) -> Result<Self> {
        Presentation::new(self.generators.clone(), relators)
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<_> = self.generators.iter().map(Generator::name).collect();
        let rels: Vec<_> = self.relators.iter().map(Word::to_string).collect();
        write!(f, "<{} | {}>", gens.join(", "), rels.join(", "))
    }
}

/// A formal integer combination of free-group words, i.e. an element of
/// the integral free group ring.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FreeCombo {
    terms: BTreeMap<Word, BigInt>,
}

impl FreeCombo {
    pub fn zero() -> Self {
        FreeCombo::default()
    }

    pub fn word(w: Word) -> Self {
        FreeCombo::from_terms([(BigInt::one(), w)])
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (BigInt, Word)>) -> Self {
        let mut c = FreeCombo::zero();
        for (k, w) in terms {
            c.add_term(w, k);
        }
        c
    }

    fn add_term(&mut self, w: Word, k: BigInt) {
        if k.is_zero() {
            return;
        }
        let entry = self.terms.entry(w.clone()).or_insert_with(BigInt::zero);
        *entry += k;
        if entry.is_zero() {
            self.terms.remove(&w);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &BigInt)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &FreeCombo) -> FreeCombo {
        let mut out = self.clone();
        for (w, k) in &other.terms {
            out.add_term(w.clone(), k.clone());
        }
        out
    }

    pub fn sub(&self, other: &FreeCombo) -> FreeCombo {
        self.add(&other.scale(&-BigInt::one()))
    }

    pub fn scale(&self, k: &BigInt) -> FreeCombo {
        FreeCombo::from_terms(self.terms.iter().map(|(w, c)| (c * k, w.clone())))
    }

    /// Product in the free group ring.
    pub fn mul(&self, other: &FreeCombo) -> FreeCombo {
        let mut out = FreeCombo::zero();
        for (u, a) in &self.terms {
            for (v, b) in &other.terms {
                out.add_term(u.multiply(v), a * b);
            }
        }
        out
    }

    /// `u·self`.
    pub fn left_mul_word(&self, u: &Word) -> FreeCombo {
        FreeCombo::from_terms(self.terms.iter().map(|(w, k)| (k.clone(), u.multiply(w))))
    }

    /// `Σ aᵢwᵢ ↦ Σ aᵢwᵢ⁻¹`.
    pub fn anti_involution(&self) -> FreeCombo {
        FreeCombo::from_terms(self.terms.iter().map(|(w, k)| (k.clone(), w.invert())))
    }
}

impl fmt::Display for FreeCombo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (w, k)) in self.terms.iter().enumerate() {
            let negative = k.is_negative();
            match (i, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let k = k.abs();
            if k.is_one() {
                write!(f, "[{w}]")?;
            } else {
                write!(f, "{k}[{w}]")?;
            }
        }
        Ok(())
    }
}

/// Left Fox derivative `∂w/∂g`.
pub fn fox_derivative(w: &Word, g: &Generator) -> FreeCombo {
    let mut out = FreeCombo::zero();
    let mut prefix = Word::identity();
    for (h, e) in w.runs() {
        if h == g {
            // ∂(gᵉ)/∂g = 1 + g + … + g^{e−1} for e > 0, −(g⁻¹ + … + gᵉ) for e < 0
            if *e > 0 {
                for j in 0..*e {
                    out.add_term(prefix.multiply(&Word::letter(g.clone(), j)), BigInt::one());
                }
            } else {
                for j in 1..=e.unsigned_abs() as i64 {
                    out.add_term(prefix.multiply(&Word::letter(g.clone(), -j)), -BigInt::one());
                }
            }
        }
        prefix = prefix.multiply(&Word::letter(h.clone(), *e));
    }
    out
}

/// Fox derivative with respect to a generator named in `p`.
pub fn fox_derivative_in(p: &Presentation, w: &Word, name: &str) -> Result<FreeCombo> {
    if let Some(h) = w.generators_used().find(|h| !p.generators.contains(h)) {
        return Err(Error::UndeclaredGenerator(h.name().to_string()));
    }
    Ok(fox_derivative(w, p.generator(name)?))
}

/// Evaluated boundary maps of the universal cover's cellular chain complex,
/// in the right-module convention.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Boundaries {
    /// `d2[j][g]`: coefficient of edge `g` in the boundary of 2-cell `j`.
    pub d2: Vec<Vec<SPoly>>,
    /// `d1[g]`: boundary of edge `g`, `g⁻¹ − 1`.
    pub d1: Vec<SPoly>,
}

impl Boundaries {
    /// `Σ_g d1[g]·d2[j][g]` for each relator `j`.
    pub fn composite(&self) -> Vec<SPoly> {
        self.d2
            .iter()
            .map(|row| {
                row.iter()
                    .zip(&self.d1)
                    .fold(SPoly::zero(), |acc, (entry, edge)| &acc + &(edge * entry))
            })
            .collect()
    }

    pub fn composite_vanishes(&self) -> bool {
        self.composite().iter().all(SPoly::is_zero)
    }
}

/// Builds `d₂` from Fox derivatives and `d₁` from the generators, pushing
/// everything through `eval`.
pub fn boundary_matrices<E>(p: &Presentation, eval: E) -> Result<Boundaries>
where
    E: Fn(&FreeCombo) -> Result<SPoly>,
{
    let d2 = p
        .relators
        .iter()
        .map(|r| {
            p.generators
                .iter()
                .map(|g| eval(&fox_derivative(r, g).anti_involution()))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    let d1 = p
        .generators
        .iter()
        .map(|g| {
            let edge = FreeCombo::word(Word::letter(g.clone(), -1)).sub(&FreeCombo::word(Word::identity()));
            eval(&edge)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Boundaries { d2, d1 })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::klein::eval_combo;
    use crate::word::generators;
    use proptest::prelude::*;

    fn xy() -> Vec<Generator> {
        generators(&["x", "y"])
    }

    fn w(s: &str) -> Word {
        Word::parse(s, &xy()).unwrap()
    }

    #[test]
    fn euler_characteristics() {
        let p = Presentation::parse(&["x", "y"], &["y^-1 x y x"]).unwrap();
        let q = Presentation::parse(&["x", "y"], &["y^-2 x y^2 x^-1", "x^-3 y^-1 x y x^2 y^-1 x^-2 y"]).unwrap();
        assert_eq!(p.euler_characteristic(), 0);
        assert_eq!(q.euler_characteristic(), 1);
        assert_eq!(Presentation::parse(&["x"], &[]).unwrap().euler_characteristic(), 0);
    }

    #[test]
    fn json_roundtrip_and_errors() {
        let text = r#"{"generators": ["x","y"], "relators": ["y^-1 x y x"]}"#;
        let p = Presentation::from_json(text).unwrap();
        assert_eq!(Presentation::from_json(&p.to_json()).unwrap(), p);
        assert!(matches!(
            Presentation::from_json(r#"{"generators": ["x"], "relators": ["y"]}"#),
            Err(Error::UndeclaredGenerator(_))
        ));
        assert!(matches!(Presentation::from_json("{"), Err(Error::Json(_))));
    }

    #[test]
    fn fox_axioms() {
        let [x, y] = [xy()[0].clone(), xy()[1].clone()];
        assert_eq!(fox_derivative(&w("x"), &x), FreeCombo::word(Word::identity()));
        assert!(fox_derivative(&w("x"), &y).is_zero());
        assert_eq!(fox_derivative(&w("x y"), &y), FreeCombo::word(w("x")));
        assert_eq!(
            fox_derivative(&w("x^-1"), &x),
            FreeCombo::word(w("x^-1")).scale(&BigInt::from(-1))
        );
        let expected = FreeCombo::from_terms([
            (BigInt::one(), Word::identity()),
            (BigInt::one(), w("x")),
            (BigInt::one(), w("x^2")),
        ]);
        assert_eq!(fox_derivative(&w("x^3"), &x), expected);
    }

    #[test]
    fn undeclared_generator() {
        let p = Presentation::parse(&["x", "y"], &[]).unwrap();
        assert!(matches!(
            fox_derivative_in(&p, &w("x"), "z"),
            Err(Error::UndeclaredGenerator(_))
        ));
    }

    #[test]
    fn trivial_relator_gives_zero_row() {
        let p = Presentation::parse(&["x", "y"], &["1"]).unwrap();
        let b = boundary_matrices(&p, eval_combo).unwrap();
        assert!(b.d2[0].iter().all(SPoly::is_zero));
    }

    #[test]
    fn klein_relator_boundary() {
        let p = Presentation::parse(&["x", "y"], &["y^-1 x y x"]).unwrap();
        let b = boundary_matrices(&p, eval_combo).unwrap();
        assert_eq!(b.d2[0][0], "y + x".parse().unwrap());
        assert_eq!(b.d2[0][1], "y x - y".parse().unwrap());
        assert_eq!(b.d1, vec!["x^-1 - 1".parse().unwrap(), "y^-1 - 1".parse().unwrap()]);
        assert!(b.composite_vanishes());
    }

    fn arb_word() -> impl Strategy<Value = Word> {
        prop::collection::vec((0..3usize, -3i64..=3), 0..7).prop_map(|v| {
            let g = generators(&["x", "y", "z"]);
            Word::from_runs(v.into_iter().map(|(i, e)| (g[i].clone(), e)))
        })
    }

    proptest! {
        #[test]
        fn product_rule(u in arb_word(), v in arb_word()) {
            for g in generators(&["x", "y", "z"]) {
                let lhs = fox_derivative(&u.multiply(&v), &g);
                let rhs = fox_derivative(&u, &g).add(&fox_derivative(&v, &g).left_mul_word(&u));
                prop_assert_eq!(lhs, rhs);
            }
        }

        #[test]
        fn fundamental_identity(word in arb_word()) {
            let one = FreeCombo::word(Word::identity());
            let sum = generators(&["x", "y", "z"]).into_iter().fold(FreeCombo::zero(), |acc, g| {
                let g_minus_1 = FreeCombo::word(Word::letter(g.clone(), 1)).sub(&one);
                acc.add(&fox_derivative(&word, &g).mul(&g_minus_1))
            });
            prop_assert_eq!(sum, FreeCombo::word(word).sub(&one));
        }
    }
}
