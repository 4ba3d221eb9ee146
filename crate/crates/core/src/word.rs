//! Free-group words over named generators.
//!
//! A [`Word`] is stored run-length encoded: a sequence of `(generator,
//! exponent)` runs in which adjacent runs never share a generator and no
//! exponent is zero. Every constructor goes through free reduction, so two
//! words are equal as group elements iff they are equal as values.

use std::fmt;

use crate::error::{Error, Result};

/// An opaque generator name such as `x` or `y`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Generator(String);

impl Generator {
    pub fn new(name: impl Into<String>) -> Result<Self> {
        let name = name.into();
        let mut chars = name.chars();
        let valid = matches!(chars.next(), Some(c) if c.is_alphabetic())
            && chars.all(|c| c.is_alphanumeric() || c == '_');
        if !valid {
            return Err(Error::parse("invalid generator name", name, 0));
        }
        Ok(Generator(name))
    }

    pub fn name(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// Builds a generator list from names; panics on an invalid name.
pub fn generators(names: &[&str]) -> Vec<Generator> {
    names
        .iter()
        .map(|n| Generator::new(*n).expect("valid generator name"))
        .collect()
}

/// A freely reduced word in a free group.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word {
    letters: Vec<(Generator, i64)>,
}

impl Word {
    pub fn identity() -> Self {
        Word::default()
    }

    pub fn letter(g: Generator, exponent: i64) -> Self {
        Word::from_runs([(g, exponent)])
    }

    /// Builds a word from arbitrary runs, reducing as it goes.
    pub fn from_runs(runs: impl IntoIterator<Item = (Generator, i64)>) -> Self {
        let mut w = Word::identity();
        for (g, e) in runs {
            w.push_run(g, e);
        }
        w
    }

    fn push_run(&mut self, g: Generator, e: i64) {
        if e == 0 {
            return;
        }
        match self.letters.last_mut() {
            Some((last, k)) if *last == g => {
                *k = k.checked_add(e).expect("word exponent overflow");
                if *k == 0 {
                    self.letters.pop();
                }
            }
            _ => self.letters.push((g, e)),
        }
    }

    pub fn runs(&self) -> &[(Generator, i64)] {
        &self.letters
    }

    pub fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }

    /// Total number of single letters, i.e. the sum of absolute exponents.
    pub fn letter_count(&self) -> u64 {
        self.letters.iter().map(|(_, e)| e.unsigned_abs()).sum()
    }

    /// Expands to single letters `(g, ±1)`.
    pub fn single_letters(&self) -> impl Iterator<Item = (&Generator, i64)> + '_ {
        self.letters
            .iter()
            .flat_map(|(g, e)| std::iter::repeat_n((g, e.signum()), e.unsigned_abs() as usize))
    }

    pub fn multiply(&self, other: &Word) -> Word {
        let mut w = self.clone();
        for (g, e) in &other.letters {
            w.push_run(g.clone(), *e);
        }
        w
    }

    pub fn invert(&self) -> Word {
        Word {
            letters: self
                .letters
                .iter()
                .rev()
                .map(|(g, e)| (g.clone(), -e))
                .collect(),
        }
    }

    /// `w · self · w⁻¹`.
    pub fn conjugate(&self, w: &Word) -> Word {
        w.multiply(self).multiply(&w.invert())
    }

    pub fn pow(&self, n: i64) -> Word {
        let base = if n < 0 { self.invert() } else { self.clone() };
        (0..n.unsigned_abs()).fold(Word::identity(), |acc, _| acc.multiply(&base))
    }

    pub fn generators_used(&self) -> impl Iterator<Item = &Generator> {
        self.letters.iter().map(|(g, _)| g)
    }

    /// Parses whitespace separated letters `g` or `g^k`; `1` or an empty
    /// string denotes the identity. Every generator must appear in `declared`.
    pub fn parse(text: &str, declared: &[Generator]) -> Result<Word> {
        let mut w = Word::identity();
        for (position, token) in tokens(text) {
            if token == "1" {
                continue;
            }
            let (name, exponent) = match token.split_once('^') {
                Some((name, exp)) => (name, parse_exponent(exp, token, position)?),
                None => (token, 1),
            };
            let g = declared
                .iter()
                .find(|g| g.name() == name)
                .cloned()
                .ok_or_else(|| {
                    if Generator::new(name).is_ok() {
                        Error::UndeclaredGenerator(name.to_string())
                    } else {
                        Error::parse("malformed letter", token, position)
                    }
                })?;
            w.push_run(g, exponent);
        }
        Ok(w)
    }
}

fn tokens(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.split_whitespace()
        .map(move |t| (t.as_ptr() as usize - text.as_ptr() as usize, t))
}

fn parse_exponent(exp: &str, token: &str, position: usize) -> Result<i64> {
    let inner = exp
        .strip_prefix('{')
        .and_then(|e| e.strip_suffix('}'))
        .or_else(|| exp.strip_prefix('(').and_then(|e| e.strip_suffix(')')))
        .unwrap_or(exp);
    let inner = inner.replace('\u{2212}', "-");
    inner
        .parse::<i64>()
        .map_err(|_| Error::parse("exponent is not an integer", token, position))
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("1");
        }
        for (i, (g, e)) in self.letters.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            if *e == 1 {
                write!(f, "{g}")?;
            } else {
                write!(f, "{g}^{e}")?;
            }
        }
        Ok(())
    }
}
