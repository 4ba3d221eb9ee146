//! The Klein bottle group `⟨x, y | y⁻¹xyx⟩` and its integral group ring
//! `S = R[y, y⁻¹, σ]`.
//!
//! Group elements have the unique normal form `yᵐxⁿ`. Ring elements are
//! written `Σ yᵐ·aₘ(x)` with y-powers on the left and coefficients on the
//! right; moving a coefficient past `yⁿ` applies `σⁿ`, i.e. `r·yⁿ = yⁿ·σⁿ(r)`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::laurent::RPoly;
use crate::presentation::FreeCombo;
use crate::word::Word;

/// `yᵐxⁿ` in the Klein bottle group.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct GroupElem {
    pub m: i64,
    pub n: i64,
}

impl GroupElem {
    pub const IDENTITY: GroupElem = GroupElem { m: 0, n: 0 };

    pub fn new(m: i64, n: i64) -> Self {
        GroupElem { m, n }
    }

    pub fn x() -> Self {
        GroupElem::new(0, 1)
    }

    pub fn y() -> Self {
        GroupElem::new(1, 0)
    }

    pub fn is_identity(&self) -> bool {
        *self == GroupElem::IDENTITY
    }

    /// `yᵐxⁿ · yᵖx^q = y^{m+p} x^{(−1)ᵖn + q}`.
    pub fn mul(self, other: GroupElem) -> GroupElem {
        let n = if other.m.rem_euclid(2) == 0 { self.n } else { -self.n };
        GroupElem::new(self.m + other.m, n + other.n)
    }

    pub fn inverse(self) -> GroupElem {
        // (yᵐxⁿ)⁻¹ = x⁻ⁿy⁻ᵐ = y⁻ᵐ x^{∓n}
        let n = if self.m.rem_euclid(2) == 0 { -self.n } else { self.n };
        GroupElem::new(-self.m, n)
    }

    pub fn pow(self, k: i64) -> GroupElem {
        let base = if k < 0 { self.inverse() } else { self };
        (0..k.unsigned_abs()).fold(GroupElem::IDENTITY, |acc, _| acc.mul(base))
    }
}

impl fmt::Display for GroupElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.m, self.n) {
            (0, 0) => f.write_str("1"),
            (m, 0) => write!(f, "y^{m}"),
            (0, n) => write!(f, "x^{n}"),
            (m, n) => write!(f, "y^{m} x^{n}"),
        }
    }
}

/// Maps a word in `x`, `y` to its normal form.
pub fn eval_word(w: &Word) -> Result<GroupElem> {
    w.runs().iter().try_fold(GroupElem::IDENTITY, |acc, (g, e)| {
        let letter = match g.name() {
            "x" => GroupElem::x(),
            "y" => GroupElem::y(),
            other => return Err(Error::ForeignGenerator(other.to_string())),
        };
        Ok(acc.mul(letter.pow(*e)))
    })
}

/// An element `Σ yᵐ·aₘ` of the twisted Laurent ring `S`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct SPoly {
    rows: BTreeMap<i64, RPoly>,
}

impl SPoly {
    pub fn zero() -> Self {
        SPoly::default()
    }

    pub fn one() -> Self {
        SPoly::from_r(RPoly::one())
    }

    /// `yᵐ·a`.
    pub fn term(m: i64, a: RPoly) -> Self {
        let mut f = SPoly::zero();
        f.add_row(m, a);
        f
    }

    pub fn from_r(a: RPoly) -> Self {
        SPoly::term(0, a)
    }

    pub fn y_pow(m: i64) -> Self {
        SPoly::term(m, RPoly::one())
    }

    pub fn x_pow(n: i64) -> Self {
        SPoly::from_r(RPoly::x_pow(n))
    }

    pub fn from_rows(rows: impl IntoIterator<Item = (i64, RPoly)>) -> Self {
        let mut f = SPoly::zero();
        for (m, a) in rows {
            f.add_row(m, a);
        }
        f
    }

    fn add_row(&mut self, m: i64, a: RPoly) {
        if a.is_zero() {
            return;
        }
        let sum = match self.rows.remove(&m) {
            Some(old) => &old + &a,
            None => a,
        };
        if !sum.is_zero() {
            self.rows.insert(m, sum);
        }
    }

    pub fn rows(&self) -> &BTreeMap<i64, RPoly> {
        &self.rows
    }

    pub fn into_rows(self) -> BTreeMap<i64, RPoly> {
        self.rows
    }

    pub fn row(&self, m: i64) -> RPoly {
        self.rows.get(&m).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.rows.len() == 1 && self.rows.get(&0).is_some_and(RPoly::is_one)
    }

    pub fn max_degree(&self) -> Option<i64> {
        self.rows.keys().next_back().copied()
    }

    pub fn min_degree(&self) -> Option<i64> {
        self.rows.keys().next().copied()
    }

    /// Difference between the highest and lowest y-degree.
    pub fn y_span(&self) -> Option<u64> {
        Some(self.max_degree()?.abs_diff(self.min_degree()?))
    }

    /// Coefficient of the highest y-power.
    pub fn leading_coefficient(&self) -> Option<&RPoly> {
        self.rows.values().next_back()
    }

    /// Degree-zero part when `self` lies in `R`.
    pub fn as_r(&self) -> Option<RPoly> {
        match self.rows.len() {
            0 => Some(RPoly::zero()),
            1 => self.rows.get(&0).cloned(),
            _ => None,
        }
    }

    /// Inverse of a unit `yᵐ·(±xⁿ)`: `(yᵐa)⁻¹ = a⁻¹y⁻ᵐ = y⁻ᵐσᵐ(a⁻¹)`.
    pub fn unit_inverse(&self) -> Option<SPoly> {
        if self.rows.len() != 1 {
            return None;
        }
        let (m, a) = self.rows.iter().next()?;
        let inv = a.unit_inverse()?;
        Some(SPoly::term(-m, inv.sigma_pow(*m)))
    }

    pub fn pow(&self, k: i64) -> Result<SPoly> {
        let base = if k < 0 {
            self.unit_inverse()
                .ok_or_else(|| Error::NotInvertible(self.to_string()))?
        } else {
            self.clone()
        };
        Ok((0..k.unsigned_abs()).fold(SPoly::one(), |acc, _| &acc * &base))
    }

    /// Integral linear extension of `w ↦ w⁻¹`; an anti-automorphism of `S`.
    pub fn anti_involution(&self) -> SPoly {
        let mut out = SPoly::zero();
        for (m, a) in &self.rows {
            for (n, c) in a.terms() {
                let g = GroupElem::new(*m, n).inverse();
                out.add_row(g.m, RPoly::monomial(c.clone(), g.n));
            }
        }
        out
    }
}

impl From<GroupElem> for SPoly {
    fn from(g: GroupElem) -> SPoly {
        SPoly::term(g.m, RPoly::x_pow(g.n))
    }
}

impl From<RPoly> for SPoly {
    fn from(a: RPoly) -> SPoly {
        SPoly::from_r(a)
    }
}

/// Linear extension of [`eval_word`] into `S`.
pub fn eval_combo(c: &FreeCombo) -> Result<SPoly> {
    let mut out = SPoly::zero();
    for (w, k) in c.terms() {
        let g = eval_word(w)?;
        out.add_row(g.m, RPoly::monomial(k.clone(), g.n));
    }
    Ok(out)
}

impl Add for &SPoly {
    type Output = SPoly;
    fn add(self, rhs: &SPoly) -> SPoly {
        let mut out = self.clone();
        for (m, a) in &rhs.rows {
            out.add_row(*m, a.clone());
        }
        out
    }
}

impl Sub for &SPoly {
    type Output = SPoly;
    fn sub(self, rhs: &SPoly) -> SPoly {
        let mut out = self.clone();
        for (m, a) in &rhs.rows {
            out.add_row(*m, -a);
        }
        out
    }
}

impl Neg for &SPoly {
    type Output = SPoly;
    fn neg(self) -> SPoly {
        SPoly {
            rows: self.rows.iter().map(|(m, a)| (*m, -a)).collect(),
        }
    }
}

impl Mul for &SPoly {
    type Output = SPoly;
    /// `(yᵐa)(yⁿb) = y^{m+n} σⁿ(a) b`.
    fn mul(self, rhs: &SPoly) -> SPoly {
        let mut out = SPoly::zero();
        for (m, a) in &self.rows {
            for (n, b) in &rhs.rows {
                out.add_row(m + n, &a.sigma_pow(*n) * b);
            }
        }
        out
    }
}

macro_rules! forward_owned {
    ($($tr:ident :: $f:ident),*) => {$(
        impl $tr for SPoly {
            type Output = SPoly;
            fn $f(self, rhs: SPoly) -> SPoly {
                (&self).$f(&rhs)
            }
        }
    )*};
}
forward_owned!(Add::add, Sub::sub, Mul::mul);

impl Neg for SPoly {
    type Output = SPoly;
    fn neg(self) -> SPoly {
        -&self
    }
}

/// Terms `y^m*(a)` with descending `m`, e.g. `y^2*(1) + (-1)`.
impl fmt::Display for SPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (m, a)) in self.rows.iter().rev().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            match m {
                0 => write!(f, "({a})")?,
                1 => write!(f, "y*({a})")?,
                _ => write!(f, "y^{m}*({a})")?,
            }
        }
        Ok(())
    }
}

impl FromStr for SPoly {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        crate::expr::parse_spoly(s)
    }
}
