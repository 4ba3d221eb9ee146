//! Laurent polynomials `R = ℤ[x, x⁻¹]` with the involution `σ: x ↦ x⁻¹`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// A finite Laurent polynomial in `x` with arbitrary precision integer
/// coefficients. Zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct RPoly {
    coeffs: BTreeMap<i64, BigInt>,
}

impl RPoly {
    pub fn zero() -> Self {
        RPoly::default()
    }

    pub fn one() -> Self {
        RPoly::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        RPoly::monomial(c, 0)
    }

    /// `c·xᵉ`.
    pub fn monomial(c: impl Into<BigInt>, e: i64) -> Self {
        let mut p = RPoly::zero();
        p.add_term(e, c.into());
        p
    }

    /// `xᵉ`.
    pub fn x_pow(e: i64) -> Self {
        RPoly::monomial(1, e)
    }

    /// Builds from `(exponent, coefficient)` pairs; repeated exponents add up.
    pub fn from_terms<C: Into<BigInt>>(terms: impl IntoIterator<Item = (i64, C)>) -> Self {
        let mut p = RPoly::zero();
        for (e, c) in terms {
            p.add_term(e, c.into());
        }
        p
    }

    fn add_term(&mut self, e: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(e).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&e);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs.get(&0).is_some_and(|c| c.is_one())
    }

    pub fn coeff(&self, e: i64) -> BigInt {
        self.coeffs.get(&e).cloned().unwrap_or_default()
    }

    /// Terms in ascending exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &BigInt)> {
        self.coeffs.iter().map(|(e, c)| (*e, c))
    }

    pub fn max_exponent(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn min_exponent(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    /// Highest minus lowest exponent.
    pub fn length(&self) -> Result<u64> {
        match (self.min_exponent(), self.max_exponent()) {
            (Some(lo), Some(hi)) => Ok(hi.abs_diff(lo)),
            _ => Err(Error::ZeroPolynomial),
        }
    }

    /// The units of `R` are exactly `±xᵏ`.
    pub fn is_unit(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs.values().all(|c| c.abs().is_one())
    }

    /// Inverse of a unit `±xᵏ`.
    pub fn unit_inverse(&self) -> Option<RPoly> {
        if !self.is_unit() {
            return None;
        }
        let (e, c) = self.coeffs.iter().next()?;
        Some(RPoly::monomial(c.clone(), -e))
    }

    /// `σ(a)`: negate every exponent.
    pub fn sigma(&self) -> RPoly {
        RPoly {
            coeffs: self.coeffs.iter().map(|(e, c)| (-e, c.clone())).collect(),
        }
    }

    /// `σᵏ(a)`; `σ` is an involution so only the parity of `k` matters.
    pub fn sigma_pow(&self, k: i64) -> RPoly {
        if k.rem_euclid(2) == 0 {
            self.clone()
        } else {
            self.sigma()
        }
    }

    /// Multiplies by `xᵏ`.
    pub fn shift(&self, k: i64) -> RPoly {
        RPoly {
            coeffs: self.coeffs.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    /// Returns `c` with `b = a·c` if it exists in `R`.
    ///
    /// Both operands are normalised to ordinary polynomials with nonzero
    /// constant term by removing a power of `x`, then divided by integer long
    /// division; every step must divide exactly.
    pub fn exact_quotient(b: &RPoly, a: &RPoly) -> Result<Option<RPoly>> {
        if a.is_zero() {
            return if b.is_zero() { Ok(Some(RPoly::zero())) } else { Err(Error::ZeroDivisor) };
        }
        if b.is_zero() {
            return Ok(Some(RPoly::zero()));
        }
        let a_lo = a.min_exponent().expect("nonzero");
        let b_lo = b.min_exponent().expect("nonzero");
        let divisor = dense(&a.shift(-a_lo));
        let mut rem = dense(&b.shift(-b_lo));
        if rem.len() < divisor.len() {
            return Ok(None);
        }
        let lead = divisor.last().expect("nonzero").clone();
        let mut quotient = vec![BigInt::zero(); rem.len() - divisor.len() + 1];
        for top in (divisor.len() - 1..rem.len()).rev() {
            let (q, r) = rem[top].div_rem(&lead);
            if !r.is_zero() {
                return Ok(None);
            }
            if q.is_zero() {
                continue;
            }
            let offset = top + 1 - divisor.len();
            for (i, d) in divisor.iter().enumerate() {
                rem[offset + i] -= &q * d;
            }
            quotient[offset] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Ok(None);
        }
        let q = RPoly::from_terms(quotient.into_iter().enumerate().map(|(i, c)| (i as i64, c)));
        Ok(Some(q.shift(b_lo - a_lo)))
    }

    /// Whether `a` divides `b` in `R`. `(0, 0)` is true; `a = 0` with `b ≠ 0`
    /// is an invalid query.
    pub fn divides(a: &RPoly, b: &RPoly) -> Result<bool> {
        Ok(RPoly::exact_quotient(b, a)?.is_some())
    }
}

// Coefficients of a polynomial with nonnegative exponents, index = exponent.
fn dense(p: &RPoly) -> Vec<BigInt> {
    let hi = p.max_exponent().unwrap_or(0);
    let mut v = vec![BigInt::zero(); hi as usize + 1];
    for (e, c) in p.terms() {
        v[e as usize] = c.clone();
    }
    v
}

impl Add for &RPoly {
    type Output = RPoly;
    fn add(self, rhs: &RPoly) -> RPoly {
        let mut out = self.clone();
        for (e, c) in rhs.terms() {
            out.add_term(e, c.clone());
        }
        out
    }
}

impl Sub for &RPoly {
    type Output = RPoly;
    fn sub(self, rhs: &RPoly) -> RPoly {
        let mut out = self.clone();
        for (e, c) in rhs.terms() {
            out.add_term(e, -c);
        }
        out
    }
}

impl Mul for &RPoly {
    type Output = RPoly;
    fn mul(self, rhs: &RPoly) -> RPoly {
        let mut out = RPoly::zero();
        for (e1, c1) in self.terms() {
            for (e2, c2) in rhs.terms() {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl Neg for &RPoly {
    type Output = RPoly;
    fn neg(self) -> RPoly {
        RPoly {
            coeffs: self.coeffs.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident :: $f:ident),*) => {$(
        impl $tr for RPoly {
            type Output = RPoly;
            fn $f(self, rhs: RPoly) -> RPoly {
                (&self).$f(&rhs)
            }
        }
    )*};
}
forward_owned!(Add::add, Sub::sub, Mul::mul);

impl Neg for RPoly {
    type Output = RPoly;
    fn neg(self) -> RPoly {
        -&self
    }
}

/// Canonical form with descending exponents, e.g. `x^3 - x - 1`, `-x^-1`.
impl fmt::Display for RPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.terms().rev().enumerate() {
            let negative = c.is_negative();
            match (i, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mag = c.abs();
            if e == 0 {
                write!(f, "{mag}")?;
                continue;
            }
            if !mag.is_one() {
                write!(f, "{mag}")?;
            }
            match e {
                1 => f.write_str("x")?,
                _ => write!(f, "x^{e}")?,
            }
        }
        Ok(())
    }
}

impl FromStr for RPoly {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        crate::expr::parse_rpoly(s)
    }
}
