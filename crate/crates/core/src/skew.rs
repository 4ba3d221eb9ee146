//! Right ideals `(y + s)S`, Stafford's module `V = {v ∈ S | r·v ∈ (y + s)S}`
//! and the witnesses that show it has no monic degree-one element.
//!
//! The division routines work on row maps `{m ↦ aₘ}` over any coefficient
//! domain implementing [`Coefficients`]; the public functions instantiate
//! them at `R = ℤ[x, x⁻¹]`.
//!
//! Membership test: dividing `f` by `y + s` from the top y-degree down to the
//! bottom degree `m₀` of `f` leaves `f = (y+s)q + y^{m₀}c`. For `s ≠ 0` any
//! nonzero `(y+s)q` spans at least two y-degrees, so `f ∈ (y+s)S` iff `c = 0`.

use std::collections::BTreeMap;
use std::fmt::Debug;

use crate::error::{Error, Result};
use crate::klein::SPoly;
use crate::laurent::RPoly;

/// A commutative domain with an automorphism `σ`, decidable exact division
/// and recognisable units.
pub trait Coefficients: Clone + PartialEq + Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    /// `σᵏ(self)` for any integer `k`.
    fn twist(&self, k: i64) -> Self;
    fn is_unit(&self) -> bool;
    /// `Some(c)` with `self = divisor·c` when it exists.
    fn exact_quotient(&self, divisor: &Self) -> Option<Self>;
}

impl Coefficients for RPoly {
    fn zero() -> Self {
        RPoly::zero()
    }
    fn one() -> Self {
        RPoly::one()
    }
    fn is_zero(&self) -> bool {
        RPoly::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn twist(&self, k: i64) -> Self {
        self.sigma_pow(k)
    }
    fn is_unit(&self) -> bool {
        RPoly::is_unit(self)
    }
    fn exact_quotient(&self, divisor: &Self) -> Option<Self> {
        RPoly::exact_quotient(self, divisor).ok().flatten()
    }
}

type Rows<C> = BTreeMap<i64, C>;

fn add_row<C: Coefficients>(rows: &mut Rows<C>, m: i64, a: C) {
    if a.is_zero() {
        return;
    }
    let sum = match rows.remove(&m) {
        Some(old) => old.add(&a),
        None => a,
    };
    if !sum.is_zero() {
        rows.insert(m, sum);
    }
}

/// Left multiplication `c·f` by a degree-zero coefficient: `c·yᵐa = yᵐσᵐ(c)a`.
fn scale_left<C: Coefficients>(c: &C, f: &Rows<C>) -> Rows<C> {
    let mut out = Rows::new();
    for (m, a) in f {
        add_row(&mut out, *m, c.twist(*m).mul(a));
    }
    out
}

/// Returns `(q, m₀, c)` with `f = (y+s)q + y^{m₀}c`, where `m₀` is the lowest
/// y-degree of `f` (or 0 when `f = 0`).
fn divide_rows<C: Coefficients>(f: &Rows<C>, s: &C) -> (Rows<C>, i64, C) {
    let Some(bottom) = f.keys().next().copied() else {
        return (Rows::new(), 0, C::zero());
    };
    let mut rem = f.clone();
    let mut q = Rows::new();
    // (y+s)·y^{d−1}a = yᵈa + y^{d−1}σ^{d−1}(s)a clears the top row exactly
    while let Some((&top, _)) = rem.iter().next_back() {
        if top <= bottom {
            break;
        }
        let a = rem.remove(&top).expect("top row");
        add_row(&mut rem, top - 1, s.twist(top - 1).mul(&a).neg());
        add_row(&mut q, top - 1, a);
    }
    let c = rem.remove(&bottom).unwrap_or_else(C::zero);
    debug_assert!(rem.is_empty());
    (q, bottom, c)
}

/// Remainder multipliers `ρₖ` with `yᵏb ≡ ρₖb` modulo `(y+s)S` (floor at
/// degree 0), `ρₖ = (−1)ᵏ s σ(s) ⋯ σᵏ⁻¹(s)`.
fn remainder_multipliers<C: Coefficients>(s: &C, up_to: i64) -> Vec<C> {
    let mut rho = vec![C::one()];
    for k in 1..=up_to {
        let prev = &rho[k as usize - 1];
        rho.push(prev.mul(&s.twist(k - 1)).neg());
    }
    rho
}

/// Searches for `v = yᵈ + Σ_{k<d} yᵏaₖ ∈ V` for `d = 1..=max_degree`.
///
/// `r·v ≡ Σₖ ρₖσᵏ(r)aₖ` modulo `(y+s)S`, so membership is the single
/// R-linear equation `Σ_{k<d} ρₖσᵏ(r)·aₖ = −ρ_dσᵈ(r)`. Each degree bound is
/// tried with one free unknown at a time, which is exact division in `R`.
fn find_monic_rows<C: Coefficients>(r: &C, s: &C, max_degree: i64) -> Option<Rows<C>> {
    let rho = remainder_multipliers(s, max_degree);
    for d in 1..=max_degree {
        let target = rho[d as usize].mul(&r.twist(d)).neg();
        for k in 0..d {
            let coefficient = rho[k as usize].mul(&r.twist(k));
            if let Some(a) = target.exact_quotient(&coefficient) {
                let mut v = Rows::new();
                add_row(&mut v, d, C::one());
                add_row(&mut v, k, a);
                return Some(v);
            }
        }
    }
    None
}

fn in_right_ideal_rows<C: Coefficients>(f: &Rows<C>, s: &C) -> bool {
    if s.is_zero() {
        // y is a unit of S
        return true;
    }
    divide_rows(f, s).2.is_zero()
}

fn spoly(rows: Rows<RPoly>) -> SPoly {
    SPoly::from_rows(rows)
}

/// The data `r, s ∈ R` of Stafford's module, both nonzero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StaffordInstance {
    r: RPoly,
    s: RPoly,
}

impl StaffordInstance {
    pub fn new(r: RPoly, s: RPoly) -> Result<Self> {
        if r.is_zero() {
            return Err(Error::InvalidInstance("r must be nonzero"));
        }
        if s.is_zero() {
            return Err(Error::InvalidInstance("s must be nonzero"));
        }
        Ok(StaffordInstance { r, s })
    }

    /// `r = x³ − x − 1`, `s = −x⁻¹`.
    pub fn standard() -> Self {
        StaffordInstance {
            r: RPoly::from_terms([(3, 1), (1, -1), (0, -1)]),
            s: RPoly::monomial(-1, -1),
        }
    }

    pub fn r(&self) -> &RPoly {
        &self.r
    }

    pub fn s(&self) -> &RPoly {
        &self.s
    }

    /// `y + s` as an element of `S`.
    pub fn y_plus_s(&self) -> SPoly {
        &SPoly::y_pow(1) + &SPoly::from_r(self.s.clone())
    }
}

/// Quotient and remainder of `f` by `y + s`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Division {
    pub quotient: SPoly,
    pub rem_degree: i64,
    pub remainder: RPoly,
}

impl Division {
    /// `(y+s)·q + y^{m₀}·c`.
    pub fn recompose(&self, s: &RPoly) -> SPoly {
        let ideal = &SPoly::y_pow(1) + &SPoly::from_r(s.clone());
        &(&ideal * &self.quotient) + &SPoly::term(self.rem_degree, self.remainder.clone())
    }
}

pub fn divide(f: &SPoly, s: &RPoly) -> Division {
    let (q, rem_degree, remainder) = divide_rows(f.rows(), s);
    Division {
        quotient: spoly(q),
        rem_degree,
        remainder,
    }
}

/// Whether `f ∈ (y + s)S`.
pub fn in_right_ideal(f: &SPoly, s: &RPoly) -> bool {
    in_right_ideal_rows(f.rows(), s)
}

/// `r·v` with `r` acting from the left.
pub fn left_scale(r: &RPoly, v: &SPoly) -> SPoly {
    spoly(scale_left(r, v.rows()))
}

pub fn in_v(v: &SPoly, inst: &StaffordInstance) -> bool {
    in_right_ideal(&left_scale(&inst.r, v), &inst.s)
}

/// Returns `u` with `(y + s)·u = −r·v`, so that `ψ(u, v) = 0`.
pub fn lift_kernel(v: &SPoly, inst: &StaffordInstance) -> Result<SPoly> {
    let d = divide(&left_scale(&inst.r, v), &inst.s);
    if !d.remainder.is_zero() {
        return Err(Error::NotInV);
    }
    Ok(-d.quotient)
}

/// True iff `s·σ(r) ∉ r·R`, i.e. `V` contains no element `y·a₁ + a₀` with
/// `a₁` a unit (such an element forces `r·a₀ = s·σ(r)·a₁`). Units of `R`
/// do not change divisibility, so a single test suffices.
pub fn no_monic_degree_one(inst: &StaffordInstance) -> bool {
    let target = &inst.s * &inst.r.sigma();
    !RPoly::divides(&inst.r, &target).expect("r is nonzero")
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witnesses {
    /// `y·r + s·σ(r)`
    pub degree_one: SPoly,
    /// A monic element of `V`.
    pub monic: SPoly,
}

/// Highest y-degree tried in the monic search.
pub const MONIC_SEARCH_DEGREE: i64 = 4;

/// The degree-one element `y·r + s·σ(r)` and a monic element of `V`, both
/// checked for membership before they are returned.
pub fn witnesses(inst: &StaffordInstance) -> Result<Witnesses> {
    let degree_one = SPoly::from_rows([(1, inst.r.clone()), (0, &inst.s * &inst.r.sigma())]);
    if !in_v(&degree_one, inst) {
        return Err(Error::Witness(format!("{degree_one} is not in V")));
    }
    let monic = find_monic_rows(&inst.r, &inst.s, MONIC_SEARCH_DEGREE)
        .map(spoly)
        .ok_or_else(|| {
            Error::Witness(format!("no monic element of y-degree <= {MONIC_SEARCH_DEGREE} found"))
        })?;
    if !in_v(&monic, inst) {
        return Err(Error::Witness(format!("{monic} is not in V")));
    }
    Ok(Witnesses { degree_one, monic })
}
