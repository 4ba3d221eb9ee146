//! Seeded generators and independent oracles shared by the integration tests.
#![allow(dead_code)]

use std::collections::BTreeMap;

use kbb_core::{generators, GroupElem, RPoly, SPoly, Word};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const SEED: u64 = 0x6b62_625f_7365_6564;

pub fn rng() -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(SEED)
}

pub fn xy() -> Vec<kbb_core::Generator> {
    generators(&["x", "y"])
}

pub fn random_word(rng: &mut impl Rng, max_runs: usize) -> Word {
    let g = xy();
    let n = rng.gen_range(0..=max_runs);
    Word::from_runs((0..n).map(|_| (g[rng.gen_range(0..2)].clone(), rng.gen_range(-3..=3))))
}

pub fn random_rpoly(rng: &mut impl Rng) -> RPoly {
    let n = rng.gen_range(0..=4);
    RPoly::from_terms((0..n).map(|_| (rng.gen_range(-4i64..=4), rng.gen_range(-6i64..=6))))
}

pub fn random_nonzero_rpoly(rng: &mut impl Rng) -> RPoly {
    loop {
        let p = random_rpoly(rng);
        if !p.is_zero() {
            return p;
        }
    }
}

pub fn random_spoly(rng: &mut impl Rng) -> SPoly {
    let n = rng.gen_range(0..=3);
    SPoly::from_rows((0..n).map(|_| (rng.gen_range(-3i64..=3), random_rpoly(rng))))
}

pub fn random_nonzero_spoly(rng: &mut impl Rng) -> SPoly {
    loop {
        let f = random_spoly(rng);
        if !f.is_zero() {
            return f;
        }
    }
}

/// Normal form by string rewriting: push every `y` to the left with
/// `xy → yx⁻¹`, `x⁻¹y → yx`, `xy⁻¹ → y⁻¹x⁻¹`, `x⁻¹y⁻¹ → y⁻¹x`, cancelling
/// inverse pairs, then count exponents.
pub fn rewrite_normal_form(w: &Word) -> GroupElem {
    // letters: 'x', 'X' = x⁻¹, 'y', 'Y' = y⁻¹
    let mut s: Vec<char> = w
        .single_letters()
        .map(|(g, e)| match (g.name(), e) {
            ("x", 1) => 'x',
            ("x", _) => 'X',
            ("y", 1) => 'y',
            _ => 'Y',
        })
        .collect();
    loop {
        let mut changed = false;
        let mut i = 0;
        while i + 1 < s.len() {
            let pair = (s[i], s[i + 1]);
            let replacement: Option<&[char]> = match pair {
                ('x', 'X') | ('X', 'x') | ('y', 'Y') | ('Y', 'y') => Some(&[]),
                ('x', 'y') => Some(&['y', 'X']),
                ('X', 'y') => Some(&['y', 'x']),
                ('x', 'Y') => Some(&['Y', 'X']),
                ('X', 'Y') => Some(&['Y', 'x']),
                _ => None,
            };
            if let Some(rep) = replacement {
                s.splice(i..i + 2, rep.iter().copied());
                changed = true;
                i = i.saturating_sub(1);
            } else {
                i += 1;
            }
        }
        if !changed {
            break;
        }
    }
    let count = |c: char| s.iter().filter(|&&d| d == c).count() as i64;
    GroupElem::new(count('y') - count('Y'), count('x') - count('X'))
}

/// An element of ℤ[G] as a map from normal forms to coefficients, multiplied
/// by concatenating words and rewriting them.
pub fn group_ring_product(f: &SPoly, g: &SPoly) -> BTreeMap<(i64, i64), BigInt> {
    let terms = |h: &SPoly| -> Vec<(Word, BigInt)> {
        let gens = xy();
        h.rows()
            .iter()
            .flat_map(|(m, a)| {
                let gens = gens.clone();
                a.terms()
                    .map(move |(n, c)| {
                        let w = Word::from_runs([(gens[1].clone(), *m), (gens[0].clone(), n)]);
                        (w, c.clone())
                    })
                    .collect::<Vec<_>>()
            })
            .collect()
    };
    let mut out: BTreeMap<(i64, i64), BigInt> = BTreeMap::new();
    for (u, a) in terms(f) {
        for (v, b) in terms(g) {
            let nf = rewrite_normal_form(&u.multiply(&v));
            *out.entry((nf.m, nf.n)).or_insert_with(BigInt::zero) += &a * &b;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

pub fn as_group_ring(f: &SPoly) -> BTreeMap<(i64, i64), BigInt> {
    f.rows()
        .iter()
        .flat_map(|(m, a)| a.terms().map(move |(n, c)| ((*m, n), c.clone())))
        .collect()
}

/// Divisibility in ℤ[x, x⁻¹] decided with rational long division: strip
/// powers of x, divide over ℚ, require zero remainder and integral quotient.
pub fn rational_divides(a: &RPoly, b: &RPoly) -> bool {
    if b.is_zero() {
        return true;
    }
    let dense = |p: &RPoly| -> Vec<BigRational> {
        let lo = p.min_exponent().unwrap();
        let hi = p.max_exponent().unwrap();
        let mut v = vec![BigRational::zero(); (hi - lo) as usize + 1];
        for (e, c) in p.terms() {
            v[(e - lo) as usize] = BigRational::from_integer(c.clone());
        }
        v
    };
    let d = dense(a);
    let mut r = dense(b);
    if r.len() < d.len() {
        return false;
    }
    let mut quotient = Vec::new();
    while r.len() >= d.len() {
        let q = r.last().unwrap() / d.last().unwrap();
        let off = r.len() - d.len();
        for (i, c) in d.iter().enumerate() {
            r[off + i] = &r[off + i] - &q * c;
        }
        r.pop();
        quotient.push(q);
    }
    r.iter().all(Zero::is_zero) && quotient.iter().all(|q| q.denom().is_one())
}
