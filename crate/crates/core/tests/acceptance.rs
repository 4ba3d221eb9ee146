//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
//! criterion fails. Every check is exact.

mod common;

use std::process::ExitCode;

use common::*;
use kbb_core::certificate::Factor;
use kbb_core::skew::{divide, left_scale, Witnesses};
use kbb_core::stafford::{
    build_report, standard_factors, splitting_check, stafford_verdict, verify_bezout, verify_factorization,
    ReportInputs, Splitting,
};
use kbb_core::{
    boundary_matrices, builtin, equivalence_verdict, eval_combo, eval_word, fox_derivative, in_v,
    no_monic_degree_one, psi, theorem_a_report, witnesses, BezoutWitness, ChainData, ConjugacyCertificate,
    FreeCombo, Presentation, RPoly, SPoly, StaffordInstance, Word,
};
use rand::Rng;

type Outcome = Result<(), String>;

const CASES: usize = 500;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn rp(s: &str) -> RPoly {
    s.parse().unwrap()
}

fn sp(s: &str) -> SPoly {
    s.parse().unwrap()
}

fn a1_euler_characteristics() -> Outcome {
    let (p, q) = (builtin::p(), builtin::q());
    ensure!(q.euler_characteristic() == 1, "chi(Q) = {}", q.euler_characteristic());
    ensure!(p.euler_characteristic() == 0, "chi(P) = {}", p.euler_characteristic());
    Ok(())
}

fn a2_conjugate_products() -> Outcome {
    let p = builtin::p();
    let q = builtin::q();
    let certs = builtin::q_over_p();
    ensure!(certs.len() == 2, "expected two certificates");
    for (cert, relator) in certs.iter().zip(q.relators()) {
        ensure!(&cert.target == relator, "certificate target {} is not relator {relator}", cert.target);
        let product = cert.product(&p).map_err(|e| e.to_string())?;
        ensure!(product == *relator, "product {product} differs from {relator}");
    }
    Ok(())
}

fn a3_group_ring_law() -> Outcome {
    let conj = &(&SPoly::y_pow(-1) * &SPoly::x_pow(1)) * &SPoly::y_pow(1);
    ensure!(conj == SPoly::x_pow(-1), "y^-1 x y = {conj}");
    let r = sp("x^3 - x - 1");
    let twisted = &(&SPoly::y_pow(-1) * &r) * &SPoly::y_pow(1);
    ensure!(twisted == SPoly::from_r(rp("x^3 - x - 1").sigma()), "y^-1 r y = {twisted}");
    for relator in builtin::q().relators().iter().chain(builtin::p().relators()) {
        let g = eval_word(relator).map_err(|e| e.to_string())?;
        ensure!(g.is_identity(), "{relator} evaluates to {g}");
    }
    Ok(())
}

fn a4_factorization() -> Outcome {
    let chains = ChainData::builtin();
    ensure!(verify_factorization(&chains), "factorization rows differ: {:?}", chains);
    // the certificates produce the same factors
    let p = builtin::p();
    for (cert, factor) in builtin::q_over_p().iter().zip(standard_factors()) {
        let f = cert.boundary_factor(&p).map_err(|e| e.to_string())?;
        ensure!(f.get(&0) == Some(&factor), "boundary factor {:?} != {factor}", f);
    }
    // negative control: swapped relators must not match
    let q = builtin::q();
    let swapped = q
        .with_relators(q.relators().iter().rev().cloned().collect())
        .map_err(|e| e.to_string())?;
    let bad = ChainData::build(&p, &swapped).map_err(|e| e.to_string())?;
    ensure!(!verify_factorization(&bad), "swapped relators still factor");
    Ok(())
}

fn a5_bezout_and_splitting() -> Outcome {
    let inst = StaffordInstance::standard();
    let w = builtin::bezout_witness();
    let displayed =
        sp("(x^3-x-1)(x^{-3}-x^{-4}-y^{-1})-(y-x^{-1})(x^4-x^2-x)y^{-1}");
    ensure!(displayed.is_one(), "displayed identity evaluates to {displayed}");
    ensure!(verify_bezout(&w, &inst), "witness does not evaluate to 1");
    ensure!(psi(&w.beta, &w.alpha, &inst).is_one(), "psi(beta, alpha) != 1");
    let split = Splitting::new(&w, &inst);
    ensure!(split.psi_of_section_is_identity(), "psi t != id");
    ensure!(split.projection_is_idempotent(), "pi^2 != pi");
    ensure!(split.projection_lands_in_kernel(), "psi pi != 0");
    ensure!(splitting_check(&w, &inst), "splitting_check rejected the witness");
    Ok(())
}

fn a6_divisibility() -> Outcome {
    let r = rp("x^3 - x - 1");
    let divides = RPoly::divides(&r, &rp("x^3 + x^2 - 1")).map_err(|e| e.to_string())?;
    ensure!(!divides, "x^3 - x - 1 divides x^3 + x^2 - 1");
    ensure!(!rational_divides(&r, &rp("x^3 + x^2 - 1")), "oracle disagrees");
    ensure!(
        &rp("x^3 + x^2 - 1") - &r == rp("x^2 + x"),
        "difference of the cubics is not x^2 + x"
    );
    ensure!(
        rp("x^2 + x").length().unwrap() < r.length().unwrap(),
        "length argument fails"
    );
    let inst = StaffordInstance::standard();
    ensure!(no_monic_degree_one(&inst), "no_monic_degree_one is false");
    ensure!(
        stafford_verdict(&inst, &builtin::bezout_witness()).condition_ii,
        "condition (ii) reported false"
    );
    Ok(())
}

fn a7_witness_structure() -> Outcome {
    let inst = StaffordInstance::standard();
    let degree_one = SPoly::from_rows([(1, inst.r().clone()), (0, inst.s() * &inst.r().sigma())]);
    ensure!(in_v(&degree_one, &inst), "y r + s sigma(r) not in V");
    ensure!(degree_one.y_span() == Some(1), "y-span of {degree_one} is not 1");
    ensure!(
        !degree_one.leading_coefficient().unwrap().is_unit(),
        "leading coefficient is a unit"
    );
    let monic = sp("y^2 - 1");
    ensure!(in_v(&monic, &inst), "y^2 - 1 not in V");
    ensure!(monic.leading_coefficient().unwrap().is_one(), "y^2 - 1 is not monic");
    ensure!(!in_v(&SPoly::one(), &inst), "1 is in V");
    let found = witnesses(&inst).map_err(|e| e.to_string())?;
    ensure!(
        found == Witnesses { degree_one, monic },
        "witness search returned {:?}",
        found
    );
    Ok(())
}

fn a8_presentation_equivalence() -> Outcome {
    let (p, q) = (builtin::p(), builtin::q());
    let verdict = equivalence_verdict(&p, &q, &builtin::q_over_p(), &[builtin::p_over_q()])
        .map_err(|e| e.to_string())?;
    ensure!(verdict, "P and Q not certified equivalent");
    let missing = equivalence_verdict(&p, &q, &builtin::q_over_p(), &[]).map_err(|e| e.to_string())?;
    ensure!(!missing, "verdict true without the reverse certificate");
    Ok(())
}

fn a9_theorem_a() -> Outcome {
    let report = theorem_a_report();
    for (name, _, ok) in report.flags() {
        ensure!(ok, "flag {name} is false:\n{report}");
    }

    // corrupted forward certificate: flip the sign of one factor
    let mut inputs = ReportInputs::builtin();
    inputs.q_over_p[0].factors[1].sign = 1;
    let r = build_report(&inputs);
    ensure!(!r.pi1_ok && !r.theorem_a, "corrupted certificate not detected");
    ensure!(r.chi_ok && r.bezout_ok && r.condition_ii, "unrelated flags changed");

    // r replaced by 1
    let mut inputs = ReportInputs::builtin();
    inputs.instance = StaffordInstance::new(RPoly::one(), rp("-x^-1")).unwrap();
    let r = build_report(&inputs);
    ensure!(!r.condition_ii && !r.theorem_a, "unit r not detected");
    ensure!(r.pi1_ok && r.factorization_ok, "unrelated flags changed");

    // Bezout witness with a flipped sign
    let mut inputs = ReportInputs::builtin();
    inputs.witness = BezoutWitness::new(inputs.witness.alpha.clone(), -&inputs.witness.beta);
    let r = build_report(&inputs);
    ensure!(!r.bezout_ok && !r.condition_i && !r.splitting_ok && !r.theorem_a, "bad witness not detected");
    ensure!(r.pi1_ok && r.condition_ii, "unrelated flags changed");

    let again = theorem_a_report();
    ensure!(again.to_json() == report.to_json(), "report is not deterministic");
    Ok(())
}

fn a10_properties() -> Outcome {
    let mut rng = rng();
    let gens = xy();
    let one = FreeCombo::word(Word::identity());

    for _ in 0..CASES {
        let (u, v, w) = (random_word(&mut rng, 6), random_word(&mut rng, 6), random_word(&mut rng, 6));
        ensure!(u.multiply(&v).multiply(&w) == u.multiply(&v.multiply(&w)), "word associativity");
        ensure!(u.multiply(&Word::identity()) == u && Word::identity().multiply(&u) == u, "word identity");
        ensure!(u.multiply(&u.invert()).is_identity() && u.invert().multiply(&u).is_identity(), "word inverse");
    }

    for _ in 0..CASES {
        let (a, b, c) = (random_rpoly(&mut rng), random_rpoly(&mut rng), random_rpoly(&mut rng));
        ensure!(&(&a * &b) * &c == &a * &(&b * &c), "R associativity");
        ensure!(&a * &b == &b * &a, "R commutativity");
        ensure!(&a * &(&b + &c) == &(&a * &b) + &(&a * &c), "R distributivity");
        ensure!(&(&a + &b) - &b == a && &a * &RPoly::one() == a, "R identities");
        ensure!(a.sigma().sigma() == a, "sigma involution");
        ensure!((&a * &b).sigma() == &a.sigma() * &b.sigma(), "sigma multiplicative");
        ensure!((&a + &b).sigma() == &a.sigma() + &b.sigma(), "sigma additive");
    }

    for _ in 0..CASES {
        let (f, g, h) = (random_spoly(&mut rng), random_spoly(&mut rng), random_spoly(&mut rng));
        ensure!(&(&f * &g) * &h == &f * &(&g * &h), "S associativity: {f}, {g}, {h}");
        ensure!(&f * &(&g + &h) == &(&f * &g) + &(&f * &h), "S left distributivity");
        ensure!(&(&f + &g) * &h == &(&f * &h) + &(&g * &h), "S right distributivity");
        ensure!(&SPoly::one() * &f == f && &f * &SPoly::one() == f, "S identity");
    }

    for _ in 0..CASES {
        let (a, b) = (random_nonzero_rpoly(&mut rng), random_nonzero_rpoly(&mut rng));
        ensure!(!(&a * &b).is_zero(), "R zero divisors {a}, {b}");
        let (f, g) = (random_nonzero_spoly(&mut rng), random_nonzero_spoly(&mut rng));
        ensure!(!(&f * &g).is_zero(), "S zero divisors {f}, {g}");
    }

    let inst = StaffordInstance::standard();
    for _ in 0..CASES {
        let f = random_spoly(&mut rng);
        let d = divide(&f, inst.s());
        ensure!(d.recompose(inst.s()) == f, "division recomposition for {f}");
    }

    let found = witnesses(&inst).map_err(|e| e.to_string())?;
    for _ in 0..CASES {
        let v = &(&found.degree_one * &random_spoly(&mut rng)) + &(&found.monic * &random_spoly(&mut rng));
        let w = random_spoly(&mut rng);
        ensure!(in_v(&v, &inst), "generated element {v} not in V");
        ensure!(in_v(&(&v * &w), &inst), "V not closed under right multiplication");
        let u = kbb_core::lift_kernel(&v, &inst).map_err(|e| e.to_string())?;
        ensure!(psi(&u, &v, &inst).is_zero(), "kernel lift fails for {v}");
        ensure!(&inst.y_plus_s() * &u == -left_scale(inst.r(), &v), "lift identity");
    }

    for _ in 0..CASES {
        let w = random_word(&mut rng, 8);
        let sum = gens.iter().fold(FreeCombo::zero(), |acc, g| {
            let g_minus_1 = FreeCombo::word(Word::letter(g.clone(), 1)).sub(&one);
            acc.add(&fox_derivative(&w, g).mul(&g_minus_1))
        });
        ensure!(sum == FreeCombo::word(w.clone()).sub(&one), "Fox fundamental identity for {w}");
    }

    let p = builtin::p();
    ensure!(ChainData::builtin().composites_vanish(), "d1 d2 != 0 for P or Q");
    for _ in 0..CASES {
        // a random consequence of P's relator
        let n = rng.gen_range(1..=3);
        let factors = (0..n)
            .map(|_| Factor::new(random_word(&mut rng, 4), 0, if rng.gen_bool(0.5) { 1 } else { -1 }).unwrap())
            .collect::<Vec<_>>();
        let cert = ConjugacyCertificate::new(Word::identity(), "P", factors);
        let relator = cert.product(&p).map_err(|e| e.to_string())?;
        let pres = Presentation::new(gens.clone(), vec![relator.clone()]).map_err(|e| e.to_string())?;
        let b = boundary_matrices(&pres, eval_combo).map_err(|e| e.to_string())?;
        ensure!(b.composite_vanishes(), "d1 d2 != 0 for relator {relator}");
    }
    Ok(())
}

fn main() -> ExitCode {
    let criteria: [(&str, &str, fn() -> Outcome); 10] = [
        ("A1", "Euler characteristics of P and Q", a1_euler_characteristics),
        ("A2", "relators of Q as products of conjugates", a2_conjugate_products),
        ("A3", "group ring law and relator evaluation", a3_group_ring_law),
        ("A4", "boundary factorization identities", a4_factorization),
        ("A5", "Bezout identity and splitting", a5_bezout_and_splitting),
        ("A6", "divisibility obstruction", a6_divisibility),
        ("A7", "witness structure of V", a7_witness_structure),
        ("A8", "presentation equivalence", a8_presentation_equivalence),
        ("A9", "non-freeness verdict and negative controls", a9_theorem_a),
        ("A10", "randomized property suites", a10_properties),
    ];
    let mut failed = 0;
    for (id, name, check) in criteria {
        match check() {
            Ok(()) => println!("{id:<4} PASS  {name}"),
            Err(why) => {
                failed += 1;
                println!("{id:<4} FAIL  {name}: {why}");
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
