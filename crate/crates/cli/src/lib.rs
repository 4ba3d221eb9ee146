//! Command-line front end. Exit status is 0 when every requested check
//! passes, 1 when a check fails and 2 on input or parse errors.

use std::fmt::Display;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use kbb_core::skew::{divide, left_scale};
use kbb_core::stafford::stafford_verdict;
use kbb_core::{
    boundary_matrices, builtin, eval_combo, eval_word, fox_derivative, in_v, lift_kernel, theorem_a_report,
    witnesses, BezoutWitness, ConjugacyCertificate, Presentation, RPoly, SPoly, StaffordInstance, Word,
};
use serde_json::{json, Value};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    #[default]
    Text,
}

#[derive(Debug, Parser)]
#[command(name = "kbb", version, about = "Exact checks for a fake Klein bottle with bubble")]
pub struct RunConfig {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run every check and print the non-freeness report.
    VerifyPaper,
    /// Euler characteristic of a presentation (default: built-in P and Q).
    Chi {
        #[arg(long)]
        presentation: Option<PathBuf>,
    },
    /// Normal form y^m x^n of a word, or of an element of S with --ring.
    NormalForm {
        input: String,
        #[arg(long)]
        ring: bool,
    },
    /// Fox derivative of a word, or boundary matrices of a presentation.
    Fox {
        word: Option<String>,
        #[arg(long, short)]
        generator: Option<String>,
        #[arg(long)]
        presentation: Option<PathBuf>,
    },
    /// Membership of an element of S in V = {v | r v in (y + s)S}.
    Member {
        element: String,
        #[arg(long)]
        r: Option<String>,
        #[arg(long)]
        s: Option<String>,
    },
    /// Divisibility of B by A in Z[x, x^-1].
    Divides { a: String, b: String },
    /// Check a product-of-conjugates certificate (default: all built-ins).
    Certificate {
        #[arg(long)]
        certificate: Option<PathBuf>,
        #[arg(long)]
        presentation: Option<PathBuf>,
    },
    /// Stafford's conditions for an instance (default r = x^3 - x - 1, s = -x^-1).
    Stafford {
        #[arg(long)]
        r: Option<String>,
        #[arg(long)]
        s: Option<String>,
        #[arg(long)]
        alpha: Option<String>,
        #[arg(long)]
        beta: Option<String>,
    },
}

/// Exit statuses.
pub const PASS: u8 = 0;
pub const CHECK_FAILED: u8 = 1;
pub const INPUT_ERROR: u8 = 2;

struct Outcome {
    passed: bool,
    json: Value,
    text: String,
}

impl Outcome {
    fn info(json: Value, text: String) -> Self {
        Outcome { passed: true, json, text }
    }
}

fn input_error(e: impl Display) -> String {
    e.to_string()
}

fn read(path: &Path) -> Result<String, String> {
    std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))
}

fn load_presentation(path: &Path) -> Result<Presentation, String> {
    Presentation::from_json(&read(path)?).map_err(|e| format!("{}: {e}", path.display()))
}

fn instance(r: Option<&str>, s: Option<&str>) -> Result<StaffordInstance, String> {
    let standard = StaffordInstance::standard();
    let r = match r {
        Some(text) => text.parse::<RPoly>().map_err(input_error)?,
        None => standard.r().clone(),
    };
    let s = match s {
        Some(text) => text.parse::<RPoly>().map_err(input_error)?,
        None => standard.s().clone(),
    };
    StaffordInstance::new(r, s).map_err(input_error)
}

fn verify_paper() -> Outcome {
    let report = theorem_a_report();
    Outcome {
        passed: report.theorem_a,
        json: serde_json::to_value(&report).expect("report serializes"),
        text: report.to_string(),
    }
}

fn chi(presentation: Option<&Path>) -> Result<Outcome, String> {
    Ok(match presentation {
        Some(path) => {
            let chi = load_presentation(path)?.euler_characteristic();
            Outcome::info(json!({ "chi": chi }), format!("{chi}\n"))
        }
        None => {
            let (p, q) = (builtin::p().euler_characteristic(), builtin::q().euler_characteristic());
            Outcome::info(json!({ "P": p, "Q": q }), format!("chi(P) = {p}\nchi(Q) = {q}\n"))
        }
    })
}

fn normal_form(input: &str, ring: bool) -> Result<Outcome, String> {
    if ring {
        let f: SPoly = input.parse().map_err(input_error)?;
        return Ok(Outcome::info(json!({ "input": input, "normal_form": f.to_string() }), format!("{f}\n")));
    }
    let w = Word::parse(input, builtin::p().generators()).map_err(input_error)?;
    let g = eval_word(&w).map_err(input_error)?;
    Ok(Outcome::info(
        json!({ "input": input, "normal_form": g.to_string(), "m": g.m, "n": g.n }),
        format!("{g}\n"),
    ))
}

fn fox(word: Option<&str>, generator: Option<&str>, presentation: Option<&Path>) -> Result<Outcome, String> {
    let pres = match presentation {
        Some(path) => load_presentation(path)?,
        None => builtin::q(),
    };
    let Some(word) = word else {
        let b = boundary_matrices(&pres, eval_combo).map_err(input_error)?;
        let rows: Vec<Vec<String>> = b.d2.iter().map(|r| r.iter().map(SPoly::to_string).collect()).collect();
        let d1: Vec<String> = b.d1.iter().map(SPoly::to_string).collect();
        let ok = b.composite_vanishes();
        let mut text = String::new();
        for (relator, row) in pres.relators().iter().zip(&rows) {
            text.push_str(&format!("d2[{relator}] = ({})\n", row.join(", ")));
        }
        text.push_str(&format!("d1 = ({})\nd1 d2 = 0: {ok}\n", d1.join(", ")));
        return Ok(Outcome {
            passed: ok,
            json: json!({ "d2": rows, "d1": d1, "composite_zero": ok }),
            text,
        });
    };
    let w = Word::parse(word, pres.generators()).map_err(input_error)?;
    let names: Vec<&str> = match generator {
        Some(g) => vec![g],
        None => pres.generators().iter().map(|g| g.name()).collect(),
    };
    let mut entries = Vec::new();
    let mut text = String::new();
    for name in names {
        let g = pres.generator(name).map_err(input_error)?;
        let d = fox_derivative(&w, g);
        let evaluated = eval_combo(&d.anti_involution()).ok().map(|s| s.to_string());
        text.push_str(&format!("d/d{name} = {d}\n"));
        if let Some(e) = &evaluated {
            text.push_str(&format!("  in S (right convention) = {e}\n"));
        }
        entries.push(json!({ "generator": name, "derivative": d.to_string(), "evaluated": evaluated }));
    }
    Ok(Outcome::info(json!({ "word": w.to_string(), "derivatives": entries }), text))
}

fn member(element: &str, r: Option<&str>, s: Option<&str>) -> Result<Outcome, String> {
    let inst = instance(r, s)?;
    let v: SPoly = element.parse().map_err(input_error)?;
    let member = in_v(&v, &inst);
    let division = divide(&left_scale(inst.r(), &v), inst.s());
    let lift = lift_kernel(&v, &inst).ok();
    let mut text = format!("{member}\n");
    match &lift {
        Some(u) => text.push_str(&format!("u = {u} with psi(u, v) = 0\n")),
        None => text.push_str(&format!(
            "remainder of r v: y^{}*({})\n",
            division.rem_degree, division.remainder
        )),
    }
    Ok(Outcome {
        passed: member,
        json: json!({
            "v": v.to_string(),
            "r": inst.r().to_string(),
            "s": inst.s().to_string(),
            "in_v": member,
            "lift": lift.map(|u| u.to_string()),
            "remainder": division.remainder.to_string(),
        }),
        text,
    })
}

fn divides(a: &str, b: &str) -> Result<Outcome, String> {
    let a: RPoly = a.parse().map_err(input_error)?;
    let b: RPoly = b.parse().map_err(input_error)?;
    let quotient = RPoly::exact_quotient(&b, &a).map_err(input_error)?;
    let ok = quotient.is_some();
    Ok(Outcome {
        passed: ok,
        json: json!({
            "a": a.to_string(),
            "b": b.to_string(),
            "divides": ok,
            "quotient": quotient.as_ref().map(RPoly::to_string),
        }),
        text: format!("{ok}\n"),
    })
}

fn certificate(path: Option<&Path>, presentation: Option<&Path>) -> Result<Outcome, String> {
    let certs: Vec<(ConjugacyCertificate, Presentation)> = match path {
        Some(path) => {
            let text = read(path)?;
            let src = match presentation {
                Some(p) => load_presentation(p)?,
                None => {
                    let name = ConjugacyCertificate::source_of_json(&text).map_err(input_error)?;
                    builtin::presentation(&name)
                        .ok_or_else(|| format!("unknown source `{name}`; pass --presentation"))?
                }
            };
            let cert = ConjugacyCertificate::from_json(&text, &src).map_err(input_error)?;
            vec![(cert, src)]
        }
        None => builtin::certificates()
            .into_iter()
            .map(|c| {
                let src = builtin::presentation(&c.source).expect("built-in source");
                (c, src)
            })
            .collect(),
    };
    let mut passed = true;
    let mut entries = Vec::new();
    let mut text = String::new();
    for (cert, src) in &certs {
        let valid = cert.check(src).map_err(input_error)?;
        passed &= valid;
        let factors = cert.boundary_factor(src).ok().map(|m| {
            m.into_iter()
                .map(|(j, f)| (j.to_string(), Value::String(f.to_string())))
                .collect::<serde_json::Map<_, _>>()
        });
        text.push_str(&format!(
            "[{}] {} over {} ({} factors)\n",
            if valid { "PASS" } else { "FAIL" },
            cert.target,
            cert.source,
            cert.factors.len()
        ));
        if let Some(f) = &factors {
            for (j, v) in f {
                text.push_str(&format!("  boundary factor of relator {j}: {}\n", v.as_str().unwrap_or("")));
            }
        }
        entries.push(json!({
            "target": cert.target.to_string(),
            "source": cert.source,
            "valid": valid,
            "boundary_factor": factors,
        }));
    }
    Ok(Outcome { passed, json: Value::Array(entries), text })
}

fn stafford(
    r: Option<&str>,
    s: Option<&str>,
    alpha: Option<&str>,
    beta: Option<&str>,
) -> Result<Outcome, String> {
    let inst = instance(r, s)?;
    let standard = builtin::bezout_witness();
    let alpha = match alpha {
        Some(a) => a.parse().map_err(input_error)?,
        None => standard.alpha,
    };
    let beta = match beta {
        Some(b) => b.parse().map_err(input_error)?,
        None => standard.beta,
    };
    let witness = BezoutWitness::new(alpha, beta);
    let verdict = stafford_verdict(&inst, &witness);
    let found = witnesses(&inst).ok();
    let passed = verdict.condition_i && verdict.condition_ii && verdict.witnesses_ok;
    let mut text = format!(
        "r = {}, s = {}\ncondition (i)  rS + (y+s)S = S: {}\ncondition (ii) s r^sigma not in rR: {}\nwitnesses: {}\n",
        inst.r(),
        inst.s(),
        verdict.condition_i,
        verdict.condition_ii,
        verdict.witnesses_ok
    );
    if let Some(w) = &found {
        text.push_str(&format!("degree-one element of V: {}\nmonic element of V: {}\n", w.degree_one, w.monic));
    }
    text.push_str(&format!("V stably free and not free: {passed}\n"));
    Ok(Outcome {
        passed,
        json: json!({
            "r": inst.r().to_string(),
            "s": inst.s().to_string(),
            "alpha": witness.alpha.to_string(),
            "beta": witness.beta.to_string(),
            "condition_i": verdict.condition_i,
            "condition_ii": verdict.condition_ii,
            "witnesses_ok": verdict.witnesses_ok,
            "degree_one_witness": found.as_ref().map(|w| w.degree_one.to_string()),
            "monic_witness": found.as_ref().map(|w| w.monic.to_string()),
            "non_free": passed,
        }),
        text,
    })
}

/// Runs one command, writing its report to `out`, and returns the exit status.
pub fn run(config: &RunConfig, out: &mut impl Write, err: &mut impl Write) -> u8 {
    let result = match &config.command {
        Command::VerifyPaper => Ok(verify_paper()),
        Command::Chi { presentation } => chi(presentation.as_deref()),
        Command::NormalForm { input, ring } => normal_form(input, *ring),
        Command::Fox { word, generator, presentation } => {
            fox(word.as_deref(), generator.as_deref(), presentation.as_deref())
        }
        Command::Member { element, r, s } => member(element, r.as_deref(), s.as_deref()),
        Command::Divides { a, b } => divides(a, b),
        Command::Certificate { certificate: c, presentation } => certificate(c.as_deref(), presentation.as_deref()),
        Command::Stafford { r, s, alpha, beta } => {
            stafford(r.as_deref(), s.as_deref(), alpha.as_deref(), beta.as_deref())
        }
    };
    match result {
        Ok(outcome) => {
            let written = match config.format {
                Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(&outcome.json).expect("json")),
                Format::Text => write!(out, "{}", outcome.text),
            };
            if written.is_err() {
                return INPUT_ERROR;
            }
            if outcome.passed {
                PASS
            } else {
                CHECK_FAILED
            }
        }
        Err(message) => {
            let _ = writeln!(err, "error: {message}");
            INPUT_ERROR
        }
    }
}
