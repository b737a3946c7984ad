//! The `nelson` command line. [`run`] takes arguments and an output sink
//! and returns the exit code: 0 pass, 1 logical failure, 2 usage or I/O.

use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::{Duration, Instant};

use clap::{Parser, Subcommand};
use serde_json::json;

use crate::algebra::{check_cibrl, check_cibrl_3potent, check_s_prime};
use crate::algebraizer::{check_s_def34, compile_calculus, describe, parse_calculus, Form};
use crate::calculus_s::{check_proof, Mode, Proof};
use crate::formula::{parse_any, Lang};
use crate::hilbert::HilbertProof;
use crate::search::{enumerate, find_countermodel, find_countermodel_among, AnyAlgebra, Class, EnumOptions};
use crate::term::{eval_named, parse_statement, parse_term, Interpretation};

#[derive(Parser, Debug)]
#[command(
    name = "nelson",
    version,
    about = "Proof checkers and finite models for Nelson's logics"
)]
pub struct Cli {
    /// Machine-readable output.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check a proof file.
    CheckProof {
        file: PathBuf,
        /// s, sprime, n4 or n3
        #[arg(long, default_value = "s")]
        calculus: String,
        /// standard or historical (calculus s only)
        #[arg(long, default_value = "standard")]
        mode: String,
    },
    /// Check an algebra file against a class.
    CheckAlgebra {
        file: PathBuf,
        /// cibrl, cibrl-3potent, sprime, s-def34, n4 or n3
        #[arg(long)]
        class: String,
        #[arg(long, default_value_t = 2)]
        gamma_bound: usize,
    },
    /// Evaluate a term in an algebra: `eval alg.alg "x => y" x=a y=b`.
    Eval {
        file: PathBuf,
        term: String,
        valuation: Vec<String>,
    },
    /// Enumerate a class at one size up to isomorphism.
    Enumerate {
        #[arg(long)]
        class: String,
        #[arg(long)]
        size: usize,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Raise the size ceiling (default 6).
        #[arg(long)]
        ceiling: Option<usize>,
        /// Stop after this many seconds and flag the result partial.
        #[arg(long)]
        budget: Option<f64>,
    },
    /// Search for a countermodel to `t = t`, `t <= t` or `e, e ==> e`.
    Countermodel {
        #[arg(long)]
        statement: String,
        #[arg(long)]
        class: Option<String>,
        #[arg(long, default_value_t = 4)]
        max_size: usize,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Search these algebra files instead of a class.
        #[arg(long)]
        algebra: Vec<PathBuf>,
    },
    /// Translate a calculus file into equations and quasiequations.
    CompileCalculus {
        file: PathBuf,
        #[arg(long, default_value_t = 2)]
        gamma_bound: usize,
        /// normalized (phi = 1) or defining (phi = phi -> phi)
        #[arg(long)]
        form: Option<String>,
    },
    /// Discharge an assumption from an S′ proof.
    Dmt {
        file: PathBuf,
        /// The assumption to discharge.
        #[arg(long)]
        discharge: String,
    },
    /// Replay a scripted check on the bundled fixtures.
    Demo {
        /// inconsistency, mv3, prop2.1, thm3.1, lemma3.9, prop5.3, prop5.5 or dmt
        item: String,
        #[arg(long, default_value_t = crate::demo::DEFAULT_SEED)]
        seed: u64,
    },
}

enum Outcome {
    Pass,
    Fail,
}

fn usage(msg: impl Into<String>) -> crate::Error {
    crate::Error::Input(msg.into())
}

fn read(path: &Path) -> Result<String, crate::Error> {
    std::fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = write!(out, "{e}");
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match execute(&cli, out) {
        Ok(Outcome::Pass) => 0,
        Ok(Outcome::Fail) => 1,
        Err(e) => {
            let _ = writeln!(out, "error: {e}");
            2
        }
    }
}

fn verdict(ok: bool) -> Outcome {
    if ok {
        Outcome::Pass
    } else {
        Outcome::Fail
    }
}

fn emit(
    out: &mut dyn Write,
    json: bool,
    value: serde_json::Value,
    text: impl std::fmt::Display,
) -> Result<(), crate::Error> {
    if json {
        writeln!(out, "{}", serde_json::to_string_pretty(&value).expect("serializable"))?;
    } else {
        writeln!(out, "{text}")?;
    }
    Ok(())
}

fn execute(cli: &Cli, out: &mut dyn Write) -> Result<Outcome, crate::Error> {
    let json = cli.json;
    match &cli.command {
        Command::CheckProof { file, calculus, mode } => {
            let text = read(file)?;
            let report = match calculus.as_str() {
                "s" => {
                    let mode: Mode = mode.parse().map_err(usage)?;
                    check_proof(&Proof::parse(&text)?, mode)
                }
                "sprime" => crate::calculus_s_prime::check_proof_sp(&HilbertProof::parse(&text)?),
                "n4" => crate::n4::calculus().check(&HilbertProof::parse(&text)?),
                "n3" => crate::n4::calculus_n3().check(&HilbertProof::parse(&text)?),
                other => {
                    return Err(usage(format!(
                        "unknown calculus `{other}`; expected s, sprime, n4 or n3"
                    )))
                }
            };
            let ok = report.accepted();
            emit(out, json, json!({"accepted": ok, "report": report}), &report)?;
            Ok(verdict(ok))
        }
        Command::CheckAlgebra {
            file,
            class,
            gamma_bound,
        } => {
            let a = AnyAlgebra::parse(&read(file)?)?;
            let report = match (class.replace('_', "-").as_str(), &a) {
                ("cibrl", AnyAlgebra::Residuated(a)) => check_cibrl(a),
                ("cibrl-3potent", AnyAlgebra::Residuated(a)) => check_cibrl_3potent(a),
                ("sprime" | "s-prime", AnyAlgebra::Residuated(a)) => check_s_prime(a),
                ("s-def34", AnyAlgebra::Residuated(a)) => check_s_def34(a, *gamma_bound),
                ("s-def34", AnyAlgebra::N4(a)) => check_s_def34(&a.to_s_signature(), *gamma_bound),
                ("n4", AnyAlgebra::N4(a)) => crate::n4::check_n4_lattice(a),
                ("n3", AnyAlgebra::N4(a)) => crate::n4::check_n3(a),
                ("n4" | "n3", _) => return Err(usage("N4 classes need a file with `wimp` and `neg` blocks")),
                ("cibrl" | "cibrl-3potent" | "sprime" | "s-prime", _) => {
                    return Err(usage("residuated classes need a file with an `imp` block"))
                }
                (other, _) => {
                    return Err(usage(format!(
                        "unknown class `{other}`; expected cibrl, cibrl-3potent, sprime, s-def34, n4 or n3"
                    )))
                }
            };
            let ok = report.passed();
            emit(out, json, json!(report), &report)?;
            Ok(verdict(ok))
        }
        Command::Eval { file, term, valuation } => {
            let a = AnyAlgebra::parse(&read(file)?)?;
            let mut pool = Vec::new();
            let t = parse_term(term, &mut pool)?;
            let mut val = Vec::new();
            for kv in valuation {
                let (k, v) = kv
                    .split_once('=')
                    .ok_or_else(|| usage(format!("expected var=element, got `{kv}`")))?;
                val.push((k.trim().to_string(), v.trim().to_string()));
            }
            let v = eval_named(&a, &t, &pool, &val)?;
            let name = a.element_names()[v].clone();
            emit(out, json, json!({"term": term, "value": name}), &name)?;
            Ok(Outcome::Pass)
        }
        Command::Enumerate {
            class,
            size,
            jobs,
            ceiling,
            budget,
        } => {
            let class: Class = class.parse().map_err(usage)?;
            let opts = EnumOptions {
                jobs: *jobs,
                deadline: budget.map(|s| Instant::now() + Duration::from_secs_f64(s)),
                ceiling: ceiling.unwrap_or(crate::search::DEFAULT_CEILING),
            };
            let r = enumerate(class, *size, &opts).map_err(|e| usage(e.to_string()))?;
            let dumps: Vec<String> = r.algebras.iter().map(AnyAlgebra::to_file_string).collect();
            if json {
                emit(
                    out,
                    true,
                    json!({"class": class.name(), "size": size, "count": dumps.len(), "partial": r.partial, "algebras": dumps}),
                    "",
                )?;
            } else {
                for (i, d) in dumps.iter().enumerate() {
                    writeln!(out, "# {} #{}\n{d}", class.name(), i + 1)?;
                }
                writeln!(
                    out,
                    "{}: {} algebra(s) of size {size}{}",
                    class.name(),
                    dumps.len(),
                    if r.partial { " (partial: budget exhausted)" } else { "" }
                )?;
            }
            Ok(verdict(!r.partial))
        }
        Command::Countermodel {
            statement,
            class,
            max_size,
            jobs,
            algebra,
        } => {
            let q = parse_statement(statement)?;
            let found = if !algebra.is_empty() {
                let mut cands = Vec::new();
                for f in algebra {
                    cands.push(AnyAlgebra::parse(&read(f)?)?);
                }
                find_countermodel_among(&q, &cands)
            } else {
                let class: Class = class
                    .as_deref()
                    .ok_or_else(|| usage("give --class or --algebra"))?
                    .parse()
                    .map_err(usage)?;
                let opts = EnumOptions {
                    jobs: *jobs,
                    ceiling: (*max_size).max(crate::search::DEFAULT_CEILING),
                    ..Default::default()
                };
                find_countermodel(&q, class, *max_size, &opts).map_err(|e| usage(e.to_string()))?
            };
            match found {
                Some(c) => {
                    let val: serde_json::Map<String, serde_json::Value> =
                        c.valuation.0.iter().map(|(k, v)| (k.clone(), json!(v))).collect();
                    let text = format!(
                        "countermodel of size {}:\n{}valuation: {}\nsides: {} vs {}",
                        c.algebra.size(),
                        c.algebra.to_file_string(),
                        c.valuation,
                        c.sides.0,
                        c.sides.1
                    );
                    emit(
                        out,
                        json,
                        json!({"found": true, "size": c.algebra.size(), "algebra": c.algebra.to_file_string(), "valuation": val, "sides": [c.sides.0, c.sides.1]}),
                        text,
                    )?;
                    Ok(Outcome::Fail)
                }
                None => {
                    let text = if algebra.is_empty() {
                        format!("none up to size {max_size}")
                    } else {
                        "none among the given algebras".to_string()
                    };
                    emit(out, json, json!({"found": false, "max_size": max_size}), text)?;
                    Ok(Outcome::Pass)
                }
            }
        }
        Command::CompileCalculus {
            file,
            gamma_bound,
            form,
        } => {
            let c = parse_calculus(&read(file)?)?;
            let form = match form.as_deref() {
                None if c.lang == Lang::N4 => Form::Defining,
                None | Some("normalized") => Form::Normalized,
                Some("defining") => Form::Defining,
                Some(other) => return Err(usage(format!("unknown form `{other}`"))),
            };
            let conds = describe(&compile_calculus(&c, *gamma_bound, form));
            let mut text = String::new();
            for d in &conds {
                text.push_str(&format!("{}: {}\n", d.name, d.condition));
            }
            text.push_str(&format!("{} condition(s)", conds.len()));
            emit(out, json, json!(conds), text)?;
            Ok(Outcome::Pass)
        }
        Command::Dmt { file, discharge } => {
            let p = HilbertProof::parse(&read(file)?)?;
            let phi = parse_any(discharge)?;
            let before = crate::calculus_s_prime::check_proof_sp(&p);
            if !before.accepted() {
                writeln!(out, "input proof is not accepted:\n{before}")?;
                return Ok(Outcome::Fail);
            }
            let q = crate::calculus_s_prime::deduction_transform(&p, &phi)?;
            let report = crate::calculus_s_prime::check_proof_sp(&q);
            let ok = report.accepted();
            let text = format!(
                "{}# {} step(s); check: {}",
                q.to_file_string(),
                q.steps.len(),
                if ok { "ACCEPTED" } else { "REJECTED" }
            );
            emit(out, json, json!({"accepted": ok, "proof": q.to_file_string()}), text)?;
            Ok(verdict(ok))
        }
        Command::Demo { item, seed } => {
            let t = crate::demo::run(item, *seed)?;
            let ok = t.passed;
            emit(out, json, json!(t), &t)?;
            Ok(verdict(ok))
        }
    }
}

/// Entry point for the binary.
pub fn main() -> std::process::ExitCode {
    let stdout = std::io::stdout();
    let code = run(std::env::args_os(), &mut stdout.lock());
    std::process::ExitCode::from(code as u8)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String) {
        let mut buf = Vec::new();
        let code = run(std::iter::once("nelson").chain(args.iter().copied()), &mut buf);
        (code, String::from_utf8(buf).unwrap())
    }

    fn fixture(name: &str) -> String {
        format!("{}/fixtures/{name}", env!("CARGO_MANIFEST_DIR"))
    }

    #[test]
    fn exit_codes() {
        let (c, _) = call(&["check-algebra", &fixture("l3.alg"), "--class", "sprime"]);
        assert_eq!(c, 0);
        let (c, o) = call(&["check-algebra", &fixture("godel3.alg"), "--class", "sprime"]);
        assert_eq!(c, 1, "{o}");
        let (c, _) = call(&["check-algebra", "/nonexistent.alg", "--class", "sprime"]);
        assert_eq!(c, 2);
        let (c, _) = call(&["no-such-command"]);
        assert_eq!(c, 2);
        let (c, _) = call(&["demo", "bogus"]);
        assert_eq!(c, 2);
    }

    #[test]
    fn proofs() {
        let f = fixture("proofs/inconsistency.proof");
        assert_eq!(call(&["check-proof", &f, "--mode", "historical"]).0, 0);
        let (c, o) = call(&["check-proof", &f]);
        assert_eq!(c, 1);
        assert!(o.contains("step 3: REJECTED"), "{o}");
        assert_eq!(
            call(&[
                "check-proof",
                &fixture("proofs/n4/p-implies-p.proof"),
                "--calculus",
                "n4"
            ])
            .0,
            0
        );
        assert_eq!(
            call(&[
                "check-proof",
                &fixture("proofs/sprime/weaken.proof"),
                "--calculus",
                "sprime"
            ])
            .0,
            0
        );
    }

    #[test]
    fn eval_and_countermodel() {
        let (c, o) = call(&["eval", &fixture("a4.alg"), "x => x", "x=b"]);
        assert_eq!((c, o.trim()), (0, "b"));
        let (c, o) = call(&[
            "countermodel",
            "--statement",
            "x => x = y => y",
            "--algebra",
            &fixture("a4.alg"),
        ]);
        assert_eq!(c, 1);
        assert!(o.contains("valuation: x=0, y=b"), "{o}");
        let (c, o) = call(&[
            "countermodel",
            "--statement",
            "x => x = y => y",
            "--class",
            "s_prime",
            "--max-size",
            "4",
        ]);
        assert_eq!((c, o.trim()), (0, "none up to size 4"));
        let (c, o) = call(&["--json", "enumerate", "--class", "s_prime", "--size", "4"]);
        assert_eq!(c, 0);
        let v: serde_json::Value = serde_json::from_str(&o).unwrap();
        assert_eq!(v["count"], 2);
    }

    #[test]
    fn compile_and_dmt() {
        let (c, o) = call(&["compile-calculus", &fixture("s.calc")]);
        assert_eq!(c, 0);
        assert!(o.trim_end().ends_with("47 condition(s)"), "{o}");
        let (c, o) = call(&["compile-calculus", &fixture("n4.calc"), "--gamma-bound", "0"]);
        assert_eq!(c, 0, "{o}");
        let dir = std::env::temp_dir().join(format!("nelson-dmt-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("p.proof");
        let (p, phi) = crate::calculus_s_prime::random_suite(7, 1, 10).remove(0);
        std::fs::write(&path, p.to_file_string()).unwrap();
        let (c, o) = call(&["dmt", path.to_str().unwrap(), "--discharge", &phi.to_string()]);
        assert_eq!(c, 0, "{o}");
        let _ = std::fs::remove_dir_all(&dir);
    }
}
