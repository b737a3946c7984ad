//! Scripted checks that replay the main results on bundled fixtures.

use std::fmt::Write as _;

use serde::Serialize;

use crate::algebra::{check_s_prime, involution, FiniteAlgebra};
use crate::algebraizer::check_s_def34;
use crate::calculus_s::{check_proof, Mode, Proof};
use crate::fixtures::load;
use crate::n4::{check_n3, check_n4_lattice, quotient, N4Algebra};
use crate::search::{enumerate, find_countermodel_among, isomorphic, residuated_up_to, AnyAlgebra, Class, EnumOptions};
use crate::term::{eval_named, parse_statement, parse_term, Interpretation};

pub const ITEMS: [&str; 8] = [
    "inconsistency",
    "mv3",
    "prop2.1",
    "thm3.1",
    "lemma3.9",
    "prop5.3",
    "prop5.5",
    "dmt",
];

pub const DEFAULT_SEED: u64 = 20_240_601;

#[derive(Clone, Debug, Default, Serialize)]
pub struct Transcript {
    pub item: String,
    pub passed: bool,
    pub lines: Vec<String>,
}

impl Transcript {
    fn new(item: &str) -> Self {
        Transcript {
            item: item.to_string(),
            passed: true,
            lines: Vec::new(),
        }
    }

    fn line(&mut self, s: impl Into<String>) {
        self.lines.push(s.into());
    }

    /// Records a check; the transcript fails if any check does.
    fn check(&mut self, what: &str, ok: bool) {
        self.passed &= ok;
        self.lines
            .push(format!("[{}] {what}", if ok { "pass" } else { "FAIL" }));
    }
}

impl std::fmt::Display for Transcript {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for l in &self.lines {
            writeln!(f, "{l}")?;
        }
        write!(f, "demo {}: {}", self.item, if self.passed { "PASS" } else { "FAIL" })
    }
}

pub fn run(item: &str, seed: u64) -> Result<Transcript, crate::Error> {
    match item {
        "inconsistency" => inconsistency(),
        "mv3" => mv3(),
        "prop2.1" => fixture_suite(),
        "thm3.1" => Ok(soundness()),
        "lemma3.9" => Ok(square_laws()),
        "prop5.3" => separation(),
        "prop5.5" => n3_inside_s(),
        "dmt" => Ok(dmt(seed)),
        _ => Err(crate::Error::Input(format!(
            "unknown demo `{item}`; expected one of {}",
            ITEMS.join(", ")
        ))),
    }
}

fn algebra(name: &str) -> Result<FiniteAlgebra, crate::Error> {
    Ok(FiniteAlgebra::parse(&load(name)?)?)
}

fn inconsistency() -> Result<Transcript, crate::Error> {
    let mut t = Transcript::new("inconsistency");
    let text = load("proofs/inconsistency.proof")?;
    let p = Proof::parse(&text)?;
    t.line(format!("proof of `{}` in {} steps:", p.goal, p.steps.len()));
    for l in p.to_file_string().lines() {
        t.line(format!("  {l}"));
    }
    t.check(
        "at most 6 steps, goal is a bare variable",
        p.steps.len() <= 6 && matches!(p.goal, crate::formula::Formula::Var(_)),
    );
    let h = check_proof(&p, Mode::Historical);
    t.check("historical mode accepts", h.accepted());
    let s = check_proof(&p, Mode::Standard);
    match s.first_rejection() {
        Some(v) => t.line(format!(
            "standard mode: step {} rejected: {}",
            v.step,
            v.reason.as_deref().unwrap_or("")
        )),
        None => t.line("standard mode: no step rejected"),
    }
    t.check("standard mode rejects", !s.accepted());
    Ok(t)
}

fn mv3() -> Result<Transcript, crate::Error> {
    let mut t = Transcript::new("mv3");
    let l3 = algebra("l3.alg")?;
    let r = check_s_prime(&l3);
    t.check("three-element MV-chain is an involutive 3-potent CIBRL", r.passed());
    let s = crate::algebra::to_s_algebra(&l3);
    t.check(
        "its S-signature reduct passes the S-algebra conditions (|G| <= 2)",
        check_s_def34(&s, 2).passed(),
    );
    let g = algebra("godel3.alg")?;
    let r = check_s_prime(&g);
    let failed: Vec<&str> = r.failures().map(|l| l.law.as_str()).collect();
    t.line(format!("Goedel chain fails: {}", failed.join(", ")));
    let inv = involution(&g);
    let witness = inv.witness.as_ref().map(|w| w.to_string()).unwrap_or_default();
    t.line(format!("involution witness: {witness}"));
    t.check(
        "Goedel chain fails only involution, at the middle element",
        failed == ["involution"] && witness == "a=m",
    );
    Ok(t)
}

fn fixture_suite() -> Result<Transcript, crate::Error> {
    let mut t = Transcript::new("prop2.1");
    for n in crate::calculus_s::fixtures() {
        let text = load(&format!("proofs/{}.proof", n.name))?;
        let p = Proof::parse(&text)?;
        let r = check_proof(&p, Mode::Standard);
        t.check(
            &format!("{:<12} {}  ({} steps)", n.name, p.goal, p.steps.len()),
            r.accepted(),
        );
    }
    Ok(t)
}

fn soundness() -> Transcript {
    let mut t = Transcript::new("thm3.1");
    let r = crate::laws::soundness_sweep(4);
    t.line(format!(
        "{} S'-algebras of size <= 4, {} formula checks, {} valuations",
        r.algebras, r.formulas_checked, r.valuations
    ));
    for v in &r.violations {
        t.line(format!("  {v}"));
    }
    t.check(
        "every fixture theorem and S' axiom takes value 1; MP preserves 1",
        r.violations.is_empty(),
    );
    t
}

fn square_laws() -> Transcript {
    use crate::algebra::three_potency;
    use crate::laws::{probe_without_3_potency, square_laws, SQUARE_LAWS};
    let mut t = Transcript::new("lemma3.9");
    let all = residuated_up_to(Class::Cibrl, 4);
    let potent: Vec<&FiniteAlgebra> = all.iter().filter(|a| three_potency(a).holds).collect();
    t.line(format!(
        "{} CIBRLs of size <= 4, {} of them 3-potent",
        all.len(),
        potent.len()
    ));
    t.check(
        &format!("{} on every CIBRL", SQUARE_LAWS[0]),
        all.iter().all(|a| square_laws(a)[0].holds),
    );
    for (i, law) in SQUARE_LAWS.iter().enumerate().skip(1) {
        t.check(
            &format!("{law} on every 3-potent CIBRL"),
            potent.iter().all(|a| square_laws(a)[i].holds),
        );
    }
    for i in [1, 3] {
        let p = probe_without_3_potency(i, 5);
        let first = match &p.first {
            Some((n, _, w)) => format!("; first at size {n}, {w}"),
            None => String::new(),
        };
        t.line(format!(
            "without 3-potency, {} fails in {} of {} CIBRLs of size <= {}{first}",
            p.law, p.refuted_by, p.examined, p.max_size
        ));
    }
    t
}

fn separation() -> Result<Transcript, crate::Error> {
    let mut t = Transcript::new("prop5.3");
    let a4 = N4Algebra::parse(&load("a4.alg")?)?;
    let r = check_n4_lattice(&a4);
    t.check("A4 is an N4-lattice", r.passed());
    if let Some(q) = quotient(&a4) {
        let classes: Vec<String> = q
            .classes
            .iter()
            .map(|c| {
                format!(
                    "{{{}}}",
                    c.iter().map(|&x| a4.names[x].as_str()).collect::<Vec<_>>().join(",")
                )
            })
            .collect();
        t.line(format!("quotient classes: {}", classes.join(" ")));
        t.check(
            "quotient is the two-element Boolean algebra",
            isomorphic(&q.to_algebra(&a4), &crate::algebra::boolean2()),
        );
    } else {
        t.check("quotient exists", false);
    }
    let q = parse_statement("x => x = y => y")?;
    let a4_any = AnyAlgebra::N4(a4.clone());
    match find_countermodel_among(&q, std::slice::from_ref(&a4_any)) {
        Some(c) => {
            t.line(format!(
                "first refuting valuation: {} ({} vs {})",
                c.valuation, c.sides.0, c.sides.1
            ));
            t.check("x => x = y => y fails in A4 under strong implication", true);
        }
        None => t.check("x => x = y => y fails in A4 under strong implication", false),
    }
    let mut pool = vec!["x".to_string()];
    let term = parse_term("x => x", &mut pool)?;
    let at = |e: &str| -> Result<String, crate::Error> {
        let v = eval_named(&a4, &term, &pool, &[("x".to_string(), e.to_string())])?;
        Ok(a4.element_names()[v].clone())
    };
    let (one, b) = (at("1")?, at("b")?);
    t.line(format!("1 => 1 = {one}, b => b = {b}"));
    t.check("values 1 and b", one == "1" && b == "b");
    t.check(
        "A4 under strong implication is not an S-algebra",
        !check_s_def34(&a4.to_s_signature(), 2).passed(),
    );
    let opts = EnumOptions::default();
    let mut none = true;
    let mut count = 0;
    for n in 1..=4 {
        let r = enumerate(Class::SPrime, n, &opts).expect("within ceiling");
        count += r.algebras.len();
        none &= find_countermodel_among(&q, &r.algebras).is_none();
    }
    t.check(
        &format!("x => x = y => y holds in all {count} S'-algebras of size <= 4"),
        none,
    );
    Ok(t)
}

fn n3_inside_s() -> Result<Transcript, crate::Error> {
    let mut t = Transcript::new("prop5.5");
    let opts = EnumOptions::default();
    let mut total = 0;
    let mut ok = true;
    for n in 1..=4 {
        let r = enumerate(Class::N3Lattice, n, &opts).expect("within ceiling");
        for a in r.algebras.iter().filter_map(AnyAlgebra::n4) {
            total += 1;
            ok &= check_s_def34(&a.to_s_signature(), 2).passed();
        }
    }
    t.check(
        &format!("all {total} N3-lattices of size <= 4 are S-algebras under strong implication"),
        ok,
    );
    let a4 = N4Algebra::parse(&load("a4.alg")?)?;
    let r = check_n3(&a4);
    let n13 = r.law("N13").expect("N13 is checked");
    let w = n13.witness.as_ref().map(|w| w.to_string()).unwrap_or_default();
    t.line(format!("A4: N13 fails ({} violation(s)), first at {w}", n13.violations));
    t.check("A4 is not an N3-lattice", !r.passed());
    Ok(t)
}

fn dmt(seed: u64) -> Transcript {
    use crate::calculus_s_prime::{check_proof_sp, deduction_transform, fixtures, random_suite, square};
    let mut t = Transcript::new("dmt");
    t.line(format!("seed {seed}"));
    let suite = random_suite(seed, 20, 15);
    let mut ok = 0;
    for (p, phi) in &suite {
        let rest: Vec<_> = p.assumptions.iter().filter(|a| *a != phi).cloned().collect();
        let good = check_proof_sp(p).accepted()
            && deduction_transform(p, phi).is_ok_and(|q| {
                check_proof_sp(&q).accepted()
                    && q.goal == crate::formula::Formula::imp(square(phi), p.goal.clone())
                    && q.assumptions == rest
            });
        ok += good as usize;
    }
    t.check(
        &format!(
            "{ok}/{} random derivations transform to accepted proofs of phi^2 => psi",
            suite.len()
        ),
        ok == suite.len(),
    );
    for (name, p) in fixtures() {
        let mut s = String::new();
        let _ = write!(s, "{name}: {}", p.goal);
        t.check(&s, check_proof_sp(&p).accepted());
    }
    t
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fast_demos_pass() {
        for item in ["inconsistency", "mv3", "prop2.1", "prop5.3", "prop5.5", "dmt"] {
            let t = run(item, DEFAULT_SEED).unwrap();
            assert!(t.passed, "{t}");
        }
        assert!(run("nope", 0).is_err());
    }
}
