//! Acceptance checks. Each criterion runs serially against a pinned
//! runtime limit and prints one line; the process exits non-zero if any
//! line is a FAIL.

use std::time::{Duration, Instant};

use nelson::algebra::{boolean2, check_s_prime, involution, three_potency, to_s_algebra, to_s_prime, FiniteAlgebra};
use nelson::algebraizer::check_s_def34;
use nelson::calculus_s::{check_proof, fixtures as s_fixtures, Mode, Proof};
use nelson::calculus_s_prime::{
    bridge_from_weak, bridge_to_weak, check_proof_sp, deduction_transform, fixtures as sp_fixtures, random_suite,
    square,
};
use nelson::fixtures::load;
use nelson::formula::{strong_imp2, Formula};
use nelson::laws::{
    probe_without_3_potency, s_algebra_properties, soundness_sweep, square_laws, SQUARE_LAWS, S_PROPERTIES,
};
use nelson::n4::{check_n3, check_n4_lattice, quotient, N4Algebra};
use nelson::search::{
    brute_force_s_prime_count, enumerate, find_countermodel_among, isomorphic, AnyAlgebra, Class, EnumOptions,
};
use nelson::term::{eval_named, parse_statement, parse_term};

type Outcome = Result<Vec<String>, String>;
type Criterion = (&'static str, u64, fn() -> Outcome);

const SEED: u64 = 20_240_601;

fn ensure(ok: bool, what: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(what.into())
    }
}

fn all_of(class: Class, max: usize, jobs: usize) -> Vec<AnyAlgebra> {
    let opts = EnumOptions {
        jobs,
        ..Default::default()
    };
    (1..=max)
        .flat_map(|n| enumerate(class, n, &opts).expect("within ceiling").algebras)
        .collect()
}

fn residuated(class: Class, max: usize) -> Vec<FiniteAlgebra> {
    all_of(class, max, 1)
        .into_iter()
        .filter_map(|a| a.residuated().cloned())
        .collect()
}

fn algebra(name: &str) -> Result<FiniteAlgebra, String> {
    let text = load(name).map_err(|e| e.to_string())?;
    FiniteAlgebra::parse(&text).map_err(|e| e.to_string())
}

fn a4() -> Result<N4Algebra, String> {
    let text = load("a4.alg").map_err(|e| e.to_string())?;
    N4Algebra::parse(&text).map_err(|e| e.to_string())
}

fn fixture_suite() -> Outcome {
    let mut notes = Vec::new();
    let mut mutants = 0;
    for n in s_fixtures() {
        let text = load(&format!("proofs/{}.proof", n.name)).map_err(|e| e.to_string())?;
        let p = Proof::parse(&text).map_err(|e| e.to_string())?;
        ensure(p == n.proof, format!("{} on disk differs from the library", n.name))?;
        ensure(
            check_proof(&p, Mode::Standard).accepted(),
            format!("{} rejected", n.name),
        )?;
        for i in 0..p.steps.len() {
            let mut m = p.clone();
            m.steps[i].formula = Formula::not(m.steps[i].formula.clone());
            ensure(
                !check_proof(&m, Mode::Standard).accepted(),
                format!("{}: mutating step {} is still accepted", n.name, i + 1),
            )?;
            mutants += 1;
        }
    }
    notes.push(format!(
        "{} fixtures accepted, {mutants} single-step mutants rejected",
        s_fixtures().len()
    ));
    Ok(notes)
}

fn inconsistency() -> Outcome {
    let text = load("proofs/inconsistency.proof").map_err(|e| e.to_string())?;
    let p = Proof::parse(&text).map_err(|e| e.to_string())?;
    ensure(p.steps.len() <= 6, format!("{} steps", p.steps.len()))?;
    ensure(matches!(p.goal, Formula::Var(_)), "goal is not a bare variable")?;
    ensure(check_proof(&p, Mode::Historical).accepted(), "historical mode rejects")?;
    let s = check_proof(&p, Mode::Standard);
    let r = s.first_rejection().ok_or("standard mode accepts")?;
    let t = nelson::demo::run("inconsistency", SEED).map_err(|e| e.to_string())?;
    ensure(t.passed, "demo transcript failed")?;
    Ok(vec![format!(
        "{} steps, goal `{}`, standard mode rejects step {}",
        p.steps.len(),
        p.goal,
        r.step
    )])
}

fn mv3() -> Outcome {
    let l3 = algebra("l3.alg")?;
    ensure(
        check_s_prime(&l3).passed(),
        "three-element MV-chain fails check_s_prime",
    )?;
    ensure(
        check_s_def34(&to_s_algebra(&l3), 2).passed(),
        "three-element MV-chain fails the S conditions",
    )?;
    let g = algebra("godel3.alg")?;
    let failed: Vec<String> = check_s_prime(&g).failures().map(|l| l.law.clone()).collect();
    ensure(failed == ["involution"], format!("Goedel chain fails {failed:?}"))?;
    let w = involution(&g).witness.map(|w| w.to_string()).unwrap_or_default();
    ensure(w == "a=m", format!("involution witness {w}"))?;
    Ok(vec![format!("Goedel chain fails only involution, witness {w}")])
}

fn separation() -> Outcome {
    let a4 = a4()?;
    ensure(check_n4_lattice(&a4).passed(), "A4 fails check_n4_lattice")?;
    let q = quotient(&a4).ok_or("no quotient")?;
    ensure(
        isomorphic(&q.to_algebra(&a4), &boolean2()),
        "quotient is not the Boolean algebra",
    )?;
    let mut pool = vec!["x".to_string()];
    let term = parse_term("x => x", &mut pool).map_err(|e| e.to_string())?;
    let at = |e: &str| -> Result<String, String> {
        let v = eval_named(&a4, &term, &pool, &[("x".into(), e.into())]).map_err(|e| e.to_string())?;
        Ok(a4.names[v].clone())
    };
    let (one, b) = (at("1")?, at("b")?);
    ensure(one == "1" && b == "b", format!("1 => 1 = {one}, b => b = {b}"))?;
    let eq = parse_statement("x => x = y => y").map_err(|e| e.to_string())?;
    let c = find_countermodel_among(&eq, &[AnyAlgebra::N4(a4.clone())]).ok_or("A4 satisfies the equation")?;
    let sp = all_of(Class::SPrime, 4, 1);
    ensure(
        find_countermodel_among(&eq, &sp).is_none(),
        "an S'-algebra refutes the equation",
    )?;
    Ok(vec![
        format!(
            "A4 refutes x => x = y => y at {}; 1 => 1 = {one}, b => b = {b}",
            c.valuation
        ),
        format!("holds in all {} S'-algebras of size <= 4", sp.len()),
    ])
}

fn term_equivalence() -> Outcome {
    let mut agree = 0;
    let mut back_s = 0;
    let mut back_sp = 0;
    for a in residuated(Class::Cibrl, 4) {
        let s = to_s_algebra(&a);
        let sp_ok = check_s_prime(&a).passed();
        ensure(
            sp_ok == check_s_def34(&s, 2).passed(),
            format!("disagreement on\n{}", a.to_file_string()),
        )?;
        agree += 1;
        if sp_ok {
            ensure(
                to_s_prime(&s).same_s_prime_tables(&a),
                "to_s_prime after to_s_algebra moves a table",
            )?;
            back_sp += 1;
        }
    }
    for a in all_of(Class::N4Lattice, 4, 1).iter().filter_map(AnyAlgebra::n4) {
        let s = a.to_s_signature();
        ensure(
            check_s_def34(&s, 2).passed() == check_s_prime(&to_s_prime(&s)).passed(),
            format!("disagreement on N4-lattice\n{a}"),
        )?;
        agree += 1;
    }
    for s in residuated(Class::SDef34, 4) {
        ensure(
            to_s_algebra(&to_s_prime(&s)).same_s_tables(&s),
            "to_s_algebra after to_s_prime moves a table",
        )?;
        back_s += 1;
    }
    Ok(vec![format!(
        "{agree} algebras agree; round trips exact on {back_s} S-algebras and {back_sp} S'-algebras"
    )])
}

fn s_properties() -> Outcome {
    let algebras: Vec<FiniteAlgebra> = residuated(Class::SDef34, 4)
        .into_iter()
        .filter(|s| check_s_def34(s, 2).passed())
        .collect();
    ensure(!algebras.is_empty(), "no S-algebras enumerated")?;
    let mut holds = [0usize; S_PROPERTIES.len()];
    for s in &algebras {
        for (i, l) in s_algebra_properties(s).iter().enumerate() {
            ensure(
                l.holds,
                format!("{} fails at {:?} in\n{}", l.law, l.witness, s.to_file_string()),
            )?;
            holds[i] += 1;
        }
    }
    Ok(S_PROPERTIES
        .iter()
        .zip(holds)
        .map(|(p, k)| format!("{p}: holds in {k}/{}", algebras.len()))
        .collect())
}

fn square_suite() -> Outcome {
    let all = residuated(Class::Cibrl, 4);
    let potent: Vec<&FiniteAlgebra> = all.iter().filter(|a| three_potency(a).holds).collect();
    let mut notes = Vec::new();
    for a in &all {
        ensure(square_laws(a)[0].holds, format!("{} fails", SQUARE_LAWS[0]))?;
    }
    notes.push(format!("{}: holds on all {} CIBRLs", SQUARE_LAWS[0], all.len()));
    for (i, law) in SQUARE_LAWS.iter().enumerate().skip(1) {
        for a in &potent {
            ensure(square_laws(a)[i].holds, format!("{law} fails on a 3-potent CIBRL"))?;
        }
        notes.push(format!("{law}: holds on all {} 3-potent CIBRLs", potent.len()));
    }
    let p = probe_without_3_potency(3, 6);
    notes.push(match &p.first {
        Some((n, _, w)) => format!(
            "without 3-potency {} fails in {}/{} CIBRLs of size <= 6, first at size {n}, {w}",
            p.law, p.refuted_by, p.examined
        ),
        None => format!(
            "without 3-potency {} holds in all {} CIBRLs of size <= 6",
            p.law, p.examined
        ),
    });
    Ok(notes)
}

fn soundness() -> Outcome {
    let r = soundness_sweep(4);
    ensure(r.algebras > 0, "no algebras")?;
    ensure(r.violations.is_empty(), r.violations.join("; "))?;
    Ok(vec![format!(
        "{} algebras, {} formula checks, {} valuations, 0 violations",
        r.algebras, r.formulas_checked, r.valuations
    )])
}

fn dmt() -> Outcome {
    let suite = random_suite(SEED, 20, 15);
    ensure(suite.len() == 20, "suite size")?;
    for (k, (p, phi)) in suite.iter().enumerate() {
        ensure(
            p.steps.len() <= 15,
            format!("derivation {k} has {} steps", p.steps.len()),
        )?;
        let vars: std::collections::BTreeSet<&str> = p.steps.iter().flat_map(|s| s.formula.vars()).collect();
        ensure(vars.len() <= 4, format!("derivation {k} uses {} variables", vars.len()))?;
        ensure(check_proof_sp(p).accepted(), format!("derivation {k} rejected"))?;
        let q = deduction_transform(p, phi).map_err(|e| format!("derivation {k}: {e}"))?;
        ensure(check_proof_sp(&q).accepted(), format!("transform of {k} rejected"))?;
        ensure(
            q.goal == Formula::imp(square(phi), p.goal.clone()),
            format!("transform of {k} has goal {}", q.goal),
        )?;
        let rest: Vec<Formula> = p.assumptions.iter().filter(|a| *a != phi).cloned().collect();
        ensure(
            q.assumptions == rest,
            format!("transform of {k} keeps assumptions {:?}", q.assumptions),
        )?;
    }
    for (name, p) in sp_fixtures() {
        ensure(check_proof_sp(&p).accepted(), format!("{name} rejected"))?;
    }
    let (phi, psi) = (Formula::var("p"), Formula::imp(Formula::var("q"), Formula::var("r")));
    let to = bridge_to_weak(&phi, &psi);
    let from = bridge_from_weak(&phi, &psi);
    ensure(
        check_proof_sp(&to).accepted() && check_proof_sp(&from).accepted(),
        "bridge rejected",
    )?;
    let strong = Formula::imp(square(&phi), psi.clone());
    let weak = strong_imp2(phi.clone(), psi.clone());
    ensure(
        to.assumptions.is_empty() && to.goal == Formula::imp(strong.clone(), weak.clone()),
        format!("bridge_to_weak proves {}", to.goal),
    )?;
    ensure(
        from.assumptions.is_empty() && from.goal == Formula::imp(weak, strong),
        format!("bridge_from_weak proves {}", from.goal),
    )?;
    Ok(vec![format!(
        "20/20 transforms accepted (seed {SEED}); bridges accepted"
    )])
}

fn determinism() -> Outcome {
    let counts: Vec<usize> = (1..=2)
        .map(|n| enumerate(Class::SPrime, n, &EnumOptions::default()).map(|r| r.algebras.len()))
        .collect::<Result<_, _>>()
        .map_err(|e| e.to_string())?;
    ensure(counts == [1, 1], format!("counts {counts:?}"))?;
    let raw = brute_force_s_prime_count(2);
    ensure(raw == 1, format!("raw search finds {raw} at size 2"))?;
    let mut compared = 0;
    for class in Class::ALL {
        let dump = |jobs| -> Vec<String> { all_of(class, 4, jobs).iter().map(AnyAlgebra::to_file_string).collect() };
        let serial = dump(1);
        ensure(
            serial == dump(4),
            format!("{} differs between 1 and 4 workers", class.name()),
        )?;
        compared += serial.len();
    }
    Ok(vec![format!(
        "counts 1, 1; raw search agrees; {compared} canonical algebras identical serial vs 4 workers"
    )])
}

fn n3_inside_s() -> Outcome {
    let n3: Vec<N4Algebra> = all_of(Class::N3Lattice, 4, 1)
        .iter()
        .filter_map(AnyAlgebra::n4)
        .cloned()
        .collect();
    ensure(!n3.is_empty(), "no N3-lattices")?;
    for a in &n3 {
        ensure(
            check_s_def34(&a.to_s_signature(), 2).passed(),
            format!("N3-lattice fails the S conditions\n{a}"),
        )?;
    }
    let r = check_n3(&a4()?);
    ensure(!r.passed(), "A4 passes check_n3")?;
    let w = r
        .failures()
        .find_map(|l| l.witness.as_ref().map(|w| format!("{} at {w}", l.law)))
        .ok_or("no witness recorded")?;
    Ok(vec![format!(
        "{} N3-lattices of size <= 4 are S-algebras; A4 fails {w}",
        n3.len()
    )])
}

fn main() {
    let criteria: [Criterion; 11] = [
        ("fixture suite and mutations", 1_000, fixture_suite),
        ("inconsistency replication", 100, inconsistency),
        ("three-element chains", 500, mv3),
        ("A4 separation", 30_000, separation),
        ("term-equivalence round trip", 60_000, term_equivalence),
        ("S-algebra properties", 60_000, s_properties),
        ("square laws", 120_000, square_suite),
        ("soundness sweep", 60_000, soundness),
        ("deduction transform", 10_000, dmt),
        ("enumeration determinism", 120_000, determinism),
        ("N3 inside S", 120_000, n3_inside_s),
    ];
    let mut failed = 0;
    for (i, (name, limit_ms, run)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let limit = Duration::from_millis(limit_ms);
        let (ok, detail) = match outcome {
            Ok(notes) if elapsed <= limit => (true, notes),
            Ok(notes) => (false, [notes, vec!["runtime limit exceeded".into()]].concat()),
            Err(e) => (false, vec![e]),
        };
        failed += usize::from(!ok);
        println!(
            "criterion {:>2} {name}: {} ({:.3} s, limit {:.1} s)",
            i + 1,
            if ok { "PASS" } else { "FAIL" },
            elapsed.as_secs_f64(),
            limit.as_secs_f64()
        );
        for d in detail {
            println!("    {d}");
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
