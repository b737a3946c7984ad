//! Compiles a Hilbert calculus into the equations and quasiequations of its
//! equivalent algebraic semantics, and checks finite algebras against them.
//!
//! Defining equation `E(φ) = {φ ≈ φ ⇒ φ}`, equivalence formulas
//! `Δ(φ, ψ) = {φ ⇒ ψ, ψ ⇒ φ}`. In [`Form::Normalized`] the defining
//! equation is written `φ ≈ 1`.

use std::sync::LazyLock;

use serde::Serialize;

use crate::algebra::{ClassReport, LawOutcome};
use crate::formula::{parse_any, strong_from_weak, Formula, Lang};
use crate::schema::{Bindings, CalculusPresentation, Context, RuleSchema, Schema};
use crate::term::{
    counterexample, for_each_valuation, BinOp, Equation, Interpretation, Quasiequation, Term, Valuation,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Form {
    /// `φ ≈ 1`
    #[default]
    Normalized,
    /// `φ ≈ φ ⇒ φ`
    Defining,
}

fn imp_op(lang: Lang) -> BinOp {
    match lang {
        Lang::N4 => BinOp::WeakImp,
        _ => BinOp::Imp,
    }
}

/// `E(φ)` as an equation over `pool`.
pub fn transform_e(phi: &Formula, lang: Lang, form: Form, pool: &mut Vec<String>) -> Equation {
    let t = Term::from_formula(phi, pool);
    match form {
        Form::Normalized => Equation::new(t, Term::Top),
        Form::Defining => Equation::new(t.clone(), Term::bin(imp_op(lang), t.clone(), t)),
    }
}

/// `Δ(φ, ψ)`. For N4 the equivalence formulas use strong implication.
pub fn transform_delta(phi: &Formula, psi: &Formula, lang: Lang) -> (Formula, Formula) {
    match lang {
        Lang::N4 => (
            strong_from_weak(phi.clone(), psi.clone()),
            strong_from_weak(psi.clone(), phi.clone()),
        ),
        _ => (
            Formula::imp(phi.clone(), psi.clone()),
            Formula::imp(psi.clone(), phi.clone()),
        ),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Condition {
    pub name: String,
    pub q: Quasiequation,
}

fn identity_bindings(rule: &RuleSchema, k: Option<usize>) -> Bindings {
    let mut b = Bindings::new();
    for v in rule.metavars() {
        let f = Formula::var(v.clone());
        b = b.bind(&v, f);
    }
    if let Some(k) = k {
        b = b.context((1..=k).map(|i| Formula::var(format!("g{i}"))).collect());
    }
    b
}

/// The conditions of the algebraic semantics of `c`: the identity
/// equation(s), antisymmetry, one equation per axiom and one quasiequation
/// per rule instance, with contextual rules instantiated for
/// `|Γ| = 0..=gamma_bound`.
pub fn compile_calculus(c: &CalculusPresentation, gamma_bound: usize, form: Form) -> Vec<Condition> {
    let lang = c.lang;
    let mut out = Vec::new();
    let x = Formula::var("x");
    let y = Formula::var("y");

    let (d1, d2) = transform_delta(&x, &x, lang);
    let mut pool = Vec::new();
    let e1 = transform_e(&d1, lang, form, &mut pool);
    out.push(Condition {
        name: "identity".into(),
        q: Quasiequation::equation(pool.clone(), e1.clone()),
    });
    let e2 = transform_e(&d2, lang, form, &mut pool);
    if e2 != e1 {
        out.push(Condition {
            name: "identity'".into(),
            q: Quasiequation::equation(pool, e2),
        });
    }

    let (d1, d2) = transform_delta(&x, &y, lang);
    let mut pool = Vec::new();
    let premises = vec![
        transform_e(&d1, lang, form, &mut pool),
        transform_e(&d2, lang, form, &mut pool),
    ];
    let conclusion = Equation::new(Term::from_formula(&x, &mut pool), Term::from_formula(&y, &mut pool));
    out.push(Condition {
        name: "antisymmetry".into(),
        q: Quasiequation {
            vars: pool,
            premises,
            conclusion,
        },
    });

    for ax in &c.axioms {
        let (_, f) = ax
            .instantiate(&identity_bindings(ax, None))
            .expect("identity bindings fit");
        let mut pool = Vec::new();
        let e = transform_e(&f, lang, form, &mut pool);
        out.push(Condition {
            name: format!("E({})", ax.name),
            q: Quasiequation::equation(pool, e),
        });
    }

    for rule in &c.rules {
        let ks: Vec<Option<usize>> = if rule.is_contextual() {
            (0..=gamma_bound).map(Some).collect()
        } else {
            vec![None]
        };
        for k in ks {
            let (prem, concl) = rule
                .instantiate(&identity_bindings(rule, k))
                .expect("identity bindings fit");
            let mut pool = Vec::new();
            let premises = prem.iter().map(|p| transform_e(p, lang, form, &mut pool)).collect();
            let conclusion = transform_e(&concl, lang, form, &mut pool);
            let name = match k {
                Some(k) => format!("Q({})[|G|={k}]", rule.name),
                None => format!("Q({})", rule.name),
            };
            out.push(Condition {
                name,
                q: Quasiequation {
                    vars: pool,
                    premises,
                    conclusion,
                },
            });
        }
    }
    out
}

/// Checks every condition, recording the first failing valuation and the
/// number of failing valuations.
pub fn check_conditions<A: Interpretation + ?Sized>(a: &A, conds: &[Condition], class: &str) -> ClassReport {
    let mut r = ClassReport::new(class);
    for c in conds {
        r.push(check_condition(a, c));
    }
    r
}

pub fn check_condition<A: Interpretation + ?Sized>(a: &A, c: &Condition) -> LawOutcome {
    let mut violations = 0u64;
    let mut first = None;
    let mut error = None;
    for_each_valuation(a.size(), c.q.arity(), |v| match c.q.satisfied(a, v) {
        Ok(true) => true,
        Ok(false) => {
            violations += 1;
            first.get_or_insert_with(|| v.to_vec());
            true
        }
        Err(e) => {
            error = Some(e);
            false
        }
    });
    if let Some(e) = error {
        return LawOutcome::failed(c.name.clone(), e.to_string());
    }
    LawOutcome {
        law: c.name.clone(),
        holds: violations == 0,
        violations,
        witness: first.map(|v| Valuation::new(&c.q.vars, &v, a.element_names())),
        note: None,
    }
}

/// Whether `a` satisfies all conditions (early exit).
pub fn satisfies_all<A: Interpretation + ?Sized>(a: &A, conds: &[Condition]) -> bool {
    conds.iter().all(|c| matches!(counterexample(a, &c.q), Ok(None)))
}

static S_CONDITIONS: LazyLock<Vec<Vec<Condition>>> = LazyLock::new(|| {
    (0..=3)
        .map(|k| compile_calculus(crate::calculus_s::presentation(), k, Form::Normalized))
        .collect()
});

/// The compiled conditions for S at the given bound (cached up to 3).
pub fn s_conditions(gamma_bound: usize) -> std::borrow::Cow<'static, [Condition]> {
    match S_CONDITIONS.get(gamma_bound) {
        Some(c) => std::borrow::Cow::Borrowed(c),
        None => std::borrow::Cow::Owned(compile_calculus(
            crate::calculus_s::presentation(),
            gamma_bound,
            Form::Normalized,
        )),
    }
}

/// Whether `a`, read in the S signature (`∧ ∨ ⇒ ¬ 0 1`), is an S-algebra,
/// with contextual rules checked for `|Γ| ≤ gamma_bound`.
pub fn check_s_def34<A: Interpretation + ?Sized>(a: &A, gamma_bound: usize) -> ClassReport {
    let mut r = check_conditions(a, &s_conditions(gamma_bound), "s-def34");
    r.class = format!("s-def34 (|G| <= {gamma_bound})");
    r
}

pub fn is_s_algebra<A: Interpretation + ?Sized>(a: &A, gamma_bound: usize) -> bool {
    satisfies_all(a, &s_conditions(gamma_bound))
}

// ---------------------------------------------------------------------------
// Calculus files

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("line {line}: {msg}")]
pub struct CalculusFileError {
    pub line: usize,
    pub msg: String,
}

fn parse_schema(text: &str, line: usize) -> Result<Schema, CalculusFileError> {
    let text = text.trim();
    let err = |msg: String| CalculusFileError { line, msg };
    let (context, body) = if let Some(rest) = text.strip_prefix("$G =>2") {
        (Context::Imp2, rest)
    } else if let Some(rest) = text.strip_prefix("$G =>") {
        (Context::Imp, rest)
    } else {
        (Context::None, text)
    };
    let body = parse_any(body).map_err(|e| err(format!("`{}`: {e}", body.trim())))?;
    Ok(Schema { context, body })
}

/// Parses the calculus description format:
///
/// ```text
/// lang S
/// axiom A1: phi => phi
/// rule E: $G => phi , phi => gamma / $G => gamma [gamma]
/// ```
///
/// `$G =>` and `$G =>2` mark context-prefixed schemas. A trailing `[gamma]`
/// or `[gamma2]` without any marker prefixes every schema of the rule.
pub fn parse_calculus(text: &str) -> Result<CalculusPresentation, CalculusFileError> {
    let mut c = CalculusPresentation {
        name: String::new(),
        lang: Lang::S,
        axioms: vec![],
        rules: vec![],
    };
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let err = |msg: String| CalculusFileError { line, msg };
        if let Some(rest) = content.strip_prefix("lang ") {
            c.lang = rest.trim().parse().map_err(err)?;
        } else if let Some(rest) = content.strip_prefix("name ") {
            c.name = rest.trim().to_string();
        } else if let Some(rest) = content.strip_prefix("axiom ") {
            let (name, body) = rest
                .split_once(':')
                .ok_or_else(|| err("expected `axiom NAME: formula`".into()))?;
            let s = parse_schema(body, line)?;
            if s.context != Context::None {
                return Err(err("axioms cannot carry a context".into()));
            }
            c.axioms.push(RuleSchema::axiom(name.trim(), s.body));
        } else if let Some(rest) = content.strip_prefix("rule ") {
            let (name, body) = rest
                .split_once(':')
                .ok_or_else(|| err("expected `rule NAME: ... / ...`".into()))?;
            let mut body = body.trim();
            let mut flag = None;
            for (suffix, ctx) in [("[gamma2]", Context::Imp2), ("[gamma]", Context::Imp)] {
                if let Some(b) = body.strip_suffix(suffix) {
                    flag = Some(ctx);
                    body = b.trim_end();
                    break;
                }
            }
            let (prem, concl) = body.split_once('/').ok_or_else(|| err("rule needs `/`".into()))?;
            let mut premises = prem
                .split(',')
                .filter(|s| !s.trim().is_empty())
                .map(|s| parse_schema(s, line))
                .collect::<Result<Vec<_>, _>>()?;
            let mut conclusion = parse_schema(concl, line)?;
            let marked = premises.iter().chain([&conclusion]).any(|s| s.context != Context::None);
            if let (Some(ctx), false) = (flag, marked) {
                for s in premises.iter_mut().chain([&mut conclusion]) {
                    s.context = ctx;
                }
            }
            c.rules.push(RuleSchema::rule(name.trim(), premises, conclusion));
        } else {
            return Err(err(format!("unexpected `{content}`")));
        }
    }
    for s in c.axioms.iter().chain(&c.rules) {
        for sch in s.premises.iter().chain([&s.conclusion]) {
            if let Err(e) = c.lang.check(&sch.body) {
                return Err(CalculusFileError {
                    line: 0,
                    msg: format!("{}: {e}", s.name),
                });
            }
        }
    }
    Ok(c)
}

#[derive(Clone, Debug, Serialize)]
pub struct CompiledCondition {
    pub name: String,
    pub condition: String,
}

pub fn describe(conds: &[Condition]) -> Vec<CompiledCondition> {
    conds
        .iter()
        .map(|c| CompiledCondition {
            name: c.name.clone(),
            condition: c.q.to_string(),
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{boolean2, godel3, lukasiewicz3, to_s_algebra};
    use crate::calculus_s;

    fn find<'a>(conds: &'a [Condition], name: &str) -> &'a Condition {
        conds
            .iter()
            .find(|c| c.name == name)
            .unwrap_or_else(|| panic!("{name}"))
    }

    #[test]
    fn transforms() {
        let mut pool = Vec::new();
        let e = transform_e(&Formula::var("p"), Lang::S, Form::Defining, &mut pool);
        assert_eq!(Quasiequation::equation(pool, e).to_string(), "p = p => p");
        let (a, b) = transform_delta(&Formula::var("p"), &Formula::var("q"), Lang::S);
        assert_eq!(a.to_string(), "p => q");
        assert_eq!(b.to_string(), "q => p");
    }

    #[test]
    fn compiled_s_conditions() {
        let conds = compile_calculus(calculus_s::presentation(), 2, Form::Normalized);
        assert_eq!(find(&conds, "E(A2)").q.to_string(), "0 => phi = 1");
        assert_eq!(
            find(&conds, "Q(E)[|G|=0]").q.to_string(),
            "phi = 1, phi => gamma = 1 ==> gamma = 1"
        );
        assert_eq!(
            find(&conds, "Q(C)").q.to_string(),
            "phi => phi => phi => gamma = 1 ==> phi => phi => gamma = 1"
        );
        assert_eq!(
            find(&conds, "antisymmetry").q.to_string(),
            "x => y = 1, y => x = 1 ==> x = y"
        );
        assert_eq!(find(&conds, "identity").q.to_string(), "x => x = 1");
        let e2 = find(&conds, "Q(E)[|G|=2]");
        assert_eq!(e2.q.vars.len(), 4);
        // identity, antisymmetry, 5 axioms, 10 plain rules, 10 contextual rules x 3
        assert_eq!(conds.len(), 2 + 5 + 10 + 10 * 3);
    }

    #[test]
    fn standard_algebras() {
        for a in [boolean2(), lukasiewicz3()] {
            let r = check_s_def34(&to_s_algebra(&a), 2);
            assert!(r.passed(), "{r}");
        }
        assert!(!check_s_def34(&to_s_algebra(&godel3()), 2).passed());
    }

    #[test]
    fn bound_monotone() {
        let g = to_s_algebra(&godel3());
        let l = to_s_algebra(&lukasiewicz3());
        for k in 0..3 {
            assert!(is_s_algebra(&l, k));
            assert!(!is_s_algebra(&g, k));
        }
    }

    #[test]
    fn presentation_file_round_trip() {
        let c = calculus_s::presentation();
        let text = c.to_string();
        let back = parse_calculus(&text).unwrap();
        assert_eq!(back.axioms, c.axioms);
        assert_eq!(back.rules, c.rules);
    }

    #[test]
    fn flag_shorthand() {
        let c = parse_calculus("rule R: phi / phi | psi [gamma]\n").unwrap();
        assert_eq!(c.rules[0].premises[0].context, Context::Imp);
        assert_eq!(c.rules[0].conclusion.context, Context::Imp);
        assert!(parse_calculus("lang S\naxiom X: p * q\n").is_err());
        assert!(parse_calculus("axiom X p\n").is_err());
    }
}
