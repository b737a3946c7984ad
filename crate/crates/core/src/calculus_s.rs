//! Nelson's original calculus for S: five axiom schemas and twenty
//! schematic rules, several of them parametrised by a context `Γ`.
//!
//! A variant of rule `∧l2` with premise and conclusion swapped is
//! available as [`RuleId::AndL2Historical`] and is only admitted in
//! [`Mode::Historical`]; with it every formula becomes provable, see
//! [`inconsistency_fixture`].

use std::fmt;
use std::str::FromStr;
use std::sync::LazyLock;

use thiserror::Error;

use crate::formula::{parse_any, Formula, Lang};
use crate::proof::{CheckReport, RawProof, RawStep, StepVerdict};
use crate::schema::{Bindings, CalculusPresentation, RuleSchema, Schema, SchemaError};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RuleId {
    A1,
    A2,
    A3,
    A4,
    A5,
    P,
    C,
    E,
    ImpL,
    ImpR,
    AndL1,
    AndL2,
    AndR,
    OrL1,
    OrL2,
    OrR1,
    OrR2,
    NegImpL,
    NegImpR,
    NegAndL,
    NegAndR,
    NegOrL,
    NegOrR,
    NegNegL,
    NegNegR,
    Hyp,
    AndL2Historical,
}

impl RuleId {
    pub const ALL: [RuleId; 27] = [
        RuleId::A1,
        RuleId::A2,
        RuleId::A3,
        RuleId::A4,
        RuleId::A5,
        RuleId::P,
        RuleId::C,
        RuleId::E,
        RuleId::ImpL,
        RuleId::ImpR,
        RuleId::AndL1,
        RuleId::AndL2,
        RuleId::AndR,
        RuleId::OrL1,
        RuleId::OrL2,
        RuleId::OrR1,
        RuleId::OrR2,
        RuleId::NegImpL,
        RuleId::NegImpR,
        RuleId::NegAndL,
        RuleId::NegAndR,
        RuleId::NegOrL,
        RuleId::NegOrR,
        RuleId::NegNegL,
        RuleId::NegNegR,
        RuleId::Hyp,
        RuleId::AndL2Historical,
    ];

    pub fn name(self) -> &'static str {
        match self {
            RuleId::A1 => "A1",
            RuleId::A2 => "A2",
            RuleId::A3 => "A3",
            RuleId::A4 => "A4",
            RuleId::A5 => "A5",
            RuleId::P => "P",
            RuleId::C => "C",
            RuleId::E => "E",
            RuleId::ImpL => "IMP_L",
            RuleId::ImpR => "IMP_R",
            RuleId::AndL1 => "AND_L1",
            RuleId::AndL2 => "AND_L2",
            RuleId::AndR => "AND_R",
            RuleId::OrL1 => "OR_L1",
            RuleId::OrL2 => "OR_L2",
            RuleId::OrR1 => "OR_R1",
            RuleId::OrR2 => "OR_R2",
            RuleId::NegImpL => "NEGIMP_L",
            RuleId::NegImpR => "NEGIMP_R",
            RuleId::NegAndL => "NEGAND_L",
            RuleId::NegAndR => "NEGAND_R",
            RuleId::NegOrL => "NEGOR_L",
            RuleId::NegOrR => "NEGOR_R",
            RuleId::NegNegL => "NEGNEG_L",
            RuleId::NegNegR => "NEGNEG_R",
            RuleId::Hyp => "HYP",
            RuleId::AndL2Historical => "AND_L2_HISTORICAL",
        }
    }

    pub fn is_axiom(self) -> bool {
        matches!(self, RuleId::A1 | RuleId::A2 | RuleId::A3 | RuleId::A4 | RuleId::A5)
    }

    /// The schema behind this rule; `None` for `HYP`.
    pub fn schema(self) -> Option<&'static RuleSchema> {
        match self {
            RuleId::Hyp => None,
            RuleId::AndL2Historical => Some(&HISTORICAL_AND_L2),
            _ => S_PRESENTATION
                .axiom(self.name())
                .or_else(|| S_PRESENTATION.rule(self.name())),
        }
    }
}

impl fmt::Display for RuleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for RuleId {
    type Err = ProofError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        RuleId::ALL
            .iter()
            .copied()
            .find(|r| r.name() == s)
            .ok_or_else(|| ProofError::UnknownRule(s.to_string()))
    }
}

fn sch(s: &str) -> Formula {
    parse_any(s).expect("built-in schema parses")
}

fn s_presentation() -> CalculusPresentation {
    use Schema as S;
    let axioms = vec![
        RuleSchema::axiom("A1", sch("phi => phi")),
        RuleSchema::axiom("A2", sch("0 => phi")),
        RuleSchema::axiom("A3", sch("~phi => phi => 0")),
        RuleSchema::axiom("A4", sch("~0")),
        RuleSchema::axiom("A5", sch("(phi => psi) <=> (~psi => ~phi)")),
    ];
    let r = RuleSchema::rule;
    let rules = vec![
        r(
            "P",
            vec![S::ctx(sch("phi => psi => gamma"))],
            S::ctx(sch("psi => phi => gamma")),
        ),
        r(
            "C",
            vec![S::plain(sch("phi => phi => phi => gamma"))],
            S::plain(sch("phi => phi => gamma")),
        ),
        r(
            "E",
            vec![S::ctx(sch("phi")), S::plain(sch("phi => gamma"))],
            S::ctx(sch("gamma")),
        ),
        r(
            "IMP_L",
            vec![S::ctx(sch("phi")), S::plain(sch("psi => gamma"))],
            S::ctx(sch("(phi => psi) => gamma")),
        ),
        r("IMP_R", vec![S::plain(sch("gamma"))], S::plain(sch("phi => gamma"))),
        r(
            "AND_L1",
            vec![S::plain(sch("phi => gamma"))],
            S::plain(sch("phi & psi => gamma")),
        ),
        r(
            "AND_L2",
            vec![S::plain(sch("psi => gamma"))],
            S::plain(sch("phi & psi => gamma")),
        ),
        r(
            "AND_R",
            vec![S::ctx(sch("phi")), S::ctx(sch("psi"))],
            S::ctx(sch("phi & psi")),
        ),
        r(
            "OR_L1",
            vec![S::plain(sch("phi => gamma")), S::plain(sch("psi => gamma"))],
            S::plain(sch("phi | psi => gamma")),
        ),
        r(
            "OR_L2",
            vec![
                S::plain(sch("phi => phi => gamma")),
                S::plain(sch("psi => psi => gamma")),
            ],
            S::plain(sch("phi | psi => phi | psi => gamma")),
        ),
        r("OR_R1", vec![S::ctx(sch("phi"))], S::ctx(sch("phi | psi"))),
        r("OR_R2", vec![S::ctx(sch("psi"))], S::ctx(sch("phi | psi"))),
        r(
            "NEGIMP_L",
            vec![S::plain(sch("phi & ~psi => gamma"))],
            S::plain(sch("~(phi => psi) => gamma")),
        ),
        r(
            "NEGIMP_R",
            vec![S::ctx2(sch("phi & ~psi"))],
            S::ctx2(sch("~(phi => psi)")),
        ),
        r(
            "NEGAND_L",
            vec![S::plain(sch("~phi | ~psi => gamma"))],
            S::plain(sch("~(phi & psi) => gamma")),
        ),
        r(
            "NEGAND_R",
            vec![S::ctx(sch("~phi | ~psi"))],
            S::ctx(sch("~(phi & psi)")),
        ),
        r(
            "NEGOR_L",
            vec![S::plain(sch("~phi & ~psi => gamma"))],
            S::plain(sch("~(phi | psi) => gamma")),
        ),
        r("NEGOR_R", vec![S::ctx(sch("~phi & ~psi"))], S::ctx(sch("~(phi | psi)"))),
        r(
            "NEGNEG_L",
            vec![S::plain(sch("phi => gamma"))],
            S::plain(sch("~~phi => gamma")),
        ),
        r("NEGNEG_R", vec![S::ctx(sch("phi"))], S::ctx(sch("~~phi"))),
    ];
    CalculusPresentation {
        name: "S".into(),
        lang: Lang::S,
        axioms,
        rules,
    }
}

static S_PRESENTATION: LazyLock<CalculusPresentation> = LazyLock::new(s_presentation);

static HISTORICAL_AND_L2: LazyLock<RuleSchema> = LazyLock::new(|| {
    RuleSchema::rule(
        "AND_L2_HISTORICAL",
        vec![Schema::plain(sch("phi & psi => gamma"))],
        Schema::plain(sch("psi => gamma")),
    )
});

/// The corrected calculus (without the historical rule).
pub fn presentation() -> &'static CalculusPresentation {
    &S_PRESENTATION
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Mode {
    #[default]
    Standard,
    Historical,
}

impl FromStr for Mode {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "standard" => Ok(Mode::Standard),
            "historical" => Ok(Mode::Historical),
            _ => Err(format!("unknown mode `{s}`")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ProofError {
    #[error("unknown rule `{0}`")]
    UnknownRule(String),
    #[error("{0} is an axiom, not a rule")]
    NotARule(RuleId),
    #[error("{0} is not an axiom")]
    NotAnAxiom(RuleId),
    #[error("{rule} expects {expected} premise(s), got {got}")]
    Arity { rule: RuleId, expected: usize, got: usize },
    #[error("premise {index} of {rule} should be `{expected}`, got `{got}`")]
    PremiseMismatch {
        rule: RuleId,
        index: usize,
        expected: Formula,
        got: Formula,
    },
    #[error(transparent)]
    Schema(#[from] SchemaError),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProofStep {
    pub formula: Formula,
    pub rule: RuleId,
    pub premises: Vec<usize>,
    pub params: Bindings,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Proof {
    pub assumptions: Vec<Formula>,
    pub steps: Vec<ProofStep>,
    pub goal: Formula,
}

impl Proof {
    pub fn from_raw(raw: &RawProof) -> Result<Proof, crate::Error> {
        let steps = raw
            .steps
            .iter()
            .map(|s| {
                Ok(ProofStep {
                    formula: s.formula.clone(),
                    rule: s.rule.parse()?,
                    premises: s.premises.clone(),
                    params: s.params.clone(),
                })
            })
            .collect::<Result<Vec<_>, ProofError>>()?;
        Ok(Proof {
            assumptions: raw.assumptions.clone(),
            steps,
            goal: raw.goal()?.clone(),
        })
    }

    pub fn to_raw(&self) -> RawProof {
        RawProof {
            assumptions: self.assumptions.clone(),
            goal: Some(self.goal.clone()),
            steps: self
                .steps
                .iter()
                .map(|s| RawStep {
                    formula: s.formula.clone(),
                    rule: s.rule.name().to_string(),
                    premises: s.premises.clone(),
                    params: s.params.clone(),
                })
                .collect(),
        }
    }

    pub fn parse(text: &str) -> Result<Proof, crate::Error> {
        Proof::from_raw(&RawProof::parse(text)?)
    }

    pub fn to_file_string(&self) -> String {
        self.to_raw().to_file_string()
    }
}

pub fn instantiate_axiom(id: RuleId, params: &Bindings) -> Result<Formula, ProofError> {
    if !id.is_axiom() {
        return Err(ProofError::NotAnAxiom(id));
    }
    let schema = id.schema().expect("axioms have schemas");
    Ok(schema.instantiate(params)?.1)
}

/// Applies `id` to the given premises and returns the conclusion.
///
/// The context `Γ` is read from `params`, never inferred from the premises.
pub fn apply_rule(id: RuleId, premises: &[Formula], params: &Bindings) -> Result<Formula, ProofError> {
    let schema = match id {
        RuleId::Hyp => return Err(ProofError::NotARule(id)),
        _ if id.is_axiom() => return Err(ProofError::NotARule(id)),
        _ => id.schema().expect("rules have schemas"),
    };
    if premises.len() != schema.premises.len() {
        return Err(ProofError::Arity {
            rule: id,
            expected: schema.premises.len(),
            got: premises.len(),
        });
    }
    let (expected, conclusion) = schema.instantiate(params)?;
    for (index, (want, got)) in expected.into_iter().zip(premises).enumerate() {
        if &want != got {
            return Err(ProofError::PremiseMismatch {
                rule: id,
                index: index + 1,
                expected: want,
                got: got.clone(),
            });
        }
    }
    Ok(conclusion)
}

fn check_step(proof: &Proof, i: usize, mode: Mode) -> Result<(), String> {
    let step = &proof.steps[i];
    Lang::S.check(&step.formula).map_err(|e| e.to_string())?;
    if let Some(&bad) = step.premises.iter().find(|&&p| p >= i) {
        return Err(format!("premise {} does not precede step {}", bad + 1, i + 1));
    }
    if step.rule == RuleId::AndL2Historical && mode == Mode::Standard {
        return Err("AND_L2_HISTORICAL is only admissible in historical mode".into());
    }
    let derived = match step.rule {
        RuleId::Hyp => {
            if !step.premises.is_empty() || !step.params.is_empty() {
                return Err("HYP takes no premises or bindings".into());
            }
            if !proof.assumptions.contains(&step.formula) {
                return Err(format!("`{}` is not an assumption", step.formula));
            }
            return Ok(());
        }
        r if r.is_axiom() => {
            if !step.premises.is_empty() {
                return Err(format!("axiom {r} takes no premises"));
            }
            instantiate_axiom(r, &step.params).map_err(|e| e.to_string())?
        }
        r => {
            let premises: Vec<Formula> = step.premises.iter().map(|&p| proof.steps[p].formula.clone()).collect();
            apply_rule(r, &premises, &step.params).map_err(|e| e.to_string())?
        }
    };
    if derived != step.formula {
        return Err(format!(
            "{} yields `{derived}`, step states `{}`",
            step.rule, step.formula
        ));
    }
    Ok(())
}

pub fn check_proof(proof: &Proof, mode: Mode) -> CheckReport {
    let steps = (0..proof.steps.len())
        .map(|i| {
            let res = check_step(proof, i, mode);
            StepVerdict {
                step: i + 1,
                accepted: res.is_ok(),
                reason: res.err(),
            }
        })
        .collect();
    let mut report = CheckReport::finish(steps, proof.steps.last().map(|s| &s.formula), &proof.goal);
    for a in &proof.assumptions {
        if let Err(e) = Lang::S.check(a) {
            report.problems.push(format!("assumption `{a}`: {e}"));
        }
    }
    report
}

// ---------------------------------------------------------------------------
// Fixtures

/// Builds fixture proofs, computing each step's formula with the checker's
/// own rule application. Goals are stated independently by the caller.
struct Builder {
    assumptions: Vec<Formula>,
    steps: Vec<ProofStep>,
}

impl Builder {
    fn new(assumptions: &[&str]) -> Self {
        Builder {
            assumptions: assumptions.iter().map(|s| f(s)).collect(),
            steps: Vec::new(),
        }
    }

    fn push(&mut self, formula: Formula, rule: RuleId, premises: Vec<usize>, params: Bindings) -> usize {
        self.steps.push(ProofStep {
            formula,
            rule,
            premises,
            params,
        });
        self.steps.len() - 1
    }

    fn hyp(&mut self, s: &str) -> usize {
        self.push(f(s), RuleId::Hyp, vec![], Bindings::new())
    }

    fn axiom(&mut self, id: RuleId, params: Bindings) -> usize {
        let formula = instantiate_axiom(id, &params).expect("fixture axiom");
        self.push(formula, id, vec![], params)
    }

    fn rule(&mut self, id: RuleId, premises: &[usize], params: Bindings) -> usize {
        let prem: Vec<Formula> = premises.iter().map(|&i| self.steps[i].formula.clone()).collect();
        let formula = match apply_rule(id, &prem, &params) {
            Ok(g) => g,
            Err(e) => panic!("fixture step {id}: {e}"),
        };
        self.push(formula, id, premises.to_vec(), params)
    }

    /// Modus ponens: rule E with empty context.
    fn mp(&mut self, minor: usize, major: usize) -> usize {
        let (phi, gamma) = self.steps[major]
            .formula
            .as_imp()
            .map(|(a, b)| (a.clone(), b.clone()))
            .expect("major premise is an implication");
        self.rule(
            RuleId::E,
            &[minor, major],
            Bindings::new().context(vec![]).phi(phi).gamma(gamma),
        )
    }

    fn finish(self, goal: &str) -> Proof {
        Proof {
            assumptions: self.assumptions,
            steps: self.steps,
            goal: f(goal),
        }
    }
}

fn f(s: &str) -> Formula {
    parse_any(s).expect("fixture formula parses")
}

fn b() -> Bindings {
    Bindings::new()
}

/// `(X ∧ Y) ⇒ X` from A1 and `∧l1`.
fn and_elim_left(bld: &mut Builder, x: &str, y: &str) -> usize {
    let a = bld.axiom(RuleId::A1, b().phi(f(x)));
    bld.rule(RuleId::AndL1, &[a], b().phi(f(x)).psi(f(y)).gamma(f(x)))
}

fn and_elim_right(bld: &mut Builder, x: &str, y: &str) -> usize {
    let a = bld.axiom(RuleId::A1, b().phi(f(y)));
    bld.rule(RuleId::AndL2, &[a], b().phi(f(x)).psi(f(y)).gamma(f(y)))
}

/// `X ⇒ (X ∨ Y)` via `∨r1` with `Γ = [X]`.
fn or_intro_left(bld: &mut Builder, x: &str, y: &str) -> usize {
    let a = bld.axiom(RuleId::A1, b().phi(f(x)));
    bld.rule(RuleId::OrR1, &[a], b().context(vec![f(x)]).phi(f(x)).psi(f(y)))
}

fn or_intro_right(bld: &mut Builder, x: &str, y: &str) -> usize {
    let a = bld.axiom(RuleId::A1, b().phi(f(y)));
    bld.rule(RuleId::OrR2, &[a], b().context(vec![f(y)]).phi(f(x)).psi(f(y)))
}

/// `(X ⇒ (Y ⇒ Z)) ⇒ (Y ⇒ (X ⇒ Z))` via A1 and `P` with `Γ = [X ⇒ (Y ⇒ Z)]`.
fn exchange(bld: &mut Builder, x: &str, y: &str, z: &str) -> usize {
    let head = Formula::imp(f(x), Formula::imp(f(y), f(z)));
    let a = bld.axiom(RuleId::A1, b().phi(head.clone()));
    bld.rule(RuleId::P, &[a], b().context(vec![head]).phi(f(x)).psi(f(y)).gamma(f(z)))
}

#[derive(Clone, Debug)]
pub struct NamedProof {
    pub name: &'static str,
    pub proof: Proof,
}

/// Machine-checkable derivations of the standard S theorems and the
/// implicative-logic witnesses.
pub fn fixtures() -> Vec<NamedProof> {
    let mut out = Vec::new();
    let mut add = |name, proof| out.push(NamedProof { name, proof });

    let mut bl = Builder::new(&[]);
    and_elim_left(&mut bl, "p", "q");
    add("prop2.1.1", bl.finish("(p & q) => p"));

    let mut bl = Builder::new(&[]);
    and_elim_right(&mut bl, "p", "q");
    add("prop2.1.2", bl.finish("(p & q) => q"));

    let mut bl = Builder::new(&[]);
    or_intro_left(&mut bl, "p", "q");
    add("prop2.1.3", bl.finish("p => (p | q)"));

    let mut bl = Builder::new(&[]);
    or_intro_right(&mut bl, "p", "q");
    add("prop2.1.4", bl.finish("q => (p | q)"));

    let mut bl = Builder::new(&[]);
    let l = exchange(&mut bl, "p", "q", "r");
    let r = exchange(&mut bl, "q", "p", "r");
    let lf = bl.steps[l].formula.clone();
    let rf = bl.steps[r].formula.clone();
    bl.rule(RuleId::AndR, &[l, r], b().context(vec![]).phi(lf).psi(rf));
    add("prop2.1.5", bl.finish("(p => (q => r)) <=> (q => (p => r))"));

    // {p ⇔ q} ⊢ p ⇒ q and {p ⇔ q} ⊢ q ⇒ p
    let mut bl = Builder::new(&["p <=> q"]);
    let h = bl.hyp("p <=> q");
    let e = and_elim_left(&mut bl, "p => q", "q => p");
    bl.mp(h, e);
    add("prop2.2.lr1", bl.finish("p => q"));

    let mut bl = Builder::new(&["p <=> q"]);
    let h = bl.hyp("p <=> q");
    let e = and_elim_right(&mut bl, "p => q", "q => p");
    bl.mp(h, e);
    add("prop2.2.lr2", bl.finish("q => p"));

    // {p ⇒ q, q ⇒ p} ⊢ p ⇔ q
    let mut bl = Builder::new(&["p => q", "q => p"]);
    let h1 = bl.hyp("p => q");
    let h2 = bl.hyp("q => p");
    bl.rule(
        RuleId::AndR,
        &[h1, h2],
        b().context(vec![]).phi(f("p => q")).psi(f("q => p")),
    );
    add("prop2.2.rl", bl.finish("p <=> q"));

    let mut bl = Builder::new(&[]);
    bl.axiom(RuleId::A1, b().phi(f("p")));
    add("il1", bl.finish("p => p"));

    let mut bl = Builder::new(&["p => q", "q => r"]);
    let h1 = bl.hyp("p => q");
    let h2 = bl.hyp("q => r");
    bl.rule(
        RuleId::E,
        &[h1, h2],
        b().context(vec![f("p")]).phi(f("q")).gamma(f("r")),
    );
    add("il2", bl.finish("p => r"));

    let mut bl = Builder::new(&["p", "p => q"]);
    let h1 = bl.hyp("p");
    let h2 = bl.hyp("p => q");
    bl.mp(h1, h2);
    add("il3", bl.finish("q"));

    let mut bl = Builder::new(&["q"]);
    let h = bl.hyp("q");
    bl.rule(RuleId::ImpR, &[h], b().phi(f("p")).gamma(f("q")));
    add("il4", bl.finish("p => q"));

    // congruence for ¬: A5 read right-to-left, then MP
    let mut bl = Builder::new(&["p => q", "q => p"]);
    let a5 = bl.axiom(RuleId::A5, b().phi(f("q")).psi(f("p")));
    let e = and_elim_left(&mut bl, "(q => p) => (~p => ~q)", "(~p => ~q) => (q => p)");
    let contra = bl.mp(a5, e);
    let h = bl.hyp("q => p");
    bl.mp(h, contra);
    add("il5-neg", bl.finish("~p => ~q"));

    let mut bl = Builder::new(&["p1 => q1", "q1 => p1", "p2 => q2", "q2 => p2"]);
    let e1 = and_elim_left(&mut bl, "p1", "p2");
    let h1 = bl.hyp("p1 => q1");
    let c1 = bl.rule(
        RuleId::E,
        &[e1, h1],
        b().context(vec![f("p1 & p2")]).phi(f("p1")).gamma(f("q1")),
    );
    let e2 = and_elim_right(&mut bl, "p1", "p2");
    let h2 = bl.hyp("p2 => q2");
    let c2 = bl.rule(
        RuleId::E,
        &[e2, h2],
        b().context(vec![f("p1 & p2")]).phi(f("p2")).gamma(f("q2")),
    );
    bl.rule(
        RuleId::AndR,
        &[c1, c2],
        b().context(vec![f("p1 & p2")]).phi(f("q1")).psi(f("q2")),
    );
    add("il5-and", bl.finish("(p1 & p2) => (q1 & q2)"));

    let mut bl = Builder::new(&["p1 => q1", "q1 => p1", "p2 => q2", "q2 => p2"]);
    let h1 = bl.hyp("p1 => q1");
    let o1 = or_intro_left(&mut bl, "q1", "q2");
    let c1 = bl.rule(
        RuleId::E,
        &[h1, o1],
        b().context(vec![f("p1")]).phi(f("q1")).gamma(f("q1 | q2")),
    );
    let h2 = bl.hyp("p2 => q2");
    let o2 = or_intro_right(&mut bl, "q1", "q2");
    let c2 = bl.rule(
        RuleId::E,
        &[h2, o2],
        b().context(vec![f("p2")]).phi(f("q2")).gamma(f("q1 | q2")),
    );
    bl.rule(
        RuleId::OrL1,
        &[c1, c2],
        b().phi(f("p1")).psi(f("p2")).gamma(f("q1 | q2")),
    );
    add("il5-or", bl.finish("(p1 | p2) => (q1 | q2)"));

    // {φ⇒t, t⇒φ, ψ⇒γ, γ⇒ψ} ⊢ (t⇒ψ) ⇒ (φ⇒γ) with φ=p, ψ=q, γ=r
    let mut bl = Builder::new(&["p => t", "t => p", "q => r", "r => q"]);
    let h1 = bl.hyp("p => t");
    let h2 = bl.hyp("q => r");
    let il = bl.rule(
        RuleId::ImpL,
        &[h1, h2],
        b().context(vec![f("p")]).phi(f("t")).psi(f("q")).gamma(f("r")),
    );
    let ex = exchange(&mut bl, "p", "t => q", "r");
    bl.mp(il, ex);
    add("il5-imp", bl.finish("(t => q) => (p => r)"));

    out
}

pub fn fixture(name: &str) -> Option<Proof> {
    fixtures().into_iter().find(|n| n.name == name).map(|n| n.proof)
}

/// A historical-mode proof of `target`, using the swapped `∧l2`.
///
/// With `ψ := target ⇒ target`: `(target ∧ ψ) ⇒ target` by A1 and `∧l1`,
/// then `ψ ⇒ target` by the historical rule, `ψ` by A1, and `target` by
/// modus ponens.
pub fn inconsistency_fixture(target: &Formula) -> Proof {
    let psi = Formula::imp(target.clone(), target.clone());
    let mut bl = Builder::new(&[]);
    let a = bl.axiom(RuleId::A1, b().phi(target.clone()));
    let l1 = bl.rule(
        RuleId::AndL1,
        &[a],
        b().phi(target.clone()).psi(psi.clone()).gamma(target.clone()),
    );
    let params = b().phi(target.clone()).psi(psi.clone()).gamma(target.clone());
    let formula =
        apply_rule(RuleId::AndL2Historical, &[bl.steps[l1].formula.clone()], &params).expect("historical step");
    let hist = bl.push(formula, RuleId::AndL2Historical, vec![l1], params);
    let witness = bl.axiom(RuleId::A1, b().phi(target.clone()));
    bl.rule(
        RuleId::E,
        &[witness, hist],
        b().context(vec![]).phi(psi).gamma(target.clone()),
    );
    Proof {
        assumptions: vec![],
        steps: bl.steps,
        goal: target.clone(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn axiom_instances() {
        assert_eq!(instantiate_axiom(RuleId::A2, &b().phi(f("q"))).unwrap(), f("0 => q"));
        assert_eq!(instantiate_axiom(RuleId::A4, &b()).unwrap(), f("~0"));
        assert_eq!(
            instantiate_axiom(RuleId::A5, &b().phi(f("p")).psi(f("q"))).unwrap(),
            f("((p => q) => (~q => ~p)) & ((~q => ~p) => (p => q))")
        );
        assert!(matches!(
            instantiate_axiom(RuleId::A2, &b()),
            Err(ProofError::Schema(SchemaError::Missing(_)))
        ));
        assert!(instantiate_axiom(RuleId::E, &b()).is_err());
    }

    #[test]
    fn rule_applications() {
        assert_eq!(
            apply_rule(
                RuleId::E,
                &[f("p"), f("p => q")],
                &b().context(vec![]).phi(f("p")).gamma(f("q"))
            )
            .unwrap(),
            f("q")
        );
        assert_eq!(
            apply_rule(
                RuleId::AndL1,
                &[f("p => p")],
                &b().phi(f("p")).psi(f("q")).gamma(f("p"))
            )
            .unwrap(),
            f("(p & q) => p")
        );
        assert_eq!(
            apply_rule(RuleId::C, &[f("p => p => p => q")], &b().phi(f("p")).gamma(f("q"))).unwrap(),
            f("p => p => q")
        );
        assert_eq!(
            apply_rule(
                RuleId::AndL2Historical,
                &[f("(q & s) => q")],
                &b().phi(f("q")).psi(f("s")).gamma(f("q"))
            )
            .unwrap(),
            f("s => q")
        );
    }

    #[test]
    fn rule_errors() {
        let e = b().context(vec![]).phi(f("p")).gamma(f("q"));
        assert!(matches!(
            apply_rule(RuleId::E, &[f("p")], &e),
            Err(ProofError::Arity {
                expected: 2,
                got: 1,
                ..
            })
        ));
        assert!(matches!(
            apply_rule(RuleId::E, &[f("r"), f("p => q")], &e),
            Err(ProofError::PremiseMismatch { index: 1, .. })
        ));
        // Γ must be given explicitly; it is never read off the premises.
        assert!(apply_rule(RuleId::E, &[f("p"), f("p => q")], &b().phi(f("p")).gamma(f("q"))).is_err());
        // context length is whatever params say: Γ = [r] makes the first premise r ⇒ p
        assert_eq!(
            apply_rule(
                RuleId::E,
                &[f("r => p"), f("p => q")],
                &b().context(vec![f("r")]).phi(f("p")).gamma(f("q"))
            )
            .unwrap(),
            f("r => q")
        );
        assert!(apply_rule(RuleId::Hyp, &[], &b()).is_err());
        assert!(apply_rule(RuleId::A1, &[], &b().phi(f("p"))).is_err());
    }

    #[test]
    fn strong_context_rules_expand_both_sides() {
        // ¬⇒r with Γ = [s]
        let out = apply_rule(
            RuleId::NegImpR,
            &[f("s => s => (p & ~q)")],
            &b().context(vec![f("s")]).phi(f("p")).psi(f("q")),
        )
        .unwrap();
        assert_eq!(out, f("s => s => ~(p => q)"));
        // ∨l2 reads all three formulas as ⇒²-statements
        let out = apply_rule(
            RuleId::OrL2,
            &[f("p => p => r"), f("q => q => r")],
            &b().phi(f("p")).psi(f("q")).gamma(f("r")),
        )
        .unwrap();
        assert_eq!(out, f("(p | q) => (p | q) => r"));
    }

    #[test]
    fn two_step_proof() {
        let text = "goal: (p & q) => p\n1. p => p ; A1 {phi := p}\n2. (p & q) => p ; AND_L1 [1] {phi := p, psi := q, gamma := p}\n";
        let p = Proof::parse(text).unwrap();
        assert!(check_proof(&p, Mode::Standard).accepted());
        let wrong = text.replace("AND_L1", "AND_L2");
        let p = Proof::parse(&wrong).unwrap();
        let report = check_proof(&p, Mode::Standard);
        assert!(!report.accepted());
        assert_eq!(report.first_rejection().unwrap().step, 2);
    }

    #[test]
    fn hyp_and_ordering() {
        let p = Proof::parse("assume: p\ngoal: q\n1. q ; HYP\n").unwrap();
        assert!(!check_proof(&p, Mode::Standard).accepted());
        let p =
            Proof::parse("goal: q\n1. q ; E [1,2] {gamma_list := [], phi := p, gamma := q}\n2. p ; A1 {phi := p}\n")
                .unwrap();
        let r = check_proof(&p, Mode::Standard);
        assert!(r.steps[0].reason.as_ref().unwrap().contains("does not precede"));
    }

    #[test]
    fn goal_mismatch_rejected() {
        let p = Proof::parse("goal: q => q\n1. p => p ; A1 {phi := p}\n").unwrap();
        let r = check_proof(&p, Mode::Standard);
        assert!(r.steps[0].accepted);
        assert!(!r.accepted());
    }

    #[test]
    fn language_is_enforced() {
        let p = Proof::parse("goal: p * q => p * q\n1. p * q => p * q ; A1 {phi := p * q}\n").unwrap();
        assert!(!check_proof(&p, Mode::Standard).accepted());
    }

    #[test]
    fn all_fixtures_accepted() {
        for NamedProof { name, proof } in fixtures() {
            let r = check_proof(&proof, Mode::Standard);
            assert!(r.accepted(), "{name}:\n{r}");
        }
    }

    #[test]
    fn inconsistency() {
        for target in [f("q"), Formula::Bot] {
            let p = inconsistency_fixture(&target);
            assert_eq!(p.steps.len(), 5);
            assert!(check_proof(&p, Mode::Historical).accepted());
            let r = check_proof(&p, Mode::Standard);
            assert!(!r.accepted());
            assert_eq!(r.first_rejection().unwrap().step, 3);
            assert_eq!(r.steps.iter().filter(|s| !s.accepted).count(), 1);
        }
    }

    #[test]
    fn file_round_trip_of_fixtures() {
        for NamedProof { name, proof } in fixtures() {
            let text = proof.to_file_string();
            assert_eq!(Proof::parse(&text).unwrap(), proof, "{name}");
        }
    }

    #[test]
    fn rule_names_parse() {
        for r in RuleId::ALL {
            assert_eq!(r.name().parse::<RuleId>().unwrap(), r);
        }
        assert!("MP".parse::<RuleId>().is_err());
    }
}
