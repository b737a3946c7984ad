//! Checker for Hilbert systems whose only rule is modus ponens.

use std::collections::HashMap;

use thiserror::Error;

use crate::formula::{Connective, Formula, Lang};
use crate::proof::{CheckReport, RawProof, RawStep, StepVerdict};
use crate::schema::{Bindings, CalculusPresentation, SchemaError};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Justification {
    Axiom(String, Bindings),
    /// `Mp(i, j)`: step `i` proves `φ`, step `j` proves `φ ⇒ ψ` (0-based).
    Mp(usize, usize),
    Hyp,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertStep {
    pub formula: Formula,
    pub just: Justification,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertProof {
    pub assumptions: Vec<Formula>,
    pub steps: Vec<HilbertStep>,
    pub goal: Formula,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HilbertError {
    #[error("unknown axiom `{0}`")]
    UnknownAxiom(String),
    #[error("{0} takes no bindings or premises")]
    Extra(&'static str),
    #[error("MP takes exactly two premises")]
    MpArity,
    #[error(transparent)]
    Schema(#[from] SchemaError),
}

impl HilbertProof {
    pub fn from_raw(raw: &RawProof) -> Result<HilbertProof, crate::Error> {
        let mut steps = Vec::with_capacity(raw.steps.len());
        for s in &raw.steps {
            let just = match s.rule.as_str() {
                "MP" => {
                    if !s.params.is_empty() {
                        return Err(HilbertError::Extra("MP").into());
                    }
                    match s.premises[..] {
                        [i, j] => Justification::Mp(i, j),
                        _ => return Err(HilbertError::MpArity.into()),
                    }
                }
                "HYP" => {
                    if !s.params.is_empty() || !s.premises.is_empty() {
                        return Err(HilbertError::Extra("HYP").into());
                    }
                    Justification::Hyp
                }
                name => {
                    if !s.premises.is_empty() {
                        return Err(crate::Error::Input(format!("axiom {name} takes no premises")));
                    }
                    Justification::Axiom(name.to_string(), s.params.clone())
                }
            };
            steps.push(HilbertStep {
                formula: s.formula.clone(),
                just,
            });
        }
        Ok(HilbertProof {
            assumptions: raw.assumptions.clone(),
            steps,
            goal: raw.goal()?.clone(),
        })
    }

    pub fn to_raw(&self) -> RawProof {
        let steps = self
            .steps
            .iter()
            .map(|s| {
                let (rule, premises, params) = match &s.just {
                    Justification::Axiom(n, b) => (n.clone(), vec![], b.clone()),
                    Justification::Mp(i, j) => ("MP".to_string(), vec![*i, *j], Bindings::new()),
                    Justification::Hyp => ("HYP".to_string(), vec![], Bindings::new()),
                };
                RawStep {
                    formula: s.formula.clone(),
                    rule,
                    premises,
                    params,
                }
            })
            .collect();
        RawProof {
            assumptions: self.assumptions.clone(),
            goal: Some(self.goal.clone()),
            steps,
        }
    }

    pub fn parse(text: &str) -> Result<HilbertProof, crate::Error> {
        HilbertProof::from_raw(&RawProof::parse(text)?)
    }

    pub fn to_file_string(&self) -> String {
        self.to_raw().to_file_string()
    }
}

/// A presentation with axiom schemas and modus ponens for `imp`.
#[derive(Clone, Debug)]
pub struct MpCalculus {
    pub presentation: CalculusPresentation,
    pub imp: Connective,
}

impl MpCalculus {
    pub fn lang(&self) -> Lang {
        self.presentation.lang
    }

    pub fn instantiate(&self, axiom: &str, b: &Bindings) -> Result<Formula, HilbertError> {
        let schema = self
            .presentation
            .axiom(axiom)
            .ok_or_else(|| HilbertError::UnknownAxiom(axiom.to_string()))?;
        Ok(schema.instantiate(b)?.1)
    }

    fn check_step(&self, p: &HilbertProof, i: usize) -> Result<(), String> {
        let step = &p.steps[i];
        self.lang().check(&step.formula).map_err(|e| e.to_string())?;
        match &step.just {
            Justification::Hyp => {
                if p.assumptions.contains(&step.formula) {
                    Ok(())
                } else {
                    Err(format!("`{}` is not an assumption", step.formula))
                }
            }
            Justification::Axiom(name, b) => {
                let inst = self.instantiate(name, b).map_err(|e| e.to_string())?;
                if inst == step.formula {
                    Ok(())
                } else {
                    Err(format!("{name} yields `{inst}`, step states `{}`", step.formula))
                }
            }
            &Justification::Mp(a, b) => {
                if a >= i || b >= i {
                    return Err(format!("MP premises must precede step {}", i + 1));
                }
                let minor = &p.steps[a].formula;
                match p.steps[b].formula.as_bin(self.imp) {
                    Some((ante, cons)) if ante == minor && cons == &step.formula => Ok(()),
                    Some((ante, _)) if ante != minor => Err(format!(
                        "MP: antecedent of step {} is `{ante}`, step {} is `{minor}`",
                        b + 1,
                        a + 1
                    )),
                    Some((_, cons)) => Err(format!("MP yields `{cons}`, step states `{}`", step.formula)),
                    None => Err(format!("MP: step {} is not an implication", b + 1)),
                }
            }
        }
    }

    pub fn check(&self, p: &HilbertProof) -> CheckReport {
        let steps = (0..p.steps.len())
            .map(|i| {
                let r = self.check_step(p, i);
                StepVerdict {
                    step: i + 1,
                    accepted: r.is_ok(),
                    reason: r.err(),
                }
            })
            .collect();
        let mut report = CheckReport::finish(steps, p.steps.last().map(|s| &s.formula), &p.goal);
        for a in &p.assumptions {
            if let Err(e) = self.lang().check(a) {
                report.problems.push(format!("assumption `{a}`: {e}"));
            }
        }
        report
    }
}

/// Incremental proof construction. A formula already derived is never
/// derived twice; requests for it return the earlier step.
#[derive(Clone, Debug)]
pub struct ProofBuilder<'c> {
    calc: &'c MpCalculus,
    pub steps: Vec<HilbertStep>,
    seen: HashMap<Formula, usize>,
}

impl<'c> ProofBuilder<'c> {
    pub fn new(calc: &'c MpCalculus) -> Self {
        ProofBuilder {
            calc,
            steps: Vec::new(),
            seen: HashMap::new(),
        }
    }

    pub fn formula(&self, i: usize) -> &Formula {
        &self.steps[i].formula
    }

    fn push(&mut self, formula: Formula, just: Justification) -> usize {
        if let Some(&i) = self.seen.get(&formula) {
            return i;
        }
        self.steps.push(HilbertStep {
            formula: formula.clone(),
            just,
        });
        let i = self.steps.len() - 1;
        self.seen.insert(formula, i);
        i
    }

    pub fn hyp(&mut self, f: Formula) -> usize {
        self.push(f, Justification::Hyp)
    }

    /// Panics if the axiom is unknown or the bindings do not fit.
    pub fn axiom(&mut self, name: &str, b: Bindings) -> usize {
        let f = match self.calc.instantiate(name, &b) {
            Ok(f) => f,
            Err(e) => panic!("{name}: {e}"),
        };
        self.push(f, Justification::Axiom(name.to_string(), b))
    }

    /// Modus ponens; panics unless step `major` is `minor ⇒ X`.
    pub fn mp(&mut self, minor: usize, major: usize) -> usize {
        let concl = match self.steps[major].formula.as_bin(self.calc.imp) {
            Some((a, c)) if a == &self.steps[minor].formula => c.clone(),
            _ => panic!(
                "MP mismatch: `{}` with `{}`",
                self.steps[minor].formula, self.steps[major].formula
            ),
        };
        self.push(concl, Justification::Mp(minor, major))
    }

    pub fn finish(self, assumptions: Vec<Formula>, goal_step: usize) -> HilbertProof {
        let goal = self.steps[goal_step].formula.clone();
        let mut steps = self.steps;
        if goal_step + 1 != steps.len() {
            // restate the goal as the final line
            let just = steps[goal_step].just.clone();
            steps.push(HilbertStep {
                formula: goal.clone(),
                just,
            });
        }
        HilbertProof {
            assumptions,
            steps,
            goal,
        }
    }
}
