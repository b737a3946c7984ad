//! Line-oriented proof files and the report produced by the checkers.
//!
//! ```text
//! # comment
//! assume: p => q
//! goal: q
//! 1. p ; HYP
//! 2. p => q ; HYP
//! 3. q ; E [1,2] {gamma_list := [], phi := p, gamma := q}
//! ```
//!
//! Step numbers are 1-based and must be consecutive; premise lists refer to
//! step numbers. Both calculi share this syntax; S′ proofs use `MP [i,j]`
//! and axiom names such as `A3'`.

use std::fmt;
use std::fmt::Write as _;

use serde::Serialize;
use thiserror::Error;

use crate::formula::{parse_any, Formula, FormulaError};
use crate::schema::Bindings;

#[derive(Debug, Error)]
pub enum ProofFileError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("line {line}: {source}")]
    Formula {
        line: usize,
        #[source]
        source: FormulaError,
    },
    #[error("missing `goal:` line")]
    NoGoal,
}

/// A parsed but unchecked proof file.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RawProof {
    pub assumptions: Vec<Formula>,
    pub goal: Option<Formula>,
    pub steps: Vec<RawStep>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RawStep {
    pub formula: Formula,
    pub rule: String,
    /// 0-based indices of earlier steps.
    pub premises: Vec<usize>,
    pub params: Bindings,
}

fn formula_at(line: usize, text: &str) -> Result<Formula, ProofFileError> {
    parse_any(text.trim()).map_err(|source| ProofFileError::Formula { line, source })
}

fn syntax<T>(line: usize, msg: impl Into<String>) -> Result<T, ProofFileError> {
    Err(ProofFileError::Syntax { line, msg: msg.into() })
}

impl RawProof {
    pub fn parse(text: &str) -> Result<RawProof, ProofFileError> {
        let mut out = RawProof::default();
        for (i, raw_line) in text.lines().enumerate() {
            let line = i + 1;
            let content = raw_line.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            if let Some(rest) = content.strip_prefix("assume:") {
                out.assumptions.push(formula_at(line, rest)?);
            } else if let Some(rest) = content.strip_prefix("goal:") {
                if out.goal.is_some() {
                    return syntax(line, "duplicate `goal:` line");
                }
                out.goal = Some(formula_at(line, rest)?);
            } else {
                let step = parse_step(line, content, out.steps.len() + 1)?;
                out.steps.push(step);
            }
        }
        Ok(out)
    }

    pub fn goal(&self) -> Result<&Formula, ProofFileError> {
        self.goal.as_ref().ok_or(ProofFileError::NoGoal)
    }

    pub fn to_file_string(&self) -> String {
        let mut s = String::new();
        for a in &self.assumptions {
            let _ = writeln!(s, "assume: {a}");
        }
        if let Some(g) = &self.goal {
            let _ = writeln!(s, "goal: {g}");
        }
        for (i, st) in self.steps.iter().enumerate() {
            let _ = write!(s, "{}. {} ; {}", i + 1, st.formula, st.rule);
            if !st.premises.is_empty() {
                let nums: Vec<String> = st.premises.iter().map(|p| (p + 1).to_string()).collect();
                let _ = write!(s, " [{}]", nums.join(","));
            }
            if !st.params.is_empty() {
                let _ = write!(s, " {}", format_bindings(&st.params));
            }
            s.push('\n');
        }
        s
    }
}

pub fn format_bindings(b: &Bindings) -> String {
    let mut parts = Vec::new();
    if let Some(g) = &b.gamma {
        let items: Vec<String> = g.iter().map(|f| f.to_string()).collect();
        parts.push(format!("gamma_list := [{}]", items.join("; ")));
    }
    for (k, v) in &b.meta {
        parts.push(format!("{k} := {v}"));
    }
    format!("{{{}}}", parts.join(", "))
}

fn parse_step(line: usize, content: &str, expected: usize) -> Result<RawStep, ProofFileError> {
    let Some((num, rest)) = content.split_once('.') else {
        return syntax(line, "expected `N. <formula> ; <RULE> ...`");
    };
    let num: usize = match num.trim().parse() {
        Ok(n) => n,
        Err(_) => return syntax(line, format!("bad step number `{}`", num.trim())),
    };
    if num != expected {
        return syntax(line, format!("expected step {expected}, found {num}"));
    }
    let Some((formula_text, just)) = rest.split_once(';') else {
        return syntax(line, "missing `;` before the justification");
    };
    let formula = formula_at(line, formula_text)?;
    let just = just.trim();
    let rule_end = just
        .find(|c: char| c.is_whitespace() || c == '[' || c == '{')
        .unwrap_or(just.len());
    let rule = just[..rule_end].to_string();
    if rule.is_empty() {
        return syntax(line, "missing rule name");
    }
    let mut rest = just[rule_end..].trim_start();
    let mut premises = Vec::new();
    if let Some(r) = rest.strip_prefix('[') {
        let Some((list, after)) = r.split_once(']') else {
            return syntax(line, "unterminated premise list");
        };
        for item in list.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let n: usize = match item.parse() {
                Ok(n) => n,
                Err(_) => return syntax(line, format!("bad premise number `{item}`")),
            };
            if n == 0 {
                return syntax(line, "premise numbers start at 1");
            }
            premises.push(n - 1);
        }
        rest = after.trim_start();
    }
    let mut params = Bindings::new();
    if let Some(r) = rest.strip_prefix('{') {
        let Some(body) = r.trim_end().strip_suffix('}') else {
            return syntax(line, "unterminated binding block");
        };
        params = parse_bindings(line, body)?;
        rest = "";
    }
    if !rest.is_empty() {
        return syntax(line, format!("unexpected trailing text `{rest}`"));
    }
    Ok(RawStep {
        formula,
        rule,
        premises,
        params,
    })
}

fn parse_bindings(line: usize, body: &str) -> Result<Bindings, ProofFileError> {
    let mut b = Bindings::new();
    let mut depth = 0i32;
    let mut start = 0;
    let mut items = Vec::new();
    for (i, c) in body.char_indices() {
        match c {
            '[' => depth += 1,
            ']' => depth -= 1,
            ',' if depth == 0 => {
                items.push(&body[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    items.push(&body[start..]);
    for item in items.into_iter().map(str::trim).filter(|s| !s.is_empty()) {
        let Some((key, value)) = item.split_once(":=") else {
            return syntax(line, format!("expected `name := formula`, found `{item}`"));
        };
        let key = key.trim();
        let value = value.trim();
        if key == "gamma_list" {
            let Some(list) = value.strip_prefix('[').and_then(|v| v.strip_suffix(']')) else {
                return syntax(line, "gamma_list must be written `[f; f; ...]`");
            };
            let mut gamma = Vec::new();
            for part in list.split(';').map(str::trim).filter(|s| !s.is_empty()) {
                gamma.push(formula_at(line, part)?);
            }
            if b.gamma.replace(gamma).is_some() {
                return syntax(line, "duplicate gamma_list");
            }
        } else {
            if b.meta.contains_key(key) {
                return syntax(line, format!("duplicate binding `{key}`"));
            }
            b.meta.insert(key.to_string(), formula_at(line, value)?);
        }
    }
    Ok(b)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StepVerdict {
    /// 1-based step number.
    pub step: usize,
    pub accepted: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
}

/// Per-step outcome of a proof check. Failures are entries, not errors.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub steps: Vec<StepVerdict>,
    pub goal_matches: bool,
    /// Problems not tied to a single step (bad assumptions, empty proof).
    pub problems: Vec<String>,
}

impl CheckReport {
    pub fn accepted(&self) -> bool {
        self.goal_matches && self.problems.is_empty() && self.steps.iter().all(|s| s.accepted)
    }

    pub fn first_rejection(&self) -> Option<&StepVerdict> {
        self.steps.iter().find(|s| !s.accepted)
    }

    pub(crate) fn finish(mut steps: Vec<StepVerdict>, last: Option<&Formula>, goal: &Formula) -> Self {
        let mut problems = Vec::new();
        let goal_matches = match last {
            Some(f) if f == goal => true,
            Some(f) => {
                problems.push(format!("last step proves `{f}`, goal is `{goal}`"));
                false
            }
            None => {
                problems.push("proof has no steps".into());
                false
            }
        };
        steps.sort_by_key(|s| s.step);
        CheckReport {
            steps,
            goal_matches,
            problems,
        }
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            match &s.reason {
                None => writeln!(f, "step {}: ok", s.step)?,
                Some(r) => writeln!(f, "step {}: REJECTED: {r}", s.step)?,
            }
        }
        for p in &self.problems {
            writeln!(f, "proof: {p}")?;
        }
        write!(f, "{}", if self.accepted() { "ACCEPTED" } else { "REJECTED" })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_print() {
        let text = "\
# modus ponens
assume: p
assume: p => q
goal: q
1. p ; HYP
2. p => q ; HYP
3. q ; E [1,2] {gamma_list := [], phi := p, gamma := q}
";
        let raw = RawProof::parse(text).unwrap();
        assert_eq!(raw.assumptions.len(), 2);
        assert_eq!(raw.steps[2].premises, vec![0, 1]);
        assert_eq!(raw.steps[2].params.gamma, Some(vec![]));
        assert_eq!(raw.steps[2].rule, "E");
        let again = RawProof::parse(&raw.to_file_string()).unwrap();
        assert_eq!(raw, again);
    }

    #[test]
    fn gamma_list_with_several_entries() {
        let raw = RawProof::parse("goal: p\n1. p ; AND_R [1] {gamma_list := [p => q; r], phi := p}\n").unwrap();
        let g = raw.steps[0].params.gamma.clone().unwrap();
        assert_eq!(g.len(), 2);
        assert_eq!(g[0].to_string(), "p => q");
    }

    #[test]
    fn primed_rule_names() {
        let raw = RawProof::parse("goal: p => q => p\n1. p => q => p ; A3' {phi := p, psi := q}\n").unwrap();
        assert_eq!(raw.steps[0].rule, "A3'");
    }

    #[test]
    fn syntax_errors() {
        assert!(RawProof::parse("2. p ; HYP").is_err());
        assert!(RawProof::parse("1. p HYP").is_err());
        assert!(RawProof::parse("1. p & ; HYP").is_err());
        assert!(RawProof::parse("1. p ; E [0]").is_err());
        assert!(RawProof::parse("1. p ; E {phi p}").is_err());
        assert!(RawProof::parse("1. p ; E {phi := p, phi := q}").is_err());
        assert!(matches!(
            RawProof::parse("1. p ; HYP").unwrap().goal(),
            Err(ProofFileError::NoGoal)
        ));
    }
}
