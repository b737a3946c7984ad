//! Axiom and rule schemas shared by the proof checkers and the algebraizer.
//!
//! A schema is a formula whose variables are metavariables (`phi`, `psi`,
//! `gamma`, ...). A schema may additionally be prefixed by the context `Γ`,
//! either as `Γ ⇒ body` or as `Γ ⇒² body`. The context is always supplied
//! explicitly when instantiating, never inferred.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use thiserror::Error;

use crate::formula::{context_imp, context_imp2, Formula, Lang, Substitution};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Context {
    None,
    /// `Γ ⇒ body`
    Imp,
    /// `Γ ⇒² body`
    Imp2,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Schema {
    pub context: Context,
    pub body: Formula,
}

impl Schema {
    pub fn plain(body: Formula) -> Self {
        Schema {
            context: Context::None,
            body,
        }
    }

    pub fn ctx(body: Formula) -> Self {
        Schema {
            context: Context::Imp,
            body,
        }
    }

    pub fn ctx2(body: Formula) -> Self {
        Schema {
            context: Context::Imp2,
            body,
        }
    }

    pub fn instantiate(&self, s: &Substitution, gamma: &[Formula]) -> Formula {
        let body = self.body.substitute(s);
        match self.context {
            Context::None => body,
            Context::Imp => context_imp(gamma, body),
            Context::Imp2 => context_imp2(gamma, body),
        }
    }
}

impl fmt::Display for Schema {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.context {
            Context::None => write!(f, "{}", self.body),
            Context::Imp => write!(f, "$G => {}", self.body),
            Context::Imp2 => write!(f, "$G =>2 {}", self.body),
        }
    }
}

/// A named rule `premises / conclusion`. Axioms are rules without premises.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RuleSchema {
    pub name: String,
    pub premises: Vec<Schema>,
    pub conclusion: Schema,
}

impl RuleSchema {
    pub fn axiom(name: impl Into<String>, body: Formula) -> Self {
        RuleSchema {
            name: name.into(),
            premises: Vec::new(),
            conclusion: Schema::plain(body),
        }
    }

    pub fn rule(name: impl Into<String>, premises: Vec<Schema>, conclusion: Schema) -> Self {
        RuleSchema {
            name: name.into(),
            premises,
            conclusion,
        }
    }

    /// True when some schema is prefixed by `Γ`.
    pub fn is_contextual(&self) -> bool {
        self.schemas().any(|s| s.context != Context::None)
    }

    pub fn uses_strong_context(&self) -> bool {
        self.schemas().any(|s| s.context == Context::Imp2)
    }

    fn schemas(&self) -> impl Iterator<Item = &Schema> {
        self.premises.iter().chain(std::iter::once(&self.conclusion))
    }

    pub fn metavars(&self) -> BTreeSet<String> {
        self.schemas().flat_map(|s| s.body.vars()).map(str::to_string).collect()
    }

    /// Instantiates every premise and the conclusion under `b`.
    ///
    /// `b` must bind exactly the metavariables of the schema, and carry a
    /// context list iff the rule is contextual.
    pub fn instantiate(&self, b: &Bindings) -> Result<(Vec<Formula>, Formula), SchemaError> {
        let wanted = self.metavars();
        let given: BTreeSet<String> = b.meta.keys().cloned().collect();
        if let Some(missing) = wanted.difference(&given).next() {
            return Err(SchemaError::Missing(missing.clone()));
        }
        if let Some(extra) = given.difference(&wanted).next() {
            return Err(SchemaError::Unexpected(extra.clone()));
        }
        let gamma: &[Formula] = match (&b.gamma, self.is_contextual()) {
            (Some(g), true) => g,
            (None, true) => return Err(SchemaError::Missing("gamma_list".into())),
            (Some(_), false) => return Err(SchemaError::Unexpected("gamma_list".into())),
            (None, false) => &[],
        };
        let s = b.substitution();
        let premises = self.premises.iter().map(|p| p.instantiate(&s, gamma)).collect();
        Ok((premises, self.conclusion.instantiate(&s, gamma)))
    }
}

impl fmt::Display for RuleSchema {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.premises.is_empty() {
            return write!(f, "axiom {}: {}", self.name, self.conclusion);
        }
        write!(f, "rule {}: ", self.name)?;
        for (i, p) in self.premises.iter().enumerate() {
            if i > 0 {
                f.write_str(" , ")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, " / {}", self.conclusion)?;
        if self.uses_strong_context() {
            f.write_str(" [gamma2]")
        } else if self.is_contextual() {
            f.write_str(" [gamma]")
        } else {
            Ok(())
        }
    }
}

/// A Hilbert-style presentation: axiom schemas plus rule schemas.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CalculusPresentation {
    pub name: String,
    pub lang: Lang,
    pub axioms: Vec<RuleSchema>,
    pub rules: Vec<RuleSchema>,
}

impl CalculusPresentation {
    pub fn axiom(&self, name: &str) -> Option<&RuleSchema> {
        self.axioms.iter().find(|a| a.name == name)
    }

    pub fn rule(&self, name: &str) -> Option<&RuleSchema> {
        self.rules.iter().find(|r| r.name == name)
    }
}

impl fmt::Display for CalculusPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "lang {}", self.lang)?;
        for a in self.axioms.iter().chain(&self.rules) {
            writeln!(f, "{a}")?;
        }
        Ok(())
    }
}

/// Instantiation parameters of a step: metavariable bindings and, for
/// contextual rules, the explicit context list `Γ`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Bindings {
    pub meta: BTreeMap<String, Formula>,
    pub gamma: Option<Vec<Formula>>,
}

impl Bindings {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn bind(mut self, var: &str, f: Formula) -> Self {
        self.meta.insert(var.to_string(), f);
        self
    }

    pub fn phi(self, f: Formula) -> Self {
        self.bind("phi", f)
    }

    pub fn psi(self, f: Formula) -> Self {
        self.bind("psi", f)
    }

    pub fn gamma(self, f: Formula) -> Self {
        self.bind("gamma", f)
    }

    pub fn context(mut self, gamma: Vec<Formula>) -> Self {
        self.gamma = Some(gamma);
        self
    }

    pub fn is_empty(&self) -> bool {
        self.meta.is_empty() && self.gamma.is_none()
    }

    pub fn substitution(&self) -> Substitution {
        self.meta.iter().map(|(k, v)| (k.clone(), v.clone())).collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SchemaError {
    #[error("missing binding for `{0}`")]
    Missing(String),
    #[error("unexpected binding for `{0}`")]
    Unexpected(String),
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::parse_any;

    fn f(s: &str) -> Formula {
        parse_any(s).unwrap()
    }

    #[test]
    fn instantiate_contextual_rule() {
        let e = RuleSchema::rule(
            "E",
            vec![Schema::ctx(f("phi")), Schema::plain(f("phi => gamma"))],
            Schema::ctx(f("gamma")),
        );
        assert!(e.is_contextual());
        assert!(!e.uses_strong_context());
        let b = Bindings::new().phi(f("q")).gamma(f("r")).context(vec![f("p")]);
        let (prem, concl) = e.instantiate(&b).unwrap();
        assert_eq!(prem, vec![f("p => q"), f("q => r")]);
        assert_eq!(concl, f("p => r"));

        let missing = Bindings::new().phi(f("q")).gamma(f("r"));
        assert_eq!(e.instantiate(&missing), Err(SchemaError::Missing("gamma_list".into())));
        let extra = b.clone().psi(f("s"));
        assert_eq!(e.instantiate(&extra), Err(SchemaError::Unexpected("psi".into())));
    }

    #[test]
    fn strong_context_prefix() {
        let s = Schema::ctx2(f("phi"));
        let sub = Substitution::new().with("phi", f("r"));
        assert_eq!(s.instantiate(&sub, &[f("p"), f("q")]), f("p => p => q => q => r"));
    }
}
