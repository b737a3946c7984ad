//! Propositional formulas over the connectives of S, S′ and N4.
//!
//! Formulas are plain syntax trees; equality is structural. Abbreviations
//! (`⇔`, `Γ ⇒ φ`, `Γ ⇒² φ`, powers, defined fusion) expand eagerly, so a
//! formula never contains an abbreviation node.
//!
//! The ASCII grammar, tightest binding first:
//!
//! ```text
//! ~          negation
//! *          fusion            (left associative)
//! &          conjunction       (left associative)
//! |          disjunction       (left associative)
//! => -> <=>  implications      (right associative, <=> expands)
//! ```
//!
//! Atoms are identifiers starting with a lowercase ASCII letter, `0` (⊥) and
//! `1c` (⊤).

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Connective {
    And,
    Or,
    /// Strong implication `⇒`.
    Imp,
    /// Weak implication `→` (N4).
    WeakImp,
    /// Fusion `*`.
    Fuse,
}

impl Connective {
    pub fn symbol(self) -> &'static str {
        match self {
            Connective::And => "&",
            Connective::Or => "|",
            Connective::Imp => "=>",
            Connective::WeakImp => "->",
            Connective::Fuse => "*",
        }
    }

    fn precedence(self) -> u8 {
        match self {
            Connective::Imp | Connective::WeakImp => 1,
            Connective::Or => 2,
            Connective::And => 3,
            Connective::Fuse => 4,
        }
    }

    fn right_assoc(self) -> bool {
        matches!(self, Connective::Imp | Connective::WeakImp)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Formula {
    Var(String),
    Bot,
    Top,
    Not(Box<Formula>),
    Bin(Connective, Box<Formula>, Box<Formula>),
}

impl Formula {
    pub fn var(name: impl Into<String>) -> Formula {
        Formula::Var(name.into())
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(f: Formula) -> Formula {
        Formula::Not(Box::new(f))
    }

    pub fn bin(c: Connective, l: Formula, r: Formula) -> Formula {
        Formula::Bin(c, Box::new(l), Box::new(r))
    }

    pub fn and(l: Formula, r: Formula) -> Formula {
        Formula::bin(Connective::And, l, r)
    }

    pub fn or(l: Formula, r: Formula) -> Formula {
        Formula::bin(Connective::Or, l, r)
    }

    pub fn imp(l: Formula, r: Formula) -> Formula {
        Formula::bin(Connective::Imp, l, r)
    }

    pub fn wimp(l: Formula, r: Formula) -> Formula {
        Formula::bin(Connective::WeakImp, l, r)
    }

    pub fn fuse(l: Formula, r: Formula) -> Formula {
        Formula::bin(Connective::Fuse, l, r)
    }

    /// Splits `l ⇒ r` into its parts.
    pub fn as_imp(&self) -> Option<(&Formula, &Formula)> {
        match self {
            Formula::Bin(Connective::Imp, l, r) => Some((l, r)),
            _ => None,
        }
    }

    pub fn as_bin(&self, c: Connective) -> Option<(&Formula, &Formula)> {
        match self {
            Formula::Bin(d, l, r) if *d == c => Some((l, r)),
            _ => None,
        }
    }

    pub fn vars(&self) -> BTreeSet<&str> {
        let mut out = BTreeSet::new();
        self.collect_vars(&mut out);
        out
    }

    fn collect_vars<'a>(&'a self, out: &mut BTreeSet<&'a str>) {
        match self {
            Formula::Var(v) => {
                out.insert(v.as_str());
            }
            Formula::Bot | Formula::Top => {}
            Formula::Not(f) => f.collect_vars(out),
            Formula::Bin(_, l, r) => {
                l.collect_vars(out);
                r.collect_vars(out);
            }
        }
    }

    /// Number of nodes.
    pub fn size(&self) -> usize {
        match self {
            Formula::Var(_) | Formula::Bot | Formula::Top => 1,
            Formula::Not(f) => 1 + f.size(),
            Formula::Bin(_, l, r) => 1 + l.size() + r.size(),
        }
    }

    /// Counts occurrences of `sub` as a subtree.
    pub fn occurrences(&self, sub: &Formula) -> usize {
        if self == sub {
            return 1;
        }
        match self {
            Formula::Var(_) | Formula::Bot | Formula::Top => 0,
            Formula::Not(f) => f.occurrences(sub),
            Formula::Bin(_, l, r) => l.occurrences(sub) + r.occurrences(sub),
        }
    }

    /// Length of the chain of `⇒` along the right spine.
    pub fn imp_spine_depth(&self) -> usize {
        match self.as_imp() {
            Some((_, r)) => 1 + r.imp_spine_depth(),
            None => 0,
        }
    }

    pub fn substitute(&self, s: &Substitution) -> Formula {
        match self {
            Formula::Var(v) => s.get(v).cloned().unwrap_or_else(|| self.clone()),
            Formula::Bot | Formula::Top => self.clone(),
            Formula::Not(f) => Formula::not(f.substitute(s)),
            Formula::Bin(c, l, r) => Formula::bin(*c, l.substitute(s), r.substitute(s)),
        }
    }

    fn precedence(&self) -> u8 {
        match self {
            Formula::Var(_) | Formula::Bot | Formula::Top => 6,
            Formula::Not(_) => 5,
            Formula::Bin(c, _, _) => c.precedence(),
        }
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Formula::Var(v) => f.write_str(v),
            Formula::Bot => f.write_str("0"),
            Formula::Top => f.write_str("1c"),
            Formula::Not(g) => {
                f.write_str("~")?;
                write_child(f, g, g.precedence() < 5)
            }
            Formula::Bin(c, l, r) => {
                let p = c.precedence();
                let (lp, rp) = if c.right_assoc() {
                    (l.precedence() <= p, r.precedence() < p)
                } else {
                    (l.precedence() < p, r.precedence() <= p)
                };
                write_child(f, l, lp)?;
                write!(f, " {} ", c.symbol())?;
                write_child(f, r, rp)
            }
        }
    }
}

fn write_child(f: &mut fmt::Formatter<'_>, g: &Formula, parens: bool) -> fmt::Result {
    if parens {
        write!(f, "({g})")
    } else {
        write!(f, "{g}")
    }
}

/// The signature a formula lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Lang {
    /// `∧ ∨ ⇒ ¬ ⊥`
    S,
    /// `∧ ∨ ⇒ * ¬ ⊥ ⊤`
    SPrime,
    /// `∧ ∨ → ¬`
    N4,
}

impl Lang {
    pub fn admits_connective(self, c: Connective) -> bool {
        matches!(
            (self, c),
            (_, Connective::And | Connective::Or)
                | (Lang::S | Lang::SPrime, Connective::Imp)
                | (Lang::SPrime, Connective::Fuse)
                | (Lang::N4, Connective::WeakImp)
        )
    }

    /// Checks that every node of `f` belongs to this signature.
    pub fn check(self, f: &Formula) -> Result<(), LangError> {
        match f {
            Formula::Var(_) | Formula::Not(_) => {}
            Formula::Bot if self == Lang::N4 => {
                return Err(LangError {
                    lang: self,
                    symbol: "0",
                })
            }
            Formula::Top if self != Lang::SPrime => {
                return Err(LangError {
                    lang: self,
                    symbol: "1c",
                })
            }
            Formula::Bot | Formula::Top => {}
            Formula::Bin(c, _, _) if !self.admits_connective(*c) => {
                return Err(LangError {
                    lang: self,
                    symbol: c.symbol(),
                })
            }
            Formula::Bin(..) => {}
        }
        match f {
            Formula::Not(g) => self.check(g),
            Formula::Bin(_, l, r) => {
                self.check(l)?;
                self.check(r)
            }
            _ => Ok(()),
        }
    }
}

impl fmt::Display for Lang {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Lang::S => "S",
            Lang::SPrime => "SPrime",
            Lang::N4 => "N4",
        })
    }
}

impl FromStr for Lang {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "S" | "s" => Ok(Lang::S),
            "SPrime" | "sprime" | "S'" => Ok(Lang::SPrime),
            "N4" | "n4" => Ok(Lang::N4),
            _ => Err(format!("unknown language `{s}`")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("`{symbol}` is not in the language {lang}")]
pub struct LangError {
    pub lang: Lang,
    pub symbol: &'static str,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormulaError {
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error(transparent)]
    Lang(#[from] LangError),
    #[error("power exponent must be at least 1, got {0}")]
    Exponent(usize),
}

/// Simultaneous replacement of variables; identity outside its support.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Substitution(BTreeMap<String, Formula>);

impl Substitution {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with(mut self, var: impl Into<String>, f: Formula) -> Self {
        self.insert(var, f);
        self
    }

    pub fn insert(&mut self, var: impl Into<String>, f: Formula) {
        self.0.insert(var.into(), f);
    }

    pub fn get(&self, var: &str) -> Option<&Formula> {
        self.0.get(var)
    }

    pub fn apply(&self, f: &Formula) -> Formula {
        f.substitute(self)
    }

    /// `then ∘ self`: apply `self` first, then `then`.
    pub fn then(&self, then: &Substitution) -> Substitution {
        let mut out: BTreeMap<String, Formula> = self.0.iter().map(|(k, v)| (k.clone(), v.substitute(then))).collect();
        for (k, v) in &then.0 {
            out.entry(k.clone()).or_insert_with(|| v.clone());
        }
        Substitution(out)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&String, &Formula)> {
        self.0.iter()
    }
}

impl FromIterator<(String, Formula)> for Substitution {
    fn from_iter<T: IntoIterator<Item = (String, Formula)>>(iter: T) -> Self {
        Substitution(iter.into_iter().collect())
    }
}

// ---------------------------------------------------------------------------
// Abbreviations

/// `Γ ⇒ φ := φ₁ ⇒ (φ₂ ⇒ (… ⇒ (φₙ ⇒ φ)…))`, and `φ` for empty `Γ`.
pub fn context_imp(gamma: &[Formula], phi: Formula) -> Formula {
    gamma.iter().rev().fold(phi, |acc, g| Formula::imp(g.clone(), acc))
}

/// `φ ⇒² ψ := φ ⇒ (φ ⇒ ψ)`.
pub fn strong_imp2(phi: Formula, psi: Formula) -> Formula {
    Formula::imp(phi.clone(), Formula::imp(phi, psi))
}

/// `Γ ⇒² φ`, nesting `⇒²` the way [`context_imp`] nests `⇒`.
pub fn context_imp2(gamma: &[Formula], phi: Formula) -> Formula {
    gamma.iter().rev().fold(phi, |acc, g| strong_imp2(g.clone(), acc))
}

/// `(φ ⇒ ψ) ∧ (ψ ⇒ φ)`.
pub fn biconditional(phi: Formula, psi: Formula) -> Formula {
    Formula::and(Formula::imp(phi.clone(), psi.clone()), Formula::imp(psi, phi))
}

/// `(φ → ψ) ∧ (ψ → φ)`, the N4 biconditional.
pub fn weak_biconditional(phi: Formula, psi: Formula) -> Formula {
    Formula::and(Formula::wimp(phi.clone(), psi.clone()), Formula::wimp(psi, phi))
}

/// `(φ → ψ) ∧ (¬ψ → ¬φ)`, strong implication expressed in N4.
pub fn strong_from_weak(phi: Formula, psi: Formula) -> Formula {
    Formula::and(
        Formula::wimp(phi.clone(), psi.clone()),
        Formula::wimp(Formula::not(psi), Formula::not(phi)),
    )
}

/// Fusion in the given language: `¬(x ⇒ ¬y)` in S, the primitive `*` in S′.
pub fn defined_fusion(x: Formula, y: Formula, lang: Lang) -> Result<Formula, FormulaError> {
    match lang {
        Lang::S => Ok(Formula::not(Formula::imp(x, Formula::not(y)))),
        Lang::SPrime => Ok(Formula::fuse(x, y)),
        Lang::N4 => Err(LangError { lang, symbol: "*" }.into()),
    }
}

/// `x¹ := x`, `xⁿ := x * xⁿ⁻¹`.
pub fn power(x: &Formula, n: usize, lang: Lang) -> Result<Formula, FormulaError> {
    if n == 0 {
        return Err(FormulaError::Exponent(n));
    }
    let mut acc = x.clone();
    for _ in 1..n {
        acc = defined_fusion(x.clone(), acc, lang)?;
    }
    Ok(acc)
}

// ---------------------------------------------------------------------------
// Parsing

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Bot,
    Top,
    Not,
    Fuse,
    And,
    Or,
    Imp,
    WeakImp,
    Iff,
    WeakIff,
    LParen,
    RParen,
}

fn tokenize(text: &str) -> Result<Vec<(usize, Tok)>, FormulaError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        let tok = match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'~' => Tok::Not,
            b'*' => Tok::Fuse,
            b'&' => Tok::And,
            b'|' => Tok::Or,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            b'=' if bytes.get(i + 1) == Some(&b'>') => {
                i += 1;
                Tok::Imp
            }
            b'-' if bytes.get(i + 1) == Some(&b'>') => {
                i += 1;
                Tok::WeakImp
            }
            b'<' if text[i..].starts_with("<=>") => {
                i += 2;
                Tok::Iff
            }
            b'<' if text[i..].starts_with("<->") => {
                i += 2;
                Tok::WeakIff
            }
            b'0' if !bytes.get(i + 1).is_some_and(|b| b.is_ascii_alphanumeric()) => Tok::Bot,
            b'1' if bytes.get(i + 1) == Some(&b'c') && !bytes.get(i + 2).is_some_and(|b| b.is_ascii_alphanumeric()) => {
                i += 1;
                Tok::Top
            }
            b'a'..=b'z' => {
                let mut j = i + 1;
                while j < bytes.len() && (bytes[j].is_ascii_alphanumeric() || bytes[j] == b'_') {
                    j += 1;
                }
                let name = text[i..j].to_string();
                i = j;
                out.push((start, Tok::Ident(name)));
                continue;
            }
            _ => {
                let ch = text[i..].chars().next().unwrap_or('?');
                return Err(FormulaError::Syntax {
                    pos: i,
                    msg: format!("unexpected character `{ch}`"),
                });
            }
        };
        i += 1;
        out.push((start, tok));
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(o, _)| *o)
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T, FormulaError> {
        Err(FormulaError::Syntax {
            pos: self.offset(),
            msg: msg.into(),
        })
    }

    fn implication(&mut self) -> Result<Formula, FormulaError> {
        let lhs = self.disjunction()?;
        let op = match self.peek() {
            Some(Tok::Imp) => Tok::Imp,
            Some(Tok::WeakImp) => Tok::WeakImp,
            Some(Tok::Iff) => Tok::Iff,
            Some(Tok::WeakIff) => Tok::WeakIff,
            _ => return Ok(lhs),
        };
        self.pos += 1;
        let rhs = self.implication()?;
        Ok(match op {
            Tok::Imp => Formula::imp(lhs, rhs),
            Tok::WeakImp => Formula::wimp(lhs, rhs),
            Tok::WeakIff => weak_biconditional(lhs, rhs),
            _ => biconditional(lhs, rhs),
        })
    }

    fn left_assoc(
        &mut self,
        tok: Tok,
        c: Connective,
        next: fn(&mut Self) -> Result<Formula, FormulaError>,
    ) -> Result<Formula, FormulaError> {
        let mut acc = next(self)?;
        while self.peek() == Some(&tok) {
            self.pos += 1;
            let rhs = next(self)?;
            acc = Formula::bin(c, acc, rhs);
        }
        Ok(acc)
    }

    fn disjunction(&mut self) -> Result<Formula, FormulaError> {
        self.left_assoc(Tok::Or, Connective::Or, Self::conjunction)
    }

    fn conjunction(&mut self) -> Result<Formula, FormulaError> {
        self.left_assoc(Tok::And, Connective::And, Self::fusion)
    }

    fn fusion(&mut self) -> Result<Formula, FormulaError> {
        self.left_assoc(Tok::Fuse, Connective::Fuse, Self::unary)
    }

    fn unary(&mut self) -> Result<Formula, FormulaError> {
        match self.peek().cloned() {
            Some(Tok::Not) => {
                self.pos += 1;
                Ok(Formula::not(self.unary()?))
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                Ok(Formula::Var(name))
            }
            Some(Tok::Bot) => {
                self.pos += 1;
                Ok(Formula::Bot)
            }
            Some(Tok::Top) => {
                self.pos += 1;
                Ok(Formula::Top)
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let inner = self.implication()?;
                if self.peek() != Some(&Tok::RParen) {
                    return self.err("expected `)`");
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(t) => self.err(format!("unexpected token {t:?}")),
            None => self.err("unexpected end of input"),
        }
    }
}

/// Parses `text` without a language check.
pub fn parse_any(text: &str) -> Result<Formula, FormulaError> {
    let toks = tokenize(text)?;
    let mut p = Parser {
        toks,
        pos: 0,
        end: text.len(),
    };
    let f = p.implication()?;
    if p.pos != p.toks.len() {
        return p.err("trailing input");
    }
    Ok(f)
}

/// Parses `text` and checks it against `lang`.
pub fn parse(text: &str, lang: Lang) -> Result<Formula, FormulaError> {
    let f = parse_any(text)?;
    lang.check(&f)?;
    Ok(f)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(s: &str) -> Formula {
        Formula::var(s)
    }

    #[test]
    fn parse_examples() {
        assert_eq!(
            parse("(p & q) => p", Lang::S).unwrap(),
            Formula::imp(Formula::and(v("p"), v("q")), v("p"))
        );
        assert_eq!(parse("~0", Lang::S).unwrap(), Formula::not(Formula::Bot));
        assert!(matches!(
            parse("p * q", Lang::S),
            Err(FormulaError::Lang(LangError { symbol: "*", .. }))
        ));
        assert!(parse("1c", Lang::S).is_err());
        assert!(parse("1c", Lang::SPrime).is_ok());
        assert!(parse("p -> q", Lang::S).is_err());
        assert!(parse("0", Lang::N4).is_err());
    }

    #[test]
    fn precedence_and_associativity() {
        let f = parse_any("~p * q & r | s => t => u").unwrap();
        let expected = Formula::imp(
            Formula::or(
                Formula::and(Formula::fuse(Formula::not(v("p")), v("q")), v("r")),
                v("s"),
            ),
            Formula::imp(v("t"), v("u")),
        );
        assert_eq!(f, expected);
        assert_eq!(
            parse_any("p & q & r").unwrap(),
            Formula::and(Formula::and(v("p"), v("q")), v("r"))
        );
    }

    #[test]
    fn iff_expands() {
        assert_eq!(parse_any("p <=> q").unwrap(), biconditional(v("p"), v("q")));
    }

    #[test]
    fn syntax_errors_carry_positions() {
        match parse_any("p & ") {
            Err(FormulaError::Syntax { pos, .. }) => assert_eq!(pos, 4),
            other => panic!("{other:?}"),
        }
        match parse_any("p $ q") {
            Err(FormulaError::Syntax { pos, .. }) => assert_eq!(pos, 2),
            other => panic!("{other:?}"),
        }
        assert!(parse_any("(p").is_err());
        assert!(parse_any("p q").is_err());
        assert!(parse_any("P").is_err());
        assert!(parse_any("10").is_err());
    }

    #[test]
    fn printing() {
        for s in [
            "(p => q) => r",
            "p => q => r",
            "~(p & q)",
            "~~p",
            "p * (p * p)",
            "p * p * p",
            "(p | q) & r",
            "p -> q => r",
            "(p -> q) => r",
            "~0 & 1c",
        ] {
            let f = parse_any(s).unwrap();
            assert_eq!(f.to_string(), s);
        }
    }

    #[test]
    fn context_implications() {
        let (p, q, r) = (v("p"), v("q"), v("r"));
        assert_eq!(
            context_imp(&[p.clone(), q.clone()], r.clone()),
            Formula::imp(p.clone(), Formula::imp(q.clone(), r.clone()))
        );
        assert_eq!(context_imp(&[], r.clone()), r);
        assert_eq!(
            context_imp(std::slice::from_ref(&p), q.clone()),
            Formula::imp(p.clone(), q.clone())
        );
        assert_eq!(
            strong_imp2(p.clone(), q.clone()),
            Formula::imp(p.clone(), Formula::imp(p.clone(), q.clone()))
        );
        assert_eq!(strong_imp2(p.clone(), p.clone()), parse_any("p => p => p").unwrap());
        assert_eq!(
            context_imp2(std::slice::from_ref(&p), q.clone()),
            strong_imp2(p.clone(), q.clone())
        );
        assert_eq!(context_imp2(&[], q.clone()), q.clone());
        assert_eq!(
            context_imp2(&[p.clone(), q.clone()], r.clone()),
            parse_any("p => p => q => q => r").unwrap()
        );
        assert_eq!(
            context_imp2(&[p.clone(), q.clone()], r.clone()),
            strong_imp2(p, strong_imp2(q, r))
        );
    }

    #[test]
    fn biconditionals() {
        let (p, q) = (v("p"), v("q"));
        assert_eq!(
            biconditional(p.clone(), q.clone()),
            parse_any("(p => q) & (q => p)").unwrap()
        );
        assert_eq!(
            biconditional(p.clone(), p.clone()),
            parse_any("(p => p) & (p => p)").unwrap()
        );
        let a5 = biconditional(
            Formula::imp(v("phi"), v("psi")),
            Formula::imp(Formula::not(v("psi")), Formula::not(v("phi"))),
        );
        let s = Substitution::new().with("phi", p).with("psi", q);
        assert_eq!(
            a5.substitute(&s),
            parse_any("((p => q) => ~q => ~p) & ((~q => ~p) => p => q)").unwrap()
        );
    }

    #[test]
    fn fusion_and_powers() {
        let (p, q) = (v("p"), v("q"));
        assert_eq!(
            defined_fusion(p.clone(), q.clone(), Lang::S).unwrap(),
            parse_any("~(p => ~q)").unwrap()
        );
        assert_eq!(power(&p, 2, Lang::SPrime).unwrap(), parse_any("p * p").unwrap());
        assert_eq!(power(&p, 3, Lang::SPrime).unwrap(), parse_any("p * (p * p)").unwrap());
        assert_eq!(power(&p, 1, Lang::SPrime).unwrap(), p);
        assert_eq!(power(&p, 2, Lang::S).unwrap(), parse_any("~(p => ~p)").unwrap());
        assert!(matches!(power(&p, 0, Lang::SPrime), Err(FormulaError::Exponent(0))));
        assert!(defined_fusion(p.clone(), q, Lang::N4).is_err());
        // power stays within its language
        Lang::S.check(&power(&p, 4, Lang::S).unwrap()).unwrap();
    }

    #[test]
    fn substitution_examples() {
        let s = Substitution::new().with("p", parse_any("q & r").unwrap());
        assert_eq!(
            parse_any("p => p").unwrap().substitute(&s),
            parse_any("(q & r) => (q & r)").unwrap()
        );
        let s = Substitution::new().with("p", parse_any("~0").unwrap());
        assert_eq!(
            parse_any("0 => p").unwrap().substitute(&s),
            parse_any("0 => ~0").unwrap()
        );
    }

    #[test]
    fn substitution_is_simultaneous() {
        let s = Substitution::new().with("p", v("q")).with("q", v("p"));
        assert_eq!(
            parse_any("p => q").unwrap().substitute(&s),
            parse_any("q => p").unwrap()
        );
    }
}
