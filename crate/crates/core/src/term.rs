//! Terms, equations and quasiequations over finite algebras.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::formula::{parse_any, Connective, Formula, FormulaError};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum BinOp {
    Meet,
    Join,
    Imp,
    WeakImp,
    Fuse,
}

impl BinOp {
    fn symbol(self) -> &'static str {
        match self {
            BinOp::Meet => "&",
            BinOp::Join => "|",
            BinOp::Imp => "=>",
            BinOp::WeakImp => "->",
            BinOp::Fuse => "*",
        }
    }

    fn precedence(self) -> u8 {
        match self {
            BinOp::Imp | BinOp::WeakImp => 1,
            BinOp::Join => 2,
            BinOp::Meet => 3,
            BinOp::Fuse => 4,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Term {
    Var(usize),
    Bot,
    Top,
    Neg(Box<Term>),
    Bin(BinOp, Box<Term>, Box<Term>),
}

impl Term {
    pub fn bin(op: BinOp, l: Term, r: Term) -> Term {
        Term::Bin(op, Box::new(l), Box::new(r))
    }

    #[allow(clippy::should_implement_trait)]
    pub fn neg(t: Term) -> Term {
        Term::Neg(Box::new(t))
    }

    pub fn imp(l: Term, r: Term) -> Term {
        Term::bin(BinOp::Imp, l, r)
    }

    pub fn meet(l: Term, r: Term) -> Term {
        Term::bin(BinOp::Meet, l, r)
    }

    pub fn join(l: Term, r: Term) -> Term {
        Term::bin(BinOp::Join, l, r)
    }

    pub fn fuse(l: Term, r: Term) -> Term {
        Term::bin(BinOp::Fuse, l, r)
    }

    /// One more than the largest variable index, 0 for closed terms.
    pub fn arity(&self) -> usize {
        match self {
            Term::Var(i) => i + 1,
            Term::Bot | Term::Top => 0,
            Term::Neg(t) => t.arity(),
            Term::Bin(_, l, r) => l.arity().max(r.arity()),
        }
    }

    pub fn eval<A: Interpretation + ?Sized>(&self, a: &A, v: &[usize]) -> Result<usize, EvalError> {
        Ok(match self {
            Term::Var(i) => *v.get(*i).ok_or(EvalError::Unbound(*i))?,
            Term::Bot => a.bot().ok_or(EvalError::Unsupported("0"))?,
            Term::Top => a.top().ok_or(EvalError::Unsupported("1"))?,
            Term::Neg(t) => a.neg(t.eval(a, v)?).ok_or(EvalError::Unsupported("~"))?,
            Term::Bin(op, l, r) => {
                let x = l.eval(a, v)?;
                let y = r.eval(a, v)?;
                a.op(*op, x, y).ok_or(EvalError::Unsupported(op.symbol()))?
            }
        })
    }

    /// Translates a formula, numbering variables in `pool` as they appear.
    pub fn from_formula(f: &Formula, pool: &mut Vec<String>) -> Term {
        match f {
            Formula::Var(name) => {
                let i = match pool.iter().position(|p| p == name) {
                    Some(i) => i,
                    None => {
                        pool.push(name.clone());
                        pool.len() - 1
                    }
                };
                Term::Var(i)
            }
            Formula::Bot => Term::Bot,
            Formula::Top => Term::Top,
            Formula::Not(g) => Term::neg(Term::from_formula(g, pool)),
            Formula::Bin(c, l, r) => {
                let op = match c {
                    Connective::And => BinOp::Meet,
                    Connective::Or => BinOp::Join,
                    Connective::Imp => BinOp::Imp,
                    Connective::WeakImp => BinOp::WeakImp,
                    Connective::Fuse => BinOp::Fuse,
                };
                Term::bin(op, Term::from_formula(l, pool), Term::from_formula(r, pool))
            }
        }
    }

    pub fn display<'a>(&'a self, names: &'a [String]) -> TermDisplay<'a> {
        TermDisplay { term: self, names }
    }

    fn write(&self, f: &mut fmt::Formatter<'_>, names: &[String], ctx: u8) -> fmt::Result {
        match self {
            Term::Var(i) => match names.get(*i) {
                Some(n) => f.write_str(n),
                None => write!(f, "x{}", i + 1),
            },
            Term::Bot => f.write_str("0"),
            Term::Top => f.write_str("1"),
            Term::Neg(t) => {
                f.write_str("~")?;
                t.write(f, names, 5)
            }
            Term::Bin(op, l, r) => {
                let p = op.precedence();
                let paren = p < ctx;
                if paren {
                    f.write_str("(")?;
                }
                // implications nest to the right, the rest to the left
                let (lc, rc) = if p == 1 { (2, 1) } else { (p, p + 1) };
                l.write(f, names, lc)?;
                write!(f, " {} ", op.symbol())?;
                r.write(f, names, rc)?;
                if paren {
                    f.write_str(")")?;
                }
                Ok(())
            }
        }
    }
}

pub struct TermDisplay<'a> {
    term: &'a Term,
    names: &'a [String],
}

impl fmt::Display for TermDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.term.write(f, self.names, 0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EvalError {
    #[error("variable x{} has no value", .0 + 1)]
    Unbound(usize),
    #[error("operation `{0}` is not available in this algebra")]
    Unsupported(&'static str),
}

/// Anything terms can be evaluated in. Missing operations return `None`.
pub trait Interpretation {
    fn size(&self) -> usize;
    fn element_names(&self) -> &[String];
    fn op(&self, op: BinOp, a: usize, b: usize) -> Option<usize>;
    fn neg(&self, a: usize) -> Option<usize>;
    fn bot(&self) -> Option<usize>;
    fn top(&self) -> Option<usize>;
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Equation {
    pub lhs: Term,
    pub rhs: Term,
}

impl Equation {
    pub fn new(lhs: Term, rhs: Term) -> Self {
        Equation { lhs, rhs }
    }

    pub fn arity(&self) -> usize {
        self.lhs.arity().max(self.rhs.arity())
    }

    pub fn satisfied<A: Interpretation + ?Sized>(&self, a: &A, v: &[usize]) -> Result<bool, EvalError> {
        Ok(self.lhs.eval(a, v)? == self.rhs.eval(a, v)?)
    }
}

/// `premises ⟹ conclusion`; an equation is a quasiequation without premises.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Quasiequation {
    pub vars: Vec<String>,
    pub premises: Vec<Equation>,
    pub conclusion: Equation,
}

impl Quasiequation {
    pub fn equation(vars: Vec<String>, e: Equation) -> Self {
        Quasiequation {
            vars,
            premises: vec![],
            conclusion: e,
        }
    }

    pub fn arity(&self) -> usize {
        self.premises
            .iter()
            .map(Equation::arity)
            .chain([self.conclusion.arity(), self.vars.len()])
            .max()
            .unwrap_or(0)
    }

    pub fn is_equation(&self) -> bool {
        self.premises.is_empty()
    }

    pub fn satisfied<A: Interpretation + ?Sized>(&self, a: &A, v: &[usize]) -> Result<bool, EvalError> {
        for p in &self.premises {
            if !p.satisfied(a, v)? {
                return Ok(true);
            }
        }
        self.conclusion.satisfied(a, v)
    }

    fn var_names(&self) -> Vec<String> {
        (0..self.arity())
            .map(|i| self.vars.get(i).cloned().unwrap_or_else(|| format!("x{}", i + 1)))
            .collect()
    }
}

impl fmt::Display for Quasiequation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = self.var_names();
        let eq = |e: &Equation| format!("{} = {}", e.lhs.display(&names), e.rhs.display(&names));
        if !self.premises.is_empty() {
            let ps: Vec<String> = self.premises.iter().map(eq).collect();
            write!(f, "{} ==> ", ps.join(", "))?;
        }
        f.write_str(&eq(&self.conclusion))
    }
}

/// A valuation `vars[i] ↦ elements[v[i]]`, used in reports.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Valuation(pub Vec<(String, String)>);

impl Valuation {
    pub fn new(vars: &[String], v: &[usize], names: &[String]) -> Self {
        Valuation(
            v.iter()
                .enumerate()
                .map(|(i, &e)| {
                    let var = vars.get(i).cloned().unwrap_or_else(|| format!("x{}", i + 1));
                    (var, names[e].clone())
                })
                .collect(),
        )
    }

    pub fn get(&self, var: &str) -> Option<&str> {
        self.0.iter().find(|(v, _)| v == var).map(|(_, e)| e.as_str())
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|(v, e)| format!("{v}={e}")).collect();
        f.write_str(&parts.join(", "))
    }
}

/// Calls `f` on every valuation of `k` variables over `n` elements in
/// lexicographic order (first variable slowest) until it returns `false`.
pub fn for_each_valuation(n: usize, k: usize, mut f: impl FnMut(&[usize]) -> bool) {
    if n == 0 {
        return;
    }
    let mut v = vec![0usize; k];
    loop {
        if !f(&v) {
            return;
        }
        let mut i = k;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            v[i] += 1;
            if v[i] < n {
                break;
            }
            v[i] = 0;
        }
    }
}

/// The first valuation (lexicographically) violating `q`, if any.
pub fn counterexample<A: Interpretation + ?Sized>(a: &A, q: &Quasiequation) -> Result<Option<Vec<usize>>, EvalError> {
    let mut found = None;
    let mut err = None;
    for_each_valuation(a.size(), q.arity(), |v| match q.satisfied(a, v) {
        Ok(true) => true,
        Ok(false) => {
            found = Some(v.to_vec());
            false
        }
        Err(e) => {
            err = Some(e);
            false
        }
    });
    match err {
        Some(e) => Err(e),
        None => Ok(found),
    }
}

pub fn holds_quasiequation<A: Interpretation + ?Sized>(a: &A, q: &Quasiequation) -> Result<bool, EvalError> {
    Ok(counterexample(a, q)?.is_none())
}

pub fn holds_equation<A: Interpretation + ?Sized>(a: &A, e: &Equation) -> Result<bool, EvalError> {
    holds_quasiequation(a, &Quasiequation::equation(vec![], e.clone()))
}

/// Evaluates `t` under a valuation given by variable and element names.
pub fn eval_named<A: Interpretation + ?Sized>(
    a: &A,
    t: &Term,
    vars: &[String],
    valuation: &[(String, String)],
) -> Result<usize, crate::Error> {
    let mut v = Vec::with_capacity(vars.len());
    for var in vars {
        let Some((_, e)) = valuation.iter().find(|(x, _)| x == var) else {
            return Err(crate::Error::Input(format!("no value for variable `{var}`")));
        };
        let Some(i) = a.element_names().iter().position(|n| n == e) else {
            return Err(crate::Error::Input(format!("unknown element `{e}`")));
        };
        v.push(i);
    }
    t.eval(a, &v).map_err(|e| crate::Error::Input(e.to_string()))
}

// ---------------------------------------------------------------------------
// Parsing

/// In term syntax `1` is the top constant; the formula grammar spells it `1c`.
fn constants_to_formula_syntax(text: &str) -> String {
    let b = text.as_bytes();
    let mut out = String::with_capacity(text.len() + 4);
    for (i, c) in text.char_indices() {
        out.push(c);
        if c == '1' {
            let prev_ident = i > 0 && (b[i - 1].is_ascii_alphanumeric() || b[i - 1] == b'_');
            let next_ident = b.get(i + 1).is_some_and(|x| x.is_ascii_alphanumeric() || *x == b'_');
            if !prev_ident && !next_ident {
                out.push('c');
            }
        }
    }
    out
}

pub fn parse_term(text: &str, pool: &mut Vec<String>) -> Result<Term, FormulaError> {
    let f = parse_any(&constants_to_formula_syntax(text))?;
    Ok(Term::from_formula(&f, pool))
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StatementError {
    #[error("`{0}`: expected `t = t` or `t <= t`")]
    NotAnEquation(String),
    #[error("`{text}`: {source}")]
    Term {
        text: String,
        #[source]
        source: FormulaError,
    },
}

/// Finds a top-level `=` or `<=` that is not part of `=>`, `<=>` or `<->`.
fn relation(text: &str) -> Option<(usize, usize, bool)> {
    let b = text.as_bytes();
    let mut i = 0;
    while i < b.len() {
        match b[i] {
            b'<' if b.get(i + 1) == Some(&b'=') && b.get(i + 2) != Some(&b'>') => {
                return Some((i, 2, true));
            }
            b'<' => i += 3,
            b'=' if b.get(i + 1) == Some(&b'>') => i += 2,
            b'=' => return Some((i, 1, false)),
            _ => i += 1,
        }
    }
    None
}

fn parse_equation(text: &str, pool: &mut Vec<String>) -> Result<Equation, StatementError> {
    let text = text.trim();
    let (at, len, leq) = relation(text).ok_or_else(|| StatementError::NotAnEquation(text.into()))?;
    let side = |s: &str, pool: &mut Vec<String>| {
        parse_term(s, pool).map_err(|source| StatementError::Term {
            text: s.trim().into(),
            source,
        })
    };
    let l = side(&text[..at], pool)?;
    let r = side(&text[at + len..], pool)?;
    Ok(if leq {
        // a ≤ b as a ∧ b = a
        Equation::new(Term::meet(l.clone(), r), l)
    } else {
        Equation::new(l, r)
    })
}

/// Parses `t = t`, `t <= t`, or `e, e, ... ==> e`.
pub fn parse_statement(text: &str) -> Result<Quasiequation, StatementError> {
    let mut pool = Vec::new();
    let (prem, concl) = match text.split_once("==>") {
        Some((p, c)) => (Some(p), c),
        None => (None, text),
    };
    let mut premises = Vec::new();
    if let Some(p) = prem {
        for e in p.split(',').filter(|s| !s.trim().is_empty()) {
            premises.push(parse_equation(e, &mut pool)?);
        }
    }
    let conclusion = parse_equation(concl, &mut pool)?;
    Ok(Quasiequation {
        vars: pool,
        premises,
        conclusion,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    struct Bool2;
    impl Interpretation for Bool2 {
        fn size(&self) -> usize {
            2
        }
        fn element_names(&self) -> &[String] {
            &[]
        }
        fn op(&self, op: BinOp, a: usize, b: usize) -> Option<usize> {
            Some(match op {
                BinOp::Meet | BinOp::Fuse => a & b,
                BinOp::Join => a | b,
                BinOp::Imp => (1 - a) | b,
                BinOp::WeakImp => return None,
            })
        }
        fn neg(&self, a: usize) -> Option<usize> {
            Some(1 - a)
        }
        fn bot(&self) -> Option<usize> {
            Some(0)
        }
        fn top(&self) -> Option<usize> {
            Some(1)
        }
    }

    #[test]
    fn parse_and_print() {
        let q = parse_statement("x => x = y => y").unwrap();
        assert_eq!(q.vars, vec!["x", "y"]);
        assert!(q.is_equation());
        assert_eq!(q.to_string(), "x => x = y => y");
        let q = parse_statement("x*x*x => y = 1 ==> x * x => y = 1").unwrap();
        assert_eq!(q.premises.len(), 1);
        assert_eq!(q.conclusion.rhs, Term::Top);
        let q = parse_statement("x * x <= x * (x * x)").unwrap();
        assert_eq!(q.to_string(), "x * x & x * (x * x) = x * x");
        assert!(parse_statement("x => y").is_err());
        assert!(parse_statement("~0 = 1").is_ok());
    }

    #[test]
    fn printing_keeps_structure() {
        for s in [
            "(x => y) => z = 1",
            "x => y => z = 0",
            "~(x & y) = ~x | ~y",
            "(x | y) * z = x * z | y * z",
        ] {
            let q = parse_statement(s).unwrap();
            assert_eq!(parse_statement(&q.to_string()).unwrap(), q, "{s}");
        }
    }

    #[test]
    fn valuation_order() {
        let mut seen = Vec::new();
        for_each_valuation(2, 2, |v| {
            seen.push(v.to_vec());
            true
        });
        assert_eq!(seen, vec![vec![0, 0], vec![0, 1], vec![1, 0], vec![1, 1]]);
        let mut count = 0;
        for_each_valuation(3, 0, |_| {
            count += 1;
            true
        });
        assert_eq!(count, 1);
    }

    #[test]
    fn evaluation_and_holds() {
        let q = parse_statement("x => x = y => y").unwrap();
        assert!(holds_quasiequation(&Bool2, &q).unwrap());
        let q = parse_statement("x = 1").unwrap();
        assert_eq!(counterexample(&Bool2, &q).unwrap(), Some(vec![0]));
        let q = parse_statement("x = 1 ==> x | y = 1").unwrap();
        assert!(holds_quasiequation(&Bool2, &q).unwrap());
        let q = parse_statement("x -> y = 1").unwrap();
        assert!(matches!(
            holds_quasiequation(&Bool2, &q),
            Err(EvalError::Unsupported("->"))
        ));
    }
}
