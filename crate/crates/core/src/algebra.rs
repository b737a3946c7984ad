//! Finite algebras in the residuated signature `∧ ∨ * ⇒ ¬ 0 1`, their
//! text format, and class checks.

use std::collections::BTreeMap;
use std::fmt;
use std::fmt::Write as _;

use serde::Serialize;

use crate::term::{for_each_valuation, BinOp, Interpretation, Valuation};

/// An `n × n` operation table, row = left argument.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Table {
    n: usize,
    data: Vec<u8>,
}

impl Table {
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> usize) -> Table {
        let mut data = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                data.push(f(a, b) as u8);
            }
        }
        Table { n, data }
    }

    pub fn from_rows(rows: &[Vec<usize>]) -> Table {
        Table::from_fn(rows.len(), |a, b| rows[a][b])
    }

    #[inline]
    pub fn get(&self, a: usize, b: usize) -> usize {
        self.data[a * self.n + b] as usize
    }

    pub fn set(&mut self, a: usize, b: usize, v: usize) {
        self.data[a * self.n + b] = v as u8;
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn raw(&self) -> &[u8] {
        &self.data
    }

    /// The table after renaming every element `x` to `perm[x]`.
    pub fn permuted(&self, perm: &[usize]) -> Table {
        let mut out = Table {
            n: self.n,
            data: vec![0; self.n * self.n],
        };
        for a in 0..self.n {
            for b in 0..self.n {
                out.set(perm[a], perm[b], perm[self.get(a, b)]);
            }
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FiniteAlgebra {
    pub names: Vec<String>,
    pub meet: Table,
    pub join: Table,
    pub imp: Table,
    pub fuse: Table,
    pub neg: Vec<u8>,
    pub bot: usize,
    pub top: usize,
    /// Whether `fuse` / `neg` were supplied rather than derived; only
    /// affects how the algebra is written out.
    pub fuse_given: bool,
    pub neg_given: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AlgebraError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("{0}")]
    Invalid(String),
}

impl FiniteAlgebra {
    /// Builds an algebra; `neg` defaults to `a ⇒ 0` and `fuse` to
    /// `¬(a ⇒ ¬b)`.
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        names: Vec<String>,
        meet: Table,
        join: Table,
        imp: Table,
        fuse: Option<Table>,
        neg: Option<Vec<usize>>,
        bot: usize,
        top: usize,
    ) -> Result<FiniteAlgebra, AlgebraError> {
        let n = names.len();
        if n == 0 || n > 255 {
            return Err(AlgebraError::Invalid(format!("size {n} out of range 1..=255")));
        }
        for (i, a) in names.iter().enumerate() {
            if names[..i].contains(a) {
                return Err(AlgebraError::Invalid(format!("duplicate element `{a}`")));
            }
        }
        if bot >= n || top >= n {
            return Err(AlgebraError::Invalid("constant out of range".into()));
        }
        for (name, t) in [("meet", &meet), ("join", &join), ("imp", &imp)]
            .into_iter()
            .chain(fuse.as_ref().map(|f| ("fuse", f)))
        {
            if t.n != n || t.data.iter().any(|&x| x as usize >= n) {
                return Err(AlgebraError::Invalid(format!(
                    "{name} table is not {n}x{n} over the carrier"
                )));
            }
        }
        let neg_given = neg.is_some();
        let neg: Vec<u8> = match neg {
            Some(v) => {
                if v.len() != n || v.iter().any(|&x| x >= n) {
                    return Err(AlgebraError::Invalid("neg table out of range".into()));
                }
                v.into_iter().map(|x| x as u8).collect()
            }
            None => (0..n).map(|a| imp.get(a, bot) as u8).collect(),
        };
        let fuse_given = fuse.is_some();
        let fuse = fuse.unwrap_or_else(|| Table::from_fn(n, |a, b| neg[imp.get(a, neg[b] as usize)] as usize));
        Ok(FiniteAlgebra {
            names,
            meet,
            join,
            imp,
            fuse,
            neg,
            bot,
            top,
            fuse_given,
            neg_given,
        })
    }

    pub fn size(&self) -> usize {
        self.names.len()
    }

    #[inline]
    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.meet.get(a, b)
    }

    #[inline]
    pub fn join(&self, a: usize, b: usize) -> usize {
        self.join.get(a, b)
    }

    #[inline]
    pub fn imp(&self, a: usize, b: usize) -> usize {
        self.imp.get(a, b)
    }

    #[inline]
    pub fn fuse(&self, a: usize, b: usize) -> usize {
        self.fuse.get(a, b)
    }

    #[inline]
    pub fn neg(&self, a: usize) -> usize {
        self.neg[a] as usize
    }

    /// `a ⇒ 0`, the residuated negation (may differ from a given `neg`).
    #[inline]
    pub fn rneg(&self, a: usize) -> usize {
        self.imp(a, self.bot)
    }

    /// Lattice order read off the meet table.
    #[inline]
    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.meet(a, b) == a
    }

    pub fn element(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Same tables with the residuated negation and defined fusion.
    pub fn with_tables(&self, imp: Table, fuse: Option<Table>, neg: Option<Vec<usize>>) -> FiniteAlgebra {
        FiniteAlgebra::new(
            self.names.clone(),
            self.meet.clone(),
            self.join.clone(),
            imp,
            fuse,
            neg,
            self.bot,
            self.top,
        )
        .expect("tables over the same carrier")
    }

    /// Tables in the S signature agree: meet, join, imp, neg, bot, top.
    pub fn same_s_tables(&self, other: &FiniteAlgebra) -> bool {
        self.meet == other.meet
            && self.join == other.join
            && self.imp == other.imp
            && self.neg == other.neg
            && self.bot == other.bot
            && self.top == other.top
    }

    /// Tables in the S′ signature agree: meet, join, fuse, imp, bot, top.
    pub fn same_s_prime_tables(&self, other: &FiniteAlgebra) -> bool {
        self.meet == other.meet
            && self.join == other.join
            && self.imp == other.imp
            && self.fuse == other.fuse
            && self.bot == other.bot
            && self.top == other.top
    }

    /// The algebra with elements renamed by `perm` (old index ↦ new index).
    pub fn permuted(&self, perm: &[usize]) -> FiniteAlgebra {
        let n = self.size();
        let mut names = vec![String::new(); n];
        let mut neg = vec![0u8; n];
        for a in 0..n {
            names[perm[a]] = self.names[a].clone();
            neg[perm[a]] = perm[self.neg(a)] as u8;
        }
        FiniteAlgebra {
            names,
            meet: self.meet.permuted(perm),
            join: self.join.permuted(perm),
            imp: self.imp.permuted(perm),
            fuse: self.fuse.permuted(perm),
            neg,
            bot: perm[self.bot],
            top: perm[self.top],
            fuse_given: self.fuse_given,
            neg_given: self.neg_given,
        }
    }

    pub fn parse(text: &str) -> Result<FiniteAlgebra, AlgebraError> {
        AlgebraFile::parse(text)?.into_residuated()
    }

    pub fn to_file_string(&self) -> String {
        let mut s = String::new();
        let n = self.size();
        let _ = writeln!(s, "size {n}");
        let _ = writeln!(s, "elements {}", self.names.join(" "));
        let _ = writeln!(s, "bot {}", self.names[self.bot]);
        let _ = writeln!(s, "top {}", self.names[self.top]);
        let mut tables = vec![("meet", &self.meet), ("join", &self.join), ("imp", &self.imp)];
        if self.fuse_given {
            tables.push(("fuse", &self.fuse));
        }
        for (name, t) in tables {
            write_table(&mut s, name, t, &self.names);
        }
        if self.neg_given {
            let row: Vec<&str> = (0..n).map(|a| self.names[self.neg(a)].as_str()).collect();
            let _ = writeln!(s, "neg\n  {}", row.join(" "));
        }
        s
    }
}

/// A table in the file layout, headed by nothing.
pub fn write_table_string(t: &Table, names: &[String]) -> String {
    let mut s = String::new();
    write_table(&mut s, "", t, names);
    s.trim_start_matches('\n').to_string()
}

pub(crate) fn write_table(s: &mut String, name: &str, t: &Table, names: &[String]) {
    let _ = writeln!(s, "{name}");
    let w = names.iter().map(String::len).max().unwrap_or(1);
    for a in 0..t.size() {
        let row: Vec<String> = (0..t.size()).map(|b| format!("{:w$}", names[t.get(a, b)])).collect();
        let _ = writeln!(s, "  {}", row.join(" ").trim_end());
    }
}

impl fmt::Display for FiniteAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_file_string())
    }
}

impl Interpretation for FiniteAlgebra {
    fn size(&self) -> usize {
        self.names.len()
    }
    fn element_names(&self) -> &[String] {
        &self.names
    }
    fn op(&self, op: BinOp, a: usize, b: usize) -> Option<usize> {
        match op {
            BinOp::Meet => Some(self.meet(a, b)),
            BinOp::Join => Some(self.join(a, b)),
            BinOp::Imp => Some(self.imp(a, b)),
            BinOp::Fuse => Some(self.fuse(a, b)),
            BinOp::WeakImp => None,
        }
    }
    fn neg(&self, a: usize) -> Option<usize> {
        Some(self.neg[a] as usize)
    }
    fn bot(&self) -> Option<usize> {
        Some(self.bot)
    }
    fn top(&self) -> Option<usize> {
        Some(self.top)
    }
}

// ---------------------------------------------------------------------------
// File format

/// A parsed algebra file before it is interpreted as a particular kind of
/// algebra.
#[derive(Clone, Debug, Default)]
pub struct AlgebraFile {
    pub names: Vec<String>,
    pub bot: Option<usize>,
    pub top: Option<usize>,
    pub tables: BTreeMap<String, Table>,
    pub neg: Option<Vec<usize>>,
}

const BINARY_BLOCKS: [&str; 5] = ["meet", "join", "imp", "fuse", "wimp"];

impl AlgebraFile {
    pub fn parse(text: &str) -> Result<AlgebraFile, AlgebraError> {
        let mut toks = Vec::new();
        for (i, line) in text.lines().enumerate() {
            let content = line.split('#').next().unwrap_or("");
            toks.extend(content.split_whitespace().map(|t| (i + 1, t)));
        }
        let mut out = AlgebraFile::default();
        let mut size = None;
        let mut it = toks.into_iter().peekable();
        let err = |line: usize, msg: String| AlgebraError::Syntax { line, msg };
        while let Some((line, kw)) = it.next() {
            let elem = |it: &mut std::iter::Peekable<std::vec::IntoIter<(usize, &str)>>,
                        names: &[String]|
             -> Result<usize, AlgebraError> {
                let (l, t) = it.next().ok_or_else(|| err(line, format!("`{kw}` needs an element")))?;
                names
                    .iter()
                    .position(|n| n == t)
                    .ok_or_else(|| err(l, format!("unknown element `{t}`")))
            };
            match kw {
                "size" => {
                    let (l, t) = it.next().ok_or_else(|| err(line, "`size` needs a number".into()))?;
                    size = Some(t.parse::<usize>().map_err(|_| err(l, format!("bad size `{t}`")))?);
                }
                "elements" => {
                    let n = size.ok_or_else(|| err(line, "`elements` before `size`".into()))?;
                    for _ in 0..n {
                        let (_, t) = it.next().ok_or_else(|| err(line, format!("expected {n} elements")))?;
                        out.names.push(t.to_string());
                    }
                }
                "bot" => out.bot = Some(elem(&mut it, &out.names)?),
                "top" => out.top = Some(elem(&mut it, &out.names)?),
                "neg" => {
                    let mut v = Vec::new();
                    for _ in 0..out.names.len() {
                        v.push(elem(&mut it, &out.names)?);
                    }
                    out.neg = Some(v);
                }
                b if BINARY_BLOCKS.contains(&b) => {
                    let n = out.names.len();
                    if n == 0 {
                        return Err(err(line, format!("`{b}` before `elements`")));
                    }
                    let mut cells = Vec::with_capacity(n * n);
                    for _ in 0..n * n {
                        cells.push(elem(&mut it, &out.names)?);
                    }
                    if out
                        .tables
                        .insert(b.to_string(), Table::from_fn(n, |x, y| cells[x * n + y]))
                        .is_some()
                    {
                        return Err(err(line, format!("duplicate `{b}` block")));
                    }
                }
                other => return Err(err(line, format!("unexpected `{other}`"))),
            }
        }
        if out.names.is_empty() {
            return Err(AlgebraError::Invalid("no `elements` line".into()));
        }
        Ok(out)
    }

    pub fn is_n4(&self) -> bool {
        self.tables.contains_key("wimp")
    }

    pub fn table(&self, name: &str) -> Result<Table, AlgebraError> {
        self.tables
            .get(name)
            .cloned()
            .ok_or_else(|| AlgebraError::Invalid(format!("missing `{name}` table")))
    }

    pub fn into_residuated(self) -> Result<FiniteAlgebra, AlgebraError> {
        let bot = self.bot.ok_or_else(|| AlgebraError::Invalid("missing `bot`".into()))?;
        let top = self.top.ok_or_else(|| AlgebraError::Invalid("missing `top`".into()))?;
        FiniteAlgebra::new(
            self.names.clone(),
            self.table("meet")?,
            self.table("join")?,
            self.table("imp")?,
            self.tables.get("fuse").cloned(),
            self.neg.clone(),
            bot,
            top,
        )
    }
}

// ---------------------------------------------------------------------------
// Reports

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LawOutcome {
    pub law: String,
    pub holds: bool,
    pub violations: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Valuation>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl LawOutcome {
    pub fn ok(law: impl Into<String>) -> Self {
        LawOutcome {
            law: law.into(),
            holds: true,
            violations: 0,
            witness: None,
            note: None,
        }
    }

    pub fn failed(law: impl Into<String>, note: impl Into<String>) -> Self {
        LawOutcome {
            law: law.into(),
            holds: false,
            violations: 1,
            witness: None,
            note: Some(note.into()),
        }
    }
}

/// Outcome of checking an algebra against a list of laws.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassReport {
    pub class: String,
    pub laws: Vec<LawOutcome>,
}

impl ClassReport {
    pub fn new(class: impl Into<String>) -> Self {
        ClassReport {
            class: class.into(),
            laws: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.laws.iter().all(|l| l.holds)
    }

    pub fn failures(&self) -> impl Iterator<Item = &LawOutcome> {
        self.laws.iter().filter(|l| !l.holds)
    }

    pub fn law(&self, name: &str) -> Option<&LawOutcome> {
        self.laws.iter().find(|l| l.law == name)
    }

    pub fn extend(&mut self, other: ClassReport) {
        self.laws.extend(other.laws);
    }

    pub fn push(&mut self, l: LawOutcome) {
        self.laws.push(l);
    }
}

impl fmt::Display for ClassReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.laws {
            if l.holds {
                write!(f, "{}: ok", l.law)?;
            } else {
                write!(f, "{}: FAILS ({} violation(s))", l.law, l.violations)?;
                if let Some(w) = &l.witness {
                    write!(f, ", first at {w}")?;
                }
            }
            if let Some(n) = &l.note {
                write!(f, " [{n}]")?;
            }
            writeln!(f)?;
        }
        write!(f, "{}: {}", self.class, if self.passed() { "PASS" } else { "FAIL" })
    }
}

/// Checks `holds` on every assignment of `vars` to elements, counting
/// violations and keeping the lexicographically first one.
pub fn check_law(name: &str, names: &[String], vars: &[&str], mut holds: impl FnMut(&[usize]) -> bool) -> LawOutcome {
    let mut violations = 0u64;
    let mut first: Option<Vec<usize>> = None;
    for_each_valuation(names.len(), vars.len(), |v| {
        if !holds(v) {
            violations += 1;
            if first.is_none() {
                first = Some(v.to_vec());
            }
        }
        true
    });
    let vars: Vec<String> = vars.iter().map(|s| s.to_string()).collect();
    LawOutcome {
        law: name.to_string(),
        holds: violations == 0,
        violations,
        witness: first.map(|v| Valuation::new(&vars, &v, names)),
        note: None,
    }
}

// ---------------------------------------------------------------------------
// Class checks

pub fn lattice_laws(a: &FiniteAlgebra) -> Vec<LawOutcome> {
    let nm = &a.names;
    vec![
        check_law("meet-commutative", nm, &["a", "b"], |v| {
            a.meet(v[0], v[1]) == a.meet(v[1], v[0])
        }),
        check_law("meet-associative", nm, &["a", "b", "c"], |v| {
            a.meet(a.meet(v[0], v[1]), v[2]) == a.meet(v[0], a.meet(v[1], v[2]))
        }),
        check_law("meet-idempotent", nm, &["a"], |v| a.meet(v[0], v[0]) == v[0]),
        check_law("join-commutative", nm, &["a", "b"], |v| {
            a.join(v[0], v[1]) == a.join(v[1], v[0])
        }),
        check_law("join-associative", nm, &["a", "b", "c"], |v| {
            a.join(a.join(v[0], v[1]), v[2]) == a.join(v[0], a.join(v[1], v[2]))
        }),
        check_law("join-idempotent", nm, &["a"], |v| a.join(v[0], v[0]) == v[0]),
        check_law("absorption", nm, &["a", "b"], |v| {
            a.meet(v[0], a.join(v[0], v[1])) == v[0] && a.join(v[0], a.meet(v[0], v[1])) == v[0]
        }),
        check_law("bot-least", nm, &["a"], |v| a.leq(a.bot, v[0])),
        check_law("top-greatest", nm, &["a"], |v| a.leq(v[0], a.top)),
    ]
}

fn monoid_laws(a: &FiniteAlgebra) -> Vec<LawOutcome> {
    let nm = &a.names;
    vec![
        check_law("fuse-commutative", nm, &["a", "b"], |v| {
            a.fuse(v[0], v[1]) == a.fuse(v[1], v[0])
        }),
        check_law("fuse-associative", nm, &["a", "b", "c"], |v| {
            a.fuse(a.fuse(v[0], v[1]), v[2]) == a.fuse(v[0], a.fuse(v[1], v[2]))
        }),
        check_law("fuse-unit", nm, &["a"], |v| a.fuse(v[0], a.top) == v[0]),
    ]
}

fn residuation(a: &FiniteAlgebra) -> LawOutcome {
    check_law("residuation", &a.names, &["a", "b", "c"], |v| {
        a.leq(a.fuse(v[0], v[1]), v[2]) == a.leq(v[1], a.imp(v[0], v[2]))
    })
}

/// Commutative integral bounded residuated lattice.
pub fn check_cibrl(a: &FiniteAlgebra) -> ClassReport {
    let mut r = ClassReport::new("cibrl");
    r.laws.extend(lattice_laws(a));
    r.laws.extend(monoid_laws(a));
    r.push(residuation(a));
    r
}

/// `¬¬a = a` with `¬a := a ⇒ 0`.
pub fn involution(a: &FiniteAlgebra) -> LawOutcome {
    check_law("involution", &a.names, &["a"], |v| a.rneg(a.rneg(v[0])) == v[0])
}

/// `a² ≤ a³`.
pub fn three_potency(a: &FiniteAlgebra) -> LawOutcome {
    check_law("3-potency", &a.names, &["a"], |v| {
        let x = v[0];
        let sq = a.fuse(x, x);
        a.leq(sq, a.fuse(x, sq))
    })
}

pub fn check_cibrl_3potent(a: &FiniteAlgebra) -> ClassReport {
    let mut r = check_cibrl(a);
    r.class = "cibrl-3potent".into();
    r.push(three_potency(a));
    r
}

/// Involutive 3-potent CIBRL.
pub fn check_s_prime(a: &FiniteAlgebra) -> ClassReport {
    let mut r = check_cibrl(a);
    r.class = "s-prime".into();
    r.push(involution(a));
    r.push(three_potency(a));
    r
}

/// Whether `a * b = ¬(a ⇒ ¬b)` with `¬x := x ⇒ 0`.
pub fn fusion_definability_check(a: &FiniteAlgebra) -> bool {
    let n = a.size();
    (0..n).all(|x| (0..n).all(|y| a.fuse(x, y) == a.rneg(a.imp(x, a.rneg(y)))))
}

/// From the S signature: `x * y := ¬(x ⇒ ¬y)` using the given `¬`.
pub fn to_s_prime(a: &FiniteAlgebra) -> FiniteAlgebra {
    let n = a.size();
    let fuse = Table::from_fn(n, |x, y| a.neg(a.imp(x, a.neg(y))));
    a.with_tables(a.imp.clone(), Some(fuse), None)
}

/// From the S′ signature: `¬x := x ⇒ 0`.
pub fn to_s_algebra(a: &FiniteAlgebra) -> FiniteAlgebra {
    let neg = (0..a.size()).map(|x| a.rneg(x)).collect();
    a.with_tables(a.imp.clone(), None, Some(neg))
}

/// Whether the lattice reduct is distributive.
pub fn check_distributivity(a: &FiniteAlgebra) -> bool {
    lattice_distributive(&a.meet, &a.join)
}

pub fn lattice_distributive(meet: &Table, join: &Table) -> bool {
    let n = meet.size();
    (0..n).all(|x| {
        (0..n).all(|y| (0..n).all(|z| meet.get(x, join.get(y, z)) == join.get(meet.get(x, y), meet.get(x, z))))
    })
}

// ---------------------------------------------------------------------------
// Standard algebras

fn names(v: &[&str]) -> Vec<String> {
    v.iter().map(|s| s.to_string()).collect()
}

/// A bounded chain `0 < 1 < … < n-1` with the given fusion; implication is
/// the residual of the fusion.
pub fn chain(element_names: &[&str], fuse: impl Fn(usize, usize) -> usize) -> FiniteAlgebra {
    let n = element_names.len();
    let fuse_t = Table::from_fn(n, &fuse);
    let imp = Table::from_fn(n, |a, c| (0..n).filter(|&b| fuse(a, b) <= c).max().unwrap_or(0));
    FiniteAlgebra::new(
        names(element_names),
        Table::from_fn(n, |a, b| a.min(b)),
        Table::from_fn(n, |a, b| a.max(b)),
        imp,
        Some(fuse_t),
        None,
        0,
        n - 1,
    )
    .expect("chain tables are well formed")
}

pub fn trivial() -> FiniteAlgebra {
    chain(&["0"], |_, _| 0)
}

pub fn boolean2() -> FiniteAlgebra {
    chain(&["0", "1"], |a, b| a.min(b))
}

/// The three-element MV-chain `0 < m < 1` with `a * b = max(0, a + b - 1)`.
pub fn lukasiewicz3() -> FiniteAlgebra {
    chain(&["0", "m", "1"], |a, b| (a + b).saturating_sub(2))
}

/// The three-element Gödel chain `0 < m < 1`, fusion = meet.
pub fn godel3() -> FiniteAlgebra {
    chain(&["0", "m", "1"], |a, b| a.min(b))
}
