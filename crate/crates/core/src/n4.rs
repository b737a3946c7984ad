//! N4- and N3-lattices: De Morgan algebras with a weak implication `→`,
//! the derived strong implication, quotients, and the Hilbert calculus N4.

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::sync::LazyLock;

use crate::algebra::{
    check_law, lattice_distributive, write_table, AlgebraError, AlgebraFile, ClassReport, FiniteAlgebra, LawOutcome,
    Table,
};
use crate::formula::{parse_any, Connective, Formula, Lang};
use crate::hilbert::{HilbertProof, MpCalculus, ProofBuilder};
use crate::schema::{Bindings, CalculusPresentation, RuleSchema};
use crate::search::{lattices, EnumOptions, Lattice};
use crate::term::{BinOp, Interpretation};

/// A finite algebra `(A, ∧, ∨, →, ¬)`. Bounds are read off the lattice.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct N4Algebra {
    pub names: Vec<String>,
    pub meet: Table,
    pub join: Table,
    pub wimp: Table,
    pub neg: Vec<u8>,
    pub bot: usize,
    pub top: usize,
}

impl N4Algebra {
    pub fn new(
        names: Vec<String>,
        meet: Table,
        join: Table,
        wimp: Table,
        neg: Vec<usize>,
    ) -> Result<Self, AlgebraError> {
        let n = names.len();
        if n == 0 || n > 255 {
            return Err(AlgebraError::Invalid(format!("size {n} out of range 1..=255")));
        }
        for (name, t) in [("meet", &meet), ("join", &join), ("wimp", &wimp)] {
            if t.size() != n || t.raw().iter().any(|&x| x as usize >= n) {
                return Err(AlgebraError::Invalid(format!(
                    "{name} table is not {n}x{n} over the carrier"
                )));
            }
        }
        if neg.len() != n || neg.iter().any(|&x| x >= n) {
            return Err(AlgebraError::Invalid("neg table out of range".into()));
        }
        let extreme = |lower: bool| (0..n).find(|&x| (0..n).all(|y| meet.get(x, y) == if lower { x } else { y }));
        let bot = extreme(true).ok_or_else(|| AlgebraError::Invalid("no least element".into()))?;
        let top = extreme(false).ok_or_else(|| AlgebraError::Invalid("no greatest element".into()))?;
        Ok(N4Algebra {
            names,
            meet,
            join,
            wimp,
            neg: neg.into_iter().map(|x| x as u8).collect(),
            bot,
            top,
        })
    }

    pub fn from_file(f: AlgebraFile) -> Result<Self, AlgebraError> {
        let neg = f
            .neg
            .clone()
            .ok_or_else(|| AlgebraError::Invalid("missing `neg` table".into()))?;
        let a = N4Algebra::new(
            f.names.clone(),
            f.table("meet")?,
            f.table("join")?,
            f.table("wimp")?,
            neg,
        )?;
        if f.bot.is_some_and(|b| b != a.bot) || f.top.is_some_and(|t| t != a.top) {
            return Err(AlgebraError::Invalid("`bot`/`top` disagree with the lattice".into()));
        }
        Ok(a)
    }

    pub fn parse(text: &str) -> Result<Self, AlgebraError> {
        N4Algebra::from_file(AlgebraFile::parse(text)?)
    }

    pub fn to_file_string(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "size {}", self.size());
        let _ = writeln!(s, "elements {}", self.names.join(" "));
        let row: Vec<&str> = (0..self.size()).map(|a| self.names[self.neg(a)].as_str()).collect();
        let _ = writeln!(s, "neg\n  {}", row.join(" "));
        for (name, t) in [("meet", &self.meet), ("join", &self.join), ("wimp", &self.wimp)] {
            write_table(&mut s, name, t, &self.names);
        }
        s
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
    pub fn wimp(&self, a: usize, b: usize) -> usize {
        self.wimp.get(a, b)
    }

    #[inline]
    pub fn neg(&self, a: usize) -> usize {
        self.neg[a] as usize
    }

    #[inline]
    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.meet(a, b) == a
    }

    /// `(a → b) ∧ (¬b → ¬a)`
    #[inline]
    pub fn strong(&self, a: usize, b: usize) -> usize {
        self.meet(self.wimp(a, b), self.wimp(self.neg(b), self.neg(a)))
    }

    pub fn element(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// The S-signature reduct: `⇒` is the strong implication.
    pub fn to_s_signature(&self) -> FiniteAlgebra {
        FiniteAlgebra::new(
            self.names.clone(),
            self.meet.clone(),
            self.join.clone(),
            strong_implication_table(self),
            None,
            Some((0..self.size()).map(|a| self.neg(a)).collect()),
            self.bot,
            self.top,
        )
        .expect("same carrier")
    }

    pub fn with_wimp(&self, a: usize, b: usize, v: usize) -> N4Algebra {
        let mut out = self.clone();
        out.wimp.set(a, b, v);
        out
    }

    fn permuted(&self, perm: &[usize]) -> (Vec<u8>, Vec<u8>, Vec<u8>) {
        let mut neg = vec![0u8; self.size()];
        for a in 0..self.size() {
            neg[perm[a]] = perm[self.neg(a)] as u8;
        }
        (
            self.meet.permuted(perm).raw().to_vec(),
            neg,
            self.wimp.permuted(perm).raw().to_vec(),
        )
    }
}

impl std::fmt::Display for N4Algebra {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.to_file_string())
    }
}

impl Interpretation for N4Algebra {
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
            BinOp::WeakImp => Some(self.wimp(a, b)),
            BinOp::Imp => Some(self.strong(a, b)),
            BinOp::Fuse => None,
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

pub fn strong_implication_table(a: &N4Algebra) -> Table {
    Table::from_fn(a.size(), |x, y| a.strong(x, y))
}

/// `a ≼ b` iff `(a → b) → (a → b) = a → b`.
pub fn preorder_leq(a: &N4Algebra, x: usize, y: usize) -> bool {
    let e = a.wimp(x, y);
    a.wimp(e, e) == e
}

fn equiv(a: &N4Algebra, x: usize, y: usize) -> bool {
    preorder_leq(a, x, y) && preorder_leq(a, y, x)
}

pub fn check_de_morgan(a: &N4Algebra) -> ClassReport {
    let nm = &a.names;
    let mut r = ClassReport::new("de-morgan");
    r.push(check_law("meet-commutative", nm, &["a", "b"], |v| {
        a.meet(v[0], v[1]) == a.meet(v[1], v[0])
    }));
    r.push(check_law("meet-associative", nm, &["a", "b", "c"], |v| {
        a.meet(a.meet(v[0], v[1]), v[2]) == a.meet(v[0], a.meet(v[1], v[2]))
    }));
    r.push(check_law("join-commutative", nm, &["a", "b"], |v| {
        a.join(v[0], v[1]) == a.join(v[1], v[0])
    }));
    r.push(check_law("join-associative", nm, &["a", "b", "c"], |v| {
        a.join(a.join(v[0], v[1]), v[2]) == a.join(v[0], a.join(v[1], v[2]))
    }));
    r.push(check_law("absorption", nm, &["a", "b"], |v| {
        a.meet(v[0], a.join(v[0], v[1])) == v[0] && a.join(v[0], a.meet(v[0], v[1])) == v[0]
    }));
    r.push(check_law("distributive", nm, &["a", "b", "c"], |v| {
        a.meet(v[0], a.join(v[1], v[2])) == a.join(a.meet(v[0], v[1]), a.meet(v[0], v[2]))
    }));
    r.push(check_law("double-negation", nm, &["a"], |v| a.neg(a.neg(v[0])) == v[0]));
    r.push(check_law("de-morgan-meet", nm, &["a", "b"], |v| {
        a.neg(a.meet(v[0], v[1])) == a.join(a.neg(v[0]), a.neg(v[1]))
    }));
    r.push(check_law("de-morgan-join", nm, &["a", "b"], |v| {
        a.neg(a.join(v[0], v[1])) == a.meet(a.neg(v[0]), a.neg(v[1]))
    }));
    r.push(check_law("neg-antitone", nm, &["a", "b"], |v| {
        !a.leq(v[0], v[1]) || a.leq(a.neg(v[1]), a.neg(v[0]))
    }));
    r
}

/// `A/≡` with the induced operations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quotient {
    pub classes: Vec<Vec<usize>>,
    pub class_of: Vec<usize>,
    pub meet: Table,
    pub join: Table,
    pub imp: Table,
}

impl Quotient {
    /// The quotient as a residuated lattice with fusion `∧`, when its
    /// lattice is bounded.
    pub fn to_algebra(&self, a: &N4Algebra) -> FiniteAlgebra {
        let names: Vec<String> = self
            .classes
            .iter()
            .map(|c| {
                let els: Vec<&str> = c.iter().map(|&x| a.names[x].as_str()).collect();
                format!("{{{}}}", els.join(","))
            })
            .collect();
        FiniteAlgebra::new(
            names,
            self.meet.clone(),
            self.join.clone(),
            self.imp.clone(),
            Some(self.meet.clone()),
            None,
            self.class_of[a.bot],
            self.class_of[a.top],
        )
        .expect("induced tables")
    }
}

/// Classes of `≡ := ≼ ∩ ≽`, or `None` if it is not a congruence for
/// `∧`, `∨` and `→`.
pub fn quotient(a: &N4Algebra) -> Option<Quotient> {
    let n = a.size();
    let mut class_of = vec![usize::MAX; n];
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for x in 0..n {
        if class_of[x] != usize::MAX {
            continue;
        }
        let c: Vec<usize> = (x..n).filter(|&y| equiv(a, x, y)).collect();
        if c.iter().any(|&y| class_of[y] != usize::MAX) {
            return None;
        }
        for &y in &c {
            class_of[y] = classes.len();
        }
        classes.push(c);
    }
    // ≡ must be an equivalence; transitivity failures show up as overlap
    if (0..n).any(|x| (0..n).any(|y| equiv(a, x, y) != (class_of[x] == class_of[y]))) {
        return None;
    }
    let k = classes.len();
    let induced = |op: &dyn Fn(usize, usize) -> usize| -> Option<Table> {
        let t = Table::from_fn(k, |cx, cy| class_of[op(classes[cx][0], classes[cy][0])]);
        let well_defined = (0..n).all(|x| (0..n).all(|y| class_of[op(x, y)] == t.get(class_of[x], class_of[y])));
        well_defined.then_some(t)
    };
    Some(Quotient {
        meet: induced(&|x, y| a.meet(x, y))?,
        join: induced(&|x, y| a.join(x, y))?,
        imp: induced(&|x, y| a.wimp(x, y))?,
        classes,
        class_of,
    })
}

fn class_law(name: &str, a: &N4Algebra, vars: &[&str], f: impl FnMut(&[usize]) -> bool) -> LawOutcome {
    check_law(name, &a.names, vars, f)
}

/// Items 1 to 5 of the definition of an N4-lattice.
pub fn check_n4_lattice(a: &N4Algebra) -> ClassReport {
    let mut r = check_de_morgan(a);
    r.class = "n4-lattice".into();
    r.push(class_law("preorder-reflexive", a, &["a"], |v| {
        preorder_leq(a, v[0], v[0])
    }));
    r.push(class_law("preorder-transitive", a, &["a", "b", "c"], |v| {
        !(preorder_leq(a, v[0], v[1]) && preorder_leq(a, v[1], v[2])) || preorder_leq(a, v[0], v[2])
    }));
    for (name, op) in [
        ("congruence-meet", BinOp::Meet),
        ("congruence-join", BinOp::Join),
        ("congruence-wimp", BinOp::WeakImp),
    ] {
        let f = |x, y| a.op(op, x, y).expect("defined");
        r.push(class_law(name, a, &["a", "b", "c", "d"], |v| {
            !(equiv(a, v[0], v[1]) && equiv(a, v[2], v[3])) || equiv(a, f(v[0], v[2]), f(v[1], v[3]))
        }));
    }
    // quotient order: [x] ≤ [y] iff x ∧ y ≡ x
    let qle = |x: usize, y: usize| equiv(a, a.meet(x, y), x);
    r.push(class_law(
        "quotient-relative-pseudocomplement",
        a,
        &["a", "b", "c"],
        |v| qle(a.meet(v[2], v[0]), v[1]) == qle(v[2], a.wimp(v[0], v[1])),
    ));
    r.push(class_law("negated-implication", a, &["a", "b"], |v| {
        equiv(a, a.neg(a.wimp(v[0], v[1])), a.meet(v[0], a.neg(v[1])))
    }));
    r.push(class_law("order-from-preorder", a, &["a", "b"], |v| {
        a.leq(v[0], v[1]) == (preorder_leq(a, v[0], v[1]) && preorder_leq(a, a.neg(v[1]), a.neg(v[0])))
    }));
    r
}

/// `e = e → e` for `e = ¬a → (a → b)`.
pub fn n13(a: &N4Algebra) -> LawOutcome {
    class_law("N13", a, &["a", "b"], |v| {
        let e = a.wimp(a.neg(v[0]), a.wimp(v[0], v[1]));
        a.wimp(e, e) == e
    })
}

pub fn check_n3(a: &N4Algebra) -> ClassReport {
    let mut r = check_n4_lattice(a);
    r.class = "n3-lattice".into();
    r.push(n13(a));
    r
}

pub const A4_TEXT: &str = include_str!("../fixtures/a4.alg");

/// The four-element diamond `0 < n, b < 1` with `¬n = n`, `¬b = b`,
/// `0 → a = n → a = 1` and `b → a = 1 → a = a`.
pub fn a4() -> N4Algebra {
    N4Algebra::parse(A4_TEXT).expect("bundled fixture")
}

/// The two-element Boolean algebra as an N4-lattice.
pub fn boolean2_n4() -> N4Algebra {
    let names = vec!["0".to_string(), "1".to_string()];
    N4Algebra::new(
        names,
        Table::from_fn(2, |a, b| a.min(b)),
        Table::from_fn(2, |a, b| a.max(b)),
        Table::from_fn(2, |a, b| if a <= b { 1 } else { 0 }),
        vec![1, 0],
    )
    .expect("well formed")
}

// ---------------------------------------------------------------------------
// Enumeration

/// Order-reversing involutions of `l`.
fn antitone_involutions(l: &Lattice) -> Vec<Vec<usize>> {
    let n = l.n;
    let mut out = Vec::new();
    let mut f = vec![usize::MAX; n];
    fn rec(i: usize, l: &Lattice, f: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let n = l.n;
        if i == n {
            if (0..n).all(|a| (0..n).all(|b| !l.leq(a, b) || l.leq(f[b], f[a]))) {
                out.push(f.clone());
            }
            return;
        }
        if f[i] != usize::MAX {
            return rec(i + 1, l, f, out);
        }
        for t in i..n {
            if f[t] != usize::MAX {
                continue;
            }
            f[i] = t;
            f[t] = i;
            rec(i + 1, l, f, out);
            f[i] = usize::MAX;
            f[t] = usize::MAX;
        }
    }
    rec(0, l, &mut f, &mut out);
    out
}

/// Partitions of `0..n` as class labels in restricted growth form.
fn partitions(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut p = vec![0; n];
    fn rec(i: usize, max: usize, p: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if i == p.len() {
            out.push(p.clone());
            return;
        }
        for c in 0..=max + 1 {
            p[i] = c;
            rec(i + 1, max.max(c), p, out);
        }
    }
    if n > 0 {
        rec(1, 0, &mut p, &mut out);
    }
    out
}

/// Every N4-lattice is determined by its lattice, its negation and its
/// congruence `≡`: the class of `a → b` is the relative pseudocomplement
/// in the quotient and the class of `¬(a → b)` is that of `a ∧ ¬b`, and
/// two elements agreeing on both are equal. This builds that candidate.
fn candidate(l: &Lattice, neg: &[usize], part: &[usize]) -> Option<Table> {
    let n = l.n;
    let cong = |op: &Table| {
        (0..n).all(|x| (0..n).all(|y| part[x] != part[y] || (0..n).all(|z| part[op.get(x, z)] == part[op.get(y, z)])))
    };
    if !cong(&l.meet) || !cong(&l.join) {
        return None;
    }
    let qle = |x: usize, y: usize| part[l.meet.get(x, y)] == part[x];
    let mut t = Table::from_fn(n, |_, _| 0);
    for a in 0..n {
        for b in 0..n {
            // greatest class c with c ∧ a ≤ b
            let below: Vec<usize> = (0..n).filter(|&c| qle(l.meet.get(c, a), b)).collect();
            let &top = below.iter().find(|&&c| below.iter().all(|&d| qle(d, c)))?;
            let target_neg = l.meet.get(a, neg[b]);
            let x = (0..n).find(|&x| part[x] == part[top] && part[neg[x]] == part[target_neg])?;
            t.set(a, b, x);
        }
    }
    Some(t)
}

fn element_names(n: usize) -> Vec<String> {
    (0..n)
        .map(|i| match i {
            0 => "0".to_string(),
            _ if i == n - 1 => "1".to_string(),
            _ => ((b'a' + (i - 1) as u8) as char).to_string(),
        })
        .collect()
}

/// All N4-lattices (or N3-lattices) of size `n` up to isomorphism, in
/// canonical order, and whether the deadline cut the search short.
pub fn enumerate_n4(n: usize, n3_only: bool, opts: &EnumOptions) -> (Vec<N4Algebra>, bool) {
    if n == 0 {
        return (vec![], false);
    }
    let ls: Vec<Lattice> = lattices(n).into_iter().filter(|l| l.is_distributive()).collect();
    let parts = partitions(n);
    let per_lattice = crate::search::par_map(opts.jobs, &ls, |l| {
        if opts.deadline.is_some_and(|d| std::time::Instant::now() >= d) {
            return (Vec::new(), true);
        }
        let perms = l.relabelings();
        let mut keys = Vec::new();
        for neg in antitone_involutions(l) {
            for part in &parts {
                let Some(wimp) = candidate(l, &neg, part) else {
                    continue;
                };
                let a = N4Algebra::new(element_names(n), l.meet.clone(), l.join.clone(), wimp, neg.clone())
                    .expect("well formed");
                let ok = if n3_only { check_n3(&a) } else { check_n4_lattice(&a) }.passed();
                if ok {
                    keys.push(perms.iter().map(|p| a.permuted(p)).min().expect("identity"));
                }
            }
        }
        (keys, false)
    });
    let mut all = BTreeSet::new();
    let mut partial = false;
    for (k, p) in per_lattice {
        partial |= p;
        all.extend(k);
    }
    let algs = all
        .into_iter()
        .map(|(meet, neg, wimp)| {
            let meet = Table::from_fn(n, |x, y| meet[x * n + y] as usize);
            let join = Table::from_fn(n, |x, y| {
                (0..n)
                    .find(|&z| {
                        meet.get(x, z) == x
                            && meet.get(y, z) == y
                            && (0..n).all(|w| !(meet.get(x, w) == x && meet.get(y, w) == y) || meet.get(z, w) == z)
                    })
                    .expect("lattice")
            });
            let wimp = Table::from_fn(n, |x, y| wimp[x * n + y] as usize);
            N4Algebra::new(
                element_names(n),
                meet,
                join,
                wimp,
                neg.into_iter().map(usize::from).collect(),
            )
            .expect("well formed")
        })
        .collect();
    (algs, partial)
}

/// Every lattice here is distributive: sanity helper for sweeps.
pub fn is_distributive(a: &N4Algebra) -> bool {
    lattice_distributive(&a.meet, &a.join)
}

// ---------------------------------------------------------------------------
// Hilbert calculus

pub const AXIOMS: [(&str, &str); 13] = [
    ("N1", "phi -> psi -> phi"),
    ("N2", "(phi -> psi -> gamma) -> (phi -> psi) -> phi -> gamma"),
    ("N3", "phi & psi -> phi"),
    ("N4", "phi & psi -> psi"),
    ("N5", "(phi -> psi) -> (phi -> gamma) -> phi -> psi & gamma"),
    ("N6", "phi -> phi | psi"),
    ("N7", "psi -> phi | psi"),
    ("N8", "(phi -> gamma) -> (psi -> gamma) -> phi | psi -> gamma"),
    ("N9", "~~phi <-> phi"),
    ("N10", "~(phi | psi) <-> ~phi & ~psi"),
    ("N11", "~(phi & psi) <-> ~phi | ~psi"),
    ("N12", "~(phi -> psi) <-> phi & ~psi"),
    ("N13", "~phi -> phi -> psi"),
];

fn mp_calculus(name: &str, count: usize) -> MpCalculus {
    MpCalculus {
        presentation: CalculusPresentation {
            name: name.into(),
            lang: Lang::N4,
            axioms: AXIOMS[..count]
                .iter()
                .map(|(n, s)| RuleSchema::axiom(*n, parse_any(s).expect("axiom parses")))
                .collect(),
            rules: vec![],
        },
        imp: Connective::WeakImp,
    }
}

static N4: LazyLock<MpCalculus> = LazyLock::new(|| mp_calculus("N4", 12));
static N3: LazyLock<MpCalculus> = LazyLock::new(|| mp_calculus("N3", 13));

pub fn calculus() -> &'static MpCalculus {
    &N4
}

pub fn calculus_n3() -> &'static MpCalculus {
    &N3
}

fn v(s: &str) -> Formula {
    Formula::var(s)
}

fn b2(phi: &Formula, psi: &Formula) -> Bindings {
    Bindings::new().phi(phi.clone()).psi(psi.clone())
}

/// `A → B`, `B → C` ⊢ `A → C` via N1 and N2.
fn syllogism(b: &mut ProofBuilder, ab: usize, bc: usize) -> usize {
    let (a, bb) = b
        .formula(ab)
        .as_bin(Connective::WeakImp)
        .map(|(x, y)| (x.clone(), y.clone()))
        .expect("→");
    let (_, c) = b
        .formula(bc)
        .as_bin(Connective::WeakImp)
        .map(|(x, y)| (x.clone(), y.clone()))
        .expect("→");
    let bc_f = b.formula(bc).clone();
    let k = b.axiom("N1", b2(&bc_f, &a));
    let a_bc = b.mp(bc, k);
    let s = b.axiom("N2", b2(&a, &bb).gamma(c));
    let step = b.mp(a_bc, s);
    b.mp(ab, step)
}

/// `X ∧ Y` ⊢ `X` and ⊢ `Y` for a biconditional, via N3/N4.
fn bicond_halves(b: &mut ProofBuilder, i: usize) -> (usize, usize) {
    let (l, r) = b
        .formula(i)
        .as_bin(Connective::And)
        .map(|(x, y)| (x.clone(), y.clone()))
        .expect("∧");
    let n3 = b.axiom("N3", b2(&l, &r));
    let n4 = b.axiom("N4", b2(&l, &r));
    (b.mp(i, n3), b.mp(i, n4))
}

fn p_implies_p(b: &mut ProofBuilder, p: &Formula) -> usize {
    let pp = Formula::wimp(p.clone(), p.clone());
    let s1 = b.axiom("N1", b2(p, &pp));
    let s2 = b.axiom("N2", b2(p, &pp).gamma(p.clone()));
    let s3 = b.mp(s1, s2);
    let s4 = b.axiom("N1", b2(p, p));
    b.mp(s4, s3)
}

/// Accepted N4 derivations, plus one deliberately broken proof under the
/// name `mp-mismatch`.
pub fn n4_hilbert_fixtures() -> Vec<(&'static str, HilbertProof)> {
    let p = v("p");
    let q = v("q");
    let mut out = Vec::new();

    let mut b = ProofBuilder::new(calculus());
    let g = p_implies_p(&mut b, &p);
    out.push(("p-implies-p", b.finish(vec![], g)));

    let mut b = ProofBuilder::new(calculus());
    let g = b.axiom("N12", b2(&p, &q));
    out.push(("n12-instance", b.finish(vec![], g)));

    // ~~p → p and p → ~~p from N9, composed into p → p
    let mut b = ProofBuilder::new(calculus());
    let n9 = b.axiom("N9", Bindings::new().phi(p.clone()));
    let (there, back) = bicond_halves(&mut b, n9);
    let g = syllogism(&mut b, back, there);
    out.push(("n9-round-trip", b.finish(vec![], g)));

    // from ¬(p → q), derive p ∧ ¬q and then p
    let mut b = ProofBuilder::new(calculus());
    let h = Formula::not(Formula::wimp(p.clone(), q.clone()));
    let hy = b.hyp(h.clone());
    let n12 = b.axiom("N12", b2(&p, &q));
    let (fwd, _) = bicond_halves(&mut b, n12);
    let conj = b.mp(hy, fwd);
    let n3 = b.axiom("N3", b2(&p, &Formula::not(q.clone())));
    let g = b.mp(conj, n3);
    out.push(("negated-implication", b.finish(vec![h], g)));

    out
}

/// A proof whose MP step pairs `p` with `q → p`.
pub fn mp_mismatch_fixture() -> HilbertProof {
    HilbertProof::parse(
        "assume: p\n\
         goal: p\n\
         1. p ; HYP\n\
         2. q -> p -> q ; N1 {phi := q, psi := p}\n\
         3. p -> q ; MP [1,2]\n",
    )
    .expect("well formed file")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::search::{Class, EnumOptions};

    #[test]
    fn a4_is_n4() {
        let a = a4();
        assert_eq!((a.bot, a.top), (0, 3));
        assert!(check_de_morgan(&a).passed());
        let r = check_n4_lattice(&a);
        assert!(r.passed(), "{r}");
        let q = quotient(&a).unwrap();
        assert_eq!(q.classes, vec![vec![0, 1], vec![2, 3]]);
        assert!(crate::search::isomorphic(
            &q.to_algebra(&a),
            &crate::algebra::boolean2()
        ));
    }

    #[test]
    fn a4_preorder_and_strong() {
        let a = a4();
        let e = |s| a.element(s).unwrap();
        assert!(preorder_leq(&a, e("n"), e("b")));
        assert!(!preorder_leq(&a, e("1"), e("0")));
        let t = strong_implication_table(&a);
        assert_eq!(t.get(e("1"), e("1")), e("1"));
        assert_eq!(t.get(e("b"), e("b")), e("b"));
    }

    #[test]
    fn a4_fails_n13_at_b() {
        let r = check_n3(&a4());
        let l = r.law("N13").unwrap();
        assert!(!l.holds);
        assert_eq!(l.witness.as_ref().unwrap().to_string(), "a=b, b=0");
    }

    #[test]
    fn mutation_breaks_a4() {
        let a = a4();
        let m = a.with_wimp(a.element("b").unwrap(), a.element("n").unwrap(), a.top);
        assert!(!check_n4_lattice(&m).passed());
    }

    #[test]
    fn boolean_cases() {
        let b = boolean2_n4();
        assert!(check_n3(&b).passed());
        assert_eq!(strong_implication_table(&b), b.wimp);
        let id = N4Algebra::new(
            b.names.clone(),
            b.meet.clone(),
            b.join.clone(),
            b.wimp.clone(),
            vec![0, 1],
        )
        .unwrap();
        assert!(!check_de_morgan(&id).passed());
    }

    #[test]
    fn hilbert_fixtures() {
        for (name, p) in n4_hilbert_fixtures() {
            let r = calculus().check(&p);
            assert!(r.accepted(), "{name}: {r}");
        }
        let r = calculus().check(&mp_mismatch_fixture());
        assert!(!r.accepted());
        assert_eq!(r.first_rejection().unwrap().step, 3);
    }

    #[test]
    fn enumeration() {
        let opts = EnumOptions::default();
        let counts: Vec<usize> = (1..=4).map(|n| enumerate_n4(n, false, &opts).0.len()).collect();
        // A4 is among the size-4 algebras
        let four = enumerate_n4(4, false, &opts).0;
        assert!(four
            .iter()
            .any(|x| crate::search::isomorphic(&x.to_s_signature(), &a4().to_s_signature())));
        assert!(counts.iter().all(|&c| c >= 1));
        for n in 1..=4 {
            for a in crate::search::enumerate(Class::N3Lattice, n, &opts).unwrap().algebras {
                let a = a.n4().unwrap();
                assert!(crate::algebraizer::is_s_algebra(&a.to_s_signature(), 2), "{a}");
            }
        }
    }
}
