//! Enumeration of small algebras up to isomorphism and countermodel search.
//!
//! Lattices are generated as naturally labelled posets with `0` the bottom
//! and `n-1` the top; fusions are found by backtracking over monotone,
//! commutative, integral tables and then filtered for associativity and
//! join preservation (which in a finite lattice is residuation).

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{to_s_algebra, FiniteAlgebra, Table};
use crate::algebraizer::is_s_algebra;
use crate::n4::N4Algebra;
use crate::term::{counterexample, BinOp, Interpretation, Quasiequation, Valuation};

pub const DEFAULT_CEILING: usize = 6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Class {
    Cibrl,
    Cibrl3Potent,
    SPrime,
    SDef34,
    N4Lattice,
    N3Lattice,
}

impl Class {
    pub const ALL: [Class; 6] = [
        Class::Cibrl,
        Class::Cibrl3Potent,
        Class::SPrime,
        Class::SDef34,
        Class::N4Lattice,
        Class::N3Lattice,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Class::Cibrl => "cibrl",
            Class::Cibrl3Potent => "cibrl_3potent",
            Class::SPrime => "s_prime",
            Class::SDef34 => "s_def34",
            Class::N4Lattice => "n4_lattice",
            Class::N3Lattice => "n3_lattice",
        }
    }
}

impl fmt::Display for Class {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Class {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let norm = s.replace('-', "_");
        Ok(match norm.as_str() {
            "cibrl" => Class::Cibrl,
            "cibrl_3potent" => Class::Cibrl3Potent,
            "s_prime" | "sprime" => Class::SPrime,
            "s_def34" => Class::SDef34,
            "n4_lattice" | "n4" => Class::N4Lattice,
            "n3_lattice" | "n3" => Class::N3Lattice,
            _ => return Err(format!("unknown class `{s}`")),
        })
    }
}

/// A finite algebra of either signature.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AnyAlgebra {
    Residuated(FiniteAlgebra),
    N4(N4Algebra),
}

impl AnyAlgebra {
    pub fn to_file_string(&self) -> String {
        match self {
            AnyAlgebra::Residuated(a) => a.to_file_string(),
            AnyAlgebra::N4(a) => a.to_file_string(),
        }
    }

    pub fn residuated(&self) -> Option<&FiniteAlgebra> {
        match self {
            AnyAlgebra::Residuated(a) => Some(a),
            AnyAlgebra::N4(_) => None,
        }
    }

    pub fn n4(&self) -> Option<&N4Algebra> {
        match self {
            AnyAlgebra::N4(a) => Some(a),
            AnyAlgebra::Residuated(_) => None,
        }
    }

    pub fn parse(text: &str) -> Result<AnyAlgebra, crate::algebra::AlgebraError> {
        let file = crate::algebra::AlgebraFile::parse(text)?;
        if file.is_n4() {
            Ok(AnyAlgebra::N4(N4Algebra::from_file(file)?))
        } else {
            Ok(AnyAlgebra::Residuated(file.into_residuated()?))
        }
    }
}

impl Interpretation for AnyAlgebra {
    fn size(&self) -> usize {
        match self {
            AnyAlgebra::Residuated(a) => Interpretation::size(a),
            AnyAlgebra::N4(a) => Interpretation::size(a),
        }
    }
    fn element_names(&self) -> &[String] {
        match self {
            AnyAlgebra::Residuated(a) => a.element_names(),
            AnyAlgebra::N4(a) => a.element_names(),
        }
    }
    fn op(&self, op: BinOp, x: usize, y: usize) -> Option<usize> {
        match self {
            AnyAlgebra::Residuated(a) => a.op(op, x, y),
            AnyAlgebra::N4(a) => a.op(op, x, y),
        }
    }
    fn neg(&self, x: usize) -> Option<usize> {
        match self {
            AnyAlgebra::Residuated(a) => Interpretation::neg(a, x),
            AnyAlgebra::N4(a) => Interpretation::neg(a, x),
        }
    }
    fn bot(&self) -> Option<usize> {
        match self {
            AnyAlgebra::Residuated(a) => Interpretation::bot(a),
            AnyAlgebra::N4(a) => Interpretation::bot(a),
        }
    }
    fn top(&self) -> Option<usize> {
        match self {
            AnyAlgebra::Residuated(a) => Interpretation::top(a),
            AnyAlgebra::N4(a) => Interpretation::top(a),
        }
    }
}

// ---------------------------------------------------------------------------
// Lattices

/// A finite bounded lattice on `0..n` with bottom `0` and top `n-1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lattice {
    pub n: usize,
    leq: Vec<bool>,
    pub meet: Table,
    pub join: Table,
    rank: Vec<usize>,
}

impl Lattice {
    #[inline]
    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq[a * self.n + b]
    }

    /// Builds a lattice from its order, or `None` if some pair lacks a
    /// meet or join.
    pub fn from_order(n: usize, leq: Vec<bool>) -> Option<Lattice> {
        let le = |a: usize, b: usize| leq[a * n + b];
        let bound = |a: usize, b: usize, lower: bool| -> Option<usize> {
            let cands: Vec<usize> = (0..n)
                .filter(|&c| {
                    if lower {
                        le(c, a) && le(c, b)
                    } else {
                        le(a, c) && le(b, c)
                    }
                })
                .collect();
            cands
                .iter()
                .copied()
                .find(|&c| cands.iter().all(|&d| if lower { le(d, c) } else { le(c, d) }))
        };
        let mut meet = vec![vec![0; n]; n];
        let mut join = vec![vec![0; n]; n];
        for a in 0..n {
            for b in 0..n {
                meet[a][b] = bound(a, b, true)?;
                join[a][b] = bound(a, b, false)?;
            }
        }
        let mut rank = vec![0; n];
        // longest chain from the bottom; indices respect the order
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&a| (0..n).filter(|&b| le(b, a)).count());
        for &a in &order {
            rank[a] = (0..n)
                .filter(|&b| b != a && le(b, a))
                .map(|b| rank[b] + 1)
                .max()
                .unwrap_or(0);
        }
        Some(Lattice {
            n,
            leq,
            meet: Table::from_rows(&meet),
            join: Table::from_rows(&join),
            rank,
        })
    }

    pub fn rank(&self, a: usize) -> usize {
        self.rank[a]
    }

    pub fn is_distributive(&self) -> bool {
        crate::algebra::lattice_distributive(&self.meet, &self.join)
    }

    /// Relabelings (old index ↦ new index) whose images list elements by
    /// nondecreasing rank. Isomorphic lattices share the same set of images.
    pub fn relabelings(&self) -> Vec<Vec<usize>> {
        let n = self.n;
        // labels available to each rank: a contiguous block
        let mut block_start = vec![0; n + 1];
        for &r in &self.rank {
            block_start[r + 1] += 1;
        }
        for r in 0..n {
            block_start[r + 1] += block_start[r];
        }
        let mut out = Vec::new();
        let mut perm = vec![0; n];
        let mut used = vec![false; n];
        fn rec(
            i: usize,
            l: &Lattice,
            starts: &[usize],
            perm: &mut Vec<usize>,
            used: &mut Vec<bool>,
            out: &mut Vec<Vec<usize>>,
        ) {
            if i == l.n {
                out.push(perm.clone());
                return;
            }
            let r = l.rank[i];
            for t in starts[r]..starts[r + 1] {
                if !used[t] {
                    used[t] = true;
                    perm[i] = t;
                    rec(i + 1, l, starts, perm, used, out);
                    used[t] = false;
                }
            }
        }
        rec(0, self, &block_start, &mut perm, &mut used, &mut out);
        out
    }

    fn order_key(&self, perm: &[usize]) -> Vec<bool> {
        let n = self.n;
        let mut k = vec![false; n * n];
        for a in 0..n {
            for b in 0..n {
                k[perm[a] * n + perm[b]] = self.leq(a, b);
            }
        }
        k
    }
}

/// All lattices on `n` elements up to isomorphism, in canonical order.
pub fn lattices(n: usize) -> Vec<Lattice> {
    if n == 0 {
        return vec![];
    }
    if n == 1 {
        return vec![Lattice::from_order(1, vec![true]).expect("one point")];
    }
    let m = n - 2;
    let pairs: Vec<(usize, usize)> = (1..=m).flat_map(|i| (i + 1..=m).map(move |j| (i, j))).collect();
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for mask in 0u64..(1u64 << pairs.len()) {
        let mut leq = vec![false; n * n];
        for a in 0..n {
            leq[a * n + a] = true;
            leq[a] = true; // 0 ≤ a
            leq[a * n + n - 1] = true; // a ≤ top
        }
        for (bit, &(i, j)) in pairs.iter().enumerate() {
            if mask >> bit & 1 == 1 {
                leq[i * n + j] = true;
            }
        }
        let transitive =
            (0..n).all(|a| (0..n).all(|b| !leq[a * n + b] || (0..n).all(|c| !leq[b * n + c] || leq[a * n + c])));
        if !transitive {
            continue;
        }
        let Some(l) = Lattice::from_order(n, leq) else {
            continue;
        };
        let key = l
            .relabelings()
            .iter()
            .map(|p| l.order_key(p))
            .min()
            .expect("some relabeling");
        if seen.insert(key) {
            out.push(l);
        }
    }
    out
}

// ---------------------------------------------------------------------------
// Fusions

struct FusionSearch<'a> {
    l: &'a Lattice,
    f: Vec<Option<usize>>,
    cells: Vec<(usize, usize)>,
    out: Vec<Table>,
}

impl FusionSearch<'_> {
    fn get(&self, a: usize, b: usize) -> Option<usize> {
        self.f[a * self.l.n + b]
    }

    fn set(&mut self, a: usize, b: usize, v: Option<usize>) {
        let n = self.l.n;
        self.f[a * n + b] = v;
        self.f[b * n + a] = v;
    }

    fn monotone_at(&self, a: usize, b: usize, v: usize) -> bool {
        let l = self.l;
        for x in 0..l.n {
            if let Some(w) = self.get(a, x) {
                if l.leq(x, b) && !l.leq(w, v) {
                    return false;
                }
                if l.leq(b, x) && !l.leq(v, w) {
                    return false;
                }
            }
            if let Some(w) = self.get(x, b) {
                if l.leq(x, a) && !l.leq(w, v) {
                    return false;
                }
                if l.leq(a, x) && !l.leq(v, w) {
                    return false;
                }
            }
        }
        true
    }

    fn run(&mut self, i: usize) {
        if i == self.cells.len() {
            let n = self.l.n;
            let t = Table::from_fn(n, |a, b| self.get(a, b).expect("complete"));
            if fusion_is_residuated(self.l, &t) {
                self.out.push(t);
            }
            return;
        }
        let (a, b) = self.cells[i];
        let m = self.l.meet.get(a, b);
        for v in 0..self.l.n {
            if self.l.leq(v, m) && self.monotone_at(a, b, v) {
                self.set(a, b, Some(v));
                self.run(i + 1);
                self.set(a, b, None);
            }
        }
    }
}

fn fusion_is_residuated(l: &Lattice, f: &Table) -> bool {
    let n = l.n;
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if f.get(f.get(a, b), c) != f.get(a, f.get(b, c)) {
                    return false;
                }
                if f.get(a, l.join.get(b, c)) != l.join.get(f.get(a, b), f.get(a, c)) {
                    return false;
                }
            }
        }
    }
    true
}

/// All commutative, associative, integral fusions on `l` that have a
/// residual.
pub fn fusions(l: &Lattice) -> Vec<Table> {
    let n = l.n;
    let top = n - 1;
    let mut s = FusionSearch {
        l,
        f: vec![None; n * n],
        cells: Vec::new(),
        out: Vec::new(),
    };
    for x in 0..n {
        s.set(0, x, Some(0));
    }
    for x in 0..n {
        s.set(top, x, Some(x));
    }
    for a in 1..top {
        for b in a..top {
            s.cells.push((a, b));
        }
    }
    s.run(0);
    s.out
}

/// The residual `a ⇒ c = ⋁ {b : a * b ≤ c}`.
pub fn residual(l: &Lattice, fuse: &Table) -> Table {
    let n = l.n;
    Table::from_fn(n, |a, c| {
        (0..n)
            .filter(|&b| l.leq(fuse.get(a, b), c))
            .fold(0, |acc, b| l.join.get(acc, b))
    })
}

fn element_names(n: usize) -> Vec<String> {
    (0..n)
        .map(|i| {
            if i == 0 {
                "0".to_string()
            } else if i == n - 1 {
                "1".to_string()
            } else {
                ((b'a' + (i - 1) as u8) as char).to_string()
            }
        })
        .collect()
}

pub fn residuated_from(l: &Lattice, fuse: Table) -> FiniteAlgebra {
    let imp = residual(l, &fuse);
    FiniteAlgebra::new(
        element_names(l.n),
        l.meet.clone(),
        l.join.clone(),
        imp,
        Some(fuse),
        None,
        0,
        l.n - 1,
    )
    .expect("generated tables are well formed")
}

// ---------------------------------------------------------------------------
// Canonical forms

/// Lexicographically least `(meet, fuse)` over rank-preserving relabelings.
fn canonical_cibrl(l: &Lattice, fuse: &Table) -> (Vec<u8>, Vec<u8>) {
    l.relabelings()
        .iter()
        .map(|p| (l.meet.permuted(p).raw().to_vec(), fuse.permuted(p).raw().to_vec()))
        .min()
        .expect("identity relabeling")
}

fn cibrl_from_key(n: usize, key: &(Vec<u8>, Vec<u8>)) -> FiniteAlgebra {
    let meet = Table::from_fn(n, |a, b| key.0[a * n + b] as usize);
    let leq = (0..n * n).map(|i| meet.get(i / n, i % n) == i / n).collect();
    let l = Lattice::from_order(n, leq).expect("canonical key is a lattice");
    let fuse = Table::from_fn(n, |a, b| key.1[a * n + b] as usize);
    residuated_from(&l, fuse)
}

fn lattice_of(a: &FiniteAlgebra) -> Option<Lattice> {
    let n = a.size();
    if a.bot != 0 || a.top != n - 1 {
        return None;
    }
    let leq = (0..n * n).map(|i| a.leq(i / n, i % n)).collect();
    Lattice::from_order(n, leq)
}

/// The representative of `a`'s isomorphism class used by [`enumerate`],
/// when `a` is a CIBRL with bottom `0` and top `n-1`.
pub fn canonical_form(a: &FiniteAlgebra) -> Option<FiniteAlgebra> {
    let l = lattice_of(a)?;
    let key = canonical_cibrl(&l, &a.fuse);
    Some(cibrl_from_key(a.size(), &key))
}

/// Whether some bijection carries every table and constant of `a` onto `b`.
pub fn isomorphic(a: &FiniteAlgebra, b: &FiniteAlgebra) -> bool {
    let n = a.size();
    if n != b.size() {
        return false;
    }
    let mut perm = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fn consistent(a: &FiniteAlgebra, b: &FiniteAlgebra, perm: &[usize], upto: usize) -> bool {
        let last = upto - 1;
        for x in 0..upto {
            for (p, q) in [(x, last), (last, x)] {
                for (ta, tb) in [
                    (&a.meet, &b.meet),
                    (&a.join, &b.join),
                    (&a.imp, &b.imp),
                    (&a.fuse, &b.fuse),
                ] {
                    let r = ta.get(p, q);
                    if r < upto && tb.get(perm[p], perm[q]) != perm[r] {
                        return false;
                    }
                }
                if !b.leq(perm[p], perm[q]) && a.leq(p, q) {
                    return false;
                }
            }
        }
        let r = a.neg(last);
        !(r < upto && b.neg(perm[last]) != perm[r])
    }
    fn rec(a: &FiniteAlgebra, b: &FiniteAlgebra, i: usize, perm: &mut [usize], used: &mut [bool]) -> bool {
        let n = a.size();
        if i == n {
            return (0..n).all(|x| {
                (0..n).all(|y| {
                    b.meet(perm[x], perm[y]) == perm[a.meet(x, y)]
                        && b.join(perm[x], perm[y]) == perm[a.join(x, y)]
                        && b.imp(perm[x], perm[y]) == perm[a.imp(x, y)]
                        && b.fuse(perm[x], perm[y]) == perm[a.fuse(x, y)]
                })
            }) && (0..n).all(|x| b.neg(perm[x]) == perm[a.neg(x)]);
        }
        for t in 0..n {
            if used[t] || (i == a.bot) != (t == b.bot) || (i == a.top) != (t == b.top) {
                continue;
            }
            perm[i] = t;
            used[t] = true;
            if consistent(a, b, perm, i + 1) && rec(a, b, i + 1, perm, used) {
                return true;
            }
            used[t] = false;
        }
        false
    }
    rec(a, b, 0, &mut perm, &mut used)
}

// ---------------------------------------------------------------------------
// Enumeration

#[derive(Clone, Copy, Debug)]
pub struct EnumOptions {
    /// Worker threads; 1 runs serially on the calling thread.
    pub jobs: usize,
    pub deadline: Option<Instant>,
    pub ceiling: usize,
}

impl Default for EnumOptions {
    fn default() -> Self {
        EnumOptions {
            jobs: 1,
            deadline: None,
            ceiling: DEFAULT_CEILING,
        }
    }
}

#[derive(Clone, Debug)]
pub struct EnumerationResult {
    pub class: Class,
    pub size: usize,
    pub algebras: Vec<AnyAlgebra>,
    /// Set when the time budget ran out; `algebras` is then incomplete.
    pub partial: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SearchError {
    #[error("size {size} exceeds the enumeration ceiling {ceiling}")]
    Ceiling { size: usize, ceiling: usize },
}

fn expired(deadline: Option<Instant>) -> bool {
    deadline.is_some_and(|d| Instant::now() >= d)
}

fn keep(class: Class, a: &FiniteAlgebra) -> bool {
    use crate::algebra::{involution, three_potency};
    match class {
        Class::Cibrl | Class::SDef34 => true,
        Class::Cibrl3Potent => three_potency(a).holds,
        Class::SPrime => three_potency(a).holds && involution(a).holds,
        Class::N4Lattice | Class::N3Lattice => unreachable!("handled by the N4 generator"),
    }
}

/// Runs `f` on every item, on `jobs` threads, keeping input order.
pub(crate) fn par_map<T: Sync, R: Send>(jobs: usize, items: &[T], f: impl Fn(&T) -> R + Sync + Send) -> Vec<R> {
    if jobs <= 1 {
        return items.iter().map(f).collect();
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .expect("thread pool");
    pool.install(|| items.par_iter().map(f).collect())
}

type CibrlKey = (Vec<u8>, Vec<u8>);

/// All CIBRLs of size `n` up to isomorphism, keyed canonically.
fn cibrl_keys(n: usize, opts: &EnumOptions, class: Class) -> (BTreeSet<CibrlKey>, bool) {
    let ls = lattices(n);
    let per_lattice = par_map(opts.jobs, &ls, |l| {
        if expired(opts.deadline) {
            return (Vec::new(), true);
        }
        let keys: Vec<_> = fusions(l)
            .into_iter()
            .filter(|f| keep(class, &residuated_from(l, f.clone())))
            .map(|f| canonical_cibrl(l, &f))
            .collect();
        (keys, false)
    });
    let mut all = BTreeSet::new();
    let mut partial = false;
    for (keys, p) in per_lattice {
        partial |= p;
        all.extend(keys);
    }
    (all, partial)
}

/// All algebras of size exactly `n` in `class`, up to isomorphism, in
/// canonical order.
pub fn enumerate(class: Class, n: usize, opts: &EnumOptions) -> Result<EnumerationResult, SearchError> {
    if n > opts.ceiling {
        return Err(SearchError::Ceiling {
            size: n,
            ceiling: opts.ceiling,
        });
    }
    let (algebras, partial) = match class {
        Class::N4Lattice | Class::N3Lattice => {
            let (v, p) = crate::n4::enumerate_n4(n, class == Class::N3Lattice, opts);
            (v.into_iter().map(AnyAlgebra::N4).collect(), p)
        }
        _ if n == 0 => (vec![], false),
        _ => {
            let (keys, partial) = cibrl_keys(n, opts, class);
            let algs: Vec<FiniteAlgebra> = keys.iter().map(|k| cibrl_from_key(n, k)).collect();
            let algs: Vec<AnyAlgebra> = if class == Class::SDef34 {
                par_map(opts.jobs, &algs, |a| {
                    let s = to_s_algebra(a);
                    is_s_algebra(&s, 2).then_some(s)
                })
                .into_iter()
                .flatten()
                .map(AnyAlgebra::Residuated)
                .collect()
            } else {
                algs.into_iter().map(AnyAlgebra::Residuated).collect()
            };
            (algs, partial)
        }
    };
    Ok(EnumerationResult {
        class,
        size: n,
        algebras,
        partial,
    })
}

/// Enumerates sizes `1..=max_size`; convenience for sweeps.
pub fn enumerate_up_to(
    class: Class,
    max_size: usize,
    opts: &EnumOptions,
) -> Result<Vec<EnumerationResult>, SearchError> {
    (1..=max_size).map(|n| enumerate(class, n, opts)).collect()
}

/// All residuated algebras of `class` of size `1..=max_size`.
pub fn residuated_up_to(class: Class, max_size: usize) -> Vec<FiniteAlgebra> {
    enumerate_up_to(class, max_size, &EnumOptions::default())
        .expect("within ceiling")
        .into_iter()
        .flat_map(|r| r.algebras)
        .filter_map(|a| match a {
            AnyAlgebra::Residuated(a) => Some(a),
            AnyAlgebra::N4(_) => None,
        })
        .collect()
}

#[derive(Clone, Debug)]
pub struct Countermodel {
    pub algebra: AnyAlgebra,
    pub valuation: Valuation,
    /// Values of the two sides of the refuted conclusion.
    pub sides: (String, String),
}

/// The first algebra (by size, then canonical order) in `candidates`
/// refuting `q`, with the lexicographically first refuting valuation.
pub fn find_countermodel_in<'a, A: Interpretation + 'a>(
    q: &Quasiequation,
    candidates: impl IntoIterator<Item = &'a A>,
) -> Option<(&'a A, Vec<usize>)> {
    candidates
        .into_iter()
        .find_map(|a| counterexample(a, q).ok().flatten().map(|v| (a, v)))
}

fn describe(a: AnyAlgebra, q: &Quasiequation, v: Vec<usize>) -> Countermodel {
    let names = a.element_names().to_vec();
    let l = q.conclusion.lhs.eval(&a, &v).expect("evaluated before");
    let r = q.conclusion.rhs.eval(&a, &v).expect("evaluated before");
    Countermodel {
        valuation: Valuation::new(&q.vars, &v, &names),
        sides: (names[l].clone(), names[r].clone()),
        algebra: a,
    }
}

/// Smallest countermodel to `q` in `class` up to `max_size`.
pub fn find_countermodel(
    q: &Quasiequation,
    class: Class,
    max_size: usize,
    opts: &EnumOptions,
) -> Result<Option<Countermodel>, SearchError> {
    for n in 1..=max_size {
        let r = enumerate(class, n, opts)?;
        if let Some((a, v)) = find_countermodel_in(q, &r.algebras) {
            return Ok(Some(describe(a.clone(), q, v)));
        }
    }
    Ok(None)
}

/// Countermodel among explicitly given algebras.
pub fn find_countermodel_among(q: &Quasiequation, candidates: &[AnyAlgebra]) -> Option<Countermodel> {
    find_countermodel_in(q, candidates).map(|(a, v)| describe(a.clone(), q, v))
}

// ---------------------------------------------------------------------------
// Raw oracle

/// Counts involutive 3-potent CIBRLs on `n ≤ 2` elements by trying every
/// operation table and every choice of constants, then identifying
/// isomorphic copies. Independent of the lattice/fusion generator.
pub fn brute_force_s_prime_count(n: usize) -> usize {
    assert!(n <= 2, "raw search is only feasible for n <= 2");
    let cells = n * n;
    let tables: Vec<Table> = (0..n.pow(cells as u32))
        .map(|mut code| {
            let mut data = vec![0usize; cells];
            for d in data.iter_mut() {
                *d = code % n;
                code /= n;
            }
            Table::from_fn(n, |a, b| data[a * n + b])
        })
        .collect();
    let mut found: Vec<FiniteAlgebra> = Vec::new();
    for meet in &tables {
        for join in &tables {
            for imp in &tables {
                for fuse in &tables {
                    for bot in 0..n {
                        for top in 0..n {
                            let a = FiniteAlgebra::new(
                                element_names(n),
                                meet.clone(),
                                join.clone(),
                                imp.clone(),
                                Some(fuse.clone()),
                                None,
                                bot,
                                top,
                            )
                            .expect("in range");
                            if crate::algebra::check_s_prime(&a).passed() && !found.iter().any(|b| isomorphic(&a, b)) {
                                found.push(a);
                            }
                        }
                    }
                }
            }
        }
    }
    found.len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{check_cibrl, godel3, lukasiewicz3};
    use crate::term::parse_statement;

    fn count(class: Class, n: usize) -> usize {
        enumerate(class, n, &EnumOptions::default()).unwrap().algebras.len()
    }

    #[test]
    fn lattice_counts() {
        let counts: Vec<usize> = (1..=6).map(|n| lattices(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 1, 2, 5, 15]);
    }

    #[test]
    fn small_counts() {
        assert_eq!(count(Class::SPrime, 1), 1);
        assert_eq!(count(Class::SPrime, 2), 1);
        assert_eq!(count(Class::SPrime, 3), 1);
        assert_eq!(count(Class::Cibrl, 3), 2);
        assert_eq!(count(Class::SDef34, 3), 1);
    }

    #[test]
    fn generated_algebras_pass_their_checks() {
        for n in 1..=4 {
            for a in enumerate(Class::Cibrl, n, &EnumOptions::default()).unwrap().algebras {
                let a = a.residuated().unwrap().clone();
                assert!(check_cibrl(&a).passed(), "{a}");
            }
        }
    }

    #[test]
    fn l3_is_found() {
        let r = enumerate(Class::SPrime, 3, &EnumOptions::default()).unwrap();
        let a = r.algebras[0].residuated().unwrap();
        assert!(isomorphic(a, &lukasiewicz3()));
        assert!(!isomorphic(a, &godel3()));
    }

    #[test]
    fn isomorphism() {
        let l = lukasiewicz3();
        // swap nothing but names: the identity relabeling
        assert!(isomorphic(&l, &l.permuted(&[0, 1, 2])));
        assert!(!isomorphic(&l, &godel3()));
        assert!(!isomorphic(&crate::algebra::boolean2(), &crate::algebra::trivial()));
        let b = crate::algebra::boolean2();
        assert!(isomorphic(&b, &b.permuted(&[1, 0])));
    }

    #[test]
    fn canonical_form_is_stable() {
        for a in residuated_up_to(Class::Cibrl, 4) {
            assert_eq!(canonical_form(&a).unwrap(), a);
        }
    }

    #[test]
    fn parallel_equals_serial() {
        for n in 1..=4 {
            let s = enumerate(Class::Cibrl, n, &EnumOptions::default()).unwrap();
            let p = enumerate(
                Class::Cibrl,
                n,
                &EnumOptions {
                    jobs: 4,
                    ..Default::default()
                },
            )
            .unwrap();
            assert_eq!(s.algebras, p.algebras);
        }
    }

    #[test]
    fn raw_oracle() {
        assert_eq!(brute_force_s_prime_count(1), 1);
        assert_eq!(brute_force_s_prime_count(2), 1);
    }

    #[test]
    fn countermodels() {
        let q = parse_statement("x * x = x").unwrap();
        let c = find_countermodel(&q, Class::SPrime, 3, &EnumOptions::default())
            .unwrap()
            .unwrap();
        assert_eq!(c.algebra.element_names().len(), 3);
        assert_eq!(c.valuation.get("x"), Some("a"));
        let q = parse_statement("x => x = y => y").unwrap();
        assert!(find_countermodel(&q, Class::SPrime, 3, &EnumOptions::default())
            .unwrap()
            .is_none());
    }

    #[test]
    fn ceiling() {
        assert!(enumerate(Class::Cibrl, 7, &EnumOptions::default()).is_err());
    }
}
