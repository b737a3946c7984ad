//! The calculus S′: eighteen axiom schemas over `∧ ∨ ⇒ * ¬ ⊥ ⊤` and modus
//! ponens, together with a constructive deduction theorem.

use std::sync::LazyLock;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::formula::{parse_any, Connective, Formula, Lang};
use crate::hilbert::{HilbertProof, Justification, MpCalculus, ProofBuilder};
use crate::proof::CheckReport;
use crate::schema::{Bindings, CalculusPresentation, RuleSchema};

pub const AXIOMS: [(&str, &str); 18] = [
    ("A1'", "(phi => psi) => (gamma => phi) => (gamma => psi)"),
    ("A2'", "(phi => psi => gamma) => (psi => phi => gamma)"),
    ("A3'", "phi => psi => phi"),
    ("A4'", "(phi => gamma) => (psi => gamma) => (phi | psi => gamma)"),
    ("A5'", "phi => phi | psi"),
    ("A6'", "psi => phi | psi"),
    ("A7'", "phi & psi => phi"),
    ("A8'", "phi & psi => psi"),
    ("A9'", "phi => psi => phi & psi"),
    ("A10'", "(gamma => phi) & (gamma => psi) => (gamma => phi & psi)"),
    ("A11'", "phi => psi => phi * psi"),
    ("A12'", "(phi => psi => gamma) => (phi * psi => gamma)"),
    ("A13'", "~phi => phi => psi"),
    ("A14'", "(phi => psi) <=> (~psi => ~phi)"),
    ("A15'", "phi <=> ~~phi"),
    ("A16'", "0 => phi"),
    ("A17'", "phi => 1c"),
    ("A18'", "phi * phi => phi * (phi * phi)"),
];

static SPRIME: LazyLock<MpCalculus> = LazyLock::new(|| MpCalculus {
    presentation: CalculusPresentation {
        name: "S'".into(),
        lang: Lang::SPrime,
        axioms: AXIOMS
            .iter()
            .map(|(n, s)| RuleSchema::axiom(*n, parse_any(s).expect("axiom parses")))
            .collect(),
        rules: vec![],
    },
    imp: Connective::Imp,
});

pub fn calculus() -> &'static MpCalculus {
    &SPRIME
}

pub fn presentation() -> &'static CalculusPresentation {
    &SPRIME.presentation
}

pub fn check_proof_sp(p: &HilbertProof) -> CheckReport {
    SPRIME.check(p)
}

/// `φ ⇒ (φ ⇒ ψ)`.
pub fn weak_implication(phi: Formula, psi: Formula) -> Formula {
    crate::formula::strong_imp2(phi, psi)
}

pub fn square(phi: &Formula) -> Formula {
    Formula::fuse(phi.clone(), phi.clone())
}

fn b3(phi: &Formula, psi: &Formula, gamma: &Formula) -> Bindings {
    Bindings::new().phi(phi.clone()).psi(psi.clone()).gamma(gamma.clone())
}

fn b2(phi: &Formula, psi: &Formula) -> Bindings {
    Bindings::new().phi(phi.clone()).psi(psi.clone())
}

fn split(f: &Formula) -> (Formula, Formula) {
    let (a, b) = f.as_imp().expect("implication");
    (a.clone(), b.clone())
}

/// Derived rules of S′, each a short fixed pattern of axioms and MP.
pub struct Combinators<'c> {
    pub b: ProofBuilder<'c>,
}

impl<'c> Combinators<'c> {
    pub fn new() -> Self {
        Combinators {
            b: ProofBuilder::new(calculus()),
        }
    }

    fn f(&self, i: usize) -> Formula {
        self.b.formula(i).clone()
    }

    /// `A ⇒ B`, `B ⇒ C` ⊢ `A ⇒ C`
    pub fn compose(&mut self, ab: usize, bc: usize) -> usize {
        let (a, bb) = split(&self.f(ab));
        let (_, c) = split(&self.f(bc));
        let ax = self.b.axiom("A1'", b3(&bb, &c, &a));
        let step = self.b.mp(bc, ax);
        self.b.mp(ab, step)
    }

    /// `X ⇒ (Y ⇒ Z)` ⊢ `Y ⇒ (X ⇒ Z)`
    pub fn permute(&mut self, i: usize) -> usize {
        let (x, yz) = split(&self.f(i));
        let (y, z) = split(&yz);
        let ax = self.b.axiom("A2'", b3(&x, &y, &z));
        self.b.mp(i, ax)
    }

    /// `X ⇒ (Y ⇒ Z)` ⊢ `(X * Y) ⇒ Z`
    pub fn uncurry(&mut self, i: usize) -> usize {
        let (x, yz) = split(&self.f(i));
        let (y, z) = split(&yz);
        let ax = self.b.axiom("A12'", b3(&x, &y, &z));
        self.b.mp(i, ax)
    }

    /// `(X * Y) ⇒ Z` ⊢ `X ⇒ (Y ⇒ Z)`
    pub fn curry(&mut self, i: usize) -> usize {
        let (xy, _) = split(&self.f(i));
        let (x, y) = match &xy {
            Formula::Bin(Connective::Fuse, x, y) => ((**x).clone(), (**y).clone()),
            _ => panic!("curry needs a fusion antecedent"),
        };
        let pair = self.b.axiom("A11'", b2(&x, &y));
        let lifted = self.lift(i, &y);
        self.compose(pair, lifted)
    }

    /// `Y` ⊢ `X ⇒ Y`
    pub fn weaken(&mut self, i: usize, x: &Formula) -> usize {
        let y = self.f(i);
        let ax = self.b.axiom("A3'", b2(&y, x));
        self.b.mp(i, ax)
    }

    /// `X ⇒ Y` ⊢ `(P ⇒ X) ⇒ (P ⇒ Y)`
    pub fn lift(&mut self, i: usize, p: &Formula) -> usize {
        let (x, y) = split(&self.f(i));
        let ax = self.b.axiom("A1'", b3(&x, &y, p));
        self.b.mp(i, ax)
    }

    /// `X ⇒ Y` ⊢ `(a * X) ⇒ (a * Y)`
    pub fn fuse_mono_left(&mut self, i: usize, a: &Formula) -> usize {
        let (_, y) = split(&self.f(i));
        let pair = self.b.axiom("A11'", b2(a, &y));
        let swapped = self.permute(pair);
        let chained = self.compose(i, swapped);
        let back = self.permute(chained);
        self.uncurry(back)
    }

    /// `a * (b * c) ⇒ (a * b) * c`
    pub fn assoc(&mut self, a: &Formula, b: &Formula, c: &Formula) -> usize {
        let ab = Formula::fuse(a.clone(), b.clone());
        let d = Formula::fuse(ab.clone(), c.clone());
        let outer = self.b.axiom("A11'", b2(&ab, c));
        let lifted = self.lift(outer, b);
        let inner = self.b.axiom("A11'", b2(a, b));
        let abc = self.compose(inner, lifted);
        let un = self.b.axiom("A12'", b3(b, c, &d));
        let step = self.compose(abc, un);
        self.uncurry(step)
    }

    /// `φ² ⇒ (φ² * φ²)`, the contraction step of the deduction theorem.
    pub fn square_split(&mut self, phi: &Formula) -> usize {
        let pot = self.b.axiom("A18'", Bindings::new().phi(phi.clone()));
        let mono = self.fuse_mono_left(pot, phi);
        let up = self.compose(pot, mono);
        let sq = square(phi);
        let re = self.assoc(phi, phi, &sq);
        self.compose(up, re)
    }

    /// `φ² ⇒ φ`
    pub fn square_elim(&mut self, phi: &Formula) -> usize {
        let k = self.b.axiom("A3'", b2(phi, phi));
        self.uncurry(k)
    }

    /// From a proof of `ψ`, `φ² ⇒ ψ`.
    pub fn square_weaken(&mut self, psi_step: usize, phi: &Formula) -> usize {
        let once = self.weaken(psi_step, phi);
        let twice = self.weaken(once, phi);
        self.uncurry(twice)
    }
}

impl Default for Combinators<'_> {
    fn default() -> Self {
        Self::new()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DmtError {
    #[error("input proof is not accepted (first problem at step {0})")]
    Rejected(usize),
    #[error("`{0}` is not an assumption of the proof")]
    NotAnAssumption(Formula),
}

/// Turns a proof of `Γ ∪ {φ} ⊢ ψ` into a proof of `Γ ⊢ φ² ⇒ ψ`.
pub fn deduction_transform(p: &HilbertProof, phi: &Formula) -> Result<HilbertProof, DmtError> {
    let report = check_proof_sp(p);
    if !report.accepted() {
        return Err(DmtError::Rejected(report.first_rejection().map_or(0, |s| s.step)));
    }
    if !p.assumptions.contains(phi) {
        return Err(DmtError::NotAnAssumption(phi.clone()));
    }
    let gamma: Vec<Formula> = p.assumptions.iter().filter(|a| *a != phi).cloned().collect();
    let mut c = Combinators::new();
    let mut split_step = None;
    let mut image = Vec::with_capacity(p.steps.len());
    for step in &p.steps {
        let out = match &step.just {
            Justification::Hyp if &step.formula == phi => c.square_elim(phi),
            Justification::Hyp => {
                let h = c.b.hyp(step.formula.clone());
                c.square_weaken(h, phi)
            }
            Justification::Axiom(name, bind) => {
                let a = c.b.axiom(name, bind.clone());
                c.square_weaken(a, phi)
            }
            &Justification::Mp(i, j) => {
                let minor = image[i];
                let major = c.permute(image[j]);
                let doubled = c.compose(minor, major);
                let fused = c.uncurry(doubled);
                let t = *split_step.get_or_insert_with(|| c.square_split(phi));
                c.compose(t, fused)
            }
        };
        image.push(out);
    }
    let last = *image.last().expect("accepted proofs are nonempty");
    Ok(c.b.finish(gamma, last))
}

/// `(φ² ⇒ ψ) ⇒ (φ ⇒ (φ ⇒ ψ))`
pub fn bridge_to_weak(phi: &Formula, psi: &Formula) -> HilbertProof {
    let mut c = Combinators::new();
    let sq = square(phi);
    let ax = c.b.axiom("A1'", b3(&sq, psi, phi));
    let sw = c.permute(ax);
    let pair = c.b.axiom("A11'", b2(phi, phi));
    let comp = c.compose(pair, sw);
    let last = c.permute(comp);
    c.b.finish(vec![], last)
}

/// `(φ ⇒ (φ ⇒ ψ)) ⇒ (φ² ⇒ ψ)`
pub fn bridge_from_weak(phi: &Formula, psi: &Formula) -> HilbertProof {
    let mut c = Combinators::new();
    let last = c.b.axiom("A12'", b3(phi, phi, psi));
    c.b.finish(vec![], last)
}

pub fn fixtures() -> Vec<(&'static str, HilbertProof)> {
    let p = Formula::var("p");
    let q = Formula::var("q");
    let mut out = Vec::new();

    let mut c = Combinators::new();
    let h = c.b.hyp(q.clone());
    let w = c.weaken(h, &p);
    out.push(("weaken", c.b.finish(vec![q.clone()], w)));

    let mut c = Combinators::new();
    let s = c.square_elim(&p);
    out.push(("square-elim", c.b.finish(vec![], s)));

    let mut c = Combinators::new();
    let s = c.square_split(&p);
    out.push(("square-split", c.b.finish(vec![], s)));

    out.push(("bridge-to-weak", bridge_to_weak(&p, &q)));
    out.push(("bridge-from-weak", bridge_from_weak(&p, &q)));
    out
}

/// A random accepted derivation over at most four variables, at most
/// `max_steps` steps, whose assumptions include `phi` (the first one).
pub fn random_derivation(rng: &mut impl Rng, max_steps: usize) -> (HilbertProof, Formula) {
    let vars: Vec<Formula> = ["p", "q", "r", "s"].iter().map(|v| Formula::var(*v)).collect();
    let atom = |rng: &mut dyn rand::RngCore| vars.choose(rng).expect("nonempty").clone();
    let small = |rng: &mut dyn rand::RngCore| -> Formula {
        let a = atom(rng);
        match rng.gen_range(0..5) {
            0 => Formula::imp(a, atom(rng)),
            1 => Formula::not(a),
            2 => Formula::fuse(a, atom(rng)),
            _ => a,
        }
    };
    let phi = small(rng);
    let mut assumptions = vec![phi.clone()];
    for _ in 0..rng.gen_range(0..3) {
        let x = if rng.gen_bool(0.5) {
            Formula::imp(phi.clone(), small(rng))
        } else {
            small(rng)
        };
        if !assumptions.contains(&x) {
            assumptions.push(x);
        }
    }
    let mut b = ProofBuilder::new(calculus());
    let target = rng.gen_range(1..=max_steps);
    let mut guard = 0;
    while b.steps.len() < target && guard < 200 {
        guard += 1;
        let n = b.steps.len();
        // modus ponens whenever the dice and the proof allow it
        if n > 1 && rng.gen_bool(0.5) {
            let mut pairs = Vec::new();
            for j in 0..n {
                if let Some((a, c)) = b.formula(j).as_imp() {
                    if let Some(i) = (0..n).find(|&i| b.formula(i) == a) {
                        if !b.steps.iter().any(|s| &s.formula == c) {
                            pairs.push((i, j));
                        }
                    }
                }
            }
            if let Some(&(i, j)) = pairs.choose(rng) {
                b.mp(i, j);
                continue;
            }
        }
        let pick = |rng: &mut dyn rand::RngCore, b: &ProofBuilder| -> Formula {
            if b.steps.is_empty() || rng.gen_bool(0.5) {
                small(rng)
            } else {
                let f = &b.steps[rng.gen_range(0..b.steps.len())].formula;
                if f.size() <= 7 {
                    f.clone()
                } else {
                    small(rng)
                }
            }
        };
        match rng.gen_range(0..4) {
            0 => {
                let h = assumptions.choose(rng).expect("nonempty").clone();
                b.hyp(h);
            }
            1 => {
                // A3' on an existing step sets up a later MP
                let x = pick(rng, &b);
                let y = atom(rng);
                b.axiom("A3'", b2(&x, &y));
            }
            _ => {
                let (name, schema) = AXIOMS.choose(rng).expect("nonempty");
                let vars = parse_any(schema).expect("axiom parses");
                let mut bind = Bindings::new();
                for v in vars.vars() {
                    bind = bind.bind(v, pick(rng, &b));
                }
                b.axiom(name, bind);
            }
        }
    }
    let last = b.steps.len() - 1;
    (b.finish(assumptions, last), phi)
}

pub fn random_suite(seed: u64, count: usize, max_steps: usize) -> Vec<(HilbertProof, Formula)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| random_derivation(&mut rng, max_steps)).collect()
}
