//! Named properties of S-algebras and of squares in CIBRLs.

use serde::Serialize;

use crate::algebra::{check_law, three_potency, to_s_prime, FiniteAlgebra, LawOutcome};
use crate::search::{enumerate, AnyAlgebra, Class, EnumOptions};

/// Eleven properties every S-algebra has, read in the S signature with
/// `a ≤ b` iff `a ⇒ b = 1` and `a * b := ¬(a ⇒ ¬b)`.
pub const S_PROPERTIES: [&str; 11] = [
    "identity-and-top",
    "implication-order",
    "contraposition",
    "exchange",
    "double-negation",
    "fusion-monoid",
    "currying",
    "residuation",
    "3-potency",
    "lattice-order",
    "square-of-join",
];

pub fn s_algebra_properties(s: &FiniteAlgebra) -> Vec<LawOutcome> {
    let a = to_s_prime(s);
    let nm = &a.names;
    let one = a.top;
    let zero = a.bot;
    let le = |x: usize, y: usize| a.imp(x, y) == one;
    let sq = |x: usize| a.fuse(x, x);
    vec![
        check_law(S_PROPERTIES[0], nm, &["a"], |v| {
            a.imp(v[0], v[0]) == one && a.neg(zero) == one
        }),
        check_law(S_PROPERTIES[1], nm, &["a", "b", "c"], |v| {
            let (x, y, z) = (v[0], v[1], v[2]);
            le(x, x)
                && (!(le(x, y) && le(y, x)) || x == y)
                && (!(le(x, y) && le(y, z)) || le(x, z))
                && le(x, one)
                && le(zero, x)
        }),
        check_law(S_PROPERTIES[2], nm, &["a", "b"], |v| {
            a.imp(v[0], v[1]) == a.imp(a.neg(v[1]), a.neg(v[0]))
        }),
        check_law(S_PROPERTIES[3], nm, &["a", "b", "c"], |v| {
            a.imp(v[0], a.imp(v[1], v[2])) == a.imp(v[1], a.imp(v[0], v[2]))
        }),
        check_law(S_PROPERTIES[4], nm, &["a"], |v| {
            a.neg(a.neg(v[0])) == v[0] && a.imp(v[0], zero) == a.neg(v[0])
        }),
        check_law(S_PROPERTIES[5], nm, &["a", "b", "c"], |v| {
            let (x, y, z) = (v[0], v[1], v[2]);
            a.fuse(x, y) == a.fuse(y, x) && a.fuse(a.fuse(x, y), z) == a.fuse(x, a.fuse(y, z)) && a.fuse(x, one) == x
        }),
        check_law(S_PROPERTIES[6], nm, &["a", "b", "c"], |v| {
            a.imp(a.fuse(v[0], v[1]), v[2]) == a.imp(v[0], a.imp(v[1], v[2]))
        }),
        check_law(S_PROPERTIES[7], nm, &["a", "b", "c"], |v| {
            le(a.fuse(v[0], v[1]), v[2]) == le(v[1], a.imp(v[0], v[2]))
        }),
        check_law(S_PROPERTIES[8], nm, &["a"], |v| le(sq(v[0]), a.fuse(v[0], sq(v[0])))),
        check_law(S_PROPERTIES[9], nm, &["a", "b"], |v| {
            let (x, y) = (v[0], v[1]);
            le(x, y) == (a.meet(x, y) == x) && le(x, y) == (a.join(x, y) == y)
        }),
        check_law(S_PROPERTIES[10], nm, &["a", "b"], |v| {
            le(sq(a.join(v[0], v[1])), a.join(sq(v[0]), sq(v[1])))
        }),
    ]
}

pub const SQUARE_LAWS: [&str; 4] = [
    "fusion-distributes-over-join",
    "join-of-squares-idempotent",
    "square-absorbs-inner-square",
    "square-of-join",
];

/// Equations about squares, on a CIBRL with primitive fusion.
pub fn square_laws(a: &FiniteAlgebra) -> Vec<LawOutcome> {
    let nm = &a.names;
    let sq = |x: usize| a.fuse(x, x);
    vec![
        check_law(SQUARE_LAWS[0], nm, &["x", "y", "z"], |v| {
            a.fuse(a.join(v[0], v[1]), v[2]) == a.join(a.fuse(v[0], v[2]), a.fuse(v[1], v[2]))
        }),
        check_law(SQUARE_LAWS[1], nm, &["x", "y"], |v| {
            let j = a.join(sq(v[0]), sq(v[1]));
            j == sq(j)
        }),
        check_law(SQUARE_LAWS[2], nm, &["x", "y"], |v| {
            sq(a.join(v[0], sq(v[1]))) == sq(a.join(v[0], v[1]))
        }),
        check_law(SQUARE_LAWS[3], nm, &["x", "y"], |v| {
            sq(a.join(v[0], v[1])) == a.join(sq(v[0]), sq(v[1]))
        }),
    ]
}

/// Non-3-potent CIBRLs refuting a square law, with the witness.
#[derive(Clone, Debug, Serialize)]
pub struct SquareLawProbe {
    pub law: &'static str,
    pub max_size: usize,
    pub examined: usize,
    pub refuted_by: usize,
    /// Size and file dump of the first refuting algebra, with the witness.
    pub first: Option<(usize, String, String)>,
}

/// Looks among CIBRLs that are not 3-potent for failures of square law
/// `index`.
pub fn probe_without_3_potency(index: usize, max_size: usize) -> SquareLawProbe {
    let mut out = SquareLawProbe {
        law: SQUARE_LAWS[index],
        max_size,
        examined: 0,
        refuted_by: 0,
        first: None,
    };
    let opts = EnumOptions {
        ceiling: max_size.max(crate::search::DEFAULT_CEILING),
        ..Default::default()
    };
    for n in 1..=max_size {
        let r = enumerate(Class::Cibrl, n, &opts).expect("within ceiling");
        for a in r.algebras.iter().filter_map(AnyAlgebra::residuated) {
            if three_potency(a).holds {
                continue;
            }
            out.examined += 1;
            let l = &square_laws(a)[index];
            if !l.holds {
                out.refuted_by += 1;
                if out.first.is_none() {
                    let w = l.witness.as_ref().map(|w| w.to_string()).unwrap_or_default();
                    out.first = Some((n, a.to_file_string(), w));
                }
            }
        }
    }
    out
}

/// Theorems valid under every valuation, and MP preserving `1`, over a
/// family of algebras.
#[derive(Clone, Debug, Default, Serialize)]
pub struct SoundnessReport {
    pub algebras: usize,
    pub formulas_checked: usize,
    pub valuations: u64,
    /// One line per refuted formula or rule.
    pub violations: Vec<String>,
}

fn formula_valid(
    a: &FiniteAlgebra,
    f: &crate::formula::Formula,
    premises: &[crate::formula::Formula],
) -> Result<u64, String> {
    use crate::term::{for_each_valuation, Term};
    let mut pool = Vec::new();
    let t = Term::from_formula(f, &mut pool);
    let ps: Vec<Term> = premises.iter().map(|p| Term::from_formula(p, &mut pool)).collect();
    let mut count = 0;
    let mut bad = None;
    for_each_valuation(a.size(), pool.len(), |v| {
        count += 1;
        let val = |t: &Term| t.eval(a, v).expect("S′ signature");
        if ps.iter().all(|p| val(p) == a.top) && val(&t) != a.top {
            bad = Some(crate::term::Valuation::new(&pool, v, &a.names));
            return false;
        }
        true
    });
    match bad {
        Some(w) => Err(format!("`{f}` fails at {w}")),
        None => Ok(count),
    }
}

/// Every S fixture theorem (with its assumptions as premises) and every
/// S′ axiom takes value `1` in each S′-algebra up to `max_size`; modus
/// ponens preserves `1`.
pub fn soundness_sweep(max_size: usize) -> SoundnessReport {
    let mut r = SoundnessReport::default();
    let mut formulas: Vec<(crate::formula::Formula, Vec<crate::formula::Formula>)> = crate::calculus_s::fixtures()
        .into_iter()
        .map(|n| (n.proof.goal, n.proof.assumptions))
        .collect();
    formulas.extend(
        crate::calculus_s_prime::presentation()
            .axioms
            .iter()
            .map(|ax| (ax.conclusion.body.clone(), vec![])),
    );
    for a in crate::search::residuated_up_to(Class::SPrime, max_size) {
        r.algebras += 1;
        let s = crate::algebra::to_s_algebra(&a);
        for (f, prem) in &formulas {
            r.formulas_checked += 1;
            match formula_valid(&s, f, prem) {
                Ok(n) => r.valuations += n,
                Err(e) => r.violations.push(format!("size {}: {e}", a.size())),
            }
        }
        let mp = check_law("modus-ponens", &a.names, &["a", "b"], |v| {
            v[0] != a.top || a.imp(v[0], v[1]) != a.top || v[1] == a.top
        });
        if !mp.holds {
            r.violations
                .push(format!("size {}: MP fails at {:?}", a.size(), mp.witness));
        }
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{godel3, lukasiewicz3, to_s_algebra};

    #[test]
    fn l3_has_all_properties() {
        let s = to_s_algebra(&lukasiewicz3());
        for l in s_algebra_properties(&s) {
            assert!(l.holds, "{}", l.law);
        }
        for l in square_laws(&lukasiewicz3()) {
            assert!(l.holds, "{}", l.law);
        }
    }

    #[test]
    fn godel_is_not_involutive() {
        let s = to_s_algebra(&godel3());
        let failing: Vec<_> = s_algebra_properties(&s)
            .into_iter()
            .filter(|l| !l.holds)
            .map(|l| l.law)
            .collect();
        assert!(failing.contains(&"double-negation".to_string()));
        // Heyting algebras are idempotent, so every square law holds
        assert!(square_laws(&godel3()).iter().all(|l| l.holds));
    }

    #[test]
    fn sound_up_to_three() {
        let r = soundness_sweep(3);
        assert!(r.violations.is_empty(), "{:?}", r.violations);
        assert_eq!(r.algebras, 3);
    }

    #[test]
    fn probe_runs() {
        let p = probe_without_3_potency(3, 4);
        assert!(p.examined > 0);
    }
}
