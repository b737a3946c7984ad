use std::sync::OnceLock;

use proptest::prelude::*;

use nelson::algebra::{check_cibrl, FiniteAlgebra};
use nelson::calculus_s::{check_proof, fixtures as s_fixtures, Mode};
use nelson::calculus_s_prime::{check_proof_sp, deduction_transform, fixtures as sp_fixtures, random_suite, square};
use nelson::formula::{context_imp, parse, parse_any, power, Connective, Formula, Lang, Substitution};
use nelson::hilbert::HilbertProof;
use nelson::n4::n4_hilbert_fixtures;
use nelson::search::{
    canonical_form, enumerate, find_countermodel_in, isomorphic, residuated_up_to, Class, EnumOptions,
};
use nelson::term::{Equation, Quasiequation, Term};

const VARS: [&str; 4] = ["p", "q", "r", "s"];

fn formula(lang: Lang) -> impl Strategy<Value = Formula> {
    let mut leaves = vec![prop::sample::select(&VARS[..]).prop_map(Formula::var).boxed()];
    if lang != Lang::N4 {
        leaves.push(Just(Formula::Bot).boxed());
    }
    if lang == Lang::SPrime {
        leaves.push(Just(Formula::Top).boxed());
    }
    let connectives: Vec<Connective> = [
        Connective::And,
        Connective::Or,
        Connective::Imp,
        Connective::WeakImp,
        Connective::Fuse,
    ]
    .into_iter()
    .filter(|&c| lang.admits_connective(c))
    .collect();
    prop::strategy::Union::new(leaves).prop_recursive(4, 32, 2, move |inner| {
        prop_oneof![
            inner.clone().prop_map(Formula::not),
            (prop::sample::select(connectives.clone()), inner.clone(), inner)
                .prop_map(|(c, l, r)| Formula::bin(c, l, r)),
        ]
    })
}

fn substitution() -> impl Strategy<Value = Substitution> {
    prop::collection::btree_map(prop::sample::select(&VARS[..]), formula(Lang::SPrime), 0..3)
        .prop_map(|m| m.into_iter().map(|(k, v)| (k.to_string(), v)).collect())
}

fn cibrls() -> &'static [FiniteAlgebra] {
    static ALL: OnceLock<Vec<FiniteAlgebra>> = OnceLock::new();
    ALL.get_or_init(|| residuated_up_to(Class::Cibrl, 4))
}

fn s_prime_algebras() -> &'static [FiniteAlgebra] {
    static ALL: OnceLock<Vec<FiniteAlgebra>> = OnceLock::new();
    ALL.get_or_init(|| residuated_up_to(Class::SPrime, 4))
}

/// A CIBRL with its inner elements relabelled; bottom and top stay put.
fn relabelled() -> impl Strategy<Value = (FiniteAlgebra, Vec<usize>)> {
    prop::sample::select(cibrls().to_vec()).prop_flat_map(|a| {
        let n = a.size();
        let inner: Vec<usize> = (1..n.saturating_sub(1)).collect();
        (Just(a), Just(inner).prop_shuffle()).prop_map(move |(a, inner)| {
            let perm: Vec<usize> = if n == 1 {
                vec![0]
            } else {
                std::iter::once(0).chain(inner).chain(std::iter::once(n - 1)).collect()
            };
            (a, perm)
        })
    })
}

fn mutate_hilbert(p: &HilbertProof, i: usize) -> HilbertProof {
    let mut m = p.clone();
    m.steps[i].formula = Formula::not(m.steps[i].formula.clone());
    m
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn printing_then_parsing_is_identity(f in formula(Lang::SPrime)) {
        let text = f.to_string();
        prop_assert_eq!(parse(&text, Lang::SPrime).unwrap(), f);
    }

    #[test]
    fn n4_formulas_round_trip(f in formula(Lang::N4)) {
        prop_assert_eq!(parse(&f.to_string(), Lang::N4).unwrap(), f);
    }

    #[test]
    fn substitutions_compose(f in formula(Lang::SPrime), s in substitution(), t in substitution()) {
        prop_assert_eq!(s.then(&t).apply(&f), t.apply(&s.apply(&f)));
    }

    #[test]
    fn empty_substitution_is_identity(f in formula(Lang::SPrime)) {
        prop_assert_eq!(Substitution::new().apply(&f), f);
    }

    #[test]
    fn context_depth_counts_the_context(gamma in prop::collection::vec(formula(Lang::S), 0..5)) {
        let phi = Formula::var("goal");
        prop_assert_eq!(context_imp(&gamma, phi).imp_spine_depth(), gamma.len());
    }

    #[test]
    fn powers_repeat_their_base(n in 1usize..8, v in prop::sample::select(&VARS[..])) {
        let x = Formula::var(v);
        let p = power(&x, n, Lang::SPrime).unwrap();
        prop_assert_eq!(p.occurrences(&x), n);
        prop_assert_eq!(parse_any(&p.to_string()).unwrap(), p);
    }

    #[test]
    fn mutations_only_disturb_dependent_steps(k in any::<prop::sample::Index>(), j in any::<prop::sample::Index>()) {
        let fixtures = s_fixtures();
        let p = &fixtures[k.index(fixtures.len())].proof;
        let i = j.index(p.steps.len());
        let mut m = p.clone();
        m.steps[i].formula = Formula::not(m.steps[i].formula.clone());
        let before = check_proof(p, Mode::Standard);
        let after = check_proof(&m, Mode::Standard);
        prop_assert!(!after.accepted());
        prop_assert!(!after.steps[i].accepted);
        for (s, step) in p.steps.iter().enumerate() {
            if s != i && !step.premises.contains(&i) {
                prop_assert_eq!(before.steps[s].accepted, after.steps[s].accepted);
            }
        }
    }

    #[test]
    fn hilbert_mutations_are_rejected(k in any::<prop::sample::Index>(), j in any::<prop::sample::Index>()) {
        let sp = sp_fixtures();
        let (_, p) = &sp[k.index(sp.len())];
        prop_assert!(!check_proof_sp(&mutate_hilbert(p, j.index(p.steps.len()))).accepted());
        let n4 = n4_hilbert_fixtures();
        let (_, p) = &n4[k.index(n4.len())];
        let calc = nelson::n4::calculus();
        prop_assert!(!calc.check(&mutate_hilbert(p, j.index(p.steps.len()))).accepted());
    }

    #[test]
    fn relabelling_preserves_the_class((a, perm) in relabelled()) {
        let b = a.permuted(&perm);
        prop_assert!(check_cibrl(&b).passed());
        prop_assert!(isomorphic(&a, &b));
        prop_assert_eq!(canonical_form(&a).map(|c| c.to_file_string()), canonical_form(&b).map(|c| c.to_file_string()));
    }

    #[test]
    fn countermodels_refute(l in formula(Lang::SPrime), r in formula(Lang::SPrime)) {
        let mut pool = Vec::new();
        let e = Equation::new(Term::from_formula(&l, &mut pool), Term::from_formula(&r, &mut pool));
        let q = Quasiequation::equation(pool, e.clone());
        match find_countermodel_in(&q, s_prime_algebras()) {
            Some((a, v)) => prop_assert!(!e.satisfied(a, &v).unwrap()),
            None => {
                for a in s_prime_algebras() {
                    prop_assert!(nelson::term::holds_equation(a, &e).unwrap());
                }
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn deduction_transform_is_accepted(seed in any::<u64>()) {
        for (p, phi) in random_suite(seed, 2, 15) {
            prop_assert!(check_proof_sp(&p).accepted());
            let q = deduction_transform(&p, &phi).unwrap();
            prop_assert!(check_proof_sp(&q).accepted());
            prop_assert_eq!(&q.goal, &Formula::imp(square(&phi), p.goal.clone()));
            prop_assert!(!q.assumptions.contains(&phi));
        }
    }

    #[test]
    fn enumeration_is_deterministic(jobs in 1usize..5, n in 1usize..5) {
        let class = Class::ALL[n % Class::ALL.len()];
        let dump = |jobs| -> Vec<String> {
            let opts = EnumOptions { jobs, ..Default::default() };
            enumerate(class, n, &opts).unwrap().algebras.iter().map(|a| a.to_file_string()).collect()
        };
        prop_assert_eq!(dump(1), dump(jobs));
    }
}
