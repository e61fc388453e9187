mod common;

use common::{f, formula_strategy};
use possibilist_core::c1::{
    all_bivaluations, c1_entails, c1_valid, find_countermodel, hilbert_derive_bounded, EvaluationSet,
};
use possibilist_core::classical::classical_valid;
use possibilist_core::formula::Connective;
use possibilist_core::{Config, Formula};
use proptest::prelude::*;
use std::sync::Arc;

/// Direct reading of the valuation conditions, independent of the clause
/// encoding: checks one full assignment to the evaluation set.
fn admissible(set: &EvaluationSet, v: &[bool], weak: bool) -> bool {
    let val = |g: &Formula| set.position(g).map(|i| v[i]);
    let well_behaved = |g: &Formula| match (val(g), val(&g.negated())) {
        (Some(a), Some(b)) => Some(!(a && b)),
        _ => None,
    };
    for (i, m) in set.members().iter().enumerate() {
        let x = v[i];
        if let Some(nx) = val(&m.negated()) {
            if !x && !nx {
                return false;
            }
        }
        match m {
            Formula::Not(inner) => {
                if let Formula::Not(chi) = inner.as_ref() {
                    let c = val(chi).expect("subformula");
                    if (weak && x && !c) || (!weak && x != c) {
                        return false;
                    }
                }
                if let Some(psi) = m.circ_operand() {
                    if x && val(psi) == Some(true) && val(&psi.negated()) == Some(true) {
                        return false;
                    }
                }
            }
            Formula::Atom(_) => {}
            _ => {
                let (c, a, b) = m.as_binary().expect("binary");
                if x != c.eval(val(a).unwrap(), val(b).unwrap()) {
                    return false;
                }
                if set.in_closure(m) {
                    if let (Some(true), Some(true), Some(false)) = (well_behaved(a), well_behaved(b), well_behaved(m)) {
                        return false;
                    }
                }
            }
        }
    }
    true
}

fn brute_force_models(set: &EvaluationSet, weak: bool) -> Vec<Vec<bool>> {
    let n = set.len();
    assert!(n <= 16, "oracle limited to small sets");
    (0u32..1 << n)
        .map(|bits| (0..n).map(|i| bits >> i & 1 == 1).collect::<Vec<bool>>())
        .filter(|v| admissible(set, v, weak))
        .collect()
}

fn small_config(weak: bool) -> Config {
    Config { weak_negation: weak, max_evalset: 256, ..Config::default() }
}

#[test]
fn enumeration_matches_brute_force_on_fixed_sets() {
    for text in ["p", "!p", "p & q", "p^", "!!p", "(p -> q) | !q", "!(p & q)"] {
        for weak in [false, true] {
            let set = Arc::new(EvaluationSet::build(&[f(text)], 64).unwrap());
            let models = all_bivaluations(Arc::clone(&set), &small_config(weak), 1 << 16).unwrap();
            assert_eq!(models.len(), brute_force_models(&set, weak).len(), "{text} weak={weak}");
        }
    }
}

#[test]
fn known_non_theorems_and_theorems() {
    let cfg = Config::default();
    assert!(!c1_valid(&f("!(p & !p)"), &cfg).unwrap());
    assert!(!c1_entails(&[f("!p"), f("!q")], &f("!(p | q)"), &cfg).unwrap());
    assert!(!c1_entails(&[f("p -> q"), f("!q")], &f("!p"), &cfg).unwrap());
    assert!(!c1_entails(&[f("p | q"), f("!p")], &f("q"), &cfg).unwrap());
    assert!(c1_valid(&f("(p | q) <-> ((p -> q) -> q)"), &cfg).unwrap());
    assert!(!c1_valid(&f("!(p | q) <-> !((p -> q) -> q)"), &cfg).unwrap());
    // well-behaved atoms restore the classical rules
    assert!(c1_entails(&[f("p -> q"), f("!q"), f("q^")], &f("!p"), &cfg).unwrap());
    assert!(c1_entails(&[f("p | q"), f("!p"), f("p^")], &f("q"), &cfg).unwrap());
}

#[test]
fn double_negation_depends_on_c2_direction() {
    let intro = f("p -> !!p");
    assert!(c1_valid(&intro, &small_config(false)).unwrap());
    assert!(!c1_valid(&intro, &small_config(true)).unwrap());
    assert!(c1_valid(&f("!!p -> p"), &small_config(true)).unwrap());
}

#[test]
fn finite_instantiation_is_complete_on_the_compound_case() {
    // needs well-behavedness of p & q to propagate from its parts
    let premises = [f("p & q"), f("!(p & q)"), f("!p -> r"), f("!q -> r")];
    assert!(c1_entails(&premises, &f("r"), &Config::default()).unwrap());
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 48, ..ProptestConfig::default() })]

    #[test]
    fn solver_agrees_with_brute_force(
        premises in proptest::collection::vec(formula_strategy(&["p", "q"], 2), 0..2),
        goal in formula_strategy(&["p", "q"], 2),
        weak in any::<bool>(),
    ) {
        let inputs: Vec<Formula> = premises.iter().cloned().chain([goal.clone()]).collect();
        let set = EvaluationSet::build(&inputs, 256).unwrap();
        prop_assume!(set.len() <= 14);
        let oracle_counter = brute_force_models(&set, weak).into_iter().any(|v| {
            premises.iter().all(|p| v[set.position(p).unwrap()]) && !v[set.position(&goal).unwrap()]
        });
        let found = find_countermodel(&premises, &goal, &small_config(weak)).unwrap();
        prop_assert_eq!(found.is_some(), oracle_counter);
    }

    #[test]
    fn countermodels_satisfy_every_condition(
        premises in proptest::collection::vec(formula_strategy(&["p", "q", "r"], 3), 0..3),
        goal in formula_strategy(&["p", "q", "r"], 3),
        weak in any::<bool>(),
    ) {
        if let Some(model) = find_countermodel(&premises, &goal, &small_config(weak)).unwrap() {
            prop_assert!(model.violations(weak).is_empty(), "{:?}", model.violations(weak));
            for p in &premises {
                prop_assert_eq!(model.value(p), Some(true));
            }
            prop_assert_eq!(model.value(&goal), Some(false));
            let again = find_countermodel(&premises, &goal, &small_config(weak)).unwrap().unwrap();
            prop_assert_eq!(again.values().collect::<Vec<_>>(), model.values().collect::<Vec<_>>());
        }
    }

    /// Padding the evaluation set with an extra theorem premise never changes a verdict.
    #[test]
    fn verdicts_do_not_depend_on_the_evaluation_set(
        premises in proptest::collection::vec(formula_strategy(&["p", "q", "r"], 2), 0..3),
        goal in formula_strategy(&["p", "q", "r"], 2),
        pad in formula_strategy(&["p", "q", "r"], 3),
    ) {
        let cfg = small_config(false);
        let base = c1_entails(&premises, &goal, &cfg).unwrap();
        let mut padded = premises.clone();
        padded.push(Formula::or(pad.clone(), pad.negated()));
        padded.push(Formula::not(Formula::not(Formula::implies(pad.clone(), pad))));
        prop_assert_eq!(c1_entails(&padded, &goal, &cfg).unwrap(), base);
    }

    #[test]
    fn c1_theorems_are_classical(goal in formula_strategy(&["p", "q"], 3)) {
        if c1_valid(&goal, &small_config(false)).unwrap() {
            prop_assert!(classical_valid(&goal, &Config::default()).unwrap());
        }
        if c1_valid(&goal, &small_config(true)).unwrap() {
            prop_assert!(c1_valid(&goal, &small_config(false)).unwrap());
        }
    }

    #[test]
    fn reflexive_monotone_and_closed_under_mp(
        premises in proptest::collection::vec(formula_strategy(&["p", "q", "r"], 2), 1..3),
        extra in formula_strategy(&["p", "q", "r"], 2),
        phi in formula_strategy(&["p", "q", "r"], 2),
        psi in formula_strategy(&["p", "q", "r"], 2),
    ) {
        let cfg = small_config(false);
        for p in &premises {
            prop_assert!(c1_entails(&premises, p, &cfg).unwrap());
        }
        let mut grown = premises.clone();
        grown.push(extra);
        if c1_entails(&premises, &phi, &cfg).unwrap() {
            prop_assert!(c1_entails(&grown, &phi, &cfg).unwrap());
        }
        let imp = Formula::implies(phi.clone(), psi.clone());
        if c1_entails(&premises, &phi, &cfg).unwrap() && c1_entails(&premises, &imp, &cfg).unwrap() {
            prop_assert!(c1_entails(&premises, &psi, &cfg).unwrap());
        }
    }

    #[test]
    fn hilbert_derivations_are_valid(goal in formula_strategy(&["p", "q"], 2)) {
        if let Some(d) = hilbert_derive_bounded(&goal, 2, &Config::default()).unwrap() {
            prop_assert!(d.verify());
            prop_assert!(c1_valid(&goal, &Config::default()).unwrap());
        }
    }
}

#[test]
fn connectives_are_truth_functional_in_every_model() {
    let set = Arc::new(EvaluationSet::build(&[f("(p & q) | (p -> !q)")], 64).unwrap());
    for model in all_bivaluations(Arc::clone(&set), &Config::default(), 1 << 16).unwrap() {
        for m in set.members() {
            if let Some((c, a, b)) = m.as_binary() {
                let want = c.eval(model.value(a).unwrap(), model.value(b).unwrap());
                assert_eq!(model.value(m), Some(want));
                assert!(Connective::ALL.contains(&c));
            }
        }
    }
}
