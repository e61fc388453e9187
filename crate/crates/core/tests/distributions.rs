mod common;

use std::collections::BTreeSet;
use std::sync::Arc;

use common::{f, load_kb};
use possibilist_core::possibility::{
    check_necessity_axioms, check_ordering_axioms, check_possibility_axioms, dual_of, induce, induced_ordering,
    AxiomSample, Induction, PossibilityDistribution, Universe,
};
use possibilist_core::sample::{quarter_levels, rng};
use possibilist_core::{Backend, Config, Formula};

fn queries() -> Vec<Formula> {
    ["p", "q", "!p", "p & q", "p | q", "p -> q", "!(p & q)", "p | !p", "p^"].into_iter().map(f).collect()
}

fn with_negations(qs: &[Formula]) -> Vec<Formula> {
    let mut all: BTreeSet<Formula> = qs.iter().cloned().collect();
    all.extend(qs.iter().map(Formula::negated));
    all.into_iter().collect()
}

fn c1_universe() -> Arc<Universe> {
    Arc::new(Universe::c1(&with_negations(&queries()), &Config::default(), 1 << 16).unwrap())
}

fn classical_universe() -> Arc<Universe> {
    let atoms = ["p", "q"].iter().map(|s| s.to_string()).collect();
    Arc::new(Universe::classical(atoms, &Config::default()).unwrap())
}

#[test]
fn duality_identities_hold_exactly() {
    let qs = queries();
    let negs: Vec<Formula> = qs.iter().map(Formula::negated).collect();
    for universe in [c1_universe(), classical_universe()] {
        let mut r = rng(3);
        for _ in 0..40 {
            let dist = PossibilityDistribution::random(Arc::clone(&universe), &quarter_levels(), &mut r);
            let f1n = induce(&dist, Induction::F1, &negs).unwrap();
            let f3n = induce(&dist, Induction::F3, &negs).unwrap();
            let f2 = induce(&dist, Induction::F2, &qs).unwrap();
            let f4 = induce(&dist, Induction::F4, &qs).unwrap();
            for (q, nq) in qs.iter().zip(&negs) {
                assert_eq!(f4.get(q), f1n.get(nq).complement());
                assert_eq!(f2.get(q), f3n.get(nq).complement());
            }
            // the dual of the f1 map on negations is the f4 map
            let all = with_negations(&qs);
            let f1_all = induce(&dist, Induction::F1, &all).unwrap();
            assert_eq!(dual_of(&f1_all, &qs).unwrap().iter().collect::<Vec<_>>(), f4.iter().collect::<Vec<_>>());
        }
    }
}

#[test]
fn prop_11_inequalities_in_c1() {
    let universe = c1_universe();
    let qs = queries();
    let mut r = rng(5);
    let mut strict = 0;
    for _ in 0..60 {
        let dist = PossibilityDistribution::random(Arc::clone(&universe), &quarter_levels(), &mut r);
        let m = |k| induce(&dist, k, &qs).unwrap();
        let (f1, f2, f3, f4) = (m(Induction::F1), m(Induction::F2), m(Induction::F3), m(Induction::F4));
        for q in &qs {
            assert!(f2.get(q) <= f1.get(q), "{q}");
            assert!(f4.get(q) <= f3.get(q), "{q}");
            strict += (f2.get(q) < f1.get(q)) as usize;
        }
    }
    // paraconsistent valuations make the inequality strict somewhere
    assert!(strict > 0);
}

#[test]
fn classical_inductions_coincide() {
    let universe = classical_universe();
    let qs = queries();
    let mut r = rng(9);
    for _ in 0..40 {
        let dist = PossibilityDistribution::random(Arc::clone(&universe), &quarter_levels(), &mut r);
        let m = |k| induce(&dist, k, &qs).unwrap();
        assert_eq!(m(Induction::F1), m(Induction::F2));
        assert_eq!(m(Induction::F3), m(Induction::F4));
    }
}

fn classical_sample() -> AxiomSample {
    let carrier: Vec<Formula> = ["p", "q", "!p", "p & q", "q & p", "p | q", "!!p", "p -> q", "p | !p", "p & !p"]
        .into_iter()
        .map(f)
        .collect();
    let mut raw = Vec::new();
    for (i, a) in carrier.iter().enumerate() {
        for b in &carrier[i + 1..] {
            raw.push((a.clone(), b.clone()));
        }
    }
    AxiomSample::classify(&raw, &Backend::classical()).unwrap()
}

#[test]
fn classical_induced_maps_pass_both_checkers() {
    let universe = classical_universe();
    let sample = classical_sample();
    assert!(!sample.refutable.is_empty() && !sample.theorems.is_empty());
    let nq = sample.necessity_queries();
    let pq = sample.possibility_queries();
    let backend = Backend::classical();
    let mut r = rng(21);
    for _ in 0..20 {
        let dist = PossibilityDistribution::random(Arc::clone(&universe), &quarter_levels(), &mut r);
        let n = check_necessity_axioms(&induce(&dist, Induction::F1, &nq).unwrap(), &backend, &sample).unwrap();
        assert!(n.all_passed(), "{n}");
        let p = check_possibility_axioms(&induce(&dist, Induction::F4, &pq).unwrap(), &backend, &sample).unwrap();
        assert!(p.all_passed(), "{p}");
        let p3 = check_possibility_axioms(&induce(&dist, Induction::F3, &pq).unwrap(), &backend, &sample).unwrap();
        assert!(p3.all_passed(), "{p3}");
    }
}

/// f2 over C1 distributions: a paraconsistent valuation can make a theorem's
/// negation true, so Taut can fail for f2 while f1 keeps it.
#[test]
fn f2_over_c1_is_checked_against_f1() {
    let qs = ["p | !p", "p", "q", "p & q"].into_iter().map(f).collect::<Vec<_>>();
    let universe = Arc::new(Universe::c1(&with_negations(&qs), &Config::default(), 1 << 16).unwrap());
    let sample = AxiomSample { theorems: vec![f("p | !p")], pairs: vec![(f("p"), f("q"))], ..AxiomSample::default() };
    let weights = vec![possibilist_core::Level::ONE; universe.len()];
    let dist = PossibilityDistribution::new(Arc::clone(&universe), weights).unwrap();
    let backend = Backend::c1();
    let f1 = check_necessity_axioms(&induce(&dist, Induction::F1, &sample.necessity_queries()).unwrap(), &backend, &sample).unwrap();
    assert!(f1.all_passed(), "{f1}");
    let f2 = check_necessity_axioms(&induce(&dist, Induction::F2, &sample.necessity_queries()).unwrap(), &backend, &sample).unwrap();
    assert!(!f2.passed("Taut"), "{f2}");
}

#[test]
fn f1_orderings_pass_the_ordering_axioms() {
    let universe = c1_universe();
    let carrier = queries();
    let backend = Backend::c1();
    let mut r = rng(31);
    for _ in 0..20 {
        let dist = PossibilityDistribution::random(Arc::clone(&universe), &quarter_levels(), &mut r);
        let m = induce(&dist, Induction::F1, &carrier).unwrap();
        let report = check_ordering_axioms(&induced_ordering(&m, &carrier).unwrap(), &backend).unwrap();
        assert!(report.all_passed(), "{report}");
    }
}

#[test]
fn witness_closure_ordering() {
    let kb = load_kb("witness.pkb");
    let carrier = [f("female"), f("glasses"), f("!glasses")];
    let rel = induced_ordering(&kb.closure_map(&carrier).unwrap(), &carrier).unwrap();
    assert_eq!(rel.equivalent(&carrier[0], &carrier[2]), Some(true));
    assert_eq!(rel.geq(&carrier[2], &carrier[1]), Some(true));
    assert_eq!(rel.geq(&carrier[1], &carrier[2]), Some(false));
}

#[test]
fn classical_dual_is_an_involution() {
    let universe = classical_universe();
    let base = [f("p"), f("p & q")];
    let all: Vec<Formula> = base.iter().flat_map(|q| [q.clone(), q.negated(), q.negated().negated()]).collect();
    let mut r = rng(2);
    let dist = PossibilityDistribution::random(universe, &quarter_levels(), &mut r);
    let m = induce(&dist, Induction::F1, &all).unwrap();
    let outer: Vec<Formula> = base.iter().flat_map(|q| [q.clone(), q.negated()]).collect();
    let once = dual_of(&m, &outer).unwrap();
    let twice = dual_of(&once, &base).unwrap();
    for q in &base {
        assert_eq!(twice.get(q), m.get(q));
    }
}
