#![allow(dead_code)]

use std::path::PathBuf;

use possibilist_core::defaults::{parse_defaults, RankedDefaults};
use possibilist_core::pkb::{parse_kb, PossibilisticKB};
use possibilist_core::{parse, Config, Formula, Level};

pub fn f(s: &str) -> Formula {
    parse(s).unwrap_or_else(|e| panic!("bad formula {s:?}: {e}"))
}

pub fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures").join(name)
}

pub fn load_kb(name: &str) -> PossibilisticKB {
    let text = std::fs::read_to_string(fixture(name)).unwrap();
    parse_kb(&text).unwrap()
}

pub fn load_defaults(name: &str) -> RankedDefaults {
    let text = std::fs::read_to_string(fixture(name)).unwrap();
    let (facts, rules) = parse_defaults(&text).unwrap();
    RankedDefaults::build(facts, rules, Config::default()).unwrap()
}

pub fn lv(s: &str) -> Level {
    s.parse().unwrap()
}

/// Formulas over `atoms` with at most `depth` nested connectives.
pub fn formula_strategy(atoms: &'static [&'static str], depth: u32) -> impl proptest::strategy::Strategy<Value = Formula> {
    use proptest::prelude::*;
    let leaf = proptest::sample::select(atoms).prop_map(Formula::atom);
    leaf.prop_recursive(depth, 16, 2, |inner| {
        prop_oneof![
            inner.clone().prop_map(Formula::not),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::and(a, b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::or(a, b)),
            (inner.clone(), inner).prop_map(|(a, b)| Formula::implies(a, b)),
        ]
    })
}

/// Small knowledge bases with weights on the quarter grid.
pub fn kb_strategy(
    logic: possibilist_core::Logic,
    atoms: &'static [&'static str],
    depth: u32,
    max_items: usize,
) -> impl proptest::strategy::Strategy<Value = PossibilisticKB> {
    use proptest::prelude::*;
    let weight = proptest::sample::select(vec!["1/4", "1/2", "3/4", "1"]).prop_map(lv);
    proptest::collection::vec((formula_strategy(atoms, depth), weight), 0..=max_items).prop_map(move |items| {
        PossibilisticKB::from_items(logic, items).with_config(Config { max_evalset: 512, ..Config::default() })
    })
}
