//! Bounded forward-chaining search for Hilbert derivations in the positive
//! fragment plus excluded middle and double-negation elimination, with modus
//! ponens as the only rule. Used as a soundness oracle for the semantic
//! decision procedure, never as the decision procedure itself.

use std::collections::HashMap;
use std::fmt;

use crate::config::Config;
use crate::error::{Error, Result};
use crate::formula::Formula;

/// Cap on distinct formulas held by one search.
const MAX_THEOREMS: usize = 400_000;

/// Metavariable placeholders; `?` cannot appear in a parsed atom name.
fn meta(i: usize) -> Formula {
    Formula::atom(format!("?{i}"))
}

fn meta_index(f: &Formula) -> Option<usize> {
    match f {
        Formula::Atom(name) => name.strip_prefix('?').and_then(|n| n.parse().ok()),
        _ => None,
    }
}

#[derive(Clone, Debug)]
pub struct AxiomSchema {
    pub number: usize,
    pub arity: usize,
    pattern: Formula,
}

impl AxiomSchema {
    pub fn instantiate(&self, args: &[Formula]) -> Formula {
        assert_eq!(args.len(), self.arity, "axiom {} takes {} formulas", self.number, self.arity);
        substitute(&self.pattern, args)
    }

    /// Metavariable bindings when `f` is an instance of this schema.
    pub fn match_instance(&self, f: &Formula) -> Option<Vec<Formula>> {
        let mut bindings: Vec<Option<Formula>> = vec![None; self.arity];
        if unify(&self.pattern, f, &mut bindings) {
            bindings.into_iter().collect()
        } else {
            None
        }
    }
}

fn substitute(pattern: &Formula, args: &[Formula]) -> Formula {
    if let Some(i) = meta_index(pattern) {
        return args[i].clone();
    }
    match pattern {
        Formula::Atom(_) => pattern.clone(),
        Formula::Not(a) => Formula::not(substitute(a, args)),
        Formula::And(a, b) => Formula::and(substitute(a, args), substitute(b, args)),
        Formula::Or(a, b) => Formula::or(substitute(a, args), substitute(b, args)),
        Formula::Implies(a, b) => Formula::implies(substitute(a, args), substitute(b, args)),
    }
}

fn unify(pattern: &Formula, f: &Formula, bindings: &mut [Option<Formula>]) -> bool {
    if let Some(i) = meta_index(pattern) {
        return match &bindings[i] {
            Some(bound) => bound == f,
            None => {
                bindings[i] = Some(f.clone());
                true
            }
        };
    }
    match (pattern, f) {
        (Formula::Not(a), Formula::Not(b)) => unify(a, b, bindings),
        (Formula::And(a1, b1), Formula::And(a2, b2))
        | (Formula::Or(a1, b1), Formula::Or(a2, b2))
        | (Formula::Implies(a1, b1), Formula::Implies(a2, b2)) => unify(a1, a2, bindings) && unify(b1, b2, bindings),
        (Formula::Atom(x), Formula::Atom(y)) => x == y,
        _ => false,
    }
}

/// The ten axiom schemas of C1's Hilbert presentation.
pub fn axiom_schemas() -> Vec<AxiomSchema> {
    let (a, b, c) = (meta(0), meta(1), meta(2));
    let imp = Formula::implies;
    let patterns = vec![
        imp(a.clone(), imp(b.clone(), a.clone())),
        imp(
            imp(a.clone(), b.clone()),
            imp(imp(a.clone(), imp(b.clone(), c.clone())), imp(a.clone(), c.clone())),
        ),
        imp(Formula::and(a.clone(), b.clone()), a.clone()),
        imp(Formula::and(a.clone(), b.clone()), b.clone()),
        imp(a.clone(), imp(b.clone(), Formula::and(a.clone(), b.clone()))),
        imp(a.clone(), Formula::or(a.clone(), b.clone())),
        imp(a.clone(), Formula::or(b.clone(), a.clone())),
        imp(
            imp(a.clone(), c.clone()),
            imp(imp(b.clone(), c.clone()), imp(Formula::or(a.clone(), b.clone()), c.clone())),
        ),
        Formula::or(a.clone(), Formula::not(a.clone())),
        imp(Formula::not(Formula::not(a.clone())), a.clone()),
    ];
    patterns
        .into_iter()
        .enumerate()
        .map(|(i, pattern)| {
            let arity = (0..3).filter(|k| contains_meta(&pattern, *k)).count();
            AxiomSchema { number: i + 1, arity, pattern }
        })
        .collect()
}

fn contains_meta(f: &Formula, k: usize) -> bool {
    if meta_index(f) == Some(k) {
        return true;
    }
    match f {
        Formula::Atom(_) => false,
        Formula::Not(a) => contains_meta(a, k),
        Formula::And(a, b) | Formula::Or(a, b) | Formula::Implies(a, b) => contains_meta(a, k) || contains_meta(b, k),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Justification {
    /// Instance of the numbered axiom schema.
    Axiom(usize),
    /// From the steps at these indices: `minor` and `minor -> formula`.
    ModusPonens { minor: usize, major: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Step {
    pub formula: Formula,
    pub justification: Justification,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Derivation {
    pub steps: Vec<Step>,
}

impl Derivation {
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn conclusion(&self) -> Option<&Formula> {
        self.steps.last().map(|s| &s.formula)
    }

    /// Checks every step against the schemas and the modus ponens rule.
    pub fn verify(&self) -> bool {
        let schemas = axiom_schemas();
        self.steps.iter().enumerate().all(|(i, step)| match step.justification {
            Justification::Axiom(n) => {
                schemas.get(n.wrapping_sub(1)).is_some_and(|s| s.match_instance(&step.formula).is_some())
            }
            Justification::ModusPonens { minor, major } => {
                minor < i
                    && major < i
                    && self.steps[major].formula
                        == Formula::implies(self.steps[minor].formula.clone(), step.formula.clone())
            }
        })
    }
}

impl fmt::Display for Derivation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, step) in self.steps.iter().enumerate() {
            match step.justification {
                Justification::Axiom(n) => writeln!(f, "{:>3}. {}    [A{n}]", i + 1, step.formula)?,
                Justification::ModusPonens { minor, major } => {
                    writeln!(f, "{:>3}. {}    [MP {}, {}]", i + 1, step.formula, minor + 1, major + 1)?
                }
            }
        }
        Ok(())
    }
}

#[derive(Clone, Copy)]
enum Origin {
    Axiom(usize),
    Mp(usize, usize),
}

struct Store {
    formulas: Vec<Formula>,
    origins: Vec<Origin>,
    index: HashMap<Formula, usize>,
}

impl Store {
    fn insert(&mut self, f: Formula, origin: Origin) -> Result<()> {
        if self.index.contains_key(&f) {
            return Ok(());
        }
        if self.formulas.len() >= MAX_THEOREMS {
            return Err(Error::ResourceExceeded(format!("Hilbert search holds more than {MAX_THEOREMS} formulas")));
        }
        self.index.insert(f.clone(), self.formulas.len());
        self.formulas.push(f);
        self.origins.push(origin);
        Ok(())
    }

    fn trace(&self, target: usize) -> Derivation {
        let mut order = Vec::new();
        let mut seen = HashMap::new();
        self.visit(target, &mut seen, &mut order);
        let steps = order
            .iter()
            .map(|&id| Step {
                formula: self.formulas[id].clone(),
                justification: match self.origins[id] {
                    Origin::Axiom(n) => Justification::Axiom(n),
                    Origin::Mp(minor, major) => Justification::ModusPonens { minor: seen[&minor], major: seen[&major] },
                },
            })
            .collect();
        Derivation { steps }
    }

    fn visit(&self, id: usize, seen: &mut HashMap<usize, usize>, order: &mut Vec<usize>) {
        if seen.contains_key(&id) {
            return;
        }
        if let Origin::Mp(minor, major) = self.origins[id] {
            self.visit(minor, seen, order);
            self.visit(major, seen, order);
        }
        seen.insert(id, order.len());
        order.push(id);
    }
}

/// Searches for a derivation of `goal` using at most `depth` rounds of modus
/// ponens over axiom instances whose metavariables range over the
/// subformulas of `goal`.
pub fn hilbert_derive_bounded(goal: &Formula, depth: usize, config: &Config) -> Result<Option<Derivation>> {
    if depth == 0 || depth > config.max_derivation_depth {
        return Err(Error::DepthBound { depth, max: config.max_derivation_depth });
    }
    let schemas = axiom_schemas();
    for schema in &schemas {
        if schema.match_instance(goal).is_some() {
            let step = Step { formula: goal.clone(), justification: Justification::Axiom(schema.number) };
            return Ok(Some(Derivation { steps: vec![step] }));
        }
    }

    let pool: Vec<Formula> = goal.subformulas().into_iter().collect();
    let mut store = Store { formulas: Vec::new(), origins: Vec::new(), index: HashMap::new() };
    for schema in &schemas {
        let mut args = vec![pool[0].clone(); schema.arity];
        let mut counters = vec![0usize; schema.arity];
        loop {
            for (slot, &c) in args.iter_mut().zip(&counters) {
                *slot = pool[c].clone();
            }
            store.insert(schema.instantiate(&args), Origin::Axiom(schema.number))?;
            // odometer over pool^arity
            let mut k = 0;
            while k < counters.len() {
                counters[k] += 1;
                if counters[k] < pool.len() {
                    break;
                }
                counters[k] = 0;
                k += 1;
            }
            if k == counters.len() {
                break;
            }
        }
    }

    for _ in 0..depth {
        if let Some(&id) = store.index.get(goal) {
            return Ok(Some(store.trace(id)));
        }
        let mut fresh = Vec::new();
        for (major, f) in store.formulas.iter().enumerate() {
            if let Formula::Implies(a, b) = f {
                if let Some(&minor) = store.index.get(a.as_ref()) {
                    if !store.index.contains_key(b.as_ref()) {
                        fresh.push((b.as_ref().clone(), Origin::Mp(minor, major)));
                    }
                }
            }
        }
        if fresh.is_empty() {
            return Ok(None);
        }
        for (f, origin) in fresh {
            store.insert(f, origin)?;
        }
    }
    Ok(store.index.get(goal).map(|&id| store.trace(id)))
}
