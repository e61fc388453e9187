//! Classical two-valued semantics by exhaustive enumeration.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use crate::config::Config;
use crate::error::{Error, Result};
use crate::formula::{atoms_of, Formula};

/// Total assignment over a declared atom universe.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ClassicalValuation {
    assignment: BTreeMap<String, bool>,
}

impl ClassicalValuation {
    pub fn new(assignment: BTreeMap<String, bool>) -> Self {
        ClassicalValuation { assignment }
    }

    /// Valuation over `atoms` that sets exactly the atoms named in `true_atoms`.
    pub fn from_true<'a>(atoms: &BTreeSet<String>, true_atoms: impl IntoIterator<Item = &'a str>) -> Self {
        let truths: BTreeSet<&str> = true_atoms.into_iter().collect();
        let assignment = atoms.iter().map(|a| (a.clone(), truths.contains(a.as_str()))).collect();
        ClassicalValuation { assignment }
    }

    pub fn get(&self, atom: &str) -> Option<bool> {
        self.assignment.get(atom).copied()
    }

    pub fn atoms(&self) -> impl Iterator<Item = &str> {
        self.assignment.keys().map(String::as_str)
    }

    pub fn assignment(&self) -> &BTreeMap<String, bool> {
        &self.assignment
    }

    pub fn eval(&self, f: &Formula) -> Result<bool> {
        eval_classical(self, f)
    }
}

pub fn eval_classical(v: &ClassicalValuation, f: &Formula) -> Result<bool> {
    Ok(match f {
        Formula::Atom(name) => v.get(name).ok_or_else(|| Error::UnknownAtom(name.clone()))?,
        Formula::Not(g) => !eval_classical(v, g)?,
        Formula::And(a, b) => eval_classical(v, a)? && eval_classical(v, b)?,
        Formula::Or(a, b) => eval_classical(v, a)? || eval_classical(v, b)?,
        Formula::Implies(a, b) => !eval_classical(v, a)? || eval_classical(v, b)?,
    })
}

/// Formula compiled against a fixed atom order; valuations are bitmasks.
struct Compiled<'a> {
    index: &'a HashMap<&'a str, usize>,
}

impl Compiled<'_> {
    fn eval(&self, f: &Formula, mask: u64) -> bool {
        match f {
            Formula::Atom(name) => mask >> self.index[name.as_str()] & 1 == 1,
            Formula::Not(g) => !self.eval(g, mask),
            Formula::And(a, b) => self.eval(a, mask) && self.eval(b, mask),
            Formula::Or(a, b) => self.eval(a, mask) || self.eval(b, mask),
            Formula::Implies(a, b) => !self.eval(a, mask) || self.eval(b, mask),
        }
    }
}

fn check_bound(atoms: &BTreeSet<String>, config: &Config) -> Result<()> {
    let max = config.max_atoms.min(63);
    if atoms.len() > max {
        return Err(Error::AtomBound { count: atoms.len(), max });
    }
    Ok(())
}

/// First valuation (in counting order over sorted atoms) that makes every
/// formula in `holds` true and every formula in `fails` false.
fn search(holds: &[&Formula], fails: &[&Formula], config: &Config) -> Result<Option<ClassicalValuation>> {
    let atoms = atoms_of(holds.iter().copied().chain(fails.iter().copied()));
    check_bound(&atoms, config)?;
    let order: Vec<&str> = atoms.iter().map(String::as_str).collect();
    let index: HashMap<&str, usize> = order.iter().enumerate().map(|(i, a)| (*a, i)).collect();
    let comp = Compiled { index: &index };
    for mask in 0u64..(1u64 << order.len()) {
        if fails.iter().any(|f| comp.eval(f, mask)) {
            continue;
        }
        if holds.iter().all(|f| comp.eval(f, mask)) {
            let assignment = order.iter().enumerate().map(|(i, a)| (a.to_string(), mask >> i & 1 == 1)).collect();
            return Ok(Some(ClassicalValuation { assignment }));
        }
    }
    Ok(None)
}

/// Valuation satisfying every premise and falsifying the goal, if any.
pub fn classical_countermodel(premises: &[Formula], goal: &Formula, config: &Config) -> Result<Option<ClassicalValuation>> {
    let holds: Vec<&Formula> = premises.iter().collect();
    search(&holds, &[goal], config)
}

pub fn classical_entails(premises: &[Formula], goal: &Formula, config: &Config) -> Result<bool> {
    Ok(classical_countermodel(premises, goal, config)?.is_none())
}

pub fn classical_satisfiable(formulas: &[Formula], config: &Config) -> Result<Option<ClassicalValuation>> {
    let holds: Vec<&Formula> = formulas.iter().collect();
    search(&holds, &[], config)
}

pub fn classical_valid(goal: &Formula, config: &Config) -> Result<bool> {
    classical_entails(&[], goal, config)
}

/// Every valuation over `atoms`, in counting order.
pub fn all_valuations(atoms: &BTreeSet<String>, config: &Config) -> Result<Vec<ClassicalValuation>> {
    check_bound(atoms, config)?;
    let order: Vec<&String> = atoms.iter().collect();
    Ok((0u64..(1u64 << order.len()))
        .map(|mask| {
            let assignment = order.iter().enumerate().map(|(i, a)| ((*a).clone(), mask >> i & 1 == 1)).collect();
            ClassicalValuation { assignment }
        })
        .collect())
}
