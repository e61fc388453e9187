//! Decision procedure for the paraconsistent logic C1.
//!
//! Entailment is decided by countermodel search over bivaluations: two-valued
//! assignments to a finite [`EvaluationSet`] that respect the C1 valuation
//! conditions. Positive connectives are truth-functional; negation is not, and
//! `v(f) = v(!f) = 1` is allowed unless a condition rules it out.
//!
//! Conditions enforced on every bivaluation, for members of the set:
//!
//! * `c1`: `v(f) = 0` implies `v(!f) = 1`;
//! * `c2`: `v(!!f) = v(f)` (only `v(!!f) = 1 => v(f) = 1` with
//!   [`Config::weak_negation`]);
//! * `c3`: `v(f^) = 1` implies `f` and `!f` are not both 1;
//! * `c4`-`c6`: `->`, `&`, `|` are classical;
//! * `c7`: if `f` and `g` both behave well, so does `f # g`.
//!
//! "Behaves well" in `c7` is read off the pair `v(f)`, `v(!f)`: in any full
//! valuation `v(f^) = 1` exactly when not both are 1, so `c7` is instantiated
//! for every compound of the subformula closure, whether or not the `^`
//! expansions occur in the input. Without this a finite assignment can satisfy
//! every instantiated constraint and still fail to extend to a full valuation
//! (for instance with premises `p & q`, `!(p & q)`, `!p -> r`, `!q -> r` and
//! goal `r`).

mod hilbert;
mod solver;

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::sync::Arc;

pub use hilbert::{axiom_schemas, hilbert_derive_bounded, AxiomSchema, Derivation, Justification, Step};

use crate::config::Config;
use crate::error::{Error, Result};
use crate::formula::{Connective, Formula};
use solver::{Lit, Solver, Walk};

/// Budget for branching decisions in a single search.
const MAX_DECISIONS: u64 = 5_000_000;

/// Finite carrier for bivaluations: the subformula closure of the inputs plus
/// one negation of each closure member.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EvaluationSet {
    members: Vec<Formula>,
    index: HashMap<Formula, usize>,
    in_closure: Vec<bool>,
}

impl EvaluationSet {
    /// Builds the set, ordered by size and then by rendering.
    pub fn build<'a>(inputs: impl IntoIterator<Item = &'a Formula>, max_size: usize) -> Result<EvaluationSet> {
        let mut closure = BTreeSet::new();
        for f in inputs {
            f.collect_subformulas(&mut closure);
        }
        let mut all: BTreeSet<Formula> = closure.iter().map(Formula::negated).collect();
        all.extend(closure.iter().cloned());
        if all.len() > max_size {
            return Err(Error::EvalSetBound { size: all.len(), max: max_size });
        }
        let mut keyed: Vec<(usize, String, Formula)> = all.into_iter().map(|f| (f.size(), f.render(), f)).collect();
        keyed.sort();
        let members: Vec<Formula> = keyed.into_iter().map(|(_, _, f)| f).collect();
        let index = members.iter().enumerate().map(|(i, f)| (f.clone(), i)).collect();
        let in_closure = members.iter().map(|f| closure.contains(f)).collect();
        Ok(EvaluationSet { members, index, in_closure })
    }

    pub fn members(&self) -> &[Formula] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, f: &Formula) -> bool {
        self.index.contains_key(f)
    }

    pub fn position(&self, f: &Formula) -> Option<usize> {
        self.index.get(f).copied()
    }

    /// Whether `f` belongs to the subformula closure (not only the negation layer).
    pub fn in_closure(&self, f: &Formula) -> bool {
        self.position(f).is_some_and(|i| self.in_closure[i])
    }

    fn idx(&self, f: &Formula) -> usize {
        self.index[f]
    }
}

/// `evaluation_set` with the bound taken from `config`.
pub fn evaluation_set(inputs: &[Formula], config: &Config) -> Result<EvaluationSet> {
    EvaluationSet::build(inputs, config.max_evalset)
}

/// A two-valued assignment to every member of an evaluation set.
#[derive(Clone, PartialEq, Eq)]
pub struct Bivaluation {
    set: Arc<EvaluationSet>,
    values: Vec<bool>,
}

impl Bivaluation {
    pub fn set(&self) -> &EvaluationSet {
        &self.set
    }

    pub fn shared_set(&self) -> &Arc<EvaluationSet> {
        &self.set
    }

    pub fn value(&self, f: &Formula) -> Option<bool> {
        self.set.position(f).map(|i| self.values[i])
    }

    /// Value of the member at `position` in the set's order.
    pub fn value_at(&self, position: usize) -> bool {
        self.values[position]
    }

    pub fn values(&self) -> impl Iterator<Item = (&Formula, bool)> {
        self.set.members.iter().zip(self.values.iter().copied())
    }

    /// Re-derives every C1 condition over the members and lists the violations.
    pub fn violations(&self, weak_negation: bool) -> Vec<String> {
        let set = &*self.set;
        let v = |f: &Formula| set.position(f).map(|i| self.values[i]);
        let well_behaved = |f: &Formula| match (v(f), v(&f.negated())) {
            (Some(a), Some(b)) => Some(!(a && b)),
            _ => None,
        };
        let mut out = Vec::new();
        for (f, value) in self.values() {
            match f {
                Formula::Atom(_) => {}
                Formula::Not(inner) => {
                    let inner_value = v(inner).expect("closure member");
                    if !inner_value && !value {
                        out.push(format!("c1: {inner} and {f} both 0"));
                    }
                    if let Formula::Not(core) = inner.as_ref() {
                        if let Some(core_value) = v(core) {
                            if value && !core_value {
                                out.push(format!("c2: {f} is 1 but {core} is 0"));
                            }
                            if !weak_negation && !value && core_value {
                                out.push(format!("c2: {f} is 0 but {core} is 1"));
                            }
                        }
                    }
                    if let Some(operand) = f.circ_operand() {
                        if value && v(operand) == Some(true) && v(&operand.negated()) == Some(true) {
                            out.push(format!("c3: {f} is 1 with {operand} and its negation 1"));
                        }
                    }
                }
                _ => {
                    let (conn, a, b) = f.as_binary().expect("binary");
                    let expected = conn.eval(v(a).expect("closure member"), v(b).expect("closure member"));
                    if expected != value {
                        out.push(format!("c4-c6: {f} should be {}", u8::from(expected)));
                    }
                    if let (Some(true), Some(true), Some(false)) = (well_behaved(a), well_behaved(b), well_behaved(f)) {
                        out.push(format!("c7: {a} and {b} behave well but {f} does not"));
                    }
                    let circ = |g: &Formula| v(&g.circ());
                    if let (Some(true), Some(true), Some(false)) = (circ(a), circ(b), circ(f)) {
                        out.push(format!("c7: {} and {} hold but {} fails", a.circ(), b.circ(), f.circ()));
                    }
                }
            }
        }
        out
    }
}

impl fmt::Debug for Bivaluation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.values().map(|(k, v)| (k.render(), u8::from(v)))).finish()
    }
}

/// One `formula=value` pair per line, in evaluation-set order.
impl fmt::Display for Bivaluation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (formula, value) in self.values() {
            writeln!(f, "{formula}={}", u8::from(value))?;
        }
        Ok(())
    }
}

/// Builds the clause encoding of the C1 conditions over `set`.
fn encode(set: &EvaluationSet, weak_negation: bool) -> Solver {
    let n = set.len();
    let mut order: Vec<(usize, bool)> = Vec::with_capacity(n);
    order.extend(set.members.iter().enumerate().filter(|(_, f)| f.is_atom()).map(|(i, _)| (i, false)));
    order.extend(set.members.iter().enumerate().filter(|(_, f)| matches!(f, Formula::Not(_))).map(|(i, _)| (i, true)));
    order.extend(set.members.iter().enumerate().filter(|(_, f)| f.as_binary().is_some()).map(|(i, _)| (i, false)));
    let mut s = Solver::new(n, order, MAX_DECISIONS);

    for (x, f) in set.members.iter().enumerate() {
        match f {
            Formula::Atom(_) => {}
            Formula::Not(inner) => {
                let a = set.idx(inner);
                s.add_clause(vec![Lit::pos(a), Lit::pos(x)]);
                if let Formula::Not(core) = inner.as_ref() {
                    if let Some(c) = set.position(core) {
                        s.add_clause(vec![Lit::neg(x), Lit::pos(c)]);
                        if !weak_negation {
                            s.add_clause(vec![Lit::pos(x), Lit::neg(c)]);
                        }
                    }
                }
                if let Some(operand) = f.circ_operand() {
                    let (p, np) = (set.idx(operand), set.idx(&operand.negated()));
                    s.add_clause(vec![Lit::neg(x), Lit::neg(p), Lit::neg(np)]);
                }
            }
            _ => {
                let (conn, left, right) = f.as_binary().expect("binary");
                let (a, b) = (set.idx(left), set.idx(right));
                match conn {
                    Connective::And => {
                        s.add_clause(vec![Lit::neg(x), Lit::pos(a)]);
                        s.add_clause(vec![Lit::neg(x), Lit::pos(b)]);
                        s.add_clause(vec![Lit::pos(x), Lit::neg(a), Lit::neg(b)]);
                    }
                    Connective::Or => {
                        s.add_clause(vec![Lit::neg(x), Lit::pos(a), Lit::pos(b)]);
                        s.add_clause(vec![Lit::pos(x), Lit::neg(a)]);
                        s.add_clause(vec![Lit::pos(x), Lit::neg(b)]);
                    }
                    Connective::Implies => {
                        s.add_clause(vec![Lit::neg(x), Lit::neg(a), Lit::pos(b)]);
                        s.add_clause(vec![Lit::pos(x), Lit::pos(a)]);
                        s.add_clause(vec![Lit::pos(x), Lit::neg(b)]);
                    }
                }
                // c7 on the implicit well-behavedness of the operands: every binary
                // member lies in the closure, so all four negations are members.
                let (na, nb, nx) = (set.idx(&left.negated()), set.idx(&right.negated()), set.idx(&f.negated()));
                for u in [a, na] {
                    for w in [b, nb] {
                        s.add_clause(vec![Lit::pos(u), Lit::pos(w), Lit::neg(x), Lit::neg(nx)]);
                    }
                }
            }
        }
    }
    s
}

fn search_budget_error(set: &EvaluationSet) -> Error {
    Error::ResourceExceeded(format!("bivaluation search over {} formulas", set.len()))
}

/// A bivaluation making every premise 1 and the goal 0, if one exists.
pub fn find_countermodel(premises: &[Formula], goal: &Formula, config: &Config) -> Result<Option<Bivaluation>> {
    let inputs: Vec<&Formula> = premises.iter().chain(std::iter::once(goal)).collect();
    let set = Arc::new(EvaluationSet::build(inputs, config.max_evalset)?);
    let mut solver = encode(&set, config.weak_negation);
    for p in premises {
        solver.add_clause(vec![Lit::pos(set.idx(p))]);
    }
    solver.add_clause(vec![Lit::neg(set.idx(goal))]);
    let model = solver.solve().map_err(|_| search_budget_error(&set))?;
    Ok(model.map(|values| Bivaluation { set, values }))
}

pub fn c1_entails(premises: &[Formula], goal: &Formula, config: &Config) -> Result<bool> {
    Ok(find_countermodel(premises, goal, config)?.is_none())
}

pub fn c1_valid(goal: &Formula, config: &Config) -> Result<bool> {
    c1_entails(&[], goal, config)
}

/// A bivaluation making every formula 1, if one exists.
pub fn c1_satisfiable(formulas: &[Formula], config: &Config) -> Result<Option<Bivaluation>> {
    let set = Arc::new(EvaluationSet::build(formulas, config.max_evalset)?);
    let mut solver = encode(&set, config.weak_negation);
    for f in formulas {
        solver.add_clause(vec![Lit::pos(set.idx(f))]);
    }
    let model = solver.solve().map_err(|_| search_budget_error(&set))?;
    Ok(model.map(|values| Bivaluation { set, values }))
}

/// Every bivaluation of `set`, in decision order; errors past `limit` models.
pub fn all_bivaluations(set: Arc<EvaluationSet>, config: &Config, limit: usize) -> Result<Vec<Bivaluation>> {
    let solver = encode(&set, config.weak_negation);
    let mut out = Vec::new();
    let mut overflow = false;
    solver
        .for_each_model(&mut |values| {
            if out.len() == limit {
                overflow = true;
                return Walk::Stop;
            }
            out.push(Bivaluation { set: Arc::clone(&set), values: values.to_vec() });
            Walk::Continue
        })
        .map_err(|_| search_budget_error(&set))?;
    if overflow {
        return Err(Error::ResourceExceeded(format!("more than {limit} bivaluations")));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::parse;

    fn f(s: &str) -> Formula {
        parse(s).unwrap()
    }

    fn fs(items: &[&str]) -> Vec<Formula> {
        items.iter().map(|s| f(s)).collect()
    }

    fn cfg() -> Config {
        Config::default()
    }

    #[test]
    fn evaluation_set_of_atom() {
        let set = evaluation_set(&fs(&["p"]), &cfg()).unwrap();
        assert_eq!(set.members(), fs(&["p", "!p"]).as_slice());
    }

    #[test]
    fn evaluation_set_of_circ() {
        // closure {p, !p, p & !p, !(p & !p)} plus one negation layer
        let set = evaluation_set(&fs(&["!(p & !p)"]), &cfg()).unwrap();
        let expected: BTreeSet<Formula> =
            fs(&["p", "!p", "!!p", "p & !p", "!(p & !p)", "!!(p & !p)"]).into_iter().collect();
        let got: BTreeSet<Formula> = set.members().iter().cloned().collect();
        assert_eq!(got, expected);
        assert!(!set.in_closure(&f("!!p")));
        assert!(set.in_closure(&f("!p")));
    }

    #[test]
    fn evaluation_set_of_implication() {
        let set = evaluation_set(&fs(&["p -> q"]), &cfg()).unwrap();
        for m in ["p", "q", "!p", "!q", "p -> q", "!(p -> q)"] {
            assert!(set.contains(&f(m)), "{m}");
        }
        assert_eq!(set.len(), 6);
        let sizes: Vec<usize> = set.members().iter().map(Formula::size).collect();
        assert!(sizes.windows(2).all(|w| w[0] <= w[1]));
    }

    #[test]
    fn evaluation_set_bound() {
        let c = Config { max_evalset: 4, ..cfg() };
        assert!(matches!(evaluation_set(&fs(&["p -> q"]), &c), Err(Error::EvalSetBound { size: 6, max: 4 })));
    }

    #[test]
    fn modus_tollens_countermodel() {
        let cm = find_countermodel(&fs(&["p -> q", "!q"]), &f("!p"), &cfg()).unwrap().unwrap();
        assert_eq!(cm.value(&f("p")), Some(true));
        assert_eq!(cm.value(&f("q")), Some(true));
        assert_eq!(cm.value(&f("!q")), Some(true));
        assert_eq!(cm.value(&f("!p")), Some(false));
        assert!(cm.violations(false).is_empty());
    }

    #[test]
    fn disjunctive_syllogism_countermodel() {
        let cm = find_countermodel(&fs(&["p | q", "!p"]), &f("q"), &cfg()).unwrap().unwrap();
        assert!(cm.violations(false).is_empty());
        assert_eq!(cm.value(&f("q")), Some(false));
    }

    #[test]
    fn excluded_middle_is_valid() {
        assert!(find_countermodel(&[], &f("p | !p"), &cfg()).unwrap().is_none());
    }

    #[test]
    fn flat_penguin_entailments() {
        let delta = fs(&["penguin", "penguin -> bird", "penguin -> !fly", "bird -> fly", "bird -> wings"]);
        for goal in ["fly", "!fly", "wings"] {
            assert!(c1_entails(&delta, &f(goal), &cfg()).unwrap(), "{goal}");
        }
        assert!(!c1_entails(&delta, &f("!wings"), &cfg()).unwrap());
    }

    #[test]
    fn contradiction_entails_badly_behaved() {
        assert!(c1_entails(&fs(&["glasses", "!glasses"]), &f("!glasses^"), &cfg()).unwrap());
        assert!(!c1_entails(&fs(&["glasses"]), &f("!glasses^"), &cfg()).unwrap());
    }

    #[test]
    fn de_morgan_for_disjunction_fails() {
        assert!(!c1_entails(&fs(&["!p", "!q"]), &f("!(p | q)"), &cfg()).unwrap());
    }

    #[test]
    fn non_contradiction_is_not_a_theorem() {
        assert!(!c1_valid(&f("!(p & !p)"), &cfg()).unwrap());
        assert!(c1_valid(&f("(p | q) <-> ((p -> q) -> q)"), &cfg()).unwrap());
        assert!(!c1_valid(&f("!(p | q) <-> !((p -> q) -> q)"), &cfg()).unwrap());
    }

    #[test]
    fn contradictions_propagate_to_components() {
        // (p & q) & !(p & q) forces p or q to behave badly
        let premises = fs(&["p & q", "!(p & q)", "!p -> r", "!q -> r"]);
        assert!(c1_entails(&premises, &f("r"), &cfg()).unwrap());
        // well-behaved operands make a compound well-behaved
        assert!(c1_entails(&fs(&["p^", "q^", "p", "q"]), &f("!(p & q) -> r"), &cfg()).unwrap());
        assert!(!c1_entails(&fs(&["p", "q"]), &f("!(p & q) -> r"), &cfg()).unwrap());
    }

    #[test]
    fn double_negation_depends_on_the_c2_reading() {
        let strong = cfg();
        let weak = Config { weak_negation: true, ..cfg() };
        assert!(c1_valid(&f("p -> !!p"), &strong).unwrap());
        assert!(!c1_valid(&f("p -> !!p"), &weak).unwrap());
        assert!(c1_valid(&f("!!p -> p"), &weak).unwrap());
    }

    #[test]
    fn enumerates_bivaluations_of_single_atom() {
        // {p, !p}: (0,1), (1,1), (1,0)
        let set = Arc::new(evaluation_set(&fs(&["p"]), &cfg()).unwrap());
        let all = all_bivaluations(set, &cfg(), 100).unwrap();
        assert_eq!(all.len(), 3);
        assert!(all.iter().all(|b| b.violations(false).is_empty()));
    }

    #[test]
    fn countermodel_search_is_deterministic() {
        let premises = fs(&["a | b", "!a", "b -> c"]);
        let first = find_countermodel(&premises, &f("!c"), &cfg()).unwrap();
        let second = find_countermodel(&premises, &f("!c"), &cfg()).unwrap();
        assert_eq!(first, second);
    }
}
