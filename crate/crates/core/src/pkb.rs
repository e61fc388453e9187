//! Weighted knowledge bases, their minimum-specificity closure over either
//! backend, and the consequence relations built on it.

use std::cell::RefCell;
use std::collections::{BTreeSet, HashMap};
use std::fmt;

use crate::classical::classical_satisfiable;
use crate::config::{Backend, Config, Logic};
use crate::error::{Error, FileError, Result};
use crate::formula::{parse, Connective, Formula};
use crate::level::Level;
use crate::possibility::GradedMap;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeightedFormula {
    pub formula: Formula,
    pub weight: Level,
}

impl WeightedFormula {
    pub fn new(formula: Formula, weight: Level) -> Self {
        WeightedFormula { formula, weight }
    }
}

impl fmt::Display for WeightedFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ; {}", self.formula, self.weight)
    }
}

/// A finite multiset of weighted formulas read as constraints `N(f) >= w`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PossibilisticKB {
    items: Vec<WeightedFormula>,
    backend: Backend,
}

/// One row of a closure table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosureRow {
    pub query: Formula,
    pub n: Level,
    pub n_neg: Level,
    pub n_badly: Level,
}

impl ClosureRow {
    /// The paraconsistent verdict: `N(q) > N(!q^)`.
    pub fn accepted(&self) -> bool {
        self.n > self.n_badly
    }
}

/// Both readings of the conditional consequence `a |~ b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CondVerdict {
    /// `N(a -> b) > N(a -> !b^)`
    pub badly: bool,
    /// `N(a -> b) > N(a -> !b)`
    pub negation: bool,
}

impl CondVerdict {
    pub fn agree(&self) -> bool {
        self.badly == self.negation
    }
}

impl PossibilisticKB {
    pub fn new(logic: Logic) -> Self {
        PossibilisticKB { items: Vec::new(), backend: Backend::new(logic, Config::default()) }
    }

    pub fn from_items(logic: Logic, items: impl IntoIterator<Item = (Formula, Level)>) -> Self {
        let mut kb = PossibilisticKB::new(logic);
        for (f, w) in items {
            kb.push(f, w);
        }
        kb
    }

    pub fn with_config(mut self, config: Config) -> Self {
        self.backend.config = config;
        self
    }

    /// Adds an item; zero weights carry no information and are dropped.
    pub fn push(&mut self, formula: Formula, weight: Level) {
        if weight.is_zero() {
            log::warn!("dropping zero-weight formula {formula}");
            return;
        }
        self.items.push(WeightedFormula::new(formula, weight));
    }

    pub fn items(&self) -> &[WeightedFormula] {
        &self.items
    }

    pub fn logic(&self) -> Logic {
        self.backend.logic
    }

    pub fn backend(&self) -> &Backend {
        &self.backend
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    /// Distinct weights together with 0 and 1, ascending.
    pub fn level_grid(&self) -> Vec<Level> {
        let mut grid: BTreeSet<Level> = self.items.iter().map(|i| i.weight).collect();
        grid.insert(Level::ZERO);
        grid.insert(Level::ONE);
        grid.into_iter().collect()
    }

    /// Formulas of weight at least `beta`, deduplicated, in file order.
    pub fn level_cut(&self, beta: Level) -> Result<Vec<Formula>> {
        if beta.is_zero() {
            return Err(Error::LevelOutOfRange(format!("cut level {beta} must be positive")));
        }
        let mut seen = BTreeSet::new();
        Ok(self
            .items
            .iter()
            .filter(|i| i.weight >= beta && seen.insert(&i.formula))
            .map(|i| i.formula.clone())
            .collect())
    }

    /// The highest grid level whose cut entails `query`, or 0.
    pub fn closure_value(&self, query: &Formula) -> Result<Level> {
        for &beta in self.level_grid().iter().rev() {
            if beta.is_zero() {
                break;
            }
            if self.backend.entails(&self.level_cut(beta)?, query)? {
                return Ok(beta);
            }
        }
        Ok(Level::ZERO)
    }

    pub fn closure_row(&self, query: &Formula) -> Result<ClosureRow> {
        Ok(ClosureRow {
            query: query.clone(),
            n: self.closure_value(query)?,
            n_neg: self.closure_value(&query.negated())?,
            n_badly: self.closure_value(&query.badly())?,
        })
    }

    pub fn closure_report(&self, queries: &[Formula]) -> Result<Vec<ClosureRow>> {
        queries.iter().map(|q| self.closure_row(q)).collect()
    }

    /// Closure values of `queries`, default 0.
    pub fn closure_map(&self, queries: &[Formula]) -> Result<GradedMap> {
        let mut m = GradedMap::new(Level::ZERO);
        for q in queries {
            m.insert(q.clone(), self.closure_value(q)?);
        }
        Ok(m)
    }

    /// `N(q) > N(!q^)`.
    pub fn poss_entails(&self, query: &Formula) -> Result<bool> {
        Ok(self.closure_value(query)? > self.closure_value(&query.badly())?)
    }

    pub fn cond_entails(&self, antecedent: &Formula, consequent: &Formula) -> Result<CondVerdict> {
        let imp = |c: Formula| Formula::implies(antecedent.clone(), c);
        let main = self.closure_value(&imp(consequent.clone()))?;
        let verdict = CondVerdict {
            badly: main > self.closure_value(&imp(consequent.badly()))?,
            negation: main > self.closure_value(&imp(consequent.negated()))?,
        };
        if !verdict.agree() {
            log::warn!("conditional readings disagree on {antecedent} |~ {consequent}: {verdict:?}");
        }
        Ok(verdict)
    }

    fn require_classical(&self) -> Result<()> {
        match self.logic() {
            Logic::Classical => Ok(()),
            Logic::C1 => Err(Error::UnsupportedLogic(Logic::C1.name())),
        }
    }

    /// Highest grid level whose cut is classically unsatisfiable, or 0.
    pub fn inconsistency_degree(&self) -> Result<Level> {
        self.require_classical()?;
        for &beta in self.level_grid().iter().rev() {
            if beta.is_zero() {
                break;
            }
            if classical_satisfiable(&self.level_cut(beta)?, &self.backend.config)?.is_none() {
                return Ok(beta);
            }
        }
        Ok(Level::ZERO)
    }

    /// Classical possibilistic consequence: `N(q) > Incons(KB)`.
    pub fn classical_poss_entails(&self, query: &Formula) -> Result<bool> {
        self.require_classical()?;
        Ok(self.closure_value(query)? > self.inconsistency_degree()?)
    }

    /// Multiset union of two knowledge bases over the same logic.
    pub fn fuse(&self, other: &PossibilisticKB) -> Result<PossibilisticKB> {
        if self.logic() != other.logic() {
            return Err(Error::BackendMismatch);
        }
        let mut out = self.clone();
        out.items.extend(other.items.iter().cloned());
        Ok(out)
    }

    /// The same items over another logic.
    pub fn with_logic(&self, logic: Logic) -> PossibilisticKB {
        PossibilisticKB { items: self.items.clone(), backend: Backend::new(logic, self.backend.config.clone()) }
    }

    /// Whether `m` meets every constraint `N(f) >= w`.
    pub fn satisfied_by(&self, m: &GradedMap) -> Result<bool> {
        satisfies_kb(m, self)
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("logic: {}\n", self.logic());
        for item in &self.items {
            out.push_str(&format!("{item}\n"));
        }
        out
    }
}

pub fn satisfies_kb(m: &GradedMap, kb: &PossibilisticKB) -> Result<bool> {
    for item in kb.items() {
        let level = m.entry(&item.formula).ok_or_else(|| Error::MissingEntry(item.formula.clone()))?;
        if level < item.weight {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Reads the line-oriented KB format: a `logic:` header followed by
/// `<formula> ; <weight>` lines. `#` starts a comment.
pub fn parse_kb(text: &str) -> Result<PossibilisticKB, FileError> {
    let mut kb: Option<PossibilisticKB> = None;
    for (n, raw) in text.lines().enumerate() {
        let line_no = n + 1;
        let line = strip_comment(raw);
        if line.trim().is_empty() {
            continue;
        }
        let indent = line.len() - line.trim_start().len() + 1;
        let Some(kb) = kb.as_mut() else {
            let header = line.trim();
            let logic = header
                .strip_prefix("logic:")
                .ok_or_else(|| FileError::new(line_no, indent, "expected `logic: c1` or `logic: classical` header"))?;
            let logic: Logic = logic.trim().parse().map_err(|e: Error| FileError::new(line_no, indent, e.to_string()))?;
            kb = Some(PossibilisticKB::new(logic));
            continue;
        };
        let Some(split) = line.rfind(';') else {
            return Err(FileError::new(line_no, line.len() + 1, "expected `<formula> ; <weight>`"));
        };
        let formula = parse(&line[..split]).map_err(|e| FileError::from_parse(e, line_no, 1))?;
        let weight_text = &line[split + 1..];
        let weight: Level = weight_text
            .parse()
            .map_err(|e: Error| FileError::new(line_no, split + 2 + leading_space(weight_text), e.to_string()))?;
        kb.push(formula, weight);
    }
    kb.ok_or_else(|| FileError::new(1, 1, "missing `logic:` header"))
}

pub(crate) fn strip_comment(line: &str) -> &str {
    line.split_once('#').map_or(line, |(before, _)| before)
}

pub(crate) fn leading_space(s: &str) -> usize {
    s.len() - s.trim_start().len()
}

/// Pass counts for one property over the sampled instances.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PropLine {
    pub name: &'static str,
    pub checked: usize,
    pub held: usize,
    /// Report-only properties never count as failures.
    pub asserted: bool,
    pub witness: Option<String>,
}

impl PropLine {
    fn new(name: &'static str, asserted: bool) -> Self {
        PropLine { name, checked: 0, held: 0, asserted, witness: None }
    }

    fn record(&mut self, ok: bool, witness: impl FnOnce() -> String) {
        self.checked += 1;
        if ok {
            self.held += 1;
        } else if self.witness.is_none() {
            self.witness = Some(witness());
        }
    }

    pub fn all_held(&self) -> bool {
        self.held == self.checked
    }

    pub fn passed(&self) -> bool {
        !self.asserted || self.all_held()
    }

    pub fn merge(&mut self, other: &PropLine) {
        self.checked += other.checked;
        self.held += other.held;
        if self.witness.is_none() {
            self.witness.clone_from(&other.witness);
        }
    }
}

impl fmt::Display for PropLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = match (self.asserted, self.all_held()) {
            (false, _) => "REPORT",
            (true, true) => "PASS",
            (true, false) => "FAIL",
        };
        write!(f, "PROP {}: {verdict} {}/{}", self.name, self.held, self.checked)?;
        if let Some(w) = &self.witness {
            write!(f, " witness={w}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PropReport {
    pub lines: Vec<PropLine>,
}

impl PropReport {
    pub fn line(&self, name: &str) -> Option<&PropLine> {
        self.lines.iter().find(|l| l.name == name)
    }

    /// Whether every asserted property held on every instance.
    pub fn passed(&self) -> bool {
        self.lines.iter().all(PropLine::passed)
    }

    /// Accumulates another report with the same line layout.
    pub fn merge(&mut self, other: &PropReport) {
        for line in &other.lines {
            match self.lines.iter_mut().find(|l| l.name == line.name) {
                Some(mine) => mine.merge(line),
                None => self.lines.push(line.clone()),
            }
        }
    }
}

impl fmt::Display for PropReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for line in &self.lines {
            writeln!(f, "{line}")?;
        }
        Ok(())
    }
}

/// Closure values memoised per query for the duration of one report.
struct Memo<'a> {
    kb: &'a PossibilisticKB,
    cache: RefCell<HashMap<Formula, Level>>,
}

impl Memo<'_> {
    fn n(&self, f: &Formula) -> Result<Level> {
        if let Some(&l) = self.cache.borrow().get(f) {
            return Ok(l);
        }
        let l = self.kb.closure_value(f)?;
        self.cache.borrow_mut().insert(f.clone(), l);
        Ok(l)
    }
}

/// Evaluates the closure properties on the sampled pairs. P4 (both readings),
/// P7 and P9 are reported without being asserted.
pub fn check_p_properties(kb: &PossibilisticKB, sample: &[(Formula, Formula)]) -> Result<PropReport> {
    let memo = Memo { kb, cache: RefCell::new(HashMap::new()) };
    let n = |f: &Formula| memo.n(f);
    let w1 = |a: &Formula| a.render();
    let w2 = |a: &Formula, b: &Formula| format!("{a}; {b}");

    let mut identity = PropLine::new("Identity", true);
    let mut p1 = PropLine::new("P1", true);
    let mut p2 = PropLine::new("P2", true);
    let mut p3 = PropLine::new("P3", true);
    let mut p4a = PropLine::new("P4a", false);
    let mut p4b = PropLine::new("P4b", false);
    let mut p5 = PropLine::new("P5", true);
    let mut p6 = PropLine::new("P6", true);
    let mut p7 = PropLine::new("P7", false);
    let mut p8 = PropLine::new("P8", true);
    let mut p9 = PropLine::new("P9", false);

    let all: Vec<Formula> = kb.items.iter().map(|i| i.formula.clone()).collect();
    let consistent = classical_satisfiable(&all, &kb.backend.config)?.is_some();

    let mut singles = BTreeSet::new();
    for (a, b) in sample {
        singles.insert(a.clone());
        singles.insert(b.clone());
    }
    for phi in &singles {
        let (na, nneg, nbad) = (n(phi)?, n(&phi.negated())?, n(&phi.badly())?);
        identity.record(nbad == na.min(nneg), || w1(phi));
        p1.record(na == nbad || nneg == nbad, || w1(phi));
        p6.record(n(&Formula::not(phi.negated()))? == na, || w1(phi));
        let ncirc = n(&phi.circ())?;
        p7.record(ncirc.is_one(), || w1(phi));
        if consistent {
            p9.record(ncirc.is_one(), || w1(phi));
        }
    }
    for (a, b) in sample {
        let (na, nb) = (n(a)?, n(b)?);
        let a_to_b = Formula::implies(a.clone(), b.clone());
        p2.record(nb >= na.min(n(&a_to_b)?), || w2(a, b));

        p3.record(n(&Formula::and(a.clone(), b.clone()))? >= na.min(nb), || w2(a, b));
        if kb.backend.entails(std::slice::from_ref(a), b)? {
            p3.record(nb >= na, || w2(a, b));
        }

        let a_to_not_b = Formula::implies(a.clone(), b.negated());
        let guards = n(&a_to_b)?.min(n(&a_to_not_b)?);
        let nneg = n(&a.negated())?;
        p4a.record(nneg >= n(&a.circ())?.min(guards), || w2(a, b));
        p4b.record(nneg >= n(&b.circ())?.min(guards), || w2(a, b));

        p5.record(n(&Formula::or(a.clone(), b.clone()))? >= na.max(nb), || w2(a, b));

        let floor = n(&a.circ())?.min(n(&b.circ())?);
        for c in Connective::ALL {
            let compound = c.apply(a.clone(), b.clone());
            p8.record(n(&compound.circ())? >= floor, || w2(a, b));
        }
    }
    Ok(PropReport { lines: vec![identity, p1, p2, p3, p4a, p4b, p5, p6, p7, p8, p9] })
}
