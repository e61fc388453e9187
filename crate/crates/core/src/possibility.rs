//! Graded maps on formulas, possibility distributions over a finite valuation
//! universe, the four ways of inducing a graded map from a distribution, and
//! sample-based checks for the necessity/possibility axioms and for necessity
//! orderings.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::sync::Arc;

use rand::Rng;

use crate::c1::{all_bivaluations, Bivaluation, EvaluationSet};
use crate::classical::{all_valuations, ClassicalValuation};
use crate::config::{Backend, Config, Logic};
use crate::error::{Error, Result};
use crate::formula::{atoms_of, Formula};
use crate::level::Level;
use crate::sample::{FormulaGen, SampleRng};

/// Finite restriction of a map from formulas to levels; unlisted formulas
/// take the default.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedMap {
    entries: BTreeMap<Formula, Level>,
    default: Level,
}

impl GradedMap {
    pub fn new(default: Level) -> Self {
        GradedMap { entries: BTreeMap::new(), default }
    }

    pub fn from_entries(entries: impl IntoIterator<Item = (Formula, Level)>, default: Level) -> Self {
        GradedMap { entries: entries.into_iter().collect(), default }
    }

    pub fn insert(&mut self, f: Formula, level: Level) {
        self.entries.insert(f, level);
    }

    pub fn get(&self, f: &Formula) -> Level {
        self.entries.get(f).copied().unwrap_or(self.default)
    }

    /// The listed value only, ignoring the default.
    pub fn entry(&self, f: &Formula) -> Option<Level> {
        self.entries.get(f).copied()
    }

    pub fn default_level(&self) -> Level {
        self.default
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Formula, Level)> {
        self.entries.iter().map(|(f, l)| (f, *l))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

/// The valuations a distribution ranges over.
#[derive(Clone, Debug)]
pub enum Universe {
    Classical { atoms: BTreeSet<String>, valuations: Vec<ClassicalValuation> },
    C1 { set: Arc<EvaluationSet>, valuations: Vec<Bivaluation> },
}

impl Universe {
    /// All `2^n` valuations over `atoms`.
    pub fn classical(atoms: BTreeSet<String>, config: &Config) -> Result<Universe> {
        let valuations = all_valuations(&atoms, config)?;
        Ok(Universe::Classical { atoms, valuations })
    }

    /// All bivaluations of the evaluation set built from `formulas`.
    pub fn c1(formulas: &[Formula], config: &Config, limit: usize) -> Result<Universe> {
        let set = Arc::new(EvaluationSet::build(formulas, config.max_evalset)?);
        let valuations = all_bivaluations(Arc::clone(&set), config, limit)?;
        Ok(Universe::C1 { set, valuations })
    }

    pub fn logic(&self) -> Logic {
        match self {
            Universe::Classical { .. } => Logic::Classical,
            Universe::C1 { .. } => Logic::C1,
        }
    }

    pub fn len(&self) -> usize {
        match self {
            Universe::Classical { valuations, .. } => valuations.len(),
            Universe::C1 { valuations, .. } => valuations.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Whether valuation `i` makes `f` true.
    pub fn truth(&self, i: usize, f: &Formula) -> Result<bool> {
        match self {
            Universe::Classical { atoms, valuations } => {
                if !f.atoms().is_subset(atoms) {
                    return Err(Error::OutsideUniverse(f.clone()));
                }
                valuations[i].eval(f)
            }
            Universe::C1 { valuations, .. } => valuations[i].value(f).ok_or_else(|| Error::OutsideUniverse(f.clone())),
        }
    }

    /// Truth of `f` in every valuation, in universe order.
    pub fn column(&self, f: &Formula) -> Result<Vec<bool>> {
        match self {
            Universe::Classical { .. } => (0..self.len()).map(|i| self.truth(i, f)).collect(),
            Universe::C1 { set, valuations } => {
                let at = set.position(f).ok_or_else(|| Error::OutsideUniverse(f.clone()))?;
                Ok(valuations.iter().map(|v| v.value_at(at)).collect())
            }
        }
    }
}

/// Weights over the valuations of a universe, by index.
#[derive(Clone, Debug)]
pub struct PossibilityDistribution {
    universe: Arc<Universe>,
    weights: Vec<Level>,
}

impl PossibilityDistribution {
    pub fn new(universe: Arc<Universe>, weights: Vec<Level>) -> Result<Self> {
        if weights.len() != universe.len() {
            return Err(Error::ResourceExceeded(format!(
                "{} weights for a universe of {} valuations",
                weights.len(),
                universe.len()
            )));
        }
        Ok(PossibilityDistribution { universe, weights })
    }

    /// Listed valuations get their weight, every other valuation gets 0.
    pub fn from_sparse(universe: Arc<Universe>, weights: &BTreeMap<usize, Level>) -> Result<Self> {
        let mut dense = vec![Level::ZERO; universe.len()];
        for (&i, &w) in weights {
            *dense.get_mut(i).ok_or_else(|| Error::ResourceExceeded(format!("valuation {i} not in universe")))? = w;
        }
        PossibilityDistribution::new(universe, dense)
    }

    /// Independent weights drawn from `levels`, with zero mixed in.
    pub fn random(universe: Arc<Universe>, levels: &[Level], rng: &mut SampleRng) -> Self {
        let weights = (0..universe.len())
            .map(|_| if rng.gen_bool(0.25) { Level::ZERO } else { crate::sample::level_from(rng, levels) })
            .collect();
        PossibilityDistribution { universe, weights }
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn weight(&self, i: usize) -> Level {
        self.weights[i]
    }

    pub fn is_normalized(&self) -> bool {
        Level::sup(self.weights.iter().copied()).is_one()
    }

    /// Highest weight among valuations where `f` has the given truth value.
    fn sup_where(&self, f: &Formula, truth: bool) -> Result<Level> {
        let column = self.universe.column(f)?;
        Ok(Level::sup(self.weights.iter().zip(column).filter(|(_, t)| *t == truth).map(|(w, _)| *w)))
    }
}

/// The four inductions of a graded map from a distribution.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Induction {
    /// `1 - sup { pi(v) : v falsifies f }`
    F1,
    /// `1 - sup { pi(v) : v satisfies !f }`
    F2,
    /// `sup { pi(v) : v satisfies f }`
    F3,
    /// `sup { pi(v) : v falsifies !f }`
    F4,
}

pub fn induce(dist: &PossibilityDistribution, kind: Induction, queries: &[Formula]) -> Result<GradedMap> {
    let mut out = GradedMap::new(Level::ZERO);
    for q in queries {
        let level = match kind {
            Induction::F1 => dist.sup_where(q, false)?.complement(),
            Induction::F2 => dist.sup_where(&q.negated(), true)?.complement(),
            Induction::F3 => dist.sup_where(q, true)?,
            Induction::F4 => dist.sup_where(&q.negated(), false)?,
        };
        out.insert(q.clone(), level);
    }
    Ok(out)
}

/// Pointwise `1 - m(!f)`; every `!f` must be listed in `m`.
pub fn dual_of(m: &GradedMap, queries: &[Formula]) -> Result<GradedMap> {
    let mut out = GradedMap::new(m.default_level().complement());
    for q in queries {
        let neg = q.negated();
        let level = m.entry(&neg).ok_or(Error::MissingEntry(neg))?;
        out.insert(q.clone(), level.complement());
    }
    Ok(out)
}

/// Instances for the axiom checks. Built by [`AxiomSample::generate`] or
/// [`AxiomSample::classify`]; the checkers still confirm every side condition
/// with the backend.
#[derive(Clone, Debug, Default)]
pub struct AxiomSample {
    pub theorems: Vec<Formula>,
    /// Formulas whose negation is a theorem.
    pub refutable: Vec<Formula>,
    pub equivalences: Vec<(Formula, Formula)>,
    /// Pairs `(a, b)` with `a -> b` a theorem.
    pub dominance: Vec<(Formula, Formula)>,
    /// Pairs for the exact `min`/`max` decomposition checks.
    pub pairs: Vec<(Formula, Formula)>,
}

/// How many instances of each kind [`AxiomSample::generate`] aims for.
#[derive(Clone, Copy, Debug)]
pub struct SampleCounts {
    pub theorems: usize,
    pub refutable: usize,
    pub equivalences: usize,
    pub dominance: usize,
    pub pairs: usize,
}

impl Default for SampleCounts {
    fn default() -> Self {
        SampleCounts { theorems: 20, refutable: 5, equivalences: 20, dominance: 50, pairs: 50 }
    }
}

type Template = fn(&Formula, &Formula, &Formula) -> Formula;
type PairTemplate = fn(&Formula, &Formula, &Formula) -> (Formula, Formula);

fn theorem_templates() -> Vec<Template> {
    use Formula as F;
    vec![
        |a, b, _| F::implies(a.clone(), F::implies(b.clone(), a.clone())),
        |a, b, c| {
            F::implies(
                F::implies(a.clone(), b.clone()),
                F::implies(F::implies(a.clone(), F::implies(b.clone(), c.clone())), F::implies(a.clone(), c.clone())),
            )
        },
        |a, b, _| F::implies(F::and(a.clone(), b.clone()), a.clone()),
        |a, b, _| F::implies(F::and(a.clone(), b.clone()), b.clone()),
        |a, b, _| F::implies(a.clone(), F::implies(b.clone(), F::and(a.clone(), b.clone()))),
        |a, b, _| F::implies(a.clone(), F::or(a.clone(), b.clone())),
        |a, b, _| F::implies(a.clone(), F::or(b.clone(), a.clone())),
        |a, b, c| {
            F::implies(
                F::implies(a.clone(), c.clone()),
                F::implies(F::implies(b.clone(), c.clone()), F::implies(F::or(a.clone(), b.clone()), c.clone())),
            )
        },
        |a, _, _| F::or(a.clone(), F::not(a.clone())),
        |a, _, _| F::implies(F::not(F::not(a.clone())), a.clone()),
        |a, _, _| F::implies(a.clone(), a.clone()),
    ]
}

fn equivalence_templates() -> Vec<PairTemplate> {
    use Formula as F;
    vec![
        |a, b, _| (F::and(a.clone(), b.clone()), F::and(b.clone(), a.clone())),
        |a, b, _| (F::or(a.clone(), b.clone()), F::or(b.clone(), a.clone())),
        |a, _, _| (a.clone(), F::and(a.clone(), a.clone())),
        |a, _, _| (a.clone(), F::or(a.clone(), a.clone())),
        |a, b, _| (F::or(a.clone(), b.clone()), F::implies(F::implies(a.clone(), b.clone()), b.clone())),
        |a, _, _| (a.clone(), F::not(F::not(a.clone()))),
        |a, b, c| (F::and(F::and(a.clone(), b.clone()), c.clone()), F::and(a.clone(), F::and(b.clone(), c.clone()))),
        |a, b, c| (F::implies(a.clone(), F::implies(b.clone(), c.clone())), F::implies(F::and(a.clone(), b.clone()), c.clone())),
    ]
}

fn dominance_templates() -> Vec<PairTemplate> {
    use Formula as F;
    vec![
        |a, b, _| (F::and(a.clone(), b.clone()), a.clone()),
        |a, b, _| (a.clone(), F::or(a.clone(), b.clone())),
        |a, _, _| (F::not(F::not(a.clone())), a.clone()),
        |a, b, _| (a.clone(), F::implies(b.clone(), a.clone())),
        |a, b, _| (F::and(a.clone(), F::implies(a.clone(), b.clone())), b.clone()),
        |a, b, c| (F::and(F::or(a.clone(), b.clone()), F::and(F::implies(a.clone(), c.clone()), F::implies(b.clone(), c.clone()))), c.clone()),
        |a, b, _| (a.clone(), F::or(b.clone(), F::not(b.clone()))),
    ]
}

fn refutable_templates() -> Vec<Template> {
    use Formula as F;
    vec![
        // contradiction with a well-behaved conjunct: false in every valuation
        |a, _, _| F::and(F::and(a.clone(), F::not(a.clone())), a.circ()),
        // negation of a theorem: its negation is a theorem under the strong c2
        |a, _, _| F::not(F::or(a.clone(), F::not(a.clone()))),
        |a, b, _| F::not(F::implies(a.clone(), F::implies(b.clone(), a.clone()))),
        |a, _, _| F::and(a.clone(), F::not(a.clone())),
    ]
}

impl AxiomSample {
    /// Classifies raw pairs: formulas that are theorems, refutable, equivalent
    /// or in the dominance relation are collected; every pair is used for the
    /// decomposition checks.
    pub fn classify(raw: &[(Formula, Formula)], backend: &Backend) -> Result<AxiomSample> {
        let mut out = AxiomSample::default();
        let mut seen = BTreeSet::new();
        for (a, b) in raw {
            for f in [a, b] {
                if seen.insert(f.clone()) {
                    if backend.valid(f)? {
                        out.theorems.push(f.clone());
                    }
                    if backend.valid(&f.negated())? {
                        out.refutable.push(f.clone());
                    }
                }
            }
            if backend.equivalent(a, b)? {
                out.equivalences.push((a.clone(), b.clone()));
            }
            if backend.valid(&Formula::implies(a.clone(), b.clone()))? {
                out.dominance.push((a.clone(), b.clone()));
            }
            if backend.valid(&Formula::implies(b.clone(), a.clone()))? {
                out.dominance.push((b.clone(), a.clone()));
            }
            out.pairs.push((a.clone(), b.clone()));
        }
        Ok(out)
    }

    /// Seeded instances over `gen`'s atoms: schema instances confirmed by the
    /// backend plus random pairs.
    pub fn generate(gen: &FormulaGen, backend: &Backend, counts: SampleCounts, rng: &mut SampleRng) -> Result<AxiomSample> {
        let mut out = AxiomSample::default();
        let attempts = |n: usize| 40 * n + 40;
        let draw = |rng: &mut SampleRng| (gen.generate(rng), gen.generate(rng), gen.generate(rng));

        let templates = theorem_templates();
        for _ in 0..attempts(counts.theorems) {
            if out.theorems.len() >= counts.theorems {
                break;
            }
            let (a, b, c) = draw(rng);
            let f = templates[rng.gen_range(0..templates.len())](&a, &b, &c);
            if !out.theorems.contains(&f) && backend.valid(&f)? {
                out.theorems.push(f);
            }
        }
        let templates = refutable_templates();
        for _ in 0..attempts(counts.refutable) {
            if out.refutable.len() >= counts.refutable {
                break;
            }
            let (a, b, c) = draw(rng);
            let f = templates[rng.gen_range(0..templates.len())](&a, &b, &c);
            if !out.refutable.contains(&f) && backend.valid(&f.negated())? {
                out.refutable.push(f);
            }
        }
        let templates = equivalence_templates();
        for _ in 0..attempts(counts.equivalences) {
            if out.equivalences.len() >= counts.equivalences {
                break;
            }
            let (a, b, c) = draw(rng);
            let pair = templates[rng.gen_range(0..templates.len())](&a, &b, &c);
            if !out.equivalences.contains(&pair) && backend.equivalent(&pair.0, &pair.1)? {
                out.equivalences.push(pair);
            }
        }
        let templates = dominance_templates();
        for _ in 0..attempts(counts.dominance) {
            if out.dominance.len() >= counts.dominance {
                break;
            }
            let (a, b, c) = draw(rng);
            let pair = templates[rng.gen_range(0..templates.len())](&a, &b, &c);
            if !out.dominance.contains(&pair) && backend.valid(&Formula::implies(pair.0.clone(), pair.1.clone()))? {
                out.dominance.push(pair);
            }
        }
        out.pairs = (0..counts.pairs).map(|_| gen.pair(rng)).collect();
        Ok(out)
    }

    /// Every formula a map must be defined on for the necessity checks.
    pub fn necessity_queries(&self) -> Vec<Formula> {
        let mut out = BTreeSet::new();
        out.extend(self.theorems.iter().cloned());
        for (a, b) in self.equivalences.iter().chain(&self.dominance) {
            out.insert(a.clone());
            out.insert(b.clone());
        }
        for (a, b) in &self.pairs {
            out.insert(a.clone());
            out.insert(b.clone());
            out.insert(Formula::and(a.clone(), b.clone()));
        }
        out.into_iter().collect()
    }

    /// Every formula a map must be defined on for the possibility checks.
    pub fn possibility_queries(&self) -> Vec<Formula> {
        let mut out = BTreeSet::new();
        out.extend(self.refutable.iter().cloned());
        for (a, b) in self.equivalences.iter().chain(&self.dominance) {
            out.insert(a.clone());
            out.insert(b.clone());
        }
        for (a, b) in &self.pairs {
            out.insert(a.clone());
            out.insert(b.clone());
            out.insert(Formula::or(a.clone(), b.clone()));
        }
        out.into_iter().collect()
    }
}

/// Outcome of one axiom over its sampled instances.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomLine {
    pub name: &'static str,
    pub checked: usize,
    pub failed: usize,
    pub witness: Option<String>,
}

impl AxiomLine {
    fn new(name: &'static str) -> Self {
        AxiomLine { name, checked: 0, failed: 0, witness: None }
    }

    fn record(&mut self, ok: bool, witness: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failed += 1;
            if self.witness.is_none() {
                self.witness = Some(witness());
            }
        }
    }

    pub fn passed(&self) -> bool {
        self.failed == 0
    }
}

impl fmt::Display for AxiomLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.witness {
            None => write!(f, "AXIOM {}: PASS", self.name),
            Some(w) => write!(f, "AXIOM {}: FAIL witness={w}", self.name),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomReport {
    pub lines: Vec<AxiomLine>,
}

impl AxiomReport {
    pub fn line(&self, name: &str) -> Option<&AxiomLine> {
        self.lines.iter().find(|l| l.name == name)
    }

    pub fn passed(&self, name: &str) -> bool {
        self.line(name).is_some_and(AxiomLine::passed)
    }

    pub fn all_passed(&self) -> bool {
        self.lines.iter().all(AxiomLine::passed)
    }
}

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for line in &self.lines {
            writeln!(f, "{line}")?;
        }
        Ok(())
    }
}

fn pair_witness(a: &Formula, b: &Formula) -> String {
    format!("{a}; {b}")
}

/// Taut, Eq, Conj and Dom over the sampled instances.
pub fn check_necessity_axioms(m: &GradedMap, backend: &Backend, sample: &AxiomSample) -> Result<AxiomReport> {
    let mut taut = AxiomLine::new("Taut");
    for f in &sample.theorems {
        if backend.valid(f)? {
            taut.record(m.get(f).is_one(), || f.render());
        }
    }
    let mut eq = AxiomLine::new("Eq");
    for (a, b) in &sample.equivalences {
        if backend.equivalent(a, b)? {
            eq.record(m.get(a) == m.get(b), || pair_witness(a, b));
        }
    }
    let mut conj = AxiomLine::new("Conj");
    for (a, b) in &sample.pairs {
        let both = Formula::and(a.clone(), b.clone());
        conj.record(m.get(&both) == m.get(a).min(m.get(b)), || pair_witness(a, b));
    }
    let mut dom = AxiomLine::new("Dom");
    for (a, b) in &sample.dominance {
        if backend.valid(&Formula::implies(a.clone(), b.clone()))? {
            dom.record(m.get(a) <= m.get(b), || pair_witness(a, b));
        }
    }
    Ok(AxiomReport { lines: vec![taut, eq, conj, dom] })
}

/// Contr, Eq_Pi, Disj and Dom_Pi over the sampled instances.
pub fn check_possibility_axioms(m: &GradedMap, backend: &Backend, sample: &AxiomSample) -> Result<AxiomReport> {
    let mut contr = AxiomLine::new("Contr");
    for f in &sample.refutable {
        if backend.valid(&f.negated())? {
            contr.record(m.get(f).is_zero(), || f.render());
        }
    }
    let mut eq = AxiomLine::new("Eq_Pi");
    for (a, b) in &sample.equivalences {
        if backend.equivalent(a, b)? {
            eq.record(m.get(a) == m.get(b), || pair_witness(a, b));
        }
    }
    let mut disj = AxiomLine::new("Disj");
    for (a, b) in &sample.pairs {
        let either = Formula::or(a.clone(), b.clone());
        disj.record(m.get(&either) == m.get(a).max(m.get(b)), || pair_witness(a, b));
    }
    let mut dom = AxiomLine::new("Dom_Pi");
    for (a, b) in &sample.dominance {
        if backend.valid(&Formula::implies(a.clone(), b.clone()))? {
            dom.record(m.get(a) <= m.get(b), || pair_witness(a, b));
        }
    }
    Ok(AxiomReport { lines: vec![contr, eq, disj, dom] })
}

/// A relation on a finite carrier, stored as `geq[i][j] <=> carrier[i] >= carrier[j]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Preorder {
    carrier: Vec<Formula>,
    index: HashMap<Formula, usize>,
    geq: Vec<Vec<bool>>,
}

impl Preorder {
    pub fn from_fn(carrier: Vec<Formula>, mut geq: impl FnMut(&Formula, &Formula) -> bool) -> Self {
        let table = carrier.iter().map(|a| carrier.iter().map(|b| geq(a, b)).collect()).collect();
        let index = carrier.iter().enumerate().map(|(i, f)| (f.clone(), i)).collect();
        Preorder { carrier, index, geq: table }
    }

    pub fn carrier(&self) -> &[Formula] {
        &self.carrier
    }

    pub fn geq(&self, a: &Formula, b: &Formula) -> Option<bool> {
        Some(self.geq[*self.index.get(a)?][*self.index.get(b)?])
    }

    /// `a >= b` and `b >= a`.
    pub fn equivalent(&self, a: &Formula, b: &Formula) -> Option<bool> {
        Some(self.geq(a, b)? && self.geq(b, a)?)
    }
}

/// The relation agreeing strictly with `m` on `carrier`.
pub fn induced_ordering(m: &GradedMap, carrier: &[Formula]) -> Result<Preorder> {
    let mut values = HashMap::new();
    for f in carrier {
        values.insert(f.clone(), m.entry(f).ok_or_else(|| Error::MissingEntry(f.clone()))?);
    }
    Ok(Preorder::from_fn(carrier.to_vec(), |a, b| values[a] >= values[b]))
}

/// Transitivity, dominance and conjunctiveness over the whole carrier.
pub fn check_ordering_axioms(rel: &Preorder, backend: &Backend) -> Result<AxiomReport> {
    let carrier = rel.carrier();
    let n = carrier.len();
    let mut trans = AxiomLine::new("Transitivity");
    for i in 0..n {
        for j in 0..n {
            if !rel.geq[i][j] {
                continue;
            }
            for k in 0..n {
                if rel.geq[j][k] {
                    trans.record(rel.geq[i][k], || {
                        format!("{} >= {} >= {}", carrier[i], carrier[j], carrier[k])
                    });
                }
            }
        }
    }
    let mut dom = AxiomLine::new("Dominance");
    for a in carrier {
        for b in carrier {
            if backend.valid(&Formula::implies(a.clone(), b.clone()))? {
                dom.record(rel.geq(b, a) == Some(true), || pair_witness(a, b));
            }
        }
    }
    let mut conj = AxiomLine::new("Conjunctiveness");
    for a in carrier {
        for b in carrier {
            let both = Formula::and(a.clone(), b.clone());
            if rel.index.contains_key(&both) {
                let ok = rel.equivalent(&both, a) == Some(true) || rel.equivalent(&both, b) == Some(true);
                conj.record(ok, || pair_witness(a, b));
            }
        }
    }
    Ok(AxiomReport { lines: vec![trans, dom, conj] })
}

/// Carrier for ordering checks: `formulas` closed under the conjunctions of
/// the given pairs.
pub fn conjunction_closed_carrier(formulas: &[Formula], pairs: &[(Formula, Formula)]) -> Vec<Formula> {
    let mut out: BTreeSet<Formula> = formulas.iter().cloned().collect();
    for (a, b) in pairs {
        out.insert(a.clone());
        out.insert(b.clone());
        out.insert(Formula::and(a.clone(), b.clone()));
    }
    out.into_iter().collect()
}

/// Atoms of every formula that must be readable in a universe for `queries`
/// and their negations.
pub fn universe_atoms(queries: &[Formula]) -> BTreeSet<String> {
    atoms_of(queries)
}
