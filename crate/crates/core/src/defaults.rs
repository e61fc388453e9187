//! Default rules: tolerance ranking, rank-to-level conversion, and the
//! filtration that discards rules whose antecedent is not accepted.

use std::fmt;

use crate::classical::classical_satisfiable;
use crate::config::{Config, Logic};
use crate::error::{Error, FileError, Result};
use crate::formula::{parse, Formula};
use crate::level::Level;
use crate::pkb::{leading_space, strip_comment, PossibilisticKB};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DefaultRule {
    pub antecedent: Formula,
    pub consequent: Formula,
    pub material: Formula,
    pub rank_override: Option<Level>,
}

impl DefaultRule {
    pub fn new(antecedent: Formula, consequent: Formula) -> Self {
        let material = Formula::implies(antecedent.clone(), consequent.clone());
        DefaultRule { antecedent, consequent, material, rank_override: None }
    }

    pub fn with_override(mut self, level: Level) -> Self {
        self.rank_override = Some(level);
        self
    }
}

impl fmt::Display for DefaultRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} => {}", self.antecedent, self.consequent)?;
        if let Some(l) = self.rank_override {
            write!(f, " ; rank={l}")?;
        }
        Ok(())
    }
}

/// Tolerance partition: rank 0 holds every rule whose antecedent and
/// consequent are jointly satisfiable with all materials; the rest is ranked
/// recursively.
pub fn z_rank(rules: &[DefaultRule], config: &Config) -> Result<Vec<Vec<DefaultRule>>> {
    let mut remaining: Vec<DefaultRule> = rules.to_vec();
    let mut ranks = Vec::new();
    while !remaining.is_empty() {
        let materials: Vec<Formula> = remaining.iter().map(|r| r.material.clone()).collect();
        let mut tolerated = Vec::new();
        let mut rest = Vec::new();
        for rule in remaining {
            let mut set = materials.clone();
            set.push(Formula::and(rule.antecedent.clone(), rule.consequent.clone()));
            if classical_satisfiable(&set, config)?.is_some() {
                tolerated.push(rule);
            } else {
                rest.push(rule);
            }
        }
        if tolerated.is_empty() {
            return Err(Error::InconsistentDefaults(rest.iter().map(ToString::to_string).collect()));
        }
        ranks.push(tolerated);
        remaining = rest;
    }
    Ok(ranks)
}

fn check_inside(level: Level) -> Result<Level> {
    if level.is_zero() || level.is_one() {
        return Err(Error::LevelOutOfRange(format!("rule level {level} must lie strictly between 0 and 1")));
    }
    Ok(level)
}

/// Rank `k` of `m + 1` ranks maps to `(k + 1) / (m + 2)`; a rule's override
/// takes precedence.
pub fn ranks_to_levels(partition: &[Vec<DefaultRule>]) -> Result<Vec<(DefaultRule, Level)>> {
    let denom = partition.len() as i64 + 1;
    let mut out = Vec::new();
    for (k, rank) in partition.iter().enumerate() {
        for rule in rank {
            let level = match rule.rank_override {
                Some(l) => check_inside(l)?,
                None => Level::frac(k as i64 + 1, denom),
            };
            out.push((rule.clone(), level));
        }
    }
    Ok(out)
}

/// Facts (level 1) plus leveled rules; one stage of the filtration.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankedDefaults {
    pub facts: Vec<Formula>,
    pub rules: Vec<DefaultRule>,
    pub levels: Vec<Level>,
    pub config: Config,
}

impl RankedDefaults {
    /// Levels from the overrides when every rule has one, otherwise from the
    /// tolerance ranking (with per-rule overrides applied). Rules keep their
    /// input order.
    pub fn build(facts: Vec<Formula>, rules: Vec<DefaultRule>, config: Config) -> Result<RankedDefaults> {
        let levels = if rules.iter().all(|r| r.rank_override.is_some()) {
            rules.iter().map(|r| check_inside(r.rank_override.expect("checked"))).collect::<Result<Vec<_>>>()?
        } else {
            let leveled = ranks_to_levels(&z_rank(&rules, &config)?)?;
            rules
                .iter()
                .map(|r| leveled.iter().find(|(lr, _)| lr == r).map(|(_, l)| *l).expect("every rule is ranked"))
                .collect()
        };
        Ok(RankedDefaults { facts, rules, levels, config })
    }

    pub fn level_of(&self, rule: &DefaultRule) -> Option<Level> {
        self.rules.iter().position(|r| r == rule).map(|i| self.levels[i])
    }

    /// The C1 knowledge base of facts at 1 and rule materials at their levels.
    pub fn to_kb(&self) -> PossibilisticKB {
        let facts = self.facts.iter().map(|f| (f.clone(), Level::ONE));
        let rules = self.rules.iter().zip(&self.levels).map(|(r, l)| (r.material.clone(), *l));
        PossibilisticKB::from_items(Logic::C1, facts.chain(rules)).with_config(self.config.clone())
    }
}

/// Keeps the rules whose antecedent the current stage accepts. Every rule is
/// judged against the unmodified input stage.
pub fn g_step(current: &RankedDefaults) -> Result<RankedDefaults> {
    let kb = current.to_kb();
    let mut next = RankedDefaults { rules: Vec::new(), levels: Vec::new(), ..current.clone() };
    for (rule, level) in current.rules.iter().zip(&current.levels) {
        if kb.poss_entails(&rule.antecedent)? {
            next.rules.push(rule.clone());
            next.levels.push(*level);
        } else {
            log::debug!("dropping {rule}: antecedent not accepted");
        }
    }
    Ok(next)
}

/// Every stage from the initial one up to the first stable stage.
pub fn g_chain(initial: &RankedDefaults) -> Result<Vec<RankedDefaults>> {
    let mut chain = vec![initial.clone()];
    loop {
        let last = chain.last().expect("non-empty chain");
        let next = g_step(last)?;
        if next.rules.len() == last.rules.len() {
            return Ok(chain);
        }
        chain.push(next);
    }
}

pub fn g_fixpoint(initial: &RankedDefaults) -> Result<RankedDefaults> {
    Ok(g_chain(initial)?.pop().expect("non-empty chain"))
}

/// Paraconsistent acceptance over the stable stage.
pub fn default_entails(initial: &RankedDefaults, query: &Formula) -> Result<bool> {
    g_fixpoint(initial)?.to_kb().poss_entails(query)
}

/// Reads a defaults file: a `facts:` section with one formula per line and a
/// `rules:` section with `<antecedent> => <consequent> [; rank=<level>]`.
pub fn parse_defaults(text: &str) -> Result<(Vec<Formula>, Vec<DefaultRule>), FileError> {
    enum Section {
        None,
        Facts,
        Rules,
    }
    let mut section = Section::None;
    let mut facts = Vec::new();
    let mut rules = Vec::new();
    for (n, raw) in text.lines().enumerate() {
        let line_no = n + 1;
        let line = strip_comment(raw);
        let trimmed = line.trim();
        if trimmed.is_empty() {
            continue;
        }
        match trimmed {
            "facts:" => {
                section = Section::Facts;
                continue;
            }
            "rules:" => {
                section = Section::Rules;
                continue;
            }
            _ => {}
        }
        match section {
            Section::None => {
                return Err(FileError::new(line_no, leading_space(line) + 1, "expected `facts:` or `rules:`"));
            }
            Section::Facts => facts.push(parse(line).map_err(|e| FileError::from_parse(e, line_no, 1))?),
            Section::Rules => {
                let (body, rank) = match line.rfind(';') {
                    Some(i) => (&line[..i], Some((i, &line[i + 1..]))),
                    None => (line, None),
                };
                let arrow = body
                    .find("=>")
                    .ok_or_else(|| FileError::new(line_no, leading_space(line) + 1, "expected `<antecedent> => <consequent>`"))?;
                let antecedent = parse(&body[..arrow]).map_err(|e| FileError::from_parse(e, line_no, 1))?;
                let consequent =
                    parse(&body[arrow + 2..]).map_err(|e| FileError::from_parse(e, line_no, arrow + 3))?;
                let mut rule = DefaultRule::new(antecedent, consequent);
                if let Some((at, text)) = rank {
                    let column = at + 2 + leading_space(text);
                    let value = text
                        .trim()
                        .strip_prefix("rank=")
                        .ok_or_else(|| FileError::new(line_no, column, "expected `rank=<level>`"))?;
                    let level: Level = value.parse().map_err(|e: Error| FileError::new(line_no, column, e.to_string()))?;
                    rule = rule.with_override(level);
                }
                rules.push(rule);
            }
        }
    }
    Ok((facts, rules))
}
