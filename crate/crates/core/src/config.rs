//! Logic selection and resource bounds shared by every backend.

use std::fmt;
use std::str::FromStr;

use crate::c1;
use crate::classical;
use crate::error::{Error, Result};
use crate::formula::Formula;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Config {
    /// Largest atom count classical enumeration will attempt.
    pub max_atoms: usize,
    /// Largest evaluation set the C1 search will build.
    pub max_evalset: usize,
    /// Use the one-directional double-negation condition
    /// (`v(!!f) = 1` implies `v(f) = 1`) instead of the biconditional.
    pub weak_negation: bool,
    /// Largest depth accepted by the bounded Hilbert search.
    pub max_derivation_depth: usize,
}

impl Default for Config {
    fn default() -> Self {
        Config { max_atoms: 20, max_evalset: 64, weak_negation: false, max_derivation_depth: 4 }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Logic {
    Classical,
    C1,
}

impl Logic {
    pub fn name(self) -> &'static str {
        match self {
            Logic::Classical => "classical",
            Logic::C1 => "c1",
        }
    }
}

impl fmt::Display for Logic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Logic {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "classical" => Ok(Logic::Classical),
            "c1" | "C1" => Ok(Logic::C1),
            other => Err(Error::Parse(crate::error::ParseError::new(format!("unknown logic `{other}`"), 1, 1))),
        }
    }
}

/// A logic together with the bounds its decision procedure runs under.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Backend {
    pub logic: Logic,
    pub config: Config,
}

impl Backend {
    pub fn new(logic: Logic, config: Config) -> Self {
        Backend { logic, config }
    }

    pub fn classical() -> Self {
        Backend::new(Logic::Classical, Config::default())
    }

    pub fn c1() -> Self {
        Backend::new(Logic::C1, Config::default())
    }

    pub fn with_config(mut self, config: Config) -> Self {
        self.config = config;
        self
    }

    pub fn entails(&self, premises: &[Formula], goal: &Formula) -> Result<bool> {
        match self.logic {
            Logic::Classical => classical::classical_entails(premises, goal, &self.config),
            Logic::C1 => c1::c1_entails(premises, goal, &self.config),
        }
    }

    pub fn valid(&self, goal: &Formula) -> Result<bool> {
        self.entails(&[], goal)
    }

    /// Validity of `a <-> b`, i.e. of both implications.
    pub fn equivalent(&self, a: &Formula, b: &Formula) -> Result<bool> {
        Ok(self.valid(&Formula::implies(a.clone(), b.clone()))? && self.valid(&Formula::implies(b.clone(), a.clone()))?)
    }
}
