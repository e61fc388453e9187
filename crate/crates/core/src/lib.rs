//! Possibility theory over classical propositional logic and the
//! paraconsistent logic C1.
//!
//! The crate is organised bottom-up:
//!
//! * [`formula`]: the propositional language, parser and printer;
//! * [`classical`] and [`c1`]: decision procedures for the two logics;
//! * [`possibility`]: graded maps, possibility distributions and the checks
//!   for necessity/possibility axioms and orderings;
//! * [`pkb`]: weighted knowledge bases and their minimum-specificity closure;
//! * [`defaults`]: ranked default rules and the filtered consequence relation.

pub mod c1;
pub mod classical;
pub mod config;
pub mod defaults;
pub mod error;
pub mod formula;
pub mod level;
pub mod pkb;
mod parser;
pub mod possibility;
pub mod sample;

pub use config::{Backend, Config, Logic};
pub use error::{Error, FileError, ParseError, Result};
pub use formula::{parse, Formula};
pub use level::Level;
