//! Seeded generators for formulas and knowledge bases. Every checker that
//! samples goes through here so that a seed fully determines its output.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::formula::Formula;
use crate::level::Level;

pub type SampleRng = ChaCha8Rng;

pub fn rng(seed: u64) -> SampleRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random formulas of bounded depth over a fixed atom list.
#[derive(Clone, Debug)]
pub struct FormulaGen {
    atoms: Vec<String>,
    max_depth: usize,
}

impl FormulaGen {
    pub fn new<S: AsRef<str>>(atoms: &[S], max_depth: usize) -> Self {
        assert!(!atoms.is_empty(), "formula generator needs at least one atom");
        FormulaGen { atoms: atoms.iter().map(|a| a.as_ref().to_string()).collect(), max_depth }
    }

    pub fn atoms(&self) -> &[String] {
        &self.atoms
    }

    pub fn atom(&self, rng: &mut SampleRng) -> Formula {
        Formula::atom(self.atoms.choose(rng).expect("non-empty").clone())
    }

    pub fn generate(&self, rng: &mut SampleRng) -> Formula {
        self.with_depth(rng, self.max_depth)
    }

    pub fn with_depth(&self, rng: &mut SampleRng, depth: usize) -> Formula {
        if depth == 0 || rng.gen_bool(0.3) {
            return self.atom(rng);
        }
        match rng.gen_range(0..4) {
            0 => Formula::not(self.with_depth(rng, depth - 1)),
            1 => Formula::and(self.with_depth(rng, depth - 1), self.with_depth(rng, depth - 1)),
            2 => Formula::or(self.with_depth(rng, depth - 1), self.with_depth(rng, depth - 1)),
            _ => Formula::implies(self.with_depth(rng, depth - 1), self.with_depth(rng, depth - 1)),
        }
    }

    pub fn pair(&self, rng: &mut SampleRng) -> (Formula, Formula) {
        (self.generate(rng), self.generate(rng))
    }
}

/// Picks one of `levels` uniformly.
pub fn level_from(rng: &mut SampleRng, levels: &[Level]) -> Level {
    *levels.choose(rng).expect("non-empty level list")
}

/// The quarter grid `{1/4, 1/2, 3/4, 1}`.
pub fn quarter_levels() -> Vec<Level> {
    vec![Level::frac(1, 4), Level::frac(1, 2), Level::frac(3, 4), Level::ONE]
}
